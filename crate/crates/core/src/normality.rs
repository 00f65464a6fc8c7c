//! Levi supports, fundamental groups and normality verdicts at special
//! level; the classification generator; type-A Iwahori orbits.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Letter;
use crate::dominance::{self, leq, minuscule_classes, shift_weights, DEFAULT_HEIGHT_CAP, DEFAULT_NODE_CAP};
use crate::error::{Error, Result};
use crate::group::{format_weights, Class, Group};
use crate::lattice::{smith, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Normal,
    NonNormal,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi1_order: Option<i64>,
    /// 1-based échelonnage simple indices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn new(status: Status, provenance: &str) -> Self {
        Verdict { status, provenance: provenance.to_string(), pi1_order: None, support: None, witness: None }
    }

    pub fn unknown() -> Self {
        Verdict::new(Status::Unknown, "undecided")
    }

    pub fn with_support(mut self, support: &[usize], order: i64) -> Self {
        self.support = Some(support.iter().map(|i| i + 1).collect());
        self.pi1_order = Some(order);
        self
    }

    pub fn with_witness(mut self, w: String) -> Self {
        self.witness = Some(w);
        self
    }
}

pub mod rule {
    pub const CRITERION: &str = "criterion: char does not divide #pi1(M^der)";
    pub const CRITERION_NECESSARY: &str = "criterion necessity at absolutely special level";
    pub const PAPPAS_RAPOPORT: &str = "Pappas–Rapoport: char does not divide #pi1(G^der)";
    pub const CHAR_ZERO: &str = "characteristic zero";
    pub const ODD_UNITARY: &str = "odd unitary group at the special, not absolutely special vertex";
    pub const TYPE_A_GRASSMANNIAN: &str = "type A Iwahori orbits in the affine Grassmannian";
    pub const ISOGENY: &str = "central isogeny transfer";
    pub const PRODUCT: &str = "product decomposition";
}

/// `#pi_1(M_S^der)`: the index of the lattice spanned by the absolute simple
/// coroots over `S` in its saturation inside `X_*(T)`.
pub fn pi1_order(g: &Group, support: &[usize]) -> i64 {
    let idx = g.absolute_indices(support);
    if idx.is_empty() {
        return 1;
    }
    let cols: Vec<Vec<i64>> = idx.iter().map(|&j| g.datum.coroots[j].clone()).collect();
    smith(&Matrix::from_cols(g.dim(), &cols)).index()
}

/// `#pi_1(G^der)`.
pub fn pi1_der_order(g: &Group) -> i64 {
    pi1_order(g, &(0..g.rank()).collect::<Vec<_>>())
}

/// The standard Levi attached to a dominant class, as its support.
pub fn levi_of(g: &Group, mu: &Class) -> Result<Vec<usize>> {
    dominance::support(g, mu)
}

fn divides(p: u64, n: i64) -> bool {
    p != 0 && n % p as i64 == 0
}

/// Whether the criterion `char ∤ #pi_1(M^der)` holds, with the support and order.
pub fn criterion(g: &Group, mu: &Class) -> Result<(bool, Vec<usize>, i64)> {
    let s = levi_of(g, mu)?;
    let ord = pi1_order(g, &s);
    Ok((!divides(g.p, ord), s, ord))
}

/// Verdict at an absolutely special vertex.
pub fn verdict_abs_special(g: &Group, mu: &Class) -> Result<Verdict> {
    g.check(mu)?;
    if !g.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    let (ok, s, ord) = criterion(g, mu)?;
    if g.p == 0 {
        return Ok(Verdict::new(Status::Normal, rule::CHAR_ZERO).with_support(&s, ord));
    }
    if !divides(g.p, pi1_der_order(g)) {
        return Ok(Verdict::new(Status::Normal, rule::PAPPAS_RAPOPORT).with_support(&s, ord));
    }
    if ok {
        return Ok(Verdict::new(Status::Normal, rule::CRITERION).with_support(&s, ord));
    }
    let la = dominance::minuscule_below(g, mu)?;
    let w = format!(
        "{} + qm(M) <= {} with M on {:?}",
        format_weights(&g.weights(&la)),
        format_weights(&g.weights(mu)),
        s.iter().map(|i| i + 1).collect::<Vec<_>>()
    );
    Ok(Verdict::new(Status::NonNormal, rule::CRITERION_NECESSARY).with_support(&s, ord).with_witness(w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    AbsolutelySpecial,
    SpecialOnly,
}

/// For `PU_{2n+1}`, the rank `n` of the échelonnage system.
pub fn odd_unitary_rank(g: &Group) -> Option<usize> {
    (g.factors.len() == 1
        && g.factors[0].twist_order == 2
        && g.factors[0].abs_type.letter == Letter::A
        && g.factors[0].abs_type.rank % 2 == 0)
        .then(|| g.factors[0].abs_type.rank / 2)
}

/// Échelonnage weights of the smallest class known to give a non-normal
/// Schubert variety at the special, not absolutely special vertex of
/// `PU_{2n+1}`.
pub fn odd_unitary_threshold(n: usize) -> Vec<i64> {
    if n == 1 {
        vec![4]
    } else {
        let mut w = vec![0; n];
        w[0] = 1;
        w[n - 1] = 2;
        w
    }
}

/// Verdict at a special vertex of the given kind.
pub fn verdict_special(g: &Group, mu: &Class, kind: VertexKind) -> Result<Verdict> {
    let v = verdict_abs_special(g, mu)?;
    if v.status == Status::Normal || kind == VertexKind::AbsolutelySpecial {
        return Ok(v);
    }
    let (s, ord) = (
        v.support.clone().unwrap_or_default().iter().map(|i| i - 1).collect::<Vec<_>>(),
        v.pi1_order.unwrap_or(1),
    );
    let Some(n) = odd_unitary_rank(g) else { return Ok(Verdict::unknown().with_support(&s, ord)) };
    let ad = g.adjoint();
    let m = g.adjoint_image(mu);
    if m == dominance::factorwise_qm(ad) {
        return Ok(Verdict::new(Status::Normal, rule::ODD_UNITARY).with_support(&s, ord));
    }
    let t = ad.class_with_weights(&odd_unitary_threshold(n)).expect("threshold is realizable");
    if leq(ad, &t, &m)? {
        let w = format!("{} >= {}", format_weights(&ad.weights(&m)), format_weights(&ad.weights(&t)));
        return Ok(Verdict::new(Status::NonNormal, rule::ODD_UNITARY).with_support(&s, ord).with_witness(w));
    }
    Ok(Verdict::unknown().with_support(&s, ord))
}

/// One row of a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "weights", rename_all = "snake_case")]
pub enum Family {
    /// Every class of the component.
    All,
    /// The minuscule class of the component.
    Minuscule(Vec<i64>),
    /// A single class.
    Element(Vec<i64>),
    /// All classes below the given one.
    AtMost(Vec<i64>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::All => write!(f, "all"),
            Family::Minuscule(w) => write!(f, "{} (minuscule)", format_weights(w)),
            Family::Element(w) => write!(f, "{}", format_weights(w)),
            Family::AtMost(w) => write!(f, "<= {}", format_weights(w)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentClassification {
    pub index: usize,
    /// Weights of the minuscule class of the component.
    pub minuscule: Vec<i64>,
    pub families: Vec<Family>,
    /// Weights of every normal class (empty when all are normal).
    pub normal: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub group: String,
    pub p: u64,
    pub all_normal: bool,
    pub provenance: String,
    pub components: Vec<ComponentClassification>,
}

impl Classification {
    /// The classes described by a component's families, expanded (not
    /// meaningful when all classes are normal).
    pub fn expand(&self, g: &Group, k: usize) -> Result<BTreeSet<Vec<i64>>> {
        let ad = g.adjoint();
        let mut out = BTreeSet::new();
        for f in &self.components[k].families {
            match f {
                Family::All => {}
                Family::Minuscule(w) | Family::Element(w) => {
                    out.insert(w.clone());
                }
                Family::AtMost(w) => {
                    let c = ad.class_with_weights(w).ok_or_else(|| Error::NotRealizable(format_weights(w)))?;
                    for d in dominance::down_set(ad, &c, i64::MAX)? {
                        out.insert(ad.weights(&d));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Dominant weights `nu` of the adjoint group in the component of the
/// minuscule `lambda` with `nu` not above `lambda + qm`.
fn candidates(ad: &Group, la: &[i64]) -> Vec<Vec<i64>> {
    let r = la.len();
    let q = dominance::factorwise_qm_coefficients(ad);
    let ct = Matrix::from_rows(&ad.system.cartan).transpose();
    let inv = crate::lattice::rational_inverse(&ct).expect("Cartan matrix is invertible");
    let den = inv.iter().flatten().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let m: Vec<Vec<i64>> = inv.iter().map(|row| row.iter().map(|x| (*x * den).to_integer()).collect()).collect();
    let cl: Vec<i64> = (0..r).map(|i| (0..r).map(|j| m[i][j] * la[j]).sum()).collect();
    let mut out = BTreeSet::new();
    for i in 0..r {
        // sum_j m[i][j] nu_j <= den (q_i - 1) + cl_i
        let bound = den * (q[i] - 1) + cl[i];
        let mut cur = vec![0; r];
        enumerate_bounded(&m[i], bound, 0, &mut cur, &mut |nu| {
            let d: Vec<i64> = nu.iter().zip(la).map(|(a, b)| a - b).collect();
            if let Some(c) = dominance::solve_coefficients(ad, &d) {
                if c.iter().all(|&x| x >= 0) {
                    out.insert(nu.to_vec());
                }
            }
        });
    }
    out.into_iter().collect()
}

fn enumerate_bounded(coef: &[i64], left: i64, i: usize, cur: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if left < 0 {
        return;
    }
    if i == coef.len() {
        f(cur);
        return;
    }
    let mut k = 0;
    while coef[i] * k <= left {
        cur[i] = k;
        enumerate_bounded(coef, left - coef[i] * k, i + 1, cur, f);
        k += 1;
    }
    cur[i] = 0;
}

/// Normal Schubert varieties at absolutely special level, per component of
/// the adjoint group, for an absolutely almost simple group.
pub fn classify(g: &Group) -> Result<Classification> {
    if g.factors.len() != 1 {
        return Err(Error::NotAlmostSimple(g.name()));
    }
    let ad = g.adjoint();
    let mins = minuscule_classes(ad);
    let all_normal = !divides(g.p, pi1_der_order(g));
    let provenance = if g.p == 0 {
        rule::CHAR_ZERO
    } else if all_normal {
        rule::PAPPAS_RAPOPORT
    } else {
        rule::CRITERION
    };
    let mut components = Vec::new();
    for (k, la) in mins.iter().enumerate() {
        let wl = ad.weights(la);
        if all_normal {
            components.push(ComponentClassification { index: k, minuscule: wl, families: vec![Family::All], normal: vec![] });
            continue;
        }
        let mut normal = Vec::new();
        for nu in candidates(ad, &wl) {
            let d: Vec<i64> = nu.iter().zip(&wl).map(|(a, b)| a - b).collect();
            let c = dominance::solve_coefficients(ad, &d).expect("candidate in component");
            let s: Vec<usize> = (0..c.len()).filter(|&i| c[i] > 0).collect();
            if !divides(g.p, pi1_order(g, &s)) {
                normal.push(nu);
            }
        }
        let families = families(ad, &wl, &normal)?;
        components.push(ComponentClassification { index: k, minuscule: wl, families, normal });
    }
    Ok(Classification { group: g.name(), p: g.p, all_normal, provenance: provenance.into(), components })
}

/// Compresses a normal set into principal down-sets and single elements.
fn families(ad: &Group, la: &[i64], normal: &[Vec<i64>]) -> Result<Vec<Family>> {
    let set: BTreeSet<Vec<i64>> = normal.iter().cloned().collect();
    let cls = |w: &Vec<i64>| ad.class_with_weights(w).expect("realizable");
    let mut rest: Vec<Vec<i64>> = normal.iter().filter(|w| w.as_slice() != la).cloned().collect();
    rest.sort_by_key(|w| std::cmp::Reverse(ad.system.height_pairing(w)));
    let mut covered: BTreeSet<Vec<i64>> = BTreeSet::from([la.to_vec()]);
    let mut out = vec![Family::Minuscule(la.to_vec())];
    let mut singles = Vec::new();
    for w in &rest {
        if covered.contains(w) {
            continue;
        }
        let down: Vec<Vec<i64>> =
            dominance::down_set(ad, &cls(w), i64::MAX)?.iter().map(|c| ad.weights(c)).collect();
        let proper: Vec<&Vec<i64>> = down.iter().filter(|d| *d != w && *d != la).collect();
        if !proper.is_empty() && down.iter().all(|d| set.contains(d)) {
            covered.extend(down.iter().cloned());
            out.push(Family::AtMost(w.clone()));
        } else {
            singles.push(w.clone());
        }
    }
    for w in singles {
        if !covered.contains(&w) {
            out.push(Family::Element(w));
        }
    }
    let mut tail = out.split_off(1);
    tail.sort_by_key(|f| match f {
        Family::AtMost(w) | Family::Element(w) => (ad.system.height_pairing(w), std::cmp::Reverse(w.clone())),
        _ => (0, std::cmp::Reverse(vec![])),
    });
    out.extend(tail);
    Ok(out)
}

/// Whether some (equivalently every) component has only finitely many
/// normal Schubert varieties.
pub fn finitely_many_normal(g: &Group) -> bool {
    g.p != 0
        && g.system.blocks.iter().all(|(t, off)| divides(g.p, pi1_order(g, &(*off..off + t.rank).collect::<Vec<_>>())))
}

/// Conjunction of the verdicts of the factors of a product.
pub fn product_verdict(parts: &[Verdict]) -> Verdict {
    if parts.iter().any(|v| v.status == Status::NonNormal) {
        Verdict::new(Status::NonNormal, rule::PRODUCT)
    } else if parts.iter().all(|v| v.status == Status::Normal) {
        Verdict::new(Status::Normal, rule::PRODUCT)
    } else {
        Verdict::unknown()
    }
}

/// Transfers a verdict from an isogenous group. Applies when the
/// derived group of the source maps étale onto the adjoint group, or when
/// the target variety is normal.
pub fn verdict_transfer(source: &Group, target: &Group, mu: &Class) -> Result<Verdict> {
    let same = source.adjoint().spec().factors == target.adjoint().spec().factors && source.p == target.p;
    if !same {
        return Err(Error::NoRelation);
    }
    source.check(mu)?;
    let w = source.adjoint().weights(&source.adjoint_image(mu));
    let image = target.class_with_weights(&w).ok_or(Error::NoRelation)?;
    let tv = verdict_abs_special(target, &image)?;
    let connection: i64 = source.factors.iter().map(|f| f.abs_type.connection_index()).product();
    let kernel = connection / pi1_der_order(source);
    if !divides(source.p, kernel) || (tv.status == Status::Normal && target.is_adjoint()) {
        let mut v = tv;
        v.provenance = format!("{}; {}", rule::ISOGENY, v.provenance);
        return Ok(v);
    }
    Ok(Verdict::unknown())
}

fn require_split_a(g: &Group) -> Result<usize> {
    match g.factors.as_slice() {
        [f] if f.abs_type.letter == Letter::A && f.twist_order == 1 => Ok(f.abs_type.rank),
        _ => Err(Error::WrongType(format!("{} is not a split group of type A", g.name()))),
    }
}

/// One application of `w_0` (or its inverse for negative `k`) to a
/// cocharacter of `GL_{n+1}`: `(mu_0, ..., mu_n) -> (mu_1, ..., mu_n, mu_0 + 1)`.
pub fn omega_translate_type_a(mu: &[i64], k: i64) -> Vec<i64> {
    let mut v = mu.to_vec();
    let n1 = v.len();
    for _ in 0..k.abs() {
        if k > 0 {
            let first = v[0];
            v.rotate_left(1);
            v[n1 - 1] = first + 1;
        } else {
            let last = v[n1 - 1];
            v.rotate_right(1);
            v[0] = last - 1;
        }
    }
    v
}

/// Weights of a cocharacter of `GL_{n+1}` in the adjoint group.
pub fn epsilon_to_weights(mu: &[i64]) -> Vec<i64> {
    mu.windows(2).map(|w| w[0] - w[1]).collect()
}

/// A representative in `Z^{n+1}` with coordinate sum in `[0, n]`.
pub fn weights_to_epsilon(w: &[i64]) -> Vec<i64> {
    let n1 = w.len() + 1;
    let mut v = vec![0; n1];
    for i in (0..n1 - 1).rev() {
        v[i] = v[i + 1] + w[i];
    }
    let s: i64 = v.iter().sum();
    let shift = s.div_euclid(n1 as i64);
    v.iter().map(|x| x - shift).collect()
}

/// The trichotomy for Iwahori orbits in the affine Grassmannian of
/// `PGL_{n+1}`, for any component (translated to the neutral one).
pub fn type_a_iwahori_grassmannian(g: &Group, mu: &[i64]) -> Result<Verdict> {
    let n = require_split_a(g)?;
    if mu.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: mu.len() });
    }
    if g.p == 0 || (n as u64 + 1) % g.p != 0 {
        return Ok(Verdict::new(Status::Normal, rule::PAPPAS_RAPOPORT));
    }
    let n1 = n as i64 + 1;
    let s: i64 = mu.iter().sum();
    let mut v = omega_translate_type_a(mu, (-s).rem_euclid(n1));
    let shift = v.iter().sum::<i64>() / n1;
    for x in &mut v {
        *x -= shift;
    }
    let ad = g.adjoint();
    let cls = |e: &[i64]| ad.class_with_weights(&epsilon_to_weights(e)).expect("adjoint");
    let x = cls(&v);
    let mut low = vec![1; n + 1];
    low[0] = -(n as i64);
    let mut high = vec![-1; n + 1];
    high[n] = n as i64;
    let mut qm = vec![0; n + 1];
    qm[0] = 1;
    qm[n] = -1;
    let bh = |a: &Class, b: &Class| dominance::besson_hong_leq(ad, a, b, DEFAULT_NODE_CAP);
    if bh(&x, &cls(&low))? || bh(&x, &cls(&high))? {
        return Ok(Verdict::new(Status::Normal, rule::TYPE_A_GRASSMANNIAN));
    }
    if bh(&cls(&qm), &x)? {
        return Ok(Verdict::new(Status::NonNormal, rule::TYPE_A_GRASSMANNIAN));
    }
    Ok(Verdict::unknown())
}

/// `<2 rho, mu - la>`, the dimension of a Schubert variety minus that of a
/// smaller one.
pub fn schubert_dimension(g: &Group, mu: &Class, la: &Class) -> Result<i64> {
    if !leq(g, la, mu)? {
        return Err(Error::NotComparable);
    }
    Ok(g.height(mu) - g.height(la))
}

/// Weights obtained from `base` by adding `c` simple coroots.
pub fn raise(g: &Group, base: &[i64], c: &[i64]) -> Vec<i64> {
    let neg: Vec<i64> = c.iter().map(|x| -x).collect();
    shift_weights(g, base, &neg)
}

/// Height bound used by [`classify`] for sanity checks.
pub const CLASSIFY_HEIGHT_CAP: i64 = DEFAULT_HEIGHT_CAP;
