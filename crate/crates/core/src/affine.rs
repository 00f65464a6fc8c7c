//! Iwahori–Weyl groups of small rank: length, Bruhat order, double cosets
//! and verdicts for Schubert varieties in partial affine flag varieties.
//!
//! Elements act on the échelonnage weight space as `x -> w x + t`; the base
//! alcove is `-1 < beta < 0` for all positive roots `beta`.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cartan::RootSystem;
use crate::dominance::{compositions, minuscule_classes, shift_weights, DEFAULT_NODE_CAP};
use crate::error::{Error, Result};
use crate::group::{Class, Group};
use crate::lattice::{hermite, in_lattice, Matrix};
use crate::normality::{self, rule, Status, Verdict, VertexKind};

/// Largest supported échelonnage rank.
pub const MAX_RANK: usize = 3;
/// Default bound on lengths in Bruhat comparisons.
pub const DEFAULT_LENGTH_CAP: usize = 14;

/// An element `x -> w x + t` of the Iwahori–Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffElem {
    pub t: Vec<i64>,
    /// Row-major linear part acting on weights.
    pub w: Vec<i64>,
}

impl AffElem {
    fn identity(r: usize) -> Self {
        let mut w = vec![0; r * r];
        for i in 0..r {
            w[i * r + i] = 1;
        }
        AffElem { t: vec![0; r], w }
    }

    fn rank(&self) -> usize {
        self.t.len()
    }

    fn apply_linear(&self, v: &[i64]) -> Vec<i64> {
        let r = self.rank();
        (0..r).map(|j| (0..r).map(|k| self.w[j * r + k] * v[k]).sum()).collect()
    }

    pub fn mul(&self, o: &AffElem) -> AffElem {
        let r = self.rank();
        let wt = self.apply_linear(&o.t);
        let t = self.t.iter().zip(&wt).map(|(a, b)| a + b).collect();
        let mut w = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                w[i * r + j] = (0..r).map(|k| self.w[i * r + k] * o.w[k * r + j]).sum();
            }
        }
        AffElem { t, w }
    }

    pub fn translation(t: Vec<i64>) -> AffElem {
        let r = t.len();
        AffElem { t, ..AffElem::identity(r) }
    }

    pub fn is_translation(&self) -> bool {
        *self == AffElem::translation(self.t.clone())
    }
}

/// `{"omega": k, "word": [...]}`: the element `s_{word_0} ... s_{word_m} tau_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reduced {
    pub omega: usize,
    pub word: Vec<usize>,
}

/// A standard facet of the base alcove, given by the simple affine
/// reflections fixing it pointwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Facet(pub Vec<usize>);

impl Facet {
    pub fn iwahori() -> Self {
        Facet(Vec::new())
    }

    /// The vertex opposite to the wall of `s_i`.
    pub fn vertex(i: usize, rank: usize) -> Self {
        Facet((0..=rank).filter(|&j| j != i).collect())
    }
}

/// The Iwahori–Weyl group of a group with irreducible échelonnage system of
/// rank at most [`MAX_RANK`].
pub struct AffineWeyl<'g> {
    pub g: &'g Group,
    r: usize,
    roots: Vec<Vec<i64>>,
    /// Coefficients of the highest root, `m_1, ..., m_r`.
    pub marks: Vec<i64>,
    gens: Vec<AffElem>,
    lattice: Matrix<i64>,
    omega: Vec<AffElem>,
    omega_weights: Vec<Vec<i64>>,
    bary: Vec<i64>,
    scale: i64,
    pub length_cap: usize,
}

impl<'g> AffineWeyl<'g> {
    pub fn new(g: &'g Group) -> Result<Self> {
        let r = g.rank();
        if r > MAX_RANK {
            return Err(Error::RankCap(r));
        }
        if g.system.blocks.len() != 1 {
            return Err(Error::WrongType("affine computations need an irreducible échelonnage system".into()));
        }
        let roots = g.system.positive_roots.clone();
        let theta = g.system.highest_root(0);
        let theta_v = g.system.highest_root_coroot(0);
        let id = AffElem::identity(r);
        let mut gens = Vec::with_capacity(r + 1);
        // s_0 = t_{-theta^vee} s_theta
        let mut s_theta = id.clone();
        for j in 0..r {
            for k in 0..r {
                s_theta.w[j * r + k] -= theta_v[j] * theta[k];
            }
        }
        s_theta.t = theta_v.iter().map(|x| -x).collect();
        gens.push(s_theta);
        for i in 0..r {
            let mut s = id.clone();
            for j in 0..r {
                s.w[j * r + i] -= g.system.cartan[i][j];
            }
            gens.push(s);
        }

        let gen_weights: Vec<Vec<i64>> = (0..g.free_rank())
            .map(|k| {
                let mut free = vec![0; g.free_rank()];
                free[k] = 1;
                g.weights(&Class { free, torsion: vec![0; g.torsion().len()] })
            })
            .collect();
        let lattice = if gen_weights.is_empty() {
            Matrix::zeros(r, 0)
        } else {
            hermite(&Matrix::from_cols(r, &gen_weights))
        };

        let lcm = theta.iter().fold(1, |a, &m| num_integer::lcm(a, m));
        let scale = (r as i64 + 1) * lcm;
        let bary: Vec<i64> = theta.iter().map(|&m| -scale / ((r as i64 + 1) * m)).collect();

        let mut aw = AffineWeyl {
            g,
            r,
            roots,
            marks: theta,
            gens,
            lattice,
            omega: Vec::new(),
            omega_weights: Vec::new(),
            bary,
            scale,
            length_cap: DEFAULT_LENGTH_CAP,
        };
        let w0 = aw.finite_weyl();
        for m in aw.sorted_minuscules() {
            let tau = w0
                .iter()
                .flat_map(|u| {
                    let t = u.apply_linear(&m);
                    w0.iter().map(move |w| AffElem { t: t.clone(), w: w.w.clone() })
                })
                .find(|x| aw.length(x) == 0)
                .ok_or_else(|| Error::TableMismatch("no length-zero element in a component".into()))?;
            aw.omega.push(tau);
            aw.omega_weights.push(m);
        }
        Ok(aw)
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    fn sorted_minuscules(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self
            .g
            .system
            .minuscule_coweights()
            .into_iter()
            .filter(|w| self.lattice.cols() > 0 && in_lattice(&self.lattice, w) || w.iter().all(|&x| x == 0))
            .collect();
        v.sort_by_key(|w| (self.g.system.height_pairing(w), std::cmp::Reverse(w.clone())));
        v.dedup();
        v
    }

    pub fn generator(&self, i: usize) -> &AffElem {
        &self.gens[i]
    }

    /// The length-zero elements, identity first.
    pub fn omega(&self) -> &[AffElem] {
        &self.omega
    }

    /// Minuscule weight of each component.
    pub fn omega_weights(&self) -> &[Vec<i64>] {
        &self.omega_weights
    }

    /// Elements of the finite Weyl group (as elements with zero translation).
    pub fn finite_weyl(&self) -> Vec<AffElem> {
        self.subgroup(&(1..=self.r).collect::<Vec<_>>())
    }

    /// The finite parabolic subgroup generated by the given reflections.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<AffElem> {
        let id = AffElem::identity(self.r);
        let mut seen: BTreeSet<AffElem> = BTreeSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for &i in gens {
                let y = x.mul(&self.gens[i]);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
            assert!(seen.len() <= DEFAULT_NODE_CAP, "parabolic subgroup is infinite");
        }
        seen.into_iter().collect()
    }

    /// Number of affine root hyperplanes separating the base alcove from its
    /// image.
    pub fn length(&self, x: &AffElem) -> usize {
        let wb = x.apply_linear(&self.bary);
        let y: Vec<i64> = wb.iter().zip(&x.t).map(|(a, t)| a + self.scale * t).collect();
        self.roots
            .iter()
            .map(|b| {
                let v = RootSystem::pair(&y, b);
                (v.div_euclid(self.scale) + 1).unsigned_abs() as usize
            })
            .sum()
    }

    fn left_descent(&self, x: &AffElem, lx: usize) -> Option<usize> {
        (0..=self.r).find(|&i| self.length(&self.gens[i].mul(x)) < lx)
    }

    /// Reduced expression `x = s_{i_1} ... s_{i_k} tau`.
    pub fn reduce(&self, x: &AffElem) -> Reduced {
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut l = self.length(&cur);
        while l > 0 {
            let i = self.left_descent(&cur, l).expect("positive length has a descent");
            word.push(i);
            cur = self.gens[i].mul(&cur);
            l -= 1;
        }
        let omega = self.omega.iter().position(|t| *t == cur).expect("length-zero element lies in Omega");
        Reduced { omega, word }
    }

    pub fn from_reduced(&self, red: &Reduced) -> Result<AffElem> {
        let tau = self.omega.get(red.omega).ok_or_else(|| Error::Parse(format!("no Omega element {}", red.omega)))?;
        let mut x = tau.clone();
        for &i in red.word.iter().rev() {
            if i > self.r {
                return Err(Error::Parse(format!("no simple reflection s_{i}")));
            }
            x = self.gens[i].mul(&x);
        }
        Ok(x)
    }

    pub fn omega_index(&self, x: &AffElem) -> usize {
        self.reduce(x).omega
    }

    fn inverse(&self, x: &AffElem) -> AffElem {
        let red = self.reduce(x);
        let tau = &self.omega[red.omega];
        let tau_inv = self.omega.iter().find(|t| t.mul(tau) == AffElem::identity(self.r)).expect("Omega is a group");
        let mut y = tau_inv.clone();
        for &i in &red.word {
            y = y.mul(&self.gens[i]);
        }
        y
    }

    /// Bruhat order: same `Omega` part and `v tau^{-1} <= w tau^{-1}` in the
    /// affine Weyl group.
    pub fn bruhat_leq(&self, v: &AffElem, w: &AffElem) -> Result<bool> {
        let lw = self.length(w);
        if lw > self.length_cap {
            return Err(Error::LengthCap(lw));
        }
        Ok(self.bruhat_leq_uncapped(v, w))
    }

    /// Bruhat order without the length cap.
    pub fn bruhat_leq_uncapped(&self, v: &AffElem, w: &AffElem) -> bool {
        if self.omega_index(v) != self.omega_index(w) {
            return false;
        }
        let mut memo = HashMap::new();
        self.leq_rec(v.clone(), self.length(v), w.clone(), self.length(w), &mut memo)
    }

    fn leq_rec(
        &self,
        v: AffElem,
        lv: usize,
        w: AffElem,
        lw: usize,
        memo: &mut HashMap<(AffElem, AffElem), bool>,
    ) -> bool {
        if lv > lw {
            return false;
        }
        if lw == 0 {
            return v == w;
        }
        if lv == 0 {
            // same Omega part, and every element lies above its Omega part
            return true;
        }
        if let Some(&b) = memo.get(&(v.clone(), w.clone())) {
            return b;
        }
        let s = self.left_descent(&w, lw).expect("positive length");
        let sw = self.gens[s].mul(&w);
        let sv = self.gens[s].mul(&v);
        let lsv = self.length(&sv);
        let res = if lsv < lv {
            self.leq_rec(sv, lsv, sw, lw - 1, memo)
        } else {
            self.leq_rec(v.clone(), lv, sw, lw - 1, memo)
        };
        memo.insert((v, w), res);
        res
    }

    /// Longest element of `W_f t_la W_f`.
    pub fn double_coset_max(&self, facet: &Facet, la: &[i64]) -> Result<AffElem> {
        if la.len() != self.r {
            return Err(Error::DimensionMismatch { expected: self.r, got: la.len() });
        }
        if facet.0.len() > self.r || facet.0.iter().any(|&i| i > self.r) {
            return Err(Error::UnsupportedLevel(format!("facet {:?}", facet.0)));
        }
        let wf = self.subgroup(&facet.0);
        let t = AffElem::translation(la.to_vec());
        Ok(self.coset_max(&wf, &t))
    }

    fn coset_max(&self, wf: &[AffElem], x: &AffElem) -> AffElem {
        let mut best = x.clone();
        let mut bl = self.length(x);
        for u in wf {
            let ux = u.mul(x);
            for v in wf {
                let y = ux.mul(v);
                let l = self.length(&y);
                if l > bl {
                    best = y;
                    bl = l;
                }
            }
        }
        best
    }

    /// The permutation of `{0, ..., r}` induced by conjugation with `tau`.
    pub fn omega_permutation(&self, k: usize) -> Vec<usize> {
        let tau = &self.omega[k];
        let inv = self.inverse(tau);
        (0..=self.r)
            .map(|i| {
                let c = tau.mul(&self.gens[i]).mul(&inv);
                self.gens.iter().position(|s| *s == c).expect("Omega normalizes the simple reflections")
            })
            .collect()
    }

    pub fn stabilizes(&self, k: usize, facet: &Facet) -> bool {
        let p = self.omega_permutation(k);
        let a: BTreeSet<usize> = facet.0.iter().map(|&i| p[i]).collect();
        let b: BTreeSet<usize> = facet.0.iter().copied().collect();
        a == b
    }

    /// `tau_k v` for `tau_k` stabilizing the facet.
    pub fn omega_translate_flag(&self, k: usize, facet: &Facet, v: &AffElem) -> Result<AffElem> {
        if k >= self.omega.len() || !self.stabilizes(k, facet) {
            return Err(Error::NotStabilizing);
        }
        Ok(self.omega[k].mul(v))
    }

    /// Special vertices (indices of the opposite walls).
    pub fn special_vertices(&self) -> Vec<usize> {
        std::iter::once(0).chain((1..=self.r).filter(|&i| self.marks[i - 1] == 1)).collect()
    }

    pub fn absolutely_special_vertices(&self) -> Vec<usize> {
        if self.g.is_split() {
            return self.special_vertices();
        }
        let set: BTreeSet<usize> = (0..self.omega.len()).map(|k| self.omega_permutation(k)[0]).collect();
        set.into_iter().collect()
    }

    /// Elements of the component `k` of length at most `max_len`, sorted by
    /// length and then by reduced word.
    pub fn elements_up_to(&self, k: usize, max_len: usize) -> Vec<AffElem> {
        let mut levels = vec![vec![self.omega[k].clone()]];
        let mut seen: HashSet<AffElem> = HashSet::from([self.omega[k].clone()]);
        for l in 0..max_len {
            let mut next = Vec::new();
            for x in &levels[l] {
                for s in &self.gens {
                    let y = s.mul(x);
                    if !seen.contains(&y) && self.length(&y) == l + 1 {
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            levels.push(next);
        }
        let mut out: Vec<(usize, Vec<usize>, AffElem)> = Vec::new();
        for (l, lev) in levels.into_iter().enumerate() {
            for x in lev {
                out.push((l, self.reduce(&x).word, x));
            }
        }
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.into_iter().map(|x| x.2).collect()
    }

    /// Dominant weights of the translation lattice with `<2 rho, .>` at most `h`.
    fn dominant_translations(&self, h: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for m in &self.omega_weights {
            let hm = self.g.system.height_pairing(m);
            if hm > h {
                continue;
            }
            for c in compositions(self.r, (h - hm) / 2) {
                let neg: Vec<i64> = c.iter().map(|x| -x).collect();
                let w = shift_weights(self.g, m, &neg);
                if w.iter().all(|&x| x >= 0) {
                    out.push(w);
                }
            }
        }
        out
    }
}

/// Precomputed data for verdicts on one facet.
pub struct FlagContext<'a, 'g> {
    pub aw: &'a AffineWeyl<'g>,
    pub facet: Facet,
    tops: Vec<AffElem>,
    bottoms: Vec<AffElem>,
    stab: Vec<usize>,
    short_circuit: Option<Verdict>,
}

impl<'a, 'g> FlagContext<'a, 'g> {
    pub fn new(aw: &'a AffineWeyl<'g>, facet: Facet) -> Result<Self> {
        let g = aw.g;
        if facet.0.len() > aw.r || facet.0.iter().any(|&i| i > aw.r) {
            return Err(Error::UnsupportedLevel(format!("facet {:?}", facet.0)));
        }
        let specials = aw.special_vertices();
        let abs = aw.absolutely_special_vertices();
        let closure: Vec<usize> = specials.iter().copied().filter(|i| !facet.0.contains(i)).collect();
        if closure.is_empty() {
            return Err(Error::UnsupportedLevel("no special vertex in the closure of the facet".into()));
        }
        let stab: Vec<usize> = (0..aw.omega.len()).filter(|&k| aw.stabilizes(k, &facet)).collect();
        let short_circuit = if g.p == 0 {
            Some(Verdict::new(Status::Normal, rule::CHAR_ZERO))
        } else if normality::pi1_der_order(g) % g.p as i64 != 0 {
            Some(Verdict::new(Status::Normal, rule::PAPPAS_RAPOPORT))
        } else {
            None
        };
        let mut tops = Vec::new();
        let mut bottoms = Vec::new();
        if short_circuit.is_none() {
            let h = 2 * aw.length_cap as i64;
            let translations = aw.dominant_translations(h);
            for x in &specials {
                let wx = aw.subgroup(&Facet::vertex(*x, aw.r).0);
                let is_abs = abs.contains(x);
                let in_closure = closure.contains(x);
                if !in_closure && !is_abs {
                    continue;
                }
                for la in &translations {
                    let c = g.class_with_weights(la).expect("translations come from classes");
                    let kind = if is_abs { VertexKind::AbsolutelySpecial } else { VertexKind::SpecialOnly };
                    let v = normality::verdict_special(g, &c, kind)?;
                    let top = aw.coset_max(&wx, &AffElem::translation(la.clone()));
                    match v.status {
                        Status::Normal if in_closure => tops.push(top),
                        Status::NonNormal if is_abs && aw.length(&top) <= aw.length_cap => bottoms.push(top),
                        _ => {}
                    }
                }
            }
        }
        tops.sort_by_key(|t| std::cmp::Reverse(aw.length(t)));
        tops.dedup();
        let mut maximal: Vec<AffElem> = Vec::new();
        for t in tops {
            if !maximal.iter().any(|m| aw.bruhat_leq_uncapped(&t, m)) {
                maximal.push(t);
            }
        }
        let tops = maximal;
        Ok(FlagContext { aw, facet, tops, bottoms, stab, short_circuit })
    }

    /// Verdict for the Schubert variety of `v` in the partial flag variety
    /// of the facet.
    pub fn verdict(&self, v: &AffElem) -> Result<Verdict> {
        let aw = self.aw;
        let lv = aw.length(v);
        if lv > aw.length_cap {
            return Err(Error::LengthCap(lv));
        }
        if let Some(s) = &self.short_circuit {
            return Ok(s.clone());
        }
        let translates: Vec<AffElem> = self
            .stab
            .iter()
            .flat_map(|&a| self.stab.iter().map(move |&b| (a, b)))
            .map(|(a, b)| aw.omega[a].mul(v).mul(&aw.omega[b]))
            .collect();
        for u in &translates {
            if self.tops.iter().any(|t| aw.bruhat_leq_uncapped(u, t)) {
                return Ok(Verdict::new(Status::Normal, "flag lemma: below a normal double coset"));
            }
        }
        for u in &translates {
            if self.bottoms.iter().any(|b| aw.bruhat_leq_uncapped(b, u)) {
                return Ok(Verdict::new(Status::NonNormal, "flag lemma: above a non-normal double coset"));
            }
        }
        Ok(Verdict::unknown())
    }
}

/// One-shot verdict for a Schubert variety in a partial affine flag variety.
pub fn flag_verdict(g: &Group, facet: &Facet, v: &AffElem) -> Result<Verdict> {
    let aw = AffineWeyl::new(g)?;
    FlagContext::new(&aw, facet.clone())?.verdict(v)
}

/// Translations `t_{w mu}` for `w` in the finite Weyl group: the maximal
/// admissible elements at Iwahori level.
pub fn admissible_translations(aw: &AffineWeyl, la: &[i64]) -> Vec<AffElem> {
    let set: BTreeSet<Vec<i64>> = aw.finite_weyl().iter().map(|w| w.apply_linear(la)).collect();
    set.into_iter().map(AffElem::translation).collect()
}

/// Minuscule class of each component, for labelling.
pub fn component_labels(g: &Group) -> Vec<Class> {
    minuscule_classes(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn g(name: &str, p: u64) -> Group {
        Group::new(GroupSpec::preset(name, p).unwrap()).unwrap()
    }

    #[test]
    fn omega_has_length_zero() {
        let gr = g("pgl(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        assert_eq!(aw.omega().len(), 3);
        for t in aw.omega() {
            assert_eq!(aw.length(t), 0);
        }
        assert_eq!(aw.length(&AffElem::identity(2)), 0);
        for i in 0..=2 {
            assert_eq!(aw.length(aw.generator(i)), 1);
        }
    }

    #[test]
    fn translation_lengths() {
        let gr = g("pgl(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        assert_eq!(aw.length(&AffElem::translation(vec![1, 1])), 4);
        let m = aw.double_coset_max(&Facet::vertex(0, 2), &[1, 1]).unwrap();
        assert_eq!(aw.length(&m), 7);
    }

    #[test]
    fn unitary_words() {
        let gr = g("pu(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        assert_eq!(aw.omega().len(), 1);
        let w = aw.from_reduced(&Reduced { omega: 0, word: vec![0, 1, 0] }).unwrap();
        let s0 = aw.generator(0).clone();
        assert!(aw.bruhat_leq(&s0, &w).unwrap());
        assert_eq!(aw.reduce(&w).word, vec![0, 1, 0]);
        assert_eq!(aw.special_vertices(), vec![0, 1]);
        assert_eq!(aw.absolutely_special_vertices(), vec![0]);
    }

    #[test]
    fn rank_cap() {
        let gr = g("pgl(5)", 5);
        assert!(matches!(AffineWeyl::new(&gr), Err(Error::RankCap(4))));
    }

    #[test]
    fn unitary_iwahori_verdicts() {
        let gr = g("pu(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        let ctx = FlagContext::new(&aw, Facet::iwahori()).unwrap();
        let top = aw.from_reduced(&Reduced { omega: 0, word: vec![0, 1, 0] }).unwrap();
        for x in aw.elements_up_to(0, 8) {
            let normal = aw.length(&x) <= 2 || x == top;
            let want = if normal { Status::Normal } else { Status::NonNormal };
            assert_eq!(ctx.verdict(&x).unwrap().status, want, "{:?}", aw.reduce(&x));
        }
    }

    #[test]
    fn pgl3_iwahori_counts() {
        let gr = g("pgl(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        let ctx = FlagContext::new(&aw, Facet::iwahori()).unwrap();
        for k in 0..3 {
            let mut counts = [0; 3];
            for x in aw.elements_up_to(k, 10) {
                let l = aw.length(&x);
                let s = ctx.verdict(&x).unwrap().status;
                if l <= 6 {
                    assert_eq!(s, Status::Normal);
                }
                if l >= 9 {
                    assert_eq!(s, Status::NonNormal);
                }
                if l <= 8 {
                    counts[s as usize] += 1;
                }
            }
            assert_eq!(counts, [70, 21, 18]);
        }
    }

    #[test]
    fn omega_translation_requires_stabilizer() {
        let gr = g("pgl(3)", 3);
        let aw = AffineWeyl::new(&gr).unwrap();
        let v = aw.generator(1).clone();
        assert!(aw.omega_translate_flag(1, &Facet::iwahori(), &v).is_ok());
        assert!(matches!(aw.omega_translate_flag(1, &Facet::vertex(0, 2), &v), Err(Error::NotStabilizing)));
    }
}
