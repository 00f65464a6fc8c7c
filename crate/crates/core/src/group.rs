//! Group specifications, tame twists, coinvariant lattices and the
//! échelonnage root system.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cartan::{Letter, RootSystem, SimpleType};
use crate::error::{Error, Result};
use crate::lattice::{solve_integer, Matrix, Quotient};
use crate::rootdata::{
    fundamental_coweights, general_linear_datum, pairing, IsogenyLattice, NamedLattice, RootDatumAbs,
};

fn one_u32() -> u32 {
    1
}

fn one_usize() -> usize {
    1
}

fn is_one_u32(x: &u32) -> bool {
    *x == 1
}

fn is_one_usize(x: &usize) -> bool {
    *x == 1
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub abs_type: Letter,
    pub rank: usize,
    #[serde(default = "one_u32", skip_serializing_if = "is_one_u32")]
    pub twist_order: u32,
    pub lattice: IsogenyLattice,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub central_rank: usize,
    #[serde(default = "one_usize", skip_serializing_if = "is_one_usize")]
    pub restriction_degree: usize,
}

impl FactorSpec {
    pub fn new(abs_type: Letter, rank: usize, twist_order: u32, lattice: IsogenyLattice) -> Self {
        FactorSpec { abs_type, rank, twist_order, lattice, central_rank: 0, restriction_degree: 1 }
    }
}

/// Serializable description of a group over a local field of residue
/// characteristic `char`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub factors: Vec<FactorSpec>,
    /// Basis of the semisimple cocharacter lattice over the concatenated
    /// fundamental coweights of all factors; overrides per-factor lattices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub glue: Option<Vec<Vec<i64>>>,
}

impl GroupSpec {
    pub fn single(name: &str, p: u64, factor: FactorSpec) -> Self {
        GroupSpec { name: Some(name.to_string()), characteristic: p, factors: vec![factor], glue: None }
    }

    /// Expands a named preset such as `pgl(3)`, `pu(8)`, `so(8)` or `e7-ad`.
    pub fn preset(name: &str, p: u64) -> Result<Self> {
        let name = name.trim().to_ascii_lowercase();
        let bad = || Error::Parse(format!("unknown preset {name:?}"));
        let (head, arg) = match name.find('(') {
            Some(i) if name.ends_with(')') => {
                let n: usize = name[i + 1..name.len() - 1].trim().parse().map_err(|_| bad())?;
                (&name[..i], Some(n))
            }
            _ => (name.as_str(), None),
        };
        use IsogenyLattice as L;
        use Letter::*;
        let named = |l| L::Named(l);
        let f = |letter, rank, e, lat| Ok::<_, Error>(FactorSpec::new(letter, rank, e, lat));
        let factor = match (head, arg) {
            ("pgl", Some(n)) if n >= 2 => f(A, n - 1, 1, L::AD)?,
            ("sl", Some(n)) if n >= 2 => f(A, n - 1, 1, L::SC)?,
            ("gl", Some(n)) if n >= 2 => f(A, n - 1, 1, named(NamedLattice::General))?,
            ("pu", Some(n)) if n >= 3 => f(A, n - 1, 2, L::AD)?,
            ("su", Some(n)) if n >= 3 => f(A, n - 1, 2, L::SC)?,
            ("so", Some(4)) => {
                return Ok(GroupSpec {
                    name: Some(name.clone()),
                    characteristic: p,
                    factors: vec![FactorSpec::new(A, 1, 1, L::AD), FactorSpec::new(A, 1, 1, L::AD)],
                    glue: Some(vec![vec![1, 1], vec![0, 2]]),
                });
            }
            ("so", Some(m)) if m >= 5 && m % 2 == 1 => f(B, m / 2, 1, L::AD)?,
            ("so", Some(m)) if m >= 8 && m % 2 == 0 => f(D, m / 2, 1, named(NamedLattice::SO))?,
            ("spin", Some(m)) if m >= 5 && m % 2 == 1 => f(B, m / 2, 1, L::SC)?,
            ("spin", Some(m)) if m >= 8 && m % 2 == 0 => f(D, m / 2, 1, L::SC)?,
            ("pso", Some(m)) if m >= 8 && m % 2 == 0 => f(D, m / 2, 1, L::AD)?,
            ("halfspin", Some(m)) if m >= 8 && m % 4 == 0 => f(D, m / 2, 1, named(NamedLattice::HalfSpin))?,
            ("so-ram", Some(m)) if m >= 8 && m % 2 == 0 => f(D, m / 2, 2, named(NamedLattice::SO))?,
            ("pso-ram", Some(m)) if m >= 8 && m % 2 == 0 => f(D, m / 2, 2, L::AD)?,
            ("sp", Some(m)) if m >= 4 && m % 2 == 0 => f(C, m / 2, 1, L::SC)?,
            ("psp", Some(m)) if m >= 4 && m % 2 == 0 => f(C, m / 2, 1, L::AD)?,
            ("e6-ad", None) => f(E, 6, 1, L::AD)?,
            ("e6-sc", None) => f(E, 6, 1, L::SC)?,
            ("e6-ram-ad", None) => f(E, 6, 2, L::AD)?,
            ("e6-ram-sc", None) => f(E, 6, 2, L::SC)?,
            ("e7-ad", None) => f(E, 7, 1, L::AD)?,
            ("e7-sc", None) => f(E, 7, 1, L::SC)?,
            ("e8", None) => f(E, 8, 1, L::AD)?,
            ("f4", None) => f(F, 4, 1, L::AD)?,
            ("g2", None) => f(G, 2, 1, L::AD)?,
            ("triality-ad", None) => f(D, 4, 3, L::AD)?,
            ("triality-sc", None) => f(D, 4, 3, L::SC)?,
            _ => return Err(bad()),
        };
        Ok(GroupSpec::single(&name, p, factor))
    }
}

/// Element of the coinvariant lattice `X_*(T)_I`, in the canonical
/// coordinates of its Smith presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Class {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

/// Resolved data of one factor.
#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub abs_type: SimpleType,
    pub twist_order: u32,
    pub restriction_degree: usize,
    /// First absolute simple index.
    pub offset: usize,
    pub sigma_type: SimpleType,
    /// First échelonnage simple index.
    pub sigma_offset: usize,
}

/// A group datum with its twist, coinvariants and échelonnage system.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    pub p: u64,
    pub datum: RootDatumAbs,
    pub factors: Vec<FactorInfo>,
    /// Action of the twist on `X`.
    pub sigma: Matrix<i64>,
    /// Diagram automorphism on absolute simple indices.
    pub perm: Vec<usize>,
    /// Absolute simple indices of each échelonnage simple index; the first
    /// entry is the orbit representative.
    pub orbits: Vec<Vec<usize>>,
    /// Scale factors of the échelonnage roots.
    pub scale: Vec<i64>,
    /// The échelonnage root system.
    pub system: RootSystem,
    /// Échelonnage simple roots as covectors on `X`.
    pub sigma_roots: Vec<Vec<i64>>,
    coinv: Quotient<i64>,
    pi1: Quotient<i64>,
    adjoint: OnceLock<Box<Group>>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Diagram automorphism and échelonnage orbit table of a twisted factor,
/// in local 0-based indices.
fn twist_table(t: SimpleType, e: u32) -> Result<(Vec<usize>, Vec<Vec<usize>>, SimpleType)> {
    let n = t.rank;
    let id: Vec<usize> = (0..n).collect();
    let invalid = || Error::InvalidType(format!("{t} admits no twist of order {e}"));
    Ok(match (t.letter, e) {
        (_, 1) => (id, (0..n).map(|i| vec![i]).collect(), t),
        (Letter::A, 2) if n >= 2 => {
            let perm = (0..n).map(|i| n - 1 - i).collect();
            let m = n.div_ceil(2);
            let orbits = (0..m)
                .map(|k| if k == n - 1 - k { vec![k] } else { vec![k, n - 1 - k] })
                .collect();
            let letter = if n % 2 == 1 { Letter::B } else { Letter::C };
            (perm, orbits, SimpleType::relaxed(letter, m))
        }
        (Letter::D, 2) => {
            let mut perm = id;
            perm.swap(n - 2, n - 1);
            let mut orbits: Vec<Vec<usize>> = (0..n - 2).map(|i| vec![i]).collect();
            orbits.push(vec![n - 2, n - 1]);
            (perm, orbits, SimpleType::relaxed(Letter::C, n - 1))
        }
        (Letter::D, 3) if n == 4 => (vec![2, 1, 3, 0], vec![vec![1], vec![0, 2, 3]], SimpleType::relaxed(Letter::G, 2)),
        (Letter::E, 2) if n == 6 => (
            vec![5, 1, 4, 3, 2, 0],
            vec![vec![0, 5], vec![2, 4], vec![3], vec![1]],
            SimpleType::relaxed(Letter::F, 4),
        ),
        _ => return Err(invalid()),
    })
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let p = spec.characteristic;
        if p != 0 && !is_prime(p) {
            return Err(Error::InvalidType(format!("characteristic {p} is neither 0 nor a prime")));
        }
        if spec.factors.is_empty() {
            return Err(Error::InvalidType("a group needs at least one factor".into()));
        }
        let mut types = Vec::new();
        let mut factors = Vec::new();
        let mut perm = Vec::new();
        let mut orbits = Vec::new();
        let mut sigma_blocks = Vec::new();
        let (mut off, mut soff, mut central) = (0, 0, 0);
        for fs in &spec.factors {
            let t = SimpleType::new(fs.abs_type, fs.rank)?;
            if fs.restriction_degree == 0 {
                return Err(Error::InvalidType("restriction degree must be positive".into()));
            }
            let (lp, lo, st) = twist_table(t, fs.twist_order)?;
            if p != 0 && u64::from(fs.twist_order) % p == 0 {
                return Err(Error::WildRamification { p, e: fs.twist_order });
            }
            perm.extend(lp.iter().map(|i| i + off));
            orbits.extend(lo.iter().map(|o| o.iter().map(|i| i + off).collect::<Vec<_>>()));
            sigma_blocks.push((st, soff));
            factors.push(FactorInfo {
                abs_type: t,
                twist_order: fs.twist_order,
                restriction_degree: fs.restriction_degree,
                offset: off,
                sigma_type: st,
                sigma_offset: soff,
            });
            types.push(t);
            off += t.rank;
            soff += st.rank;
            central += fs.central_rank;
        }
        let system_abs = RootSystem::from_blocks(&types);
        let n = off;

        let general = spec.factors.iter().any(|f| f.lattice == IsogenyLattice::Named(NamedLattice::General));
        let datum = if general {
            if spec.factors.len() != 1 || spec.glue.is_some() || spec.factors[0].twist_order != 1 {
                return Err(Error::InvalidLattice("the gl lattice is only available for a single split factor".into()));
            }
            let mut d = general_linear_datum(n)?;
            if spec.factors[0].central_rank != 0 {
                return Err(Error::InvalidLattice("the gl lattice already has a central torus".into()));
            }
            d.system = system_abs.clone();
            d
        } else {
            let b = match &spec.glue {
                Some(rows) => {
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(Error::InvalidLattice(format!("glue basis must be {n} vectors of length {n}")));
                    }
                    Matrix::from_cols(n, rows)
                }
                None => {
                    let mut b = Matrix::zeros(n, n);
                    for (fs, fi) in spec.factors.iter().zip(&factors) {
                        let bl = fs.lattice.basis(fi.abs_type)?;
                        for i in 0..bl.rows() {
                            for j in 0..bl.cols() {
                                b[(fi.offset + i, fi.offset + j)] = bl[(i, j)];
                            }
                        }
                    }
                    b
                }
            };
            RootDatumAbs::from_basis(system_abs.clone(), b, central)?
        };
        let dim = datum.dim;

        // the twist on X: permutes fundamental coweights, fixes the centre
        let sigma = match &datum.basis {
            None => Matrix::identity(dim),
            Some(b) => {
                let mut s = Matrix::identity(dim);
                for k in 0..n {
                    let col = b.col(k);
                    let mut moved = vec![0; n];
                    for i in 0..n {
                        moved[perm[i]] = col[i];
                    }
                    let x = solve_integer(b, &moved)
                        .ok_or_else(|| Error::InvalidLattice("lattice is not stable under the twist".into()))?;
                    for i in 0..n {
                        s[(i, k)] = x[i];
                    }
                }
                s
            }
        };

        // échelonnage roots and coroots
        let r = orbits.len();
        let mut scale = Vec::with_capacity(r);
        let mut sigma_roots = Vec::with_capacity(r);
        for o in &orbits {
            let delta = o[0];
            let pair: i64 = o.iter().map(|&j| system_abs.cartan[delta][j]).sum();
            if pair <= 0 || 2 % pair != 0 {
                return Err(Error::TableMismatch(format!("orbit {o:?}")));
            }
            let c = 2 / pair;
            let mut a = vec![0; dim];
            for &j in o {
                for (k, x) in a.iter_mut().enumerate() {
                    *x += c * datum.roots[j][k];
                }
            }
            scale.push(c);
            sigma_roots.push(a);
        }
        let mut cartan = vec![vec![0; r]; r];
        for i in 0..r {
            for j in 0..r {
                cartan[i][j] = pairing(&datum.coroots[orbits[i][0]], &sigma_roots[j]);
            }
        }
        for (st, so) in &sigma_blocks {
            let expect = st.cartan();
            for i in 0..st.rank {
                for j in 0..r {
                    let want = if (*so..so + st.rank).contains(&j) { expect[i][j - so] } else { 0 };
                    if cartan[so + i][j] != want {
                        return Err(Error::TableMismatch(format!("{st}")));
                    }
                }
            }
        }
        let system = RootSystem::with_blocks(cartan, sigma_blocks);

        let mut rel = sigma.clone();
        for i in 0..dim {
            rel[(i, i)] -= 1;
        }
        let coinv = Quotient::new(dim, &rel);
        let mut gens: Vec<Vec<i64>> = (0..dim).map(|j| rel.col(j)).collect();
        gens.extend(datum.coroots.iter().cloned());
        let pi1 = Quotient::new(dim, &Matrix::from_cols(dim, &gens));

        Ok(Group {
            spec,
            p,
            datum,
            factors,
            sigma,
            perm,
            orbits,
            scale,
            system,
            sigma_roots,
            coinv,
            pi1,
            adjoint: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        if let Some(n) = &self.spec.name {
            return n.clone();
        }
        let parts: Vec<String> = self
            .spec
            .factors
            .iter()
            .map(|f| {
                let lat = match &f.lattice {
                    IsogenyLattice::Named(n) => serde_json::to_value(n).unwrap().as_str().unwrap().to_string(),
                    IsogenyLattice::Basis { .. } => "basis".into(),
                };
                let mut s = format!("{}{}-{}", f.abs_type, f.rank, lat);
                if f.twist_order > 1 {
                    s += &format!("^{}", f.twist_order);
                }
                if f.restriction_degree > 1 {
                    s = format!("Res{}({s})", f.restriction_degree);
                }
                s
            })
            .collect();
        parts.join("x")
    }

    /// Cocharacter rank `N`.
    pub fn dim(&self) -> usize {
        self.datum.dim
    }

    /// Rank of the échelonnage system.
    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn is_split(&self) -> bool {
        self.factors.iter().all(|f| f.twist_order == 1)
    }

    pub fn free_rank(&self) -> usize {
        self.coinv.free_rank()
    }

    pub fn torsion(&self) -> Vec<i64> {
        self.coinv.torsion()
    }

    pub fn zero(&self) -> Class {
        Class { free: vec![0; self.free_rank()], torsion: vec![0; self.torsion().len()] }
    }

    /// `res_I`: the class of a cocharacter.
    pub fn project(&self, mu: &[i64]) -> Result<Class> {
        if mu.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: mu.len() });
        }
        let (free, torsion) = self.coinv.reduce(mu);
        Ok(Class { free, torsion })
    }

    /// Sum of the classes of a tuple of cocharacters, one per embedding of a
    /// restriction of scalars.
    pub fn project_tuple(&self, mus: &[Vec<i64>]) -> Result<Class> {
        let d = self.factors.iter().map(|f| f.restriction_degree).max().unwrap_or(1);
        if mus.is_empty() || mus.len() > d {
            return Err(Error::DimensionMismatch { expected: d, got: mus.len() });
        }
        let mut sum = vec![0; self.dim()];
        for mu in mus {
            if mu.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: mu.len() });
            }
            for (s, x) in sum.iter_mut().zip(mu) {
                *s += x;
            }
        }
        self.project(&sum)
    }

    pub fn check(&self, c: &Class) -> Result<()> {
        if c.free.len() != self.free_rank() || c.torsion.len() != self.torsion().len() {
            return Err(Error::MixedGroups);
        }
        Ok(())
    }

    /// A cocharacter lifting the class.
    pub fn lift(&self, c: &Class) -> Vec<i64> {
        self.coinv.lift(&c.free, &c.torsion)
    }

    /// `a + k b`.
    pub fn combine(&self, a: &Class, k: i64, b: &Class) -> Class {
        let (la, lb) = (self.lift(a), self.lift(b));
        let v: Vec<i64> = la.iter().zip(&lb).map(|(x, y)| x + k * y).collect();
        let (free, torsion) = self.coinv.reduce(&v);
        Class { free, torsion }
    }

    /// Pairings with the échelonnage simple roots.
    pub fn weights(&self, c: &Class) -> Vec<i64> {
        let l = self.lift(c);
        self.sigma_roots.iter().map(|a| pairing(&l, a)).collect()
    }

    pub fn is_dominant(&self, c: &Class) -> bool {
        self.weights(c).iter().all(|&w| w >= 0)
    }

    /// `<2 rho_Sigma, c>`.
    pub fn height(&self, c: &Class) -> i64 {
        self.system.height_pairing(&self.weights(c))
    }

    /// The simple échelonnage coroot with index `i`.
    pub fn coroot(&self, i: usize) -> Class {
        let (free, torsion) = self.coinv.reduce(&self.datum.coroots[self.orbits[i][0]]);
        Class { free, torsion }
    }

    /// `sum_i coeffs_i * alpha_i^vee-bar`.
    pub fn coroot_combination(&self, coeffs: &[i64]) -> Class {
        let mut v = vec![0; self.dim()];
        for (i, &c) in coeffs.iter().enumerate() {
            for (x, y) in v.iter_mut().zip(&self.datum.coroots[self.orbits[i][0]]) {
                *x += c * y;
            }
        }
        let (free, torsion) = self.coinv.reduce(&v);
        Class { free, torsion }
    }

    /// Simple reflection of the échelonnage Weyl group acting on a class.
    pub fn reflect(&self, i: usize, c: &Class) -> Class {
        let w = self.weights(c)[i];
        self.combine(c, -w, &self.coroot(i))
    }

    /// Dominant representative of the Weyl orbit.
    pub fn dominant(&self, c: &Class) -> Class {
        let mut v = c.clone();
        loop {
            match self.weights(&v).iter().position(|&x| x < 0) {
                Some(i) => v = self.reflect(i, &v),
                None => return v,
            }
        }
    }

    /// Connected component in `pi_1(G)_I`, as (free, torsion) coordinates.
    pub fn component(&self, c: &Class) -> Vec<i64> {
        let (mut f, t) = self.pi1.reduce(&self.lift(c));
        f.extend(t);
        f
    }

    /// Elementary divisors and free rank of `pi_1(G)_I`.
    pub fn pi1_invariants(&self) -> (usize, Vec<i64>) {
        (self.pi1.free_rank(), self.pi1.torsion())
    }

    /// Absolute simple indices over a set of échelonnage indices.
    pub fn absolute_indices(&self, support: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = support.iter().flat_map(|&i| self.orbits[i].iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// The norm `sum_k sigma^k(mu)` of any lift, over the cyclic group
    /// generated by the twist.
    pub fn norm(&self, c: &Class) -> Vec<i64> {
        let order = self.factors.iter().fold(1, |acc, f| num_integer::lcm(acc, f.twist_order));
        let mut x = self.lift(c);
        let mut sum = x.clone();
        for _ in 1..order {
            x = self.sigma.apply(&x);
            for (s, y) in sum.iter_mut().zip(&x) {
                *s += y;
            }
        }
        sum
    }

    pub fn is_adjoint(&self) -> bool {
        self.spec.glue.is_none()
            && self.spec.factors.iter().all(|f| f.lattice == IsogenyLattice::AD && f.central_rank == 0)
    }

    fn adjoint_spec(&self) -> GroupSpec {
        GroupSpec {
            name: self.spec.name.as_ref().map(|n| format!("{n}/ad")),
            characteristic: self.p,
            factors: self
                .spec
                .factors
                .iter()
                .map(|f| FactorSpec { lattice: IsogenyLattice::AD, central_rank: 0, ..f.clone() })
                .collect(),
            glue: None,
        }
    }

    /// The adjoint group with the same twist.
    pub fn adjoint(&self) -> &Group {
        self.adjoint.get_or_init(|| Box::new(Group::new(self.adjoint_spec()).expect("adjoint of a valid group")))
    }

    /// Image of a class in the coinvariants of the adjoint group.
    pub fn adjoint_image(&self, c: &Class) -> Class {
        let x = self.datum.to_coweight(&self.lift(c));
        self.adjoint().project(&x).expect("adjoint dimension")
    }

    /// The same datum with every twist removed.
    pub fn split(&self) -> Result<Group> {
        let mut spec = self.spec.clone();
        for f in &mut spec.factors {
            f.twist_order = 1;
        }
        Group::new(spec)
    }

    /// A class with the given échelonnage weights, if one exists.
    pub fn class_with_weights(&self, w: &[i64]) -> Option<Class> {
        if w.len() != self.rank() {
            return None;
        }
        let a = Matrix::from_rows(&self.sigma_roots);
        let x = solve_integer(&a, w)?;
        let c = self.project(&x).ok()?;
        Some(c)
    }

    /// Parses a cocharacter: comma-separated lattice coordinates, `e`-style
    /// coordinates `(mu_0, ..., mu_n)` of a single type-A factor, or a sum of
    /// fundamental coweights such as `w1+2*w3`.
    pub fn parse_coweight(&self, s: &str) -> Result<Vec<i64>> {
        let s = s.trim();
        if s.contains('w') {
            let coeffs = parse_weights(s, self.datum.rank())?;
            let fw = fundamental_coweights(&self.datum);
            let mut out = vec![num_rational::Ratio::from_integer(0); self.dim()];
            for (i, &c) in coeffs.iter().enumerate() {
                for (o, x) in out.iter_mut().zip(&fw[i].coords) {
                    *o += *x * c;
                }
            }
            if out.iter().any(|x| !x.is_integer()) {
                return Err(Error::NotRealizable(format!("{s} is not a cocharacter of {}", self.name())));
            }
            return Ok(out.iter().map(|x| x.to_integer()).collect());
        }
        let v = parse_ints(s)?;
        if v.len() == self.dim() {
            return Ok(v);
        }
        let single_a = self.factors.len() == 1 && self.factors[0].abs_type.letter == Letter::A;
        if single_a && v.len() == self.datum.rank() + 1 && self.datum.central_rank == 0 {
            let w: Vec<i64> = (0..self.datum.rank()).map(|i| v[i] - v[i + 1]).collect();
            return match &self.datum.basis {
                Some(b) => solve_integer(b, &w)
                    .ok_or_else(|| Error::NotRealizable(format!("{s} is not a cocharacter of {}", self.name()))),
                None => Ok(v),
            };
        }
        Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (p = {})", self.name(), self.p)
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

/// Parses `w1+2*w3` (or `0`) into a coefficient vector of length `rank`;
/// plain comma-separated vectors are accepted too.
pub fn parse_weights(s: &str, rank: usize) -> Result<Vec<i64>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !s.contains('w') {
        let v = parse_ints(&s)?;
        if v.len() == 1 && v[0] == 0 {
            return Ok(vec![0; rank]);
        }
        if v.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
        }
        return Ok(v);
    }
    let mut out = vec![0; rank];
    let normalized = s.replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (coef, name) = match term.find('w') {
            Some(i) => (&term[..i], &term[i + 1..]),
            None => return Err(Error::Parse(format!("bad term {term:?}"))),
        };
        let coef = coef.trim_end_matches('*');
        let k: i64 = match coef {
            "" => 1,
            "-" => -1,
            c => c.parse().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?,
        };
        let idx: usize = name.parse().map_err(|_| Error::Parse(format!("bad index {name:?}")))?;
        if idx == 0 || idx > rank {
            return Err(Error::Parse(format!("index {idx} out of range 1..={rank}")));
        }
        out[idx - 1] += k;
    }
    Ok(out)
}

/// Renders a coefficient vector over fundamental coweights, e.g. `2*w1+w3`.
pub fn format_weights(w: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in w.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s += &format!("{}*", c.abs());
        }
        s += &format!("w{}", i + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, p: u64) -> Group {
        Group::new(GroupSpec::preset(name, p).unwrap()).unwrap()
    }

    #[test]
    fn weights_round_trip() {
        assert_eq!(parse_weights("w1+2*w3", 3).unwrap(), vec![1, 0, 2]);
        assert_eq!(parse_weights("2w2-w1", 2).unwrap(), vec![-1, 2]);
        assert_eq!(parse_weights("0", 2).unwrap(), vec![0, 0]);
        assert_eq!(format_weights(&[1, 0, 2]), "w1+2*w3");
        assert_eq!(format_weights(&[0, 0]), "0");
        assert!(parse_weights("w4", 3).is_err());
    }

    #[test]
    fn unitary_projection() {
        let pu3 = g("pu(3)", 3);
        assert_eq!(pu3.free_rank(), 1);
        assert!(pu3.torsion().is_empty());
        let a = pu3.project(&pu3.parse_coweight("1,0,0").unwrap()).unwrap();
        let b = pu3.project(&pu3.parse_coweight("0,0,-1").unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(pu3.weights(&a), vec![2]);
        assert!(pu3.pi1_invariants().1.is_empty());
        assert_eq!(pu3.norm(&a), pu3.parse_coweight("1,0,-1").unwrap());
    }

    #[test]
    fn echelonnage_types() {
        for (name, l, r) in [
            ("pu(4)", Letter::B, 2),
            ("pu(5)", Letter::C, 2),
            ("pso-ram(10)", Letter::C, 4),
            ("e6-ram-ad", Letter::F, 4),
            ("triality-ad", Letter::G, 2),
        ] {
            let gr = g(name, 0);
            assert_eq!(gr.factors[0].sigma_type, SimpleType::relaxed(l, r), "{name}");
        }
        let pu5 = g("pu(5)", 5);
        assert_eq!(pu5.scale, vec![1, 2]);
    }

    #[test]
    fn wild_twist_rejected() {
        let r = Group::new(GroupSpec::preset("pu(3)", 2).unwrap());
        assert_eq!(r.unwrap_err(), Error::WildRamification { p: 2, e: 2 });
        assert!(Group::new(GroupSpec::preset("pgl(3)", 4).unwrap()).is_err());
    }

    #[test]
    fn gl_adjoint_image() {
        let gl = g("gl(3)", 3);
        let c = gl.project(&[1, 0, 0]).unwrap();
        let ad = gl.adjoint_image(&c);
        assert_eq!(gl.adjoint().weights(&ad), vec![1, 0]);
        let central = gl.project(&[1, 1, 1]).unwrap();
        assert_eq!(gl.adjoint_image(&central), gl.adjoint().zero());
    }

    #[test]
    fn spec_round_trip() {
        for name in ["so(4)", "pu(8)", "so(8)", "e7-ad"] {
            let s = GroupSpec::preset(name, 2).unwrap();
            let text = serde_json::to_string(&s).unwrap();
            let back: GroupSpec = serde_json::from_str(&text).unwrap();
            assert_eq!(s, back);
        }
    }
}
