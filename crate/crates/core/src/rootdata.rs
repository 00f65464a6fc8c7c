//! Absolute root data: isogeny lattices, pairings and fundamental coweights.
//!
//! A datum lives on `X = Z^N`.  Simple coroots are integer vectors and
//! simple roots integer covectors; the last `central_rank` coordinates are
//! killed by every root.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cartan::{RootSystem, SimpleType};
use crate::error::{Error, Result};
use crate::lattice::{hermite, rational_inverse, solve_integer, Matrix};

/// Cocharacter lattice of a simple factor, between `Q^vee` and `P^vee`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IsogenyLattice {
    Named(NamedLattice),
    /// Basis vectors in fundamental-coweight coordinates.
    Basis { basis: Vec<Vec<i64>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedLattice {
    #[serde(rename = "sc")]
    SimplyConnected,
    #[serde(rename = "ad")]
    Adjoint,
    #[serde(rename = "SO")]
    SO,
    #[serde(rename = "half_spin")]
    HalfSpin,
    #[serde(rename = "half_spin_prime")]
    HalfSpinPrime,
    /// `Z^{n+1}` with coroots `e_i - e_{i+1}`; type `A_n` only.
    #[serde(rename = "gl")]
    General,
}

impl IsogenyLattice {
    pub const SC: IsogenyLattice = IsogenyLattice::Named(NamedLattice::SimplyConnected);
    pub const AD: IsogenyLattice = IsogenyLattice::Named(NamedLattice::Adjoint);

    /// Lattice basis (as columns) in fundamental-coweight coordinates.
    pub fn basis(&self, t: SimpleType) -> Result<Matrix<i64>> {
        let n = t.rank;
        let cartan = t.cartan();
        let coroots: Vec<Vec<i64>> = cartan.clone();
        let with_extra = |extra: Vec<i64>| {
            let mut gens = coroots.clone();
            gens.push(extra);
            hermite(&Matrix::from_cols(n, &gens))
        };
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let is_d = t.letter == crate::cartan::Letter::D;
        let b = match self {
            IsogenyLattice::Named(NamedLattice::SimplyConnected) => hermite(&Matrix::from_cols(n, &coroots)),
            IsogenyLattice::Named(NamedLattice::Adjoint) => Matrix::identity(n),
            IsogenyLattice::Named(NamedLattice::SO) if is_d => with_extra(unit(0)),
            IsogenyLattice::Named(NamedLattice::HalfSpin) if is_d && n % 2 == 0 => with_extra(unit(n - 1)),
            IsogenyLattice::Named(NamedLattice::HalfSpinPrime) if is_d && n % 2 == 0 => with_extra(unit(n - 2)),
            IsogenyLattice::Named(NamedLattice::General) => {
                return Err(Error::InvalidLattice("the gl lattice is not inside P^vee".into()));
            }
            IsogenyLattice::Named(other) => {
                return Err(Error::InvalidLattice(format!("{other:?} is not defined for {t}")));
            }
            IsogenyLattice::Basis { basis } => {
                if basis.len() != n || basis.iter().any(|v| v.len() != n) {
                    return Err(Error::InvalidLattice(format!("basis for {t} must be {n} vectors of length {n}")));
                }
                let m = Matrix::from_cols(n, basis);
                check_basis(&m, &Matrix::from_cols(n, &coroots))?;
                m
            }
        };
        Ok(b)
    }
}

/// Checks that the columns of `b` form a full-rank lattice containing the
/// columns of `coroots`.
pub(crate) fn check_basis(b: &Matrix<i64>, coroots: &Matrix<i64>) -> Result<()> {
    if b.det() == 0 {
        return Err(Error::InvalidLattice("basis is not of full rank".into()));
    }
    for j in 0..coroots.cols() {
        if solve_integer(b, &coroots.col(j)).is_none() {
            return Err(Error::InvalidLattice(format!("lattice does not contain simple coroot {}", j + 1)));
        }
    }
    Ok(())
}

/// Absolute root datum on `Z^N`.
#[derive(Clone, Debug)]
pub struct RootDatumAbs {
    /// Cocharacter rank `N`.
    pub dim: usize,
    pub central_rank: usize,
    /// Simple coroots, each of length `N`.
    pub coroots: Vec<Vec<i64>>,
    /// Simple roots as covectors of length `N`.
    pub roots: Vec<Vec<i64>>,
    /// Semisimple lattice basis in fundamental-coweight coordinates (columns),
    /// when the datum was built from one.
    pub basis: Option<Matrix<i64>>,
    pub system: RootSystem,
}

impl RootDatumAbs {
    /// Datum whose semisimple part has lattice basis `b` (columns in
    /// fundamental-coweight coordinates of `system`), plus `central_rank`
    /// central coordinates.
    pub fn from_basis(system: RootSystem, b: Matrix<i64>, central_rank: usize) -> Result<Self> {
        let n = system.rank();
        check_basis(&b, &Matrix::from_rows(&system.cartan).transpose())?;
        let dim = n + central_rank;
        let coroots = (0..n)
            .map(|i| {
                let mut v = solve_integer(&b, &system.cartan[i]).expect("checked above");
                v.resize(dim, 0);
                v
            })
            .collect();
        let roots = (0..n)
            .map(|j| {
                let mut r = b.row(j);
                r.resize(dim, 0);
                r
            })
            .collect();
        Ok(RootDatumAbs { dim, central_rank, coroots, roots, basis: Some(b), system })
    }

    /// Datum given directly by coroot vectors and root covectors.
    pub fn from_vectors(system: RootSystem, coroots: Vec<Vec<i64>>, roots: Vec<Vec<i64>>) -> Result<Self> {
        let n = system.rank();
        let dim = coroots.first().map_or(0, |v| v.len());
        if coroots.len() != n || roots.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: coroots.len().min(roots.len()) });
        }
        for i in 0..n {
            for j in 0..n {
                if pairing(&coroots[i], &roots[j]) != system.cartan[i][j] {
                    return Err(Error::InvalidLattice("coroots and roots do not pair to the Cartan matrix".into()));
                }
            }
        }
        let m = Matrix::from_cols(dim, &coroots);
        if crate::lattice::smith(&m).rank() != n {
            return Err(Error::InvalidLattice("coroots are linearly dependent".into()));
        }
        let central_rank = dim - n;
        Ok(RootDatumAbs { dim, central_rank, coroots, roots, basis: None, system })
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// Simple-root pairings `(<mu, alpha_j>)_j`, i.e. the image in `P^vee`.
    pub fn to_coweight(&self, mu: &[i64]) -> Vec<i64> {
        self.roots.iter().map(|r| pairing(mu, r)).collect()
    }

    /// Sum of the positive roots as a covector on `X`.
    pub fn two_rho(&self) -> Vec<i64> {
        let tr = self.system.two_rho();
        let mut out = vec![0; self.dim];
        for (j, &c) in tr.iter().enumerate() {
            for (k, x) in out.iter_mut().enumerate() {
                *x += c * self.roots[j][k];
            }
        }
        out
    }

    /// Coroot of a positive root (given in simple-root coordinates of the
    /// system) as a vector in `X`.
    pub fn coroot_vector(&self, simple_coords: &[i64]) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        for (i, &c) in simple_coords.iter().enumerate() {
            for (k, x) in v.iter_mut().enumerate() {
                *x += c * self.coroots[i][k];
            }
        }
        v
    }

    /// Index `[X cap Q Phi^vee : Z Phi^vee]` of the coroot lattice in its saturation.
    pub fn coroot_saturation_index(&self) -> i64 {
        let m = Matrix::from_cols(self.dim, &self.coroots);
        crate::lattice::smith(&m).index()
    }
}

/// Datum of `GL_{n+1}` on `Z^{n+1}`.
pub fn general_linear_datum(n: usize) -> Result<RootDatumAbs> {
    let t = SimpleType::new(crate::cartan::Letter::A, n)?;
    let vecs: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n + 1];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    RootDatumAbs::from_vectors(RootSystem::from_blocks(&[t]), vecs.clone(), vecs)
}

/// Builds the datum of a single simple factor.
pub fn build_root_datum(t: SimpleType, lat: &IsogenyLattice, central_rank: usize) -> Result<RootDatumAbs> {
    let b = lat.basis(t)?;
    RootDatumAbs::from_basis(RootSystem::from_blocks(&[t]), b, central_rank)
}

/// Natural pairing of a cocharacter with a character.
pub fn pairing(mu: &[i64], chi: &[i64]) -> i64 {
    assert_eq!(mu.len(), chi.len(), "pairing of vectors of different length");
    mu.iter().zip(chi).map(|(a, b)| a * b).sum()
}

/// A fundamental coweight in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCoweight {
    pub coords: Vec<Ratio<i64>>,
    pub in_lattice: bool,
}

/// The fundamental coweights `omega_i^vee`, expressed in lattice coordinates
/// with zero central component.
pub fn fundamental_coweights(d: &RootDatumAbs) -> Vec<FundamentalCoweight> {
    let n = d.rank();
    // Columns of the semisimple block of the root matrix restricted to the
    // span of the coroots: solve <x, alpha_j> = delta_ij with x in Q Phi^vee.
    let m = Matrix::from_cols(d.dim, &d.coroots);
    // Pairing matrix of coroots with roots is the Cartan matrix; so
    // omega_i = sum_k (C^{-1})_{ik} alpha_k^vee.
    let cinv = rational_inverse(&Matrix::from_rows(&d.system.cartan)).expect("Cartan matrix is invertible");
    (0..n)
        .map(|i| {
            let coords: Vec<Ratio<i64>> = (0..d.dim)
                .map(|r| (0..n).fold(Ratio::from_integer(0), |acc, k| acc + cinv[i][k] * m[(r, k)]))
                .collect();
            let in_lattice = coords.iter().all(|c| c.is_integer());
            FundamentalCoweight { coords, in_lattice }
        })
        .collect()
}

/// Coefficients `c` with `mu - la = sum c_i alpha_i^vee` in `X`, if they exist.
pub fn coroot_coefficients(d: &RootDatumAbs, mu: &[i64], la: &[i64]) -> Option<Vec<i64>> {
    let diff: Vec<i64> = mu.iter().zip(la).map(|(a, b)| a - b).collect();
    solve_integer(&Matrix::from_cols(d.dim, &d.coroots), &diff)
}

/// Absolute dominance order on `X`.
pub fn abs_leq(d: &RootDatumAbs, la: &[i64], mu: &[i64]) -> bool {
    coroot_coefficients(d, mu, la).is_some_and(|c| c.iter().all(|&x| x >= 0))
}

/// `<2 rho, mu - la>` for `la <= mu`.
pub fn schubert_dimension(d: &RootDatumAbs, mu: &[i64], la: &[i64]) -> Result<i64> {
    if mu.len() != d.dim || la.len() != d.dim {
        return Err(Error::DimensionMismatch { expected: d.dim, got: mu.len().min(la.len()) });
    }
    if !abs_leq(d, la, mu) {
        return Err(Error::NotComparable);
    }
    let diff: Vec<i64> = mu.iter().zip(la).map(|(a, b)| a - b).collect();
    Ok(pairing(&diff, &d.two_rho()))
}
