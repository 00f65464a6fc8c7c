//! Simple types in Bourbaki numbering and their Cartan data.
//!
//! Convention: `cartan[i][j] = <alpha_i^vee, alpha_j>`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "A" | "a" => Letter::A,
            "B" | "b" => Letter::B,
            "C" | "c" => Letter::C,
            "D" | "d" => Letter::D,
            "E" | "e" => Letter::E,
            "F" | "f" => Letter::F,
            "G" | "g" => Letter::G,
            other => return Err(Error::InvalidType(format!("unknown letter {other:?}"))),
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub letter: Letter,
    pub rank: usize,
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl SimpleType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { letter, rank })
        } else {
            Err(Error::InvalidType(format!("{letter}{rank} is not a simple type")))
        }
    }

    /// Like [`SimpleType::new`] but also admits `B1`, `C1` (both of type `A1`)
    /// and `C2 = B2` in transposed numbering; used for folded systems.
    pub(crate) fn relaxed(letter: Letter, rank: usize) -> Self {
        SimpleType { letter, rank }
    }

    /// Squared root lengths, scaled so the shortest root has length 2
    /// (except `G2`, where the short root is 2 and the long one 6).
    fn lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.letter {
            Letter::A | Letter::D | Letter::E => vec![2; n],
            Letter::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Letter::C => (0..n).map(|i| if i + 1 == n && n > 1 { 4 } else { 2 }).collect(),
            Letter::F => vec![4, 4, 2, 2],
            Letter::G => vec![2, 6],
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.letter {
            Letter::A | Letter::B | Letter::C | Letter::F | Letter::G => (1..n).map(|i| (i - 1, i)).collect(),
            Letter::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Letter::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let len = self.lengths();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            let m = len[i].max(len[j]);
            c[i][j] = -m / len[i];
            c[j][i] = -m / len[j];
        }
        c
    }

    pub fn cartan_matrix(&self) -> Matrix<i64> {
        Matrix::from_rows(&self.cartan())
    }

    /// Order of `P^vee / Q^vee`.
    pub fn connection_index(&self) -> i64 {
        match self.letter {
            Letter::A => self.rank as i64 + 1,
            Letter::B | Letter::C => 2,
            Letter::D => 4,
            Letter::E => 9 - self.rank as i64,
            Letter::F | Letter::G => 1,
        }
    }

    /// Order of the finite Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.letter {
            Letter::A => fact(n + 1),
            Letter::B | Letter::C => (1u64 << n) * fact(n),
            Letter::D => (1u64 << (n - 1)) * fact(n),
            Letter::E => match n {
                6 => 51840,
                7 => 2903040,
                _ => 696729600,
            },
            Letter::F => 1152,
            Letter::G => 12,
        }
    }
}

/// A (possibly reducible) root system given by a block-diagonal Cartan
/// matrix, with its positive roots in simple-root coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: Vec<Vec<i64>>,
    /// `(type, first index)` per irreducible block.
    pub blocks: Vec<(SimpleType, usize)>,
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates, aligned with `positive_roots`.
    pub positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn from_blocks(blocks: &[SimpleType]) -> Self {
        let n: usize = blocks.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0; n]; n];
        let mut out_blocks = Vec::new();
        let mut off = 0;
        for t in blocks {
            let c = t.cartan();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[off + i][off + j] = c[i][j];
                }
            }
            out_blocks.push((*t, off));
            off += t.rank;
        }
        Self::with_blocks(cartan, out_blocks)
    }

    pub(crate) fn with_blocks(cartan: Vec<Vec<i64>>, blocks: Vec<(SimpleType, usize)>) -> Self {
        let positive_roots = enumerate_positive_roots(&cartan);
        let d = symmetrizer(&cartan);
        let positive_coroots = positive_roots.iter().map(|r| root_to_coroot(&cartan, &d, r)).collect();
        RootSystem { cartan, blocks, positive_roots, positive_coroots }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `<mu, beta>` for `mu` in fundamental-coweight coordinates and a root
    /// in simple-root coordinates.
    pub fn pair(mu: &[i64], root: &[i64]) -> i64 {
        mu.iter().zip(root).map(|(a, b)| a * b).sum()
    }

    /// Fundamental-coweight coordinates of a coroot given in simple-coroot
    /// coordinates.
    pub fn coroot_weight(&self, coroot: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| coroot[i] * self.cartan[i][j]).sum()).collect()
    }

    pub fn simple_coroot(&self, i: usize) -> Vec<i64> {
        self.cartan[i].clone()
    }

    /// Simple reflection `s_i` acting on a coweight.
    pub fn reflect(&self, i: usize, mu: &[i64]) -> Vec<i64> {
        let k = mu[i];
        mu.iter().zip(&self.cartan[i]).map(|(m, c)| m - k * c).collect()
    }

    pub fn is_dominant(mu: &[i64]) -> bool {
        mu.iter().all(|&x| x >= 0)
    }

    /// Dominant representative of the Weyl orbit of `mu`.
    pub fn dominant(&self, mu: &[i64]) -> Vec<i64> {
        let mut v = mu.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect(i, &v);
        }
        v
    }

    /// Sum of positive roots as a functional on coweight coordinates.
    pub fn two_rho(&self) -> Vec<i64> {
        let n = self.rank();
        let mut s = vec![0; n];
        for r in &self.positive_roots {
            for k in 0..n {
                s[k] += r[k];
            }
        }
        s
    }

    pub fn height_pairing(&self, mu: &[i64]) -> i64 {
        Self::pair(mu, &self.two_rho())
    }

    /// Highest root of a block (simple-root coordinates, full length).
    pub fn highest_root(&self, block: usize) -> Vec<i64> {
        let (t, off) = self.blocks[block];
        self.positive_roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || (off..off + t.rank).contains(&k)))
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("non-empty block")
    }

    /// Coroot of the highest root of a block, in coweight coordinates.
    pub fn highest_root_coroot(&self, block: usize) -> Vec<i64> {
        let h = self.highest_root(block);
        let idx = self.positive_roots.iter().position(|r| *r == h).unwrap();
        self.coroot_weight(&self.positive_coroots[idx])
    }

    /// Minuscule dominant coweights (including zero), in coweight coordinates.
    pub fn minuscule_coweights(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut per_block: Vec<Vec<Vec<i64>>> = Vec::new();
        for (b, (t, off)) in self.blocks.iter().enumerate() {
            let h = self.highest_root(b);
            let mut opts = vec![vec![0; n]];
            for i in *off..off + t.rank {
                if h[i] == 1 {
                    opts.push(unit(n, i));
                }
            }
            per_block.push(opts);
        }
        let mut out = vec![vec![0; n]];
        for opts in per_block {
            let mut next = Vec::new();
            for base in &out {
                for o in &opts {
                    next.push(base.iter().zip(o).map(|(a, b)| a + b).collect());
                }
            }
            out = next;
        }
        out
    }

    /// Block index of a simple root.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks.iter().position(|(t, off)| (*off..off + t.rank).contains(&i)).unwrap()
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Coroot of a root, both in simple coordinates: `beta^vee_j = b_j d_j / |beta|^2`.
fn root_to_coroot(cartan: &[Vec<i64>], d: &[i64], root: &[i64]) -> Vec<i64> {
    let n = cartan.len();
    let mut norm2 = 0;
    for i in 0..n {
        for k in 0..n {
            norm2 += root[i] * root[k] * d[i] * cartan[i][k];
        }
    }
    norm2 /= 2;
    (0..n)
        .map(|j| {
            let x = root[j] * d[j];
            assert_eq!(x % norm2, 0, "non-integral coroot");
            x / norm2
        })
        .collect()
}

/// Positive integers `d_i` with `d_i * cartan[i][j]` symmetric; `d_i` is
/// proportional to the squared length of `alpha_i`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![0i64; n];
    for start in 0..n {
        if d[start] != 0 {
            continue;
        }
        d[start] = 1;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 || d[j] != 0 {
                    continue;
                }
                if (d[i] * cartan[i][j]) % cartan[j][i] != 0 {
                    let f = cartan[j][i].abs();
                    for x in d.iter_mut() {
                        *x *= f;
                    }
                }
                d[j] = d[i] * cartan[i][j] / cartan[j][i];
                stack.push(j);
            }
        }
    }
    // normalise each component so its shortest root has d = 1
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp[s] = s;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if cartan[i][j] != 0 && comp[j] == usize::MAX {
                    comp[j] = s;
                    members.push(j);
                }
            }
            k += 1;
        }
        let g = members.iter().map(|&i| d[i]).fold(0, num_integer::gcd);
        for &i in &members {
            d[i] /= g;
        }
    }
    d
}

/// Positive roots in simple-root coordinates via root strings.
pub fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..n {
                // <alpha_i^vee, r>
                let c: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - c > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up.clone());
                        roots.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}
