//! Integer matrices, Smith and Hermite normal forms, and lattice quotients.
//!
//! Everything here is generic over [`Int`]; the rest of the crate uses `i64`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Signed primitive integer usable as a matrix entry.
pub trait Int:
    num_traits::PrimInt + Signed + Integer + fmt::Debug + fmt::Display + std::hash::Hash + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: num_traits::PrimInt
        + Signed
        + Integer
        + fmt::Debug
        + fmt::Display
        + std::hash::Hash
        + Send
        + Sync
        + 'static
{
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<I> {
    rows: usize,
    cols: usize,
    data: Vec<I>,
}

impl<I: Int> Matrix<I> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![I::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = I::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<I>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<I>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<I> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<I> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<I>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[I]) -> Vec<I> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(I::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: I) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] = self[(dst, j)] + k * v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: I) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] = self[(i, dst)] + k * v;
        }
    }

    fn neg_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }

    /// Exact determinant of a square matrix (Bareiss elimination).
    pub fn det(&self) -> I {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return I::one();
        }
        let mut a = self.clone();
        let mut sign = I::one();
        let mut prev = I::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return I::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[(i, j)] = (a[(i, j)] * a[(k, k)] - a[(i, k)] * a[(k, j)]) / prev;
                }
            }
            prev = a[(k, k)];
        }
        sign * a[(n - 1, n - 1)]
    }
}

impl<I> std::ops::Index<(usize, usize)> for Matrix<I> {
    type Output = I;
    fn index(&self, (i, j): (usize, usize)) -> &I {
        &self.data[i * self.cols + j]
    }
}

impl<I> std::ops::IndexMut<(usize, usize)> for Matrix<I> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut I {
        &mut self.data[i * self.cols + j]
    }
}

impl<I: fmt::Debug> fmt::Debug for Matrix<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `u * a * v = d` with `u`, `v` unimodular.
///
/// The diagonal of `d` is non-negative and each entry divides the next;
/// `divisors` lists the first `rank` diagonal entries.
#[derive(Clone, Debug)]
pub struct Smith<I> {
    pub u: Matrix<I>,
    pub u_inv: Matrix<I>,
    pub v: Matrix<I>,
    pub d: Matrix<I>,
    pub divisors: Vec<I>,
}

impl<I: Int> Smith<I> {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Product of the non-zero elementary divisors.
    pub fn index(&self) -> I {
        self.divisors.iter().fold(I::one(), |acc, &d| acc * d)
    }
}

/// Computes the Smith normal form of `a`, tracking both transforms and the
/// inverse of the row transform.
pub fn smith<I: Int>(a: &Matrix<I>) -> Smith<I> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // pivot: smallest non-zero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d[(i, j)];
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                    u_inv.add_col(t, i, q);
                }
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // enforce divisibility of the trailing block
                let p = d[(t, t)];
                let bad = (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| !(d[(i, j)] % p).is_zero());
                match bad {
                    Some((i, _)) => {
                        d.add_row(t, i, I::one());
                        u.add_row(t, i, I::one());
                        u_inv.add_col(i, t, -I::one());
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest remaining entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..m {
                let x = d[(i, t)];
                if !x.is_zero() && x.abs() < d[best].abs() {
                    best = (i, t);
                }
            }
            for j in t..n {
                let x = d[(t, j)];
                if !x.is_zero() && x.abs() < d[best].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                u_inv.swap_cols(t, best.0);
            } else if best.1 != t {
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
            }
        }
        if d[(t, t)].is_negative() {
            d.neg_row(t);
            u.neg_row(t);
            for i in 0..m {
                u_inv[(i, t)] = -u_inv[(i, t)];
            }
        }
        t += 1;
    }
    let divisors = (0..m.min(n)).map(|i| d[(i, i)]).take_while(|x| !x.is_zero()).collect();
    Smith { u, u_inv, v, d, divisors }
}

/// Column-style Hermite normal form: returns a lower-triangular basis
/// (as columns) of the lattice spanned by the columns of `a`.
///
/// Pivots are positive and entries left of a pivot in its row are reduced
/// into `[0, pivot)`, so equal lattices give equal output.
pub fn hermite<I: Int>(a: &Matrix<I>) -> Matrix<I> {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut col = 0;
    let mut pivots = Vec::new();
    for row in 0..m {
        if col >= n {
            break;
        }
        loop {
            let nz: Vec<usize> = (col..n).filter(|&j| !h[(row, j)].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    h.swap_cols(col, j);
                }
                break;
            }
            let &jmin = nz.iter().min_by_key(|&&j| h[(row, j)].abs()).unwrap();
            h.swap_cols(col, jmin);
            for j in col + 1..n {
                let q = h[(row, j)].div_floor(&h[(row, col)]);
                if !q.is_zero() {
                    h.add_col(j, col, -q);
                }
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            for i in 0..m {
                h[(i, col)] = -h[(i, col)];
            }
        }
        let p = h[(row, col)];
        for j in 0..col {
            let q = h[(row, j)].div_floor(&p);
            if !q.is_zero() {
                h.add_col(j, col, -q);
            }
        }
        pivots.push(col);
        col += 1;
    }
    let basis: Vec<Vec<I>> = (0..col).map(|j| h.col(j)).collect();
    Matrix::from_cols(m, &basis)
}

/// A finitely generated abelian group `Z^n / L`, presented through the
/// Smith form of the relation matrix whose columns span `L`.
#[derive(Clone, Debug)]
pub struct Quotient<I> {
    smith: Smith<I>,
    ambient: usize,
}

impl<I: Int> Quotient<I> {
    pub fn new(ambient: usize, relations: &Matrix<I>) -> Self {
        assert_eq!(relations.rows(), ambient);
        Quotient { smith: smith(relations), ambient }
    }

    pub fn free_rank(&self) -> usize {
        self.ambient - self.smith.rank()
    }

    /// Elementary divisors greater than one.
    pub fn torsion(&self) -> Vec<I> {
        self.smith.divisors.iter().copied().filter(|d| *d > I::one()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion().is_empty()
    }

    /// Order of the group, or `None` when it is infinite.
    pub fn order(&self) -> Option<I> {
        (self.free_rank() == 0).then(|| self.torsion().iter().fold(I::one(), |a, &d| a * d))
    }

    /// Canonical coordinates `(free, torsion)` of the class of `x`.
    pub fn reduce(&self, x: &[I]) -> (Vec<I>, Vec<I>) {
        let y = self.smith.u.apply(x);
        let r = self.smith.rank();
        let mut torsion = Vec::new();
        for (i, &d) in self.smith.divisors.iter().enumerate() {
            if d > I::one() {
                torsion.push(y[i].mod_floor(&d));
            }
        }
        (y[r..].to_vec(), torsion)
    }

    /// A representative in `Z^n` of the class with the given coordinates.
    pub fn lift(&self, free: &[I], torsion: &[I]) -> Vec<I> {
        let r = self.smith.rank();
        let mut y = vec![I::zero(); self.ambient];
        let mut t = torsion.iter();
        for (i, &d) in self.smith.divisors.iter().enumerate() {
            if d > I::one() {
                y[i] = *t.next().expect("torsion length");
            }
        }
        y[r..].copy_from_slice(free);
        self.smith.u_inv.apply(&y)
    }

    /// Free coordinate functionals: row `k` gives the `k`-th free coordinate.
    pub fn free_rows(&self) -> Vec<Vec<I>> {
        (self.smith.rank()..self.ambient).map(|i| self.smith.u.row(i)).collect()
    }
}

/// Whether `x` lies in the column span of `basis` (over the integers).
pub fn in_lattice<I: Int>(basis: &Matrix<I>, x: &[I]) -> bool {
    let s = smith(basis);
    let y = s.u.apply(x);
    y.iter().enumerate().all(|(i, &yi)| match s.divisors.get(i) {
        Some(&d) => (yi % d).is_zero(),
        None => yi.is_zero(),
    })
}

/// Solves `a x = b` over the integers when a solution exists.
pub fn solve_integer<I: Int>(a: &Matrix<I>, b: &[I]) -> Option<Vec<I>> {
    let s = smith(a);
    let y = s.u.apply(b);
    let mut z = vec![I::zero(); a.cols()];
    for (i, &yi) in y.iter().enumerate() {
        match s.divisors.get(i) {
            Some(&d) => {
                if !(yi % d).is_zero() {
                    return None;
                }
                z[i] = yi / d;
            }
            None => {
                if !yi.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(s.v.apply(&z))
}

/// Inverse of a square integer matrix over the rationals.
pub fn rational_inverse<I: Int>(a: &Matrix<I>) -> Option<Vec<Vec<Ratio<I>>>> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut m: Vec<Vec<Ratio<I>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<I>> = (0..n).map(|j| Ratio::from_integer(a[(i, j)])).collect();
            row.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = *x * inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..2 * n {
                    let v = m[c][k];
                    m[r][k] = m[r][k] - f * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
