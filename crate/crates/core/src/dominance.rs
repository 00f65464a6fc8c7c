//! The dominance order on `X_*(T)_I`, minuscule and quasi-minuscule classes,
//! supports, covers and Hasse segments.
//!
//! Classes below a fixed `mu` are handled in coefficient space: `nu` is
//! stored as the vector `c` with `mu - nu = sum c_i alpha_i^vee-bar`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet, VecDeque};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{format_weights, Class, Group};
use crate::lattice::{rational_inverse, Matrix};

/// Default bound on `<2 rho, .>` for enumerations.
pub const DEFAULT_HEIGHT_CAP: i64 = 40;
/// Default bound on the number of visited nodes in breadth-first searches.
pub const DEFAULT_NODE_CAP: usize = 2_000_000;

/// Weights of `base - sum c_i alpha_i^vee`.
pub(crate) fn shift_weights(g: &Group, base: &[i64], c: &[i64]) -> Vec<i64> {
    let cartan = &g.system.cartan;
    (0..base.len())
        .map(|j| base[j] - c.iter().enumerate().map(|(i, &ci)| ci * cartan[i][j]).sum::<i64>())
        .collect()
}

/// Moves `(c, w)` to the dominant chamber by simple reflections.
fn dominate(g: &Group, c: &mut [i64], w: &mut [i64]) {
    let cartan = &g.system.cartan;
    while let Some(i) = w.iter().position(|&x| x < 0) {
        let k = w[i];
        // s_i(nu) = nu - k alpha_i^vee, i.e. c_i grows by k
        c[i] += k;
        for (j, x) in w.iter_mut().enumerate() {
            *x -= k * cartan[i][j];
        }
    }
}

/// Rational solution of `C^T c = d`.
pub(crate) fn solve_coefficients(g: &Group, d: &[i64]) -> Option<Vec<i64>> {
    let ct = Matrix::from_rows(&g.system.cartan).transpose();
    let inv = rational_inverse(&ct)?;
    let c: Vec<Ratio<i64>> = inv
        .iter()
        .map(|row| row.iter().zip(d).fold(Ratio::from_integer(0), |acc, (a, &b)| acc + *a * b))
        .collect();
    c.iter().all(|x| x.is_integer()).then(|| c.iter().map(|x| x.to_integer()).collect())
}

/// Integral `c` with `mu - la = sum c_i alpha_i^vee-bar`, if any (no sign condition).
pub fn coefficients(g: &Group, la: &Class, mu: &Class) -> Result<Option<Vec<i64>>> {
    g.check(la)?;
    g.check(mu)?;
    let (wl, wm) = (g.weights(la), g.weights(mu));
    let d: Vec<i64> = wm.iter().zip(&wl).map(|(a, b)| a - b).collect();
    let Some(c) = solve_coefficients(g, &d) else { return Ok(None) };
    let back = g.combine(mu, -1, &g.coroot_combination(&c));
    Ok((back == *la).then_some(c))
}

/// `la <= mu`: `mu - la` is a non-negative integral combination of simple
/// échelonnage coroots.
pub fn leq(g: &Group, la: &Class, mu: &Class) -> Result<bool> {
    Ok(coefficients(g, la, mu)?.is_some_and(|c| c.iter().all(|&x| x >= 0)))
}

fn max_pairing(g: &Group, w: &[i64]) -> i64 {
    g.system.positive_roots.iter().map(|r| crate::cartan::RootSystem::pair(w, r).abs()).max().unwrap_or(0)
}

/// Whether every échelonnage root pairs into `{0, 1, -1}`.
pub fn is_minuscule(g: &Group, mu: &Class) -> bool {
    max_pairing(g, &g.weights(mu)) <= 1
}

fn require_dominant(g: &Group, mu: &Class) -> Result<()> {
    g.check(mu)?;
    if !g.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    Ok(())
}

/// Coefficients of `mu - la` for the minuscule `la <= mu`.
fn minuscule_coefficients(g: &Group, w_mu: &[i64]) -> Vec<i64> {
    let r = w_mu.len();
    let mut c = vec![0; r];
    let mut w = w_mu.to_vec();
    loop {
        let Some((_, coroot)) = g
            .system
            .positive_roots
            .iter()
            .zip(&g.system.positive_coroots)
            .find(|(b, _)| crate::cartan::RootSystem::pair(&w, b) >= 2)
        else {
            return c;
        };
        for (ci, bi) in c.iter_mut().zip(coroot) {
            *ci += bi;
        }
        w = shift_weights(g, w_mu, &c);
        dominate(g, &mut c, &mut w);
    }
}

/// The unique minuscule class below a dominant class.
pub fn minuscule_below(g: &Group, mu: &Class) -> Result<Class> {
    require_dominant(g, mu)?;
    let c = minuscule_coefficients(g, &g.weights(mu));
    Ok(g.combine(mu, -1, &g.coroot_combination(&c)))
}

/// `supp(mu - la)` for the minuscule `la <= mu` (0-based indices).
pub fn support(g: &Group, mu: &Class) -> Result<Vec<usize>> {
    require_dominant(g, mu)?;
    let c = minuscule_coefficients(g, &g.weights(mu));
    Ok((0..c.len()).filter(|&i| c[i] > 0).collect())
}

/// Coefficients (in simple échelonnage coroots) of the quasi-minuscule
/// element of a block: the dominant positive coroot of least height.
pub fn quasi_minuscule_coefficients(g: &Group, block: usize) -> Vec<i64> {
    let (t, off) = g.system.blocks[block];
    g.system
        .positive_coroots
        .iter()
        .filter(|c| c.iter().enumerate().all(|(k, &x)| x == 0 || (off..off + t.rank).contains(&k)))
        .filter(|c| g.system.coroot_weight(c).iter().all(|&x| x >= 0))
        .min_by_key(|c| c.iter().sum::<i64>())
        .cloned()
        .expect("every block has a dominant coroot")
}

pub fn quasi_minuscule(g: &Group, block: usize) -> Class {
    g.coroot_combination(&quasi_minuscule_coefficients(g, block))
}

/// Coefficients of the factorwise quasi-minuscule element.
pub fn factorwise_qm_coefficients(g: &Group) -> Vec<i64> {
    let mut c = vec![0; g.rank()];
    for b in 0..g.system.blocks.len() {
        for (x, y) in c.iter_mut().zip(quasi_minuscule_coefficients(g, b)) {
            *x += y;
        }
    }
    c
}

pub fn factorwise_qm(g: &Group) -> Class {
    g.coroot_combination(&factorwise_qm_coefficients(g))
}

fn check_height(g: &Group, mu: &Class, cap: i64) -> Result<()> {
    let h = g.height(mu);
    if h > cap {
        return Err(Error::CapExceeded(format!("height {h} above cap {cap}")));
    }
    Ok(())
}

/// Coefficient vectors of all dominant classes below `mu` (including `mu`),
/// by closure under `nu -> dom(nu - j beta^vee)`.
pub(crate) fn down_coefficients(g: &Group, w_mu: &[i64]) -> Vec<Vec<i64>> {
    let r = w_mu.len();
    let start = vec![0; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let w = shift_weights(g, w_mu, &c);
        for (b, bv) in g.system.positive_roots.iter().zip(&g.system.positive_coroots) {
            let m = crate::cartan::RootSystem::pair(&w, b);
            for j in 1..=m {
                let mut c2: Vec<i64> = c.iter().zip(bv).map(|(x, y)| x + j * y).collect();
                let mut w2 = shift_weights(g, w_mu, &c2);
                dominate(g, &mut c2, &mut w2);
                if seen.insert(c2.clone()) {
                    queue.push_back(c2);
                }
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

/// All dominant classes `la <= mu`.
pub fn down_set(g: &Group, mu: &Class, height_cap: i64) -> Result<Vec<Class>> {
    require_dominant(g, mu)?;
    check_height(g, mu, height_cap)?;
    let w = g.weights(mu);
    let mut out: Vec<Class> =
        down_coefficients(g, &w).iter().map(|c| g.combine(mu, -1, &g.coroot_combination(c))).collect();
    sort_classes(g, &mut out);
    Ok(out)
}

/// Exhaustive oracle: every `c >= 0` with `2 sum c <= <2 rho, mu>` whose
/// `mu - sum c alpha^vee` is dominant.
pub fn down_set_box(g: &Group, mu: &Class) -> Vec<Class> {
    let w = g.weights(mu);
    let budget = g.height(mu) / 2;
    let mut out = Vec::new();
    for c in compositions(g.rank(), budget) {
        if shift_weights(g, &w, &c).iter().all(|&x| x >= 0) {
            out.push(g.combine(mu, -1, &g.coroot_combination(&c)));
        }
    }
    sort_classes(g, &mut out);
    out
}

/// All `c in Z_{>=0}^r` with `sum c <= budget`.
pub(crate) fn compositions(r: usize, budget: i64) -> Vec<Vec<i64>> {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if budget >= 0 {
        rec(0, budget, &mut vec![0; r], &mut out);
    }
    out
}

/// Deterministic order: by height, then by weights in decreasing
/// lexicographic order.
pub fn sort_classes(g: &Group, v: &mut [Class]) {
    v.sort_by_cached_key(|c| {
        let w = g.weights(c);
        (g.height(c), std::cmp::Reverse(w), c.clone())
    });
}

fn label(c: &[i64]) -> Vec<usize> {
    (0..c.len()).filter(|&i| c[i] > 0).collect()
}

/// The classes covered by `mu`, each with `supp(mu - la)`.
pub fn covers(g: &Group, mu: &Class, height_cap: i64) -> Result<Vec<(Class, Vec<usize>)>> {
    require_dominant(g, mu)?;
    check_height(g, mu, height_cap)?;
    let w = g.weights(mu);
    let all = down_coefficients(g, &w);
    let below: Vec<&Vec<i64>> = all.iter().filter(|c| c.iter().any(|&x| x != 0)).collect();
    let mut out = Vec::new();
    for c in &below {
        // c is maximal if no other element d has 0 < d <= c coordinatewise
        let dominated = below.iter().any(|d| d != c && d.iter().zip(c.iter()).all(|(x, y)| x <= y));
        if !dominated {
            out.push((g.combine(mu, -1, &g.coroot_combination(c)), label(c)));
        }
    }
    out.sort_by_cached_key(|(cl, _)| (std::cmp::Reverse(g.height(cl)), std::cmp::Reverse(g.weights(cl))));
    Ok(out)
}

/// The dominant minuscule classes, one per realizable component, in the
/// order used for component indices.
pub fn minuscule_classes(g: &Group) -> Vec<Class> {
    let mut out: Vec<Class> =
        g.system.minuscule_coweights().iter().filter_map(|w| g.class_with_weights(w)).collect();
    sort_classes(g, &mut out);
    out.dedup();
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HasseNode {
    pub name: String,
    pub weights: Vec<i64>,
    pub height: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    /// 1-based simple indices.
    pub label: Vec<usize>,
}

/// Initial segment of one component of the dominance order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HasseSegment {
    pub group: String,
    pub component: usize,
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<HasseEdge>,
}

/// All dominant classes of a component with `<2 rho, .> <= cap`, with their
/// covering relations.
pub fn hasse_segment(g: &Group, component: usize, height_cap: i64) -> Result<HasseSegment> {
    let mins = minuscule_classes(g);
    let base = mins.get(component).ok_or_else(|| {
        Error::Parse(format!("component {component} out of range (the group has {} components)", mins.len()))
    })?;
    if height_cap > 4 * DEFAULT_HEIGHT_CAP {
        return Err(Error::CapExceeded(format!("height cap {height_cap}")));
    }
    let wb = g.weights(base);
    let hb = g.height(base);
    let mut pts: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    if hb <= height_cap {
        for c in compositions(g.rank(), (height_cap - hb) / 2) {
            let neg: Vec<i64> = c.iter().map(|x| -x).collect();
            let w = shift_weights(g, &wb, &neg);
            if w.iter().all(|&x| x >= 0) {
                pts.push((c, w));
            }
        }
    }
    pts.sort_by_cached_key(|(c, w)| (hb + 2 * c.iter().sum::<i64>(), std::cmp::Reverse(w.clone())));
    let nodes: Vec<HasseNode> = pts
        .iter()
        .map(|(c, w)| HasseNode { name: format_weights(w), weights: w.clone(), height: hb + 2 * c.iter().sum::<i64>() })
        .collect();
    let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut edges = Vec::new();
    for (j, (cj, _)) in pts.iter().enumerate() {
        let below: Vec<usize> = (0..pts.len()).filter(|&i| i != j && le(&pts[i].0, cj)).collect();
        for &i in &below {
            let covered = !below.iter().any(|&k| k != i && le(&pts[i].0, &pts[k].0));
            if covered {
                let d: Vec<i64> = cj.iter().zip(&pts[i].0).map(|(a, b)| a - b).collect();
                edges.push(HasseEdge { from: i, to: j, label: label(&d).iter().map(|x| x + 1).collect() });
            }
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(HasseSegment { group: g.name(), component, nodes, edges })
}

fn bh_target(g: &Group, la: &Class, mu: &Class) -> Result<Option<Vec<i64>>> {
    coefficients(g, la, mu)
}

/// Besson–Hong order on all of `X_*(T)_I`: reachability from `mu` by steps
/// `nu -> nu - k beta^vee` with `0 <= k <= <nu, beta>`, or
/// `nu -> nu + k beta^vee` with `0 <= k < -<nu, beta>`.
///
/// Searches best-first towards `la`, so comparable pairs usually finish
/// long before the down-set of `mu` is exhausted.
pub fn besson_hong_leq(g: &Group, la: &Class, mu: &Class, node_cap: usize) -> Result<bool> {
    let Some(target) = bh_target(g, la, mu)? else { return Ok(false) };
    let w_mu = g.weights(mu);
    let dist = |c: &[i64]| -> i64 { c.iter().zip(&target).map(|(x, y)| (x - y) * (x - y)).sum() };
    let start = vec![0; w_mu.len()];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut heap = BinaryHeap::from([(Reverse(dist(&start)), start)]);
    while let Some((Reverse(d), c)) = heap.pop() {
        if d == 0 {
            return Ok(true);
        }
        let w = shift_weights(g, &w_mu, &c);
        for (b, bv) in g.system.positive_roots.iter().zip(&g.system.positive_coroots) {
            let m = crate::cartan::RootSystem::pair(&w, b);
            let steps: Vec<i64> = if m > 0 { (1..=m).collect() } else { (1..-m).map(|k| -k).collect() };
            for k in steps {
                let c2: Vec<i64> = c.iter().zip(bv).map(|(x, y)| x + k * y).collect();
                if seen.insert(c2.clone()) {
                    if seen.len() > node_cap {
                        return Err(Error::CapExceeded(format!("more than {node_cap} classes")));
                    }
                    heap.push((Reverse(dist(&c2)), c2));
                }
            }
        }
    }
    Ok(false)
}

/// Coefficient vectors (relative to `mu`) of everything below `mu` in the
/// Besson–Hong order.
pub fn besson_hong_down(g: &Group, mu: &Class, node_cap: usize) -> Result<HashSet<Vec<i64>>> {
    let w_mu = g.weights(mu);
    let r = w_mu.len();
    let start = vec![0; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let w = shift_weights(g, &w_mu, &c);
        for (b, bv) in g.system.positive_roots.iter().zip(&g.system.positive_coroots) {
            let m = crate::cartan::RootSystem::pair(&w, b);
            let steps: Vec<i64> = if m > 0 { (1..=m).collect() } else { (1..-m).map(|k| -k).collect() };
            for k in steps {
                let c2: Vec<i64> = c.iter().zip(bv).map(|(x, y)| x + k * y).collect();
                if seen.insert(c2.clone()) {
                    if seen.len() > node_cap {
                        return Err(Error::CapExceeded(format!("more than {node_cap} classes")));
                    }
                    queue.push_back(c2);
                }
            }
        }
    }
    Ok(seen)
}

/// Dimension of the Iwahori orbit of a translation in the affine
/// Grassmannian, from the pairings with positive roots.
pub fn iwahori_orbit_dimension(g: &Group, w: &[i64]) -> i64 {
    g.system
        .positive_roots
        .iter()
        .map(|b| {
            let m = crate::cartan::RootSystem::pair(w, b);
            if m > 0 {
                m
            } else if m < 0 {
                -m - 1
            } else {
                0
            }
        })
        .sum()
}

/// Oracle for the Besson–Hong order: downward closure under covers
/// `nu -> nu - j beta^vee` (any integer `j`) that drop the orbit
/// dimension by exactly one.
pub fn cover_bfs_down(g: &Group, mu: &Class) -> HashSet<Vec<i64>> {
    let w_mu = g.weights(mu);
    let r = w_mu.len();
    let start = vec![0; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let w = shift_weights(g, &w_mu, &c);
        let len = iwahori_orbit_dimension(g, &w);
        if len == 0 {
            continue;
        }
        for (b, bv) in g.system.positive_roots.iter().zip(&g.system.positive_coroots) {
            let m = crate::cartan::RootSystem::pair(&w, b);
            let (lo, hi) = ((m - len).div_euclid(2) - 1, (m + len).div_euclid(2) + 1);
            for j in lo..=hi {
                if j == 0 {
                    continue;
                }
                let c2: Vec<i64> = c.iter().zip(bv).map(|(x, y)| x + j * y).collect();
                let w2 = shift_weights(g, &w_mu, &c2);
                if iwahori_orbit_dimension(g, &w2) == len - 1 && seen.insert(c2.clone()) {
                    queue.push_back(c2);
                }
            }
        }
    }
    seen
}

pub fn cover_bfs_leq(g: &Group, la: &Class, mu: &Class) -> Result<bool> {
    let Some(target) = bh_target(g, la, mu)? else { return Ok(false) };
    Ok(cover_bfs_down(g, mu).contains(&target))
}

/// Up-set membership helper: all elements of `set` that are `>= la`.
pub fn up_closed_part(g: &Group, set: &[Class], la: &Class) -> Result<BTreeSet<Class>> {
    let mut out = BTreeSet::new();
    for c in set {
        if leq(g, la, c)? {
            out.insert(c.clone());
        }
    }
    Ok(out)
}

/// Memo of `support` keyed by weights, for repeated queries in one group.
#[derive(Default)]
pub struct SupportCache(HashMap<Vec<i64>, Vec<usize>>);

impl SupportCache {
    pub fn get(&mut self, g: &Group, mu: &Class) -> Result<Vec<usize>> {
        let w = g.weights(mu);
        if let Some(s) = self.0.get(&w) {
            return Ok(s.clone());
        }
        let s = support(g, mu)?;
        self.0.insert(w, s.clone());
        Ok(s)
    }
}
