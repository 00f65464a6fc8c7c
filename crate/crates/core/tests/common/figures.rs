//! The Hasse diagram segments drawn in the appendix figures, as data.

use schubert_core::dominance::{hasse_segment, minuscule_classes, HasseSegment};
use schubert_core::group::format_weights;
use schubert_core::{Group, GroupSpec};

pub struct Figure {
    pub title: String,
    pub preset: String,
    /// Name of the minuscule class of the component.
    pub component: String,
    pub nodes: Vec<String>,
    /// Covers; `None` marks an arrow drawn without a label.
    pub edges: Vec<(String, String, Option<Vec<usize>>)>,
}

fn w(n: usize, terms: &[(i64, usize)]) -> String {
    let mut v = vec![0; n];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    format_weights(&v)
}

fn range(a: usize, b: usize) -> Option<Vec<usize>> {
    Some((a..=b).collect())
}

fn except(n: usize, skip: usize) -> Option<Vec<usize>> {
    Some((1..=n).filter(|&i| i != skip).collect())
}

struct Builder {
    n: usize,
    nodes: Vec<String>,
    edges: Vec<(String, String, Option<Vec<usize>>)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, nodes: Vec::new(), edges: Vec::new() }
    }

    fn node(&mut self, terms: &[(i64, usize)]) -> String {
        let s = w(self.n, terms);
        if !self.nodes.contains(&s) {
            self.nodes.push(s.clone());
        }
        s
    }

    fn edge(&mut self, a: &[(i64, usize)], b: &[(i64, usize)], label: Option<Vec<usize>>) {
        let (a, b) = (self.node(a), self.node(b));
        self.edges.push((a, b, label));
    }

    fn finish(self, title: &str, preset: &str, component: &[(i64, usize)]) -> Figure {
        Figure {
            title: title.into(),
            preset: preset.into(),
            component: w(self.n, component),
            nodes: self.nodes,
            edges: self.edges,
        }
    }
}

fn type_b(n: usize) -> Vec<Figure> {
    let preset = format!("so({})", 2 * n + 1);
    let mut z = Builder::new(n);
    z.edge(&[], &[(1, 2)], None);
    let nt = if n % 2 == 1 { n } else { n - 1 };
    let mut b = Builder::new(n);
    b.node(&[(1, 1)]);
    let mut k = 1;
    while k + 2 <= nt {
        let label = if k <= 3 { range(k + 1, n) } else { None };
        b.edge(&[(1, k)], &[(1, k + 2)], label);
        k += 2;
    }
    let mut k = 3;
    while k <= nt {
        let label = if k == 3 { range(1, 2) } else { None };
        b.edge(&[(1, k)], &[(1, 1), (1, k - 1)], label);
        if k + 2 <= nt {
            b.edge(&[(1, 1), (1, k - 1)], &[(1, 1), (1, k + 1)], None);
        }
        k += 2;
    }
    vec![
        z.finish(&format!("B{n}-0"), &preset, &[]),
        b.finish(&format!("B{n}-1"), &preset, &[(1, 1)]),
    ]
}

fn type_c(n: usize) -> Vec<Figure> {
    let preset = format!("psp({})", 2 * n);
    let c = |k: usize| -> Vec<(i64, usize)> {
        match k {
            0 => vec![],
            k if k == n => vec![(2, n)],
            k => vec![(1, k)],
        }
    };
    let d = |k: usize| -> Vec<(i64, usize)> {
        let mut v = c(k);
        v.push((1, 1));
        v
    };
    let mut b = Builder::new(n);
    for k in 0..n {
        b.edge(&c(k), &c(k + 1), range(k + 1, n));
    }
    for k in 2..=n {
        b.edge(&c(k), &d(k - 1), range(1, k - 1));
    }
    for k in 1..n {
        b.edge(&d(k), &d(k + 1), range(k + 1, n));
    }
    vec![b.finish(&format!("C{n}-0"), &preset, &[])]
}

fn type_d4() -> Vec<Figure> {
    let p = "pso(8)";
    let mut z = Builder::new(4);
    z.edge(&[], &[(1, 2)], range(1, 4));
    z.edge(&[(1, 2)], &[(2, 1)], Some(vec![1]));
    z.edge(&[(1, 2)], &[(2, 3)], Some(vec![3]));
    z.edge(&[(1, 2)], &[(2, 4)], Some(vec![4]));
    let top = [(1, 1), (1, 3), (1, 4)];
    z.edge(&[(2, 1)], &top, Some(vec![2, 3, 4]));
    // drawn with the label {5, ..., n}, which is empty for n = 4
    z.edge(&[(2, 3)], &top, Some(vec![1, 2, 4]));
    z.edge(&[(2, 4)], &top, Some(vec![1, 2, 3]));
    let chain = |m: usize, mid: [(i64, usize); 2], top: [(i64, usize); 2], l1: Vec<usize>, l2: Vec<usize>| {
        let mut b = Builder::new(4);
        b.edge(&[(1, m)], &mid, Some(l1));
        b.edge(&mid, &top, Some(l2));
        b.finish(&format!("D4-w{m}"), p, &[(1, m)])
    };
    vec![
        z.finish("D4-0", p, &[]),
        chain(1, [(1, 3), (1, 4)], [(1, 1), (1, 2)], vec![2, 3, 4], vec![1, 2]),
        chain(3, [(1, 1), (1, 4)], [(1, 2), (1, 3)], vec![1, 2, 4], vec![2, 3]),
        chain(4, [(1, 1), (1, 3)], [(1, 2), (1, 4)], vec![1, 2, 3], vec![2, 4]),
    ]
}

/// The "spin" components of `D_n`: `w_{n-1}` and `w_n`.
fn d_spin(n: usize, p: &str) -> Vec<Figure> {
    let mut a = Builder::new(n);
    a.edge(&[(1, n - 1)], &[(1, 1), (1, n)], except(n, n - 1));
    a.edge(&[(1, 1), (1, n)], &[(1, 2), (1, n - 1)], range(2, n - 1));
    let mut b = Builder::new(n);
    b.edge(&[(1, n)], &[(1, 1), (1, n - 1)], range(1, n - 1));
    let mut l = (2..=n - 2).collect::<Vec<_>>();
    l.push(n);
    b.edge(&[(1, 1), (1, n - 1)], &[(1, 2), (1, n)], Some(l));
    vec![a.finish(&format!("D{n}-w{}", n - 1), p, &[(1, n - 1)]), b.finish(&format!("D{n}-w{n}"), p, &[(1, n)])]
}

/// Chain `w_s, w_{s+2}, ..., w_e` with the second row `w1 + w_{k-1}`
/// below each `w_k`, `k > 1` (`w1 + w0` meaning `2 w1`).
fn d_ladder(b: &mut Builder, s: usize, e: usize) {
    let n = b.n;
    let at = |k: usize| -> Vec<(i64, usize)> { if k == 0 { vec![] } else { vec![(1, k)] } };
    let below = |k: usize| -> Vec<(i64, usize)> { vec![(1, 1), (1, k - 1)] };
    let mut k = s;
    while k + 2 <= e {
        b.edge(&at(k), &at(k + 2), range(k + 1, n));
        k += 2;
    }
    let mut k = if s == 1 { 3 } else { s };
    while k <= e {
        b.edge(&at(k), &below(k), range(1, k - 1));
        if k + 2 <= e {
            b.edge(&below(k), &below(k + 2), range(k, n));
        }
        k += 2;
    }
}

/// The end of a ladder at `w_m`: `w_m -> 2w_{n-1}, 2w_n -> w1+w_{n-1}+w_n`.
fn d_fork(b: &mut Builder, m: usize) {
    let n = b.n;
    let top = [(1, 1), (1, n - 1), (1, n)];
    b.edge(&[(1, m)], &[(2, n - 1)], Some(vec![n - 1]));
    b.edge(&[(1, m)], &[(2, n)], Some(vec![n]));
    b.edge(&[(2, n - 1)], &top, except(n, n - 1));
    b.edge(&[(2, n)], &top, range(1, n - 1));
    b.edge(&[(1, 1), (1, m - 1)], &top, range(m, n));
}

/// The end of a ladder at `w_m`, `m = n - 3`: `w_m -> w_{n-1}+w_n -> w1+w_{n-2}`.
fn d_join(b: &mut Builder, m: usize) {
    let n = b.n;
    let at = |k: usize| -> Vec<(i64, usize)> { if k == 0 { vec![] } else { vec![(1, k)] } };
    let pair = [(1, n - 1), (1, n)];
    // drawn as w1+w_{n-2}+w_n, which lies in another component
    let low = [(1, 1), (1, n - 2)];
    b.edge(&at(m), &pair, range(m + 1, n));
    b.edge(&pair, &low, range(1, n - 2));
    if m >= 2 {
        b.edge(&[(1, 1), (1, m - 1)], &low, range(m, n));
    }
}

fn type_d(n: usize) -> Vec<Figure> {
    let p = format!("pso({})", 2 * n);
    let mut z = Builder::new(n);
    z.edge(&[], &[(1, 2)], range(1, n));
    let mut o = Builder::new(n);
    o.node(&[(1, 1)]);
    if n % 2 == 0 {
        d_ladder(&mut z, 2, n - 2);
        d_fork(&mut z, n - 2);
        d_ladder(&mut o, 1, n - 3);
        d_join(&mut o, n - 3);
    } else {
        d_ladder(&mut z, 2, n - 3);
        d_join(&mut z, n - 3);
        d_ladder(&mut o, 1, n - 2);
        d_fork(&mut o, n - 2);
    }
    let mut out = vec![z.finish(&format!("D{n}-0"), &p, &[]), o.finish(&format!("D{n}-w1"), &p, &[(1, 1)])];
    out.extend(d_spin(n, &p));
    out
}

pub fn figures() -> Vec<Figure> {
    let mut out = Vec::new();
    for n in 3..=5 {
        out.extend(type_b(n));
    }
    for n in 2..=4 {
        out.extend(type_c(n));
    }
    out.extend(type_d4());
    out.extend(type_d(5));
    out.extend(type_d(6));
    out
}

/// The computed segment of a figure's component, its component index and
/// the height cap: the largest height among the drawn nodes.
pub fn segment(fig: &Figure) -> Result<(HasseSegment, usize, i64), String> {
    let g = Group::new(GroupSpec::preset(&fig.preset, 0).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let comp = minuscule_classes(&g)
        .iter()
        .position(|c| format_weights(&g.weights(c)) == fig.component)
        .ok_or_else(|| format!("{}: no component {}", fig.title, fig.component))?;
    let mut cap = 0;
    loop {
        let seg = hasse_segment(&g, comp, cap).map_err(|e| e.to_string())?;
        if fig.nodes.iter().all(|n| seg.nodes.iter().any(|m| &m.name == n)) {
            return Ok((seg, comp, cap));
        }
        cap += 1;
        if cap > 80 {
            return Err(format!("{}: drawn nodes not found", fig.title));
        }
    }
}

/// Drawn nodes are a down-closed part of the segment, and the covers among
/// them are exactly the drawn arrows, with matching labels where drawn.
pub fn check(fig: &Figure) -> Result<(), String> {
    let (seg, _, _) = segment(fig)?;
    let idx = |n: &str| seg.nodes.iter().position(|m| m.name == n);
    let drawn: Vec<usize> = fig.nodes.iter().map(|n| idx(n).ok_or(format!("{}: {n} missing", fig.title))).collect::<Result<_, _>>()?;
    for e in &seg.edges {
        if drawn.contains(&e.to) && !drawn.contains(&e.from) {
            return Err(format!("{}: {} lies below {} but is not drawn", fig.title, seg.nodes[e.from].name, seg.nodes[e.to].name));
        }
    }
    let inner: Vec<_> = seg.edges.iter().filter(|e| drawn.contains(&e.from) && drawn.contains(&e.to)).collect();
    for (a, b, lab) in &fig.edges {
        let e = inner
            .iter()
            .find(|e| seg.nodes[e.from].name == *a && seg.nodes[e.to].name == *b)
            .ok_or(format!("{}: {a} -> {b} is not a cover", fig.title))?;
        if let Some(l) = lab {
            if &e.label != l {
                return Err(format!("{}: {a} -> {b} has label {:?}, drawn {:?}", fig.title, e.label, l));
            }
        }
    }
    if inner.len() != fig.edges.len() {
        let extra: Vec<String> = inner
            .iter()
            .filter(|e| !fig.edges.iter().any(|(a, b, _)| seg.nodes[e.from].name == *a && seg.nodes[e.to].name == *b))
            .map(|e| format!("{} -> {}", seg.nodes[e.from].name, seg.nodes[e.to].name))
            .collect();
        return Err(format!("{}: undrawn covers {extra:?}", fig.title));
    }
    Ok(())
}

/// Directory of the golden DOT files and their index.
pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
