//! Normality of local models attached to LM-triples.

use serde::{Deserialize, Serialize};

use crate::affine::{AffineWeyl, Facet, FlagContext, Reduced, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::group::{Class, Group, GroupSpec};
use crate::normality::{self, odd_unitary_rank, Status, Verdict, VertexKind};
use crate::rootdata::pairing;

pub mod rule {
    pub const CENTRAL: &str = "central cocharacter";
    pub const GENERIC_FIBER: &str = "generic fiber";
    pub const SUFFICIENCY: &str = "criterion and normal generic fiber";
    pub const ABS_SPECIAL: &str = "admissible locus is a single Schubert variety at an absolutely special vertex";
    pub const SPECIAL_ONLY: &str = "admissible locus is a single Schubert variety at a special vertex";
    pub const ADMISSIBLE: &str = "maximal admissible Schubert varieties";
}

/// Parahoric level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    AbsolutelySpecial,
    /// A special vertex that is not absolutely special.
    SpecialOnly,
    Iwahori,
    /// The facet fixed by the given simple affine reflections.
    Facet(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LMTriple {
    pub group: GroupSpec,
    /// One dominant cocharacter per embedding, in lattice coordinates.
    pub mu: Vec<Vec<i64>>,
    pub level: Level,
    #[serde(rename = "char_F")]
    pub char_f: u64,
    pub residue_char: u64,
}

/// Maximal elements of the admissible set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdmissibleMax {
    /// A special vertex: the single class.
    Class(Vec<i64>),
    Elements(Vec<Reduced>),
}

fn group_in_char(spec: &GroupSpec, p: u64) -> Result<Group> {
    let mut s = spec.clone();
    s.characteristic = p;
    Group::new(s)
}

/// The group over the residue field, the class of `mu` and its copies.
fn prepare(t: &LMTriple) -> Result<(Group, Class)> {
    if t.char_f != 0 && t.char_f != t.residue_char {
        return Err(Error::InvalidType(format!(
            "char_F must be 0 or the residue characteristic {}, got {}",
            t.residue_char, t.char_f
        )));
    }
    let g = group_in_char(&t.group, t.residue_char)?;
    for m in &t.mu {
        if m.len() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: m.len() });
        }
        if g.datum.roots.iter().any(|a| pairing(m, a) < 0) {
            return Err(Error::NotDominant);
        }
    }
    let c = g.project_tuple(&t.mu)?;
    Ok((g, c))
}

/// Normality of the generic fiber: over a separable closure the group splits
/// and each copy contributes its own Schubert variety.
pub fn generic_fiber_verdict(t: &LMTriple) -> Result<Verdict> {
    prepare(t)?;
    if t.char_f == 0 {
        return Ok(Verdict::new(Status::Normal, normality::rule::CHAR_ZERO));
    }
    let mut spec = t.group.clone();
    for f in &mut spec.factors {
        f.twist_order = 1;
    }
    let split = group_in_char(&spec, t.char_f)?;
    for m in &t.mu {
        let c = split.project(m)?;
        let (ok, s, ord) = normality::criterion(&split, &c)?;
        if !ok {
            return Ok(Verdict::new(Status::NonNormal, rule::GENERIC_FIBER).with_support(&s, ord));
        }
    }
    Ok(Verdict::new(Status::Normal, rule::GENERIC_FIBER))
}

fn is_central(g: &Group, t: &LMTriple) -> bool {
    t.mu.iter().all(|m| g.datum.roots.iter().all(|a| pairing(m, a) == 0))
}

fn facet_of(g: &Group, level: &Level) -> Result<Facet> {
    match level {
        Level::Iwahori => Ok(Facet::iwahori()),
        Level::Facet(j) => {
            let mut j = j.clone();
            j.sort_unstable();
            j.dedup();
            if j.iter().any(|&i| i > g.rank()) || j.len() > g.rank() {
                return Err(Error::UnsupportedLevel(format!("facet {j:?}")));
            }
            Ok(Facet(j))
        }
        _ => unreachable!("vertex levels are handled separately"),
    }
}

fn combine(special: Verdict, generic: &Verdict, provenance: &str) -> Verdict {
    match (special.status, generic.status) {
        (_, Status::NonNormal) => generic.clone(),
        (Status::Normal, Status::Normal) => Verdict { provenance: provenance.into(), ..special },
        (Status::NonNormal, _) => Verdict { provenance: provenance.into(), ..special },
        _ => Verdict::unknown(),
    }
}

/// Verdict for the local model of an LM-triple.
pub fn locmodel_verdict(t: &LMTriple) -> Result<Verdict> {
    let (g, c) = prepare(t)?;
    if matches!(t.level, Level::SpecialOnly) && odd_unitary_rank(&g).is_none() {
        return Err(Error::UnsupportedLevel("the group has no special, not absolutely special vertex".into()));
    }
    if is_central(&g, t) {
        return Ok(Verdict::new(Status::Normal, rule::CENTRAL));
    }
    let generic = generic_fiber_verdict(t)?;
    let (ok, s, ord) = normality::criterion(&g, &c)?;
    if ok && generic.status == Status::Normal {
        return Ok(Verdict::new(Status::Normal, rule::SUFFICIENCY).with_support(&s, ord));
    }
    match &t.level {
        Level::AbsolutelySpecial => {
            let v = normality::verdict_special(&g, &c, VertexKind::AbsolutelySpecial)?;
            Ok(combine(v, &generic, rule::ABS_SPECIAL))
        }
        Level::SpecialOnly => {
            let v = normality::verdict_special(&g, &c, VertexKind::SpecialOnly)?;
            Ok(combine(v, &generic, rule::SPECIAL_ONLY))
        }
        level => {
            let facet = facet_of(&g, level)?;
            let aw = match AffineWeyl::new(&g) {
                Ok(aw) => aw,
                Err(Error::RankCap(_)) => return Ok(combine(Verdict::unknown(), &generic, rule::ADMISSIBLE)),
                Err(e) => return Err(e),
            };
            let maxima = admissible_elements(&aw, &facet, &c)?;
            let cap = maxima.iter().map(|x| aw.length(x)).max().unwrap_or(0).max(DEFAULT_LENGTH_CAP);
            let aw = aw.with_length_cap(cap);
            let ctx = FlagContext::new(&aw, facet)?;
            let mut status = Status::Normal;
            for x in &maxima {
                match ctx.verdict(x)?.status {
                    Status::NonNormal => {
                        status = Status::NonNormal;
                        break;
                    }
                    Status::Unknown => status = Status::Unknown,
                    Status::Normal => {}
                }
            }
            let v = match status {
                Status::Unknown => Verdict::unknown(),
                s => Verdict::new(s, rule::ADMISSIBLE),
            };
            Ok(combine(v.with_support(&s, ord), &generic, rule::ADMISSIBLE))
        }
    }
}

fn admissible_elements(aw: &AffineWeyl, facet: &Facet, c: &Class) -> Result<Vec<crate::affine::AffElem>> {
    let la = aw.g.weights(c);
    let mut out = Vec::new();
    for t in crate::affine::admissible_translations(aw, &la) {
        let m = aw.double_coset_max(facet, &t.t)?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out.sort_by_key(|x| aw.reduce(x));
    Ok(out)
}

/// Maximal elements of the admissible set.
pub fn admissible_max(t: &LMTriple) -> Result<AdmissibleMax> {
    let (g, c) = prepare(t)?;
    match &t.level {
        Level::AbsolutelySpecial => Ok(AdmissibleMax::Class(g.weights(&c))),
        Level::SpecialOnly => {
            if odd_unitary_rank(&g).is_none() {
                return Err(Error::UnsupportedLevel("the group has no special, not absolutely special vertex".into()));
            }
            Ok(AdmissibleMax::Class(g.weights(&c)))
        }
        level => {
            let facet = facet_of(&g, level)?;
            let aw = AffineWeyl::new(&g)?;
            let els = admissible_elements(&aw, &facet, &c)?;
            Ok(AdmissibleMax::Elements(els.iter().map(|x| aw.reduce(x)).collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(name: &str, p: u64, d: usize, mu: Vec<Vec<i64>>, level: Level, char_f: u64) -> LMTriple {
        let mut group = GroupSpec::preset(name, p).unwrap();
        group.factors[0].restriction_degree = d;
        LMTriple { group, mu, level, char_f, residue_char: p }
    }

    #[test]
    fn pgl2_quasi_minuscule_iwahori() {
        let t = triple("pgl(2)", 2, 1, vec![vec![2]], Level::Iwahori, 0);
        assert_eq!(locmodel_verdict(&t).unwrap().status, Status::Normal);
        let t = LMTriple { char_f: 2, ..t };
        assert_eq!(generic_fiber_verdict(&t).unwrap().status, Status::NonNormal);
        assert_eq!(locmodel_verdict(&t).unwrap().status, Status::NonNormal);
        let t = LMTriple { char_f: 0, level: Level::AbsolutelySpecial, ..t };
        assert_eq!(locmodel_verdict(&t).unwrap().status, Status::NonNormal);
    }

    #[test]
    fn pgl2_admissible_maxima() {
        let t = triple("pgl(2)", 2, 1, vec![vec![2]], Level::Iwahori, 0);
        let AdmissibleMax::Elements(els) = admissible_max(&t).unwrap() else { panic!() };
        assert_eq!(els.len(), 2);
        assert!(els.iter().all(|r| r.word.len() == 2));
    }

    #[test]
    fn pu3_minuscule_levels() {
        let w1 = vec![1, 0];
        let abs = triple("pu(3)", 3, 1, vec![w1.clone()], Level::AbsolutelySpecial, 0);
        assert_eq!(locmodel_verdict(&abs).unwrap().status, Status::NonNormal);
        for level in [Level::SpecialOnly, Level::Iwahori] {
            let t = LMTriple { level, ..abs.clone() };
            assert_eq!(locmodel_verdict(&t).unwrap().status, Status::Normal);
        }
    }

    #[test]
    fn pu12_odd_fundamental_coweight() {
        let mut w3 = vec![0; 11];
        w3[2] = 1;
        let t = triple("pu(12)", 3, 1, vec![w3], Level::AbsolutelySpecial, 0);
        assert_eq!(locmodel_verdict(&t).unwrap().status, Status::Normal);
    }

    #[test]
    fn special_only_needs_odd_unitary() {
        let t = triple("pgl(2)", 2, 1, vec![vec![1]], Level::SpecialOnly, 0);
        assert!(matches!(locmodel_verdict(&t), Err(Error::UnsupportedLevel(_))));
    }
}
