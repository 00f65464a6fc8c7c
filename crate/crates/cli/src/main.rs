use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::affine::{AffineWeyl, Facet, FlagContext, Reduced, DEFAULT_LENGTH_CAP};
use schubert_core::dominance::{self, DEFAULT_HEIGHT_CAP};
use schubert_core::group::{format_weights, parse_ints, parse_weights};
use schubert_core::locmodel::{self, LMTriple, Level};
use schubert_core::normality::{self, VertexKind};
use schubert_core::render::{self, FlagRow, Format};
use schubert_core::{Class, Error, Group, GroupSpec};
use serde_json::json;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Normality of Schubert varieties and local models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// JSON group spec file or a preset such as `pgl(3)`, `pu(8)`, `so(8)`, `e7-ad`
    #[arg(long)]
    group: String,
    /// Residue characteristic (overrides the spec)
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    AbsSpecial,
    Special,
    Iwahori,
    Facet,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normality verdict for a Schubert variety in an affine Grassmannian
    Verdict {
        #[command(flatten)]
        g: GroupArgs,
        /// Cocharacter: lattice or e-coordinates, `w1+w3`, `sigma:` échelonnage weights, `;` between copies
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "abs-special")]
        level: LevelArg,
    },
    /// Classification of normal Schubert varieties
    Classify {
        #[arg(long, required = true)]
        group: Vec<String>,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Order of the fundamental group of a standard Levi's derived group
    Pi1 {
        #[command(flatten)]
        g: GroupArgs,
        /// 1-based échelonnage indices (default: all)
        #[arg(long)]
        support: Option<String>,
    },
    /// Whether mu <= nu in the dominance order
    Leq {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Support of the standard Levi attached to mu
    Levi {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        mu: String,
    },
    /// Quasi-minuscule classes
    Qm {
        #[command(flatten)]
        g: GroupArgs,
    },
    /// Initial segment of the dominance order on one component
    Hasse {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, default_value_t = 0)]
        component: usize,
        /// Bound on <2 rho, mu>
        #[arg(long)]
        cap: Option<i64>,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Verdicts for Schubert varieties in partial affine flag varieties
    Flag {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, value_enum, default_value = "iwahori")]
        level: LevelArg,
        /// Simple affine reflections fixing the facet, e.g. `1,2`
        #[arg(long)]
        facet: Option<String>,
        /// Reduced word of a single element, e.g. `0,1,0`
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 0)]
        omega: usize,
        /// Component to enumerate when no word is given
        #[arg(long, default_value_t = 0)]
        component: usize,
        /// Length bound
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Normality of a local model
    Locmodel {
        /// LM-triple as a JSON file or inline JSON
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[arg(long)]
        facet: Option<String>,
        #[arg(long = "char-f", default_value_t = 0)]
        char_f: u64,
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// Iwahori orbits in the affine Grassmannian of PGL_{n+1}
    #[command(name = "iwahori-A")]
    IwahoriA {
        #[command(flatten)]
        g: GroupArgs,
        /// e-coordinates (mu_0, ..., mu_n)
        #[arg(long)]
        mu: String,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Out = Result<String, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn read_text(arg: &str) -> Option<String> {
    let p = Path::new(arg);
    p.is_file().then(|| std::fs::read_to_string(p).ok()).flatten()
}

fn load_spec(arg: &str, characteristic: Option<u64>) -> Result<GroupSpec, Failure> {
    let mut spec = match read_text(arg) {
        Some(text) => match serde_json::from_str::<GroupSpec>(&text) {
            Ok(s) => s,
            Err(e) => return usage(format!("--group {arg}: {e}")),
        },
        None if arg.trim_start().starts_with('{') => match serde_json::from_str::<GroupSpec>(arg) {
            Ok(s) => s,
            Err(e) => return usage(format!("--group: {e}")),
        },
        None => match GroupSpec::preset(arg, characteristic.unwrap_or(0)) {
            Ok(s) => s,
            Err(e) => return usage(format!("--group {arg}: not a readable file, and {e}")),
        },
    };
    if let Some(p) = characteristic {
        spec.characteristic = p;
    }
    Ok(spec)
}

fn load(g: &GroupArgs) -> Result<Group, Failure> {
    Ok(Group::new(load_spec(&g.group, g.characteristic)?)?)
}

/// Parses `--mu`: `sigma:` weights, or cocharacters separated by `;`.
fn parse_class(g: &Group, s: &str) -> Result<Class, Failure> {
    if let Some(rest) = s.trim().strip_prefix("sigma:") {
        let w = parse_weights(rest, g.rank())?;
        return g.class_with_weights(&w).ok_or_else(|| {
            Failure::Core(Error::NotRealizable(format!("{} is not a class of {}", format_weights(&w), g.name())))
        });
    }
    let parts = parse_tuple(g, s)?;
    Ok(g.project_tuple(&parts)?)
}

fn parse_tuple(g: &Group, s: &str) -> Result<Vec<Vec<i64>>, Failure> {
    s.split(';').map(|p| g.parse_coweight(p).map_err(Failure::from)).collect()
}

fn cap_or<T: std::str::FromStr>(flag: Option<T>, default: T) -> Result<T, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("SCHUBERT_CAP") {
        Ok(v) => v.trim().parse().or_else(|_| usage(format!("SCHUBERT_CAP={v:?} is not a valid cap"))),
        Err(_) => Ok(default),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn facet_arg(level: LevelArg, facet: &Option<String>, rank: usize) -> Result<Facet, Failure> {
    match (level, facet) {
        (LevelArg::Iwahori, None) => Ok(Facet::iwahori()),
        (LevelArg::Iwahori, Some(_)) => usage("--facet only applies with --level facet"),
        (LevelArg::Facet, Some(f)) => {
            let mut j: Vec<usize> = parse_ints(f)?
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| Failure::Usage(format!("--facet: negative index {x}"))))
                .collect::<Result<_, _>>()?;
            j.sort_unstable();
            j.dedup();
            if j.iter().any(|&i| i > rank) {
                return usage(format!("--facet: indices must lie in 0..={rank}"));
            }
            Ok(Facet(j))
        }
        (LevelArg::Facet, None) => usage("--level facet requires --facet"),
        _ => usage("--level must be iwahori or facet here"),
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Verdict { g, mu, level } => {
            let g = load(&g)?;
            let c = parse_class(&g, &mu)?;
            let v = match level {
                LevelArg::AbsSpecial => normality::verdict_special(&g, &c, VertexKind::AbsolutelySpecial)?,
                LevelArg::Special => normality::verdict_special(&g, &c, VertexKind::SpecialOnly)?,
                _ => return usage("--level: use the flag subcommand for iwahori and facet levels"),
            };
            Ok(pretty(&json!({
                "group": g.name(),
                "p": g.p,
                "mu": format_weights(&g.weights(&c)),
                "component": g.component(&c),
                "verdict": v,
            })))
        }
        Cmd::Classify { group, characteristic, format } => {
            let format: Format = format.parse().or_else(|_| usage(format!("--format {format}: expected md, csv or json")))?;
            let mut results = Vec::new();
            for arg in &group {
                let g = Group::new(load_spec(arg, characteristic)?)?;
                results.push(normality::classify(&g)?);
            }
            Ok(render::classification_table(&results).render(format))
        }
        Cmd::Pi1 { g, support } => {
            let g = load(&g)?;
            let s: Vec<usize> = match support {
                None => (0..g.rank()).collect(),
                Some(s) => {
                    let mut v = Vec::new();
                    for i in parse_ints(&s)? {
                        if i < 1 || i as usize > g.rank() {
                            return usage(format!("--support: index {i} out of range 1..={}", g.rank()));
                        }
                        v.push(i as usize - 1);
                    }
                    v
                }
            };
            Ok(format!("{}\n", normality::pi1_order(&g, &s)))
        }
        Cmd::Leq { g, mu, nu } => {
            let g = load(&g)?;
            let (a, b) = (parse_class(&g, &mu)?, parse_class(&g, &nu)?);
            Ok(format!("{}\n", dominance::leq(&g, &a, &b)?))
        }
        Cmd::Levi { g, mu } => {
            let g = load(&g)?;
            let c = parse_class(&g, &mu)?;
            let s = normality::levi_of(&g, &c)?;
            let la = dominance::minuscule_below(&g, &c)?;
            Ok(pretty(&json!({
                "support": s.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "absolute_support": g.absolute_indices(&s).iter().map(|i| i + 1).collect::<Vec<_>>(),
                "pi1_order": normality::pi1_order(&g, &s),
                "minuscule_below": format_weights(&g.weights(&la)),
            })))
        }
        Cmd::Qm { g } => {
            let g = load(&g)?;
            let blocks: Vec<String> = (0..g.system.blocks.len())
                .map(|b| format_weights(&g.weights(&dominance::quasi_minuscule(&g, b))))
                .collect();
            Ok(pretty(&json!({
                "quasi_minuscule": blocks,
                "factorwise": format_weights(&g.weights(&dominance::factorwise_qm(&g))),
            })))
        }
        Cmd::Hasse { g, component, cap, format } => {
            let g = load(&g)?;
            let cap = cap_or(cap, DEFAULT_HEIGHT_CAP / 2)?;
            let seg = dominance::hasse_segment(&g, component, cap)?;
            match format.as_str() {
                "dot" => Ok(render::hasse_dot(&seg)),
                "json" => Ok(pretty(&serde_json::to_value(&seg).expect("segment serializes"))),
                _ => usage(format!("--format {format}: expected dot or json")),
            }
        }
        Cmd::Flag { g, level, facet, word, omega, component, cap, format } => {
            let g = load(&g)?;
            let facet = facet_arg(level, &facet, g.rank())?;
            let cap = cap_or(cap, 8)?;
            let aw = AffineWeyl::new(&g)?;
            let aw = aw.with_length_cap(cap.max(DEFAULT_LENGTH_CAP));
            let ctx = FlagContext::new(&aw, facet)?;
            if let Some(w) = word {
                let word: Vec<usize> = parse_ints(&w)?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Failure::Usage(format!("--word: negative index {x}"))))
                    .collect::<Result<_, _>>()?;
                let x = aw.from_reduced(&Reduced { omega, word })?;
                let v = ctx.verdict(&x)?;
                return Ok(pretty(&json!({ "element": aw.reduce(&x), "length": aw.length(&x), "verdict": v })));
            }
            if component >= aw.omega().len() {
                return usage(format!("--component {component}: the group has {} components", aw.omega().len()));
            }
            let mut rows = Vec::new();
            for x in aw.elements_up_to(component, cap) {
                let v = ctx.verdict(&x)?;
                rows.push(FlagRow { element: aw.reduce(&x), length: aw.length(&x), status: v.status });
            }
            match format.as_str() {
                "csv" => Ok(render::flag_csv(&rows)),
                "json" => Ok(pretty(&serde_json::to_value(&rows).expect("rows serialize"))),
                _ => usage(format!("--format {format}: expected csv or json")),
            }
        }
        Cmd::Locmodel { triple, group, mu, level, facet, char_f, characteristic } => {
            let t = match triple {
                Some(arg) => {
                    let text = read_text(&arg).unwrap_or(arg);
                    serde_json::from_str::<LMTriple>(&text).or_else(|e| usage(format!("--triple: {e}")))?
                }
                None => {
                    let Some(group) = group else { return usage("--group or --triple is required") };
                    let Some(mu) = mu else { return usage("--mu is required") };
                    let spec = load_spec(&group, characteristic)?;
                    let g = Group::new(spec.clone())?;
                    let level = match level.unwrap_or(LevelArg::AbsSpecial) {
                        LevelArg::AbsSpecial => Level::AbsolutelySpecial,
                        LevelArg::Special => Level::SpecialOnly,
                        l => match facet_arg(l, &facet, g.rank())? {
                            f if f.0.is_empty() => Level::Iwahori,
                            f => Level::Facet(f.0),
                        },
                    };
                    LMTriple { mu: parse_tuple(&g, &mu)?, residue_char: spec.characteristic, group: spec, level, char_f }
                }
            };
            let v = locmodel::locmodel_verdict(&t)?;
            let gf = locmodel::generic_fiber_verdict(&t)?;
            let adm = locmodel::admissible_max(&t).ok();
            Ok(pretty(&json!({ "verdict": v, "generic_fiber": gf, "admissible_max": adm })))
        }
        Cmd::IwahoriA { g, mu } => {
            let g = load(&g)?;
            let v = normality::type_a_iwahori_grassmannian(&g, &parse_ints(&mu)?)?;
            Ok(pretty(&json!({ "verdict": v })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
