//! `khom`: query homotopy Mackey functors of `KU_G`-local spheres.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use khom_core::abgroups::{lattice, FinAbGroup, Split};
use khom_core::assemble::{pi_integral, pi_mod_p, pi_ro_graded, GradedAnswer};
use khom_core::burnside::{linearization_matrix, mark_table, orbit_labels};
use khom_core::kcoeff::{compare_methods, kercoker, Method as KcMethod};
use khom_core::reps::{irrep_names, reps, VirtualRep};
use khom_core::theta::{pi0_presented, pi_odd_presented};
use khom_core::{verify, KhomError, Presentation};

#[derive(Parser, Debug)]
#[command(name = "khom", version, about = "Homotopy Mackey functors of K-local equivariant spheres")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    query: QueryArgs,
}

#[derive(clap::Args, Debug, Clone)]
struct QueryArgs {
    /// Group as cyclic factors, e.g. `C4`, `C2xC6`, `e`.
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    degree: Option<i64>,
    /// Virtual real representation such as `2*r0 - r1 + c0` (see `list-irreps`).
    #[arg(long, allow_hyphen_values = true)]
    rep: Option<String>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Print the presentations of degree 0 and 8d+1 before Smith normal form.
    #[arg(long)]
    show_relations: bool,
    /// Report degree 0 with 2-complete free parts (`--mode ku` only).
    #[arg(long)]
    completed: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Real irreducible representations of the group.
    ListIrreps,
    /// Table of marks and linearization matrix of the top group.
    BurnsideTable,
    /// Kernel and cokernel of psi^g - 1 on p-complete coefficients.
    Kercoker {
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Run a verification suite.
    Verify {
        /// One of oracle, golden, theta, rank, vanishing, tensor, crosspath, image-j, axioms, all.
        suite: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Ku,
    Kumodp,
    Ro,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Closed,
    Oracle,
    Both,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(KhomError),
    Failed(String),
}

impl From<KhomError> for Failure {
    fn from(e: KhomError) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(KhomError::Parse(_) | KhomError::Invalid(_)) => 2,
            Failure::Lib(KhomError::SizeBound { .. }) => 3,
            Failure::Lib(KhomError::Consistency(_)) | Failure::Failed(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}\n\nRun `khom --help` for usage."),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Failed(out) => print!("{out}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let q = &cli.query;
    match &cli.command {
        None => query(q),
        Some(Command::ListIrreps) => list_irreps(q),
        Some(Command::BurnsideTable) => burnside_table(q),
        Some(Command::Kercoker { method }) => run_kercoker(q, *method),
        Some(Command::Verify { suite }) => run_verify(suite, q.format),
    }
}

fn group(q: &QueryArgs) -> Result<FinAbGroup, Failure> {
    let s = q.group.as_deref().ok_or_else(|| Failure::Usage("--group is required".into()))?;
    let g = FinAbGroup::parse(s)?;
    lattice(&g)?;
    Ok(g)
}

fn need<T: Copy>(v: Option<T>, flag: &str, mode: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{flag} is required for {mode}")))
}

fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn query(q: &QueryArgs) -> Result<String, Failure> {
    let mode = q.mode.ok_or_else(|| Failure::Usage("--mode or a subcommand is required".into()))?;
    let g = group(q)?;
    if q.completed && !(mode == Mode::Ku && q.degree == Some(0)) {
        return Err(Failure::Usage("--completed applies only to --mode ku --degree 0".into()));
    }
    let answer: GradedAnswer = match mode {
        Mode::Ku => {
            if q.rep.is_some() {
                return Err(Failure::Usage("--rep requires --mode ro".into()));
            }
            let k = need(q.degree, "--degree", "--mode ku")?;
            if q.completed {
                pi_mod_p(&g, 2, 0)?
            } else {
                pi_integral(&g, k)?
            }
        }
        Mode::Kumodp => {
            if q.rep.is_some() {
                return Err(Failure::Usage("--rep requires --mode ro".into()));
            }
            let p = need(q.prime, "--prime", "--mode kumodp")?;
            pi_mod_p(&g, p, need(q.degree, "--degree", "--mode kumodp")?)?
        }
        Mode::Ro => {
            let p = need(q.prime, "--prime", "--mode ro")?;
            let r = reps(&g)?;
            let v = match (&q.rep, q.degree) {
                (Some(s), None) => VirtualRep::parse(&r, s)?,
                (None, Some(n)) => VirtualRep::trivial(&r, n),
                _ => return Err(Failure::Usage("--mode ro takes exactly one of --rep and --degree".into())),
            };
            pi_ro_graded(&g, p, &v)?
        }
    };
    let relations = if q.show_relations { presentations(&g, mode, q)? } else { Vec::new() };
    Ok(match q.format {
        Format::Json => {
            let mut v = answer.to_json();
            if q.show_relations {
                v["presentations"] = json!(relations.iter().map(render::presentation_json).collect::<Vec<_>>());
            }
            emit_json(&v)
        }
        Format::Text => {
            let mut s = render::answer_text(&answer);
            for r in &relations {
                s.push_str(&render::presentation_text(r));
            }
            s
        }
    })
}

/// Pre-SNF presentations of the Sylow 2-part in degrees 0 and 8d+1.
fn presentations(g: &FinAbGroup, mode: Mode, q: &QueryArgs) -> Result<Vec<render::NamedPresentation>, Failure> {
    let at_two = match mode {
        Mode::Ku => true,
        Mode::Kumodp => q.prime == Some(2),
        Mode::Ro => return Err(Failure::Usage("--show-relations applies to --mode ku and kumodp".into())),
    };
    let k = q.degree.unwrap_or_default();
    let n2 = Split::sylow(g, 2).first;
    let presented = if !at_two {
        None
    } else if k == 0 {
        Some(pi0_presented(&n2)?)
    } else if k.rem_euclid(8) == 1 {
        Some(pi_odd_presented(&n2, k.div_euclid(8))?.0)
    } else {
        None
    };
    let Some(pr) = presented else {
        return Ok(Vec::new());
    };
    let lat = pr.lattice.clone();
    Ok(pr
        .levels
        .iter()
        .enumerate()
        .map(|(t, p): (usize, &Presentation)| render::NamedPresentation { subgroup: lat.sub(t).label(), presentation: p.clone() })
        .collect())
}

fn list_irreps(q: &QueryArgs) -> Result<String, Failure> {
    let g = group(q)?;
    let r = reps(&g)?;
    let names = irrep_names(&r);
    Ok(match q.format {
        Format::Json => {
            let items: Vec<Value> = names
                .iter()
                .map(|(n, e)| json!({ "name": n, "dim": if n.starts_with('c') { 2 } else { 1 }, "exponents": e }))
                .collect();
            emit_json(&json!({ "group": g.to_string(), "irreps": items }))
        }
        Format::Text => {
            let mut s = format!("real irreps of {g}\n");
            for (n, e) in &names {
                let dim = if n.starts_with('c') { 2 } else { 1 };
                s.push_str(&format!("  {n}  dim {dim}  exponents {e:?}\n"));
            }
            s
        }
    })
}

fn burnside_table(q: &QueryArgs) -> Result<String, Failure> {
    let g = group(q)?;
    let lat = lattice(&g)?;
    let top = lat.top();
    let marks = mark_table(&lat, top);
    let lin = linearization_matrix(&lat, top)?;
    let orbits = orbit_labels(&lat, top);
    let subgroups: Vec<String> = lat.below(top).iter().map(|&h| lat.sub(h).label()).collect();
    Ok(match q.format {
        Format::Json => emit_json(&json!({
            "group": g.to_string(),
            "orbits": orbits,
            "subgroups": subgroups,
            "marks": marks,
            "linearization": lin,
        })),
        Format::Text => format!(
            "table of marks of {g} (rows: orbits {}, columns: subgroups {})\n{}linearization A -> RU\n{}",
            orbits.join(", "),
            subgroups.join(", "),
            render::matrix(&marks, "  "),
            render::matrix(&lin, "  ")
        ),
    })
}

fn run_kercoker(q: &QueryArgs, method: Method) -> Result<String, Failure> {
    let g = group(q)?;
    let p = need(q.prime, "--prime", "kercoker")?;
    let n = need(q.degree, "--degree", "kercoker")?;
    if method == Method::Both {
        let (vk, vc) = compare_methods(&g, n, p)?;
        let agree = vk.strong == Some(true) && vc.strong == Some(true);
        let out = match q.format {
            Format::Json => emit_json(&json!({
                "group": g.to_string(), "p": p, "n": n, "ker": vk, "coker": vc, "match": agree,
            })),
            Format::Text => format!(
                "ker_{p}{{{n}}} over {g}: closed vs oracle {}\ncoker_{p}{{{n}}} over {g}: closed vs oracle {}\n",
                verdict_word(vk.strong),
                verdict_word(vc.strong)
            ),
        };
        return if agree { Ok(out) } else { Err(Failure::Failed(out)) };
    }
    let m = if method == Method::Closed { KcMethod::Closed } else { KcMethod::Oracle };
    let kc = kercoker(&g, n, p, m)?;
    Ok(match q.format {
        Format::Json => emit_json(&json!({
            "group": g.to_string(), "p": p, "n": n, "ker": kc.ker.to_json(), "coker": kc.coker.to_json(),
        })),
        Format::Text => format!(
            "ker_{p}{{{n}}}\n{}coker_{p}{{{n}}}\n{}",
            render::functor_text(&kc.ker),
            render::functor_text(&kc.coker)
        ),
    })
}

fn verdict_word(strong: Option<bool>) -> &'static str {
    match strong {
        Some(true) => "match",
        _ => "MISMATCH",
    }
}

fn run_verify(suite: &str, format: Format) -> Result<String, Failure> {
    if suite != "all" && !verify::SUITES.contains(&suite) {
        return Err(Failure::Usage(format!(
            "unknown suite {suite:?}; expected one of {} or all",
            verify::SUITES.join(", ")
        )));
    }
    let reports = verify::run(suite)?;
    let ok = reports.iter().all(|r| r.ok());
    let out = match format {
        Format::Json => emit_json(&json!({ "ok": ok, "reports": reports })),
        Format::Text => reports.iter().map(render::report_text).collect(),
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Failed(out))
    }
}
