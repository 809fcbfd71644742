//! Command-line surface over the library: evaluate sequents, compute
//! (co)limits and quotients, run law sweeps, duality round trips, the
//! nerve demo, and DOT export.
//!
//! Exit codes: 0 on success/pass, 1 on a property violation (witness
//! emitted as JSON), 2 on usage errors.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

// Print without panicking when the consumer closes the pipe.
macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ordkit::caps::Caps;
use ordkit::checkers::{
    check_cu_representable, check_preservation_lemmas, is_compact_fin, is_order_filtral, is_separated_fin,
    CompactnessMode,
};
use ordkit::colimits::{coinserter, disjoint_union, lax_pushout, quotient_by};
use ordkit::enumerate::{all_posets_up_to, random_orthogonality_instance, random_poset, random_pullback_square};
use ordkit::io;
use ordkit::limits::{weighted_limit, Weight};
use ordkit::logic::{entails, parse_context, parse_sequent};
use ordkit::presheaf::{check_nerve_fully_faithful, full_subcategory_of_finpos};
use ordkit::report::Report;
use ordkit::subobject::{check_beck_chevalley, check_frobenius, check_orthogonality};
use ordkit::{Error, FinPoset};

#[derive(Parser)]
#[command(
    name = "ordkit",
    version,
    about = "Finite posets with categorical structure: limits, quotients, internal logic, duality, and law sweeps"
)]
struct Cli {
    /// Largest poset constructions may build (also ORDKIT_SIZE_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    /// Hasse diagrams for poset output; reports fall back to text.
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a sequent against a signature.
    Eval(EvalArgs),
    /// Compute a weighted limit of a diagram.
    Limit(LimitArgs),
    /// Compute a colimit (coinserter, coproduct, or lax pushout).
    #[command(subcommand)]
    Colimit(ColimitCommand),
    /// Quotient a poset by (the congruence closure of) a relation.
    Quotient(QuotientArgs),
    /// Run a law sweep.
    Check(CheckArgs),
    /// Duality round trips and the ultrafilter comparison.
    #[command(subcommand)]
    Duality(DualityCommand),
    /// Check the nerve embedding on a family of posets.
    NerveDemo(NerveDemoArgs),
    /// Render a poset's Hasse diagram as DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Signature file (JSON).
    #[arg(long)]
    sig: String,
    /// The sequent, e.g. "x <= y /\\ y <= x |- x = y".
    #[arg(long)]
    sequent: String,
    /// Explicit context, e.g. "x:C2,y:C2"; inferred when omitted.
    #[arg(long)]
    context: Option<String>,
}

#[derive(Args)]
struct LimitArgs {
    /// Diagram file (JSON: nodes and edges).
    #[arg(long)]
    diagram: String,
    /// Weight file (JSON); conical when omitted.
    #[arg(long)]
    weight: Option<String>,
}

#[derive(Subcommand)]
enum ColimitCommand {
    /// Coinserter of a parallel pair f, g : Y => X.
    Coinserter {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Disjoint union of two posets.
    Coproduct {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Lax pushout of f : R -> A and g : R -> B.
    LaxPushout {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
}

#[derive(Args)]
struct QuotientArgs {
    #[arg(long)]
    poset: String,
    /// Relation file; its congruence closure is used.
    #[arg(long)]
    relation: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Which law to sweep.
    #[arg(value_enum)]
    law: Law,
    /// Random seed for reproducible sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest part size per instance.
    #[arg(long, default_value_t = 4)]
    size: usize,
    /// Number of random instances.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Sweep all labeled posets up to --size instead of sampling.
    #[arg(long, default_value_t = false)]
    exhaustive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Law {
    BeckChevalley,
    Frobenius,
    Orthogonality,
    Filtral,
    Compact,
    Separated,
    CuRep,
    Lemmas,
}

#[derive(Subcommand)]
enum DualityCommand {
    /// Check P ~ prime filters of Up(P) on a poset.
    Roundtrip {
        #[arg(long)]
        poset: String,
    },
    /// Check the point/ultrafilter bijection for sets up to a size.
    Xi {
        #[arg(long, default_value_t = 6)]
        size: usize,
    },
}

#[derive(Args)]
struct NerveDemoArgs {
    /// Poset files for the category's objects; a built-in family of
    /// five posets is used when omitted.
    #[arg(long, num_args = 0..)]
    objects: Vec<String>,
    /// Comma-separated indices of the covering family; defaults to the
    /// discrete objects.
    #[arg(long)]
    cover_by: Option<String>,
}

#[derive(Args)]
struct ExportDotArgs {
    #[arg(long)]
    poset: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Ok(env_cap) = std::env::var("ORDKIT_SIZE_CAP") {
        match env_cap.parse() {
            Ok(v) => caps.max_poset = v,
            Err(_) => {
                eprintln!("ORDKIT_SIZE_CAP must be a number, got {env_cap:?}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(cap) = cli.cap {
        caps.max_poset = cap;
    }
    match run(&cli, &caps) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &str) -> ordkit::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))
}

fn emit_reports(format: Format, reports: &[Report]) -> bool {
    let mut sorted: Vec<&Report> = reports.iter().collect();
    sorted.sort_by(|a, b| (&a.claim, &a.instance).cmp(&(&b.claim, &b.instance)));
    for r in &sorted {
        match format {
            Format::Json => say!("{}", r.to_json_line()),
            Format::Text | Format::Dot => {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                match &r.witness {
                    Some(w) if !r.passed() => say!("{verdict}  {}  {}  witness: {w}", r.claim, r.instance),
                    _ => say!("{verdict}  {}  {}", r.claim, r.instance),
                }
            }
        }
    }
    reports.iter().all(Report::passed)
}

fn print_poset(format: Format, p: &FinPoset) {
    match format {
        Format::Json => say!(
            "{}",
            serde_json::to_string_pretty(&io::PosetJson::from_poset(p)).expect("poset serializes")
        ),
        Format::Text => say!("{p:?}"),
        Format::Dot => {
            let _ = write!(std::io::stdout(), "{}", io::to_dot(p));
        }
    }
}

fn print_map(format: Format, label: &str, f: &ordkit::MonotoneMap) {
    match format {
        Format::Json => say!(
            "{}",
            serde_json::to_string_pretty(&io::MapJson::from_map(f)).expect("map serializes")
        ),
        Format::Text | Format::Dot => say!("{label}: {f:?}"),
    }
}

fn run(cli: &Cli, caps: &Caps) -> ordkit::Result<bool> {
    match &cli.command {
        Command::Eval(args) => {
            let sig = io::signature_from_json(&read(&args.sig)?)?;
            let ctx = match &args.context {
                Some(c) => Some(parse_context(c, &sig)?),
                None => None,
            };
            let sequent = parse_sequent(&args.sequent, &sig, ctx.as_ref())?;
            let result = entails(&sig, &sequent, caps)?;
            if result.holds {
                match cli.format {
                    Format::Json => say!("{}", serde_json::json!({ "holds": true })),
                    _ => say!("holds"),
                }
                Ok(true)
            } else {
                let witness: Vec<serde_json::Value> = result
                    .witness
                    .unwrap_or_default()
                    .into_iter()
                    .map(|(var, val)| serde_json::json!({ "var": var, "value": val }))
                    .collect();
                match cli.format {
                    Format::Json => say!("{}", serde_json::json!({ "holds": false, "witness": witness })),
                    _ => say!("fails at {}", serde_json::json!(witness)),
                }
                Ok(false)
            }
        }
        Command::Limit(args) => {
            let diagram = io::diagram_from_json(&read(&args.diagram)?)?;
            let weight = match &args.weight {
                Some(path) => io::weight_from_json(&read(path)?, &diagram)?,
                None => Weight::conical(&diagram),
            };
            let (carrier, _) = weighted_limit(&diagram, &weight, caps)?;
            print_poset(cli.format, &carrier);
            Ok(true)
        }
        Command::Colimit(cmd) => {
            match cmd {
                ColimitCommand::Coinserter { f, g } => {
                    let f = io::map_from_json(&read(f)?)?;
                    let g = io::map_from_json(&read(g)?)?;
                    let (carrier, q) = coinserter(&f, &g)?;
                    print_poset(cli.format, &carrier);
                    print_map(cli.format, "quotient map", &q);
                }
                ColimitCommand::Coproduct { left, right } => {
                    let a = io::poset_from_json(&read(left)?)?;
                    let b = io::poset_from_json(&read(right)?)?;
                    let (carrier, inl, inr) = disjoint_union(&a, &b);
                    print_poset(cli.format, &carrier);
                    print_map(cli.format, "left injection", &inl);
                    print_map(cli.format, "right injection", &inr);
                }
                ColimitCommand::LaxPushout { f, g } => {
                    let f = io::map_from_json(&read(f)?)?;
                    let g = io::map_from_json(&read(g)?)?;
                    let po = lax_pushout(&f, &g)?;
                    print_poset(cli.format, &po.carrier);
                    print_map(cli.format, "from left", &po.from_left);
                    print_map(cli.format, "from right", &po.from_right);
                    return Ok(emit_reports(cli.format, &po.conditions));
                }
            }
            Ok(true)
        }
        Command::Quotient(args) => {
            let poset = io::poset_from_json(&read(&args.poset)?)?;
            let relation = io::relation_from_json(&read(&args.relation)?)?;
            let closed = ordkit::colimits::congruence_closure(&poset, &relation)?;
            let (carrier, q) = quotient_by(&poset, &closed.as_relation())?;
            print_poset(cli.format, &carrier);
            print_map(cli.format, "quotient map", &q);
            Ok(true)
        }
        Command::Check(args) => {
            let reports = run_check(args, caps)?;
            Ok(emit_reports(cli.format, &reports))
        }
        Command::Duality(cmd) => match cmd {
            DualityCommand::Roundtrip { poset } => {
                let p = io::poset_from_json(&read(poset)?)?;
                let (compactification, unit) = ordkit::duality::nachbin_fin(&p, caps)?;
                let report = if unit.is_iso() {
                    Report::pass("duality-roundtrip", format!("{p:?}"))
                } else {
                    Report::fail(
                        "duality-roundtrip",
                        format!("{p:?}"),
                        serde_json::json!({ "prime_filters": compactification.len() }),
                    )
                };
                Ok(emit_reports(cli.format, &[report]))
            }
            DualityCommand::Xi { size } => {
                let mut reports = Vec::new();
                for n in 0..=*size {
                    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
                    let xi = ordkit::duality::xi_fin(names, caps)?;
                    reports.push(if xi.bijective {
                        Report::pass("xi-bijective", format!("|S| = {n}"))
                    } else {
                        Report::fail("xi-bijective", format!("|S| = {n}"), serde_json::json!({}))
                    });
                }
                Ok(emit_reports(cli.format, &reports))
            }
        },
        Command::NerveDemo(args) => {
            let objects: Vec<(String, FinPoset)> = if args.objects.is_empty() {
                vec![
                    ("1".to_string(), FinPoset::one()),
                    ("A2".to_string(), FinPoset::antichain(2)),
                    ("C2".to_string(), FinPoset::chain(2)),
                    ("V".to_string(), FinPoset::vee()),
                    ("D3".to_string(), FinPoset::discrete(["p", "q", "r"])?),
                ]
            } else {
                args.objects
                    .iter()
                    .map(|path| Ok((path.clone(), io::poset_from_json(&read(path)?)?)))
                    .collect::<ordkit::Result<_>>()?
            };
            let family: Vec<usize> = match &args.cover_by {
                Some(list) => list
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| Error::Invalid(format!("bad family index {t:?}"))))
                    .collect::<ordkit::Result<_>>()?,
                None => objects
                    .iter()
                    .enumerate()
                    .filter(|(_, (_, p))| p.is_discrete())
                    .map(|(i, _)| i)
                    .collect(),
            };
            let cat = full_subcategory_of_finpos(objects, caps)?;
            let reports = check_nerve_fully_faithful(&cat, &family, caps)?;
            Ok(emit_reports(cli.format, &reports))
        }
        Command::ExportDot(args) => {
            let p = io::poset_from_json(&read(&args.poset)?)?;
            let dot = io::to_dot(&p);
            match &args.out {
                Some(path) => {
                    fs::write(path, dot).map_err(|e| Error::Invalid(format!("cannot write {path}: {e}")))?
                }
                None => {
                    let _ = write!(std::io::stdout(), "{dot}");
                }
            }
            Ok(true)
        }
    }
}

fn run_check(args: &CheckArgs, caps: &Caps) -> ordkit::Result<Vec<Report>> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut reports = Vec::new();
    match args.law {
        Law::BeckChevalley => {
            for _ in 0..args.trials {
                let square = random_pullback_square(&mut rng, args.size, caps)?;
                reports.push(check_beck_chevalley(&square)?);
            }
        }
        Law::Frobenius => {
            for _ in 0..args.trials {
                let square = random_pullback_square(&mut rng, args.size, caps)?;
                reports.push(check_frobenius(&square.bottom));
            }
        }
        Law::Orthogonality => {
            for k in 0..args.trials {
                let inst = random_orthogonality_instance(&mut rng, args.size, caps)?;
                reports.push(check_orthogonality(
                    &inst.f,
                    &inst.u,
                    &inst.v,
                    &inst.i,
                    inst.above.as_ref().map(|(a, b)| (a, b)),
                    &format!("instance {k}"),
                    caps,
                )?);
            }
        }
        Law::Filtral | Law::Compact | Law::Separated | Law::CuRep => {
            let instances: Vec<FinPoset> = if args.exhaustive {
                all_posets_up_to(args.size)
            } else {
                (0..args.trials).map(|_| random_poset(&mut rng, args.size, 0.4)).collect()
            };
            for p in instances {
                reports.push(match args.law {
                    Law::Filtral => is_order_filtral(&p, caps)?,
                    Law::Compact => is_compact_fin(&p, CompactnessMode::FiniteLatticeShortcut, caps)?,
                    Law::Separated => is_separated_fin(&p, caps)?,
                    Law::CuRep => check_cu_representable(&p, caps)?,
                    _ => unreachable!(),
                });
            }
        }
        Law::Lemmas => {
            for _ in 0..args.trials {
                let square = random_pullback_square(&mut rng, args.size, caps)?;
                reports.extend(check_preservation_lemmas(&square.bottom, caps)?);
            }
        }
    }
    Ok(reports)
}
