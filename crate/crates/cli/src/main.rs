use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use posinv::audit::run_audit;
use posinv::axioms::{
    check_condorcet_criteria, check_omg_invariance, check_positive_involvement,
    check_single_voter_resolvability, estimate_tie_frequency, search_pi_violation,
    verify_theorem1_with, AxiomVerdict, BallotDomain, SearchConfig, TheoremOptions,
};
use posinv::enumerate::irresoluteness;
use posinv::fixtures::FixtureSet;
use posinv::rational::format_decimal;
use posinv::realize::{
    realize_omg, synthesize_transition_with, verify_transition, SynthesisOptions,
    TransitionInstance, TransitionSolution,
};
use posinv::{evaluate, margin_lines, Ballot, Error, MethodId, OrdinalMarginGraph, Profile};

/// Like `println!`, but a closed stdout ends output quietly.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! say_raw {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "posinv", version, about = "Exact margin-based voting theory")]
struct Cli {
    /// Seed for every randomized command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Winner sets of one profile or ordinal margin graph under several methods.
    Winners {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated method tokens.
        #[arg(long, default_value = "defensible,minimax,split-cycle")]
        methods: String,
    },
    /// Margin listing of a profile, strongest first.
    Margins { profile: PathBuf },
    /// Ordinal margin graph of a profile.
    Omg { profile: PathBuf },
    /// Irresoluteness statistics over all linearly edge-ordered tournaments on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        methods: Option<String>,
    },
    /// The irresoluteness table for four alternatives.
    Table1,
    /// A profile whose ordinal margin graph is the given one.
    Realize {
        #[arg(long)]
        omg: PathBuf,
        /// Margins for ranks 1, 2, ..., positive, increasing and of one parity.
        #[arg(long, value_delimiter = ',')]
        margins: Option<Vec<i64>>,
    },
    /// Search for a base profile and added voters moving one graph to another.
    Synthesize {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        favorite: String,
        #[arg(long, default_value_t = 60)]
        bound: u64,
        #[arg(long)]
        minimize: bool,
    },
    /// Check a base profile and added voters against a transition.
    VerifyTransition {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        added: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        favorite: String,
    },
    /// Check an axiom on one instance, or search for a violation.
    AxiomCheck(AxiomArgs),
    /// Estimated frequency of multiple winners under impartial culture.
    ResolvabilityStats {
        #[arg(long, default_value = "defensible,minimax,split-cycle")]
        methods: String,
        #[arg(long, default_value_t = 4)]
        alternatives: usize,
        #[arg(long, default_value_t = 10)]
        voters: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
    /// Recompute every checkable number from the fixtures.
    VerifyPaper {
        /// Directory holding replacement fixture files.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Exhaustive impossibility check over the proof graphs.
    VerifyTheorem {
        #[arg(long)]
        resynthesize: bool,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long)]
    profile: Option<PathBuf>,
    #[arg(long)]
    omg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxiomName {
    PositiveInvolvement,
    Condorcet,
    Resolvability,
    OmgInvariance,
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Weak,
    Linear,
}

#[derive(Args)]
struct AxiomArgs {
    #[arg(long, value_enum)]
    axiom: AxiomName,
    #[arg(long)]
    method: String,
    #[arg(long)]
    profile: Option<PathBuf>,
    #[arg(long)]
    omg: Option<PathBuf>,
    /// Ballot added to --profile, e.g. `a>b=c`.
    #[arg(long)]
    ballot: Option<String>,
    /// Sampled instances for the positive-involvement search.
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 4)]
    alternatives: usize,
    #[arg(long, default_value_t = 1)]
    min_voters: u64,
    #[arg(long, default_value_t = 15)]
    max_voters: u64,
    /// Realizations for the ordinal margin invariance check.
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = Domain::Weak)]
    domain: Domain,
}

enum Failure {
    /// Exit code 1.
    Verification(String),
    /// Exit code 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Fixture(_) | Error::TieExplosion { .. } | Error::EmptyIntersection(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Winners { input, methods } => winners(input, methods, json),
        Command::Margins { profile } => margins(profile, json),
        Command::Omg { profile } => {
            let g = read_profile(profile)?.ordinal_margin_graph();
            if json {
                say!("{}", g.to_json());
            } else {
                say!("winner\tloser\trank");
                let mut edges: Vec<_> = g.edges().iter().collect();
                edges.sort_by_key(|(_, &r)| r);
                for (&(x, y), r) in edges {
                    say!("{}\t{}\t{r}", g.vertices()[x], g.vertices()[y]);
                }
            }
            Ok(())
        }
        Command::Enumerate { n, methods } => {
            let methods = match methods {
                Some(m) => MethodId::parse_list(m)?,
                None => MethodId::TABLE1.to_vec(),
            };
            table(*n, &methods, json)
        }
        Command::Table1 => table(4, &MethodId::TABLE1, json),
        Command::Realize { omg, margins } => {
            let g = read_graph(omg)?;
            let p = realize_omg(&g, margins.as_deref())?;
            emit_profile(&p, json);
            Ok(())
        }
        Command::Synthesize {
            from,
            to,
            favorite,
            bound,
            minimize,
        } => {
            let inst =
                TransitionInstance::new(read_graph(from)?, read_graph(to)?, favorite, *bound)?;
            let opts = SynthesisOptions {
                minimize: *minimize,
            };
            let Some(sol) = synthesize_transition_with(&inst, opts)? else {
                return Err(Failure::Verification(format!(
                    "no transition within {bound} voters"
                )));
            };
            if json {
                let v = json!({
                    "base": sol.base,
                    "added": sol.added,
                    "favorite": favorite,
                    "total_voters": sol.total_voters(),
                });
                say!("{v}");
            } else {
                say!("# base profile ({} voters)", sol.base.num_voters());
                say_raw!("{}", sol.base);
                say!(
                    "# added voters ({}), all ranking {favorite} uniquely first",
                    sol.added.num_voters()
                );
                say_raw!("{}", sol.added);
            }
            Ok(())
        }
        Command::VerifyTransition {
            base,
            added,
            from,
            to,
            favorite,
        } => {
            let inst =
                TransitionInstance::new(read_graph(from)?, read_graph(to)?, favorite, u64::MAX)?;
            let sol = TransitionSolution {
                base: read_profile(base)?,
                added: read_profile(added)?,
            };
            let check = verify_transition(&sol, &inst);
            if json {
                say!(
                    "{}",
                    json!({ "ok": check.ok(), "failures": check.failures })
                );
            } else {
                say!("{check}");
            }
            if check.ok() {
                Ok(())
            } else {
                Err(Failure::Verification(check.to_string()))
            }
        }
        Command::AxiomCheck(args) => axiom_check(args, cli.seed, json),
        Command::ResolvabilityStats {
            methods,
            alternatives,
            voters,
            samples,
        } => {
            let methods = MethodId::parse_list(methods)?;
            let estimates = methods
                .iter()
                .map(|&m| estimate_tie_frequency(m, *alternatives, *voters, *samples, cli.seed))
                .collect::<posinv::Result<Vec<_>>>()?;
            if json {
                say!("{}", to_json(&estimates));
            } else {
                say!("method\tmodel\talternatives\tvoters\tsamples\tseed\tties\tfrequency(exact)\tfrequency(decimal)\tci95_low\tci95_high");
                for e in &estimates {
                    say!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}",
                        e.method,
                        e.model,
                        e.alternatives,
                        e.voters,
                        e.samples,
                        e.seed,
                        e.ties,
                        e.frequency,
                        format_decimal(&e.frequency, 6),
                        e.interval.0,
                        e.interval.1
                    );
                }
            }
            Ok(())
        }
        Command::VerifyPaper { fixtures } => {
            let fx = load_fixtures(fixtures.as_deref())?;
            let items = run_audit(&fx);
            if json {
                say!("{}", to_json(&items));
            } else {
                for it in &items {
                    let status = if it.passed { "PASS" } else { "FAIL" };
                    say!("{status}\t{}\t{}", it.name, it.detail);
                }
            }
            match items.iter().find(|it| !it.passed) {
                None => {
                    if !json {
                        say!("all {} checks passed", items.len());
                    }
                    Ok(())
                }
                Some(it) => Err(Failure::Verification(format!("{}: {}", it.name, it.detail))),
            }
        }
        Command::VerifyTheorem {
            resynthesize,
            fixtures,
        } => {
            let fx = load_fixtures(fixtures.as_deref())?;
            let report = verify_theorem1_with(
                &fx,
                TheoremOptions {
                    resynthesize: *resynthesize,
                },
            )?;
            if json {
                say!("{}", to_json(&report));
            } else {
                for t in &report.transitions {
                    say!(
                        "transition\t{}\t{}\t{} voters",
                        t.name,
                        t.origin,
                        t.total_voters
                    );
                }
                for g in &report.graphs {
                    say!("candidates\t{}\t{{{}}}", g.name, g.candidates.join(","));
                }
                for b in &report.branches {
                    say!("branch\t{}", b.assumption);
                    for s in &b.steps {
                        say!("  {s}");
                    }
                    match &b.contradiction {
                        Some(c) => say!("  contradiction: {c}"),
                        None => say!("  no contradiction"),
                    }
                }
                say!(
                    "assignments examined: {}, surviving: {}",
                    report.assignments_examined,
                    report.surviving.len()
                );
            }
            if report.verified() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} assignments survive",
                    report.surviving.len()
                )))
            }
        }
    }
}

fn winners(input: &InputArgs, methods: &str, json: bool) -> Outcome {
    let methods = MethodId::parse_list(methods)?;
    let profile = input.profile.as_deref().map(read_profile).transpose()?;
    let graph = input.omg.as_deref().map(read_graph).transpose()?;
    let mut rows = Vec::new();
    for m in methods {
        let w = match (&profile, &graph) {
            (Some(p), _) => evaluate(m, p)?,
            (None, Some(g)) => evaluate(m, g)?,
            (None, None) => unreachable!("clap requires one input"),
        };
        rows.push((m, w));
    }
    if json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(m, w)| json!({ "method": m, "winners": w }))
            .collect();
        say!("{}", Value::Array(v));
    } else {
        say!("method\twinners");
        for (m, w) in rows {
            say!("{m}\t{{{}}}", w.labels().join(","));
        }
    }
    Ok(())
}

fn margins(path: &Path, json: bool) -> Outcome {
    let lines = margin_lines(&read_profile(path)?);
    if json {
        let v: Vec<Value> = lines
            .iter()
            .map(|l| {
                json!({
                    "winner": l.winner.as_str(),
                    "loser": l.loser.as_str(),
                    "support_for": l.support_for,
                    "support_against": l.support_against,
                    "margin": l.margin(),
                })
            })
            .collect();
        say!("{}", Value::Array(v));
    } else if lines.is_empty() {
        say!("no majority preferences");
    } else {
        for l in lines {
            say!("{l}");
        }
    }
    Ok(())
}

fn table(n: usize, methods: &[MethodId], json: bool) -> Outcome {
    let rows = irresoluteness(n, methods)?;
    if json {
        say!("{}", to_json(&rows));
    } else {
        say!("method\tnum_multiple\tmean_size(exact)\tmean_size(decimal)\tmax_size");
        for r in rows {
            say!(
                "{}\t{}\t{}\t{}\t{}",
                r.method.name(),
                r.num_multiple,
                r.mean_size,
                r.mean_decimal(),
                r.max_size
            );
        }
    }
    Ok(())
}

fn axiom_check(a: &AxiomArgs, seed: u64, json: bool) -> Outcome {
    let method = match MethodId::parse_list(&a.method)?.as_slice() {
        [m] => *m,
        _ => return Err(Failure::Usage("--method takes exactly one token".into())),
    };
    let need_profile = || {
        a.profile
            .as_deref()
            .map(read_profile)
            .unwrap_or_else(|| Err(Failure::Usage("this axiom needs --profile".into())))
    };
    let verdicts: Vec<AxiomVerdict> = match a.axiom {
        AxiomName::PositiveInvolvement => {
            if a.profile.is_none() {
                let cfg = SearchConfig {
                    seed,
                    budget: a.budget,
                    min_voters: a.min_voters,
                    max_voters: a.max_voters,
                };
                let report = search_pi_violation(method, a.alternatives, cfg)?;
                if json {
                    say!("{}", to_json(&report));
                } else {
                    say!("{}\t{}", method, report.summary());
                    if let Some(w) = &report.witness {
                        say!("{}", to_json(w));
                    }
                }
                return Ok(());
            }
            let p = need_profile()?;
            let Some(text) = &a.ballot else {
                return Err(Failure::Usage("--profile requires --ballot".into()));
            };
            let b = Ballot::parse(text, p.alternatives())?;
            vec![check_positive_involvement(method, &p, &b)?]
        }
        AxiomName::Condorcet => check_condorcet_criteria(method, &need_profile()?)?.to_vec(),
        AxiomName::Resolvability => {
            let domain = match a.domain {
                Domain::Weak => BallotDomain::Weak,
                Domain::Linear => BallotDomain::Linear,
            };
            vec![check_single_voter_resolvability(
                method,
                &need_profile()?,
                domain,
            )?]
        }
        AxiomName::OmgInvariance => {
            let g = match (&a.omg, &a.profile) {
                (Some(path), _) => read_graph(path)?,
                (None, Some(path)) => read_profile(path)?.ordinal_margin_graph(),
                (None, None) => return Err(Failure::Usage("this axiom needs --omg".into())),
            };
            vec![check_omg_invariance(method, &g, a.trials, seed)?]
        }
    };
    if json {
        say!("{}", to_json(&verdicts));
    } else {
        for v in &verdicts {
            let status = match (v.holds, v.vacuous) {
                (true, true) => "holds (vacuously)",
                (true, false) => "holds",
                (false, _) => "violated",
            };
            let axiom = to_json(&v.axiom);
            say_raw!("{method}\t{}\t{status}", axiom.trim_matches('"'));
            if let Some(note) = &v.note {
                say_raw!("\t{note}");
            }
            say!();
            if let Some(w) = &v.witness {
                say!("{}", to_json(w));
            }
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_profile(path: &Path) -> Result<Profile, Failure> {
    Profile::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<OrdinalMarginGraph, Failure> {
    OrdinalMarginGraph::from_json(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_fixtures(dir: Option<&Path>) -> Result<FixtureSet, Failure> {
    match dir {
        None => Ok(FixtureSet::builtin()),
        Some(d) => FixtureSet::from_dir(d).map_err(|e| Failure::Verification(e.to_string())),
    }
}

fn emit_profile(p: &Profile, json: bool) {
    if json {
        say!("{}", json!({ "profile": p, "voters": p.num_voters() }));
    } else {
        say_raw!("{p}");
    }
}
