mod config;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crystal_core::abacus::{self, to_beta};
use crystal_core::crystal::{crystal_closure, ChargedPartition, CrystalElement, WeylWord};
use crystal_core::kleshchev::{self, KleshchevVerdict};
use crystal_core::partition::restricted_tuples_up_to;
use crystal_core::path_model::{self, fraction_string, StretchedElement};
use crystal_core::verify::{run_suite, Suite};
use crystal_core::{Multipartition, Partition};

use config::{
    check_word, parse_partition, parse_partition_list, parse_u32_list, Config, Format,
    PartitionList, U32List, UsageError,
};

#[derive(Parser)]
#[command(
    name = "crystal",
    version,
    about = "Crystal combinatorics of restricted partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for randomized verification.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, env = "CRYSTAL_WORKERS", global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Level {
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemazureKind {
    /// `B_y`: elements below the extremal vector.
    Lower,
    /// `B^w`: elements above the extremal vector.
    Upper,
}

#[derive(Subcommand)]
enum Command {
    /// Roof e-core (iterated up moves).
    Roof(Level),
    /// Base e-core (iterated down moves).
    Base(Level),
    /// First core of the stretched path.
    Ceil(Level),
    /// Last core of the stretched path.
    Floor(Level),
    /// Stretched path of λ as cores with rational masses.
    Lspath {
        #[command(flatten)]
        level: Level,
        /// Lowering word to follow instead of the canonical one.
        #[arg(long, value_parser = parse_u32_list)]
        word: Option<U32List>,
    },
    /// Mullineux image.
    Mullineux(Level),
    /// Translation τ_m of an e-core at charge 0.
    Tau(Level),
    /// Kleshchev test for λ ⊗ μ, or for a multipartition with --components.
    Kleshchev {
        #[arg(long)]
        e: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, value_parser = parse_partition, required_unless_present = "components")]
        lambda: Option<Partition>,
        #[arg(long, value_parser = parse_partition, required_unless_present = "components")]
        mu: Option<Partition>,
        /// Components λ^(1), …, λ^(r) as a JSON array.
        #[arg(long, value_parser = parse_partition_list, requires = "charges")]
        components: Option<PartitionList>,
        /// Charges of the components, zeros first.
        #[arg(long, value_parser = parse_u32_list)]
        charges: Option<U32List>,
        /// Print the full certificate chain.
        #[arg(long)]
        explain: bool,
    },
    /// All Kleshchev λ ⊗ μ of total size n.
    EnumerateKleshchev {
        #[arg(long)]
        e: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// Closure of ∅ ⊗ … ⊗ ∅ under the lowering operators.
    CrystalGraph {
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_u32_list, default_value = "[0]")]
        charges: U32List,
        #[arg(long)]
        depth: usize,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Demazure crystal membership.
    Demazure {
        #[command(flatten)]
        level: Level,
        /// Weyl word, leftmost letter applied last.
        #[arg(long, value_parser = parse_u32_list)]
        word: U32List,
        #[arg(long, value_enum, default_value = "lower")]
        kind: DemazureKind,
    },
    /// Exhaustive consistency suites.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        max_n: usize,
    },
    /// Beta numbers of λ at charge m.
    Abacus {
        #[command(flatten)]
        level: Level,
        /// Draw the runners.
        #[arg(long)]
        show: bool,
    },
}

/// What a command produced.
enum Output {
    Json(Value),
    Text(String),
}

struct Done {
    output: Output,
    failed: bool,
}

impl From<Output> for Done {
    fn from(output: Output) -> Self {
        Done {
            output,
            failed: false,
        }
    }
}

fn level_config(level: &Level, cli: &Cli) -> Result<Config, UsageError> {
    Config::new(
        level.e,
        &[level.m],
        level.lambda.size(),
        cli.format,
        cli.seed,
    )
}

fn partition_output(x: &Partition, format: Format) -> Output {
    match format {
        Format::Text => Output::Text(x.to_string()),
        _ => Output::Json(json!(x)),
    }
}

fn path_text(path: &StretchedElement) -> String {
    let pieces: Vec<String> = path
        .segments()
        .iter()
        .map(|s| format!("{}^{}", s.core, fraction_string(&s.mass)))
        .collect();
    pieces.join(" ⊗ ")
}

fn verdict_text(v: &KleshchevVerdict) -> String {
    match v.first_failure() {
        None => "accepted".to_string(),
        Some(c) => format!(
            "rejected: {} ⊉ {} at boundary {}",
            c.lower, c.upper, c.boundary
        ),
    }
}

fn explain(x: &Multipartition, verdict: &KleshchevVerdict) -> Value {
    let components: Vec<Value> = x
        .components()
        .iter()
        .zip(x.charges())
        .map(|(lam, &m)| {
            let beta = to_beta(lam, m);
            let (base, down_steps) = beta.base_with_steps();
            let (roof, up_steps) = beta.roof_with_steps();
            json!({
                "partition": lam,
                "charge": m,
                "beta": {"threshold": beta.threshold(), "exceptional": beta.exceptional()},
                "base": base.to_partition(),
                "down_steps": down_steps,
                "roof": roof.to_partition(),
                "up_steps": up_steps,
            })
        })
        .collect();
    json!({"accepted": verdict.accepted, "components": components, "checks": verdict.checks})
}

fn run(cli: &Cli) -> Result<Done, UsageError> {
    let done = match &cli.command {
        Command::Roof(l)
        | Command::Base(l)
        | Command::Ceil(l)
        | Command::Floor(l)
        | Command::Mullineux(l)
        | Command::Tau(l) => {
            let cfg = level_config(l, cli)?;
            let m = cfg.m();
            let result = match &cli.command {
                Command::Roof(_) => abacus::roof(&l.lambda, m)?,
                Command::Base(_) => abacus::base(&l.lambda, m)?,
                Command::Ceil(_) => path_model::ceil(&l.lambda, m)?,
                Command::Floor(_) => path_model::floor(&l.lambda, m)?,
                Command::Mullineux(_) => path_model::mullineux(&l.lambda, m)?,
                _ => kleshchev::tau(&l.lambda, m)?,
            };
            partition_output(&result, cfg.format).into()
        }
        Command::Lspath { level, word } => {
            let cfg = level_config(level, cli)?;
            let m = cfg.m();
            let path = match word {
                None => path_model::ls_path(&level.lambda, m)?,
                Some(U32List(w)) => {
                    check_word(w, cfg.e)?;
                    let letters = WeylWord::from_values(w, cfg.e);
                    let path =
                        path_model::ls_path_along(letters.letters(), m).ok_or_else(|| {
                            UsageError("the word annihilates the highest-weight element".into())
                        })?;
                    let reached = letters
                        .letters()
                        .iter()
                        .try_fold(ChargedPartition::empty(m), |acc, &i| acc.f(i));
                    if reached.map(|x| x.shape) != Some(level.lambda.clone()) {
                        return Err(UsageError(format!(
                            "the word does not lower ∅ to {}",
                            level.lambda
                        )));
                    }
                    path
                }
            };
            match cfg.format {
                Format::Text => Output::Text(path_text(&path)),
                _ => Output::Json(serde_json::to_value(&path).expect("paths serialize")),
            }
            .into()
        }
        Command::Kleshchev {
            e,
            m,
            lambda,
            mu,
            components,
            charges,
            explain: want_explain,
        } => {
            let (comps, charge_values) = match (components, charges) {
                (Some(PartitionList(c)), Some(U32List(ch))) => (c.clone(), ch.clone()),
                _ => (
                    vec![
                        lambda.clone().expect("required by clap"),
                        mu.clone().expect("required by clap"),
                    ],
                    vec![0, *m],
                ),
            };
            let n = comps.iter().map(Partition::size).sum();
            let cfg = Config::new(*e, &charge_values, n, cli.format, cli.seed)?;
            let x = Multipartition::new(comps, cfg.charges.clone())?;
            let verdict = kleshchev::is_kleshchev_multi(&x)?;
            match (cfg.format, want_explain) {
                (Format::Text, false) => Output::Text(verdict_text(&verdict)),
                (Format::Text, true) => {
                    let detail =
                        serde_json::to_string_pretty(&explain(&x, &verdict)).expect("serializes");
                    Output::Text(format!("{}\n{detail}", verdict_text(&verdict)))
                }
                (_, true) => Output::Json(explain(&x, &verdict)),
                (_, false) => Output::Json(serde_json::to_value(&verdict).expect("serializes")),
            }
            .into()
        }
        Command::EnumerateKleshchev { e, m, n } => {
            let cfg = Config::new(*e, &[0, *m], *n, cli.format, cli.seed)?;
            let mut found = Vec::new();
            for t in restricted_tuples_up_to(cfg.n, cfg.e, 2) {
                if t[0].size() + t[1].size() == cfg.n
                    && kleshchev::is_kleshchev_bipartition(&t[0], &t[1], cfg.charges[1])?.accepted
                {
                    found.push((t[0].clone(), t[1].clone()));
                }
            }
            match cfg.format {
                Format::Text => {
                    let lines: Vec<String> =
                        found.iter().map(|(l, u)| format!("{l} ⊗ {u}")).collect();
                    Output::Text(lines.join("\n"))
                }
                _ => Output::Json(json!(found
                    .iter()
                    .map(|(l, u)| json!({"lambda": l, "mu": u}))
                    .collect::<Vec<_>>())),
            }
            .into()
        }
        Command::CrystalGraph {
            e,
            charges,
            depth,
            dot,
        } => {
            let cfg = Config::new(*e, &charges.0, *depth, cli.format, cli.seed)?;
            let graph = crystal_closure(&cfg.charges, cfg.n)?;
            if *dot || cfg.format == Format::Dot {
                Output::Text(graph.to_dot().trim_end().to_string()).into()
            } else {
                let edges: Vec<Value> = graph
                    .edges()
                    .iter()
                    .map(|x| json!({"from": x.from, "to": x.to, "residue": x.residue}))
                    .collect();
                let nodes: Vec<&[Partition]> = graph
                    .nodes()
                    .iter()
                    .map(Multipartition::components)
                    .collect();
                match cfg.format {
                    Format::Text => Output::Text(format!("{} nodes, {} edges", nodes.len(), edges.len())),
                    _ => Output::Json(json!({"e": cfg.e.get(), "charges": charges.0, "nodes": nodes, "edges": edges})),
                }
                .into()
            }
        }
        Command::Demazure { level, word, kind } => {
            let cfg = level_config(level, cli)?;
            check_word(&word.0, cfg.e)?;
            let w = WeylWord::from_values(&word.0, cfg.e);
            let member = match kind {
                DemazureKind::Lower => kleshchev::in_demazure_lower(&level.lambda, &w, cfg.m())?,
                DemazureKind::Upper => kleshchev::in_demazure_upper(&level.lambda, &w, cfg.m())?,
            };
            match cfg.format {
                Format::Text => Output::Text(member.to_string()),
                _ => Output::Json(json!(member)),
            }
            .into()
        }
        Command::Verify { suite, e, max_n } => {
            let cfg = Config::new(*e, &[], *max_n, cli.format, cli.seed)?;
            let report = run_suite(*suite, cfg.e, cfg.n, cfg.seed)?;
            let failed = !report.passed();
            let output = match cfg.format {
                Format::Text => {
                    let status = if failed { "FAIL" } else { "PASS" };
                    let mut line = format!(
                        "{status} suite={} e={} max-n={} cases={}",
                        report.suite, report.e, report.max_n, report.cases
                    );
                    if let Some(c) = &report.counterexample {
                        line.push('\n');
                        line.push_str(&c.to_string());
                    }
                    Output::Text(line)
                }
                _ => Output::Json(serde_json::to_value(&report).expect("serializes")),
            };
            Done { output, failed }
        }
        Command::Abacus { level, show } => {
            let cfg = level_config(level, cli)?;
            let beta = to_beta(&level.lambda, cfg.m());
            if *show || cfg.format == Format::Text {
                Output::Text(beta.render().trim_end().to_string()).into()
            } else {
                Output::Json(json!({
                    "charge": beta.charge(),
                    "threshold": beta.threshold(),
                    "exceptional": beta.exceptional(),
                }))
                .into()
            }
        }
    };
    Ok(done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("error: cannot start {workers} workers: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(done) => {
            match done.output {
                Output::Json(v) => println!("{v}"),
                Output::Text(s) if !s.is_empty() => println!("{s}"),
                Output::Text(_) => {}
            }
            if done.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
