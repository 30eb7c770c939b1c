use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hgs_core::catalog::{catalog_labels, census_of, Catalog};
use hgs_core::count::{
    e_brute_perm, e_byott, e_formula_product, e_formula_self, e_fpf_inhol, BruteOptions, CountResult,
};
use hgs_core::holomorph::EnumOptions;
use hgs_core::report::{render_counts, render_screen, render_suite, Format, SCHEMA_VERSION};
use hgs_core::screen::{classify_group, StructureKind};
use hgs_core::verify::{run_suite, Suite, SuiteOptions};
use hgs_core::{are_isomorphic, automorphism_group, FiniteGroup, HgsError, Limits};

#[derive(Parser)]
#[command(name = "hgs", version, about = "Count Hopf-Galois structures e(G, N) on finite groups")]
struct Cli {
    /// Emit versioned JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic data about a group.
    Info {
        #[arg(short = 'G')]
        g: String,
    },
    /// Compute e(G, N) by one method.
    Count {
        #[arg(short = 'G')]
        g: String,
        #[arg(short = 'N')]
        n: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Checkpoint file to continue from (and keep updating).
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Checkpoint file to write, starting fresh.
        #[arg(long, conflicts_with = "resume")]
        checkpoint: Option<PathBuf>,
        /// Skip the all-pairs re-check of each crossed homomorphism.
        #[arg(long)]
        no_verify_pairs: bool,
        /// Let the brute-force route run at order 12.
        #[arg(long)]
        allow_12: bool,
    },
    /// Screen N against the shape and lifting conditions for G.
    Screen {
        #[arg(short = 'G')]
        g: String,
        #[arg(short = 'N')]
        n: String,
    },
    /// Run a fixed verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Where stretch runs keep their checkpoints.
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
        /// Include the optional stretch pairs with G = S6.
        #[arg(long)]
        optional: bool,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Every label the resolver understands.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Byott,
    Brute,
    Fpf,
}

/// Maps onto the documented exit codes.
enum Failure {
    Check(String),
    Usage(String),
    Infeasible(String),
}

impl From<HgsError> for Failure {
    fn from(e: HgsError) -> Failure {
        match e {
            HgsError::CapExceeded { .. } => Failure::Infeasible(e.to_string()),
            HgsError::UnknownLabel(_) | HgsError::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Check(e.to_string()),
        }
    }
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Table
    }
}

fn resolve(cat: &Catalog, spec: &str) -> Result<Arc<FiniteGroup>, Failure> {
    cat.resolve(spec).map_err(|e| match e {
        HgsError::CapExceeded { .. } => Failure::Infeasible(e.to_string()),
        e => Failure::Usage(format!("cannot resolve `{spec}`: {e}")),
    })
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = std::env::var("HGS_JOBS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        if jobs > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("hgs: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hgs: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Infeasible(msg)) => {
            eprintln!("hgs: infeasible: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits::from_env();
    let cat = Catalog::new(limits);
    let fmt = format(cli.json);
    match cli.command {
        Command::Info { g } => {
            let g = resolve(&cat, &g)?;
            emit(&info(&g, &limits, fmt)?);
        }
        Command::Count {
            g,
            n,
            method,
            resume,
            checkpoint,
            no_verify_pairs,
            allow_12,
        } => {
            let g = resolve(&cat, &g)?;
            let n = resolve(&cat, &n)?;
            let rows = match method {
                MethodArg::Formula => vec![formula(&g, &n, &limits)?],
                MethodArg::Byott => {
                    let opts = EnumOptions {
                        verify_pairs: !no_verify_pairs,
                        checkpoint: resume.clone().or(checkpoint),
                        resume: resume.is_some(),
                        limits,
                        ..EnumOptions::default()
                    };
                    vec![e_byott(&g, &n, &opts)?]
                }
                MethodArg::Fpf => vec![e_fpf_inhol(&g, &n, &limits)?],
                MethodArg::Brute => {
                    // G is offered as a second type so its own class is named
                    let mut types = vec![n.clone()];
                    if are_isomorphic(&g, &n).is_none() {
                        types.push(g.clone());
                    }
                    let b = e_brute_perm(&g, &types, &BruteOptions { allow_12, limits })?;
                    b.to_results()
                }
            };
            emit(&render_counts(&rows, fmt));
        }
        Command::Screen { g, n } => {
            let g = resolve(&cat, &g)?;
            let n = resolve(&cat, &n)?;
            let r = hgs_core::screen::screen_candidate(&g, &n, &limits)?;
            emit(&render_screen(&r, fmt));
        }
        Command::Verify {
            suite,
            checkpoint_dir,
            optional,
        } => {
            let suite: Suite = suite.parse().map_err(|e: HgsError| Failure::Usage(e.to_string()))?;
            let opts = SuiteOptions {
                limits,
                checkpoint_dir,
                stretch_optional: optional,
                ..SuiteOptions::default()
            };
            let report = run_suite(suite, &opts);
            emit(&render_suite(&report, fmt));
            if !report.passed() {
                return Err(Failure::Check(format!("{} item(s) failed", report.failures().len())));
            }
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => match fmt {
            Format::Json => {
                #[derive(Serialize)]
                struct Entry {
                    label: &'static str,
                    description: &'static str,
                }
                #[derive(Serialize)]
                struct Doc {
                    schema_version: u32,
                    kind: &'static str,
                    labels: Vec<Entry>,
                }
                let doc = Doc {
                    schema_version: SCHEMA_VERSION,
                    kind: "catalog",
                    labels: catalog_labels()
                        .into_iter()
                        .map(|(label, description)| Entry { label, description })
                        .collect(),
                };
                emit(&serde_json::to_string_pretty(&doc).expect("serializes"));
            }
            Format::Table => {
                let lines: Vec<String> = catalog_labels()
                    .into_iter()
                    .map(|(label, description)| format!("{label:<12}  {description}"))
                    .collect();
                emit(&lines.join("\n"));
            }
        },
    }
    Ok(())
}

/// `e(G, G)` when `N ≅ G`, `e(G, A×C_p)` when `N` has that shape.
fn formula(g: &Arc<FiniteGroup>, n: &Arc<FiniteGroup>, limits: &Limits) -> Result<CountResult, Failure> {
    if g.order() == n.order() && are_isomorphic(g, n).is_some() {
        return Ok(e_formula_self(g, limits)?);
    }
    if is_socle_times_cp(g, n, limits)? {
        let r = e_formula_product(g, limits)?;
        return Ok(CountResult { n: n.label(), ..r });
    }
    Err(Failure::Check(format!(
        "no closed formula for N = {}; it must be G itself or A x C_p with A the socle of G (try --method byott, or `hgs screen`)",
        n.label()
    )))
}

/// `N ≅ A×C_p` with `A` the socle of `G` and `p` its index.
fn is_socle_times_cp(g: &Arc<FiniteGroup>, n: &Arc<FiniteGroup>, limits: &Limits) -> Result<bool, Failure> {
    let (a_sub, p) = hgs_core::screen::socle_and_prime(g, limits)?;
    let class = classify_group(n, limits)?;
    match class.kind {
        StructureKind::DirectProductSimpleCyclic { p: q, .. } if q == p => {
            let a = Arc::new(g.subgroup_as_group(&a_sub).0);
            let a_n = Arc::new(n.subgroup_as_group(&class.witnesses[0]).0);
            Ok(are_isomorphic(&a, &a_n).is_some())
        }
        _ => Ok(false),
    }
}

#[derive(Serialize)]
struct Info {
    schema_version: u32,
    kind: &'static str,
    label: String,
    order: usize,
    digest: String,
    abelian: bool,
    perfect: bool,
    solvable: bool,
    center_order: usize,
    aut_order: Option<usize>,
    classification: StructureKind,
    element_orders: Vec<(usize, usize)>,
    generators: Vec<usize>,
}

fn info(g: &Arc<FiniteGroup>, limits: &Limits, fmt: Format) -> Result<String, Failure> {
    let class = classify_group(g, limits)?;
    let aut_order = match automorphism_group(g, limits) {
        Ok(a) => Some(a.order()),
        Err(e) if e.is_infeasible() => None,
        Err(e) => return Err(e.into()),
    };
    let doc = Info {
        schema_version: SCHEMA_VERSION,
        kind: "info",
        label: g.label(),
        order: g.order(),
        digest: g.digest(),
        abelian: g.is_abelian(),
        perfect: g.is_perfect(),
        solvable: g.is_solvable(),
        center_order: g.center().order(),
        aut_order,
        classification: class.kind,
        element_orders: census_of(g).into_iter().collect(),
        generators: g.generators().to_vec(),
    };
    Ok(match fmt {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializes")),
        Format::Table => {
            let census: Vec<String> = doc.element_orders.iter().map(|(k, c)| format!("{k}:{c}")).collect();
            format!(
                "label           {}\norder           {}\ndigest          {}\nabelian         {}\nperfect         {}\nsolvable        {}\ncenter order    {}\n|Aut|           {}\nclassification  {:?}\nelement orders  {}\n",
                doc.label,
                doc.order,
                doc.digest,
                doc.abelian,
                doc.perfect,
                doc.solvable,
                doc.center_order,
                doc.aut_order.map_or("over cap".to_string(), |o| o.to_string()),
                doc.classification,
                census.join(" "),
            )
        }
    })
}
