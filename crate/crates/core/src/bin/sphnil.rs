use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sphnil::catalog::{self, normality_census, render_text, summary, CaseReport, Catalog, RunOptions, Runner};
use sphnil::rootsys::RootSystem;

#[derive(Parser)]
#[command(name = "sphnil", version, about = "Verify spherical nilpotent orbit data")]
struct Cli {
    /// catalog file (defaults to the built-in one)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// degree / height bound for enumerations
    #[arg(long, global = true, default_value_t = 8)]
    bound: i64,
    /// skip the rerun at twice the bound
    #[arg(long, global = true)]
    no_stability: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every case in the catalog
    VerifyAll,
    /// Run one case
    Case {
        id: String,
        /// comma-separated subset of: triples, labels, system, covering, low-triples, normality, semigroup, weights
        #[arg(long, value_delimiter = ',')]
        sections: Option<Vec<String>>,
    },
    /// Exponent m of the Z_K character for an abelian nilradical
    Hermitian {
        /// e.g. E6
        ty: String,
        /// simple root, `a1` or `1`
        root: String,
    },
    /// List case ids
    List,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(cli: &Cli) -> Result<Catalog, sphnil::Error> {
    match &cli.catalog {
        Some(p) => catalog::load_catalog(p),
        None => Catalog::builtin(),
    }
}

fn emit(cli: &Cli, reports: &[CaseReport], census: bool) -> ExitCode {
    let (pass, fail, skip) = summary(reports);
    let (computed, recorded, n) = normality_census(reports);
    match cli.format {
        Format::Text => {
            print!("{}", render_text(reports));
            if census {
                println!(
                    "normality: {n} verdicts computed; non-normal computed [{}], recorded [{}]",
                    computed.join(", "),
                    recorded.join(", ")
                );
            }
            println!("summary: {pass} passed, {fail} failed, {skip} skipped");
        }
        Format::Structured => {
            let mut v = json!({
                "cases": reports,
                "summary": {"passed": pass, "failed": fail, "skipped": skip},
            });
            if census {
                v["normality"] =
                    json!({"computed": n, "non_normal_computed": computed, "non_normal_recorded": recorded});
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    if fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.bound < 1 {
        return usage_error("--bound must be positive");
    }
    if let Cmd::Hermitian { ty, root } = &cli.cmd {
        let Ok(root) = root.trim_start_matches('a').parse::<usize>() else {
            return usage_error(format!("simple root `{root}` is not of the form a<i>"));
        };
        let m = RootSystem::from_str_type(ty).and_then(|rs| {
            if root == 0 || root > rs.rank() {
                Err(sphnil::Error::Index(format!("root {root} of {ty}")))
            } else {
                rs.hermitian_exponent(root - 1)
            }
        });
        return match m {
            Ok(m) => {
                match cli.format {
                    Format::Text => println!("{ty} a{root}: m = {m}"),
                    Format::Structured => println!("{}", json!({"type": ty, "root": root, "m": m})),
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        };
    }
    let cat = match load(&cli) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let mut opts = RunOptions {
        bound: cli.bound,
        stability: !cli.no_stability,
        sections: None,
    };
    match &cli.cmd {
        Cmd::List => {
            for c in &cat.cases {
                println!("{}", c.id);
            }
            ExitCode::SUCCESS
        }
        Cmd::VerifyAll => {
            let mut r = Runner::new(&cat, opts);
            let reports = r.run_all();
            emit(&cli, &reports, true)
        }
        Cmd::Case { id, sections } => {
            if let Some(s) = sections {
                if let Some(bad) = s.iter().find(|x| !catalog::SECTIONS.contains(&x.as_str())) {
                    return usage_error(format!(
                        "unknown section `{bad}`; choose from {}",
                        catalog::SECTIONS.join(", ")
                    ));
                }
                opts.sections = Some(s.clone());
            }
            let mut r = Runner::new(&cat, opts);
            match r.run_id(id) {
                Ok(rep) => emit(&cli, &[rep], false),
                Err(e) => usage_error(e),
            }
        }
        Cmd::Hermitian { .. } => unreachable!(),
    }
}
