use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slicetorus::catalog::{self, Evidence};
use slicetorus::diagram::PlanarDiagram;
use slicetorus::exactalg::RingTag;
use slicetorus::exec::Mode;
use slicetorus::homology::{self, HomologyOptions};
use slicetorus::invariants::{self, InvariantReport};
use slicetorus::lspace::{self, QaOutcome, ResolutionTree};
use slicetorus::slnss::{self, TriplyGradedTable};
use slicetorus::{Error, Result};

#[derive(Parser)]
#[command(
    name = "sts",
    version,
    about = "Khovanov-type invariants, L-space certificates and slice-torus tables"
)]
struct Cli {
    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of invariants for a knot.
    Invariants {
        knot: String,
        #[arg(long)]
        json: bool,
    },
    /// Bar-Natan complex as JSON.
    Ckh {
        knot: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        simplify: bool,
    },
    /// Homology of the Bar-Natan complex.
    Homology {
        knot: String,
        #[arg(long, default_value = "ZH")]
        ring: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// ss-tilde over a ring with H.
    Ss {
        knot: String,
        #[arg(long, default_value = "ZH")]
        ring: String,
    },
    /// Rasmussen invariant over a field.
    S {
        knot: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Signature.
    Sig { knot: String },
    /// Determinant.
    Det { knot: String },
    /// Search for a quasi-alternating certificate.
    Qa {
        knot: String,
        #[arg(long, default_value_t = lspace::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check a resolution tree for an L-space branched double cover.
    LspaceVerify {
        tree: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Collapse check on a triply graded table.
    SlnCheck {
        table: PathBuf,
        /// Range `lo..hi` (inclusive) or a single N.
        #[arg(long, default_value = "3..10")]
        n: String,
    },
    /// Derive and render the q_M / theta table for a catalog.
    Table {
        catalog: PathBuf,
        /// Compare against a reference table.
        #[arg(long)]
        diff: Option<PathBuf>,
        /// Additional resolution trees used as L-space evidence.
        #[arg(long)]
        tree: Vec<PathBuf>,
    },
}

enum Outcome {
    Done,
    Inconclusive,
}

fn knot(spec: &str) -> Result<PlanarDiagram> {
    catalog::lookup(spec)
}

fn parse_range(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::Syntax(format!("bad range {s}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?,
        ),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn run(cli: Cli) -> Result<Outcome> {
    let mode = if cli.sequential {
        Mode::Sequential
    } else {
        Mode::Parallel
    };
    match cli.cmd {
        Cmd::Invariants { knot: k, json } => {
            let d = knot(&k)?.with_name(k.clone());
            let r = InvariantReport::compute(&d, &[RingTag::Q, RingTag::Fp(2)], mode)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).expect("serializable")
                );
            } else {
                print!("{}", r.to_text());
            }
            if r.ss_tilde_h.is_none() {
                return Ok(Outcome::Inconclusive);
            }
        }
        Cmd::Ckh {
            knot: k,
            ring,
            reduced,
            simplify,
        } => {
            let mut d = knot(&k)?;
            if reduced {
                d = d.based();
            }
            let opts = HomologyOptions {
                reduced,
                mode,
                ..Default::default()
            };
            println!(
                "{}",
                homology::simplified_complex_json(&d, RingTag::parse(&ring)?, opts, simplify)?
            );
        }
        Cmd::Homology {
            knot: k,
            ring,
            reduced,
            json,
        } => {
            let mut d = knot(&k)?;
            if reduced {
                d = d.based();
            }
            let opts = HomologyOptions {
                reduced,
                mode,
                ..Default::default()
            };
            let m = homology::homology(&d, RingTag::parse(&ring)?, opts)?;
            if json {
                println!("{}", m.to_json());
            } else {
                print!("{}", m.to_text());
            }
            if !m.is_complete() {
                return Ok(Outcome::Inconclusive);
            }
        }
        Cmd::Ss { knot: k, ring } => {
            match invariants::ss_tilde_with(&knot(&k)?, RingTag::parse(&ring)?, mode) {
                Ok(v) => println!("{v}"),
                Err(Error::DecompositionIncomplete(m)) => {
                    println!("inconclusive: {m}");
                    return Ok(Outcome::Inconclusive);
                }
                Err(e) => return Err(e),
            }
        }
        Cmd::S { knot: k, field } => println!(
            "{}",
            invariants::rasmussen_s(&knot(&k)?, RingTag::parse(&field)?)?
        ),
        Cmd::Sig { knot: k } => println!("{}", invariants::signature_gl(&knot(&k)?)?),
        Cmd::Det { knot: k } => println!("{}", invariants::determinant(&knot(&k)?)?),
        Cmd::Qa { knot: k, budget } => match lspace::qa_certify_with(&knot(&k)?, budget)? {
            QaOutcome::Certified(t) => println!("{}", t.to_json()),
            QaOutcome::Inconclusive {
                explored,
                exhausted,
            } => {
                let why = if exhausted {
                    "budget exhausted"
                } else {
                    "search space exhausted"
                };
                println!("inconclusive: no certificate after {explored} nodes ({why})");
                return Ok(Outcome::Inconclusive);
            }
        },
        Cmd::LspaceVerify { tree, json } => {
            let t = ResolutionTree::from_json(&std::fs::read_to_string(&tree)?)?;
            let v = lspace::verify_lspace_tree(&t)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                for line in &v.report {
                    println!("{line}");
                }
                println!("dim upper bound {}, |H_1| = {}", v.dim_upper, v.h1_order);
                println!(
                    "L-space over F2: {}",
                    if v.is_lspace_over_f2 {
                        "yes"
                    } else {
                        "not shown"
                    }
                );
            }
            if !v.is_lspace_over_f2 {
                return Ok(Outcome::Inconclusive);
            }
        }
        Cmd::SlnCheck { table, n } => {
            let t = TriplyGradedTable::load(&table)?;
            match slnss::conclude(&t, &parse_range(&n)?) {
                Ok(v) => print!("{}", v.to_text()),
                Err(Error::Inapplicable(m)) => {
                    println!("inapplicable: {m}");
                    return Ok(Outcome::Inconclusive);
                }
                Err(e) => return Err(e),
            }
        }
        Cmd::Table {
            catalog: path,
            diff,
            tree,
        } => {
            let entries = catalog::ingest(&path)?;
            let mut ev = Evidence::shipped()?;
            for p in tree {
                ev.add_tree(&ResolutionTree::from_json(&std::fs::read_to_string(&p)?)?)?;
            }
            let ders = catalog::derive_all(&entries, &ev, mode);
            let rows: Vec<_> = entries.into_iter().zip(ders).collect();
            let (text, errors) = catalog::render_table(&rows);
            print!("{text}");
            for e in &errors {
                eprintln!("error: {e}");
            }
            let mut clean = errors.is_empty();
            if let Some(f) = diff {
                let d = catalog::diff_table(&text, &std::fs::read_to_string(&f)?)?;
                eprintln!("compared {} rows", d.compared);
                for m in &d.mismatches {
                    eprintln!("mismatch: {m}");
                }
                for m in &d.missing {
                    eprintln!("missing: {m}");
                }
                for m in &d.positivity {
                    eprintln!("positivity label differs: {m}");
                }
                clean &= d.is_clean();
            }
            if !clean {
                return Err(Error::Io(
                    "table has errors or differs from the reference".into(),
                ));
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Inconclusive) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
