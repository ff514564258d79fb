//! Command line front end: construct, verify, pre-lift and export QC-LDPC matrices.

use clap::{Args, Parser, Subcommand};
use qcgirth::catalog;
use qcgirth::construct::{construct, nmin_search, selector_by_name, ConstructionRegistry, Nmin, DEFAULT_NMIN_CAP};
use qcgirth::girth::conditions::ConditionSystem;
use qcgirth::girth::distance::{min_distance, Distance, DEFAULT_MAX_DIM};
use qcgirth::girth::methods::GirthRegistry;
use qcgirth::girth::symbolic::{Grid, Reading};
use qcgirth::girth::DEFAULT_L_MAX;
use qcgirth::io::{parse_qc, render_alist, render_qc, QcFile};
use qcgirth::multiedge::ccsds_from_exponent_matrix;
use qcgirth::prelift::{matrix_prelift, prelift_admits_girth, scan_structures, support_pattern, Structure};
use qcgirth::{ExponentMatrix, QcError};
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qcgirth", version, about = "Girth tools for quasi-cyclic LDPC codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// A QC file path, or @NAME for a built-in catalog matrix.
#[derive(Args)]
struct Input {
    file: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an exponent matrix for a target girth and report its smallest N.
    Construct {
        #[arg(long)]
        nc: usize,
        #[arg(long)]
        nv: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value = "smallest")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        monotone: bool,
        /// Construction name; defaults to the one registered for (nc, girth).
        #[arg(long)]
        algorithm: Option<String>,
        #[arg(long, default_value_t = DEFAULT_NMIN_CAP)]
        cap: usize,
        /// Also list every chosen shift with its forbidden set.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Girth of a bound matrix.
    Girth {
        #[command(flatten)]
        input: Input,
        /// bt, bfs, both, or any registered method.
        #[arg(long, default_value = "both")]
        method: String,
        #[arg(long, default_value_t = 2 * DEFAULT_L_MAX)]
        max_girth: usize,
    },
    /// Smallest N giving the target girth.
    Nmin {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = DEFAULT_NMIN_CAP)]
        cap: usize,
    },
    /// Evaluate the condition sets for a girth target.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        girth: usize,
        /// Print passing sets too.
        #[arg(long)]
        all: bool,
    },
    /// Pre-lift a bound matrix with group size N1.
    Prelift {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Scan the support for girth-limiting structures.
    Structures {
        #[command(flatten)]
        input: Input,
        /// Pre-lift with this group size first.
        #[arg(long)]
        n1: Option<usize>,
    },
    /// Export the expanded binary matrix.
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        alist: String,
    },
    /// Exact minimum distance when the code dimension is small enough.
    Distance {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// List the built-in matrices, or print one.
    Catalog { name: Option<String> },
}

enum Fail {
    Verify(String),
    Format(String),
    Infeasible(String),
}

impl From<QcError> for Fail {
    fn from(e: QcError) -> Self {
        match e {
            QcError::Unsupported(_) => Fail::Infeasible(e.to_string()),
            _ => Fail::Format(e.to_string()),
        }
    }
}

type Out = Result<String, (String, Fail)>;

fn load(input: &Input) -> Result<QcFile, Fail> {
    if let Some(name) = input.file.strip_prefix('@') {
        return Ok(catalog::load(name)?);
    }
    let text = std::fs::read_to_string(&input.file).map_err(|e| Fail::Format(format!("{}: {}", input.file, e)))?;
    parse_qc(&text).map_err(|e| Fail::Format(format!("{}: {}", input.file, e)))
}

fn bound(f: &QcFile) -> Result<&ExponentMatrix, Fail> {
    f.matrix.require_n().map_err(|_| Fail::Format("matrix is unbound; give N in the header".into()))?;
    Ok(&f.matrix)
}

fn write_file(path: &str, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| Fail::Format(format!("{}: {}", path, e)))
}

fn run(cmd: Cmd) -> Out {
    let mut out = String::new();
    let res = (|| -> Result<(), Fail> {
        match cmd {
            Cmd::Construct { nc, nv, girth, strategy, seed, monotone, algorithm, cap, trace, out: path } => {
                let reg = ConstructionRegistry::default();
                let c = match &algorithm {
                    Some(name) => reg.get(name)?,
                    None => reg.default_for(nc, girth)?,
                };
                if !c.supports(nc, girth) {
                    return Err(Fail::Infeasible(format!("{} does not support n_c = {}, girth {}", c.name(), nc, girth)));
                }
                let mut sel = selector_by_name(&strategy, seed)?;
                let r = construct(c, nc, nv, girth, sel.as_mut(), monotone, cap)?;
                let _ = writeln!(out, "# algorithm {}, strategy {}{}", r.algorithm, r.strategy, if r.monotone { ", monotone" } else { "" });
                let _ = writeln!(out, "# conditions: girth {} passed over Z ({} sets)", girth, r.conditions.sets_checked);
                let _ = writeln!(out, "# {}", r.n_min);
                if trace {
                    for s in &r.steps {
                        let _ = writeln!(
                            out,
                            "# ({}, {}) = {}  forbidden {:?} doubled {:?} rejected {:?}",
                            s.row, s.col, s.value, s.forbidden.values, s.forbidden.doubled, s.rejected
                        );
                    }
                }
                let file = match &r.n_min {
                    Nmin::Found { n, report } => {
                        let _ = writeln!(out, "# certificate: {} girth {} at N = {}", report.method, report.girth, n);
                        QcFile::new(r.matrix.bind(*n)?)
                    }
                    _ => QcFile::new(r.matrix.clone()),
                };
                let text = render_qc(&file);
                out.push_str(&text);
                if let Some(p) = path {
                    write_file(&p, &text)?;
                }
                match r.n_min {
                    Nmin::Found { report, .. } if !report.girth.at_least(girth) => {
                        Err(Fail::Verify(format!("girth {} below target {}", report.girth, girth)))
                    }
                    Nmin::Found { .. } => Ok(()),
                    other => Err(Fail::Infeasible(other.to_string())),
                }
            }
            Cmd::Girth { input, method, max_girth } => {
                let f = load(&input)?;
                let e = bound(&f)?;
                let reg = GirthRegistry::default();
                let names: Vec<&str> = if method == "both" { vec!["bt", "bfs"] } else { vec![method.as_str()] };
                let mut results = Vec::new();
                for name in names {
                    let r = reg.get(name)?.girth(e, max_girth)?;
                    let _ = writeln!(out, "{}: girth {}", r.method, r.girth);
                    if let Some(w) = &r.witness {
                        let _ = writeln!(out, "  witness: {}", w);
                    }
                    results.push(r);
                }
                if results.iter().any(|r| !r.girth.agrees(&results[0].girth)) {
                    return Err(Fail::Verify("methods disagree".into()));
                }
                let _ = writeln!(out, "girth {}", results[0].girth);
                Ok(())
            }
            Cmd::Nmin { input, girth, cap } => {
                let f = load(&input)?;
                let r = nmin_search(&f.matrix, girth, cap)?;
                let _ = writeln!(out, "{}", r);
                match r {
                    Nmin::Found { report, .. } => {
                        let _ = writeln!(out, "{}: girth {}", report.method, report.girth);
                        Ok(())
                    }
                    Nmin::NoN(c) => {
                        let _ = writeln!(out, "  walk: {:?}", c.walk);
                        Err(Fail::Infeasible(format!("no N gives girth {}", girth)))
                    }
                    Nmin::NotFound(_) => Err(Fail::Infeasible(format!("no N <= {} gives girth {}", cap, girth))),
                }
            }
            Cmd::Check { input, girth, all } => {
                let f = load(&input)?;
                let e = &f.matrix;
                if girth == 6 {
                    if let Ok(form) = ccsds_from_exponent_matrix(e) {
                        let r = form.girth6_check();
                        let _ = writeln!(out, "ccsds girth-6 conditions: {}", if r.girth.at_least(6) { "pass" } else { "FAIL" });
                        if let Some(w) = &r.witness {
                            let _ = writeln!(out, "  witness: {}", w);
                            return Err(Fail::Verify("condition violated".into()));
                        }
                        return Ok(());
                    }
                }
                let shifts = e
                    .single_shifts()
                    .filter(|_| !e.has_zero_cells())
                    .ok_or_else(|| Fail::Infeasible("condition sets need an all-one protograph with one shift per cell".into()))?;
                let system = ConditionSystem::for_girth(e.rows(), e.cols(), girth)?;
                let grid = Grid::full(&shifts);
                let mut failed = 0;
                for set in &system.sets {
                    match set.violation(&grid, e.n(), Reading::Triangle) {
                        Some(v) => {
                            failed += 1;
                            let _ = writeln!(out, "FAIL {}  witness {} = {} = {}", set.label, v.first, v.second, v.value);
                        }
                        None if all => {
                            let _ = writeln!(out, "pass {}", set.label);
                        }
                        None => {}
                    }
                }
                let over = e.n().map_or("Z".to_string(), |n| format!("Z/{}", n));
                let _ = writeln!(out, "girth {} over {}: {} of {} sets pass", girth, over, system.sets.len() - failed, system.sets.len());
                if failed > 0 {
                    Err(Fail::Verify("condition violated".into()))
                } else {
                    Ok(())
                }
            }
            Cmd::Prelift { input, n1, out: path } => {
                let f = load(&input)?;
                let v = matrix_prelift(bound(&f)?, n1)?;
                let text = render_qc(&QcFile { matrix: v.matrix, prelift: Some(n1) });
                match path {
                    Some(p) => {
                        write_file(&p, &text)?;
                        let _ = writeln!(out, "wrote {} (N1 = {}, N2 = {})", p, v.n1, v.n2);
                    }
                    None => out.push_str(&text),
                }
                Ok(())
            }
            Cmd::Structures { input, n1 } => {
                let f = load(&input)?;
                let e = match n1 {
                    Some(k) => matrix_prelift(bound(&f)?, k)?.matrix,
                    None => f.matrix.clone(),
                };
                let p = support_pattern(&e);
                let scan = scan_structures(&p);
                let kinds = [Structure::AllOne2x3, Structure::X, Structure::Y, Structure::Z, Structure::T];
                for s in kinds {
                    match scan.count(s) {
                        0 => {
                            let _ = writeln!(out, "no {}", s);
                        }
                        k => {
                            let _ = writeln!(out, "{}: {} occurrence{}", s, k, if k == 1 { "" } else { "s" });
                        }
                    }
                }
                for g in [14, 16, 18, 20, 22] {
                    let _ = writeln!(out, "{}", prelift_admits_girth(&p, g)?);
                }
                Ok(())
            }
            Cmd::Expand { input, alist } => {
                let f = load(&input)?;
                let h = bound(&f)?.to_block()?.expand()?;
                write_file(&alist, &render_alist(&h))?;
                let _ = writeln!(out, "wrote {} ({} x {}, {} ones)", alist, h.rows(), h.cols(), h.nnz());
                Ok(())
            }
            Cmd::Distance { input, max_dim } => {
                let f = load(&input)?;
                let h = bound(&f)?.to_block()?.expand()?;
                match min_distance(&h, max_dim) {
                    Distance::Exact { d, k, .. } => {
                        let _ = writeln!(out, "distance {} (k = {})", d, k);
                        Ok(())
                    }
                    Distance::Trivial => {
                        let _ = writeln!(out, "trivial code (k = 0)");
                        Ok(())
                    }
                    Distance::Infeasible { k } => Err(Fail::Infeasible(format!("Infeasible({}): dimension above {}", k, max_dim))),
                }
            }
            Cmd::Catalog { name } => {
                match name {
                    Some(n) => {
                        let entry = catalog::CATALOG
                            .iter()
                            .find(|e| e.name == n)
                            .ok_or_else(|| Fail::Format(format!("no catalog entry '{}'", n)))?;
                        let _ = writeln!(out, "# {}", entry.about);
                        out.push_str(&render_qc(&catalog::load(&n)?));
                    }
                    None => {
                        for e in catalog::CATALOG {
                            let _ = writeln!(out, "{:<16} {}", e.name, e.about);
                        }
                    }
                }
                Ok(())
            }
        }
    })();
    match res {
        Ok(()) => Ok(out),
        Err(f) => Err((out, f)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = std::env::var("QCGIRTH_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.cmd) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err((out, fail)) => {
            print!("{}", out);
            let (code, msg) = match fail {
                Fail::Verify(m) => (1, m),
                Fail::Format(m) => (2, m),
                Fail::Infeasible(m) => (3, m),
            };
            eprintln!("error: {}", msg);
            ExitCode::from(code)
        }
    }
}
