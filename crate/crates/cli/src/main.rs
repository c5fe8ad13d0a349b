mod render;
mod seq;
mod suites;
mod tables;

use clap::{Parser, Subcommand, ValueEnum};
use ice20v_core::exactalg::parse_rational;
use ice20v_core::genfun::{build_ik_matrix, build_ik_refined_matrix, build_refined_t4_matrix, build_t4_matrix, RefinedType};
use ice20v_core::icemodel::{enumerate_configs, BoundaryKind, BoundarySpec, LatticeConfig};
use ice20v_core::tilings::{enumerate_tilings, triangle_lgv_matrix, Region};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ice20v", version, about = "Twenty-vertex ice model counts, checks and figures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    T4,
    T4Refined,
    Ik,
    IkRefined,
    LgvTriangle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the first terms of a sequence family.
    Seq {
        #[arg(long)]
        family: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a configuration or a domino tiling as SVG.
    Render {
        /// LatticeConfig JSON, or {"region": [...]} for tilings.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        boundary: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Write every configuration or tiling as STEM-K.svg.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a matrix and print its exact determinant.
    Det {
        #[arg(long, value_enum)]
        builder: Builder,
        #[arg(long)]
        n: usize,
        #[arg(long = "type")]
        kind: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        theta: Option<String>,
        /// Rational v with u = v^2 for the refined Izergin-Korepin matrix.
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        dump: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Seq { family, max_n, k, b, c, theta, format, out } => {
            let params = seq::SeqParams { max_n, k, b, c, theta };
            let values = match seq::sequence(&family, &params) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let text = match format {
                Format::Json => format!("{}\n", json!({ "family": family, "values": values })),
                Format::Csv => {
                    let first = if family == "N" { 0 } else { 1 };
                    let mut s = String::from(if family == "N" { "a,value\n" } else { "n,value\n" });
                    for (i, v) in values.iter().enumerate() {
                        s.push_str(&format!("{},\"{v}\"\n", i + first));
                    }
                    s
                }
            };
            match emit(out.as_deref(), &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage(e),
            }
        }
        Cmd::Verify { suite, max_n, jobs, out } => verify(&suite, max_n, jobs, out.as_deref()),
        Cmd::Render { input, boundary, n, index, all, out } => render(input, boundary, n, index, all, out),
        Cmd::Det { builder, n, kind, k, theta, v, dump } => det(builder, n, kind, k, theta, v, dump),
    }
}

fn verify(suite: &str, max_n: Option<usize>, jobs: Option<usize>, out: Option<&Path>) -> ExitCode {
    let names: Vec<&str> = if suite == "all" {
        suites::SUITES.to_vec()
    } else if suites::SUITES.contains(&suite) {
        vec![suite]
    } else {
        return usage(format!("unknown suite {suite:?}"));
    };
    let threads = std::env::var("ICE20V_JOBS").ok().and_then(|s| s.parse::<usize>().ok()).or(jobs);
    if let Some(t) = threads {
        // the global pool can only be set once; later calls are harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let results: Vec<suites::SuiteResult> = names.iter().map(|s| suites::run_suite(s, max_n)).collect();
    let pass = results.iter().all(|r| r.pass);
    let report = if results.len() == 1 {
        results.into_iter().next().expect("one suite").value
    } else {
        json!({
            "suite": "all",
            "max_n": max_n,
            "pass": pass,
            "suites": results.into_iter().map(|r| r.value).collect::<Vec<_>>(),
        })
    };
    let text = format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"));
    if let Err(e) = emit(out, &text) {
        return usage(e);
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn stem_path(out: &Path, k: usize) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    out.with_file_name(format!("{stem}-{k}.svg"))
}

fn write_all(out: Option<&Path>, svgs: Vec<String>, all: bool, index: usize) -> ExitCode {
    if all {
        let Some(out) = out else {
            return usage("--all needs --out");
        };
        for (k, s) in svgs.iter().enumerate() {
            if let Err(e) = emit(Some(&stem_path(out, k)), s) {
                return usage(e);
            }
        }
        eprintln!("wrote {} files", svgs.len());
        return ExitCode::SUCCESS;
    }
    match svgs.get(index) {
        Some(s) => match emit(out, s) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage(e),
        },
        None => usage(format!("index {index} out of range ({} available)", svgs.len())),
    }
}

const RENDER_LIMIT: usize = 10_000;

fn render(
    input: Option<PathBuf>,
    boundary: Option<String>,
    n: Option<usize>,
    index: usize,
    all: bool,
    out: Option<PathBuf>,
) -> ExitCode {
    let limit = Some(if all { RENDER_LIMIT } else { index + 1 });
    if let Some(path) = input {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return usage(format!("{}: {e}", path.display())),
        };
        let v: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return usage(format!("malformed JSON: {e}")),
        };
        if v.get("region").is_some() {
            let region = match Region::from_json(&v) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let list = enumerate_tilings(&region, limit);
            let svgs = list.tilings.iter().map(|t| render::render_tiling(&region, t)).collect();
            return write_all(out.as_deref(), svgs, all, index);
        }
        let config = match LatticeConfig::from_json(&v) {
            Ok(c) => c,
            Err(e) => return usage(e),
        };
        return match render::render_config(&config) {
            Ok(s) => write_all(out.as_deref(), vec![s], false, 0),
            Err(e) => usage(e),
        };
    }
    let (Some(b), Some(n)) = (boundary, n) else {
        return usage("give --input, or --boundary with --n");
    };
    let kind: BoundaryKind = match b.parse() {
        Ok(k) => k,
        Err(e) => return usage(e),
    };
    let spec = match BoundarySpec::square(&kind, n) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let list = enumerate_configs(&spec, limit);
    let svgs: Result<Vec<String>, _> = list.configs.iter().map(render::render_config).collect();
    match svgs {
        Ok(s) => write_all(out.as_deref(), s, all, index),
        Err(e) => usage(e),
    }
}

fn det(
    builder: Builder,
    n: usize,
    kind: Option<u32>,
    k: Option<usize>,
    theta: Option<String>,
    v: Option<String>,
    dump: bool,
) -> ExitCode {
    let result: ice20v_core::Result<(String, String)> = (|| match builder {
        Builder::T4 => match theta {
            Some(t) => {
                let t = parse_rational(&t)?;
                let m = build_t4_matrix(n, Some(&t));
                Ok((m.to_json().to_string(), ice20v_core::exactalg::format_rational(&m.det()?)))
            }
            None => {
                let m = build_t4_matrix::<BigInt>(n, None);
                Ok((m.to_string(), m.det()?.to_string()))
            }
        },
        Builder::T4Refined => {
            let t = RefinedType::from_index(kind.unwrap_or(1))?;
            let m = build_refined_t4_matrix(n, t);
            Ok((m.to_string(), m.det()?.to_string()))
        }
        Builder::Ik => {
            let m = build_ik_matrix(n);
            Ok((format!("{}\nprefactor: {}", m.matrix, m.prefactor), m.value()?.to_string()))
        }
        Builder::IkRefined => {
            let v = parse_rational(v.as_deref().unwrap_or("1/2"))?;
            let m = build_ik_refined_matrix(n, &v)?;
            Ok((format!("{}\nprefactor: {}", m.matrix, m.prefactor), m.value()?.to_string()))
        }
        Builder::LgvTriangle => {
            let m = triangle_lgv_matrix(n, k.unwrap_or(0), false);
            Ok((m.to_string(), m.det()?.to_string()))
        }
    })();
    match result {
        Ok((matrix, value)) => {
            if dump {
                println!("matrix: {matrix}");
            }
            println!("det: {value}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}
