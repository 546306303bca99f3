//! Command-line front end: deterministic text, LaTeX, and JSON output for
//! the Witt tables, Hall bases, free-Lie characteristic classes, degeneracy
//! loci, and stratum enumerations, plus the acceptance check suites.
//!
//! Exit codes: 0 success, 1 computational error or failed check suite
//! (typed message on stderr), 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liegiambelli_cli::check;
use liegiambelli_cli::json::series_to_json;
use liegiambelli_core::degeneracy::{
    giambelli_class, reduce, validate_growth, young_diagrams, GiambelliForm, GrowthVector,
};
use liegiambelli_core::free_lie::{count_max_depth, hall_basis_capped, lie_class_honest, lie_sw_class, WittTable};
use liegiambelli_core::render::{render_hall_word, render_series, RenderStyle};
use liegiambelli_core::ring::{Family, GradedSeries};
use liegiambelli_core::strata::{
    enumerate_admissible_defects, enumerate_bounding_defects, growth_from_defect, lemma1_dims,
    lemma4_check, oracle_admissible_defects, oracle_bounding_defects, oracle_window, DefectVector,
};
use liegiambelli_core::DEFAULT_MAX_CELLS;

#[derive(Parser)]
#[command(
    name = "liegiambelli",
    version,
    about = "Characteristic classes of derived flags: Witt tables, Hall bases, degeneracy loci, growth strata"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Lambda,
    Mu,
}

#[derive(Subcommand)]
enum Cmd {
    /// Free-Lie dimension table: d(n,k), partial sums, depth counts, bounds
    Dims {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        kmax: u32,
        /// Ambient dimension; adds the jet/matrix dimension-count columns
        #[arg(long)]
        m: Option<u64>,
    },
    /// List Hall basis words with lengths, order ranks, and depths
    Hall {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        kmax: u32,
        /// Only words of maximal depth (depth = length)
        #[arg(long)]
        max_depth_only: bool,
    },
    /// Total class of the k-th free-Lie piece of a rank-n bundle
    Chern {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        order: u32,
        /// Reduce mod 2 (Stiefel-Whitney classes)
        #[arg(long)]
        mod2: bool,
    },
    /// Degeneracy-locus data of a growth vector: reduction, diagrams, class
    Locus {
        /// Rank of the distribution; must match the first growth entry
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: u32,
        /// Comma-separated growth vector, e.g. 2,2,4
        #[arg(long)]
        growth: String,
        #[arg(long, value_enum, default_value_t = FormArg::Lambda)]
        form: FormArg,
        /// Truncation order (defaults to m)
        #[arg(long)]
        order: Option<u32>,
    },
    /// Enumerate potentially admissible and potentially bounding strata
    Strata {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Brute-force enumeration instead of the template families
        #[arg(long)]
        oracle: bool,
        /// Attach the mod-2 locus class to each stratum
        #[arg(long)]
        with_class: bool,
    },
    /// Run acceptance suites (all or one by name/number)
    Check {
        #[arg(long)]
        suite: String,
    },
}

enum AppError {
    Usage(String),
    Compute(String),
}

impl From<liegiambelli_core::Error> for AppError {
    fn from(e: liegiambelli_core::Error) -> AppError {
        AppError::Compute(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn max_cells_from_env() -> Result<u64, AppError> {
    match std::env::var("LIEGIAMBELLI_MAX_CELLS") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            AppError::Usage(format!(
                "LIEGIAMBELLI_MAX_CELLS must be a positive integer, got {s:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn emit(out: &Option<PathBuf>, body: String) -> Result<(), AppError> {
    let body = if body.ends_with('\n') { body } else { body + "\n" };
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| AppError::Compute(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    let max_cells = max_cells_from_env()?;
    let (body, code) = match cli.command {
        Cmd::Dims { n, kmax, m } => (dims(n, kmax, m, cli.format)?, ExitCode::SUCCESS),
        Cmd::Hall {
            n,
            kmax,
            max_depth_only,
        } => (hall(n, kmax, max_depth_only, cli.format, max_cells)?, ExitCode::SUCCESS),
        Cmd::Chern { n, k, order, mod2 } => (chern(n, k, order, mod2, cli.format)?, ExitCode::SUCCESS),
        Cmd::Locus {
            n,
            m,
            growth,
            form,
            order,
        } => (locus(n, m, &growth, form, order, cli.format)?, ExitCode::SUCCESS),
        Cmd::Strata {
            n,
            m,
            oracle,
            with_class,
        } => (strata(n, m, oracle, with_class, cli.format, max_cells)?, ExitCode::SUCCESS),
        Cmd::Check { suite } => run_check(&suite, cli.format, max_cells)?,
    };
    emit(&cli.out, body)?;
    Ok(code)
}

/// Left-align a table: every column padded to its widest cell.
fn align(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: Vec<&str>, widths: &[usize]| -> String {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == cols {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<width$}", width = widths[i]);
            }
        }
        line
    };
    out.push_str(&fmt_row(headers.to_vec(), &widths));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row.iter().map(String::as_str).collect(), &widths));
        out.push('\n');
    }
    out
}

fn latex_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(headers.len()));
    let _ = writeln!(out, "{} \\\\", headers.join(" & "));
    for row in rows {
        let _ = writeln!(out, "{} \\\\", row.join(" & "));
    }
    let _ = writeln!(out, "\\end{{tabular}}");
    out
}

fn dims(n: u32, kmax: u32, m: Option<u64>, format: Format) -> Result<String, AppError> {
    if kmax < 1 {
        return Err(AppError::Usage("kmax must be at least 1".into()));
    }
    let table = WittTable::new(n as u64, kmax as u64)?;
    let lemma4 = if n >= 2 {
        Some(lemma4_check(n as u64, kmax as u64)?)
    } else {
        None
    };
    let mut headers = vec!["k", "d", "partial", "sharp", "lemma4"];
    if m.is_some() {
        headers.extend(["dim_jet", "dim_mat", "onto"]);
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows: Vec<Value> = Vec::new();
    for k in 1..=kmax {
        let d = table.dim(k as u64);
        let partial = table.partial(k as u64);
        let sharp = if k >= 2 {
            Some(count_max_depth(n as u64, k as u64)?)
        } else {
            None
        };
        let l4 = lemma4.as_ref().map(|rows| rows[k as usize - 1].holds);
        let mut row = vec![
            k.to_string(),
            d.to_string(),
            partial.to_string(),
            sharp.as_ref().map_or_else(|| "-".into(), |s| s.to_string()),
            l4.map_or_else(|| "-".into(), |h| if h { "yes".into() } else { "no".into() }),
        ];
        let mut jrow = json!({
            "k": k,
            "d": d.to_string(),
            "partial": partial.to_string(),
            "sharp": sharp.as_ref().map(|s| s.to_string()),
            "lemma4": l4,
        });
        if let Some(mm) = m {
            let dims = if k >= 2 {
                Some(lemma1_dims(n as u64, mm, k as u64)?)
            } else {
                None
            };
            match &dims {
                Some(d1) => {
                    row.push(d1.dim_jet.to_string());
                    row.push(d1.dim_mat.to_string());
                    row.push(if d1.surjective_possible { "yes".into() } else { "no".into() });
                    jrow["dim_jet"] = Value::from(d1.dim_jet.to_string());
                    jrow["dim_mat"] = Value::from(d1.dim_mat.to_string());
                    jrow["onto"] = Value::from(d1.surjective_possible);
                }
                None => {
                    row.extend(["-".into(), "-".into(), "-".into()]);
                    jrow["dim_jet"] = Value::Null;
                    jrow["dim_mat"] = Value::Null;
                    jrow["onto"] = Value::Null;
                }
            }
        }
        rows.push(row);
        json_rows.push(jrow);
    }
    Ok(match format {
        Format::Text => align(&headers, &rows),
        Format::Latex => latex_table(&headers, &rows),
        Format::Json => {
            let mut obj = json!({ "n": n, "kmax": kmax, "rows": json_rows });
            if let Some(mm) = m {
                obj["m"] = Value::from(mm);
            }
            serde_json::to_string_pretty(&obj).unwrap()
        }
    })
}

fn hall(
    n: u32,
    kmax: u32,
    max_depth_only: bool,
    format: Format,
    max_cells: u64,
) -> Result<String, AppError> {
    let basis = hall_basis_capped(n, kmax, max_cells)?;
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows: Vec<Value> = Vec::new();
    for k in 1..=kmax {
        for w in basis.level(k) {
            if max_depth_only && w.depth() != k {
                continue;
            }
            let word = render_hall_word(w, n);
            rows.push(vec![
                w.rank().to_string(),
                k.to_string(),
                w.depth().to_string(),
                word.clone(),
            ]);
            json_rows.push(json!({
                "rank": w.rank(),
                "length": k,
                "depth": w.depth(),
                "word": word,
            }));
        }
    }
    let headers = ["rank", "length", "depth", "word"];
    Ok(match format {
        Format::Text => align(&headers, &rows),
        Format::Latex => {
            // words are plain ASCII with parentheses; typeset verbatim
            let rows: Vec<Vec<String>> = rows
                .into_iter()
                .map(|mut r| {
                    r[3] = format!("\\texttt{{{}}}", r[3]);
                    r
                })
                .collect();
            latex_table(&headers, &rows)
        }
        Format::Json => serde_json::to_string_pretty(&json!({
            "n": n,
            "kmax": kmax,
            "max_depth_only": max_depth_only,
            "words": json_rows,
        }))
        .unwrap(),
    })
}

fn chern(n: u32, k: u32, order: u32, mod2: bool, format: Format) -> Result<String, AppError> {
    let class = if mod2 {
        lie_sw_class(n, k, order, Family::W)?
    } else {
        lie_class_honest(n, k, order)?
    };
    Ok(render_series_output(&class, format))
}

fn render_series_output(s: &GradedSeries, format: Format) -> String {
    match format {
        Format::Text => render_series(s, RenderStyle::Text),
        Format::Latex => render_series(s, RenderStyle::Latex),
        Format::Json => serde_json::to_string_pretty(&series_to_json(s)).unwrap(),
    }
}

fn parse_growth_arg(s: &str) -> Result<Vec<u32>, AppError> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<u32>().map_err(|_| {
                AppError::Usage(format!("growth vector entries must be integers, got {p:?}"))
            })
        })
        .collect()
}

fn locus(
    n: Option<u32>,
    m: u32,
    growth_arg: &str,
    form: FormArg,
    order: Option<u32>,
    format: Format,
) -> Result<String, AppError> {
    let r = parse_growth_arg(growth_arg)?;
    if r.is_empty() {
        return Err(AppError::Usage("growth vector must be non-empty".into()));
    }
    if let Some(n) = n {
        if n != r[0] {
            return Err(AppError::Usage(format!(
                "--n {n} contradicts the first growth entry {}",
                r[0]
            )));
        }
    }
    let g = validate_growth(&r, r[0], m)?;
    let reduced = reduce(&g)?;
    let diagrams = young_diagrams(&g)?;
    let gform = match form {
        FormArg::Lambda => GiambelliForm::Lambda,
        FormArg::Mu => GiambelliForm::Mu,
    };
    let class = giambelli_class(&g, gform, order)?;
    let stage_list: Vec<String> = reduced.indices.iter().map(|i| (i + 1).to_string()).collect();
    let fmt_parts = |p: &[u64]| -> String {
        let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        format!("[{}]", inner.join(", "))
    };
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "growth: {}", join_u32(g.entries()));
            let _ = writeln!(out, "n: {}", g.n());
            let _ = writeln!(out, "m: {}", g.m());
            let _ = writeln!(out, "reduced index set: {{{}}}", stage_list.join(", "));
            let _ = writeln!(out, "lambda: {}", fmt_parts(diagrams.lambda.parts()));
            let _ = writeln!(out, "mu: {}", fmt_parts(diagrams.mu.parts()));
            let _ = writeln!(out, "cd: {}", diagrams.cd);
            let _ = writeln!(out, "class: {}", render_series(&class, RenderStyle::Text));
            out
        }
        Format::Latex => render_series(&class, RenderStyle::Latex),
        Format::Json => serde_json::to_string_pretty(&json!({
            "growth": g.entries(),
            "n": g.n(),
            "m": g.m(),
            "reduced": reduced.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "lambda": diagrams.lambda.parts(),
            "mu": diagrams.mu.parts(),
            "cd": diagrams.cd,
            "form": match form { FormArg::Lambda => "lambda", FormArg::Mu => "mu" },
            "order": class.order(),
            "class": series_to_json(&class),
        }))
        .unwrap(),
    })
}

fn join_u32(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

fn format_defect(d: &DefectVector) -> String {
    let inner: Vec<String> = d.entries().iter().map(|e| e.to_string()).collect();
    format!("({})", inner.join(","))
}

struct StratumRow {
    defect: DefectVector,
    growth: GrowthVector,
    cd: u64,
    template: Option<String>,
}

fn stratum_rows_closed(n: u32, m: u32, max_cells: u64) -> Result<(Vec<StratumRow>, Vec<StratumRow>), AppError> {
    let adm = enumerate_admissible_defects(n, m, max_cells)?
        .into_iter()
        .map(|e| {
            let mut template = format!("case={}", e.case.letter());
            if let Some(l) = e.l {
                let _ = write!(template, " l={l}");
            }
            let _ = write!(template, " chi={} nu={}", e.chi, e.nu);
            StratumRow {
                defect: e.defect,
                growth: e.growth,
                cd: e.cd,
                template: Some(template),
            }
        })
        .collect();
    let bnd = enumerate_bounding_defects(n, m, max_cells)?
        .into_iter()
        .map(|e| {
            let mut template = format!("case={}", e.case.letter());
            if let Some(l) = e.l1 {
                let _ = write!(template, " l1={l}");
            }
            if let Some(l) = e.l2 {
                let _ = write!(template, " l2={l}");
            }
            let _ = write!(template, " chi={} nu={}", e.chi, e.nu);
            StratumRow {
                defect: e.defect,
                growth: e.growth,
                cd: e.cd,
                template: Some(template),
            }
        })
        .collect();
    Ok((adm, bnd))
}

fn stratum_rows_oracle(n: u32, m: u32, max_cells: u64) -> Result<(Vec<StratumRow>, Vec<StratumRow>), AppError> {
    let window = oracle_window(n, m)?;
    let build = |set: std::collections::BTreeSet<DefectVector>| -> Result<Vec<StratumRow>, AppError> {
        set.into_iter()
            .map(|d| {
                let growth = growth_from_defect(n, m, &d)?;
                let cd = young_diagrams(&growth)?.cd;
                Ok(StratumRow {
                    defect: d,
                    growth,
                    cd,
                    template: None,
                })
            })
            .collect()
    };
    let adm = build(oracle_admissible_defects(n, m, window, max_cells)?)?;
    let bnd = build(oracle_bounding_defects(n, m, window, max_cells)?)?;
    Ok((adm, bnd))
}

fn strata(
    n: u32,
    m: u32,
    oracle: bool,
    with_class: bool,
    format: Format,
    max_cells: u64,
) -> Result<String, AppError> {
    let (adm, bnd) = if oracle {
        stratum_rows_oracle(n, m, max_cells)?
    } else {
        stratum_rows_closed(n, m, max_cells)?
    };
    let class_of = |row: &StratumRow| -> Result<Option<GradedSeries>, AppError> {
        if with_class {
            Ok(Some(giambelli_class(&row.growth, GiambelliForm::Lambda, None)?))
        } else {
            Ok(None)
        }
    };
    match format {
        Format::Json => {
            let render_group = |rows: &[StratumRow]| -> Result<Vec<Value>, AppError> {
                rows.iter()
                    .map(|r| {
                        let mut v = json!({
                            "defect": r.defect.entries(),
                            "growth": r.growth.entries(),
                            "cd": r.cd,
                        });
                        if let Some(t) = &r.template {
                            v["template"] = Value::from(t.clone());
                        }
                        if let Some(c) = class_of(r)? {
                            v["class"] = series_to_json(&c);
                        }
                        Ok(v)
                    })
                    .collect()
            };
            let obj = json!({
                "n": n,
                "m": m,
                "oracle": oracle,
                "admissible": render_group(&adm)?,
                "bounding": render_group(&bnd)?,
            });
            Ok(serde_json::to_string_pretty(&obj).unwrap())
        }
        Format::Text | Format::Latex => {
            let style = if format == Format::Latex {
                RenderStyle::Latex
            } else {
                RenderStyle::Text
            };
            let mut out = String::new();
            let _ = writeln!(out, "n={n} m={m} mode={}", if oracle { "oracle" } else { "closed-form" });
            for (label, rows) in [("admissible", &adm), ("bounding", &bnd)] {
                let _ = writeln!(out, "{label} ({}):", rows.len());
                for r in rows {
                    let _ = write!(
                        out,
                        "  defect={} growth={} cd={}",
                        format_defect(&r.defect),
                        join_u32(r.growth.entries()),
                        r.cd
                    );
                    if let Some(t) = &r.template {
                        let _ = write!(out, " {t}");
                    }
                    if let Some(c) = class_of(r)? {
                        let _ = write!(out, " class={}", render_series(&c, style));
                    }
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}

fn run_check(suite: &str, format: Format, max_cells: u64) -> Result<(String, ExitCode), AppError> {
    let results = if suite == "all" {
        check::run_all(max_cells)
    } else {
        let index = check::suite_index(suite).ok_or_else(|| {
            AppError::Usage(format!(
                "unknown suite {suite:?}; use all, 1-10, or one of: {}",
                check::SUITE_NAMES.join(", ")
            ))
        })?;
        vec![check::run_criterion(index, max_cells)]
    };
    let all_pass = results.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "results": results
                .iter()
                .map(|r| {
                    json!({
                        "index": r.index,
                        "name": r.name,
                        "pass": r.pass,
                        "detail": r.detail,
                    })
                })
                .collect::<Vec<_>>(),
            "pass": all_pass,
        }))
        .unwrap(),
        _ => {
            let mut out = String::new();
            for r in &results {
                let _ = writeln!(out, "{}", r.line());
            }
            out
        }
    };
    Ok((body, if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) }))
}
