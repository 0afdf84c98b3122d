use std::fs;
use std::io::{self, Write};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pellmat::determinant::{
    continuants, det_continuant, det_with, laplace_expand_with, DetEngine, ExpansionOptions, RowExpansion,
    PERMUTATION_MAX_ORDER,
};
use pellmat::matrix::build_pell_matrix;
use pellmat::pell::{
    unit_multiplier, verify_cofactor_tables, verify_convolution_with, verify_det_equation,
    verify_doubling_with, CofactorTable, Engine, IdentityId, IdentityReport,
};
use pellmat::{DenseMatrix, GaussInt};
use serde::Serialize;
use serde_json::json;

use crate::args::{BenchArgs, DetArgs, ExpandArgs, Format, PellArgs, PellRoute, Suite, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILURE: u8 = 1;
pub const EXIT_BAD_CONFIG: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Guard(String),
    /// An identity that must hold did not.
    Identity(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) | Failure::Io(_) => EXIT_BAD_CONFIG,
            Failure::Guard(_) => EXIT_GUARD,
            Failure::Identity(_) => EXIT_IDENTITY_FAILURE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "invalid configuration: {m}"),
            Failure::Guard(m) => write!(f, "guard tripped: {m}"),
            Failure::Identity(m) => write!(f, "identity failure: {m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<pellmat::Error> for Failure {
    fn from(e: pellmat::Error) -> Self {
        use pellmat::Error::*;
        match e {
            ExpansionTooLarge { .. } | TooLargeForOracle { .. } => Failure::Guard(e.to_string()),
            NonRealResult(_) => Failure::Identity(e.to_string()),
            other => Failure::Config(other.to_string()),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(out: &mut impl Write, fields: &[String]) -> io::Result<()> {
    let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    writeln!(out, "{}", line.join(","))
}

fn pell_matrix(n: usize) -> Result<DenseMatrix, Failure> {
    Ok(build_pell_matrix(n)?.materialize())
}

pub fn pell(args: &PellArgs, out: &mut impl Write) -> CmdResult {
    if args.format == Format::Csv {
        csv_row(out, &["n".into(), "pell".into()])?;
    }
    let mut emit = |n: usize, p: &BigInt| -> io::Result<()> {
        match args.format {
            Format::Json => json_line(out, &json!({ "n": n, "pell": p.to_string() })),
            Format::Csv => csv_row(out, &[n.to_string(), p.to_string()]),
            Format::Text => writeln!(out, "{p}"),
        }
    };
    match args.via {
        PellRoute::Recurrence => {
            let (mut a, mut b) = (BigInt::zero(), BigInt::from(1));
            for n in 0..=args.n_max {
                emit(n, &a)?;
                let next = (&b << 1) + &a;
                a = std::mem::replace(&mut b, next);
            }
        }
        PellRoute::Det => {
            // P_0 is the initial value; P_{k+1} = m(k)·det N(k), det N(0) = 1.
            emit(0, &BigInt::zero())?;
            if args.n_max >= 1 {
                emit(1, &BigInt::from(1))?;
            }
            if args.n_max >= 2 {
                let spec = build_pell_matrix(args.n_max - 1)?;
                for (k, det) in continuants(&spec).enumerate() {
                    let order = k + 1;
                    let (re, im) = unit_multiplier(order).apply(&det).into_parts();
                    if !im.is_zero() || re.is_negative() {
                        return Err(pellmat::Error::NonRealResult(format!("m*det N({order})")).into());
                    }
                    emit(order + 1, &re)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn det(args: &DetArgs, out: &mut impl Write) -> CmdResult {
    let matrix = match (&args.input, args.n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
            serde_json::from_str::<DenseMatrix>(&text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?
        }
        (None, Some(n)) => pell_matrix(n)?,
        (None, None) => return Err(Failure::Config("either --n or --input is required".into())),
    };
    let order = matrix.order()?;
    let value = match args.engine {
        // For N(n) itself the continuant does not need the dense matrix.
        DetEngine::Continuant if args.input.is_none() => det_continuant(&build_pell_matrix(order)?),
        engine => det_with(&matrix, engine)?,
    };
    match args.format {
        Format::Json => {
            let mut v = json!({ "order": order, "engine": args.engine, "det": value });
            if args.dump {
                v["matrix"] = serde_json::to_value(&matrix).expect("matrices serialize");
            }
            json_line(out, &v)?;
        }
        Format::Csv => {
            csv_row(out, &["order".into(), "engine".into(), "det".into()])?;
            csv_row(out, &[order.to_string(), args.engine.to_string(), value.to_string()])?;
        }
        Format::Text => {
            if args.dump {
                write!(out, "{matrix}")?;
            }
            writeln!(out, "det = {value}")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn expand(args: &ExpandArgs, out: &mut impl Write) -> CmdResult {
    let a = pell_matrix(args.n)?;
    args.rows.check_within(args.n)?;
    let opts = ExpansionOptions {
        include_zero_blocks: args.show_zero_terms,
        ..ExpansionOptions::from_env()
    };
    let e = laplace_expand_with(&a, &args.rows, &opts)?;
    match args.format {
        Format::Json => json_line(out, &e)?,
        Format::Csv => write_expansion_csv(out, &e)?,
        Format::Text => write_expansion_text(out, args.n, &e)?,
    }
    Ok(EXIT_OK)
}

fn write_expansion_csv(out: &mut impl Write, e: &RowExpansion) -> io::Result<()> {
    csv_row(out, &["cols".into(), "block".into(), "cofactor".into(), "product".into()])?;
    for t in &e.terms {
        csv_row(
            out,
            &[
                t.cols.to_string(),
                t.block_det.to_string(),
                t.cofactor.to_string(),
                t.signed_product.to_string(),
            ],
        )?;
    }
    csv_row(out, &["total".into(), String::new(), String::new(), e.total.to_string()])
}

fn write_expansion_text(out: &mut impl Write, n: usize, e: &RowExpansion) -> io::Result<()> {
    let rows = &e.row_set;
    let nonzero = e.nonzero_blocks().count();
    let k = rows.len();
    writeln!(out, "Expanding det N({n}) along rows {rows}.")?;
    writeln!(
        out,
        "{nonzero} of the {k}x{k} submatrices on these rows have nonzero determinant."
    )?;
    for t in &e.terms {
        writeln!(
            out,
            "  det A({rows},{}) = {:<8} cofactor = {:<8} product = {}",
            t.cols, t.block_det.to_string(), t.cofactor.to_string(), t.signed_product
        )?;
    }
    writeln!(out, "det N({n}) = {}", e.total)
}

struct SweepTally {
    reports: usize,
    passed: usize,
    identity_failures: Vec<IdentityReport>,
    discrepancies: Vec<IdentityReport>,
}

fn emit_report(out: &mut impl Write, format: Format, r: &IdentityReport) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, r),
        Format::Csv => {
            let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            csv_row(
                out,
                &[
                    serde_json::to_value(r.identity_id).unwrap().as_str().unwrap_or_default().to_string(),
                    r.entry.clone().unwrap_or_default(),
                    params.join(";"),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.engine.to_string(),
                    r.verdict.to_string(),
                ],
            )
        }
        Format::Text => {
            let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let what = match &r.entry {
                Some(e) => e.clone(),
                None => serde_json::to_value(r.identity_id).unwrap().as_str().unwrap_or_default().to_string(),
            };
            let mark = if r.verdict { "ok" } else { "MISMATCH" };
            writeln!(out, "{what} {} [{}]: {} vs {} {mark}", params.join(" "), r.engine, r.lhs, r.rhs)
        }
    }
}

/// Every report of the chosen suite(s), in ascending order of n.
fn sweep(args: &VerifyArgs, mut visit: impl FnMut(IdentityReport) -> io::Result<()>) -> Result<(), Failure> {
    let suites: &[Suite] = match args.suite {
        Suite::All => &[Suite::Convolution, Suite::Doubling, Suite::DetEquation, Suite::CofactorTables],
        Suite::Convolution => &[Suite::Convolution],
        Suite::Doubling => &[Suite::Doubling],
        Suite::DetEquation => &[Suite::DetEquation],
        Suite::CofactorTables => &[Suite::CofactorTables],
    };
    for &suite in suites {
        match suite {
            Suite::Convolution => {
                for n in args.from.max(1)..=args.to {
                    for k in 1..=n {
                        let r = match (args.engine, k == n) {
                            // The expansion route runs on N(n-1), which has only n-1 rows.
                            (Engine::Laplace, true) => {
                                let mut r = verify_convolution_with(n, k, Engine::Recurrence)?;
                                r.notes.push("laplace route needs k < n; recurrence used".into());
                                r
                            }
                            (engine, _) => verify_convolution_with(n, k, engine)?,
                        };
                        visit(r)?;
                    }
                }
            }
            Suite::Doubling => {
                for n in args.from.max(1)..=args.to {
                    let r = match (args.engine, n) {
                        (Engine::Laplace, 1) => {
                            let mut r = verify_doubling_with(n, Engine::Recurrence)?;
                            r.notes.push("laplace route needs n >= 2; recurrence used".into());
                            r
                        }
                        (engine, _) => verify_doubling_with(n, engine)?,
                    };
                    visit(r)?;
                }
            }
            Suite::DetEquation => {
                for n in args.from.max(2)..=args.to {
                    visit(verify_det_equation(n)?)?;
                }
            }
            Suite::CofactorTables => {
                for n in args.from..=args.to {
                    for table in CofactorTable::ALL {
                        if n >= table.min_n() {
                            for r in verify_cofactor_tables(n, table)? {
                                visit(r)?;
                            }
                        }
                    }
                }
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, out: &mut impl Write) -> CmdResult {
    if args.from > args.to {
        return Err(Failure::Config(format!("--from {} exceeds --to {}", args.from, args.to)));
    }
    let mut tally = SweepTally {
        reports: 0,
        passed: 0,
        identity_failures: Vec::new(),
        discrepancies: Vec::new(),
    };
    if args.format == Format::Csv {
        csv_row(
            out,
            &["identity_id", "entry", "parameters", "lhs", "rhs", "engine", "verdict"].map(String::from),
        )?;
    }
    sweep(args, |r| {
        emit_report(out, args.format, &r)?;
        tally.reports += 1;
        if r.verdict {
            tally.passed += 1;
        } else if r.identity_id == IdentityId::CofactorTable {
            tally.discrepancies.push(r);
        } else {
            tally.identity_failures.push(r);
        }
        Ok(())
    })?;

    let failures = tally.identity_failures.len();
    match args.format {
        Format::Json => json_line(
            out,
            &json!({
                "summary": {
                    "reports": tally.reports,
                    "passed": tally.passed,
                    "identity_failures": failures,
                    "paper_discrepancies": tally.discrepancies.len(),
                },
                "paper_discrepancy": tally.discrepancies,
            }),
        )?,
        Format::Csv | Format::Text => {
            writeln!(
                out,
                "# summary: {} reports, {} passed, {failures} identity failures, {} paper discrepancies",
                tally.reports,
                tally.passed,
                tally.discrepancies.len()
            )?;
            if !tally.discrepancies.is_empty() {
                writeln!(out, "# paper-discrepancy:")?;
                for r in &tally.discrepancies {
                    write!(out, "# ")?;
                    emit_report(out, Format::Text, r)?;
                }
            }
        }
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_IDENTITY_FAILURE })
}

/// Largest order each engine is benchmarked at.
fn bench_limit(engine: DetEngine) -> usize {
    match engine {
        DetEngine::Permutation => PERMUTATION_MAX_ORDER,
        DetEngine::Laplace => usize::MAX,
        DetEngine::Bareiss => usize::MAX,
        DetEngine::Continuant => usize::MAX,
    }
}

#[derive(Serialize)]
struct BenchCell {
    engine: DetEngine,
    n: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    digits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_continuant: Option<bool>,
}

pub fn bench(args: &BenchArgs, out: &mut impl Write) -> CmdResult {
    if args.sizes.contains(&0) {
        return Err(Failure::Config("sizes must be at least 1".into()));
    }
    match args.format {
        Format::Csv => csv_row(
            out,
            &["engine", "n", "status", "millis", "digits", "matches_continuant"].map(String::from),
        )?,
        Format::Text => writeln!(
            out,
            "{:<12} {:>7} {:>8} {:>12} {:>8}  agrees",
            "engine", "n", "status", "millis", "digits"
        )?,
        Format::Json => {}
    }
    let mut disagreements = 0;
    for &n in &args.sizes {
        let spec = build_pell_matrix(n)?;
        let reference = det_continuant(&spec);
        let dense = args
            .engines
            .iter()
            .any(|&e| e != DetEngine::Continuant && n <= bench_limit(e))
            .then(|| spec.materialize());
        for &engine in &args.engines {
            let cell = if n > bench_limit(engine) {
                BenchCell {
                    engine,
                    n,
                    status: "skipped",
                    millis: None,
                    digits: None,
                    matches_continuant: None,
                }
            } else {
                let start = Instant::now();
                let value: GaussInt = match engine {
                    DetEngine::Continuant => det_continuant(&spec),
                    other => det_with(dense.as_ref().expect("materialized for dense engines"), other)?,
                };
                let millis = start.elapsed().as_secs_f64() * 1e3;
                let agrees = value == reference;
                if !agrees {
                    disagreements += 1;
                }
                BenchCell {
                    engine,
                    n,
                    status: "ok",
                    millis: Some(millis),
                    digits: Some(value.decimal_digits()),
                    matches_continuant: Some(agrees),
                }
            };
            match args.format {
                Format::Json => json_line(out, &cell)?,
                Format::Csv => csv_row(
                    out,
                    &[
                        engine.to_string(),
                        n.to_string(),
                        cell.status.to_string(),
                        cell.millis.map(|m| format!("{m:.3}")).unwrap_or_default(),
                        cell.digits.map(|d| d.to_string()).unwrap_or_default(),
                        cell.matches_continuant.map(|b| b.to_string()).unwrap_or_default(),
                    ],
                )?,
                Format::Text => writeln!(
                    out,
                    "{:<12} {:>7} {:>8} {:>12} {:>8}  {}",
                    engine.to_string(),
                    n,
                    cell.status,
                    cell.millis.map(|m| format!("{m:.3}")).unwrap_or_else(|| "-".into()),
                    cell.digits.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                    cell.matches_continuant.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
                )?,
            }
        }
    }
    Ok(if disagreements == 0 { EXIT_OK } else { EXIT_IDENTITY_FAILURE })
}
