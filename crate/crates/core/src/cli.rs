//! Command-line front end. [`run`] is the whole program minus process I/O.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    check_associative, check_lie, check_pre_lie, check_representation, dual_representation, regular_representation,
    trivial_representation, Kind, Representation,
};
use crate::cohomology::is_lie_two_cocycle;
use crate::document::{parse_document, serialize_document, Document};
use crate::error::{Error, Result};
use crate::fixtures::run_fixture_checks;
use crate::linalg::Matrix;
use crate::nijenhuis::{deformed_algebra, is_nijenhuis};
use crate::operators::{is_o_operator, is_rota_baxter};
use crate::paracomplex::{is_para_kahler, is_paracomplex, is_quadratic};
use crate::report::{format_json, format_text, CheckRecord, Outcome};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::search::{search, Execution, Grid, Target};
use crate::smatrix::{is_pseudo_hessian, is_pseudo_hessian_nijenhuis, is_s_matrix, Symmetry};
use crate::verdict::Verdict;

#[derive(Debug, Parser)]
#[command(name = "prelie", version, about = "Exact checks for pre-Lie algebras and their operators")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run checks on a document. Without flags, runs every applicable check.
    Check(CheckArgs),
    /// Write the algebra deformed by a Nijenhuis operator.
    Deform {
        file: PathBuf,
        #[arg(long, value_name = "OP")]
        nijenhuis: String,
        /// Write `π + tπ_N` instead of `π_N`.
        #[arg(long, value_name = "Q")]
        t: Option<String>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Enumerate grid operators with a property.
    Search {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: SearchTarget,
        /// Integer range `lo..hi`, inclusive.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        grid: String,
        /// Comma-separated positive denominators.
        #[arg(long, default_value = "1", value_delimiter = ',')]
        denominators: Vec<i64>,
        #[arg(long, value_name = "Q", default_value = "0", allow_hyphen_values = true)]
        weight: String,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Run the built-in example corpus.
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchTarget {
    Nijenhuis,
    RotaBaxter,
    SMatrix,
}

#[derive(Debug, Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    pre_lie: bool,
    #[arg(long)]
    lie: bool,
    #[arg(long)]
    assoc: bool,
    #[arg(long, value_name = "OP")]
    nijenhuis: Vec<String>,
    #[arg(long, value_name = "OP")]
    rota_baxter: Vec<String>,
    /// Weight for `--rota-baxter`.
    #[arg(long, value_name = "Q", default_value = "0", allow_hyphen_values = true)]
    weight: String,
    /// Needs `--rep`.
    #[arg(long, value_name = "MAP", requires = "rep")]
    o_operator: Vec<String>,
    /// A representation from the document, or `regular`, `dual`, `trivial`.
    /// Alone, checks the representation axioms.
    #[arg(long, value_name = "NAME")]
    rep: Option<String>,
    #[arg(long, value_name = "TENSOR")]
    s_matrix: Vec<String>,
    #[arg(long, value_name = "FORM")]
    hessian: Vec<String>,
    #[arg(long, num_args = 2, value_names = ["FORM", "OP"])]
    phn: Vec<String>,
    #[arg(long, value_name = "OP")]
    paracomplex: Vec<String>,
    #[arg(long, value_name = "FORM")]
    quadratic: Vec<String>,
    #[arg(long, num_args = 2, value_names = ["FORM", "OP"])]
    para_kahler: Vec<String>,
    #[arg(long)]
    all: bool,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Invocation {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Invocation {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Exit codes: 0 when every check passes, 1 when one fails, 2 on input or
/// resource errors.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Invocation { code, stdout, stderr };
        }
    };
    let result = match cli.command {
        Command::Check(args) => run_check(&args, cli.format),
        Command::Deform { file, nijenhuis, t, output } => run_deform(&file, &nijenhuis, t.as_deref(), output.as_deref()),
        Command::Search { file, target, grid, denominators, weight, sequential } => {
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            run_search(&file, target, &grid, &denominators, &weight, exec, cli.format)
        }
        Command::Fixtures => Ok(records_output(run_fixture_checks(Execution::Parallel), cli.format)),
    };
    result.unwrap_or_else(Invocation::input_error)
}

fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn scalar_arg(text: &str, what: &str) -> Result<Scalar> {
    parse_scalar(text).ok_or_else(|| Error::Parse(format!("{what} '{text}' is not a rational number")))
}

fn records_output(records: Vec<CheckRecord>, format: Format) -> Invocation {
    let code = if records.iter().any(|r| r.result == Outcome::Error) {
        2
    } else if records.iter().all(CheckRecord::passed) {
        0
    } else {
        1
    };
    let stdout = match format {
        Format::Text => format_text(&records),
        Format::Json => format_json(&records),
    };
    Invocation {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn representation(doc: &Document, name: &str) -> Result<Representation> {
    if let Ok(r) = doc.representation(name) {
        return Ok(r.clone());
    }
    let a = &doc.algebra;
    match name {
        "regular" => Ok(regular_representation(a)),
        "dual" => Ok(dual_representation(a)),
        "trivial" => Ok(trivial_representation(a, 1)),
        _ => doc.representation(name).cloned(),
    }
}

struct Planned {
    check: String,
    reference: &'static str,
    result: Result<Verdict>,
}

fn plan(check: String, reference: &'static str, result: Result<Verdict>) -> Planned {
    Planned { check, reference, result }
}

const PRE_LIE_REF: &str = "(x,y,z) = (y,x,z) with (x,y,z) = (xy)z - x(yz)";
const LIE_REF: &str = "skew-symmetry and the Jacobi identity";
const ASSOC_REF: &str = "(xy)z = x(yz)";
const NIJENHUIS_REF: &str = "N(x)N(y) = N(N(x)y + xN(y) - N(xy))";
const RB_REF: &str = "R(x)R(y) = R(R(x)y + xR(y) + weight xy)";
const O_OP_REF: &str = "T(u)T(v) = T(rho(T(u))v + mu(T(v))u)";
const REP_REF: &str = "left and right actions of a representation of a pre-Lie algebra";
const S_MATRIX_REF: &str = "r symmetric with vanishing s-bracket [[r, r]]";
const HESSIAN_REF: &str = "B symmetric nondegenerate with B(xy,z) - B(x,yz) symmetric in x, y";
const PHN_REF: &str = "B pseudo-Hessian, N Nijenhuis, B(Nx,y) = B(x,Ny) and B(N-,-) pseudo-Hessian";
const PARACOMPLEX_REF: &str = "N^2 = Id, equal-dimensional eigenspaces, N Nijenhuis";
const QUADRATIC_REF: &str = "omega skew nondegenerate with omega(xy,z) + omega(y,[x,z]) = 0";
const PARA_KAHLER_REF: &str = "omega symplectic, N para-complex with omega(Nx,Ny) = -omega(x,y)";
const COCYCLE_REF: &str = "omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0";

fn kind_check(doc: &Document) -> Planned {
    let a = &doc.algebra;
    match a.kind() {
        Kind::Lie => plan("Lie".into(), LIE_REF, Ok(check_lie(a))),
        Kind::Associative => plan("associative".into(), ASSOC_REF, Ok(check_associative(a))),
        _ => plan("pre-Lie".into(), PRE_LIE_REF, Ok(check_pre_lie(a))),
    }
}

fn all_checks(doc: &Document) -> Vec<Planned> {
    let a = &doc.algebra;
    let mut out = vec![kind_check(doc)];
    for (name, n) in &doc.operators {
        out.push(plan(format!("Nijenhuis {name}"), NIJENHUIS_REF, is_nijenhuis(a, n)));
    }
    for (name, r) in &doc.representations {
        out.push(plan(format!("representation {name}"), REP_REF, check_representation(a, r)));
    }
    if a.kind() == Kind::Lie {
        for (name, f) in &doc.forms {
            if f.symmetry() == Symmetry::Skew {
                out.push(plan(format!("2-cocycle {name}"), COCYCLE_REF, is_lie_two_cocycle(a, f.matrix())));
            }
        }
        return out;
    }
    for (name, r) in &doc.tensors {
        out.push(plan(format!("s-matrix {name}"), S_MATRIX_REF, is_s_matrix(a, r)));
    }
    for (name, f) in &doc.forms {
        let p = match f.symmetry() {
            Symmetry::Symmetric => plan(format!("pseudo-Hessian {name}"), HESSIAN_REF, is_pseudo_hessian(a, f.matrix())),
            Symmetry::Skew => plan(format!("quadratic {name}"), QUADRATIC_REF, is_quadratic(a, f.matrix())),
        };
        out.push(p);
    }
    out
}

fn requested_checks(args: &CheckArgs, doc: &Document) -> Result<Vec<Planned>> {
    let a = &doc.algebra;
    let mut out = Vec::new();
    if args.pre_lie {
        out.push(plan("pre-Lie".into(), PRE_LIE_REF, Ok(check_pre_lie(a))));
    }
    if args.lie {
        out.push(plan("Lie".into(), LIE_REF, Ok(check_lie(a))));
    }
    if args.assoc {
        out.push(plan("associative".into(), ASSOC_REF, Ok(check_associative(a))));
    }
    for name in &args.nijenhuis {
        out.push(plan(format!("Nijenhuis {name}"), NIJENHUIS_REF, doc.operator(name).and_then(|n| is_nijenhuis(a, n))));
    }
    if !args.rota_baxter.is_empty() {
        let w = scalar_arg(&args.weight, "weight")?;
        for name in &args.rota_baxter {
            let r = doc.operator(name).and_then(|m| is_rota_baxter(a, m, &w));
            out.push(plan(format!("Rota-Baxter {name} of weight {}", format_scalar(&w)), RB_REF, r));
        }
    }
    if let Some(rep_name) = &args.rep {
        let rep = representation(doc, rep_name);
        if args.o_operator.is_empty() {
            let r = rep.and_then(|rep| check_representation(a, &rep));
            out.push(plan(format!("representation {rep_name}"), REP_REF, r));
        } else {
            for name in &args.o_operator {
                let r = rep.clone().and_then(|rep| is_o_operator(a, &rep, doc.map(name)?));
                out.push(plan(format!("O-operator {name} for {rep_name}"), O_OP_REF, r));
            }
        }
    }
    for name in &args.s_matrix {
        out.push(plan(format!("s-matrix {name}"), S_MATRIX_REF, doc.tensor(name).and_then(|r| is_s_matrix(a, r))));
    }
    for name in &args.hessian {
        let r = doc.form(name).and_then(|f| is_pseudo_hessian(a, f.matrix()));
        out.push(plan(format!("pseudo-Hessian {name}"), HESSIAN_REF, r));
    }
    for pair in args.phn.chunks(2) {
        let r = doc
            .form(&pair[0])
            .and_then(|f| is_pseudo_hessian_nijenhuis(a, f.matrix(), doc.operator(&pair[1])?));
        out.push(plan(format!("pseudo-Hessian-Nijenhuis ({}, {})", pair[0], pair[1]), PHN_REF, r));
    }
    for name in &args.paracomplex {
        let r = doc.operator(name).and_then(|n| Ok(is_paracomplex(a, n)?.verdict));
        out.push(plan(format!("para-complex {name}"), PARACOMPLEX_REF, r));
    }
    for name in &args.quadratic {
        let r = doc.form(name).and_then(|f| is_quadratic(a, f.matrix()));
        out.push(plan(format!("quadratic {name}"), QUADRATIC_REF, r));
    }
    for pair in args.para_kahler.chunks(2) {
        let r = doc.form(&pair[0]).and_then(|f| is_para_kahler(a, f.matrix(), doc.operator(&pair[1])?));
        out.push(plan(format!("para-Kähler ({}, {})", pair[0], pair[1]), PARA_KAHLER_REF, r));
    }
    if args.all || out.is_empty() {
        out.extend(all_checks(doc));
    }
    Ok(out)
}

fn run_check(args: &CheckArgs, format: Format) -> Result<Invocation> {
    let doc = read_document(&args.file)?;
    let subject = args.file.display().to_string();
    let records = requested_checks(args, &doc)?
        .into_iter()
        .map(|p| CheckRecord::from_result(&subject, &p.check, p.reference, p.result))
        .collect();
    Ok(records_output(records, format))
}

fn run_deform(file: &Path, op: &str, t: Option<&str>, output: Option<&Path>) -> Result<Invocation> {
    let doc = read_document(file)?;
    let a = &doc.algebra;
    let n = doc.operator(op)?;
    let v = is_nijenhuis(a, n)?;
    if !v.holds {
        let record = CheckRecord::from_result(&file.display().to_string(), &format!("Nijenhuis {op}"), NIJENHUIS_REF, Ok(v));
        let mut inv = records_output(vec![record], Format::Text);
        inv.stderr = std::mem::take(&mut inv.stdout);
        return Ok(inv);
    }
    let deformed = deformed_algebra(a, n)?;
    let (product, origin) = match t {
        None => (deformed.product().as_map().clone(), format!("product deformed by the Nijenhuis operator {op}")),
        Some(t) => {
            let t = scalar_arg(t, "t")?;
            let sum = a.product().as_map().try_add(&deformed.product().as_map().scale(&t))?;
            (sum, format!("deformation by {op} at t = {}", format_scalar(&t)))
        }
    };
    let algebra = crate::algebra::Algebra::new(Kind::PreLie, product)?;
    let algebra = match a.labels() {
        Some(l) => algebra.with_labels(l.to_vec()),
        None => algebra,
    };
    let mut out = Document::new(algebra).with_origin(&origin);
    out.operators = doc.operators.clone();
    let text = serialize_document(&out);
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok(Invocation {
                code: 0,
                stdout: format!("wrote {}\n", path.display()),
                stderr: String::new(),
            })
        }
        None => Ok(Invocation {
            code: 0,
            stdout: text,
            stderr: String::new(),
        }),
    }
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("grid '{text}' is not of the form lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(format_scalar(x))).collect()))
            .collect(),
    )
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let row: Vec<String> = m.row(i).iter().map(format_scalar).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn run_search(
    file: &Path,
    target: SearchTarget,
    grid: &str,
    denominators: &[i64],
    weight: &str,
    exec: Execution,
    format: Format,
) -> Result<Invocation> {
    let doc = read_document(file)?;
    let (lo, hi) = parse_range(grid)?;
    let grid = Grid::range(lo, hi, denominators)?;
    let target = match target {
        SearchTarget::Nijenhuis => Target::Nijenhuis,
        SearchTarget::RotaBaxter => Target::RotaBaxter(scalar_arg(weight, "weight")?),
        SearchTarget::SMatrix => Target::SMatrix,
    };
    let found = search(&doc.algebra, &target, &grid, exec)?;
    let stdout = match format {
        Format::Json => {
            let matches: Vec<Value> = found.matches.iter().map(matrix_json).collect();
            let mut s = serde_json::to_string_pretty(&json!({
                "candidates": found.candidates,
                "matches": matches,
            }))
            .expect("search result serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s: String = found.matches.iter().map(|m| matrix_text(m) + "\n").collect();
            s.push_str(&format!("{} of {} candidates match\n", found.matches.len(), found.candidates));
            s
        }
    };
    Ok(Invocation {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}
