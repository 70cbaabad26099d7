//! Batch front end: argument parsing, file I/O and exit codes.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use valuative::chain::{enumerate_p, enumerate_p_sym, enumerate_t};
use valuative::decomposition::check_decomposition;
use valuative::expansion::symmetrize;
use valuative::hopf::{antipode_sym, coproduct_sym};
use valuative::invariants::{g_invariant, tutte_direct, tutte_from_g, GCoefficients};
use valuative::lyndon::lyndon_words;
use valuative::rankfn::{enumerate_matroids, enumerate_polymatroids, parse_json};
use valuative::tables::{series_check, table_p, table_t, TMode, SERIES_IDS};
use valuative::words::lyndon_bracket;
use valuative::{expand, par, Class, Error, RankFunction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "valuative", version, about = "Exact valuative invariants of matroids and polymatroids")]
struct Cli {
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Accepted for reproducible scripts; no subcommand draws random numbers.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a rank function and report every violated axiom.
    Validate(Input),
    /// Stream rank functions, basis keys or Lyndon words as JSON lines.
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "rank")]
        kind: EnumKind,
    },
    /// Coordinates of the base polytope indicator in the chain basis.
    Expand {
        #[command(flatten)]
        input: Input,
        /// Merge orbits onto initial-segment chains.
        #[arg(long)]
        sym: bool,
    },
    /// G-invariant or Tutte polynomial.
    Invariant {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "g")]
        form: Form,
    },
    /// Rank tables, rows d and columns r.
    Tables {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        sym: bool,
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[arg(long, default_value_t = 6)]
        rmax: usize,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compare a generating-function identity with enumerated tables.
    SeriesCheck {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Verify a decomposition bundle {target, pieces, intersections?}.
    CheckDecomposition(Input),
    /// Coproduct, antipode and Lyndon bracket utilities.
    Hopf {
        #[command(subcommand)]
        op: HopfOp,
    },
}

#[derive(Subcommand, Debug)]
enum HopfOp {
    Coproduct(Input),
    Antipode(Input),
    /// Bracket `b(α)`; with `--in`, also its pairing with `g`.
    Bracket {
        /// Letters separated by commas, or a digit string such as 011.
        #[arg(long)]
        word: String,
        #[arg(long = "in")]
        input: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// JSON file, or - for standard input.
    #[arg(long = "in")]
    input: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    #[value(name = "M")]
    M,
    #[value(name = "PM")]
    Pm,
}

impl From<ClassArg> for Class {
    fn from(c: ClassArg) -> Class {
        match c {
            ClassArg::M => Class::Matroid,
            ClassArg::Pm => Class::Polymatroid,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumKind {
    Rank,
    P,
    Psym,
    T,
    Tsym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    G,
    TutteDirect,
    TutteFromG,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    P,
    T,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Index,
    Linear,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Deserialize)]
struct Bundle {
    target: Value,
    pieces: Vec<Value>,
    #[serde(default)]
    intersections: Vec<SuppliedIntersection>,
}

#[derive(Deserialize, Serialize)]
struct SuppliedIntersection {
    /// 1-based piece indices.
    pieces: Vec<usize>,
    rank: Value,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_DOMAIN, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse `argv` (program name first), run, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    // Output is buffered so the work can move onto a sized pool.
    let mut buf: Vec<u8> = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(1) => par::sequential(|| dispatch(&cli.command, &mut buf)),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &mut buf)),
            Err(e) => Err(usage(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli.command, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &str) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn read_rank(path: &str) -> std::result::Result<RankFunction, Failure> {
    Ok(parse_json(&read_input(path)?)?)
}

fn rank_from_value(v: &Value) -> std::result::Result<RankFunction, Failure> {
    Ok(parse_json(&v.to_string())?)
}

fn emit(out: &mut dyn Write, v: &impl Serialize) -> Outcome {
    let text = serde_json::to_string(v).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))
}

fn parse_word(s: &str) -> std::result::Result<Vec<u32>, Failure> {
    let bad = || usage(format!("cannot read word {s:?}; use digits like 011 or 0,1,1"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Validate(input) => {
            let rk = read_rank(&input.input)?;
            emit(out, &json!({"valid": true, "d": rk.d(), "class": rk.class(), "rank": rk.rank()}))
        }
        Command::Enumerate { d, r, class, kind } => enumerate(*d, *r, (*class).into(), *kind, out),
        Command::Expand { input, sym } => {
            let v = expand(&read_rank(&input.input)?)?;
            if *sym {
                emit(out, &symmetrize(&v))
            } else {
                emit(out, &v)
            }
        }
        Command::Invariant { input, form } => {
            let rk = read_rank(&input.input)?;
            match form {
                Form::G => emit(out, &g_invariant(&rk)?),
                Form::TutteDirect => emit(out, &tutte_direct(&rk)?),
                Form::TutteFromG => emit(out, &tutte_from_g(&g_invariant(&rk)?)?),
            }
        }
        Command::Tables { what, class, sym, dmax, rmax, mode, format } => {
            if *dmax > 6 || *rmax > 6 {
                return Err(usage("tables are produced for --dmax <= 6 and --rmax <= 6"));
            }
            let class = (*class).into();
            let table = match what {
                What::P => table_p(*dmax, *rmax, class, *sym)?,
                What::T => {
                    let mode = match mode {
                        ModeArg::Index => TMode::Index,
                        ModeArg::Linear => TMode::LinearAlgebra,
                        ModeArg::Both => TMode::Both,
                    };
                    table_t(*dmax, *rmax, class, *sym, mode)?
                }
            };
            match format {
                Format::Csv => write!(out, "{}", table.to_csv()).map_err(|e| usage(e.to_string())),
                Format::Json => emit(out, &table.to_json()),
            }
        }
        Command::SeriesCheck { id, degree } => {
            if !SERIES_IDS.contains(&id.as_str()) {
                return Err(usage(format!("unknown --id {id}; valid: {}", SERIES_IDS.join(", "))));
            }
            let rep = series_check(id, *degree)?;
            emit(out, &rep)?;
            match &rep.mismatch {
                None => Ok(()),
                Some((d, r, want, got)) => Err(Failure {
                    code: EXIT_DOMAIN,
                    message: format!("{id}: coefficient at d={d} r={r} is {want}, table has {got}"),
                }),
            }
        }
        Command::CheckDecomposition(input) => decomposition(&read_input(&input.input)?, out),
        Command::Hopf { op } => hopf(op, out),
    }
}

fn enumerate(d: usize, r: usize, class: Class, kind: EnumKind, out: &mut dyn Write) -> Outcome {
    let ri = r as i64;
    match kind {
        EnumKind::Rank => {
            let it = match class {
                Class::Matroid => enumerate_matroids(d, r)?,
                _ => enumerate_polymatroids(d, r)?,
            };
            for rk in it {
                emit(out, &rk)?;
            }
        }
        EnumKind::P | EnumKind::Psym | EnumKind::T => {
            let keys = match kind {
                EnumKind::P => enumerate_p(d, ri, class)?,
                EnumKind::Psym => enumerate_p_sym(d, ri, class)?,
                _ => enumerate_t(d, ri, class)?,
            };
            for k in keys {
                emit(out, &k)?;
            }
        }
        EnumKind::Tsym => {
            for w in lyndon_words(d, r as u32, class) {
                emit(out, &w)?;
            }
        }
    }
    Ok(())
}

fn decomposition(text: &str, out: &mut dyn Write) -> Outcome {
    let bundle: Bundle =
        serde_json::from_str(text).map_err(|e| Failure::from(Error::Parse(e.to_string())))?;
    let target = rank_from_value(&bundle.target)?;
    let pieces: Vec<RankFunction> = bundle.pieces.iter().map(rank_from_value).collect::<Result<_, _>>()?;
    let mut supplied = BTreeMap::new();
    for s in &bundle.intersections {
        let mut mask = 0u32;
        for &i in &s.pieces {
            if i == 0 || i > pieces.len() {
                return Err(Failure::from(Error::Parse(format!("intersection names piece {i}, not in 1..={}", pieces.len()))));
            }
            mask |= 1 << (i - 1);
        }
        supplied.insert(mask, rank_from_value(&s.rank)?);
    }
    match check_decomposition(&target, &pieces, &supplied) {
        Ok(v) => {
            let inter: Vec<Value> = v
                .intersections
                .iter()
                .map(|(&m, rk)| {
                    let idx: Vec<usize> = (0..pieces.len()).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect();
                    json!({"pieces": idx, "rank": rk})
                })
                .collect();
            emit(out, &json!({"verdict": "VALID", "intersections": inter}))
        }
        Err(e) => {
            emit(out, &json!({"verdict": "INVALID", "witness": e.to_string()}))?;
            Err(e.into())
        }
    }
}

fn hopf(op: &HopfOp, out: &mut dyn Write) -> Outcome {
    match op {
        HopfOp::Coproduct(input) => {
            let terms: Vec<Value> = coproduct_sym(&read_rank(&input.input)?)?
                .terms()
                .iter()
                .map(|((a, b), c)| json!({"left": a, "right": b, "coeff": c}))
                .collect();
            emit(out, &terms)
        }
        HopfOp::Antipode(input) => {
            let terms: Vec<Value> = antipode_sym(&read_rank(&input.input)?)?
                .terms()
                .iter()
                .map(|(a, c)| json!({"class": a, "coeff": c}))
                .collect();
            emit(out, &terms)
        }
        HopfOp::Bracket { word, input } => {
            let alpha = parse_word(word)?;
            let b = lyndon_bracket(&alpha)?;
            let terms: Vec<Value> =
                b.terms().iter().map(|(w, c)| json!({"word": w, "coeff": c.to_string()})).collect();
            let mut result = json!({"word": alpha, "bracket": terms});
            if let Some(path) = input {
                let g: GCoefficients = g_invariant(&read_rank(path)?)?;
                result["pairing"] = json!(b.pair(&g).to_string());
            }
            emit(out, &result)
        }
    }
}
