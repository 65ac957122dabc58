//! The `rankgeo` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::codes::MatrixRankCode;
use crate::error::{Error, Result};
use crate::extension::{additive_generalized_weights, additive_weight_distribution, extend_hamming};
use crate::geometry::{self, knuth_orbit, WeightMethod};
use crate::identities::{is_faithful, run_suite, Relation, Suite, VerdictReport};
use crate::{corpus, io, Field, Guards, Side};

#[derive(Parser, Debug)]
#[command(name = "rankgeo", version, about = "Matrix rank-metric codes and their column- and row-systems")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Largest q^k enumerated.
    #[arg(long, default_value_t = 1 << 26, global = true)]
    pub max_vectors: u64,
    /// Largest Gaussian binomial enumerated.
    #[arg(long, default_value_t = 1 << 22, global = true)]
    pub max_subspaces: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Row,
    Col,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Row => Side::Row,
            SideArg::Col => Side::Column,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    Standard,
    Higher,
    Faithful,
    Bounds,
    Singleton,
    Oneweight,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Standard => Suite::Standard,
            SuiteArg::Higher => Suite::Higher,
            SuiteArg::Faithful => Suite::Faithful,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::Singleton => Suite::Singleton,
            SuiteArg::Oneweight => Suite::OneWeight,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Subcode,
    Shorten,
    System,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parameters, nondegeneracy and rank distribution.
    Info { input: Option<PathBuf> },
    /// Column- and row-systems with their rank distributions.
    Systems { input: Option<PathBuf> },
    /// Run identity and bound verifiers.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Generalized rank weights.
    GenWeights {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Knuth orbit of an [n x n, n, n] code.
    Knuth { input: Option<PathBuf> },
    /// Extended additive Hamming code.
    Extend {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SideArg::Col)]
        side: SideArg,
    },
    /// Seeded random code.
    Random {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Require row and column nondegeneracy.
        #[arg(long)]
        nondegenerate: bool,
        /// Keep drawing until a faithful code appears.
        #[arg(long)]
        faithful_try: bool,
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
    },
    /// The built-in [3x3, 4, 2] binary code.
    Toy,
}

/// Result of a command: text to emit and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, ok: true }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<MatrixRankCode> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    io::parse_code(&text)
}

fn line(v: &Value) -> String {
    let mut s = io::to_json(v);
    s.push('\n');
    s
}

fn table(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().fold(String::new(), |mut acc, (k, v)| {
        let _ = writeln!(acc, "{k:<w$}  {v}");
        acc
    })
}

fn dist_table(title: &str, label: &str, counts: &[u64]) -> String {
    let mut out = format!("{title}\n");
    let width = counts.iter().map(|c| c.to_string().len()).max().unwrap_or(1).max(label.len());
    let _ = writeln!(out, "  r  {label:>width$}");
    for (r, c) in counts.iter().enumerate() {
        let _ = writeln!(out, "{r:>3}  {c:>width$}");
    }
    out
}

fn pair(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn info(c: &MatrixRankCode, g: &Guards, fmt: Format) -> Result<Outcome> {
    let dist = c.rank_distribution(g)?;
    let d = dist.min_distance();
    let (cn, rn) = (c.is_nondegenerate(Side::Column), c.is_nondegenerate(Side::Row));
    Ok(Outcome::ok(match fmt {
        Format::Json => line(&json!({
            "kind": "info",
            "field": c.field().literal(),
            "shape": [c.m(), c.n()],
            "k": c.k(),
            "column_nondegenerate": cn,
            "row_nondegenerate": rn,
            "rank_distribution": dist.counts,
            "min_distance": d,
        })),
        Format::Table => {
            let mut s = table(&[
                pair("field", c.field()),
                pair("shape", format!("{}x{}", c.m(), c.n())),
                pair("k", c.k()),
                pair("d", d.map_or("-".into(), |d| d.to_string())),
                pair("column-nondegenerate", cn),
                pair("row-nondegenerate", rn),
            ]);
            s.push_str(&dist_table("rank distribution", "A_r", &dist.counts));
            s
        }
    }))
}

fn systems(c: &MatrixRankCode, g: &Guards, fmt: Format) -> Result<Outcome> {
    let t = c.generator_tensor();
    let cs = match geometry::column_system(&t) {
        Ok(s) => Some(s),
        Err(Error::DegenerateCode { .. }) => None,
        Err(e) => return Err(e),
    };
    let rs = match geometry::row_system(&t) {
        Ok(s) => Some(s),
        Err(Error::DegenerateCode { .. }) => None,
        Err(e) => return Err(e),
    };
    let cd = cs.as_ref().map(|s| s.matrix_space().rank_distribution(g)).transpose()?;
    let rd = rs.as_ref().map(|s| s.matrix_space().rank_distribution(g)).transpose()?;
    Ok(Outcome::ok(match fmt {
        Format::Json => line(&json!({
            "column_system": cs.as_ref().map(io::column_system_doc),
            "column_system_rank_distribution": cd.as_ref().map(|d| &d.counts),
            "row_system": rs.as_ref().map(io::row_system_doc),
            "row_system_rank_distribution": rd.as_ref().map(|d| &d.counts),
        })),
        Format::Table => {
            let mut out = String::new();
            match (&cs, &cd) {
                (Some(s), Some(d)) => {
                    let _ = writeln!(out, "column system: {} matrices of shape {}x{}", s.dim(), s.k(), s.m());
                    for x in s.basis() {
                        let _ = writeln!(out, "  {}", x.to_text());
                    }
                    out.push_str(&dist_table("column system rank distribution", "A_r", &d.counts));
                }
                _ => out.push_str("column system: none (code is column-degenerate)\n"),
            }
            match (&rs, &rd) {
                (Some(s), Some(d)) => {
                    let _ = writeln!(out, "row system: {} matrices of shape {}x{}", s.dim(), s.n(), s.k());
                    for y in s.basis() {
                        let _ = writeln!(out, "  {}", y.to_text());
                    }
                    out.push_str(&dist_table("row system rank distribution", "A_r", &d.counts));
                }
                _ => out.push_str("row system: none (code is row-degenerate)\n"),
            }
            out
        }
    }))
}

fn verify(c: &MatrixRankCode, suite: Suite, g: &Guards, fmt: Format) -> Result<Outcome> {
    let reports = run_suite(c, suite, g)?;
    let ok = reports.iter().all(|r| r.passed);
    let text = match fmt {
        Format::Json => reports.iter().map(|r| line(&serde_json::to_value(r).expect("report"))).collect(),
        Format::Table => verdict_table(&reports),
    };
    Ok(Outcome { text, ok })
}

fn verdict_table(reports: &[VerdictReport]) -> String {
    let name_w = reports.iter().map(|r| r.name.len()).max().unwrap_or(4);
    let mut out = String::new();
    for r in reports {
        let status = match (r.applicable, r.passed) {
            (false, _) => "n/a ",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        let mut extra: Vec<String> = Vec::new();
        for key in ["t", "side"] {
            if let Some(v) = r.context.get(key) {
                extra.push(format!("{key}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())));
            }
        }
        let rel = match r.relation {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Agree => "~",
        };
        let _ = writeln!(out, "{status}  {:<name_w$}  {} {rel} {}  {}", r.name, r.lhs, r.rhs, extra.join(" "));
    }
    out
}

fn gen_weights(c: &MatrixRankCode, side: Side, method: MethodArg, g: &Guards, fmt: Format) -> Result<Outcome> {
    let methods: Vec<WeightMethod> = match method {
        MethodArg::All => WeightMethod::ALL.to_vec(),
        MethodArg::Subcode => vec![WeightMethod::Subcode],
        MethodArg::Shorten => vec![WeightMethod::Shorten],
        MethodArg::System => vec![WeightMethod::System],
    };
    let mut results = Vec::new();
    for m in methods {
        results.push((m, geometry::generalized_weights(c, side, m, g)?));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let text = match fmt {
        Format::Json => {
            let map: serde_json::Map<String, Value> = results.iter().map(|(m, w)| (m.to_string(), json!(w))).collect();
            line(&json!({"side": side.to_string(), "weights": map, "agree": agree}))
        }
        Format::Table => {
            let rows: Vec<(String, String)> = results
                .iter()
                .map(|(m, w)| pair(&m.to_string(), w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
                .collect();
            format!("generalized weights, {side} side (t = 1..{})\n{}", c.k(), table(&rows))
        }
    };
    Ok(Outcome { text, ok: agree })
}

fn knuth(c: &MatrixRankCode, g: &Guards, fmt: Format) -> Result<Outcome> {
    let orbit = knuth_orbit(c, g)?;
    Ok(Outcome::ok(match fmt {
        Format::Json => line(&json!({
            "size": orbit.len(),
            "members": orbit.iter().map(|m| json!({
                "word": m.word,
                "min_distance": m.min_distance,
                "code": io::code_doc(&m.code),
            })).collect::<Vec<_>>(),
        })),
        Format::Table => {
            let mut out = format!("Knuth orbit: {} distinct codes\n", orbit.len());
            for m in &orbit {
                let word = if m.word.is_empty() { "id" } else { m.word.as_str() };
                let basis: Vec<String> = m.code.basis().iter().map(|b| b.to_text()).collect();
                let _ = writeln!(out, "{word:<4} [{0}x{0}, {1}, {2}]  {3}", m.code.n(), m.code.k(), m.min_distance, basis.join(" | "));
            }
            out
        }
    }))
}

fn extend(c: &MatrixRankCode, side: Side, g: &Guards, fmt: Format) -> Result<Outcome> {
    let h = extend_hamming(&c.generator_tensor(), side, g)?;
    let dist = additive_weight_distribution(&h, g)?;
    let weights = additive_generalized_weights(&h, g)?;
    let d = (1..dist.len()).find(|&w| dist[w] > 0);
    Ok(Outcome::ok(match fmt {
        Format::Json => line(&json!({
            "code": io::additive_doc(&h),
            "weight_distribution": dist,
            "min_distance": d,
            "generalized_weights": weights,
        })),
        Format::Table => {
            let mut s = table(&[
                pair("side", side),
                pair("alphabet", h.alphabet()),
                pair("length", h.length),
                pair("K-dimension", h.kdim),
                pair("d", d.map_or("-".into(), |d| d.to_string())),
                pair("generalized weights", weights.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")),
                pair("generator", h.generator.to_text()),
            ]);
            s.push_str(&dist_table("Hamming weight distribution", "A_w", &dist).replace("  r  ", "  w  "));
            s
        }
    }))
}

#[allow(clippy::too_many_arguments)]
fn random(
    q: u32,
    m: usize,
    n: usize,
    k: usize,
    seed: u64,
    nondegenerate: bool,
    faithful_try: bool,
    attempts: usize,
    g: &Guards,
    fmt: Format,
) -> Result<Outcome> {
    let field = Field::of_order(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code = if faithful_try {
        let mut found = None;
        for _ in 0..attempts {
            if k > m * n {
                return Err(Error::InvalidArgument(format!("k = {k} exceeds m n = {}", m * n)));
            }
            let Ok(c) = corpus::random_code(&mut rng, &field, m, n, k, nondegenerate, 1) else {
                continue;
            };
            if is_faithful(&c, g)? {
                found = Some(c);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::InvalidArgument(format!("no faithful [{m}x{n}, {k}] code over GF({q}) in {attempts} draws"))
        })?
    } else {
        corpus::random_code(&mut rng, &field, m, n, k, nondegenerate, attempts)?
    };
    emit_code(&code, fmt)
}

fn emit_code(c: &MatrixRankCode, fmt: Format) -> Result<Outcome> {
    Ok(Outcome::ok(match fmt {
        Format::Json => line(&serde_json::to_value(io::code_doc(c)).expect("doc")),
        Format::Table => {
            let mut s = table(&[pair("field", c.field()), pair("shape", format!("{}x{}", c.m(), c.n())), pair("k", c.k())]);
            for b in c.basis() {
                let _ = writeln!(s, "  {}", b.to_text());
            }
            s
        }
    }))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = Guards { max_vectors: cli.global.max_vectors, max_subspaces: cli.global.max_subspaces };
    if g.max_vectors == 0 || g.max_subspaces == 0 {
        return Err(Error::InvalidArgument("guards must be positive".into()));
    }
    let fmt = cli.global.format;
    match &cli.command {
        Command::Info { input } => info(&read_input(input)?, &g, fmt),
        Command::Systems { input } => systems(&read_input(input)?, &g, fmt),
        Command::Verify { input, suite } => verify(&read_input(input)?, (*suite).into(), &g, fmt),
        Command::GenWeights { input, side, method } => gen_weights(&read_input(input)?, (*side).into(), *method, &g, fmt),
        Command::Knuth { input } => knuth(&read_input(input)?, &g, fmt),
        Command::Extend { input, side } => extend(&read_input(input)?, (*side).into(), &g, fmt),
        Command::Random { q, m, n, k, seed, nondegenerate, faithful_try, attempts } => {
            random(*q, *m, *n, *k, *seed, *nondegenerate, *faithful_try, *attempts, &g, fmt)
        }
        Command::Toy => emit_code(&corpus::toy_code(), fmt),
    }
}

/// Parse `args`, run the command and return the process exit status:
/// 0 on success, 1 when a verification fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let written = match &cli.global.output {
                Some(p) => std::fs::write(p, &out.text).map_err(|e| e.to_string()),
                None => stdout.write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
