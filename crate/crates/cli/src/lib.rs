//! Command-line front end for `agcode`.
//!
//! Every command renders its whole output into a `String`, so the binary and the tests share
//! one code path. Machine output prints field elements as integer codes; `--pretty` switches
//! to `0, 1, a, a^2, ...`.

pub mod channel;
pub mod descriptor;

use std::fmt::Write as _;
use std::path::PathBuf;

use agcode::bounds::BoundTable;
use agcode::codechain::CodeChain;
use agcode::curve::{CurveKind, CurveModel};
use agcode::decoder::DecoderContext;
use agcode::linalg::parse_codes;
use agcode::oracle::{self, DEFAULT_CAP};
use agcode::{Fe, Field, FieldMatrix, FieldVector, NumericalSemigroup};
use clap::{Args, Parser, Subcommand, ValueEnum};

use descriptor::{kind_from_parts, CodeDescriptor, Selection};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad or inconsistent flags; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// The request was well formed but the computation failed; exit status 1.
    #[error(transparent)]
    Domain(#[from] agcode::Error),
    /// Some verification checks failed; the report still goes to stdout. Exit status 1.
    #[error("{failed} verification checks failed")]
    Checks { report: String, failed: usize },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Domain(_) | CliError::Checks { .. } => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "agcode",
    version,
    about = "One-point AG codes on Castle curves"
)]
pub struct Cli {
    /// Render field elements as 0, 1, a, a^2, ... instead of integer codes.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a numerical semigroup.
    Semigroup {
        /// Comma-separated generators.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Field size for the point-count bounds.
        #[arg(long)]
        q: Option<u64>,
    },
    /// Field, genus, semigroup and rational points of a curve.
    Curve(ModelArgs),
    /// Dimension set, order bounds and improved codes.
    Bounds {
        #[command(flatten)]
        model: ModelArgs,
        /// Semigroup generators, instead of a model (needs --q and --n).
        #[arg(long, value_delimiter = ',', conflicts_with = "model")]
        gens: Option<Vec<u64>>,
        /// Code length when working from --gens.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Code construction.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Encode a message.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Whitespace-separated element codes.
        #[arg(long)]
        message: String,
    },
    /// Add an error pattern to a word.
    Channel {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
        /// Explicit error pattern.
        #[arg(long, conflicts_with_all = ["weight", "seed"])]
        error: Option<String>,
        /// Weight of a random error pattern.
        #[arg(long)]
        weight: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Majority-voting decoding with a per-step vote log.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
    },
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum CodeCommand {
    /// Print the generator matrix in the matrix text format.
    Matrix(CodeArgs),
    /// Print a descriptor file for the selected code.
    Descriptor(CodeArgs),
    /// Print n, k, abundance and distance bounds.
    Info(CodeArgs),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Exact minimum distance of a generator matrix file.
    Distance {
        #[arg(long)]
        matrix: PathBuf,
        /// Also print the weight distribution.
        #[arg(long)]
        histogram: bool,
        /// Largest number of codewords to enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Cross-check the library against brute force.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    #[value(alias = "rational-line")]
    Line,
    Hermitian,
    NormTrace,
    Suzuki,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelName>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub q0: Option<u64>,
    /// Descriptor file; replaces the model flags.
    #[arg(long, conflicts_with_all = ["model", "q", "r", "q0"])]
    pub code: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Divisor degree of the one-point code C(mQ).
    #[arg(long, conflicts_with = "delta")]
    pub m: Option<u64>,
    /// Designed distance of the improved code.
    #[arg(long)]
    pub delta: Option<usize>,
}

impl ModelArgs {
    fn descriptor(&self) -> CliResult<CodeDescriptor> {
        if let Some(path) = &self.code {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            return CodeDescriptor::parse(&text);
        }
        let model = self
            .model
            .ok_or_else(|| CliError::Usage("--model or --code is required".into()))?;
        let name = model.to_possible_value().expect("no skipped variants");
        let kind = kind_from_parts(name.get_name(), self.q, self.r, self.q0, &|k| {
            format!("--{k}")
        })?;
        Ok(CodeDescriptor {
            kind,
            selection: None,
        })
    }

    fn curve(&self) -> CliResult<CurveModel> {
        Ok(CurveModel::new(self.descriptor()?.kind)?)
    }
}

impl CodeArgs {
    fn descriptor(&self) -> CliResult<CodeDescriptor> {
        let mut d = self.model.descriptor()?;
        if let Some(m) = self.m {
            d.selection = Some(Selection::Degree(m));
        } else if let Some(delta) = self.delta {
            d.selection = Some(Selection::Delta(delta));
        }
        Ok(d)
    }
}

/// A selected code: either `C(mQ)` or an improved code.
struct Selected {
    chain: CodeChain,
    selection: Selection,
}

impl Selected {
    fn load(args: &CodeArgs) -> CliResult<Self> {
        let d = args.descriptor()?;
        let selection = d
            .selection
            .ok_or_else(|| CliError::Usage("--m or --delta is required".into()))?;
        let chain = CodeChain::build(&CurveModel::new(d.kind)?)?;
        let s = Selected { chain, selection };
        match selection {
            Selection::Degree(m) => {
                s.chain
                    .code_at(m)
                    .map_err(|e| CliError::Usage(format!("--m: {e}")))?;
            }
            Selection::Delta(delta) if delta < 1 || delta > s.chain.n() => {
                return Err(CliError::Usage(format!(
                    "--delta: {delta} is outside 1..={}",
                    s.chain.n()
                )));
            }
            Selection::Delta(_) => {}
        }
        Ok(s)
    }

    fn field(&self) -> &Field {
        self.chain.curve().field()
    }

    fn generator(&self) -> CliResult<FieldMatrix> {
        Ok(match self.selection {
            Selection::Degree(m) => self.chain.code_at(m)?.generator(),
            Selection::Delta(delta) => {
                BoundTable::from_chain(&self.chain).improved_code(&self.chain, delta)?
            }
        })
    }

    fn degree(&self, command: &str) -> CliResult<u64> {
        match self.selection {
            Selection::Degree(m) => Ok(m),
            Selection::Delta(_) => {
                Err(CliError::Usage(format!("{command} needs --m, not --delta")))
            }
        }
    }
}

struct Printer {
    pretty: bool,
}

impl Printer {
    fn elem(&self, field: &Field, a: Fe) -> String {
        if self.pretty {
            field.pretty(a)
        } else {
            a.code().to_string()
        }
    }

    fn line(&self, field: &Field, v: &[Fe]) -> String {
        v.iter()
            .map(|&a| self.elem(field, a))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn parse_word(field: &Field, text: &str, n: usize, flag: &str) -> CliResult<FieldVector> {
    let codes = parse_codes(field, text).map_err(|e| CliError::Usage(format!("{flag}: {e}")))?;
    if codes.len() != n {
        return Err(CliError::Usage(format!(
            "{flag}: expected {n} entries, got {}",
            codes.len()
        )));
    }
    Ok(FieldVector::new(field, codes)?)
}

/// Runs one parsed command and returns its standard output.
pub fn run(cli: &Cli) -> CliResult<String> {
    let p = Printer { pretty: cli.pretty };
    match &cli.command {
        Command::Semigroup { gens, q } => cmd_semigroup(gens, *q),
        Command::Curve(model) => cmd_curve(model, &p),
        Command::Bounds { model, gens, n } => cmd_bounds(model, gens.as_deref(), *n),
        Command::Code(sub) => cmd_code(sub),
        Command::Encode { code, message } => cmd_encode(code, message, &p),
        Command::Channel {
            code,
            word,
            error,
            weight,
            seed,
        } => cmd_channel(code, word, error.as_deref(), *weight, *seed, &p),
        Command::Decode { code, word } => cmd_decode(code, word, &p),
        Command::Oracle(sub) => cmd_oracle(sub),
    }
}

fn cmd_semigroup(gens: &[u64], q: Option<u64>) -> CliResult<String> {
    let h = NumericalSemigroup::from_generators(gens)?;
    let mut out = String::new();
    writeln!(out, "semigroup: {h}").unwrap();
    writeln!(out, "elements: {}", join(&h.small_elements(), " ")).unwrap();
    writeln!(out, "gaps: {}", join(h.gaps(), " ")).unwrap();
    writeln!(out, "genus: {}", h.genus()).unwrap();
    writeln!(out, "conductor: {}", h.conductor()).unwrap();
    writeln!(out, "symmetric: {}", h.is_symmetric()).unwrap();
    writeln!(out, "apery: {}", join(&h.apery_set(), " ")).unwrap();
    if let Some(q) = q {
        let lgm = h.lgm_bound(q);
        writeln!(out, "lgm: {}", lgm.refined).unwrap();
        writeln!(out, "lewittes: {}", lgm.lewittes).unwrap();
    }
    Ok(out)
}

fn cmd_curve(model: &ModelArgs, p: &Printer) -> CliResult<String> {
    let curve = model.curve()?;
    let field = curve.field();
    let mut out = String::new();
    writeln!(out, "curve: {}", curve.kind()).unwrap();
    writeln!(out, "field: {}", field.name()).unwrap();
    writeln!(out, "genus: {}", curve.genus()).unwrap();
    writeln!(out, "n: {}", curve.n()).unwrap();
    writeln!(out, "semigroup: {}", curve.weierstrass_semigroup()).unwrap();
    if curve.is_concrete() {
        writeln!(out, "points:").unwrap();
        for pt in curve.points()? {
            writeln!(out, "{} {}", p.elem(field, pt.x), p.elem(field, pt.y)).unwrap();
        }
    } else {
        writeln!(out, "points: none (semigroup level only)").unwrap();
    }
    Ok(out)
}

fn cmd_bounds(model: &ModelArgs, gens: Option<&[u64]>, n: Option<u64>) -> CliResult<String> {
    let table = match gens {
        Some(gens) => {
            let h = NumericalSemigroup::from_generators(gens)?;
            let q = model
                .q
                .ok_or_else(|| CliError::Usage("--q is required with --gens".into()))?;
            let n = n.ok_or_else(|| CliError::Usage("--n is required with --gens".into()))?;
            BoundTable::new(&h, q, n)?
        }
        None => BoundTable::from_curve(&model.curve()?)?,
    };
    let n = table.n();
    let h = table.semigroup();
    let mut out = String::new();
    writeln!(out, "n: {n}").unwrap();
    writeln!(out, "genus: {}", table.genus()).unwrap();
    writeln!(out, "M: {}", join(table.dimension_set(), ",")).unwrap();
    let q = match model.descriptor().map(|d| d.kind) {
        Ok(CurveKind::Suzuki { q0 }) => Some(2 * q0 * q0),
        Ok(CurveKind::RationalLine { q }) => Some(q),
        Ok(CurveKind::Hermitian { q }) => Some(q * q),
        Ok(CurveKind::NormTrace { q, r }) => Some(q.pow(r)),
        Err(_) => model.q,
    };
    if let Some(q) = q {
        writeln!(out, "qH*+H: {}", h.scaled_sumset(q)).unwrap();
    }
    writeln!(out, "lambda*: {}", join(table.lambda_sizes(), ",")).unwrap();
    writeln!(out, "N*: {}", join(table.nstar_sizes(), ",")).unwrap();
    let d_ord: Vec<usize> = (1..=n).map(|k| table.d_ord(k)).collect::<Result<_, _>>()?;
    writeln!(out, "d_ord: {}", join(&d_ord, ",")).unwrap();
    writeln!(
        out,
        "goppa-improvements: {}",
        join(&table.goppa_improvements(), ",")
    )
    .unwrap();
    writeln!(
        out,
        "monotone-deltas: {}",
        join(&table.monotone_deltas(), ",")
    )
    .unwrap();
    Ok(out)
}

fn cmd_code(sub: &CodeCommand) -> CliResult<String> {
    match sub {
        CodeCommand::Matrix(args) => Ok(Selected::load(args)?.generator()?.to_text()),
        CodeCommand::Descriptor(args) => {
            Selected::load(args)?;
            Ok(args.descriptor()?.to_text())
        }
        CodeCommand::Info(args) => {
            let s = Selected::load(args)?;
            let table = BoundTable::from_chain(&s.chain);
            let mut out = String::new();
            writeln!(out, "field: {}", s.field().name()).unwrap();
            writeln!(out, "n: {}", s.chain.n()).unwrap();
            match s.selection {
                Selection::Degree(m) => {
                    let code = s.chain.code_at(m)?;
                    writeln!(out, "m: {m}").unwrap();
                    writeln!(out, "resolved-m: {}", code.resolved_m()).unwrap();
                    writeln!(out, "k: {}", code.k()).unwrap();
                    writeln!(out, "abundance: {}", code.abundance()).unwrap();
                    writeln!(out, "goppa: {}", code.goppa_bound()).unwrap();
                    writeln!(out, "improved-goppa: {}", code.improved_goppa_bound()).unwrap();
                    if code.k() > 0 {
                        writeln!(out, "d_ord: {}", table.d_ord(code.k())?).unwrap();
                    }
                    if let Some(d) = code.exact_distance_castle() {
                        writeln!(out, "distance: {d}").unwrap();
                    }
                }
                Selection::Delta(delta) => {
                    writeln!(out, "delta: {delta}").unwrap();
                    writeln!(out, "k: {}", table.improved_dimension(delta)).unwrap();
                    writeln!(
                        out,
                        "support: {}",
                        join(&table.improved_support(delta), ",")
                    )
                    .unwrap();
                }
            }
            Ok(out)
        }
    }
}

fn cmd_encode(args: &CodeArgs, message: &str, p: &Printer) -> CliResult<String> {
    let s = Selected::load(args)?;
    let g = s.generator()?;
    let z =
        parse_codes(s.field(), message).map_err(|e| CliError::Usage(format!("--message: {e}")))?;
    if z.len() != g.rows() {
        return Err(CliError::Usage(format!(
            "--message: expected {} entries, got {}",
            g.rows(),
            z.len()
        )));
    }
    let c = g.combine_rows(&z)?;
    Ok(format!("{}\n", p.line(s.field(), c.as_slice())))
}

fn cmd_channel(
    args: &CodeArgs,
    word: &str,
    error: Option<&str>,
    weight: Option<usize>,
    seed: u64,
    p: &Printer,
) -> CliResult<String> {
    let s = Selected::load(args)?;
    let field = s.field();
    let n = s.chain.n();
    let c = parse_word(field, word, n, "--word")?;
    let e = match (error, weight) {
        (Some(text), _) => parse_word(field, text, n, "--error")?,
        (None, Some(t)) if t <= n => channel::random_error(field, n, t, seed),
        (None, Some(t)) => return Err(CliError::Usage(format!("--weight: {t} exceeds n = {n}"))),
        (None, None) => return Err(CliError::Usage("--error or --weight is required".into())),
    };
    let u = c.add(&e)?;
    Ok(format!("{}\n", p.line(field, u.as_slice())))
}

fn cmd_decode(args: &CodeArgs, word: &str, p: &Printer) -> CliResult<String> {
    let s = Selected::load(args)?;
    let m = s.degree("decode")?;
    let field = s.field();
    let code = s.chain.code_at(m)?;
    let ctx = DecoderContext::for_code(&code)?;
    let u = parse_word(field, word, s.chain.n(), "--word")?;
    let d = ctx.decode(&u)?;
    let mut out = String::new();
    writeln!(out, "error: {}", p.line(field, d.error.as_slice())).unwrap();
    writeln!(out, "codeword: {}", p.line(field, d.codeword.as_slice())).unwrap();
    writeln!(out, "message: {}", p.line(field, &d.message)).unwrap();
    writeln!(out, "syndromes: {}", p.line(field, &d.syndromes)).unwrap();
    for step in &d.steps {
        writeln!(out, "step s{}:", step.l + 1).unwrap();
        for c in &step.candidates {
            let (i, j) = c.pair;
            writeln!(
                out,
                "  candidate ({i},{j}) predicted {} vote {}",
                p.elem(field, c.predicted),
                p.elem(field, c.vote)
            )
            .unwrap();
        }
        for (i, j) in &step.discrepancies {
            writeln!(out, "  excluded ({i},{j})").unwrap();
        }
        writeln!(out, "  chosen {}", p.elem(field, step.chosen)).unwrap();
    }
    Ok(out)
}

fn cmd_oracle(sub: &OracleCommand) -> CliResult<String> {
    match sub {
        OracleCommand::Distance {
            matrix,
            histogram,
            cap,
        } => {
            let text = std::fs::read_to_string(matrix).map_err(|source| CliError::Io {
                path: matrix.clone(),
                source,
            })?;
            let g = FieldMatrix::from_text(&text)
                .map_err(|e| CliError::Usage(format!("--matrix: {e}")))?;
            let mut out = format!(
                "distance: {}\n",
                oracle::brute_min_distance_capped(&g, *cap)?
            );
            if *histogram {
                let hist = oracle::brute_weight_distribution_capped(&g, *cap)?;
                for (w, count) in hist.iter().enumerate().filter(|(_, &c)| c > 0) {
                    writeln!(out, "weight {w}: {count}").unwrap();
                }
            }
            Ok(out)
        }
        OracleCommand::Verify { model, cap } => {
            let chain = CodeChain::build(&model.curve()?)?;
            let checks = oracle::verify_chain(&chain, *cap)?;
            let mut out = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status}  {:<42} {}", c.name, c.detail).unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len()).unwrap();
            if failed > 0 {
                return Err(CliError::Checks {
                    report: out,
                    failed,
                });
            }
            Ok(out)
        }
    }
}
