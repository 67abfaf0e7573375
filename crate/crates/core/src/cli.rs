//! Command-line front end. `compute` prints series, `verify` prints reports,
//! `enumerate` lists tableaux and cosets.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coxeter::{cosets_in_window, enumerate_cosets, lambda_pm, CosetElement};
use crate::error::{Error, Result};
use crate::matrix;
use crate::partitions::{GeneralizedPartition, Partition, SkewShape};
use crate::repchar::{
    check_denominator_super, check_jacobi_trudi_unitary, check_unitary_zero_box, check_weyl_hook,
    check_weyl_hook_matrix, check_weyl_unitary, irreducible_even, irreducible_super, kac_character, verma_character,
    EvenWeight, SuperWeight,
};
use crate::report::{compare, VerifyReport};
use crate::sab::{
    check_cauchy, check_factorization, check_restricted_cauchy, check_skew_cauchy, check_weyl_type, jacobi_trudi,
    sab_via_definition, sab_via_lr, CosetCutoff, SabRequest, ZeroWeights,
};
use crate::schur::{hook_schur, rational_schur, skew_schur, super_schur, Letters};
use crate::series::{GradedAlphabet, LaurentSeries, Side, Universe};
use crate::tableaux::{count_ssyt, enumerate_ssyt};

#[derive(Parser, Debug)]
#[command(
    name = "superschur",
    version,
    about = "Super Schur functions and Weyl-type character formulas"
)]
pub struct Cli {
    /// Output format; `compute` defaults to text, `verify` to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Run the commands listed in a JSON file instead.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a series.
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Check an identity and print a report.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// List combinatorial objects.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
}

#[derive(Args, Debug)]
#[group(skip)]
struct Trunc {
    /// Truncation order in inverse degree.
    #[arg(long)]
    trunc: Option<i64>,
}

#[derive(Args, Debug)]
#[group(skip)]
struct Cutoff {
    /// Coset length bound, or `auto`.
    #[arg(long, default_value = "auto")]
    coset_cutoff: CosetCutoff,
}

#[derive(Args, Debug)]
#[group(skip)]
struct Sab {
    #[arg(long, allow_hyphen_values = true)]
    lambda: GeneralizedPartition,
    /// Direct alphabet, `name:deg,...`.
    #[arg(long)]
    alpha: String,
    /// Inverted alphabet, `name:deg,...`.
    #[arg(long)]
    beta: String,
    #[command(flatten)]
    trunc: Trunc,
}

impl Sab {
    fn request(&self) -> Result<SabRequest> {
        SabRequest::new(
            self.lambda.clone(),
            GradedAlphabet::parse(&self.alpha, Side::Direct)?,
            GradedAlphabet::parse(&self.beta, Side::Inverse)?,
            self.trunc.trunc,
        )
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SabPath {
    Lr,
    Def,
    Jt,
}

#[derive(Subcommand, Debug)]
enum ComputeCmd {
    /// Skew Schur polynomial in plain variables.
    Schur {
        #[arg(long)]
        shape: SkewShape,
        /// Comma-separated variable names.
        #[arg(long)]
        alphabet: String,
    },
    /// Super Schur polynomial of a graded alphabet.
    SuperSchur {
        #[arg(long)]
        shape: SkewShape,
        /// `name:deg,...`.
        #[arg(long)]
        alphabet: String,
    },
    /// Hook Schur polynomial in `x[-m..-1]`, `y[1..n]`.
    HookSchur {
        #[arg(long, visible_alias = "shape")]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Rational Schur polynomial.
    RationalSchur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        /// Comma-separated variable names.
        #[arg(long)]
        alphabet: String,
    },
    /// The two-alphabet function.
    Sab {
        #[command(flatten)]
        sab: Sab,
        #[arg(long, value_enum, default_value = "lr")]
        path: SabPath,
    },
    /// Kac module character of a `gl(m|n)` weight `a,b|c,d`.
    Kac {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Generalized Verma character of a `gl(m+n)` weight `a,b|c,d`.
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        trunc: i64,
    },
    /// Irreducible `gl(m|n)` character of a hook partition.
    HookChar {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Irreducible unitarizable `gl(m+n)` character attached to `λ`.
    UnitaryChar {
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trunc: i64,
    },
    /// `(λ^{w,+}, λ^{w,-})` for the coset labelled by `μ`.
    LambdaPm {
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        #[arg(long)]
        mu: Partition,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZeroSource {
    Shifted,
    Literal,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Weyl-type expansion of the two-alphabet function.
    Weyl {
        #[command(flatten)]
        sab: Sab,
        #[command(flatten)]
        cutoff: Cutoff,
    },
    /// Cauchy-type identity with `d` auxiliary variables.
    Cauchy {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        d: usize,
        /// Bound on each auxiliary exponent.
        #[arg(long, default_value_t = 3)]
        nz: i64,
        #[arg(long)]
        trunc: i64,
    },
    /// Factorization for `A = x[1..m]` even.
    Factorization {
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        trunc: i64,
    },
    /// Skew Cauchy identity.
    SkewCauchy {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        alpha: String,
        /// Second alphabet, uninverted.
        #[arg(long)]
        beta: String,
        #[arg(long)]
        trunc: i64,
    },
    /// Jacobi-Trudi determinant against the LR and definition paths.
    JacobiTrudi {
        #[command(flatten)]
        sab: Sab,
    },
    /// Restricted Cauchy identity for `ℓ(λ) ≤ d`.
    RestrictedCauchy {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        nx: usize,
        #[arg(long, default_value_t = 3)]
        ny: usize,
        #[arg(long)]
        trunc: i64,
        #[arg(long, value_enum, default_value = "shifted")]
        zero_weights: ZeroSource,
    },
    /// Weyl formula for hook Schur polynomials.
    WeylHook {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// A single hook partition.
        #[arg(long, conflicts_with = "max_size")]
        lambda: Option<Partition>,
        /// Every hook partition up to this size.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        trunc: i64,
        #[command(flatten)]
        cutoff: Cutoff,
    },
    /// Weyl formula for unitarizable `gl(m+n)` characters.
    WeylUnitary {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        /// Length of `λ`; shorter input is padded with zeros.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        trunc: i64,
        #[command(flatten)]
        cutoff: Cutoff,
    },
    /// Two-term sum for `0_d` against the trivial character.
    ZeroBox {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trunc: i64,
    },
    /// Super denominator identity.
    Denominator {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trunc: i64,
    },
    /// Jacobi-Trudi formula for unitarizable characters.
    JacobiTrudiUnitary {
        #[arg(long, allow_hyphen_values = true)]
        lambda: GeneralizedPartition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trunc: i64,
    },
    /// The acceptance matrix.
    All {
        #[arg(long, required = true)]
        small: bool,
    },
}

#[derive(Subcommand, Debug)]
enum EnumerateCmd {
    /// Semistandard tableaux with entries in `1..=letters`.
    Ssyt {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        letters: usize,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Minimal coset representatives.
    Cosets {
        #[arg(long)]
        max_len: usize,
        /// Restrict to `W_{I(p,q)}` and show window permutations.
        #[arg(long, value_parser = parse_window)]
        window: Option<(usize, usize)>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_window(s: &str) -> std::result::Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    Ok((
        p.trim().parse().map_err(|e| format!("{e}"))?,
        q.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn plain_universe(s: &str) -> Result<std::sync::Arc<Universe>> {
    Universe::new(
        s.split(',')
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .map(|n| (n.to_string(), Side::Direct)),
    )
}

/// `a,b|c,d` into its two blocks.
fn parse_weight(s: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    let (l, r) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("weight `{s}` needs a `|`")))?;
    let block = |b: &str| -> Result<Vec<i64>> {
        b.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse()
                    .map_err(|_| Error::Parse(format!("bad entry `{x}` in weight `{s}`")))
            })
            .collect()
    };
    Ok((block(l)?, block(r)?))
}

/// What one command produced.
enum Output {
    Series(LaurentSeries),
    Reports(Vec<VerifyReport>),
    Matrix(Vec<matrix::CriterionResult>),
    Json(Value, String),
}

fn compute(cmd: &ComputeCmd) -> Result<Output> {
    let series = match cmd {
        ComputeCmd::Schur { shape, alphabet } => skew_schur(shape, &Letters::all(&plain_universe(alphabet)?)),
        ComputeCmd::SuperSchur { shape, alphabet } => {
            let a = GradedAlphabet::parse(alphabet, Side::Direct)?;
            super_schur(shape, &a, &Universe::from_alphabets(&[&a])?)?
        }
        ComputeCmd::HookSchur { lambda, m, n } => hook_schur(lambda, *m, *n),
        ComputeCmd::RationalSchur { lambda, alphabet } => {
            rational_schur(lambda, &Letters::all(&plain_universe(alphabet)?))?
        }
        ComputeCmd::Sab { sab, path } => {
            let req = sab.request()?;
            match path {
                SabPath::Lr => sab_via_lr(&req)?,
                SabPath::Def => sab_via_definition(&req)?,
                SabPath::Jt => jacobi_trudi(&req)?,
            }
        }
        ComputeCmd::Kac { weight } => {
            let (neg, pos) = parse_weight(weight)?;
            kac_character(&SuperWeight::new(neg, pos)?)?
        }
        ComputeCmd::Verma { weight, trunc } => {
            let (neg, pos) = parse_weight(weight)?;
            verma_character(&EvenWeight::new(neg, pos)?, *trunc)?
        }
        ComputeCmd::HookChar { lambda, m, n } => irreducible_super(&SuperWeight::from_hook_partition(lambda, *m, *n)?)?,
        ComputeCmd::UnitaryChar { lambda, m, n, trunc } => irreducible_even(lambda, *m, *n, *trunc)?,
        ComputeCmd::LambdaPm { lambda, mu } => {
            let (plus, minus) = lambda_pm(&CosetElement::new(mu.clone()), lambda);
            return Ok(Output::Json(
                json!({ "plus": plus.parts(), "minus": minus.parts() }),
                format!("({plus}) ({minus})"),
            ));
        }
    };
    Ok(Output::Series(series))
}

fn pad(lambda: &GeneralizedPartition, d: Option<usize>) -> Result<GeneralizedPartition> {
    match d {
        None => Ok(lambda.clone()),
        Some(d) if d < lambda.d() => Err(Error::Invalid(format!("λ={lambda} is longer than d={d}"))),
        Some(d) => {
            let mut parts = lambda.parts().to_vec();
            parts.resize(d, 0);
            GeneralizedPartition::new(parts)
        }
    }
}

fn verify(cmd: &VerifyCmd) -> Result<Output> {
    let one = |r: VerifyReport| Ok(Output::Reports(vec![r]));
    match cmd {
        VerifyCmd::Weyl { sab, cutoff } => one(check_weyl_type(&sab.request()?, cutoff.coset_cutoff)?),
        VerifyCmd::Cauchy {
            alpha,
            beta,
            d,
            nz,
            trunc,
        } => one(check_cauchy(
            &GradedAlphabet::parse(alpha, Side::Direct)?,
            &GradedAlphabet::parse(beta, Side::Inverse)?,
            *d,
            *nz,
            *trunc,
        )?),
        VerifyCmd::Factorization { lambda, m, beta, trunc } => one(check_factorization(
            lambda,
            *m,
            &GradedAlphabet::parse(beta, Side::Inverse)?,
            *trunc,
        )?),
        VerifyCmd::SkewCauchy {
            lambda,
            mu,
            alpha,
            beta,
            trunc,
        } => one(check_skew_cauchy(
            lambda,
            mu,
            &GradedAlphabet::parse(alpha, Side::Direct)?,
            &GradedAlphabet::parse(beta, Side::Direct)?,
            *trunc,
        )?),
        VerifyCmd::JacobiTrudi { sab } => {
            let req = sab.request()?;
            let lr = compare(
                "jacobi-trudi",
                json!({"lambda": req.lambda.to_string(), "path": "lr"}),
                || Ok((jacobi_trudi(&req)?, sab_via_lr(&req)?)),
            )?;
            let def = compare(
                "jacobi-trudi",
                json!({"lambda": req.lambda.to_string(), "path": "def"}),
                || Ok((jacobi_trudi(&req)?, sab_via_definition(&req)?)),
            )?;
            Ok(Output::Reports(vec![lr, def]))
        }
        VerifyCmd::RestrictedCauchy {
            d,
            nx,
            ny,
            trunc,
            zero_weights,
        } => {
            let source = match zero_weights {
                ZeroSource::Shifted => ZeroWeights::ShiftedAction,
                ZeroSource::Literal => ZeroWeights::ClosedFormLiteral,
            };
            one(check_restricted_cauchy(*d, *nx, *ny, *trunc, source)?)
        }
        VerifyCmd::WeylHook {
            m,
            n,
            lambda,
            max_size,
            trunc,
            cutoff,
        } => match (lambda, max_size) {
            (Some(l), _) => one(check_weyl_hook(
                &SuperWeight::from_hook_partition(l, *m, *n)?,
                *trunc,
                cutoff.coset_cutoff,
            )?),
            (None, Some(k)) => one(check_weyl_hook_matrix(*m, *n, *k, *trunc, cutoff.coset_cutoff)?),
            (None, None) => Err(Error::Invalid("weyl-hook needs --lambda or --max-size".into())),
        },
        VerifyCmd::WeylUnitary {
            m,
            n,
            lambda,
            d,
            trunc,
            cutoff,
        } => one(check_weyl_unitary(
            &pad(lambda, *d)?,
            *m,
            *n,
            *trunc,
            cutoff.coset_cutoff,
        )?),
        VerifyCmd::ZeroBox { d, m, n, trunc } => one(check_unitary_zero_box(*d, *m, *n, *trunc)?),
        VerifyCmd::Denominator { m, n, trunc } => one(check_denominator_super(*m, *n, *trunc)?),
        VerifyCmd::JacobiTrudiUnitary { lambda, m, n, trunc } => {
            one(check_jacobi_trudi_unitary(lambda, *m, *n, *trunc)?)
        }
        VerifyCmd::All { .. } => Ok(Output::Matrix(matrix::run_small()?)),
    }
}

fn enumerate(cmd: &EnumerateCmd) -> Result<Output> {
    match cmd {
        EnumerateCmd::Ssyt {
            shape,
            letters,
            count,
            list,
        } => {
            if *count || !*list {
                let c = count_ssyt(shape, *letters);
                return Ok(Output::Json(json!({ "count": c }), c.to_string()));
            }
            let ts = enumerate_ssyt(shape, *letters);
            let rows: Vec<Value> = ts.iter().map(|t| json!(t.rows())).collect();
            let text = ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n\n");
            Ok(Output::Json(Value::Array(rows), text))
        }
        EnumerateCmd::Cosets { max_len, window, .. } => {
            let ws: Vec<CosetElement> = match window {
                Some((p, q)) => cosets_in_window(*p, *q)
                    .into_iter()
                    .filter(|w| w.length() <= *max_len)
                    .collect(),
                None => enumerate_cosets(*max_len),
            };
            let mut records = Vec::new();
            let mut lines = Vec::new();
            for w in &ws {
                let mut r = json!({ "label": w.label().parts(), "length": w.length(), "sign": w.sign() });
                let mut line = format!("{w}\tlength={}\tsign={}", w.length(), w.sign());
                if let Some(&(p, q)) = window.as_ref() {
                    let perm = w.realize(p, q)?;
                    r["window"] = json!(perm.images());
                    line += &format!("\twindow={perm}");
                }
                records.push(r);
                lines.push(line);
            }
            Ok(Output::Json(Value::Array(records), lines.join("\n")))
        }
    }
}

fn default_format(cmd: &Command) -> Format {
    match cmd {
        Command::Verify(_) => Format::Json,
        Command::Enumerate(EnumerateCmd::Cosets { json: true, .. }) => Format::Json,
        _ => Format::Text,
    }
}

/// Prints the outcome and returns the exit code.
fn emit(out: Output, format: Format, sink: &mut dyn Write) -> std::io::Result<i32> {
    match out {
        Output::Series(s) => {
            match format {
                Format::Text => writeln!(sink, "{}", s.to_text())?,
                Format::Json => writeln!(sink, "{}", s.to_json())?,
            }
            Ok(0)
        }
        Output::Json(v, text) => {
            match format {
                Format::Text => writeln!(sink, "{text}")?,
                Format::Json => writeln!(sink, "{v}")?,
            }
            Ok(0)
        }
        Output::Reports(rs) => {
            for r in &rs {
                match format {
                    Format::Text => writeln!(sink, "{}", r.to_text())?,
                    Format::Json => writeln!(sink, "{}", r.to_json())?,
                }
            }
            Ok(if rs.iter().all(VerifyReport::passed) { 0 } else { 1 })
        }
        Output::Matrix(cs) => {
            for c in &cs {
                match format {
                    Format::Text => writeln!(sink, "{}", c.line())?,
                    Format::Json => writeln!(sink, "{}", serde_json::to_value(c).expect("serializable"))?,
                }
            }
            Ok(if cs.iter().all(matrix::CriterionResult::passed) {
                0
            } else {
                1
            })
        }
    }
}

fn run_command(cmd: &Command, format: Option<Format>, sink: &mut dyn Write) -> i32 {
    let format = format.unwrap_or_else(|| default_format(cmd));
    let out = match cmd {
        Command::Compute(c) => compute(c),
        Command::Verify(v) => verify(v),
        Command::Enumerate(e) => enumerate(e),
    };
    match out {
        Ok(out) => emit(out, format, sink).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            2
        }),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Turns one config entry `{command, params, format}` into an argument list.
fn config_argv(entry: &Value) -> Result<Vec<String>> {
    let command = entry["command"]
        .as_str()
        .ok_or_else(|| Error::Parse("config entry without `command`".into()))?;
    let mut argv = vec!["superschur".to_string()];
    if let Some(f) = entry.get("format").and_then(Value::as_str) {
        argv.extend(["--format".to_string(), f.to_string()]);
    }
    argv.extend(command.split_whitespace().map(String::from));
    if let Some(params) = entry.get("params") {
        let obj = params
            .as_object()
            .ok_or_else(|| Error::Parse("`params` must be an object".into()))?;
        for (k, v) in obj {
            let flag = format!("--{}", k.replace('_', "-"));
            match v {
                Value::Bool(true) => argv.push(flag),
                Value::Bool(false) | Value::Null => {}
                Value::String(s) => argv.extend([flag, s.clone()]),
                other => argv.extend([flag, other.to_string()]),
            }
        }
    }
    Ok(argv)
}

fn run_config(path: &PathBuf, format: Option<Format>, sink: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let entries = match serde_json::from_str::<Value>(&text) {
        Ok(Value::Array(v)) => v,
        Ok(v @ Value::Object(_)) => vec![v],
        Ok(_) => {
            eprintln!("error: config must be an object or an array of objects");
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut code = 0;
    for entry in &entries {
        let argv = match config_argv(entry) {
            Ok(a) => a,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        let cli = match Cli::try_parse_from(&argv) {
            Ok(c) => c,
            Err(e) => {
                let _ = e.print();
                return 2;
            }
        };
        let Some(cmd) = cli.command else {
            eprintln!("error: config entry names no subcommand");
            return 2;
        };
        code = code.max(run_command(&cmd, cli.format.or(format), sink));
    }
    code
}

/// Parses `args` and runs them, writing results to `sink`.
pub fn run<I, T>(args: I, sink: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match (&cli.config, &cli.command) {
        (Some(path), _) => run_config(path, cli.format, sink),
        (None, Some(cmd)) => run_command(cmd, cli.format, sink),
        (None, None) => {
            eprintln!("error: no command given; try --help");
            2
        }
    }
}

/// Sizes the global thread pool from `HW_THREADS` when set.
pub fn init_threads() {
    if let Some(n) = std::env::var("HW_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
