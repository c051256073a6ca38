//! Command-line front end: argument definitions, command execution and
//! TEXT/JSON rendering. `main.rs` only parses and prints.

pub mod expr;

use adic_core::{
    associativity_witness, classify_sqrt, from_rational, koenig_search, root_exists, root_stream,
    to_rational, zero_divisor_pair, Base, CarryRule, DigitStream, Fraction, RootExistence,
    SqrtVerdict,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] adic_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "adic", version, about = "Exact arithmetic on left-infinite digit strings")]
pub struct Cli {
    /// Number base (2..=36)
    #[arg(long, global = true, default_value_t = 10)]
    pub base: u32,
    /// Digits shown for infinite expansions
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub precision: u32,
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Depth limit for exhaustive searches
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    A,
    B,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an infix expression, e.g. "19 + 9'83"
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also print the value as a reduced fraction
        #[arg(long)]
        fraction: bool,
    },
    /// Convert between "m/n" and quote notation
    Convert {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Classify and expand the k-th root of q
    Root {
        q: u64,
        #[arg(default_value_t = 2)]
        k: u32,
        /// Which root branch to expand
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// Build the zero-divisor pair to depth n
    Zerodiv { n: usize },
    /// Show the non-associativity witness for a carry rule
    Transfinite {
        #[arg(long, value_enum, default_value = "a")]
        rule: RuleArg,
    },
    /// Enumerate all x mod 10^depth with x^k = q
    Search {
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
        k: u32,
        #[arg(long)]
        depth: usize,
    },
}

/// Validated global options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliConfig {
    pub base: Base,
    pub precision: usize,
    pub json: bool,
    pub bound: usize,
}

impl CliConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        Ok(CliConfig {
            base: Base::new(cli.base)?,
            precision: cli.precision as usize,
            json: cli.json,
            bound: cli.bound as usize,
        })
    }

    fn require_decimal(&self, command: &str) -> Result<(), CliError> {
        if self.base != Base::TEN {
            return Err(CliError::Usage(format!("{command} works in base 10 only")));
        }
        Ok(())
    }
}

/// Outcome of one command. `text` holds the human-readable lines; the
/// other fields form the JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string(self).expect("report serializes")
        } else {
            self.text.join("\n")
        }
    }
}

/// Last `n` digits of a stream, as `...ddd`.
fn tail_digits(s: &mut DigitStream, n: usize) -> Result<String, CliError> {
    let ds = s.digits(n)?;
    let base = s.base();
    Ok(std::iter::once("...".to_string())
        .chain(ds.iter().map(|&d| base.digit_char(d).to_string()))
        .collect())
}

fn padded(x: &BigUint, n: usize) -> String {
    format!("...{:0>n$}", x.to_str_radix(10))
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let cfg = CliConfig::from_cli(cli)?;
    match &cli.command {
        Command::Eval { expr, fraction } => cmd_eval(&cfg, expr, *fraction),
        Command::Convert { value } => cmd_convert(&cfg, value),
        Command::Root { q, k, branch } => cmd_root(&cfg, *q, *k, *branch),
        Command::Zerodiv { n } => cmd_zerodiv(&cfg, *n),
        Command::Transfinite { rule } => cmd_transfinite(&cfg, *rule),
        Command::Search { q, k, depth } => cmd_search(&cfg, q, *k, *depth),
    }
}

pub fn cmd_eval(cfg: &CliConfig, src: &str, fraction: bool) -> Result<Report, CliError> {
    let value = expr::evaluate(src, cfg.base)?;
    let mut text = vec![value.to_string()];
    let mut result = json!({ "value": value.to_string() });
    if fraction {
        let f = to_rational(&value).to_string();
        text.push(format!("= {f}"));
        result["fraction"] = json!(f);
    }
    Ok(Report {
        command: "eval",
        inputs: json!({ "expr": src, "base": cfg.base.get() }),
        result,
        diagnostics: Vec::new(),
        text,
    })
}

pub fn cmd_convert(cfg: &CliConfig, arg: &str) -> Result<Report, CliError> {
    let mut diagnostics = Vec::new();
    let (kind, value) = if arg.contains('\'') {
        let x = adic_core::QuoteNumber::parse(arg, cfg.base)?;
        ("fraction", to_rational(&x).to_string())
    } else {
        let f: Fraction = arg.parse()?;
        let x = from_rational(&f, cfg.base);
        if !x.is_integral() {
            diagnostics.push(format!("denominator shares a factor with base {}", cfg.base));
        }
        ("quote", x.to_string())
    };
    Ok(Report {
        command: "convert",
        inputs: json!({ "value": arg, "base": cfg.base.get() }),
        result: json!({ "kind": kind, "value": value }),
        diagnostics,
        text: vec![value],
    })
}

pub fn cmd_root(cfg: &CliConfig, q: u64, k: u32, branch: usize) -> Result<Report, CliError> {
    cfg.require_decimal("root")?;
    if q == 0 {
        return Err(CliError::Usage("q must be at least 1".into()));
    }
    if k < 2 {
        return Err(CliError::Usage("k must be at least 2".into()));
    }
    let mut result = json!({ "q": q, "k": k });
    let mut text = Vec::new();
    let exists = if k == 2 {
        let class = classify_sqrt(q);
        result["verdict"] = json!(class.verdict.tag());
        text.push(format!("verdict: {}", class.verdict));
        if let Some(reason) = class.reason {
            result["reason"] = json!(reason.tag());
            text.push(format!("reason: {reason}"));
        }
        if let Some(d) = class.decomposition {
            let shown = format!("4^{} * 25^{} * {}", d.twos, d.fives, d.unit);
            text.push(format!("decomposition: {shown}"));
            result["decomposition"] = json!({ "twos": d.twos, "fives": d.fives, "unit": d.unit });
        }
        if class.verdict == SqrtVerdict::PerfectSquare {
            let r = num_integer::Roots::sqrt(&q);
            text.push(format!("root: {r}"));
            result["root"] = json!(r);
        }
        class.verdict != SqrtVerdict::NotRepresentable
    } else {
        let e = root_exists(q, k)?;
        let verdict = match e {
            RootExistence::Exists(_) => "EXISTS",
            RootExistence::DoesNotExist(_) => "NOT_REPRESENTABLE",
            RootExistence::Undecided => "UNDECIDED",
        };
        result["verdict"] = json!(verdict);
        text.push(format!("verdict: {verdict}"));
        if e != RootExistence::Undecided {
            result["reason"] = json!(e.tag());
            text.push(format!("reason: {}", e.tag()));
        }
        e.exists() == Some(true)
    };
    if exists {
        let branches = adic_core::root_branches(q, k)?.len();
        let mut s = root_stream(q, k, branch)?;
        let digits = tail_digits(&mut s, cfg.precision)?;
        text.push(format!("branch: {branch} of {branches}"));
        text.push(format!("digits: {digits}"));
        result["branch"] = json!(branch);
        result["branches"] = json!(branches);
        result["digits"] = json!(digits);
    }
    Ok(Report {
        command: "root",
        inputs: json!({ "q": q, "k": k, "branch": branch, "precision": cfg.precision }),
        result,
        diagnostics: Vec::new(),
        text,
    })
}

pub fn cmd_zerodiv(cfg: &CliConfig, n: usize) -> Result<Report, CliError> {
    cfg.require_decimal("zerodiv")?;
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let (a, b) = zero_divisor_pair(n)?;
    let product = (&a * &b) % Base::TEN.pow(n);
    let (sa, sb) = (padded(&a, n), padded(&b, n));
    Ok(Report {
        command: "zerodiv",
        inputs: json!({ "n": n }),
        result: json!({
            "a": sa,
            "b": sb,
            "product_mod": product.to_string(),
        }),
        diagnostics: Vec::new(),
        text: vec![
            format!("a = {sa}"),
            format!("b = {sb}"),
            format!("a * b mod 10^{n} = {product}"),
        ],
    })
}

pub fn cmd_transfinite(cfg: &CliConfig, rule: RuleArg) -> Result<Report, CliError> {
    cfg.require_decimal("transfinite")?;
    let rule = match rule {
        RuleArg::A => CarryRule::RuleA,
        RuleArg::B => CarryRule::RuleB,
    };
    let w = associativity_witness(rule);
    let verdict = if w.equal { "ASSOCIATIVE" } else { "NOT ASSOCIATIVE" };
    let show = |t: &adic_core::TransfiniteNumber| json!({ "quote": t.to_string(), "scheme": t.scheme(2) });
    let text = vec![
        format!("rule: {rule}"),
        format!("a = {}", w.a.scheme(3)),
        format!("b = {}", w.b.scheme(3)),
        format!("c = {}", w.c.scheme(3)),
        format!("(a + b) + c = {}  [{}]", w.left.scheme(2), w.left),
        format!("a + (b + c) = {}  [{}]", w.right.scheme(2), w.right),
        verdict.to_string(),
    ];
    Ok(Report {
        command: "transfinite",
        inputs: json!({ "rule": rule.tag() }),
        result: json!({
            "rule": rule.tag(),
            "a": show(&w.a),
            "b": show(&w.b),
            "c": show(&w.c),
            "left": show(&w.left),
            "right": show(&w.right),
            "associative": w.equal,
        }),
        diagnostics: Vec::new(),
        text,
    })
}

pub fn cmd_search(cfg: &CliConfig, q: &BigInt, k: u32, depth: usize) -> Result<Report, CliError> {
    cfg.require_decimal("search")?;
    if k < 1 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let sols = koenig_search(q, k, depth, cfg.bound)?;
    let shown: Vec<String> = sols.iter().map(|x| padded(x, depth)).collect();
    let mut text = vec![format!("{} solutions of x^{k} = {q} modulo 10^{depth}", sols.len())];
    text.extend(shown.iter().cloned());
    Ok(Report {
        command: "search",
        inputs: json!({ "q": q.to_string(), "k": k, "depth": depth, "bound": cfg.bound }),
        result: json!({ "count": sols.len(), "solutions": shown }),
        diagnostics: Vec::new(),
        text,
    })
}
