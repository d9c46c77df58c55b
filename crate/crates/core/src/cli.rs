//! Command-line front end.
//!
//! Collections are written `d:[a_0,a_1,...,a_k]`, e.g. `2:[3,2,0]`. Trailing
//! zeros are accepted on input and never printed. Results go to stdout,
//! diagnostics to stderr. Exit status is 0 on success, 1 for an unequal `eq
//! --status`, 2 for usage or parse errors and 3 for domain errors.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use thiserror::Error;

use crate::collection::DCollection;
use crate::error::Error;
use crate::oracle::Oracle;
use crate::span;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEQUAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// A malformed collection literal. `position` is the 0-based character offset
/// of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid collection literal at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    len: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let chars: Vec<_> = src.chars().collect();
        let len = chars.len();
        Self { chars, pos: 0, len }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(ParseError::new(
                self.len,
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    /// An optionally signed run of decimal digits.
    fn integer(&mut self) -> Result<(usize, BigInt), ParseError> {
        let start = self.pos;
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.pos += 1;
        }
        if text.is_empty() || text == "-" {
            return Err(match self.peek() {
                Some(c) => ParseError::new(self.pos, format!("expected an integer, found '{c}'")),
                None => ParseError::new(self.len, "expected an integer, found end of input"),
            });
        }
        let value = text.parse().expect("digits parse as an integer");
        Ok((start, value))
    }
}

impl FromStr for DCollection {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let (base_at, base) = cur.integer()?;
        let base = u64::try_from(&base)
            .ok()
            .filter(|&b| b >= 2)
            .ok_or_else(|| {
                ParseError::new(base_at, format!("base must be an integer >= 2, got {base}"))
            })?;
        cur.expect(':')?;
        cur.expect('[')?;
        cur.skip_ws();
        let mut mults = Vec::new();
        if cur.peek() == Some(']') {
            cur.pos += 1;
        } else {
            loop {
                cur.skip_ws();
                let (at, m) = cur.integer()?;
                if m < BigInt::ZERO {
                    return Err(ParseError::new(
                        at,
                        format!("multiplicity must be nonnegative, got {m}"),
                    ));
                }
                mults.push(m);
                cur.skip_ws();
                match cur.peek() {
                    Some(',') => cur.pos += 1,
                    Some(']') => {
                        cur.pos += 1;
                        break;
                    }
                    Some(c) => {
                        return Err(ParseError::new(
                            cur.pos,
                            format!("expected ',' or ']', found '{c}'"),
                        ))
                    }
                    None => {
                        return Err(ParseError::new(
                            cur.len,
                            "expected ',' or ']', found end of input",
                        ))
                    }
                }
            }
        }
        if let Some(c) = cur.peek() {
            return Err(ParseError::new(
                cur.pos,
                format!("unexpected trailing '{c}'"),
            ));
        }
        Ok(DCollection::new(base, mults).expect("base and multiplicities already validated"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dspan",
    version,
    about = "Subset sums of multisets of powers of a base"
)]
struct Cli {
    /// Emit a single-line JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pair {
    left: DCollection,
    right: DCollection,
    /// Exit with status 1 when the spans differ.
    #[arg(long)]
    status: bool,
}

#[derive(Debug, Args)]
struct Membership {
    collection: DCollection,
    n: BigUint,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form.
    Normalize { collection: DCollection },
    /// Decide whether two collections have the same span.
    Eq(Pair),
    /// Decide whether a value is a subset sum.
    Member(Membership),
    /// Smallest value that is not a subset sum.
    Mex { collection: DCollection },
    /// Number of distinct subset sums.
    Size { collection: DCollection },
    /// Irreducible blocks of a normal collection.
    Decompose { collection: DCollection },
    /// Subset sums in increasing order.
    Enumerate {
        collection: DCollection,
        #[arg(long)]
        limit: usize,
    },
    /// Whether an exchange at the given place keeps the span.
    ExchangeCheck {
        collection: DCollection,
        index: usize,
    },
    /// Brute-force equivalents, for sums up to one million.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Span { collection: DCollection },
    Eq(Pair),
    Member(Membership),
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn new(command: &'static str, text: impl Into<String>, json: Value) -> Self {
        Self {
            command,
            text: text.into(),
            json,
            code: EXIT_OK,
        }
    }
}

fn number(n: impl ToString) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("decimal integer"))
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut out, line| {
        let _ = writeln!(out, "{line}");
        out
    })
}

fn boolean(command: &'static str, value: bool) -> Report {
    Report::new(command, format!("{value}\n"), Value::Bool(value))
}

fn equality(command: &'static str, pair: &Pair, equal: bool) -> Report {
    let mut report = boolean(command, equal);
    if pair.status && !equal {
        report.code = EXIT_UNEQUAL;
    }
    report
}

fn execute(command: &Command) -> Result<Report, Error> {
    Ok(match command {
        Command::Normalize { collection } => {
            let n = collection.normalize().to_string();
            Report::new("normalize", format!("{n}\n"), Value::String(n))
        }
        Command::Eq(pair) => equality("eq", pair, span::span_equal(&pair.left, &pair.right)?),
        Command::Member(m) => boolean("member", span::contains(&m.collection, &m.n)),
        Command::Mex { collection } => {
            let v = span::mex(collection);
            Report::new("mex", format!("{v}\n"), number(v))
        }
        Command::Size { collection } => {
            let v = span::span_size(collection);
            Report::new("size", format!("{v}\n"), number(v))
        }
        Command::Decompose { collection } => {
            let dec = span::decompose(collection)?;
            let text = lines(dec.blocks().iter().map(|b| {
                format!(
                    "shift={} top={} sum={} len={}",
                    b.shift(),
                    b.top(),
                    b.block_sum(),
                    b.length()
                )
            }));
            let blocks = dec
                .blocks()
                .iter()
                .map(|b| {
                    json!({
                        "shift": b.shift(),
                        "top": b.top(),
                        "sum": number(b.block_sum()),
                        "len": number(b.length()),
                    })
                })
                .collect();
            Report::new("decompose", text, Value::Array(blocks))
        }
        Command::Enumerate { collection, limit } => {
            let elements = span::enumerate_span(collection, *limit)?;
            Report::new(
                "enumerate",
                lines(elements.iter().map(ToString::to_string)),
                elements.iter().map(number).collect(),
            )
        }
        Command::ExchangeCheck { collection, index } => {
            let verdict = if span::exchange_preserves_span(collection, *index)? {
                "preserves"
            } else {
                "changes"
            };
            Report::new(
                "exchange-check",
                format!("{verdict}\n"),
                Value::String(verdict.into()),
            )
        }
        Command::Oracle(OracleCommand::Span { collection }) => {
            let set = Oracle::default().span(collection)?;
            Report::new(
                "oracle span",
                lines(set.elements().iter().map(ToString::to_string)),
                set.elements().iter().map(|&e| number(e)).collect(),
            )
        }
        Command::Oracle(OracleCommand::Eq(pair)) => {
            crate::collection::same_base(&pair.left, &pair.right)?;
            equality(
                "oracle eq",
                pair,
                Oracle::default().equal(&pair.left, &pair.right)?,
            )
        }
        Command::Oracle(OracleCommand::Member(m)) => boolean(
            "oracle member",
            Oracle::default().contains(&m.collection, &m.n)?,
        ),
    })
}

fn error_code(err: &Error) -> i32 {
    match err {
        Error::ZeroLimit | Error::BaseMismatch { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json {
                let obj = json!({ "command": report.command, "result": report.json });
                format!("{obj}\n")
            } else {
                report.text
            };
            Output {
                code: report.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(err) => Output {
            code: error_code(&err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}
