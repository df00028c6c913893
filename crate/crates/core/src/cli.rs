//! Command-line front end.
//!
//! Every numeric value leaves as a decimal string so that arbitrarily large
//! results survive any JSON parser. JSON objects are rendered with sorted
//! keys, which makes output byte-stable across runs.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::ap_analysis::{
    ap_scan_limited, exhaustive_ap_search, longest_palindromic_ap, APSpec, APWitness, ScanOutcome,
    ScanReport,
};
use crate::digits::{digit_count, pow10, Natural};
use crate::error::Error;
use crate::gp_analysis::{
    alpha_ratio, count_palindromes_divisible_with, gp_scan, integrality_failure_index,
    min_index_for_digits, subsequence_exponent, DensityConfig, GPSpec, Rational, DEFAULT_GP_CAP,
    DEFAULT_MAX_ENUM_LEN,
};
use crate::oracle::{oracle_digit_count, oracle_is_palindrome, Oracle};
use crate::palindrome_seq::{
    count_with_digits, gaps_in_range, next_palindrome, prev_palindrome, rank, unrank,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP_EXCEEDED: i32 = 2;
pub const EXIT_THEORY_VIOLATION: i32 = 3;

pub const MAX_ENUM_ENV: &str = "PALINSEQ_MAX_ENUM_L";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "palinseq",
    version,
    about = "Palindromes in arithmetic and geometric progressions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Maximum number of terms for progression scans.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    /// Also run the naive reference implementation and fail on mismatch.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Reserved for randomized search order in `ap search`; results are
    /// sorted, so it does not change output.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest palindrome above N.
    Next {
        #[arg(value_parser = parse_natural)]
        n: Natural,
    },
    /// Largest palindrome below N.
    Prev {
        #[arg(value_parser = parse_natural)]
        n: Natural,
    },
    /// 1-based index of a palindrome.
    Rank {
        #[arg(value_parser = parse_natural)]
        p: Natural,
    },
    /// The I-th palindrome.
    Unrank {
        #[arg(value_parser = parse_natural)]
        i: Natural,
    },
    /// Number of palindromes with L digits.
    CountDigits {
        #[arg(value_name = "L")]
        len: usize,
    },
    /// Gaps from each palindrome in [LO, HI) to its successor.
    Gaps {
        #[arg(value_parser = parse_natural)]
        lo: Natural,
        #[arg(value_parser = parse_natural)]
        hi: Natural,
    },
    /// Arithmetic progressions.
    #[command(subcommand)]
    Ap(ApCommand),
    /// Geometric progressions.
    #[command(subcommand)]
    Gp(GpCommand),
    /// Count L-digit palindromes divisible by Q.
    Density {
        #[arg(value_name = "L")]
        len: usize,
        #[arg(value_parser = parse_natural)]
        q: Natural,
    },
}

#[derive(Debug, Subcommand)]
pub enum ApCommand {
    /// First non-palindromic term of the AP with first term A and difference D.
    Scan {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        d: Natural,
    },
    /// Longest all-palindrome AP from A to L.
    Longest {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        l: Natural,
    },
    /// All maximal all-palindrome APs with terms up to MAX.
    Search {
        #[arg(value_parser = parse_natural)]
        max: Natural,
        minlen: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GpCommand {
    /// First non-palindromic term of the GP with first term A and ratio R.
    Scan {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        r: Natural,
        /// Require A and R coprime to 2, 3, 5 and 11.
        #[arg(long)]
        check_gcd: bool,
    },
    /// First index at which A * (P/Q)^s stops being an integer.
    Ratfail {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_name = "P/Q")]
        ratio: Rational,
    },
    /// Smallest index whose term has at least LAMBDA times as many digits as A.
    Mindex {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        r: Natural,
        lambda: u64,
    },
    /// Decide alpha < 1 by exact integer comparison.
    Alpha {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        r: Natural,
    },
    /// Smallest B with R^B having more digits than A.
    Subexp {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        r: Natural,
    },
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a non-negative decimal integer"));
    }
    s.parse::<Natural>().map_err(|e| e.to_string())
}

/// Settings that come from the environment rather than argv.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub max_enum_len: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_enum_len: DEFAULT_MAX_ENUM_LEN,
        }
    }
}

impl RunConfig {
    pub fn from_env() -> Self {
        let max_enum_len = std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ENUM_LEN);
        RunConfig { max_enum_len }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Field {
    Num(String),
    Flag(bool),
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Num(s) => s.clone(),
            Field::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Num(s) => Value::String(s.clone()),
            Field::Flag(b) => Value::Bool(*b),
        }
    }
}

fn num(v: impl ToString) -> Field {
    Field::Num(v.to_string())
}

type Record = Vec<(&'static str, Field)>;

/// What a subcommand produced, before formatting.
#[derive(Debug, Clone, PartialEq)]
enum Output {
    Single(Record),
    Table {
        summary: Record,
        columns: &'static [&'static str],
        rows: Vec<Vec<Field>>,
    },
}

struct Outcome {
    output: Output,
    exit_code: i32,
}

impl Outcome {
    fn ok(output: Output) -> Self {
        Outcome {
            output,
            exit_code: EXIT_OK,
        }
    }
}

fn json_object(record: &Record) -> Map<String, Value> {
    record
        .iter()
        .map(|(k, v)| (k.to_string(), v.json()))
        .collect()
}

fn render(output: &Output, format: OutputFormat) -> String {
    match (format, output) {
        (OutputFormat::Json, Output::Single(record)) => {
            format!("{}\n", Value::Object(json_object(record)))
        }
        (
            OutputFormat::Json,
            Output::Table {
                summary,
                columns,
                rows,
            },
        ) => {
            let mut obj = json_object(summary);
            let records = rows
                .iter()
                .map(|row| {
                    let map: Map<String, Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(c, f)| (c.to_string(), f.json()))
                        .collect();
                    Value::Object(map)
                })
                .collect();
            obj.insert("records".into(), Value::Array(records));
            format!("{}\n", Value::Object(obj))
        }
        (OutputFormat::Csv, Output::Single(record)) => {
            let header: Vec<&str> = record.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = record.iter().map(|(_, v)| v.text()).collect();
            csv_lines(&header, std::iter::once(row))
        }
        (OutputFormat::Csv, Output::Table { columns, rows, .. }) => csv_lines(
            columns,
            rows.iter().map(|r| r.iter().map(Field::text).collect()),
        ),
        (OutputFormat::Text, Output::Single(record)) => text_record(record),
        (
            OutputFormat::Text,
            Output::Table {
                summary,
                columns,
                rows,
            },
        ) => {
            let mut s = text_record(summary);
            s.push_str(&columns.join(" "));
            s.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(Field::text).collect();
                s.push_str(&cells.join(" "));
                s.push('\n');
            }
            s
        }
    }
}

fn text_record(record: &Record) -> String {
    record
        .iter()
        .map(|(k, v)| format!("{k}: {}\n", v.text()))
        .collect()
}

fn csv_lines(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for row in rows {
        w.write_record(&row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::TheoryViolation(_) => EXIT_THEORY_VIOLATION,
        _ => EXIT_USAGE,
    }
}

fn mismatch(what: &str, fast: impl ToString, slow: impl ToString) -> Error {
    Error::TheoryViolation(format!(
        "oracle mismatch in {what}: fast path gave {}, oracle gave {}",
        fast.to_string(),
        slow.to_string()
    ))
}

fn expect_same<T: PartialEq + ToString>(what: &str, fast: T, slow: T) -> Result<(), Error> {
    if fast == slow {
        Ok(())
    } else {
        Err(mismatch(what, fast, slow))
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
///
/// Returns the process exit code: 0 success, 1 usage or precondition error,
/// 2 scan cap exceeded, 3 theory violation or oracle mismatch.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, RunConfig::from_env(), out, err)
}

pub fn run_with<I, T>(args: I, config: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, config) {
        Ok(outcome) => {
            let _ = out.write_all(render(&outcome.output, cli.format).as_bytes());
            if cli.oracle {
                let _ = writeln!(err, "oracle: agree");
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(cli: &Cli, config: RunConfig) -> Result<Outcome, Error> {
    let oracle = cli.oracle.then(Oracle::default);
    match &cli.command {
        Command::Next { n } => {
            let next = next_palindrome(n);
            if let Some(o) = &oracle {
                expect_same("next", next.value().clone(), o.next_palindrome(n)?)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("input", num(n)),
                ("next", num(next)),
            ])))
        }
        Command::Prev { n } => {
            let prev = prev_palindrome(n)?;
            if let Some(o) = &oracle {
                expect_same("prev", prev.value().clone(), o.prev_palindrome(n)?)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("input", num(n)),
                ("prev", num(prev)),
            ])))
        }
        Command::Rank { p } => {
            let r = rank(p)?;
            if let Some(o) = &oracle {
                expect_same("rank", r.clone(), o.rank(p)?)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("input", num(p)),
                ("rank", num(r)),
            ])))
        }
        Command::Unrank { i } => {
            let p = unrank(i)?;
            if let Some(o) = &oracle {
                if p.value() > o.bound() {
                    return Err(Error::OracleBound(o.bound().clone()));
                }
                expect_same("unrank", p.value().clone(), o.unrank(i)?)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("input", num(i)),
                ("palindrome", num(p)),
            ])))
        }
        Command::CountDigits { len } => {
            let count = count_with_digits(*len)?;
            if let Some(o) = &oracle {
                let lo = pow10(len - 1);
                let hi = pow10(*len) - 1u32;
                let slow = Natural::from(o.enumerate(&lo, &hi)?.len());
                expect_same("count-digits", count.clone(), slow)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("digits", num(len)),
                ("count", num(count)),
            ])))
        }
        Command::Gaps { lo, hi } => {
            let records = gaps_in_range(lo, hi)?;
            if let Some(o) = &oracle {
                check_gaps(o, lo, hi, &records)?;
            }
            let rows = records
                .iter()
                .map(|g| {
                    vec![
                        num(&g.lower),
                        num(&g.upper),
                        num(&g.gap),
                        num(g.digit_length_lower),
                    ]
                })
                .collect::<Vec<_>>();
            Ok(Outcome::ok(Output::Table {
                summary: vec![("lo", num(lo)), ("hi", num(hi)), ("count", num(rows.len()))],
                columns: &["lower", "upper", "gap", "digits"],
                rows,
            }))
        }
        Command::Ap(cmd) => execute_ap(cli, cmd, oracle.as_ref()),
        Command::Gp(cmd) => execute_gp(cli, cmd, oracle.as_ref()),
        Command::Density { len, q } => {
            let cfg = DensityConfig {
                max_digit_length: config.max_enum_len,
            };
            let c = count_palindromes_divisible_with(*len, q, cfg)?;
            if let Some(o) = &oracle {
                let lo = pow10(len - 1);
                let hi = pow10(*len) - 1u32;
                let slow = o
                    .enumerate(&lo, &hi)?
                    .into_iter()
                    .filter(|p| (p % q).is_zero())
                    .count();
                expect_same("density", c.exact_count.clone(), Natural::from(slow))?;
            }
            let dev = c.relative_deviation();
            Ok(Outcome::ok(Output::Single(vec![
                ("digit_length", num(len)),
                ("modulus", num(q)),
                ("palindromes", num(count_with_digits(*len)?)),
                ("exact_count", num(&c.exact_count)),
                ("main_term", num(ratio_string(&c.main_term))),
                ("deviation", num(ratio_string(&dev))),
                (
                    "deviation_decimal",
                    num(format!("{:.6}", c.relative_deviation_f64())),
                ),
            ])))
        }
    }
}

fn ratio_string(r: &Ratio<Natural>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn check_gaps(
    o: &Oracle,
    lo: &Natural,
    hi: &Natural,
    records: &[crate::palindrome_seq::GapRecord],
) -> Result<(), Error> {
    let start = if lo.is_zero() {
        Natural::one()
    } else {
        lo.clone()
    };
    let end = match records.last() {
        Some(g) => g.upper.value().clone(),
        None => hi - 1u32,
    };
    let all = o.enumerate(&start, &end)?;
    let lowers: Vec<Natural> = all.iter().filter(|p| *p < hi).cloned().collect();
    let fast: Vec<Natural> = records.iter().map(|g| g.lower.value().clone()).collect();
    if fast != lowers {
        return Err(mismatch("gaps", fast.len(), lowers.len()));
    }
    for (g, pair) in records.iter().zip(all.windows(2)) {
        expect_same("gaps", g.upper.value().clone(), pair[1].clone())?;
    }
    Ok(())
}

fn scan_fields(report: &ScanReport) -> Record {
    vec![
        ("outcome", num("non_palindrome")),
        ("failing_index", num(&report.failing_index)),
        ("failing_term", num(&report.failing_term)),
        ("terms_checked", num(&report.terms_checked)),
        ("cap", num(&report.cap_used)),
    ]
}

fn scan_outcome(mut head: Record, outcome: &ScanOutcome) -> Outcome {
    match outcome {
        ScanOutcome::Failed(report) => {
            head.extend(scan_fields(report));
            Outcome::ok(Output::Single(head))
        }
        ScanOutcome::CapExceeded { terms_checked, cap } => {
            head.extend([
                ("outcome", num("cap_exceeded")),
                ("terms_checked", num(terms_checked)),
                ("cap", num(cap)),
            ]);
            Outcome {
                output: Output::Single(head),
                exit_code: EXIT_CAP_EXCEEDED,
            }
        }
    }
}

/// Re-checks a scan with the naive predicate, given the term at each index.
fn check_scan(outcome: &ScanOutcome, term: impl Fn(&Natural) -> Natural) -> Result<(), Error> {
    let (palindromic, failing) = match outcome {
        ScanOutcome::Failed(r) => (&r.failing_index, Some(&r.failing_term)),
        ScanOutcome::CapExceeded { terms_checked, .. } => (terms_checked, None),
    };
    let mut i = Natural::zero();
    while &i < palindromic {
        let t = term(&i);
        if !oracle_is_palindrome(&t) {
            return Err(mismatch(
                "scan",
                "palindrome",
                format!("{t} is not a palindrome"),
            ));
        }
        i += 1u32;
    }
    if let Some(f) = failing {
        if term(&i) != *f || oracle_is_palindrome(f) {
            return Err(mismatch("scan", f, "a palindrome or different term"));
        }
    }
    Ok(())
}

fn witness_row(w: &APWitness) -> Vec<Field> {
    vec![
        num(&w.first),
        num(&w.difference),
        num(w.length),
        num(&w.last),
    ]
}

fn execute_ap(cli: &Cli, cmd: &ApCommand, oracle: Option<&Oracle>) -> Result<Outcome, Error> {
    match cmd {
        ApCommand::Scan { a, d } => {
            let ap = APSpec::new(a.clone(), d.clone())?;
            let limit = match cli.cap {
                Some(c) => Natural::from(c),
                None => crate::ap_analysis::termination_cap(&ap),
            };
            let outcome = ap_scan_limited(&ap, &limit)?;
            if oracle.is_some() {
                check_scan(&outcome, |i| ap.term(i))?;
            }
            Ok(scan_outcome(
                vec![("first", num(a)), ("difference", num(d))],
                &outcome,
            ))
        }
        ApCommand::Longest { a, l } => {
            let w = longest_palindromic_ap(a, l)?;
            if let Some(o) = oracle {
                let span = l - a;
                if &span > o.bound() {
                    return Err(Error::OracleBound(o.bound().clone()));
                }
                let slow = brute_force_longest(a, l);
                expect_same("ap longest", w.difference.clone(), slow)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("first", num(&w.first)),
                ("last", num(&w.last)),
                ("difference", num(&w.difference)),
                ("length", num(w.length)),
            ])))
        }
        ApCommand::Search { max, minlen } => {
            let found = exhaustive_ap_search(max, *minlen)?;
            if let Some(o) = oracle {
                if &(max * max) > o.bound() {
                    return Err(Error::OracleBound(o.bound().clone()));
                }
                let slow = brute_force_search(o, max, *minlen)?;
                let fast: Vec<(Natural, Natural, u64)> = found
                    .iter()
                    .map(|w| (w.first.clone(), w.difference.clone(), w.length))
                    .collect();
                if fast != slow {
                    return Err(mismatch("ap search", fast.len(), slow.len()));
                }
            }
            Ok(Outcome::ok(Output::Table {
                summary: vec![
                    ("max", num(max)),
                    ("min_length", num(minlen)),
                    ("count", num(found.len())),
                ],
                columns: &["first", "difference", "length", "last"],
                rows: found.iter().map(witness_row).collect(),
            }))
        }
    }
}

/// Smallest difference (any, not only divisors) walking from `a` to exactly
/// `l` through palindromes only.
fn brute_force_longest(a: &Natural, l: &Natural) -> Natural {
    let span = l - a;
    let mut d = Natural::one();
    while d <= span {
        let mut t = a + &d;
        while &t < l && oracle_is_palindrome(&t) {
            t += &d;
        }
        if &t == l {
            return d;
        }
        d += 1u32;
    }
    span
}

fn brute_force_search(
    o: &Oracle,
    max: &Natural,
    minlen: u64,
) -> Result<Vec<(Natural, Natural, u64)>, Error> {
    let max = max
        .to_u64()
        .ok_or_else(|| Error::OracleBound(o.bound().clone()))?;
    let mut out = Vec::new();
    for a in 1..=max {
        if !oracle_is_palindrome(&Natural::from(a)) {
            continue;
        }
        for d in 1..=max {
            if a > d && oracle_is_palindrome(&Natural::from(a - d)) {
                continue;
            }
            let mut len = 0u64;
            let mut t = a;
            while t <= max && oracle_is_palindrome(&Natural::from(t)) {
                len += 1;
                t += d;
            }
            if len >= minlen {
                out.push((Natural::from(a), Natural::from(d), len));
            }
        }
    }
    Ok(out)
}

fn execute_gp(cli: &Cli, cmd: &GpCommand, oracle: Option<&Oracle>) -> Result<Outcome, Error> {
    match cmd {
        GpCommand::Scan { a, r, check_gcd } => {
            let gp = GPSpec::new(a.clone(), r.clone())?;
            let cap = cli.cap.unwrap_or(DEFAULT_GP_CAP);
            let outcome = gp_scan(&gp, *check_gcd, cap)?;
            if oracle.is_some() {
                check_scan(&outcome, |i| {
                    gp.term(i.to_u32().expect("scan index within u32"))
                })?;
            }
            Ok(scan_outcome(
                vec![
                    ("first", num(a)),
                    ("ratio", num(r)),
                    ("check_gcd", Field::Flag(*check_gcd)),
                ],
                &outcome,
            ))
        }
        GpCommand::Ratfail { a, ratio } => {
            let s = integrality_failure_index(a, ratio)?;
            let ratio_q = Ratio::new(ratio.numerator().clone(), ratio.denominator().clone());
            let term = |k: u64| {
                Ratio::from_integer(a.clone()) * num_traits::pow(ratio_q.clone(), k as usize)
            };
            let failing = term(s);
            if oracle.is_some() && (failing.is_integer() || !term(s - 1).is_integer()) {
                return Err(mismatch("gp ratfail", s, "different index"));
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("first", num(a)),
                ("ratio", num(ratio)),
                ("failure_index", num(s)),
                ("failing_term", num(ratio_string(&failing))),
            ])))
        }
        GpCommand::Mindex { a, r, lambda } => {
            let gp = GPSpec::new(a.clone(), r.clone())?;
            let m = min_index_for_digits(&gp, *lambda)?;
            if oracle.is_some() {
                let target = *lambda as usize * oracle_digit_count(a);
                let mut k = 0u64;
                let mut t = a.clone();
                while oracle_digit_count(&t) < target {
                    t *= r;
                    k += 1;
                }
                expect_same("gp mindex", m.exact, k)?;
            }
            let mut fields = vec![
                ("first", num(a)),
                ("ratio", num(r)),
                ("lambda", num(lambda)),
                ("exact", num(m.exact)),
            ];
            if let Some(b) = &m.approx_bound {
                fields.push(("approx_bound", num(b)));
            }
            Ok(Outcome::ok(Output::Single(fields)))
        }
        GpCommand::Alpha { a, r } => {
            let gp = GPSpec::new(a.clone(), r.clone())?;
            let cmp = alpha_ratio(&gp)?;
            if oracle.is_some() {
                let exp = oracle_digit_count(a) + oracle_digit_count(r) - 2;
                let power: Natural = format!("1{}", "0".repeat(exp)).parse().expect("decimal");
                expect_same("gp alpha", cmp.below_one, r * r > power)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("first", num(a)),
                ("ratio", num(r)),
                ("first_digits", num(cmp.first_len)),
                ("ratio_digits", num(cmp.ratio_len)),
                ("power_of_ten", num(&cmp.power_of_ten)),
                ("ratio_squared", num(&cmp.ratio_squared)),
                ("alpha_below_one", Field::Flag(cmp.below_one)),
            ])))
        }
        GpCommand::Subexp { a, r } => {
            let gp = GPSpec::new(a.clone(), r.clone())?;
            let b = subsequence_exponent(&gp);
            let power = num_traits::pow(r.clone(), b as usize);
            if oracle.is_some() {
                let l = oracle_digit_count(a);
                let mut k = 1u64;
                let mut p = r.clone();
                while oracle_digit_count(&p) <= l {
                    p *= r;
                    k += 1;
                }
                expect_same("gp subexp", b, k)?;
            }
            Ok(Outcome::ok(Output::Single(vec![
                ("first", num(a)),
                ("ratio", num(r)),
                ("exponent", num(b)),
                ("ratio_power", num(&power)),
                ("ratio_power_digits", num(digit_count(&power))),
            ])))
        }
    }
}
