//! Command-line front end: argument parsing and the subcommands, kept apart
//! from `main` so the whole surface can be driven from tests.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use invseq::oracle::{
    count_avoiders, count_sequence, inversion_sequences, list_avoiders, MAX_ORACLE_LENGTH,
};
use invseq::sequence::{avoids, structure_check_201_210};
use invseq::series::{
    check_system_201_210, commitment_slices, conjecture_residual, f_coefficients, f_series,
    iterate_fe, minpoly_a, minpoly_b, minpoly_f, PolyRelation, TruncatedSeries,
};
use invseq::succession::{count_via_rules, counting_sequence, emit_diagram, state_profile};
use invseq::{Basis, BigCount, Pattern, SystemId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Values pinned independently of this crate's algorithms.
pub const KNOWN_VALUES: &[(SystemId, usize, u64)] = &[
    // coefficients of the closed form for I(201,210)
    (SystemId::Avoid201210, 5, 116),
    (SystemId::Avoid201210, 7, 3720),
    (SystemId::Avoid201210, 8, 23072),
    (SystemId::Avoid201210, 9, 148528),
    (SystemId::Avoid201210, 10, 983072),
    // the value 52 that circulated for n = 5 is wrong
    (SystemId::Avoid011201, 5, 51),
    (SystemId::Avoid011201, 6, 189),
    (SystemId::Avoid010100120210, 7, 746),
];

#[derive(Debug, Parser)]
#[command(
    name = "invseq",
    version,
    about = "Count pattern-avoiding inversion sequences"
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of avoiders of length n
    Count {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Every avoider of length n, in lexicographic order
    List {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// Counts for lengths 0..=n-max
    Series {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Rule states at depth n with their path counts
    Profile {
        #[arg(long)]
        system: SystemId,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// The first levels of a rule system
    Diagram {
        #[arg(long)]
        system: SystemId,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run one named consistency check
    Verify {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// One of 201-210, 011-201, 010-100-120-210
    #[arg(long)]
    system: Option<SystemId>,
    /// Comma-separated patterns, e.g. 010,102
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rules,
    Oracle,
    Gf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Bfile,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    GfVsRules,
    OracleVsRules,
    #[value(name = "minpoly-A")]
    MinpolyA,
    #[value(name = "minpoly-B")]
    MinpolyB,
    #[value(name = "minpoly-F")]
    MinpolyF,
    #[value(name = "system-201-210")]
    System201210,
    StructureTheorem,
    FeVsRules,
    #[value(name = "wilf-011-201")]
    Wilf011201,
    #[value(name = "conjecture-010-102")]
    Conjecture010102,
    KnownValues,
}

impl Check {
    fn default_n_max(self) -> usize {
        match self {
            Check::GfVsRules
            | Check::MinpolyA
            | Check::MinpolyB
            | Check::MinpolyF
            | Check::Wilf011201 => 200,
            Check::OracleVsRules => 10,
            Check::System201210 => 40,
            Check::StructureTheorem => 8,
            Check::FeVsRules => 30,
            Check::Conjecture010102 => 12,
            Check::KnownValues => 0,
        }
    }
}

/// Exit status and what to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into() + "\n",
        }
    }
}

/// Parses `"201,210"`; the empty string is the empty basis.
pub fn parse_basis(text: &str) -> invseq::Result<Basis> {
    let text = text.trim();
    if text.is_empty() {
        return Basis::new(Vec::new());
    }
    let mut patterns = Vec::new();
    for word in text.split(',').map(str::trim) {
        if word.is_empty() || !word.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invseq::Error::Parse {
                word: word.to_string(),
                reason: "a pattern is a string of digits".into(),
            });
        }
        patterns.push(word.parse::<Pattern>()?);
    }
    Basis::new(patterns)
}

enum Resolved {
    System(SystemId),
    Basis(Basis),
}

impl Resolved {
    fn basis(&self) -> Basis {
        match self {
            Resolved::System(id) => id.basis(),
            Resolved::Basis(b) => b.clone(),
        }
    }

    fn system(&self) -> Option<SystemId> {
        match self {
            Resolved::System(id) => Some(*id),
            Resolved::Basis(b) => SystemId::from_basis(b),
        }
    }
}

fn resolve(target: &Target) -> Result<Resolved, Outcome> {
    match (&target.system, &target.basis) {
        (Some(id), _) => Ok(Resolved::System(*id)),
        (None, Some(text)) => parse_basis(text)
            .map(Resolved::Basis)
            .map_err(|e| Outcome::usage(e.to_string())),
        (None, None) => Err(Outcome::usage("one of --system or --basis is required")),
    }
}

fn oracle_bound(n: usize) -> Result<(), Outcome> {
    if n >= MAX_ORACLE_LENGTH {
        return Err(Outcome::usage(format!(
            "the oracle handles lengths below {MAX_ORACLE_LENGTH}"
        )));
    }
    Ok(())
}

fn default_method(target: &Resolved) -> Method {
    if target.system().is_some() {
        Method::Rules
    } else {
        Method::Oracle
    }
}

fn rule_system(target: &Resolved) -> Result<SystemId, Outcome> {
    target
        .system()
        .ok_or_else(|| Outcome::usage(format!("no rule system for basis {}", target.basis())))
}

fn counts(
    target: &Resolved,
    n_max: usize,
    method: Option<Method>,
) -> Result<Vec<BigCount>, Outcome> {
    let system = target.system();
    match method.unwrap_or_else(|| default_method(target)) {
        Method::Rules => Ok(counting_sequence(rule_system(target)?, n_max)),
        Method::Gf => match system {
            Some(SystemId::Avoid201210) => f_coefficients(n_max).map_err(|e| Outcome {
                code: EXIT_FAILED,
                stdout: String::new(),
                stderr: e.to_string() + "\n",
            }),
            _ => Err(Outcome::usage("--method gf is only available for 201-210")),
        },
        Method::Oracle => {
            oracle_bound(n_max)?;
            Ok(count_sequence(&target.basis(), n_max))
        }
    }
}

fn render_series(counts: &[BigCount], format: Format) -> Result<String, Outcome> {
    let mut out = String::new();
    match format {
        Format::Plain => {
            let ints: Vec<BigInt> = counts.iter().cloned().map(BigInt::from).collect();
            let order = ints.len() - 1;
            let _ = writeln!(out, "{}", TruncatedSeries::from_integers(ints, order));
        }
        Format::Csv => {
            out.push_str("n,count\n");
            for (n, c) in counts.iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
        }
        Format::Bfile => {
            for (n, c) in counts.iter().enumerate() {
                let _ = writeln!(out, "{n} {c}");
            }
        }
        Format::Dot => return Err(Outcome::usage("dot output is only for diagrams")),
    }
    Ok(out)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Invocation::try_parse_from(args) {
        Ok(inv) => execute(&inv),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(inv: &Invocation) -> Outcome {
    match dispatch(inv) {
        Ok(out) | Err(out) => out,
    }
}

fn dispatch(inv: &Invocation) -> Result<Outcome, Outcome> {
    match &inv.command {
        Command::Count { target, n, method } => {
            let target = resolve(target)?;
            let count = match method.unwrap_or_else(|| default_method(&target)) {
                Method::Oracle => {
                    oracle_bound(*n)?;
                    count_avoiders(&target.basis(), *n)
                }
                Method::Rules => count_via_rules(rule_system(&target)?, *n),
                Method::Gf => counts(&target, *n, Some(Method::Gf))?
                    .pop()
                    .expect("n + 1 terms"),
            };
            Ok(Outcome::ok(format!("{count}\n")))
        }
        Command::List { target, n } => {
            let target = resolve(target)?;
            oracle_bound(*n)?;
            let mut out = String::new();
            for e in list_avoiders(&target.basis(), *n) {
                let _ = writeln!(out, "{e}");
            }
            Ok(Outcome::ok(out))
        }
        Command::Series {
            target,
            n_max,
            method,
            format,
        } => {
            let target = resolve(target)?;
            let counts = counts(&target, *n_max, *method)?;
            Ok(Outcome::ok(render_series(&counts, *format)?))
        }
        Command::Profile { system, n, format } => {
            let mut out = String::new();
            let profile = state_profile(*system, *n);
            match format {
                Format::Plain => profile.iter().for_each(|(s, c)| {
                    let _ = writeln!(out, "{s} {c}");
                }),
                Format::Csv => {
                    out.push_str("state,count\n");
                    profile.iter().for_each(|(s, c)| {
                        let _ = writeln!(out, "\"{s}\",{c}");
                    });
                }
                _ => return Err(Outcome::usage("profile output is plain or csv")),
            }
            Ok(Outcome::ok(out))
        }
        Command::Diagram { system, n, format } => {
            let d = emit_diagram(*system, *n);
            match format {
                Format::Dot => Ok(Outcome::ok(d.to_dot())),
                Format::Plain => {
                    let mut out = String::new();
                    for node in &d.nodes {
                        let _ = writeln!(out, "{} {} {}", node.depth, node.label, node.count);
                    }
                    Ok(Outcome::ok(out))
                }
                _ => Err(Outcome::usage("diagram output is dot or plain")),
            }
        }
        Command::Verify { check, n_max } => {
            Ok(verify(*check, n_max.unwrap_or(check.default_n_max())))
        }
    }
}

fn first_mismatch(a: &[BigCount], b: &[BigCount]) -> Option<usize> {
    (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i))
}

fn relation_report(rel: &PolyRelation, s: &TruncatedSeries) -> Result<String, String> {
    let r = rel.residual(s);
    if r.is_zero() {
        Ok(format!("{}: residual {r}", rel.name()))
    } else {
        Err(format!("{}: residual {r}", rel.name()))
    }
}

fn run_check(check: Check, n_max: usize) -> Result<String, String> {
    let fe_systems = [SystemId::Avoid011201, SystemId::Avoid010100120210];
    match check {
        Check::GfVsRules => {
            let gf = f_coefficients(n_max).map_err(|e| e.to_string())?;
            let rules = counting_sequence(SystemId::Avoid201210, n_max);
            match first_mismatch(&gf, &rules) {
                None => Ok(format!("closed form equals rules for n <= {n_max}")),
                Some(n) => Err(format!(
                    "n = {n}: closed form {}, rules {}",
                    gf[n], rules[n]
                )),
            }
        }
        Check::OracleVsRules => {
            if n_max >= MAX_ORACLE_LENGTH {
                return Err(format!(
                    "the oracle handles lengths below {MAX_ORACLE_LENGTH}"
                ));
            }
            for id in SystemId::ALL {
                let oracle = count_sequence(&id.basis(), n_max);
                let rules = counting_sequence(id, n_max);
                if let Some(n) = first_mismatch(&oracle, &rules) {
                    return Err(format!(
                        "{id}, n = {n}: oracle {}, rules {}",
                        oracle[n], rules[n]
                    ));
                }
            }
            Ok(format!(
                "oracle equals rules for all three systems, n <= {n_max}"
            ))
        }
        Check::MinpolyA => relation_report(&minpoly_a(), &commitment_slices(n_max)[0]),
        Check::MinpolyB => relation_report(&minpoly_b(), &commitment_slices(n_max)[1]),
        Check::MinpolyF => {
            relation_report(&minpoly_f(), &f_series(n_max).map_err(|e| e.to_string())?)
        }
        Check::System201210 => check_system_201_210(n_max)
            .map(|()| format!("all equations hold through x^{n_max}"))
            .map_err(|v| v.to_string()),
        Check::StructureTheorem => {
            let basis = SystemId::Avoid201210.basis();
            for n in 0..=n_max {
                if let Some(e) =
                    inversion_sequences(n).find(|e| structure_check_201_210(e) != avoids(e, &basis))
                {
                    return Err(format!("disagreement on {e}"));
                }
            }
            Ok(format!(
                "characterisation matches avoidance for lengths <= {n_max}"
            ))
        }
        Check::FeVsRules => {
            for id in fe_systems {
                let fe = iterate_fe(id, n_max).map_err(|e| format!("{id}: {e}"))?;
                let rules = counting_sequence(id, n_max);
                if let Some(n) = first_mismatch(&fe, &rules) {
                    return Err(format!(
                        "{id}, n = {n}: equation {}, rules {}",
                        fe[n], rules[n]
                    ));
                }
            }
            Ok(format!("functional equations equal rules for n <= {n_max}"))
        }
        Check::Wilf011201 => {
            let a = counting_sequence(fe_systems[0], n_max);
            let b = counting_sequence(fe_systems[1], n_max);
            match first_mismatch(&a, &b) {
                None => Ok(format!(
                    "conjecture evidence: sequences agree for n <= {n_max}"
                )),
                Some(n) => Err(format!("n = {n}: {} vs {}", a[n], b[n])),
            }
        }
        Check::Conjecture010102 => {
            if n_max >= MAX_ORACLE_LENGTH {
                return Err(format!(
                    "the oracle handles lengths below {MAX_ORACLE_LENGTH}"
                ));
            }
            let counts = count_sequence(&invseq::series::conjecture::basis_010_102(), n_max);
            let r = conjecture_residual(&counts);
            if r.is_zero() {
                Ok(format!("conjecture evidence: cubic residual {r}"))
            } else {
                Err(format!("cubic residual {r}"))
            }
        }
        Check::KnownValues => {
            for &(id, n, want) in KNOWN_VALUES {
                let got = count_via_rules(id, n);
                if got != BigCount::from(want) {
                    return Err(format!("{id}, n = {n}: expected {want}, rules give {got}"));
                }
            }
            Ok(format!("{} pinned values reproduced", KNOWN_VALUES.len()))
        }
    }
}

fn check_name(check: Check) -> String {
    check
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

pub fn verify(check: Check, n_max: usize) -> Outcome {
    match run_check(check, n_max) {
        Ok(msg) => Outcome::ok(format!("PASS {}: {msg}\n", check_name(check))),
        Err(msg) => Outcome {
            code: EXIT_FAILED,
            stdout: format!("FAIL {}: {msg}\n", check_name(check)),
            stderr: String::new(),
        },
    }
}
