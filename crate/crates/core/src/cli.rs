//! The `vwd` command line.
//!
//! Exit status: 0 on success, 1 on verification failure or exhausted
//! budget, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::closedforms::{burnside_h_oracle, burnside_type8_oracle, count_three_simplices,
    count_two_simplices, count_type8, h_closed};
use crate::cyclecount::{c_divisible, c_even_marked, stirling_c, verify_identity, IDENTITIES};
use crate::equiv::{count_classes, matrix_action_oracle, orbit, permute_out_weights,
    sigma_k_local_complement, Operation};
use crate::error::Error;
use crate::io::{graph_to_json, parse_graph, GraphDocument};
use crate::perm::Permutation;
use crate::vwdigraph::{count_m_omega, enumerate_acyclic, DimensionFunction, VwDigraph,
    DEFAULT_ENUMERATION_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "vwd", version, about = "Vector weighted acyclic digraphs over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count characteristic matrices (dj) or equivalence classes (weak).
    Count {
        kind: CountKind,
        #[arg(long, value_parser = parse_omega)]
        omega: DimensionFunction,
        /// Count by brute force; compared with the formula when one exists.
        #[arg(long)]
        brute: bool,
    },
    /// List acyclic weighted digraphs, one JSON document per line.
    Enumerate {
        #[arg(long, value_parser = parse_omega)]
        omega: DimensionFunction,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply one operation to a graph.
    Apply {
        #[arg(long)]
        op: OpName,
        /// 1-based vertex.
        #[arg(long)]
        vertex: Option<usize>,
        /// One-line permutation, e.g. 2,3,1.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
        #[arg(long)]
        k: Option<usize>,
        /// One-line vertex permutation for `reorder`.
        #[arg(long, value_delimiter = ',')]
        mu: Option<Vec<usize>>,
        /// Graph JSON file, or `-` for standard input.
        #[arg(long)]
        input: String,
    },
    /// Equivalence class of a graph.
    Orbit {
        #[arg(long)]
        input: String,
        #[arg(long)]
        members: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Emit a table of exact values.
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CountKind {
    Dj,
    Weak,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OpName {
    Lc,
    SigmaLc,
    SigmaKLc,
    PermuteWeights,
    Reorder,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Identities,
    Burnside,
    Oracle,
    Roundtrip,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    ThreeSimplices,
    Stirling,
    C2,
    Cnme,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
}

fn parse_omega(s: &str) -> Result<DimensionFunction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. }
            | Error::OrbitBudgetExceeded { .. }
            | Error::InexactDivision { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    let result = dispatch(cli.command, &mut stdout, &mut stderr);
    let _ = out.write_all(stdout.as_bytes());
    let _ = err.write_all(stderr.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut String, err: &mut String) -> Outcome {
    match command {
        Command::Count { kind, omega, brute } => count(kind, &omega, brute, out, err),
        Command::Enumerate { omega, limit } => {
            let graphs = enumerate_acyclic(&omega, DEFAULT_ENUMERATION_BUDGET)?;
            for g in graphs.take(limit.unwrap_or(usize::MAX)) {
                let doc = serde_json::to_string(&GraphDocument::from_graph(&g)).expect("serializable");
                out.push_str(&doc);
                out.push('\n');
            }
            Ok(())
        }
        Command::Apply { op, vertex, sigma, k, mu, input } => {
            let g = read_graph(&input)?;
            let need_vertex = || vertex.ok_or_else(|| Failure::Usage("--vertex is required".into()));
            let need_sigma = || sigma.clone().ok_or_else(|| Failure::Usage("--sigma is required".into()));
            let operation = match op {
                OpName::Lc => Operation::Lc { vertex: need_vertex()? },
                OpName::SigmaLc => Operation::SigmaLc { vertex: need_vertex()?, sigma: need_sigma()? },
                OpName::SigmaKLc => Operation::SigmaKLc {
                    vertex: need_vertex()?,
                    sigma: need_sigma()?,
                    k: k.ok_or_else(|| Failure::Usage("--k is required".into()))?,
                },
                OpName::PermuteWeights => {
                    Operation::PermuteWeights { vertex: need_vertex()?, sigma: need_sigma()? }
                }
                OpName::Reorder => Operation::Reorder {
                    mu: mu.ok_or_else(|| Failure::Usage("--mu is required".into()))?,
                },
            };
            out.push_str(&graph_to_json(&operation.apply(&g)?));
            Ok(())
        }
        Command::Orbit { input, members } => {
            let g = read_graph(&input)?;
            let report = orbit(&g, members)?;
            let mut doc = serde_json::json!({
                "size": report.size,
                "canonical": GraphDocument::from_graph(&report.canonical),
            });
            if let Some(list) = report.members {
                doc["members"] = serde_json::to_value(
                    list.iter().map(GraphDocument::from_graph).collect::<Vec<_>>(),
                )
                .expect("serializable");
            }
            out.push_str(&serde_json::to_string_pretty(&doc).expect("serializable"));
            out.push('\n');
            Ok(())
        }
        Command::Verify { suite, max_n } => verify(suite, max_n, out),
        Command::Table { family, max, format } => {
            let (header, rows) = table(family, max)?;
            match format {
                Format::Csv => {
                    out.push_str(&header.join(","));
                    out.push('\n');
                    for row in rows {
                        out.push_str(&row.iter().map(Cell::text).collect::<Vec<_>>().join(","));
                        out.push('\n');
                    }
                }
                Format::Json => {
                    out.push('[');
                    for (i, row) in rows.iter().enumerate() {
                        out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
                        for (j, (key, cell)) in header.iter().zip(row).enumerate() {
                            if j > 0 {
                                out.push_str(", ");
                            }
                            let _ = write!(out, "\"{key}\": {}", cell.json());
                        }
                        out.push('}');
                    }
                    out.push_str(if rows.is_empty() { "]\n" } else { "\n]\n" });
                }
            }
            Ok(())
        }
    }
}

fn read_graph(input: &str) -> Result<VwDigraph, Failure> {
    let mut text = String::new();
    if input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(input)
            .map_err(|e| Failure::Usage(format!("reading {input}: {e}")))?;
    }
    Ok(parse_graph(&text)?)
}

fn weak_formula(omega: &DimensionFunction) -> Result<Option<BigUint>, Error> {
    let mut d: Vec<u64> = omega.dims().iter().map(|&x| x as u64).collect();
    d.sort_unstable();
    Ok(match d.as_slice() {
        [_] => Some(BigUint::from(1u8)),
        [a, b] => Some(count_two_simplices(*a, *b)?.into()),
        [a, b, c] => Some(count_three_simplices(*a, *b, *c)?.total),
        _ => None,
    })
}

fn count(kind: CountKind, omega: &DimensionFunction, brute: bool, out: &mut String, err: &mut String) -> Outcome {
    let formula = match kind {
        CountKind::Dj => Some(count_m_omega(omega)?),
        CountKind::Weak => weak_formula(omega)?,
    };
    let brute_value = if brute || formula.is_none() {
        Some(match kind {
            CountKind::Dj => {
                BigUint::from(enumerate_acyclic(omega, DEFAULT_ENUMERATION_BUDGET)?.count())
            }
            CountKind::Weak => BigUint::from(count_classes(omega)?),
        })
    } else {
        None
    };
    match (formula, brute_value) {
        (Some(f), Some(b)) => {
            err.push_str("source: formula and brute\n");
            if f != b {
                return Err(Failure::Verification(format!(
                    "formula gives {f} but brute force gives {b}"
                )));
            }
            let _ = writeln!(out, "{b}");
        }
        (Some(f), None) => {
            err.push_str("source: formula\n");
            let _ = writeln!(out, "{f}");
        }
        (None, Some(b)) => {
            err.push_str("source: brute\n");
            let _ = writeln!(out, "{b}");
        }
        (None, None) => unreachable!("brute force runs when no formula exists"),
    }
    Ok(())
}

fn shapes(max_m: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_m {
        level = level
            .into_iter()
            .flat_map(|s| {
                let used: usize = s.iter().sum();
                (1..=max_total.saturating_sub(used)).map(move |d| {
                    let mut t = s.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
        all.extend(level.iter().cloned());
    }
    all
}

fn verify(suite: Suite, max_n: usize, out: &mut String) -> Outcome {
    let mut failures = Vec::new();
    let run = |s: Suite| suite == s || suite == Suite::All;
    if run(Suite::Identities) {
        for name in IDENTITIES {
            let r = verify_identity(name, max_n)?;
            let _ = writeln!(out, "identities {name}: {} ({} checks)", status(r.passed()), r.checked);
            failures.extend(r.violations.iter().map(|v| format!("{name}: {v}")));
        }
    }
    if run(Suite::Burnside) {
        for n in 1..=max_n.min(6) {
            let (a, b) = (burnside_type8_oracle(n)?, count_type8(n as u64)?);
            let _ = writeln!(out, "burnside type8 n={n}: {} (oracle {a}, formula {b})", status(a == b));
            if a != b {
                failures.push(format!("type8 n={n}"));
            }
        }
        for n in 1..=max_n.min(5) {
            for m in 1..=max_n.min(5) {
                let (a, b) = (burnside_h_oracle(n, m)?, h_closed(n as u64, m as u64)?);
                let _ = writeln!(out, "burnside h({n},{m}): {} (oracle {a}, formula {b})", status(a == b));
                if a != b {
                    failures.push(format!("h({n},{m})"));
                }
            }
        }
    }
    if run(Suite::Oracle) {
        for d in shapes(3, max_n.min(6)) {
            let omega = DimensionFunction::new(d.clone())?;
            let mut cases = 0;
            let mut bad = 0;
            for g in enumerate_acyclic(&omega, DEFAULT_ENUMERATION_BUDGET)? {
                for v in 0..d.len() {
                    for full in Permutation::all(d[v] + 1) {
                        let bar = full.bar();
                        let expected = if full.apply(d[v]) == d[v] {
                            permute_out_weights(&g, v, &bar)?
                        } else {
                            sigma_k_local_complement(&g, v, &bar, full.apply(d[v]) + 1)?
                        };
                        cases += 1;
                        if matrix_action_oracle(&g, v, &full)? != expected {
                            bad += 1;
                        }
                    }
                }
            }
            let _ = writeln!(out, "oracle omega={omega}: {} ({cases} cases)", status(bad == 0));
            if bad > 0 {
                failures.push(format!("oracle {omega}: {bad} mismatches"));
            }
        }
    }
    if run(Suite::Roundtrip) {
        for d in shapes(3, max_n.min(6)) {
            let omega = DimensionFunction::new(d)?;
            let mut count = 0;
            let mut bad = 0;
            for g in enumerate_acyclic(&omega, DEFAULT_ENUMERATION_BUDGET)? {
                count += 1;
                let reduced = g.to_reduced_matrix()?;
                let ok = reduced.is_in_m_omega()
                    && VwDigraph::from_vector_matrix(&reduced)? == g
                    && parse_graph(&graph_to_json(&g))? == g;
                if !ok {
                    bad += 1;
                }
            }
            let _ = writeln!(out, "roundtrip omega={omega}: {} ({count} graphs)", status(bad == 0));
            if bad > 0 {
                failures.push(format!("roundtrip {omega}: {bad} failures"));
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failures.join("; ")))
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

enum Cell {
    Text(String),
    Number(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Number(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Text(s) => serde_json::to_string(s).expect("serializable"),
            Cell::Number(s) => s.clone(),
        }
    }
}

fn num(x: impl ToString) -> Cell {
    Cell::Number(x.to_string())
}

type Table = (Vec<&'static str>, Vec<Vec<Cell>>);

fn table(family: Family, max: usize) -> Result<Table, Failure> {
    let mut rows = Vec::new();
    let header = match family {
        Family::ThreeSimplices => {
            for n3 in 1..=max as u64 {
                for n2 in 1..=n3 {
                    for n1 in 1..=n2 {
                        let b = count_three_simplices(n1, n2, n3)?;
                        rows.push(vec![num(n1), num(n2), num(n3), num(b.total), Cell::Text(b.branch.name().into())]);
                    }
                }
            }
            vec!["n1", "n2", "n3", "total", "branch"]
        }
        Family::Stirling | Family::C2 => {
            let kind = if matches!(family, Family::Stirling) { "c" } else { "c2" };
            for n in 0..=max {
                for m in 0..=n {
                    let v = if kind == "c" { stirling_c(n, m) } else { c_divisible(2, n, m) };
                    rows.push(vec![Cell::Text(kind.into()), num(n), num(m), num(v)]);
                }
            }
            vec!["kind", "n", "m", "value"]
        }
        Family::Cnme => {
            for n in 0..=max {
                for m in 0..=n {
                    for e in 0..=m {
                        rows.push(vec![Cell::Text("cnme".into()), num(n), num(m), num(e), num(c_even_marked(n, m, e))]);
                    }
                }
            }
            vec!["kind", "n", "m", "e", "value"]
        }
    };
    Ok((header, rows))
}
