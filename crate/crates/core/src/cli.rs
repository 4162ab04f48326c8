//! Command implementations behind the `peterson` binary.
//!
//! Every command returns its complete output as a `String` so that nothing is
//! printed when a consistency check fails part-way.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{structure_constants_rewrite, CohomologyClass, Expansion};
use crate::diagrams::{enumerate_diagrams, expand_all};
use crate::error::Error;
use crate::index_set::IndexSet;
use crate::linalg::{structure_constants_linalg, LinalgOracle};
use crate::symmetric_group::Permutation;
use crate::Rational;

/// Largest rank accepted for single queries.
pub const MAX_QUERY_RANK: usize = 16;
/// Largest rank accepted by `verify`.
pub const MAX_VERIFY_RANK: usize = 8;

/// A failed command together with its exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Exit code 2.
    #[error("{0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Consistency(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::IncompletePresentation { .. } => {
                CliError::Consistency(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Diagram,
    Rewrite,
    Linalg,
    All,
    /// Looked up in a table written by `table`; not selectable on the
    /// command line.
    #[value(skip)]
    Cached,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    /// Exact decimal integer.
    pub coeff: String,
}

/// Serialized result of `expand`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub n: usize,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub method: Method,
    /// Sorted by `L` in canonical subset order.
    pub terms: Vec<Term>,
}

impl ExpansionRecord {
    pub fn new(j: &IndexSet, k: &IndexSet, method: Method, expansion: &Expansion) -> Self {
        Self {
            n: j.n(),
            j: j.to_vec(),
            k: k.to_vec(),
            method,
            terms: expansion
                .iter()
                .map(|(l, d)| Term {
                    l: l.to_vec(),
                    coeff: d.to_string(),
                })
                .collect(),
        }
    }
}

/// One row of a structure-constant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    pub d: String,
}

/// JSON form of `table`; the filters record which `(J, K)` pairs it covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub n: usize,
    #[serde(rename = "J")]
    pub j: Option<Vec<usize>>,
    #[serde(rename = "K")]
    pub k: Option<Vec<usize>>,
    pub degree: Option<usize>,
    pub rows: Vec<TableRow>,
}

fn check_query_rank(n: usize) -> CliResult<()> {
    if (1..=MAX_QUERY_RANK).contains(&n) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "rank n = {n} is outside the supported range 1..={MAX_QUERY_RANK}"
        )))
    }
}

fn parse_set(n: usize, s: &str) -> CliResult<IndexSet> {
    Ok(IndexSet::parse(n, s)?)
}

fn describe(e: &Expansion) -> String {
    if e.is_empty() {
        return "0".into();
    }
    e.iter()
        .map(|(l, d)| format!("{d}*w[{l}]"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Structure constants of `ϖ_J · ϖ_K` by the chosen engine. `All` runs the
/// three engines and fails unless they agree exactly.
pub fn compute_expansion(j: &IndexSet, k: &IndexSet, method: Method) -> CliResult<Expansion> {
    match method {
        Method::Diagram => Ok(expand_all(j, k)?),
        Method::Rewrite => Ok(structure_constants_rewrite(j, k)?),
        Method::Linalg => Ok(structure_constants_linalg(j, k)?),
        Method::All => {
            let diagram = expand_all(j, k)?;
            let rewrite = structure_constants_rewrite(j, k)?;
            let linalg = structure_constants_linalg(j, k)?;
            if diagram != rewrite || rewrite != linalg {
                return Err(CliError::Consistency(format!(
                    "engines disagree for J={{{j}}}, K={{{k}}}: diagram {}; rewrite {}; linalg {}",
                    describe(&diagram),
                    describe(&rewrite),
                    describe(&linalg)
                )));
            }
            Ok(rewrite)
        }
        Method::Cached => Err(CliError::Usage(
            "the cached method needs a table; pass --cached PATH".into(),
        )),
    }
}

fn csv_to_string(
    write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(format!("csv: {e}")))
}

fn subset_string(members: &[usize]) -> String {
    if members.is_empty() {
        "-".into()
    } else {
        members
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Renders an [`ExpansionRecord`] in the requested format.
pub fn format_record(record: &ExpansionRecord, format: Format) -> CliResult<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record)
                .map_err(|e| CliError::Usage(format!("json: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv_to_string(|w| {
            w.write_record(["n", "J", "K", "method", "L", "coeff"])?;
            let method = serde_json::to_value(record.method)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default();
            for t in &record.terms {
                w.write_record([
                    record.n.to_string(),
                    subset_string(&record.j),
                    subset_string(&record.k),
                    method.clone(),
                    subset_string(&t.l),
                    t.coeff.clone(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let rhs = if record.terms.is_empty() {
                "0".to_string()
            } else {
                record
                    .terms
                    .iter()
                    .map(|t| format!("{} w[{}]", t.coeff, subset_string(&t.l)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            Ok(format!(
                "w[{}] * w[{}] = {rhs}\n",
                subset_string(&record.j),
                subset_string(&record.k)
            ))
        }
    }
}

fn read_table(path: &Path) -> CliResult<Table> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Usage(format!(
            "{} is not a JSON structure-constant table: {e}",
            path.display()
        ))
    })
}

fn lookup_cached(table: &Table, j: &IndexSet, k: &IndexSet) -> CliResult<Expansion> {
    if table.n != j.n() {
        return Err(CliError::Usage(format!(
            "cached table has rank {}, query has rank {}",
            table.n,
            j.n()
        )));
    }
    let covers = table.j.as_ref().is_none_or(|f| *f == j.to_vec())
        && table.k.as_ref().is_none_or(|f| *f == k.to_vec())
        && table.degree.is_none_or(|d| d == j.len() + k.len());
    if !covers {
        return Err(CliError::Usage(format!(
            "cached table does not cover J={{{j}}}, K={{{k}}}"
        )));
    }
    let mut out = Expansion::new();
    for row in table
        .rows
        .iter()
        .filter(|r| r.j == j.to_vec() && r.k == k.to_vec())
    {
        let l = IndexSet::new(table.n, row.l.iter().copied())?;
        let d: BigUint = row
            .d
            .parse()
            .map_err(|e| CliError::Usage(format!("bad coefficient {:?}: {e}", row.d)))?;
        out.insert(l, d);
    }
    Ok(out)
}

/// `expand`: the full expansion of `ϖ_J · ϖ_K`.
pub fn cmd_expand(
    n: usize,
    j: &str,
    k: &str,
    method: Method,
    format: Format,
    cached: Option<&Path>,
) -> CliResult<String> {
    check_query_rank(n)?;
    let j = parse_set(n, j)?;
    let k = parse_set(n, k)?;
    let (method, expansion) = match cached {
        Some(path) => (Method::Cached, lookup_cached(&read_table(path)?, &j, &k)?),
        None => (method, compute_expansion(&j, &k, method)?),
    };
    format_record(&ExpansionRecord::new(&j, &k, method, &expansion), format)
}

/// `diagrams`: every left-right diagram of `(J, K, L)` with its weight.
pub fn cmd_diagrams(n: usize, j: &str, k: &str, l: &str) -> CliResult<String> {
    check_query_rank(n)?;
    let (j, k, l) = (parse_set(n, j)?, parse_set(n, k)?, parse_set(n, l)?);
    let diagrams = enumerate_diagrams(&j, &k, &l)?;
    let d = crate::diagrams::structure_constant(&j, &k, &l)?;
    let mut out = String::new();
    let _ = writeln!(out, "J = {j}   K = {k}   L = {l}");
    if diagrams.is_empty() {
        let _ = writeln!(out, "no diagrams; d = 0");
        return Ok(out);
    }
    let mut total = Rational::from_integer(0.into());
    for (idx, p) in diagrams.iter().enumerate() {
        let moves: Vec<String> = p.moves().iter().map(|m| m.to_string()).collect();
        let _ = writeln!(
            out,
            "\ndiagram {} of {} (moves: {})",
            idx + 1,
            diagrams.len(),
            if moves.is_empty() {
                "none".into()
            } else {
                moves.join(" ")
            }
        );
        out.push_str(&p.render_ascii());
        let _ = writeln!(out, "weight = {}", p.weight);
        total += &p.weight;
    }
    let _ = writeln!(out, "\nsum of weights = {total}");
    let _ = writeln!(
        out,
        "d = m_L/(m_J m_K) * sum = {}/({}*{}) * {total} = {d}",
        l.m_factor(),
        j.m_factor(),
        k.m_factor()
    );
    Ok(out)
}

/// `group`: Young-subgroup and Hessenberg data attached to `J`.
pub fn cmd_group(n: usize, j: &str) -> CliResult<String> {
    check_query_rank(n)?;
    let j = parse_set(n, j)?;
    let dec = j.decompose();
    let w = Permutation::longest_w(&j);
    let v = Permutation::subword_v(&j);
    let components: Vec<String> = dec
        .runs
        .iter()
        .map(|&(lo, hi)| {
            let members: Vec<String> = (lo..=hi).map(|x| x.to_string()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let list = |v: &[usize]| {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    };
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    let _ = writeln!(out, "J = {j}");
    let _ = writeln!(
        out,
        "components = {}",
        if components.is_empty() {
            "none".into()
        } else {
            components.join(" ")
        }
    );
    let _ = writeln!(out, "m_J = {}", dec.m_factor);
    let _ = writeln!(out, "factor ranks = {}", list(&j.factor_ranks()));
    let _ = writeln!(out, "h_J = {}", list(&j.hessenberg_function()));
    let _ = writeln!(out, "w_J = {w}");
    let _ = writeln!(out, "length(w_J) = {}", w.length());
    let _ = writeln!(out, "v_J = {v}");
    let _ = writeln!(out, "length(v_J) = {}", v.length());
    Ok(out)
}

/// Options of `table`.
#[derive(Debug, Clone, Default)]
pub struct TableQuery {
    pub j: Option<String>,
    pub k: Option<String>,
    pub degree: Option<usize>,
}

/// `table`: all nonzero `d_JK^L` for rank `n`, ordered by `J`, `K`, `L`.
pub fn cmd_table(
    n: usize,
    query: &TableQuery,
    method: Method,
    format: Format,
) -> CliResult<String> {
    check_query_rank(n)?;
    let j_filter = query.j.as_deref().map(|s| parse_set(n, s)).transpose()?;
    let k_filter = query.k.as_deref().map(|s| parse_set(n, s)).transpose()?;
    let subsets: Vec<IndexSet> = IndexSet::all_subsets(n)?.collect();
    let pairs: Vec<(IndexSet, IndexSet)> = subsets
        .iter()
        .filter(|j| j_filter.is_none_or(|f| f == **j))
        .flat_map(|j| {
            subsets
                .iter()
                .filter(|k| k_filter.is_none_or(|f| f == **k))
                .map(move |k| (*j, *k))
        })
        .filter(|(j, k)| query.degree.is_none_or(|d| j.len() + k.len() == d))
        .collect();
    let expansions: Vec<Expansion> = pairs
        .par_iter()
        .map(|(j, k)| compute_expansion(j, k, method))
        .collect::<CliResult<_>>()?;
    let rows: Vec<TableRow> = pairs
        .iter()
        .zip(&expansions)
        .flat_map(|((j, k), e)| {
            e.iter().map(move |(l, d)| TableRow {
                j: j.to_vec(),
                k: k.to_vec(),
                l: l.to_vec(),
                d: d.to_string(),
            })
        })
        .collect();
    match format {
        Format::Csv => csv_to_string(|w| {
            w.write_record(["J", "K", "L", "d"])?;
            for r in &rows {
                w.write_record([
                    subset_string(&r.j),
                    subset_string(&r.k),
                    subset_string(&r.l),
                    r.d.clone(),
                ])?;
            }
            Ok(())
        }),
        Format::Json => {
            let table = Table {
                n,
                j: j_filter.map(|s| s.to_vec()),
                k: k_filter.map(|s| s.to_vec()),
                degree: query.degree,
                rows,
            };
            let mut s = serde_json::to_string_pretty(&table)
                .map_err(|e| CliError::Usage(format!("json: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "d[{}; {}; {}] = {}",
                    subset_string(&r.j),
                    subset_string(&r.k),
                    subset_string(&r.l),
                    r.d
                );
            }
            Ok(out)
        }
    }
}

/// Writes command output to `out`, or returns it for standard output.
pub fn write_output(text: String, out: Option<&Path>) -> CliResult<Option<String>> {
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

/// Outcome of one named check in `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub n: usize,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_pairs(n: usize) -> Vec<CheckResult> {
    let subsets: Vec<IndexSet> = IndexSet::all_subsets(n).expect("rank checked").collect();
    let pairs: Vec<(IndexSet, IndexSet)> = subsets
        .iter()
        .flat_map(|j| subsets.iter().map(move |k| (*j, *k)))
        .collect();
    // Canonical order is kept by the indexed parallel collect.
    let outcomes: Vec<(std::result::Result<Expansion, String>, Vec<String>)> = pairs
        .par_iter()
        .map(|(j, k)| {
            let mut support = Vec::new();
            let result = compute_expansion(j, k, Method::All).map_err(|e| e.to_string());
            if let Ok(e) = &result {
                let union = j.union(k).expect("same rank");
                for l in e.keys() {
                    if !union.is_subset(l).expect("same rank") || l.len() != j.len() + k.len() {
                        support.push(format!("J={{{j}}} K={{{k}}}: L={{{l}}}"));
                    }
                }
            }
            (result, support)
        })
        .collect();

    let mut agreement = CheckResult {
        n,
        name: "cross-engine equality, integrality, non-negativity",
        checked: pairs.len(),
        failures: Vec::new(),
    };
    let mut support = CheckResult {
        n,
        name: "support condition L ⊇ J∪K, |L| = |J|+|K|",
        checked: pairs.len(),
        failures: Vec::new(),
    };
    let mut table: BTreeMap<(IndexSet, IndexSet), Expansion> = BTreeMap::new();
    for ((j, k), (result, bad_support)) in pairs.iter().zip(outcomes) {
        match result {
            Ok(e) => {
                table.insert((*j, *k), e);
            }
            Err(msg) => agreement.failures.push(msg),
        }
        support.failures.extend(bad_support);
    }
    let mut symmetry = CheckResult {
        n,
        name: "symmetry d_JK^L = d_KJ^L",
        checked: 0,
        failures: Vec::new(),
    };
    for ((j, k), e) in &table {
        if let Some(swapped) = table.get(&(*k, *j)) {
            symmetry.checked += 1;
            if swapped != e {
                symmetry.failures.push(format!("J={{{j}}} K={{{k}}}"));
            }
        }
    }
    vec![agreement, support, symmetry]
}

fn check_dimensions(n: usize) -> CheckResult {
    let oracle = LinalgOracle::global();
    let mut result = CheckResult {
        n,
        name: "quotient dimension = C(n-1, d), d ≤ n+1",
        checked: 0,
        failures: Vec::new(),
    };
    for d in 0..=n + 1 {
        result.checked += 1;
        match oracle.quotient_dimension(n, d) {
            Ok(dim) if dim == binomial(n - 1, d) => {}
            Ok(dim) => result.failures.push(format!(
                "d={d}: dimension {dim}, expected {}",
                binomial(n - 1, d)
            )),
            Err(e) => result.failures.push(format!("d={d}: {e}")),
        }
    }
    result
}

fn check_bruhat(n: usize) -> CheckResult {
    let mut result = CheckResult {
        n,
        name: "Bruhat: s_i ≤ w_J ⇔ i ∈ J and w_J' ≤ w_J ⇔ J' ⊆ J",
        checked: 0,
        failures: Vec::new(),
    };
    let subsets: Vec<IndexSet> = IndexSet::all_subsets(n).expect("rank checked").collect();
    for j in &subsets {
        let wj = Permutation::longest_w(j);
        for i in 1..n {
            result.checked += 1;
            let s = Permutation::simple_transposition(n, i).expect("i in range");
            if s.bruhat_leq(&wj).expect("same rank") != j.contains(i) {
                result.failures.push(format!("s_{i} vs w_{{{j}}}"));
            }
        }
        for jp in &subsets {
            result.checked += 1;
            let below = Permutation::longest_w(jp)
                .bruhat_leq(&wj)
                .expect("same rank");
            if below != jp.is_subset(j).expect("same rank") {
                result.failures.push(format!("w_{{{jp}}} vs w_{{{j}}}"));
            }
        }
    }
    result
}

fn check_integral(n: usize) -> CheckResult {
    let top = IndexSet::full(n).expect("rank checked");
    let value = CohomologyClass::monomial(&top).integral();
    let expected = Rational::from_integer(top.m_factor().into());
    CheckResult {
        n,
        name: "integral of w_1⋯w_{n-1} = (n-1)!",
        checked: 1,
        failures: if value == expected {
            Vec::new()
        } else {
            vec![format!("got {value}, expected {expected}")]
        },
    }
}

/// `verify`: exhaustive cross-checks for every rank `1..=n_max`. Returns the
/// report and whether every check passed.
pub fn cmd_verify(n_max: usize, jobs: Option<usize>) -> CliResult<(String, bool)> {
    if !(1..=MAX_VERIFY_RANK).contains(&n_max) {
        return Err(CliError::Usage(format!(
            "--n-max must lie in 1..={MAX_VERIFY_RANK}"
        )));
    }
    let run = || {
        let mut results = Vec::new();
        for n in 1..=n_max {
            results.extend(check_pairs(n));
            results.push(check_dimensions(n));
            if n <= 6 {
                results.push(check_bruhat(n));
            }
            results.push(check_integral(n));
        }
        results
    };
    let results = match jobs {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };

    let mut out = String::new();
    let mut all_passed = true;
    for r in &results {
        all_passed &= r.passed();
        let _ = writeln!(
            out,
            "[{}] n={} {}: {} checked, {} failed",
            if r.passed() { "PASS" } else { "FAIL" },
            r.n,
            r.name,
            r.checked,
            r.failures.len()
        );
        for f in r.failures.iter().take(5) {
            let _ = writeln!(out, "    {f}");
        }
    }
    let _ = writeln!(
        out,
        "{}: {} checks over n = 1..={n_max}",
        if all_passed { "ALL PASSED" } else { "FAILURES" },
        results.len()
    );
    Ok((out, all_passed))
}
