//! Rows comparing closed forms, constructive colorings and the oracle.

use std::io::Write;
use std::ops::RangeInclusive;

use hctree::coloring::{coloring_from_order, lower_bound};
use hctree::exec::Execution;
use hctree::families::FamilySpec;
use hctree::oracle::{brute_force_hc_with, OracleBudget};

use crate::commands::{emit, spec_for};
use crate::{CliError, FamilyKind, TableArgs, TableFormat, EXIT_OK};

const MAX_ROWS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub spec: FamilySpec,
    pub n: u64,
    pub total_level: u64,
    pub formula: i64,
    pub lower_bound: Option<i64>,
    pub constructive: u64,
    pub oracle: Option<u64>,
}

impl Row {
    /// Formula, bound, construction and (when run) the oracle all agree.
    pub fn agrees(&self) -> bool {
        self.lower_bound == Some(self.formula)
            && self.constructive as i64 == self.formula
            && self.oracle.is_none_or(|o| o as i64 == self.formula)
    }

    fn params(&self) -> String {
        let p: Vec<String> = self.spec.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        p.join(" ")
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.spec.name().to_string(),
            self.params(),
            self.n.to_string(),
            self.total_level.to_string(),
            self.formula.to_string(),
            self.lower_bound.map_or("-".into(), |b| b.to_string()),
            self.constructive.to_string(),
            self.oracle.map_or("-".into(), |o| o.to_string()),
            if self.agrees() { "yes" } else { "NO" }.to_string(),
        ]
    }
}

const HEADER: [&str; 9] = [
    "family",
    "params",
    "n",
    "total_level",
    "hc_formula",
    "lower_bound",
    "constructive",
    "oracle",
    "agree",
];

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str, flag: &str) -> Result<RangeInclusive<u32>, CliError> {
    let bad = || CliError::Input(format!("--{flag}: expected `a..b` or a number, got `{text}`"));
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Input(format!("--{flag}: empty range `{text}`")));
    }
    Ok(lo..=hi)
}

fn specs(args: &TableArgs) -> Result<Vec<FamilySpec>, CliError> {
    let range = |v: &Option<String>, flag: &str| -> Result<Vec<Option<u32>>, CliError> {
        match v {
            Some(t) => Ok(parse_range(t, flag)?.map(Some).collect()),
            None => Ok(vec![None]),
        }
    };
    let (ks, ds, ms) = (range(&args.k, "k")?, range(&args.d, "d")?, range(&args.m, "m")?);
    if args.family == FamilyKind::Random {
        return Err(CliError::Input("random has no closed form to tabulate".into()));
    }
    if ks.len().saturating_mul(ds.len()).saturating_mul(ms.len()) > MAX_ROWS {
        return Err(CliError::Input(format!("more than {MAX_ROWS} rows requested")));
    }
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            for &d in &ds {
                out.push(spec_for(args.family, k, d, m)?);
            }
        }
    }
    out.dedup();
    Ok(out)
}

pub fn row(spec: FamilySpec, max_n: usize, exec: Execution) -> Result<Row, CliError> {
    let form = spec.closed_form()?;
    let inst = spec.generate()?;
    let coloring =
        coloring_from_order(&inst.tree, &inst.canonical_order).map_err(|e| CliError::Input(e.to_string()))?;
    let oracle = if inst.tree.n() <= max_n {
        let budget = OracleBudget {
            max_n,
            ..OracleBudget::default()
        };
        Some(brute_force_hc_with(&inst.tree, &budget, exec)?.value)
    } else {
        None
    };
    Ok(Row {
        spec,
        n: inst.tree.n() as u64,
        total_level: inst.tree.level_table().total,
        formula: form.hc,
        lower_bound: lower_bound(&inst.tree).ok(),
        constructive: coloring.span(),
        oracle,
    })
}

/// Rows in parameter order, computed in parallel across rows.
pub fn rows(specs: &[FamilySpec], max_n: usize) -> Result<Vec<Row>, CliError> {
    Execution::default()
        .map(specs, |&s| row(s, max_n, Execution::Sequential))
        .into_iter()
        .collect()
}

pub fn render(rows: &[Row], format: TableFormat) -> String {
    let mut s = String::new();
    match format {
        TableFormat::Csv => {
            s.push_str(&HEADER.join(","));
            s.push('\n');
            for r in rows {
                s.push_str(&r.cells().join(","));
                s.push('\n');
            }
        }
        TableFormat::Markdown => {
            s.push_str(&format!("| {} |\n", HEADER.join(" | ")));
            s.push_str(&format!("|{}\n", "---|".repeat(HEADER.len())));
            for r in rows {
                s.push_str(&format!("| {} |\n", r.cells().join(" | ")));
            }
        }
    }
    s
}

pub fn table(args: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = rows(&specs(args)?, args.max_n)?;
    emit(args.output.as_deref(), &render(&rows, args.format), out)?;
    Ok(EXIT_OK)
}
