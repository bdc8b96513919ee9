//! Arithmetic cross-checks of tabulated a-invariants against tabulated
//! Krull dimension, depth and defect.

use std::collections::BTreeMap;

use anyhow::{bail, Context};
use cohomreg_core::regularity::{depth_delta_from_a, regularity_from_a, ExtDegree};
use serde::Serialize;

/// One a-invariant row: the group number, K, and the trailing a-invariants
/// (earlier ones are −∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARow {
    pub gp: String,
    pub k: usize,
    pub tail: Vec<ExtDegree>,
}

impl ARow {
    /// `a^0..a^K`, padding the front with −∞.
    pub fn full(&self) -> Vec<ExtDegree> {
        let mut a = vec![ExtDegree::NegInfinity; self.k + 1 - self.tail.len()];
        a.extend_from_slice(&self.tail);
        a
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub krull_dimension: usize,
    pub depth: usize,
    pub center_rank: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub gp: String,
    pub krull_dimension: usize,
    pub a_invariants: Vec<ExtDegree>,
    pub regularity: i64,
    pub depth: usize,
    pub delta: usize,
    pub expected: Option<Expected>,
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub rows: Vec<RowCheck>,
    pub all_regularity_zero: bool,
    pub mismatches: Vec<String>,
    pub missing_expected: Vec<String>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.all_regularity_zero && self.mismatches.is_empty() && self.missing_expected.is_empty()
    }
}

fn data_lines(src: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    src.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

pub fn parse_degree_list(s: &str) -> anyhow::Result<Vec<ExtDegree>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<ExtDegree>().map_err(anyhow::Error::msg))
        .collect()
}

/// Rows `gp K a^(K-3) .. a^K` (any number of trailing values up to K+1).
pub fn parse_a_rows(src: &str) -> anyhow::Result<Vec<ARow>> {
    let mut rows = Vec::new();
    for (ln, toks) in data_lines(src) {
        if toks.len() < 3 {
            bail!("line {ln}: expected `gp K a...`");
        }
        let k: usize = toks[1].parse().with_context(|| format!("line {ln}: bad K"))?;
        let tail = toks[2..]
            .iter()
            .map(|t| t.parse::<ExtDegree>().map_err(anyhow::Error::msg))
            .collect::<anyhow::Result<Vec<_>>>()
            .with_context(|| format!("line {ln}"))?;
        if tail.len() > k + 1 {
            bail!("line {ln}: {} a-invariants for K = {k}", tail.len());
        }
        rows.push(ARow {
            gp: toks[0].to_string(),
            k,
            tail,
        });
    }
    Ok(rows)
}

/// Rows `gp K depth center_rank delta`.
pub fn parse_expected(src: &str) -> anyhow::Result<BTreeMap<String, Expected>> {
    let mut out = BTreeMap::new();
    for (ln, toks) in data_lines(src) {
        let [gp, k, d, r, delta] = toks[..] else {
            bail!("line {ln}: expected `gp K depth center_rank delta`");
        };
        let num = |s: &str| s.parse::<usize>().with_context(|| format!("line {ln}: bad number `{s}`"));
        out.insert(
            gp.to_string(),
            Expected {
                krull_dimension: num(k)?,
                depth: num(d)?,
                center_rank: num(r)?,
                delta: num(delta)?,
            },
        );
    }
    Ok(out)
}

pub fn check_row(row: &ARow, expected: Option<Expected>) -> anyhow::Result<RowCheck> {
    let a = row.full();
    let regularity = regularity_from_a(&a).with_context(|| format!("group {}", row.gp))?;
    let (depth, delta) = depth_delta_from_a(&a, row.k).with_context(|| format!("group {}", row.gp))?;
    let agrees = expected.map(|e| e.krull_dimension == row.k && e.depth == depth && e.delta == delta);
    Ok(RowCheck {
        gp: row.gp.clone(),
        krull_dimension: row.k,
        a_invariants: a,
        regularity,
        depth,
        delta,
        expected,
        agrees,
    })
}

pub fn check_table(rows: &[ARow], expected: Option<&BTreeMap<String, Expected>>) -> anyhow::Result<TableCheck> {
    let checks = rows
        .iter()
        .map(|r| check_row(r, expected.and_then(|e| e.get(&r.gp).copied())))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let missing_expected = match expected {
        Some(e) => checks
            .iter()
            .filter(|c| !e.contains_key(&c.gp))
            .map(|c| c.gp.clone())
            .chain(e.keys().filter(|gp| !rows.iter().any(|r| &r.gp == *gp)).cloned())
            .collect(),
        None => Vec::new(),
    };
    Ok(TableCheck {
        all_regularity_zero: checks.iter().all(|c| c.regularity == 0),
        mismatches: checks
            .iter()
            .filter(|c| c.agrees == Some(false))
            .map(|c| c.gp.clone())
            .collect(),
        missing_expected,
        rows: checks,
    })
}
