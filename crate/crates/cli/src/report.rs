//! Report records and their text and JSON renderings.

use std::fmt::Write as _;

use cohomreg_core::algebra::Presentation;
use cohomreg_core::regularity::{AInvariantReport, DefectReport, ExtDegree, VsqrStatus};
use serde::Serialize;

use crate::table::TableCheck;
use crate::Format;

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Text => self.text(),
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
        })
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
pub struct GroupRankReport {
    pub name: String,
    pub order: usize,
    pub prime: u32,
    pub exponent: u32,
    pub p_rank: u32,
    pub center_rank: u32,
    pub gtd: u32,
}

impl Render for GroupRankReport {
    fn text(&self) -> String {
        format!(
            "group {} (order {} = {}^{})\np-rank       {}\ncenter rank  {}\ngtd          {}\n",
            self.name, self.order, self.prime, self.exponent, self.p_rank, self.center_rank, self.gtd
        )
    }
}

#[derive(Serialize)]
pub struct SubgroupEntry {
    pub rank: u32,
    pub order: usize,
    pub elements: Vec<u32>,
}

#[derive(Serialize)]
pub struct AbeliansReport {
    pub name: String,
    pub prime: u32,
    pub p_rank: u32,
    pub subgroups: Vec<SubgroupEntry>,
}

impl Render for AbeliansReport {
    fn text(&self) -> String {
        let mut s = format!(
            "group {}: {} elementary abelian subgroups containing the central Omega_1, p-rank {}\n",
            self.name,
            self.subgroups.len(),
            self.p_rank
        );
        for sub in &self.subgroups {
            let _ = writeln!(s, "rank {}  order {:<4} elements {}", sub.rank, sub.order, join(&sub.elements));
        }
        s
    }
}

#[derive(Serialize)]
pub struct ScreenReport {
    pub prime: u32,
    pub order_exponent: u32,
    pub gtd: u32,
    pub feasible: bool,
}

impl Render for ScreenReport {
    fn text(&self) -> String {
        if self.feasible {
            "feasible (not excluded by the Jordan block screen)\n".into()
        } else {
            "infeasible (Lemma screen)\n".into()
        }
    }
}

#[derive(Serialize)]
pub struct ResolutionReport {
    pub name: String,
    pub prime: u32,
    pub max_degree: usize,
    pub betti: Vec<usize>,
    pub minimal: bool,
}

impl Render for ResolutionReport {
    fn text(&self) -> String {
        format!(
            "group {} over F_{}\nbetti numbers 0..{}: {}\nminimal: {}\n",
            self.name,
            self.prime,
            self.max_degree,
            join(&self.betti),
            if self.minimal { "yes" } else { "no" }
        )
    }
}

#[derive(Serialize)]
pub struct HilbertReport {
    pub name: String,
    pub prime: u32,
    pub hilbert: Vec<usize>,
}

impl Render for HilbertReport {
    fn text(&self) -> String {
        format!(
            "ring {} over F_{}\nhilbert function 0..{}: {}\n",
            self.name,
            self.prime,
            self.hilbert.len().saturating_sub(1),
            join(&self.hilbert)
        )
    }
}

/// The JSON schema of a ring report has exactly these keys.
#[derive(Serialize)]
pub struct RingReport {
    pub name: String,
    pub prime: u32,
    pub krull_dimension: usize,
    pub depth: usize,
    pub delta: usize,
    pub a_invariants: Vec<ExtDegree>,
    pub regularity: i64,
    pub vsqr: VsqrStatus,
    pub parameters: Vec<String>,
    pub computed_through_degree: u32,
    #[serde(skip)]
    extra: RingExtra,
}

struct RingExtra {
    degrees: Vec<u32>,
    multipliers: Vec<u32>,
    tops: Vec<ExtDegree>,
    defect: Option<DefectReport>,
}

impl RingReport {
    pub fn new(name: String, ring: &Presentation, r: &AInvariantReport, defect: Option<DefectReport>) -> Self {
        RingReport {
            name,
            prime: ring.prime(),
            krull_dimension: r.krull_dimension,
            depth: r.depth,
            delta: r.delta,
            a_invariants: r.a.clone(),
            regularity: r.regularity,
            vsqr: r.vsqr.clone(),
            parameters: r.system.format(ring),
            computed_through_degree: r.computed_through_degree,
            extra: RingExtra {
                degrees: r.system.degrees.clone(),
                multipliers: r.system.power_multipliers.clone(),
                tops: r.t.clone(),
                defect,
            },
        }
    }
}

impl Render for RingReport {
    fn text(&self) -> String {
        let mut s = format!("ring {} over F_{}\n", self.name, self.prime);
        let _ = writeln!(s, "parameters    {}", join(&self.parameters));
        let _ = writeln!(s, "degrees       {}", join(&self.extra.degrees));
        if self.extra.multipliers.iter().any(|&m| m > 1) {
            let _ = writeln!(s, "powers        {}", join(&self.extra.multipliers));
        }
        let _ = writeln!(s, "kernel tops   {}", join(&self.extra.tops));
        let _ = writeln!(s, "a-invariants  {}", join(&self.a_invariants));
        let _ = writeln!(
            s,
            "K {}  depth {}  delta {}  regularity {}",
            self.krull_dimension, self.depth, self.delta, self.regularity
        );
        let _ = writeln!(s, "VSQR          {} (bounds {})", self.vsqr.status, join(&self.vsqr.bounds));
        if let Some(d) = &self.extra.defect {
            let _ = writeln!(s, "gtd {}  excess {}", d.gtd, d.excess);
        }
        let _ = writeln!(s, "computed through degree {}", self.computed_through_degree);
        s
    }
}

#[derive(Serialize)]
pub struct VsqrReport {
    pub name: String,
    pub prime: u32,
    pub parameters: Vec<String>,
    pub degrees: Vec<u32>,
    pub vsqr: VsqrStatus,
}

impl Render for VsqrReport {
    fn text(&self) -> String {
        let mut s = format!("ring {} over F_{}\n", self.name, self.prime);
        let _ = writeln!(s, "parameters  {}", join(&self.parameters));
        let _ = writeln!(s, "bounds      {}", join(&self.vsqr.bounds));
        let _ = writeln!(s, "witnesses   {}", join(&self.vsqr.witnesses));
        let _ = writeln!(
            s,
            "VSQR {} (checked through degree {})",
            self.vsqr.status, self.vsqr.certified_through
        );
        s
    }
}

impl Render for TableCheck {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>6} {:>2} {:>24}  {:>3} {:>5} {:>5}  expected K d delta",
            "gp", "K", "last four a-invariants", "reg", "depth", "delta"
        );
        for r in &self.rows {
            let tail = &r.a_invariants[r.a_invariants.len().saturating_sub(4)..];
            let tail: Vec<String> = tail.iter().map(|a| format!("{a:>5}")).collect();
            let exp = match (r.expected, r.agrees) {
                (Some(e), Some(true)) => format!("{} {} {}  ok", e.krull_dimension, e.depth, e.delta),
                (Some(e), _) => format!("{} {} {}  MISMATCH", e.krull_dimension, e.depth, e.delta),
                (None, _) => "-".into(),
            };
            let _ = writeln!(
                s,
                "{:>6} {:>2} {:>24}  {:>3} {:>5} {:>5}  {}",
                r.gp,
                r.krull_dimension,
                tail.join(" "),
                r.regularity,
                r.depth,
                r.delta,
                exp
            );
        }
        let zero = self.rows.iter().filter(|r| r.regularity == 0).count();
        let _ = write!(s, "{} rows, regularity 0 in {}", self.rows.len(), zero);
        let compared = self.rows.iter().filter(|r| r.agrees.is_some()).count();
        if compared > 0 {
            let _ = write!(
                s,
                "; {} of {} agree with the expected table",
                compared - self.mismatches.len(),
                compared
            );
        }
        s.push('\n');
        if !self.mismatches.is_empty() {
            let _ = writeln!(s, "mismatched: {}", self.mismatches.join(", "));
        }
        if !self.missing_expected.is_empty() {
            let _ = writeln!(s, "present in only one table: {}", self.missing_expected.join(", "));
        }
        s
    }
}
