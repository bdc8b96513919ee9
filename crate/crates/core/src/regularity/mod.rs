//! a-invariants, regularity and depth of a presented algebra from a
//! filter-regular system of parameters, using only degreewise kernels of
//! multiplication maps.
//!
//! Level j of a system `ζ_1..ζ_K` is the algebra `M_j = A/(ζ_1..ζ_j)`.
//! For j < K its kernel top `t_j` is the top degree of `Ann_{M_j}(ζ_{j+1})`;
//! `t_K` is the top degree of `M_K` itself. The a-invariants are then
//! `a^j = t_j - (n_1 + ... + n_j)` once every step of the recursion is
//! usable, which may require replacing a parameter by a power.

mod dickson;
mod restriction;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use dickson::{dickson_invariants, dickson_invariants_in, dickson_polynomial_degree, DicksonInvariants};
pub use restriction::{
    check_weak_rank_restriction, complete_sop, lift_with_restrictions, BlockDiagnostic,
    WeakRankReport,
};

use crate::algebra::{Polynomial, Presentation};
use crate::error::{Error, Result};
use crate::group::PGroupProfile;

/// Default number of parameter doublings before giving up.
pub const DEFAULT_POWER_CAP: u32 = 4;

/// An integer degree or −∞ (the top degree of a zero module).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtDegree {
    NegInfinity,
    Finite(i64),
}

impl ExtDegree {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtDegree::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtDegree::Finite(v) => Some(v),
            ExtDegree::NegInfinity => None,
        }
    }

    /// `−∞ + n = −∞`.
    pub fn plus(self, n: i64) -> ExtDegree {
        match self {
            ExtDegree::Finite(v) => ExtDegree::Finite(v + n),
            ExtDegree::NegInfinity => ExtDegree::NegInfinity,
        }
    }

    pub fn max_of(items: impl IntoIterator<Item = ExtDegree>) -> ExtDegree {
        items.into_iter().max().unwrap_or(ExtDegree::NegInfinity)
    }
}

impl Ord for ExtDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtDegree::NegInfinity, ExtDegree::NegInfinity) => Ordering::Equal,
            (ExtDegree::NegInfinity, _) => Ordering::Less,
            (_, ExtDegree::NegInfinity) => Ordering::Greater,
            (ExtDegree::Finite(a), ExtDegree::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for ExtDegree {
    fn from(v: i64) -> Self {
        ExtDegree::Finite(v)
    }
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDegree::Finite(v) => f.pad(&v.to_string()),
            ExtDegree::NegInfinity => f.pad("-inf"),
        }
    }
}

impl std::str::FromStr for ExtDegree {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        match s {
            "-inf" | "-infty" | "-infinity" | "−∞" => Ok(ExtDegree::NegInfinity),
            _ => s
                .parse()
                .map(ExtDegree::Finite)
                .map_err(|_| format!("not a degree: `{s}`")),
        }
    }
}

impl Serialize for ExtDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtDegree::Finite(v) => s.serialize_i64(*v),
            ExtDegree::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtDegree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExtDegree::Finite(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Ordered homogeneous parameters of positive degree, possibly after some
/// of them were replaced by powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSystem {
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub power_multipliers: Vec<u32>,
}

impl ParameterSystem {
    pub fn new(a: &Presentation, elements: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(elements.len());
        for z in &elements {
            let d = a.degree_of(z)?;
            if d == 0 {
                return Err(Error::NotHomogeneous(format!(
                    "parameter `{}` has degree 0",
                    a.format(z)
                )));
            }
            degrees.push(d);
        }
        let power_multipliers = vec![1; elements.len()];
        Ok(ParameterSystem {
            elements,
            degrees,
            power_multipliers,
        })
    }

    /// The parameters declared in the ring file.
    pub fn from_presentation(a: &Presentation) -> Result<Self> {
        Self::new(a, a.params().to_vec())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Replaces parameter `i` by its square.
    pub fn square(&mut self, a: &Presentation, i: usize) {
        let z = &self.elements[i];
        self.elements[i] = a.ring().mul(z, z);
        self.degrees[i] *= 2;
        self.power_multipliers[i] *= 2;
    }

    pub fn push(&mut self, a: &Presentation, z: Polynomial) -> Result<()> {
        let mut extra = ParameterSystem::new(a, vec![z])?;
        self.elements.append(&mut extra.elements);
        self.degrees.append(&mut extra.degrees);
        self.power_multipliers.append(&mut extra.power_multipliers);
        Ok(())
    }

    /// `Σ n_i + max n_i + 2`.
    pub fn default_cap(&self) -> u32 {
        default_cap(&self.degrees)
    }

    pub fn format(&self, a: &Presentation) -> Vec<String> {
        self.elements.iter().map(|z| a.format(z)).collect()
    }
}

fn default_cap(degrees: &[u32]) -> u32 {
    degrees.iter().sum::<u32>() + degrees.iter().copied().max().unwrap_or(0) + 2
}

fn partial_sums(degrees: &[u32]) -> Vec<i64> {
    let mut sums = vec![0i64];
    for &n in degrees {
        sums.push(sums.last().unwrap() + n as i64);
    }
    sums
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VsqrOutcome {
    Holds,
    Fails,
    Undetermined,
}

impl fmt::Display for VsqrOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VsqrOutcome::Holds => "holds",
            VsqrOutcome::Fails => "fails",
            VsqrOutcome::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VsqrStatus {
    pub status: VsqrOutcome,
    /// `b_i = n_1 + ... + n_i + d_i` for i = 0..K.
    pub bounds: Vec<i64>,
    /// Observed kernel tops, one per level reached.
    pub witnesses: Vec<ExtDegree>,
    pub certified_through: u32,
}

impl VsqrStatus {
    /// Compares kernel tops with the bounds for the given degrees.
    pub fn from_tops(degrees: &[u32], tops: &[ExtDegree], cap: u32) -> Self {
        let bounds = vsqr_bounds(degrees);
        let fails = tops
            .iter()
            .zip(&bounds)
            .any(|(&t, &b)| t > ExtDegree::Finite(b));
        let status = if fails {
            VsqrOutcome::Fails
        } else if tops.len() < bounds.len() {
            VsqrOutcome::Undetermined
        } else {
            VsqrOutcome::Holds
        };
        VsqrStatus {
            status,
            bounds,
            witnesses: tops.to_vec(),
            certified_through: cap,
        }
    }

    /// First level whose witness exceeds its bound.
    pub fn failing_level(&self) -> Option<usize> {
        self.witnesses
            .iter()
            .zip(&self.bounds)
            .position(|(&t, &b)| t > ExtDegree::Finite(b))
    }
}

/// `d_i = -i - 1` for i < K and `d_K = -K`.
pub fn vsqr_bounds(degrees: &[u32]) -> Vec<i64> {
    let k = degrees.len();
    partial_sums(degrees)
        .into_iter()
        .enumerate()
        .map(|(i, n)| if i == k { n - k as i64 } else { n - i as i64 - 1 })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInvariantReport {
    pub krull_dimension: usize,
    pub a: Vec<ExtDegree>,
    pub t: Vec<ExtDegree>,
    pub depth: usize,
    pub delta: usize,
    pub regularity: i64,
    pub excess: Option<i64>,
    pub vsqr: VsqrStatus,
    /// The system actually used, after any power raising.
    pub system: ParameterSystem,
    pub computed_through_degree: u32,
}

/// Top degree of `Ann_a(z)` within `cap`, or −∞ when the annihilator
/// vanishes in every degree `d <= cap - |z|`.
///
/// The annihilator counts as finite only if it vanishes on the last
/// `max generator degree` degrees examined; otherwise z does not look
/// filter-regular and `UnboundedWithinCap` is returned.
pub fn annihilator_top_degree(a: &Presentation, z: &Polynomial, cap: u32) -> Result<ExtDegree> {
    annihilator_at_level(a, z, cap, 0)
}

fn annihilator_at_level(a: &Presentation, z: &Polynomial, cap: u32, level: usize) -> Result<ExtDegree> {
    let n = a.degree_of(z)?;
    let window = a.ring().max_generator_degree().max(1);
    if cap < n + window - 1 {
        return Err(Error::UnboundedWithinCap { level, cap });
    }
    let last = cap - n;
    let mut top = ExtDegree::NegInfinity;
    for d in 0..=last {
        let m = a.multiplication_matrix(z, d)?;
        if m.cols() > m.rank() {
            top = ExtDegree::Finite(d as i64);
        }
    }
    if top >= ExtDegree::Finite(last as i64 + 1 - window as i64) {
        return Err(Error::UnboundedWithinCap { level, cap });
    }
    Ok(top)
}

/// Top nonzero degree of `a`, provided it vanishes on a closing window
/// ending at `cap`.
pub fn quotient_top_degree(a: &Presentation, cap: u32) -> Option<ExtDegree> {
    let window = a.ring().max_generator_degree().max(1);
    let hf = a.hilbert_function(cap);
    let closing_start = (cap + 1).saturating_sub(window) as usize;
    if hf[closing_start..].iter().any(|&v| v > 0) {
        return None;
    }
    Some(ExtDegree::max_of(
        hf.iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(d, _)| ExtDegree::Finite(d as i64)),
    ))
}

/// Kernel top of one level of the system.
pub fn level_top(a: &Presentation, ps: &ParameterSystem, level: usize, cap: u32) -> Result<ExtDegree> {
    let q = a.quotient_by(&ps.elements[..level])?;
    if level < ps.len() {
        annihilator_at_level(&q, &ps.elements[level], cap, level)
    } else {
        quotient_top_degree(&q, cap).ok_or(Error::NotSystemOfParameters { cap })
    }
}

/// Kernel tops `t_0..t_K` of every level.
pub fn filter_regular_check(a: &Presentation, ps: &ParameterSystem, cap: u32) -> Result<Vec<ExtDegree>> {
    if ps.is_empty() {
        return Err(Error::InconsistentInputs("empty parameter system".into()));
    }
    // the sop property is checked first: it is the cheaper failure to report
    let last = level_top(a, ps, ps.len(), cap)?;
    let mut tops = Vec::with_capacity(ps.len() + 1);
    for level in 0..ps.len() {
        tops.push(level_top(a, ps, level, cap)?);
    }
    tops.push(last);
    Ok(tops)
}

/// Compares kernel tops with the very strong quasi-regularity bounds.
/// A level whose kernel does not close within the cap makes the status
/// undetermined.
pub fn vsqr_check(a: &Presentation, ps: &ParameterSystem, cap: u32) -> Result<VsqrStatus> {
    match filter_regular_check(a, ps, cap) {
        Ok(tops) => Ok(VsqrStatus::from_tops(&ps.degrees, &tops, cap)),
        Err(Error::UnboundedWithinCap { level, .. }) => {
            let mut tops = Vec::with_capacity(level);
            for l in 0..level {
                tops.push(level_top(a, ps, l, cap)?);
            }
            Ok(VsqrStatus::from_tops(&ps.degrees, &tops, cap))
        }
        Err(e) => Err(e),
    }
}

/// Outcome of the a-invariant recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recursion {
    pub t: Vec<ExtDegree>,
    pub a: Vec<ExtDegree>,
    pub degrees: Vec<u32>,
    pub power_multipliers: Vec<u32>,
    /// Steps `j -> j+1` that were found borderline or violated, in order.
    pub raised_at: Vec<usize>,
}

/// Runs the recursion over an arbitrary source of kernel tops.
///
/// `tops(level, multipliers)` returns `t_level` for the system whose i-th
/// parameter is raised to `multipliers[i]`. The step from level j to j+1
/// is accepted when `t_{j+1} > t_j` (equivalently `a^{j+1} + n_{j+1} > a^j`),
/// or when `t_j = −∞`. Otherwise `ζ_{j+1}` is squared and levels from j on
/// are recomputed. More than `power_cap` squarings in total is an error.
pub fn recursive_a_invariants<F>(base_degrees: &[u32], power_cap: u32, mut tops: F) -> Result<Recursion>
where
    F: FnMut(usize, &[u32]) -> Result<ExtDegree>,
{
    let k = base_degrees.len();
    let mut mult = vec![1u32; k];
    let mut t: Vec<ExtDegree> = Vec::with_capacity(k + 1);
    let mut raised_at = Vec::new();
    while t.len() <= k {
        let level = t.len();
        t.push(tops(level, &mult)?);
        if level == 0 {
            continue;
        }
        let j = level - 1;
        if t[j] == ExtDegree::NegInfinity || t[level] > t[j] {
            continue;
        }
        if raised_at.len() as u32 >= power_cap {
            return Err(Error::PowerRaisingCapExceeded { cap: power_cap });
        }
        raised_at.push(j);
        mult[j] *= 2;
        t.truncate(j);
    }
    let degrees: Vec<u32> = base_degrees.iter().zip(&mult).map(|(n, m)| n * m).collect();
    let sums = partial_sums(&degrees);
    let a = t.iter().zip(&sums).map(|(&tj, &s)| tj.plus(-s)).collect();
    Ok(Recursion {
        t,
        a,
        degrees,
        power_multipliers: mult,
        raised_at,
    })
}

/// a-invariants, depth, defect and regularity of `a` from the system `ps`.
/// `cap` defaults to `Σn_i + max n_i + 2` for the degrees in use.
pub fn a_invariants(
    a: &Presentation,
    ps: &ParameterSystem,
    cap: Option<u32>,
    power_cap: u32,
) -> Result<AInvariantReport> {
    if ps.is_empty() {
        return Err(Error::InconsistentInputs("empty parameter system".into()));
    }
    let cap_for = |degrees: &[u32]| cap.unwrap_or_else(|| default_cap(degrees));
    // sop check up front, on the system as given
    level_top(a, ps, ps.len(), cap_for(&ps.degrees))?;

    let mut cached: Option<(Vec<u32>, ParameterSystem)> = None;
    let rec = recursive_a_invariants(&ps.degrees, power_cap, |level, mult| {
        let sys = match &cached {
            Some((m, s)) if m == mult => s.clone(),
            _ => {
                let mut s = ps.clone();
                for (i, &m) in mult.iter().enumerate() {
                    let mut cur = 1;
                    while cur < m {
                        s.square(a, i);
                        cur *= 2;
                    }
                }
                cached = Some((mult.to_vec(), s.clone()));
                s
            }
        };
        level_top(a, &sys, level, cap_for(&sys.degrees))
    })?;
    let (_, system) = cached.expect("recursion visits at least one level");
    let used_cap = cap_for(&system.degrees);
    let (depth, delta) = depth_delta_from_a(&rec.a, ps.len())?;
    let regularity = regularity_from_a(&rec.a)?;
    Ok(AInvariantReport {
        krull_dimension: ps.len(),
        vsqr: VsqrStatus::from_tops(&system.degrees, &rec.t, used_cap),
        a: rec.a,
        t: rec.t,
        depth,
        delta,
        regularity,
        excess: None,
        system,
        computed_through_degree: used_cap,
    })
}

/// `max_i (a^i + i)`, skipping −∞ entries. The last entry must be finite.
pub fn regularity_from_a(a: &[ExtDegree]) -> Result<i64> {
    match a.last() {
        Some(ExtDegree::Finite(_)) => {}
        _ => {
            return Err(Error::InconsistentInputs(
                "top a-invariant must be finite".into(),
            ))
        }
    }
    Ok(a.iter()
        .enumerate()
        .filter_map(|(i, x)| x.finite().map(|v| v + i as i64))
        .max()
        .expect("last entry is finite"))
}

/// `(depth, delta)` where depth is the first index with a finite
/// a-invariant and `delta = K - depth`.
pub fn depth_delta_from_a(a: &[ExtDegree], k: usize) -> Result<(usize, usize)> {
    if a.len() != k + 1 {
        return Err(Error::InconsistentInputs(format!(
            "expected {} a-invariants for Krull dimension {k}, got {}",
            k + 1,
            a.len()
        )));
    }
    if !a[k].is_finite() {
        return Err(Error::InconsistentInputs(
            "top a-invariant must be finite".into(),
        ));
    }
    let depth = a.iter().position(|x| x.is_finite()).expect("a^K is finite");
    Ok((depth, k - depth))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub gtd: u32,
    pub delta: usize,
    pub excess: i64,
}

/// Combines group and ring data: `e = depth - center_rank`, checking
/// `δ + e = gtd`, `0 <= e <= gtd` and `center_rank <= depth <= K = p_rank`.
pub fn defect_report(profile: &PGroupProfile, report: &AInvariantReport) -> Result<DefectReport> {
    let depth = report.depth as i64;
    let k = report.krull_dimension as i64;
    let excess = depth - profile.center_rank as i64;
    let gtd = profile.gtd as i64;
    let problems = [
        (k != profile.p_rank as i64, "Krull dimension differs from the p-rank"),
        (excess < 0, "depth is below the center rank"),
        (excess > gtd, "excess exceeds the defect bound"),
        (report.delta as i64 + excess != gtd, "delta + excess differs from gtd"),
    ];
    if let Some((_, msg)) = problems.iter().find(|(bad, _)| *bad) {
        return Err(Error::InconsistentInputs(format!(
            "{msg} (K {k}, depth {depth}, delta {}, p-rank {}, center rank {}, gtd {gtd})",
            report.delta, profile.p_rank, profile.center_rank
        )));
    }
    Ok(DefectReport {
        gtd: profile.gtd,
        delta: report.delta,
        excess,
    })
}

/// Fills `report.excess` from the group profile.
pub fn attach_excess(profile: &PGroupProfile, report: &mut AInvariantReport) -> Result<DefectReport> {
    let d = defect_report(profile, report)?;
    report.excess = Some(d.excess);
    Ok(d)
}
