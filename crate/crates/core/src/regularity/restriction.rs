//! Parameter checks and constructions driven by restrictions to
//! elementary abelian subgroups.

use serde::Serialize;

use super::{default_cap, quotient_top_degree, ParameterSystem};
use crate::algebra::{Polynomial, Presentation, RestrictionBlock};
use crate::error::{Error, Result};
use crate::linalg::MatrixGFp;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDiagnostic {
    pub label: String,
    pub rank: u32,
    /// Images of the first `rank` parameters form an hsop of the target.
    pub hsop: bool,
    /// Images of the remaining parameters vanish.
    pub tail_vanishes: bool,
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakRankReport {
    pub holds: bool,
    pub blocks: Vec<BlockDiagnostic>,
}

impl WeakRankReport {
    pub fn failing_blocks(&self) -> impl Iterator<Item = &str> {
        self.blocks
            .iter()
            .filter(|b| !(b.hsop && b.tail_vanishes))
            .map(|b| b.label.as_str())
    }
}

/// Degree past which a quotient of a block target by a genuine hsop of the
/// given degrees must vanish, plus a closing window.
fn hsop_cap(block: &RestrictionBlock, degrees: &[u32]) -> u32 {
    let target = block.target().ring();
    degrees.iter().sum::<u32>() + target.degrees().iter().sum::<u32>() + target.max_generator_degree()
}

/// For every restriction block of rank s: the images of `ζ_1..ζ_s` must
/// form an hsop of the target and the images of `ζ_{s+1}..ζ_K` must vanish.
///
/// Without a `cap`, each block uses a cap past the top degree any genuine
/// hsop quotient can reach, so the answer is decided. With a smaller
/// `cap` a non-terminating quotient gives `UndeterminedWithinCap`.
pub fn check_weak_rank_restriction(
    a: &Presentation,
    ps: &ParameterSystem,
    cap: Option<u32>,
) -> Result<WeakRankReport> {
    if a.restrictions().is_empty() {
        return Err(Error::MissingRestrictionBlock(
            "the ring declares no subgroup restrictions".into(),
        ));
    }
    let mut blocks = Vec::new();
    for block in a.restrictions() {
        let s = block.rank as usize;
        let mut diag = BlockDiagnostic {
            label: block.label.clone(),
            rank: block.rank,
            hsop: false,
            tail_vanishes: false,
            message: None,
        };
        if s > ps.len() {
            diag.message = Some(format!(
                "rank {s} exceeds the {} parameters supplied",
                ps.len()
            ));
            blocks.push(diag);
            continue;
        }
        let images = ps
            .elements
            .iter()
            .map(|z| block.restrict(a.ring(), z))
            .collect::<Result<Vec<_>>>()?;
        let target = block.target();
        diag.tail_vanishes = images[s..].iter().all(Polynomial::is_zero);
        if !diag.tail_vanishes {
            let i = images[s..].iter().position(|f| !f.is_zero()).unwrap() + s;
            diag.message = Some(format!(
                "parameter {} restricts to {}",
                i + 1,
                target.format(&images[i])
            ));
        }
        if images[..s].iter().any(Polynomial::is_zero) {
            diag.message.get_or_insert_with(|| "a leading parameter restricts to zero".into());
        } else {
            let needed = hsop_cap(block, &ps.degrees[..s]);
            let used = cap.unwrap_or(needed);
            let quotient = target.quotient_by(&images[..s])?;
            diag.hsop = quotient_top_degree(&quotient, used).is_some();
            if !diag.hsop {
                if used < needed {
                    return Err(Error::UndeterminedWithinCap(format!(
                        "block `{}`: quotient does not vanish through degree {used}",
                        block.label
                    )));
                }
                diag.message.get_or_insert_with(|| {
                    "leading parameters do not restrict to a system of parameters".into()
                });
            }
        }
        blocks.push(diag);
    }
    Ok(WeakRankReport {
        holds: blocks.iter().all(|b| b.hsop && b.tail_vanishes),
        blocks,
    })
}

/// An element of degree `d` whose restriction to each named block equals
/// the given target, or `None` when no such element exists in degree `d`.
pub fn lift_with_restrictions(
    a: &Presentation,
    targets: &[(&str, Polynomial)],
    d: u32,
) -> Result<Option<Polynomial>> {
    let piece = a.graded_piece(d);
    let basis: Vec<Polynomial> = piece
        .basis_monomials()
        .map(|m| a.ring().monomial(m.clone()))
        .collect();
    let field = a.ring().field().clone();

    // one block of rows per target: coordinates over the target's degree-d monomials
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (label, want) in targets {
        let block = a
            .restriction(label)
            .ok_or_else(|| Error::MissingRestrictionBlock(format!("no subgroup `{label}`")))?;
        let target = block.target();
        match target.ring().homogeneous_degree(want) {
            Ok(None) => {}
            Ok(Some(e)) if e == d => {}
            Ok(Some(e)) => return Err(Error::DegreeMismatch { expected: d, found: e }),
            Err(()) => return Err(Error::NotHomogeneous(target.format(want))),
        }
        let tpiece = target.graded_piece(d);
        let images = basis
            .iter()
            .map(|b| block.restrict(a.ring(), b).map(|f| tpiece.vector(&f)))
            .collect::<Result<Vec<_>>>()?;
        let rhs = tpiece.vector(want);
        for r in 0..tpiece.monomials().len() {
            let mut row: Vec<u8> = images.iter().map(|v| v[r]).collect();
            row.push(rhs[r]);
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Some(Polynomial::zero()));
    }
    let n = basis.len();
    let (reduced, pivots) = MatrixGFp::from_residue_rows(&field, n + 1, &rows).rref();
    if pivots.contains(&n) {
        return Ok(None);
    }
    let mut coords = vec![0u8; n];
    for (r, &c) in pivots.iter().enumerate() {
        coords[c] = reduced.get(r, n);
    }
    Ok(Some(piece.polynomial(a.ring(), &coords)))
}

/// Appends one element, found by enumerating normal-form combinations at
/// each search degree in turn, such that the full quotient terminates.
///
/// Combinations are visited as base-p counters `1..p^m`, with the first
/// standard monomial in the least significant digit.
pub fn complete_sop(
    a: &Presentation,
    partial: &ParameterSystem,
    search_degrees: &[u32],
    cap: Option<u32>,
) -> Result<ParameterSystem> {
    let base = a.quotient_by(&partial.elements)?;
    let p = a.prime() as u64;
    for &d in search_degrees {
        if d == 0 {
            continue;
        }
        let piece = base.graded_piece(d);
        let m = piece.dimension();
        let mut degrees = partial.degrees.clone();
        degrees.push(d);
        let used = cap.unwrap_or_else(|| default_cap(&degrees));
        let count = p.checked_pow(m as u32).unwrap_or(u64::MAX);
        for code in 1..count {
            let mut coords = vec![0u8; m];
            let mut c = code;
            for slot in coords.iter_mut() {
                *slot = (c % p) as u8;
                c /= p;
            }
            let z = piece.polynomial(a.ring(), &coords);
            let q = base.quotient_by(std::slice::from_ref(&z))?;
            if quotient_top_degree(&q, used).is_some() {
                let mut out = partial.clone();
                out.push(a, z)?;
                return Ok(out);
            }
        }
    }
    Err(Error::SearchExhausted(search_degrees.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;

    const D8: &str = "prime 2
gen x 1
gen y 1
gen w 2
rel x*y
param w
param x+y
subgroup C rank 1
restrict C x -> 0
restrict C y -> 0
restrict C w -> t1^2
subgroup V1 rank 2
restrict V1 x -> 0
restrict V1 y -> t2
restrict V1 w -> t1^2+t1*t2
subgroup V2 rank 2
restrict V2 x -> t2
restrict V2 y -> 0
restrict V2 w -> t1^2+t1*t2
";

    fn d8() -> Presentation {
        parse_presentation(D8).unwrap()
    }

    fn system(a: &Presentation, params: &[&str]) -> ParameterSystem {
        let els = params.iter().map(|s| a.parse_polynomial(s).unwrap()).collect();
        ParameterSystem::new(a, els).unwrap()
    }

    #[test]
    fn weak_rank_restriction_holds_for_d8() {
        let a = d8();
        let ps = ParameterSystem::from_presentation(&a).unwrap();
        let r = check_weak_rank_restriction(&a, &ps, None).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.blocks.len(), 3);
    }

    #[test]
    fn reordered_parameters_fail_on_the_center() {
        let a = d8();
        let r = check_weak_rank_restriction(&a, &system(&a, &["x+y", "w"]), None).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failing_blocks().collect::<Vec<_>>(), vec!["C"]);
        let r = check_weak_rank_restriction(&a, &system(&a, &["x", "w"]), None).unwrap();
        assert!(!r.holds);
        assert!(r.failing_blocks().any(|b| b == "V1"));
    }

    #[test]
    fn missing_blocks() {
        let a = parse_presentation("prime 2\ngen x 1\nparam x\n").unwrap();
        let ps = ParameterSystem::from_presentation(&a).unwrap();
        assert!(matches!(
            check_weak_rank_restriction(&a, &ps, None),
            Err(Error::MissingRestrictionBlock(_))
        ));
        let partial = parse_presentation("prime 2\ngen x 1\nparam x\nsubgroup C rank 1\n").unwrap();
        assert!(matches!(
            check_weak_rank_restriction(&partial, &ps, None),
            Err(Error::MissingRestrictionBlock(_))
        ));
    }

    #[test]
    fn full_rank_block_only_needs_hsop() {
        let a = parse_presentation(
            "prime 2\ngen x 1\ngen y 1\nparam x\nparam y\nsubgroup V rank 2\nrestrict V x -> t1\nrestrict V y -> t2\n",
        )
        .unwrap();
        let ps = ParameterSystem::from_presentation(&a).unwrap();
        assert!(check_weak_rank_restriction(&a, &ps, None).unwrap().holds);
        let bad = system(&a, &["x", "x"]);
        assert!(!check_weak_rank_restriction(&a, &bad, None).unwrap().holds);
        assert!(matches!(
            check_weak_rank_restriction(&a, &bad, Some(1)),
            Err(Error::UndeterminedWithinCap(_))
        ));
    }

    #[test]
    fn lift_examples() {
        let a = d8();
        let target = |s: &str| {
            a.restriction("V1").unwrap().target().parse_polynomial(s).unwrap()
        };
        let dick = target("t1^2+t1*t2+t2^2");
        let lifted = lift_with_restrictions(&a, &[("V1", dick.clone()), ("V2", dick)], 2)
            .unwrap()
            .unwrap();
        assert_eq!(a.format(&lifted), "x^2 + y^2 + w");

        let zero = lift_with_restrictions(&a, &[("V1", Polynomial::zero())], 3).unwrap();
        assert_eq!(zero, Some(Polynomial::zero()));

        assert_eq!(lift_with_restrictions(&a, &[("V1", target("t1"))], 1).unwrap(), None);
        assert_eq!(
            lift_with_restrictions(&a, &[("V1", target("t1"))], 2).unwrap_err(),
            Error::DegreeMismatch { expected: 2, found: 1 }
        );
    }

    #[test]
    fn completion_examples() {
        let a = d8();
        let partial = system(&a, &["w"]);
        let done = complete_sop(&a, &partial, &[1], None).unwrap();
        assert_eq!(done.format(&a), vec!["w", "x + y"]);

        let fx = parse_presentation("prime 2\ngen x 1\n").unwrap();
        let done = complete_sop(&fx, &system(&fx, &[]), &[1], None).unwrap();
        assert_eq!(done.format(&fx), vec!["x"]);

        let lines = parse_presentation("prime 2\ngen x 1\ngen y 1\nrel x*y\n").unwrap();
        let done = complete_sop(&lines, &system(&lines, &[]), &[1], None).unwrap();
        assert_eq!(done.format(&lines), vec!["x + y"]);

        let free2 = parse_presentation("prime 2\ngen x 1\ngen y 1\n").unwrap();
        assert_eq!(
            complete_sop(&free2, &system(&free2, &[]), &[1, 2], None).unwrap_err(),
            Error::SearchExhausted(vec![1, 2])
        );
    }
}
