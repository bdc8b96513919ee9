//! Dickson invariants of F_p[t_1..t_s], from the linearized polynomial
//! `f_s(X) = Π_{v ∈ span(t_1..t_s)} (X - v) = X^{p^s} + Σ_k c_k X^{p^k}`
//! built by `f_k(X) = f_{k-1}(X)^p - f_{k-1}(t_k)^{p-1} f_{k-1}(X)`.
//!
//! Indexing runs by increasing degree: the i-th invariant (1-based) is
//! `(-1)^i c_{s-i}`, of polynomial degree `p^s - p^{s-i}`.

use crate::algebra::{FreeAlgebra, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DicksonInvariants {
    /// `t_1..t_s`, each of degree 1 at p = 2 and 2 at odd p.
    pub ring: FreeAlgebra,
    pub invariants: Vec<Polynomial>,
}

/// Degree in the t variables of the i-th invariant (1-based).
pub fn dickson_polynomial_degree(s: u32, p: u32, i: u32) -> u64 {
    (p as u64).pow(s) - (p as u64).pow(s - i)
}

pub fn dickson_invariants(s: u32, p: u32) -> Result<DicksonInvariants> {
    if s == 0 {
        return Err(Error::InconsistentInputs("rank must be positive".into()));
    }
    let t_degree = if p == 2 { 1 } else { 2 };
    let ring = FreeAlgebra::new(p, (1..=s).map(|i| (format!("t{i}"), t_degree)).collect())?;
    let invariants = dickson_invariants_in(&ring, s as usize);
    Ok(DicksonInvariants { ring, invariants })
}

/// Dickson invariants in the first `s` generators of `ring`, which must be
/// polynomial (even degree at odd p).
pub fn dickson_invariants_in(ring: &FreeAlgebra, s: usize) -> Vec<Polynomial> {
    let p = ring.prime();
    assert!(s <= ring.ngens() && (0..s).all(|i| !ring.is_exterior(i)));
    // coeffs[k] multiplies X^{p^k}
    let mut coeffs = vec![ring.one()];
    for k in 0..s {
        let tk = ring.generator(k);
        let mut v = Polynomial::zero();
        let mut power = tk.clone();
        for c in &coeffs {
            v = ring.add(&v, &ring.mul(c, &power));
            power = ring.pow(&power, p);
        }
        let vp = ring.pow(&v, p - 1);
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        for i in 0..=coeffs.len() {
            let frob = if i == 0 { Polynomial::zero() } else { ring.pow(&coeffs[i - 1], p) };
            let lower = coeffs.get(i).map(|c| ring.mul(&vp, c)).unwrap_or_default();
            next.push(ring.sub(&frob, &lower));
        }
        coeffs = next;
    }
    (1..=s)
        .map(|i| {
            let c = &coeffs[s - i];
            if i % 2 == 1 {
                ring.neg(c)
            } else {
                c.clone()
            }
        })
        .collect()
}
