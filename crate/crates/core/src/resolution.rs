//! Minimal free resolutions of the trivial module over F_p[G] for a
//! p-group G.
//!
//! F_p[G] is local with radical equal to the augmentation ideal I, so a
//! free module map is minimal exactly when its matrix entries all lie in I.
//! Each step takes the kernel K of the previous differential and picks
//! generators spanning a complement of I*K inside K (Nakayama).
//!
//! A free module F_p[G]^b is flattened to F_p^(N*b) with basis
//! `g ⊗ e_j` at index `g * b + j` (group-major).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{EchelonBasis, Fp, MatrixGFp};

/// Default number of resolution steps.
pub const DEFAULT_MAX_DEGREE: usize = 10;

/// An element of the group algebra F_p[G], as a coefficient per group
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coeffs: Vec<u8>,
}

impl AlgebraElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        AlgebraElement {
            coeffs: vec![0; group.order()],
        }
    }

    pub fn basis(group: &FiniteGroup, x: u32) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[x as usize] = 1;
        e
    }

    pub fn augmentation(&self, field: &Fp) -> u8 {
        self.coeffs.iter().fold(0, |acc, &c| field.add(acc, c))
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup, field: &Fp) -> Self {
        let mut out = Self::zero(group);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb != 0 {
                    let ab = group.mul(a as u32, b as u32) as usize;
                    out.coeffs[ab] = field.add(out.coeffs[ab], field.mul(ca, cb));
                }
            }
        }
        out
    }
}

/// N x N matrix of left multiplication by `x` on F_p[G].
pub fn regular_representation(group: &FiniteGroup, p: u32, x: u32) -> Result<MatrixGFp> {
    let field = Fp::new(p)?;
    let n = group.order();
    let mut m = MatrixGFp::zeros(&field, n, n);
    for h in 0..n as u32 {
        m.set(group.mul(x, h) as usize, h as usize, 1);
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct ResolutionState {
    field: Fp,
    group: Arc<FiniteGroup>,
    generators: Vec<u32>,
    betti: Vec<usize>,
    /// `maps[0]` is the augmentation F_p[G] -> F_p; `maps[i]` for i >= 1 is
    /// the differential F_i -> F_{i-1}.
    maps: Vec<MatrixGFp>,
}

impl ResolutionState {
    /// The state through degree 0: F_0 = F_p[G] with the augmentation map.
    pub fn new(group: Arc<FiniteGroup>, p: u32) -> Result<Self> {
        let field = Fp::new(p)?;
        if group.p_exponent(p).is_none() {
            return Err(Error::NotPGroup {
                order: group.order(),
                prime: p,
            });
        }
        let n = group.order();
        let mut aug = MatrixGFp::zeros(&field, 1, n);
        for h in 0..n {
            aug.set(0, h, 1);
        }
        Ok(ResolutionState {
            generators: group.generators(),
            field,
            group,
            betti: vec![1],
            maps: vec![aug],
        })
    }

    pub fn prime(&self) -> u32 {
        self.field.p()
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn maps(&self) -> &[MatrixGFp] {
        &self.maps
    }

    pub fn computed_degree(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Left action of `x` on a flattened vector of F_p[G]^rank.
    fn act(&self, x: u32, v: &[u8], rank: usize) -> Vec<u8> {
        let mut out = vec![0u8; v.len()];
        for h in 0..self.group.order() {
            let xh = self.group.mul(x, h as u32) as usize;
            out[xh * rank..(xh + 1) * rank].copy_from_slice(&v[h * rank..(h + 1) * rank]);
        }
        out
    }

    /// Computes the next free module and differential.
    pub fn extend(&mut self) {
        let top = self.computed_degree();
        let rank = self.betti[top];
        let dim = self.group.order() * rank;
        let kernel = self.maps[top].kernel_basis();

        let mut span = EchelonBasis::new(&self.field, dim);
        for v in &kernel {
            for &g in &self.generators {
                let mut w = self.act(g, v, rank);
                self.field.axpy(&mut w, self.field.neg(1), v);
                span.insert(&w);
            }
        }
        let mut chosen: Vec<Vec<u8>> = Vec::new();
        for v in &kernel {
            if span.insert(v) {
                chosen.push(v.clone());
            }
        }

        let new_rank = chosen.len();
        let n = self.group.order();
        let mut columns = vec![vec![0u8; dim]; n * new_rank];
        for g in 0..n as u32 {
            for (j, v) in chosen.iter().enumerate() {
                columns[g as usize * new_rank + j] = self.act(g, v, rank);
            }
        }
        let map = MatrixGFp::from_columns(&self.field, dim, &columns);
        self.betti.push(new_rank);
        self.maps.push(map);
    }

    pub fn extend_through(&mut self, degree: usize) {
        while self.computed_degree() < degree {
            self.extend();
        }
    }

    /// Sum over the group of the F_p[G]-coefficient in row block `i` of the
    /// image of free generator `j` under `maps[step]`.
    pub fn augmented_entry(&self, step: usize, i: usize, j: usize) -> u8 {
        let src_rank = self.betti[step];
        let dst_rank = self.betti[step - 1];
        let map = &self.maps[step];
        // column of generator e_j sitting at the identity element
        let col = j;
        debug_assert!(col < src_rank);
        (0..self.group.order()).fold(0u8, |acc, h| {
            self.field.add(acc, map.get(h * dst_rank + i, col))
        })
    }

    /// Whether every differential of degree >= 1 vanishes modulo the
    /// augmentation ideal.
    pub fn is_minimal(&self) -> bool {
        (1..self.maps.len()).all(|s| {
            (0..self.betti[s - 1])
                .all(|i| (0..self.betti[s]).all(|j| self.augmented_entry(s, i, j) == 0))
        })
    }

    /// Whether consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }
}

/// `(b_0, ..., b_max_degree)` for the trivial module over F_p[G].
pub fn betti_numbers(group: &FiniteGroup, p: u32, max_degree: usize) -> Result<Vec<usize>> {
    let mut state = ResolutionState::new(Arc::new(group.clone()), p)?;
    state.extend_through(max_degree);
    Ok(state.betti().to_vec())
}
