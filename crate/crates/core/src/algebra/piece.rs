use std::collections::HashMap;

use super::poly::{FreeAlgebra, Monomial, Polynomial};
use crate::linalg::EchelonBasis;

/// One degree of a presented algebra: the monomials of that degree, the
/// reduced span of `{monomial * relation}` landing there, and the standard
/// monomials (non-pivot columns) that form a basis of the quotient.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    slice: EchelonBasis,
    basis: Vec<usize>,
    basis_pos: Vec<Option<usize>>,
}

impl GradedPiece {
    pub(crate) fn compute(ring: &FreeAlgebra, relations: &[(Polynomial, u32)], degree: u32) -> Self {
        let monomials = ring.monomials_of_degree(degree);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut slice = EchelonBasis::new(ring.field(), monomials.len());
        for (rel, rdeg) in relations {
            if *rdeg > degree {
                continue;
            }
            for m in ring.monomials_of_degree(degree - rdeg) {
                let prod = ring.mul(&ring.monomial(m), rel);
                let v = vector_in(&index, monomials.len(), &prod);
                slice.insert(&v);
            }
        }
        let basis: Vec<usize> = (0..monomials.len()).filter(|&c| !slice.is_pivot(c)).collect();
        let mut basis_pos = vec![None; monomials.len()];
        for (k, &c) in basis.iter().enumerate() {
            basis_pos[c] = Some(k);
        }
        GradedPiece {
            degree,
            monomials,
            index,
            slice,
            basis,
            basis_pos,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn slice_rank(&self) -> usize {
        self.slice.dim()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Standard monomials spanning this degree of the quotient.
    pub fn basis_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|&c| &self.monomials[c])
    }

    /// Coefficient vector of `f` over all monomials of this degree. Every
    /// term of `f` must have this degree.
    pub fn vector(&self, f: &Polynomial) -> Vec<u8> {
        vector_in(&self.index, self.monomials.len(), f)
    }

    /// Coordinates of `f` in the standard-monomial basis.
    pub fn coordinates(&self, f: &Polynomial) -> Vec<u8> {
        let mut v = self.vector(f);
        self.slice.reduce(&mut v);
        self.basis.iter().map(|&c| v[c]).collect()
    }

    pub fn polynomial(&self, ring: &FreeAlgebra, coords: &[u8]) -> Polynomial {
        let terms = coords
            .iter()
            .zip(&self.basis)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, &col)| (self.monomials[col].clone(), c))
            .collect();
        Polynomial::from_terms(ring.field(), terms)
    }

    pub fn normal_form(&self, ring: &FreeAlgebra, f: &Polynomial) -> Polynomial {
        let coords = self.coordinates(f);
        self.polynomial(ring, &coords)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.index
            .get(m)
            .is_some_and(|&c| self.basis_pos[c].is_some())
    }
}

fn vector_in(index: &HashMap<Monomial, usize>, len: usize, f: &Polynomial) -> Vec<u8> {
    let mut v = vec![0u8; len];
    for (m, c) in f.terms() {
        let i = *index
            .get(m)
            .expect("polynomial term outside the requested degree");
        v[i] = *c;
    }
    v
}
