//! Dickson invariants against brute force over GL_s(F_p).

use cohomreg_core::algebra::{FreeAlgebra, Polynomial};
use cohomreg_core::linalg::{Fp, MatrixGFp};
use cohomreg_core::regularity::{dickson_invariants, dickson_polynomial_degree};

fn all_invertible(s: usize, p: u32) -> Vec<Vec<Vec<u8>>> {
    let field = Fp::new(p).unwrap();
    let total = (p as usize).pow((s * s) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let rows: Vec<Vec<u8>> = (0..s)
            .map(|_| {
                (0..s)
                    .map(|_| {
                        let v = (c % p as usize) as u8;
                        c /= p as usize;
                        v
                    })
                    .collect()
            })
            .collect();
        if MatrixGFp::from_residue_rows(&field, s, &rows).rank() == s {
            out.push(rows);
        }
    }
    out
}

/// Images `t_k -> Σ_l m[k][l] * t'_l` in `target`.
fn linear_images(source_vars: usize, m: &[Vec<u8>], target: &FreeAlgebra) -> Vec<Polynomial> {
    (0..source_vars)
        .map(|k| {
            m[k].iter().enumerate().fold(Polynomial::zero(), |acc, (l, &c)| {
                target.add(&acc, &target.scale(&target.generator(l), c))
            })
        })
        .collect()
}

#[test]
fn invariant_under_every_invertible_substitution() {
    for (s, p) in [(1usize, 2u32), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let d = dickson_invariants(s as u32, p).unwrap();
        for g in all_invertible(s, p) {
            let images = linear_images(s, &g, &d.ring);
            for inv in &d.invariants {
                assert_eq!(&d.ring.substitute(inv, &d.ring, &images), inv, "s={s} p={p}");
            }
        }
    }
}

/// Dimension of the GL-invariants in each polynomial degree, from the
/// common kernel of `g - 1` on the monomial basis.
fn invariant_dimensions(s: usize, p: u32, max_poly_degree: u32) -> Vec<usize> {
    let t_deg = if p == 2 { 1 } else { 2 };
    let ring = FreeAlgebra::new(p, (1..=s).map(|i| (format!("t{i}"), t_deg)).collect()).unwrap();
    let field = Fp::new(p).unwrap();
    let group = all_invertible(s, p);
    (0..=max_poly_degree)
        .map(|pd| {
            let monos = ring.monomials_of_degree(pd * t_deg);
            let coords = |f: &Polynomial| -> Vec<u8> {
                monos
                    .iter()
                    .map(|m| f.terms().iter().find(|(n, _)| n == m).map_or(0, |(_, c)| *c))
                    .collect()
            };
            let mut rows: Vec<Vec<u8>> = Vec::new();
            for g in &group {
                let images = linear_images(s, g, &ring);
                let cols: Vec<Vec<u8>> = monos
                    .iter()
                    .map(|m| {
                        let f = ring.monomial(m.clone());
                        let moved = ring.sub(&ring.substitute(&f, &ring, &images), &f);
                        coords(&moved)
                    })
                    .collect();
                let mat = MatrixGFp::from_columns(&field, monos.len(), &cols);
                for r in 0..mat.rows() {
                    rows.push(mat.row(r).to_vec());
                }
            }
            MatrixGFp::from_residue_rows(&field, monos.len(), &rows)
                .kernel_basis()
                .len()
        })
        .collect()
}

#[test]
fn degrees_match_invariant_space_oracle() {
    // F_2[t1,t2]^GL: new invariants first appear in degrees 2 and 3
    assert_eq!(invariant_dimensions(2, 2, 3), vec![1, 0, 1, 1]);
    let d = dickson_invariants(2, 2).unwrap();
    let degs: Vec<_> = d.invariants.iter().map(|f| d.ring.homogeneous_degree(f).unwrap().unwrap()).collect();
    assert_eq!(degs, vec![2, 3]);

    // F_3[t1,t2]^GL: only degrees 0, 6 and 8 up to 8
    assert_eq!(invariant_dimensions(2, 3, 8), vec![1, 0, 0, 0, 0, 0, 1, 0, 1]);
    let d = dickson_invariants(2, 3).unwrap();
    let degs: Vec<_> = d.invariants.iter().map(|f| d.ring.homogeneous_degree(f).unwrap().unwrap() / 2).collect();
    assert_eq!(degs, vec![6, 8]);
}

#[test]
fn degree_formula_for_small_ranks() {
    for p in [2u32, 3] {
        for s in 1..=3u32 {
            let d = dickson_invariants(s, p).unwrap();
            let t_deg = if p == 2 { 1 } else { 2 };
            for (i, f) in d.invariants.iter().enumerate() {
                let want = (p.pow(s) - p.pow(s - 1 - i as u32)) * t_deg;
                assert_eq!(d.ring.homogeneous_degree(f), Ok(Some(want)));
                assert_eq!(dickson_polynomial_degree(s, p, i as u32 + 1), (want / t_deg) as u64);
            }
        }
    }
}

#[test]
fn restriction_to_subspaces() {
    for (s, p) in [(2usize, 2u32), (3, 2), (2, 3)] {
        let d = dickson_invariants(s as u32, p).unwrap();
        let t_deg = if p == 2 { 1 } else { 2 };
        for g in all_invertible(s, p) {
            for j in 1..=s {
                // the subspace spanned by the first j columns of g
                let sub = FreeAlgebra::new(p, (1..=j).map(|i| (format!("w{i}"), t_deg)).collect()).unwrap();
                let cols: Vec<Vec<u8>> = g.iter().map(|row| row[..j].to_vec()).collect();
                let images = linear_images(s, &cols, &sub);
                for (i, inv) in d.invariants.iter().enumerate() {
                    let restricted = d.ring.substitute(inv, &sub, &images);
                    assert_eq!(restricted.is_zero(), j < i + 1, "s={s} p={p} j={j} i={}", i + 1);
                }
            }
        }
    }
}
