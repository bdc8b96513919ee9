//! Properties of presented algebras over random inputs.

use cohomreg_core::algebra::{parse_presentation, Polynomial, Presentation};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["a", "b", "c"];

fn fixture(name: &str) -> Presentation {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_presentation(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// A random homogeneous element of degree `d`, from a coefficient stream.
fn element(a: &Presentation, d: u32, coeffs: &[u8]) -> Polynomial {
    let terms = a
        .ring()
        .monomials_of_degree(d)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, &c)| (m, c % a.prime() as u8))
        .collect();
    Polynomial::from_terms(a.ring().field(), terms)
}

fn ring_text(p: u32, degrees: &[u32], order: &[usize], relations: &[String]) -> String {
    let mut s = format!("prime {p}\n");
    for &i in order {
        s += &format!("gen {} {}\n", NAMES[i], degrees[i]);
    }
    for r in relations {
        s += &format!("rel {r}\n");
    }
    s
}

prop_compose! {
    fn random_ring()(p in prop::sample::select(vec![2u32, 3]),
                     degrees in prop::collection::vec(1u32..=3, 3),
                     rel_degrees in prop::collection::vec(2u32..=4, 0..=2),
                     coeffs in prop::collection::vec(0u8..3, 24),
                     order in Just(vec![0usize, 1, 2]).prop_shuffle())
        -> (u32, Vec<u32>, Vec<String>, Vec<usize>)
    {
        let base = parse_presentation(&ring_text(p, &degrees, &[0, 1, 2], &[])).unwrap();
        let relations = rel_degrees
            .iter()
            .enumerate()
            .map(|(k, &d)| element(&base, d, &coeffs[k * 12..]))
            .filter(|f| !f.is_zero())
            .map(|f| base.format(&f))
            .collect();
        (p, degrees, relations, order)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hilbert_function_ignores_generator_order((p, degrees, rels, order) in random_ring()) {
        let a = parse_presentation(&ring_text(p, &degrees, &[0, 1, 2], &rels)).unwrap();
        let b = parse_presentation(&ring_text(p, &degrees, &order, &rels)).unwrap();
        prop_assert_eq!(a.hilbert_function(6), b.hilbert_function(6));
    }

    #[test]
    fn quotients_only_shrink((p, degrees, rels, _o) in random_ring(),
                             d in 1u32..=3, coeffs in prop::collection::vec(0u8..3, 12)) {
        let a = parse_presentation(&ring_text(p, &degrees, &[0, 1, 2], &rels)).unwrap();
        let z = element(&a, d, &coeffs);
        let q = a.quotient_by(&[z]).unwrap();
        for (x, y) in q.hilbert_function(6).into_iter().zip(a.hilbert_function(6)) {
            prop_assert!(x <= y);
        }
    }

    #[test]
    fn normal_form_is_a_projection((p, degrees, rels, _o) in random_ring(),
                                   d in 1u32..=5, c1 in prop::collection::vec(0u8..3, 12),
                                   c2 in prop::collection::vec(0u8..3, 12)) {
        let a = parse_presentation(&ring_text(p, &degrees, &[0, 1, 2], &rels)).unwrap();
        let f = element(&a, d, &c1);
        let g = element(&a, d, &c2);
        let nf = a.normal_form(&f).unwrap();
        prop_assert_eq!(a.normal_form(&nf).unwrap(), nf.clone());
        let sum = a.normal_form(&a.ring().add(&f, &g)).unwrap();
        let parts = a.ring().add(&nf, &a.normal_form(&g).unwrap());
        prop_assert_eq!(sum, parts);
        // f - nf(f) lies in the ideal
        prop_assert!(a.is_zero_element(&a.ring().sub(&f, &nf)).unwrap());
    }

    #[test]
    fn multiplication_matrices_compose(name in prop::sample::select(vec!["d8.ring", "q8.ring", "z3x3.ring", "z4.ring"]),
                                       n1 in 1u32..=3, n2 in 1u32..=3, d in 0u32..=4,
                                       c1 in prop::collection::vec(0u8..3, 12),
                                       c2 in prop::collection::vec(0u8..3, 12)) {
        let a = fixture(name);
        let z1 = element(&a, n1, &c1);
        let z2 = element(&a, n2, &c2);
        prop_assume!(!z1.is_zero() && !z2.is_zero());
        let lhs = a.multiplication_matrix(&z2, d + n1).unwrap()
            .mul(&a.multiplication_matrix(&z1, d).unwrap()).unwrap();
        let prod = a.ring().mul(&z2, &z1);
        prop_assume!(!prod.is_zero());
        prop_assert_eq!(lhs, a.multiplication_matrix(&prod, d).unwrap());
    }

    #[test]
    fn graded_commutativity_at_three(n1 in 1u32..=3, n2 in 1u32..=3,
                                     c1 in prop::collection::vec(0u8..3, 12),
                                     c2 in prop::collection::vec(0u8..3, 12)) {
        let a = fixture("z3x3.ring");
        let ring = a.ring();
        let x = element(&a, n1, &c1);
        let y = element(&a, n2, &c2);
        let xy = ring.mul(&x, &y);
        let yx = ring.mul(&y, &x);
        if n1 % 2 == 1 && n2 % 2 == 1 {
            prop_assert_eq!(xy, ring.neg(&yx));
        } else {
            prop_assert_eq!(xy, yx);
        }
        if n1 % 2 == 1 {
            prop_assert!(ring.mul(&x, &x).is_zero());
        }
    }

    #[test]
    fn multiplication_is_associative(c in prop::collection::vec(0u8..3, 36),
                                     n in prop::collection::vec(1u32..=3, 3)) {
        let a = fixture("z3x3.ring");
        let ring = a.ring();
        let x = element(&a, n[0], &c[..12]);
        let y = element(&a, n[1], &c[12..24]);
        let z = element(&a, n[2], &c[24..]);
        prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
    }
}

#[test]
fn fixtures_parse() {
    for name in ["z2", "z4", "z2x2", "z2x2x2", "d8", "q8", "z3", "z3x3", "two_lines"] {
        let a = fixture(&format!("{name}.ring"));
        assert!(a.name().is_some());
        assert!(!a.params().is_empty());
    }
}
