//! Polynomials in a free graded-commutative algebra over F_p.
//!
//! For odd p, generators of odd degree anticommute and square to zero; a
//! monomial stores them with exponent at most one, in declaration order,
//! and products pick up the sign of the permutation that sorts them. For
//! p = 2 everything commutes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::Fp;

/// Exponent vector over the generators, in declaration order.
pub type Monomial = Vec<u16>;

/// A normalized polynomial: monomials strictly decreasing in lexicographic
/// order, every coefficient in `1..p`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u8)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u8)] {
        &self.terms
    }

    /// Sorts and merges arbitrary terms.
    pub fn from_terms(field: &Fp, mut terms: Vec<(Monomial, u8)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u8)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { terms: out }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAlgebra {
    field: Fp,
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl FreeAlgebra {
    pub fn new(p: u32, generators: Vec<(String, u32)>) -> Result<Self> {
        let field = Fp::new(p)?;
        let mut names = Vec::with_capacity(generators.len());
        let mut degrees = Vec::with_capacity(generators.len());
        for (name, degree) in generators {
            if degree == 0 {
                return Err(Error::MalformedFile {
                    line: 0,
                    message: format!("generator `{name}` must have positive degree"),
                });
            }
            if names.contains(&name) {
                return Err(Error::MalformedFile {
                    line: 0,
                    message: format!("generator `{name}` declared twice"),
                });
            }
            names.push(name);
            degrees.push(degree);
        }
        Ok(FreeAlgebra {
            field,
            names,
            degrees,
        })
    }

    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.p()
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(1)
    }

    /// Odd-degree generator at an odd prime.
    #[inline]
    pub fn is_exterior(&self, i: usize) -> bool {
        self.field.p() != 2 && self.degrees[i] % 2 == 1
    }

    pub fn monomial_degree(&self, m: &[u16]) -> u32 {
        m.iter().zip(&self.degrees).map(|(&e, &d)| e as u32 * d).sum()
    }

    /// Product of two monomials as `(monomial, negate)`, or `None` when an
    /// exterior generator would appear twice.
    pub fn mono_mul(&self, a: &[u16], b: &[u16]) -> Option<(Monomial, bool)> {
        let mut negate = false;
        let mut odd_in_a_after = 0u32;
        // walk generators from the last: each odd generator of b must move
        // past the odd generators of a with larger index
        for i in (0..a.len()).rev() {
            if self.is_exterior(i) {
                if a[i] > 0 && b[i] > 0 {
                    return None;
                }
                if b[i] > 0 && odd_in_a_after % 2 == 1 {
                    negate = !negate;
                }
                if a[i] > 0 {
                    odd_in_a_after += 1;
                }
            }
        }
        let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
        Some((m, negate))
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            terms: vec![(vec![0; self.ngens()], 1)],
        }
    }

    pub fn generator(&self, i: usize) -> Polynomial {
        let mut m = vec![0; self.ngens()];
        m[i] = 1;
        Polynomial {
            terms: vec![(m, 1)],
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial { terms: vec![(m, 1)] }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let terms = a.terms.iter().chain(&b.terms).cloned().collect();
        Polynomial::from_terms(&self.field, terms)
    }

    pub fn scale(&self, a: &Polynomial, c: u8) -> Polynomial {
        let terms = a
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), self.field.mul(*k, c)))
            .collect();
        Polynomial::from_terms(&self.field, terms)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        self.scale(a, self.field.neg(1))
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                if let Some((m, negate)) = self.mono_mul(ma, mb) {
                    let c = self.field.mul(*ca, *cb);
                    terms.push((m, if negate { self.field.neg(c) } else { c }));
                }
            }
        }
        Polynomial::from_terms(&self.field, terms)
    }

    pub fn pow(&self, a: &Polynomial, k: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `Ok(Some(d))` for a nonzero homogeneous polynomial of degree d,
    /// `Ok(None)` for zero, `Err(())` when inhomogeneous.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> std::result::Result<Option<u32>, ()> {
        let mut degs = f.terms.iter().map(|(m, _)| self.monomial_degree(m));
        let Some(d) = degs.next() else {
            return Ok(None);
        };
        if degs.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(())
        }
    }

    /// All monomials of degree `d`, in decreasing lexicographic order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u16; self.ngens()];
        self.fill_monomials(0, d, &mut current, &mut out);
        out
    }

    fn fill_monomials(&self, i: usize, remaining: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == self.ngens() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let deg = self.degrees[i];
        let mut max_e = remaining / deg;
        if self.is_exterior(i) {
            max_e = max_e.min(1);
        }
        for e in (0..=max_e).rev() {
            cur[i] = e as u16;
            self.fill_monomials(i + 1, remaining - e * deg, cur, out);
        }
        cur[i] = 0;
    }

    /// Image of `f` under the algebra map sending generator `i` to
    /// `images[i]` in `target`.
    pub fn substitute(&self, f: &Polynomial, target: &FreeAlgebra, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            let mut term = target.one();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = target.mul(&term, &images[i]);
                }
            }
            acc = target.add(&acc, &target.scale(&term, *c));
        }
        acc
    }

    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                let _ = write!(s, "{c}");
            } else {
                if *c != 1 {
                    let _ = write!(s, "{c}*");
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }

    /// Parses `[c*]g1^e1*g2^e2*... (+|-) ...`.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let text: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let malformed = |message: String| Error::MalformedFile { line: 0, message };
        if text.is_empty() {
            return Err(malformed("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = text.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                if i == 0 {
                    negative = b == b'-';
                    start = 1;
                    continue;
                }
                terms.push((negative, &text[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
        }
        terms.push((negative, &text[start..]));

        let mut acc = Polynomial::zero();
        for (negative, term) in terms {
            if term.is_empty() {
                return Err(malformed(format!("empty term in `{src}`")));
            }
            let mut value = self.one();
            let mut coeff_seen = false;
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(malformed(format!("empty factor in `{src}`")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c: u64 = factor
                        .parse()
                        .map_err(|_| Error::BadCoefficient(factor.to_string()))?;
                    if c == 0 && term == "0" {
                        value = Polynomial::zero();
                        coeff_seen = true;
                        continue;
                    }
                    let c = (c % self.prime() as u64) as u8;
                    if c == 0 || coeff_seen {
                        return Err(Error::BadCoefficient(factor.to_string()));
                    }
                    coeff_seen = true;
                    value = self.scale(&value, c);
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| malformed(format!("bad exponent in `{factor}`")))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                if !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || name.starts_with(|c: char| c.is_ascii_digit())
                {
                    return Err(malformed(format!("bad factor `{factor}`")));
                }
                let i = self
                    .generator_index(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                value = self.mul(&value, &self.pow(&self.generator(i), exp));
            }
            if negative {
                value = self.neg(&value);
            }
            acc = self.add(&acc, &value);
        }
        Ok(acc)
    }
}
