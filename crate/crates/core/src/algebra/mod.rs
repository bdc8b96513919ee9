//! Finitely presented graded-commutative algebras over F_p.
//!
//! Every question is answered one degree at a time: the degree-d piece of
//! `A = F_p<generators> / (relations)` is the span of degree-d monomials
//! modulo the span of `{m * f : f a relation, m a monomial}` in that degree.
//! No Gröbner basis is ever formed.

mod piece;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

pub use piece::GradedPiece;
pub use poly::{FreeAlgebra, Monomial, Polynomial};

use crate::error::{Error, Result};
use crate::linalg::MatrixGFp;

#[derive(Clone, Default)]
struct PieceCache(Arc<RwLock<HashMap<u32, Arc<GradedPiece>>>>);

impl fmt::Debug for PieceCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.read().map(|m| m.len()).unwrap_or(0);
        write!(f, "PieceCache({n} degrees)")
    }
}

/// Restriction data to one elementary abelian subgroup V of rank s: the
/// model of H*(V) and an image for every generator.
#[derive(Clone, Debug)]
pub struct RestrictionBlock {
    pub label: String,
    pub rank: u32,
    target: Box<Presentation>,
    images: Vec<Option<Polynomial>>,
}

impl RestrictionBlock {
    /// Builds the free model of H*(V): at p = 2, `t1..ts` in degree 1; at
    /// odd p, polynomial `t1..ts` in degree 2 and exterior `u1..us` in
    /// degree 1.
    pub fn new(label: &str, rank: u32, p: u32, ngens: usize) -> Result<Self> {
        let mut gens: Vec<(String, u32)> = Vec::new();
        let t_degree = if p == 2 { 1 } else { 2 };
        for i in 1..=rank {
            gens.push((format!("t{i}"), t_degree));
        }
        if p != 2 {
            for i in 1..=rank {
                gens.push((format!("u{i}"), 1));
            }
        }
        let ring = FreeAlgebra::new(p, gens)?;
        Ok(RestrictionBlock {
            label: label.to_string(),
            rank,
            target: Box::new(Presentation::free(ring)),
            images: vec![None; ngens],
        })
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn image(&self, generator: usize) -> Option<&Polynomial> {
        self.images[generator].as_ref()
    }

    pub fn set_image(&mut self, generator: usize, image: Polynomial) {
        self.images[generator] = Some(image);
    }

    /// Restriction of `f` (a polynomial over `source`) to the subgroup.
    pub fn restrict(&self, source: &FreeAlgebra, f: &Polynomial) -> Result<Polynomial> {
        let mut images = Vec::with_capacity(self.images.len());
        for (i, img) in self.images.iter().enumerate() {
            match img {
                Some(p) => images.push(p.clone()),
                None => {
                    return Err(Error::MissingRestrictionBlock(format!(
                        "block `{}` has no image for generator `{}`",
                        self.label,
                        source.names()[i]
                    )))
                }
            }
        }
        Ok(source.substitute(f, self.target.ring(), &images))
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    name: Option<String>,
    ring: Arc<FreeAlgebra>,
    relations: Vec<(Polynomial, u32)>,
    params: Vec<Polynomial>,
    restrictions: Vec<RestrictionBlock>,
    cache: PieceCache,
}

impl Presentation {
    pub fn free(ring: FreeAlgebra) -> Self {
        Presentation {
            name: None,
            ring: Arc::new(ring),
            relations: Vec::new(),
            params: Vec::new(),
            restrictions: Vec::new(),
            cache: PieceCache::default(),
        }
    }

    /// A presentation with the given homogeneous relations.
    pub fn new(ring: FreeAlgebra, relations: Vec<Polynomial>) -> Result<Self> {
        let mut pres = Presentation::free(ring);
        for r in relations {
            pres.push_relation(r)?;
        }
        Ok(pres)
    }

    fn push_relation(&mut self, r: Polynomial) -> Result<()> {
        match self.ring.homogeneous_degree(&r) {
            Ok(Some(d)) if d > 0 => self.relations.push((r, d)),
            Ok(Some(_)) => {
                return Err(Error::InhomogeneousRelation(format!(
                    "`{}` has degree 0",
                    self.ring.format(&r)
                )))
            }
            Ok(None) => {}
            Err(()) => return Err(Error::InhomogeneousRelation(self.ring.format(&r))),
        }
        Ok(())
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn ring(&self) -> &FreeAlgebra {
        &self.ring
    }

    pub fn prime(&self) -> u32 {
        self.ring.prime()
    }

    pub fn relations(&self) -> impl Iterator<Item = &Polynomial> {
        self.relations.iter().map(|(r, _)| r)
    }

    /// Parameters declared in the ring file, in order.
    pub fn params(&self) -> &[Polynomial] {
        &self.params
    }

    pub fn set_params(&mut self, params: Vec<Polynomial>) {
        self.params = params;
    }

    pub fn restrictions(&self) -> &[RestrictionBlock] {
        &self.restrictions
    }

    pub fn restriction(&self, label: &str) -> Option<&RestrictionBlock> {
        self.restrictions.iter().find(|b| b.label == label)
    }

    pub fn parse_polynomial(&self, src: &str) -> Result<Polynomial> {
        self.ring.parse(src)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.ring.format(f)
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, f: &Polynomial) -> Result<u32> {
        match self.ring.homogeneous_degree(f) {
            Ok(Some(d)) => Ok(d),
            Ok(None) => Err(Error::NotHomogeneous("the zero element has no degree".into())),
            Err(()) => Err(Error::NotHomogeneous(self.ring.format(f))),
        }
    }

    pub fn graded_piece(&self, degree: u32) -> Arc<GradedPiece> {
        if let Some(p) = self.cache.0.read().ok().and_then(|m| m.get(&degree).cloned()) {
            return p;
        }
        let piece = Arc::new(GradedPiece::compute(&self.ring, &self.relations, degree));
        match self.cache.0.write() {
            Ok(mut m) => m.entry(degree).or_insert(piece).clone(),
            Err(_) => piece,
        }
    }

    pub fn dimension(&self, degree: u32) -> usize {
        self.graded_piece(degree).dimension()
    }

    /// Canonical representative of a homogeneous `f` modulo the relations.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        match self.ring.homogeneous_degree(f) {
            Ok(None) => Ok(Polynomial::zero()),
            Ok(Some(d)) => Ok(self.graded_piece(d).normal_form(&self.ring, f)),
            Err(()) => Err(Error::NotHomogeneous(self.ring.format(f))),
        }
    }

    pub fn is_zero_element(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Matrix of `v -> z * v` from degree `d` to degree `d + |z|`, in the
    /// standard-monomial bases.
    pub fn multiplication_matrix(&self, z: &Polynomial, d: u32) -> Result<MatrixGFp> {
        let n = self.degree_of(z)?;
        let src = self.graded_piece(d);
        let dst = self.graded_piece(d + n);
        let columns: Vec<Vec<u8>> = src
            .basis_monomials()
            .map(|m| {
                let prod = self.ring.mul(z, &self.ring.monomial(m.clone()));
                dst.coordinates(&prod)
            })
            .collect();
        Ok(MatrixGFp::from_columns(
            self.ring.field(),
            dst.dimension(),
            &columns,
        ))
    }

    /// The same generators with `zs` appended to the relations.
    pub fn quotient_by(&self, zs: &[Polynomial]) -> Result<Presentation> {
        let mut q = Presentation {
            name: self.name.clone(),
            ring: Arc::clone(&self.ring),
            relations: self.relations.clone(),
            params: Vec::new(),
            restrictions: Vec::new(),
            cache: PieceCache::default(),
        };
        if zs.is_empty() {
            q.cache = self.cache.clone();
        }
        for z in zs {
            match self.ring.homogeneous_degree(z) {
                Ok(Some(d)) if d > 0 => q.relations.push((z.clone(), d)),
                Ok(Some(_)) => {
                    return Err(Error::NotHomogeneous(format!(
                        "`{}` has degree 0",
                        self.ring.format(z)
                    )))
                }
                Ok(None) => {}
                Err(()) => return Err(Error::NotHomogeneous(self.ring.format(z))),
            }
        }
        Ok(q)
    }

    /// `(dim A_0, ..., dim A_max_degree)`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.dimension(d)).collect()
    }

    /// Checks that every relation restricts to zero in every complete block.
    fn validate_restrictions(&self) -> Result<()> {
        for block in &self.restrictions {
            if block.images.iter().any(|i| i.is_none()) {
                continue;
            }
            for (r, _) in &self.relations {
                let img = block.restrict(&self.ring, r)?;
                if !img.is_zero() {
                    return Err(Error::InconsistentInputs(format!(
                        "relation `{}` restricts to `{}` on block `{}`",
                        self.ring.format(r),
                        block.target.format(&img),
                        block.label
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Parses the ring file format.
pub fn parse_presentation(source: &str) -> Result<Presentation> {
    let malformed = |line: usize, message: String| Error::MalformedFile { line, message };
    let at_line = |line: usize| {
        move |e: Error| match e {
            Error::MalformedFile { message, .. } => Error::MalformedFile { line, message },
            other => other,
        }
    };

    let mut lines: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in source.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        lines.push((i + 1, kw, rest));
    }

    let mut prime = None;
    let mut name = None;
    let mut gens: Vec<(String, u32)> = Vec::new();
    for &(ln, kw, rest) in &lines {
        match kw {
            "prime" => {
                let p: u32 = rest
                    .parse()
                    .map_err(|_| malformed(ln, format!("bad prime `{rest}`")))?;
                prime = Some(p);
            }
            "name" => name = Some(rest.to_string()),
            "gen" => {
                let mut it = rest.split_whitespace();
                let (Some(n), Some(d), None) = (it.next(), it.next(), it.next()) else {
                    return Err(malformed(ln, "expected `gen <name> <degree>`".into()));
                };
                let d: u32 = d
                    .parse()
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or_else(|| malformed(ln, format!("bad degree `{d}`")))?;
                if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || n.starts_with(|c: char| c.is_ascii_digit())
                {
                    return Err(malformed(ln, format!("bad generator name `{n}`")));
                }
                gens.push((n.to_string(), d));
            }
            "rel" | "param" | "subgroup" | "restrict" => {}
            other => return Err(malformed(ln, format!("unknown keyword `{other}`"))),
        }
    }
    let p = prime.ok_or_else(|| malformed(0, "missing `prime` line".into()))?;
    let ring = FreeAlgebra::new(p, gens).map_err(at_line(0))?;
    let ngens = ring.ngens();
    let mut pres = Presentation::free(ring);
    pres.name = name;

    for &(ln, kw, rest) in &lines {
        match kw {
            "rel" => {
                let r = pres.ring.parse(rest).map_err(at_line(ln))?;
                pres.push_relation(r)?;
            }
            "param" => {
                let z = pres.ring.parse(rest).map_err(at_line(ln))?;
                pres.degree_of(&z)?;
                pres.params.push(z);
            }
            "subgroup" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [label, "rank", s] = toks[..] else {
                    return Err(malformed(ln, "expected `subgroup <label> rank <s>`".into()));
                };
                let s: u32 = s
                    .parse()
                    .ok()
                    .filter(|&s| s > 0)
                    .ok_or_else(|| malformed(ln, format!("bad rank `{s}`")))?;
                if pres.restriction(label).is_some() {
                    return Err(malformed(ln, format!("subgroup `{label}` declared twice")));
                }
                pres.restrictions
                    .push(RestrictionBlock::new(label, s, p, ngens).map_err(at_line(ln))?);
            }
            "restrict" => {
                let Some((lhs, rhs)) = rest.split_once("->") else {
                    return Err(malformed(ln, "expected `restrict <label> <gen> -> <poly>`".into()));
                };
                let toks: Vec<&str> = lhs.split_whitespace().collect();
                let [label, gen] = toks[..] else {
                    return Err(malformed(ln, "expected `restrict <label> <gen> -> <poly>`".into()));
                };
                let gi = pres
                    .ring
                    .generator_index(gen)
                    .ok_or_else(|| Error::UnknownGenerator(gen.to_string()))?;
                let gdeg = pres.ring.degrees()[gi];
                let block = pres
                    .restrictions
                    .iter_mut()
                    .find(|b| b.label == label)
                    .ok_or_else(|| malformed(ln, format!("unknown subgroup `{label}`")))?;
                if block.images[gi].is_some() {
                    return Err(malformed(ln, format!("`{gen}` restricted twice to `{label}`")));
                }
                let img = block.target.ring.parse(rhs).map_err(at_line(ln))?;
                match block.target.ring.homogeneous_degree(&img) {
                    Ok(None) => {}
                    Ok(Some(d)) if d == gdeg => {}
                    Ok(Some(d)) => {
                        return Err(Error::DegreeMismatch {
                            expected: gdeg,
                            found: d,
                        })
                    }
                    Err(()) => {
                        return Err(Error::NotHomogeneous(block.target.ring.format(&img)))
                    }
                }
                block.set_image(gi, img);
            }
            _ => {}
        }
    }
    pres.validate_restrictions()?;
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const D8: &str = "prime 2\ngen x 1\ngen y 1\ngen w 2\nrel x*y\n";
    const Q8: &str = "prime 2\ngen x 1\ngen y 1\ngen e 4\nrel x^2+x*y+y^2\nrel x^2*y+x*y^2\n";

    fn ring(src: &str) -> Presentation {
        parse_presentation(src).unwrap()
    }

    #[test]
    fn parses_examples() {
        let d8 = ring(D8);
        assert_eq!(d8.ring().ngens(), 3);
        assert_eq!(d8.relations().count(), 1);
        let fx = ring("prime 2\ngen x 1\n");
        assert_eq!(fx.hilbert_function(4), vec![1; 5]);
        let ext = ring("prime 3\ngen a 1\ngen t 2\n");
        assert_eq!(ext.hilbert_function(5), vec![1; 6]);
        let a = ext.parse_polynomial("a").unwrap();
        assert!(ext.is_zero_element(&ext.ring().mul(&a, &a)).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("prime 2\ngen x 1\ngen y 2\nrel x+y\n"),
            Err(Error::InhomogeneousRelation(_))
        ));
        assert_eq!(
            parse_presentation("prime 2\ngen x 1\nrel z\n").unwrap_err(),
            Error::UnknownGenerator("z".into())
        );
        assert_eq!(
            parse_presentation("prime 3\ngen x 1\nrel 3*x\n").unwrap_err(),
            Error::BadCoefficient("3".into())
        );
        assert!(matches!(
            parse_presentation("gen x 1\n"),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            parse_presentation("prime 2\ngen x 1\nfoo\n"),
            Err(Error::MalformedFile { line: 3, .. })
        ));
        assert!(matches!(
            parse_presentation("prime 2\ngen x 1\nrel x +\n"),
            Err(Error::MalformedFile { line: 3, .. })
        ));
        assert_eq!(
            parse_presentation("prime 4\ngen x 1\n").unwrap_err(),
            Error::InvalidPrime(4)
        );
    }

    #[test]
    fn restriction_blocks() {
        let src = format!(
            "{D8}subgroup V1 rank 2\nrestrict V1 x -> 0\nrestrict V1 y -> t2\nrestrict V1 w -> t1^2+t1*t2\n"
        );
        let d8 = ring(&src);
        let b = d8.restriction("V1").unwrap();
        assert_eq!(b.rank, 2);
        let f = d8.parse_polynomial("w + y^2").unwrap();
        let img = b.restrict(d8.ring(), &f).unwrap();
        assert_eq!(b.target().format(&img), "t1^2 + t1*t2 + t2^2");

        // x -> t1, y -> t2 would not kill x*y
        let bad = format!("{D8}subgroup V rank 2\nrestrict V x -> t1\nrestrict V y -> t2\nrestrict V w -> t1^2\n");
        assert!(matches!(
            parse_presentation(&bad),
            Err(Error::InconsistentInputs(_))
        ));
        let wrong_degree = format!("{D8}subgroup V rank 2\nrestrict V x -> t1^2\n");
        assert_eq!(
            parse_presentation(&wrong_degree).unwrap_err(),
            Error::DegreeMismatch {
                expected: 1,
                found: 2
            }
        );
        let incomplete = ring(&format!("{D8}subgroup V rank 2\nrestrict V x -> 0\n"));
        assert!(matches!(
            incomplete.restriction("V").unwrap().restrict(incomplete.ring(), &f),
            Err(Error::MissingRestrictionBlock(_))
        ));
    }

    #[test]
    fn odd_prime_restriction_model() {
        let z3 = ring("prime 3\ngen a 1\ngen t 2\nsubgroup C rank 1\nrestrict C a -> u1\nrestrict C t -> t1\n");
        let target = z3.restriction("C").unwrap().target();
        assert_eq!(target.ring().degrees(), &[2, 1]);
        assert_eq!(target.hilbert_function(4), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn normal_form_examples() {
        let d8 = ring(D8);
        let xy = d8.parse_polynomial("x*y").unwrap();
        assert!(d8.normal_form(&xy).unwrap().is_zero());
        let f = d8.parse_polynomial("x^2 + x*y").unwrap();
        assert_eq!(
            d8.normal_form(&f).unwrap(),
            d8.parse_polynomial("x^2").unwrap()
        );
        assert!(d8.normal_form(&Polynomial::zero()).unwrap().is_zero());
        let inh = d8.parse_polynomial("x + w").unwrap();
        assert!(matches!(d8.normal_form(&inh), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn graded_piece_examples() {
        let f2xy = ring("prime 2\ngen x 1\ngen y 1\n");
        assert_eq!(f2xy.graded_piece(3).dimension(), 4);
        assert_eq!(ring(D8).graded_piece(4).dimension(), 5);
        let q8 = ring(Q8);
        let piece = q8.graded_piece(3);
        assert_eq!(piece.monomials().len(), 4);
        assert_eq!(piece.slice_rank(), 3);
        assert_eq!(piece.dimension(), 1);
        assert_eq!(ring(D8).graded_piece(0).dimension(), 1);
    }

    #[test]
    fn multiplication_matrix_examples() {
        let fx = ring("prime 2\ngen x 1\n");
        let x = fx.parse_polynomial("x").unwrap();
        for d in 0..5 {
            let m = fx.multiplication_matrix(&x, d).unwrap();
            assert_eq!(m, MatrixGFp::identity(fx.ring().field(), 1));
        }
        let lines = ring("prime 2\ngen x 1\ngen y 1\nrel x*y\n");
        let z = lines.parse_polynomial("x+y").unwrap();
        let m = lines.multiplication_matrix(&z, 1).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank()), (2, 2, 2));
        let d8 = ring(D8);
        let xy = d8.parse_polynomial("x*y").unwrap();
        for d in 0..5 {
            assert!(d8.multiplication_matrix(&xy, d).unwrap().is_zero());
        }
        let inh = d8.parse_polynomial("x + w").unwrap();
        assert!(matches!(
            d8.multiplication_matrix(&inh, 1),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn quotient_examples() {
        let d8 = ring(D8);
        let zs = vec![
            d8.parse_polynomial("w").unwrap(),
            d8.parse_polynomial("x+y").unwrap(),
        ];
        let q = d8.quotient_by(&zs).unwrap();
        assert_eq!(q.hilbert_function(6), vec![1, 1, 0, 0, 0, 0, 0]);
        let fx = ring("prime 2\ngen x 1\n");
        let q = fx.quotient_by(&[fx.parse_polynomial("x").unwrap()]).unwrap();
        assert_eq!(q.hilbert_function(3), vec![1, 0, 0, 0]);
        assert_eq!(
            d8.quotient_by(&[]).unwrap().hilbert_function(6),
            d8.hilbert_function(6)
        );
        let inh = d8.parse_polynomial("x + w").unwrap();
        assert!(matches!(
            d8.quotient_by(&[inh]),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(ring(D8).hilbert_function(5), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(ring(Q8).hilbert_function(7), vec![1, 2, 2, 1, 1, 2, 2, 1]);
        assert_eq!(
            ring("prime 2\ngen x 1\ngen y 1\nrel x*y\n").hilbert_function(3),
            vec![1, 2, 2, 2]
        );
    }
}
