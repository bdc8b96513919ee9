//! Finite p-groups given by Cayley tables.
//!
//! Groups are read from a small line-oriented text format, either as
//! permutation generators (closed by breadth-first products) or as an
//! explicit multiplication table. Element index 0 is always the identity.
//!
//! Elementary abelian subgroups are enumerated inductively upwards from
//! `C = Omega_1(Z(G))`: every elementary abelian `E` lies inside the
//! elementary abelian `<C, E>`, so nothing of maximal rank is lost.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{is_prime, Fp, MatrixGFp};

/// Largest group the permutation closure will build before giving up.
const MAX_CLOSURE: usize = 1 << 20;
/// Tables up to this order are checked for associativity exhaustively.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Subgroup {
    pub elements: Vec<u32>,
    pub rank: Option<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PGroupProfile {
    pub prime: u32,
    pub exponent: u32,
    pub p_rank: u32,
    pub center_rank: u32,
    pub gtd: u32,
}

impl FiniteGroup {
    /// Validates a 0-based multiplication table of an order-`n` group.
    pub fn from_table(name: Option<String>, n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("order must be positive".into()));
        }
        if table.len() != n * n {
            return Err(Error::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        if table.iter().any(|&e| e as usize >= n) {
            return Err(Error::NotAGroup("table entry out of range".into()));
        }
        for j in 0..n {
            if table[j] as usize != j || table[j * n] as usize != j {
                return Err(Error::NotAGroup(
                    "element 1 does not act as the identity".into(),
                ));
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let e = table[i * n + j] as usize;
                if seen[e] {
                    return Err(Error::NotAGroup(format!("row {} repeats an entry", i + 1)));
                }
                seen[e] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let e = table[i * n + j] as usize;
                if seen[e] {
                    return Err(Error::NotAGroup(format!(
                        "column {} repeats an entry",
                        j + 1
                    )));
                }
                seen[e] = true;
            }
        }
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let Some(j) = (0..n).find(|&j| table[i * n + j] == 0) else {
                return Err(Error::NotAGroup(format!("element {} has no inverse", i + 1)));
            };
            if table[j * n + i] != 0 {
                return Err(Error::NotAGroup(format!(
                    "element {} has no two-sided inverse",
                    i + 1
                )));
            }
            inverse[i] = j as u32;
        }
        let g = FiniteGroup {
            order: n,
            table,
            inverse,
            name,
        };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let (a, b, c) = (a as u32, b as u32, c as u32);
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotAGroup(format!(
                    "associativity fails for elements {}, {}, {}",
                    a + 1,
                    b + 1,
                    c + 1
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x005e_ed0f_ca11);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Closes a set of permutations (0-based images) under composition.
    /// The product `x * y` applies `x` first.
    pub fn from_permutations(
        name: Option<String>,
        declared: usize,
        gens: &[Vec<u32>],
    ) -> Result<Self> {
        let degree = gens.iter().map(|g| g.len()).max().unwrap_or(0);
        let pad = |g: &Vec<u32>| -> Vec<u32> {
            let mut v = g.clone();
            v.extend(g.len() as u32..degree as u32);
            v
        };
        let gens: Vec<Vec<u32>> = gens.iter().map(pad).collect();
        let identity: Vec<u32> = (0..degree as u32).collect();
        let compose = |x: &[u32], y: &[u32]| -> Vec<u32> {
            x.iter().map(|&i| y[i as usize]).collect()
        };

        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let h = compose(&elements[i], g);
                if !index.contains_key(&h) {
                    if elements.len() >= MAX_CLOSURE {
                        return Err(Error::OrderMismatch {
                            declared,
                            generated: elements.len(),
                        });
                    }
                    index.insert(h.clone(), elements.len() as u32);
                    elements.push(h);
                }
            }
            i += 1;
        }
        if elements.len() != declared {
            return Err(Error::OrderMismatch {
                declared,
                generated: elements.len(),
            });
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                table[a * n + b] = index[&compose(x, y)];
            }
        }
        Self::from_table(name, n, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn power(&self, a: u32, k: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order as u32;
        (0..n).all(|a| (a..n).all(|b| self.commute(a, b)))
    }

    /// `Some(n)` when the order is `p^n`.
    pub fn p_exponent(&self, p: u32) -> Option<u32> {
        if !is_prime(p) {
            return None;
        }
        let mut m = self.order;
        let mut n = 0;
        while m.is_multiple_of(p as usize) {
            m /= p as usize;
            n += 1;
        }
        (m == 1).then_some(n)
    }

    fn require_p_group(&self, p: u32) -> Result<u32> {
        self.p_exponent(p).ok_or(Error::NotPGroup {
            order: self.order,
            prime: p,
        })
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut queue: VecDeque<u32> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order as u32).filter(|&x| inside[x as usize]).collect()
    }

    /// A generating set chosen greedily in element order.
    pub fn generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        for x in 1..self.order as u32 {
            if !inside[x as usize] {
                gens.push(x);
                for y in self.closure(&gens) {
                    inside[y as usize] = true;
                }
            }
        }
        gens
    }

    pub fn order_p_elements(&self, p: u32) -> Vec<u32> {
        (1..self.order as u32)
            .filter(|&x| self.power(x, p as u64) == 0)
            .collect()
    }

    pub fn center(&self) -> Vec<u32> {
        let gens = self.generators();
        (0..self.order as u32)
            .filter(|&z| gens.iter().all(|&g| self.commute(z, g)))
            .collect()
    }

    /// `Omega_1(Z(G))`: the identity together with the central elements of
    /// order p.
    pub fn omega1_center(&self, p: u32) -> Result<Subgroup> {
        self.require_p_group(p)?;
        let mut elements: Vec<u32> = self
            .center()
            .into_iter()
            .filter(|&z| z == 0 || self.power(z, p as u64) == 0)
            .collect();
        elements.sort_unstable();
        let rank = log_p(elements.len(), p);
        Ok(Subgroup {
            elements,
            rank: Some(rank),
        })
    }

    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let elements = (0..self.order as u32)
            .filter(|&x| s.elements.iter().all(|&y| self.commute(x, y)))
            .collect();
        Subgroup {
            elements,
            rank: None,
        }
    }

    /// All elementary abelian subgroups containing `Omega_1(Z(G))`, sorted by
    /// rank and then by element set.
    pub fn enumerate_elem_abelians(&self, p: u32) -> Result<Vec<Subgroup>> {
        let c = self.omega1_center(p)?;
        let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
        found.insert(c.elements.clone());
        let mut frontier = vec![c.elements];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                let vs = Subgroup {
                    elements: v.clone(),
                    rank: None,
                };
                let cent = self.centralizer(&vs);
                for &x in &cent.elements {
                    if x == 0 || vs.contains(x) || self.power(x, p as u64) != 0 {
                        continue;
                    }
                    let mut w: Vec<u32> = Vec::with_capacity(v.len() * p as usize);
                    let mut xk = 0;
                    for _ in 0..p {
                        w.extend(v.iter().map(|&y| self.mul(y, xk)));
                        xk = self.mul(xk, x);
                    }
                    w.sort_unstable();
                    if found.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = found
            .into_iter()
            .map(|elements| Subgroup {
                rank: Some(log_p(elements.len(), p)),
                elements,
            })
            .collect();
        out.sort_by(|a, b| a.rank.cmp(&b.rank).then_with(|| a.elements.cmp(&b.elements)));
        Ok(out)
    }

    pub fn p_rank(&self, p: u32) -> Result<u32> {
        Ok(self
            .enumerate_elem_abelians(p)?
            .iter()
            .filter_map(|s| s.rank)
            .max()
            .unwrap_or(0))
    }

    /// Group-theoretic defect `prank(G) - prank(Z(G))`.
    pub fn gtd(&self, p: u32) -> Result<PGroupProfile> {
        let exponent = self.require_p_group(p)?;
        let center_rank = self.omega1_center(p)?.rank.unwrap_or(0);
        let p_rank = self.p_rank(p)?;
        Ok(PGroupProfile {
            prime: p,
            exponent,
            p_rank,
            center_rank,
            gtd: p_rank - center_rank,
        })
    }
}

fn log_p(mut n: usize, p: u32) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p as usize;
        k += 1;
    }
    k
}

/// Parses the group file format.
pub fn load_group(source: &str) -> Result<FiniteGroup> {
    let mut name = None;
    let mut order: Option<usize> = None;
    let mut perms: Vec<Vec<u32>> = Vec::new();
    let mut table_rows: Option<Vec<Vec<u32>>> = None;

    let malformed = |line: usize, message: String| Error::MalformedFile { line, message };

    for (lineno, raw) in source.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rows) = table_rows.as_mut() {
            let row = line
                .split_whitespace()
                .map(|t| match t.parse::<u32>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(malformed(lineno, format!("bad table entry `{t}`"))),
                })
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        match keyword {
            "name" => name = Some(rest.to_string()),
            "order" => {
                let n = rest
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| malformed(lineno, format!("bad order `{rest}`")))?;
                order = Some(n);
            }
            "perm" => perms.push(parse_cycles(rest).map_err(|m| malformed(lineno, m))?),
            "table" => {
                if !perms.is_empty() {
                    return Err(malformed(lineno, "both perm and table given".into()));
                }
                table_rows = Some(Vec::new());
            }
            other => return Err(malformed(lineno, format!("unknown keyword `{other}`"))),
        }
    }

    let n = order.ok_or_else(|| malformed(0, "missing `order` line".into()))?;
    match table_rows {
        Some(rows) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(malformed(
                    0,
                    format!("table must have {n} rows of {n} entries"),
                ));
            }
            FiniteGroup::from_table(name, n, rows.concat())
        }
        None if perms.is_empty() && n == 1 => FiniteGroup::from_table(name, 1, vec![0]),
        None if perms.is_empty() => Err(malformed(0, "no `perm` or `table` data".into())),
        None => FiniteGroup::from_permutations(name, n, &perms),
    }
}

/// Parses disjoint cycle notation with 1-based points into 0-based images.
fn parse_cycles(s: &str) -> std::result::Result<Vec<u32>, String> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` in `{s}`"));
        };
        let Some(close) = body.find(')') else {
            return Err(format!("unclosed cycle in `{s}`"));
        };
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(format!("bad point `{t}`")),
            })
            .collect::<std::result::Result<Vec<u32>, String>>()?;
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    let degree = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0) as usize;
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    for c in &cycles {
        for (i, &x) in c.iter().enumerate() {
            if used[x as usize] {
                return Err(format!("point {} appears twice", x + 1));
            }
            used[x as usize] = true;
            images[x as usize] = c[(i + 1) % c.len()];
        }
    }
    Ok(images)
}

/// Whether the `s x s` unipotent Jordan block over F_p has order dividing
/// p, checked by raising the matrix to the p-th power.
pub fn jordan_block_order_divides_p(s: usize, p: u32) -> Result<bool> {
    let field = Fp::new(p)?;
    let mut j = MatrixGFp::identity(&field, s);
    for i in 0..s.saturating_sub(1) {
        j.set(i, i + 1, 1);
    }
    let mut acc = MatrixGFp::identity(&field, s);
    for _ in 0..p {
        acc = acc.mul(&j)?;
    }
    Ok(acc == MatrixGFp::identity(&field, s))
}

/// Order screen for p-groups of order `p^n` with defect at least `target_gtd`.
/// Returns false exactly when the Jordan-block argument excludes the order.
pub fn gtd_feasible(p: u32, n: u32, target_gtd: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let small = p == 2 || p == 3;
    let min_exponent = match target_gtd {
        3 if small => 6,
        3 => 5,
        4 if p == 2 => 8,
        4 if small => 7,
        4 => 6,
        t => return Err(Error::UnsupportedTarget(t)),
    };
    Ok(n >= min_exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D8: &str = "name D8\norder 8\nperm (1 2 3 4)\nperm (2 4)\n";

    fn q8() -> FiniteGroup {
        // quaternion units as signed index pairs: 1,i,j,k and negatives
        let mul = |a: usize, b: usize| -> usize {
            let (sa, ua) = (a / 4, a % 4);
            let (sb, ub) = (b / 4, b % 4);
            const T: [[(usize, usize); 4]; 4] = [
                [(0, 0), (0, 1), (0, 2), (0, 3)],
                [(0, 1), (1, 0), (0, 3), (1, 2)],
                [(0, 2), (1, 3), (1, 0), (0, 1)],
                [(0, 3), (0, 2), (1, 1), (1, 0)],
            ];
            let (s, u) = T[ua][ub];
            ((sa + sb + s) % 2) * 4 + u
        };
        let table = (0..8)
            .flat_map(|a| (0..8).map(move |b| mul(a, b) as u32))
            .collect();
        FiniteGroup::from_table(Some("Q8".into()), 8, table).unwrap()
    }

    #[test]
    fn loads_d8_from_permutations() {
        let g = load_group(D8).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.name(), Some("D8"));
        assert!(!g.is_abelian());
    }

    #[test]
    fn loads_trivial_table() {
        let g = load_group("order 1\ntable\n1\n").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.gtd(2).unwrap().p_rank, 0);
    }

    #[test]
    fn order_mismatch() {
        let e = load_group("order 4\nperm (1 2 3)\n").unwrap_err();
        assert_eq!(
            e,
            Error::OrderMismatch {
                declared: 4,
                generated: 3
            }
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            load_group("perm (1 2)\n"),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            load_group("order 2\nperm (1 2\n"),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            load_group("order 2\nfrobnicate\n"),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            load_group("order 2\ntable\n1 2\n"),
            Err(Error::MalformedFile { .. })
        ));
    }

    #[test]
    fn rejects_non_group_tables() {
        // identity row broken
        assert!(matches!(
            load_group("order 2\ntable\n2 1\n1 2\n"),
            Err(Error::NotAGroup(_))
        ));
        // Latin square that is not associative (a loop of order 5)
        let loop5 = "order 5\ntable\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n";
        assert!(matches!(load_group(loop5), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load_group("# cyclic\n\norder 2 # two\nperm (1 2) # swap\n").unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn order_p_elements_examples() {
        let d8 = load_group(D8).unwrap();
        assert_eq!(d8.order_p_elements(2).len(), 5);
        assert_eq!(q8().order_p_elements(2).len(), 1);
        let z33 = load_group("order 9\nperm (1 2 3)\nperm (4 5 6)\n").unwrap();
        assert_eq!(z33.order_p_elements(3).len(), 8);
    }

    #[test]
    fn omega1_center_examples() {
        let d8 = load_group(D8).unwrap();
        let c = d8.omega1_center(2).unwrap();
        assert_eq!((c.order(), c.rank), (2, Some(1)));
        let e8 = load_group("order 8\nperm (1 2)\nperm (3 4)\nperm (5 6)\n").unwrap();
        let c = e8.omega1_center(2).unwrap();
        assert_eq!((c.order(), c.rank), (8, Some(3)));
        let z4 = load_group("order 4\nperm (1 2 3 4)\n").unwrap();
        let c = z4.omega1_center(2).unwrap();
        assert_eq!((c.order(), c.rank), (2, Some(1)));
        assert_eq!(
            z4.omega1_center(3),
            Err(Error::NotPGroup { order: 4, prime: 3 })
        );
    }

    #[test]
    fn centralizer_examples() {
        let d8 = load_group(D8).unwrap();
        let c = d8.omega1_center(2).unwrap();
        assert_eq!(d8.centralizer(&c).order(), 8);
        let central = d8.center();
        let x = d8
            .order_p_elements(2)
            .into_iter()
            .find(|x| !central.contains(x))
            .unwrap();
        let s = Subgroup {
            elements: d8.closure(&[x]),
            rank: None,
        };
        assert_eq!(d8.centralizer(&s).order(), 4);
        let z4 = load_group("order 4\nperm (1 2 3 4)\n").unwrap();
        let whole = Subgroup {
            elements: (0..4).collect(),
            rank: None,
        };
        assert_eq!(z4.centralizer(&whole).order(), 4);
    }

    #[test]
    fn elementary_abelians_examples() {
        let d8 = load_group(D8).unwrap();
        let ranks: Vec<_> = d8
            .enumerate_elem_abelians(2)
            .unwrap()
            .iter()
            .map(|s| s.rank.unwrap())
            .collect();
        assert_eq!(ranks, vec![1, 2, 2]);
        let q = q8().enumerate_elem_abelians(2).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].rank, Some(1));
        let v4 = load_group("order 4\nperm (1 2)\nperm (3 4)\n").unwrap();
        let all = v4.enumerate_elem_abelians(2).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].order(), 4);
    }

    #[test]
    fn profiles() {
        let d8 = load_group(D8).unwrap();
        assert_eq!(
            d8.gtd(2).unwrap(),
            PGroupProfile {
                prime: 2,
                exponent: 3,
                p_rank: 2,
                center_rank: 1,
                gtd: 1
            }
        );
        assert_eq!(q8().p_rank(2).unwrap(), 1);
        let z4x2 = load_group("order 8\nperm (1 2 3 4)\nperm (5 6)\n").unwrap();
        assert_eq!(z4x2.gtd(2).unwrap().gtd, 0);
        assert!(matches!(d8.gtd(3), Err(Error::NotPGroup { .. })));
    }

    #[test]
    fn jordan_examples() {
        assert!(!jordan_block_order_divides_p(3, 2).unwrap());
        assert!(!jordan_block_order_divides_p(4, 3).unwrap());
        assert!(jordan_block_order_divides_p(4, 5).unwrap());
        for p in [2, 3, 5, 7] {
            assert!(jordan_block_order_divides_p(1, p).unwrap());
        }
    }

    #[test]
    fn feasibility_examples() {
        assert!(!gtd_feasible(2, 5, 3).unwrap());
        assert!(!gtd_feasible(2, 7, 4).unwrap());
        assert!(gtd_feasible(5, 5, 3).unwrap());
        assert_eq!(gtd_feasible(2, 9, 5), Err(Error::UnsupportedTarget(5)));
        assert_eq!(gtd_feasible(2, 9, 2), Err(Error::UnsupportedTarget(2)));
    }

    #[test]
    fn generators_generate() {
        let g = q8();
        let gens = g.generators();
        assert_eq!(g.closure(&gens).len(), 8);
        assert_eq!(gens.len(), 2);
    }
}
