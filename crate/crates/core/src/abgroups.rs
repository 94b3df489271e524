//! Finite abelian groups as cyclic factor lists, with materialized subgroup lattices.
//!
//! Elements are encoded as mixed-radix integers (first factor most significant).
//! Subgroups are element sets; their deterministic order is by
//! `(order, canonical generator matrix)`, where the generator matrix is the
//! Hermite normal form of the preimage lattice in `Z^r`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::ToPrimitive;
use once_cell::sync::Lazy;

use crate::error::{KhomError, Result};
use crate::linalg::{hnf_rows, IntMatrix};

/// Default bound on group orders.
pub const DEFAULT_SIZE_BOUND: u64 = 512;

/// Current bound on group orders (`KHOM_SIZE_BOUND` overrides the default).
pub fn size_bound() -> u64 {
    std::env::var("KHOM_SIZE_BOUND").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_BOUND)
}

/// A finite abelian group `C_{n_1} x ... x C_{n_r}`, taken literally from its factor list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

/// An element as a residue vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub residues: Vec<u64>,
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            write!(f, "e")
        } else {
            let s: Vec<String> = self.orders.iter().map(|o| format!("C{o}")).collect();
            write!(f, "{}", s.join("x"))
        }
    }
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(o) = orders.iter().find(|&&o| o < 2) {
            return Err(KhomError::Parse(format!("cyclic factor of order {o} (need at least 2)")));
        }
        Ok(FinAbGroup { orders })
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            FinAbGroup { orders: vec![n] }
        }
    }

    /// Parses `"C2xC4xC3"` or `"e"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Self::trivial());
        }
        if s.is_empty() {
            return Err(KhomError::Parse("empty group string".into()));
        }
        let mut orders = Vec::new();
        for tok in s.split('x') {
            let tok = tok.trim();
            let n = tok
                .strip_prefix('C')
                .and_then(|d| d.parse::<u64>().ok())
                .ok_or_else(|| KhomError::Parse(format!("bad cyclic factor {tok:?} in {s:?}")))?;
            orders.push(n);
        }
        Self::new(orders)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| num_integer::lcm(a, b))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        crate::linalg::split_prime(self.order(), p).1 == 1
    }

    pub fn encode(&self, residues: &[u64]) -> u32 {
        let mut code = 0u64;
        for (r, &n) in residues.iter().zip(&self.orders) {
            code = code * n + (r % n);
        }
        code as u32
    }

    pub fn decode(&self, mut code: u32) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let n = self.orders[i] as u32;
            out[i] = (code % n) as u64;
            code /= n;
        }
        out
    }

    pub fn element(&self, code: u32) -> GroupElement {
        GroupElement { residues: self.decode(code) }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).zip(&self.orders).map(|((a, b), n)| (a + b) % n).collect();
        self.encode(&s)
    }

    pub fn scale(&self, k: i64, a: u32) -> u32 {
        let x = self.decode(a);
        let s: Vec<u64> = x
            .iter()
            .zip(&self.orders)
            .map(|(&a, &n)| ((a as i128 * k as i128).rem_euclid(n as i128)) as u64)
            .collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.scale(-1, a)
    }

    /// All abelian groups of order at most `n`, one per isomorphism class, in
    /// invariant-factor form (ordered by order, then factor list).
    pub fn all_up_to(n: u64) -> Vec<FinAbGroup> {
        fn chains(order: u64, min_first: u64, out: &mut Vec<Vec<u64>>, prefix: &mut Vec<u64>) {
            // prefix is a divisibility chain; extend by multiples of the last element
            if order == 1 {
                out.push(prefix.clone());
                return;
            }
            let mut d = min_first.max(2);
            while d <= order {
                if order.is_multiple_of(d) && prefix.last().is_none_or(|&l| d.is_multiple_of(l)) {
                    // remaining part must be divisible by d for the chain to continue
                    let rest = order / d;
                    if rest == 1 || rest.is_multiple_of(d) {
                        prefix.push(d);
                        chains(rest, d, out, prefix);
                        prefix.pop();
                    }
                }
                d += 1;
            }
        }
        let mut groups = Vec::new();
        for order in 1..=n {
            let mut out = Vec::new();
            chains(order, 2, &mut out, &mut Vec::new());
            out.sort();
            groups.extend(out.into_iter().map(|o| FinAbGroup { orders: o }));
        }
        groups
    }
}

/// A subgroup of a fixed ambient group, materialized as an element set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub ambient: FinAbGroup,
    /// Sorted element codes.
    pub elements: Vec<u32>,
    /// Canonical generator matrix: HNF rows of the preimage lattice in `Z^r`.
    pub generators: Vec<Vec<i64>>,
    mask: Vec<u64>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.mask == other.mask
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    fn from_mask(ambient: &FinAbGroup, mask: Vec<u64>) -> Self {
        let elements: Vec<u32> = (0..ambient.order() as u32).filter(|&c| bit(&mask, c)).collect();
        let generators = canonical_generators(ambient, &elements);
        Subgroup { ambient: ambient.clone(), elements, generators, mask }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains_element(&self, code: u32) -> bool {
        bit(&self.mask, code)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    /// Short label listing the nonzero generator rows, e.g. `<(1,0),(0,2)>`.
    pub fn label(&self) -> String {
        let r = self.ambient.rank();
        let gens: Vec<String> = self
            .generators
            .iter()
            .filter(|row| row.iter().enumerate().any(|(i, &x)| x != 0 && x as u64 != self.ambient.orders()[i]))
            .map(|row| {
                let v: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                if r == 1 {
                    v[0].clone()
                } else {
                    format!("({})", v.join(","))
                }
            })
            .collect();
        if gens.is_empty() {
            "e".to_string()
        } else {
            format!("<{}>", gens.join(","))
        }
    }
}

fn bit(mask: &[u64], c: u32) -> bool {
    mask[(c / 64) as usize] >> (c % 64) & 1 == 1
}

fn set_bit(mask: &mut [u64], c: u32) {
    mask[(c / 64) as usize] |= 1 << (c % 64);
}

fn canonical_generators(g: &FinAbGroup, elements: &[u32]) -> Vec<Vec<i64>> {
    let r = g.rank();
    let mut rows: Vec<Vec<i64>> = elements.iter().map(|&c| g.decode(c).iter().map(|&x| x as i64).collect()).collect();
    for i in 0..r {
        let mut v = vec![0; r];
        v[i] = g.orders()[i] as i64;
        rows.push(v);
    }
    if r == 0 {
        return vec![];
    }
    let h = hnf_rows(&IntMatrix::from_rows(&rows));
    (0..h.rows()).map(|i| (0..r).map(|j| h.get(i, j).to_i64().unwrap()).collect()).collect()
}

/// The full subgroup lattice of a group, with precomputed lattice operations.
#[derive(Debug)]
pub struct Lattice {
    pub group: FinAbGroup,
    pub subgroups: Vec<Subgroup>,
    index: HashMap<Vec<u64>, usize>,
    contains: Vec<Vec<bool>>,
    below: Vec<Vec<usize>>,
    maximal: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    cyclic: Vec<bool>,
}

static LATTICES: Lazy<Mutex<HashMap<FinAbGroup, Arc<Lattice>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized subgroup lattice of `g`; errors when `|g|` exceeds the size bound.
pub fn lattice(g: &FinAbGroup) -> Result<Arc<Lattice>> {
    let bound = size_bound();
    if g.order() > bound {
        return Err(KhomError::SizeBound { order: g.order(), bound });
    }
    if let Some(l) = LATTICES.lock().unwrap().get(g) {
        return Ok(l.clone());
    }
    let l = Arc::new(Lattice::build(g));
    LATTICES.lock().unwrap().insert(g.clone(), l.clone());
    Ok(l)
}

impl Lattice {
    fn build(g: &FinAbGroup) -> Lattice {
        let n = g.order() as u32;
        let words = (n as usize).div_ceil(64);
        let mut trivial = vec![0u64; words];
        set_bit(&mut trivial, 0);
        let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
        seen.insert(trivial.clone(), ());
        let mut queue = vec![trivial];
        let mut all = Vec::new();
        while let Some(m) = queue.pop() {
            for x in 0..n {
                if bit(&m, x) {
                    continue;
                }
                let j = join_cyclic(g, &m, x);
                if !seen.contains_key(&j) {
                    seen.insert(j.clone(), ());
                    queue.push(j);
                }
            }
            all.push(m);
        }
        let mut subs: Vec<Subgroup> = all.into_iter().map(|m| Subgroup::from_mask(g, m)).collect();
        subs.sort_by(|a, b| (a.order(), &a.generators).cmp(&(b.order(), &b.generators)));
        let index: HashMap<Vec<u64>, usize> = subs.iter().enumerate().map(|(i, s)| (s.mask.clone(), i)).collect();
        let k = subs.len();
        let mut contains = vec![vec![false; k]; k];
        for a in 0..k {
            for b in 0..k {
                contains[a][b] = subs[b].is_subgroup_of(&subs[a]);
            }
        }
        let below: Vec<Vec<usize>> = (0..k).map(|a| (0..k).filter(|&b| contains[a][b]).collect()).collect();
        let maximal: Vec<Vec<usize>> = (0..k)
            .map(|a| {
                below[a]
                    .iter()
                    .copied()
                    .filter(|&b| b != a && !below[a].iter().any(|&c| c != a && c != b && contains[c][b]))
                    .collect()
            })
            .collect();
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for a in 0..k {
            for b in 0..k {
                let m: Vec<u64> = subs[a].mask.iter().zip(&subs[b].mask).map(|(x, y)| x & y).collect();
                meet[a][b] = index[&m];
                // smallest subgroup containing both
                join[a][b] = (0..k).find(|&c| contains[c][a] && contains[c][b]).unwrap();
            }
        }
        let mut trivial = vec![0u64; words];
        set_bit(&mut trivial, 0);
        let cyclic = subs
            .iter()
            .map(|s| s.order() == 1 || s.elements.iter().any(|&x| join_cyclic(g, &trivial, x) == s.mask))
            .collect();
        Lattice { group: g.clone(), subgroups: subs, index, contains, below, maximal, meet, join, cyclic }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn sub(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order(&self, i: usize) -> u64 {
        self.subgroups[i].order()
    }

    /// Whether subgroup `small` is contained in subgroup `big`.
    pub fn contains(&self, big: usize, small: usize) -> bool {
        self.contains[big][small]
    }

    /// Subgroups of `k`, in lattice order.
    pub fn below(&self, k: usize) -> &[usize] {
        &self.below[k]
    }

    /// Maximal proper subgroups of `k` (the covering pairs below `k`).
    pub fn maximal(&self, k: usize) -> &[usize] {
        &self.maximal[k]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Index `[big : small]`.
    pub fn index(&self, small: usize, big: usize) -> u64 {
        self.order(big) / self.order(small)
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i]
    }

    /// Position of the subgroup with the given element set.
    pub fn find(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(&s.mask).copied()
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, elems: &[u32]) -> usize {
        let words = (self.group.order() as usize).div_ceil(64);
        let mut m = vec![0u64; words];
        set_bit(&mut m, 0);
        for &x in elems {
            if !bit(&m, x) {
                m = join_cyclic(&self.group, &m, x);
            }
        }
        self.index[&m]
    }

    /// Position of the subgroup given by an element predicate (must be a subgroup).
    pub fn from_elements(&self, elems: &[u32]) -> Option<usize> {
        let words = (self.group.order() as usize).div_ceil(64);
        let mut m = vec![0u64; words];
        for &x in elems {
            set_bit(&mut m, x);
        }
        self.index.get(&m).copied()
    }

    /// Cyclic subgroups of `k`.
    pub fn cyclic_below(&self, k: usize) -> Vec<usize> {
        self.below[k].iter().copied().filter(|&h| self.cyclic[h]).collect()
    }

    /// The subgroup `2K = {2x : x ∈ K}`.
    pub fn double(&self, k: usize) -> usize {
        let els: Vec<u32> = self.subgroups[k].elements.iter().map(|&x| self.group.scale(2, x)).collect();
        self.generated(&els)
    }

    /// All pairs `L ⊆ T ⊆ K` with `T/L ≅ C2 x C2`.
    pub fn v4_subquotients(&self, k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &t in &self.below[k] {
            for &l in &self.below[t] {
                if self.index(l, t) == 4 && self.is_v4_quotient(t, l) {
                    out.push((t, l));
                }
            }
        }
        out
    }

    fn is_v4_quotient(&self, t: usize, l: usize) -> bool {
        self.is_elementary_quotient(t, l, 2)
    }

    /// Whether `pT ⊆ L`.
    fn is_elementary_quotient(&self, t: usize, l: usize, p: u64) -> bool {
        self.subgroups[t].elements.iter().all(|&x| self.subgroups[l].contains_element(self.group.scale(p as i64, x)))
    }

    /// All `(T, L, p)` with `L ⊆ T ⊆ K` and `T/L ≅ Cp x Cp`.
    pub fn elementary_subquotients(&self, k: usize) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for &t in &self.below[k] {
            for &l in &self.below[t] {
                let idx = self.index(l, t);
                let p = (idx as f64).sqrt().round() as u64;
                if p > 1 && p * p == idx && crate::linalg::is_prime(p) && self.is_elementary_quotient(t, l, p) {
                    out.push((t, l, p));
                }
            }
        }
        out
    }

    /// The subgroups strictly between `l` and `t` (three when `T/L ≅ C2 x C2`).
    pub fn intermediate(&self, t: usize, l: usize) -> Vec<usize> {
        self.below[t].iter().copied().filter(|&m| m != t && m != l && self.contains[m][l]).collect()
    }
}

fn join_cyclic(g: &FinAbGroup, m: &[u64], x: u32) -> Vec<u64> {
    let n = g.order() as u32;
    let elems: Vec<u32> = (0..n).filter(|&c| bit(m, c)).collect();
    let mut out = m.to_vec();
    let mut cur = x;
    while !bit(m, cur) {
        for &s in &elems {
            set_bit(&mut out, g.add(s, cur));
        }
        cur = g.add(cur, x);
    }
    out
}

/// The splitting `G ≅ A x B` into the parts of order divisible only by the given primes
/// and the coprime complement. The Sylow decomposition is the case of one prime.
#[derive(Clone, Debug)]
pub struct Split {
    pub group: FinAbGroup,
    pub primes: Vec<u64>,
    /// The factor supported on `primes` (`N_p` for one prime).
    pub first: FinAbGroup,
    /// The coprime complement (`N`).
    pub second: FinAbGroup,
    first_of: Vec<Option<usize>>,
    second_of: Vec<Option<usize>>,
}

impl Split {
    pub fn new(g: &FinAbGroup, primes: &[u64]) -> Split {
        let mut first = Vec::new();
        let mut second = Vec::new();
        let mut first_of = Vec::new();
        let mut second_of = Vec::new();
        for &n in g.orders() {
            let mut a = 1;
            let mut b = n;
            for &p in primes {
                let (pa, m) = crate::linalg::split_prime(b, p);
                a *= pa;
                b = m;
            }
            first_of.push((a > 1).then(|| {
                first.push(a);
                first.len() - 1
            }));
            second_of.push((b > 1).then(|| {
                second.push(b);
                second.len() - 1
            }));
        }
        Split {
            group: g.clone(),
            primes: primes.to_vec(),
            first: FinAbGroup { orders: first },
            second: FinAbGroup { orders: second },
            first_of,
            second_of,
        }
    }

    /// Sylow decomposition `G = N_p x N`.
    pub fn sylow(g: &FinAbGroup, p: u64) -> Split {
        Self::new(g, &[p])
    }

    /// Images of an element in the two factors.
    pub fn to_parts(&self, code: u32) -> (u32, u32) {
        let x = self.group.decode(code);
        let mut a = vec![0; self.first.rank()];
        let mut b = vec![0; self.second.rank()];
        for (i, &xi) in x.iter().enumerate() {
            if let Some(j) = self.first_of[i] {
                a[j] = xi % self.first.orders()[j];
            }
            if let Some(j) = self.second_of[i] {
                b[j] = xi % self.second.orders()[j];
            }
        }
        (self.first.encode(&a), self.second.encode(&b))
    }

    /// The element with the given images (inverse of [`Split::to_parts`]).
    pub fn from_parts(&self, a: u32, b: u32) -> u32 {
        let (xa, xb) = (self.first.decode(a), self.second.decode(b));
        let mut x = vec![0; self.group.rank()];
        for (i, xi) in x.iter_mut().enumerate() {
            let n = self.group.orders()[i];
            let (ra, ma) = match self.first_of[i] {
                Some(j) => (xa[j], self.first.orders()[j]),
                None => (0, 1),
            };
            let (rb, mb) = match self.second_of[i] {
                Some(j) => (xb[j], self.second.orders()[j]),
                None => (0, 1),
            };
            // CRT on the coprime moduli ma, mb with ma * mb = n
            *xi = (0..n).find(|&v| v % ma == ra && v % mb == rb).unwrap();
        }
        self.group.encode(&x)
    }

    /// Decomposes a subgroup of `G` (in `lg`) as `(P, L)` in the factor lattices.
    pub fn parts_of(&self, lg: &Lattice, la: &Lattice, lb: &Lattice, t: usize) -> (usize, usize) {
        let mut ea = Vec::new();
        let mut eb = Vec::new();
        for &x in &lg.sub(t).elements {
            let (a, b) = self.to_parts(x);
            ea.push(a);
            eb.push(b);
        }
        (la.generated(&ea), lb.generated(&eb))
    }

    /// Table `t -> (P, L)` over the whole lattice of `G`.
    pub fn part_table(&self, lg: &Lattice, la: &Lattice, lb: &Lattice) -> Vec<(usize, usize)> {
        (0..lg.len()).map(|t| self.parts_of(lg, la, lb, t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(s: &str) -> Arc<Lattice> {
        lattice(&FinAbGroup::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn parse_groups() {
        assert_eq!(FinAbGroup::parse("C2xC4xC3").unwrap().orders(), &[2, 4, 3]);
        assert_eq!(FinAbGroup::parse("e").unwrap().order(), 1);
        assert!(FinAbGroup::parse("C1").is_err());
        assert!(FinAbGroup::parse("C2xD4").is_err());
        assert!(FinAbGroup::parse("").is_err());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lat("e").len(), 1);
        assert_eq!(lat("C4").len(), 3);
        assert_eq!(lat("C2xC2").len(), 5);
        assert_eq!(lat("C2xC2xC2").len(), 16);
    }

    #[test]
    fn cyclic_counts() {
        let v = lat("C2xC2");
        assert_eq!(v.cyclic_below(v.top()).len(), 4);
        let c4 = lat("C4");
        assert_eq!(c4.cyclic_below(c4.top()).len(), 3);
        let l = lat("C2xC4");
        assert_eq!(l.cyclic_below(l.top()).len(), 6);
    }

    #[test]
    fn sylow_examples() {
        let s = Split::sylow(&FinAbGroup::parse("C6").unwrap(), 2);
        assert_eq!((s.first.order(), s.second.order()), (2, 3));
        let s = Split::sylow(&FinAbGroup::parse("C4").unwrap(), 2);
        assert_eq!((s.first.order(), s.second.order()), (4, 1));
        let s = Split::sylow(&FinAbGroup::parse("C4xC3").unwrap(), 3);
        assert_eq!((s.first.order(), s.second.order()), (3, 4));
        for x in 0..12 {
            let (a, b) = s.to_parts(x);
            assert_eq!(s.from_parts(a, b), x);
        }
    }

    #[test]
    fn v4_and_double() {
        let v = lat("C2xC2");
        assert_eq!(v.v4_subquotients(v.top()), vec![(v.top(), 0)]);
        let c4 = lat("C4");
        assert!(c4.v4_subquotients(c4.top()).is_empty());
        assert_eq!(c4.order(c4.double(c4.top())), 2);
        assert_eq!(v.double(v.top()), 0);
        let l = lat("C2xC8");
        let d = l.double(l.top());
        assert!(l.sub(d).contains_element(l.group.encode(&[0, 2])));
        assert!(!l.sub(d).contains_element(l.group.encode(&[1, 0])));
        assert_eq!(l.order(d), 4);
    }

    #[test]
    fn v4_subquotients_c2xc4() {
        let l = lat("C2xC4");
        let pairs = l.v4_subquotients(l.top());
        let g = &l.group;
        let t1 = l.generated(&[g.encode(&[1, 0]), g.encode(&[0, 2])]);
        let l1 = l.generated(&[g.encode(&[0, 2])]);
        assert!(pairs.contains(&(t1, 0)));
        assert!(pairs.contains(&(l.top(), l1)));
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn all_groups_small() {
        let gs = FinAbGroup::all_up_to(16);
        let count16 = gs.iter().filter(|g| g.order() == 16).count();
        assert_eq!(count16, 5);
        assert_eq!(gs.iter().filter(|g| g.order() == 8).count(), 3);
        assert_eq!(gs.iter().filter(|g| g.order() == 12).count(), 2);
    }

    #[test]
    fn size_bound_error() {
        let g = FinAbGroup::new(vec![1024]).unwrap();
        assert!(matches!(lattice(&g), Err(KhomError::SizeBound { .. })));
    }
}
