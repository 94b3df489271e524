//! Characters and representation rings of the subgroups of a finite abelian group.
//!
//! The dual of the ambient group `G` is identified with `G` itself through
//! exponent vectors: `χ_a(x) = exp(2πi Σ a_i x_i / n_i)`. A character of a
//! subgroup `K` is a coset `a + K^⊥` and is stored by its smallest code.
//! Real irreps of `K` are the order-≤2 characters (`M_K`) followed by the
//! conjugate pairs of higher-order characters (`C_K`).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::abgroups::{lattice, FinAbGroup, Lattice};
use crate::error::{KhomError, Result};

/// Character data of one subgroup.
#[derive(Debug)]
pub struct CharData {
    /// Canonical ambient dual code of each character, ascending (trivial first).
    pub chars: Vec<u32>,
    class_of: Vec<u32>,
    pub is_real: Vec<bool>,
    pub conj: Vec<usize>,
    /// Kernel of each character, as a lattice index.
    pub kernel: Vec<usize>,
    /// Order of each character.
    pub char_order: Vec<u64>,
    /// Real-type characters (`M_K`), as character indices.
    pub real: Vec<usize>,
    /// Complex-type pairs (`C_K`) as `(representative, conjugate)` character indices.
    pub pairs: Vec<(usize, usize)>,
    /// Real irrep index of each character (pairs are numbered after `M_K`).
    pub irrep_of_char: Vec<usize>,
}

impl CharData {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn n_irreps(&self) -> usize {
        self.real.len() + self.pairs.len()
    }

    /// Whether character `i` is the conjugate (not the representative) of its pair.
    pub fn is_flipped(&self, i: usize) -> bool {
        !self.is_real[i] && self.pairs[self.irrep_of_char[i] - self.real.len()].0 != i
    }
}

/// A real irreducible representation of a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealIrrep {
    /// `χ` with `χ² = 1`.
    RealType { chi: usize },
    /// `{χ, χ̄}` with `χ² ≠ 1`; `chi` is the representative.
    ComplexType { chi: usize, conj: usize },
}

/// Character tables for every subgroup of a group.
#[derive(Debug)]
pub struct Reps {
    pub lattice: Arc<Lattice>,
    data: Vec<CharData>,
}

static REPS: Lazy<Mutex<HashMap<FinAbGroup, Arc<Reps>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized character data for `g`.
pub fn reps(g: &FinAbGroup) -> Result<Arc<Reps>> {
    if let Some(r) = REPS.lock().unwrap().get(g) {
        return Ok(r.clone());
    }
    let lat = lattice(g)?;
    let r = Arc::new(Reps::build(lat));
    REPS.lock().unwrap().insert(g.clone(), r.clone());
    Ok(r)
}

/// Phase of `χ_a(x)` as a residue modulo the exponent of `g`.
pub fn phase(g: &FinAbGroup, a: u32, x: u32) -> u64 {
    let e = g.exponent();
    let (av, xv) = (g.decode(a), g.decode(x));
    let mut s = 0u64;
    for i in 0..g.rank() {
        let n = g.orders()[i];
        s = (s + av[i] * xv[i] % n * (e / n)) % e;
    }
    s
}

impl Reps {
    fn build(lat: Arc<Lattice>) -> Reps {
        let g = lat.group.clone();
        let n = g.order() as u32;
        let mut data = Vec::with_capacity(lat.len());
        for k in 0..lat.len() {
            let els = &lat.sub(k).elements;
            let perp: Vec<u32> = (0..n).filter(|&a| els.iter().all(|&x| phase(&g, a, x) == 0)).collect();
            let mut class_of = vec![u32::MAX; n as usize];
            let mut chars = Vec::new();
            for a in 0..n {
                if class_of[a as usize] != u32::MAX {
                    continue;
                }
                let idx = chars.len() as u32;
                chars.push(a);
                for &b in &perp {
                    class_of[g.add(a, b) as usize] = idx;
                }
            }
            let m = chars.len();
            let conj: Vec<usize> = chars.iter().map(|&a| class_of[g.neg(a) as usize] as usize).collect();
            let is_real: Vec<bool> = (0..m).map(|i| conj[i] == i).collect();
            let mut kernel = Vec::with_capacity(m);
            let mut char_order = Vec::with_capacity(m);
            for &a in &chars {
                let ker: Vec<u32> = els.iter().copied().filter(|&x| phase(&g, a, x) == 0).collect();
                char_order.push(els.len() as u64 / ker.len() as u64);
                kernel.push(lat.from_elements(&ker).expect("kernel is a subgroup"));
            }
            let real: Vec<usize> = (0..m).filter(|&i| is_real[i]).collect();
            let pairs: Vec<(usize, usize)> = (0..m).filter(|&i| !is_real[i] && i < conj[i]).map(|i| (i, conj[i])).collect();
            let mut irrep_of_char = vec![0; m];
            for (j, &i) in real.iter().enumerate() {
                irrep_of_char[i] = j;
            }
            for (j, &(a, b)) in pairs.iter().enumerate() {
                irrep_of_char[a] = real.len() + j;
                irrep_of_char[b] = real.len() + j;
            }
            data.push(CharData { chars, class_of, is_real, conj, kernel, char_order, real, pairs, irrep_of_char });
        }
        Reps { lattice: lat, data }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.lattice.group
    }

    pub fn chars(&self, k: usize) -> &CharData {
        &self.data[k]
    }

    /// Exponent vector (in the ambient dual) of character `i` of `k`.
    pub fn exponents(&self, k: usize, i: usize) -> Vec<u64> {
        self.group().decode(self.data[k].chars[i])
    }

    /// Real irreps of `k`: `M_K` then `C_K`.
    pub fn real_irreps(&self, k: usize) -> (Vec<RealIrrep>, Vec<RealIrrep>) {
        let d = &self.data[k];
        let m = d.real.iter().map(|&chi| RealIrrep::RealType { chi }).collect();
        let c = d.pairs.iter().map(|&(chi, conj)| RealIrrep::ComplexType { chi, conj }).collect();
        (m, c)
    }

    pub fn irreps(&self, k: usize) -> Vec<RealIrrep> {
        let (mut m, c) = self.real_irreps(k);
        m.extend(c);
        m
    }

    /// Restriction of character `i` of `k` to `t ⊆ k`.
    pub fn restrict_char(&self, t: usize, k: usize, i: usize) -> usize {
        debug_assert!(self.lattice.contains(k, t));
        self.data[t].class_of[self.data[k].chars[i] as usize] as usize
    }

    /// Characters of `k` restricting to character `i` of `t`.
    pub fn induce_char(&self, t: usize, k: usize, i: usize) -> Vec<usize> {
        (0..self.data[k].len()).filter(|&j| self.restrict_char(t, k, j) == i).collect()
    }

    /// `ψ^g` on a character: `χ ↦ χ^g`.
    pub fn adams_char(&self, k: usize, g: i64, i: usize) -> Result<usize> {
        let order = self.lattice.order(k);
        if num_integer::gcd(g.unsigned_abs(), order) != 1 {
            return Err(KhomError::Invalid(format!("Adams operation ψ^{g} needs g coprime to {order}")));
        }
        let code = self.group().scale(g, self.data[k].chars[i]);
        Ok(self.data[k].class_of[code as usize] as usize)
    }

    /// Characters of `t` trivial on `l`: the characters of the quotient `t/l`.
    pub fn quotient_chars(&self, t: usize, l: usize) -> Vec<usize> {
        let d = &self.data[t];
        (0..d.len()).filter(|&i| self.lattice.contains(d.kernel[i], l)).collect()
    }

    /// Subgroups of `k` with cyclic quotient: the kernels indexing the rational irreps.
    pub fn rational_irreps(&self, k: usize) -> Vec<usize> {
        let mut ks: Vec<usize> = self.data[k].kernel.clone();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    pub fn rational_irrep_count(&self, k: usize) -> usize {
        self.rational_irreps(k).len()
    }

    /// Orbits of `ψ^g` on `C_K` (`p = 2`) or on nontrivial characters (`p` odd).
    pub fn adams_orbits(&self, k: usize, g: i64, p: u64) -> Result<Vec<Orbit>> {
        let d = &self.data[k];
        let mut seen = vec![false; d.len()];
        let mut out = Vec::new();
        let starts: Vec<usize> = if p == 2 {
            d.pairs.iter().map(|&(a, _)| a).collect()
        } else {
            (1..d.len()).collect()
        };
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut members = vec![s];
            seen[s] = true;
            if p == 2 {
                seen[d.conj[s]] = true;
            }
            let mut cur = self.adams_char(k, g, s)?;
            while cur != s {
                if p == 2 && cur == d.conj[s] {
                    return Err(KhomError::Consistency(format!("ψ^{g} maps a character to its conjugate")));
                }
                members.push(cur);
                seen[cur] = true;
                if p == 2 {
                    seen[d.conj[cur]] = true;
                }
                cur = self.adams_char(k, g, cur)?;
            }
            let kernel = d.kernel[s];
            let q = d.char_order[s];
            let t = (q as f64).log(p as f64).round() as u32;
            let flips = members.iter().map(|&m| p == 2 && d.is_flipped(m)).collect();
            out.push(Orbit { members, flips, kernel, t });
        }
        Ok(out)
    }

    /// `n_{V,H}`: dimension of the `H`-fixed part of a virtual representation of the top group.
    pub fn fixed_dim(&self, v: &VirtualRep, h: usize) -> i64 {
        let top = self.lattice.top();
        let d = &self.data[top];
        let mut n = 0;
        for (j, &c) in v.coeffs.iter().enumerate() {
            let (chi, dim) = if j < d.real.len() { (d.real[j], 1) } else { (d.pairs[j - d.real.len()].0, 2) };
            if self.lattice.contains(d.kernel[chi], h) {
                n += c * dim;
            }
        }
        n
    }
}

/// One orbit of `ψ^g`: the walk `w_0, w_0^g, w_0^{g²}, ...`.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Character indices along the walk.
    pub members: Vec<usize>,
    /// For `p = 2`: whether each walk character is the conjugate of its pair representative.
    pub flips: Vec<bool>,
    /// Common kernel of the orbit's characters.
    pub kernel: usize,
    /// `|K/kernel| = p^t`.
    pub t: u32,
}

/// Virtual complex representation: coefficients over the characters of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RUElement {
    pub k: usize,
    pub coeffs: Vec<i64>,
}

/// Virtual real representation: coefficients over the real irreps of `k` (`M_K` then `C_K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ROElement {
    pub k: usize,
    pub coeffs: Vec<i64>,
}

impl RUElement {
    pub fn basis(r: &Reps, k: usize, i: usize) -> Self {
        let mut coeffs = vec![0; r.chars(k).len()];
        coeffs[i] = 1;
        RUElement { k, coeffs }
    }
}

impl ROElement {
    pub fn basis(r: &Reps, k: usize, j: usize) -> Self {
        let mut coeffs = vec![0; r.chars(k).n_irreps()];
        coeffs[j] = 1;
        ROElement { k, coeffs }
    }
}

pub fn complexify(r: &Reps, x: &ROElement) -> RUElement {
    let d = r.chars(x.k);
    let mut coeffs = vec![0; d.len()];
    for (j, &c) in x.coeffs.iter().enumerate() {
        if j < d.real.len() {
            coeffs[d.real[j]] += c;
        } else {
            let (a, b) = d.pairs[j - d.real.len()];
            coeffs[a] += c;
            coeffs[b] += c;
        }
    }
    RUElement { k: x.k, coeffs }
}

/// The unique real preimage of a conjugation-invariant complex class.
pub fn realify(r: &Reps, x: &RUElement) -> Result<ROElement> {
    let d = r.chars(x.k);
    let mut coeffs = vec![0; d.n_irreps()];
    for (j, &i) in d.real.iter().enumerate() {
        coeffs[j] = x.coeffs[i];
    }
    for (j, &(a, b)) in d.pairs.iter().enumerate() {
        if x.coeffs[a] != x.coeffs[b] {
            return Err(KhomError::Consistency("complex class is not conjugation invariant".into()));
        }
        coeffs[d.real.len() + j] = x.coeffs[a];
    }
    Ok(ROElement { k: x.k, coeffs })
}

fn check_inclusion(r: &Reps, h: usize, k: usize) -> Result<()> {
    if r.lattice.contains(k, h) {
        Ok(())
    } else {
        Err(KhomError::Invalid(format!("subgroup {h} is not contained in {k}")))
    }
}

pub fn restrict_ru(r: &Reps, x: &RUElement, h: usize) -> Result<RUElement> {
    check_inclusion(r, h, x.k)?;
    let mut coeffs = vec![0; r.chars(h).len()];
    for (i, &c) in x.coeffs.iter().enumerate() {
        coeffs[r.restrict_char(h, x.k, i)] += c;
    }
    Ok(RUElement { k: h, coeffs })
}

/// Induction from `x.k` up to `k`.
pub fn transfer_ru(r: &Reps, x: &RUElement, k: usize) -> Result<RUElement> {
    check_inclusion(r, x.k, k)?;
    let mut coeffs = vec![0; r.chars(k).len()];
    for j in 0..coeffs.len() {
        coeffs[j] = x.coeffs[r.restrict_char(x.k, k, j)];
    }
    Ok(RUElement { k, coeffs })
}

pub fn restrict_ro(r: &Reps, x: &ROElement, h: usize) -> Result<ROElement> {
    realify(r, &restrict_ru(r, &complexify(r, x), h)?)
}

/// Real transfer through complexification and its unique preimage.
pub fn transfer_ro(r: &Reps, x: &ROElement, k: usize) -> Result<ROElement> {
    realify(r, &transfer_ru(r, &complexify(r, x), k)?)
}

pub fn adams_ru(r: &Reps, g: i64, x: &RUElement) -> Result<RUElement> {
    let mut coeffs = vec![0; x.coeffs.len()];
    for (i, &c) in x.coeffs.iter().enumerate() {
        coeffs[r.adams_char(x.k, g, i)?] += c;
    }
    Ok(RUElement { k: x.k, coeffs })
}

pub fn adams_ro(r: &Reps, g: i64, x: &ROElement) -> Result<ROElement> {
    realify(r, &adams_ru(r, g, &complexify(r, x))?)
}

/// Inflation along `t → t/l`: `coeffs` are indexed by [`Reps::quotient_chars`].
pub fn inflate_ru(r: &Reps, t: usize, l: usize, coeffs: &[i64]) -> Result<RUElement> {
    let q = r.quotient_chars(t, l);
    if q.len() != coeffs.len() {
        return Err(KhomError::Invalid("coefficient count does not match the quotient".into()));
    }
    let mut out = vec![0; r.chars(t).len()];
    for (&i, &c) in q.iter().zip(coeffs) {
        out[i] += c;
    }
    Ok(RUElement { k: t, coeffs: out })
}

/// Virtual real representation of the top group, over its real irreps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualRep {
    pub coeffs: Vec<i64>,
}

impl VirtualRep {
    /// `n` copies of the trivial representation.
    pub fn trivial(r: &Reps, n: i64) -> Self {
        let mut coeffs = vec![0; r.chars(r.lattice.top()).n_irreps()];
        coeffs[0] = n;
        VirtualRep { coeffs }
    }

    /// Parses `"2*r0 + c1 - 3*r1"` against the irreps of the top group.
    pub fn parse(r: &Reps, s: &str) -> Result<Self> {
        let d = r.chars(r.lattice.top());
        let mut coeffs = vec![0i64; d.n_irreps()];
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(KhomError::Parse("empty representation".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (mult, name) = match body.split_once('*') {
                Some((m, n)) => {
                    (m.parse::<i64>().map_err(|_| KhomError::Parse(format!("bad multiplicity in {term:?}")))?, n)
                }
                None => (1, body),
            };
            let bad = || KhomError::Parse(format!("unknown irrep {name:?}"));
            let idx: usize = name.get(1..).and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            let j = match name.chars().next() {
                Some('r') if idx < d.real.len() => idx,
                Some('c') if idx < d.pairs.len() => d.real.len() + idx,
                _ => return Err(bad()),
            };
            coeffs[j] += sign * mult;
        }
        Ok(VirtualRep { coeffs })
    }
}

/// Names and defining exponent vectors of the real irreps of the top group.
pub fn irrep_names(r: &Reps) -> Vec<(String, Vec<u64>)> {
    let top = r.lattice.top();
    let d = r.chars(top);
    let mut out: Vec<(String, Vec<u64>)> =
        d.real.iter().enumerate().map(|(j, &i)| (format!("r{j}"), r.exponents(top, i))).collect();
    out.extend(d.pairs.iter().enumerate().map(|(j, &(i, _))| (format!("c{j}"), r.exponents(top, i))));
    out
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> Arc<Reps> {
        reps(&FinAbGroup::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn real_irrep_counts() {
        for (g, m, c) in [("C2", 2, 0), ("C4", 2, 1), ("C8", 2, 3), ("C2xC2", 4, 0)] {
            let r = rp(g);
            let (mm, cc) = r.real_irreps(r.lattice.top());
            assert_eq!((mm.len(), cc.len()), (m, c), "{g}");
        }
    }

    #[test]
    fn adams_orbit_sizes() {
        let r = rp("C4");
        let o = r.adams_orbits(2, 5, 2).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].members.len(), 1);
        let r8 = rp("C8");
        let o8 = r8.adams_orbits(r8.lattice.top(), 5, 2).unwrap();
        let mut sizes: Vec<usize> = o8.iter().map(|o| o.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        let r3 = rp("C3");
        let o3 = r3.adams_orbits(1, 2, 3).unwrap();
        assert_eq!(o3.len(), 1);
        assert_eq!(o3[0].members.len(), 2);
        let v = rp("C2xC2");
        assert!(v.adams_orbits(v.lattice.top(), 5, 2).unwrap().is_empty());
    }

    #[test]
    fn restriction_and_transfer_c4() {
        let r = rp("C4");
        let (c2, c4) = (1, 2);
        // λ is irrep index 2 (after 1, σ)
        let lam = ROElement::basis(&r, c4, 2);
        let res = restrict_ro(&r, &lam, c2).unwrap();
        assert_eq!(res.coeffs, vec![0, 2]);
        let sigma = ROElement::basis(&r, c4, 1);
        assert_eq!(restrict_ro(&r, &sigma, c2).unwrap().coeffs, vec![1, 0]);
        let eps = ROElement::basis(&r, c2, 1);
        assert_eq!(transfer_ro(&r, &eps, c4).unwrap().coeffs, vec![0, 0, 1]);
        let one = ROElement::basis(&r, 0, 0);
        assert_eq!(transfer_ro(&r, &one, c2).unwrap().coeffs, vec![1, 1]);
    }

    #[test]
    fn inflation_of_sign() {
        let r = rp("C4");
        let q = r.quotient_chars(2, 1);
        assert_eq!(q.len(), 2);
        let x = inflate_ru(&r, 2, 1, &[0, 1]).unwrap();
        let sigma = complexify(&r, &ROElement::basis(&r, 2, 1));
        assert_eq!(x, sigma);
    }

    #[test]
    fn rational_counts() {
        for (g, n) in [("C4", 3), ("C2xC2", 4), ("C2xC4", 6)] {
            let r = rp(g);
            assert_eq!(r.rational_irrep_count(r.lattice.top()), n, "{g}");
        }
    }

    #[test]
    fn fixed_dims() {
        let r = rp("C4");
        let v = VirtualRep::parse(&r, "c0").unwrap();
        assert_eq!(r.fixed_dim(&v, 1), 0);
        assert_eq!(r.fixed_dim(&v, 0), 2);
        let s = VirtualRep::parse(&r, "r1").unwrap();
        assert_eq!(r.fixed_dim(&s, 0), 1);
        let t = VirtualRep::trivial(&r, 5);
        assert!((0..3).all(|h| r.fixed_dim(&t, h) == 5));
        let w = VirtualRep::parse(&r, "2*r0 + c0 - 3*r1").unwrap();
        assert_eq!(w.coeffs, vec![2, -3, 1]);
        assert!(VirtualRep::parse(&r, "r7").is_err());
    }

    #[test]
    fn adams_rejects_non_coprime() {
        let r = rp("C4");
        assert!(r.adams_char(2, 2, 1).is_err());
    }
}
