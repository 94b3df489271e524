//! Burnside rings of the subgroups of an abelian group, marks, linearization,
//! the Brauer-relation lattices `J(K)` and the Mackey functors `A`, `J`, `A/J`.
//!
//! `A(K)` has basis `[K/H]` for `H ⊆ K`, indexed by `Lattice::below(k)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use once_cell::sync::Lazy;

use crate::abgroups::{lattice, FinAbGroup, Lattice};
use crate::error::{KhomError, Result};
use crate::linalg::{hnf_cols, kernel_lattice, solve_lattice, IntMatrix, Mat, Presentation, Ring};
use crate::mackey::{Coords, Level, MackeyFunctor, Presented};
use crate::reps::{reps, RUElement};

/// Integer combination of the orbits `[K/H]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    pub k: usize,
    /// Coefficients over `Lattice::below(k)`.
    pub coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(lat: &Lattice, k: usize) -> Self {
        BurnsideElement { k, coeffs: vec![0; lat.below(k).len()] }
    }

    /// The orbit `[K/H]`.
    pub fn orbit(lat: &Lattice, k: usize, h: usize) -> Self {
        let mut x = Self::zero(lat, k);
        x.coeffs[pos(lat, k, h)] = 1;
        x
    }

    pub fn one(lat: &Lattice, k: usize) -> Self {
        Self::orbit(lat, k, k)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "elements over different subgroups");
        BurnsideElement { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        BurnsideElement { k: self.k, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }
}

/// Position of `h` in `Lattice::below(k)`.
pub fn pos(lat: &Lattice, k: usize, h: usize) -> usize {
    lat.below(k).iter().position(|&x| x == h).unwrap_or_else(|| panic!("subgroup {h} is not below {k}"))
}

/// Mark table of `A(K)`: entry `(T, H)` is `|(K/H)^T|`.
pub fn mark_table(lat: &Lattice, k: usize) -> Mat {
    let b = lat.below(k);
    let mut m = Mat::zeros(b.len(), b.len());
    for (i, &t) in b.iter().enumerate() {
        for (j, &h) in b.iter().enumerate() {
            if lat.contains(h, t) {
                m.set(i, j, lat.index(h, k) as i64);
            }
        }
    }
    m
}

/// Marks of `x` at every subgroup of `K`.
pub fn marks(lat: &Lattice, x: &BurnsideElement) -> Vec<i64> {
    let b = lat.below(x.k);
    b.iter()
        .map(|&t| {
            b.iter()
                .zip(&x.coeffs)
                .filter(|&(&h, _)| lat.contains(h, t))
                .map(|(&h, &c)| c * lat.index(h, x.k) as i64)
                .sum()
        })
        .collect()
}

/// Inverts the mark map; errors when the vector is not the marks of an integral element.
pub fn from_marks(lat: &Lattice, k: usize, m: &[i64]) -> Result<BurnsideElement> {
    let b = lat.below(k);
    let mut coeffs = vec![0i64; b.len()];
    for i in (0..b.len()).rev() {
        let h = b[i];
        let mut r = m[i];
        for j in i + 1..b.len() {
            if lat.contains(b[j], h) {
                r -= coeffs[j] * lat.index(b[j], k) as i64;
            }
        }
        let q = lat.index(h, k) as i64;
        if r % q != 0 {
            return Err(KhomError::Invalid("mark vector is not integral".into()));
        }
        coeffs[i] = r / q;
    }
    Ok(BurnsideElement { k, coeffs })
}

/// Product through pointwise multiplication of marks.
pub fn multiply(lat: &Lattice, x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
    assert_eq!(x.k, y.k, "elements over different subgroups");
    let m: Vec<i64> = marks(lat, x).iter().zip(marks(lat, y)).map(|(a, b)| a * b).collect();
    from_marks(lat, x.k, &m).expect("products of integral elements are integral")
}

/// Product from `[K/H]·[K/H'] = [K:HH']·[K/(H∩H')]`.
pub fn multiply_closed(lat: &Lattice, x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
    let k = x.k;
    let b = lat.below(k);
    let mut out = BurnsideElement::zero(lat, k);
    for (i, &h) in b.iter().enumerate() {
        for (j, &h2) in b.iter().enumerate() {
            let c = x.coeffs[i] * y.coeffs[j];
            if c != 0 {
                let idx = lat.index(lat.join(h, h2), k) as i64;
                out.coeffs[pos(lat, k, lat.meet(h, h2))] += c * idx;
            }
        }
    }
    out
}

/// `X_V = ([V/A]-1)([V/B]-1)([V/C]-1) - 1` for `V ≅ C2 x C2`.
pub fn brauer_element_v(lat: &Lattice, v: usize) -> Result<BurnsideElement> {
    let e = lat.below(v)[0];
    if lat.order(v) != 4 || !lat.v4_subquotients(v).contains(&(v, e)) {
        return Err(KhomError::Invalid("Brauer element needs a subgroup of shape C2xC2".into()));
    }
    let one = BurnsideElement::one(lat, v);
    let mut x = one.clone();
    for m in lat.intermediate(v, e) {
        x = multiply(lat, &x, &BurnsideElement::orbit(lat, v, m).sub(&one));
    }
    Ok(x.sub(&one))
}

/// `Tr_T^K Inf_{T/L}^T` of the Brauer relation of `T/L ≅ Cp x Cp`:
/// `-[K/L] + Σ_M [K/M] - p[K/T]` over the `p + 1` subgroups `L < M < T`.
pub fn brauer_subquotient(lat: &Lattice, k: usize, t: usize, l: usize) -> BurnsideElement {
    let p = lat.intermediate(t, l).len() as i64 - 1;
    let mut x = BurnsideElement::zero(lat, k);
    x.coeffs[pos(lat, k, l)] -= 1;
    for m in lat.intermediate(t, l) {
        x.coeffs[pos(lat, k, m)] += 1;
    }
    x.coeffs[pos(lat, k, t)] -= p;
    x
}

/// Linearization `[K/H] ↦ Σ_{H ⊆ ker χ} χ`.
pub fn linearize(lat: &Lattice, x: &BurnsideElement) -> Result<RUElement> {
    let r = reps(&lat.group)?;
    let d = r.chars(x.k);
    let b = lat.below(x.k);
    let mut coeffs = vec![0; d.len()];
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = b.iter().zip(&x.coeffs).filter(|&(&h, _)| lat.contains(d.kernel[i], h)).map(|(_, &a)| a).sum();
    }
    Ok(RUElement { k: x.k, coeffs })
}

/// Linearization matrix: characters × subgroups.
pub fn linearization_matrix(lat: &Lattice, k: usize) -> Result<Mat> {
    let n = lat.below(k).len();
    let cols: Vec<Vec<i64>> =
        (0..n).map(|j| linearize(lat, &BurnsideElement { k, coeffs: unit(n, j) }).map(|u| u.coeffs)).collect::<Result<_>>()?;
    let rows = cols.first().map_or(0, |c| c.len());
    let mut m = Mat::zeros(rows, n);
    for (j, c) in cols.iter().enumerate() {
        for (i, &v) in c.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}

/// Brauer generators of `J(K)`, one per `Cp x Cp` subquotient (the `C2 x C2` ones alone for 2-groups).
pub fn brauer_generators(lat: &Lattice, k: usize) -> Vec<BurnsideElement> {
    lat.elementary_subquotients(k).into_iter().map(|(t, l, _)| brauer_subquotient(lat, k, t, l)).collect()
}

fn to_cols(n: usize, xs: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_cols(n, xs)
}

fn int_to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.cols()).map(|j| m.column(j).iter().map(|x| x.to_i64().expect("small entry")).collect()).collect()
}

/// Per-level data: the canonical basis of `J(K)` inside `A(K)`.
#[derive(Debug)]
pub struct BurnsideData {
    pub lattice: Arc<Lattice>,
    /// For each level, basis vectors of `J(K)` over `below(k)`.
    pub j_basis: Vec<Vec<Vec<i64>>>,
}

static BURNSIDE: Lazy<Mutex<HashMap<FinAbGroup, Arc<BurnsideData>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized `J` bases, with the Brauer span checked against the kernel of linearization.
pub fn burnside_data(g: &FinAbGroup) -> Result<Arc<BurnsideData>> {
    if let Some(d) = BURNSIDE.lock().unwrap().get(g) {
        return Ok(d.clone());
    }
    let lat = lattice(g)?;
    let mut j_basis = Vec::with_capacity(lat.len());
    for k in 0..lat.len() {
        let n = lat.below(k).len();
        let gens: Vec<Vec<i64>> = brauer_generators(&lat, k).into_iter().map(|x| x.coeffs).collect();
        let span = if gens.is_empty() { IntMatrix::zeros(n, 0) } else { hnf_cols(&to_cols(n, &gens)) };
        let ker = kernel_lattice(&linearization_matrix(&lat, k)?.to_int());
        if span != ker {
            return Err(KhomError::Consistency(format!(
                "Brauer generators span rank {} but the linearization kernel has rank {} at subgroup {k}",
                span.cols(),
                ker.cols()
            )));
        }
        j_basis.push(int_to_i64(&ker));
    }
    let d = Arc::new(BurnsideData { lattice: lat, j_basis });
    BURNSIDE.lock().unwrap().insert(g.clone(), d.clone());
    Ok(d)
}

/// Whether `x` lies in `J(K)`, by vanishing marks on cyclic subgroups.
pub fn in_j_by_marks(lat: &Lattice, x: &BurnsideElement) -> bool {
    let m = marks(lat, x);
    lat.below(x.k).iter().zip(&m).all(|(&t, &v)| !lat.is_cyclic(t) || v == 0)
}

/// Labels `[K/H]` for the basis of `A(K)`.
pub fn orbit_labels(lat: &Lattice, k: usize) -> Vec<String> {
    let top = lat.sub(k).label();
    lat.below(k).iter().map(|&h| format!("[{top}/{}]", lat.sub(h).label())).collect()
}

/// `Res_T^K` on `A`: `[K/H] ↦ [K:TH]·[T/(T∩H)]`.
pub fn a_res(lat: &Lattice, t: usize, k: usize) -> Mat {
    let (bt, bk) = (lat.below(t), lat.below(k));
    let mut m = Mat::zeros(bt.len(), bk.len());
    for (j, &h) in bk.iter().enumerate() {
        let i = pos(lat, t, lat.meet(t, h));
        m.add_to(i, j, lat.index(lat.join(t, h), k) as i64);
    }
    m
}

/// `Tr_T^K` on `A`: `[T/H] ↦ [K/H]`.
pub fn a_tr(lat: &Lattice, t: usize, k: usize) -> Mat {
    let (bt, bk) = (lat.below(t), lat.below(k));
    let mut m = Mat::zeros(bk.len(), bt.len());
    for (j, &h) in bt.iter().enumerate() {
        m.set(pos(lat, k, h), j, 1);
    }
    m
}

pub fn a_mackey(g: &FinAbGroup) -> Result<MackeyFunctor> {
    let lat = lattice(g)?;
    let levels = (0..lat.len()).map(|k| Level::free(Ring::Integral, orbit_labels(&lat, k))).collect();
    let (l1, l2) = (lat.clone(), lat.clone());
    MackeyFunctor::from_all(lat, levels, move |t, k| Ok(a_res(&l1, t, k)), move |t, k| Ok(a_tr(&l2, t, k)))
}

fn solve_in(basis: &[Vec<i64>], n: usize, v: &[i64]) -> Result<Vec<i64>> {
    let b = to_cols(n, basis);
    let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let y = solve_lattice(&b, &big).ok_or_else(|| KhomError::Consistency("image leaves the J lattice".into()))?;
    Ok(y.iter().map(|x| x.to_i64().expect("small coefficient")).collect())
}

/// Map on `J` induced by an `A` map `a` from level `src` to level `dst`.
fn j_map(d: &BurnsideData, a: &Mat, src: usize, dst: usize) -> Result<Mat> {
    let n = d.lattice.below(dst).len();
    let mut m = Mat::zeros(d.j_basis[dst].len(), d.j_basis[src].len());
    for (j, v) in d.j_basis[src].iter().enumerate() {
        let col = Mat::from_rows(&v.iter().map(|&x| vec![x]).collect::<Vec<_>>());
        let img = a.mul(&col).column(0);
        for (i, y) in solve_in(&d.j_basis[dst], n, &img)?.into_iter().enumerate() {
            m.set(i, j, y);
        }
    }
    Ok(m)
}

pub fn j_mackey(g: &FinAbGroup) -> Result<MackeyFunctor> {
    let d = burnside_data(g)?;
    let lat = d.lattice.clone();
    let levels = (0..lat.len())
        .map(|k| Level::free(Ring::Integral, (0..d.j_basis[k].len()).map(|i| format!("j{i}")).collect()))
        .collect();
    let (d1, d2) = (d.clone(), d.clone());
    MackeyFunctor::from_covering(
        lat,
        levels,
        move |t, k| j_map(&d1, &a_res(&d1.lattice, t, k), k, t),
        move |t, k| j_map(&d2, &a_tr(&d2.lattice, t, k), t, k),
    )
}

/// `A/J` as a presentation: generators `[K/H]`, relations the `J(K)` basis.
pub fn a_mod_j_presented(g: &FinAbGroup) -> Result<Presented> {
    let d = burnside_data(g)?;
    let lat = d.lattice.clone();
    let levels = (0..lat.len())
        .map(|k| {
            let n = lat.below(k).len();
            Presentation::new(orbit_labels(&lat, k), vec![0; n], to_cols(n, &d.j_basis[k]))
        })
        .collect();
    let (l1, l2) = (lat.clone(), lat.clone());
    Presented::new(lat, levels).with_maps(move |t, k| Ok(a_res(&l1, t, k)), move |t, k| Ok(a_tr(&l2, t, k)))
}

/// `A/J` with its coordinates on each level.
pub fn a_mod_j(g: &FinAbGroup) -> Result<(MackeyFunctor, Vec<Coords>)> {
    a_mod_j_presented(g)?.finalize(Ring::Integral)
}

pub fn a_mod_j_mackey(g: &FinAbGroup) -> Result<MackeyFunctor> {
    Ok(a_mod_j(g)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::check_axioms;

    fn lat(s: &str) -> Arc<Lattice> {
        lattice(&FinAbGroup::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn marks_examples() {
        let l = lat("C2xC2");
        let v = l.top();
        assert_eq!(marks(&l, &BurnsideElement::one(&l, v)), vec![1; 5]);
        assert_eq!(marks(&l, &BurnsideElement::orbit(&l, v, 0)), vec![4, 0, 0, 0, 0]);
        let x = brauer_element_v(&l, v).unwrap();
        assert_eq!(marks(&l, &x), vec![0, 0, 0, 0, -2]);
        assert_eq!(x.coeffs, vec![-1, 1, 1, 1, -2]);
        assert!(linearize(&l, &x).unwrap().coeffs.iter().all(|&c| c == 0));
        assert_eq!(brauer_subquotient(&l, v, v, 0), x);
    }

    #[test]
    fn products() {
        let l = lat("C2xC2");
        let v = l.top();
        let o = |h| BurnsideElement::orbit(&l, v, h);
        assert_eq!(multiply(&l, &o(1), &o(2)), o(0));
        assert_eq!(multiply(&l, &o(0), &o(3)), o(0).scale(2));
        assert_eq!(multiply(&l, &o(v), &o(2)), o(2));
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(multiply(&l, &o(a), &o(b)), multiply_closed(&l, &o(a), &o(b)));
            }
        }
    }

    #[test]
    fn linearization_examples() {
        let l = lat("C4");
        assert_eq!(linearize(&l, &BurnsideElement::orbit(&l, 2, 1)).unwrap().coeffs, vec![1, 0, 1, 0]);
        let l2 = lat("C2");
        assert_eq!(linearize(&l2, &BurnsideElement::orbit(&l2, 1, 0)).unwrap().coeffs, vec![1, 1]);
        assert_eq!(linearize(&l2, &BurnsideElement::one(&l2, 1)).unwrap().coeffs, vec![1, 0]);
    }

    #[test]
    fn j_ranks() {
        let d = burnside_data(&FinAbGroup::parse("C2xC2xC2").unwrap()).unwrap();
        let top = d.lattice.top();
        assert_eq!(d.lattice.below(top).len(), 16);
        assert_eq!(d.j_basis[top].len(), 8);
        let c = burnside_data(&FinAbGroup::parse("C8").unwrap()).unwrap();
        assert!(c.j_basis.iter().all(|b| b.is_empty()));
        let v = burnside_data(&FinAbGroup::parse("C2xC2").unwrap()).unwrap();
        assert_eq!(v.j_basis[v.lattice.top()].len(), 1);
    }

    #[test]
    fn a_mod_j_ranks() {
        let m = a_mod_j_mackey(&FinAbGroup::parse("C6").unwrap()).unwrap();
        let top = m.lattice.top();
        assert_eq!(m.levels[top].fg().free_rank, 4);
        assert!(m.levels[top].fg().torsion.is_empty());
        let v = a_mod_j_mackey(&FinAbGroup::parse("C2xC2").unwrap()).unwrap();
        assert_eq!(v.levels[v.lattice.top()].fg().free_rank, 4);
        assert_eq!(a_mackey(&FinAbGroup::trivial()).unwrap().levels[0].dim(), 1);
    }

    #[test]
    fn functors_satisfy_axioms() {
        for g in ["e", "C2", "C4", "C2xC2", "C6", "C2xC4"] {
            let g = FinAbGroup::parse(g).unwrap();
            assert!(check_axioms(&a_mackey(&g).unwrap()).ok);
            assert!(check_axioms(&j_mackey(&g).unwrap()).ok);
            assert!(check_axioms(&a_mod_j_mackey(&g).unwrap()).ok);
        }
    }

    #[test]
    fn a_res_orbit_count() {
        // Res_A^V Tr_B^V [B/e] = 2 [A/e]
        let l = lat("C2xC2");
        let v = l.top();
        let x = a_res(&l, 1, v).mul(&a_tr(&l, 2, v));
        assert_eq!(x.get(pos(&l, 1, 0), pos(&l, 2, 0)), 2);
    }
}
