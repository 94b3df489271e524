//! Equivariant K-theory coefficients, the operator `ψ^g - 1`, and the Mackey
//! functors given by its kernel and cokernel.
//!
//! At `p = 2` the coefficients are `π_n KO_K`: real-type characters carry the
//! ring `Z[η, α, u^±]/(2η, η³, ηα, α² - 4u)` and complex pairs carry `β^m`.
//! At odd `p` they are `π_n KU_K`: characters times `β^m`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::abgroups::{lattice, FinAbGroup};
use crate::error::{KhomError, Result};
use crate::linalg::{is_prime, mod_inv, mod_pow, snf, val_i64, valuation, IntMatrix, Mat, Presentation, Ring};
use crate::mackey::{compare, Coords, MackeyFunctor, Presented, Verdict};
use crate::reps::{reps, Reps};

/// The Adams generator `g` used at `p`.
pub fn generator(p: u64) -> i64 {
    if p == 2 {
        return 5;
    }
    let r = (2..p).find(|&r| is_primitive_root(r, p)).expect("primes have primitive roots") as i64;
    let p2 = (p * p) as i64;
    if mod_pow(r, p - 1, p2) == 1 {
        r + p as i64
    } else {
        r
    }
}

fn is_primitive_root(r: u64, p: u64) -> bool {
    let phi = p - 1;
    crate::linalg::factorize(phi).iter().all(|&(q, _)| mod_pow(r as i64, phi / q, p as i64) != 1)
}

/// `ν_p(g^d - 1)` by the closed rule; `None` for `d = 0`.
pub fn nu_g_minus_one(p: u64, d: i64) -> Option<u32> {
    if d == 0 {
        return None;
    }
    let nd = val_i64(p, d).unwrap();
    if p == 2 {
        Some(2 + nd)
    } else if d.rem_euclid(p as i64 - 1) == 0 {
        Some(1 + nd)
    } else {
        Some(0)
    }
}

/// `ν_p(g^|d| - 1)` by exact integer arithmetic.
pub fn nu_direct(p: u64, d: i64) -> Option<u32> {
    valuation(p, &(BigInt::from(generator(p)).pow(d.unsigned_abs() as u32) - 1))
}

fn pow_big(g: i64, e: u64) -> BigInt {
    BigInt::from(g).pow(e as u32)
}

/// Real-ring monomial in degree `n`, with `d = ⌊n/8⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Monomial {
    U,
    Eta,
    Eta2,
    Alpha,
}

/// Monomial of `π_n KO` on a real-type summand, if any.
pub fn real_monomial(n: i64) -> Option<Monomial> {
    match n.rem_euclid(8) {
        0 => Some(Monomial::U),
        1 => Some(Monomial::Eta),
        2 => Some(Monomial::Eta2),
        4 => Some(Monomial::Alpha),
        _ => None,
    }
}

impl Monomial {
    pub fn order(self) -> u64 {
        match self {
            Monomial::U | Monomial::Alpha => 0,
            Monomial::Eta | Monomial::Eta2 => 2,
        }
    }

    fn label(self, d: i64) -> String {
        match self {
            Monomial::U => format!("u^{d}"),
            Monomial::Eta => format!("ηu^{d}"),
            Monomial::Eta2 => format!("η²u^{d}"),
            Monomial::Alpha => format!("αu^{d}"),
        }
    }
}

/// What a coefficient generator is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    /// Real-type character `chi` times a real monomial.
    Real { chi: usize, mono: Monomial },
    /// Realification `r(χ β^m)` of the pair representative `chi`.
    Complex { pair: usize, chi: usize, m: i64 },
    /// `χ β^m` in `KU`.
    Char { chi: usize, m: i64 },
}

#[derive(Clone, Debug)]
pub struct KOGen {
    pub label: String,
    /// `0` for `Z`, `2` for `Z/2`.
    pub order: u64,
    pub carrier: Carrier,
}

/// Basis of `π_n KO_K` or `π_n KU_K`.
#[derive(Clone, Debug)]
pub struct KOBasis {
    pub k: usize,
    pub n: i64,
    pub gens: Vec<KOGen>,
}

impl KOBasis {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.order).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.label.clone()).collect()
    }

    pub fn presentation(&self, relations: IntMatrix) -> Presentation {
        Presentation::new(self.labels(), self.orders(), relations)
    }

    /// Index of the generator carried by a real-type character or a pair.
    fn index_real(&self, chi: usize) -> Option<usize> {
        self.gens.iter().position(|g| matches!(g.carrier, Carrier::Real { chi: c, .. } if c == chi))
    }

    fn index_pair(&self, pair: usize) -> Option<usize> {
        self.gens.iter().position(|g| matches!(g.carrier, Carrier::Complex { pair: q, .. } if q == pair))
    }

    fn index_char(&self, chi: usize) -> Option<usize> {
        self.gens.iter().position(|g| matches!(g.carrier, Carrier::Char { chi: c, .. } if c == chi))
    }
}

pub fn ko_pi(r: &Reps, k: usize, n: i64) -> KOBasis {
    let d = r.chars(k);
    let mut gens = Vec::new();
    if let Some(mono) = real_monomial(n) {
        for (j, &chi) in d.real.iter().enumerate() {
            gens.push(KOGen {
                label: format!("{}·r{j}", mono.label(n.div_euclid(8))),
                order: mono.order(),
                carrier: Carrier::Real { chi, mono },
            });
        }
    }
    if n % 2 == 0 {
        let m = n / 2;
        for (j, &(chi, _)) in d.pairs.iter().enumerate() {
            gens.push(KOGen { label: format!("β^{m}·c{j}"), order: 0, carrier: Carrier::Complex { pair: j, chi, m } });
        }
    }
    KOBasis { k, n, gens }
}

pub fn ku_pi(r: &Reps, k: usize, n: i64) -> KOBasis {
    let mut gens = Vec::new();
    if n % 2 == 0 {
        let m = n / 2;
        for chi in 0..r.chars(k).len() {
            gens.push(KOGen { label: format!("β^{m}·χ{chi}"), order: 0, carrier: Carrier::Char { chi, m } });
        }
    }
    KOBasis { k, n, gens }
}

/// `KO` at `p = 2`, `KU` at odd `p`.
pub fn coeff_basis(r: &Reps, k: usize, n: i64, p: u64) -> KOBasis {
    if p == 2 {
        ko_pi(r, k, n)
    } else {
        ku_pi(r, k, n)
    }
}

/// `r(β^m)` as a multiple of the real monomial in degree `2m`.
fn realified_bott(m: i64) -> i64 {
    match m.rem_euclid(4) {
        0 => 2,
        1 | 2 => 1,
        _ => 0,
    }
}

fn sign(m: i64) -> i64 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Restriction `π_n KO_K → π_n KO_T` (or `KU`) in the given bases.
pub fn basis_res(r: &Reps, bt: &KOBasis, bk: &KOBasis) -> Mat {
    let (t, k) = (bt.k, bk.k);
    let dt = r.chars(t);
    let mut m = Mat::zeros(bt.len(), bk.len());
    for (j, g) in bk.gens.iter().enumerate() {
        match g.carrier {
            Carrier::Real { chi, .. } => {
                let i = bt.index_real(r.restrict_char(t, k, chi)).expect("real characters restrict to real ones");
                m.add_to(i, j, 1);
            }
            Carrier::Complex { chi, m: e, .. } => {
                let c = r.restrict_char(t, k, chi);
                if dt.is_real[c] {
                    let coef = realified_bott(e);
                    if coef != 0 {
                        m.add_to(bt.index_real(c).expect("monomial present"), j, coef);
                    }
                } else {
                    let q = dt.irrep_of_char[c] - dt.real.len();
                    let s = if dt.is_flipped(c) { sign(e) } else { 1 };
                    m.add_to(bt.index_pair(q).expect("pair present"), j, s);
                }
            }
            Carrier::Char { chi, .. } => {
                m.add_to(bt.index_char(r.restrict_char(t, k, chi)).unwrap(), j, 1);
            }
        }
    }
    m
}

/// Transfer `π_n KO_T → π_n KO_K` (or `KU`) in the given bases.
pub fn basis_tr(r: &Reps, bt: &KOBasis, bk: &KOBasis) -> Mat {
    let (t, k) = (bt.k, bk.k);
    let dk = r.chars(k);
    let mut m = Mat::zeros(bk.len(), bt.len());
    for (j, g) in bt.gens.iter().enumerate() {
        match g.carrier {
            Carrier::Real { chi, mono } => {
                let pair_coef = match mono {
                    Monomial::U => 1,
                    Monomial::Alpha => 2,
                    Monomial::Eta | Monomial::Eta2 => 0,
                };
                let mut pairs_seen = Vec::new();
                for psi in r.induce_char(t, k, chi) {
                    if dk.is_real[psi] {
                        m.add_to(bk.index_real(psi).unwrap(), j, 1);
                    } else {
                        let q = dk.irrep_of_char[psi] - dk.real.len();
                        if pair_coef != 0 && !pairs_seen.contains(&q) {
                            pairs_seen.push(q);
                            m.add_to(bk.index_pair(q).expect("pair present in even degree"), j, pair_coef);
                        }
                    }
                }
            }
            Carrier::Complex { chi, m: e, .. } => {
                for psi in r.induce_char(t, k, chi) {
                    let q = dk.irrep_of_char[psi] - dk.real.len();
                    let s = if dk.is_flipped(psi) { sign(e) } else { 1 };
                    m.add_to(bk.index_pair(q).unwrap(), j, s);
                }
            }
            Carrier::Char { chi, .. } => {
                for psi in r.induce_char(t, k, chi) {
                    m.add_to(bk.index_char(psi).unwrap(), j, 1);
                }
            }
        }
    }
    m
}

/// Integer model of `ψ^g - 1` on the basis (columns are images of generators).
///
/// Negative Bott powers use `g^{|m|} P^{-1} - 1`, which has the same `p`-adic image and kernel.
pub fn psi_minus_one(r: &Reps, b: &KOBasis, p: u64) -> Result<IntMatrix> {
    let g = generator(p);
    let k = b.k;
    let d = r.chars(k);
    let n = b.len();
    let mut a = IntMatrix::zeros(n, n);
    let add = |a: &mut IntMatrix, i: usize, j: usize, v: BigInt| {
        let x = a.get(i, j) + v;
        a.set(i, j, x);
    };
    let deg_d = b.n.div_euclid(8);
    for (j, gen) in b.gens.iter().enumerate() {
        match gen.carrier {
            Carrier::Real { mono, .. } => {
                let e = match mono {
                    Monomial::U => 4 * deg_d.unsigned_abs(),
                    Monomial::Alpha => 2 * (2 * deg_d + 1).unsigned_abs(),
                    _ => continue,
                };
                add(&mut a, j, j, pow_big(g, e) - 1);
            }
            Carrier::Complex { chi, m, .. } => {
                let c = r.adams_char(k, g, chi)?;
                let q = b.index_pair(d.irrep_of_char[c] - d.real.len()).unwrap();
                let s = if d.is_flipped(c) { sign(m) } else { 1 };
                let v = pow_big(g, m.unsigned_abs()) * s;
                if m >= 0 {
                    add(&mut a, q, j, v);
                } else {
                    add(&mut a, j, q, v);
                }
                add(&mut a, j, j, BigInt::from(-1));
            }
            Carrier::Char { chi, m } => {
                let q = b.index_char(r.adams_char(k, g, chi)?).unwrap();
                let v = pow_big(g, m.unsigned_abs());
                if m >= 0 {
                    add(&mut a, q, j, v);
                } else {
                    add(&mut a, j, q, v);
                }
                add(&mut a, j, j, BigInt::from(-1));
            }
        }
    }
    Ok(a)
}

/// Meaning of a closed-form coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoordKind {
    /// A real-type character (or the trivial character at odd `p`).
    Real { chi: usize },
    /// A `ψ^g` orbit with common kernel `kernel` and `|K/kernel| = p^t`; `first` is its first generator.
    Orbit { kernel: usize, t: u32, first: usize },
}

/// Kernel and cokernel of `ψ^g - 1` as Mackey functors over a `p`-group.
#[derive(Clone, Debug)]
pub struct KerCoker {
    pub p: u64,
    pub n: i64,
    pub ker: MackeyFunctor,
    pub coker: MackeyFunctor,
    pub ker_coords: Vec<Coords>,
    pub coker_coords: Vec<Coords>,
    /// Closed form only: the meaning of each coordinate.
    pub ker_kinds: Vec<Vec<CoordKind>>,
    pub coker_kinds: Vec<Vec<CoordKind>>,
    pub bases: Vec<KOBasis>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Oracle,
}

fn check_p_group(g: &FinAbGroup, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(KhomError::Invalid(format!("{p} is not prime")));
    }
    if !g.is_p_group(p) {
        return Err(KhomError::Invalid(format!("{g} is not a {p}-group")));
    }
    Ok(())
}

struct Setup {
    bases: Vec<KOBasis>,
    psis: Vec<IntMatrix>,
}

fn setup(r: &Reps, n: i64, p: u64) -> Result<Setup> {
    let lat = &r.lattice;
    let bases: Vec<KOBasis> = (0..lat.len()).map(|k| coeff_basis(r, k, n, p)).collect();
    let psis = bases.iter().map(|b| psi_minus_one(r, b, p)).collect::<Result<_>>()?;
    Ok(Setup { bases, psis })
}

fn presented(r: &Reps, s: &Setup, relations: impl Fn(usize) -> IntMatrix) -> Result<Presented> {
    let lat = r.lattice.clone();
    let levels = s.bases.iter().enumerate().map(|(k, b)| b.presentation(relations(k))).collect();
    Presented::new(lat, levels).with_maps(
        |t, k| Ok(basis_res(r, &s.bases[t], &s.bases[k])),
        |t, k| Ok(basis_tr(r, &s.bases[t], &s.bases[k])),
    )
}

/// Kernel and cokernel of `ψ^g - 1` on `p`-complete coefficients in degree `n`.
pub fn kercoker(g: &FinAbGroup, n: i64, p: u64, method: Method) -> Result<KerCoker> {
    check_p_group(g, p)?;
    let r = reps(g)?;
    let s = setup(&r, n, p)?;
    let ring = Ring::PComplete(p);
    let mut ker_p = presented(&r, &s, |k| IntMatrix::zeros(s.bases[k].len(), 0))?;
    let mut coker_p = presented(&r, &s, |k| s.psis[k].clone())?;
    let (mut ker_kinds, mut coker_kinds) = (Vec::new(), Vec::new());
    for k in 0..r.lattice.len() {
        match method {
            Method::Oracle => {
                ker_p.closed[k] = Some(oracle_ker_coords(&s.bases[k], &s.psis[k])?);
            }
            Method::Closed => {
                let (kc, kk) = closed_ker(&r, &s.bases[k], p)?;
                let (cc, ck) = closed_coker(&r, &s.bases[k], p)?;
                ker_p.closed[k] = Some(kc);
                coker_p.closed[k] = Some(cc);
                ker_kinds.push(kk);
                coker_kinds.push(ck);
            }
        }
    }
    let (ker, ker_coords) = ker_p.finalize(ring)?;
    let (coker, coker_coords) = coker_p.finalize(ring)?;
    Ok(KerCoker { p, n, ker, coker, ker_coords, coker_coords, ker_kinds, coker_kinds, bases: s.bases })
}

/// Kernel coordinates from the integer kernel of the `Z` part plus every `Z/2` generator.
fn oracle_ker_coords(b: &KOBasis, psi: &IntMatrix) -> Result<Coords> {
    let n = b.len();
    let zi: Vec<usize> = (0..n).filter(|&i| b.gens[i].order == 0).collect();
    let ti: Vec<usize> = (0..n).filter(|&i| b.gens[i].order != 0).collect();
    let sub = psi.select_rows(&zi).select_cols(&zi);
    let ker = crate::linalg::kernel_lattice(&sub);
    let r = ker.cols();
    // left inverse of a saturated basis: v * (first r rows of u)
    let left = if r > 0 {
        let s = snf(&ker);
        let rows: Vec<usize> = (0..r).collect();
        s.v.mul(&s.u.select_rows(&rows))
    } else {
        IntMatrix::zeros(0, zi.len())
    };
    let dim = r + ti.len();
    let mut proj = Mat::zeros(dim, n);
    let mut section = Mat::zeros(n, dim);
    let mut orders = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    for c in 0..r {
        for (a, &i) in zi.iter().enumerate() {
            proj.set(c, i, to_i64(left.get(c, a))?);
            section.set(i, c, to_i64(ker.get(a, c))?);
        }
        orders.push(0);
        labels.push(crate::linalg::word_label(&ker, c, &zi.iter().map(|&i| b.gens[i].label.clone()).collect::<Vec<_>>()));
    }
    for (c, &i) in ti.iter().enumerate() {
        proj.set(r + c, i, 1);
        section.set(i, r + c, 1);
        orders.push(2);
        labels.push(b.gens[i].label.clone());
    }
    Ok(Coords { orders, labels, proj, section })
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| KhomError::Consistency(format!("entry {x} does not fit in i64")))
}

/// Order, label, projection entries, section generator and kind of one cokernel coordinate.
type CokerColumn = (u64, String, Vec<(usize, i64)>, usize, CoordKind);

/// Closed-form cokernel coordinates.
fn closed_coker(r: &Reps, b: &KOBasis, p: u64) -> Result<(Coords, Vec<CoordKind>)> {
    let k = b.k;
    let n = b.n;
    let g = generator(p);
    let dim = b.len();
    let mut cols: Vec<CokerColumn> = Vec::new();
    let pw = |a: u32| p.checked_pow(a).expect("order overflow");
    if p == 2 {
        let (res, d) = (n.rem_euclid(8), n.div_euclid(8));
        for (i, gen) in b.gens.iter().enumerate() {
            if let Carrier::Real { chi, mono } = gen.carrier {
                let o = match mono {
                    Monomial::U => nu_g_minus_one(2, d).map_or(0, |v| pw(v + 2)),
                    Monomial::Eta | Monomial::Eta2 => 2,
                    Monomial::Alpha => 8,
                };
                cols.push((o, gen.label.clone(), vec![(i, 1)], i, CoordKind::Real { chi }));
            }
        }
        if n % 2 == 0 {
            let m = n / 2;
            let d_chars = r.chars(k);
            for orb in r.adams_orbits(k, g, 2)? {
                let t = orb.t;
                let o = match res {
                    0 => nu_g_minus_one(2, d).map_or(0, |v| pw(v + t)),
                    2 | 6 => pw(t),
                    4 => pw(t + 1),
                    _ => unreachable!("odd degree"),
                };
                let mut entries = Vec::new();
                for (step, (&w, &flip)) in orb.members.iter().zip(&orb.flips).enumerate() {
                    let q = b.index_pair(d_chars.irrep_of_char[w] - d_chars.real.len()).unwrap();
                    let s = if flip { sign(m) } else { 1 };
                    entries.push((q, s * inv_power(g, m * step as i64, o)));
                }
                let first = entries[0].0;
                cols.push((o, b.gens[first].label.clone(), entries, first, CoordKind::Orbit { kernel: orb.kernel, t, first }));
            }
        }
    } else if n % 2 == 0 {
        let m = n / 2;
        let o = nu_g_minus_one(p, m).map_or(0, pw);
        if o != 1 {
            cols.push((o, b.gens[0].label.clone(), vec![(0, 1)], 0, CoordKind::Real { chi: 0 }));
        }
        for orb in r.adams_orbits(k, g, p)? {
            let o = nu_g_minus_one(p, m).map_or(0, |_| pw(orb.t + val_i64(p, m).unwrap()));
            let entries: Vec<(usize, i64)> = orb
                .members
                .iter()
                .enumerate()
                .map(|(step, &w)| (b.index_char(w).unwrap(), inv_power(g, m * step as i64, o)))
                .collect();
            let first = entries[0].0;
            cols.push((o, b.gens[first].label.clone(), entries, first, CoordKind::Orbit { kernel: orb.kernel, t: orb.t, first }));
        }
    }
    // free coordinates first, then torsion in ascending order
    cols.sort_by_key(|c| if c.0 == 0 { (0, 0) } else { (1, c.0) });
    let mut proj = Mat::zeros(cols.len(), dim);
    let mut section = Mat::zeros(dim, cols.len());
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    let mut kinds = Vec::new();
    for (c, (o, label, entries, sec, kind)) in cols.into_iter().enumerate() {
        for (i, v) in entries {
            proj.set(c, i, if o > 0 { v.rem_euclid(o as i64) } else { v });
        }
        section.set(sec, c, 1);
        orders.push(o);
        labels.push(label);
        kinds.push(kind);
    }
    Ok((Coords { orders, labels, proj, section }, kinds))
}

/// `g^{-e}` modulo `o` (`o = 0` only occurs with `e = 0`).
fn inv_power(g: i64, e: i64, o: u64) -> i64 {
    if o == 0 {
        assert_eq!(e, 0, "free orbit coordinate needs a trivial twist");
        return 1;
    }
    let o = o as i64;
    let x = mod_pow(g, e.unsigned_abs(), o);
    if e >= 0 {
        mod_inv(x, o)
    } else {
        x
    }
}

/// Closed-form kernel coordinates.
fn closed_ker(r: &Reps, b: &KOBasis, p: u64) -> Result<(Coords, Vec<CoordKind>)> {
    let k = b.k;
    let n = b.n;
    let dim = b.len();
    let mut cols: Vec<(u64, String, usize, Vec<usize>, CoordKind)> = Vec::new(); // order, label, proj gen, section gens, kind
    if n == 0 {
        let d = r.chars(k);
        for (i, gen) in b.gens.iter().enumerate() {
            match gen.carrier {
                Carrier::Real { chi, .. } => cols.push((0, gen.label.clone(), i, vec![i], CoordKind::Real { chi })),
                Carrier::Char { chi: 0, .. } => cols.push((0, gen.label.clone(), i, vec![i], CoordKind::Real { chi: 0 })),
                _ => {}
            }
        }
        for orb in r.adams_orbits(k, generator(p), p)? {
            let gens: Vec<usize> = orb
                .members
                .iter()
                .map(|&w| {
                    if p == 2 {
                        b.index_pair(d.irrep_of_char[w] - d.real.len()).unwrap()
                    } else {
                        b.index_char(w).unwrap()
                    }
                })
                .collect();
            let first = gens[0];
            let label = format!("Σ[{}]", b.gens[first].label);
            cols.push((0, label, first, gens, CoordKind::Orbit { kernel: orb.kernel, t: orb.t, first }));
        }
    } else if p == 2 && matches!(n.rem_euclid(8), 1 | 2) {
        for (i, gen) in b.gens.iter().enumerate() {
            if let Carrier::Real { chi, .. } = gen.carrier {
                cols.push((2, gen.label.clone(), i, vec![i], CoordKind::Real { chi }));
            }
        }
    }
    let mut proj = Mat::zeros(cols.len(), dim);
    let mut section = Mat::zeros(dim, cols.len());
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    let mut kinds = Vec::new();
    for (c, (o, label, pg, sg, kind)) in cols.into_iter().enumerate() {
        proj.set(c, pg, 1);
        for i in sg {
            section.set(i, c, 1);
        }
        orders.push(o);
        labels.push(label);
        kinds.push(kind);
    }
    Ok((Coords { orders, labels, proj, section }, kinds))
}

/// Closed vs oracle: the change of coordinates `closed.proj · oracle.section` at every level.
pub fn transport_iso(closed: &[Coords], oracle: &[Coords]) -> Vec<Mat> {
    closed
        .iter()
        .zip(oracle)
        .map(|(c, o)| c.proj.mul(&o.section).reduced(&c.orders))
        .collect()
}

/// Strong comparison of the closed and oracle ker and coker.
pub fn compare_methods(g: &FinAbGroup, n: i64, p: u64) -> Result<(Verdict, Verdict)> {
    let c = kercoker(g, n, p, Method::Closed)?;
    let o = kercoker(g, n, p, Method::Oracle)?;
    let vk = compare(&o.ker, &c.ker, Some(&transport_iso(&c.ker_coords, &o.ker_coords)))?;
    let vc = compare(&o.coker, &c.coker, Some(&transport_iso(&c.coker_coords, &o.coker_coords)))?;
    Ok((vk, vc))
}

/// The `ψ^g - 1` matrix of the top level, for display.
pub fn psi_block(g: &FinAbGroup, n: i64, p: u64) -> Result<(KOBasis, IntMatrix)> {
    check_p_group(g, p)?;
    let r = reps(g)?;
    let top = lattice(g)?.top();
    let b = coeff_basis(&r, top, n, p);
    let m = psi_minus_one(&r, &b, p)?;
    Ok((b, m))
}

/// Whether every entry of an integer matrix is zero.
pub fn is_zero_matrix(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::check_axioms;

    fn g(s: &str) -> FinAbGroup {
        FinAbGroup::parse(s).unwrap()
    }

    fn top_shape(m: &MackeyFunctor) -> (usize, Vec<u64>) {
        let f = m.levels[m.lattice.top()].fg();
        (f.free_rank, f.torsion)
    }

    #[test]
    fn generators_and_valuations() {
        assert_eq!(generator(2), 5);
        assert_eq!(generator(3), 2);
        assert_eq!(generator(5), 2);
        assert_eq!(generator(7), 3);
        assert_eq!(nu_direct(2, 12), Some(4));
        assert_eq!(nu_g_minus_one(2, 12), Some(4));
        assert_eq!(nu_g_minus_one(3, 3), Some(0));
        assert_eq!(nu_direct(3, 3), Some(0));
        for p in [2, 3, 5, 7] {
            for d in 1..40 {
                assert_eq!(nu_g_minus_one(p, d), nu_direct(p, d), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn bases() {
        let r = reps(&g("C4")).unwrap();
        assert_eq!(ko_pi(&r, 2, 0).len(), 3);
        assert!(ko_pi(&r, 2, 3).is_empty());
        let r3 = reps(&g("C3")).unwrap();
        assert_eq!(ku_pi(&r3, 1, 2).len(), 3);
    }

    #[test]
    fn psi_examples() {
        let (_, m) = psi_block(&g("C4"), 0, 2).unwrap();
        assert!(is_zero_matrix(&m));
        let (_, m) = psi_block(&g("C4"), 8, 2).unwrap();
        for i in 0..3 {
            assert_eq!(m.get(i, i), &BigInt::from(624));
        }
        let (_, m) = psi_block(&g("C2"), 9, 2).unwrap();
        assert!(is_zero_matrix(&m));
    }

    #[test]
    fn coker_examples() {
        let c = kercoker(&g("C4"), 8, 2, Method::Oracle).unwrap();
        assert_eq!(top_shape(&c.coker), (0, vec![16, 16, 16]));
        let c = kercoker(&g("C4"), 0, 2, Method::Closed).unwrap();
        assert_eq!(top_shape(&c.coker), (3, vec![]));
        let e = kercoker(&FinAbGroup::trivial(), 0, 2, Method::Oracle).unwrap();
        assert_eq!(top_shape(&e.ker), (1, vec![]));
        assert_eq!(top_shape(&e.coker), (1, vec![]));
        let c3 = kercoker(&g("C3"), 6, 3, Method::Closed).unwrap();
        assert_eq!(top_shape(&c3.coker), (0, vec![9]));
        let o3 = kercoker(&g("C3"), 6, 3, Method::Oracle).unwrap();
        assert_eq!(top_shape(&o3.coker), (0, vec![9]));
    }

    #[test]
    fn closed_matches_oracle_small() {
        for (grp, p) in [("C2", 2), ("C4", 2), ("C2xC2", 2), ("C8", 2), ("C3", 3), ("C9", 3), ("C5", 5)] {
            for n in -9..=10 {
                let (vk, vc) = compare_methods(&g(grp), n, p).unwrap();
                assert_eq!(vk.strong, Some(true), "ker {grp} n={n}: {}", vk.detail);
                assert_eq!(vc.strong, Some(true), "coker {grp} n={n}: {}", vc.detail);
            }
        }
    }

    #[test]
    fn kercoker_axioms() {
        for n in [0, 1, 2, 4, 6, 8, -2] {
            let c = kercoker(&g("C2xC4"), n, 2, Method::Closed).unwrap();
            assert!(check_axioms(&c.coker).ok, "n={n}");
            assert!(check_axioms(&c.ker).ok, "n={n}");
        }
    }
}
