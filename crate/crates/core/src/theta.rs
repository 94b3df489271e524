//! Extension data for the degree `0` and `8d+1` homotopy of the `KU/2`-local
//! sphere over an abelian 2-group, and the presentations assembling them.

use serde::Serialize;

use crate::abgroups::{FinAbGroup, Lattice};
use crate::burnside::{a_res, a_tr, brauer_subquotient, orbit_labels, pos};
use crate::error::{KhomError, Result};
use crate::kcoeff::{basis_res, basis_tr, kercoker, ko_pi, CoordKind, KerCoker, Method};
use crate::linalg::{f2_rank, FgAbGroup, IntMatrix, Mat, Presentation, Ring};
use crate::mackey::{Coords, MackeyFunctor, Presented};
use crate::reps::{reps, Reps};

fn check_2group(g: &FinAbGroup) -> Result<()> {
    if g.is_p_group(2) {
        Ok(())
    } else {
        Err(KhomError::Invalid(format!("{g} is not a 2-group")))
    }
}

/// Indicator over `M_K` of the real characters with `L ⊆ ker χ`.
pub fn real_sum(r: &Reps, k: usize, l: usize) -> Vec<i64> {
    let d = r.chars(k);
    d.real.iter().map(|&chi| i64::from(r.lattice.contains(d.kernel[chi], l))).collect()
}

/// `θ(X_{T,L}) = η · Σ_{χ ∈ M_K, L ⊆ ker χ} χ`, over `M_K` mod 2.
pub fn theta_zero(r: &Reps, k: usize, l: usize) -> Vec<i64> {
    real_sum(r, k, l)
}

/// Whether every mod-2 dependence among the Brauer generators of `A(K)` is one among their θ values.
pub fn theta_zero_well_defined(r: &Reps, k: usize) -> bool {
    let lat = &r.lattice;
    let subs = lat.v4_subquotients(k);
    let xs: Vec<Vec<i64>> = subs.iter().map(|&(t, l)| brauer_subquotient(lat, k, t, l).coeffs).collect();
    let both: Vec<Vec<i64>> =
        subs.iter().zip(&xs).map(|(&(_, l), x)| x.iter().copied().chain(theta_zero(r, k, l)).collect()).collect();
    f2_rank(&xs) == f2_rank(&both)
}

/// `A ⊕ η·RO(−;R)/2` modulo `X_{T,L} - θ(X_{T,L})`.
pub fn pi0_presented(g: &FinAbGroup) -> Result<Presented> {
    check_2group(g)?;
    let r = reps(g)?;
    let lat = r.lattice.clone();
    let eta: Vec<_> = (0..lat.len()).map(|k| ko_pi(&r, k, 1)).collect();
    let mut levels = Vec::new();
    for k in 0..lat.len() {
        let na = lat.below(k).len();
        let mut labels = orbit_labels(&lat, k);
        labels.extend(eta[k].labels());
        let mut orders = vec![0; na];
        orders.extend(eta[k].orders());
        let cols: Vec<Vec<i64>> = lat
            .v4_subquotients(k)
            .into_iter()
            .map(|(t, l)| {
                let mut v = brauer_subquotient(&lat, k, t, l).coeffs;
                v.extend(theta_zero(&r, k, l).iter().map(|x| -x));
                v
            })
            .collect();
        levels.push(Presentation::new(labels, orders, IntMatrix::from_cols(na + eta[k].len(), &cols)));
    }
    let (l1, l2) = (lat.clone(), lat.clone());
    let (r1, r2) = (r.clone(), r.clone());
    let (e1, e2) = (eta.clone(), eta);
    Presented::new(lat, levels).with_maps(
        move |t, k| Ok(Mat::block_diag(&[&a_res(&l1, t, k), &basis_res(&r1, &e1[t], &e1[k])])),
        move |t, k| Ok(Mat::block_diag(&[&a_tr(&l2, t, k), &basis_tr(&r2, &e2[t], &e2[k])])),
    )
}

/// `π_0` over a 2-group: 2-complete (`completed`) or integral.
pub fn pi0_assembly(g: &FinAbGroup, completed: bool) -> Result<(MackeyFunctor, Vec<Coords>)> {
    let ring = if completed { Ring::PComplete(2) } else { Ring::Integral };
    pi0_presented(g)?.finalize(ring)
}

/// A generator of `I_{8d+1}(K)` inside `A(K)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IGenerator {
    /// `[K/H] - [K/H']` with `H + 2K = H' + 2K`.
    D { h: usize, h2: usize },
    /// `X_{T,L}` with `2K ⊆ L`.
    B { t: usize, l: usize },
}

impl IGenerator {
    /// Coordinates over `below(k)`, reduced mod 2.
    pub fn element(&self, lat: &Lattice, k: usize) -> Vec<i64> {
        let v = match *self {
            IGenerator::D { h, h2 } => {
                let mut v = vec![0; lat.below(k).len()];
                v[pos(lat, k, h)] += 1;
                v[pos(lat, k, h2)] -= 1;
                v
            }
            IGenerator::B { t, l } => brauer_subquotient(lat, k, t, l).coeffs,
        };
        v.into_iter().map(|x| x.rem_euclid(2)).collect()
    }
}

/// `A(K)/2 → RO(K;R)/2` restricted to real characters: rows `M_K`, columns `below(k)`.
pub fn char_sum_matrix(r: &Reps, k: usize) -> Vec<Vec<i64>> {
    let lat = &r.lattice;
    let d = r.chars(k);
    d.real
        .iter()
        .map(|&chi| lat.below(k).iter().map(|&h| i64::from(lat.contains(d.kernel[chi], h))).collect())
        .collect()
}

/// D and B generators of `I_{8d+1}(K)`, with the span checked against the kernel.
pub fn i_generators(r: &Reps, k: usize) -> Result<Vec<IGenerator>> {
    let lat = &r.lattice;
    let two_k = lat.double(k);
    let b = lat.below(k);
    let mut out = Vec::new();
    for (i, &h) in b.iter().enumerate() {
        for &h2 in &b[i + 1..] {
            if lat.join(h, two_k) == lat.join(h2, two_k) {
                out.push(IGenerator::D { h, h2 });
            }
        }
    }
    for (t, l) in lat.v4_subquotients(k) {
        if lat.contains(l, two_k) {
            out.push(IGenerator::B { t, l });
        }
    }
    let m = char_sum_matrix(r, k);
    let elems: Vec<Vec<i64>> = out.iter().map(|g| g.element(lat, k)).collect();
    for v in &elems {
        if m.iter().any(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() % 2 != 0) {
            return Err(KhomError::Consistency(format!("I generator outside the kernel at subgroup {k}")));
        }
    }
    let kernel_dim = b.len() - f2_rank(&m);
    if f2_rank(&elems) != kernel_dim {
        return Err(KhomError::Consistency(format!(
            "I generators span {} of the {kernel_dim}-dimensional kernel at subgroup {k}",
            f2_rank(&elems)
        )));
    }
    Ok(out)
}

/// `θ_{8d+1}` on an I generator, in the closed coordinates of `coker_2{8d+2}(K)`.
pub fn theta_odd(r: &Reps, k: usize, kinds: &[CoordKind], gen: &IGenerator) -> Vec<i64> {
    let lat = &r.lattice;
    let d = r.chars(k);
    kinds
        .iter()
        .map(|kind| match (*gen, kind) {
            (IGenerator::D { h, h2 }, CoordKind::Orbit { kernel, t, .. }) => {
                if *t >= 2 && (lat.contains(*kernel, h) != lat.contains(*kernel, h2)) {
                    1 << (t - 1)
                } else {
                    0
                }
            }
            (IGenerator::D { h, h2 }, CoordKind::Real { chi }) => {
                // η²-correction forced by transfer from C2 x C2 subquotients
                let odd = (lat.order(h).trailing_zeros() + lat.order(h2).trailing_zeros()) % 2 == 1;
                i64::from(odd && lat.contains(d.kernel[*chi], h))
            }
            (IGenerator::B { l, .. }, CoordKind::Real { chi }) => i64::from(lat.contains(d.kernel[*chi], l)),
            _ => 0,
        })
        .collect()
}

/// `(A/2 ⊕ coker_2{8d+2})` modulo `r - θ_{8d+1}(r)`, with the closed cokernel it uses.
pub fn pi_odd_presented(g: &FinAbGroup, d: i64) -> Result<(Presented, KerCoker)> {
    check_2group(g)?;
    let r = reps(g)?;
    let lat = r.lattice.clone();
    let kc = kercoker(g, 8 * d + 2, 2, Method::Closed)?;
    let mut levels = Vec::new();
    for k in 0..lat.len() {
        let na = lat.below(k).len();
        let cl = &kc.coker.levels[k];
        let mut labels = orbit_labels(&lat, k);
        labels.extend(cl.labels.iter().cloned());
        let mut orders = vec![2; na];
        orders.extend(cl.orders.iter().copied());
        let cols: Vec<Vec<i64>> = i_generators(&r, k)?
            .iter()
            .map(|gen| {
                let mut v = gen.element(&lat, k);
                v.extend(theta_odd(&r, k, &kc.coker_kinds[k], gen).iter().map(|x| -x));
                v
            })
            .collect();
        levels.push(Presentation::new(labels, orders, IntMatrix::from_cols(na + cl.dim(), &cols)));
    }
    let (l1, l2) = (lat.clone(), lat.clone());
    let (c1, c2) = (kc.coker.clone(), kc.coker.clone());
    let p = Presented::new(lat, levels).with_maps(
        move |t, k| Ok(Mat::block_diag(&[&a_res(&l1, t, k), &c1.res(t, k)])),
        move |t, k| Ok(Mat::block_diag(&[&a_tr(&l2, t, k), &c2.tr(t, k)])),
    )?;
    Ok((p, kc))
}

/// `π_{8d+1}` over a 2-group, with the levelwise splitting asserted.
pub fn pi_odd_assembly(g: &FinAbGroup, d: i64) -> Result<(MackeyFunctor, Vec<Coords>)> {
    let (p, kc) = pi_odd_presented(g, d)?;
    let (m, coords) = p.finalize(Ring::PComplete(2))?;
    let r = reps(g)?;
    for k in 0..m.lattice.len() {
        let mut orders = kc.coker.levels[k].orders.clone();
        orders.extend(std::iter::repeat_n(2, r.chars(k).real.len()));
        let expect = FgAbGroup::from_orders(Ring::PComplete(2), &orders);
        let got = m.levels[k].fg();
        if (got.free_rank, &got.torsion) != (expect.free_rank, &expect.torsion) {
            return Err(KhomError::Consistency(format!(
                "level {k} of degree {} is {got}, expected {expect} from the splitting",
                8 * d + 1
            )));
        }
    }
    Ok((m, coords))
}

/// Brauer generators with their θ values, for display.
pub fn theta_table(r: &Reps, k: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let lat = &r.lattice;
    lat.v4_subquotients(k)
        .into_iter()
        .map(|(t, l)| (brauer_subquotient(lat, k, t, l).coeffs, theta_zero(r, k, l)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::check_axioms;

    fn g(s: &str) -> FinAbGroup {
        FinAbGroup::parse(s).unwrap()
    }

    fn shape(m: &MackeyFunctor, k: usize) -> (usize, Vec<u64>) {
        let f = m.levels[k].fg();
        (f.free_rank, f.torsion)
    }

    #[test]
    fn theta_zero_on_v() {
        let r = reps(&g("C2xC2")).unwrap();
        assert_eq!(theta_zero(&r, r.lattice.top(), 0), vec![1, 1, 1, 1]);
        assert!(theta_zero_well_defined(&r, r.lattice.top()));
        let c = reps(&g("C8")).unwrap();
        assert!(theta_table(&c, c.lattice.top()).is_empty());
    }

    #[test]
    fn pi0_levels() {
        let (m, _) = pi0_assembly(&FinAbGroup::trivial(), true).unwrap();
        assert_eq!(shape(&m, 0), (1, vec![2]));
        let (m, _) = pi0_assembly(&g("C4"), true).unwrap();
        assert_eq!(shape(&m, 2), (3, vec![2, 2]));
        assert_eq!(m.levels[2].ring, Ring::PComplete(2));
        let (v, _) = pi0_assembly(&g("C2xC2"), false).unwrap();
        assert_eq!(v.levels[4].ring, Ring::Integral);
        assert!(check_axioms(&v).ok);
    }

    #[test]
    fn i_generator_examples() {
        let r = reps(&g("C2")).unwrap();
        assert!(i_generators(&r, 1).unwrap().is_empty());
        let r = reps(&g("C4")).unwrap();
        assert_eq!(i_generators(&r, 2).unwrap(), vec![IGenerator::D { h: 0, h2: 1 }]);
        let r = reps(&g("C2xC2")).unwrap();
        assert_eq!(i_generators(&r, 4).unwrap(), vec![IGenerator::B { t: 4, l: 0 }]);
    }

    #[test]
    fn pi_odd_levels() {
        let (m, _) = pi_odd_assembly(&FinAbGroup::trivial(), 0).unwrap();
        assert_eq!(shape(&m, 0), (0, vec![2, 2]));
        let (m, _) = pi_odd_assembly(&g("C4"), 0).unwrap();
        assert_eq!(shape(&m, 2), (0, vec![2, 2, 2, 2, 4]));
        assert!(check_axioms(&m).ok);
        let (m, _) = pi_odd_assembly(&g("C2"), 1).unwrap();
        assert_eq!(shape(&m, 1), (0, vec![2, 2, 2, 2]));
    }
}
