use std::collections::BTreeSet;

use proptest::prelude::*;

use khom_core::abgroups::{lattice, FinAbGroup, Split};
use khom_core::burnside::{
    a_mod_j_mackey, burnside_data, from_marks, in_j_by_marks, linearize, marks, multiply_closed, BurnsideElement,
};
use khom_core::kcoeff::{coeff_basis, compare_methods, generator, kercoker, psi_minus_one, Carrier, Method};
use khom_core::linalg::{cokernel, kernel_lattice, snf, val_i64, IntMatrix, Presentation, Ring};
use khom_core::mackey::external_tensor;
use khom_core::reps::{complexify, reps, restrict_ru, transfer_ro, transfer_ru, ROElement, RUElement};

fn groups_up_to(n: u64) -> Vec<FinAbGroup> {
    FinAbGroup::all_up_to(n)
}

fn two_groups_up_to(n: u64) -> Vec<FinAbGroup> {
    groups_up_to(n).into_iter().filter(|g| g.order() > 1 && g.is_p_group(2)).collect()
}

fn subgroup_of(g: &FinAbGroup, pick: usize) -> usize {
    let lat = lattice(g).unwrap();
    pick % lat.len()
}

fn cyclic_span(g: &FinAbGroup, x: u32) -> BTreeSet<u32> {
    let mut s = BTreeSet::from([0u32]);
    let mut cur = x;
    while cur != 0 {
        s.insert(cur);
        cur = g.add(cur, x);
    }
    s
}

#[test]
fn cyclic_subgroup_counts_match_enumeration() {
    for p in [2u64, 3, 5, 7] {
        for a in 0..=6u32 {
            for b in 0..=a {
                let (pa, pb) = (p.pow(a), p.pow(b));
                if pa * pb > 64 {
                    continue;
                }
                let orders: Vec<u64> = [pa, pb].into_iter().filter(|&o| o > 1).collect();
                let g = FinAbGroup::new(orders).unwrap();
                let lat = lattice(&g).unwrap();
                let spans: BTreeSet<BTreeSet<u32>> = (0..g.order() as u32).map(|x| cyclic_span(&g, x)).collect();
                let cyclic = (0..lat.len()).filter(|&t| lat.is_cyclic(t)).count();
                assert_eq!(cyclic, spans.len(), "{g}");
            }
        }
    }
}

#[test]
fn sylow_parts_are_element_products() {
    for g in groups_up_to(64) {
        let lg = lattice(&g).unwrap();
        for (p, _) in khom_core::linalg::factorize(g.order().max(2)) {
            let split = Split::sylow(&g, p);
            let (la, lb) = (lattice(&split.first).unwrap(), lattice(&split.second).unwrap());
            for (t, &(a, b)) in split.part_table(&lg, &la, &lb).iter().enumerate() {
                let mut prod: Vec<u32> = Vec::new();
                for &x in &la.sub(a).elements {
                    for &y in &lb.sub(b).elements {
                        prod.push(split.from_parts(x, y));
                    }
                }
                prod.sort_unstable();
                assert_eq!(prod, lg.sub(t).elements, "{g} at p = {p}, subgroup {t}");
            }
        }
    }
}

#[test]
fn brauer_span_equals_linearization_kernel() {
    for g in groups_up_to(32) {
        burnside_data(&g).unwrap_or_else(|e| panic!("{g}: {e}"));
    }
}

#[test]
fn adams_orbit_count_law() {
    for p in [2u64, 3, 5] {
        for g in groups_up_to(32).into_iter().filter(|g| g.order() > 1 && g.is_p_group(p)) {
            let r = reps(&g).unwrap();
            let top = r.lattice.top();
            let orbits = r.adams_orbits(top, generator(p), p).unwrap().len();
            let extra = if p == 2 { r.chars(top).real.len() } else { 1 };
            assert_eq!(orbits + extra, r.lattice.cyclic_below(top).len(), "{g} at p = {p}");
        }
    }
}

fn element(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_round_trip(rows in 1usize..=40, cols in 1usize..=40, seed in prop::collection::vec(-1_000_000i64..=1_000_000, 1600)) {
        let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(rows));
    }

    #[test]
    fn cokernel_ignores_generator_order(
        rows in 1usize..=6, cols in 0usize..=6,
        seed in prop::collection::vec(-12i64..=12, 36),
        perm_seed in prop::collection::vec(any::<u32>(), 6),
    ) {
        let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let labels: Vec<String> = (0..rows).map(|i| format!("x{i}")).collect();
        let base = cokernel(&Presentation::new(labels.clone(), vec![0; rows], m.clone()), Ring::Integral).group;
        let mut perm: Vec<usize> = (0..rows).collect();
        perm.sort_by_key(|&i| perm_seed[i]);
        let pm = m.select_rows(&perm);
        let other = cokernel(&Presentation::new(labels, vec![0; rows], pm), Ring::Integral).group;
        prop_assert_eq!((base.free_rank, base.torsion), (other.free_rank, other.torsion));
    }

    #[test]
    fn kernel_lattice_is_saturated(rows in 1usize..=5, cols in 1usize..=7, seed in prop::collection::vec(-9i64..=9, 35)) {
        let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let k = kernel_lattice(&m);
        prop_assert!(m.mul(&k).is_zero());
        let labels: Vec<String> = (0..cols).map(|i| format!("x{i}")).collect();
        let q = cokernel(&Presentation::new(labels, vec![0; cols], k), Ring::Integral).group;
        prop_assert!(q.torsion.is_empty());
    }

    #[test]
    fn marks_are_injective_and_multiplicative(gi in any::<prop::sample::Index>(), pick in any::<usize>(), xs in element(64), ys in element(64)) {
        let gs = groups_up_to(36);
        let g = &gs[gi.index(gs.len())];
        let lat = lattice(g).unwrap();
        let k = subgroup_of(g, pick);
        let n = lat.below(k).len();
        let x = BurnsideElement { k, coeffs: xs[..n].to_vec() };
        let y = BurnsideElement { k, coeffs: ys[..n].to_vec() };
        prop_assert_eq!(from_marks(&lat, k, &marks(&lat, &x)).unwrap(), x.clone());
        let mx = marks(&lat, &x);
        let my = marks(&lat, &y);
        let mxy = marks(&lat, &multiply_closed(&lat, &x, &y));
        let prod: Vec<i64> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
        prop_assert_eq!(mxy, prod);
    }

    #[test]
    fn j_membership_by_cyclic_marks(gi in any::<prop::sample::Index>(), pick in any::<usize>(), xs in element(64), coeffs in element(64)) {
        let gs = groups_up_to(32);
        let g = &gs[gi.index(gs.len())];
        let data = burnside_data(g).unwrap();
        let lat = &data.lattice;
        let k = subgroup_of(g, pick);
        let n = lat.below(k).len();
        let x = BurnsideElement { k, coeffs: xs[..n].to_vec() };
        let in_kernel = linearize(lat, &x).unwrap().coeffs.iter().all(|&c| c == 0);
        prop_assert_eq!(in_j_by_marks(lat, &x), in_kernel);
        let mut j = vec![0i64; n];
        for (b, c) in data.j_basis[k].iter().zip(&coeffs) {
            for (t, v) in j.iter_mut().zip(b) {
                *t += c * v;
            }
        }
        let jx = BurnsideElement { k, coeffs: j };
        prop_assert!(in_j_by_marks(lat, &jx));
    }

    #[test]
    fn res_tr_is_multiplication_by_index(gi in any::<prop::sample::Index>(), a in any::<usize>(), b in any::<usize>(), xs in element(16)) {
        let gs = groups_up_to(16);
        let g = &gs[gi.index(gs.len())];
        let r = reps(g).unwrap();
        let lat = &r.lattice;
        let (s, t) = (subgroup_of(g, a), subgroup_of(g, b));
        let (h, k) = (lat.meet(s, t), lat.join(s, t));
        let n = r.chars(h).len();
        let x = RUElement { k: h, coeffs: xs[..n].to_vec() };
        let back = restrict_ru(&r, &transfer_ru(&r, &x, k).unwrap(), h).unwrap();
        let idx = lat.index(h, k) as i64;
        prop_assert_eq!(back.coeffs, x.coeffs.iter().map(|c| c * idx).collect::<Vec<_>>());
    }

    #[test]
    fn transfer_commutes_with_complexification(gi in any::<prop::sample::Index>(), a in any::<usize>(), b in any::<usize>(), xs in element(16)) {
        let gs = groups_up_to(16);
        let g = &gs[gi.index(gs.len())];
        let r = reps(g).unwrap();
        let lat = &r.lattice;
        let (s, t) = (subgroup_of(g, a), subgroup_of(g, b));
        let (h, k) = (lat.meet(s, t), lat.join(s, t));
        let n = r.chars(h).n_irreps();
        let x = ROElement { k: h, coeffs: xs[..n].to_vec() };
        let lhs = complexify(&r, &transfer_ro(&r, &x, k).unwrap());
        let rhs = transfer_ru(&r, &complexify(&r, &x), k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_is_multiplicative(gi in any::<prop::sample::Index>(), i in any::<usize>(), j in any::<usize>(), a in 1i64..64) {
        let gs: Vec<FinAbGroup> = groups_up_to(16).into_iter().filter(|g| g.order() > 1).collect();
        let g = &gs[gi.index(gs.len())];
        let r = reps(g).unwrap();
        let top = r.lattice.top();
        let d = r.chars(top);
        prop_assume!(num_gcd(a, g.order() as i64) == 1);
        let (i, j) = (i % d.len(), j % d.len());
        let idx = |code: u32| d.chars.iter().position(|&c| c == code).unwrap();
        let ij = idx(g.add(d.chars[i], d.chars[j]));
        let lhs = r.adams_char(top, a, ij).unwrap();
        let (pi, pj) = (r.adams_char(top, a, i).unwrap(), r.adams_char(top, a, j).unwrap());
        prop_assert_eq!(lhs, idx(g.add(d.chars[pi], d.chars[pj])));
        // ψ fixes rational irreps: kernels are preserved
        prop_assert_eq!(d.kernel[pi], d.kernel[i]);
    }

    #[test]
    fn closed_form_matches_oracle(gi in any::<prop::sample::Index>(), n in -16i64..=17) {
        let gs = two_groups_up_to(16);
        let g = &gs[gi.index(gs.len())];
        let (vk, vc) = compare_methods(g, n, 2).unwrap();
        prop_assert_eq!(vk.strong, Some(true), "{}", vk.detail);
        prop_assert_eq!(vc.strong, Some(true), "{}", vc.detail);
    }

    #[test]
    fn coker_depends_on_valuation_only(gi in any::<prop::sample::Index>(), pi in 0usize..3, d in 1i64..=24) {
        let p = [2u64, 3, 5][pi];
        let gs: Vec<FinAbGroup> = groups_up_to(27).into_iter().filter(|g| g.is_p_group(p)).collect();
        let g = &gs[gi.index(gs.len())];
        // same valuation and same residue modulo 8(p-1)|G|
        let v = val_i64(p, d).unwrap();
        let shift = 8 * (p as i64 - 1) * (p as i64).pow(v + 1) * g.order() as i64;
        let d2 = d + shift;
        prop_assert_eq!(val_i64(p, d2), Some(v));
        let sizes = |dd: i64| -> Vec<Vec<u64>> {
            kercoker(g, 2 * dd, p, Method::Closed).unwrap().coker.shapes().into_iter().map(|f| f.torsion).collect()
        };
        prop_assert_eq!(sizes(d), sizes(d2));
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { num_gcd(b, a % b) }
}

#[test]
fn psi_vanishes_on_real_type_in_degrees_one_and_two() {
    for g in two_groups_up_to(16) {
        let r = reps(&g).unwrap();
        let lat = lattice(&g).unwrap();
        for d in -2i64..=2 {
            for n in [8 * d + 1, 8 * d + 2] {
                for k in 0..lat.len() {
                    let b = coeff_basis(&r, k, n, 2);
                    let m = psi_minus_one(&r, &b, 2).unwrap();
                    for (i, gen) in b.gens.iter().enumerate() {
                        if matches!(gen.carrier, Carrier::Real { .. }) {
                            for j in 0..m.cols() {
                                assert_eq!(*m.get(i, j), 0.into(), "{g} n = {n} row {i}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn external_tensor_is_associative_on_levels() {
    for (a, b, c) in [(2u64, 3u64, 5u64), (4, 3, 5), (2, 3, 7), (3, 4, 5)] {
        let g = FinAbGroup::new(vec![a, b, c]).unwrap();
        let f = |o: u64| a_mod_j_mackey(&FinAbGroup::cyclic(o)).unwrap();
        let prime = |o: u64| khom_core::linalg::factorize(o)[0].0;
        // (A ⊗ B) ⊗ C
        let ab = FinAbGroup::new(vec![a, b]).unwrap();
        let s_ab = Split::sylow(&ab, prime(a));
        let left_ab = external_tensor(&f(a), &f(b), &s_ab).unwrap();
        let s_left = Split::new(&g, &[prime(a), prime(b)]);
        let left = external_tensor(&left_ab, &f(c), &s_left).unwrap();
        // A ⊗ (B ⊗ C)
        let bc = FinAbGroup::new(vec![b, c]).unwrap();
        let s_bc = Split::sylow(&bc, prime(b));
        let right_bc = external_tensor(&f(b), &f(c), &s_bc).unwrap();
        let s_right = Split::sylow(&g, prime(a));
        let right = external_tensor(&f(a), &right_bc, &s_right).unwrap();
        let shapes = |m: &khom_core::MackeyFunctor| m.shapes().into_iter().map(|x| (x.free_rank, x.torsion)).collect::<Vec<_>>();
        assert_eq!(shapes(&left), shapes(&right), "C{a}xC{b}xC{c}");
        // unit: tensoring with the trivial group changes nothing
        let unit = a_mod_j_mackey(&FinAbGroup::trivial()).unwrap();
        let s_unit = Split::sylow(&FinAbGroup::cyclic(a), prime(a));
        assert_eq!(shapes(&external_tensor(&f(a), &unit, &s_unit).unwrap()), shapes(&f(a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_operations_match_element_sets(gi in any::<prop::sample::Index>(), a in any::<usize>(), b in any::<usize>()) {
        let gs = groups_up_to(64);
        let g = &gs[gi.index(gs.len())];
        let lat = lattice(g).unwrap();
        let (s, t) = (a % lat.len(), b % lat.len());
        let (es, et): (BTreeSet<u32>, BTreeSet<u32>) =
            (lat.sub(s).elements.iter().copied().collect(), lat.sub(t).elements.iter().copied().collect());
        prop_assert_eq!(lat.contains(s, t), et.is_subset(&es));
        let meet: Vec<u32> = es.intersection(&et).copied().collect();
        prop_assert_eq!(&lat.sub(lat.meet(s, t)).elements, &meet);
        // the join is the set of sums x + y
        let mut join: BTreeSet<u32> = BTreeSet::new();
        for &x in &es {
            for &y in &et {
                join.insert(g.add(x, y));
            }
        }
        prop_assert_eq!(&lat.sub(lat.join(s, t)).elements, &join.into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn odd_degree_levels_split() {
    // pi_odd_assembly checks coker_2{8d+2} ⊕ (Z/2)^{|M_K|} levelwise and errors otherwise
    for g in two_groups_up_to(16) {
        for d in -1..=2 {
            khom_core::theta::pi_odd_assembly(&g, d).unwrap_or_else(|e| panic!("{g} d = {d}: {e}"));
        }
    }
}

#[test]
fn excluded_primes_contribute_zero() {
    use khom_core::assemble::{pi_mod_p, support_primes};
    for g in ["e", "C2", "C3", "C6", "C2xC2"].map(|s| FinAbGroup::parse(s).unwrap()) {
        for k in [1i64, 3, 5, 7, 11, 4, -3] {
            let support = support_primes(&g, k);
            for p in [2u64, 3, 5, 7, 11, 13].into_iter().filter(|p| !support.contains(p)) {
                let m = pi_mod_p(&g, p, k).unwrap();
                assert!(m.functor().unwrap().is_zero(), "{g} k = {k} p = {p}");
            }
        }
    }
}
