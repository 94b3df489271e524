//! Verification suites behind the acceptance criteria and `khom verify`.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::abgroups::{lattice, FinAbGroup, Split};
use crate::assemble::{pi_integral, pi_mod_p, pi_ro_graded};
use crate::burnside::{a_mackey, a_mod_j, brauer_element_v, brauer_subquotient, j_mackey, pos};
use crate::error::{KhomError, Result};
use crate::kcoeff::{compare_methods, kercoker, CoordKind, Method};
use crate::linalg::{factorize, invariant_factors, Mat};
use crate::mackey::{check_axioms, compare, external_tensor, is_surjective_hom, Coords, Level, MackeyFunctor};
use crate::reps::{reps, VirtualRep};
use crate::theta::{i_generators, pi_odd_assembly, theta_odd, theta_zero, theta_zero_well_defined, IGenerator};

/// One checked case.
#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Case {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Case { name: name.into(), ok, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => Case::new(name, ok, detail),
            Err(e) => Case::new(name, false, format!("error: {e}")),
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub seconds: f64,
}

impl Report {
    pub fn ok(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&Case> {
        self.cases.iter().filter(|c| !c.ok).collect()
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().len();
        format!(
            "{}: {} ({} cases, {} failed, {:.2}s)",
            self.suite,
            if self.ok() { "PASS" } else { "FAIL" },
            self.cases.len(),
            failed,
            self.seconds
        )
    }
}

/// Suite names in acceptance-criterion order.
pub const SUITES: [&str; 9] = ["oracle", "golden", "theta", "rank", "vanishing", "tensor", "crosspath", "image-j", "axioms"];

/// Runs a suite by name; `all` runs every suite.
pub fn run(name: &str) -> Result<Vec<Report>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s)).collect::<Result<_>>();
    }
    Ok(vec![run_one(name)?])
}

/// Runs the suite for acceptance criterion `i` (1-based).
pub fn criterion(i: usize) -> Result<Report> {
    let name = SUITES.get(i.wrapping_sub(1)).ok_or_else(|| KhomError::Invalid(format!("no criterion {i}")))?;
    run_one(name)
}

fn run_one(name: &str) -> Result<Report> {
    let start = Instant::now();
    let cases = match name {
        "oracle" => oracle(),
        "golden" => golden(),
        "theta" => theta(),
        "rank" => rank(),
        "vanishing" => vanishing(),
        "tensor" => tensor(),
        "crosspath" => crosspath(),
        "image-j" => image_j(),
        "axioms" => axioms(),
        _ => {
            return Err(KhomError::Invalid(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))))
        }
    };
    log::info!("suite {name} finished");
    Ok(Report { suite: name.to_string(), cases, seconds: start.elapsed().as_secs_f64() })
}

fn groups_up_to(n: u64) -> Vec<FinAbGroup> {
    FinAbGroup::all_up_to(n)
}

fn primes_of(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

fn oracle_cases() -> Vec<(FinAbGroup, u64, i64)> {
    let mut out = Vec::new();
    for (p, bound) in [(2, 16), (3, 27), (5, 27)] {
        for g in groups_up_to(bound).into_iter().filter(|g| g.order() > 1 && g.is_p_group(p)) {
            for n in -16..=17 {
                out.push((g.clone(), p, n));
            }
        }
    }
    out
}

fn oracle() -> Vec<Case> {
    oracle_cases()
        .into_par_iter()
        .map(|(g, p, n)| {
            Case::from_result(
                format!("{g} p={p} n={n}"),
                compare_methods(&g, n, p).map(|(k, c)| {
                    let ok = k.weak && k.strong == Some(true) && c.weak && c.strong == Some(true);
                    (ok, format!("ker: {} coker: {}", k.detail, c.detail))
                }),
            )
        })
        .collect()
}

/// Canonical coordinates of a word in the presentation generators of one level.
fn word(coords: &Coords, orders: &[u64], terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; coords.proj.cols()];
    for &(i, c) in terms {
        v[i] += c;
    }
    reduce(&coords.proj.mul(&Mat::from_rows(&v.iter().map(|&x| vec![x]).collect::<Vec<_>>())).column(0), orders)
}

fn reduce(v: &[i64], orders: &[u64]) -> Vec<i64> {
    v.iter().zip(orders).map(|(&x, &o)| if o > 0 { x.rem_euclid(o as i64) } else { x }).collect()
}

fn add(a: &[i64], b: &[i64], orders: &[u64]) -> Vec<i64> {
    reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>(), orders)
}

fn golden() -> Vec<Case> {
    match golden_cases() {
        Ok(c) => c,
        Err(e) => vec![Case::new("pi_1 over C4", false, format!("error: {e}"))],
    }
}

fn golden_cases() -> Result<Vec<Case>> {
    let g = FinAbGroup::cyclic(4);
    let r = reps(&g)?;
    let lat = r.lattice.clone();
    let (m, coords) = pi_odd_assembly(&g, 0)?;
    let kc = kercoker(&g, 2, 2, Method::Closed)?;
    let (e, c2, c4) = (0, 1, 2);
    let mut cases = Vec::new();
    let shapes: Vec<Vec<u64>> = (0..3).map(|k| m.levels[k].fg().torsion).collect();
    let expect = vec![vec![2, 2], vec![2, 2, 2, 2], vec![2, 2, 2, 2, 4]];
    cases.push(Case::new("level shapes", shapes == expect, format!("{shapes:?}")));

    // generator index of a coker coordinate of a given kind
    let na = |k: usize| lat.below(k).len();
    let coker_gen = |k: usize, f: &dyn Fn(&CoordKind) -> bool| -> Result<usize> {
        kc.coker_kinds[k]
            .iter()
            .position(f)
            .map(|i| na(k) + i)
            .ok_or_else(|| KhomError::Consistency(format!("missing coker coordinate at level {k}")))
    };
    let triv = |c: &CoordKind| matches!(c, CoordKind::Real { chi } if *chi == 0);
    let sign = |c: &CoordKind| matches!(c, CoordKind::Real { chi } if *chi != 0);
    let orbit = |c: &CoordKind| matches!(c, CoordKind::Orbit { .. });
    let ord = |k: usize| m.levels[k].orders.clone();
    let w = |k: usize, terms: &[(usize, i64)]| word(&coords[k], &ord(k), terms);
    let orb = |k: usize, h: usize| pos(&lat, k, h);

    let a = w(e, &[(orb(e, e), 1)]);
    let b = w(e, &[(coker_gen(e, &triv)?, 1)]);
    let a1 = w(c2, &[(orb(c2, c2), 1)]);
    let ae = w(c2, &[(orb(c2, e), 1), (orb(c2, c2), 1)]);
    let b1 = w(c2, &[(coker_gen(c2, &triv)?, 1)]);
    let be = w(c2, &[(coker_gen(c2, &sign)?, 1)]);
    let aa1 = w(c4, &[(orb(c4, c4), 1)]);
    let aas = w(c4, &[(orb(c4, c2), 1), (orb(c4, c4), 1)]);
    let bb1 = w(c4, &[(coker_gen(c4, &triv)?, 1)]);
    let bbs = w(c4, &[(coker_gen(c4, &sign)?, 1)]);
    let c = w(c4, &[(coker_gen(c4, &orbit)?, 1)]);

    let basis = |k: usize, gens: &[(&Vec<i64>, u64)]| -> bool {
        let phi = Mat::from_rows(&(0..m.levels[k].dim()).map(|i| gens.iter().map(|(v, _)| v[i]).collect()).collect::<Vec<_>>());
        let orders: Vec<u64> = gens.iter().map(|&(_, o)| o).collect();
        let src = Level::new(m.ring(), orders, vec![String::new(); gens.len()]);
        let size: u64 = gens.iter().map(|&(_, o)| o).product();
        let level_size: u64 = m.levels[k].orders.iter().product();
        size == level_size && is_surjective_hom(&phi, &src, &m.levels[k])
    };
    cases.push(Case::new("basis at e: a, b", basis(e, &[(&a, 2), (&b, 2)]), ""));
    cases.push(Case::new("basis at C2: a_1, a_ε, b_1, b_ε", basis(c2, &[(&a1, 2), (&ae, 2), (&b1, 2), (&be, 2)]), ""));
    cases.push(Case::new(
        "basis at C4: A_1, A_σ, B_1, B_σ, c",
        basis(c4, &[(&aa1, 2), (&aas, 2), (&bb1, 2), (&bbs, 2), (&c, 4)]),
        "",
    ));

    let res = |t: usize, k: usize, x: &[i64]| reduce(&m.apply_res(t, k, x), &ord(t));
    let tr = |t: usize, k: usize, x: &[i64]| reduce(&m.apply_tr(t, k, x), &ord(k));
    let zero = |k: usize| vec![0; m.levels[k].dim()];
    let twice = |k: usize, x: &[i64]| add(x, x, &ord(k));
    let eqs: Vec<(&str, Vec<i64>, Vec<i64>)> = vec![
        ("Res_e^C2 a_1 = a", res(e, c2, &a1), a.clone()),
        ("Res_e^C2 a_ε = a", res(e, c2, &ae), a.clone()),
        ("Res_e^C2 b_1 = b", res(e, c2, &b1), b.clone()),
        ("Res_e^C2 b_ε = b", res(e, c2, &be), b.clone()),
        ("Res_C2^C4 A_1 = a_1", res(c2, c4, &aa1), a1.clone()),
        ("Res_C2^C4 A_σ = a_1", res(c2, c4, &aas), a1.clone()),
        ("Res_C2^C4 B_1 = b_1", res(c2, c4, &bb1), b1.clone()),
        ("Res_C2^C4 B_σ = b_1", res(c2, c4, &bbs), b1.clone()),
        ("Res_C2^C4 c = b_ε", res(c2, c4, &c), be.clone()),
        ("Tr_e^C2 a = a_1 + a_ε", tr(e, c2, &a), add(&a1, &ae, &ord(c2))),
        ("Tr_e^C2 b = b_1 + b_ε", tr(e, c2, &b), add(&b1, &be, &ord(c2))),
        ("Tr_C2^C4 a_1 = A_1 + A_σ", tr(c2, c4, &a1), add(&aa1, &aas, &ord(c4))),
        ("Tr_C2^C4 b_1 = B_1 + B_σ", tr(c2, c4, &b1), add(&bb1, &bbs, &ord(c4))),
        ("Tr_C2^C4 b_ε = 0", tr(c2, c4, &be), zero(c4)),
        ("Tr_C2^C4 a_ε = 2c", tr(c2, c4, &ae), twice(c4, &c)),
    ];
    for (name, got, want) in eqs {
        cases.push(Case::new(name, got == want, format!("{got:?} vs {want:?}")));
    }
    // the part of Tr a_ε seen by complexification, which kills the η² classes B_1, B_σ
    let eta2 = [&bb1, &bbs];
    let mod_eta2 = [vec![], vec![0], vec![1], vec![0, 1]].iter().any(|pick: &Vec<usize>| {
        let mut v = twice(c4, &c);
        for &i in pick {
            v = add(&v, eta2[i], &ord(c4));
        }
        v == tr(c2, c4, &ae)
    });
    cases.push(Case::new("Tr_C2^C4 a_ε ≡ 2c modulo η² classes", mod_eta2, ""));
    Ok(cases)
}

fn theta() -> Vec<Case> {
    let mut cases = Vec::new();
    cases.push(Case::from_result("θ_V(X_V) = η·ρ_V", theta_v()));
    for d in -2..=2 {
        cases.push(Case::from_result(format!("θ_{}(D_(C2,e)) over C4 = 2·Z/4 generator", 8 * d + 1), theta_d_c4(d)));
        cases.push(Case::from_result(
            format!("θ_{}(D_(C2,e)) over C4 has Z/4 component 2", 8 * d + 1),
            theta_d_c4_orbit(d),
        ));
        cases.push(Case::from_result(format!("θ_{}(B_(V,e)) = η²u^d·ρ_V", 8 * d + 1), theta_b_v(d)));
    }
    for g in groups_up_to(16).into_iter().filter(|g| g.order() > 1 && g.is_p_group(2)) {
        cases.push(Case::from_result(
            format!("θ_0 well defined over {g}"),
            reps(&g).map(|r| ((0..r.lattice.len()).all(|k| theta_zero_well_defined(&r, k)), String::new())),
        ));
    }
    cases
}

fn theta_v() -> Result<(bool, String)> {
    let r = reps(&FinAbGroup::parse("C2xC2")?)?;
    let lat = &r.lattice;
    let v = lat.top();
    let xv = brauer_element_v(lat, v)?;
    let same_x = xv == brauer_subquotient(lat, v, v, lat.bottom());
    let got = theta_zero(&r, v, lat.bottom());
    // ρ_V is the sum of the four characters of V, all of real type
    let want = vec![1; r.chars(v).real.len()];
    Ok((same_x && got == want && want.len() == 4, format!("{got:?}")))
}

fn theta_d_c4(d: i64) -> Result<(bool, String)> {
    let r = reps(&FinAbGroup::cyclic(4))?;
    let top = r.lattice.top();
    let gen = IGenerator::D { h: 0, h2: 1 };
    let listed = i_generators(&r, top)?.contains(&gen);
    let kc = kercoker(&FinAbGroup::cyclic(4), 8 * d + 2, 2, Method::Closed)?;
    let kinds = &kc.coker_kinds[top];
    let orders = &kc.coker.levels[top].orders;
    let got = theta_odd(&r, top, kinds, &gen);
    let want: Vec<i64> = kinds.iter().map(|k| if matches!(k, CoordKind::Orbit { .. }) { 2 } else { 0 }).collect();
    let z4 = kinds.iter().zip(orders).filter(|(k, _)| matches!(k, CoordKind::Orbit { .. })).all(|(_, &o)| o == 4);
    let one_orbit = kinds.iter().filter(|k| matches!(k, CoordKind::Orbit { .. })).count() == 1;
    Ok((listed && z4 && one_orbit && got == want, format!("{got:?} on orders {orders:?}")))
}

fn theta_d_c4_orbit(d: i64) -> Result<(bool, String)> {
    let r = reps(&FinAbGroup::cyclic(4))?;
    let top = r.lattice.top();
    let kc = kercoker(&FinAbGroup::cyclic(4), 8 * d + 2, 2, Method::Closed)?;
    let kinds = &kc.coker_kinds[top];
    let got = theta_odd(&r, top, kinds, &IGenerator::D { h: 0, h2: 1 });
    let ok = kinds.iter().zip(&got).all(|(k, &v)| !matches!(k, CoordKind::Orbit { .. }) || v == 2);
    Ok((ok, format!("{got:?}")))
}

fn theta_b_v(d: i64) -> Result<(bool, String)> {
    let g = FinAbGroup::parse("C2xC2")?;
    let r = reps(&g)?;
    let lat = &r.lattice;
    let top = lat.top();
    let gen = IGenerator::B { t: top, l: lat.bottom() };
    let listed = i_generators(&r, top)?.contains(&gen);
    let kc = kercoker(&g, 8 * d + 2, 2, Method::Closed)?;
    let kinds = &kc.coker_kinds[top];
    let got = theta_odd(&r, top, kinds, &gen);
    let real = kinds.iter().filter(|k| matches!(k, CoordKind::Real { .. })).count();
    Ok((listed && real == 4 && got == vec![1; kinds.len()], format!("{got:?}")))
}

fn rank() -> Vec<Case> {
    groups_up_to(36)
        .into_par_iter()
        .map(|g| {
            Case::from_result(
                format!("{g}"),
                (|| {
                    let lat = lattice(&g)?;
                    let (aj, _) = a_mod_j(&g)?;
                    let pi0 = pi_integral(&g, 0)?;
                    let pi0 = pi0.functor().expect("degree 0 is a functor");
                    let mut bad = Vec::new();
                    for t in 0..lat.len() {
                        let want = lat.cyclic_below(t).len();
                        let (x, y) = (aj.levels[t].fg().free_rank, pi0.levels[t].fg().free_rank);
                        if x != want || y != want {
                            bad.push(format!("{}: A/J {x}, π_0 {y}, cyclic {want}", lat.sub(t).label()));
                        }
                    }
                    Ok((bad.is_empty(), bad.join("; ")))
                })(),
            )
        })
        .collect()
}

fn vanishing() -> Vec<Case> {
    let mut jobs: Vec<(FinAbGroup, Option<u64>, i64)> = Vec::new();
    for g in groups_up_to(24) {
        jobs.push((g.clone(), None, -1));
        let mut ps = primes_of(g.order());
        ps.extend([2, 3, 5]);
        ps.sort_unstable();
        ps.dedup();
        for p in ps {
            for k in -17..=17i64 {
                let zero_degree = if p == 2 { matches!(k.rem_euclid(8), 4 | 6) } else { k != 0 && k % 2 == 0 };
                if zero_degree {
                    jobs.push((g.clone(), Some(p), k));
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(g, p, k)| {
            let (name, res) = match p {
                None => (format!("{g} integral k={k}"), pi_integral(&g, k)),
                Some(p) => (format!("{g} p={p} k={k}"), pi_mod_p(&g, p, k)),
            };
            Case::from_result(
                name,
                res.map(|a| match a.functor() {
                    Some(m) => (m.is_zero(), format!("{:?}", m.shapes().iter().map(|s| s.to_string()).collect::<Vec<_>>())),
                    None => (false, "symbolic answer".into()),
                }),
            )
        })
        .collect()
}

/// Level maps `A/J(C_m) ⊠ A/J(C_n) → A/J(C_mn)` sending `[P/S1] ⊗ [L/S2]` to `[T/(S1 × S2)]`.
fn tensor_iso(split: &Split, cp: &[Coords], cn: &[Coords], cg: &[Coords]) -> Result<Vec<Mat>> {
    let lg = lattice(&split.group)?;
    let (la, lb) = (lattice(&split.first)?, lattice(&split.second)?);
    let parts = split.part_table(&lg, &la, &lb);
    let index: HashMap<(usize, usize), usize> = parts.iter().enumerate().map(|(t, &ab)| (ab, t)).collect();
    let mut maps = Vec::with_capacity(lg.len());
    for (t, &(a, b)) in parts.iter().enumerate() {
        let (sa, sb) = (&cp[a].section, &cn[b].section);
        let mut v = Mat::zeros(lg.below(t).len(), sa.cols() * sb.cols());
        for i in 0..sa.cols() {
            for j in 0..sb.cols() {
                for (x, &s1) in la.below(a).iter().enumerate() {
                    for (y, &s2) in lb.below(b).iter().enumerate() {
                        let c = sa.get(x, i) * sb.get(y, j);
                        if c != 0 {
                            v.add_to(pos(&lg, t, index[&(s1, s2)]), i * sb.cols() + j, c);
                        }
                    }
                }
            }
        }
        maps.push(cg[t].proj.mul(&v));
    }
    Ok(maps)
}

fn tensor() -> Vec<Case> {
    let mut jobs = Vec::new();
    for m in 2..=18u64 {
        for n in 2..=18u64 {
            if m * n <= 36 && num_integer::gcd(m, n) == 1 {
                jobs.push((m, n));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(m, n)| {
            Case::from_result(
                format!("C{m} ⊠ C{n}"),
                (|| {
                    let g = FinAbGroup::cyclic(m * n);
                    let split = Split::new(&g, &primes_of(m));
                    let (fp, cp) = a_mod_j(&split.first)?;
                    let (fn_, cn) = a_mod_j(&split.second)?;
                    let (fg, cg) = a_mod_j(&g)?;
                    let t = external_tensor(&fp, &fn_, &split)?;
                    let iso = tensor_iso(&split, &cp, &cn, &cg)?;
                    let v = compare(&t, &fg, Some(&iso))?;
                    Ok((v.weak && v.strong == Some(true), v.detail))
                })(),
            )
        })
        .collect()
}

/// Level maps from `π_n` (tensored with `A/J(N)`) to the RO-graded answer at `n·1`:
/// the `A/J` factor is sent to its marks at the cyclic subgroups.
fn crosspath_iso(g: &FinAbGroup, p: u64, a: &MackeyFunctor, b: &MackeyFunctor) -> Result<Vec<Mat>> {
    let split = Split::sylow(g, p);
    let lg = lattice(g)?;
    let (la, lb) = (lattice(&split.first)?, lattice(&split.second)?);
    let parts = split.part_table(&lg, &la, &lb);
    let (_, cn) = a_mod_j(&split.second)?;
    let cyclic = lb.cyclic_below(lb.top());
    let mut maps = Vec::with_capacity(lg.len());
    for (t, &(_, l)) in parts.iter().enumerate() {
        let sec = &cn[l].section;
        let blocks: Vec<usize> = cyclic.iter().copied().filter(|&c| lb.contains(l, c)).collect();
        let dim_b = sec.cols();
        let dim_f = a.levels[t].dim() / dim_b.max(1);
        if dim_f * dim_b != a.levels[t].dim() || blocks.len() * dim_f != b.levels[t].dim() {
            return Err(KhomError::Consistency(format!("level {t}: unexpected dimensions")));
        }
        let mut phi = Mat::zeros(b.levels[t].dim(), a.levels[t].dim());
        for (ci, &c) in blocks.iter().enumerate() {
            for j in 0..dim_b {
                let mark: i64 = lb
                    .below(l)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &h)| lb.contains(h, c))
                    .map(|(x, &h)| sec.get(x, j) * lb.index(h, l) as i64)
                    .sum();
                for f in 0..dim_f {
                    phi.set(ci * dim_f + f, f * dim_b + j, mark);
                }
            }
        }
        maps.push(phi);
    }
    Ok(maps)
}

fn crosspath() -> Vec<Case> {
    let mut jobs = Vec::new();
    for gs in ["C6", "C10", "C2xC2xC3"] {
        for p in [2, 3] {
            for n in -4..=9 {
                jobs.push((gs, p, n));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(gs, p, n)| {
            Case::from_result(
                format!("{gs} p={p} n={n}"),
                (|| {
                    let g = FinAbGroup::parse(gs)?;
                    let r = reps(&g)?;
                    let ro = pi_ro_graded(&g, p, &VirtualRep::trivial(&r, n))?;
                    let z = pi_mod_p(&g, p, n)?;
                    let (b, a) = (ro.functor().expect("functor"), z.functor().expect("functor"));
                    let iso = crosspath_iso(&g, p, a, b)?;
                    let v = compare(a, b, Some(&iso))?;
                    Ok((v.weak && v.strong == Some(true), v.detail))
                })(),
            )
        })
        .collect()
}

fn top_torsion(a: &crate::assemble::GradedAnswer) -> Option<Vec<u64>> {
    let m = a.functor()?;
    let f = m.levels[m.lattice.top()].fg();
    (f.free_rank == 0).then_some(f.torsion)
}

fn image_j() -> Vec<Case> {
    let e = FinAbGroup::trivial();
    let mut cases = Vec::new();
    for d in 1..=4i64 {
        let want = 1u64 << (4 + d.trailing_zeros());
        cases.push(Case::from_result(
            format!("π_{} at p=2 has order {want}", 8 * d - 1),
            pi_mod_p(&e, 2, 8 * d - 1).map(|a| {
                let t = top_torsion(&a).unwrap_or_default();
                (t.iter().product::<u64>() == want && !t.is_empty(), format!("{t:?}"))
            }),
        ));
    }
    for (k, parts) in [(3i64, vec![8u64, 3]), (7, vec![16, 3, 5])] {
        let want = invariant_factors(parts.clone());
        cases.push(Case::from_result(
            format!("π_{k} = {}", parts.iter().map(|o| format!("Z/{o}")).collect::<Vec<_>>().join(" ⊕ ")),
            pi_integral(&e, k).map(|a| {
                let t = top_torsion(&a).unwrap_or_default();
                (t == want, format!("{t:?}"))
            }),
        ));
    }
    cases
}

/// Every functor produced for one group by the modes the other suites exercise.
fn functors_for(g: &FinAbGroup) -> Result<Vec<(String, MackeyFunctor)>> {
    let mut out = vec![
        ("A".to_string(), a_mackey(g)?),
        ("J".to_string(), j_mackey(g)?),
        ("A/J".to_string(), a_mod_j(g)?.0),
    ];
    for k in [-1, 0, 1, 3, 7] {
        if let Some(m) = pi_integral(g, k)?.functor() {
            out.push((format!("π_{k} integral"), m.clone()));
        }
    }
    let mut ps = primes_of(g.order());
    ps.push(2);
    ps.sort_unstable();
    ps.dedup();
    for &p in &ps {
        for k in -17..=17 {
            out.push((format!("π_{k} mod {p}"), pi_mod_p(g, p, k)?.functor().expect("functor").clone()));
        }
        if g.is_p_group(p) && g.order() > 1 {
            for n in -16..=17 {
                let kc = kercoker(g, n, p, Method::Closed)?;
                out.push((format!("ker_{p}{{{n}}}"), kc.ker));
                out.push((format!("coker_{p}{{{n}}}"), kc.coker));
            }
        }
        let r = reps(g)?;
        let mut reps_to_try: Vec<VirtualRep> = (-4..=9).map(|n| VirtualRep::trivial(&r, n)).collect();
        // each real irrep on its own, with the trivial summand shifted to odd degree
        let n_irr = VirtualRep::trivial(&r, 0).coeffs.len();
        for i in 0..n_irr {
            let mut v = VirtualRep::trivial(&r, 1);
            v.coeffs[i] += 1;
            reps_to_try.push(v);
        }
        for v in reps_to_try {
            out.push((format!("π_V mod {p}, V = {:?}", v.coeffs), pi_ro_graded(g, p, &v)?.functor().expect("functor").clone()));
        }
    }
    Ok(out)
}

fn axioms() -> Vec<Case> {
    let mut cases: Vec<Case> = groups_up_to(24)
        .into_par_iter()
        .map(|g| {
            Case::from_result(
                format!("{g}"),
                functors_for(&g).map(|fs| {
                    let bad: Vec<String> = fs
                        .iter()
                        .filter_map(|(name, m)| {
                            let rep = check_axioms(m);
                            (!rep.ok).then(|| format!("{name}: {}", rep.failure.unwrap_or_default()))
                        })
                        .collect();
                    (bad.is_empty(), format!("{} functors; {}", fs.len(), bad.join("; ")))
                }),
            )
        })
        .collect();
    for (m, n) in [(2u64, 3u64), (3, 4), (4, 9), (5, 4)] {
        cases.push(Case::from_result(
            format!("A/J(C{m}) ⊠ A/J(C{n})"),
            (|| {
                let g = FinAbGroup::cyclic(m * n);
                let split = Split::new(&g, &primes_of(m));
                let t = external_tensor(&a_mod_j(&split.first)?.0, &a_mod_j(&split.second)?.0, &split)?;
                let rep = check_axioms(&t);
                Ok((rep.ok, rep.failure.unwrap_or_default()))
            })(),
        ));
    }
    cases
}
