//! Homotopy Mackey functors of the `KU_G/p`-local and `KU_G`-local spheres,
//! in integer degrees and in `RO(G)`-degrees.

use std::collections::HashMap;

use serde::Serialize;

use crate::abgroups::{lattice, FinAbGroup, Split};
use crate::burnside::a_mod_j_mackey;
use crate::error::{KhomError, Result};
use crate::kcoeff::{kercoker, Method};
use crate::linalg::{factorize, is_prime, Mat, Ring};
use crate::mackey::{external_tensor, Level, MackeyFunctor};
use crate::reps::{reps, VirtualRep};
use crate::theta::{pi0_assembly, pi_odd_assembly};

/// Which homotopy is being computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    ModP { p: u64, k: i64 },
    Integral { k: i64 },
    ROGraded { p: u64, rep: Vec<i64> },
}

/// `Q/Z ⊗ ∏_p` of free `Z_p`-modules, recorded by its rank at each subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicProduct {
    pub formula: String,
    pub subgroups: Vec<String>,
    /// Rank `r(T)` of the `Z_p` factor at each subgroup, the same for every prime `p`.
    pub ranks: Vec<usize>,
}

impl SymbolicProduct {
    /// Rank of the `p`-factor at subgroup `t`.
    pub fn rank(&self, t: usize, p: u64) -> usize {
        assert!(is_prime(p), "{p} is not prime");
        self.ranks[t]
    }
}

#[derive(Clone, Debug)]
pub enum Answer {
    Functor(MackeyFunctor),
    Symbolic(SymbolicProduct),
}

/// A computed answer with notes on the piece producing each part.
#[derive(Clone, Debug)]
pub struct GradedAnswer {
    pub group: FinAbGroup,
    pub mode: Mode,
    pub result: Answer,
    pub notes: Vec<String>,
}

impl GradedAnswer {
    pub fn functor(&self) -> Option<&MackeyFunctor> {
        match &self.result {
            Answer::Functor(m) => Some(m),
            Answer::Symbolic(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let result = match &self.result {
            Answer::Functor(m) => m.to_json(),
            Answer::Symbolic(s) => serde_json::json!({ "symbolic": s }),
        };
        serde_json::json!({
            "group": self.group.to_string(),
            "mode": self.mode,
            "result": result,
            "provenance": self.notes,
        })
    }
}

/// The functor over the Sylow subgroup `N_p` in degree `k`, before tensoring.
pub fn sylow_functor(np: &FinAbGroup, p: u64, k: i64) -> Result<(MackeyFunctor, String)> {
    let ring = Ring::PComplete(p);
    let zero = || -> Result<(MackeyFunctor, String)> {
        Ok((MackeyFunctor::zero(lattice(np)?, ring), format!("degree {k}: zero")))
    };
    let coker = |n: i64| -> Result<(MackeyFunctor, String)> {
        Ok((kercoker(np, n, p, Method::Closed)?.coker, format!("degree {k}: coker_{p}{{{n}}}")))
    };
    let ker = |n: i64| -> Result<(MackeyFunctor, String)> {
        Ok((kercoker(np, n, p, Method::Closed)?.ker, format!("degree {k}: ker_{p}{{{n}}}")))
    };
    if p == 2 {
        let (r, d) = (k.rem_euclid(8), k.div_euclid(8));
        match r {
            0 if k == 0 => Ok((pi0_assembly(np, true)?.0, "degree 0: A ⊕ η·RO/2 modulo J - θ(J)".into())),
            0 => coker(k + 1),
            1 => Ok((pi_odd_assembly(np, d)?.0, format!("degree {k}: A/2 ⊕ coker_2{{{}}} modulo I - θ(I)", k + 1))),
            2 => ker(k),
            3 | 5 | 7 => coker(k + 1),
            _ => zero(),
        }
    } else if k == 0 {
        ker(0)
    } else if k.rem_euclid(2) == 1 {
        coker(k + 1)
    } else {
        zero()
    }
}

/// `π_k L_{KU_G/p} S_G`.
pub fn pi_mod_p(g: &FinAbGroup, p: u64, k: i64) -> Result<GradedAnswer> {
    if !is_prime(p) {
        return Err(KhomError::Invalid(format!("{p} is not prime")));
    }
    lattice(g)?;
    let split = Split::sylow(g, p);
    let (f, note) = sylow_functor(&split.first, p, k)?;
    let mut notes = vec![note];
    let m = if split.second.order() == 1 {
        f
    } else {
        notes.push(format!("tensored with A/J over {}", split.second));
        external_tensor(&f, &a_mod_j_mackey(&split.second)?, &split)?
    };
    if k == -1 && m.levels.iter().any(|l| l.orders.iter().any(|&o| o != 0)) {
        return Err(KhomError::Consistency("degree -1 answer has torsion".into()));
    }
    Ok(GradedAnswer { group: g.clone(), mode: Mode::ModP { p, k }, result: Answer::Functor(m), notes })
}

/// Primes that can contribute to `π_k L_{KU_G} S_G` for `k ∉ {0, -1, -2}`.
pub fn support_primes(g: &FinAbGroup, k: i64) -> Vec<u64> {
    let mut ps: Vec<u64> = factorize(g.order()).into_iter().map(|(p, _)| p).collect();
    ps.push(2);
    if k.rem_euclid(2) == 1 {
        let d = (k + 1) / 2;
        if d != 0 {
            for p in 3..=(d.unsigned_abs() + 1) {
                if is_prime(p) && d.rem_euclid(p as i64 - 1) == 0 {
                    ps.push(p);
                }
            }
        }
    }
    ps.sort_unstable();
    ps.dedup();
    ps
}

/// `π_k L_{KU_G} S_G`.
pub fn pi_integral(g: &FinAbGroup, k: i64) -> Result<GradedAnswer> {
    let lat = lattice(g)?;
    let mode = Mode::Integral { k };
    match k {
        0 => {
            let split = Split::sylow(g, 2);
            let (f, _) = pi0_assembly(&split.first, false)?;
            let mut notes = vec!["degree 0: A ⊕ η·RO/2 modulo J - θ(J), uncompleted".to_string()];
            let m = if split.second.order() == 1 {
                f
            } else {
                notes.push(format!("tensored with A/J over {}", split.second));
                external_tensor(&f, &a_mod_j_mackey(&split.second)?, &split)?
            };
            Ok(GradedAnswer { group: g.clone(), mode, result: Answer::Functor(m), notes })
        }
        -1 => Ok(GradedAnswer {
            group: g.clone(),
            mode,
            result: Answer::Functor(MackeyFunctor::zero(lat, Ring::Integral)),
            notes: vec!["degree -1: zero".into()],
        }),
        -2 => {
            let sym = SymbolicProduct {
                formula: "Q/Z ⊗ ∏_p (Z_p)^{r(T)}".into(),
                subgroups: (0..lat.len()).map(|t| lat.sub(t).label()).collect(),
                ranks: (0..lat.len()).map(|t| lat.cyclic_below(t).len()).collect(),
            };
            Ok(GradedAnswer {
                group: g.clone(),
                mode,
                result: Answer::Symbolic(sym),
                notes: vec!["degree -2: Q/Z ⊗ ∏_p coker_p{0}".into()],
            })
        }
        _ => {
            let mut total = MackeyFunctor::zero(lat, Ring::Integral);
            let mut notes = Vec::new();
            for p in support_primes(g, k) {
                let a = pi_mod_p(g, p, k)?;
                let m = a.functor().expect("finite degree").clone();
                if m.levels.iter().any(|l| l.orders.contains(&0)) {
                    return Err(KhomError::Consistency(format!("degree {k} has a free {p}-part")));
                }
                let m = retag(&m, Ring::Integral).pruned();
                notes.push(format!("p = {p}: {}", a.notes.join("; ")));
                total = total.direct_sum(&m)?;
            }
            Ok(GradedAnswer { group: g.clone(), mode, result: Answer::Functor(total), notes })
        }
    }
}

/// Same functor with every level read over another ring (finite levels only change their tag).
fn retag(m: &MackeyFunctor, ring: Ring) -> MackeyFunctor {
    let mut out = m.clone();
    for l in &mut out.levels {
        l.ring = ring;
    }
    out
}

/// `π_V L_{KU_G/p} S_G` for a virtual real representation `V` of `G`.
pub fn pi_ro_graded(g: &FinAbGroup, p: u64, v: &VirtualRep) -> Result<GradedAnswer> {
    if !is_prime(p) {
        return Err(KhomError::Invalid(format!("{p} is not prime")));
    }
    let r = reps(g)?;
    let lg = r.lattice.clone();
    let split = Split::sylow(g, p);
    let (la, lb) = (lattice(&split.first)?, lattice(&split.second)?);
    let parts = split.part_table(&lg, &la, &lb);
    let index: HashMap<(usize, usize), usize> = parts.iter().enumerate().map(|(t, &pq)| (pq, t)).collect();
    // degree attached to each cyclic subgroup C of N, through its image in G
    let e_a = la.bottom();
    let cyclic = lb.cyclic_below(lb.top());
    let degree: HashMap<usize, i64> = cyclic.iter().map(|&c| (c, r.fixed_dim(v, index[&(e_a, c)]))).collect();
    let mut funcs: HashMap<i64, MackeyFunctor> = HashMap::new();
    let mut notes = Vec::new();
    for &c in &cyclic {
        let n = degree[&c];
        if let std::collections::hash_map::Entry::Vacant(e) = funcs.entry(n) {
            let (f, note) = sylow_functor(&split.first, p, n)?;
            notes.push(note);
            e.insert(f);
        }
        notes.push(format!("summand {}: n = {n}", lb.sub(c).label()));
    }
    let blocks = |l: usize| -> Vec<usize> { cyclic.iter().copied().filter(|&c| lb.contains(l, c)).collect() };
    let ring = Ring::PComplete(p);
    let mut levels = Vec::with_capacity(lg.len());
    for &(pa, l) in &parts {
        let mut orders = Vec::new();
        let mut labels = Vec::new();
        for c in blocks(l) {
            let lv = &funcs[&degree[&c]].levels[pa];
            orders.extend(lv.orders.iter().copied());
            labels.extend(lv.labels.iter().map(|s| format!("{}:{s}", lb.sub(c).label())));
        }
        levels.push(Level::new(ring, orders, labels));
    }
    let offsets = |l: usize, pa: usize| -> Vec<(usize, usize)> {
        let mut off = 0;
        blocks(l)
            .into_iter()
            .map(|c| {
                let o = off;
                off += funcs[&degree[&c]].levels[pa].dim();
                (c, o)
            })
            .collect()
    };
    let build = |t: usize, k: usize, is_res: bool| -> Result<Mat> {
        let ((ta, tl), (ka, kl)) = (parts[t], parts[k]);
        let (ot, ok) = (offsets(tl, ta), offsets(kl, ka));
        let (rows, cols) = if is_res { (levels[t].dim(), levels[k].dim()) } else { (levels[k].dim(), levels[t].dim()) };
        let mut m = Mat::zeros(rows, cols);
        let idx = lb.index(tl, kl) as i64;
        for &(c, o_t) in &ot {
            let o_k = ok.iter().find(|&&(c2, _)| c2 == c).expect("blocks of T lie in K").1;
            let f = &funcs[&degree[&c]];
            let (b, r0, c0, scale) =
                if is_res { (f.res(ta, ka), o_t, o_k, 1) } else { (f.tr(ta, ka), o_k, o_t, idx) };
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(r0 + i, c0 + j, b.get(i, j) * scale);
                }
            }
        }
        Ok(m)
    };
    let m = MackeyFunctor::from_all(lg, levels.clone(), |t, k| build(t, k, true), |t, k| build(t, k, false))?;
    Ok(GradedAnswer {
        group: g.clone(),
        mode: Mode::ROGraded { p, rep: v.coeffs.clone() },
        result: Answer::Functor(m),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::check_axioms;

    fn g(s: &str) -> FinAbGroup {
        FinAbGroup::parse(s).unwrap()
    }

    fn top(a: &GradedAnswer) -> (Ring, usize, Vec<u64>) {
        let m = a.functor().unwrap();
        let f = m.levels[m.lattice.top()].fg();
        (f.ring, f.free_rank, f.torsion)
    }

    #[test]
    fn mod_p_examples() {
        let a = pi_mod_p(&g("C3"), 3, 5).unwrap();
        let m = a.functor().unwrap();
        assert_eq!(m.levels[1].fg().torsion, vec![9]);
        assert!(m.levels[0].fg().is_zero());
        assert_eq!(top(&pi_mod_p(&FinAbGroup::trivial(), 2, 3).unwrap()).2, vec![8]);
        let a = pi_mod_p(&g("C6"), 2, 0).unwrap();
        assert!(check_axioms(a.functor().unwrap()).ok);
        assert_eq!(top(&a), (Ring::PComplete(2), 4, vec![2, 2, 2, 2]));
    }

    #[test]
    fn support() {
        assert_eq!(support_primes(&FinAbGroup::trivial(), 3), vec![2, 3]);
        assert_eq!(support_primes(&g("C15"), 1), vec![2, 3, 5]);
        assert_eq!(support_primes(&FinAbGroup::trivial(), 7), vec![2, 3, 5]);
    }

    #[test]
    fn integral_examples() {
        assert_eq!(top(&pi_integral(&g("C4"), 0).unwrap()), (Ring::Integral, 3, vec![2, 2]));
        assert!(pi_integral(&g("C6"), -1).unwrap().functor().unwrap().is_zero());
        assert_eq!(top(&pi_integral(&FinAbGroup::trivial(), 7).unwrap()).2, vec![240]);
        let s = pi_integral(&g("C2xC2"), -2).unwrap();
        match s.result {
            Answer::Symbolic(sp) => assert_eq!(sp.rank(4, 7), 4),
            Answer::Functor(_) => panic!("degree -2 must be symbolic"),
        }
        let c2 = pi_integral(&g("C2"), 4).unwrap();
        assert!(c2.functor().unwrap().is_zero());
    }

    #[test]
    fn ro_graded_examples() {
        let r = reps(&g("C2")).unwrap();
        let v = VirtualRep::parse(&r, "r1").unwrap();
        let a = pi_ro_graded(&g("C2"), 2, &v).unwrap();
        let b = pi_mod_p(&g("C2"), 2, 1).unwrap();
        let sh = |m: &MackeyFunctor| m.shapes().into_iter().map(|f| (f.free_rank, f.torsion)).collect::<Vec<_>>();
        assert_eq!(sh(a.functor().unwrap()), sh(b.functor().unwrap()));
        let g6 = g("C6");
        let r6 = reps(&g6).unwrap();
        let v = VirtualRep::parse(&r6, "c0").unwrap();
        let a = pi_ro_graded(&g6, 2, &v).unwrap();
        assert!(check_axioms(a.functor().unwrap()).ok);
    }
}
