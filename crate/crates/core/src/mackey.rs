//! Mackey functors on the subgroup lattice of a finite abelian group.
//!
//! Each level is a direct sum of cyclic groups with labelled generators.
//! Restriction and transfer matrices are held for every proper pair `T ⊊ K`;
//! they are built from covering pairs by composition along a fixed chain.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::abgroups::{lattice, Lattice, Split};
use crate::error::{KhomError, Result};
use crate::linalg::{cokernel, tensor_order, tensor_ring, FgAbGroup, IntMatrix, Mat, Presentation, Ring};

/// One level: `⊕ Z/o_i` with `o_i = 0` a free summand over the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub ring: Ring,
    pub orders: Vec<u64>,
    pub labels: Vec<String>,
}

impl Level {
    pub fn new(ring: Ring, orders: Vec<u64>, labels: Vec<String>) -> Self {
        assert_eq!(orders.len(), labels.len(), "label/order count mismatch");
        Level { ring, orders, labels }
    }

    pub fn zero(ring: Ring) -> Self {
        Level { ring, orders: vec![], labels: vec![] }
    }

    pub fn free(ring: Ring, labels: Vec<String>) -> Self {
        Level { ring, orders: vec![0; labels.len()], labels }
    }

    pub fn dim(&self) -> usize {
        self.orders.len()
    }

    /// Invariant-factor form.
    pub fn fg(&self) -> FgAbGroup {
        let mut g = FgAbGroup::from_orders(self.ring, &self.orders);
        if g.free_rank + g.torsion.len() == self.dim() {
            let mut idx: Vec<usize> = (0..self.dim()).collect();
            idx.sort_by_key(|&i| if self.orders[i] == 0 { (0, 0) } else { (1, self.orders[i]) });
            let sorted: Vec<u64> = idx.iter().map(|&i| self.orders[i]).filter(|&o| o > 0).collect();
            if sorted == g.torsion {
                g.labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
            }
        }
        g
    }
}

fn reduce_vec(v: &mut [i64], orders: &[u64]) {
    for (x, &o) in v.iter_mut().zip(orders) {
        if o > 0 {
            *x = x.rem_euclid(o as i64);
        }
    }
}

/// A Mackey functor with structure maps for all proper pairs.
#[derive(Clone, Debug)]
pub struct MackeyFunctor {
    pub lattice: Arc<Lattice>,
    pub levels: Vec<Level>,
    res: HashMap<(usize, usize), Mat>,
    tr: HashMap<(usize, usize), Mat>,
}

impl MackeyFunctor {
    /// Builds from maps on covering pairs `(T, K)`, `T` maximal in `K`.
    ///
    /// `res_cov(t, k)` maps level `k` to level `t`; `tr_cov(t, k)` maps level `t` to level `k`.
    pub fn from_covering(
        lattice: Arc<Lattice>,
        levels: Vec<Level>,
        mut res_cov: impl FnMut(usize, usize) -> Result<Mat>,
        mut tr_cov: impl FnMut(usize, usize) -> Result<Mat>,
    ) -> Result<Self> {
        let n = lattice.len();
        let mut res: HashMap<(usize, usize), Mat> = HashMap::new();
        let mut tr: HashMap<(usize, usize), Mat> = HashMap::new();
        for k in 0..n {
            for &m in lattice.maximal(k) {
                let r = res_cov(m, k)?;
                let t = tr_cov(m, k)?;
                check_shape(&r, levels[m].dim(), levels[k].dim(), "res")?;
                check_shape(&t, levels[k].dim(), levels[m].dim(), "tr")?;
                res.insert((m, k), r.reduced(&levels[m].orders));
                tr.insert((m, k), t.reduced(&levels[k].orders));
            }
        }
        // subgroups are sorted by order, so every chain below k is already filled in
        for k in 0..n {
            for &t in lattice.below(k) {
                if t == k || res.contains_key(&(t, k)) {
                    continue;
                }
                let m = *lattice.maximal(k).iter().find(|&&m| lattice.contains(m, t)).expect("chain exists");
                let r = res[&(t, m)].mul(&res[&(m, k)]).reduced(&levels[t].orders);
                let s = tr[&(m, k)].mul(&tr[&(t, m)]).reduced(&levels[k].orders);
                res.insert((t, k), r);
                tr.insert((t, k), s);
            }
        }
        Ok(MackeyFunctor { lattice, levels, res, tr })
    }

    /// Builds from maps given directly for every proper pair.
    pub fn from_all(
        lattice: Arc<Lattice>,
        levels: Vec<Level>,
        mut res_fn: impl FnMut(usize, usize) -> Result<Mat>,
        mut tr_fn: impl FnMut(usize, usize) -> Result<Mat>,
    ) -> Result<Self> {
        let mut res = HashMap::new();
        let mut tr = HashMap::new();
        for k in 0..lattice.len() {
            for &t in lattice.below(k) {
                if t == k {
                    continue;
                }
                let r = res_fn(t, k)?;
                let s = tr_fn(t, k)?;
                check_shape(&r, levels[t].dim(), levels[k].dim(), "res")?;
                check_shape(&s, levels[k].dim(), levels[t].dim(), "tr")?;
                res.insert((t, k), r.reduced(&levels[t].orders));
                tr.insert((t, k), s.reduced(&levels[k].orders));
            }
        }
        Ok(MackeyFunctor { lattice, levels, res, tr })
    }

    pub fn zero(lattice: Arc<Lattice>, ring: Ring) -> Self {
        let levels = vec![Level::zero(ring); lattice.len()];
        Self::from_all(lattice, levels, |_, _| Ok(Mat::zeros(0, 0)), |_, _| Ok(Mat::zeros(0, 0))).unwrap()
    }

    pub fn ring(&self) -> Ring {
        self.levels.first().map_or(Ring::Integral, |l| l.ring)
    }

    pub fn level(&self, k: usize) -> &Level {
        &self.levels[k]
    }

    /// `Res_T^K`, from level `k` to level `t`.
    pub fn res(&self, t: usize, k: usize) -> Mat {
        if t == k {
            return Mat::identity(self.levels[k].dim());
        }
        self.res.get(&(t, k)).cloned().unwrap_or_else(|| panic!("subgroup {t} is not below {k}"))
    }

    /// `Tr_T^K`, from level `t` to level `k`.
    pub fn tr(&self, t: usize, k: usize) -> Mat {
        if t == k {
            return Mat::identity(self.levels[k].dim());
        }
        self.tr.get(&(t, k)).cloned().unwrap_or_else(|| panic!("subgroup {t} is not below {k}"))
    }

    pub fn apply_res(&self, t: usize, k: usize, x: &[i64]) -> Vec<i64> {
        let mut v = self.res(t, k).mul(&Mat::from_rows(&x.iter().map(|&a| vec![a]).collect::<Vec<_>>())).column(0);
        reduce_vec(&mut v, &self.levels[t].orders);
        v
    }

    pub fn apply_tr(&self, t: usize, k: usize, x: &[i64]) -> Vec<i64> {
        let mut v = self.tr(t, k).mul(&Mat::from_rows(&x.iter().map(|&a| vec![a]).collect::<Vec<_>>())).column(0);
        reduce_vec(&mut v, &self.levels[k].orders);
        v
    }

    /// Overwrites one transfer entry (used to build negative controls).
    pub fn set_tr_entry(&mut self, t: usize, k: usize, r: usize, c: usize, v: i64) {
        self.tr.get_mut(&(t, k)).expect("proper pair").set(r, c, v);
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(|l| l.orders.iter().all(|&o| o == 1))
    }

    /// Levelwise invariant-factor forms.
    pub fn shapes(&self) -> Vec<FgAbGroup> {
        self.levels.iter().map(Level::fg).collect()
    }

    /// Drops summands of order 1 in every level.
    pub fn pruned(&self) -> MackeyFunctor {
        let keep: Vec<Vec<usize>> =
            self.levels.iter().map(|l| (0..l.dim()).filter(|&i| l.orders[i] != 1).collect()).collect();
        let levels = self
            .levels
            .iter()
            .zip(&keep)
            .map(|(l, ix)| {
                Level::new(l.ring, ix.iter().map(|&i| l.orders[i]).collect(), ix.iter().map(|&i| l.labels[i].clone()).collect())
            })
            .collect();
        let res = self.res.iter().map(|(&(t, k), m)| ((t, k), m.select_rows(&keep[t]).select_cols(&keep[k]))).collect();
        let tr = self.tr.iter().map(|(&(t, k), m)| ((t, k), m.select_rows(&keep[k]).select_cols(&keep[t]))).collect();
        MackeyFunctor { lattice: self.lattice.clone(), levels, res, tr }
    }

    /// Levelwise direct sum.
    pub fn direct_sum(&self, other: &MackeyFunctor) -> Result<MackeyFunctor> {
        if self.lattice.group != other.lattice.group {
            return Err(KhomError::Invalid("direct sum of functors over different groups".into()));
        }
        let mut levels = Vec::new();
        for (a, b) in self.levels.iter().zip(&other.levels) {
            let ring = if a.dim() == 0 {
                b.ring
            } else if b.dim() == 0 || a.ring == b.ring {
                a.ring
            } else {
                return Err(KhomError::Invalid("direct sum over different rings".into()));
            };
            let mut orders = a.orders.clone();
            orders.extend(&b.orders);
            let mut labels = a.labels.clone();
            labels.extend(b.labels.iter().cloned());
            levels.push(Level::new(ring, orders, labels));
        }
        let res = self.res.iter().map(|(key, m)| (*key, Mat::block_diag(&[m, &other.res[key]]))).collect();
        let tr = self.tr.iter().map(|(key, m)| (*key, Mat::block_diag(&[m, &other.tr[key]]))).collect();
        Ok(MackeyFunctor { lattice: self.lattice.clone(), levels, res, tr })
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        let lat = &self.lattice;
        let names: Vec<String> = (0..lat.len()).map(|k| lat.sub(k).label()).collect();
        let mut levels = Vec::new();
        for (k, l) in self.levels.iter().enumerate() {
            levels.push(LevelJson {
                subgroup: names[k].clone(),
                order: lat.order(k),
                group: l.fg(),
                generators: l.labels.iter().zip(&l.orders).map(|(a, &o)| GenJson { label: a.clone(), order: o }).collect(),
            });
        }
        let mut res = BTreeMap::new();
        let mut tr = BTreeMap::new();
        for k in 0..lat.len() {
            for &t in lat.maximal(k) {
                let key = format!("{}<{}", names[t], names[k]);
                res.insert(key.clone(), self.res(t, k));
                tr.insert(key, self.tr(t, k));
            }
        }
        serde_json::json!({
            "group": lat.group.to_string(),
            "subgroups": names,
            "levels": levels,
            "res": res,
            "tr": tr,
        })
    }
}

#[derive(Serialize)]
struct GenJson {
    label: String,
    order: u64,
}

#[derive(Serialize)]
struct LevelJson {
    subgroup: String,
    order: u64,
    group: FgAbGroup,
    generators: Vec<GenJson>,
}

fn check_shape(m: &Mat, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() == rows && m.cols() == cols {
        Ok(())
    } else {
        Err(KhomError::Consistency(format!(
            "{what} matrix is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )))
    }
}

fn congruent(a: &Mat, b: &Mat, orders: &[u64]) -> bool {
    a.clone().reduced(orders) == b.clone().reduced(orders)
}

/// Outcome of [`check_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

/// Checks transitivity of res and tr and the double coset formula.
pub fn check_axioms(m: &MackeyFunctor) -> AxiomReport {
    let lat = &m.lattice;
    let n = lat.len();
    let mut checked = 0;
    let fail = |checked, s: String| AxiomReport { ok: false, checked, failure: Some(s) };
    for k in 0..n {
        for &mid in lat.below(k) {
            for &t in lat.below(mid) {
                if t == mid || mid == k {
                    continue;
                }
                checked += 1;
                let ot = &m.levels[t].orders;
                if !congruent(&m.res(t, k), &m.res(t, mid).mul(&m.res(mid, k)), ot) {
                    return fail(checked, format!("res transitivity fails at ({t}, {mid}, {k})"));
                }
                let ok = &m.levels[k].orders;
                if !congruent(&m.tr(t, k), &m.tr(mid, k).mul(&m.tr(t, mid)), ok) {
                    return fail(checked, format!("tr transitivity fails at ({t}, {mid}, {k})"));
                }
            }
        }
    }
    for k in 0..n {
        for &l in lat.below(k) {
            for &h in lat.below(k) {
                checked += 1;
                let lh = lat.join(l, h);
                let i = lat.meet(l, h);
                let lhs = m.res(l, k).mul(&m.tr(h, k));
                let rhs = m.tr(i, l).mul(&m.res(i, h)).scale(lat.index(lh, k) as i64);
                if !congruent(&lhs, &rhs, &m.levels[l].orders) {
                    return fail(checked, format!("double coset formula fails at (L={l}, H={h}, K={k})"));
                }
            }
        }
    }
    AxiomReport { ok: true, checked, failure: None }
}

/// External tensor of `mp` over `split.first` and `mn` over `split.second`.
pub fn external_tensor(mp: &MackeyFunctor, mn: &MackeyFunctor, split: &Split) -> Result<MackeyFunctor> {
    if mp.lattice.group != split.first || mn.lattice.group != split.second {
        return Err(KhomError::Invalid("functor groups do not match the split".into()));
    }
    if num_integer::gcd(split.first.order(), split.second.order()) != 1 {
        return Err(KhomError::Invalid("external tensor needs coprime orders".into()));
    }
    let lg = lattice(&split.group)?;
    let parts = split.part_table(&lg, &mp.lattice, &mn.lattice);
    let ring = tensor_ring(mp.ring(), mn.ring())?;
    let mut keep = Vec::with_capacity(lg.len());
    let mut levels = Vec::with_capacity(lg.len());
    for &(a, b) in &parts {
        let (la, lb) = (&mp.levels[a], &mn.levels[b]);
        let mut idx = Vec::new();
        let mut orders = Vec::new();
        let mut labels = Vec::new();
        for i in 0..la.dim() {
            for j in 0..lb.dim() {
                let o = tensor_order(la.orders[i], lb.orders[j]);
                if o != 1 {
                    idx.push(i * lb.dim() + j);
                    orders.push(o);
                    labels.push(format!("{}⊗{}", la.labels[i], lb.labels[j]));
                }
            }
        }
        keep.push(idx);
        levels.push(Level::new(ring, orders, labels));
    }
    MackeyFunctor::from_all(
        lg.clone(),
        levels,
        |t, k| {
            let ((ta, tb), (ka, kb)) = (parts[t], parts[k]);
            Ok(mp.res(ta, ka).kron(&mn.res(tb, kb)).select_rows(&keep[t]).select_cols(&keep[k]))
        },
        |t, k| {
            let ((ta, tb), (ka, kb)) = (parts[t], parts[k]);
            Ok(mp.tr(ta, ka).kron(&mn.tr(tb, kb)).select_rows(&keep[k]).select_cols(&keep[t]))
        },
    )
}

/// Outcome of [`compare`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Levelwise invariant factors agree.
    pub weak: bool,
    /// The given level maps form an isomorphism of Mackey functors (`None` without maps).
    pub strong: Option<bool>,
    pub detail: String,
}

/// Whether `phi: a → b` (both cyclic decompositions) is a well-defined surjection.
pub(crate) fn is_surjective_hom(phi: &Mat, a: &Level, b: &Level) -> bool {
    for (i, &o) in a.orders.iter().enumerate() {
        if o > 0 {
            let mut col = phi.column(i).iter().map(|&x| x * o as i64).collect::<Vec<_>>();
            reduce_vec(&mut col, &b.orders);
            if col.iter().any(|&x| x != 0) {
                return false;
            }
        }
    }
    let pres = Presentation::new(b.labels.clone(), b.orders.clone(), phi.to_int());
    let ring = match b.ring {
        Ring::ModM(_) => Ring::Integral,
        r => r,
    };
    cokernel(&pres, ring).group.is_zero()
}

/// Compares two functors levelwise, and with `iso` checks an explicit isomorphism.
pub fn compare(a: &MackeyFunctor, b: &MackeyFunctor, iso: Option<&[Mat]>) -> Result<Verdict> {
    if a.lattice.group != b.lattice.group {
        return Err(KhomError::Invalid("compared functors live over different groups".into()));
    }
    let n = a.lattice.len();
    let mut weak = true;
    let mut detail = String::new();
    for k in 0..n {
        let (x, y) = (a.levels[k].fg(), b.levels[k].fg());
        let same = (x.free_rank, &x.torsion) == (y.free_rank, &y.torsion) && (x.is_zero() || x.ring == y.ring);
        if !same {
            weak = false;
            detail = format!("level {k}: {x} vs {y}");
            break;
        }
    }
    let strong = match iso {
        None => None,
        Some(maps) => {
            if maps.len() != n {
                return Err(KhomError::Invalid("one iso matrix per subgroup is required".into()));
            }
            for k in 0..n {
                check_shape(&maps[k], b.levels[k].dim(), a.levels[k].dim(), "iso")?;
            }
            Some(weak && strong_check(a, b, maps, &mut detail))
        }
    };
    Ok(Verdict { weak, strong, detail })
}

fn strong_check(a: &MackeyFunctor, b: &MackeyFunctor, maps: &[Mat], detail: &mut String) -> bool {
    let lat = &a.lattice;
    for k in 0..lat.len() {
        if !is_surjective_hom(&maps[k], &a.levels[k], &b.levels[k]) {
            *detail = format!("level {k}: map is not an isomorphism");
            return false;
        }
    }
    for k in 0..lat.len() {
        for &t in lat.below(k) {
            if t == k {
                continue;
            }
            if !congruent(&maps[t].mul(&a.res(t, k)), &b.res(t, k).mul(&maps[k]), &b.levels[t].orders) {
                *detail = format!("res({t},{k}) does not commute");
                return false;
            }
            if !congruent(&maps[k].mul(&a.tr(t, k)), &b.tr(t, k).mul(&maps[t]), &b.levels[k].orders) {
                *detail = format!("tr({t},{k}) does not commute");
                return false;
            }
        }
    }
    true
}

/// Identity level maps, for comparing a functor with a copy of itself.
pub fn identity_iso(m: &MackeyFunctor) -> Vec<Mat> {
    m.levels.iter().map(|l| Mat::identity(l.dim())).collect()
}

/// Closed-form coordinates on a presented level.
#[derive(Clone, Debug)]
pub struct Coords {
    pub orders: Vec<u64>,
    pub labels: Vec<String>,
    /// Coordinates of each generator (coords × gens).
    pub proj: Mat,
    /// Generator word of each coordinate (gens × coords).
    pub section: Mat,
}

/// A Mackey functor given by generators and relations at each level,
/// with structure maps on generators for covering pairs.
#[derive(Clone, Debug)]
pub struct Presented {
    pub lattice: Arc<Lattice>,
    pub levels: Vec<Presentation>,
    pub res: HashMap<(usize, usize), Mat>,
    pub tr: HashMap<(usize, usize), Mat>,
    pub closed: Vec<Option<Coords>>,
}

impl Presented {
    pub fn new(lattice: Arc<Lattice>, levels: Vec<Presentation>) -> Self {
        let n = levels.len();
        Presented { lattice, levels, res: HashMap::new(), tr: HashMap::new(), closed: vec![None; n] }
    }

    /// Sets generator-level maps on all covering pairs from closures.
    pub fn with_maps(
        mut self,
        mut res: impl FnMut(usize, usize) -> Result<Mat>,
        mut tr: impl FnMut(usize, usize) -> Result<Mat>,
    ) -> Result<Self> {
        for k in 0..self.lattice.len() {
            for &m in self.lattice.maximal(k) {
                self.res.insert((m, k), res(m, k)?);
                self.tr.insert((m, k), tr(m, k)?);
            }
        }
        Ok(self)
    }

    /// Passes to coordinates and induced maps, checking that relations are preserved.
    pub fn finalize(&self, ring: Ring) -> Result<(MackeyFunctor, Vec<Coords>)> {
        let mut coords = Vec::with_capacity(self.levels.len());
        for (k, p) in self.levels.iter().enumerate() {
            let c = match &self.closed[k] {
                Some(c) => c.clone(),
                None => {
                    let ck = cokernel(p, ring);
                    Coords {
                        orders: ck.orders.clone(),
                        labels: ck.group.labels.clone(),
                        proj: ck.proj.to_mat()?,
                        section: ck.section.to_mat()?,
                    }
                }
            };
            coords.push(c);
        }
        // relations with entries past i64 (high Adams degrees) are checked over BigInt
        let rels: Vec<(IntMatrix, Option<Mat>)> = self
            .levels
            .iter()
            .map(|p| {
                let full = p.full_relations();
                let small = full.to_mat().ok();
                (full, small)
            })
            .collect();
        let levels: Vec<Level> =
            coords.iter().map(|c| Level::new(ring, c.orders.clone(), c.labels.clone())).collect();
        let induced = |src: usize, dst: usize, m: &Mat, what: &str| -> Result<Mat> {
            let pm = coords[dst].proj.mul(m);
            let preserved = match &rels[src] {
                (_, Some(small)) => pm.mul(small).reduced(&coords[dst].orders).is_zero(),
                (full, None) => vanishes_mod(&pm.to_int().mul(full), &coords[dst].orders),
            };
            if !preserved {
                return Err(KhomError::Consistency(format!("{what} ({src} -> {dst}) does not preserve relations")));
            }
            Ok(pm.mul(&coords[src].section).reduced(&coords[dst].orders))
        };
        let mf = MackeyFunctor::from_covering(
            self.lattice.clone(),
            levels,
            |t, k| induced(k, t, &self.res[&(t, k)], "res"),
            |t, k| induced(t, k, &self.tr[&(t, k)], "tr"),
        )?;
        Ok((mf, coords))
    }
}

/// Whether row `i` of `m` vanishes modulo `orders[i]` (`0` = exactly).
fn vanishes_mod(m: &IntMatrix, orders: &[u64]) -> bool {
    (0..m.rows()).all(|i| {
        let o = num_bigint::BigInt::from(orders[i]);
        (0..m.cols()).all(|j| if orders[i] == 0 { m.get(i, j).is_zero() } else { (m.get(i, j) % &o).is_zero() })
    })
}

/// Relation matrix with no columns, for levels presented only by generator orders.
pub fn no_relations(n: usize) -> IntMatrix {
    IntMatrix::zeros(n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroups::FinAbGroup;

    /// Constant functor `Z` with res = 1 and tr = index.
    fn constant(g: &str) -> MackeyFunctor {
        let lat = lattice(&FinAbGroup::parse(g).unwrap()).unwrap();
        let levels = vec![Level::free(Ring::Integral, vec!["1".into()]); lat.len()];
        let l2 = lat.clone();
        MackeyFunctor::from_covering(
            lat,
            levels,
            |_, _| Ok(Mat::identity(1)),
            move |t, k| Ok(Mat::from_rows(&[vec![l2.index(t, k) as i64]])),
        )
        .unwrap()
    }

    #[test]
    fn constant_functor_axioms() {
        for g in ["e", "C2", "C4", "C2xC2", "C6"] {
            assert!(check_axioms(&constant(g)).ok, "{g}");
        }
    }

    #[test]
    fn corrupted_transfer_is_reported() {
        let mut m = constant("C2xC2");
        m.set_tr_entry(0, 4, 0, 0, 7);
        let r = check_axioms(&m);
        assert!(!r.ok);
        assert!(r.failure.is_some());
    }

    #[test]
    fn compare_identity_and_negative_control() {
        let m = constant("C2xC2");
        let v = compare(&m, &m, Some(&identity_iso(&m))).unwrap();
        assert!(v.weak && v.strong == Some(true));
        let mut bad = m.clone();
        bad.set_tr_entry(0, 1, 0, 0, 5);
        let v = compare(&m, &bad, Some(&identity_iso(&m))).unwrap();
        assert!(v.weak && v.strong == Some(false));
    }

    #[test]
    fn tensor_with_trivial_group_is_identity() {
        let m = constant("C4");
        let g = FinAbGroup::parse("C4").unwrap();
        let split = Split::new(&g, &[2]);
        let one = constant("e");
        let t = external_tensor(&m, &one, &split).unwrap();
        let v = compare(&m, &t, Some(&identity_iso(&m))).unwrap();
        assert_eq!(v.strong, Some(true));
        assert!(check_axioms(&t).ok);
    }

    #[test]
    fn presented_finalize_z_mod_relation() {
        // level Z^2 / (2, -2): coordinates Z + Z/2
        let lat = lattice(&FinAbGroup::trivial()).unwrap();
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![0, 0], IntMatrix::from_rows(&[vec![2], vec![-2]]));
        let (m, _) = Presented::new(lat, vec![p]).finalize(Ring::Integral).unwrap();
        let g = m.levels[0].fg();
        assert_eq!((g.free_rank, g.torsion.clone()), (1, vec![2]));
    }

    #[test]
    fn json_keys_use_pairs() {
        let j = constant("C2").to_json();
        assert!(j["res"].as_object().unwrap().keys().any(|k| k.contains('<')));
    }
}
