//! Exact integer linear algebra: dense matrices, Smith and Hermite normal forms,
//! integer kernels, cokernels of presentations and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{KhomError, Result};

/// Dense matrix of arbitrary precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major `i64` entries.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        IntMatrix { rows, cols, data: entries.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (`nrows` fixes the height).
    pub fn from_cols(nrows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column height mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    /// Selects the given columns in order.
    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }

    /// Selects the given rows in order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                m.data[i * self.cols + c] = self.get(r, c).clone();
            }
        }
        m
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                m.data[r * cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        m
    }

    /// Converts to an `i64` matrix, failing on overflow.
    pub fn to_mat(&self) -> Result<Mat> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(x.to_i64().ok_or_else(|| {
                KhomError::Consistency(format!("matrix entry {x} does not fit in i64"))
            })?);
        }
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self.data[r * self.cols + c];
            self.data[r * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + c];
            self.data[r * self.cols + c] = v;
        }
    }
}

/// Result of a Smith normal form computation: `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub diag: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen as the smallest nonzero absolute value in the active
/// block, ties broken by row-major position.
pub fn snf(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut diag = Vec::new();

    // row op helpers keep u_inv in sync: U' = E U, U'^{-1} = U^{-1} E^{-1}
    let row_add = |a: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, dst: usize, src: usize, k: &BigInt| {
        a.add_row(dst, src, k);
        u.add_row(dst, src, k);
        ui.add_col(src, dst, &(-k));
    };
    let row_swap = |a: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, x: usize, y: usize| {
        a.swap_rows(x, y);
        u.swap_rows(x, y);
        ui.swap_cols(x, y);
    };

    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero pivot in the active block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = a.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        row_swap(&mut a, &mut u, &mut u_inv, t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t) / &p;
                    row_add(&mut a, &mut u, &mut u_inv, i, t, &(-q));
                    if !a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j) / &p;
                    a.add_col(j, t, &(-&q));
                    v.add_col(j, t, &(-q));
                    if !a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..r {
                    let x = a.get(i, t);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..c {
                    let x = a.get(t, j);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    row_swap(&mut a, &mut u, &mut u_inv, t, best.0);
                }
                if best.1 != t {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the remaining block
            let mut bad = None;
            'outer: for i in t + 1..r {
                for j in t + 1..c {
                    if !(a.get(i, j) % &p).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, &BigInt::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        diag.push(a.get(t, t).clone());
        t += 1;
    }
    Snf { u, u_inv, d: a, v, diag }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
///
/// Returns the nonzero rows: echelon form, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`.
pub fn hnf_rows(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (r, c) = (a.rows, a.cols);
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below `row`
            let mut best: Option<usize> = None;
            for i in row..r {
                let x = a.get(i, col);
                if !x.is_zero() && best.is_none_or(|b| x.abs() < a.get(b, col).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(row, b);
            let p = a.get(row, col).clone();
            let mut clean = true;
            for i in row + 1..r {
                if !a.get(i, col).is_zero() {
                    let q = a.get(i, col) / &p;
                    a.add_row(i, row, &(-q));
                    if !a.get(i, col).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if row < r && !a.get(row, col).is_zero() {
            if a.get(row, col).is_negative() {
                a.negate_row(row);
            }
            let p = a.get(row, col).clone();
            for i in 0..row {
                let q = a.get(i, col).div_floor(&p);
                a.add_row(i, row, &(-q));
            }
            row += 1;
        }
    }
    a.select_rows(&(0..row).collect::<Vec<_>>())
}

/// Canonical basis (as columns) of the lattice spanned by the columns of `m`.
pub fn hnf_cols(m: &IntMatrix) -> IntMatrix {
    hnf_rows(&m.transpose()).transpose()
}

/// Basis of the integer kernel `{x : m x = 0}` as columns, in canonical form.
///
/// The kernel of an integer matrix is saturated in the domain.
pub fn kernel_lattice(m: &IntMatrix) -> IntMatrix {
    let s = snf(m);
    let rank = s.rank();
    let idx: Vec<usize> = (rank..m.cols).collect();
    let basis = s.v.select_cols(&idx);
    let h = hnf_cols(&basis);
    if h.cols == 0 {
        IntMatrix::zeros(m.cols, 0)
    } else {
        h
    }
}

/// Solves `basis * x = v` over the integers; `None` if `v` is not in the lattice.
pub fn solve_lattice(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.rows, v.len(), "vector length mismatch");
    let s = snf(basis);
    let col = IntMatrix { rows: v.len(), cols: 1, data: v.to_vec() };
    let w = s.u.mul(&col);
    let mut y = vec![BigInt::zero(); basis.cols];
    for i in 0..basis.rows {
        let wi = w.get(i, 0);
        if i < s.rank() {
            let (q, rem) = wi.div_rem(&s.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !wi.is_zero() {
            return None;
        }
    }
    let ycol = IntMatrix { rows: basis.cols, cols: 1, data: y };
    Some(s.v.mul(&ycol).column(0))
}

/// Rank of the given vectors over `F_2`.
pub fn f2_rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<u8>> =
        vectors.iter().map(|v| v.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] == 1) {
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i][col] == 1 {
                    for k in 0..width {
                        rows[i][k] ^= rows[rank][k];
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Small dense `i64` matrix used for Mackey structure maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        let x = &mut self.data[r * self.cols + c];
        *x = x.checked_add(v).expect("matrix entry overflow");
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_i64(self.rows, self.cols, &self.data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product with exact intermediate arithmetic.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc += self.data[i * self.cols + k] as i128 * other.data[k * other.cols + j] as i128;
                }
                out.data[i * other.cols + j] = i64::try_from(acc).expect("matrix product overflow");
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// Reduces each row modulo its generator order (`0` means free, no reduction).
    pub fn reduce_rows(&mut self, orders: &[u64]) {
        assert_eq!(orders.len(), self.rows, "order list does not match rows");
        for (r, &o) in orders.iter().enumerate() {
            if o > 0 {
                for c in 0..self.cols {
                    let x = &mut self.data[r * self.cols + c];
                    *x = x.rem_euclid(o as i64);
                }
            }
        }
    }

    pub fn reduced(mut self, orders: &[u64]) -> Mat {
        self.reduce_rows(orders);
        self
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = a.checked_mul(other.get(k, l)).expect("kronecker overflow");
                        out.set(i * other.rows + k, j * other.cols + l, v);
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                m.set(i, c, self.get(r, c));
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    /// Block diagonal sum.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

/// Coefficient ring tag of a finitely generated abelian group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integral,
    PComplete(u64),
    ModM(u64),
}

impl Ring {
    pub fn tag(&self) -> String {
        match self {
            Ring::Integral => "Z".to_string(),
            Ring::PComplete(p) => format!("Zp:{p}"),
            Ring::ModM(_) => String::new(),
        }
    }

    /// Name of the free cyclic summand in this ring.
    pub fn free_name(&self) -> String {
        match self {
            Ring::Integral => "Z".to_string(),
            Ring::PComplete(p) => format!("Z_{p}"),
            Ring::ModM(m) => format!("Z/{m}"),
        }
    }
}

/// A finitely generated abelian group in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    pub ring: Ring,
    pub free_rank: usize,
    /// Invariant factors `d_1 | d_2 | ...`, each at least 2.
    pub torsion: Vec<u64>,
    pub labels: Vec<String>,
}

#[derive(Serialize)]
struct FgJson<'a> {
    ring: String,
    free_rank: usize,
    torsion: &'a [u64],
    labels: &'a [String],
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FgJson { ring: self.ring.tag(), free_rank: self.free_rank, torsion: &self.torsion, labels: &self.labels }
            .serialize(s)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            let z = self.ring.free_name();
            parts.push(if self.free_rank == 1 { z } else { format!("{z}^{}", self.free_rank) });
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            let n = j - i;
            parts.push(if n == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{n}") });
            i = j;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FgAbGroup {
    pub fn zero(ring: Ring) -> Self {
        FgAbGroup { ring, free_rank: 0, torsion: vec![], labels: vec![] }
    }

    /// Builds the invariant-factor form of `⊕ Z/o_i` (`o_i = 0` is a free summand).
    pub fn from_orders(ring: Ring, orders: &[u64]) -> Self {
        let free_rank = orders.iter().filter(|&&o| o == 0).count();
        let torsion = invariant_factors(orders.iter().copied().filter(|&o| o > 1));
        let n = free_rank + torsion.len();
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        FgAbGroup { ring, free_rank, torsion, labels }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u128 {
        self.torsion.iter().map(|&d| d as u128).product()
    }

    /// Same group without labels, for comparisons.
    pub fn shape(&self) -> (Ring, usize, Vec<u64>) {
        (self.ring, self.free_rank, self.torsion.clone())
    }
}

/// Invariant factors of a direct sum of cyclic groups of the given finite orders.
pub fn invariant_factors(orders: impl IntoIterator<Item = u64>) -> Vec<u64> {
    // collect prime-power parts per prime, then stack them into a divisibility chain
    let mut per_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for o in orders {
        for (p, e) in factorize(o) {
            per_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = per_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for powers in per_prime.values_mut() {
        powers.sort_unstable();
        let off = len - powers.len();
        for (i, q) in powers.iter().enumerate() {
            out[off + i] *= q;
        }
    }
    out
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(p: u64, n: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    Some(v)
}

/// `p`-adic valuation of a nonzero `i64`.
pub fn val_i64(p: u64, n: i64) -> Option<u32> {
    valuation(p, &BigInt::from(n))
}

/// Splits `n = p^a * m` with `p ∤ m`.
pub fn split_prime(n: u64, p: u64) -> (u64, u64) {
    let mut pa = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        pa *= p;
    }
    (pa, m)
}

/// Inverse of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn mod_inv(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = (a as i128).rem_euclid(m as i128).extended_gcd(&(m as i128));
    assert_eq!(e.gcd, 1, "{a} is not invertible modulo {m}");
    e.x.rem_euclid(m as i128) as i64
}

/// `a^e mod m` for `m ≥ 1`.
pub fn mod_pow(a: i64, mut e: u64, m: i64) -> i64 {
    let m = m as i128;
    let mut base = (a as i128).rem_euclid(m);
    let mut acc: i128 = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as i64
}

/// A presentation: generators (optionally with a ModM order each) and relation columns.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub labels: Vec<String>,
    /// Order imposed on each generator (`0` = none).
    pub gen_orders: Vec<u64>,
    /// Relations as columns in the generators.
    pub relations: IntMatrix,
}

impl Presentation {
    pub fn new(labels: Vec<String>, gen_orders: Vec<u64>, relations: IntMatrix) -> Self {
        assert_eq!(labels.len(), gen_orders.len(), "label/order count mismatch");
        assert_eq!(relations.rows(), labels.len(), "relation height mismatch");
        Presentation { labels, gen_orders, relations }
    }

    /// Presentation with no relations beyond generator orders.
    pub fn free(labels: Vec<String>, gen_orders: Vec<u64>) -> Self {
        let n = labels.len();
        Self::new(labels, gen_orders, IntMatrix::zeros(n, 0))
    }

    /// Relation matrix augmented with the generator order relations.
    pub fn full_relations(&self) -> IntMatrix {
        let n = self.labels.len();
        let extra: Vec<usize> = (0..n).filter(|&i| self.gen_orders[i] > 0).collect();
        let mut ord = IntMatrix::zeros(n, extra.len());
        for (j, &i) in extra.iter().enumerate() {
            ord.set(i, j, BigInt::from(self.gen_orders[i]));
        }
        self.relations.hcat(&ord)
    }
}

/// Largest power of `p` dividing a nonzero `d`.
fn p_power_part(d: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut d = d.abs();
    let mut out = 1u64;
    while !d.is_zero() && (&d % &pb).is_zero() {
        d /= &pb;
        out = out.checked_mul(p).expect("p-part exceeds u64");
    }
    out
}

/// Canonical coordinates on the cokernel of a presentation.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FgAbGroup,
    /// Order of each canonical coordinate (`0` = free), free coordinates first.
    pub orders: Vec<u64>,
    /// Canonical coordinates of each generator (coords × gens).
    pub proj: IntMatrix,
    /// A generator word for each canonical coordinate (gens × coords).
    pub section: IntMatrix,
}

/// Cokernel of a presentation in invariant-factor form, with projection and section.
///
/// Under `Ring::PComplete(p)` only the `p`-primary torsion is kept and free
/// summands are read as `Z_p`.
pub fn cokernel(p: &Presentation, ring: Ring) -> Cokernel {
    let rel = p.full_relations();
    // same column span, at most one column per generator
    let rel = if rel.cols() > rel.rows() { hnf_cols(&rel) } else { rel };
    let rel = if rel.cols() == 0 { IntMatrix::zeros(p.labels.len(), 0) } else { rel };
    let n = p.labels.len();
    let s = snf(&rel);
    let rank = s.rank();
    let mut coords: Vec<(usize, u64, BigInt)> = Vec::new(); // (index, order, section multiplier)
    for i in rank..n {
        coords.push((i, 0, BigInt::one()));
    }
    for i in 0..rank {
        let d = &s.diag[i];
        match ring {
            // the prime-to-p part is a unit in Z_p, so the unimodular column is already a section
            Ring::PComplete(q) => {
                let pa = p_power_part(d, q);
                if pa > 1 {
                    coords.push((i, pa, BigInt::one()));
                }
            }
            _ => {
                let d = d.to_u64().expect("invariant factor exceeds u64");
                if d != 1 {
                    coords.push((i, d, BigInt::one()));
                }
            }
        }
    }
    let mut proj = IntMatrix::zeros(coords.len(), n);
    let mut section = IntMatrix::zeros(n, coords.len());
    for (k, (i, o, e)) in coords.iter().enumerate() {
        for g in 0..n {
            let mut x = s.u.get(*i, g).clone();
            if *o > 0 {
                x = x.mod_floor(&BigInt::from(*o));
            }
            proj.set(k, g, x);
            section.set(g, k, s.u_inv.get(g, *i) * e);
        }
    }
    let orders: Vec<u64> = coords.iter().map(|c| c.1).collect();
    let labels = coords.iter().map(|(i, _, _)| word_label(&s.u_inv, *i, &p.labels)).collect();
    let mut group = FgAbGroup::from_orders(ring, &orders);
    group.labels = labels;
    Cokernel { group, orders, proj, section }
}

/// Human-readable label for a section column: a signed combination of generator labels.
pub fn word_label(section: &IntMatrix, col: usize, labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (g, l) in labels.iter().enumerate() {
        let x = section.get(g, col);
        if x.is_zero() {
            continue;
        }
        let term = if x.is_one() {
            l.clone()
        } else if *x == BigInt::from(-1) {
            format!("-{l}")
        } else {
            format!("{x}*{l}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

/// `p`-primary part of an integral group: free summands become `Z_p`.
pub fn p_part(a: &FgAbGroup, p: u64) -> Result<FgAbGroup> {
    if a.ring != Ring::Integral {
        return Err(KhomError::Invalid(format!("p_part expects an integral group, got {:?}", a.ring)));
    }
    let mut labels = a.labels[..a.free_rank].to_vec();
    let mut torsion = Vec::new();
    for (i, &d) in a.torsion.iter().enumerate() {
        let (pa, _) = split_prime(d, p);
        if pa > 1 {
            torsion.push(pa);
            labels.push(a.labels[a.free_rank + i].clone());
        }
    }
    // p-parts of a divisibility chain still form a chain
    Ok(FgAbGroup { ring: Ring::PComplete(p), free_rank: a.free_rank, torsion, labels })
}

/// Ring of a tensor product, if the pair is compatible.
pub fn tensor_ring(a: Ring, b: Ring) -> Result<Ring> {
    match (a, b) {
        (Ring::Integral, Ring::Integral) => Ok(Ring::Integral),
        (Ring::PComplete(p), Ring::Integral) | (Ring::Integral, Ring::PComplete(p)) => Ok(Ring::PComplete(p)),
        (Ring::PComplete(p), Ring::PComplete(q)) if p == q => Ok(Ring::PComplete(p)),
        _ => Err(KhomError::Invalid(format!("cannot tensor groups over {a:?} and {b:?}"))),
    }
}

/// Order of `Z/a ⊗ Z/b` with `0` standing for `Z`; `1` means the summand vanishes.
pub fn tensor_order(a: u64, b: u64) -> u64 {
    match (a, b) {
        (0, 0) => 0,
        (0, x) | (x, 0) => x,
        (x, y) => x.gcd(&y),
    }
}

/// Tensor product of finitely generated abelian groups with pair labels.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> Result<FgAbGroup> {
    let ring = tensor_ring(a.ring, b.ring)?;
    let oa: Vec<u64> = std::iter::repeat_n(0, a.free_rank).chain(a.torsion.iter().copied()).collect();
    let ob: Vec<u64> = std::iter::repeat_n(0, b.free_rank).chain(b.torsion.iter().copied()).collect();
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    for (i, &x) in oa.iter().enumerate() {
        for (j, &y) in ob.iter().enumerate() {
            let o = tensor_order(x, y);
            if o != 1 {
                orders.push(o);
                labels.push(format!("{}⊗{}", a.labels[i], b.labels[j]));
            }
        }
    }
    let mut g = FgAbGroup::from_orders(ring, &orders);
    // pair labels survive when the pair orders already form the canonical chain
    let mut sorted = orders.clone();
    sorted.sort_by_key(|&o| if o == 0 { (0, 0) } else { (1, o) });
    if orders == sorted && g.torsion == orders.iter().copied().filter(|&o| o > 0).collect::<Vec<_>>() {
        g.labels = labels;
    }
    Ok(g)
}

/// Direct sum of groups over the same ring.
pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> Result<FgAbGroup> {
    if a.ring != b.ring {
        return Err(KhomError::Invalid("direct sum of groups over different rings".into()));
    }
    let orders: Vec<u64> = std::iter::repeat_n(0, a.free_rank + b.free_rank)
        .chain(a.torsion.iter().copied())
        .chain(b.torsion.iter().copied())
        .collect();
    Ok(FgAbGroup::from_orders(a.ring, &orders))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(m: &IntMatrix) -> Vec<i64> {
        snf(m).diag.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn snf_of_diag_2_3() {
        assert_eq!(diag_of(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
    }

    #[test]
    fn snf_zero_and_identity() {
        assert!(diag_of(&IntMatrix::zeros(3, 2)).is_empty());
        assert_eq!(diag_of(&IntMatrix::identity(4)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn snf_round_trip_and_inverse() {
        let m = IntMatrix::from_rows(&[vec![4, 6, 2], vec![8, -3, 5], vec![0, 12, 7]]);
        let s = snf(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(3));
    }

    #[test]
    fn kernel_of_one_one() {
        let k = kernel_lattice(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(v[0].clone() + v[1].clone(), BigInt::zero());
        assert_eq!(v[0].abs(), BigInt::one());
    }

    #[test]
    fn cokernel_examples() {
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![0, 0],
            IntMatrix::from_cols(2, &[vec![2, 0]]),
        );
        let c = cokernel(&p, Ring::Integral);
        assert_eq!((c.group.free_rank, c.group.torsion.clone()), (1, vec![2]));
        let p6 = Presentation::new(vec!["x".into()], vec![0], IntMatrix::from_cols(1, &[vec![6]]));
        let c6 = cokernel(&p6, Ring::Integral);
        assert_eq!(p_part(&c6.group, 2).unwrap().torsion, vec![2]);
        let c6p = cokernel(&p6, Ring::PComplete(3));
        assert_eq!(c6p.orders, vec![3]);
    }

    #[test]
    fn p_part_examples() {
        let a = FgAbGroup::from_orders(Ring::Integral, &[0, 6]);
        let b = p_part(&a, 2).unwrap();
        assert_eq!((b.free_rank, b.torsion), (1, vec![2]));
        let z9 = FgAbGroup::from_orders(Ring::Integral, &[9]);
        assert!(p_part(&z9, 2).unwrap().is_zero());
    }

    #[test]
    fn tensor_examples() {
        let z2 = FgAbGroup::from_orders(Ring::Integral, &[0, 0]);
        assert_eq!(tensor(&z2, &z2).unwrap().free_rank, 4);
        let a = FgAbGroup::from_orders(Ring::Integral, &[4]);
        let b = FgAbGroup::from_orders(Ring::Integral, &[6]);
        assert_eq!(tensor(&a, &b).unwrap().torsion, vec![2]);
        let c = FgAbGroup::from_orders(Ring::PComplete(2), &[0, 2]);
        let t = tensor(&c, &z2).unwrap();
        assert_eq!((t.ring, t.free_rank, t.torsion), (Ring::PComplete(2), 2, vec![2, 2]));
        assert!(tensor(&FgAbGroup::zero(Ring::PComplete(2)), &FgAbGroup::zero(Ring::PComplete(3))).is_err());
    }

    #[test]
    fn invariant_factor_chain() {
        assert_eq!(invariant_factors([2, 4, 3]), vec![2, 12]);
        assert_eq!(invariant_factors([6, 10]), vec![2, 30]);
    }
}
