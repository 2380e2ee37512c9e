//! Exact sparse linear algebra: matrices, fraction-free rank, incremental
//! echelon bases with coordinate solving, and canonical subspaces.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::Scalar;

/// Sparse vector: column index to nonzero entry.
pub type SparseVec<S> = BTreeMap<usize, S>;

/// `v += c * w`, dropping entries that cancel.
pub fn add_scaled<S: Scalar>(v: &mut SparseVec<S>, c: &S, w: &SparseVec<S>) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in w {
        let t = c.clone() * x.clone();
        match v.get_mut(&k) {
            Some(e) => {
                let cur = std::mem::replace(e, S::zero());
                let sum = cur + t;
                if sum.is_zero() {
                    v.remove(&k);
                } else {
                    *e = sum;
                }
            }
            None => {
                v.insert(k, t);
            }
        }
    }
}

pub fn scale<S: Scalar>(v: &SparseVec<S>, c: &S) -> SparseVec<S> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&k, x)| (k, c.clone() * x.clone())).collect()
}

pub fn to_dense<S: Scalar>(v: &SparseVec<S>, len: usize) -> Vec<S> {
    let mut out = vec![S::zero(); len];
    for (&k, x) in v {
        out[k] = x.clone();
    }
    out
}

pub fn to_sparse<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<S>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].insert(i, S::one());
        }
        m
    }

    /// Builds a `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, x) in col {
                assert!(i < rows, "column entry out of range");
                m.data[i].insert(j, x.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<S>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&k| k < cols)));
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| to_sparse(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<S> {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i].get(&j).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: S) {
        let mut w = SparseVec::new();
        w.insert(j, x);
        add_scaled(&mut self.data[i], &S::one(), &w);
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, x) in row {
                t.data[j].insert(i, x.clone());
            }
        }
        t
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec<S> {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&j).map(|x| (i, x.clone())))
            .collect()
    }

    /// `self * v`.
    pub fn apply(&self, v: &SparseVec<S>) -> SparseVec<S> {
        let mut out = SparseVec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = S::zero();
            for (j, x) in v {
                if let Some(a) = row.get(j) {
                    acc = acc + a.clone() * x.clone();
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix<S>) -> SparseMatrix<S> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, a) in row {
                add_scaled(&mut acc, a, &other.data[*k]);
            }
            out.data[i] = acc;
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix<S>) -> SparseMatrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, row) in other.data.iter().enumerate() {
            add_scaled(&mut out.data[i], &-S::one(), row);
        }
        out
    }

    /// `(row, col, value)` triples in row-major order, 0-based.
    pub fn triplets(&self) -> Vec<(usize, usize, S)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, x)| (i, j, x.clone())))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        self.data.iter().map(|r| to_dense(r, self.cols)).collect()
    }

    pub fn rank(&self) -> usize {
        rank(self.data.clone())
    }
}

/// Rank by fraction-free (Bareiss) elimination.
///
/// Every stored entry after step `k` is a `k+1` minor of the input, so
/// intermediate growth stays polynomial; the division by the previous pivot
/// is always exact.
pub fn rank<S: Scalar>(rows: Vec<SparseVec<S>>) -> usize {
    let mut rows: Vec<SparseVec<S>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut prev = S::one();
    let mut rank = 0;
    while !rows.is_empty() {
        // Sparsest row keeps fill-in down.
        let (pi, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .expect("nonempty");
        let pivot_row = rows.swap_remove(pi);
        let (&col, p) = pivot_row.iter().next().expect("nonzero row");
        let p = p.clone();
        let mut next = Vec::with_capacity(rows.len());
        for mut r in rows {
            let a = r.remove(&col).unwrap_or_else(S::zero);
            let mut updated = scale(&r, &p);
            if !a.is_zero() {
                let mut rest = pivot_row.clone();
                rest.remove(&col);
                add_scaled(&mut updated, &-a, &rest);
            }
            if !prev.is_one() {
                let inv = S::one() / prev.clone();
                for x in updated.values_mut() {
                    let cur = std::mem::replace(x, S::zero());
                    *x = cur * inv.clone();
                }
            }
            if !updated.is_empty() {
                next.push(updated);
            }
        }
        rows = next;
        prev = p;
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug)]
struct EchelonRow<S> {
    pivot: usize,
    vec: SparseVec<S>,
    combo: SparseVec<S>,
}

/// Incrementally built echelon basis of a span, remembering how each
/// reduced row is expressed through the accepted generators.
///
/// Reduced rows have pivot entry 1 and vanish at the pivots of all earlier
/// rows, so a single forward pass expresses any vector in the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis<S> {
    rows: Vec<EchelonRow<S>>,
    pivots: BTreeMap<usize, usize>,
}

impl<S: Scalar> Default for EchelonBasis<S> {
    fn default() -> Self {
        EchelonBasis {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> EchelonBasis<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of accepted generators.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Returns `(remainder, combo)` with `v = sum combo[i] * generator_i + remainder`.
    pub fn reduce(&self, v: &SparseVec<S>) -> (SparseVec<S>, SparseVec<S>) {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        for row in &self.rows {
            if let Some(c) = rem.get(&row.pivot).cloned() {
                add_scaled(&mut rem, &-c.clone(), &row.vec);
                add_scaled(&mut combo, &c, &row.combo);
            }
        }
        (rem, combo)
    }

    /// Accepts `v` as a new generator iff it is independent of the current ones.
    pub fn insert(&mut self, v: &SparseVec<S>) -> bool {
        let (rem, combo) = self.reduce(v);
        let Some((&pivot, p)) = rem.iter().next() else {
            return false;
        };
        let inv = S::one() / p.clone();
        let index = self.rows.len();
        let mut combo = scale(&combo, &-inv.clone());
        combo.insert(index, inv.clone());
        self.rows.push(EchelonRow {
            pivot,
            vec: scale(&rem, &inv),
            combo,
        });
        self.pivots.insert(pivot, index);
        true
    }

    /// Coordinates of `v` over the accepted generators, if `v` is in the span.
    pub fn solve(&self, v: &SparseVec<S>) -> Option<SparseVec<S>> {
        let (rem, combo) = self.reduce(v);
        rem.is_empty().then_some(combo)
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v).0.is_empty()
    }
}

/// A subspace of `S^ambient` held as its unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis<S> {
    ambient: usize,
    vectors: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SubspaceBasis<S> {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span_sparse(
            ambient,
            (0..ambient).map(|i| SparseVec::from([(i, S::one())])),
        )
    }

    pub fn span<I>(ambient: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = Vec<S>>,
    {
        Self::span_sparse(ambient, generators.into_iter().map(|v| to_sparse(&v)))
    }

    pub fn span_sparse<I>(ambient: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = SparseVec<S>>,
    {
        let rows = rref(generators);
        let pivots = rows.iter().map(|(p, _)| *p).collect();
        let vectors = rows.iter().map(|(_, v)| to_dense(v, ambient)).collect();
        SubspaceBasis {
            ambient,
            vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<S>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut out = v.to_vec();
        for (p, b) in self.pivots.iter().zip(&self.vectors) {
            let c = out[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    let cur = std::mem::replace(o, S::zero());
                    *o = cur - c.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis<S>) -> bool {
        self.ambient == other.ambient && self.vectors.iter().all(|v| other.contains(v))
    }

    /// Complement of the pivot columns, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

/// Fully reduced row echelon form of the span of `rows`: pairs of pivot
/// column and row, sorted by pivot, each with pivot entry 1.
pub fn rref<S: Scalar, I: IntoIterator<Item = SparseVec<S>>>(
    rows: I,
) -> Vec<(usize, SparseVec<S>)> {
    let mut basis: Vec<(usize, SparseVec<S>)> = Vec::new();
    for v in rows {
        let mut v = v;
        for (p, b) in &basis {
            if let Some(c) = v.get(p).cloned() {
                add_scaled(&mut v, &-c, b);
            }
        }
        let Some((&p, x)) = v.iter().next() else {
            continue;
        };
        let inv = S::one() / x.clone();
        let v = scale(&v, &inv);
        for (_, b) in basis.iter_mut() {
            if let Some(c) = b.get(&p).cloned() {
                add_scaled(b, &-c, &v);
            }
        }
        basis.push((p, v));
    }
    basis.sort_by_key(|(p, _)| *p);
    basis
}

/// Kernel of the linear map whose rows (constraints) are given.
pub fn nullspace<S: Scalar>(constraints: &[SparseVec<S>], ncols: usize) -> SubspaceBasis<S> {
    let echelon = rref(constraints.iter().cloned());
    let pivot_cols: Vec<usize> = echelon.iter().map(|(p, _)| *p).collect();
    let mut gens = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = SparseVec::new();
        v.insert(free, S::one());
        for (p, row) in &echelon {
            if let Some(x) = row.get(&free) {
                v.insert(*p, -x.clone());
            }
        }
        gens.push(v);
    }
    SubspaceBasis::span_sparse(ncols, gens)
}

/// Solves `x * [basis rows] = v` for dense vectors; `None` if `v` is outside the span.
pub fn express_in<S: Scalar>(basis: &[Vec<S>], v: &[S]) -> Option<Vec<S>> {
    let mut eb = EchelonBasis::new();
    for b in basis {
        eb.insert(&to_sparse(b));
    }
    let combo = eb.solve(&to_sparse(v))?;
    (eb.len() == basis.len()).then(|| to_dense(&combo, basis.len()))
}
