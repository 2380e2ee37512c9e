//! Loday–Pirashvili cochains with values in `K` and `g*`, anti-cyclic
//! cochains, their cohomology `HA^•`, and the classification of
//! ω-compatible abelian extensions by `g*`.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{
    canonical_omega, check_anti_invariance, double, ExtensionDatum, LeibnizAlgebra,
};
use crate::chain::{FreeLieTower, LieBasisSlice};
use crate::error::{Error, Result};
use crate::free_lie::{all_words, epsilon_word, word_index};
use crate::linalg::{
    add_scaled, nullspace, to_dense, to_sparse, SparseMatrix, SparseVec, SubspaceBasis,
};
use crate::scalar::Scalar;

/// An `(n+1)`-linear form on `g` (an element of `LP^n(g)`), stored densely
/// in the lexicographic word basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<S> {
    dim: usize,
    degree: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Cochain<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Cochain {
            dim,
            degree,
            coeffs: vec![S::zero(); dim.pow(degree as u32 + 1)],
        }
    }

    pub fn from_fn(dim: usize, degree: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        Cochain {
            dim,
            degree,
            coeffs: all_words(dim, degree + 1).map(|w| f(&w)).collect(),
        }
    }

    pub fn from_coeffs(dim: usize, degree: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != dim.pow(degree as u32 + 1) {
            return Err(Error::ShapeMismatch(format!(
                "degree-{degree} cochain on dimension {dim} needs {} values, got {}",
                dim.pow(degree as u32 + 1),
                coeffs.len()
            )));
        }
        Ok(Cochain {
            dim,
            degree,
            coeffs,
        })
    }

    /// Builds from `(0-based indices, value)` entries; repeated entries are rejected.
    pub fn from_entries(dim: usize, degree: usize, entries: &[(Vec<usize>, S)]) -> Result<Self> {
        let mut c = Self::zero(dim, degree);
        let mut seen = std::collections::BTreeSet::new();
        for (w, x) in entries {
            if w.len() != degree + 1 || w.iter().any(|&i| i >= dim) {
                return Err(Error::InvalidInput(format!(
                    "cochain entry {:?} is not a word of length {} over {dim} letters",
                    w.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    degree + 1
                )));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate cochain entry {:?}",
                    w.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            c.set(w, x.clone());
        }
        Ok(c)
    }

    pub fn from_vector(dim: usize, degree: usize, v: &SparseVec<S>) -> Self {
        Cochain {
            dim,
            degree,
            coeffs: to_dense(v, dim.pow(degree as u32 + 1)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n` for an `(n+1)`-linear form.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.degree + 1
    }

    pub fn value(&self, w: &[usize]) -> &S {
        &self.coeffs[word_index(w, self.dim)]
    }

    pub fn set(&mut self, w: &[usize], x: S) {
        assert_eq!(w.len(), self.arity(), "word length must equal the arity");
        let i = word_index(w, self.dim);
        self.coeffs[i] = x;
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn to_vector(&self) -> SparseVec<S> {
        to_sparse(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(&mut self, c: &S, other: &Cochain<S>) {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree));
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                let cur = std::mem::replace(a, S::zero());
                *a = cur + c.clone() * b.clone();
            }
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        out.add_scaled(c, self);
        out
    }

    /// `A ε {w}` = `Σ_t ε{w}_t A(t)`.
    pub fn on_bracket(&self, w: &[usize]) -> S {
        let mut acc = S::zero();
        for (t, c) in epsilon_word::<S>(w).terms() {
            acc = acc + c.clone() * self.value(&t.0).clone();
        }
        acc
    }

    /// Nonzero entries with 0-based index words, lexicographic.
    pub fn entries(&self) -> Vec<(Vec<usize>, S)> {
        all_words(self.dim, self.arity())
            .zip(&self.coeffs)
            .filter(|(_, x)| !x.is_zero())
            .map(|(w, x)| (w, x.clone()))
            .collect()
    }

    /// `{"degree": n, "coeffs": [[[1-based indices], "p/q"], ..]}`.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .entries()
            .into_iter()
            .map(|(w, x)| json!([w.iter().map(|i| i + 1).collect::<Vec<_>>(), x.to_string()]))
            .collect();
        json!({"degree": self.degree, "coeffs": coeffs})
    }
}

/// An `n`-linear map `g^{⊗n} → g*` (an element of `LP^n(g, g*)`); the value
/// on a word is a vector of `m` coordinates in the dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DualValuedCochain<S> {
    dim: usize,
    degree: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> DualValuedCochain<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        DualValuedCochain {
            dim,
            degree,
            coeffs: vec![S::zero(); dim.pow(degree as u32 + 1)],
        }
    }

    /// The cochain sending the word `w` to `e^k` and every other word to zero.
    pub fn unit(dim: usize, degree: usize, w: &[usize], k: usize) -> Self {
        let mut f = Self::zero(dim, degree);
        f.set(w, k, S::one());
        f
    }

    /// All `m^n · m` unit cochains.
    pub fn basis(dim: usize, degree: usize) -> Vec<Self> {
        all_words(dim, degree)
            .flat_map(|w| (0..dim).map(move |k| Self::unit(dim, degree, &w, k)))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The number of arguments `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, w: &[usize]) -> &[S] {
        let i = word_index(w, self.dim) * self.dim;
        &self.coeffs[i..i + self.dim]
    }

    pub fn set(&mut self, w: &[usize], k: usize, x: S) {
        assert_eq!(w.len(), self.degree);
        let i = word_index(w, self.dim) * self.dim + k;
        self.coeffs[i] = x;
    }

    fn add_to(&mut self, w: &[usize], v: &[S], c: &S) {
        let i = word_index(w, self.dim) * self.dim;
        for (k, x) in v.iter().enumerate() {
            if !x.is_zero() {
                let cur = std::mem::replace(&mut self.coeffs[i + k], S::zero());
                self.coeffs[i + k] = cur + c.clone() * x.clone();
            }
        }
    }
}

fn check_dim<S: Scalar>(a: &LeibnizAlgebra<S>, dim: usize) -> Result<()> {
    if a.dim() != dim {
        return Err(Error::ShapeMismatch(format!(
            "cochain on dimension {dim}, algebra of dimension {}",
            a.dim()
        )));
    }
    Ok(())
}

/// `b_LP` as a list of `(source word index, coefficient)` for one target word.
fn blp_row<S: Scalar>(a: &LeibnizAlgebra<S>, w: &[usize]) -> Vec<(Vec<usize>, S)> {
    let len = w.len();
    let n = len - 2;
    let mut out = Vec::new();
    let (x, y) = (w[n], w[n + 1]);
    for (k, c) in a.bracket_basis(x, y).iter().chain(a.bracket_basis(y, x)) {
        let mut nw = w[..n].to_vec();
        nw.push(*k);
        out.push((nw, S::sign(n) * c.clone()));
    }
    for i in 0..n {
        for j in i + 1..len {
            for (k, c) in a.bracket_basis(w[i], w[j]) {
                let nw: Vec<usize> = (0..len)
                    .filter(|&p| p != i)
                    .map(|p| if p == j { *k } else { w[p] })
                    .collect();
                out.push((nw, S::sign(i) * c.clone()));
            }
        }
    }
    out
}

/// `(b_LP A)(x₁..x_{n+2}) = (−1)^n A(x₁..x_n, [x_{n+1},x_{n+2}]+[x_{n+2},x_{n+1}])
///  + Σ_{i<j, i<=n} (−1)^{i−1} A(.., x̂_i, .., [x_i,x_j], ..)`.
pub fn blp<S: Scalar>(a: &LeibnizAlgebra<S>, c: &Cochain<S>) -> Result<Cochain<S>> {
    check_dim(a, c.dim())?;
    Ok(Cochain::from_fn(c.dim(), c.degree() + 1, |w| {
        let mut acc = S::zero();
        for (src, x) in blp_row(a, w) {
            acc = acc + x * c.value(&src).clone();
        }
        acc
    }))
}

/// `b_LP: LP^n → LP^{n+1}` in word coordinates (`m^{n+2} x m^{n+1}`).
pub fn blp_matrix<S: Scalar>(a: &LeibnizAlgebra<S>, n: usize) -> SparseMatrix<S> {
    let m = a.dim();
    let rows = all_words(m, n + 2)
        .map(|w| {
            let mut row = SparseVec::new();
            for (src, x) in blp_row(a, &w) {
                add_scaled(
                    &mut row,
                    &x,
                    &SparseVec::from([(word_index(&src, m), S::one())]),
                );
            }
            row
        })
        .collect();
    SparseMatrix::from_rows(m.pow(n as u32 + 1), rows)
}

/// `⟨e_j, [a, e_x]⟩ = Σ_l a_l (c_{jx}^l + c_{xj}^l)` for `a ∈ g*`.
fn coad_right<S: Scalar>(alg: &LeibnizAlgebra<S>, a: &[S], x: usize) -> Vec<S> {
    let m = alg.dim();
    (0..m)
        .map(|j| {
            let mut acc = S::zero();
            for (l, c) in alg
                .bracket_basis(j, x)
                .iter()
                .chain(alg.bracket_basis(x, j))
            {
                acc = acc + c.clone() * a[*l].clone();
            }
            acc
        })
        .collect()
}

/// `⟨e_j, [e_x, a]⟩ = −Σ_l a_l c_{xj}^l` for `a ∈ g*`.
fn coad_left<S: Scalar>(alg: &LeibnizAlgebra<S>, x: usize, a: &[S]) -> Vec<S> {
    let m = alg.dim();
    (0..m)
        .map(|j| {
            let mut acc = S::zero();
            for (l, c) in alg.bracket_basis(x, j) {
                acc = acc - c.clone() * a[*l].clone();
            }
            acc
        })
        .collect()
}

/// The Loday–Pirashvili differential on `g*`-valued cochains:
///
/// `(d f)(x₁..x_{n+1}) = [f(x₁..x_n), x_{n+1}] + Σ_{i<=n} (−1)^{i+n} [x_i, f(.., x̂_i, ..)]
///  − Σ_{i<j<=n+1} (−1)^{i+n} f(.., x̂_i, .., [x_i,x_j], ..)`.
pub fn dlp<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    f: &DualValuedCochain<S>,
) -> Result<DualValuedCochain<S>> {
    check_dim(a, f.dim())?;
    let m = a.dim();
    let n = f.degree();
    let mut out = DualValuedCochain::zero(m, n + 1);
    let one = S::one();
    for w in all_words(m, n + 1) {
        out.add_to(&w, &coad_right(a, f.value(&w[..n]), w[n]), &one);
        for i in 0..n {
            let rest: Vec<usize> = (0..=n).filter(|&p| p != i).map(|p| w[p]).collect();
            out.add_to(&w, &coad_left(a, w[i], f.value(&rest)), &S::sign(i + 1 + n));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                for (k, c) in a.bracket_basis(w[i], w[j]) {
                    let nw: Vec<usize> = (0..=n)
                        .filter(|&p| p != i)
                        .map(|p| if p == j { *k } else { w[p] })
                        .collect();
                    let s = -S::sign(i + 1 + n) * c.clone();
                    let v = f.value(&nw).to_vec();
                    out.add_to(&w, &v, &s);
                }
            }
        }
    }
    Ok(out)
}

/// `f̃(x₁..x_{n+1}) = ω(f(x₁..x_n), x_{n+1})` with the canonical ω of `g ⊕ g*`.
pub fn tilde<S: Scalar>(f: &DualValuedCochain<S>) -> Result<Cochain<S>> {
    let m = f.dim();
    let omega = canonical_omega::<S>(m)?;
    let n = f.degree();
    Ok(Cochain::from_fn(m, n, |w| {
        let mut a = vec![S::zero(); 2 * m];
        for (k, x) in f.value(&w[..n]).iter().enumerate() {
            a[m + k] = x.clone();
        }
        let mut x = vec![S::zero(); 2 * m];
        x[w[n]] = S::one();
        omega.eval(&a, &x)
    }))
}

/// `(n+1) A(w) = A ε{w}` for every word `w`.
pub fn is_anti_cyclic<S: Scalar>(c: &Cochain<S>) -> bool {
    let k = S::from_int(c.arity() as i64);
    all_words(c.dim(), c.arity()).all(|w| k.clone() * c.value(&w).clone() == c.on_bracket(&w))
}

fn solve_constraints<S: Scalar>(ambient: usize, rows: Vec<SparseVec<S>>) -> SubspaceBasis<S> {
    nullspace(&rows, ambient)
}

fn constraint<S: Scalar>(m: usize, terms: &[(&[usize], i64)]) -> SparseVec<S> {
    let mut r = SparseVec::new();
    for (w, c) in terms {
        add_scaled(
            &mut r,
            &S::from_int(*c),
            &SparseVec::from([(word_index(w, m), S::one())]),
        );
    }
    r
}

/// Solution space of `(n+1) A = A ε` in `LP^n(g)` (ambient `m^{n+1}`).
pub fn anti_cyclic_space<S: Scalar>(m: usize, n: usize) -> SubspaceBasis<S> {
    let rows = all_words(m, n + 1)
        .map(|w| {
            let mut r = SparseVec::from([(word_index(&w, m), S::from_int(n as i64 + 1))]);
            let image = epsilon_word::<S>(&w).to_sparse_index(m);
            add_scaled(&mut r, &-S::one(), &image);
            r
        })
        .collect();
    solve_constraints(m.pow(n as u32 + 1), rows)
}

/// Symmetric bilinear forms.
pub fn symmetric_space<S: Scalar>(m: usize) -> SubspaceBasis<S> {
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            rows.push(constraint(m, &[(&[i, j], 1), (&[j, i], -1)]));
        }
    }
    solve_constraints(m * m, rows)
}

/// `H(x₁,x₂,x₃) = H(x₁,x₃,x₂)` and `∮ H(x₁,x₂,x₃) = 0`.
pub fn h1_h2_space<S: Scalar>(m: usize) -> SubspaceBasis<S> {
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                rows.push(constraint(m, &[(&[i, j, k], 1), (&[i, k, j], -1)]));
                rows.push(constraint(
                    m,
                    &[(&[i, j, k], 1), (&[k, i, j], 1), (&[j, k, i], 1)],
                ));
            }
        }
    }
    solve_constraints(m * m * m, rows)
}

/// The three degree-3 identities: symmetry in the last pair, `∮_{234} A = 0`,
/// and `A(1234) + A(2134) = −A(3412) − A(4312)`.
pub fn three_identity_space<S: Scalar>(m: usize) -> SubspaceBasis<S> {
    let mut rows = Vec::new();
    for w in all_words(m, 4) {
        let (a, b, c, d) = (w[0], w[1], w[2], w[3]);
        rows.push(constraint(m, &[(&[a, b, c, d], 1), (&[a, b, d, c], -1)]));
        rows.push(constraint(
            m,
            &[(&[a, b, c, d], 1), (&[a, c, d, b], 1), (&[a, d, b, c], 1)],
        ));
        rows.push(constraint(
            m,
            &[
                (&[a, b, c, d], 1),
                (&[b, a, c, d], 1),
                (&[c, d, a, b], 1),
                (&[d, c, a, b], 1),
            ],
        ));
    }
    solve_constraints(m.pow(4), rows)
}

/// Coordinates `table[w]` of `ε{w}` over a slice basis, for every word `w`.
#[derive(Clone, Debug)]
pub struct WordCoordinates<S> {
    degree: usize,
    dim: usize,
    basis_len: usize,
    table: Vec<SparseVec<S>>,
}

impl<S: Scalar> WordCoordinates<S> {
    pub fn new(slice: &LieBasisSlice<S>) -> Self {
        let m = slice.generators();
        let table = all_words(m, slice.degree())
            .map(|w| slice.coords_of_word(&w))
            .collect();
        WordCoordinates {
            degree: slice.degree(),
            dim: m,
            basis_len: slice.len(),
            table,
        }
    }

    pub fn basis_len(&self) -> usize {
        self.basis_len
    }

    /// `A(x₁..x_{n+1}) = A′{x₁..x_{n+1}}`.
    pub fn from_implicit(&self, implicit: &SparseVec<S>) -> Cochain<S> {
        let coeffs = self
            .table
            .iter()
            .map(|coords| {
                let mut acc = S::zero();
                for (b, x) in coords {
                    if let Some(v) = implicit.get(b) {
                        acc = acc + x.clone() * v.clone();
                    }
                }
                acc
            })
            .collect();
        Cochain {
            dim: self.dim,
            degree: self.degree - 1,
            coeffs,
        }
    }
}

/// `A′ = (1/(n+1)) A ε` on the basis words of the slice.
pub fn to_implicit<S: Scalar>(c: &Cochain<S>, slice: &LieBasisSlice<S>) -> Result<SparseVec<S>> {
    if slice.degree() != c.arity() || slice.generators() != c.dim() {
        return Err(Error::ShapeMismatch(
            "slice does not match the cochain".into(),
        ));
    }
    if !is_anti_cyclic(c) {
        return Err(Error::NotAntiCyclic);
    }
    let inv = S::one() / S::from_int(c.arity() as i64);
    Ok(slice
        .words()
        .iter()
        .enumerate()
        .filter_map(|(b, w)| {
            let x = c.on_bracket(&w.0) * inv.clone();
            (!x.is_zero()).then_some((b, x))
        })
        .collect())
}

pub fn from_implicit<S: Scalar>(implicit: &SparseVec<S>, slice: &LieBasisSlice<S>) -> Cochain<S> {
    WordCoordinates::new(slice).from_implicit(implicit)
}

/// `b_LP: ALP^n → ALP^{n+1}` in implicit coordinates, built by applying
/// `b_LP` to cochains and lowering the result.
#[derive(Clone, Debug)]
pub struct ImplicitDifferential<S> {
    pub degree: usize,
    /// `dim F^{n+2} x dim F^{n+1}`.
    pub matrix: SparseMatrix<S>,
    /// Every `b_LP A` was anti-cyclic.
    pub maps_into_alp: bool,
}

fn implicit_differential<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    tower: &FreeLieTower<S>,
    n: usize,
) -> Result<ImplicitDifferential<S>> {
    let source = WordCoordinates::new(tower.slice(n + 1));
    let target = tower.slice(n + 2);
    let mut maps_into_alp = true;
    let mut cols = Vec::with_capacity(source.basis_len());
    for b in 0..source.basis_len() {
        let c = source.from_implicit(&SparseVec::from([(b, S::one())]));
        let bc = blp(a, &c)?;
        match to_implicit(&bc, target) {
            Ok(v) => cols.push(v),
            Err(Error::NotAntiCyclic) => {
                maps_into_alp = false;
                cols.push(SparseVec::new());
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ImplicitDifferential {
        degree: n,
        matrix: SparseMatrix::from_columns(target.len(), &cols),
        maps_into_alp,
    })
}

/// Result of the subcomplex check in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlpSubcomplexReport {
    pub degree: usize,
    pub alp_dim: usize,
    /// `b_LP(ALP^n) ⊆ ALP^{n+1}`.
    pub maps_into_alp: bool,
    /// `(b_LP A)′ = A′ ∂` for every basis `A′`.
    pub transpose_of_boundary: bool,
    /// The implicit basis spans the `(n+1)A = Aε` solution space.
    pub matches_defining_equation: bool,
}

impl AlpSubcomplexReport {
    pub fn passed(&self) -> bool {
        self.maps_into_alp && self.transpose_of_boundary && self.matches_defining_equation
    }
}

pub fn alp_subcomplex_check<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    n: usize,
) -> Result<AlpSubcomplexReport> {
    a.require_leibniz()?;
    let cx = crate::chain::FreeLieComplex::new(a, n + 2);
    let diff = implicit_differential(a, cx.tower(), n)?;
    let boundary = cx.boundary(n + 2)?;
    let transpose_of_boundary = diff.matrix == boundary.matrix.transpose();
    let source = WordCoordinates::new(cx.slice(n + 1));
    let implicit_span = SubspaceBasis::span_sparse(
        a.dim().pow(n as u32 + 1),
        (0..source.basis_len()).map(|b| {
            source
                .from_implicit(&SparseVec::from([(b, S::one())]))
                .to_vector()
        }),
    );
    let matches_defining_equation = implicit_span == anti_cyclic_space(a.dim(), n);
    Ok(AlpSubcomplexReport {
        degree: n,
        alp_dim: source.basis_len(),
        maps_into_alp: diff.maps_into_alp,
        transpose_of_boundary,
        matches_defining_equation,
    })
}

/// `dim ALP^n`, `rank b_LP`, and `dim HA^n` for `n = 0..N−2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub max_degree: usize,
    /// `dim ALP^n = dim F^{n+1}` for `n = 0..N−1`.
    pub alp_dims: Vec<usize>,
    /// `rank(b_LP: ALP^n → ALP^{n+1})` for `n = 0..N−2`.
    pub ranks: Vec<usize>,
    pub ha: Vec<usize>,
}

pub fn cohomology<S: Scalar>(a: &LeibnizAlgebra<S>, max_degree: usize) -> Result<CohomologyReport> {
    if max_degree < 2 {
        return Err(Error::InvalidInput(
            "cohomology needs a truncation degree N >= 2".into(),
        ));
    }
    a.require_leibniz()?;
    let tower = FreeLieTower::new(a.dim(), max_degree);
    let diffs = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..max_degree - 1)
            .map(|n| {
                let tower = &tower;
                scope.spawn(move || implicit_differential(a, tower, n))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("differential construction panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    if let Some(d) = diffs.iter().find(|d| !d.maps_into_alp) {
        return Err(Error::Internal(format!("b_LP leaves ALP^{}", d.degree)));
    }
    let ranks: Vec<usize> = diffs.iter().map(|d| d.matrix.rank()).collect();
    let alp_dims: Vec<usize> = tower.dims();
    let ha = (0..max_degree - 1)
        .map(|n| alp_dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect();
    Ok(CohomologyReport {
        max_degree,
        alp_dims,
        ranks,
        ha,
    })
}

/// Position of a twisted double `g ⊕_H g*` among ω-compatible extensions.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionClass<S> {
    pub anti_cyclic: bool,
    /// `b_LP H̃ = 0`.
    pub cocycle: bool,
    /// `double(g, H)` satisfies the Leibniz identity.
    pub double_is_leibniz: bool,
    /// `double(g, H)` satisfies A1–A2 for the canonical ω.
    pub anti_invariant: bool,
    pub ha2_dim: usize,
    /// Coordinates of the class over the canonical complement of `B² ⊆ Z²`.
    pub coordinates: Option<Vec<S>>,
    /// The representative obtained by reducing `H̃` against `B²`.
    pub representative: Option<Cochain<S>>,
    /// `coordinates` scaled so that the first nonzero entry is 1.
    pub label: Option<Vec<S>>,
}

impl<S: Scalar> ExtensionClass<S> {
    pub fn is_trivial(&self) -> Option<bool> {
        self.coordinates
            .as_ref()
            .map(|c| c.iter().all(Zero::is_zero))
    }
}

/// `B²` and the canonical complement `C` of `B²` in `Z²` (both in `m³` word coordinates).
#[derive(Clone, Debug)]
pub struct Ha2Decomposition<S> {
    pub coboundaries: SubspaceBasis<S>,
    pub complement: SubspaceBasis<S>,
}

pub fn ha2_decomposition<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<Ha2Decomposition<S>> {
    a.require_leibniz()?;
    let m = a.dim();
    let tower = FreeLieTower::new(m, 4);
    let ambient = m * m * m;
    let deg1 = WordCoordinates::new(tower.slice(2));
    let mut boundaries = Vec::new();
    for b in 0..deg1.basis_len() {
        let tau = deg1.from_implicit(&SparseVec::from([(b, S::one())]));
        boundaries.push(blp(a, &tau)?.to_vector());
    }
    let coboundaries = SubspaceBasis::span_sparse(ambient, boundaries);
    let diff = implicit_differential(a, &tower, 2)?;
    let closed = nullspace(
        &(0..diff.matrix.rows())
            .map(|r| diff.matrix.row(r).clone())
            .collect::<Vec<_>>(),
        diff.matrix.cols(),
    );
    let deg2 = WordCoordinates::new(tower.slice(3));
    let reduced = closed.vectors().iter().map(|v| {
        let c = deg2.from_implicit(&to_sparse(v));
        coboundaries.reduce(c.coeffs())
    });
    let complement = SubspaceBasis::span(ambient, reduced);
    Ok(Ha2Decomposition {
        coboundaries,
        complement,
    })
}

/// Classifies the extension `double(g, H)` by the class of `H̃` in `HA²`.
pub fn classify_extension<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    h: &Cochain<S>,
) -> Result<ExtensionClass<S>> {
    check_dim(a, h.dim())?;
    if h.degree() != 2 {
        return Err(Error::InvalidInput(
            "extension cocycle must have degree 2".into(),
        ));
    }
    a.require_leibniz()?;
    let anti_cyclic = is_anti_cyclic(h);
    let cocycle = blp(a, h)?.is_zero();
    let (d, report) = double(&ExtensionDatum {
        base: a.clone(),
        cocycle: h.clone(),
    })?;
    let anti_invariant = check_anti_invariance(&d, &canonical_omega(a.dim())?)?.passed();
    let decomposition = ha2_decomposition(a)?;
    let ha2_dim = decomposition.complement.dim();
    let mut class = ExtensionClass {
        anti_cyclic,
        cocycle,
        double_is_leibniz: report.passed(),
        anti_invariant,
        ha2_dim,
        coordinates: None,
        representative: None,
        label: None,
    };
    if anti_cyclic && cocycle {
        let rep = decomposition.coboundaries.reduce(h.coeffs());
        let coords: Vec<S> = decomposition
            .complement
            .pivots()
            .iter()
            .map(|&p| rep[p].clone())
            .collect();
        let mut check = vec![S::zero(); rep.len()];
        for (c, v) in coords.iter().zip(decomposition.complement.vectors()) {
            for (o, x) in check.iter_mut().zip(v) {
                let cur = std::mem::replace(o, S::zero());
                *o = cur + c.clone() * x.clone();
            }
        }
        if check != rep {
            return Err(Error::Internal(
                "closed cochain outside B² + complement".into(),
            ));
        }
        let label = coords.iter().find(|x| !x.is_zero()).map(|first| {
            let inv = S::one() / first.clone();
            coords.iter().map(|x| x.clone() * inv.clone()).collect()
        });
        class.label = Some(label.unwrap_or_else(|| coords.clone()));
        class.representative = Some(Cochain::from_coeffs(a.dim(), 2, rep)?);
        class.coordinates = Some(coords);
    }
    Ok(class)
}

/// `τ(x) ∈ g*` from `τ̃(x, y) = ω(τ(x), y)`: `τ(e_i) = −Σ_k τ̃(e_i, e_k) e^k`.
fn tau_map<S: Scalar>(tau: &Cochain<S>) -> Vec<Vec<S>> {
    let m = tau.dim();
    (0..m)
        .map(|i| (0..m).map(|k| -tau.value(&[i, k]).clone()).collect())
        .collect()
}

/// The twist `H′` for which `e^τ = 1 + τ` is an isomorphism
/// `double(g, H) → double(g, H′)`:
/// `H′(x₁,x₂) = H(x₁,x₂) + τ[x₁,x₂] − [x₁,τx₂] − [τx₁,x₂]`, returned lowered.
pub fn gauge_twist<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    h: &Cochain<S>,
    tau: &Cochain<S>,
) -> Result<Cochain<S>> {
    check_dim(a, h.dim())?;
    check_dim(a, tau.dim())?;
    if h.degree() != 2 || tau.degree() != 1 {
        return Err(Error::InvalidInput(
            "gauge twist needs a degree-2 H and a degree-1 τ".into(),
        ));
    }
    let m = a.dim();
    let (d0, _) = double(&ExtensionDatum::untwisted(a.clone()))?;
    let omega = canonical_omega::<S>(m)?;
    let t = tau_map(tau);
    let embed_dual = |v: &[S]| {
        let mut out = vec![S::zero(); 2 * m];
        out[m..].clone_from_slice(v);
        out
    };
    let apply_tau = |x: &[S]| {
        let mut out = vec![S::zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (o, y) in out.iter_mut().zip(&t[i]) {
                let cur = std::mem::replace(o, S::zero());
                *o = cur + xi.clone() * y.clone();
            }
        }
        out
    };
    Ok(Cochain::from_fn(m, 2, |w| {
        let (i, j, k) = (w[0], w[1], w[2]);
        let (ei, ej, ek) = (d0.unit(i), d0.unit(j), d0.unit(k));
        let br = a.bracket(&a.unit(i), &a.unit(j));
        let mut shift = embed_dual(&apply_tau(&br));
        let left = d0.bracket(&ei, &embed_dual(&t[j]));
        let right = d0.bracket(&embed_dual(&t[i]), &ej);
        for ((s, l), r) in shift.iter_mut().zip(&left).zip(&right) {
            let cur = std::mem::replace(s, S::zero());
            *s = cur - l.clone() - r.clone();
        }
        h.value(w).clone() + omega.eval(&shift, &ek)
    }))
}

/// Properties of `e^τ: double(g, H) → double(g, H′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeCheck {
    pub is_leibniz_morphism: bool,
    pub preserves_omega: bool,
}

pub fn check_gauge<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    h: &Cochain<S>,
    tau: &Cochain<S>,
) -> Result<GaugeCheck> {
    let h2 = gauge_twist(a, h, tau)?;
    let m = a.dim();
    let (src, _) = double(&ExtensionDatum {
        base: a.clone(),
        cocycle: h.clone(),
    })?;
    let (dst, _) = double(&ExtensionDatum {
        base: a.clone(),
        cocycle: h2,
    })?;
    let t = tau_map(tau);
    let phi = |u: &[S]| {
        let mut out = u.to_vec();
        for i in 0..m {
            if u[i].is_zero() {
                continue;
            }
            for k in 0..m {
                let cur = std::mem::replace(&mut out[m + k], S::zero());
                out[m + k] = cur + u[i].clone() * t[i][k].clone();
            }
        }
        out
    };
    let omega = canonical_omega::<S>(m)?;
    let mut is_leibniz_morphism = true;
    let mut preserves_omega = true;
    for i in 0..2 * m {
        for j in 0..2 * m {
            let (u, v) = (src.unit(i), src.unit(j));
            if phi(&src.bracket(&u, &v)) != dst.bracket(&phi(&u), &phi(&v)) {
                is_leibniz_morphism = false;
            }
            if omega.eval(&phi(&u), &phi(&v)) != omega.eval(&u, &v) {
                preserves_omega = false;
            }
        }
    }
    Ok(GaugeCheck {
        is_leibniz_morphism,
        preserves_omega,
    })
}

#[cfg(test)]
mod tests;
