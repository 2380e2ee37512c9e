//! The chain complex `(F_Lie g[1], ∂)`, the Loday complex, and their homology.

mod checks;
mod dr;

pub use checks::{
    check_almost_derivation, check_boundary_alt, check_d_squared, check_left_lemma,
    check_loday_squared, check_right_lemma, check_subcomplex, CheckOutcome,
};
pub use dr::{build_dr, DrElement, DrPresentation, DrSuiteReport};

use crate::algebra::{liezation, LeibnizAlgebra, Liezation};
use crate::error::{Error, Result};
use crate::free_lie::{all_words, epsilon_word, BracketWord, LieElement, TensorElement, Word};
use crate::linalg::{add_scaled, EchelonBasis, SparseMatrix, SparseVec, SubspaceBasis};
use crate::scalar::Scalar;

/// A basis of `F^n_Lie g[1]` chosen among bracket words, with a solver for
/// coordinates of commutator expansions.
#[derive(Clone, Debug)]
pub struct LieBasisSlice<S> {
    generators: usize,
    degree: usize,
    words: Vec<BracketWord>,
    echelon: EchelonBasis<S>,
}

impl<S: Scalar> LieBasisSlice<S> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[BracketWord] {
        &self.words
    }

    /// Coordinates of a length-`n` tensor lying in the image of ε.
    pub fn coords(&self, t: &TensorElement<S>) -> Result<SparseVec<S>> {
        if let Some(len) = t.homogeneous_length() {
            if len != self.degree {
                return Err(Error::InvalidInput(format!(
                    "tensor of length {len} in degree-{} slice",
                    self.degree
                )));
            }
        }
        self.echelon
            .solve(&t.to_sparse_index(self.generators))
            .ok_or_else(|| Error::Internal(format!("tensor outside ε(F^{})", self.degree)))
    }

    pub fn coords_of_word(&self, w: &[usize]) -> SparseVec<S> {
        self.coords(&epsilon_word(w))
            .expect("every bracket word lies in the span of the basis")
    }

    pub fn coords_of_lie(&self, x: &LieElement<S>) -> Result<SparseVec<S>> {
        self.coords(&x.epsilon())
    }

    /// `Σ c_b ε(b)` for basis coordinates `c`.
    pub fn expand(&self, coords: &SparseVec<S>) -> TensorElement<S> {
        let mut t = TensorElement::zero();
        for (&b, c) in coords {
            t.add_scaled(c, &epsilon_word(&self.words[b].0));
        }
        t
    }

    pub fn element(&self, coords: &SparseVec<S>) -> LieElement<S> {
        let mut l = LieElement::zero();
        for (&b, c) in coords {
            l.add_term(self.words[b].clone(), c.clone());
        }
        l
    }
}

/// Greedy basis of `F^n` over lexicographically ordered bracket words: a
/// word is kept iff its ε-image is independent of those already kept.
pub fn build_basis<S: Scalar>(generators: usize, n: usize) -> LieBasisSlice<S> {
    assert!(generators >= 1 && n >= 1, "basis needs m >= 1 and n >= 1");
    let mut echelon = EchelonBasis::new();
    let mut words = Vec::new();
    for w in all_words(generators, n) {
        let image = epsilon_word::<S>(&w).to_sparse_index(generators);
        if echelon.insert(&image) {
            words.push(BracketWord(w));
        }
    }
    LieBasisSlice {
        generators,
        degree: n,
        words,
        echelon,
    }
}

/// Bases of `F^1 .. F^N`.
#[derive(Clone, Debug)]
pub struct FreeLieTower<S> {
    slices: Vec<LieBasisSlice<S>>,
}

impl<S: Scalar> FreeLieTower<S> {
    pub fn new(generators: usize, max_degree: usize) -> Self {
        let slices = std::thread::scope(|scope| {
            let handles: Vec<_> = (1..=max_degree)
                .map(|n| scope.spawn(move || build_basis::<S>(generators, n)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("basis construction panicked"))
                .collect()
        });
        FreeLieTower { slices }
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len()
    }

    /// Slice of degree `n >= 1`.
    pub fn slice(&self, n: usize) -> &LieBasisSlice<S> {
        &self.slices[n - 1]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(LieBasisSlice::len).collect()
    }
}

/// A boundary map between degree slices. Columns index the source basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryMatrix<S> {
    pub from_degree: usize,
    pub to_degree: usize,
    pub matrix: SparseMatrix<S>,
}

impl<S: Scalar> BoundaryMatrix<S> {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `(row, col, "p/q")`, 0-based.
    pub fn triplets(&self) -> Vec<(usize, usize, String)> {
        self.matrix
            .triplets()
            .into_iter()
            .map(|(i, j, x)| (i, j, x.to_string()))
            .collect()
    }
}

/// Replaces position `j` of `w` by `[w_i, w_j]` and drops position `i` (`i < j`),
/// expanded over the structure constants.
fn contract_pair<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    w: &[usize],
    i: usize,
    j: usize,
) -> Vec<(Vec<usize>, S)> {
    a.bracket_basis(w[i], w[j])
        .iter()
        .map(|(k, c)| {
            let mut out = Vec::with_capacity(w.len() - 1);
            for (pos, &l) in w.iter().enumerate() {
                if pos == i {
                    continue;
                }
                out.push(if pos == j { *k } else { l });
            }
            (out, c.clone())
        })
        .collect()
}

/// `∂{x1..x_{n+1}} = Σ_{i<j} (−1)^{i−1} {.., x̂_i, .., [x_i,x_j], ..}
///  + (−1)^{n−1} {x1..x_{n−1}, [x_{n+1}, x_n]}`.
pub fn d_bracket_word<S: Scalar>(a: &LeibnizAlgebra<S>, w: &[usize]) -> LieElement<S> {
    let len = w.len();
    let mut out = LieElement::zero();
    if len < 2 {
        return out;
    }
    for i in 0..len {
        for j in i + 1..len {
            let s = S::sign(i);
            for (nw, c) in contract_pair(a, w, i, j) {
                out.add_term(BracketWord(nw), s.clone() * c);
            }
        }
    }
    let s = S::sign(len);
    let prefix = &w[..len - 2];
    for (k, c) in a.bracket_basis(w[len - 1], w[len - 2]) {
        let mut nw = prefix.to_vec();
        nw.push(*k);
        out.add_term(BracketWord(nw), s.clone() * c.clone());
    }
    out
}

/// The equivalent form ending in `(−1)^{n−1} {x1..x_{n−1}, [x_n,x_{n+1}] + [x_{n+1},x_n]}`.
pub fn d_bracket_word_alt<S: Scalar>(a: &LeibnizAlgebra<S>, w: &[usize]) -> LieElement<S> {
    let len = w.len();
    let mut out = LieElement::zero();
    if len < 2 {
        return out;
    }
    for i in 0..len - 2 {
        for j in i + 1..len {
            for (nw, c) in contract_pair(a, w, i, j) {
                out.add_term(BracketWord(nw), S::sign(i) * c);
            }
        }
    }
    let s = S::sign(len);
    let prefix = &w[..len - 2];
    let (x, y) = (w[len - 2], w[len - 1]);
    for (k, c) in a.bracket_basis(x, y).iter().chain(a.bracket_basis(y, x)) {
        let mut nw = prefix.to_vec();
        nw.push(*k);
        out.add_term(BracketWord(nw), s.clone() * c.clone());
    }
    out
}

fn boundary_between<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    source: &LieBasisSlice<S>,
    target: &LieBasisSlice<S>,
    alt: bool,
) -> Result<BoundaryMatrix<S>> {
    if source.degree() != target.degree() + 1 {
        return Err(Error::InvalidInput(
            "boundary must lower degree by one".into(),
        ));
    }
    let columns = source
        .words()
        .iter()
        .map(|b| {
            let image = if alt {
                d_bracket_word_alt(a, &b.0)
            } else {
                d_bracket_word(a, &b.0)
            };
            target.coords_of_lie(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryMatrix {
        from_degree: source.degree(),
        to_degree: target.degree(),
        matrix: SparseMatrix::from_columns(target.len(), &columns),
    })
}

/// Free Lie bases up to a truncation degree, bound to an algebra.
///
/// Only a binary product is required: `∂` is defined for any structure
/// constants, `∂∂ = 0` only for Leibniz ones.
#[derive(Clone, Debug)]
pub struct FreeLieComplex<'a, S> {
    algebra: &'a LeibnizAlgebra<S>,
    tower: FreeLieTower<S>,
}

impl<'a, S: Scalar> FreeLieComplex<'a, S> {
    pub fn new(algebra: &'a LeibnizAlgebra<S>, max_degree: usize) -> Self {
        FreeLieComplex {
            algebra,
            tower: FreeLieTower::new(algebra.dim(), max_degree),
        }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra<S> {
        self.algebra
    }

    pub fn tower(&self) -> &FreeLieTower<S> {
        &self.tower
    }

    pub fn max_degree(&self) -> usize {
        self.tower.max_degree()
    }

    pub fn slice(&self, n: usize) -> &LieBasisSlice<S> {
        self.tower.slice(n)
    }

    /// `∂: F^n → F^{n−1}`, `2 <= n <= N`.
    pub fn boundary(&self, n: usize) -> Result<BoundaryMatrix<S>> {
        self.check_degree(n)?;
        boundary_between(self.algebra, self.slice(n), self.slice(n - 1), false)
    }

    pub fn boundary_alt(&self, n: usize) -> Result<BoundaryMatrix<S>> {
        self.check_degree(n)?;
        boundary_between(self.algebra, self.slice(n), self.slice(n - 1), true)
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n < 2 || n > self.max_degree() {
            return Err(Error::InvalidInput(format!(
                "boundary degree {n} outside 2..={}",
                self.max_degree()
            )));
        }
        Ok(())
    }
}

/// `∂: F^n → F^{n−1}` for a single degree.
pub fn boundary_d<S: Scalar>(a: &LeibnizAlgebra<S>, n: usize) -> Result<BoundaryMatrix<S>> {
    if n < 2 {
        return Err(Error::InvalidInput("boundary needs n >= 2".into()));
    }
    let source = build_basis(a.dim(), n);
    let target = build_basis(a.dim(), n - 1);
    boundary_between(a, &source, &target, false)
}

pub fn boundary_d_alt<S: Scalar>(a: &LeibnizAlgebra<S>, n: usize) -> Result<BoundaryMatrix<S>> {
    if n < 2 {
        return Err(Error::InvalidInput("boundary needs n >= 2".into()));
    }
    let source = build_basis(a.dim(), n);
    let target = build_basis(a.dim(), n - 1);
    boundary_between(a, &source, &target, true)
}

/// The augmentation `F^1 = g[1] → g_Lie`, `x ↦ p(x)`, as a `dim g_Lie x m` matrix.
pub fn augmentation<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<(SparseMatrix<S>, Liezation<S>)> {
    let lz = liezation(a)?;
    Ok((lz.projection_matrix().transpose(), lz))
}

/// `∂_L(x1..xn) = Σ_{i<j} (−1)^{i−1} (x1, .., x̂_i, .., [x_i,x_j], x_{j+1}, .., xn)`.
pub fn loday_apply<S: Scalar>(a: &LeibnizAlgebra<S>, t: &TensorElement<S>) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (w, c) in t.terms() {
        let w = &w.0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let s = S::sign(i) * c.clone();
                for (nw, x) in contract_pair(a, w, i, j) {
                    out.add_term(Word(nw), s.clone() * x);
                }
            }
        }
    }
    out
}

/// `∂_L: g[1]^{⊗n} → g[1]^{⊗(n−1)}` on lexicographic word bases.
pub fn loday_boundary<S: Scalar>(a: &LeibnizAlgebra<S>, n: usize) -> Result<BoundaryMatrix<S>> {
    if n < 2 {
        return Err(Error::InvalidInput("Loday boundary needs n >= 2".into()));
    }
    let m = a.dim();
    let columns: Vec<SparseVec<S>> = all_words(m, n)
        .map(|w| loday_apply(a, &TensorElement::word(&w)).to_sparse_index(m))
        .collect();
    Ok(BoundaryMatrix {
        from_degree: n,
        to_degree: n - 1,
        matrix: SparseMatrix::from_columns(m.pow(n as u32 - 1), &columns),
    })
}

/// Which complex [`homology`] should compute besides `HA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Ha,
    HaAndLoday,
}

/// Dimensions of a truncated complex and its homology.
///
/// `chain_dims[n-1]` and `boundary_ranks[n-1]` refer to degree `n`
/// (`rank ∂_1 = 0`); `homology[k]` is the homology at degree `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub max_degree: usize,
    pub chain_dims: Vec<usize>,
    pub boundary_ranks: Vec<usize>,
    pub homology: Vec<usize>,
}

impl ComplexReport {
    fn from_ranks(max_degree: usize, chain_dims: Vec<usize>, boundary_ranks: Vec<usize>) -> Self {
        // homology at degree k+1: dim − rank(out) − rank(in)
        let homology = (0..max_degree - 1)
            .map(|k| chain_dims[k] - boundary_ranks[k] - boundary_ranks[k + 1])
            .collect();
        ComplexReport {
            max_degree,
            chain_dims,
            boundary_ranks,
            homology,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// `HA_k = H_{k+1}(F_Lie g[1], ∂)`.
    pub ha: ComplexReport,
    /// Same indexing on the Loday complex `(T̄ g[1], ∂_L)`.
    pub loday: Option<ComplexReport>,
}

fn ranks_in_parallel<S: Scalar>(mats: Vec<SparseMatrix<S>>) -> Vec<usize> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = mats
            .into_iter()
            .map(|m| scope.spawn(move || m.rank()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rank panicked"))
            .collect()
    })
}

/// `HA_0 .. HA_{N−2}` (and optionally Loday homology) from exact ranks.
pub fn homology<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    max_degree: usize,
    which: Which,
) -> Result<HomologyReport> {
    if max_degree < 2 {
        return Err(Error::InvalidInput(
            "homology needs a truncation degree N >= 2".into(),
        ));
    }
    a.require_leibniz()?;
    let cx = FreeLieComplex::new(a, max_degree);
    let mats = (2..=max_degree)
        .map(|n| cx.boundary(n).map(|b| b.matrix))
        .collect::<Result<Vec<_>>>()?;
    let mut ranks = vec![0];
    ranks.extend(ranks_in_parallel(mats));
    let ha = ComplexReport::from_ranks(max_degree, cx.tower().dims(), ranks);
    let loday = match which {
        Which::Ha => None,
        Which::HaAndLoday => {
            let mats = (2..=max_degree)
                .map(|n| loday_boundary(a, n).map(|b| b.matrix))
                .collect::<Result<Vec<_>>>()?;
            let mut ranks = vec![0];
            ranks.extend(ranks_in_parallel(mats));
            let dims = (1..=max_degree).map(|n| a.dim().pow(n as u32)).collect();
            Some(ComplexReport::from_ranks(max_degree, dims, ranks))
        }
    };
    Ok(HomologyReport { ha, loday })
}

/// `Ω⁰(g) = g⊗g / {x⊗y − y⊗x, [x,y]⊗z − x⊗[y,z]}` for a Lie algebra.
#[derive(Clone, Debug)]
pub struct Omega0<S> {
    pub dim: usize,
    /// The relation subspace of `g⊗g` (index `i*m + j`).
    pub relations: SubspaceBasis<S>,
}

pub fn omega0<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<Omega0<S>> {
    if !a.is_lie() {
        return Err(Error::NotLie(format!(
            "{} is not antisymmetric Leibniz",
            a.name()
        )));
    }
    let m = a.dim();
    let bump = |r: &mut SparseVec<S>, idx: usize, c: S| {
        add_scaled(r, &c, &SparseVec::from([(idx, S::one())]))
    };
    let mut rows: Vec<SparseVec<S>> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut r = SparseVec::new();
            bump(&mut r, i * m + j, S::one());
            bump(&mut r, j * m + i, -S::one());
            rows.push(r);
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut r = SparseVec::new();
                for (l, c) in a.bracket_basis(i, j) {
                    bump(&mut r, l * m + k, c.clone());
                }
                for (l, c) in a.bracket_basis(j, k) {
                    bump(&mut r, i * m + l, -c.clone());
                }
                rows.push(r);
            }
        }
    }
    let relations = SubspaceBasis::span_sparse(m * m, rows);
    Ok(Omega0 {
        dim: m * m - relations.dim(),
        relations,
    })
}

/// Outcome of the `Ker₂∂` invariance checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ker2Report {
    pub f2_dim: usize,
    pub ker_dim: usize,
    pub image_dim: usize,
    /// Coordinate Lie subalgebras (0-based basis index sets).
    pub lie_subalgebras: Vec<Vec<usize>>,
    /// `S²L ⊆ Ker₂∂` for every listed subalgebra `L`.
    pub subalgebras_in_kernel: bool,
    /// `([x,y],z) + (y,[x,z]) − (x,[y,z]+[z,y]) ∈ Im₂∂` for all basis triples.
    pub invariance_in_image: bool,
}

impl Ker2Report {
    pub fn passed(&self) -> bool {
        self.subalgebras_in_kernel && self.invariance_in_image
    }
}

/// Coordinate subspaces closed under the bracket on which it is antisymmetric.
pub fn coordinate_lie_subalgebras<S: Scalar>(a: &LeibnizAlgebra<S>) -> Vec<Vec<usize>> {
    let m = a.dim();
    if m > 12 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let set: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let closed = set.iter().all(|&i| {
            set.iter().all(|&j| {
                a.bracket_basis(i, j).iter().all(|(k, _)| set.contains(k))
                    && (0..m).all(|k| {
                        (a.structure_constant(i, j, k).clone()
                            + a.structure_constant(j, i, k).clone())
                        .is_zero()
                    })
            })
        });
        if closed {
            out.push(set);
        }
    }
    out
}

pub fn ker2_invariance<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<Ker2Report> {
    a.require_leibniz()?;
    let cx = FreeLieComplex::new(a, 3);
    let d2 = cx.boundary(2)?;
    let d3 = cx.boundary(3)?;
    let f2 = cx.slice(2);
    let rank2 = d2.rank();
    let mut image = EchelonBasis::new();
    for j in 0..d3.matrix.cols() {
        image.insert(&d3.matrix.column(j));
    }
    let lie_subalgebras = coordinate_lie_subalgebras(a);
    let subalgebras_in_kernel = lie_subalgebras.iter().all(|set| {
        set.iter().all(|&i| {
            set.iter().all(|&j| {
                let v = f2.coords_of_word(&[i, j]);
                d2.matrix.apply(&v).is_empty()
            })
        })
    });
    let m = a.dim();
    let mut invariance_in_image = true;
    'outer: for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let mut l = LieElement::zero();
                for (k, c) in a.bracket_basis(x, y) {
                    l.add_term(BracketWord(vec![*k, z]), c.clone());
                }
                for (k, c) in a.bracket_basis(x, z) {
                    l.add_term(BracketWord(vec![y, *k]), c.clone());
                }
                for (k, c) in a.bracket_basis(y, z).iter().chain(a.bracket_basis(z, y)) {
                    l.add_term(BracketWord(vec![x, *k]), -c.clone());
                }
                let v = f2.coords_of_lie(&l)?;
                if !image.contains(&v) || !d2.matrix.apply(&v).is_empty() {
                    invariance_in_image = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(Ker2Report {
        f2_dim: f2.len(),
        ker_dim: f2.len() - rank2,
        image_dim: image.len(),
        lie_subalgebras,
        subalgebras_in_kernel,
        invariance_in_image,
    })
}
