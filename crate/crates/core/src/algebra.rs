//! Finite-dimensional Leibniz algebras by structure constants: axiom
//! checks, the symmetric ideal and Liezation, the coadjoint double
//! `g ⋉ g*` with its canonical 2-form, and twisted abelian extensions.

use std::fmt;

use num_traits::Zero;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SubspaceBasis};
use crate::scalar::Scalar;

/// Structure constants `[e_i, e_j] = Σ_k c_{ij}^k e_k` of a binary product.
///
/// The product need not satisfy the Leibniz identity; `validated` records
/// whether it has been checked and holds.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra<S> {
    name: String,
    basis_names: Vec<String>,
    consts: Vec<S>,
    table: Vec<Vec<(usize, S)>>,
    validated: bool,
}

/// Sparse bracket entry `(i, j, [(k, c)])`: `[e_i, e_j] = Σ c e_k`.
pub type BracketEntry<S> = (usize, usize, Vec<(usize, S)>);

impl<S: Scalar> LeibnizAlgebra<S> {
    /// `consts[(i * m + j) * m + k] = c_{ij}^k`.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, consts: Vec<S>) -> Result<Self> {
        let m = basis_names.len();
        if m == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if consts.len() != m * m * m {
            return Err(Error::ShapeMismatch(format!(
                "dimension {m} needs {} structure constants, got {}",
                m * m * m,
                consts.len()
            )));
        }
        let table = (0..m * m)
            .map(|ij| {
                (0..m)
                    .filter(|&k| !consts[ij * m + k].is_zero())
                    .map(|k| (k, consts[ij * m + k].clone()))
                    .collect()
            })
            .collect();
        Ok(LeibnizAlgebra {
            name: name.into(),
            basis_names,
            consts,
            table,
            validated: false,
        })
    }

    /// Builds from sparse bracket entries `(i, j, [(k, c)])`, 0-based.
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        brackets: &[BracketEntry<S>],
    ) -> Result<Self> {
        let mut consts = vec![S::zero(); dim * dim * dim];
        for (i, j, value) in brackets {
            for (k, c) in value {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(Error::InvalidInput(format!(
                        "bracket index out of range for dimension {dim}"
                    )));
                }
                let slot = &mut consts[(i * dim + j) * dim + k];
                let cur = std::mem::replace(slot, S::zero());
                *slot = cur + c.clone();
            }
        }
        Self::new(name, default_names(dim), consts)
    }

    pub fn zero_product(name: impl Into<String>, dim: usize) -> Result<Self> {
        Self::new(name, default_names(dim), vec![S::zero(); dim * dim * dim])
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::ShapeMismatch(
                "basis label count differs from dimension".into(),
            ));
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        let m = self.dim();
        &self.consts[(i * m + j) * m + k]
    }

    pub fn constants(&self) -> &[S] {
        &self.consts
    }

    /// Nonzero `(k, c_{ij}^k)` of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let m = self.dim();
        let mut out = vec![S::zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi.clone() * yj.clone();
                for (k, s) in self.bracket_basis(i, j) {
                    let cur = std::mem::replace(&mut out[*k], S::zero());
                    out[*k] = cur + c.clone() * s.clone();
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<S> {
        unit(self.dim(), i)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Runs [`validate_leibniz`] and records the outcome.
    pub fn validated(mut self) -> Result<Self> {
        let report = validate_leibniz(&self);
        match report.first_failure() {
            Some(t) => Err(Error::NotLeibniz((t.0 + 1, t.1 + 1, t.2 + 1))),
            None => {
                self.validated = true;
                Ok(self)
            }
        }
    }

    /// Ok if validated, or if the identity holds when checked now.
    pub fn require_leibniz(&self) -> Result<()> {
        if self.validated {
            return Ok(());
        }
        match validate_leibniz(self).first_failure() {
            Some(t) => Err(Error::NotLeibniz((t.0 + 1, t.1 + 1, t.2 + 1))),
            None => Ok(()),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| {
            (0..m).all(|j| {
                (0..m).all(|k| {
                    (self.structure_constant(i, j, k).clone()
                        + self.structure_constant(j, i, k).clone())
                    .is_zero()
                })
            })
        })
    }

    /// Lie = antisymmetric Leibniz (Leibniz then reads as Jacobi).
    pub fn is_lie(&self) -> bool {
        self.is_antisymmetric() && validate_leibniz(self).passed()
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Zero::is_zero)
    }
}

impl<S: Scalar> fmt::Display for LeibnizAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name, self.dim())?;
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                let terms = self.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                let rhs: Vec<String> = terms
                    .iter()
                    .map(|(k, c)| format!("({c}){}", self.basis_names[*k]))
                    .collect();
                writeln!(
                    f,
                    "  [{}, {}] = {}",
                    self.basis_names[i],
                    self.basis_names[j],
                    rhs.join(" + ")
                )?;
            }
        }
        Ok(())
    }
}

pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

pub(crate) fn unit<S: Scalar>(m: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); m];
    v[i] = S::one();
    v
}

fn add_into<S: Scalar>(acc: &mut [S], c: &S, x: &[S]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            let cur = std::mem::replace(a, S::zero());
            *a = cur + c.clone() * b.clone();
        }
    }
}

/// A basis triple where `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` fails.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizFailure<S> {
    /// 0-based `(i, j, k)`.
    pub triple: (usize, usize, usize),
    pub lhs: Vec<S>,
    pub rhs: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport<S> {
    pub failures: Vec<LeibnizFailure<S>>,
}

impl<S: Scalar> ValidationReport<S> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<(usize, usize, usize)> {
        self.failures.first().map(|f| f.triple)
    }
}

/// Checks the left Leibniz identity on all basis triples.
pub fn validate_leibniz<S: Scalar>(a: &LeibnizAlgebra<S>) -> ValidationReport<S> {
    let m = a.dim();
    let mut failures = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (x, y, z) = (a.unit(i), a.unit(j), a.unit(k));
                let lhs = a.bracket(&x, &a.bracket(&y, &z));
                let mut rhs = a.bracket(&a.bracket(&x, &y), &z);
                add_into(&mut rhs, &S::one(), &a.bracket(&y, &a.bracket(&x, &z)));
                if lhs != rhs {
                    failures.push(LeibnizFailure {
                        triple: (i, j, k),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    ValidationReport { failures }
}

/// The ideal `I` spanned by the symmetric brackets `[x,y] + [y,x]`.
///
/// Verifies `[I, g] = 0` and `[g, I] ⊆ I` before returning.
pub fn symmetric_ideal<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<SubspaceBasis<S>> {
    a.require_leibniz()?;
    let m = a.dim();
    let gens = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut v = a.bracket(&a.unit(i), &a.unit(j));
            add_into(&mut v, &S::one(), &a.bracket(&a.unit(j), &a.unit(i)));
            v
        });
    let ideal = SubspaceBasis::span(m, gens);
    for v in ideal.vectors() {
        for j in 0..m {
            if a.bracket(v, &a.unit(j)).iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal(format!("[I, e{}] != 0", j + 1)));
            }
            if !ideal.contains(&a.bracket(&a.unit(j), v)) {
                return Err(Error::Internal(format!("[e{}, I] not inside I", j + 1)));
            }
        }
    }
    Ok(ideal)
}

/// The quotient `g_Lie = g / I` with its projection.
#[derive(Clone, Debug)]
pub struct Liezation<S> {
    pub algebra: LeibnizAlgebra<S>,
    pub ideal: SubspaceBasis<S>,
    /// Basis indices of `g` whose images form the quotient basis.
    pub complement: Vec<usize>,
    /// Row `i` is `p(e_i)` in quotient coordinates (`m x (m - dim I)`).
    pub projection: Vec<Vec<S>>,
}

impl<S: Scalar> Liezation<S> {
    pub fn project(&self, x: &[S]) -> Vec<S> {
        let r = self.complement.len();
        let mut out = vec![S::zero(); r];
        for (xi, row) in x.iter().zip(&self.projection) {
            if !xi.is_zero() {
                add_into(&mut out, xi, row);
            }
        }
        out
    }

    /// The lift of the `a`-th quotient basis vector.
    pub fn lift(&self, a: usize) -> Vec<S> {
        unit(self.projection.len(), self.complement[a])
    }

    pub fn projection_matrix(&self) -> SparseMatrix<S> {
        SparseMatrix::from_dense(&self.projection)
    }
}

/// Liezation on the complement of the pivot columns of `I`'s echelon basis.
pub fn liezation<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<Liezation<S>> {
    let ideal = symmetric_ideal(a)?;
    let m = a.dim();
    let complement = ideal.free_columns();
    let r = complement.len();
    let mut projection = vec![vec![S::zero(); r]; m];
    for (col, &i) in complement.iter().enumerate() {
        projection[i][col] = S::one();
    }
    // Reduced echelon rows read e_p = v - Σ_{free j} v_j e_j with v ∈ I.
    for (p, v) in ideal.pivots().iter().zip(ideal.vectors()) {
        for (col, &j) in complement.iter().enumerate() {
            if !v[j].is_zero() {
                projection[*p][col] = -v[j].clone();
            }
        }
    }
    let names: Vec<String> = complement
        .iter()
        .map(|&i| a.basis_names()[i].clone())
        .collect();
    let mut consts = vec![S::zero(); r * r * r];
    for (x, &i) in complement.iter().enumerate() {
        for (y, &j) in complement.iter().enumerate() {
            let image = {
                let br = a.bracket(&a.unit(i), &a.unit(j));
                let mut out = vec![S::zero(); r];
                for (xi, row) in br.iter().zip(&projection) {
                    if !xi.is_zero() {
                        add_into(&mut out, xi, row);
                    }
                }
                out
            };
            for (z, c) in image.into_iter().enumerate() {
                consts[(x * r + y) * r + z] = c;
            }
        }
    }
    let quotient = if r == 0 {
        None
    } else {
        Some(LeibnizAlgebra::new(format!("{}_Lie", a.name()), names, consts)?.validated()?)
    };
    let algebra = match quotient {
        Some(q) => q,
        None => LeibnizAlgebra {
            name: format!("{}_Lie", a.name()),
            basis_names: Vec::new(),
            consts: Vec::new(),
            table: Vec::new(),
            validated: true,
        },
    };
    Ok(Liezation {
        algebra,
        ideal,
        complement,
        projection,
    })
}

/// A bilinear form `Ω(u, v) = uᵀ Ω v`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    matrix: Vec<Vec<S>>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(matrix: Vec<Vec<S>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("bilinear form must be square".into()));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.matrix[i][j]
    }

    pub fn eval(&self, u: &[S], v: &[S]) -> S {
        let mut acc = S::zero();
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let e = &self.matrix[i][j];
                if !e.is_zero() {
                    acc = acc + ui.clone() * e.clone() * vj.clone();
                }
            }
        }
        acc
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| (self.matrix[i][j].clone() + self.matrix[j][i].clone()).is_zero())
        })
    }

    pub fn is_nondegenerate(&self) -> bool {
        SparseMatrix::from_dense(&self.matrix).rank() == self.dim()
    }
}

/// `ω(x₁+a₁, x₂+a₂) = ⟨x₁,a₂⟩ − ⟨x₂,a₁⟩` on `g ⊕ g*`, block `[[0, I], [−I, 0]]`.
pub fn canonical_omega<S: Scalar>(m: usize) -> Result<BilinearForm<S>> {
    if m == 0 {
        return Err(Error::InvalidInput("canonical form needs m >= 1".into()));
    }
    let mut matrix = vec![vec![S::zero(); 2 * m]; 2 * m];
    for i in 0..m {
        matrix[i][m + i] = S::one();
        matrix[m + i][i] = -S::one();
    }
    BilinearForm::new(matrix)
}

/// Which anti-invariance identity failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntiInvariance {
    /// `ω(x₁,[x₂,x₃]) = −ω([x₂,x₁],x₃)`
    A1,
    /// `ω(x₁,[x₂,x₃]) = ω([x₁,x₃]+[x₃,x₁],x₂)`
    A2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AntiInvarianceReport {
    /// 0-based triples with the identity that fails there.
    pub failures: Vec<((usize, usize, usize), AntiInvariance)>,
}

impl AntiInvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_anti_invariance<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    omega: &BilinearForm<S>,
) -> Result<AntiInvarianceReport> {
    let n = a.dim();
    if omega.dim() != n {
        return Err(Error::ShapeMismatch(format!(
            "form has dimension {}, algebra {n}",
            omega.dim()
        )));
    }
    let mut failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x1, x2, x3) = (a.unit(i), a.unit(j), a.unit(k));
                let lhs = omega.eval(&x1, &a.bracket(&x2, &x3));
                let a1 = -omega.eval(&a.bracket(&x2, &x1), &x3);
                if lhs != a1 {
                    failures.push(((i, j, k), AntiInvariance::A1));
                }
                let mut sym = a.bracket(&x1, &x3);
                add_into(&mut sym, &S::one(), &a.bracket(&x3, &x1));
                if lhs != omega.eval(&sym, &x2) {
                    failures.push(((i, j, k), AntiInvariance::A2));
                }
            }
        }
    }
    Ok(AntiInvarianceReport { failures })
}

/// Base algebra plus a twist `H_{ijk} = H̃(e_i, e_j, e_k)`, the ω-lowered
/// form of a `g*`-valued 2-cochain.
#[derive(Clone, Debug)]
pub struct ExtensionDatum<S> {
    pub base: LeibnizAlgebra<S>,
    pub cocycle: Cochain<S>,
}

impl<S: Scalar> ExtensionDatum<S> {
    pub fn untwisted(base: LeibnizAlgebra<S>) -> Self {
        let m = base.dim();
        ExtensionDatum {
            base,
            cocycle: Cochain::zero(m, 2),
        }
    }
}

/// The algebra `g ⊕ g*` on `(e_1..e_m, e^1..e^m)` with the coadjoint action
/// and the twist `H(x₁,x₂) = −Σ_k H̃(x₁,x₂,e_k) e^k` (so that
/// `ω(H(x₁,x₂), x₃) = H̃(x₁,x₂,x₃)`).
///
/// The result is validated; a failing Leibniz identity is returned in the
/// report and leaves the algebra unvalidated.
pub fn double<S: Scalar>(
    ext: &ExtensionDatum<S>,
) -> Result<(LeibnizAlgebra<S>, ValidationReport<S>)> {
    let base = &ext.base;
    base.require_leibniz()?;
    let m = base.dim();
    if ext.cocycle.degree() != 2 || ext.cocycle.dim() != m {
        return Err(Error::InvalidInput(format!(
            "twist must be a degree-2 cochain on dimension {m}"
        )));
    }
    let n = 2 * m;
    let mut consts = vec![S::zero(); n * n * n];
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let c = base.structure_constant(i, j, k);
                consts[idx(i, j, k)] = c.clone();
                // CA1: ⟨e_j, [e_i, e^k]⟩ = −⟨[e_i, e_j], e^k⟩
                consts[idx(i, m + k, m + j)] = -c.clone();
                // CA2: ⟨e_j, [e^k, e_i]⟩ = ⟨[e_j, e_i] + [e_i, e_j], e^k⟩
                consts[idx(m + k, i, m + j)] = base.structure_constant(j, i, k).clone()
                    + base.structure_constant(i, j, k).clone();
                consts[idx(i, j, m + k)] = -ext.cocycle.value(&[i, j, k]).clone();
            }
        }
    }
    let mut names = base.basis_names().to_vec();
    names.extend(base.basis_names().iter().map(|s| format!("{s}*")));
    let algebra = LeibnizAlgebra::new(format!("double({})", base.name()), names, consts)?;
    let report = validate_leibniz(&algebra);
    let mut algebra = algebra;
    algebra.validated = report.passed();
    Ok((algebra, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational as Q;

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    #[test]
    fn catalog_validation_outcomes() {
        assert!(validate_leibniz(&catalog::abelian::<Q>(3)).passed());
        assert!(validate_leibniz(&catalog::l2::<Q>()).passed());
        assert!(validate_leibniz(&catalog::n3::<Q>()).passed());
        let b1 = validate_leibniz(&catalog::b1::<Q>());
        assert!(!b1.passed());
        assert_eq!(b1.first_failure(), Some((0, 0, 0)));
        assert_eq!(b1.failures[0].lhs, vec![q(1)]);
        assert_eq!(b1.failures[0].rhs, vec![q(2)]);
    }

    #[test]
    fn shape_mismatch_is_input_error() {
        let r = LeibnizAlgebra::<Q>::new("bad", default_names(2), vec![q(0); 7]);
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn symmetric_ideal_examples() {
        assert_eq!(symmetric_ideal(&catalog::abelian::<Q>(3)).unwrap().dim(), 0);
        let i = symmetric_ideal(&catalog::l2::<Q>()).unwrap();
        assert_eq!(i.vectors(), &[vec![q(0), q(1)]]);
        assert_eq!(symmetric_ideal(&catalog::sl2::<Q>()).unwrap().dim(), 0);
        assert!(symmetric_ideal(&catalog::b1::<Q>()).is_err());
    }

    #[test]
    fn liezation_examples() {
        let l = liezation(&catalog::l2::<Q>()).unwrap();
        assert_eq!(l.algebra.dim(), 1);
        assert!(l.algebra.is_abelian());
        assert_eq!(l.projection, vec![vec![q(1)], vec![q(0)]]);

        let ab = liezation(&catalog::abelian::<Q>(3)).unwrap();
        assert_eq!(
            ab.projection,
            vec![
                vec![q(1), q(0), q(0)],
                vec![q(0), q(1), q(0)],
                vec![q(0), q(0), q(1)]
            ]
        );

        let sl2 = catalog::sl2::<Q>();
        let ls = liezation(&sl2).unwrap();
        assert_eq!(ls.algebra.constants(), sl2.constants());
        assert!(ls.algebra.is_lie());

        let n3 = liezation(&catalog::n3::<Q>()).unwrap();
        assert_eq!(n3.algebra.dim(), 1);
        assert!(n3.algebra.is_lie());
    }

    #[test]
    fn double_of_l2_reads_off_coadjoint_action() {
        let (d, report) = double(&ExtensionDatum::untwisted(catalog::l2::<Q>())).unwrap();
        assert!(report.passed());
        assert_eq!(d.dim(), 4);
        // [e1, e^1] = 0, [e1, e^2] = −e^1, [e^2, e1] = 2 e^1
        assert!(d.bracket_basis(0, 2).is_empty());
        assert_eq!(d.bracket_basis(0, 3), &[(2, q(-1))]);
        assert_eq!(d.bracket_basis(3, 0), &[(2, q(2))]);
        assert_eq!(d.bracket_basis(0, 0), &[(1, q(1))]);
    }

    #[test]
    fn canonical_omega_shape() {
        let w = canonical_omega::<Q>(1).unwrap();
        assert_eq!(w.matrix(), &[vec![q(0), q(1)], vec![q(-1), q(0)]]);
        for m in 1..4 {
            let w = canonical_omega::<Q>(m).unwrap();
            assert!(w.is_antisymmetric());
            assert!(w.is_nondegenerate());
            for i in 0..m {
                for j in 0..m {
                    let expect = if i == j { q(1) } else { q(0) };
                    assert_eq!(w.entry(i, m + j), &expect);
                }
            }
        }
        assert!(canonical_omega::<Q>(0).is_err());
    }

    #[test]
    fn anti_invariance_on_doubles() {
        for base in [
            catalog::abelian::<Q>(2),
            catalog::l2(),
            catalog::n3(),
            catalog::sl2(),
            catalog::heis3(),
        ] {
            let (d, report) = double(&ExtensionDatum::untwisted(base.clone())).unwrap();
            assert!(report.passed(), "double of {} not Leibniz", base.name());
            let w = canonical_omega(base.dim()).unwrap();
            assert!(
                check_anti_invariance(&d, &w).unwrap().passed(),
                "{}",
                base.name()
            );
        }
        let ab = catalog::abelian::<Q>(2);
        let w = BilinearForm::new(vec![vec![q(3), q(1)], vec![q(-5), q(2)]]).unwrap();
        assert!(check_anti_invariance(&ab, &w).unwrap().passed());
    }

    #[test]
    fn twist_violating_h1_breaks_anti_invariance() {
        let base = catalog::l2::<Q>();
        let mut h = Cochain::zero(2, 2);
        h.set(&[0, 1, 0], q(1)); // H_{121} ≠ H_{112}
        let (d, _) = double(&ExtensionDatum { base, cocycle: h }).unwrap();
        let r = check_anti_invariance(&d, &canonical_omega(2).unwrap()).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().any(|(_, w)| *w == AntiInvariance::A1));
    }

    #[test]
    fn dimension_mismatch_in_anti_invariance() {
        let r = check_anti_invariance(&catalog::l2::<Q>(), &canonical_omega(2).unwrap());
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }
}
