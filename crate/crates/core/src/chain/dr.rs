//! The dg Lie algebra `DR g[1] = g_Lie ⊕ F_Lie g[1]`, truncated at degree `−N`.

use std::collections::HashMap;

use super::checks::CheckOutcome;
use super::{FreeLieComplex, FreeLieTower};
use crate::algebra::{liezation, LeibnizAlgebra, Liezation};
use crate::error::{Error, Result};
use crate::free_lie::{epsilon_word, super_commutator, BracketWord, LieElement};
use crate::linalg::{add_scaled, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// An element of the truncated `DR g[1]`: `parts[0]` in `g_Lie`
/// coordinates, `parts[n]` in the basis of `F^n` (degree `−n`).
#[derive(Clone, Debug, PartialEq)]
pub struct DrElement<S> {
    pub parts: Vec<SparseVec<S>>,
}

impl<S: Scalar> DrElement<S> {
    pub fn zero(max_degree: usize) -> Self {
        DrElement {
            parts: vec![SparseVec::new(); max_degree + 1],
        }
    }

    pub fn basis(max_degree: usize, component: usize, index: usize) -> Self {
        let mut e = Self::zero(max_degree);
        e.parts[component].insert(index, S::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(SparseVec::is_empty)
    }

    pub fn add_scaled(&mut self, c: &S, other: &DrElement<S>) {
        for (p, q) in self.parts.iter_mut().zip(&other.parts) {
            add_scaled(p, c, q);
        }
    }
}

/// Bracket tables and differential of `DR g[1]` up to `F^N`.
#[derive(Clone, Debug)]
pub struct DrPresentation<S> {
    max_degree: usize,
    liezation: Liezation<S>,
    tower: FreeLieTower<S>,
    /// `r x m` matrix `x ↦ x̄` on `F^1 = g[1]`.
    augmentation: SparseMatrix<S>,
    /// `boundaries[n-2]`: `∂: F^n → F^{n−1}`.
    boundaries: Vec<SparseMatrix<S>>,
    /// `actions[k][n-1]`: derivation action of the basis vector `e_k ∈ g` on `F^n`.
    actions: Vec<Vec<SparseMatrix<S>>>,
    /// `(p, i, q, j) ↦ (b_i, b_j)` in `F^{p+q}`, `p + q <= N`.
    commutators: HashMap<(usize, usize, usize, usize), SparseVec<S>>,
}

/// Derivation extension of `y ↦ [e_k, y]` to a bracket word.
fn act_on_word<S: Scalar>(a: &LeibnizAlgebra<S>, k: usize, w: &[usize]) -> LieElement<S> {
    let mut out = LieElement::zero();
    for i in 0..w.len() {
        for (l, c) in a.bracket_basis(k, w[i]) {
            let mut nw = w.to_vec();
            nw[i] = *l;
            out.add_term(BracketWord(nw), c.clone());
        }
    }
    out
}

pub fn build_dr<S: Scalar>(a: &LeibnizAlgebra<S>, max_degree: usize) -> Result<DrPresentation<S>> {
    if max_degree < 2 {
        return Err(Error::InvalidInput(
            "DR needs a truncation degree N >= 2".into(),
        ));
    }
    a.require_leibniz()?;
    let liezation = liezation(a)?;
    let cx = FreeLieComplex::new(a, max_degree);
    let m = a.dim();
    let mut boundaries = Vec::new();
    for n in 2..=max_degree {
        boundaries.push(cx.boundary(n)?.matrix);
    }
    let mut actions = Vec::with_capacity(m);
    for k in 0..m {
        let mut per_degree = Vec::with_capacity(max_degree);
        for n in 1..=max_degree {
            let slice = cx.slice(n);
            let cols = slice
                .words()
                .iter()
                .map(|b| slice.coords_of_lie(&act_on_word(a, k, &b.0)))
                .collect::<Result<Vec<_>>>()?;
            per_degree.push(SparseMatrix::from_columns(slice.len(), &cols));
        }
        actions.push(per_degree);
    }
    let mut commutators = HashMap::new();
    for p in 1..max_degree {
        for q in 1..=max_degree - p {
            let target = cx.slice(p + q);
            for (i, b1) in cx.slice(p).words().iter().enumerate() {
                let e1 = epsilon_word::<S>(&b1.0);
                for (j, b2) in cx.slice(q).words().iter().enumerate() {
                    let t = super_commutator(&e1, &epsilon_word(&b2.0))?;
                    commutators.insert((p, i, q, j), target.coords(&t)?);
                }
            }
        }
    }
    let augmentation = liezation.projection_matrix().transpose();
    let tower = cx.tower().clone();
    Ok(DrPresentation {
        max_degree,
        liezation,
        tower,
        augmentation,
        boundaries,
        actions,
        commutators,
    })
}

impl<S: Scalar> DrPresentation<S> {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn liezation(&self) -> &Liezation<S> {
        &self.liezation
    }

    pub fn tower(&self) -> &FreeLieTower<S> {
        &self.tower
    }

    /// `[dim g_Lie, dim F^1, .., dim F^N]`.
    pub fn component_dims(&self) -> Vec<usize> {
        let mut d = vec![self.liezation.complement.len()];
        d.extend(self.tower.dims());
        d
    }

    fn lie_bracket(&self, a: usize, b: usize) -> SparseVec<S> {
        let q = &self.liezation.algebra;
        q.bracket_basis(a, b).iter().cloned().collect()
    }

    /// Action of `e_k ∈ g` on `F^n`.
    pub fn action_matrix(&self, k: usize, n: usize) -> &SparseMatrix<S> {
        &self.actions[k][n - 1]
    }

    /// `(x, y)` on basis elements `(component, index)`; zero above the truncation.
    fn basis_bracket(
        &self,
        (p, i): (usize, usize),
        (q, j): (usize, usize),
    ) -> Option<(usize, SparseVec<S>)> {
        if p + q > self.max_degree {
            return None;
        }
        let v = match (p, q) {
            (0, 0) => self.lie_bracket(i, j),
            (0, _) => self.actions[self.liezation.complement[i]][q - 1].column(j),
            (_, 0) => {
                let v = self.actions[self.liezation.complement[j]][p - 1].column(i);
                crate::linalg::scale(&v, &-S::one())
            }
            _ => self.commutators[&(p, i, q, j)].clone(),
        };
        Some((p + q, v))
    }

    /// The graded Lie bracket, truncated at `F^N`.
    pub fn bracket(&self, x: &DrElement<S>, y: &DrElement<S>) -> DrElement<S> {
        let mut out = DrElement::zero(self.max_degree);
        for (p, xp) in x.parts.iter().enumerate() {
            for (q, yq) in y.parts.iter().enumerate() {
                for (&i, a) in xp {
                    for (&j, b) in yq {
                        if let Some((n, v)) = self.basis_bracket((p, i), (q, j)) {
                            add_scaled(&mut out.parts[n], &(a.clone() * b.clone()), &v);
                        }
                    }
                }
            }
        }
        out
    }

    /// The differential: augmentation on `F^1`, `∂` on `F^{>=2}`, zero on `g_Lie`.
    pub fn d(&self, x: &DrElement<S>) -> DrElement<S> {
        let mut out = DrElement::zero(self.max_degree);
        for n in 1..=self.max_degree {
            if x.parts[n].is_empty() {
                continue;
            }
            let image = if n == 1 {
                self.augmentation.apply(&x.parts[1])
            } else {
                self.boundaries[n - 2].apply(&x.parts[n])
            };
            add_scaled(&mut out.parts[n - 1], &S::one(), &image);
        }
        out
    }

    /// Basis elements as `(component, index)` with `component` the F-length.
    fn basis(&self) -> Vec<(usize, usize)> {
        self.component_dims()
            .iter()
            .enumerate()
            .flat_map(|(n, &d)| (0..d).map(move |i| (n, i)))
            .collect()
    }

    fn element(&self, (n, i): (usize, usize)) -> DrElement<S> {
        DrElement::basis(self.max_degree, n, i)
    }

    fn label(&self, (n, i): (usize, usize)) -> String {
        if n == 0 {
            let q = &self.liezation.algebra;
            format!("g_Lie:{}", q.basis_names()[i])
        } else {
            let w = &self.tower.slice(n).words()[i].0;
            let letters: Vec<String> = w.iter().map(|l| (l + 1).to_string()).collect();
            format!("F{n}:{{{}}}", letters.join(","))
        }
    }

    fn sum(&self, terms: &[(S, DrElement<S>)]) -> DrElement<S> {
        let mut out = DrElement::zero(self.max_degree);
        for (c, e) in terms {
            out.add_scaled(c, e);
        }
        out
    }

    /// Runs every identity over all basis tuples that stay within the truncation.
    pub fn verify(&self, algebra: &LeibnizAlgebra<S>) -> DrSuiteReport {
        let n_max = self.max_degree;
        let basis = self.basis();
        let one = S::one();
        let mut antisym = new_check("graded_antisymmetry");
        let mut jacobi = new_check("graded_jacobi");
        let mut derivation = new_check("d_derivation");
        let mut d_squared = new_check("d_squared");
        let mut derived = new_check("derived_bracket");
        let mut ll1 = new_check("ll1");
        let mut ll2 = new_check("ll2_odd");
        let mut action = new_check("action_kills_ideal");

        for &x in &basis {
            let ex = self.element(x);
            let dd = self.d(&self.d(&ex));
            record(&mut d_squared, dd.is_zero(), || self.label(x));
            for &y in &basis {
                if x.0 + y.0 > n_max {
                    continue;
                }
                let ey = self.element(y);
                let xy = self.bracket(&ex, &ey);
                // (x,y) = −(−1)^{|x||y|}(y,x)
                let yx = self.bracket(&ey, &ex);
                let ok = xy == self.sum(&[(-S::sign(x.0 * y.0), yx)]);
                record(&mut antisym, ok, || {
                    format!("{}, {}", self.label(x), self.label(y))
                });
                // D(x,y) = (Dx,y) + (−1)^{|x|}(x,Dy)
                let lhs = self.d(&xy);
                let rhs = self.sum(&[
                    (one.clone(), self.bracket(&self.d(&ex), &ey)),
                    (S::sign(x.0), self.bracket(&ex, &self.d(&ey))),
                ]);
                record(&mut derivation, lhs == rhs, || {
                    format!("{}, {}", self.label(x), self.label(y))
                });
                for &z in &basis {
                    if x.0 + y.0 + z.0 > n_max {
                        continue;
                    }
                    let ez = self.element(z);
                    let lhs = self.bracket(&ex, &self.bracket(&ey, &ez));
                    let rhs = self.sum(&[
                        (one.clone(), self.bracket(&xy, &ez)),
                        (
                            S::sign(x.0 * y.0),
                            self.bracket(&ey, &self.bracket(&ex, &ez)),
                        ),
                    ]);
                    record(&mut jacobi, lhs == rhs, || {
                        format!("{}, {}, {}", self.label(x), self.label(y), self.label(z))
                    });
                }
            }
        }

        // Derived bracket and Lie–Leibniz identities on degree −1 generators.
        let m = algebra.dim();
        let gen = |k: usize| {
            let mut e = DrElement::zero(n_max);
            e.parts[1] = self.tower.slice(1).coords_of_word(&[k]);
            e
        };
        let derived_bracket = |u: &DrElement<S>, v: &DrElement<S>| self.bracket(&self.d(u), v);
        for i in 0..m {
            for j in 0..m {
                let (xi, xj) = (gen(i), gen(j));
                let mut expected = DrElement::zero(n_max);
                for (k, c) in algebra.bracket_basis(i, j) {
                    expected.add_scaled(c, &gen(*k));
                }
                let xij = derived_bracket(&xi, &xj);
                record(&mut derived, xij == expected, || {
                    format!("({}, {})", i + 1, j + 1)
                });
                for k in 0..m {
                    let xk = gen(k);
                    let w = || format!("({}, {}, {})", i + 1, j + 1, k + 1);
                    // [x1,(x2,x3)] = ([x1,x2],x3) + (x2,[x1,x3])
                    let lhs = derived_bracket(&xi, &self.bracket(&xj, &xk));
                    let rhs = self.sum(&[
                        (one.clone(), self.bracket(&xij, &xk)),
                        (one.clone(), self.bracket(&xj, &derived_bracket(&xi, &xk))),
                    ]);
                    record(&mut ll1, lhs == rhs, w);
                    // [(x1,x2),x3] = ([x1,x2]+[x2,x1],x3)
                    let lhs = derived_bracket(&self.bracket(&xi, &xj), &xk);
                    let sym = self.sum(&[
                        (one.clone(), xij.clone()),
                        (one.clone(), derived_bracket(&xj, &xi)),
                    ]);
                    let rhs = self.bracket(&sym, &xk);
                    record(&mut ll2, lhs == rhs, w);
                }
            }
        }

        // [x,y]+[y,x] acts by zero on every F^n.
        for i in 0..m {
            for j in i..m {
                let mut gen_i = SparseVec::new();
                for (k, c) in algebra
                    .bracket_basis(i, j)
                    .iter()
                    .chain(algebra.bracket_basis(j, i))
                {
                    add_scaled(&mut gen_i, c, &SparseVec::from([(*k, one.clone())]));
                }
                for n in 1..=n_max {
                    let ok = (0..self.tower.slice(n).len()).all(|col| {
                        let mut image = SparseVec::new();
                        for (k, c) in &gen_i {
                            add_scaled(&mut image, c, &self.actions[*k][n - 1].column(col));
                        }
                        image.is_empty()
                    });
                    record(&mut action, ok, || {
                        format!("[e{a},e{b}]+[e{b},e{a}] on F{n}", a = i + 1, b = j + 1)
                    });
                }
            }
        }

        DrSuiteReport {
            max_degree: n_max,
            component_dims: self.component_dims(),
            checks: vec![
                antisym, jacobi, derivation, d_squared, derived, ll1, ll2, action,
            ],
        }
    }
}

fn new_check(name: &str) -> CheckOutcome {
    CheckOutcome::new(name)
}

fn record(c: &mut CheckOutcome, ok: bool, witness: impl FnOnce() -> String) {
    c.record(ok, witness);
}

/// Outcome of [`DrPresentation::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrSuiteReport {
    pub max_degree: usize,
    /// `[dim g_Lie, dim F^1, .., dim F^N]`.
    pub component_dims: Vec<usize>,
    pub checks: Vec<CheckOutcome>,
}

impl DrSuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}
