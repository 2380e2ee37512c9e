//! Exact verifications of the identities satisfied by `∂` and `∂_L`.

use std::fmt::Write as _;

use super::{d_bracket_word, loday_apply, loday_boundary, FreeLieComplex};
use crate::algebra::LeibnizAlgebra;
use crate::error::Result;
use crate::free_lie::{all_words, epsilon_word, super_commutator, TensorElement};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Result of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Number of instances compared.
    pub checked: usize,
    /// First failing instance, 1-based indices.
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub(crate) fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            checked: 0,
            witness: None,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }
}

fn one_based(w: &[usize]) -> String {
    let mut s = String::from("(");
    for (i, x) in w.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", x + 1);
    }
    s.push(')');
    s
}

/// `∂_{n−1} ∘ ∂_n = 0` for `3 <= n <= N`.
pub fn check_d_squared<S: Scalar>(cx: &FreeLieComplex<'_, S>) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("d_squared");
    for n in 3..=cx.max_degree() {
        let prod = cx.boundary(n - 1)?.matrix.mul(&cx.boundary(n)?.matrix);
        out.record(prod.is_zero(), || format!("degree {n}"));
    }
    Ok(out)
}

/// `∂_L ∘ ∂_L = 0` on words of length `3..=N`.
pub fn check_loday_squared<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    max_degree: usize,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("loday_squared");
    for n in 3..=max_degree {
        let prod = loday_boundary(a, n - 1)?
            .matrix
            .mul(&loday_boundary(a, n)?.matrix);
        out.record(prod.is_zero(), || format!("degree {n}"));
    }
    Ok(out)
}

/// The two printed forms of `∂` agree as matrices.
pub fn check_boundary_alt<S: Scalar>(cx: &FreeLieComplex<'_, S>) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("boundary_alt");
    for n in 2..=cx.max_degree() {
        let ok = cx.boundary(n)? == cx.boundary_alt(n)?;
        out.record(ok, || format!("degree {n}"));
    }
    Ok(out)
}

/// `∂_L ε(b) = ε(∂ b)` for every basis bracket word of length `2..=N`.
pub fn check_subcomplex<S: Scalar>(cx: &FreeLieComplex<'_, S>) -> Result<CheckOutcome> {
    let a = cx.algebra();
    let mut out = CheckOutcome::new("subcomplex");
    for n in 2..=cx.max_degree() {
        for b in cx.slice(n).words() {
            let lhs = loday_apply(a, &epsilon_word(&b.0));
            let rhs = d_bracket_word(a, &b.0).epsilon();
            out.record(lhs == rhs, || one_based(&b.0));
        }
    }
    Ok(out)
}

/// `∂_L({x₂..x_n} ⊗ x₁) = (∂_L{x₂..x_n}) ⊗ x₁` for all words of length `3..=N`.
///
/// At length 2 the bracket has a single letter and the identity fails:
/// `∂_L(x₂ ⊗ x₁) = [x₂,x₁]`.
pub fn check_right_lemma<S: Scalar>(a: &LeibnizAlgebra<S>, max_degree: usize) -> CheckOutcome {
    let m = a.dim();
    let mut out = CheckOutcome::new("right_lemma");
    for n in 3..=max_degree {
        for w in all_words(m, n) {
            let (x1, rest) = (w[0], &w[1..]);
            let x = TensorElement::letter(x1);
            let inner = epsilon_word::<S>(rest);
            let lhs = loday_apply(a, &inner.tensor(&x));
            let rhs = loday_apply(a, &inner).tensor(&x);
            out.record(lhs == rhs, || one_based(&w));
        }
    }
    out
}

/// `∂_L(x₁ ⊗ {x₂..x_n}) = Σ_i {x₂..[x₁,x_i]..x_n} − x₁ ⊗ ∂_L{x₂..x_n}`.
pub fn check_left_lemma<S: Scalar>(a: &LeibnizAlgebra<S>, max_degree: usize) -> CheckOutcome {
    let m = a.dim();
    let mut out = CheckOutcome::new("left_lemma");
    for n in 2..=max_degree {
        for w in all_words(m, n) {
            let (x1, rest) = (w[0], &w[1..]);
            let x = TensorElement::letter(x1);
            let inner = epsilon_word::<S>(rest);
            let lhs = loday_apply(a, &x.tensor(&inner));
            let mut rhs = x.tensor(&loday_apply(a, &inner)).scaled(&-S::one());
            for i in 0..rest.len() {
                for (k, c) in a.bracket_basis(x1, rest[i]) {
                    let mut nw = rest.to_vec();
                    nw[i] = *k;
                    rhs.add_scaled(c, &epsilon_word(&nw));
                }
            }
            out.record(lhs == rhs, || one_based(&w));
        }
    }
    out
}

/// `∂(α₁,α₂) = (∂α₁,α₂) + (−1)^p (α₁,∂α₂)` for basis elements of
/// `F^p`, `F^q` with `p, q >= 2` and `p + q <= N`.
pub fn check_almost_derivation<S: Scalar>(cx: &FreeLieComplex<'_, S>) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("almost_derivation");
    let n_max = cx.max_degree();
    let img = |n: usize, v: &SparseVec<S>| cx.slice(n).expand(v);
    for p in 2..=n_max {
        for q in 2..=n_max.saturating_sub(p) {
            let dp = cx.boundary(p)?;
            let dq = cx.boundary(q)?;
            let dpq = cx.boundary(p + q)?;
            for (i, b1) in cx.slice(p).words().iter().enumerate() {
                for (j, b2) in cx.slice(q).words().iter().enumerate() {
                    let e1 = epsilon_word::<S>(&b1.0);
                    let e2 = epsilon_word::<S>(&b2.0);
                    let bracket = super_commutator(&e1, &e2)?;
                    let coords = cx.slice(p + q).coords(&bracket)?;
                    let lhs = img(p + q - 1, &dpq.matrix.apply(&coords));
                    let d1 = img(p - 1, &dp.matrix.column(i));
                    let d2 = img(q - 1, &dq.matrix.column(j));
                    let mut rhs = super_commutator(&d1, &e2)?;
                    rhs.add_scaled(&S::sign(p), &super_commutator(&e1, &d2)?);
                    out.record(lhs == rhs, || {
                        format!("{} , {}", one_based(&b1.0), one_based(&b2.0))
                    });
                }
            }
        }
    }
    Ok(out)
}
