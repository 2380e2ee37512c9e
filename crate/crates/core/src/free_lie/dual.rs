//! Dual Lie brackets, contractions, and the structure tensors of a double.

use std::collections::BTreeMap;

use super::{TensorElement, Word};
use crate::algebra::{BilinearForm, LeibnizAlgebra};
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `{x¹..xⁿ}_* = x¹ ⊗ {x²..xⁿ}_* − (−1)^{n−1} xⁿ ⊗ {x¹..x^{n−1}}_*`.
///
/// The empty word is the scalar `1`.
pub fn dual_lie_bracket<S: Scalar>(w: &[usize]) -> TensorElement<S> {
    match w.len() {
        0 => TensorElement::term(&[], S::one()),
        1 => TensorElement::word(w),
        n => {
            let mut t = TensorElement::letter(w[0]).tensor(&dual_lie_bracket(&w[1..]));
            let tail = TensorElement::letter(w[n - 1]).tensor(&dual_lie_bracket(&w[..n - 1]));
            t.add_scaled(&-S::sign(n - 1), &tail);
            t
        }
    }
}

/// A tensor together with, when known, its expression `Σ c_w {w}_*`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualTensor<S> {
    expression: Option<BTreeMap<Word, S>>,
    expansion: TensorElement<S>,
}

impl<S: Scalar> DualTensor<S> {
    pub fn zero() -> Self {
        DualTensor {
            expression: Some(BTreeMap::new()),
            expansion: TensorElement::zero(),
        }
    }

    /// `Σ c {w}_*`; repeated words accumulate.
    pub fn from_brackets<I: IntoIterator<Item = (Vec<usize>, S)>>(terms: I) -> Self {
        let mut t = Self::zero();
        for (w, c) in terms {
            t.add_bracket(&w, c);
        }
        t
    }

    /// A bare tensor; contraction is unavailable.
    pub fn from_expansion(expansion: TensorElement<S>) -> Self {
        DualTensor {
            expression: None,
            expansion,
        }
    }

    pub fn add_bracket(&mut self, w: &[usize], c: S) {
        if c.is_zero() {
            return;
        }
        self.expansion.add_scaled(&c, &dual_lie_bracket(w));
        if let Some(expr) = self.expression.as_mut() {
            let key = Word(w.to_vec());
            let cur = expr.remove(&key).unwrap_or_else(S::zero) + c;
            if !cur.is_zero() {
                expr.insert(key, cur);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &DualTensor<S>) {
        match &other.expression {
            Some(expr) if self.expression.is_some() => {
                for (w, x) in expr {
                    self.add_bracket(&w.0, c.clone() * x.clone());
                }
            }
            _ => {
                self.expression = None;
                self.expansion.add_scaled(c, &other.expansion);
            }
        }
    }

    pub fn expression(&self) -> Option<&BTreeMap<Word, S>> {
        self.expression.as_ref()
    }

    pub fn expansion(&self) -> &TensorElement<S> {
        &self.expansion
    }

    pub fn is_zero(&self) -> bool {
        self.expansion.is_zero()
    }

    /// The coefficient of the empty word, for fully contracted tensors.
    pub fn scalar_part(&self) -> S {
        self.expansion.coefficient(&[])
    }
}

/// `i_f{x¹..xⁿ}_* = f(x¹){x²..xⁿ}_* − (−1)^{n−1} f(xⁿ){x¹..x^{n−1}}_*`;
/// for `n = 1` the result is the scalar `f(x¹)`.
pub fn contraction<S: Scalar>(f: &[S], t: &DualTensor<S>) -> Result<DualTensor<S>> {
    let expr = t.expression().ok_or(Error::MissingDualExpression)?;
    let mut out = DualTensor::zero();
    for (w, c) in expr {
        let w = &w.0;
        let n = w.len();
        if n == 0 {
            return Err(Error::InvalidInput("cannot contract a scalar".into()));
        }
        let at = |i: usize| {
            f.get(w[i]).cloned().ok_or_else(|| {
                Error::ShapeMismatch(format!("functional has no value on letter {}", w[i] + 1))
            })
        };
        out.add_bracket(&w[1..], c.clone() * at(0)?);
        if n > 1 {
            out.add_bracket(&w[..n - 1], -S::sign(n - 1) * c.clone() * at(n - 1)?);
        }
    }
    Ok(out)
}

/// `Σ_{r<n} ρ^r t` with `ρ(x¹..xⁿ) = ±(xⁿ, x¹, .., x^{n−1})`, the sign being
/// `(−1)^{n−1}` when `signed`.
pub fn cyclic_sum<S: Scalar>(t: &TensorElement<S>, signed: bool) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (w, c) in t.terms() {
        let n = w.len();
        let mut cur = w.0.clone();
        let mut sign = S::one();
        for _ in 0..n.max(1) {
            out.add_term(Word(cur.clone()), sign.clone() * c.clone());
            if n > 0 {
                cur.rotate_right(1);
            }
            if signed {
                sign = sign * S::sign(n.saturating_sub(1));
            }
        }
    }
    out
}

/// The Cartan 3-form and the Leibniz structure tensors of a double
/// `g ⊕ g*`, on the alphabet `e_1..e_m, e^1..e^m` (letters `0..2m`).
#[derive(Clone, Debug)]
pub struct StructureTensors<S> {
    /// `C(x,y,z) = ω([x,y],z)` on the whole double.
    pub cartan: Cochain<S>,
    /// `μ = Σ C_{ij}^k {e^i, e^j, e_k}_*`.
    pub mu: DualTensor<S>,
    /// `θ = μ + (1/3) Σ H_{ijk} {e^i, e^j, e^k}_*`.
    pub theta: DualTensor<S>,
}

impl<S: Scalar> StructureTensors<S> {
    /// `C_{ij}^k = ω([e_i,e_j], e^k)` for base indices.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        let m = self.cartan.dim() / 2;
        self.cartan.value(&[i, j, m + k])
    }
}

pub fn structure_tensors<S: Scalar>(
    d: &LeibnizAlgebra<S>,
    omega: &BilinearForm<S>,
    h: Option<&Cochain<S>>,
) -> Result<StructureTensors<S>> {
    let n = d.dim();
    if omega.dim() != n || !n.is_multiple_of(2) {
        return Err(Error::ShapeMismatch(format!(
            "double of dimension {n} with a form of dimension {}",
            omega.dim()
        )));
    }
    let m = n / 2;
    if let Some(h) = h {
        if h.dim() != m || h.degree() != 2 {
            return Err(Error::ShapeMismatch(format!(
                "twist must be a degree-2 cochain on dimension {m}"
            )));
        }
    }
    let cartan = Cochain::from_fn(n, 2, |w| {
        omega.eval(&d.bracket(&d.unit(w[0]), &d.unit(w[1])), &d.unit(w[2]))
    });
    let mut mu = DualTensor::zero();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                mu.add_bracket(&[m + i, m + j, k], cartan.value(&[i, j, m + k]).clone());
            }
        }
    }
    let mut theta = mu.clone();
    if let Some(h) = h {
        let third = S::one() / S::from_int(3);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    theta.add_bracket(
                        &[m + i, m + j, m + k],
                        third.clone() * h.value(&[i, j, k]).clone(),
                    );
                }
            }
        }
    }
    Ok(StructureTensors { cartan, mu, theta })
}

/// `i_{f₂} i_{f₁} μ` for `f_x = ω(·, x)`, read back as a vector of the double.
pub fn recovered_bracket<S: Scalar>(
    omega: &BilinearForm<S>,
    mu: &DualTensor<S>,
    x1: &[S],
    x2: &[S],
) -> Result<Vec<S>> {
    let n = omega.dim();
    let functional = |x: &[S]| -> Vec<S> {
        (0..n)
            .map(|l| {
                let mut e = vec![S::zero(); n];
                e[l] = S::one();
                omega.eval(&e, x)
            })
            .collect()
    };
    let once = contraction(&functional(x1), mu)?;
    let twice = contraction(&functional(x2), &once)?;
    let mut out = vec![S::zero(); n];
    for (w, c) in twice.expansion().terms() {
        if w.len() != 1 {
            return Err(Error::Internal(
                "double contraction left a non-linear term".into(),
            ));
        }
        out[w.0[0]] = c.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{canonical_omega, double, ExtensionDatum};
    use crate::catalog;
    use crate::Rational as Q;

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    fn t(terms: &[(&[usize], i64)]) -> TensorElement<Q> {
        let mut e = TensorElement::zero();
        for (w, c) in terms {
            e.add_term(Word(w.to_vec()), q(*c));
        }
        e
    }

    #[test]
    fn small_dual_brackets() {
        assert_eq!(dual_lie_bracket::<Q>(&[0]), t(&[(&[0], 1)]));
        assert_eq!(
            dual_lie_bracket::<Q>(&[0, 1]),
            t(&[(&[0, 1], 1), (&[1, 0], 1)])
        );
        assert_eq!(
            dual_lie_bracket::<Q>(&[0, 1, 2]),
            t(&[
                (&[0, 1, 2], 1),
                (&[0, 2, 1], 1),
                (&[2, 0, 1], -1),
                (&[2, 1, 0], -1)
            ])
        );
    }

    #[test]
    fn contraction_cases() {
        let f = vec![q(2), q(3), q(5)];
        let g = vec![q(7), q(11), q(13)];
        let x1 = DualTensor::from_brackets([(vec![0], q(1))]);
        assert_eq!(contraction(&f, &x1).unwrap().scalar_part(), q(2));
        let x12 = DualTensor::from_brackets([(vec![0, 1], q(1))]);
        let once = contraction(&f, &x12).unwrap();
        assert_eq!(*once.expansion(), t(&[(&[1], 2), (&[0], 3)]));
        let twice = contraction(&g, &once).unwrap();
        assert_eq!(twice.scalar_part(), q(2 * 11 + 3 * 7));
        let bare = DualTensor::from_expansion(dual_lie_bracket::<Q>(&[0, 1]));
        assert_eq!(contraction(&f, &bare), Err(Error::MissingDualExpression));
    }

    #[test]
    fn signed_cyclic_sum_small_arity() {
        for n in 2..=3 {
            let w: Vec<usize> = (0..n).collect();
            assert!(
                cyclic_sum(&dual_lie_bracket::<Q>(&w), true).is_zero(),
                "n = {n}"
            );
        }
        assert!(!cyclic_sum(&dual_lie_bracket::<Q>(&[0, 1]), false).is_zero());
    }

    #[test]
    fn l2_double_constants() {
        let (d, _) = double(&ExtensionDatum::untwisted(catalog::l2::<Q>())).unwrap();
        let omega = canonical_omega(2).unwrap();
        let st = structure_tensors(&d, &omega, None).unwrap();
        assert_eq!(*st.structure_constant(0, 0, 1), q(1));
        assert_eq!(*st.structure_constant(0, 1, 1), q(0));
    }

    #[test]
    fn abelian_double_has_zero_tensors() {
        let (d, _) = double(&ExtensionDatum::untwisted(catalog::abelian::<Q>(2))).unwrap();
        let st = structure_tensors(&d, &canonical_omega(2).unwrap(), None).unwrap();
        assert!(st.cartan.is_zero());
        assert!(st.mu.is_zero());
    }
}
