//! The tensor algebra over `g[1]` and the free graded Lie algebra inside it.
//!
//! Every generator is odd, so the Koszul parity of a word is its length mod 2.
//! Lie elements are kept as combinations of right-normalized bracket words
//! and compared through their commutator expansion [`epsilon`].

mod dual;

pub use dual::{
    contraction, cyclic_sum, dual_lie_bracket, recovered_bracket, structure_tensors, DualTensor,
    StructureTensors,
};

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A word in the generators, letters 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Base-`m` index with the first letter most significant.
    pub fn index(&self, m: usize) -> usize {
        word_index(&self.0, m)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

pub fn word_index(w: &[usize], m: usize) -> usize {
    w.iter().fold(0, |acc, &l| acc * m + l)
}

pub fn index_word(mut idx: usize, len: usize, m: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = idx % m;
        idx /= m;
    }
    w
}

/// All `m^n` words of length `n`, lexicographically.
pub fn all_words(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = m.pow(n as u32);
    (0..count).map(move |i| index_word(i, n, m))
}

/// A finite linear combination of words.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for TensorElement<S> {
    fn default() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: &[usize]) -> Self {
        Self::term(w, S::one())
    }

    pub fn term(w: &[usize], c: S) -> Self {
        let mut t = Self::zero();
        t.add_term(Word(w.to_vec()), c);
        t
    }

    pub fn letter(i: usize) -> Self {
        Self::word(&[i])
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let cur = std::mem::replace(e, S::zero());
                let sum = cur + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &TensorElement<S>) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c.clone() * x.clone());
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut t = Self::zero();
        t.add_scaled(c, self);
        t
    }

    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    pub fn coefficient(&self, w: &[usize]) -> S {
        self.terms
            .get(&Word(w.to_vec()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` if every term has length `n`; zero counts as homogeneous of any length.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_length().is_some()
    }

    /// Concatenation product `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElement<S>) -> Self {
        let mut t = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                t.add_term(a.concat(b), x.clone() * y.clone());
            }
        }
        t
    }

    /// Dense coordinates in the `m^n` word basis of a homogeneous length-`n` tensor.
    pub fn to_sparse_index(&self, m: usize) -> crate::linalg::SparseVec<S> {
        self.terms
            .iter()
            .map(|(w, c)| (w.index(m), c.clone()))
            .collect()
    }

    pub fn from_sparse_index(v: &crate::linalg::SparseVec<S>, len: usize, m: usize) -> Self {
        let mut t = Self::zero();
        for (&i, c) in v {
            t.add_term(Word(index_word(i, len, m)), c.clone());
        }
        t
    }

    /// Ordered term list: words lexicographic, 1-based letters, rationals as strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!([w.0.iter().map(|l| l + 1).collect::<Vec<_>>(), c.to_string()]))
                .collect(),
        )
    }
}

impl<S: Scalar> fmt::Display for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})·{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Graded commutator `a⊗b − (−1)^{pq} b⊗a` of homogeneous tensors of lengths `p`, `q`.
pub fn super_commutator<S: Scalar>(
    a: &TensorElement<S>,
    b: &TensorElement<S>,
) -> Result<TensorElement<S>> {
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return Err(Error::InvalidInput(
            "super-commutator needs homogeneous arguments".into(),
        ));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(TensorElement::zero());
    }
    let p = a.homogeneous_length().unwrap_or(0);
    let q = b.homogeneous_length().unwrap_or(0);
    let mut t = a.tensor(b);
    t.add_scaled(&-S::sign(p * q), &b.tensor(a));
    Ok(t)
}

/// Commutator expansion of the right-normalized bracket `{x1,...,xn}`:
/// `x1 ⊗ {x2..xn} − (−1)^{n−1} {x2..xn} ⊗ x1`.
pub fn epsilon_word<S: Scalar>(w: &[usize]) -> TensorElement<S> {
    match w.len() {
        0 => TensorElement::zero(),
        1 => TensorElement::word(w),
        n => {
            let rest = epsilon_word::<S>(&w[1..]);
            let head = TensorElement::letter(w[0]);
            let mut t = head.tensor(&rest);
            t.add_scaled(&-S::sign(n - 1), &rest.tensor(&head));
            t
        }
    }
}

/// A right-normalized bracket word `{e_{i1}, (e_{i2}, (..., e_{in}))}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketWord(pub Vec<usize>);

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Element of the free Lie algebra on `g[1]`, as a combination of bracket
/// words. Bracket words span but are not independent; equality is equality
/// of commutator expansions.
#[derive(Clone, Debug)]
pub struct LieElement<S> {
    terms: BTreeMap<BracketWord, S>,
}

impl<S: Scalar> Default for LieElement<S> {
    fn default() -> Self {
        LieElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> LieElement<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn bracket(w: &[usize]) -> Self {
        let mut l = Self::zero();
        l.add_term(BracketWord(w.to_vec()), S::one());
        l
    }

    pub fn add_term(&mut self, w: BracketWord, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(S::zero);
        let cur = std::mem::replace(e, S::zero());
        *e = cur + c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &LieElement<S>) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c.clone() * x.clone());
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut l = Self::zero();
        l.add_scaled(c, self);
        l
    }

    pub fn terms(&self) -> &BTreeMap<BracketWord, S> {
        &self.terms
    }

    /// Commutator expansion into the tensor algebra.
    pub fn epsilon(&self) -> TensorElement<S> {
        epsilon(self)
    }
}

impl<S: Scalar> PartialEq for LieElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.epsilon() == other.epsilon()
    }
}

/// Linear extension of [`epsilon_word`].
pub fn epsilon<S: Scalar>(x: &LieElement<S>) -> TensorElement<S> {
    let mut t = TensorElement::zero();
    for (w, c) in &x.terms {
        t.add_scaled(c, &epsilon_word(&w.0));
    }
    t
}

/// Higher bracketing `x1⊗...⊗xn ↦ {x1,...,xn}`, extended linearly.
pub fn higher_bracketing<S: Scalar>(t: &TensorElement<S>) -> LieElement<S> {
    let mut l = LieElement::zero();
    for (w, c) in t.terms() {
        l.add_term(BracketWord(w.0.clone()), c.clone());
    }
    l
}
