#![allow(dead_code)]

use leibcx::algebra::LeibnizAlgebra;
use leibcx::{Rational as Q, Scalar};
use proptest::prelude::*;

pub fn q(v: i64) -> Q {
    Q::from_int(v)
}

/// `g = ⟨e0⟩ ⊕ V` with `[e0,e0] = u`, `[e0,v] = Av`, all other brackets zero.
/// Left Leibniz for every `u` and `A`.
pub fn hemisemidirect(u: &[i64], a: &[Vec<i64>]) -> LeibnizAlgebra<Q> {
    let k = u.len();
    let mut brackets = vec![(
        0,
        0,
        u.iter().enumerate().map(|(i, x)| (i + 1, q(*x))).collect(),
    )];
    for j in 0..k {
        let column = a.iter().enumerate().map(|(i, row)| (i + 1, q(row[j])));
        brackets.push((0, j + 1, column.collect()));
    }
    LeibnizAlgebra::from_brackets("hsd", k + 1, &brackets).unwrap()
}

/// Random members of the hemisemidirect family of dimension 2 or 3.
pub fn leibniz_algebra() -> impl Strategy<Value = LeibnizAlgebra<Q>> {
    (1usize..=2)
        .prop_flat_map(|k| {
            (
                prop::collection::vec(-2i64..=2, k),
                prop::collection::vec(prop::collection::vec(-2i64..=2, k), k),
            )
        })
        .prop_map(|(u, a)| hemisemidirect(&u, &a))
}

pub fn coefficients(len: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-3i64..=3).prop_map(q), len)
}
