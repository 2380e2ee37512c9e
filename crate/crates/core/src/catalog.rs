//! Built-in algebras.

use crate::algebra::{double, ExtensionDatum, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const NAMES: &[&str] = &[
    "abelian1", "abelian2", "abelian3", "abelian4", "L2", "N3", "B1", "sl2", "heis3", "doubleL2",
];

/// Every catalog entry that satisfies the Leibniz identity (all but `B1`).
pub const LEIBNIZ_NAMES: &[&str] = &[
    "abelian1", "abelian2", "abelian3", "abelian4", "L2", "N3", "sl2", "heis3", "doubleL2",
];

pub fn by_name<S: Scalar>(name: &str) -> Result<LeibnizAlgebra<S>> {
    let a = match name {
        "abelian1" => abelian(1),
        "abelian2" => abelian(2),
        "abelian3" => abelian(3),
        "abelian4" => abelian(4),
        "L2" => l2(),
        "N3" => n3(),
        "B1" => b1(),
        "sl2" => sl2(),
        "heis3" => heis3(),
        "doubleL2" => double_l2(),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown catalog algebra '{other}'"
            )))
        }
    };
    Ok(a)
}

type Entry = (usize, usize, &'static [(usize, i64)]);

fn build<S: Scalar>(name: &str, dim: usize, brackets: &[Entry]) -> LeibnizAlgebra<S> {
    let entries: Vec<_> = brackets
        .iter()
        .map(|(i, j, v)| {
            (
                *i,
                *j,
                v.iter().map(|(k, c)| (*k, S::from_int(*c))).collect(),
            )
        })
        .collect();
    LeibnizAlgebra::from_brackets(name, dim, &entries).expect("catalog entry is well-formed")
}

fn checked<S: Scalar>(a: LeibnizAlgebra<S>) -> LeibnizAlgebra<S> {
    a.validated().expect("catalog entry is Leibniz")
}

pub fn abelian<S: Scalar>(dim: usize) -> LeibnizAlgebra<S> {
    checked(LeibnizAlgebra::zero_product(format!("abelian{dim}"), dim).expect("dim >= 1"))
}

/// `[e1, e1] = e2`.
pub fn l2<S: Scalar>() -> LeibnizAlgebra<S> {
    checked(build("L2", 2, &[(0, 0, &[(1, 1)])]))
}

/// `[e1, e1] = e2`, `[e1, e2] = e3`.
pub fn n3<S: Scalar>() -> LeibnizAlgebra<S> {
    checked(build("N3", 3, &[(0, 0, &[(1, 1)]), (0, 1, &[(2, 1)])]))
}

/// `[e1, e1] = e1`; not Leibniz.
pub fn b1<S: Scalar>() -> LeibnizAlgebra<S> {
    build("B1", 1, &[(0, 0, &[(0, 1)])])
}

/// Basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`, antisymmetrized.
pub fn sl2<S: Scalar>() -> LeibnizAlgebra<S> {
    let a = build(
        "sl2",
        3,
        &[
            (0, 1, &[(1, 2)]),
            (1, 0, &[(1, -2)]),
            (0, 2, &[(2, -2)]),
            (2, 0, &[(2, 2)]),
            (1, 2, &[(0, 1)]),
            (2, 1, &[(0, -1)]),
        ],
    );
    checked(
        a.with_basis_names(vec!["h".into(), "e".into(), "f".into()])
            .expect("3 labels"),
    )
}

/// `[e1, e2] = −[e2, e1] = e3`.
pub fn heis3<S: Scalar>() -> LeibnizAlgebra<S> {
    checked(build("heis3", 3, &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])]))
}

/// `double(L2, H = 0)`.
pub fn double_l2<S: Scalar>() -> LeibnizAlgebra<S> {
    let (d, report) = double(&ExtensionDatum::untwisted(l2())).expect("L2 is Leibniz");
    assert!(report.passed());
    let names = d.basis_names().to_vec();
    let renamed =
        LeibnizAlgebra::new("doubleL2", names, d.constants().to_vec()).expect("same shape");
    checked(renamed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational as Q;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            let a = by_name::<Q>(n).unwrap();
            assert_eq!(a.name(), *n);
        }
        assert!(by_name::<Q>("so3").is_err());
    }

    #[test]
    fn leibniz_flags() {
        for n in LEIBNIZ_NAMES {
            assert!(by_name::<Q>(n).unwrap().is_validated(), "{n}");
        }
        assert!(!b1::<Q>().is_validated());
        assert!(b1::<Q>().require_leibniz().is_err());
        assert!(sl2::<Q>().is_lie());
        assert!(heis3::<Q>().is_lie());
        assert!(!l2::<Q>().is_lie());
    }
}
