mod common;

use common::q;
use leibcx::algebra::{
    canonical_omega, check_anti_invariance, double, validate_leibniz, ExtensionDatum,
};
use leibcx::catalog;
use leibcx::cochain::Cochain;
use leibcx::free_lie::{recovered_bracket, structure_tensors};
use leibcx::Rational as Q;

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| q((i == j) as i64)).collect()
}

#[test]
fn double_of_l2_brackets() {
    let d = catalog::double_l2::<Q>();
    let (e1, e2, u1, u2) = (0, 1, 2, 3);
    let br = |i, j| d.bracket(&unit(4, i), &unit(4, j));
    let neg = |i| unit(4, i).into_iter().map(|x| -x).collect::<Vec<_>>();
    let times = |c: i64, i| unit(4, i).into_iter().map(|x| x * q(c)).collect::<Vec<_>>();
    assert_eq!(br(e1, e1), unit(4, e2));
    assert_eq!(br(e1, u1), vec![q(0); 4]);
    assert_eq!(br(e1, u2), neg(u1));
    assert_eq!(br(u2, e1), times(2, u1));
    assert_eq!(br(u1, u2), vec![q(0); 4]);
}

#[test]
fn untwisted_doubles_of_the_catalog() {
    for name in catalog::LEIBNIZ_NAMES {
        let a = catalog::by_name::<Q>(name).unwrap();
        let (d, report) = double(&ExtensionDatum::untwisted(a.clone())).unwrap();
        assert!(report.passed(), "{name}");
        let omega = canonical_omega::<Q>(a.dim()).unwrap();
        assert!(
            check_anti_invariance(&d, &omega).unwrap().passed(),
            "{name}"
        );
    }
}

#[test]
fn twisted_double_of_l2() {
    let a = catalog::l2::<Q>();
    // H1–H2 on dimension 2: H(x,y,z) symmetric in (y,z) with zero cyclic sum.
    let h = Cochain::from_entries(
        2,
        2,
        &[
            (vec![0, 1, 1], q(2)),
            (vec![1, 0, 1], q(-1)),
            (vec![1, 1, 0], q(-1)),
        ],
    )
    .unwrap();
    let (d, report) = double(&ExtensionDatum {
        base: a.clone(),
        cocycle: h.clone(),
    })
    .unwrap();
    let omega = canonical_omega::<Q>(2).unwrap();
    assert!(check_anti_invariance(&d, &omega).unwrap().passed());
    assert_eq!(report.passed(), validate_leibniz(&d).passed());
    for w in [[0, 1, 1], [1, 0, 1], [1, 1, 0]] {
        let lhs = omega.eval(&d.bracket(&unit(4, w[0]), &unit(4, w[1])), &unit(4, w[2]));
        assert_eq!(lhs, h.value(&w).clone());
    }
}

#[test]
fn mu_recovers_the_double_l2_bracket() {
    let d = catalog::double_l2::<Q>();
    let omega = canonical_omega::<Q>(2).unwrap();
    let st = structure_tensors(&d, &omega, None).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = (unit(4, i), unit(4, j));
            let got = recovered_bracket(&omega, &st.mu, &x, &y).unwrap();
            assert_eq!(got, d.bracket(&x, &y), "({i}, {j})");
        }
    }
}

#[test]
fn cartan_form_is_the_lowered_bracket() {
    let d = catalog::double_l2::<Q>();
    let omega = canonical_omega::<Q>(2).unwrap();
    let st = structure_tensors(&d, &omega, None).unwrap();
    assert_eq!(*st.structure_constant(0, 0, 1), q(1));
    assert_eq!(st.mu.expression().unwrap().len(), 1);
    let h = Cochain::from_entries(2, 2, &[(vec![1, 1, 1], q(3))]).unwrap();
    let twisted = structure_tensors(&d, &omega, Some(&h)).unwrap();
    assert_eq!(twisted.theta.expression().unwrap().len(), 2);
    assert!(structure_tensors(&d, &omega, Some(&Cochain::zero(3, 2))).is_err());
}
