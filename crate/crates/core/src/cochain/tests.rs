use super::*;
use crate::catalog;
use crate::chain::{homology, Which};
use crate::Rational as Q;

fn q(v: i64) -> Q {
    Q::from_int(v)
}

fn symmetric_tau(m: usize, seed: i64) -> Cochain<Q> {
    Cochain::from_fn(m, 1, |w| {
        q((w[0] + w[1]) as i64 * seed + (w[0] * w[1]) as i64 - 1)
    })
}

#[test]
fn blp_on_a_zero_cochain_of_l2() {
    let a = catalog::l2::<Q>();
    let phi = Cochain::from_coeffs(2, 0, vec![q(0), q(1)]).unwrap();
    let b = blp(&a, &phi).unwrap();
    assert_eq!(*b.value(&[0, 0]), q(2));
    assert_eq!(b.entries(), vec![(vec![0, 0], q(2))]);
}

#[test]
fn blp_squares_to_zero() {
    for name in ["L2", "N3", "sl2", "heis3"] {
        let a = catalog::by_name::<Q>(name).unwrap();
        let max = if a.dim() == 2 { 4 } else { 3 };
        for n in 0..max {
            let prod = blp_matrix(&a, n + 1).mul(&blp_matrix(&a, n));
            assert!(prod.is_zero(), "{name}, n = {n}");
        }
    }
}

#[test]
fn blp_matrix_agrees_with_blp() {
    let a = catalog::n3::<Q>();
    let c = Cochain::from_fn(3, 1, |w| q(w[0] as i64 * 3 - w[1] as i64 + 1));
    let via_matrix = blp_matrix(&a, 1).apply(&c.to_vector());
    assert_eq!(blp(&a, &c).unwrap().to_vector(), via_matrix);
}

#[test]
fn blp_vanishes_on_abelian() {
    let a = catalog::abelian::<Q>(3);
    for n in 0..3 {
        assert!(blp_matrix(&a, n).is_zero());
    }
}

#[test]
fn blp_rejects_wrong_dimension() {
    let a = catalog::l2::<Q>();
    assert!(matches!(
        blp(&a, &Cochain::zero(3, 1)),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn dlp_example_on_l2() {
    // n = 1, f(e1) = e²: [e²,e1] = 2e¹, [e1,e²] = −e¹, f([e1,e1]) = f(e2) = 0.
    let a = catalog::l2::<Q>();
    let f = DualValuedCochain::unit(2, 1, &[0], 1);
    let df = dlp(&a, &f).unwrap();
    assert_eq!(df.value(&[0, 0]), &[q(1), q(0)]);
}

#[test]
fn zero_dual_cochain() {
    let a = catalog::n3::<Q>();
    let f = DualValuedCochain::<Q>::zero(3, 2);
    assert_eq!(dlp(&a, &f).unwrap(), DualValuedCochain::zero(3, 3));
    assert!(tilde(&f).unwrap().is_zero());
}

#[test]
fn tilde_intertwines_differentials() {
    for a in [catalog::l2::<Q>(), catalog::n3()] {
        let max = if a.dim() == 2 { 3 } else { 2 };
        for n in 0..=max {
            for f in DualValuedCochain::basis(a.dim(), n) {
                let lhs = blp(&a, &tilde(&f).unwrap()).unwrap();
                let rhs = tilde(&dlp(&a, &f).unwrap()).unwrap().scaled(&Q::sign(n));
                assert_eq!(lhs, rhs, "{}: n = {n}", a.name());
            }
        }
    }
}

#[test]
fn anti_cyclic_spaces_match_identities() {
    for m in 1..=3 {
        assert_eq!(anti_cyclic_space::<Q>(m, 1), symmetric_space(m), "m = {m}");
        assert_eq!(anti_cyclic_space::<Q>(m, 2), h1_h2_space(m), "m = {m}");
        assert_eq!(
            anti_cyclic_space::<Q>(m, 3),
            three_identity_space(m),
            "m = {m}"
        );
    }
}

#[test]
fn degree_one_anti_cyclic_means_symmetric() {
    let sym = Cochain::<Q>::from_coeffs(2, 1, vec![q(1), q(2), q(2), q(5)]).unwrap();
    let asym = Cochain::<Q>::from_coeffs(2, 1, vec![q(1), q(2), q(3), q(5)]).unwrap();
    assert!(is_anti_cyclic(&sym));
    assert!(!is_anti_cyclic(&asym));
}

#[test]
fn implicit_round_trip() {
    let tower = FreeLieTower::<Q>::new(3, 4);
    for n in 1..=4 {
        let slice = tower.slice(n);
        let coords = WordCoordinates::new(slice);
        for b in 0..slice.len() {
            let implicit: SparseVec<Q> = (0..slice.len())
                .filter(|&i| i <= b)
                .map(|i| (i, q(i as i64 + 1)))
                .collect();
            let c = coords.from_implicit(&implicit);
            assert!(is_anti_cyclic(&c));
            assert_eq!(to_implicit(&c, slice).unwrap(), implicit, "degree {n}");
        }
        let zero = from_implicit(&SparseVec::new(), slice);
        assert!(zero.is_zero());
        assert!(to_implicit(&zero, slice).unwrap().is_empty());
    }
}

#[test]
fn to_implicit_rejects_non_anti_cyclic() {
    let slice = crate::chain::build_basis::<Q>(2, 2);
    let c = Cochain::from_entries(2, 1, &[(vec![0, 1], q(1))]).unwrap();
    assert_eq!(to_implicit(&c, &slice), Err(Error::NotAntiCyclic));
}

#[test]
fn alp_dimension_equals_free_lie_dimension() {
    for m in 1..=2 {
        let dims = FreeLieTower::<Q>::new(m, 5).dims();
        for (n, d) in dims.iter().enumerate().take(5) {
            assert_eq!(anti_cyclic_space::<Q>(m, n).dim(), *d, "m = {m}, n = {n}");
        }
    }
    let dims = FreeLieTower::<Q>::new(3, 4).dims();
    for (n, d) in dims.iter().enumerate() {
        assert_eq!(anti_cyclic_space::<Q>(3, n).dim(), *d, "m = 3, n = {n}");
    }
}

#[test]
fn alp_subcomplex_on_catalog() {
    for name in ["abelian2", "L2", "sl2"] {
        let a = catalog::by_name::<Q>(name).unwrap();
        for n in 0..=2 {
            let r = alp_subcomplex_check(&a, n).unwrap();
            assert!(r.passed(), "{name}, n = {n}: {r:?}");
        }
    }
    assert!(alp_subcomplex_check(&catalog::l2::<Q>(), 3)
        .unwrap()
        .passed());
}

#[test]
fn cohomology_matches_homology() {
    for name in ["abelian2", "L2", "N3", "sl2", "heis3"] {
        let a = catalog::by_name::<Q>(name).unwrap();
        let co = cohomology(&a, 4).unwrap();
        let ho = homology(&a, 4, Which::Ha).unwrap();
        assert_eq!(co.ha, ho.ha.homology, "{name}");
        assert_eq!(co.alp_dims, ho.ha.chain_dims, "{name}");
    }
}

#[test]
fn low_cohomology_values() {
    assert_eq!(
        cohomology(&catalog::l2::<Q>(), 4).unwrap().ha,
        vec![1, 1, 0]
    );
    assert_eq!(
        cohomology(&catalog::sl2::<Q>(), 4).unwrap().ha,
        vec![3, 1, 0]
    );
    assert_eq!(
        cohomology(&catalog::heis3::<Q>(), 4).unwrap().ha,
        vec![3, 3, 3]
    );
    assert!(cohomology(&catalog::l2::<Q>(), 1).is_err());
    assert!(cohomology(&catalog::b1::<Q>(), 3).is_err());
}

#[test]
fn ha2_decomposition_dimensions() {
    let expected = [
        ("abelian2", 0, 2),
        ("L2", 1, 0),
        ("N3", 3, 0),
        ("heis3", 3, 3),
        ("sl2", 5, 0),
    ];
    for (name, b, c) in expected {
        let d = ha2_decomposition(&catalog::by_name::<Q>(name).unwrap()).unwrap();
        assert_eq!((d.coboundaries.dim(), d.complement.dim()), (b, c), "{name}");
    }
}

#[test]
fn zero_twist_is_trivial() {
    let a = catalog::heis3::<Q>();
    let class = classify_extension(&a, &Cochain::zero(3, 2)).unwrap();
    assert!(class.anti_cyclic && class.cocycle && class.double_is_leibniz && class.anti_invariant);
    assert_eq!(class.is_trivial(), Some(true));
    assert_eq!(class.ha2_dim, 3);
}

#[test]
fn coboundary_twist_is_trivial() {
    let a = catalog::l2::<Q>();
    let h = blp(&a, &symmetric_tau(2, 3)).unwrap();
    assert!(!h.is_zero());
    let class = classify_extension(&a, &h).unwrap();
    assert!(class.anti_cyclic && class.cocycle);
    assert_eq!(class.is_trivial(), Some(true));
    assert!(class.representative.unwrap().is_zero());
}

#[test]
fn heis3_classes_are_separated() {
    let a = catalog::heis3::<Q>();
    let d = ha2_decomposition(&a).unwrap();
    let reps: Vec<Cochain<Q>> = d
        .complement
        .vectors()
        .iter()
        .map(|v| Cochain::from_coeffs(3, 2, v.clone()).unwrap())
        .collect();
    let classes: Vec<_> = reps
        .iter()
        .map(|h| classify_extension(&a, h).unwrap())
        .collect();
    for (i, c) in classes.iter().enumerate() {
        let coords = c.coordinates.clone().unwrap();
        let expected: Vec<Q> = (0..3).map(|j| q((i == j) as i64)).collect();
        assert_eq!(coords, expected);
        assert_eq!(c.is_trivial(), Some(false));
    }
    let mut shifted = reps[0].clone();
    shifted.add_scaled(&q(1), &blp(&a, &symmetric_tau(3, 2)).unwrap());
    let c = classify_extension(&a, &shifted).unwrap();
    assert_eq!(c.coordinates, classes[0].coordinates);
    assert_eq!(c.representative, classes[0].representative);
    let mut sum = reps[0].clone();
    sum.add_scaled(&q(-2), &reps[1]);
    let c = classify_extension(&a, &sum).unwrap();
    assert_eq!(c.coordinates, Some(vec![q(1), q(-2), q(0)]));
    assert_eq!(c.label, Some(vec![q(1), q(-2), q(0)]));
    let c = classify_extension(&a, &reps[1].scaled(&q(-3))).unwrap();
    assert_eq!(c.label, Some(vec![q(0), q(1), q(0)]));
}

#[test]
fn non_anti_cyclic_twist_is_not_classified() {
    let a = catalog::l2::<Q>();
    let h = Cochain::from_entries(2, 2, &[(vec![0, 0, 1], q(1))]).unwrap();
    let class = classify_extension(&a, &h).unwrap();
    assert!(!class.anti_cyclic);
    assert!(!class.anti_invariant);
    assert_eq!(class.coordinates, None);
    assert_eq!(class.is_trivial(), None);
}

#[test]
fn classify_rejects_wrong_degree() {
    let a = catalog::l2::<Q>();
    assert!(classify_extension(&a, &Cochain::zero(2, 1)).is_err());
}

#[test]
fn gauge_twist_adds_a_coboundary() {
    for a in [catalog::l2::<Q>(), catalog::heis3()] {
        let m = a.dim();
        let h = Cochain::zero(m, 2);
        let tau = symmetric_tau(m, 5);
        assert_eq!(gauge_twist(&a, &h, &tau).unwrap(), blp(&a, &tau).unwrap());
        let g = check_gauge(&a, &h, &tau).unwrap();
        assert!(g.is_leibniz_morphism && g.preserves_omega);
    }
}

#[test]
fn non_symmetric_gauge_breaks_omega() {
    let a = catalog::l2::<Q>();
    let tau = Cochain::from_entries(2, 1, &[(vec![0, 1], q(1))]).unwrap();
    let g = check_gauge(&a, &Cochain::zero(2, 2), &tau).unwrap();
    assert!(g.is_leibniz_morphism);
    assert!(!g.preserves_omega);
}

#[test]
fn anti_cyclic_iff_anti_invariant_on_l2() {
    let a = catalog::l2::<Q>();
    let omega = canonical_omega::<Q>(2).unwrap();
    for w in all_words(2, 3) {
        let h = Cochain::from_entries(2, 2, &[(w.clone(), q(1))]).unwrap();
        let (d, _) = double(&ExtensionDatum {
            base: a.clone(),
            cocycle: h.clone(),
        })
        .unwrap();
        let anti = check_anti_invariance(&d, &omega).unwrap().passed();
        assert_eq!(is_anti_cyclic(&h), anti, "{w:?}");
    }
    for v in anti_cyclic_space::<Q>(2, 2).vectors() {
        let h = Cochain::from_coeffs(2, 2, v.clone()).unwrap();
        let (d, _) = double(&ExtensionDatum {
            base: a.clone(),
            cocycle: h,
        })
        .unwrap();
        assert!(check_anti_invariance(&d, &omega).unwrap().passed());
    }
}

#[test]
fn cochain_json_is_sparse_and_one_based() {
    let c = Cochain::from_entries(2, 1, &[(vec![1, 0], Q::new(1.into(), 3.into()))]).unwrap();
    assert_eq!(
        c.to_json(),
        serde_json::json!({"degree": 1, "coeffs": [[[2, 1], "1/3"]]})
    );
}

#[test]
fn from_entries_validation() {
    assert!(Cochain::<Q>::from_entries(2, 1, &[(vec![0, 2], q(1))]).is_err());
    assert!(Cochain::<Q>::from_entries(2, 1, &[(vec![0], q(1))]).is_err());
    assert!(Cochain::<Q>::from_entries(2, 1, &[(vec![0, 1], q(1)), (vec![0, 1], q(2))]).is_err());
}
