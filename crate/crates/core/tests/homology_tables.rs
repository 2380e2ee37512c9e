use leibcx::catalog;
use leibcx::chain::{homology, omega0, Which};
use leibcx::cochain::cohomology;
use leibcx::Rational as Q;
use num_rational::Ratio;

struct Row {
    name: &'static str,
    dims: [usize; 5],
    ha: [usize; 4],
    hl: [usize; 4],
}

// Independent oracle: span of ε-images of all words and ranks of ∂_L on it.
const TABLE: &[Row] = &[
    Row {
        name: "abelian1",
        dims: [1, 1, 0, 0, 0],
        ha: [1, 1, 0, 0],
        hl: [1, 1, 1, 1],
    },
    Row {
        name: "abelian2",
        dims: [2, 3, 2, 3, 6],
        ha: [2, 3, 2, 3],
        hl: [2, 4, 8, 16],
    },
    Row {
        name: "abelian3",
        dims: [3, 6, 8, 18, 48],
        ha: [3, 6, 8, 18],
        hl: [3, 9, 27, 81],
    },
    Row {
        name: "abelian4",
        dims: [4, 10, 20, 60, 204],
        ha: [4, 10, 20, 60],
        hl: [4, 16, 64, 256],
    },
    Row {
        name: "L2",
        dims: [2, 3, 2, 3, 6],
        ha: [1, 1, 0, 0],
        hl: [1, 1, 1, 1],
    },
    Row {
        name: "N3",
        dims: [3, 6, 8, 18, 48],
        ha: [1, 1, 0, 0],
        hl: [1, 1, 1, 1],
    },
    Row {
        name: "sl2",
        dims: [3, 6, 8, 18, 48],
        ha: [3, 1, 0, 0],
        hl: [0, 0, 0, 0],
    },
    Row {
        name: "heis3",
        dims: [3, 6, 8, 18, 48],
        ha: [3, 3, 3, 4],
        hl: [2, 5, 10, 22],
    },
    Row {
        name: "doubleL2",
        dims: [4, 10, 20, 60, 204],
        ha: [2, 3, 2, 3],
        hl: [2, 4, 8, 16],
    },
];

#[test]
fn homology_and_cohomology_tables() {
    for row in TABLE {
        let a = catalog::by_name::<Q>(row.name).unwrap();
        let r = homology(&a, 5, Which::HaAndLoday).unwrap();
        assert_eq!(r.ha.chain_dims, row.dims.to_vec(), "{}", row.name);
        assert_eq!(r.ha.homology, row.ha.to_vec(), "{}", row.name);
        assert_eq!(r.loday.unwrap().homology, row.hl.to_vec(), "{}", row.name);
        let co = cohomology(&a, 5).unwrap();
        assert_eq!(co.ha, row.ha.to_vec(), "{}", row.name);
    }
}

#[test]
fn first_homology_of_lie_entries_is_omega0() {
    for name in [
        "abelian1", "abelian2", "abelian3", "abelian4", "sl2", "heis3",
    ] {
        let a = catalog::by_name::<Q>(name).unwrap();
        let r = homology(&a, 3, Which::Ha).unwrap();
        assert_eq!(r.ha.homology[1], omega0(&a).unwrap().dim, "{name}");
    }
}

#[test]
fn machine_rationals_agree_with_big_rationals() {
    for name in ["L2", "N3", "sl2", "heis3"] {
        let big = homology(&catalog::by_name::<Q>(name).unwrap(), 4, Which::HaAndLoday).unwrap();
        let small = homology(
            &catalog::by_name::<Ratio<i128>>(name).unwrap(),
            4,
            Which::HaAndLoday,
        )
        .unwrap();
        assert_eq!(big, small, "{name}");
        let co = cohomology(&catalog::by_name::<Ratio<i64>>(name).unwrap(), 4).unwrap();
        assert_eq!(co.ha, big.ha.homology, "{name}");
    }
}
