//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use leibcx::algebra::{
    canonical_omega, check_anti_invariance, double, liezation, validate_leibniz, ExtensionDatum,
};
use leibcx::chain::{
    build_dr, check_boundary_alt, check_d_squared, check_loday_squared, check_subcomplex, homology,
    omega0, CheckOutcome, FreeLieComplex, Which,
};
use leibcx::cochain::{
    alp_subcomplex_check, anti_cyclic_space, blp, cohomology, dlp, h1_h2_space,
    three_identity_space, tilde, DualValuedCochain,
};
use leibcx::free_lie::{
    all_words, epsilon_word, higher_bracketing, recovered_bracket, structure_tensors,
};
use leibcx::{catalog, Algebra, Rational, Scalar};

type Outcome = Result<String, String>;

fn algebras() -> Vec<Algebra> {
    catalog::LEIBNIZ_NAMES
        .iter()
        .map(|n| catalog::by_name(n).expect("catalog entry"))
        .collect()
}

fn require(c: CheckOutcome, what: &str, algebra: &str) -> Result<usize, String> {
    if c.passed {
        Ok(c.checked)
    } else {
        Err(format!(
            "{what} fails on {algebra} at {}",
            c.witness.unwrap_or_default()
        ))
    }
}

fn chain_complex() -> Outcome {
    let mut checked = 0;
    for a in algebras() {
        let cx = FreeLieComplex::new(&a, 5);
        let e = |e: leibcx::Error| e.to_string();
        checked += require(check_d_squared(&cx).map_err(e)?, "d∘d = 0", a.name())?;
        checked += require(
            check_loday_squared(&a, 5).map_err(e)?,
            "dL∘dL = 0",
            a.name(),
        )?;
        checked += require(check_boundary_alt(&cx).map_err(e)?, "d = d_alt", a.name())?;
    }
    Ok(format!(
        "{checked} checked instances over 9 algebras, degrees <= 5"
    ))
}

fn loday_restricts() -> Outcome {
    let mut checked = 0;
    for a in algebras() {
        let cx = FreeLieComplex::new(&a, 5);
        checked += require(
            check_subcomplex(&cx).map_err(|e| e.to_string())?,
            "dL∘ε = ε∘d",
            a.name(),
        )?;
    }
    Ok(format!("{checked} basis bracket words of length <= 5"))
}

fn ha0() -> Outcome {
    let mut seen = Vec::new();
    for a in algebras() {
        let h = homology(&a, 2, Which::Ha).map_err(|e| e.to_string())?;
        let lie = liezation(&a).map_err(|e| e.to_string())?.algebra.dim();
        if h.ha.homology[0] != lie {
            return Err(format!(
                "{}: HA_0 = {}, dim g_Lie = {lie}",
                a.name(),
                h.ha.homology[0]
            ));
        }
        seen.push(format!("{} {lie}", a.name()));
    }
    for (name, expected) in [("L2", 1), ("N3", 1), ("sl2", 3)] {
        let a = catalog::by_name::<Rational>(name).unwrap();
        let got = homology(&a, 2, Which::Ha)
            .map_err(|e| e.to_string())?
            .ha
            .homology[0];
        if got != expected {
            return Err(format!("{name}: HA_0 = {got}, expected {expected}"));
        }
    }
    Ok(seen.join(", "))
}

fn omega0_agreement() -> Outcome {
    let mut out = Vec::new();
    for (name, expected) in [("sl2", Some(1)), ("heis3", None)] {
        let a = catalog::by_name::<Rational>(name).unwrap();
        let ha1 = homology(&a, 3, Which::Ha)
            .map_err(|e| e.to_string())?
            .ha
            .homology[1];
        let om = omega0(&a).map_err(|e| e.to_string())?.dim;
        if ha1 != om || expected.is_some_and(|x| x != om) {
            return Err(format!("{name}: HA_1 = {ha1}, dim Omega0 = {om}"));
        }
        out.push(format!("{name} {om}"));
    }
    Ok(out.join(", "))
}

fn anti_cyclic_spaces() -> Outcome {
    for a in algebras() {
        let m = a.dim();
        if anti_cyclic_space::<Rational>(m, 2) != h1_h2_space(m) {
            return Err(format!("{}: degree 2 spaces differ", a.name()));
        }
        if anti_cyclic_space::<Rational>(m, 3) != three_identity_space(m) {
            return Err(format!("{}: degree 3 spaces differ", a.name()));
        }
    }
    Ok("degrees 2 and 3, dimensions 1..4".into())
}

fn alp_subcomplex() -> Outcome {
    for a in algebras() {
        for n in 0..=3 {
            let r = alp_subcomplex_check(&a, n).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("{} n = {n}: {r:?}", a.name()));
            }
        }
    }
    Ok("b_LP preserves ALP and equals the transpose of d, n <= 3".into())
}

fn duality() -> Outcome {
    for a in algebras() {
        let ho = homology(&a, 5, Which::Ha).map_err(|e| e.to_string())?;
        let co = cohomology(&a, 5).map_err(|e| e.to_string())?;
        if ho.ha.homology != co.ha {
            return Err(format!(
                "{}: HA_n {:?}, HA^n {:?}",
                a.name(),
                ho.ha.homology,
                co.ha
            ));
        }
    }
    Ok("HA^n = HA_n for n <= 3".into())
}

fn tilde_relation() -> Outcome {
    let mut checked = 0;
    for a in [catalog::l2::<Rational>(), catalog::n3()] {
        for n in 0..=2 {
            for f in DualValuedCochain::basis(a.dim(), n) {
                let e = |e: leibcx::Error| e.to_string();
                let lhs = blp(&a, &tilde(&f).map_err(e)?).map_err(e)?;
                let rhs = tilde(&dlp(&a, &f).map_err(e)?)
                    .map_err(e)?
                    .scaled(&Rational::sign(n));
                if lhs != rhs {
                    return Err(format!("{} degree {n}", a.name()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} basis cochains on L2 and N3"))
}

fn dr_suite() -> Outcome {
    for name in ["L2", "N3", "sl2"] {
        let a = catalog::by_name::<Rational>(name).unwrap();
        let report = build_dr(&a, 4).map_err(|e| e.to_string())?.verify(&a);
        if let Some(c) = report.checks.iter().find(|c| !c.passed) {
            return Err(format!(
                "{name}: {} at {}",
                c.name,
                c.witness.clone().unwrap_or_default()
            ));
        }
    }
    Ok("Jacobi, derivation, D² = 0, derived bracket, LL1, LL2 at N = 4".into())
}

fn anti_invariance() -> Outcome {
    for a in algebras() {
        let (d, _) = double(&ExtensionDatum::untwisted(a.clone())).map_err(|e| e.to_string())?;
        let omega = canonical_omega::<Rational>(a.dim()).map_err(|e| e.to_string())?;
        if !check_anti_invariance(&d, &omega)
            .map_err(|e| e.to_string())?
            .passed()
        {
            return Err(format!("double({}) is not anti-invariant", a.name()));
        }
    }
    let d = catalog::double_l2::<Rational>();
    let omega = canonical_omega::<Rational>(2).unwrap();
    let st = structure_tensors(&d, &omega, None).map_err(|e| e.to_string())?;
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = (d.unit(i), d.unit(j));
            let got = recovered_bracket(&omega, &st.mu, &x, &y).map_err(|e| e.to_string())?;
            if got != d.bracket(&x, &y) {
                return Err(format!("mu recovery fails at ({}, {})", i + 1, j + 1));
            }
        }
    }
    Ok("9 doubles; mu recovery on 16 pairs of doubleL2".into())
}

fn bracketing_identity() -> Outcome {
    let mut checked = 0;
    for m in 1..=3 {
        for n in 1..=6 {
            let k = Rational::from_int(n as i64);
            for w in all_words(m, n) {
                let once = epsilon_word::<Rational>(&w);
                if higher_bracketing(&once).epsilon() != once.scaled(&k) {
                    return Err(format!("alphabet {m}, word {w:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} words"))
}

fn negative_control() -> Outcome {
    let b1 = catalog::b1::<Rational>();
    let witness = validate_leibniz(&b1)
        .first_failure()
        .map(|(i, j, k)| (i + 1, j + 1, k + 1));
    if witness != Some((1, 1, 1)) {
        return Err(format!("B1 witness {witness:?}"));
    }
    let status = Command::new(env!("CARGO_BIN_EXE_leibcx"))
        .args(["homology", "catalog:B1"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    match status.code() {
        Some(2) => Ok("B1 fails at (1,1,1); homology refused with exit 2".into()),
        other => Err(format!("homology on B1 exited with {other:?}")),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("chain complex", chain_complex),
        ("Loday boundary restricts to d", loday_restricts),
        ("HA_0 = dim g_Lie", ha0),
        ("HA_1 = dim Omega0", omega0_agreement),
        ("anti-cyclic characterizations", anti_cyclic_spaces),
        ("ALP subcomplex", alp_subcomplex),
        ("duality", duality),
        ("tilde relation", tilde_relation),
        ("DR suite", dr_suite),
        ("anti-invariance and mu recovery", anti_invariance),
        ("bracketing after epsilon", bracketing_identity),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({secs:.2}s)", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {reason} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
