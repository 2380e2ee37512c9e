//! Verification suites run by `check`.

use leibcx::algebra::{
    canonical_omega, check_anti_invariance, double, liezation, validate_leibniz, ExtensionDatum,
};
use leibcx::chain::{
    build_dr, check_almost_derivation, check_boundary_alt, check_d_squared, check_left_lemma,
    check_loday_squared, check_right_lemma, check_subcomplex, homology, ker2_invariance, omega0,
    FreeLieComplex, Which,
};
use leibcx::cochain::{
    alp_subcomplex_check, anti_cyclic_space, blp, cohomology, dlp, h1_h2_space, is_anti_cyclic,
    symmetric_space, three_identity_space, tilde, Cochain, DualValuedCochain,
};
use leibcx::free_lie::{
    all_words, cyclic_sum, dual_lie_bracket, epsilon_word, higher_bracketing, recovered_bracket,
    structure_tensors,
};
use leibcx::{Algebra, Rational, Scalar};
use num_traits::One;

use crate::error::CliResult;
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Complex,
    Subcomplex,
    Dr,
    Anticyclic,
    Dual,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Complex => "complex",
            Suite::Subcomplex => "subcomplex",
            Suite::Dr => "dr",
            Suite::Anticyclic => "anticyclic",
            Suite::Dual => "dual",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Complex,
                Suite::Subcomplex,
                Suite::Dr,
                Suite::Anticyclic,
                Suite::Dual,
            ],
            s => vec![s],
        }
    }
}

fn one_based(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

/// The Leibniz identity on basis triples.
pub fn leibniz_check(a: &Algebra) -> Check {
    let report = validate_leibniz(a);
    let m = a.dim();
    Check::new(
        "leibniz_identity",
        report.passed(),
        m * m * m,
        report
            .first_failure()
            .map(|(i, j, k)| one_based(&[i, j, k])),
    )
}

/// Runs `suite` at truncation `n`. A product failing the Leibniz identity only
/// gets the identity check and an informational `∂∘∂` check.
pub fn run(suite: Suite, a: &Algebra, n: usize) -> CliResult<Vec<Check>> {
    let leibniz = leibniz_check(a);
    if !leibniz.passed {
        let cx = FreeLieComplex::new(a, n);
        let d2 = Check::from(check_d_squared(&cx)?).informational();
        return Ok(vec![leibniz, d2.prefixed("complex")]);
    }
    let mut out = vec![leibniz];
    for part in suite.parts() {
        let checks = match part {
            Suite::Complex => complex(a, n)?,
            Suite::Subcomplex => subcomplex(a, n)?,
            Suite::Dr => dr(a, n)?,
            Suite::Anticyclic => anticyclic(a)?,
            Suite::Dual => dual(a)?,
            Suite::All => unreachable!("expanded by parts"),
        };
        out.extend(checks.into_iter().map(|c| c.prefixed(part.name())));
    }
    Ok(out)
}

pub fn complex(a: &Algebra, n: usize) -> CliResult<Vec<Check>> {
    let cx = FreeLieComplex::new(a, n);
    let mut out: Vec<Check> = vec![
        check_d_squared(&cx)?.into(),
        check_loday_squared(a, n)?.into(),
        check_boundary_alt(&cx)?.into(),
        check_right_lemma(a, n).into(),
        check_left_lemma(a, n).into(),
        check_almost_derivation(&cx)?.into(),
    ];
    let ker2 = ker2_invariance(a)?;
    out.push(Check::new(
        "ker2_subalgebras",
        ker2.subalgebras_in_kernel,
        ker2.lie_subalgebras.len(),
        None,
    ));
    out.push(Check::new(
        "ker2_invariance",
        ker2.invariance_in_image,
        a.dim().pow(3),
        None,
    ));
    let ho = homology(a, n.max(3), Which::Ha)?;
    let lie_dim = liezation(a)?.algebra.dim();
    out.push(Check::new(
        "ha0_is_liezation",
        ho.ha.homology[0] == lie_dim,
        1,
        (ho.ha.homology[0] != lie_dim)
            .then(|| format!("HA_0 = {}, dim g_Lie = {lie_dim}", ho.ha.homology[0])),
    ));
    if a.is_lie() {
        let om = omega0(a)?.dim;
        let ha1 = ho.ha.homology[1];
        out.push(Check::new(
            "ha1_is_omega0",
            ha1 == om,
            1,
            (ha1 != om).then(|| format!("HA_1 = {ha1}, dim Omega0 = {om}")),
        ));
    }
    Ok(out)
}

pub fn subcomplex(a: &Algebra, n: usize) -> CliResult<Vec<Check>> {
    let cx = FreeLieComplex::new(a, n);
    let mut out: Vec<Check> = vec![check_subcomplex(&cx)?.into()];
    for k in 0..=n.saturating_sub(2) {
        let r = alp_subcomplex_check(a, k)?;
        let name = format!("alp_subcomplex_{k}");
        out.push(Check::new(
            &format!("{name}_maps_into_alp"),
            r.maps_into_alp,
            r.alp_dim,
            None,
        ));
        out.push(Check::new(
            &format!("{name}_transpose"),
            r.transpose_of_boundary,
            r.alp_dim,
            None,
        ));
        out.push(Check::new(
            &format!("{name}_defining_equation"),
            r.matches_defining_equation,
            1,
            None,
        ));
    }
    let ho = homology(a, n, Which::Ha)?;
    let co = cohomology(a, n)?;
    let witness = ho
        .ha
        .homology
        .iter()
        .zip(&co.ha)
        .position(|(x, y)| x != y)
        .map(|k| {
            format!(
                "degree {k}: HA_{k} = {}, HA^{k} = {}",
                ho.ha.homology[k], co.ha[k]
            )
        });
    out.push(Check::new(
        "duality",
        witness.is_none(),
        co.ha.len(),
        witness,
    ));
    Ok(out)
}

pub fn dr(a: &Algebra, n: usize) -> CliResult<Vec<Check>> {
    let report = build_dr(a, n)?.verify(a);
    Ok(report.checks.into_iter().map(Check::from).collect())
}

fn space_equality(name: &str, left: bool) -> Check {
    Check::new(
        name,
        left,
        1,
        (!left).then(|| "solution spaces differ".to_string()),
    )
}

pub fn anticyclic(a: &Algebra) -> CliResult<Vec<Check>> {
    let m = a.dim();
    let mut out = vec![
        space_equality(
            "degree1_symmetric",
            anti_cyclic_space::<Rational>(m, 1) == symmetric_space(m),
        ),
        space_equality(
            "degree2_h1_h2",
            anti_cyclic_space::<Rational>(m, 2) == h1_h2_space(m),
        ),
        space_equality(
            "degree3_identities",
            anti_cyclic_space::<Rational>(m, 3) == three_identity_space(m),
        ),
    ];
    let omega = canonical_omega::<Rational>(m)?;
    let (d, _) = double(&ExtensionDatum::untwisted(a.clone()))?;
    let report = check_anti_invariance(&d, &omega)?;
    out.push(Check::new(
        "double_anti_invariant",
        report.passed(),
        (2 * m).pow(3),
        report
            .failures
            .first()
            .map(|((i, j, k), which)| format!("{} {which:?}", one_based(&[*i, *j, *k]))),
    ));
    let mut c = Check::new("anti_cyclic_iff_anti_invariant", true, 0, None);
    let mut samples: Vec<(String, Cochain<Rational>)> = all_words(m, 3)
        .map(|w| {
            let h =
                Cochain::from_entries(m, 2, &[(w.clone(), Rational::one())]).expect("valid word");
            (format!("unit {}", one_based(&w)), h)
        })
        .collect();
    for (i, v) in anti_cyclic_space::<Rational>(m, 2)
        .vectors()
        .iter()
        .enumerate()
    {
        let h = Cochain::from_coeffs(m, 2, v.clone()).expect("ambient m^3");
        samples.push((format!("anti-cyclic basis vector {}", i + 1), h));
    }
    for (label, h) in samples {
        let (d, _) = double(&ExtensionDatum {
            base: a.clone(),
            cocycle: h.clone(),
        })?;
        let anti = check_anti_invariance(&d, &omega)?.passed();
        c.checked += 1;
        if anti != is_anti_cyclic(&h) && c.passed {
            c.passed = false;
            c.witness = Some(label);
        }
    }
    out.push(c);
    Ok(out)
}

pub fn dual(a: &Algebra) -> CliResult<Vec<Check>> {
    let m = a.dim();
    let mut tilde_check = Check::new("tilde_relation", true, 0, None);
    for n in 0..=2 {
        for f in DualValuedCochain::basis(m, n) {
            let lhs = blp(a, &tilde(&f)?)?;
            let rhs = tilde(&dlp(a, &f)?)?.scaled(&Rational::sign(n));
            tilde_check.checked += 1;
            if lhs != rhs && tilde_check.passed {
                tilde_check.passed = false;
                tilde_check.witness = Some(format!("degree {n}"));
            }
        }
    }
    let omega = canonical_omega::<Rational>(m)?;
    let (d, _) = double(&ExtensionDatum::untwisted(a.clone()))?;
    let st = structure_tensors(&d, &omega, None)?;
    let mut mu = Check::new("mu_recovery", true, 0, None);
    for i in 0..2 * m {
        for j in 0..2 * m {
            let (x, y) = (d.unit(i), d.unit(j));
            mu.checked += 1;
            if recovered_bracket(&omega, &st.mu, &x, &y)? != d.bracket(&x, &y) && mu.passed {
                mu.passed = false;
                mu.witness = Some(one_based(&[i, j]));
            }
        }
    }
    let mut cyclic = Check::new("dual_bracket_cyclic_sum", true, 0, None);
    for n in 2..=3 {
        let w: Vec<usize> = (0..n).collect();
        cyclic.checked += 1;
        if !cyclic_sum(&dual_lie_bracket::<Rational>(&w), true).is_zero() && cyclic.passed {
            cyclic.passed = false;
            cyclic.witness = Some(format!("length {n}"));
        }
    }
    let alphabet = m.min(3);
    let mut ax1 = Check::new("bracketing_epsilon", true, 0, None);
    for n in 1..=6 {
        let k = Rational::from_int(n as i64);
        for w in all_words(alphabet, n) {
            let once = epsilon_word::<Rational>(&w);
            ax1.checked += 1;
            if higher_bracketing(&once).epsilon() != once.scaled(&k) && ax1.passed {
                ax1.passed = false;
                ax1.witness = Some(one_based(&w));
            }
        }
    }
    Ok(vec![tilde_check, mu, cyclic, ax1])
}
