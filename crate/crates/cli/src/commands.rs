//! One function per subcommand, each producing a [`Report`].

use leibcx::algebra::{canonical_omega, check_anti_invariance, double, liezation, ExtensionDatum};
use leibcx::chain::{build_dr, homology, omega0, ComplexReport, FreeLieComplex, Which};
use leibcx::cochain::{classify_extension, cohomology, Cochain};
use leibcx::{catalog, Algebra, Rational};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::input::{algebra_to_json, Source};
use crate::report::{row, Check, Report};
use crate::suites::{self, leibniz_check, Suite};

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn require_degree(n: usize) -> CliResult<()> {
    if n < 2 {
        return Err(CliError::Input(format!(
            "--max-degree must be at least 2, got {n}"
        )));
    }
    Ok(())
}

pub fn validate(a: &Algebra, src: Source) -> CliResult<Report> {
    let mut r = Report::new("validate", vec![src], None);
    let check = leibniz_check(a);
    r.result("name", json!(a.name()));
    r.result("dim", json!(a.dim()));
    r.result("antisymmetric", json!(a.is_antisymmetric()));
    r.result("lie", json!(check.passed && a.is_lie()));
    r.line(format!("  {} dim {}", a.name(), a.dim()));
    if check.passed {
        let l = liezation(a)?;
        r.result("ideal_dim", json!(l.ideal.dim()));
        r.result("liezation_dim", json!(l.algebra.dim()));
        r.line(format!(
            "  dim I {}, dim g_Lie {}",
            l.ideal.dim(),
            l.algebra.dim()
        ));
    }
    r.check(check);
    Ok(r)
}

pub fn liezation_report(a: &Algebra, src: Source) -> CliResult<Report> {
    let l = liezation(a)?;
    let mut r = Report::new("liezation", vec![src], None);
    let ideal: Vec<Vec<String>> = l.ideal.vectors().iter().map(|v| strings(v)).collect();
    let projection: Vec<Vec<String>> = l.projection.iter().map(|v| strings(v)).collect();
    r.result("ideal_basis", json!(ideal));
    r.result(
        "complement",
        json!(l.complement.iter().map(|i| i + 1).collect::<Vec<_>>()),
    );
    r.result("projection", json!(projection));
    r.result("quotient", algebra_to_json(&l.algebra));
    r.line(format!(
        "  dim I {}, dim g_Lie {}",
        l.ideal.dim(),
        l.algebra.dim()
    ));
    let names: Vec<&str> = l
        .complement
        .iter()
        .map(|&i| a.basis_names()[i].as_str())
        .collect();
    r.line(format!("  quotient basis: {}", names.join(", ")));
    for s in l.algebra.to_string().lines().skip(1) {
        r.line(format!("  {}", s.trim_start()));
    }
    Ok(r)
}

fn complex_json(c: &ComplexReport) -> Value {
    json!({
        "chain_dims": c.chain_dims,
        "boundary_ranks": c.boundary_ranks,
        "homology": c.homology,
    })
}

fn complex_lines(r: &mut Report, title: &str, c: &ComplexReport, label: &str) {
    r.line(format!("  {title}"));
    r.line(row("degree", &(1..=c.max_degree).collect::<Vec<_>>()));
    r.line(row("dim", &c.chain_dims));
    r.line(row("rank d", &c.boundary_ranks));
    r.line(format!("  {label}"));
    r.line(row("k", &(0..c.homology.len()).collect::<Vec<_>>()));
    r.line(row("dim", &c.homology));
}

pub fn homology_report(
    a: &Algebra,
    src: Source,
    n: usize,
    loday: bool,
    full: bool,
) -> CliResult<Report> {
    require_degree(n)?;
    let which = if loday { Which::HaAndLoday } else { Which::Ha };
    let h = homology(a, n, which)?;
    let mut r = Report::new("homology", vec![src], Some(n));
    r.result("ha", complex_json(&h.ha));
    complex_lines(&mut r, "(F_Lie g[1], d)", &h.ha, "HA_k = H_{k+1}");
    if let Some(l) = &h.loday {
        r.result("loday", complex_json(l));
        complex_lines(&mut r, "Loday complex", l, "HL_k = H_{k+1}");
    }
    if full {
        let cx = FreeLieComplex::new(a, n);
        let bases: Vec<Value> = (1..=n)
            .map(|k| {
                let words: Vec<String> = cx
                    .slice(k)
                    .words()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                json!({"degree": k, "words": words})
            })
            .collect();
        let mut boundaries = Vec::new();
        for k in 2..=n {
            let b = cx.boundary(k)?;
            let entries: Vec<Value> = b
                .triplets()
                .into_iter()
                .map(|(i, j, c)| json!([i + 1, j + 1, c]))
                .collect();
            boundaries.push(json!({
                "from_degree": b.from_degree,
                "to_degree": b.to_degree,
                "rows": b.matrix.rows(),
                "cols": b.matrix.cols(),
                "entries": entries,
            }));
        }
        r.result("bases", json!(bases));
        r.result("boundaries", json!(boundaries));
    }
    Ok(r)
}

pub fn cohomology_report(
    a: &Algebra,
    src: Source,
    n: usize,
    cocycle: Option<(Cochain<Rational>, Source)>,
) -> CliResult<Report> {
    require_degree(n)?;
    let co = cohomology(a, n)?;
    let mut inputs = vec![src];
    let mut r = Report::new("cohomology", Vec::new(), Some(n));
    r.result("alp_dims", json!(co.alp_dims));
    r.result("ranks", json!(co.ranks));
    r.result("ha", json!(co.ha));
    r.line("  ALP^n, n = degree - 1");
    r.line(row("n", &(0..co.alp_dims.len()).collect::<Vec<_>>()));
    r.line(row("dim", &co.alp_dims));
    r.line(row("rank b", &co.ranks));
    r.line(row("HA^n", &co.ha));
    if let Some((h, hsrc)) = cocycle {
        inputs.push(hsrc);
        let class = classify_extension(a, &h)?;
        r.check(Check::new(
            "cocycle_anti_cyclic",
            class.anti_cyclic,
            1,
            None,
        ));
        r.check(Check::new("cocycle_closed", class.cocycle, 1, None));
        r.check(
            Check::new("twisted_double_leibniz", class.double_is_leibniz, 1, None).informational(),
        );
        r.check(
            Check::new(
                "twisted_double_anti_invariant",
                class.anti_invariant,
                1,
                None,
            )
            .informational(),
        );
        let mut ext = serde_json::Map::new();
        ext.insert("ha2_dim".into(), json!(class.ha2_dim));
        ext.insert("trivial".into(), json!(class.is_trivial()));
        ext.insert(
            "coordinates".into(),
            json!(class.coordinates.as_deref().map(strings)),
        );
        ext.insert("label".into(), json!(class.label.as_deref().map(strings)));
        ext.insert(
            "representative".into(),
            json!(class.representative.as_ref().map(Cochain::to_json)),
        );
        r.result("extension", Value::Object(ext));
        match (&class.label, class.is_trivial()) {
            (Some(label), Some(trivial)) => r.line(format!(
                "  extension class in HA^2 (dim {}): [{}]{}",
                class.ha2_dim,
                strings(label).join(", "),
                if trivial { " trivial" } else { "" }
            )),
            _ => r.line("  extension not classifiable: cocycle must be anti-cyclic and closed"),
        }
    }
    r.inputs = inputs;
    Ok(r)
}

pub fn omega0_report(a: &Algebra, src: Source) -> CliResult<Report> {
    let o = omega0(a)?;
    let mut r = Report::new("omega0", vec![src], None);
    r.result("dim", json!(o.dim));
    r.result("relations_dim", json!(o.relations.dim()));
    r.line(format!("  dim Omega0 {}", o.dim));
    Ok(r)
}

/// Builds the double; the algebra itself is returned for writing with `-o`.
pub fn double_report(
    a: &Algebra,
    src: Source,
    cocycle: Option<(Cochain<Rational>, Source)>,
) -> CliResult<(Report, Algebra)> {
    let m = a.dim();
    let mut inputs = vec![src];
    let h = match cocycle {
        Some((h, hsrc)) => {
            if h.degree() != 2 {
                return Err(CliError::Input(format!(
                    "cocycle must have degree 2, got {}",
                    h.degree()
                )));
            }
            inputs.push(hsrc);
            h
        }
        None => Cochain::zero(m, 2),
    };
    let ext = ExtensionDatum {
        base: a.clone(),
        cocycle: h,
    };
    let (d, validation) = double(&ext)?;
    let omega = canonical_omega::<Rational>(m)?;
    let anti = check_anti_invariance(&d, &omega)?;
    let mut r = Report::new("double", inputs, None);
    let dm = d.dim();
    r.check(Check::new(
        "leibniz_identity",
        validation.passed(),
        dm * dm * dm,
        validation
            .first_failure()
            .map(|(i, j, k)| format!("({},{},{})", i + 1, j + 1, k + 1)),
    ));
    r.check(Check::new(
        "anti_invariance",
        anti.passed(),
        dm * dm * dm,
        anti.failures
            .first()
            .map(|((i, j, k), w)| format!("({},{},{}) {w:?}", i + 1, j + 1, k + 1)),
    ));
    r.result("algebra", algebra_to_json(&d));
    r.line(format!("  double of {} (dim {dm})", a.name()));
    for s in d.to_string().lines().skip(1) {
        r.line(format!("  {}", s.trim_start()));
    }
    Ok((r, d))
}

pub fn dr_report(a: &Algebra, src: Source, n: usize) -> CliResult<Report> {
    require_degree(n)?;
    let dr = build_dr(a, n)?;
    let suite = dr.verify(a);
    let mut r = Report::new("dr", vec![src], Some(n));
    r.result("component_dims", json!(suite.component_dims));
    r.line("  components g_Lie, F^1 .. F^N");
    r.line(row("dim", &suite.component_dims));
    for c in suite.checks {
        r.check(c);
    }
    Ok(r)
}

pub fn check_report(a: &Algebra, src: Source, n: usize, suite: Suite) -> CliResult<Report> {
    require_degree(n)?;
    let mut r = Report::new("check", vec![src], Some(n));
    r.result("suite", json!(suite.name()));
    for c in suites::run(suite, a, n)? {
        r.check(c);
    }
    Ok(r)
}

pub fn catalog_report(name: Option<&str>) -> CliResult<(Report, Option<Algebra>)> {
    let mut r = Report::new("catalog", Vec::new(), None);
    match name {
        None => {
            r.result("names", json!(catalog::NAMES));
            for n in catalog::NAMES {
                r.line(format!("  catalog:{n}"));
            }
            Ok((r, None))
        }
        Some(n) => {
            let a = catalog::by_name::<Rational>(n)?;
            r.result("algebra", algebra_to_json(&a));
            for s in a.to_string().lines() {
                r.line(format!("  {s}"));
            }
            Ok((r, Some(a)))
        }
    }
}
