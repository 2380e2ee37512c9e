//! Algebra and cocycle files, `catalog:` sources and rational strings.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use leibcx::algebra::{default_names, LeibnizAlgebra};
use leibcx::cochain::Cochain;
use leibcx::{catalog, Algebra, Rational};
use num_traits::Zero;
use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

/// `[e_left, e_right] = Σ c e_index`, 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub value: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub degree: usize,
    pub coeffs: Vec<(Vec<usize>, String)>,
}

/// An algebra together with where it came from.
#[derive(Clone, Debug)]
pub struct Source {
    pub label: String,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn rational_pattern() -> &'static Regex {
    static PATTERN: OnceLock<Regex> = OnceLock::new();
    PATTERN.get_or_init(|| Regex::new(r"^-?[0-9]+(/[1-9][0-9]*)?$").expect("valid pattern"))
}

/// Parses `p` or `p/q` exactly; decimals and exponents are rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    if !rational_pattern().is_match(s) {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.parse().ok()?, d.parse().ok()?),
        None => (s.parse().ok()?, 1.into()),
    };
    Some(Rational::new(num, den))
}

fn rational_at(s: &str, at: &str) -> CliResult<Rational> {
    parse_rational(s).ok_or_else(|| {
        CliError::Input(format!(
            "{at}: '{s}' is not a rational of the form p or p/q"
        ))
    })
}

fn index_at(i: usize, dim: usize, at: &str) -> CliResult<usize> {
    if i == 0 || i > dim {
        return Err(CliError::Input(format!(
            "{at}: index {i} outside 1..={dim}"
        )));
    }
    Ok(i - 1)
}

pub fn parse_algebra_str(text: &str, fallback_name: &str) -> CliResult<Algebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("algebra file: {e}")))?;
    algebra_from_file(&file, fallback_name)
}

pub fn algebra_from_file(file: &AlgebraFile, fallback_name: &str) -> CliResult<Algebra> {
    let m = file.dim;
    if m == 0 {
        return Err(CliError::Input("dim: must be at least 1".into()));
    }
    let names = match &file.basis {
        Some(b) if b.len() != m => {
            return Err(CliError::Input(format!(
                "basis: {} labels for dimension {m}",
                b.len()
            )));
        }
        Some(b) => b.clone(),
        None => default_names(m),
    };
    let mut seen = BTreeSet::new();
    let mut consts = vec![Rational::zero(); m * m * m];
    for (n, entry) in file.brackets.iter().enumerate() {
        let at = format!("brackets[{n}]");
        let i = index_at(entry.left, m, &format!("{at}.left"))?;
        let j = index_at(entry.right, m, &format!("{at}.right"))?;
        if !seen.insert((i, j)) {
            return Err(CliError::Input(format!(
                "{at}: duplicate bracket [{}, {}]",
                entry.left, entry.right
            )));
        }
        let mut components = BTreeSet::new();
        for (v, (k, c)) in entry.value.iter().enumerate() {
            let at = format!("{at}.value[{v}]");
            let k = index_at(*k, m, &at)?;
            if !components.insert(k) {
                return Err(CliError::Input(format!(
                    "{at}: duplicate component {}",
                    k + 1
                )));
            }
            consts[(i * m + j) * m + k] = rational_at(c, &at)?;
        }
    }
    let name = file
        .name
        .clone()
        .unwrap_or_else(|| fallback_name.to_string());
    Ok(LeibnizAlgebra::new(name, names, consts)?)
}

/// The canonical file form: brackets ordered by `(left, right)`, components by index.
pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    let m = a.dim();
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let value: Vec<(usize, String)> = a
                .bracket_basis(i, j)
                .iter()
                .map(|(k, c)| (k + 1, c.to_string()))
                .collect();
            if !value.is_empty() {
                brackets.push(BracketEntry {
                    left: i + 1,
                    right: j + 1,
                    value,
                });
            }
        }
    }
    let basis = (a.basis_names() != default_names(m).as_slice()).then(|| a.basis_names().to_vec());
    AlgebraFile {
        name: Some(a.name().to_string()),
        dim: m,
        basis,
        brackets,
    }
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    serde_json::to_value(algebra_to_file(a)).expect("algebra files serialize")
}

fn read(path: &str) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// Loads `catalog:NAME` or a JSON algebra file.
pub fn load_algebra(spec: &str) -> CliResult<(Algebra, Source)> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let a = catalog::by_name::<Rational>(name)?;
        let canonical = crate::report::to_canonical_string(&algebra_to_json(&a));
        let source = Source {
            label: spec.to_string(),
            sha256: sha256_hex(canonical.as_bytes()),
        };
        return Ok((a, source));
    }
    let bytes = read(spec)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    let stem = std::path::Path::new(spec)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("algebra");
    let a = parse_algebra_str(text, stem).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{spec}: {msg}")),
        other => other,
    })?;
    let source = Source {
        label: spec.to_string(),
        sha256: sha256_hex(&bytes),
    };
    Ok((a, source))
}

pub fn parse_cochain_str(text: &str, dim: usize) -> CliResult<Cochain<Rational>> {
    let file: CochainFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("cocycle file: {e}")))?;
    let mut entries = Vec::with_capacity(file.coeffs.len());
    for (n, (word, c)) in file.coeffs.iter().enumerate() {
        let at = format!("coeffs[{n}]");
        if word.len() != file.degree + 1 {
            return Err(CliError::Input(format!(
                "{at}: {} indices for a degree-{} cochain",
                word.len(),
                file.degree
            )));
        }
        let w = word
            .iter()
            .map(|&i| index_at(i, dim, &at))
            .collect::<CliResult<Vec<_>>>()?;
        entries.push((w, rational_at(c, &at)?));
    }
    Ok(Cochain::from_entries(dim, file.degree, &entries)?)
}

pub fn load_cocycle(path: &str, dim: usize) -> CliResult<(Cochain<Rational>, Source)> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let c = parse_cochain_str(text, dim).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{path}: {msg}")),
        other => other,
    })?;
    let source = Source {
        label: path.to_string(),
        sha256: sha256_hex(&bytes),
    };
    Ok((c, source))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("1/3"),
            Some(Rational::new(1.into(), 3.into()))
        );
        assert_eq!(
            parse_rational("-4"),
            Some(Rational::from_integer((-4).into()))
        );
        assert_eq!(parse_rational("6/4").unwrap().to_string(), "3/2");
        for bad in ["0.5", "1/0", "1/03", "+1", "1e3", "", " 1", "1/-2"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn l2_file() {
        let a = parse_algebra_str(
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,"1"]]}]}"#,
            "L2",
        )
        .unwrap();
        let l2 = catalog::l2::<Rational>();
        assert_eq!(a.constants(), l2.constants());
        assert_eq!(a.name(), "L2");
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            r#"{"dim":2,"brackets":[{"left":1,"right":3,"value":[]}]}"#,
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,"0.5"]]}]}"#,
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,"1"]]},{"left":1,"right":1,"value":[]}]}"#,
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,"1"],[2,"1"]]}]}"#,
            r#"{"dim":2,"brackets":[{"left":0,"right":1,"value":[]}]}"#,
            r#"{"dim":0,"brackets":[]}"#,
            r#"{"dim":2,"basis":["a"],"brackets":[]}"#,
            r#"{"dim":2,"brackets":[],"extra":1}"#,
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,1]]}]}"#,
            r#"{"dim":2,"brackets":["#,
        ];
        for c in cases {
            assert!(
                matches!(parse_algebra_str(c, "x"), Err(CliError::Input(_))),
                "{c}"
            );
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_algebra_str(
            r#"{"dim":2,"brackets":[{"left":1,"right":1,"value":[[2,"1"],[1,"x"]]}]}"#,
            "x",
        )
        .unwrap_err();
        assert!(err.to_string().contains("brackets[0].value[1]"), "{err}");
        let err = parse_algebra_str("{\"dim\":2,\n\"brackets\":[}", "x").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn file_round_trip() {
        for name in catalog::NAMES {
            let a = catalog::by_name::<Rational>(name).unwrap();
            let text = serde_json::to_string(&algebra_to_file(&a)).unwrap();
            let b = parse_algebra_str(&text, "x").unwrap();
            assert_eq!(a.constants(), b.constants());
            assert_eq!(a.basis_names(), b.basis_names());
            assert_eq!(a.name(), b.name());
        }
    }

    #[test]
    fn cocycle_files() {
        let c = parse_cochain_str(r#"{"degree":2,"coeffs":[[[1,2,2],"1/2"]]}"#, 2).unwrap();
        assert_eq!(c.value(&[0, 1, 1]).to_string(), "1/2");
        assert!(parse_cochain_str(r#"{"degree":2,"coeffs":[[[1,2],"1"]]}"#, 2).is_err());
        assert!(parse_cochain_str(r#"{"degree":2,"coeffs":[[[1,2,3],"1"]]}"#, 2).is_err());
        assert!(
            parse_cochain_str(r#"{"degree":2,"coeffs":[[[1,1,1],"1"],[[1,1,1],"2"]]}"#, 2).is_err()
        );
    }
}
