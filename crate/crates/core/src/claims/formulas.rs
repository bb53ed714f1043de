use serde::Serialize;

use crate::families::FamilySpec;

use super::ClaimError;

/// A closed-form value as published, with a note when the published formula
/// is known to disagree with the true parameter on that input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub caveat: Option<String>,
}

impl FormulaResult {
    fn plain(value: usize) -> Self {
        FormulaResult { value, caveat: None }
    }
}

/// rvc of the two-layers wheel `W2_n`.
pub fn formula_wheel2_rvc(n: usize) -> Result<FormulaResult, ClaimError> {
    let value = match n {
        0..=2 => return Err(ClaimError::OutOfRange("two-layers wheel needs n >= 3".into())),
        3 => 1,
        4..=6 => 2,
        7..=10 => 3,
        _ => 4,
    };
    Ok(FormulaResult::plain(value))
}

/// srvc of the two-layers wheel `W2_n`: `ceil(n/5)` for `n` in `{3, 6}`,
/// `ceil(n/5) + 1` otherwise.
pub fn formula_wheel2_srvc(n: usize) -> Result<FormulaResult, ClaimError> {
    if n < 3 {
        return Err(ClaimError::OutOfRange("two-layers wheel needs n >= 3".into()));
    }
    let base = n.div_ceil(5);
    Ok(FormulaResult::plain(if n == 3 || n == 6 { base } else { base + 1 }))
}

/// srvc values stated for complete bipartite, complete multipartite, wheel
/// and path graphs. Returns the stated value even where it is wrong, with a
/// caveat.
pub fn formula_corollary12(spec: &FamilySpec) -> Result<FormulaResult, ClaimError> {
    match *spec {
        FamilySpec::Bipartite { s, t } if s.max(t) >= 2 && s.min(t) >= 1 => Ok(FormulaResult::plain(1)),
        FamilySpec::Multipartite { ref parts } if parts.len() >= 3 && !parts.contains(&0) => {
            let caveat = parts.iter().all(|&p| p == 1).then(|| {
                format!(
                    "degenerate: all parts are singletons, so the graph is K{} and has srvc 0",
                    parts.len()
                )
            });
            Ok(FormulaResult { value: 1, caveat })
        }
        FamilySpec::Wheel { n } if n >= 3 => {
            let caveat = (n == 3).then(|| "degenerate: W3 = K4 has diameter 1 and srvc 0".to_string());
            Ok(FormulaResult { value: 1, caveat })
        }
        FamilySpec::Path { n } if n >= 3 => Ok(FormulaResult::plain(n - 2)),
        _ => Err(ClaimError::Unsupported(format!("no closed form for {spec}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel2_rvc_table() {
        let expected = [(3, 1), (4, 2), (6, 2), (7, 3), (10, 3), (11, 4), (40, 4)];
        for (n, v) in expected {
            assert_eq!(formula_wheel2_rvc(n).unwrap().value, v, "n = {n}");
        }
        assert!(formula_wheel2_rvc(2).is_err());
    }

    #[test]
    fn wheel2_srvc_table() {
        let expected = [(3, 1), (4, 2), (5, 2), (6, 2), (7, 3), (10, 3), (11, 4), (12, 4), (15, 4), (16, 5)];
        for (n, v) in expected {
            assert_eq!(formula_wheel2_srvc(n).unwrap().value, v, "n = {n}");
        }
        assert!(formula_wheel2_srvc(1).is_err());
    }

    #[test]
    fn corollary_values() {
        assert_eq!(
            formula_corollary12(&FamilySpec::Bipartite { s: 2, t: 3 }).unwrap(),
            FormulaResult::plain(1)
        );
        assert_eq!(formula_corollary12(&FamilySpec::Path { n: 7 }).unwrap().value, 5);
        let w3 = formula_corollary12(&FamilySpec::Wheel { n: 3 }).unwrap();
        assert_eq!(w3.value, 1);
        assert!(w3.caveat.unwrap().contains("K4"));
        assert!(formula_corollary12(&FamilySpec::Wheel { n: 4 }).unwrap().caveat.is_none());
        let k3 = formula_corollary12(&FamilySpec::Multipartite { parts: vec![1, 1, 1] }).unwrap();
        assert!(k3.caveat.is_some());
        assert!(formula_corollary12(&FamilySpec::Multipartite { parts: vec![1, 1, 2] })
            .unwrap()
            .caveat
            .is_none());
        assert!(formula_corollary12(&FamilySpec::Cycle { n: 5 }).is_err());
        assert!(formula_corollary12(&FamilySpec::Bipartite { s: 1, t: 1 }).is_err());
        assert!(formula_corollary12(&FamilySpec::Multipartite { parts: vec![2, 2] }).is_err());
    }
}
