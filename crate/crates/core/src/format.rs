//! Text and JSON forms of a hypermap.
//!
//! Cycle text:
//!
//! ```text
//! # optional comments
//! name: example
//! n: 5
//! sigma: (1 4)(2 5)(3)
//! alpha: (1 2 3)(4 5)
//! ```
//!
//! `n` and `name` are optional; when `n` is absent it is the largest point
//! mentioned. Points left out of a permutation are fixed. Commas may separate
//! points inside a cycle. The JSON form carries the same fields, with cycles
//! as arrays of arrays of integers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Hypermap, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypermapDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub sigma: Vec<Vec<usize>>,
    pub alpha: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJson {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    sigma: Vec<Vec<usize>>,
    alpha: Vec<Vec<usize>>,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Cycles with the column (1-based, in characters) where each point starts.
type LocatedCycles = Vec<Vec<(usize, usize)>>;

fn parse_cycles(text: &str, line: usize, col0: usize) -> Result<LocatedCycles> {
    let chars: Vec<char> = text.chars().collect();
    let at = |k: usize| format!("line {line}, column {}", col0 + k);
    let mut cycles = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        if c != '(' {
            return Err(parse_error(at(k), format!("expected `(`, found `{c}`")));
        }
        k += 1;
        let mut cycle = Vec::new();
        loop {
            while k < chars.len() && (chars[k].is_whitespace() || chars[k] == ',') {
                k += 1;
            }
            if k == chars.len() {
                return Err(parse_error(at(k), "unclosed cycle"));
            }
            if chars[k] == ')' {
                k += 1;
                break;
            }
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            if start == k {
                return Err(parse_error(at(k), format!("expected a point, found `{}`", chars[k])));
            }
            let digits: String = chars[start..k].iter().collect();
            let p: usize = digits.parse().map_err(|_| parse_error(at(start), format!("point `{digits}` is too large")))?;
            if p == 0 {
                return Err(parse_error(at(start), "points are numbered from 1"));
            }
            cycle.push((p, col0 + start));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Rejects repeated points and points beyond `n`.
fn check_points(cycles: &[Vec<(usize, String)>], n: usize, what: &str) -> Result<()> {
    let mut seen: Vec<Option<&str>> = vec![None; n];
    for cycle in cycles {
        for (p, loc) in cycle {
            if *p == 0 || *p > n {
                return Err(parse_error(loc.clone(), format!("{what}: point {p} out of range 1..={n}")));
            }
            if let Some(first) = seen[p - 1] {
                return Err(parse_error(loc.clone(), format!("{what}: point {p} repeated (first at {first})")));
            }
            seen[p - 1] = Some(loc);
        }
    }
    Ok(())
}

fn strip(cycles: Vec<Vec<(usize, String)>>) -> Vec<Vec<usize>> {
    cycles.into_iter().map(|c| c.into_iter().map(|(p, _)| p).collect()).collect()
}

fn finish(
    name: Option<String>,
    n: Option<usize>,
    sigma: Vec<Vec<(usize, String)>>,
    alpha: Vec<Vec<(usize, String)>>,
) -> Result<HypermapDocument> {
    let largest = sigma.iter().chain(&alpha).flatten().map(|(p, _)| *p).max().unwrap_or(0);
    let n = n.unwrap_or(largest);
    check_points(&sigma, n, "sigma")?;
    check_points(&alpha, n, "alpha")?;
    Ok(HypermapDocument { name, n, sigma: strip(sigma), alpha: strip(alpha) })
}

impl HypermapDocument {
    /// Parses either format; text starting with `{` is read as JSON.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: RawJson = serde_json::from_str(text)
            .map_err(|e| parse_error(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
        let locate = |cycles: Vec<Vec<usize>>, key: &str| -> Vec<Vec<(usize, String)>> {
            cycles
                .into_iter()
                .enumerate()
                .map(|(ci, c)| c.into_iter().enumerate().map(|(pi, p)| (p, format!("{key}[{ci}][{pi}]"))).collect())
                .collect()
        };
        let sigma = locate(raw.sigma, "sigma");
        let alpha = locate(raw.alpha, "alpha");
        finish(raw.name, raw.n, sigma, alpha)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut n = None;
        let mut sigma = None;
        let mut alpha = None;
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw_line.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some(colon) = content.find(':') else {
                return Err(parse_error(format!("line {line}, column 1"), "expected `key: value`"));
            };
            let key = content[..colon].trim();
            let value = &content[colon + 1..];
            let value_col = content[..colon + 1].chars().count() + 1;
            let dup = |what: &str| parse_error(format!("line {line}, column 1"), format!("`{what}` given twice"));
            let locate = |cycles: LocatedCycles| -> Vec<Vec<(usize, String)>> {
                cycles
                    .into_iter()
                    .map(|c| c.into_iter().map(|(p, col)| (p, format!("line {line}, column {col}"))).collect())
                    .collect()
            };
            match key {
                "sigma" | "alpha" => {
                    let cycles = locate(parse_cycles(value, line, value_col)?);
                    let slot = if key == "sigma" { &mut sigma } else { &mut alpha };
                    if slot.replace(cycles).is_some() {
                        return Err(dup(key));
                    }
                }
                "n" => {
                    let v = value.trim();
                    let parsed = v
                        .parse::<usize>()
                        .map_err(|_| parse_error(format!("line {line}, column {value_col}"), format!("`{v}` is not a size")))?;
                    if n.replace(parsed).is_some() {
                        return Err(dup("n"));
                    }
                }
                "name" => {
                    if name.replace(value.trim().to_string()).is_some() {
                        return Err(dup("name"));
                    }
                }
                other => {
                    return Err(parse_error(format!("line {line}, column 1"), format!("unknown key `{other}`")));
                }
            }
        }
        let missing = |k: &str| parse_error("end of input", format!("missing `{k}:` line"));
        let sigma = sigma.ok_or_else(|| missing("sigma"))?;
        let alpha = alpha.ok_or_else(|| missing("alpha"))?;
        finish(name, n, sigma, alpha)
    }

    pub fn to_hypermap(&self) -> Result<Hypermap> {
        Hypermap::from_cycles(self.n, &self.sigma, &self.alpha)
    }

    pub fn from_hypermap(h: &Hypermap, name: Option<String>) -> Self {
        HypermapDocument { name, n: h.n(), sigma: h.sigma().cycles(), alpha: h.alpha().cycles() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

/// Canonical text: `name` if present, then `n`, then both permutations with
/// every cycle, fixed points included.
impl fmt::Display for HypermapDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        writeln!(f, "n: {}", self.n)?;
        let show = |cycles: &[Vec<usize>]| {
            cycles
                .iter()
                .map(|c| format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
                .collect::<String>()
        };
        match self.to_hypermap() {
            Ok(h) => {
                writeln!(f, "sigma: {}", h.sigma())?;
                write!(f, "alpha: {}", h.alpha())
            }
            Err(_) => {
                writeln!(f, "sigma: {}", show(&self.sigma))?;
                write!(f, "alpha: {}", show(&self.alpha))
            }
        }
    }
}

/// Parses a hypermap in either format.
pub fn parse_hypermap(text: &str) -> Result<Hypermap> {
    HypermapDocument::parse(text)?.to_hypermap()
}

/// Canonical text of a hypermap.
pub fn print_hypermap(h: &Hypermap) -> String {
    HypermapDocument::from_hypermap(h, None).to_string()
}

/// Parses a single permutation in cycle notation on `1..=n`.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let cycles: Vec<Vec<(usize, String)>> = parse_cycles(text, 1, 1)?
        .into_iter()
        .map(|c| c.into_iter().map(|(p, col)| (p, format!("column {col}"))).collect())
        .collect();
    check_points(&cycles, n, "permutation")?;
    Permutation::from_cycles(n, &strip(cycles))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_example() {
        let h = parse_hypermap("sigma: (1 4)(2 5)(3)\nalpha: (1 2 3)(4 5)").unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.sigma().to_string(), "(1 4)(2 5)(3)");
        assert_eq!(print_hypermap(&h), "n: 5\nsigma: (1 4)(2 5)(3)\nalpha: (1 2 3)(4 5)");
        let one = parse_hypermap("sigma: (1)\nalpha: (1)").unwrap();
        assert_eq!(one.n(), 1);
    }

    #[test]
    fn omitted_points_are_fixed() {
        let h = parse_hypermap("n: 4\nsigma: (1,4)\nalpha: ").unwrap();
        assert_eq!(h.sigma().to_string(), "(1 4)(2)(3)");
        assert!(h.alpha().is_identity());
    }

    #[test]
    fn json_example() {
        let doc = HypermapDocument::parse(r#"{"n": 5, "sigma": [[1,4],[2,5],[3]], "alpha": [[1,2,3],[4,5]], "name": "fig"}"#)
            .unwrap();
        assert_eq!(doc.name.as_deref(), Some("fig"));
        let back = HypermapDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back.to_hypermap().unwrap(), doc.to_hypermap().unwrap());
    }

    fn location(e: Error) -> String {
        match e {
            Error::Parse { location, .. } => location,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let dup = HypermapDocument::parse("sigma: (1 2)(2 3)\nalpha: (1)").unwrap_err();
        assert_eq!(location(dup), "line 1, column 14");
        let range = HypermapDocument::parse("n: 2\nsigma: (1 3)\nalpha: (1)").unwrap_err();
        assert_eq!(location(range), "line 2, column 11");
        let syntax = HypermapDocument::parse("sigma: (1 2\nalpha: (1)").unwrap_err();
        assert_eq!(location(syntax), "line 1, column 12");
        let junk = HypermapDocument::parse("sigma: (1 x)\nalpha: ()").unwrap_err();
        assert_eq!(location(junk), "line 1, column 11");
        assert!(HypermapDocument::parse("sigma: (1)").is_err());
        assert!(HypermapDocument::parse("beta: (1)\n").is_err());
        assert!(HypermapDocument::parse("sigma: (0)\nalpha: (1)").is_err());
        let json_dup = HypermapDocument::parse(r#"{"sigma": [[1, 1]], "alpha": []}"#).unwrap_err();
        assert_eq!(location(json_dup), "sigma[0][1]");
        assert!(matches!(HypermapDocument::parse("{\"sigma\": [[1]]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn permutation_text() {
        assert_eq!(parse_permutation("(1 2)(3 4)", 5).unwrap().to_string(), "(1 2)(3 4)(5)");
        assert!(parse_permutation("(1 6)", 5).is_err());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
        }

        proptest! {
            #[test]
            fn round_trip((s, a) in (1usize..9).prop_flat_map(|n| (perm(n), perm(n)))) {
                let h = Hypermap::new(Permutation::from_images(&s).unwrap(), Permutation::from_images(&a).unwrap()).unwrap();
                let text = print_hypermap(&h);
                let back = parse_hypermap(&text).unwrap();
                prop_assert_eq!(&back, &h);
                prop_assert_eq!(back.canonical_form(), h.canonical_form());
                prop_assert_eq!(print_hypermap(&back), text);
            }
        }
    }
}
