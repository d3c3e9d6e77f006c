// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Curve specifications: JSON files and inline `builtin:` strings.
//!
//! ```json
//! {"kind": "quadratic", "a": 1.0}
//! {"kind": "family", "b": 1.0, "c": 0.5}
//! {"kind": "ellipse", "a": 2.0, "b": 1.0}
//! {"kind": "offset", "base": {"kind": "quadratic", "a": 1.0}, "k": 0.5}
//! {"kind": "custom_poly", "coefficients": [0, 0, 1, 0, 0.1], "domain": [-2, 2]}
//! ```
//!
//! Inline form: `builtin:NAME[:key=value,...]`, e.g. `builtin:ellipse:a=2,b=1`.
//! Bare numbers are taken as the kind's parameters in order, so
//! `builtin:ellipse:2,1` is the same curve.

use std::path::Path;

use archimedes_core::curve::{
    make_ellipse, make_example10, make_family_curve, make_offset_graph, make_polynomial,
    make_quadratic, Curve, Interval,
};
use archimedes_core::families::FamilyParams;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::CliError;

fn zero() -> f64 {
    0.0
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    /// `y = a x^2 + b x + c` on `(-4, 4)`.
    Quadratic {
        #[serde(default = "one")]
        a: f64,
        #[serde(default = "zero")]
        b: f64,
        #[serde(default = "zero")]
        c: f64,
    },
    /// `y = b((1 - cx) - sqrt(1 - 2cx))`.
    Family {
        b: f64,
        c: f64,
    },
    /// The piecewise parabola with a curvature jump at the origin.
    Example10,
    Ellipse {
        a: f64,
        b: f64,
    },
    /// `y = f(x) + k` for a graph `f`.
    Offset {
        base: Box<CurveSpec>,
        k: f64,
    },
    /// Ascending polynomial coefficients on an explicit domain.
    CustomPoly {
        coefficients: Vec<f64>,
        domain: [f64; 2],
    },
}

impl CurveSpec {
    pub fn build(&self) -> Result<Curve, CliError> {
        let curve = match self {
            CurveSpec::Quadratic { a, b, c } => make_quadratic(*a, *b, *c)?,
            CurveSpec::Family { b, c } => {
                FamilyParams::new(*b, *c)?;
                make_family_curve(*b, *c)?
            }
            CurveSpec::Example10 => make_example10()?,
            CurveSpec::Ellipse { a, b } => make_ellipse(*a, *b)?,
            CurveSpec::Offset { base, k } => {
                let base = base.build()?;
                let graph = base
                    .as_graph()
                    .ok_or_else(|| CliError::Usage("offset base must be a graph curve".into()))?;
                make_offset_graph(graph, *k)?.into()
            }
            CurveSpec::CustomPoly {
                coefficients,
                domain,
            } => make_polynomial(coefficients, Interval::new(domain[0], domain[1])?)?,
        };
        Ok(curve)
    }

    pub fn family_params(&self) -> Option<FamilyParams> {
        match self {
            CurveSpec::Family { b, c } => Some(FamilyParams { b: *b, c: *c }),
            _ => None,
        }
    }
}

fn positional_names(kind: &str) -> &'static [&'static str] {
    match kind {
        "quadratic" => &["a", "b", "c"],
        "family" => &["b", "c"],
        "ellipse" => &["a", "b"],
        "circle" => &["r"],
        _ => &[],
    }
}

fn parse_number(key: &str, raw: &str) -> Result<f64, CliError> {
    raw.trim().parse::<f64>().map_err(|_| {
        CliError::Usage(format!(
            "builtin parameter `{key}`: `{raw}` is not a number"
        ))
    })
}

/// Parse `builtin:NAME[:params]`.
pub fn parse_builtin(text: &str) -> Result<CurveSpec, CliError> {
    let mut tokens = text
        .split([':', ',', ' '])
        .map(str::trim)
        .filter(|t| !t.is_empty());
    let name = tokens
        .next()
        .ok_or_else(|| CliError::Usage("empty builtin curve name".into()))?
        .to_ascii_lowercase();
    let names = positional_names(&name);
    let mut obj = Map::new();
    let mut position = 0;
    for tok in tokens {
        let (key, raw) = match tok.split_once('=') {
            Some((k, v)) => (k.trim().to_string(), v),
            None => {
                let key = names.get(position).ok_or_else(|| {
                    CliError::Usage(format!(
                        "too many positional parameters for builtin `{name}`"
                    ))
                })?;
                position += 1;
                (key.to_string(), tok)
            }
        };
        let v = parse_number(&key, raw)?;
        obj.insert(key, Value::from(v));
    }
    if name == "circle" {
        let r = match obj.remove("r") {
            Some(v) => v,
            None => Value::from(1.0),
        };
        if let Some(extra) = obj.keys().next() {
            return Err(CliError::Usage(format!(
                "unknown parameter `{extra}` for builtin `circle`"
            )));
        }
        obj.insert("a".into(), r.clone());
        obj.insert("b".into(), r);
        obj.insert("kind".into(), Value::from("ellipse"));
    } else {
        obj.insert("kind".into(), Value::from(name.as_str()));
    }
    serde_json::from_value(Value::Object(obj))
        .map_err(|e| CliError::Usage(format!("builtin `{text}`: {e}")))
}

/// Resolve a `--curve` argument: `builtin:...` or a path to a JSON spec.
pub fn resolve(arg: &str) -> Result<CurveSpec, CliError> {
    if let Some(rest) = arg.strip_prefix("builtin:") {
        return parse_builtin(rest);
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Usage(format!("cannot read curve spec `{}`: {e}", path.display()))
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid curve spec `{}`: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_forms_agree() {
        let a = parse_builtin("ellipse:a=2,b=1").unwrap();
        let b = parse_builtin("ellipse 2 1").unwrap();
        let c = parse_builtin("ellipse:2,1").unwrap();
        assert_eq!(a, CurveSpec::Ellipse { a: 2.0, b: 1.0 });
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn quadratic_defaults() {
        assert_eq!(
            parse_builtin("quadratic").unwrap(),
            CurveSpec::Quadratic {
                a: 1.0,
                b: 0.0,
                c: 0.0
            }
        );
        assert_eq!(
            parse_builtin("quadratic a=4").unwrap(),
            CurveSpec::Quadratic {
                a: 4.0,
                b: 0.0,
                c: 0.0
            }
        );
    }

    #[test]
    fn circle_and_example10() {
        assert_eq!(
            parse_builtin("circle").unwrap(),
            CurveSpec::Ellipse { a: 1.0, b: 1.0 }
        );
        assert_eq!(parse_builtin("example10").unwrap(), CurveSpec::Example10);
    }

    #[test]
    fn bad_inline_specs() {
        assert!(parse_builtin("hyperbola").is_err());
        assert!(parse_builtin("ellipse:a=x").is_err());
        assert!(parse_builtin("ellipse:1,2,3").is_err());
        assert!(parse_builtin("quadratic:q=1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let spec = CurveSpec::Offset {
            base: Box::new(CurveSpec::Quadratic {
                a: 1.0,
                b: 0.0,
                c: 0.0,
            }),
            k: 0.5,
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<CurveSpec>(&text).unwrap(), spec);
        let poly: CurveSpec = serde_json::from_str(
            r#"{"kind":"custom_poly","coefficients":[0,0,1],"domain":[-1,1]}"#,
        )
        .unwrap();
        assert!(poly.build().is_ok());
    }

    #[test]
    fn family_preconditions() {
        assert!(parse_builtin("family:b=1,c=0").unwrap().build().is_err());
        assert!(parse_builtin("family:b=-1,c=1").unwrap().build().is_err());
    }
}
