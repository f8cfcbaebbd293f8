//! Output assembly: every command produces a JSON payload plus text and
//! LaTeX renderings, wrapped into one envelope.
//!
//! Coefficient arrays are emitted low-degree-first as decimal strings, so
//! arbitrary-precision values survive every JSON consumer. Half-Poincaré
//! style polynomials are shown both in the canonical variable `z` and in `t`
//! with `z = t²`; Hilbert series keep their natural `z` grading.

use homspace::exactalg::{IntPoly, RatFunc};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One command's result in all three renderings.
pub struct CommandOutput {
    pub json: Value,
    pub text: Vec<String>,
    pub latex: Vec<String>,
}

pub fn render_envelope(
    command: &str,
    status: &str,
    error: Option<&str>,
    output: Option<&CommandOutput>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let envelope = json!({
                "command": command,
                "status": status,
                "error": error,
                "result": output.map(|o| o.json.clone()).unwrap_or(Value::Null),
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("valid json");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut lines = Vec::new();
            if status != "ok" {
                lines.push(format!("status: {status}"));
            }
            if let Some(e) = error {
                lines.push(format!("error: {e}"));
            }
            if let Some(o) = output {
                lines.extend(o.text.iter().cloned());
            }
            lines.join("\n") + "\n"
        }
        Format::Latex => {
            let mut lines = Vec::new();
            if status != "ok" {
                lines.push(format!("% status: {status}"));
            }
            if let Some(e) = error {
                lines.push(format!("% error: {e}"));
            }
            if let Some(o) = output {
                lines.extend(o.latex.iter().cloned());
            }
            lines.join("\n") + "\n"
        }
    }
}

pub fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn poly_json(p: &IntPoly) -> Value {
    json!({ "variable": "z", "coeffs": coeff_strings(p) })
}

pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({
        "variable": "z",
        "num": coeff_strings(f.num()),
        "den": coeff_strings(f.den()),
    })
}

/// Renders `Σ c_i v^{s·i}` with descending powers; `s = 2` performs the
/// `z = t²` substitution.
pub fn poly_string(p: &IntPoly, var: &str, scale: usize, latex: bool) -> String {
    poly_terms(p, var, scale, latex, false)
}

fn poly_terms(p: &IntPoly, var: &str, scale: usize, latex: bool, ascending: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    let terms: Vec<(usize, &BigInt)> = if ascending {
        p.coeffs().iter().enumerate().collect()
    } else {
        p.coeffs().iter().enumerate().rev().collect()
    };
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&monomial(&mag, var, scale * i, latex));
    }
    out
}

fn monomial(mag: &BigInt, var: &str, exp: usize, latex: bool) -> String {
    match exp {
        0 => mag.to_string(),
        _ => {
            let coeff = if mag.is_one() {
                String::new()
            } else if latex {
                format!("{mag} ")
            } else {
                format!("{mag}*")
            };
            let power = match (exp, latex) {
                (1, _) => var.to_string(),
                (e, true) => format!("{var}^{{{e}}}"),
                (e, false) => format!("{var}^{e}"),
            };
            format!("{coeff}{power}")
        }
    }
}

/// Hilbert-series style: ascending terms, e.g. `(1 + z^2) / (1 - 2*z^2 + z^4)`.
pub fn ratfunc_string(f: &RatFunc, latex: bool) -> String {
    let num = poly_terms(f.num(), "z", 1, latex, true);
    if f.den().is_one() {
        num
    } else if latex {
        format!(
            "\\frac{{{num}}}{{{}}}",
            poly_terms(f.den(), "z", 1, latex, true)
        )
    } else {
        format!("({num}) / ({})", poly_terms(f.den(), "z", 1, latex, true))
    }
}

/// `Σ c_k s^k t^k`, descending.
pub fn e_poly_string(monomials: &[(usize, BigInt)], latex: bool) -> String {
    if monomials.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in monomials.iter().rev() {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if *k == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        let s_part = monomial(&mag, "s", *k, latex);
        let t_part = monomial(&BigInt::one(), "t", *k, latex);
        out.push_str(&format!("{s_part} {t_part}"));
    }
    out
}

pub fn e_poly_json(monomials: &[(usize, BigInt)]) -> Value {
    Value::Array(
        monomials
            .iter()
            .map(|(k, c)| json!({ "power": k, "coeff": c.to_string() }))
            .collect(),
    )
}

/// Standard three-line block for a polynomial result: z form plus the
/// `z = t²` substitution.
pub fn poly_output(name: &str, p: &IntPoly) -> CommandOutput {
    CommandOutput {
        json: json!({ name: poly_json(p) }),
        text: vec![
            format!("{name}(z) = {}", poly_string(p, "z", 1, false)),
            format!("in t (z = t^2): {}", poly_string(p, "t", 2, false)),
        ],
        latex: vec![poly_string(p, "t", 2, true)],
    }
}
