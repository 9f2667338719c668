//! JSON value construction and polynomial rendering. All maps go through
//! `serde_json::Map` (sorted keys), so identical inputs yield byte-identical
//! output. Index sets are 1-based at this boundary.

use num_bigint::BigInt;
use serde_json::{json, Value};
use supernormal::linear::Q;

/// A `BigInt` as a JSON number when it fits `i64`, a string otherwise.
pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

/// A rational as `"p"` or `"p/q"`.
pub fn q_str(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Shift a 0-based index set to the 1-based convention used in all output.
pub fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|&i| i + 1).collect()
}

/// Variable names: `x, y, z` for up to three variables, `x1..xn` beyond.
fn var_name(i: usize, n: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// A monomial from its exponent vector, factors joined with `*`; the empty
/// monomial renders as `1`.
pub fn monomial(expo: &[i64]) -> String {
    let n = expo.len();
    let factors: Vec<String> = expo
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                var_name(i, n)
            } else {
                format!("{}^{}", var_name(i, n), e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// A binomial with the given leading term first.
pub fn binomial(lead: &[i64], trail: &[i64]) -> String {
    format!("{} - {}", monomial(lead), monomial(trail))
}
