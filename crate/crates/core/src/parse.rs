//! Command-line notations for weights and subalgebra factor lists.

use crate::embed::{SubalgebraFactor, SubalgebraSpec};
use crate::error::{Error, Result};
use crate::liealg::{AlgebraType, Weight};
use crate::number::{parse_rational, q};

/// Comma-separated integers, e.g. `"0,0,1"`. Brackets are tolerated.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let t = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    if t.is_empty() {
        return Err(Error::Parse("empty integer list".into()));
    }
    t.split(',')
        .map(|part| {
            let p = part.trim().replace('\u{2212}', "-");
            p.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {part:?} in {text:?}")))
        })
        .collect()
}

/// A weight of `ty` in the fundamental-weight basis, e.g. `"0,0,1"` for `w3`.
pub fn parse_weight(ty: AlgebraType, text: &str) -> Result<Weight> {
    let coords = parse_int_list(text)?;
    if coords.len() != ty.rank() {
        return Err(Error::Parse(format!(
            "weight {text:?} has {} coordinates, {ty} has rank {}",
            coords.len(),
            ty.rank()
        )));
    }
    Weight::integral(ty, &coords)
}

/// Factors separated by `x`, `,` or `*`, each with an optional embedding index:
/// `"G2xF4"`, `"A1^24,A1^15"`, `"G2^2xA1^7"`, `"A1^3/2"`.
pub fn parse_factor_spec(text: &str) -> Result<SubalgebraSpec> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty factor list".into()));
    }
    let mut factors = Vec::new();
    for part in t.split(['x', 'X', ',', '*', '\u{00d7}']) {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Parse(format!("empty factor in {text:?}")));
        }
        let (ty, index) = match part.split_once('^') {
            Some((ty, idx)) => (ty.parse::<AlgebraType>()?, parse_rational(idx)?),
            None => (part.parse::<AlgebraType>()?, q(1)),
        };
        factors.push(SubalgebraFactor { ty, index });
    }
    SubalgebraSpec::new(t, factors)
}
