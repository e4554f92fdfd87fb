//! Level and Casimir constants forced on `k` in `so(V)`, `sp(V)` or `sl(V)`
//! by a conformal embedding with `V` irreducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::number::{frac, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbeddingKind {
    Orthogonal,
    Symplectic,
    /// `k = 1` for `Plus`, `k = -1` for `Minus`.
    Linear(Sign),
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingKind::Orthogonal => f.write_str("orthogonal"),
            EmbeddingKind::Symplectic => f.write_str("symplectic"),
            EmbeddingKind::Linear(Sign::Plus) => f.write_str("linear+"),
            EmbeddingKind::Linear(Sign::Minus) => f.write_str("linear-"),
        }
    }
}

impl FromStr for EmbeddingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "orthogonal" | "so" => Ok(EmbeddingKind::Orthogonal),
            "symplectic" | "sp" => Ok(EmbeddingKind::Symplectic),
            "linear+" | "sl+" => Ok(EmbeddingKind::Linear(Sign::Plus)),
            "linear-" | "sl-" => Ok(EmbeddingKind::Linear(Sign::Minus)),
            other => Err(Error::Parse(format!("unknown embedding kind `{other}`"))),
        }
    }
}

/// `k`, the eigenvalue `2 g1` of the Casimir of `k` on itself and `gamma`
/// on `p`, all for the form restricted from the ambient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConstants {
    pub k: Q,
    pub g1: Q,
    pub gamma: Q,
}

impl NecessaryConstants {
    /// `gamma / (2 (k + g1))`, which must be 1.
    pub fn balance(&self) -> Q {
        &self.gamma / (q(2) * (&self.k + &self.g1))
    }
}

pub fn necessary_constants(
    kind: EmbeddingKind,
    dim_k: u64,
    dim_v: u64,
) -> Result<NecessaryConstants> {
    let dk = q(dim_k as i64);
    let v = dim_v as i64;
    if dim_k == 0 || v < 2 {
        return Err(Error::Invalid(format!(
            "need dim k > 0 and dim V > 1, got {dim_k} and {dim_v}"
        )));
    }
    Ok(match kind {
        EmbeddingKind::Orthogonal => {
            let gamma = q(2) * q(v - 4) * &dk / frac(v * (v - 1), 2);
            NecessaryConstants {
                k: q(-2),
                g1: &gamma / q(2) + q(2),
                gamma,
            }
        }
        EmbeddingKind::Symplectic => {
            let gamma = q(v + 4) * &dk / frac(v * (v + 1), 2);
            NecessaryConstants {
                k: q(1),
                g1: &gamma / q(2) - q(1),
                gamma,
            }
        }
        EmbeddingKind::Linear(sign) => {
            let (k, s) = match sign {
                Sign::Plus => (q(1), -1),
                Sign::Minus => (q(-1), 1),
            };
            let ratio = &dk / q(v + s);
            NecessaryConstants {
                g1: &ratio - &k,
                gamma: q(2) * ratio,
                k,
            }
        }
    })
}
