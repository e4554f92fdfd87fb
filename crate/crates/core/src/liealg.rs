//! Root systems and invariant forms of the finite-dimensional simple Lie
//! algebras.
//!
//! Weights are coordinate vectors in the fundamental-weight basis. The
//! invariant form is normalised so that long roots have squared length 2,
//! and is stored as the Gram matrix `F[i][j] = (w_i, w_j) = D * C^-1`, with
//! `C` the Cartan matrix (Bourbaki numbering) and `D` the diagonal of half
//! squared simple-root lengths.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::number::{frac, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

/// A Cartan type such as `B3` or `E8`. Construction enforces the rank bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bound = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B if rank < 2 => Some("type B needs rank >= 2"),
            Family::C if rank < 2 => Some("type C needs rank >= 2"),
            Family::D if rank < 3 => Some("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F needs rank 4"),
            Family::G if rank != 2 => Some("type G needs rank 2"),
            _ => None,
        };
        match bound {
            Some(reason) => Err(Error::InvalidAlgebra {
                family: family.letter(),
                rank,
                reason: reason.to_string(),
            }),
            None => Ok(AlgebraType { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every constructible type of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<AlgebraType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = AlgebraType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::Parse(format!("not an algebra type: {s:?}"));
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        AlgebraType::new(family, rank)
    }
}

/// A positive root, kept in both the simple-root and fundamental-weight bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub alpha: Vec<i64>,
    pub omega: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.alpha.iter().sum()
    }
}

/// A weight in the fundamental-weight basis with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    algebra: AlgebraType,
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(algebra: AlgebraType, coords: Vec<Q>) -> Result<Self> {
        if coords.len() != algebra.rank() {
            return Err(Error::WeightLength {
                algebra: algebra.to_string(),
                expected: algebra.rank(),
                found: coords.len(),
            });
        }
        Ok(Weight { algebra, coords })
    }

    pub fn integral(algebra: AlgebraType, coords: &[i64]) -> Result<Self> {
        Weight::new(algebra, coords.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(algebra: AlgebraType) -> Self {
        Weight {
            algebra,
            coords: vec![Q::zero(); algebra.rank()],
        }
    }

    /// The fundamental weight `w_i`, 1-based as in Bourbaki.
    pub fn fundamental(algebra: AlgebraType, i: usize) -> Result<Self> {
        if i == 0 || i > algebra.rank() {
            return Err(Error::Invalid(format!(
                "{algebra} has no fundamental weight w{i}"
            )));
        }
        let mut c = vec![0; algebra.rank()];
        c[i - 1] = 1;
        Weight::integral(algebra, &c)
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn to_integral(&self) -> Result<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer()
                        .to_i64()
                        .ok_or_else(|| Error::Invalid(format!("coordinate {c} too large")))
                } else {
                    Err(Error::NotIntegral(self.to_string()))
                }
            })
            .collect()
    }

    /// Integer coordinates of a dominant integral weight, or `NotDominant`.
    pub fn to_dominant(&self) -> Result<Vec<i64>> {
        if !self.is_dominant_integral() {
            return Err(Error::NotDominant(self.to_string()));
        }
        self.to_integral()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        same_algebra(self.algebra, other.algebra)?;
        Ok(Weight {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Q) -> Weight {
        Weight {
            algebra: self.algebra,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Sum notation, e.g. `w1+2w3`; `0` for the zero weight.
    pub fn omega_string(&self) -> String {
        omega_string(&self.coords)
    }
}

pub fn omega_string<T: fmt::Display + PartialEq + Zero + One>(coords: &[T]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(format!("w{}", i + 1));
        } else {
            parts.push(format!("{}w{}", c, i + 1));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(crate::number::fmt_q).collect();
        write!(f, "{}[{}]", self.algebra, c.join(","))
    }
}

fn same_algebra(expected: AlgebraType, found: AlgebraType) -> Result<()> {
    if expected != found {
        return Err(Error::AlgebraMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

/// Immutable root-system datum of a simple Lie algebra.
#[derive(Debug)]
pub struct SimpleAlgebra {
    ty: AlgebraType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Q>>,
    form: Vec<Vec<Q>>,
    form_int: Vec<Vec<i64>>,
    form_scale: i64,
    positive_roots: Vec<Root>,
    rho: Vec<i64>,
    theta: Vec<i64>,
    theta_short: Vec<i64>,
    dual_coxeter: u32,
    dim: usize,
}

/// Squared lengths of the simple roots and the off-diagonal products
/// `(a_i, a_j)` for adjacent nodes, 0-based, in Bourbaki numbering.
fn simple_root_data(ty: AlgebraType) -> (Vec<Q>, Vec<(usize, usize, Q)>) {
    let n = ty.rank();
    let chain = |len: usize, p: Q| -> Vec<(usize, usize, Q)> {
        (0..len.saturating_sub(1))
            .map(|i| (i, i + 1, p.clone()))
            .collect()
    };
    match ty.family() {
        Family::A => (vec![q(2); n], chain(n, q(-1))),
        Family::B => {
            let mut len = vec![q(2); n];
            len[n - 1] = q(1);
            (len, chain(n, q(-1)))
        }
        Family::C => {
            let mut len = vec![q(1); n];
            len[n - 1] = q(2);
            let mut edges = chain(n - 1, frac(-1, 2));
            edges.push((n - 2, n - 1, q(-1)));
            (len, edges)
        }
        Family::D => {
            let mut edges = chain(n - 1, q(-1));
            edges.push((n - 3, n - 1, q(-1)));
            (vec![q(2); n], edges)
        }
        Family::E => {
            // 1-3-4-5-6(-7-8) with 2 attached to 4
            let mut edges = vec![(0, 2, q(-1)), (1, 3, q(-1)), (2, 3, q(-1))];
            for i in 3..n - 1 {
                edges.push((i, i + 1, q(-1)));
            }
            (vec![q(2); n], edges)
        }
        Family::F => (
            vec![q(2), q(2), q(1), q(1)],
            vec![(0, 1, q(-1)), (1, 2, q(-1)), (2, 3, frac(-1, 2))],
        ),
        Family::G => (vec![frac(2, 3), q(2)], vec![(0, 1, q(-1))]),
    }
}

fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

impl SimpleAlgebra {
    pub fn new(ty: AlgebraType) -> Self {
        let n = ty.rank();
        let (lengths, edges) = simple_root_data(ty);
        let mut gram = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            gram[i][i] = lengths[i].clone();
        }
        for (i, j, p) in edges {
            gram[i][j] = p.clone();
            gram[j][i] = p;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * &gram[i][j] / &gram[i][i];
                        assert!(v.is_integer(), "non-integral Cartan entry");
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let cartan_inv = invert(&cartan_q);
        let form: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let d = &gram[i][i] / q(2);
                (0..n).map(|j| &d * &cartan_inv[i][j]).collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..i {
                assert_eq!(form[i][j], form[j][i], "invariant form must be symmetric");
            }
        }
        let form_scale = form
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .to_i64()
            .expect("form denominators are small");
        let form_int = form
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| (x * q(form_scale)).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();

        let positive_roots = closure_roots(&cartan);
        let rho = vec![1; n];
        let theta = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("non-empty root system")
            .omega
            .clone();

        let mut alg = SimpleAlgebra {
            ty,
            cartan,
            cartan_inv,
            form,
            form_int,
            form_scale,
            positive_roots,
            rho,
            theta: theta.clone(),
            theta_short: theta,
            dual_coxeter: 0,
            dim: 0,
        };
        let long = q(2);
        alg.theta_short = alg
            .positive_roots
            .iter()
            .filter(|r| alg.ip_q(&r.omega, &r.omega) < long)
            .max_by_key(|r| r.height())
            .map(|r| r.omega.clone())
            .unwrap_or_else(|| alg.theta.clone());
        let h = alg.ip_q(&alg.rho, &alg.theta) + Q::one();
        alg.dual_coxeter = h.to_integer().to_u32().expect("positive integer h^vee");
        alg.dim = n + 2 * alg.positive_roots.len();
        alg
    }

    pub fn ty(&self) -> AlgebraType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the fundamental weights under the normalised form.
    pub fn form(&self) -> &[Vec<Q>] {
        &self.form
    }

    pub fn dual_coxeter(&self) -> u32 {
        self.dual_coxeter
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> Weight {
        self.weight_from(&self.rho)
    }

    pub fn theta(&self) -> Weight {
        self.weight_from(&self.theta)
    }

    pub fn theta_short(&self) -> Weight {
        self.weight_from(&self.theta_short)
    }

    pub fn rho_int(&self) -> &[i64] {
        &self.rho
    }

    pub fn theta_int(&self) -> &[i64] {
        &self.theta
    }

    pub fn theta_short_int(&self) -> &[i64] {
        &self.theta_short
    }

    pub fn is_simply_laced(&self) -> bool {
        self.theta == self.theta_short
    }

    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        Weight::integral(self.ty, coords)
    }

    pub(crate) fn weight_from(&self, coords: &[i64]) -> Weight {
        Weight::integral(self.ty, coords).expect("length matches rank")
    }

    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        Weight::fundamental(self.ty, i)
    }

    /// Positive roots in the fundamental-weight basis, ordered by height.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .map(|r| self.weight_from(&r.omega))
            .collect()
    }

    pub fn roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Simple root `a_i` (0-based) in the fundamental-weight basis.
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|r| self.cartan[r][i]).collect()
    }

    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Q> {
        same_algebra(self.ty, a.algebra)?;
        same_algebra(self.ty, b.algebra)?;
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                acc += &a.coords[i] * &self.form[i][j] * &b.coords[j];
            }
        }
        Ok(acc)
    }

    /// Denominator clearing the form: `(a, b) = ip_scaled(a, b) / form_scale`.
    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    pub fn ip_scaled(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc: i64 = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.form_int[i];
            let mut s: i64 = 0;
            for (j, &bj) in b.iter().enumerate() {
                s = s
                    .checked_add(row[j].checked_mul(bj).expect("form overflow"))
                    .expect("form overflow");
            }
            acc = acc
                .checked_add(ai.checked_mul(s).expect("form overflow"))
                .expect("form overflow");
        }
        acc
    }

    pub fn ip_q(&self, a: &[i64], b: &[i64]) -> Q {
        frac(self.ip_scaled(a, b), self.form_scale)
    }

    /// Coordinates in the simple-root basis.
    pub fn to_root_basis(&self, w: &Weight) -> Result<Vec<Q>> {
        same_algebra(self.ty, w.algebra)?;
        let n = self.rank();
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &self.cartan_inv[i][j] * &w.coords[j])
                    .fold(Q::zero(), |a, b| a + b)
            })
            .collect())
    }

    pub fn in_root_lattice(&self, w: &Weight) -> Result<bool> {
        same_algebra(self.ty, w.algebra)?;
        if !w.is_integral() {
            return Err(Error::NotIntegral(w.to_string()));
        }
        Ok(self.to_root_basis(w)?.iter().all(|x| x.is_integer()))
    }

    /// Applies the simple reflection `s_i` in place.
    pub fn reflect(&self, i: usize, w: &mut [i64]) {
        let c = w[i];
        if c == 0 {
            return;
        }
        for (r, x) in w.iter_mut().enumerate() {
            *x -= c * self.cartan[r][i];
        }
    }

    /// Dominant representative of the Weyl orbit of `w` together with the
    /// parity of the number of reflections used.
    pub fn to_dominant_chamber(&self, w: &[i64]) -> (Vec<i64>, bool) {
        let mut v = w.to_vec();
        let mut odd = false;
        while let Some(i) = v.iter().position(|&c| c < 0) {
            self.reflect(i, &mut v);
            odd = !odd;
        }
        (v, odd)
    }

    /// Highest weight of the dual module `L(w)*`.
    pub fn dual_highest(&self, w: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = w.iter().map(|c| -c).collect();
        self.to_dominant_chamber(&neg).0
    }

    pub fn isomorphism_note(&self) -> Option<&'static str> {
        match (self.ty.family(), self.ty.rank()) {
            (Family::D, 3) => Some("D3 is isomorphic to A3; data is built as type D"),
            _ => None,
        }
    }

    /// Standard orthogonal coordinates of a weight for the classical types.
    ///
    /// Type A gives the traceless `n+1`-vector; B, C and D give `n` coordinates
    /// with the normalised form being `sum x_i y_i` (B, D) or `1/2 sum x_i y_i` (C).
    pub fn to_epsilon(&self, w: &Weight) -> Result<Option<Vec<Q>>> {
        same_algebra(self.ty, w.algebra)?;
        let n = self.rank();
        let c = &w.coords;
        let tail = |i: usize, end: usize| -> Q {
            (i..end).map(|j| c[j].clone()).fold(Q::zero(), |a, b| a + b)
        };
        let out = match self.ty.family() {
            Family::A => {
                let raw: Vec<Q> = (0..=n).map(|i| tail(i, n)).collect();
                let mean = raw.iter().fold(Q::zero(), |a, b| a + b) / q(n as i64 + 1);
                raw.into_iter().map(|x| x - &mean).collect()
            }
            Family::B => (0..n).map(|i| tail(i, n - 1) + &c[n - 1] / q(2)).collect(),
            Family::C => (0..n).map(|i| tail(i, n)).collect(),
            Family::D => {
                let mut v: Vec<Q> = (0..n - 1)
                    .map(|i| tail(i, n - 2) + (&c[n - 2] + &c[n - 1]) / q(2))
                    .collect();
                v.push((&c[n - 1] - &c[n - 2]) / q(2));
                v
            }
            _ => return Ok(None),
        };
        Ok(Some(out))
    }
}

/// Positive roots by closure from the simple roots using root strings.
fn closure_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let simple_omega = |i: usize| -> Vec<i64> { (0..n).map(|r| cartan[r][i]).collect() };
    let mut roots: Vec<Root> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    for i in 0..n {
        let mut alpha = vec![0; n];
        alpha[i] = 1;
        index.insert(alpha.clone(), roots.len());
        roots.push(Root {
            alpha,
            omega: simple_omega(i),
        });
    }
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..n {
            // length of the a_i-string below beta
            let mut p = 0;
            let mut probe = beta.alpha.clone();
            loop {
                probe[i] -= 1;
                if index.contains_key(&probe) {
                    p += 1;
                } else {
                    break;
                }
            }
            let up = p - beta.omega[i];
            if up > 0 {
                let mut alpha = beta.alpha.clone();
                alpha[i] += 1;
                if !index.contains_key(&alpha) {
                    let omega: Vec<i64> = beta
                        .omega
                        .iter()
                        .zip(simple_omega(i))
                        .map(|(a, b)| a + b)
                        .collect();
                    index.insert(alpha.clone(), roots.len());
                    roots.push(Root { alpha, omega });
                }
            }
        }
        k += 1;
    }
    roots.sort_by_key(|r| (r.height(), std::cmp::Reverse(r.alpha.clone())));
    roots
}

/// Shared, lazily built algebra data.
pub fn algebra(ty: AlgebraType) -> Arc<SimpleAlgebra> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraType, Arc<SimpleAlgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = cache.lock().unwrap().get(&ty) {
        return a.clone();
    }
    let built = Arc::new(SimpleAlgebra::new(ty));
    cache.lock().unwrap().entry(ty).or_insert(built).clone()
}

/// Builds (or fetches) the algebra for a validated type.
pub fn build_algebra(ty: AlgebraType) -> Arc<SimpleAlgebra> {
    algebra(ty)
}

/// Parses `"B3"` and builds it.
pub fn algebra_from_str(s: &str) -> Result<Arc<SimpleAlgebra>> {
    Ok(algebra(s.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> Arc<SimpleAlgebra> {
        algebra_from_str(s).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(AlgebraType::new(Family::B, 1).is_err());
        assert!(AlgebraType::new(Family::C, 1).is_err());
        assert!(AlgebraType::new(Family::D, 2).is_err());
        assert!(AlgebraType::new(Family::E, 9).is_err());
        assert!(AlgebraType::new(Family::E, 5).is_err());
        assert!(AlgebraType::new(Family::F, 3).is_err());
        assert!(AlgebraType::new(Family::G, 3).is_err());
        assert!(AlgebraType::new(Family::A, 0).is_err());
        assert!(AlgebraType::new(Family::D, 3).is_ok());
        let err = "G3".parse::<AlgebraType>().unwrap_err();
        assert!(err.to_string().contains("rank 2"), "{err}");
        assert!("X3".parse::<AlgebraType>().is_err());
        assert!("B".parse::<AlgebraType>().is_err());
        assert!("B-3".parse::<AlgebraType>().is_err());
    }

    #[test]
    fn small_cases() {
        let g2 = alg("G2");
        assert_eq!(g2.dual_coxeter(), 4);
        assert_eq!(g2.dim(), 14);
        assert_eq!(g2.roots().len(), 6);

        let a1 = alg("A1");
        assert_eq!(a1.dual_coxeter(), 2);
        assert_eq!(a1.dim(), 3);
        assert_eq!(a1.theta_int(), &[2]);
        assert_eq!(a1.positive_roots(), vec![a1.weight(&[2]).unwrap()]);

        let e8 = alg("E8");
        assert_eq!(e8.dim(), 248);
        assert_eq!(e8.dual_coxeter(), 30);
        assert_eq!(e8.roots().len(), 120);
    }

    #[test]
    fn theta_in_bourbaki_numbering() {
        assert_eq!(alg("G2").theta_int(), &[0, 1]);
        assert_eq!(alg("G2").theta_short_int(), &[1, 0]);
        assert_eq!(alg("B3").theta_int(), &[0, 1, 0]);
        assert_eq!(alg("B3").theta_short_int(), &[1, 0, 0]);
        assert_eq!(alg("C3").theta_int(), &[2, 0, 0]);
        assert_eq!(alg("C3").theta_short_int(), &[0, 1, 0]);
        assert_eq!(alg("F4").theta_int(), &[1, 0, 0, 0]);
        assert_eq!(alg("F4").theta_short_int(), &[0, 0, 0, 1]);
        assert_eq!(alg("E8").theta_int(), &[0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(alg("A2").theta_int(), &[1, 1]);
    }

    #[test]
    fn inner_products_from_the_text() {
        let g2 = alg("G2");
        let w1 = g2.fundamental(1).unwrap();
        let shifted = w1.add(&g2.rho().scale(&q(2))).unwrap();
        assert_eq!(g2.inner_product(&w1, &shifted).unwrap(), q(4));

        let b3 = alg("B3");
        let w1 = b3.fundamental(1).unwrap();
        let shifted = w1.add(&b3.rho().scale(&q(2))).unwrap();
        assert_eq!(b3.inner_product(&w1, &shifted).unwrap(), q(6));

        let z = Weight::zero(b3.ty());
        assert_eq!(b3.inner_product(&z, &shifted).unwrap(), q(0));
    }

    #[test]
    fn mismatched_algebra_is_rejected() {
        let b3 = alg("B3");
        let c3 = alg("C3");
        let w = c3.fundamental(1).unwrap();
        assert!(matches!(
            b3.inner_product(&w, &w),
            Err(Error::AlgebraMismatch { .. })
        ));
        assert!(Weight::integral(b3.ty(), &[1, 0]).is_err());
    }

    #[test]
    fn root_lattice_membership() {
        let b3 = alg("B3");
        assert!(b3.in_root_lattice(&b3.fundamental(1).unwrap()).unwrap());
        assert!(!b3.in_root_lattice(&b3.fundamental(3).unwrap()).unwrap());
        let a2 = alg("A2");
        assert!(a2.in_root_lattice(&a2.theta()).unwrap());
        let d4 = alg("D4");
        assert!(!d4.in_root_lattice(&d4.fundamental(1).unwrap()).unwrap());
        let half = Weight::new(b3.ty(), vec![frac(1, 2), q(0), q(0)]).unwrap();
        assert!(matches!(
            b3.in_root_lattice(&half),
            Err(Error::NotIntegral(_))
        ));
    }

    #[test]
    fn epsilon_coordinates() {
        let b3 = alg("B3");
        let eps = b3.to_epsilon(&b3.fundamental(3).unwrap()).unwrap().unwrap();
        assert_eq!(eps, vec![frac(1, 2); 3]);
        let d4 = alg("D4");
        let eps = d4.to_epsilon(&d4.fundamental(3).unwrap()).unwrap().unwrap();
        assert_eq!(eps, vec![frac(1, 2), frac(1, 2), frac(1, 2), frac(-1, 2)]);
    }

    #[test]
    fn d3_carries_a_note() {
        assert!(alg("D3").isomorphism_note().is_some());
        assert_eq!(alg("D3").dim(), alg("A3").dim());
        assert_eq!(alg("D3").dual_coxeter(), alg("A3").dual_coxeter());
    }

    #[test]
    fn root_lengths_by_family() {
        for ty in AlgebraType::all_up_to_rank(8) {
            let a = algebra(ty);
            let mut simple = 0;
            for r in a.roots() {
                let len = a.ip_q(&r.omega, &r.omega);
                assert!(
                    len == q(2) || len == q(1) || len == frac(2, 3),
                    "{ty}: root length {len}"
                );
                if r.height() == 1 {
                    simple += 1;
                }
            }
            assert_eq!(simple, ty.rank());
        }
    }
}
