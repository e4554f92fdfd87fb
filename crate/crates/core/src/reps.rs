//! Finite-dimensional irreducible modules.
//!
//! Multi-factor modules (outer tensor products over a semisimple algebra)
//! are keyed by the concatenation of the per-factor coordinate vectors;
//! [`WeightSystem::split`] and [`Decomposition::split`] recover the tuple.
//! Trivial factors are written as explicit zero vectors.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liealg::{algebra, omega_string, AlgebraType, SimpleAlgebra, Weight};
use crate::number::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `tr_V x^2 = Ind * kappa(x, x)` with `kappa` the Killing form.
    Killing,
    /// Index of the adjoint module equals `h^vee`; the defining module of
    /// `sl(n)` has index 1/2.
    Normalized,
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "killing" => Ok(Convention::Killing),
            "normalized" | "normalised" => Ok(Convention::Normalized),
            _ => Err(Error::Parse(format!("unknown index convention {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquarePart {
    Alt,
    Sym,
}

/// Size caps that turn runaway inputs into [`Error::SizeCap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub weight_cap: u64,
    pub tensor_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            weight_cap: 100_000,
            tensor_cap: 100_000,
        }
    }
}

/// An irreducible module `L(highest)`.
#[derive(Debug, Clone)]
pub struct Irrep {
    algebra: Arc<SimpleAlgebra>,
    highest: Vec<i64>,
}

impl Irrep {
    pub fn new(alg: &Arc<SimpleAlgebra>, highest: &Weight) -> Result<Self> {
        check_owner(alg, highest)?;
        Ok(Irrep {
            algebra: alg.clone(),
            highest: highest.to_dominant()?,
        })
    }

    pub fn highest(&self) -> Weight {
        self.algebra.weight_from(&self.highest)
    }

    pub fn algebra(&self) -> &Arc<SimpleAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> BigUint {
        weyl_dim_int(&self.algebra, &self.highest)
    }

    pub fn casimir(&self) -> Q {
        casimir_int(&self.algebra, &self.highest)
    }
}

fn check_owner(alg: &SimpleAlgebra, w: &Weight) -> Result<()> {
    if w.algebra() != alg.ty() {
        return Err(Error::AlgebraMismatch {
            expected: alg.ty().to_string(),
            found: w.algebra().to_string(),
        });
    }
    Ok(())
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_dominant(w: &[i64]) -> bool {
    w.iter().all(|&c| c >= 0)
}

fn dominant_arg(alg: &SimpleAlgebra, w: &Weight) -> Result<Vec<i64>> {
    check_owner(alg, w)?;
    w.to_dominant()
}

/// `prod_{a > 0} (l + rho, a) / (rho, a)`.
pub fn weyl_dim(alg: &SimpleAlgebra, w: &Weight) -> Result<BigUint> {
    Ok(weyl_dim_int(alg, &dominant_arg(alg, w)?))
}

pub fn weyl_dim_int(alg: &SimpleAlgebra, l: &[i64]) -> BigUint {
    let shifted = add(l, alg.rho_int());
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for r in alg.roots() {
        num *= alg.ip_scaled(&shifted, &r.omega);
        den *= alg.ip_scaled(alg.rho_int(), &r.omega);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_biguint().expect("dimension is positive")
}

pub(crate) fn weyl_dim_u64(alg: &SimpleAlgebra, l: &[i64]) -> Option<u64> {
    weyl_dim_int(alg, l).to_u64()
}

/// `(l, l + 2 rho)`.
pub fn casimir(alg: &SimpleAlgebra, w: &Weight) -> Result<Q> {
    check_owner(alg, w)?;
    let two_rho = alg.rho().scale(&q(2));
    alg.inner_product(w, &w.add(&two_rho)?)
}

pub fn casimir_int(alg: &SimpleAlgebra, l: &[i64]) -> Q {
    let shifted: Vec<i64> = l
        .iter()
        .zip(alg.rho_int())
        .map(|(a, r)| a + 2 * r)
        .collect();
    alg.ip_q(l, &shifted)
}

pub fn dynkin_index(alg: &SimpleAlgebra, w: &Weight, convention: Convention) -> Result<Q> {
    Ok(dynkin_index_int(alg, &dominant_arg(alg, w)?, convention))
}

pub fn dynkin_index_int(alg: &SimpleAlgebra, l: &[i64], convention: Convention) -> Q {
    let dim = Q::from_integer(BigInt::from(weyl_dim_int(alg, l)));
    let normalized = dim * casimir_int(alg, l) / q(2 * alg.dim() as i64);
    match convention {
        Convention::Normalized => normalized,
        Convention::Killing => normalized / q(alg.dual_coxeter() as i64),
    }
}

/// Highest weight of the dual module.
pub fn dual_weight(alg: &SimpleAlgebra, w: &Weight) -> Result<Weight> {
    let l = dominant_arg(alg, w)?;
    Ok(alg.weight_from(&alg.dual_highest(&l)))
}

/// A finite multiset of weights over a product of simple algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    factors: Vec<AlgebraType>,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn new(factors: Vec<AlgebraType>) -> Self {
        WeightSystem {
            factors,
            entries: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> &[AlgebraType] {
        &self.factors
    }

    pub fn insert(&mut self, weight: Vec<i64>, mult: u64) {
        if mult > 0 {
            *self.entries.entry(weight).or_insert(0) += mult;
        }
    }

    pub fn get(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn split(&self, weight: &[i64]) -> Vec<Vec<i64>> {
        split_by(&self.factors, weight)
    }

    /// Entries as per-factor [`Weight`] tuples.
    pub fn weights(&self) -> Vec<(Vec<Weight>, u64)> {
        self.entries
            .iter()
            .map(|(w, &m)| (to_weights(&self.factors, w), m))
            .collect()
    }

    /// Multiset union.
    pub fn merge(&mut self, other: &WeightSystem) {
        for (w, m) in other.iter() {
            self.insert(w.clone(), m);
        }
    }
}

fn split_by(factors: &[AlgebraType], w: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(factors.len());
    let mut at = 0;
    for f in factors {
        out.push(w[at..at + f.rank()].to_vec());
        at += f.rank();
    }
    out
}

fn to_weights(factors: &[AlgebraType], w: &[i64]) -> Vec<Weight> {
    split_by(factors, w)
        .into_iter()
        .zip(factors)
        .map(|(c, &f)| Weight::integral(f, &c).expect("rank matches"))
        .collect()
}

/// A multiset of irreducible modules of a product algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    factors: Vec<AlgebraType>,
    components: BTreeMap<Vec<i64>, u64>,
}

impl Decomposition {
    pub fn new(factors: Vec<AlgebraType>) -> Self {
        Decomposition {
            factors,
            components: BTreeMap::new(),
        }
    }

    /// Adds `mult` copies of the module with the given per-factor highest weights.
    pub fn push(&mut self, highest: &[Vec<i64>], mult: u64) -> Result<()> {
        if highest.len() != self.factors.len() {
            return Err(Error::Invalid(format!(
                "component has {} factors, expected {}",
                highest.len(),
                self.factors.len()
            )));
        }
        let mut key = Vec::new();
        for (w, f) in highest.iter().zip(&self.factors) {
            if w.len() != f.rank() {
                return Err(Error::WeightLength {
                    algebra: f.to_string(),
                    expected: f.rank(),
                    found: w.len(),
                });
            }
            if !is_dominant(w) {
                return Err(Error::NotDominant(format!("{f}{w:?}")));
            }
            key.extend_from_slice(w);
        }
        if mult > 0 {
            *self.components.entry(key).or_insert(0) += mult;
        }
        Ok(())
    }

    pub(crate) fn push_flat(&mut self, key: Vec<i64>, mult: u64) {
        if mult > 0 {
            *self.components.entry(key).or_insert(0) += mult;
        }
    }

    pub fn factors(&self) -> &[AlgebraType] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.components.iter().map(|(w, &m)| (w, m))
    }

    /// Components as `(per-factor highest weights, multiplicity)`.
    pub fn components(&self) -> Vec<(Vec<Vec<i64>>, u64)> {
        self.components
            .iter()
            .map(|(w, &m)| (self.split(w), m))
            .collect()
    }

    pub fn weights(&self) -> Vec<(Vec<Weight>, u64)> {
        self.components
            .iter()
            .map(|(w, &m)| (to_weights(&self.factors, w), m))
            .collect()
    }

    pub fn split(&self, key: &[i64]) -> Vec<Vec<i64>> {
        split_by(&self.factors, key)
    }

    pub fn mult(&self, highest: &[Vec<i64>]) -> u64 {
        self.components.get(&highest.concat()).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of distinct components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn count(&self) -> u64 {
        self.components.values().sum()
    }

    pub fn component_dim(&self, key: &[i64]) -> BigUint {
        self.split(key)
            .iter()
            .zip(&self.factors)
            .map(|(w, &f)| weyl_dim_int(&algebra(f), w))
            .product()
    }

    pub fn dim(&self) -> BigUint {
        self.components
            .iter()
            .map(|(w, &m)| self.component_dim(w) * m)
            .sum()
    }

    pub fn merge(&mut self, other: &Decomposition) -> Result<()> {
        if self.factors != other.factors {
            return Err(Error::AlgebraMismatch {
                expected: factors_label(&self.factors),
                found: factors_label(&other.factors),
            });
        }
        for (w, m) in other.iter() {
            self.push_flat(w.clone(), m);
        }
        Ok(())
    }
}

pub(crate) fn factors_label(factors: &[AlgebraType]) -> String {
    factors
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(w, &m)| {
                let tuple: Vec<String> = self.split(w).iter().map(|c| omega_string(c)).collect();
                let body = format!("L({})", tuple.join(" ; "));
                if m == 1 {
                    body
                } else {
                    format!("{m}*{body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type DomChar = Arc<Vec<(Vec<i64>, u64)>>;

fn dominant_cache() -> &'static Mutex<HashMap<(AlgebraType, Vec<i64>), DomChar>> {
    static CACHE: OnceLock<Mutex<HashMap<(AlgebraType, Vec<i64>), DomChar>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn check_cap(dim: &BigUint, cap: u64) -> Result<()> {
    if dim > &BigUint::from(cap) {
        return Err(Error::SizeCap {
            dim: dim.to_string(),
            cap,
        });
    }
    Ok(())
}

/// Dominant weights of `L(l)` with multiplicities, by the Freudenthal recursion.
pub fn dominant_character(alg: &SimpleAlgebra, l: &[i64], limits: &Limits) -> Result<DomChar> {
    if !is_dominant(l) || l.len() != alg.rank() {
        return Err(Error::NotDominant(format!("{}{l:?}", alg.ty())));
    }
    check_cap(&weyl_dim_int(alg, l), limits.weight_cap)?;
    let key = (alg.ty(), l.to_vec());
    if let Some(c) = dominant_cache().lock().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let computed = Arc::new(freudenthal_dominant(alg, l));
    dominant_cache()
        .lock()
        .unwrap()
        .insert(key, computed.clone());
    Ok(computed)
}

fn freudenthal_dominant(alg: &SimpleAlgebra, l: &[i64]) -> Vec<(Vec<i64>, u64)> {
    // dominant weights below l, with their depth (height of l - mu)
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::new();
    depth.insert(l.to_vec(), 0);
    let mut queue = vec![l.to_vec()];
    while let Some(mu) = queue.pop() {
        let d = depth[&mu];
        for r in alg.roots() {
            let nu: Vec<i64> = mu.iter().zip(&r.omega).map(|(a, b)| a - b).collect();
            if is_dominant(&nu) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + r.height());
                queue.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i64>)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();

    let lr = add(l, alg.rho_int());
    let top = alg.ip_scaled(&lr, &lr);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(l.to_vec(), 1);
    for (_, mu) in order.iter().skip(1) {
        let mut num: i128 = 0;
        for r in alg.roots() {
            let mut nu = add(mu, &r.omega);
            loop {
                let (dom, _) = alg.to_dominant_chamber(&nu);
                let m = match mult.get(&dom) {
                    Some(&m) => m,
                    None => break,
                };
                num += m as i128 * alg.ip_scaled(&nu, &r.omega) as i128;
                for (x, y) in nu.iter_mut().zip(&r.omega) {
                    *x += y;
                }
            }
        }
        let mr = add(mu, alg.rho_int());
        let den = (top - alg.ip_scaled(&mr, &mr)) as i128;
        debug_assert!(den > 0 && (2 * num) % den == 0);
        let m = (2 * num / den) as u64;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    let mut out: Vec<(Vec<i64>, u64)> = mult.into_iter().collect();
    out.sort();
    out
}

/// Weyl orbit of a dominant weight.
pub fn orbit(alg: &SimpleAlgebra, dominant: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(dominant.to_vec());
    let mut stack = vec![dominant.to_vec()];
    let mut out = Vec::new();
    while let Some(w) = stack.pop() {
        for i in 0..w.len() {
            if w[i] > 0 {
                let mut v = w.clone();
                alg.reflect(i, &mut v);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
        out.push(w);
    }
    out
}

pub fn freudenthal_weights(alg: &SimpleAlgebra, w: &Weight) -> Result<WeightSystem> {
    freudenthal_weights_with(alg, w, &Limits::default())
}

pub fn freudenthal_weights_with(
    alg: &SimpleAlgebra,
    w: &Weight,
    limits: &Limits,
) -> Result<WeightSystem> {
    weight_system_int(alg, &dominant_arg(alg, w)?, limits)
}

pub fn weight_system_int(alg: &SimpleAlgebra, l: &[i64], limits: &Limits) -> Result<WeightSystem> {
    let dom = dominant_character(alg, l, limits)?;
    let mut ws = WeightSystem::new(vec![alg.ty()]);
    for (mu, m) in dom.iter() {
        for v in orbit(alg, mu) {
            ws.insert(v, *m);
        }
    }
    Ok(ws)
}

fn product_dim(factors: &[Arc<SimpleAlgebra>], module: &[Vec<i64>]) -> BigUint {
    factors
        .iter()
        .zip(module)
        .map(|(a, w)| weyl_dim_int(a, w))
        .product()
}

fn check_module(factors: &[Arc<SimpleAlgebra>], module: &[Vec<i64>]) -> Result<()> {
    if factors.len() != module.len() {
        return Err(Error::Invalid(format!(
            "module has {} factor weights for {} factors",
            module.len(),
            factors.len()
        )));
    }
    for (a, w) in factors.iter().zip(module) {
        if w.len() != a.rank() {
            return Err(Error::WeightLength {
                algebra: a.ty().to_string(),
                expected: a.rank(),
                found: w.len(),
            });
        }
        if !is_dominant(w) {
            return Err(Error::NotDominant(format!("{}{w:?}", a.ty())));
        }
    }
    Ok(())
}

fn types_of(factors: &[Arc<SimpleAlgebra>]) -> Vec<AlgebraType> {
    factors.iter().map(|a| a.ty()).collect()
}

/// Full weight multiset of the outer tensor product `L(w_1) x ... x L(w_t)`.
pub fn product_weights(
    factors: &[Arc<SimpleAlgebra>],
    module: &[Vec<i64>],
    limits: &Limits,
) -> Result<WeightSystem> {
    check_module(factors, module)?;
    check_cap(&product_dim(factors, module), limits.weight_cap)?;
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for (a, w) in factors.iter().zip(module) {
        let ws = weight_system_int(a, w, limits)?;
        let mut next = Vec::with_capacity(acc.len() * ws.len());
        for (prefix, m) in &acc {
            for (v, n) in ws.iter() {
                let mut key = prefix.clone();
                key.extend_from_slice(v);
                next.push((key, m * n));
            }
        }
        acc = next;
    }
    let mut out = WeightSystem::new(types_of(factors));
    for (w, m) in acc {
        out.insert(w, m);
    }
    Ok(out)
}

fn height(factors: &[Arc<SimpleAlgebra>], key: &[i64]) -> Q {
    let mut at = 0;
    let mut h = Q::zero();
    for a in factors {
        let w = &key[at..at + a.rank()];
        let two_rho: Vec<i64> = a.rho_int().iter().map(|r| 2 * r).collect();
        h += a.ip_q(w, &two_rho);
        at += a.rank();
    }
    h
}

fn is_dominant_product(key: &[i64]) -> bool {
    is_dominant(key)
}

/// Peels irreducible characters off a weight multiset, highest first.
pub fn decompose_weight_system(
    factors: &[Arc<SimpleAlgebra>],
    ws: &WeightSystem,
) -> Result<Decomposition> {
    decompose_weight_system_with(factors, ws, &Limits::default())
}

pub fn decompose_weight_system_with(
    factors: &[Arc<SimpleAlgebra>],
    ws: &WeightSystem,
    limits: &Limits,
) -> Result<Decomposition> {
    let types = types_of(factors);
    if ws.factors() != types.as_slice() {
        return Err(Error::AlgebraMismatch {
            expected: factors_label(&types),
            found: factors_label(ws.factors()),
        });
    }
    let dominant = ws
        .iter()
        .filter(|(w, _)| is_dominant_product(w))
        .map(|(w, m)| (w.clone(), m as i64));
    let out = peel(factors, dominant, limits)?;
    let total = BigUint::from(ws.total());
    if out.dim() != total {
        return Err(Error::NotACharacter(format!(
            "peeled dimension {} differs from multiset size {}",
            out.dim(),
            total
        )));
    }
    Ok(out)
}

fn peel(
    factors: &[Arc<SimpleAlgebra>],
    dominant: impl Iterator<Item = (Vec<i64>, i64)>,
    limits: &Limits,
) -> Result<Decomposition> {
    let mut heap: BTreeMap<(Q, Vec<i64>), i64> = BTreeMap::new();
    for (w, m) in dominant {
        if m != 0 {
            let h = height(factors, &w);
            *heap.entry((h, w)).or_insert(0) += m;
        }
    }
    let mut out = Decomposition::new(types_of(factors));
    while let Some(((_, top), m)) = heap.pop_last() {
        if m == 0 {
            continue;
        }
        if m < 0 {
            return Err(Error::NotACharacter(format!(
                "negative multiplicity {m} at {top:?}"
            )));
        }
        out.push_flat(top.clone(), m as u64);
        let parts = split_by(&types_of(factors), &top);
        let mut chars: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
        for (a, w) in factors.iter().zip(&parts) {
            let dom = dominant_character(a, w, limits)?;
            let mut next = Vec::with_capacity(chars.len() * dom.len());
            for (prefix, k) in &chars {
                for (v, n) in dom.iter() {
                    let mut key = prefix.clone();
                    key.extend_from_slice(v);
                    next.push((key, k * n));
                }
            }
            chars = next;
        }
        for (w, n) in chars {
            if w == top {
                continue;
            }
            let h = height(factors, &w);
            *heap.entry((h, w)).or_insert(0) -= m * n as i64;
        }
    }
    Ok(out)
}

/// `L(a) x L(b)` by the Klimyk (Racah-Speiser) rule.
pub fn tensor_decompose(alg: &SimpleAlgebra, a: &Weight, b: &Weight) -> Result<Decomposition> {
    tensor_decompose_with(alg, a, b, &Limits::default())
}

pub fn tensor_decompose_with(
    alg: &SimpleAlgebra,
    a: &Weight,
    b: &Weight,
    limits: &Limits,
) -> Result<Decomposition> {
    let a = dominant_arg(alg, a)?;
    let b = dominant_arg(alg, b)?;
    tensor_int(alg, &a, &b, limits)
}

pub fn tensor_int(
    alg: &SimpleAlgebra,
    a: &[i64],
    b: &[i64],
    limits: &Limits,
) -> Result<Decomposition> {
    let da = weyl_dim_int(alg, a);
    let db = weyl_dim_int(alg, b);
    check_cap(&(&da * &db), limits.tensor_cap)?;
    // iterate over the weights of the smaller module
    let (big, small) = if da >= db { (a, b) } else { (b, a) };
    let ws = weight_system_int(alg, small, limits)?;
    let shift = add(big, alg.rho_int());
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, m) in ws.iter() {
        let (dom, odd) = alg.to_dominant_chamber(&add(&shift, nu));
        if dom.iter().any(|&c| c == 0) {
            continue;
        }
        let hw: Vec<i64> = dom.iter().map(|c| c - 1).collect();
        let s = if odd { -(m as i64) } else { m as i64 };
        *acc.entry(hw).or_insert(0) += s;
    }
    let mut out = Decomposition::new(vec![alg.ty()]);
    for (w, m) in acc {
        if m < 0 {
            return Err(Error::Inconsistent(format!(
                "negative tensor multiplicity at {w:?}"
            )));
        }
        out.push_flat(w, m as u64);
    }
    if out.dim() != &da * &db {
        return Err(Error::Inconsistent(
            "tensor product dimension mismatch".into(),
        ));
    }
    Ok(out)
}

/// Tensor product of two outer-product modules, factor by factor.
pub fn tensor_product_int(
    factors: &[Arc<SimpleAlgebra>],
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    limits: &Limits,
) -> Result<Decomposition> {
    check_module(factors, a)?;
    check_module(factors, b)?;
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for ((alg, x), y) in factors.iter().zip(a).zip(b) {
        let d = tensor_int(alg, x, y, limits)?;
        let mut next = Vec::new();
        for (prefix, m) in &acc {
            for (w, n) in d.iter() {
                let mut key = prefix.clone();
                key.extend_from_slice(w);
                next.push((key, m * n));
            }
        }
        acc = next;
    }
    let mut out = Decomposition::new(types_of(factors));
    for (w, m) in acc {
        out.push_flat(w, m);
    }
    Ok(out)
}

/// `Lambda^2 V` or `S^2 V` for an outer-product module `V`.
pub fn square_decompose(
    factors: &[Arc<SimpleAlgebra>],
    module: &[Weight],
    part: SquarePart,
) -> Result<Decomposition> {
    let ints = module
        .iter()
        .zip(factors)
        .map(|(w, a)| dominant_arg(a, w))
        .collect::<Result<Vec<_>>>()?;
    if module.len() != factors.len() {
        return Err(Error::Invalid(format!(
            "module has {} factor weights for {} factors",
            module.len(),
            factors.len()
        )));
    }
    square_int(factors, &ints, part, &Limits::default())
}

pub fn square_int(
    factors: &[Arc<SimpleAlgebra>],
    module: &[Vec<i64>],
    part: SquarePart,
    limits: &Limits,
) -> Result<Decomposition> {
    let ws = product_weights(factors, module, limits)?;
    square_weight_system(factors, &ws, part, limits)
}

/// `Lambda^2` or `S^2` of the (possibly reducible) module with weights `ws`.
pub fn square_weight_system(
    factors: &[Arc<SimpleAlgebra>],
    ws: &WeightSystem,
    part: SquarePart,
    limits: &Limits,
) -> Result<Decomposition> {
    let dim = ws.total();
    check_cap(&BigUint::from(dim), limits.tensor_cap)?;
    let entries: Vec<(&Vec<i64>, u64)> = ws.iter().collect();
    let mut dominant: HashMap<Vec<i64>, i64> = HashMap::new();
    for (i, (w, m)) in entries.iter().enumerate() {
        let doubled: Vec<i64> = w.iter().map(|c| 2 * c).collect();
        if is_dominant(&doubled) {
            let pairs = match part {
                SquarePart::Alt => m * (m - 1) / 2,
                SquarePart::Sym => m * (m + 1) / 2,
            };
            *dominant.entry(doubled).or_insert(0) += pairs as i64;
        }
        for (v, n) in &entries[i + 1..] {
            let s = add(w, v);
            if is_dominant(&s) {
                *dominant.entry(s).or_insert(0) += (m * n) as i64;
            }
        }
    }
    let expected = match part {
        SquarePart::Alt => dim * dim.saturating_sub(1) / 2,
        SquarePart::Sym => dim * (dim + 1) / 2,
    };
    let out = peel(factors, dominant.into_iter(), limits)?;
    if out.dim() != BigUint::from(expected) {
        return Err(Error::NotACharacter(format!(
            "square part has dimension {}, expected {expected}",
            out.dim()
        )));
    }
    Ok(out)
}

/// Dominant weights with all coordinates at most `bound` whose module has
/// dimension `dim`.
pub fn irreps_of_dimension(alg: &SimpleAlgebra, dim: u64, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut w = vec![0i64; alg.rank()];
    fn rec(
        alg: &SimpleAlgebra,
        i: usize,
        w: &mut Vec<i64>,
        dim: u64,
        bound: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == w.len() {
            if weyl_dim_u64(alg, w) == Some(dim) {
                out.push(w.clone());
            }
            return;
        }
        for c in 0..=bound {
            w[i] = c;
            // dimension is monotone in each coordinate
            if weyl_dim_int(alg, w) > BigUint::from(dim) {
                break;
            }
            rec(alg, i + 1, w, dim, bound, out);
        }
        w[i] = 0;
    }
    rec(alg, 0, &mut w, dim, bound, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra_from_str;
    use crate::number::frac;

    fn alg(s: &str) -> Arc<SimpleAlgebra> {
        algebra_from_str(s).unwrap()
    }

    fn w(a: &SimpleAlgebra, c: &[i64]) -> Weight {
        a.weight(c).unwrap()
    }

    #[test]
    fn dimensions() {
        let b3 = alg("B3");
        assert_eq!(weyl_dim(&b3, &w(&b3, &[0, 0, 1])).unwrap(), 8u32.into());
        let g2 = alg("G2");
        assert_eq!(weyl_dim(&g2, &w(&g2, &[1, 0])).unwrap(), 7u32.into());
        assert_eq!(weyl_dim(&g2, &w(&g2, &[0, 0])).unwrap(), 1u32.into());
        assert!(matches!(
            weyl_dim(&g2, &w(&g2, &[-1, 0])),
            Err(Error::NotDominant(_))
        ));
        let e8 = alg("E8");
        assert_eq!(weyl_dim_int(&e8, &[0, 0, 0, 0, 0, 0, 0, 1]), 248u32.into());
        assert_eq!(weyl_dim_int(&e8, &[1, 0, 0, 0, 0, 0, 0, 0]), 3875u32.into());
        assert_eq!(
            weyl_dim_int(&alg("E7"), &[0, 0, 0, 0, 0, 0, 1]),
            56u32.into()
        );
        assert_eq!(weyl_dim_int(&alg("F4"), &[0, 0, 0, 1]), 26u32.into());
    }

    #[test]
    fn casimirs() {
        let c3 = alg("C3");
        assert_eq!(casimir(&c3, &w(&c3, &[0, 1, 0])).unwrap(), q(6));
        let f4 = alg("F4");
        assert_eq!(casimir(&f4, &w(&f4, &[0, 0, 0, 1])).unwrap(), q(12));
        for s in ["A3", "B4", "G2", "E6"] {
            let a = alg(s);
            assert_eq!(
                casimir(&a, &a.theta()).unwrap(),
                q(2 * a.dual_coxeter() as i64)
            );
        }
    }

    #[test]
    fn indices() {
        let a1 = alg("A1");
        let w1 = w(&a1, &[1]);
        assert_eq!(
            dynkin_index(&a1, &w1, Convention::Normalized).unwrap(),
            frac(1, 2)
        );
        assert_eq!(
            dynkin_index(&a1, &w1, Convention::Killing).unwrap(),
            frac(1, 4)
        );
        let b3 = alg("B3");
        assert_eq!(
            dynkin_index(&b3, &w(&b3, &[1, 0, 0]), Convention::Killing).unwrap(),
            frac(1, 5)
        );
        let g2 = alg("G2");
        assert_eq!(
            dynkin_index(&g2, &g2.theta(), Convention::Normalized).unwrap(),
            q(4)
        );
    }

    #[test]
    fn sl2_string() {
        let a1 = alg("A1");
        let ws = freudenthal_weights(&a1, &w(&a1, &[3])).unwrap();
        let got: Vec<(Vec<i64>, u64)> = ws.iter().map(|(w, m)| (w.clone(), m)).collect();
        assert_eq!(
            got,
            vec![(vec![-3], 1), (vec![-1], 1), (vec![1], 1), (vec![3], 1)]
        );
    }

    #[test]
    fn zero_weight_of_adjoint() {
        for s in ["G2", "B3", "F4", "E6"] {
            let a = alg(s);
            let ws = freudenthal_weights(&a, &a.theta()).unwrap();
            assert_eq!(ws.get(&vec![0; a.rank()]), a.rank() as u64, "{s}");
            assert_eq!(ws.total(), a.dim() as u64);
        }
    }

    #[test]
    fn spin_weights_are_simple() {
        let b3 = alg("B3");
        let ws = freudenthal_weights(&b3, &w(&b3, &[0, 0, 1])).unwrap();
        assert_eq!(ws.len(), 8);
        assert!(ws.iter().all(|(_, m)| m == 1));
    }

    #[test]
    fn cap_is_enforced() {
        let e8 = alg("E8");
        let err = freudenthal_weights(&e8, &w(&e8, &[1, 1, 0, 0, 0, 0, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::SizeCap { .. }));
        let tight = Limits {
            weight_cap: 5,
            tensor_cap: 10,
        };
        let a2 = alg("A2");
        assert!(freudenthal_weights_with(&a2, &a2.theta(), &tight).is_err());
    }

    #[test]
    fn tensors() {
        let a3 = alg("A3");
        let d = tensor_decompose(&a3, &w(&a3, &[1, 0, 0]), &w(&a3, &[0, 0, 1])).unwrap();
        assert_eq!(
            d.components(),
            vec![(vec![vec![0, 0, 0]], 1), (vec![vec![1, 0, 1]], 1)]
        );
        let a1 = alg("A1");
        let d = tensor_decompose(&a1, &w(&a1, &[1]), &w(&a1, &[1])).unwrap();
        assert_eq!(d.components(), vec![(vec![vec![0]], 1), (vec![vec![2]], 1)]);
        let g2 = alg("G2");
        let d = tensor_decompose(&g2, &w(&g2, &[1, 0]), &w(&g2, &[0, 0])).unwrap();
        assert_eq!(d.components(), vec![(vec![vec![1, 0]], 1)]);
    }

    #[test]
    fn squares() {
        let c2 = alg("C2");
        let v = [w(&c2, &[1, 0])];
        let alt = square_decompose(&[c2.clone()], &v, SquarePart::Alt).unwrap();
        assert_eq!(
            alt.components(),
            vec![(vec![vec![0, 0]], 1), (vec![vec![0, 1]], 1)]
        );
        let sym = square_decompose(&[c2.clone()], &v, SquarePart::Sym).unwrap();
        assert_eq!(sym.components(), vec![(vec![vec![2, 0]], 1)]);

        let pair = [c2.clone(), c2.clone()];
        let alt =
            square_decompose(&pair, &[w(&c2, &[1, 0]), w(&c2, &[1, 0])], SquarePart::Alt).unwrap();
        let mut expected = Decomposition::new(vec![c2.ty(), c2.ty()]);
        for (a, b) in [
            ([2, 0], [0, 1]),
            ([2, 0], [0, 0]),
            ([0, 1], [2, 0]),
            ([0, 0], [2, 0]),
        ] {
            expected.push(&[a.to_vec(), b.to_vec()], 1).unwrap();
        }
        assert_eq!(alt, expected);

        let a1 = alg("A1");
        let triv = square_decompose(&[a1.clone()], &[w(&a1, &[0])], SquarePart::Alt).unwrap();
        assert!(triv.is_empty());
    }

    #[test]
    fn peel_off() {
        let a2 = alg("A2");
        let mut ws = WeightSystem::new(vec![a2.ty()]);
        let v = weight_system_int(&a2, &[1, 0], &Limits::default()).unwrap();
        for (x, m) in v.iter() {
            for (y, n) in v.iter() {
                ws.insert(add(x, y), m * n);
            }
        }
        let d = decompose_weight_system(&[a2.clone()], &ws).unwrap();
        assert_eq!(
            d.components(),
            vec![(vec![vec![0, 1]], 1), (vec![vec![2, 0]], 1)]
        );

        let a1 = alg("A1");
        let mut ws = weight_system_int(&a1, &[2], &Limits::default()).unwrap();
        ws.insert(vec![0], 1);
        let d = decompose_weight_system(&[a1.clone()], &ws).unwrap();
        assert_eq!(d.components(), vec![(vec![vec![0]], 1), (vec![vec![2]], 1)]);

        let mut bad = WeightSystem::new(vec![a1.ty()]);
        bad.insert(vec![2], 1);
        assert!(matches!(
            decompose_weight_system(&[a1.clone()], &bad),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn duals() {
        let a3 = alg("A3");
        assert_eq!(
            dual_weight(&a3, &w(&a3, &[1, 0, 0])).unwrap(),
            w(&a3, &[0, 0, 1])
        );
        let d5 = alg("D5");
        assert_eq!(d5.dual_highest(&[0, 0, 0, 1, 0]), vec![0, 0, 0, 0, 1]);
        let d4 = alg("D4");
        assert_eq!(d4.dual_highest(&[0, 0, 1, 0]), vec![0, 0, 1, 0]);
    }

    #[test]
    fn dimension_search() {
        let g2 = alg("G2");
        assert_eq!(irreps_of_dimension(&g2, 7, 4), vec![vec![1, 0]]);
        let b3 = alg("B3");
        let mut eights = irreps_of_dimension(&b3, 8, 4);
        eights.sort();
        assert_eq!(eights, vec![vec![0, 0, 1]]);
    }
}
