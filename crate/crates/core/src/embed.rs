//! Subalgebra embeddings: orthocomplement branchings and embedding indices.
//!
//! Classical dual pairs are built in code. The orthocomplement `p` is written
//! down from the invariant-theory formulas and then checked against an
//! independent computation: the ambient adjoint is realised as `Lambda^2 W`
//! (orthogonal), `S^2 W` (symplectic) or `W x W* - C` (special linear) for the
//! restricted defining module `W`, and the subalgebra adjoints are removed.
//!
//! Exceptional branchings are catalog data (see [`load_catalog`]).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{algebra, AlgebraType, Family, SimpleAlgebra, Weight};
use crate::number::{fmt_q, parse_rational, q, Q};
use crate::reps::{
    dynkin_index_int, factors_label, product_weights, square_weight_system, tensor_product_int,
    weyl_dim_int, Convention, Decomposition, Limits, SquarePart, WeightSystem,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraFactor {
    pub ty: AlgebraType,
    /// Embedding index with respect to the normalised forms.
    pub index: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraSpec {
    pub label: String,
    pub factors: Vec<SubalgebraFactor>,
}

impl SubalgebraSpec {
    pub fn new(label: impl Into<String>, factors: Vec<SubalgebraFactor>) -> Result<Self> {
        let label = label.into();
        if factors.is_empty() {
            return Err(Error::Invalid(format!(
                "subalgebra {label:?} has no factors"
            )));
        }
        for f in &factors {
            if !f.index.is_positive() {
                return Err(Error::Invalid(format!(
                    "subalgebra {label:?}: embedding index {} of {} is not positive",
                    fmt_q(&f.index),
                    f.ty
                )));
            }
        }
        Ok(SubalgebraSpec { label, factors })
    }

    pub fn types(&self) -> Vec<AlgebraType> {
        self.factors.iter().map(|f| f.ty).collect()
    }

    pub fn algebras(&self) -> Vec<Arc<SimpleAlgebra>> {
        self.factors.iter().map(|f| algebra(f.ty)).collect()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| algebra(f.ty).dim()).sum()
    }

    /// Superscript notation, e.g. `G2xA1^8`.
    pub fn notation(&self) -> String {
        self.factors
            .iter()
            .map(|f| {
                if f.index == q(1) {
                    f.ty.to_string()
                } else {
                    format!("{}^{}", f.ty, fmt_q(&f.index))
                }
            })
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// The orthocomplement of a subalgebra as a module over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingCase {
    pub label: String,
    pub ambient: AlgebraType,
    pub sub: SubalgebraSpec,
    pub p: Decomposition,
    /// Level attached by the source, if any.
    pub level: Option<Q>,
    pub source: String,
}

impl BranchingCase {
    /// Checks `dim g = sum dim k_j + dim p`.
    pub fn check_dimension(&self) -> Result<()> {
        let lhs = BigUint::from(algebra(self.ambient).dim());
        let rhs = BigUint::from(self.sub.dim()) + self.p.dim();
        if lhs != rhs {
            return Err(Error::Catalog {
                label: self.label.clone(),
                reason: format!(
                    "dim {} = {lhs} but subalgebra plus p gives {rhs}",
                    self.ambient
                ),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualPairFamily {
    /// `sl(n) x sl(m)` in `sl(nm)`.
    SlSl,
    /// `sp(2n) x sp(2m)` in `so(4nm)`.
    SpSp,
    /// `so(n) x so(m)` in `so(nm)`.
    SoSo,
    /// `sp(2n) x so(m)` in `sp(2nm)`.
    SpSo,
    /// `so(2n+1) x so(2m+1)` in `so(2n+2m+2)`.
    BB,
    /// `sp(2n) x sp(2m)` in `sp(2n+2m)`.
    CC,
    /// `so(n) x so(m)` in `so(n+m)`; `m = 1` gives `so(n)` in `so(n+1)`.
    SoSum,
}

impl DualPairFamily {
    pub const ALL: [DualPairFamily; 7] = [
        DualPairFamily::SlSl,
        DualPairFamily::SpSp,
        DualPairFamily::SoSo,
        DualPairFamily::SpSo,
        DualPairFamily::BB,
        DualPairFamily::CC,
        DualPairFamily::SoSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DualPairFamily::SlSl => "slsl",
            DualPairFamily::SpSp => "spsp",
            DualPairFamily::SoSo => "soso",
            DualPairFamily::SpSo => "spso",
            DualPairFamily::BB => "BB",
            DualPairFamily::CC => "CC",
            DualPairFamily::SoSum => "sosum",
        }
    }
}

impl fmt::Display for DualPairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DualPairFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DualPairFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown dual-pair family {s:?}")))
    }
}

/// A simple factor together with its defining module.
#[derive(Debug, Clone)]
struct Classical {
    alg: Arc<SimpleAlgebra>,
    defining: Vec<i64>,
    /// Normalised index of the defining module (1 for `so(m)`, 1/2 otherwise;
    /// 2 for `so(3)` realised as `A1` with `L(2w1)`).
    defining_index: Q,
}

impl Classical {
    fn new(ty: AlgebraType, defining: Vec<i64>) -> Self {
        let alg = algebra(ty);
        let defining_index = dynkin_index_int(&alg, &defining, Convention::Normalized);
        Classical {
            alg,
            defining,
            defining_index,
        }
    }

    fn zero(&self) -> Vec<i64> {
        vec![0; self.alg.rank()]
    }

    fn theta(&self) -> Vec<i64> {
        self.alg.theta_int().to_vec()
    }

    fn doubled(&self) -> Vec<i64> {
        self.defining.iter().map(|c| 2 * c).collect()
    }

    /// `w2` of `sp(2n)`; absent for `n = 1`.
    fn omega2(&self) -> Option<Vec<i64>> {
        if self.alg.rank() < 2 {
            return None;
        }
        let mut w = self.zero();
        w[1] = 1;
        Some(w)
    }
}

fn ty(family: Family, rank: usize) -> AlgebraType {
    AlgebraType::new(family, rank).expect("rank checked by caller")
}

fn sp_factor(n: usize) -> Classical {
    if n == 1 {
        Classical::new(ty(Family::A, 1), vec![1])
    } else {
        let mut w = vec![0; n];
        w[0] = 1;
        Classical::new(ty(Family::C, n), w)
    }
}

fn sl_factor(n: usize) -> Classical {
    let mut w = vec![0; n - 1];
    w[0] = 1;
    Classical::new(ty(Family::A, n - 1), w)
}

/// `so(m)` as a simple factor: `A1` for `m = 3`, `B` or `D` for `m >= 5`.
fn so_factor(m: usize) -> Option<Classical> {
    match m {
        3 => Some(Classical::new(ty(Family::A, 1), vec![2])),
        5.. => {
            let rank = m / 2;
            let family = if m % 2 == 1 { Family::B } else { Family::D };
            let mut w = vec![0; rank];
            w[0] = 1;
            Some(Classical::new(ty(family, rank), w))
        }
        _ => None,
    }
}

fn so_ambient(n: usize) -> Option<AlgebraType> {
    match n {
        5.. => Some(ty(if n % 2 == 1 { Family::B } else { Family::D }, n / 2)),
        _ => None,
    }
}

/// How the ambient adjoint is realised from its defining module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Realisation {
    Alt,
    Sym,
    EndTraceless,
}

struct Construction {
    label: String,
    ambient: AlgebraType,
    factors: Vec<Classical>,
    /// Restriction of the ambient defining module, one outer product per summand.
    defining: Vec<Vec<Vec<i64>>>,
    realisation: Realisation,
    /// `p` as stated by the invariant-theory formulas.
    stated: Vec<Vec<Vec<i64>>>,
}

fn invalid(family: DualPairFamily, n: usize, m: usize, reason: &str) -> Error {
    Error::InvalidDualPair {
        family: family.to_string(),
        n,
        m,
        reason: reason.to_string(),
    }
}

fn dual_pair_construction(family: DualPairFamily, n: usize, m: usize) -> Result<Construction> {
    let so_pair = |x: usize| {
        so_factor(x).ok_or_else(|| {
            invalid(
                family,
                n,
                m,
                "orthogonal factors need dimension 3 or at least 5 to be simple",
            )
        })
    };
    let label = format!("{family}:{n},{m}");
    let c = match family {
        DualPairFamily::SlSl => {
            if n < 2 || m < 2 {
                return Err(invalid(family, n, m, "needs n, m >= 2"));
            }
            let (a, b) = (sl_factor(n), sl_factor(m));
            Construction {
                label,
                ambient: ty(Family::A, n * m - 1),
                defining: vec![vec![a.defining.clone(), b.defining.clone()]],
                realisation: Realisation::EndTraceless,
                stated: vec![vec![a.theta(), b.theta()]],
                factors: vec![a, b],
            }
        }
        DualPairFamily::SpSp => {
            if n < 1 || m < 1 || n * m < 2 {
                return Err(invalid(family, n, m, "needs n, m >= 1 and nm >= 2"));
            }
            let (a, b) = (sp_factor(n), sp_factor(m));
            let mut stated = Vec::new();
            if let Some(w) = b.omega2() {
                stated.push(vec![a.theta(), w]);
            }
            if let Some(w) = a.omega2() {
                stated.push(vec![w, b.theta()]);
            }
            Construction {
                label,
                ambient: ty(Family::D, 2 * n * m),
                defining: vec![vec![a.defining.clone(), b.defining.clone()]],
                realisation: Realisation::Alt,
                stated,
                factors: vec![a, b],
            }
        }
        DualPairFamily::SoSo => {
            let (a, b) = (so_pair(n)?, so_pair(m)?);
            Construction {
                label,
                ambient: so_ambient(n * m).expect("nm >= 9"),
                defining: vec![vec![a.defining.clone(), b.defining.clone()]],
                realisation: Realisation::Alt,
                stated: vec![vec![a.theta(), b.doubled()], vec![a.doubled(), b.theta()]],
                factors: vec![a, b],
            }
        }
        DualPairFamily::SpSo => {
            if n < 1 {
                return Err(invalid(family, n, m, "needs n >= 1"));
            }
            let (a, b) = (sp_factor(n), so_pair(m)?);
            let mut stated = vec![vec![a.theta(), b.doubled()]];
            if let Some(w) = a.omega2() {
                stated.push(vec![w, b.theta()]);
            }
            Construction {
                label,
                ambient: if n * m == 1 {
                    ty(Family::A, 1)
                } else {
                    ty(Family::C, n * m)
                },
                defining: vec![vec![a.defining.clone(), b.defining.clone()]],
                realisation: Realisation::Sym,
                stated,
                factors: vec![a, b],
            }
        }
        DualPairFamily::BB => {
            if n < 1 || m < 1 {
                return Err(invalid(family, n, m, "needs n, m >= 1"));
            }
            let (a, b) = (so_pair(2 * n + 1)?, so_pair(2 * m + 1)?);
            Construction {
                label,
                ambient: ty(Family::D, n + m + 1),
                defining: vec![
                    vec![a.defining.clone(), b.zero()],
                    vec![a.zero(), b.defining.clone()],
                ],
                realisation: Realisation::Alt,
                stated: vec![vec![a.defining.clone(), b.defining.clone()]],
                factors: vec![a, b],
            }
        }
        DualPairFamily::CC => {
            if n < 1 || m < 1 {
                return Err(invalid(family, n, m, "needs n, m >= 1"));
            }
            let (a, b) = (sp_factor(n), sp_factor(m));
            Construction {
                label,
                ambient: ty(Family::C, n + m),
                defining: vec![
                    vec![a.defining.clone(), b.zero()],
                    vec![a.zero(), b.defining.clone()],
                ],
                realisation: Realisation::Sym,
                stated: vec![vec![a.defining.clone(), b.defining.clone()]],
                factors: vec![a, b],
            }
        }
        DualPairFamily::SoSum => {
            let ambient = so_ambient(n + m)
                .ok_or_else(|| invalid(family, n, m, "ambient so(n+m) needs n+m >= 5"))?;
            let a = so_pair(n)?;
            if m == 1 {
                Construction {
                    label,
                    ambient,
                    defining: vec![vec![a.defining.clone()], vec![a.zero()]],
                    realisation: Realisation::Alt,
                    stated: vec![vec![a.defining.clone()]],
                    factors: vec![a],
                }
            } else {
                let b = so_pair(m)?;
                Construction {
                    label,
                    ambient,
                    defining: vec![
                        vec![a.defining.clone(), b.zero()],
                        vec![a.zero(), b.defining.clone()],
                    ],
                    realisation: Realisation::Alt,
                    stated: vec![vec![a.defining.clone(), b.defining.clone()]],
                    factors: vec![a, b],
                }
            }
        }
    };
    Ok(c)
}

/// Built-in irreducible embeddings with a computable branching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irreducible {
    /// `sp(2n)` in `sl(2n)`.
    CnInA(usize),
    /// `G2` in `so(7)` via its 7-dimensional module.
    G2InB3,
    /// `so(7)` in `so(8)` via the spin module.
    B3InD4,
}

fn irreducible_construction(which: Irreducible) -> Result<Construction> {
    Ok(match which {
        Irreducible::CnInA(n) => {
            if n < 2 {
                return Err(Error::Invalid("sp(2n) in sl(2n) needs n >= 2".into()));
            }
            let a = sp_factor(n);
            Construction {
                label: format!("C{n}-in-A{}", 2 * n - 1),
                ambient: ty(Family::A, 2 * n - 1),
                defining: vec![vec![a.defining.clone()]],
                realisation: Realisation::EndTraceless,
                stated: vec![vec![a.omega2().expect("n >= 2")]],
                factors: vec![a],
            }
        }
        Irreducible::G2InB3 => {
            let a = Classical::new(ty(Family::G, 2), vec![1, 0]);
            Construction {
                label: "G2-in-B3".into(),
                ambient: ty(Family::B, 3),
                defining: vec![vec![a.defining.clone()]],
                realisation: Realisation::Alt,
                stated: vec![vec![vec![1, 0]]],
                factors: vec![a],
            }
        }
        Irreducible::B3InD4 => {
            let a = Classical::new(ty(Family::B, 3), vec![0, 0, 1]);
            Construction {
                label: "B3-in-D4".into(),
                ambient: ty(Family::D, 4),
                defining: vec![vec![a.defining.clone()]],
                realisation: Realisation::Alt,
                stated: vec![vec![vec![1, 0, 0]]],
                factors: vec![a],
            }
        }
    })
}

fn decomposition_of(types: &[AlgebraType], parts: &[Vec<Vec<i64>>]) -> Result<Decomposition> {
    let mut d = Decomposition::new(types.to_vec());
    for c in parts {
        d.push(c, 1)?;
    }
    Ok(d)
}

/// The ambient adjoint as a module over the subalgebra, computed from the
/// restricted defining module.
fn computed_adjoint(c: &Construction, limits: &Limits) -> Result<Decomposition> {
    let algs: Vec<Arc<SimpleAlgebra>> = c.factors.iter().map(|f| f.alg.clone()).collect();
    let types: Vec<AlgebraType> = algs.iter().map(|a| a.ty()).collect();
    match c.realisation {
        Realisation::Alt | Realisation::Sym => {
            let mut ws = WeightSystem::new(types);
            for summand in &c.defining {
                ws.merge(&product_weights(&algs, summand, limits)?);
            }
            let part = if c.realisation == Realisation::Alt {
                SquarePart::Alt
            } else {
                SquarePart::Sym
            };
            square_weight_system(&algs, &ws, part, limits)
        }
        Realisation::EndTraceless => {
            let [v] = c.defining.as_slice() else {
                return Err(Error::Inconsistent(
                    "sl realisation needs one summand".into(),
                ));
            };
            let dual: Vec<Vec<i64>> = algs.iter().zip(v).map(|(a, w)| a.dual_highest(w)).collect();
            let mut end = tensor_product_int(&algs, v, &dual, limits)?;
            remove(&mut end, &vec![0; v.concat().len()], &c.label)?;
            Ok(end)
        }
    }
}

fn remove(d: &mut Decomposition, key: &[i64], label: &str) -> Result<()> {
    let mut rest = Decomposition::new(d.factors().to_vec());
    let mut found = false;
    for (w, m) in d.iter() {
        let m = if !found && w.as_slice() == key {
            found = true;
            m - 1
        } else {
            m
        };
        rest.push_flat(w.clone(), m);
    }
    if !found {
        return Err(Error::Inconsistent(format!(
            "{label}: expected component {key:?} is missing"
        )));
    }
    *d = rest;
    Ok(())
}

fn adjoint_keys(factors: &[Classical]) -> Vec<Vec<i64>> {
    (0..factors.len())
        .map(|j| {
            factors
                .iter()
                .enumerate()
                .flat_map(|(i, f)| if i == j { f.theta() } else { f.zero() })
                .collect()
        })
        .collect()
}

/// Normalised index of factor `factor` in the ambient, from the restriction
/// of a faithful ambient module.
///
/// `restriction` decomposes `L(ambient_module)` over the product of
/// subalgebra factors.
pub fn embedding_index(
    ambient: &SimpleAlgebra,
    ambient_module: &Weight,
    restriction: &Decomposition,
    factor: usize,
) -> Result<Q> {
    if restriction.is_empty() {
        return Err(Error::Invalid("empty restriction".into()));
    }
    if factor >= restriction.factors().len() {
        return Err(Error::Invalid(format!(
            "no factor {factor} in the restriction"
        )));
    }
    let module = ambient_module.to_dominant()?;
    let total = weyl_dim_int(ambient, &module);
    if restriction.dim() != total {
        return Err(Error::Inconsistent(format!(
            "restriction has dimension {}, module has {total}",
            restriction.dim()
        )));
    }
    let ambient_index = dynkin_index_int(ambient, &module, Convention::Normalized);
    if ambient_index.is_zero() {
        return Err(Error::Invalid("ambient module is trivial".into()));
    }
    let types = restriction.factors().to_vec();
    let mut acc = Q::zero();
    for (parts, m) in restriction.components() {
        let mut others = BigUint::from(1u32);
        for (i, (w, t)) in parts.iter().zip(&types).enumerate() {
            if i != factor {
                others *= weyl_dim_int(&algebra(*t), w);
            }
        }
        let idx = dynkin_index_int(
            &algebra(types[factor]),
            &parts[factor],
            Convention::Normalized,
        );
        acc += idx * Q::from_integer(others.into()) * q(m as i64);
    }
    Ok(acc / ambient_index)
}

/// Indices and stated `p`, without recomputing the adjoint.
fn stated_case(c: &Construction) -> Result<BranchingCase> {
    let types: Vec<AlgebraType> = c.factors.iter().map(|f| f.alg.ty()).collect();
    let stated = decomposition_of(&types, &c.stated)?;
    let restriction = decomposition_of(&types, &c.defining)?;
    let ambient = algebra(c.ambient);
    let mut defining = vec![0; ambient.rank()];
    defining[0] = 1;
    let defining = ambient.weight_from(&defining);
    let mut factors = Vec::new();
    for j in 0..types.len() {
        factors.push(SubalgebraFactor {
            ty: types[j],
            index: embedding_index(&ambient, &defining, &restriction, j)?,
        });
    }
    let sub = SubalgebraSpec::new(c.label.clone(), factors)?;
    let case = BranchingCase {
        label: c.label.clone(),
        ambient: c.ambient,
        sub,
        p: stated,
        level: None,
        source: "classical invariant theory".into(),
    };
    case.check_dimension()
        .map_err(|e| Error::Inconsistent(e.to_string()))?;
    Ok(case)
}

fn build(c: Construction, limits: &Limits) -> Result<BranchingCase> {
    let case = stated_case(&c)?;
    match computed_adjoint(&c, limits) {
        Ok(mut adjoint) => {
            for key in adjoint_keys(&c.factors) {
                remove(&mut adjoint, &key, &c.label)?;
            }
            if adjoint != case.p {
                return Err(Error::Inconsistent(format!(
                    "{}: stated p = {} but computed p = {}",
                    c.label, case.p, adjoint
                )));
            }
        }
        Err(Error::SizeCap { .. }) => {}
        Err(e) => return Err(e),
    }
    Ok(case)
}

/// Branching of the orthocomplement for a classical dual pair, verified
/// against the computed decomposition whenever it fits under the caps.
pub fn dual_pair_branching(family: DualPairFamily, n: usize, m: usize) -> Result<BranchingCase> {
    build(dual_pair_construction(family, n, m)?, &Limits::default())
}

/// Dual-pair branching from the invariant-theory formulas alone, with the
/// indices computed but `p` not cross-checked. Cheap at any rank.
pub fn dual_pair_stated(family: DualPairFamily, n: usize, m: usize) -> Result<BranchingCase> {
    stated_case(&dual_pair_construction(family, n, m)?)
}

pub fn irreducible_branching(which: Irreducible) -> Result<BranchingCase> {
    build(irreducible_construction(which)?, &Limits::default())
}

/// Restriction of the defining module for a dual pair, as used for the
/// embedding indices.
pub fn dual_pair_restriction(family: DualPairFamily, n: usize, m: usize) -> Result<Decomposition> {
    let c = dual_pair_construction(family, n, m)?;
    let types: Vec<AlgebraType> = c.factors.iter().map(|f| f.alg.ty()).collect();
    decomposition_of(&types, &c.defining)
}

/// The ambient adjoint restricted to the dual pair, computed.
pub fn dual_pair_adjoint(family: DualPairFamily, n: usize, m: usize) -> Result<Decomposition> {
    computed_adjoint(&dual_pair_construction(family, n, m)?, &Limits::default())
}

/// Index of the defining module of each factor, normalised form.
pub fn defining_indices(family: DualPairFamily, n: usize, m: usize) -> Result<Vec<Q>> {
    Ok(dual_pair_construction(family, n, m)?
        .factors
        .iter()
        .map(|f| f.defining_index.clone())
        .collect())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    #[serde(rename = "type")]
    ty: String,
    index: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    weights: Vec<Vec<i64>>,
    mult: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseDoc {
    label: String,
    ambient: String,
    factors: Vec<FactorDoc>,
    level: String,
    p: Vec<ComponentDoc>,
    source: String,
}

/// Branching cases keyed by label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    cases: BTreeMap<String, BranchingCase>,
}

impl Catalog {
    pub fn get(&self, label: &str) -> Option<&BranchingCase> {
        self.cases.get(label)
    }

    pub fn cases(&self) -> impl Iterator<Item = &BranchingCase> {
        self.cases.values()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.cases.keys().map(|s| s.as_str()).collect()
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    /// Adds or replaces entries from `other`.
    pub fn extend(&mut self, other: Catalog) {
        self.cases.extend(other.cases);
    }

    /// The shipped exceptional cases.
    pub fn builtin() -> Catalog {
        load_catalog(BUILTIN_CATALOG).expect("shipped catalog is valid")
    }

    pub fn to_json(&self) -> String {
        let docs: Vec<CaseDoc> = self.cases.values().map(case_doc).collect();
        serde_json::to_string_pretty(&docs).expect("serialisable")
    }
}

pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

fn case_doc(c: &BranchingCase) -> CaseDoc {
    CaseDoc {
        label: c.label.clone(),
        ambient: c.ambient.to_string(),
        factors: c
            .sub
            .factors
            .iter()
            .map(|f| FactorDoc {
                ty: f.ty.to_string(),
                index: fmt_q(&f.index),
            })
            .collect(),
        level: c.level.as_ref().map(fmt_q).unwrap_or_default(),
        p: c.p
            .components()
            .into_iter()
            .map(|(weights, mult)| ComponentDoc { weights, mult })
            .collect(),
        source: c.source.clone(),
    }
}

fn parse_case(doc: CaseDoc) -> Result<BranchingCase> {
    let label = doc.label.clone();
    let fail = |reason: String| Error::Catalog {
        label: label.clone(),
        reason,
    };
    if label.trim().is_empty() {
        return Err(fail("empty label".into()));
    }
    let ambient: AlgebraType = doc
        .ambient
        .parse()
        .map_err(|e: Error| fail(e.to_string()))?;
    let mut factors = Vec::new();
    for f in &doc.factors {
        let t: AlgebraType = f.ty.parse().map_err(|e: Error| fail(e.to_string()))?;
        let index = parse_rational(&f.index).map_err(|e| fail(e.to_string()))?;
        factors.push(SubalgebraFactor { ty: t, index });
    }
    let sub = SubalgebraSpec::new(label.clone(), factors).map_err(|e| fail(e.to_string()))?;
    let level = if doc.level.trim().is_empty() {
        None
    } else {
        Some(parse_rational(&doc.level).map_err(|e| fail(e.to_string()))?)
    };
    let mut p = Decomposition::new(sub.types());
    for c in &doc.p {
        if c.mult == 0 {
            return Err(fail("zero multiplicity".into()));
        }
        p.push(&c.weights, c.mult)
            .map_err(|e| fail(e.to_string()))?;
    }
    // guard against absurd weights before computing dimensions
    if doc
        .p
        .iter()
        .flat_map(|c| c.weights.iter().flatten())
        .any(|&x| x > 1000)
    {
        return Err(fail("weight coordinate too large".into()));
    }
    let case = BranchingCase {
        label: label.clone(),
        ambient,
        sub,
        p,
        level,
        source: doc.source,
    };
    case.check_dimension()?;
    Ok(case)
}

/// Parses and validates a catalog document. Any invalid entry rejects the
/// whole document.
pub fn load_catalog(text: &str) -> Result<Catalog> {
    let docs: Vec<CaseDoc> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("catalog: {e}")))?;
    let mut cases = BTreeMap::new();
    for doc in docs {
        let case = parse_case(doc)?;
        if cases.contains_key(&case.label) {
            return Err(Error::Catalog {
                label: case.label,
                reason: "duplicate label".into(),
            });
        }
        cases.insert(case.label.clone(), case);
    }
    Ok(Catalog { cases })
}

/// Parses a case label: `spso:2,3`-style dual pairs, `C3-in-A5`, `G2-in-B3`,
/// `B3-in-D4`, or a catalog label.
pub fn resolve_case(label: &str, catalog: &Catalog) -> Result<BranchingCase> {
    if let Some(c) = catalog.get(label) {
        return Ok(c.clone());
    }
    if let Some((fam, args)) = label.split_once(':') {
        let family: DualPairFamily = fam.parse()?;
        let (n, m) = args
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:N,M, got {label:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v <= 64)
                .ok_or_else(|| Error::Parse(format!("bad dual-pair parameter {s:?}")))
        };
        return dual_pair_branching(family, parse(n)?, parse(m)?);
    }
    match label {
        "G2-in-B3" => return irreducible_branching(Irreducible::G2InB3),
        "B3-in-D4" => return irreducible_branching(Irreducible::B3InD4),
        _ => {}
    }
    if let Some((sub, amb)) = label.split_once("-in-") {
        let s: AlgebraType = sub.parse()?;
        let a: AlgebraType = amb.parse()?;
        if s.family() == Family::C && a.family() == Family::A && a.rank() == 2 * s.rank() - 1 {
            return irreducible_branching(Irreducible::CnInA(s.rank()));
        }
    }
    Err(Error::Parse(format!("unknown case label {label:?}")))
}

impl fmt::Display for BranchingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} in {} ({}): p = {}",
            self.sub.notation(),
            self.ambient,
            factors_label(&self.sub.types()),
            self.p
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::frac;

    fn comps(c: &BranchingCase) -> Vec<(Vec<Vec<i64>>, u64)> {
        c.p.components()
    }

    #[test]
    fn spso_degenerate_n1() {
        let c = dual_pair_branching(DualPairFamily::SpSo, 1, 5).unwrap();
        assert_eq!(c.ambient.to_string(), "C5");
        assert_eq!(comps(&c), vec![(vec![vec![2], vec![2, 0]], 1)]);
        let idx: Vec<Q> = c.sub.factors.iter().map(|f| f.index.clone()).collect();
        assert_eq!(idx, vec![q(5), q(4)]);
    }

    #[test]
    fn bb_and_slsl() {
        let c = dual_pair_branching(DualPairFamily::BB, 2, 1).unwrap();
        assert_eq!(c.ambient.to_string(), "D4");
        assert_eq!(comps(&c), vec![(vec![vec![1, 0], vec![2]], 1)]);

        let c = dual_pair_branching(DualPairFamily::SlSl, 2, 3).unwrap();
        assert_eq!(comps(&c), vec![(vec![vec![2], vec![1, 1]], 1)]);
        let idx: Vec<Q> = c.sub.factors.iter().map(|f| f.index.clone()).collect();
        assert_eq!(idx, vec![q(3), q(2)]);
    }

    #[test]
    fn all_small_pairs_verify() {
        for fam in DualPairFamily::ALL {
            for n in 1..=4 {
                for m in 1..=4 {
                    if let Ok(c) = dual_pair_construction(fam, n, m) {
                        let case = build(c, &Limits::default())
                            .unwrap_or_else(|e| panic!("{fam} {n},{m}: {e}"));
                        case.check_dimension().unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn indices_of_dual_pairs() {
        let idx = |f, n, m| -> Vec<Q> {
            dual_pair_branching(f, n, m)
                .unwrap()
                .sub
                .factors
                .iter()
                .map(|x| x.index.clone())
                .collect()
        };
        assert_eq!(idx(DualPairFamily::SpSp, 2, 3), vec![q(3), q(2)]);
        assert_eq!(idx(DualPairFamily::SoSo, 3, 5), vec![q(10), q(3)]);
        assert_eq!(idx(DualPairFamily::SpSo, 2, 6), vec![q(6), q(8)]);
        assert_eq!(idx(DualPairFamily::SpSo, 1, 3), vec![q(3), q(8)]);
        assert_eq!(idx(DualPairFamily::CC, 2, 3), vec![q(1), q(1)]);
    }

    #[test]
    fn irreducible_cases() {
        let c = irreducible_branching(Irreducible::G2InB3).unwrap();
        assert_eq!(comps(&c), vec![(vec![vec![1, 0]], 1)]);
        assert_eq!(c.sub.factors[0].index, q(1));
        let c = irreducible_branching(Irreducible::B3InD4).unwrap();
        assert_eq!(comps(&c), vec![(vec![vec![1, 0, 0]], 1)]);
        assert_eq!(c.sub.factors[0].index, q(1));
        let c = irreducible_branching(Irreducible::CnInA(3)).unwrap();
        assert_eq!(comps(&c), vec![(vec![vec![0, 1, 0]], 1)]);
        assert_eq!(c.sub.factors[0].index, q(1));
    }

    #[test]
    fn bad_pairs() {
        assert!(matches!(
            dual_pair_branching(DualPairFamily::SoSo, 4, 5),
            Err(Error::InvalidDualPair { .. })
        ));
        assert!(dual_pair_branching(DualPairFamily::SlSl, 1, 5).is_err());
    }

    #[test]
    fn catalog_loads() {
        let cat = Catalog::builtin();
        let c = cat.get("G2xF4-in-E8").unwrap();
        assert_eq!(c.level, Some(q(-6)));
        let c = cat.get("G2xA1^8-in-F4").unwrap();
        assert_eq!(c.level, Some(frac(-5, 2)));
        let again = load_catalog(&cat.to_json()).unwrap();
        assert_eq!(again, cat);
    }

    #[test]
    fn catalog_rejects_bad_entries() {
        let bad = r#"[{"label":"broken","ambient":"E8","factors":[{"type":"G2","index":"1"},{"type":"F4","index":"1"}],"level":"-6","p":[{"weights":[[1,0],[0,0,1,0]],"mult":1}],"source":"test"}]"#;
        match load_catalog(bad) {
            Err(Error::Catalog { label, .. }) => assert_eq!(label, "broken"),
            other => panic!("{other:?}"),
        }
        let dup = format!(
            "[{e},{e}]",
            e = r#"{"label":"x","ambient":"B3","factors":[{"type":"G2","index":"1"}],"level":"-2","p":[{"weights":[[1,0]],"mult":1}],"source":"t"}"#
        );
        assert!(matches!(load_catalog(&dup), Err(Error::Catalog { .. })));
        assert!(load_catalog("{}").is_err());
        let zero_index = r#"[{"label":"z","ambient":"B3","factors":[{"type":"G2","index":"0"}],"level":"-2","p":[{"weights":[[1,0]],"mult":1}],"source":"t"}]"#;
        assert!(load_catalog(zero_index).is_err());
    }

    #[test]
    fn labels_resolve() {
        let cat = Catalog::builtin();
        assert_eq!(
            resolve_case("spso:2,3", &cat).unwrap().ambient.to_string(),
            "C6"
        );
        assert_eq!(
            resolve_case("C3-in-A5", &cat).unwrap().ambient.to_string(),
            "A5"
        );
        assert!(resolve_case("G2-in-B3", &cat).is_ok());
        assert!(resolve_case("nonsense", &cat).is_err());
    }
}
