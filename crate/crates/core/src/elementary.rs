//! Elementary Lie automorphisms as triples `(theta, sigma, c)`.
//!
//! An elementary automorphism is determined by a bijection `theta` of the
//! strict basis `B = {e(x,y) : x < y}` that preserves interval length, is
//! monotone on maximal chains and balances the four step counters on every
//! cycle of the Hasse diagram (admissibility); a scale system `sigma` on
//! strict pairs compatible with how `theta` transports chained products; and
//! an anchor vector `c` of diagonal values at the first element, with
//! nonzero sum. [`build_tau`] realises the triple as a [`LinearMap`] and
//! [`decompose_elementary`] recovers the unique triple of an elementary map.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::field::{Field, Scalar};
use crate::maps::{LinearMap, MapError};
use crate::poset::{FinitePoset, Walk};

/// Guard for the exhaustive bijection search; override per call or through
/// the CLI environment variable.
pub const DEFAULT_THETA_LIMIT: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuilderError {
    #[error("mapping is not a bijection of the strict basis")]
    NotBijection,
    #[error("mapping does not preserve interval length")]
    NotLevelPreserving,
    #[error("not a maximal chain")]
    NotMaximalChain,
    #[error("walk is not closed")]
    NotClosed,
    #[error("({0}, {1}) is not a walk step")]
    NotAWalkStep(String, String),
    #[error("bijection is not admissible")]
    NotAdmissible,
    #[error("bijection is not monotone on maximal chains")]
    NotMonotone,
    #[error("sigma is not compatible with theta")]
    NotCompatible,
    #[error("coefficient sum is zero")]
    ZeroTrace,
    #[error("coefficient vector has {got} entries, poset has {want} elements")]
    WrongLength { got: usize, want: usize },
    #[error("mixed coefficient fields")]
    FieldMismatch,
    #[error("sigma conflict at triple ({x}, {y}, {z})")]
    Conflict { x: String, y: String, z: String },
    #[error("missing sigma seed for cover ({0}, {1})")]
    MissingSeed(String, String),
    #[error("sigma seed pair ({0}, {1}) is not a cover")]
    SeedNotCover(String, String),
    #[error("sigma value for ({0}, {1}) is zero")]
    ZeroSigma(String, String),
    #[error("pair ({0}, {1}) received no propagation constraint")]
    UnconstrainedPair(String, String),
    #[error("search space too large: |B| = {size} exceeds limit {limit}")]
    SearchSpaceTooLarge { size: usize, limit: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Verdict of the per-chain monotonicity test, carrying the witness chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing(Vec<usize>),
    Decreasing(Vec<usize>),
    NotMonotone,
}

/// The four step counters of a bijection along a closed walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StCounters {
    pub s_plus: usize,
    pub s_minus: usize,
    pub t_plus: usize,
    pub t_minus: usize,
}

impl StCounters {
    pub fn balanced(&self) -> bool {
        self.s_plus as i64 - self.s_minus as i64 == self.t_plus as i64 - self.t_minus as i64
    }

    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.s_plus, self.s_minus, self.t_plus, self.t_minus)
    }
}

/// A length-preserving bijection of the strict basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisBijection {
    poset: Arc<FinitePoset>,
    forward: BTreeMap<(usize, usize), (usize, usize)>,
    backward: BTreeMap<(usize, usize), (usize, usize)>,
}

impl BasisBijection {
    pub fn new(
        poset: &Arc<FinitePoset>,
        mapping: BTreeMap<(usize, usize), (usize, usize)>,
    ) -> Result<Self, BuilderError> {
        let strict = poset.strict_pairs();
        if mapping.len() != strict.len() || !strict.iter().all(|p| mapping.contains_key(p)) {
            return Err(BuilderError::NotBijection);
        }
        let mut backward = BTreeMap::new();
        for (&src, &dst) in &mapping {
            if !strict.contains(&dst) || backward.insert(dst, src).is_some() {
                return Err(BuilderError::NotBijection);
            }
        }
        for (&(x, y), &(u, v)) in &mapping {
            if poset.interval_length(x, y) != poset.interval_length(u, v) {
                return Err(BuilderError::NotLevelPreserving);
            }
        }
        Ok(BasisBijection {
            poset: Arc::clone(poset),
            forward: mapping,
            backward,
        })
    }

    pub fn identity(poset: &Arc<FinitePoset>) -> Self {
        let forward: BTreeMap<_, _> = poset.strict_pairs().into_iter().map(|p| (p, p)).collect();
        let backward = forward.clone();
        BasisBijection {
            poset: Arc::clone(poset),
            forward,
            backward,
        }
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn image(&self, x: usize, y: usize) -> (usize, usize) {
        self.forward[&(x, y)]
    }

    pub fn preimage(&self, u: usize, v: usize) -> (usize, usize) {
        self.backward[&(u, v)]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &(usize, usize))> {
        self.forward.iter()
    }

    pub fn inverse(&self) -> BasisBijection {
        BasisBijection {
            poset: Arc::clone(&self.poset),
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// Classifies the bijection on one maximal chain: does it carry the
    /// chain's basis onto another maximal chain's basis in ascending or
    /// descending order? Length-2 chains report `Increasing` (the two
    /// readings coincide there).
    pub fn chain_monotonicity(&self, chain: &[usize]) -> Result<Monotonicity, BuilderError> {
        self.check_maximal_chain(chain)?;
        let m = chain.len();
        if m == 1 {
            return Ok(Monotonicity::Increasing(chain.to_vec()));
        }
        if let Some(witness) = self.try_increasing(chain) {
            return Ok(Monotonicity::Increasing(witness));
        }
        if m > 2 {
            if let Some(witness) = self.try_decreasing(chain) {
                return Ok(Monotonicity::Decreasing(witness));
            }
        }
        Ok(Monotonicity::NotMonotone)
    }

    fn check_maximal_chain(&self, chain: &[usize]) -> Result<(), BuilderError> {
        let p = &self.poset;
        if chain.is_empty() || chain.iter().any(|&v| v >= p.size()) {
            return Err(BuilderError::NotMaximalChain);
        }
        for w in chain.windows(2) {
            if !p.is_cover(w[0], w[1]) {
                return Err(BuilderError::NotMaximalChain);
            }
        }
        if !p.minimal_elements().contains(&chain[0])
            || !p.maximal_elements().contains(chain.last().unwrap())
        {
            return Err(BuilderError::NotMaximalChain);
        }
        Ok(())
    }

    fn try_increasing(&self, chain: &[usize]) -> Option<Vec<usize>> {
        let m = chain.len();
        let (a0, b0) = self.image(chain[0], chain[1]);
        let mut witness = vec![0usize; m];
        witness[0] = a0;
        witness[1] = b0;
        for i in 1..m - 1 {
            let (a, b) = self.image(chain[i], chain[i + 1]);
            if a != witness[i] {
                return None;
            }
            witness[i + 1] = b;
        }
        self.verify_witness(chain, &witness, false)
    }

    fn try_decreasing(&self, chain: &[usize]) -> Option<Vec<usize>> {
        let m = chain.len();
        let (a0, b0) = self.image(chain[0], chain[1]);
        let mut witness = vec![0usize; m];
        witness[m - 1] = b0;
        witness[m - 2] = a0;
        for i in 1..m - 1 {
            let (a, b) = self.image(chain[i], chain[i + 1]);
            if b != witness[m - 1 - i] {
                return None;
            }
            witness[m - 2 - i] = a;
        }
        self.verify_witness(chain, &witness, true)
    }

    /// The witness must be a maximal chain and every (not just consecutive)
    /// pair must be transported onto it in the claimed direction.
    fn verify_witness(&self, chain: &[usize], witness: &[usize], reversed: bool) -> Option<Vec<usize>> {
        let p = &self.poset;
        let m = chain.len();
        for w in witness.windows(2) {
            if !p.is_cover(w[0], w[1]) {
                return None;
            }
        }
        if !p.minimal_elements().contains(&witness[0])
            || !p.maximal_elements().contains(witness.last().unwrap())
        {
            return None;
        }
        for i in 0..m {
            for j in i + 1..m {
                let expected = if reversed {
                    (witness[m - 1 - j], witness[m - 1 - i])
                } else {
                    (witness[i], witness[j])
                };
                if self.image(chain[i], chain[j]) != expected {
                    return None;
                }
            }
        }
        Some(witness.to_vec())
    }

    pub fn is_monotone_on_maximal_chains(&self) -> bool {
        self.poset.maximal_chains().iter().all(|chain| {
            !matches!(
                self.chain_monotonicity(chain),
                Ok(Monotonicity::NotMonotone) | Err(_)
            )
        })
    }

    /// The four counters of this bijection along a closed walk, at `z`: how
    /// many up (resp. down) steps are hit by a pair starting (s) or ending
    /// (t) at `z` under the bijection.
    pub fn st_counters(&self, walk: &Walk, z: usize) -> Result<StCounters, BuilderError> {
        if !walk.is_closed() {
            return Err(BuilderError::NotClosed);
        }
        let p = &self.poset;
        let mut counters = StCounters {
            s_plus: 0,
            s_minus: 0,
            t_plus: 0,
            t_minus: 0,
        };
        for step in walk.vertices().windows(2) {
            let (from, to) = (step[0], step[1]);
            if p.is_cover(from, to) {
                let (a, b) = self.preimage(from, to);
                if a == z {
                    counters.s_plus += 1;
                }
                if b == z {
                    counters.t_plus += 1;
                }
            } else if p.is_cover(to, from) {
                let (a, b) = self.preimage(to, from);
                if a == z {
                    counters.s_minus += 1;
                }
                if b == z {
                    counters.t_minus += 1;
                }
            } else {
                return Err(BuilderError::NotAWalkStep(
                    p.label(from).to_string(),
                    p.label(to).to_string(),
                ));
            }
        }
        Ok(counters)
    }

    /// Counter balance on every cycle (both orientations of each stored
    /// representative) at every element. Trees are vacuously admissible.
    pub fn is_admissible(&self) -> bool {
        let cycles = self.poset.enumerate_cycles();
        for cycle in &cycles {
            for walk in [cycle.as_walk(), cycle.reversed().as_walk()] {
                for z in 0..self.poset.size() {
                    let counters = self.st_counters(&walk, z).expect("cycle walk is closed");
                    if !counters.balanced() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Diagonal increment of the `e(z)`-image along one walk step, read off
    /// the preimage `(v, w)` of the step edge: -1 when the step moves away
    /// from `z`'s slot, +1 towards it, 0 when `z` is not involved.
    pub fn walk_increment(&self, from: usize, to: usize, z: usize) -> Result<i64, BuilderError> {
        let p = &self.poset;
        let (edge, upward) = if p.is_cover(from, to) {
            ((from, to), true)
        } else if p.is_cover(to, from) {
            ((to, from), false)
        } else {
            return Err(BuilderError::NotAWalkStep(
                p.label(from).to_string(),
                p.label(to).to_string(),
            ));
        };
        let (v, w) = self.preimage(edge.0, edge.1);
        Ok(if z == v {
            if upward {
                -1
            } else {
                1
            }
        } else if z == w {
            if upward {
                1
            } else {
                -1
            }
        } else {
            0
        })
    }
}

/// Scale factors on strict pairs, all invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMap {
    field: Field,
    values: BTreeMap<(usize, usize), Scalar>,
}

impl SigmaMap {
    pub fn new(
        poset: &FinitePoset,
        field: Field,
        values: BTreeMap<(usize, usize), Scalar>,
    ) -> Result<Self, BuilderError> {
        let strict = poset.strict_pairs();
        if values.len() != strict.len() || !strict.iter().all(|p| values.contains_key(p)) {
            return Err(BuilderError::NotBijection);
        }
        for (&(x, y), v) in &values {
            if v.field() != field {
                return Err(BuilderError::FieldMismatch);
            }
            if v.is_zero() {
                return Err(BuilderError::ZeroSigma(
                    poset.label(x).to_string(),
                    poset.label(y).to_string(),
                ));
            }
        }
        Ok(SigmaMap { field, values })
    }

    pub fn constant_one(poset: &FinitePoset, field: Field) -> Self {
        let values = poset
            .strict_pairs()
            .into_iter()
            .map(|p| (p, field.one()))
            .collect();
        SigmaMap { field, values }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn value(&self, x: usize, y: usize) -> Scalar {
        self.values[&(x, y)].clone()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.values.iter()
    }

    /// The product law: when theta transports `e(x,y) e(y,z)` onto the image
    /// of `e(x,z)` the sigma values multiply; when it transports the product
    /// reversed they multiply with a sign.
    pub fn is_compatible(&self, theta: &BasisBijection) -> bool {
        let p = theta.poset();
        for (x, z) in p.strict_pairs() {
            for y in p.interval(x, z) {
                if y == x || y == z {
                    continue;
                }
                let product = &self.value(x, y) * &self.value(y, z);
                let expected = match transport_kind(theta, x, y, z) {
                    Some(TransportKind::Straight) => product,
                    Some(TransportKind::Reversed) => -&product,
                    None => continue,
                };
                if self.value(x, z) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Extends nonzero seed values on the cover pairs to a full compatible
    /// system by propagating the product law over intervals in increasing
    /// length order, cross-checking every intermediate element.
    pub fn complete(
        theta: &BasisBijection,
        field: Field,
        seed: &BTreeMap<(usize, usize), Scalar>,
    ) -> Result<SigmaMap, BuilderError> {
        let p = theta.poset();
        if !theta.is_monotone_on_maximal_chains() {
            return Err(BuilderError::NotMonotone);
        }
        if !theta.is_admissible() {
            return Err(BuilderError::NotAdmissible);
        }
        for (&(x, y), v) in seed {
            if !p.is_cover(x, y) {
                return Err(BuilderError::SeedNotCover(
                    p.label(x).to_string(),
                    p.label(y).to_string(),
                ));
            }
            if v.field() != field {
                return Err(BuilderError::FieldMismatch);
            }
            if v.is_zero() {
                return Err(BuilderError::ZeroSigma(
                    p.label(x).to_string(),
                    p.label(y).to_string(),
                ));
            }
        }
        let mut pairs = p.strict_pairs();
        pairs.sort_by_key(|&(x, y)| (p.interval_length(x, y).unwrap(), x, y));
        let mut values: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (x, z) in pairs {
            if p.is_cover(x, z) {
                let v = seed.get(&(x, z)).ok_or_else(|| {
                    BuilderError::MissingSeed(p.label(x).to_string(), p.label(z).to_string())
                })?;
                values.insert((x, z), v.clone());
                continue;
            }
            let mut derived: Option<(usize, Scalar)> = None;
            for y in p.interval(x, z) {
                if y == x || y == z {
                    continue;
                }
                let product = &values[&(x, y)] * &values[&(y, z)];
                let candidate = match transport_kind(theta, x, y, z) {
                    Some(TransportKind::Straight) => product,
                    Some(TransportKind::Reversed) => -&product,
                    None => continue,
                };
                match &derived {
                    None => derived = Some((y, candidate)),
                    Some((_, existing)) if *existing == candidate => {}
                    Some(_) => {
                        return Err(BuilderError::Conflict {
                            x: p.label(x).to_string(),
                            y: p.label(y).to_string(),
                            z: p.label(z).to_string(),
                        })
                    }
                }
            }
            match derived {
                Some((_, v)) => {
                    values.insert((x, z), v);
                }
                None => {
                    return Err(BuilderError::UnconstrainedPair(
                        p.label(x).to_string(),
                        p.label(z).to_string(),
                    ))
                }
            }
        }
        SigmaMap::new(p, field, values)
    }
}

enum TransportKind {
    /// `theta(e_xz) = theta(e_xy) theta(e_yz)`
    Straight,
    /// `theta(e_xz) = theta(e_yz) theta(e_xy)`
    Reversed,
}

fn transport_kind(
    theta: &BasisBijection,
    x: usize,
    y: usize,
    z: usize,
) -> Option<TransportKind> {
    let (a, b) = theta.image(x, y);
    let (c, d) = theta.image(y, z);
    let target = theta.image(x, z);
    if b == c && (a, d) == target {
        Some(TransportKind::Straight)
    } else if d == a && (c, b) == target {
        Some(TransportKind::Reversed)
    } else {
        None
    }
}

/// Anchor diagonal values, one per element in file order, with nonzero sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    field: Field,
    values: Vec<Scalar>,
}

impl CoefficientVector {
    pub fn new(field: Field, values: Vec<Scalar>) -> Result<Self, BuilderError> {
        if values.iter().any(|v| v.field() != field) {
            return Err(BuilderError::FieldMismatch);
        }
        let sum = values.iter().fold(field.zero(), |acc, v| &acc + v);
        if sum.is_zero() {
            return Err(BuilderError::ZeroTrace);
        }
        Ok(CoefficientVector { field, values })
    }

    /// The vector `(1, 0, ..., 0)` whose tau (with identity theta and unit
    /// sigma) is the identity map.
    pub fn anchor_one(field: Field, n: usize) -> Self {
        let mut values = vec![field.zero(); n];
        values[0] = field.one();
        CoefficientVector { field, values }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A validated `(theta, sigma, c)` triple: admissible monotone theta,
/// compatible sigma, anchor values with nonzero sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryTriple {
    theta: BasisBijection,
    sigma: SigmaMap,
    c: CoefficientVector,
}

impl ElementaryTriple {
    pub fn new(
        theta: BasisBijection,
        sigma: SigmaMap,
        c: CoefficientVector,
    ) -> Result<Self, BuilderError> {
        if sigma.field() != c.field() {
            return Err(BuilderError::FieldMismatch);
        }
        if c.len() != theta.poset().size() {
            return Err(BuilderError::WrongLength {
                got: c.len(),
                want: theta.poset().size(),
            });
        }
        if !theta.is_admissible() {
            return Err(BuilderError::NotAdmissible);
        }
        if !theta.is_monotone_on_maximal_chains() {
            return Err(BuilderError::NotMonotone);
        }
        if !sigma.is_compatible(&theta) {
            return Err(BuilderError::NotCompatible);
        }
        Ok(ElementaryTriple { theta, sigma, c })
    }

    pub fn theta(&self) -> &BasisBijection {
        &self.theta
    }

    pub fn sigma(&self) -> &SigmaMap {
        &self.sigma
    }

    pub fn c(&self) -> &CoefficientVector {
        &self.c
    }

    pub fn field(&self) -> Field {
        self.c.field()
    }
}

/// Realises a triple as the elementary Lie automorphism it encodes: strict
/// basis vectors map to their scaled theta-images, and the diagonal values
/// are walked out from the anchor element along deterministic walks
/// (admissibility makes the result walk-independent).
pub fn build_tau(triple: &ElementaryTriple) -> LinearMap {
    let theta = triple.theta();
    let poset = theta.poset();
    let field = triple.field();
    let n = poset.size();
    let mut images: Vec<((usize, usize), AlgebraElement)> = Vec::new();
    for (x, y) in poset.strict_pairs() {
        let (u, v) = theta.image(x, y);
        let img = AlgebraElement::from_coeffs(poset, field, [((u, v), triple.sigma().value(x, y))])
            .expect("image pair is comparable");
        images.push(((x, y), img));
    }
    let walks: Vec<Walk> = (0..n).map(|v| poset.walk_between(0, v)).collect();
    let total_increment = |walk: &Walk, z: usize| -> i64 {
        walk.vertices()
            .windows(2)
            .map(|step| {
                theta
                    .walk_increment(step[0], step[1], z)
                    .expect("walk steps are cover steps")
            })
            .sum()
    };
    for z in 0..n {
        let mut terms = Vec::new();
        for v in 0..n {
            let increment = total_increment(&walks[v], z);
            // Admissibility makes the diagonal walk-independent; check a
            // detour route in debug builds.
            debug_assert_eq!(increment, {
                let detour = poset
                    .walk_between(0, n - 1)
                    .concat(&poset.walk_between(n - 1, v))
                    .expect("walks share the waypoint");
                total_increment(&detour, z)
            });
            let value = &triple.c().values()[z] + &field.integer(increment);
            terms.push(((v, v), value));
        }
        let img = AlgebraElement::from_coeffs(poset, field, terms).expect("diagonal pairs");
        images.push(((z, z), img));
    }
    LinearMap::from_images(poset, field, images).expect("all basis vectors covered")
}

/// Recovers the unique triple of an elementary Lie automorphism: theta and
/// sigma from the basis images, anchor values from the first diagonal entry
/// of each idempotent image.
pub fn decompose_elementary(map: &LinearMap) -> Result<ElementaryTriple, BuilderError> {
    let (theta, sigma) = map.extract_theta_sigma()?;
    let n = map.poset().size();
    let values: Vec<Scalar> = (0..n).map(|z| map.image_of(z, z).coeff(0, 0)).collect();
    let c = CoefficientVector::new(map.field(), values)?;
    ElementaryTriple::new(theta, sigma, c)
}

/// All admissible, chain-monotone, length-preserving bijections of the
/// strict basis, canonically ordered. Guarded by the default search limit.
pub fn enumerate_theta(poset: &Arc<FinitePoset>) -> Result<Vec<BasisBijection>, BuilderError> {
    enumerate_theta_with_limit(poset, DEFAULT_THETA_LIMIT)
}

pub fn enumerate_theta_with_limit(
    poset: &Arc<FinitePoset>,
    limit: usize,
) -> Result<Vec<BasisBijection>, BuilderError> {
    let strict = poset.strict_pairs();
    if strict.len() > limit {
        return Err(BuilderError::SearchSpaceTooLarge {
            size: strict.len(),
            limit,
        });
    }
    // Group the basis by exact interval length; any candidate permutes each
    // class within itself.
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(x, y) in &strict {
        classes
            .entry(poset.interval_length(x, y).unwrap())
            .or_default()
            .push((x, y));
    }
    let class_list: Vec<Vec<(usize, usize)>> = classes.into_values().collect();
    let perms_per_class: Vec<Vec<Vec<usize>>> = class_list
        .iter()
        .map(|class| permutations(class.len()))
        .collect();
    let total: usize = perms_per_class.iter().map(Vec::len).product();
    let mut found: Vec<BasisBijection> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut mapping = BTreeMap::new();
            for (class, perms) in class_list.iter().zip(&perms_per_class) {
                let perm = &perms[idx % perms.len()];
                idx /= perms.len();
                for (slot, &target) in perm.iter().enumerate() {
                    mapping.insert(class[slot], class[target]);
                }
            }
            let theta = BasisBijection::new(poset, mapping).expect("candidate is level-preserving");
            (theta.is_monotone_on_maximal_chains() && theta.is_admissible()).then_some(theta)
        })
        .collect();
    found.sort_by(|a, b| {
        let ka: Vec<_> = a.forward.values().collect();
        let kb: Vec<_> = b.forward.values().collect();
        ka.cmp(&kb)
    });
    Ok(found)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute_rec(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute_rec(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute_rec(current, k + 1, out);
        current.swap(k, i);
    }
}
