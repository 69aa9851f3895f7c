//! Shared fixtures, independent oracles and random generators for the
//! integration and acceptance suites.
#![allow(dead_code)] // each test target uses its own slice of this module
//!
//! The oracles deliberately take different routes than the library: radical
//! powers by product closure instead of interval lengths, the radical centre
//! by solving the commutation equations, admissibility by sampling closed
//! walks, monotonicity by global search over witness chains. Expected values
//! frozen in the suites were computed with these oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::Rng;

use workbench_core::{
    build_tau, AlgebraElement, BasisBijection, CoefficientVector, ElementaryTriple, Field,
    FinitePoset, LinearMap, Scalar, SigmaMap,
};

pub fn kite() -> Arc<FinitePoset> {
    Arc::new(
        FinitePoset::from_cover_relations(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("1", "4")],
        )
        .unwrap(),
    )
}

pub fn two_crown() -> Arc<FinitePoset> {
    Arc::new(
        FinitePoset::from_cover_relations(
            &["1", "2", "3", "4"],
            &[("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
        )
        .unwrap(),
    )
}

pub fn chain(n: usize) -> Arc<FinitePoset> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n)
        .map(|i| (i.to_string(), (i + 1).to_string()))
        .collect();
    Arc::new(FinitePoset::from_cover_relations(&labels, &covers).unwrap())
}

/// Pentagon Hasse diagram: 1<2<3 and 1<4<5<3.
pub fn pentagon() -> Arc<FinitePoset> {
    Arc::new(
        FinitePoset::from_cover_relations(
            &["1", "2", "3", "4", "5"],
            &[("1", "2"), ("2", "3"), ("1", "4"), ("4", "5"), ("5", "3")],
        )
        .unwrap(),
    )
}

/// Two minimal elements under three maximal ones: three fused 4-cycles.
pub fn fused_crowns() -> Arc<FinitePoset> {
    Arc::new(
        FinitePoset::from_cover_relations(
            &["1", "2", "3", "4", "5"],
            &[
                ("1", "3"),
                ("1", "4"),
                ("1", "5"),
                ("2", "3"),
                ("2", "4"),
                ("2", "5"),
            ],
        )
        .unwrap(),
    )
}

/// The kite automorphism fixture: swaps e(1,2) and e(2,3), negates e(1,3),
/// fixes e(1,4), with the matching diagonal images.
pub fn fixture_phi(p: &Arc<FinitePoset>, field: Field) -> LinearMap {
    let e = |x: usize, y: usize| AlgebraElement::basis(p, field, x, y).unwrap();
    let images = vec![
        ((0, 0), e(2, 2).neg().sub(&e(3, 3)).unwrap()),
        ((0, 1), e(1, 2)),
        ((0, 2), e(0, 2).neg()),
        ((0, 3), e(0, 3)),
        (
            (1, 1),
            e(0, 0).add(&e(2, 2)).unwrap().add(&e(3, 3)).unwrap(),
        ),
        ((1, 2), e(0, 1)),
        ((2, 2), e(1, 1).add(&e(2, 2)).unwrap()),
        ((3, 3), e(3, 3)),
    ];
    LinearMap::from_images(p, field, images).unwrap()
}

pub fn kite_triple(p: &Arc<FinitePoset>, field: Field) -> ElementaryTriple {
    let theta = BasisBijection::new(
        p,
        BTreeMap::from([
            ((0, 1), (1, 2)),
            ((1, 2), (0, 1)),
            ((0, 2), (0, 2)),
            ((0, 3), (0, 3)),
        ]),
    )
    .unwrap();
    let sigma = SigmaMap::new(
        p.as_ref(),
        field,
        BTreeMap::from([
            ((0, 1), field.one()),
            ((1, 2), field.one()),
            ((0, 2), -&field.one()),
            ((0, 3), field.one()),
        ]),
    )
    .unwrap();
    let c = CoefficientVector::new(
        field,
        vec![field.zero(), field.one(), field.zero(), field.zero()],
    )
    .unwrap();
    ElementaryTriple::new(theta, sigma, c).unwrap()
}

/// All connected posets with at most `max_n` elements, naturally labelled
/// (the listing order is a linear extension); every isomorphism class on at
/// most `max_n` elements occurs.
pub fn connected_posets_up_to(max_n: usize) -> Vec<Arc<FinitePoset>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut downs: Vec<u64> = vec![0];
        natural_rec(n, &mut downs, &mut out);
    }
    out
}

fn natural_rec(n: usize, downs: &mut Vec<u64>, out: &mut Vec<Arc<FinitePoset>>) {
    let k = downs.len();
    if k == n {
        if let Some(p) = poset_from_downsets(downs) {
            out.push(p);
        }
        return;
    }
    // Element k sits above an arbitrary down-closed subset of 0..k.
    for subset in 0..(1u64 << k) {
        let mut closed = true;
        for i in 0..k {
            if subset & (1 << i) != 0 && downs[i] & subset != downs[i] {
                closed = false;
                break;
            }
        }
        if closed {
            downs.push(subset);
            natural_rec(n, downs, out);
            downs.pop();
        }
    }
}

fn poset_from_downsets(downs: &[u64]) -> Option<Arc<FinitePoset>> {
    let n = downs.len();
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut covers = Vec::new();
    for k in 0..n {
        for i in 0..k {
            if downs[k] & (1 << i) == 0 {
                continue;
            }
            // i < k is a cover unless some j below k sits above i.
            let has_intermediate =
                (0..n).any(|j| downs[k] & (1 << j) != 0 && downs[j] & (1 << i) != 0);
            if !has_intermediate {
                covers.push((labels[i].clone(), labels[k].clone()));
            }
        }
    }
    FinitePoset::from_cover_relations(&labels, &covers)
        .ok()
        .map(Arc::new)
}

/// Radical-power oracle: the support pairs of nonzero `m`-fold products of
/// strict basis vectors, by product closure.
pub fn radical_power_pairs_oracle(p: &FinitePoset, m: usize) -> BTreeSet<(usize, usize)> {
    let strict: BTreeSet<(usize, usize)> = p.strict_pairs().into_iter().collect();
    let mut current = strict.clone();
    for _ in 1..m {
        let mut next = BTreeSet::new();
        for &(a, b) in &strict {
            for &(c, d) in &current {
                if b == c {
                    next.insert((a, d));
                }
            }
        }
        current = next;
    }
    current
}

/// Same closure computed through the algebra product itself.
pub fn radical_power_pairs_by_multiplication(
    p: &Arc<FinitePoset>,
    field: Field,
    m: usize,
) -> BTreeSet<(usize, usize)> {
    let basis: Vec<AlgebraElement> = p
        .strict_pairs()
        .into_iter()
        .map(|(x, y)| AlgebraElement::basis(p, field, x, y).unwrap())
        .collect();
    let mut current: Vec<AlgebraElement> = basis.clone();
    for _ in 1..m {
        let mut next: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
        for a in &basis {
            for c in &current {
                let prod = a.multiply(c).unwrap();
                let pair = prod.support().next().map(|(&pair, _)| pair);
                if let Some(pair) = pair {
                    next.insert(pair, prod);
                }
            }
        }
        current = next.into_values().collect();
    }
    current
        .iter()
        .flat_map(|f| f.support().map(|(&pair, _)| pair))
        .collect()
}

/// Row span of the smallest subspace containing `elements` and closed under
/// brackets with the whole algebra.
pub fn lie_closure_rows(
    p: &Arc<FinitePoset>,
    field: Field,
    elements: &[AlgebraElement],
) -> Vec<Vec<Scalar>> {
    let pairs = p.all_pairs();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut worklist: Vec<AlgebraElement> = elements.to_vec();
    while let Some(f) = worklist.pop() {
        if f.is_zero() {
            continue;
        }
        let row = f.coordinates(&pairs);
        if workbench_core::linalg::in_span(&rows, &row) {
            continue;
        }
        rows.push(row);
        for &(x, y) in &pairs {
            let e = AlgebraElement::basis(p, field, x, y).unwrap();
            worklist.push(f.bracket(&e).unwrap());
        }
    }
    rows
}

/// Solves the commutation equations directly: coordinates (on strict pairs)
/// of the radical elements commuting with every strict basis vector.
pub fn radical_commutant_rows(p: &FinitePoset, field: Field) -> Vec<Vec<Scalar>> {
    let strict = p.strict_pairs();
    let unknowns = strict.len();
    let mut equations: BTreeMap<((usize, usize), (usize, usize)), Vec<Scalar>> = BTreeMap::new();
    for &(u, v) in &strict {
        for (idx, &(x, y)) in strict.iter().enumerate() {
            // [e_xy, e_uv] = [y==u] e_xv - [v==x] e_uy
            if y == u {
                let row = equations
                    .entry(((u, v), (x, v)))
                    .or_insert_with(|| vec![field.zero(); unknowns]);
                row[idx] = &row[idx] + &field.one();
            }
            if v == x {
                let row = equations
                    .entry(((u, v), (u, y)))
                    .or_insert_with(|| vec![field.zero(); unknowns]);
                row[idx] = &row[idx] - &field.one();
            }
        }
    }
    let matrix: Vec<Vec<Scalar>> = equations.into_values().collect();
    if matrix.is_empty() {
        // No constraints: the whole radical commutes.
        return (0..unknowns)
            .map(|i| {
                let mut row = vec![field.zero(); unknowns];
                row[i] = field.one();
                row
            })
            .collect();
    }
    workbench_core::linalg::kernel(&field, &matrix)
}

/// All closed walks of length between 2 and `max_len` steps, from every
/// start vertex.
pub fn closed_walks_up_to(p: &FinitePoset, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut walk = Vec::new();
    for s in 0..p.size() {
        walk.push(s);
        walk_rec(p, s, max_len, &mut walk, &mut out);
        walk.pop();
    }
    out
}

fn walk_rec(
    p: &FinitePoset,
    start: usize,
    max_len: usize,
    walk: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if walk.len() > max_len {
        return;
    }
    let last = *walk.last().unwrap();
    for &nb in p.neighbors(last) {
        if nb == start && walk.len() >= 2 {
            let mut closed = walk.clone();
            closed.push(start);
            out.push(closed);
        }
        walk.push(nb);
        walk_rec(p, start, max_len, walk, out);
        walk.pop();
    }
}

/// Direct implementation of the four counters from a raw bijection table.
pub fn oracle_counters(
    p: &FinitePoset,
    theta: &BTreeMap<(usize, usize), (usize, usize)>,
    walk: &[usize],
    z: usize,
) -> (i64, i64, i64, i64) {
    let (mut s_plus, mut s_minus, mut t_plus, mut t_minus) = (0, 0, 0, 0);
    for step in walk.windows(2) {
        let (from, to) = (step[0], step[1]);
        if p.is_cover(from, to) {
            if theta.iter().any(|(&(a, _), &img)| a == z && img == (from, to)) {
                s_plus += 1;
            }
            if theta.iter().any(|(&(_, b), &img)| b == z && img == (from, to)) {
                t_plus += 1;
            }
        } else {
            let edge = (to, from);
            if theta.iter().any(|(&(a, _), &img)| a == z && img == edge) {
                s_minus += 1;
            }
            if theta.iter().any(|(&(_, b), &img)| b == z && img == edge) {
                t_minus += 1;
            }
        }
    }
    (s_plus, s_minus, t_plus, t_minus)
}

pub fn oracle_admissible_by_walks(
    p: &FinitePoset,
    theta: &BTreeMap<(usize, usize), (usize, usize)>,
    walks: &[Vec<usize>],
) -> bool {
    walks.iter().all(|walk| {
        (0..p.size()).all(|z| {
            let (sp, sm, tp, tm) = oracle_counters(p, theta, walk, z);
            sp - sm == tp - tm
        })
    })
}

/// Monotonicity by global search: every maximal chain must be transported
/// onto some maximal chain, forwards or backwards.
pub fn oracle_monotone(
    p: &FinitePoset,
    theta: &BTreeMap<(usize, usize), (usize, usize)>,
) -> bool {
    let chains = p.maximal_chains();
    chains.iter().all(|c| {
        chains.iter().any(|d| {
            c.len() == d.len() && (chain_match(theta, c, d, false) || chain_match(theta, c, d, true))
        })
    })
}

fn chain_match(
    theta: &BTreeMap<(usize, usize), (usize, usize)>,
    c: &[usize],
    d: &[usize],
    reversed: bool,
) -> bool {
    let m = c.len();
    for i in 0..m {
        for j in i + 1..m {
            let expected = if reversed {
                (d[m - 1 - j], d[m - 1 - i])
            } else {
                (d[i], d[j])
            };
            if theta.get(&(c[i], c[j])) != Some(&expected) {
                return false;
            }
        }
    }
    true
}

/// All bijections of the strict basis preserving interval length, as raw
/// tables.
pub fn all_level_preserving_bijections(
    p: &FinitePoset,
) -> Vec<BTreeMap<(usize, usize), (usize, usize)>> {
    let strict = p.strict_pairs();
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(x, y) in &strict {
        classes
            .entry(p.interval_length(x, y).unwrap())
            .or_default()
            .push((x, y));
    }
    let classes: Vec<Vec<(usize, usize)>> = classes.into_values().collect();
    let mut out = vec![BTreeMap::new()];
    for class in &classes {
        let perms = permutations(class.len());
        let mut next = Vec::new();
        for base in &out {
            for perm in &perms {
                let mut table = base.clone();
                for (slot, &target) in perm.iter().enumerate() {
                    table.insert(class[slot], class[target]);
                }
                next.push(table);
            }
        }
        out = next;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..n {
            let mut perm = smaller.clone();
            perm.insert(pos, n - 1);
            out.push(perm);
        }
    }
    out
}

// Random data -------------------------------------------------------------

pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Rational => field.integer(rng.gen_range(-5..=5)),
        Field::Prime(p) => field.integer(rng.gen_range(0..p) as i64),
    }
}

pub fn random_unit_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let s = random_scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_radical_element(
    rng: &mut impl Rng,
    p: &Arc<FinitePoset>,
    field: Field,
) -> AlgebraElement {
    let mut terms: Vec<((usize, usize), Scalar)> = Vec::new();
    for pair in p.strict_pairs() {
        if rng.gen_bool(0.6) {
            terms.push((pair, random_scalar(rng, field)));
        }
    }
    AlgebraElement::from_coeffs(p, field, terms).unwrap()
}

pub fn random_inner_unit(
    rng: &mut impl Rng,
    p: &Arc<FinitePoset>,
    field: Field,
) -> workbench_core::InnerUnit {
    let delta = AlgebraElement::delta(p, field);
    let beta = delta.add(&random_radical_element(rng, p, field)).unwrap();
    workbench_core::InnerUnit::new(beta).unwrap()
}

/// Some compatible sigma for `theta`, if one exists: searches sign patterns
/// on the cover seeds. (Solvability of the product-law constraints reduces
/// to the sign component, so this search is complete.)
pub fn reference_sigma(theta: &BasisBijection, field: Field) -> Option<SigmaMap> {
    let covers = theta.poset().covers().to_vec();
    for mask in 0u64..(1 << covers.len()) {
        let seeds: BTreeMap<(usize, usize), Scalar> = covers
            .iter()
            .enumerate()
            .map(|(i, &pair)| {
                let v = if mask & (1 << i) != 0 {
                    -&field.one()
                } else {
                    field.one()
                };
                (pair, v)
            })
            .collect();
        if let Ok(sigma) = SigmaMap::complete(theta, field, &seeds) {
            return Some(sigma);
        }
    }
    None
}

/// A random compatible sigma for `theta`. Free cover seeds usually complete;
/// when routes through an interval constrain each other (cyclic Hasse
/// diagrams) the reference system is rescaled by a random coboundary
/// `g(y)/g(x)`, which preserves compatibility.
pub fn random_sigma(rng: &mut impl Rng, theta: &BasisBijection, field: Field) -> SigmaMap {
    let p = theta.poset();
    for _ in 0..4 {
        let mut seed: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for &pair in p.covers() {
            seed.insert(pair, random_unit_scalar(rng, field));
        }
        if let Ok(sigma) = SigmaMap::complete(theta, field, &seed) {
            return sigma;
        }
    }
    let base = reference_sigma(theta, field).expect("theta admits a compatible sigma");
    let g: Vec<Scalar> = (0..p.size())
        .map(|_| random_unit_scalar(rng, field))
        .collect();
    let values: BTreeMap<(usize, usize), Scalar> = p
        .strict_pairs()
        .into_iter()
        .map(|(x, y)| {
            let v = &(&base.value(x, y) * &g[y]) * &g[x].inverse().unwrap();
            ((x, y), v)
        })
        .collect();
    SigmaMap::new(p, field, values).unwrap()
}

pub fn random_c(rng: &mut impl Rng, field: Field, n: usize) -> CoefficientVector {
    loop {
        let values: Vec<Scalar> = (0..n).map(|_| random_scalar(rng, field)).collect();
        if let Ok(c) = CoefficientVector::new(field, values) {
            return c;
        }
    }
}

pub fn random_triple(
    rng: &mut impl Rng,
    p: &Arc<FinitePoset>,
    field: Field,
) -> ElementaryTriple {
    let thetas = workbench_core::enumerate_theta(p).unwrap();
    let theta = thetas[rng.gen_range(0..thetas.len())].clone();
    let sigma = random_sigma(rng, &theta, field);
    let c = random_c(rng, field, p.size());
    ElementaryTriple::new(theta, sigma, c).unwrap()
}

pub fn random_elementary_map(
    rng: &mut impl Rng,
    p: &Arc<FinitePoset>,
    field: Field,
) -> LinearMap {
    build_tau(&random_triple(rng, p, field))
}
