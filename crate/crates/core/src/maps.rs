//! Linear self-maps of `I(X,K)` given by images of the standard basis.
//!
//! A [`LinearMap`] assigns an algebra element to every basis vector `e(x,y)`
//! and acts by linear extension. On top of that sit the verification
//! predicates (Lie automorphism, algebra automorphism, anti-automorphism),
//! conjugation by inner units with unit diagonal part, the levelwise
//! leading-term projection [`LinearMap::tilde`], the decomposition of a Lie
//! automorphism as inner followed by elementary, and the decision procedure
//! for properness.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::elementary::{BasisBijection, SigmaMap};
use crate::field::{Field, Scalar};
use crate::linalg;
use crate::poset::FinitePoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map and argument live over different posets")]
    PosetMismatch,
    #[error("map and argument live over different fields")]
    FieldMismatch,
    #[error("no image assigned for basis vector ({0}, {1})")]
    MissingImage(String, String),
    #[error("image assigned for ({0}, {1}) which is not a basis vector")]
    UnexpectedImage(String, String),
    #[error("map is not bijective")]
    Singular,
    #[error("map is not a Lie automorphism")]
    NotLieAutomorphism,
    #[error("map is not an elementary Lie automorphism")]
    NotElementary,
    #[error("diagonal part of the unit is not the identity")]
    NotUnitDiagonal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which shape a proper decomposition took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperKind {
    /// `m = psi + nu` with `psi` an algebra automorphism.
    Automorphism,
    /// `m = -psi + nu` with `psi` an anti-automorphism.
    NegativeOfAntiAutomorphism,
}

/// Witness for a positive properness verdict: the central map `nu` sends
/// `e(z)` to `alphas[z] * delta` and vanishes on the radical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperWitness {
    pub alphas: Vec<Scalar>,
    pub kind: ProperKind,
}

/// An invertible-or-not linear self-map of `I(X,K)`, stored as the images of
/// all standard basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    poset: Arc<FinitePoset>,
    field: Field,
    images: BTreeMap<(usize, usize), AlgebraElement>,
}

impl LinearMap {
    /// Builds a map from basis images; every comparable pair must appear
    /// exactly once and each image must live over the same poset and field.
    pub fn from_images(
        poset: &Arc<FinitePoset>,
        field: Field,
        images: impl IntoIterator<Item = ((usize, usize), AlgebraElement)>,
    ) -> Result<Self, MapError> {
        let mut table = BTreeMap::new();
        for ((x, y), img) in images {
            if !poset.leq(x, y) {
                return Err(MapError::UnexpectedImage(
                    poset.label(x).to_string(),
                    poset.label(y).to_string(),
                ));
            }
            if img.poset().as_ref() != poset.as_ref() {
                return Err(MapError::PosetMismatch);
            }
            if img.field() != field {
                return Err(MapError::FieldMismatch);
            }
            table.insert((x, y), img);
        }
        for (x, y) in poset.all_pairs() {
            if !table.contains_key(&(x, y)) {
                return Err(MapError::MissingImage(
                    poset.label(x).to_string(),
                    poset.label(y).to_string(),
                ));
            }
        }
        Ok(LinearMap {
            poset: Arc::clone(poset),
            field,
            images: table,
        })
    }

    pub fn identity(poset: &Arc<FinitePoset>, field: Field) -> Self {
        let images = poset
            .all_pairs()
            .into_iter()
            .map(|(x, y)| {
                (
                    (x, y),
                    AlgebraElement::basis(poset, field, x, y).unwrap(),
                )
            })
            .collect();
        LinearMap {
            poset: Arc::clone(poset),
            field,
            images,
        }
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn image_of(&self, x: usize, y: usize) -> &AlgebraElement {
        &self.images[&(x, y)]
    }

    pub fn images(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement)> {
        self.images.iter()
    }

    /// Linear extension of the basis images.
    pub fn apply(&self, f: &AlgebraElement) -> Result<AlgebraElement, MapError> {
        if f.poset().as_ref() != self.poset.as_ref() {
            return Err(MapError::PosetMismatch);
        }
        if f.field() != self.field {
            return Err(MapError::FieldMismatch);
        }
        let mut acc = AlgebraElement::zero(&self.poset, self.field);
        for (&(x, y), c) in f.support() {
            acc = acc.add(&self.images[&(x, y)].scale(c))?;
        }
        Ok(acc)
    }

    /// `self` after `other`: `(self.compose(other))(f) = self(other(f))`.
    pub fn compose(&self, other: &Self) -> Result<Self, MapError> {
        if self.poset.as_ref() != other.poset.as_ref() {
            return Err(MapError::PosetMismatch);
        }
        if self.field != other.field {
            return Err(MapError::FieldMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|(&p, img)| Ok((p, self.apply(img)?)))
            .collect::<Result<BTreeMap<_, _>, MapError>>()?;
        Ok(LinearMap {
            poset: Arc::clone(&self.poset),
            field: self.field,
            images,
        })
    }

    /// Matrix in the standard basis; column `j` holds the coordinates of the
    /// image of the `j`-th pair in canonical order.
    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        let pairs = self.poset.all_pairs();
        let dim = pairs.len();
        let mut m = vec![vec![self.field.zero(); dim]; dim];
        for (j, &pj) in pairs.iter().enumerate() {
            let img = &self.images[&pj];
            for (i, &(x, y)) in pairs.iter().enumerate() {
                m[i][j] = img.coeff(x, y);
            }
        }
        m
    }

    pub fn is_bijective(&self) -> bool {
        let dim = self.poset.all_pairs().len();
        linalg::rank(self.matrix()) == dim
    }

    /// Group inverse in `GL(I(X,K))`.
    pub fn invert(&self) -> Result<Self, MapError> {
        let pairs = self.poset.all_pairs();
        let inv = linalg::invert(&self.field, &self.matrix()).ok_or(MapError::Singular)?;
        let mut images = BTreeMap::new();
        for (j, &pj) in pairs.iter().enumerate() {
            let terms = pairs
                .iter()
                .enumerate()
                .map(|(i, &pi)| (pi, inv[i][j].clone()));
            images.insert(pj, AlgebraElement::from_coeffs(&self.poset, self.field, terms)?);
        }
        Ok(LinearMap {
            poset: Arc::clone(&self.poset),
            field: self.field,
            images,
        })
    }

    /// Bijective and bracket-preserving on all basis pairs (bilinearity makes
    /// the basis check complete).
    pub fn is_lie_automorphism(&self) -> bool {
        if !self.is_bijective() {
            return false;
        }
        let pairs = self.poset.all_pairs();
        for &(a, b) in &pairs {
            let ea = AlgebraElement::basis(&self.poset, self.field, a, b).unwrap();
            for &(c, d) in &pairs {
                let ec = AlgebraElement::basis(&self.poset, self.field, c, d).unwrap();
                let lhs = self.apply(&ea.bracket(&ec).unwrap()).unwrap();
                let rhs = self.images[&(a, b)]
                    .bracket(&self.images[&(c, d)])
                    .unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn is_multiplicative(&self, reversed: bool) -> bool {
        if !self.is_bijective() {
            return false;
        }
        let delta = AlgebraElement::delta(&self.poset, self.field);
        if self.apply(&delta).unwrap() != delta {
            return false;
        }
        let pairs = self.poset.all_pairs();
        for &(a, b) in &pairs {
            let ea = AlgebraElement::basis(&self.poset, self.field, a, b).unwrap();
            for &(c, d) in &pairs {
                let ec = AlgebraElement::basis(&self.poset, self.field, c, d).unwrap();
                let lhs = self.apply(&ea.multiply(&ec).unwrap()).unwrap();
                let (first, second) = if reversed {
                    ((c, d), (a, b))
                } else {
                    ((a, b), (c, d))
                };
                let rhs = self.images[&first].multiply(&self.images[&second]).unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Bijective, unital and multiplicative on basis pairs.
    pub fn is_algebra_automorphism(&self) -> bool {
        self.is_multiplicative(false)
    }

    /// Bijective, unital and anti-multiplicative on basis pairs.
    pub fn is_anti_automorphism(&self) -> bool {
        self.is_multiplicative(true)
    }

    /// The levelwise leading-term projection: the image of a level-`i` basis
    /// vector is cut down to its level-`i` component. Defined for Lie
    /// automorphisms, where each radical power is preserved.
    pub fn tilde(&self) -> Result<Self, MapError> {
        if !self.is_lie_automorphism() {
            return Err(MapError::NotLieAutomorphism);
        }
        let mut images = BTreeMap::new();
        for (&(x, y), img) in &self.images {
            let level = self.poset.interval_length(x, y).unwrap();
            let terms = img
                .support()
                .filter(|(&(u, v), _)| self.poset.interval_length(u, v).unwrap() == level)
                .map(|(&p, c)| (p, c.clone()));
            images.insert(
                (x, y),
                AlgebraElement::from_coeffs(&self.poset, self.field, terms)?,
            );
        }
        Ok(LinearMap {
            poset: Arc::clone(&self.poset),
            field: self.field,
            images,
        })
    }

    /// A Lie automorphism preserving every level space.
    pub fn is_elementary(&self) -> bool {
        let level_preserving = self.images.iter().all(|(&(x, y), img)| {
            let level = self.poset.interval_length(x, y).unwrap();
            img.support()
                .all(|(&(u, v), _)| self.poset.interval_length(u, v).unwrap() == level)
        });
        level_preserving && self.is_lie_automorphism()
    }

    /// Reads off the basis bijection and scale system of an elementary map:
    /// the image of each strict basis vector is a single scaled basis vector.
    pub fn extract_theta_sigma(&self) -> Result<(BasisBijection, SigmaMap), MapError> {
        if !self.is_elementary() {
            return Err(MapError::NotElementary);
        }
        let mut mapping = BTreeMap::new();
        let mut values = BTreeMap::new();
        for (x, y) in self.poset.strict_pairs() {
            let img = &self.images[&(x, y)];
            let mut terms = img.support();
            let (first, coeff) = match (terms.next(), terms.next()) {
                (Some((&p, c)), None) => (p, c.clone()),
                _ => return Err(MapError::NotElementary),
            };
            mapping.insert((x, y), first);
            values.insert((x, y), coeff);
        }
        let theta =
            BasisBijection::new(&self.poset, mapping).map_err(|_| MapError::NotElementary)?;
        let sigma =
            SigmaMap::new(&self.poset, self.field, values).map_err(|_| MapError::NotElementary)?;
        Ok((theta, sigma))
    }

    /// Splits a Lie automorphism as conjugation by a unit with identity
    /// diagonal followed by its elementary part: `m = inner . tilde(m)`.
    pub fn decompose_inner_elementary(&self) -> Result<(InnerUnit, LinearMap), MapError> {
        let tau = self.tilde()?;
        let kernel_part = self.compose(&tau.invert()?)?;
        let mut beta = AlgebraElement::zero(&self.poset, self.field);
        for x in 0..self.poset.size() {
            let ex = AlgebraElement::basis(&self.poset, self.field, x, x).unwrap();
            beta = beta.add(&kernel_part.images[&(x, x)].multiply(&ex)?)?;
        }
        Ok((InnerUnit::new(beta)?, tau))
    }

    /// Decides whether the map is a proper Lie automorphism: the sum of an
    /// algebra automorphism (or the negative of an anti-automorphism) and a
    /// central-valued map vanishing on the radical basis.
    ///
    /// Connectedness pins the centre to the scalar line, so the central map
    /// is one scalar per diagonal idempotent. The adjusted diagonal of each
    /// `e(z)`-image must be an idempotent diagonal (entries 0 or 1), which
    /// leaves at most two scalar candidates per element; survivors are
    /// checked by full (anti-)multiplicativity.
    pub fn is_proper(&self) -> Result<Option<ProperWitness>, MapError> {
        if !self.is_lie_automorphism() {
            return Err(MapError::NotLieAutomorphism);
        }
        let n = self.poset.size();
        let delta = AlgebraElement::delta(&self.poset, self.field);
        let image_of_delta = self.apply(&delta)?;
        let k = image_of_delta.coeff(0, 0);
        if image_of_delta != delta.scale(&k) {
            return Ok(None);
        }
        for kind in [ProperKind::Automorphism, ProperKind::NegativeOfAntiAutomorphism] {
            let anti = kind == ProperKind::NegativeOfAntiAutomorphism;
            let per_element: Vec<Vec<Scalar>> =
                (0..n).map(|z| self.alpha_candidates(z, anti)).collect();
            if per_element.iter().any(Vec::is_empty) {
                continue;
            }
            let required_sum = if anti {
                &k + &self.field.one()
            } else {
                &k - &self.field.one()
            };
            let mut choice = vec![0usize; n];
            loop {
                let alphas: Vec<Scalar> = (0..n)
                    .map(|z| per_element[z][choice[z]].clone())
                    .collect();
                let sum = alphas
                    .iter()
                    .fold(self.field.zero(), |acc, a| &acc + a);
                if sum == required_sum && self.check_proper_candidate(&alphas, anti)? {
                    return Ok(Some(ProperWitness { alphas, kind }));
                }
                // Advance the mixed-radix counter over candidate choices.
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < per_element[pos].len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
        Ok(None)
    }

    /// Scalars `a` for which every entry of the adjusted diagonal of the
    /// `e(z)`-image lies in `{0, 1}`.
    fn alpha_candidates(&self, z: usize, anti: bool) -> Vec<Scalar> {
        let img = &self.images[&(z, z)];
        let one = self.field.one();
        let d0 = img.coeff(0, 0);
        let mut cands = if anti {
            vec![d0.clone(), &d0 + &one]
        } else {
            vec![&d0 - &one, d0.clone()]
        };
        cands.dedup();
        for w in 0..self.poset.size() {
            let dw = img.coeff(w, w);
            cands.retain(|a| {
                let entry = if anti { a - &dw } else { &dw - a };
                entry.is_zero() || entry.is_one()
            });
        }
        cands
    }

    fn check_proper_candidate(&self, alphas: &[Scalar], anti: bool) -> Result<bool, MapError> {
        let delta = AlgebraElement::delta(&self.poset, self.field);
        let mut images = BTreeMap::new();
        for (&(x, y), img) in &self.images {
            let adjusted = if x == y {
                let shifted = img.sub(&delta.scale(&alphas[x]))?;
                if anti {
                    shifted.neg()
                } else {
                    shifted
                }
            } else if anti {
                img.neg()
            } else {
                img.clone()
            };
            images.insert((x, y), adjusted);
        }
        let candidate = LinearMap {
            poset: Arc::clone(&self.poset),
            field: self.field,
            images,
        };
        Ok(if anti {
            candidate.is_anti_automorphism()
        } else {
            candidate.is_algebra_automorphism()
        })
    }
}

/// A unit `beta` whose diagonal part is the identity; conjugation by such
/// units forms the kernel of the leading-term projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerUnit {
    beta: AlgebraElement,
}

impl InnerUnit {
    pub fn new(beta: AlgebraElement) -> Result<Self, MapError> {
        let (diag, _) = beta.split_diagonal();
        if diag != AlgebraElement::delta(beta.poset(), beta.field()) {
            return Err(MapError::NotUnitDiagonal);
        }
        Ok(InnerUnit { beta })
    }

    pub fn beta(&self) -> &AlgebraElement {
        &self.beta
    }

    /// The conjugation `f -> beta f beta^{-1}`.
    pub fn conjugation(&self) -> LinearMap {
        let poset = self.beta.poset();
        let field = self.beta.field();
        let inv = self.beta.invert().expect("unit diagonal part is invertible");
        let images = poset
            .all_pairs()
            .into_iter()
            .map(|(x, y)| {
                let e = AlgebraElement::basis(poset, field, x, y).unwrap();
                let img = self.beta.multiply(&e).unwrap().multiply(&inv).unwrap();
                ((x, y), img)
            })
            .collect();
        LinearMap {
            poset: Arc::clone(poset),
            field,
            images,
        }
    }
}
