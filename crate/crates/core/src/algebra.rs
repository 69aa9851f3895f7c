//! The incidence algebra `I(X,K)` of a finite connected poset over an exact
//! field.
//!
//! Elements are sparse coefficient tables on the comparable pairs `(x, y)`,
//! `x <= y`, with the convolution product
//! `(fg)(x,y) = sum over x <= t <= y of f(x,t) g(t,y)`. The standard basis
//! vector supported on a single pair is `e(x,y)`; `e(x)` abbreviates the
//! diagonal idempotent `e(x,x)` and `delta` is the identity. The Jacobson
//! radical is the span of the strictly supported basis vectors, and its
//! powers, level spaces and centre are all read off interval lengths.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::poset::FinitePoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements live over different posets")]
    PosetMismatch,
    #[error("elements live over different fields")]
    FieldMismatch,
    #[error("pair ({x}, {y}) is not comparable")]
    NotComparable { x: String, y: String },
    #[error("element is not invertible (zero diagonal entry)")]
    NotInvertible,
    #[error("element does not lie in the radical")]
    NotInRadical,
}

/// A standard basis vector `e(x,y)` identified by its index pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVector {
    pub x: usize,
    pub y: usize,
}

impl BasisVector {
    pub fn new(x: usize, y: usize) -> Self {
        BasisVector { x, y }
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == self.y
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.x, self.y)
    }
}

/// An element of `I(X,K)`: a finitely supported map from comparable pairs to
/// nonzero scalars. Immutable; all operations return fresh values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    poset: Arc<FinitePoset>,
    field: Field,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl AlgebraElement {
    pub fn zero(poset: &Arc<FinitePoset>, field: Field) -> Self {
        AlgebraElement {
            poset: Arc::clone(poset),
            field,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `delta`.
    pub fn delta(poset: &Arc<FinitePoset>, field: Field) -> Self {
        let coeffs = (0..poset.size())
            .map(|x| ((x, x), field.one()))
            .collect();
        AlgebraElement {
            poset: Arc::clone(poset),
            field,
            coeffs,
        }
    }

    pub fn basis(poset: &Arc<FinitePoset>, field: Field, x: usize, y: usize) -> Result<Self, AlgebraError> {
        Self::from_coeffs(poset, field, [((x, y), field.one())])
    }

    /// Builds an element from raw terms; zero coefficients are dropped and
    /// repeated pairs accumulate.
    pub fn from_coeffs(
        poset: &Arc<FinitePoset>,
        field: Field,
        terms: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let mut coeffs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((x, y), c) in terms {
            if !poset.leq(x, y) {
                return Err(AlgebraError::NotComparable {
                    x: poset.label(x).to_string(),
                    y: poset.label(y).to_string(),
                });
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch);
            }
            let entry = coeffs
                .entry((x, y))
                .and_modify(|e| *e = &*e + &c)
                .or_insert(c);
            if entry.is_zero() {
                coeffs.remove(&(x, y));
            }
        }
        Ok(AlgebraElement {
            poset: Arc::clone(poset),
            field,
            coeffs,
        })
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x: usize, y: usize) -> Scalar {
        self.coeffs
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if !Arc::ptr_eq(&self.poset, &other.poset) && self.poset != other.poset {
            return Err(AlgebraError::PosetMismatch);
        }
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&pair, c) in &other.coeffs {
            let entry = coeffs
                .entry(pair)
                .and_modify(|e| *e = &*e + c)
                .or_insert_with(|| c.clone());
            if entry.is_zero() {
                coeffs.remove(&pair);
            }
        }
        Ok(AlgebraElement {
            poset: Arc::clone(&self.poset),
            field: self.field,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            poset: Arc::clone(&self.poset),
            field: self.field,
            coeffs: self.coeffs.iter().map(|(&p, c)| (p, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return AlgebraElement::zero(&self.poset, self.field);
        }
        AlgebraElement {
            poset: Arc::clone(&self.poset),
            field: self.field,
            coeffs: self.coeffs.iter().map(|(&p, c)| (p, k * c)).collect(),
        }
    }

    /// Convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let mut by_first: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(t, y), c) in &other.coeffs {
            by_first.entry(t).or_default().push((y, c));
        }
        let mut coeffs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(x, t), a) in &self.coeffs {
            if let Some(row) = by_first.get(&t) {
                for &(y, b) in row {
                    let prod = a * b;
                    let entry = coeffs
                        .entry((x, y))
                        .and_modify(|e| *e = &*e + &prod)
                        .or_insert(prod);
                    if entry.is_zero() {
                        coeffs.remove(&(x, y));
                    }
                }
            }
        }
        Ok(AlgebraElement {
            poset: Arc::clone(&self.poset),
            field: self.field,
            coeffs,
        })
    }

    /// Commutator `[f, g] = fg - gf`.
    pub fn bracket(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Splits into diagonal and radical parts, `f = f_D + f_J`.
    pub fn split_diagonal(&self) -> (Self, Self) {
        let mut diag = BTreeMap::new();
        let mut rad = BTreeMap::new();
        for (&(x, y), c) in &self.coeffs {
            if x == y {
                diag.insert((x, y), c.clone());
            } else {
                rad.insert((x, y), c.clone());
            }
        }
        (
            AlgebraElement {
                poset: Arc::clone(&self.poset),
                field: self.field,
                coeffs: diag,
            },
            AlgebraElement {
                poset: Arc::clone(&self.poset),
                field: self.field,
                coeffs: rad,
            },
        )
    }

    pub fn is_diagonal(&self) -> bool {
        self.coeffs.keys().all(|&(x, y)| x == y)
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.coeffs.keys().all(|&(x, y)| x != y)
    }

    /// Inverse of an element with nonzero diagonal, via the nilpotent
    /// geometric series of the radical part.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let n = self.poset.size();
        let mut diag_inv = BTreeMap::new();
        for x in 0..n {
            let d = self.coeff(x, x);
            match d.inverse() {
                Some(inv) => {
                    diag_inv.insert((x, x), inv);
                }
                None => return Err(AlgebraError::NotInvertible),
            }
        }
        let d_inv = AlgebraElement {
            poset: Arc::clone(&self.poset),
            field: self.field,
            coeffs: diag_inv,
        };
        let (_, j) = self.split_diagonal();
        // f = d (delta + d^{-1} j), so f^{-1} = sum_k (-d^{-1} j)^k d^{-1}.
        let step = d_inv.multiply(&j)?.neg();
        let delta = AlgebraElement::delta(&self.poset, self.field);
        let mut acc = delta.clone();
        let mut term = delta;
        for _ in 1..n {
            term = term.multiply(&step)?;
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term)?;
        }
        acc.multiply(&d_inv)
    }

    /// Coordinate row of this element in the given pair order.
    pub fn coordinates(&self, pairs: &[(usize, usize)]) -> Vec<Scalar> {
        pairs.iter().map(|&(x, y)| self.coeff(x, y)).collect()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(x, y), c) in &self.coeffs {
            let negative = !c.is_non_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if x == y {
                write!(f, "e({})", self.poset.label(x))?;
            } else {
                write!(f, "e({},{})", self.poset.label(x), self.poset.label(y))?;
            }
        }
        Ok(())
    }
}

/// Basis of the `m`-th radical power: the `e(x,y)` whose interval has length
/// at least `m`. `m = 0` gives the full standard basis.
pub fn radical_power_basis(poset: &FinitePoset, m: usize) -> Vec<BasisVector> {
    poset
        .all_pairs()
        .into_iter()
        .filter(|&(x, y)| poset.interval_length(x, y).unwrap() >= m)
        .map(|(x, y)| BasisVector::new(x, y))
        .collect()
}

/// Basis of the level space `L_i`: the `e(x,y)` with interval length exactly
/// `i`. `L_0` is the diagonal.
pub fn level_basis(poset: &FinitePoset, i: usize) -> Vec<BasisVector> {
    poset
        .all_pairs()
        .into_iter()
        .filter(|&(x, y)| poset.interval_length(x, y).unwrap() == i)
        .map(|(x, y)| BasisVector::new(x, y))
        .collect()
}

/// Basis of the centre of the radical: strict pairs from a minimal to a
/// maximal element.
pub fn center_of_radical(poset: &FinitePoset) -> Vec<BasisVector> {
    let minimal = poset.minimal_elements();
    let maximal = poset.maximal_elements();
    poset
        .strict_pairs()
        .into_iter()
        .filter(|&(x, y)| minimal.contains(&x) && maximal.contains(&y))
        .map(|(x, y)| BasisVector::new(x, y))
        .collect()
}

/// Basis of the two-sided ideal generated by radical elements: for every
/// supported pair `(x, y)` of a generator, all `e(u,v)` with
/// `u <= x <= y <= v` belong to the ideal, and they exhaust it.
pub fn ideal_generated(
    poset: &FinitePoset,
    elements: &[AlgebraElement],
) -> Result<Vec<BasisVector>, AlgebraError> {
    let mut out = std::collections::BTreeSet::new();
    for f in elements {
        if f.poset().as_ref() != poset {
            return Err(AlgebraError::PosetMismatch);
        }
        if !f.has_zero_diagonal() {
            return Err(AlgebraError::NotInRadical);
        }
        for (&(x, y), _) in f.support() {
            for u in 0..poset.size() {
                if !poset.leq(u, x) {
                    continue;
                }
                for v in 0..poset.size() {
                    if poset.leq(y, v) {
                        out.insert(BasisVector::new(u, v));
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
