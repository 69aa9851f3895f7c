//! Line-oriented text formats: poset files, linear combinations, map files
//! and triple files.
//!
//! All formats are UTF-8 with `#` comments. A poset file fixes the field and
//! the poset:
//!
//! ```text
//! field Q            # or F<p> with p prime
//! elements 1 2 3 4
//! cover 1 2
//! ```
//!
//! Combinations follow `term := [coeff '*'] basis` with
//! `basis := e(x) | e(x,y)` and `coeff := integer | integer '/' integer`
//! (plain integers over prime fields, reduced mod p); `0` denotes zero.
//! Map files assign a combination to every basis vector
//! (`e(1,2) -> e(2,3)`), optionally headed by `map for <poset-file-name>`.
//! Triple files carry `theta`/`sigma`/`c` lines and may include a `beta`
//! line, which decompositions emit and builders ignore.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num::BigInt;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::elementary::{BasisBijection, BuilderError, CoefficientVector, ElementaryTriple, SigmaMap};
use crate::field::{Field, FieldError, Scalar};
use crate::maps::{LinearMap, MapError};
use crate::poset::{FinitePoset, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Map(#[from] MapError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed poset file: the field header plus the poset itself.
#[derive(Debug, Clone)]
pub struct PosetFile {
    pub field: Field,
    pub poset: Arc<FinitePoset>,
}

/// Significant lines with their 1-based numbers, comments stripped.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let trimmed = stripped.trim();
            (!trimmed.is_empty()).then_some((i + 1, trimmed))
        })
        .collect()
}

pub fn parse_poset_file(text: &str) -> Result<PosetFile, ParseError> {
    let lines = significant_lines(text);
    let mut iter = lines.iter();

    let &(ln, field_line) = iter
        .next()
        .ok_or_else(|| syntax(1, "missing `field` line"))?;
    let field = match field_line.strip_prefix("field") {
        Some(rest) => parse_field_spec(ln, rest.trim())?,
        None => return Err(syntax(ln, "expected `field Q` or `field F<p>`")),
    };

    let &(ln, elements_line) = iter
        .next()
        .ok_or_else(|| syntax(ln, "missing `elements` line"))?;
    let labels: Vec<&str> = match elements_line.strip_prefix("elements") {
        Some(rest) => rest.split_whitespace().collect(),
        None => return Err(syntax(ln, "expected `elements <label> ...`")),
    };

    let mut covers = Vec::new();
    for &(ln, line) in iter {
        let rest = line
            .strip_prefix("cover")
            .ok_or_else(|| syntax(ln, "expected `cover <a> <b>`"))?;
        let parts: Vec<&str> = rest.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(syntax(ln, "expected `cover <a> <b>`"));
        }
        covers.push((parts[0], parts[1]));
    }

    let poset = FinitePoset::from_cover_relations(&labels, &covers)?;
    Ok(PosetFile {
        field,
        poset: Arc::new(poset),
    })
}

fn parse_field_spec(line: usize, spec: &str) -> Result<Field, ParseError> {
    if spec == "Q" {
        return Ok(Field::Rational);
    }
    if let Some(digits) = spec.strip_prefix('F') {
        let p: u64 = digits
            .parse()
            .map_err(|_| syntax(line, format!("bad field spec `{spec}`")))?;
        return Ok(Field::prime(p)?);
    }
    Err(syntax(line, format!("bad field spec `{spec}`")))
}

/// Parses a basis token `e(x)` or `e(x,y)` into an index pair.
pub fn parse_basis_token(
    poset: &FinitePoset,
    line: usize,
    token: &str,
) -> Result<(usize, usize), ParseError> {
    let inner = token
        .strip_prefix("e(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("bad basis token `{token}`")))?;
    let labels: Vec<&str> = inner.split(',').map(str::trim).collect();
    let (x, y) = match labels.as_slice() {
        [x] => (*x, *x),
        [x, y] => (*x, *y),
        _ => return Err(syntax(line, format!("bad basis token `{token}`"))),
    };
    Ok((poset.index_of(x)?, poset.index_of(y)?))
}

fn parse_coefficient(field: Field, line: usize, text: &str) -> Result<Scalar, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(syntax(line, "empty coefficient"));
    }
    match text.split_once('/') {
        Some((num, den)) => {
            if field != Field::Rational {
                return Err(syntax(
                    line,
                    "fractional coefficients are only valid over Q",
                ));
            }
            let n = BigInt::from_str(num.trim())
                .map_err(|_| syntax(line, format!("bad coefficient `{text}`")))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|_| syntax(line, format!("bad coefficient `{text}`")))?;
            if d == BigInt::from(0) {
                return Err(syntax(line, "zero denominator"));
            }
            Ok(Scalar::Rational(num::BigRational::new(n, d)))
        }
        None => {
            let n = BigInt::from_str(text)
                .map_err(|_| syntax(line, format!("bad coefficient `{text}`")))?;
            Ok(field.big_integer(&n))
        }
    }
}

/// Parses a linear combination in the canonical syntax.
pub fn parse_combination(
    poset: &Arc<FinitePoset>,
    field: Field,
    line: usize,
    text: &str,
) -> Result<AlgebraElement, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(syntax(line, "empty combination"));
    }
    if compact == "0" {
        return Ok(AlgebraElement::zero(poset, field));
    }
    let mut terms = Vec::new();
    let chars: Vec<char> = compact.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let mut negative = false;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                negative = !negative;
            }
            pos += 1;
        }
        let start = pos;
        while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
            pos += 1;
        }
        let term: String = chars[start..pos].iter().collect();
        if term.is_empty() {
            return Err(syntax(line, "dangling sign in combination"));
        }
        let (coeff, basis_text) = match term.split_once('*') {
            Some((c, b)) => (parse_coefficient(field, line, c)?, b.to_string()),
            None => (field.one(), term),
        };
        let pair = parse_basis_token(poset, line, &basis_text)?;
        let value = if negative { -&coeff } else { coeff };
        terms.push((pair, value));
    }
    Ok(AlgebraElement::from_coeffs(poset, field, terms)?)
}

/// Renders a basis vector in the `e(x)`/`e(x,y)` token syntax.
pub fn basis_token(poset: &FinitePoset, x: usize, y: usize) -> String {
    if x == y {
        format!("e({})", poset.label(x))
    } else {
        format!("e({},{})", poset.label(x), poset.label(y))
    }
}

/// Parses a map file: one `basis -> combination` line per basis vector, each
/// exactly once, optionally headed by `map for <name>`.
pub fn parse_map_file(
    poset: &Arc<FinitePoset>,
    field: Field,
    text: &str,
) -> Result<LinearMap, ParseError> {
    let mut images: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
    let mut lines = significant_lines(text);
    if let Some(&(_, first)) = lines.first() {
        if first.starts_with("map for ") {
            lines.remove(0);
        }
    }
    for (ln, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| syntax(ln, "expected `<basis> -> <combination>`"))?;
        let pair = parse_basis_token(poset, ln, lhs.trim())?;
        if images.contains_key(&pair) {
            return Err(syntax(
                ln,
                format!("duplicate image for {}", basis_token(poset, pair.0, pair.1)),
            ));
        }
        let img = parse_combination(poset, field, ln, rhs)?;
        images.insert(pair, img);
    }
    Ok(LinearMap::from_images(poset, field, images)?)
}

/// Renders a map file in canonical order; round-trips through
/// [`parse_map_file`].
pub fn format_map_file(map: &LinearMap, poset_name: Option<&str>) -> String {
    let poset = map.poset();
    let mut out = String::new();
    if let Some(name) = poset_name {
        out.push_str(&format!("map for {name}\n"));
    }
    for (&(x, y), img) in map.images() {
        out.push_str(&format!("{} -> {img}\n", basis_token(poset, x, y)));
    }
    out
}

/// Raw content of a triple file before mathematical validation.
#[derive(Debug, Clone, Default)]
pub struct TripleFileData {
    pub theta: BTreeMap<(usize, usize), (usize, usize)>,
    pub sigma: BTreeMap<(usize, usize), Scalar>,
    pub c: Vec<Scalar>,
}

pub fn parse_triple_file(
    poset: &Arc<FinitePoset>,
    field: Field,
    text: &str,
) -> Result<TripleFileData, ParseError> {
    let mut data = TripleFileData::default();
    let mut saw_c = false;
    for (ln, line) in significant_lines(text) {
        if let Some(rest) = line.strip_prefix("theta ") {
            let (lhs, rhs) = rest
                .split_once("->")
                .ok_or_else(|| syntax(ln, "expected `theta e(x,y) -> e(u,v)`"))?;
            let src = parse_basis_token(poset, ln, lhs.trim())?;
            let dst = parse_basis_token(poset, ln, rhs.trim())?;
            if data.theta.insert(src, dst).is_some() {
                return Err(syntax(
                    ln,
                    format!("duplicate theta line for {}", basis_token(poset, src.0, src.1)),
                ));
            }
        } else if let Some(rest) = line.strip_prefix("sigma ") {
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| syntax(ln, "expected `sigma x y = <coeff>`"))?;
            let labels: Vec<&str> = lhs.split_whitespace().collect();
            if labels.len() != 2 {
                return Err(syntax(ln, "expected `sigma x y = <coeff>`"));
            }
            let pair = (poset.index_of(labels[0])?, poset.index_of(labels[1])?);
            let value = parse_coefficient(field, ln, rhs)?;
            if data.sigma.insert(pair, value).is_some() {
                return Err(syntax(
                    ln,
                    format!("duplicate sigma line for ({}, {})", labels[0], labels[1]),
                ));
            }
        } else if let Some(rest) = line.strip_prefix("c ") {
            let rest = rest
                .trim_start()
                .strip_prefix('=')
                .ok_or_else(|| syntax(ln, "expected `c = <coeff> ...`"))?;
            if saw_c {
                return Err(syntax(ln, "duplicate c line"));
            }
            saw_c = true;
            data.c = rest
                .split_whitespace()
                .map(|tok| parse_coefficient(field, ln, tok))
                .collect::<Result<_, _>>()?;
        } else if line.starts_with("beta ") || line.starts_with("beta=") {
            // Emitted by decompositions; carries no triple data.
        } else {
            return Err(syntax(ln, format!("unrecognised line `{line}`")));
        }
    }
    if !saw_c {
        return Err(syntax(0, "missing c line"));
    }
    Ok(data)
}

/// Validates parsed triple data into an [`ElementaryTriple`]. With
/// `complete_sigma` the sigma lines are cover-pair seeds extended by the
/// product law; otherwise they must cover every strict pair.
pub fn assemble_triple(
    poset: &Arc<FinitePoset>,
    field: Field,
    data: &TripleFileData,
    complete_sigma: bool,
) -> Result<ElementaryTriple, BuilderError> {
    let theta = BasisBijection::new(poset, data.theta.clone())?;
    let sigma = if complete_sigma {
        SigmaMap::complete(&theta, field, &data.sigma)?
    } else {
        SigmaMap::new(poset, field, data.sigma.clone())?
    };
    let c = CoefficientVector::new(field, data.c.clone())?;
    ElementaryTriple::new(theta, sigma, c)
}

/// Renders a triple in the file syntax accepted back by the builder.
pub fn format_triple(triple: &ElementaryTriple) -> String {
    let poset = triple.theta().poset();
    let mut out = String::new();
    for (&(x, y), &(u, v)) in triple.theta().pairs() {
        out.push_str(&format!(
            "theta {} -> {}\n",
            basis_token(poset, x, y),
            basis_token(poset, u, v)
        ));
    }
    for (&(x, y), value) in triple.sigma().entries() {
        out.push_str(&format!(
            "sigma {} {} = {value}\n",
            poset.label(x),
            poset.label(y)
        ));
    }
    let c_text: Vec<String> = triple.c().values().iter().map(Scalar::to_string).collect();
    out.push_str(&format!("c = {}\n", c_text.join(" ")));
    out
}
