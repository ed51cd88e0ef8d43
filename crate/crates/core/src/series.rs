//! Homogeneous formal series truncated to the index window `[-N, N]`, with
//! exact rational coefficients.
//!
//! A [`TruncatedSeries`] is the image of an element of the full ring under
//! the projection that sends every variable outside the window to zero.
//! Identities that hold in the full ring hold here on the interior window
//! `[-N+B, N-B]`, where the margin `B` absorbs the boundary loss.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::action::act;
use crate::basis::{expand_basis_function, index_of_monomial, BasisIndex};
use crate::error::{Error, Result};
use crate::group::{FriezeGroupId, GroupElement};
use crate::monomial::{Alphabet, ExponentMap, Monomial};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    alphabet: Alphabet,
    degree: u32,
    window: i64,
    terms: BTreeMap<Monomial, Rational>,
}

impl TruncatedSeries {
    pub fn zero(alphabet: Alphabet, degree: u32, window: i64) -> Result<Self> {
        if window < 0 {
            return Err(Error::InvalidWindow(window));
        }
        Ok(TruncatedSeries {
            alphabet,
            degree,
            window,
            terms: BTreeMap::new(),
        })
    }

    /// The degree-0 series `1`.
    pub fn one(alphabet: Alphabet, window: i64) -> Result<Self> {
        let mut s = Self::zero(alphabet, 0, window)?;
        s.terms.insert(Monomial::unit(alphabet), Rational::one());
        Ok(s)
    }

    pub fn from_terms<I>(alphabet: Alphabet, degree: u32, window: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Self::zero(alphabet, degree, window)?;
        for (m, c) in terms {
            s.add_term(m, c)?;
        }
        Ok(s)
    }

    /// Sum of the given monomials, each with coefficient 1.
    pub fn indicator<I>(alphabet: Alphabet, degree: u32, window: i64, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        Self::from_terms(alphabet, degree, window, monomials.into_iter().map(|m| (m, Rational::one())))
    }

    /// Adds `c · m`, checking alphabet, degree and support.
    pub fn add_term(&mut self, m: Monomial, c: Rational) -> Result<()> {
        if m.alphabet() != self.alphabet {
            return Err(Error::SeriesMismatch(format!(
                "{} monomial {m} in a {} series",
                m.alphabet(),
                self.alphabet
            )));
        }
        if m.degree() != self.degree {
            return Err(Error::SeriesMismatch(format!(
                "monomial {m} has degree {}, series has degree {}",
                m.degree(),
                self.degree
            )));
        }
        if !m.within(self.window) {
            return Err(Error::OutsideWindow {
                monomial: m.to_string(),
                window: self.window,
            });
        }
        self.accumulate(m, c);
        Ok(())
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Drops every monomial involving an index outside `[-n, n]`.
    pub fn project(&self, n: i64) -> Result<Self> {
        if n < 0 || n > self.window {
            return Err(Error::InvalidWindow(n));
        }
        Ok(TruncatedSeries {
            alphabet: self.alphabet,
            degree: self.degree,
            window: n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.within(n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Keeps the window but drops monomials not supported in `[-n, n]`.
    pub fn restrict(&self, n: i64) -> Self {
        TruncatedSeries {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.within(n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            ..self.clone()
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet || self.degree != other.degree || self.window != other.window {
            return Err(Error::SeriesMismatch(format!(
                "({}, degree {}, window {}) vs ({}, degree {}, window {})",
                self.alphabet, self.degree, self.window, other.alphabet, other.degree, other.window
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect()
        };
        TruncatedSeries {
            terms,
            ..self.clone()
        }
    }

    /// Product of two series on the same window; degrees add.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet || self.window != other.window {
            return Err(Error::SeriesMismatch(format!(
                "cannot multiply ({}, window {}) by ({}, window {})",
                self.alphabet, self.window, other.alphabet, other.window
            )));
        }
        let mut out = Self::zero(self.alphabet, self.degree + other.degree, self.window)?;
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.accumulate(a.multiply(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Applies `g` to every monomial; images leaving the window are dropped.
    pub fn act(&self, g: &GroupElement) -> Result<Self> {
        if g.group().alphabet() != self.alphabet {
            return Err(Error::WrongAlphabet {
                group: g.group(),
                alphabet: self.alphabet,
            });
        }
        let mut out = Self::zero(self.alphabet, self.degree, self.window)?;
        for (m, c) in &self.terms {
            let image = act(g, m)?;
            if image.within(self.window) {
                out.accumulate(image, c.clone());
            }
        }
        Ok(out)
    }
}

pub fn act_series(g: &GroupElement, s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.act(g)
}

/// How far the inverse of a generator can move a window point outside a
/// symmetric window: `k ↦ ±k + c` overshoots by `|c|`.
pub fn generator_shift_bound(group: FriezeGroupId) -> i64 {
    group
        .generators()
        .iter()
        .map(|&letter| {
            let g = GroupElement::generator(group, letter).expect("presentation generator");
            g.inverse().index_map().offset.abs()
        })
        .max()
        .unwrap_or(0)
}

/// First failure of the invariance test, if any.
fn invariance_defect(group: FriezeGroupId, s: &TruncatedSeries, margin: i64) -> Result<Option<String>> {
    let required = generator_shift_bound(group);
    if margin < required {
        return Err(Error::MarginTooSmall { margin, required });
    }
    if group.alphabet() != s.alphabet {
        return Err(Error::WrongAlphabet {
            group,
            alphabet: s.alphabet,
        });
    }
    let interior = s.window - margin;
    if interior < 0 {
        return Ok(None);
    }
    for &letter in group.generators() {
        let g = GroupElement::generator(group, letter)?;
        let g_inv = g.inverse();
        // interior monomials where either side can be nonzero
        let mut candidates: BTreeSet<Monomial> = s.support().filter(|m| m.within(interior)).cloned().collect();
        for m in s.support() {
            let image = act(&g, m)?;
            if image.within(interior) {
                candidates.insert(image);
            }
        }
        for m in candidates {
            let pre = act(&g_inv, &m)?;
            let (lhs, rhs) = (s.coeff(&pre), s.coeff(&m));
            if lhs != rhs {
                return Ok(Some(format!(
                    "coefficient of {m} is {rhs} but its preimage {pre} under {letter} has {lhs}"
                )));
            }
        }
    }
    Ok(None)
}

/// True iff for every generator g and every monomial m supported in the
/// interior window `[-N+margin, N-margin]`, `coeff(g⁻¹·m) = coeff(m)`.
pub fn is_invariant(group: FriezeGroupId, s: &TruncatedSeries, margin: i64) -> Result<bool> {
    Ok(invariance_defect(group, s, margin)?.is_none())
}

/// Coefficients of an invariant series on the orbit-sum basis, read off the
/// interior window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub group: FriezeGroupId,
    pub window: i64,
    pub interior: i64,
    pub coefficients: BTreeMap<BasisIndex, Rational>,
}

impl BasisExpansion {
    /// `Σ cᵢ · fᵢ` truncated to the full window.
    pub fn reconstruct(&self, alphabet: Alphabet, degree: u32) -> Result<TruncatedSeries> {
        let mut out = TruncatedSeries::zero(alphabet, degree, self.window)?;
        for (idx, c) in &self.coefficients {
            out = out.add(&expand_basis_function(idx, self.window)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Expands an invariant series on the orbit-sum basis.
///
/// Each orbit meeting the interior window contributes the common coefficient
/// of its interior monomials; orbits with coefficient zero are omitted. The
/// reconstruction is checked against the input on the interior.
pub fn expand_in_basis(group: FriezeGroupId, s: &TruncatedSeries, margin: i64) -> Result<BasisExpansion> {
    if let Some(reason) = invariance_defect(group, s, margin)? {
        return Err(Error::NotInvariant { group, reason });
    }
    let interior = s.window - margin;
    let mut coefficients: BTreeMap<BasisIndex, Rational> = BTreeMap::new();
    for (m, c) in s.terms.iter().filter(|(m, _)| interior >= 0 && m.within(interior)) {
        let idx = index_of_monomial(group, m)?;
        if let Some(prev) = coefficients.get(&idx) {
            if prev != c {
                return Err(Error::NotInvariant {
                    group,
                    reason: format!("orbit {idx} carries both {prev} and {c} on the interior"),
                });
            }
        } else {
            coefficients.insert(idx, c.clone());
        }
    }
    let expansion = BasisExpansion {
        group,
        window: s.window,
        interior,
        coefficients,
    };
    if interior >= 0 {
        let rebuilt = expansion.reconstruct(s.alphabet, s.degree)?;
        if rebuilt.restrict(interior) != s.restrict(interior) {
            return Err(Error::NotInvariant {
                group,
                reason: "basis reconstruction differs on the interior".into(),
            });
        }
    }
    Ok(expansion)
}

fn product_series<I>(r: u32, window: i64, tuples: I) -> Result<TruncatedSeries>
where
    I: Iterator<Item = Vec<i64>>,
{
    if r == 0 {
        return TruncatedSeries::one(Alphabet::X, window);
    }
    let monomials = tuples.map(|idx| {
        let mut exps = ExponentMap::new();
        for i in idx {
            *exps.entry(i).or_insert(0) += 1;
        }
        Monomial::from_exponents(Alphabet::X, &exps, &ExponentMap::new()).expect("x only")
    });
    TruncatedSeries::indicator(Alphabet::X, r, window, monomials)
}

/// `e_r`: the sum of all products of `r` distinct variables in the window.
pub fn elementary_sym(r: u32, window: i64) -> Result<TruncatedSeries> {
    if window < 0 {
        return Err(Error::InvalidWindow(window));
    }
    product_series(r, window, (-window..=window).combinations(r as usize))
}

/// `h_r`: the sum of all monomials of degree `r` in the window.
pub fn complete_sym(r: u32, window: i64) -> Result<TruncatedSeries> {
    if window < 0 {
        return Err(Error::InvalidWindow(window));
    }
    product_series(r, window, (-window..=window).combinations_with_replacement(r as usize))
}

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    alphabet: Alphabet,
    degree: u32,
    window: i64,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    monomial: String,
    coeff: String,
}

pub fn format_rational(c: &Rational) -> String {
    c.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("`{t}` is not an exact rational"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl TruncatedSeries {
    /// `{ "alphabet", "degree", "window", "terms": [{"monomial", "coeff"}] }`
    /// with terms in monomial order and coefficients as `p/q` strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("plain data")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("plain data")
    }

    fn to_doc(&self) -> SeriesDoc {
        SeriesDoc {
            alphabet: self.alphabet,
            degree: self.degree,
            window: self.window,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermDoc {
                    monomial: m.to_string(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| {
            let offset = text
                .lines()
                .take(e.line().saturating_sub(1))
                .map(|l| l.len() + 1)
                .sum::<usize>()
                + e.column().saturating_sub(1);
            Error::parse(offset, e.to_string())
        })?;
        let mut s = TruncatedSeries::zero(doc.alphabet, doc.degree, doc.window)?;
        for term in doc.terms {
            let m = Monomial::parse(doc.alphabet, &term.monomial)?;
            s.add_term(m, parse_rational(&term.coeff)?)?;
        }
        Ok(s)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{m}")?;
            } else if m.is_unit() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a} {m}")?;
            }
        }
        Ok(())
    }
}
