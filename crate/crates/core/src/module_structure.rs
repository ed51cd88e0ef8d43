//! Decomposition of `P_k[X]` under F1 and of `P_k[X,Y]` under F6 into
//! translation-stable components.
//!
//! Each F1 component is spanned by the translates of one monomial and is a
//! copy of K^ℤ (a LINE). An F6 component is a LINE when h fixes its
//! monomials (σ = σ', Δ = 0); otherwise it pairs two translate families
//! swapped by h and is a copy of (K ⊕ K)^ℤ (a DOUBLE).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_traits::Zero;
use serde::Serialize;

use crate::basis::{enumerate_indices, index_of_monomial, BasisIndex};
use crate::error::{Error, Result};
use crate::group::FriezeGroupId;
use crate::monomial::{Monomial, MonomialX, MonomialXY};
use crate::series::{Rational, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ComponentType {
    #[serde(rename = "LINE")]
    Line,
    #[serde(rename = "DOUBLE")]
    Double,
}

impl ComponentType {
    pub fn rank(self) -> usize {
        match self {
            ComponentType::Line => 1,
            ComponentType::Double => 2,
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentType::Line => "LINE",
            ComponentType::Double => "DOUBLE",
        })
    }
}

fn check_group(group: FriezeGroupId, idx: &BasisIndex) -> Result<()> {
    if !matches!(group, FriezeGroupId::F1 | FriezeGroupId::F6) {
        return Err(Error::UnsupportedGroup(group));
    }
    if idx.group() != group {
        return Err(Error::GroupMismatch(group, idx.group()));
    }
    Ok(())
}

pub fn component_type(group: FriezeGroupId, idx: &BasisIndex) -> Result<ComponentType> {
    check_group(group, idx)?;
    let line = group == FriezeGroupId::F1 || (idx.shape_x() == idx.shape_y() && idx.delta() == 0);
    Ok(if line {
        ComponentType::Line
    } else {
        ComponentType::Double
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusBounds {
    pub max_parts: usize,
    pub max_abs_delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub group: FriezeGroupId,
    pub degree: u32,
    pub bounds: CensusBounds,
    #[serde(rename = "LINE")]
    pub line: usize,
    #[serde(rename = "DOUBLE")]
    pub double: usize,
}

impl Census {
    pub fn total(&self) -> usize {
        self.line + self.double
    }

    /// LINE components of F6 need σ = σ', so odd degrees have none.
    pub fn parity_consistent(&self) -> bool {
        !(self.group == FriezeGroupId::F6 && self.degree % 2 == 1 && self.line > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// Counts LINE and DOUBLE components among the canonical labels within bounds.
pub fn decomposition_census(
    group: FriezeGroupId,
    k: u32,
    max_parts: usize,
    max_abs_delta: i64,
) -> Result<Census> {
    if !matches!(group, FriezeGroupId::F1 | FriezeGroupId::F6) {
        return Err(Error::UnsupportedGroup(group));
    }
    let mut census = Census {
        group,
        degree: k,
        bounds: CensusBounds {
            max_parts,
            max_abs_delta,
        },
        line: 0,
        double: 0,
    };
    for idx in enumerate_indices(group, k, max_parts, max_abs_delta) {
        match component_type(group, &idx)? {
            ComponentType::Line => census.line += 1,
            ComponentType::Double => census.double += 1,
        }
    }
    Ok(census)
}

/// A window-indexed vector of a component: value at position `i` in slot
/// 0 (and slot 1 for DOUBLE components). Missing entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComponentSequence {
    entries: BTreeMap<(i64, usize), Rational>,
}

impl ComponentSequence {
    pub fn new() -> Self {
        Self::default()
    }

    /// 1 at `(position, slot)`, 0 elsewhere.
    pub fn unit_vector(position: i64, slot: usize) -> Self {
        let mut s = Self::new();
        s.set(position, slot, Rational::from_integer(1.into()));
        s
    }

    pub fn set(&mut self, position: i64, slot: usize, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&(position, slot));
        } else {
            self.entries.insert((position, slot), value);
        }
    }

    pub fn get(&self, position: i64, slot: usize) -> Rational {
        self.entries
            .get(&(position, slot))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, usize, &Rational)> {
        self.entries.iter().map(|(&(i, s), c)| (i, s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Moves every entry from position `i` to `i + by`.
    pub fn shift(&self, by: i64) -> Self {
        ComponentSequence {
            entries: self
                .entries
                .iter()
                .map(|(&(i, s), c)| ((i + by, s), c.clone()))
                .collect(),
        }
    }

    /// Same value at every position of `range`, slot by slot.
    pub fn is_constant_on(&self, range: RangeInclusive<i64>, slots: usize) -> bool {
        (0..slots).all(|slot| {
            let first = self.get(*range.start(), slot);
            range.clone().all(|i| self.get(i, slot) == first)
        })
    }

    /// Every nonzero entry sits at a position in `[-radius, radius]`.
    pub fn has_support_within(&self, radius: i64) -> bool {
        self.entries.keys().all(|&(i, _)| i.abs() <= radius)
    }
}

/// One component `M_σ` (F1) or `M_{σ,σ',Δ}` (F6) with its coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    index: BasisIndex,
    kind: ComponentType,
}

impl Component {
    pub fn new(group: FriezeGroupId, idx: &BasisIndex) -> Result<Self> {
        let kind = component_type(group, idx)?;
        Ok(Component {
            index: idx.clone(),
            kind,
        })
    }

    pub fn kind(&self) -> ComponentType {
        self.kind
    }

    pub fn index(&self) -> &BasisIndex {
        &self.index
    }

    /// The monomial at `position` of family `slot`: slot 0 is
    /// `x_{i+1}^{σ}⋯y_{i+1+Δ}^{σ'}⋯`, slot 1 is `x_{i+1}^{σ'}⋯y_{i+1-Δ}^{σ}⋯`.
    pub fn monomial(&self, position: i64, slot: usize) -> Result<Monomial> {
        let idx = &self.index;
        if slot >= self.kind.rank() {
            return Err(Error::InvalidLabel(format!("{} component has no slot {slot}", self.kind)));
        }
        Ok(match (idx.group(), slot) {
            (FriezeGroupId::F1, _) => MonomialX::new(position, idx.shape_x().clone()).into(),
            (_, 0) => {
                MonomialXY::new(position, idx.shape_x().clone(), idx.shape_y().clone(), idx.delta()).into()
            }
            _ => MonomialXY::new(position, idx.shape_y().clone(), idx.shape_x().clone(), -idx.delta()).into(),
        })
    }

    /// Positions whose slot monomials all fit in `[-window, window]`.
    pub fn positions(&self, window: i64) -> Vec<(i64, usize)> {
        let reach = window + 2 + self.index.shape_x().len() as i64 + self.index.shape_y().len() as i64
            + self.index.delta().abs();
        let mut out = Vec::new();
        for i in -reach..=reach {
            for slot in 0..self.kind.rank() {
                if self.monomial(i, slot).expect("slot in range").within(window) {
                    out.push((i, slot));
                }
            }
        }
        out
    }

    pub fn embed(&self, seq: &ComponentSequence, window: i64) -> Result<TruncatedSeries> {
        let group = self.index.group();
        let mut s = TruncatedSeries::zero(group.alphabet(), self.index.degree(), window)?;
        for (i, slot, c) in seq.entries() {
            s.add_term(self.monomial(i, slot)?, c.clone())?;
        }
        Ok(s)
    }

    /// Inverse of [`Component::embed`]; fails on monomials from other components.
    pub fn extract(&self, s: &TruncatedSeries) -> Result<ComponentSequence> {
        let group = self.index.group();
        let canonical = self.index.canonical();
        let mut seq = ComponentSequence::new();
        for (m, c) in s.terms() {
            if index_of_monomial(group, m)? != canonical {
                return Err(Error::SeriesMismatch(format!("{m} does not lie in {}", self.index)));
            }
            let position = m.base();
            let slot = (0..self.kind.rank())
                .find(|&slot| self.monomial(position, slot).ok().as_ref() == Some(m))
                .ok_or_else(|| Error::SeriesMismatch(format!("{m} is not a member of {}", self.index)))?;
            seq.set(position, slot, c.clone());
        }
        Ok(seq)
    }
}

/// Embeds a sequence into the component of `idx`.
pub fn embed_line(
    group: FriezeGroupId,
    idx: &BasisIndex,
    seq: &ComponentSequence,
    window: i64,
) -> Result<TruncatedSeries> {
    Component::new(group, idx)?.embed(seq, window)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;
    use FriezeGroupId::*;

    fn label(text: &str) -> BasisIndex {
        text.parse().unwrap()
    }

    #[test]
    fn component_type_examples() {
        assert_eq!(component_type(F1, &label("f1[(2,1)]")).unwrap(), ComponentType::Line);
        assert_eq!(component_type(F6, &label("f6[(1),(1);Δ=0]")).unwrap(), ComponentType::Line);
        assert_eq!(component_type(F6, &label("f6[(1),(1);Δ=1]")).unwrap(), ComponentType::Double);
        assert!(component_type(F3, &label("f3[(1)]")).is_err());
        assert!(component_type(F6, &label("f1[(1)]")).is_err());
    }

    #[test]
    fn census_examples() {
        let c = decomposition_census(F6, 1, 3, 3).unwrap();
        assert_eq!(c.line, 0);
        assert_eq!(c.double, 1); // x-only and y-only variables form one orbit
        let c = decomposition_census(F6, 3, 3, 3).unwrap();
        assert_eq!(c.line, 0);
        assert!(c.parity_consistent());
        assert_eq!(decomposition_census(F1, 3, 3, 0).unwrap().line, 6);
        assert!(decomposition_census(F2, 2, 2, 2).is_err());
    }

    #[test]
    fn census_json_shape() {
        let c = decomposition_census(F6, 2, 2, 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["group"], "F6");
        assert_eq!(v["degree"], 2);
        assert_eq!(v["bounds"]["max_parts"], 2);
        assert!(v["LINE"].as_u64().unwrap() > 0);
        assert!(v["DOUBLE"].as_u64().unwrap() > 0);
    }

    #[test]
    fn embed_examples() {
        let idx = label("f1[(1)]");
        let s = embed_line(F1, &idx, &ComponentSequence::unit_vector(0, 0), 2).unwrap();
        assert_eq!(s.to_string(), "x[1]");
        assert!(embed_line(F1, &idx, &ComponentSequence::new(), 2).unwrap().is_zero());
    }

    #[test]
    fn embed_extract_and_equivariance() {
        let t6 = GroupElement::parse_word(F6, "t").unwrap();
        let h6 = GroupElement::parse_word(F6, "h").unwrap();
        for text in ["f6[(1,0,1),(2);Δ=-1]", "f6[(1),(1);Δ=0]"] {
            let c = Component::new(F6, &label(text)).unwrap();
            let window = 4;
            let mut seq = ComponentSequence::new();
            for (n, (i, slot)) in c.positions(window).into_iter().enumerate() {
                seq.set(i, slot, Rational::from_integer((n as i64 + 1).into()));
            }
            let s = c.embed(&seq, window).unwrap();
            assert_eq!(c.extract(&s).unwrap(), seq);
            // shift-then-embed agrees with embed-then-translate where both fit
            let shifted = c.embed(&seq.shift(1).restricted(&c, window), window).unwrap();
            assert_eq!(shifted, s.act(&t6).unwrap());
            // h exchanges the two families
            let hs = s.act(&h6).unwrap();
            assert_eq!(c.extract(&hs).unwrap().entries().count(), seq.entries().count());
        }
    }

    impl ComponentSequence {
        fn restricted(&self, c: &Component, window: i64) -> Self {
            let allowed = c.positions(window);
            ComponentSequence {
                entries: self
                    .entries
                    .iter()
                    .filter(|(k, _)| allowed.contains(k))
                    .map(|(k, v)| (*k, v.clone()))
                    .collect(),
            }
        }
    }

    #[test]
    fn submodule_predicates() {
        let mut ones = ComponentSequence::new();
        for i in -3..=3 {
            ones.set(i, 0, Rational::from_integer(1.into()));
        }
        assert!(ones.is_constant_on(-3..=3, 1));
        assert!(ones.shift(1).is_constant_on(-2..=3, 1));
        assert!(!ones.shift(1).is_constant_on(-3..=3, 1));
        assert!(ones.has_support_within(3));
        assert!(!ones.shift(1).has_support_within(3));
    }
}
