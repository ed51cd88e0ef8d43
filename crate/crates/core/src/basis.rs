//! Labels of the orbit-sum invariants f⁽¹⁾ … f⁽⁷⁾.
//!
//! A label `(σ, σ', Δ)` (plus a parity class for F2 and F5) names the orbit
//! of its representative monomial `x_1^{σ₁}⋯ y_{1+Δ}^{σ'₁}⋯`; primed labels
//! use the representative shifted down by one, `x_0^{σ₁}⋯ y_Δ^{σ'₁}⋯`.
//! Different labels can name the same orbit. The canonical label is the least
//! element of that class, found by applying one element from each coset of
//! the translation subgroup to the representative.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::action::{act, orbit_in_window};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::group::FriezeGroupId;
use crate::monomial::{parse_int, Alphabet, Monomial, MonomialX, MonomialXY};
use crate::series::TruncatedSeries;

/// Distinguishes f⁽²⁾ from f⁽²⁾' (and f⁽⁵⁾ from f⁽⁵⁾'): the two classes of
/// orbits of the double-length translation, by parity of the base index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityClass {
    #[default]
    Unprimed,
    Primed,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    group: FriezeGroupId,
    parity: ParityClass,
    shape_x: Composition,
    shape_y: Composition,
    delta: i64,
}

impl BasisIndex {
    /// A label as written, not necessarily canonical. Δ is reset to 0 when
    /// either composition is empty.
    pub fn new(
        group: FriezeGroupId,
        shape_x: Composition,
        shape_y: Composition,
        delta: i64,
        parity: ParityClass,
    ) -> Result<Self> {
        if group.alphabet() == Alphabet::X && (!shape_y.is_empty() || delta != 0) {
            return Err(Error::InvalidLabel(format!("{group} labels take a single composition")));
        }
        if parity == ParityClass::Primed && !group.has_parity_classes() {
            return Err(Error::InvalidLabel(format!("{group} has no primed family")));
        }
        if shape_x.order() + shape_y.order() == 0 {
            return Err(Error::InvalidLabel("total order must be at least 1".into()));
        }
        let delta = if shape_x.is_empty() || shape_y.is_empty() { 0 } else { delta };
        Ok(BasisIndex {
            group,
            parity,
            shape_x,
            shape_y,
            delta,
        })
    }

    pub fn group(&self) -> FriezeGroupId {
        self.group
    }

    pub fn parity(&self) -> ParityClass {
        self.parity
    }

    pub fn shape_x(&self) -> &Composition {
        &self.shape_x
    }

    pub fn shape_y(&self) -> &Composition {
        &self.shape_y
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn degree(&self) -> u32 {
        self.shape_x.order() + self.shape_y.order()
    }

    /// `x_1^{σ₁}⋯` for unprimed labels, `x_0^{σ₁}⋯` for primed ones.
    pub fn representative(&self) -> Monomial {
        let base = match self.parity {
            ParityClass::Unprimed => 0,
            ParityClass::Primed => -1,
        };
        match self.group.alphabet() {
            Alphabet::X => MonomialX::new(base, self.shape_x.clone()).into(),
            Alphabet::XY => {
                MonomialXY::new(base, self.shape_x.clone(), self.shape_y.clone(), self.delta).into()
            }
        }
    }

    /// Every label naming the same orbit, sorted.
    pub fn equivalence_class(&self) -> Vec<BasisIndex> {
        let rep = self.representative();
        let class: BTreeSet<BasisIndex> = self
            .group
            .coset_representatives()
            .iter()
            .map(|g| {
                let image = act(g, &rep).expect("label group matches its alphabet");
                label_of(self.group, &image).expect("non-unit")
            })
            .collect();
        class.into_iter().collect()
    }

    pub fn canonical(&self) -> BasisIndex {
        self.equivalence_class().swap_remove(0)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }
}

/// Label of the translation orbit containing `m`: translate the base to 0,
/// or for F2/F5 to 0 or -1 according to its parity.
fn label_of(group: FriezeGroupId, m: &Monomial) -> Result<BasisIndex> {
    if m.is_unit() {
        return Err(Error::UnitMonomial);
    }
    let (target, parity) = if group.has_parity_classes() && m.base().rem_euclid(2) == 1 {
        (-1, ParityClass::Primed)
    } else {
        (0, ParityClass::Unprimed)
    };
    match m.translate(target - m.base()) {
        Monomial::X(mx) => BasisIndex::new(group, mx.shape().clone(), Composition::empty(), 0, parity),
        Monomial::XY(mxy) => BasisIndex::new(
            group,
            mxy.shape_x().clone(),
            mxy.shape_y().clone(),
            mxy.delta(),
            parity,
        ),
    }
}

/// Canonical representative of the class of the given label.
pub fn canonical_index(
    group: FriezeGroupId,
    shape_x: Composition,
    shape_y: Composition,
    delta: i64,
    parity: ParityClass,
) -> Result<BasisIndex> {
    Ok(BasisIndex::new(group, shape_x, shape_y, delta, parity)?.canonical())
}

/// The canonical label of the orbit containing `m`.
pub fn index_of_monomial(group: FriezeGroupId, m: &Monomial) -> Result<BasisIndex> {
    if group.alphabet() != m.alphabet() {
        return Err(Error::WrongAlphabet {
            group,
            alphabet: m.alphabet(),
        });
    }
    Ok(label_of(group, m)?.canonical())
}

/// Canonical labels of degree `k` whose class has a member with at most
/// `max_parts` parts in each composition and `|Δ| ≤ max_abs_delta`, sorted.
pub fn enumerate_indices(
    group: FriezeGroupId,
    k: u32,
    max_parts: usize,
    max_abs_delta: i64,
) -> Vec<BasisIndex> {
    let mut out = BTreeSet::new();
    if k == 0 {
        return Vec::new();
    }
    let parities: &[ParityClass] = if group.has_parity_classes() {
        &[ParityClass::Unprimed, ParityClass::Primed]
    } else {
        &[ParityClass::Unprimed]
    };
    let x_orders: Vec<u32> = match group.alphabet() {
        Alphabet::X => vec![k],
        Alphabet::XY => (0..=k).collect(),
    };
    for a in x_orders {
        for sx in Composition::all_of_order(a, max_parts) {
            for sy in Composition::all_of_order(k - a, max_parts) {
                let deltas = if sx.is_empty() || sy.is_empty() {
                    0..=0
                } else {
                    -max_abs_delta..=max_abs_delta
                };
                for delta in deltas {
                    for &parity in parities {
                        let raw = BasisIndex::new(group, sx.clone(), sy.clone(), delta, parity)
                            .expect("order k >= 1");
                        out.insert(raw.canonical());
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The orbit sum of `idx` restricted to `[-radius, radius]`: every distinct
/// orbit monomial fully inside the window, with coefficient 1.
pub fn expand_basis_function(idx: &BasisIndex, radius: i64) -> Result<TruncatedSeries> {
    let orbit = orbit_in_window(idx.group, &idx.representative(), radius)?;
    TruncatedSeries::indicator(idx.group.alphabet(), idx.degree(), radius, orbit)
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.parity == ParityClass::Primed { "'" } else { "" };
        write!(f, "f{}{prime}[{}", self.group.number(), self.shape_x)?;
        if self.group.alphabet() == Alphabet::XY {
            write!(f, ",{};Δ={}", self.shape_y, self.delta)?;
        }
        f.write_str("]")
    }
}

impl Serialize for BasisIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_composition_at(text: &str, pos: usize) -> Result<(Composition, usize)> {
    if text.as_bytes().get(pos) != Some(&b'(') {
        return Err(Error::parse(pos, "expected `(`"));
    }
    let close = text[pos..]
        .find(')')
        .map(|k| pos + k)
        .ok_or_else(|| Error::parse(pos, "unclosed `(`"))?;
    let comp = text[pos..=close].parse::<Composition>().map_err(|e| match e {
        Error::Parse { msg, .. } => Error::parse(pos, msg),
        other => other,
    })?;
    Ok((comp, close + 1))
}

/// Parses `f1[(1,0,2)]`, `f6[(1),(2);Δ=-3]` or `f2'[(1),(1);Δ=0]`. `D=` is
/// accepted in place of `Δ=`. The label is returned as written.
impl FromStr for BasisIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bytes = text.as_bytes();
        if bytes.first() != Some(&b'f') {
            return Err(Error::parse(0, "expected `f`"));
        }
        let group: FriezeGroupId = text
            .get(1..2)
            .ok_or_else(|| Error::parse(1, "expected a group number"))?
            .parse()
            .map_err(|_| Error::parse(1, "expected a group number 1..7"))?;
        let mut pos = 2;
        let mut parity = ParityClass::Unprimed;
        if bytes.get(pos) == Some(&b'\'') {
            parity = ParityClass::Primed;
            pos += 1;
        }
        if bytes.get(pos) != Some(&b'[') {
            return Err(Error::parse(pos, "expected `[`"));
        }
        let (shape_x, mut pos) = parse_composition_at(text, pos + 1)?;
        let mut shape_y = Composition::empty();
        let mut delta = 0;
        if bytes.get(pos) == Some(&b',') {
            let (sy, next) = parse_composition_at(text, pos + 1)?;
            shape_y = sy;
            pos = next;
            if bytes.get(pos) == Some(&b';') {
                pos += 1;
                let rest = &text[pos..];
                let tag = ["Δ=", "D=", "delta="]
                    .into_iter()
                    .find(|t| rest.starts_with(t))
                    .ok_or_else(|| Error::parse(pos, "expected `Δ=`"))?;
                let (d, next) = parse_int(text, pos + tag.len())?;
                delta = d;
                pos = next;
            }
        }
        if bytes.get(pos) != Some(&b']') || pos + 1 != bytes.len() {
            return Err(Error::parse(pos, "expected closing `]`"));
        }
        BasisIndex::new(group, shape_x, shape_y, delta, parity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FriezeGroupId::*;

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn mono(group: FriezeGroupId, text: &str) -> Monomial {
        Monomial::parse(group.alphabet(), text).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let e = Composition::empty();
        let idx = canonical_index(F3, comp(&[2, 1]), e.clone(), 0, ParityClass::Unprimed).unwrap();
        assert_eq!(idx.shape_x(), &comp(&[1, 2]));

        let idx = canonical_index(F6, comp(&[1]), comp(&[2]), -3, ParityClass::Unprimed).unwrap();
        assert_eq!((idx.shape_x(), idx.shape_y(), idx.delta()), (&comp(&[1]), &comp(&[2]), -3));
        let other = canonical_index(F6, comp(&[2]), comp(&[1]), 3, ParityClass::Unprimed).unwrap();
        assert_eq!(idx, other);

        let idx = canonical_index(F1, comp(&[1, 0, 1]), e, 0, ParityClass::Unprimed).unwrap();
        assert_eq!(idx.shape_x(), &comp(&[1, 0, 1]));
    }

    #[test]
    fn index_of_monomial_examples() {
        let idx = index_of_monomial(F1, &mono(F1, "x[3] x[5]^2")).unwrap();
        assert_eq!(idx.to_string(), "f1[(1,0,2)]");

        // x_1 and x_2 lie in different F2-orbits: their translation-orbit
        // labels differ only in parity. Canonicalization also folds in g,
        // which trades the parity for the alphabet.
        let (x1, x2) = (mono(F2, "x[1]"), mono(F2, "x[2]"));
        let (raw1, raw2) = (label_of(F2, &x1).unwrap(), label_of(F2, &x2).unwrap());
        assert_eq!(raw1.shape_x(), raw2.shape_x());
        assert_eq!((raw1.parity(), raw2.parity()), (ParityClass::Unprimed, ParityClass::Primed));
        let (odd, even) = (index_of_monomial(F2, &x1).unwrap(), index_of_monomial(F2, &x2).unwrap());
        assert_ne!(even, odd);
        assert_eq!(odd.to_string(), "f2[(1),();Δ=0]");
        assert_eq!(even.to_string(), "f2[(),(1);Δ=0]");

        let idx = index_of_monomial(F6, &mono(F6, "x[0] y[0]")).unwrap();
        assert_eq!(idx.to_string(), "f6[(1),(1);Δ=0]");

        assert_eq!(index_of_monomial(F1, &Monomial::unit(Alphabet::X)), Err(Error::UnitMonomial));
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate_indices(F1, 1, 4, 0).iter().map(|i| i.to_string()).collect();
        assert_eq!(got, ["f1[(1)]"]);
        let got: Vec<String> = enumerate_indices(F1, 3, 2, 0).iter().map(|i| i.to_string()).collect();
        assert_eq!(got, ["f1[(1,2)]", "f1[(2,1)]", "f1[(3)]"]);
        let got: Vec<String> = enumerate_indices(F3, 3, 2, 0).iter().map(|i| i.to_string()).collect();
        assert_eq!(got, ["f3[(1,2)]", "f3[(3)]"]);
    }

    #[test]
    fn enumeration_is_canonical_and_unique() {
        for group in FriezeGroupId::ALL {
            let all = enumerate_indices(group, 3, 3, 2);
            assert!(all.windows(2).all(|p| p[0] < p[1]));
            assert!(all.iter().all(|i| i.is_canonical() && i.degree() == 3));
        }
    }

    #[test]
    fn expansion_examples() {
        let idx: BasisIndex = "f1[(1)]".parse().unwrap();
        let s = expand_basis_function(&idx, 2).unwrap();
        assert_eq!(s.to_string(), "x[-2] + x[-1] + x[0] + x[1] + x[2]");

        let idx: BasisIndex = "f6[(1),(1);Δ=0]".parse().unwrap();
        let s = expand_basis_function(&idx, 1).unwrap();
        assert_eq!(s.to_string(), "x[-1] y[-1] + x[0] y[0] + x[1] y[1]");

        let a = expand_basis_function(&"f2[(1),(1);Δ=0]".parse().unwrap(), 2).unwrap();
        let b = expand_basis_function(&"f2'[(1),(1);Δ=0]".parse().unwrap(), 2).unwrap();
        assert_eq!(a, b);

        // non-palindromic F3 shape: both families, coefficient 1 each
        let s = expand_basis_function(&"f3[(1,2)]".parse().unwrap(), 2).unwrap();
        assert_eq!(s.len(), 8);
    }

    #[test]
    fn label_text_round_trip() {
        for text in ["f1[(1,0,2)]", "f3[(1,2)]", "f6[(1),(2);Δ=-3]", "f2'[(1),(1);Δ=0]", "f5[(),(2);Δ=0]"] {
            assert_eq!(text.parse::<BasisIndex>().unwrap().to_string(), text);
        }
        assert_eq!("f6[(1),(2);D=-3]".parse::<BasisIndex>().unwrap().to_string(), "f6[(1),(2);Δ=-3]");
        assert!("f1'[(1)]".parse::<BasisIndex>().is_err());
        assert!("f8[(1)]".parse::<BasisIndex>().is_err());
        assert!("f1[(1),(1);Δ=0]".parse::<BasisIndex>().is_err());
        assert!("f1[(0,1)]".parse::<BasisIndex>().is_err());
        assert!("f1[()]".parse::<BasisIndex>().is_err());
        assert!("f1[(1)".parse::<BasisIndex>().is_err());
    }
}
