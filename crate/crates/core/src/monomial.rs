//! Monomials in one alphabet `{xᵢ}` or two alphabets `{xᵢ}, {yᵢ}`, stored in
//! their unique normal form: a base index plus composition(s) and, for two
//! alphabets, the offset Δ between the x-block and the y-block.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Variable index → positive exponent.
pub type ExponentMap = BTreeMap<i64, u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    X,
    XY,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::X => f.write_str("X"),
            Alphabet::XY => f.write_str("XY"),
        }
    }
}

/// A run of consecutive variables of one alphabet: `v_start^{σ₁} ⋯ v_{start+m-1}^{σₘ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Block {
    pub start: i64,
    pub shape: Composition,
}

impl Block {
    fn from_exponents(exps: &ExponentMap) -> Option<Block> {
        let (&lo, _) = exps.iter().find(|(_, &e)| e > 0)?;
        let (&hi, _) = exps.iter().rev().find(|(_, &e)| e > 0)?;
        let parts = (lo..=hi).map(|i| exps.get(&i).copied().unwrap_or(0)).collect();
        Some(Block {
            start: lo,
            shape: Composition::new(parts).expect("ends are positive"),
        })
    }

    fn from_shape(start: i64, shape: &Composition) -> Option<Block> {
        (!shape.is_empty()).then(|| Block {
            start,
            shape: shape.clone(),
        })
    }

    pub fn end(&self) -> i64 {
        self.start + self.shape.len() as i64 - 1
    }

    fn exponents(&self) -> ExponentMap {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (self.start + k as i64, e))
            .collect()
    }
}

/// `x_{base+1}^{σ₁} ⋯ x_{base+m}^{σₘ}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialX {
    base: i64,
    shape: Composition,
}

impl MonomialX {
    pub fn new(base: i64, shape: Composition) -> Self {
        let base = if shape.is_empty() { 0 } else { base };
        MonomialX { base, shape }
    }

    pub fn unit() -> Self {
        MonomialX::new(0, Composition::empty())
    }

    /// Normal form of the monomial with the given exponents; zero exponents
    /// are ignored.
    pub fn from_exponents(exps: &ExponentMap) -> Self {
        Self::from_block(Block::from_exponents(exps))
    }

    pub(crate) fn from_block(block: Option<Block>) -> Self {
        match block {
            Some(b) => MonomialX::new(b.start - 1, b.shape),
            None => MonomialX::unit(),
        }
    }

    pub(crate) fn block(&self) -> Option<Block> {
        Block::from_shape(self.base + 1, &self.shape)
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn degree(&self) -> u32 {
        self.shape.order()
    }

    pub fn is_unit(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn exponents(&self) -> ExponentMap {
        self.block().map(|b| b.exponents()).unwrap_or_default()
    }

    pub fn translate(&self, shift: i64) -> Self {
        MonomialX::new(self.base + shift, self.shape.clone())
    }
}

/// `x_{i+1}^{σ₁} ⋯ x_{i+m}^{σₘ} · y_{i+1+Δ}^{σ'₁} ⋯ y_{i+m'+Δ}^{σ'ₘ'}`.
///
/// When one alphabet is absent Δ is 0 and the base anchors the smallest index
/// of the alphabet that is present; the unit has base 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialXY {
    base: i64,
    shape_x: Composition,
    shape_y: Composition,
    delta: i64,
}

impl MonomialXY {
    pub fn new(base: i64, shape_x: Composition, shape_y: Composition, delta: i64) -> Self {
        let delta = if shape_x.is_empty() || shape_y.is_empty() {
            0
        } else {
            delta
        };
        let base = if shape_x.is_empty() && shape_y.is_empty() {
            0
        } else {
            base
        };
        MonomialXY {
            base,
            shape_x,
            shape_y,
            delta,
        }
    }

    pub fn unit() -> Self {
        MonomialXY::new(0, Composition::empty(), Composition::empty(), 0)
    }

    pub fn from_exponents(x: &ExponentMap, y: &ExponentMap) -> Self {
        Self::from_blocks(Block::from_exponents(x), Block::from_exponents(y))
    }

    pub(crate) fn from_blocks(x: Option<Block>, y: Option<Block>) -> Self {
        match (x, y) {
            (Some(bx), Some(by)) => {
                MonomialXY::new(bx.start - 1, bx.shape, by.shape, by.start - bx.start)
            }
            (Some(bx), None) => MonomialXY::new(bx.start - 1, bx.shape, Composition::empty(), 0),
            (None, Some(by)) => MonomialXY::new(by.start - 1, Composition::empty(), by.shape, 0),
            (None, None) => MonomialXY::unit(),
        }
    }

    pub(crate) fn x_block(&self) -> Option<Block> {
        Block::from_shape(self.base + 1, &self.shape_x)
    }

    pub(crate) fn y_block(&self) -> Option<Block> {
        Block::from_shape(self.base + 1 + self.delta, &self.shape_y)
    }

    pub fn base(&self) -> i64 {
        self.base
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

    pub fn is_unit(&self) -> bool {
        self.shape_x.is_empty() && self.shape_y.is_empty()
    }

    pub fn exponents(&self) -> (ExponentMap, ExponentMap) {
        (
            self.x_block().map(|b| b.exponents()).unwrap_or_default(),
            self.y_block().map(|b| b.exponents()).unwrap_or_default(),
        )
    }

    pub fn translate(&self, shift: i64) -> Self {
        if self.is_unit() {
            return self.clone();
        }
        MonomialXY::new(
            self.base + shift,
            self.shape_x.clone(),
            self.shape_y.clone(),
            self.delta,
        )
    }
}

/// A monomial over either alphabet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Monomial {
    X(MonomialX),
    XY(MonomialXY),
}

impl From<MonomialX> for Monomial {
    fn from(m: MonomialX) -> Self {
        Monomial::X(m)
    }
}

impl From<MonomialXY> for Monomial {
    fn from(m: MonomialXY) -> Self {
        Monomial::XY(m)
    }
}

impl Monomial {
    pub fn unit(alphabet: Alphabet) -> Self {
        match alphabet {
            Alphabet::X => MonomialX::unit().into(),
            Alphabet::XY => MonomialXY::unit().into(),
        }
    }

    pub fn from_exponents(alphabet: Alphabet, x: &ExponentMap, y: &ExponentMap) -> Result<Self> {
        match alphabet {
            Alphabet::X => {
                if y.values().any(|&e| e > 0) {
                    return Err(Error::parse(0, "y-variables are not allowed in a one-alphabet monomial"));
                }
                Ok(MonomialX::from_exponents(x).into())
            }
            Alphabet::XY => Ok(MonomialXY::from_exponents(x, y).into()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            Monomial::X(_) => Alphabet::X,
            Monomial::XY(_) => Alphabet::XY,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Monomial::X(m) => m.degree(),
            Monomial::XY(m) => m.degree(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Monomial::X(m) => m.is_unit(),
            Monomial::XY(m) => m.is_unit(),
        }
    }

    pub fn base(&self) -> i64 {
        match self {
            Monomial::X(m) => m.base(),
            Monomial::XY(m) => m.base(),
        }
    }

    /// Exponent maps of the x- and y-variables (the latter empty for one alphabet).
    pub fn exponents(&self) -> (ExponentMap, ExponentMap) {
        match self {
            Monomial::X(m) => (m.exponents(), ExponentMap::new()),
            Monomial::XY(m) => m.exponents(),
        }
    }

    pub(crate) fn blocks(&self) -> (Option<Block>, Option<Block>) {
        match self {
            Monomial::X(m) => (m.block(), None),
            Monomial::XY(m) => (m.x_block(), m.y_block()),
        }
    }

    /// Smallest and largest variable index occurring, over both alphabets.
    pub fn index_range(&self) -> Option<(i64, i64)> {
        let (bx, by) = self.blocks();
        [bx, by]
            .into_iter()
            .flatten()
            .map(|b| (b.start, b.end()))
            .reduce(|(lo, hi), (l, h)| (lo.min(l), hi.max(h)))
    }

    /// Number of index positions covered, `max - min + 1` (0 for the unit).
    pub fn span(&self) -> i64 {
        self.index_range().map_or(0, |(lo, hi)| hi - lo + 1)
    }

    /// True when every variable index lies in `[-radius, radius]`.
    pub fn within(&self, radius: i64) -> bool {
        self.index_range()
            .is_none_or(|(lo, hi)| lo >= -radius && hi <= radius)
    }

    pub fn translate(&self, shift: i64) -> Self {
        match self {
            Monomial::X(m) => m.translate(shift).into(),
            Monomial::XY(m) => m.translate(shift).into(),
        }
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::SeriesMismatch(format!(
                "cannot multiply {} and {} monomials",
                self.alphabet(),
                other.alphabet()
            )));
        }
        let (mut x, mut y) = self.exponents();
        let (ox, oy) = other.exponents();
        for (i, e) in ox {
            *x.entry(i).or_insert(0) += e;
        }
        for (i, e) in oy {
            *y.entry(i).or_insert(0) += e;
        }
        Monomial::from_exponents(self.alphabet(), &x, &y)
    }

    /// Parses the `x[i]^e y[j]` text form. `1` or an empty string is the unit.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let (x, y) = parse_exponents(text)?;
        Monomial::from_exponents(alphabet, &x, &y).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(text.find('y').unwrap_or(0), msg),
            other => other,
        })
    }
}

/// Parses the factor grammar `x[i]^e` / `y[i]^e` separated by whitespace or
/// `*`; repeated variables multiply.
pub fn parse_exponents(text: &str) -> Result<(ExponentMap, ExponentMap)> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut x = ExponentMap::new();
    let mut y = ExponentMap::new();

    let skip_sep = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b'*') {
            *pos += 1;
        }
    };

    skip_sep(&mut pos);
    if text[pos..].trim() == "1" {
        return Ok((x, y));
    }
    while pos < bytes.len() {
        let target = match bytes[pos] {
            b'x' => &mut x,
            b'y' => &mut y,
            _ => return Err(Error::parse(pos, format!("expected `x[` or `y[`, found `{}`", &text[pos..pos + 1]))),
        };
        pos += 1;
        if bytes.get(pos) != Some(&b'[') {
            return Err(Error::parse(pos, "expected `[`"));
        }
        pos += 1;
        let (index, next) = parse_int(text, pos)?;
        pos = next;
        if bytes.get(pos) != Some(&b']') {
            return Err(Error::parse(pos, "expected `]`"));
        }
        pos += 1;
        let mut exp = 1i64;
        if bytes.get(pos) == Some(&b'^') {
            let (e, next) = parse_int(text, pos + 1)?;
            if e < 0 {
                return Err(Error::parse(pos + 1, "exponent must be non-negative"));
            }
            exp = e;
            pos = next;
        }
        let exp = u32::try_from(exp).map_err(|_| Error::parse(pos, "exponent too large"))?;
        if exp > 0 {
            *target.entry(index).or_insert(0) += exp;
        }
        let before = pos;
        skip_sep(&mut pos);
        if pos == before && pos < bytes.len() {
            return Err(Error::parse(pos, "expected a separator between factors"));
        }
    }
    Ok((x, y))
}

pub(crate) fn parse_int(text: &str, start: usize) -> Result<(i64, usize)> {
    let bytes = text.as_bytes();
    let mut end = start;
    if matches!(bytes.get(end), Some(b'-') | Some(b'+')) {
        end += 1;
    }
    let digits = end;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == digits {
        return Err(Error::parse(start, "expected an integer"));
    }
    text[start..end]
        .parse::<i64>()
        .map(|v| (v, end))
        .map_err(|_| Error::parse(start, "integer out of range"))
}

fn write_factors(f: &mut fmt::Formatter<'_>, var: char, exps: &ExponentMap, first: &mut bool) -> fmt::Result {
    for (i, e) in exps {
        if !*first {
            f.write_str(" ")?;
        }
        *first = false;
        if *e == 1 {
            write!(f, "{var}[{i}]")?;
        } else {
            write!(f, "{var}[{i}]^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let (x, y) = self.exponents();
        let mut first = true;
        write_factors(f, 'x', &x, &mut first)?;
        write_factors(f, 'y', &y, &mut first)
    }
}

impl fmt::Display for MonomialX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Monomial::X(self.clone()).fmt(f)
    }
}

impl fmt::Display for MonomialXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Monomial::XY(self.clone()).fmt(f)
    }
}
