//! The seven frieze groups and their elements in normal form.
//!
//! | group | presentation                                   | normal form      |
//! |-------|------------------------------------------------|------------------|
//! | F1    | ⟨t⟩                                            | tᶻ               |
//! | F2    | ⟨g⟩                                            | gᶻ               |
//! | F3    | ⟨t, v : v², (vt)²⟩                             | vᵃ tᶻ            |
//! | F4    | ⟨t, r : r², (rt)²⟩                             | rᵃ tᶻ            |
//! | F5    | ⟨g, v : v², (vg)²⟩                             | vᵃ gᶻ            |
//! | F6    | ⟨t, h : h², th = ht⟩                           | hᵃ tᶻ            |
//! | F7    | ⟨t, v, h : v², (vt)², h², th = ht, vh = hv⟩    | vᵃ hᵇ tᶻ         |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{parse_int, Alphabet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FriezeGroupId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
}

impl FriezeGroupId {
    pub const ALL: [FriezeGroupId; 7] = [
        FriezeGroupId::F1,
        FriezeGroupId::F2,
        FriezeGroupId::F3,
        FriezeGroupId::F4,
        FriezeGroupId::F5,
        FriezeGroupId::F6,
        FriezeGroupId::F7,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// F1 and F3 act on one alphabet, the others on two.
    pub fn alphabet(self) -> Alphabet {
        match self {
            FriezeGroupId::F1 | FriezeGroupId::F3 => Alphabet::X,
            _ => Alphabet::XY,
        }
    }

    /// F2 and F5 only contain the double-length translation `t' = g²`.
    pub fn translation_step(self) -> i64 {
        match self {
            FriezeGroupId::F2 | FriezeGroupId::F5 => 2,
            _ => 1,
        }
    }

    pub fn has_parity_classes(self) -> bool {
        self.translation_step() == 2
    }

    fn has_flip(self) -> bool {
        matches!(
            self,
            FriezeGroupId::F3 | FriezeGroupId::F4 | FriezeGroupId::F5 | FriezeGroupId::F7
        )
    }

    fn has_h(self) -> bool {
        matches!(self, FriezeGroupId::F6 | FriezeGroupId::F7)
    }

    fn uses_g(self) -> bool {
        matches!(self, FriezeGroupId::F2 | FriezeGroupId::F5)
    }

    /// Generators as they appear in the presentation, e.g. `['t', 'v']`.
    pub fn generators(self) -> &'static [char] {
        match self {
            FriezeGroupId::F1 => &['t'],
            FriezeGroupId::F2 => &['g'],
            FriezeGroupId::F3 => &['t', 'v'],
            FriezeGroupId::F4 => &['t', 'r'],
            FriezeGroupId::F5 => &['g', 'v'],
            FriezeGroupId::F6 => &['t', 'h'],
            FriezeGroupId::F7 => &['t', 'v', 'h'],
        }
    }

    /// Defining relators of the presentation, as words.
    pub fn relators(self) -> &'static [&'static str] {
        match self {
            FriezeGroupId::F1 | FriezeGroupId::F2 => &[],
            FriezeGroupId::F3 => &["v^2", "v*t*v*t"],
            FriezeGroupId::F4 => &["r^2", "r*t*r*t"],
            FriezeGroupId::F5 => &["v^2", "v*g*v*g"],
            FriezeGroupId::F6 => &["h^2", "t*h*t^-1*h^-1"],
            FriezeGroupId::F7 => &[
                "v^2",
                "v*t*v*t",
                "h^2",
                "t*h*t^-1*h^-1",
                "v*h*v^-1*h^-1",
            ],
        }
    }

    /// One element from each coset of the translation subgroup.
    pub fn coset_representatives(self) -> Vec<GroupElement> {
        let flips: &[bool] = if self.has_flip() { &[false, true] } else { &[false] };
        let hs: &[bool] = if self.has_h() { &[false, true] } else { &[false] };
        let powers: &[i64] = if self.uses_g() { &[0, 1] } else { &[0] };
        let mut out = Vec::new();
        for &flip in flips {
            for &h in hs {
                for &power in powers {
                    out.push(GroupElement {
                        group: self,
                        flip,
                        h,
                        power,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for FriezeGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

impl FromStr for FriezeGroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
        match digits.parse::<u8>() {
            Ok(n @ 1..=7) => Ok(FriezeGroupId::ALL[n as usize - 1]),
            _ => Err(Error::parse(0, format!("unknown frieze group `{t}` (expected F1..F7)"))),
        }
    }
}

/// Affine action of a group element on variable indices: `k ↦ sign·k + offset`,
/// exchanging the alphabets when `swap` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexMap {
    pub sign: i64,
    pub offset: i64,
    pub swap: bool,
}

impl IndexMap {
    pub const IDENTITY: IndexMap = IndexMap {
        sign: 1,
        offset: 0,
        swap: false,
    };

    pub fn apply(&self, k: i64) -> i64 {
        self.sign * k + self.offset
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &IndexMap) -> IndexMap {
        IndexMap {
            sign: self.sign * other.sign,
            offset: self.sign * other.offset + self.offset,
            swap: self.swap ^ other.swap,
        }
    }
}

/// A frieze group element in normal form.
///
/// `flip` is the reflection-type involution (v in F3, F5, F7; r in F4), `h`
/// the horizontal reflection (F6, F7), and `power` the exponent of t, or of g
/// in F2 and F5. In F5 the rotation r' = vg and the translation t' = g² are
/// derived elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    group: FriezeGroupId,
    flip: bool,
    h: bool,
    power: i64,
}

impl GroupElement {
    pub fn new(group: FriezeGroupId, flip: bool, h: bool, power: i64) -> Result<Self> {
        if flip && !group.has_flip() {
            let generator = if group == FriezeGroupId::F4 { 'r' } else { 'v' };
            return Err(Error::UnknownGenerator { group, generator });
        }
        if h && !group.has_h() {
            return Err(Error::UnknownGenerator {
                group,
                generator: 'h',
            });
        }
        Ok(GroupElement {
            group,
            flip,
            h,
            power,
        })
    }

    pub fn identity(group: FriezeGroupId) -> Self {
        GroupElement {
            group,
            flip: false,
            h: false,
            power: 0,
        }
    }

    /// The primitive translation raised to `n`: tⁿ, or t'ⁿ = g²ⁿ in F2/F5.
    pub fn translation(group: FriezeGroupId, n: i64) -> Self {
        GroupElement {
            group,
            flip: false,
            h: false,
            power: n * if group.uses_g() { 2 } else { 1 },
        }
    }

    /// A single letter of the word alphabet `t g v h r`.
    ///
    /// `r` is the rotation: a generator of F4, `hv` in F7 and `r' = vg` in F5.
    pub fn generator(group: FriezeGroupId, letter: char) -> Result<Self> {
        let missing = || Error::UnknownGenerator {
            group,
            generator: letter,
        };
        let (flip, h, power) = match letter {
            't' if !group.uses_g() => (false, false, 1),
            'g' if group.uses_g() => (false, false, 1),
            'v' if group.has_flip() && group != FriezeGroupId::F4 => (true, false, 0),
            'h' if group.has_h() => (false, true, 0),
            'r' => match group {
                FriezeGroupId::F4 => (true, false, 0),
                FriezeGroupId::F5 => (true, false, 1),
                FriezeGroupId::F7 => (true, true, 0),
                _ => return Err(missing()),
            },
            _ => return Err(missing()),
        };
        GroupElement::new(group, flip, h, power)
    }

    pub fn group(&self) -> FriezeGroupId {
        self.group
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn h(&self) -> bool {
        self.h
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && !self.h && self.power == 0
    }

    /// True for pure translations (including the identity).
    pub fn is_translation(&self) -> bool {
        !self.flip && !self.h && (!self.group.uses_g() || self.power % 2 == 0)
    }

    /// Product `self · other` in normal form; acting by the product equals
    /// acting by `other` first, then `self`.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        // t^z v = v t^-z (and g^z v = v g^-z); h is central.
        let carried = if other.flip { -self.power } else { self.power };
        Ok(GroupElement {
            group: self.group,
            flip: self.flip ^ other.flip,
            h: self.h ^ other.h,
            power: carried + other.power,
        })
    }

    pub fn inverse(&self) -> GroupElement {
        // flip-type elements are involutions up to h, which commutes with everything.
        let power = if self.flip { self.power } else { -self.power };
        GroupElement { power, ..*self }
    }

    pub fn pow(&self, n: i64) -> GroupElement {
        let mut base = if n < 0 { self.inverse() } else { *self };
        let mut n = n.unsigned_abs();
        let mut acc = GroupElement::identity(self.group);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.multiply(&base).expect("same group");
            }
            base = base.multiply(&base).expect("same group");
            n >>= 1;
        }
        acc
    }

    /// The index map through which this element acts on variables.
    pub fn index_map(&self) -> IndexMap {
        let step = IndexMap {
            sign: 1,
            offset: self.power,
            swap: self.group.uses_g() && self.power.rem_euclid(2) == 1,
        };
        let reflect = IndexMap {
            sign: if self.flip { -1 } else { 1 },
            offset: 0,
            swap: (self.flip && self.group == FriezeGroupId::F4) ^ self.h,
        };
        reflect.compose(&step)
    }

    /// Parses a word over `t g v h r` with integer exponents, e.g. `v*t^-2`,
    /// and reduces it to normal form. `1` and the empty word are the identity.
    pub fn parse_word(group: FriezeGroupId, text: &str) -> Result<GroupElement> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut acc = GroupElement::identity(group);
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b'*') {
                *pos += 1;
            }
        };
        skip(&mut pos);
        if matches!(text[pos..].trim(), "1" | "e") {
            return Ok(acc);
        }
        while pos < bytes.len() {
            let letter = bytes[pos] as char;
            let generator = GroupElement::generator(group, letter).map_err(|e| match e {
                Error::UnknownGenerator { .. } => {
                    Error::parse(pos, format!("generator `{letter}` is not available in {group}"))
                }
                other => other,
            })?;
            pos += 1;
            let mut exp = 1;
            if bytes.get(pos) == Some(&b'^') {
                let (e, next) = parse_int(text, pos + 1)?;
                exp = e;
                pos = next;
            }
            acc = acc.multiply(&generator.pow(exp))?;
            let before = pos;
            skip(&mut pos);
            if pos == before && pos < bytes.len() {
                return Err(Error::parse(pos, "expected `*` between letters"));
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut letters: Vec<String> = Vec::new();
        if self.flip {
            letters.push(if self.group == FriezeGroupId::F4 { "r" } else { "v" }.into());
        }
        if self.h {
            letters.push("h".into());
        }
        let g = if self.group.uses_g() { "g" } else { "t" };
        match self.power {
            0 => {}
            1 => letters.push(g.into()),
            p => letters.push(format!("{g}^{p}")),
        }
        f.write_str(&letters.join("*"))
    }
}
