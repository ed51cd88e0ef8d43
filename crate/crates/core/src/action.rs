//! Action of frieze group elements on normal-form monomials, stabilizers and
//! window-restricted orbits.
//!
//! Every element acts on variable indices by an affine [`IndexMap`]. On a
//! normal form this moves each alphabet block as a whole: translations shift
//! the block start, reflections send a block `[a, a+m-1]` to
//! `[c-a-m+1, c-a]` with its composition reversed, and swapping elements
//! exchange the x-block and the y-block.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FriezeGroupId, GroupElement, IndexMap};
use crate::monomial::{Alphabet, Block, Monomial, MonomialX, MonomialXY};

fn map_block(map: &IndexMap, block: Block) -> Block {
    if map.sign > 0 {
        Block {
            start: block.start + map.offset,
            shape: block.shape,
        }
    } else {
        Block {
            start: map.offset - block.end(),
            shape: block.shape.reverse(),
        }
    }
}

fn check_alphabet(g: &GroupElement, alphabet: Alphabet) -> Result<()> {
    if g.group().alphabet() != alphabet {
        return Err(Error::WrongAlphabet {
            group: g.group(),
            alphabet,
        });
    }
    Ok(())
}

/// Action of an element of F1 or F3 on a one-alphabet monomial.
pub fn act_x(g: &GroupElement, m: &MonomialX) -> Result<MonomialX> {
    check_alphabet(g, Alphabet::X)?;
    let map = g.index_map();
    Ok(MonomialX::from_block(m.block().map(|b| map_block(&map, b))))
}

/// Action of an element of F2, F4, F5, F6 or F7 on a two-alphabet monomial.
pub fn act_xy(g: &GroupElement, m: &MonomialXY) -> Result<MonomialXY> {
    check_alphabet(g, Alphabet::XY)?;
    let map = g.index_map();
    let bx = m.x_block().map(|b| map_block(&map, b));
    let by = m.y_block().map(|b| map_block(&map, b));
    Ok(if map.swap {
        MonomialXY::from_blocks(by, bx)
    } else {
        MonomialXY::from_blocks(bx, by)
    })
}

pub fn act(g: &GroupElement, m: &Monomial) -> Result<Monomial> {
    match m {
        Monomial::X(mx) => act_x(g, mx).map(Monomial::X),
        Monomial::XY(mxy) => act_xy(g, mxy).map(Monomial::XY),
    }
}

/// The element of `group` acting through `map`, if there is one.
pub fn element_with_map(group: FriezeGroupId, map: IndexMap) -> Option<GroupElement> {
    use FriezeGroupId::*;
    let reflect = map.sign < 0;
    let (flip, h, power) = match group {
        F1 if !reflect && !map.swap => (false, false, map.offset),
        F2 if !reflect && map.swap == (map.offset.rem_euclid(2) == 1) => (false, false, map.offset),
        F3 if !map.swap => (reflect, false, map.sign * map.offset),
        F4 if map.swap == reflect => (reflect, false, map.sign * map.offset),
        F5 if map.swap == (map.offset.rem_euclid(2) == 1) => (reflect, false, map.sign * map.offset),
        F6 if !reflect => (false, map.swap, map.offset),
        F7 => (reflect, map.swap, map.sign * map.offset),
        _ => return None,
    };
    let g = GroupElement::new(group, flip, h, power).ok()?;
    debug_assert_eq!(g.index_map(), map);
    Some(g)
}

/// Non-identity elements fixing a monomial.
///
/// Translations never fix a non-unit monomial, so the stabilizer is finite:
/// at most one element per coset of the translation subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilizer {
    pub group: FriezeGroupId,
    #[serde(serialize_with = "serialize_elements")]
    pub elements: Vec<GroupElement>,
}

fn serialize_elements<S: serde::Serializer>(elements: &[GroupElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(elements.iter().map(|e| e.to_string()))
}

impl Stabilizer {
    pub fn is_trivial(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.is_identity() || self.elements.contains(g)
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let words: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{1, {}}}", words.join(", "))
    }
}

/// Closed-form stabilizer of a non-unit monomial.
///
/// Three kinds of index maps can fix a monomial:
/// - a reflection `k ↦ c - k` keeping the alphabets, when every block is a
///   palindrome and all blocks share the reflection centre `c/2`;
/// - a reflection `k ↦ c - k` swapping the alphabets, when the y-shape is
///   the reversed x-shape and `c = start(x) + end(y)`;
/// - the swap `k ↦ k`, when both shapes agree and Δ = 0.
///
/// Each candidate is kept when the group contains an element acting through
/// that map (for F5 this is a parity condition on `c`).
pub fn stabilizer(group: FriezeGroupId, m: &Monomial) -> Result<Stabilizer> {
    if group.alphabet() != m.alphabet() {
        return Err(Error::WrongAlphabet {
            group,
            alphabet: m.alphabet(),
        });
    }
    if m.is_unit() {
        return Err(Error::UnitMonomial);
    }
    let (bx, by) = m.blocks();
    let present: Vec<&Block> = [&bx, &by].into_iter().flatten().collect();
    let mut candidates = Vec::new();

    let centre = present[0].start + present[0].end();
    if present
        .iter()
        .all(|b| b.shape.is_palindrome() && b.start + b.end() == centre)
    {
        candidates.push(IndexMap {
            sign: -1,
            offset: centre,
            swap: false,
        });
    }
    if let (Some(x), Some(y)) = (&bx, &by) {
        if x.shape.reverse() == y.shape {
            candidates.push(IndexMap {
                sign: -1,
                offset: x.start + y.end(),
                swap: true,
            });
        }
        if x.shape == y.shape && x.start == y.start {
            candidates.push(IndexMap {
                sign: 1,
                offset: 0,
                swap: true,
            });
        }
    }

    let mut elements: Vec<GroupElement> = candidates
        .into_iter()
        .filter_map(|map| element_with_map(group, map))
        .collect();
    elements.sort();
    Ok(Stabilizer { group, elements })
}

/// Whether some non-identity element of `group` fixes `m`, stated through the
/// shape conditions of each group.
pub fn has_nontrivial_stabilizer(group: FriezeGroupId, m: &Monomial) -> Result<bool> {
    Ok(!stabilizer(group, m)?.is_trivial())
}

/// All images of `m` under `group` whose variables lie in `[-radius, radius]`.
pub fn orbit_in_window(group: FriezeGroupId, m: &Monomial, radius: i64) -> Result<BTreeSet<Monomial>> {
    if radius < 0 {
        return Err(Error::InvalidWindow(radius));
    }
    if group.alphabet() != m.alphabet() {
        return Err(Error::WrongAlphabet {
            group,
            alphabet: m.alphabet(),
        });
    }
    let mut out = BTreeSet::new();
    let Some((lo, hi)) = m.index_range() else {
        out.insert(m.clone());
        return Ok(out);
    };
    let step = group.translation_step();
    // coset representatives move a window by at most one position
    let z_lo = (-radius - 2 - lo).div_euclid(step);
    let z_hi = (radius + 2 - hi).div_euclid(step) + 1;
    for rep in group.coset_representatives() {
        for z in z_lo..=z_hi {
            let g = rep.multiply(&GroupElement::translation(group, z))?;
            let image = act(&g, m)?;
            if image.within(radius) {
                out.insert(image);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use crate::monomial::ExponentMap;
    use FriezeGroupId::*;

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn w(group: FriezeGroupId, word: &str) -> GroupElement {
        GroupElement::parse_word(group, word).unwrap()
    }

    fn mono(group: FriezeGroupId, text: &str) -> Monomial {
        Monomial::parse(group.alphabet(), text).unwrap()
    }

    /// Exponent-wise application of the generator tables, letter by letter
    /// from the right.
    fn act_by_tables(group: FriezeGroupId, word: &[char], m: &Monomial) -> Monomial {
        let (mut x, mut y) = m.exponents();
        for &letter in word.iter().rev() {
            let var = |k: i64, is_x: bool| -> (bool, i64) {
                match (group, letter) {
                    (_, 't') => (is_x, k + 1),
                    (_, 'g') => (!is_x, k + 1),
                    (_, 'v') => (is_x, -k),
                    (F4, 'r') | (F7, 'r') => (!is_x, -k),
                    (F5, 'r') => (!is_x, -k - 1),
                    (_, 'h') => (!is_x, k),
                    _ => unreachable!(),
                }
            };
            let mut nx = ExponentMap::new();
            let mut ny = ExponentMap::new();
            for (src, is_x) in [(&x, true), (&y, false)] {
                for (&k, &e) in src {
                    let (to_x, j) = var(k, is_x);
                    *if to_x { &mut nx } else { &mut ny }.entry(j).or_insert(0) += e;
                }
            }
            x = nx;
            y = ny;
        }
        Monomial::from_exponents(group.alphabet(), &x, &y).unwrap()
    }

    #[test]
    fn act_x_examples() {
        let m = MonomialX::new(0, comp(&[1, 0, 2]));
        assert_eq!(act_x(&w(F1, "t"), &m).unwrap(), MonomialX::new(1, comp(&[1, 0, 2])));
        // x_1^2 x_2 ↦ x_-1^2 x_-2, base j = -i - m - 1 = -3
        let m = MonomialX::new(0, comp(&[2, 1]));
        let image = act_x(&w(F3, "v"), &m).unwrap();
        assert_eq!(image.to_string(), "x[-2] x[-1]^2");
        assert_eq!(image, MonomialX::new(-3, comp(&[1, 2])));
        assert_eq!(act_x(&w(F1, "1"), &m).unwrap(), m);
        assert!(act_x(&w(F6, "t"), &m).is_err());
    }

    #[test]
    fn act_xy_examples() {
        let m = MonomialXY::new(0, comp(&[1]), comp(&[2]), 1);
        let image = act_xy(&w(F6, "h"), &m).unwrap();
        assert_eq!(image, MonomialXY::new(1, comp(&[2]), comp(&[1]), -1));

        let m = MonomialXY::new(0, comp(&[1]), Composition::empty(), 0);
        let image = act_xy(&w(F2, "g"), &m).unwrap();
        assert_eq!(Monomial::XY(image).to_string(), "y[2]");

        let m = MonomialXY::new(3, comp(&[1, 2]), comp(&[1]), -2);
        assert_eq!(act_xy(&w(F4, "1"), &m).unwrap(), m);
        assert!(act_xy(&w(F3, "v"), &m).is_err());
    }

    // The closed forms below are the normal-form formulas for each generator
    // written directly in (i, σ, σ', Δ).

    #[test]
    fn v_formula_one_alphabet() {
        for i in -3..=3 {
            for s in [comp(&[2, 1]), comp(&[1, 0, 3]), comp(&[4])] {
                let m = MonomialX::new(i, s.clone());
                let j = -i - s.len() as i64 - 1;
                assert_eq!(act_x(&w(F3, "v"), &m).unwrap(), MonomialX::new(j, s.reverse()));
            }
        }
    }

    #[test]
    fn two_alphabet_generator_formulas() {
        let shapes = [comp(&[1]), comp(&[2, 0, 1]), comp(&[1, 1])];
        for i in -2..=2 {
            for delta in -3..=3 {
                for s in &shapes {
                    for sp in &shapes {
                        let m = MonomialXY::new(i, s.clone(), sp.clone(), delta);
                        let (mm, mp) = (s.len() as i64, sp.len() as i64);

                        // g: j = i + 1 + Δ, (σ', σ, -Δ)
                        let expect = MonomialXY::new(i + 1 + delta, sp.clone(), s.clone(), -delta);
                        assert_eq!(act_xy(&w(F2, "g"), &m).unwrap(), expect);

                        // r: Δ' = Δ + m' - m, j = -i - m - 1, j' = j - Δ'
                        let dp = delta + mp - mm;
                        let jp = -i - mm - 1 - dp;
                        let expect = MonomialXY::new(jp, sp.reverse(), s.reverse(), dp);
                        assert_eq!(act_xy(&w(F4, "r"), &m).unwrap(), expect);

                        // v on two alphabets: j = -i - m - 1, Δ' = m - m' - Δ
                        let expect = MonomialXY::new(-i - mm - 1, s.reverse(), sp.reverse(), mm - mp - delta);
                        assert_eq!(act_xy(&w(F5, "v"), &m).unwrap(), expect);
                        assert_eq!(act_xy(&w(F7, "v"), &m).unwrap(), expect);

                        // r' = vg: j' = -i - Δ - m' - 2, Δ'' = Δ + m' - m
                        let expect = MonomialXY::new(-i - delta - mp - 2, sp.reverse(), s.reverse(), delta + mp - mm);
                        assert_eq!(act_xy(&w(F5, "r"), &m).unwrap(), expect);

                        // h: j = i + Δ, (σ', σ, -Δ)
                        let expect = MonomialXY::new(i + delta, sp.clone(), s.clone(), -delta);
                        assert_eq!(act_xy(&w(F6, "h"), &m).unwrap(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn agrees_with_generator_tables() {
        let samples = [
            "x[0]", "x[-1]^2 x[1]", "y[3]", "x[0] y[2] y[3]", "x[-2] x[0]^3 y[-2]^2", "y[-1] y[1]^2",
        ];
        for group in FriezeGroupId::ALL {
            for &text in &samples {
                if group.alphabet() == Alphabet::X && text.contains('y') {
                    continue;
                }
                let m = mono(group, text);
                for &letter in group.generators().iter().chain(['r'].iter()) {
                    let Ok(g) = GroupElement::generator(group, letter) else { continue };
                    assert_eq!(act(&g, &m).unwrap(), act_by_tables(group, &[letter], &m), "{group} {letter} {text}");
                }
            }
        }
    }

    #[test]
    fn involutions() {
        let m = mono(F7, "x[-2] x[0]^3 y[-1] y[1]^2");
        for word in ["v", "h", "r"] {
            let g = w(F7, word);
            assert_eq!(act(&g, &act(&g, &m).unwrap()).unwrap(), m);
        }
        let g = w(F5, "r");
        assert_eq!(act(&g, &act(&g, &m).unwrap()).unwrap(), m);
    }

    #[test]
    fn stabilizer_examples() {
        let m: Monomial = MonomialX::new(0, comp(&[1, 2, 1])).into();
        let s = stabilizer(F3, &m).unwrap();
        assert_eq!(s.elements.len(), 1);
        assert!(s.elements[0].flip());
        assert_eq!(act(&s.elements[0], &m).unwrap(), m);

        let m: Monomial = MonomialXY::new(0, comp(&[2]), comp(&[2]), 0).into();
        let s = stabilizer(F6, &m).unwrap();
        assert_eq!(s.elements, vec![w(F6, "h")]);

        let m = mono(F1, "x[0] x[2]^5");
        assert!(stabilizer(F1, &m).unwrap().is_trivial());
        assert!(stabilizer(F1, &Monomial::unit(Alphabet::X)).is_err());
    }

    #[test]
    fn f5_rotation_parity() {
        // σ' = reverse(σ): fixed by some r't'^z iff m + Δ is even
        for delta in -3..=3 {
            for s in [comp(&[1]), comp(&[1, 2]), comp(&[2, 0, 1])] {
                let m: Monomial = MonomialXY::new(0, s.clone(), s.reverse(), delta).into();
                let st = stabilizer(F5, &m).unwrap();
                let by_rotation = st.elements.iter().any(|e| e.index_map().swap && e.flip());
                assert_eq!(by_rotation, (s.len() as i64 + delta) % 2 == 0, "{s} {delta}");
            }
        }
    }

    #[test]
    fn f5_reflection_needs_matching_centres() {
        // x_1 x_3 y_2: both blocks palindromic and centred at 2, Δ = 1.
        let m = mono(F5, "x[1] x[3] y[2]");
        let st = stabilizer(F5, &m).unwrap();
        assert_eq!(st.elements.len(), 1);
        assert_eq!(act(&st.elements[0], &m).unwrap(), m);
        // same shapes with Δ = 0 are not fixed by any reflection
        let m = mono(F5, "x[1] x[3] y[1]");
        assert!(stabilizer(F5, &m).unwrap().is_trivial());
        // an even-length palindrome is centred between two indices
        let m = mono(F5, "x[1] x[2]");
        assert!(stabilizer(F5, &m).unwrap().is_trivial());
        assert!(!stabilizer(F3, &mono(F3, "x[1] x[2]")).unwrap().is_trivial());
    }

    #[test]
    fn orbit_examples() {
        let orbit = orbit_in_window(F1, &mono(F1, "x[1]"), 2).unwrap();
        let got: Vec<String> = orbit.iter().map(|m| m.to_string()).collect();
        assert_eq!(got, ["x[-2]", "x[-1]", "x[0]", "x[1]", "x[2]"]);

        let orbit = orbit_in_window(F3, &mono(F3, "x[1]^2 x[2]"), 2).unwrap();
        let got: BTreeSet<String> = orbit.iter().map(|m| m.to_string()).collect();
        let want: BTreeSet<String> = [
            "x[-2]^2 x[-1]", "x[-1]^2 x[0]", "x[0]^2 x[1]", "x[1]^2 x[2]",
            "x[-2] x[-1]^2", "x[-1] x[0]^2", "x[0] x[1]^2", "x[1] x[2]^2",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(got, want);

        let orbit = orbit_in_window(F6, &mono(F6, "x[1] y[2]"), 1).unwrap();
        let got: Vec<String> = orbit.iter().map(|m| m.to_string()).collect();
        assert_eq!(got.len(), 4);
        for m in ["x[-1] y[0]", "x[0] y[1]", "x[0] y[-1]", "x[1] y[0]"] {
            assert!(got.contains(&m.to_string()), "{m}");
        }
    }
}
