//! Non-negative compositions: finite sequences of non-negative integers
//! whose first and last entries are positive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-negative composition `(σ₁, …, σₘ)` with `σ₁ > 0` and `σₘ > 0`, or
/// the empty composition.
///
/// The derived ordering is lexicographic on the parts, so `(1) < (1,0,1) < (2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let (Some(&first), Some(&last)) = (parts.first(), parts.last()) {
            if first == 0 {
                return Err(Error::InvalidComposition(format!(
                    "{parts:?}: first part must be positive"
                )));
            }
            if last == 0 {
                return Err(Error::InvalidComposition(format!(
                    "{parts:?}: last part must be positive"
                )));
            }
        }
        Ok(Composition(parts))
    }

    /// Like [`Composition::new`] but also rejects negative entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&p| {
                u32::try_from(p).map_err(|_| {
                    Error::InvalidComposition(format!("{parts:?}: entry {p} is not a non-negative exponent"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// All compositions of order `k` with at most `max_parts` parts, in
    /// increasing order.
    pub fn all_of_order(k: u32, max_parts: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(Composition::empty());
            return out;
        }
        let mut buf = Vec::new();
        for len in 1..=max_parts {
            fill(k, len, &mut buf, &mut out);
        }
        out.sort();
        out
    }
}

fn fill(remaining: u32, len: usize, buf: &mut Vec<u32>, out: &mut Vec<Composition>) {
    let pos = buf.len();
    if pos + 1 == len {
        if remaining > 0 {
            buf.push(remaining);
            out.push(Composition(buf.clone()));
            buf.pop();
        }
        return;
    }
    let lo = if pos == 0 { 1 } else { 0 };
    // leave at least 1 for the last part
    for part in lo..remaining {
        buf.push(part);
        fill(remaining - part, len, buf, out);
        buf.pop();
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("expected `(...)`, found `{t}`")))?;
        if inner.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse(0, format!("bad part `{}` in `{t}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::from_signed(&parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn order_and_parts() {
        let s = c(&[2, 0, 1]);
        assert_eq!(s.order(), 3);
        assert_eq!(s.len(), 3);
        let e = Composition::new(vec![]).unwrap();
        assert_eq!(e.order(), 0);
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn rejects_zero_ends_and_negatives() {
        assert!(Composition::new(vec![0, 1]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Composition::new(vec![0]).is_err());
        assert!(Composition::from_signed(&[1, -1, 1]).is_err());
        assert!(Composition::from_signed(&[1, 0, 1]).is_ok());
    }

    #[test]
    fn reverse_cases() {
        assert_eq!(c(&[2, 0, 1]).reverse(), c(&[1, 0, 2]));
        assert_eq!(c(&[1, 2, 1]).reverse(), c(&[1, 2, 1]));
        assert!(c(&[1, 2, 1]).is_palindrome());
        assert_eq!(Composition::empty().reverse(), Composition::empty());
    }

    #[test]
    fn text_round_trip() {
        for s in ["()", "(2,0,1)", "(1)"] {
            assert_eq!(s.parse::<Composition>().unwrap().to_string(), s);
        }
        assert_eq!(" ( 2, 0 ,1 ) ".parse::<Composition>().unwrap(), c(&[2, 0, 1]));
        assert!("(0,1)".parse::<Composition>().is_err());
        assert!("2,1".parse::<Composition>().is_err());
    }

    #[test]
    fn enumeration_matches_stars_and_bars() {
        // exactly m parts, order k: C(k+m-3, m-1) for m >= 2
        fn binom(n: u64, r: u64) -> u64 {
            (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for k in 2..=5u32 {
            let all = Composition::all_of_order(k, 5);
            for m in 2..=5usize {
                let n = all.iter().filter(|s| s.len() == m).count() as u64;
                assert_eq!(n, binom((k as u64) + (m as u64) - 3, (m as u64) - 1), "k={k} m={m}");
            }
        }
        assert_eq!(Composition::all_of_order(1, 4), vec![c(&[1])]);
    }
}
