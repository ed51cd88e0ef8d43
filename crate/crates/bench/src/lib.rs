//! Fixtures shared by the benchmarks.

use frieze_core::{enumerate_indices, expand_basis_function, Alphabet, FriezeGroupId, Monomial, TruncatedSeries};

/// Every monomial with indices in `[0, width)` and degree exactly `degree`.
pub fn monomials(alphabet: Alphabet, width: i64, degree: u32) -> Vec<Monomial> {
    let vars: Vec<String> = match alphabet {
        Alphabet::X => (0..width).map(|k| format!("x[{k}]")).collect(),
        Alphabet::XY => (0..width).flat_map(|k| [format!("x[{k}]"), format!("y[{k}]")]).collect(),
    };
    let mut out = Vec::new();
    let mut pick = vec![0usize; degree as usize];
    loop {
        let text: Vec<&str> = pick.iter().map(|&i| vars[i].as_str()).collect();
        out.push(Monomial::parse(alphabet, &text.join(" ")).expect("generated text parses"));
        // next non-decreasing index tuple
        let Some(pos) = (0..pick.len()).rev().find(|&p| pick[p] + 1 < vars.len()) else {
            return out;
        };
        let next = pick[pos] + 1;
        for p in &mut pick[pos..] {
            *p = next;
        }
    }
}

/// Sum of the expansions of every degree-`k` label with small bounds.
pub fn invariant_sum(group: FriezeGroupId, k: u32, window: i64) -> TruncatedSeries {
    enumerate_indices(group, k, 2, 1)
        .iter()
        .map(|idx| expand_basis_function(idx, window).expect("window is non-negative"))
        .reduce(|a, b| a.add(&b).expect("same space"))
        .expect("at least one label")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        // multisets of size 2 from 3 variables
        assert_eq!(monomials(Alphabet::X, 3, 2).len(), 6);
        assert_eq!(monomials(Alphabet::XY, 2, 1).len(), 4);
        assert!(!invariant_sum(FriezeGroupId::F7, 2, 3).is_zero());
    }
}
