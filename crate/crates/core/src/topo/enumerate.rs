//! Exhaustive enumeration of small posets and maps, used to validate the
//! topological lemmas.

use super::{FinitePoset, SpectralMapModel};

/// Labels `a`, `b`, … for small generated posets.
pub fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// All naturally labelled posets on `n` points (`i < j` in the poset implies
/// `i < j` as integers). Every isomorphism class appears at least once.
pub fn naturally_labelled_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 32, "too many points for exhaustive enumeration");
    let labels = letter_labels(n);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let rel = |i: usize, j: usize| -> bool {
            if i == j {
                return true;
            }
            if i > j {
                return false;
            }
            let k = pairs.iter().position(|&p| p == (i, j)).expect("pair exists");
            mask & (1 << k) != 0
        };
        let transitive = (0..n).all(|i| (i + 1..n).all(|j| !rel(i, j) || (j + 1..n).all(|k| !rel(j, k) || rel(i, k))));
        if transitive {
            out.push(FinitePoset::from_order(labels.clone(), rel).expect("transitive relation"));
        }
    }
    out
}

/// All maps `source → target` that are order-preserving and surjective.
pub fn monotone_surjections(source: &FinitePoset, target: &FinitePoset) -> Vec<SpectralMapModel> {
    let (n, m) = (source.len(), target.len());
    if m == 0 || n < m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    loop {
        let f = SpectralMapModel::new(source.clone(), target.clone(), assignment.clone()).expect("assignment is total");
        if f.is_surjective() && f.is_monotone() {
            out.push(f);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            assignment[k] += 1;
            if assignment[k] < m {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

/// All order isomorphisms between two posets.
pub fn order_isomorphisms(source: &FinitePoset, target: &FinitePoset) -> Vec<SpectralMapModel> {
    if source.len() != target.len() {
        return Vec::new();
    }
    monotone_surjections(source, target)
        .into_iter()
        .filter(|f| {
            let n = source.len();
            (0..n).all(|x| (0..n).all(|y| source.leq(x, y) == target.leq(f.apply(x), f.apply(y))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_naturally_labelled_posets() {
        let counts: Vec<usize> = (0..=5).map(|n| naturally_labelled_posets(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 7, 40, 357]);
    }

    #[test]
    fn surjections_onto_a_chain() {
        let src = FinitePoset::chain(&["a", "b", "c"]);
        let tgt = FinitePoset::chain(&["p", "q"]);
        // monotone surjections 3-chain → 2-chain: cut after a or after b
        assert_eq!(monotone_surjections(&src, &tgt).len(), 2);
        assert_eq!(order_isomorphisms(&src, &src).len(), 1);
    }
}
