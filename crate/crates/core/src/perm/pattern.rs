use super::Permutation;

/// Patterns whose avoidance characterises Schubert polynomials with all
/// nonzero coefficients equal to 1.
pub const ZERO_ONE_PATTERNS: [&str; 12] = [
    "12543", "13254", "13524", "13542", "21543", "125364", "125634", "215364", "215634", "315264",
    "315624", "315642",
];

/// True when some subsequence of `w` is order-isomorphic to `pattern`.
pub fn contains_pattern(w: &Permutation, pattern: &Permutation) -> bool {
    let k = pattern.n();
    if k > w.n() {
        return false;
    }
    let mut positions = alloc::vec![0usize; k];
    search(w.word(), pattern.word(), &mut positions, 0, 0)
}

// Depth-first choice of increasing positions; prunes as soon as the relative
// order of the chosen values disagrees with the pattern.
fn search(word: &[u8], pattern: &[u8], chosen: &mut [usize], depth: usize, start: usize) -> bool {
    let k = pattern.len();
    if depth == k {
        return true;
    }
    let remaining = k - depth;
    for pos in start..=word.len() - remaining {
        let v = word[pos];
        let consistent = (0..depth).all(|d| (word[chosen[d]] < v) == (pattern[d] < pattern[depth]));
        if consistent {
            chosen[depth] = pos;
            if search(word, pattern, chosen, depth + 1, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// True when `w` avoids every pattern in [`ZERO_ONE_PATTERNS`].
pub fn is_zero_one(w: &Permutation) -> bool {
    ZERO_ONE_PATTERNS
        .iter()
        .map(|s| s.parse::<Permutation>().expect("static pattern"))
        .all(|pat| !contains_pattern(w, &pat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::p;
    use alloc::vec::Vec;

    /// Oracle: every k-subset of positions, standardised and compared.
    fn contains_naive(w: &Permutation, pat: &Permutation) -> bool {
        let n = w.n();
        let k = pat.n();
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
            let sub: Vec<u8> = (0..n).filter(|i| m & (1 << i) != 0).map(|i| w.word()[i]).collect();
            (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pat.word()[a] < pat.word()[b])))
        })
    }

    #[test]
    fn examples() {
        assert!(contains_pattern(&p("12543"), &p("12543")));
        assert!(!contains_pattern(&Permutation::identity(5), &p("21")));
        assert_eq!(contains_pattern(&p("351624"), &p("13524")), contains_naive(&p("351624"), &p("13524")));
        assert!(!contains_pattern(&p("12"), &p("123")));
    }

    #[test]
    fn agrees_with_naive_scan() {
        let patterns: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
        for n in 1..=6 {
            for w in Permutation::all(n) {
                for pat in &patterns {
                    assert_eq!(contains_pattern(&w, pat), contains_naive(&w, pat), "{w} vs {pat}");
                }
            }
        }
    }

    #[test]
    fn zero_one_examples() {
        assert!(is_zero_one(&Permutation::identity(6)));
        assert!(!is_zero_one(&p("12543")));
        assert!(is_zero_one(&p("351624")));
        assert!(!is_zero_one(&p("315642")));
    }
}
