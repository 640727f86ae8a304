//! Exhaustive catalogs of bouquets on labels 1..n, one representative per
//! normalize()-equivalence class, streamed in deterministic order.
//!
//! Words are enumerated as multiset permutations of {1,1,...,n,n} in
//! lexicographic order, signed variants as all 2^n second-occurrence sign
//! choices (first occurrences positive, matching the normal form's sign
//! convention). A word is emitted iff it equals its own normal form, so
//! every class appears exactly once without any dedup storage.

use std::fmt;

use petrial_core::interlace::is_prime;
use petrial_core::rotation::{Letter, Sign, SignedRotation};

/// Exhaustive generation is refused above this chord count; the word count
/// grows as (2n-1)!! * 2^n.
pub const CATALOG_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogSpec {
    pub n: usize,
    /// Enumerate all 2^n sign patterns; otherwise all-positive words only.
    pub signed: bool,
    pub prime_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "catalog for n={} exceeds the cap of {}", self.n, self.cap)
    }
}

impl std::error::Error for CapExceeded {}

/// Streams every catalog entry to `visit`; returns the number emitted.
pub fn for_each_bouquet<F>(spec: &CatalogSpec, mut visit: F) -> Result<u64, CapExceeded>
where
    F: FnMut(&SignedRotation),
{
    if spec.n > CATALOG_CAP {
        return Err(CapExceeded {
            n: spec.n,
            cap: CATALOG_CAP,
        });
    }
    let mut count = 0;
    if spec.n == 0 {
        let empty = SignedRotation::empty();
        if !spec.prime_only || is_prime(&empty) {
            visit(&empty);
            count += 1;
        }
        return Ok(count);
    }

    let n = spec.n;
    let mut arrangement: Vec<u32> = (1..=n as u32).flat_map(|l| [l, l]).collect();
    let sign_patterns = if spec.signed { 1u32 << n } else { 1 };
    loop {
        if unsigned_rotation_minimal(&arrangement) {
            for mask in 0..sign_patterns {
                let word = signed_word(&arrangement, mask);
                let r = SignedRotation::new(word).expect("double occurrence by construction");
                if r.normalize() == r && (!spec.prime_only || is_prime(&r)) {
                    visit(&r);
                    count += 1;
                }
            }
        }
        if !next_multiset_permutation(&mut arrangement) {
            break;
        }
    }
    Ok(count)
}

/// Collects a catalog into memory; intended for the small suites (n <= 4).
pub fn collect_bouquets(spec: &CatalogSpec) -> Result<Vec<SignedRotation>, CapExceeded> {
    let mut out = Vec::new();
    for_each_bouquet(spec, |r| out.push(r.clone()))?;
    Ok(out)
}

/// Second occurrence of label l gets a minus sign iff bit l-1 of `mask` is
/// set; first occurrences stay positive.
fn signed_word(arrangement: &[u32], mask: u32) -> Vec<Letter> {
    let mut seen = 0u32;
    arrangement
        .iter()
        .map(|&label| {
            let bit = 1u32 << (label - 1);
            let sign = if seen & bit != 0 && mask & bit != 0 {
                Sign::Minus
            } else {
                Sign::Plus
            };
            seen |= bit;
            Letter::new(label, sign).expect("label >= 1")
        })
        .collect()
}

/// No cyclic rotation of the label sequence is lexicographically smaller.
/// Necessary for any sign choice on it to be a normal form, since word
/// comparison orders by label before sign.
fn unsigned_rotation_minimal(arrangement: &[u32]) -> bool {
    let len = arrangement.len();
    for offset in 1..len {
        for k in 0..len {
            let rotated = arrangement[(offset + k) % len];
            match rotated.cmp(&arrangement[k]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

/// Standard next-permutation step, correct on multisets; lexicographic
/// order, returns false after the last permutation.
fn next_multiset_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn collect(n: usize, signed: bool, prime_only: bool) -> Vec<SignedRotation> {
        collect_bouquets(&CatalogSpec {
            n,
            signed,
            prime_only,
        })
        .expect("within cap")
    }

    /// Oracle: enumerate every word (all arrangements, all sign patterns on
    /// both occurrences) and dedup by normal form.
    fn oracle_class_count(n: usize, signed: bool) -> usize {
        let mut arrangement: Vec<u32> = (1..=n as u32).flat_map(|l| [l, l]).collect();
        let mut classes: BTreeSet<SignedRotation> = BTreeSet::new();
        loop {
            let sign_patterns = if signed { 1u32 << (2 * n) } else { 1 };
            for mask in 0..sign_patterns {
                let word: Vec<Letter> = arrangement
                    .iter()
                    .enumerate()
                    .map(|(i, &label)| {
                        let sign = if mask & (1 << i) != 0 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        };
                        Letter::new(label, sign).unwrap()
                    })
                    .collect();
                classes.insert(SignedRotation::new(word).unwrap().normalize());
            }
            if !next_multiset_permutation(&mut arrangement) {
                break;
            }
        }
        classes.len()
    }

    #[test]
    fn one_chord_signed_classes() {
        let rotations = collect(1, true, false);
        let texts: Vec<String> = rotations.iter().map(|r| r.to_string()).collect();
        assert_eq!(texts, ["1 1", "1 -1"]);
    }

    #[test]
    fn two_chords_unsigned_classes() {
        let rotations = collect(2, false, false);
        let texts: Vec<String> = rotations.iter().map(|r| r.to_string()).collect();
        assert_eq!(texts, ["1 1 2 2", "1 2 1 2"]);
    }

    #[test]
    fn emitted_entries_are_valid_distinct_normal_forms() {
        for signed in [false, true] {
            for n in 0..=4 {
                let rotations = collect(n, signed, false);
                let mut seen = BTreeSet::new();
                for r in &rotations {
                    assert_eq!(&r.normalize(), r);
                    assert_eq!(r.edge_count(), n);
                    assert!(seen.insert(r.clone()), "duplicate {r}");
                }
            }
        }
    }

    #[test]
    fn generator_agrees_with_normalize_dedup_oracle() {
        for n in 0..=3 {
            assert_eq!(
                collect(n, false, false).len(),
                oracle_class_count(n, false),
                "unsigned n={n}"
            );
            assert_eq!(
                collect(n, true, false).len(),
                oracle_class_count(n, true),
                "signed n={n}"
            );
        }
    }

    #[test]
    fn frozen_class_counts() {
        // Regression constants fixed by the normalize-dedup oracle above
        // (n=3 unsigned also checks against Burnside: (90 + 6)/6 = 16).
        assert_eq!(collect(2, true, false).len(), 8);
        assert_eq!(collect(3, false, false).len(), 16);
        assert_eq!(collect(3, true, false).len(), 128);
        assert_eq!(collect(4, false, false).len(), 318);
        assert_eq!(collect(4, true, false).len(), 5088);
    }

    #[test]
    fn prime_filter() {
        let all = collect(2, false, false).len();
        let prime = collect(2, false, true);
        assert_eq!(all, 2);
        assert_eq!(
            prime.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            ["1 2 1 2"]
        );
        // The empty bouquet is non-prime by convention.
        assert_eq!(collect(0, false, true).len(), 0);
        assert_eq!(collect(0, false, false).len(), 1);
    }

    #[test]
    fn cap_enforced() {
        let err = collect_bouquets(&CatalogSpec {
            n: 7,
            signed: false,
            prime_only: false,
        })
        .unwrap_err();
        assert_eq!(err, CapExceeded { n: 7, cap: 6 });
    }
}
