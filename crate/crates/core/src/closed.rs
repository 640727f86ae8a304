//! Closed-form partial-Petrial polynomials for the complete-graph and path
//! families, and the canonical bouquets realizing them.

use alloc::vec::Vec;
use core::fmt;

use crate::poly::GenusPolynomial;
use crate::rotation::{Letter, Sign, SignedRotation};

/// The two families with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    CompleteGraph,
    Path,
}

/// A family member: K_n or P_n on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    /// The canonical bouquet whose interlacement graph is the family member.
    pub fn realization(&self) -> Result<SignedRotation, ClosedFormError> {
        match self.family {
            Family::CompleteGraph => canonical_complete_bouquet(self.n),
            Family::Path => Ok(canonical_path_bouquet(self.n)),
        }
    }

    /// The closed-form polynomial.
    pub fn polynomial(&self) -> Result<GenusPolynomial, ClosedFormError> {
        match self.family {
            Family::CompleteGraph => complete_poly(self.n),
            Family::Path => path_poly(self.n),
        }
    }
}

/// A family order below the closed form's domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormError {
    pub family: Family,
    pub n: usize,
    pub min: usize,
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::CompleteGraph => "complete graph",
            Family::Path => "path",
        };
        write!(f, "{name} order {} is below the minimum {}", self.n, self.min)
    }
}

impl core::error::Error for ClosedFormError {}

/// The bouquet [1, 2, ..., n, 1, 2, ..., n]; its interlacement graph is K_n.
pub fn canonical_complete_bouquet(n: usize) -> Result<SignedRotation, ClosedFormError> {
    if n < 1 {
        return Err(ClosedFormError {
            family: Family::CompleteGraph,
            n,
            min: 1,
        });
    }
    let mut word = Vec::with_capacity(2 * n);
    for _ in 0..2 {
        for label in 1..=n {
            word.push(Letter::new(label as u32, Sign::Plus).expect("label >= 1"));
        }
    }
    Ok(SignedRotation::new(word).expect("double occurrence by construction"))
}

/// The path bouquet F_n = [e1, e2, e1, e3, e2, e4, e3, ..., e_n, e_{n-1},
/// e_n]; consecutive chords interlace, non-consecutive do not, so its
/// interlacement graph is the n-vertex path. F_0 is the empty bouquet.
pub fn canonical_path_bouquet(n: usize) -> SignedRotation {
    let letter = |label: usize| Letter::new(label as u32, Sign::Plus).expect("label >= 1");
    let mut word = Vec::with_capacity(2 * n);
    match n {
        0 => {}
        1 => word.extend([letter(1), letter(1)]),
        _ => {
            word.extend([letter(1), letter(2), letter(1)]);
            for k in 3..=n {
                word.extend([letter(k), letter(k - 1)]);
            }
            word.push(letter(n));
        }
    }
    SignedRotation::new(word).expect("double occurrence by construction")
}

/// Exact binomial coefficient; 0 outside the range 0 <= k <= n.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Closed form for K_n (n >= 2): binom(n, n+1-i) at degree i for
/// 1 <= i <= n, plus an extra unit at degree n (even n) or n-1 (odd n).
pub fn complete_poly(n: usize) -> Result<GenusPolynomial, ClosedFormError> {
    if n < 2 {
        return Err(ClosedFormError {
            family: Family::CompleteGraph,
            n,
            min: 2,
        });
    }
    let mut pairs: Vec<(usize, u64)> = (1..=n)
        .map(|i| (i, binomial(n as u64, (n + 1 - i) as u64)))
        .collect();
    if n.is_multiple_of(2) {
        pairs.push((n, 1));
    } else {
        pairs.push((n - 1, 1));
    }
    Ok(GenusPolynomial::from_coeffs(n, pairs))
}

/// Closed form for P_n (n >= 1): a two-term polynomial at degrees n-1 and n
/// whose coefficients are exact thirds of 2^n -+ 1 and 2^{n+1} +- 1 by
/// parity. For n = 1 the lower term is the constant 1.
pub fn path_poly(n: usize) -> Result<GenusPolynomial, ClosedFormError> {
    if n < 1 {
        return Err(ClosedFormError {
            family: Family::Path,
            n,
            min: 1,
        });
    }
    let pow = 1u64 << n;
    let (low, high) = if n.is_multiple_of(2) {
        (pow - 1, 2 * pow + 1)
    } else {
        (pow + 1, 2 * pow - 1)
    };
    assert_eq!(low % 3, 0, "2^n -+ 1 must be divisible by 3");
    assert_eq!(high % 3, 0, "2^(n+1) +- 1 must be divisible by 3");
    Ok(GenusPolynomial::from_coeffs(
        n,
        [(n - 1, low / 3), (n, high / 3)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlace::interlacement_graph;
    use crate::poly::petrial_polynomial;

    fn rot(text: &str) -> SignedRotation {
        text.parse().expect("valid rotation")
    }

    #[test]
    fn complete_bouquet_words() {
        assert_eq!(canonical_complete_bouquet(2).unwrap(), rot("1 2 1 2"));
        assert_eq!(canonical_complete_bouquet(3).unwrap(), rot("1 2 3 1 2 3"));
        assert!(canonical_complete_bouquet(0).is_err());
    }

    #[test]
    fn path_bouquet_words() {
        assert_eq!(canonical_path_bouquet(0), SignedRotation::empty());
        assert_eq!(canonical_path_bouquet(1), rot("1 1"));
        assert_eq!(canonical_path_bouquet(2), rot("1 2 1 2"));
        assert_eq!(canonical_path_bouquet(3), rot("1 2 1 3 2 3"));
        assert_eq!(canonical_path_bouquet(4), rot("1 2 1 3 2 4 3 4"));
    }

    #[test]
    fn family_graphs_recognized() {
        for n in 1..=8 {
            assert!(
                interlacement_graph(&canonical_complete_bouquet(n).unwrap()).is_complete(),
                "K_{n}"
            );
            assert!(
                interlacement_graph(&canonical_path_bouquet(n)).is_path(),
                "P_{n}"
            );
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(30, 15), 155117520);
    }

    #[test]
    fn complete_polynomials() {
        assert_eq!(
            complete_poly(2).unwrap(),
            GenusPolynomial::from_coeffs(2, [(1, 1), (2, 3)])
        );
        assert_eq!(
            complete_poly(3).unwrap(),
            GenusPolynomial::from_coeffs(3, [(1, 1), (2, 4), (3, 3)])
        );
        assert_eq!(
            complete_poly(4).unwrap(),
            GenusPolynomial::from_coeffs(4, [(1, 1), (2, 4), (3, 6), (4, 5)])
        );
        assert!(complete_poly(1).is_err());
    }

    #[test]
    fn path_polynomials() {
        assert_eq!(
            path_poly(1).unwrap(),
            GenusPolynomial::from_coeffs(1, [(0, 1), (1, 1)])
        );
        assert_eq!(
            path_poly(3).unwrap(),
            GenusPolynomial::from_coeffs(3, [(2, 3), (3, 5)])
        );
        assert_eq!(
            path_poly(4).unwrap(),
            GenusPolynomial::from_coeffs(4, [(3, 5), (4, 11)])
        );
        assert!(path_poly(0).is_err());
    }

    #[test]
    fn formulas_match_enumeration() {
        for n in 2..=9 {
            let r = canonical_complete_bouquet(n).unwrap();
            assert_eq!(complete_poly(n).unwrap(), petrial_polynomial(&r).unwrap(), "K_{n}");
        }
        for n in 1..=9 {
            let r = canonical_path_bouquet(n);
            assert_eq!(path_poly(n).unwrap(), petrial_polynomial(&r).unwrap(), "P_{n}");
        }
    }

    #[test]
    fn formula_consistency() {
        for n in 2..=16 {
            let p = complete_poly(n).unwrap();
            assert_eq!(p.evaluate_at_one(), 1 << n, "K_{n} mass");
        }
        for n in 1..=16 {
            let p = path_poly(n).unwrap();
            assert_eq!(p.evaluate_at_one(), 1 << n, "P_{n} mass");
            // Recursion a_0 = 1, a_{n-1} + a_n = 2^n links consecutive orders.
            if n > 1 {
                let prev = path_poly(n - 1).unwrap();
                assert_eq!(prev.coeff(n - 1), p.coeff(n - 1), "shared coefficient");
            } else {
                assert_eq!(p.coeff(0), 1);
            }
        }
    }

    #[test]
    fn family_spec_dispatch() {
        let spec = FamilySpec {
            family: Family::Path,
            n: 3,
        };
        assert_eq!(spec.realization().unwrap(), rot("1 2 1 3 2 3"));
        assert_eq!(spec.polynomial().unwrap(), path_poly(3).unwrap());
        let bad = FamilySpec {
            family: Family::CompleteGraph,
            n: 1,
        };
        assert!(bad.polynomial().is_err());
    }
}
