//! Search tool for the open problem on binomial partial-Petrial
//! polynomials: enumerate prime chord diagrams, list every one whose
//! polynomial has exactly two terms, and flag whether its interlacement
//! graph is a path. The tool reports candidates; it draws no conclusion.

use petrial_core::interlace::interlacement_graph;
use petrial_core::poly::{petrial_polynomial, GenusPolynomial};
use petrial_core::rotation::SignedRotation;

use crate::catalog::{for_each_bouquet, CapExceeded, CatalogSpec};

#[derive(Clone, Debug)]
pub struct BinomialHit {
    pub n: usize,
    pub rotation: SignedRotation,
    pub polynomial: GenusPolynomial,
    pub is_path: bool,
}

/// Scans the unsigned prime catalogs for 1 <= n <= max_n. Unsigned suffices
/// because the polynomial depends only on the interlacement graph, which
/// the invariance suite verifies.
pub fn explore_binomial(max_n: usize) -> Result<Vec<BinomialHit>, CapExceeded> {
    if max_n > crate::catalog::CATALOG_CAP {
        return Err(CapExceeded {
            n: max_n,
            cap: crate::catalog::CATALOG_CAP,
        });
    }
    let mut hits = Vec::new();
    for n in 1..=max_n {
        let spec = CatalogSpec {
            n,
            signed: false,
            prime_only: true,
        };
        for_each_bouquet(&spec, |r| {
            let polynomial = petrial_polynomial(r).expect("catalog entries are within cap");
            if polynomial.is_binomial() {
                hits.push(BinomialHit {
                    n,
                    rotation: r.clone(),
                    polynomial,
                    is_path: interlacement_graph(r).is_path(),
                });
            }
        })?;
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use petrial_core::closed::canonical_path_bouquet;

    #[test]
    fn path_bouquets_are_listed_and_k3_is_not() {
        let hits = explore_binomial(3).unwrap();
        for n in 2..=3 {
            let f_n = canonical_path_bouquet(n);
            assert!(
                hits.iter()
                    .any(|h| h.n == n && h.rotation.equivalent(&f_n)),
                "F_{n} missing"
            );
        }
        let k3: SignedRotation = "1 2 3 1 2 3".parse().unwrap();
        assert!(!hits.iter().any(|h| h.rotation.equivalent(&k3)));
        // Every listed path-flagged hit really is a path realization.
        for hit in &hits {
            assert_eq!(
                hit.is_path,
                interlacement_graph(&hit.rotation).is_path()
            );
            assert!(hit.polynomial.is_binomial());
        }
    }
}
