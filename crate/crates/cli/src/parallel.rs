//! Block-parallel polynomial computation: the subset space is split by
//! fixing top bits, workers enumerate disjoint blocks, and the partial
//! coefficient maps merge by addition, so the result is identical to the
//! single-threaded one.

use petrial_core::poly::{petrial_polynomial_block, GenusPolynomial, PolyError};
use petrial_core::rotation::SignedRotation;

/// Computes the partial-Petrial polynomial on up to `threads` workers.
pub fn parallel_petrial_polynomial(
    r: &SignedRotation,
    threads: usize,
) -> Result<GenusPolynomial, PolyError> {
    let n = r.edge_count();
    let threads = threads.max(1);
    // Enough blocks to feed every worker; at most 2^n exist.
    let fixed_bits = threads
        .next_power_of_two()
        .trailing_zeros()
        .min(n as u32);
    let blocks = 1u64 << fixed_bits;
    if threads == 1 || blocks == 1 {
        return petrial_polynomial_block(r, 0, 0);
    }

    let mut partials: Vec<Result<GenusPolynomial, PolyError>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|worker| {
                scope.spawn(move || {
                    let mut acc: Option<GenusPolynomial> = None;
                    let mut block = worker as u64;
                    while block < blocks {
                        let part = petrial_polynomial_block(r, fixed_bits, block)?;
                        match &mut acc {
                            Some(poly) => poly.merge(&part),
                            None => acc = Some(part),
                        }
                        block += threads as u64;
                    }
                    Ok(acc.unwrap_or_else(|| GenusPolynomial::from_coeffs(r.edge_count(), [])))
                })
            })
            .collect();
        for handle in handles {
            partials.push(handle.join().expect("worker does not panic"));
        }
    });

    let mut merged = GenusPolynomial::from_coeffs(n, []);
    for partial in partials {
        merged.merge(&partial?);
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use petrial_core::poly::petrial_polynomial;

    #[test]
    fn matches_single_threaded() {
        for text in ["", "1 1", "1 -2 3 1 2 -3", "1 2 1 3 2 4 3 5 4 5"] {
            let r: SignedRotation = text.parse().unwrap();
            let serial = petrial_polynomial(&r).unwrap();
            for threads in [1, 2, 3, 4, 8] {
                assert_eq!(
                    parallel_petrial_polynomial(&r, threads).unwrap(),
                    serial,
                    "{text:?} x{threads}"
                );
            }
        }
    }
}
