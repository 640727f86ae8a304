//! Verification suites tying every quantitative statement to an executable
//! check: closed forms against enumeration, face-count laws, rewrite
//! preservation, polynomial structure, intersection-graph invariance, the
//! path reduction, and the performance budget.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use petrial_core::closed::{canonical_complete_bouquet, canonical_path_bouquet, complete_poly, path_poly};
use petrial_core::interlace::{canonical_bytes, interlacement_graph, is_prime};
use petrial_core::poly::{petrial_polynomial, subset_from_mask, GenusPolynomial};
use petrial_core::rewrite::{apply, find_matches, reduce_path_petrial, MatchSite, OpId, TerminalForm};
use petrial_core::rotation::SignedRotation;
use petrial_core::trace::boundary_count;

use crate::catalog::{collect_bouquets, CatalogSpec};
use crate::parallel::parallel_petrial_polynomial;
use crate::random::{Sampler, DEFAULT_SEED};

/// Suite names accepted by `verify`, in reporting order.
pub const SUITES: &[&str] = &[
    "kn",
    "paths",
    "faces",
    "prime-bound",
    "trivial-loop",
    "ops",
    "structure",
    "invariance",
    "reduction",
    "performance",
];

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            seed: DEFAULT_SEED,
            threads: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub rotation: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} suite={} cases={} failures={} wall={:.3}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.cases,
            self.failures.len(),
            self.wall.as_secs_f64()
        )?;
        for failure in self.failures.iter().take(10) {
            match &failure.rotation {
                Some(r) => writeln!(f, "  FAIL [{r}]: {}", failure.detail)?,
                None => writeln!(f, "  FAIL: {}", failure.detail)?,
            }
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}; known: {}", self.0, SUITES.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

struct Checker {
    cases: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn new() -> Checker {
        Checker {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, rotation: Option<&SignedRotation>, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                rotation: rotation.map(|r| r.to_string()),
                detail: detail(),
            });
        }
    }

    fn finish(self, suite: &str, started: Instant) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            cases: self.cases,
            failures: self.failures,
            wall: started.elapsed(),
        }
    }
}

pub fn run_suite(name: &str, config: &Config) -> Result<VerificationReport, UnknownSuite> {
    let started = Instant::now();
    let checker = match name {
        "kn" => suite_kn(),
        "paths" => suite_paths(),
        "faces" => suite_faces(),
        "prime-bound" => suite_prime_bound(),
        "trivial-loop" => suite_trivial_loop(config),
        "ops" => suite_ops(config),
        "structure" => suite_structure(config),
        "invariance" => suite_invariance(config),
        "reduction" => suite_reduction(),
        "performance" => suite_performance(config),
        other => return Err(UnknownSuite(other.to_string())),
    };
    Ok(checker.finish(name, started))
}

pub fn run_all(config: &Config) -> Vec<VerificationReport> {
    SUITES
        .iter()
        .map(|name| run_suite(name, config).expect("known suite"))
        .collect()
}

/// Complete-graph theorem: enumeration equals the closed form for n = 2..12.
fn suite_kn() -> Checker {
    let mut c = Checker::new();
    let started = Instant::now();
    for n in 2..=12 {
        let r = canonical_complete_bouquet(n).expect("n >= 1");
        let enumerated = petrial_polynomial(&r).expect("within cap");
        let formula = complete_poly(n).expect("n >= 2");
        c.check(enumerated == formula, Some(&r), || {
            format!("K_{n}: enumerated {enumerated} != formula {formula}")
        });
    }
    c.check(started.elapsed() < Duration::from_secs(10), None, || {
        format!("kn suite exceeded 10s: {:?}", started.elapsed())
    });
    c
}

/// Path theorem: enumeration equals the closed form for n = 1..12, with the
/// small cases pinned explicitly.
fn suite_paths() -> Checker {
    let mut c = Checker::new();
    let started = Instant::now();
    for n in 1..=12 {
        let r = canonical_path_bouquet(n);
        let enumerated = petrial_polynomial(&r).expect("within cap");
        let formula = path_poly(n).expect("n >= 1");
        c.check(enumerated == formula, Some(&r), || {
            format!("F_{n}: enumerated {enumerated} != formula {formula}")
        });
    }
    for (n, pinned) in [
        (1usize, GenusPolynomial::from_coeffs(1, [(0, 1), (1, 1)])),
        (3, GenusPolynomial::from_coeffs(3, [(2, 3), (3, 5)])),
        (4, GenusPolynomial::from_coeffs(4, [(3, 5), (4, 11)])),
    ] {
        let enumerated = petrial_polynomial(&canonical_path_bouquet(n)).expect("within cap");
        c.check(enumerated == pinned, None, || {
            format!("F_{n}: enumerated {enumerated} != pinned {pinned}")
        });
    }
    c.check(started.elapsed() < Duration::from_secs(10), None, || {
        format!("paths suite exceeded 10s: {:?}", started.elapsed())
    });
    c
}

/// Canonical face-count laws: f([1..n 1..n]) by parity, and f of its
/// partial Petrial by A equals |A| for every nonempty A, n = 1..12.
fn suite_faces() -> Checker {
    let mut c = Checker::new();
    for n in 1..=12usize {
        let r = canonical_complete_bouquet(n).expect("n >= 1");
        let expected = if n % 2 == 0 { 1 } else { 2 };
        c.check(boundary_count(&r) == expected, Some(&r), || {
            format!("f(B_{n}) = {} != {expected}", boundary_count(&r))
        });
        for mask in 1u64..(1 << n) {
            let subset = subset_from_mask(&r, mask);
            let petrialed = r.partial_petrial(&subset).expect("subset valid");
            let f = boundary_count(&petrialed);
            c.check(f == subset.len(), Some(&petrialed), || {
                format!("n={n} |A|={}: f={f}", subset.len())
            });
        }
    }
    c
}

/// True iff the word reads x1..xn -x1..-xn from some starting point, i.e.
/// each occurrence's antipode is its negation. Rotation- and double-flip-
/// invariant, so it can be tested on any representative.
fn alternating_inverse_form(r: &SignedRotation) -> bool {
    let word = r.word();
    let len = word.len();
    let n = len / 2;
    n >= 1 && (0..len).all(|k| word[(k + n) % len] == word[k].negated())
}

/// Prime face bound: over the exhaustive signed catalogs for n = 2..4,
/// primes have f <= n with equality exactly on the alternating inverse form.
fn suite_prime_bound() -> Checker {
    let mut c = Checker::new();
    for n in 2..=4usize {
        let rotations = collect_bouquets(&CatalogSpec {
            n,
            signed: true,
            prime_only: true,
        })
        .expect("within cap");
        for r in &rotations {
            let f = boundary_count(r);
            c.check(f <= n, Some(r), || format!("prime with f={f} > n={n}"));
            let extremal = f == n;
            let pattern = alternating_inverse_form(r);
            c.check(extremal == pattern, Some(r), || {
                format!("f={f}, n={n}, alternating-inverse form={pattern}")
            });
        }
    }
    c
}

/// Trivial-loop law: joins of single loops have f = orientable count + 1.
fn suite_trivial_loop(config: &Config) -> Checker {
    let mut c = Checker::new();
    let mut sampler = Sampler::new(config.seed);
    let orientable_loop: SignedRotation = "1 1".parse().expect("valid");
    let twisted_loop: SignedRotation = "1 -1".parse().expect("valid");
    for _ in 0..500 {
        let loops = sampler.range(0, 10);
        let mut r = SignedRotation::empty();
        let mut orientable = 0;
        for _ in 0..loops {
            if sampler.flip() {
                r = r.join(&orientable_loop);
                orientable += 1;
            } else {
                r = r.join(&twisted_loop);
            }
        }
        let f = boundary_count(&r);
        c.check(f == orientable + 1, Some(&r), || {
            format!("f={f} != m+1={}", orientable + 1)
        });
    }
    c
}

/// Rewrite preservation: 1000 random (rotation, match) applications per
/// operation keep the boundary count and the expected label multiset.
fn suite_ops(config: &Config) -> Checker {
    let mut c = Checker::new();
    let mut sampler = Sampler::new(config.seed);
    for op in [OpId::Op1, OpId::Op2, OpId::Op3, OpId::Op4] {
        let mut applications = 0;
        let mut attempts = 0u64;
        while applications < 1000 && attempts < 400_000 {
            attempts += 1;
            let r = sampler.rotation_sized(1, 8);
            let sites = find_matches(&r, op);
            if sites.is_empty() {
                continue;
            }
            let site = *sampler.pick(&sites);
            applications += 1;
            let step = match apply(&r, site) {
                Ok(step) => step,
                Err(err) => {
                    c.check(false, Some(&r), || format!("{op} at {site}: {err}"));
                    continue;
                }
            };
            let (f_before, f_after) =
                (boundary_count(&step.before), boundary_count(&step.after));
            c.check(f_before == f_after, Some(&r), || {
                format!("{op} at {site}: f {f_before} -> {f_after}")
            });
            let mut expected = r.labels();
            match site {
                MatchSite::Op3 { start } => {
                    let a = r.word()[start].label();
                    let b = r.word()[(start + 1) % r.word().len()].label();
                    expected.retain(|&l| l != a && l != b);
                }
                MatchSite::Op4 { start } => {
                    let a = r.word()[start].label();
                    expected.retain(|&l| l != a);
                }
                _ => {}
            }
            c.check(step.after.labels() == expected, Some(&r), || {
                format!("{op} at {site}: label set changed unexpectedly")
            });
        }
        c.check(applications == 1000, None, || {
            format!("{op}: only {applications} applications found in {attempts} attempts")
        });
    }
    c
}

/// Polynomial structure: interpolation, mass 2^n, max degree n on random
/// bouquets; prime minimum degree; completeness characterization on the
/// exhaustive prime catalogs.
fn suite_structure(config: &Config) -> Checker {
    let mut c = Checker::new();
    let mut sampler = Sampler::new(config.seed);
    for _ in 0..500 {
        let r = sampler.rotation_sized(0, 10);
        let n = r.edge_count();
        let poly = petrial_polynomial(&r).expect("within cap");
        c.check(poly.is_interpolating(), Some(&r), || {
            format!("not interpolating: {poly}")
        });
        c.check(poly.evaluate_at_one() == 1 << n, Some(&r), || {
            format!("mass {} != 2^{n}", poly.evaluate_at_one())
        });
        c.check(poly.max_degree() == Some(n), Some(&r), || {
            format!("max degree {:?} != {n}", poly.max_degree())
        });
        if n >= 2 && is_prime(&r) {
            c.check(poly.min_degree() >= Some(1), Some(&r), || {
                format!("prime bouquet with min degree {:?}", poly.min_degree())
            });
        }
    }
    for n in 2..=4usize {
        let rotations = collect_bouquets(&CatalogSpec {
            n,
            signed: true,
            prime_only: true,
        })
        .expect("within cap");
        for r in &rotations {
            let poly = petrial_polynomial(r).expect("within cap");
            let min_is_one = poly.min_degree() == Some(1);
            let complete = interlacement_graph(r).is_complete();
            c.check(min_is_one == complete, Some(r), || {
                format!("min degree {:?} but complete={complete}", poly.min_degree())
            });
        }
    }
    c
}

/// Intersection-graph invariance: equal canonical graphs give equal
/// polynomials over the exhaustive signed catalogs (n <= 4); the two P_3
/// realizations agree; the polynomial is invariant under partial Petrials.
fn suite_invariance(config: &Config) -> Checker {
    let mut c = Checker::new();
    for n in 1..=4usize {
        let rotations = collect_bouquets(&CatalogSpec {
            n,
            signed: true,
            prime_only: false,
        })
        .expect("within cap");
        let mut by_graph: BTreeMap<Vec<u8>, (SignedRotation, GenusPolynomial)> = BTreeMap::new();
        for r in &rotations {
            let key = canonical_bytes(&interlacement_graph(r)).expect("n <= 8");
            let poly = petrial_polynomial(r).expect("within cap");
            match by_graph.get(&key) {
                None => {
                    by_graph.insert(key, (r.clone(), poly));
                    c.cases += 1;
                }
                Some((witness, expected)) => {
                    c.check(&poly == expected, Some(r), || {
                        format!("polynomial {poly} differs from {expected} of same-graph [{witness}]")
                    });
                }
            }
        }
    }

    let f3: SignedRotation = "1 2 1 3 2 3".parse().expect("valid");
    let alt: SignedRotation = "2 1 2 3 1 3".parse().expect("valid");
    let (p1, p2) = (
        petrial_polynomial(&f3).expect("within cap"),
        petrial_polynomial(&alt).expect("within cap"),
    );
    c.check(p1 == p2, Some(&alt), || {
        format!("P_3 realizations disagree: {p1} vs {p2}")
    });

    let mut sampler = Sampler::new(config.seed);
    for _ in 0..500 {
        let r = sampler.rotation_sized(0, 8);
        let subset = sampler.subset_of(&r);
        let petrialed = r.partial_petrial(&subset).expect("subset valid");
        let (a, b) = (
            petrial_polynomial(&r).expect("within cap"),
            petrial_polynomial(&petrialed).expect("within cap"),
        );
        c.check(a == b, Some(&r), || {
            format!("Petrial orbit changed the polynomial: {a} vs {b}")
        });
    }
    c
}

/// Reduction lemma: every partial Petrial of F_n (n = 1..12) reaches a
/// terminal form with f preserved step by step; terminal tallies reproduce
/// the path coefficients and the a_{n-1} recursion.
fn suite_reduction() -> Checker {
    let mut c = Checker::new();
    let mut isolated_by_n: Vec<u64> = vec![1]; // F_0 is already an isolated vertex.
    for n in 1..=12usize {
        let base = canonical_path_bouquet(n);
        let mut isolated = 0u64;
        let mut one_loop = 0u64;
        for mask in 0u64..(1 << n) {
            let subset = subset_from_mask(&base, mask);
            let petrialed = base.partial_petrial(&subset).expect("subset valid");
            let f_input = boundary_count(&petrialed);
            match reduce_path_petrial(&petrialed) {
                Err(err) => c.check(false, Some(&petrialed), || format!("reduce failed: {err}")),
                Ok((form, steps)) => {
                    let mut ok = true;
                    let mut word = petrialed.clone();
                    for step in &steps {
                        if step.before != word
                            || boundary_count(&step.before) != boundary_count(&step.after)
                        {
                            ok = false;
                            break;
                        }
                        word = step.after.clone();
                    }
                    let f_terminal = boundary_count(&word);
                    let terminal_ok = match form {
                        TerminalForm::IsolatedVertex => {
                            isolated += 1;
                            word.is_empty() && f_terminal == 1
                        }
                        TerminalForm::OneOrientableLoop => {
                            one_loop += 1;
                            word.edge_count() == 1 && f_terminal == 2
                        }
                    };
                    c.check(ok && terminal_ok && f_terminal == f_input, Some(&petrialed), || {
                        format!("steps ok={ok}, terminal ok={terminal_ok}, f {f_input} -> {f_terminal}")
                    });
                }
            }
        }
        let formula = path_poly(n).expect("n >= 1");
        c.check(isolated + one_loop == 1 << n, None, || {
            format!("n={n}: tallies {isolated}+{one_loop} != 2^{n}")
        });
        c.check(
            isolated == formula.coeff(n) && one_loop == formula.coeff(n - 1),
            None,
            || format!("n={n}: tallies ({one_loop},{isolated}) != coefficients"),
        );
        c.check(one_loop == isolated_by_n[n - 1], None, || {
            format!(
                "n={n}: one-loop tally {one_loop} != previous isolated tally {}",
                isolated_by_n[n - 1]
            )
        });
        isolated_by_n.push(isolated);
    }
    c.check(isolated_by_n[0] == 1, None, || "a_0 != 1".to_string());
    c
}

/// Performance budget: the n = 20 canonical complete bouquet enumerates in
/// under 60 seconds single-threaded, sums to 2^20, and the parallel mode
/// returns an identical coefficient map.
fn suite_performance(config: &Config) -> Checker {
    let mut c = Checker::new();
    let r = canonical_complete_bouquet(20).expect("n >= 1");
    let started = Instant::now();
    let serial = petrial_polynomial(&r).expect("within cap");
    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(60), Some(&r), || {
        format!("single-threaded n=20 took {elapsed:?}")
    });
    c.check(serial.evaluate_at_one() == 1 << 20, Some(&r), || {
        format!("mass {} != 2^20", serial.evaluate_at_one())
    });
    let parallel =
        parallel_petrial_polynomial(&r, config.threads.max(2)).expect("within cap");
    c.check(parallel == serial, Some(&r), || {
        "parallel result differs from single-threaded".to_string()
    });
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_reported() {
        let err = run_suite("nope", &Config::default()).unwrap_err();
        assert_eq!(err, UnknownSuite("nope".to_string()));
    }

    #[test]
    fn randomized_suites_are_deterministic_for_a_seed() {
        let config = Config {
            seed: 99,
            threads: 2,
        };
        let a = run_suite("trivial-loop", &config).unwrap();
        let b = run_suite("trivial-loop", &config).unwrap();
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["kn", "paths", "trivial-loop"] {
            let report = run_suite(name, &Config::default()).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
