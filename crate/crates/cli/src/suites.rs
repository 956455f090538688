//! Verification suites runnable from the command line. Each suite replays a
//! family of internal consistency checks sized for interactive use; the full
//! acceptance ranges live in the library's test suite.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use dihedral_growth::asymptotics::{
    binary_entropy, convergent_parameter, diagonal_lower_bound, diagonal_upper_bound,
    growth_exponent_estimates, growth_exponent_limit, growth_leading, reflection_probability,
    relative_leading_error,
};
use dihedral_growth::counting::{growth, growth_max, growth_one_reflection, GrowthQuery};
use dihedral_growth::dihedral::{evaluate_word, reconstruct, word_profile, IndexWord};
use dihedral_growth::generic::{is_generic, sparse_coefficients, GeneratorTuple};
use dihedral_growth::oracle::{
    enumerate_product_set, is_realizable, multiplicity_image, vectors_with_mass_at_most,
    witness_word, MultiplicityVector, DEFAULT_WORD_BUDGET,
};

pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
}

struct Recorder {
    checks: u64,
    failures: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(context());
        }
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult {
            name,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn for_each_word(k: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    let mut word = vec![1usize; n];
    loop {
        visit(&word);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            if word[pos - 1] < k {
                word[pos - 1] += 1;
                break;
            }
            word[pos - 1] = 1;
            pos -= 1;
        }
    }
}

/// Group arithmetic, profiles, and the evaluation/reconstruction identity.
pub fn core_suite() -> SuiteResult {
    let mut rec = Recorder::new();
    for k in 1..=3usize {
        for n in 1..=4usize {
            let coeffs = sparse_coefficients(k, n);
            rec.check(is_generic(&coeffs, n), || {
                format!("core: coefficients for k={k}, n={n} are not generic")
            });
        }
    }
    for k in 1..=3usize {
        for p in 0..=k {
            for n in 1..=5usize {
                let tuple = GeneratorTuple::new(k, p, n).expect("valid parameters");
                let signs = tuple.signs();
                for_each_word(k, n, |indices| {
                    let word = IndexWord::new(indices.to_vec()).expect("valid word");
                    let profile = word_profile(&signs, &word).expect("in range");
                    let direct = evaluate_word(tuple.elements(), &word).expect("in range");
                    let rebuilt =
                        reconstruct(tuple.elements(), profile.multiplicities()).expect("lengths match");
                    rec.check(direct == rebuilt, || {
                        format!("core: word {indices:?} evaluates differently at k={k}, p={p}, n={n}")
                    });
                    let mass: u64 = profile
                        .multiplicities()
                        .iter()
                        .map(|m| m.unsigned_abs())
                        .sum();
                    let counts_ok = profile
                        .counts()
                        .iter()
                        .zip(profile.multiplicities())
                        .all(|(c, m)| m.unsigned_abs() as usize <= *c && c % 2 == m.rem_euclid(2) as usize);
                    rec.check(
                        counts_ok
                            && profile.counts().iter().sum::<usize>() == n
                            && mass % 2 == n as u64 % 2,
                        || format!("core: profile invariant broken for {indices:?} at k={k}, p={p}, n={n}"),
                    );
                });
            }
        }
    }
    rec.finish("core")
}

/// Enumerated multiplicity images match the membership criterion and the
/// closed formula.
pub fn image_suite() -> SuiteResult {
    let mut rec = Recorder::new();
    let mut configs: Vec<(usize, usize, usize)> = Vec::new();
    for k in 1..=3usize {
        for p in 1..=k {
            for n in 1..=4usize {
                configs.push((k, p, n));
            }
        }
    }
    for p in 1..=4usize {
        configs.push((4, p, 3));
    }
    for (k, p, n) in configs {
        let image = multiplicity_image(k, p, n, DEFAULT_WORD_BUDGET).expect("within budget");
        let by_criterion: BTreeSet<MultiplicityVector> = vectors_with_mass_at_most(k, n)
            .into_iter()
            .map(MultiplicityVector::new)
            .filter(|m| is_realizable(m, k, p, n).expect("valid vector"))
            .collect();
        rec.check(image == by_criterion, || {
            format!("image: criterion set mismatch at k={k}, p={p}, n={n}")
        });
        let tuple = GeneratorTuple::new(k, p, n).expect("valid parameters");
        let size = enumerate_product_set(tuple.elements(), n, 10_000_000)
            .expect("within cap")
            .len();
        let formula = growth(&GrowthQuery::new(k, p, n).expect("valid query"));
        rec.check(
            BigInt::from(image.len()) == BigInt::from(formula.clone())
                && BigInt::from(size) == BigInt::from(formula),
            || format!("image: cardinality bridge broken at k={k}, p={p}, n={n}"),
        );
    }
    rec.finish("image")
}

/// Witness words reproduce their multiplicity vectors.
pub fn witness_suite() -> SuiteResult {
    let mut rec = Recorder::new();
    let mut configs: Vec<(usize, usize, usize)> = Vec::new();
    for k in 1..=3usize {
        for p in 1..=k {
            for n in 1..=4usize {
                configs.push((k, p, n));
            }
        }
    }
    for p in 1..=4usize {
        configs.push((4, p, 3));
    }
    for (k, p, n) in configs {
        let signs = GeneratorTuple::new(k, p, n).expect("valid parameters").signs();
        for m in multiplicity_image(k, p, n, DEFAULT_WORD_BUDGET).expect("within budget") {
            match witness_word(&m, k, p, n) {
                Err(e) => rec.check(false, || {
                    format!("witness: no word for {m:?} at k={k}, p={p}, n={n}: {e}")
                }),
                Ok(word) => {
                    let profile = word_profile(&signs, &word).expect("in range");
                    rec.check(
                        word.len() == n && profile.multiplicities() == m.entries(),
                        || format!("witness: round trip failed for {m:?} at k={k}, p={p}, n={n}"),
                    );
                }
            }
        }
    }
    rec.finish("witness")
}

/// Exact coefficient dominance and empirical convergence of the growth
/// values to their leading terms.
pub fn asymptotic_suite() -> SuiteResult {
    let mut rec = Recorder::new();
    let one = BigRational::one();
    for p in 2..=32usize {
        rec.check(
            reflection_probability(p).expect("p >= 1") < one,
            || format!("asymptotic: probability not below 1 at p={p}"),
        );
    }
    for k in 2..=32usize {
        let top = growth_leading(k, 1).expect("valid");
        for p in 2..=k {
            rec.check(top > growth_leading(k, p).expect("valid"), || {
                format!("asymptotic: coefficient dominance fails at k={k}, p={p}")
            });
        }
    }
    let tolerance = BigRational::new(BigInt::from(1), BigInt::from(10));
    for k in 1..=4usize {
        for p in 1..=k {
            let near = relative_leading_error(k, p, 1000).expect("valid");
            let far = relative_leading_error(k, p, 2000).expect("valid");
            rec.check(near <= tolerance, || {
                format!("asymptotic: error above 10% at k={k}, p={p}, n=1000")
            });
            let slack = BigRational::new(BigInt::from(1), BigInt::from(1_000_000));
            rec.check(far <= near + slack, || {
                format!("asymptotic: error grows between n=1000 and n=2000 at k={k}, p={p}")
            });
        }
    }
    for k in 1..=20usize {
        for n in 1..=20usize {
            rec.check(
                growth_one_reflection(k, n).expect("valid")
                    == growth(&GrowthQuery::new(k, 1, n).expect("valid")),
                || format!("asymptotic: one-reflection closed form differs at k={k}, n={n}"),
            );
        }
    }
    rec.finish("asymptotic")
}

/// Two-sided diagonal bounds and the entropy identity for the limit.
pub fn diagonal_suite() -> SuiteResult {
    let mut rec = Recorder::new();
    let parameter = convergent_parameter();
    for n in 1..=40usize {
        let (value, _) = growth_max(n, n).expect("valid");
        let bound = diagonal_upper_bound(n, &parameter).expect("parameter in range");
        rec.check(BigRational::from(BigInt::from(value)) <= bound, || {
            format!("diagonal: upper bound fails at n={n}")
        });
    }
    for n in 1..=120usize {
        let value = growth(&GrowthQuery::new(n, 1, n).expect("valid"));
        rec.check(value >= diagonal_lower_bound(n), || {
            format!("diagonal: lower bound fails at n={n}")
        });
    }
    let estimates = growth_exponent_estimates(40, &[10, 20, 40]).expect("within budget");
    let limit = growth_exponent_limit() + 1e-9;
    for e in &estimates {
        let v = e.to_f64();
        rec.check(v > 1.0 && v <= limit, || {
            format!("diagonal: estimate {v} out of range at n={}", e.n())
        });
    }
    rec.check(estimates[2].scaled() > estimates[0].scaled(), || {
        "diagonal: estimates do not increase from n=10 to n=40".to_string()
    });
    let alpha = 2.0 - std::f64::consts::SQRT_2;
    let value = (alpha + 2.0 * binary_entropy(alpha).expect("in range")).exp2();
    rec.check((value - growth_exponent_limit()).abs() < 1e-9, || {
        format!("diagonal: entropy identity misses the limit: {value}")
    });
    rec.finish("diagonal")
}
