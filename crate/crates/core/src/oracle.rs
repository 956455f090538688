//! Brute-force ground truth for the closed-form counts.
//!
//! Three independent routes live here: direct expansion of product sets by
//! frontier iteration, exhaustive enumeration of the multiplicity vectors
//! reachable by length-`n` words, and the arithmetic criterion that decides
//! membership without enumeration (together with an explicit witness word
//! for every member).

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dihedral::{DihedralElement, IndexWord};
use crate::generic::GeneratorTuple;
use crate::{Error, Result};

/// Default cap on the number of elements a product-set level may hold.
/// Exceeding the cap is a hard error, never a truncation.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000_000;

/// Default cap on the number of words enumerated by
/// [`multiplicity_image`].
pub const DEFAULT_WORD_BUDGET: u64 = 10_000_000;

/// A candidate multiplicity vector `m ∈ Z^k`. The reflection mass `q`
/// (L1 mass of the first `p` coordinates) and total mass `l` are always
/// recomputed from the entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector {
    entries: Vec<i64>,
}

impl MultiplicityVector {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiplicityVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// L1 mass of the first `p` coordinates.
    pub fn reflection_mass(&self, p: usize) -> u64 {
        self.entries[..p].iter().map(|m| m.unsigned_abs()).sum()
    }

    /// L1 mass of the whole vector.
    pub fn total_mass(&self) -> u64 {
        self.entries.iter().map(|m| m.unsigned_abs()).sum()
    }

    /// Sum of the positive entries among the first `p` coordinates.
    pub fn positive_sum(&self, p: usize) -> u64 {
        self.entries[..p]
            .iter()
            .filter(|&&m| m > 0)
            .map(|m| m.unsigned_abs())
            .sum()
    }

    /// Absolute sum of the nonpositive entries among the first `p`
    /// coordinates.
    pub fn nonpositive_sum(&self, p: usize) -> u64 {
        self.entries[..p]
            .iter()
            .filter(|&&m| m <= 0)
            .map(|m| m.unsigned_abs())
            .sum()
    }
}

/// The set `S^j` of products of exactly `j` generators. Levels are not
/// cumulative: `S^{j+1}` is built from `S^j` alone.
#[derive(Clone, Debug)]
pub struct ProductSetLevel {
    level: usize,
    elements: HashSet<DihedralElement>,
}

impl ProductSetLevel {
    /// `S^1`, the deduplicated generator set itself.
    pub fn first(generators: &[DihedralElement]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("generator set must be nonempty".into()));
        }
        Ok(ProductSetLevel {
            level: 1,
            elements: generators.iter().cloned().collect(),
        })
    }

    /// `S^{j+1} = { x * s : x ∈ S^j, s ∈ S }`, erroring out as soon as the
    /// level would exceed `cap` elements.
    pub fn expand(&self, generators: &[DihedralElement], cap: usize) -> Result<Self> {
        let mut next = HashSet::with_capacity(self.elements.len().saturating_mul(2));
        for x in &self.elements {
            for s in generators {
                next.insert(x * s);
                if next.len() > cap {
                    return Err(Error::CapacityExceeded(format!(
                        "product-set level {} exceeds the cap of {} elements",
                        self.level + 1,
                        cap
                    )));
                }
            }
        }
        Ok(ProductSetLevel {
            level: self.level + 1,
            elements: next,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn elements(&self) -> &HashSet<DihedralElement> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Computes `S^n` by `n - 1` frontier expansions with per-level
/// deduplication.
pub fn enumerate_product_set(
    generators: &[DihedralElement],
    n: usize,
    cap: usize,
) -> Result<ProductSetLevel> {
    if n < 1 {
        return Err(Error::InvalidInput("product-set exponent must be >= 1".into()));
    }
    let mut level = ProductSetLevel::first(generators)?;
    if level.len() > cap {
        return Err(Error::CapacityExceeded(format!(
            "generator set exceeds the cap of {cap} elements"
        )));
    }
    for _ in 1..n {
        level = level.expand(generators, cap)?;
    }
    Ok(level)
}

fn check_kpn(k: usize, p: usize, n: usize) -> Result<()> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidInput(format!(
            "requires k, n >= 1, got k={k}, n={n}"
        )));
    }
    if p < 1 || p > k {
        return Err(Error::InvalidInput(format!(
            "reflection count must satisfy 1 <= p <= k, got p={p}, k={k}"
        )));
    }
    Ok(())
}

/// Enumerates all `k^n` index words and collects the distinct multiplicity
/// vectors their profiles produce, for the sign pattern of `p` reflections
/// followed by `k - p` translations.
pub fn multiplicity_image(
    k: usize,
    p: usize,
    n: usize,
    word_budget: u64,
) -> Result<BTreeSet<MultiplicityVector>> {
    check_kpn(k, p, n)?;
    let words = (k as u128)
        .checked_pow(n as u32)
        .filter(|&w| w <= word_budget as u128)
        .ok_or_else(|| {
            Error::CapacityExceeded(format!(
                "k^n = {k}^{n} exceeds the word budget of {word_budget}"
            ))
        })?;
    let _ = words;
    let signs: Vec<i64> = (0..k).map(|i| if i < p { -1 } else { 1 }).collect();
    let mut image = BTreeSet::new();
    let mut word = vec![1usize; n];
    loop {
        let mut m = vec![0i64; k];
        let mut running = 1i64;
        for &idx in &word {
            m[idx - 1] += running;
            running *= signs[idx - 1];
        }
        image.insert(MultiplicityVector::new(m));
        // odometer over [1..k]^n
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(image);
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

/// Decides whether `m` is the multiplicity vector of some length-`n` word,
/// without constructing one. With `q` the reflection mass and `l <= n` the
/// total mass, `m` is attainable iff
///
/// 1. `n ≡ l (mod 2)`,
/// 2. the positive reflection entries sum to `ceil(q/2)` and the
///    nonpositive ones to `-floor(q/2)`,
/// 3. when `q = 0`, either `l < n` or every translation entry is
///    nonnegative.
pub fn is_realizable(m: &MultiplicityVector, k: usize, p: usize, n: usize) -> Result<bool> {
    check_kpn(k, p, n)?;
    if m.len() != k {
        return Err(Error::InvalidInput(format!(
            "multiplicity vector has length {}, expected {k}",
            m.len()
        )));
    }
    let l = m.total_mass();
    if l > n as u64 {
        return Err(Error::InvalidInput(format!(
            "total mass {l} exceeds word length {n}"
        )));
    }
    if !(n as u64 - l).is_multiple_of(2) {
        return Ok(false);
    }
    let q = m.reflection_mass(p);
    if m.positive_sum(p) != q.div_ceil(2) || m.nonpositive_sum(p) != q / 2 {
        return Ok(false);
    }
    if q == 0 && l == n as u64 && m.entries()[p..].iter().any(|&v| v < 0) {
        return Ok(false);
    }
    Ok(true)
}

/// Builds an explicit length-`n` word whose profile multiplicities equal
/// `m`, following the constructive layout: nonnegative translation blocks,
/// then the alternating reflection schedule with the negative translation
/// blocks inserted after its first entry, then padding with generator 1.
pub fn witness_word(m: &MultiplicityVector, k: usize, p: usize, n: usize) -> Result<IndexWord> {
    if !is_realizable(m, k, p, n)? {
        return Err(Error::InvalidInput(
            "multiplicity vector is not attainable by any word".into(),
        ));
    }
    let entries = m.entries();
    let q = m.reflection_mass(p) as usize;
    let l = m.total_mass() as usize;

    // Reflection schedule: ascending indices with positive entries repeated
    // m_i times, interleaved with the negative ones.
    let positive_refl: Vec<usize> = (1..=p)
        .flat_map(|i| std::iter::repeat_n(i, entries[i - 1].max(0) as usize))
        .collect();
    let negative_refl: Vec<usize> = (1..=p)
        .flat_map(|i| std::iter::repeat_n(i, (-entries[i - 1]).max(0) as usize))
        .collect();
    let mut schedule = Vec::with_capacity(q);
    for j in 0..q {
        if j % 2 == 0 {
            schedule.push(positive_refl[j / 2]);
        } else {
            schedule.push(negative_refl[j / 2]);
        }
    }

    let positive_trans: Vec<usize> = (p + 1..=k)
        .flat_map(|i| std::iter::repeat_n(i, entries[i - 1].max(0) as usize))
        .collect();
    let negative_trans: Vec<usize> = (p + 1..=k)
        .flat_map(|i| std::iter::repeat_n(i, (-entries[i - 1]).max(0) as usize))
        .collect();

    let mut word = Vec::with_capacity(n);
    word.extend_from_slice(&positive_trans);
    if q > 0 {
        word.push(schedule[0]);
        word.extend_from_slice(&negative_trans);
        word.extend_from_slice(&schedule[1..]);
        word.extend(std::iter::repeat_n(1, n - l));
    } else if l == n {
        // All entries are nonnegative translations; the blocks already fill
        // the word.
    } else {
        word.push(1);
        word.extend_from_slice(&negative_trans);
        word.extend(std::iter::repeat_n(1, n - l - 1));
    }
    debug_assert_eq!(word.len(), n);
    IndexWord::new(word)
}

/// Samples `trials` random sets with `p` reflections and `k - p`
/// translations, shifts uniform in `[-coefficient_bound, coefficient_bound]`
/// and elements pairwise distinct, and returns the largest `|S^n|` observed.
/// Deterministic for a fixed seed.
pub fn random_set_audit(
    k: usize,
    p: usize,
    n: usize,
    trials: usize,
    coefficient_bound: i64,
    seed: u64,
) -> Result<usize> {
    if k < 1 || n < 1 || p > k {
        return Err(Error::InvalidInput(format!(
            "audit requires k, n >= 1 and p <= k, got k={k}, p={p}, n={n}"
        )));
    }
    if trials < 1 {
        return Err(Error::InvalidInput("audit requires at least one trial".into()));
    }
    if coefficient_bound < 0 {
        return Err(Error::InvalidInput("coefficient bound must be nonnegative".into()));
    }
    let distinct_shifts = 2 * coefficient_bound as u64 + 1;
    if (p as u64) > distinct_shifts || ((k - p) as u64) > distinct_shifts {
        return Err(Error::InvalidInput(format!(
            "cannot pick {k} distinct elements with shifts in [-{coefficient_bound}, {coefficient_bound}]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0usize;
    for _ in 0..trials {
        let set = loop {
            let candidate: Vec<DihedralElement> = (0..k)
                .map(|i| {
                    let shift = rng.gen_range(-coefficient_bound..=coefficient_bound);
                    if i < p {
                        DihedralElement::reflection(shift)
                    } else {
                        DihedralElement::translation(shift)
                    }
                })
                .collect();
            let distinct: HashSet<&DihedralElement> = candidate.iter().collect();
            if distinct.len() == k {
                break candidate;
            }
        };
        let size = enumerate_product_set(&set, n, DEFAULT_ELEMENT_CAP)?.len();
        best = best.max(size);
    }
    Ok(best)
}

/// All integer vectors in `Z^dim` with L1 mass exactly `mass`.
pub fn vectors_with_mass(dim: usize, mass: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(dim);
    collect_vectors(dim, mass, true, &mut prefix, &mut out);
    out
}

/// All integer vectors in `Z^dim` with L1 mass at most `mass`.
pub fn vectors_with_mass_at_most(dim: usize, mass: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(dim);
    collect_vectors(dim, mass, false, &mut prefix, &mut out);
    out
}

fn collect_vectors(
    remaining: usize,
    budget: usize,
    exact: bool,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if remaining == 0 {
        if !exact || budget == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for magnitude in 0..=budget {
        for sign in [1i64, -1] {
            if magnitude == 0 && sign < 0 {
                continue;
            }
            prefix.push(magnitude as i64 * sign);
            collect_vectors(remaining - 1, budget - magnitude, exact, prefix, out);
            prefix.pop();
        }
    }
}

/// Convenience: `|S^n|` on the canonical generic tuple.
pub fn generic_product_set_size(k: usize, p: usize, n: usize, cap: usize) -> Result<usize> {
    let tuple = GeneratorTuple::new(k, p, n)?;
    Ok(enumerate_product_set(tuple.elements(), n, cap)?.len())
}
