//! Closed-form counting of maximal product-set sizes.
//!
//! Everything here is exact: counts are `BigUint` and no floating point is
//! used. The central quantity is the growth value of a `(k, p, n)` query —
//! the largest possible `|S^n|` over size-`k` subsets with `p` reflections —
//! computed from two lattice-point counts:
//!
//! * `count_vectors(x, y)` — integer vectors in `Z^x` of L1 mass exactly `y`;
//! * `count_balanced(x, y)` — such vectors whose positive entries sum to
//!   `ceil(y/2)` and negative entries to `-floor(y/2)`.
//!
//! For `p >= 1` the growth value is
//!
//! ```text
//! C(n+k-p-1, k-p-1)
//!   + sum over l < n,  l ≡ n (mod 2) of  count_vectors(k-p, l)
//!   + sum over l <= n, l ≡ n (mod 2), 1 <= q <= l of
//!       count_balanced(p, q) * count_vectors(k-p, l-q)
//! ```
//!
//! and for `p = 0` it degenerates to the abelian value `C(n+k-1, k-1)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::ops::RangeInclusive;

use crate::{Count, Error, Result};

/// Binomial coefficient with the convention `C(m, r) = 0` for `r > m`.
pub fn binomial(m: usize, r: usize) -> Count {
    if r > m {
        return BigUint::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(m - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of integer vectors in `Z^dim` with L1 mass exactly `mass`.
///
/// For `dim, mass >= 1` this is `sum_s 2^s C(dim, s) C(mass-1, s-1)` where
/// `s` counts the nonzero coordinates; the binomials are updated
/// incrementally across the sum.
pub fn count_vectors(dim: usize, mass: usize) -> Count {
    if mass == 0 {
        return BigUint::one();
    }
    if dim == 0 {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    // s = 1 terms: 2^1 * C(dim,1) * C(mass-1,0)
    let mut pow2 = BigUint::from(2u32);
    let mut choose_dim = BigUint::from(dim); // C(dim, s)
    let mut choose_mass = BigUint::one(); // C(mass-1, s-1)
    let top = dim.min(mass);
    for s in 1..=top {
        total += &pow2 * &choose_dim * &choose_mass;
        if s < top {
            pow2 *= 2u32;
            choose_dim = choose_dim * BigUint::from(dim - s) / BigUint::from(s + 1);
            choose_mass = choose_mass * BigUint::from(mass - s) / BigUint::from(s);
        }
    }
    total
}

/// Number of integer vectors in `Z^dim` with L1 mass `mass` whose positive
/// entries sum to `ceil(mass/2)` and negative entries to `-floor(mass/2)`.
///
/// Defined only for `dim, mass >= 1`.
pub fn count_balanced(dim: usize, mass: usize) -> Result<Count> {
    if dim == 0 || mass == 0 {
        return Err(Error::InvalidInput(format!(
            "balanced count requires dim, mass >= 1, got dim={dim}, mass={mass}"
        )));
    }
    if dim == 1 {
        return Ok(if mass == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    if mass == 1 {
        return Ok(BigUint::from(dim));
    }
    let neg_total = mass / 2; // floor
    let pos_total = mass - neg_total; // ceil
    let top = (dim - 1).min(neg_total);
    // r = number of coordinates with negative entries:
    //   C(dim, r) * C(neg_total - 1, r - 1) * C(pos_total + dim - r - 1, dim - r - 1)
    let mut choose_dim = BigUint::from(dim); // C(dim, r)
    let mut choose_neg = BigUint::one(); // C(neg_total - 1, r - 1)
    let mut choose_pos = binomial(pos_total + dim - 2, dim - 2); // r = 1
    let mut total = BigUint::zero();
    for r in 1..=top {
        total += &choose_dim * &choose_neg * &choose_pos;
        if r < top {
            choose_dim = choose_dim * BigUint::from(dim - r) / BigUint::from(r + 1);
            choose_neg = choose_neg * BigUint::from(neg_total - r) / BigUint::from(r);
            choose_pos =
                choose_pos * BigUint::from(dim - r - 1) / BigUint::from(pos_total + dim - r - 1);
        }
    }
    Ok(total)
}

fn series_mul(a: &[BigUint], b: &[BigUint], len: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Coefficients of `((1+T)/(1-T))^dim` through degree `max_mass`, computed
/// by truncated power-series exponentiation of `1 + 2T + 2T^2 + ...`.
/// Entry `y` equals `count_vectors(dim, y)`.
pub fn vector_count_series(dim: usize, max_mass: usize) -> Vec<Count> {
    let len = max_mass + 1;
    let mut base = vec![BigUint::from(2u32); len];
    base[0] = BigUint::one();
    let mut result = vec![BigUint::zero(); len];
    result[0] = BigUint::one();
    let mut exp = dim;
    while exp > 0 {
        if exp & 1 == 1 {
            result = series_mul(&result, &base, len);
        }
        exp >>= 1;
        if exp > 0 {
            base = series_mul(&base, &base, len);
        }
    }
    result
}

/// Table of vector counts indexed by `(dim, mass)`, filled through the
/// bivariate recurrence
/// `N(x,y) = N(x-1,y) + N(x,y-1) + N(x-1,y-1)` seeded with `N(0,0) = 1`,
/// `N(0,y) = 0` for `y >= 1` (coefficients of `(1-Y)/(1-X-Y-XY)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    entries: Vec<Vec<Count>>,
}

impl SeriesTable {
    pub fn get(&self, dim: usize, mass: usize) -> &Count {
        &self.entries[dim][mass]
    }

    pub fn max_dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn max_mass(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.entries
    }
}

/// One row of the count table: `count_vectors(dim, y)` for `y = 0..=max_mass`.
fn count_row(dim: usize, max_mass: usize) -> Vec<Count> {
    let mut row = vec![BigUint::zero(); max_mass + 1];
    row[0] = BigUint::one();
    for _ in 1..=dim {
        let prev = row;
        let mut next = vec![BigUint::zero(); max_mass + 1];
        next[0] = BigUint::one();
        for y in 1..=max_mass {
            next[y] = &prev[y] + &next[y - 1] + &prev[y - 1];
        }
        row = next;
    }
    row
}

pub fn vector_count_table(max_dim: usize, max_mass: usize) -> SeriesTable {
    let mut entries = Vec::with_capacity(max_dim + 1);
    let mut row = vec![BigUint::zero(); max_mass + 1];
    row[0] = BigUint::one();
    entries.push(row);
    for x in 1..=max_dim {
        let mut next = vec![BigUint::zero(); max_mass + 1];
        next[0] = BigUint::one();
        for y in 1..=max_mass {
            next[y] = &entries[x - 1][y] + &next[y - 1] + &entries[x - 1][y - 1];
        }
        entries.push(next);
    }
    SeriesTable { entries }
}

/// Validated `(k, p, n)` triple: a set size, a reflection count
/// `0 <= p <= k`, and a word length `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthQuery {
    k: usize,
    p: usize,
    n: usize,
}

impl GrowthQuery {
    pub fn new(k: usize, p: usize, n: usize) -> Result<Self> {
        if k < 1 || n < 1 {
            return Err(Error::InvalidInput(format!(
                "growth query requires k, n >= 1, got k={k}, n={n}"
            )));
        }
        if p > k {
            return Err(Error::InvalidInput(format!(
                "reflection count {p} exceeds set size {k}"
            )));
        }
        Ok(GrowthQuery { k, p, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Row of balanced counts for a fixed dimension: index `q` holds
/// `count_balanced(dim, q)`, with a zero placeholder at `q = 0`.
fn balanced_row(dim: usize, max_mass: usize) -> Vec<Count> {
    let mut row = Vec::with_capacity(max_mass + 1);
    row.push(BigUint::zero());
    for q in 1..=max_mass {
        row.push(count_balanced(dim, q).expect("dim, q >= 1"));
    }
    row
}

/// The maximal size of `S^n` over size-`k` subsets with exactly `p`
/// reflections.
pub fn growth(query: &GrowthQuery) -> Count {
    let (k, p, n) = (query.k, query.p, query.n);
    if p == 0 {
        return binomial(n + k - 1, k - 1);
    }
    // Term (I) vanishes at p = k under the binomial convention.
    let mut total = if p < k {
        binomial(n + k - p - 1, k - p - 1)
    } else {
        BigUint::zero()
    };
    let counts = count_row(k - p, n);
    // (II): l < n with l ≡ n (mod 2)
    let mut l = n % 2;
    while l < n {
        total += &counts[l];
        l += 2;
    }
    // (III): 1 <= l <= n with l ≡ n (mod 2), inner sum over 1 <= q <= l
    let balanced = balanced_row(p, n);
    let mut l = if n % 2 == 0 { 2 } else { 1 };
    while l <= n {
        for q in 1..=l {
            total += &balanced[q] * &counts[l - q];
        }
        l += 2;
    }
    total
}

/// Closed form for the one-reflection case:
/// `1 + C(n+k-2, k-2) + sum_s 2^s C(k-1, s) C(n-1, s)`.
/// Equals `growth` at `p = 1` for every `k, n`.
pub fn growth_one_reflection(k: usize, n: usize) -> Result<Count> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidInput(format!(
            "growth requires k, n >= 1, got k={k}, n={n}"
        )));
    }
    let mut total = BigUint::one();
    if k >= 2 {
        total += binomial(n + k - 2, k - 2);
    }
    let top = (k - 1).min(n - 1);
    if top >= 1 {
        let mut pow2 = BigUint::from(2u32);
        let mut choose_k = BigUint::from(k - 1); // C(k-1, s)
        let mut choose_n = BigUint::from(n - 1); // C(n-1, s)
        for s in 1..=top {
            total += &pow2 * &choose_k * &choose_n;
            if s < top {
                pow2 *= 2u32;
                choose_k = choose_k * BigUint::from(k - 1 - s) / BigUint::from(s + 1);
                choose_n = choose_n * BigUint::from(n - 1 - s) / BigUint::from(s + 1);
            }
        }
    }
    Ok(total)
}

/// Maximum of the growth value over all reflection counts `0 <= p <= k`,
/// together with the full set of maximisers in ascending order.
pub fn growth_max(k: usize, n: usize) -> Result<(Count, Vec<usize>)> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidInput(format!(
            "growth requires k, n >= 1, got k={k}, n={n}"
        )));
    }
    let values: Vec<Count> = (0..=k)
        .map(|p| growth(&GrowthQuery::new(k, p, n).expect("validated above")))
        .collect();
    let best = values.iter().max().expect("k+1 >= 2 values").clone();
    let argmax = values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == best)
        .map(|(p, _)| p)
        .collect();
    Ok((best, argmax))
}

/// Argmax set over `p ∈ {1..k}` only, used for table display.
fn optimal_reflections(k: usize, n: usize) -> Vec<usize> {
    let values: Vec<Count> = (1..=k)
        .map(|p| growth(&GrowthQuery::new(k, p, n).expect("1 <= p <= k")))
        .collect();
    let best = values.iter().max().expect("k >= 1 values");
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == best)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Table of optimal reflection counts indexed by word length (rows) and set
/// size (columns). Each cell is the ascending argmax set restricted to at
/// least one reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalTable {
    k_values: Vec<usize>,
    n_values: Vec<usize>,
    cells: Vec<Vec<Vec<usize>>>,
}

impl OptimalTable {
    pub fn k_values(&self) -> &[usize] {
        &self.k_values
    }

    pub fn n_values(&self) -> &[usize] {
        &self.n_values
    }

    /// Cell at row `n_idx`, column `k_idx` (indices into the value lists).
    pub fn cell(&self, n_idx: usize, k_idx: usize) -> &[usize] {
        &self.cells[n_idx][k_idx]
    }
}

pub fn optimal_reflections_table(
    k_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
) -> Result<OptimalTable> {
    let k_values: Vec<usize> = k_range.collect();
    let n_values: Vec<usize> = n_range.collect();
    if k_values.is_empty() || n_values.is_empty() {
        return Err(Error::InvalidInput("table ranges must be nonempty".into()));
    }
    if k_values[0] < 1 || n_values[0] < 1 {
        return Err(Error::InvalidInput("table ranges must start at 1".into()));
    }
    // Cells are independent; rows are evaluated in parallel and collected
    // in order, so the result does not depend on scheduling.
    let cells: Vec<Vec<Vec<usize>>> = n_values
        .par_iter()
        .map(|&n| {
            k_values
                .iter()
                .map(|&k| optimal_reflections(k, n))
                .collect()
        })
        .collect();
    Ok(OptimalTable {
        k_values,
        n_values,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{vectors_with_mass, MultiplicityVector};

    fn big(v: u64) -> Count {
        BigUint::from(v)
    }

    fn growth_kpn(k: usize, p: usize, n: usize) -> Count {
        growth(&GrowthQuery::new(k, p, n).unwrap())
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(40, 20), BigUint::parse_bytes(b"137846528820", 10).unwrap());
    }

    #[test]
    fn count_vectors_base_cases() {
        for x in 0..6 {
            assert_eq!(count_vectors(x, 0), big(1));
        }
        assert_eq!(count_vectors(0, 3), big(0));
        assert_eq!(count_vectors(1, 7), big(2));
    }

    #[test]
    fn count_vectors_small_values() {
        assert_eq!(count_vectors(2, 2), big(8));
        assert_eq!(count_vectors(3, 2), big(18));
        assert_eq!(count_vectors(2, 1), big(4));
    }

    #[test]
    fn count_vectors_matches_enumeration() {
        for x in 0..=5 {
            for y in 0..=8 {
                let expected = vectors_with_mass(x, y).len() as u64;
                assert_eq!(
                    count_vectors(x, y),
                    big(expected),
                    "vector count mismatch at dim={x}, mass={y}"
                );
            }
        }
    }

    #[test]
    fn count_balanced_edge_rows() {
        for x in 1..=6 {
            assert_eq!(count_balanced(x, 1).unwrap(), big(x as u64));
        }
        assert_eq!(count_balanced(1, 1).unwrap(), big(1));
        for y in 2..=6 {
            assert_eq!(count_balanced(1, y).unwrap(), big(0));
        }
    }

    #[test]
    fn count_balanced_small_values() {
        assert_eq!(count_balanced(2, 2).unwrap(), big(2));
        assert_eq!(count_balanced(3, 4).unwrap(), big(12));
    }

    #[test]
    fn count_balanced_rejects_zero_arguments() {
        assert!(count_balanced(0, 3).is_err());
        assert!(count_balanced(3, 0).is_err());
    }

    #[test]
    fn count_balanced_matches_enumeration() {
        for x in 1..=5 {
            for y in 1..=8usize {
                let pos_goal = y.div_ceil(2);
                let neg_goal = y / 2;
                let expected = vectors_with_mass(x, y)
                    .iter()
                    .filter(|m| {
                        let v = MultiplicityVector::new(m.to_vec());
                        v.positive_sum(x) == pos_goal as u64 && v.nonpositive_sum(x) == neg_goal as u64
                    })
                    .count() as u64;
                assert_eq!(
                    count_balanced(x, y).unwrap(),
                    big(expected),
                    "balanced count mismatch at dim={x}, mass={y}"
                );
            }
        }
    }

    #[test]
    fn series_zero_dimension_is_one() {
        let s = vector_count_series(0, 5);
        assert_eq!(s[0], big(1));
        assert!(s[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn series_one_dimension() {
        assert_eq!(vector_count_series(1, 3), vec![big(1), big(2), big(2), big(2)]);
    }

    #[test]
    fn series_two_dimensions() {
        assert_eq!(vector_count_series(2, 2), vec![big(1), big(4), big(8)]);
    }

    #[test]
    fn table_recurrence_values() {
        let t = vector_count_table(3, 3);
        assert_eq!(*t.get(1, 1), big(2));
        assert_eq!(*t.get(2, 2), big(8));
        assert_eq!(t.entries[0], vec![big(1), big(0), big(0), big(0)]);
    }

    #[test]
    fn series_routes_agree_with_closed_form() {
        let table = vector_count_table(6, 50);
        for x in 0..=6 {
            let series = vector_count_series(x, 50);
            for y in 0..=50 {
                let direct = count_vectors(x, y);
                assert_eq!(series[y], direct, "series mismatch at ({x}, {y})");
                assert_eq!(*table.get(x, y), direct, "table mismatch at ({x}, {y})");
            }
        }
    }

    #[test]
    fn growth_paper_value() {
        assert_eq!(growth_kpn(2, 1, 3), big(6));
    }

    #[test]
    fn growth_single_reflection_set_is_constant() {
        for n in 1..=12 {
            assert_eq!(growth_kpn(1, 1, n), big(1));
        }
    }

    #[test]
    fn growth_small_cases() {
        assert_eq!(growth_kpn(2, 1, 2), big(4));
        assert_eq!(growth_kpn(2, 2, 2), big(3));
        assert_eq!(growth_kpn(3, 2, 2), big(8));
    }

    #[test]
    fn growth_zero_reflections_is_abelian() {
        assert_eq!(growth_kpn(3, 0, 3), binomial(5, 2));
        assert_eq!(growth_kpn(2, 0, 2), big(3));
    }

    // Same formula, written as the naive double loop with an explicit parity
    // filter and the standalone closed forms. Guards the parity structure of
    // the implementation above.
    fn growth_naive(k: usize, p: usize, n: usize) -> Count {
        if p == 0 {
            return binomial(n + k - 1, k - 1);
        }
        let mut total = if p < k {
            binomial(n + k - p - 1, k - p - 1)
        } else {
            BigUint::zero()
        };
        for l in 0..n {
            if l % 2 == n % 2 {
                total += count_vectors(k - p, l);
            }
        }
        for l in 1..=n {
            if l % 2 == n % 2 {
                for q in 1..=l {
                    total += count_balanced(p, q).unwrap() * count_vectors(k - p, l - q);
                }
            }
        }
        total
    }

    #[test]
    fn growth_matches_naive_parity_filtered_loop() {
        for k in 1..=5 {
            for p in 0..=k {
                for n in 1..=7 {
                    assert_eq!(
                        growth_kpn(k, p, n),
                        growth_naive(k, p, n),
                        "parity structure mismatch at k={k}, p={p}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn one_reflection_closed_form_values() {
        assert_eq!(growth_one_reflection(2, 3).unwrap(), big(6));
        assert_eq!(growth_one_reflection(3, 2).unwrap(), big(8));
        for n in 1..=9 {
            assert_eq!(growth_one_reflection(1, n).unwrap(), big(1));
        }
    }

    #[test]
    fn one_reflection_closed_form_matches_growth() {
        for k in 1..=10 {
            for n in 1..=10 {
                assert_eq!(
                    growth_one_reflection(k, n).unwrap(),
                    growth_kpn(k, 1, n),
                    "closed form mismatch at k={k}, n={n}"
                );
            }
        }
    }

    #[test]
    fn growth_max_examples() {
        assert_eq!(growth_max(2, 2).unwrap(), (big(4), vec![1]));
        assert_eq!(growth_max(3, 2).unwrap(), (big(8), vec![1, 2]));
        assert_eq!(growth_max(3, 3).unwrap(), (big(17), vec![1]));
        assert_eq!(growth_max(2, 3).unwrap(), (big(6), vec![1]));
    }

    #[test]
    fn optimal_table_small() {
        let t = optimal_reflections_table(2..=4, 2..=3).unwrap();
        assert_eq!(t.cell(0, 0), &[1]); // n=2, k=2
        assert_eq!(t.cell(0, 1), &[1, 2]); // n=2, k=3
        assert_eq!(t.cell(0, 2), &[2, 3]); // n=2, k=4
        assert_eq!(t.cell(1, 2), &[2]); // n=3, k=4
    }

    #[test]
    fn optimal_table_rejects_bad_ranges() {
        assert!(optimal_reflections_table(3..=2, 2..=3).is_err());
        assert!(optimal_reflections_table(0..=2, 2..=3).is_err());
    }

    #[test]
    fn growth_query_validation() {
        assert!(GrowthQuery::new(2, 3, 1).is_err());
        assert!(GrowthQuery::new(0, 0, 1).is_err());
        assert!(GrowthQuery::new(2, 0, 0).is_err());
        assert!(GrowthQuery::new(2, 2, 5).is_ok());
    }
}
