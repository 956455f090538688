//! Canonical maximising generator tuples.
//!
//! A size-`k` subset with `p` reflections attains the maximal product-set
//! size whenever its shift vector admits no nonzero integer relation of
//! small L1 norm. Taking shifts `(2n+1)^0, (2n+1)^1, ...` makes that
//! unconditional: a relation with coefficient mass at most `2n` would be a
//! vanishing base-`(2n+1)` expansion with digits in `[-2n, 2n]`, which
//! forces every digit to zero.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dihedral::{DihedralElement, Orientation};
use crate::{Error, Result};

/// Shift coefficients `(2n+1)^{i-1}` for `i = 1..=k`. The result always
/// passes [`is_generic`] at horizon `n`.
pub fn sparse_coefficients(k: usize, n: usize) -> Vec<BigInt> {
    assert!(k >= 1 && n >= 1, "sparse_coefficients requires k, n >= 1");
    let base = BigInt::from(2 * n + 1);
    let mut coeffs = Vec::with_capacity(k);
    let mut power = BigInt::from(1);
    for _ in 0..k {
        coeffs.push(power.clone());
        power *= &base;
    }
    coeffs
}

/// Whether no nonzero integer vector `u` with `‖u‖₁ <= 2n` satisfies
/// `a · u = 0`. Equivalently: any two L1-mass-`<= n` combinations of the
/// coefficients that agree must be equal coefficient-wise.
///
/// Checked by exhausting the L1 ball of radius `2n`.
pub fn is_generic(coefficients: &[BigInt], n: usize) -> bool {
    assert!(n >= 1, "is_generic requires n >= 1");
    !has_zero_combination(coefficients, 2 * n, &BigInt::zero(), false)
}

/// Depth-first search for `u` with `‖u‖₁ <= budget`, `u != 0`, and
/// `a · u + partial = 0`.
fn has_zero_combination(
    coeffs: &[BigInt],
    budget: usize,
    partial: &BigInt,
    nonzero_seen: bool,
) -> bool {
    let (first, rest) = match coeffs.split_first() {
        None => return nonzero_seen && partial.is_zero(),
        Some(split) => split,
    };
    for mag in 0..=budget {
        for sign in [1i64, -1] {
            if mag == 0 && sign < 0 {
                continue;
            }
            let next = partial + first * (mag as i64 * sign);
            if has_zero_combination(rest, budget - mag, &next, nonzero_seen || mag > 0) {
                return true;
            }
        }
    }
    false
}

/// The canonical generic tuple: sparse shifts, the first `p` elements
/// reflections and the remaining `k - p` translations, valid for words of
/// length up to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTuple {
    elements: Vec<DihedralElement>,
    reflection_count: usize,
    horizon: usize,
}

impl GeneratorTuple {
    pub fn new(k: usize, p: usize, n: usize) -> Result<Self> {
        if k < 1 || n < 1 {
            return Err(Error::InvalidInput(format!(
                "generator tuple requires k, n >= 1, got k={k}, n={n}"
            )));
        }
        if p > k {
            return Err(Error::InvalidInput(format!(
                "reflection count {p} exceeds set size {k}"
            )));
        }
        let elements = sparse_coefficients(k, n)
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                if i < p {
                    DihedralElement::reflection(a)
                } else {
                    DihedralElement::translation(a)
                }
            })
            .collect();
        Ok(GeneratorTuple {
            elements,
            reflection_count: p,
            horizon: n,
        })
    }

    pub fn elements(&self) -> &[DihedralElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reflection_count(&self) -> usize {
        self.reflection_count
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn signs(&self) -> Vec<Orientation> {
        crate::dihedral::signs_of(&self.elements)
    }
}
