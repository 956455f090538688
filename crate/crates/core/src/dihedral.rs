//! Arithmetic in the infinite dihedral group and the word-profile machinery.
//!
//! Elements are pairs `(shift, orientation)` acting on the integers as
//! `x -> orientation * x + shift`. Composition follows
//! `(a1, b1) * (a2, b2) = (a1 + b1*a2, b1*b2)`. Shifts are unbounded
//! integers, so products of arbitrarily long words never overflow.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Sign of a group element: `+1` for translations, `-1` for reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    /// The sign as an integer, `+1` or `-1`.
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(Error::InvalidInput(format!(
                "orientation sign must be +1 or -1, got {other}"
            ))),
        }
    }
}

impl Mul for Orientation {
    type Output = Orientation;

    fn mul(self, rhs: Orientation) -> Orientation {
        if self == rhs {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Positive => write!(f, "+1"),
            Orientation::Negative => write!(f, "-1"),
        }
    }
}

/// An element of the infinite dihedral group: the map `x -> b*x + a`
/// stored as the pair `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    shift: BigInt,
    orientation: Orientation,
}

impl DihedralElement {
    pub fn new(shift: impl Into<BigInt>, orientation: Orientation) -> Self {
        DihedralElement {
            shift: shift.into(),
            orientation,
        }
    }

    /// The translation `x -> x + a`.
    pub fn translation(shift: impl Into<BigInt>) -> Self {
        Self::new(shift, Orientation::Positive)
    }

    /// The reflection `x -> -x + a`.
    pub fn reflection(shift: impl Into<BigInt>) -> Self {
        Self::new(shift, Orientation::Negative)
    }

    /// The identity `(0, +1)`.
    pub fn identity() -> Self {
        Self::translation(0)
    }

    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_reflection(&self) -> bool {
        self.orientation == Orientation::Negative
    }

    pub fn is_translation(&self) -> bool {
        self.orientation == Orientation::Positive
    }

    /// Inverse of `(a, b)` is `(-b*a, b)`.
    pub fn inverse(&self) -> Self {
        let shift = match self.orientation {
            Orientation::Positive => -&self.shift,
            Orientation::Negative => self.shift.clone(),
        };
        DihedralElement {
            shift,
            orientation: self.orientation,
        }
    }
}

impl Mul for &DihedralElement {
    type Output = DihedralElement;

    fn mul(self, rhs: &DihedralElement) -> DihedralElement {
        let shift = match self.orientation {
            Orientation::Positive => &self.shift + &rhs.shift,
            Orientation::Negative => &self.shift - &rhs.shift,
        };
        DihedralElement {
            shift,
            orientation: self.orientation * rhs.orientation,
        }
    }
}

impl Mul for DihedralElement {
    type Output = DihedralElement;

    fn mul(self, rhs: DihedralElement) -> DihedralElement {
        &self * &rhs
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shift, self.orientation)
    }
}

/// A word over `k` generator indices. Entries are 1-based, matching the
/// convention used for generator tuples, and the word is never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexWord {
    indices: Vec<usize>,
}

impl IndexWord {
    /// Builds a word from 1-based indices. The word must be nonempty and
    /// every index must be at least 1; the upper bound is checked against
    /// the generator count at evaluation time.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidInput("index word must be nonempty".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0) {
            return Err(Error::InvalidInput(format!(
                "index word entries are 1-based, got {bad}"
            )));
        }
        Ok(IndexWord { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The 1-based indices.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    fn check_bound(&self, k: usize) -> Result<()> {
        match self.indices.iter().find(|&&i| i > k) {
            Some(&bad) => Err(Error::InvalidInput(format!(
                "word index {bad} out of range for {k} generators"
            ))),
            None => Ok(()),
        }
    }
}

/// Counts and signed multiplicities of a word with respect to a sign vector.
///
/// For a word `f` of length `n` over `k` generators, `counts[i]` is the
/// number of occurrences of generator `i+1` and `multiplicities[i]` is the
/// sum, over those occurrences, of the product of the signs of all preceding
/// letters. Three invariants always hold: `|m_i| <= c_i`, the counts sum to
/// `n`, and `m_i ≡ c_i (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    counts: Vec<usize>,
    multiplicities: Vec<i64>,
}

impl Profile {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }
}

/// Computes the profile of `word` under the given generator signs.
pub fn word_profile(signs: &[Orientation], word: &IndexWord) -> Result<Profile> {
    let k = signs.len();
    word.check_bound(k)?;
    let mut counts = vec![0usize; k];
    let mut multiplicities = vec![0i64; k];
    let mut running_sign = 1i64;
    for &idx in word.indices() {
        counts[idx - 1] += 1;
        multiplicities[idx - 1] += running_sign;
        running_sign *= signs[idx - 1].sign();
    }
    Ok(Profile {
        counts,
        multiplicities,
    })
}

/// Left-to-right product of the generators selected by `word`.
pub fn evaluate_word(generators: &[DihedralElement], word: &IndexWord) -> Result<DihedralElement> {
    word.check_bound(generators.len())?;
    let mut acc = DihedralElement::identity();
    for &idx in word.indices() {
        acc = &acc * &generators[idx - 1];
    }
    Ok(acc)
}

/// Rebuilds the product of any word with the given multiplicity vector:
/// `(sum_i m_i * a_i, prod_i b_i^{m_i})`. For every word `f`,
/// `evaluate_word(S, f)` equals `reconstruct(S, profile(f).multiplicities)`.
pub fn reconstruct(generators: &[DihedralElement], multiplicities: &[i64]) -> Result<DihedralElement> {
    if generators.len() != multiplicities.len() {
        return Err(Error::InvalidInput(format!(
            "multiplicity vector has length {}, expected {}",
            multiplicities.len(),
            generators.len()
        )));
    }
    let mut shift = BigInt::zero();
    let mut orientation = Orientation::Positive;
    for (g, &m) in generators.iter().zip(multiplicities) {
        shift += g.shift() * m;
        if g.orientation() == Orientation::Negative && m.rem_euclid(2) == 1 {
            orientation = orientation * Orientation::Negative;
        }
    }
    Ok(DihedralElement { shift, orientation })
}

/// Orientation vector of a generator sequence.
pub fn signs_of(generators: &[DihedralElement]) -> Vec<Orientation> {
    generators.iter().map(|g| g.orientation()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: i64) -> DihedralElement {
        DihedralElement::translation(a)
    }

    fn r(a: i64) -> DihedralElement {
        DihedralElement::reflection(a)
    }

    fn word(idx: &[usize]) -> IndexWord {
        IndexWord::new(idx.to_vec()).unwrap()
    }

    #[test]
    fn translations_compose_by_addition() {
        assert_eq!(&t(1) * &t(10), t(11));
    }

    #[test]
    fn reflection_is_an_involution() {
        for a in [-7, 0, 3, 100] {
            assert_eq!(&r(a) * &r(a), DihedralElement::identity());
        }
    }

    #[test]
    fn four_letter_fold() {
        // (1,+1)(100,-1)(1,+1)(10,+1) = (90,-1)
        let w = [t(1), r(100), t(1), t(10)];
        let prod = w.iter().fold(DihedralElement::identity(), |acc, g| &acc * g);
        assert_eq!(prod, r(90));
    }

    #[test]
    fn inverse_and_identity() {
        for g in [t(5), r(-3), t(0), r(0)] {
            assert_eq!(&g * &g.inverse(), DihedralElement::identity());
            assert_eq!(&g.inverse() * &g, DihedralElement::identity());
            assert_eq!(&g * &DihedralElement::identity(), g);
            assert_eq!(&DihedralElement::identity() * &g, g);
        }
    }

    #[test]
    fn evaluate_word_matches_example() {
        let s = [t(1), t(10), r(100)];
        let got = evaluate_word(&s, &word(&[1, 3, 1, 2])).unwrap();
        assert_eq!(got, r(90));
    }

    #[test]
    fn single_letter_word_is_the_generator() {
        let s = [t(1), t(10), r(100)];
        for i in 1..=3 {
            assert_eq!(evaluate_word(&s, &word(&[i])).unwrap(), s[i - 1]);
        }
    }

    #[test]
    fn squared_reflection_word_is_identity() {
        let s = [r(42), t(7)];
        assert_eq!(
            evaluate_word(&s, &word(&[1, 1])).unwrap(),
            DihedralElement::identity()
        );
    }

    #[test]
    fn evaluate_word_rejects_out_of_range_index() {
        let s = [t(1), t(10)];
        assert!(evaluate_word(&s, &word(&[1, 3])).is_err());
    }

    #[test]
    fn empty_word_is_rejected() {
        assert!(IndexWord::new(vec![]).is_err());
        assert!(IndexWord::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn profile_matches_worked_example() {
        // signs (+1,+1,-1), word (1,3,1,2): c = (2,1,1), m = (0,-1,1)
        let signs = [
            Orientation::Positive,
            Orientation::Positive,
            Orientation::Negative,
        ];
        let p = word_profile(&signs, &word(&[1, 3, 1, 2])).unwrap();
        assert_eq!(p.counts(), &[2, 1, 1]);
        assert_eq!(p.multiplicities(), &[0, -1, 1]);
    }

    #[test]
    fn all_positive_signs_give_multiplicity_equal_count() {
        let signs = [Orientation::Positive; 4];
        let p = word_profile(&signs, &word(&[2, 4, 2, 1, 2])).unwrap();
        for (c, m) in p.counts().iter().zip(p.multiplicities()) {
            assert_eq!(*c as i64, *m);
        }
    }

    #[test]
    fn alternating_word_cancels() {
        // signs (-1,+1), word (1,2,1,2): running signs +1,-1,-1,+1
        let signs = [Orientation::Negative, Orientation::Positive];
        let p = word_profile(&signs, &word(&[1, 2, 1, 2])).unwrap();
        assert_eq!(p.counts(), &[2, 2]);
        assert_eq!(p.multiplicities(), &[0, 0]);
    }

    #[test]
    fn profile_rejects_out_of_range_index() {
        let signs = [Orientation::Positive];
        assert!(word_profile(&signs, &word(&[1, 2])).is_err());
    }

    #[test]
    fn reconstruct_zero_vector_is_identity() {
        let s = [t(1), t(10), r(100)];
        assert_eq!(
            reconstruct(&s, &[0, 0, 0]).unwrap(),
            DihedralElement::identity()
        );
    }

    #[test]
    fn reconstruct_matches_worked_example() {
        let s = [t(1), t(10), r(100)];
        assert_eq!(reconstruct(&s, &[0, -1, 1]).unwrap(), r(90));
    }

    #[test]
    fn reconstruct_mixed_pair() {
        // {(a,-1),(b,+1)} with m = (1,-1) gives (a - b, -1)
        let (a, b) = (13, 4);
        assert_eq!(reconstruct(&[r(a), t(b)], &[1, -1]).unwrap(), r(a - b));
    }

    #[test]
    fn reconstruct_rejects_length_mismatch() {
        assert!(reconstruct(&[t(1)], &[1, 2]).is_err());
        assert!(reconstruct(&[t(1), t(2)], &[1]).is_err());
    }

    #[test]
    fn negative_multiplicity_of_reflection_flips_orientation() {
        // m = -1 on a reflection: odd exponent, so orientation -1
        assert_eq!(reconstruct(&[r(3)], &[-1]).unwrap().orientation(), Orientation::Negative);
        assert_eq!(reconstruct(&[r(3)], &[-2]).unwrap().orientation(), Orientation::Positive);
    }

    fn arb_element() -> impl Strategy<Value = DihedralElement> {
        (any::<i32>(), any::<bool>()).prop_map(|(a, refl)| {
            if refl {
                r(a as i64)
            } else {
                t(a as i64)
            }
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            a in arb_element(),
            b in arb_element(),
            c in arb_element(),
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn profile_invariants_hold(
            k in 1usize..6,
            raw in proptest::collection::vec(0usize..6, 1..40),
            refl in proptest::collection::vec(any::<bool>(), 6),
        ) {
            let signs: Vec<Orientation> = refl[..k]
                .iter()
                .map(|&b| if b { Orientation::Negative } else { Orientation::Positive })
                .collect();
            let indices: Vec<usize> = raw.iter().map(|v| v % k + 1).collect();
            let n = indices.len();
            let w = IndexWord::new(indices).unwrap();
            let p = word_profile(&signs, &w).unwrap();
            let mut abs_sum = 0i64;
            for (c, m) in p.counts().iter().zip(p.multiplicities()) {
                prop_assert!(m.unsigned_abs() as usize <= *c);
                prop_assert_eq!((*c as i64).rem_euclid(2), m.rem_euclid(2));
                abs_sum += m.abs();
            }
            prop_assert_eq!(p.counts().iter().sum::<usize>(), n);
            prop_assert_eq!(abs_sum.rem_euclid(2), (n as i64).rem_euclid(2));
        }

        #[test]
        fn evaluation_agrees_with_reconstruction(
            gens in proptest::collection::vec(arb_element(), 1..5),
            raw in proptest::collection::vec(0usize..5, 1..30),
        ) {
            let k = gens.len();
            let indices: Vec<usize> = raw.iter().map(|v| v % k + 1).collect();
            let w = IndexWord::new(indices).unwrap();
            let p = word_profile(&signs_of(&gens), &w).unwrap();
            prop_assert_eq!(
                evaluate_word(&gens, &w).unwrap(),
                reconstruct(&gens, p.multiplicities()).unwrap()
            );
        }
    }
}
