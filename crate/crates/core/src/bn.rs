//! Closed-form length arithmetic for the one-relator family
//! `B_n = <a, b | ba = b^n>` with `n >= 2`.
//!
//! Every element has a unique normal form `a^k b^m`; multiplication and
//! factorization lengths are governed by how many times a power of `b` can
//! absorb the letter `a` through the defining relation.  All operations here
//! are exact closed forms — the enumeration engine in [`crate::fp`] recovers
//! the same data independently, which is what the verification suites
//! exploit.

use num_rational::Ratio;
use thiserror::Error;

use crate::lengthsets::LengthSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BnError {
    #[error("the family is defined for n >= {min}, got n = {n}")]
    ModulusTooSmall { n: u64, min: u64 },
    #[error("cannot combine elements of B_{left} and B_{right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("unions of length sets are indexed by k >= 2, got {0}")]
    UnionIndexTooSmall(u64),
    #[error("{set} is not the length set of any element of B_{n}")]
    NotInSystem { set: LengthSet, n: u64 },
    #[error("({base}, {steps}) violates base > steps")]
    InvalidSystemPoint { base: u64, steps: u64 },
    #[error("words over B_n use the letters 'a' and 'b', got {0:?}")]
    InvalidLetter(char),
}

/// Generator of `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnLetter {
    A,
    B,
}

impl BnLetter {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Self::A),
            'b' => Some(Self::B),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Self::A => 'a',
            Self::B => 'b',
        }
    }

    pub fn parse_word(word: &str) -> Result<Vec<Self>, BnError> {
        word.chars()
            .map(|c| Self::from_char(c).ok_or(BnError::InvalidLetter(c)))
            .collect()
    }
}

fn check_modulus(n: u64, min: u64) -> Result<(), BnError> {
    if n < min {
        return Err(BnError::ModulusTooSmall { n, min });
    }
    Ok(())
}

/// Element of `B_n` in normal form `a^k b^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BnElement {
    n: u64,
    a_exp: u64,
    b_exp: u64,
}

impl BnElement {
    pub fn new(n: u64, a_exp: u64, b_exp: u64) -> Result<Self, BnError> {
        check_modulus(n, 2)?;
        Ok(Self { n, a_exp, b_exp })
    }

    pub fn identity(n: u64) -> Result<Self, BnError> {
        Self::new(n, 0, 0)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a_exp(&self) -> u64 {
        self.a_exp
    }

    pub fn b_exp(&self) -> u64 {
        self.b_exp
    }

    pub fn is_identity(&self) -> bool {
        self.a_exp == 0 && self.b_exp == 0
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self, BnError> {
        if self.n != rhs.n {
            return Err(BnError::ModulusMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        // a^k b^m . a^r b^s: each of the r letters a is absorbed into the
        // b-block as n-1 extra b's, unless there is no b-block to absorb it.
        Ok(if self.b_exp == 0 {
            Self {
                n: self.n,
                a_exp: self.a_exp + rhs.a_exp,
                b_exp: rhs.b_exp,
            }
        } else {
            Self {
                n: self.n,
                a_exp: self.a_exp,
                b_exp: self.b_exp + (self.n - 1) * rhs.a_exp + rhs.b_exp,
            }
        })
    }

    /// Folds a word over `{a, b}` into its normal form.
    pub fn normalize(n: u64, word: &[BnLetter]) -> Result<Self, BnError> {
        let mut acc = Self::identity(n)?;
        for letter in word {
            match letter {
                BnLetter::A => {
                    if acc.b_exp == 0 {
                        acc.a_exp += 1;
                    } else {
                        acc.b_exp += n - 1;
                    }
                }
                BnLetter::B => acc.b_exp += 1,
            }
        }
        Ok(acc)
    }

    /// The normal-form word `a^k b^m` itself.
    pub fn canonical_word(&self) -> Vec<BnLetter> {
        let mut word = Vec::with_capacity((self.a_exp + self.b_exp) as usize);
        word.extend(std::iter::repeat(BnLetter::A).take(self.a_exp as usize));
        word.extend(std::iter::repeat(BnLetter::B).take(self.b_exp as usize));
        word
    }

    /// Set of factorization lengths of this element.
    ///
    /// For `a^k b^m` this is the progression from `k + m - q(n-2)` to
    /// `k + m` with difference `n - 2`, where `q = ap_steps(m, n)`; the
    /// identity alone has `{0}`.
    pub fn length_set(&self) -> LengthSet {
        if self.is_identity() {
            return LengthSet::unit();
        }
        let q = ap_steps(self.b_exp, self.n);
        let start = self.a_exp + self.b_exp - q * (self.n - 2);
        LengthSet::progression(start, self.n - 2, q)
    }
}

/// Progression step count of `b^m` in `B_n`: one less than `m / (n-1)` when
/// `n - 1` divides `m != 0`, the floor otherwise.
pub fn ap_steps(m: u64, n: u64) -> u64 {
    assert!(n >= 2);
    if m == 0 {
        0
    } else if m % (n - 1) == 0 {
        m / (n - 1) - 1
    } else {
        m / (n - 1)
    }
}

/// Same count, computed by cascaded division: divide by `n`, feed
/// `quotient + remainder` back in, and sum the quotients until one vanishes.
pub fn ap_steps_by_division(m: u64, n: u64) -> u64 {
    assert!(n >= 2);
    let mut total = 0;
    let mut cur = m;
    loop {
        let q = cur / n;
        if q == 0 {
            return total;
        }
        total += q;
        cur = q + cur % n;
    }
}

/// Finds an element of `B_n` whose length set is exactly `set`, if one
/// exists.
///
/// The witness is deterministic: for a progression starting at `x` with `q`
/// steps it is `a^(x-q-1) b^(q(n-1)+1)`, and the identity for `{0}`.
pub fn system_membership(set: &LengthSet, n: u64) -> Result<Option<BnElement>, BnError> {
    check_modulus(n, 2)?;
    if set.values() == [0] {
        return Ok(Some(BnElement::identity(n)?));
    }
    // Shape test: gaps all equal to n - 2, so for n = 2 only singletons pass.
    if !set.delta().iter().all(|&gap| gap == n - 2) {
        return Ok(None);
    }
    let x = set.min();
    let q = (set.len() - 1) as u64;
    if x <= q {
        return Ok(None);
    }
    let witness = BnElement::new(n, x - q - 1, q * (n - 1) + 1)?;
    debug_assert_eq!(witness.length_set(), *set);
    Ok(Some(witness))
}

/// Union of all length sets of `B_n` containing `ell >= 2`: the progression
/// from `ell - q(n-2)` with `q + ell - 1` steps of size `n - 2`, where
/// `q = ap_steps(ell, n)`.
pub fn union_lengths(ell: u64, n: u64) -> Result<LengthSet, BnError> {
    check_modulus(n, 2)?;
    if ell < 2 {
        return Err(BnError::UnionIndexTooSmall(ell));
    }
    let q = ap_steps(ell, n);
    let start = ell - q * (n - 2);
    Ok(LengthSet::progression(start, n - 2, q + ell - 1))
}

/// Largest factorization length over all elements with a factorization of
/// length `k`.
pub fn rho_k(k: u64, n: u64) -> u64 {
    assert!(k >= 1);
    assert!(n >= 2);
    if k == 1 {
        1
    } else {
        k + (n - 2) * (k - 1)
    }
}

/// Supremum of elasticities over all elements, and whether any single
/// element attains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElasticitySup {
    pub value: Ratio<u64>,
    pub attained: bool,
}

pub fn elasticity_sup(n: u64) -> ElasticitySup {
    assert!(n >= 2);
    if n == 2 {
        ElasticitySup {
            value: Ratio::from_integer(1),
            attained: true,
        }
    } else {
        ElasticitySup {
            value: Ratio::from_integer(n - 1),
            attained: false,
        }
    }
}

/// Catenary degree of `B_n` under the word-edit distance.
pub fn catenary_constant(n: u64) -> u64 {
    assert!(n >= 2);
    n - 1
}

/// Image of a length set under `L -> (min L, step count)`.
///
/// These pairs form a commutative monoid under componentwise addition whose
/// every point satisfies `base > steps` (or is the origin); its atoms are
/// exactly the diagonal-adjacent points `(k, k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemPoint {
    base: u64,
    steps: u64,
}

impl SystemPoint {
    pub fn new(base: u64, steps: u64) -> Result<Self, BnError> {
        if base <= steps && !(base == 0 && steps == 0) {
            return Err(BnError::InvalidSystemPoint { base, steps });
        }
        Ok(Self { base, steps })
    }

    pub fn zero() -> Self {
        Self { base: 0, steps: 0 }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn add(&self, rhs: &Self) -> Self {
        // base_1 > steps_1 and base_2 > steps_2 are preserved by addition,
        // and the origin is neutral, so the sum never needs re-validation.
        Self {
            base: self.base + rhs.base,
            steps: self.steps + rhs.steps,
        }
    }

    pub fn is_atom(&self) -> bool {
        self.base == self.steps + 1
    }
}

/// Maps a member of the system of length sets of `B_n` (`n >= 3`) to its
/// [`SystemPoint`].
pub fn phi(set: &LengthSet, n: u64) -> Result<SystemPoint, BnError> {
    check_modulus(n, 3)?;
    match system_membership(set, n)? {
        None => Err(BnError::NotInSystem {
            set: set.clone(),
            n,
        }),
        Some(_) => {
            if set.values() == [0] {
                Ok(SystemPoint::zero())
            } else {
                SystemPoint::new(set.min(), (set.len() - 1) as u64)
            }
        }
    }
}
