//! Finitely generated abelian groups in invariant-factor form.
//!
//! These carry every group value in the pipeline: homology of the wedge
//! summands, homotopy groups from the bundled table, and the Hom/Ext
//! groups the reducibility check and the Moore-space automorphism formula
//! consume. Torsion is always stored as a divisibility chain
//! d1 | d2 | ... | dr, so structurally equal groups compare equal and can
//! serve as table keys.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::order::ExtOrder;

/// A finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dr`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    rank: u32,
    torsion: Vec<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupParseError {
    #[error("empty group expression")]
    Empty,
    #[error("unrecognized group term {0:?}")]
    UnrecognizedTerm(String),
    #[error("invalid free rank in {0:?} (want Z^r with r >= 1)")]
    InvalidRank(String),
    #[error("invalid cyclic modulus in {0:?} (want Z/n with n >= 2)")]
    InvalidModulus(String),
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: u32) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// The cyclic group Z/d. `cyclic(1)` is the trivial group; panics on 0.
    pub fn cyclic(d: u64) -> Self {
        assert!(d >= 1, "Z/0 is not a finite cyclic group");
        Self::from_cyclic_factors(0, [BigUint::from(d)])
    }

    /// Build a group from an arbitrary multiset of cyclic orders plus a free
    /// rank, normalizing the torsion into a divisibility chain. Factors equal
    /// to 1 are dropped; a factor of 0 panics.
    pub fn from_cyclic_factors<I>(rank: u32, factors: I) -> Self
    where
        I: IntoIterator<Item = BigUint>,
    {
        let torsion: Vec<BigUint> = factors.into_iter().collect();
        assert!(
            torsion.iter().all(|d| !d.is_zero()),
            "cyclic factor 0 is invalid"
        );
        AbelianGroup {
            rank,
            torsion: normalize(torsion),
        }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let factors = self.torsion.iter().chain(&other.torsion).cloned();
        Self::from_cyclic_factors(self.rank + other.rank, factors)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The invariant factors d1 | d2 | ... | dr, each at least 2.
    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group: infinite when there is a free part, otherwise the
    /// product of the invariant factors (1 for the trivial group).
    pub fn order(&self) -> ExtOrder {
        if self.rank > 0 {
            return ExtOrder::Infinite;
        }
        let mut n = BigUint::one();
        for d in &self.torsion {
            n *= d;
        }
        ExtOrder::Finite(n)
    }

    /// Hom(self, other), computed summand-wise:
    /// Hom(Z, B) = B, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
    pub fn hom(&self, other: &AbelianGroup) -> AbelianGroup {
        let rank = self.rank * other.rank;
        let mut factors = Vec::new();
        for e in &other.torsion {
            for _ in 0..self.rank {
                factors.push(e.clone());
            }
        }
        for d in &self.torsion {
            for e in &other.torsion {
                factors.push(d.gcd(e));
            }
        }
        Self::from_cyclic_factors(rank, factors)
    }

    /// Ext(self, other), computed summand-wise:
    /// Ext(Z, B) = 0, Ext(Z/d, Z) = Z/d, Ext(Z/d, Z/e) = Z/gcd(d, e).
    pub fn ext(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut factors = Vec::new();
        for d in &self.torsion {
            for _ in 0..other.rank {
                factors.push(d.clone());
            }
        }
        for d in &self.torsion {
            for e in &other.torsion {
                factors.push(d.gcd(e));
            }
        }
        Self::from_cyclic_factors(0, factors)
    }

    /// Parse the canonical rendering: "0", "Z", "Z^r", "Z/n" and "+"-joined
    /// sums such as "Z + Z/12". Whitespace-insensitive.
    pub fn parse(text: &str) -> Result<Self, GroupParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(GroupParseError::Empty);
        }
        let mut rank: u32 = 0;
        let mut factors = Vec::new();
        for term in compact.split('+') {
            if term == "0" {
                continue;
            } else if term == "Z" {
                rank += 1;
            } else if let Some(exp) = term.strip_prefix("Z^") {
                let r: u32 = exp
                    .parse()
                    .map_err(|_| GroupParseError::InvalidRank(term.to_string()))?;
                if r < 1 {
                    return Err(GroupParseError::InvalidRank(term.to_string()));
                }
                rank += r;
            } else if let Some(modulus) = term.strip_prefix("Z/") {
                if !modulus.chars().all(|c| c.is_ascii_digit()) || modulus.is_empty() {
                    return Err(GroupParseError::InvalidModulus(term.to_string()));
                }
                let d: BigUint = modulus
                    .parse()
                    .map_err(|_| GroupParseError::InvalidModulus(term.to_string()))?;
                if d < BigUint::from(2u32) {
                    return Err(GroupParseError::InvalidModulus(term.to_string()));
                }
                factors.push(d);
            } else {
                return Err(GroupParseError::UnrecognizedTerm(term.to_string()));
            }
        }
        Ok(Self::from_cyclic_factors(rank, factors))
    }
}

impl fmt::Display for AbelianGroup {
    /// Canonical rendering: "0", "Z", "Z^r", "Z/n", "+"-joined.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Fold an arbitrary multiset of cyclic orders into invariant factors.
///
/// Repeatedly replaces incomparable pairs (a, b) by (gcd, lcm) — this keeps
/// the group unchanged — until divisibility is total, then sorts ascending.
fn normalize(mut factors: Vec<BigUint>) -> Vec<BigUint> {
    factors.retain(|d| !d.is_one());
    loop {
        let mut changed = false;
        for i in 0..factors.len() {
            for j in (i + 1)..factors.len() {
                if !(&factors[j] % &factors[i]).is_zero() {
                    let g = factors[i].gcd(&factors[j]);
                    let l = factors[i].lcm(&factors[j]);
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    factors.retain(|d| !d.is_one());
    factors.sort();
    factors
}

/// Euler's totient of q.
pub fn euler_phi(q: u64) -> u64 {
    assert!(q >= 1);
    let mut phi = q;
    let mut m = q;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            phi = phi / p * (p - 1);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

/// Order of the automorphism group of the cyclic group Z/q, q >= 2.
pub fn aut_cyclic_order(q: u64) -> ExtOrder {
    assert!(q >= 2);
    ExtOrder::finite(euler_phi(q))
}
