//! Sufficient-condition check for reducibility of Aut of a wedge.
//!
//! The product formula needs the hypothesis that every self-equivalence of
//! the wedge has invertible diagonal components. A sufficient criterion for
//! a pair of summands is that Hom between their homology groups vanishes in
//! every degree, in at least one direction; the certificate records which
//! direction worked for each pair. This is a one-sided check: a pair that
//! fails in both directions leaves reducibility undetermined (it does not
//! disprove it), and callers may override with an explicit assumption.

use crate::abelian::AbelianGroup;
use crate::space::{homology, SpaceDesc, UnsupportedSpace, WedgeInput};

/// True iff Hom(H_k(a), H_k(b)) is trivial for every degree k >= 1. Only
/// finitely many degrees carry homology, so the check is finite.
pub fn hom_trivial_all_degrees(
    a: &SpaceDesc,
    b: &SpaceDesc,
) -> Result<bool, UnsupportedSpace> {
    let ha = homology(a)?;
    let hb = homology(b)?;
    for (degree, ga) in &ha {
        let gb = hb.get(degree).cloned().unwrap_or_else(AbelianGroup::trivial);
        if !ga.hom(&gb).is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Why one unordered pair of summands passed the check: Hom vanishes from
/// the homology of `hom_source` into the homology of `hom_target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    /// 0-based summand indices, first < second.
    pub first: usize,
    pub second: usize,
    pub hom_source: String,
    pub hom_target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducibilityCheck {
    /// Every pair certified in at least one direction (vacuous for k = 1).
    ReducibleSufficient { pairs: Vec<PairCertificate> },
    /// Some pairs failed in both directions; reducibility is undetermined.
    Undetermined { failing: Vec<(usize, usize)> },
}

impl ReducibilityCheck {
    pub fn is_sufficient(&self) -> bool {
        matches!(self, ReducibilityCheck::ReducibleSufficient { .. })
    }
}

/// Run the pairwise criterion over every unordered pair of summands.
pub fn check_reducible(wedge: &WedgeInput) -> ReducibilityCheck {
    let spaces: Vec<&SpaceDesc> = wedge.summands().iter().map(|s| s.space()).collect();
    let mut pairs = Vec::new();
    let mut failing = Vec::new();
    for r in 0..spaces.len() {
        for s in (r + 1)..spaces.len() {
            // Summands are spheres or Moore spaces, so homology never fails.
            let forward =
                hom_trivial_all_degrees(spaces[r], spaces[s]).expect("summand homology");
            let backward =
                hom_trivial_all_degrees(spaces[s], spaces[r]).expect("summand homology");
            if forward {
                pairs.push(PairCertificate {
                    first: r,
                    second: s,
                    hom_source: spaces[r].to_string(),
                    hom_target: spaces[s].to_string(),
                });
            } else if backward {
                pairs.push(PairCertificate {
                    first: r,
                    second: s,
                    hom_source: spaces[s].to_string(),
                    hom_target: spaces[r].to_string(),
                });
            } else {
                failing.push((r, s));
            }
        }
    }
    if failing.is_empty() {
        ReducibilityCheck::ReducibleSufficient { pairs }
    } else {
        ReducibilityCheck::Undetermined { failing }
    }
}
