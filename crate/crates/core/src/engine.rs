//! Assembles the total order of Aut(ΣX_1 ∨ ... ∨ ΣX_k).
//!
//! For each summand j the factor list is Aut(ΣX_j) together with
//! [ΣX_j, Σ∧^c B] for every basic commutator c ≠ z_j up to the weight
//! bound, where B = X_1 ∨ ... ∨ X_k is the wedge of desuspensions. The
//! total is the product of all factor orders. Weight-1 commutators z_i
//! contribute the pair factors [ΣX_j, ΣX_i] for all ordered pairs (j, i)
//! with j ≠ i, so the two-summand case carries both directed pair factors.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::hall::{basic_commutators_costed, count_up_to_weight, Commutator};
use crate::order::ExtOrder;
use crate::reducibility::{check_reducible, PairCertificate, ReducibilityCheck};
use crate::smash::{smash_power, suspend};
use crate::space::{SpaceDesc, WedgeInput};
use crate::table::{mapping_group_order, summand_aut_order, GroupTable, OrderRule};

#[derive(Clone, Debug, Default)]
pub struct EngineOptions {
    /// Proceed even when the reducibility check is undetermined.
    pub assume_reducible: bool,
    /// Override the commutator weight bound (defaults to `max_weight_bound`).
    pub max_weight: Option<u32>,
    /// Materialize every factor record, including the trivial ones.
    pub include_trivial: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    AutSummand,
    Weight1Pair,
    HigherCommutator,
}

impl FactorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FactorKind::AutSummand => "aut-summand",
            FactorKind::Weight1Pair => "weight-1-pair",
            FactorKind::HigherCommutator => "higher-commutator",
        }
    }
}

/// One factor of the product, with its provenance.
#[derive(Clone, Debug)]
pub struct Factor {
    pub kind: FactorKind,
    /// 0-based index of the source summand j.
    pub summand: usize,
    /// The basic commutator c; absent for Aut factors.
    pub commutator: Option<Commutator>,
    /// The target Σ∧^c B; absent for Aut factors.
    pub target: Option<SpaceDesc>,
    pub order: ExtOrder,
    pub rule: OrderRule,
}

#[derive(Clone, Debug)]
pub enum Reducibility {
    Checked { pairs: Vec<PairCertificate> },
    Assumed { unverified: Vec<(usize, usize)> },
}

impl Reducibility {
    pub fn mode_str(&self) -> &'static str {
        match self {
            Reducibility::Checked { .. } => "checked",
            Reducibility::Assumed { .. } => "assumed",
        }
    }
}

/// Structured factorization of the total order.
#[derive(Clone, Debug)]
pub struct FactorReport {
    pub input: WedgeInput,
    pub reducibility: Reducibility,
    /// The commutator weight bound actually used.
    pub max_weight: u32,
    /// Factor records in (summand, commutator-order) sequence. Factors of
    /// order 1 are suppressed unless `include_trivial` was set.
    pub factors: Vec<Factor>,
    /// How many factors of order 1 are not listed in `factors`.
    pub omitted_trivial: BigUint,
    pub total: ExtOrder,
    /// Annotations about pair factors that restricted product formulas omit.
    pub notes: Vec<String>,
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("{message}")]
    ReducibilityUndetermined {
        failing: Vec<(usize, usize)>,
        message: String,
    },
}

/// Weight bound W = max_j dim(ΣX_j).
///
/// The target of a commutator c satisfies conn(Σ∧^c B) >= wt(c), so every
/// commutator of weight above W yields only factors killed by the
/// connectivity vanishing rule.
pub fn max_weight_bound(wedge: &WedgeInput) -> u32 {
    wedge
        .summands()
        .iter()
        .map(|s| s.space().dim())
        .max()
        .expect("wedges are nonempty")
}

/// Total order with default options.
pub fn aut_order(
    wedge: &WedgeInput,
    table: &GroupTable,
    assume_reducible: bool,
) -> Result<FactorReport, EngineError> {
    aut_order_with(
        wedge,
        table,
        &EngineOptions {
            assume_reducible,
            ..EngineOptions::default()
        },
    )
}

pub fn aut_order_with(
    wedge: &WedgeInput,
    table: &GroupTable,
    opts: &EngineOptions,
) -> Result<FactorReport, EngineError> {
    let summands = wedge.summands();
    let k = summands.len();

    let reducibility = match check_reducible(wedge) {
        ReducibilityCheck::ReducibleSufficient { pairs } => Reducibility::Checked { pairs },
        ReducibilityCheck::Undetermined { failing } => {
            if opts.assume_reducible {
                Reducibility::Assumed { unverified: failing }
            } else {
                let rendered: Vec<String> = failing
                    .iter()
                    .map(|(r, s)| format!("({}, {}) = {} / {}", r + 1, s + 1, summands[*r], summands[*s]))
                    .collect();
                return Err(EngineError::ReducibilityUndetermined {
                    message: format!(
                        "reducibility undetermined: no Hom-vanishing direction certifies pair(s) {}",
                        rendered.join(", ")
                    ),
                    failing,
                });
            }
        }
    };

    let bound = opts.max_weight.unwrap_or_else(|| max_weight_bound(wedge));
    let desusps: Vec<SpaceDesc> = summands.iter().map(|s| s.desuspension()).collect();
    let conns: Vec<u32> = desusps.iter().map(SpaceDesc::conn).collect();
    let max_dim = max_weight_bound(wedge);

    // conn(Σ∧^cB) = sum_t m_t·conn(X_t) + wt(c). A commutator whose target
    // connectivity reaches every summand dimension only yields factors the
    // vanishing rule kills, so the enumeration can skip it without any
    // table lookups; the skipped factors are counted by the Witt formula
    // below. Generators always survive the budget, so each summand's own
    // z_j is present and excluded explicitly.
    let budget: u64 = if opts.include_trivial {
        u64::MAX
    } else {
        u64::from(max_dim) - 1
    };
    let commutators = basic_commutators_costed(k, bound, &conns, budget);

    let mut factors: Vec<Factor> = Vec::new();
    let mut suppressed: u64 = 0;
    let mut total = ExtOrder::one();
    let mut notes: Vec<String> = Vec::new();

    let mut emit = |factor: Factor, suppressed: &mut u64| {
        if factor.order.is_one() && !opts.include_trivial {
            *suppressed += 1;
        } else {
            factors.push(factor);
        }
    };

    for j in 0..k {
        let (aut, rule) = summand_aut_order(&summands[j], table);
        total = total.mul(&aut);
        emit(
            Factor {
                kind: FactorKind::AutSummand,
                summand: j,
                commutator: None,
                target: None,
                order: aut,
                rule,
            },
            &mut suppressed,
        );

        for c in &commutators {
            if c.generator_index() == Some(j) {
                continue;
            }
            let smash = smash_power(c.multidegree(), &desusps).expect("weight >= 1");
            let target = suspend(&smash);
            debug_assert_eq!(
                u64::from(target.conn()),
                c.multidegree()
                    .iter()
                    .zip(&conns)
                    .map(|(m, w)| u64::from(*m) * u64::from(*w))
                    .sum::<u64>()
                    + u64::from(c.weight()),
            );
            let (order, rule) = mapping_group_order(summands[j].space(), &target, table);
            total = total.mul(&order);
            let kind = if c.weight() == 1 {
                FactorKind::Weight1Pair
            } else {
                FactorKind::HigherCommutator
            };
            if kind == FactorKind::Weight1Pair && k >= 3 && !order.is_one() {
                let i = c.generator_index().expect("weight-1 elements are generators");
                if j > i || summands[j].space().dim() < max_dim {
                    notes.push(format!(
                        "the total includes the pair factor [{}, {}] (order {}); product formulas that keep only pairs sourced at the top-dimensional summand, or only r < s index order, omit it",
                        summands[j], target, order
                    ));
                }
            }
            emit(
                Factor {
                    kind,
                    summand: j,
                    commutator: Some(c.clone()),
                    target: Some(target),
                    order,
                    rule,
                },
                &mut suppressed,
            );
        }
    }

    // Factors pruned by the budget: k per commutator of weight <= bound
    // beyond the enumerated ones, all of order 1.
    let omitted_trivial = if opts.include_trivial {
        BigUint::zero()
    } else {
        let q_full = count_up_to_weight(k, bound);
        let beyond = (q_full - BigUint::from(commutators.len())) * BigUint::from(k);
        BigUint::from(suppressed) + beyond
    };

    Ok(FactorReport {
        input: wedge.clone(),
        reducibility,
        max_weight: bound,
        factors,
        omitted_trivial,
        total,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::parse_summand;

    fn wedge(expr: &[&str]) -> WedgeInput {
        WedgeInput::new(expr.iter().map(|s| parse_summand(s).unwrap()).collect()).unwrap()
    }

    fn total(expr: &[&str]) -> ExtOrder {
        aut_order(&wedge(expr), &GroupTable::bundled(), false)
            .unwrap()
            .total
    }

    #[test]
    fn sphere_wedge_with_moore_summand() {
        let report = aut_order(&wedge(&["S2", "M(2,2)"]), &GroupTable::bundled(), false).unwrap();
        assert_eq!(report.total, ExtOrder::finite(32));
        assert_eq!(report.reducibility.mode_str(), "checked");
        assert_eq!(report.max_weight, 3);
    }

    #[test]
    fn moore_summand_next_to_s3() {
        assert_eq!(total(&["S3", "M(2,2)"]), ExtOrder::finite(32));
    }

    #[test]
    fn hopf_pair_is_infinite() {
        assert_eq!(total(&["S3", "S2"]), ExtOrder::Infinite);
    }

    #[test]
    fn adjacent_spheres() {
        assert_eq!(total(&["S4", "S3"]), ExtOrder::finite(8));
    }

    #[test]
    fn unknown_moore_data_propagates_and_is_pinpointed() {
        let report = aut_order(&wedge(&["S6", "M(5,4)"]), &GroupTable::bundled(), false).unwrap();
        assert_eq!(report.total, ExtOrder::Unknown);
        let unknowns: Vec<&Factor> = report
            .factors
            .iter()
            .filter(|f| f.order == ExtOrder::Unknown)
            .collect();
        assert!(!unknowns.is_empty());
        assert!(unknowns
            .iter()
            .any(|f| f.rule == OrderRule::AutMooreUnknown));
        assert!(unknowns.iter().any(|f| f.rule == OrderRule::NoRule
            && f.target.as_ref().map(|t| t.to_string()) == Some("M(5,4)".into())));
    }

    #[test]
    fn undetermined_reducibility_refuses() {
        let err = aut_order(&wedge(&["S3", "S3"]), &GroupTable::bundled(), false).unwrap_err();
        let EngineError::ReducibilityUndetermined { failing, message } = err;
        assert_eq!(failing, vec![(0, 1)]);
        assert!(message.contains("S3"));
    }

    #[test]
    fn assumed_reducibility_proceeds() {
        let report = aut_order(&wedge(&["S3", "S3"]), &GroupTable::bundled(), true).unwrap();
        assert_eq!(report.reducibility.mode_str(), "assumed");
        // Aut(S3)^2 * [S3,S3]^2 with pi_3(S^3) = Z: infinite.
        assert_eq!(report.total, ExtOrder::Infinite);
    }

    #[test]
    fn single_summand_is_just_the_aut_factor() {
        let report = aut_order(&wedge(&["S5"]), &GroupTable::bundled(), false).unwrap();
        assert_eq!(report.total, ExtOrder::finite(2));
        assert_eq!(report.factors.len(), 1);
        assert_eq!(report.factors[0].kind, FactorKind::AutSummand);
        assert_eq!(max_weight_bound(&wedge(&["S5"])), 5);
    }

    #[test]
    fn weight_bounds() {
        assert_eq!(max_weight_bound(&wedge(&["S2", "M(2,2)"])), 3);
        assert_eq!(max_weight_bound(&wedge(&["S12", "S11", "S7"])), 12);
    }

    #[test]
    fn two_summand_reports_match_the_ordered_pair_shape() {
        let opts = EngineOptions {
            include_trivial: true,
            ..EngineOptions::default()
        };
        let report =
            aut_order_with(&wedge(&["S4", "S3"]), &GroupTable::bundled(), &opts).unwrap();
        let auts = report
            .factors
            .iter()
            .filter(|f| f.kind == FactorKind::AutSummand)
            .count();
        assert_eq!(auts, 2);
        let pairs: Vec<(usize, String)> = report
            .factors
            .iter()
            .filter(|f| f.kind == FactorKind::Weight1Pair)
            .map(|f| (f.summand, f.target.as_ref().unwrap().to_string()))
            .collect();
        assert_eq!(
            pairs,
            vec![(0, "S3".to_string()), (1, "S4".to_string())]
        );
        // Each higher commutator appears once per summand.
        for c in ["[z1,z2]", "[z1,[z1,z2]]", "[z2,[z1,z2]]"] {
            let n = report
                .factors
                .iter()
                .filter(|f| {
                    f.commutator.as_ref().map(|x| x.to_string()) == Some(c.to_string())
                })
                .count();
            assert_eq!(n, 2, "{c}");
        }
    }

    #[test]
    fn factor_counts_add_up() {
        let table = GroupTable::bundled();
        let w = wedge(&["S4", "S3"]);
        let full = aut_order_with(
            &w,
            &table,
            &EngineOptions {
                include_trivial: true,
                ..EngineOptions::default()
            },
        )
        .unwrap();
        assert!(full.omitted_trivial.is_zero());
        let compact = aut_order(&w, &table, false).unwrap();
        let listed = BigUint::from(compact.factors.len());
        assert_eq!(
            listed + compact.omitted_trivial.clone(),
            BigUint::from(full.factors.len())
        );
        assert_eq!(full.total, compact.total);
    }

    #[test]
    fn totals_are_permutation_invariant() {
        let table = GroupTable::bundled();
        let a = aut_order(&wedge(&["S6", "S5", "S3"]), &table, false).unwrap();
        let b = aut_order(&wedge(&["S3", "S6", "S5"]), &table, false).unwrap();
        let c = aut_order(&wedge(&["S5", "S3", "S6"]), &table, false).unwrap();
        assert_eq!(a.total, b.total);
        assert_eq!(a.total, c.total);
    }

    #[test]
    fn raising_the_weight_bound_does_not_change_totals() {
        let table = GroupTable::bundled();
        let w = wedge(&["S4", "S3"]);
        let base = aut_order(&w, &table, false).unwrap();
        let raised = aut_order_with(
            &w,
            &table,
            &EngineOptions {
                max_weight: Some(base.max_weight + 3),
                ..EngineOptions::default()
            },
        )
        .unwrap();
        assert_eq!(base.total, raised.total);
    }

    #[test]
    fn three_spheres_include_the_low_pair_factor() {
        let report = aut_order(&wedge(&["S6", "S5", "S3"]), &GroupTable::bundled(), false).unwrap();
        assert_eq!(report.total, ExtOrder::finite(384));
        assert!(!report.notes.is_empty());
        assert!(report.notes.iter().any(|n| n.contains("[S5, S3]")));
    }

    #[test]
    fn stable_three_sphere_wedge_has_no_notes() {
        let report =
            aut_order(&wedge(&["S12", "S11", "S7"]), &GroupTable::bundled(), false).unwrap();
        assert_eq!(report.total, ExtOrder::finite(16));
        assert!(report.notes.is_empty());
    }
}
