//! Order calculator for groups of self-homotopy equivalences of wedges.
//!
//! Given a wedge ΣX_1 ∨ ... ∨ ΣX_k of suspended spheres and Moore spaces,
//! the group Aut of self-homotopy equivalences decomposes — under a
//! reducibility hypothesis — into a product of mapping sets indexed by the
//! basic commutators on k generators: each summand contributes Aut(ΣX_j)
//! and one factor [ΣX_j, Σ∧^c B] per basic commutator c ≠ z_j, where
//! ∧^c B smashes the desuspensions according to the multidegree of c. The
//! total order is the product of the factor orders.
//!
//! The crate mechanizes exactly that bookkeeping:
//!
//! * [`abelian`] — finitely generated abelian groups, Hom/Ext, cyclic
//!   automorphism counts;
//! * [`order`] — exact arithmetic on finite/infinite/unknown orders;
//! * [`space`] — sphere and Moore-space descriptors and their parsing;
//! * [`hall`] — basic-commutator enumeration and Witt counts;
//! * [`smash`] — smash-power normalization and suspension;
//! * [`table`] — the mapping-group oracle (closed-form rules plus a
//!   bundled, user-extendable data table);
//! * [`reducibility`] — the pairwise Hom-vanishing sufficient condition;
//! * [`engine`] — factor enumeration and the total;
//! * [`cli`] — the `wedge-aut` command-line front end.

pub mod abelian;
pub mod cli;
pub mod engine;
pub mod hall;
pub mod order;
pub mod reducibility;
pub mod smash;
pub mod space;
pub mod table;

pub use abelian::{aut_cyclic_order, AbelianGroup};
pub use engine::{aut_order, aut_order_with, max_weight_bound, EngineOptions, FactorReport};
pub use hall::{basic_commutators, count_by_weight, Commutator};
pub use order::ExtOrder;
pub use reducibility::{check_reducible, ReducibilityCheck};
pub use space::{parse_space, parse_summand, SpaceDesc, SuspendedSummand, WedgeInput};
pub use table::{mapping_group_order, sphere_pi_order, summand_aut_order, GroupTable};
