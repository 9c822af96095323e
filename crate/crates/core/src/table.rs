//! Oracle for orders of mapping sets [A, T] and homotopy groups.
//!
//! Three layers, in precedence order: closed-form rules (connectivity
//! vanishing, π_n(S^n) = Z, the infinite π_{2m-1}(S^m) for even m, and the
//! stable range), a bundled data table, and user-supplied JSON extensions
//! that override bundled entries key by key. Missing data yields
//! `Unknown` rather than a guess, so reports can pinpoint exactly which
//! entry a user must supply.
//!
//! Homotopy groups are table entries with sphere sources: source "S6",
//! target "S3" means π₆(S³) = [S⁶, S³].

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use serde::Deserialize;
use thiserror::Error;

use crate::abelian::{aut_cyclic_order, AbelianGroup};
use crate::order::ExtOrder;
use crate::space::{parse_space, SpaceDesc, SuspendedSummand};

const BUNDLED_TABLE: &str = include_str!("../data/bundled_table.json");

/// A table entry: a full group when known, an order when only the
/// cardinality is, or an infinite marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableValue {
    Group(AbelianGroup),
    Order(BigUint),
    Infinite,
}

impl TableValue {
    pub fn order(&self) -> ExtOrder {
        match self {
            TableValue::Group(g) => g.order(),
            TableValue::Order(n) => ExtOrder::Finite(n.clone()),
            TableValue::Infinite => ExtOrder::Infinite,
        }
    }

    /// The group structure, when the entry records one.
    pub fn group(&self) -> Option<&AbelianGroup> {
        match self {
            TableValue::Group(g) => Some(g),
            _ => None,
        }
    }
}

/// Which rule produced an order. Reports carry this next to every factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRule {
    /// Aut(S^n) has order 2 for n >= 1.
    AutSphere,
    /// Moore-space automorphisms via the extension
    /// 0 -> Ext(Z/q, π_{n+1}) -> Aut(M(q,n)) -> Aut(Z/q) -> 1.
    AutMoore,
    /// π_{n+1} of the Moore summand is not in the table as a group.
    AutMooreUnknown,
    /// Maps from a d-dimensional complex into a (>= d)-connected space are
    /// nullhomotopic.
    Vanishing,
    /// [S^n, S^n] = Z.
    SphereIdentity,
    /// π_{2m-1}(S^m) has a Z summand for even m.
    SphereHopf,
    /// Stable range: order of the stable stem.
    StableStem,
    /// Explicit table entry.
    TableEntry,
    /// Nothing determined the order.
    NoRule,
}

impl OrderRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderRule::AutSphere => "aut-sphere",
            OrderRule::AutMoore => "aut-moore",
            OrderRule::AutMooreUnknown => "aut-moore-unknown",
            OrderRule::Vanishing => "vanishing",
            OrderRule::SphereIdentity => "sphere-identity",
            OrderRule::SphereHopf => "sphere-hopf",
            OrderRule::StableStem => "stable-stem",
            OrderRule::TableEntry => "table",
            OrderRule::NoRule => "unknown",
        }
    }
}

impl fmt::Display for OrderRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Immutable lookup table of mapping-group data plus stable stems.
#[derive(Clone, Debug)]
pub struct GroupTable {
    entries: BTreeMap<(String, String), TableValue>,
    stable_stems: Vec<AbelianGroup>,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("could not read table file {path}: {message}")]
    Io { path: String, message: String },
    #[error("table JSON is malformed: {0}")]
    Json(String),
    #[error("table entry {index} ({source_key:?} -> {target_key:?}): {problem}")]
    Entry {
        index: usize,
        source_key: String,
        target_key: String,
        problem: String,
    },
    #[error("stable stem {index} ({text:?}): {problem}")]
    Stem {
        index: usize,
        text: String,
        problem: String,
    },
}

#[derive(Deserialize)]
struct RawTable {
    #[serde(default)]
    #[allow(dead_code)]
    version: Option<u32>,
    #[serde(default)]
    entries: Vec<RawEntry>,
    #[serde(default)]
    stable_stems: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawEntry {
    source: String,
    target: String,
    #[serde(default)]
    group: Option<String>,
    #[serde(default)]
    order: Option<u64>,
    #[serde(default)]
    infinite: Option<bool>,
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
}

impl GroupTable {
    /// The bundled table alone.
    pub fn bundled() -> GroupTable {
        let (table, warnings) =
            Self::assemble(BUNDLED_TABLE).expect("bundled table data is valid");
        debug_assert!(warnings.is_empty(), "bundled table warnings: {warnings:?}");
        table
    }

    /// Bundled defaults merged with user entries from JSON text; user entries
    /// override bundled ones with the same (source, target) key, and a
    /// user-supplied "stable_stems" list replaces the bundled one. Returns
    /// the merged table plus any consistency warnings.
    pub fn load_str(user_json: &str) -> Result<(GroupTable, Vec<String>), TableError> {
        let (bundled_entries, bundled_stems) = parse_raw(BUNDLED_TABLE)?;
        let (user_entries, user_stems) = parse_raw(user_json)?;
        let mut entries: BTreeMap<(String, String), TableValue> =
            bundled_entries.into_iter().collect();
        entries.extend(user_entries);
        let stems = user_stems
            .or(bundled_stems)
            .unwrap_or_else(|| vec![AbelianGroup::free(1)]);
        Self::finish(entries, stems)
    }

    pub fn load_path(path: &Path) -> Result<(GroupTable, Vec<String>), TableError> {
        let text = fs::read_to_string(path).map_err(|e| TableError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::load_str(&text)
    }

    fn assemble(text: &str) -> Result<(GroupTable, Vec<String>), TableError> {
        let (entries, stems) = parse_raw(text)?;
        let stems = stems.unwrap_or_else(|| vec![AbelianGroup::free(1)]);
        Self::finish(entries.into_iter().collect(), stems)
    }

    fn finish(
        entries: BTreeMap<(String, String), TableValue>,
        stems: Vec<AbelianGroup>,
    ) -> Result<(GroupTable, Vec<String>), TableError> {
        if stems.first() != Some(&AbelianGroup::free(1)) {
            return Err(TableError::Stem {
                index: 0,
                text: stems
                    .first()
                    .map(|g| g.to_string())
                    .unwrap_or_default(),
                problem: "stable stem 0 must be Z".into(),
            });
        }
        let table = GroupTable {
            entries,
            stable_stems: stems,
        };
        let warnings = table.consistency_warnings();
        Ok((table, warnings))
    }

    /// Load-time self-checks: entries shadowed by the connectivity vanishing
    /// rule, and sphere entries inside the stable range that disagree with
    /// the stems. Rule precedence makes the closed-form answer win either
    /// way; the warning surfaces the conflict.
    fn consistency_warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for ((src_key, tgt_key), value) in &self.entries {
            let src = parse_space(src_key).expect("keys are canonical");
            let tgt = parse_space(tgt_key).expect("keys are canonical");
            if src.dim() <= tgt.conn() && !value.order().is_one() {
                warnings.push(format!(
                    "entry {src_key} -> {tgt_key}: a {}-dimensional source maps trivially into a {}-connected target, so the recorded order {} is ignored",
                    src.dim(),
                    tgt.conn(),
                    value.order()
                ));
                continue;
            }
            if let (SpaceDesc::Sphere(a), SpaceDesc::Sphere(b)) = (&src, &tgt) {
                if a > b {
                    let stem = a - b;
                    if b >= &(stem + 2) {
                        if let Some(expected) = self.stable_stem(stem) {
                            if value.order() != expected.order() {
                                warnings.push(format!(
                                    "entry {src_key} -> {tgt_key} lies in the stable range but disagrees with stem {stem} (order {}); the stem value wins",
                                    expected.order()
                                ));
                            }
                        }
                    }
                }
            }
        }
        warnings
    }

    pub fn lookup(&self, source: &str, target: &str) -> Option<&TableValue> {
        self.entries
            .get(&(source.to_string(), target.to_string()))
    }

    /// The stable stem π_{n+k}(S^n), n >= k + 2, when bundled or supplied.
    pub fn stable_stem(&self, stem: u32) -> Option<&AbelianGroup> {
        self.stable_stems.get(stem as usize)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(String, String), &TableValue)> {
        self.entries.iter()
    }
}

fn parse_raw(
    text: &str,
) -> Result<
    (
        Vec<((String, String), TableValue)>,
        Option<Vec<AbelianGroup>>,
    ),
    TableError,
> {
    if text.trim().is_empty() {
        return Ok((Vec::new(), None));
    }
    let raw: RawTable =
        serde_json::from_str(text).map_err(|e| TableError::Json(e.to_string()))?;

    let mut entries = Vec::new();
    for (index, e) in raw.entries.iter().enumerate() {
        let entry_err = |problem: String| TableError::Entry {
            index,
            source_key: e.source.clone(),
            target_key: e.target.clone(),
            problem,
        };
        let src = parse_space(&e.source)
            .map_err(|err| entry_err(format!("bad source key: {err}")))?;
        let tgt = parse_space(&e.target)
            .map_err(|err| entry_err(format!("bad target key: {err}")))?;
        let value = match (&e.group, e.order, e.infinite.unwrap_or(false)) {
            (Some(g), None, false) => TableValue::Group(
                AbelianGroup::parse(g).map_err(|err| entry_err(err.to_string()))?,
            ),
            (None, Some(n), false) => {
                if n == 0 {
                    return Err(entry_err(
                        "order 0 is invalid; mapping sets are nonempty".into(),
                    ));
                }
                TableValue::Order(BigUint::from(n))
            }
            (None, None, true) => TableValue::Infinite,
            _ => {
                return Err(entry_err(
                    "exactly one of \"group\", \"order\", \"infinite\": true is required".into(),
                ))
            }
        };
        entries.push(((src.to_string(), tgt.to_string()), value));
    }

    let stems = match raw.stable_stems {
        None => None,
        Some(texts) => {
            let mut stems = Vec::new();
            for (index, text) in texts.iter().enumerate() {
                let g = AbelianGroup::parse(text).map_err(|err| TableError::Stem {
                    index,
                    text: text.clone(),
                    problem: err.to_string(),
                })?;
                stems.push(g);
            }
            Some(stems)
        }
    };

    Ok((entries, stems))
}

/// Order of π_a(S^b) = [S^a, S^b].
///
/// Rules in precedence order: a < b vanishes; a = b gives Z; b even with
/// a = 2b - 1 is infinite; the stable range b >= (a - b) + 2 reads the stem
/// table; otherwise an explicit table entry; otherwise unknown.
pub fn sphere_pi_order(a: u32, b: u32, table: &GroupTable) -> (ExtOrder, OrderRule) {
    if a < b {
        return (ExtOrder::one(), OrderRule::Vanishing);
    }
    if a == b {
        return (ExtOrder::Infinite, OrderRule::SphereIdentity);
    }
    if b % 2 == 0 && a == 2 * b - 1 {
        return (ExtOrder::Infinite, OrderRule::SphereHopf);
    }
    let stem = a - b;
    if b >= stem + 2 {
        if let Some(g) = table.stable_stem(stem) {
            return (g.order(), OrderRule::StableStem);
        }
    }
    if let Some(v) = table.lookup(&format!("S{a}"), &format!("S{b}")) {
        return (v.order(), OrderRule::TableEntry);
    }
    (ExtOrder::Unknown, OrderRule::NoRule)
}

/// Order of the pointed mapping set [source, target].
///
/// `source` must be a sphere or Moore space; `target` may be any descriptor.
pub fn mapping_group_order(
    source: &SpaceDesc,
    target: &SpaceDesc,
    table: &GroupTable,
) -> (ExtOrder, OrderRule) {
    debug_assert!(source.is_table_key(), "sources are suspended summands");
    if source.dim() <= target.conn() {
        return (ExtOrder::one(), OrderRule::Vanishing);
    }
    if let (SpaceDesc::Sphere(a), SpaceDesc::Sphere(b)) = (source, target) {
        return sphere_pi_order(*a, *b, table);
    }
    if target.is_table_key() {
        if let Some(v) = table.lookup(&source.to_string(), &target.to_string()) {
            return (v.order(), OrderRule::TableEntry);
        }
    }
    (ExtOrder::Unknown, OrderRule::NoRule)
}

/// Order of Aut(ΣX) for one wedge summand.
///
/// Spheres contribute 2. For a Moore space M(q, n) the extension
/// 0 -> Ext(Z/q, π_{n+1}(M(q,n))) -> Aut(M(q,n)) -> Aut(Z/q) -> 1
/// multiplies the outer orders, provided the table records π_{n+1} as a
/// group; with no such entry the answer is unknown.
pub fn summand_aut_order(s: &SuspendedSummand, table: &GroupTable) -> (ExtOrder, OrderRule) {
    match s.space() {
        SpaceDesc::Sphere(_) => (ExtOrder::finite(2), OrderRule::AutSphere),
        SpaceDesc::Moore { q, n } => {
            let pi_key = format!("S{}", n + 1);
            let target_key = s.space().to_string();
            match table.lookup(&pi_key, &target_key).and_then(TableValue::group) {
                Some(pi) => {
                    let ext = AbelianGroup::cyclic(*q).ext(pi);
                    let order = ext.order().mul(&aut_cyclic_order(*q));
                    (order, OrderRule::AutMoore)
                }
                None => (ExtOrder::Unknown, OrderRule::AutMooreUnknown),
            }
        }
        SpaceDesc::GenericSmash { .. } => unreachable!("summands are spheres or Moore spaces"),
    }
}
