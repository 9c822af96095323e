//! Descriptors for the homotopy types the calculator understands.
//!
//! Inputs are wedges of suspended spheres `S<n>` and Moore spaces
//! `M(<q>,<n>)` (the Moore space M(Z/q, n); M(2,2) is the suspended real
//! projective plane). Smash products of their desuspensions that do not
//! normalize back to a sphere or Moore space are tracked only through
//! connectivity and dimension.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::abelian::AbelianGroup;

/// A homotopy-type descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceDesc {
    /// The sphere S^n, n >= 1.
    Sphere(u32),
    /// The Moore space M(Z/q, n), q >= 2, n >= 1; dimension n + 1.
    Moore { q: u64, n: u32 },
    /// A smash product that is neither a sphere nor a single Moore space.
    /// Only connectivity and dimension are tracked; `factors` records the
    /// unsuspended factor multiset (sorted) for reporting.
    GenericSmash {
        conn: u32,
        dim: u32,
        factors: Vec<SpaceDesc>,
    },
}

impl SpaceDesc {
    pub fn sphere(n: u32) -> Self {
        assert!(n >= 1, "sphere dimension must be at least 1");
        SpaceDesc::Sphere(n)
    }

    pub fn moore(q: u64, n: u32) -> Self {
        assert!(q >= 2, "Moore space needs a cyclic group Z/q with q >= 2");
        assert!(n >= 1, "Moore space degree must be at least 1");
        SpaceDesc::Moore { q, n }
    }

    /// Connectivity: the space is `conn()`-connected.
    pub fn conn(&self) -> u32 {
        match self {
            SpaceDesc::Sphere(n) => n - 1,
            SpaceDesc::Moore { n, .. } => n - 1,
            SpaceDesc::GenericSmash { conn, .. } => *conn,
        }
    }

    /// Cell dimension.
    pub fn dim(&self) -> u32 {
        match self {
            SpaceDesc::Sphere(n) => *n,
            SpaceDesc::Moore { n, .. } => n + 1,
            SpaceDesc::GenericSmash { dim, .. } => *dim,
        }
    }

    /// True for the descriptors that have a canonical parseable rendering
    /// (and hence can appear as table keys).
    pub fn is_table_key(&self) -> bool {
        matches!(self, SpaceDesc::Sphere(_) | SpaceDesc::Moore { .. })
    }
}

impl fmt::Display for SpaceDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDesc::Sphere(n) => write!(f, "S{n}"),
            SpaceDesc::Moore { q, n } => write!(f, "M({q},{n})"),
            SpaceDesc::GenericSmash { conn, dim, factors } => {
                let fs: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
                write!(f, "smash({})[conn={conn},dim={dim}]", fs.join(","))
            }
        }
    }
}

/// Reduced homology of a sphere or Moore space: the single nonzero degree.
/// Unlisted degrees are the trivial group.
pub fn homology(s: &SpaceDesc) -> Result<BTreeMap<u32, AbelianGroup>, UnsupportedSpace> {
    match s {
        SpaceDesc::Sphere(n) => Ok(BTreeMap::from([(*n, AbelianGroup::free(1))])),
        SpaceDesc::Moore { q, n } => Ok(BTreeMap::from([(*n, AbelianGroup::cyclic(*q))])),
        SpaceDesc::GenericSmash { .. } => Err(UnsupportedSpace {
            space: s.to_string(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("homology is only tabulated for spheres and Moore spaces, not {space}")]
pub struct UnsupportedSpace {
    pub space: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SummandError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { message: String, offset: usize },
    #[error("summand {summand} is not simply connected; wedge summands must be suspensions of connected spaces")]
    NotSimplyConnected { summand: String },
}

/// A wedge summand ΣX together with its desuspension X.
///
/// Only simply connected spheres and Moore spaces are admitted, so the
/// desuspension always exists and `suspend(desuspension()) == space`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuspendedSummand {
    space: SpaceDesc,
}

impl SuspendedSummand {
    pub fn new(space: SpaceDesc) -> Result<Self, SummandError> {
        match &space {
            SpaceDesc::Sphere(n) if *n >= 2 => Ok(SuspendedSummand { space }),
            SpaceDesc::Moore { n, .. } if *n >= 2 => Ok(SuspendedSummand { space }),
            SpaceDesc::Sphere(_) | SpaceDesc::Moore { .. } => {
                Err(SummandError::NotSimplyConnected {
                    summand: space.to_string(),
                })
            }
            SpaceDesc::GenericSmash { .. } => Err(SummandError::Parse {
                message: format!("{space} is not an admissible wedge summand"),
                offset: 0,
            }),
        }
    }

    pub fn space(&self) -> &SpaceDesc {
        &self.space
    }

    /// The X with ΣX = this summand.
    pub fn desuspension(&self) -> SpaceDesc {
        match &self.space {
            SpaceDesc::Sphere(n) => SpaceDesc::Sphere(n - 1),
            SpaceDesc::Moore { q, n } => SpaceDesc::Moore { q: *q, n: n - 1 },
            SpaceDesc::GenericSmash { .. } => unreachable!("summands are spheres or Moore spaces"),
        }
    }
}

impl fmt::Display for SuspendedSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.space.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("a wedge needs at least one summand")]
pub struct EmptyWedge;

/// A nonempty wedge ΣX_1 ∨ ... ∨ ΣX_k. The order of summands is remembered
/// for reporting only; computed totals are order-independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeInput {
    summands: Vec<SuspendedSummand>,
}

impl WedgeInput {
    pub fn new(summands: Vec<SuspendedSummand>) -> Result<Self, EmptyWedge> {
        if summands.is_empty() {
            return Err(EmptyWedge);
        }
        Ok(WedgeInput { summands })
    }

    pub fn summands(&self) -> &[SuspendedSummand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for WedgeInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" v "))
    }
}

/// Character-level scanner shared by the space and wedge parsers. Skips
/// whitespace between tokens and reports byte offsets into the original
/// input.
pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), SummandError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn parse_u64(&mut self, what: &str) -> Result<u64, SummandError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err(format!("expected {what}")));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| SummandError::Parse {
                message: format!("{what} out of range"),
                offset: start,
            })
    }

    pub(crate) fn err(&self, message: String) -> SummandError {
        SummandError::Parse {
            message,
            offset: self.pos,
        }
    }
}

/// Parse one space token at the cursor: `S<n>` (n >= 1) or `M(<q>,<n>)`
/// (q >= 2, n >= 1).
pub(crate) fn parse_space_at(cur: &mut Cursor) -> Result<SpaceDesc, SummandError> {
    cur.skip_ws();
    match cur.peek() {
        Some('S') => {
            cur.bump();
            let start = cur.pos();
            let n = cur.parse_u64("sphere dimension")?;
            if n < 1 {
                return Err(SummandError::Parse {
                    message: "sphere dimension must be at least 1".into(),
                    offset: start,
                });
            }
            Ok(SpaceDesc::Sphere(n as u32))
        }
        Some('M') => {
            cur.bump();
            cur.skip_ws();
            cur.expect('(')?;
            cur.skip_ws();
            let q_start = cur.pos();
            let q = cur.parse_u64("cyclic order q")?;
            if q < 2 {
                return Err(SummandError::Parse {
                    message: "Moore space needs q >= 2".into(),
                    offset: q_start,
                });
            }
            cur.skip_ws();
            cur.expect(',')?;
            cur.skip_ws();
            let n_start = cur.pos();
            let n = cur.parse_u64("degree n")?;
            if n < 1 {
                return Err(SummandError::Parse {
                    message: "Moore space degree must be at least 1".into(),
                    offset: n_start,
                });
            }
            cur.skip_ws();
            cur.expect(')')?;
            Ok(SpaceDesc::Moore {
                q,
                n: n as u32,
            })
        }
        Some(c) => Err(cur.err(format!("expected a summand (S<n> or M(q,n)), found '{c}'"))),
        None => Err(cur.err("expected a summand (S<n> or M(q,n))".into())),
    }
}

/// Parse a full string as one space descriptor (table-key grammar).
pub fn parse_space(text: &str) -> Result<SpaceDesc, SummandError> {
    let mut cur = Cursor::new(text);
    let space = parse_space_at(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("unexpected trailing input".into()));
    }
    Ok(space)
}

/// Parse a full string as one wedge summand: the table-key grammar plus the
/// simple-connectivity requirement (n >= 2).
pub fn parse_summand(text: &str) -> Result<SuspendedSummand, SummandError> {
    let space = parse_space(text)?;
    SuspendedSummand::new(space)
}
