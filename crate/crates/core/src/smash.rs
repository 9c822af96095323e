//! Smash products of the desuspended wedge summands.
//!
//! For a commutator c with multidegree (m_1, ..., m_k), the space ∧^c B is
//! the smash of m_t copies of each X_t. Smashes of spheres normalize to a
//! sphere; a single Moore factor smashed with spheres is an iterated
//! suspension of that Moore space; anything else keeps only connectivity and
//! dimension. Connectivity uses the additive formula
//! conn(A ∧ B) = conn(A) + conn(B) + 1 as an equality, which is attained for
//! spheres, Moore spaces, and their smashes.

use thiserror::Error;

use crate::space::SpaceDesc;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SmashError {
    #[error("empty smash: the multidegree must have a positive entry")]
    EmptySmash,
}

/// The smash product of `multidegree[t]` copies of `desusps[t]`.
pub fn smash_power(multidegree: &[u32], desusps: &[SpaceDesc]) -> Result<SpaceDesc, SmashError> {
    assert_eq!(multidegree.len(), desusps.len());
    let mut factors = Vec::new();
    for (m, space) in multidegree.iter().zip(desusps) {
        for _ in 0..*m {
            factors.push(space.clone());
        }
    }
    if factors.is_empty() {
        return Err(SmashError::EmptySmash);
    }
    if factors.len() == 1 {
        return Ok(factors.pop().expect("one factor"));
    }

    let mut sphere_dim_sum: u32 = 0;
    let mut moores: Vec<(u64, u32)> = Vec::new();
    let mut generic = false;
    for f in &factors {
        match f {
            SpaceDesc::Sphere(n) => sphere_dim_sum += n,
            SpaceDesc::Moore { q, n } => moores.push((*q, *n)),
            SpaceDesc::GenericSmash { .. } => generic = true,
        }
    }

    if !generic && moores.is_empty() {
        return Ok(SpaceDesc::Sphere(sphere_dim_sum));
    }
    if !generic && moores.len() == 1 {
        // Smashing with S^d is d-fold suspension.
        let (q, n) = moores[0];
        return Ok(SpaceDesc::Moore {
            q,
            n: n + sphere_dim_sum,
        });
    }

    let conn: u32 = factors.iter().map(SpaceDesc::conn).sum::<u32>() + (factors.len() as u32 - 1);
    let dim: u32 = factors.iter().map(SpaceDesc::dim).sum();
    factors.sort();
    Ok(SpaceDesc::GenericSmash { conn, dim, factors })
}

/// One suspension: Σ raises connectivity and dimension by one and turns
/// spheres and Moore spaces into the next one up.
pub fn suspend(s: &SpaceDesc) -> SpaceDesc {
    match s {
        SpaceDesc::Sphere(n) => SpaceDesc::Sphere(n + 1),
        SpaceDesc::Moore { q, n } => SpaceDesc::Moore { q: *q, n: n + 1 },
        SpaceDesc::GenericSmash { conn, dim, factors } => SpaceDesc::GenericSmash {
            conn: conn + 1,
            dim: dim + 1,
            factors: factors.clone(),
        },
    }
}
