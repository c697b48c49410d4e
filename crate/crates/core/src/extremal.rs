//! Extremal values, constructions and recognition for clique counts under
//! an edge budget `m` and maximum degree `delta`.
//!
//! Writing `m = q C(delta+1, 2) + b` with `0 <= b < C(delta+1, 2)` and
//! `b = C(r, 2) + s`, the maximum of `k_t` is attained by `q` disjoint
//! copies of `K_{delta+1}` next to the colex graph `L_b`. The set of all
//! maximizers depends on which of three regimes `(r, s, t)` falls in; see
//! [`FamilyCase`].

use serde::Serialize;
use thiserror::Error;

use crate::binom::{binom_exact, ExactCount};
use crate::cliques::{clique_profile, count_kt, has_clique};
use crate::colex::{build_colex, colex_decompose};
use crate::graph::{canonical_form, disjoint_union, CanonicalForm, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("maximum degree {found} exceeds the bound {delta}")]
    DegreeExceeded { found: usize, delta: u64 },
    #[error("remainder {b} is not below C({delta}+1, 2)")]
    RemainderOutOfRange { b: u64, delta: u64 },
    #[error("clique order {0} is below 3")]
    OrderTooSmall(u64),
    #[error("delta must be at least 1")]
    ZeroDelta,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `m = q C(delta+1, 2) + C(r, 2) + s` with `0 <= s < r <= delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeDecomposition {
    pub m: u64,
    pub delta: u64,
    pub q: u64,
    pub b: u64,
    pub r: u64,
    pub s: u64,
}

#[inline]
fn block_edges(delta: u64) -> u64 {
    (delta + 1) * delta / 2
}

pub fn decompose(m: u64, delta: u64) -> EdgeDecomposition {
    assert!(delta >= 1, "delta must be positive");
    let block = block_edges(delta);
    let (q, b) = (m / block, m % block);
    let c = colex_decompose(b);
    EdgeDecomposition {
        m,
        delta,
        q,
        b,
        r: c.r,
        s: c.s,
    }
}

/// `q C(delta+1, t) + C(r, t) + C(s, t-1)`.
///
/// For `t > delta + 1` every term vanishes, which matches the fact that no
/// graph of maximum degree `delta` contains `K_t`.
pub fn extremal_value(t: u64, delta: u64, m: u64) -> ExactCount {
    let d = decompose(m, delta);
    binom_exact(delta + 1, t) * d.q + binom_exact(d.r, t) + binom_exact(d.s, t.saturating_sub(1))
}

/// `q K_{delta+1}` followed by `L_b`.
/// The construction does not depend on `t`.
pub fn build_extremal(_t: u64, delta: u64, m: u64) -> Result<Graph, ExtremalError> {
    if delta == 0 {
        return Err(ExtremalError::ZeroDelta);
    }
    let d = decompose(m, delta);
    let needed = (d.q as usize).saturating_mul(delta as usize + 1);
    if needed > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(needed).into());
    }
    let block = Graph::complete(delta as usize + 1)?;
    let mut parts = vec![block; d.q as usize];
    parts.push(build_colex(d.b)?);
    Ok(disjoint_union(&parts)?)
}

/// Which maximizers complete `q K_{delta+1}` for remainder `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyCase {
    /// `b = 0`: only the empty remainder.
    Empty,
    /// `s >= t-1`: the colex graph `L_b` alone.
    UniqueColex,
    /// `r >= t`, `s < t-1`: every `b`-edge graph containing `K_r`.
    ContainsKr,
    /// `r < t`: every `b`-edge graph.
    AnyGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalFamilySpec {
    pub case: FamilyCase,
    pub t: u64,
    pub delta: u64,
    pub b: u64,
    pub r: u64,
    pub s: u64,
}

pub fn family_spec(t: u64, delta: u64, b: u64) -> Result<ExtremalFamilySpec, ExtremalError> {
    if delta == 0 {
        return Err(ExtremalError::ZeroDelta);
    }
    if b >= block_edges(delta) {
        return Err(ExtremalError::RemainderOutOfRange { b, delta });
    }
    let c = colex_decompose(b);
    let case = if b == 0 {
        FamilyCase::Empty
    } else if c.s + 1 >= t {
        FamilyCase::UniqueColex
    } else if c.r >= t {
        FamilyCase::ContainsKr
    } else {
        FamilyCase::AnyGraph
    };
    Ok(ExtremalFamilySpec {
        case,
        t,
        delta,
        b,
        r: c.r,
        s: c.s,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalityVerdict {
    pub is_extremal: bool,
    pub q_found: u64,
    pub remainder_certificate: CanonicalForm,
    pub count: ExactCount,
    pub formula: ExactCount,
    pub reason: String,
}

/// Splits off every component isomorphic to `K_{delta+1}`. In a graph of
/// maximum degree `delta` such a clique is always a whole component.
fn strip_blocks(g: &Graph, delta: u64) -> (u64, Graph) {
    let block_n = delta as usize + 1;
    let block_m = block_edges(delta) as usize;
    let mut q = 0;
    let mut rest = 0u64;
    for mask in g.component_masks() {
        let comp = g.induced(mask);
        if comp.n() == block_n && comp.edge_count() == block_m {
            q += 1;
        } else {
            rest |= mask;
        }
    }
    (q, g.induced(rest))
}

fn check_degree(g: &Graph, delta: u64) -> Result<(), ExtremalError> {
    if delta == 0 {
        return Err(ExtremalError::ZeroDelta);
    }
    let found = g.max_degree();
    if found as u64 > delta {
        return Err(ExtremalError::DegreeExceeded { found, delta });
    }
    Ok(())
}

/// Decides whether `g` maximizes `k_t` among graphs with its edge count and
/// maximum degree at most `delta`.
pub fn is_extremal(g: &Graph, t: u64, delta: u64) -> Result<ExtremalityVerdict, ExtremalError> {
    if t < 3 {
        return Err(ExtremalError::OrderTooSmall(t));
    }
    check_degree(g, delta)?;
    let m = g.edge_count() as u64;
    let d = decompose(m, delta);
    let (q_found, rest) = strip_blocks(g, delta);
    let count = count_kt(g, t as usize);
    let formula = extremal_value(t, delta, m);
    let verdict = |ok: bool, reason: String| ExtremalityVerdict {
        is_extremal: ok,
        q_found,
        remainder_certificate: canonical_form(&rest),
        count: count.clone(),
        formula: formula.clone(),
        reason,
    };
    if t > delta + 1 {
        return Ok(verdict(
            true,
            format!("t={t} exceeds delta+1, so every graph has no K_t"),
        ));
    }
    if q_found != d.q {
        return Ok(verdict(
            false,
            format!("found {q_found} K_{} components, need {}", delta + 1, d.q),
        ));
    }
    let spec = family_spec(t, delta, d.b)?;
    Ok(match spec.case {
        FamilyCase::Empty => verdict(true, "remainder is empty".into()),
        FamilyCase::AnyGraph => verdict(
            true,
            format!(
                "r={} < t={t}: every remainder with b={} edges qualifies",
                d.r, d.b
            ),
        ),
        FamilyCase::ContainsKr => {
            let ok = has_clique(&rest, d.r as usize);
            let reason = if ok {
                format!("remainder contains K_{}", d.r)
            } else {
                format!("remainder has no K_{}", d.r)
            };
            verdict(ok, reason)
        }
        FamilyCase::UniqueColex => {
            let ok = canonical_form(&rest) == canonical_form(&build_colex(d.b)?);
            let reason = if ok {
                format!("remainder is the colex graph L_{}", d.b)
            } else {
                format!("s={} >= t-1 requires the colex graph L_{}", d.s, d.b)
            };
            verdict(ok, reason)
        }
    })
}

/// `q (2^(delta+1) - delta - 2) + (2^r - r - 1) + (2^s - 1)`: the number of
/// cliques of order at least two in `q K_{delta+1}` plus `L_b`.
pub fn total_extremal_value(delta: u64, m: u64) -> ExactCount {
    let d = decompose(m, delta);
    let pow = |e: u64| num_bigint::BigUint::from(1u32) << e;
    let block = pow(delta + 1) - (delta + 2);
    let clique = pow(d.r) - (d.r + 1);
    let pendant = pow(d.s) - 1u32;
    ExactCount::from(block * d.q + clique + pendant)
}

/// Decides whether `g` maximizes the total clique count among graphs with
/// its edge count and maximum degree at most `delta`. For `s = 1` the
/// remainder `K_r + K_2` ties with `L_b`.
pub fn is_total_extremal(g: &Graph, delta: u64) -> Result<ExtremalityVerdict, ExtremalError> {
    check_degree(g, delta)?;
    let m = g.edge_count() as u64;
    let d = decompose(m, delta);
    let (q_found, rest) = strip_blocks(g, delta);
    let cert = canonical_form(&rest);
    let count = clique_profile(g).total;
    let formula = total_extremal_value(delta, m);
    let (ok, reason) = if q_found != d.q {
        (
            false,
            format!("found {q_found} K_{} components, need {}", delta + 1, d.q),
        )
    } else if cert == canonical_form(&build_colex(d.b)?) {
        (true, format!("remainder is the colex graph L_{}", d.b))
    } else if d.s == 1 && cert == canonical_form(&k_r_plus_edge(d.r)?) {
        (
            true,
            format!("s=1 and remainder is K_{} plus a disjoint edge", d.r),
        )
    } else {
        (
            false,
            "remainder is neither L_b nor the s=1 alternative".into(),
        )
    };
    Ok(ExtremalityVerdict {
        is_extremal: ok,
        q_found,
        remainder_certificate: cert,
        count,
        formula,
        reason,
    })
}

fn k_r_plus_edge(r: u64) -> Result<Graph, GraphError> {
    disjoint_union(&[Graph::complete(r as usize)?, Graph::complete(2)?])
}

/// The `s = 1` alternative maximizer `q K_{delta+1} + K_r + K_2`.
pub fn build_total_alternative(delta: u64, m: u64) -> Result<Option<Graph>, ExtremalError> {
    let d = decompose(m, delta);
    if d.s != 1 {
        return Ok(None);
    }
    let block = Graph::complete(delta as usize + 1)?;
    let mut parts = vec![block; d.q as usize];
    parts.push(k_r_plus_edge(d.r)?);
    Ok(Some(disjoint_union(&parts)?))
}

/// `n = q (delta+1) + r'` with `0 <= r' <= delta`.
fn vertex_split(n: u64, delta: u64) -> (u64, u64) {
    (n / (delta + 1), n % (delta + 1))
}

/// `q C(delta+1, t) + C(r', t)`: the most `t`-cliques on `n` vertices with
/// maximum degree `delta`.
pub fn vertex_extremal_value(n: u64, delta: u64, t: u64) -> ExactCount {
    let (q, r) = vertex_split(n, delta);
    binom_exact(delta + 1, t) * q + binom_exact(r, t)
}

/// `q (2^(delta+1) - delta - 2) + (2^r' - r' - 1)`.
pub fn vertex_total_value(n: u64, delta: u64) -> ExactCount {
    let (q, r) = vertex_split(n, delta);
    let pow = |e: u64| num_bigint::BigUint::from(1u32) << e;
    ExactCount::from((pow(delta + 1) - (delta + 2)) * q + pow(r) - (r + 1))
}
