//! Isomorphism-free enumeration of graphs by edge count, and brute-force
//! verifiers built on it.
//!
//! Level `m + 1` is produced from level `m` by every single-edge
//! augmentation that keeps the degree bound: an edge between two existing
//! vertices, a pendant edge to a new vertex, or a new `K_2` component.
//! Deleting any edge of an `(m+1)`-edge graph (and then its isolated
//! vertices) lands in level `m`, so this reaches every class. Duplicates are
//! merged by certificate; each level is stored sorted by certificate, which
//! makes every downstream result independent of the worker count.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::binom::{ExactCount, ABS_TOL};
use crate::cliques::{clique_profile, count_kt, has_clique};
use crate::colex::{build_colex, colex_decompose, colex_kt, kk_bound_real};
use crate::extremal::{
    decompose, extremal_value, is_extremal, is_total_extremal, total_extremal_value, ExtremalError,
};
use crate::graph::{canonical_form, CanonicalForm, Graph, MAX_VERTICES};

pub const DEFAULT_MAX_EDGES: u64 = 14;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("{m} edges exceeds the enumeration cap of {cap}")]
    CapExceeded { m: u64, cap: u64 },
    #[error("corpus holds levels up to {have}, {want} requested")]
    LevelMissing { want: u64, have: u64 },
    #[error("corpus degree bound {have:?} does not match {want:?}")]
    DegreeMismatch {
        want: Option<u64>,
        have: Option<u64>,
    },
    #[error("failed to start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
}

/// Graphs with `m` edges, no isolated vertices, and maximum degree at most
/// `max_degree` (unbounded when `None`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub m: u64,
    pub max_degree: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_edges: u64,
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_edges: DEFAULT_MAX_EDGES,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SearchConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchConfig {
            jobs: jobs.max(1),
            ..SearchConfig::default()
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool, SearchError> {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()?)
    }
}

/// One isomorphism class: certificate plus its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub certificate: CanonicalForm,
    pub graph: Graph,
}

/// Enumerated levels `0..=up_to` for one degree bound.
#[derive(Debug, Clone)]
pub struct Corpus {
    max_degree: Option<u64>,
    levels: Vec<Vec<ClassEntry>>,
}

fn extensions(g: &Graph, max_degree: Option<u64>) -> Vec<Graph> {
    let cap = max_degree.map_or(usize::MAX, |d| d as usize);
    if cap == 0 {
        return Vec::new();
    }
    let n = g.n();
    let open: Vec<usize> = (0..n).filter(|&v| g.degree(v) < cap).collect();
    let mut out = Vec::new();
    for (i, &u) in open.iter().enumerate() {
        for &v in &open[i + 1..] {
            if !g.has_edge(u, v) {
                out.push(g.with_edge(u, v).expect("valid augmentation"));
            }
        }
    }
    if n < MAX_VERTICES {
        out.extend(
            open.iter()
                .map(|&u| g.with_edge(u, n).expect("valid augmentation")),
        );
    }
    if n + 2 <= MAX_VERTICES {
        out.push(g.with_edge(n, n + 1).expect("valid augmentation"));
    }
    out
}

fn next_level(prev: &[ClassEntry], max_degree: Option<u64>) -> Vec<ClassEntry> {
    let merged: HashSet<CanonicalForm> = prev
        .par_iter()
        .fold(HashSet::new, |mut acc, entry| {
            for h in extensions(&entry.graph, max_degree) {
                acc.insert(canonical_form(&h));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut certs: Vec<CanonicalForm> = merged.into_iter().collect();
    certs.sort_unstable();
    certs
        .into_iter()
        .map(|certificate| ClassEntry {
            graph: certificate.to_graph(),
            certificate,
        })
        .collect()
}

impl Corpus {
    pub fn build(
        up_to: u64,
        max_degree: Option<u64>,
        config: &SearchConfig,
    ) -> Result<Corpus, SearchError> {
        if up_to > config.max_edges {
            return Err(SearchError::CapExceeded {
                m: up_to,
                cap: config.max_edges,
            });
        }
        let empty = Graph::default();
        let mut levels = vec![vec![ClassEntry {
            certificate: canonical_form(&empty),
            graph: empty,
        }]];
        config.pool()?.install(|| {
            for _ in 0..up_to {
                let next = next_level(levels.last().expect("level 0"), max_degree);
                levels.push(next);
            }
        });
        Ok(Corpus { max_degree, levels })
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.max_degree
    }

    pub fn max_edges(&self) -> u64 {
        self.levels.len() as u64 - 1
    }

    pub fn level(&self, m: u64) -> Result<&[ClassEntry], SearchError> {
        self.levels
            .get(m as usize)
            .map(Vec::as_slice)
            .ok_or(SearchError::LevelMissing {
                want: m,
                have: self.max_edges(),
            })
    }

    fn expect_degree(&self, want: Option<u64>) -> Result<(), SearchError> {
        if self.max_degree != want {
            return Err(SearchError::DegreeMismatch {
                want,
                have: self.max_degree,
            });
        }
        Ok(())
    }
}

/// One representative per isomorphism class, in certificate order.
pub fn enumerate_graphs(
    spec: EnumerationSpec,
    config: &SearchConfig,
) -> Result<Vec<Graph>, SearchError> {
    let corpus = Corpus::build(spec.m, spec.max_degree, config)?;
    Ok(corpus
        .level(spec.m)?
        .iter()
        .map(|e| e.graph.clone())
        .collect())
}

/// Which theorem a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationKind {
    Main,
    Total,
    Kk,
}

fn as_millis<S: Serializer>(d: &Duration, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: VerificationKind,
    pub m: u64,
    pub delta: Option<u64>,
    pub t: Option<u64>,
    pub oracle_max: ExactCount,
    pub formula: ExactCount,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(rename = "argmax")]
    pub argmax_certificates: Vec<CanonicalForm>,
    pub membership_agreement: bool,
    /// Expected number of maximizers, when the theorem fixes it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_argmax_size: Option<usize>,
    /// Whether every corpus graph respects the real-valued colex bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_bound_holds: Option<bool>,
    pub corpus_size: usize,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.matches
            && self.membership_agreement
            && self
                .expected_argmax_size
                .is_none_or(|n| n == self.argmax_certificates.len())
            && self.real_bound_holds.unwrap_or(true)
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Maximum and sorted maximizers of `score` over a level.
fn argmax_by<F>(
    level: &[ClassEntry],
    score: F,
) -> Result<(ExactCount, Vec<CanonicalForm>), SearchError>
where
    F: Fn(&Graph) -> Result<ExactCount, SearchError> + Sync,
{
    let scores: Vec<ExactCount> = level
        .par_iter()
        .map(|e| score(&e.graph))
        .collect::<Result<_, _>>()?;
    let best = scores.iter().max().cloned().unwrap_or_default();
    let winners = level
        .iter()
        .zip(&scores)
        .filter(|(_, s)| **s == best)
        .map(|(e, _)| e.certificate.clone())
        .collect();
    Ok((best, winners))
}

fn accepted_by<F>(level: &[ClassEntry], accept: F) -> Result<Vec<CanonicalForm>, SearchError>
where
    F: Fn(&Graph) -> Result<bool, SearchError> + Sync,
{
    let flags: Vec<bool> = level
        .par_iter()
        .map(|e| accept(&e.graph))
        .collect::<Result<_, _>>()?;
    Ok(level
        .iter()
        .zip(flags)
        .filter(|(_, ok)| *ok)
        .map(|(e, _)| e.certificate.clone())
        .collect())
}

/// Largest `k_t` over all `m`-edge graphs with maximum degree at most
/// `delta`, and every maximizer's certificate.
pub fn brute_max(
    m: u64,
    delta: u64,
    t: u64,
    config: &SearchConfig,
) -> Result<(ExactCount, Vec<CanonicalForm>), SearchError> {
    let corpus = Corpus::build(m, Some(delta), config)?;
    config
        .pool()?
        .install(|| argmax_by(corpus.level(m)?, |g| Ok(count_kt(g, t as usize))))
}

pub fn verify_main(
    m: u64,
    delta: u64,
    t: u64,
    config: &SearchConfig,
) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    let corpus = Corpus::build(m, Some(delta), config)?;
    let mut report = config.pool()?.install(|| verify_main_on(&corpus, m, t))?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Compares the brute-force maximum of `k_t` against the closed form, and
/// the set of maximizers against [`is_extremal`].
pub fn verify_main_on(corpus: &Corpus, m: u64, t: u64) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    let delta = corpus.max_degree().ok_or(SearchError::DegreeMismatch {
        want: Some(0),
        have: None,
    })?;
    let level = corpus.level(m)?;
    let (oracle_max, argmax) = argmax_by(level, |g| Ok(count_kt(g, t as usize)))?;
    let accepted = accepted_by(level, |g| Ok(is_extremal(g, t, delta)?.is_extremal))?;
    let formula = extremal_value(t, delta, m);
    Ok(VerificationReport {
        check: VerificationKind::Main,
        m,
        delta: Some(delta),
        t: Some(t),
        matches: oracle_max == formula,
        oracle_max,
        formula,
        membership_agreement: argmax == accepted,
        argmax_certificates: argmax,
        expected_argmax_size: None,
        real_bound_holds: None,
        corpus_size: level.len(),
        elapsed: start.elapsed(),
    })
}

pub fn verify_total(
    m: u64,
    delta: u64,
    config: &SearchConfig,
) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    let corpus = Corpus::build(m, Some(delta), config)?;
    let mut report = config.pool()?.install(|| verify_total_on(&corpus, m))?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Total clique count version; exactly two maximizers when `s = 1`, one
/// otherwise.
pub fn verify_total_on(corpus: &Corpus, m: u64) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    let delta = corpus.max_degree().ok_or(SearchError::DegreeMismatch {
        want: Some(0),
        have: None,
    })?;
    let level = corpus.level(m)?;
    let (oracle_max, argmax) = argmax_by(level, |g| Ok(clique_profile(g).total))?;
    let accepted = accepted_by(level, |g| Ok(is_total_extremal(g, delta)?.is_extremal))?;
    let formula = total_extremal_value(delta, m);
    let s = decompose(m, delta).s;
    Ok(VerificationReport {
        check: VerificationKind::Total,
        m,
        delta: Some(delta),
        t: None,
        matches: oracle_max == formula,
        oracle_max,
        formula,
        membership_agreement: argmax == accepted,
        argmax_certificates: argmax,
        expected_argmax_size: Some(if s == 1 { 2 } else { 1 }),
        real_bound_holds: None,
        corpus_size: level.len(),
        elapsed: start.elapsed(),
    })
}

pub fn verify_kk(m: u64, t: u64, config: &SearchConfig) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    let corpus = Corpus::build(m, None, config)?;
    let mut report = config.pool()?.install(|| verify_kk_on(&corpus, m, t))?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Colex bound over all `m`-edge graphs. Maximizers: `L_m` alone when
/// `s >= t-1`; graphs containing `K_r` when `r >= t`; everything when
/// `r < t`.
pub fn verify_kk_on(corpus: &Corpus, m: u64, t: u64) -> Result<VerificationReport, SearchError> {
    let start = Instant::now();
    corpus.expect_degree(None)?;
    let level = corpus.level(m)?;
    let (oracle_max, argmax) = argmax_by(level, |g| Ok(count_kt(g, t as usize)))?;
    let c = colex_decompose(m);
    let colex_cert = canonical_form(&build_colex(m).map_err(ExtremalError::from)?);
    let accepted = accepted_by(level, |g| {
        Ok(if c.s + 1 >= t {
            canonical_form(g) == colex_cert
        } else if c.r >= t {
            has_clique(g, c.r as usize)
        } else {
            true
        })
    })?;
    let real_bound = kk_bound_real(m, t as u32);
    let real_bound_holds = level
        .par_iter()
        .all(|e| count_kt(&e.graph, t as usize).to_f64() <= real_bound + ABS_TOL);
    let formula = colex_kt(m, t);
    Ok(VerificationReport {
        check: VerificationKind::Kk,
        m,
        delta: None,
        t: Some(t),
        matches: oracle_max == formula,
        oracle_max,
        formula,
        membership_agreement: argmax == accepted,
        argmax_certificates: argmax,
        expected_argmax_size: None,
        real_bound_holds: Some(real_bound_holds),
        corpus_size: level.len(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn serial() -> SearchConfig {
        SearchConfig::with_jobs(1)
    }

    fn cert(edges: &[(usize, usize)]) -> CanonicalForm {
        canonical_form(&Graph::from_edge_list(edges).unwrap())
    }

    #[test]
    fn small_class_counts() {
        let count = |m| {
            enumerate_graphs(
                EnumerationSpec {
                    m,
                    max_degree: None,
                },
                &serial(),
            )
            .unwrap()
            .len()
        };
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 1, 2, 5));
        let three: HashSet<CanonicalForm> = enumerate_graphs(
            EnumerationSpec {
                m: 3,
                max_degree: None,
            },
            &serial(),
        )
        .unwrap()
        .iter()
        .map(canonical_form)
        .collect();
        let expected: HashSet<CanonicalForm> = [
            cert(&[(0, 1), (1, 2), (0, 2)]),
            cert(&[(0, 1), (1, 2), (2, 3)]),
            cert(&[(0, 1), (0, 2), (0, 3)]),
            cert(&[(0, 1), (1, 2), (3, 4)]),
            cert(&[(0, 1), (2, 3), (4, 5)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(three, expected);
    }

    #[test]
    fn known_class_counts() {
        // Graphs with m edges and no isolated vertices, m = 0..=8.
        let expected = [1, 1, 2, 5, 11, 26, 68, 177, 497];
        let corpus = Corpus::build(8, None, &SearchConfig::default()).unwrap();
        for (m, &n) in expected.iter().enumerate() {
            assert_eq!(corpus.level(m as u64).unwrap().len(), n, "m={m}");
        }
    }

    #[test]
    fn emitted_graphs_meet_constraints() {
        let corpus = Corpus::build(7, Some(3), &serial()).unwrap();
        for m in 0..=7 {
            let level = corpus.level(m).unwrap();
            for w in level.windows(2) {
                assert!(w[0].certificate < w[1].certificate);
            }
            for e in level {
                assert_eq!(e.graph.edge_count() as u64, m);
                assert!(e.graph.max_degree() <= 3);
                assert_eq!(e.graph.isolated_count(), 0);
                assert_eq!(canonical_form(&e.graph), e.certificate);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let config = SearchConfig {
            max_edges: 4,
            jobs: 1,
        };
        assert!(matches!(
            enumerate_graphs(
                EnumerationSpec {
                    m: 5,
                    max_degree: None
                },
                &config
            ),
            Err(SearchError::CapExceeded { m: 5, cap: 4 })
        ));
        assert!(verify_main(5, 3, 3, &config).is_err());
    }

    #[test]
    fn brute_max_examples() {
        let k4 = canonical_form(&Graph::complete(4).unwrap());
        assert_eq!(
            brute_max(6, 3, 3, &serial()).unwrap(),
            (ExactCount::from(4u64), vec![k4])
        );
        let k3 = canonical_form(&Graph::complete(3).unwrap());
        assert_eq!(
            brute_max(3, 2, 3, &serial()).unwrap(),
            (ExactCount::from(1u64), vec![k3])
        );
        let k2 = canonical_form(&Graph::complete(2).unwrap());
        assert_eq!(
            brute_max(1, 3, 3, &serial()).unwrap(),
            (ExactCount::zero(), vec![k2])
        );
    }

    #[test]
    fn main_examples() {
        let r = verify_main(13, 3, 3, &SearchConfig::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.oracle_max, ExactCount::from(8u64));
        let r = verify_main(10, 4, 3, &serial()).unwrap();
        assert!(r.passed());
        assert_eq!(r.oracle_max, ExactCount::from(10u64));
        assert_eq!(
            r.argmax_certificates,
            vec![canonical_form(&Graph::complete(5).unwrap())]
        );
        let r = verify_main(8, 4, 3, &serial()).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.argmax_certificates,
            vec![canonical_form(&build_colex(8).unwrap())]
        );
    }

    #[test]
    fn total_examples() {
        let k = |n| Graph::complete(n).unwrap();
        let l4 = build_colex(4).unwrap();
        let r = verify_total(10, 3, &serial()).unwrap();
        assert!(r.passed());
        assert_eq!(r.oracle_max, ExactCount::from(16u64));
        let mut expected = vec![
            canonical_form(&disjoint_union(&[k(4), l4]).unwrap()),
            canonical_form(&disjoint_union(&[k(4), k(3), k(2)]).unwrap()),
        ];
        expected.sort();
        assert_eq!(r.argmax_certificates, expected);
        let r = verify_total(6, 3, &serial()).unwrap();
        assert!(r.passed());
        assert_eq!(r.argmax_certificates, vec![canonical_form(&k(4))]);
        let r = verify_total(7, 3, &serial()).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.argmax_certificates,
            vec![canonical_form(&disjoint_union(&[k(4), k(2)]).unwrap())]
        );
    }

    #[test]
    fn kk_examples() {
        let corpus = Corpus::build(8, None, &serial()).unwrap();
        let r = verify_kk_on(&corpus, 7, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.oracle_max, ExactCount::from(4u64));
        let with_k4 = corpus
            .level(7)
            .unwrap()
            .iter()
            .filter(|e| has_clique(&e.graph, 4))
            .count();
        assert_eq!(r.argmax_certificates.len(), with_k4);
        let r = verify_kk_on(&corpus, 8, 3).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.argmax_certificates,
            vec![canonical_form(&build_colex(8).unwrap())]
        );
        let r = verify_kk_on(&corpus, 2, 3).unwrap();
        assert!(r.passed());
        assert_eq!(
            (r.oracle_max.clone(), r.argmax_certificates.len()),
            (ExactCount::zero(), 2)
        );
    }

    #[test]
    fn report_json_schema() {
        let r = verify_main(6, 3, 3, &serial()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "m",
            "delta",
            "t",
            "oracle_max",
            "formula",
            "match",
            "argmax",
            "membership_agreement",
            "corpus_size",
            "elapsed_ms",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["oracle_max"], "4");
        assert_eq!(v["argmax"][0], "C~");
    }
}
