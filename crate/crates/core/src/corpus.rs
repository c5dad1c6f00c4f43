/*!
Graph corpora: load them from planar_code files or grow them
deterministically from a seed.

A corpus spec is a one-line string:

* `file:PATH` — decode every record in a planar_code file;
* `gen:A..B,count=K,seed=S[,nofilter]` — grow `K` distinct graphs with
  vertex counts in `A..=B` from the ChaCha seed `S`. By default only
  graphs free of 4- and 5-cycles are kept; `nofilter` keeps everything.

Generation is reproducible: the same spec yields byte-identical graphs
on every run and platform. Growth starts from a triangle and repeatedly
either splits a face with a chord or inserts a new vertex attached to
one, two or three positions of a face walk; candidate steps that violate
simplicity, planarity bookkeeping, or (when filtering) the cycle
restriction are rejected and redrawn, up to eight draws per step.
*/

use crate::planar_code::{decode_graphs, encode_graph, CodeError};
use crate::plane_graph::{FaceId, PlaneGraph, MAX_VERTICES};
use crate::grow::{insert_vertex_in_face, split_face, triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::collections::BTreeSet;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unreadable corpus spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(
        "generation stalled after {attempts} attempts: produced {produced} of {want} graphs \
         (widen the vertex range, lower the count, or change the seed)"
    )]
    Exhausted {
        attempts: usize,
        produced: usize,
        want: usize,
    },
}

/// Parameters of a seeded growth run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub seed: u64,
    /// Keep only graphs without 4- and 5-cycles.
    pub filter: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    File(PathBuf),
    Gen(GenSpec),
}

impl CorpusSpec {
    pub fn parse(s: &str) -> Result<Self, CorpusError> {
        let bad = |reason: &str| CorpusError::Parse {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (scheme, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected file:PATH or gen:A..B,count=K,seed=S"))?;
        match scheme {
            "file" => {
                if rest.is_empty() {
                    return Err(bad("empty path"));
                }
                Ok(CorpusSpec::File(PathBuf::from(rest)))
            }
            "gen" => {
                let mut parts = rest.split(',');
                let range = parts.next().ok_or_else(|| bad("missing vertex range"))?;
                let (lo, hi) = range
                    .split_once("..")
                    .ok_or_else(|| bad("vertex range must look like A..B"))?;
                let n_min: usize = lo
                    .parse()
                    .map_err(|_| bad("vertex range lower bound is not a number"))?;
                let n_max: usize = hi
                    .parse()
                    .map_err(|_| bad("vertex range upper bound is not a number"))?;
                let mut count = None;
                let mut seed = None;
                let mut filter = true;
                for part in parts {
                    if part == "nofilter" {
                        filter = false;
                    } else if let Some(v) = part.strip_prefix("count=") {
                        count = Some(v.parse().map_err(|_| bad("count is not a number"))?);
                    } else if let Some(v) = part.strip_prefix("seed=") {
                        seed = Some(v.parse().map_err(|_| bad("seed is not a number"))?);
                    } else {
                        return Err(bad(&format!("unknown option {part:?}")));
                    }
                }
                let spec = GenSpec {
                    n_min,
                    n_max,
                    count: count.ok_or_else(|| bad("missing count=K"))?,
                    seed: seed.ok_or_else(|| bad("missing seed=S"))?,
                    filter,
                };
                validate(&spec).map_err(|reason| bad(&reason))?;
                Ok(CorpusSpec::Gen(spec))
            }
            other => Err(bad(&format!("unknown scheme {other:?}"))),
        }
    }

    pub fn load(&self) -> Result<Vec<PlaneGraph>, CorpusError> {
        match self {
            CorpusSpec::File(path) => {
                let bytes = std::fs::read(path).map_err(|source| CorpusError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(decode_graphs(&bytes)?)
            }
            CorpusSpec::Gen(spec) => generate(spec),
        }
    }
}

fn validate(spec: &GenSpec) -> Result<(), String> {
    if spec.n_min < 3 {
        return Err("growth starts from a triangle; the lower bound must be at least 3".into());
    }
    if spec.n_max < spec.n_min {
        return Err("empty vertex range".into());
    }
    if spec.n_max > MAX_VERTICES {
        return Err(format!("upper bound exceeds the {MAX_VERTICES}-vertex format limit"));
    }
    if spec.count == 0 {
        return Err("count must be positive".into());
    }
    Ok(())
}

/// Hex SHA-256 of the graph's planar_code record: a stable identity for
/// dedup and reports.
pub fn digest(g: &PlaneGraph) -> String {
    hex::encode(Sha256::digest(encode_graph(g)))
}

/// Grow `spec.count` pairwise distinct graphs. Distinctness is by encoded
/// bytes, so relabelings of the same shape may both appear.
pub fn generate(spec: &GenSpec) -> Result<Vec<PlaneGraph>, CorpusError> {
    validate(spec).map_err(|reason| CorpusError::Parse {
        spec: format!("{spec:?}"),
        reason,
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    let mut seen = BTreeSet::new();
    let budget = spec.count * 200 + 1000;
    let mut attempts = 0;
    while out.len() < spec.count {
        attempts += 1;
        if attempts > budget {
            return Err(CorpusError::Exhausted {
                attempts: budget,
                produced: out.len(),
                want: spec.count,
            });
        }
        let target = rng.gen_range(spec.n_min..=spec.n_max);
        let g = grow_one(&mut rng, target, spec.filter);
        if g.vertex_count() < spec.n_min {
            continue;
        }
        if seen.insert(digest(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Grow toward `target` vertices, stopping early if eight consecutive
/// draws fail to produce a legal step.
fn grow_one(rng: &mut ChaCha8Rng, target: usize, filter: bool) -> PlaneGraph {
    let mut g = triangle();
    // Face splits add no vertices, so bound the op count independently.
    let max_ops = 4 * target + 40;
    let mut ops = 0;
    while g.vertex_count() < target && ops < max_ops {
        ops += 1;
        let mut stepped = false;
        for _ in 0..8 {
            if let Some(next) = random_step(rng, &g, filter) {
                g = next;
                stepped = true;
                break;
            }
        }
        if !stepped {
            break;
        }
    }
    g
}

fn random_step(rng: &mut ChaCha8Rng, g: &PlaneGraph, filter: bool) -> Option<PlaneGraph> {
    let face: FaceId = rng.gen_range(0..g.face_count());
    let d = g.face(face).degree();
    let next = if rng.gen_bool(0.3) && d >= 4 {
        // Chord the face between two walk positions at least two apart
        // in both directions around the walk.
        let i = rng.gen_range(0..d);
        let span = rng.gen_range(2..=(d - 2));
        let (i, j) = (i.min((i + span) % d), i.max((i + span) % d));
        if j - i < 2 || d - (j - i) < 2 {
            return None;
        }
        split_face(g, face, i, j).ok()?
    } else {
        let m = rng.gen_range(1..=3usize).min(d);
        let mut positions: BTreeSet<usize> = BTreeSet::new();
        while positions.len() < m {
            positions.insert(rng.gen_range(0..d));
        }
        let positions: Vec<usize> = positions.into_iter().collect();
        insert_vertex_in_face(g, face, &positions).ok()?
    };
    if filter && !next.in_class() {
        return None;
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse_and_misparse() {
        assert_eq!(
            CorpusSpec::parse("file:graphs/run.plc").unwrap(),
            CorpusSpec::File(PathBuf::from("graphs/run.plc"))
        );
        assert_eq!(
            CorpusSpec::parse("gen:4..12,count=50,seed=7").unwrap(),
            CorpusSpec::Gen(GenSpec {
                n_min: 4,
                n_max: 12,
                count: 50,
                seed: 7,
                filter: true,
            })
        );
        assert_eq!(
            CorpusSpec::parse("gen:3..9,count=5,seed=0,nofilter").unwrap(),
            CorpusSpec::Gen(GenSpec {
                n_min: 3,
                n_max: 9,
                count: 5,
                seed: 0,
                filter: false,
            })
        );
        for bad in [
            "gen",
            "zip:stuff",
            "gen:count=5,seed=0",
            "gen:4..12,count=5",
            "gen:4..12,seed=0",
            "gen:12..4,count=5,seed=0",
            "gen:2..9,count=5,seed=0",
            "gen:4..700,count=5,seed=0",
            "gen:4..12,count=0,seed=0",
            "gen:4..12,count=5,seed=0,loud",
        ] {
            assert!(CorpusSpec::parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = GenSpec {
            n_min: 4,
            n_max: 10,
            count: 25,
            seed: 42,
            filter: true,
        };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        let codes = |gs: &[PlaneGraph]| gs.iter().map(encode_graph).collect::<Vec<_>>();
        assert_eq!(codes(&a), codes(&b));
        assert_eq!(a.len(), 25);
    }

    #[test]
    fn filtered_output_avoids_short_cycles() {
        let spec = GenSpec {
            n_min: 4,
            n_max: 12,
            count: 60,
            seed: 1,
            filter: true,
        };
        for g in generate(&spec).unwrap() {
            assert!(g.in_class(), "generated graph has a 4- or 5-cycle");
            assert!((4..=12).contains(&g.vertex_count()));
        }
    }

    #[test]
    fn unfiltered_output_eventually_leaves_the_class() {
        let spec = GenSpec {
            n_min: 6,
            n_max: 12,
            count: 60,
            seed: 2,
            filter: false,
        };
        let graphs = generate(&spec).unwrap();
        assert!(
            graphs.iter().any(|g| !g.in_class()),
            "sixty unfiltered graphs all dodged 4- and 5-cycles; the filter flag is moot"
        );
    }

    #[test]
    fn outputs_are_pairwise_distinct() {
        let spec = GenSpec {
            n_min: 3,
            n_max: 8,
            count: 40,
            seed: 9,
            filter: false,
        };
        let graphs = generate(&spec).unwrap();
        let digests: BTreeSet<String> = graphs.iter().map(digest).collect();
        assert_eq!(digests.len(), graphs.len());
    }

    #[test]
    fn different_seeds_differ() {
        let base = GenSpec {
            n_min: 5,
            n_max: 10,
            count: 10,
            seed: 3,
            filter: true,
        };
        let other = GenSpec { seed: 4, ..base.clone() };
        let a: Vec<_> = generate(&base).unwrap().iter().map(encode_graph).collect();
        let b: Vec<_> = generate(&other).unwrap().iter().map(encode_graph).collect();
        assert_ne!(a, b);
    }

    #[test]
    fn file_specs_round_trip_through_disk() {
        use crate::planar_code::encode_graphs;
        let graphs = vec![triangle(), crate::fixtures::k4()];
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("two.plc");
        std::fs::write(&path, encode_graphs(&graphs, true)).unwrap();
        let spec = CorpusSpec::parse(&format!("file:{}", path.display())).unwrap();
        let loaded = spec.load().unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(encode_graph(&loaded[1]), encode_graph(&graphs[1]));
    }

    #[test]
    fn digests_separate_distinct_graphs() {
        assert_eq!(digest(&triangle()), digest(&triangle()));
        assert_ne!(digest(&triangle()), digest(&crate::fixtures::k4()));
        assert_eq!(digest(&triangle()).len(), 64);
    }
}
