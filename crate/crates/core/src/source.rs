//! Graph sources for the verification sweeps: built-in exhaustive
//! enumeration, graph6 files, construction grids over the named extremal
//! families, and seeded random sampling.

use crate::enumerate::enumerate_2connected_cached;
use crate::extremal::{build_class_member, build_h, t_of, ClassSpec, LabeledConstruction, StarShape};
use crate::graph::SimpleGraph;
use crate::graph6::{self, Graph6Error};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("parameter violation: {0}")]
    Params(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("graph6 error: {0}")]
    Graph6(#[from] Graph6Error),
}

/// Where a sweep's graphs come from. Determines the report's coverage label:
/// only the built-in enumeration is exhaustive over isomorphism classes.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    /// Every 2-connected isomorphism class on `n` vertices, 3 <= n <= 10.
    Builtin { n: usize },
    /// Newline-delimited graph6 records.
    Graph6File { path: PathBuf },
    /// Edge-maximal members of the extremal families for threshold `k`,
    /// over the vertex range.
    ConstructionGrid {
        k: usize,
        n_min: usize,
        n_max: usize,
    },
    /// `count` seeded G(n, density) samples.
    Random {
        seed: u64,
        n: usize,
        density: f64,
        count: usize,
    },
}

impl GraphSource {
    pub fn coverage_mode(&self) -> &'static str {
        match self {
            GraphSource::Builtin { .. } => "exhaustive",
            GraphSource::Graph6File { .. } => "file",
            GraphSource::ConstructionGrid { .. } | GraphSource::Random { .. } => "property-based",
        }
    }

    /// Materialize the source in deterministic order.
    pub fn graphs(&self) -> Result<Vec<SimpleGraph>, SourceError> {
        match self {
            GraphSource::Builtin { n } => {
                if !(3..=10).contains(n) {
                    return Err(SourceError::Params(format!(
                        "builtin enumeration needs 3 <= n <= 10, got {n}"
                    )));
                }
                Ok(enumerate_2connected_cached(*n).to_vec())
            }
            GraphSource::Graph6File { path } => read_graph6(path),
            GraphSource::ConstructionGrid { k, n_min, n_max } => {
                if n_min > n_max {
                    return Err(SourceError::Params("empty n range".into()));
                }
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    out.extend(grid_members(*k, n).into_iter().map(|c| c.graph));
                }
                Ok(out)
            }
            GraphSource::Random {
                seed,
                n,
                density,
                count,
            } => {
                if !(0.0..=1.0).contains(density) {
                    return Err(SourceError::Params(format!(
                        "density must be in [0, 1], got {density}"
                    )));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..*count).map(|_| random_graph(&mut rng, *n, *density)).collect())
            }
        }
    }
}

/// Read a newline-delimited graph6 file.
pub fn read_graph6(path: &Path) -> Result<Vec<SimpleGraph>, SourceError> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| graph6::decode(line).map_err(SourceError::from))
        .collect()
}

/// Write graphs as newline-delimited graph6 records.
pub fn write_graph6(graphs: &[SimpleGraph], path: &Path) -> Result<(), SourceError> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&graph6::encode(g)?);
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// G(n, p) with a caller-provided RNG; every unordered pair is an edge
/// independently with probability `density`.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g = g.with_edge(u, v);
            }
        }
    }
    g
}

/// Edge-maximal members of the stability classes for threshold `k` on `n`
/// vertices: the H graphs plus representative shape choices for the classes
/// that apply at this `k`. Candidates with inconsistent part sizes are
/// silently skipped, so callers get exactly the buildable members.
pub fn grid_members(k: usize, n: usize) -> Vec<LabeledConstruction> {
    if k < 4 || n < k {
        return Vec::new();
    }
    let t = t_of(k);
    let mut specs: Vec<ClassSpec> = Vec::new();
    let mut out: Vec<LabeledConstruction> = Vec::new();

    let mut h_params: BTreeSet<usize> = BTreeSet::new();
    // a = 1 is excluded: H_{n,k,1} has degree-1 vertices in B and is
    // never 2-connected
    for a in [2, t.saturating_sub(1), t] {
        if a >= 2 && 2 * a < k {
            h_params.insert(a);
        }
    }
    for a in h_params {
        if let Ok(c) = build_h(n, k, a) {
            out.push(c);
        }
    }

    let star = |size: usize, anchor: usize| StarShape { size, anchor };
    // classes with the A/B/J frame: G2/G3 exist for k = 6 and even k >= 8;
    // the k = 7 list reuses the k = 6 classes
    let (frame_t, frame_k) = if k == 7 { (2, 6) } else { (t, k) };
    if k == 6 || k == 7 || (k.is_multiple_of(2) && k >= 8) {
        for j in 1..=3usize {
            if frame_t + j < n {
                specs.push(ClassSpec::G2 {
                    n,
                    k: frame_k,
                    j,
                });
            }
        }
        // G3 joins the class list one threshold later than G2
        if k != 6 {
            let rest = n.saturating_sub(frame_t + 1); // leave one B vertex
            for stars in [
                vec![star(2, 0), star(2, 0)],
                vec![star(2, 0), star(3, 1)],
                vec![star(2, 1), star(rest.saturating_sub(2), 0)],
            ] {
                if stars.iter().map(|s| s.size).sum::<usize>() <= rest
                    && stars.iter().all(|s| s.size >= 2)
                {
                    specs.push(ClassSpec::G3 {
                        n,
                        k: frame_k,
                        stars,
                    });
                }
            }
        }
    }
    if k == 10 && n > 5 {
        specs.push(ClassSpec::G4 {
            n,
            stars: vec![star(2, 0)],
        });
        if n >= 8 {
            specs.push(ClassSpec::G4 {
                n,
                stars: vec![star(n - 5, 0), star(2, 1)],
            });
        }
        if n >= 9 {
            specs.push(ClassSpec::G4 {
                n,
                stars: vec![star(3, 2), star(3, 0)],
            });
        }
    }
    if k == 8 {
        let rest5 = n - 3;
        specs.push(ClassSpec::G5 {
            n,
            bridges: vec![],
            singles: (0..rest5).map(|i| 1 + i % 2).collect(),
        });
        if rest5 >= 3 {
            specs.push(ClassSpec::G5 {
                n,
                bridges: vec![(star(rest5 - 1, 0), 1)],
                singles: vec![2],
            });
        }
        let rest6 = n - 4;
        if rest6 >= 3 {
            specs.push(ClassSpec::G6 {
                n,
                bridges: vec![star(rest6 - 1, 0)],
                singles: vec![1],
            });
        }
        if rest6 >= 3 {
            specs.push(ClassSpec::G7 {
                n,
                bridges: vec![star(rest6 - 1, 0)],
                n_singles: 1,
            });
            specs.push(ClassSpec::G7 {
                n,
                bridges: vec![star(2, 0)],
                n_singles: rest6 - 2,
            });
        }
        let rest8 = n.saturating_sub(5);
        if rest8 >= 3 {
            specs.push(ClassSpec::G8 {
                n,
                bridges: vec![star(rest8 - 1, 0)],
                n_singles: 1,
            });
        }
        if rest8 >= 2 {
            specs.push(ClassSpec::G8 {
                n,
                bridges: vec![star(rest8, 0)],
                n_singles: 0,
            });
        }
    }

    out.extend(specs.iter().filter_map(|s| build_class_member(s).ok()));
    // drop isomorphic duplicates, keeping first occurrences
    let mut seen = BTreeSet::new();
    out.retain(|c| seen.insert(crate::canon::canonical_key(&c.graph)));
    out
}
