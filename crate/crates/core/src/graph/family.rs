use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A named graph family with its parameters.
///
/// Canonical labelings:
/// * `Path`/`Cycle`: `i ~ i+1` (and `n-1 ~ 0` for cycles);
/// * `Wheel(n)`: rim `C_n` on `0..n`, hub `n` (order `n + 1`);
/// * `Star(k)`: hub `0`, leaves `1..=k`;
/// * `CompleteMultipartite`: parts occupy consecutive label blocks.
///
/// Random families draw from ChaCha8 seeded with `seed` through
/// `SeedableRng::seed_from_u64`, so a spec always yields the same graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Wheel {
        n: usize,
    },
    Star {
        k: usize,
    },
    ComplementCycle {
        n: usize,
    },
    ComplementPath {
        n: usize,
    },
    /// Uniform labeled tree via a uniform Prüfer sequence.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Erdős–Rényi `G(n, num/den)`.
    RandomGraph {
        n: usize,
        num: u64,
        den: u64,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: String| Err(Error::domain(msg));
        match self {
            Cycle { n } | ComplementCycle { n } if *n < 3 => {
                bad(format!("cycle order must be at least 3, got {n}"))
            }
            Path { n } | Complete { n } | ComplementPath { n } if *n < 1 => {
                bad("order must be at least 1".into())
            }
            Wheel { n } if *n < 3 => bad(format!("wheel rim must be at least 3, got {n}")),
            Star { k } if *k < 1 => bad("star needs at least one leaf".into()),
            CompleteMultipartite { parts } if parts.is_empty() || parts.contains(&0) => {
                bad("multipartite parts must be non-empty".into())
            }
            RandomGraph { den, num, .. } if *den == 0 || num > den => {
                bad(format!("edge probability {num}/{den} is not in [0, 1]"))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        self.validate()?;
        match self {
            Path { n } => Graph::new(*n, (1..*n).map(|i| (i - 1, i))),
            Cycle { n } => Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n))),
            Complete { n } => {
                Graph::empty(*n)?;
                let all = VertexSet::full(*n);
                Ok(Graph::from_adjacency(
                    (0..*n).map(|v| all - VertexSet::singleton(v)).collect(),
                ))
            }
            CompleteMultipartite { parts } => {
                let total: usize = parts.iter().sum();
                let mut block = vec![0; total];
                let mut next = 0;
                for (p, &size) in parts.iter().enumerate() {
                    block[next..next + size].fill(p);
                    next += size;
                }
                Graph::new(
                    total,
                    (0..total).flat_map(|u| {
                        let block = &block;
                        (u + 1..total)
                            .filter(move |&v| block[u] != block[v])
                            .map(move |v| (u, v))
                    }),
                )
            }
            Wheel { n } => Cycle { n: *n }.generate()?.add_universal_vertex(),
            Star { k } => Graph::new(k + 1, (1..=*k).map(|v| (0, v))),
            ComplementCycle { n } => Ok(Cycle { n: *n }.generate()?.complement()),
            ComplementPath { n } => Ok(Path { n: *n }.generate()?.complement()),
            RandomTree { n, seed } => {
                Graph::empty(*n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let seq: Vec<usize> = (0..n.saturating_sub(2))
                    .map(|_| rng.gen_range(0..*n))
                    .collect();
                prufer_decode(&seq, *n)
            }
            RandomGraph { n, num, den, seed } => {
                Graph::empty(*n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.gen_range(0..*den) < *num {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(*n, edges)
            }
        }
    }
}

/// Decodes a Prüfer sequence (entries in `0..n`, length `n - 2`) into a
/// labeled tree. `n` of 1 or 2 takes the empty sequence.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("a tree needs at least one vertex"));
    }
    if seq.len() != n.saturating_sub(2) {
        return Err(Error::input(format!(
            "Prüfer sequence for {n} vertices must have length {}, got {}",
            n.saturating_sub(2),
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut g = Graph::empty(n)?;
    if n == 1 {
        return Ok(g);
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    // linear-time decoding: `ptr` scans for the smallest leaf, `leaf` follows chains
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    let mut link = |u: usize, v: usize| {
        g.adj[u].insert(v);
        g.adj[v].insert(u);
    };
    for &x in seq {
        link(leaf, x);
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    link(leaf, n - 1);
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path { n } => write!(f, "path:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Complete { n } => write!(f, "complete:{n}"),
            CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Wheel { n } => write!(f, "wheel:{n}"),
            Star { k } => write!(f, "star:{k}"),
            ComplementCycle { n } => write!(f, "cycle-complement:{n}"),
            ComplementPath { n } => write!(f, "path-complement:{n}"),
            RandomTree { n, seed } => write!(f, "random-tree:{n},{seed}"),
            RandomGraph { n, num, den, seed } => write!(f, "random:{n},{num},{den},{seed}"),
        }
    }
}

/// Parses the `name:params` shorthand, e.g. `cycle:10`, `multipartite:2,3,4`,
/// `random-tree:12,7` (order, seed) or `random:8,1,2,42` (order, p = 1/2, seed).
/// A missing seed defaults to 0.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("family `{s}` is missing `:params`")))?;
        let nums = params
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::input(format!("bad family parameter `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<u64>>>()?;
        let arity = |lo: usize, hi: usize| -> Result<()> {
            if nums.len() < lo || nums.len() > hi {
                Err(Error::input(format!(
                    "family `{name}` takes {lo}..={hi} parameters, got {}",
                    nums.len()
                )))
            } else {
                Ok(())
            }
        };
        let n = nums[0] as usize;
        let spec = match name {
            "path" => arity(1, 1).map(|_| FamilySpec::Path { n }),
            "cycle" => arity(1, 1).map(|_| FamilySpec::Cycle { n }),
            "complete" => arity(1, 1).map(|_| FamilySpec::Complete { n }),
            "wheel" => arity(1, 1).map(|_| FamilySpec::Wheel { n }),
            "star" => arity(1, 1).map(|_| FamilySpec::Star { k: n }),
            "cycle-complement" => arity(1, 1).map(|_| FamilySpec::ComplementCycle { n }),
            "path-complement" => arity(1, 1).map(|_| FamilySpec::ComplementPath { n }),
            "multipartite" => Ok(FamilySpec::CompleteMultipartite {
                parts: nums.iter().map(|&p| p as usize).collect(),
            }),
            "random-tree" => arity(1, 2).map(|_| FamilySpec::RandomTree {
                n,
                seed: nums.get(1).copied().unwrap_or(0),
            }),
            "random" => arity(3, 4).map(|_| FamilySpec::RandomGraph {
                n,
                num: nums[1],
                den: nums[2],
                seed: nums.get(3).copied().unwrap_or(0),
            }),
            other => Err(Error::input(format!("unknown family `{other}`"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}
