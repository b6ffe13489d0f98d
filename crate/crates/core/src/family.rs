//! Named graph families and their `name:args` text form.
//!
//! | spec              | graph                                          |
//! |-------------------|------------------------------------------------|
//! | `path:n`          | path on `n` vertices                           |
//! | `cycle:n`         | cycle on `n >= 3` vertices                     |
//! | `complete:n`      | `K_n`                                          |
//! | `empty:n`         | `n` isolated vertices                          |
//! | `star:k`          | `K_{1,k}`, center 0                            |
//! | `multipartite:..` | `K_{n1,...,nk}`; `1x26,8` repeats 1 26 times   |
//! | `ladder:n`        | `H_n`, the `2 x n` ladder                      |
//! | `gn:n`            | `G_n`, `H_n` plus a pendant vertex             |
//! | `T`, `T1`         | the two rooted trees with labeled roots 1..4   |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    /// `H_n`: vertex `(r, c)`, `r in {0,1}`, `c in 1..=n`, sits at index
    /// `r * n + c - 1`. Rungs `(0,c)-(1,c)` and rails `(r,c)-(r,c+1)`.
    LadderH(usize),
    /// `G_n`: `H_n` plus vertex `2n` adjacent to `(0, n)`. `G_0 = K_1`.
    PendantLadderG(usize),
    /// Tree `T` on labels 1..=5 (index = label - 1): edges 1-3, 5-3, 3-2, 2-4.
    Fig2T,
    /// Tree `T1` on labels 1..=6: edges 1-5, 6-5, 5-2, 2-3, 3-4.
    Fig2T1,
}

const T_EDGES: [(usize, usize); 4] = [(1, 3), (5, 3), (3, 2), (2, 4)];
const T1_EDGES: [(usize, usize); 5] = [(1, 5), (6, 5), (5, 2), (2, 3), (3, 4)];

fn labeled_tree(n: usize, edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(n, &edges).expect("fixed tree is valid")
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Path(n) => {
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            Complete(n) => Graph::complete(*n),
            Empty(n) => Graph::empty(*n),
            Star(k) => {
                let edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
                Graph::from_edges(k + 1, &edges)
            }
            CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidParameter(
                        "complete multipartite graph needs at least one part".into(),
                    ));
                }
                let total: usize = parts.iter().sum();
                let mut g = Graph::empty(total)?;
                let mut part_of = Vec::with_capacity(total);
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, size));
                }
                for u in 0..total {
                    for v in u + 1..total {
                        if part_of[u] != part_of[v] {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
            LadderH(n) => ladder(*n, false),
            PendantLadderG(n) => ladder(*n, true),
            Fig2T => Ok(labeled_tree(5, &T_EDGES)),
            Fig2T1 => Ok(labeled_tree(6, &T1_EDGES)),
        }
    }
}

fn ladder(n: usize, pendant: bool) -> Result<Graph> {
    let total = 2 * n + usize::from(pendant);
    let mut g = Graph::empty(total)?;
    let at = |r: usize, c: usize| r * n + c - 1;
    for c in 1..=n {
        g.add_edge(at(0, c), at(1, c))?;
        if c < n {
            g.add_edge(at(0, c), at(0, c + 1))?;
            g.add_edge(at(1, c), at(1, c + 1))?;
        }
    }
    if pendant && n > 0 {
        g.add_edge(2 * n, at(0, n))?;
    }
    Ok(g)
}

/// Which of the two fixed trees to use as the rooted factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fig2Tree {
    T,
    T1,
}

impl Fig2Tree {
    pub fn graph(self) -> Graph {
        match self {
            Fig2Tree::T => labeled_tree(5, &T_EDGES),
            Fig2Tree::T1 => labeled_tree(6, &T1_EDGES),
        }
    }

    /// Vertex index of a root label in `1..=4`.
    pub fn root_index(label: usize) -> Result<usize> {
        if !(1..=4).contains(&label) {
            return Err(Error::InvalidParameter(format!("root label must be 1..=4, got {label}")));
        }
        Ok(label - 1)
    }
}

impl FromStr for Fig2Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "T" => Ok(Fig2Tree::T),
            "T1" => Ok(Fig2Tree::T1),
            _ => Err(ParseError::Family {
                spec: s.into(),
                reason: "expected T or T1".into(),
            }),
        }
    }
}

impl fmt::Display for Fig2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fig2Tree::T => "T",
            Fig2Tree::T1 => "T1",
        })
    }
}

fn parse_parts(spec: &str, args: &str) -> std::result::Result<Vec<usize>, ParseError> {
    let bad = |reason: String| ParseError::Family {
        spec: spec.into(),
        reason,
    };
    let mut parts = Vec::new();
    for item in args.split(',') {
        let item = item.trim();
        let (size, reps) = match item.split_once('x') {
            Some((size, reps)) => (size, reps),
            None => (item, "1"),
        };
        let size: usize = size
            .parse()
            .map_err(|_| bad(format!("bad part size {size:?}")))?;
        let reps: usize = reps
            .parse()
            .map_err(|_| bad(format!("bad repetition count {reps:?}")))?;
        if size == 0 {
            return Err(bad("part sizes must be positive".into()));
        }
        parts.extend(std::iter::repeat_n(size, reps));
    }
    if parts.is_empty() {
        return Err(bad("needs at least one part".into()));
    }
    Ok(parts)
}

impl FromStr for FamilySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let bad = |reason: &str| ParseError::Family {
            spec: s.into(),
            reason: reason.into(),
        };
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        let index = || -> std::result::Result<usize, ParseError> {
            args.ok_or_else(|| bad("missing size argument"))?
                .parse()
                .map_err(|_| bad("size must be a nonnegative integer"))
        };
        use FamilySpec::*;
        Ok(match name {
            "path" => Path(index()?),
            "cycle" => Cycle(index()?),
            "complete" => Complete(index()?),
            "empty" => Empty(index()?),
            "star" => Star(index()?),
            "ladder" => LadderH(index()?),
            "gn" => PendantLadderG(index()?),
            "multipartite" => {
                CompleteMultipartite(parse_parts(s, args.ok_or_else(|| bad("missing parts"))?)?)
            }
            "T" if args.is_none() => Fig2T,
            "T1" if args.is_none() => Fig2T1,
            _ => return Err(bad("unknown family")),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            Star(n) => write!(f, "star:{n}"),
            LadderH(n) => write!(f, "ladder:{n}"),
            PendantLadderG(n) => write!(f, "gn:{n}"),
            Fig2T => f.write_str("T"),
            Fig2T1 => f.write_str("T1"),
            CompleteMultipartite(parts) => {
                f.write_str("multipartite:")?;
                let mut first = true;
                let mut i = 0;
                while i < parts.len() {
                    let run = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
                    if !first {
                        f.write_str(",")?;
                    }
                    first = false;
                    if run > 1 {
                        write!(f, "{}x{run}", parts[i])?;
                    } else {
                        write!(f, "{}", parts[i])?;
                    }
                    i += run;
                }
                Ok(())
            }
        }
    }
}
