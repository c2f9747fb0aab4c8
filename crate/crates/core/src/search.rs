//! Exhaustive search for the persistence diagrams a graph can carry.
//!
//! A function's diagram depends only on its build sequence (see
//! [`crate::sequence`]) and the integer times of its critical moves. The
//! search walks all build sequences, remembering only which event happened at
//! each critical step: a birth, a cycle, or the death of a named earlier
//! birth. These *event patterns* are collected with a memo keyed by the
//! simplices present and the age order of the current components; then every
//! pattern with `m` events is combined with every choice of times
//! `0 = t_0 < t_1 < ... < t_{m-1} <= n - 1`.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::morse::{MorseError, MorseFunction};
use crate::persistence::{DiagramSet, PersistenceDiagram};
use crate::sequence::{function_from_moves, BuildMove};

/// Default cap on the simplex count of a searched graph.
pub const DEFAULT_MAX_SIMPLICES: usize = 14;
/// The cap can be raised through `MORSE_MAX_SIMPLICES`, but never past this.
pub const HARD_MAX_SIMPLICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {simplices} simplices; the search is limited to {limit} (set MORSE_MAX_SIMPLICES to raise it)")]
    TooLarge { simplices: usize, limit: usize },
    #[error("the search needs a connected, non-empty graph")]
    Disconnected,
}

/// The simplex cap in force: `MORSE_MAX_SIMPLICES` if set and parseable,
/// otherwise [`DEFAULT_MAX_SIMPLICES`]; at most [`HARD_MAX_SIMPLICES`].
pub fn max_search_simplices() -> usize {
    std::env::var("MORSE_MAX_SIMPLICES")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_SIMPLICES)
        .min(HARD_MAX_SIMPLICES)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    Birth,
    Cycle,
    /// Death of the component born at the given event index.
    Kill(usize),
}

/// The events of one build sequence, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventPattern(pub Vec<Event>);

impl EventPattern {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(b1, k)`: cycle count and finite pair count.
    pub fn shape(&self) -> (usize, usize) {
        let cycles = self.0.iter().filter(|e| **e == Event::Cycle).count();
        let kills = self.0.iter().filter(|e| matches!(e, Event::Kill(_))).count();
        (cycles, kills)
    }

    /// The diagram obtained when event `i` happens at `times[i]`.
    pub fn diagram(&self, times: &[u64]) -> PersistenceDiagram {
        assert_eq!(times.len(), self.len());
        let mut alive = vec![false; self.len()];
        let mut pairs = Vec::new();
        let mut cycles = Vec::new();
        for (i, e) in self.0.iter().enumerate() {
            match *e {
                Event::Birth => alive[i] = true,
                Event::Cycle => cycles.push(times[i]),
                Event::Kill(b) => {
                    alive[b] = false;
                    pairs.push((times[b], times[i]));
                }
            }
        }
        let essential = (0..self.len()).filter(|&i| alive[i]).map(|i| times[i]).collect();
        PersistenceDiagram::new(pairs, essential, cycles)
    }
}

// Suffix patterns are stored as bytes. A kill names either a component that
// existed when the suffix started (by age rank) or a birth inside the suffix
// (by position).
const BIRTH: u8 = 254;
const CYCLE: u8 = 255;
const NEW: u8 = 64;

/// One build sequence per pattern, shared between memo entries.
#[derive(Debug)]
struct Witness {
    mv: BuildMove,
    rest: Option<Rc<Witness>>,
}

fn witness_moves(w: &Option<Rc<Witness>>) -> Vec<BuildMove> {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while let Some(node) = cur {
        out.push(node.mv);
        cur = node.rest.clone();
    }
    out
}

type Suffixes = Rc<BTreeMap<Vec<u8>, Option<Rc<Witness>>>>;

struct Searcher<'g> {
    graph: &'g Graph,
    edges: Vec<(usize, usize)>,
    vertex_count: usize,
    full: u64,
    memo: HashMap<(u64, Vec<u8>), Suffixes>,
}

const ABSENT: u8 = u8::MAX;

impl Searcher<'_> {
    fn bit_vertex(&self, v: usize) -> u64 {
        1 << v
    }

    fn bit_edge(&self, e: usize) -> u64 {
        1 << (self.vertex_count + e)
    }

    fn edge(&self, e: usize) -> Edge {
        self.graph.edges()[e]
    }

    /// `ranks[v]` is the age rank of the component holding vertex `v` (0 is
    /// the oldest) or `ABSENT`.
    fn suffixes(&mut self, mask: u64, ranks: Vec<u8>) -> Suffixes {
        if mask == self.full {
            return Rc::new(BTreeMap::from([(Vec::new(), None)]));
        }
        let key = (mask, ranks);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (mask, ranks) = key;
        let components = ranks.iter().filter(|&&r| r != ABSENT).max().map_or(0, |&r| r as usize + 1);
        let mut out: BTreeMap<Vec<u8>, Option<Rc<Witness>>> = BTreeMap::new();
        let mut add = |prefix: Option<u8>, mv: BuildMove, child: &Suffixes, map_old: &dyn Fn(u8) -> u8| {
            for (suffix, w) in child.iter() {
                let mut pattern = Vec::with_capacity(suffix.len() + 1);
                pattern.extend(prefix);
                let shift = u8::from(prefix.is_some());
                for &b in suffix {
                    pattern.push(match b {
                        BIRTH | CYCLE => b,
                        b if b >= NEW => b + shift,
                        r => map_old(r),
                    });
                }
                out.entry(pattern).or_insert_with(|| Some(Rc::new(Witness { mv, rest: w.clone() })));
            }
        };

        for v in 0..self.vertex_count {
            if mask & self.bit_vertex(v) != 0 {
                continue;
            }
            // A new component, youngest of all.
            let mut next = ranks.clone();
            next[v] = components as u8;
            let child = self.suffixes(mask | self.bit_vertex(v), next);
            let born = components as u8;
            add(Some(BIRTH), BuildMove::CriticalVertex(self.graph.vertices()[v]), &child, &|r| {
                if r == born {
                    NEW
                } else {
                    r
                }
            });
        }
        for e in 0..self.edges.len() {
            if mask & self.bit_edge(e) != 0 {
                continue;
            }
            let (a, b) = self.edges[e];
            let (pa, pb) = (mask & self.bit_vertex(a) != 0, mask & self.bit_vertex(b) != 0);
            if pa != pb {
                let (old, new) = if pa { (a, b) } else { (b, a) };
                let mut next = ranks.clone();
                next[new] = ranks[old];
                let child = self.suffixes(mask | self.bit_vertex(new) | self.bit_edge(e), next);
                let mv = BuildMove::Regular(self.graph.vertices()[new], self.edge(e));
                add(None, mv, &child, &|r| r);
            } else if pa && pb {
                let (ra, rb) = (ranks[a], ranks[b]);
                let child_mask = mask | self.bit_edge(e);
                let mv = BuildMove::CriticalEdge(self.edge(e));
                if ra == rb {
                    let child = self.suffixes(child_mask, ranks.clone());
                    add(Some(CYCLE), mv, &child, &|r| r);
                } else {
                    let (older, younger) = (ra.min(rb), ra.max(rb));
                    let next = ranks
                        .iter()
                        .map(|&r| match r {
                            ABSENT => ABSENT,
                            r if r == younger => older,
                            r if r > younger => r - 1,
                            r => r,
                        })
                        .collect();
                    let child = self.suffixes(child_mask, next);
                    add(Some(younger), mv, &child, &|r| if r >= younger { r + 1 } else { r });
                }
            }
        }
        let out = Rc::new(out);
        self.memo.insert((mask, ranks), out.clone());
        out
    }
}

/// Every event pattern of a graph, each with one build sequence producing it.
#[derive(Debug, Clone)]
pub struct AchievablePatterns {
    graph: Graph,
    patterns: Vec<(EventPattern, Vec<BuildMove>)>,
}

impl AchievablePatterns {
    pub fn search(g: &Graph) -> Result<Self, SearchError> {
        let limit = max_search_simplices();
        if g.simplex_count() > limit {
            return Err(SearchError::TooLarge { simplices: g.simplex_count(), limit });
        }
        if g.vertex_count() == 0 || !g.is_connected() {
            return Err(SearchError::Disconnected);
        }
        let edges =
            g.edges().iter().map(|e| (g.vertex_index(e.lo()).unwrap(), g.vertex_index(e.hi()).unwrap())).collect();
        let n = g.simplex_count();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut searcher = Searcher { graph: g, edges, vertex_count: g.vertex_count(), full, memo: HashMap::new() };
        let root = searcher.suffixes(0, vec![ABSENT; g.vertex_count()]);
        let (_, b1) = g.betti_numbers();
        let mut patterns = Vec::with_capacity(root.len());
        for (bytes, w) in root.iter() {
            let events: Vec<Event> = bytes
                .iter()
                .map(|&b| match b {
                    BIRTH => Event::Birth,
                    CYCLE => Event::Cycle,
                    b if b >= NEW => Event::Kill((b - NEW) as usize),
                    r => unreachable!("old rank {r} at the root"),
                })
                .collect();
            let pattern = EventPattern(events);
            let (cycles, kills) = pattern.shape();
            assert_eq!(cycles, b1, "every cycle of the graph is born exactly once");
            assert_eq!(pattern.len(), 1 + b1 + 2 * kills, "critical count must be 1 + b1 + 2k");
            patterns.push((pattern, witness_moves(w)));
        }
        Ok(AchievablePatterns { graph: g.clone(), patterns })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn patterns(&self) -> impl Iterator<Item = &EventPattern> {
        self.patterns.iter().map(|(p, _)| p)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// A function realizing pattern `index` at the given critical times.
    pub fn witness(&self, index: usize, times: &[u64]) -> Result<MorseFunction, MorseError> {
        function_from_moves(&self.graph, &self.patterns[index].1, times)
    }

    /// Every `(pattern index, times)` combination, in pattern order.
    pub fn timings(&self) -> impl Iterator<Item = (usize, Vec<u64>)> + '_ {
        let top = self.graph.simplex_count() as u64 - 1;
        self.patterns.iter().enumerate().flat_map(move |(i, (p, _))| {
            increasing_sequences(p.len() - 1, top).map(move |rest| {
                let mut times = vec![0];
                times.extend(rest);
                (i, times)
            })
        })
    }

    pub fn diagrams(&self) -> DiagramSet {
        self.timings().map(|(i, times)| self.patterns[i].0.diagram(&times)).collect()
    }
}

/// All strictly increasing sequences of length `len` drawn from `1..=top`.
fn increasing_sequences(len: usize, top: u64) -> impl Iterator<Item = Vec<u64>> {
    let mut cur: Option<Vec<u64>> = if len as u64 <= top { Some((1..=len as u64).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = len;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < top - (len - 1 - i) as u64 {
                next[i] += 1;
                for j in i + 1..len {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// The exact set of diagrams induced by functions on `g`.
pub fn enumerate_achievable_diagrams(g: &Graph) -> Result<DiagramSet, SearchError> {
    Ok(AchievablePatterns::search(g)?.diagrams())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{max_pairs, upper_bound_tree};
    use crate::persistence::compute_diagram_fast;
    use num_traits::ToPrimitive;

    #[test]
    fn single_vertex() {
        let g = Graph::new([4], []).unwrap();
        let got = enumerate_achievable_diagrams(&g).unwrap();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![PersistenceDiagram::connected(vec![], vec![])]);
    }

    #[test]
    fn increasing_sequence_counts() {
        assert_eq!(increasing_sequences(0, 4).count(), 1);
        assert_eq!(increasing_sequences(2, 4).count(), 6);
        assert_eq!(increasing_sequences(5, 4).count(), 0);
    }

    #[test]
    fn path_of_three_is_sharp() {
        let g = Graph::path(3);
        let got = enumerate_achievable_diagrams(&g).unwrap();
        let expected: usize = (0..=max_pairs(5)).map(|k| upper_bound_tree(5, k).unwrap().to_usize().unwrap()).sum();
        assert_eq!(got.len(), expected);
    }

    #[test]
    fn witnesses_induce_their_diagrams() {
        let search = AchievablePatterns::search(&Graph::cycle(4)).unwrap();
        for (i, times) in search.timings() {
            let f = search.witness(i, &times).unwrap();
            let want = search.patterns[i].0.diagram(&times);
            assert_eq!(compute_diagram_fast(&f).unwrap(), want);
        }
    }

    #[test]
    fn guards() {
        assert_eq!(
            AchievablePatterns::search(&Graph::path(8)).unwrap_err(),
            SearchError::TooLarge { simplices: 15, limit: DEFAULT_MAX_SIMPLICES }
        );
        let split = Graph::new([0, 1], []).unwrap();
        assert_eq!(AchievablePatterns::search(&split).unwrap_err(), SearchError::Disconnected);
    }
}
