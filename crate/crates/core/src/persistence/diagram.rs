use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Degree-0 pairs plus essential classes in degrees 0 and 1.
///
/// Stored in normal form (pairs ascending by birth then death, essential
/// births ascending), so derived equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "DiagramRepr")]
pub struct PersistenceDiagram {
    finite_pairs: Vec<(u64, u64)>,
    essential_h0: Vec<u64>,
    essential_h1: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramRepr {
    finite_pairs: Vec<(u64, u64)>,
    essential_h0: Vec<u64>,
    #[serde(default)]
    essential_h1: Vec<u64>,
}

impl From<DiagramRepr> for PersistenceDiagram {
    fn from(r: DiagramRepr) -> Self {
        PersistenceDiagram::new(r.finite_pairs, r.essential_h0, r.essential_h1)
    }
}

impl PersistenceDiagram {
    pub fn new(
        mut finite_pairs: Vec<(u64, u64)>,
        mut essential_h0: Vec<u64>,
        mut essential_h1: Vec<u64>,
    ) -> Self {
        finite_pairs.sort_unstable();
        essential_h0.sort_unstable();
        essential_h1.sort_unstable();
        PersistenceDiagram { finite_pairs, essential_h0, essential_h1 }
    }

    /// Diagram of a connected graph: one essential component born at 0.
    pub fn connected(finite_pairs: Vec<(u64, u64)>, essential_h1: Vec<u64>) -> Self {
        Self::new(finite_pairs, vec![0], essential_h1)
    }

    pub fn finite_pairs(&self) -> &[(u64, u64)] {
        &self.finite_pairs
    }

    pub fn essential_h0(&self) -> &[u64] {
        &self.essential_h0
    }

    pub fn essential_h1(&self) -> &[u64] {
        &self.essential_h1
    }

    /// Total number of births, which equals the number of critical values
    /// of an inducing function.
    pub fn event_count(&self) -> usize {
        2 * self.finite_pairs.len() + self.essential_h0.len() + self.essential_h1.len()
    }

    /// All births and deaths, ascending, with repetitions.
    pub fn event_times(&self) -> Vec<u64> {
        let mut t: Vec<u64> = self
            .finite_pairs
            .iter()
            .flat_map(|&(b, d)| [b, d])
            .chain(self.essential_h0.iter().copied())
            .chain(self.essential_h1.iter().copied())
            .collect();
        t.sort_unstable();
        t
    }

    /// Every pair has `birth < death` and no time carries two events.
    pub fn is_well_formed(&self) -> bool {
        let times = self.event_times();
        self.finite_pairs.iter().all(|&(b, d)| b < d) && times.windows(2).all(|w| w[0] < w[1])
    }

    /// Realizable target on a tree with `n` simplices: a single essential
    /// class born at `0`, no cycles, and finite pairs `(c, d)` with
    /// `1 <= c < d <= n - 1`, all times distinct.
    pub fn is_consistent(&self, n: usize) -> bool {
        let n = n as u64;
        self.essential_h0 == [0]
            && self.essential_h1.is_empty()
            && self.finite_pairs.iter().all(|&(b, d)| 1 <= b && b < d && d < n)
            && self.is_well_formed()
    }
}

/// Multiset equality, insensitive to the order bars are listed in.
pub fn diagram_equal(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> bool {
    d1 == d2
}

impl fmt::Debug for PersistenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PersistenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !std::mem::replace(&mut first, false) {
                write!(f, ", ")
            } else {
                Ok(())
            }
        };
        for b in &self.essential_h0 {
            sep(f)?;
            write!(f, "({b},inf)")?;
        }
        for (b, d) in &self.finite_pairs {
            sep(f)?;
            write!(f, "({b},{d})")?;
        }
        for b in &self.essential_h1 {
            sep(f)?;
            write!(f, "H1({b},inf)")?;
        }
        write!(f, "}}")
    }
}

/// Set of distinct diagrams in canonical order.
pub type DiagramSet = BTreeSet<PersistenceDiagram>;

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_tree_diagram() -> PersistenceDiagram {
        PersistenceDiagram::connected(vec![(15, 20), (3, 6), (9, 11), (5, 10), (14, 16)], vec![])
    }

    #[test]
    fn normal_form_sorts_by_birth() {
        let d = reference_tree_diagram();
        assert_eq!(d.finite_pairs(), &[(3, 6), (5, 10), (9, 11), (14, 16), (15, 20)]);
        assert_eq!(d.event_count(), 11);
    }

    #[test]
    fn equality_ignores_listing_order() {
        let a = PersistenceDiagram::connected(vec![(2, 5), (4, 7), (3, 8)], vec![]);
        let b = PersistenceDiagram::connected(vec![(3, 8), (2, 5), (4, 7)], vec![]);
        assert!(diagram_equal(&a, &a));
        assert!(diagram_equal(&a, &b));
        let c = PersistenceDiagram::connected(vec![(2, 3)], vec![]);
        let d = PersistenceDiagram::connected(vec![(1, 2)], vec![]);
        assert!(!diagram_equal(&c, &d));
    }

    #[test]
    fn consistency() {
        assert!(reference_tree_diagram().is_consistent(21));
        assert!(!reference_tree_diagram().is_consistent(20));
        for n in 1..6 {
            assert!(PersistenceDiagram::connected(vec![], vec![]).is_consistent(n));
        }
        assert!(!PersistenceDiagram::connected(vec![(3, 3)], vec![]).is_consistent(10));
        assert!(!PersistenceDiagram::connected(vec![(4, 3)], vec![]).is_consistent(10));
        // birth and death at the same time
        assert!(!PersistenceDiagram::connected(vec![(3, 4), (4, 7)], vec![]).is_consistent(10));
        assert!(!PersistenceDiagram::connected(vec![], vec![2]).is_consistent(10));
        assert!(!PersistenceDiagram::new(vec![], vec![1], vec![]).is_consistent(10));
        assert!(!PersistenceDiagram::connected(vec![(0, 3)], vec![]).is_consistent(10));
    }

    #[test]
    fn json_shape() {
        let d = PersistenceDiagram::connected(vec![(5, 10), (3, 6)], vec![]);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"finite_pairs":[[3,6],[5,10]],"essential_h0":[0],"essential_h1":[]}"#);
        let back: PersistenceDiagram = serde_json::from_str(r#"{"finite_pairs":[[5,10],[3,6]],"essential_h0":[0]}"#).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn display() {
        let d = PersistenceDiagram::connected(vec![(2, 4)], vec![1]);
        assert_eq!(d.to_string(), "{(0,inf), (2,4), H1(1,inf)}");
    }
}
