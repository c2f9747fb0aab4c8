//! Counting persistence diagrams.
//!
//! A diagram of a function on a connected graph with `n` simplices has one
//! essential component born at `0`, `b1` essential cycles and `k` finite
//! pairs, with all `m = 1 + b1 + 2k` event times distinct integers in
//! `0..n`. Choosing the times and then how they pair up gives the bounds
//! below; on trees every such diagram is realized, so the tree bound is
//! exact.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::persistence::PersistenceDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("{events} events do not fit in a graph with {simplices} simplices")]
    TooManyEvents { events: usize, simplices: usize },
}

/// Shape of the diagrams being counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountQuery {
    pub simplices: usize,
    pub betti1: usize,
    pub pairs: usize,
}

impl CountQuery {
    pub fn new(simplices: usize, betti1: usize, pairs: usize) -> Result<Self, CountError> {
        let q = CountQuery { simplices, betti1, pairs };
        if q.events() > simplices {
            return Err(CountError::TooManyEvents { events: q.events(), simplices });
        }
        Ok(q)
    }

    /// `1 + b1 + 2k`.
    pub fn events(&self) -> usize {
        1 + self.betti1 + 2 * self.pairs
    }
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * big(i))
}

/// `(2k - 1)!!`, the number of ways to split `2k` times into `k` pairs.
fn pairings(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * big(2 * i - 1))
}

/// `C(n-1, b1) * C(n-1-b1, 2) * C(n-3-b1, 2) * ... * C(n+1-b1-2k, 2) / k!`.
pub fn upper_bound_general(q: CountQuery) -> Result<BigUint, CountError> {
    let q = CountQuery::new(q.simplices, q.betti1, q.pairs)?;
    let free = q.simplices - 1;
    let mut total = binomial(big(free), big(q.betti1));
    for i in 0..q.pairs {
        total *= binomial(big(free - q.betti1 - 2 * i), big(2));
    }
    Ok(total / factorial(q.pairs))
}

/// `(n-1)(n-2)...(n-2k) / (2^k k!)`.
pub fn upper_bound_tree(simplices: usize, pairs: usize) -> Result<BigUint, CountError> {
    let q = CountQuery::new(simplices, 0, pairs)?;
    let falling = (1..=2 * q.pairs).fold(BigUint::one(), |acc, i| acc * big(simplices - i));
    Ok(falling / (BigUint::one() << q.pairs) / factorial(q.pairs))
}

/// Every diagram with `k` finite pairs on `1..n` and no cycles, in a fixed
/// order: first by the set of times (lexicographic), then by how the times
/// are paired.
///
/// The pairing of `2k` sorted times is coded by `k` digits: digit `r` picks
/// the partner of the smallest time still unpaired among the `2(k-r) - 1`
/// others.
#[derive(Debug, Clone)]
pub struct ConsistentDiagrams {
    simplices: usize,
    times: Vec<u64>,
    digits: Vec<usize>,
    done: bool,
}

impl ConsistentDiagrams {
    pub fn new(simplices: usize, pairs: usize) -> Result<Self, CountError> {
        CountQuery::new(simplices, 0, pairs)?;
        Ok(ConsistentDiagrams {
            simplices,
            times: (1..=2 * pairs as u64).collect(),
            digits: vec![0; pairs],
            done: false,
        })
    }

    pub fn pairs(&self) -> usize {
        self.digits.len()
    }

    /// Total number of diagrams produced, which is [`upper_bound_tree`].
    pub fn len(&self) -> BigUint {
        binomial(big(self.simplices - 1), big(2 * self.pairs())) * pairings(self.pairs())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `d` in the enumeration, or `None` if `d` is not one of the
    /// diagrams enumerated.
    pub fn rank(&self, d: &PersistenceDiagram) -> Option<BigUint> {
        let k = self.pairs();
        if d.finite_pairs().len() != k || !d.is_consistent(self.simplices) {
            return None;
        }
        let times: Vec<u64> = d.event_times().into_iter().skip(1).collect();
        let universe = (self.simplices - 1) as u64;
        let mut set_rank = BigUint::zero();
        let mut prev = 0;
        for (i, &t) in times.iter().enumerate() {
            let left = 2 * k - i - 1;
            for skipped in prev + 1..t {
                set_rank += binomial(BigUint::from(universe - skipped), big(left));
            }
            prev = t;
        }
        let mut partner = std::collections::BTreeMap::new();
        for &(b, e) in d.finite_pairs() {
            partner.insert(b, e);
            partner.insert(e, b);
        }
        let mut open = times.clone();
        let mut pairing_rank = BigUint::zero();
        for r in 0..k {
            let first = open.remove(0);
            let j = open.iter().position(|&t| t == partner[&first]).expect("pairs are complete");
            open.remove(j);
            pairing_rank = pairing_rank * big(2 * (k - r) - 1) + big(j);
        }
        Some(set_rank * pairings(k) + pairing_rank)
    }

    /// The diagram at position `rank`.
    pub fn unrank(&self, rank: &BigUint) -> Option<PersistenceDiagram> {
        if rank >= &self.len() {
            return None;
        }
        let k = self.pairs();
        let per_set = pairings(k);
        let mut set_rank = rank / &per_set;
        let mut pairing_rank = rank % &per_set;
        let universe = (self.simplices - 1) as u64;
        let mut times = Vec::with_capacity(2 * k);
        let mut t = 1;
        while times.len() < 2 * k {
            let left = 2 * k - times.len() - 1;
            let block = binomial(BigUint::from(universe - t), big(left));
            if set_rank < block {
                times.push(t);
            } else {
                set_rank -= block;
            }
            t += 1;
        }
        let mut digits = vec![0; k];
        for r in (0..k).rev() {
            let radix = big(2 * (k - r) - 1);
            digits[r] = (&pairing_rank % &radix).to_usize().unwrap();
            pairing_rank /= radix;
        }
        Some(decode(&times, &digits))
    }

    fn advance(&mut self) {
        let k = self.pairs();
        for r in (0..k).rev() {
            if self.digits[r] + 1 < 2 * (k - r) - 1 {
                self.digits[r] += 1;
                return;
            }
            self.digits[r] = 0;
        }
        let top = (self.simplices - 1) as u64;
        let len = self.times.len();
        for i in (0..len).rev() {
            if self.times[i] < top - (len - 1 - i) as u64 {
                self.times[i] += 1;
                for j in i + 1..len {
                    self.times[j] = self.times[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

fn decode(times: &[u64], digits: &[usize]) -> PersistenceDiagram {
    let mut open = times.to_vec();
    let mut pairs = Vec::with_capacity(digits.len());
    for &j in digits {
        let first = open.remove(0);
        pairs.push((first, open.remove(j)));
    }
    PersistenceDiagram::connected(pairs, vec![])
}

impl Iterator for ConsistentDiagrams {
    type Item = PersistenceDiagram;

    fn next(&mut self) -> Option<PersistenceDiagram> {
        if self.done {
            return None;
        }
        let d = decode(&self.times, &self.digits);
        self.advance();
        Some(d)
    }
}

/// All consistent diagrams with `pairs` finite pairs for a tree with
/// `simplices` simplices, collected.
pub fn enumerate_consistent_diagrams(simplices: usize, pairs: usize) -> Result<Vec<PersistenceDiagram>, CountError> {
    Ok(ConsistentDiagrams::new(simplices, pairs)?.collect())
}

/// Largest `k` with `2k + 1 <= n`.
pub fn max_pairs(simplices: usize) -> usize {
    simplices.saturating_sub(1) / 2
}
