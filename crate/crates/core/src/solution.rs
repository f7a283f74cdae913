//! Certified solutions: a vertex set whose induced subtournament is transitive.

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::weights::{Weight, WeightMap};

/// A transitive vertex set with its total weight. Construction re-checks
/// transitivity, so a `Solution` can be trusted downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    vertices: Vec<usize>,
    weight: Weight,
}

impl Solution {
    pub fn new(t: &Tournament, w: &WeightMap, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= t.n()) {
            return Err(Error::OutOfRange(v, t.n()));
        }
        let (sub, _) = t.induced(&vertices)?;
        if !sub.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let weight = w.sum(vertices.iter().copied());
        Ok(Solution { vertices, weight })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Tie-break order used everywhere: larger weight wins, then the
    /// lexicographically smaller sorted vertex list.
    pub fn better_than(&self, other: &Solution) -> bool {
        match self.weight.cmp(&other.weight) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => self.vertices < other.vertices,
        }
    }
}

/// Keeps `best` maximal under the (weight, lex) tie-break order.
pub(crate) fn keep_best(best: &mut Option<Solution>, candidate: Solution) {
    match best {
        None => *best = Some(candidate),
        Some(b) => {
            if candidate.better_than(b) {
                *best = Some(candidate);
            }
        }
    }
}
