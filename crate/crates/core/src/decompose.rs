//! Homogeneous sets, quotients, and the reduction of the weighted problem
//! to prime tournaments.
//!
//! A set X is homogeneous when every outside vertex either beats all of X or
//! loses to all of X. Collapsing a smallest nontrivial homogeneous set to a
//! single vertex carrying X's internal optimum preserves the optimal value,
//! so any solver for prime tournaments extends to arbitrary ones.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::solution::Solution;
use crate::tournament::Tournament;
use crate::weights::{Weight, WeightMap};

/// True iff every vertex outside `x` is uniform toward `x`.
pub fn is_homogeneous(t: &Tournament, x: &[usize]) -> bool {
    let n = t.n();
    let xs = VertexSet::from_iter(n, x.iter().copied());
    let size = xs.len();
    for v in 0..n {
        if xs.contains(v) {
            continue;
        }
        let hits = t.out_set(v).intersection(&xs).len();
        if hits != 0 && hits != size {
            return false;
        }
    }
    true
}

/// The unique minimal homogeneous set containing both `u` and `v`: close the
/// pair under "some outside vertex sees both an out- and an in-neighbor".
fn pair_closure(t: &Tournament, u: usize, v: usize) -> VertexSet {
    let n = t.n();
    let mut x = VertexSet::from_iter(n, [u, v]);
    let mut has_out = VertexSet::new(n); // vertices with an out-neighbor in x
    let mut has_in = VertexSet::new(n); // vertices with an in-neighbor in x
    let mut queue = vec![u, v];
    while let Some(a) = queue.pop() {
        has_out.union_with(&t.in_set(a));
        has_in.union_with(t.out_set(a));
        let mut mixed = has_out.intersection(&has_in);
        mixed.subtract(&x);
        for w in mixed.iter() {
            x.insert(w);
            queue.push(w);
        }
    }
    x
}

/// A smallest nontrivial homogeneous set (ties: lexicographically smallest
/// sorted vertex list), or `None` iff the tournament is prime.
///
/// Every minimum nontrivial homogeneous set is the closure of a vertex pair,
/// so scanning all pairs suffices.
pub fn minimal_homogeneous_set(t: &Tournament) -> Option<Vec<usize>> {
    let n = t.n();
    let mut best: Option<Vec<usize>> = None;
    for u in 0..n {
        for v in u + 1..n {
            let x = pair_closure(t, u, v);
            let size = x.len();
            if size == n {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => size < b.len() || (size == b.len() && x.to_vec() < *b),
            };
            if better {
                best = Some(x.to_vec());
                if size == 2 {
                    // pairs are scanned in lex order, so the first 2-set wins
                    return best;
                }
            }
        }
    }
    best
}

/// Record of one quotient step, relative to the tournament it was applied to.
#[derive(Clone, Debug)]
pub struct QuotientRecord {
    /// The replaced homogeneous set, ascending.
    pub module_set: Vec<usize>,
    /// Index of the new vertex in the quotient (always the last one).
    pub representative: usize,
    /// Non-module vertices in ascending order; quotient vertex `i < rep`
    /// is original vertex `kept[i]`.
    pub kept: Vec<usize>,
    /// The inner optimum the representative stands for.
    pub inner_vertices: Vec<usize>,
    pub inner_weight: Weight,
}

/// Collapses homogeneous `x` to one vertex whose weight is the inner optimum.
pub fn quotient(
    t: &Tournament,
    w: &WeightMap,
    x: &[usize],
    inner: &Solution,
) -> Result<(Tournament, WeightMap, QuotientRecord)> {
    let n = t.n();
    let mut module: Vec<usize> = x.to_vec();
    module.sort_unstable();
    module.dedup();
    if module.len() <= 1 || module.len() >= n {
        return Err(Error::TrivialSet);
    }
    if let Some(&v) = module.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange(v, n));
    }
    if !is_homogeneous(t, &module) {
        return Err(Error::NotHomogeneous);
    }
    let xs = VertexSet::from_iter(n, module.iter().copied());
    if !inner.vertices().iter().all(|&v| xs.contains(v)) {
        return Err(Error::BadParameter(
            "inner solution is not contained in the module".into(),
        ));
    }

    let kept: Vec<usize> = (0..n).filter(|v| !xs.contains(*v)).collect();
    let m = kept.len() + 1;
    let rep = m - 1;
    let probe = module[0];
    let mut matrix = vec![vec![false; m]; m];
    for (i, &u) in kept.iter().enumerate() {
        for (j, &v) in kept.iter().enumerate() {
            matrix[i][j] = i != j && t.has_arc(u, v);
        }
        // arcs toward the representative mirror arcs toward the module
        if t.has_arc(u, probe) {
            matrix[i][rep] = true;
        } else {
            matrix[rep][i] = true;
        }
    }
    let qt = Tournament::from_adjacency(&matrix)?;
    let mut weights: Vec<Weight> = kept.iter().map(|&v| w.get(v).clone()).collect();
    weights.push(inner.weight().clone());
    let qw = WeightMap::new(weights)?;
    let record = QuotientRecord {
        module_set: module,
        representative: rep,
        kept,
        inner_vertices: inner.vertices().to_vec(),
        inner_weight: inner.weight().clone(),
    };
    Ok((qt, qw, record))
}

/// One step of the prime reduction, expressed in stable vertex ids:
/// originals keep 0..n-1, each representative gets a fresh id >= n.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub module_ids: Vec<usize>,
    pub representative_id: usize,
    pub inner_ids: Vec<usize>,
    pub inner_weight: Weight,
}

/// The full quotient chain down to a prime tournament.
#[derive(Clone, Debug)]
pub struct PrimeReduction {
    pub steps: Vec<ReductionStep>,
    pub final_tournament: Tournament,
    pub final_weights: WeightMap,
    /// Stable id of each final vertex.
    pub final_ids: Vec<usize>,
}

pub type PrimeSolver<'a> = dyn FnMut(&Tournament, &WeightMap) -> Result<Solution> + 'a;

/// Runs the quotient chain, solving each module and the final prime
/// tournament with `prime_solver`, and returns both the chain and the
/// expanded optimum on the original tournament.
pub fn decompose_and_solve(
    t: &Tournament,
    w: &WeightMap,
    prime_solver: &mut PrimeSolver,
) -> Result<(PrimeReduction, Solution)> {
    let n = t.n();
    if w.len() != n {
        return Err(Error::WeightCount(w.len(), n));
    }
    let mut cur_t = t.clone();
    let mut cur_w = w.clone();
    let mut ids: Vec<usize> = (0..n).collect();
    let mut fresh = n;
    let mut steps: Vec<ReductionStep> = Vec::new();

    while let Some(x) = minimal_homogeneous_set(&cur_t) {
        let (sub, submap) = cur_t.induced(&x)?;
        let sub_w = cur_w.restrict(&submap);
        let inner_sub = prime_solver(&sub, &sub_w)?;
        let inner_cur: Vec<usize> = inner_sub.vertices().iter().map(|&s| submap[s]).collect();
        let inner = Solution::new(&cur_t, &cur_w, inner_cur)?;
        let (qt, qw, record) = quotient(&cur_t, &cur_w, &x, &inner)?;
        let rep_id = fresh;
        fresh += 1;
        steps.push(ReductionStep {
            module_ids: record.module_set.iter().map(|&c| ids[c]).collect(),
            representative_id: rep_id,
            inner_ids: record.inner_vertices.iter().map(|&c| ids[c]).collect(),
            inner_weight: record.inner_weight.clone(),
        });
        ids = record
            .kept
            .iter()
            .map(|&c| ids[c])
            .chain(std::iter::once(rep_id))
            .collect();
        cur_t = qt;
        cur_w = qw;
    }

    let final_sol = prime_solver(&cur_t, &cur_w)?;
    let mut selected: std::collections::BTreeSet<usize> =
        final_sol.vertices().iter().map(|&c| ids[c]).collect();
    for step in steps.iter().rev() {
        if selected.remove(&step.representative_id) {
            selected.extend(step.inner_ids.iter().copied());
        }
    }
    let expanded = Solution::new(t, w, selected.into_iter().collect())?;
    let reduction = PrimeReduction {
        steps,
        final_tournament: cur_t,
        final_weights: cur_w,
        final_ids: ids,
    };
    Ok((reduction, expanded))
}

/// Optimal solution via the quotient chain; see `decompose_and_solve`.
pub fn reduce_to_prime(
    t: &Tournament,
    w: &WeightMap,
    prime_solver: &mut PrimeSolver,
) -> Result<Solution> {
    decompose_and_solve(t, w, prime_solver).map(|(_, s)| s)
}
