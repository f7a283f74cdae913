//! Exact reference solvers, exponential but honest. The branch-and-bound
//! oracle handles up to 22 vertices; the plain subset enumeration is kept as
//! a second, independent opinion for up to 7.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::solution::{keep_best, Solution};
use crate::tournament::Tournament;
use crate::weights::{Weight, WeightMap};
use num::Zero;

pub const ORACLE_LIMIT: usize = 22;
pub const ENUMERATION_LIMIT: usize = 7;

/// Maximum-weight transitive subset by branching on cyclic triangles: any
/// transitive set misses at least one vertex of every cyclic triangle, so
/// branch three ways on which one to drop. Prunes on the remaining-weight
/// bound; ties resolved toward the lexicographically smallest set.
pub fn oracle_wmisp(t: &Tournament, w: &WeightMap) -> Result<Solution> {
    let n = t.n();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge(n, ORACLE_LIMIT));
    }
    if w.len() != n {
        return Err(Error::WeightCount(w.len(), n));
    }
    let remaining = VertexSet::full(n);
    let upper = w.total();
    let mut best: Option<Solution> = None;
    branch(t, w, remaining, upper, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

fn branch(
    t: &Tournament,
    w: &WeightMap,
    remaining: VertexSet,
    upper: Weight,
    best: &mut Option<Solution>,
) {
    if let Some(b) = best {
        // an equal-weight leaf can still win the lex tie-break
        if upper < *b.weight() {
            return;
        }
    }
    match first_triangle_within(t, &remaining) {
        None => {
            let candidate = Solution::new(t, w, lex_min_equal_weight(w, remaining.to_vec()))
                .expect("triangle-free remainder is transitive");
            keep_best(best, candidate);
        }
        Some(mut tri) => {
            tri.sort_unstable();
            for v in tri {
                let mut rest = remaining.clone();
                rest.remove(v);
                let bound = &upper - w.get(v);
                branch(t, w, rest, bound, best);
            }
        }
    }
}

/// Lexicographically smallest subset of `verts` with the same total weight:
/// all positive-weight members stay; zero-weight members stay only below the
/// largest positive one (they shorten the sorted list's tail otherwise).
fn lex_min_equal_weight(w: &WeightMap, verts: Vec<usize>) -> Vec<usize> {
    match verts.iter().rev().find(|&&v| !w.get(v).is_zero()) {
        None => vec![],
        Some(&top) => verts.into_iter().filter(|&v| v <= top).collect(),
    }
}

fn first_triangle_within(t: &Tournament, set: &VertexSet) -> Option<[usize; 3]> {
    let members = set.to_vec();
    for (ai, &a) in members.iter().enumerate() {
        let in_a = t.in_set(a);
        for &b in &members[ai + 1..] {
            let (p, q) = if t.has_arc(a, b) { (a, b) } else { (b, a) };
            let mut completers = t.out_set(q).intersection(set);
            if p == a {
                completers.intersect_with(&in_a);
            } else {
                completers.intersect_with(&t.in_set(p));
            }
            if let Some(c) = completers.first() {
                return Some([p, q, c]);
            }
        }
    }
    None
}

/// Full 2^n subset enumeration; the second-opinion oracle.
pub fn oracle_wmisp_enumerate(t: &Tournament, w: &WeightMap) -> Result<Solution> {
    let n = t.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(n, ENUMERATION_LIMIT));
    }
    if w.len() != n {
        return Err(Error::WeightCount(w.len(), n));
    }
    let mut best: Option<Solution> = None;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 != 0).collect();
        if !subset_transitive(t, &verts) {
            continue;
        }
        let candidate = Solution::new(t, w, verts).expect("checked transitive");
        keep_best(&mut best, candidate);
    }
    Ok(best.expect("the empty set is always transitive"))
}

fn subset_transitive(t: &Tournament, verts: &[usize]) -> bool {
    let k = verts.len();
    for x in 0..k {
        for y in x + 1..k {
            for z in y + 1..k {
                let (a, b, c) = (verts[x], verts[y], verts[z]);
                let (p, q) = if t.has_arc(a, b) { (a, b) } else { (b, a) };
                if t.has_arc(q, c) && t.has_arc(c, p) {
                    return false;
                }
            }
        }
    }
    true
}
