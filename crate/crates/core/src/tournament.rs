//! Tournaments: complete irreflexive orientations on `0..n`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// A tournament on vertices `0..n`, stored as one out-neighborhood bit-row
/// per vertex. Immutable after construction; every constructor either
/// guarantees or checks completeness and irreflexivity.
#[derive(Clone, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    rows: Vec<VertexSet>,
}

/// A permutation of the vertex set, listed first-to-last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    perm: Vec<usize>,
}

impl VertexOrder {
    pub fn new(n: usize, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != n {
            return Err(Error::BadOrdering);
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::BadOrdering);
            }
            seen[v] = true;
        }
        Ok(VertexOrder { perm })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder {
            perm: (0..n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// position[v] = index of v in the permutation.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Undirected graph of the arcs that point backwards under a fixed ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackedgeGraph {
    pub ordering: VertexOrder,
    /// Unordered pairs stored as (min, max).
    pub edges: BTreeSet<(usize, usize)>,
}

impl Tournament {
    /// Builds from a square boolean matrix, validating the tournament axioms.
    pub fn from_adjacency(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        for row in matrix {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
        }
        for (v, row) in matrix.iter().enumerate() {
            if row[v] {
                return Err(Error::DiagonalArc(v));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let arcs = matrix[u][v] as usize + matrix[v][u] as usize;
                if arcs != 1 {
                    return Err(Error::NotComplete(u, v, arcs));
                }
            }
        }
        let rows = matrix
            .iter()
            .map(|row| {
                VertexSet::from_iter(n, row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j))
            })
            .collect();
        Ok(Tournament { n, rows })
    }

    /// Builds from a set of arcs assumed to satisfy the axioms (checked).
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut matrix = vec![vec![false; n]; n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::OutOfRange(u.max(v), n));
            }
            matrix[u][v] = true;
        }
        Self::from_adjacency(&matrix)
    }

    /// Internal constructor for rows already known to be a valid tournament.
    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        if cfg!(debug_assertions) {
            for (v, row) in rows.iter().enumerate() {
                debug_assert!(!row.contains(v));
                debug_assert_eq!(row.capacity(), n);
            }
        }
        Tournament { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn out_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn in_set(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].complement();
        s.remove(v);
        s
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    /// Arc-reversed tournament.
    pub fn reverse(&self) -> Tournament {
        let rows = (0..self.n)
            .map(|v| {
                let mut s = self.rows[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Tournament::from_rows_unchecked(rows)
    }

    /// Subtournament on `verts` (ascending relabel) plus the old-vertex list:
    /// new vertex `i` is old vertex `map[i]`.
    pub fn induced(&self, verts: &[usize]) -> Result<(Tournament, Vec<usize>)> {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::OutOfRange(v, self.n));
        }
        let m = map.len();
        let rows = map
            .iter()
            .map(|&u| VertexSet::from_iter(m, map.iter().enumerate().filter(|&(_, &v)| self.has_arc(u, v)).map(|(j, _)| j)))
            .collect();
        Ok((Tournament::from_rows_unchecked(rows), map))
    }

    /// True iff no 3-subset induces a cyclic triangle. A tournament is
    /// transitive exactly when its out-degree sequence is 0,1,...,n-1.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        for v in 0..self.n {
            let d = self.out_degree(v);
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// All cyclic triangles, as ascending triples, in lexicographic order.
    pub fn cyclic_triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut tail = VertexSet::full(self.n);
        for a in 0..self.n {
            tail.remove(a);
            let mut btail = tail.clone();
            for b in a + 1..self.n {
                btail.remove(b);
                // completers c > b such that {a,b,c} is cyclic
                let mut c_set = if self.has_arc(a, b) {
                    // need b -> c -> a
                    self.rows[b].intersection(&self.in_set(a))
                } else {
                    // b -> a, need a -> c -> b
                    self.rows[a].intersection(&self.in_set(b))
                };
                c_set.intersect_with(&btail);
                for c in c_set.iter() {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Some cyclic triangle `(a, b, c)` with `a -> b -> c -> a`, the first in
    /// lexicographic order of ascending triples, or `None` if transitive.
    pub fn first_cyclic_triangle(&self) -> Option<(usize, usize, usize)> {
        let mut tail = VertexSet::full(self.n);
        for a in 0..self.n {
            tail.remove(a);
            let mut btail = tail.clone();
            for b in a + 1..self.n {
                btail.remove(b);
                let (p, q) = if self.has_arc(a, b) { (a, b) } else { (b, a) };
                let mut c_set = self.rows[q].intersection(&self.in_set(p));
                c_set.intersect_with(&btail);
                if let Some(c) = c_set.first() {
                    return Some((p, q, c));
                }
            }
        }
        None
    }

    /// Topological ordering of a transitive tournament: vertices sorted by
    /// descending out-degree.
    pub fn topological_order(&self) -> Result<VertexOrder> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.sort_by_key(|&v| std::cmp::Reverse(self.out_degree(v)));
        Ok(VertexOrder { perm })
    }

    /// The arcs pointing backwards under `ordering`, as an undirected graph.
    pub fn backedge_graph(&self, ordering: &VertexOrder) -> Result<BackedgeGraph> {
        if ordering.len() != self.n {
            return Err(Error::BadOrdering);
        }
        let ordering = VertexOrder::new(self.n, ordering.perm.clone())?;
        let mut edges = BTreeSet::new();
        let perm = ordering.as_slice();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (u, v) = (perm[i], perm[j]);
                if self.has_arc(v, u) {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
        Ok(BackedgeGraph { ordering, edges })
    }

    /// Strongly connected components in the unique chain order: every arc
    /// between distinct components goes from an earlier to a later one.
    /// Each component is listed ascending.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        // Kosaraju with explicit stacks.
        let n = self.n;
        let mut finish: Vec<usize> = Vec::with_capacity(n);
        let mut visited = vec![false; n];
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut stack = vec![(start, self.rows[start].clone())];
            visited[start] = true;
            while let Some((v, rest)) = stack.last_mut() {
                match rest.first() {
                    Some(w) => {
                        rest.remove(w);
                        if !visited[w] {
                            visited[w] = true;
                            stack.push((w, self.rows[w].clone()));
                        }
                    }
                    None => {
                        finish.push(*v);
                        stack.pop();
                    }
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for &start in finish.iter().rev() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                let preds = self.in_set(v);
                for w in preds.iter() {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        // In a tournament the condensation is a total order; Kosaraju already
        // emits components source-first, but sort explicitly by the beats
        // relation to make the contract independent of traversal details.
        comps.sort_by(|a, b| {
            if a[0] == b[0] {
                std::cmp::Ordering::Equal
            } else if self.has_arc(a[0], b[0]) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        comps
    }

    /// Dense adjacency matrix, row u column v true iff arc (u,v).
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_arc(u, v)).collect())
            .collect()
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament(n={})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                write!(f, "{}", if self.has_arc(u, v) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds the tournament whose backedge graph under `ordering` is exactly
/// `edges`: pairs in `edges` become backward arcs, all other pairs forward.
pub fn from_backedges(
    n: usize,
    edges: &BTreeSet<(usize, usize)>,
    ordering: &VertexOrder,
) -> Result<Tournament> {
    let ordering = VertexOrder::new(n, ordering.as_slice().to_vec())?;
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::OutOfRange(u.max(v), n));
        }
    }
    let perm = ordering.as_slice();
    let mut matrix = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (perm[i], perm[j]);
            if edges.contains(&(u.min(v), u.max(v))) {
                matrix[v][u] = true;
            } else {
                matrix[u][v] = true;
            }
        }
    }
    Tournament::from_adjacency(&matrix)
}
