//! Constructors and recognizers for the named tournaments used throughout:
//! transitive I_n, the rotational T_n, its variant U_n, the hub W_n, the
//! 7-vertex Paley tournament Q_7 (and Q_7 minus a vertex), the four
//! 4-vertex tournaments, and k-snakes.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// Transitive tournament on n vertices.
    In(usize),
    /// Rotational tournament on odd n: i beats the next (n-1)/2 vertices mod n.
    Tn(usize),
    /// T_n with all arcs among the first (n-1)/2 vertices reversed.
    Un(usize),
    /// Transitive chain w_1..w_{n-1} plus a hub beaten by even-indexed and
    /// beating odd-indexed chain vertices. Hub is vertex 0.
    Wn(usize),
    /// Paley tournament on residues mod 7: i beats i+1, i+2, i+4.
    Q7,
    /// Q_7 with residue 6 deleted.
    Q7MinusV,
    K4,
    B4,
    C4,
    D4,
    /// Tournament whose backedge graph under the identity order is the path
    /// v_0 v_1 ... v_{k-1}.
    Snake(usize),
}

fn require_odd(n: usize, what: &str) -> Result<()> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::BadParameter(format!("{what} needs odd n >= 1, got {n}")));
    }
    Ok(())
}

/// Arc rule of T_n on 1-based labels.
fn tn_arc(n: usize, i: usize, j: usize) -> bool {
    let d = (j + n - i) % n;
    d >= 1 && d <= (n - 1) / 2
}

/// Arc rule of U_n on 1-based labels.
fn un_arc(n: usize, i: usize, j: usize) -> bool {
    let half = (n - 1) / 2;
    if i <= half && j <= half {
        // reversed inside the first half
        i > j
    } else {
        tn_arc(n, i, j)
    }
}

pub fn make(kind: PatternKind) -> Result<Tournament> {
    use PatternKind::*;
    match kind {
        In(n) => {
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Tournament::from_arcs(n, &arcs)
        }
        Tn(n) => {
            require_odd(n, "Tn")?;
            build_by_rule(n, |u, v| tn_arc(n, u + 1, v + 1))
        }
        Un(n) => {
            require_odd(n, "Un")?;
            build_by_rule(n, |u, v| un_arc(n, u + 1, v + 1))
        }
        Wn(n) => {
            require_odd(n, "Wn")?;
            build_by_rule(n, |u, v| {
                match (u, v) {
                    (0, v) => v % 2 == 1,     // hub beats odd-indexed
                    (u, 0) => u % 2 == 0,     // even-indexed beat the hub
                    (u, v) => u < v,          // chain arcs forward
                }
            })
        }
        Q7 => build_by_rule(7, |u, v| matches!((v + 7 - u) % 7, 1 | 2 | 4)),
        Q7MinusV => {
            let q7 = make(Q7)?;
            Ok(q7.induced(&[0, 1, 2, 3, 4, 5])?.0)
        }
        K4 => Tournament::from_arcs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        B4 => Tournament::from_arcs(4, &[(0, 1), (2, 0), (3, 0), (1, 2), (3, 1), (3, 2)]),
        C4 => Tournament::from_arcs(4, &[(0, 1), (2, 0), (0, 3), (1, 2), (3, 1), (2, 3)]),
        D4 => Tournament::from_arcs(4, &[(0, 1), (2, 0), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Snake(k) => {
            if k == 0 {
                return Err(Error::BadParameter("Snake needs k >= 1".into()));
            }
            build_by_rule(k, |u, v| {
                if v == u + 1 {
                    false // consecutive pairs are backedges
                } else {
                    u < v || u == v + 1
                }
            })
        }
    }
}

fn build_by_rule(n: usize, rule: impl Fn(usize, usize) -> bool) -> Result<Tournament> {
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in 0..n {
            if u != v && rule(u, v) {
                arcs.push((u, v));
            }
        }
    }
    Tournament::from_arcs(n, &arcs)
}

/// Labeling of a tournament as U_n: `order[k]` is the vertex carrying
/// 1-based label k+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnLabeling {
    pub order: Vec<usize>,
}

/// If `t` is isomorphic to T_n, returns a relabeling realizing the arc rule:
/// position k of the ordering is the vertex with label k+1.
///
/// Regularity (odd n, all out-degrees (n-1)/2) is necessary but not
/// sufficient, so each candidate labeling is forced from a guessed first arc
/// and then re-verified in full.
pub fn recognize_tn(t: &Tournament) -> Option<VertexOrder> {
    let n = t.n();
    if n == 0 || n % 2 == 0 {
        return None;
    }
    let half = (n - 1) / 2;
    if (0..n).any(|v| t.out_degree(v) != half) {
        return None;
    }
    if n == 1 {
        return Some(VertexOrder::identity(1));
    }
    if n == 3 {
        // the only regular 3-vertex tournament is the cyclic triangle
        let b = t.out_set(0).first()?;
        let c = (1..3).find(|&v| v != b)?;
        let order = vec![0, b, c];
        return verify_labeling(t, &order, |i, j| tn_arc(3, i, j))
            .then(|| VertexOrder::new(3, order).ok())
            .flatten();
    }
    // Guess (v_1, v_2) among arcs; consecutive labels force the rest because
    // N+(v_k) ∩ N+(v_{k+1}) is the run v_{k+2}..v_{k+1+half}, whose unique
    // source is v_{k+2}.
    for a in 0..n {
        'next_arc: for b in t.out_set(a).iter() {
            let mut order = vec![a, b];
            let mut used = VertexSet::from_iter(n, [a, b]);
            while order.len() < n {
                let p = order[order.len() - 2];
                let q = order[order.len() - 1];
                let common = t.out_set(p).intersection(t.out_set(q));
                if common.len() != half.saturating_sub(1) {
                    continue 'next_arc;
                }
                let next = match common
                    .iter()
                    .find(|&s| common.iter().all(|x| x == s || t.has_arc(s, x)))
                {
                    Some(s) => s,
                    None => continue 'next_arc,
                };
                if used.contains(next) {
                    continue 'next_arc;
                }
                used.insert(next);
                order.push(next);
            }
            if verify_labeling(t, &order, |i, j| tn_arc(n, i, j)) {
                return VertexOrder::new(n, order).ok();
            }
        }
    }
    None
}

/// If `t` is isomorphic to U_n, returns the proper labeling.
///
/// Peels the unique in-degree-1 vertex (label (m-1)/2 at size m) and its
/// in-neighbor (label m) until five vertices remain, labels the base by
/// exhaustive search, then re-verifies the full arc rule.
pub fn recognize_un(t: &Tournament) -> Option<UnLabeling> {
    let n = t.n();
    if n == 0 || n % 2 == 0 {
        return None;
    }
    if n == 1 {
        return Some(UnLabeling { order: vec![0] });
    }
    if n == 3 {
        // U_3 = T_3 = the cyclic triangle
        let order = recognize_tn(t)?;
        return Some(UnLabeling {
            order: order.as_slice().to_vec(),
        });
    }

    let mut active: Vec<usize> = (0..n).collect();
    let mut cur = t.clone();
    let mut peeled: Vec<(usize, usize)> = Vec::new();
    while cur.n() > 5 {
        let m = cur.n();
        let mut deg1 = (0..m).filter(|&v| cur.in_degree(v) == 1);
        let u = deg1.next()?;
        if deg1.next().is_some() {
            return None;
        }
        let parent = cur.in_set(u).first()?;
        peeled.push((active[u], active[parent]));
        let keep: Vec<usize> = (0..m).filter(|&v| v != u && v != parent).collect();
        let (next, _) = cur.induced(&keep).ok()?;
        active = keep.iter().map(|&v| active[v]).collect();
        cur = next;
    }

    let base = label_u5(&cur, &active)?;

    // Reinsert peeled pairs outside-in: at size m the in-degree-1 vertex is
    // v_{(m-1)/2} and its in-neighbor is v_m.
    let mut order = base;
    for &(u, parent) in peeled.iter().rev() {
        let m = order.len() + 2;
        let h = (m - 1) / 2;
        let mut next = Vec::with_capacity(m);
        next.extend_from_slice(&order[..h - 1]);
        next.push(u);
        next.extend_from_slice(&order[h - 1..]);
        next.push(parent);
        order = next;
    }

    if verify_labeling(t, &order, |i, j| un_arc(n, i, j)) {
        Some(UnLabeling { order })
    } else {
        None
    }
}

/// Exhaustive 120-permutation labeling of a 5-vertex tournament as U_5.
/// `active` maps current indices back to the caller's vertex ids.
fn label_u5(cur: &Tournament, active: &[usize]) -> Option<Vec<usize>> {
    if cur.n() != 5 {
        return None;
    }
    let u5 = make(PatternKind::Un(5)).ok()?;
    permutations(5).into_iter().find_map(|perm| {
        let ok = (0..5).all(|i| (0..5).all(|j| i == j || cur.has_arc(perm[i], perm[j]) == u5.has_arc(i, j)));
        ok.then(|| perm.iter().map(|&v| active[v]).collect())
    })
}

fn verify_labeling(t: &Tournament, order: &[usize], rule: impl Fn(usize, usize) -> bool) -> bool {
    let n = t.n();
    if order.len() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && t.has_arc(order[i], order[j]) != rule(i + 1, j + 1) {
                return false;
            }
        }
    }
    true
}

/// Checks that relabeling by `labeling` reproduces U_n arc-for-arc; used by
/// the U_n solver as its entry guard.
pub fn verify_un_labeling(t: &Tournament, labeling: &UnLabeling) -> bool {
    let n = t.n();
    n % 2 == 1 && verify_labeling(t, &labeling.order, |i, j| un_arc(n, i, j))
}

/// Checks that relabeling by `order` reproduces T_n arc-for-arc.
pub fn verify_tn_labeling(t: &Tournament, order: &crate::tournament::VertexOrder) -> bool {
    let n = t.n();
    n % 2 == 1 && verify_labeling(t, order.as_slice(), |i, j| tn_arc(n, i, j))
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

pub const ISO_LIMIT: usize = 12;

/// Arc-preserving bijection from `t` onto `h`, if one exists. `map[v]` is the
/// image of `v`. First bijection in lexicographic order of `map`.
pub fn is_isomorphic_small(t: &Tournament, h: &Tournament) -> Result<Option<Vec<usize>>> {
    let n = t.n();
    if n > ISO_LIMIT || h.n() > ISO_LIMIT {
        return Err(Error::TooLarge(n.max(h.n()), ISO_LIMIT));
    }
    if n != h.n() {
        return Ok(None);
    }
    let mut td: Vec<usize> = (0..n).map(|v| t.out_degree(v)).collect();
    let mut hd: Vec<usize> = (0..n).map(|v| h.out_degree(v)).collect();
    td.sort_unstable();
    hd.sort_unstable();
    if td != hd {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_bijection(t, h, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend_bijection(
    t: &Tournament,
    h: &Tournament,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = t.n();
    if v == n {
        return true;
    }
    for img in 0..n {
        if used[img] || t.out_degree(v) != h.out_degree(img) {
            continue;
        }
        let consistent = (0..v).all(|u| t.has_arc(u, v) == h.has_arc(map[u], img));
        if !consistent {
            continue;
        }
        map[v] = img;
        used[img] = true;
        if extend_bijection(t, h, v + 1, map, used) {
            return true;
        }
        used[img] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::VertexOrder;

    #[test]
    fn tn_out_arcs_match_figure() {
        let t5 = make(PatternKind::Tn(5)).unwrap();
        assert_eq!(t5.out_set(0).to_vec(), vec![1, 2]); // v_1 beats v_2, v_3
        let q7 = make(PatternKind::Q7).unwrap();
        assert_eq!(q7.out_set(0).to_vec(), vec![1, 2, 4]);
    }

    #[test]
    fn un_is_tn_with_first_arc_reversed_at_n5() {
        let t5 = make(PatternKind::Tn(5)).unwrap();
        let u5 = make(PatternKind::Un(5)).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    continue;
                }
                let expect = if (u, v) == (0, 1) || (u, v) == (1, 0) {
                    t5.has_arc(v, u)
                } else {
                    t5.has_arc(u, v)
                };
                assert_eq!(u5.has_arc(u, v), expect, "arc ({u},{v})");
            }
        }
    }

    #[test]
    fn snake3_backedges_form_the_path() {
        let s3 = make(PatternKind::Snake(3)).unwrap();
        let b = s3.backedge_graph(&VertexOrder::identity(3)).unwrap();
        let edges: Vec<_> = b.edges.iter().copied().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn w5_matches_hub_rule() {
        let w5 = make(PatternKind::Wn(5)).unwrap();
        // hub 0 beats w_1, w_3 and loses to w_2, w_4
        assert!(w5.has_arc(0, 1) && w5.has_arc(0, 3));
        assert!(w5.has_arc(2, 0) && w5.has_arc(4, 0));
        assert!(w5.has_arc(1, 2) && w5.has_arc(1, 4) && w5.has_arc(3, 4));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make(PatternKind::Tn(4)).is_err());
        assert!(make(PatternKind::Un(0)).is_err());
        assert!(make(PatternKind::Snake(0)).is_err());
    }

    #[test]
    fn recognize_tn_roundtrip_and_rejections() {
        for n in [1usize, 3, 5, 7, 9, 11] {
            let tn = make(PatternKind::Tn(n)).unwrap();
            let order = recognize_tn(&tn).expect("constructor output must be recognized");
            // relabeling reproduces the constructor arc-for-arc
            let perm = order.as_slice();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        assert_eq!(tn.has_arc(perm[i], perm[j]), tn_arc(n, i + 1, j + 1));
                    }
                }
            }
        }
        assert!(recognize_tn(&make(PatternKind::Un(7)).unwrap()).is_none());
        assert!(recognize_tn(&make(PatternKind::In(3)).unwrap()).is_none());
        assert!(recognize_tn(&make(PatternKind::Q7).unwrap()).is_none());
    }

    #[test]
    fn recognize_un_roundtrip_and_rejections() {
        for n in [5usize, 7, 9, 11, 13] {
            let un = make(PatternKind::Un(n)).unwrap();
            let labeling = recognize_un(&un).expect("constructor output must be recognized");
            assert!(verify_un_labeling(&un, &labeling));
        }
        assert!(recognize_un(&make(PatternKind::Tn(9)).unwrap()).is_none());
        assert!(recognize_un(&make(PatternKind::Q7).unwrap()).is_none());
        assert!(recognize_un(&make(PatternKind::In(7)).unwrap()).is_none());
    }

    #[test]
    fn un_has_unique_indegree_one_vertex() {
        for n in [5usize, 9, 13] {
            let un = make(PatternKind::Un(n)).unwrap();
            let deg1: Vec<_> = (0..n).filter(|&v| un.in_degree(v) == 1).collect();
            // v_{(n-1)/2} is 0-based (n-1)/2 - 1, with in-neighbor v_n
            assert_eq!(deg1, vec![(n - 1) / 2 - 1]);
            assert_eq!(un.in_set(deg1[0]).to_vec(), vec![n - 1]);
        }
    }

    #[test]
    fn b4_reversed_is_d4() {
        let b4 = make(PatternKind::B4).unwrap();
        let d4 = make(PatternKind::D4).unwrap();
        assert!(is_isomorphic_small(&b4.reverse(), &d4).unwrap().is_some());
        assert!(is_isomorphic_small(&b4, &d4).unwrap().is_none());
    }

    #[test]
    fn iso_distinguishes_t5_u5_and_regular_pairs() {
        let t5 = make(PatternKind::Tn(5)).unwrap();
        let u5 = make(PatternKind::Un(5)).unwrap();
        assert!(is_isomorphic_small(&t5, &u5).unwrap().is_none());
        let q7 = make(PatternKind::Q7).unwrap();
        let t7 = make(PatternKind::Tn(7)).unwrap();
        // both regular of degree 3, so only the bijection search can decide
        assert!(is_isomorphic_small(&q7, &t7).unwrap().is_none());
        let bij = is_isomorphic_small(&q7, &q7).unwrap().unwrap();
        assert_eq!(bij, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn iso_respects_size_limit() {
        let big = make(PatternKind::In(13)).unwrap();
        assert!(is_isomorphic_small(&big, &big).is_err());
    }

    #[test]
    fn q7_minus_v_is_q7_restricted() {
        let q = make(PatternKind::Q7MinusV).unwrap();
        assert_eq!(q.n(), 6);
        assert!(q.has_arc(5, 0)); // residue rule: 0 - 5 = 2 mod 7
        assert!(q.has_arc(0, 4));
        assert!(q.has_arc(3, 0));
    }
}
