//! Forbidden-subtournament detection and 1-in/out-degeneracy checks.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub const PATTERN_LIMIT: usize = 8;

/// An induced copy of a pattern H inside a host tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternHit {
    /// Host vertices inducing the copy, ascending.
    pub vertices: Vec<usize>,
    /// `mapping[k]` is the H-vertex that `vertices[k]` plays.
    pub mapping: Vec<usize>,
}

/// First induced copy of `h` in `t`, scanning candidate vertex subsets in
/// lexicographic order; `None` means `t` is h-free.
pub fn find_induced(t: &Tournament, h: &Tournament) -> Result<Option<PatternHit>> {
    let k = h.n();
    if k > PATTERN_LIMIT {
        return Err(Error::PatternTooLarge(k, PATTERN_LIMIT));
    }
    let n = t.n();
    if k > n {
        return Ok(None);
    }
    if k == 0 {
        return Ok(Some(PatternHit {
            vertices: vec![],
            mapping: vec![],
        }));
    }
    let mut h_degs: Vec<usize> = (0..k).map(|v| h.out_degree(v)).collect();
    h_degs.sort_unstable();

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if let Some(hit) = try_subset(t, h, &subset, &h_degs) {
            return Ok(Some(hit));
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn try_subset(t: &Tournament, h: &Tournament, subset: &[usize], h_degs: &[usize]) -> Option<PatternHit> {
    let k = subset.len();
    // within-subset out-degrees must match H's degree multiset
    let mut degs: Vec<usize> = subset
        .iter()
        .map(|&u| subset.iter().filter(|&&v| u != v && t.has_arc(u, v)).count())
        .collect();
    let local = degs.clone();
    degs.sort_unstable();
    if degs != h_degs {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if assign(t, h, subset, &local, 0, &mut map, &mut used) {
        Some(PatternHit {
            vertices: subset.to_vec(),
            mapping: map,
        })
    } else {
        None
    }
}

fn assign(
    t: &Tournament,
    h: &Tournament,
    subset: &[usize],
    local_deg: &[usize],
    idx: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if idx == subset.len() {
        return true;
    }
    for img in 0..h.n() {
        if used[img] || h.out_degree(img) != local_deg[idx] {
            continue;
        }
        let ok = (0..idx).all(|p| t.has_arc(subset[p], subset[idx]) == h.has_arc(map[p], img));
        if !ok {
            continue;
        }
        map[idx] = img;
        used[img] = true;
        if assign(t, h, subset, local_deg, idx + 1, map, used) {
            return true;
        }
        used[img] = false;
        map[idx] = usize::MAX;
    }
    false
}

/// Outcome of a degeneracy peel. `witness` is empty iff `degenerate`;
/// otherwise it is a subtournament in which the relevant degree is
/// everywhere at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub degenerate: bool,
    pub witness: Vec<usize>,
}

/// Repeatedly removes a vertex of out-degree <= 1; succeeds iff the peel
/// empties the tournament. Peeling greedily is sound because out-degrees
/// only drop when passing to subtournaments.
pub fn is_1_out_degenerate(t: &Tournament) -> Degeneracy {
    let n = t.n();
    let mut remaining = VertexSet::full(n);
    let mut count = n;
    while count > 0 {
        let peel = remaining
            .iter()
            .find(|&v| t.out_set(v).intersection(&remaining).len() <= 1);
        match peel {
            Some(v) => {
                remaining.remove(v);
                count -= 1;
            }
            None => {
                return Degeneracy {
                    degenerate: false,
                    witness: remaining.to_vec(),
                }
            }
        }
    }
    Degeneracy {
        degenerate: true,
        witness: vec![],
    }
}

pub fn is_1_in_degenerate(t: &Tournament) -> Degeneracy {
    is_1_out_degenerate(&t.reverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{is_isomorphic_small, make, PatternKind};

    #[test]
    fn finds_itself() {
        let w5 = make(PatternKind::Wn(5)).unwrap();
        let hit = find_induced(&w5, &w5).unwrap().unwrap();
        assert_eq!(hit.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(hit.mapping, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn tn_is_d4_free_and_u5_free() {
        let d4 = make(PatternKind::D4).unwrap();
        let u5 = make(PatternKind::Un(5)).unwrap();
        for n in [5usize, 7, 9] {
            let tn = make(PatternKind::Tn(n)).unwrap();
            assert!(find_induced(&tn, &d4).unwrap().is_none(), "T_{n} has a D4");
            assert!(find_induced(&tn, &u5).unwrap().is_none(), "T_{n} has a U5");
        }
    }

    #[test]
    fn first_hit_is_lexicographic() {
        let t5 = make(PatternKind::Tn(5)).unwrap();
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let hit = find_induced(&t5, &c3).unwrap().unwrap();
        assert_eq!(hit.vertices, vec![0, 1, 3]);
    }

    #[test]
    fn hits_reverify_as_isomorphisms() {
        let host = make(PatternKind::Q7).unwrap();
        for pat in [PatternKind::B4, PatternKind::C4, PatternKind::D4] {
            let h = make(pat).unwrap();
            if let Some(hit) = find_induced(&host, &h).unwrap() {
                let (sub, map) = host.induced(&hit.vertices).unwrap();
                assert_eq!(map, hit.vertices);
                assert!(is_isomorphic_small(&sub, &h).unwrap().is_some());
                // the reported mapping itself must preserve arcs
                for (a, &u) in hit.vertices.iter().enumerate() {
                    for (b, &v) in hit.vertices.iter().enumerate() {
                        if a != b {
                            assert_eq!(host.has_arc(u, v), h.has_arc(hit.mapping[a], hit.mapping[b]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pattern_larger_than_host_is_free() {
        let i3 = make(PatternKind::In(3)).unwrap();
        let t5 = make(PatternKind::Tn(5)).unwrap();
        assert!(find_induced(&i3, &t5).unwrap().is_none());
    }

    #[test]
    fn rejects_oversized_patterns() {
        let big = make(PatternKind::In(9)).unwrap();
        let host = make(PatternKind::In(10)).unwrap();
        assert!(matches!(
            find_induced(&host, &big),
            Err(Error::PatternTooLarge(9, _))
        ));
    }

    #[test]
    fn degeneracy_of_named_tournaments() {
        assert!(is_1_out_degenerate(&make(PatternKind::Snake(7)).unwrap()).degenerate);
        assert!(is_1_in_degenerate(&make(PatternKind::Snake(7)).unwrap()).degenerate);
        assert!(is_1_out_degenerate(&make(PatternKind::In(6)).unwrap()).degenerate);
        assert!(is_1_in_degenerate(&make(PatternKind::Tn(3)).unwrap()).degenerate);

        let t5 = make(PatternKind::Tn(5)).unwrap();
        let out = is_1_out_degenerate(&t5);
        assert!(!out.degenerate);
        assert_eq!(out.witness, vec![0, 1, 2, 3, 4]);
        assert!(!is_1_in_degenerate(&t5).degenerate);
    }
}
