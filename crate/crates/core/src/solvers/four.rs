//! Solvers for the three tractable 4-vertex forbidden patterns.
//!
//! B4-free: every out-neighborhood is transitive, so the optimum is the best
//! closed out-neighborhood. C4-free: strong components have size 1 or 3,
//! singletons are free and triangles lose their lightest vertex. D4-free is
//! B4-free on the reversal.

use crate::catalog::{make, PatternKind};
use crate::error::{Error, Result};
use crate::pattern::find_induced;
use crate::solution::{keep_best, Solution};
use crate::tournament::Tournament;
use crate::weights::WeightMap;

pub fn solve_b4free(t: &Tournament, w: &WeightMap, verify_class: bool) -> Result<Solution> {
    if verify_class {
        let b4 = make(PatternKind::B4)?;
        if find_induced(t, &b4)?.is_some() {
            return Err(Error::NotInClass("B4-free".into()));
        }
    }
    let n = t.n();
    if n == 0 {
        return Solution::new(t, w, vec![]);
    }
    let mut best: Option<Solution> = None;
    for v in 0..n {
        let mut verts = t.out_set(v).to_vec();
        verts.push(v);
        let candidate = Solution::new(t, w, verts)
            .map_err(|_| Error::NotInClass("B4-free (an out-neighborhood is not transitive)".into()))?;
        keep_best(&mut best, candidate);
    }
    Ok(best.expect("n > 0"))
}

pub fn solve_c4free(t: &Tournament, w: &WeightMap, _verify_class: bool) -> Result<Solution> {
    // The structural check below is exactly C4-freeness, so there is nothing
    // cheaper to skip: a tournament is C4-free iff every strong component
    // has size 1 or 3.
    let mut verts: Vec<usize> = Vec::new();
    for comp in t.strong_components() {
        match comp.len() {
            1 => verts.push(comp[0]),
            3 => {
                let mut members = comp.clone();
                // two heaviest, ties toward the lower index
                members.sort_by(|&a, &b| w.get(b).cmp(w.get(a)).then(a.cmp(&b)));
                verts.extend_from_slice(&members[..2]);
            }
            k => {
                return Err(Error::NotInClass(format!(
                    "C4-free (strong component of size {k})"
                )))
            }
        }
    }
    Solution::new(t, w, verts)
}

pub fn solve_d4free(t: &Tournament, w: &WeightMap, verify_class: bool) -> Result<Solution> {
    if verify_class {
        let d4 = make(PatternKind::D4)?;
        if find_induced(t, &d4)?.is_some() {
            return Err(Error::NotInClass("D4-free".into()));
        }
    }
    // transitive sets are preserved under arc reversal
    let sol = solve_b4free(&t.reverse(), w, false)
        .map_err(|_| Error::NotInClass("D4-free (a reversed out-neighborhood is not transitive)".into()))?;
    Solution::new(t, w, sol.vertices().to_vec())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::solvers::oracle::oracle_wmisp;
    use crate::tournament::Tournament;
    use crate::weights::Weight;

    fn unit(n: usize) -> WeightMap {
        WeightMap::unit(n)
    }

    #[test]
    fn b4_on_transitive_takes_everything() {
        let i4 = make(PatternKind::In(4)).unwrap();
        let sol = solve_b4free(&i4, &unit(4), true).unwrap();
        assert_eq!(sol.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn b4_on_cyclic_triangle() {
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let sol = solve_b4free(&c3, &unit(3), true).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(2.into()));
    }

    #[test]
    fn b4_rejects_b4() {
        let b4 = make(PatternKind::B4).unwrap();
        assert!(matches!(
            solve_b4free(&b4, &unit(4), true),
            Err(Error::NotInClass(_))
        ));
    }

    /// Cyclic triangle blown up by transitive tournaments of sizes (a, b, c).
    pub(crate) fn triangle_blowup(a: usize, b: usize, c: usize) -> Tournament {
        let n = a + b + c;
        let class = |v: usize| {
            if v < a {
                0
            } else if v < a + b {
                1
            } else {
                2
            }
        };
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let (cu, cv) = (class(u), class(v));
                let arc = if cu == cv { u < v } else { (cu + 1) % 3 == cv };
                if arc {
                    arcs.push((u, v));
                }
            }
        }
        Tournament::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn b4_matches_oracle_on_blowups() {
        for (a, b, c) in [(4, 3, 3), (2, 5, 1), (1, 1, 8)] {
            let t = triangle_blowup(a, b, c);
            let w = unit(t.n());
            let sol = solve_b4free(&t, &w, true).unwrap();
            let oracle = oracle_wmisp(&t, &w).unwrap();
            assert_eq!(sol.weight(), oracle.weight());
        }
    }

    #[test]
    fn c4_weighted_triangle() {
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let w = WeightMap::from_integers([3, 1, 2]).unwrap();
        let sol = solve_c4free(&c3, &w, true).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(5.into()));
        assert_eq!(sol.vertices(), &[0, 2]);
    }

    #[test]
    fn c4_chain_of_two_triangles() {
        // first triangle beats second, unit weights: 2 + 2
        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        for u in 0..3 {
            for v in 3..6 {
                arcs.push((u, v));
            }
        }
        let t = Tournament::from_arcs(6, &arcs).unwrap();
        let sol = solve_c4free(&t, &unit(6), true).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(4.into()));
        let oracle = oracle_wmisp(&t, &unit(6)).unwrap();
        assert_eq!(sol.weight(), oracle.weight());
    }

    #[test]
    fn c4_rejects_c4() {
        let c4 = make(PatternKind::C4).unwrap();
        assert!(matches!(
            solve_c4free(&c4, &unit(4), true),
            Err(Error::NotInClass(_))
        ));
    }

    #[test]
    fn d4_matches_oracle_on_tn() {
        let t7 = make(PatternKind::Tn(7)).unwrap();
        let sol = solve_d4free(&t7, &unit(7), true).unwrap();
        let oracle = oracle_wmisp(&t7, &unit(7)).unwrap();
        assert_eq!(sol.weight(), oracle.weight());

        let i5 = make(PatternKind::In(5)).unwrap();
        assert_eq!(
            solve_d4free(&i5, &unit(5), true).unwrap().weight(),
            &Weight::from_integer(5.into())
        );
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let w = WeightMap::from_integers([1, 5, 1]).unwrap();
        assert_eq!(
            solve_d4free(&c3, &w, true).unwrap().weight(),
            &Weight::from_integer(6.into())
        );
    }
}
