//! Solvers for prime W5-free tournaments. Past seven vertices such a
//! tournament is T_n (regular case, solved via the D4-free algorithm) or U_n
//! (solved by enumerating the three candidate shapes of an optimum).

use crate::catalog::{recognize_tn, recognize_un, verify_tn_labeling, verify_un_labeling, UnLabeling};
use crate::error::{Error, Result};
use crate::solution::{keep_best, Solution};
use crate::solvers::four::solve_d4free;
use crate::solvers::oracle::oracle_wmisp;
use crate::tournament::{Tournament, VertexOrder};
use crate::weights::{Weight, WeightMap};
use num::Zero;

/// T_n is D4-free, so the labeling only needs to be checked, not used.
pub fn solve_tn(t: &Tournament, order: &VertexOrder, w: &WeightMap) -> Result<Solution> {
    if !verify_tn_labeling(t, order) {
        return Err(Error::BadLabeling("T_n arc rule".into()));
    }
    solve_d4free(t, w, false)
}

/// Optimal solution on a labeled U_n. With A the upper half and B the lower
/// (reversed) half, an optimum is A, B, a single A-vertex plus all of B, or a
/// consecutive run v_i..v_j of A plus B minus the labels strictly between
/// i - n/2 and j - n/2. All O(n^2) candidates are scored via prefix sums and
/// only potential winners are materialized.
pub fn solve_un(t: &Tournament, labeling: &UnLabeling, w: &WeightMap) -> Result<Solution> {
    if !verify_un_labeling(t, labeling) {
        return Err(Error::BadLabeling("U_n arc rule".into()));
    }
    let n = t.n();
    let order = &labeling.order;
    let half = (n - 1) / 2;

    // prefix[k] = total weight of labels 1..=k
    let mut prefix = vec![Weight::zero(); n + 1];
    for k in 1..=n {
        prefix[k] = &prefix[k - 1] + w.get(order[k - 1]);
    }
    let seg = |lo: usize, hi: usize| -> Weight {
        if lo > hi {
            Weight::zero()
        } else {
            &prefix[hi] - &prefix[lo - 1]
        }
    };

    let mut best: Option<Solution> = None;
    let consider = |labels: &mut dyn Iterator<Item = usize>,
                        weight: Weight,
                        best: &mut Option<Solution>|
     -> Result<()> {
        if let Some(b) = &best {
            if weight < *b.weight() {
                return Ok(());
            }
        }
        let verts: Vec<usize> = labels.map(|l| order[l - 1]).collect();
        let cand = Solution::new(t, w, verts)
            .map_err(|_| Error::BadLabeling("candidate set is not transitive".into()))?;
        debug_assert_eq!(*cand.weight(), weight);
        keep_best(best, cand);
        Ok(())
    };

    // (1) all of A, all of B
    consider(&mut (half + 1..=n), seg(half + 1, n), &mut best)?;
    consider(&mut (1..=half), seg(1, half), &mut best)?;
    // (2) one A-vertex plus all of B
    for a in half + 1..=n {
        let weight = seg(1, half) + w.get(order[a - 1]);
        consider(&mut (1..=half).chain(a..=a), weight, &mut best)?;
    }
    // (3) a run v_i..v_j of A plus B minus labels in (i - n/2, j - n/2)
    for i in half + 1..n {
        for j in i + 1..=n {
            // integer form of the open interval bounds (n is odd)
            let lo = (i - half).max(1);
            let hi = j.saturating_sub(half + 1).min(half);
            let weight = seg(i, j) + seg(1, half) - seg(lo, hi);
            consider(
                &mut (1..=half).filter(|&k| k < lo || k > hi).chain(i..=j),
                weight,
                &mut best,
            )?;
        }
    }
    Ok(best.expect("at least one candidate"))
}

/// Dispatch for a prime W5-free tournament: small ones go to the oracle,
/// regular ones must be T_n, the rest must be U_n.
pub fn solve_w5free_prime(t: &Tournament, w: &WeightMap) -> Result<Solution> {
    let n = t.n();
    if n <= 7 {
        return oracle_wmisp(t, w);
    }
    let regular = n % 2 == 1 && (0..n).all(|v| t.out_degree(v) == (n - 1) / 2);
    if regular {
        match recognize_tn(t) {
            Some(order) => solve_tn(t, &order, w),
            None => Err(Error::NotInClass(
                "prime W5-free: regular but not T_n".into(),
            )),
        }
    } else {
        match recognize_un(t) {
            Some(labeling) => solve_un(t, &labeling, w),
            None => Err(Error::NotInClass("prime W5-free: not U_n".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, PatternKind};

    #[test]
    fn tn_values_match_oracle() {
        for (n, expect) in [(5usize, 3i64), (9, 5)] {
            let tn = make(PatternKind::Tn(n)).unwrap();
            let w = WeightMap::unit(n);
            let order = recognize_tn(&tn).unwrap();
            let sol = solve_tn(&tn, &order, &w).unwrap();
            let oracle = oracle_wmisp(&tn, &w).unwrap();
            assert_eq!(sol.weight(), oracle.weight());
            assert_eq!(sol.weight(), &Weight::from_integer(expect.into()));
        }
        // weighted cyclic triangle = T_3
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let w = WeightMap::from_integers([1, 5, 1]).unwrap();
        let order = recognize_tn(&c3).unwrap();
        assert_eq!(
            solve_tn(&c3, &order, &w).unwrap().weight(),
            &Weight::from_integer(6.into())
        );
    }

    #[test]
    fn tn_rejects_bad_labelings() {
        let t5 = make(PatternKind::Tn(5)).unwrap();
        let bad = VertexOrder::new(5, vec![1, 0, 2, 3, 4]).unwrap();
        assert!(matches!(
            solve_tn(&t5, &bad, &WeightMap::unit(5)),
            Err(Error::BadLabeling(_))
        ));
    }

    #[test]
    fn un_values_match_oracle() {
        for n in [5usize, 7, 9, 11] {
            let un = make(PatternKind::Un(n)).unwrap();
            let w = WeightMap::unit(n);
            let labeling = recognize_un(&un).unwrap();
            let sol = solve_un(&un, &labeling, &w).unwrap();
            let oracle = oracle_wmisp(&un, &w).unwrap();
            assert_eq!(sol.weight(), oracle.weight(), "n={n}");
        }
    }

    #[test]
    fn un_heavy_lower_half_keeps_it() {
        let n = 7;
        let un = make(PatternKind::Un(n)).unwrap();
        let labeling = recognize_un(&un).unwrap();
        // weight 10 on B = labels 1..=3, weight 1 elsewhere
        let mut weights = vec![1i64; n];
        for k in 1..=3usize {
            weights[labeling.order[k - 1]] = 10;
        }
        let w = WeightMap::from_integers(weights.iter().copied()).unwrap();
        let sol = solve_un(&un, &labeling, &w).unwrap();
        let oracle = oracle_wmisp(&un, &w).unwrap();
        assert_eq!(sol.weight(), oracle.weight());
        for k in 1..=3usize {
            assert!(sol.vertices().contains(&labeling.order[k - 1]));
        }
    }

    #[test]
    fn un_candidates_are_transitive() {
        // materializing every candidate must never hit a non-transitive set;
        // random weights force all weight classes to be visited over reruns
        for n in [5usize, 7, 9, 11, 13] {
            let un = make(PatternKind::Un(n)).unwrap();
            let labeling = recognize_un(&un).unwrap();
            let order = &labeling.order;
            let half = (n - 1) / 2;
            let check = |labels: Vec<usize>| {
                let verts: Vec<usize> = labels.iter().map(|&l| order[l - 1]).collect();
                let (sub, _) = un.induced(&verts).unwrap();
                assert!(sub.is_transitive(), "n={n} labels={labels:?}");
            };
            check((half + 1..=n).collect());
            check((1..=half).collect());
            for a in half + 1..=n {
                check((1..=half).chain(a..=a).collect());
            }
            for i in half + 1..n {
                for j in i + 1..=n {
                    let lo = (i - half).max(1);
                    let hi = j.saturating_sub(half + 1).min(half);
                    check((1..=half).filter(|&k| k < lo || k > hi).chain(i..=j).collect());
                }
            }
        }
    }

    #[test]
    fn w5free_prime_dispatch() {
        let q7 = make(PatternKind::Q7).unwrap();
        let sol = solve_w5free_prime(&q7, &WeightMap::unit(7)).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(3.into()));

        let t11 = make(PatternKind::Tn(11)).unwrap();
        let a = solve_w5free_prime(&t11, &WeightMap::unit(11)).unwrap();
        let b = solve_d4free(&t11, &WeightMap::unit(11), true).unwrap();
        assert_eq!(a.weight(), b.weight());

        let u11 = make(PatternKind::Un(11)).unwrap();
        let a = solve_w5free_prime(&u11, &WeightMap::unit(11)).unwrap();
        let b = oracle_wmisp(&u11, &WeightMap::unit(11)).unwrap();
        assert_eq!(a.weight(), b.weight());

        // prime W5-free tournaments of even size >= 8 cannot exist; the
        // recognizers signal the violated precondition
        let i8 = make(PatternKind::In(8)).unwrap();
        assert!(matches!(
            solve_w5free_prime(&i8, &WeightMap::unit(8)),
            Err(Error::NotInClass(_))
        ));
    }
}
