//! The tri-partition solver for prime U5-free tournaments.
//!
//! Such a tournament either is T_n or splits into classes X, Y, Z whose
//! pairwise unions are transitive; in the latter case every cyclic triangle
//! crosses all three classes with the same orientation x -> y -> z -> x.
//! That forces suffix structure (each vertex beats a suffix of the next
//! class), which a dynamic program over class suffixes exploits.

use crate::bitset::VertexSet;
use crate::catalog::recognize_tn;
use crate::error::{Error, Result};
use crate::solution::Solution;
use crate::solvers::w5::solve_tn;
use crate::tournament::Tournament;
use crate::weights::{Weight, WeightMap};
use num::Zero;

/// Ordered tri-partition with transitive pairwise unions and all cyclic
/// triangles oriented X -> Y -> Z -> X. Only constructible through
/// validation.
#[derive(Clone, Debug)]
pub struct XYZPartition {
    x: Vec<usize>,
    y: Vec<usize>,
    z: Vec<usize>,
}

impl XYZPartition {
    pub fn new(t: &Tournament, x: Vec<usize>, y: Vec<usize>, z: Vec<usize>) -> Result<Self> {
        let part = XYZPartition { x, y, z };
        part.validate(t)?;
        Ok(part)
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    /// Checks every structural invariant against `t`.
    pub fn validate(&self, t: &Tournament) -> Result<()> {
        let n = t.n();
        let err = |msg: &str| Err(Error::InvalidPartition(msg.into()));
        if self.x.len() + self.y.len() + self.z.len() != n {
            return err("classes do not cover the vertex set");
        }
        let mut seen = vec![false; n];
        for &v in self.x.iter().chain(&self.y).chain(&self.z) {
            if v >= n || seen[v] {
                return err("classes overlap or leave the vertex range");
            }
            seen[v] = true;
        }
        // each class list is its own topological order
        for class in [&self.x, &self.y, &self.z] {
            for i in 0..class.len() {
                for j in i + 1..class.len() {
                    if !t.has_arc(class[i], class[j]) {
                        return err("class list is not in topological order");
                    }
                }
            }
        }
        // pairwise unions transitive
        for (a, b) in [(&self.x, &self.y), (&self.y, &self.z), (&self.z, &self.x)] {
            let union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
            let (sub, _) = t.induced(&union)?;
            if !sub.is_transitive() {
                return err("a pairwise union is not transitive");
            }
        }
        // no triangle oriented x -> z -> y -> x
        let yset = VertexSet::from_iter(n, self.y.iter().copied());
        let zset = VertexSet::from_iter(n, self.z.iter().copied());
        for &xv in &self.x {
            let in_x = t.in_set(xv);
            for zv in t.out_set(xv).intersection(&zset).iter() {
                let mut bad = t.out_set(zv).intersection(&in_x);
                bad.intersect_with(&yset);
                if !bad.is_empty() {
                    return err("a cyclic triangle is oriented X -> Z -> Y");
                }
            }
        }
        // out-neighborhoods into the next list are suffixes of that list
        for (class, next) in [
            (&self.x, &self.y),
            (&self.x, &self.z),
            (&self.y, &self.z),
        ] {
            for &v in class.iter() {
                let flags: Vec<bool> = next.iter().map(|&u| t.has_arc(v, u)).collect();
                if flags.windows(2).any(|w| w[0] && !w[1]) {
                    return err("an out-neighborhood is not a suffix of the next class");
                }
            }
        }
        Ok(())
    }
}

/// Grows an XYZ partition from a seed triangle: any outside vertex mixed on
/// the grown set closes a cyclic triangle with it and its class is forced by
/// which pairwise union gains a triangle. Returns `None` when growth stalls
/// before covering the vertex set or the grown partition fails validation
/// (both signal the tournament is not of partition form).
pub fn find_xyz_partition(t: &Tournament) -> Result<Option<XYZPartition>> {
    let n = t.n();
    let (a, b, c) = t.first_cyclic_triangle().ok_or(Error::NoTriangle)?;
    let mut class = vec![usize::MAX; n];
    class[a] = 0;
    class[b] = 1;
    class[c] = 2;
    let mut covered = VertexSet::from_iter(n, [a, b, c]);
    let mut class_sets = [
        VertexSet::from_iter(n, [a]),
        VertexSet::from_iter(n, [b]),
        VertexSet::from_iter(n, [c]),
    ];

    while covered.len() < n {
        let mut progressed = false;
        for i in 0..n {
            if covered.contains(i) {
                continue;
            }
            let out_hits = t.out_set(i).intersection(&covered).len();
            if out_hits == 0 || out_hits == covered.len() {
                continue; // not mixed on the grown set
            }
            let xy = class_sets[0].union(&class_sets[1]);
            let cls = if creates_triangle(t, i, &xy) {
                2
            } else {
                let xz = class_sets[0].union(&class_sets[2]);
                if creates_triangle(t, i, &xz) {
                    1
                } else {
                    0
                }
            };
            class[i] = cls;
            class_sets[cls].insert(i);
            covered.insert(i);
            progressed = true;
        }
        if !progressed {
            return Ok(None);
        }
    }

    let order_class = |cls: usize| -> Vec<usize> {
        let members: Vec<usize> = (0..n).filter(|&v| class[v] == cls).collect();
        let mut sorted = members.clone();
        // topological order within the class = descending internal out-degree
        let set = VertexSet::from_iter(n, members.iter().copied());
        sorted.sort_by_key(|&v| std::cmp::Reverse(t.out_set(v).intersection(&set).len()));
        sorted
    };
    let (x, y, z) = (order_class(0), order_class(1), order_class(2));
    match XYZPartition::new(t, x.clone(), y.clone(), z.clone()) {
        Ok(p) => Ok(Some(p)),
        // a seed oriented the other way around shows up as X -> Z -> Y
        // triangles everywhere; swapping the last two classes fixes it
        Err(_) => Ok(XYZPartition::new(t, x, z, y).ok()),
    }
}

/// Does `i` close a cyclic triangle with two vertices of `within`?
fn creates_triangle(t: &Tournament, i: usize, within: &VertexSet) -> bool {
    let in_i = t.in_set(i);
    for u in t.out_set(i).intersection(within).iter() {
        let mut back = t.out_set(u).intersection(&in_i);
        back.intersect_with(within);
        if !back.is_empty() {
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Choice {
    /// X-suffix exhausted: take all of Y_j and Z_k (their union is transitive).
    Base,
    /// Leave x_i out and move to the next X-suffix.
    SkipX,
    /// Take x_i with no out-neighbor of x_i in Y: all of X_i, Z_k, and the
    /// in-neighbors of x_i in Y_j.
    TakeRest,
    /// Take x_i and y_m as its first chosen out-neighbor in Y: the
    /// in-neighbors of x_i in Y_j, the in-neighbors of y_m in Z_k, and
    /// recurse on (i+1, m, n*) where Z_{n*} is the common out-suffix.
    Pair { m: usize, nstar: usize },
}

struct DpTable {
    p: usize,
    q: usize,
    r: usize,
    values: Vec<Weight>,
    choices: Vec<Choice>,
}

impl DpTable {
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * (self.q + 2) + j) * (self.r + 2) + k
    }

    fn value(&self, i: usize, j: usize, k: usize) -> &Weight {
        &self.values[self.idx(i, j, k)]
    }
}

/// Fills OPT(i, j, k) = optimum on X_i ∪ Y_j ∪ Z_k for all suffix triples,
/// descending in i; each cell takes the best of skipping x_i, taking x_i
/// with no Y-out-neighbor, or pairing x_i with each y_m it beats.
fn fill_table(t: &Tournament, w: &WeightMap, part: &XYZPartition) -> DpTable {
    let n = t.n();
    let (p, q, r) = (part.x.len(), part.y.len(), part.z.len());
    let suffix_sums = |order: &[usize]| -> Vec<Weight> {
        let mut s = vec![Weight::zero(); order.len() + 2];
        for i in (1..=order.len()).rev() {
            s[i] = &s[i + 1] + w.get(order[i - 1]);
        }
        s
    };
    let suf_x = suffix_sums(&part.x);
    let suf_y = suffix_sums(&part.y);
    let suf_z = suffix_sums(&part.z);

    let yset = VertexSet::from_iter(n, part.y.iter().copied());
    let zset = VertexSet::from_iter(n, part.z.iter().copied());
    // suffix starts (1-based): vertex v beats exactly positions start..=len
    let ysx: Vec<usize> = part.x.iter().map(|&v| q + 1 - t.out_set(v).intersection(&yset).len()).collect();
    let zsx: Vec<usize> = part.x.iter().map(|&v| r + 1 - t.out_set(v).intersection(&zset).len()).collect();
    let zsy: Vec<usize> = part.y.iter().map(|&v| r + 1 - t.out_set(v).intersection(&zset).len()).collect();

    let size = (p + 1) * (q + 2) * (r + 2);
    let mut table = DpTable {
        p,
        q,
        r,
        values: vec![Weight::zero(); size],
        choices: vec![Choice::Base; size],
    };

    for j in 1..=q + 1 {
        for k in 1..=r + 1 {
            let at = table.idx(p + 1, j, k);
            table.values[at] = &suf_y[j] + &suf_z[k];
        }
    }

    for i in (1..=p).rev() {
        let xi = part.x[i - 1];
        let ys = ysx[i - 1];
        for j in 1..=q + 1 {
            // weight of the in-neighbors of x_i inside Y_j (a prefix of Y_j)
            let y_in = if ys > j {
                &suf_y[j] - &suf_y[ys]
            } else {
                Weight::zero()
            };
            for k in 1..=r + 1 {
                let mut best = table.value(i + 1, j, k).clone();
                let mut choice = Choice::SkipX;
                let take_rest = &suf_x[i] + &suf_z[k] + &y_in;
                if take_rest > best {
                    best = take_rest;
                    choice = Choice::TakeRest;
                }
                for m in j.max(ys)..=q {
                    let zs = zsy[m - 1];
                    let z_in = if zs > k {
                        &suf_z[k] - &suf_z[zs]
                    } else {
                        Weight::zero()
                    };
                    let nstar = k.max(zs).max(zsx[i - 1]);
                    if cfg!(debug_assertions) && n <= 30 {
                        // the common out-suffix really is Z_{n*}
                        let explicit: Vec<usize> = (k..=r)
                            .filter(|&kk| {
                                let zv = part.z[kk - 1];
                                t.has_arc(part.y[m - 1], zv) && t.has_arc(xi, zv)
                            })
                            .collect();
                        debug_assert_eq!(explicit, (nstar..=r).collect::<Vec<_>>());
                    }
                    let cand = w.get(xi) + &y_in + &z_in + table.value(i + 1, m, nstar);
                    if cand > best {
                        best = cand;
                        choice = Choice::Pair { m, nstar };
                    }
                }
                let at = table.idx(i, j, k);
                table.values[at] = best;
                table.choices[at] = choice;
            }
        }
    }
    table
}

/// Optimal solution given a valid XYZ partition of `t`.
pub fn solve_xyz_dp(t: &Tournament, w: &WeightMap, part: &XYZPartition) -> Result<Solution> {
    part.validate(t)?;
    if w.len() != t.n() {
        return Err(Error::WeightCount(w.len(), t.n()));
    }
    let table = fill_table(t, w, part);
    let (p, q, r) = (table.p, table.q, table.r);

    let n = t.n();
    let yset = VertexSet::from_iter(n, part.y.iter().copied());
    let zset = VertexSet::from_iter(n, part.z.iter().copied());
    let ysx: Vec<usize> = part.x.iter().map(|&v| q + 1 - t.out_set(v).intersection(&yset).len()).collect();
    let zsy: Vec<usize> = part.y.iter().map(|&v| r + 1 - t.out_set(v).intersection(&zset).len()).collect();

    let mut verts: Vec<usize> = Vec::new();
    let (mut i, mut j, mut k) = (1usize, 1usize, 1usize);
    loop {
        if i == p + 1 {
            verts.extend_from_slice(&part.y[j - 1..]);
            verts.extend_from_slice(&part.z[k - 1..]);
            break;
        }
        match table.choices[table.idx(i, j, k)] {
            Choice::Base => unreachable!("base choices live only in the last layer"),
            Choice::SkipX => i += 1,
            Choice::TakeRest => {
                verts.extend_from_slice(&part.x[i - 1..]);
                let ys = ysx[i - 1];
                if ys > j {
                    verts.extend_from_slice(&part.y[j - 1..ys - 1]);
                }
                verts.extend_from_slice(&part.z[k - 1..]);
                break;
            }
            Choice::Pair { m, nstar } => {
                verts.push(part.x[i - 1]);
                let ys = ysx[i - 1];
                if ys > j {
                    verts.extend_from_slice(&part.y[j - 1..ys - 1]);
                }
                let zs = zsy[m - 1];
                if zs > k {
                    verts.extend_from_slice(&part.z[k - 1..zs - 1]);
                }
                i += 1;
                j = m;
                k = nstar;
            }
        }
    }
    let solution = Solution::new(t, w, verts)?;
    debug_assert_eq!(solution.weight(), table.value(1, 1, 1));
    Ok(solution)
}

/// Prime U5-free dispatch: transitive tournaments take everything, partition
/// form goes to the dynamic program, and the remaining case must be T_n.
pub fn solve_u5free_prime(t: &Tournament, w: &WeightMap) -> Result<Solution> {
    if t.is_transitive() {
        return Solution::new(t, w, (0..t.n()).collect());
    }
    match find_xyz_partition(t)? {
        Some(part) => solve_xyz_dp(t, w, &part),
        None => match recognize_tn(t) {
            Some(order) => solve_tn(t, &order, w),
            None => Err(Error::NotInClass(
                "prime U5-free: neither partition form nor T_n".into(),
            )),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, PatternKind};
    use crate::solvers::four::tests::triangle_blowup;
    use crate::solvers::oracle::oracle_wmisp;

    #[test]
    fn cyclic_triangle_has_singleton_partition() {
        let c3 = make(PatternKind::Tn(3)).unwrap();
        let part = find_xyz_partition(&c3).unwrap().unwrap();
        assert_eq!(part.x().len(), 1);
        assert_eq!(part.y().len(), 1);
        assert_eq!(part.z().len(), 1);
        let sol = solve_xyz_dp(&c3, &WeightMap::unit(3), &part).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(2.into()));
    }

    #[test]
    fn transitive_input_has_no_seed() {
        let i4 = make(PatternKind::In(4)).unwrap();
        assert!(matches!(find_xyz_partition(&i4), Err(Error::NoTriangle)));
    }

    #[test]
    fn blowup_partition_and_value() {
        // I_2 / I_3 / I_2 blow-up of a cyclic triangle
        let t = triangle_blowup(2, 3, 2);
        let part = find_xyz_partition(&t).unwrap().expect("partition form");
        let mut sizes = [part.x().len(), part.y().len(), part.z().len()];
        sizes.sort_unstable();
        assert_eq!(sizes, [2, 2, 3]);
        let w = WeightMap::unit(7);
        let sol = solve_xyz_dp(&t, &w, &part).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(5.into()));
        assert_eq!(sol.weight(), oracle_wmisp(&t, &w).unwrap().weight());
    }

    #[test]
    fn tn_is_not_partition_form() {
        let t7 = make(PatternKind::Tn(7)).unwrap();
        assert!(find_xyz_partition(&t7).unwrap().is_none());
    }

    #[test]
    fn validation_rejects_garbage() {
        let c3 = make(PatternKind::Tn(3)).unwrap();
        assert!(XYZPartition::new(&c3, vec![0, 1], vec![2], vec![]).is_err());
        assert!(XYZPartition::new(&c3, vec![0], vec![1], vec![]).is_err());
        // wrong orientation: 0 -> 1 -> 2 -> 0 relabeled as X=0, Z=1, Y=2
        assert!(XYZPartition::new(&c3, vec![0], vec![2], vec![1]).is_err());
    }

    #[test]
    fn dp_table_is_monotone() {
        let t = triangle_blowup(2, 3, 2);
        let w = WeightMap::from_integers([3, 1, 2, 2, 5, 1, 4]).unwrap();
        let part = find_xyz_partition(&t).unwrap().unwrap();
        let table = fill_table(&t, &w, &part);
        let (p, q, r) = (table.p, table.q, table.r);
        for i in 1..=p {
            for j in 1..=q {
                for k in 1..=r {
                    assert!(table.value(i, j, k) >= table.value(i + 1, j, k));
                    assert!(table.value(i, j, k) >= table.value(i, j + 1, k));
                    assert!(table.value(i, j, k) >= table.value(i, j, k + 1));
                }
            }
        }
    }

    #[test]
    fn u5free_prime_dispatch() {
        let t9 = make(PatternKind::Tn(9)).unwrap();
        let w = WeightMap::unit(9);
        let sol = solve_u5free_prime(&t9, &w).unwrap();
        assert_eq!(sol.weight(), oracle_wmisp(&t9, &w).unwrap().weight());

        let i6 = make(PatternKind::In(6)).unwrap();
        let sol = solve_u5free_prime(&i6, &WeightMap::unit(6)).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(6.into()));

        let c3 = make(PatternKind::Tn(3)).unwrap();
        let sol = solve_u5free_prime(&c3, &WeightMap::unit(3)).unwrap();
        assert_eq!(sol.weight(), &Weight::from_integer(2.into()));
    }
}
