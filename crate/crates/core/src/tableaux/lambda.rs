//! The cell poset L_n(alpha): pairs (blam | bmu), Λ-tableaux and the
//! straightened S_n action on row standard Λ-tableaux.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{
    conjugate_multipartition, dominance_multicomp, dominance_multitableau, enumerate_rstd, enumerate_std, partition_cmp,
    partitions, Composition, MultiComp, MultiTableau,
};
use crate::error::{BtError, Result};
use crate::symmetric_group::{intervals, Permutation};

/// Λ = (blam | bmu). `blam` has no empty components and its equal components
/// are adjacent; `bmu[j]` is a partition of the multiplicity of the j-th
/// distinct component.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LambdaPair {
    pub blam: MultiComp,
    pub bmu: MultiComp,
}

/// (t | u) with u of the initial kind.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LambdaTableau {
    pub t: MultiTableau,
    pub u: MultiTableau,
}

pub fn is_increasing(blam: &MultiComp) -> bool {
    blam.windows(2).all(|w| partition_cmp(&w[0], &w[1]) != std::cmp::Ordering::Greater)
}

/// The unique increasing reordering of a multipartition.
pub fn increasing_reordering(blam: &MultiComp) -> MultiComp {
    let mut v = blam.clone();
    v.sort_by(|a, b| partition_cmp(a, b));
    v
}

impl LambdaPair {
    pub fn new(blam: MultiComp, bmu: MultiComp) -> Result<Self> {
        let l = LambdaPair { blam, bmu };
        if l.blam.iter().any(|c| c.is_empty() || !super::is_partition(c)) {
            return Err(BtError::InvalidShape(format!("{:?}: components must be nonempty partitions", l.blam)));
        }
        let mult = l.multiplicities();
        let ok = l.bmu.len() == mult.len()
            && l.bmu.iter().zip(&mult).all(|(mu, &m)| super::is_partition(mu) && super::size(mu) == m);
        // equal components must sit together
        let distinct: Vec<&Composition> = l.blam.iter().dedup().collect();
        let unique: BTreeSet<&Composition> = l.blam.iter().collect();
        if !ok || distinct.len() != unique.len() {
            return Err(BtError::InvalidShape(format!("{:?} | {:?}", l.blam, l.bmu)));
        }
        Ok(l)
    }

    pub fn n(&self) -> usize {
        super::multi_size(&self.blam)
    }

    pub fn r(&self) -> usize {
        self.blam.len()
    }

    /// Multiplicities of the runs of equal components.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.blam.iter().dedup_with_count().map(|(c, _)| c).collect()
    }

    /// Component index ranges (0-based, half-open) of the runs.
    pub fn groups(&self) -> Vec<(usize, usize)> {
        intervals(&self.multiplicities())
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blam.iter().map(|c| super::size(c)).collect()
    }

    /// Type of A_blam.
    pub fn alpha(&self) -> Vec<usize> {
        let mut a = self.block_sizes();
        a.sort_unstable_by(|x, y| y.cmp(x));
        a
    }

    pub fn conjugate(&self) -> Result<LambdaPair> {
        Ok(LambdaPair { blam: conjugate_multipartition(&self.blam)?, bmu: conjugate_multipartition(&self.bmu)? })
    }

    /// Largest number of columns of a component.
    pub fn max_columns(&self) -> usize {
        self.blam.iter().filter_map(|c| c.first().copied()).max().unwrap_or(0)
    }

    pub fn top(&self) -> LambdaTableau {
        LambdaTableau { t: MultiTableau::initial(&self.blam), u: MultiTableau::initial(&self.bmu) }
    }

    pub fn bottom(&self) -> LambdaTableau {
        LambdaTableau { t: MultiTableau::column_reading(&self.blam), u: MultiTableau::column_reading(&self.bmu) }
    }

    /// Minima of equal components increase left to right.
    pub fn t_is_increasing(&self, t: &MultiTableau) -> bool {
        self.groups().iter().all(|&(a, b)| (a + 1..b).all(|k| t.min_of_component(k - 1) < t.min_of_component(k)))
    }

    pub fn std(&self) -> Vec<LambdaTableau> {
        let ts: Vec<_> = enumerate_std(&self.blam).into_iter().filter(|t| self.t_is_increasing(t)).collect();
        let us: Vec<_> = enumerate_std(&self.bmu).into_iter().filter(|u| u.is_initial_kind()).collect();
        ts.iter().cartesian_product(&us).map(|(t, u)| LambdaTableau { t: t.clone(), u: u.clone() }).collect()
    }

    pub fn rstd(&self) -> Vec<LambdaTableau> {
        let ts: Vec<_> = enumerate_rstd(&self.blam).into_iter().filter(|t| self.t_is_increasing(t)).collect();
        let us: Vec<_> = enumerate_rstd(&self.bmu).into_iter().filter(|u| u.is_initial_kind()).collect();
        ts.iter().cartesian_product(&us).map(|(t, u)| LambdaTableau { t: t.clone(), u: u.clone() }).collect()
    }

    pub fn is_row_standard(&self, es: &LambdaTableau) -> bool {
        es.t.shape() == self.blam
            && es.u.shape() == self.bmu
            && es.t.is_row_standard()
            && es.u.is_row_standard()
            && es.u.is_initial_kind()
            && self.t_is_increasing(&es.t)
    }

    /// The Young subgroup S_bmu inside S_r (r = number of components).
    pub fn bmu_subgroup(&self) -> Vec<Permutation> {
        let rows: Vec<usize> = self.bmu.iter().flatten().copied().collect();
        crate::symmetric_group::young_subgroup(&rows)
    }

    /// es * s_i with straightening when i, i+1 are the minima of two equal
    /// components.
    pub fn dot_si(&self, es: &LambdaTableau, i: usize) -> LambdaTableau {
        let pi = es.t.position(i);
        let pj = es.t.position(i + 1);
        if pi.comp == pj.comp {
            if pi.row == pj.row {
                return es.clone();
            }
            return LambdaTableau { t: es.t.swap_entries(i), u: es.u.clone() };
        }
        let t2 = es.t.swap_entries(i);
        let (a, b) = (pi.comp - 1, pj.comp - 1);
        if self.blam[a] == self.blam[b] && !self.t_is_increasing(&t2) {
            // swap the two components back into increasing order and move the
            // corresponding letters of u
            let t3 = t2.swap_components(a, b);
            let (x, y) = (a + 1, b + 1);
            let u = es.u.relabel(|e| if e == x { y } else if e == y { x } else { e }).sort_rows();
            return LambdaTableau { t: t3, u };
        }
        LambdaTableau { t: t2, u: es.u.clone() }
    }
}

pub fn tableau_dot_si(lam: &LambdaPair, es: &LambdaTableau, i: usize) -> LambdaTableau {
    lam.dot_si(es, i)
}

impl LambdaTableau {
    pub fn conjugate(&self) -> Result<LambdaTableau> {
        Ok(LambdaTableau { t: self.t.conjugate()?, u: self.u.conjugate()? })
    }
}

/// Componentwise dominance of Λ-tableaux.
pub fn dominance_lambda_tableau(a: &LambdaTableau, b: &LambdaTableau) -> bool {
    dominance_multitableau(&a.t, &b.t) && dominance_multitableau(&a.u, &b.u)
}

/// All r-tuples of partitions with the given sizes, as increasing
/// multipartitions, deduplicated.
fn increasing_multipartitions(alpha: &[usize]) -> Vec<MultiComp> {
    let choices: Vec<Vec<Composition>> = alpha.iter().map(|&k| partitions(k)).collect();
    let mut set = BTreeSet::new();
    for combo in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
        let blam: MultiComp = combo.into_iter().cloned().collect();
        set.insert(increasing_reordering(&blam));
    }
    if alpha.is_empty() {
        set.insert(Vec::new());
    }
    let mut v: Vec<MultiComp> = set.into_iter().collect();
    v.sort_by(|a, b| {
        a.iter().zip(b).map(|(x, y)| partition_cmp(x, y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    v
}

/// L_n(alpha).
pub fn enumerate_l(alpha: &[usize]) -> Vec<LambdaPair> {
    let mut out = Vec::new();
    for blam in increasing_multipartitions(alpha) {
        let mult: Vec<usize> = blam.iter().dedup_with_count().map(|(c, _)| c).collect();
        let opts: Vec<Vec<Composition>> = mult.iter().map(|&m| partitions(m)).collect();
        for bmu in opts.iter().map(|o| o.iter()).multi_cartesian_product() {
            out.push(LambdaPair { blam: blam.clone(), bmu: bmu.into_iter().cloned().collect() });
        }
    }
    out
}

/// Split into (at most N columns in every component, the rest).
pub fn filter_columns(l: &[LambdaPair], big_n: usize) -> (Vec<LambdaPair>, Vec<LambdaPair>) {
    l.iter().cloned().partition(|lam| lam.max_columns() <= big_n)
}

/// All partitions of n (the possible types alpha).
pub fn types(n: usize) -> Vec<Composition> {
    partitions(n)
}

/// Strict order on L_n(alpha).
pub fn lambda_lt(a: &LambdaPair, b: &LambdaPair) -> bool {
    if a == b {
        return false;
    }
    if a.blam == b.blam {
        return dominance_multicomp(&a.bmu, &b.bmu);
    }
    blam_lt1(&a.blam, &b.blam)
}

fn blam_lt1(a: &MultiComp, b: &MultiComp) -> bool {
    if a.len() != b.len() {
        return false;
    }
    (0..a.len()).permutations(a.len()).any(|sigma| {
        let re: MultiComp = sigma.iter().map(|&k| a[k].clone()).collect();
        re != *b && dominance_multicomp(&re, b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_partitions::bell;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn small_l_sets() {
        let l = enumerate_l(&[1, 1]);
        assert_eq!(l.len(), 2);
        assert!(l.contains(&LambdaPair { blam: vec![vec![1], vec![1]], bmu: vec![vec![2]] }));
        assert!(l.contains(&LambdaPair { blam: vec![vec![1], vec![1]], bmu: vec![vec![1, 1]] }));
        let l = enumerate_l(&[2]);
        assert_eq!(l.len(), 2);
        assert!(l.contains(&LambdaPair { blam: vec![vec![2]], bmu: vec![vec![1]] }));
        assert!(l.contains(&LambdaPair { blam: vec![vec![1, 1]], bmu: vec![vec![1]] }));
    }

    #[test]
    fn cellularity_counts() {
        for n in 1..=5 {
            let total: usize =
                types(n).iter().flat_map(|a| enumerate_l(a)).map(|lam| lam.std().len().pow(2)).sum();
            assert_eq!(total, bell(n) * factorial(n), "n = {n}");
        }
    }

    #[test]
    fn std_product_structure() {
        let lam = LambdaPair::new(vec![vec![1], vec![1]], vec![vec![1, 1]]).unwrap();
        assert_eq!(lam.std().len(), 1);
        for alpha in types(4) {
            for lam in enumerate_l(&alpha) {
                let ts = enumerate_std(&lam.blam).into_iter().filter(|t| lam.t_is_increasing(t)).count();
                let us = enumerate_std(&lam.bmu).into_iter().filter(|u| u.is_initial_kind()).count();
                assert_eq!(lam.std().len(), ts * us);
            }
        }
    }

    #[test]
    fn row_standard_example() {
        let lam = LambdaPair::new(
            vec![vec![1, 1], vec![2], vec![2], vec![2, 1]],
            vec![vec![1], vec![1, 1], vec![1]],
        )
        .unwrap();
        let u = MultiTableau::new(vec![vec![vec![1]], vec![vec![2], vec![3]], vec![vec![4]]]).unwrap();
        let s = LambdaTableau {
            t: MultiTableau::new(vec![vec![vec![1], vec![8]], vec![vec![5, 6]], vec![vec![3, 9]], vec![vec![2, 4], vec![7]]])
                .unwrap(),
            u: u.clone(),
        };
        let t = LambdaTableau {
            t: MultiTableau::new(vec![vec![vec![1], vec![8]], vec![vec![3, 5]], vec![vec![6, 9]], vec![vec![2, 4], vec![7]]])
                .unwrap(),
            u,
        };
        assert!(!lam.is_row_standard(&s));
        assert!(lam.is_row_standard(&t));
    }

    fn pair_222() -> LambdaPair {
        LambdaPair::new(vec![vec![2], vec![2], vec![2]], vec![vec![2, 1]]).unwrap()
    }

    fn lt(t: Vec<Vec<Vec<usize>>>, u: Vec<Vec<usize>>) -> LambdaTableau {
        LambdaTableau { t: MultiTableau::new(t).unwrap(), u: MultiTableau::from_rows(u).unwrap() }
    }

    #[test]
    fn straightening_first_example() {
        let lam = pair_222();
        let es = lt(vec![vec![vec![1, 5]], vec![vec![2, 6]], vec![vec![3, 4]]], vec![vec![1, 2], vec![3]]);
        let got = lam.dot_si(&es, 1);
        assert_eq!(got, lt(vec![vec![vec![1, 6]], vec![vec![2, 5]], vec![vec![3, 4]]], vec![vec![1, 2], vec![3]]));
    }

    #[test]
    fn straightening_second_example() {
        // the blam part is as printed; the u part follows from moving letters 2,3
        // of u (see also the algebra-level check in the module tests)
        let lam = pair_222();
        let es = lt(vec![vec![vec![1, 5]], vec![vec![2, 6]], vec![vec![3, 4]]], vec![vec![1, 3], vec![2]]);
        let got = lam.dot_si(&es, 2);
        assert_eq!(got.t, MultiTableau::new(vec![vec![vec![1, 5]], vec![vec![2, 4]], vec![vec![3, 6]]]).unwrap());
        assert_eq!(got.u, MultiTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap());
    }

    #[test]
    fn dot_action_is_a_group_action() {
        for n in 1..=4 {
            for alpha in types(n) {
                for lam in enumerate_l(&alpha) {
                    let rs: BTreeSet<_> = lam.rstd().into_iter().collect();
                    for es in &rs {
                        for i in 1..n {
                            let a = lam.dot_si(es, i);
                            assert!(rs.contains(&a), "{a:?} left RStd");
                            assert_eq!(&lam.dot_si(&a, i), es);
                            if i + 1 < n {
                                let l = lam.dot_si(&lam.dot_si(&a, i + 1), i);
                                let r = lam.dot_si(&lam.dot_si(&lam.dot_si(es, i + 1), i), i + 1);
                                assert_eq!(l, r);
                            }
                            for j in i + 2..n {
                                assert_eq!(lam.dot_si(&lam.dot_si(es, i), j), lam.dot_si(&lam.dot_si(es, j), i));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn increasing_reordering_is_unique() {
        let blam = vec![vec![2], vec![1, 1], vec![2], vec![1]];
        let inc = increasing_reordering(&blam);
        assert!(is_increasing(&inc));
        for p in (0..4).permutations(4) {
            let re: MultiComp = p.iter().map(|&k| blam[k].clone()).collect();
            if is_increasing(&re) {
                assert_eq!(re, inc);
            }
        }
    }

    #[test]
    fn total_order_extends_dominance() {
        for n in 1..=6 {
            for a in partitions(n) {
                for b in partitions(n) {
                    if a != b && super::super::dominates_comp(&a, &b) {
                        assert_eq!(partition_cmp(&a, &b), std::cmp::Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_poset() {
        for n in 1..=4 {
            for alpha in types(n) {
                let l = enumerate_l(&alpha);
                for a in &l {
                    assert!(!lambda_lt(a, a));
                    assert_eq!(&a.conjugate().unwrap().conjugate().unwrap(), a);
                    for b in &l {
                        if lambda_lt(a, b) {
                            assert!(!lambda_lt(b, a));
                        }
                        for c in &l {
                            if lambda_lt(a, b) && lambda_lt(b, c) {
                                assert!(lambda_lt(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn column_filter() {
        let l = enumerate_l(&[3]);
        let (inside, outside) = filter_columns(&l, 2);
        assert_eq!(outside, vec![LambdaPair { blam: vec![vec![3]], bmu: vec![vec![1]] }]);
        assert_eq!(inside.len(), 2);
    }
}
