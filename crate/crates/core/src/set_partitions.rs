//! The lattice SP_n. Order convention: `a ⊆ b` means b is coarser than a
//! (each block of b is a union of blocks of a).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BtError, Result};
use crate::symmetric_group::Permutation;
use crate::tableaux::MultiComp;

/// Blocks sorted by minimum, entries ascending, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Weakly decreasing block sizes.
pub type PartitionType = Vec<usize>;

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(BtError::InvalidSetPartition { n, blocks });
            }
            for &x in b {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(BtError::InvalidSetPartition { n, blocks });
                }
                seen[x - 1] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(BtError::InvalidSetPartition { n, blocks });
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    /// From a labelling of 1..n: equal labels share a block.
    pub fn from_labels<T: Eq + Clone>(labels: &[T]) -> Self {
        let mut keys: Vec<T> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (j, l) in labels.iter().enumerate() {
            match keys.iter().position(|k| k == l) {
                Some(p) => blocks[p].push(j + 1),
                None => {
                    keys.push(l.clone());
                    blocks.push(vec![j + 1]);
                }
            }
        }
        Self::canonical(labels.len(), blocks)
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    pub fn one_block(n: usize) -> Self {
        SetPartition { n, blocks: if n == 0 { vec![] } else { vec![(1..=n).collect()] } }
    }

    /// P_i: the only non-singleton block is {i, i+1}.
    pub fn pair(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || j > n || i >= j {
            return Err(BtError::IndexOutOfRange { index: j, n });
        }
        let mut blocks: Vec<Vec<usize>> = (1..=n).filter(|&k| k != i && k != j).map(|k| vec![k]).collect();
        blocks.push(vec![i, j]);
        Ok(Self::canonical(n, blocks))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each point (0-based points).
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                lab[x - 1] = k;
            }
        }
        lab
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        let lab = self.labels();
        lab[i - 1] == lab[j - 1]
    }

    /// self ⊆ other: other is coarser.
    pub fn is_finer(&self, other: &SetPartition) -> bool {
        let lab = other.labels();
        self.n == other.n && self.blocks.iter().all(|b| b.iter().all(|&x| lab[x - 1] == lab[b[0] - 1]))
    }

    pub fn type_of(&self) -> PartitionType {
        let mut t: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// A w: each block mapped pointwise.
    pub fn act(&self, w: &Permutation) -> SetPartition {
        assert_eq!(self.n, w.n(), "size mismatch");
        Self::canonical(self.n, self.blocks.iter().map(|b| b.iter().map(|&x| w.apply(x)).collect()).collect())
    }

    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n != other.n {
            return Err(BtError::SizeMismatch(self.n, other.n));
        }
        // union-find over points
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let nx = p[c];
                p[c] = r;
                c = nx;
            }
            r
        }
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                let (a, c) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                parent[a] = c;
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|x| find(&mut parent, x)).collect();
        Ok(Self::from_labels(&labels))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        SetPartition::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

pub fn join(a: &SetPartition, b: &SetPartition) -> Result<SetPartition> {
    a.join(b)
}

pub fn act(a: &SetPartition, w: &Permutation) -> SetPartition {
    a.act(w)
}

pub fn type_of(a: &SetPartition) -> PartitionType {
    a.type_of()
}

/// All of SP_n via restricted growth strings, deterministic order.
pub fn enumerate(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(j: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if j == rgs.len() {
            out.push(SetPartition::from_labels(rgs));
            return;
        }
        for v in 0..=max {
            rgs[j] = v;
            rec(j + 1, max.max(v + 1), rgs, out);
        }
    }
    if n == 0 {
        return vec![SetPartition::singletons(0)];
    }
    rec(1, 1, &mut rgs, &mut out);
    out
}

pub fn enumerate_of_type(alpha: &[usize]) -> Vec<SetPartition> {
    let n = alpha.iter().sum();
    enumerate(n).into_iter().filter(|a| a.type_of() == alpha).collect()
}

pub fn bell(n: usize) -> usize {
    enumerate(n).len()
}

/// μ(a, b) by the product formula over the blocks of b.
pub fn moebius(a: &SetPartition, b: &SetPartition) -> Result<i64> {
    if !a.is_finer(b) {
        return Err(BtError::NotFiner(a.to_string(), b.to_string()));
    }
    let lab = b.labels();
    let mut counts = vec![0i64; b.len()];
    for blk in a.blocks() {
        counts[lab[blk[0] - 1]] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|k| {
            let fact: i64 = (1..k).product();
            if (k - 1) % 2 == 0 {
                fact
            } else {
                -fact
            }
        })
        .product())
}

/// μ(a, b) from the defining recursion. Slow; test oracle.
pub fn moebius_recursive(a: &SetPartition, b: &SetPartition) -> Option<i64> {
    if !a.is_finer(b) {
        return None;
    }
    if a == b {
        return Some(1);
    }
    let all = enumerate(a.n());
    let mut s = 0;
    for c in &all {
        if a.is_finer(c) && c.is_finer(b) && c != b {
            s += moebius_recursive(a, c).expect("interval");
        }
    }
    Some(-s)
}

/// A_blam: consecutive intervals of the component sizes; empty components
/// contribute nothing.
pub fn partition_from_multicomp(blam: &MultiComp) -> SetPartition {
    let sizes: Vec<usize> = blam.iter().map(|c| c.iter().sum()).filter(|&s| s > 0).collect();
    partition_from_sizes(&sizes)
}

pub fn partition_from_sizes(sizes: &[usize]) -> SetPartition {
    let labels: Vec<usize> = sizes.iter().enumerate().flat_map(|(k, &s)| std::iter::repeat(k).take(s)).collect();
    SetPartition::from_labels(&labels)
}

/// A_s: the fibres of a sequence.
pub fn partition_from_seq(s: &[usize]) -> SetPartition {
    SetPartition::from_labels(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, b: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, b.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn join_examples() {
        let a = sp(3, &[&[1, 2], &[3]]);
        let b = sp(3, &[&[1], &[2, 3]]);
        assert_eq!(a.join(&b).unwrap(), SetPartition::one_block(3));
        assert_eq!(a.join(&a).unwrap(), a);
    }

    #[test]
    fn join_is_least_upper_bound() {
        let all = enumerate(4);
        for a in &all {
            for b in &all {
                let j = a.join(b).unwrap();
                assert!(a.is_finer(&j) && b.is_finer(&j));
                for c in &all {
                    if a.is_finer(c) && b.is_finer(c) {
                        assert!(j.is_finer(c));
                    }
                    assert_eq!(a.join(&b.join(c).unwrap()).unwrap(), a.join(b).unwrap().join(c).unwrap());
                }
                assert_eq!(j, b.join(a).unwrap());
            }
            assert!(a.is_finer(a));
        }
    }

    #[test]
    fn action() {
        let a = sp(3, &[&[1, 2], &[3]]);
        assert_eq!(a.act(&Permutation::identity(3)), a);
        assert_eq!(a.act(&Permutation::simple(2, 3).unwrap()), sp(3, &[&[1, 3], &[2]]));
        let perms = Permutation::all(4);
        for a in enumerate(4) {
            for u in perms.iter().step_by(5) {
                for v in perms.iter().step_by(7) {
                    assert_eq!(a.act(u).act(v), a.act(&u.then(v)));
                }
                assert_eq!(a.act(u).type_of(), a.type_of());
            }
        }
    }

    #[test]
    fn types_and_sequences() {
        let s = [1, 2, 2, 1, 2, 2, 2, 1, 2, 4, 1, 2, 2];
        assert_eq!(partition_from_seq(&s).type_of(), vec![8, 4, 1]);
        assert_eq!(SetPartition::singletons(4).type_of(), vec![1, 1, 1, 1]);
        assert_eq!(SetPartition::one_block(4).type_of(), vec![4]);
        assert_eq!(partition_from_seq(&[3, 3, 3]), SetPartition::one_block(3));
        assert_eq!(partition_from_seq(&[2, 3, 1]), SetPartition::singletons(3));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(3).len(), 5);
        assert_eq!(enumerate(4).len(), 15);
        assert_eq!(enumerate(5).len(), 52);
        assert_eq!(enumerate_of_type(&[2, 1, 1]).len(), 6);
        let all = enumerate(5);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn moebius_values() {
        let a = SetPartition::singletons(3);
        assert_eq!(moebius(&a, &a).unwrap(), 1);
        assert_eq!(moebius(&a, &SetPartition::one_block(3)).unwrap(), 2);
        assert!(moebius(&SetPartition::one_block(3), &a).is_err());
        let all = enumerate(4);
        for a in &all {
            for b in &all {
                if a.is_finer(b) {
                    assert_eq!(Some(moebius(a, b).unwrap()), moebius_recursive(a, b));
                    if a != b {
                        let s: i64 = all.iter().filter(|c| a.is_finer(c) && c.is_finer(b)).map(|c| moebius(a, c).unwrap()).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_from_multicompositions() {
        assert_eq!(partition_from_multicomp(&vec![vec![2], vec![1]]), sp(3, &[&[1, 2], &[3]]));
        assert_eq!(partition_from_multicomp(&vec![vec![2], vec![], vec![1]]), sp(3, &[&[1, 2], &[3]]));
        let blam = vec![
            vec![1, 1],
            vec![1, 1],
            vec![1, 1],
            vec![2],
            vec![2],
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![2, 1],
        ];
        let a = partition_from_multicomp(&blam);
        let expect: Vec<Vec<usize>> = vec![
            vec![1, 2],
            vec![3, 4],
            vec![5, 6],
            vec![7, 8],
            vec![9, 10],
            vec![11, 12, 13],
            vec![14, 15, 16],
            vec![17, 18, 19],
            vec![20, 21, 22],
        ];
        assert_eq!(a.blocks(), expect.as_slice());
    }
}
