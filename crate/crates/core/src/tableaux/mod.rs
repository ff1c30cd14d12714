//! Compositions, multitableaux, dominance and conjugation.

mod lambda;

pub use lambda::*;

use std::cmp::Ordering;

use itertools::Itertools;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{BtError, Result};
use crate::symmetric_group::Permutation;

/// Row lengths. Zero parts only appear in restricted shapes.
pub type Composition = Vec<usize>;
/// Ordered list of compositions; components may be empty.
pub type MultiComp = Vec<Composition>;

pub fn size(c: &[usize]) -> usize {
    c.iter().sum()
}

pub fn multi_size(c: &MultiComp) -> usize {
    c.iter().map(|x| size(x)).sum()
}

pub fn is_partition(c: &[usize]) -> bool {
    c.windows(2).all(|w| w[0] >= w[1]) && c.iter().all(|&x| x > 0)
}

/// All partitions of n, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate_partition(p: &[usize]) -> Result<Composition> {
    if !p.is_empty() && !is_partition(p) {
        return Err(BtError::InvalidShape(format!("{p:?} is not a partition")));
    }
    let cols = p.first().copied().unwrap_or(0);
    Ok((0..cols).map(|c| p.iter().filter(|&&r| r > c).count()).collect())
}

pub fn conjugate_multipartition(m: &MultiComp) -> Result<MultiComp> {
    m.iter().map(|p| conjugate_partition(p)).collect()
}

fn partial_sums(c: &[usize], len: usize) -> Vec<usize> {
    let mut acc = 0;
    (0..len)
        .map(|i| {
            acc += c.get(i).copied().unwrap_or(0);
            acc
        })
        .collect()
}

/// a ⊴ b: every partial sum of a is at most the matching partial sum of b.
/// Sizes may differ.
pub fn dominates_comp(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    partial_sums(a, len).iter().zip(partial_sums(b, len)).all(|(x, y)| *x <= y)
}

/// Componentwise dominance of multicompositions with equally many components.
pub fn dominance_multicomp(a: &MultiComp, b: &MultiComp) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| dominates_comp(x, y))
}

/// The fixed total order on partitions used for "increasing": lexicographic
/// order of the partial-sum sequences. It extends dominance (also across
/// different sizes), and is a genuine linear order.
pub fn partition_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let len = a.len().max(b.len());
    partial_sums(a, len).cmp(&partial_sums(b, len))
}

/// A multitableau: components, each a list of rows of entries from 1..n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiTableau {
    comps: Vec<Vec<Vec<usize>>>,
}

/// Where an entry sits: component, row and column, all 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Position {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl MultiTableau {
    pub fn new(comps: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let t = MultiTableau { comps };
        let n = t.n();
        let mut seen = vec![false; n];
        for &x in t.reading().iter() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BtError::InvalidTableau(format!("{:?} is not a bijection onto 1..{n}", t.comps)));
            }
            seen[x - 1] = true;
        }
        if t.comps.iter().flatten().any(|row| row.is_empty()) {
            return Err(BtError::InvalidTableau("empty row".into()));
        }
        Ok(t)
    }

    /// Single-component convenience constructor.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(vec![rows])
    }

    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.comps
    }

    pub fn n(&self) -> usize {
        self.comps.iter().flatten().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> MultiComp {
        self.comps.iter().map(|c| c.iter().map(|r| r.len()).collect()).collect()
    }

    /// Entries read along rows, components in order.
    pub fn reading(&self) -> Vec<usize> {
        self.comps.iter().flatten().flatten().copied().collect()
    }

    /// All rows of all components, concatenated.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.comps.iter().flatten().cloned().collect()
    }

    /// d(t): t = t^shape d(t). Its one-line notation is the row reading.
    pub fn d(&self) -> Permutation {
        Permutation::from_one_line(&self.reading()).expect("tableau is a bijection")
    }

    /// t^shape * w.
    pub fn from_perm(shape: &MultiComp, w: &Permutation) -> Result<Self> {
        let n = multi_size(shape);
        if n != w.n() {
            return Err(BtError::SizeMismatch(n, w.n()));
        }
        let mut j = 0;
        let comps = shape
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&len| {
                        let row = (j..j + len).map(|k| w.apply(k + 1)).collect();
                        j += len;
                        row
                    })
                    .collect()
            })
            .collect();
        Ok(MultiTableau { comps })
    }

    /// t^shape: entries 1..n along rows.
    pub fn initial(shape: &MultiComp) -> Self {
        Self::from_perm(shape, &Permutation::identity(multi_size(shape))).expect("sizes agree")
    }

    /// t_shape: entries 1..n down the columns, component by component.
    pub fn column_reading(shape: &MultiComp) -> Self {
        let mut next = 1;
        let comps = shape
            .iter()
            .map(|c| {
                let mut rows: Vec<Vec<usize>> = c.iter().map(|&l| vec![0; l]).collect();
                let cols = c.iter().copied().max().unwrap_or(0);
                for col in 0..cols {
                    for row in rows.iter_mut() {
                        if row.len() > col {
                            row[col] = next;
                            next += 1;
                        }
                    }
                }
                rows
            })
            .collect();
        MultiTableau { comps }
    }

    pub fn sort_rows(&self) -> Self {
        let mut t = self.clone();
        t.comps.iter_mut().flatten().for_each(|r| r.sort_unstable());
        t
    }

    /// Sort the entries of each component as a whole and refill along rows.
    pub fn sort_within_components(&self) -> Self {
        let comps = self
            .comps
            .iter()
            .map(|c| {
                let mut es: Vec<usize> = c.iter().flatten().copied().collect();
                es.sort_unstable();
                let mut it = es.into_iter();
                c.iter().map(|r| it.by_ref().take(r.len()).collect()).collect()
            })
            .collect();
        MultiTableau { comps }
    }

    pub fn is_row_standard(&self) -> bool {
        self.comps.iter().flatten().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard()
            && self.comps.iter().all(|c| {
                c.windows(2).all(|w| w[1].iter().enumerate().all(|(k, x)| w[0].get(k).map_or(false, |y| y < x)))
            })
    }

    /// Positions of 1..n, indexed by entry - 1.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = vec![Position { comp: 0, row: 0, col: 0 }; self.n()];
        for (p, c) in self.comps.iter().enumerate() {
            for (x, r) in c.iter().enumerate() {
                for (y, &e) in r.iter().enumerate() {
                    out[e - 1] = Position { comp: p + 1, row: x + 1, col: y + 1 };
                }
            }
        }
        out
    }

    pub fn position(&self, j: usize) -> Position {
        self.positions()[j - 1]
    }

    /// Component k holds exactly the k-th consecutive interval.
    pub fn is_initial_kind(&self) -> bool {
        let mut next = 1;
        for c in &self.comps {
            let mut es: Vec<usize> = c.iter().flatten().copied().collect();
            es.sort_unstable();
            for e in es {
                if e != next {
                    return false;
                }
                next += 1;
            }
        }
        true
    }

    /// ||t||: each component read along its rows becomes one row.
    pub fn norm(&self) -> MultiTableau {
        let rows = self.comps.iter().map(|c| c.iter().flatten().copied().collect::<Vec<_>>()).filter(|r: &Vec<usize>| !r.is_empty());
        MultiTableau { comps: vec![rows.collect()] }
    }

    pub fn conjugate(&self) -> Result<Self> {
        let mut comps = Vec::with_capacity(self.comps.len());
        for c in &self.comps {
            let shape: Vec<usize> = c.iter().map(|r| r.len()).collect();
            let conj = conjugate_partition(&shape)?;
            comps.push(conj.iter().enumerate().map(|(col, &len)| (0..len).map(|row| c[row][col]).collect()).collect());
        }
        Ok(MultiTableau { comps })
    }

    /// Shape of the entries <= m (rows keep their index, possibly with length 0).
    pub fn restricted_shape(&self, m: usize) -> MultiComp {
        self.comps.iter().map(|c| c.iter().map(|r| r.iter().filter(|&&e| e <= m).count()).collect()).collect()
    }

    pub fn min_of_component(&self, p: usize) -> Option<usize> {
        self.comps[p].iter().flatten().copied().min()
    }

    /// Entries i and i+1 exchanged.
    pub fn swap_entries(&self, i: usize) -> Self {
        self.relabel(|e| if e == i { i + 1 } else if e == i + 1 { i } else { e })
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        MultiTableau { comps: self.comps.iter().map(|c| c.iter().map(|r| r.iter().map(|&e| f(e)).collect()).collect()).collect() }
    }

    pub fn swap_components(&self, a: usize, b: usize) -> Self {
        let mut t = self.clone();
        t.comps.swap(a, b);
        t
    }
}

/// Multitableau dominance: Shape(s|<=m) ⊴ Shape(t|<=m) for every m.
pub fn dominance_multitableau(s: &MultiTableau, t: &MultiTableau) -> bool {
    s.n() == t.n() && (1..=s.n()).all(|m| dominance_multicomp(&s.restricted_shape(m), &t.restricted_shape(m)))
}

/// s ⊴ t after some reordering of the components of s that only exchanges
/// components holding equally many entries.
pub fn dominance_up_to_reordering(s: &MultiTableau, t: &MultiTableau) -> bool {
    let k = s.comps.len();
    let sizes: Vec<usize> = s.comps.iter().map(|c| c.iter().map(Vec::len).sum()).collect();
    (0..k).permutations(k).any(|p| {
        p.iter().enumerate().all(|(i, &j)| sizes[i] == sizes[j])
            && dominance_multitableau(&MultiTableau { comps: p.iter().map(|&j| s.comps[j].clone()).collect() }, t)
    })
}

/// Every row standard multitableau of the given shape, in lexicographic
/// order of d(t).
pub fn enumerate_rstd(shape: &MultiComp) -> Vec<MultiTableau> {
    // d(t) for row standard t are the distinguished right coset
    // representatives; choose row contents directly.
    let rows: Vec<usize> = shape.iter().flatten().copied().collect();
    let n = size(&rows);
    let mut out = Vec::new();
    let mut assign = vec![Vec::new(); rows.len()];
    fn rec(j: usize, n: usize, rows: &[usize], assign: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if j > n {
            out.push(assign.clone());
            return;
        }
        for r in 0..rows.len() {
            if assign[r].len() < rows[r] {
                assign[r].push(j);
                rec(j + 1, n, rows, assign, out);
                assign[r].pop();
            }
        }
    }
    rec(1, n, &rows, &mut assign, &mut out);
    let mut res: Vec<MultiTableau> = out
        .into_iter()
        .map(|flat| {
            let mut it = flat.into_iter();
            MultiTableau { comps: shape.iter().map(|c| it.by_ref().take(c.len()).collect()).collect() }
        })
        .collect();
    res.sort_by_key(|t| t.reading());
    res
}

pub fn enumerate_std(shape: &MultiComp) -> Vec<MultiTableau> {
    enumerate_rstd(shape).into_iter().filter(|t| t.is_standard()).collect()
}

/// Distinct values of `enumerate_rstd` reached as t^shape * w, as a set; used
/// in tests as an independent oracle.
pub fn rstd_by_filtering(shape: &MultiComp) -> BTreeSet<MultiTableau> {
    let n = multi_size(shape);
    Permutation::all(n)
        .iter()
        .map(|w| MultiTableau::from_perm(shape, w).expect("sizes agree"))
        .filter(|t| t.is_row_standard())
        .collect()
}
