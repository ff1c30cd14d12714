//! Sparse reduced row echelon form over a coefficient ring.
//!
//! Pivots must be units of the ring. Over a field that is no restriction;
//! over S it allows exact solves for the unitriangular systems that occur
//! when expanding in cellular bases, and reports `None` otherwise.

use std::collections::BTreeMap;

use crate::coeff::Ring;

pub type SparseRow<E> = BTreeMap<u64, E>;

#[derive(Clone, Debug)]
struct PivotRow<E> {
    row: SparseRow<E>,
    // coefficients over inserted vectors giving `row`
    comb: BTreeMap<usize, E>,
}

/// Reduced echelon basis of the span of the vectors inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon<R: Ring> {
    ring: R,
    pivots: BTreeMap<u64, PivotRow<R::Elem>>,
    track: bool,
    inserted: usize,
}

/// Outcome of inserting a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    Independent,
    Dependent,
    /// Nonzero residue with no unit entry (only possible over S).
    NoUnitPivot,
}

impl<R: Ring> Echelon<R> {
    pub fn new(ring: R) -> Self {
        Echelon { ring, pivots: BTreeMap::new(), track: false, inserted: 0 }
    }

    /// Also record how each pivot row combines the inserted vectors.
    pub fn tracking(ring: R) -> Self {
        Echelon { track: true, ..Echelon::new(ring) }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    fn axpy(&self, dst: &mut SparseRow<R::Elem>, c: &R::Elem, src: &SparseRow<R::Elem>) {
        axpy_map(&self.ring, dst, c, src);
    }

    fn reduce_with(&self, v: &mut SparseRow<R::Elem>, comb: &mut BTreeMap<usize, R::Elem>) {
        let hits: Vec<u64> = v.keys().filter(|k| self.pivots.contains_key(k)).copied().collect();
        for p in hits {
            // rows are fully reduced, so earlier subtractions never create pivot entries
            let Some(c) = v.get(&p).cloned() else { continue };
            let pr = &self.pivots[&p];
            let neg = self.ring.neg(&c);
            self.axpy(v, &neg, &pr.row);
            if self.track {
                axpy_usize(&self.ring, comb, &neg, &pr.comb);
            }
        }
    }

    /// Remainder of v modulo the span.
    pub fn reduce(&self, v: &SparseRow<R::Elem>) -> SparseRow<R::Elem> {
        let mut v = v.clone();
        let mut comb = BTreeMap::new();
        self.reduce_with(&mut v, &mut comb);
        v
    }

    pub fn contains(&self, v: &SparseRow<R::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert(&mut self, v: SparseRow<R::Elem>) -> Insert {
        let idx = self.inserted;
        self.inserted += 1;
        let mut v = v;
        let mut comb = BTreeMap::new();
        if self.track {
            comb.insert(idx, self.ring.one());
        }
        self.reduce_with(&mut v, &mut comb);
        if v.is_empty() {
            return Insert::Dependent;
        }
        let Some((p, inv)) = v.iter().find_map(|(k, c)| self.ring.unit_inv(c).map(|i| (*k, i))) else {
            return Insert::NoUnitPivot;
        };
        let row: SparseRow<R::Elem> = v.iter().map(|(k, c)| (*k, self.ring.mul(c, &inv))).filter(|(_, c)| !self.ring.is_zero(c)).collect();
        let comb: BTreeMap<usize, R::Elem> = comb.iter().map(|(k, c)| (*k, self.ring.mul(c, &inv))).collect();
        // clear column p from existing rows
        let ring = self.ring.clone();
        let track = self.track;
        for pr in self.pivots.values_mut() {
            if let Some(c) = pr.row.get(&p).cloned() {
                let neg = ring.neg(&c);
                axpy_map(&ring, &mut pr.row, &neg, &row);
                if track {
                    axpy_usize(&ring, &mut pr.comb, &neg, &comb);
                }
            }
        }
        self.pivots.insert(p, PivotRow { row, comb });
        Insert::Independent
    }

    /// Coefficients c_j with v = Σ c_j (j-th inserted vector), if v lies in
    /// the span. Requires `tracking`.
    pub fn express(&self, v: &SparseRow<R::Elem>) -> Option<BTreeMap<usize, R::Elem>> {
        assert!(self.track, "express needs a tracking echelon");
        let mut out = BTreeMap::new();
        let mut rest = v.clone();
        let hits: Vec<u64> = rest.keys().filter(|k| self.pivots.contains_key(k)).copied().collect();
        for p in hits {
            let Some(c) = rest.get(&p).cloned() else { continue };
            let pr = &self.pivots[&p];
            axpy_map(&self.ring, &mut rest, &self.ring.neg(&c), &pr.row);
            axpy_usize(&self.ring, &mut out, &c, &pr.comb);
        }
        rest.is_empty().then_some(out)
    }
}

fn axpy_map<R: Ring>(ring: &R, dst: &mut SparseRow<R::Elem>, c: &R::Elem, src: &SparseRow<R::Elem>) {
    for (k, x) in src {
        add_into(ring, dst, *k, ring.mul(c, x));
    }
}

fn axpy_usize<R: Ring>(ring: &R, dst: &mut BTreeMap<usize, R::Elem>, c: &R::Elem, src: &BTreeMap<usize, R::Elem>) {
    for (k, x) in src {
        add_into(ring, dst, *k, ring.mul(c, x));
    }
}

pub(crate) fn add_into<K: Ord, R: Ring>(ring: &R, dst: &mut BTreeMap<K, R::Elem>, k: K, x: R::Elem) {
    if ring.is_zero(&x) {
        return;
    }
    match dst.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = ring.add(e.get(), &x);
            if ring.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<R: Ring>(ring: &R, rows: impl IntoIterator<Item = SparseRow<R::Elem>>) -> usize {
    let mut e = Echelon::new(ring.clone());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
