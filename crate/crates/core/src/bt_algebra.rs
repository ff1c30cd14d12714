//! E_n(q) in normal form: linear combinations of E_A g_w.
//!
//! Basis keys are packed indices into precomputed tables (set partitions,
//! permutations, joins, actions), so the rewriting rules
//!
//!   (E_A g_w) e_i = E_{A ∨ P_i w^-1} g_w
//!   (E_A g_w) g_i = E_A g_{w s_i}                                  if l(w s_i) > l(w)
//!                 = E_A g_{w s_i} + (q - q^-1) E_{A ∨ P_i (w s_i)^-1} g_w   otherwise
//!
//! become table lookups.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coeff::{LaurentPoly, LaurentRing, Ring};
use crate::error::{BtError, Result};
use crate::set_partitions::{self, SetPartition};
use crate::symmetric_group::Permutation;

/// Shared lookup tables for a fixed n.
#[derive(Debug)]
pub struct Tables {
    pub n: usize,
    perms: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    len: Vec<u32>,
    inv: Vec<u32>,
    // (w, i-1) -> w s_i
    times_s: Vec<u32>,
    parts: Vec<SetPartition>,
    part_index: HashMap<SetPartition, u32>,
    join: Vec<u32>,
    act: Vec<u32>,
    pair: Vec<u32>,
    finer: Vec<bool>,
    moebius: Vec<i64>,
}

impl Tables {
    fn build(n: usize) -> Tables {
        let perms = Permutation::all(n);
        let np = perms.len();
        let words: Vec<Vec<usize>> = perms.iter().map(|w| w.reduced_word()).collect();
        let len = perms.iter().map(|w| w.length() as u32).collect();
        let inv = perms.iter().map(|w| w.inverse().rank() as u32).collect();
        let mut times_s = vec![0u32; np * n.saturating_sub(1)];
        for (k, w) in perms.iter().enumerate() {
            for i in 1..n {
                times_s[k * (n - 1) + i - 1] = w.times_simple(i).rank() as u32;
            }
        }
        let parts = set_partitions::enumerate(n);
        let nb = parts.len();
        let part_index: HashMap<SetPartition, u32> = parts.iter().enumerate().map(|(k, a)| (a.clone(), k as u32)).collect();
        let mut join = vec![0u32; nb * nb];
        let mut finer = vec![false; nb * nb];
        let mut moebius = vec![0i64; nb * nb];
        for (a, pa) in parts.iter().enumerate() {
            for (b, pb) in parts.iter().enumerate() {
                join[a * nb + b] = part_index[&pa.join(pb).expect("same n")];
                finer[a * nb + b] = pa.is_finer(pb);
                if finer[a * nb + b] {
                    moebius[a * nb + b] = set_partitions::moebius(pa, pb).expect("finer");
                }
            }
        }
        let mut act = vec![0u32; nb * np];
        for (a, pa) in parts.iter().enumerate() {
            for (w, pw) in perms.iter().enumerate() {
                act[a * np + w] = part_index[&pa.act(pw)];
            }
        }
        let pair = (1..n).map(|i| part_index[&SetPartition::pair(i, i + 1, n).expect("valid")]).collect();
        Tables { n, perms, words, len, inv, times_s, parts, part_index, join, act, pair, finer, moebius }
    }

    /// Tables for n, built once per process.
    pub fn shared(n: usize) -> Arc<Tables> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().expect("table cache poisoned");
        guard.entry(n).or_insert_with(|| Arc::new(Tables::build(n))).clone()
    }

    pub fn num_perms(&self) -> usize {
        self.perms.len()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn dim(&self) -> usize {
        self.num_perms() * self.num_parts()
    }

    pub fn perm(&self, w: usize) -> &Permutation {
        &self.perms[w]
    }

    pub fn perm_index(&self, w: &Permutation) -> usize {
        w.rank()
    }

    pub fn part(&self, a: usize) -> &SetPartition {
        &self.parts[a]
    }

    pub fn part_index(&self, a: &SetPartition) -> usize {
        self.part_index[a] as usize
    }

    pub fn parts(&self) -> &[SetPartition] {
        &self.parts
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.len[w] as usize
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.num_parts() + b] as usize
    }

    pub fn act(&self, a: usize, w: usize) -> usize {
        self.act[a * self.num_perms() + w] as usize
    }

    pub fn is_finer(&self, a: usize, b: usize) -> bool {
        self.finer[a * self.num_parts() + b]
    }

    pub fn moebius(&self, a: usize, b: usize) -> i64 {
        self.moebius[a * self.num_parts() + b]
    }

    pub fn times_simple(&self, w: usize, i: usize) -> usize {
        self.times_s[w * (self.n - 1) + i - 1] as usize
    }

    pub fn pair(&self, i: usize) -> usize {
        self.pair[i - 1] as usize
    }

    pub fn key(&self, a: usize, w: usize) -> Key {
        (a * self.num_perms() + w) as Key
    }

    pub fn split(&self, k: Key) -> (usize, usize) {
        let k = k as usize;
        (k / self.num_perms(), k % self.num_perms())
    }
}

/// Packed (partition index, permutation index).
pub type Key = u32;

/// Σ c_{A,w} E_A g_w with no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<E> {
    pub n: usize,
    terms: BTreeMap<Key, E>,
}

impl<E> Element<E> {
    pub fn terms(&self) -> impl Iterator<Item = (Key, &E)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: Key) -> Option<&E> {
        self.terms.get(&k)
    }
}

/// E_n(q) over a coefficient ring `R` (S itself, or a specialization).
#[derive(Clone)]
pub struct BtAlgebra<R: Ring> {
    t: Arc<Tables>,
    ring: R,
    qmq: R::Elem,
}

/// The generic algebra over S.
pub type SAlgebra = BtAlgebra<LaurentRing>;

impl SAlgebra {
    pub fn generic(n: usize) -> Self {
        BtAlgebra::new(n, LaurentRing)
    }
}

impl<R: Ring> BtAlgebra<R> {
    pub fn new(n: usize, ring: R) -> Self {
        assert!(n >= 1, "n must be positive");
        let qmq = ring.q_minus_qinv();
        BtAlgebra { t: Tables::shared(n), ring, qmq }
    }

    pub fn n(&self) -> usize {
        self.t.n
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn tables(&self) -> &Tables {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn zero(&self) -> Element<R::Elem> {
        Element { n: self.n(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Element<R::Elem> {
        self.basis_element(self.t.part_index(&SetPartition::singletons(self.n())), 0)
    }

    /// E_A g_w for table indices.
    pub fn basis_element(&self, a: usize, w: usize) -> Element<R::Elem> {
        self.monomial(a, w, self.ring.one())
    }

    pub fn monomial(&self, a: usize, w: usize, c: R::Elem) -> Element<R::Elem> {
        let mut x = self.zero();
        self.add_term(&mut x.terms, self.t.key(a, w), c);
        x
    }

    /// E_A g_w from explicit data.
    pub fn term(&self, a: &SetPartition, w: &Permutation, c: R::Elem) -> Result<Element<R::Elem>> {
        self.check_n(a.n())?;
        self.check_n(w.n())?;
        Ok(self.monomial(self.t.part_index(a), w.rank(), c))
    }

    fn check_n(&self, m: usize) -> Result<()> {
        if m != self.n() {
            return Err(BtError::SizeMismatch(self.n(), m));
        }
        Ok(())
    }

    fn add_term(&self, terms: &mut BTreeMap<Key, R::Elem>, k: Key, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Coefficient of E_A g_w.
    pub fn coeff(&self, x: &Element<R::Elem>, a: usize, w: usize) -> R::Elem {
        x.terms.get(&self.t.key(a, w)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, x: &Element<R::Elem>, y: &Element<R::Elem>) -> Element<R::Elem> {
        let mut out = x.clone();
        self.add_assign(&mut out, y);
        out
    }

    pub fn add_assign(&self, x: &mut Element<R::Elem>, y: &Element<R::Elem>) {
        for (k, c) in &y.terms {
            self.add_term(&mut x.terms, *k, c.clone());
        }
    }

    pub fn sub(&self, x: &Element<R::Elem>, y: &Element<R::Elem>) -> Element<R::Elem> {
        self.add(x, &self.scale(y, &self.ring.from_i64(-1)))
    }

    pub fn scale(&self, x: &Element<R::Elem>, c: &R::Elem) -> Element<R::Elem> {
        let mut out = self.zero();
        for (k, d) in &x.terms {
            self.add_term(&mut out.terms, *k, self.ring.mul(d, c));
        }
        out
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a Element<R::Elem>>) -> Element<R::Elem>
    where
        R::Elem: 'a,
    {
        let mut out = self.zero();
        for x in xs {
            self.add_assign(&mut out, x);
        }
        out
    }

    /// x * e_i
    pub fn mul_e(&self, x: &Element<R::Elem>, i: usize) -> Element<R::Elem> {
        let p = self.t.pair(i);
        let mut out = self.zero();
        for (k, c) in &x.terms {
            let (a, w) = self.t.split(*k);
            let b = self.t.join(a, self.t.act(p, self.t.inverse(w)));
            self.add_term(&mut out.terms, self.t.key(b, w), c.clone());
        }
        out
    }

    /// x * g_i
    pub fn mul_g(&self, x: &Element<R::Elem>, i: usize) -> Element<R::Elem> {
        let p = self.t.pair(i);
        let mut out = self.zero();
        for (k, c) in &x.terms {
            let (a, w) = self.t.split(*k);
            let ws = self.t.times_simple(w, i);
            self.add_term(&mut out.terms, self.t.key(a, ws), c.clone());
            if self.t.length(ws) < self.t.length(w) {
                let b = self.t.join(a, self.t.act(p, self.t.inverse(ws)));
                self.add_term(&mut out.terms, self.t.key(b, w), self.ring.mul(c, &self.qmq));
            }
        }
        out
    }

    /// x * g_i^-1 = x g_i + (q^-1 - q) x e_i
    pub fn mul_g_inv(&self, x: &Element<R::Elem>, i: usize) -> Element<R::Elem> {
        let mut out = self.mul_g(x, i);
        let e = self.mul_e(x, i);
        self.add_assign(&mut out, &self.scale(&e, &self.ring.neg(&self.qmq)));
        out
    }

    /// x * g_w along the stored reduced word.
    pub fn mul_gw(&self, x: &Element<R::Elem>, w: usize) -> Element<R::Elem> {
        let mut cur = x.clone();
        for &i in self.t.word(w) {
            cur = self.mul_g(&cur, i);
        }
        cur
    }

    /// x * E_B
    pub fn mul_ea(&self, x: &Element<R::Elem>, b: usize) -> Element<R::Elem> {
        let mut out = self.zero();
        for (k, c) in &x.terms {
            let (a, w) = self.t.split(*k);
            let j = self.t.join(a, self.t.act(b, self.t.inverse(w)));
            self.add_term(&mut out.terms, self.t.key(j, w), c.clone());
        }
        out
    }

    pub fn mul(&self, x: &Element<R::Elem>, y: &Element<R::Elem>) -> Element<R::Elem> {
        assert_eq!(x.n, y.n, "size mismatch");
        // group y by permutation: x * Σ_B c_B E_B, then one pass of g_v
        let mut by_perm: BTreeMap<usize, Vec<(usize, &R::Elem)>> = BTreeMap::new();
        for (k, c) in &y.terms {
            let (b, v) = self.t.split(*k);
            by_perm.entry(v).or_default().push((b, c));
        }
        let mut out = self.zero();
        for (v, parts) in by_perm {
            let mut acc = self.zero();
            for (b, c) in parts {
                let xe = self.mul_ea(x, b);
                for (k, d) in xe.terms {
                    self.add_term(&mut acc.terms, k, self.ring.mul(&d, c));
                }
            }
            let prod = self.mul_gw(&acc, v);
            self.add_assign(&mut out, &prod);
        }
        out
    }

    pub fn try_mul(&self, x: &Element<R::Elem>, y: &Element<R::Elem>) -> Result<Element<R::Elem>> {
        if x.n != y.n {
            return Err(BtError::SizeMismatch(x.n, y.n));
        }
        Ok(self.mul(x, y))
    }

    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Element<R::Elem>>) -> Element<R::Elem>
    where
        R::Elem: 'a,
    {
        let mut out = self.one();
        for x in xs {
            out = self.mul(&out, x);
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(BtError::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    pub fn gen_e(&self, i: usize) -> Result<Element<R::Elem>> {
        self.check_index(i)?;
        Ok(self.basis_element(self.t.pair(i), 0))
    }

    pub fn gen_g(&self, i: usize) -> Result<Element<R::Elem>> {
        self.check_index(i)?;
        Ok(self.mul_g(&self.one(), i))
    }

    pub fn gen_g_inv(&self, i: usize) -> Result<Element<R::Elem>> {
        self.check_index(i)?;
        Ok(self.mul_g_inv(&self.one(), i))
    }

    /// g_w
    pub fn g(&self, w: &Permutation) -> Element<R::Elem> {
        self.basis_element(self.t.part_index(&SetPartition::singletons(self.n())), w.rank())
    }

    /// E_ij by the recursion E_ij = g_i E_{i+1,j} g_i^-1, E_{i,i+1} = e_i.
    pub fn e_ij(&self, i: usize, j: usize) -> Result<Element<R::Elem>> {
        if i == 0 || j > self.n() || i >= j {
            return Err(BtError::IndexOutOfRange { index: j, n: self.n() });
        }
        if j == i + 1 {
            return self.gen_e(i);
        }
        let inner = self.e_ij(i + 1, j)?;
        let left = self.mul(&self.gen_g(i)?, &inner);
        Ok(self.mul_g_inv(&left, i))
    }

    /// E_A as the product of E_ij over pairs in a common block.
    pub fn e_a_product(&self, a: &SetPartition) -> Result<Element<R::Elem>> {
        self.check_n(a.n())?;
        let mut out = self.one();
        for b in a.blocks() {
            for (x, &i) in b.iter().enumerate() {
                for &j in &b[x + 1..] {
                    out = self.mul(&out, &self.e_ij(i, j)?);
                }
            }
        }
        Ok(out)
    }

    /// E_A (a single normal-form term).
    pub fn e_a(&self, a: &SetPartition) -> Element<R::Elem> {
        self.basis_element(self.t.part_index(a), 0)
    }

    /// 𝔼_A = Σ_{A ⊆ B} μ(A,B) E_B, by table index.
    pub fn bbe_index(&self, a: usize) -> Element<R::Elem> {
        let mut out = self.zero();
        for b in 0..self.t.num_parts() {
            if self.t.is_finer(a, b) {
                self.add_term(&mut out.terms, self.t.key(b, 0), self.ring.from_i64(self.t.moebius(a, b)));
            }
        }
        out
    }

    pub fn bbe(&self, a: &SetPartition) -> Element<R::Elem> {
        self.bbe_index(self.t.part_index(a))
    }

    /// 𝔼_alpha = Σ_{type A = alpha} 𝔼_A
    pub fn bbe_alpha(&self, alpha: &[usize]) -> Element<R::Elem> {
        let mut out = self.zero();
        for a in 0..self.t.num_parts() {
            if self.t.part(a).type_of() == alpha {
                let e = self.bbe_index(a);
                self.add_assign(&mut out, &e);
            }
        }
        out
    }

    /// Anti-involution fixing g_i and e_i: (E_A g_w)* = g_{w^-1} E_A = E_{A w} g_{w^-1}.
    pub fn star(&self, x: &Element<R::Elem>) -> Element<R::Elem> {
        let mut out = self.zero();
        for (k, c) in &x.terms {
            let (a, w) = self.t.split(*k);
            let wi = self.t.inverse(w);
            self.add_term(&mut out.terms, self.t.key(self.t.act(a, w), wi), c.clone());
        }
        out
    }

    /// x 𝔼_alpha
    pub fn project_alpha(&self, x: &Element<R::Elem>, alpha: &[usize]) -> Element<R::Elem> {
        self.mul(x, &self.bbe_alpha(alpha))
    }

    /// Indices (A, w) of the basis {𝔼_A g_w : type A = alpha} of E^alpha.
    pub fn alpha_basis_indices(&self, alpha: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.t.num_parts() {
            if self.t.part(a).type_of() == alpha {
                for w in 0..self.t.num_perms() {
                    out.push((a, w));
                }
            }
        }
        out
    }

    pub fn alpha_basis(&self, alpha: &[usize]) -> Vec<Element<R::Elem>> {
        self.alpha_basis_indices(alpha).into_iter().map(|(a, w)| self.mul_gw(&self.bbe_index(a), w)).collect()
    }

    /// Coordinates in the basis 𝔼_A g_w: since E_B = Σ_{B ⊆ A} 𝔼_A, the
    /// coefficient of 𝔼_A g_w is the sum of c_{B,w} over B finer than A.
    pub fn idempotent_coords(&self, x: &Element<R::Elem>) -> BTreeMap<Key, R::Elem> {
        let mut out = BTreeMap::new();
        for (k, c) in &x.terms {
            let (b, w) = self.t.split(*k);
            for a in 0..self.t.num_parts() {
                if self.t.is_finer(b, a) {
                    self.add_term(&mut out, self.t.key(a, w), c.clone());
                }
            }
        }
        out
    }

    /// Image of an element of the generic algebra.
    pub fn specialize(&self, x: &Element<LaurentPoly>) -> Element<R::Elem> {
        assert_eq!(x.n, self.n(), "size mismatch");
        let mut out = self.zero();
        for (k, c) in &x.terms {
            self.add_term(&mut out.terms, *k, self.ring.from_laurent(c));
        }
        out
    }

    /// Explicit (A, w, coefficient) triples.
    pub fn expand(&self, x: &Element<R::Elem>) -> Vec<(SetPartition, Permutation, R::Elem)> {
        x.terms
            .iter()
            .map(|(k, c)| {
                let (a, w) = self.t.split(*k);
                (self.t.part(a).clone(), self.t.perm(w).clone(), c.clone())
            })
            .collect()
    }

    pub fn from_triples(&self, triples: &[(SetPartition, Permutation, R::Elem)]) -> Result<Element<R::Elem>> {
        let mut out = self.zero();
        for (a, w, c) in triples {
            let t = self.term(a, w, c.clone())?;
            self.add_assign(&mut out, &t);
        }
        Ok(out)
    }

    /// Dense coordinate vector (length dim) in the E_A g_w basis.
    pub fn dense(&self, x: &Element<R::Elem>) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.dim()];
        for (k, c) in &x.terms {
            v[*k as usize] = c.clone();
        }
        v
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub partition: SetPartition,
    pub word: Permutation,
    pub coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl SAlgebra {
    pub fn to_json(&self, x: &Element<LaurentPoly>) -> ElementJson {
        ElementJson {
            n: self.n(),
            terms: self.expand(x).into_iter().map(|(partition, word, coeff)| TermJson { partition, word, coeff }).collect(),
        }
    }

    pub fn from_json(&self, j: &ElementJson) -> Result<Element<LaurentPoly>> {
        self.check_n(j.n)?;
        let mut out = self.zero();
        for t in &j.terms {
            if t.partition.n() != j.n || t.word.n() != j.n {
                return Err(BtError::MalformedElement(format!("term of size {} in element of size {}", t.word.n(), j.n)));
            }
            let e = self.term(&t.partition, &t.word, t.coeff.clone())?;
            self.add_assign(&mut out, &e);
        }
        Ok(out)
    }
}
