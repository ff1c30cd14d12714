//! Permutations of {1..n} acting on the right, Coxeter length, reduced words
//! and distinguished coset decompositions.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BtError, Result};
use crate::tableaux::{MultiComp, MultiTableau};

/// One-line notation, stored 0-based. `img[j]` is the image of `j`.
/// Products are right actions: `u.then(v)` applies `u` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

/// Generator indices `i` (1-based) of `s_i = (i, i+1)`.
pub type ReducedWord = Vec<usize>;

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { img: (0..n).collect() }
    }

    /// `s_i`, 1-based `i`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(BtError::IndexOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        Ok(p)
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(v: &[usize]) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n];
        for &x in v {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BtError::InvalidPermutation(v.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { img: v.iter().map(|x| x - 1).collect() })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|x| x + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.img[j - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Apply `self`, then `v`.
    pub fn then(&self, v: &Permutation) -> Permutation {
        assert_eq!(self.n(), v.n(), "permutation size mismatch");
        Permutation { img: self.img.iter().map(|&x| v.img[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { img: inv }
    }

    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.img.len() {
            for j in i + 1..self.img.len() {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Whether `s_i` (1-based) is a right descent: l(w s_i) < l(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        // w s_i swaps the values i, i+1; length drops iff i+1 is left of i
        let pos = |v: usize| self.img.iter().position(|&x| x == v).expect("bijection");
        pos(i) < pos(i - 1)
    }

    /// `w * s_i`, 1-based.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut img = self.img.clone();
        for x in img.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
        Permutation { img }
    }

    /// Deterministic reduced word: strip right descents (smallest index
    /// first) until the identity is reached.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for i in 1..w.n() {
                if w.has_right_descent(i) {
                    w = w.times_simple(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation has a descent");
        }
        rev.reverse();
        rev
    }

    pub fn from_word(word: &[usize], n: usize) -> Result<Permutation> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(BtError::IndexOutOfRange { index: i, n });
            }
            w = w.times_simple(i);
        }
        Ok(w)
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { img: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// Position in `Permutation::all(n)`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut r = 0;
        let mut fact = vec![1usize; n + 1];
        for k in 1..=n {
            fact[k] = fact[k - 1] * k;
        }
        for i in 0..n {
            let smaller = self.img[i + 1..].iter().filter(|&&x| x < self.img[i]).count();
            r += smaller * fact[n - 1 - i];
        }
        r
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(BtError::SizeMismatch(u.n(), v.n()));
    }
    Ok(u.then(v))
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

pub fn reduced_word(w: &Permutation) -> ReducedWord {
    w.reduced_word()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// Consecutive intervals (0-based, half-open) cut out by the parts of `comp`.
pub fn intervals(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &p in parts {
        out.push((start, start + p));
        start += p;
    }
    out
}

/// The Young subgroup S_lam: permutations preserving each interval of `parts`.
pub fn young_subgroup(parts: &[usize]) -> Vec<Permutation> {
    let n: usize = parts.iter().sum();
    let mut out = vec![Permutation::identity(n)];
    for (a, b) in intervals(parts) {
        let local = Permutation::all(b - a);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for w in &out {
            for l in &local {
                let mut img = w.img.clone();
                for k in 0..(b - a) {
                    img[a + k] = a + l.img[k];
                }
                next.push(Permutation { img });
            }
        }
        out = next;
    }
    out
}

/// w = w0 * d(t) with w0 in S_lam and t row standard of shape `lam`;
/// lengths add. `t` is the tableau t^lam * w with its rows sorted.
pub fn parabolic_decompose(w: &Permutation, lam: &[usize]) -> Result<(Permutation, MultiTableau)> {
    let shape: MultiComp = vec![lam.to_vec()];
    multicomp_decompose(w, &shape)
}

/// Same as [`parabolic_decompose`] for the row stabilizer of a
/// multicomposition; rows of all components are concatenated.
pub fn multicomp_decompose(w: &Permutation, blam: &MultiComp) -> Result<(Permutation, MultiTableau)> {
    let s = MultiTableau::from_perm(blam, w)?;
    let t = s.sort_rows();
    let w0 = w.then(&t.d().inverse());
    Ok((w0, t))
}

/// Decomposition with respect to S_{||blam||}: the components are treated as
/// single rows (of their total size). Returns (w0, t) with w = w0 d(t) and
/// ||t|| row standard; w0 = d(s0) for s0 of the initial kind.
pub fn norm_decompose(w: &Permutation, blam: &MultiComp) -> Result<(Permutation, MultiTableau)> {
    let s = MultiTableau::from_perm(blam, w)?;
    let t = s.sort_within_components();
    let w0 = w.then(&t.d().inverse());
    Ok((w0, t))
}

/// w_blam = d(t_blam).
pub fn w_lambda(blam: &MultiComp) -> Permutation {
    MultiTableau::column_reading(blam).d()
}
