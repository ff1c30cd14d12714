//! Cellular bases m_st and n_st of E_n^alpha(q) and their ingredients.
//!
//!   m_st = g*_{d(s)} 𝔼_blam x_blam 𝔹*_{d(u)} b_bmu 𝔹_{d(v)} g_{d(t)}
//!   n_st = g*_{d(s)} 𝔼_blam y_blam 𝔹*_{d(u)} c_bmu 𝔹_{d(v)} g_{d(t)}
//!
//! for s = (s | u), t = (t | v). 𝔼_blam sits next to x_blam (it commutes with
//! everything except the outer g factors), which makes m_st* = m_ts hold
//! on the nose.
//!
//! 𝔹_σ for σ in the block symmetric group is 𝔼_alpha g_{B_σ}, with B_σ the
//! permutation moving block k onto block kσ preserving order.

use serde::{Deserialize, Serialize};

use crate::bt_algebra::{BtAlgebra, Element};
use crate::coeff::Ring;
use crate::error::{BtError, Result};
use crate::set_partitions::{partition_from_sizes, SetPartition};
use crate::symmetric_group::{intervals, young_subgroup, Permutation};
use crate::tableaux::{enumerate_l, LambdaPair, LambdaTableau};
use crate::tableaux::{MultiComp, MultiTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    M,
    N,
}

/// How 𝔹_σ is realized. Only the default is the real construction; the
/// others exist to check that the test suite notices a wrong one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BbVariant {
    #[default]
    Idempotent,
    /// g_{B_σ} with no 𝔼_alpha factor.
    Bare,
    /// 𝔹_σ = 𝔼_alpha for every σ.
    Trivial,
}

/// One element of a cellular basis together with its label.
#[derive(Clone, Debug)]
pub struct CellElement<E> {
    pub lam: LambdaPair,
    pub s: LambdaTableau,
    pub t: LambdaTableau,
    pub element: Element<E>,
}

#[derive(Clone)]
pub struct Cellular<R: Ring> {
    alg: BtAlgebra<R>,
    variant: BbVariant,
}

/// Order-preserving block permutation: block k goes onto block kσ.
pub fn block_perm(block_sizes: &[usize], sigma: &Permutation) -> Result<Permutation> {
    if sigma.n() != block_sizes.len() {
        return Err(BtError::SizeMismatch(block_sizes.len(), sigma.n()));
    }
    let iv = intervals(block_sizes);
    let n: usize = block_sizes.iter().sum();
    let mut img = vec![0; n];
    for (k, &(a, b)) in iv.iter().enumerate() {
        let target = sigma.apply(k + 1) - 1;
        let (c, d) = iv[target];
        if d - c != b - a {
            return Err(BtError::InvalidShape(format!("blocks {} and {} differ in size", k + 1, target + 1)));
        }
        for x in 0..b - a {
            img[a + x] = c + x + 1;
        }
    }
    Permutation::from_one_line(&img)
}

/// A_blam from component sizes.
pub fn a_blam(blam: &MultiComp) -> SetPartition {
    partition_from_sizes(&blam.iter().map(|c| c.iter().sum()).collect::<Vec<usize>>())
}

/// Young subgroup of the rows of blam (S_blam).
pub fn row_subgroup(blam: &MultiComp) -> Vec<Permutation> {
    young_subgroup(&blam.iter().flatten().copied().collect::<Vec<usize>>())
}

fn sign(w: &Permutation) -> i64 {
    if w.length() % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<R: Ring> Cellular<R> {
    pub fn new(alg: BtAlgebra<R>) -> Self {
        Cellular { alg, variant: BbVariant::Idempotent }
    }

    #[cfg(any(test, feature = "negative-control"))]
    pub fn with_variant(alg: BtAlgebra<R>, variant: BbVariant) -> Self {
        Cellular { alg, variant }
    }

    pub fn algebra(&self) -> &BtAlgebra<R> {
        &self.alg
    }

    fn check_n(&self, m: usize) -> Result<()> {
        if m != self.alg.n() {
            return Err(BtError::SizeMismatch(self.alg.n(), m));
        }
        Ok(())
    }

    pub fn bbe_blam(&self, blam: &MultiComp) -> Element<R::Elem> {
        self.alg.bbe(&a_blam(blam))
    }

    /// Σ_{w ∈ S_blam} q^{l(w)} g_w
    pub fn x_lambda(&self, blam: &MultiComp) -> Result<Element<R::Elem>> {
        self.symmetrizer(blam, 1)
    }

    /// Σ_{w ∈ S_blam} (-q)^{-l(w)} g_w
    pub fn y_lambda(&self, blam: &MultiComp) -> Result<Element<R::Elem>> {
        self.symmetrizer(blam, -1)
    }

    fn symmetrizer(&self, blam: &MultiComp, dir: i32) -> Result<Element<R::Elem>> {
        self.check_n(crate::tableaux::multi_size(blam))?;
        let ring = self.alg.ring();
        let mut out = self.alg.zero();
        for w in row_subgroup(blam) {
            let l = w.length() as i32;
            let mut c = ring.q_pow(dir * l);
            if dir < 0 && l % 2 == 1 {
                c = ring.neg(&c);
            }
            let t = self.alg.g(&w);
            self.alg.add_assign(&mut out, &self.alg.scale(&t, &c));
        }
        Ok(out)
    }

    /// B_i: swaps blocks i and i+1 (1-based); they must have equal components.
    pub fn b_i(&self, lam: &LambdaPair, i: usize) -> Result<Permutation> {
        if i == 0 || i >= lam.r() || lam.blam[i - 1] != lam.blam[i] {
            return Err(BtError::InvalidShape(format!("components {i} and {} of {:?} differ", i + 1, lam.blam)));
        }
        block_perm(&lam.block_sizes(), &Permutation::simple(i, lam.r())?)
    }

    /// 𝔹_σ for σ permuting equal components.
    pub fn bbb(&self, lam: &LambdaPair, sigma: &Permutation) -> Result<Element<R::Elem>> {
        self.check_n(lam.n())?;
        for k in 1..=lam.r() {
            if lam.blam[k - 1] != lam.blam[sigma.apply(k) - 1] {
                return Err(BtError::InvalidShape(format!("{sigma:?} moves unequal components of {:?}", lam.blam)));
            }
        }
        let b = block_perm(&lam.block_sizes(), sigma)?;
        let alpha = lam.alpha();
        Ok(match self.variant {
            BbVariant::Idempotent => self.alg.mul(&self.alg.bbe_alpha(&alpha), &self.alg.g(&b)),
            BbVariant::Bare => self.alg.g(&b),
            BbVariant::Trivial => self.alg.bbe_alpha(&alpha),
        })
    }

    fn block_sum(&self, lam: &LambdaPair, signed: bool) -> Result<Element<R::Elem>> {
        let mut out = self.alg.zero();
        for sigma in lam.bmu_subgroup() {
            let mut b = self.bbb(lam, &sigma)?;
            if signed && sign(&sigma) < 0 {
                b = self.alg.scale(&b, &self.alg.ring().from_i64(-1));
            }
            self.alg.add_assign(&mut out, &b);
        }
        Ok(out)
    }

    /// Image of Σ_{σ ∈ S_bmu} σ.
    pub fn b_mu(&self, lam: &LambdaPair) -> Result<Element<R::Elem>> {
        self.block_sum(lam, false)
    }

    /// Image of Σ_{σ ∈ S_bmu} sign(σ) σ.
    pub fn c_mu(&self, lam: &LambdaPair) -> Result<Element<R::Elem>> {
        self.block_sum(lam, true)
    }

    fn check_tableau(&self, lam: &LambdaPair, es: &LambdaTableau) -> Result<()> {
        if !lam.is_row_standard(es) {
            return Err(BtError::InvalidTableau(format!("{es:?} is not a row standard tableau of shape {lam:?}")));
        }
        Ok(())
    }

    /// 𝔹*_{d(u)} (b or c) 𝔹_{d(v)}
    fn middle(&self, lam: &LambdaPair, u: &MultiTableau, v: &MultiTableau, flavor: Flavor) -> Result<Element<R::Elem>> {
        let core = match flavor {
            Flavor::M => self.b_mu(lam)?,
            Flavor::N => self.c_mu(lam)?,
        };
        let left = self.alg.star(&self.bbb(lam, &u.d())?);
        let right = self.bbb(lam, &v.d())?;
        Ok(self.alg.product([&left, &core, &right]))
    }

    /// 𝔼_blam x_blam (or y_blam)
    fn head(&self, blam: &MultiComp, flavor: Flavor) -> Result<Element<R::Elem>> {
        let sym = match flavor {
            Flavor::M => self.x_lambda(blam)?,
            Flavor::N => self.y_lambda(blam)?,
        };
        Ok(self.alg.mul(&self.bbe_blam(blam), &sym))
    }

    fn wrap(&self, s: &MultiTableau, inner: &Element<R::Elem>, t: &MultiTableau) -> Element<R::Elem> {
        let left = self.alg.g(&s.d().inverse());
        let x = self.alg.mul(&left, inner);
        self.alg.mul_gw(&x, t.d().rank())
    }

    pub fn cell_element(&self, lam: &LambdaPair, s: &LambdaTableau, t: &LambdaTableau, flavor: Flavor) -> Result<Element<R::Elem>> {
        self.check_n(lam.n())?;
        self.check_tableau(lam, s)?;
        self.check_tableau(lam, t)?;
        let inner = self.alg.mul(&self.head(&lam.blam, flavor)?, &self.middle(lam, &s.u, &t.u, flavor)?);
        Ok(self.wrap(&s.t, &inner, &t.t))
    }

    pub fn m_st(&self, lam: &LambdaPair, s: &LambdaTableau, t: &LambdaTableau) -> Result<Element<R::Elem>> {
        self.cell_element(lam, s, t, Flavor::M)
    }

    pub fn n_st(&self, lam: &LambdaPair, s: &LambdaTableau, t: &LambdaTableau) -> Result<Element<R::Elem>> {
        self.cell_element(lam, s, t, Flavor::N)
    }

    /// m_{t^Λ t}
    pub fn m_t(&self, lam: &LambdaPair, t: &LambdaTableau) -> Result<Element<R::Elem>> {
        self.m_st(lam, &lam.top(), t)
    }

    pub fn n_t(&self, lam: &LambdaPair, t: &LambdaTableau) -> Result<Element<R::Elem>> {
        self.n_st(lam, &lam.top(), t)
    }

    /// 𝔼_blam x_blam b_bmu
    pub fn m_lambda(&self, lam: &LambdaPair) -> Result<Element<R::Elem>> {
        Ok(self.alg.mul(&self.head(&lam.blam, Flavor::M)?, &self.b_mu(lam)?))
    }

    /// 𝔼_blam y_blam c_bmu
    pub fn n_lambda(&self, lam: &LambdaPair) -> Result<Element<R::Elem>> {
        Ok(self.alg.mul(&self.head(&lam.blam, Flavor::N)?, &self.c_mu(lam)?))
    }

    /// g*_{d(s)} 𝔼_blam x_blam g_{d(t)} for blam-multitableaux s, t.
    pub fn x_st(&self, blam: &MultiComp, s: &MultiTableau, t: &MultiTableau) -> Result<Element<R::Elem>> {
        self.murphy(blam, s, t, Flavor::M)
    }

    pub fn y_st(&self, blam: &MultiComp, s: &MultiTableau, t: &MultiTableau) -> Result<Element<R::Elem>> {
        self.murphy(blam, s, t, Flavor::N)
    }

    fn murphy(&self, blam: &MultiComp, s: &MultiTableau, t: &MultiTableau, flavor: Flavor) -> Result<Element<R::Elem>> {
        for x in [s, t] {
            if &x.shape() != blam || !x.is_row_standard() {
                return Err(BtError::InvalidTableau(format!("{x:?} is not row standard of shape {blam:?}")));
            }
        }
        Ok(self.wrap(s, &self.head(blam, flavor)?, t))
    }

    /// The whole basis {m_st} or {n_st} of E_n^alpha(q).
    pub fn basis(&self, alpha: &[usize], flavor: Flavor) -> Result<Vec<CellElement<R::Elem>>> {
        self.check_n(alpha.iter().sum())?;
        let mut out = Vec::new();
        for lam in enumerate_l(alpha) {
            out.extend(self.cell_of(&lam, flavor)?);
        }
        Ok(out)
    }

    /// {m_st : s, t ∈ Std(Λ)} for one Λ.
    pub fn cell_of(&self, lam: &LambdaPair, flavor: Flavor) -> Result<Vec<CellElement<R::Elem>>> {
        let std = lam.std();
        let head = self.head(&lam.blam, flavor)?;
        let mut out = Vec::with_capacity(std.len() * std.len());
        for s in &std {
            for t in &std {
                let inner = self.alg.mul(&head, &self.middle(lam, &s.u, &t.u, flavor)?);
                let element = self.wrap(&s.t, &inner, &t.t);
                out.push(CellElement { lam: lam.clone(), s: s.clone(), t: t.clone(), element });
            }
        }
        Ok(out)
    }
}

/// St_i = -q^-3 g_i g_{i+1} g_i + q^-2 g_i g_{i+1} + q^-2 g_{i+1} g_i - q^-1 g_i - q^-1 g_{i+1} + 1
pub fn steinberg<R: Ring>(alg: &BtAlgebra<R>, i: usize) -> Result<Element<R::Elem>> {
    if i == 0 || i + 2 > alg.n() {
        return Err(BtError::IndexOutOfRange { index: i, n: alg.n() });
    }
    let ring = alg.ring();
    let (a, b) = (alg.gen_g(i)?, alg.gen_g(i + 1)?);
    let terms = [
        (ring.neg(&ring.q_pow(-3)), alg.product([&a, &b, &a])),
        (ring.q_pow(-2), alg.mul(&a, &b)),
        (ring.q_pow(-2), alg.mul(&b, &a)),
        (ring.neg(&ring.q_pow(-1)), a.clone()),
        (ring.neg(&ring.q_pow(-1)), b.clone()),
        (ring.one(), alg.one()),
    ];
    let mut out = alg.zero();
    for (c, x) in &terms {
        alg.add_assign(&mut out, &alg.scale(x, c));
    }
    Ok(out)
}

/// e_i e_{i+1} St_i
pub fn ptl_generator<R: Ring>(alg: &BtAlgebra<R>, i: usize) -> Result<Element<R::Elem>> {
    let st = steinberg(alg, i)?;
    Ok(alg.product([&alg.gen_e(i)?, &alg.gen_e(i + 1)?, &st]))
}
