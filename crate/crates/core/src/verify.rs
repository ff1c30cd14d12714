//! Named property checks, run as a suite by the CLI and the acceptance run.
//! Each check reports the first counterexample it finds instead of panicking.

use serde::{Deserialize, Serialize};

use crate::bt_algebra::{BtAlgebra, Element, SAlgebra};
use crate::cellular::{Cellular, Flavor};
use crate::coeff::{LaurentPoly, LaurentRing, PrimeField, Ring};
use crate::error::{BtError, Result};
use crate::modules::{basis_vector, bilinear_form, MLambda, Realized};
use crate::set_partitions::enumerate as enumerate_partitions;
use crate::tableaux::{
    dominance_multitableau, dominance_up_to_reordering, enumerate_l, enumerate_std, partitions, types, MultiTableau,
};
use crate::tensor::{Letter, TensorSpace, TensorVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample, empty when passed.
    pub detail: String,
}

/// Scales every g_i by `g_scale` before checking; anything but 1 must make
/// the relation checks fail.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub big_n: usize,
    pub r: usize,
    pub g_scale: i64,
}

impl SuiteConfig {
    pub fn new(n: usize, big_n: usize, r: usize) -> Self {
        SuiteConfig { n, big_n, r, g_scale: 1 }
    }
}

type Outcome = Result<Option<String>>;

fn fail(msg: String) -> Outcome {
    Ok(Some(msg))
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    if cfg.n == 0 || cfg.big_n == 0 || cfg.r == 0 {
        return Err(BtError::InvalidShape(format!("n, N, r must be positive: {cfg:?}")));
    }
    let checks: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("relations (normal form)", Box::new(|| relations_normal_form(cfg))),
        ("relations (tensor operators)", Box::new(|| relations_tensor(cfg))),
        ("idempotents", Box::new(|| idempotents(cfg.n))),
        ("bilinear form", Box::new(|| bilinear(cfg.n))),
        ("crucial pairing", Box::new(|| crucial_pairing(cfg.n))),
        ("first duality", Box::new(|| first_duality(cfg.n))),
        ("second duality", Box::new(|| second_duality(cfg.n))),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let detail = f()?;
            Ok(Check { name: name.to_string(), passed: detail.is_none(), detail: detail.unwrap_or_default() })
        })
        .collect()
}

pub fn relations_normal_form(cfg: &SuiteConfig) -> Outcome {
    let a = SAlgebra::generic(cfg.n);
    let c = a.ring().from_i64(cfg.g_scale);
    let g = |i| a.scale(&a.gen_g(i).unwrap(), &c);
    let e = |i| a.gen_e(i).unwrap();
    let m = |x: &Element<LaurentPoly>, y: &Element<LaurentPoly>| a.mul(x, y);
    let n = cfg.n;
    for i in 1..n {
        for j in 1..n {
            let d = i.abs_diff(j);
            let mut eqs = vec![("E6", m(&e(i), &e(j)), m(&e(j), &e(i)))];
            if d > 1 {
                eqs.push(("E1", m(&g(i), &g(j)), m(&g(j), &g(i))));
                eqs.push(("E7", m(&g(i), &e(j)), m(&e(j), &g(i))));
            }
            if d == 1 {
                eqs.push(("E3", m(&m(&g(i), &g(j)), &g(i)), m(&m(&g(j), &g(i)), &g(j))));
                eqs.push(("E4", m(&m(&e(i), &g(j)), &g(i)), m(&m(&g(j), &g(i)), &e(j))));
                let x = m(&m(&e(i), &e(j)), &g(j));
                eqs.push(("E5", x.clone(), m(&m(&e(i), &g(j)), &e(i))));
                eqs.push(("E5", x, m(&m(&g(j), &e(i)), &e(j))));
            }
            for (name, l, r) in eqs {
                if l != r {
                    return fail(format!("{name} fails at i={i}, j={j}"));
                }
            }
        }
        let e9 = a.add(&a.one(), &a.scale(&m(&e(i), &g(i)), &a.ring().q_minus_qinv()));
        for (name, l, r) in [
            ("E2", m(&e(i), &g(i)), m(&g(i), &e(i))),
            ("E8", m(&e(i), &e(i)), e(i)),
            ("E9", m(&g(i), &g(i)), e9),
        ] {
            if l != r {
                return fail(format!("{name} fails at i={i}"));
            }
        }
    }
    Ok(None)
}

pub fn relations_tensor(cfg: &SuiteConfig) -> Outcome {
    use Letter::*;
    let sp = TensorSpace::new(cfg.n, cfg.big_n, cfg.r, LaurentRing)?;
    let ring = LaurentRing;
    let c = ring.from_i64(cfg.g_scale);
    let on = |v: &TensorVector<LaurentPoly>, word: &[Letter]| -> Result<TensorVector<LaurentPoly>> {
        let mut out = sp.act_word(v, word)?;
        let k = word.iter().filter(|l| matches!(l, G(_))).count();
        for _ in 0..k {
            out = out.into_iter().map(|(key, x)| (key, ring.mul(&x, &c))).filter(|(_, x)| !ring.is_zero(x)).collect();
        }
        Ok(out)
    };
    let n = cfg.n;
    for k in sp.basis() {
        let v = sp.basis_vector(k);
        let eq = |name: &str, a: &[Letter], b: &[Letter]| -> Outcome {
            if on(&v, a)? != on(&v, b)? {
                return fail(format!("{name} fails on basis vector {:?}: {a:?} vs {b:?}", sp.decode(k)));
            }
            Ok(None)
        };
        for i in 1..n {
            for j in 1..n {
                let d = i.abs_diff(j);
                let mut rels = vec![("E6", vec![E(i), E(j)], vec![E(j), E(i)])];
                if d > 1 {
                    rels.push(("E1", vec![G(i), G(j)], vec![G(j), G(i)]));
                    rels.push(("E7", vec![G(i), E(j)], vec![E(j), G(i)]));
                }
                if d == 1 {
                    rels.push(("E3", vec![G(i), G(j), G(i)], vec![G(j), G(i), G(j)]));
                    rels.push(("E4", vec![E(i), G(j), G(i)], vec![G(j), G(i), E(j)]));
                    rels.push(("E5", vec![E(i), E(j), G(j)], vec![E(i), G(j), E(i)]));
                    rels.push(("E5", vec![E(i), E(j), G(j)], vec![G(j), E(i), E(j)]));
                }
                for (name, a, b) in rels {
                    if let Some(m) = eq(name, &a, &b)? {
                        return fail(m);
                    }
                }
            }
            for (name, a, b) in [("E2", vec![G(i), E(i)], vec![E(i), G(i)]), ("E8", vec![E(i), E(i)], vec![E(i)])] {
                if let Some(m) = eq(name, &a, &b)? {
                    return fail(m);
                }
            }
            let lhs = on(&v, &[G(i), G(i)])?;
            let mut rhs = v.clone();
            for (kk, x) in on(&v, &[E(i), G(i)])? {
                let y = ring.add(rhs.get(&kk).unwrap_or(&ring.zero()), &ring.mul(&x, &ring.q_minus_qinv()));
                if ring.is_zero(&y) {
                    rhs.remove(&kk);
                } else {
                    rhs.insert(kk, y);
                }
            }
            if lhs != rhs {
                return fail(format!("E9 fails on basis vector {:?} at i={i}", sp.decode(k)));
            }
        }
    }
    Ok(None)
}

/// 𝔼_A pairwise orthogonal, summing to 1, 𝔼_A g_w = g_w 𝔼_{A·w}; 𝔼_α central.
pub fn idempotents(n: usize) -> Outcome {
    let a = SAlgebra::generic(n);
    let all = enumerate_partitions(n);
    let bbe: Vec<_> = all.iter().map(|p| a.bbe(p)).collect();
    for (i, x) in bbe.iter().enumerate() {
        for (j, y) in bbe.iter().enumerate() {
            let want = if i == j { x.clone() } else { a.zero() };
            if a.mul(x, y) != want {
                return fail(format!("𝔼 not orthogonal: {:?} {:?}", all[i], all[j]));
            }
        }
        for w in 0..a.tables().num_perms() {
            let perm = a.tables().perm(w).clone();
            if a.mul(x, &a.g(&perm)) != a.mul(&a.g(&perm), &a.bbe(&all[i].act(&perm))) {
                return fail(format!("𝔼 does not commute correctly past g_w: {:?}", all[i]));
            }
        }
    }
    if a.sum(bbe.iter()) != a.one() {
        return fail("𝔼_A do not sum to 1".into());
    }
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(a.gen_g(i)?);
        gens.push(a.gen_e(i)?);
    }
    for alpha in partitions(n) {
        let e = a.bbe_alpha(&alpha);
        if a.mul(&e, &e) != e {
            return fail(format!("𝔼_{alpha:?} not idempotent"));
        }
        if gens.iter().any(|g| a.mul(&e, g) != a.mul(g, &e)) {
            return fail(format!("𝔼_{alpha:?} not central"));
        }
    }
    Ok(None)
}

/// The form on M(Λ) is symmetric with orthonormal basis and g_i, e_i are self-adjoint.
pub fn bilinear(n: usize) -> Outcome {
    let ring = LaurentRing;
    for alpha in types(n) {
        for lam in enumerate_l(&alpha) {
            let m = MLambda::new(lam.clone());
            let d = m.dim();
            let basis: Vec<_> = (0..d).map(|k| basis_vector(&ring, k)).collect();
            for a in 0..d {
                for b in 0..d {
                    let want = if a == b { LaurentPoly::one() } else { LaurentPoly::zero() };
                    if bilinear_form(&ring, &basis[a], &basis[b]) != want {
                        return fail(format!("basis of M({lam:?}) not orthonormal"));
                    }
                }
            }
            for i in 1..n {
                for l in [Letter::G(i), Letter::E(i)] {
                    let images: Vec<_> = basis.iter().map(|v| m.act(&ring, v, l)).collect::<Result<_>>()?;
                    for a in 0..d {
                        for b in 0..d {
                            if bilinear_form(&ring, &images[a], &basis[b]) != bilinear_form(&ring, &basis[a], &images[b]) {
                                return fail(format!("{l:?} not self-adjoint on M({lam:?})"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// (m_t n_{t's'}, m_s)_Λ and its reduced form, both expected to be 1.
pub fn crucial_pairing(n: usize) -> Outcome {
    let cell = Cellular::new(SAlgebra::generic(n));
    for alpha in types(n) {
        for lam in enumerate_l(&alpha) {
            let real = Realized::new(&cell, lam.clone())?;
            let red = real.reduced_pairing()?;
            if red != LaurentPoly::one() {
                return fail(format!("reduced pairing of {lam:?} is {red:?}"));
            }
            for s in lam.std() {
                for t in lam.std() {
                    let p = real.crucial_pairing(&s, &t)?;
                    if p.is_zero() {
                        return fail(format!("pairing vanishes for {lam:?} s={s:?} t={t:?}"));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn distinct_parts(alpha: &[usize]) -> bool {
    alpha.windows(2).all(|w| w[0] != w[1])
}

/// Exact over S up to n = 3, at one prime point above.
fn with_ring<T>(n: usize, generic: impl FnOnce(Cellular<LaurentRing>) -> T, prime: impl FnOnce(Cellular<PrimeField>) -> T) -> Result<T> {
    Ok(if n <= 3 {
        generic(Cellular::new(SAlgebra::generic(n)))
    } else {
        prime(Cellular::new(BtAlgebra::new(n, PrimeField::new(1_000_000_007, 3)?)))
    })
}

/// x_{t^λ t} y_{s1 t^λ1} ≠ 0 ⇒ t ⊴ s1′, over increasing standard tableaux,
/// with the same reordering allowance as [`second_duality`].
pub fn first_duality(n: usize) -> Outcome {
    fn run<R: Ring>(c: Cellular<R>, n: usize) -> Outcome {
        let alg = c.algebra();
        for alpha in types(n) {
            let literal = n <= 3 || distinct_parts(&alpha);
            let ls = enumerate_l(&alpha);
            for lam in &ls {
                for lam1 in &ls {
                    let (b, b1) = (&lam.blam, &lam1.blam);
                    let ts: Vec<_> = enumerate_std(b).into_iter().filter(|t| lam.t_is_increasing(t)).collect();
                    let s1s: Vec<_> = enumerate_std(b1).into_iter().filter(|s| lam1.t_is_increasing(s)).collect();
                    for t in &ts {
                        let x = c.x_st(b, &MultiTableau::initial(b), t)?;
                        for s1 in &s1s {
                            let y = c.y_st(b1, s1, &MultiTableau::initial(b1))?;
                            if alg.mul(&x, &y).is_zero() {
                                continue;
                            }
                            let s1c = s1.conjugate()?;
                            let ok = if literal { dominance_multitableau(t, &s1c) } else { dominance_up_to_reordering(t, &s1c) };
                            if !ok {
                                return fail(format!("x_(t^λ,{t:?}) y_({s1:?},t^λ1) ≠ 0 but t ⋬ s1′"));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }
    with_ring(n, |c| run(c, n), |c| run(c, n))?
}

/// m_st n_{s1 t1} ≠ 0 ⇒ t ⊴ s1′. Literal when n ≤ 3 or α has distinct
/// parts; otherwise equal-size components of t may be reordered.
pub fn second_duality(n: usize) -> Outcome {
    fn run<R: Ring>(c: Cellular<R>, n: usize) -> Outcome {
        let alg = c.algebra();
        for alpha in types(n) {
            let literal = n <= 3 || distinct_parts(&alpha);
            let m = c.basis(&alpha, Flavor::M)?;
            let nn = c.basis(&alpha, Flavor::N)?;
            for a in &m {
                for b in &nn {
                    if alg.mul(&a.element, &b.element).is_zero() {
                        continue;
                    }
                    let s1c = b.s.conjugate()?;
                    let ok = if literal { dominance_multitableau(&a.t.t, &s1c.t) } else { dominance_up_to_reordering(&a.t.t, &s1c.t) };
                    let u_ok = a.lam.groups() != b.lam.groups()
                        || a.lam.bmu.len() != b.lam.bmu.len()
                        || dominance_multitableau(&a.t.u, &s1c.u);
                    if !ok || !u_ok {
                        return fail(format!("m_st n_s1t1 ≠ 0 for {:?} t={:?} and {:?} s1={:?}", a.lam, a.t, b.lam, b.s));
                    }
                }
            }
        }
        Ok(None)
    }
    with_ring(n, |c| run(c, n), |c| run(c, n))?
}
