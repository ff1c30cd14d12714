//! Ground ring S = Z[q, q^-1], its field specializations, and the small
//! `Ring` abstraction the rest of the crate is generic over.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BtError, Result};

/// Laurent polynomial in q with integer coefficients. Zero coefficients are
/// never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(k, BigInt::from(c));
        }
        p
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// q - q^-1, the recurring coefficient of the quadratic relation.
    pub fn q_minus_qinv() -> Self {
        Self::from_terms([(1, BigInt::from(1)), (-1, BigInt::from(-1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    pub fn mul_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }

    /// Substitution q -> q^-1.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    pub fn eval(&self, q0: &FieldScalar) -> Result<FieldScalar> {
        lp_eval(self, q0)
    }
}

pub fn lp_add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = a.clone();
    out.add_assign_ref(b);
    out
}

pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a.mul_ref(b)
}

/// Evaluate at `q0`. Fails when q0 is not invertible.
pub fn lp_eval(a: &LaurentPoly, q0: &FieldScalar) -> Result<FieldScalar> {
    if q0.is_zero() {
        return Err(BtError::ZeroEvaluationPoint);
    }
    let qinv = q0.inv()?;
    let mut acc = q0.zero_like();
    for (k, c) in a.terms() {
        let base = if k >= 0 { q0 } else { &qinv };
        let pw = base.pow(k.unsigned_abs());
        acc = acc.add(&pw.mul(&q0.from_bigint(c))?)?;
    }
    Ok(acc)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match *k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        lp_add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        lp_add(self, &-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

// {"-1": "-1", "1": "1"}
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // exponent order, not string order
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (k, c) in m {
            let k: i32 = k.trim().parse().map_err(D::Error::custom)?;
            let c: BigInt = c.trim().parse().map_err(D::Error::custom)?;
            p.add_term(k, &c);
        }
        Ok(p)
    }
}

/// A scalar in Q or in GF(p), tagged with its field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl FieldScalar {
    pub fn rational(num: i64, den: i64) -> Self {
        FieldScalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn prime(value: i64, p: u64) -> Self {
        FieldScalar::Prime { value: value.rem_euclid(p as i64) as u64, p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Prime { value, .. } => *value == 0,
        }
    }

    fn zero_like(&self) -> Self {
        match self {
            FieldScalar::Rational(_) => FieldScalar::Rational(BigRational::zero()),
            FieldScalar::Prime { p, .. } => FieldScalar::Prime { value: 0, p: *p },
        }
    }

    fn from_bigint(&self, c: &BigInt) -> Self {
        match self {
            FieldScalar::Rational(_) => FieldScalar::Rational(BigRational::from_integer(c.clone())),
            FieldScalar::Prime { p, .. } => {
                let m = c.mod_floor(&BigInt::from(*p));
                FieldScalar::Prime { value: u64::try_from(m).expect("reduced mod p"), p: *p }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        match (self, other) {
            (FieldScalar::Rational(_), FieldScalar::Rational(_)) => Ok(()),
            (FieldScalar::Prime { p: a, .. }, FieldScalar::Prime { p: b, .. }) if a == b => Ok(()),
            _ => Err(BtError::FieldMismatch),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Prime { value: a, p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime { value: (a + b) % p, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Prime { value: a, p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime { value: mulmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(BtError::ZeroEvaluationPoint);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Prime { value, p } => FieldScalar::Prime { value: inv_mod(*value, *p), p: *p },
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(num_traits::pow(r.clone(), e as usize)),
            FieldScalar::Prime { value, p } => FieldScalar::Prime { value: pow_mod(*value, e as u64, *p), p: *p },
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Prime { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Commutative ring with a distinguished unit q. Elements are plain values;
/// the ring object carries whatever context (modulus, value of q) they need.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, k: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// q^k for any integer k.
    fn q_pow(&self, k: i32) -> Self::Elem;
    /// Image of a Laurent polynomial under S -> this ring.
    fn from_laurent(&self, a: &LaurentPoly) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn q_minus_qinv(&self) -> Self::Elem {
        self.sub(&self.q_pow(1), &self.q_pow(-1))
    }

    /// Inverse of a unit; None for non-units (in S the units are ±q^k).
    fn unit_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn describe(&self) -> String;
}

/// S itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn from_i64(&self, k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        lp_add(a, b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        -a
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul_ref(b)
    }
    fn q_pow(&self, k: i32) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }
    fn unit_inv(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        let mut it = a.terms();
        let (k, c) = it.next()?;
        if it.next().is_some() || !c.abs().is_one() {
            return None;
        }
        Some(LaurentPoly::from_terms([(-k, c.clone())]))
    }
    fn from_laurent(&self, a: &LaurentPoly) -> LaurentPoly {
        a.clone()
    }
}

/// GF(p) with q specialized to `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    q: u64,
    q_inv: u64,
}

impl PrimeField {
    pub fn new(p: u64, q0: i64) -> Result<Self> {
        if !is_prime(p) || p > (1 << 62) {
            return Err(BtError::NotPrime(p));
        }
        let q = q0.rem_euclid(p as i64) as u64;
        if q == 0 {
            return Err(BtError::ZeroEvaluationPoint);
        }
        Ok(PrimeField { p, q, q_inv: inv_mod(q, p) })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn q_value(&self) -> u64 {
        self.q
    }
}

impl Ring for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn q_pow(&self, k: i32) -> u64 {
        let base = if k >= 0 { self.q } else { self.q_inv };
        pow_mod(base, k.unsigned_abs() as u64, self.p)
    }
    fn unit_inv(&self, a: &u64) -> Option<u64> {
        self.inv(a)
    }
    fn from_laurent(&self, a: &LaurentPoly) -> u64 {
        let pb = BigInt::from(self.p);
        let mut acc = 0;
        for (k, c) in a.terms() {
            let c = u64::try_from(c.mod_floor(&pb)).expect("reduced");
            acc = self.add(&acc, &self.mul(&c, &self.q_pow(k)));
        }
        acc
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| inv_mod(*a, self.p))
    }
    fn describe(&self) -> String {
        format!("q={} mod {}", self.q, self.p)
    }
}

/// Q with q specialized to a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalField {
    q: BigRational,
    q_inv: BigRational,
}

impl RationalField {
    pub fn new(q0: BigRational) -> Result<Self> {
        if q0.is_zero() {
            return Err(BtError::ZeroEvaluationPoint);
        }
        Ok(RationalField { q_inv: q0.recip(), q: q0 })
    }
}

impl Ring for RationalField {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn q_pow(&self, k: i32) -> BigRational {
        let base = if k >= 0 { &self.q } else { &self.q_inv };
        num_traits::pow(base.clone(), k.unsigned_abs() as usize)
    }
    fn unit_inv(&self, a: &BigRational) -> Option<BigRational> {
        self.inv(a)
    }
    fn from_laurent(&self, a: &LaurentPoly) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in a.terms() {
            acc += BigRational::from_integer(c.clone()) * self.q_pow(k);
        }
        acc
    }
}

impl Field for RationalField {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn describe(&self) -> String {
        format!("q={} over Q", self.q)
    }
}

/// An evaluation point q -> q0 in some field; the unit of the "several
/// specializations" strategy used by the linear algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "field", rename_all = "lowercase")]
pub enum EvalPoint {
    Prime { p: u64, q0: i64 },
    Rational { num: i64, den: i64 },
}

impl EvalPoint {
    /// Two primes and one rational point; q0 = 1 is deliberately absent so the
    /// minimum over points is the generic value.
    pub fn default_points() -> Vec<EvalPoint> {
        vec![
            EvalPoint::Prime { p: 1_000_000_007, q0: 2 },
            EvalPoint::Prime { p: 1_000_000_007, q0: 3 },
            EvalPoint::Rational { num: 5, den: 7 },
        ]
    }

    pub fn as_scalar(&self) -> FieldScalar {
        match *self {
            EvalPoint::Prime { p, q0 } => FieldScalar::prime(q0, p),
            EvalPoint::Rational { num, den } => FieldScalar::rational(num, den),
        }
    }
}

/// Work that is generic over the field, run at a concrete evaluation point.
pub trait FieldTask {
    type Output;
    fn run<F: Field>(self, field: F) -> Self::Output;
}

impl EvalPoint {
    pub fn run<T: FieldTask>(&self, task: T) -> Result<T::Output> {
        match *self {
            EvalPoint::Prime { p, q0 } => Ok(task.run(PrimeField::new(p, q0)?)),
            EvalPoint::Rational { num, den } => {
                if den == 0 {
                    return Err(BtError::ZeroEvaluationPoint);
                }
                Ok(task.run(RationalField::new(BigRational::new(num.into(), den.into()))?))
            }
        }
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalPoint::Prime { p, q0 } => write!(f, "q={q0} mod {p}"),
            EvalPoint::Rational { num, den } => write!(f, "q={num}/{den}"),
        }
    }
}
