//! Exact integer and rational arithmetic.
//!
//! Small integers (levels, residues, primes) are machine words; everything
//! that can grow without bound (matrix entries, polynomial coefficients) goes
//! through [`Rat`], an always-reduced arbitrary precision rational.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Default limit of the trial-division prime table.
pub const DEFAULT_SIEVE_BOUND: u64 = 1_000_000;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// `a * b mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Reduces a signed integer into `[0, m)`.
#[inline]
pub fn reduce(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

/// Prime factorization `n = ∏ pᵉ`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = alloc::vec![1u64];
        for &(p, e) in &self.0 {
            let current = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..current {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// A table of primes used for trial division.
///
/// Integers up to `bound²` can be factored; larger inputs are rejected.
#[derive(Debug, Clone)]
pub struct Sieve {
    bound: u64,
    primes: Vec<u64>,
}

impl Sieve {
    pub fn new(bound: u64) -> Self {
        Sieve {
            bound,
            primes: primes_up_to(bound),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        check_in_range(n, self.bound)?;
        let mut n = n;
        let mut out = Vec::new();
        for &p in &self.primes {
            if p * p > n {
                break;
            }
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        if n > 1 {
            out.push((n, 1));
        }
        Ok(Factorization(out))
    }
}

fn check_in_range(n: u64, bound: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if (n as u128) > (bound as u128) * (bound as u128) {
        return Err(Error::BeyondSieveBound { n, bound });
    }
    Ok(())
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = alloc::vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Factorizes `n` by trial division, accepting `n ≤ DEFAULT_SIEVE_BOUND²`.
pub fn factorize(n: u64) -> Result<Factorization> {
    check_in_range(n, DEFAULT_SIEVE_BOUND)?;
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(Factorization(out))
}

pub fn is_prime(n: u64) -> bool {
    match factorize(n) {
        Ok(f) => f.pairs() == [(n, 1)],
        Err(_) => false,
    }
}

/// Euler's totient, from the factorization.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(|a|, |b|)` and
/// `a·x + b·y = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    if old_r == 0 {
        return (0, 0, 0);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// [`ext_gcd`] on arbitrary precision integers, same iteration.
pub fn ext_gcd_big(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    if old_r.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % m) as i64, m as i64);
    (g == 1).then(|| reduce(x, m))
}

/// Chinese remainder for two coprime moduli; result in `[0, m1·m2)`.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> Result<u64> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::Zero);
    }
    if gcd(m1, m2) != 1 {
        return Err(Error::NotCoprime(m1, m2));
    }
    let m = m1 as u128 * m2 as u128;
    let (r1, r2) = ((r1 % m1) as u128, (r2 % m2) as u128);
    // x = r1 + m1·k with k ≡ (r2 − r1)·m1⁻¹ (mod m2)
    let inv = mod_inverse(m1 % m2, m2).unwrap_or(0) as u128;
    let diff = (r2 + m2 as u128 - r1 % m2 as u128) % m2 as u128;
    let k = diff * inv % m2 as u128;
    Ok(((r1 + m1 as u128 * k) % m) as u64)
}

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rat(BigRational::new(numer, denom))
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `self − ⌊self⌋`, in `[0, 1)`.
    pub fn fract_nonneg(&self) -> Self {
        Rat(&self.0 - self.0.floor())
    }

    pub fn pow(&self, e: u32) -> Self {
        Rat(num_traits::pow(self.0.clone(), e as usize))
    }

    /// Always `p/q`, including `q = 1`.
    pub fn to_fraction_string(&self) -> String {
        let mut s = self.numer().to_string();
        s.push('/');
        s.push_str(&self.denom().to_string());
        s
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::format!("not a rational: {s:?}"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::from_bigints(n, d))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_integer(n)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// A 2×2 rational matrix `(a b; c d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

impl Mat2 {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    /// `S = (0 −1; 1 0)`.
    pub fn s() -> Self {
        Mat2::from_ints(0, -1, 1, 0)
    }

    /// `U = (0 −1; 1 −1)`.
    pub fn u() -> Self {
        Mat2::from_ints(0, -1, 1, -1)
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    pub fn entries(&self) -> [&Rat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Mat2::new(k * &self.a, k * &self.b, k * &self.c, k * &self.d)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let inv = det.recip();
        Some(Mat2::new(
            &self.d * &inv,
            -(&self.b * &inv),
            -(&self.c * &inv),
            &self.a * &inv,
        ))
    }

    /// The least positive rational `α` such that `α·self` is integral.
    pub fn integrality_scale(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        let l = self
            .entries()
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let content = self
            .entries()
            .iter()
            .map(|e| (e.numer() * &l) / e.denom())
            .fold(BigInt::zero(), |acc, v| acc.gcd(&v));
        Some(Rat::from_bigints(l, content))
    }
}

/// Projective determinant `α² · det(m)`, `α` the least positive rational
/// making `α·m` integral. Invariant under rational scaling and under
/// multiplication by SL₂(Z) on either side.
pub fn pdet(m: &Mat2) -> Result<BigUint> {
    let det = m.det();
    if !det.is_positive() {
        return Err(Error::NotInGl2Plus);
    }
    let alpha = m.integrality_scale().ok_or(Error::NotInGl2Plus)?;
    let v = &alpha * &alpha * det;
    debug_assert!(v.is_integer());
    match v.numer().sign() {
        Sign::Plus => Ok(v.numer().magnitude().clone()),
        _ => Err(Error::NotInGl2Plus),
    }
}

/// Hyperdistance `Pdet(g1 · g2⁻¹)` between the projective lattices defined by
/// two matrices of GL₂⁺(Q).
pub fn hyperdistance(g1: &Mat2, g2: &Mat2) -> Result<BigUint> {
    if !g1.det().is_positive() || !g2.det().is_positive() {
        return Err(Error::NotInGl2Plus);
    }
    let inv = g2.inverse().ok_or(Error::NotInGl2Plus)?;
    pdet(&g1.mul(&inv))
}
