//! Cusps of Γ₀(N): the cycles of the translation `[c:d] ↦ [c+d:d]`, their
//! widths, the closed-form census, and the Dirichlet series of the cusp
//! count.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{euler_phi, factorize, gcd, is_prime, primes_up_to};
use crate::dessin::{cycle_decomposition, Dessin};
use crate::projline::ProjPoint;
use crate::{Error, Result};

/// A cycle of the cusp permutation, starting at its least member in `(d, c)`
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cusp {
    pub members: Vec<ProjPoint>,
    pub width: u64,
}

/// Multiset of cusp widths: width ↦ number of cusps of that width.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WidthSpectrum(BTreeMap<u64, u64>);

impl WidthSpectrum {
    pub fn from_widths<I: IntoIterator<Item = u64>>(widths: I) -> Self {
        let mut s = WidthSpectrum::default();
        for w in widths {
            s.add(w, 1);
        }
        s
    }

    pub fn add(&mut self, width: u64, count: u64) {
        if count > 0 {
            *self.0.entry(width).or_insert(0) += count;
        }
    }

    /// `(width, count)` pairs by increasing width.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&w, &c)| (w, c))
    }

    pub fn count_of(&self, width: u64) -> u64 {
        self.0.get(&width).copied().unwrap_or(0)
    }

    pub fn cusp_count(&self) -> u64 {
        self.0.values().sum()
    }

    /// Σ width·count, which equals the index.
    pub fn total_width(&self) -> u64 {
        self.0.iter().map(|(w, c)| w * c).sum()
    }

    pub fn widths(&self) -> impl Iterator<Item = u64> + '_ {
        self.0
            .iter()
            .flat_map(|(&w, &c)| core::iter::repeat_n(w, c as usize))
    }

    /// The multiset `{a·b}` over all pairs.
    pub fn product(&self, other: &WidthSpectrum) -> WidthSpectrum {
        let mut out = WidthSpectrum::default();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add(a * b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for WidthSpectrum {
    /// `{16:1, 4:1, 1:4}`, widths decreasing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, c)) in self.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}:{c}")?;
        }
        f.write_str("}")
    }
}

pub fn enumerate_cusps(d: &Dessin) -> Vec<Cusp> {
    cycle_decomposition(&d.cusp_permutation())
        .into_iter()
        .map(|cycle| Cusp {
            width: cycle.len() as u64,
            members: cycle.into_iter().map(|i| d.edges()[i]).collect(),
        })
        .collect()
}

/// `|C(N)| = Σ_{d|N} φ(gcd(d, N/d))`.
pub fn cusp_count(level: u64) -> Result<u64> {
    factorize(level)?
        .divisors()
        .into_iter()
        .map(|d| euler_phi(gcd(d, level / d)))
        .sum()
}

/// Each divisor `d = ∏ pᵝ` of `N = ∏ pᵅ` contributes `φ(gcd(d, N/d))` cusps
/// of width `∏ max(1, p^(α−2β))`.
pub fn width_spectrum(level: u64) -> Result<WidthSpectrum> {
    let f = factorize(level)?;
    let mut spectrum = WidthSpectrum::default();
    for d in f.divisors() {
        let width: u64 = f
            .iter()
            .map(|(p, alpha)| {
                let beta = (0..alpha).take_while(|&b| d % p.pow(b + 1) == 0).count() as u32;
                p.pow(alpha.saturating_sub(2 * beta))
            })
            .product();
        spectrum.add(width, euler_phi(gcd(d, level / d))?);
    }
    Ok(spectrum)
}

/// Checks `C(MN) = C(M) × C(N)` on counts and on width multisets.
pub fn cusp_count_is_multiplicative_check(m: u64, n: u64) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let mn = m.saturating_mul(n);
    let counts = cusp_count(mn)? == cusp_count(m)? * cusp_count(n)?;
    let widths = width_spectrum(mn)? == width_spectrum(m)?.product(&width_spectrum(n)?);
    Ok(counts && widths)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `c(p^0), …, c(p^K)` from the closed forms `c(p^{2a+1}) = 2pᵃ` and
/// `c(p^{2a}) = p^{a−1}(p+1)`.
pub fn euler_factor_coeffs(p: u64, order: usize) -> Result<Vec<BigInt>> {
    check_prime(p)?;
    let p = BigInt::from(p);
    Ok((0..=order)
        .map(|k| {
            let a = k / 2;
            if k == 0 {
                BigInt::one()
            } else if k % 2 == 1 {
                BigInt::from(2) * num_traits::pow(p.clone(), a)
            } else {
                num_traits::pow(p.clone(), a - 1) * (&p + 1)
            }
        })
        .collect())
}

/// Coefficients of `(1 + q)² / (1 − p q²)` through `q^K`, by power-series
/// division.
pub fn euler_factor_closed_form_series(p: u64, order: usize) -> Result<Vec<BigInt>> {
    check_prime(p)?;
    let num = [BigInt::one(), BigInt::from(2), BigInt::one()];
    let den = [BigInt::one(), BigInt::zero(), -BigInt::from(p)];
    Ok(power_series_div(&num, &den, order))
}

/// Quotient of two power series with `den[0] = ±1`, truncated at `order`.
fn power_series_div(num: &[BigInt], den: &[BigInt], order: usize) -> Vec<BigInt> {
    assert!(den[0] == BigInt::one() || den[0] == -BigInt::one());
    let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut acc = num.get(i).cloned().unwrap_or_default();
        for j in 1..=i.min(den.len() - 1) {
            acc -= &den[j] * &q[i - j];
        }
        q.push(acc * &den[0]);
    }
    q
}

fn powi(x: f64, e: u32) -> f64 {
    let (mut base, mut e, mut acc) = (x, e, 1.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// ζ(s) for integer `s ≥ 2` by summing `n^{-s}` for `n < 64` and closing
/// with Euler–Maclaurin through the B₈ term. Returns the value and a bound
/// on the truncation error (the magnitude of the first omitted term).
pub fn zeta_with_bound(s: u32) -> (f64, f64) {
    assert!(s >= 2, "zeta series needs s >= 2");
    const M: u32 = 64;
    let sf = s as f64;
    let m = M as f64;
    // small terms first
    let mut sum = 0.0;
    for n in (1..M).rev() {
        sum += 1.0 / powi(n as f64, s);
    }
    let m_s = powi(m, s);
    sum += m / ((sf - 1.0) * m_s) + 0.5 / m_s;
    // B_{2k}/(2k)! · s(s+1)…(s+2k−2) · M^{−s−2k+1}
    const BERNOULLI: [f64; 5] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0];
    let mut rising = sf; // s(s+1)…(s+2k−2)
    let mut factorial = 2.0; // (2k)!
    let mut m_pow = m_s * m; // M^{s+2k−1}
    let mut bound = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let term = b / factorial * rising / m_pow;
        if k + 1 == BERNOULLI.len() {
            bound = abs(term);
        } else {
            sum += term;
        }
        let k2 = 2.0 * (k as f64 + 1.0);
        rising *= (sf + k2 - 1.0) * (sf + k2);
        factorial *= (k2 + 1.0) * (k2 + 2.0);
        m_pow *= m * m;
    }
    (sum, bound)
}

pub fn zeta(s: u32) -> f64 {
    zeta_with_bound(s).0
}

/// ∏_{p ≤ P} (1 + p^{−s})² / (1 − p^{1−2s}), primes in increasing order.
pub fn euler_product(s: u32, prime_bound: u64) -> f64 {
    primes_up_to(prime_bound)
        .into_iter()
        .map(|p| {
            let p = p as f64;
            let ps = powi(p, s);
            let head = 1.0 + 1.0 / ps;
            head * head / (1.0 - p / (ps * ps))
        })
        .product()
}

/// ζ(2s−1)·ζ(s)²/ζ(2s)², the closed form of L(c, s).
pub fn cusp_l_series_zeta_form(s: u32) -> f64 {
    let ratio = zeta(s) / zeta(2 * s);
    zeta(2 * s - 1) * ratio * ratio
}

/// `|euler_product(s, P) − ζ(2s−1)ζ(s)²/ζ(2s)²|`.
pub fn zeta_identity_residual(s: u32, prime_bound: u64) -> f64 {
    assert!(s >= 2 && prime_bound >= 2);
    abs(euler_product(s, prime_bound) - cusp_l_series_zeta_form(s))
}

/// Σ_{n ≤ T} c(n)/nˢ. Diagnostic only, converges slowly.
pub fn dirichlet_partial_sum(s: u32, terms: u64) -> Result<f64> {
    let mut sum = 0.0;
    for n in 1..=terms {
        sum += cusp_count(n)? as f64 / powi(n as f64, s);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessin::build;
    use crate::projline::normalize;
    use alloc::string::ToString;

    #[test]
    fn cusps_of_eight() {
        let d = build(8).unwrap();
        let cusps = enumerate_cusps(&d);
        let target = normalize(1, 6, 8).unwrap();
        let c = cusps.iter().find(|c| c.members.contains(&target)).unwrap();
        assert_eq!(c.width, 2);
        assert_eq!(c.members, [normalize(1, 2, 8).unwrap(), target]);
    }

    #[test]
    fn prime_levels_have_two_cusps() {
        for p in primes_up_to(100) {
            let cusps = enumerate_cusps(&build(p).unwrap());
            let w: Vec<u64> = cusps.iter().map(|c| c.width).collect();
            assert_eq!(w.len(), 2);
            assert!(w.contains(&p) && w.contains(&1));
        }
    }

    #[test]
    fn cusps_of_twelve() {
        let cusps = enumerate_cusps(&build(12).unwrap());
        let spectrum = WidthSpectrum::from_widths(cusps.iter().map(|c| c.width));
        assert_eq!(spectrum, WidthSpectrum::from_widths([12, 4, 3, 3, 1, 1]));
    }

    #[test]
    fn census_examples() {
        assert_eq!(cusp_count(1), Ok(1));
        assert_eq!(cusp_count(8), Ok(4));
        assert_eq!(cusp_count(18), Ok(8));
        assert_eq!(
            width_spectrum(16).unwrap(),
            WidthSpectrum::from_widths([16, 4, 1, 1, 1, 1])
        );
        assert_eq!(
            width_spectrum(6).unwrap(),
            WidthSpectrum::from_widths([6, 3, 2, 1])
        );
        assert_eq!(width_spectrum(16).unwrap().to_string(), "{16:1, 4:1, 1:4}");
    }

    #[test]
    fn multiplicativity() {
        assert_eq!(cusp_count_is_multiplicative_check(2, 3), Ok(true));
        assert_eq!(
            width_spectrum(2)
                .unwrap()
                .product(&width_spectrum(3).unwrap()),
            WidthSpectrum::from_widths([6, 3, 2, 1])
        );
        for n in 1..50 {
            assert_eq!(cusp_count_is_multiplicative_check(1, n), Ok(true));
        }
        assert_eq!(
            cusp_count_is_multiplicative_check(2, 4),
            Err(Error::NotCoprime(2, 4))
        );
    }

    #[test]
    fn euler_factors() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(
            euler_factor_coeffs(2, 5).unwrap(),
            ints(&[1, 2, 3, 4, 6, 8])
        );
        assert_eq!(euler_factor_coeffs(3, 3).unwrap(), ints(&[1, 2, 4, 6]));
        assert_eq!(
            euler_factor_closed_form_series(2, 5).unwrap(),
            ints(&[1, 2, 3, 4, 6, 8])
        );
        for p in primes_up_to(60) {
            assert_eq!(euler_factor_coeffs(p, 1).unwrap()[1], BigInt::from(2));
            assert_eq!(euler_factor_closed_form_series(p, 0).unwrap(), ints(&[1]));
            // c(p^k) against the divisor-sum census
            for (k, c) in euler_factor_coeffs(p, 4).unwrap().iter().enumerate() {
                if let Some(pk) = p.checked_pow(k as u32).filter(|&v| v < 2_000_000) {
                    assert_eq!(*c, BigInt::from(cusp_count(pk).unwrap()));
                }
            }
        }
        assert_eq!(euler_factor_coeffs(4, 3), Err(Error::NotPrime(4)));
        assert_eq!(
            euler_factor_closed_form_series(1, 3),
            Err(Error::NotPrime(1))
        );
    }

    #[test]
    fn zeta_values_against_known_closed_forms() {
        // ζ(2) = π²/6, ζ(4) = π⁴/90
        let pi = core::f64::consts::PI;
        let (z2, b2) = zeta_with_bound(2);
        assert!(abs(z2 - pi * pi / 6.0) < 1e-13, "{z2}");
        assert!(b2 < 1e-13);
        assert!(abs(zeta(4) - pi * pi * pi * pi / 90.0) < 1e-13);
    }

    #[test]
    fn residual_shrinks_with_prime_bound() {
        assert!(zeta_identity_residual(2, 1_000) > zeta_identity_residual(2, 100_000));
    }

    #[test]
    fn dirichlet_partial_sum_approaches_limit() {
        let partial = dirichlet_partial_sum(3, 2000).unwrap();
        assert!(abs(partial - cusp_l_series_zeta_form(3)) < 1e-5);
    }
}
