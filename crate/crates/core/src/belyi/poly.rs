//! Dense univariate polynomials over Q.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rat;
use crate::{Error, Result};

/// Coefficients lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(alloc::vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.leading().expect("nonzero").recip();
        let mut rem = self.0.clone();
        let mut quot = alloc::vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = rem.last().expect("nonempty") * &lead;
            for (i, c) in divisor.0.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&q * c);
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InternalInconsistency(alloc::format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Positive rational `c` with `self / c` a primitive integer polynomial
    /// (gcd of numerators over lcm of denominators).
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.0 {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rat::from_bigints(num, den)
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let p = self.scale(&self.content().recip());
        if p.leading().is_some_and(Rat::is_negative) {
            -p
        } else {
            p
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rat::is_integer)
    }
}

/// Monic gcd, via a primitive remainder sequence over Z.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.primitive_part();
    }
    Ok(a.monic())
}

/// Yun's algorithm: monic, squarefree, pairwise coprime `gᵢ` with
/// `f = lc(f)·∏ gᵢ^mᵢ`, multiplicities increasing.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = poly_gcd(f, &df)?;
    let mut b = f.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() != Some(0) {
        let a = poly_gcd(&b, &d)?;
        let next_b = b.div_exact(&a)?;
        let next_c = d.div_exact(&a)?;
        d = &next_c - &next_b.derivative();
        b = next_b;
        if a.degree() != Some(0) {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

impl fmt::Display for Poly {
    /// Highest degree first in the indeterminate `t`, e.g. `t^2 + 250t + 3125`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let first = s.is_empty();
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => s.push('-'),
                (false, true) => s.push_str(" - "),
                (false, false) => s.push_str(" + "),
                (true, false) => {}
            }
            let unit = mag == Rat::one();
            if i == 0 || !unit {
                if !mag.is_integer() && i > 0 {
                    write!(s, "({mag})")?;
                } else {
                    write!(s, "{mag}")?;
                }
            }
            match i {
                0 => {}
                1 => s.push('t'),
                _ => write!(s, "t^{i}")?,
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = alloc::vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

/// Integer coefficient as a BigInt, if integral.
pub(crate) fn integer_coeff(c: &Rat) -> Option<&BigInt> {
    c.is_integer().then(|| c.numer())
}

pub(crate) fn is_positive_integer(c: &Rat) -> bool {
    integer_coeff(c).is_some_and(|n| n.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&a.pow(2) - &p(&[1, 2, 1]), Poly::zero());
        assert_eq!(p(&[1, 3, 3, 1]).derivative(), p(&[3, 6, 3]));
        assert_eq!(p(&[256, 1]).eval(&Rat::from(1)), Rat::from(257));
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, -1, 1]), Poly::zero()));
        assert_eq!(p(&[1]).div_rem(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(p(&[3125, 250, 1]).to_string(), "t^2 + 250t + 3125");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "2t^3 - t");
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[6, 5, 1]).scale(&Rat::new(3, 2));
        assert_eq!(poly_gcd(&f, &Poly::zero()).unwrap(), f.monic());
        let a = &p(&[1, 1]).pow(2) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), p(&[1, 1]));
        assert_eq!(
            poly_gcd(&Poly::zero(), &Poly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_decomposition(&p(&[1, 1]).pow(3)).unwrap(),
            [(p(&[1, 1]), 3)]
        );
        let f = &p(&[0, 1]).pow(2) * &p(&[-1, 1]);
        assert_eq!(
            squarefree_decomposition(&f).unwrap(),
            [(p(&[-1, 1]), 1), (p(&[0, 1]), 2)]
        );
        assert!(squarefree_decomposition(&p(&[7])).unwrap().is_empty());
        assert_eq!(
            squarefree_decomposition(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }
}
