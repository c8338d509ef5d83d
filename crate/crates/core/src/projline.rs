//! The projective line P¹(Z/NZ) and its identification with the projective
//! lattices at hyperdistance N from L₁.
//!
//! A point `[c:d]` is the free rank-one submodule of (Z/NZ)² generated by
//! `(c, d)`, so `(c, d)` and `(uc, ud)` name the same point for every unit
//! `u`. Points are always stored as the canonical representative: among the
//! unit multiples, the one with the least `d`, then the least `c`.
//!
//! The modular group acts on the right through
//!
//! ```text
//! [c:d]·S = [d : −c]        [c:d]·U = [d : −(c+d)]        [c:d]·T = [c+d : d]
//! ```
//!
//! with `T = US` (apply `U`, then `S`).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{self, ext_gcd, ext_gcd_big, gcd, mod_inverse, mul_mod, reduce, Mat2, Rat};
use crate::{Error, Result};

/// A point of P¹(Z/NZ), held in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    modulus: u64,
    c: u64,
    d: u64,
}

impl ProjPoint {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `[1:0]`, the edge of the cusp at infinity.
    pub fn infinity(modulus: u64) -> Result<Self> {
        normalize(1, 0, modulus)
    }

    /// `[0:1]`, the edge of the lattice L_N.
    pub fn zero(modulus: u64) -> Result<Self> {
        normalize(0, 1, modulus)
    }

    /// Image of the point under `P¹(Z/NZ) → P¹(Z/kZ)` for `k | N`.
    pub fn reduce_to(&self, divisor: u64) -> Result<ProjPoint> {
        if divisor == 0 || !self.modulus.is_multiple_of(divisor) {
            return Err(Error::NotADivisor {
                divisor,
                level: self.modulus,
            });
        }
        Ok(canonical_unchecked(
            self.c % divisor,
            self.d % divisor,
            divisor,
        ))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.modulus, self.d, self.c).cmp(&(other.modulus, other.d, other.c))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.c, self.d)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]_{}", self.c, self.d, self.modulus)
    }
}

/// Canonical representative of an already reduced pair with
/// `gcd(c, d, n) = 1`.
fn canonical_unchecked(c: u64, d: u64, n: u64) -> ProjPoint {
    if n == 1 {
        return ProjPoint {
            modulus: 1,
            c: 0,
            d: 1,
        };
    }
    // The unit orbit of d is {x : gcd(x, n) = g}, whose least element is g.
    // Units with u·d ≡ g are exactly the units in u0 + (n/g)Z.
    let g = gcd(d, n);
    let step = n / g;
    let d1 = (d / g) % step;
    let mut u0 = mod_inverse(d1, step).expect("d/g is a unit mod n/g");
    while gcd(u0, n) != 1 {
        u0 += step;
    }
    let mut best = u64::MAX;
    let mut u = u0 % n;
    for _ in 0..g {
        if gcd(u, n) == 1 {
            best = best.min(mul_mod(c, u, n));
        }
        u = (u + step) % n;
    }
    ProjPoint {
        modulus: n,
        c: best,
        d: g % n,
    }
}

/// Reduces `(c, d)` modulo `n` and returns the canonical representative of
/// its class.
pub fn normalize(c: i64, d: i64, n: u64) -> Result<ProjPoint> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let (cr, dr) = (reduce(c, n), reduce(d, n));
    if n > 1 && gcd(gcd(cr, dr), n) != 1 {
        return Err(Error::NotAPoint { c, d, modulus: n });
    }
    Ok(canonical_unchecked(cr, dr, n))
}

/// `[c:d]` from residues `c, d ∈ [0, n)` already known to define a point.
fn from_residues(c: u64, d: u64, n: u64) -> ProjPoint {
    debug_assert!(n == 1 || gcd(gcd(c, d), n) == 1);
    canonical_unchecked(c % n, d % n, n)
}

/// `|P¹(Z/NZ)| = N ∏_{p|N} (1 + 1/p)`, the index of Γ₀(N) in PSL₂(Z).
pub fn index(n: u64) -> Result<u64> {
    Ok(arith::factorize(n)?
        .iter()
        .map(|(p, e)| (p + 1) * p.pow(e - 1))
        .product())
}

/// All points of P¹(Z/NZ), sorted by `(d, c)`.
pub fn enumerate(n: u64) -> Result<Vec<ProjPoint>> {
    let f = arith::factorize(n)?;
    if n == 1 {
        return Ok(alloc::vec![canonical_unchecked(0, 1, 1)]);
    }
    let mut points = Vec::new();
    let mut seen = alloc::vec![false; n as usize];
    // canonical d-values are exactly the divisors g of n (g = n stored as 0);
    // c is canonical when least in its orbit under the units fixing g
    for g in f.divisors() {
        let step = n / g;
        let stabilizer: Vec<u64> = (0..g)
            .map(|k| (1 + k * step) % n)
            .filter(|&u| gcd(u, n) == 1)
            .collect();
        seen.iter_mut().for_each(|s| *s = false);
        for c in 0..n {
            if seen[c as usize] || gcd(c, g) != 1 {
                continue;
            }
            for &u in &stabilizer {
                seen[mul_mod(c, u, n) as usize] = true;
            }
            points.push(ProjPoint {
                modulus: n,
                c,
                d: g % n,
            });
        }
    }
    points.sort();
    Ok(points)
}

pub fn act_s(pt: &ProjPoint) -> ProjPoint {
    let n = pt.modulus;
    from_residues(pt.d, (n - pt.c) % n, n)
}

pub fn act_u(pt: &ProjPoint) -> ProjPoint {
    let n = pt.modulus;
    let sum = (pt.c + pt.d) % n;
    from_residues(pt.d, (n - sum) % n, n)
}

pub fn act_t(pt: &ProjPoint) -> ProjPoint {
    let n = pt.modulus;
    from_residues((pt.c + pt.d) % n, pt.d, n)
}

/// Splits a point mod `m·n` into its reductions mod `m` and mod `n`.
pub fn crt_split(pt: &ProjPoint, m: u64, n: u64) -> Result<(ProjPoint, ProjPoint)> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    if m.checked_mul(n) != Some(pt.modulus) {
        return Err(Error::NotADivisor {
            divisor: m,
            level: pt.modulus,
        });
    }
    Ok((pt.reduce_to(m)?, pt.reduce_to(n)?))
}

/// Inverse of [`crt_split`].
pub fn crt_combine(p1: &ProjPoint, p2: &ProjPoint) -> Result<ProjPoint> {
    let (m, n) = (p1.modulus, p2.modulus);
    let c = arith::crt_pair(p1.c, m, p2.c, n)?;
    let d = arith::crt_pair(p1.d, m, p2.d, n)?;
    Ok(from_residues(c, d, m * n))
}

/// Conway's name L_{M,b} of a projective lattice: the coset of
/// `(M b; 0 1)` with `M > 0` and `0 ≤ b < 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeLabel {
    m: Rat,
    b: Rat,
}

impl LatticeLabel {
    pub fn new(m: Rat, b: Rat) -> Result<Self> {
        if !m.is_positive() || b.is_negative() || b >= Rat::one() {
            return Err(Error::Parse(alloc::format!(
                "L_{{{m},{b}}} is not a canonical lattice name"
            )));
        }
        Ok(LatticeLabel { m, b })
    }

    pub fn m(&self) -> &Rat {
        &self.m
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.m.clone(), self.b.clone(), Rat::zero(), Rat::one())
    }

    /// Label of the coset PSL₂(Z)·g for any `g` in GL₂⁺(Q).
    pub fn of_matrix(g: &Mat2) -> Result<Self> {
        if g.is_zero() || !g.det().is_positive() {
            return Err(Error::NotInGl2Plus);
        }
        // Integral coprime (s, t) with s·a + t·c = 0.
        let (s, t) = if g.c.is_zero() {
            (BigInt::zero(), BigInt::from(1))
        } else if g.a.is_zero() {
            (BigInt::from(1), BigInt::zero())
        } else {
            let r = -(&g.c / &g.a);
            (r.numer().clone(), r.denom().clone())
        };
        // (m n; s t) ∈ SL₂(Z): m·t − n·s = 1.
        let (one, m, n) = ext_gcd_big(&t, &(-&s));
        debug_assert!(one == BigInt::from(1));
        let (m, n, s, t) = (Rat::from(m), Rat::from(n), Rat::from(s), Rat::from(t));
        let a1 = &m * &g.a + &n * &g.c;
        let b1 = &m * &g.b + &n * &g.d;
        let d1 = &s * &g.b + &t * &g.d;
        debug_assert!((&s * &g.a + &t * &g.c).is_zero());
        let big_m = &a1 / &d1;
        let b = (&b1 / &d1).fract_nonneg();
        LatticeLabel::new(big_m, b)
    }
}

impl fmt::Display for LatticeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "L_{{{}}}", self.m)
        } else {
            write!(f, "L_{{{},{}}}", self.m, self.b)
        }
    }
}

impl fmt::Debug for LatticeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LatticeLabel {
    type Err = Error;

    /// Parses `M`, `M,b`, or the displayed form `L_{M,b}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches("L_")
            .trim_start_matches('{')
            .trim_end_matches('}');
        let (m, b) = match inner.split_once(',') {
            Some((m, b)) => (m.parse()?, b.parse()?),
            None => (inner.parse()?, Rat::zero()),
        };
        LatticeLabel::new(m, b)
    }
}

/// A representative `(c, d)` of the class with `gcd(c, d) = 1` over Z.
fn coprime_lift(pt: &ProjPoint) -> (u64, u64) {
    let n = pt.modulus;
    if n == 1 {
        return (0, 1);
    }
    if gcd(pt.c, pt.d) == 1 {
        return (pt.c, pt.d);
    }
    for u in (1..n).filter(|&u| gcd(u, n) == 1) {
        let (c, d) = (mul_mod(pt.c, u, n), mul_mod(pt.d, u, n));
        if gcd(c, d) == 1 {
            return (c, d);
        }
    }
    // lifting c by multiples of n always reaches a coprime pair
    let mut c = pt.c;
    while gcd(c, pt.d) != 1 {
        c += n;
    }
    (c, pt.d)
}

/// The integral matrix `(N·a N·b; c d)`, `ad − bc = 1`, whose row lattice is
/// the index-N sublattice of Z² attached to `pt`.
pub fn lattice_matrix(pt: &ProjPoint) -> Mat2 {
    let n = pt.modulus as i64;
    let (c, d) = coprime_lift(pt);
    let (c, d) = (c as i64, d as i64);
    let (g, a, b) = ext_gcd(d, -c);
    debug_assert_eq!(g, 1);
    Mat2::from_ints(n * a, n * b, c, d)
}

pub fn to_lattice_label(pt: &ProjPoint) -> LatticeLabel {
    LatticeLabel::of_matrix(&lattice_matrix(pt)).expect("lattice matrices have determinant N")
}

/// The point of P¹(Z/NZ) named by `label`.
pub fn from_lattice_label(label: &LatticeLabel, n: u64) -> Result<ProjPoint> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let m = label.matrix();
    let distance = arith::pdet(&m)?;
    if distance != n.into() {
        return Err(Error::WrongHyperdistance {
            expected: n,
            got: alloc::format!("{distance}"),
        });
    }
    // Minimal integral rows (A, B), (0, D) with A·D = N span the lattice; its
    // reduction mod N is generated by some (A, B + yD).
    let alpha = m.integrality_scale().ok_or(Error::NotInGl2Plus)?;
    let residue = |r: Rat| -> u64 {
        debug_assert!(r.is_integer());
        r.numer()
            .mod_floor(&BigInt::from(n))
            .to_u64()
            .expect("residue fits")
    };
    let a = residue(&alpha * label.m());
    let b = residue(&alpha * label.b());
    let d = residue(alpha.clone());
    for y in 0..n.max(1) {
        let second = (b + mul_mod(y, d, n)) % n;
        if n == 1 || gcd(gcd(a, second), n) == 1 {
            return Ok(from_residues(a, second, n));
        }
    }
    Err(Error::InternalInconsistency(alloc::format!(
        "no generator found for {label} mod {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pt(c: i64, d: i64, n: u64) -> ProjPoint {
        normalize(c, d, n).unwrap()
    }

    fn units(n: u64) -> impl Iterator<Item = u64> {
        (1..=n).filter(move |&u| gcd(u, n) == 1)
    }

    /// Minimum over the whole unit orbit, by exhaustion.
    fn brute_canonical(c: u64, d: u64, n: u64) -> (u64, u64) {
        units(n)
            .map(|u| (mul_mod(c, u, n), mul_mod(d, u, n)))
            .min_by_key(|&(c, d)| (d, c))
            .unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(pt(7, 6, 8).to_string(), "[1:2]");
        for n in 1..40 {
            let p = pt(0, 1, n);
            assert_eq!((p.c(), p.d()), (0, 1));
        }
        assert_eq!(
            normalize(2, 4, 6),
            Err(Error::NotAPoint {
                c: 2,
                d: 4,
                modulus: 6
            })
        );
        assert_eq!(normalize(1, 1, 0), Err(Error::Zero));
        assert_eq!(pt(-1, 6, 8), pt(1, 2, 8));
    }

    #[test]
    fn normalize_matches_exhaustive_orbit_minimum() {
        for n in 2..=60u64 {
            for c in 0..n {
                for d in 0..n {
                    if gcd(gcd(c, d), n) != 1 {
                        continue;
                    }
                    let p = pt(c as i64, d as i64, n);
                    assert_eq!((p.c(), p.d()), brute_canonical(c, d, n), "{c},{d} mod {n}");
                }
            }
        }
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(1).unwrap(), alloc::vec![pt(0, 1, 1)]);
        let six: Vec<(u64, u64)> = enumerate(6)
            .unwrap()
            .iter()
            .map(|p| (p.c(), p.d()))
            .collect();
        let mut expected = alloc::vec![
            (1, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (1, 2),
            (3, 2),
            (5, 2),
            (1, 3),
            (2, 3)
        ];
        expected.sort_by_key(|&(c, d)| (d, c));
        assert_eq!(six, expected);
    }

    #[test]
    fn enumerate_prime_powers() {
        for p in [2u64, 3, 5] {
            for a in 1..=4 {
                let n = p.pow(a);
                assert_eq!(enumerate(n).unwrap().len() as u64, (p + 1) * p.pow(a - 1));
            }
        }
    }

    #[test]
    fn enumerate_is_the_set_of_all_classes() {
        for n in 1..=40u64 {
            let mut brute: Vec<(u64, u64)> = (0..n)
                .flat_map(|c| (0..n).map(move |d| (c, d)))
                .filter(|&(c, d)| n == 1 || gcd(gcd(c, d), n) == 1)
                .map(|(c, d)| {
                    if n == 1 {
                        (0, 1)
                    } else {
                        brute_canonical(c, d, n)
                    }
                })
                .collect();
            brute.sort_by_key(|&(c, d)| (d, c));
            brute.dedup();
            let got: Vec<(u64, u64)> = enumerate(n)
                .unwrap()
                .iter()
                .map(|p| (p.c(), p.d()))
                .collect();
            assert_eq!(got, brute, "N={n}");
        }
    }

    #[test]
    fn generator_actions_on_eleven() {
        assert_eq!(act_s(&pt(0, 1, 11)), pt(1, 0, 11));
        assert_eq!(act_s(&pt(5, 1, 11)), pt(2, 1, 11));
        assert_eq!(act_u(&pt(0, 1, 11)), pt(10, 1, 11));
        assert_eq!(act_u(&pt(2, 1, 11)), pt(7, 1, 11));
        assert_eq!(act_u(&pt(1, 1, 11)), pt(5, 1, 11));
    }

    #[test]
    fn translation_examples() {
        assert_eq!(act_t(&pt(1, 6, 8)), pt(1, 2, 8));
        for n in 1..30 {
            let inf = ProjPoint::infinity(n).unwrap();
            assert_eq!(act_t(&inf), inf);
        }
        for k in 0..12 {
            assert_eq!(act_t(&pt(k, 1, 12)), pt(k + 1, 1, 12));
        }
    }

    #[test]
    fn crt_examples() {
        let (a, b) = crt_split(&pt(0, 1, 6), 2, 3).unwrap();
        assert_eq!((a, b), (pt(0, 1, 2), pt(0, 1, 3)));
        let combined = crt_combine(&pt(1, 0, 2), &pt(0, 1, 3)).unwrap();
        let scan: Vec<_> = enumerate(6)
            .unwrap()
            .into_iter()
            .filter(|p| {
                p.reduce_to(2).unwrap() == pt(1, 0, 2) && p.reduce_to(3).unwrap() == pt(0, 1, 3)
            })
            .collect();
        assert_eq!(scan, alloc::vec![combined]);
        let combined = crt_combine(&pt(1, 1, 2), &pt(1, 1, 3)).unwrap();
        assert_eq!(combined.reduce_to(2).unwrap(), pt(1, 1, 2));
        assert_eq!(combined.reduce_to(3).unwrap(), pt(1, 1, 3));
        assert!(crt_split(&pt(0, 1, 12), 2, 6).is_err());
        assert!(crt_combine(&pt(0, 1, 2), &pt(0, 1, 4)).is_err());
    }

    #[test]
    fn lattice_label_examples() {
        assert_eq!(to_lattice_label(&pt(1, 0, 6)).to_string(), "L_{1/6}");
        assert_eq!(to_lattice_label(&pt(2, 1, 6)).to_string(), "L_{2/3,1/3}");
        for n in 1..=30 {
            let l = to_lattice_label(&pt(0, 1, n));
            assert_eq!(
                (l.m().clone(), l.b().clone()),
                (Rat::from(n as i64), Rat::zero())
            );
        }
        let l: LatticeLabel = "1/6".parse().unwrap();
        assert_eq!(from_lattice_label(&l, 6).unwrap(), pt(1, 0, 6));
        let l: LatticeLabel = "L_{1/8,3/4}".parse().unwrap();
        assert_eq!(from_lattice_label(&l, 8).unwrap(), pt(1, 6, 8));
        assert!(matches!(
            from_lattice_label(&l, 6),
            Err(Error::WrongHyperdistance { expected: 6, .. })
        ));
    }

    #[test]
    fn lattice_label_parsing() {
        assert!("0".parse::<LatticeLabel>().is_err());
        assert!("1/2,1".parse::<LatticeLabel>().is_err());
        let l: LatticeLabel = "L_{2/3,1/3}".parse().unwrap();
        assert_eq!(l.to_string(), "L_{2/3,1/3}");
    }

    #[test]
    fn coprime_lift_is_coprime() {
        for n in 1..=80 {
            for p in enumerate(n).unwrap() {
                let (c, d) = coprime_lift(&p);
                assert_eq!(gcd(c, d), 1);
                assert_eq!(normalize(c as i64, d as i64, n).unwrap(), p);
            }
        }
    }
}
