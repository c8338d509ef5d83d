//! Invariant checks shared by the property suite and the acceptance runner.
#![allow(dead_code)]

use hecke::arith::{gcd, hyperdistance, pdet, Mat2, Rat};
use hecke::dessin::build;
use hecke::projline::{
    act_s, act_t, act_u, crt_combine, crt_split, enumerate, from_lattice_label, normalize,
    to_lattice_label,
};

pub type Check = Result<(), String>;

/// S² = 1, U³ = 1 and T = S after U on every point of P¹(Z/NZ).
pub fn generator_relations(n: u64) -> Check {
    for p in enumerate(n).map_err(|e| e.to_string())? {
        if act_s(&act_s(&p)) != p {
            return Err(format!("S^2 moves {p:?}"));
        }
        if act_u(&act_u(&act_u(&p))) != p {
            return Err(format!("U^3 moves {p:?}"));
        }
        if act_t(&p) != act_s(&act_u(&p)) {
            return Err(format!("T differs from U then S at {p:?}"));
        }
    }
    Ok(())
}

pub fn transitive(n: u64) -> Check {
    let d = build(n).map_err(|e| e.to_string())?;
    d.is_connected()
        .then_some(())
        .ok_or_else(|| format!("<S, U> not transitive on P1(Z/{n}Z)"))
}

/// The CRT bijection P¹(Z/MNZ) ≅ P¹(Z/MZ) × P¹(Z/NZ) commutes with S and U.
pub fn crt_equivariance(m: u64, n: u64) -> Check {
    if gcd(m, n) != 1 {
        return Ok(());
    }
    let points = enumerate(m * n).map_err(|e| e.to_string())?;
    let mut images = std::collections::HashSet::new();
    for p in points.iter() {
        let (a, b) = crt_split(p, m, n).map_err(|e| e.to_string())?;
        if crt_combine(&a, &b).map_err(|e| e.to_string())? != *p {
            return Err(format!("CRT round trip fails at {p:?}"));
        }
        let (sa, sb) = crt_split(&act_s(p), m, n).map_err(|e| e.to_string())?;
        let (ua, ub) = crt_split(&act_u(p), m, n).map_err(|e| e.to_string())?;
        if (sa, sb) != (act_s(&a), act_s(&b)) || (ua, ub) != (act_u(&a), act_u(&b)) {
            return Err(format!("CRT split of {p:?} does not commute with S, U"));
        }
        images.insert((a, b));
    }
    if images.len() != points.len() {
        return Err(format!("CRT split not injective for ({m}, {n})"));
    }
    Ok(())
}

pub fn label_round_trip(n: u64) -> Check {
    for p in enumerate(n).map_err(|e| e.to_string())? {
        let label = to_lattice_label(&p);
        let back = from_lattice_label(&label, n).map_err(|e| format!("{label}: {e}"))?;
        if back != p {
            return Err(format!("{p:?} -> {label} -> {back:?}"));
        }
    }
    Ok(())
}

pub fn sl2z(a: i64, b: i64, c: i64, d: i64) -> Option<Mat2> {
    (a * d - b * c == 1).then(|| Mat2::from_ints(a, b, c, d))
}

/// A random element of SL₂(Z) as a word in S and the translations.
pub fn sl2z_word(steps: &[(bool, i64)]) -> Mat2 {
    let mut g = Mat2::identity();
    for &(use_s, k) in steps {
        let m = if use_s {
            Mat2::s()
        } else {
            Mat2::from_ints(1, k, 0, 1)
        };
        g = g.mul(&m);
    }
    g
}

/// Pdet(γ m γ') = Pdet(m) and Pdet(λ m) = Pdet(m).
pub fn pdet_invariance(m: &Mat2, left: &Mat2, right: &Mat2, scale: &Rat) -> Check {
    let base = pdet(m).map_err(|e| e.to_string())?;
    let moved = pdet(&left.mul(m).mul(right)).map_err(|e| e.to_string())?;
    let scaled = pdet(&m.scale(scale)).map_err(|e| e.to_string())?;
    if base != moved || base != scaled {
        return Err(format!("Pdet {m:?}: {base} vs {moved} vs {scaled}"));
    }
    Ok(())
}

pub fn hyperdistance_symmetry(g1: &Mat2, g2: &Mat2) -> Check {
    let a = hyperdistance(g1, g2).map_err(|e| e.to_string())?;
    let b = hyperdistance(g2, g1).map_err(|e| e.to_string())?;
    (a == b)
        .then_some(())
        .ok_or_else(|| format!("hyperdistance {g1:?}, {g2:?}: {a} vs {b}"))
}

/// Upper-triangular lattice matrix (M b; 0 1) from small integers.
pub fn lattice_matrix(num: i64, den: i64, b_num: i64) -> Mat2 {
    let den = den.max(1);
    Mat2::new(
        Rat::new(num.abs().max(1), den),
        Rat::new(b_num.rem_euclid(den), den),
        Rat::zero(),
        Rat::one(),
    )
}

pub fn point(c: i64, d: i64, n: u64) -> hecke::projline::ProjPoint {
    normalize(c, d, n).expect("valid point")
}
