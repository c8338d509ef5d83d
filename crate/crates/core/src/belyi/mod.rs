//! The genus-zero Belyi maps β₀,N and exact verification of their
//! ramification against the dessin B₀,N.

mod poly;
mod table;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

pub use poly::{poly_gcd, squarefree_decomposition, Poly};

use crate::arith::Rat;
use crate::cusps::{width_spectrum, WidthSpectrum};
use crate::dessin::{build, torsion2_count, torsion3_count, vertex_sets};
use crate::projline::index;
use crate::{Error, Result};

/// `constant · ∏ numerator_factors / ∏ denominator_factors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRationalFunction {
    pub constant: Rat,
    pub numerator_factors: Vec<(Poly, u32)>,
    pub denominator_factors: Vec<(Poly, u32)>,
}

impl FactoredRationalFunction {
    /// Expanded `P` with the numerator of the constant folded in.
    pub fn numerator(&self) -> Poly {
        expand(&self.numerator_factors).scale(&Rat::from(self.constant.numer().clone()))
    }

    /// Expanded `Q` with the denominator of the constant folded in.
    pub fn denominator(&self) -> Poly {
        expand(&self.denominator_factors).scale(&Rat::from(self.constant.denom().clone()))
    }

    /// Factor-by-factor evaluation; `None` at a pole.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let prod = |fs: &[(Poly, u32)]| {
            fs.iter()
                .fold(Rat::one(), |acc, (f, e)| &acc * &f.eval(t).pow(*e))
        };
        let den = prod(&self.denominator_factors);
        if den.is_zero() {
            return None;
        }
        Some(&(&self.constant * &prod(&self.numerator_factors)) / &den)
    }
}

fn expand(fs: &[(Poly, u32)]) -> Poly {
    fs.iter().fold(Poly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

impl fmt::Display for FactoredRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |c: &num_bigint::BigInt, fs: &[(Poly, u32)]| {
            let mut s = String::new();
            if !c.is_one() || fs.is_empty() {
                s.push_str(&c.to_string());
            }
            for (p, e) in fs {
                let body = if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    alloc::format!("({p})")
                } else {
                    p.to_string()
                };
                s.push_str(&body);
                if *e > 1 {
                    s.push_str(&alloc::format!("^{e}"));
                }
            }
            s
        };
        let num = side(self.constant.numer(), &self.numerator_factors);
        if self.constant.denom().is_one() && self.denominator_factors.is_empty() {
            return f.write_str(&num);
        }
        let den = side(self.constant.denom(), &self.denominator_factors);
        write!(f, "{num} / {den}")
    }
}

pub fn is_genus_zero_level(level: u64) -> bool {
    crate::GENUS_ZERO_LEVELS.contains(&level)
}

/// The tabulated map for `N ∈ I₀`, checked against its stored value at t=1.
pub fn belyi_table(level: u64) -> Result<FactoredRationalFunction> {
    let entry = table::TABLE
        .iter()
        .find(|e| e.level == level)
        .ok_or(Error::NotGenusZero(level))?;
    let factors = |fs: &[(&[i64], u32)]| -> Vec<(Poly, u32)> {
        fs.iter().map(|(c, e)| (Poly::from_ints(c), *e)).collect()
    };
    let map = FactoredRationalFunction {
        constant: Rat::new(entry.numerator_constant, entry.denominator_constant),
        numerator_factors: factors(entry.numerator),
        denominator_factors: factors(entry.denominator),
    };
    let stored: Rat = entry.value_at_one.parse()?;
    let evaluated = map.eval(&Rat::one());
    if evaluated.as_ref() != Some(&stored) {
        return Err(Error::TranscriptionMismatch {
            level,
            stored: stored.to_fraction_string(),
            evaluated: evaluated.map_or_else(|| "pole".into(), |v| v.to_fraction_string()),
        });
    }
    Ok(map)
}

/// One named comparison within a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub level: u64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Total degree of the factors of each multiplicity.
fn multiplicity_profile(f: &Poly) -> Result<BTreeMap<u32, usize>> {
    let mut out = BTreeMap::new();
    for (g, m) in squarefree_decomposition(f)? {
        *out.entry(m).or_insert(0) += g.degree().unwrap_or(0);
    }
    Ok(out)
}

fn profile_string(p: &BTreeMap<u32, usize>) -> String {
    let parts: Vec<String> = p.iter().map(|(m, d)| alloc::format!("{m}:{d}")).collect();
    alloc::format!("{{{}}}", parts.join(", "))
}

fn expected_profile(pairs: &[(u32, usize)]) -> BTreeMap<u32, usize> {
    pairs.iter().copied().filter(|&(_, d)| d > 0).collect()
}

/// Runs the degree, black, white, cusp and positivity checks for `N ∈ I₀`.
pub fn verify_belyi(level: u64) -> Result<VerificationReport> {
    let map = belyi_table(level)?;
    let p = map.numerator();
    let q = map.denominator();
    let deg_p = p.degree().ok_or(Error::ZeroPolynomial)?;
    let deg_q = q.degree().ok_or(Error::ZeroPolynomial)?;

    let dessin = build(level)?;
    let vs = vertex_sets(&dessin);
    let (white2, _, _) = vs.counts_of_length(2);
    let (_, black3, _) = vs.counts_of_length(3);
    let nu2 = torsion2_count(level)? as usize;
    let nu3 = torsion3_count(level)? as usize;
    let mut checks = Vec::new();

    let idx = index(level)?;
    let degree = deg_p.max(deg_q) as u64;
    checks.push(Check {
        name: "degree".into(),
        pass: degree == idx,
        expected: idx.to_string(),
        got: degree.to_string(),
    });

    let want = expected_profile(&[(1, nu3), (3, black3)]);
    let got = multiplicity_profile(&p)?;
    checks.push(Check {
        name: "black".into(),
        pass: got == want,
        expected: profile_string(&want),
        got: profile_string(&got),
    });

    let want = expected_profile(&[(1, nu2), (2, white2)]);
    let got = multiplicity_profile(&(&p - &q))?;
    checks.push(Check {
        name: "white".into(),
        pass: got == want,
        expected: profile_string(&want),
        got: profile_string(&got),
    });

    let want = width_spectrum(level)?;
    let mut poles = WidthSpectrum::default();
    for (g, m) in squarefree_decomposition(&q)? {
        poles.add(u64::from(m), g.degree().unwrap_or(0) as u64);
    }
    if deg_p > deg_q {
        poles.add((deg_p - deg_q) as u64, 1);
    }
    checks.push(Check {
        name: "cusps".into(),
        pass: poles == want,
        expected: want.to_string(),
        got: poles.to_string(),
    });

    let offending = p
        .coeffs()
        .iter()
        .chain(q.coeffs())
        .find(|c| !c.is_zero() && !poly::is_positive_integer(c));
    checks.push(Check {
        name: "positivity".into(),
        pass: offending.is_none(),
        expected: "all nonzero coefficients of P and Q positive integers".into(),
        got: match offending {
            None => "all nonzero coefficients of P and Q positive integers".into(),
            Some(c) => alloc::format!("coefficient {c}"),
        },
    });

    Ok(VerificationReport { level, checks })
}
