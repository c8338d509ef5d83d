//! The dessin d'enfant B₀,N = Γ₀(N)\B∞ as a pair of permutations of
//! P¹(Z/NZ).

use alloc::vec::Vec;

use crate::arith::factorize;
use crate::cusps::width_spectrum;
use crate::projline::{self, act_s, act_u, ProjPoint};
use crate::{Error, Result};

/// Edges `0..|E|` with the white rotation `x` (from S) and the black
/// rotation `y` (from U).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dessin {
    level: u64,
    edges: Vec<ProjPoint>,
    x: Vec<usize>,
    y: Vec<usize>,
}

/// Cycle decompositions of the three rotations of a dessin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub white: Vec<Vec<usize>>,
    pub black: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
}

impl VertexSet {
    /// Number of cycles of length `len` in each list (white, black, faces).
    pub fn counts_of_length(&self, len: usize) -> (usize, usize, usize) {
        let count = |cs: &[Vec<usize>]| cs.iter().filter(|c| c.len() == len).count();
        (count(&self.white), count(&self.black), count(&self.faces))
    }
}

pub fn build(level: u64) -> Result<Dessin> {
    let edges = projline::enumerate(level)?;
    let lookup = |p: ProjPoint| -> usize {
        edges
            .binary_search(&p)
            .expect("the generators permute P1(Z/NZ)")
    };
    let x = edges.iter().map(|e| lookup(act_s(e))).collect();
    let y = edges.iter().map(|e| lookup(act_u(e))).collect();
    Ok(Dessin { level, edges, x, y })
}

impl Dessin {
    /// Assembles a dessin from raw parts, checking that `x` is an
    /// involution, `y` has order dividing 3, and `⟨x, y⟩` is transitive.
    pub fn from_parts(
        level: u64,
        edges: Vec<ProjPoint>,
        x: Vec<usize>,
        y: Vec<usize>,
    ) -> Result<Dessin> {
        let n = edges.len();
        let bad = |msg: &str| Err(Error::Parse(alloc::format!("invalid dessin: {msg}")));
        if n == 0 || x.len() != n || y.len() != n {
            return bad("edge and permutation lengths disagree");
        }
        if !is_permutation(&x) || !is_permutation(&y) {
            return bad("x and y must be permutations of the edge indices");
        }
        if (0..n).any(|i| x[x[i]] != i) {
            return bad("x is not an involution");
        }
        if (0..n).any(|i| y[y[y[i]]] != i) {
            return bad("y^3 is not the identity");
        }
        if edges.iter().any(|e| e.modulus() != level) {
            return bad("edge modulus differs from level");
        }
        let d = Dessin { level, edges, x, y };
        if !d.is_connected() {
            return bad("<x, y> is not transitive");
        }
        Ok(d)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn edges(&self) -> &[ProjPoint] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.edges.binary_search(p).ok()
    }

    /// The cusp permutation "y, then x": `[c:d] ↦ [c+d:d]`.
    pub fn cusp_permutation(&self) -> Vec<usize> {
        self.y.iter().map(|&j| self.x[j]).collect()
    }

    /// Fixed points of `x`: the torsion points of order 2, by enumeration.
    pub fn white_fixed_points(&self) -> u64 {
        fixed_points(&self.x)
    }

    /// Fixed points of `y`: the torsion points of order 3, by enumeration.
    pub fn black_fixed_points(&self) -> u64 {
        fixed_points(&self.y)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            for j in [self.x[i], self.y[i]] {
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
        reached == n
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = alloc::vec![false; p.len()];
    p.iter()
        .all(|&i| i < p.len() && !core::mem::replace(&mut seen[i], true))
}

fn fixed_points(p: &[usize]) -> u64 {
    p.iter().enumerate().filter(|&(i, &j)| i == j).count() as u64
}

/// Disjoint cycles of a permutation. Cycles come in order of their least
/// element, and each cycle starts at its least element.
pub fn cycle_decomposition(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

pub fn vertex_sets(d: &Dessin) -> VertexSet {
    VertexSet {
        white: cycle_decomposition(&d.x),
        black: cycle_decomposition(&d.y),
        faces: cycle_decomposition(&d.cusp_permutation()),
    }
}

/// ν₂(N): number of solutions of x² = −1 in Z/NZ.
///
/// Zero when 4 | N or some odd prime factor is ≡ 3 (mod 4); otherwise 2ⁿ
/// with n the number of odd prime factors, whatever their exponents.
pub fn torsion2_count(level: u64) -> Result<u64> {
    let f = factorize(level)?;
    if level == 1 {
        return Ok(1);
    }
    if f.exponent_of(2) >= 2 || f.primes().any(|p| p % 4 == 3) {
        return Ok(0);
    }
    Ok(1 << f.primes().filter(|&p| p != 2).count())
}

/// ν₃(N): number of solutions of x² + x + 1 = 0 in Z/NZ.
pub fn torsion3_count(level: u64) -> Result<u64> {
    let f = factorize(level)?;
    if level == 1 {
        return Ok(1);
    }
    if f.exponent_of(3) >= 2 || f.primes().any(|p| p != 3 && p % 3 != 1) {
        return Ok(0);
    }
    Ok(1 << f.primes().filter(|&p| p != 3).count())
}

/// Genus from the Euler characteristic `V − E + F` of the embedded graph.
pub fn genus_euler(d: &Dessin) -> Result<u64> {
    let vs = vertex_sets(d);
    let chi = (vs.white.len() + vs.black.len() + vs.faces.len()) as i64 - d.len() as i64;
    genus_from_chi(chi)
}

fn genus_from_chi(chi: i64) -> Result<u64> {
    if chi > 2 || chi % 2 != 0 {
        return Err(Error::InternalInconsistency(alloc::format!(
            "Euler characteristic {chi} is not that of a closed orientable surface"
        )));
    }
    Ok(((2 - chi) / 2) as u64)
}

/// Genus from the closed forms alone, via Riemann–Hurwitz:
/// `χ = 2|E| − (|E| − ν₂)/2 − 2(|E| − ν₃)/3 − Σ_w c_w (w − 1)`.
pub fn genus_rh(level: u64) -> Result<u64> {
    let e = projline::index(level)? as i64;
    let nu2 = torsion2_count(level)? as i64;
    let nu3 = torsion3_count(level)? as i64;
    let ramification: i64 = width_spectrum(level)?
        .iter()
        .map(|(w, count)| count as i64 * (w as i64 - 1))
        .sum();
    let six_chi = 12 * e - 3 * (e - nu2) - 4 * (e - nu3) - 6 * ramification;
    if six_chi % 6 != 0 {
        return Err(Error::InternalInconsistency(alloc::format!(
            "6χ = {six_chi} is not divisible by 6 at level {level}"
        )));
    }
    genus_from_chi(six_chi / 6)
}

/// The canonical morphism B₀,N → B₀,k for `k | N`, as a map of edge
/// indices (both sides indexed as in [`build`]).
pub fn quotient_morphism(level: u64, divisor: u64) -> Result<Vec<usize>> {
    if divisor == 0 || !level.is_multiple_of(divisor) {
        return Err(Error::NotADivisor { divisor, level });
    }
    let source = projline::enumerate(level)?;
    let target = projline::enumerate(divisor)?;
    source
        .iter()
        .map(|p| {
            let image = p.reduce_to(divisor)?;
            target.binary_search(&image).map_err(|_| {
                Error::InternalInconsistency(alloc::format!("{image:?} not enumerated"))
            })
        })
        .collect()
}

/// Fibers of [`quotient_morphism`], indexed by target edge.
pub fn fibers(map: &[usize], target_len: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new(); target_len];
    for (i, &j) in map.iter().enumerate() {
        out[j].push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projline::normalize;

    fn lengths(cycles: &[Vec<usize>]) -> Vec<usize> {
        let mut l: Vec<usize> = cycles.iter().map(|c| c.len()).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    #[test]
    fn build_small() {
        let d1 = build(1).unwrap();
        assert_eq!((d1.x(), d1.y()), (&[0usize][..], &[0usize][..]));

        let d2 = build(2).unwrap();
        let vs = vertex_sets(&d2);
        assert_eq!(d2.len(), 3);
        assert_eq!(lengths(&vs.black), [3]);
        assert_eq!(lengths(&vs.white), [2, 1]);
        assert_eq!(lengths(&vs.faces), [2, 1]);

        let d11 = build(11).unwrap();
        assert_eq!(d11.len(), 12);
        assert_eq!(lengths(&vertex_sets(&d11).faces), [11, 1]);
    }

    #[test]
    fn vertex_sets_examples() {
        let vs = vertex_sets(&build(6).unwrap());
        assert_eq!(lengths(&vs.white), [2; 6]);
        assert_eq!(lengths(&vs.black), [3; 4]);
        assert_eq!(lengths(&vs.faces), [6, 3, 2, 1]);
        let vs = vertex_sets(&build(9).unwrap());
        assert_eq!(lengths(&vs.faces), [9, 1, 1, 1]);
    }

    #[test]
    fn face_through_zero_is_the_translation_orbit() {
        let d = build(7).unwrap();
        let vs = vertex_sets(&d);
        let zero = d.index_of(&normalize(0, 1, 7).unwrap()).unwrap();
        let face = vs.faces.iter().find(|f| f.contains(&zero)).unwrap();
        let start = face.iter().position(|&i| i == zero).unwrap();
        for k in 0..7 {
            let e = face[(start + k as usize) % face.len()];
            assert_eq!(d.edges()[e], normalize(k, 1, 7).unwrap());
        }
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion2_count(2), Ok(1));
        assert_eq!(torsion2_count(5), Ok(2));
        assert_eq!(torsion2_count(4), Ok(0));
        assert_eq!(torsion2_count(25), Ok(2));
        assert_eq!(torsion3_count(3), Ok(1));
        assert_eq!(torsion3_count(7), Ok(2));
        assert_eq!(torsion3_count(9), Ok(0));
        assert_eq!(torsion2_count(1), Ok(1));
        assert_eq!(torsion3_count(1), Ok(1));
        // brute-force roots
        let roots = |n: u64, f: &dyn Fn(u64) -> u64| {
            (0..n).filter(|&x| f(x).is_multiple_of(n)).count() as u64
        };
        for n in 2..=200u64 {
            assert_eq!(
                torsion2_count(n).unwrap(),
                roots(n, &|x| x * x + 1),
                "nu2({n})"
            );
            assert_eq!(
                torsion3_count(n).unwrap(),
                roots(n, &|x| x * x + x + 1),
                "nu3({n})"
            );
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_euler(&build(1).unwrap()), Ok(0));
        assert_eq!(genus_euler(&build(11).unwrap()), Ok(1));
        assert_eq!(genus_euler(&build(25).unwrap()), Ok(0));
        assert_eq!(genus_rh(11), Ok(1));
        for n in crate::GENUS_ZERO_LEVELS {
            assert_eq!(genus_rh(n), Ok(0), "N={n}");
        }
    }

    #[test]
    fn quotient_examples() {
        let f = quotient_morphism(6, 2).unwrap();
        let fib = fibers(&f, 3);
        assert!(fib.iter().all(|x| x.len() == 4));
        let zero6 = projline::enumerate(6)
            .unwrap()
            .binary_search(&normalize(0, 1, 6).unwrap())
            .unwrap();
        let zero2 = projline::enumerate(2)
            .unwrap()
            .binary_search(&normalize(0, 1, 2).unwrap())
            .unwrap();
        assert!(fib[zero2].contains(&zero6));

        for n in 1..=60 {
            let id = quotient_morphism(n, n).unwrap();
            assert!(id.iter().enumerate().all(|(i, &j)| i == j));
            assert!(quotient_morphism(n, 1).unwrap().iter().all(|&j| j == 0));
        }
        assert_eq!(
            quotient_morphism(6, 4),
            Err(Error::NotADivisor {
                divisor: 4,
                level: 6
            })
        );
    }

    #[test]
    fn from_parts_validates() {
        let d = build(8).unwrap();
        let again = Dessin::from_parts(8, d.edges().to_vec(), d.x().to_vec(), d.y().to_vec());
        assert_eq!(again.as_ref(), Ok(&d));
        let bad_x = d.y().to_vec();
        assert!(Dessin::from_parts(8, d.edges().to_vec(), bad_x, d.y().to_vec()).is_err());
    }
}
