//! The invariant ideals and their quotients.
//!
//! `SI^B` is the two-sided ideal of Ω_n generated by the even power sums
//! p_2, p_4, …, p_{2n} together with their images d(p_{2i}) under the Euler
//! differential; `I^B` is its bosonic part, generated by the power sums
//! alone.  Quotient dimensions are computed degree by degree: the dimension
//! of a bidegree piece of the quotient is the piece dimension of Ω_n minus
//! the rank of the spanning set {a·g : g generator} inside that piece.
//!
//! The apolarity side lives here too: the Vandermondian δ^B_n, the
//! superharmonicity test, and the span SH′ obtained from δ^B_n by closing
//! under ∂_i and the odd Euler-type operators.

use crate::linalg::{left_kernel, GradedMatrix, PieceBasis, RankPolicy};
use crate::poly::{power_sum, Mono, Poly};
use crate::qpoly::{BiSeries, QPoly};
use crate::subset::Subset;
use crate::superspace::SuperElem;
use crate::rat;
use num::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A finite list of homogeneous generators of a two-sided ideal of Ω_n.
pub struct IdealSpec {
    n: u32,
    generators: Vec<SuperElem>,
}

impl IdealSpec {
    pub fn new(n: u32, generators: Vec<SuperElem>) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), n, "generator in wrong ambient ring");
            assert!(g.bidegree().is_some(), "generator not homogeneous: {g}");
        }
        IdealSpec { n, generators }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[SuperElem] {
        &self.generators
    }
}

/// Generators p_{2i} and d(p_{2i}), i = 1..n, of the full ideal SI^B.
pub fn si_b_generators(n: u32) -> IdealSpec {
    let mut gens = Vec::with_capacity(2 * n as usize);
    for i in 1..=n {
        let p = SuperElem::from_poly(&power_sum(n, 2 * i));
        gens.push(p.d_j(1));
        gens.push(p);
    }
    IdealSpec::new(n, gens)
}

/// Generators p_{2i}, i = 1..n, of the bosonic invariant ideal I^B.
pub fn i_b_generators(n: u32) -> IdealSpec {
    let gens = (1..=n)
        .map(|i| SuperElem::from_poly(&power_sum(n, 2 * i)))
        .collect();
    IdealSpec::new(n, gens)
}

/// The bidegree-(d, k) piece of the ideal, spanned by all products of a
/// generator with a monomial·θ-word cofactor landing in that piece.
pub fn ideal_piece(ideal: &IdealSpec, d: u32, k: u32) -> GradedMatrix {
    let n = ideal.n;
    let mut m = GradedMatrix::new(PieceBasis::new(n, d, k));
    for g in &ideal.generators {
        let (dg, kg) = g.bidegree().unwrap();
        if dg > d || kg > k {
            continue;
        }
        for w in Subset::all_of_size(n, (k - kg) as usize) {
            let tw = SuperElem::theta(&w);
            for mono in Mono::all_of_degree(n, d - dg) {
                let cofactor = tw.mul_poly(&Poly::monomial(mono, rat(1)));
                m.push(&cofactor.smul(g));
            }
        }
    }
    m
}

/// Quotient dimension of one piece: dim Ω_{d,k} − rank of the ideal piece.
fn quotient_dim(ideal: &IdealSpec, d: u32, k: u32, policy: RankPolicy) -> usize {
    let m = ideal_piece(ideal, d, k);
    m.ncols()
        .checked_sub(m.rank_policy(policy))
        .expect("ideal rank exceeds piece dimension")
}

/// Brute-force bigraded Hilbert series of Ω_n/SI^B up to bosonic degree
/// `dmax`, which must cover the socle degree n² plus guard room.
pub fn hilbert_quotient(n: u32, dmax: u32) -> BiSeries {
    hilbert_quotient_policy(n, dmax, RankPolicy::Hybrid)
}

pub fn hilbert_quotient_policy(n: u32, dmax: u32, policy: RankPolicy) -> BiSeries {
    assert!(dmax >= n * n, "dmax {dmax} below socle degree {}", n * n);
    let ideal = si_b_generators(n);
    let pieces: Vec<(u32, u32)> = (0..=dmax)
        .flat_map(|d| (0..=n).map(move |k| (d, k)))
        .collect();
    let dims: Vec<((u32, u32), usize)> = pieces
        .par_iter()
        .map(|&(d, k)| ((d, k), quotient_dim(&ideal, d, k, policy)))
        .collect();
    let mut series = BiSeries::zero();
    for ((d, k), dim) in dims {
        if dim > 0 {
            assert!(
                d <= n * n,
                "nonzero quotient dimension {dim} at bidegree ({d}, {k}) beyond the socle degree {}",
                n * n
            );
            series.set(d, k, dim as i64);
        }
    }
    series
}

/// Single-graded Hilbert series of ℂ[x_n]/(gens) up to degree `dmax`.
pub fn bosonic_quotient_series(
    n: u32,
    gens: &[Poly],
    dmax: u32,
    policy: RankPolicy,
) -> QPoly {
    let ideal = IdealSpec::new(n, gens.iter().map(SuperElem::from_poly).collect());
    let dims: Vec<(u32, usize)> = (0..=dmax)
        .into_par_iter()
        .map(|d| (d, quotient_dim(&ideal, d, 0, policy)))
        .collect();
    let mut q = QPoly::zero();
    for (d, dim) in dims {
        if dim > 0 {
            q.add_term(rat(dim as i64), d);
        }
    }
    q
}

/// Hilbert series of the ordinary coinvariant ring ℂ[x_n]/I^B, computed to
/// two degrees past the socle degree n².
pub fn ordinary_hilbert(n: u32) -> QPoly {
    let gens: Vec<Poly> = (1..=n).map(|i| power_sum(n, 2 * i)).collect();
    bosonic_quotient_series(n, &gens, n * n + 2, RankPolicy::Hybrid)
}

/// The Vandermondian ∏ x_i · ∏_{i<j} (x_i² − x_j²), of degree n².
pub fn delta_b(n: u32) -> Poly {
    let mut p = Poly::one(n);
    for i in 1..=n {
        p = p.mul(&Poly::var(n, i));
        for j in i + 1..=n {
            let diff = Poly::var(n, i).pow(2).sub(&Poly::var(n, j).pow(2));
            p = p.mul(&diff);
        }
    }
    p
}

/// Is δ^B_n a member of I^B at bidegree (n², 0)?  (It never is; the rank
/// comparison provides the certificate.)
pub fn delta_in_ideal(n: u32, policy: RankPolicy) -> bool {
    let m = ideal_piece(&i_b_generators(n), n * n, 0);
    let delta_row = m.basis.row_of(&SuperElem::from_poly(&delta_b(n)));
    let with = m.rank_with_rows(std::slice::from_ref(&delta_row), policy);
    with == m.rank_policy(policy)
}

/// True iff g ⊙ h = 0 for every generator g of SI^B.  Annihilation by the
/// generators suffices: (a·g) ⊙ h = a ⊙ (g ⊙ h), so the whole ideal
/// annihilates h as soon as the generators do.
pub fn is_superharmonic(h: &SuperElem) -> bool {
    si_b_generators(h.nvars())
        .generators
        .iter()
        .all(|g| g.odot(h).is_zero())
}

/// Spanning set of SH′: all nonzero m ⊙ d_{2I−1}(δ^B_n) over subsets
/// I ⊆ [n] and monomials m of degree ≤ n².
pub fn sh_prime_span(n: u32) -> Vec<SuperElem> {
    let delta = SuperElem::from_poly(&delta_b(n));
    let mut span = Vec::new();
    for i_set in Subset::all(n) {
        let odd = i_set.map_into(2 * n, |i| 2 * i - 1);
        let g = delta.d_set(&odd);
        if g.is_zero() {
            continue;
        }
        for d in 0..=n * n {
            for m in Mono::all_of_degree(n, d) {
                let h = SuperElem::from_poly(&Poly::monomial(m, rat(1))).odot(&g);
                if !h.is_zero() {
                    span.push(h);
                }
            }
        }
    }
    span
}

/// Bidegree-wise dimension of the span of the given homogeneous elements.
pub fn span_dimensions(n: u32, elems: &[SuperElem], policy: RankPolicy) -> BiSeries {
    let mut by_piece: BTreeMap<(u32, u32), Vec<&SuperElem>> = BTreeMap::new();
    for e in elems {
        let (d, k) = e.bidegree().expect("span element not homogeneous");
        by_piece.entry((d, k)).or_default().push(e);
    }
    let ranks: Vec<((u32, u32), usize)> = by_piece
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|((d, k), group)| {
            let mut m = GradedMatrix::new(PieceBasis::new(n, d, k));
            for e in group {
                m.push(e);
            }
            ((d, k), m.rank_policy(policy))
        })
        .collect();
    let mut series = BiSeries::zero();
    for ((d, k), r) in ranks {
        if r > 0 {
            series.set(d, k, r as i64);
        }
    }
    series
}

/// Degree-d piece of the colon ideal (I : f), realized as the kernel of
/// "multiply by f, then reduce modulo the ideal" on degree-d polynomials.
pub fn colon_piece(ideal: &IdealSpec, f: &Poly, d: u32) -> GradedMatrix {
    let n = ideal.n;
    let df = f.homogeneous_degree().expect("f must be homogeneous");
    let target = ideal_piece(ideal, d + df, 0);
    let mut red = crate::linalg::Reducer::new();
    for r in &target.rows {
        red.insert(r.clone());
    }
    let domain = PieceBasis::new(n, d, 0);
    let monos = Mono::all_of_degree(n, d);
    let reduced: Vec<_> = monos
        .iter()
        .map(|m| {
            let img = f.mul(&Poly::monomial(m.clone(), rat(1)));
            red.reduce(target.basis.row_of(&SuperElem::from_poly(&img)))
        })
        .collect();
    let mut out = GradedMatrix::new(domain);
    for combo in left_kernel(&reduced) {
        let mut g = Poly::zero(n);
        for (c, m) in combo.into_iter().zip(&monos) {
            if !c.is_zero() {
                g.add_term(m.clone(), c);
            }
        }
        out.push(&SuperElem::from_poly(&g));
    }
    out
}

/// The operator theorem at size n: every spanning element of SH′ is
/// superharmonic, and the bidegree dimensions of SH′ equal the brute-force
/// quotient series.
pub fn operator_theorem_check(n: u32) -> bool {
    operator_theorem_check_policy(n, RankPolicy::Hybrid)
}

pub fn operator_theorem_check_policy(n: u32, policy: RankPolicy) -> bool {
    let span = sh_prime_span(n);
    if !span.par_iter().all(is_superharmonic) {
        return false;
    }
    let dims = span_dimensions(n, &span, policy);
    dims == hilbert_quotient_policy(n, n * n + 2, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{closed_hilbert, q_int};
    use crate::superspace::SignedPerm;

    #[test]
    fn si_generators_small() {
        let gens = si_b_generators(1);
        let strs: Vec<String> = gens.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["2*x1*t1", "x1^2"]);
        let gens = si_b_generators(2);
        let expect = [
            "2*x1*t1 + 2*x2*t2",
            "x1^2 + x2^2",
            "4*x1^3*t1 + 4*x2^3*t2",
            "x1^4 + x2^4",
        ];
        let strs: Vec<String> = gens.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, expect);
    }

    #[test]
    fn generators_are_invariant() {
        // invariance under the group generators: the sign flip on x_1 and
        // the adjacent transpositions
        for n in 1..=3 {
            let mut group_gens = vec![{
                let mut img: Vec<i32> = (1..=n as i32).collect();
                img[0] = -1;
                SignedPerm::new(img)
            }];
            for i in 1..n {
                let mut img: Vec<i32> = (1..=n as i32).collect();
                img.swap(i - 1, i);
                group_gens.push(SignedPerm::new(img));
            }
            for g in si_b_generators(n as u32).generators() {
                for pi in &group_gens {
                    assert_eq!(&g.act(pi), g, "generator {g} moved by {pi:?}");
                }
            }
        }
    }

    #[test]
    fn ideal_piece_examples() {
        let ideal = si_b_generators(1);
        assert_eq!(ideal_piece(&ideal, 2, 0).rank(), 1);
        assert_eq!(ideal_piece(&ideal, 0, 0).rank(), 0);
        assert_eq!(ideal_piece(&ideal, 1, 1).rank(), 1);
    }

    #[test]
    fn hilbert_quotient_n1_n2() {
        assert_eq!(hilbert_quotient(1, 3).to_string(), "1 + q + z");
        let h2 = hilbert_quotient(2, 6);
        assert_eq!(h2.eval_one(), 17);
        assert_eq!(h2, closed_hilbert(2));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_b(1).to_string(), "x1");
        assert_eq!(delta_b(2).to_string(), "x1^3*x2 - x1*x2^3");
        assert_eq!(delta_b(3).homogeneous_degree(), Some(9));
    }

    #[test]
    fn delta_is_not_in_the_ideal() {
        for n in 1..=3 {
            assert!(!delta_in_ideal(n, RankPolicy::Exact));
        }
    }

    #[test]
    fn superharmonicity() {
        for n in 1..=3 {
            assert!(is_superharmonic(&SuperElem::from_poly(&delta_b(n))));
        }
        assert!(!is_superharmonic(&SuperElem::parse(1, "x1^2").unwrap()));
        assert!(is_superharmonic(&SuperElem::parse(2, "1").unwrap()));
    }

    #[test]
    fn sh_prime_n1() {
        let span = sh_prime_span(1);
        let dims = span_dimensions(1, &span, RankPolicy::Exact);
        assert_eq!(dims.to_string(), "1 + q + z");
    }

    #[test]
    fn colon_piece_examples() {
        // f = 1: (I : 1)_d = I_d
        let ideal = i_b_generators(2);
        for d in 0..=5 {
            let colon = colon_piece(&ideal, &Poly::one(2), d);
            assert_eq!(colon.rank(), ideal_piece(&ideal, d, 0).rank());
        }
        // n = 1: x_1 ∈ (I^B_1 : x_1) since x_1·x_1 ∈ (x_1²)
        let ideal = i_b_generators(1);
        let colon = colon_piece(&ideal, &Poly::var(1, 1), 1);
        assert!(colon.in_span(&SuperElem::parse(1, "x1").unwrap()));
    }

    #[test]
    fn ordinary_hilbert_small() {
        for n in 1..=3u32 {
            let expect = (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(2 * i));
            assert_eq!(ordinary_hilbert(n), expect);
        }
    }

    #[test]
    fn ordinary_socle() {
        // top nonzero degree of ℂ[x_n]/I^B is n², with a 1-dimensional piece
        for n in 1..=3u32 {
            let h = ordinary_hilbert(n);
            assert_eq!(h.degree(), Some(n * n));
            assert_eq!(h.coeff(n * n), rat(1));
        }
    }

    #[test]
    fn operator_theorem_small() {
        assert!(operator_theorem_check(1));
        assert!(operator_theorem_check(2));
    }
}
