//! Gale-triangular ideal generators indexed by subsets.
//!
//! For each J ⊆ [n] there is a polynomial family p_{J,1..n} built from
//! complete homogeneous sums in squared variables, a matching family
//! q_{J,1..n} of superspace elements of SI^B whose Gale-leading θ_J
//! coefficients recover ±p_{J,i}, and a companion polynomial f_J dividing
//! the Vandermondian.  The operators 𝔇_J tie these together: expressed in
//! minors of the lower-triangular matrix 𝓗, they act Gale-triangularly and
//! their θ_J-leading coefficient acts by ±f_J ⊙ −.
//!
//! Everything the surrounding theory asserts about these families —
//! membership, triangularity, regularity, colon-ideal descriptions — is
//! implemented here as a finite, exact check.

use crate::coinvariants::{
    bosonic_quotient_series, colon_piece, i_b_generators, ideal_piece, si_b_generators, IdealSpec,
};
use crate::combinatorics::{staircase, staircase_product};
use crate::linalg::RankPolicy;
use crate::poly::{h2, Mono, Poly};
use crate::subset::Subset;
use crate::superspace::SuperElem;
use crate::rat;
use rayon::prelude::*;

/// r_i = n − |J ∪ {i..n}| + 1: the h² degree used at position i.
pub fn r_i(j: &Subset, i: u32) -> i64 {
    let n = j.ambient();
    n as i64 - j.union_tail(i).len() as i64 + 1
}

/// p_{J,i}: h²_{r_i}(J ∪ {i..n}) for i ∉ J, its i-th partial for i ∈ J.
pub fn p_ji(j: &Subset, i: u32) -> Poly {
    let s = j.union_tail(i);
    let h = h2(&s, r_i(j, i));
    if j.contains(i) {
        h.partial(i)
    } else {
        h
    }
}

/// q_{J,i}: h²_{r_i}(J∪{i..n})·θ_J for i ∉ J, d(h²_{r_i}(J∪{i..n}))·θ_{J∖i}
/// for i ∈ J.  Both lie in SI^B with Gale-leading term ±p_{J,i}·θ_J.
pub fn q_ji(j: &Subset, i: u32) -> SuperElem {
    let s = j.union_tail(i);
    let h = h2(&s, r_i(j, i));
    if j.contains(i) {
        SuperElem::from_poly(&h)
            .d_j(1)
            .smul(&SuperElem::theta(&j.without(i)))
    } else {
        SuperElem::poly_times_theta(&h, j)
    }
}

/// f_J = ∏_{j∈J} x_j · ∏_{j∈J, j<i≤n} (x_j² − x_i²); divides δ^B_n.
pub fn f_j(j: &Subset) -> Poly {
    let n = j.ambient();
    let mut p = Poly::one(n);
    for a in j.iter() {
        p = p.mul(&Poly::var(n, a));
        for b in a + 1..=n {
            p = p.mul(&Poly::var(n, a).pow(2).sub(&Poly::var(n, b).pow(2)));
        }
    }
    p
}

/// The family (J, p_{J,·}, q_{J,·}, r_·) with its degree law checked.
pub struct PjiFamily {
    pub j: Subset,
    pub p: Vec<Poly>,
    pub q: Vec<SuperElem>,
    pub r: Vec<i64>,
}

impl PjiFamily {
    pub fn new(j: &Subset) -> Self {
        let n = j.ambient();
        let st = staircase(j);
        let p: Vec<Poly> = (1..=n).map(|i| p_ji(j, i)).collect();
        for (i, pi) in p.iter().enumerate() {
            assert_eq!(
                pi.homogeneous_degree(),
                Some(st[i] + 1),
                "degree law fails at J={j}, i={}",
                i + 1
            );
        }
        PjiFamily {
            j: j.clone(),
            p,
            q: (1..=n).map(|i| q_ji(j, i)).collect(),
            r: (1..=n).map(|i| r_i(j, i)).collect(),
        }
    }
}

/// The n×n lower-triangular matrix with entry (i, j) = h²_{i−j}({i..n}).
pub struct HMatrix {
    n: u32,
    entries: Vec<Vec<Poly>>,
}

impl HMatrix {
    pub fn new(n: u32) -> Self {
        let entries = (1..=n)
            .map(|i| {
                let tail = Subset::empty(n).union_tail(i);
                (1..=n).map(|j| h2(&tail, i as i64 - j as i64)).collect()
            })
            .collect();
        HMatrix { n, entries }
    }

    /// 1-based entry access.
    pub fn entry(&self, i: u32, j: u32) -> &Poly {
        &self.entries[i as usize - 1][j as usize - 1]
    }

    /// Minor with the given ascending row and column sets.
    pub fn minor(&self, rows: &[u32], cols: &[u32]) -> Poly {
        assert_eq!(rows.len(), cols.len());
        let mat: Vec<Vec<Poly>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect();
        poly_det(self.n, &mat)
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn poly_det(n: u32, mat: &[Vec<Poly>]) -> Poly {
    match mat.len() {
        0 => Poly::one(n),
        1 => mat[0][0].clone(),
        size => {
            let mut det = Poly::zero(n);
            for (c, cell) in mat[0].iter().enumerate() {
                if cell.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Poly>> = mat[1..size]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(cc, _)| *cc != c)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let cof = cell.mul(&poly_det(n, &sub));
                det = if c % 2 == 0 { det.add(&cof) } else { det.sub(&cof) };
            }
            det
        }
    }
}

/// det(x_k^{2i−1}) over rows k ∈ K and columns i ∈ I, both ascending.
fn odd_power_det(n: u32, k_set: &Subset, i_set: &Subset) -> Poly {
    let mat: Vec<Vec<Poly>> = k_set
        .iter()
        .map(|k| {
            i_set
                .iter()
                .map(|i| Poly::monomial(Mono::var_pow(n, k, 2 * i - 1), rat(1)))
                .collect()
        })
        .collect();
    poly_det(n, &mat)
}

/// 𝔉_{J,K} = Σ_{|I|=|J|} (−1)^{ΣI} Δ_{[n]−J, ([n]−I)*}(𝓗) · det(x_k^{2i−1})_{k∈K, i∈I}.
pub fn f_jk(j: &Subset, k: &Subset) -> Poly {
    f_jk_with(&HMatrix::new(j.ambient()), j, k)
}

/// As `f_jk`, reusing a prebuilt 𝓗 across a sweep.
pub fn f_jk_with(h: &HMatrix, j: &Subset, k: &Subset) -> Poly {
    let n = j.ambient();
    assert_eq!(n, k.ambient());
    assert_eq!(j.len(), k.len(), "𝔉 needs |J| = |K|");
    let rows = j.complement();
    let mut out = Poly::zero(n);
    for i_set in Subset::all_of_size(n, j.len()) {
        let cols = i_set.complement().reversal();
        let minor = h.minor(rows.elems(), cols.elems());
        if minor.is_zero() {
            continue;
        }
        let term = minor.mul(&odd_power_det(n, k, &i_set));
        out = if i_set.sum() % 2 == 0 {
            out.add(&term)
        } else {
            out.sub(&term)
        };
    }
    out
}

/// 𝔉_{J,K} as ±det(A_{J,K}), where A stacks the odd-power Vandermonde rows
/// of K over the 𝓗-rows indexed by the complement of J.
pub fn f_jk_det(j: &Subset, k: &Subset) -> Poly {
    let n = j.ambient();
    assert_eq!(j.len(), k.len(), "𝔉 needs |J| = |K|");
    let h = HMatrix::new(n);
    let mut mat: Vec<Vec<Poly>> = k
        .iter()
        .map(|kk| {
            (1..=n)
                .map(|col| Poly::monomial(Mono::var_pow(n, kk, 2 * (n - col) + 1), rat(1)))
                .collect()
        })
        .collect();
    for b in j.complement().iter() {
        mat.push((1..=n).map(|col| h.entry(b, col).clone()).collect());
    }
    poly_det(n, &mat)
}

/// 𝔇_J(f) = Σ_{|I|=|J|} (−1)^{ΣI} Δ_{[n]−J,([n]−I)*}(𝓗) ⊙ d_{2I−1}(f).
pub fn d_op(j: &Subset, f: &SuperElem) -> SuperElem {
    let n = j.ambient();
    let h = HMatrix::new(n);
    let rows = j.complement();
    let mut out = SuperElem::zero(n);
    for i_set in Subset::all_of_size(n, j.len()) {
        let cols = i_set.complement().reversal();
        let minor = h.minor(rows.elems(), cols.elems());
        if minor.is_zero() {
            continue;
        }
        let odd = i_set.map_into(2 * n, |i| 2 * i - 1);
        let term = SuperElem::from_poly(&minor).odot(&f.d_set(&odd));
        out = if i_set.sum() % 2 == 0 {
            out.add(&term)
        } else {
            out.sub(&term)
        };
    }
    out
}

/// 𝔇_J(f) through the 𝔉 coefficients: Σ_{|K|=|J|} (𝔉_{J,K} ⊙ f)·θ_K.
pub fn d_op_via_f(j: &Subset, f: &SuperElem) -> SuperElem {
    let n = j.ambient();
    let h = HMatrix::new(n);
    let mut out = SuperElem::zero(n);
    for k in Subset::all_of_size(n, j.len()) {
        let fk = f_jk_with(&h, j, &k);
        if fk.is_zero() {
            continue;
        }
        let acted = SuperElem::from_poly(&fk).odot(f);
        out = out.add(&acted.smul(&SuperElem::theta(&k)));
    }
    out
}

/// Leading-term facts for one (J, i): q_{J,i} ∈ SI^B, its θ-support is
/// Gale-above J, and its θ_J coefficient is ±p_{J,i}.
pub fn verify_leading(j: &Subset, i: u32) -> bool {
    let n = j.ambient();
    let q = q_ji(j, i);
    let (d, k) = q.bidegree().expect("q_{J,i} must be homogeneous");
    if !ideal_piece(&si_b_generators(n), d, k).in_span(&q) {
        return false;
    }
    if !q.word_support().iter().all(|w| j.gale_leq(w)) {
        return false;
    }
    let lead = q.word_coeff(j);
    let p = p_ji(j, i);
    lead == p || lead == p.neg()
}

/// Regular-sequence fact for one J: the quotient by (p_{J,·}) has Hilbert
/// series ∏_i [st_i(J)+1]_q, checked to two guard degrees past the socle.
pub fn verify_regular(j: &Subset, policy: RankPolicy) -> bool {
    let n = j.ambient();
    let fam = PjiFamily::new(j);
    let socle: u32 = fam
        .p
        .iter()
        .map(|p| p.homogeneous_degree().unwrap() - 1)
        .sum();
    let series = bosonic_quotient_series(n, &fam.p, socle + 2, policy);
    series == staircase_product(j)
}

/// Colon-ideal fact for one J: (I^B : f_J) and (p_{J,·}) agree degreewise
/// up to two degrees past the socle of the quotient.
pub fn verify_colon(j: &Subset, policy: RankPolicy) -> bool {
    let n = j.ambient();
    let fam = PjiFamily::new(j);
    let f = f_j(j);
    let ideal = i_b_generators(n);
    let p_ideal = IdealSpec::new(n, fam.p.iter().map(SuperElem::from_poly).collect());
    let socle: u32 = fam
        .p
        .iter()
        .map(|p| p.homogeneous_degree().unwrap() - 1)
        .sum();
    (0..=socle + 2).into_par_iter().all(|d| {
        let colon = colon_piece(&ideal, &f, d);
        let p_piece = ideal_piece(&p_ideal, d, 0);
        let dim_colon = colon.nrows();
        if p_piece.rank_policy(policy) != dim_colon {
            return false;
        }
        // containment (p_{J,·})_d ⊆ (I^B : f_J)_d: stacking must not grow
        colon.rank_with_rows(&p_piece.rows, policy) == dim_colon
    })
}

/// ∂_j h²_{n−|J|+1}(J) lies in (p_{J,·}) for every j ∈ J.
pub fn verify_membership_ladder(j: &Subset, _policy: RankPolicy) -> bool {
    let n = j.ambient();
    let fam = PjiFamily::new(j);
    let p_ideal = IdealSpec::new(n, fam.p.iter().map(SuperElem::from_poly).collect());
    let r = n as i64 - j.len() as i64 + 1;
    j.iter().all(|jj| {
        let g = h2(j, r).partial(jj);
        if g.is_zero() {
            return true;
        }
        let d = g.homogeneous_degree().unwrap();
        ideal_piece(&p_ideal, d, 0).in_span(&SuperElem::from_poly(&g))
    })
}
