//! Hyperplane arrangements, derivation modules, and the explicit basis.
//!
//! The reflection arrangement of the signed permutation group consists of
//! the n² hyperplanes x_i, x_i ± x_j.  Each subset J picks out a
//! subarrangement 𝓑_J (and a slightly larger 𝓑̃_J) which is free: an
//! explicit basis ρ^J (resp. μ^J) of its derivation module is certified by
//! Saito's criterion — degree sum equals the number of hyperplanes and the
//! coefficient determinant is a nonzero scalar multiple of the defining
//! polynomial.  The map ∂_i ↦ x_i sends the derivation module onto an ideal
//! whose quotient is the Solomon–Terao algebra; these quotients realize the
//! colon ideals (I^B : f_J) and eventually the explicit monomial-like basis
//! 𝓜 of the superspace quotient.
//!
//! Derivation modules are also computed degreewise by brute force — the
//! tangency conditions are linear in the coefficients — so the exactness
//! bookkeeping (deletion steps shifting one exponent down) can be verified
//! as Hilbert-series additivity without trusting any of the above.

use crate::coinvariants::{colon_piece, i_b_generators, ideal_piece, IdealSpec};
use crate::combinatorics::{closed_hilbert, staircase, staircase_product};
use crate::linalg::{right_kernel, GradedMatrix, PieceBasis, RankPolicy, SparseRow};
use crate::poly::{Mono, Poly};
use crate::qpoly::QPoly;
use crate::subset::Subset;
use crate::superspace::SuperElem;
use crate::{rat, Rat};
use num::Zero;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// A linear form from the type-B reflection arrangement: x_i, x_i − x_j,
/// or x_i + x_j, always stored with i < j.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LinearForm {
    Coord(u32),
    Diff(u32, u32),
    Sum(u32, u32),
}

impl LinearForm {
    fn validate(&self, n: u32) {
        match *self {
            LinearForm::Coord(i) => assert!(1 <= i && i <= n, "form index out of range"),
            LinearForm::Diff(i, j) | LinearForm::Sum(i, j) => {
                assert!(1 <= i && i < j && j <= n, "form indices out of range")
            }
        }
    }

    /// The degree-1 polynomial realization.
    pub fn poly(&self, n: u32) -> Poly {
        match *self {
            LinearForm::Coord(i) => Poly::var(n, i),
            LinearForm::Diff(i, j) => Poly::var(n, i).sub(&Poly::var(n, j)),
            LinearForm::Sum(i, j) => Poly::var(n, i).add(&Poly::var(n, j)),
        }
    }

    /// Coefficient of x_i in the form.
    fn coeff(&self, i: u32) -> i64 {
        match *self {
            LinearForm::Coord(a) => (a == i) as i64,
            LinearForm::Diff(a, b) => (a == i) as i64 - (b == i) as i64,
            LinearForm::Sum(a, b) => (a == i) as i64 + (b == i) as i64,
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LinearForm::Coord(i) => write!(f, "x{i}"),
            LinearForm::Diff(i, j) => write!(f, "x{i}-x{j}"),
            LinearForm::Sum(i, j) => write!(f, "x{i}+x{j}"),
        }
    }
}

/// A finite set of pairwise non-proportional linear forms in n variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    n: u32,
    forms: BTreeSet<LinearForm>,
}

impl Arrangement {
    pub fn new(n: u32, forms: impl IntoIterator<Item = LinearForm>) -> Self {
        let forms: BTreeSet<LinearForm> = forms.into_iter().collect();
        for f in &forms {
            f.validate(n);
        }
        Arrangement { n, forms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> impl Iterator<Item = &LinearForm> {
        self.forms.iter()
    }

    pub fn contains(&self, f: &LinearForm) -> bool {
        self.forms.contains(f)
    }

    /// The defining polynomial Q = ∏ forms.
    pub fn defining_poly(&self) -> Poly {
        self.forms
            .iter()
            .fold(Poly::one(self.n), |acc, f| acc.mul(&f.poly(self.n)))
    }

    /// The deletion: this arrangement without one hyperplane.
    pub fn delete(&self, f: &LinearForm) -> Arrangement {
        assert!(self.forms.contains(f), "deleting a form not present: {f}");
        let mut forms = self.forms.clone();
        forms.remove(f);
        Arrangement { n: self.n, forms }
    }
}

/// The full reflection arrangement {x_i} ∪ {x_i ± x_j : i < j}, n² forms.
pub fn b_phi_plus(n: u32) -> Arrangement {
    b_j(&Subset::empty(n))
}

/// 𝓑_J: forms x_j ± x_i (j ∉ J, i > j) together with x_j for j ∉ J.
pub fn b_j(j: &Subset) -> Arrangement {
    let n = j.ambient();
    let mut forms = Vec::new();
    for a in 1..=n {
        if j.contains(a) {
            continue;
        }
        forms.push(LinearForm::Coord(a));
        for b in a + 1..=n {
            forms.push(LinearForm::Diff(a, b));
            forms.push(LinearForm::Sum(a, b));
        }
    }
    Arrangement::new(n, forms)
}

/// 𝓑̃_J: 𝓑_J plus the coordinate forms x_j for j ∈ J.
pub fn b_tilde_j(j: &Subset) -> Arrangement {
    let n = j.ambient();
    let mut arr = b_j(j);
    for a in j.iter() {
        arr.forms.insert(LinearForm::Coord(a));
    }
    assert_eq!(arr.n, n);
    arr
}

/// Exponent b_{J,i} = 2·|{1..i−1}∖J| + 1 of 𝓑̃_J at position i.
pub fn b_exponent(j: &Subset, i: u32) -> u32 {
    2 * (1..i).filter(|a| !j.contains(*a)).count() as u32 + 1
}

/// A polynomial vector field Σ f_i ∂_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    n: u32,
    coeffs: Vec<Poly>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        let n = coeffs.len() as u32;
        assert!(coeffs.iter().all(|c| c.nvars() == n));
        Derivation { n, coeffs }
    }

    pub fn euler(n: u32) -> Self {
        Derivation::new((1..=n).map(|i| Poly::var(n, i)).collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, i: u32) -> &Poly {
        &self.coeffs[i as usize - 1]
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for i in 1..=self.n {
            out = out.add(&f.partial(i).mul(self.coeff(i)));
        }
        out
    }

    /// Value on a linear form: the matching combination of coefficients.
    pub fn apply_form(&self, form: &LinearForm) -> Poly {
        let mut out = Poly::zero(self.n);
        for i in 1..=self.n {
            match form.coeff(i) {
                0 => {}
                1 => out = out.add(self.coeff(i)),
                -1 => out = out.sub(self.coeff(i)),
                _ => unreachable!(),
            }
        }
        out
    }

    /// Common degree of the nonzero coefficients, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }

    /// Image Σ f_i·x_i under the symbol map ∂_i ↦ x_i.
    pub fn symbol(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for i in 1..=self.n {
            out = out.add(&self.coeff(i).mul(&Poly::var(self.n, i)));
        }
        out
    }
}

/// Tangency: every form of the arrangement divides its image exactly.
pub fn in_der(delta: &Derivation, a: &Arrangement) -> bool {
    a.forms().all(|form| {
        delta
            .apply_form(form)
            .exact_div(&form.poly(a.n))
            .is_some()
    })
}

/// ρ^J_i: for i ∉ J a sum Σ_{k≥i} ∏_{j∉J, j<i}(x_j²−x_k²)·x_k·∂_k, for
/// i ∈ J the single term ∏_{j∉J, j<i}(x_j²−x_i²)·∂_i.
pub fn rho_j(j: &Subset, i: u32) -> Derivation {
    let n = j.ambient();
    let low: Vec<u32> = (1..i).filter(|a| !j.contains(*a)).collect();
    let prefactor = |k: u32| -> Poly {
        low.iter().fold(Poly::one(n), |acc, &a| {
            acc.mul(&Poly::var(n, a).pow(2).sub(&Poly::var(n, k).pow(2)))
        })
    };
    let mut coeffs = vec![Poly::zero(n); n as usize];
    if j.contains(i) {
        coeffs[i as usize - 1] = prefactor(i);
    } else {
        for k in i..=n {
            coeffs[k as usize - 1] = prefactor(k).mul(&Poly::var(n, k));
        }
    }
    Derivation::new(coeffs)
}

/// μ^J_i: the summed form of ρ^J_i for every i; degree b_{J,i}.
pub fn mu_j(j: &Subset, i: u32) -> Derivation {
    let n = j.ambient();
    let low: Vec<u32> = (1..i).filter(|a| !j.contains(*a)).collect();
    let mut coeffs = vec![Poly::zero(n); n as usize];
    for k in i..=n {
        let pre = low.iter().fold(Poly::one(n), |acc, &a| {
            acc.mul(&Poly::var(n, a).pow(2).sub(&Poly::var(n, k).pow(2)))
        });
        coeffs[k as usize - 1] = pre.mul(&Poly::var(n, k));
    }
    Derivation::new(coeffs)
}

/// Saito's criterion: n homogeneous tangent fields whose degrees sum to
/// |A| and whose coefficient determinant is a nonzero scalar multiple of
/// the defining polynomial form a free basis of the derivation module.
pub fn saito_check(rhos: &[Derivation], a: &Arrangement) -> bool {
    let n = a.n;
    if rhos.len() != n as usize {
        return false;
    }
    let mut deg_sum: u64 = 0;
    for rho in rhos {
        match rho.degree() {
            Some(d) => deg_sum += d as u64,
            None => return false,
        }
        if !in_der(rho, a) {
            return false;
        }
    }
    if deg_sum != a.size() as u64 {
        return false;
    }
    let mat: Vec<Vec<Poly>> = rhos
        .iter()
        .map(|rho| (1..=n).map(|i| rho.coeff(i).clone()).collect())
        .collect();
    let det = crate::pji::poly_det(n, &mat);
    match det.exact_div(&a.defining_poly()) {
        Some(c) => c.homogeneous_degree() == Some(0) && !c.is_zero(),
        None => false,
    }
}

/// The Solomon–Terao ideal of a free basis: generated by the symbols Σ f_i x_i.
pub fn st_ideal(rhos: &[Derivation]) -> IdealSpec {
    let n = rhos.first().expect("empty basis").n;
    let gens = rhos
        .iter()
        .map(|r| SuperElem::from_poly(&r.symbol()))
        .collect();
    IdealSpec::new(n, gens)
}

/// Substitute the zero locus of the form into a monomial: x_a ↦ 0 for a
/// coordinate form, x_b ↦ ±x_a for a difference/sum.  Returns the image
/// monomial and its sign, or None if it vanishes.
fn restrict_mono(m: &Mono, form: &LinearForm) -> Option<(Mono, i64)> {
    match *form {
        LinearForm::Coord(a) => (m.exp(a) == 0).then(|| (m.clone(), 1)),
        LinearForm::Diff(a, b) | LinearForm::Sum(a, b) => {
            let eb = m.exp(b);
            let mut exps = m.exps().to_vec();
            exps[a as usize - 1] += eb;
            exps[b as usize - 1] = 0;
            let sign = match *form {
                LinearForm::Sum(_, _) if eb % 2 == 1 => -1,
                _ => 1,
            };
            Some((Mono::from_exps(exps), sign))
        }
    }
}

/// Basis of the degree-e piece of Der(A), by brute force: the coefficient
/// vectors satisfying, for each form, "the image vanishes on the form's
/// zero locus", which is one sparse linear condition per monomial.
pub fn der_piece(a: &Arrangement, e: u32) -> Vec<Derivation> {
    let n = a.n;
    let monos = Mono::all_of_degree(n, e);
    let ncols = n as usize * monos.len();
    let col = |i: u32, mi: usize| (i as usize - 1) * monos.len() + mi;
    let mut rows: Vec<SparseRow<Rat>> = Vec::new();
    for form in a.forms() {
        let mut conditions: HashMap<Mono, Vec<(u32, Rat)>> = HashMap::new();
        for i in 1..=n {
            let c = form.coeff(i);
            if c == 0 {
                continue;
            }
            for (mi, m) in monos.iter().enumerate() {
                if let Some((target, sign)) = restrict_mono(m, form) {
                    conditions
                        .entry(target)
                        .or_default()
                        .push((col(i, mi) as u32, rat(c * sign)));
                }
            }
        }
        for (_, mut row) in conditions {
            row.sort_by_key(|&(c, _)| c);
            // merge duplicate columns
            let mut merged: SparseRow<Rat> = Vec::with_capacity(row.len());
            for (c, v) in row {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            if !merged.is_empty() {
                rows.push(merged);
            }
        }
    }
    right_kernel(&rows, ncols)
        .into_iter()
        .map(|v| {
            let coeffs = (1..=n)
                .map(|i| {
                    let mut p = Poly::zero(n);
                    for (mi, m) in monos.iter().enumerate() {
                        let c = &v[col(i, mi)];
                        if !c.is_zero() {
                            p.add_term(m.clone(), c.clone());
                        }
                    }
                    p
                })
                .collect();
            Derivation::new(coeffs)
        })
        .collect()
}

/// Hilbert series of the Solomon–Terao algebra computed without any basis:
/// the degree-d ideal piece is the symbol image of the degree-(d−1)
/// derivations, found by brute force.
pub fn st_series_bruteforce(a: &Arrangement, dmax: u32) -> QPoly {
    let n = a.n;
    let dims: Vec<(u32, usize)> = (0..=dmax)
        .into_par_iter()
        .map(|d| {
            let piece = PieceBasis::new(n, d, 0);
            let dim = piece.dim();
            let rank = if d == 0 {
                0
            } else {
                let mut m = GradedMatrix::new(piece);
                for delta in der_piece(a, d - 1) {
                    m.push(&SuperElem::from_poly(&delta.symbol()));
                }
                m.rank_policy(RankPolicy::Exact)
            };
            (d, dim - rank)
        })
        .collect();
    let mut q = QPoly::zero();
    for (d, dim) in dims {
        if dim > 0 {
            q.add_term(rat(dim as i64), d);
        }
    }
    q
}

/// Do two bosonic ideals have the same graded pieces up to dmax?
pub fn graded_spans_equal(a: &IdealSpec, b: &IdealSpec, dmax: u32, policy: RankPolicy) -> bool {
    (0..=dmax).into_par_iter().all(|d| {
        let pa = ideal_piece(a, d, 0);
        let pb = ideal_piece(b, d, 0);
        let ra = pa.rank_policy(policy);
        if ra != pb.rank_policy(policy) {
            return false;
        }
        pa.rank_with_rows(&pb.rows, policy) == ra
    })
}

/// The deletion bookkeeping behind the basis induction: walking from 𝓑̃_J
/// down the deletion chain (the coordinate form x_n, then the sum and
/// difference forms pairing x_n with each smaller index outside J), every
/// step satisfies the Hilbert-series additivity of the short exact sequence
///   0 → ST(next) → ST(current) → ST(𝓑̃_{J'}) → 0
/// with the restriction living one variable down.
pub fn verify_deletion_additivity(j: &Subset) -> bool {
    let n = j.ambient();
    let dmax = b_tilde_j(j).size() as u32 + 1;
    let restriction = if n == 1 {
        QPoly::one()
    } else {
        let j_prime = Subset::new(n - 1, j.iter().filter(|&a| a < n));
        st_series_bruteforce(&b_tilde_j(&j_prime), dmax)
    };
    let mut chain = vec![b_tilde_j(j)];
    let mut forms = vec![LinearForm::Coord(n)];
    for a in (1..n).rev() {
        if !j.contains(a) {
            forms.push(LinearForm::Sum(a, n));
            forms.push(LinearForm::Diff(a, n));
        }
    }
    // deletion order: the coordinate form first, then pairs by ascending index
    forms[1..].reverse();
    for f in &forms {
        let next = chain.last().unwrap().delete(f);
        chain.push(next);
    }
    let series: Vec<QPoly> = chain
        .par_iter()
        .map(|a| st_series_bruteforce(a, dmax))
        .collect();
    series.windows(2).all(|w| {
        let lhs = &w[0];
        let shifted = &(&w[1] * &QPoly::term(rat(1), 1)) + &restriction;
        *lhs == shifted
    })
}

/// Prefix products 1, x_i, x_i(x_{j1}+x_i), x_i(x_{j1}²−x_i²), … over the
/// split factors of the smaller indices outside J.
pub fn s_set(j: &Subset, i: u32) -> Vec<Poly> {
    prefix_products(j, i, true)
}

/// The same ladder without the leading x_i factor.
pub fn t_set(j: &Subset, i: u32) -> Vec<Poly> {
    prefix_products(j, i, false)
}

fn prefix_products(j: &Subset, i: u32, with_xi: bool) -> Vec<Poly> {
    let n = j.ambient();
    let mut seq = Vec::new();
    if with_xi {
        seq.push(Poly::var(n, i));
    }
    for a in (1..i).filter(|a| !j.contains(*a)) {
        seq.push(Poly::var(n, a).add(&Poly::var(n, i)));
        seq.push(Poly::var(n, a).sub(&Poly::var(n, i)));
    }
    let mut out = vec![Poly::one(n)];
    let mut acc = Poly::one(n);
    for f in seq {
        acc = acc.mul(&f);
        out.push(acc.clone());
    }
    out
}

/// 𝓜(J): products p_1⋯p_n with p_i from s_{J,i} (i ∉ J) or t_{J,i} (i ∈ J).
pub fn m_family(j: &Subset) -> Vec<Poly> {
    let n = j.ambient();
    let mut prods = vec![Poly::one(n)];
    for i in 1..=n {
        let choices = if j.contains(i) { t_set(j, i) } else { s_set(j, i) };
        prods = prods
            .iter()
            .flat_map(|p| choices.iter().map(move |c| p.mul(c)))
            .collect();
    }
    prods
}

/// 𝓜̃(J): products with p_i ∈ s_{J,i} for every i.
pub fn m_tilde_family(j: &Subset) -> Vec<Poly> {
    let n = j.ambient();
    let mut prods = vec![Poly::one(n)];
    for i in 1..=n {
        prods = prods
            .iter()
            .flat_map(|p| s_set(j, i).into_iter().map(move |c| p.mul(&c)))
            .collect();
    }
    prods
}

/// The explicit spanning set 𝓜 of the superspace quotient: f·θ_J over all
/// J and f ∈ 𝓜(J).
pub fn m_basis(n: u32) -> Vec<SuperElem> {
    let mut out = Vec::new();
    for j in Subset::all(n) {
        for p in m_family(&j) {
            out.push(SuperElem::poly_times_theta(&p, &j));
        }
    }
    out
}

/// 𝓜 is a basis: its bidegree census equals the closed-form series, and in
/// every bidegree the elements stay independent modulo the ideal piece.
pub fn verify_m_basis(n: u32, policy: RankPolicy) -> bool {
    let elems = m_basis(n);
    let mut census: BTreeMap<(u32, u32), Vec<&SuperElem>> = BTreeMap::new();
    for e in &elems {
        let (d, k) = e.bidegree().expect("basis element not homogeneous");
        census.entry((d, k)).or_default().push(e);
    }
    let closed = closed_hilbert(n);
    let counts_match = closed
        .iter()
        .all(|(d, k, c)| census.get(&(d, k)).map_or(0, |v| v.len() as i64) == c)
        && census
            .iter()
            .all(|(&(d, k), v)| closed.coeff(d, k) == v.len() as i64);
    if !counts_match {
        return false;
    }
    let ideal = crate::coinvariants::si_b_generators(n);
    census
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .all(|((d, k), group)| {
            let piece = ideal_piece(&ideal, d, k);
            let rank = piece.rank_policy(policy);
            let rows: Vec<SparseRow<Rat>> =
                group.iter().map(|e| piece.basis.row_of(e)).collect();
            piece.rank_with_rows(&rows, policy) == rank + group.len()
        })
}

/// 𝓜(J) is a basis of the colon quotient: census ∏_i [st_i+1]_q, elements
/// independent modulo (I^B : f_J), and the counts fill the quotient.
pub fn verify_mj_colon_basis(j: &Subset, policy: RankPolicy) -> bool {
    let n = j.ambient();
    let ideal = i_b_generators(n);
    let f = crate::pji::f_j(j);
    let family = m_family(j);
    let expected = staircase_product(j);
    let mut by_degree: BTreeMap<u32, Vec<&Poly>> = BTreeMap::new();
    for p in &family {
        by_degree
            .entry(p.homogeneous_degree().expect("family element not homogeneous"))
            .or_default()
            .push(p);
    }
    let dmax = expected.degree().unwrap_or(0) + 2;
    let census_ok = (0..=dmax)
        .all(|d| rat(by_degree.get(&d).map_or(0, |v| v.len()) as i64) == expected.coeff(d));
    if !census_ok {
        return false;
    }
    (0..=dmax).into_par_iter().all(|d| {
        let count = by_degree.get(&d).map_or(0, |v| v.len());
        let colon = colon_piece(&ideal, &f, d);
        let dim = colon.basis.dim();
        // the family must complement the colon piece exactly
        if colon.nrows() + count != dim {
            return false;
        }
        let rows: Vec<SparseRow<Rat>> = by_degree
            .get(&d)
            .map(|v| {
                v.iter()
                    .map(|p| colon.basis.row_of(&SuperElem::from_poly(p)))
                    .collect()
            })
            .unwrap_or_default();
        colon.rank_with_rows(&rows, policy) == colon.nrows() + count
    })
}

/// The ST ideal of the ρ^J basis has the same graded pieces as the colon
/// ideal (I^B : f_J), degree by degree up to the socle with a guard.
pub fn verify_st_colon(j: &Subset, policy: RankPolicy) -> bool {
    let n = j.ambient();
    let rhos: Vec<Derivation> = (1..=n).map(|i| rho_j(j, i)).collect();
    let st = st_ideal(&rhos);
    let f = crate::pji::f_j(j);
    let ideal = i_b_generators(n);
    (0..=n * n + 2).into_par_iter().all(|d| {
        let colon = colon_piece(&ideal, &f, d);
        let piece = ideal_piece(&st, d, 0);
        let r = colon.nrows();
        piece.rank_policy(policy) == r && colon.rank_with_rows(&piece.rows, policy) == r
    })
}

/// Multiplication by ∏_{j∈J} x_j sends 𝓜(J) into 𝓜̃(J), element by element.
pub fn verify_injection(j: &Subset) -> bool {
    let n = j.ambient();
    let xj = j
        .iter()
        .fold(Poly::one(n), |acc, a| acc.mul(&Poly::var(n, a)));
    let tilde = m_tilde_family(j);
    m_family(j).iter().all(|p| tilde.contains(&p.mul(&xj)))
}

/// Observational comparison of 𝓜's leading monomials against the box of
/// staircase-bounded monomials; never an assertion.
pub struct LeadingReport {
    pub total: usize,
    pub matches: bool,
    pub first_mismatch: Option<String>,
}

pub fn leading_monomial_report(n: u32) -> LeadingReport {
    let mut leading: Vec<(Subset, Mono)> = Vec::new();
    for j in Subset::all(n) {
        for p in m_family(&j) {
            let (m, _) = p.leading().expect("family element is zero");
            leading.push((j.clone(), m.clone()));
        }
    }
    let mut expected: Vec<(Subset, Mono)> = Vec::new();
    for j in Subset::all(n) {
        let st = staircase(&j);
        let mut stack = vec![Vec::<u32>::new()];
        for bound in &st {
            stack = stack
                .iter()
                .flat_map(|pre| {
                    (0..=*bound).map(move |e| {
                        let mut v = pre.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        for exps in stack {
            expected.push((j.clone(), Mono::from_exps(exps)));
        }
    }
    leading.sort();
    expected.sort();
    let total = leading.len();
    if leading == expected {
        LeadingReport { total, matches: true, first_mismatch: None }
    } else {
        let mismatch = leading
            .iter()
            .zip(&expected)
            .find(|(a, b)| a != b)
            .map(|((j, m), _)| format!("J={j}, leading {m:?}"))
            .or_else(|| Some("length mismatch".into()));
        LeadingReport { total, matches: false, first_mismatch: mismatch }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::group_order;

    fn sub(n: u32, elems: &[u32]) -> Subset {
        Subset::new(n, elems.iter().copied())
    }

    #[test]
    fn arrangement_sizes() {
        assert_eq!(b_phi_plus(1).size(), 1);
        assert_eq!(b_phi_plus(2).size(), 4);
        assert_eq!(b_phi_plus(3).size(), 9);
        assert_eq!(b_j(&sub(2, &[])), b_phi_plus(2));
        // n=2, J={1}: only x_2 remains
        let a = b_j(&sub(2, &[1]));
        assert_eq!(a.size(), 1);
        assert!(a.contains(&LinearForm::Coord(2)));
        for n in 1..=6u32 {
            for j in Subset::all(n) {
                let st_sum: u32 = staircase(&j).iter().sum();
                assert_eq!(b_j(&j).size() as u32, st_sum, "J={j}");
                let b_sum: u32 = (1..=n).map(|i| b_exponent(&j, i)).sum();
                assert_eq!(b_tilde_j(&j).size() as u32, b_sum, "J={j}");
                assert_eq!(b_tilde_j(&j).size() - b_j(&j).size(), j.len());
            }
        }
    }

    #[test]
    fn tangency_examples() {
        assert!(in_der(&Derivation::euler(2), &b_phi_plus(2)));
        let d1 = Derivation::new(vec![Poly::one(1)]);
        assert!(!in_der(&d1, &b_phi_plus(1)));
    }

    #[test]
    fn rho_and_mu_shapes() {
        let rho = rho_j(&sub(1, &[]), 1);
        assert_eq!(rho.coeff(1).to_string(), "x1");
        let rho = rho_j(&sub(2, &[2]), 2);
        assert_eq!(rho.coeff(1).to_string(), "0");
        assert_eq!(rho.coeff(2).to_string(), "x1^2 - x2^2");
        for n in 1..=4u32 {
            for j in Subset::all(n) {
                let st = staircase(&j);
                for i in 1..=n {
                    assert_eq!(rho_j(&j, i).degree(), Some(st[i as usize - 1]), "J={j}, i={i}");
                    assert_eq!(mu_j(&j, i).degree(), Some(b_exponent(&j, i)), "J={j}, i={i}");
                    if !j.contains(i) {
                        assert_eq!(rho_j(&j, i), mu_j(&j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn saito_certifications_small() {
        for n in 1..=3u32 {
            for j in Subset::all(n) {
                let rhos: Vec<Derivation> = (1..=n).map(|i| rho_j(&j, i)).collect();
                assert!(saito_check(&rhos, &b_j(&j)), "rho basis at J={j}");
                let mus: Vec<Derivation> = (1..=n).map(|i| mu_j(&j, i)).collect();
                assert!(saito_check(&mus, &b_tilde_j(&j)), "mu basis at J={j}");
            }
        }
        // a wrong pairing must fail
        let rhos: Vec<Derivation> = (1..=2).map(|i| rho_j(&sub(2, &[1]), i)).collect();
        assert!(!saito_check(&rhos, &b_phi_plus(2)));
    }

    #[test]
    fn st_ideal_of_full_arrangement_is_invariant_ideal() {
        // Euler symbol is the quadratic power sum
        assert_eq!(
            Derivation::euler(3).symbol(),
            crate::poly::power_sum(3, 2)
        );
        for n in 1..=2u32 {
            let rhos: Vec<Derivation> = (1..=n).map(|i| rho_j(&Subset::empty(n), i)).collect();
            let st = st_ideal(&rhos);
            assert!(graded_spans_equal(
                &st,
                &i_b_generators(n),
                n * n + 2,
                RankPolicy::Exact
            ));
        }
    }

    #[test]
    fn st_ideal_realizes_colon_ideals() {
        for n in 1..=2u32 {
            for j in Subset::all(n) {
                assert!(verify_st_colon(&j, RankPolicy::Exact), "J={j}");
            }
        }
    }

    #[test]
    fn brute_force_derivations_match_free_structure() {
        // {x_1}: no constant tangent fields, x_1·∂_1 in degree 1
        let a = b_phi_plus(1);
        assert!(der_piece(&a, 0).is_empty());
        let d1 = der_piece(&a, 1);
        assert_eq!(d1.len(), 1);
        assert!(in_der(&d1[0], &a));
        // free with exponents (1, 3): dim Der_e = Σ_i dim ℂ[x]_{e−e_i}
        let a = b_phi_plus(2);
        for e in 0..=5u32 {
            let expect: usize = [1u32, 3]
                .iter()
                .filter(|&&exp| e >= exp)
                .map(|&exp| (e - exp + 1) as usize)
                .sum();
            assert_eq!(der_piece(&a, e).len(), expect, "degree {e}");
        }
    }

    #[test]
    fn st_series_agrees_with_exponents() {
        // for a certified free basis the quotient is a complete
        // intersection in degrees exponent+1
        for j in Subset::all(2) {
            let a = b_tilde_j(&j);
            let expect = (1..=2)
                .map(|i| b_exponent(&j, i))
                .fold(QPoly::one(), |acc, e| &acc * &crate::combinatorics::q_int(e + 1));
            assert_eq!(st_series_bruteforce(&a, a.size() as u32 + 1), expect, "J={j}");
        }
    }

    #[test]
    fn deletion_additivity_small() {
        for n in 1..=2u32 {
            for j in Subset::all(n) {
                assert!(verify_deletion_additivity(&j), "J={j}");
            }
        }
    }

    #[test]
    fn s_t_ladders() {
        let j = sub(1, &[]);
        let s: Vec<String> = s_set(&j, 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["1", "x1"]);
        assert_eq!(t_set(&j, 1).len(), 1);
        let j = sub(4, &[2, 4]);
        let s: Vec<String> = s_set(&j, 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["1", "x3", "x1*x3 + x3^2", "x1^2*x3 - x3^3"]);
        for n in 1..=4u32 {
            for j in Subset::all(n) {
                let st = staircase(&j);
                for i in 1..=n {
                    let expect = st[i as usize - 1] as usize + 1;
                    if j.contains(i) {
                        assert_eq!(t_set(&j, i).len(), expect);
                    } else {
                        assert_eq!(s_set(&j, i).len(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn m_basis_census() {
        let m1: Vec<String> = m_basis(1).iter().map(|e| e.to_string()).collect();
        assert_eq!(m1, vec!["1", "x1", "t1"]);
        assert_eq!(m_basis(2).len() as i64, 17);
        assert_eq!(m_basis(3).len() as i64, 147);
        assert_eq!(m_basis(2).len() as i64, closed_hilbert(2).eval_one());
        // ordinary part: J=∅ family has |group| elements
        assert_eq!(m_family(&sub(2, &[])).len() as i64, group_order(2));
    }

    #[test]
    fn m_basis_verification_small() {
        assert!(verify_m_basis(1, RankPolicy::Exact));
        assert!(verify_m_basis(2, RankPolicy::Exact));
    }

    #[test]
    fn mj_colon_basis_small() {
        for n in 1..=2u32 {
            for j in Subset::all(n) {
                assert!(verify_mj_colon_basis(&j, RankPolicy::Exact), "J={j}");
            }
        }
    }

    #[test]
    fn injection_into_tilde_family() {
        for n in 1..=3u32 {
            for j in Subset::all(n) {
                assert!(verify_injection(&j), "J={j}");
            }
        }
    }

    #[test]
    fn leading_monomials_observed() {
        for n in 1..=2u32 {
            let report = leading_monomial_report(n);
            assert_eq!(report.total as i64, closed_hilbert(n).eval_one());
            assert!(report.matches, "mismatch: {:?}", report.first_mismatch);
        }
    }
}
