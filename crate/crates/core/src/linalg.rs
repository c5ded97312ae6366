//! Exact linear algebra on graded pieces.
//!
//! Everything reduces to ranks and kernels of sparse matrices whose columns
//! are indexed by the monomial·θ-word basis of one bidegree piece of Ω_n.
//! The workhorse is an incremental sparse row-echelon reducer, generic over
//! the coefficient field so the same code runs over Q and over prime fields.
//!
//! Rank policy: small matrices are eliminated over Q directly.  Large pieces
//! (they appear at n = 4) are first ranked modulo two fixed large primes —
//! ranks mod p never exceed the rational rank, so two agreeing primes give
//! the answer with a margin, and a full-rank result is a certificate.  Any
//! disagreement falls back to the exact rational elimination.

use crate::superspace::{graded_piece, SuperElem};
use crate::poly::{Mono, Poly};
use crate::subset::Subset;
use crate::Rat;
use num::{BigInt, One, Zero};
use std::collections::HashMap;

/// One sparse row: strictly ascending column indices, nonzero values.
pub type SparseRow<F> = Vec<(u32, F)>;

/// Field operations needed by the eliminator.
pub trait Field: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverting zero");
        Rat::one() / self
    }
}

/// Prime field with a compile-time modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Field for Fp<P> {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 as u128 + rhs.0 as u128;
        Fp((s % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            Fp(0)
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverting zero");
        // p is prime: a^(p−2)
        let mut base = *self;
        let mut e = P - 2;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Mersenne prime 2^61 − 1.
pub const P61: u64 = (1 << 61) - 1;
/// 2^64 − 2^32 + 1.
pub const P64: u64 = 18446744069414584321;
/// Mersenne prime 2^31 − 1, third opinion in the fallback chain.
pub const P31: u64 = (1 << 31) - 1;

/// dst += c·src, merging sorted sparse rows.
fn axpy<F: Field>(dst: &SparseRow<F>, c: &F, src: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) if ca == cb => {
                let v = va.add(&c.mul(vb));
                if !v.is_zero() {
                    out.push((ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ca, ref va)), Some(&(cb, _))) if ca < cb => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (Some(_), Some(&(cb, ref vb))) => {
                let v = c.mul(vb);
                if !v.is_zero() {
                    out.push((cb, v));
                }
                j += 1;
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                let v = c.mul(vb);
                if !v.is_zero() {
                    out.push((cb, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental row-echelon form.  Pivot rows are normalized to pivot
/// coefficient 1 and keyed by their pivot column (their least column).
pub struct Reducer<F: Field> {
    pivots: HashMap<u32, SparseRow<F>>,
}

impl<F: Field> Default for Reducer<F> {
    fn default() -> Self {
        Reducer { pivots: HashMap::new() }
    }
}

impl<F: Field> Reducer<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fully reduce `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        // Entries left of the scan frontier can never be pivot columns:
        // each elimination step removes the leftmost pivot column present
        // and only introduces columns from that pivot row, all of which are
        // > its pivot. So scanning left to right terminates.
        let mut frontier = 0usize;
        while frontier < row.len() {
            let (c, v) = row[frontier].clone();
            match self.pivots.get(&c) {
                Some(prow) => {
                    row = axpy(&row, &v.neg(), prow);
                }
                None => frontier += 1,
            }
        }
        row
    }

    /// Reduce and, if nonzero, adopt as a new pivot row. Returns the pivot
    /// column of the adopted row.
    pub fn insert(&mut self, row: SparseRow<F>) -> Option<u32> {
        let row = self.reduce(row);
        let (c, lead) = row.first()?.clone();
        let inv = lead.inv();
        let row: SparseRow<F> = row.into_iter().map(|(i, v)| (i, v.mul(&inv))).collect();
        self.pivots.insert(c, row);
        Some(c)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    pub fn pivot_row(&self, c: u32) -> Option<&SparseRow<F>> {
        self.pivots.get(&c)
    }

    /// Is the vector in the row span?
    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of the given rows over the field.
pub fn rank_rows<F: Field>(rows: &[SparseRow<F>]) -> usize {
    let mut red = Reducer::new();
    for r in rows {
        red.insert(r.clone());
    }
    red.rank()
}

fn row_mod<const P: u64>(row: &SparseRow<Rat>) -> Option<SparseRow<Fp<P>>> {
    let p = BigInt::from(P);
    let mut out = Vec::with_capacity(row.len());
    for (c, v) in row {
        let num = ((v.numer() % &p) + &p) % &p;
        let den = ((v.denom() % &p) + &p) % &p;
        if den.is_zero() {
            return None; // denominator hits the modulus; skip this prime
        }
        let num: u64 = num.try_into().unwrap();
        let den: u64 = den.try_into().unwrap();
        let val = Fp::<P>(num).mul(&Fp::<P>(den).inv());
        if !val.is_zero() {
            out.push((*c, val));
        }
    }
    Some(out)
}

fn rank_mod<const P: u64>(rows: &[SparseRow<Rat>]) -> Option<usize> {
    let mut red = Reducer::<Fp<P>>::new();
    for r in rows {
        red.insert(row_mod::<P>(r)?);
    }
    Some(red.rank())
}

/// How ranks of large integer matrices are computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankPolicy {
    /// Always eliminate over Q.
    Exact,
    /// Rank modulo two large primes first; agreement (or a full-rank
    /// certificate) is accepted, disagreement falls back to `Exact`.
    Hybrid,
}

/// Entry threshold below which `Hybrid` just runs the exact elimination.
const HYBRID_CUTOFF: usize = 2_000_000;

/// Rank of rational rows under the given policy.
pub fn rank_rows_policy(rows: &[SparseRow<Rat>], ncols: usize, policy: RankPolicy) -> usize {
    let small = rows.len().saturating_mul(ncols) <= HYBRID_CUTOFF;
    if policy == RankPolicy::Exact || small {
        return rank_rows(rows);
    }
    let bound = rows.len().min(ncols);
    let r1 = rank_mod::<P61>(rows);
    let r2 = rank_mod::<P64>(rows);
    match (r1, r2) {
        (Some(a), Some(b)) if a == b && a == bound => a, // full rank: certified
        (Some(a), Some(b)) if a == b => {
            // agreement of two independent primes; take a third opinion
            match rank_mod::<P31>(rows) {
                Some(c) if c == a => a,
                _ => rank_rows(rows),
            }
        }
        _ => rank_rows(rows),
    }
}

/// Basis of one bidegree piece of Ω_n with O(1) column lookup.
pub struct PieceBasis {
    n: u32,
    d: u32,
    k: u32,
    elems: Vec<(Subset, Mono)>,
    index: HashMap<(Subset, Mono), u32>,
}

impl PieceBasis {
    pub fn new(n: u32, d: u32, k: u32) -> Self {
        let elems = graded_piece(n, d, k);
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        PieceBasis { n, d, k, elems, index }
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.d, self.k)
    }

    pub fn elem(&self, i: u32) -> &(Subset, Mono) {
        &self.elems[i as usize]
    }

    /// Coordinates of a homogeneous element in this piece.
    pub fn row_of(&self, f: &SuperElem) -> SparseRow<Rat> {
        assert_eq!(f.nvars(), self.n, "ambient mismatch");
        let mut row: SparseRow<Rat> = f
            .iter()
            .map(|(w, m, c)| {
                let idx = self
                    .index
                    .get(&(w.clone(), m.clone()))
                    .unwrap_or_else(|| panic!("term x^{m:?}·θ_{w} outside bidegree ({}, {})", self.d, self.k));
                (*idx, c.clone())
            })
            .collect();
        row.sort_by_key(|&(c, _)| c);
        row
    }

    /// The element with the given coordinates.
    pub fn elem_of_row(&self, row: &SparseRow<Rat>) -> SuperElem {
        let mut out = SuperElem::zero(self.n);
        for (c, v) in row {
            let (w, m) = self.elem(*c);
            out.add_term(w.clone(), m.clone(), v.clone());
        }
        out
    }
}

/// Coordinates of a polynomial in the bosonic piece basis (k = 0).
pub fn poly_row(basis: &PieceBasis, p: &Poly) -> SparseRow<Rat> {
    basis.row_of(&SuperElem::from_poly(p))
}

/// A graded piece spanned by explicit elements: the recorded basis gives the
/// column indexing, the rows are the spanning vectors.
pub struct GradedMatrix {
    pub basis: PieceBasis,
    pub rows: Vec<SparseRow<Rat>>,
}

impl GradedMatrix {
    pub fn new(basis: PieceBasis) -> Self {
        GradedMatrix { basis, rows: Vec::new() }
    }

    pub fn push(&mut self, f: &SuperElem) {
        let row = self.basis.row_of(f);
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.basis.dim()
    }

    pub fn rank(&self) -> usize {
        self.rank_policy(RankPolicy::Hybrid)
    }

    pub fn rank_policy(&self, policy: RankPolicy) -> usize {
        rank_rows_policy(&self.rows, self.ncols(), policy)
    }

    /// Row-span membership test for one element.
    pub fn in_span(&self, f: &SuperElem) -> bool {
        let mut red = Reducer::new();
        for r in &self.rows {
            red.insert(r.clone());
        }
        red.contains(self.basis.row_of(f))
    }

    /// Rank of this piece stacked with extra rows.
    pub fn rank_with_rows(&self, extra: &[SparseRow<Rat>], policy: RankPolicy) -> usize {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(extra);
        rank_rows_policy(&rows, self.ncols(), policy)
    }
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column.
pub fn right_kernel(rows: &[SparseRow<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut red = Reducer::<Rat>::new();
    for r in rows {
        red.insert(r.clone());
    }
    let pivot_cols = red.pivot_cols();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivot_cols {
            v[c as usize] = true;
        }
        v
    };
    let mut kernel = Vec::new();
    for f in 0..ncols as u32 {
        if is_pivot[f as usize] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[f as usize] = Rat::one();
        // pivot rows are in echelon form; solve from the right
        for &c in pivot_cols.iter().rev() {
            let row = red.pivot_row(c).unwrap();
            let mut s = Rat::zero();
            for (j, a) in row.iter().skip(1) {
                if !Field::is_zero(&v[*j as usize]) {
                    s += a * &v[*j as usize];
                }
            }
            v[c as usize] = -s; // pivot coefficient is 1
        }
        kernel.push(v);
    }
    kernel
}

/// Basis of the left kernel {c : Σ c_i·rows_i = 0}.  Each incoming row is
/// tracked by the combination that produced it; rows that reduce to zero
/// yield kernel vectors.
pub fn left_kernel(rows: &[SparseRow<Rat>]) -> Vec<Vec<Rat>> {
    let mut pivots: HashMap<u32, (SparseRow<Rat>, Vec<Rat>)> = HashMap::new();
    let m = rows.len();
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut row = r.clone();
        let mut track = vec![Rat::zero(); m];
        track[i] = Rat::one();
        let mut frontier = 0usize;
        while frontier < row.len() {
            let (c, v) = row[frontier].clone();
            match pivots.get(&c) {
                Some((prow, ptrack)) => {
                    row = axpy(&row, &Field::neg(&v), prow);
                    for (t, pt) in track.iter_mut().zip(ptrack) {
                        *t -= &v * pt;
                    }
                }
                None => frontier += 1,
            }
        }
        match row.first() {
            None => kernel.push(track),
            Some((c, lead)) => {
                let inv = Field::inv(lead);
                let c = *c;
                let row: SparseRow<Rat> = row.into_iter().map(|(j, v)| (j, v * &inv)).collect();
                let track: Vec<Rat> = track.into_iter().map(|v| v * &inv).collect();
                pivots.insert(c, (row, track));
            }
        }
    }
    kernel
}

/// Textbook dense rational elimination; the independent oracle the sparse
/// reducer is tested against.
pub fn dense_rank_naive(mut mat: Vec<Vec<Rat>>) -> usize {
    let nrows = mat.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = mat[0].len();
    let mut rank = 0;
    for c in 0..ncols {
        let piv = (rank..nrows).find(|&r| !Field::is_zero(&mat[r][c]));
        let Some(piv) = piv else { continue };
        mat.swap(rank, piv);
        let inv = Field::inv(&mat[rank][c]);
        for v in &mut mat[rank][c..] {
            *v = &*v * &inv;
        }
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && !Field::is_zero(&row[c]) {
                let f = row[c].clone();
                for (v, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Fraction-free (Bareiss) elimination over the integers after clearing
/// denominators; exact divisions throughout.
pub fn bareiss_rank(rows: &[SparseRow<Rat>], ncols: usize) -> usize {
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut lcm = BigInt::one();
        for (_, v) in row {
            lcm = num::integer::lcm(lcm, v.denom().clone());
        }
        let mut dense = vec![BigInt::zero(); ncols];
        for (c, v) in row {
            dense[*c as usize] = v.numer() * (&lcm / v.denom());
        }
        mat.push(dense);
    }
    let nrows = mat.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let piv = (rank..nrows).find(|&r| !mat[r][c].is_zero());
        let Some(piv) = piv else { continue };
        mat.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in c + 1..ncols {
                let num = &mat[rank][c] * &mat[i][j] - &mat[i][c] * &mat[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                mat[i][j] = num / &prev;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[rank][c].clone();
        rank += 1;
    }
    rank
}
