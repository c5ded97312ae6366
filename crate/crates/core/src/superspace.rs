//! The superspace ring Ω_n = Q[x_1..x_n] ⊗ Λ{θ_1..θ_n}.
//!
//! Elements are Q-linear combinations of x^a·θ_W with W ⊆ [n]; the θ's
//! anticommute (θ_i² = 0) and commute with the x's.  Every term is stored
//! with its word sorted ascending, reordering signs absorbed into the
//! coefficient.  Bidegree = (total x-degree, |W|).
//!
//! Operators:
//! - `partial(i)` — ∂/∂x_i;
//! - `partial_theta(i)` — fermionic contraction: kills terms without θ_i,
//!   otherwise removes it with sign (−1)^{s−1} when θ_i is the s-th letter;
//! - `d_j` — Σ_i (∂_i)^j(·)·θ_i, the Euler operator for j = 1;
//! - `d_set(I)` — the composite applying d_j for j ∈ I smallest first
//!   (distinct orders agree up to sign; this one reproduces the worked
//!   minor expansions downstream);
//! - `odot` — f ⊙ g substitutes ∂_i for x_i and the contraction for θ_i in
//!   f (letters of a word acting rightmost-first) and applies the result
//!   to g;
//! - `act` — signed permutations, x_{−i} = −x_i and θ_{−i} = −θ_i.

use crate::poly::{mono_string, parse_sum, Mono, ParseError, Poly};
use crate::qpoly::write_signed_term;
use crate::subset::Subset;
use crate::{rat, Rat};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Sort a list of distinct letters, returning the Koszul sign of the
/// permutation; None if a letter repeats (the product is zero).
fn sort_word(n: u32, letters: &[u32]) -> Option<(i32, Subset)> {
    let mut v = letters.to_vec();
    let mut sign = 1i32;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((sign, Subset::new(n, v)))
}

/// Koszul sign for concatenating two disjoint ascending words w1·w2:
/// (−1)^{#{(a,b) ∈ w1×w2 : a > b}}.
fn merge_sign(w1: &Subset, w2: &Subset) -> i32 {
    let mut inv = 0usize;
    for b in w2.iter() {
        inv += w1.iter().filter(|&a| a > b).count();
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An element of Ω_n.  Terms are keyed by (word, monomial) so that iteration
/// groups the fermionic words together, words ascending, monomials ascending
/// within a word.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperElem {
    n: u32,
    terms: BTreeMap<(Subset, Mono), Rat>,
}

impl SuperElem {
    pub fn zero(n: u32) -> Self {
        SuperElem { n, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: &Poly) -> Self {
        let n = p.nvars();
        let mut out = SuperElem::zero(n);
        for (m, c) in p.iter() {
            out.add_term(Subset::empty(n), m.clone(), c.clone());
        }
        out
    }

    /// θ_W with letters ascending (coefficient +1).
    pub fn theta(w: &Subset) -> Self {
        let mut out = SuperElem::zero(w.ambient());
        out.add_term(w.clone(), Mono::one(w.ambient()), rat(1));
        out
    }

    /// p·θ_W.
    pub fn poly_times_theta(p: &Poly, w: &Subset) -> Self {
        assert_eq!(p.nvars(), w.ambient(), "ambient mismatch");
        SuperElem::from_poly(p).smul(&SuperElem::theta(w))
    }

    pub fn nvars(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Subset, m: Mono, c: Rat) {
        assert_eq!(w.ambient(), self.n, "ambient mismatch");
        assert_eq!(m.nvars(), self.n, "ambient mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((w, m)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms as (word, monomial, coefficient), canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Subset, &Mono, &Rat)> {
        self.terms.iter().map(|((w, m), c)| (w, m, c))
    }

    pub fn coeff(&self, w: &Subset, m: &Mono) -> Rat {
        self.terms.get(&(w.clone(), m.clone())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &SuperElem) -> SuperElem {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (w, m, c) in rhs.iter() {
            out.add_term(w.clone(), m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SuperElem {
        self.scale(&rat(-1))
    }

    pub fn sub(&self, rhs: &SuperElem) -> SuperElem {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> SuperElem {
        if c.is_zero() {
            return SuperElem::zero(self.n);
        }
        SuperElem {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Supercommutative product.
    pub fn smul(&self, rhs: &SuperElem) -> SuperElem {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = SuperElem::zero(self.n);
        for (w1, m1, c1) in self.iter() {
            for (w2, m2, c2) in rhs.iter() {
                if w1.iter().any(|a| w2.contains(a)) {
                    continue;
                }
                let sign = merge_sign(w1, w2);
                out.add_term(w1.union(w2), m1.mul(m2), c1 * c2 * rat(sign as i64));
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> SuperElem {
        self.smul(&SuperElem::from_poly(p))
    }

    /// ∂/∂x_i.
    pub fn partial(&self, i: u32) -> SuperElem {
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            let e = m.exp(i);
            if e > 0 {
                let dm = m.try_div(&Mono::var(self.n, i)).unwrap();
                out.add_term(w.clone(), dm, c * rat(e as i64));
            }
        }
        out
    }

    /// Fermionic contraction ∂^θ_i.
    pub fn partial_theta(&self, i: u32) -> SuperElem {
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            if let Some(pos) = w.elems().iter().position(|&a| a == i) {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term(w.without(i), m.clone(), c * rat(sign));
            }
        }
        out
    }

    /// d_j = Σ_i (∂_i)^j(·)·θ_i, with θ_i multiplied on the right.
    pub fn d_j(&self, j: u32) -> SuperElem {
        assert!(j >= 1, "d_0 is not defined");
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            for i in 1..=self.n {
                if w.contains(i) {
                    continue;
                }
                let e = m.exp(i);
                if e < j {
                    continue;
                }
                // falling factorial e(e−1)⋯(e−j+1)
                let mut f = rat(1);
                for t in 0..j {
                    f *= rat((e - t) as i64);
                }
                let mut exps = m.exps().to_vec();
                exps[i as usize - 1] = e - j;
                // appending θ_i on the right of the ascending word w
                let sign = if w.iter().filter(|&a| a > i).count() % 2 == 0 { 1 } else { -1 };
                out.add_term(w.with(i), Mono::from_exps(exps), c * f * rat(sign));
            }
        }
        out
    }

    /// The composite d_I: apply d_j for j ∈ I, smallest j first.
    /// (Swapping two factors flips the overall sign; this order is the one
    /// under which the θ_K-coefficients of the composite are the minors
    /// det(x_k^{j_i}) with rows and columns both ascending.)
    pub fn d_set(&self, set: &Subset) -> SuperElem {
        let mut out = self.clone();
        for j in set.iter() {
            out = out.d_j(j);
        }
        out
    }

    /// f ⊙ g: substitute ∂_i for x_i and ∂^θ_i for θ_i in f (word letters
    /// acting rightmost-first) and apply to g.
    pub fn odot(&self, g: &SuperElem) -> SuperElem {
        assert_eq!(self.n, g.n, "ambient mismatch");
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            let mut cur = g.clone();
            for &i in w.elems().iter().rev() {
                cur = cur.partial_theta(i);
                if cur.is_zero() {
                    break;
                }
            }
            for i in 1..=self.n {
                for _ in 0..m.exp(i) {
                    cur = cur.partial(i);
                    if cur.is_zero() {
                        break;
                    }
                }
            }
            out = out.add(&cur.scale(c));
        }
        out
    }

    /// Reverse every word: conj(θ_{j1}⋯θ_{jk}) = θ_{jk}⋯θ_{j1}, i.e. sign
    /// (−1)^{k(k−1)/2} per term.
    pub fn conj(&self) -> SuperElem {
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            let k = w.len();
            let sign = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
            out.add_term(w.clone(), m.clone(), c * rat(sign));
        }
        out
    }

    /// Some((d, k)) when nonzero and concentrated in one bidegree.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.iter().map(|(w, m, _)| (m.degree(), w.len() as u32));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// The coefficient of θ_W as a polynomial.
    pub fn word_coeff(&self, w: &Subset) -> Poly {
        let mut out = Poly::zero(self.n);
        for (w2, m, c) in self.iter() {
            if w2 == w {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// The set of words appearing with a nonzero coefficient.
    pub fn word_support(&self) -> Vec<Subset> {
        let mut words: Vec<Subset> = self.iter().map(|(w, _, _)| w.clone()).collect();
        words.dedup();
        words
    }

    /// The purely bosonic part as a polynomial (coefficient of the empty word).
    pub fn bosonic_part(&self) -> Poly {
        self.word_coeff(&Subset::empty(self.n))
    }

    pub fn parse(n: u32, s: &str) -> Result<SuperElem, ParseError> {
        let terms = parse_sum(n, s, true)?;
        let mut out = SuperElem::zero(n);
        for t in terms {
            let mut m = Mono::one(n);
            for (i, e) in t.xs {
                m = m.mul(&Mono::var_pow(n, i, e));
            }
            // a repeated θ-letter makes the term zero
            if let Some((sign, w)) = sort_word(n, &t.ts) {
                out.add_term(w, m, t.coeff * rat(sign as i64));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m, c) in self.iter() {
            let ms = mono_string(m);
            let ts = w.iter().map(|i| format!("t{i}")).collect::<Vec<_>>().join("*");
            let combined = match (ms.is_empty(), ts.is_empty()) {
                (true, true) => String::new(),
                (false, true) => ms,
                (true, false) => ts,
                (false, false) => format!("{ms}*{ts}"),
            };
            write_signed_term(f, &mut first, c, &combined)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The inner-product pairing ⟨f, g⟩ = constant term of f ⊙ conj(g).
pub fn pair(f: &SuperElem, g: &SuperElem) -> Rat {
    f.odot(&g.conj()).coeff(&Subset::empty(f.nvars()), &Mono::one(f.nvars()))
}

/// A signed permutation of [n]: i ↦ img[i−1] ∈ ±[n], with |img| a
/// permutation.  Acts on Ω_n by x_i ↦ ±x_{|π(i)|}, θ_i ↦ ±θ_{|π(i)|}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPerm {
    img: Vec<i32>,
}

impl SignedPerm {
    pub fn new(img: Vec<i32>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n];
        for &t in &img {
            let a = t.unsigned_abs() as usize;
            assert!(a >= 1 && a <= n && !seen[a - 1], "not a signed permutation: {img:?}");
            seen[a - 1] = true;
        }
        SignedPerm { img }
    }

    pub fn identity(n: u32) -> Self {
        SignedPerm::new((1..=n as i32).collect())
    }

    pub fn n(&self) -> u32 {
        self.img.len() as u32
    }

    pub fn image(&self, i: u32) -> i32 {
        self.img[i as usize - 1]
    }
}

impl SuperElem {
    /// The signed-permutation action.
    pub fn act(&self, pi: &SignedPerm) -> SuperElem {
        assert_eq!(pi.n(), self.n, "ambient mismatch");
        let mut out = SuperElem::zero(self.n);
        for (w, m, c) in self.iter() {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; self.n as usize];
            for i in 1..=self.n {
                let e = m.exp(i);
                let t = pi.image(i);
                exps[t.unsigned_abs() as usize - 1] += e;
                if t < 0 && e % 2 == 1 {
                    coeff = -coeff;
                }
            }
            let mut letters: Vec<u32> = Vec::with_capacity(w.len());
            for i in w.iter() {
                let t = pi.image(i);
                if t < 0 {
                    coeff = -coeff;
                }
                letters.push(t.unsigned_abs());
            }
            let (sign, word) = sort_word(self.n, &letters).expect("bijection keeps letters distinct");
            out.add_term(word, Mono::from_exps(exps), coeff * rat(sign as i64));
        }
        out
    }
}

/// Basis of the bidegree-(d, k) piece of Ω_n: words of size k ascending,
/// monomials of degree d ascending within each word.
pub fn graded_piece(n: u32, d: u32, k: u32) -> Vec<(Subset, Mono)> {
    let mut out = Vec::new();
    for w in Subset::all_of_size(n, k as usize) {
        for m in Mono::all_of_degree(n, d) {
            out.push((w.clone(), m));
        }
    }
    out
}
