//! Commutative polynomials over Q in x_1..x_n, with dense exponent vectors.
//!
//! The ambient variable count n is small (≤ 8 in every caller), so each
//! monomial stores all n exponents.  Monomials are totally ordered
//! lexicographically with x_1 < x_2 < ⋯ < x_n, i.e. the exponent of x_n is
//! compared first; "leading monomial" always means the maximum in this
//! order.  Printing emits terms in ascending order; the text format is the
//! one the CLI speaks: `4*x2^3 + 2*x2*x3^2 + 2*x2*x4^2`, with `*` and `^`
//! mandatory and whitespace free.

use crate::qpoly::write_signed_term;
use crate::subset::Subset;
use crate::{rat, Rat};
use num::{BigInt, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of length n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: Vec<u32>,
}

impl Mono {
    pub fn one(n: u32) -> Self {
        Mono { exps: vec![0; n as usize] }
    }

    pub fn var(n: u32, i: u32) -> Self {
        Mono::var_pow(n, i, 1)
    }

    /// x_i^e in ambient n (i is 1-based).
    pub fn var_pow(n: u32, i: u32, e: u32) -> Self {
        assert!(1 <= i && i <= n, "variable x{i} out of range 1..={n}");
        let mut exps = vec![0; n as usize];
        exps[i as usize - 1] = e;
        Mono { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Mono { exps }
    }

    pub fn nvars(&self) -> u32 {
        self.exps.len() as u32
    }

    pub fn exp(&self, i: u32) -> u32 {
        self.exps[i as usize - 1]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        assert_eq!(self.exps.len(), other.exps.len(), "ambient mismatch");
        Mono {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// self / other, or None when some exponent would go negative.
    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        assert_eq!(self.exps.len(), other.exps.len(), "ambient mismatch");
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Mono { exps })
    }

    /// All exponents doubled (substituting x_i ↦ x_i²).
    pub fn squared(&self) -> Mono {
        Mono { exps: self.exps.iter().map(|e| 2 * e).collect() }
    }

    /// Monomials of total degree d in ambient n, ascending in `Mono`'s order.
    pub fn all_of_degree(n: u32, d: u32) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; n as usize];
        // enumerate compositions with the last variable varying outermost,
        // smallest exponent first, which is exactly ascending order
        fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Mono>) {
            if pos == 0 {
                exps[0] = left;
                out.push(Mono { exps: exps.clone() });
                return;
            }
            for e in 0..=left {
                exps[pos] = e;
                rec(pos - 1, left - e, exps, out);
            }
        }
        rec(n as usize - 1, d, &mut exps, &mut out);
        out
    }
}

/// Lex with x_n most significant, so x_1 < x_2 < … < x_n as variables.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len(), "ambient mismatch");
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", mono_string(self))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            write!(f, "1")
        } else {
            write!(f, "{}", mono_string(self))
        }
    }
}

/// `x1^3*x2` style; empty string for the unit monomial.
pub(crate) fn mono_string(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in m.exps().iter().enumerate() {
        let i = idx + 1;
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

/// Polynomial over Q with a fixed ambient variable count.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    n: u32,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(n: u32) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Poly::constant(n, rat(1))
    }

    pub fn constant(n: u32, c: Rat) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Mono::one(n), c);
        p
    }

    pub fn var(n: u32, i: u32) -> Self {
        Poly::monomial(Mono::var(n, i), rat(1))
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let n = m.nvars();
        let mut p = Poly::zero(n);
        p.add_term(m, c);
        p
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

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        assert_eq!(m.nvars(), self.n, "ambient mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in ascending monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = Poly::zero(self.n);
        for (m1, c1) in self.iter() {
            for (m2, c2) in rhs.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// ∂/∂x_i.
    pub fn partial(&self, i: u32) -> Poly {
        assert!(1 <= i && i <= self.n, "variable x{i} out of range");
        let mut out = Poly::zero(self.n);
        for (m, c) in self.iter() {
            let e = m.exp(i);
            if e > 0 {
                let dm = m.try_div(&Mono::var(self.n, i)).unwrap();
                out.add_term(dm, c * rat(e as i64));
            }
        }
        out
    }

    /// Max total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Some(d) if nonzero and all terms have total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Greatest term in the monomial order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact division: Some(q) with self = q·g, or None when g does not
    /// divide self.  Leading-term elimination in the monomial order; exact
    /// quotients are reconstructed greedily, non-divisibility shows up as a
    /// leading monomial not divisible by g's.
    pub fn exact_div(&self, g: &Poly) -> Option<Poly> {
        assert_eq!(self.n, g.n, "ambient mismatch");
        assert!(!g.is_zero(), "division by zero polynomial");
        let (gm, gc) = g.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.n);
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.try_div(gm)?;
            let c = rc / gc;
            let t = Poly::monomial(m, c);
            rem = rem.sub(&t.mul(g));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Reinterpret in a larger ambient (new variables get exponent 0).
    pub fn extend_to(&self, n: u32) -> Poly {
        assert!(n >= self.n);
        let mut out = Poly::zero(n);
        for (m, c) in self.iter() {
            let mut exps = m.exps().to_vec();
            exps.resize(n as usize, 0);
            out.add_term(Mono::from_exps(exps), c.clone());
        }
        out
    }

    pub fn parse(n: u32, s: &str) -> Result<Poly, ParseError> {
        let terms = parse_sum(n, s, false)?;
        let mut out = Poly::zero(n);
        for t in terms {
            let mut m = Mono::one(n);
            for (i, e) in t.xs {
                m = m.mul(&Mono::var_pow(n, i, e));
            }
            out.add_term(m, t.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.iter() {
            write_signed_term(f, &mut first, c, &mono_string(m))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Complete homogeneous polynomial h_r in the variables {x_s : s ∈ S}.
/// h_0 = 1; r < 0 gives 0.
pub fn h_complete(s: &Subset, r: i64) -> Poly {
    let n = s.ambient();
    if r < 0 {
        return Poly::zero(n);
    }
    let vars: Vec<u32> = s.iter().collect();
    let mut out = Poly::zero(n);
    if vars.is_empty() {
        if r == 0 {
            out.add_term(Mono::one(n), rat(1));
        }
        return out;
    }
    // one term per multiset of size r from vars
    fn rec(n: u32, vars: &[u32], from: usize, left: u32, m: Mono, out: &mut Poly) {
        if from + 1 == vars.len() {
            out.add_term(m.mul(&Mono::var_pow(n, vars[from], left)), rat(1));
            return;
        }
        for e in 0..=left {
            let mm = m.mul(&Mono::var_pow(n, vars[from], e));
            rec(n, vars, from + 1, left - e, mm, out);
        }
    }
    rec(n, &vars, 0, r as u32, Mono::one(n), &mut out);
    out
}

/// h²_r(S): the complete homogeneous h_r evaluated in squared variables
/// {x_s² : s ∈ S}.  h²_0 = 1 and h²_{r<0} = 0.
pub fn h2(s: &Subset, r: i64) -> Poly {
    let n = s.ambient();
    let mut out = Poly::zero(n);
    for (m, c) in h_complete(s, r).iter() {
        out.add_term(m.squared(), c.clone());
    }
    out
}

/// Power sum p_m = x_1^m + ⋯ + x_n^m.
pub fn power_sum(n: u32, m: u32) -> Poly {
    let mut out = Poly::zero(n);
    for i in 1..=n {
        out.add_term(Mono::var_pow(n, i, m), rat(1));
    }
    out
}

/// One parsed summand: coefficient with sign applied, x-factors as
/// (index, exponent), t-factors in written order.
pub(crate) struct RawTerm {
    pub coeff: Rat,
    pub xs: Vec<(u32, u32)>,
    pub ts: Vec<u32>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("index {0} out of range 1..={1}")]
    IndexRange(u32, u32),
    #[error("fermionic letters are not allowed here")]
    ThetaNotAllowed,
    #[error("fermionic letter t{0} cannot carry an exponent")]
    ThetaExponent(u32),
    #[error("division by zero in coefficient")]
    ZeroDenominator,
    #[error("empty input")]
    Empty,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return match self.src.get(self.pos) {
                Some(&c) => Err(ParseError::Unexpected(c as char, self.pos)),
                None => Err(ParseError::Eof),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_number(&mut self) -> Result<u32, ParseError> {
        let n = self.number()?;
        n.try_into().map_err(|_| ParseError::Unexpected('#', self.pos))
    }
}

/// Parse a signed sum of products of rational constants, `x<i>[^<e>]`, and
/// (when `allow_theta`) `t<i>` factors.  `*` between factors and `^` before
/// exponents are mandatory; whitespace is free.
pub(crate) fn parse_sum(n: u32, s: &str, allow_theta: bool) -> Result<Vec<RawTerm>, ParseError> {
    let mut lx = Lexer::new(s);
    let mut terms = Vec::new();
    if lx.peek().is_none() {
        return Err(ParseError::Empty);
    }
    loop {
        // sign prefix
        let mut sign = rat(1);
        match lx.peek() {
            Some(b'+') => {
                lx.bump();
            }
            Some(b'-') => {
                lx.bump();
                sign = rat(-1);
            }
            Some(_) => {}
            None => return Err(ParseError::Eof),
        }
        let mut term = RawTerm { coeff: sign, xs: Vec::new(), ts: Vec::new() };
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.number()?;
                    let mut val = Rat::from_integer(num);
                    if lx.peek() == Some(b'/') {
                        lx.bump();
                        let den = lx.number()?;
                        if den.is_zero() {
                            return Err(ParseError::ZeroDenominator);
                        }
                        val /= Rat::from_integer(den);
                    }
                    term.coeff *= val;
                }
                Some(b'x') | Some(b't') => {
                    let kind = lx.bump().unwrap();
                    let i = lx.small_number()?;
                    if i < 1 || i > n {
                        return Err(ParseError::IndexRange(i, n));
                    }
                    let mut e = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.bump();
                        e = lx.small_number()?;
                    }
                    if kind == b'x' {
                        term.xs.push((i, e));
                    } else {
                        if !allow_theta {
                            return Err(ParseError::ThetaNotAllowed);
                        }
                        if e != 1 {
                            return Err(ParseError::ThetaExponent(i));
                        }
                        term.ts.push(i);
                    }
                }
                Some(c) => return Err(ParseError::Unexpected(c as char, lx.pos)),
                None => return Err(ParseError::Eof),
            }
            match lx.peek() {
                Some(b'*') => {
                    lx.bump();
                }
                _ => break,
            }
        }
        terms.push(term);
        match lx.peek() {
            None => break,
            Some(b'+') | Some(b'-') => {}
            Some(c) => return Err(ParseError::Unexpected(c as char, lx.pos)),
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn p(n: u32, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn mono_order_is_lex_from_the_top_variable() {
        // x2 beats any power of x1
        assert!(Mono::var(2, 2) > Mono::var_pow(2, 1, 5));
        assert!(Mono::var_pow(3, 3, 1) > Mono::var_pow(3, 2, 9));
        assert!(Mono::one(2) < Mono::var(2, 1));
    }

    #[test]
    fn all_of_degree_ascending() {
        let ms = Mono::all_of_degree(2, 2);
        let strs: Vec<_> = ms.iter().map(|m| format!("{m:?}")).collect();
        assert_eq!(strs, vec!["x1^2", "x1*x2", "x2^2"]);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Mono::all_of_degree(4, 3).len(), 20); // C(6,3)
    }

    #[test]
    fn arithmetic_and_partial() {
        let f = p(2, "x1^2 + 2*x1*x2");
        assert_eq!(f.partial(1), p(2, "2*x1 + 2*x2"));
        assert_eq!(f.partial(2), p(2, "2*x1"));
        let g = f.mul(&f);
        assert_eq!(g, p(2, "x1^4 + 4*x1^3*x2 + 4*x1^2*x2^2"));
        assert_eq!(f.sub(&f), Poly::zero(2));
        assert_eq!(f.homogeneous_degree(), Some(2));
        assert_eq!(p(2, "x1 + x2^2").homogeneous_degree(), None);
    }

    #[test]
    fn display_matches_canonical_order() {
        let f = p(4, "2*x2*x4^2 + 4*x2^3 + 2*x2*x3^2");
        assert_eq!(f.to_string(), "4*x2^3 + 2*x2*x3^2 + 2*x2*x4^2");
        assert_eq!(Poly::zero(3).to_string(), "0");
        assert_eq!(Poly::one(3).to_string(), "1");
        assert_eq!(p(2, "x1 - x2").to_string(), "x1 - x2");
        assert_eq!(p(2, "0").to_string(), "0");
    }

    #[test]
    fn parse_rationals_and_whitespace() {
        let f = Poly::parse(2, "  3/2 * x1 ^ 2\n - x2 + 1 ").unwrap();
        let mut expected = Poly::zero(2);
        expected.add_term(Mono::var_pow(2, 1, 2), ratio(3, 2));
        expected.add_term(Mono::var(2, 2), rat(-1));
        expected.add_term(Mono::one(2), rat(1));
        assert_eq!(f, expected);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Poly::parse(2, "x3"), Err(ParseError::IndexRange(3, 2)));
        assert_eq!(Poly::parse(2, ""), Err(ParseError::Empty));
        assert_eq!(Poly::parse(2, "x1*t1"), Err(ParseError::ThetaNotAllowed));
        assert!(matches!(Poly::parse(2, "x1 x2"), Err(ParseError::Unexpected('x', _))));
        assert!(matches!(Poly::parse(2, "x1 +"), Err(ParseError::Eof)));
        assert_eq!(Poly::parse(2, "1/0"), Err(ParseError::ZeroDenominator));
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["x1^5*x2 - 3*x2^2 + 1/3", "1", "0", "x1*x2*x3"] {
            let f = p(3, s);
            assert_eq!(p(3, &f.to_string()), f);
        }
    }

    #[test]
    fn h_complete_and_h2_values() {
        let s = Subset::new(4, [2, 3, 4]);
        assert_eq!(h_complete(&s, 0), Poly::one(4));
        assert!(h_complete(&s, -1).is_zero());
        assert_eq!(h_complete(&s, 1), p(4, "x2 + x3 + x4"));
        // h²_2({2,3,4}) — all squared-variable monomials of honest degree 4
        assert_eq!(
            h2(&s, 2),
            p(4, "x2^4 + x3^4 + x4^4 + x2^2*x3^2 + x3^2*x4^2 + x2^2*x4^2")
        );
        assert_eq!(h2(&Subset::new(1, [1]), 3), p(1, "x1^6"));
        assert_eq!(h_complete(&Subset::empty(2), 0), Poly::one(2));
        assert!(h_complete(&Subset::empty(2), 2).is_zero());
    }

    #[test]
    fn h_complete_variable_swap_identity() {
        // h_r(S) + x_b·h_{r−1}(S ∪ b) = h_r((S ∪ b) − a) + x_a·h_{r−1}(S ∪ b)
        for n in 2..=4u32 {
            for s in Subset::all(n) {
                for a in s.iter() {
                    for b in s.complement().iter() {
                        for r in 0..=3i64 {
                            let sb = s.with(b);
                            let lhs = h_complete(&s, r)
                                .add(&Poly::var(n, b).mul(&h_complete(&sb, r - 1)));
                            let rhs = h_complete(&sb.without(a), r)
                                .add(&Poly::var(n, a).mul(&h_complete(&sb, r - 1)));
                            assert_eq!(lhs, rhs, "n={n} S={s} a={a} b={b} r={r}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn h2_derivative_identity() {
        // ∂_a h²_r(S) = (x_a² − x_b²)·∂_a h²_{r−1}(S∪b) + 2x_a·h²_{r−1}(S∪b)
        for n in 2..=4u32 {
            for s in Subset::all(n) {
                for a in s.iter() {
                    for b in s.complement().iter() {
                        for r in 2..=4i64 {
                            let sb = s.with(b);
                            let lhs = h2(&s, r).partial(a);
                            let xa2 = Poly::var(n, a).pow(2);
                            let xb2 = Poly::var(n, b).pow(2);
                            let rhs = xa2
                                .sub(&xb2)
                                .mul(&h2(&sb, r - 1).partial(a))
                                .add(&Poly::var(n, a).scale(&rat(2)).mul(&h2(&sb, r - 1)));
                            assert_eq!(lhs, rhs, "n={n} S={s} a={a} b={b} r={r}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        let f = p(3, "x1^2 - x2^2");
        let g = p(3, "x1 + x2");
        assert_eq!(f.exact_div(&g), Some(p(3, "x1 - x2")));
        assert_eq!(f.exact_div(&p(3, "x1 + x3")), None);
        assert_eq!(Poly::zero(3).exact_div(&g), Some(Poly::zero(3)));
        // dividing by a constant always works
        assert_eq!(f.exact_div(&p(3, "2")), Some(f.scale(&ratio(1, 2))));
    }

    #[test]
    fn power_sum_values() {
        assert_eq!(power_sum(3, 2), p(3, "x1^2 + x2^2 + x3^2"));
        assert_eq!(power_sum(1, 4), p(1, "x1^4"));
    }
}
