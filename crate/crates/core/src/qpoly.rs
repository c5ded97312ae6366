//! Polynomials in the grading variable q, and bigraded (q, z) series.
//!
//! `QPoly` is a univariate polynomial with exact rational coefficients —
//! in practice everything here has nonnegative integer coefficients, but the
//! arithmetic does not assume it.  `BiSeries` records a bigraded dimension
//! count: the coefficient of q^d z^k is the dimension of the (bosonic d,
//! fermionic k) piece, and is therefore an integer.

use crate::{rat, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in q over Q; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::term(rat(1), 0)
    }

    /// c·q^d.
    pub fn term(c: Rat, d: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(d, c);
        }
        QPoly { coeffs }
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = QPoly::zero();
        for (d, c) in pairs {
            p.add_term(rat(c), d);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: u32) -> Rat {
        self.coeffs.get(&d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, c: Rat, d: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(d).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(&d, v)| (d, v * c)).collect(),
        }
    }

    /// Value at q = 1 (the total dimension when this is a Hilbert series).
    pub fn eval_one(&self) -> Rat {
        self.coeffs.values().fold(Rat::zero(), |a, c| a + c)
    }

    /// Exact value at an arbitrary rational point.
    pub fn eval_at(&self, q: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut pow = Rat::one();
        let mut last = 0;
        for (d, c) in self.iter() {
            for _ in last..d {
                pow *= q;
            }
            last = d;
            acc += c * &pow;
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(c.clone(), d);
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(-c.clone(), d);
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &rhs.coeffs {
                out.add_term(c1 * c2, d1 + d2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.iter() {
            write_signed_term(f, &mut first, c, &monomial_qz(d, 0))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bigraded series: coefficient of q^d z^k, always an integer here.
/// These arise as Hilbert series of Artinian quotients, so only finitely
/// many coefficients are nonzero and a map suffices.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiSeries {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl BiSeries {
    pub fn zero() -> Self {
        BiSeries::default()
    }

    pub fn coeff(&self, d: u32, k: u32) -> i64 {
        self.coeffs.get(&(d, k)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, d: u32, k: u32, c: i64) {
        if c == 0 {
            self.coeffs.remove(&(d, k));
        } else {
            self.coeffs.insert((d, k), c);
        }
    }

    /// Add p(q)·z^k; panics if any coefficient of `p` is not an integer.
    pub fn add_qpoly_at(&mut self, p: &QPoly, k: u32) {
        for (d, c) in p.iter() {
            assert!(c.is_integer(), "non-integer coefficient {c} in series");
            let c: i64 = c
                .to_integer()
                .try_into()
                .expect("series coefficient overflows i64");
            self.set(d, k, self.coeff(d, k) + c);
        }
    }

    /// Terms in (fermionic, bosonic) order — the display and comparison order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        let mut keys: Vec<_> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(d, k)| (k, d));
        keys.into_iter().map(|(d, k)| (d, k, self.coeffs[&(d, k)]))
    }

    /// Total value at q = z = 1.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn max_bosonic_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(d, _)| d).max()
    }

    /// First position, in (k, d) order, where the two series differ,
    /// together with both coefficients.
    pub fn first_difference(&self, other: &BiSeries) -> Option<(u32, u32, i64, i64)> {
        let mut keys: Vec<_> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.sort_by_key(|&(d, k)| (k, d));
        keys.dedup();
        for (d, k) in keys {
            let (a, b) = (self.coeff(d, k), other.coeff(d, k));
            if a != b {
                return Some((d, k, a, b));
            }
        }
        None
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, k, c) in self.iter() {
            write_signed_term(f, &mut first, &rat(c), &monomial_qz(d, k))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Render q^d·z^k without its coefficient, "" for the constant monomial.
fn monomial_qz(d: u32, k: u32) -> String {
    let mut parts = Vec::new();
    match d {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{d}")),
    }
    match k {
        0 => {}
        1 => parts.push("z".to_string()),
        _ => parts.push(format!("z^{k}")),
    }
    parts.join("*")
}

/// Append one term of a signed sum: " + "/" - " separators, |c| suppressed
/// when it is 1 next to a nonempty monomial.  Shared by every printer that
/// emits the CLI text format.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &Rat,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    if *first {
        if neg {
            write!(f, "-")?;
        }
        *first = false;
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let a = c.abs();
    if a.is_one() && !mono.is_empty() {
        write!(f, "{mono}")
    } else if mono.is_empty() {
        write!(f, "{a}")
    } else {
        write!(f, "{a}*{mono}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpoly_arith_and_display() {
        let p = QPoly::from_coeffs([(0, 1), (1, 1)]); // 1 + q
        let q = QPoly::from_coeffs([(0, 1), (1, -1)]); // 1 - q
        assert_eq!((&p * &q), QPoly::from_coeffs([(0, 1), (2, -1)]));
        assert_eq!((&p + &q), QPoly::from_coeffs([(0, 2)]));
        assert_eq!((&p - &p), QPoly::zero());
        assert_eq!(p.to_string(), "1 + q");
        assert_eq!((&p * &q).to_string(), "1 - q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p.eval_one(), rat(2));
        // 1 - q^2 at q = 3/2 is -5/4
        assert_eq!((&p * &q).eval_at(&crate::ratio(3, 2)), crate::ratio(-5, 4));
        assert_eq!(QPoly::zero().eval_at(&rat(7)), rat(0));
    }

    #[test]
    fn biseries_order_and_display() {
        let mut s = BiSeries::zero();
        s.set(0, 1, 1);
        s.set(1, 0, 1);
        s.set(0, 0, 1);
        // (k, d) order puts the purely bosonic terms first
        assert_eq!(s.to_string(), "1 + q + z");
        assert_eq!(s.eval_one(), 3);
        let mut t = s.clone();
        t.set(1, 0, 2);
        assert_eq!(s.first_difference(&t), Some((1, 0, 1, 2)));
        assert_eq!(s.first_difference(&s.clone()), None);
    }

    #[test]
    fn biseries_rejects_fractions() {
        let mut s = BiSeries::zero();
        let half = QPoly::term(crate::ratio(1, 2), 0);
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
            s.add_qpoly_at(&half, 0)
        }));
        assert!(r.is_err());
    }
}
