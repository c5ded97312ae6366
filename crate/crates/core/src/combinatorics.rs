//! q-combinatorics for the hyperoctahedral story: q-integers, q-double
//! factorials, type-B q-Stirling numbers, staircases attached to subsets,
//! and the closed bigraded Hilbert series they assemble into.
//!
//! The central identity, verified exhaustively by `verify_identity`, is
//!
//!   Σ_{J ⊆ [n], |J| = n−k}  Π_i [st^B_i(J) + 1]_q  =  [2k]!!_q · Stir^B_q(n, k)
//!
//! where st^B(J) is the staircase of J.  Summed over k against z^{n−k} this
//! gives the closed form of the bigraded series computed brute-force in
//! `coinvariants::hilbert_quotient`.

use crate::qpoly::{BiSeries, QPoly};
use crate::subset::Subset;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// [k]_q = 1 + q + … + q^{k−1}; [0]_q = 0.
pub fn q_int(k: u32) -> QPoly {
    QPoly::from_coeffs((0..k).map(|d| (d, 1)))
}

/// [m]!!_q = [m]_q [m−2]_q [m−4]_q ⋯, ending in [1]_q or [2]_q; [0]!!_q = 1.
pub fn q_double_factorial(m: u32) -> QPoly {
    let mut out = QPoly::one();
    let mut i = m;
    while i >= 1 {
        out = &out * &q_int(i);
        i = i.saturating_sub(2);
    }
    out
}

/// Type-B q-Stirling number Stir^B_q(n, k), via the recurrence
///
///   Stir^B_q(n, k) = Stir^B_q(n−1, k−1) + [2k+1]_q · Stir^B_q(n−1, k)
///
/// with Stir^B_q(0, k) = [k = 0] and zero outside 0 ≤ k ≤ n.  Memoized;
/// the table is shared across threads behind a mutex.
pub fn stir_b(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    if n == 0 {
        return QPoly::one();
    }
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32), QPoly>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().unwrap().get(&(n, k)) {
        return v.clone();
    }
    let mut v = &q_int(2 * k + 1) * &stir_b(n - 1, k);
    if k > 0 {
        v = &v + &stir_b(n - 1, k - 1);
    }
    memo.lock().unwrap().insert((n, k), v.clone());
    v
}

/// The staircase st^B(J) = (st^B_1(J), …, st^B_n(J)):
///
///   st^B_1(J) = [1 ∉ J],   st^B_i(J) = st^B_{i−1}(J) + [i ∉ J] + [i−1 ∉ J].
pub fn staircase(j: &Subset) -> Vec<u32> {
    let n = j.ambient();
    let ind = |i: u32| u32::from(!j.contains(i));
    let mut st = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let prev = if i == 1 { 0 } else { st[i as usize - 2] + ind(i - 1) };
        st.push(prev + ind(i));
    }
    st
}

/// Π_{i=1}^{n} [st^B_i(J) + 1]_q — the Hilbert series contribution of J.
pub fn staircase_product(j: &Subset) -> QPoly {
    staircase(j)
        .iter()
        .fold(QPoly::one(), |acc, &s| &acc * &q_int(s + 1))
}

/// Check Σ_{|J| = n−k} Π_i [st^B_i(J)+1]_q = [2k]!!_q · Stir^B_q(n, k)
/// by direct expansion of both sides.
pub fn verify_identity(n: u32, k: u32) -> bool {
    assert!(k <= n, "need 0 ≤ k ≤ n");
    let lhs = Subset::all_of_size(n, (n - k) as usize)
        .iter()
        .fold(QPoly::zero(), |acc, j| &acc + &staircase_product(j));
    let rhs = &q_double_factorial(2 * k) * &stir_b(n, k);
    lhs == rhs
}

/// The closed bigraded series Σ_{k=0}^{n} [2k]!!_q · Stir^B_q(n, k) · z^{n−k}.
pub fn closed_hilbert(n: u32) -> BiSeries {
    let mut out = BiSeries::zero();
    for k in 0..=n {
        let p = &q_double_factorial(2 * k) * &stir_b(n, k);
        out.add_qpoly_at(&p, n - k);
    }
    out
}

/// Order 2^n · n! of the signed permutation group: the total dimension of
/// the ordinary (θ-free) coinvariant ring with Hilbert series ∏_i [2i]_q.
pub fn group_order(n: u32) -> i64 {
    (1..=n as i64).product::<i64>() << n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_int_edges() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), QPoly::one());
        assert_eq!(q_int(4), QPoly::from_coeffs([(0, 1), (1, 1), (2, 1), (3, 1)]));
    }

    #[test]
    fn q_double_factorial_values() {
        assert_eq!(q_double_factorial(0), QPoly::one());
        assert_eq!(q_double_factorial(1), QPoly::one());
        // [4]!! = [4][2] = 1 + 2q + 2q^2 + 2q^3 + q^4
        assert_eq!(
            q_double_factorial(4),
            QPoly::from_coeffs([(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)])
        );
        // [5]!! = [5][3][1]
        assert_eq!(q_double_factorial(5), &q_int(5) * &q_int(3));
    }

    #[test]
    fn stir_b_small_values() {
        assert_eq!(stir_b(0, 0), QPoly::one());
        assert!(stir_b(2, 3).is_zero());
        assert_eq!(stir_b(1, 0), QPoly::one());
        // Stir^B_q(2,1) = 1 + [3]_q = 2 + q + q^2
        assert_eq!(stir_b(2, 1), QPoly::from_coeffs([(0, 2), (1, 1), (2, 1)]));
        assert_eq!(stir_b(3, 3), QPoly::one());
    }

    #[test]
    fn stir_b_recurrence_consistency() {
        for n in 1..=8u32 {
            for k in 0..=n {
                let mut rhs = &q_int(2 * k + 1) * &stir_b(n - 1, k);
                if k > 0 {
                    rhs = &rhs + &stir_b(n - 1, k - 1);
                }
                assert_eq!(stir_b(n, k), rhs, "recurrence fails at ({n},{k})");
            }
        }
    }

    #[test]
    fn staircase_worked_example() {
        let j = Subset::new(6, [2, 5, 6]);
        assert_eq!(staircase(&j), vec![1, 2, 3, 5, 6, 6]);
    }

    #[test]
    fn staircase_extremes() {
        assert_eq!(staircase(&Subset::empty(4)), vec![1, 3, 5, 7]);
        assert_eq!(staircase(&Subset::full(4)), vec![0, 0, 0, 0]);
        assert_eq!(staircase(&Subset::empty(1)), vec![1]);
        assert_eq!(staircase(&Subset::full(1)), vec![0]);
    }

    #[test]
    fn staircase_closed_form() {
        // st^B_i(J) = 2·|{1..i−1} \ J| + [i ∉ J]
        for n in 1..=7u32 {
            for j in Subset::all(n) {
                let st = staircase(&j);
                for i in 1..=n {
                    let outside = (1..i).filter(|&a| !j.contains(a)).count() as u32;
                    let closed = 2 * outside + u32::from(!j.contains(i));
                    assert_eq!(st[i as usize - 1], closed, "J={j} i={i}");
                }
            }
        }
    }

    #[test]
    fn identity_at_the_corner() {
        assert!(verify_identity(8, 3));
    }

    #[test]
    fn closed_hilbert_small() {
        let s1 = closed_hilbert(1);
        assert_eq!(s1.to_string(), "1 + q + z");
        assert_eq!(closed_hilbert(2).eval_one(), 17);
        assert_eq!(closed_hilbert(3).eval_one(), 147);
    }

    #[test]
    fn closed_hilbert_top_degree() {
        for n in 1..=5u32 {
            let s = closed_hilbert(n);
            assert_eq!(s.max_bosonic_degree(), Some(n * n));
            assert_eq!(s.coeff(n * n, 0), 1, "unique top class at q^{{n²}}");
        }
    }

    #[test]
    fn double_count_against_staircases() {
        // Σ_J Π_i (st_i + 1)  =  closed_hilbert(n) at q = z = 1
        for n in 1..=6u32 {
            let by_subsets: i64 = Subset::all(n)
                .iter()
                .map(|j| staircase(j).iter().map(|&s| s as i64 + 1).product::<i64>())
                .sum();
            assert_eq!(by_subsets, closed_hilbert(n).eval_one());
        }
    }

    #[test]
    fn group_order_values() {
        assert_eq!(group_order(1), 2);
        assert_eq!(group_order(2), 8);
        assert_eq!(group_order(3), 48);
        assert_eq!(group_order(4), 384);
        // the group order is the q = 1 value of ∏_i [2i]_q
        for n in 1..=5u32 {
            let prod = (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(2 * i));
            assert_eq!(prod.eval_one(), crate::rat(group_order(n)));
        }
    }
}
