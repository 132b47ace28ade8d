//! q-integer combinatorics in the `{i}_q = q^i - 1` normalization.

use super::{LaurentPoly, QArithError};

/// `{i}_q = q^i - 1`.
pub fn qbrace(i: i64) -> LaurentPoly {
    let mut p = LaurentPoly::q_pow(i);
    p.add_term(0, (-1).into());
    p
}

/// `{i}_{q,n} = {i}_q {i-1}_q ... {i-n+1}_q`; the empty product for n = 0.
pub fn qbrace_falling(i: i64, n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 0..n as i64 {
        acc = &acc * &qbrace(i - k);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `{n}_q! = {n}_{q,n}`.
pub fn qfact(n: u32) -> LaurentPoly {
    qbrace_falling(n as i64, n)
}

/// `[i]_q = {i}_q / {1}_q`, an exact division.
pub fn qint(i: i64) -> LaurentPoly {
    qbrace(i)
        .exact_div(&qbrace(1))
        .expect("{i}_q is divisible by q - 1")
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn qintfact(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 1..=n as i64 {
        acc = &acc * &qint(k);
    }
    acc
}

/// The q-binomial `{i}_{q,n} / {n}_q!`, an exact division.
///
/// Fails only on an implementation bug, never on valid input, so the error is
/// surfaced rather than panicked on.
pub fn qbinom(i: i64, n: u32) -> Result<LaurentPoly, QArithError> {
    qbrace_falling(i, n).exact_div(&qfact(n))
}

/// Balanced quantum integer `[k] = (q^{k/2} - q^{-k/2}) / (q^{1/2} - q^{-1/2})`
/// as a Laurent polynomial in `v` (`q^{1/2} = v^2`).
pub fn qint_balanced(k: i64) -> LaurentPoly {
    let sign = if k < 0 { -1i64 } else { 1 };
    let k = k.abs();
    let mut p = LaurentPoly::zero();
    for j in 0..k {
        // exponents 2(k-1), 2(k-3), ..., -2(k-1)
        p.add_term(2 * (k - 1 - 2 * j), sign.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn qbrace_values() {
        assert_eq!(qbrace(3), p("q^3 - 1"));
        assert!(qbrace(0).is_zero());
        assert_eq!(qbrace(-1), p("q^-1 - 1"));
    }

    #[test]
    fn falling_products() {
        assert_eq!(qbrace_falling(3, 2), &p("q^3 - 1") * &p("q^2 - 1"));
        assert_eq!(qbrace_falling(5, 0), LaurentPoly::one());
        // a factor {0}_q = 0 kills the product
        assert!(qbrace_falling(2, 3).is_zero());
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(3), p("q^2 + q + 1"));
        assert_eq!(qfact(0), LaurentPoly::one());
        assert_eq!(qfact(2), &p("q^2 - 1") * &p("q - 1"));
    }

    #[test]
    fn qbinom_by_independent_division() {
        // frozen from expanding {4}_{q,2} / {2}_q! by exact division
        assert_eq!(qbinom(4, 2).unwrap(), p("q^4 + q^3 + 2*q^2 + q + 1"));
        assert_eq!(qbinom(3, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qbinom(3, 3).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn qbinom_integrality() {
        for i in 0..=12i64 {
            for n in 0..=i as u32 {
                // exactness of the division is the assertion
                qbinom(i, n).unwrap();
            }
        }
    }

    #[test]
    fn balanced_qint() {
        assert_eq!(qint_balanced(1), LaurentPoly::one());
        assert_eq!(qint_balanced(2), p("v^2 + v^-2"));
        assert_eq!(qint_balanced(3), p("v^4 + 1 + v^-4"));
        // {m}_q / {1}_q differs from the balanced integer by the unit q^{(m-1)/2}
        for m in 1..=6 {
            assert_eq!(qint(m), qint_balanced(m).shifted(2 * (m - 1)));
        }
    }
}
