//! Cyclotomic polynomials in q and factorization of Laurent polynomials into
//! a unit monomial, cyclotomic powers, and a cofactor.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{qbrace, LaurentPoly, QArithError};

/// Möbius function for small arguments, by trial-division factorization.
fn mobius(mut m: u64) -> i64 {
    let mut k = 0;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The m-th cyclotomic polynomial in q, via the Möbius product
/// `Φ_m(q) = ∏_{d|m} (q^d - 1)^{μ(m/d)}` with exact division.
pub fn cyclotomic(m: u32) -> LaurentPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let m = m as u64;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for d in 1..=m {
        if m % d == 0 {
            match mobius(m / d) {
                1 => num = &num * &qbrace(d as i64),
                -1 => den = &den * &qbrace(d as i64),
                _ => {}
            }
        }
    }
    num.exact_div(&den)
        .expect("Möbius product divides exactly")
}

/// True iff `b = a * c` for some Laurent polynomial `c` with integer
/// coefficients (exact division up to monomial units).
pub fn divides(a: &LaurentPoly, b: &LaurentPoly) -> Result<bool, QArithError> {
    if a.is_zero() {
        return Err(QArithError::DivisionByZero);
    }
    Ok(b.exact_div(a).is_ok())
}

/// Factorization of a nonzero Laurent polynomial as
/// `unit_coeff * v^unit_vexp * ∏ Φ_m(q)^{e_m} * cofactor`,
/// with the cofactor primitive, trailing-positive, lowest exponent 0, and not
/// divisible by any Φ_m with m ≤ the search bound used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub unit_coeff: BigInt,
    pub unit_vexp: i64,
    pub cyclotomic_exponents: BTreeMap<u32, u32>,
    pub cofactor: LaurentPoly,
}

impl CycloFactorization {
    /// Reassemble the original polynomial, bit-exact.
    pub fn reassemble(&self) -> LaurentPoly {
        let mut p = LaurentPoly::monomial(self.unit_coeff.clone(), self.unit_vexp);
        for (m, e) in &self.cyclotomic_exponents {
            p = &p * &cyclotomic(*m).pow(*e as u64);
        }
        &p * &self.cofactor
    }
}

impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = LaurentPoly::monomial(self.unit_coeff.clone(), self.unit_vexp);
        write!(f, "({})", unit)?;
        for (m, e) in &self.cyclotomic_exponents {
            if *e == 1 {
                write!(f, " * Phi{}", m)?;
            } else {
                write!(f, " * Phi{}^{}", m, e)?;
            }
        }
        if !self.cofactor.is_one() {
            write!(f, " * ({})", self.cofactor)?;
        }
        Ok(())
    }
}

/// Peel off the unit monomial and all cyclotomic factors `Φ_m(q)` for
/// `m ≤ bound` by repeated exact division.
pub fn factor_cyclotomic(p: &LaurentPoly, bound: u32) -> Result<CycloFactorization, QArithError> {
    if p.is_zero() {
        return Err(QArithError::DivisionByZero);
    }
    let (mut cof, unit_coeff, unit_vexp) = p.primitive_unit();
    let mut exps = BTreeMap::new();
    for m in 1..=bound {
        if cof.is_one() {
            break;
        }
        let phi = cyclotomic(m);
        let mut e = 0u32;
        while let Ok(q) = cof.exact_div(&phi) {
            cof = q;
            e += 1;
        }
        if e > 0 {
            exps.insert(m, e);
        }
    }
    // Φ_1 = q - 1 has trailing coefficient -1, so each peel of it flips the
    // sign of the cofactor; re-extract the unit.
    let (cof, c2, e2) = cof.primitive_unit();
    Ok(CycloFactorization {
        unit_coeff: unit_coeff * c2,
        unit_vexp: unit_vexp + e2,
        cyclotomic_exponents: exps,
        cofactor: cof,
    })
}

/// Default search bound for cyclotomic peeling: four times the v-degree span.
pub(crate) fn default_cyclo_bound(p: &LaurentPoly) -> u32 {
    (4 * p.degree_span().unsigned_abs()).max(4) as u32
}
