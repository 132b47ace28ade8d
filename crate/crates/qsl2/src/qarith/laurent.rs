use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QArithError;

/// A Laurent polynomial in `v` with arbitrary-precision integer coefficients.
///
/// The map never stores a zero coefficient, so equality of the maps is
/// equality of polynomials. Exponents divisible by 4 are powers of `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::v_pow(0)
    }

    /// The monomial `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `q^i = v^{4i}`.
    pub fn q_pow(i: i64) -> Self {
        Self::v_pow(4 * i)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// True iff the polynomial is `±v^k`.
    pub fn is_unit_monomial(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs().is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest v-exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest v-exponent; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, 0 for zero.
    pub fn degree_span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// True iff every exponent is a multiple of 4, i.e. the polynomial lies
    /// in Z[q, q^{-1}].
    pub fn is_q_polynomial(&self) -> bool {
        self.coeffs.keys().all(|e| e.rem_euclid(4) == 0)
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
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

    /// Multiply by `c * v^e` in place.
    pub fn scale(&mut self, c: &BigInt, e: i64) {
        if c.is_zero() {
            self.coeffs.clear();
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        for (k, val) in old {
            self.coeffs.insert(k + e, val * c);
        }
    }

    pub fn shifted(&self, e: i64) -> Self {
        let mut p = self.clone();
        p.scale(&BigInt::one(), e);
        p
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading (highest-exponent) coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_default()
    }

    /// Trailing (lowest-exponent) coefficient.
    pub fn trailing_coeff(&self) -> BigInt {
        self.min_exp().map(|e| self.coeff(e)).unwrap_or_default()
    }

    /// Exact division over the integers: returns `self / d` if the quotient
    /// exists in Z[v, v^{-1}], else an error. Monomial units of `d` are
    /// absorbed into the Laurent quotient.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly, QArithError> {
        if d.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let d_hi = d.max_exp().unwrap();
        let d_lead = d.leading_coeff();
        // Any quotient exponent below this cannot occur in an exact division:
        // the lowest term of the quotient times the lowest term of the divisor
        // must give the lowest term of the dividend.
        let e_lo = self.min_exp().unwrap() - d.min_exp().unwrap();
        while !rem.is_zero() {
            let r_hi = rem.max_exp().unwrap();
            let r_lead = rem.leading_coeff();
            let (qc, qr) = r_lead.div_rem(&d_lead);
            if !qr.is_zero() {
                return Err(QArithError::InexactDivision);
            }
            let e = r_hi - d_hi;
            if e < e_lo {
                return Err(QArithError::InexactDivision);
            }
            // rem -= qc * v^e * d
            let mut t = d.clone();
            t.scale(&qc, e);
            rem -= &t;
            quot.add_term(e, qc);
            if !rem.is_zero() && rem.max_exp().unwrap() >= r_hi {
                return Err(QArithError::InexactDivision);
            }
        }
        Ok(quot)
    }

    /// Primitive part: divide by the content and normalize the lowest exponent
    /// to zero and the leading coefficient to be positive. Returns the
    /// normalized polynomial plus the extracted unit `(c, e)` with
    /// `self = c * v^e * primitive`.
    pub fn primitive_unit(&self) -> (LaurentPoly, BigInt, i64) {
        if self.is_zero() {
            return (LaurentPoly::zero(), BigInt::zero(), 0);
        }
        let mut c = self.content();
        let e = self.min_exp().unwrap();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        let mut p = LaurentPoly::zero();
        for (k, val) in &self.coeffs {
            p.coeffs.insert(k - e, val / &c);
        }
        (p, c, e)
    }

    /// Polynomial gcd over the rationals, returned as the primitive
    /// representative in Z[v] (lowest exponent 0, positive trailing
    /// coefficient). Uses a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.primitive_unit().0;
        }
        if other.is_zero() {
            return self.primitive_unit().0;
        }
        let mut a = self.primitive_unit().0;
        let mut b = other.primitive_unit().0;
        if a.degree_span() < b.degree_span() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_unit().0;
        }
        a
    }

    /// Evaluate at an integer `v`-value; used only in tests as a cheap probe.
    pub fn eval_int(&self, v: &BigInt) -> Option<BigInt> {
        // Negative exponents only supported when v = ±1.
        let min = self.min_exp().unwrap_or(0);
        if min < 0 && !v.abs().is_one() {
            return None;
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                v.pow(*e as u32)
            } else {
                // v = ±1 here
                v.pow(e.unsigned_abs() as u32)
            };
            acc += c * p;
        }
        Some(acc)
    }
}

/// Pseudo-remainder of ordinary (nonnegative-exponent) polynomials.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff();
        // r = lb * r - lr * v^{dr-db} * b
        r.scale(&lb, 0);
        let mut t = b.clone();
        t.scale(&lr, dr - db);
        r -= &t;
    }
    r
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Renders with q-powers when every exponent is a multiple of 4, else with
/// v-powers. Terms are written from highest to lowest exponent. The output is
/// accepted back by the parser.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let use_q = self.is_q_polynomial();
        let var = if use_q { "q" } else { "v" };
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let exp = if use_q { e / 4 } else { *e };
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if exp == 1 {
                    write!(f, "{}", var)?;
                } else {
                    write!(f, "{}^{}", var, exp)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("invalid Laurent polynomial: {0}")]
pub struct LaurentParseError(pub String);

impl FromStr for LaurentPoly {
    type Err = LaurentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(LaurentParseError("empty input".into()));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        // Split into signed terms.
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i32;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            // a '-' directly after '^' belongs to the exponent
            while i < bytes.len() && i > start && bytes[i - 1] == b'^' {
                i += 1;
                while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                    i += 1;
                }
            }
            let term = &s[start..i];
            if term.is_empty() {
                return Err(LaurentParseError(s.clone()));
            }
            let (e, c) = parse_term(term).ok_or_else(|| LaurentParseError(term.to_string()))?;
            out.add_term(e, if sign < 0 { -c } else { c });
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(i64, BigInt)> {
    let (coeff_str, var_part) = match term.find(|c| c == 'q' || c == 'v') {
        Some(pos) => (&term[..pos], &term[pos..]),
        None => (term, ""),
    };
    let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
    let coeff = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str.parse::<BigInt>().ok()?
    };
    if var_part.is_empty() {
        return Some((0, coeff));
    }
    let is_q = var_part.starts_with('q');
    let exp_str = &var_part[1..];
    let exp: i64 = if exp_str.is_empty() {
        1
    } else {
        exp_str.strip_prefix('^')?.parse().ok()?
    };
    Some((if is_q { 4 * exp } else { exp }, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_no_zero_coeffs() {
        let a = p("q^2 - 1");
        let b = p("1 - q^2");
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn mul_basic() {
        assert_eq!(&p("q - 1") * &p("q + 1"), p("q^2 - 1"));
        assert_eq!(&p("v^-2") * &p("v^2"), LaurentPoly::one());
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "q^3 - 2*q + 1",
            "-q^-2 + 5",
            "v^3 + v^-3",
            "0",
            "7",
            "-v",
            "3*q^10 - 3*q^-10",
        ] {
            let a = p(s);
            let b: LaurentPoly = a.to_string().parse().unwrap();
            assert_eq!(a, b, "roundtrip of {}", s);
        }
    }

    #[test]
    fn q_render_when_multiple_of_four() {
        assert_eq!(p("v^4").to_string(), "q");
        assert_eq!(p("v^2").to_string(), "v^2");
        assert_eq!(p("v^8 - v^-4").to_string(), "q^2 - q^-1");
    }

    #[test]
    fn exact_div() {
        let a = p("q^2 - 1");
        let b = p("q - 1");
        assert_eq!(a.exact_div(&b).unwrap(), p("q + 1"));
        assert!(p("q^2 + q + 1").exact_div(&p("q + 1")).is_err());
        // Laurent shift in the divisor is fine
        assert_eq!(a.exact_div(&p("q^-1 - q^-2")).unwrap(), p("q^3 + q^2"));
    }

    #[test]
    fn gcd_primitive() {
        let a = &p("q - 1") * &p("q^2 + q + 1");
        let b = &p("q - 1") * &p("q + 1");
        let g = a.gcd(&b);
        assert_eq!(g, p("q - 1"));
        // invariant under unit monomials and scalars
        let a2 = a.shifted(-8);
        let mut b2 = b.clone();
        b2.scale(&BigInt::from(-6), 0);
        assert_eq!(a2.gcd(&b2), p("q - 1"));
    }
}
