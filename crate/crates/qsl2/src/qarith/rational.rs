use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{LaurentPoly, QArithError};

/// A reduced fraction of Laurent polynomials in `v`.
///
/// Normal form: the polynomial gcd (over the rationals) and the integer
/// content gcd are removed, the denominator's lowest exponent is 0, and its
/// leading coefficient is positive. Equality of normal forms is equality in
/// the fraction field, so `PartialEq` is decidable field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalLaurent {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalLaurent {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QArithError> {
        if den.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        let mut r = RationalLaurent { num, den };
        r.normalize();
        Ok(r)
    }

    /// Constructor for numerator/denominator already known to be coprime as
    /// polynomials: only the unit normalization (content, sign, shift) runs.
    fn new_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        let mut r = RationalLaurent { num, den };
        if r.num.is_zero() {
            r.den = LaurentPoly::one();
            return r;
        }
        let cn = r.num.content();
        let cd = r.den.content();
        let c = cn.gcd(&cd);
        let shift = r.den.min_exp().unwrap();
        let mut sign = BigInt::from(1);
        if r.den.leading_coeff().is_negative() {
            sign = -sign;
        }
        let c = c * sign;
        if !(c == BigInt::from(1) && shift == 0) {
            let num = std::mem::take(&mut r.num);
            let den = std::mem::take(&mut r.den);
            r.num = scale_down(num, &c, shift);
            r.den = scale_down(den, &c, shift);
        }
        r
    }

    pub fn zero() -> Self {
        RationalLaurent {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalLaurent {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalLaurent {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `q^i` as a fraction.
    pub fn q_pow(i: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(i))
    }

    /// `v^e` as a fraction.
    pub fn v_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(e))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self, QArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // fast path: denominator already the unit 1
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let cn = self.num.content();
        let cd = self.den.content();
        let c = cn.gcd(&cd);
        let shift = self.den.min_exp().unwrap();
        let mut sign = BigInt::from(1);
        if self.den.leading_coeff().is_negative() {
            sign = -sign;
        }
        let c = c * sign;
        if !(c == BigInt::from(1) && shift == 0) {
            let num = std::mem::take(&mut self.num);
            let den = std::mem::take(&mut self.den);
            self.num = scale_down(num, &c, shift);
            self.den = scale_down(den, &c, shift);
        }
    }
}

fn scale_down(p: LaurentPoly, c: &BigInt, shift: i64) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, v)| (e - shift, v / c)))
}

impl Default for RationalLaurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: &RationalLaurent) -> RationalLaurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalLaurent::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RationalLaurent::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalLaurent::new(num, den).expect("nonzero denominators")
    }
}

impl Sub for &RationalLaurent {
    type Output = RationalLaurent;
    fn sub(self, rhs: &RationalLaurent) -> RationalLaurent {
        self + &(-rhs)
    }
}

impl Neg for &RationalLaurent {
    type Output = RationalLaurent;
    fn neg(self) -> RationalLaurent {
        RationalLaurent {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: &RationalLaurent) -> RationalLaurent {
        if self.is_zero() || rhs.is_zero() {
            return RationalLaurent::zero();
        }
        // multiplying by ±v^e preserves the normal form outright
        if rhs.den.is_one() && rhs.num.is_unit_monomial() {
            let e = rhs.num.min_exp().unwrap();
            let mut num = self.num.shifted(e);
            if rhs.num.trailing_coeff().is_negative() {
                num = -&num;
            }
            return RationalLaurent {
                num,
                den: self.den.clone(),
            };
        }
        if self.den.is_one() && self.num.is_unit_monomial() {
            return rhs * self;
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalLaurent::from_laurent(&self.num * &rhs.num);
        }
        // cross-reduce before multiplying; the two reduced fractions are
        // then pairwise coprime, so no further polynomial gcd is needed
        let g1 = if rhs.den.is_one() {
            LaurentPoly::one()
        } else {
            self.num.gcd(&rhs.den)
        };
        let g2 = if self.den.is_one() {
            LaurentPoly::one()
        } else {
            rhs.num.gcd(&self.den)
        };
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RationalLaurent::new_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RationalLaurent {
    type Output = RationalLaurent;
    fn div(self, rhs: &RationalLaurent) -> RationalLaurent {
        self * &rhs.inverse().expect("division by zero fraction")
    }
}

impl AddAssign<&RationalLaurent> for RationalLaurent {
    fn add_assign(&mut self, rhs: &RationalLaurent) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RationalLaurent> for RationalLaurent {
    fn sub_assign(&mut self, rhs: &RationalLaurent) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RationalLaurent> for RationalLaurent {
    fn mul_assign(&mut self, rhs: &RationalLaurent) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<LaurentPoly> for RationalLaurent {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}
