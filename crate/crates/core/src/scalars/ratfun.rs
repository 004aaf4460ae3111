//! Rational functions in the parameter `t`, in canonical reduced form.

use super::{Rat, ScalarError, UniPoly};
use crate::field::Field;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// A quotient of univariate polynomials over the rationals.
///
/// Canonical form: numerator and denominator coprime, denominator monic.
/// Pole orders are valuations of the denominator and are unaffected by this
/// normalization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// Builds `num/den` and reduces to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = lead.recip()?;
        Ok(RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: UniPoly::one(),
            den: UniPoly::one(),
        }
    }

    pub fn from_unipoly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFun::from_unipoly(UniPoly::constant(c))
    }

    /// The parameter `t`.
    pub fn var() -> Self {
        RatFun::from_unipoly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == UniPoly::one() && self.den == UniPoly::one()
    }

    /// True when the denominator is 1, i.e. the value is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den == UniPoly::one()
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Exact evaluation at `t`; errors at a pole.
    pub fn eval(&self, t: &Rat) -> Result<Rat, ScalarError> {
        let den = self.den.eval(t);
        if den.is_zero() {
            return Err(ScalarError::EvalAtPole);
        }
        Ok(&self.num.eval(t) / &den)
    }

    /// Pole order at a squarefree factor: the valuation of the denominator.
    pub fn pole_order_at(&self, factor: &UniPoly) -> Result<u32, ScalarError> {
        self.den.valuation(factor)
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFun::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero")
    }
    fn from_rat(r: &Rat) -> Self {
        RatFun::from_rat(r.clone())
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn canonical_form() {
        // (2t^2 - 2) / (4t - 4) = (1/2) t + 1/2
        let f = RatFun::new(UniPoly::from_ints(&[-2, 0, 2]), UniPoly::from_ints(&[-4, 4])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &UniPoly::new(vec![Rat::new(1, 2), Rat::new(1, 2)]));
        // 3/(16t^3 + 108) normalizes to (3/16)/(t^3 + 27/4)
        let f = RatFun::new(UniPoly::one().scale(&Rat::from_int(3)), UniPoly::from_ints(&[108, 0, 0, 16]))
            .unwrap();
        assert_eq!(f.num(), &UniPoly::constant(Rat::new(3, 16)));
        assert!(f.den().is_monic());
        assert_eq!(f.to_string(), "(3/16)/(t^3 + 27/4)");
        assert!(RatFun::new(UniPoly::one(), UniPoly::zero()).is_err());
    }

    #[test]
    fn arithmetic_and_eval() {
        let t = RatFun::var();
        let one = RatFun::one();
        // 1/(t+1)
        let f = one.checked_div(&(&t + &one)).unwrap();
        assert_eq!(f.eval(&Rat::from_int(1)).unwrap(), Rat::new(1, 2));
        assert_eq!(f.eval(&Rat::from_int(-1)), Err(ScalarError::EvalAtPole));
        // f + (-f) = 0
        assert!((&f + &-&f).is_zero());
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let g = RatFun::new(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g, &t + &one);
    }

    #[test]
    fn pole_orders() {
        // 1/(t^2 (t+3))
        let den = &UniPoly::from_ints(&[0, 0, 1]) * &UniPoly::from_ints(&[3, 1]);
        let f = RatFun::new(UniPoly::one(), den).unwrap();
        assert_eq!(f.pole_order_at(&UniPoly::from_ints(&[0, 1])).unwrap(), 2);
        assert_eq!(f.pole_order_at(&UniPoly::from_ints(&[3, 1])).unwrap(), 1);
        assert_eq!(f.pole_order_at(&UniPoly::from_ints(&[-5, 1])).unwrap(), 0);
    }
}
