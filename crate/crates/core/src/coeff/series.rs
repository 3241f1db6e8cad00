use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Symbol};
use crate::error::{Error, Result};

/// Power series in epsilon (q = e^epsilon) truncated after `order`.
/// `order == usize::MAX` marks an exact (polynomial) value such as a constant.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

pub const EXACT: usize = usize::MAX;

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        if order != EXACT {
            coeffs.truncate(order + 1);
        }
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn zero() -> Self {
        Self::new(EXACT, Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(EXACT, vec![c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Expand a polynomial in qh alone, with qh = exp(epsilon/2).
    pub fn expand(p: &LaurentPoly, order: usize) -> Result<Self> {
        for s in p.symbols() {
            if s != Symbol::Qh {
                return Err(Error::UnexpandedSymbol(s.name().to_string()));
            }
        }
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (e, c) in p.terms() {
            // c * exp(k eps / 2) = sum c (k/2)^n / n! eps^n
            let half = BigRational::new(BigInt::from(e[Symbol::Qh.index()]), BigInt::from(2));
            let mut t = c.clone();
            for (n, slot) in coeffs.iter_mut().enumerate() {
                if n > 0 {
                    t = t * &half / BigRational::from_integer(BigInt::from(n));
                }
                *slot += &t;
            }
        }
        Ok(Self::new(order, coeffs))
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(order, (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        if self.is_zero() || o.is_zero() {
            return Self::new(order, Vec::new());
        }
        let mut n = self.coeffs.len() + o.coeffs.len() - 1;
        if order != EXACT {
            n = n.min(order + 1);
        }
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j < n {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(order, out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Division; the numerator must vanish to at least the valuation of the
    /// denominator, and the result loses that many orders of precision.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let v = den.valuation().ok_or(Error::DivisionObstruction { needed: usize::MAX, found: 0 })?;
        let found = self.valuation().unwrap_or(usize::MAX);
        if found < v {
            return Err(Error::DivisionObstruction { needed: v, found });
        }
        let order = self.order.min(den.order);
        let order = if order == EXACT { EXACT } else { order.saturating_sub(v) };
        let num: Vec<BigRational> = self.coeffs.iter().skip(v).cloned().collect();
        let d: Vec<BigRational> = den.coeffs.iter().skip(v).cloned().collect();
        let limit = if order == EXACT {
            // exact quotient only when the denominator is a monomial
            if d.len() != 1 {
                return Err(Error::DivisionObstruction { needed: v, found });
            }
            num.len()
        } else {
            order + 1
        };
        let mut out = vec![BigRational::zero(); limit];
        let d0 = d[0].clone();
        for n in 0..limit {
            let mut acc = num.get(n).cloned().unwrap_or_else(BigRational::zero);
            for k in 1..=n.min(d.len().saturating_sub(1)) {
                acc -= &d[k] * &out[n - k];
            }
            out[n] = acc / &d0;
        }
        Ok(Self::new(order, out))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("{c}*e^{i}")).collect();
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        if self.order == EXACT {
            write!(f, "{body}")
        } else {
            write!(f, "{body} + O(e^{})", self.order + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn q_expands_to_exponential() {
        let s = TruncatedSeries::expand(&LaurentPoly::q(), 3).unwrap();
        assert_eq!(s.coeff(0), r(1, 1));
        assert_eq!(s.coeff(1), r(1, 1));
        assert_eq!(s.coeff(2), r(1, 2));
        assert_eq!(s.coeff(3), r(1, 6));
    }

    #[test]
    fn q_number_tends_to_integer() {
        let s = TruncatedSeries::expand(&LaurentPoly::qnum(5), 2).unwrap();
        assert_eq!(s.coeff(0), r(5, 1));
        assert_eq!(s.coeff(1), r(0, 1));
    }

    #[test]
    fn rejects_other_symbols() {
        let p: LaurentPoly = "u + q".parse().unwrap();
        assert_eq!(TruncatedSeries::expand(&p, 3).unwrap_err(), Error::UnexpandedSymbol("u".into()));
    }

    #[test]
    fn division_by_difference_loses_one_order() {
        let num = TruncatedSeries::expand(&LaurentPoly::q_diff(2), 4).unwrap();
        let den = TruncatedSeries::expand(&LaurentPoly::q_diff(1), 4).unwrap();
        let quo = num.div(&den).unwrap();
        assert_eq!(quo.order(), 3);
        let expect = TruncatedSeries::expand(&LaurentPoly::chi(1), 3).unwrap();
        assert_eq!(quo, expect);
        let one = TruncatedSeries::expand(&LaurentPoly::one(), 4).unwrap();
        assert!(matches!(one.div(&den), Err(Error::DivisionObstruction { .. })));
    }
}
