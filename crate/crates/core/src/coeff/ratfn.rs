use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Symbol, NSYM};
use crate::error::{Error, Result};

/// Dense univariate polynomial in qh, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigRational>);

impl UPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x_pow(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        UPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.c(i) + o.c(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.c(i) - o.c(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    fn c(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] / &lead;
            if !t.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &t * dc;
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Lowest index with a nonzero coefficient.
    fn low(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }
}

/// Element of the field Q(qh), kept in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: UPoly,
    den: UPoly,
}

impl RatFn {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = UPoly::gcd(&num, &den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let l = d.lead().recip();
        RatFn { num: n.scale(&l), den: d.scale(&l) }
    }

    pub fn zero() -> Self {
        RatFn { num: UPoly::zero(), den: UPoly::constant(BigRational::one()) }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFn { num: UPoly::constant(c), den: UPoly::constant(BigRational::one()) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        for s in p.symbols() {
            if s != Symbol::Qh {
                return Err(Error::UnexpandedSymbol(s.name().to_string()));
            }
        }
        let Some((lo, hi)) = p.degree_range(Symbol::Qh) else {
            return Ok(Self::zero());
        };
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, x) in p.terms() {
            c[(e[0] - lo) as usize] = x.clone();
        }
        let num = UPoly::new(c);
        if lo >= 0 {
            Ok(Self::new(num.mul(&UPoly::x_pow(lo as usize)), UPoly::constant(BigRational::one())))
        } else {
            Ok(Self::new(num, UPoly::x_pow((-lo) as usize)))
        }
    }

    /// Back to a Laurent polynomial when the denominator is a power of qh.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let d = self.den.degree()?;
        if self.den != UPoly::x_pow(d) {
            return None;
        }
        Some(LaurentPoly::from_terms(self.num.coeffs().iter().enumerate().map(|(i, c)| {
            let mut e = [0; NSYM];
            e[0] = i as i32 - d as i32;
            (e, c.clone())
        })))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.scale(&-BigRational::one()), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Valuation at qh = 0 (negative for poles).
    pub fn order_at_zero(&self) -> i64 {
        self.num.low() as i64 - self.den.low() as i64
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &UPoly| {
            let parts: Vec<String> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{c}*qh^{i}"))
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        write!(f, "({}) / ({})", show(&self.num), show(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn laurent_round_trip_and_reduction() {
        let p = lp("qh^-3 + 2 - 5*qh^4");
        let r = RatFn::from_laurent(&p).unwrap();
        assert_eq!(r.to_laurent().unwrap(), p);
        let a = RatFn::from_laurent(&lp("q^2 - q^-2")).unwrap();
        let b = RatFn::from_laurent(&lp("q - q^-1")).unwrap();
        let quo = a.mul(&b.inv().unwrap());
        assert_eq!(quo.to_laurent().unwrap(), lp("q + q^-1"));
    }

    #[test]
    fn genuine_fraction_has_no_laurent_form() {
        let a = RatFn::from_laurent(&lp("1")).unwrap();
        let b = RatFn::from_laurent(&lp("q + q^-1")).unwrap();
        let f = a.mul(&b.inv().unwrap());
        assert!(f.to_laurent().is_none());
        assert_eq!(f.mul(&b), RatFn::one());
    }
}
