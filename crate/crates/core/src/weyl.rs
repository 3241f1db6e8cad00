//! The Weyl group W(D4) acting on the four representation parameters, and
//! the invariant functions of those parameters.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde_json::json;

use crate::coeff::{Exps, LaurentPoly, RatFn, Symbol, TruncatedSeries};
use crate::error::{Error, Result};
use crate::report::{Outcome, VerificationReport};

pub const GROUP_ORDER: usize = 192;
pub const CLOSURE_CAP: usize = 10_000;

/// Linear map on column vectors (m1, m2, m3, m4).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement([[Rational64; 4]; 4]);

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

impl WeylElement {
    pub fn identity() -> Self {
        let mut a = [[Rational64::zero(); 4]; 4];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Rational64::one();
        }
        WeylElement(a)
    }

    /// Simple reflection s_i, i in 1..=4. Node 3 is the central node of the
    /// Dynkin diagram; s4 negates m3.
    pub fn generator(i: usize) -> Self {
        let mut g = Self::identity();
        match i {
            1 => g.0[0][0] = r(-1, 1),
            2 => g.0[1][1] = r(-1, 1),
            4 => g.0[2][2] = r(-1, 1),
            3 => {
                // m_i -> m_i + a, m4 -> m4 - a, a = (m4 - m1 - m2 - m3)/2.
                let a = [r(-1, 2), r(-1, 2), r(-1, 2), r(1, 2)];
                for row in 0..4 {
                    let sign = if row == 3 { r(-1, 1) } else { r(1, 1) };
                    for (col, ac) in a.iter().enumerate() {
                        g.0[row][col] += sign * ac;
                    }
                }
            }
            _ => panic!("W(D4) generator index {i} out of range"),
        }
        g
    }

    pub fn matrix(&self) -> &[[Rational64; 4]; 4] {
        &self.0
    }

    /// Composition: (self * o)(m) = self(o(m)).
    pub fn mul(&self, o: &Self) -> Self {
        let mut a = [[Rational64::zero(); 4]; 4];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                for k in 0..4 {
                    *x += self.0[i][k] * o.0[k][j];
                }
            }
        }
        WeylElement(a)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn act(&self, m: &[Rational64; 4]) -> [Rational64; 4] {
        let mut out = [Rational64::zero(); 4];
        for (i, x) in out.iter_mut().enumerate() {
            for (j, mj) in m.iter().enumerate() {
                *x += self.0[i][j] * mj;
            }
        }
        out
    }

    pub fn act_int(&self, m: [i64; 4]) -> [Rational64; 4] {
        self.act(&m.map(Rational64::from_integer))
    }

    /// (sigma f)(m) = f(sigma m) for f a Laurent polynomial in z1h..z4h, where
    /// zih stands for q^(m_i/2). A monomial with z-exponent vector e becomes
    /// the monomial with exponent vector A^T e, which must be integral.
    pub fn act_on(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut terms = Vec::with_capacity(f.num_terms());
        for (e, c) in f.terms() {
            let mut ne: Exps = *e;
            for j in 0..4 {
                let mut x = Rational64::zero();
                for i in 0..4 {
                    x += self.0[i][j] * Rational64::from_integer(e[Symbol::zh(i + 1).index()] as i64);
                }
                if !x.is_integer() {
                    return Err(Error::DimensionMismatch(format!(
                        "monomial with z-exponents {:?} has no integral image",
                        &e[Symbol::Z1h.index()..]
                    )));
                }
                ne[Symbol::zh(j + 1).index()] = x.to_integer() as i32;
            }
            terms.push((ne, c.clone()));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

pub fn generators() -> [WeylElement; 4] {
    [1, 2, 3, 4].map(WeylElement::generator)
}

/// Dynkin diagram of D4 with central node 3.
pub fn dynkin_adjacent(i: usize, j: usize) -> bool {
    i != j && (i == 3 || j == 3)
}

/// Closure of the generators under multiplication, in breadth-first order.
pub fn enumerate_group(cap: usize) -> Result<Vec<WeylElement>> {
    let gens = generators();
    let mut seen: BTreeSet<WeylElement> = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([WeylElement::identity()]);
    seen.insert(WeylElement::identity());
    while let Some(x) = queue.pop_front() {
        order.push(x.clone());
        for g in &gens {
            let y = g.mul(&x);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureBudgetExceeded(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

/// Distinct images of `m` under the whole group.
pub fn orbit(m: [i64; 4]) -> Result<Vec<[Rational64; 4]>> {
    let set: BTreeSet<[Rational64; 4]> = enumerate_group(CLOSURE_CAP)?.iter().map(|g| g.act_int(m)).collect();
    Ok(set.into_iter().collect())
}

pub fn verify_group() -> VerificationReport {
    VerificationReport::run("weyl.group", "W(D4) order and Coxeter relations", &[], || {
        let g = enumerate_group(CLOSURE_CAP)?;
        if g.len() != GROUP_ORDER {
            return Ok(Outcome::fail(format!("closure has {} elements", g.len())));
        }
        let gens = generators();
        for i in 1..=4 {
            let s = &gens[i - 1];
            if !s.mul(s).is_identity() {
                return Ok(Outcome::fail(format!("s{i}^2 != 1")));
            }
            for j in i + 1..=4 {
                let t = &gens[j - 1];
                let ok = if dynkin_adjacent(i, j) { s.mul(t).mul(s) == t.mul(s).mul(t) } else { s.mul(t) == t.mul(s) };
                if !ok {
                    return Ok(Outcome::fail(format!("Coxeter relation for (s{i}, s{j}) fails")));
                }
            }
        }
        Ok(Outcome::pass().with_details(json!({ "order": g.len() })))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantFunction {
    P4,
    P4p,
    P4pp,
    P6,
    Xi2,
    Xi4,
    Xi4p,
    Xi6,
}

impl InvariantFunction {
    pub const ALL: [InvariantFunction; 8] = [
        InvariantFunction::P4,
        InvariantFunction::P4p,
        InvariantFunction::P4pp,
        InvariantFunction::P6,
        InvariantFunction::Xi2,
        InvariantFunction::Xi4,
        InvariantFunction::Xi4p,
        InvariantFunction::Xi6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantFunction::P4 => "p4",
            InvariantFunction::P4p => "p4'",
            InvariantFunction::P4pp => "p4''",
            InvariantFunction::P6 => "p6",
            InvariantFunction::Xi2 => "xi2",
            InvariantFunction::Xi4 => "xi4",
            InvariantFunction::Xi4p => "xi4'",
            InvariantFunction::Xi6 => "xi6",
        }
    }

    /// The function times a parameter-independent factor, as a Laurent
    /// polynomial in qh and z1h..z4h. See `denominator`.
    pub fn numerator(self) -> LaurentPoly {
        let c = LaurentPoly::chi_sym;
        let n2: [LaurentPoly; 4] = [1, 2, 3, 4].map(n_squared);
        let d = LaurentPoly::q_diff(1).pow(2).expect("power");
        let prod = |a: &LaurentPoly, b: &LaurentPoly| a * b;
        match self {
            InvariantFunction::P4 => &prod(&c(1), &c(2)) + &prod(&c(3), &c(4)),
            InvariantFunction::P4p => &prod(&c(2), &c(3)) + &prod(&c(1), &c(4)),
            InvariantFunction::P4pp => &prod(&c(1), &c(3)) + &prod(&c(2), &c(4)),
            InvariantFunction::P6 => {
                let sq: LaurentPoly = (1..=4).map(|i| prod(&c(i), &c(i))).fold(LaurentPoly::zero(), |a, b| a + b);
                &sq + &prod(&prod(&c(1), &c(2)), &prod(&c(3), &c(4)))
            }
            InvariantFunction::Xi2 => {
                let s = n2.iter().fold(LaurentPoly::zero(), |a, b| &a + b);
                let two = LaurentPoly::int(2);
                &(&two * &(&s - &d)) + &(&prod(&n2[0], &n2[2]) + &prod(&n2[1], &n2[3]))
            }
            InvariantFunction::Xi4 => prod(&(&n2[0] - &n2[3]), &(&n2[2] - &n2[1])),
            InvariantFunction::Xi4p => prod(&(&n2[0] - &n2[1]), &(&n2[2] - &n2[3])),
            InvariantFunction::Xi6 => {
                let p = &prod(&n2[0], &n2[2]) - &prod(&n2[1], &n2[3]);
                let s = &(&n2[0] - &n2[1]) + &(&n2[2] - &n2[3]);
                &prod(&p, &s) + &prod(&prod(&p, &p), &LaurentPoly::ratio(1, 4))
            }
        }
    }

    /// Parameter-independent factor with f = numerator / denominator.
    pub fn denominator(self) -> LaurentPoly {
        let d = LaurentPoly::q_diff(1).pow(2).expect("power");
        match self {
            InvariantFunction::Xi2 => &d * &LaurentPoly::chi(1),
            InvariantFunction::Xi4 | InvariantFunction::Xi4p => d.pow(2).expect("power"),
            InvariantFunction::Xi6 => d.pow(3).expect("power"),
            _ => LaurentPoly::one(),
        }
    }

    /// Value at concrete m as a rational function of qh.
    pub fn value(self, m: [i64; 4]) -> Result<RatFn> {
        let spins = crate::coeff::Substitution::spins(m.map(|x| x as i32));
        let num = RatFn::from_laurent(&self.numerator().substitute(&spins)?)?;
        let den = RatFn::from_laurent(&self.denominator())?;
        Ok(num.mul(&den.inv().expect("nonzero denominator")))
    }
}

/// (q - q^-1)^2 M_i^2 = (zih - zih^-1)^2, with M_i = [m_i/2]_q.
pub fn n_squared(i: usize) -> LaurentPoly {
    let z = Symbol::zh(i);
    let n = LaurentPoly::sym(z) - LaurentPoly::sym_pow(z, -1);
    &n * &n
}

pub fn verify_invariance(f: InvariantFunction) -> VerificationReport {
    let id = format!("weyl.invariance.{}", f.name().replace('\'', "p"));
    VerificationReport::run(&id, "W(D4) invariance", &[("function", f.name().to_string())], || {
        let p = f.numerator();
        for (k, g) in generators().iter().enumerate() {
            let image = g.act_on(&p)?;
            if image != p {
                let diff = &image - &p;
                return Ok(Outcome::fail(format!("s{}: f(s m) - f(m) = {}", k + 1, diff)));
            }
        }
        Ok(Outcome::pass())
    })
}

/// The xi data agree at m and at every image of m. Needs an even parameter sum
/// so that the orbit stays integral.
pub fn verify_orbit_consistency(samples: &[[i64; 4]]) -> VerificationReport {
    let params = [("samples", samples.len().to_string())];
    VerificationReport::run("weyl.orbit-consistency", "W(D4) symmetry of the relation data", &params, || {
        let group = enumerate_group(CLOSURE_CAP)?;
        let xis = [InvariantFunction::Xi2, InvariantFunction::Xi4, InvariantFunction::Xi4p, InvariantFunction::Xi6];
        for m in samples {
            let base: Vec<RatFn> = xis.iter().map(|f| f.value(*m)).collect::<Result<_>>()?;
            for g in &group {
                let img = g.act_int(*m);
                if img.iter().any(|x| !x.is_integer()) {
                    return Ok(Outcome::fail(format!("orbit of {m:?} leaves the integer lattice")));
                }
                let im = img.map(|x| x.to_integer());
                for (f, b) in xis.iter().zip(&base) {
                    if f.value(im)? != *b {
                        return Ok(Outcome::fail(format!("{} differs at {:?} and {:?}", f.name(), m, im)));
                    }
                }
            }
        }
        Ok(Outcome::pass())
    })
}

/// Classical polynomial invariants with xi -> these at q = 1:
/// xi2 -> sum m_i^2/4 - 1, xi4 -> (m1^2-m4^2)(m3^2-m2^2)/16,
/// xi4' -> (m1^2-m2^2)(m3^2-m4^2)/16,
/// xi6 -> (m1^2 m3^2 - m2^2 m4^2)(m1^2-m2^2+m3^2-m4^2)/64.
pub fn classical_xi(f: InvariantFunction, m: [i64; 4]) -> Option<BigRational> {
    let s: Vec<BigRational> = m.iter().map(|x| BigRational::from_integer(BigInt::from(x * x))).collect();
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    Some(match f {
        InvariantFunction::Xi2 => (&s[0] + &s[1] + &s[2] + &s[3]) * q(1, 4) - q(1, 1),
        InvariantFunction::Xi4 => (&s[0] - &s[3]) * (&s[2] - &s[1]) * q(1, 16),
        InvariantFunction::Xi4p => (&s[0] - &s[1]) * (&s[2] - &s[3]) * q(1, 16),
        InvariantFunction::Xi6 => (&s[0] * &s[2] - &s[1] * &s[3]) * (&s[0] - &s[1] + &s[2] - &s[3]) * q(1, 64),
        _ => return None,
    })
}

/// Constant term of f(m) at qh = exp(eps/2).
pub fn series_constant_term(f: InvariantFunction, m: [i64; 4]) -> Result<BigRational> {
    const ORDER: usize = 8;
    let spins = crate::coeff::Substitution::spins(m.map(|x| x as i32));
    let num = TruncatedSeries::expand(&f.numerator().substitute(&spins)?, ORDER)?;
    let den = TruncatedSeries::expand(&f.denominator(), ORDER)?;
    Ok(num.div(&den)?.coeff(0))
}

pub fn verify_classical_limit(samples: &[[i64; 4]]) -> VerificationReport {
    let params = [("samples", samples.len().to_string())];
    VerificationReport::run("weyl.classical-limit", "classical limit of the xi functions", &params, || {
        for f in [InvariantFunction::Xi2, InvariantFunction::Xi4, InvariantFunction::Xi4p, InvariantFunction::Xi6] {
            for m in samples {
                let got = series_constant_term(f, *m)?;
                let want = classical_xi(f, *m).expect("xi family");
                if got != want {
                    return Ok(Outcome::fail(format!("{} at {:?}: {} vs {}", f.name(), m, got, want)));
                }
            }
        }
        Ok(Outcome::pass())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_actions() {
        let s1 = WeylElement::generator(1);
        assert_eq!(s1.act_int([1, 2, 3, 4]), [-1, 2, 3, 4].map(Rational64::from_integer));
        let s3 = WeylElement::generator(3);
        assert_eq!(s3.act_int([1, 1, 1, 3]), [1, 1, 1, 3].map(Rational64::from_integer));
        assert_eq!(s3.act_int([0, 0, 0, 2]), [1, 1, 1, 1].map(Rational64::from_integer));
    }

    #[test]
    fn group_has_order_192() {
        let r = verify_group();
        assert!(r.is_pass(), "{:?}", r.witness);
        assert_eq!(r.details["order"], 192);
    }

    #[test]
    fn all_invariants_hold() {
        for f in InvariantFunction::ALL {
            let r = verify_invariance(f);
            assert!(r.is_pass(), "{} {:?}", f.name(), r.witness);
        }
    }

    #[test]
    fn non_invariant_function_is_caught() {
        let f = LaurentPoly::chi_sym(1);
        let img = WeylElement::generator(3).act_on(&f).unwrap();
        assert_ne!(img, f);
    }

    #[test]
    fn xi_values_are_orbit_constant() {
        let r = verify_orbit_consistency(&[[1, 2, 3, 4], [2, 2, 2, 2], [3, 1, 4, 2]]);
        assert!(r.is_pass(), "{:?}", r.witness);
    }

    #[test]
    fn classical_limit_matches() {
        let r = verify_classical_limit(&[[1, 2, 3, 4], [2, 5, 3, 2], [7, 1, 1, 3]]);
        assert!(r.is_pass(), "{:?}", r.witness);
    }
}
