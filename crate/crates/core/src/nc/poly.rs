use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::coeff::{LaurentPoly, Substitution};
use crate::error::Result;
use crate::ring::Ring;

/// Names of the non-commuting generators and of the central generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub gens: Vec<String>,
    pub centrals: Vec<String>,
}

impl Alphabet {
    pub fn new(gens: &[&str], centrals: &[&str]) -> Self {
        Alphabet {
            gens: gens.iter().map(|s| s.to_string()).collect(),
            centrals: centrals.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g == name).map(|i| i as u8)
    }

    pub fn central_index(&self, name: &str) -> Option<usize> {
        self.centrals.iter().position(|g| g == name)
    }
}

/// A word in the non-commuting generators times a commutative monomial in
/// the central generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NcMonomial {
    word: Vec<u8>,
    central: Vec<u8>,
}

impl NcMonomial {
    pub fn new(word: Vec<u8>, mut central: Vec<u8>) -> Self {
        while central.last() == Some(&0) {
            central.pop();
        }
        NcMonomial { word, central }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn central(&self) -> &[u8] {
        &self.central
    }

    pub fn central_exp(&self, j: usize) -> u8 {
        self.central.get(j).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.word.len() + self.central.iter().map(|x| *x as usize).sum::<usize>()
    }

    pub fn mul(&self, o: &NcMonomial) -> NcMonomial {
        let mut word = self.word.clone();
        word.extend_from_slice(&o.word);
        let n = self.central.len().max(o.central.len());
        let central = (0..n).map(|j| self.central_exp(j) + o.central_exp(j)).collect();
        NcMonomial::new(word, central)
    }
}

impl Ord for NcMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.word.len().cmp(&o.word.len()))
            .then_with(|| self.word.cmp(&o.word))
            .then_with(|| self.central.cmp(&o.central))
    }
}

impl PartialOrd for NcMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Element of the free algebra over the Laurent coefficient ring, with
/// central generators commuting with everything.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<NcMonomial, LaurentPoly>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(NcMonomial::default(), c)
    }

    pub fn term(m: NcMonomial, c: LaurentPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn gen(i: u8) -> Self {
        Self::word(&[i])
    }

    pub fn word(w: &[u8]) -> Self {
        Self::term(NcMonomial::new(w.to_vec(), Vec::new()), LaurentPoly::one())
    }

    pub fn central(j: usize) -> Self {
        let mut c = vec![0; j + 1];
        c[j] = 1;
        Self::term(NcMonomial::new(Vec::new(), c), LaurentPoly::one())
    }

    pub fn add_term(&mut self, m: NcMonomial, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<NcMonomial, LaurentPoly> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The scalar value when the element has no generator content.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, m: &NcMonomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        NcPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// ab - ba.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// ab + ba.
    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    /// [a, b]_q = q ab - q^-1 ba.
    pub fn q_commutator(&self, o: &Self) -> Self {
        self.mul(o).scale(&LaurentPoly::q()).sub(&o.mul(self).scale(&LaurentPoly::q_pow(-1)))
    }

    pub fn substitute_coeffs(&self, s: &Substitution) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.substitute(s)?);
        }
        Ok(out)
    }

    /// Replace central generator j by `values[j]` (missing entries are kept).
    pub fn substitute_centrals(&self, values: &[Option<NcPoly>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = NcPoly::one();
            for (j, &e) in m.central.iter().enumerate() {
                match values.get(j).and_then(|v| v.as_ref()) {
                    Some(v) => factor = factor.mul(&v.pow(e as u32)),
                    None => {
                        kept.resize(j + 1, 0);
                        kept[j] = e;
                    }
                }
            }
            let base = NcPoly::term(NcMonomial::new(m.word.clone(), kept), c.clone());
            // central values commute, so placing them on the right is harmless
            out = out.add(&base.mul(&factor));
        }
        out
    }

    /// Replace generator i by `values[i]` (missing entries are kept).
    pub fn substitute_gens(&self, values: &[Option<NcPoly>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = NcPoly::term(NcMonomial::new(Vec::new(), m.central.clone()), c.clone());
            for &g in &m.word {
                let f = match values.get(g as usize).and_then(|v| v.as_ref()) {
                    Some(v) => v.clone(),
                    None => NcPoly::gen(g),
                };
                acc = acc.mul(&f);
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn display<'a>(&'a self, a: &'a Alphabet) -> NcDisplay<'a> {
        NcDisplay { p: self, a }
    }
}

pub struct NcDisplay<'a> {
    p: &'a NcPoly,
    a: &'a Alphabet,
}

impl fmt::Display for NcDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            for (j, &e) in m.central.iter().enumerate() {
                for _ in 0..e {
                    let _ = write!(mono, "*{}", self.a.centrals[j]);
                }
            }
            for &g in &m.word {
                let _ = write!(mono, "*{}", self.a.gens[g as usize]);
            }
            if c.num_terms() > 1 {
                write!(f, "({c}){mono}")?;
            } else {
                write!(f, "{c}{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl Ring for NcPoly {
    fn zero() -> Self {
        NcPoly::zero()
    }
    fn one() -> Self {
        NcPoly::one()
    }
    fn is_zero(&self) -> bool {
        NcPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        NcPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NcPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NcPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        NcPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_generators_commute() {
        let a = NcPoly::gen(0);
        let c = NcPoly::central(1);
        assert_eq!(a.mul(&c), c.mul(&a));
        assert_ne!(a.mul(&NcPoly::gen(1)), NcPoly::gen(1).mul(&a));
    }

    #[test]
    fn monomial_order_is_graded() {
        let small = NcMonomial::new(vec![2], vec![]);
        let big = NcMonomial::new(vec![0, 0], vec![]);
        assert!(small < big);
        let cen = NcMonomial::new(vec![0], vec![1]);
        assert!(cen < big);
    }

    #[test]
    fn substitution_of_centrals() {
        let p = NcPoly::gen(0).mul(&NcPoly::central(0)).mul(&NcPoly::central(0));
        let v = NcPoly::scalar(LaurentPoly::int(3));
        let s = p.substitute_centrals(&[Some(v)]);
        assert_eq!(s, NcPoly::gen(0).scale(&LaurentPoly::int(9)));
    }
}
