//! Symbolic elements of tensor powers of U_q(sl2), used to build iterated
//! coproducts before representing them as matrices.

use std::collections::BTreeMap;

use super::irrep::{irrep, Irrep, LMatrix};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E,
    F,
    /// q^H
    Kp,
    /// q^-H
    Km,
}

/// Sum of coefficient times one word per tensor slot.
#[derive(Clone, Debug, PartialEq)]
pub struct UqElement {
    nslots: usize,
    terms: BTreeMap<Vec<Vec<Letter>>, LaurentPoly>,
}

impl UqElement {
    pub fn scalar(nslots: usize, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![Vec::new(); nslots], c);
        }
        UqElement { nslots, terms }
    }

    pub fn letter(l: Letter) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![vec![l]], LaurentPoly::one());
        UqElement { nslots: 1, terms }
    }

    pub fn nslots(&self) -> usize {
        self.nslots
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, k: Vec<Vec<Letter>>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nslots, o.nslots);
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = UqElement { nslots: self.nslots, terms: BTreeMap::new() };
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nslots, o.nslots);
        let mut out = UqElement { nslots: self.nslots, terms: BTreeMap::new() };
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let k: Vec<Vec<Letter>> = k1
                    .iter()
                    .zip(k2)
                    .map(|(a, b)| {
                        let mut w = a.clone();
                        w.extend_from_slice(b);
                        w
                    })
                    .collect();
                out.add_term(k, c1 * c2);
            }
        }
        out
    }

    /// The quadratic Casimir (q - q^-1)^2 FE + q q^{2H} + q^-1 q^{-2H}.
    pub fn casimir() -> Self {
        let d = LaurentPoly::q_diff(1);
        let mut out = UqElement { nslots: 1, terms: BTreeMap::new() };
        out.add_term(vec![vec![Letter::F, Letter::E]], &d * &d);
        out.add_term(vec![vec![Letter::Kp, Letter::Kp]], LaurentPoly::q());
        out.add_term(vec![vec![Letter::Km, Letter::Km]], LaurentPoly::q_pow(-1));
        out
    }

    /// Apply the coproduct to slot `slot` (0-based), splitting it in two.
    /// Delta(E) = E (x) q^-H + q^H (x) E, likewise for F; q^{+-H} are grouplike.
    pub fn coproduct(&self, slot: usize) -> Result<Self> {
        if slot >= self.nslots {
            return Err(Error::SlotOutOfRange { slot, n: self.nslots });
        }
        let mut out = UqElement { nslots: self.nslots + 1, terms: BTreeMap::new() };
        for (k, c) in &self.terms {
            let mut pairs: Vec<(Vec<Letter>, Vec<Letter>)> = vec![(Vec::new(), Vec::new())];
            for &l in &k[slot] {
                let images: &[(Letter, Letter)] = match l {
                    Letter::E => &[(Letter::E, Letter::Km), (Letter::Kp, Letter::E)],
                    Letter::F => &[(Letter::F, Letter::Km), (Letter::Kp, Letter::F)],
                    Letter::Kp => &[(Letter::Kp, Letter::Kp)],
                    Letter::Km => &[(Letter::Km, Letter::Km)],
                };
                let mut next = Vec::with_capacity(pairs.len() * images.len());
                for (a, b) in &pairs {
                    for (x, y) in images {
                        let mut a2 = a.clone();
                        a2.push(*x);
                        let mut b2 = b.clone();
                        b2.push(*y);
                        next.push((a2, b2));
                    }
                }
                pairs = next;
            }
            for (a, b) in pairs {
                let mut nk = k[..slot].to_vec();
                nk.push(a);
                nk.push(b);
                nk.extend_from_slice(&k[slot + 1..]);
                out.add_term(nk, c.clone());
            }
        }
        Ok(out)
    }

    /// Place the slots of `self` at `positions` among `n` slots.
    pub fn embed(&self, n: usize, positions: &[usize]) -> Result<Self> {
        assert_eq!(positions.len(), self.nslots);
        if let Some(&p) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::SlotOutOfRange { slot: p, n });
        }
        let mut out = UqElement { nslots: n, terms: BTreeMap::new() };
        for (k, c) in &self.terms {
            let mut nk = vec![Vec::new(); n];
            for (w, &p) in k.iter().zip(positions) {
                nk[p] = w.clone();
            }
            out.add_term(nk, c.clone());
        }
        Ok(out)
    }

    pub fn represent(&self, dims: &[usize]) -> Result<LMatrix> {
        if dims.len() != self.nslots {
            return Err(Error::DimensionMismatch(format!(
                "{} slots represented on {} factors",
                self.nslots,
                dims.len()
            )));
        }
        let reps: Vec<Irrep> = dims.iter().map(|&m| irrep(m)).collect();
        let total: usize = dims.iter().product();
        let mut out = LMatrix::zeros(total, total);
        for (k, c) in &self.terms {
            let mut acc = LMatrix::scalar(1, c.clone());
            for (w, r) in k.iter().zip(&reps) {
                let mut f = LMatrix::identity(r.m);
                for l in w {
                    let g = match l {
                        Letter::E => &r.e,
                        Letter::F => &r.f,
                        Letter::Kp => &r.kp,
                        Letter::Km => &r.km,
                    };
                    f = f.mul(g);
                }
                acc = acc.kron(&f);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

/// Casimir of the contiguous block of `len` slots starting at `start` (0-based)
/// among `n` slots, via iterated coproducts.
pub fn block_casimir(n: usize, start: usize, len: usize) -> Result<UqElement> {
    if start + len > n || len == 0 {
        return Err(Error::SlotOutOfRange { slot: start + len, n });
    }
    let mut x = UqElement::casimir();
    for _ in 1..len {
        x = x.coproduct(0)?;
    }
    x.embed(n, &(start..start + len).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_is_coassociative_on_generators() {
        for l in [Letter::E, Letter::F, Letter::Kp] {
            let x = UqElement::letter(l);
            let a = x.coproduct(0).unwrap().coproduct(0).unwrap();
            let b = x.coproduct(0).unwrap().coproduct(1).unwrap();
            assert_eq!(a.represent(&[2, 3, 2]).unwrap(), b.represent(&[2, 3, 2]).unwrap());
        }
    }

    #[test]
    fn coproduct_is_an_algebra_map_on_commutator() {
        // [E, F] = (q^{2H} - q^{-2H}) / (q - q^-1), checked after clearing.
        let e = UqElement::letter(Letter::E).coproduct(0).unwrap();
        let f = UqElement::letter(Letter::F).coproduct(0).unwrap();
        let kp = UqElement::letter(Letter::Kp).coproduct(0).unwrap();
        let km = UqElement::letter(Letter::Km).coproduct(0).unwrap();
        let dims = [2, 3];
        let lhs = e.mul(&f).add(&f.mul(&e).scale(&LaurentPoly::int(-1))).scale(&LaurentPoly::q_diff(1));
        let rhs = kp.mul(&kp).add(&km.mul(&km).scale(&LaurentPoly::int(-1)));
        assert_eq!(lhs.represent(&dims).unwrap(), rhs.represent(&dims).unwrap());
    }

    #[test]
    fn slot_out_of_range() {
        assert!(matches!(UqElement::casimir().coproduct(3), Err(Error::SlotOutOfRange { .. })));
    }
}
