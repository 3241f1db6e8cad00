//! Cyclic words, cyclic derivatives and the Calabi-Yau potential of the
//! Zhedanov algebra in its K-presentation.

use std::collections::BTreeMap;

use super::poly::{Alphabet, NcMonomial, NcPoly};
use crate::coeff::LaurentPoly;

pub const K12: u8 = 0;
pub const K23: u8 = 1;
pub const K13: u8 = 2;

pub const XI2: usize = 0;
pub const XI4: usize = 1;
pub const XI4P: usize = 2;
pub const XI6: usize = 3;

pub fn alphabet() -> Alphabet {
    Alphabet::new(&["K12", "K23", "K13"], &["xi2", "xi4", "xi4p", "xi6"])
}

/// A word up to rotation, stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<u8>);

impl CyclicWord {
    pub fn new(w: &[u8]) -> Self {
        let n = w.len();
        let best = (0..n.max(1))
            .map(|r| {
                let mut v = w[r.min(n)..].to_vec();
                v.extend_from_slice(&w[..r.min(n)]);
                v
            })
            .min()
            .unwrap_or_default();
        CyclicWord(best)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Sum over occurrences of x: the word read cyclically after it.
    pub fn derivative(&self, x: u8) -> Vec<Vec<u8>> {
        let w = &self.0;
        (0..w.len())
            .filter(|&i| w[i] == x)
            .map(|i| {
                let mut v = w[i + 1..].to_vec();
                v.extend_from_slice(&w[..i]);
                v
            })
            .collect()
    }
}

/// Linear combination of cyclic words whose coefficients may carry central
/// generators.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CyclicPoly {
    terms: BTreeMap<CyclicWord, NcPoly>,
}

impl CyclicPoly {
    pub fn add_term(&mut self, w: &[u8], coeff: NcPoly) {
        let key = CyclicWord::new(w);
        let cur = self.terms.remove(&key).unwrap_or_default();
        let next = cur.add(&coeff);
        if !next.is_zero() {
            self.terms.insert(key, next);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &NcPoly)> {
        self.terms.iter()
    }

    pub fn derivative(&self, x: u8) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            for tail in w.derivative(x) {
                out = out.add(&c.mul(&NcPoly::word(&tail)));
            }
        }
        out
    }
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn s(p: LaurentPoly) -> NcPoly {
    NcPoly::scalar(p)
}

/// The potential, with its own constants xi playing the role of the
/// relation parameters.
pub fn potential() -> CyclicPoly {
    let mut phi = CyclicPoly::default();
    let chi = LaurentPoly::chi(1);
    phi.add_term(&[K12, K23, K13], s(q(1)));
    phi.add_term(&[K12, K13, K23], s(-q(-1)));
    phi.add_term(&[K12, K23, K23], s(chi.clone()));
    phi.add_term(&[K12, K12, K23], s(chi));
    phi.add_term(&[K12], NcPoly::central(XI4).neg());
    phi.add_term(&[K23], NcPoly::central(XI4P).neg());
    phi.add_term(&[K13, K13], s(LaurentPoly::ratio(-1, 2)));
    phi.add_term(&[K12, K23], NcPoly::central(XI2).neg());
    phi
}

fn k(i: u8) -> NcPoly {
    NcPoly::gen(i)
}

/// Defining relations in K-form, each equal to zero, in the order
/// [K12,K23]_q = K13, [K23,K13]_q = ..., [K13,K12]_q = ....
pub fn k_relations() -> [NcPoly; 3] {
    let chi = LaurentPoly::chi(1);
    let anti = k(K12).anticommutator(&k(K23));
    let r1 = k(K12).q_commutator(&k(K23)).sub(&k(K13));
    let r2 = k(K23).q_commutator(&k(K13)).sub(
        &anti.neg().sub(&k(K23).pow(2)).add(&NcPoly::central(XI2).mul(&k(K23))).add(&NcPoly::central(XI4)).scale(&chi),
    );
    let r3 = k(K13).q_commutator(&k(K12)).sub(
        &anti.neg().sub(&k(K12).pow(2)).add(&NcPoly::central(XI2).mul(&k(K12))).add(&NcPoly::central(XI4P)).scale(&chi),
    );
    [r1, r2, r3]
}

/// Cubic relation fixing the Casimir in K-form, multiplied through by
/// (q + q^-1)^2 so that all coefficients are Laurent polynomials.
pub fn k_casimir_relation() -> NcPoly {
    let chi = LaurentPoly::chi(1);
    let chi2 = &chi * &chi;
    let d = LaurentPoly::q_diff(1);
    let xi = NcPoly::central;
    let anti = k(K12).anticommutator(&k(K23));
    let lhs = k(K12)
        .mul(&k(K23))
        .mul(&k(K13))
        .scale(&-(&(&q(1) * &d) * &chi))
        .sub(&k(K12).mul(&k(K23)).mul(&k(K12)).scale(&(&q(1) * &chi2)))
        .sub(&k(K23).mul(&k(K12)).mul(&k(K23)).scale(&(&q(-1) * &chi2)))
        .add(&k(K13).pow(2).scale(&q(2)))
        .add(&xi(XI2).mul(&anti).scale(&chi))
        .sub(&anti.scale(&chi2))
        .add(&xi(XI4).mul(&k(K12)).scale(&(&q(1) * &chi2)))
        .add(&xi(XI4P).mul(&k(K23)).scale(&(&q(-1) * &chi2)));
    let rhs = xi(XI6).sub(&xi(XI4)).sub(&xi(XI4P)).sub(&xi(XI2).pow(2).scale(&LaurentPoly::ratio(1, 4))).scale(&chi2);
    lhs.sub(&rhs)
}

/// Parameters of the potential expressed through the relation parameters:
/// the linear terms of the potential carry an extra factor (q + q^-1).
pub fn potential_parameter_map() -> Vec<Option<NcPoly>> {
    let chi = LaurentPoly::chi(1);
    vec![
        Some(NcPoly::central(XI2).scale(&chi)),
        Some(NcPoly::central(XI4).scale(&chi)),
        Some(NcPoly::central(XI4P).scale(&chi)),
        None,
    ]
}

/// Which relation each cyclic derivative reproduces, and with what sign.
pub const DERIVATIVE_MATCH: [(u8, usize); 3] = [(K13, 0), (K12, 1), (K23, 2)];

/// `d` equals `unit * r` for a single-term scalar, if any.
pub fn proportional(d: &NcPoly, r: &NcPoly) -> Option<LaurentPoly> {
    let (m, c) = r.terms().last()?;
    let dc = d.coeff(&NcMonomial::clone(m));
    let ratio = dc.div_exact(c).ok()?;
    ratio.as_unit()?;
    (r.scale(&ratio) == *d).then_some(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_word_canonical_rotation() {
        assert_eq!(CyclicWord::new(&[2, 0, 1]), CyclicWord::new(&[0, 1, 2]));
        assert_ne!(CyclicWord::new(&[0, 2, 1]), CyclicWord::new(&[0, 1, 2]));
    }

    #[test]
    fn derivative_in_k13_is_first_relation() {
        let d = potential().derivative(K13);
        assert_eq!(d, k_relations()[0]);
    }

    #[test]
    fn derivatives_match_relations_after_parameter_rescaling() {
        let phi = potential();
        let rel = k_relations();
        for (x, i) in DERIVATIVE_MATCH {
            let d = phi.derivative(x).substitute_centrals(&potential_parameter_map());
            assert_eq!(proportional(&d, &rel[i]), Some(LaurentPoly::one()), "x{x}");
        }
    }

    #[test]
    fn unscaled_parameters_do_not_match() {
        let d = potential().derivative(K12);
        assert!(proportional(&d, &k_relations()[1]).is_none());
    }
}
