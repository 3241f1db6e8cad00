//! Presentations of the rank-one Askey-Wilson algebras aw(3), saw(3) and
//! their Zhedanov specializations, as rewrite systems to PBW normal form.

use super::poly::{Alphabet, NcMonomial, NcPoly};
use super::rewrite::{RewriteSystem, Rule};
use crate::coeff::LaurentPoly;

pub const C12: u8 = 0;
pub const C23: u8 = 1;
pub const C13: u8 = 2;

pub const C1: usize = 0;
pub const C2: usize = 1;
pub const C3: usize = 2;
pub const C123: usize = 3;

pub fn alphabet() -> Alphabet {
    Alphabet::new(&["C12", "C23", "C13"], &["C1", "C2", "C3", "C123"])
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn g(i: u8) -> NcPoly {
    NcPoly::gen(i)
}

fn c(j: usize) -> NcPoly {
    NcPoly::central(j)
}

/// The three defining relations with denominators cleared; each is zero.
/// Entry k is the relation whose linear term is generator k.
pub fn relations() -> [(&'static str, NcPoly); 3] {
    let dq2 = LaurentPoly::q_diff(2);
    let dq1 = LaurentPoly::q_diff(1);
    let rel = |lin: u8, a: u8, b: u8, x: usize, y: usize, z: usize, w: usize| {
        g(lin).scale(&dq2).add(&g(a).q_commutator(&g(b))).sub(&c(x).mul(&c(y)).add(&c(z).mul(&c(w))).scale(&dq1))
    };
    [
        ("aw3.C12", rel(C12, C23, C13, C1, C2, C3, C123)),
        ("aw3.C23", rel(C23, C13, C12, C2, C3, C1, C123)),
        ("aw3.C13", rel(C13, C12, C23, C3, C1, C2, C123)),
    ]
}

/// The cubic Casimir element.
pub fn casimir() -> NcPoly {
    let p12 = c(C1).mul(&c(C2)).add(&c(C3).mul(&c(C123)));
    let p23 = c(C2).mul(&c(C3)).add(&c(C1).mul(&c(C123)));
    let p13 = c(C3).mul(&c(C1)).add(&c(C2).mul(&c(C123)));
    g(C12)
        .mul(&g(C23))
        .mul(&g(C13))
        .scale(&q(1))
        .add(&g(C12).pow(2).scale(&q(2)))
        .add(&g(C23).pow(2).scale(&q(-2)))
        .add(&g(C13).pow(2).scale(&q(2)))
        .sub(&g(C12).mul(&p12).scale(&q(1)))
        .sub(&g(C23).mul(&p23).scale(&q(-1)))
        .sub(&g(C13).mul(&p13).scale(&q(1)))
}

/// The value the Casimir takes in the special quotient.
pub fn casimir_value() -> NcPoly {
    let chi1 = LaurentPoly::chi(1);
    NcPoly::scalar(&chi1 * &chi1)
        .sub(&c(C123).pow(2))
        .sub(&c(C1).pow(2))
        .sub(&c(C2).pow(2))
        .sub(&c(C3).pow(2))
        .sub(&c(C123).mul(&c(C1)).mul(&c(C2)).mul(&c(C3)))
}

/// Casimir minus its special value; zero in saw(3).
pub fn special_relation() -> NcPoly {
    casimir().sub(&casimir_value())
}

/// Solve `rel = 0` for the word `lhs`, whose coefficient must be a unit.
pub fn rule_from_relation(rel: &NcPoly, lhs: &[u8], anchor: &'static str, deferred: bool) -> Rule {
    let m = NcMonomial::new(lhs.to_vec(), Vec::new());
    let lead = rel.coeff(&m);
    let inv = lead.inverse_unit().expect("leading coefficient must be a unit");
    let rest = rel.sub(&NcPoly::term(m, lead));
    Rule { lhs: lhs.to_vec(), rhs: rest.scale(&-inv), anchor, deferred }
}

pub fn swap_rules() -> Vec<Rule> {
    let [a, b, cc] = relations();
    vec![
        rule_from_relation(&cc.1, &[C23, C12], "aw3.swap.C23C12", false),
        rule_from_relation(&b.1, &[C13, C12], "aw3.swap.C13C12", false),
        rule_from_relation(&a.1, &[C13, C23], "aw3.swap.C13C23", false),
    ]
}

pub fn special_rule() -> Rule {
    rule_from_relation(&special_relation(), &[C23, C23], "saw3.casimir", true)
}

/// Central values of the Zhedanov specialization: C_i -> z_i + z_i^-1.
pub fn zhedanov_values() -> Vec<Option<NcPoly>> {
    (1..=4).map(|i| Some(NcPoly::scalar(LaurentPoly::chi_sym(i)))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Aw3,
    Saw3,
    Zh,
    SZh,
}

impl Algebra {
    pub fn system(self) -> RewriteSystem {
        let mut rules = swap_rules();
        if matches!(self, Algebra::Saw3 | Algebra::SZh) {
            rules.push(special_rule());
        }
        let sys = RewriteSystem::new(alphabet(), rules);
        match self {
            Algebra::Aw3 | Algebra::Saw3 => sys,
            Algebra::Zh | Algebra::SZh => sys.specialize_centrals(&zhedanov_values()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Aw3 => "aw3",
            Algebra::Saw3 => "saw3",
            Algebra::Zh => "zh",
            Algebra::SZh => "szh",
        }
    }
}

/// Ordered monomials C12^i C23^j C13^k of degree at most `max_degree`
/// (j <= 1 in the special quotients).
pub fn pbw_basis(alg: Algebra, max_degree: usize) -> Vec<NcMonomial> {
    let special = matches!(alg, Algebra::Saw3 | Algebra::SZh);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for i in 0..=d {
            for j in 0..=(d - i) {
                if special && j > 1 {
                    continue;
                }
                let k = d - i - j;
                let mut w = vec![C12; i];
                w.extend(std::iter::repeat_n(C23, j));
                w.extend(std::iter::repeat_n(C13, k));
                out.push(NcMonomial::new(w, Vec::new()));
            }
        }
    }
    out
}

/// PBW monomials times central monomials, total degree at most `max_degree`.
pub fn pbw_basis_with_centrals(alg: Algebra, max_degree: usize) -> Vec<NcMonomial> {
    let words = pbw_basis(alg, max_degree);
    if matches!(alg, Algebra::Zh | Algebra::SZh) {
        return words;
    }
    let mut out = Vec::new();
    for w in words {
        let rest = max_degree - w.degree();
        for e in central_exponents(4, rest) {
            out.push(NcMonomial::new(w.word().to_vec(), e));
        }
    }
    out
}

fn central_exponents(n: usize, max: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for a in 0..=max {
        for mut rest in central_exponents(n - 1, max - a) {
            rest.insert(0, a as u8);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_rule_matches_hand_derivation() {
        let r = &swap_rules()[0];
        let p12 = c(C3).mul(&c(C1)).add(&c(C2).mul(&c(C123)));
        let expect = g(C12)
            .mul(&g(C23))
            .scale(&q(2))
            .add(&g(C13).scale(&(&q(1) * &LaurentPoly::q_diff(2))))
            .sub(&p12.scale(&(&q(1) * &LaurentPoly::q_diff(1))));
        assert_eq!(r.rhs, expect);
    }

    #[test]
    fn basis_counts() {
        assert_eq!(pbw_basis(Algebra::Aw3, 2).len(), 10);
        assert_eq!(pbw_basis(Algebra::Saw3, 2).len(), 9);
        assert_eq!(pbw_basis(Algebra::Aw3, 0).len(), 1);
    }

    #[test]
    fn swap_rules_decrease_measure() {
        for (name, ok) in Algebra::Aw3.system().measure_report() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn casimir_is_central_in_aw3_and_zh() {
        for alg in [Algebra::Aw3, Algebra::Zh] {
            let sys = alg.system();
            let om = casimir();
            let om = if alg == Algebra::Zh { om.substitute_centrals(&zhedanov_values()) } else { om };
            for x in [C12, C23, C13] {
                let comm = om.commutator(&g(x));
                assert!(sys.normalize(&comm).unwrap().is_zero(), "{alg:?} {x}");
            }
        }
    }

    #[test]
    fn special_rule_is_deferred_and_reduces_square() {
        let sys = Algebra::Saw3.system();
        let nf = sys.normalize(&g(C23).pow(2)).unwrap();
        for (m, _) in nf.terms() {
            assert!(sys.is_normal(m.word()));
            assert!(m.word().iter().filter(|x| **x == C23).count() <= 1);
        }
    }
}
