//! Realization of abstract algebra elements by intermediate Casimirs.

use super::braid::{braid_act, BraidWord};
use super::casimir::{intermediate_casimir, Convention};
use super::irrep::LMatrix;
use crate::coeff::LaurentPoly;
use crate::error::Result;
use crate::label::{Decoration, LoopLabel};
use crate::nc::aw;
use crate::nc::NcPoly;
use crate::report::{Outcome, VerificationReport};

/// Evaluate `p`, sending generator i to `gens[i]` and central j to `centrals[j]`.
pub fn realize(p: &NcPoly, gens: &[LMatrix], centrals: &[LMatrix], size: usize) -> LMatrix {
    let mut out = LMatrix::zeros(size, size);
    let mut cache: std::collections::HashMap<(Vec<u8>, Vec<u8>), LMatrix> = Default::default();
    for (m, c) in p.terms() {
        let key = (m.word().to_vec(), m.central().to_vec());
        let mat = cache.entry(key).or_insert_with(|| {
            let mut acc = LMatrix::identity(size);
            for (j, &e) in m.central().iter().enumerate() {
                for _ in 0..e {
                    acc = acc.mul(&centrals[j]);
                }
            }
            for &g in m.word() {
                acc = acc.mul(&gens[g as usize]);
            }
            acc
        });
        out = out.add(&mat.scale(c));
    }
    out
}

/// Intermediate Casimirs for three factors.
#[derive(Clone, Debug)]
pub struct Triple {
    pub dims: Vec<usize>,
    pub q1: LMatrix,
    pub q2: LMatrix,
    pub q3: LMatrix,
    pub q12: LMatrix,
    pub q23: LMatrix,
    pub q123: LMatrix,
    pub q13d: LMatrix,
    pub q13u: LMatrix,
}

impl Triple {
    pub fn new(dims: &[usize]) -> Result<Self> {
        let c = |set: &[usize]| intermediate_casimir(&LoopLabel::plain(set), dims, Convention::Standard);
        let d = |deco| intermediate_casimir(&LoopLabel::decorated(&[1, 3], deco), dims, Convention::Standard);
        Ok(Triple {
            dims: dims.to_vec(),
            q1: c(&[1])?,
            q2: c(&[2])?,
            q3: c(&[3])?,
            q12: c(&[1, 2])?,
            q23: c(&[2, 3])?,
            q123: c(&[1, 2, 3])?,
            q13d: d(Decoration::Down)?,
            q13u: d(Decoration::Up)?,
        })
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    /// Generators C12, C23, C13 of aw(3) realized with C13 -> Q13d.
    pub fn gens(&self) -> Vec<LMatrix> {
        vec![self.q12.clone(), self.q23.clone(), self.q13d.clone()]
    }

    pub fn centrals(&self) -> Vec<LMatrix> {
        vec![self.q1.clone(), self.q2.clone(), self.q3.clone(), self.q123.clone()]
    }

    pub fn realize(&self, p: &NcPoly) -> LMatrix {
        realize(p, &self.gens(), &self.centrals(), self.size())
    }
}

fn dims_str(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

/// Witness for a nonzero matrix: its first nonzero entry.
pub fn first_nonzero(m: &LMatrix) -> String {
    match m.entries().next() {
        Some((i, j, x)) => format!("entry ({i},{j}) = {x}"),
        None => "zero".into(),
    }
}

/// The three aw(3) relations and the Casimir relation in V_{dims}.
pub fn verify_saw_in_tensor(dims: &[usize]) -> Vec<VerificationReport> {
    let params = [("dims", dims_str(dims))];
    let triple = Triple::new(dims);
    let mut out = Vec::new();
    let names = ["tensor.aw3.C12", "tensor.aw3.C23", "tensor.aw3.C13"];
    for (k, (anchor, rel)) in aw::relations().into_iter().enumerate() {
        out.push(VerificationReport::run(names[k], anchor, &params, || {
            let t = triple.as_ref().map_err(|e| e.clone())?;
            let m = t.realize(&rel);
            Ok(Outcome::check(m.is_zero(), || first_nonzero(&m)))
        }));
    }
    out.push(VerificationReport::run("tensor.saw3.casimir", "casimir value", &params, || {
        let t = triple.as_ref().map_err(|e| e.clone())?;
        let m = t.realize(&aw::special_relation());
        Ok(Outcome::check(m.is_zero(), || first_nonzero(&m)))
    }));
    out
}

/// Q13d computed both as R_2^-1 Q12 R_2 and as R_1 Q23 R_1^-1, and the
/// closed form of Q13u from Q13d.
pub fn verify_q13_forms(dims: &[usize]) -> Vec<VerificationReport> {
    let params = [("dims", dims_str(dims))];
    let mut out = Vec::new();
    out.push(VerificationReport::run("tensor.q13d.two-constructions", "Q13d", &params, || {
        let t = Triple::new(dims)?;
        let s1: BraidWord = "s1".parse()?;
        let pre = s1.preimage_dims(dims);
        let q23 = intermediate_casimir(&LoopLabel::plain(&[2, 3]), &pre, Convention::Standard)?;
        let (_, alt) = braid_act(&s1, &pre, &q23)?;
        let diff = alt.sub(&t.q13d);
        Ok(Outcome::check(diff.is_zero(), || first_nonzero(&diff)))
    }));
    out.push(VerificationReport::run("tensor.q13u.closed-form", "Q13u", &params, || {
        // Q13u = (Q1Q3 + Q2Q123)/(q+q^-1) - [Q23,Q12]_q/(q^2-q^-2), cleared.
        let t = Triple::new(dims)?;
        let q = LaurentPoly::q();
        let qi = LaurentPoly::q_pow(-1);
        let p = t.q1.mul(&t.q3).add(&t.q2.mul(&t.q123));
        let lhs = t.q13u.scale(&LaurentPoly::q_diff(2));
        let rhs = p.scale(&LaurentPoly::q_diff(1)).sub(&t.q23.twisted_commutator(&t.q12, &q, &qi));
        let diff = lhs.sub(&rhs);
        Ok(Outcome::check(diff.is_zero(), || first_nonzero(&diff)))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_in_small_products() {
        for dims in [[2, 2, 2], [1, 2, 3]] {
            for r in verify_saw_in_tensor(&dims).into_iter().chain(verify_q13_forms(&dims)) {
                assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
            }
        }
    }
}
