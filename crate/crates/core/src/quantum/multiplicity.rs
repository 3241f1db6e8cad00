//! Action of the intermediate Casimirs on the multiplicity space of M(m4) in
//! M(m1) (x) M(m2) (x) M(m3), and the Special Zhedanov relations there.

use serde_json::json;

use super::irrep::two_h;
use super::uq::{Letter, UqElement};
use super::{intermediate_casimir, Convention, LMatrix};
use crate::coeff::{LaurentPoly, RatFn};
use crate::error::{Error, Result};
use crate::label::{Decoration, LoopLabel};
use crate::linalg::nullspace;
use crate::matrix::SparseMatrix;
use crate::nc::potential::{k_casimir_relation, k_relations};
use crate::nc::NcPoly;
use crate::report::{Outcome, VerificationReport};
use crate::weyl::InvariantFunction;

pub type RMatrix = SparseMatrix<RatFn>;

#[derive(Clone, Debug)]
pub struct MultiplicitySpace {
    pub m: [usize; 4],
    pub dim: usize,
    pub q12: RMatrix,
    pub q23: RMatrix,
    pub q13: RMatrix,
    pub q123: RMatrix,
}

fn weight_indices(dims: &[usize], two_h_total: i32) -> Vec<usize> {
    let total: usize = dims.iter().product();
    (0..total)
        .filter(|&flat| {
            let idx = super::rmatrix::multi_index(dims, flat);
            idx.iter().zip(dims).map(|(k, m)| two_h(*m, *k)).sum::<i32>() == two_h_total
        })
        .collect()
}

fn to_ratfn(m: &LMatrix) -> Result<RMatrix> {
    m.try_map(RatFn::from_laurent)
}

/// Restriction of an operator commuting with U_q(sl2) to the span of the
/// columns of `basis` (vectors over the weight space `w`), with `pivots`
/// the coordinates that read off the expansion.
fn restrict(op: &LMatrix, w: &[usize], basis: &[Vec<RatFn>], pivots: &[usize]) -> Result<RMatrix> {
    let sub = to_ratfn(&op.submatrix(w, w))?;
    let k = basis.len();
    let mut out = RMatrix::zeros(k, k);
    for (j, v) in basis.iter().enumerate() {
        let image: Vec<RatFn> = (0..w.len())
            .map(|r| sub.row(r).iter().fold(RatFn::zero(), |acc, (c, x)| acc.add(&x.mul(&v[*c]))))
            .collect();
        let coords: Vec<RatFn> = pivots.iter().map(|&p| image[p].clone()).collect();
        for (idx, x) in image.iter().enumerate() {
            let expected = coords.iter().zip(basis).fold(RatFn::zero(), |acc, (c, b)| acc.add(&c.mul(&b[idx])));
            if expected != *x {
                return Err(Error::NotInSpan("operator does not preserve the multiplicity space".into()));
            }
        }
        for (i, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                out.set(i, j, c);
            }
        }
    }
    Ok(out)
}

/// Highest-weight vectors of weight m4 - 1 and the restricted Q12, Q23, Q13d, Q123.
pub fn multiplicity_space_action(m: [usize; 4]) -> Result<MultiplicitySpace> {
    let dims = [m[0], m[1], m[2]];
    if m.contains(&0) {
        return Err(Error::EmptyMultiplicity { dims: dims.to_vec(), m4: m[3] });
    }
    let top = m[3] as i32 - 1;
    let w = weight_indices(&dims, top);
    let w_up = weight_indices(&dims, top + 2);
    if w.is_empty() {
        return Err(Error::EmptyMultiplicity { dims: dims.to_vec(), m4: m[3] });
    }
    let e = UqElement::letter(Letter::E).coproduct(0)?.coproduct(1)?.represent(&dims)?;
    let e_sub = to_ratfn(&e.submatrix(&w_up, &w))?;
    let basis = if w_up.is_empty() {
        (0..w.len())
            .map(|i| (0..w.len()).map(|j| if i == j { RatFn::one() } else { RatFn::zero() }).collect())
            .collect()
    } else {
        nullspace(&e_sub.to_dense(), w.len())
    };
    if basis.is_empty() {
        return Err(Error::EmptyMultiplicity { dims: dims.to_vec(), m4: m[3] });
    }
    let pivots: Vec<usize> = (0..basis.len())
        .map(|i| {
            (0..w.len())
                .find(|&p| basis[i][p] == RatFn::one() && (0..basis.len()).all(|j| j == i || basis[j][p].is_zero()))
                .expect("nullspace basis has a unit coordinate")
        })
        .collect();
    let cas = |set: &[usize]| intermediate_casimir(&LoopLabel::plain(set), &dims, Convention::Standard);
    let q13 = intermediate_casimir(&LoopLabel::decorated(&[1, 3], Decoration::Down), &dims, Convention::Standard)?;
    Ok(MultiplicitySpace {
        m,
        dim: basis.len(),
        q12: restrict(&cas(&[1, 2])?, &w, &basis, &pivots)?,
        q23: restrict(&cas(&[2, 3])?, &w, &basis, &pivots)?,
        q13: restrict(&q13, &w, &basis, &pivots)?,
        q123: restrict(&cas(&[1, 2, 3])?, &w, &basis, &pivots)?,
    })
}

/// Evaluates `p` with generators sent to matrices and centrals to scalars.
pub fn realize_scalar_centrals(p: &NcPoly, gens: &[RMatrix], centrals: &[RatFn], size: usize) -> Result<RMatrix> {
    let mut out = RMatrix::zeros(size, size);
    for (mono, c) in p.terms() {
        let mut coeff = RatFn::from_laurent(c)?;
        for (j, &e) in mono.central().iter().enumerate() {
            for _ in 0..e {
                coeff = coeff.mul(&centrals[j]);
            }
        }
        let mut acc = RMatrix::identity(size);
        for &g in mono.word() {
            acc = acc.mul(&gens[g as usize]);
        }
        out = out.add(&acc.scale(&coeff));
    }
    Ok(out)
}

impl MultiplicitySpace {
    /// K_I = (Q_I - (q + q^-1)) / (q - q^-1)^2 for I = 12, 23 and
    /// K13 = [K12, K23]_q.
    pub fn k_generators(&self) -> Result<[RMatrix; 3]> {
        let chi = RatFn::from_laurent(&LaurentPoly::chi(1))?;
        let d2 = RatFn::from_laurent(&LaurentPoly::q_diff(1).pow(2)?)?.inv().expect("nonzero");
        let n = self.dim;
        let k = |x: &RMatrix| x.sub(&RMatrix::scalar(n, chi.clone())).scale(&d2);
        let k12 = k(&self.q12);
        let k23 = k(&self.q23);
        let q = RatFn::from_laurent(&LaurentPoly::q())?;
        let qi = q.inv().expect("nonzero");
        let k13 = k12.twisted_commutator(&k23, &q, &qi);
        Ok([k12, k23, k13])
    }

    pub fn xi_values(&self) -> Result<Vec<RatFn>> {
        let m = self.m.map(|x| x as i64);
        [InvariantFunction::Xi2, InvariantFunction::Xi4, InvariantFunction::Xi4p, InvariantFunction::Xi6]
            .iter()
            .map(|f| f.value(m))
            .collect()
    }
}

fn ratfn_witness(m: &RMatrix) -> String {
    match m.entries().next() {
        Some((i, j, x)) => format!("entry ({i},{j}) = {x:?}"),
        None => "zero".into(),
    }
}

/// The K-form relations with parameter values at m, on the multiplicity space.
pub fn verify_multiplicity(m: [usize; 4]) -> Vec<VerificationReport> {
    let mstr = m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let params = [("m", mstr)];
    let space = multiplicity_space_action(m);
    let names = ["multiplicity.k-relation.1", "multiplicity.k-relation.2", "multiplicity.k-relation.3"];
    let anchors = ["[K12,K23]_q = K13", "[K23,K13]_q relation", "[K13,K12]_q relation"];
    let mut out = Vec::new();
    let dim_check = VerificationReport::run("multiplicity.casimir-value", "Q123 acts as chi(m4)", &params, || {
        let s = space.as_ref().map_err(|e| e.clone())?;
        let chi = RatFn::from_laurent(&LaurentPoly::chi(m[3] as i32))?;
        let diff = s.q123.sub(&RMatrix::scalar(s.dim, chi));
        Ok(Outcome::check(diff.is_zero(), || ratfn_witness(&diff)).with_details(json!({ "dim": s.dim })))
    });
    out.push(dim_check);
    let rels: Vec<NcPoly> = k_relations().into_iter().chain([k_casimir_relation()]).collect();
    for (k, rel) in rels.iter().enumerate() {
        let (id, anchor) = if k < 3 { (names[k], anchors[k]) } else { ("multiplicity.k-casimir", "cubic K relation") };
        out.push(VerificationReport::run(id, anchor, &params, || {
            let s = space.as_ref().map_err(|e| e.clone())?;
            let gens = s.k_generators()?;
            let xi = s.xi_values()?;
            let r = realize_scalar_centrals(rel, &gens, &xi, s.dim)?;
            Ok(Outcome::check(r.is_zero(), || ratfn_witness(&r)))
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_counts() {
        assert_eq!(multiplicity_space_action([2, 2, 2, 2]).unwrap().dim, 2);
        assert_eq!(multiplicity_space_action([2, 2, 2, 4]).unwrap().dim, 1);
        assert_eq!(multiplicity_space_action([3, 3, 3, 3]).unwrap().dim, 3);
        assert!(matches!(multiplicity_space_action([2, 2, 2, 3]), Err(Error::EmptyMultiplicity { .. })));
        assert!(matches!(multiplicity_space_action([2, 2, 2, 6]), Err(Error::EmptyMultiplicity { .. })));
    }

    #[test]
    fn trivial_outer_factors() {
        let s = multiplicity_space_action([1, 3, 1, 3]).unwrap();
        let chi = RatFn::from_laurent(&LaurentPoly::chi(3)).unwrap();
        assert_eq!(s.q12, RMatrix::scalar(1, chi));
    }

    #[test]
    fn relations_hold_on_multiplicity_spaces() {
        for m in [[2, 2, 2, 2], [2, 2, 2, 4], [2, 3, 4, 3], [3, 3, 3, 3], [2, 3, 4, 5]] {
            for r in verify_multiplicity(m) {
                assert!(r.is_pass(), "{:?} {} {:?}", m, r.check_id, r.witness);
            }
        }
    }
}
