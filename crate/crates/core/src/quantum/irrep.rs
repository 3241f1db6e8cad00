use crate::coeff::LaurentPoly;
use crate::matrix::SparseMatrix;

pub type LMatrix = SparseMatrix<LaurentPoly>;

/// The m-dimensional irreducible representation of U_q(sl2) on the weight
/// basis v_0..v_{m-1}, with H v_k = ((m-1)/2 - k) v_k,
/// E v_k = [m-k] v_{k-1} and F v_k = [k+1] v_{k+1}.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub m: usize,
    pub e: LMatrix,
    pub f: LMatrix,
    /// q^H
    pub kp: LMatrix,
    /// q^-H
    pub km: LMatrix,
}

/// Twice the weight of v_k in M(m).
pub fn two_h(m: usize, k: usize) -> i32 {
    m as i32 - 1 - 2 * k as i32
}

pub fn irrep(m: usize) -> Irrep {
    assert!(m >= 1, "irrep dimension must be positive");
    let mut e = LMatrix::zeros(m, m);
    let mut f = LMatrix::zeros(m, m);
    let mut kp = LMatrix::zeros(m, m);
    let mut km = LMatrix::zeros(m, m);
    for k in 0..m {
        kp.set(k, k, LaurentPoly::qh_pow(two_h(m, k)));
        km.set(k, k, LaurentPoly::qh_pow(-two_h(m, k)));
        if k >= 1 {
            e.set(k - 1, k, LaurentPoly::qnum((m - k) as i32));
        }
        if k + 1 < m {
            f.set(k + 1, k, LaurentPoly::qnum(k as i32 + 1));
        }
    }
    Irrep { m, e, f, kp, km }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations_hold() {
        for m in 1..6 {
            let r = irrep(m);
            let q = LaurentPoly::q();
            assert_eq!(r.kp.mul(&r.e), r.e.mul(&r.kp).scale(&q));
            assert_eq!(r.kp.mul(&r.f), r.f.mul(&r.kp).scale(&LaurentPoly::q_pow(-1)));
            // [E, F] = [2H]_q = (q^{2H} - q^{-2H}) / (q - q^-1)
            let lhs = r.e.commutator(&r.f).scale(&LaurentPoly::q_diff(1));
            let rhs = r.kp.mul(&r.kp).sub(&r.km.mul(&r.km));
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn casimir_acts_by_chi() {
        for m in 1..6 {
            let r = irrep(m);
            let d = LaurentPoly::q_diff(1);
            let cas =
                r.f.mul(&r.e)
                    .scale(&(&d * &d))
                    .add(&r.kp.mul(&r.kp).scale(&LaurentPoly::q()))
                    .add(&r.km.mul(&r.km).scale(&LaurentPoly::q_pow(-1)));
            assert_eq!(cas, LMatrix::scalar(m, LaurentPoly::chi(m as i32)));
        }
    }
}
