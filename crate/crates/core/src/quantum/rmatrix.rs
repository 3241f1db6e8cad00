//! Universal R-matrix in products of irreps and the braided operators
//! acting on adjacent tensor slots.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::irrep::{irrep, two_h, LMatrix};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

/// R and R^-1 on M(a) (x) M(b).
#[derive(Clone, Debug)]
pub struct RPair {
    pub r: LMatrix,
    pub r_inv: LMatrix,
}

type RCache = Mutex<HashMap<(usize, usize), Arc<RPair>>>;

fn cache() -> &'static RCache {
    static CACHE: OnceLock<RCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// R = q^{2 H (x) H} sum_n (q - q^-1)^n q^{n(n-1)/2} / [n]! (E q^H (x) q^-H F)^n.
pub fn universal_r(a: usize, b: usize) -> Result<Arc<RPair>> {
    if let Some(p) = cache().lock().unwrap().get(&(a, b)) {
        return Ok(p.clone());
    }
    let ra = irrep(a);
    let rb = irrep(b);
    let nil = ra.e.mul(&ra.kp).kron(&rb.km.mul(&rb.f));
    let n = a * b;
    let mut sum = LMatrix::identity(n);
    let mut power = LMatrix::identity(n);
    let d = LaurentPoly::q_diff(1);
    for k in 1..a.min(b) {
        power = power.mul(&nil);
        if power.is_zero() {
            break;
        }
        let num = &d.pow(k as i32)? * &LaurentPoly::qh_pow((k * (k - 1)) as i32);
        let den = LaurentPoly::qfact(k as u32);
        let term = power.try_map(|x| (&num * x).div_exact(&den))?;
        sum = sum.add(&term);
    }
    let mut diag = LMatrix::zeros(n, n);
    let mut diag_inv = LMatrix::zeros(n, n);
    for i in 0..a {
        for j in 0..b {
            let e = two_h(a, i) * two_h(b, j);
            diag.set(i * b + j, i * b + j, LaurentPoly::qh_pow(e));
            diag_inv.set(i * b + j, i * b + j, LaurentPoly::qh_pow(-e));
        }
    }
    let r = diag.mul(&sum);
    let r_inv = sum.unipotent_inverse()?.mul(&diag_inv);
    let pair = Arc::new(RPair { r, r_inv });
    cache().lock().unwrap().insert((a, b), pair.clone());
    Ok(pair)
}

/// Row-major index of a multi-index.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
    out
}

pub fn swapped(dims: &[usize], i: usize) -> Vec<usize> {
    let mut d = dims.to_vec();
    d.swap(i, i + 1);
    d
}

/// Flip of slots i, i+1 (0-based): V_dims -> V_swapped.
pub fn flip(dims: &[usize], i: usize) -> LMatrix {
    let total: usize = dims.iter().product();
    let sd = swapped(dims, i);
    let mut p = LMatrix::zeros(total, total);
    for col in 0..total {
        let mut idx = multi_index(dims, col);
        idx.swap(i, i + 1);
        p.set(flat_index(&sd, &idx), col, LaurentPoly::one());
    }
    p
}

/// Braided R-matrix for generator s_i (1-based), as a map V_dims -> V_{s_i dims},
/// together with its inverse.
pub fn braided_r(dims: &[usize], i: usize) -> Result<(LMatrix, LMatrix)> {
    let n = dims.len();
    if i == 0 || i >= n {
        return Err(Error::SlotOutOfRange { slot: i, n });
    }
    let s = i - 1;
    let sd = swapped(dims, s);
    let pair = universal_r(sd[s], sd[s + 1])?;
    let before: usize = sd[..s].iter().product();
    let after: usize = sd[s + 2..].iter().product();
    let embed = |m: &LMatrix| LMatrix::identity(before).kron(m).kron(&LMatrix::identity(after));
    let p = flip(dims, s);
    let check = embed(&pair.r).mul(&p);
    let check_inv = p.transpose().mul(&embed(&pair.r_inv));
    Ok((check, check_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::uq::{Letter, UqElement};

    #[test]
    fn r_inverse_is_inverse() {
        for (a, b) in [(2, 2), (2, 3), (3, 3), (4, 2)] {
            let p = universal_r(a, b).unwrap();
            assert_eq!(p.r.mul(&p.r_inv), LMatrix::identity(a * b));
        }
    }

    #[test]
    fn braided_r_commutes_with_coproduct() {
        for (a, b) in [(2, 2), (2, 3), (3, 2)] {
            let (rc, _) = braided_r(&[a, b], 1).unwrap();
            for l in [Letter::E, Letter::F, Letter::Kp] {
                let x = UqElement::letter(l).coproduct(0).unwrap();
                let lhs = x.represent(&[b, a]).unwrap().mul(&rc);
                let rhs = rc.mul(&x.represent(&[a, b]).unwrap());
                assert_eq!(lhs, rhs, "{l:?} on ({a},{b})");
            }
        }
    }

    #[test]
    fn braid_relation_holds() {
        for dims in [[2, 2, 2], [2, 3, 2]] {
            let d = dims.to_vec();
            let (r1, _) = braided_r(&d, 1).unwrap();
            let d1 = swapped(&d, 0);
            let (r2, _) = braided_r(&d1, 2).unwrap();
            let d12 = swapped(&d1, 1);
            let (r3, _) = braided_r(&d12, 1).unwrap();
            let lhs = r3.mul(&r2).mul(&r1);
            let (s1, _) = braided_r(&d, 2).unwrap();
            let e1 = swapped(&d, 1);
            let (s2, _) = braided_r(&e1, 1).unwrap();
            let e12 = swapped(&e1, 0);
            let (s3, _) = braided_r(&e12, 2).unwrap();
            let rhs = s3.mul(&s2).mul(&s1);
            assert_eq!(lhs, rhs);
        }
    }
}
