//! U(sl2)^{(x)3} on finite representations: polarized traces, the classical
//! Racah relations, the classical limit of the K generators, and linear
//! independence of ordered monomials at bounded degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::coeff::{LaurentPoly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::label::LoopLabel;
use crate::linalg::{Echelon, SparseVec};
use crate::matrix::SparseMatrix;
use crate::quantum::{intermediate_casimir, Convention};
use crate::report::{Outcome, VerificationReport};

pub type QMatrix = SparseMatrix<BigRational>;
pub type SMatrix = SparseMatrix<TruncatedSeries>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// The m-dimensional representation of U(sl2) on v_0..v_{m-1}, with
/// H v_k = ((m-1)/2 - k) v_k, E v_k = (m-k) v_{k-1}, F v_k = (k+1) v_{k+1}:
/// the q = 1 value of the quantum irreps.
#[derive(Clone, Debug)]
pub struct ClassicalRep {
    pub m: usize,
    /// e[i][j] = e_{i+1, j+1}
    pub e: [[QMatrix; 2]; 2],
}

impl ClassicalRep {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "representation dimension must be positive");
        let mut h = QMatrix::zeros(m, m);
        let mut e = QMatrix::zeros(m, m);
        let mut f = QMatrix::zeros(m, m);
        for k in 0..m {
            let w = BigRational::new(BigInt::from(m as i64 - 1 - 2 * k as i64), BigInt::from(2));
            if !w.is_zero() {
                h.set(k, k, w);
            }
            if k >= 1 {
                e.set(k - 1, k, rat((m - k) as i64));
            }
            if k + 1 < m {
                f.set(k + 1, k, rat(k as i64 + 1));
            }
        }
        ClassicalRep { m, e: [[h.clone(), e], [f, h.neg()]] }
    }

    pub fn h(&self) -> &QMatrix {
        &self.e[0][0]
    }

    pub fn big_e(&self) -> &QMatrix {
        &self.e[0][1]
    }

    pub fn big_f(&self) -> &QMatrix {
        &self.e[1][0]
    }
}

/// `op` acting in slot `slot` (0-based) of the tensor product.
fn embed(op: &QMatrix, slot: usize, dims: &[usize]) -> QMatrix {
    let before: usize = dims[..slot].iter().product();
    let after: usize = dims[slot + 1..].iter().product();
    QMatrix::identity(before).kron(op).kron(&QMatrix::identity(after))
}

/// Generators e_ij in every slot of a tensor product of irreps.
#[derive(Clone, Debug)]
pub struct TensorRep {
    pub dims: Vec<usize>,
    /// e[a][i][j] = e_{i+1, j+1} in slot a
    e: Vec<[[QMatrix; 2]; 2]>,
}

impl TensorRep {
    pub fn new(dims: &[usize]) -> Self {
        let e = (0..dims.len())
            .map(|a| {
                let r = ClassicalRep::new(dims[a]);
                let f = |x: &QMatrix| embed(x, a, dims);
                [[f(&r.e[0][0]), f(&r.e[0][1])], [f(&r.e[1][0]), f(&r.e[1][1])]]
            })
            .collect();
        TensorRep { dims: dims.to_vec(), e }
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    /// Diagonal H, E, F.
    pub fn diagonal(&self) -> [QMatrix; 3] {
        let n = self.size();
        let sum = |i: usize, j: usize| self.e.iter().fold(QMatrix::zeros(n, n), |acc, x| acc.add(&x[i][j]));
        [sum(0, 0), sum(0, 1), sum(1, 0)]
    }

    /// T^{(a_1..a_d)} = e^{(a_1)}_{i_2 i_1} e^{(a_2)}_{i_3 i_2} ... e^{(a_d)}_{i_1 i_d},
    /// with slots numbered from 1.
    pub fn polarized_trace(&self, slots: &[usize]) -> Result<QMatrix> {
        let d = slots.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("polarized trace needs at least one slot".into()));
        }
        if let Some(&a) = slots.iter().find(|&&a| a == 0 || a > self.dims.len()) {
            return Err(Error::SlotOutOfRange { slot: a, n: self.dims.len() });
        }
        let n = self.size();
        let mut out = QMatrix::zeros(n, n);
        for bits in 0..(1usize << d) {
            let idx: Vec<usize> = (0..d).map(|k| (bits >> k) & 1).collect();
            let mut acc = QMatrix::identity(n);
            for k in 0..d {
                acc = acc.mul(&self.e[slots[k] - 1][idx[(k + 1) % d]][idx[k]]);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

/// The generators k1..k4, X, Y, Z of the classical Racah algebra.
#[derive(Clone, Debug)]
pub struct RacahGenerators {
    pub dims: Vec<usize>,
    pub k: [QMatrix; 4],
    pub x: QMatrix,
    pub y: QMatrix,
    pub z: QMatrix,
}

fn anti(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.mul(b).add(&b.mul(a))
}

impl RacahGenerators {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.len() != 3 {
            return Err(Error::DimensionMismatch(format!("expected three factors, got {}", dims.len())));
        }
        let rep = TensorRep::new(dims);
        let t = |s: &[usize]| rep.polarized_trace(s);
        let two = rat(2);
        let k1 = t(&[1, 1])?;
        let k2 = t(&[2, 2])?;
        let k3 = t(&[3, 3])?;
        let (t12, t23, t13) = (t(&[1, 2])?, t(&[2, 3])?, t(&[1, 3])?);
        let k4 = k1.add(&k2).add(&k3).add(&t12.add(&t23).add(&t13).scale(&two));
        let x = k1.add(&k2).add(&t12.scale(&two));
        let y = k2.add(&k3).add(&t23.scale(&two));
        let z = x.commutator(&y);
        Ok(RacahGenerators { dims: dims.to_vec(), k: [k1, k2, k3, k4], x, y, z })
    }

    fn ksum(&self) -> QMatrix {
        self.k.iter().skip(1).fold(self.k[0].clone(), |acc, k| acc.add(k))
    }

    /// [X,Z] minus its expression in the Racah algebra.
    pub fn xz_residual(&self) -> QMatrix {
        let [k1, k2, k3, k4] = &self.k;
        let four = rat(4);
        let rhs = anti(&self.x, &self.y)
            .add(&self.x.mul(&self.x))
            .sub(&self.ksum().mul(&self.x))
            .add(&k1.sub(k2).mul(&k4.sub(k3)))
            .scale(&four);
        self.x.commutator(&self.z).sub(&rhs)
    }

    /// [Z,Y] minus its expression in the Racah algebra.
    pub fn zy_residual(&self) -> QMatrix {
        let [k1, k2, k3, k4] = &self.k;
        let four = rat(4);
        let rhs = anti(&self.x, &self.y)
            .add(&self.y.mul(&self.y))
            .sub(&self.ksum().mul(&self.y))
            .add(&k3.sub(k2).mul(&k4.sub(k1)))
            .scale(&four);
        self.z.commutator(&self.y).sub(&rhs)
    }

    pub fn gamma(&self) -> QMatrix {
        let [k1, k2, k3, k4] = &self.k;
        let n = self.x.nrows();
        let (x, y) = (&self.x, &self.y);
        self.z
            .mul(&self.z)
            .sub(&x.mul(y).mul(x).add(&y.mul(x).mul(y)).scale(&rat(8)))
            .add(&self.ksum().sub(&QMatrix::scalar(n, rat(4))).mul(&anti(x, y)).scale(&rat(4)))
            .sub(&k1.sub(k2).mul(&k4.sub(k3)).mul(y).scale(&rat(8)))
            .sub(&k3.sub(k2).mul(&k4.sub(k1)).mul(x).scale(&rat(8)))
    }

    /// 8(k1 - k2 + k3 - k4)(k1 k3 - k2 k4) - 32(k1 k3 + k2 k4).
    pub fn gamma_expected(&self) -> QMatrix {
        let [k1, k2, k3, k4] = &self.k;
        let a = k1.sub(k2).add(k3).sub(k4);
        let b = k1.mul(k3).sub(&k2.mul(k4));
        let c = k1.mul(k3).add(&k2.mul(k4));
        a.mul(&b).scale(&rat(8)).sub(&c.scale(&rat(32)))
    }
}

fn witness(m: &QMatrix) -> String {
    match m.entries().next() {
        Some((i, j, x)) => format!("entry ({i},{j}) = {x}"),
        None => "zero".into(),
    }
}

fn dims_param(dims: &[usize]) -> (&'static str, String) {
    ("dims", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
}

/// Z = -8 T^{(1,2,3)}, the Racah relations, Gamma, and centralizer membership.
pub fn verify_racah_relations(dims: &[usize]) -> Vec<VerificationReport> {
    let params = [dims_param(dims)];
    let g = RacahGenerators::new(dims);
    let mut out = Vec::new();
    let mut check = |id: &str, anchor: &str, f: &dyn Fn(&RacahGenerators) -> Result<QMatrix>| {
        out.push(VerificationReport::run(id, anchor, &params, || {
            let g = g.as_ref().map_err(|e| e.clone())?;
            let r = f(g)?;
            Ok(Outcome::check(r.is_zero(), || witness(&r)))
        }));
    };
    check("racah.z-trace", "Z = -8 T^(1,2,3)", &|g| {
        let t = TensorRep::new(&g.dims).polarized_trace(&[1, 2, 3])?;
        Ok(g.z.add(&t.scale(&rat(8))))
    });
    check("racah.k-central", "k1..k4 commute with X and Y", &|g| {
        let n = g.x.nrows();
        Ok(g.k.iter().fold(QMatrix::zeros(n, n), |acc, k| acc.add(&k.commutator(&g.x)).add(&k.commutator(&g.y))))
    });
    check("racah.centralizer", "k_i, X, Y, Z commute with the diagonal sl2", &|g| {
        let diag = TensorRep::new(&g.dims).diagonal();
        let n = g.x.nrows();
        let mut acc = QMatrix::zeros(n, n);
        for a in g.k.iter().chain([&g.x, &g.y, &g.z]) {
            for d in &diag {
                let c = a.commutator(d);
                if !c.is_zero() {
                    acc = c;
                }
            }
        }
        Ok(acc)
    });
    check("racah.xz", "[X,Z] Racah relation", &|g| Ok(g.xz_residual()));
    check("racah.zy", "[Z,Y] Racah relation", &|g| Ok(g.zy_residual()));
    check("racah.gamma", "Gamma identity", &|g| Ok(g.gamma().sub(&g.gamma_expected())));
    out
}

/// K_I = (Q_I - q - q^-1)/(q - q^-1)^2 as series in epsilon, q = e^epsilon,
/// for I in {1, 2, 3, 123, 12, 23}, and K13 = [K12, K23]_q. Keys are the
/// labels "1", "2", "3", "123", "12", "23", "13".
pub fn k_series(dims: &[usize], order: usize) -> Result<Vec<(String, SMatrix)>> {
    if order < 2 {
        return Err(Error::DivisionObstruction { needed: 2, found: order });
    }
    let num_shift = TruncatedSeries::expand(&LaurentPoly::chi(1), order)?;
    let den = TruncatedSeries::expand(&LaurentPoly::q_diff(1).pow(2)?, order)?;
    let mut out = Vec::new();
    for set in [&[1usize][..], &[2], &[3], &[1, 2, 3], &[1, 2], &[2, 3]] {
        let q = intermediate_casimir(&LoopLabel::plain(set), dims, Convention::Standard)?;
        let s = q.try_map(|x| TruncatedSeries::expand(x, order))?;
        let n = s.nrows();
        let num = s.sub(&SMatrix::scalar(n, num_shift.clone()));
        let k = num.try_map(|x| x.div(&den))?;
        out.push((set.iter().map(|i| i.to_string()).collect::<String>(), k));
    }
    let qs = TruncatedSeries::expand(&LaurentPoly::q(), order)?;
    let qi = TruncatedSeries::expand(&LaurentPoly::q_pow(-1), order)?;
    let k12 = out[4].1.clone();
    let k23 = out[5].1.clone();
    out.push(("13".into(), k12.twisted_commutator(&k23, &qs, &qi)));
    Ok(out)
}

/// Coefficient of epsilon^n in each entry.
pub fn series_coeff(m: &SMatrix, n: usize) -> QMatrix {
    m.map(|x| x.coeff(n))
}

/// Degree-0 matching: K_i -> k_i/2, K123 -> k4/2, K12 -> X/2, K23 -> Y/2,
/// K13 -> Z/4.
pub fn classical_limit_check(dims: &[usize], order: usize) -> Vec<VerificationReport> {
    let params = [dims_param(dims), ("order", order.to_string())];
    let ks = k_series(dims, order);
    let g = RacahGenerators::new(dims);
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    type Target = Box<dyn Fn(&RacahGenerators) -> QMatrix>;
    let targets: [(&str, Target); 7] = [
        ("1", Box::new(|g| g.k[0].scale(&half()))),
        ("2", Box::new(|g| g.k[1].scale(&half()))),
        ("3", Box::new(|g| g.k[2].scale(&half()))),
        ("123", Box::new(|g| g.k[3].scale(&half()))),
        ("12", Box::new(|g| g.x.scale(&half()))),
        ("23", Box::new(|g| g.y.scale(&half()))),
        ("13", Box::new(move |g| g.z.scale(&quarter))),
    ];
    targets
        .iter()
        .map(|(label, target)| {
            VerificationReport::run(
                &format!("classical-limit.K{label}"),
                "degree 0 coefficients of K_I",
                &params,
                || {
                    let ks = ks.as_ref().map_err(|e| e.clone())?;
                    let g = g.as_ref().map_err(|e| e.clone())?;
                    let k = &ks.iter().find(|(l, _)| l == label).expect("label").1;
                    let r = series_coeff(k, 0).sub(&target(g));
                    Ok(Outcome::check(r.is_zero(), || witness(&r)))
                },
            )
        })
        .collect()
}

/// Exponents (k1, k2, k3, k4, X, Y, Z) of the ordered monomials with
/// exponent sum at most `max_degree` and Z exponent at most one.
pub fn monomials(max_degree: usize) -> Vec<[usize; 7]> {
    fn rec(pos: usize, left: usize, cur: &mut [usize; 7], out: &mut Vec<[usize; 7]>) {
        if pos == 7 {
            out.push(*cur);
            return;
        }
        let cap = if pos == 6 { left.min(1) } else { left };
        for e in 0..=cap {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut [0; 7], &mut out);
    out.sort_by_key(|m| (m.iter().sum::<usize>(), std::cmp::Reverse(*m)));
    out
}

fn evaluate(g: &RacahGenerators, m: &[usize; 7]) -> QMatrix {
    let n = g.x.nrows();
    let factors = [&g.k[0], &g.k[1], &g.k[2], &g.k[3], &g.x, &g.y, &g.z];
    let mut acc = QMatrix::identity(n);
    for (f, &e) in factors.iter().zip(m) {
        for _ in 0..e {
            acc = acc.mul(f);
        }
    }
    acc
}

/// Rank of the ordered monomials of degree at most `max_degree` on
/// V_{d1} (x) V_{d2} (x) V_{d3}, where V_d is the direct sum of the irreps
/// of dimension 1..=d. The operators are block diagonal, so each monomial
/// is flattened block by block.
pub fn independence_rank(max_degree: usize, dims: &[usize]) -> Result<(usize, usize, Option<Vec<BigRational>>)> {
    if dims.len() != 3 || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!("expected three positive dims, got {dims:?}")));
    }
    let monos = monomials(max_degree);
    let mut vecs: Vec<SparseVec<BigRational>> = vec![SparseVec::new(); monos.len()];
    let mut offset = 0;
    for m1 in 1..=dims[0] {
        for m2 in 1..=dims[1] {
            for m3 in 1..=dims[2] {
                let g = RacahGenerators::new(&[m1, m2, m3])?;
                let n = m1 * m2 * m3;
                for (v, m) in vecs.iter_mut().zip(&monos) {
                    for (i, j, x) in evaluate(&g, m).entries() {
                        v.insert(offset + i * n + j, x.clone());
                    }
                }
                offset += n * n;
            }
        }
    }
    let mut ech = Echelon::new();
    let mut kernel = None;
    for (idx, v) in vecs.iter().enumerate() {
        if !ech.insert(v) && kernel.is_none() {
            kernel = Some(dependency(&vecs[..=idx]));
        }
    }
    Ok((ech.rank(), monos.len(), kernel))
}

/// Coefficients of a linear dependency among `vecs`, whose last element
/// lies in the span of the others.
fn dependency(vecs: &[SparseVec<BigRational>]) -> Vec<BigRational> {
    let cols: std::collections::BTreeSet<usize> = vecs.iter().flat_map(|v| v.keys().copied()).collect();
    let cols: Vec<usize> = cols.into_iter().collect();
    let rows: Vec<Vec<BigRational>> = cols
        .iter()
        .map(|c| vecs.iter().map(|v| v.get(c).cloned().unwrap_or_else(BigRational::zero)).collect())
        .collect();
    crate::linalg::nullspace(&rows, vecs.len()).into_iter().next().unwrap_or_default()
}

fn monomial_name(m: &[usize; 7]) -> String {
    let names = ["k1", "k2", "k3", "k4", "X", "Y", "Z"];
    let parts: Vec<String> = names
        .iter()
        .zip(m)
        .filter(|(_, e)| **e > 0)
        .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Independence of the ordered monomials up to `max_degree` at `dims`.
pub fn independence_check(max_degree: usize, dims: &[usize]) -> VerificationReport {
    let params = [dims_param(dims), ("degree", max_degree.to_string())];
    VerificationReport::run("classical.independence", "linear independence of ordered monomials", &params, || {
        let (rank, count, kernel) = independence_rank(max_degree, dims)?;
        let details = json!({ "rank": rank, "monomials": count });
        Ok(match kernel {
            None => Outcome::pass().with_details(details),
            Some(k) => {
                let monos = monomials(max_degree);
                let relation: Vec<String> = k
                    .iter()
                    .zip(&monos)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, m)| format!("({c})*{}", monomial_name(m)))
                    .collect();
                Outcome::fail(format!("rank {rank} < {count}; kernel {}", relation.join(" + "))).with_details(details)
            }
        })
    })
}

/// Ranks at (d, d, d) for d = 1, 2, ... until the rank reaches the monomial
/// count or d = d_max.
pub fn rank_stabilization(max_degree: usize, d_max: usize) -> Result<Vec<(usize, usize)>> {
    let count = monomials(max_degree).len();
    let mut out = Vec::new();
    for d in 1..=d_max {
        let (rank, _, _) = independence_rank(max_degree, &[d, d, d])?;
        out.push((d, rank));
        if rank == count {
            break;
        }
    }
    Ok(out)
}

pub fn verify_rank_stabilization(max_degree: usize, d_max: usize) -> VerificationReport {
    let params = [("degree", max_degree.to_string()), ("d_max", d_max.to_string())];
    VerificationReport::run("classical.rank-stabilization", "linear independence of ordered monomials", &params, || {
        let ranks = rank_stabilization(max_degree, d_max)?;
        let count = monomials(max_degree).len();
        let monotone = ranks.windows(2).all(|w| w[0].1 <= w[1].1);
        let reached = ranks.last().map(|r| r.1 == count).unwrap_or(false);
        let details = json!({ "ranks": ranks, "monomials": count });
        Ok(Outcome::check(monotone && reached, || format!("ranks {ranks:?} of {count}")).with_details(details))
    })
}

/// True if every entry of the degree-0 and degree-1 coefficients of the
/// numerator Q_I - q - q^-1 vanishes.
pub fn numerator_vanishes_to_second_order(dims: &[usize], set: &[usize], order: usize) -> Result<bool> {
    let q = intermediate_casimir(&LoopLabel::plain(set), dims, Convention::Standard)?;
    let shift = TruncatedSeries::expand(&LaurentPoly::chi(1), order)?;
    let s = q.try_map(|x| TruncatedSeries::expand(x, order))?;
    let num = s.sub(&SMatrix::scalar(s.nrows(), shift));
    Ok(series_coeff(&num, 0).is_zero() && series_coeff(&num, 1).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_rep_relations() {
        for m in 1..6 {
            let r = ClassicalRep::new(m);
            let (h, e, f) = (r.h(), r.big_e(), r.big_f());
            assert_eq!(h.commutator(e), *e);
            assert_eq!(h.commutator(f), f.neg());
            assert_eq!(e.commutator(f), h.scale(&rat(2)));
            // [e_ij, e_kl] = d_jk e_il - d_li e_kj
            for (i, j, k, l) in (0..16).map(|x| (x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1)) {
                let lhs = r.e[i][j].commutator(&r.e[k][l]);
                let mut rhs = QMatrix::zeros(m, m);
                if j == k {
                    rhs = rhs.add(&r.e[i][l]);
                }
                if l == i {
                    rhs = rhs.sub(&r.e[k][j]);
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quadratic_trace_is_the_casimir() {
        let rep = TensorRep::new(&[2, 2, 2]);
        let t = rep.polarized_trace(&[1, 1]).unwrap();
        assert_eq!(t, QMatrix::scalar(8, BigRational::new(3.into(), 2.into())));
        // direct 2x2 computation: e11^2 + e12 e21 + e21 e12 + e22^2
        let r = ClassicalRep::new(2);
        let direct = r.e[0][0]
            .mul(&r.e[0][0])
            .add(&r.e[0][1].mul(&r.e[1][0]))
            .add(&r.e[1][0].mul(&r.e[0][1]))
            .add(&r.e[1][1].mul(&r.e[1][1]));
        assert_eq!(direct, QMatrix::scalar(2, BigRational::new(3.into(), 2.into())));
        for m in 1..5 {
            let k = TensorRep::new(&[m]).polarized_trace(&[1, 1]).unwrap();
            let v = BigRational::new(BigInt::from(m * m - 1), BigInt::from(2));
            assert_eq!(k, QMatrix::scalar(m, v));
        }
    }

    #[test]
    fn bilinear_traces_are_symmetric() {
        let rep = TensorRep::new(&[2, 3, 2]);
        for (a, b) in [(1, 2), (2, 3), (1, 3)] {
            assert_eq!(rep.polarized_trace(&[a, b]).unwrap(), rep.polarized_trace(&[b, a]).unwrap());
        }
        assert!(matches!(rep.polarized_trace(&[4]), Err(Error::SlotOutOfRange { .. })));
    }

    #[test]
    fn racah_relations_hold() {
        for dims in [[2, 2, 2], [2, 2, 3], [2, 3, 4]] {
            for r in verify_racah_relations(&dims) {
                assert!(r.is_pass(), "{dims:?} {} {:?}", r.check_id, r.witness);
            }
        }
    }

    #[test]
    fn broken_relation_is_detected() {
        let mut g = RacahGenerators::new(&[2, 2, 3]).unwrap();
        g.k[3] = g.k[3].add(&QMatrix::identity(12));
        assert!(!g.xz_residual().is_zero());
        assert!(!g.gamma().sub(&g.gamma_expected()).is_zero());
    }

    #[test]
    fn classical_limit_matches() {
        for r in classical_limit_check(&[2, 2, 2], 3) {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
        for r in classical_limit_check(&[2, 3, 2], 2) {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
        assert!(numerator_vanishes_to_second_order(&[2, 2, 2], &[1, 2], 3).unwrap());
        assert!(matches!(k_series(&[2, 2, 2], 1), Err(Error::DivisionObstruction { .. })));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(0).len(), 1);
        assert_eq!(monomials(1).len(), 8);
        // 28 monomials of degree <= 2 in six letters, plus Z times 7
        assert_eq!(monomials(2).len(), 35);
        assert!(monomials(3).iter().all(|m| m[6] <= 1));
    }

    #[test]
    fn independence() {
        assert!(independence_check(1, &[3, 3, 3]).is_pass());
        let r = independence_check(2, &[4, 4, 4]);
        assert!(r.is_pass(), "{:?}", r.witness);
        // one-dimensional factors: everything is scalar
        let (rank, count, kernel) = independence_rank(1, &[1, 1, 1]).unwrap();
        assert_eq!((rank, count), (1, 8));
        assert!(kernel.is_some());
    }

    #[test]
    fn ranks_are_monotone() {
        let r = rank_stabilization(1, 4).unwrap();
        assert!(r.windows(2).all(|w| w[0].1 <= w[1].1));
        assert_eq!(r.last().unwrap().1, 8);
    }
}
