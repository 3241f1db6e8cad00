//! Expansion of products of intermediate Casimirs in a monomial basis.
//!
//! Rows of the linear system are picked by evaluating at a rational q, the
//! selected square system is solved over Q(q^(1/2)), and the result is then
//! checked exactly on every requested realization.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::casimir::{intermediate_casimir, Convention};
use super::irrep::LMatrix;
use super::realize::first_nonzero;
use crate::coeff::{LaurentPoly, RatFn};
use crate::error::{Error, Result};
use crate::label::{Decoration, LoopLabel};
use crate::linalg::{solve, Echelon, SparseVec};

/// Memoized intermediate Casimirs keyed by label and dimensions.
#[derive(Debug)]
pub struct CasimirTable {
    conv: Convention,
    cache: HashMap<(LoopLabel, Vec<usize>), LMatrix>,
}

impl CasimirTable {
    pub fn new(conv: Convention) -> Self {
        CasimirTable { conv, cache: HashMap::new() }
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    pub fn get(&mut self, label: &LoopLabel, dims: &[usize]) -> Result<LMatrix> {
        let key = (label.clone(), dims.to_vec());
        if let Some(m) = self.cache.get(&key) {
            return Ok(m.clone());
        }
        let m = intermediate_casimir(label, dims, self.conv)?;
        self.cache.insert(key, m.clone());
        Ok(m)
    }

    pub fn product(&mut self, labels: &[LoopLabel], dims: &[usize]) -> Result<LMatrix> {
        let size: usize = dims.iter().product();
        let mut acc = LMatrix::identity(size);
        for l in labels {
            acc = acc.mul(&self.get(l, dims)?);
        }
        Ok(acc)
    }
}

fn evaluation_point() -> BigRational {
    BigRational::new(BigInt::from(7), BigInt::from(5))
}

/// Coefficients c_b with sum_b c_b * basis_b = target on every dims in the
/// list. Realizations are given as (target, basis matrices) per dims.
pub fn expand_in_span(cases: &[(LMatrix, Vec<LMatrix>)]) -> Result<Vec<LaurentPoly>> {
    let nb = cases.first().map(|(_, b)| b.len()).unwrap_or(0);
    let r0 = evaluation_point();
    let mut ech: Echelon<BigRational> = Echelon::new();
    let mut rows: Vec<(Vec<LaurentPoly>, LaurentPoly)> = Vec::new();
    'outer: for (target, basis) in cases {
        let n = target.nrows();
        for i in 0..n {
            let mut cols: std::collections::BTreeSet<usize> = target.row(i).keys().copied().collect();
            for b in basis {
                cols.extend(b.row(i).keys().copied());
            }
            for j in cols {
                let sym: Vec<LaurentPoly> = basis.iter().map(|b| b.get(i, j)).collect();
                let mut v = SparseVec::new();
                for (k, x) in sym.iter().enumerate() {
                    let val = x.eval_qh(&r0)?;
                    if !num_traits::Zero::is_zero(&val) {
                        v.insert(k, val);
                    }
                }
                if ech.insert(&v) {
                    rows.push((sym, target.get(i, j)));
                    if rows.len() == nb {
                        break 'outer;
                    }
                }
            }
        }
    }
    if rows.len() < nb {
        return Err(Error::AmbiguousExpansion { rank: rows.len(), size: nb });
    }
    let a: Vec<Vec<RatFn>> = rows
        .iter()
        .map(|(r, _)| r.iter().map(RatFn::from_laurent).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let b: Vec<RatFn> = rows.iter().map(|(_, t)| RatFn::from_laurent(t)).collect::<Result<_>>()?;
    let (x, _) = solve(&a, &b).ok_or_else(|| Error::NotInSpan("selected system is inconsistent".into()))?;
    let coeffs: Vec<LaurentPoly> = x
        .iter()
        .enumerate()
        .map(|(k, c)| {
            c.to_laurent()
                .ok_or_else(|| Error::NotInSpan(format!("coefficient {k} is not a Laurent polynomial: {c:?}")))
        })
        .collect::<Result<_>>()?;
    for (target, basis) in cases {
        let mut resid = target.neg();
        for (c, m) in coeffs.iter().zip(basis) {
            resid = resid.add(&m.scale(c));
        }
        if !resid.is_zero() {
            return Err(Error::NotInSpan(format!("residual {}", first_nonzero(&resid))));
        }
    }
    Ok(coeffs)
}

pub fn expand_in_pbw_basis(
    product: &[LoopLabel],
    basis: &[Vec<LoopLabel>],
    dims_list: &[Vec<usize>],
    table: &mut CasimirTable,
) -> Result<Vec<LaurentPoly>> {
    let mut cases = Vec::new();
    for dims in dims_list {
        let target = table.product(product, dims)?;
        let mats = basis.iter().map(|b| table.product(b, dims)).collect::<Result<Vec<_>>>()?;
        cases.push((target, mats));
    }
    expand_in_span(&cases)
}

fn q(set: &[usize]) -> LoopLabel {
    LoopLabel::plain(set)
}

fn qd(set: &[usize]) -> LoopLabel {
    LoopLabel::decorated(set, Decoration::Down)
}

/// Label for a block of a set partition, `d` decorated when not contiguous.
pub fn block_label(set: &[usize]) -> LoopLabel {
    if set.windows(2).all(|w| w[1] == w[0] + 1) {
        q(set)
    } else {
        qd(set)
    }
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        let mut with_new = vec![vec![first]];
        with_new.extend(p.iter().cloned());
        out.push(with_new);
        for k in 0..p.len() {
            let mut q = p.clone();
            q[k].insert(0, first);
            out.push(q);
        }
    }
    out
}

/// Products over the blocks of each set partition of {1..n}, blocks of size
/// at least two first, singletons last.
pub fn partition_basis(n: usize) -> Vec<Vec<LoopLabel>> {
    let items: Vec<usize> = (1..=n).collect();
    let mut out: Vec<Vec<LoopLabel>> = set_partitions(&items)
        .into_iter()
        .map(|mut p| {
            p.sort_by_key(|b| (b.len() == 1, b[0]));
            p.iter().map(|b| block_label(b)).collect()
        })
        .collect();
    out.sort();
    out
}

/// Partition monomials on four punctures without the crossing pair Q13d*Q24d.
pub fn pbw4_basis() -> Vec<Vec<LoopLabel>> {
    let crossing = vec![qd(&[1, 3]), qd(&[2, 4])];
    partition_basis(4).into_iter().filter(|b| *b != crossing).collect()
}

/// Ordered words of degree <= 2 in Q12, Q23, Q13d times multilinear
/// monomials in Q1, Q2, Q3, Q123, of total degree <= 2.
pub fn pbw3_basis() -> Vec<Vec<LoopLabel>> {
    let words: Vec<Vec<LoopLabel>> = vec![
        vec![],
        vec![q(&[1, 2])],
        vec![q(&[2, 3])],
        vec![qd(&[1, 3])],
        vec![q(&[1, 2]), q(&[1, 2])],
        vec![q(&[1, 2]), q(&[2, 3])],
        vec![q(&[1, 2]), qd(&[1, 3])],
        vec![q(&[2, 3]), q(&[2, 3])],
        vec![q(&[2, 3]), qd(&[1, 3])],
        vec![qd(&[1, 3]), qd(&[1, 3])],
    ];
    let centrals = [q(&[1]), q(&[2]), q(&[3]), q(&[1, 2, 3])];
    let mut out = Vec::new();
    for w in words {
        let room = 2 - w.len();
        let mut monos: Vec<Vec<LoopLabel>> = vec![vec![]];
        if room >= 1 {
            monos.extend(centrals.iter().map(|c| vec![c.clone()]));
        }
        if room >= 2 {
            for i in 0..4 {
                for j in i + 1..4 {
                    monos.push(vec![centrals[i].clone(), centrals[j].clone()]);
                }
            }
        }
        for m in monos {
            let mut b = m;
            b.extend(w.iter().cloned());
            out.push(b);
        }
    }
    out
}

/// All dims vectors of length n with entries in `values`.
pub fn dims_family(n: usize, values: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|d| {
                values.iter().map(move |v| {
                    let mut e = d.clone();
                    e.push(*v);
                    e
                })
            })
            .collect();
    }
    out
}

pub fn format_labels(labels: &[LoopLabel]) -> String {
    if labels.is_empty() {
        return "1".into();
    }
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_basis_has_bell_number_size() {
        assert_eq!(partition_basis(3).len(), 5);
        assert_eq!(partition_basis(4).len(), 15);
    }

    #[test]
    fn reverse_product_expands_by_swap_rule() {
        let mut t = CasimirTable::new(Convention::Standard);
        let basis = pbw3_basis();
        let dims = dims_family(3, &[1, 2, 3]);
        let x = [q(&[2, 3]), q(&[1, 2])];
        let c = expand_in_pbw_basis(&x, &basis, &dims, &mut t).unwrap();
        let find = |b: &[LoopLabel]| c[basis.iter().position(|x| x.as_slice() == b).unwrap()].clone();
        assert_eq!(find(&[q(&[1, 2]), q(&[2, 3])]), LaurentPoly::q_pow(2));
        assert_eq!(find(&[qd(&[1, 3])]), &LaurentPoly::q() * &LaurentPoly::q_diff(2));
        let cen = -(&LaurentPoly::q() * &LaurentPoly::q_diff(1));
        assert_eq!(find(&[q(&[1]), q(&[3])]), cen);
        assert_eq!(find(&[q(&[2]), q(&[1, 2, 3])]), cen);
        let nonzero = c.iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn single_small_realization_is_ambiguous() {
        let mut t = CasimirTable::new(Convention::Standard);
        let x = [q(&[2, 3]), q(&[1, 2])];
        let r = expand_in_pbw_basis(&x, &pbw3_basis(), &[vec![2, 2, 2]], &mut t);
        assert!(matches!(r, Err(Error::AmbiguousExpansion { .. })));
    }
}
