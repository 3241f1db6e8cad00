//! Exact Gaussian elimination over a `Field`.

use std::collections::BTreeMap;

use crate::ring::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

/// Incrementally built row-echelon basis of sparse vectors.
#[derive(Clone, Debug, Default)]
pub struct Echelon<F> {
    rows: Vec<(usize, SparseVec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                for (j, x) in row {
                    let nv = v.get(j).cloned().unwrap_or_else(F::zero).sub(&c.mul(x));
                    if nv.is_zero() {
                        v.remove(j);
                    } else {
                        v.insert(*j, nv);
                    }
                }
            }
        }
        v
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row = r.iter().map(|(j, x)| (*j, x.mul(&inv))).collect();
        self.rows.push((p, row));
        true
    }
}

/// Reduced row echelon form, returning pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|i| !m[*i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(prow.iter()) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel {x : M x = 0}.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a[r][f].neg();
            }
            v
        })
        .collect()
}

/// Solves M x = b, returning a particular solution and the nullity of M,
/// or `None` when the system is inconsistent.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<(Vec<F>, usize)> {
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b.iter())
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][ncols].clone();
    }
    Some((x, ncols - pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_kernel() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&m), 2);
        let ker = nullspace(&m, 3);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let dot: BigRational = row.iter().zip(&ker[0]).map(|(a, b)| a * b).sum();
            assert_eq!(dot, q(0));
        }
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e = Echelon::<BigRational>::new();
        let v = |xs: &[(usize, i64)]| xs.iter().map(|(i, x)| (*i, q(*x))).collect::<SparseVec<_>>();
        assert!(e.insert(&v(&[(0, 1), (3, 2)])));
        assert!(e.insert(&v(&[(3, 1)])));
        assert!(!e.insert(&v(&[(0, 2), (3, 7)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let (x, nullity) = solve(&m, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert_eq!(nullity, 0);
        let m2 = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&m2, &[q(1), q(3)]).is_none());
    }
}
