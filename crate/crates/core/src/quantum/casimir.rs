//! Intermediate Casimirs Q_I of tensor products of irreps.

use super::braid::{braid_act, BraidWord};
use super::irrep::LMatrix;
use super::uq::block_casimir;
use crate::error::{Error, Result};
use crate::label::{Decoration, LoopLabel};

/// Which braid direction a `d` decoration stands for. Under `Standard`,
/// Q13d = R_2^-1 Q12 R_2; `Mirrored` exchanges u and d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Standard,
    Mirrored,
}

/// Contiguous block and braid word with Q_label = Psi_word(Q_block).
/// Elements are moved to the right one slot at a time, last element first,
/// using s^-1 for `d` and s for `u` under the standard convention.
pub fn construction(label: &LoopLabel, conv: Convention) -> (LoopLabel, BraidWord) {
    let set = &label.set;
    let k = set.len();
    let block = LoopLabel::plain(&(set[0]..set[0] + k).collect::<Vec<_>>());
    if label.is_consecutive() {
        return (block, BraidWord::default());
    }
    let deco = match conv {
        Convention::Standard => label.deco,
        Convention::Mirrored => label.deco.flipped(),
    };
    let sign: i8 = if deco == Decoration::Down { -1 } else { 1 };
    let mut applied = Vec::new();
    for t in (0..k).rev() {
        let from = set[0] + t;
        for p in from..set[t] {
            applied.push((p, sign));
        }
    }
    applied.reverse();
    (block, BraidWord::new(applied))
}

/// Q_label on V_{dims}.
pub fn intermediate_casimir(label: &LoopLabel, dims: &[usize], conv: Convention) -> Result<LMatrix> {
    let n = dims.len();
    if label.max_puncture() > n {
        return Err(Error::SlotOutOfRange { slot: label.max_puncture(), n });
    }
    let (block, word) = construction(label, conv);
    let pre = word.preimage_dims(dims);
    let x = block_casimir(n, block.set[0] - 1, block.set.len())?.represent(&pre)?;
    let (d, y) = braid_act(&word, &pre, &x)?;
    debug_assert_eq!(d, dims);
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentPoly;

    #[test]
    fn constructions() {
        let l = LoopLabel::parse_with_prefix("Q14d", 'Q').unwrap();
        let (b, w) = construction(&l, Convention::Standard);
        assert_eq!(b, LoopLabel::plain(&[1, 2]));
        assert_eq!(w.to_string(), "s3^-1 s2^-1");
        let l = LoopLabel::parse_with_prefix("Q134u", 'Q').unwrap();
        let (b, w) = construction(&l, Convention::Standard);
        assert_eq!(b, LoopLabel::plain(&[1, 2, 3]));
        assert_eq!(w.to_string(), "s2 s3");
    }

    #[test]
    fn single_slot_casimir_is_scalar() {
        let q = intermediate_casimir(&LoopLabel::plain(&[2]), &[2, 3, 2], Convention::Standard).unwrap();
        assert_eq!(q, LMatrix::scalar(12, LaurentPoly::chi(3)));
    }

    #[test]
    fn decorated_casimir_has_pair_spectrum() {
        // Q13 in (2,3,2) must satisfy the minimal polynomial of the 2x2 factor.
        let l = LoopLabel::parse_with_prefix("Q13d", 'Q').unwrap();
        let q13 = intermediate_casimir(&l, &[2, 3, 2], Convention::Standard).unwrap();
        let n = 12;
        let a = q13.sub(&LMatrix::scalar(n, LaurentPoly::chi(1)));
        let b = q13.sub(&LMatrix::scalar(n, LaurentPoly::chi(3)));
        assert!(a.mul(&b).is_zero());
    }
}
