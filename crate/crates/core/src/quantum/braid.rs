//! Braid words and their action by conjugation with braided R-matrices.

use std::fmt;
use std::str::FromStr;

use super::irrep::LMatrix;
use super::rmatrix::{braided_r, swapped};
use crate::error::{Error, Result};

const MAX_BRAID_LEN: usize = 4096;

/// Freely reduced word in the generators s_i^{+-1} (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(Vec<(usize, i8)>);

impl BraidWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
        for (g, e) in letters {
            assert!(g >= 1 && (e == 1 || e == -1), "bad braid letter");
            if out.last() == Some(&(g, -e)) {
                out.pop();
            } else {
                out.push((g, e));
            }
        }
        BraidWord(out)
    }

    pub fn generator(i: usize, e: i8) -> Self {
        Self::new(vec![(i, e)])
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|(g, e)| (*g, -*e)).collect())
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Self::new(v)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(BraidWord::default(), |acc, _| acc.concat(&base))
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|(g, _)| *g).max().unwrap_or(0)
    }

    /// Dimensions an operator must act on so that the image under this word
    /// acts on `dims`.
    pub fn preimage_dims(&self, dims: &[usize]) -> Vec<usize> {
        let mut d = dims.to_vec();
        for (g, _) in &self.0 {
            d = swapped(&d, g - 1);
        }
        d
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(g, e)| if *e == 1 { format!("s{g}") } else { format!("s{g}^-1") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.pos < self.s.len() && self.s[self.pos] == b'-';
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos || self.pos - start > 4 {
            return Err(Error::Parse("expected a small integer in braid word".into()));
        }
        let v: i64 = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
        Ok(if neg { -v } else { v })
    }

    fn word(&mut self) -> Result<BraidWord> {
        let mut acc = BraidWord::default();
        loop {
            self.skip_ws();
            if self.pos >= self.s.len() || self.s[self.pos] == b')' {
                return Ok(acc);
            }
            let item = match self.s[self.pos] {
                b's' => {
                    self.pos += 1;
                    let g = self.int()?;
                    if !(1..=64).contains(&g) {
                        return Err(Error::Parse(format!("generator s{g} out of range")));
                    }
                    BraidWord::generator(g as usize, 1)
                }
                b'(' => {
                    self.depth += 1;
                    if self.depth > 16 {
                        return Err(Error::Parse("braid word nested too deeply".into()));
                    }
                    self.pos += 1;
                    let inner = self.word()?;
                    if self.pos >= self.s.len() || self.s[self.pos] != b')' {
                        return Err(Error::Parse("unbalanced parenthesis".into()));
                    }
                    self.pos += 1;
                    self.depth -= 1;
                    inner
                }
                c => return Err(Error::Parse(format!("unexpected {:?} in braid word", c as char))),
            };
            let item = if self.pos < self.s.len() && self.s[self.pos] == b'^' {
                self.pos += 1;
                let k = self.int()?;
                if item.len() as i64 * k.abs() > MAX_BRAID_LEN as i64 {
                    return Err(Error::Parse("braid word too long".into()));
                }
                item.pow(k as i32)
            } else {
                item
            };
            acc = acc.concat(&item);
            if acc.len() > MAX_BRAID_LEN {
                return Err(Error::Parse("braid word too long".into()));
            }
        }
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts forms like `s1 s2^-1`, `s1s2s1`, `(s1s2)^3` and `e` for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t.is_empty() {
            return Ok(BraidWord::default());
        }
        let mut p = Parser { s: t.as_bytes(), pos: 0, depth: 0 };
        let w = p.word()?;
        if p.pos != p.s.len() {
            return Err(Error::Parse("trailing input in braid word".into()));
        }
        Ok(w)
    }
}

/// Psi_S(X) for X acting on `dims`. Psi_{s_i}(X) = R_i X R_i^-1 and
/// Psi_{g1 ... gl} = Psi_{g1} o ... o Psi_{gl}. Returns the new dimensions
/// and operator.
pub fn braid_act(word: &BraidWord, dims: &[usize], x: &LMatrix) -> Result<(Vec<usize>, LMatrix)> {
    let n = dims.len();
    if word.max_generator() >= n {
        return Err(Error::SlotOutOfRange { slot: word.max_generator(), n });
    }
    let mut d = dims.to_vec();
    let mut x = x.clone();
    for &(g, e) in word.letters().iter().rev() {
        let nd = swapped(&d, g - 1);
        x = if e == 1 {
            let (r, r_inv) = braided_r(&d, g)?;
            r.mul(&x).mul(&r_inv)
        } else {
            let (r, r_inv) = braided_r(&nd, g)?;
            r_inv.mul(&x).mul(&r)
        };
        d = nd;
    }
    Ok((d, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let w: BraidWord = "s2^-1".parse().unwrap();
        assert_eq!(w.letters(), &[(2, -1)]);
        let w: BraidWord = "(s1s2)^3".parse().unwrap();
        assert_eq!(w.len(), 6);
        let w: BraidWord = "s1 s1^-1 s2".parse().unwrap();
        assert_eq!(w.letters(), &[(2, 1)]);
        assert!("s0".parse::<BraidWord>().is_err());
        assert!("(s1".parse::<BraidWord>().is_err());
        assert_eq!("s1^-2".parse::<BraidWord>().unwrap().to_string(), "s1^-1 s1^-1");
    }

    #[test]
    fn inverse_cancels() {
        let w: BraidWord = "s1 s2^-1 s3".parse().unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
    }
}
