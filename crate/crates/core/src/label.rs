//! Loop labels such as `Q13d`, `A123` or `Q24u`: a set of punctures plus a
//! decoration saying on which side a non-contiguous loop passes.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Plain,
    Up,
    Down,
}

impl Decoration {
    pub fn flipped(self) -> Self {
        match self {
            Decoration::Up => Decoration::Down,
            Decoration::Down => Decoration::Up,
            Decoration::Plain => Decoration::Plain,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Decoration::Plain => "",
            Decoration::Up => "u",
            Decoration::Down => "d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopLabel {
    /// Puncture indices, 1-based and strictly increasing.
    pub set: Vec<usize>,
    pub deco: Decoration,
}

impl LoopLabel {
    pub fn new(set: Vec<usize>, deco: Decoration) -> Result<Self> {
        if set.is_empty() || set.windows(2).any(|w| w[0] >= w[1]) || set[0] == 0 {
            return Err(Error::Parse(format!("bad puncture set {set:?}")));
        }
        let consecutive = set.windows(2).all(|w| w[1] == w[0] + 1);
        match (consecutive, deco) {
            (true, Decoration::Plain) | (false, Decoration::Up | Decoration::Down) => Ok(LoopLabel { set, deco }),
            (true, _) => Err(Error::UnknownDecoration(format!("contiguous set {set:?} takes no decoration"))),
            (false, Decoration::Plain) => {
                Err(Error::UnknownDecoration(format!("set {set:?} needs a u or d decoration")))
            }
        }
    }

    pub fn plain(set: &[usize]) -> Self {
        Self::new(set.to_vec(), Decoration::Plain).expect("contiguous set")
    }

    pub fn decorated(set: &[usize], deco: Decoration) -> Self {
        Self::new(set.to_vec(), deco).expect("valid decorated set")
    }

    pub fn is_consecutive(&self) -> bool {
        self.deco == Decoration::Plain
    }

    /// Single punctures and the loop around all n punctures are central.
    pub fn is_central(&self, n: usize) -> bool {
        self.set.len() == 1 || (self.set.len() == n && self.set[0] == 1)
    }

    pub fn max_puncture(&self) -> usize {
        *self.set.last().unwrap()
    }

    /// Parse `<prefix><digits>[u|d]`, e.g. `Q13d` with prefix `Q`.
    pub fn parse_with_prefix(s: &str, prefix: char) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        if chars.next() != Some(prefix) {
            return Err(Error::Parse(format!("label {s:?} must start with {prefix}")));
        }
        let rest: &str = chars.as_str();
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let tail = &rest[digits.len()..];
        if digits.is_empty() {
            return Err(Error::Parse(format!("label {s:?} has no punctures")));
        }
        let deco = match tail {
            "" => Decoration::Plain,
            "u" => Decoration::Up,
            "d" => Decoration::Down,
            other => return Err(Error::UnknownDecoration(other.to_string())),
        };
        let set: Vec<usize> = digits.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        Self::new(set, deco)
    }

    pub fn display(&self, prefix: char) -> String {
        let digits: String = self.set.iter().map(|i| i.to_string()).collect();
        format!("{prefix}{digits}{}", self.deco.suffix())
    }
}

impl fmt::Display for LoopLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display('Q'))
    }
}

/// Parse a comma-separated list of positive dimensions.
pub fn parse_dims(s: &str) -> Result<Vec<usize>> {
    let out: Vec<usize> = s
        .split(',')
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad dimension {t:?}")))?;
            if v == 0 || v > 64 {
                return Err(Error::Parse(format!("dimension {v} out of range 1..=64")));
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    if out.is_empty() || out.len() > 8 {
        return Err(Error::Parse(format!("expected 1 to 8 dimensions, got {}", out.len())));
    }
    Ok(out)
}

/// Parse a product of labels such as `Q13d*Q24d`.
pub fn parse_product(s: &str, prefix: char) -> Result<Vec<LoopLabel>> {
    let parts: Vec<&str> = s.split('*').collect();
    if parts.len() > 16 {
        return Err(Error::Parse("product too long".into()));
    }
    parts.iter().map(|p| LoopLabel::parse_with_prefix(p, prefix)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decorated_and_plain() {
        let l = LoopLabel::parse_with_prefix("Q13d", 'Q').unwrap();
        assert_eq!(l.set, vec![1, 3]);
        assert_eq!(l.deco, Decoration::Down);
        assert_eq!(l.display('A'), "A13d");
        assert!(LoopLabel::parse_with_prefix("A123", 'A').unwrap().is_consecutive());
    }

    #[test]
    fn rejects_bad_decorations() {
        assert!(matches!(LoopLabel::parse_with_prefix("Q13x", 'Q'), Err(Error::UnknownDecoration(_))));
        assert!(matches!(LoopLabel::parse_with_prefix("Q13", 'Q'), Err(Error::UnknownDecoration(_))));
        assert!(matches!(LoopLabel::parse_with_prefix("Q12u", 'Q'), Err(Error::UnknownDecoration(_))));
        assert!(LoopLabel::parse_with_prefix("Q31", 'Q').is_err());
    }

    #[test]
    fn dims_and_products() {
        assert_eq!(parse_dims("2, 3,4").unwrap(), vec![2, 3, 4]);
        assert!(parse_dims("2,0").is_err());
        assert_eq!(parse_product("Q13d*Q24d", 'Q').unwrap().len(), 2);
    }
}
