use std::collections::BTreeMap;

use super::poly::{Alphabet, NcMonomial, NcPoly};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

pub const DEFAULT_STEP_BUDGET: u64 = 100_000;

/// Step budget, overridable through `AWW_STEP_BUDGET`.
pub fn default_step_budget() -> u64 {
    std::env::var("AWW_STEP_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_STEP_BUDGET)
}

/// `lhs -> rhs` on words. Deferred rules fire only on words that no
/// ordinary rule can rewrite.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Vec<u8>,
    pub rhs: NcPoly,
    pub anchor: &'static str,
    pub deferred: bool,
}

/// One rewrite: coeff * prefix * lhs * suffix replaced by the rhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub coeff: LaurentPoly,
    pub prefix: NcMonomial,
    pub rule: usize,
    pub suffix: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub alphabet: Alphabet,
    pub rules: Vec<Rule>,
    pub budget: u64,
    /// Values substituted for the central generators of every input.
    pub central_values: Option<Vec<Option<NcPoly>>>,
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Self {
        RewriteSystem { alphabet, rules, budget: default_step_budget(), central_values: None }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn find_redex(&self, word: &[u8], strategy: Strategy) -> Option<(usize, usize)> {
        for deferred in [false, true] {
            let mut best: Option<(usize, usize)> = None;
            for (k, r) in self.rules.iter().enumerate().filter(|(_, r)| r.deferred == deferred) {
                let n = r.lhs.len();
                if n > word.len() {
                    continue;
                }
                let hit = match strategy {
                    Strategy::Leftmost => (0..=word.len() - n).find(|&p| word[p..p + n] == r.lhs[..]),
                    Strategy::Rightmost => (0..=word.len() - n).rev().find(|&p| word[p..p + n] == r.lhs[..]),
                };
                if let Some(p) = hit {
                    let better = match (best, strategy) {
                        (None, _) => true,
                        (Some((b, _)), Strategy::Leftmost) => p < b,
                        (Some((b, _)), Strategy::Rightmost) => p > b,
                    };
                    if better {
                        best = Some((p, k));
                    }
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }

    pub fn is_normal(&self, word: &[u8]) -> bool {
        self.find_redex(word, Strategy::Leftmost).is_none()
    }

    pub fn normalize(&self, x: &NcPoly) -> Result<NcPoly> {
        self.normalize_with(x, Strategy::Leftmost).map(|(p, _)| p)
    }

    /// Normal form and number of rule applications.
    pub fn normalize_with(&self, x: &NcPoly, strategy: Strategy) -> Result<(NcPoly, u64)> {
        self.reduce(x, strategy, None)
    }

    /// Normal form together with the steps taken: x - N(x) is the sum of
    /// coeff * prefix * (lhs - rhs) * suffix over the steps.
    pub fn normalize_traced(&self, x: &NcPoly, strategy: Strategy) -> Result<(NcPoly, Vec<Step>)> {
        let mut trace = Vec::new();
        let (p, _) = self.reduce(x, strategy, Some(&mut trace))?;
        Ok((p, trace))
    }

    fn reduce(&self, x: &NcPoly, strategy: Strategy, mut trace: Option<&mut Vec<Step>>) -> Result<(NcPoly, u64)> {
        let x = match &self.central_values {
            Some(v) => x.substitute_centrals(v),
            None => x.clone(),
        };
        let mut pending: BTreeMap<NcMonomial, LaurentPoly> = x.into_terms();
        let mut done = NcPoly::zero();
        let mut steps = 0u64;
        while let Some((mono, c)) = pending.pop_last() {
            let Some((pos, k)) = self.find_redex(mono.word(), strategy) else {
                done.add_term(mono, c);
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(Error::StepBudgetExceeded(self.budget));
            }
            let rule = &self.rules[k];
            let w = mono.word();
            let prefix = NcMonomial::new(w[..pos].to_vec(), mono.central().to_vec());
            let suffix = NcMonomial::new(w[pos + rule.lhs.len()..].to_vec(), Vec::new());
            if let Some(t) = trace.as_deref_mut() {
                t.push(Step { coeff: c.clone(), prefix: prefix.clone(), rule: k, suffix: suffix.word().to_vec() });
            }
            for (rm, rc) in rule.rhs.terms() {
                let m = prefix.mul(rm).mul(&suffix);
                let v = &c * rc;
                match pending.get_mut(&m) {
                    Some(old) => {
                        *old += v;
                        if old.is_zero() {
                            pending.remove(&m);
                        }
                    }
                    None => {
                        if !v.is_zero() {
                            pending.insert(m, v);
                        }
                    }
                }
            }
        }
        Ok((done, steps))
    }

    /// Replace central generators in every right-hand side and in every input.
    pub fn specialize_centrals(&self, values: &[Option<NcPoly>]) -> Self {
        let rules = self.rules.iter().map(|r| Rule { rhs: r.rhs.substitute_centrals(values), ..r.clone() }).collect();
        RewriteSystem {
            alphabet: self.alphabet.clone(),
            rules,
            budget: self.budget,
            central_values: Some(values.to_vec()),
        }
    }

    /// Whether each rule strictly lowers (degree, inversions).
    pub fn measure_report(&self) -> Vec<(&'static str, bool)> {
        self.rules
            .iter()
            .map(|r| {
                let lhs = measure(&r.lhs, 0);
                let ok = r.rhs.terms().all(|(m, _)| measure(m.word(), m.central().len()) < lhs);
                (r.anchor, ok)
            })
            .collect()
    }

    /// Human-readable rule listing.
    pub fn dump(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| {
                let lhs: Vec<&str> = r.lhs.iter().map(|g| self.alphabet.gens[*g as usize].as_str()).collect();
                format!("[{}] {} -> {}", r.anchor, lhs.join("*"), r.rhs.display(&self.alphabet))
            })
            .collect()
    }
}

fn measure(word: &[u8], _centrals: usize) -> (usize, usize) {
    let mut inv = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inv += 1;
            }
        }
    }
    (word.len(), inv)
}
