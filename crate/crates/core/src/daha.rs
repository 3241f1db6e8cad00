//! The universal DAHA of type (C1v, C1): t3 is eliminated through
//! t0 t1 t2 t3 = q^-1, inverses through t_i^-1 = Z_i - t_i, and the
//! centrality of Z3 = t3 + t3^-1 is turned into rewrite rules by a bounded
//! completion. Relations of saw(3) are checked under the map Theta.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::nc::aw::{self, C1, C12, C123, C13, C2, C23, C3};
use crate::nc::{Alphabet, NcMonomial, NcPoly, RewriteSystem, Rule, Step, Strategy};
use crate::report::{Outcome, Status, VerificationReport};

pub type DahaElement = NcPoly;

pub const T0: u8 = 0;
pub const T1: u8 = 1;
pub const T2: u8 = 2;
pub const Z0: usize = 0;
pub const Z1: usize = 1;
pub const Z2: usize = 2;
pub const Z3: usize = 3;

pub const DEFAULT_COMPLETION_ROUNDS: usize = 6;
pub const DEFAULT_MAX_RULES: usize = 64;

pub fn alphabet() -> Alphabet {
    Alphabet::new(&["t0", "t1", "t2"], &["Z0", "Z1", "Z2", "Z3"])
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

/// t_i for i in 0..=3.
pub fn t(i: usize) -> DahaElement {
    match i {
        0..=2 => NcPoly::gen(i as u8),
        3 => inverse(2).mul(&inverse(1)).mul(&inverse(0)).scale(&q(-1)),
        _ => panic!("DAHA generator index {i} out of range"),
    }
}

/// t_i^-1 for i in 0..=3.
pub fn inverse(i: usize) -> DahaElement {
    match i {
        0..=2 => NcPoly::central(i).sub(&NcPoly::gen(i as u8)),
        3 => t(0).mul(&t(1)).mul(&t(2)).scale(&q(1)),
        _ => panic!("DAHA generator index {i} out of range"),
    }
}

/// t_i + t_i^-1 for i in 0..=2, and the central symbol Z3.
pub fn z(i: usize) -> DahaElement {
    NcPoly::central(i)
}

/// Theta on the generators of saw(3), as the image of the generator index
/// (C12, C23, C13) or central index (C1, C2, C3, C123).
pub fn theta_gen(g: u8) -> DahaElement {
    let pair = |i: usize| t(i).mul(&t(0)).add(&inverse(0).mul(&inverse(i)));
    match g {
        C12 => pair(1),
        C23 => pair(3),
        C13 => pair(2),
        _ => panic!("saw(3) generator {g} out of range"),
    }
}

/// Which table of central images to use. `Default` sends C1 to t1 + t1^-1
/// and C3 to t3 + t3^-1; `Exchanged` swaps these two images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ThetaTable {
    #[default]
    Default,
    Exchanged,
}

impl ThetaTable {
    pub fn as_str(self) -> &'static str {
        match self {
            ThetaTable::Default => "default",
            ThetaTable::Exchanged => "exchanged",
        }
    }
}

impl std::str::FromStr for ThetaTable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(ThetaTable::Default),
            "exchanged" => Ok(ThetaTable::Exchanged),
            _ => Err(Error::Parse(format!("unknown Theta table {s:?}"))),
        }
    }
}

pub fn theta_central(j: usize) -> DahaElement {
    theta_central_in(ThetaTable::Default, j)
}

pub fn theta_central_in(table: ThetaTable, j: usize) -> DahaElement {
    let (c1, c3) = match table {
        ThetaTable::Default => (1, 3),
        ThetaTable::Exchanged => (3, 1),
    };
    match j {
        C1 => t(c1).add(&inverse(c1)),
        C2 => t(2).add(&inverse(2)),
        C3 => t(c3).add(&inverse(c3)),
        C123 => t(0).scale(&q(-1)).add(&inverse(0).scale(&q(1))),
        _ => panic!("saw(3) central {j} out of range"),
    }
}

/// Theta on an arbitrary element of saw(3).
pub fn theta(x: &NcPoly) -> DahaElement {
    theta_in(ThetaTable::Default, x)
}

pub fn theta_in(table: ThetaTable, x: &NcPoly) -> DahaElement {
    let gens: Vec<Option<NcPoly>> = [C12, C23, C13].iter().map(|&g| Some(theta_gen(g))).collect();
    let cents: Vec<Option<NcPoly>> = (0..4).map(|j| Some(theta_central_in(table, j))).collect();
    let mut out = NcPoly::zero();
    for (m, c) in x.terms() {
        let mut acc = NcPoly::scalar(c.clone());
        for (j, &e) in m.central().iter().enumerate() {
            for _ in 0..e {
                acc = acc.mul(cents[j].as_ref().unwrap());
            }
        }
        for &w in m.word() {
            acc = acc.mul(gens[w as usize].as_ref().unwrap());
        }
        out = out.add(&acc);
    }
    out
}

/// Deg-lex comparison on words only.
fn word_key(w: &[u8]) -> (usize, Vec<u8>) {
    (w.len(), w.to_vec())
}

/// Leading word and its coefficient when it can be oriented into a rule:
/// the top word must carry a unit coefficient with no central factor.
fn orient(p: &NcPoly) -> std::result::Result<(Vec<u8>, LaurentPoly), String> {
    let top = p.terms().map(|(m, _)| word_key(m.word())).max().ok_or("zero")?;
    let lead: Vec<_> = p.terms().filter(|(m, _)| word_key(m.word()) == top).collect();
    match lead.as_slice() {
        [(m, c)] if m.central().is_empty() && c.inverse_unit().is_some() => Ok((top.1, (*c).clone())),
        _ => Err(format!(
            "top word {:?} has coefficient {}",
            top.1,
            lead.iter().map(|(m, c)| format!("{c}*{:?}", m.central())).collect::<Vec<_>>().join(" + ")
        )),
    }
}

/// The rule lhs -> rhs with p = c (lhs - rhs), and c.
fn rule_from(p: &NcPoly, anchor: &'static str) -> std::result::Result<(Rule, LaurentPoly), String> {
    let (lhs, c) = orient(p)?;
    let inv = c.inverse_unit().expect("unit");
    let m = NcMonomial::new(lhs.clone(), Vec::new());
    let rest = p.sub(&NcPoly::term(m, c.clone()));
    Ok((Rule { lhs, rhs: rest.scale(&-inv), anchor, deferred: false }, c))
}

/// The axioms as polynomials that vanish: t_i^2 - Z_i t_i + 1 for
/// i = 0, 1, 2 and t3 + t3^-1 - Z3.
pub fn axioms() -> Vec<(&'static str, NcPoly)> {
    let mut out: Vec<(&'static str, NcPoly)> = (0..3)
        .map(|i| {
            let name = ["daha.quadratic.t0", "daha.quadratic.t1", "daha.quadratic.t2"][i];
            (name, t(i).mul(&t(i)).sub(&z(i).mul(&t(i))).add(&NcPoly::one()))
        })
        .collect();
    out.push(("daha.central.Z3", t(3).add(&inverse(3)).sub(&z(Z3))));
    out
}

/// Why a rule holds: either a unit multiple of an axiom, or a combination
/// coeff * prefix * P_r * suffix of earlier rules, where P_r = lhs - rhs.
#[derive(Clone, Debug)]
pub enum Certificate {
    Axiom { index: usize, scale: LaurentPoly },
    Combination(Vec<Step>),
}

/// Outcome of the bounded completion.
#[derive(Clone, Debug)]
pub struct Completion {
    pub system: RewriteSystem,
    pub certificates: Vec<Certificate>,
    /// All critical pairs up to the bound resolved.
    pub complete: bool,
    pub stuck: Vec<String>,
    pub rounds: usize,
}

/// Suffix-prefix overlaps and inclusions of b in a, as (word, position of
/// a, position of b).
fn overlaps(a: &[u8], b: &[u8]) -> Vec<(Vec<u8>, usize, usize)> {
    let mut out = Vec::new();
    for k in 1..a.len().min(b.len()) {
        if a[a.len() - k..] == b[..k] {
            let mut w = a.to_vec();
            w.extend_from_slice(&b[k..]);
            out.push((w, 0, a.len() - k));
        }
    }
    if b.len() <= a.len() && a != b {
        for p in 0..=a.len() - b.len() {
            if a[p..p + b.len()] == b[..] {
                out.push((a.to_vec(), 0, p));
            }
        }
    }
    out
}

fn apply_at(rule: &Rule, word: &[u8], pos: usize) -> NcPoly {
    let pre = NcPoly::word(&word[..pos]);
    let post = NcPoly::word(&word[pos + rule.lhs.len()..]);
    pre.mul(&rule.rhs).mul(&post)
}

fn rule_poly(r: &Rule) -> NcPoly {
    NcPoly::word(&r.lhs).sub(&r.rhs)
}

fn step_at(word: &[u8], pos: usize, len: usize, rule: usize, coeff: LaurentPoly) -> Step {
    Step { coeff, prefix: NcMonomial::new(word[..pos].to_vec(), Vec::new()), rule, suffix: word[pos + len..].to_vec() }
}

fn expand(steps: &[Step], rules: &[Rule]) -> NcPoly {
    let mut out = NcPoly::zero();
    for s in steps {
        let p = NcPoly::term(s.prefix.clone(), s.coeff.clone())
            .mul(&rule_poly(&rules[s.rule]))
            .mul(&NcPoly::word(&s.suffix));
        out = out.add(&p);
    }
    out
}

/// Knuth-Bendix completion with a bound on rounds and rule count.
pub fn complete(rounds: usize, max_rules: usize, budget: u64) -> Completion {
    complete_from(axioms(), rounds, max_rules, budget)
}

pub fn complete_from(axioms: Vec<(&'static str, NcPoly)>, rounds: usize, max_rules: usize, budget: u64) -> Completion {
    let mut rules: Vec<Rule> = Vec::new();
    let mut certs = Vec::new();
    let mut stuck = Vec::new();
    for (index, (name, ax)) in axioms.into_iter().enumerate() {
        match rule_from(&ax, name) {
            Ok((r, c)) => {
                rules.push(r);
                certs.push(Certificate::Axiom { index, scale: c });
            }
            Err(e) => stuck.push(format!("{name}: {e}")),
        }
    }
    let mut seen: BTreeSet<(usize, usize, Vec<u8>, usize)> = BTreeSet::new();
    let mut round = 0;
    let finish = |rules: Vec<Rule>, certs, complete, stuck, rounds| Completion {
        system: RewriteSystem::new(alphabet(), rules).with_budget(budget),
        certificates: certs,
        complete,
        stuck,
        rounds,
    };
    loop {
        if round >= rounds || rules.len() >= max_rules {
            return finish(rules, certs, false, stuck, round);
        }
        round += 1;
        let n = rules.len();
        let mut all_resolved = true;
        for i in 0..n {
            for j in 0..n {
                for (w, p1, p2) in overlaps(&rules[i].lhs, &rules[j].lhs) {
                    if !seen.insert((i, j, w.clone(), p2)) {
                        continue;
                    }
                    // a - b = -u P_i v + u' P_j v'
                    let a = apply_at(&rules[i], &w, p1);
                    let b = apply_at(&rules[j], &w, p2);
                    let cur = RewriteSystem::new(alphabet(), rules.clone()).with_budget(budget);
                    let (d, trace) = match cur.normalize_traced(&a.sub(&b), Strategy::Leftmost) {
                        Ok(x) => x,
                        Err(_) => {
                            all_resolved = false;
                            stuck.push(format!("budget exceeded on overlap {w:?}"));
                            continue;
                        }
                    };
                    if d.is_zero() {
                        continue;
                    }
                    all_resolved = false;
                    match rule_from(&d, "daha.completion") {
                        Ok((r, c)) => {
                            // d = c P_new, d = (a - b) - sum(trace)
                            let inv = c.inverse_unit().expect("unit");
                            let mut steps = vec![
                                step_at(&w, p1, rules[i].lhs.len(), i, -inv.clone()),
                                step_at(&w, p2, rules[j].lhs.len(), j, inv.clone()),
                            ];
                            steps.extend(trace.into_iter().map(|s| Step { coeff: -(&s.coeff * &inv), ..s }));
                            rules.push(r);
                            certs.push(Certificate::Combination(steps));
                        }
                        Err(e) => stuck.push(format!("overlap {w:?}: {e}")),
                    }
                    if rules.len() >= max_rules {
                        return finish(rules, certs, false, stuck, round);
                    }
                }
            }
        }
        if rules.len() == n {
            let closed = all_resolved && stuck.is_empty();
            return finish(rules, certs, closed, stuck, round);
        }
    }
}

/// Re-derives every rule from the axioms: axiom rules must be unit
/// multiples of an axiom, and every other rule must equal its certificate
/// expanded in the free algebra, built only from earlier rules.
pub fn audit_rules(c: &Completion) -> Vec<(usize, std::result::Result<(), String>)> {
    let ax = axioms();
    let rules = &c.system.rules;
    rules
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let p = rule_poly(r);
            let res = match &c.certificates[k] {
                Certificate::Axiom { index, scale } => {
                    if p.scale(scale) == ax[*index].1 {
                        Ok(())
                    } else {
                        Err(format!("rule {k} is not a multiple of axiom {}", ax[*index].0))
                    }
                }
                Certificate::Combination(steps) => {
                    if let Some(s) = steps.iter().find(|s| s.rule >= k) {
                        Err(format!("rule {k} cites later rule {}", s.rule))
                    } else if expand(steps, rules) != p {
                        Err(format!("rule {k} differs from its certificate"))
                    } else {
                        Ok(())
                    }
                }
            };
            (k, res)
        })
        .collect()
}

/// Verdict of a bounded comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::Unequal => "UNEQUAL",
            Verdict::Undecided => "UNDECIDED",
        }
    }
}

/// One-dimensional representation t_i -> k_i (i = 0, 1, 2), with
/// t3 -> 1/(q k0 k1 k2) forced by t0 t1 t2 t3 = q^-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub qh: BigRational,
    pub k: [BigRational; 3],
}

impl Character {
    pub fn new(qh: i64, k: [i64; 3]) -> Self {
        let r = |n: i64| BigRational::from_integer(n.into());
        Character { qh: r(qh), k: k.map(r) }
    }

    pub fn k3(&self) -> BigRational {
        let q = &self.qh * &self.qh;
        (q * &self.k[0] * &self.k[1] * &self.k[2]).recip()
    }

    fn z(&self, j: usize) -> BigRational {
        let k = if j == 3 { self.k3() } else { self.k[j].clone() };
        k.recip() + k
    }

    pub fn eval(&self, x: &NcPoly) -> Result<BigRational> {
        let mut out = BigRational::zero();
        for (m, c) in x.terms() {
            let mut v = c.eval_qh(&self.qh)?;
            for (j, &e) in m.central().iter().enumerate() {
                v *= self.z(j).pow(e as i32);
            }
            for &w in m.word() {
                v *= &self.k[w as usize];
            }
            out += v;
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        format!("qh={} k=({}, {}, {})", self.qh, self.k[0], self.k[1], self.k[2])
    }
}

/// Sample characters used to certify inequality.
pub fn sample_characters() -> Vec<Character> {
    vec![Character::new(2, [3, 5, 7]), Character::new(3, [2, 7, 11]), Character::new(5, [13, 3, 2])]
}

/// Normal form of x - y; zero means equal. A nonzero value of x - y under a
/// character of the algebra proves inequality; otherwise a nonzero normal
/// form proves it only when the completion closed.
pub fn compare(c: &Completion, x: &NcPoly, y: &NcPoly) -> (Verdict, Option<NcPoly>, Option<String>) {
    let diff = x.sub(y);
    let separating = || {
        sample_characters().into_iter().find_map(|ch| match ch.eval(&diff) {
            Ok(v) if !v.is_zero() => Some(format!("{} gives {}", ch.describe(), v)),
            _ => None,
        })
    };
    match c.system.normalize(&diff) {
        Ok(d) if d.is_zero() => (Verdict::Equal, None, None),
        Ok(d) if c.complete => (Verdict::Unequal, Some(d), None),
        Ok(d) => match separating() {
            Some(w) => (Verdict::Unequal, Some(d), Some(w)),
            None => (Verdict::Undecided, Some(d), None),
        },
        Err(_) => match separating() {
            Some(w) => (Verdict::Unequal, None, Some(w)),
            None => (Verdict::Undecided, None, None),
        },
    }
}

pub fn daha_normalize(c: &Completion, x: &NcPoly) -> Result<NcPoly> {
    c.system.normalize(x).map_err(|e| match e {
        Error::StepBudgetExceeded(b) => Error::BudgetExceeded(b),
        other => other,
    })
}

fn verdict_report(
    id: &str,
    anchor: &str,
    params: &[(&str, String)],
    c: &Completion,
    x: &NcPoly,
    y: &NcPoly,
) -> VerificationReport {
    VerificationReport::run(id, anchor, params, || {
        let (v, residual, character) = compare(c, x, y);
        let a = alphabet();
        let details = json!({
            "verdict": v.as_str(),
            "completion_closed": c.complete,
            "rules": c.system.rules.len(),
            "character": character,
        });
        let witness = || {
            let r = residual
                .as_ref()
                .map(|d| format!("residual {}", d.display(&a)))
                .unwrap_or_else(|| "step budget exceeded".into());
            match &character {
                Some(w) => format!("{r}; character {w}"),
                None => r,
            }
        };
        Ok(match v {
            Verdict::Equal => Outcome::pass(),
            Verdict::Unequal => Outcome::fail(witness()),
            Verdict::Undecided => Outcome::undecided(witness()),
        }
        .with_details(details))
    })
}

/// Step budgets: degree-2 checks (centrality and the three aw(3)
/// relations) and the cubic Casimir relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub degree2: u64,
    pub omega: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { degree2: 10_000, omega: 1_000_000 }
    }
}

impl Budgets {
    /// A single budget for the cubic relation, with the degree-2 budget
    /// capped at its default.
    pub fn with_omega(omega: u64) -> Self {
        Budgets { degree2: omega.min(Budgets::default().degree2), omega }
    }
}

fn with_budget(c: &Completion, budget: u64) -> Completion {
    Completion { system: c.system.clone().with_budget(budget), ..c.clone() }
}

/// Theta images of the saw(3) relations and of the centrality of the
/// central generators; one report per check.
pub fn verify_theta_relations(budgets: Budgets, table: ThetaTable) -> Vec<VerificationReport> {
    let c = complete(DEFAULT_COMPLETION_ROUNDS, DEFAULT_MAX_RULES, budgets.omega);
    let c2 = with_budget(&c, budgets.degree2);
    let cw = with_budget(&c, budgets.omega);
    let params = [("budget", budgets.omega.to_string()), ("table", table.as_str().to_string())];
    let mut out = Vec::new();
    let names = ["C1", "C2", "C3", "C123"];
    for (j, name) in names.iter().enumerate() {
        for (gname, g) in [("C12", C12), ("C23", C23), ("C13", C13)] {
            let a = theta_central_in(table, j);
            let b = theta_gen(g);
            out.push(verdict_report(
                &format!("daha.theta.central.{}-{}", name.to_lowercase(), gname.to_lowercase()),
                "Theta preserves centrality",
                &params,
                &c2,
                &a.mul(&b),
                &b.mul(&a),
            ));
        }
    }
    for (name, rel) in aw::relations() {
        out.push(verdict_report(
            &format!("daha.theta.{}", name),
            "Theta is a homomorphism",
            &params,
            &c2,
            &theta_in(table, &rel),
            &NcPoly::zero(),
        ));
    }
    out.push(verdict_report(
        "daha.theta.saw3.casimir",
        "Theta is a homomorphism",
        &params,
        &cw,
        &theta_in(table, &aw::special_relation()),
        &NcPoly::zero(),
    ));
    out
}

/// The completion status as a report.
pub fn verify_completion(budget: u64) -> VerificationReport {
    verify_completion_of(&complete(DEFAULT_COMPLETION_ROUNDS, DEFAULT_MAX_RULES, budget))
}

pub fn verify_completion_of(c: &Completion) -> VerificationReport {
    VerificationReport::run("daha.completion", "universal DAHA presentation", &[], || {
        let details = json!({ "rules": c.system.dump(), "rounds": c.rounds, "stuck": c.stuck });
        Ok(if c.complete {
            Outcome::pass().with_details(details)
        } else {
            Outcome::undecided("completion did not close within the bound").with_details(details)
        })
    })
}

/// Words in t0, t1, t2 of length 1..=max_len normalized with the leftmost
/// and the rightmost strategy.
#[derive(Clone, Debug)]
pub struct ConfluenceSample {
    pub words: usize,
    pub disagreements: Vec<Vec<u8>>,
    pub budget_exceeded: Vec<Vec<u8>>,
}

pub fn confluence_sample(c: &Completion, max_len: usize) -> ConfluenceSample {
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut sample = ConfluenceSample { words: 0, disagreements: Vec::new(), budget_exceeded: Vec::new() };
    for _ in 0..max_len {
        words = words.iter().flat_map(|w| (0..3u8).map(move |g| [w.as_slice(), &[g]].concat())).collect();
        for w in &words {
            sample.words += 1;
            let x = NcPoly::word(w);
            let l = c.system.normalize_with(&x, Strategy::Leftmost);
            let r = c.system.normalize_with(&x, Strategy::Rightmost);
            match (l, r) {
                (Ok((a, _)), Ok((b, _))) if a == b => {}
                (Ok(_), Ok(_)) => sample.disagreements.push(w.clone()),
                _ => sample.budget_exceeded.push(w.clone()),
            }
        }
    }
    sample
}

/// Confluence sampling as a report; disagreements are UNDECIDED, since the
/// completion is bounded.
pub fn verify_confluence(c: &Completion, max_len: usize) -> VerificationReport {
    let params = [("max_len", max_len.to_string())];
    VerificationReport::run("daha.confluence-sample", "universal DAHA presentation", &params, || {
        let s = confluence_sample(c, max_len);
        let a = alphabet();
        let show = |w: &Vec<u8>| w.iter().map(|g| a.gens[*g as usize].as_str()).collect::<Vec<_>>().join("*");
        let details = json!({
            "words": s.words,
            "disagreements": s.disagreements.iter().map(show).collect::<Vec<_>>(),
            "budget_exceeded": s.budget_exceeded.iter().map(show).collect::<Vec<_>>(),
        });
        Ok(if s.disagreements.is_empty() && s.budget_exceeded.is_empty() {
            Outcome::pass().with_details(details)
        } else {
            Outcome::undecided(format!(
                "{} of {} words reduce differently under the two strategies",
                s.disagreements.len() + s.budget_exceeded.len(),
                s.words
            ))
            .with_details(details)
        })
    })
}

pub fn is_undecided(r: &VerificationReport) -> bool {
    r.status == Status::Undecided
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp() -> Completion {
        complete(DEFAULT_COMPLETION_ROUNDS, DEFAULT_MAX_RULES, 1_000_000)
    }

    fn nf(c: &Completion, x: &NcPoly) -> NcPoly {
        daha_normalize(c, x).unwrap()
    }

    #[test]
    fn quadratic_and_product_relations() {
        let c = comp();
        let t0sq = t(0).mul(&t(0));
        assert_eq!(nf(&c, &t0sq), z(Z0).mul(&t(0)).sub(&NcPoly::one()));
        let prod = t(0).mul(&t(1)).mul(&t(2)).mul(&t(3));
        assert_eq!(nf(&c, &prod), NcPoly::scalar(q(-1)));
        for i in 0..3 {
            assert_eq!(nf(&c, &t(i).mul(&inverse(i))), NcPoly::one());
        }
        assert_eq!(nf(&c, &t(3).add(&inverse(3))), z(Z3));
    }

    #[test]
    fn centrality_examples() {
        let c = comp();
        assert!(nf(&c, &t(0).mul(&z(Z1)).sub(&z(Z1).mul(&t(0)))).is_zero());
        let x = theta_gen(C12);
        assert!(nf(&c, &t(0).mul(&x).sub(&x.mul(&t(0)))).is_zero());
    }

    #[test]
    fn theta_table_images() {
        let c = comp();
        assert_eq!(nf(&c, &theta_central(C1)), z(Z1));
        assert_eq!(nf(&c, &theta_central(C3)), z(Z3));
        assert_eq!(nf(&c, &theta_central_in(ThetaTable::Exchanged, C1)), z(Z3));
        let c123 = t(0).scale(&q(-1)).add(&z(Z0).sub(&t(0)).scale(&q(1)));
        assert_eq!(nf(&c, &theta_central(C123)), nf(&c, &c123));
        let c12 = t(1).mul(&t(0)).add(&inverse(0).mul(&inverse(1)));
        assert_eq!(theta_gen(C12), c12);
    }

    #[test]
    fn rules_are_certified_by_the_axioms() {
        let c = comp();
        assert!(c.system.rules.len() > 4);
        for (k, r) in audit_rules(&c) {
            assert!(r.is_ok(), "rule {k}: {r:?}");
        }
    }

    #[test]
    fn audit_rejects_a_forged_rule() {
        let mut c = comp();
        let k = c.system.rules.len() - 1;
        c.system.rules[k].rhs = c.system.rules[k].rhs.add(&NcPoly::one());
        assert!(audit_rules(&c)[k].1.is_err());
    }

    #[test]
    fn characters_respect_the_axioms_and_rules() {
        let c = comp();
        for ch in sample_characters() {
            for (_, ax) in axioms() {
                assert!(ch.eval(&ax).unwrap().is_zero());
            }
            for r in &c.system.rules {
                assert!(ch.eval(&rule_poly(r)).unwrap().is_zero());
            }
            assert_eq!(ch.eval(&t(3)).unwrap(), ch.k3());
        }
    }

    #[test]
    fn default_table_fails_two_aw3_relations() {
        let reports = verify_theta_relations(Budgets::default(), ThetaTable::Default);
        let status = |id: &str| reports.iter().find(|r| r.check_id == id).unwrap().status;
        for r in reports.iter().filter(|r| r.check_id.starts_with("daha.theta.central.")) {
            assert_eq!(r.status, Status::Pass, "{}", r.check_id);
        }
        assert_eq!(status("daha.theta.aw3.C13"), Status::Pass);
        for id in ["daha.theta.aw3.C12", "daha.theta.aw3.C23", "daha.theta.saw3.casimir"] {
            let r = reports.iter().find(|r| r.check_id == id).unwrap();
            assert_eq!(r.status, Status::Fail, "{id}");
            assert!(r.witness.as_deref().unwrap().contains("character"));
        }
    }

    #[test]
    fn exchanged_table_is_consistent() {
        for r in verify_theta_relations(Budgets::default(), ThetaTable::Exchanged) {
            assert_ne!(r.status, Status::Fail, "{} {:?}", r.check_id, r.witness);
            if r.check_id != "daha.theta.saw3.casimir" {
                assert_eq!(r.status, Status::Pass, "{}", r.check_id);
            }
        }
    }

    #[test]
    fn confluence_sampling() {
        let c = comp();
        let s = confluence_sample(&c, 5);
        assert_eq!(s.words, 3 + 9 + 27 + 81 + 243);
        let r = verify_confluence(&c, 5);
        assert_ne!(r.status, Status::Fail);
        assert_eq!(r.status == Status::Pass, s.disagreements.is_empty());
    }
}
