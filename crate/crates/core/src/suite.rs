//! Named verification suites as lists of independent jobs, plus the aw(3)
//! checks that have no other home.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::json;

use crate::daha::{self, Budgets, ThetaTable};
use crate::error::{Error, Result};
use crate::label::LoopLabel;
use crate::nc::aw::{self, Algebra, C12, C13, C23};
use crate::nc::potential::{k_relations, potential, potential_parameter_map, proportional, DERIVATIVE_MATCH};
use crate::nc::{NcPoly, Strategy};
use crate::quantum::fourpoint::{verify_commuting_pairs, verify_crossing_pair};
use crate::quantum::multiplicity::verify_multiplicity;
use crate::quantum::realize::{first_nonzero, verify_q13_forms, verify_saw_in_tensor, Triple};
use crate::quantum::{braid_act, BraidWord};
use crate::racah;
use crate::reflection::{self, RkrkMode};
use crate::report::{Outcome, VerificationReport};
use crate::skein::{self, generator_loops, half_dehn_twist, reduce, SkeinElement};
use crate::weyl::{self, InvariantFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Aw3,
    Reflection,
    YangBaxter,
    Rkrk,
    Sdet,
    Weyl,
    Skein,
    Tensor,
    Daha,
    Classical,
    ClassicalLimit,
}

impl Suite {
    pub const NAMES: [&'static str; 12] = [
        "all",
        "aw3",
        "reflection",
        "yang-baxter",
        "rkrk",
        "sdet",
        "weyl",
        "skein",
        "tensor",
        "daha",
        "classical",
        "classical-limit",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Aw3 => "aw3",
            Suite::Reflection => "reflection",
            Suite::YangBaxter => "yang-baxter",
            Suite::Rkrk => "rkrk",
            Suite::Sdet => "sdet",
            Suite::Weyl => "weyl",
            Suite::Skein => "skein",
            Suite::Tensor => "tensor",
            Suite::Daha => "daha",
            Suite::Classical => "classical",
            Suite::ClassicalLimit => "classical-limit",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::All,
            Suite::Aw3,
            Suite::Reflection,
            Suite::YangBaxter,
            Suite::Rkrk,
            Suite::Sdet,
            Suite::Weyl,
            Suite::Skein,
            Suite::Tensor,
            Suite::Daha,
            Suite::Classical,
            Suite::ClassicalLimit,
        ];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))))
    }
}

/// Which RKRK checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RkrkSelection {
    All,
    Symbolic,
    Tensor,
    Free,
}

impl std::str::FromStr for RkrkSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(RkrkSelection::All),
            "symbolic" => Ok(RkrkSelection::Symbolic),
            "tensor" => Ok(RkrkSelection::Tensor),
            "free" => Ok(RkrkSelection::Free),
            _ => Err(Error::Parse(format!("unknown rkrk mode {s:?}; expected symbolic, tensor, free or all"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub dims: Option<Vec<usize>>,
    pub degree: Option<usize>,
    /// Step budget of the cubic DAHA relation.
    pub budget: Option<u64>,
    pub order: usize,
    pub mode: RkrkSelection,
    pub table: ThetaTable,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            dims: None,
            degree: None,
            budget: None,
            order: 3,
            mode: RkrkSelection::All,
            table: ThetaTable::Default,
            seed: 20,
        }
    }
}

pub type Job = Box<dyn FnOnce() -> Vec<VerificationReport> + Send>;

fn job<F: FnOnce() -> Vec<VerificationReport> + Send + 'static>(f: F) -> Job {
    Box::new(f)
}

fn one<F: FnOnce() -> VerificationReport + Send + 'static>(f: F) -> Job {
    Box::new(move || vec![f()])
}

fn check_dims(dims: &[usize], n: usize) -> Result<()> {
    if dims.len() != n || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!("expected {n} positive dims, got {dims:?}")));
    }
    Ok(())
}

/// Independent jobs making up a suite; configuration errors are reported
/// before anything runs.
pub fn suite_jobs(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Job>> {
    let o = opts.clone();
    let mut jobs: Vec<Job> = Vec::new();
    match suite {
        Suite::All => {
            let mut o = opts.clone();
            o.dims = None;
            for s in
                [Suite::Aw3, Suite::Reflection, Suite::Weyl, Suite::Skein, Suite::Tensor, Suite::Daha, Suite::Classical]
            {
                jobs.extend(suite_jobs(s, &o)?);
            }
        }
        Suite::Aw3 => {
            let dims = o.dims.clone().unwrap_or_else(|| vec![2, 3, 4]);
            check_dims(&dims, 3)?;
            for alg in [Algebra::Aw3, Algebra::Zh] {
                jobs.push(job(move || verify_omega_central(alg)));
            }
            let seed = o.seed;
            jobs.push(one(move || verify_pbw_confluence(seed, 200, 6)));
            jobs.push(one(move || verify_pbw_oracle(&dims, seed, 110, 4)));
            jobs.push(job(verify_potential));
        }
        Suite::Reflection => {
            jobs.extend(suite_jobs(Suite::YangBaxter, opts)?);
            jobs.extend(suite_jobs(Suite::Rkrk, opts)?);
            jobs.extend(suite_jobs(Suite::Sdet, opts)?);
        }
        Suite::YangBaxter => jobs.push(one(reflection::yang_baxter_check)),
        Suite::Rkrk => {
            let dims = o.dims.clone().unwrap_or_else(|| vec![2, 2, 2]);
            check_dims(&dims, 3)?;
            let modes = match o.mode {
                RkrkSelection::All => vec![RkrkMode::Symbolic, RkrkMode::Tensor(dims), RkrkMode::Free],
                RkrkSelection::Symbolic => vec![RkrkMode::Symbolic],
                RkrkSelection::Tensor => vec![RkrkMode::Tensor(dims)],
                RkrkSelection::Free => vec![RkrkMode::Free],
            };
            for m in modes {
                jobs.push(one(move || reflection::reflection_equation_check(&m)));
            }
        }
        Suite::Sdet => {
            jobs.push(one(reflection::sdet_factorization_check));
            jobs.push(one(reflection::sdet_m_factorization_check));
            jobs.push(one(reflection::sdet_central_check));
        }
        Suite::Weyl => {
            jobs.push(one(weyl::verify_group));
            for f in InvariantFunction::ALL {
                jobs.push(one(move || weyl::verify_invariance(f)));
            }
            let samples = [[1, 2, 3, 4], [2, 5, 3, 2], [7, 1, 1, 3]];
            jobs.push(one(move || weyl::verify_orbit_consistency(&samples)));
            jobs.push(one(move || weyl::verify_classical_limit(&samples)));
        }
        Suite::Skein => {
            jobs.push(one(skein::verify_overlapping_product));
            jobs.push(job(verify_twists));
            jobs.push(one(skein::verify_cyclic_symmetry));
            jobs.push(one(skein::verify_framing_k_relations));
            let dims = o.dims.clone().unwrap_or_else(|| vec![2, 2, 2]);
            check_dims(&dims, 3)?;
            let d = dims.clone();
            jobs.push(one(move || verify_braid_period(&d)));
            for w in COMPATIBILITY_WORDS {
                let d = dims.clone();
                jobs.push(one(move || skein::verify_braid_compatibility(&w.parse().expect("word"), &d)));
            }
            for d in [vec![2, 2, 2], vec![2, 2, 2, 2]] {
                jobs.push(one(move || skein::verify_crossing_soundness(&d)));
            }
            for (i, l, d) in [(1, "A1", vec![2, 2, 2, 2]), (2, "A23", vec![2, 2, 2, 2]), (1, "A12", vec![2, 3, 2, 2])] {
                jobs.push(one(move || {
                    skein::verify_puncture_split(i, &LoopLabel::parse_with_prefix(l, 'A').expect("label"), &d)
                }));
            }
        }
        Suite::Tensor => {
            let list = match &o.dims {
                Some(d) => {
                    check_dims(d, 3)?;
                    vec![d.clone()]
                }
                None => vec![vec![2, 2, 2], vec![2, 3, 4], vec![3, 3, 3]],
            };
            for d in list {
                let d2 = d.clone();
                jobs.push(job(move || verify_saw_in_tensor(&d)));
                jobs.push(job(move || verify_q13_forms(&d2)));
            }
            for m in [[2, 2, 2, 2], [2, 3, 4, 3], [3, 3, 3, 3]] {
                jobs.push(job(move || verify_multiplicity(m)));
            }
            for d in [vec![2, 2, 2, 2], vec![2, 2, 2, 3]] {
                jobs.push(job(move || verify_commuting_pairs(&d)));
            }
            jobs.push(job(|| verify_crossing_pair(&[vec![2, 2, 2, 2]])));
        }
        Suite::Daha => {
            let budgets = o.budget.map(Budgets::with_omega).unwrap_or_default();
            let table = o.table;
            jobs.push(job(move || daha::verify_theta_relations(budgets, table)));
            jobs.push(job(move || {
                let c = daha::complete(daha::DEFAULT_COMPLETION_ROUNDS, daha::DEFAULT_MAX_RULES, budgets.omega);
                vec![daha::verify_completion_of(&c), daha::verify_confluence(&c, 5)]
            }));
        }
        Suite::Classical => {
            let list = match &o.dims {
                Some(d) => {
                    check_dims(d, 3)?;
                    vec![d.clone()]
                }
                None => vec![vec![2, 2, 2], vec![2, 2, 3]],
            };
            for d in list {
                jobs.push(job(move || racah::verify_racah_relations(&d)));
            }
            let degree = o.degree.unwrap_or(2);
            let idims = o.dims.clone().unwrap_or_else(|| vec![4, 4, 4]);
            jobs.push(one(move || racah::independence_check(degree, &idims)));
            jobs.push(one(move || racah::verify_rank_stabilization(degree, 6)));
            jobs.extend(suite_jobs(Suite::ClassicalLimit, &SuiteOptions { dims: None, ..opts.clone() })?);
        }
        Suite::ClassicalLimit => {
            if o.order < 2 {
                return Err(Error::DivisionObstruction { needed: 2, found: o.order });
            }
            let dims = o.dims.clone().unwrap_or_else(|| vec![2, 2, 2]);
            check_dims(&dims, 3)?;
            let order = o.order;
            jobs.push(job(move || racah::classical_limit_check(&dims, order)));
        }
    }
    Ok(jobs)
}

pub const COMPATIBILITY_WORDS: [&str; 5] = ["s1", "s2", "s1^-1", "s2^-1", "s1 s2 s1"];

/// Canonical order: by check id, then by parameters.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| {
        (a.check_id.as_str(), serde_json::to_string(&a.params).unwrap_or_default())
            .cmp(&(b.check_id.as_str(), serde_json::to_string(&b.params).unwrap_or_default()))
    });
}

/// Runs every job in order; the CLI runs them concurrently instead.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let mut out: Vec<VerificationReport> = suite_jobs(suite, opts)?.into_iter().flat_map(|j| j()).collect();
    sort_reports(&mut out);
    Ok(out)
}

/// [Omega, C_I] reduces to zero for I = 12, 23, 13.
pub fn verify_omega_central(alg: Algebra) -> Vec<VerificationReport> {
    let params = [("algebra", alg.name().to_string())];
    let sys = alg.system();
    let om = aw::casimir();
    [("C12", C12), ("C23", C23), ("C13", C13)]
        .into_iter()
        .map(|(name, x)| {
            VerificationReport::run(&format!("aw3.omega-central.{name}"), "Casimir is central", &params, || {
                let r = sys.normalize(&om.commutator(&NcPoly::gen(x)))?;
                Ok(Outcome::check(r.is_zero(), || r.display(&aw::alphabet()).to_string()))
            })
        })
        .collect()
}

/// `count` distinct words of length 1..=max_len, drawn uniformly without
/// replacement (all of them when there are fewer).
fn random_words(seed: u64, count: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut all: Vec<Vec<u8>> = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| (0..3u8).map(move |g| [w.as_slice(), &[g]].concat())).collect();
        all.extend(layer.iter().cloned());
    }
    let mut rng = StdRng::seed_from_u64(seed);
    all.shuffle(&mut rng);
    all.truncate(count);
    all
}

fn word_name(w: &[u8]) -> String {
    let a = aw::alphabet();
    w.iter().map(|g| a.gens[*g as usize].as_str()).collect::<Vec<_>>().join("*")
}

/// Random words reduce to the same normal form under the leftmost and the
/// rightmost strategy, in aw(3) and in saw(3).
pub fn verify_pbw_confluence(seed: u64, count: usize, max_len: usize) -> VerificationReport {
    let params = [("seed", seed.to_string()), ("count", count.to_string()), ("max_len", max_len.to_string())];
    VerificationReport::run("aw3.pbw-confluence", "PBW basis", &params, || {
        let words = random_words(seed, count, max_len);
        for alg in [Algebra::Aw3, Algebra::Saw3] {
            let sys = alg.system();
            for w in &words {
                let x = NcPoly::word(w);
                let (a, _) = sys.normalize_with(&x, Strategy::Leftmost)?;
                let (b, _) = sys.normalize_with(&x, Strategy::Rightmost)?;
                if a != b {
                    let al = aw::alphabet();
                    return Ok(Outcome::fail(format!(
                        "{} {}: leftmost {} vs rightmost {}",
                        alg.name(),
                        word_name(w),
                        a.display(&al),
                        b.display(&al)
                    )));
                }
            }
        }
        Ok(Outcome::pass())
    })
}

/// The tensor image of a random word equals the tensor image of its normal
/// form, in aw(3) and in saw(3).
pub fn verify_pbw_oracle(dims: &[usize], seed: u64, count: usize, max_len: usize) -> VerificationReport {
    let params = [
        ("dims", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")),
        ("seed", seed.to_string()),
        ("count", count.to_string()),
        ("max_len", max_len.to_string()),
    ];
    VerificationReport::run("aw3.pbw-oracle", "PBW basis", &params, || {
        let t = Triple::new(dims)?;
        let words = random_words(seed, count, max_len);
        for alg in [Algebra::Aw3, Algebra::Saw3] {
            let sys = alg.system();
            for w in &words {
                let x = NcPoly::word(w);
                let diff = t.realize(&x).sub(&t.realize(&sys.normalize(&x)?));
                if !diff.is_zero() {
                    return Ok(Outcome::fail(format!("{} {}: {}", alg.name(), word_name(w), first_nonzero(&diff))));
                }
            }
        }
        Ok(Outcome::pass().with_details(json!({ "words": words.len() })))
    })
}

/// The cyclic derivatives of the potential reproduce the K-form relations.
pub fn verify_potential() -> Vec<VerificationReport> {
    let phi = potential();
    let rel = k_relations();
    let names = ["K12", "K23", "K13"];
    DERIVATIVE_MATCH
        .iter()
        .map(|&(x, i)| {
            let id = format!("aw3.potential.d{}", names[x as usize]);
            VerificationReport::run(&id, "cyclic derivatives of the potential", &[], || {
                let d = phi.derivative(x).substitute_centrals(&potential_parameter_map());
                let ratio = proportional(&d, &rel[i]);
                Ok(Outcome::check(ratio.is_some(), || {
                    format!("derivative is not a unit multiple of relation {}", i + 1)
                })
                .with_details(json!({ "relation": i + 1, "ratio": ratio.map(|r| r.to_string()) })))
            })
        })
        .collect()
}

/// Half Dehn twists: the displayed examples, the label fast path against
/// the algebra path on every generator loop, the braid relation and the
/// period of (s1 s2)^3.
pub fn verify_twists() -> Vec<VerificationReport> {
    let w = |s: &str| s.parse::<BraidWord>().expect("word");
    let el = |s: &str| SkeinElement::parse(s, 3).expect("element");
    let mut out = Vec::new();
    for (word, x, y) in [("s2^-1", "A12", "A13d"), ("s2", "A23", "A23")] {
        let params = [("word", word.to_string()), ("loop", x.to_string())];
        out.push(VerificationReport::run("skein.twist.example", "half Dehn twist", &params, || {
            let got = half_dehn_twist(&w(word), &el(x))?;
            Ok(Outcome::check(got == el(y), || format!("got {got}, expected {y}")))
        }));
    }
    out.push(VerificationReport::run("skein.twist.fast-path", "half Dehn twist", &[], || {
        for word in ["s1", "s1^-1", "s2", "s2^-1", "s1 s2", "s2^-1 s1^-1", "s1 s2 s1"] {
            for l in generator_loops() {
                // PathMismatch if the label table and the algebra disagree
                half_dehn_twist(&w(word), &SkeinElement::loop_(3, l))?;
            }
        }
        Ok(Outcome::pass())
    }));
    out.push(VerificationReport::run("skein.twist.braid-relation", "braid group action", &[], || {
        for l in generator_loops() {
            let x = SkeinElement::loop_(3, l.clone());
            let a = half_dehn_twist(&w("s1 s2 s1"), &x)?;
            let b = half_dehn_twist(&w("s2 s1 s2"), &x)?;
            if a != b {
                return Ok(Outcome::fail(format!("{}: {a} vs {b}", l.display('A'))));
            }
            let c = half_dehn_twist(&w("(s1 s2)^3"), &x)?;
            if c != reduce(&x)? {
                return Ok(Outcome::fail(format!("(s1 s2)^3 on {}: {c}", l.display('A'))));
            }
        }
        Ok(Outcome::pass())
    }));
    out
}

/// Psi_{(s1 s2)^3} fixes the realized generator loops.
pub fn verify_braid_period(dims: &[usize]) -> VerificationReport {
    let params = [("dims", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))];
    VerificationReport::run("skein.braid-period", "full twist acts trivially", &params, || {
        let t = Triple::new(dims)?;
        let w: BraidWord = "(s1 s2)^3".parse()?;
        for l in generator_loops() {
            let m = t.realize(&skein::phi(&SkeinElement::loop_(3, l.clone()))?);
            let (d, img) = braid_act(&w, dims, &m)?;
            if d != dims {
                return Ok(Outcome::fail(format!("dims permuted to {d:?}")));
            }
            let diff = img.sub(&m);
            if !diff.is_zero() {
                return Ok(Outcome::fail(format!("{}: {}", l.display('A'), first_nonzero(&diff))));
            }
        }
        Ok(Outcome::pass())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn aw3_checks_pass() {
        for r in verify_omega_central(Algebra::Aw3).into_iter().chain(verify_omega_central(Algebra::Zh)) {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
        assert!(verify_pbw_confluence(1, 60, 6).is_pass());
        let r = verify_pbw_oracle(&[2, 2, 2], 1, 30, 3);
        assert!(r.is_pass(), "{:?}", r.witness);
        assert_eq!(r.details["words"], 30);
        for r in verify_potential() {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
    }

    #[test]
    fn twist_checks_pass() {
        for r in verify_twists() {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
        let r = verify_braid_period(&[2, 2, 2]);
        assert!(r.is_pass(), "{:?}", r.witness);
    }

    #[test]
    fn bad_dims_are_configuration_errors() {
        let o = SuiteOptions { dims: Some(vec![2, 2]), ..Default::default() };
        assert!(suite_jobs(Suite::Tensor, &o).is_err());
        let o = SuiteOptions { order: 1, ..Default::default() };
        assert!(suite_jobs(Suite::ClassicalLimit, &o).is_err());
    }

    #[test]
    fn reports_are_sorted_canonically() {
        let r = run_suite(Suite::Sdet, &SuiteOptions::default()).unwrap();
        let ids: Vec<&str> = r.iter().map(|x| x.check_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
}
