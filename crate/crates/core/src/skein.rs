//! The Kauffman bracket skein algebra of the punctured sphere, computed
//! through its isomorphism with saw(3): loop products, half Dehn twists,
//! puncture splitting, framing evaluation and the crossing index.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::json;

use crate::coeff::{LaurentPoly, Substitution, Symbol};
use crate::error::{Error, Result};
use crate::label::{parse_product, Decoration, LoopLabel};
use crate::nc::aw::{self, Algebra, C1, C12, C123, C13, C2, C23, C3};
use crate::nc::potential::{k_casimir_relation, k_relations};
use crate::nc::NcPoly;
use crate::quantum::braid::{braid_act, BraidWord};
use crate::quantum::casimir::{intermediate_casimir, Convention};
use crate::quantum::irrep::LMatrix;
use crate::quantum::realize::{first_nonzero, Triple};
use crate::quantum::uq::block_casimir;
use crate::report::{Outcome, VerificationReport};
use crate::weyl::InvariantFunction;

/// Linear combination of ordered loop products with coefficients in A = theta^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinElement {
    pub n: usize,
    terms: BTreeMap<Vec<LoopLabel>, LaurentPoly>,
}

impl SkeinElement {
    pub fn zero(n: usize) -> Self {
        SkeinElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Vec::new(), LaurentPoly::one())
    }

    pub fn monomial(n: usize, labels: Vec<LoopLabel>, c: LaurentPoly) -> Self {
        let mut out = Self::zero(n);
        out.add_term(labels, c);
        out
    }

    pub fn loop_(n: usize, l: LoopLabel) -> Self {
        Self::monomial(n, vec![l], LaurentPoly::one())
    }

    /// Parses a product such as `A12*A23` (or `1`) on n punctures.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one(n));
        }
        let labels = parse_product(s, 'A')?;
        for l in &labels {
            if l.max_puncture() > n {
                return Err(Error::SlotOutOfRange { slot: l.max_puncture(), n });
            }
        }
        Ok(Self::monomial(n, labels, LaurentPoly::one()))
    }

    pub fn add_term(&mut self, labels: Vec<LoopLabel>, c: LaurentPoly) {
        let cur = self.terms.remove(&labels).unwrap_or_else(LaurentPoly::zero);
        let next = &cur + &c;
        if !next.is_zero() {
            self.terms.insert(labels, next);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<LoopLabel>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    /// Concatenation of loop words; the result is not reduced.
    pub fn concat(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// The same element with A replaced by -q, for display.
    pub fn q_form(&self) -> String {
        let sub = Substitution::skein_to_q();
        let mut parts = Vec::new();
        for (l, c) in &self.terms {
            let cq = c.substitute(&sub).expect("A is a unit");
            parts.push(format!("({}) {}", cq, word_string(l)));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn word_string(l: &[LoopLabel]) -> String {
    if l.is_empty() {
        "1".into()
    } else {
        l.iter().map(|x| x.display('A')).collect::<Vec<_>>().join("*")
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({}) {}", c, word_string(l))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn s(x: LaurentPoly) -> NcPoly {
    NcPoly::scalar(x)
}

fn g(i: u8) -> NcPoly {
    NcPoly::gen(i)
}

fn z(j: usize) -> NcPoly {
    NcPoly::central(j)
}

/// Divides every coefficient of `p` by `d` exactly.
fn div_coeffs(p: &NcPoly, d: &LaurentPoly) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for (m, c) in p.terms() {
        out.add_term(m.clone(), c.div_exact(d)?);
    }
    Ok(out)
}

/// X13 = ((q - q^-1) p13 - [X12, X23]_q) / (q^2 - q^-2), normalized in saw(3).
fn third_generator(x12: &NcPoly, x23: &NcPoly, p13: &NcPoly) -> Result<NcPoly> {
    let num = p13.scale(&LaurentPoly::q_diff(1)).sub(&x12.q_commutator(x23));
    let num = Algebra::Saw3.system().normalize(&num)?;
    div_coeffs(&num, &LaurentPoly::q_diff(2))
}

fn p13() -> NcPoly {
    z(C1).mul(&z(C3)).add(&z(C2).mul(&z(C123)))
}

/// The up-loop around punctures 1 and 3 in PBW form.
pub fn q13u() -> NcPoly {
    third_generator(&g(C23), &g(C12), &p13()).expect("up-loop is a Laurent combination")
}

fn central_index(l: &LoopLabel) -> Option<usize> {
    match l.set.as_slice() {
        [1] => Some(C1),
        [2] => Some(C2),
        [3] => Some(C3),
        [1, 2, 3] => Some(C123),
        _ => None,
    }
}

/// phi on a single loop of the four-punctured sphere.
pub fn phi_loop(l: &LoopLabel) -> Result<NcPoly> {
    if let Some(j) = central_index(l) {
        return Ok(z(j));
    }
    match (l.set.as_slice(), l.deco) {
        ([1, 2], _) => Ok(g(C12)),
        ([2, 3], _) => Ok(g(C23)),
        ([1, 3], Decoration::Down) => Ok(g(C13)),
        ([1, 3], Decoration::Up) => Ok(q13u()),
        _ => Err(Error::SlotOutOfRange { slot: l.max_puncture(), n: 3 }),
    }
}

/// phi: loops to saw(3), with A -> -q on coefficients. Only n = 3.
pub fn phi(x: &SkeinElement) -> Result<NcPoly> {
    if x.n != 3 {
        return Err(Error::NotInImage(format!("phi is an isomorphism only for n = 3, got n = {}", x.n)));
    }
    let sub = Substitution::skein_to_q();
    let mut out = NcPoly::zero();
    for (labels, c) in x.terms() {
        let mut acc = s(c.substitute(&sub)?);
        for l in labels {
            acc = acc.mul(&phi_loop(l)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// q^k -> (-A)^k; odd powers of q^(1/2) have no preimage.
fn q_to_skein(c: &LaurentPoly) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (e, r) in c.terms() {
        let k = e[Symbol::Qh.index()];
        if k % 2 != 0 || e[Symbol::A.index()] != 0 {
            return Err(Error::NotInImage(format!("coefficient {c} is not a polynomial in q")));
        }
        let mut rest = *e;
        rest[Symbol::Qh.index()] = 0;
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        let mono = LaurentPoly::monomial(rest, r * BigRational::from_integer(sign.into()));
        out += &(&mono * &LaurentPoly::sym_pow(Symbol::A, k / 2));
    }
    Ok(out)
}

/// phi^-1 through the saw(3) PBW normal form.
pub fn phi_inverse(x: &NcPoly) -> Result<SkeinElement> {
    let nf = Algebra::Saw3.system().normalize(x)?;
    let gen_labels =
        [LoopLabel::plain(&[1, 2]), LoopLabel::plain(&[2, 3]), LoopLabel::decorated(&[1, 3], Decoration::Down)];
    let central_labels =
        [LoopLabel::plain(&[1]), LoopLabel::plain(&[2]), LoopLabel::plain(&[3]), LoopLabel::plain(&[1, 2, 3])];
    let mut out = SkeinElement::zero(3);
    for (m, c) in nf.terms() {
        let mut labels = Vec::new();
        for (j, &e) in m.central().iter().enumerate() {
            for _ in 0..e {
                labels.push(central_labels[j].clone());
            }
        }
        for &w in m.word() {
            labels
                .push(gen_labels.get(w as usize).cloned().ok_or_else(|| Error::NotInImage(format!("generator {w}")))?);
        }
        out.add_term(labels, q_to_skein(c)?);
    }
    Ok(out)
}

/// Reduced form of a skein element: phi^-1(phi(x)).
pub fn reduce(x: &SkeinElement) -> Result<SkeinElement> {
    phi_inverse(&phi(x)?)
}

/// x * y (y stacked on top of x).
pub fn loop_product(x: &SkeinElement, y: &SkeinElement) -> Result<SkeinElement> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch(format!("products of loops on {} and {} punctures", x.n, y.n)));
    }
    phi_inverse(&phi(x)?.mul(&phi(y)?))
}

/// Images of C12, C23 and the permutation of centrals under Psi_{s_i^e}.
fn letter_images(i: usize, e: i8) -> Result<([Option<NcPoly>; 3], [usize; 4])> {
    let up = q13u();
    let (x12, x23, perm) = match (i, e) {
        (1, 1) => (g(C12), g(C13), [C2, C1, C3, C123]),
        (1, -1) => (g(C12), up, [C2, C1, C3, C123]),
        (2, 1) => (up, g(C23), [C1, C3, C2, C123]),
        (2, -1) => (g(C13), g(C23), [C1, C3, C2, C123]),
        _ => return Err(Error::SlotOutOfRange { slot: i, n: 3 }),
    };
    let p = z(perm[C1]).mul(&z(perm[C3])).add(&z(perm[C2]).mul(&z(perm[C123])));
    let x13 = third_generator(&x12, &x23, &p)?;
    Ok(([Some(x12), Some(x23), Some(x13)], perm))
}

/// Psi_S on saw(3): the last letter acts first.
pub fn psi_algebra(word: &BraidWord, x: &NcPoly) -> Result<NcPoly> {
    let sys = Algebra::Saw3.system();
    let mut cur = sys.normalize(x)?;
    for &(i, e) in word.letters().iter().rev() {
        let (gens, perm) = letter_images(i, e)?;
        let centrals: Vec<Option<NcPoly>> = perm.iter().map(|&j| Some(z(j))).collect();
        cur = sys.normalize(&cur.substitute_centrals(&centrals).substitute_gens(&gens))?;
    }
    Ok(cur)
}

/// Label-level table of the half Dehn twists on generator loops.
fn twist_label(i: usize, e: i8, l: &LoopLabel) -> Option<LoopLabel> {
    let p = |set: &[usize]| LoopLabel::plain(set);
    let d = |set: &[usize], deco| LoopLabel::decorated(set, deco);
    if l.set.len() == 1 {
        let swap = |k: usize| {
            if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            }
        };
        return Some(p(&[swap(l.set[0])]));
    }
    if l.set == [1, 2, 3] {
        return Some(l.clone());
    }
    let key = (l.set.as_slice(), l.deco);
    let down = Decoration::Down;
    let up = Decoration::Up;
    match (i, e) {
        (1, 1) => match key {
            ([1, 2], _) => Some(p(&[1, 2])),
            ([2, 3], _) => Some(d(&[1, 3], down)),
            ([1, 3], Decoration::Up) => Some(p(&[2, 3])),
            _ => None,
        },
        (1, -1) => match key {
            ([1, 2], _) => Some(p(&[1, 2])),
            ([2, 3], _) => Some(d(&[1, 3], up)),
            ([1, 3], Decoration::Down) => Some(p(&[2, 3])),
            _ => None,
        },
        (2, 1) => match key {
            ([2, 3], _) => Some(p(&[2, 3])),
            ([1, 2], _) => Some(d(&[1, 3], up)),
            ([1, 3], Decoration::Down) => Some(p(&[1, 2])),
            _ => None,
        },
        (2, -1) => match key {
            ([2, 3], _) => Some(p(&[2, 3])),
            ([1, 2], _) => Some(d(&[1, 3], down)),
            ([1, 3], Decoration::Up) => Some(p(&[1, 2])),
            _ => None,
        },
        _ => None,
    }
}

/// Fast path: the image of a single generator loop, if every letter of
/// the word stays inside the table.
pub fn twist_fast_path(word: &BraidWord, l: &LoopLabel) -> Option<LoopLabel> {
    let mut cur = l.clone();
    for &(i, e) in word.letters().iter().rev() {
        cur = twist_label(i, e, &cur)?;
    }
    Some(cur)
}

/// psi_S(x) = phi^-1(Psi_S(phi(x))), cross-checked against the label
/// table when x is a multiple of a single loop.
pub fn half_dehn_twist(word: &BraidWord, x: &SkeinElement) -> Result<SkeinElement> {
    if word.max_generator() >= x.n {
        return Err(Error::SlotOutOfRange { slot: word.max_generator(), n: x.n });
    }
    let diagram = phi_inverse(&psi_algebra(word, &phi(x)?)?)?;
    let single: Vec<_> = x.terms().collect();
    if let [(labels, c)] = single.as_slice() {
        if let [l] = labels.as_slice() {
            if let Some(img) = twist_fast_path(word, l) {
                let fast = reduce(&SkeinElement::monomial(x.n, vec![img.clone()], (*c).clone()))?;
                if fast != diagram {
                    return Err(Error::PathMismatch(format!(
                        "{} under {}: table gives {}, algebra gives {}",
                        l.display('A'),
                        word,
                        img.display('A'),
                        diagram
                    )));
                }
            }
        }
    }
    Ok(diagram)
}

/// delta_i: puncture i is doubled; later punctures shift up by one.
pub fn puncture_split(i: usize, l: &LoopLabel, n: usize) -> Result<LoopLabel> {
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, n });
    }
    if l.max_puncture() > n {
        return Err(Error::SlotOutOfRange { slot: l.max_puncture(), n });
    }
    let mut set = Vec::new();
    for &j in &l.set {
        match j.cmp(&i) {
            std::cmp::Ordering::Less => set.push(j),
            std::cmp::Ordering::Equal => set.extend([i, i + 1]),
            std::cmp::Ordering::Greater => set.push(j + 1),
        }
    }
    LoopLabel::new(set, l.deco)
}

/// delta_i on a skein element, loop by loop.
pub fn puncture_split_element(i: usize, x: &SkeinElement) -> Result<SkeinElement> {
    let mut out = SkeinElement::zero(x.n + 1);
    for (labels, c) in x.terms() {
        let w = labels.iter().map(|l| puncture_split(i, l, x.n)).collect::<Result<Vec<_>>>()?;
        out.add_term(w, c.clone());
    }
    Ok(out)
}

/// Compares delta_i on a contiguous loop with the coproduct in slot i on
/// the tensor side.
pub fn verify_puncture_split(i: usize, l: &LoopLabel, dims: &[usize]) -> VerificationReport {
    let n = dims.len() - 1;
    let params = [("slot", i.to_string()), ("loop", l.display('A')), ("dims", dims_str(dims))];
    VerificationReport::run("skein.puncture-split", "puncture splitting", &params, || {
        if !l.is_consecutive() {
            return Err(Error::NotInImage("tensor cross-check needs a contiguous loop".into()));
        }
        let target = puncture_split(i, l, n)?;
        let elem = block_casimir(n, l.set[0] - 1, l.set.len())?.coproduct(i - 1)?;
        let lhs = elem.represent(dims)?;
        let rhs = intermediate_casimir(&target, dims, Convention::Standard)?;
        let diff = lhs.sub(&rhs);
        Ok(Outcome::check(diff.is_zero(), || first_nonzero(&diff))
            .with_details(json!({ "image": target.display('A') })))
    })
}

fn dims_str(d: &[usize]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Generator loops of the four-punctured sphere.
pub fn generator_loops() -> Vec<LoopLabel> {
    vec![
        LoopLabel::plain(&[1]),
        LoopLabel::plain(&[2]),
        LoopLabel::plain(&[3]),
        LoopLabel::plain(&[1, 2, 3]),
        LoopLabel::plain(&[1, 2]),
        LoopLabel::plain(&[2, 3]),
        LoopLabel::decorated(&[1, 3], Decoration::Down),
        LoopLabel::decorated(&[1, 3], Decoration::Up),
    ]
}

/// phi o psi_S = Psi_S o phi, with Psi_S computed by braided R-matrix
/// conjugation on the tensor product.
pub fn verify_braid_compatibility(word: &BraidWord, dims: &[usize]) -> VerificationReport {
    let params = [("word", word.to_string()), ("dims", dims_str(dims))];
    VerificationReport::run("skein.braid-compatibility", "braid actions commute with phi", &params, || {
        let start = Triple::new(dims)?;
        for l in generator_loops() {
            let x = SkeinElement::loop_(3, l.clone());
            let m = start.realize(&phi(&x)?);
            let (d1, lhs) = braid_act(word, dims, &m)?;
            let img = half_dehn_twist(word, &x)?;
            let rhs = Triple::new(&d1)?.realize(&phi(&img)?);
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(Outcome::fail(format!("{}: {}", l.display('A'), first_nonzero(&diff))));
            }
        }
        Ok(Outcome::pass())
    })
}

/// Cyclic relabeling 1 -> 2 -> 3 -> 1 of the punctures maps the defining
/// relations to themselves.
pub fn verify_cyclic_symmetry() -> VerificationReport {
    VerificationReport::run("skein.cyclic-symmetry", "cyclic symmetry of the relations", &[], || {
        let gens = [Some(g(C23)), Some(g(C13)), Some(g(C12))];
        let centrals = [Some(z(C2)), Some(z(C3)), Some(z(C1)), Some(z(C123))];
        let sys = Algebra::Aw3.system();
        for (name, rel) in aw::relations() {
            let image = rel.substitute_centrals(&centrals).substitute_gens(&gens);
            let r = sys.normalize(&image)?;
            if !r.is_zero() {
                return Ok(Outcome::fail(format!("{name}: {}", r.display(&aw::alphabet()))));
            }
        }
        Ok(Outcome::pass())
    })
}

/// Puncture-framing evaluation: single-puncture loops and the outer loop
/// become q^m + q^-m; the result is reduced in the special Zhedanov algebra.
pub fn framing_evaluation(x: &SkeinElement) -> Result<NcPoly> {
    Algebra::SZh.system().normalize(&phi(x)?)
}

/// After framing evaluation, K12 = (C12 - (q + q^-1)) / (q - q^-1)^2 and
/// the same for K23, with K13 = [K12, K23]_q, satisfy the K-form relations
/// with the xi functions of the W(D4) module. Checked with denominators
/// cleared, as an identity in the z's.
pub fn verify_framing_k_relations() -> VerificationReport {
    VerificationReport::run("skein.framing.k-relations", "framing evaluation and K-form", &[], || {
        let sys = Algebra::SZh.system();
        let chi = LaurentPoly::chi(1);
        let d1 = LaurentPoly::q_diff(1);
        let d = &d1 * &d1;
        let e = &d * &d1;
        let shift = |i: u8| g(i).sub(&s(chi.clone()));
        // K = X / e
        let x12 = shift(C12).scale(&d1);
        let x23 = shift(C23).scale(&d1);
        let x13 = div_coeffs(&sys.normalize(&shift(C12).q_commutator(&shift(C23)))?, &d1)?;
        let xs = [x12, x23, x13];
        let fs = [InvariantFunction::Xi2, InvariantFunction::Xi4, InvariantFunction::Xi4p, InvariantFunction::Xi6];
        let common = &(&chi * &chi) * &d.pow(6)?;
        let rels: Vec<(&str, NcPoly)> = k_relations()
            .into_iter()
            .enumerate()
            .map(|(k, r)| (["relation 1", "relation 2", "relation 3"][k], r))
            .chain([("cubic relation", k_casimir_relation())])
            .collect();
        for (name, rel) in rels {
            let mut total = NcPoly::zero();
            for (m, c) in rel.terms() {
                let deg = m.word().len() as i32;
                let mut coeff = c * &e.pow(3 - deg)?;
                let mut den = LaurentPoly::one();
                for (j, &k) in m.central().iter().enumerate() {
                    for _ in 0..k {
                        coeff = &coeff * &fs[j].numerator();
                        den = &den * &fs[j].denominator();
                    }
                }
                let mut acc = s(&coeff * &common.div_exact(&den)?);
                for &w in m.word() {
                    acc = acc.mul(&xs[w as usize]);
                }
                total = total.add(&acc);
            }
            let r = sys.normalize(&total)?;
            if !r.is_zero() {
                return Ok(Outcome::fail(format!("{name}: {} terms remain", r.num_terms())));
            }
        }
        Ok(Outcome::pass())
    })
}

/// Minimal crossing number for the catalogued pairs of simple and
/// decorated loops on at most four inner punctures.
pub fn crossing_index(x: &LoopLabel, y: &LoopLabel, n: usize) -> Result<u32> {
    let unsupported = || Error::UnsupportedPair(x.display('A'), y.display('A'));
    if n > 4 || x.max_puncture() > n || y.max_puncture() > n {
        return Err(unsupported());
    }
    if x.is_central(n) || y.is_central(n) || x == y {
        return Ok(0);
    }
    let gaps = |l: &LoopLabel| -> Vec<usize> {
        let (lo, hi) = (l.set[0], l.max_puncture());
        (lo..=hi).filter(|p| !l.set.contains(p)).collect()
    };
    let (gx, gy) = (gaps(x), gaps(y));
    let meet = x.set.iter().any(|p| y.set.contains(p));
    let sub = |a: &LoopLabel, b: &LoopLabel| a.set.iter().all(|p| b.set.contains(p));
    // Inner loop a inside outer loop b: every gap of a is either enclosed
    // by b or passed on the same side.
    let nested_ok = |a: &LoopLabel, ga: &[usize], b: &LoopLabel, gb: &[usize]| {
        ga.iter().all(|p| b.set.contains(p) || (gb.contains(p) && a.deco == b.deco))
    };
    if sub(x, y) || sub(y, x) {
        let (a, ga, b, gb) = if sub(x, y) { (x, &gx, y, &gy) } else { (y, &gy, x, &gx) };
        return if nested_ok(a, ga, b, gb) { Ok(0) } else { Err(unsupported()) };
    }
    if !meet {
        let inside = |a: &LoopLabel, gb: &[usize]| a.set.iter().all(|p| gb.contains(p)) && a.is_consecutive();
        let separated = x.max_puncture() < y.set[0] || y.max_puncture() < x.set[0];
        if separated || inside(x, &gy) || inside(y, &gx) {
            return Ok(0);
        }
        let interleaved = x.set.len() == 2 && y.set.len() == 2 && !x.is_consecutive() && !y.is_consecutive();
        if interleaved {
            return Ok(if x.deco == y.deco { 4 } else { 0 });
        }
        return Err(unsupported());
    }
    if x.is_consecutive() || y.is_consecutive() {
        return Ok(2);
    }
    Err(unsupported())
}

/// Every catalogued loop on n punctures (n = 3 or 4).
pub fn catalog(n: usize) -> Vec<LoopLabel> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let consecutive = set.windows(2).all(|w| w[1] == w[0] + 1);
        if consecutive {
            out.push(LoopLabel::plain(&set));
        } else {
            out.push(LoopLabel::decorated(&set, Decoration::Up));
            out.push(LoopLabel::decorated(&set, Decoration::Down));
        }
    }
    out
}

/// Pairs with crossing index 0 are realized by commuting operators.
pub fn verify_crossing_soundness(dims: &[usize]) -> VerificationReport {
    let n = dims.len();
    let params = [("dims", dims_str(dims))];
    VerificationReport::run("skein.crossing-index.soundness", "crossing index", &params, || {
        let labels = catalog(n);
        let mut mats: BTreeMap<LoopLabel, LMatrix> = BTreeMap::new();
        for l in &labels {
            mats.insert(l.clone(), intermediate_casimir(l, dims, Convention::Standard)?);
        }
        let mut checked = 0usize;
        let mut nonzero_index = 0usize;
        for (i, x) in labels.iter().enumerate() {
            for y in &labels[i + 1..] {
                match crossing_index(x, y, n) {
                    Ok(0) => {
                        let c = mats[x].commutator(&mats[y]);
                        if !c.is_zero() {
                            return Ok(Outcome::fail(format!(
                                "{} and {} have index 0 but do not commute",
                                x.display('A'),
                                y.display('A')
                            )));
                        }
                        checked += 1;
                    }
                    Ok(_) => {
                        if mats[x].commutator(&mats[y]).is_zero() {
                            return Ok(Outcome::fail(format!(
                                "{} and {} commute but have positive index",
                                x.display('A'),
                                y.display('A')
                            )));
                        }
                        nonzero_index += 1;
                    }
                    Err(_) => {}
                }
            }
        }
        Ok(Outcome::pass().with_details(json!({ "index_zero_pairs": checked, "positive_index_pairs": nonzero_index })))
    })
}

/// The conjectural map for n = 4: loops to intermediate Casimirs on a
/// four-fold tensor product. Evidence only.
pub fn phi4_realize(x: &SkeinElement, dims: &[usize]) -> Result<LMatrix> {
    if x.n != 4 || dims.len() != 4 {
        return Err(Error::DimensionMismatch("the n = 4 map needs four punctures and four dims".into()));
    }
    let size: usize = dims.iter().product();
    let sub = Substitution::skein_to_q();
    let mut out = LMatrix::zeros(size, size);
    for (labels, c) in x.terms() {
        let mut acc = LMatrix::scalar(size, c.substitute(&sub)?);
        for l in labels {
            acc = acc.mul(&intermediate_casimir(l, dims, Convention::Standard)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// The skein relation displayed for two overlapping loops:
/// A A12 A23 - A^-1 A23 A12 = (A^2 - A^-2) A13 + (A - A^-1)(A2 A123 + A1 A3).
pub fn verify_overlapping_product() -> VerificationReport {
    VerificationReport::run("skein.product.a12-a23", "skein product of overlapping loops", &[], || {
        let a = |set: &[usize]| LoopLabel::plain(set);
        let l = |x: LoopLabel| SkeinElement::loop_(3, x);
        let th = |k: i32| LaurentPoly::sym_pow(Symbol::A, k);
        let a13d = LoopLabel::decorated(&[1, 3], Decoration::Down);
        let a13u = LoopLabel::decorated(&[1, 3], Decoration::Up);
        let xy = loop_product(&l(a(&[1, 2])), &l(a(&[2, 3])))?;
        let yx = loop_product(&l(a(&[2, 3])), &l(a(&[1, 2])))?;
        let expected = reduce(
            &SkeinElement::monomial(3, vec![a13d.clone()], th(1))
                .add(&SkeinElement::monomial(3, vec![a(&[2]), a(&[1, 2, 3])], LaurentPoly::one()))
                .add(&SkeinElement::monomial(3, vec![a(&[1]), a(&[3])], LaurentPoly::one()))
                .add(&SkeinElement::monomial(3, vec![a13u.clone()], th(-1))),
        )?;
        if xy != expected {
            return Ok(Outcome::fail(format!("A12*A23 = {xy}, expected {expected}")));
        }
        let lhs = xy.scale(&th(1)).add(&yx.scale(&-th(-1)));
        let rhs = reduce(&SkeinElement::monomial(3, vec![a13d], &th(2) - &th(-2)).add(
            &SkeinElement::monomial(3, vec![a(&[2]), a(&[1, 2, 3])], &th(1) - &th(-1)).add(&SkeinElement::monomial(
                3,
                vec![a(&[1]), a(&[3])],
                &th(1) - &th(-1),
            )),
        ))?;
        let details = json!({ "product": xy.to_string(), "q_form": xy.q_form() });
        Ok(Outcome::check(reduce(&lhs)? == rhs, || {
            format!("q-commutator gives {}", reduce(&lhs).map(|x| x.to_string()).unwrap_or_default())
        })
        .with_details(details))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> LoopLabel {
        LoopLabel::parse_with_prefix(s, 'A').unwrap()
    }

    fn el(s: &str) -> SkeinElement {
        SkeinElement::parse(s, 3).unwrap()
    }

    #[test]
    fn phi_on_generators() {
        assert_eq!(phi(&el("A12")).unwrap(), g(C12));
        assert_eq!(phi(&el("A13d")).unwrap(), g(C13));
        assert_eq!(phi_inverse(&z(C1).mul(&z(C3))).unwrap(), el("A1*A3"));
    }

    #[test]
    fn up_loop_matches_tensor_realization() {
        let t = Triple::new(&[2, 3, 2]).unwrap();
        assert_eq!(t.realize(&q13u()), t.q13u);
    }

    #[test]
    fn round_trip_on_normal_forms() {
        for p in ["A12*A23", "A1*A2*A13d", "A123*A12*A12", "A23*A13d"] {
            let x = el(p);
            assert_eq!(phi_inverse(&phi(&x).unwrap()).unwrap(), x, "{p}");
        }
    }

    #[test]
    fn odd_half_powers_are_not_in_the_image() {
        let x = g(C12).scale(&LaurentPoly::qh_pow(1));
        assert!(matches!(phi_inverse(&x), Err(Error::NotInImage(_))));
    }

    #[test]
    fn overlapping_product() {
        let r = verify_overlapping_product();
        assert!(r.is_pass(), "{:?}", r.witness);
    }

    #[test]
    fn central_loops_commute() {
        let x = loop_product(&el("A1"), &el("A23")).unwrap();
        let y = loop_product(&el("A23"), &el("A1")).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn twist_examples() {
        let w = |s: &str| s.parse::<BraidWord>().unwrap();
        assert_eq!(half_dehn_twist(&w("s2^-1"), &el("A12")).unwrap(), el("A13d"));
        assert_eq!(half_dehn_twist(&w("s2"), &el("A23")).unwrap(), el("A23"));
        for l in generator_loops() {
            let x = SkeinElement::loop_(3, l);
            assert_eq!(half_dehn_twist(&w("s1 s1^-1"), &x).unwrap(), reduce(&x).unwrap());
        }
    }

    #[test]
    fn twist_table_agrees_with_algebra() {
        for word in ["s1", "s1^-1", "s2", "s2^-1", "s1 s2", "s2^-1 s1^-1", "s1 s1"] {
            let w: BraidWord = word.parse().unwrap();
            for l in generator_loops() {
                half_dehn_twist(&w, &SkeinElement::loop_(3, l)).unwrap();
            }
        }
    }

    #[test]
    fn braid_relation_and_period() {
        let w = |s: &str| s.parse::<BraidWord>().unwrap();
        for l in generator_loops() {
            let x = SkeinElement::loop_(3, l);
            assert_eq!(half_dehn_twist(&w("s1 s2 s1"), &x).unwrap(), half_dehn_twist(&w("s2 s1 s2"), &x).unwrap());
            assert_eq!(half_dehn_twist(&w("(s1 s2)^3"), &x).unwrap(), reduce(&x).unwrap());
        }
    }

    #[test]
    fn compatibility_with_tensor_braid_action() {
        for (word, dims) in [("s1", vec![2, 2, 2]), ("s2^-1", vec![2, 3, 2]), ("s1 s2^-1", vec![2, 2, 3])] {
            let r = verify_braid_compatibility(&word.parse().unwrap(), &dims);
            assert!(r.is_pass(), "{word} {:?}", r.witness);
        }
    }

    #[test]
    fn twists_are_multiplicative() {
        let w: BraidWord = "s2^-1".parse().unwrap();
        let (x, y) = (el("A12"), el("A23"));
        let lhs = half_dehn_twist(&w, &loop_product(&x, &y).unwrap()).unwrap();
        let rhs = loop_product(&half_dehn_twist(&w, &x).unwrap(), &half_dehn_twist(&w, &y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_examples() {
        assert_eq!(puncture_split(1, &a("A1"), 3).unwrap(), a("A12"));
        assert_eq!(puncture_split(3, &a("A1"), 3).unwrap(), a("A1"));
        assert_eq!(puncture_split(2, &a("A23"), 3).unwrap(), a("A234"));
        assert_eq!(puncture_split(2, &a("A13d"), 3).unwrap(), a("A14d"));
        assert!(verify_puncture_split(2, &a("A23"), &[2, 2, 2, 2]).is_pass());
        assert!(verify_puncture_split(1, &a("A1"), &[2, 2, 2, 2]).is_pass());
        assert!(verify_puncture_split(1, &a("A12"), &[2, 3, 2, 2]).is_pass());
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing_index(&a("A1"), &a("A23"), 3).unwrap(), 0);
        assert_eq!(crossing_index(&a("A12"), &a("A23"), 3).unwrap(), 2);
        assert_eq!(crossing_index(&a("A13d"), &a("A24d"), 4).unwrap(), 4);
        assert_eq!(crossing_index(&a("A13d"), &a("A24u"), 4).unwrap(), 0);
        assert!(matches!(crossing_index(&a("A13d"), &a("A13u"), 3), Err(Error::UnsupportedPair(..))));
    }

    #[test]
    fn crossing_index_zero_is_sound() {
        for dims in [vec![2, 2, 2], vec![2, 2, 2, 2]] {
            let r = verify_crossing_soundness(&dims);
            assert!(r.is_pass(), "{dims:?} {:?}", r.witness);
        }
    }

    #[test]
    fn relations_are_cyclically_symmetric() {
        assert!(verify_cyclic_symmetry().is_pass());
    }

    #[test]
    fn framing_evaluation_gives_k_form() {
        let r = verify_framing_k_relations();
        assert!(r.is_pass(), "{:?}", r.witness);
    }

    #[test]
    fn framing_evaluation_of_punctures() {
        let v = framing_evaluation(&el("A2*A123")).unwrap();
        assert_eq!(v, s(&LaurentPoly::chi_sym(2) * &LaurentPoly::chi_sym(4)));
    }

    #[test]
    fn four_puncture_map_respects_commuting_pair() {
        let x = SkeinElement::parse("A13d*A24u", 4).unwrap();
        let y = SkeinElement::parse("A24u*A13d", 4).unwrap();
        let d = [2, 2, 2, 2];
        assert_eq!(phi4_realize(&x, &d).unwrap(), phi4_realize(&y, &d).unwrap());
    }
}
