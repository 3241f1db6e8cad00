//! Four-factor checks: commuting decorated pairs and the two expansions of
//! the crossing pair Q13d, Q24d.

use std::collections::BTreeMap;

use serde_json::json;

use super::casimir::Convention;
use super::expand::{expand_in_pbw_basis, format_labels, pbw4_basis, CasimirTable};
use super::realize::first_nonzero;
use crate::coeff::LaurentPoly;
use crate::error::Result;
use crate::label::{parse_product, LoopLabel};
use crate::report::{Outcome, VerificationReport};

fn labels(s: &str) -> Vec<LoopLabel> {
    if s == "1" {
        return Vec::new();
    }
    parse_product(s, 'Q').expect("catalog product")
}

/// Expected expansion of Q13d*Q24d; the reverse product is its bar image.
pub fn crossing_pair_formula(reverse: bool) -> Vec<(Vec<LoopLabel>, LaurentPoly)> {
    let q = |k: i32| {
        let p = LaurentPoly::q_pow(k);
        if reverse {
            p.bar()
        } else {
            p
        }
    };
    let one = LaurentPoly::one();
    vec![
        (labels("Q14d*Q23"), q(2)),
        (labels("Q12*Q34"), q(-2)),
        (labels("Q14d*Q2*Q3"), -q(1)),
        (labels("Q23*Q1*Q4"), -q(1)),
        (labels("Q12*Q3*Q4"), -q(-1)),
        (labels("Q34*Q1*Q2"), -q(-1)),
        (labels("Q1234"), -(&q(1) + &q(-1))),
        (labels("Q1*Q2*Q3*Q4"), one.clone()),
        (labels("Q234*Q1"), one.clone()),
        (labels("Q134d*Q2"), one.clone()),
        (labels("Q124d*Q3"), one.clone()),
        (labels("Q123*Q4"), one),
    ]
}

fn dims_str(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn dims_list_str(list: &[Vec<usize>]) -> String {
    list.iter().map(|d| dims_str(d)).collect::<Vec<_>>().join(";")
}

/// Compares an expansion against the expected coefficients; returns the
/// first mismatching basis monomial.
fn mismatch(basis: &[Vec<LoopLabel>], got: &[LaurentPoly], want: &[(Vec<LoopLabel>, LaurentPoly)]) -> Option<String> {
    let want: BTreeMap<&Vec<LoopLabel>, &LaurentPoly> = want.iter().map(|(b, c)| (b, c)).collect();
    for (b, c) in basis.iter().zip(got) {
        let w = want.get(b).map(|x| (*x).clone()).unwrap_or_else(LaurentPoly::zero);
        if *c != w {
            return Some(format!("coefficient of {}: got {}, expected {}", format_labels(b), c, w));
        }
    }
    None
}

fn coefficient_json(basis: &[Vec<LoopLabel>], c: &[LaurentPoly]) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = basis
        .iter()
        .zip(c)
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| (format_labels(b), json!(c.to_string())))
        .collect();
    serde_json::Value::Object(map)
}

fn conv_name(c: Convention) -> &'static str {
    match c {
        Convention::Standard => "standard",
        Convention::Mirrored => "mirrored",
    }
}

/// Expands both orders of the crossing pair under `conv`.
fn expand_pair(conv: Convention, dims_list: &[Vec<usize>]) -> Result<[Vec<LaurentPoly>; 2]> {
    let mut t = CasimirTable::new(conv);
    let basis = pbw4_basis();
    let a = expand_in_pbw_basis(&labels("Q13d*Q24d"), &basis, dims_list, &mut t)?;
    let b = expand_in_pbw_basis(&labels("Q24d*Q13d"), &basis, dims_list, &mut t)?;
    Ok([a, b])
}

/// Decoration convention under which both product formulas hold, if any.
pub fn detect_convention(dims_list: &[Vec<usize>]) -> Result<Option<Convention>> {
    let basis = pbw4_basis();
    for conv in [Convention::Standard, Convention::Mirrored] {
        let [a, b] = expand_pair(conv, dims_list)?;
        if mismatch(&basis, &a, &crossing_pair_formula(false)).is_none()
            && mismatch(&basis, &b, &crossing_pair_formula(true)).is_none()
        {
            return Ok(Some(conv));
        }
    }
    Ok(None)
}

pub fn verify_commuting_pairs(dims: &[usize]) -> Vec<VerificationReport> {
    let params = [("dims", dims_str(dims))];
    [("tensor4.commute.q13d-q24u", "Q13d", "Q24u"), ("tensor4.commute.q13u-q24d", "Q13u", "Q24d")]
        .into_iter()
        .map(|(id, x, y)| {
            VerificationReport::run(id, "commuting decorated pair", &params, || {
                let mut t = CasimirTable::new(Convention::Standard);
                let a = t.get(&labels(x)[0], dims)?;
                let b = t.get(&labels(y)[0], dims)?;
                let c = a.commutator(&b);
                Ok(Outcome::check(c.is_zero(), || first_nonzero(&c)))
            })
        })
        .collect()
}

/// Convention report followed by one report per product order.
pub fn verify_crossing_pair(dims_list: &[Vec<usize>]) -> Vec<VerificationReport> {
    let params = [("dims", dims_list_str(dims_list))];
    let mut found = None;
    let mut out = vec![VerificationReport::run("tensor4.decoration-convention", "decorated loops", &params, || {
        found = detect_convention(dims_list)?;
        Ok(match found {
            Some(c) => Outcome::pass().with_details(json!({ "matched": conv_name(c) })),
            None => Outcome::fail("neither orientation reproduces both product formulas"),
        })
    })];
    let conv = found.unwrap_or(Convention::Standard);
    let basis = pbw4_basis();
    let pair = expand_pair(conv, dims_list);
    for (k, (id, product)) in
        [("tensor4.expand.q13d-q24d", "Q13d*Q24d"), ("tensor4.expand.q24d-q13d", "Q24d*Q13d")].into_iter().enumerate()
    {
        out.push(VerificationReport::run(id, "crossing pair product", &params, || {
            let pair = pair.as_ref().map_err(|e| e.clone())?;
            let got = &pair[k];
            let details = json!({
                "product": product,
                "convention": conv_name(conv),
                "coefficients": coefficient_json(&basis, got),
            });
            let o = match mismatch(&basis, got, &crossing_pair_formula(k == 1)) {
                None => Outcome::pass(),
                Some(w) => Outcome::fail(w),
            };
            Ok(o.with_details(details))
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_convention_reproduces_both_products() {
        let dims = vec![vec![2, 2, 2, 2]];
        assert_eq!(detect_convention(&dims).unwrap(), Some(Convention::Standard));
        for r in verify_crossing_pair(&dims) {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
    }

    #[test]
    fn decorated_pairs_commute() {
        for r in verify_commuting_pairs(&[2, 2, 2, 2]) {
            assert!(r.is_pass(), "{} {:?}", r.check_id, r.witness);
        }
    }

    #[test]
    fn same_decoration_pair_does_not_commute() {
        let mut t = CasimirTable::new(Convention::Standard);
        let a = t.get(&labels("Q13d")[0], &[2, 2, 2, 2]).unwrap();
        let b = t.get(&labels("Q24d")[0], &[2, 2, 2, 2]).unwrap();
        assert!(!a.commutator(&b).is_zero());
    }
}
