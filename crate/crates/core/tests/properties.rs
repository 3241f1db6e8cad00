use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use aww_core::coeff::{LaurentPoly, Symbol};
use aww_core::daha::{self, Character};
use aww_core::label::{parse_dims, parse_product, Decoration, LoopLabel};
use aww_core::nc::aw::Algebra;
use aww_core::nc::{NcPoly, Strategy as Rewrite};
use aww_core::quantum::realize::Triple;
use aww_core::quantum::{braid_act, BraidWord};
use aww_core::skein::{generator_loops, half_dehn_twist, phi, reduce, SkeinElement};
use aww_core::weyl;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    let syms = [Symbol::Qh, Symbol::U, Symbol::Z1h];
    let term = (-4i32..=4, -2i32..=2, -1i32..=1, -6i64..=6, 1i64..=3).prop_map(move |(a, b, c, n, d)| {
        let mut e = [0i32; 8];
        e[syms[0].index()] = a;
        e[syms[1].index()] = b;
        e[syms[2].index()] = c;
        LaurentPoly::monomial(e, rat(n, d))
    });
    prop::collection::vec(term, 0..5).prop_map(|ts| ts.into_iter().fold(LaurentPoly::zero(), |a, t| a + t))
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 1..=max_len)
}

fn braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1usize..=2, prop::bool::ANY), 0..=max_len)
        .prop_map(|ls| BraidWord::new(ls.into_iter().map(|(g, inv)| (g, if inv { -1 } else { 1 })).collect()))
}

fn label(n: usize) -> impl Strategy<Value = LoopLabel> {
    (prop::collection::btree_set(1..=n, 1..=n), prop::bool::ANY).prop_map(|(set, up)| {
        let set: Vec<usize> = set.into_iter().collect();
        let contiguous = set.windows(2).all(|w| w[1] == w[0] + 1);
        let deco = match (contiguous, up) {
            (true, _) => Decoration::Plain,
            (false, true) => Decoration::Up,
            (false, false) => Decoration::Down,
        };
        LoopLabel::new(set, deco).unwrap()
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((a.clone() * b.clone()).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((a.clone() * b.clone()).bar(), a.bar() * b.bar());
    }

    #[test]
    fn evaluation_is_multiplicative(a in laurent(), b in laurent(), n in 1i64..5, d in 1i64..5) {
        let pt = [(Symbol::Qh, rat(n, d)), (Symbol::U, rat(d + 1, n)), (Symbol::Z1h, rat(3, 2))];
        let lhs = (a.clone() * b.clone()).eval(&pt).unwrap();
        let rhs = a.eval(&pt).unwrap() * b.eval(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dims_round_trip(d in prop::collection::vec(1usize..=64, 1..6)) {
        let s = d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_dims(&s).unwrap(), d);
    }

    #[test]
    fn braid_word_round_trip(w in braid(8)) {
        let back: BraidWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn labels_and_products_round_trip(ls in prop::collection::vec(label(4), 1..5)) {
        for l in &ls {
            prop_assert_eq!(&LoopLabel::parse_with_prefix(&l.display('A'), 'A').unwrap(), l);
        }
        let text = ls.iter().map(|l| l.display('Q')).collect::<Vec<_>>().join("*");
        prop_assert_eq!(parse_product(&text, 'Q').unwrap(), ls);
    }

    #[test]
    fn parsers_reject_garbage_without_panicking(s in "\\PC{0,24}") {
        let _ = parse_dims(&s);
        let _ = s.parse::<BraidWord>();
        let _ = LoopLabel::parse_with_prefix(&s, 'A');
        let _ = parse_product(&s, 'Q');
        let _ = s.parse::<LaurentPoly>();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriting_is_strategy_independent(w in word(6)) {
        for alg in [Algebra::Aw3, Algebra::Saw3, Algebra::Zh] {
            let sys = alg.system();
            let x = NcPoly::word(&w);
            let (a, _) = sys.normalize_with(&x, Rewrite::Leftmost).unwrap();
            let (b, _) = sys.normalize_with(&x, Rewrite::Rightmost).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(sys.normalize(&a).unwrap(), a);
        }
    }

    #[test]
    fn normal_forms_are_linear_and_multiplicative(u in word(3), v in word(3)) {
        let sys = Algebra::Aw3.system();
        let (x, y) = (NcPoly::word(&u), NcPoly::word(&v));
        let n = |p: &NcPoly| sys.normalize(p).unwrap();
        prop_assert_eq!(n(&x.add(&y)), n(&n(&x).add(&n(&y))));
        prop_assert_eq!(n(&x.mul(&y)), n(&n(&x).mul(&n(&y))));
    }

    #[test]
    fn normal_form_agrees_with_the_tensor_realization(w in word(4)) {
        let t = Triple::new(&[2, 2, 2]).unwrap();
        let x = NcPoly::word(&w);
        for alg in [Algebra::Aw3, Algebra::Saw3] {
            let nf = alg.system().normalize(&x).unwrap();
            prop_assert!(t.realize(&x).sub(&t.realize(&nf)).is_zero());
        }
    }

    #[test]
    fn daha_characters_are_multiplicative(u in word(4), v in word(4), k in prop::array::uniform3(2i64..9)) {
        let chi = Character::new(2, k);
        let (x, y) = (NcPoly::word(&u), NcPoly::word(&v));
        prop_assert_eq!(chi.eval(&x.mul(&y)).unwrap(), chi.eval(&x).unwrap() * chi.eval(&y).unwrap());
        for (_, ax) in daha::axioms() {
            prop_assert_eq!(chi.eval(&ax).unwrap(), BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn twists_invert(w in braid(4), i in 0usize..7) {
        let l = generator_loops()[i % generator_loops().len()].clone();
        let x = SkeinElement::loop_(3, l);
        let y = half_dehn_twist(&w, &x).unwrap();
        prop_assert_eq!(half_dehn_twist(&w.inverse(), &y).unwrap(), reduce(&x).unwrap());
    }

    #[test]
    fn braid_conjugation_inverts(w in braid(3), i in 0usize..7) {
        let dims = [2, 3, 2];
        let l = generator_loops()[i % generator_loops().len()].clone();
        let x = SkeinElement::loop_(3, l);
        let t = Triple::new(&w.preimage_dims(&dims)).unwrap();
        let m = t.realize(&phi(&x).unwrap());
        let (d, img) = braid_act(&w, &w.preimage_dims(&dims), &m).unwrap();
        prop_assert_eq!(&d[..], &dims[..]);
        let (d0, back) = braid_act(&w.inverse(), &d, &img).unwrap();
        prop_assert_eq!(d0, w.preimage_dims(&dims));
        prop_assert!(back.sub(&m).is_zero());
    }

    #[test]
    fn weyl_generators_are_involutions(m in prop::array::uniform4(-6i64..6)) {
        let start = weyl::orbit(m).unwrap();
        for g in weyl::generators() {
            prop_assert!(g.mul(&g).is_identity());
            let image = g.act(&start[0]);
            prop_assert!(start.contains(&image));
        }
    }
}
