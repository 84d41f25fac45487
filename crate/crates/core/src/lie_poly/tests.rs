use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::cli::{parse_poly, parse_tree, parse_word};
use crate::lyndon::std_bracket;
use crate::omega_words::{Alphabet, WordEnumerator};

fn alpha() -> Alphabet {
    Alphabet::new(&["x2", "x1", "x"], &[("P", 1), ("w", 2)]).unwrap()
}

fn w(s: &str) -> OmegaWord {
    parse_word(s, &alpha()).unwrap()
}

fn assoc(terms: &[(i64, &str)]) -> AssocPoly {
    let mut p = AssocPoly::zero();
    for (c, s) in terms {
        p.add_term(w(s), &Coefficient::from_int(*c));
    }
    p
}

#[test]
fn expand_examples() {
    assert_eq!(
        LiePoly::basis(w("x2 x1")).expand(),
        assoc(&[(1, "x2 x1"), (-1, "x1 x2")])
    );
    assert_eq!(LiePoly::basis(w("x")).expand(), assoc(&[(1, "x")]));
    assert_eq!(
        LiePoly::basis(w("x2 x1 x1")).expand(),
        assoc(&[(1, "x2 x1 x1"), (-2, "x1 x2 x1"), (1, "x1 x1 x2")])
    );
}

#[test]
fn to_nlsw_examples() {
    let q = assoc(&[(1, "x2 x1"), (-1, "x1 x2")]);
    assert_eq!(to_nlsw(&q).unwrap(), LiePoly::basis(w("x2 x1")));
    assert_eq!(
        to_nlsw(&assoc(&[(1, "x1 x2")])),
        Err(LieError::NotLieElement(w("x1 x2")))
    );
    assert!(to_nlsw(&AssocPoly::zero()).unwrap().is_zero());
}

#[test]
fn bracket_examples() {
    let x2 = LiePoly::basis(w("x2"));
    let x1 = LiePoly::basis(w("x1"));
    assert_eq!(x2.bracket(&x1), LiePoly::basis(w("x2 x1")));
    assert_eq!(x1.bracket(&x2), LiePoly::basis(w("x2 x1")).neg());
    assert!(x2.bracket(&x2).is_zero());
}

#[test]
fn apply_op_examples() {
    let a = alpha();
    let p = a.operator("P").unwrap();
    let px = LiePoly::apply_op(p, &[&LiePoly::basis(w("x"))]).unwrap();
    assert_eq!(px, LiePoly::basis(w("P(x)")));

    let arg = LiePoly::basis(w("x2 x1"))
        .scale(&Coefficient::from_int(2))
        .add(&LiePoly::basis(w("x1")));
    let got = LiePoly::apply_op(p, &[&arg]).unwrap();
    let mut want = LiePoly::basis(w("P(x2 x1)")).scale(&Coefficient::from_int(2));
    want = want.add(&LiePoly::basis(w("P(x1)")));
    assert_eq!(got, want);

    let op2 = a.operator("w").unwrap();
    let z = LiePoly::apply_op(op2, &[&LiePoly::basis(w("x")), &LiePoly::zero()]).unwrap();
    assert!(z.is_zero());
    assert!(matches!(
        LiePoly::apply_op(op2, &[&LiePoly::basis(w("x"))]),
        Err(LieError::ArityMismatch {
            expected: 2,
            found: 1,
            ..
        })
    ));
}

#[test]
fn from_tree_examples() {
    let a = alpha();
    let t = |s: &str| LiePoly::from_tree(&parse_tree(s, &a).unwrap()).unwrap();
    assert_eq!(t("(x1 x2)"), LiePoly::basis(w("x2 x1")).neg());
    assert_eq!(t("((x2 x1) x1)"), LiePoly::basis(w("x2 x1 x1")));
    assert!(t("P((x x))").is_zero());
}

#[test]
fn leading_and_monic() {
    let p =
        LiePoly::basis(w("x2 x1")).add(&LiePoly::basis(w("x1")).scale(&Coefficient::from_int(5)));
    let (lw, c) = p.leading().unwrap();
    assert_eq!((lw, c), (&w("x2 x1"), &Coefficient::one()));

    let lp = LiePoly::term(w("P(x)"), Coefficient::lambda());
    assert_eq!(lp.leading().unwrap().1, &Coefficient::lambda());
    assert!(matches!(
        lp.normalize_monic(),
        Err(LieError::NonConstantLeadingCoefficient(_))
    ));
    assert_eq!(LiePoly::zero().leading(), Err(LieError::ZeroPolynomial));

    let three = LiePoly::basis(w("x")).scale(&Coefficient::from_int(3));
    assert_eq!(three.normalize_monic().unwrap(), LiePoly::basis(w("x")));
    assert_eq!(p.normalize_monic().unwrap(), p);
}

#[test]
fn display_round_trips_through_the_parser() {
    let a = alpha();
    let p = parse_poly("3/2*l*P((x2 x1)) - (x2 x1) + l^2*x", &a).unwrap();
    assert_eq!(p.to_string(), "3/2*l*P((x2 x1)) - (x2 x1) + l^2*x");
    assert_eq!(parse_poly(&p.to_string(), &a).unwrap(), p);
}

#[test]
fn specialize_evaluates_lambda() {
    let a = alpha();
    let p = parse_poly("l*x2 + x2 - 2*x1", &a).unwrap();
    let q = p.specialize(&BigRational::from_integer((-1).into()));
    assert_eq!(q, LiePoly::basis(w("x1")).scale(&Coefficient::from_int(-2)));
}

fn small_alphabet() -> Alphabet {
    Alphabet::new(&["x2", "x1"], &[("P", 1)]).unwrap()
}

fn alsw_up_to(n: usize) -> Vec<OmegaWord> {
    WordEnumerator::lyndon(&small_alphabet()).up_to(n)
}

fn arb_lie(maxdeg: usize, max_terms: usize) -> impl Strategy<Value = LiePoly> {
    let basis = alsw_up_to(maxdeg);
    prop::collection::vec((0..basis.len(), -3i64..=3, 0usize..2), 1..=max_terms).prop_map(
        move |terms| {
            let mut p = LiePoly::zero();
            for (i, c, k) in terms {
                let coeff = Coefficient::monomial(BigRational::from_integer(c.into()), k);
                p.add_scaled(&LiePoly::basis(basis[i].clone()), &coeff);
            }
            p
        },
    )
}

#[test]
fn leading_word_of_every_standard_bracketing() {
    for u in alsw_up_to(6) {
        let e = LiePoly::from_tree(&std_bracket(&u).unwrap())
            .unwrap()
            .expand();
        let (lw, c) = e.leading().unwrap();
        assert_eq!(lw, &u);
        assert!(c.is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roundtrip(p in arb_lie(6, 4)) {
        prop_assert_eq!(to_nlsw(&p.expand()).unwrap(), p);
    }

    #[test]
    fn antisymmetry(p in arb_lie(4, 3), q in arb_lie(4, 3)) {
        prop_assert!(p.bracket(&q).add(&q.bracket(&p)).is_zero());
    }

    #[test]
    fn jacobi(p in arb_lie(3, 2), q in arb_lie(3, 2), r in arb_lie(3, 2)) {
        let lhs = p.bracket(&q).bracket(&r);
        let rhs = p.bracket(&r).bracket(&q).add(&p.bracket(&q.bracket(&r)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_compatibility(p in arb_lie(6, 4)) {
        prop_assume!(!p.is_zero());
        let e = p.expand();
        let (w1, c1) = p.leading().unwrap();
        let (w2, c2) = e.leading().unwrap();
        prop_assert_eq!(w1, w2);
        prop_assert_eq!(c1, c2);
    }
}
