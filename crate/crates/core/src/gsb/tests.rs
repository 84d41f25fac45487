use num_rational::BigRational;

use super::*;
use crate::cli::{parse_poly, parse_word};
use crate::lie_poly::{Coefficient, LiePoly};
use crate::lyndon::is_alsw;
use crate::omega_words::{occurrences, Alphabet, OmegaWord, StarWord, WordEnumerator};

fn alpha3() -> Alphabet {
    Alphabet::new(&["x2", "x1", "x0"], &[("P", 1)]).unwrap()
}

fn w(s: &str) -> OmegaWord {
    parse_word(s, &alpha3()).unwrap()
}

fn poly(s: &str) -> LiePoly {
    parse_poly(s, &alpha3()).unwrap()
}

fn rb_pair(u: &str, v: &str) -> LiePoly {
    let a = alpha3();
    preset_rule(PresetKind::RotaBaxter, &a.operators()[0], &w(u), &w(v))
}

fn set_of(polys: &[LiePoly]) -> RuleSet {
    let mut s = RuleSet::new(&alpha3(), LambdaMode::Symbolic);
    for p in polys {
        s.push_monic(p.clone()).unwrap();
    }
    s
}

#[test]
fn preset_rule_shape() {
    let f = rb_pair("x2", "x1");
    let want = poly("(P(x2) P(x1)) - P((P(x2) x1)) - P((x2 P(x1))) - l*P((x2 x1))");
    assert_eq!(f, want);
    assert_eq!(
        f.leading().unwrap(),
        (&w("P(x2) P(x1)"), &Coefficient::one())
    );

    let a = alpha3();
    let op = &a.operators()[0];
    let mrb = preset_rule(PresetKind::ModifiedRotaBaxter, op, &w("x2"), &w("x1"));
    assert_eq!(
        mrb,
        poly("(P(x2) P(x1)) - P((P(x2) x1)) - P((x2 P(x1))) - l*(x2 x1)")
    );
    let nij = preset_rule(PresetKind::Nijenhuis, op, &w("x2"), &w("x1"));
    assert_eq!(
        nij,
        poly("(P(x2) P(x1)) - P((P(x2) x1)) - P((x2 P(x1))) + P(P((x2 x1)))")
    );
}

#[test]
fn preset_family_bounds() {
    let a = alpha3();
    let s = preset_rules(PresetKind::RotaBaxter, &a, 5, LambdaMode::Symbolic).unwrap();
    // u > v among x2, x1, x0 gives 3 rules of degree 4; degree 5 adds
    // u of degree 2 (x2x1, x2x0, x1x0, P(x_i)) over the 3 letters.
    assert_eq!(s.len(), 3 + 6 * 3);
    for r in s.rules() {
        assert!(r.is_monic());
        assert!(r.lead().degree() <= 5);
        assert!(is_alsw(r.lead()));
    }
    let two_ops = Alphabet::new(&["x"], &[("P", 1), ("Q", 1)]).unwrap();
    assert_eq!(
        preset_rules(PresetKind::RotaBaxter, &two_ops, 5, LambdaMode::Symbolic).unwrap_err(),
        GsbError::PresetAlphabet
    );
}

#[test]
fn ambiguity_examples() {
    let s = set_of(&[rb_pair("x2", "x1"), rb_pair("x1", "x0")]);
    let amb = ambiguities(&s, 0, 1);
    assert_eq!(amb.len(), 1);
    assert_eq!(amb[0].w, w("P(x2) P(x1) P(x0)"));
    assert!(amb[0].is_intersection());
    assert!(ambiguities(&s, 1, 0).is_empty());
    assert!(ambiguities(&s, 0, 0).is_empty());

    let s = set_of(&[rb_pair("P(x2) P(x1)", "x0"), rb_pair("x2", "x1")]);
    let amb = ambiguities(&s, 0, 1);
    assert_eq!(amb.len(), 1);
    match &amb[0].kind {
        AmbiguityKind::Inclusion { pi } => assert_eq!(pi.to_string(), "P(*) P(x0)"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn indexed_ambiguities_match_pairwise_scan() {
    let s = preset_rules(PresetKind::RotaBaxter, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
    let mut pairwise = Vec::new();
    for f in 0..s.len() {
        for g in 0..s.len() {
            pairwise.extend(
                ambiguities(&s, f, g)
                    .into_iter()
                    .filter(|a| a.w.degree() <= 7),
            );
        }
    }
    pairwise.sort_by(Ambiguity::canonical_cmp);
    let indexed = all_ambiguities(&s, 7);
    assert!(!indexed.is_empty());
    assert_eq!(indexed, pairwise);
}

#[test]
fn composition_at_triple_overlap_matches_hand_expansion() {
    let s = set_of(&[rb_pair("x2", "x1"), rb_pair("x1", "x0")]);
    let amb = &ambiguities(&s, 0, 1)[0];
    let got = composition(&s, amb).unwrap();
    let want = poly(
        "((P(x2) P(x0)) P(x1)) - (P((P(x2) x1)) P(x0)) - (P((x2 P(x1))) P(x0)) \
         - l*(P((x2 x1)) P(x0)) + (P(x2) P((P(x1) x0))) + (P(x2) P((x1 P(x0)))) \
         + l*(P(x2) P((x1 x0)))",
    );
    assert_eq!(got, want);
    assert!(got.leading().unwrap().0 < &amb.w);
}

#[test]
fn inclusion_at_star_is_difference() {
    let f = rb_pair("x2", "x1");
    let g = f.add(&poly("(x2 x1)"));
    let s = set_of(&[f.clone(), g.clone()]);
    let amb = ambiguities(&s, 0, 1);
    assert_eq!(amb.len(), 1);
    assert_eq!(composition(&s, &amb[0]).unwrap(), f.sub(&g));
}

#[test]
fn special_normal_words_have_monic_leading_word() {
    let s = preset_rules(PresetKind::RotaBaxter, &alpha3(), 6, LambdaMode::Symbolic).unwrap();
    let mut checked = 0;
    for host in WordEnumerator::lyndon(&alpha3()).up_to(7) {
        for id in s.applicable(&host) {
            for pi in occurrences(&host, s.rule(id).lead()) {
                let snw = special_normal_word(&s, &pi, id).unwrap();
                assert_eq!(snw.leading().unwrap(), (&host, &Coefficient::one()));
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
    let pi = StarWord::star();
    assert_eq!(&special_normal_word(&s, &pi, 0).unwrap(), s.rule(0).poly());
}

#[test]
fn reduce_examples() {
    let f = rb_pair("x2", "x1");
    let single = set_of(&[f.clone()]);
    assert!(single.reduce(&f).is_zero());

    let rb = preset_rules(PresetKind::RotaBaxter, &alpha3(), 6, LambdaMode::Symbolic).unwrap();
    let h = poly("(P(x2) P(x1))");
    let nf = rb.reduce(&h);
    assert_eq!(nf, poly("P((P(x2) x1)) + P((x2 P(x1))) + l*P((x2 x1))"));
    assert_eq!(rb.reduce(&nf), nf);

    let irr = poly("P((x2 x1)) + 3*x0");
    assert_eq!(rb.reduce(&irr), irr);
}

#[test]
fn reduction_trace_descends() {
    let rb = preset_rules(PresetKind::RotaBaxter, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
    let h = poly("((P(x2) P(x1)) P(x0)) + P((P(x2) P(x0)))");
    let (nf, steps) = rb.reduce_traced(&h);
    for pair in steps.windows(2) {
        assert!(pair[1].word < pair[0].word);
    }
    for (word, _) in nf.terms() {
        assert!(!rb.is_reducible(word));
    }
    assert_eq!(rb.reduce(&nf), nf);
}

#[test]
fn presets_verify_with_three_generators() {
    for kind in [
        PresetKind::RotaBaxter,
        PresetKind::ModifiedRotaBaxter,
        PresetKind::Nijenhuis,
    ] {
        let s = preset_rules(kind, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
        let reports = check_gsb(&s, 7).unwrap();
        assert!(!reports.is_empty(), "{kind}");
        for r in &reports {
            assert!(r.trivial, "{kind}: {} -> {}", r.ambiguity, r.normal_form);
            if let Ok((lw, _)) = r.composition.leading() {
                assert!(lw < &r.ambiguity.w);
            }
        }
        let assoc = assoc_check(&s, 7).unwrap();
        assert_eq!(assoc.len(), reports.len());
        assert!(assoc.iter().all(|r| r.trivial), "{kind}");
    }
}

#[test]
fn perturbed_family_is_not_a_basis() {
    let s = preset_rules(PresetKind::Perturbed, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
    let lie = check_gsb(&s, 7).unwrap();
    let assoc = assoc_check(&s, 7).unwrap();
    assert!(lie.iter().any(|r| !r.trivial));
    assert!(assoc.iter().any(|r| !r.trivial));

    let done = complete(&s, 7).unwrap();
    assert!(!done.added.is_empty());
    assert!(done.rules.len() > s.len());
    assert!(check_gsb(&done.rules, 7).unwrap().iter().all(|r| r.trivial));
}

#[test]
fn completion_keeps_a_basis() {
    let s = preset_rules(PresetKind::RotaBaxter, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
    let done = complete(&s, 7).unwrap();
    assert!(done.added.is_empty());
    assert_eq!(done.rules.len(), s.len());
    for (a, b) in s.rules().iter().zip(done.rules.rules()) {
        assert_eq!(a.lead(), b.lead());
    }
    assert_eq!(irr_counts(&done.rules, 7), irr_counts(&s, 7));

    let single = set_of(&[rb_pair("x2", "x1")]);
    let done = complete(&single, 8).unwrap();
    assert_eq!(done.rules.len(), 1);
    assert_eq!(done.rules.rule(0).poly(), single.rule(0).poly());
}

#[test]
fn irr_membership() {
    let s = preset_rules(PresetKind::RotaBaxter, &alpha3(), 6, LambdaMode::Symbolic).unwrap();
    let irr = irr_enumerate(&s, 6);
    assert!(irr[0].contains(&w("x0")));
    assert!(!irr[3].contains(&w("P(x2) P(x1)")));
    assert!(irr[2].contains(&w("P(x2 x1)")));
    for (n, ws) in irr.iter().enumerate() {
        for u in ws {
            assert_eq!(u.degree(), n + 1);
            assert!(is_alsw(u) && !s.is_reducible(u));
        }
    }
}

#[test]
fn oracle_on_empty_set_counts_alsw() {
    let a = Alphabet::new(&["x2", "x1"], &[("P", 1)]).unwrap();
    let s = RuleSet::new(&a, LambdaMode::Symbolic);
    let mut words = WordEnumerator::lyndon(&a);
    let want: Vec<usize> = (1..=5).map(|n| words.words(n).len()).collect();
    assert_eq!(dim_oracle(&s, 5).unwrap(), want);
    assert_eq!(irr_counts(&s, 5), want);
}

#[test]
fn oracle_agrees_with_irr_for_two_generators() {
    let a = Alphabet::new(&["x2", "x1"], &[("P", 1)]).unwrap();
    for kind in [PresetKind::RotaBaxter, PresetKind::Nijenhuis] {
        let s = preset_rules(kind, &a, 5, LambdaMode::Symbolic).unwrap();
        assert_eq!(dim_oracle(&s, 5).unwrap(), irr_counts(&s, 5), "{kind}");
    }
}

#[test]
fn verdicts_do_not_depend_on_lambda() {
    let base = preset_rules(PresetKind::RotaBaxter, &alpha3(), 7, LambdaMode::Symbolic).unwrap();
    let symbolic: Vec<bool> = check_gsb(&base, 7)
        .unwrap()
        .iter()
        .map(|r| r.trivial)
        .collect();
    for (n, d) in [(0, 1), (1, 1), (-1, 1), (2, 3)] {
        let at = BigRational::new(n.into(), d.into());
        let s = preset_rules(
            PresetKind::RotaBaxter,
            &alpha3(),
            7,
            LambdaMode::Specialized(at.clone()),
        )
        .unwrap();
        let v: Vec<bool> = check_gsb(&s, 7)
            .unwrap()
            .iter()
            .map(|r| r.trivial)
            .collect();
        assert_eq!(v, symbolic, "λ = {at}");
        let v: Vec<bool> = check_gsb(&base.specialize(&at), 7)
            .unwrap()
            .iter()
            .map(|r| r.trivial)
            .collect();
        assert_eq!(v, symbolic, "λ = {at}");
    }
}

#[test]
fn empty_and_non_monic_sets() {
    let s = RuleSet::new(&alpha3(), LambdaMode::Symbolic);
    assert!(assoc_check(&s, 6).unwrap().is_empty());
    assert!(check_gsb(&s, 6).unwrap().is_empty());

    let mut s = RuleSet::new(&alpha3(), LambdaMode::Symbolic);
    s.push(rb_pair("x2", "x1").scale(&Coefficient::from_int(2)))
        .unwrap();
    assert_eq!(check_gsb(&s, 6).unwrap_err(), GsbError::NonMonicRule(0));
    assert_eq!(assoc_check(&s, 6).unwrap_err(), GsbError::NonMonicRule(0));
    assert_eq!(s.push(LiePoly::zero()).unwrap_err(), GsbError::ZeroRule);
    let lam = LiePoly::term(w("P(x2)"), Coefficient::lambda());
    assert!(matches!(
        s.push_monic(lam),
        Err(GsbError::Lie(
            crate::lie_poly::LieError::NonConstantLeadingCoefficient(_)
        ))
    ));
}
