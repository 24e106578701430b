use proptest::prelude::*;

use symdyn::decision::{medvedev_zero_witness, nonmembership_semidecide};
use symdyn::pattern::{extensions, occurs_in};
use symdyn::subshift::{metric_d, Dyadic};
use symdyn::{Alphabet, Certificate, FuelVerdict, GroupCtx, Pattern, Sft, Symbol, Word};

fn word_strategy(letters: &'static str, max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(proptest::sample::select(letters.chars().collect::<Vec<_>>()), 0..=max)
        .prop_map(|cs| cs.into_iter().collect())
}

fn sft_strategy() -> impl Strategy<Value = Sft> {
    proptest::collection::vec(proptest::collection::vec(0u16..2, 1..=3), 0..=3).prop_map(|words| {
        let z = GroupCtx::zd(1).unwrap();
        let pats = words
            .iter()
            .map(|w| Pattern::from_run(&z, 0, &w.iter().map(|&s| Symbol(s)).collect::<Vec<_>>()).unwrap())
            .collect();
        Sft::from_patterns(&z, &Alphabet::numeric(2).unwrap(), pats).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_forms_respect_group_laws(u in word_strategy("aAbB", 8), v in word_strategy("aAbB", 8)) {
        for ctx in [GroupCtx::zd(2).unwrap(), GroupCtx::free(2).unwrap()] {
            let (u, v): (Word, Word) = (ctx.parse_word(&u).unwrap(), ctx.parse_word(&v).unwrap());
            let (gu, gv) = (ctx.canonicalize(&u).unwrap(), ctx.canonicalize(&v).unwrap());
            prop_assert_eq!(ctx.canonicalize(&u.concat(&v)).unwrap(), ctx.mul(&gu, &gv));
            prop_assert_eq!(ctx.mul(&gu, &ctx.inv(&gu)), ctx.identity());
            prop_assert_eq!(ctx.canonicalize(&gu.canonical_word()).unwrap(), gu.clone());
            prop_assert!(gu.length() <= u.len());
        }
    }

    #[test]
    fn rewriting_agrees_with_lattice(u in word_strategy("aAbB", 5), v in word_strategy("aAbB", 5)) {
        // <a, b | [a, b]> is Z^2: a rewriting proof implies canonical equality.
        let pres = GroupCtx::presented(&['a', 'b'], &["abAB"]).unwrap();
        let z2 = GroupCtx::zd(2).unwrap();
        let (pu, pv) = (pres.parse_word(&u).unwrap(), pres.parse_word(&v).unwrap());
        if let FuelVerdict::CertifiedYes(proof) = pres.equals_semi(&pu, &pv, 3) {
            prop_assert!(pres.check_equality(&pu, &pv, &proof));
            prop_assert_eq!(
                z2.canonicalize(&z2.parse_word(&u).unwrap()).unwrap(),
                z2.canonicalize(&z2.parse_word(&v).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn balls_are_layered(n in 0usize..4) {
        for ctx in [GroupCtx::zd(2).unwrap(), GroupCtx::free(2).unwrap()] {
            let small = ctx.ball(n).unwrap();
            let big = ctx.ball(n + 1).unwrap();
            prop_assert_eq!(&big[..small.len()], &small[..]);
        }
    }

    #[test]
    fn nonmembership_is_sound(x in sft_strategy(), q in proptest::collection::vec(0u16..2, 1..=3), r in 0usize..3) {
        let z = x.ctx().clone();
        let q = Pattern::from_run(&z, 0, &q.into_iter().map(Symbol).collect::<Vec<_>>()).unwrap();
        if let FuelVerdict::CertifiedYes(refutation) = nonmembership_semidecide(&x, &q, r).unwrap() {
            let window = x.window(&q, refutation.margin).unwrap();
            let survivor = extensions(&q, &window, x.alphabet())
                .unwrap()
                .any(|e| !x.forbidden().iter().any(|f| occurs_in(&z, f, &e)));
            prop_assert!(!survivor);
            let cert = Certificate::non_membership(&x, &q, &refutation);
            prop_assert!(cert.verify().is_ok());
        }
    }

    #[test]
    fn metric_is_an_ultrametric(x in sft_strategy(), y in sft_strategy(), w in sft_strategy()) {
        let d = |a: &Sft, b: &Sft| metric_d(a, b, 3, 0).unwrap().distance;
        prop_assert_eq!(d(&x, &x), Dyadic::Zero);
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &w) <= d(&x, &y).max(d(&y, &w)));
    }

    #[test]
    fn greedy_prefixes_are_coherent(x in sft_strategy()) {
        let mut prev: Option<Pattern> = None;
        for n in 0..=4 {
            match medvedev_zero_witness(&x, n) {
                Ok(p) => {
                    if let Some(prev) = &prev {
                        prop_assert_eq!(&p.restrict(prev.support()).unwrap(), prev);
                    }
                    prop_assert!(!x.forbidden().iter().any(|f| occurs_in(x.ctx(), f, &p)));
                    prev = Some(p);
                }
                Err(symdyn::Error::EmptySubshift) => break,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn language_upper_contains_exact(x in sft_strategy(), n in 0usize..3, r in 0usize..3) {
        let exact = x.language_exact_1d(n).unwrap().patterns;
        let upper = x.language_upper(n, r).unwrap().patterns;
        prop_assert!(exact.is_subset(&upper));
    }
}
