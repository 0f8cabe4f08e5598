//! Acceptance criteria, one test each. Every test prints a `[PASS]` or
//! `[FAIL]` line with its runtime (visible with `--nocapture`).

mod common;

use std::time::{Duration, Instant};

use common::*;
use leaflang::barrington::{gadget, select_convention, Convention, CONVENTION};
use leaflang::cardinal::CardinalFailure;
use leaflang::classify::classify_with_cap;
use leaflang::monoid::DEFAULT_MONOID_CAP;
use leaflang::{
    barrington_accepts, bleaf_accepts, bottleneck_fold, cardinal_spec_of, catalog, compile, evaluate_product,
    leaf_string, pad_to_balanced, search_reduction, transition_monoid, Acceptor, Alphabet, CardinalSpec, Dfa,
    SearchBounds, SearchOutcome, Verdict, S5,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Runs `body`, prints the verdict line, and fails on a panic or a blown budget.
fn criterion(id: u32, title: &str, budget: Duration, body: impl FnOnce() + std::panic::UnwindSafe) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed < budget;
    println!(
        "[{}] criterion {id}: {title} ({:.3}s, budget {:.0}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
    assert!(elapsed < budget, "criterion {id} took {elapsed:?}, budget {budget:?}");
}

#[test]
fn criterion_1_gadget_identities() {
    criterion(1, "NOR gadget identities", Duration::from_secs(1), || {
        use gadget::*;
        assert_eq!(select_convention(), vec![CONVENTION]);
        assert_eq!(CONVENTION, Convention::LeftToRight);
        assert_eq!(b(), "(23)(45)".parse::<S5>().unwrap());
        assert_eq!(a1(), "(12345)".parse::<S5>().unwrap());
        let w = |x, y| CONVENTION.product(&w_word(x, y));
        assert_eq!(w(a0(), a0()), a1());
        assert_eq!(w(a0(), a1()), a0());
        assert_eq!(w(a1(), a0()), a0());
        assert_eq!(w(a1(), a1()), a0());
    });
}

#[test]
fn criterion_2_permutation_program_soundness() {
    criterion(2, "permutation program soundness", Duration::from_secs(30), || {
        let formulas = formulas_up_to(3, 3);
        assert_eq!(formulas.len(), 21_765);
        for phi in &formulas {
            for bits in assignments(3) {
                assert_eq!(barrington_accepts(phi, &bits).unwrap(), truth(phi, &bits), "{phi} on {bits:?}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let vars = rng.gen_range(1..=8);
            let phi = random_formula(&mut rng, vars, 5);
            for bits in assignments(vars) {
                assert_eq!(barrington_accepts(&phi, &bits).unwrap(), truth(&phi, &bits), "{phi} on {bits:?}");
            }
        }
        for d in 0..=3u32 {
            let phi = full_nor_tree(d as usize, &mut 0);
            let padded = pad_to_balanced(&compile(&phi));
            assert_eq!(padded.leaf_count(), 16u64.pow(d));
            assert_eq!(padded.flatten().len() as u64, 16u64.pow(d));
        }
    });
}

#[test]
fn criterion_3_bottleneck_fold() {
    criterion(3, "bottleneck fold equals product", Duration::from_secs(5), || {
        let all = S5::all();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let len = rng.gen_range(1..=64);
            let seq: Vec<S5> = (0..len).map(|_| all[rng.gen_range(0..all.len())]).collect();
            assert_eq!(bottleneck_fold(&seq), evaluate_product(&seq));
        }
    });
}

#[test]
fn criterion_4_classifier_fixed_points() {
    criterion(4, "classifier fixed points", Duration::from_secs(10), || {
        let cases = [
            ("U", vec![], Some(true), true, Verdict::WithinPh),
            ("par", vec![], Some(false), true, Verdict::WithinModph),
            ("A", vec![2], Some(true), true, Verdict::WithinPh),
            ("s5_word", vec![], Some(false), false, Verdict::EqualsPspace),
        ];
        for (name, params, aperiodic, solvable, verdict) in cases {
            let a = catalog(name, &params).unwrap();
            let c = classify_with_cap(&a, DEFAULT_MONOID_CAP).unwrap();
            assert_eq!(c.evidence.aperiodic, aperiodic, "{name}");
            assert_eq!(c.evidence.solvable, Some(solvable), "{name}");
            assert_eq!(c.algebraic, Some(verdict), "{name}");
            let dfa = a.to_dfa().unwrap().minimize();
            let (size, longest) = closure_oracle(&dfa);
            assert_eq!(c.evidence.monoid_size, Some(size), "{name}");
            assert_eq!(transition_monoid(&dfa, DEFAULT_MONOID_CAP).unwrap().len(), size, "{name}");
            // A₂'s monoid needs words of length 10; the oracle saturates instead of stopping at 4.
            if name != "A" {
                assert!(longest <= 4, "{name} needs words of length {longest}");
            }
            println!("    {name}: monoid size {size}, longest generating word {longest}");
        }
    });
}

#[test]
fn criterion_5_machine_operator_equivalence() {
    criterion(5, "leaf machine and operator agree", Duration::from_secs(10), || {
        let machines = registered_machines();
        let distinct: std::collections::BTreeSet<&str> = machines.iter().map(|r| r.machine.name()).collect();
        assert_eq!(distinct.len(), 5);
        assert_eq!(machines.iter().filter(|r| r.machine.name() == "sat").count(), 10);
        let inputs: Vec<_> = Alphabet::binary().words_up_to(6).collect();
        for r in &machines {
            for b in &r.acceptors {
                check_equivalence(&r.machine, b, &inputs);
            }
        }
    });
}

#[test]
fn criterion_6_quantifiers_match_model_counts() {
    criterion(6, "quantifier languages match model counts", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sample = cnf_sample(&mut rng, 500, 4, 6);
        assert_eq!(sample.len(), 500);
        let langs: Vec<Acceptor> = ["E", "us", "maj", "par"].iter().map(|n| catalog(n, &[]).unwrap()).collect();
        for raw in &sample {
            let machine = leaflang::sat_machine(&to_cnf(raw)).unwrap();
            let count = count_models(raw);
            let total = 1u64 << raw.0;
            assert_eq!(leaf_string(&machine, &[]).unwrap().iter().filter(|&&l| l == 1).count() as u64, count);
            let expected = [count >= 1, count == 1, 2 * count > total, count % 2 == 1];
            for (b, want) in langs.iter().zip(expected) {
                assert_eq!(bleaf_accepts(&machine, b, &[]).unwrap(), want, "{} on {raw:?}", b.name());
            }
        }
    });
}

#[test]
fn criterion_7_cardinal_fixed_points() {
    criterion(7, "cardinal reduction fixed points", Duration::from_secs(30), || {
        let e = cardinal_spec_of(&catalog("E", &[]).unwrap(), 8).unwrap();
        let u = cardinal_spec_of(&catalog("U", &[]).unwrap(), 8).unwrap();
        let maj = CardinalSpec::majority(2, 1).unwrap();
        assert_eq!(e.threshold(), Some(1));
        assert_eq!(u.threshold(), Some(1));

        let found = search_reduction::<BigUint>(&e, &maj, &SearchBounds::new(vec![1, 1], 2, 10)).unwrap();
        let w = found.witness().expect("E reduces to maj");
        let one = BigUint::from(1u32);
        assert_eq!(w.combos[0].terms(), &[(vec![0, 0], one.clone())]);
        assert_eq!(w.combos[1].terms(), &[(vec![0, 1], BigUint::from(2u32))]);

        let none = search_reduction::<BigUint>(&u, &e, &SearchBounds::new(vec![2, 2], 4, 12)).unwrap();
        assert!(matches!(none, SearchOutcome::NoneWithinBounds { alpha_max: 4, grid: 12, .. }), "{none:?}");

        let par = catalog("par", &[]).unwrap();
        assert!(matches!(cardinal_spec_of(&par, 8), Err(CardinalFailure::NoThreshold { m_max: 8 })));
    });
}

#[test]
fn criterion_8_monoid_engine_speed() {
    criterion(8, "monoid engine on 5-state DFAs", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut dfas: Vec<Dfa> = (0..300)
            .map(|_| {
                let delta = (0..10).map(|_| rng.gen_range(0..5)).collect();
                let accepting = (0..5).map(|_| rng.gen()).collect();
                Dfa::new(2, 0, accepting, delta).unwrap()
            })
            .collect();
        // Letters act as a 5-cycle and a transposition: the whole of S5.
        let s5 = Dfa::new(2, 0, vec![true, false, false, false, false], vec![1, 1, 2, 0, 3, 2, 4, 3, 0, 4]).unwrap();
        let s5_class = classify_with_cap(&Acceptor::regular("s5", Alphabet::binary(), s5.clone()).unwrap(), DEFAULT_MONOID_CAP);
        assert_eq!(s5_class.unwrap().algebraic, Some(Verdict::EqualsPspace));
        dfas.push(s5);
        // A 5-cycle and a rank-4 collapse.
        dfas.push(Dfa::new(2, 0, vec![true, false, true, false, false], vec![1, 0, 2, 1, 3, 2, 4, 3, 0, 0]).unwrap());
        let bin = Alphabet::binary();
        let mut slowest = Duration::ZERO;
        let mut largest = 0;
        for dfa in dfas {
            let start = Instant::now();
            let a = Acceptor::regular("random", bin.clone(), dfa).unwrap();
            let c = classify_with_cap(&a, DEFAULT_MONOID_CAP).unwrap();
            let elapsed = start.elapsed();
            let size = c.evidence.monoid_size.unwrap();
            assert!(size <= 3125);
            assert!(elapsed < Duration::from_secs(1), "{elapsed:?} for monoid of size {size}");
            slowest = slowest.max(elapsed);
            largest = largest.max(size);
        }
        println!("    largest monoid {largest}, slowest {:.3}s", slowest.as_secs_f64());
    });
}
