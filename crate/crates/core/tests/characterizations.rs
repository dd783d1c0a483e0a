mod support;

use gradex_core::coeff::RingSpec;
use gradex_core::decide::{epsilon_crossed_verdict, is_strong, Answer};
use gradex_core::grading::VeryGoodGrading;
use rand::rngs::StdRng;
use rand::SeedableRng;
use support::{characterization_suite, check_instance, exhaustive_equivalence, random_instance};

#[test]
fn locally_strong_matches_brute_force_on_small_groups() {
    // Z/2: 1 + 2 + 4 tuples, Z/3: 1 + 3 + 9 tuples, each checked at every g.
    let checked = exhaustive_equivalence(&["Z/2", "Z/3"], 3).unwrap();
    assert_eq!(checked, 2 * 7 + 3 * 13);
}

#[test]
fn random_instances_are_consistent() {
    characterization_suite(200, 6, 11).unwrap();
}

#[test]
fn verdicts_re_verify_on_random_instances() {
    let q = RingSpec::rationals();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        let vg = random_instance(&mut rng, 5);
        check_instance(&vg).unwrap();
        let d = gradex_core::grading::GradingDescriptor::VeryGood(vg.clone());
        for v in [
            is_strong(&vg).unwrap(),
            epsilon_crossed_verdict(&vg, &q).unwrap(),
        ] {
            assert!(v.verify(&d, &q).unwrap(), "{v:?}");
        }
    }
}

#[test]
fn unequal_classes_over_leavitt_stay_unknown() {
    let l: RingSpec = "L(1,2)".parse().unwrap();
    let vg = VeryGoodGrading::parse("Z/2".parse().unwrap(), &["0", "0", "1"]).unwrap();
    assert_eq!(
        epsilon_crossed_verdict(&vg, &l).unwrap().answer,
        Answer::Unknown
    );
    let vg = VeryGoodGrading::parse("Z/2".parse().unwrap(), &["0", "1"]).unwrap();
    assert_eq!(
        epsilon_crossed_verdict(&vg, &l).unwrap().answer,
        Answer::Yes
    );
}
