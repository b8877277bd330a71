//! Cross-checks between the closed-form predictor and the brute-force
//! character-theoretic oracle at small scopes. Larger campaigns live in
//! the CLI's verification suites.

use sylow_branching::branching::{
    m_of_label, predict_omega, Membership, OmegaDescription,
};
use sylow_branching::characters::{omega_oracle, omega_table};
use sylow_branching::partitions::{all_partitions, box_set};
use sylow_branching::wreath::{
    orbit_representatives, Label, MultisetLabel, SequenceLabel, DEFAULT_GROUP_BUDGET,
};

#[test]
fn predictor_matches_oracle_at_single_layer_groups() {
    for p in [3u32, 5, 7] {
        for s in orbit_representatives(p, 1).unwrap() {
            let label = Label::PrimePower(s);
            let omega = omega_oracle(&label, DEFAULT_GROUP_BUDGET).unwrap();
            let desc = predict_omega(&label);
            assert!(desc.is_exact());
            assert_eq!(desc.enumerate().unwrap(), omega, "{label}");
        }
    }
}

#[test]
fn oracle_sets_are_conjugation_closed() {
    for entries in [[0u32, 0], [0, 1], [1, 0], [2, 2]] {
        let label = Label::PrimePower(SequenceLabel::new(3, entries.to_vec()).unwrap());
        let omega = omega_oracle(&label, DEFAULT_GROUP_BUDGET).unwrap();
        assert!(omega.is_conjugation_closed(), "{label}");
    }
}

#[test]
fn composite_two_factor_prediction_at_p5() {
    // n = 10 = 5 + 5: both factors of length 1
    let ms = MultisetLabel::new(
        5,
        10,
        vec![
            SequenceLabel::new(5, vec![0]).unwrap(),
            SequenceLabel::new(5, vec![1]).unwrap(),
        ],
    )
    .unwrap();
    let label = Label::Composite(ms);
    assert_eq!(m_of_label(&label), 9);
    let omega = omega_oracle(&label, DEFAULT_GROUP_BUDGET).unwrap();
    assert_eq!(omega, box_set(10, 9).unwrap());
    let desc = predict_omega(&label);
    assert_eq!(desc.enumerate().unwrap(), omega);
}

#[test]
fn membership_agrees_with_enumeration_on_exact_descriptions() {
    let label = Label::PrimePower(SequenceLabel::new(5, vec![1, 2]).unwrap());
    let desc = predict_omega(&label);
    let table = omega_table(&label, DEFAULT_GROUP_BUDGET).unwrap();
    match &desc {
        OmegaDescription::Exact { .. } => {
            for lam in all_partitions(25).unwrap() {
                let predicted = desc.membership(&lam) == Membership::In;
                assert_eq!(predicted, table.contains_key(&lam), "{lam}");
            }
        }
        _ => panic!("expected an exact description at (5,2)"),
    }
}
