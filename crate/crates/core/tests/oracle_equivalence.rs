use interval_rules::oracle::{closed_by_subsets, from_closed, reference_pipeline, DEFAULT_CAP};
use interval_rules::synth::{random_case, RandomTaskShape};
use interval_rules::{accuracy_filter, close_pos, min_int_change, min_int_change_parallel, mine_rules, relevance_filter};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn miner_matches_oracle(seed in any::<u64>()) {
        let case = random_case(seed, RandomTaskShape::default());
        let oracle = reference_pipeline(&case.task, case.minsup, case.maxfp, DEFAULT_CAP).unwrap();
        let mined = mine_rules(&case.task, case.minsup, case.maxfp);
        prop_assert_eq!(&mined.closed, &oracle.closed);
        prop_assert_eq!(&mined.rules, &oracle.rules);
        prop_assert_eq!(&mined.relevant.kept, &oracle.relevant);
    }

    #[test]
    fn oracle_routes_agree(seed in any::<u64>()) {
        let case = random_case(seed, RandomTaskShape::default());
        let all = reference_pipeline(&case.task, 0, 0, DEFAULT_CAP).unwrap().all_closed;
        let by_box: Vec<_> = all.iter().map(|r| r.pattern.clone()).collect();
        prop_assert_eq!(by_box, closed_by_subsets(&case.task).unwrap());
        prop_assert!(all.len() <= 1usize << case.task.n_pos());
        for r in &all {
            prop_assert_eq!(&close_pos(&r.pattern, &case.task).unwrap(), &r.pattern);
        }
    }

    #[test]
    fn sequential_and_parallel_agree(seed in any::<u64>()) {
        let case = random_case(seed, RandomTaskShape::default());
        prop_assert_eq!(
            min_int_change(&case.task, case.minsup),
            min_int_change_parallel(&case.task, case.minsup)
        );
    }

    #[test]
    fn filters_commute_and_relevance_is_idempotent(seed in any::<u64>()) {
        let case = random_case(seed, RandomTaskShape::default());
        let fcip = min_int_change(&case.task, case.minsup);
        let a = accuracy_filter(&relevance_filter(&fcip).kept, case.maxfp);
        let b = relevance_filter(&accuracy_filter(&fcip, case.maxfp)).kept;
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&relevance_filter(&b).kept, &b);
    }

    #[test]
    fn counts_monotone_in_thresholds(seed in any::<u64>()) {
        let case = random_case(seed, RandomTaskShape::default());
        let all = reference_pipeline(&case.task, 0, 0, DEFAULT_CAP).unwrap().all_closed;
        let n_pos = case.task.n_pos();
        let n_neg = case.task.n_neg();
        let mut prev = usize::MAX;
        for minsup in 0..=n_pos {
            let c = min_int_change(&case.task, minsup).len();
            prop_assert!(c <= prev);
            prev = c;
        }
        let mut prev = 0;
        for maxfp in 0..=n_neg + 1 {
            let r = from_closed(all.clone(), 0, maxfp).rules.len();
            prop_assert!(r >= prev);
            prev = r;
        }
    }
}

#[test]
fn removals_are_witnessed_by_kept_patterns() {
    for seed in 0..200 {
        let case = random_case(seed, RandomTaskShape::default());
        let rel = relevance_filter(&min_int_change(&case.task, case.minsup));
        for r in &rel.removals {
            assert!(rel.kept.contains(&r.witness));
            assert_eq!(r.removed.fp_set, r.witness.fp_set);
            assert!(interval_rules::strictly_leq(&r.removed.pattern, &r.witness.pattern).unwrap());
            assert_eq!(
                interval_rules::close_neg(&r.removed.pattern, &case.task).unwrap(),
                interval_rules::close_neg(&r.witness.pattern, &case.task).unwrap()
            );
        }
        for x in &rel.kept {
            for y in &rel.kept {
                if x != y && x.fp_set == y.fp_set {
                    assert!(!interval_rules::leq(&x.pattern, &y.pattern).unwrap());
                }
            }
        }
    }
}
