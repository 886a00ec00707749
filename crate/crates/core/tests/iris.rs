use std::path::PathBuf;

use interval_rules::{
    discretize, equiprobable_modalities, load_csv, mine_rules, ClassColumn, Dataset, ModalityMode, Threshold,
};

fn iris() -> Dataset {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/iris.csv");
    load_csv(path, &ClassColumn::parse("class"), b',').unwrap()
}

#[test]
fn shape_and_split() {
    let d = iris();
    assert_eq!(d.n_features(), 4);
    assert_eq!(d.len(), 150);
    assert_eq!(d.distinct_labels(), ["setosa", "versicolor", "virginica"]);
    let t = d.split_one_vs_rest("setosa").unwrap();
    assert_eq!((t.positives().len(), t.negatives().len()), (50, 100));
}

#[test]
fn modalities_bound_all_examples() {
    let d = iris();
    for label in d.distinct_labels() {
        let t = d.split_one_vs_rest(&label).unwrap();
        let m = equiprobable_modalities(&t, 10).unwrap();
        for (i, mi) in m.features().iter().enumerate() {
            assert!(mi.len() >= 2 && mi.len() <= 11);
            let lo = d.rows().iter().map(|r| r[i]).fold(f64::INFINITY, f64::min);
            let hi = d.rows().iter().map(|r| r[i]).fold(f64::NEG_INFINITY, f64::max);
            assert_eq!((mi[0], *mi.last().unwrap()), (lo, hi));
        }
    }
}

#[test]
fn top_pattern_covers_all_negatives() {
    let d = iris();
    let t = discretize(&d.split_one_vs_rest("virginica").unwrap(), ModalityMode::Equiprobable, 10).unwrap();
    let top = interval_rules::IntervalPattern::top(&t);
    let rec = interval_rules::supports(&top, &t).unwrap();
    assert_eq!((rec.supp_pos, rec.supp_neg), (50, 100));
}

#[test]
fn counts_shrink_along_the_minsup_axis() {
    let d = iris();
    let t = discretize(&d.split_one_vs_rest("versicolor").unwrap(), ModalityMode::Equiprobable, 10).unwrap();
    let maxfp = Threshold::Percent(10.0).to_count(t.n_neg());
    assert_eq!(maxfp, 10);
    let mut prev = (usize::MAX, usize::MAX, usize::MAX);
    for minsup in [0, 5, 10, 20, 30, 40, 49, 50] {
        let c = mine_rules(&t, minsup, maxfp).counts();
        assert!(c.0 >= c.1 && c.1 >= c.2);
        assert!(c.0 <= prev.0 && c.1 <= prev.1 && c.2 <= prev.2);
        prev = c;
    }
    assert_eq!(prev, (0, 0, 0));
}
