//! Serialized forms of mining results.

use std::fmt::Write as _;

use interval_rules::{ModalitySets, PatternRecord};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Serialize)]
pub struct Condition<'a> {
    pub feature: &'a str,
    pub lower: f64,
    pub upper: f64,
}

/// One rule `pattern -> head`.
#[derive(Debug, Serialize)]
pub struct RuleOutput<'a> {
    pub head: &'a str,
    pub conditions: Vec<Condition<'a>>,
    pub supp_pos: usize,
    pub supp_neg: usize,
    pub tp_count: usize,
    pub fp_count: usize,
    pub tn_count: usize,
}

impl<'a> RuleOutput<'a> {
    pub fn new(head: &'a str, features: &'a [String], rec: &PatternRecord) -> Self {
        RuleOutput {
            head,
            conditions: features
                .iter()
                .zip(rec.pattern.intervals())
                .map(|(f, iv)| Condition {
                    feature: f,
                    lower: iv.lower,
                    upper: iv.upper,
                })
                .collect(),
            supp_pos: rec.supp_pos,
            supp_neg: rec.supp_neg,
            tp_count: rec.supp_pos,
            fp_count: rec.supp_neg,
            tn_count: rec.tn_count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub closed: usize,
    pub rules: usize,
    pub relevant: usize,
}

#[derive(Debug, Serialize)]
pub struct ClassReport<'a> {
    pub label: &'a str,
    pub counts: Counts,
    pub time_ms: Option<f64>,
    pub rules: Vec<RuleOutput<'a>>,
}

#[derive(Debug, Serialize)]
pub struct Params {
    pub minsup: String,
    pub maxfp: String,
    pub eqmod: u32,
    pub modalities: String,
}

#[derive(Debug, Serialize)]
pub struct MineReport<'a> {
    pub dataset: String,
    pub params: Params,
    pub classes: Vec<ClassReport<'a>>,
}

pub fn rules_csv(features: &[String], classes: &[ClassReport<'_>]) -> String {
    let mut out = String::from("class");
    for f in features {
        let _ = write!(out, ",{f}_lower,{f}_upper");
    }
    out.push_str(",supp_pos,supp_neg,tp_count,fp_count,tn_count\n");
    for class in classes {
        for r in &class.rules {
            out.push_str(&csv_field(r.head));
            for c in &r.conditions {
                let _ = write!(out, ",{},{}", c.lower, c.upper);
            }
            let _ = writeln!(
                out,
                ",{},{},{},{},{}",
                r.supp_pos, r.supp_neg, r.tp_count, r.fp_count, r.tn_count
            );
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const SWEEP_HEADER: &str = "class,minsup,closed,rules,relevant,time_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub class: String,
    pub minsup: String,
    pub closed: usize,
    pub rules: usize,
    pub relevant: usize,
    pub time_ms: f64,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3}",
            csv_field(&self.class),
            self.minsup,
            self.closed,
            self.rules,
            self.relevant,
            self.time_ms
        )
    }
}

/// Feature name to modality list, in feature order.
pub struct ModalityReport<'a> {
    pub features: &'a [String],
    pub modalities: &'a ModalitySets,
}

impl Serialize for ModalityReport<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.features.len()))?;
        for (name, m) in self.features.iter().zip(self.modalities.features()) {
            map.serialize_entry(name, m)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_row_format() {
        let row = SweepRow {
            class: "a,b".into(),
            minsup: "10%".into(),
            closed: 3,
            rules: 2,
            relevant: 1,
            time_ms: 0.5,
        };
        assert_eq!(row.to_csv(), "\"a,b\",10%,3,2,1,0.500");
    }

    #[test]
    fn modality_map_keeps_feature_order() {
        let m = ModalitySets::new(vec![vec![2.0, 1.0], vec![5.0]]).unwrap();
        let names = vec!["z".to_string(), "a".to_string()];
        let json = serde_json::to_string(&ModalityReport {
            features: &names,
            modalities: &m,
        })
        .unwrap();
        assert_eq!(json, r#"{"z":[1.0,2.0],"a":[5.0]}"#);
    }
}
