//! Labeled numerical datasets and their one-vs-rest binary tasks.

use std::collections::HashSet;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

/// Selects the class column of a CSV file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassColumn {
    Name(String),
    Index(usize),
    /// The rightmost column.
    Last,
}

impl ClassColumn {
    /// Interprets `col` as a column name, falling back to a 0-based index
    /// when it is all digits. Ambiguities are resolved against the header by
    /// [`ClassColumn::resolve`].
    pub fn parse(col: &str) -> Self {
        match col.parse::<usize>() {
            Ok(i) => ClassColumn::Index(i),
            Err(_) => ClassColumn::Name(col.to_string()),
        }
    }

    fn resolve(&self, header: &[String]) -> Result<usize> {
        match self {
            ClassColumn::Name(name) => header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::MissingClassColumn(name.clone())),
            ClassColumn::Last => header
                .len()
                .checked_sub(1)
                .ok_or_else(|| Error::MissingClassColumn("last".to_string())),
            ClassColumn::Index(i) => {
                // A header literally named "3" wins over index 3.
                let as_name = i.to_string();
                if let Some(pos) = header.iter().position(|h| *h == as_name) {
                    Ok(pos)
                } else if *i < header.len() {
                    Ok(*i)
                } else {
                    Err(Error::MissingClassColumn(as_name))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    feature_names: Vec<String>,
    rows: Vec<Vec<f64>>,
    labels: Vec<String>,
}

impl Dataset {
    /// Builds a dataset from in-memory parts, enforcing the shape invariants.
    pub fn new(feature_names: Vec<String>, rows: Vec<Vec<f64>>, labels: Vec<String>) -> Result<Self> {
        if feature_names.is_empty() {
            return Err(Error::Empty("no feature columns"));
        }
        if rows.is_empty() {
            return Err(Error::Empty("no data rows"));
        }
        if rows.len() != labels.len() {
            return Err(Error::Arity {
                expected: rows.len(),
                found: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &feature_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateFeature(name.clone()));
            }
        }
        let n = feature_names.len();
        let mut rows = rows;
        for (r, row) in rows.iter_mut().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRow {
                    row: r + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter_mut().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonNumeric {
                        row: r + 1,
                        column: feature_names[c].clone(),
                        value: v.to_string(),
                    });
                }
                // fold -0.0 into 0.0 so bit-level equality agrees with ==
                *v += 0.0;
            }
        }
        Ok(Dataset {
            feature_names,
            rows,
            labels,
        })
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Distinct labels in order of first appearance.
    pub fn distinct_labels(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        self.labels
            .iter()
            .filter(|l| seen.insert(l.as_str()))
            .cloned()
            .collect()
    }

    /// Splits the rows into positives (rows labeled `positive_label`) and
    /// negatives (everything else), preserving row order within each side.
    pub fn split_one_vs_rest(&self, positive_label: &str) -> Result<BinaryTask> {
        let mut positives = Vec::new();
        let mut negatives = Vec::new();
        for (row, label) in self.rows.iter().zip(&self.labels) {
            if label == positive_label {
                positives.push(row.clone());
            } else {
                negatives.push(row.clone());
            }
        }
        if positives.is_empty() {
            return Err(Error::UnknownLabel(positive_label.to_string()));
        }
        BinaryTask::new(
            self.feature_names.clone(),
            positives,
            negatives,
            positive_label.to_string(),
        )
    }
}

/// Reads a CSV file with a header row. Every column except the class column
/// must hold finite decimal numbers.
pub fn load_csv(path: impl AsRef<Path>, class_column: &ClassColumn, delimiter: u8) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_csv(file, class_column, delimiter)
}

pub fn read_csv<R: Read>(reader: R, class_column: &ClassColumn, delimiter: u8) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header.is_empty() || header.iter().all(String::is_empty) {
        return Err(Error::Empty("missing header"));
    }
    let class_idx = class_column.resolve(&header)?;
    let feature_names: Vec<String> = header
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != class_idx)
        .map(|(_, h)| h.clone())
        .collect();

    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (r, record) in rdr.records().enumerate() {
        let record = record?;
        let row_no = r + 1;
        if record.len() != header.len() {
            return Err(Error::RaggedRow {
                row: row_no,
                expected: header.len(),
                found: record.len(),
            });
        }
        let mut values = Vec::with_capacity(feature_names.len());
        for (c, cell) in record.iter().enumerate() {
            if c == class_idx {
                continue;
            }
            let v = cell
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::NonNumeric {
                    row: row_no,
                    column: header[c].clone(),
                    value: cell.to_string(),
                })?;
            values.push(v);
        }
        rows.push(values);
        labels.push(record[class_idx].to_string());
    }
    Dataset::new(feature_names, rows, labels)
}

/// A two-class problem: positives P and negatives N. Example identity is
/// the row index within its side.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryTask {
    feature_names: Vec<String>,
    positives: Vec<Vec<f64>>,
    negatives: Vec<Vec<f64>>,
    positive_label: String,
}

impl BinaryTask {
    pub fn new(
        feature_names: Vec<String>,
        positives: Vec<Vec<f64>>,
        negatives: Vec<Vec<f64>>,
        positive_label: String,
    ) -> Result<Self> {
        if positives.is_empty() {
            return Err(Error::EmptyPositives);
        }
        let n = feature_names.len();
        if n == 0 {
            return Err(Error::Empty("no feature columns"));
        }
        for (r, row) in positives.iter().chain(&negatives).enumerate() {
            if row.len() != n {
                return Err(Error::Arity {
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(c) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonNumeric {
                    row: r + 1,
                    column: feature_names[c].clone(),
                    value: row[c].to_string(),
                });
            }
        }
        Ok(BinaryTask {
            feature_names,
            positives,
            negatives,
            positive_label,
        })
    }

    /// Convenience constructor with generated feature names `f1..fn`.
    pub fn from_rows(positives: Vec<Vec<f64>>, negatives: Vec<Vec<f64>>) -> Result<Self> {
        let n = positives.first().map_or(0, Vec::len);
        let names = (1..=n).map(|i| format!("f{i}")).collect();
        BinaryTask::new(names, positives, negatives, "+".to_string())
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn positives(&self) -> &[Vec<f64>] {
        &self.positives
    }

    pub fn negatives(&self) -> &[Vec<f64>] {
        &self.negatives
    }

    pub fn positive_label(&self) -> &str {
        &self.positive_label
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    /// Values of feature `i` over P followed by N.
    pub(crate) fn column(&self, i: usize) -> impl Iterator<Item = f64> + '_ {
        self.positives.iter().chain(&self.negatives).map(move |r| r[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Dataset {
        read_csv("f1,f2,cls\n1,1,a\n2,3,a\n3,2,b".as_bytes(), &ClassColumn::parse("cls"), b',').unwrap()
    }

    #[test]
    fn parses_small_csv() {
        let d = small();
        assert_eq!(d.n_features(), 2);
        assert_eq!(d.len(), 3);
        assert_eq!(d.labels(), ["a", "a", "b"]);
        assert_eq!(d.rows()[1], vec![2.0, 3.0]);
    }

    #[test]
    fn class_column_by_index() {
        let d = read_csv("cls;f1\nx;1.5\ny;2".as_bytes(), &ClassColumn::Index(0), b';').unwrap();
        assert_eq!(d.feature_names(), ["f1"]);
        assert_eq!(d.rows(), [vec![1.5], vec![2.0]]);
    }

    #[test]
    fn class_column_defaults_to_last() {
        let d = read_csv("a,b,c\n1,2,x\n".as_bytes(), &ClassColumn::Last, b',').unwrap();
        assert_eq!(d.feature_names(), ["a", "b"]);
        assert_eq!(d.labels(), ["x"]);
    }

    #[test]
    fn non_numeric_cell_names_row_and_column() {
        let err = read_csv("f1,f2,cls\nabc,1,a\n".as_bytes(), &ClassColumn::parse("cls"), b',').unwrap_err();
        match err {
            Error::NonNumeric { row, column, .. } => {
                assert_eq!(row, 1);
                assert_eq!(column, "f1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_and_infinite_values() {
        let class = ClassColumn::parse("cls");
        assert!(matches!(
            read_csv("f1,cls\n,a\n".as_bytes(), &class, b','),
            Err(Error::NonNumeric { .. })
        ));
        assert!(matches!(
            read_csv("f1,cls\ninf,a\n".as_bytes(), &class, b','),
            Err(Error::NonNumeric { .. })
        ));
        assert!(matches!(
            read_csv("f1,cls\nNaN,a\n".as_bytes(), &class, b','),
            Err(Error::NonNumeric { .. })
        ));
    }

    #[test]
    fn rejects_duplicates_and_empty_input() {
        let class = ClassColumn::parse("cls");
        assert!(matches!(
            read_csv("f,f,cls\n1,2,a\n".as_bytes(), &class, b','),
            Err(Error::DuplicateFeature(_))
        ));
        assert!(read_csv("".as_bytes(), &class, b',').is_err());
        assert!(matches!(
            read_csv("f1,cls\n".as_bytes(), &class, b','),
            Err(Error::Empty(_))
        ));
        assert!(matches!(
            read_csv("f1,f2\n1,2\n".as_bytes(), &class, b','),
            Err(Error::MissingClassColumn(_))
        ));
    }

    #[test]
    fn missing_file() {
        let err = load_csv("/nonexistent/file.csv", &ClassColumn::Index(0), b',').unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn split_counts() {
        let d = small();
        let t = d.split_one_vs_rest("a").unwrap();
        assert_eq!(t.positives().len(), 2);
        assert_eq!(t.negatives().len(), 1);
        assert!(matches!(d.split_one_vs_rest("z"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn split_preserves_order_and_partitions_rows() {
        let d = read_csv(
            "v,cls\n1,a\n2,b\n3,a\n4,c\n5,b\n6,a\n".as_bytes(),
            &ClassColumn::parse("cls"),
            b',',
        )
        .unwrap();
        let mut total = 0;
        for label in d.distinct_labels() {
            let t = d.split_one_vs_rest(&label).unwrap();
            total += t.positives().len();
            assert_eq!(t.positives().len() + t.negatives().len(), d.len());
            let pos: Vec<f64> = t.positives().iter().map(|r| r[0]).collect();
            let neg: Vec<f64> = t.negatives().iter().map(|r| r[0]).collect();
            assert!(pos.windows(2).all(|w| w[0] < w[1]));
            assert!(neg.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(total, d.len());
    }
}
