//! Interval-pattern algebra: covering, the containment order, hull,
//! extents, supports and the two closure operators.
//!
//! Everything here works directly on real values and linear scans. The
//! miner has its own indexed representation; this module is the plain
//! reference the oracle builds on.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::discretizer::DiscretizedTask;
use crate::error::{Error, Result};

/// A closed interval `[lower, upper]`.
#[derive(Debug, Clone, Copy)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite()) || lower > upper {
            return Err(Error::InvalidInterval { lower, upper });
        }
        Ok(Interval {
            lower: lower + 0.0,
            upper: upper + 0.0,
        })
    }

    pub fn point(v: f64) -> Self {
        Interval { lower: v, upper: v }
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lower <= v && v <= self.upper
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }

    fn key(&self) -> (u64, u64) {
        (self.lower.to_bits(), self.upper.to_bits())
    }
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Interval {}

impl Hash for Interval {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lower
            .total_cmp(&other.lower)
            .then_with(|| self.upper.total_cmp(&other.upper))
    }
}

/// An n-tuple of closed intervals, one per feature.
///
/// The derived `Ord` is the canonical output order: lexicographic over
/// features, lower bound before upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalPattern {
    intervals: Vec<Interval>,
}

impl IntervalPattern {
    pub fn new(bounds: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let intervals = bounds
            .into_iter()
            .map(|(l, u)| Interval::new(l, u))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntervalPattern { intervals })
    }

    pub(crate) fn from_intervals(intervals: Vec<Interval>) -> Self {
        IntervalPattern { intervals }
    }

    /// The singleton box `⟨[x_i, x_i]⟩` of an example.
    pub fn point(x: &[f64]) -> Self {
        IntervalPattern {
            intervals: x.iter().map(|&v| Interval::point(v + 0.0)).collect(),
        }
    }

    /// `⟨[min M_i, max M_i]⟩`, which covers every example of the task.
    pub fn top(task: &DiscretizedTask) -> Self {
        IntervalPattern {
            intervals: task
                .modalities()
                .features()
                .iter()
                .map(|m| Interval {
                    lower: m[0],
                    upper: m[m.len() - 1],
                })
                .collect(),
        }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn arity(&self) -> usize {
        self.intervals.len()
    }

    /// Whether every bound is a modality of the task.
    pub fn is_on_modalities(&self, task: &DiscretizedTask) -> bool {
        let m = task.modalities();
        self.arity() == m.n_features()
            && self.intervals.iter().enumerate().all(|(i, iv)| {
                m.code_of(i, iv.lower).is_some() && m.code_of(i, iv.upper).is_some()
            })
    }
}

impl fmt::Display for IntervalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}, {}]", iv.lower, iv.upper)?;
        }
        f.write_str(">")
    }
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Arity { expected, found })
    }
}

/// Closed-interval covering: `l_i <= x_i <= u_i` for every feature.
pub fn covers(p: &IntervalPattern, x: &[f64]) -> Result<bool> {
    check_arity(p.arity(), x.len())?;
    Ok(p.intervals.iter().zip(x).all(|(iv, &v)| iv.contains(v)))
}

/// `x ⊑ y`: every interval of `x` lies inside the matching interval of `y`.
pub fn leq(x: &IntervalPattern, y: &IntervalPattern) -> Result<bool> {
    check_arity(x.arity(), y.arity())?;
    Ok(x.intervals.iter().zip(&y.intervals).all(|(a, b)| a.is_subset_of(b)))
}

/// `x ⊑ y` and `x != y`.
pub fn strictly_leq(x: &IntervalPattern, y: &IntervalPattern) -> Result<bool> {
    Ok(leq(x, y)? && x != y)
}

/// `x ⊔ y`: componentwise min of lowers, max of uppers.
pub fn hull(x: &IntervalPattern, y: &IntervalPattern) -> Result<IntervalPattern> {
    check_arity(x.arity(), y.arity())?;
    Ok(IntervalPattern {
        intervals: x
            .intervals
            .iter()
            .zip(&y.intervals)
            .map(|(a, b)| Interval {
                lower: a.lower.min(b.lower),
                upper: a.upper.max(b.upper),
            })
            .collect(),
    })
}

/// Indices of the covered examples, as a bit set of length `examples.len()`.
pub fn extent(p: &IntervalPattern, examples: &[Vec<f64>]) -> Result<FixedBitSet> {
    let mut set = FixedBitSet::with_capacity(examples.len());
    for (i, x) in examples.iter().enumerate() {
        if covers(p, x)? {
            set.insert(i);
        }
    }
    Ok(set)
}

/// Componentwise bounding box of the selected examples, `None` if the
/// selection is empty.
pub fn bounding_box<'a>(mut rows: impl Iterator<Item = &'a Vec<f64>>) -> Option<IntervalPattern> {
    let first = rows.next()?;
    let mut bbox = IntervalPattern::point(first);
    for row in rows {
        for (iv, &v) in bbox.intervals.iter_mut().zip(row) {
            iv.lower = iv.lower.min(v);
            iv.upper = iv.upper.max(v);
        }
    }
    Some(bbox)
}

fn closure_on(p: &IntervalPattern, examples: &[Vec<f64>]) -> Result<Option<IntervalPattern>> {
    let ext = extent(p, examples)?;
    Ok(bounding_box(ext.ones().map(|i| &examples[i])))
}

/// Γ⁺: bounding box of the positives covered by `p`.
pub fn close_pos(p: &IntervalPattern, task: &DiscretizedTask) -> Result<IntervalPattern> {
    closure_on(p, task.positives())?.ok_or(Error::EmptyExtent)
}

/// Result of Γ⁻. `Empty` stands for "covers no negative" and equals only
/// itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NegClosure {
    Empty,
    Closed(IntervalPattern),
}

/// Γ⁻: bounding box of the negatives covered by `p`.
pub fn close_neg(p: &IntervalPattern, task: &DiscretizedTask) -> Result<NegClosure> {
    Ok(match closure_on(p, task.negatives())? {
        Some(b) => NegClosure::Closed(b),
        None => NegClosure::Empty,
    })
}

/// A pattern with its true-positive and false-positive sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternRecord {
    pub pattern: IntervalPattern,
    /// Covered positives, indexed within P.
    pub tp_set: FixedBitSet,
    /// Covered negatives, indexed within N.
    pub fp_set: FixedBitSet,
    pub supp_pos: usize,
    pub supp_neg: usize,
}

impl PatternRecord {
    pub fn new(pattern: IntervalPattern, tp_set: FixedBitSet, fp_set: FixedBitSet) -> Self {
        let supp_pos = tp_set.count_ones(..);
        let supp_neg = fp_set.count_ones(..);
        PatternRecord {
            pattern,
            tp_set,
            fp_set,
            supp_pos,
            supp_neg,
        }
    }

    /// Negatives not covered.
    pub fn tn_count(&self) -> usize {
        self.fp_set.len() - self.supp_neg
    }
}

impl PartialOrd for PatternRecord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PatternRecord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pattern
            .cmp(&other.pattern)
            .then_with(|| self.tp_set.cmp(&other.tp_set))
            .then_with(|| self.fp_set.cmp(&other.fp_set))
    }
}

pub fn supports(p: &IntervalPattern, task: &DiscretizedTask) -> Result<PatternRecord> {
    check_arity(task.n_features(), p.arity())?;
    Ok(PatternRecord::new(
        p.clone(),
        extent(p, task.positives())?,
        extent(p, task.negatives())?,
    ))
}

/// Whether `x` is at least as relevant as `y`:
/// `Γ⁺(y) = Γ⁺(x ⊔ y)` and `Γ⁻(x) = Γ⁻(x ⊔ y)`.
///
/// Both records must come from `task`.
pub fn more_relevant(x: &PatternRecord, y: &PatternRecord, task: &DiscretizedTask) -> bool {
    let joined = hull(&x.pattern, &y.pattern).expect("records of one task share arity");
    let pos = |p: &IntervalPattern| closure_on(p, task.positives()).expect("arity checked");
    let neg = |p: &IntervalPattern| close_neg(p, task).expect("arity checked");
    pos(&y.pattern) == pos(&joined) && neg(&x.pattern) == neg(&joined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::BinaryTask;
    use crate::discretizer::{all_values_modalities, snap};

    fn p(bounds: &[(f64, f64)]) -> IntervalPattern {
        IntervalPattern::new(bounds.iter().copied()).unwrap()
    }

    fn d1() -> DiscretizedTask {
        let t = BinaryTask::from_rows(
            vec![vec![1.0, 1.0], vec![2.0, 3.0], vec![3.0, 2.0]],
            vec![vec![2.0, 2.0], vec![4.0, 1.0]],
        )
        .unwrap();
        snap(&t, &all_values_modalities(&t)).unwrap()
    }

    fn ones(s: &FixedBitSet) -> Vec<usize> {
        s.ones().collect()
    }

    #[test]
    fn covering_is_closed() {
        let box13 = p(&[(1.0, 3.0), (1.0, 3.0)]);
        assert!(covers(&box13, &[2.0, 2.0]).unwrap());
        assert!(covers(&box13, &[1.0, 3.0]).unwrap());
        assert!(!covers(&p(&[(1.0, 3.0), (1.0, 2.0)]), &[2.0, 3.0]).unwrap());
        assert!(matches!(covers(&box13, &[1.0]), Err(Error::Arity { .. })));
    }

    #[test]
    fn rejects_inverted_interval() {
        assert!(IntervalPattern::new([(3.0, 1.0)]).is_err());
        assert!(IntervalPattern::new([(f64::NAN, 1.0)]).is_err());
    }

    #[test]
    fn order_examples() {
        let big = p(&[(1.0, 3.0), (1.0, 3.0)]);
        assert!(leq(&p(&[(2.0, 2.0), (2.0, 3.0)]), &big).unwrap());
        let a = p(&[(1.0, 1.0), (1.0, 1.0)]);
        let b = p(&[(2.0, 2.0), (3.0, 3.0)]);
        assert!(!leq(&a, &b).unwrap());
        assert!(!leq(&b, &a).unwrap());
        assert!(leq(&big, &big).unwrap());
        assert!(!strictly_leq(&big, &big).unwrap());
    }

    #[test]
    fn hull_examples() {
        let x = p(&[(1.0, 1.0), (1.0, 1.0)]);
        let y = p(&[(3.0, 3.0), (2.0, 2.0)]);
        assert_eq!(hull(&x, &y).unwrap(), p(&[(1.0, 3.0), (1.0, 2.0)]));
        assert_eq!(hull(&x, &x).unwrap(), x);
        assert_eq!(
            hull(&p(&[(1.0, 2.0), (2.0, 3.0)]), &p(&[(2.0, 4.0), (1.0, 2.0)])).unwrap(),
            p(&[(1.0, 4.0), (1.0, 3.0)])
        );
    }

    #[test]
    fn extents_on_d1() {
        let d = d1();
        let box13 = p(&[(1.0, 3.0), (1.0, 3.0)]);
        assert_eq!(ones(&extent(&box13, d.positives()).unwrap()), [0, 1, 2]);
        assert_eq!(ones(&extent(&box13, d.negatives()).unwrap()), [0]);
        assert_eq!(ones(&extent(&p(&[(1.0, 2.0), (1.0, 3.0)]), d.positives()).unwrap()), [0, 1]);
    }

    #[test]
    fn closures_on_d1() {
        let d = d1();
        let top = IntervalPattern::top(&d);
        assert_eq!(top, p(&[(1.0, 4.0), (1.0, 3.0)]));
        assert_eq!(close_pos(&top, &d).unwrap(), p(&[(1.0, 3.0), (1.0, 3.0)]));
        let b = p(&[(1.0, 2.0), (1.0, 3.0)]);
        assert_eq!(close_pos(&b, &d).unwrap(), b);
        let single = p(&[(2.0, 2.0), (2.5, 3.0)]);
        assert_eq!(close_pos(&single, &d).unwrap(), IntervalPattern::point(&[2.0, 3.0]));
        assert!(matches!(
            close_pos(&p(&[(4.0, 4.0), (1.0, 3.0)]), &d),
            Err(Error::EmptyExtent)
        ));

        assert_eq!(
            close_neg(&p(&[(1.0, 3.0), (1.0, 3.0)]), &d).unwrap(),
            NegClosure::Closed(p(&[(2.0, 2.0), (2.0, 2.0)]))
        );
        assert_eq!(close_neg(&p(&[(1.0, 1.0), (1.0, 1.0)]), &d).unwrap(), NegClosure::Empty);
        assert_eq!(
            close_neg(&top, &d).unwrap(),
            NegClosure::Closed(p(&[(2.0, 4.0), (1.0, 2.0)]))
        );
    }

    #[test]
    fn supports_on_d1() {
        let d = d1();
        let r = supports(&p(&[(1.0, 3.0), (1.0, 3.0)]), &d).unwrap();
        assert_eq!((r.supp_pos, r.supp_neg, r.tn_count()), (3, 1, 1));
        let r = supports(&p(&[(2.0, 2.0), (3.0, 3.0)]), &d).unwrap();
        assert_eq!((r.supp_pos, r.supp_neg), (1, 0));
        let r = supports(&IntervalPattern::top(&d), &d).unwrap();
        assert_eq!((r.supp_pos, r.supp_neg, r.tn_count()), (3, 2, 0));
    }

    #[test]
    fn relevance_order_on_d1() {
        let d = d1();
        let rec = |b: &[(f64, f64)]| supports(&p(b), &d).unwrap();
        let x = rec(&[(1.0, 3.0), (1.0, 3.0)]);
        let y = rec(&[(1.0, 2.0), (1.0, 3.0)]);
        assert!(!more_relevant(&x, &y, &d));
        assert!(more_relevant(&x, &x, &d));
        let a = rec(&[(1.0, 1.0), (1.0, 1.0)]);
        let b = rec(&[(2.0, 2.0), (3.0, 3.0)]);
        assert!(!more_relevant(&a, &b, &d));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1.0, 2.5), (0.0, 0.0)]).to_string(), "<[1, 2.5], [0, 0]>");
    }
}
