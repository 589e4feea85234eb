use std::fmt;

use super::SymfunError;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Partition, SymfunError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SymfunError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Parts as a signed vector of exactly `len` entries, zero padded.
    ///
    /// Panics if the partition is longer than `len`.
    pub fn to_vector(&self, len: usize) -> Vec<i64> {
        assert!(self.len() <= len, "partition {self} longer than {len}");
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(len, 0);
        v
    }

    /// All partitions of `weight`, in increasing lexicographic order.
    pub fn of_weight(weight: usize) -> Vec<Partition> {
        Partition::bounded(weight, usize::MAX, usize::MAX)
    }

    /// Partitions of `weight` with at most `max_len` parts, each at most
    /// `max_part`, in increasing lexicographic order.
    pub fn bounded(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(weight, max_len, max_part.min(weight), &mut cur, &mut out);
        out.sort();
        out
    }

    /// Every partition fitting in a `max_len x max_part` box, weights
    /// ascending, lexicographic within each weight.
    pub fn in_box(max_len: usize, max_part: usize) -> Vec<Partition> {
        (0..=max_len * max_part)
            .flat_map(|w| Partition::bounded(w, max_len, max_part))
            .collect()
    }
}

fn fill(left: usize, slots: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(left)).rev() {
        cur.push(p);
        fill(left - p, slots - 1, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = SymfunError;
    fn try_from(parts: Vec<usize>) -> Result<Partition, SymfunError> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
