use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::SymError;

/// A partition, stored with its parts weakly decreasing and without zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts and trims the given parts.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// The one-column partition `(1^r)`.
    pub fn column(r: usize) -> Partition {
        Partition { parts: vec![1; r] }
    }

    /// The dominant representative of a weight: absolute values, sorted.
    pub fn dominant(w: &[i32]) -> Partition {
        Partition::new(w.iter().map(|x| x.unsigned_abs()).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0) as usize;
        Partition::new((1..=m as u32).map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32).collect())
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i32> {
        (0..n).map(|i| self.part(i) as i32).collect()
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// A total order refining dominance: by weight, then lexicographically.
    pub fn cmp_graded(&self, o: &Partition) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| self.parts.cmp(&o.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Partition) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Partition {
    fn cmp(&self, o: &Partition) -> Ordering {
        self.cmp_graded(o)
    }
}

/// `mu <= lambda` in dominance order: every partial sum of `mu` is bounded by
/// the corresponding partial sum of `lambda`. Weights need not agree.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    let k = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u32, 0u32);
    (0..k).all(|i| {
        a += mu.part(i);
        b += lambda.part(i);
        a <= b
    })
}

/// All partitions of length at most `n` dominated by `lambda`, in increasing
/// graded order.
pub fn partitions_below(lambda: &Partition, n: usize) -> Vec<Partition> {
    let bounds: Vec<u32> = (0..n)
        .scan(0, |acc, i| {
            *acc += lambda.part(i);
            Some(*acc)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(i: usize, max: u32, sum: u32, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == bounds.len() {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let top = max.min(bounds[i] - sum);
        for p in 0..=top {
            cur.push(p);
            go(i + 1, p, sum + p, bounds, cur, out);
            cur.pop();
        }
    }
    go(0, lambda.part(0), 0, &bounds, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `2,1,1`, `[2,1,1]` or the empty string.
impl FromStr for Partition {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Partition, SymError> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        body.split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Partition::new)
            .map_err(|_| SymError::Parse(format!("not a partition: `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn normalizes() {
        assert_eq!(Partition::new(vec![0, 1, 2, 0]), p("2,1"));
        assert_eq!(p("[]").to_string(), "[]");
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::dominant(&[-2, 0, 3]), p("3,2"));
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p("1,1"), &p("2")));
        assert!(!dominance_leq(&p("2"), &p("1,1")));
        assert!(dominance_leq(&p(""), &p("1")));
        assert!(dominance_leq(&p("1"), &p("1,1")));
        let below = partitions_below(&p("1,1"), 2);
        assert_eq!(below, vec![p(""), p("1"), p("1,1")]);
        assert_eq!(partitions_below(&p("2"), 2), vec![p(""), p("1"), p("1,1"), p("2")]);
    }
}
