use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, sorting the given positive parts. Zero parts are
    /// dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(r, r, ..., r)` with `k` parts; empty when `r = 0` or `k = 0`.
    pub fn rectangle(r: u32, k: u32) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![r; k as usize] }
        }
    }

    pub fn single(r: u32) -> Self {
        Self::new(vec![r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let max = self.parts[0] as usize;
        let parts = (0..max)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)`, zero-based, rows listed from the longest one.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// Cells strictly to the right of `(row, col)` in its row.
    pub fn arm(&self, row: usize, col: usize) -> u32 {
        self.parts[row] - 1 - col as u32
    }

    /// Cells strictly below `(row, col)` in its column (rows with larger
    /// index, which are the shorter ones).
    pub fn leg(&self, row: usize, col: usize) -> u32 {
        self.parts[row + 1..].iter().filter(|&&p| p as usize > col).count() as u32
    }

    pub fn coarm(&self, _row: usize, col: usize) -> u32 {
        col as u32
    }

    pub fn coleg(&self, row: usize, _col: usize) -> u32 {
        row as u32
    }

    /// `z_lambda = prod_v v^{m_v} m_v!` over part multiplicities.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i] as u128;
            let mut mult: u128 = 0;
            while i < self.parts.len() && self.parts[i] as u128 == v {
                mult += 1;
                i += 1;
            }
            for m in 1..=mult {
                z *= v * m;
            }
        }
        z
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Removes one part equal to `v`; `None` if absent.
    pub fn remove_part(&self, v: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == v)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Union of part multisets.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse-lexicographic order (`(n)` first, all-ones
/// last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// A weak composition: a list of nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sorts the positive parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts.clone())
    }
}

impl fmt::Display for Composition {
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

/// Compositions of `k` into positive parts, lexicographic by first part.
pub fn compositions_of(k: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for mut rest in compositions_of(k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All weak compositions of `total` into exactly `len` nonnegative parts.
pub fn weak_compositions(total: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
    }
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}
