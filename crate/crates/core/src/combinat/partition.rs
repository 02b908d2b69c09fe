use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::CombinatError;

/// Integer partition stored as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// Derived statistics of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub size: usize,
    pub length: usize,
    pub conjugate: Partition,
    pub nstat: usize,
    pub hooks: Vec<usize>,
    pub pairing: usize,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((0..first).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect())
    }

    /// n(λ) = Σ (i-1) λ_i.
    pub fn nstat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// ⟨λ,λ⟩ = Σ_j (λ'_j)^2 = 2n(λ) + |λ|.
    pub fn pairing(&self) -> usize {
        self.conjugate().0.iter().map(|c| c * c).sum()
    }

    /// `(row, col, arm, leg)` for every cell, rows first.
    pub fn cells(&self) -> Vec<(usize, usize, usize, usize)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                out.push((i, j, p - j - 1, conj.0[j] - i - 1));
            }
        }
        out
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.cells().into_iter().map(|(_, _, a, l)| a + l + 1).collect()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            size: self.size(),
            length: self.len(),
            conjugate: self.conjugate(),
            nstat: self.nstat(),
            hooks: self.hooks(),
            pairing: self.pairing(),
        }
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = Π_i i^{m_i} m_i!, the centralizer order in the symmetric group.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(p) * BigInt::from(k);
            }
        }
        z
    }

    /// Every part multiplied by `d`.
    pub fn scaled(&self, d: usize) -> Self {
        Self(self.0.iter().map(|p| p * d).collect())
    }

    /// Parts divided by `d` if all are divisible.
    pub fn divided(&self, d: usize) -> Option<Self> {
        self.0.iter().all(|p| p % d == 0).then(|| Self(self.0.iter().map(|p| p / d).collect()))
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::new(parts)
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Greatest common divisor of the parts (0 for the empty partition).
    pub fn parts_gcd(&self) -> usize {
        self.0.iter().fold(0, |g, &p| num_integer::gcd(g, p))
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = CombinatError;

    /// Comma-separated parts such as `2,1`; `0` or the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| CombinatError::Parse(format!("bad part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(CombinatError::Parse(format!("zero part in {s:?}")));
            }
            parts.push(p);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::Parse(format!("parts of {s:?} are not weakly decreasing")));
        }
        Ok(Self(parts))
    }
}

/// A k-tuple of partitions, one per puncture.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, CombinatError> {
        if components.is_empty() {
            return Err(CombinatError::Parse("a multipartition needs at least one component".into()));
        }
        Ok(Self(components))
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// The common size, if all components have the same size.
    pub fn common_size(&self) -> Option<usize> {
        let n = self.0[0].size();
        self.0.iter().all(|p| p.size() == n).then_some(n)
    }

    /// gcd of all parts of all components.
    pub fn parts_gcd(&self) -> usize {
        self.0.iter().fold(0, |g, p| num_integer::gcd(g, p.parts_gcd()))
    }

    pub fn is_indivisible(&self) -> bool {
        self.parts_gcd() == 1
    }

    /// Σ_{i,j} (μ^i_j)^2.
    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().flat_map(|p| p.parts().iter()).map(|x| x * x).sum()
    }

    /// All k-tuples of partitions of `n`.
    pub fn all(n: usize, k: usize) -> Vec<Self> {
        let parts = partitions_of(n);
        let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }

    /// Tuples with weakly decreasing components, i.e. one representative
    /// per unordered multiset.
    pub fn all_sorted(n: usize, k: usize) -> Vec<Self> {
        Self::all(n, k).into_iter().filter(|m| m.0.windows(2).all(|w| w[0] >= w[1])).collect()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for MultiPartition {
    type Err = CombinatError;

    /// Semicolon-separated partitions such as `1,1;2;2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let comps = s.split(';').map(Partition::from_str).collect::<Result<Vec<_>, _>>()?;
        Self::new(comps)
    }
}
