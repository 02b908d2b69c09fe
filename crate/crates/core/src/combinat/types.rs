use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use super::{factorial, mobius, Partition};

/// A pair `(d, λ)` of a degree and a nonzero partition.
pub type TypePair = (usize, Partition);

/// The total order on pairs: by degree, then by size, then lexicographic.
pub fn pair_cmp(a: &TypePair, b: &TypePair) -> Ordering {
    a.0.cmp(&b.0)
        .then(a.1.size().cmp(&b.1.size()))
        .then_with(|| a.1.parts().cmp(b.1.parts()))
}

/// A type: a multiset of pairs `(d, λ)`, stored in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeT(Vec<TypePair>);

/// Derived statistics of a type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeStats {
    pub size: usize,
    pub f: usize,
    pub bracket: Partition,
    pub nstat: usize,
    pub worder: BigInt,
    pub degree_profile: Vec<(usize, usize)>,
}

impl TypeT {
    pub fn new(mut pairs: Vec<TypePair>) -> Self {
        assert!(pairs.iter().all(|(d, l)| *d >= 1 && !l.is_empty()), "type pairs need d >= 1 and λ nonzero");
        pairs.sort_by(|a, b| pair_cmp(b, a));
        Self(pairs)
    }

    /// The single pair `(1, λ)`.
    pub fn single(lambda: Partition) -> Self {
        Self::new(vec![(1, lambda)])
    }

    /// `(1,(1^{n_1}))…(1,(1^{n_r}))` for λ = (n_1,…,n_r): the type of a
    /// semisimple class with eigenvalue multiplicities n_j.
    pub fn semisimple_class(lambda: &Partition) -> Self {
        Self::new(lambda.parts().iter().map(|&n| (1, Partition::column(n))).collect())
    }

    /// `(1,(n_1))…(1,(n_r))`: the type of a semisimple character.
    pub fn semisimple_character(lambda: &Partition) -> Self {
        Self::new(lambda.parts().iter().map(|&n| (1, Partition::row(n))).collect())
    }

    pub fn pairs(&self) -> &[TypePair] {
        &self.0
    }

    /// Number of pairs counted with multiplicity.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |ω| = Σ d_i |λ^i|.
    pub fn size(&self) -> usize {
        self.0.iter().map(|(d, l)| d * l.size()).sum()
    }

    /// f(ω) = Σ |λ^i|.
    pub fn f(&self) -> usize {
        self.0.iter().map(|(_, l)| l.size()).sum()
    }

    /// [ω] = ∪ d_i·λ^i.
    pub fn bracket(&self) -> Partition {
        Partition::new(self.0.iter().flat_map(|(d, l)| l.parts().iter().map(move |p| p * d)).collect())
    }

    /// n(ω) = Σ d_i n(λ^i).
    pub fn nstat(&self) -> usize {
        self.0.iter().map(|(d, l)| d * l.nstat()).sum()
    }

    /// Distinct pairs with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(TypePair, usize)> {
        let mut out: Vec<(TypePair, usize)> = Vec::new();
        for pair in &self.0 {
            match out.last_mut() {
                Some((p, m)) if p == pair => *m += 1,
                _ => out.push((pair.clone(), 1)),
            }
        }
        out
    }

    /// |W(ω)| = Π d^{m_{d,λ}} m_{d,λ}!.
    pub fn worder(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .map(|((d, _), m)| num_traits::pow(BigInt::from(*d), *m) * factorial(*m))
            .product()
    }

    /// π(ω) = ((d_1,|λ^1|),…) in the stored order.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.0.iter().map(|(d, l)| (*d, l.size())).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// ω ∼ τ when both have the same degree profile.
    pub fn similar(&self, other: &Self) -> bool {
        self.degree_profile() == other.degree_profile()
    }

    /// The common degree if all pairs share one.
    pub fn concentrated_degree(&self) -> Option<usize> {
        let d = self.0.first()?.0;
        self.0.iter().all(|(e, _)| *e == d).then_some(d)
    }

    pub fn stats(&self) -> TypeStats {
        TypeStats {
            size: self.size(),
            f: self.f(),
            bracket: self.bracket(),
            nstat: self.nstat(),
            worder: self.worder(),
            degree_profile: self.degree_profile(),
        }
    }
}

impl fmt::Display for TypeT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, l) in &self.0 {
            write!(f, "({d},({l}))")?;
        }
        Ok(())
    }
}

/// K_ω° = (-1)^{r-1} d^{r-1} μ(d) (r-1)! when all degrees equal d, else 0.
pub fn k0(omega: &TypeT) -> BigInt {
    let Some(d) = omega.concentrated_degree() else {
        return BigInt::from(0);
    };
    let r = omega.len();
    let sign = if (r - 1).is_multiple_of(2) { 1 } else { -1 };
    BigInt::from(sign * mobius(d)) * num_traits::pow(BigInt::from(d), r - 1) * factorial(r - 1)
}

/// C_ω° = (μ(d)/d)(-1)^{r-1}(r-1)!/Π m_{d,λ}! when concentrated in degree
/// d, else 0.
pub fn c0(omega: &TypeT) -> BigRational {
    let Some(d) = omega.concentrated_degree() else {
        return BigRational::from_integer(BigInt::from(0));
    };
    let r = omega.len();
    let sign = if (r - 1).is_multiple_of(2) { 1 } else { -1 };
    let den: BigInt = BigInt::from(d) * omega.multiplicities().iter().map(|(_, m)| factorial(*m)).product::<BigInt>();
    BigRational::new(BigInt::from(sign * mobius(d)) * factorial(r - 1), den)
}

/// All types of size `n`.
pub fn types_of(n: usize) -> Vec<TypeT> {
    let mut pairs: Vec<TypePair> = Vec::new();
    for d in 1..=n {
        for m in 1..=n / d {
            for l in super::partitions_of(m) {
                pairs.push((d, l));
            }
        }
    }
    pairs.sort_by(|a, b| pair_cmp(b, a));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(pairs: &[TypePair], start: usize, rest: usize, cur: &mut Vec<TypePair>, out: &mut Vec<TypeT>) {
        if rest == 0 {
            out.push(TypeT(cur.clone()));
            return;
        }
        for i in start..pairs.len() {
            let w = pairs[i].0 * pairs[i].1.size();
            if w <= rest {
                cur.push(pairs[i].clone());
                rec(pairs, i, rest - w, cur, out);
                cur.pop();
            }
        }
    }
    if n > 0 {
        rec(&pairs, 0, n, &mut cur, &mut out);
    }
    out
}

/// Number of multisets of nonzero partitions of total size `n`.
pub fn count_partition_multisets(n: usize) -> usize {
    // Euler transform of the partition counts
    let p: Vec<usize> = (0..=n).map(|m| super::partitions_of(m).len()).collect();
    let mut out = vec![0usize; n + 1];
    out[0] = 1;
    for size in 1..=n {
        for _ in 0..p[size] {
            for total in (size..=n).rev() {
                let mut k = 1;
                while k * size <= total {
                    out[total] += out[total - k * size];
                    k += 1;
                }
            }
        }
    }
    out[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn type_counts() {
        assert_eq!(types_of(1), vec![TypeT::single(p("1"))]);
        assert_eq!(types_of(2).len(), 4);
        assert_eq!(types_of(3).len(), 8);
        for n in 1..7 {
            let conc1 = types_of(n).iter().filter(|t| t.concentrated_degree() == Some(1)).count();
            assert_eq!(conc1, count_partition_multisets(n));
        }
    }

    #[test]
    fn type_statistics() {
        let t = TypeT::new(vec![(2, p("1"))]);
        assert_eq!((t.bracket(), t.f(), t.worder()), (p("2"), 1, BigInt::from(2)));
        let t = TypeT::new(vec![(1, p("1")), (1, p("1"))]);
        assert_eq!((t.bracket(), t.f(), t.worder()), (p("1,1"), 2, BigInt::from(2)));
        let t = TypeT::single(p("2,1"));
        assert_eq!((t.bracket(), t.f(), t.worder()), (p("2,1"), 3, BigInt::from(1)));
    }

    #[test]
    fn constants() {
        assert_eq!(k0(&TypeT::single(p("3"))), BigInt::from(1));
        assert_eq!(k0(&TypeT::new(vec![(2, p("1")), (1, p("1"))])), BigInt::from(0));
        assert_eq!(k0(&TypeT::new(vec![(2, p("1")), (2, p("2"))])), BigInt::from(2));
        assert_eq!(c0(&TypeT::single(p("2"))), BigRational::from_integer(1.into()));
        assert_eq!(c0(&TypeT::new(vec![(1, p("1")), (1, p("1"))])), BigRational::new((-1).into(), 2.into()));
        for n in 1..7 {
            for t in types_of(n) {
                assert_eq!(BigRational::from_integer(k0(&t)), c0(&t) * BigRational::from_integer(t.worder()));
            }
        }
    }

    #[test]
    fn order_is_non_increasing() {
        let t = TypeT::new(vec![(1, p("1")), (2, p("1")), (1, p("2")), (1, p("1,1"))]);
        let shown = t.to_string();
        assert_eq!(shown, "(2,(1))(1,(2))(1,(1,1))(1,(1))");
    }
}
