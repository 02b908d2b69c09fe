//! Conjugacy classes and adjoint orbits, and the direct point counts.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::combinat::MultiPartition;

use super::cyclo::Cyclo;
use super::field::Fq;
use super::generic::EigenData;
use super::matrix::{all_matrices, gl_elements, FqMatrix};
use super::FfError;

/// Default cap on enumerated tuples.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A GL_n(𝔽_q)-orbit of matrices under conjugation: a conjugacy class in
/// GL_n or an adjoint orbit in 𝔤𝔩_n.
#[derive(Clone, Debug)]
pub struct ConjClassFq {
    n: usize,
    /// Eigenvalues with multiplicities when the orbit is semisimple with
    /// eigenvalues in 𝔽_q.
    eigenvalues: Option<Vec<(u64, usize)>>,
    members: Vec<FqMatrix>,
    set: HashSet<FqMatrix>,
}

pub type AdjOrbitFq = ConjClassFq;

fn orbit_of(f: &Fq, rep: &FqMatrix, group: &[(FqMatrix, FqMatrix)]) -> Vec<FqMatrix> {
    let mut set: Vec<FqMatrix> = group.iter().map(|(g, gi)| rep.conjugate_by(f, g, gi)).collect();
    set.sort();
    set.dedup();
    set
}

fn group_with_inverses(f: &Fq, n: usize) -> Vec<(FqMatrix, FqMatrix)> {
    gl_elements(f, n).into_iter().map(|g| (g, g.inverse(f).expect("invertible"))).collect()
}

impl ConjClassFq {
    fn from_members(n: usize, eigenvalues: Option<Vec<(u64, usize)>>, members: Vec<FqMatrix>) -> Self {
        let set = members.iter().copied().collect();
        Self { n, eigenvalues, members, set }
    }

    /// The orbit of diag(a_1^{m_1}, …).
    pub fn semisimple(f: &Fq, eigenvalues: &[(u64, usize)]) -> Self {
        let diag: Vec<u64> = eigenvalues.iter().flat_map(|&(a, m)| std::iter::repeat_n(a % f.p(), m)).collect();
        let n = diag.len();
        let members = orbit_of(f, &FqMatrix::diagonal(&diag), &group_with_inverses(f, n));
        Self::from_members(n, Some(eigenvalues.iter().map(|&(a, m)| (a % f.p(), m)).collect()), members)
    }

    /// The orbit of an arbitrary matrix.
    pub fn of_matrix(f: &Fq, rep: &FqMatrix) -> Self {
        let members = orbit_of(f, rep, &group_with_inverses(f, rep.n()));
        Self::from_members(rep.n(), None, members)
    }

    /// One semisimple orbit per component of μ from eigenvalue data.
    pub fn from_eigen_data(f: &Fq, mu: &MultiPartition, data: &EigenData) -> Vec<Self> {
        mu.components()
            .iter()
            .zip(data)
            .map(|(p, v)| Self::semisimple(f, &v.iter().copied().zip(p.parts().iter().copied()).collect::<Vec<_>>()))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[FqMatrix] {
        &self.members
    }

    pub fn representative(&self) -> &FqMatrix {
        &self.members[0]
    }

    pub fn eigenvalues(&self) -> Option<&[(u64, usize)]> {
        self.eigenvalues.as_deref()
    }

    /// Membership; for semisimple orbits by eigenspace dimensions, which
    /// certifies both the characteristic polynomial and diagonalizability.
    pub fn contains(&self, f: &Fq, m: &FqMatrix) -> bool {
        match &self.eigenvalues {
            Some(e) => {
                m.n() == self.n
                    && e.iter().all(|&(a, mult)| m.sub(f, &FqMatrix::scalar(self.n, a)).rank(f) == self.n - mult)
            }
            None => self.set.contains(m),
        }
    }
}

/// Every adjoint orbit of 𝔤𝔩_n(𝔽_q).
pub fn adjoint_orbits(f: &Fq, n: usize) -> Vec<AdjOrbitFq> {
    let group = group_with_inverses(f, n);
    let mut seen: HashSet<FqMatrix> = HashSet::new();
    let mut out = Vec::new();
    for m in all_matrices(f, n) {
        if seen.contains(&m) {
            continue;
        }
        let members = orbit_of(f, &m, &group);
        seen.extend(members.iter().copied());
        out.push(ConjClassFq::from_members(n, None, members));
    }
    out
}

/// Every conjugacy class of GL_n(𝔽_q).
pub fn conjugacy_classes(f: &Fq, n: usize) -> Vec<ConjClassFq> {
    adjoint_orbits(f, n).into_iter().filter(|c| c.representative().det(f) != 0).collect()
}

pub fn gl_order(n: usize, q: u64) -> BigInt {
    let qn = BigInt::from(q).pow(n as u32);
    (0..n).map(|i| &qn - BigInt::from(q).pow(i as u32)).product()
}

type Dist = HashMap<FqMatrix, u128>;

fn charge(budget: &mut u128, cost: u128) -> Result<(), FfError> {
    if cost > *budget {
        return Err(FfError::BudgetExceeded(cost));
    }
    *budget -= cost;
    Ok(())
}

fn merge(mut a: Dist, b: Dist) -> Dist {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn convolve(f: &Fq, a: &Dist, b: &Dist, op: impl Fn(&Fq, &FqMatrix, &FqMatrix) -> FqMatrix + Sync) -> Dist {
    let items: Vec<(&FqMatrix, &u128)> = a.iter().collect();
    items
        .par_iter()
        .fold(Dist::new, |mut acc, (x, cx)| {
            for (y, cy) in b {
                *acc.entry(op(f, x, y)).or_insert(0) += *cx * cy;
            }
            acc
        })
        .reduce(Dist::new, merge)
}

/// Distribution of [x,y] over pairs from `space`.
fn bracket_distribution(f: &Fq, space: &[FqMatrix], op: impl Fn(&Fq, &FqMatrix, &FqMatrix) -> FqMatrix + Sync) -> Dist {
    space
        .par_iter()
        .fold(Dist::new, |mut acc, x| {
            for y in space {
                *acc.entry(op(f, x, y)).or_insert(0) += 1;
            }
            acc
        })
        .reduce(Dist::new, merge)
}

fn group_commutator(f: &Fq, x: &FqMatrix, y: &FqMatrix) -> FqMatrix {
    let xi = x.inverse(f).expect("invertible");
    let yi = y.inverse(f).expect("invertible");
    x.mul(f, y).mul(f, &xi).mul(f, &yi)
}

/// N(z) = #{(x,y) ∈ G² : xyx^{-1}y^{-1} = z}.
pub fn commutator_counts(f: &Fq, n: usize) -> HashMap<FqMatrix, u128> {
    bracket_distribution(f, &gl_elements(f, n), group_commutator)
}

struct Problem<'a> {
    space: Vec<FqMatrix>,
    unit: FqMatrix,
    bracket: fn(&Fq, &FqMatrix, &FqMatrix) -> FqMatrix,
    op: fn(&Fq, &FqMatrix, &FqMatrix) -> FqMatrix,
    /// The element that completes a product to the unit.
    complement: fn(&Fq, &FqMatrix) -> FqMatrix,
    orbits: &'a [ConjClassFq],
}

fn count(f: &Fq, g: u32, p: Problem, mut budget: u128) -> Result<u128, FfError> {
    let s = p.space.len() as u128;
    let mut dist: Dist = HashMap::from([(p.unit, 1)]);
    if g > 0 {
        charge(&mut budget, s * s)?;
        let br = bracket_distribution(f, &p.space, p.bracket);
        for _ in 0..g {
            charge(&mut budget, dist.len() as u128 * br.len() as u128)?;
            dist = convolve(f, &dist, &br, p.op);
        }
    }
    let Some((last, rest)) = p.orbits.split_last() else {
        return Ok(dist.get(&p.unit).copied().unwrap_or(0));
    };
    for o in rest {
        charge(&mut budget, dist.len() as u128 * o.size() as u128)?;
        let od: Dist = o.members().iter().map(|m| (*m, 1)).collect();
        dist = convolve(f, &dist, &od, p.op);
    }
    charge(&mut budget, dist.len() as u128)?;
    Ok(dist.iter().filter(|(z, _)| last.contains(f, &(p.complement)(f, z))).map(|(_, c)| c).sum())
}

/// #{(A_i,B_i) ∈ GL_n^{2g}, X_j ∈ C_j : Π[A_i,B_i] Π X_j = 1}, enumerated.
pub fn count_char_points(f: &Fq, n: usize, g: u32, classes: &[ConjClassFq], budget: u128) -> Result<u128, FfError> {
    let problem = Problem {
        space: gl_elements(f, n),
        unit: FqMatrix::identity(n),
        bracket: group_commutator,
        op: |f, a, b| a.mul(f, b),
        complement: |f, z| z.inverse(f).expect("invertible"),
        orbits: classes,
    };
    count(f, g, problem, budget)
}

/// #{(A_i,B_i) ∈ 𝔤𝔩_n^{2g}, X_j ∈ 𝒪_j : Σ[A_i,B_i] + Σ X_j = 0}, enumerated.
pub fn count_quiver_points(f: &Fq, n: usize, g: u32, orbits: &[AdjOrbitFq], budget: u128) -> Result<u128, FfError> {
    let problem = Problem {
        space: all_matrices(f, n),
        unit: FqMatrix::zero(n),
        bracket: |f, a, b| a.bracket(f, b),
        op: |f, a, b| a.add(f, b),
        complement: |f, z| z.neg(f),
        orbits,
    };
    count(f, g, problem, budget)
}

/// The additive count through the equivariant Fourier transform on 𝔤𝔩_n:
/// Σ_χ (χ(0)/|A|) (|A| c(χ))^g Π_j |𝒪_j| χ(𝒪_j)/χ(0), where χ runs over
/// sums of ψ(Tr(b·)) over adjoint orbits of b and c(χ) = #{y : [y,b] = 0}.
pub fn count_via_add_fourier(f: &Fq, n: usize, g: u32, orbits: &[AdjOrbitFq]) -> Result<BigInt, FfError> {
    let p = f.p() as usize;
    let all = all_matrices(f, n);
    let size_a = BigInt::from(all.len());
    let duals = adjoint_orbits(f, n);
    let terms: Vec<Cyclo> = duals
        .par_iter()
        .map(|dual| {
            let b = dual.representative();
            let c = all.iter().filter(|y| y.bracket(f, b) == FqMatrix::zero(n)).count();
            let chi0 = BigInt::from(dual.size());
            let l = &size_a * BigInt::from(c);
            let scalar = BigRational::new(chi0.clone() * l.pow(g), size_a.clone());
            let mut t = Cyclo::rational(p, scalar);
            for o in orbits {
                let a = o.representative();
                let chi = dual.members().iter().fold(Cyclo::zero(p), |acc, b2| {
                    &acc + &Cyclo::root(p, b2.mul(f, a).trace(f) as i64)
                });
                t = &t * &chi.scale(&BigRational::new(BigInt::from(o.size()), chi0.clone()));
            }
            t
        })
        .collect();
    let total = terms.iter().fold(Cyclo::zero(p), |acc, t| &acc + t);
    let r = total.to_rational().ok_or(FfError::NonIntegerResult)?;
    if !r.is_integer() {
        return Err(FfError::NonIntegerResult);
    }
    Ok(r.to_integer())
}
