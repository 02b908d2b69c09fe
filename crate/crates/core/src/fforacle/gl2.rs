//! The character table of GL_2(𝔽_q), q an odd prime, in closed form, and
//! the group-side computations built on it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{MultiPartition, Partition, TypeT};

use super::classes::{commutator_counts, gl_order, ConjClassFq};
use super::cyclo::Cyclo;
use super::field::{Fq, Fq2};
use super::generic::find_generic_cyclic;
use super::matrix::FqMatrix;
use super::FfError;

/// Conjugacy classes of GL_2(𝔽_q) by their eigenvalue data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gl2Class {
    /// xI.
    Central(u64),
    /// x(I + N).
    Parabolic(u64),
    /// diag(x, y), x < y.
    Split(u64, u64),
    /// Eigenvalues {z, z^q} ⊂ 𝔽_{q²} \ 𝔽_q, z = a + bs the smaller one.
    Elliptic((u64, u64)),
}

/// Irreducible characters, with parameters as exponents: α_a(ε^i) = ζ_{q−1}^{ai}
/// for the fixed generator ε of 𝔽_q^×, φ_b(γ^j) = ζ_{q²−1}^{bj} for the fixed
/// generator γ of 𝔽_{q²}^×.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gl2Char {
    /// α∘det.
    Linear(u64),
    /// (α∘det)·St.
    Steinberg(u64),
    /// Induced from α⊗β on the diagonal torus, a < b.
    Principal(u64, u64),
    /// Cuspidal, from φ_b with φ_b ≠ φ_b^q.
    Cuspidal(u64),
}

pub struct CharTableGL2 {
    field: Fq,
    ext: Fq2,
    classes: Vec<(Gl2Class, u64)>,
    chars: Vec<Gl2Char>,
    values: Vec<Vec<Cyclo>>,
}

impl fmt::Display for Gl2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Central(x) => write!(f, "central({x})"),
            Self::Parabolic(x) => write!(f, "parabolic({x})"),
            Self::Split(x, y) => write!(f, "split({x},{y})"),
            Self::Elliptic((a, b)) => write!(f, "elliptic({a}+{b}s)"),
        }
    }
}

impl fmt::Display for Gl2Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Linear(a) => write!(f, "linear({a})"),
            Self::Steinberg(a) => write!(f, "steinberg({a})"),
            Self::Principal(a, b) => write!(f, "principal({a},{b})"),
            Self::Cuspidal(b) => write!(f, "cuspidal({b})"),
        }
    }
}

impl Gl2Class {
    /// The type of the class.
    pub fn type_of(&self) -> TypeT {
        match self {
            Self::Central(_) => TypeT::single(Partition::column(2)),
            Self::Parabolic(_) => TypeT::single(Partition::row(2)),
            Self::Split(..) => TypeT::new(vec![(1, Partition::row(1)), (1, Partition::row(1))]),
            Self::Elliptic(_) => TypeT::new(vec![(2, Partition::row(1))]),
        }
    }

    /// dim C_G(x).
    pub fn centralizer_dim(&self) -> u32 {
        match self {
            Self::Central(_) => 4,
            _ => 2,
        }
    }
}

impl Gl2Char {
    pub fn type_of(&self) -> TypeT {
        match self {
            Self::Linear(_) => TypeT::single(Partition::row(2)),
            Self::Steinberg(_) => TypeT::single(Partition::column(2)),
            Self::Principal(..) => TypeT::new(vec![(1, Partition::row(1)), (1, Partition::row(1))]),
            Self::Cuspidal(_) => TypeT::new(vec![(2, Partition::row(1))]),
        }
    }

    pub fn degree(&self, q: u64) -> u64 {
        match self {
            Self::Linear(_) => 1,
            Self::Steinberg(_) => q,
            Self::Principal(..) => q + 1,
            Self::Cuspidal(_) => q - 1,
        }
    }
}

impl CharTableGL2 {
    pub fn new(q: u64) -> Result<Self, FfError> {
        let field = Fq::new(q)?;
        let ext = Fq2::new(&field)?;
        let m = q * q - 1;
        let mut classes = Vec::new();
        for x in 1..q {
            classes.push((Gl2Class::Central(x), 1));
            classes.push((Gl2Class::Parabolic(x), q * q - 1));
            for y in x + 1..q {
                classes.push((Gl2Class::Split(x, y), q * (q + 1)));
            }
        }
        for a in 0..q {
            for b in 1..q {
                let z = (a, b);
                let zq = (a, q - b);
                if z < zq {
                    classes.push((Gl2Class::Elliptic(z), q * (q - 1)));
                }
            }
        }
        let mut chars = Vec::new();
        for a in 0..q - 1 {
            chars.push(Gl2Char::Linear(a));
            chars.push(Gl2Char::Steinberg(a));
            for b in a + 1..q - 1 {
                chars.push(Gl2Char::Principal(a, b));
            }
        }
        for b in 0..m {
            if b % (q + 1) != 0 && b < (b * q) % m {
                chars.push(Gl2Char::Cuspidal(b));
            }
        }
        let mut t = Self { field, ext, classes, chars, values: Vec::new() };
        t.values = t.chars.iter().map(|c| t.classes.iter().map(|(k, _)| t.value(c, k)).collect()).collect();
        Ok(t)
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn group_order(&self) -> BigInt {
        gl_order(2, self.q())
    }

    pub fn classes(&self) -> &[(Gl2Class, u64)] {
        &self.classes
    }

    pub fn chars(&self) -> &[Gl2Char] {
        &self.chars
    }

    /// χ(C) for the i-th character and j-th class.
    pub fn entry(&self, i: usize, j: usize) -> &Cyclo {
        &self.values[i][j]
    }

    fn m(&self) -> usize {
        (self.q() * self.q() - 1) as usize
    }

    /// α_a(x) for x ∈ 𝔽_q^×.
    fn alpha(&self, a: u64, x: u64) -> Cyclo {
        let q = self.q();
        Cyclo::root(self.m(), ((q + 1) * a * self.field.log(x) as u64) as i64)
    }

    /// φ_b(z) for z ∈ 𝔽_{q²}^×.
    fn phi(&self, b: u64, z: (u64, u64)) -> Cyclo {
        Cyclo::root(self.m(), (b as u128 * self.ext.log(z) as u128 % self.m() as u128) as i64)
    }

    fn int(&self, c: i64) -> Cyclo {
        Cyclo::from_int(self.m(), c)
    }

    fn norm(&self, z: (u64, u64)) -> u64 {
        let f = &self.field;
        f.sub(f.mul(z.0, z.0), f.mul(self.ext.nu(), f.mul(z.1, z.1)))
    }

    fn value(&self, c: &Gl2Char, k: &Gl2Class) -> Cyclo {
        let f = &self.field;
        let q = self.q() as i64;
        let conj = |z: (u64, u64)| (z.0, f.neg(z.1));
        match (*c, *k) {
            (Gl2Char::Linear(a), Gl2Class::Central(x) | Gl2Class::Parabolic(x)) => self.alpha(a, f.mul(x, x)),
            (Gl2Char::Linear(a), Gl2Class::Split(x, y)) => self.alpha(a, f.mul(x, y)),
            (Gl2Char::Linear(a), Gl2Class::Elliptic(z)) => self.alpha(a, self.norm(z)),
            (Gl2Char::Steinberg(a), Gl2Class::Central(x)) => &self.int(q) * &self.alpha(a, f.mul(x, x)),
            (Gl2Char::Steinberg(_), Gl2Class::Parabolic(_)) => self.int(0),
            (Gl2Char::Steinberg(a), Gl2Class::Split(x, y)) => self.alpha(a, f.mul(x, y)),
            (Gl2Char::Steinberg(a), Gl2Class::Elliptic(z)) => &self.int(-1) * &self.alpha(a, self.norm(z)),
            (Gl2Char::Principal(a, b), Gl2Class::Central(x)) => {
                &self.int(q + 1) * &(&self.alpha(a, x) * &self.alpha(b, x))
            }
            (Gl2Char::Principal(a, b), Gl2Class::Parabolic(x)) => &self.alpha(a, x) * &self.alpha(b, x),
            (Gl2Char::Principal(a, b), Gl2Class::Split(x, y)) => {
                &(&self.alpha(a, x) * &self.alpha(b, y)) + &(&self.alpha(a, y) * &self.alpha(b, x))
            }
            (Gl2Char::Principal(..), Gl2Class::Elliptic(_)) => self.int(0),
            (Gl2Char::Cuspidal(b), Gl2Class::Central(x)) => &self.int(q - 1) * &self.phi(b, (x, 0)),
            (Gl2Char::Cuspidal(b), Gl2Class::Parabolic(x)) => &self.int(-1) * &self.phi(b, (x, 0)),
            (Gl2Char::Cuspidal(_), Gl2Class::Split(..)) => self.int(0),
            (Gl2Char::Cuspidal(b), Gl2Class::Elliptic(z)) => {
                &self.int(-1) * &(&self.phi(b, z) + &self.phi(b, conj(z)))
            }
        }
    }

    /// The class of a matrix in GL_2(𝔽_q).
    pub fn classify(&self, m: &FqMatrix) -> Gl2Class {
        let f = &self.field;
        assert_eq!(m.n(), 2, "GL_2 matrices only");
        let t = m.trace(f);
        let d = m.det(f);
        assert!(d != 0, "singular matrix");
        let half = f.inv(2).expect("odd characteristic");
        let disc = f.sub(f.mul(t, t), f.mul(4, d));
        let x = f.mul(t, half);
        if disc == 0 {
            return if *m == FqMatrix::scalar(2, x) { Gl2Class::Central(x) } else { Gl2Class::Parabolic(x) };
        }
        if let Some(r) = f.sqrt(disc) {
            let a = f.mul(f.add(t, r), half);
            let b = f.mul(f.sub(t, r), half);
            return Gl2Class::Split(a.min(b), a.max(b));
        }
        let c = f.sqrt(f.mul(disc, f.inv(self.ext.nu()).expect("nonzero"))).expect("disc/ν is a square");
        let b = f.mul(c, half);
        let z = (x, b.min(f.neg(b)));
        Gl2Class::Elliptic(z)
    }

    pub fn class_index(&self, k: &Gl2Class) -> usize {
        self.classes.iter().position(|(c, _)| c == k).expect("class in table")
    }

    /// ⟨χ_i, χ_j⟩ as a rational number.
    pub fn inner(&self, i: usize, j: usize) -> Option<BigRational> {
        let s = self.classes.iter().enumerate().fold(Cyclo::zero(self.m()), |acc, (c, (_, size))| {
            let v = &self.values[i][c] * &self.values[j][c].conj();
            &acc + &v.scale(&BigRational::from_integer(BigInt::from(*size)))
        });
        s.to_rational().map(|r| r / BigRational::from_integer(self.group_order()))
    }

    /// Row orthogonality, Σ χ(1)² = |G| and the class and character counts.
    pub fn check(&self) -> bool {
        let q = self.q();
        let n = self.chars.len();
        let count_ok = n as u64 == q * q - 1 && self.classes.len() as u64 == q * q - 1;
        let sizes_ok = self.classes.iter().map(|(_, s)| BigInt::from(*s)).sum::<BigInt>() == self.group_order();
        let degrees_ok = self.chars.iter().map(|c| BigInt::from(c.degree(q)).pow(2)).sum::<BigInt>() == self.group_order();
        let ortho_ok = (0..n).all(|i| {
            (i..n).all(|j| self.inner(i, j) == Some(if i == j { BigRational::one() } else { BigRational::zero() }))
        });
        count_ok && sizes_ok && degrees_ok && ortho_ok
    }
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn integral(c: &Cyclo) -> Result<BigInt, FfError> {
    match c.to_rational() {
        Some(r) if r.is_integer() => Ok(r.to_integer()),
        _ => Err(FfError::NonIntegerResult),
    }
}

/// Frobenius' count Σ_χ (χ(1)²/|G|) (|G|/χ(1))^{2g} Π_j |C_j|χ(C_j)/χ(1).
pub fn count_via_group_fourier(table: &CharTableGL2, g: u32, classes: &[ConjClassFq]) -> Result<BigInt, FfError> {
    if classes.iter().any(|c| c.n() != 2) {
        return Err(FfError::Unsupported("the group-side Fourier count needs n = 2".into()));
    }
    let q = table.q();
    let order = table.group_order();
    let cols: Vec<usize> = classes.iter().map(|c| table.class_index(&table.classify(c.representative()))).collect();
    let mut total = Cyclo::zero(table.m());
    for (i, ch) in table.chars().iter().enumerate() {
        let deg = BigInt::from(ch.degree(q));
        let l = rat(order.clone(), deg.clone()).pow(2 * g as i32);
        let mut t = Cyclo::rational(table.m(), rat(deg.pow(2), order.clone()) * l);
        for (c, col) in classes.iter().zip(&cols) {
            t = &t * &table.entry(i, *col).scale(&rat(BigInt::from(c.size()), deg.clone()));
        }
        total = &total + &t;
    }
    integral(&total)
}

/// Checks Σ_z N(z) χ(z)/χ(1) = (|G|/χ(1))² for every χ, with N(z) the number
/// of pairs with commutator z, enumerated over all of G².
pub fn check_commutator_lemma(table: &CharTableGL2) -> bool {
    let f = table.field();
    let counts = commutator_counts(f, 2);
    let q = table.q();
    let order = table.group_order();
    let mut per_class = vec![BigInt::zero(); table.classes().len()];
    for (z, c) in &counts {
        per_class[table.class_index(&table.classify(z))] += BigInt::from(*c);
    }
    table.chars().iter().enumerate().all(|(i, ch)| {
        let deg = BigInt::from(ch.degree(q));
        let s = per_class.iter().enumerate().fold(Cyclo::zero(table.m()), |acc, (j, n)| {
            &acc + &table.entry(i, j).scale(&rat(n.clone(), deg.clone()))
        });
        s.to_rational() == Some(rat(order.clone(), deg.clone()).pow(2))
    })
}

/// Generic characters of types μ^i_†: α∘det for (n) and the principal
/// series character for (1,1), with parameters found by the eigenvalue
/// search in Z/(q−1).
pub fn generic_characters(table: &CharTableGL2, mu: &MultiPartition) -> Result<Vec<Gl2Char>, FfError> {
    if mu.common_size() != Some(2) {
        return Err(FfError::Unsupported("GL_2 characters need n = 2".into()));
    }
    let data = find_generic_cyclic(mu, table.q() - 1).ok_or(FfError::NotFound)?;
    Ok(data
        .iter()
        .map(|v| match v.as_slice() {
            [a] => Gl2Char::Linear(*a),
            [a, b] => Gl2Char::Principal((*a).min(*b), (*a).max(*b)),
            _ => unreachable!("components of size 2"),
        })
        .collect())
}

/// ⟨Λ⊗R_μ, 1⟩ = (1/|G|) Σ_C |C| q^{g dim C_G(x)} Π_i X_i(C).
pub fn multiplicity_from_table(table: &CharTableGL2, g: u32, chars: &[Gl2Char]) -> Result<BigInt, FfError> {
    let idx: Vec<usize> = chars.iter().map(|c| table.chars().iter().position(|d| d == c).expect("character in table")).collect();
    let q = BigInt::from(table.q());
    let mut total = Cyclo::zero(table.m());
    for (j, (k, size)) in table.classes().iter().enumerate() {
        let w = BigInt::from(*size) * q.pow(g * k.centralizer_dim());
        let mut t = Cyclo::rational(table.m(), rat(w, table.group_order()));
        for i in &idx {
            t = &t * table.entry(*i, j);
        }
        total = &total + &t;
    }
    integral(&total)
}

/// Σ over characters X of type ω of Π_j X(C_j).
pub fn sum_over_characters_of_type(table: &CharTableGL2, omega: &TypeT, classes: &[ConjClassFq]) -> Result<BigInt, FfError> {
    let cols: Vec<usize> = classes.iter().map(|c| table.class_index(&table.classify(c.representative()))).collect();
    let mut total = Cyclo::zero(table.m());
    for (i, ch) in table.chars().iter().enumerate() {
        if &ch.type_of() != omega {
            continue;
        }
        let t = cols.iter().fold(Cyclo::from_int(table.m(), 1), |acc, c| &acc * table.entry(i, *c));
        total = &total + &t;
    }
    integral(&total)
}

/// Σ over classes O of type ω of Π_i X_i(O).
pub fn sum_over_classes_of_type(table: &CharTableGL2, omega: &TypeT, chars: &[Gl2Char]) -> Result<BigInt, FfError> {
    let idx: Vec<usize> = chars.iter().map(|c| table.chars().iter().position(|d| d == c).expect("character in table")).collect();
    let mut total = Cyclo::zero(table.m());
    for (j, (k, _)) in table.classes().iter().enumerate() {
        if &k.type_of() != omega {
            continue;
        }
        let t = idx.iter().fold(Cyclo::from_int(table.m(), 1), |acc, i| &acc * table.entry(*i, j));
        total = &total + &t;
    }
    integral(&total)
}
