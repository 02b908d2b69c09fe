//! Exact cyclotomic numbers: Q[Z/m], reduced modulo Φ_m when a rational
//! value is needed.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Σ_i c_i ζ_m^i.
#[derive(Clone, Debug, PartialEq)]
pub struct Cyclo {
    m: usize,
    c: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(m: usize) -> Self {
        Self { m, c: vec![BigRational::zero(); m] }
    }

    pub fn rational(m: usize, r: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.c[0] = r;
        z
    }

    pub fn from_int(m: usize, r: i64) -> Self {
        Self::rational(m, BigRational::from_integer(BigInt::from(r)))
    }

    /// ζ_m^e.
    pub fn root(m: usize, e: i64) -> Self {
        let mut z = Self::zero(m);
        z.c[e.rem_euclid(m as i64) as usize] = BigRational::one();
        z
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { m: self.m, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let mut z = Self::zero(self.m);
        for (i, x) in self.c.iter().enumerate() {
            z.c[(self.m - i) % self.m] = x.clone();
        }
        z
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        let mut r = self.c.clone();
        let phi = cyclotomic_poly(self.m);
        let deg = phi.len() - 1;
        // Φ_m is monic: reduce from the top
        for i in (deg..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let lead = r[i].clone();
            for (j, a) in phi.iter().enumerate() {
                r[i - deg + j] -= &lead * BigRational::from_integer(a.clone());
            }
        }
        r[1..].iter().all(Zero::is_zero).then(|| r[0].clone())
    }
}

/// Terms `c*E(m)^i` in increasing i, as in GAP; not reduced modulo Φ_m.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "E({})", self.m)?,
                (1, false) => write!(f, "{a}*E({})", self.m)?,
                (_, true) => write!(f, "E({})^{i}", self.m)?,
                (_, false) => write!(f, "{a}*E({})^{i}", self.m)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.m, o.m, "cyclotomic orders differ");
        Cyclo { m: self.m, c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.m, o.m, "cyclotomic orders differ");
        let mut z = Cyclo::zero(self.m);
        for (i, a) in self.c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in o.c.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                z.c[(i + j) % self.m] += a * b;
            }
        }
        z
    }
}

/// Coefficients of Φ_m, constant term first.
pub fn cyclotomic_poly(m: usize) -> Vec<BigInt> {
    // x^m − 1 divided by Φ_d for every proper divisor d
    let mut p: Vec<BigInt> = vec![BigInt::zero(); m + 1];
    p[0] = -BigInt::one();
    p[m] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = poly_div_exact(&p, &cyclotomic_poly(d));
    }
    p
}

fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        for (j, x) in b.iter().enumerate() {
            r[i + j] -= &c * x;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in [2, 3, 4, 6, 8, 24] {
            let s = (0..m as i64).fold(Cyclo::zero(m), |acc, e| &acc + &Cyclo::root(m, e));
            assert_eq!(s.to_rational(), Some(BigRational::zero()));
            assert_eq!(Cyclo::root(m, 1).to_rational(), if m == 2 { Some(BigRational::from_integer((-1).into())) } else { None });
        }
        assert_eq!(cyclotomic_poly(6), vec![1.into(), BigInt::from(-1), 1.into()]);
        let z = Cyclo::root(5, 2);
        assert_eq!((&z * &z.conj()).to_rational(), Some(BigRational::one()));
    }
}
