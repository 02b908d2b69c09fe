//! Small square matrices over a prime field.

use super::field::Fq;

pub const MAX_N: usize = 3;

/// An n×n matrix (n ≤ 3), row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    n: u8,
    e: [u16; MAX_N * MAX_N],
}

impl FqMatrix {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "matrix size must be 1..=3");
        Self { n: n as u8, e: [0; MAX_N * MAX_N] }
    }

    pub fn scalar(n: usize, a: u64) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, a);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn diagonal(d: &[u64]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, &a) in d.iter().enumerate() {
            m.set(i, i, a);
        }
        m
    }

    /// Entries row by row.
    pub fn from_rows(n: usize, entries: &[u64]) -> Self {
        assert_eq!(entries.len(), n * n, "wrong number of entries");
        let mut m = Self::zero(n);
        for (i, &a) in entries.iter().enumerate() {
            m.set(i / n, i % n, a);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.e[i * MAX_N + j] as u64
    }

    pub fn set(&mut self, i: usize, j: usize, a: u64) {
        self.e[i * MAX_N + j] = a as u16;
    }

    pub fn add(&self, f: &Fq, o: &Self) -> Self {
        let mut m = *self;
        for i in 0..self.n() {
            for j in 0..self.n() {
                m.set(i, j, f.add(self.get(i, j), o.get(i, j)));
            }
        }
        m
    }

    pub fn sub(&self, f: &Fq, o: &Self) -> Self {
        let mut m = *self;
        for i in 0..self.n() {
            for j in 0..self.n() {
                m.set(i, j, f.sub(self.get(i, j), o.get(i, j)));
            }
        }
        m
    }

    pub fn neg(&self, f: &Fq) -> Self {
        Self::zero(self.n()).sub(f, self)
    }

    pub fn mul(&self, f: &Fq, o: &Self) -> Self {
        let n = self.n();
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let s = (0..n).map(|l| self.get(i, l) * o.get(l, j)).sum::<u64>() % f.p();
                m.set(i, j, s);
            }
        }
        m
    }

    /// xy − yx.
    pub fn bracket(&self, f: &Fq, o: &Self) -> Self {
        self.mul(f, o).sub(f, &o.mul(f, self))
    }

    pub fn trace(&self, f: &Fq) -> u64 {
        (0..self.n()).map(|i| self.get(i, i)).sum::<u64>() % f.p()
    }

    pub fn det(&self, f: &Fq) -> u64 {
        let g = |i, j| self.get(i, j);
        match self.n() {
            1 => g(0, 0),
            2 => f.sub(f.mul(g(0, 0), g(1, 1)), f.mul(g(0, 1), g(1, 0))),
            _ => {
                let minor = |a: usize, b: usize, c: usize, d: usize| {
                    f.sub(f.mul(g(1, a), g(2, b)), f.mul(g(1, c), g(2, d)))
                };
                let t0 = f.mul(g(0, 0), minor(1, 2, 2, 1));
                let t1 = f.mul(g(0, 1), minor(0, 2, 2, 0));
                let t2 = f.mul(g(0, 2), minor(0, 1, 1, 0));
                f.add(f.sub(t0, t1), t2)
            }
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &Fq) -> usize {
        let n = self.n();
        let mut a: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut r = 0;
        for c in 0..n {
            let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else { continue };
            a.swap(r, piv);
            let inv = f.inv(a[r][c]).expect("nonzero pivot");
            for i in 0..n {
                if i != r && a[i][c] != 0 {
                    let factor = f.mul(a[i][c], inv);
                    for j in 0..n {
                        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
                    }
                }
            }
            r += 1;
        }
        r
    }

    pub fn inverse(&self, f: &Fq) -> Option<Self> {
        let n = self.n();
        let mut a: Vec<Vec<u64>> =
            (0..n).map(|i| (0..2 * n).map(|j| if j < n { self.get(i, j) } else { u64::from(j - n == i) }).collect()).collect();
        for c in 0..n {
            let piv = (c..n).find(|&i| a[i][c] != 0)?;
            a.swap(c, piv);
            let inv = f.inv(a[c][c]).expect("nonzero pivot");
            for x in a[c].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for i in 0..n {
                if i != c && a[i][c] != 0 {
                    let factor = a[i][c];
                    for j in 0..2 * n {
                        a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
                    }
                }
            }
        }
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a[i][n + j]);
            }
        }
        Some(m)
    }

    /// g x g^{-1}.
    pub fn conjugate_by(&self, f: &Fq, g: &Self, g_inv: &Self) -> Self {
        g.mul(f, self).mul(f, g_inv)
    }
}

/// Every n×n matrix over the field.
pub fn all_matrices(f: &Fq, n: usize) -> Vec<FqMatrix> {
    let q = f.p();
    let total = q.pow((n * n) as u32);
    (0..total)
        .map(|mut code| {
            let mut m = FqMatrix::zero(n);
            for i in 0..n * n {
                m.set(i / n, i % n, code % q);
                code /= q;
            }
            m
        })
        .collect()
}

/// The elements of GL_n(𝔽_q).
pub fn gl_elements(f: &Fq, n: usize) -> Vec<FqMatrix> {
    all_matrices(f, n).into_iter().filter(|m| m.det(f) != 0).collect()
}
