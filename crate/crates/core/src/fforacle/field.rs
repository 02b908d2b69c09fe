//! Prime fields 𝔽_p and the quadratic extension used for elliptic classes.

use super::FfError;

/// The prime field 𝔽_p with a fixed generator of 𝔽_p^×.
#[derive(Clone, Debug)]
pub struct Fq {
    p: u64,
    gen: u64,
    log: Vec<usize>,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The smallest prime greater than `p`.
pub fn next_prime(p: u64) -> u64 {
    (p + 1..).find(|&x| is_prime(x)).expect("primes are unbounded")
}

impl Fq {
    pub fn new(p: u64) -> Result<Self, FfError> {
        if !is_prime(p) || p > 251 {
            return Err(FfError::UnsupportedField(p));
        }
        let order = |x: u64| {
            let mut y = x;
            let mut k = 1;
            while y != 1 {
                y = y * x % p;
                k += 1;
            }
            k
        };
        let gen = (1..p).find(|&x| order(x) == p - 1).expect("cyclic group");
        let mut log = vec![0; p as usize];
        let mut y = 1;
        for e in 0..p - 1 {
            log[y as usize] = e as usize;
            y = y * gen % p;
        }
        Ok(Self { p, gen, log })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Number of elements.
    pub fn q(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }

    pub fn generator(&self) -> u64 {
        self.gen
    }

    /// gen^e.
    pub fn exp(&self, e: usize) -> u64 {
        self.pow(self.gen, (e % (self.p as usize - 1)) as u64)
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, a: u64) -> usize {
        assert!(!a.is_multiple_of(self.p), "log of zero");
        self.log[(a % self.p) as usize]
    }

    pub fn is_square(&self, a: u64) -> bool {
        a.is_multiple_of(self.p) || self.log(a).is_multiple_of(2)
    }

    /// A square root of a square.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return Some(0);
        }
        let l = self.log(a);
        l.is_multiple_of(2).then(|| self.exp(l / 2))
    }
}

/// 𝔽_{p²} = 𝔽_p[s]/(s² − ν) for a non-square ν, with a fixed generator.
#[derive(Clone, Debug)]
pub struct Fq2 {
    base: Fq,
    nu: u64,
    log: Vec<usize>,
}

impl Fq2 {
    pub fn new(base: &Fq) -> Result<Self, FfError> {
        let p = base.p();
        if p == 2 {
            return Err(FfError::UnsupportedField(p));
        }
        let nu = (2..p).find(|&x| !base.is_square(x)).expect("odd p has non-squares");
        let mut f = Self { base: base.clone(), nu, log: Vec::new() };
        let m = (p * p - 1) as usize;
        for a in 0..p {
            for b in 0..p {
                if (a, b) == (0, 0) {
                    continue;
                }
                let mut log = vec![usize::MAX; (p * p) as usize];
                let mut y = (1, 0);
                let mut ok = true;
                for e in 0..m {
                    let i = f.index(y);
                    if log[i] != usize::MAX {
                        ok = false;
                        break;
                    }
                    log[i] = e;
                    y = f.mul(y, (a, b));
                }
                if ok {
                    f.log = log;
                    return Ok(f);
                }
            }
        }
        unreachable!("𝔽_{{p²}}^× is cyclic")
    }

    fn index(&self, x: (u64, u64)) -> usize {
        (x.0 * self.base.p() + x.1) as usize
    }

    pub fn mul(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let f = &self.base;
        let a = f.add(f.mul(x.0, y.0), f.mul(f.mul(x.1, y.1), self.nu));
        let b = f.add(f.mul(x.0, y.1), f.mul(x.1, y.0));
        (a, b)
    }

    pub fn nu(&self) -> u64 {
        self.nu
    }

    /// Discrete logarithm of a nonzero element a + b s.
    pub fn log(&self, x: (u64, u64)) -> usize {
        assert!(x != (0, 0), "log of zero");
        self.log[self.index(x)]
    }
}
