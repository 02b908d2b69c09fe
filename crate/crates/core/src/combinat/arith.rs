use num_bigint::BigInt;
use num_traits::One;

/// The Möbius function.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Positive divisors in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// σ(n) = Σ_{d|n} d.
pub fn divisor_sigma(n: usize) -> usize {
    divisors(n).into_iter().sum()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_functions() {
        assert_eq!([1, 2, 3, 4, 5, 6, 12, 30].map(mobius), [1, -1, -1, 0, -1, 1, 0, -1]);
        assert_eq!(divisor_sigma(1), 1);
        assert_eq!(divisor_sigma(6), 12);
        assert_eq!(divisor_sigma(12), 28);
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
