//! Small integer and float helpers that `core` does not provide.

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// 2-adic valuation and odd part: `n = 2^v * m`.
pub(crate) fn split_two_power(mut n: u64) -> (u32, u64) {
    let mut v = 0;
    while n != 0 && n.is_multiple_of(2) {
        n /= 2;
        v += 1;
    }
    (v, n)
}

/// Prime factorization by trial division, ascending primes.
pub(crate) fn factorize(mut n: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Round half away from zero; only used on values well inside `i64`.
pub(crate) fn round_i64(x: f64) -> i64 {
    if x >= 0.0 {
        (x + 0.5) as i64
    } else {
        -((-x + 0.5) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(lcm(4, 6), 12);
    }

    #[test]
    fn two_power() {
        assert_eq!(split_two_power(48), (4, 3));
        assert_eq!(split_two_power(7), (0, 7));
    }

    #[test]
    fn factor() {
        assert_eq!(factorize(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(1).is_empty());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_i64(2.5), 3);
        assert_eq!(round_i64(-2.4), -2);
        assert_eq!(round_i64(-2.6), -3);
    }
}
