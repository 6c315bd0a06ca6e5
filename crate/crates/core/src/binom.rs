//! Exact binomial coefficients from a Pascal triangle.

/// Largest `n` held by the table.
pub const MAX_N: usize = 62;

const fn pascal() -> [[i64; MAX_N + 1]; MAX_N + 1] {
    let mut table = [[0i64; MAX_N + 1]; MAX_N + 1];
    let mut n = 0;
    while n <= MAX_N {
        table[n][0] = 1;
        let mut k = 1;
        while k <= n {
            table[n][k] = table[n - 1][k - 1] + table[n - 1][k];
            k += 1;
        }
        n += 1;
    }
    table
}

static PASCAL: [[i64; MAX_N + 1]; MAX_N + 1] = pascal();

/// `C(n, k)`, zero when `k > n`.
///
/// Panics if `n > 62`.
#[inline]
pub fn binom(n: usize, k: usize) -> i64 {
    assert!(n <= MAX_N, "binomial table holds n <= {MAX_N}, got {n}");
    if k > n {
        0
    } else {
        PASCAL[n][k]
    }
}

/// `C(n, k)` for signed arguments; zero outside `0 <= k <= n`.
#[inline]
pub fn binom_i(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binom(n as usize, k as usize)
    }
}

/// `C(n, k)` for arbitrary `n`; `None` if an intermediate product overflows `u128`.
pub fn binom_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication.
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}
