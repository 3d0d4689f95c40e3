use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<[i64]>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `x^n - 1` by `Phi_d` for every proper divisor `d` of
/// `n`. The result is monic of degree `euler_phi(n)`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_divide(&num, &div);
        }
    }
    let result: Arc<[i64]> = num.into();
    debug_assert_eq!(result.len() as u32 - 1, euler_phi(n));
    cache().lock().unwrap().insert(n, Arc::clone(&result));
    result
}

/// Quotient of `num` by the monic `den`; the remainder must vanish.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
