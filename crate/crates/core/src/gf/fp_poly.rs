//! Dense polynomials over a prime field, only as much as field
//! construction needs.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lc_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lc_inv as u64 % p as u64) as u32;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = top - dm + i;
                let sub = (c as u64 * mi as u64 % p as u64) as u32;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        trim(&mut r);
    }
    r
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut v: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
    trim(&mut v);
    v
}

pub(crate) fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), m, p)
}

fn powmod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut base = rem(a, m, p);
    let mut acc = rem(&[1], m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// `x^(p^k) mod m` by repeated `p`-th powering.
fn frobenius_x(k: u32, m: &[u32], p: u32) -> Vec<u32> {
    let mut x = rem(&[0, 1], m, p);
    for _ in 0..k {
        x = powmod(&x, p as u64, m, p);
    }
    x
}

/// Rabin's test for a monic polynomial over `F_p`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() as u32 - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if m[0] == 0 {
        return false;
    }
    let x = [0u32, 1];
    if sub(&frobenius_x(n, m, p), &rem(&x, m, p), p) != Vec::<u32>::new() {
        return false;
    }
    for r in prime_factors(n as u64) {
        let h = frobenius_x(n / r as u32, m, p);
        let g = gcd(m, &sub(&h, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `s` when coefficient tuples
/// `(c_0, ..., c_{s-1})` are compared lexicographically with `c_0` first.
pub(crate) fn smallest_irreducible(p: u32, s: u32) -> Vec<u32> {
    let total = (p as u64).pow(s);
    for idx in 0..total {
        let mut m = vec![0u32; s as usize + 1];
        let mut t = idx;
        for i in (0..s as usize).rev() {
            m[i] = (t % p as u64) as u32;
            t /= p as u64;
        }
        m[s as usize] = 1;
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 3), vec![1, 0, 2, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn rabin_rejects_products() {
        // (x+1)(x^2+x+2) over F_3
        assert!(!is_irreducible(&[2, 0, 2, 1], 3));
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 5));
    }
}
