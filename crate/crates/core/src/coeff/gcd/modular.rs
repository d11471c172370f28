use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{bp_divexact, bp_trim, zp_content, zp_div_int, zp_divexact, zp_mul, zp_trim, Bp, Zp};

/// Dense polynomial over `F_p`, index = degree, no trailing zeros.
type Up = Vec<u64>;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |n: u64| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0);
        (1u64 << 30..1u64 << 31).rev().filter(|&n| is_prime(n)).take(400).collect()
    })
}

fn mod_int(c: &BigInt, p: u64) -> u64 {
    let r = (c % p).to_i64().unwrap();
    if r < 0 {
        (r + p as i64) as u64
    } else {
        r as u64
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn up_trim(a: &mut Up) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn zp_mod(a: &Zp, p: u64) -> Up {
    let mut out: Up = a.iter().map(|c| mod_int(c, p)).collect();
    up_trim(&mut out);
    out
}

fn up_eval(a: &Up, r: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, c| (acc * r + c) % p)
}

fn up_scale(a: &Up, k: u64, p: u64) -> Up {
    a.iter().map(|c| c * k % p).collect()
}

/// `a mod b` for nonzero `b`.
fn up_rem(mut a: Up, b: &Up, p: u64) -> Up {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let k = a.len() - 1 - db;
        let q = a[a.len() - 1] * inv % p;
        for (i, c) in b.iter().enumerate() {
            a[k + i] = (a[k + i] + p - q * c % p) % p;
        }
        up_trim(&mut a);
    }
    a
}

/// Monic gcd in `F_p[x]`.
fn up_gcd(mut a: Up, mut b: Up, p: u64) -> Up {
    while !b.is_empty() {
        let r = up_rem(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = inv_mod(l, p);
        a = up_scale(&a, inv, p);
    }
    a
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Up {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (c[i] + p - c[i - 1]) % p;
            let den = (xs[i] + p - xs[i - j]) % p;
            c[i] = num * inv_mod(den, p) % p;
        }
    }
    let mut poly: Up = vec![c[n - 1]];
    for i in (0..n - 1).rev() {
        // poly = poly * (y - xs[i]) + c[i]
        let mut next = vec![0; poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k + 1] = (next[k + 1] + a) % p;
            next[k] = (next[k] + p - a * xs[i] % p) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        poly = next;
    }
    up_trim(&mut poly);
    poly
}

fn symmetric(c: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    if c > half {
        c - m
    } else {
        c.clone()
    }
}

/// Folds residues modulo `p` into `acc` (residues modulo `m`, kept in `[0, m)`).
fn crt_step(acc: &mut BigInt, m: &BigInt, r: u64, p: u64, m_inv: u64) {
    let a = mod_int(acc, p);
    let t = (r + p - a) % p * m_inv % p;
    if t != 0 {
        *acc += m * t;
    }
}

fn zp_positive(a: &Zp) -> Zp {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter().map(|c| -c).collect()
    } else {
        a.clone()
    }
}

fn zp_primitive(a: &Zp) -> Zp {
    let c = zp_content(a);
    zp_positive(&if c.is_one() { a.clone() } else { zp_div_int(a, &c) })
}

/// Gcd in `ℤ[y]`, with positive leading coefficient.
pub(super) fn z_gcd(a: &Zp, b: &Zp) -> Zp {
    if a.is_empty() {
        return zp_positive(b);
    }
    if b.is_empty() {
        return zp_positive(a);
    }
    let c = zp_content(a).gcd(&zp_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    if a == b {
        return zp_positive(a);
    }
    let a = zp_primitive(a);
    let b = zp_primitive(b);
    let (la, lb) = (a.last().unwrap(), b.last().unwrap());
    let gamma = la.gcd(lb);
    let mut deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut m = BigInt::one();
    let mut prev: Option<Zp> = None;
    for &p in primes() {
        if mod_int(la, p) == 0 || mod_int(lb, p) == 0 {
            continue;
        }
        let g = up_gcd(zp_mod(&a, p), zp_mod(&b, p), p);
        let dg = g.len() - 1;
        if dg == 0 {
            return vec![c];
        }
        if dg > deg {
            continue;
        }
        let g = up_scale(&g, mod_int(&gamma, p), p);
        if dg < deg {
            deg = dg;
            acc = g.iter().map(|&x| BigInt::from(x)).collect();
            m = BigInt::from(p);
            prev = None;
            continue;
        }
        let m_inv = inv_mod(mod_int(&m, p), p);
        for (x, &r) in acc.iter_mut().zip(&g) {
            crt_step(x, &m, r, p, m_inv);
        }
        m *= p;
        let half: BigInt = &m >> 1;
        let mut cand: Zp = acc.iter().map(|x| symmetric(x, &m, &half)).collect();
        zp_trim(&mut cand);
        if prev.as_ref() == Some(&cand) {
            let pp = zp_primitive(&cand);
            if zp_divexact(&a, &pp).is_some() && zp_divexact(&b, &pp).is_some() {
                return pp.iter().map(|x| x * &c).collect();
            }
        }
        prev = Some(cand);
    }
    panic!("modular gcd did not stabilize");
}

fn content_x(f: &Bp) -> Zp {
    let mut g: Zp = Vec::new();
    for c in f {
        if c.is_empty() {
            continue;
        }
        g = z_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn div_content(f: &Bp, c: &Zp) -> Bp {
    if c.len() == 1 && c[0].is_one() {
        return f.clone();
    }
    f.iter()
        .map(|x| if x.is_empty() { Vec::new() } else { zp_divexact(x, c).expect("content divides") })
        .collect()
}

fn deg_y(f: &Bp) -> usize {
    f.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0)
}

/// Gcd in `ℤ[y][x]` (outer index is the degree in `x`), up to sign.
pub(super) fn bz_gcd(f: &Bp, g: &Bp) -> Bp {
    if f.is_empty() {
        return g.clone();
    }
    if g.is_empty() {
        return f.clone();
    }
    let cf = content_x(f);
    let cg = content_x(g);
    let c = z_gcd(&cf, &cg);
    if f.len() == 1 || g.len() == 1 {
        return vec![c];
    }
    let f = div_content(f, &cf);
    let g = div_content(g, &cg);
    let (lf, lg) = (f.last().unwrap(), g.last().unwrap());
    let gamma = z_gcd(lf, lg);
    let npts = gamma.len() - 1 + deg_y(&f).min(deg_y(&g)) + 1;

    let mut deg = usize::MAX;
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut m = BigInt::one();
    let mut prev: Option<Bp> = None;
    for &p in primes() {
        let gm = zp_mod(&gamma, p);
        let (lfp, lgp) = (zp_mod(lf, p), zp_mod(lg, p));
        if gm.is_empty() || lfp.is_empty() || lgp.is_empty() {
            continue;
        }
        let fp: Vec<Up> = f.iter().map(|c| zp_mod(c, p)).collect();
        let gp: Vec<Up> = g.iter().map(|c| zp_mod(c, p)).collect();
        let mut xs: Vec<u64> = Vec::new();
        let mut imgs: Vec<Up> = Vec::new();
        let mut dp = usize::MAX;
        // Pseudo-random points, so a bad point for one prime is not reused for all.
        let mut state = p;
        while xs.len() < npts + 1 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let r = (state >> 33) % (p - 1) + 1;
            if xs.contains(&r) {
                continue;
            }
            let gr = up_eval(&gm, r, p);
            if gr == 0 || up_eval(&lfp, r, p) == 0 || up_eval(&lgp, r, p) == 0 {
                continue;
            }
            let mut fr: Up = fp.iter().map(|c| up_eval(c, r, p)).collect();
            let mut gr_: Up = gp.iter().map(|c| up_eval(c, r, p)).collect();
            up_trim(&mut fr);
            up_trim(&mut gr_);
            let h = up_gcd(fr, gr_, p);
            let dh = h.len() - 1;
            if dh == 0 {
                return vec![c];
            }
            if dh > dp {
                continue;
            }
            if dh < dp {
                dp = dh;
                xs.clear();
                imgs.clear();
            }
            xs.push(r);
            imgs.push(up_scale(&h, gr, p));
        }
        if dp > deg {
            continue;
        }
        let hp: Vec<Up> = (0..=dp)
            .map(|k| {
                let ys: Vec<u64> = imgs.iter().map(|h| h[k]).collect();
                let mut v = interpolate(&xs, &ys, p);
                v.resize(npts + 1, 0);
                v
            })
            .collect();
        if dp < deg {
            deg = dp;
            acc = hp.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
            m = BigInt::from(p);
            prev = None;
            continue;
        }
        let m_inv = inv_mod(mod_int(&m, p), p);
        for (row, hrow) in acc.iter_mut().zip(&hp) {
            for (x, &r) in row.iter_mut().zip(hrow) {
                crt_step(x, &m, r, p, m_inv);
            }
        }
        m *= p;
        let half: BigInt = &m >> 1;
        let mut cand: Bp = acc
            .iter()
            .map(|row| {
                let mut z: Zp = row.iter().map(|x| symmetric(x, &m, &half)).collect();
                zp_trim(&mut z);
                z
            })
            .collect();
        bp_trim(&mut cand);
        if prev.as_ref() == Some(&cand) {
            let pp = div_content(&cand, &content_x(&cand));
            if bp_divexact(&f, &pp).is_some() && bp_divexact(&g, &pp).is_some() {
                return pp.iter().map(|z| if z.is_empty() { Vec::new() } else { zp_mul(z, &c) }).collect();
            }
        }
        prev = Some(cand);
    }
    panic!("modular gcd did not stabilize");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Zp {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn univariate() {
        // (y + 1)(2y - 3) and (y + 1)(y^2 + 5)
        let a = zp_mul(&z(&[1, 1]), &z(&[-3, 2]));
        let b = zp_mul(&z(&[1, 1]), &z(&[5, 0, 1]));
        assert_eq!(z_gcd(&a, &b), z(&[1, 1]));
        assert_eq!(z_gcd(&z(&[4, 6]), &z(&[6, 9])), z(&[2, 3]));
    }

    #[test]
    fn interpolation_roundtrip() {
        let p = primes()[0];
        let poly: Up = vec![3, 0, 7, 1];
        let xs = [1, 2, 5, 9];
        let ys: Vec<u64> = xs.iter().map(|&x| up_eval(&poly, x, p)).collect();
        assert_eq!(interpolate(&xs, &ys, p), poly);
    }
}
