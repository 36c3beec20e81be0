//! Univariate polynomials over `F_p`, just enough to find the eigenvalues of
//! small matrices: characteristic polynomials and roots.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty vector.

use rand::Rng;

use super::field::PrimeField;
use super::matrix::Matrix;

pub type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn eval(f: PrimeField, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

fn sub(f: PrimeField, a: &[u64], b: &[u64]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

fn mul(f: PrimeField, a: &[u64], b: &[u64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

fn rem(f: PrimeField, a: &[u64], m: &[u64]) -> Poly {
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = f.inv(m[dm]);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &mc) in m.iter().enumerate().take(dm + 1) {
            r[i + shift] = f.sub(r[i + shift], f.mul(c, mc));
        }
        r = trim(r);
    }
    r
}

fn monic(f: PrimeField, a: Poly) -> Poly {
    match degree(&a) {
        None => a,
        Some(d) => {
            let inv = f.inv(a[d]);
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

pub fn gcd(f: PrimeField, a: &[u64], b: &[u64]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn powmod(f: PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Poly {
    let mut acc: Poly = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// Characteristic polynomial `det(x I - A)` via reduction to upper
/// Hessenberg form followed by the standard three-term recurrence.
pub fn char_poly(a: &Matrix) -> Poly {
    assert!(a.is_square());
    let f = a.field();
    let n = a.rows();
    let mut h = a.clone();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                let (x, y) = (h.get(piv, c), h.get(j + 1, c));
                h.set(piv, c, y);
                h.set(j + 1, c, x);
            }
            for r in 0..n {
                let (x, y) = (h.get(r, piv), h.get(r, j + 1));
                h.set(r, piv, y);
                h.set(r, j + 1, x);
            }
        }
        let inv = f.inv(h.get(j + 1, j));
        for i in j + 2..n {
            let t = f.mul(h.get(i, j), inv);
            if t == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.sub(h.get(i, c), f.mul(t, h.get(j + 1, c)));
                h.set(i, c, v);
            }
            for r in 0..n {
                let v = f.add(h.get(r, j + 1), f.mul(t, h.get(r, i)));
                h.set(r, j + 1, v);
            }
        }
    }
    // p[k] = char poly of the leading k x k block
    let mut polys: Vec<Poly> = vec![vec![1]];
    for k in 1..=n {
        let hk = h.get(k - 1, k - 1);
        let mut pk = mul(f, &[f.neg(hk), 1], &polys[k - 1]);
        let mut t = 1u64;
        for i in (1..k).rev() {
            // t = product of sub-diagonal entries h[i][i-1] .. h[k-1][k-2]
            t = f.mul(t, h.get(i, i - 1));
            let coef = f.mul(h.get(i - 1, k - 1), t);
            if coef != 0 {
                let term: Poly = polys[i - 1].iter().map(|&c| f.mul(c, coef)).collect();
                pk = sub(f, &pk, &term);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

const BRUTE_FORCE_LIMIT: u64 = 1 << 16;

/// Distinct roots in `F_p`, sorted ascending.
pub fn roots<R: Rng>(f: PrimeField, a: &[u64], rng: &mut R) -> Vec<u64> {
    let a = trim(a.to_vec());
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = f.modulus();
    if p <= BRUTE_FORCE_LIMIT {
        return (0..p).filter(|&x| eval(f, &a, x) == 0).collect();
    }
    // g = gcd(a, x^p - x) is the product of the distinct linear factors.
    let xp = powmod(f, &[0, 1], p, &a);
    let g = gcd(f, &a, &sub(f, &xp, &[0, 1]));
    let mut out = Vec::new();
    split_linear(f, g, rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear<R: Rng>(f: PrimeField, g: Poly, rng: &mut R, out: &mut Vec<u64>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(f.div(g[0], g[1]))),
        Some(_) => {
            let p = f.modulus();
            loop {
                let shift = rng.gen_range(0..p);
                let h = powmod(f, &[shift, 1], (p - 1) / 2, &g);
                let d = gcd(f, &g, &sub(f, &h, &[1]));
                let dd = degree(&d).unwrap_or(0);
                if dd > 0 && dd < degree(&g).unwrap() {
                    let q = quotient(f, &g, &d);
                    split_linear(f, d, rng, out);
                    split_linear(f, q, rng, out);
                    return;
                }
            }
        }
    }
}

fn quotient(f: PrimeField, a: &[u64], m: &[u64]) -> Poly {
    let dm = degree(m).unwrap();
    let lead_inv = f.inv(m[dm]);
    let mut r = trim(a.to_vec());
    let da = degree(&r).unwrap_or(0);
    if da < dm {
        return Vec::new();
    }
    let mut q = vec![0; da - dm + 1];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        q[dr - dm] = c;
        for (i, &mc) in m.iter().enumerate().take(dm + 1) {
            r[i + dr - dm] = f.sub(r[i + dr - dm], f.mul(c, mc));
        }
        r = trim(r);
    }
    trim(q)
}

/// Distinct eigenvalues of a square matrix lying in the base field.
pub fn eigenvalues<R: Rng>(a: &Matrix, rng: &mut R) -> Vec<u64> {
    roots(a.field(), &char_poly(a), rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn det_at(a: &Matrix, x: u64) -> u64 {
        let n = a.rows();
        let xi = Matrix::identity(a.field(), n).scale(x);
        xi.sub(a).determinant()
    }

    #[test]
    fn char_poly_matches_determinant_oracle() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..6 {
            for _ in 0..20 {
                let data = (0..n * n).map(|_| rng.gen_range(0..101)).collect();
                let a = Matrix::new(f, n, n, data);
                let cp = char_poly(&a);
                assert_eq!(degree(&cp), Some(n));
                for x in [0, 1, 2, 50, 100] {
                    assert_eq!(eval(f, &cp, x), det_at(&a, x));
                }
            }
        }
    }

    #[test]
    fn roots_small_and_large_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = PrimeField::new(101).unwrap();
        // (x-3)(x-5)(x^2+1); x^2+1 has roots 10, 91 mod 101
        let p = mul(f, &mul(f, &[f.neg(3), 1], &[f.neg(5), 1]), &[1, 0, 1]);
        assert_eq!(roots(f, &p, &mut rng), vec![3, 5, 10, 91]);

        let big = PrimeField::new(2_147_483_647).unwrap();
        let p = mul(big, &mul(big, &[big.neg(17), 1], &[big.neg(123_456), 1]), &[1, 1, 1]);
        let r = roots(big, &p, &mut rng);
        for &x in &r {
            assert_eq!(eval(big, &p, x), 0);
        }
        assert!(r.contains(&17) && r.contains(&123_456));
    }
}
