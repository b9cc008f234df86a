//! Quadratic multifactor Hensel lifting over Z/p^k.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::ModPoly;
use super::poly::IntegerPolynomial;
use super::rational::mod_inverse;

fn reduce(f: &IntegerPolynomial, m: &BigInt) -> IntegerPolynomial {
    IntegerPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &IntegerPolynomial, b: &IntegerPolynomial, m: &BigInt) -> IntegerPolynomial {
    reduce(&(a * b), m)
}

fn sub_mod(a: &IntegerPolynomial, b: &IntegerPolynomial, m: &BigInt) -> IntegerPolynomial {
    reduce(&(a - b), m)
}

fn add_mod(a: &IntegerPolynomial, b: &IntegerPolynomial, m: &BigInt) -> IntegerPolynomial {
    reduce(&(a + b), m)
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &IntegerPolynomial, b: &IntegerPolynomial, m: &BigInt) -> (IntegerPolynomial, IntegerPolynomial) {
    let db = b.degree().expect("division by zero");
    let Some(da) = a.degree() else {
        return (IntegerPolynomial::zero(), IntegerPolynomial::zero());
    };
    if da < db {
        return (IntegerPolynomial::zero(), reduce(a, m));
    }
    let mut r: Vec<BigInt> = a.coeffs().iter().map(|c| c.mod_floor(m)).collect();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (IntegerPolynomial::new(q), IntegerPolynomial::new(r))
}

/// One quadratic lifting step: from `f ≡ g h (mod m)`, `s g + t h ≡ 1 (mod m)`
/// to the same relations modulo `m^2`. `h` must be monic.
fn hensel_step(
    f: &IntegerPolynomial,
    g: &IntegerPolynomial,
    h: &IntegerPolynomial,
    s: &IntegerPolynomial,
    t: &IntegerPolynomial,
    m: &BigInt,
) -> [IntegerPolynomial; 4] {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (q, r) = div_rem_monic(&mul_mod(s, &e, &m2), h, &m2);
    let g_new = add_mod(&add_mod(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
    let h_new = add_mod(h, &r, &m2);
    let b = sub_mod(
        &add_mod(&mul_mod(s, &g_new, &m2), &mul_mod(t, &h_new, &m2), &m2),
        &IntegerPolynomial::one(),
        &m2,
    );
    let (c, d) = div_rem_monic(&mul_mod(s, &b, &m2), &h_new, &m2);
    let s_new = sub_mod(s, &d, &m2);
    let t_new = sub_mod(&sub_mod(t, &mul_mod(t, &b, &m2), &m2), &mul_mod(&c, &g_new, &m2), &m2);
    [g_new, h_new, s_new, t_new]
}

/// Lift a factorization `f ≡ lc(f) * ∏ factors (mod p)` of a polynomial
/// that is squarefree mod `p` to a factorization modulo `p^(2^j) >= bound`.
///
/// `factors` must be monic and pairwise coprime mod `p`. Returns the lifted
/// monic factors and the final modulus.
pub fn lift_factors(
    f: &IntegerPolynomial,
    factors: &[ModPoly],
    p: u64,
    bound: &BigInt,
) -> (Vec<IntegerPolynomial>, BigInt) {
    let bp = BigInt::from(p);
    let mut steps = 0u32;
    let mut modulus = bp.clone();
    while &modulus < bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let mut out = Vec::with_capacity(factors.len());
    lift_rec(&reduce(f, &modulus), factors, p, steps, &modulus, &mut out);
    (out, modulus)
}

fn lift_rec(
    f: &IntegerPolynomial,
    factors: &[ModPoly],
    p: u64,
    steps: u32,
    modulus: &BigInt,
    out: &mut Vec<IntegerPolynomial>,
) {
    let lc = f.leading().cloned().unwrap_or_else(BigInt::one);
    if factors.len() == 1 {
        let inv = mod_inverse(&lc, modulus).expect("leading coefficient invertible mod p");
        out.push(reduce(&f.scale(&inv), modulus));
        return;
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let prod = |fs: &[ModPoly]| fs.iter().fold(ModPoly::one(p), |a, b| a.mul(b));
    let lc_p = super::rational::bigint_to_u64_mod(&lc, p);
    let g0 = prod(left).scale(lc_p);
    let h0 = prod(right);
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());

    let bp = BigInt::from(p);
    let mut m = bp.clone();
    let mut g = g0.to_int();
    let mut h = h0.to_int();
    let mut s = s0.to_int();
    let mut t = t0.to_int();
    for _ in 0..steps {
        let fm = reduce(f, &(&m * &m));
        let [g2, h2, s2, t2] = hensel_step(&fm, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    debug_assert_eq!(&m, modulus);
    lift_rec(&g, left, p, steps, modulus, out);
    lift_rec(&h, right, p, steps, modulus, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::poly::zpoly;

    #[test]
    fn lifts_quadratic_split() {
        // x^2 - 2 splits mod 7 as (x-3)(x-4); lifted roots are 7-adic sqrt(2).
        let f = zpoly(&[-2, 0, 1]);
        let facs = vec![ModPoly::new(7, vec![4, 1]), ModPoly::new(7, vec![3, 1])];
        let (lifted, m) = lift_factors(&f, &facs, 7, &BigInt::from(10_000));
        assert!(m >= BigInt::from(10_000));
        let prod = mul_mod(&lifted[0], &lifted[1], &m);
        assert_eq!(prod, reduce(&f, &m));
    }

    #[test]
    fn lifts_with_leading_coefficient() {
        // 6x^3 + x^2 - 4x + 1 = (2x-1)(3x-1)(x+1)
        let f = zpoly(&[1, -4, 1, 6]);
        let p = 5;
        let fp = ModPoly::from_int(&f, p);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        let facs = crate::qpoly::modp::factor_squarefree(&fp.monic(), &mut rng);
        assert_eq!(facs.len(), 3);
        let (lifted, m) = lift_factors(&f, &facs, p, &BigInt::from(1_000_000));
        let prod = lifted
            .iter()
            .fold(IntegerPolynomial::constant(BigInt::from(6)), |a, b| mul_mod(&a, b, &m));
        assert_eq!(prod, reduce(&f, &m));
    }
}
