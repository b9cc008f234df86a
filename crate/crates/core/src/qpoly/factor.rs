//! Factorization over Q: squarefree decomposition, modular factorization,
//! Hensel lifting and exhaustive recombination (Zassenhaus).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hensel::lift_factors;
use super::modp::{self, ModPoly};
use super::poly::{integer_gcd, require_nonzero, IntegerPolynomial, RationalPolynomial};
use super::rational::{mod_inverse, symmetric_mod, Rational};
use crate::error::{AtlasError, Result};

/// Soft guard on the degree accepted by [`factor_over_q`].
pub const MAX_FACTOR_DEGREE: usize = 200;

/// Number of candidate primes examined when choosing the modular prime.
const PRIME_CANDIDATES: usize = 25;

/// `f = unit * ∏ factor^multiplicity`, factors primitive and irreducible with
/// positive leading coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(IntegerPolynomial, u32)>,
}

impl Factorization {
    /// Multiply everything back out.
    pub fn expand(&self) -> RationalPolynomial {
        let mut acc = RationalPolynomial::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.to_rational().pow(*e);
        }
        acc
    }
}

/// Monic product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &RationalPolynomial) -> Result<RationalPolynomial> {
    require_nonzero(f)?;
    if f.degree() == Some(0) {
        return Ok(RationalPolynomial::one());
    }
    let g = f.gcd(&f.derivative());
    Ok(f.div_exact(&g).expect("gcd divides f").monic())
}

/// Yun's algorithm; returns `(squarefree part, multiplicity)` pairs with
/// primitive, pairwise coprime parts of positive degree.
pub fn squarefree_decomposition(f: &IntegerPolynomial) -> Result<Vec<(IntegerPolynomial, u32)>> {
    require_nonzero(f)?;
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let f = f.to_rational().monic();
    let df = f.derivative();
    let a = f.gcd(&df);
    let mut b = f.div_exact(&a).expect("gcd divides f");
    let mut d = &df.div_exact(&a).expect("gcd divides f'") - &b.derivative();
    let mut i = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let g = b.gcd(&d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.to_primitive().1, i));
        }
        b = b.div_exact(&g).expect("gcd divides b");
        let c = d.div_exact(&g).expect("gcd divides d");
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Rational roots of `f`, sorted ascending, each listed once.
pub fn rational_roots(f: &IntegerPolynomial) -> Result<Vec<Rational>> {
    require_nonzero(f)?;
    let mut roots = Vec::new();
    if f.degree() == Some(0) {
        return Ok(roots);
    }
    let g = squarefree_integer(f);
    let mut g = g;
    if g.coeff(0).is_zero() {
        roots.push(Rational::zero());
        g = g.div_exact(&IntegerPolynomial::x()).expect("x divides g");
    }
    if g.degree().unwrap_or(0) > 0 {
        roots.extend(nonzero_rational_roots(&g));
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn squarefree_integer(f: &IntegerPolynomial) -> IntegerPolynomial {
    // A squarefree reduction of full degree proves f squarefree, which is far
    // cheaper than an integer gcd for large degrees.
    let lc = f.leading().cloned().unwrap_or_else(BigInt::one);
    let deg = f.degree().unwrap_or(0);
    let certified = (5u64..200).filter(|&n| modp::is_prime(n)).any(|p| {
        let fp = ModPoly::from_int(f, p);
        !(&lc % BigInt::from(p)).is_zero() && fp.degree() == Some(deg) && fp.is_squarefree()
    });
    if certified {
        return f.to_rational().to_primitive().1;
    }
    let g = integer_gcd(f, &f.derivative());
    f.to_rational()
        .div_exact(&g.to_rational())
        .expect("gcd divides f")
        .to_primitive()
        .1
}

/// Smallest primes `p > 3` with `p ∤ lc(f)` and `f mod p` squarefree.
fn good_primes(f: &IntegerPolynomial) -> impl Iterator<Item = u64> + '_ {
    let lc = f.leading().cloned().unwrap_or_else(BigInt::one);
    let deg = f.degree().unwrap_or(0);
    (5u64..)
        .filter(|&n| modp::is_prime(n))
        .filter(move |&p| !(&lc % BigInt::from(p)).is_zero())
        .filter(move |&p| {
            let fp = ModPoly::from_int(f, p);
            fp.degree() == Some(deg) && fp.is_squarefree()
        })
}

fn nonzero_rational_roots(g: &IntegerPolynomial) -> Vec<Rational> {
    let p = good_primes(g).next().expect("a good prime exists for squarefree input");
    let gp = ModPoly::from_int(g, p);
    let lc = g.leading().unwrap().clone();
    // |lc * root| <= |lc| * max|coeff|, so recovery needs twice that.
    let bound = lc.abs() * g.max_norm() * 2 + 1;
    let dg = g.derivative();
    let mut out = Vec::new();
    for r0 in 0..p {
        if gp.eval(r0) != 0 {
            continue;
        }
        // p-adic Newton iteration
        let mut m = BigInt::from(p);
        let mut r = BigInt::from(r0);
        while m < bound {
            m = &m * &m;
            let val = g.eval(&r).mod_floor(&m);
            let der = dg.eval(&r).mod_floor(&m);
            let inv = mod_inverse(&der, &m).expect("simple root mod p");
            r = (&r - val * inv).mod_floor(&m);
        }
        let num = symmetric_mod(&(&lc * &r), &m);
        let cand = Rational::new(num, lc.clone());
        if g.to_rational().eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// Factor `f` into irreducibles over Q.
pub fn factor_over_q(f: &IntegerPolynomial) -> Result<Factorization> {
    require_nonzero(f)?;
    let deg = f.degree().unwrap();
    if deg > MAX_FACTOR_DEGREE {
        return Err(AtlasError::UnsupportedInput(format!(
            "degree {deg} exceeds factorization guard {MAX_FACTOR_DEGREE}"
        )));
    }
    let (content, prim) = f.content_primitive();
    let mut factors = Vec::new();
    let mut product = RationalPolynomial::one();
    for (part, mult) in squarefree_decomposition(&prim)? {
        for irr in factor_squarefree_primitive(&part) {
            product = &product * &irr.to_rational().pow(mult);
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let unit = if product.is_zero() {
        Rational::from_integer(content)
    } else {
        // The squarefree parts are primitive; recover the unit exactly.
        let lc_prod = product.leading().unwrap().clone();
        Rational::from_integer(f.leading().unwrap().clone()) / lc_prod
    };
    Ok(Factorization { unit, factors })
}

/// Zassenhaus factorization of a primitive squarefree polynomial.
pub fn factor_squarefree_primitive(f: &IntegerPolynomial) -> Vec<IntegerPolynomial> {
    let f = f.primitive_part();
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f];
    }
    let mut out = Vec::new();
    let mut f = f;
    // Pull out x first: it is cheap and simplifies the modular step.
    if f.coeff(0).is_zero() {
        out.push(IntegerPolynomial::x());
        f = f.div_exact(&IntegerPolynomial::x()).unwrap();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        if f.degree() == Some(1) {
            out.push(f);
            return out;
        }
    }

    let (p, modular) = choose_prime(&f);
    if modular.len() == 1 {
        out.push(f);
        return out;
    }

    let n = f.degree().unwrap();
    let lc = f.leading().unwrap().abs();
    let bound = BigInt::from(2) * &lc * (BigInt::one() << n) * BigInt::from(n + 1) * f.max_norm();
    let (lifted, m) = lift_factors(&f, &modular, p, &bound);
    out.extend(recombine(f, lifted, &m, None));
    out
}

/// The irreducible factors of `f` over Q of degree at most `max_degree`.
///
/// Recombination only tries subsets of modular factors whose degrees add up
/// to at most `max_degree`, which keeps this cheap even when the remaining
/// cofactor is a large irreducible polynomial.
pub fn factors_up_to_degree(f: &IntegerPolynomial, max_degree: usize) -> Result<Vec<IntegerPolynomial>> {
    require_nonzero(f)?;
    let mut out = Vec::new();
    let mut g = squarefree_integer(f).primitive_part();
    if g.degree().unwrap_or(0) == 0 || max_degree == 0 {
        return Ok(out);
    }
    if g.coeff(0).is_zero() {
        out.push(IntegerPolynomial::x());
        g = g.div_exact(&IntegerPolynomial::x()).unwrap();
    }
    match g.degree().unwrap_or(0) {
        0 => {}
        d if d <= 1 => out.push(g),
        _ => {
            let (p, modular) = choose_prime(&g);
            if modular.len() == 1 {
                if g.degree().unwrap() <= max_degree {
                    out.push(g);
                }
            } else {
                let n = g.degree().unwrap();
                let lc = g.leading().unwrap().abs();
                let bound = BigInt::from(2) * &lc * (BigInt::one() << n) * BigInt::from(n + 1) * g.max_norm();
                let (lifted, m) = lift_factors(&g, &modular, p, &bound);
                out.extend(recombine(g, lifted, &m, Some(max_degree)));
            }
        }
    }
    out.retain(|h| h.degree().unwrap_or(0) <= max_degree);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(out)
}

/// Pick a prime among the first good candidates that minimizes the number of
/// modular factors, and return that prime with the monic factors mod p.
fn choose_prime(f: &IntegerPolynomial) -> (u64, Vec<ModPoly>) {
    let mut best: Option<(u64, usize)> = None;
    for p in good_primes(f).take(PRIME_CANDIDATES) {
        let count = modp::degree_pattern(&ModPoly::from_int(f, p).monic()).len();
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((p, count));
        }
        if count <= 2 {
            break;
        }
    }
    let (p, _) = best.expect("good prime exists");
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let facs = modp::factor_squarefree(&ModPoly::from_int(f, p).monic(), &mut rng);
    (p, facs)
}

/// Zassenhaus recombination. With `cap`, only subsets of total degree at most
/// `cap` are tried and the leftover cofactor is reported only if it is small
/// enough to have been covered by the search.
fn recombine(
    mut f: IntegerPolynomial,
    mut modular: Vec<IntegerPolynomial>,
    m: &BigInt,
    cap: Option<usize>,
) -> Vec<IntegerPolynomial> {
    let mut out = Vec::new();
    let mut s = 1;
    let deg = |g: &IntegerPolynomial| g.degree().unwrap_or(0);
    while 2 * s <= modular.len() {
        if let Some(cap) = cap {
            let mut degs: Vec<usize> = modular.iter().map(deg).collect();
            degs.sort_unstable();
            if degs.iter().take(s).sum::<usize>() > cap {
                break;
            }
        }
        let lc = f.leading().unwrap().clone();
        let f0 = f.coeff(0);
        let mut found = None;
        for subset in Combinations::new(modular.len(), s) {
            if let Some(cap) = cap {
                if subset.iter().map(|&i| deg(&modular[i])).sum::<usize>() > cap {
                    continue;
                }
            }
            // constant-term test
            if !f0.is_zero() {
                let c0 = subset
                    .iter()
                    .fold(lc.clone(), |acc, &i| (acc * modular[i].coeff(0)).mod_floor(m));
                let c0 = symmetric_mod(&c0, m);
                if c0.is_zero() || !(&lc * &f0 % &c0).is_zero() {
                    continue;
                }
            }
            let mut g = IntegerPolynomial::constant(lc.clone());
            for &i in &subset {
                g = IntegerPolynomial::new((&g * &modular[i]).coeffs().iter().map(|c| c.mod_floor(m)).collect());
            }
            let g = IntegerPolynomial::new(g.coeffs().iter().map(|c| symmetric_mod(c, m)).collect()).primitive_part();
            if let Some(q) = f.div_exact(&g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = q.primitive_part();
                let mut k = 0;
                modular.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
            }
            None => s += 1,
        }
    }
    let covered = cap.is_none_or(|c| deg(&f) <= c);
    if deg(&f) > 0 && covered {
        out.push(f.primitive_part());
    }
    out
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

/// Necessary condition for `f` to have a factor over Q of degree exactly `d`
/// that is a product of irreducible factors: for every sampled good prime,
/// some sub-multiset of the modular factor degrees sums to `d`.
///
/// A `false` answer is a proof that no such factor exists.
pub fn may_have_factor_of_degree(f: &IntegerPolynomial, d: usize, primes: usize) -> bool {
    let g = squarefree_integer(f);
    if g.degree().unwrap_or(0) < d {
        return false;
    }
    for p in good_primes(&g).take(primes) {
        let pattern = modp::degree_pattern(&ModPoly::from_int(&g, p).monic());
        if !subset_sum(&pattern, d) {
            return false;
        }
    }
    true
}

fn subset_sum(items: &[usize], target: usize) -> bool {
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for &it in items {
        if it > target {
            continue;
        }
        for s in (it..=target).rev() {
            if reach[s - it] {
                reach[s] = true;
            }
        }
    }
    reach[target]
}


#[cfg(test)]
mod root_regressions {
    use super::*;
    use crate::qpoly::poly::zpoly;
    use crate::qpoly::rational::{int, rat};

    #[test]
    fn roots_divisible_by_the_lifting_prime() {
        // x³ - 91x - 330 = (x + 5)(x + 6)(x - 11); 5 is the first good prime.
        let roots = rational_roots(&zpoly(&[-330, -91, 0, 1])).unwrap();
        assert_eq!(roots, vec![int(-6), int(-5), int(11)]);
    }

    #[test]
    fn roots_with_large_denominator_product() {
        // (7x - 300)(x + 1)
        let roots = rational_roots(&zpoly(&[-300, -293, 7])).unwrap();
        assert_eq!(roots, vec![int(-1), rat(300, 7)]);
    }
}
