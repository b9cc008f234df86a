//! Rational isogenies of prime degree and their Vélu codomains.
//!
//! Degrees 2, 3, 5, 7 and 13 are found online from division polynomials;
//! the sporadic degrees come from the certified table in [`sporadic`].

pub mod sporadic;
mod velu;

use num_traits::One;

use crate::error::{AtlasError, Result};
use crate::qpoly::{factors_up_to_degree, may_have_factor_of_degree, Rational, RationalPolynomial};
use crate::torsion::ShortCurve;
use crate::weier::WeierstrassModel;

pub use sporadic::{sporadic_table, SporadicIsogenyRecord, SPORADIC_DATA_ENV, SPORADIC_PRIMES};

/// Degrees searched through division polynomials.
pub const ONLINE_PRIMES: [u32; 5] = [2, 3, 5, 7, 13];

/// Every prime that can be the degree of a rational isogeny.
pub const ADMISSIBLE_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163];

/// Good primes sampled before factoring a division polynomial.
const PREFILTER_PRIMES: usize = 6;

/// A kernel given by its monic kernel polynomial in short-model x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDescriptor {
    pub ell: u32,
    pub polynomial: RationalPolynomial,
}

/// An isogeny of prime degree. `domain` is the short model on which the
/// kernel polynomial is written; `codomain` is the Vélu short model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIsogeny {
    pub domain: WeierstrassModel,
    pub kernel: KernelDescriptor,
    pub codomain: WeierstrassModel,
}

impl PrimeIsogeny {
    pub fn degree(&self) -> u32 {
        self.kernel.ell
    }
}

fn short_ab(e: &WeierstrassModel) -> Result<(&Rational, &Rational)> {
    e.short_coefficients()
        .ok_or_else(|| AtlasError::UnsupportedInput("expected a short model y^2 = x^3 + Ax + B".into()))
}

/// Whether `f` is the kernel polynomial of a rational `ell`-isogeny of the
/// short model `e`: the Vélu maps built from `f` must satisfy the codomain
/// equation as an exact polynomial identity.
pub fn validate_kernel(e: &WeierstrassModel, f: &RationalPolynomial, ell: u32) -> bool {
    match short_ab(e) {
        Ok((a, b)) => velu::velu(a, b, f, ell).is_some(),
        Err(_) => false,
    }
}

/// Vélu codomain of a certified kernel on the short model `e`.
pub fn velu_codomain(e: &WeierstrassModel, k: &KernelDescriptor) -> Result<WeierstrassModel> {
    let (a, b) = short_ab(e)?;
    let (a2, b2) = velu::velu(a, b, &k.polynomial, k.ell).ok_or_else(|| {
        AtlasError::InvalidKernel(format!(
            "{} is not a kernel polynomial of degree {}",
            k.polynomial, k.ell
        ))
    })?;
    WeierstrassModel::short(a2, b2)
}

impl ShortCurve {
    /// One kernel per rational root of `x³ + Ax + B`.
    pub fn two_isogeny_kernels(&self) -> Result<Vec<KernelDescriptor>> {
        Ok(crate::qpoly::rational_roots(&self.cubic())?
            .into_iter()
            .map(|r| KernelDescriptor {
                ell: 2,
                polynomial: RationalPolynomial::linear_root(r),
            })
            .collect())
    }

    /// Kernels of degree `ell ∈ {3, 5, 7, 13}`: products of irreducible
    /// factors of `ψ_ℓ` of total degree `(ℓ-1)/2` that pass the Vélu check.
    pub fn odd_kernel_polynomials(&mut self, ell: u32) -> Result<Vec<KernelDescriptor>> {
        if !matches!(ell, 3 | 5 | 7 | 13) {
            return Err(AtlasError::UnsupportedInput(format!(
                "online kernel search covers 3, 5, 7, 13, not {ell}"
            )));
        }
        let half = (ell as usize - 1) / 2;
        let psi = self.division_polynomials().g(ell as usize).clone();
        if !may_have_factor_of_degree(&psi, half, PREFILTER_PRIMES) {
            return Ok(Vec::new());
        }
        let factors: Vec<RationalPolynomial> = factors_up_to_degree(&psi, half)?
            .iter()
            .map(|f| f.to_rational().monic())
            .collect();
        let short = self.short().clone();
        let mut out: Vec<KernelDescriptor> = Vec::new();
        for subset in subsets_with_degree(&factors, half) {
            let poly = subset
                .iter()
                .fold(RationalPolynomial::one(), |acc, &i| &acc * &factors[i]);
            if validate_kernel(&short, &poly, ell) && !out.iter().any(|k| k.polynomial == poly) {
                out.push(KernelDescriptor { ell, polynomial: poly });
            }
        }
        Ok(out)
    }

    /// Sporadic isogenies, transported from the table by a quadratic twist.
    pub fn sporadic_isogenies(&self) -> Result<Vec<PrimeIsogeny>> {
        let j = self.short().j_invariant();
        let mut out = Vec::new();
        for rec in sporadic_table()? {
            if &rec.j != j {
                continue;
            }
            let kernel = self.transport(rec)?;
            let codomain = velu_codomain(self.short(), &kernel).map_err(|_| {
                AtlasError::invariant(format!("transported {}-isogeny kernel failed certification", rec.ell))
            })?;
            if codomain.j_invariant() != &rec.partner_j {
                return Err(AtlasError::invariant("sporadic codomain has the wrong j-invariant"));
            }
            out.push(PrimeIsogeny {
                domain: self.short().clone(),
                kernel,
                codomain,
            });
        }
        Ok(out)
    }

    /// Move a record's kernel to this curve: with `A = λ²A₀`, `B = λ³B₀`
    /// the kernel roots scale by `λ`.
    fn transport(&self, rec: &SporadicIsogenyRecord) -> Result<KernelDescriptor> {
        let a = Rational::from_integer(self.a().clone());
        let b = Rational::from_integer(self.b().clone());
        let lambda = (&rec.a * &b) / (&a * &rec.b);
        if a != &lambda * &lambda * &rec.a || b != &lambda * &lambda * &lambda * &rec.b {
            return Err(AtlasError::invariant(format!(
                "curve with j = {} is not a quadratic twist of the tabulated model",
                rec.j
            )));
        }
        let k = rec.monic_kernel();
        let d = k.degree().unwrap();
        let mut scale = Rational::one();
        let mut coeffs = vec![Rational::one(); d + 1];
        for i in (0..=d).rev() {
            coeffs[i] = k.coeff(i) * &scale;
            scale *= &lambda;
        }
        Ok(KernelDescriptor {
            ell: rec.ell,
            polynomial: RationalPolynomial::new(coeffs),
        })
    }

    /// All rational isogenies of prime degree (restricted to `only` if given).
    pub fn prime_isogenies(&mut self, only: Option<u32>) -> Result<Vec<PrimeIsogeny>> {
        if let Some(l) = only {
            if !ADMISSIBLE_PRIMES.contains(&l) {
                return Err(AtlasError::UnsupportedInput(format!(
                    "{l} is not the degree of any rational prime isogeny"
                )));
            }
        }
        let wanted = |l: u32| only.is_none_or(|o| o == l);
        let short = self.short().clone();
        let mut kernels = Vec::new();
        if wanted(2) {
            kernels.extend(self.two_isogeny_kernels()?);
        }
        for ell in [3, 5, 7, 13] {
            if wanted(ell) {
                kernels.extend(self.odd_kernel_polynomials(ell)?);
            }
        }
        let mut out = Vec::new();
        for k in kernels {
            let codomain = velu_codomain(&short, &k)?;
            out.push(PrimeIsogeny {
                domain: short.clone(),
                kernel: k,
                codomain,
            });
        }
        if only.is_none_or(|l| SPORADIC_PRIMES.contains(&l)) {
            out.extend(self.sporadic_isogenies()?.into_iter().filter(|i| wanted(i.degree())));
        }
        Ok(out)
    }
}

/// Index sets of `polys` whose degrees add up to exactly `target`.
fn subsets_with_degree(polys: &[RationalPolynomial], target: usize) -> Vec<Vec<usize>> {
    fn go(polys: &[RationalPolynomial], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..polys.len() {
            let d = polys[i].degree().unwrap_or(0);
            if d == 0 || d > left {
                continue;
            }
            cur.push(i);
            go(polys, i + 1, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(polys, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Rational 2-isogeny kernels of `e` (on its integral short model).
pub fn two_isogeny_kernels(e: &WeierstrassModel) -> Result<Vec<KernelDescriptor>> {
    ShortCurve::new(e).two_isogeny_kernels()
}

/// Rational `ell`-isogeny kernels of `e` for `ell ∈ {3, 5, 7, 13}`.
pub fn odd_kernel_polynomials(e: &WeierstrassModel, ell: u32) -> Result<Vec<KernelDescriptor>> {
    ShortCurve::new(e).odd_kernel_polynomials(ell)
}

/// Sporadic-degree isogenies of `e`.
pub fn sporadic_isogenies(e: &WeierstrassModel) -> Result<Vec<PrimeIsogeny>> {
    ShortCurve::new(e).sporadic_isogenies()
}

/// Every rational isogeny of prime degree from `e`.
pub fn prime_isogenies(e: &WeierstrassModel) -> Result<Vec<PrimeIsogeny>> {
    ShortCurve::new(e).prime_isogenies(None)
}
