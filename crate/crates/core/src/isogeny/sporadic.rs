//! Isogenies of prime degree ℓ ∈ {11, 17, 19, 37, 43, 67, 163}.
//!
//! Only finitely many j-invariants admit such isogenies, so they come from a
//! bundled table: one short model per j with its kernel polynomial. Every
//! record is certified with Vélu's identity when the table is loaded.

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::velu::velu;
use crate::error::{AtlasError, Result};
use crate::qpoly::{IntegerPolynomial, Rational, RationalPolynomial};
use crate::weier::WeierstrassModel;

/// Environment variable naming an alternative data file.
pub const SPORADIC_DATA_ENV: &str = "ISOGENY_ATLAS_SPORADIC_DATA";

/// Degrees served by the table.
pub const SPORADIC_PRIMES: [u32; 7] = [11, 17, 19, 37, 43, 67, 163];

const BUNDLED: &str = include_str!("../../data/sporadic_isogenies.json");
const BUNDLED_SHA256: &str = "f58e7de3b93d290068ac4eff76da86c0a067f0ddf37ec559eec5ab21530c25af";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicIsogenyRecord {
    pub ell: u32,
    pub j: Rational,
    /// Representative model `y² = x³ + Ax + B`.
    pub a: Rational,
    pub b: Rational,
    /// Kernel polynomial on the representative model, as a primitive
    /// integer polynomial (its monic form may have denominators at ℓ).
    pub kernel: IntegerPolynomial,
    pub partner_j: Rational,
}

impl SporadicIsogenyRecord {
    pub fn monic_kernel(&self) -> RationalPolynomial {
        self.kernel.to_rational().monic()
    }
}

#[derive(Deserialize)]
struct RawRational {
    num: String,
    den: String,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct RawModel {
    A: RawRational,
    B: RawRational,
}

#[derive(Deserialize)]
struct RawRecord {
    ell: u32,
    j: RawRational,
    model: RawModel,
    kernel_coeffs: Vec<String>,
    partner_j: RawRational,
}

fn big(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| AtlasError::SporadicData(format!("bad integer {s:?}")))
}

fn rational(r: &RawRational) -> Result<Rational> {
    let den = big(&r.den)?;
    if den == BigInt::from(0) {
        return Err(AtlasError::SporadicData("zero denominator".into()));
    }
    Ok(Rational::new(big(&r.num)?, den))
}

/// Parse and certify a data file.
pub fn parse_sporadic_records(text: &str) -> Result<Vec<SporadicIsogenyRecord>> {
    let raw: Vec<RawRecord> =
        serde_json::from_str(text).map_err(|e| AtlasError::SporadicData(format!("malformed JSON: {e}")))?;
    raw.iter().map(certify).collect()
}

fn certify(r: &RawRecord) -> Result<SporadicIsogenyRecord> {
    let coeffs = r.kernel_coeffs.iter().map(|c| big(c)).collect::<Result<Vec<_>>>()?;
    let rec = SporadicIsogenyRecord {
        ell: r.ell,
        j: rational(&r.j)?,
        a: rational(&r.model.A)?,
        b: rational(&r.model.B)?,
        kernel: IntegerPolynomial::new(coeffs),
        partner_j: rational(&r.partner_j)?,
    };
    let fail = |why: &str| AtlasError::SporadicData(format!("record ell={} j={}: {why}", rec.ell, rec.j));
    if !SPORADIC_PRIMES.contains(&rec.ell) {
        return Err(fail("degree is not a sporadic prime"));
    }
    let model = WeierstrassModel::short(rec.a.clone(), rec.b.clone()).map_err(|_| fail("singular model"))?;
    if model.j_invariant() != &rec.j {
        return Err(fail("model does not have the stated j-invariant"));
    }
    let (a2, b2) = velu(&rec.a, &rec.b, &rec.monic_kernel(), rec.ell)
        .ok_or_else(|| fail("kernel polynomial fails the Vélu identity"))?;
    let codomain = WeierstrassModel::short(a2, b2).map_err(|_| fail("singular codomain"))?;
    if codomain.j_invariant() != &rec.partner_j {
        return Err(fail("codomain j-invariant differs from partner_j"));
    }
    Ok(rec)
}

/// SHA-256 of the bundled file, as lowercase hex.
pub fn bundled_sha256() -> String {
    hex::encode(Sha256::digest(BUNDLED.as_bytes()))
}

fn load() -> Result<Vec<SporadicIsogenyRecord>> {
    match std::env::var_os(SPORADIC_DATA_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)?;
            parse_sporadic_records(&text)
        }
        None => {
            if bundled_sha256() != BUNDLED_SHA256 {
                return Err(AtlasError::SporadicData(
                    "bundled data does not match its pinned hash".into(),
                ));
            }
            parse_sporadic_records(BUNDLED)
        }
    }
}

/// The certified table, loaded once per process.
pub fn sporadic_table() -> Result<&'static [SporadicIsogenyRecord]> {
    // Errors are kept as text; I/O failures stay I/O failures for exit codes.
    static TABLE: OnceLock<std::result::Result<Vec<SporadicIsogenyRecord>, (bool, String)>> = OnceLock::new();
    TABLE
        .get_or_init(|| load().map_err(|e| (matches!(e, AtlasError::Io(_)), e.to_string())))
        .as_deref()
        .map_err(|(io, msg)| {
            if *io {
                AtlasError::Io(std::io::Error::other(msg.clone()))
            } else {
                AtlasError::SporadicData(msg.clone())
            }
        })
}
