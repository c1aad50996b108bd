//! Instantaneous secrecy rates from SINR pairs.
//!
//! Each source's rate is the clipped difference between its legitimate-link
//! rate and the eavesdropper's rate on the same data, with the half factor
//! accounting for the two-phase protocol. Rates are in bits per channel use.

use crate::error::{Result, SimError};

/// Per-source and sum instantaneous secrecy rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyRates {
    pub rate_s1: f64,
    pub rate_s2: f64,
    pub sum: f64,
}

/// `[ (1/2)log2(1 + gamma_dest) - (1/2)log2(1 + gamma_eve) ]^+`
pub fn secrecy_rate(gamma_dest: f64, gamma_eve: f64) -> Result<f64> {
    if gamma_dest < 0.0 {
        return Err(SimError::NegativeSinr(gamma_dest));
    }
    if gamma_eve < 0.0 {
        return Err(SimError::NegativeSinr(gamma_eve));
    }
    Ok(rate_unchecked(gamma_dest, gamma_eve))
}

#[inline]
pub(crate) fn rate_unchecked(gamma_dest: f64, gamma_eve: f64) -> f64 {
    (0.5 * ((1.0 + gamma_dest).log2() - (1.0 + gamma_eve).log2())).max(0.0)
}

/// Both sources' secrecy rates and their sum.
///
/// Source 1's data is received at terminal 1's far end with SINR `gamma_1`
/// and overheard with `gamma_e1`; the rate pairing crosses the indices:
/// terminal i's rate pits `gamma_i` against `gamma_e_j`, `i != j`.
pub fn sum_secrecy_rate(
    gamma_1: f64,
    gamma_2: f64,
    gamma_e1: f64,
    gamma_e2: f64,
) -> Result<SecrecyRates> {
    let rate_s1 = secrecy_rate(gamma_1, gamma_e2)?;
    let rate_s2 = secrecy_rate(gamma_2, gamma_e1)?;
    Ok(SecrecyRates {
        rate_s1,
        rate_s2,
        sum: rate_s1 + rate_s2,
    })
}
