//! The nine relay/jammer selection schemes plus the known-jamming control.
//!
//! Every scheme scores each feasible candidate with its own metric —
//! a product of per-source secrecy factors, the worse of the two factors, or
//! a destination-only product — and returns the argmax by exhaustive search.
//! The reported rates are always the true instantaneous secrecy rates under
//! full channel knowledge, whatever knowledge set drove the selection, so
//! curves of different schemes stay comparable.
//!
//! Metrics use the product forms directly: maximizing the product of
//! `(1 + SINR)` ratios is equivalent to maximizing the unclipped sum of
//! secrecy rates, and avoids logarithms in the hot loop.

use std::fmt;
use std::str::FromStr;

use crate::channel::{AverageGainView, FadingRealization};
use crate::error::{Result, SimError};
use crate::secrecy::{self, SecrecyRates};
use crate::sinr::{sinr_bundle, CandidateTriple, JammingMode, PowerConfig, SinrBundle};

/// The selection schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeId {
    /// Conventional selection: strongest two-hop link, eavesdropper ignored.
    Cs,
    /// Optimal non-jamming selection with full channel knowledge.
    Os,
    /// Suboptimal non-jamming selection: averaged eavesdropper knowledge.
    Ss,
    /// Jamming selection maximizing the sum secrecy rate, full knowledge.
    OsMsisr,
    /// Jamming selection maximizing the worse secrecy rate, full knowledge.
    OsMmisr,
    /// Per-realization switch between OS-MSISR and OS.
    Osw,
    /// OS-MSISR with averaged eavesdropper knowledge.
    SsMsisr,
    /// OS-MMISR with averaged eavesdropper knowledge.
    SsMmisr,
    /// Per-realization switch between SS-MSISR and SS.
    Ssw,
    /// Control scheme: destinations decode and cancel the jamming.
    Oskj,
}

/// How a scheme turns the per-source factors into a scalar score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Objective {
    SumProduct,
    MaxMin,
    DestinationOnly,
}

impl SchemeId {
    pub const ALL: [SchemeId; 10] = [
        SchemeId::Cs,
        SchemeId::Os,
        SchemeId::Ss,
        SchemeId::OsMsisr,
        SchemeId::OsMmisr,
        SchemeId::Osw,
        SchemeId::SsMsisr,
        SchemeId::SsMmisr,
        SchemeId::Ssw,
        SchemeId::Oskj,
    ];

    /// Canonical name as used in configuration files and CSV output.
    pub fn name(self) -> &'static str {
        match self {
            SchemeId::Cs => "CS",
            SchemeId::Os => "OS",
            SchemeId::Ss => "SS",
            SchemeId::OsMsisr => "OS-MSISR",
            SchemeId::OsMmisr => "OS-MMISR",
            SchemeId::Osw => "OSW",
            SchemeId::SsMsisr => "SS-MSISR",
            SchemeId::SsMmisr => "SS-MMISR",
            SchemeId::Ssw => "SSW",
            SchemeId::Oskj => "OSKJ",
        }
    }

    /// True for the hybrid schemes that pick between two branch selections.
    pub fn is_switching(self) -> bool {
        matches!(self, SchemeId::Osw | SchemeId::Ssw)
    }

    /// True when the scheme's metric uses averaged eavesdropper knowledge.
    pub fn uses_average_knowledge(self) -> bool {
        matches!(
            self,
            SchemeId::Ss | SchemeId::SsMsisr | SchemeId::SsMmisr | SchemeId::Ssw
        )
    }

    /// Physical jamming mode of a non-switching scheme.
    fn direct_mode(self) -> Option<JammingMode> {
        match self {
            SchemeId::Cs | SchemeId::Os | SchemeId::Ss => Some(JammingMode::Off),
            SchemeId::OsMsisr | SchemeId::OsMmisr | SchemeId::SsMsisr | SchemeId::SsMmisr => {
                Some(JammingMode::Continuous)
            }
            SchemeId::Oskj => Some(JammingMode::Known),
            SchemeId::Osw | SchemeId::Ssw => None,
        }
    }

    fn objective(self) -> Objective {
        match self {
            SchemeId::Cs => Objective::DestinationOnly,
            SchemeId::OsMmisr | SchemeId::SsMmisr => Objective::MaxMin,
            _ => Objective::SumProduct,
        }
    }

    /// Smallest intermediate-node count the scheme can run on.
    pub fn min_intermediates(self) -> usize {
        match self.direct_mode() {
            Some(JammingMode::Off) => 1,
            // switching schemes contain a jamming branch
            _ => 2,
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let canon = s.trim().to_ascii_uppercase();
        SchemeId::ALL
            .into_iter()
            .find(|scheme| scheme.name() == canon)
            .ok_or_else(|| format!("unknown scheme `{}`", s.trim()))
    }
}

/// Result of running one scheme on one realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionOutcome {
    pub triple: CandidateTriple,
    /// True secrecy rates under full channel knowledge and the physical
    /// jamming mode of the winning selection.
    pub rates: SecrecyRates,
    /// The scheme's own metric value at the chosen candidate.
    pub objective_value: f64,
    /// Whether the chosen selection actually employs jammers. For the
    /// switching schemes this records which branch won.
    pub jamming_active: bool,
}

/// Iterates over the feasible candidates in lexicographic index order.
fn candidate_iter(
    k: usize,
    jamming: bool,
    allow_equal_jammers: bool,
) -> impl Iterator<Item = CandidateTriple> {
    let relays = 0..k;
    relays.flat_map(move |r| {
        let jammer_pairs: Box<dyn Iterator<Item = Option<(usize, usize)>>> = if jamming {
            Box::new((0..k).filter(move |&j1| j1 != r).flat_map(move |j1| {
                (0..k)
                    .filter(move |&j2| j2 != r && (allow_equal_jammers || j2 != j1))
                    .map(move |j2| Some((j1, j2)))
            }))
        } else {
            Box::new(std::iter::once(None))
        };
        jammer_pairs.map(move |jammers| CandidateTriple { relay: r, jammers })
    })
}

/// Enumerates the feasible candidate triples.
///
/// Non-jamming: the `k` single relays. Jamming: all `(R, J1, J2)` with both
/// jammers different from the relay; the two jammers may coincide, giving
/// `k * (k-1)^2` candidates.
pub fn candidate_triples(k: usize, jamming: bool) -> Result<Vec<CandidateTriple>> {
    candidate_triples_opts(k, jamming, true)
}

/// [`candidate_triples`] with the equal-jammer rule configurable.
pub fn candidate_triples_opts(
    k: usize,
    jamming: bool,
    allow_equal_jammers: bool,
) -> Result<Vec<CandidateTriple>> {
    let required = if !jamming {
        1
    } else if allow_equal_jammers {
        2
    } else {
        3
    };
    if k < required {
        return Err(SimError::InsufficientIntermediates {
            required,
            available: k,
        });
    }
    Ok(candidate_iter(k, jamming, allow_equal_jammers).collect())
}

fn factors(bundle: &SinrBundle) -> (f64, f64) {
    (
        (1.0 + bundle.dest[0]) / (1.0 + bundle.eve[1]),
        (1.0 + bundle.dest[1]) / (1.0 + bundle.eve[0]),
    )
}

fn metric_from_bundle(objective: Objective, bundle: &SinrBundle) -> f64 {
    match objective {
        Objective::DestinationOnly => (1.0 + bundle.dest[0]) * (1.0 + bundle.dest[1]),
        Objective::SumProduct => {
            let (f1, f2) = factors(bundle);
            f1 * f2
        }
        Objective::MaxMin => {
            let (f1, f2) = factors(bundle);
            f1.min(f2)
        }
    }
}

fn bundle_for(
    scheme: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    candidate: &CandidateTriple,
    mode: JammingMode,
) -> Result<SinrBundle> {
    let avg_view = scheme.uses_average_knowledge().then_some(avg);
    sinr_bundle(realization, avg_view, power, candidate, mode)
}

/// The scheme's scalar score for one candidate. Higher is better.
pub fn scheme_metric(
    scheme: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    candidate: &CandidateTriple,
) -> Result<f64> {
    let mode = scheme
        .direct_mode()
        .ok_or(SimError::SwitchingScheme(scheme))?;
    let bundle = bundle_for(scheme, realization, avg, power, candidate, mode)?;
    Ok(metric_from_bundle(scheme.objective(), &bundle))
}

/// True secrecy rates of a candidate under full knowledge and `mode`.
fn true_rates(
    realization: &FadingRealization,
    power: &PowerConfig,
    candidate: &CandidateTriple,
    mode: JammingMode,
) -> Result<SecrecyRates> {
    let bundle = sinr_bundle(realization, None, power, candidate, mode)?;
    Ok(SecrecyRates {
        rate_s1: secrecy::rate_unchecked(bundle.dest[0], bundle.eve[1]),
        rate_s2: secrecy::rate_unchecked(bundle.dest[1], bundle.eve[0]),
        sum: secrecy::rate_unchecked(bundle.dest[0], bundle.eve[1])
            + secrecy::rate_unchecked(bundle.dest[1], bundle.eve[0]),
    })
}

/// Runs one non-switching scheme: exhaustive argmax of the scheme metric.
///
/// Ties break deterministically towards the lowest `(R, J1, J2)` index
/// tuple, independent of evaluation order.
pub fn select(
    scheme: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
) -> Result<SelectionOutcome> {
    select_opts(scheme, realization, avg, power, true)
}

/// [`select`] with the equal-jammer rule configurable.
pub fn select_opts(
    scheme: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    allow_equal_jammers: bool,
) -> Result<SelectionOutcome> {
    let mode = scheme
        .direct_mode()
        .ok_or(SimError::SwitchingScheme(scheme))?;
    let k = realization.intermediate_count();
    // reuse the candidate-count validation
    let required = if !mode.uses_jammers() {
        1
    } else if allow_equal_jammers {
        2
    } else {
        3
    };
    if k < required {
        return Err(SimError::InsufficientIntermediates {
            required,
            available: k,
        });
    }
    let objective = scheme.objective();
    let mut best: Option<(f64, CandidateTriple)> = None;
    for candidate in candidate_iter(k, mode.uses_jammers(), allow_equal_jammers) {
        let bundle = bundle_for(scheme, realization, avg, power, &candidate, mode)?;
        let score = metric_from_bundle(objective, &bundle);
        let better = match &best {
            None => true,
            Some((best_score, best_triple)) => {
                score > *best_score
                    || (score == *best_score && candidate.index_key() < best_triple.index_key())
            }
        };
        if better {
            best = Some((score, candidate));
        }
    }
    let (objective_value, triple) = best.expect("candidate set is nonempty");
    Ok(SelectionOutcome {
        triple,
        rates: true_rates(realization, power, &triple, mode)?,
        objective_value,
        jamming_active: mode.uses_jammers(),
    })
}

/// Runs one of the hybrid switching schemes.
///
/// OSW selects with OS-MSISR and OS, then keeps whichever branch has the
/// higher true sum secrecy rate; the jamming branch must be strictly better
/// to engage the jammers. SSW compares its SS-MSISR and SS branches with the
/// averaged-knowledge products that drove them — the knowledge set it
/// actually has — and still reports true rates.
pub fn select_switching(
    variant: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
) -> Result<SelectionOutcome> {
    select_switching_opts(variant, realization, avg, power, true)
}

/// [`select_switching`] with the equal-jammer rule configurable.
pub fn select_switching_opts(
    variant: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    allow_equal_jammers: bool,
) -> Result<SelectionOutcome> {
    let (jamming_scheme, plain_scheme) = match variant {
        SchemeId::Osw => (SchemeId::OsMsisr, SchemeId::Os),
        SchemeId::Ssw => (SchemeId::SsMsisr, SchemeId::Ss),
        other => return Err(SimError::NotASwitchingScheme(other)),
    };
    let jam = select_opts(jamming_scheme, realization, avg, power, allow_equal_jammers)?;
    let plain = select_opts(plain_scheme, realization, avg, power, allow_equal_jammers)?;
    let engage_jamming = match variant {
        // the involvement threshold compares true clipped sum rates
        SchemeId::Osw => jam.rates.sum > plain.rates.sum,
        // SSW only has averaged knowledge; compare the branch metrics
        _ => jam.objective_value > plain.objective_value,
    };
    let mut outcome = if engage_jamming { jam } else { plain };
    outcome.jamming_active = engage_jamming;
    Ok(outcome)
}

/// Dispatches to [`select`] or [`select_switching`] as appropriate.
pub fn run_scheme(
    scheme: SchemeId,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    allow_equal_jammers: bool,
) -> Result<SelectionOutcome> {
    if scheme.is_switching() {
        select_switching_opts(scheme, realization, avg, power, allow_equal_jammers)
    } else {
        select_opts(scheme, realization, avg, power, allow_equal_jammers)
    }
}
