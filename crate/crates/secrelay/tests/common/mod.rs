//! Shared test support: an independent transcription of the closed forms and
//! a naive brute-force selection oracle.
//!
//! Everything here is deliberately written as standalone scalar expressions,
//! one per published equation, so it shares no code path with the library's
//! vectorized evaluation. The library must agree with these transcriptions.

#![allow(dead_code)]

use secrelay::channel::{AverageGainView, FadingRealization};
use secrelay::sinr::{CandidateTriple, JammingMode, PowerConfig};
use secrelay::topology::NodeId;

/// Squared channel gains for one `(realization, triple)` evaluation.
/// Jammer entries are zero when the candidate has no jammers.
#[derive(Debug, Clone, Copy)]
pub struct OracleChannels {
    pub h2_s1_r: f64,
    pub h2_s2_r: f64,
    pub h2_j1_r: f64,
    pub h2_r_s1: f64,
    pub h2_r_s2: f64,
    pub h2_j2_s1: f64,
    pub h2_j2_s2: f64,
    pub h2_s1_e: f64,
    pub h2_s2_e: f64,
    pub h2_j1_e: f64,
    pub h2_j2_e: f64,
    pub h2_r_e: f64,
}

pub fn channels_for(realization: &FadingRealization, triple: &CandidateTriple) -> OracleChannels {
    let r = NodeId::Intermediate(triple.relay);
    let g = |a: NodeId, b: NodeId| realization.power_gain(a, b).unwrap();
    let mut ch = OracleChannels {
        h2_s1_r: g(NodeId::Source1, r),
        h2_s2_r: g(NodeId::Source2, r),
        h2_j1_r: 0.0,
        h2_r_s1: g(r, NodeId::Source1),
        h2_r_s2: g(r, NodeId::Source2),
        h2_j2_s1: 0.0,
        h2_j2_s2: 0.0,
        h2_s1_e: g(NodeId::Source1, NodeId::Eve),
        h2_s2_e: g(NodeId::Source2, NodeId::Eve),
        h2_j1_e: 0.0,
        h2_j2_e: 0.0,
        h2_r_e: g(r, NodeId::Eve),
    };
    if let Some((j1, j2)) = triple.jammers {
        let j1 = NodeId::Intermediate(j1);
        let j2 = NodeId::Intermediate(j2);
        ch.h2_j1_r = g(j1, r);
        ch.h2_j2_s1 = g(j2, NodeId::Source1);
        ch.h2_j2_s2 = g(j2, NodeId::Source2);
        ch.h2_j1_e = g(j1, NodeId::Eve);
        ch.h2_j2_e = g(j2, NodeId::Eve);
    }
    ch
}

/// Same channels with the eavesdropper-link gains replaced by their means.
pub fn channels_with_avg_eve(
    realization: &FadingRealization,
    avg: &AverageGainView,
    triple: &CandidateTriple,
) -> OracleChannels {
    let mut ch = channels_for(realization, triple);
    let mean = |n: NodeId| avg.mean_power_gain(n, NodeId::Eve).unwrap();
    ch.h2_s1_e = mean(NodeId::Source1);
    ch.h2_s2_e = mean(NodeId::Source2);
    ch.h2_r_e = mean(NodeId::Intermediate(triple.relay));
    if let Some((j1, j2)) = triple.jammers {
        ch.h2_j1_e = mean(NodeId::Intermediate(j1));
        ch.h2_j2_e = mean(NodeId::Intermediate(j2));
    }
    ch
}

/// alpha = sqrt( 1 / (1 + |h_S1,R|^2 P_S + |h_S2,R|^2 P_S + |h_J1,R|^2 P_J) )
pub fn oracle_alpha(ch: &OracleChannels, jamming: bool, ps: f64, pj: f64) -> f64 {
    if jamming {
        (1.0 / (1.0 + ch.h2_s1_r * ps + ch.h2_s2_r * ps + ch.h2_j1_r * pj)).sqrt()
    } else {
        (1.0 / (1.0 + ch.h2_s1_r * ps + ch.h2_s2_r * ps)).sqrt()
    }
}

fn select_dir(ch: &OracleChannels, dest: usize) -> (f64, f64, f64) {
    // (|h_Si,R|^2 of the transmitting source, |h_R,Sj|^2, |h_J2,Sj|^2)
    if dest == 1 {
        (ch.h2_s2_r, ch.h2_r_s1, ch.h2_j2_s1)
    } else {
        (ch.h2_s1_r, ch.h2_r_s2, ch.h2_j2_s2)
    }
}

/// Gamma_j = gamma_SiSj / (gamma_J1Sj + gamma_J2Sj + gamma_RSj + 1)
pub fn oracle_dest_sinr_jamming(
    ch: &OracleChannels,
    alpha: f64,
    ps: f64,
    pr: f64,
    pj: f64,
    dest: usize,
) -> f64 {
    let (h2_src_r, h2_r_dst, h2_j2_dst) = select_dir(ch, dest);
    let a2 = alpha * alpha;
    let gamma_sisj = a2 * pr * ps * h2_src_r * h2_r_dst;
    let gamma_j1sj = a2 * pr * pj * ch.h2_j1_r * h2_r_dst;
    let gamma_j2sj = pj * h2_j2_dst;
    let gamma_rsj = a2 * pr * h2_r_dst;
    gamma_sisj / (gamma_j1sj + gamma_j2sj + gamma_rsj + 1.0)
}

/// Gamma_j^CS = gamma_SiSj / (gamma_RSj + 1); also the known-jamming form
/// when evaluated with the jamming alpha.
pub fn oracle_dest_sinr_nojam(
    ch: &OracleChannels,
    alpha: f64,
    ps: f64,
    pr: f64,
    dest: usize,
) -> f64 {
    let (h2_src_r, h2_r_dst, _) = select_dir(ch, dest);
    let a2 = alpha * alpha;
    let gamma_sisj = a2 * pr * ps * h2_src_r * h2_r_dst;
    let gamma_rsj = a2 * pr * h2_r_dst;
    gamma_sisj / (gamma_rsj + 1.0)
}

/// Gamma_Ei = gamma_SiE / (gamma_SjE + gamma_J1E + 1)
///          + gamma_SiRE / (gamma_SjRE + gamma_J1RE + gamma_J2E + gamma_RE + 1)
pub fn oracle_eve_sinr_jamming(
    ch: &OracleChannels,
    alpha: f64,
    ps: f64,
    pr: f64,
    pj: f64,
    victim: usize,
) -> f64 {
    let (h2_si_e, h2_sj_e, h2_si_r, h2_sj_r) = if victim == 1 {
        (ch.h2_s1_e, ch.h2_s2_e, ch.h2_s1_r, ch.h2_s2_r)
    } else {
        (ch.h2_s2_e, ch.h2_s1_e, ch.h2_s2_r, ch.h2_s1_r)
    };
    let a2 = alpha * alpha;
    let gamma_si_e = ps * h2_si_e;
    let gamma_sj_e = ps * h2_sj_e;
    let gamma_j1_e = pj * ch.h2_j1_e;
    let gamma_j2_e = pj * ch.h2_j2_e;
    let gamma_si_r_e = a2 * pr * ps * h2_si_r * ch.h2_r_e;
    let gamma_sj_r_e = a2 * pr * ps * h2_sj_r * ch.h2_r_e;
    let gamma_j1_r_e = a2 * pr * pj * ch.h2_j1_r * ch.h2_r_e;
    let gamma_r_e = a2 * pr * ch.h2_r_e;
    gamma_si_e / (gamma_sj_e + gamma_j1_e + 1.0)
        + gamma_si_r_e / (gamma_sj_r_e + gamma_j1_r_e + gamma_j2_e + gamma_r_e + 1.0)
}

/// Gamma_Ei^OS = gamma_SiE / (gamma_SjE + 1)
///             + gamma_SiRE / (gamma_SjRE + gamma_RE + 1)
pub fn oracle_eve_sinr_nojam(
    ch: &OracleChannels,
    alpha: f64,
    ps: f64,
    pr: f64,
    victim: usize,
) -> f64 {
    let (h2_si_e, h2_sj_e, h2_si_r, h2_sj_r) = if victim == 1 {
        (ch.h2_s1_e, ch.h2_s2_e, ch.h2_s1_r, ch.h2_s2_r)
    } else {
        (ch.h2_s2_e, ch.h2_s1_e, ch.h2_s2_r, ch.h2_s1_r)
    };
    let a2 = alpha * alpha;
    let gamma_si_e = ps * h2_si_e;
    let gamma_sj_e = ps * h2_sj_e;
    let gamma_si_r_e = a2 * pr * ps * h2_si_r * ch.h2_r_e;
    let gamma_sj_r_e = a2 * pr * ps * h2_sj_r * ch.h2_r_e;
    let gamma_r_e = a2 * pr * ch.h2_r_e;
    gamma_si_e / (gamma_sj_e + 1.0) + gamma_si_r_e / (gamma_sj_r_e + gamma_r_e + 1.0)
}

/// R_Si = [ (1/2)log2(1 + Gamma_i) - (1/2)log2(1 + Gamma_Ej) ]^+
pub fn oracle_secrecy_rate(gamma_dest: f64, gamma_eve: f64) -> f64 {
    let r = 0.5 * (1.0 + gamma_dest).log2() - 0.5 * (1.0 + gamma_eve).log2();
    r.max(0.0)
}

/// The four SINRs of one scheme evaluation: destination SINRs by terminal,
/// eavesdropper SINRs by victim source.
#[derive(Debug, Clone, Copy)]
pub struct OracleSinrs {
    pub dest1: f64,
    pub dest2: f64,
    pub eve1: f64,
    pub eve2: f64,
}

/// SINRs that drive a scheme's metric (per its knowledge set and mode).
pub fn oracle_metric_sinrs(
    scheme: &str,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    triple: &CandidateTriple,
) -> OracleSinrs {
    let ps = power.source();
    let pr = power.relay();
    let pj = power.jammer();
    let inst = channels_for(realization, triple);
    match scheme {
        "CS" | "OS" | "SS" => {
            let alpha = oracle_alpha(&inst, false, ps, pj);
            let dest1 = oracle_dest_sinr_nojam(&inst, alpha, ps, pr, 1);
            let dest2 = oracle_dest_sinr_nojam(&inst, alpha, ps, pr, 2);
            let (eve1, eve2) = if scheme == "SS" {
                let avg_ch = channels_with_avg_eve(realization, avg, triple);
                (
                    oracle_eve_sinr_nojam(&avg_ch, alpha, ps, pr, 1),
                    oracle_eve_sinr_nojam(&avg_ch, alpha, ps, pr, 2),
                )
            } else {
                (
                    oracle_eve_sinr_nojam(&inst, alpha, ps, pr, 1),
                    oracle_eve_sinr_nojam(&inst, alpha, ps, pr, 2),
                )
            };
            OracleSinrs {
                dest1,
                dest2,
                eve1,
                eve2,
            }
        }
        "OS-MSISR" | "OS-MMISR" | "SS-MSISR" | "SS-MMISR" => {
            let alpha = oracle_alpha(&inst, true, ps, pj);
            let dest1 = oracle_dest_sinr_jamming(&inst, alpha, ps, pr, pj, 1);
            let dest2 = oracle_dest_sinr_jamming(&inst, alpha, ps, pr, pj, 2);
            let (eve1, eve2) = if scheme.starts_with("SS") {
                let avg_ch = channels_with_avg_eve(realization, avg, triple);
                (
                    oracle_eve_sinr_jamming(&avg_ch, alpha, ps, pr, pj, 1),
                    oracle_eve_sinr_jamming(&avg_ch, alpha, ps, pr, pj, 2),
                )
            } else {
                (
                    oracle_eve_sinr_jamming(&inst, alpha, ps, pr, pj, 1),
                    oracle_eve_sinr_jamming(&inst, alpha, ps, pr, pj, 2),
                )
            };
            OracleSinrs {
                dest1,
                dest2,
                eve1,
                eve2,
            }
        }
        "OSKJ" => {
            let alpha = oracle_alpha(&inst, true, ps, pj);
            OracleSinrs {
                dest1: oracle_dest_sinr_nojam(&inst, alpha, ps, pr, 1),
                dest2: oracle_dest_sinr_nojam(&inst, alpha, ps, pr, 2),
                eve1: oracle_eve_sinr_jamming(&inst, alpha, ps, pr, pj, 1),
                eve2: oracle_eve_sinr_jamming(&inst, alpha, ps, pr, pj, 2),
            }
        }
        other => panic!("not a direct scheme: {other}"),
    }
}

/// True (full-knowledge) SINRs under the scheme's physical jamming mode.
pub fn oracle_true_sinrs(
    mode: JammingMode,
    realization: &FadingRealization,
    power: &PowerConfig,
    triple: &CandidateTriple,
) -> OracleSinrs {
    let ps = power.source();
    let pr = power.relay();
    let pj = power.jammer();
    let ch = channels_for(realization, triple);
    match mode {
        JammingMode::Off => {
            let alpha = oracle_alpha(&ch, false, ps, pj);
            OracleSinrs {
                dest1: oracle_dest_sinr_nojam(&ch, alpha, ps, pr, 1),
                dest2: oracle_dest_sinr_nojam(&ch, alpha, ps, pr, 2),
                eve1: oracle_eve_sinr_nojam(&ch, alpha, ps, pr, 1),
                eve2: oracle_eve_sinr_nojam(&ch, alpha, ps, pr, 2),
            }
        }
        JammingMode::Continuous => {
            let alpha = oracle_alpha(&ch, true, ps, pj);
            OracleSinrs {
                dest1: oracle_dest_sinr_jamming(&ch, alpha, ps, pr, pj, 1),
                dest2: oracle_dest_sinr_jamming(&ch, alpha, ps, pr, pj, 2),
                eve1: oracle_eve_sinr_jamming(&ch, alpha, ps, pr, pj, 1),
                eve2: oracle_eve_sinr_jamming(&ch, alpha, ps, pr, pj, 2),
            }
        }
        JammingMode::Known => {
            let alpha = oracle_alpha(&ch, true, ps, pj);
            OracleSinrs {
                dest1: oracle_dest_sinr_nojam(&ch, alpha, ps, pr, 1),
                dest2: oracle_dest_sinr_nojam(&ch, alpha, ps, pr, 2),
                eve1: oracle_eve_sinr_jamming(&ch, alpha, ps, pr, pj, 1),
                eve2: oracle_eve_sinr_jamming(&ch, alpha, ps, pr, pj, 2),
            }
        }
    }
}

/// True clipped sum secrecy rate under `mode`.
pub fn oracle_true_sum_rate(
    mode: JammingMode,
    realization: &FadingRealization,
    power: &PowerConfig,
    triple: &CandidateTriple,
) -> f64 {
    let s = oracle_true_sinrs(mode, realization, power, triple);
    oracle_secrecy_rate(s.dest1, s.eve2) + oracle_secrecy_rate(s.dest2, s.eve1)
}

/// The scheme's scalar score from its SINRs.
pub fn oracle_metric(scheme: &str, s: &OracleSinrs) -> f64 {
    let f1 = (1.0 + s.dest1) / (1.0 + s.eve2);
    let f2 = (1.0 + s.dest2) / (1.0 + s.eve1);
    match scheme {
        "CS" => (1.0 + s.dest1) * (1.0 + s.dest2),
        "OS-MMISR" | "SS-MMISR" => f1.min(f2),
        _ => f1 * f2,
    }
}

/// Naive exhaustive argmax with explicit loops; first maximum encountered in
/// lexicographic order wins, matching the library's tie-break.
pub fn brute_force_select(
    scheme: &str,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    allow_equal_jammers: bool,
) -> CandidateTriple {
    let k = realization.intermediate_count();
    let jamming = matches!(
        scheme,
        "OS-MSISR" | "OS-MMISR" | "SS-MSISR" | "SS-MMISR" | "OSKJ"
    );
    let mut best: Option<(f64, CandidateTriple)> = None;
    let mut consider = |triple: CandidateTriple| {
        let sinrs = oracle_metric_sinrs(scheme, realization, avg, power, &triple);
        let score = oracle_metric(scheme, &sinrs);
        match &best {
            Some((best_score, _)) if score <= *best_score => {}
            _ => best = Some((score, triple)),
        }
    };
    if jamming {
        for r in 0..k {
            for j1 in 0..k {
                if j1 == r {
                    continue;
                }
                for j2 in 0..k {
                    if j2 == r || (!allow_equal_jammers && j2 == j1) {
                        continue;
                    }
                    consider(CandidateTriple::with_jammers(r, j1, j2).unwrap());
                }
            }
        }
    } else {
        for r in 0..k {
            consider(CandidateTriple::relay_only(r));
        }
    }
    best.expect("at least one candidate").1
}

/// Brute-force switching oracle; returns the chosen triple and whether the
/// jamming branch won.
pub fn brute_force_switching(
    variant: &str,
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
) -> (CandidateTriple, bool) {
    match variant {
        "OSW" => {
            let jam = brute_force_select("OS-MSISR", realization, avg, power, true);
            let plain = brute_force_select("OS", realization, avg, power, true);
            let jam_rate = oracle_true_sum_rate(JammingMode::Continuous, realization, power, &jam);
            let plain_rate = oracle_true_sum_rate(JammingMode::Off, realization, power, &plain);
            if jam_rate > plain_rate {
                (jam, true)
            } else {
                (plain, false)
            }
        }
        "SSW" => {
            let jam = brute_force_select("SS-MSISR", realization, avg, power, true);
            let plain = brute_force_select("SS", realization, avg, power, true);
            let jam_score = oracle_metric(
                "SS-MSISR",
                &oracle_metric_sinrs("SS-MSISR", realization, avg, power, &jam),
            );
            let plain_score =
                oracle_metric("SS", &oracle_metric_sinrs("SS", realization, avg, power, &plain));
            if jam_score > plain_score {
                (jam, true)
            } else {
                (plain, false)
            }
        }
        other => panic!("not a switching scheme: {other}"),
    }
}

/// Relative comparison with an absolute floor at 1, so values that are
/// legitimately zero (clipped rates) compare in absolute terms.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Prints the per-criterion verdict line and fails the test on FAIL.
pub fn criterion(number: usize, name: &str, pass: bool, details: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {number:>2} {status}: {name} ({details})");
    assert!(pass, "criterion {number} FAILED: {name} ({details})");
}
