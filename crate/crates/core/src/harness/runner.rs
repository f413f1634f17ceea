//! Claim dispatch and the pinned small parameter set.

use super::claims::{claim, CLAIMS};
use super::report::VerificationReport;
use super::search::conjecture_search;
use super::suites::*;
use crate::error::{Error, Result};
use crate::links::extension_lemma_census;

/// Parameters for one claim run. Unset fields fall back to the claim's
/// small-suite defaults; with no `n` (or `sizes`) at all the whole small set
/// for that claim runs.
#[derive(Clone, Debug, Default)]
pub struct RunParams {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub sizes: Option<Vec<usize>>,
    pub e: Option<usize>,
    pub trials: Option<u64>,
    pub exhaustive: bool,
}

impl RunParams {
    fn sampling(&self, default: u64) -> Sampling {
        if self.exhaustive {
            Sampling::Exhaustive
        } else {
            Sampling::Trials(self.trials.unwrap_or(default))
        }
    }

    fn trials(&self, default: u64) -> u64 {
        self.trials.unwrap_or(default)
    }
}

fn need<T: Copy>(v: Option<T>, name: &str, id: &str) -> Result<T> {
    v.ok_or_else(|| Error::BadParams(format!("{id} needs --{name}")))
}

/// Runs claim `id`. Returns one report per parameter set, in a fixed order.
pub fn run_claim(id: &str, p: &RunParams, seed: u64, opts: Options) -> Result<Vec<VerificationReport>> {
    if claim(id).is_none() {
        return Err(Error::BadParams(format!("unknown claim `{id}`")));
    }
    let single = p.n.is_some() || p.sizes.is_some();
    let reports = match id {
        "thm-1.1" => {
            if let Some(n) = p.n {
                vec![verify_berge(p.k.unwrap_or(3), n)?]
            } else {
                let mut v = Vec::new();
                for n in 1..=5 {
                    v.push(verify_berge(3, n)?);
                }
                for n in 1..=3 {
                    v.push(verify_berge(4, n)?);
                }
                v
            }
        }
        "hknm-tight" => vec![verify_construction_tightness(p.n.unwrap_or(6))?],
        "thm-1.2" => {
            if single {
                let n = need(p.n, "n", id)?;
                vec![verify_aharoni_howard(
                    n,
                    need(p.m, "m", id)?,
                    p.sampling(1000),
                    seed,
                    opts,
                )?]
            } else {
                vec![
                    verify_aharoni_howard(2, 2, Sampling::Exhaustive, seed, opts)?,
                    verify_aharoni_howard(3, 2, p.sampling(1000), seed, opts)?,
                    verify_aharoni_howard(3, 3, p.sampling(500), seed, opts)?,
                    verify_aharoni_howard(4, 2, p.sampling(500), seed, opts)?,
                ]
            }
        }
        "lem-2.1" => vec![extension_lemma_census()],
        "thm-2.2" => {
            if single {
                let n = need(p.n, "n", id)?;
                vec![verify_rainbow_theorem(n, need(p.m, "m", id)?, p.trials(1000), seed)?]
            } else {
                vec![
                    verify_rainbow_theorem(3, 2, p.trials(1000), seed)?,
                    verify_rainbow_theorem(4, 3, p.trials(1000), seed)?,
                ]
            }
        }
        "lem-2.5" => {
            if single {
                vec![verify_lemma25(need(p.n, "n", id)?, p.sampling(1000), seed)?]
            } else {
                vec![
                    verify_lemma25(2, Sampling::Exhaustive, seed)?,
                    verify_lemma25(3, Sampling::Exhaustive, seed)?,
                    verify_lemma25(4, p.sampling(1000), seed)?,
                ]
            }
        }
        "lem-2.3" => {
            if single {
                let n = need(p.n, "n", id)?;
                vec![verify_shift_monotone(
                    n,
                    need(p.e, "e", id)?,
                    p.trials(1000),
                    seed,
                    opts,
                )?]
            } else {
                vec![
                    verify_shift_monotone(3, 12, p.trials(1000), seed, opts)?,
                    verify_shift_monotone(4, 20, p.trials(500), seed, opts)?,
                ]
            }
        }
        "lem-2.4" => {
            let run = |s: &[usize]| -> Result<VerificationReport> {
                match s {
                    [a, b, c] => verify_intersecting_stability(*a, *b, *c, p.trials(2000), seed, opts),
                    _ => Err(Error::BadParams("lem-2.4 needs three class sizes".into())),
                }
            };
            if let Some(s) = &p.sizes {
                vec![run(s)?]
            } else if let Some(n) = p.n {
                vec![run(&[n, n, n])?]
            } else {
                vec![run(&[5, 5, 5])?, run(&[6, 5, 5])?, run(&[3, 3, 3])?]
            }
        }
        "lem-3.1" => {
            if single {
                let n = need(p.n, "n", id)?;
                vec![verify_shifted_stability(
                    n,
                    need(p.m, "m", id)?,
                    p.trials(4000),
                    seed,
                    opts,
                )?]
            } else {
                vec![
                    verify_shifted_stability(4, 2, p.trials(5000), seed, opts)?,
                    verify_shifted_stability(5, 2, p.trials(4000), seed, opts)?,
                    verify_shifted_stability(5, 3, p.trials(8000), seed, opts)?,
                ]
            }
        }
        "thm-3.2" => {
            if single {
                vec![verify_daykin_haggkvist(need(p.n, "n", id)?, p.trials(1000), seed)?]
            } else {
                vec![
                    verify_daykin_haggkvist(3, p.trials(1000), seed)?,
                    verify_daykin_haggkvist(4, p.trials(500), seed)?,
                ]
            }
        }
        "thm-1.3" | "lem-2.6" => {
            let f = if id == "thm-1.3" {
                verify_main_stability
            } else {
                verify_small_matching_stability
            };
            if single {
                let n = need(p.n, "n", id)?;
                vec![f(n, need(p.m, "m", id)?, p.trials(500), seed, opts)?]
            } else {
                let pairs: &[(usize, usize)] = if id == "thm-1.3" {
                    &[(4, 2), (5, 2), (5, 3), (5, 4)]
                } else {
                    &[(4, 2), (5, 2)]
                };
                pairs
                    .iter()
                    .map(|&(n, m)| f(n, m, p.trials(300), seed, opts))
                    .collect::<Result<_>>()?
            }
        }
        "lem-3.3" => {
            if let Some(n) = p.n {
                vec![verify_near_perfect_stability(n, p.trials(500), seed, opts)?]
            } else {
                (3..=5)
                    .map(|n| verify_near_perfect_stability(n, p.trials(300), seed, opts))
                    .collect::<Result<_>>()?
            }
        }
        "conj-1.4" => vec![conjecture_search(
            p.k.unwrap_or(4),
            p.n.unwrap_or(3),
            p.m.unwrap_or(2),
            p.trials.unwrap_or(10_000),
            seed,
            opts,
        )?],
        "solver-xcheck" => {
            if single {
                vec![solver_cross_check(need(p.n, "n", id)?, p.e, p.sampling(500), seed)?]
            } else {
                vec![
                    solver_cross_check(2, None, Sampling::Exhaustive, seed)?,
                    solver_cross_check(3, None, p.sampling(500), seed)?,
                    solver_cross_check(3, Some(12), p.sampling(500), seed)?,
                ]
            }
        }
        other => return Err(Error::BadParams(format!("no suite for claim `{other}`"))),
    };
    Ok(reports)
}

/// Every claim at its pinned small parameters, in claim-table order.
pub fn run_small(seed: u64, opts: Options) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for c in CLAIMS {
        out.extend(run_claim(c.id, &RunParams::default(), seed, opts)?);
    }
    Ok(out)
}
