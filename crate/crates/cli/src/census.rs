//! Exhaustive census over all tuples `(e, g_2, ..., g_n)` in a finite group.

use std::io::Write;

use gradex_core::coeff::RingSpec;
use gradex_core::decide::{epsilon_crossed_verdict, is_strong, rank_invariants, Answer};
use gradex_core::grading::VeryGoodGrading;
use gradex_core::groups::{GroupElement, GroupSpec};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};

pub const DEFAULT_MAX_N: usize = 6;

/// Every `SAMPLE_STRIDE`-th positive verdict has its certificate re-checked.
pub const SAMPLE_STRIDE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub tuple: String,
    pub strong: bool,
    pub epsilon_crossed: bool,
    #[serde(rename = "rank_Se")]
    pub rank_se: usize,
    pub supp_size: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: usize,
    pub strong: usize,
    pub crossed: usize,
    pub neither: usize,
    pub resampled: usize,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub summary: CensusSummary,
}

/// Tuples with `g_1 = e`, in lexicographic order of `(g_2, ..., g_n)`.
pub fn tuples(group: &GroupSpec, n: usize) -> Result<Vec<Vec<GroupElement>>> {
    let elements = group.enumerate()?;
    let mut out = vec![vec![group.identity()]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                elements.iter().map(move |g| {
                    let mut t = prefix.clone();
                    t.push(g.clone());
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

fn classify(
    group: &GroupSpec,
    ring: &RingSpec,
    tuple: Vec<GroupElement>,
    resample: bool,
) -> Result<CensusRow> {
    let label = format!(
        "({})",
        tuple
            .iter()
            .map(|g| group.format_element(g))
            .collect::<Vec<_>>()
            .join(",")
    );
    let vg = VeryGoodGrading::from_tuple(group.clone(), tuple)?;
    let strong = is_strong(&vg)?;
    let crossed = epsilon_crossed_verdict(&vg, ring)?;
    if resample {
        let descriptor = gradex_core::grading::GradingDescriptor::VeryGood(vg.clone());
        for v in [&strong, &crossed] {
            if v.answer == Answer::Yes && !v.verify(&descriptor, ring)? {
                return Err(CliError::Algebra(gradex_core::Error::CertificateFailed(
                    format!("re-check failed for {label}"),
                )));
            }
        }
    }
    let rank = rank_invariants(&vg);
    Ok(CensusRow {
        tuple: label,
        strong: strong.answer == Answer::Yes,
        epsilon_crossed: crossed.answer == Answer::Yes,
        rank_se: rank.rank_se,
        supp_size: rank.supp_size,
    })
}

/// Classifies every very good grading of `M_n(ring)` by `group`.
/// `jobs = 0` lets rayon choose the thread count.
pub fn run(
    group: &GroupSpec,
    n: usize,
    ring: &RingSpec,
    jobs: usize,
    max_n: usize,
) -> Result<Census> {
    if !group.is_finite() {
        return Err(CliError::Usage(format!(
            "{group} is infinite; the census needs a finite group"
        )));
    }
    if n == 0 || n > max_n {
        return Err(CliError::Usage(format!(
            "n must lie in 1..={max_n} (raise with --max-n)"
        )));
    }
    let all = tuples(group, n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<CensusRow> = pool.install(|| {
        all.into_par_iter()
            .enumerate()
            .map(|(k, t)| classify(group, ring, t, k % SAMPLE_STRIDE == 0))
            .collect::<Result<_>>()
    })?;

    let mut summary = CensusSummary {
        total: rows.len(),
        ..Default::default()
    };
    for r in &rows {
        summary.strong += r.strong as usize;
        summary.crossed += r.epsilon_crossed as usize;
        summary.neither += (!r.strong && !r.epsilon_crossed) as usize;
    }
    summary.resampled = rows.len().div_ceil(SAMPLE_STRIDE);
    Ok(Census { rows, summary })
}

impl Census {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

impl std::fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total {}, strong {}, epsilon-crossed {}, neither {} ({} certificates re-checked)",
            self.total, self.strong, self.crossed, self.neither, self.resampled
        )
    }
}
