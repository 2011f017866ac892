//! Comparison rows: constructive palette, exact χ and a greedy baseline.

use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use typegraph_core::colorings::color_typegraph;
use typegraph_core::oracle::greedy_coloring;
use typegraph_core::{Error, OrderType};

use crate::error::Result;
use crate::timed::{self, Limits};

pub const HEADER: [&str; 5] = ["type", "n", "paper_colors", "chi_exact", "greedy"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    #[serde(rename = "type")]
    pub tau: String,
    pub n: u64,
    pub paper_colors: usize,
    /// Empty when the oracle ran out of budget.
    pub chi_exact: Option<usize>,
    pub greedy: usize,
}

/// One row for `G(n, τ)`. The greedy baseline runs first-fit in vertex order,
/// or in an order shuffled by `seed`.
pub fn row(tau: &OrderType, n: u64, limits: Limits, seed: Option<u64>) -> Result<Row> {
    let constructive = color_typegraph(n, tau)?;
    let (g, chi_exact) = match timed::typegraph(n, tau, limits) {
        Ok((g, t)) => (g, Some(t.result.chi)),
        Err(crate::CliError::Core(Error::BudgetExceeded { .. })) => {
            (typegraph_core::graphs::build_typegraph(n, tau)?, None)
        }
        Err(e) => return Err(e),
    };
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let greedy = greedy_coloring(&g, &order)?;
    Ok(Row { tau: tau.to_string(), n, paper_colors: constructive.palette_size(), chi_exact, greedy: greedy.palette_size() })
}

pub fn write_csv<W: Write>(rows: &[Row], w: W) -> Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    out.write_record(HEADER)?;
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}
