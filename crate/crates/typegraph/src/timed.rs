//! Oracle runs under a node and wall-clock budget.

use std::time::{Duration, Instant};

use typegraph_core::graphs::Subset;
use typegraph_core::oracle::{exact_chromatic_with, typegraph_chromatic};
use typegraph_core::{Budget, ChromaticResult, Graph, OrderType};

use crate::error::Result;
use crate::formats::ChiDump;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.nodes }
    }

    fn deadline(&self, start: Instant) -> impl FnMut(u64) -> bool {
        let time = self.time;
        move |_| time.is_some_and(|t| start.elapsed() >= t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Timed {
    pub result: ChromaticResult,
    pub elapsed: Duration,
}

impl Timed {
    pub fn to_dump(&self) -> ChiDump {
        ChiDump {
            chi: self.result.chi,
            colors: self.result.witness.colors().to_vec(),
            nodes_explored: self.result.nodes_explored,
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }
}

pub fn chromatic<V>(g: &Graph<V>, limits: Limits) -> Result<Timed> {
    let start = Instant::now();
    let result = exact_chromatic_with(g, limits.budget(), &mut limits.deadline(start))?;
    Ok(Timed { result, elapsed: start.elapsed() })
}

pub fn typegraph(n: u64, tau: &OrderType, limits: Limits) -> Result<(Graph<Subset>, Timed)> {
    let start = Instant::now();
    let (g, result) = typegraph_chromatic(n, tau, limits.budget(), &mut limits.deadline(start))?;
    Ok((g, Timed { result, elapsed: start.elapsed() }))
}
