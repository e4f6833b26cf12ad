//! Solver outcomes and resource budgets.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::tangle::Tangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Simple,
    General,
    Baseline,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Simple => "simple",
            Algo::General => "general",
            Algo::Baseline => "baseline",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Feasible,
    Infeasible,
    /// Wall-clock budget ran out before a decision.
    Timeout,
    /// Memory budget ran out before a decision.
    Memout,
}

impl Verdict {
    pub fn is_decided(self) -> bool {
        matches!(self, Verdict::Feasible | Verdict::Infeasible)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Feasible => "feasible",
            Verdict::Infeasible => "infeasible",
            Verdict::Timeout => "timeout",
            Verdict::Memout => "memout",
        })
    }
}

/// Wall-clock and approximate memory ceilings. Memory is accounted by the
/// solvers from their own table sizes, not measured from the allocator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    pub mem_limit: Option<usize>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_memory(mut self, bytes: usize) -> Self {
        self.mem_limit = Some(bytes);
        self
    }

    pub(crate) fn start(&self) -> Clock {
        let started = Instant::now();
        Clock { started, deadline: self.time_limit.map(|d| started + d), mem_limit: self.mem_limit, ticks: 0 }
    }
}

pub(crate) struct Clock {
    pub started: Instant,
    deadline: Option<Instant>,
    mem_limit: Option<usize>,
    ticks: u32,
}

impl Clock {
    /// Cheap deadline poll; reads the clock on the first and every 1024th call.
    pub fn expired(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 != 1 {
            return false;
        }
        self.expired_now()
    }

    pub fn expired_now(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn over_memory(&self, bytes: usize) -> bool {
        self.mem_limit.is_some_and(|m| bytes > m)
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algo: Algo,
    pub verdict: Verdict,
    pub tangle: Option<Tangle>,
    pub states_explored: u64,
    #[serde(with = "millis")]
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn height(&self) -> Option<usize> {
        self.tangle.as_ref().map(Tangle::height)
    }

    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(ms.max(0.0) / 1e3))
    }
}
