//! The verification grid and the suite runner.
//!
//! The default grid sweeps degrees up to 10 (8 for the order-`s` basis
//! expansions), one to three Barnes parameters drawn from four fixed sets
//! (with repeats and a non-integer on purpose), polylogarithm orders from
//! -2 to 3, basis orders up to 3 and three values of lambda. Every knob can
//! be overridden; enumeration order is deterministic and the collected
//! reports are sorted before they are returned.

use std::collections::HashSet;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{BarnesParams, MixedFamilyKey};
use crate::rational::{rat, ratio, Rational};

use super::{
    sort_reports, verify_explicit, verify_falling, verify_frobenius, verify_higher_bernoulli,
    verify_more_relation, verify_number_relation, verify_recurrence, verify_rising, verify_sheffer,
    IdentityReport,
};

/// Selects which identity checks a run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
}

impl Suite {
    pub const ALL_NAMES: &'static [&'static str] =
        &["all", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"];

    fn covers(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "t1" => Ok(Suite::T1),
            "t2" => Ok(Suite::T2),
            "t3" => Ok(Suite::T3),
            "t4" => Ok(Suite::T4),
            "t5" => Ok(Suite::T5),
            "t6" => Ok(Suite::T6),
            "t7" => Ok(Suite::T7),
            "t8" => Ok(Suite::T8),
            "t9" => Ok(Suite::T9),
            other => Err(format!(
                "unknown suite `{other}` (expected one of {})",
                Suite::ALL_NAMES.join(", ")
            )),
        }
    }
}

/// Parameter ranges for a verification sweep.
#[derive(Clone, Debug)]
pub struct Grid {
    /// Highest degree checked by the polynomial identities.
    pub max_n: usize,
    /// Degree ceiling for the order-`s` basis expansions, which grow the
    /// fastest; the effective ceiling is `min(max_n, max_n_higher_order)`.
    pub max_n_higher_order: usize,
    pub r_values: Vec<usize>,
    pub k_values: Vec<i64>,
    /// Candidate parameter vectors; each is truncated to length `r` when
    /// long enough, and skipped otherwise.
    pub a_sets: Vec<Vec<Rational>>,
    pub s_values: Vec<usize>,
    pub lambda_values: Vec<Rational>,
    pub y_values: Vec<Rational>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            max_n: 10,
            max_n_higher_order: 8,
            r_values: vec![1, 2, 3],
            k_values: (-2..=3).collect(),
            a_sets: vec![
                vec![rat(1)],
                vec![rat(1), rat(2)],
                vec![ratio(1, 2), rat(3)],
                vec![rat(2), rat(2), rat(1)],
            ],
            s_values: vec![0, 1, 2, 3],
            lambda_values: vec![rat(2), rat(-1), ratio(1, 3)],
            y_values: vec![rat(1), rat(-1), ratio(1, 2)],
        }
    }
}

impl Grid {
    /// Check the overridable knobs before a run.
    pub fn validate(&self) -> Result<()> {
        if self.r_values.contains(&0) {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        if self.lambda_values.iter().any(|l| *l == rat(1)) {
            return Err(Error::InvalidParams("lambda must differ from 1".into()));
        }
        Ok(())
    }

    /// Every `(r, k, a)` key of the grid, duplicates removed, in
    /// enumeration order.
    pub fn keys(&self) -> Result<Vec<MixedFamilyKey>> {
        self.validate()?;
        let mut keys = Vec::new();
        let mut seen = HashSet::new();
        for &r in &self.r_values {
            for a_set in &self.a_sets {
                if a_set.len() < r {
                    continue;
                }
                let a = a_set[..r].to_vec();
                for &k in &self.k_values {
                    if seen.insert((a.clone(), k)) {
                        keys.push(MixedFamilyKey::new(BarnesParams::new(a.clone())?, k));
                    }
                }
            }
        }
        Ok(keys)
    }
}

enum Task {
    Explicit(usize, MixedFamilyKey),
    Sheffer(usize, MixedFamilyKey, Rational),
    Recurrence(usize, MixedFamilyKey),
    MoreRelation(usize, MixedFamilyKey),
    Number(usize, MixedFamilyKey),
    Falling(usize, MixedFamilyKey),
    Rising(usize, MixedFamilyKey),
    Frobenius(usize, MixedFamilyKey, usize, Rational),
    Higher(usize, MixedFamilyKey, usize),
}

fn run_task(task: &Task) -> Vec<IdentityReport> {
    match task {
        Task::Explicit(n, key) => verify_explicit(*n, key),
        Task::Sheffer(n, key, y0) => {
            vec![verify_sheffer(*n, key, &ratio(1, 3), y0)]
        }
        Task::Recurrence(n, key) => vec![verify_recurrence(*n, key)],
        Task::MoreRelation(n, key) => {
            let (direct, remark) =
                verify_more_relation(*n, key).expect("tasks are enumerated with n >= 1");
            vec![direct, remark]
        }
        Task::Number(n, key) => vec![verify_number_relation(*n, key)],
        Task::Falling(n, key) => vec![verify_falling(*n, key)],
        Task::Rising(n, key) => vec![verify_rising(*n, key)],
        Task::Frobenius(n, key, s, lambda) => {
            vec![verify_frobenius(*n, key, *s, lambda).expect("grid validated lambda != 1")]
        }
        Task::Higher(n, key, s) => vec![verify_higher_bernoulli(*n, key, *s)],
    }
}

/// Run one suite (or all of them) over a grid. `jobs` bounds the worker
/// pool; `1` runs inline and `0` lets the pool size itself. The report
/// stream is identical for every `jobs` value.
pub fn run_suite(suite: Suite, grid: &Grid, jobs: usize) -> Result<Vec<IdentityReport>> {
    grid.validate()?;
    let keys = grid.keys()?;
    let basis_max_n = grid.max_n.min(grid.max_n_higher_order);

    let mut tasks = Vec::new();
    for key in &keys {
        if suite.covers(Suite::T1) {
            for n in 0..=grid.max_n {
                tasks.push(Task::Explicit(n, key.clone()));
            }
        }
        if suite.covers(Suite::T2) {
            for y0 in &grid.y_values {
                for n in 0..=grid.max_n {
                    tasks.push(Task::Sheffer(n, key.clone(), y0.clone()));
                }
            }
        }
        if suite.covers(Suite::T3) {
            for n in 0..grid.max_n {
                tasks.push(Task::Recurrence(n, key.clone()));
            }
        }
        if suite.covers(Suite::T4) {
            for n in 1..=grid.max_n {
                tasks.push(Task::MoreRelation(n, key.clone()));
            }
        }
        if suite.covers(Suite::T5) {
            for n in 0..=grid.max_n {
                tasks.push(Task::Number(n, key.clone()));
            }
        }
        if suite.covers(Suite::T6) {
            for n in 0..=grid.max_n {
                tasks.push(Task::Falling(n, key.clone()));
            }
        }
        if suite.covers(Suite::T7) {
            for n in 0..=grid.max_n {
                tasks.push(Task::Rising(n, key.clone()));
            }
        }
        if suite.covers(Suite::T8) {
            for &s in &grid.s_values {
                for lambda in &grid.lambda_values {
                    for n in 0..=basis_max_n {
                        tasks.push(Task::Frobenius(n, key.clone(), s, lambda.clone()));
                    }
                }
            }
        }
        if suite.covers(Suite::T9) {
            for &s in &grid.s_values {
                for n in 0..=basis_max_n {
                    tasks.push(Task::Higher(n, key.clone(), s));
                }
            }
        }
    }

    let mut reports: Vec<IdentityReport> = if jobs == 1 {
        tasks.iter().flat_map(run_task).collect()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if jobs > 0 {
            builder = builder.num_threads(jobs);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::InvalidParams(format!("worker pool: {e}")))?;
        pool.install(|| tasks.par_iter().flat_map_iter(run_task).collect())
    };
    sort_reports(&mut reports);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_keys_are_deduplicated() {
        let grid = Grid::default();
        let keys = grid.keys().unwrap();
        // r=1: {1, 1/2, 2}; r=2: {(1,2), (1/2,3), (2,2)}; r=3: {(2,2,1)};
        // times six k values
        assert_eq!(keys.len(), 7 * 6);
        let mut seen = HashSet::new();
        for key in &keys {
            assert!(seen.insert((key.params.a().to_vec(), key.k)));
        }
    }

    #[test]
    fn grid_rejects_unit_lambda_and_zero_r() {
        let mut grid = Grid::default();
        grid.lambda_values = vec![rat(1)];
        assert!(matches!(grid.validate(), Err(Error::InvalidParams(_))));

        let mut grid = Grid::default();
        grid.r_values = vec![0, 1];
        assert!(grid.validate().is_err());
    }

    #[test]
    fn tiny_sweep_is_deterministic_and_parallel_stable() {
        let grid = Grid {
            max_n: 2,
            max_n_higher_order: 2,
            r_values: vec![1],
            k_values: vec![0, 1],
            a_sets: vec![vec![rat(1)], vec![rat(2)]],
            s_values: vec![0, 1],
            lambda_values: vec![rat(2)],
            y_values: vec![rat(1)],
        };
        let sequential = run_suite(Suite::All, &grid, 1).unwrap();
        let parallel = run_suite(Suite::All, &grid, 4).unwrap();
        assert_eq!(sequential.len(), parallel.len());
        for (a, b) in sequential.iter().zip(&parallel) {
            assert_eq!(a.id, b.id);
            assert_eq!(a.params, b.params);
            assert_eq!(a.equal, b.equal);
            assert!(a.equal);
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("T5".parse::<Suite>().unwrap(), Suite::T5);
        assert!("t10".parse::<Suite>().is_err());
    }
}
