use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use treebound::{check_degree_bound, families, Multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    RandomSimple,
    RandomMulti,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::CompleteBipartite,
        Family::RandomSimple,
        Family::RandomMulti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::CompleteBipartite => "complete-bipartite",
            Family::RandomSimple => "random-simple",
            Family::RandomMulti => "random-multi",
        }
    }

    fn min_n(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 2,
        }
    }

    fn is_random(self) -> bool {
        matches!(self, Family::RandomSimple | Family::RandomMulti)
    }

    fn default_delta(self) -> u32 {
        match self {
            Family::RandomMulti => 3,
            _ => 1,
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                format!(
                    "unknown family {s:?} (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub family: Family,
    pub n_max: usize,
    pub delta: Option<u32>,
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: &'static str,
    pub n: usize,
    pub delta: u32,
    pub tau: String,
    pub bound: String,
    pub ratio: f64,
    pub equality: bool,
}

/// Generator for one random row: ChaCha8 seeded with the sweep seed, on
/// stream `(n << 32) | sample`.
pub fn row_rng(seed: u64, n: usize, sample: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | sample as u64);
    rng
}

fn graph_for(config: &SweepConfig, delta: u32, n: usize, sample: usize) -> Multigraph {
    match config.family {
        Family::Complete => families::complete(n, delta),
        Family::Cycle => families::scaled(&families::cycle(n), delta),
        Family::Path => families::scaled(&families::path(n), delta),
        Family::CompleteBipartite => {
            families::scaled(&families::complete_bipartite(n / 2, n - n / 2), delta)
        }
        Family::RandomSimple | Family::RandomMulti => {
            let mut rng = row_rng(config.seed, n, sample);
            loop {
                let g = if config.family == Family::RandomSimple {
                    families::random_simple(n, 0.5, &mut rng)
                } else {
                    families::random_multigraph(n, delta, &mut rng)
                };
                if g.has_edges() {
                    return g;
                }
            }
        }
    }
}

pub fn rows(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let delta = config.delta.unwrap_or(config.family.default_delta());
    if delta == 0 {
        bail!("--delta must be at least 1");
    }
    if config.n_max < config.family.min_n() {
        bail!(
            "--n-max must be at least {} for family {}",
            config.family.min_n(),
            config.family.name()
        );
    }
    let samples = if config.family.is_random() {
        config.count.max(1)
    } else {
        1
    };
    let jobs: Vec<(usize, usize)> = (config.family.min_n()..=config.n_max)
        .flat_map(|n| (0..samples).map(move |s| (n, s)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, sample)| {
            let g = graph_for(config, delta, n, sample);
            let report = check_degree_bound(&g)?;
            Ok(SweepRow {
                family: config.family.name(),
                n,
                delta: g.max_multiplicity()?,
                tau: report.tau.to_string(),
                bound: report
                    .bound
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                ratio: report.ratio(),
                equality: report.equality,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(["family", "n", "delta", "tau", "bound", "ratio", "equality"])?;
    for row in rows {
        writer.write_record([
            row.family.to_string(),
            row.n.to_string(),
            row.delta.to_string(),
            row.tau.clone(),
            row.bound.clone(),
            format!("{:?}", row.ratio),
            row.equality.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(family: Family, n_max: usize) -> SweepConfig {
        SweepConfig {
            family,
            n_max,
            delta: None,
            seed: 1,
            count: 3,
        }
    }

    #[test]
    fn complete_rows_are_tight() {
        let rows = rows(&config(Family::Complete, 6)).unwrap();
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.equality && r.ratio == 1.0));
        assert_eq!(rows[4].tau, "1296");
    }

    #[test]
    fn random_rows_are_reproducible() {
        let a = rows(&config(Family::RandomMulti, 6)).unwrap();
        let b = rows(&config(Family::RandomMulti, 6)).unwrap();
        assert_eq!(a.len(), 15);
        assert_eq!(a, b);
        let mut other = config(Family::RandomMulti, 6);
        other.seed = 2;
        assert_ne!(a, rows(&other).unwrap());
    }

    #[test]
    fn bad_configs() {
        assert!(rows(&config(Family::Cycle, 2)).is_err());
        let mut c = config(Family::Path, 4);
        c.delta = Some(0);
        assert!(rows(&c).is_err());
        assert!("nope".parse::<Family>().is_err());
        assert_eq!(
            "complete-bipartite".parse::<Family>(),
            Ok(Family::CompleteBipartite)
        );
    }

    #[test]
    fn csv_layout() {
        let rows = rows(&config(Family::Path, 3)).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "family,n,delta,tau,bound,ratio,equality\n\
             path,2,1,1,1/1,1.0,true\n\
             path,3,1,1,4/3,0.75,false\n"
        );
    }
}
