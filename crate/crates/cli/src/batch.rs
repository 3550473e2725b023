//! Corpus runs: generate, place and verify many instances in parallel.

use std::path::Path;
use std::time::Instant;

use anyhow::anyhow;
use halfguard::polygen::{gen_orthogonal, gen_simple};
use halfguard::verify::{verify_report_with, Covered, VerifyOptions};
use rayon::prelude::*;
use serde::Serialize;

use crate::{guard_bound, place, verify_options, Failure, Mode, EXIT_CONSTRUCTION, EXIT_OK, EXIT_VERIFY};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub mode: &'static str,
    pub n: usize,
    pub seed: u64,
    pub index: usize,
    pub guards: usize,
    pub bound: usize,
    pub covered: &'static str,
    pub connected: bool,
    pub ok: bool,
    pub runtime_ms: f64,
    pub error: String,
}

/// Parses an inclusive range `A..B`.
pub fn parse_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("range {s:?} is not of the form A..B"))?;
    let a: usize = a.trim().parse().map_err(|_| anyhow!("invalid range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| anyhow!("invalid range end in {s:?}"))?;
    Ok((a, b))
}

/// Sizes in `lo..=hi` the generator and construction support.
pub fn sizes(mode: Mode, lo: usize, hi: usize) -> Vec<usize> {
    match mode {
        Mode::Simple => (lo.max(3)..=hi).collect(),
        Mode::Orthogonal => (lo.max(6)..=hi).filter(|n| n % 2 == 0).collect(),
    }
}

/// Runs one instance. `None` when generation fails.
pub fn run_instance(mode: Mode, n: usize, seed: u64, index: usize, opts: &VerifyOptions) -> Option<(Row, i32)> {
    let instance_seed = seed.wrapping_add(index as u64);
    let generated = match mode {
        Mode::Simple => gen_simple(n, instance_seed),
        Mode::Orthogonal => gen_orthogonal(n, instance_seed),
    };
    let p = match generated {
        Ok(p) => p,
        Err(e) => {
            eprintln!("warning: generation failed for n={n} seed={instance_seed}: {e}");
            return None;
        }
    };
    let orthogonal = mode == Mode::Orthogonal;
    let bound = guard_bound(n, orthogonal);
    let start = Instant::now();
    let mut row = Row {
        mode: if orthogonal { "orthogonal" } else { "simple" },
        n,
        seed: instance_seed,
        index,
        guards: 0,
        bound,
        covered: "none",
        connected: false,
        ok: false,
        runtime_ms: 0.0,
        error: String::new(),
    };
    let code = match place(&p, orthogonal, None) {
        Ok(set) => {
            let r = verify_report_with(&p, &set.guards, bound, None, opts);
            row.guards = set.len();
            row.covered = match r.covered {
                Covered::ProvedExact => "proved_exact",
                Covered::SampledOk(_) => "sampled_ok",
                Covered::Refuted(_) => "refuted",
            };
            row.connected = r.connected;
            row.ok = r.ok();
            if row.ok { EXIT_OK } else { EXIT_VERIFY }
        }
        Err(f) => {
            row.error = format!("{:#}", f.error);
            f.code
        }
    };
    row.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Some((row, code))
}

pub fn cmd_batch(
    mode: Mode,
    range: &str,
    count: usize,
    seed: u64,
    density: Option<f64>,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let (lo, hi) = parse_range(range).map_err(Failure::usage)?;
    let ns = sizes(mode, lo, hi);
    if ns.is_empty() || count == 0 {
        return Err(Failure::usage(anyhow!("no instances in range {range:?} with count {count}")));
    }
    let opts = verify_options(density)?;
    let jobs: Vec<(usize, usize)> = ns.iter().flat_map(|&n| (0..count).map(move |i| (n, i))).collect();
    // `collect` keeps job order, which is sorted by (n, seed, index).
    let results: Vec<Option<(Row, i32)>> =
        jobs.par_iter().map(|&(n, i)| run_instance(mode, n, seed, i, &opts)).collect();
    let skipped = results.iter().filter(|r| r.is_none()).count();
    let rows: Vec<(Row, i32)> = results.into_iter().flatten().collect();

    let write = |w: Box<dyn std::io::Write>| -> anyhow::Result<()> {
        let mut csv = csv::Writer::from_writer(w);
        for (row, _) in &rows {
            csv.serialize(row)?;
        }
        csv.flush()?;
        Ok(())
    };
    match out {
        Some(path) => write(Box::new(std::fs::File::create(path).map_err(|e| Failure::usage(anyhow!("{}: {e}", path.display())))?)),
        None => write(Box::new(std::io::stdout())),
    }
    .map_err(Failure::usage)?;

    let failed = rows.iter().filter(|(r, _)| !r.ok).count();
    eprintln!("{} instances, {} failed, {} generation failures skipped", rows.len(), failed, skipped);
    if rows.is_empty() {
        return Ok(EXIT_CONSTRUCTION);
    }
    // Codes are ordered by severity.
    Ok(rows.iter().map(|&(_, c)| c).max().unwrap_or(EXIT_OK))
}
