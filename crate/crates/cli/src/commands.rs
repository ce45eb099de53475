//! Subcommand implementations behind the argument parser.

use std::path::{Path, PathBuf};

use a1score::{compare, parse, A1Config, AlgorithmProfile, EvalConfig, ScanRange, Winner};

use crate::catalog::parse_catalog;
use crate::plot::{sample_pair, to_csv, to_svg};
use crate::report::{render_kv, render_text};
use crate::CliError;

/// Raw profile flags for one side of a comparison.
#[derive(Clone, Debug)]
pub struct ProfileArgs {
    pub name: String,
    pub time: String,
    pub space: String,
}

impl ProfileArgs {
    /// `side` is "x" or "y", used to name the offending flag in errors.
    fn build(&self, side: &str) -> Result<AlgorithmProfile, CliError> {
        let time = parse(&self.time)
            .map_err(|err| CliError::input(format!("--{side}-time '{}': {err}", self.time)))?;
        let space = parse(&self.space)
            .map_err(|err| CliError::input(format!("--{side}-space '{}': {err}", self.space)))?;
        Ok(AlgorithmProfile::new(self.name.clone(), time, space))
    }
}

/// Flags shared by every subcommand that evaluates scores.
#[derive(Clone, Copy, Debug)]
pub struct EvalArgs {
    pub xi: f64,
    pub log_base: f64,
}

impl EvalArgs {
    fn config(&self) -> Result<A1Config, CliError> {
        if !(self.log_base.is_finite() && self.log_base > 1.0) {
            return Err(CliError::input(format!(
                "--log-base must be a finite real greater than 1 (got {})",
                self.log_base
            )));
        }
        if !(self.xi.is_finite() && self.xi > 0.0) {
            return Err(CliError::input(format!(
                "--xi must be a finite real greater than 0 (got {})",
                self.xi
            )));
        }
        Ok(A1Config::new(self.xi, EvalConfig::new(self.log_base)))
    }
}

fn check_n(n: f64) -> Result<f64, CliError> {
    if n.is_finite() && n > 1.0 {
        Ok(n)
    } else {
        Err(CliError::input(format!(
            "--n must be a finite real greater than 1 (got {n})"
        )))
    }
}

/// Parses `lo:hi:samples` scan syntax.
pub fn parse_scan(text: &str) -> Result<ScanRange, CliError> {
    let bad = || {
        CliError::input(format!(
            "--scan expects 'lo:hi:samples' with 1 < lo < hi and samples >= 2 (got '{text}')"
        ))
    };
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let samples: usize = parts[2].trim().parse().map_err(|_| bad())?;
    ScanRange::new(lo, hi, samples).map_err(|_| bad())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareFormat {
    Text,
    Kv,
}

/// Runs a pairwise comparison and renders the report.
pub fn run_compare(
    x: &ProfileArgs,
    y: &ProfileArgs,
    n: f64,
    eval: EvalArgs,
    scan_text: &str,
    format: CompareFormat,
) -> Result<String, CliError> {
    let profile_x = x.build("x")?;
    let profile_y = y.build("y")?;
    let n_star = check_n(n)?;
    let config = eval.config()?;
    let scan = parse_scan(scan_text)?;
    let verdict = compare(&profile_x, &profile_y, n_star, &config, &scan)
        .map_err(|err| CliError::input(format!("cannot evaluate at --n {n_star}: {err}")))?;
    Ok(match format {
        CompareFormat::Kv => render_kv(&verdict),
        CompareFormat::Text => {
            render_text(&verdict, &profile_x, &profile_y, n_star, &config, &scan)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Csv,
    Svg,
    Both,
}

/// What `run_plot` wrote, for the summary line.
#[derive(Clone, Debug)]
pub struct PlotOutcome {
    pub files: Vec<PathBuf>,
    pub rows: usize,
    pub skipped: usize,
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|err| CliError::io(format!("{}: {err}", path.display())))
}

/// Samples the pair over the scan range and writes CSV and/or SVG files.
pub fn run_plot(
    x: &ProfileArgs,
    y: &ProfileArgs,
    eval: EvalArgs,
    scan_text: &str,
    out: &Path,
    emit: Emit,
) -> Result<PlotOutcome, CliError> {
    let profile_x = x.build("x")?;
    let profile_y = y.build("y")?;
    let config = eval.config()?;
    let scan = parse_scan(scan_text)?;
    let pair = sample_pair(&profile_x, &profile_y, &config, &scan);
    if pair.x.points.is_empty() {
        return Err(CliError::input(
            "no plottable samples: every point in the scan range overflowed",
        ));
    }
    let mut files = Vec::new();
    if matches!(emit, Emit::Csv | Emit::Both) {
        let path = out.with_extension("csv");
        write_file(&path, &to_csv(&pair))?;
        files.push(path);
    }
    if matches!(emit, Emit::Svg | Emit::Both) {
        let path = out.with_extension("svg");
        write_file(&path, &to_svg(&pair))?;
        files.push(path);
    }
    Ok(PlotOutcome {
        files,
        rows: pair.x.points.len(),
        skipped: pair.skipped,
    })
}

/// Round-robin pairwise ranking of a catalog.
pub fn run_rank(
    catalog_path: &Path,
    n: f64,
    eval: EvalArgs,
    scan_text: &str,
) -> Result<String, CliError> {
    let text = std::fs::read_to_string(catalog_path)
        .map_err(|err| CliError::io(format!("{}: {err}", catalog_path.display())))?;
    let mut entries = parse_catalog(&text)?;
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let n_star = check_n(n)?;
    let config = eval.config()?;
    let scan = parse_scan(scan_text)?;

    let profiles: Vec<AlgorithmProfile> = entries.iter().map(|e| e.profile()).collect();
    let count = profiles.len();
    // cell[i][j] = winner name, "tie", or "-" on the diagonal.
    let mut cells = vec![vec![String::from("-"); count]; count];
    let mut wins = vec![0usize; count];
    for i in 0..count {
        for j in (i + 1)..count {
            let verdict = compare(&profiles[i], &profiles[j], n_star, &config, &scan)
                .map_err(|err| {
                    CliError::input(format!(
                        "comparing '{}' vs '{}' at --n {n_star}: {err}",
                        profiles[i].name, profiles[j].name
                    ))
                })?;
            let cell = match verdict.winner {
                Winner::X => {
                    wins[i] += 1;
                    profiles[i].name.clone()
                }
                Winner::Y => {
                    wins[j] += 1;
                    profiles[j].name.clone()
                }
                Winner::Indistinguishable => String::from("tie"),
            };
            cells[i][j] = cell.clone();
            cells[j][i] = cell;
        }
    }

    let names: Vec<&str> = profiles.iter().map(|p| p.name.as_str()).collect();
    let width = names
        .iter()
        .map(|n| n.len())
        .max()
        .unwrap_or(4)
        .max("tie".len());

    let mut out = String::new();
    out.push_str(&format!(
        "Pairwise A1-Score ranking at n = {n_star} (xi = {}, log base = {})\n",
        config.xi(),
        config.eval.log_base()
    ));
    out.push_str(&format!(
        "{count} algorithms, {} pairwise comparisons\n\n",
        count * (count - 1) / 2
    ));
    out.push_str("Winner matrix (row vs column):\n");
    out.push_str(&format!("{:>width$} ", ""));
    for name in &names {
        out.push_str(&format!("{name:>width$} "));
    }
    out.push('\n');
    for (i, name) in names.iter().enumerate() {
        out.push_str(&format!("{name:>width$} "));
        for cell in &cells[i] {
            out.push_str(&format!("{cell:>width$} "));
        }
        out.push('\n');
    }

    out.push_str("\nWin counts (pairwise, not guaranteed transitive):\n");
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by(|&a, &b| wins[b].cmp(&wins[a]).then(names[a].cmp(names[b])));
    for idx in order {
        out.push_str(&format!("  {:<width$} {}\n", names[idx], wins[idx]));
    }
    Ok(out)
}
