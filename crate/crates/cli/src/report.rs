//! Rendering of comparison verdicts: human-readable text and greppable
//! `key=value` lines.

use a1score::{A1Config, AlgorithmProfile, Branch, ComparisonVerdict, ScanRange, Winner};

/// Formats with at least `sig` significant digits in plain decimal.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return format!("{v:.1}");
    }
    let exp10 = v.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exp10).clamp(0, 40) as usize;
    format!("{v:.decimals$}")
}

fn crossover_list(verdict: &ComparisonVerdict, sig: usize) -> String {
    if verdict.crossovers.is_empty() {
        return "none".to_string();
    }
    verdict
        .crossovers
        .iter()
        .map(|c| format!("{}..{}", fmt_sig(c.lo, sig), fmt_sig(c.hi, sig)))
        .collect::<Vec<_>>()
        .join(";")
}

/// One `key=value` line per verdict field.
pub fn render_kv(verdict: &ComparisonVerdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("winner={}\n", verdict.winner));
    out.push_str(&format!("branch={}\n", verdict.branch));
    out.push_str(&format!("a1_x={}\n", fmt_sig(verdict.a1_x, 12)));
    out.push_str(&format!("a1_y={}\n", fmt_sig(verdict.a1_y, 12)));
    out.push_str(&format!(
        "product_equal={}\n",
        verdict.product_equality == a1score::ProductEquality::Symbolic
    ));
    out.push_str(&format!("oracle_winner={}\n", verdict.oracle_winner));
    out.push_str(&format!("oracle_agrees={}\n", verdict.oracle_agrees));
    out.push_str(&format!("crossovers={}\n", crossover_list(verdict, 12)));
    out
}

fn side_label(name: &str, side: &str) -> String {
    if name == side {
        side.to_string()
    } else {
        format!("{side} ({name})")
    }
}

fn winner_label(winner: Winner, x: &AlgorithmProfile, y: &AlgorithmProfile) -> String {
    match winner {
        Winner::X => side_label(&x.name, "X"),
        Winner::Y => side_label(&y.name, "Y"),
        Winner::Indistinguishable => "indistinguishable".to_string(),
    }
}

/// The human-readable comparison report.
pub fn render_text(
    verdict: &ComparisonVerdict,
    x: &AlgorithmProfile,
    y: &AlgorithmProfile,
    n_star: f64,
    config: &A1Config,
    scan: &ScanRange,
) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "A1-Score comparison at n = {} (xi = {}, log base = {})\n",
        n_star,
        config.xi(),
        config.eval.log_base()
    ));
    out.push_str(&format!(
        "  {}: time {}, space {}\n",
        side_label(&x.name, "X"),
        x.time,
        x.space
    ));
    out.push_str(&format!(
        "  {}: time {}, space {}\n",
        side_label(&y.name, "Y"),
        y.time,
        y.space
    ));
    out.push_str(&format!("  A1(X) = {}\n", fmt_sig(verdict.a1_x, 12)));
    out.push_str(&format!("  A1(Y) = {}\n", fmt_sig(verdict.a1_y, 12)));
    match verdict.branch {
        Branch::EqualProduct => out.push_str(
            "  products: symbolically equal -> equal-product branch, lower A1-Score wins\n",
        ),
        Branch::UnequalProduct => out.push_str(
            "  products: symbolically different -> unequal-product branch, higher A1-Score wins\n",
        ),
    }
    out.push_str(&format!(
        "  winner: {}\n",
        winner_label(verdict.winner, x, y)
    ));
    if verdict.crossovers.is_empty() {
        out.push_str(&format!(
            "  crossover scan over [{}, {}] ({} samples): ordering stable\n",
            scan.lo(),
            scan.hi(),
            scan.samples()
        ));
    } else {
        out.push_str(&format!(
            "  crossover scan over [{}, {}] ({} samples): ordering flips in {} interval(s): {}\n",
            scan.lo(),
            scan.hi(),
            scan.samples(),
            verdict.crossovers.len(),
            crossover_list(verdict, 6)
        ));
    }
    if verdict.oracle_agrees {
        out.push_str(&format!(
            "  oracle (product growth, then sum): {} -> agrees with the verdict\n",
            winner_label(verdict.oracle_winner, x, y)
        ));
    } else {
        out.push_str(&format!(
            "  oracle (product growth, then sum): {} -> DISAGREES with the verdict ({})\n",
            winner_label(verdict.oracle_winner, x, y),
            format_args!(
                "hypothesis picks {}, oracle picks {}",
                winner_label(verdict.winner, x, y),
                winner_label(verdict.oracle_winner, x, y)
            )
        ));
    }
    out
}
