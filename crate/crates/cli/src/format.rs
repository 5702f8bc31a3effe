use std::fmt::Write as _;

use treebound::BoundReport;

/// Formats `x` rounded to `digits` significant digits, trailing zeros
/// trimmed. Magnitudes outside `1e-5..1e12` use scientific notation.
pub fn significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let text = if (-5..digits as i32).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{:.*e}", digits - 1, x);
        match s.split_once('e') {
            Some((mantissa, exp)) => format!("{}e{}", trim_fraction(mantissa), exp),
            None => s,
        }
    };
    if text.trim_start_matches('-') == "0" {
        "0".to_string()
    } else {
        text
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Multi-line rendering of a bound check. The first line reads
/// `tau=<int> bound=<p/q> HOLDS|VIOLATED EQUALITY=yes|no`.
pub fn bound_report(report: &BoundReport) -> String {
    let mut out = String::new();
    let bound = report
        .bound
        .as_ref()
        .map_or_else(|| "unbounded".to_string(), ToString::to_string);
    writeln!(
        out,
        "tau={} bound={} {} EQUALITY={}",
        report.tau,
        bound,
        if report.holds { "HOLDS" } else { "VIOLATED" },
        yes_no(report.equality)
    )
    .unwrap();
    if let Some(b) = &report.bound {
        writeln!(out, "bound_decimal={}", significant(b.to_f64(), 12)).unwrap();
    }
    let flags: Vec<String> = report
        .preconditions
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect();
    writeln!(out, "{}", flags.join(" ")).unwrap();
    writeln!(out, "asserted={}", yes_no(report.preconditions_met())).unwrap();
    out
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}
