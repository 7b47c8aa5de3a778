//! Stable serialization of verdicts: newline-delimited `key: value`
//! records with fixed field order, suitable for golden-file tests and
//! downstream tooling.

use crate::numeric::Scalar;
use crate::ordering::{Certificate, OrderVerdict};
use std::fmt::Write;

/// How scalars are rendered in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarStyle {
    /// Exact grammar form (`5/18`, `1/72 + 1/360*sqrt(5) - ...`).
    Exact,
    /// Shortest-roundtrip decimal of the f64 value.
    Float,
}

pub fn render_scalar<T: Scalar>(x: &T, style: ScalarStyle) -> String {
    match style {
        ScalarStyle::Exact => format!("{x}"),
        ScalarStyle::Float => format!("{}", x.to_f64()),
    }
}

fn push_kv(out: &mut String, key: &str, value: impl AsRef<str>) {
    let _ = writeln!(out, "{}: {}", key, value.as_ref());
}

/// Serialize a verdict as the stable key-value record.
pub fn render_verdict<T: Scalar>(v: &OrderVerdict<T>, style: ScalarStyle) -> String {
    let mut out = String::new();
    push_kv(&mut out, "status", v.status.as_str());
    match &v.certificate {
        Some(cert) => render_certificate(&mut out, cert, style),
        None => push_kv(&mut out, "criterion", "none"),
    }
    if let Some(k) = v.failed_moment {
        push_kv(&mut out, "failed-moment", k.to_string());
    }
    if let Some(w) = &v.witness_low {
        push_kv(
            &mut out,
            "witness-low",
            format!(
                "shift={} gap={}",
                render_scalar(&w.shift, style),
                render_scalar(&w.gap, style)
            ),
        );
    }
    if let Some(w) = &v.witness_high {
        push_kv(
            &mut out,
            "witness-high",
            format!(
                "shift={} gap={}",
                render_scalar(&w.shift, style),
                render_scalar(&w.gap, style)
            ),
        );
    }
    out
}

fn render_certificate<T: Scalar>(out: &mut String, cert: &Certificate<T>, style: ScalarStyle) {
    push_kv(out, "criterion", cert.criterion.as_str());
    push_kv(out, "degree", cert.degree.to_string());
    push_kv(
        out,
        "moments-checked",
        format!("0..={} equal", cert.moments_checked),
    );
    if !cert.crossings.is_empty() {
        // crossing locations are refined approximations, so they are
        // reported as decimals even in exact mode
        let pts: Vec<String> = cert
            .crossings
            .iter()
            .map(|p| render_scalar(p, ScalarStyle::Float))
            .collect();
        push_kv(out, "crossings", pts.join(", "));
    }
    if !cert.h_checked.is_empty() {
        let vals: Vec<String> = cert
            .h_checked
            .iter()
            .map(|(x, h)| {
                format!(
                    "H({})={}",
                    render_scalar(x, style),
                    render_scalar(h, style)
                )
            })
            .collect();
        push_kv(out, "h-values", vals.join(", "));
    }
    if cert.both_directions {
        push_kv(out, "both-directions", "true");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{Interval, SignedMeasure};
    use crate::numeric::Rad;
    use crate::ordering::{decide_order, ConvexityDegree};

    #[test]
    fn structured_output_is_stable() {
        let unit = Interval::<Rad>::unit();
        let mid = SignedMeasure::dirac(unit.clone(), Rad::from_ratio(1, 2), Rad::one()).unwrap();
        let uni = SignedMeasure::uniform(unit, Rad::one());
        let v = decide_order(&mid, &uni, ConvexityDegree::new(1).unwrap(), &Rad::zero());
        let text = render_verdict(&v, ScalarStyle::Exact);
        assert_eq!(
            text,
            "status: holds\ncriterion: ohlin\ndegree: 1\nmoments-checked: 0..=1 equal\ncrossings: 0.5\n"
        );
        let again = render_verdict(&v, ScalarStyle::Exact);
        assert_eq!(text, again);
    }
}
