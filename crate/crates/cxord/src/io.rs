//! Measure file format: a JSON document with fields
//! `interval: [a, b]`, `atoms: [{at, weight}]`,
//! `segments: [{from, to, poly: [c0, c1, ...]}]`, where every scalar is
//! either a JSON number or a string in the scalar grammar
//! (`"5/18"`, `"-1 - 1*sqrt(5) + 2*sqrt(2)"`, ...).

use crate::measure::{Interval, SignedMeasure, Segment};
use crate::numeric::parse::parse_scalar;
use crate::numeric::{Polynomial, Rad, Scalar};
use num_rational::BigRational;
use serde::Deserialize;
use std::fmt;

#[derive(Debug)]
pub enum MeasureFileError {
    Json(serde_json::Error),
    Scalar(String),
    Measure(crate::measure::MeasureError),
}

impl fmt::Display for MeasureFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureFileError::Json(e) => write!(f, "malformed measure file: {e}"),
            MeasureFileError::Scalar(e) => write!(f, "bad scalar in measure file: {e}"),
            MeasureFileError::Measure(e) => write!(f, "invalid measure: {e}"),
        }
    }
}

impl std::error::Error for MeasureFileError {}

impl From<serde_json::Error> for MeasureFileError {
    fn from(e: serde_json::Error) -> Self {
        MeasureFileError::Json(e)
    }
}

impl From<crate::measure::MeasureError> for MeasureFileError {
    fn from(e: crate::measure::MeasureError) -> Self {
        MeasureFileError::Measure(e)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarText {
    Text(String),
    Int(i64),
    Float(f64),
}

#[derive(Deserialize)]
struct AtomDoc {
    at: ScalarText,
    weight: ScalarText,
}

#[derive(Deserialize)]
struct SegmentDoc {
    from: ScalarText,
    to: ScalarText,
    poly: Vec<ScalarText>,
}

#[derive(Deserialize)]
struct MeasureDoc {
    interval: [ScalarText; 2],
    #[serde(default)]
    atoms: Vec<AtomDoc>,
    #[serde(default)]
    segments: Vec<SegmentDoc>,
}

fn scalar_of(text: &ScalarText) -> Result<Rad, MeasureFileError> {
    match text {
        ScalarText::Text(s) => parse_scalar(s).map_err(|e| MeasureFileError::Scalar(e.to_string())),
        ScalarText::Int(i) => Ok(Rad::from_int(*i)),
        ScalarText::Float(x) => BigRational::from_float(*x)
            .map(Rad::from_rational)
            .ok_or_else(|| MeasureFileError::Scalar(format!("non-finite number {x}"))),
    }
}

/// Parse a measure document into exact scalars, then lower to `T`.
pub fn measure_from_json<T: Scalar>(text: &str) -> Result<SignedMeasure<T>, MeasureFileError> {
    let doc: MeasureDoc = serde_json::from_str(text)?;
    let a = scalar_of(&doc.interval[0])?;
    let b = scalar_of(&doc.interval[1])?;
    let interval = Interval::new(T::from_rad(&a), T::from_rad(&b))?;
    let mut atoms = Vec::with_capacity(doc.atoms.len());
    for atom in &doc.atoms {
        atoms.push((
            T::from_rad(&scalar_of(&atom.at)?),
            T::from_rad(&scalar_of(&atom.weight)?),
        ));
    }
    let mut segments = Vec::with_capacity(doc.segments.len());
    for seg in &doc.segments {
        let mut coeffs = Vec::with_capacity(seg.poly.len());
        for c in &seg.poly {
            coeffs.push(T::from_rad(&scalar_of(c)?));
        }
        segments.push(Segment {
            from: T::from_rad(&scalar_of(&seg.from)?),
            to: T::from_rad(&scalar_of(&seg.to)?),
            density: Polynomial::new(coeffs),
        });
    }
    Ok(SignedMeasure::new(interval, atoms, segments)?)
}

/// Render a measure back into the JSON document format (exact scalars).
pub fn measure_to_json(mu: &SignedMeasure<Rad>) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!(
        "  \"interval\": [\"{}\", \"{}\"],\n",
        mu.interval().lo(),
        mu.interval().hi()
    ));
    out.push_str("  \"atoms\": [");
    let atoms: Vec<String> = mu
        .atoms()
        .iter()
        .map(|(at, w)| format!("{{\"at\": \"{at}\", \"weight\": \"{w}\"}}"))
        .collect();
    out.push_str(&atoms.join(", "));
    out.push_str("],\n  \"segments\": [");
    let segs: Vec<String> = mu
        .segments()
        .iter()
        .map(|s| {
            let coeffs: Vec<String> = s
                .density
                .coeffs()
                .iter()
                .map(|c| format!("\"{c}\""))
                .collect();
            format!(
                "{{\"from\": \"{}\", \"to\": \"{}\", \"poly\": [{}]}}",
                s.from,
                s.to,
                coeffs.join(", ")
            )
        })
        .collect();
    out.push_str(&segs.join(", "));
    out.push_str("]\n}\n");
    out
}
