//! Line-oriented text and JSON renderings of the library's values. JSON is
//! built by hand so key order stays deterministic (ascending degrees,
//! ascending labels).

use std::fmt::Write as _;

use petrial_core::interlace::InterlacementGraph;
use petrial_core::poly::GenusPolynomial;
use petrial_core::rotation::{LoopKind, SignedRotation};
use petrial_core::trace::GenusReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// `{"edges":2,"coeffs":{"1":1,"2":3}}` with degrees as decimal strings in
/// ascending order.
pub fn polynomial_json(poly: &GenusPolynomial) -> String {
    let mut out = String::new();
    write!(out, "{{\"edges\":{},\"coeffs\":{{", poly.edges()).unwrap();
    for (i, (degree, count)) in poly.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "\"{degree}\":{count}").unwrap();
    }
    out.push_str("}}");
    out
}

pub fn polynomial_line(poly: &GenusPolynomial, format: Format) -> String {
    match format {
        Format::Json => polynomial_json(poly),
        Format::Text => poly.to_string(),
    }
}

pub fn trace_line(report: &GenusReport, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{{\"edges\":{},\"f\":{},\"chi\":{},\"eps\":{}}}",
            report.edges,
            report.boundary_components,
            report.euler_characteristic,
            report.euler_genus
        ),
        Format::Text => report.to_string(),
    }
}

pub fn sign_char(kind: LoopKind) -> char {
    match kind {
        LoopKind::Orientable => '+',
        LoopKind::NonOrientable => '-',
    }
}

pub fn hex(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(2 * bytes.len());
    for byte in bytes {
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

/// One line per rotation: edge list, vertex signs, optional canonical hex.
pub fn igraph_line(graph: &InterlacementGraph, canonical: Option<&[u8]>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::from("{\"vertices\":[");
            for (i, v) in graph.vertices().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "{v}").unwrap();
            }
            out.push_str("],\"edges\":[");
            for (i, (a, b)) in graph.edges().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "[{a},{b}]").unwrap();
            }
            out.push(']');
            if let Some(signs) = graph.signs() {
                out.push_str(",\"signs\":{");
                for (i, (v, kind)) in signs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write!(out, "\"{v}\":\"{}\"", sign_char(*kind)).unwrap();
                }
                out.push('}');
            }
            if let Some(bytes) = canonical {
                write!(out, ",\"canonical\":\"{}\"", hex(bytes)).unwrap();
            }
            out.push('}');
            out
        }
        Format::Text => {
            let edges: Vec<String> = graph.edges().map(|(a, b)| format!("{a}-{b}")).collect();
            let mut out = format!("edges=[{}]", edges.join(","));
            if let Some(signs) = graph.signs() {
                let signs: Vec<String> = signs
                    .iter()
                    .map(|(v, kind)| format!("{v}:{}", sign_char(*kind)))
                    .collect();
                write!(out, " signs=[{}]", signs.join(",")).unwrap();
            }
            if let Some(bytes) = canonical {
                write!(out, " canonical={}", hex(bytes)).unwrap();
            }
            out
        }
    }
}

pub fn rotation_line(r: &SignedRotation, format: Format) -> String {
    match format {
        Format::Json => format!("{{\"rotation\":\"{r}\"}}"),
        Format::Text => r.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use petrial_core::interlace::{canonical_bytes, signed_interlacement_graph};
    use petrial_core::poly::petrial_polynomial;

    #[test]
    fn polynomial_json_shape() {
        let r: SignedRotation = "1 2 1 2".parse().unwrap();
        let poly = petrial_polynomial(&r).unwrap();
        assert_eq!(polynomial_json(&poly), r#"{"edges":2,"coeffs":{"1":1,"2":3}}"#);
        let empty = petrial_polynomial(&SignedRotation::empty()).unwrap();
        assert_eq!(polynomial_json(&empty), r#"{"edges":0,"coeffs":{"0":1}}"#);
    }

    #[test]
    fn trace_text_matches_report_display() {
        let r: SignedRotation = "1 -1".parse().unwrap();
        let report = GenusReport::of(&r);
        assert_eq!(trace_line(&report, Format::Text), "f=1 \u{3c7}=1 \u{3b5}=1");
        assert_eq!(
            trace_line(&report, Format::Json),
            r#"{"edges":1,"f":1,"chi":1,"eps":1}"#
        );
    }

    #[test]
    fn igraph_lines() {
        let r: SignedRotation = "1 2 -1 2".parse().unwrap();
        let g = signed_interlacement_graph(&r);
        assert_eq!(
            igraph_line(&g, None, Format::Text),
            "edges=[1-2] signs=[1:-,2:+]"
        );
        let canon = canonical_bytes(&g).unwrap();
        assert_eq!(
            igraph_line(&g, Some(&canon), Format::Json),
            r#"{"vertices":[1,2],"edges":[[1,2]],"signs":{"1":"-","2":"+"},"canonical":"0280"}"#
        );
    }
}
