//! Coverage reports: deterministic scans over a rectangle of lattice
//! points, with CSV and SVG emission.
//!
//! The scan partitions the in-region points of the box into realized /
//! external / open. The SVG replicates the survey figure: the two red
//! boundary lines `n = 5m + 4` and `n = (m − 4)/5`, filled dots for the
//! main-family constructions, gray squares for cited points, and open
//! circles for the final-fill constructions together with the genuinely
//! open diagonal points.

use super::{block_data, in_region, plan, BlockId, GeoError, LatticePoint, PlanOutcome, Recipe};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub m_min: i64,
    pub m_max: i64,
    pub n_min: i64,
    pub n_max: i64,
}

impl Bounds {
    pub fn square(lo: i64, hi: i64) -> Bounds {
        Bounds { m_min: lo, m_max: hi, n_min: lo, n_max: hi }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointStatus {
    Realized,
    External,
    Open,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub bounds: Bounds,
    pub realized: Vec<(LatticePoint, Recipe)>,
    pub external: Vec<(LatticePoint, String)>,
    pub open: Vec<LatticePoint>,
    pub fixture_hash: String,
}

impl CoverageReport {
    pub fn status_of(&self, p: LatticePoint) -> Option<PointStatus> {
        if self.realized.iter().any(|(q, _)| *q == p) {
            Some(PointStatus::Realized)
        } else if self.external.iter().any(|(q, _)| *q == p) {
            Some(PointStatus::External)
        } else if self.open.contains(&p) {
            Some(PointStatus::Open)
        } else {
            None
        }
    }

    /// The survey-figure marker set: open-circle points are the final-fill
    /// constructions plus the genuinely open diagonal points.
    pub fn figure_markers(&self) -> Vec<LatticePoint> {
        let mut out: Vec<LatticePoint> = self
            .realized
            .iter()
            .filter(|(_, r)| r.rule.starts_with("sporadic"))
            .map(|(p, _)| *p)
            .chain(self.open.iter().copied())
            .collect();
        out.sort();
        out
    }
}

/// Hash of the shipped fixture tables (block data and rule-list version);
/// embedded in every emitted report for reproducibility.
pub fn fixture_hash() -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"geo4-rules-v1");
    let ids: Vec<BlockId> = vec![
        BlockId::B,
        BlockId::C,
        BlockId::D,
        BlockId::Bg(1),
        BlockId::Bg(2),
        BlockId::Zg(2),
        BlockId::SurfaceProduct(1, 2),
        BlockId::SurfaceProduct(2, 2),
        BlockId::Ek(1),
        BlockId::Ek(2),
        BlockId::Ek2(2),
        BlockId::Ek22(1),
        BlockId::Eprime(1),
        BlockId::S11,
        BlockId::X312,
        BlockId::P58,
        BlockId::Pk(2),
        BlockId::Zprime,
        BlockId::Zpp(1, 1),
        BlockId::Zpp(2, 1),
        BlockId::M11(1, 1),
        BlockId::M11(1, 2),
        BlockId::W1,
        BlockId::W2,
        BlockId::M,
        BlockId::N0,
        BlockId::Nk(1),
        BlockId::XgLF(2),
        BlockId::Bk4,
        BlockId::Bk8,
        BlockId::Bk9,
        BlockId::Bk12,
        BlockId::Bk14,
        BlockId::R18LF,
        BlockId::R19LF,
        BlockId::R312LF,
        BlockId::R314LF,
        BlockId::Q1P2,
    ];
    for id in ids {
        let data = block_data(id);
        hasher.update(serde_json::to_vec(&data).expect("block serialization"));
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(16);
    for byte in digest.iter().take(8) {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

/// Deterministic scan: plans every in-region point of the box.
pub fn scan(bounds: Bounds) -> Result<CoverageReport, GeoError> {
    let points: Vec<LatticePoint> = (bounds.m_min..=bounds.m_max)
        .flat_map(|m| (bounds.n_min..=bounds.n_max).map(move |n| LatticePoint::new(m, n)))
        .filter(|&p| in_region(p))
        .collect();
    let outcomes: Vec<(LatticePoint, PlanOutcome)> = points
        .par_iter()
        .map(|&p| plan(p).map(|o| (p, o)))
        .collect::<Result<_, _>>()?;
    let mut report = CoverageReport {
        bounds,
        realized: Vec::new(),
        external: Vec::new(),
        open: Vec::new(),
        fixture_hash: fixture_hash(),
    };
    for (p, outcome) in outcomes {
        match outcome {
            PlanOutcome::Realized(r) => report.realized.push((p, *r)),
            PlanOutcome::External { citation } => report.external.push((p, citation)),
            PlanOutcome::Open => report.open.push(p),
        }
    }
    report.realized.sort_by_key(|(p, _)| *p);
    report.external.sort_by_key(|(p, _)| *p);
    report.open.sort();
    Ok(report)
}

/// Byte-stable CSV: a fixture-hash comment, a header, and one sorted row
/// per in-region point.
pub fn to_csv(report: &CoverageReport) -> String {
    let mut rows: Vec<(LatticePoint, &str, String)> = Vec::new();
    for (p, r) in &report.realized {
        rows.push((*p, "realized", r.rule.clone()));
    }
    for (p, c) in &report.external {
        rows.push((*p, "external", c.clone()));
    }
    for p in &report.open {
        rows.push((*p, "open", "-".into()));
    }
    rows.sort_by_key(|(p, _, _)| *p);
    let mut out = format!("# fixture-hash: {}\n", report.fixture_hash);
    out.push_str("m,n,status,recipe_id\n");
    for (p, status, id) in rows {
        let _ = writeln!(out, "{},{},{},{}", p.m, p.n, status, id);
    }
    out
}

/// Static SVG scatter with the two red boundary lines and a legend.
pub fn to_svg(report: &CoverageReport) -> String {
    let b = report.bounds;
    let cell = 32i64;
    let margin = 48i64;
    let width = margin * 2 + (b.m_max - b.m_min + 1) * cell;
    let height = margin * 2 + (b.n_max - b.n_min + 1) * cell + 40;
    let px = |m: i64| margin + (m - b.m_min) * cell + cell / 2;
    let py = |n: i64| height - 40 - margin - (n - b.n_min) * cell - cell / 2;
    // clip a line n = f(m) to the box, sampling the two box edges
    let line_points = |slope_num: i64, slope_den: i64, intercept_num: i64| -> Option<(f64, f64, f64, f64)> {
        // n = (slope_num·m + intercept_num) / slope_den
        let f = |m: f64| (slope_num as f64 * m + intercept_num as f64) / slope_den as f64;
        let (m0, m1) = (b.m_min as f64 - 0.5, b.m_max as f64 + 0.5);
        let (x0, y0) = (m0, f(m0));
        let (x1, y1) = (m1, f(m1));
        Some((x0, y0, x1, y1))
    };
    let to_px = |m: f64| margin as f64 + (m - b.m_min as f64) * cell as f64 + cell as f64 / 2.0;
    let to_py = |n: f64| (height - 40 - margin) as f64 - (n - b.n_min as f64) * cell as f64 - cell as f64 / 2.0;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "<!-- fixture-hash: {} -->", report.fixture_hash);
    let _ = writeln!(svg, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    // axes
    let _ = writeln!(
        svg,
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\" stroke-width=\"1\"/>",
        margin / 2,
        py(b.n_min) + cell / 2,
        width - margin / 2
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\" stroke-width=\"1\"/>",
        px(b.m_min) - cell / 2,
        margin / 2,
        height - 40 - margin / 2
    );
    // the two red boundary lines n = 5m + 4 and n = (m − 4)/5
    for (num, den, intercept) in [(5i64, 1i64, 4i64), (1, 5, -4)] {
        if let Some((x0, y0, x1, y1)) = line_points(num, den, intercept) {
            let _ = writeln!(
                svg,
                "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"red\" stroke-width=\"2\"/>",
                to_px(x0),
                to_py(y0),
                to_px(x1),
                to_py(y1)
            );
        }
    }
    // markers
    let figure = report.figure_markers();
    for (p, _) in &report.external {
        let _ = writeln!(
            svg,
            "<rect x=\"{}\" y=\"{}\" width=\"8\" height=\"8\" fill=\"#999999\"/>",
            px(p.m) - 4,
            py(p.n) - 4
        );
    }
    for (p, _) in &report.realized {
        if !figure.contains(p) {
            let _ = writeln!(svg, "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>", px(p.m), py(p.n));
        }
    }
    for p in &figure {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>",
            px(p.m),
            py(p.n)
        );
    }
    // legend
    let ly = height - 24;
    let _ = writeln!(svg, "<circle cx=\"{}\" cy=\"{ly}\" r=\"5\" fill=\"black\"/>", margin);
    let _ = writeln!(svg, "<text x=\"{}\" y=\"{}\" font-size=\"14\">realized</text>", margin + 12, ly + 5);
    let _ = writeln!(
        svg,
        "<circle cx=\"{}\" cy=\"{ly}\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>",
        margin + 120
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"14\">final fills / open</text>",
        margin + 134,
        ly + 5
    );
    let _ = writeln!(svg, "<rect x=\"{}\" y=\"{}\" width=\"8\" height=\"8\" fill=\"#999999\"/>", margin + 300, ly - 4);
    let _ = writeln!(svg, "<text x=\"{}\" y=\"{}\" font-size=\"14\">cited</text>", margin + 314, ly + 5);
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_box() {
        let report = scan(Bounds { m_min: 30, m_max: 32, n_min: 1, n_max: 2 }).unwrap();
        assert!(report.realized.is_empty() && report.external.is_empty() && report.open.is_empty());
        let csv = to_csv(&report);
        assert!(csv.lines().count() == 2); // hash comment + header
    }

    #[test]
    fn partition_is_exact() {
        let report = scan(Bounds::square(1, 12)).unwrap();
        let mut total = 0;
        for m in 1..=12 {
            for n in 1..=12 {
                let p = LatticePoint::new(m, n);
                if in_region(p) {
                    total += 1;
                    assert!(report.status_of(p).is_some(), "missing ({m},{n})");
                }
            }
        }
        assert_eq!(total, report.realized.len() + report.external.len() + report.open.len());
    }

    #[test]
    fn figure_pattern_in_fifteen_box() {
        let report = scan(Bounds::square(1, 15)).unwrap();
        let markers = report.figure_markers();
        assert_eq!(markers.len(), 31, "markers: {markers:?}");
        let expected_upper = [
            (1, 4),
            (1, 6),
            (1, 8),
            (1, 9),
            (2, 5),
            (2, 7),
            (2, 9),
            (2, 10),
            (3, 12),
            (3, 14),
            (4, 13),
            (4, 15),
        ];
        for (m, n) in expected_upper {
            assert!(markers.contains(&LatticePoint::new(m, n)), "({m},{n}) missing");
            assert!(markers.contains(&LatticePoint::new(n, m)), "mirror ({n},{m}) missing");
        }
        for d in 1..=7 {
            assert!(markers.contains(&LatticePoint::new(d, d)));
        }
    }

    #[test]
    fn csv_and_svg_are_stable() {
        let a = scan(Bounds::square(1, 8)).unwrap();
        let b = scan(Bounds::square(1, 8)).unwrap();
        assert_eq!(to_csv(&a), to_csv(&b));
        assert_eq!(to_svg(&a), to_svg(&b));
        assert!(to_csv(&a).starts_with("# fixture-hash: "));
        assert!(to_svg(&a).contains("stroke=\"red\""));
    }
}
