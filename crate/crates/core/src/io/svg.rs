use crate::drawers::{Dir, VisibilityRepresentation};
use std::fmt::Write;

const UNIT: f64 = 20.0;
const MARGIN: f64 = 20.0;
const THICK: f64 = 0.4;

/// SVG document for a representation. The y-axis points up, bars and pylons are
/// thin rectangles, sights are dashed lines and every bar carries its vertex id.
pub fn render_svg(rep: &VisibilityRepresentation) -> String {
    let [w, h] = rep.bounds;
    let (cw, ch) = (w as f64 * UNIT + 2.0 * MARGIN, h as f64 * UNIT + 2.0 * MARGIN);
    let px = |x: f64| MARGIN + x * UNIT;
    let py = |y: f64| MARGIN + (h as f64 - y) * UNIT;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{cw}" height="{ch}" viewBox="0 0 {cw} {ch}">"#);
    s.push_str(concat!(
        "<style>",
        ".frame{fill:none;stroke:#bbb} .bar{fill:#222} .pylon{fill:#1f5fd6} ",
        ".sight{stroke:#c33;stroke-width:1;stroke-dasharray:4 3} ",
        "text{font:10px sans-serif;text-anchor:middle}",
        "</style>\n"
    ));
    let _ = writeln!(s, r#"<path class="frame" d="M0 0H{cw}V{ch}H0Z"/>"#);
    for sg in &rep.sights {
        let (a, b) = (sg.span[0] as f64, sg.span[1] as f64);
        let at = sg.at as f64;
        let (x1, y1, x2, y2) = match sg.dir {
            Dir::Vertical => (px(at), py(a), px(at), py(b)),
            Dir::Horizontal => (px(a), py(at), px(b), py(at)),
        };
        let _ = writeln!(s, r#"<line class="sight" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let half = THICK / 2.0;
    for p in &rep.polygons {
        let [y, x0, x1] = p.bar.map(|c| c as f64);
        let _ = writeln!(
            s,
            r#"<rect class="bar" x="{}" y="{}" width="{}" height="{}"/>"#,
            px(x0 - half),
            py(y + half),
            (x1 - x0 + THICK) * UNIT,
            THICK * UNIT
        );
        if let Some((x, lo, hi)) = p.pylon_span() {
            let (x, lo, hi) = (x as f64, lo as f64, hi as f64);
            let _ = writeln!(
                s,
                r#"<rect class="pylon" x="{}" y="{}" width="{}" height="{}"/>"#,
                px(x - half),
                py(hi),
                THICK * UNIT,
                (hi - lo) * UNIT
            );
        }
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, px((x0 + x1) / 2.0), py(y + half) - 2.0, p.v);
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawers::{Mode, ShapePolygon};

    #[test]
    fn empty_rep_has_only_the_frame() {
        let rep = VisibilityRepresentation { mode: Mode::Planar, polygons: vec![], sights: vec![], bounds: [0, 0], dropped: vec![] };
        let svg = render_svg(&rep);
        assert!(svg.contains("class=\"frame\""));
        assert_eq!(svg.matches("<rect").count(), 0);
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn pylon_gets_its_own_class() {
        let p = ShapePolygon { v: 0, bar: [0, 0, 4], pylon: Some([2, 0, 3]) };
        let rep = VisibilityRepresentation { mode: Mode::TShape, polygons: vec![p], sights: vec![], bounds: [4, 3], dropped: vec![] };
        let svg = render_svg(&rep);
        assert_eq!(svg.matches("class=\"pylon\"").count(), 1);
        assert_eq!(svg, render_svg(&rep));
    }
}
