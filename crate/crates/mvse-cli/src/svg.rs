//! Static SVG 1.1 figures for planar zonotopes, extracted unit balls, and
//! lattice tilings.  Rendering is the one place floating point appears: the
//! figures illustrate exact results, they never feed back into them.

use mvse_lab::rat::{rat_to_f64, Rat};
use mvse_lab::tiling::Lattice;
use mvse_lab::zonotope::Zonotope;
use mvse_lab::Result;

const PAGE: f64 = 480.0;
const MARGIN: f64 = 24.0;

/// Affine world-to-page map with the y axis flipped to mathematical
/// orientation.
struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn around(points: &[(f64, f64)]) -> Frame {
        let min_x = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let max_x = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let max_y = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
        let scale = (PAGE - 2.0 * MARGIN) / span;
        Frame {
            min_x,
            max_y,
            scale,
            width: (max_x - min_x) * scale + 2.0 * MARGIN,
            height: (max_y - min_y) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            (p.0 - self.min_x) * self.scale + MARGIN,
            (self.max_y - p.1) * self.scale + MARGIN,
        )
    }
}

fn to_xy(v: &[Rat]) -> (f64, f64) {
    (rat_to_f64(&v[0]), rat_to_f64(&v[1]))
}

fn polygon_points(frame: &Frame, vertices: &[(f64, f64)]) -> String {
    vertices
        .iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn document(frame: &Frame, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.3} {h:.3}\">\n{body}</svg>\n",
        w = frame.width,
        h = frame.height,
    )
}

/// Outline of a planar zonotope (errors outside dimension 2).
pub fn zonotope_svg(z: &Zonotope) -> Result<String> {
    let vertices: Vec<(f64, f64)> = z.vertices2d()?.iter().map(|v| to_xy(v)).collect();
    Ok(render_polygon(&vertices))
}

/// Outline of an explicit convex polygon given in cyclic vertex order.
pub fn polygon_svg(vertices: &[Vec<Rat>]) -> String {
    let pts: Vec<(f64, f64)> = vertices.iter().map(|v| to_xy(v)).collect();
    render_polygon(&pts)
}

fn render_polygon(vertices: &[(f64, f64)]) -> String {
    let frame = Frame::around(vertices);
    let body = format!(
        "  <polygon points=\"{}\" fill=\"#cfe0f5\" stroke=\"#1f4e8c\" stroke-width=\"2\"/>\n",
        polygon_points(&frame, vertices)
    );
    document(&frame, &body)
}

/// The zonotope at the origin plus the outlines of its lattice translates
/// over the square region of the given radius.
pub fn tiling_svg(z: &Zonotope, lattice: &Lattice, radius: &Rat) -> Result<String> {
    let base: Vec<(f64, f64)> = z.vertices2d()?.iter().map(|v| to_xy(v)).collect();
    let r = rat_to_f64(radius);
    let region = [(-r, -r), (r, -r), (r, r), (-r, r)];
    let frame = Frame::around(&region);

    let basis = lattice.basis();
    let cols: Vec<(f64, f64)> = (0..2)
        .map(|j| (rat_to_f64(&basis[(0, j)]), rat_to_f64(&basis[(1, j)])))
        .collect();
    // Over-estimate of how far an integer coordinate can reach into the
    // region: bound |n_i| through the inverse basis row sums.
    let inv = basis.inverse()?;
    let body_radius = base
        .iter()
        .map(|p| p.0.abs().max(p.1.abs()))
        .fold(0.0, f64::max);
    let mut bounds = [0i64; 2];
    for i in 0..2 {
        let row_sum: f64 = (0..2).map(|j| rat_to_f64(&inv[(i, j)]).abs()).sum();
        bounds[i] = (row_sum * (r + body_radius)).ceil() as i64 + 1;
    }

    let mut body = String::new();
    body.push_str(&format!(
        "  <rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" \
         fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n",
        frame.map((-r, r)).0,
        frame.map((-r, r)).1,
        2.0 * r * frame.scale,
        2.0 * r * frame.scale,
    ));
    for n0 in -bounds[0]..=bounds[0] {
        for n1 in -bounds[1]..=bounds[1] {
            let shift = (
                n0 as f64 * cols[0].0 + n1 as f64 * cols[1].0,
                n0 as f64 * cols[0].1 + n1 as f64 * cols[1].1,
            );
            if shift.0.abs() > r + body_radius || shift.1.abs() > r + body_radius {
                continue;
            }
            let translated: Vec<(f64, f64)> =
                base.iter().map(|p| (p.0 + shift.0, p.1 + shift.1)).collect();
            let (fill, stroke) = if n0 == 0 && n1 == 0 {
                ("#cfe0f5", "#1f4e8c")
            } else {
                ("none", "#5b8ac2")
            };
            body.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"1.5\"/>\n",
                polygon_points(&frame, &translated)
            ));
        }
    }
    Ok(document(&frame, &body))
}
