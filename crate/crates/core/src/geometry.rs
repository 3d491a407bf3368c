//! Planar convex geometry over ℝ² ≅ ℂ: hulls, membership, distances.
//!
//! All computations are in binary64; collinearity uses a cross-product
//! tolerance of `1e-12·scale`. Inputs already carry eigensolver noise, so
//! exact arithmetic would buy nothing here.

use num_complex::Complex64;

use crate::error::Error;

const COLLINEAR_TOL: f64 = 1e-12;

/// A convex polygon with counterclockwise vertices, starting from the
/// lexicographically smallest one. Degenerates to a segment (2 vertices)
/// or a single point (1 vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct HullPolygon {
    pub vertices: Vec<Complex64>,
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn lex_less(a: Complex64, b: Complex64) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap())
}

/// Monotone-chain convex hull.
pub fn convex_hull(points: &[Complex64]) -> Result<HullPolygon, Error> {
    if points.is_empty() {
        return Err(Error::EmptyInput("convex_hull"));
    }
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| lex_less(*a, *b));
    pts.dedup_by(|a, b| a.re == b.re && a.im == b.im);

    let scale = {
        let first = pts[0];
        let last = pts[pts.len() - 1];
        let spread = pts
            .iter()
            .map(|p| (p - first).norm())
            .fold((last - first).norm(), f64::max);
        1.0 + spread
    };
    let tol = COLLINEAR_TOL * scale * scale;

    if pts.len() == 1 {
        return Ok(HullPolygon { vertices: pts });
    }

    let mut build = |iter: &mut dyn Iterator<Item = Complex64>| -> Vec<Complex64> {
        let mut chain: Vec<Complex64> = Vec::new();
        for p in iter {
            while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= tol
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };

    let lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());

    let mut vertices = lower;
    vertices.pop();
    upper.pop();
    vertices.extend(upper);

    if vertices.len() < 2 {
        // all points collinear: keep the two extremes
        let a = pts[0];
        let b = pts[pts.len() - 1];
        if (a - b).norm() == 0.0 {
            return Ok(HullPolygon { vertices: vec![a] });
        }
        return Ok(HullPolygon { vertices: vec![a, b] });
    }
    Ok(HullPolygon { vertices })
}

fn dist_point_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p.re - a.re) * ab.re + (p.im - a.im) * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Signed distance to the hull: negative inside, positive outside,
/// zero on the boundary.
pub fn signed_distance(h: &HullPolygon, p: Complex64) -> f64 {
    match h.vertices.len() {
        0 => f64::INFINITY,
        1 => (p - h.vertices[0]).norm(),
        2 => dist_point_segment(p, h.vertices[0], h.vertices[1]),
        n => {
            let mut min_side = f64::INFINITY;
            for i in 0..n {
                let a = h.vertices[i];
                let b = h.vertices[(i + 1) % n];
                let len = (b - a).norm();
                let side = cross(a, b, p) / len;
                min_side = min_side.min(side);
            }
            if min_side >= 0.0 {
                -min_side
            } else {
                (0..n)
                    .map(|i| dist_point_segment(p, h.vertices[i], h.vertices[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Membership with slack, handling degenerate hulls.
pub fn contains(h: &HullPolygon, p: Complex64, slack: f64) -> bool {
    signed_distance(h, p) <= slack
}

/// Symmetric Hausdorff distance between finite point sets.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> Result<f64, Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("hausdorff"));
    }
    let directed = |xs: &[Complex64], ys: &[Complex64]| {
        xs.iter()
            .map(|x| ys.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0f64, f64::max)
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Hausdorff distance between two convex hulls as sets. For convex
/// polygons the supremum is attained at a vertex, so vertex-to-set
/// distances suffice.
pub fn hausdorff_hulls(a: &HullPolygon, b: &HullPolygon) -> f64 {
    let directed = |from: &HullPolygon, to: &HullPolygon| {
        from.vertices
            .iter()
            .map(|v| signed_distance(to, *v).max(0.0))
            .fold(0.0f64, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Reflection across the real axis.
pub fn reflect_conj(h: &HullPolygon) -> HullPolygon {
    let pts: Vec<Complex64> = h.vertices.iter().map(|v| v.conj()).collect();
    convex_hull(&pts).expect("reflection of a nonempty hull")
}

/// Vertices of the intersection with the closed upper half-plane,
/// including the crossings of edges with the real axis.
pub fn clip_upper(h: &HullPolygon) -> Vec<Complex64> {
    let crossing = |a: Complex64, b: Complex64| -> Complex64 {
        let t = a.im / (a.im - b.im);
        Complex64::new(a.re + t * (b.re - a.re), 0.0)
    };
    match h.vertices.len() {
        0 => Vec::new(),
        1 => {
            if h.vertices[0].im >= 0.0 {
                h.vertices.clone()
            } else {
                Vec::new()
            }
        }
        2 => {
            let (a, b) = (h.vertices[0], h.vertices[1]);
            let mut out = Vec::new();
            if a.im >= 0.0 {
                out.push(a);
            }
            if (a.im >= 0.0) != (b.im >= 0.0) {
                out.push(crossing(a, b));
            }
            if b.im >= 0.0 {
                out.push(b);
            }
            out
        }
        n => {
            let mut out = Vec::new();
            for i in 0..n {
                let a = h.vertices[i];
                let b = h.vertices[(i + 1) % n];
                if a.im >= 0.0 {
                    out.push(a);
                    if b.im < 0.0 {
                        out.push(crossing(a, b));
                    }
                } else if b.im >= 0.0 {
                    out.push(crossing(a, b));
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hull_of_single_point() {
        let h = convex_hull(&[c(0.0, 0.0)]).unwrap();
        assert_eq!(h.vertices, vec![c(0.0, 0.0)]);
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.1, 0.1)]).unwrap();
        assert_eq!(h.vertices.len(), 3);
        assert_eq!(h.vertices[0], c(0.0, 0.0));
        // counterclockwise from the lexicographically smallest vertex
        assert_eq!(h.vertices[1], c(1.0, 0.0));
        assert_eq!(h.vertices[2], c(0.0, 1.0));
    }

    #[test]
    fn hull_idempotent() {
        let pts = vec![c(0.0, 0.0), c(2.0, 0.5), c(1.0, 2.0), c(-1.0, 1.0), c(0.5, 0.5)];
        let h1 = convex_hull(&pts).unwrap();
        let h2 = convex_hull(&h1.vertices).unwrap();
        assert_eq!(h1, h2);
    }

    #[test]
    fn collinear_points_become_segment() {
        let h = convex_hull(&[c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0)]).unwrap();
        assert_eq!(h.vertices, vec![c(0.0, 0.0), c(2.0, 2.0)]);
    }

    #[test]
    fn contains_cases() {
        let tri = convex_hull(&[c(0.0, 0.0), c(2.0, 0.0), c(1.0, 2.0)]).unwrap();
        assert!(contains(&tri, c(1.0, 0.5), 0.0));
        assert!(contains(&tri, c(0.0, 0.0), 0.0));
        assert!(!contains(&tri, c(1.0, 2.0 + 2e-6), 1e-6));
        // segment membership is distance to the segment
        let seg = convex_hull(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(contains(&seg, c(0.5, 1e-13), 1e-12));
        assert!(!contains(&seg, c(0.5, 1.0), 0.5));
    }

    #[test]
    fn hausdorff_cases() {
        let s = vec![c(0.0, 0.0), c(1.0, 1.0)];
        assert_eq!(hausdorff(&s, &s).unwrap(), 0.0);
        assert_relative_eq!(hausdorff(&[c(0.0, 0.0)], &[c(3.0, 0.0)]).unwrap(), 3.0);
        let t: Vec<Complex64> = s.iter().map(|p| p + c(0.0, 2.0)).collect();
        assert_relative_eq!(hausdorff(&s, &t).unwrap(), 2.0);
        assert!(hausdorff(&[], &s).is_err());
    }

    #[test]
    fn reflect_cases() {
        let seg = convex_hull(&[c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        let r = reflect_conj(&seg);
        assert_eq!(r.vertices, vec![c(0.0, -1.0), c(1.0, 0.0)]);
        assert_eq!(reflect_conj(&r), seg);
        let real = convex_hull(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(reflect_conj(&real), real);
    }

    #[test]
    fn clip_upper_cases() {
        let tri = convex_hull(&[c(0.0, -1.0), c(2.0, -1.0), c(1.0, 1.0)]).unwrap();
        let pts = clip_upper(&tri);
        let h = convex_hull(&pts).unwrap();
        // a triangle with apex at (1,1) clipped at the axis
        assert!(contains(&h, c(1.0, 1.0), 1e-12));
        assert!(contains(&h, c(0.5, 0.0), 1e-12));
        assert!(!contains(&h, c(1.0, -0.5), 0.1));
        let below = convex_hull(&[c(0.0, -2.0), c(1.0, -1.0)]).unwrap();
        assert!(clip_upper(&below).is_empty());
    }

    fn arb_points() -> impl Strategy<Value = Vec<Complex64>> {
        proptest::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 1..40)
            .prop_map(|v| v.into_iter().map(|(x, y)| c(x, y)).collect())
    }

    proptest! {
        #[test]
        fn hull_contains_inputs(pts in arb_points()) {
            let h = convex_hull(&pts).unwrap();
            for p in &pts {
                prop_assert!(contains(&h, *p, 1e-9), "point {p} escaped its hull");
            }
        }

        #[test]
        fn hausdorff_triangle_inequality(a in arb_points(), b in arb_points(), m in arb_points()) {
            let dab = hausdorff(&a, &b).unwrap();
            let dam = hausdorff(&a, &m).unwrap();
            let dmb = hausdorff(&m, &b).unwrap();
            prop_assert!(dab <= dam + dmb + 1e-12);
        }
    }
}
