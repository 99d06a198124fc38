use proptest::prelude::*;
use speiser_surface::*;

fn in_p() -> impl Strategy<Value = Point> {
    (-20.0..20.0f64, 1.0..50.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn in_cover() -> impl Strategy<Value = CoverPoint> {
    (-10.0..10.0f64, 1.0..30.0f64).prop_map(|(theta, rho)| CoverPoint { theta, rho })
}

proptest! {
    #[test]
    fn hyperbolic_metric_axioms(a in in_p(), b in in_p(), c in in_p()) {
        let d = |p, q| hyperbolic_distance(p, q).unwrap();
        prop_assert!((d(a, b) - d(b, a)).abs() <= 1e-9 * (1.0 + d(a, b)));
        prop_assert!(d(a, c) <= d(a, b) + d(b, c) + 1e-9);
        prop_assert!(d(a, a).abs() < 1e-12);
    }

    #[test]
    fn cover_metric_axioms(a in in_cover(), b in in_cover(), c in in_cover()) {
        let d = |p, q| flat_cover_distance(p, q).unwrap();
        prop_assert!((d(a, b) - d(b, a)).abs() <= 1e-9);
        prop_assert!(d(a, c) <= d(a, b) + d(b, c) + 1e-9);
        // never shorter than the radial gap or the plain Euclidean chord
        prop_assert!(d(a, b) + 1e-12 >= (a.rho - b.rho).abs());
    }

    /// Semi-analytic distance from the basepoint is 1-Lipschitz for the metric
    /// of the flat side measured in the cover.
    #[test]
    fn distance_from_a_is_lipschitz(x1 in -3.0..3.0f64, y1 in -1.0..1.0f64, dx in -0.05..0.05f64, dy in -0.05..0.05f64) {
        let s = SurfaceY::default();
        let p = Point::new(x1, y1);
        let q = Point::new(x1 + dx, (y1 + dy).min(1.0));
        let step = flat_cover_distance(CoverPoint::from_plane(p), CoverPoint::from_plane(q)).unwrap();
        prop_assert!((s.distance_from_a(p) - s.distance_from_a(q)).abs() <= step + 1e-9);
    }
}

#[test]
fn interface_points_use_hyperbolic_arc() {
    let s = SurfaceY::default();
    for x in [0.0, 0.3, 1.0, 4.0, -6.0] {
        let d = s.distance_from_a(Point::new(x, 1.0));
        assert!((d - (1.0 + x * x / 2.0).acosh()).abs() < 1e-12);
        // continuity across the interface
        let below = s.distance_from_a(Point::new(x, 1.0 - 1e-9));
        assert!((below - d).abs() < 1e-6, "x = {x}: {below} vs {d}");
    }
}

#[test]
fn vertical_flat_segment() {
    let s = SurfaceY::default();
    for y in [0.99, 0.5, 0.0, -1.0] {
        let g = s.geodesic_from_a(Point::new(0.0, y));
        assert!((g.distance - ((1.0 - y).exp() - 1.0)).abs() < 1e-12);
        assert_eq!(g.crossing, Some(0.0));
    }
}

#[test]
fn beta_length_closed_form() {
    let s = SurfaceY::default();
    let mut r = 0.5;
    while r <= 16.0 {
        let len = s.beta_r_length(r).unwrap();
        let exact = 4.0 * (r / 2.0).sinh();
        assert!((len / exact - 1.0).abs() < 1e-6, "r = {r}");
        if r >= 1.0 {
            let e = (r / 2.0).exp();
            assert!(0.25 * e <= len && len <= 4.0 * e);
        }
        r += 0.125;
    }
    assert!((s.beta_r_length(2.0).unwrap() - 4.700_805).abs() < 1e-6);
    assert!(s.beta_r_length(1e-6).unwrap() < 1e-5);
}

#[test]
fn metric_is_continuous_on_interface() {
    assert_eq!(density(1.0), 1.0);
    assert!((density(1.0 - 1e-12) - 1.0).abs() < 1e-11);
    assert_eq!(curvature(2.0), -1.0);
    assert_eq!(curvature(0.5), 0.0);
    assert_eq!(BASEPOINT.region(), Region::Hyperbolic);
    assert_eq!(Point::new(0.0, 0.5).region(), Region::Flat);
}

#[test]
fn bounding_box_contains_the_ball() {
    let s = SurfaceY::default();
    for r in [1.0, 3.0, 8.0] {
        let bbox = BoundingBox::for_radius(r);
        // extreme points of the ball
        let top = Point::new(0.0, r.exp());
        let side = Point::new(r.sinh(), r.cosh());
        let bottom = Point::new(0.0, 1.0 - (1.0 + r).ln());
        for p in [top, side, bottom] {
            assert!((s.distance_from_a(p) - r).abs() < 1e-9 * r.exp());
            assert!(bbox.contains(p));
        }
    }
}
