use elastic_core::geometry::{
    line_ball_intersection, line_capped_cylinder_intersection, line_double_stadium_intersects,
    line_stadium_intersection, point_in_ball, point_in_capped_cylinder, point_segment_within,
    segment_segment_intersection, SegmentIntersection,
};
use elastic_core::{Point, Radius, Segment, Tolerance};
use elastic_testkit::geom::{dist, dist_to_segment, lerp};
use proptest::prelude::*;

fn r(x: f64) -> Radius {
    Radius::new(x).unwrap()
}

fn coord() -> impl Strategy<Value = f64> {
    -5.0..5.0f64
}

fn seg() -> impl Strategy<Value = Segment> {
    (coord(), coord(), coord(), coord()).prop_map(|(a, b, c, d)| Segment::xy(a, b, c, d))
}

fn carrier() -> impl Strategy<Value = Segment> {
    seg().prop_filter("non-degenerate", |s| s.length() > 1e-3)
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::xy(x, y))
}

/// Sampled membership along the carrier's line.
fn on_line(carrier: &Segment, t: f64) -> Vec<f64> {
    lerp(carrier.a.coords(), carrier.b.coords(), t)
}

fn in_capped_cylinder(x: &[f64], u: &[f64], v: &[f64], delta: f64) -> bool {
    let w = [v[0] - u[0], v[1] - u[1]];
    let s = ((x[0] - u[0]) * w[0] + (x[1] - u[1]) * w[1]) / (w[0] * w[0] + w[1] * w[1]);
    if !(0.0..=1.0).contains(&s) {
        return false;
    }
    dist(x, &[u[0] + s * w[0], u[1] + s * w[1]]) <= delta
}

#[test]
fn capped_cylinder_matches_dense_sampling() {
    let tol = Tolerance::default();
    let carrier = Segment::xy(-1.0, -1.0, 2.0, 2.0);
    let axis = Segment::xy(0.0, 0.0, 1.0, 0.0);
    let iv = line_capped_cylinder_intersection(&carrier, &axis, r(0.5), &tol)
        .unwrap()
        .unwrap();
    let n = 100_000;
    let (lo, hi) = (-1.0, 2.0);
    let inside: Vec<f64> = (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .filter(|&t| in_capped_cylinder(&on_line(&carrier, t), axis.a.coords(), axis.b.coords(), 0.5))
        .collect();
    let step = (hi - lo) / n as f64;
    assert!(
        (inside[0] - iv.lo()).abs() <= step + 1e-6,
        "{} vs {}",
        inside[0],
        iv.lo()
    );
    assert!((inside[inside.len() - 1] - iv.hi()).abs() <= step + 1e-6);
}

/// Bisection on sampled stadium membership between an inside and an
/// outside parameter.
fn boundary_by_bisection(carrier: &Segment, e: &Segment, delta: f64, mut inside: f64, mut outside: f64) -> f64 {
    for _ in 0..100 {
        let mid = 0.5 * (inside + outside);
        if dist_to_segment(&on_line(carrier, mid), e.a.coords(), e.b.coords()) <= delta {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    0.5 * (inside + outside)
}

type Case<'a> = (Option<elastic_core::ParamInterval>, &'a dyn Fn(f64) -> bool);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn stadium_interval_endpoints_match_bisection(c in carrier(), e in seg(), delta in 0.05..3.0f64) {
        let tol = Tolerance::default();
        if let Some(iv) = line_stadium_intersection(&c, &e, r(delta), &tol).unwrap() {
            let mid = 0.5 * (iv.lo() + iv.hi());
            let d_mid = dist_to_segment(&on_line(&c, mid), e.a.coords(), e.b.coords());
            // Skip near-tangent instances where the interval is a sliver.
            prop_assume!(d_mid < delta - 1e-6);
            let far = 1e3 + iv.hi() - iv.lo();
            let lo = boundary_by_bisection(&c, &e, delta, mid, iv.lo() - far);
            let hi = boundary_by_bisection(&c, &e, delta, mid, iv.hi() + far);
            prop_assert!((lo - iv.lo()).abs() < 1e-6, "lo {} vs {}", lo, iv.lo());
            prop_assert!((hi - iv.hi()).abs() < 1e-6, "hi {} vs {}", hi, iv.hi());
        }
    }

    #[test]
    fn stadium_decomposition(v in point(), e in seg(), delta in 0.0..3.0f64) {
        let tol = Tolerance::default();
        let combined = point_segment_within(&v, &e, r(delta), &tol).unwrap();
        let parts = point_in_ball(&v, &e.a, r(delta), &tol).unwrap()
            || point_in_ball(&v, &e.b, r(delta), &tol).unwrap()
            || point_in_capped_cylinder(&v, &e, r(delta), &tol).unwrap();
        prop_assert_eq!(combined, parts);
    }

    #[test]
    fn interval_soundness(c in carrier(), e in seg().prop_filter("axis", |s| s.length() > 1e-3), center in point(), delta in 0.05..3.0f64) {
        let tol = Tolerance::default();
        let eps = 1e-7;
        let stadium = |t: f64| dist_to_segment(&on_line(&c, t), e.a.coords(), e.b.coords()) <= delta;
        let ball = |t: f64| dist(&on_line(&c, t), center.coords()) <= delta;
        let capcyl = |t: f64| in_capped_cylinder(&on_line(&c, t), e.a.coords(), e.b.coords(), delta);
        let cases: [Case; 3] = [
            (line_stadium_intersection(&c, &e, r(delta), &tol).unwrap(), &stadium),
            (line_ball_intersection(&c, &center, r(delta), &tol).unwrap(), &ball),
            (line_capped_cylinder_intersection(&c, &e, r(delta), &tol).unwrap(), &capcyl),
        ];
        for (iv, member) in cases {
            if let Some(iv) = iv {
                let scale = 1.0 / c.length();
                if iv.hi() - iv.lo() > 100.0 * eps * scale {
                    prop_assert!(member(iv.lo() + eps * scale));
                    prop_assert!(member(0.5 * (iv.lo() + iv.hi())));
                    prop_assert!(member(iv.hi() - eps * scale));
                    prop_assert!(!member(iv.lo() - 10.0 * eps * scale));
                    prop_assert!(!member(iv.hi() + 10.0 * eps * scale));
                }
            }
        }
    }

    #[test]
    fn intervals_grow_with_delta(c in carrier(), e in seg(), d1 in 0.0..2.0f64, extra in 0.0..2.0f64) {
        let tol = Tolerance::default();
        let d2 = d1 + extra;
        let small = line_stadium_intersection(&c, &e, r(d1), &tol).unwrap();
        let large = line_stadium_intersection(&c, &e, r(d2), &tol).unwrap();
        if let Some(s) = small {
            let l = large.expect("larger radius keeps the intersection");
            prop_assert!(s.is_subset_of(&l, &tol));
        }
        if !e.is_degenerate() {
            let small = line_capped_cylinder_intersection(&c, &e, r(d1), &tol).unwrap();
            let large = line_capped_cylinder_intersection(&c, &e, r(d2), &tol).unwrap();
            if let Some(s) = small {
                prop_assert!(s.is_subset_of(&large.unwrap(), &tol));
            }
        }
    }

    #[test]
    fn degenerate_stadium_is_a_ball(c in carrier(), center in point(), delta in 0.0..3.0f64) {
        let tol = Tolerance::default();
        let e = Segment::new(center.clone(), center.clone()).unwrap();
        prop_assert_eq!(
            line_stadium_intersection(&c, &e, r(delta), &tol).unwrap(),
            line_ball_intersection(&c, &center, r(delta), &tol).unwrap()
        );
    }

    #[test]
    fn segment_intersection_is_symmetric(e1 in seg(), e2 in seg()) {
        let tol = Tolerance::default();
        let a = segment_segment_intersection(&e1, &e2, &tol).unwrap();
        let b = segment_segment_intersection(&e2, &e1, &tol).unwrap();
        match (a, b) {
            (SegmentIntersection::None, SegmentIntersection::None) => {}
            (SegmentIntersection::Point { point: p, .. }, SegmentIntersection::Point { point: q, .. }) => {
                prop_assert!(p.distance(&q) < 1e-6, "{:?} vs {:?}", p, q);
            }
            (
                SegmentIntersection::Overlap { start: s1, end: t1, .. },
                SegmentIntersection::Overlap { start: s2, end: t2, .. },
            ) => {
                let same = (s1 == s2 && t1 == t2) || (s1 == t2 && t1 == s2);
                prop_assert!(same);
            }
            (a, b) => prop_assert!(false, "kinds differ: {:?} vs {:?}", a, b),
        }
    }
}

#[test]
fn double_stadium_matches_parameter_sweep() {
    let tol = Tolerance::default();
    let mut rng = elastic_testkit::gen::rng(11);
    let mut checked = 0;
    for _ in 0..100 {
        let (a, b) = elastic_testkit::gen::segment(&mut rng);
        let c = Segment::xy(a[0], a[1], b[0], b[1]);
        let (u1, v1) = elastic_testkit::gen::segment(&mut rng);
        let (u2, v2) = elastic_testkit::gen::segment(&mut rng);
        let e1 = Segment::xy(u1[0], u1[1], v1[0], v1[1]);
        let e2 = Segment::xy(u2[0], u2[1], v2[0], v2[1]);
        let delta = 0.05 + 0.3 * (checked % 5) as f64 / 5.0;
        let got = line_double_stadium_intersects(&c, &e1, &e2, r(delta), &tol).unwrap();

        // Sweep a long stretch of the carrier line; both stadiums lie within
        // the unit square grown by delta.
        let n = 200_000;
        let span = 4.0 / c.length();
        let mut best = f64::INFINITY;
        for i in 0..=n {
            let t = -span + 2.0 * span * i as f64 / n as f64;
            let x = on_line(&c, t);
            let worst = dist_to_segment(&x, e1.a.coords(), e1.b.coords()).max(dist_to_segment(
                &x,
                e2.a.coords(),
                e2.b.coords(),
            ));
            best = best.min(worst);
        }
        if (best - delta).abs() < 1e-4 {
            continue;
        }
        assert_eq!(
            got,
            best <= delta,
            "instance {checked}: sweep min {best}, delta {delta}"
        );
        checked += 1;
    }
    assert!(checked >= 90);
}
