use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use speiser_core::analysis::*;
use speiser_core::gamma::{BuildConfig, Gamma, SchedulePolicy};
use speiser_core::planar::{bfs_distances, combinatorial_ball, fixtures, EmbeddedGraph, VertexId};
use speiser_core::speiser::{excess, mean_excess_series};
use speiser_core::Rational64;

fn build(n: usize, s: usize) -> Gamma {
    BuildConfig {
        n,
        l: 8,
        schedule: SchedulePolicy::Constant(s),
    }
    .build()
    .unwrap()
}

/// Dense LU solve of the grounded Laplacian over the whole ball.
fn dense_resistance(g: &EmbeddedGraph, w0: VertexId, r: u32) -> f64 {
    let dist = bfs_distances(g, w0);
    let inside: Vec<VertexId> = g.vertex_ids().filter(|v| dist[v.index()] <= r).collect();
    let pos = |v: VertexId| inside.iter().position(|&u| u == v);
    let n = inside.len();
    let mut lap = DMatrix::<f64>::zeros(n, n);
    for (i, &v) in inside.iter().enumerate() {
        for u in g.neighbors(v) {
            if u == v {
                continue;
            }
            lap[(i, i)] += 1.0;
            if let Some(j) = pos(u) {
                lap[(i, j)] -= 1.0;
            }
        }
    }
    // impose potential 1 at w0 and 0 on the sphere by row replacement
    let mut rhs = DVector::<f64>::zeros(n);
    for (i, &v) in inside.iter().enumerate() {
        if v == w0 || dist[v.index()] == r {
            lap.row_mut(i).fill(0.0);
            lap[(i, i)] = 1.0;
            rhs[i] = if v == w0 { 1.0 } else { 0.0 };
        }
    }
    let x = lap.lu().solve(&rhs).expect("nonsingular");
    let current: f64 = g
        .neighbors(w0)
        .filter(|&u| u != w0)
        .map(|u| 1.0 - pos(u).map_or(0.0, |j| x[j]))
        .sum();
    1.0 / current
}

#[test]
fn resistance_matches_dense_solve() {
    let g = build(7, 2);
    let trusted = ball_stats(&g.graph, &g.faces, g.basepoint, 20).unwrap().trusted_radius;
    let mut checked = 0;
    for r in 1..=trusted + 1 {
        let dense = dense_resistance(&g.graph, g.basepoint, r);
        let sparse = effective_resistance(&g.graph, g.basepoint, r).unwrap();
        assert!(
            ((sparse.resistance - dense) / dense).abs() < 1e-8,
            "r = {r}: {} vs {dense}",
            sparse.resistance
        );
        checked += 1;
    }
    assert!(checked >= 4);
    let grid = fixtures::grid(21, 21);
    let c = fixtures::grid_vertex(21, 10, 10);
    for r in [1, 4, 9] {
        let dense = dense_resistance(&grid, c, r);
        let sparse = effective_resistance(&grid, c, r).unwrap().resistance;
        assert!(((sparse - dense) / dense).abs() < 1e-8);
    }
}

#[test]
fn ball_stats_match_recount() {
    let g = build(9, 3);
    let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 12).unwrap();
    for row in &stats.rows {
        let ball = combinatorial_ball(&g.graph, g.basepoint, row.r);
        assert_eq!(ball.len() as u64, row.n_vertices);
        assert_eq!(row.n_plus + row.n_minus + row.n_zero + row.n_untrusted, row.n_vertices);
        if row.clipped {
            assert!(row.total_excess.is_none());
            continue;
        }
        let (mut plus, mut minus, mut total) = (0, 0, Rational64::zero());
        for &(v, _) in &ball.members {
            let e = excess(&g.graph, &g.faces, v).unwrap();
            plus += u64::from(e.is_positive());
            minus += u64::from(e.is_negative());
            total += e.value();
        }
        assert_eq!((plus, minus), (row.n_plus, row.n_minus), "r = {}", row.r);
        assert_eq!(Some(total), row.total_excess);
    }
    assert_eq!(stats.rows[0].n_minus, 1);
    assert_eq!(stats.rows[0].total_excess, Some(Rational64::new(-1, 3)));
}

#[test]
fn stats_agree_with_mean_series() {
    let g = build(8, 2);
    let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 10).unwrap();
    let series = mean_excess_series(&g.graph, &g.faces, g.basepoint, 10, None).unwrap();
    assert_eq!(series.trusted_radius, stats.trusted_radius);
    for (row, entry) in stats.rows.iter().zip(&series.entries) {
        assert_eq!(row.mean_excess, entry.mean_excess);
        assert_eq!(row.n_vertices, entry.n_vertices);
    }
}

#[test]
fn counts_are_monotone_and_sigma_bound_holds() {
    for s in 1..=4 {
        let g = build(10, s);
        let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 12).unwrap();
        for w in stats.rows.windows(2) {
            assert!(w[1].n_vertices >= w[0].n_vertices);
            assert!(w[1].n_minus >= w[0].n_minus || w[1].clipped);
        }
        assert!(stats.sigma_counting_violations(s as u32).is_empty());
        assert!(stats.mean_always_negative());
    }
}

#[test]
fn growth_of_negative_vertices() {
    let g = build(12, 2);
    let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 14).unwrap();
    let fit = growth_fit(&stats, TAIL_START).unwrap();
    assert!(fit.a > 1.05 && fit.quality >= 0.98, "{fit:?}");
    fit.check(1.05, 0.98).unwrap();
    for (r, n) in stats.negative_counts().into_iter().filter(|p| p.0 >= TAIL_START) {
        let scale = fit.a.powi(r as i32);
        assert!(fit.c * scale <= n as f64 * (1.0 + 1e-12) && n as f64 <= scale / fit.c * (1.0 + 1e-12));
    }
}

#[test]
fn grid_control_is_not_exponential() {
    let size = 603;
    let grid = fixtures::grid(size, size);
    let c = fixtures::grid_vertex(size, size / 2, size / 2);
    let dist = bfs_distances(&grid, c);
    let mut counts = vec![0u64; 302];
    for &d in &dist {
        if (d as usize) < counts.len() {
            counts[d as usize] += 1;
        }
    }
    let mut acc = 0;
    let balls: Vec<(u32, u64)> = counts
        .iter()
        .enumerate()
        .map(|(r, &n)| {
            acc += n;
            (r as u32, acc)
        })
        .collect();
    let fit = fit_counts(&balls[150..=300]).unwrap();
    assert!(fit.a <= 1.01, "{fit:?}");
    assert!(fit.check(1.05, 0.98).is_err());
}

#[test]
fn nash_williams_cutsets() {
    let g = build(8, 2);
    let nw = nash_williams(&g).unwrap();
    assert_eq!(nw.sizes.len(), 7);
    assert!(nw.constant_size);
    assert!(nw.separates.iter().all(|&s| s));
    for (m, sum) in nw.partial_sums.iter().enumerate() {
        assert!((sum - (m + 1) as f64 / nw.sizes[0] as f64).abs() < 1e-12);
    }
    assert!(nw.inner_reach.windows(2).all(|w| w[0] < w[1]));
    let trusted = ball_stats(&g.graph, &g.faces, g.basepoint, 20).unwrap().trusted_radius;
    for solve in resistance_series(&g.graph, g.basepoint, trusted + 1).unwrap() {
        assert!(solve.resistance >= nw.partial_sum_within(solve.r));
    }
}

#[test]
fn resistance_grows_on_gamma() {
    let g = build(11, 2);
    let trusted = ball_stats(&g.graph, &g.faces, g.basepoint, 20).unwrap().trusted_radius;
    let series = resistance_series(&g.graph, g.basepoint, trusted + 1).unwrap();
    let trend = resistance_trend(&series).unwrap();
    assert!(trend.strictly_increasing && trend.sustained, "{trend:?}");
}

#[test]
fn return_frequency_grows_with_horizon() {
    let g = build(10, 2);
    let trusted = ball_stats(&g.graph, &g.faces, g.basepoint, 20).unwrap().trusted_radius;
    let dist = bfs_distances(&g.graph, g.basepoint);
    let admissible: Vec<bool> = dist.iter().map(|&d| d <= trusted).collect();
    let mut prev: Option<ReturnEstimate> = None;
    for horizon in [8, 32, 128] {
        let est = random_walk_return(&g.graph, g.basepoint, horizon, 3000, DEFAULT_SEED, Some(&admissible)).unwrap();
        if let Some(p) = prev {
            assert!(est.frequency + est.confidence_radius >= p.frequency - p.confidence_radius);
        }
        prev = Some(est);
    }
}

#[test]
fn choose_s_finds_negative_totals() {
    let tree = speiser_core::tree::build_pruned_tree(11).unwrap();
    let choice = choose_s(&tree, 8, 1..=4, 0.0).unwrap();
    assert!(choice.s <= 4 && choice.epsilon > 0.0);
    assert!(choice.margin_monotone, "{:?}", choice.sweep);
    assert_eq!(
        choose_s(&tree, 8, std::ops::RangeInclusive::new(3, 2), 0.0).unwrap_err(),
        speiser_core::AnalysisError::EmptyRange
    );
    assert!(matches!(
        choose_s(&tree, 8, 1..=2, 100.0),
        Err(speiser_core::AnalysisError::NoAdmissibleS { .. })
    ));
}

#[test]
fn banded_schedule_builds_and_stays_negative() {
    let g = BuildConfig {
        n: 10,
        l: 8,
        schedule: SchedulePolicy::Banded(1, 3),
    }
    .build()
    .unwrap();
    assert!(speiser_core::gamma::contract_report(&g).passed());
    let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 12).unwrap();
    assert!(stats.mean_always_negative());
    assert!(stats.mean_tail_spread(3).unwrap() >= 0.0);
}

#[test]
fn zero_vertices_bounded_by_negatives() {
    for s in [1, 3, 5] {
        let g = build(10, s);
        let stats = ball_stats(&g.graph, &g.faces, g.basepoint, 12).unwrap();
        assert!(
            stats.zero_ratio_max() <= 1.0 + s as f64,
            "s = {s}: {}",
            stats.zero_ratio_max()
        );
    }
}
