use proptest::prelude::*;

use batswarm::ba::{
    apply_bounds, local_search_step, pulse_rate_at, sample_frequency, update_position,
    update_velocity, AttractionSign, BoundMode,
};
use batswarm::harness::{read_summary_json, read_trace_csv, write_summary_json, write_trace_csv, RunSummary};
use batswarm::variants::{pareto_filter, scalarize, transfer_probability, ScalarizationWeights};
use batswarm::{BaConfig, RunTrace, TraceRecord, Variant};

fn vectors(d: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(-1e3..1e3f64, d),
        prop::collection::vec(-1e3..1e3f64, d),
        prop::collection::vec(-1e3..1e3f64, d),
    )
}

fn dominated(p: &[f64], all: &[Vec<f64>]) -> bool {
    all.iter()
        .any(|q| q.iter().zip(p).all(|(a, b)| a <= b) && q.iter().zip(p).any(|(a, b)| a < b))
}

fn weights(m: usize) -> impl Strategy<Value = ScalarizationWeights> {
    prop::collection::vec(0.0..1.0f64, m).prop_filter_map("non-zero", move |raw| {
        let sum: f64 = raw.iter().sum();
        if sum <= 1e-9 {
            return None;
        }
        let mut w: Vec<f64> = raw.iter().map(|v| v / sum).collect();
        let head: f64 = w[..m - 1].iter().sum();
        w[m - 1] = (1.0 - head).max(0.0);
        ScalarizationWeights::new(w).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn frequency_in_range(beta in 0.0..=1.0f64, lo in -10.0..10.0f64, width in 0.0..10.0f64) {
        let f = sample_frequency(beta, lo, lo + width).unwrap();
        prop_assert!(f >= lo && f <= lo + width);
    }

    #[test]
    fn velocity_and_position_match_transcription((v, x, b) in (1usize..16).prop_flat_map(vectors), f in 0.0..2.0f64) {
        let got = update_velocity(&v, &x, &b, f, AttractionSign::Classic).unwrap();
        for j in 0..v.len() {
            prop_assert_eq!(got[j].to_bits(), (v[j] + (x[j] - b[j]) * f).to_bits());
        }
        let rev = update_velocity(&v, &x, &b, f, AttractionSign::Reversed).unwrap();
        for j in 0..v.len() {
            prop_assert_eq!(rev[j].to_bits(), (v[j] + (b[j] - x[j]) * f).to_bits());
        }
        let pos = update_position(&x, &v).unwrap();
        for j in 0..v.len() {
            prop_assert_eq!(pos[j].to_bits(), (x[j] + v[j]).to_bits());
        }
    }

    #[test]
    fn pulse_rate_monotone_and_converging(r0 in 0.0..=1.0f64, gamma in 0.01..3.0f64, t in 0u64..2000) {
        let now = pulse_rate_at(r0, gamma, t).unwrap();
        let next = pulse_rate_at(r0, gamma, t + 1).unwrap();
        prop_assert!(next >= now);
        prop_assert!(now >= 0.0 && now <= r0);
        prop_assert!((now - r0).abs() < r0 * (-gamma * t as f64).exp() + 1e-12);
    }

    #[test]
    fn bounds_always_feasible(x in prop::collection::vec(-1e6..1e6f64, 1..8), reflect in any::<bool>()) {
        let d = x.len();
        let lo = vec![-2.5; d];
        let hi = vec![4.0; d];
        let mode = if reflect { BoundMode::Reflect } else { BoundMode::Clamp };
        let y = apply_bounds(&x, &lo, &hi, mode);
        for j in 0..d {
            prop_assert!(y[j] >= lo[j] && y[j] <= hi[j]);
            if x[j] >= lo[j] && x[j] <= hi[j] {
                prop_assert_eq!(y[j], x[j]);
            }
        }
    }

    #[test]
    fn local_step_scales_with_loudness(best in prop::collection::vec(-5.0..5.0f64, 1..8), a in 0.0..2.0f64, e in -1.0..=1.0f64) {
        let eps = vec![e; best.len()];
        let x = local_search_step(&best, a, &eps).unwrap();
        for j in 0..best.len() {
            prop_assert!((x[j] - best[j]).abs() <= a * 1.0 + 1e-12);
        }
    }

    #[test]
    fn scalarize_within_objective_range(objs in prop::collection::vec(-1e3..1e3f64, 3), w in weights(3)) {
        let s = scalarize(&objs, &w).unwrap();
        let lo = objs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = objs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(s >= lo - 1e-9 && s <= hi + 1e-9);
    }

    #[test]
    fn pareto_matches_brute_force(
        points in (1usize..=4).prop_flat_map(|m| prop::collection::vec(prop::collection::vec(0u8..6, m), 1..=50))
    ) {
        let pts: Vec<Vec<f64>> = points.iter().map(|p| p.iter().map(|&v| v as f64).collect()).collect();
        let expected: Vec<Vec<f64>> = pts.iter().filter(|p| !dominated(p, &pts)).cloned().collect();
        let got = pareto_filter(&pts);
        prop_assert_eq!(&got, &expected);
        for p in &got {
            prop_assert!(pts.contains(p));
        }
    }

    #[test]
    fn trace_csv_round_trip(rows in prop::collection::vec((any::<f64>(), 0.0..1.0f64, 0.0..1.0f64, 0u64..1_000_000), 0..40)) {
        let trace = RunTrace {
            records: rows
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.0.is_nan())
                .map(|(i, r)| TraceRecord {
                    iteration: i as u64,
                    best_fitness: r.0,
                    mean_loudness: r.1,
                    mean_pulse_rate: r.2,
                    evaluations_so_far: r.3,
                })
                .collect(),
        };
        let mut buf = Vec::new();
        write_trace_csv(&trace, &mut buf).unwrap();
        prop_assert_eq!(read_trace_csv(buf.as_slice()).unwrap(), trace);
    }

    #[test]
    fn summary_json_round_trip(finals in prop::collection::vec(-1e6..1e6f64, 1..30), seed in any::<u64>(), threshold in -1e6..1e6f64) {
        let summary = RunSummary::from_values(&finals, Some(threshold)).unwrap();
        prop_assert!(summary.best <= summary.mean && summary.mean <= summary.worst);
        let config = BaConfig { seed, variant: Variant::chaotic_default(), ..BaConfig::default() };
        let mut buf = Vec::new();
        write_summary_json(&summary, &config, &mut buf).unwrap();
        let doc = read_summary_json(buf.as_slice()).unwrap();
        prop_assert_eq!(doc.summary, summary);
        prop_assert_eq!(doc.config, config);
    }
}

#[test]
fn transfer_is_strictly_monotone() {
    let mut rng = batswarm::RandomStream::from_seed(10);
    for _ in 0..10_000 {
        let a = rng.uniform_in(-10.0, 10.0);
        let b = rng.uniform_in(-10.0, 10.0);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo < hi {
            assert!(transfer_probability(lo) < transfer_probability(hi), "{lo} {hi}");
        }
    }
}

#[test]
fn frequency_range_over_many_draws() {
    let mut rng = batswarm::RandomStream::from_seed(11);
    for _ in 0..100_000 {
        let f = sample_frequency(rng.uniform(), 0.0, 2.0).unwrap();
        assert!((0.0..=2.0).contains(&f));
    }
}
