use super::*;
use crate::generate::{gen_random, FrameShape, GenParams};
use crate::model::{ClusteredGraph, Side};
use crate::oracle::{oracle_fixed, test_assignment, DEFAULT_BUDGET};

fn agree(shape: FrameShape, seeds: std::ops::Range<u64>) {
    let mut planar = 0;
    let mut total = 0;
    for seed in seeds {
        let clusters = 3 + (seed % 6) as usize;
        let k = 2 + (seed % 2) as usize;
        let mut p = GenParams::new(clusters, k, shape);
        p.max_nontrivial = 8;
        p.nontrivial_prob = 0.7;
        let g = gen_random(&p, seed);
        let got = test_partial_2_tree(&g).unwrap();
        let want = oracle_fixed(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(got.planar(), want.planar(), "seed {seed}: {g:?}");
        if let Some(pi) = &got.pi {
            assert!(test_assignment(&g, pi).is_some(), "seed {seed}: witness rejected");
            planar += 1;
        }
        total += 1;
    }
    // Both outcomes must actually occur for the comparison to mean anything.
    assert!(planar > 0 && planar < total, "{planar} of {total} planar");
}

#[test]
fn agrees_with_oracle_on_series_parallel_frames() {
    agree(FrameShape::Sp, 0..300);
}

#[test]
fn agrees_with_oracle_on_partial_2_trees() {
    agree(FrameShape::Partial2Tree, 1000..1300);
}

#[test]
fn single_edge_is_always_planar() {
    let g = ClusteredGraph::builder()
        .cluster("A", &["a0", "a1"])
        .point("x")
        .edge_at("a0", Side::Bottom, "x")
        .with_sides()
        .build();
    let v = test_series_parallel(&g).unwrap();
    assert!(v.planar());
}

#[test]
fn rigid_frame_is_rejected() {
    let mut b = ClusteredGraph::builder();
    for name in ["a", "b", "c", "d"] {
        b = b.point(name);
    }
    for (u, v) in [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")] {
        b = b.edge(u, v);
    }
    let g = b.with_sides().build();
    assert_eq!(test_series_parallel(&g), Err(SpError::FrameNotSeriesParallel));
    assert_eq!(test_partial_2_tree(&g), Err(SpError::FrameNotPartial2Tree));
}

#[test]
fn spans_complement() {
    let n = 8;
    assert!(complementary(n, Span { start: 0, wind: 3 }, Span { start: 4, wind: 2 }));
    assert!(!complementary(n, Span { start: 0, wind: 5 }, Span { start: 4, wind: 2 }));
    assert!(complementary(n, Span { start: 2, wind: 8 }, Span { start: 2, wind: 0 }));
    assert!(complementary(n, Span { start: 2, wind: 0 }, Span { start: 2, wind: 0 }));
}

#[test]
fn gaps_nest() {
    assert!(within_gap(12, &[0, 6], &[2, 3]));
    assert!(!within_gap(12, &[0, 4, 8], &[0, 4, 8]));
    assert!(!within_gap(12, &[0, 6], &[3, 9]));
    assert!(within_gap(12, &[5], &[0, 4, 8]));
}

