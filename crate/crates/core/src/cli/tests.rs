use super::*;
use crate::generate::{gen_random, FrameShape, GenParams};
use crate::hardness::{reduce_fixed, Literal, Nae3SatFormula};
use crate::model::Side;
use crate::oracle::{oracle_fixed, wheel_constraints, DEFAULT_BUDGET};

const NOT_LIGHT: &str = include_str!("../../fixtures/not_light.ntx");
const K5_FRAME: &str = include_str!("../../fixtures/k5_frame.ntx");

fn syntax_at(text: &str) -> (usize, usize) {
    match parse(text) {
        Err(FormatError::Syntax { line, column, .. }) => (line, column),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn fixture_is_canonical() {
    let g = parse(NOT_LIGHT).unwrap();
    let body: String = NOT_LIGHT.lines().skip(1).map(|l| format!("{l}\n")).collect();
    assert_eq!(serialize(&g), body);
    assert_eq!(serialize(&parse(&body).unwrap()), body);
    assert!(!g.is_light());
    assert_eq!(g.clusters.len(), 5);
}

#[test]
fn syntax_errors_carry_positions() {
    assert_eq!(syntax_at(""), (1, 1));
    assert_eq!(syntax_at("# nothing\n\n"), (1, 1));
    let bad_side = "nodetrix 1\nmodel fixed\n[vertices]\na b c\n[clusters]\nA = a b\n[inter]\na:Q c\n";
    assert_eq!(syntax_at(bad_side), (8, 3));
    assert_eq!(syntax_at("nodetrix 2\n"), (1, 10));
    assert_eq!(syntax_at("nodetrix 1\nmodel free\n[vertices]\na b\n[clusters]\nA = a\n[inter]\na:T b\n"), (8, 3));
    assert_eq!(syntax_at("nodetrix 1\nmodel free\n[vertices]\na\n[inter]\na zz\n"), (6, 3));
    assert_eq!(syntax_at("nodetrix 1\nmodel free\n[inter]\n[vertices]\n"), (4, 1));
    assert_eq!(syntax_at("nodetrix 1\nmodel free\n[vertices]\na b\n[intra]\na b\n"), (6, 1));
}

#[test]
fn validation_errors_are_reported() {
    let missing = "nodetrix 1\nmodel fixed\n[vertices]\na b c\n[clusters]\nA = a b\n[inter]\na c\n";
    assert!(matches!(parse(missing), Err(FormatError::Invalid(crate::model::Violation::MissingSide(..)))));
    let twice = "nodetrix 1\nmodel free\n[vertices]\na b\n[clusters]\nA = a b\nB = b\n";
    assert!(matches!(parse(twice), Err(FormatError::Invalid(_))));
}

#[test]
fn generated_instances_round_trip() {
    for seed in 0..60 {
        let shape = [FrameShape::Sp, FrameShape::Partial2Tree, FrameShape::Planar][seed as usize % 3];
        let mut params = GenParams::new(4 + seed as usize % 5, 3, shape);
        params.light = seed % 2 == 0;
        let g = gen_random(&params, seed);
        let text = serialize(&g);
        let back = parse(&text).unwrap();
        assert_eq!(serialize(&back), text);
        assert_eq!((back.n(), back.m(), back.clusters.len()), (g.n(), g.m(), g.clusters.len()));
        let free = g.without_sides();
        assert_eq!(serialize(&parse(&serialize(&free)).unwrap()), serialize(&free));
    }
}

#[test]
fn fixture_is_planar_with_a_clean_drawing() {
    let g = parse(NOT_LIGHT).unwrap();
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    assert_eq!((out.algorithm, out.exit_code()), (Algorithm::Sp, 0));
    assert!(oracle_fixed(&g, DEFAULT_BUDGET).unwrap().planar());
    let w = out.witness.unwrap();
    assert!(crate::constrained::check_constraints(&w.reduction.graph, &wheel_constraints(&w.reduction), &w.embedding));
    let layout = compute_layout(&g, &w).unwrap();
    assert_eq!(audit(&g, &layout), vec![]);
    assert_eq!(layout.routes.len(), g.inter_edges().len());
    assert_eq!(layout.matrices.len(), 3);
    let svg = render_svg(&g, &layout);
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<polyline").count(), 7);
}

#[test]
fn k5_frame_is_rejected() {
    let g = parse(K5_FRAME).unwrap();
    for a in [Algorithm::Auto, Algorithm::K2, Algorithm::Oracle] {
        assert_eq!(run_test(&g, a, DEFAULT_BUDGET).unwrap().exit_code(), 1, "{a}");
    }
    assert!(matches!(run_test(&g, Algorithm::Sp, DEFAULT_BUDGET), Err(TestError::NotApplicable(..))));
}

#[test]
fn small_budget_is_exceeded() {
    let lit = |v: i32| if v < 0 { Literal::neg((-v - 1) as usize) } else { Literal::pos((v - 1) as usize) };
    let f = Nae3SatFormula::new(3, [[1, 2, 3], [1, 2, -3], [1, -2, 3], [-1, 2, 3]].iter().map(|c| c.map(lit)).collect());
    let g = reduce_fixed(&f).graph;
    let err = run_test(&g, Algorithm::Oracle, 10).unwrap_err();
    assert_eq!((err.clone(), err.exit_code()), (TestError::BudgetExceeded(10), 2));
}

#[test]
fn conflicting_requests_are_rejected() {
    let g = parse(NOT_LIGHT).unwrap();
    assert!(matches!(run_test(&g, Algorithm::K2, DEFAULT_BUDGET), Err(TestError::NotApplicable(..))));
    let free = g.without_sides();
    assert!(matches!(run_test(&free, Algorithm::Sp, DEFAULT_BUDGET), Err(TestError::NotApplicable(..))));
}

#[test]
fn auto_agrees_with_each_applicable_algorithm() {
    for seed in 0..80 {
        let (shape, k) = match seed % 4 {
            0 => (FrameShape::Sp, 3),
            1 => (FrameShape::Partial2Tree, 3),
            2 => (FrameShape::Planar, 2),
            _ => (FrameShape::Planar, 3),
        };
        let mut params = GenParams::new(5 + seed as usize % 3, k, shape);
        params.max_nontrivial = 3;
        let g = gen_random(&params, seed);
        let auto = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
        for a in [Algorithm::K2, Algorithm::Sp, Algorithm::Oracle] {
            match run_test(&g, a, DEFAULT_BUDGET) {
                Ok(o) => assert_eq!(o.planar(), auto.planar(), "seed {seed} {a}"),
                Err(TestError::NotApplicable(..)) => {}
                Err(e) => panic!("seed {seed} {a}: {e}"),
            }
        }
        if let Some(w) = &auto.witness {
            let layout = compute_layout(&auto.sided, w).unwrap();
            assert_eq!(audit(&auto.sided, &layout), vec![], "seed {seed}");
        }
    }
}

#[test]
fn free_model_reports_the_chosen_sides() {
    let g = parse(NOT_LIGHT).unwrap().without_sides();
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    assert!(out.planar());
    assert!(out.sided.sides.is_some());
    let layout = compute_layout(&out.sided, out.witness.as_ref().unwrap()).unwrap();
    assert_eq!(audit(&out.sided, &layout), vec![]);
    let doc = WitnessDoc::accepted(&out.sided, out.witness.as_ref().unwrap(), "oracle", "free");
    assert_eq!(doc.sides.len(), out.sided.side_domain().len());
}

#[test]
fn one_matrix_fills_symmetric_cells() {
    let g = crate::model::ClusteredGraph::builder()
        .cluster("A", &["a", "b"])
        .point("x")
        .edge("a", "b")
        .edge_at("a", Side::Left, "x")
        .with_sides()
        .build();
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    let layout = compute_layout(&g, out.witness.as_ref().unwrap()).unwrap();
    let svg = render_svg(&g, &layout);
    assert_eq!(svg.matches("fill=\"#358\"").count(), 2);
    assert_eq!(svg, render_svg(&g, &layout));
    assert_eq!(audit(&g, &layout), vec![]);
}

#[test]
fn empty_instance_renders_an_empty_canvas() {
    let g = parse("nodetrix 1\nmodel fixed\n").unwrap();
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    assert!(out.planar());
    let layout = compute_layout(&g, out.witness.as_ref().unwrap()).unwrap();
    let svg = render_svg(&g, &layout);
    assert!(svg.contains("<svg") && !svg.contains("<rect") && !svg.contains("<polyline"));
}

#[test]
fn witness_document_round_trips_through_json() {
    let g = parse(NOT_LIGHT).unwrap();
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    let doc = WitnessDoc::accepted(&g, out.witness.as_ref().unwrap(), "sp", "fixed");
    let json = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(serde_json::from_str::<WitnessDoc>(&json).unwrap(), doc);
    assert_eq!(doc.permutations.len(), 3);
    assert_eq!(doc.sides.len(), 10);
    let hub = doc.rotation_system.iter().find(|r| r.vertex == "A/hub").unwrap();
    assert_eq!(hub.clockwise.len(), 12);
    assert!(hub.clockwise.iter().any(|v| v.ends_with(".T")));
}

#[test]
fn reductions_render_without_crossings() {
    let lit = |v: i32| if v < 0 { Literal::neg((-v - 1) as usize) } else { Literal::pos((v - 1) as usize) };
    let f = Nae3SatFormula::new(4, [[1, 2, 3], [2, -3, 4]].iter().map(|c| c.map(lit)).collect());
    let g = reduce_fixed(&f).graph;
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    let layout = compute_layout(&g, out.witness.as_ref().unwrap()).unwrap();
    assert_eq!(audit(&g, &layout), vec![]);
}
