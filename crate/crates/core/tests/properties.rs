mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ribbondb::database::builtin_table;
use ribbondb::invariants::{alexander, determinant, jones, kauffman_bracket};
use ribbondb::pd::serialize_pd;
use ribbondb::simplify::{
    apply_r1, apply_r2, certify_unlink, find_r1, find_r2, simplify_greedy, UnlinkCertificate,
};
use ribbondb::tangle::{
    self, bottom_stitchings, full_stitchings, restitch, top_stitchings, EndAssignment,
};
use ribbondb::{parse_pd, Crossing, PlanarDiagram};

use common::Poly;

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|s| {
        let letter = (1..s as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g });
        (Just(s), prop::collection::vec(letter, 1..=8))
    })
}

fn diagram(strands: usize, word: &[i32]) -> PlanarDiagram {
    PlanarDiagram::from_braid_word(strands, word)
}

fn table_diagrams() -> Vec<(String, PlanarDiagram)> {
    builtin_table()
        .records
        .iter()
        .map(|r| (r.name.clone(), r.diagram().unwrap()))
        .collect()
}

/// Every diagram one R1 or R2 move away, with the move's bracket factor
/// exponent: R1 multiplies the bracket by `-A^(±3)`, R2 leaves it fixed.
fn neighbours(pd: &PlanarDiagram) -> Vec<(PlanarDiagram, bool)> {
    let mut out: Vec<_> = find_r1(pd)
        .into_iter()
        .map(|c| (apply_r1(pd, c), true))
        .collect();
    out.extend(
        find_r2(pd)
            .into_iter()
            .map(|(a, b)| (apply_r2(pd, a, b), false)),
    );
    out
}

fn scaled(p: &Poly, shift: i32, sign: i64) -> Poly {
    p.iter().map(|(&e, &c)| (e + shift, sign * c)).collect()
}

/// Removes crossing `c` (four distinct labels) with the given joins
/// `(keep, drop)`, renaming `drop` to `keep` elsewhere.
fn smooth(pd: &PlanarDiagram, c: usize, joins: [(u32, u32); 2]) -> PlanarDiagram {
    let rename: BTreeMap<u32, u32> = joins.iter().map(|&(keep, drop)| (drop, keep)).collect();
    let crossings = pd
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != c)
        .map(|(_, x)| Crossing::new(x.labels().map(|l| *rename.get(&l).unwrap_or(&l))).unwrap())
        .collect();
    PlanarDiagram::new(crossings, pd.free_loops()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bracket_matches_state_sum_oracle((s, w) in braid()) {
        let pd = diagram(s, &w);
        let engine = common::to_poly(&kauffman_bracket(&pd).unwrap());
        prop_assert_eq!(engine, common::bracket(&common::tuples(&pd), pd.free_loops()));
    }

    #[test]
    fn knot_jones_matches_oracle((s, w) in braid()) {
        let pd = diagram(s, &w);
        prop_assume!(pd.trace_components().unwrap().count == 1);
        let engine = common::to_poly(&jones(&pd).unwrap());
        prop_assert_eq!(engine, common::jones(&common::tuples(&pd), pd.free_loops()));
    }

    #[test]
    fn skein_relation_holds_at_each_crossing((s, w) in braid()) {
        let pd = diagram(s, &w);
        prop_assume!(pd.crossing_count() >= 2 && pd.crossing_count() <= 6);
        let whole = common::to_poly(&kauffman_bracket(&pd).unwrap());
        for (c, x) in pd.crossings().iter().enumerate() {
            let [i, j, k, l] = x.labels();
            let mut distinct = vec![i, j, k, l];
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() < 4 {
                continue;
            }
            let a = smooth(&pd, c, [(i, j), (k, l)]);
            let b = smooth(&pd, c, [(i, l), (j, k)]);
            let mut sum = scaled(&common::to_poly(&kauffman_bracket(&a).unwrap()), 1, 1);
            for (e, v) in scaled(&common::to_poly(&kauffman_bracket(&b).unwrap()), -1, 1) {
                *sum.entry(e).or_insert(0) += v;
            }
            sum.retain(|_, v| *v != 0);
            prop_assert_eq!(&sum, &whole, "crossing {}", c);
        }
    }

    #[test]
    fn mirror_inverts_jones((s, w) in braid()) {
        let pd = diagram(s, &w);
        prop_assume!(pd.trace_components().unwrap().count == 1);
        prop_assert_eq!(jones(&pd.mirror()).unwrap(), jones(&pd).unwrap().inverted());
    }

    #[test]
    fn serialize_then_parse_is_identity((s, w) in braid(), offset in 0u32..50) {
        let pd = diagram(s, &w).relabeled(|x| x + offset);
        prop_assume!(pd.crossing_count() > 0);
        let text = serialize_pd(&pd);
        let back = parse_pd(&text).unwrap();
        prop_assert_eq!(back.crossings(), pd.crossings());
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn every_label_occurs_twice((s, w) in braid()) {
        let pd = diagram(s, &w);
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for x in pd.crossings() {
            for l in x.labels() {
                *count.entry(l).or_default() += 1;
            }
        }
        prop_assert!(count.values().all(|&n| n == 2));
    }

    #[test]
    fn bracket_covariance_under_moves((s, w) in braid()) {
        let pd = diagram(s, &w);
        let before = common::to_poly(&kauffman_bracket(&pd).unwrap());
        for (next, is_r1) in neighbours(&pd) {
            let after = common::to_poly(&kauffman_bracket(&next).unwrap());
            if is_r1 {
                prop_assert!(after == scaled(&before, 3, -1) || after == scaled(&before, -3, -1)
                    || before == scaled(&after, 3, -1) || before == scaled(&after, -3, -1));
            } else {
                prop_assert_eq!(&after, &before);
            }
        }
    }

    #[test]
    fn greedy_reduction_shrinks_and_terminates((s, w) in braid()) {
        let pd = diagram(s, &w);
        let n = pd.crossing_count();
        let result = simplify_greedy(&pd, usize::MAX);
        prop_assert!(!result.incomplete);
        prop_assert!(result.moves.len() <= n);
        let removed: usize = result.moves.iter().map(|m| m.crossings.len()).sum();
        prop_assert_eq!(result.diagram.crossing_count(), n - removed);
        prop_assert_eq!(
            result.diagram.trace_components().unwrap().count,
            pd.trace_components().unwrap().count
        );
    }

    #[test]
    fn certificate_agrees_with_component_count((s, w) in braid()) {
        let pd = diagram(s, &w);
        if let UnlinkCertificate::Certified(n) = certify_unlink(&pd) {
            prop_assert_eq!(n, pd.trace_components().unwrap().count);
            prop_assert_eq!(n, common::components(&common::tuples(&pd), pd.free_loops()));
        }
    }
}

#[test]
fn jones_invariant_under_moves_on_200_random_knots() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut knots = 0;
    let mut moves = 0;
    while knots < 200 {
        let (s, w) = common::random_braid(&mut rng, 8);
        let pd = diagram(s, &w);
        if pd.trace_components().unwrap().count != 1 {
            continue;
        }
        knots += 1;
        let v = jones(&pd).unwrap();
        for (next, _) in neighbours(&pd) {
            moves += 1;
            assert_eq!(jones(&next).unwrap(), v, "braid {s} {w:?}");
        }
    }
    assert!(moves > 100, "only {moves} moves exercised");
}

#[test]
fn jones_invariant_under_moves_on_table_diagrams() {
    for (name, pd) in table_diagrams() {
        let v = jones(&pd).unwrap();
        for (next, _) in neighbours(&pd) {
            assert_eq!(jones(&next).unwrap(), v, "{name}");
        }
    }
}

#[test]
fn table_diagrams_are_valid_knots() {
    for (name, pd) in table_diagrams() {
        let xs = common::tuples(&pd);
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for l in xs.iter().flatten() {
            *count.entry(*l).or_default() += 1;
        }
        assert!(count.values().all(|&n| n == 2), "{name}");
        assert_eq!(pd.trace_components().unwrap().count, 1, "{name}");
        assert_eq!(common::components(&xs, 0), 1, "{name}");
        assert!(pd.is_planar(), "{name}");
    }
}

#[test]
fn table_alexander_and_determinant() {
    for (name, pd) in table_diagrams() {
        let a = alexander(&pd).unwrap();
        assert!(a.is_symmetric(), "{name}: {a}");
        assert!(
            a.max_exponent().map_or(false, |e| a.coefficient(e) > 0),
            "{name}"
        );
        let det = determinant(&pd).unwrap();
        assert_eq!(det, a.eval_at_minus_one().unsigned_abs(), "{name}");
        assert_eq!(det, common::determinant(&common::tuples(&pd)), "{name}");
        let root = (det as f64).sqrt().round() as u64;
        assert!(det % 2 == 1 && root * root == det, "{name}: {det}");
    }
}

#[test]
fn table_jones_matches_oracle_on_small_rows() {
    let mut checked = 0;
    for (name, pd) in table_diagrams() {
        if pd.crossing_count() > 14 {
            continue;
        }
        checked += 1;
        let xs = common::tuples(&pd);
        assert_eq!(
            common::to_poly(&jones(&pd).unwrap()),
            common::jones(&xs, 0),
            "{name}"
        );
    }
    assert!(checked >= 2);
}

#[test]
fn cut_then_restitch_returns_the_diagram() {
    for r in &builtin_table().records {
        if r.tangle_values.repeated_label().is_some() {
            continue;
        }
        let pd = r.diagram().unwrap();
        for assignment in [EndAssignment::Forward, EndAssignment::Mirrored] {
            let t = tangle::cut(&pd, &r.tangle_values.cut_labels(), assignment).unwrap();
            assert_eq!(t.crossing_count(), pd.crossing_count());
            assert!(restitch(&t).unwrap().same_up_to_relabel(&pd), "{}", r.name);
        }
    }
}

#[test]
fn closures_commute_and_count_stitchings() {
    for r in &builtin_table().records {
        if r.tangle_values.repeated_label().is_some() {
            continue;
        }
        let t = tangle::cut(
            &r.diagram().unwrap(),
            &r.tangle_values.cut_labels(),
            EndAssignment::Forward,
        )
        .unwrap();
        let tb = t
            .top_closure()
            .unwrap()
            .bottom_closure()
            .unwrap()
            .into_closed()
            .unwrap();
        let bt = t
            .bottom_closure()
            .unwrap()
            .top_closure()
            .unwrap()
            .into_closed()
            .unwrap();
        assert!(tb.same_up_to_relabel(&bt), "{}", r.name);
        assert_eq!(top_stitchings(t.tops()).unwrap().len(), 2);
        let full = full_stitchings(t.tops(), t.bottoms()).unwrap();
        assert_eq!(full.len(), 3);
        let bottoms = bottom_stitchings(t.bottoms()).unwrap();
        assert!(bottoms.iter().all(|s| full.contains(s)));
    }
}

#[test]
fn oracle_self_check() {
    // kinks of both chiralities and the two-circle diagram
    assert_eq!(common::bracket(&[[1, 1, 2, 2]], 0), Poly::from([(3, -1)]));
    assert_eq!(common::bracket(&[[1, 2, 2, 1]], 0), Poly::from([(-3, -1)]));
    assert_eq!(common::jones(&[], 2), common::half_t("-t^-1/2 - t^1/2"));
    assert_eq!(
        common::determinant(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
        3
    );
}
