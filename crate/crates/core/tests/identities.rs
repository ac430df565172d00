//! Area and excess identities on many paths: every enumerated optimal path
//! up to 8 x 8, every witness, and random chordless paths.

mod common;

use common::{random_winning_path, size, stone_set, worked_example};
use hexpath::board::Corner;
use hexpath::connection::is_minimal_winning_path;
use hexpath::construct::witness;
use hexpath::search::{find_longest, SearchConfig, SearchMode};
use hexpath::unitgrid::{
    boundary_components, corner_lemma_witness, eq1_check, eq2_check, wasted, Orientation, Region,
};
use hexpath::StoneSet;

fn optimal_paths(n: u32) -> Vec<StoneSet> {
    let cfg = SearchConfig::new(size(n)).mode(SearchMode::EnumerateAll);
    find_longest(&cfg).unwrap().paths.unwrap()
}

fn check_identities(s: &StoneSet) {
    assert!(eq1_check(s).unwrap().holds, "{s}");
    if s.size().get() >= 2 {
        for r in [Region::a(s.size()), Region::b(s.size())] {
            let chk = eq2_check(s, &r).unwrap();
            assert!(chk.holds, "{s} {:?} {chk:?}", r.kind());
        }
    }
}

#[test]
fn identities_on_enumerated_optimal_paths() {
    for n in 1..=8 {
        for p in optimal_paths(n) {
            check_identities(&p);
        }
    }
}

#[test]
fn identities_on_witnesses() {
    for n in 1..=20 {
        check_identities(&witness(size(n)).unwrap());
    }
}

#[test]
fn identities_on_random_paths() {
    for n in 2..=14 {
        for seed in 0..150 {
            let cells = random_winning_path(n, seed * 31 + n as u64);
            let s = stone_set(n, &cells);
            assert!(is_minimal_winning_path(&s));
            check_identities(&s);
        }
    }
}

#[test]
fn corner_region_waste_floor_from_six() {
    // at least ceil((n+1)/2) wasted triangles in each acute corner region
    for n in 6..=8 {
        for p in optimal_paths(n) {
            for r in [Region::a(size(n)), Region::b(size(n))] {
                assert!(wasted(&p, &r).unwrap().t >= n.div_ceil(2) as u64, "{p}");
            }
        }
    }
}

#[test]
fn corner_region_waste_floor_fails_at_five() {
    let s = StoneSet::from_pairs(
        5,
        &[(1, 1), (1, 2), (3, 2), (4, 2), (5, 2), (1, 3), (2, 3), (5, 3), (3, 4), (4, 4), (2, 5)],
    )
    .unwrap();
    assert!(is_minimal_winning_path(&s));
    let a = wasted(&s, &Region::a(size(5))).unwrap();
    assert_eq!((a.t, a.t_up), (2, 0));
    let w = corner_lemma_witness(&s, Corner::TopLeftAcute).unwrap();
    assert_eq!(w.orientation(), Orientation::Up);
    assert!(w.vertices().iter().any(|v| v.x + v.y > 5));
}

#[test]
fn worked_example_boundary_components() {
    let s = worked_example();
    let r = boundary_components(&s, &Region::a(size(10))).unwrap();
    assert_eq!(r.b, 4);
    assert_eq!(r.transversal.len(), 4);
}

#[test]
fn full_region_waste_is_divisible_by_four_when_boundary_is_saturated() {
    // when region A carries (n+1)/2 single-stone components, its waste is a multiple of 4
    for n in [5u32, 7] {
        for p in optimal_paths(n) {
            let r = boundary_components(&p, &Region::a(size(n))).unwrap();
            let saturated = r.b == (n as usize).div_ceil(2) && r.stone_count() == r.b;
            if saturated {
                assert_eq!(wasted(&p, &Region::a(size(n))).unwrap().t % 4, 0, "{p}");
            }
        }
    }
}

#[test]
fn boundary_run_turning_a_region_corner_counts_once_per_side() {
    let s = StoneSet::from_pairs(3, &[(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]).unwrap();
    let r = boundary_components(&s, &Region::a(size(3))).unwrap();
    assert_eq!(r.components, vec![vec![hexpath::Coord::new(1, 1)], vec![hexpath::Coord::new(1, 2)]]);
    assert!(eq2_check(&s, &Region::a(size(3))).unwrap().holds);
    let s = StoneSet::from_pairs(6, &[(4, 1), (4, 2), (5, 2), (6, 2), (6, 3), (4, 4), (5, 4), (3, 5), (2, 6)]).unwrap();
    let r = boundary_components(&s, &Region::a(size(6))).unwrap();
    assert_eq!(r.b, 2);
    assert!(eq2_check(&s, &Region::a(size(6))).unwrap().holds);
}
