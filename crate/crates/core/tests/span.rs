use toroidal_core::{AlgebraSpec, Exec, Family, Presentation};

fn a5() -> Presentation {
    Presentation::new(AlgebraSpec::new(Family::A, 3, 2).unwrap())
}

#[test]
fn slice_targets_follow_the_grading() {
    let rep = a5().span_check(2, 1, 2, Exec::default());
    for s in &rep.slices {
        let want = if s.j.rem_euclid(2) == 0 { 21 } else { 14 };
        assert_eq!(s.target, want, "({}, {})", s.j, s.m);
        assert!(s.achieved <= s.target);
    }
}

#[test]
fn degree_zero_slices_fill_up() {
    let rep = a5().span_check(2, 1, 6, Exec::default());
    let at = |j, m| rep.slices.iter().find(|s| s.j == j && s.m == m).unwrap();
    assert!(at(0, 0).full());
    assert_eq!(at(0, 0).achieved, 21);
    assert!(at(1, 0).full());
    assert_eq!(at(1, 0).achieved, 14);
}

#[test]
fn span_grows_with_word_length() {
    let p = a5();
    let short = p.span_check(2, 1, 3, Exec::default());
    let long = p.span_check(2, 1, 5, Exec::default());
    for (a, b) in short.slices.iter().zip(&long.slices) {
        assert!(a.achieved <= b.achieved);
    }
}

#[test]
fn every_slice_is_eventually_full() {
    let p = a5();
    let len = p.minimal_span_length(2, 1, 14, Exec::default());
    assert!(len.is_some());
}

#[test]
fn sequential_matches_parallel() {
    let p = a5();
    let a = p.span_check(2, 1, 4, Exec::Sequential);
    let b = p.span_check(2, 1, 4, Exec::default());
    let da: Vec<_> = a.slices.iter().map(|s| s.achieved).collect();
    let db: Vec<_> = b.slices.iter().map(|s| s.achieved).collect();
    assert_eq!(da, db);
}
