//! One line per acceptance criterion. Every comparison is exact: the pinned
//! tolerance is zero for coefficients and 100% for pass rates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toroidal_core::coeff::rat_int;
use toroidal_core::kahler::{reduce_b_da, KahlerElem, KahlerSym, LaurentMono};
use toroidal_core::rootdata::{build_cartan, folded_simple_roots, rational_form};
use toroidal_core::{
    AlgebraSpec, CycNum, Exec, Family, FamilyId, LieAlgebra, LieElem, LoopElem, Presentation,
    ToroidalAlgebra,
};

const REQUIRED_PASS_RATE: f64 = 1.0;
const TOROIDAL_TRIPLES: usize = 500;
const PROOF_WINDOW: i64 = 6;
const KAHLER_RANGE: i64 = 8;
const EXACTNESS_RANGE: i64 = 6;
const SPAN_J: i64 = 2;
const SPAN_M: i64 = 1;
const SPAN_WORD_LENGTH: usize = 4;

fn line(n: u32, pass: bool, detail: &str) {
    println!(
        "criterion {n}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
}

fn spec(f: Family, n: usize, r: u8) -> AlgebraSpec {
    AlgebraSpec::new(f, n, r).unwrap()
}

fn run_suite(s: AlgebraSpec, window: i64) -> (usize, usize, Vec<String>) {
    let p = Presentation::new(s);
    let summary = p.verify_all(window, 2, Exec::default());
    let mut failing = Vec::new();
    for f in &summary.families {
        if !f.all_pass() {
            failing.push(format!(
                "{} family {}: {}/{}",
                s.name(),
                f.id,
                f.passed(),
                f.applicable()
            ));
        }
    }
    for c in summary.checks.iter().filter(|c| !c.pass) {
        failing.push(format!("{} check {}", s.name(), c.name));
    }
    (summary.total_passed(), summary.total_cases(), failing)
}

#[test]
fn criterion_1_twisted_presentation() {
    let runs = [
        (spec(Family::A, 3, 2), 4),
        (spec(Family::A, 4, 2), 4),
        (spec(Family::D, 3, 2), 4),
        (spec(Family::D, 2, 2), 4),
        (spec(Family::D, 3, 3), 3),
    ];
    let mut passed = 0;
    let mut total = 0;
    let mut failing = Vec::new();
    for (s, w) in runs {
        let (p, t, f) = run_suite(s, w);
        passed += p;
        total += t;
        failing.extend(f);
    }
    let rate = passed as f64 / total as f64;
    let ok = rate >= REQUIRED_PASS_RATE && failing.is_empty();
    let detail = format!(
        "{passed}/{total} cases exact; failing: [{}]",
        failing.join("; ")
    );
    line(1, ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_2_untwisted_degeneration() {
    let mut passed = 0;
    let mut total = 0;
    let mut failing = Vec::new();
    for s in [spec(Family::A, 2, 1), spec(Family::D, 3, 1)] {
        let (p, t, f) = run_suite(s, 4);
        passed += p;
        total += t;
        failing.extend(f);
    }
    let ok = passed == total && failing.is_empty();
    let detail = format!("{passed}/{total} cases exact over U1..U6 for A_3, D_4");
    line(2, ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_3_kahler_identities() {
    let m = LaurentMono::new;
    let c0 = |k| KahlerElem::sym(KahlerSym::C0, CycNum::from_int(k, 1));
    let mut bad = 0;
    for k in -KAHLER_RANGE..=KAHLER_RANGE {
        for l in -KAHLER_RANGE..=KAHLER_RANGE {
            let first = if k == -l { c0(k) } else { KahlerElem::zero() };
            if reduce_b_da(m(l, 0), m(k, 0)) != first {
                bad += 1;
            }
            let mut second = first.clone();
            second.add_term(KahlerSym::Bt(k + l), CycNum::one(1));
            if reduce_b_da(m(l, -1), m(k, 1)) != second {
                bad += 1;
            }
        }
    }
    let range = -EXACTNESS_RANGE..=EXACTNESS_RANGE;
    let mut exact_bad = 0;
    for a_s in range.clone() {
        for a_t in range.clone() {
            for b_s in range.clone() {
                for b_t in range.clone() {
                    let (a, b) = (m(a_s, a_t), m(b_s, b_t));
                    if !reduce_b_da(a, b).kadd(&reduce_b_da(b, a)).is_zero() {
                        exact_bad += 1;
                    }
                }
            }
        }
    }
    let ok = bad == 0 && exact_bad == 0;
    let detail = format!("identity mismatches {bad}, non-vanishing exact forms {exact_bad}");
    line(3, ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_4_folding_data() {
    let mut problems = Vec::new();
    let cases = [
        (
            spec(Family::A, 3, 2),
            "C_3",
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            21,
        ),
        (
            spec(Family::D, 3, 2),
            "B_3",
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            21,
        ),
        (
            spec(Family::D, 3, 3),
            "G_2",
            vec![vec![2, -3], vec![-1, 2]],
            14,
        ),
    ];
    for (s, name, folded, dim0) in cases {
        let c = build_cartan(&s);
        if s.folded_type() != name {
            problems.push(format!("{name}: type {}", s.folded_type()));
        }
        if c.folded != folded {
            problems.push(format!("{name}: folded matrix {:?}", c.folded));
        }
        let alphas = folded_simple_roots(&s);
        for (i, ai) in alphas.iter().enumerate() {
            for (j, aj) in alphas.iter().enumerate() {
                if rational_form(ai, aj, &s) != &c.d[i] * rat_int(c.folded[i][j]) {
                    problems.push(format!("{name}: (a_{i}|a_{j}) != d_i a_ij"));
                }
            }
        }
        let got = LieAlgebra::new(s).graded_dim(0);
        if got != dim0 {
            problems.push(format!("{name}: dim g_0 = {got}"));
        }
    }
    let ok = problems.is_empty();
    let detail = if ok {
        "C_3, B_3, G_2 matrices, d-vectors and dim g_0 = 21, 21, 14".to_string()
    } else {
        problems.join("; ")
    };
    line(4, ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_5_proof_reproduction() {
    let mut passed = 0;
    let mut total = 0;
    for (s, id) in [
        (spec(Family::A, 3, 2), FamilyId::ProofAD),
        (spec(Family::A, 4, 2), FamilyId::ProofAD),
        (spec(Family::D, 3, 2), FamilyId::ProofAD),
        (spec(Family::D, 2, 2), FamilyId::ProofAD),
        (spec(Family::D, 3, 3), FamilyId::ProofD4),
    ] {
        let report = Presentation::new(s).verify_family(id, PROOF_WINDOW, 2, Exec::default());
        passed += report.passed();
        total += report.applicable();
    }
    let ok = total > 0 && passed == total;
    let detail = format!("{passed}/{total} proof cases with |k|, |l| <= {PROOF_WINDOW}");
    line(5, ok, &detail);
    assert!(ok, "{detail}");
}

fn lie_law_failures(g: &LieAlgebra) -> usize {
    let basis: Vec<LieElem> = (0..g.dim()).map(|i| g.basis(i)).collect();
    let mut bad = 0;
    for x in &basis {
        for y in &basis {
            let xy = g.bracket(x, y);
            if !xy.add(&g.bracket(y, x)).is_zero() {
                bad += 1;
            }
            if g.sigma_apply(&xy) != g.bracket(&g.sigma_apply(x), &g.sigma_apply(y)) {
                bad += 1;
            }
            if g.inv_form(x, y) != g.inv_form(y, x) {
                bad += 1;
            }
            for z in &basis {
                let j = g
                    .bracket(x, &g.bracket(y, z))
                    .add(&g.bracket(y, &g.bracket(z, x)))
                    .add(&g.bracket(z, &xy));
                if !j.is_zero() {
                    bad += 1;
                }
                if g.inv_form(&xy, z) != g.inv_form(x, &g.bracket(y, z)) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

fn toroidal_law_failures(s: AlgebraSpec) -> usize {
    let alg = ToroidalAlgebra::new(s);
    let dim = alg.lie().dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (s.rank() as u64) << 4 ^ s.r() as u64);
    let random = |rng: &mut ChaCha8Rng| {
        let mut x = LoopElem::zero(s);
        for _ in 0..rng.gen_range(1..=3) {
            let c = CycNum::from_int(rng.gen_range(-3..=3), s.r());
            let mono = LaurentMono::new(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
            x.add_at(mono, &LieElem::term(s, rng.gen_range(0..dim), c));
        }
        alg.twisted(alg.fix_project(&x), KahlerElem::zero())
            .unwrap()
    };
    let mut bad = 0;
    for _ in 0..TOROIDAL_TRIPLES {
        let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let jac = alg
            .bracket(&x, &alg.bracket(&y, &z))
            .add(&alg.bracket(&y, &alg.bracket(&z, &x)))
            .add(&alg.bracket(&z, &alg.bracket(&x, &y)));
        if !jac.is_zero() {
            bad += 1;
        }
        if !alg.bracket(&x, &y).add(&alg.bracket(&y, &x)).is_zero() {
            bad += 1;
        }
    }
    bad
}

#[test]
fn criterion_6_algebraic_laws() {
    let mut lie_bad = 0;
    for s in [
        spec(Family::A, 3, 2),
        spec(Family::D, 3, 2),
        spec(Family::D, 3, 3),
    ] {
        lie_bad += lie_law_failures(&LieAlgebra::new(s));
    }
    let mut tor_bad = 0;
    for s in [
        spec(Family::A, 3, 2),
        spec(Family::A, 4, 2),
        spec(Family::D, 3, 2),
        spec(Family::D, 2, 2),
        spec(Family::D, 3, 3),
        spec(Family::A, 2, 1),
        spec(Family::D, 3, 1),
    ] {
        tor_bad += toroidal_law_failures(s);
    }
    let ok = lie_bad == 0 && tor_bad == 0;
    let detail = format!(
        "g-law failures {lie_bad} (A_5, D_4 basis triples), toroidal failures {tor_bad} ({TOROIDAL_TRIPLES} triples per spec)"
    );
    line(6, ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_7_span() {
    let p = Presentation::new(spec(Family::A, 3, 2));
    let rep = p.span_check(SPAN_J, SPAN_M, SPAN_WORD_LENGTH, Exec::default());
    let short: Vec<String> = rep
        .slices
        .iter()
        .filter(|s| !s.full())
        .map(|s| format!("({},{}) {}/{}", s.j, s.m, s.achieved, s.target))
        .collect();
    let ok = short.is_empty();
    let detail = format!(
        "word length {SPAN_WORD_LENGTH}, |j| <= {SPAN_J}, |m| <= {SPAN_M}; partial slices: [{}]",
        short.join(", ")
    );
    line(7, ok, &detail);
    assert!(ok, "{detail}");
}
