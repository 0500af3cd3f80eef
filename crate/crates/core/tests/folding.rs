use std::collections::BTreeSet;

use toroidal_core::coeff::{rat, rat_int, Rational};
use toroidal_core::rootdata::{
    build_cartan, enumerate_roots, folded_simple_roots, rational_form, sigma_root, Root,
};
use toroidal_core::{AlgebraSpec, Family, LieAlgebra};

/// Folded Cartan matrix written out from the type rules (1-based i, j ∈ I).
fn expected_folded(folded: &str, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    if folded == "G_2" {
        a[0][1] = -3;
        a[1][0] = -1;
        return a;
    }
    for i in 0..n - 1 {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    match folded.as_bytes()[0] {
        b'C' => a[n - 2][n - 1] = -2,
        b'B' => a[n - 1][n - 2] = -2,
        _ => unreachable!(),
    }
    a
}

fn expected_d(folded: &str, n: usize) -> Vec<Rational> {
    match folded.as_bytes()[0] {
        b'G' => vec![rat(1, 3), rat_int(1)],
        b'C' => (0..n)
            .map(|i| if i + 1 == n { rat_int(1) } else { rat(1, 2) })
            .collect(),
        _ => (0..n)
            .map(|i| if i + 1 == n { rat(1, 2) } else { rat_int(1) })
            .collect(),
    }
}

fn twisted() -> Vec<(AlgebraSpec, &'static str)> {
    vec![
        (AlgebraSpec::new(Family::A, 3, 2).unwrap(), "C_3"),
        (AlgebraSpec::new(Family::A, 4, 2).unwrap(), "C_4"),
        (AlgebraSpec::new(Family::D, 3, 2).unwrap(), "B_3"),
        (AlgebraSpec::new(Family::D, 2, 2).unwrap(), "B_2"),
        (AlgebraSpec::new(Family::D, 3, 3).unwrap(), "G_2"),
    ]
}

#[test]
fn folded_cartan_matrices() {
    for (spec, name) in twisted() {
        assert_eq!(spec.folded_type(), name);
        let c = build_cartan(&spec);
        let n = spec.folded_rank();
        assert_eq!(c.folded, expected_folded(name, n), "{name}");
        assert_eq!(c.d, expected_d(name, n), "{name}");
    }
}

#[test]
fn g2_off_diagonal_entries() {
    let c = build_cartan(&AlgebraSpec::new(Family::D, 3, 3).unwrap());
    assert_eq!(c.folded[0][1], -3);
    assert_eq!(c.folded[1][0], -1);
}

#[test]
fn symmetrized_form_matches_d_times_a() {
    for (spec, name) in twisted() {
        let c = build_cartan(&spec);
        let alphas = folded_simple_roots(&spec);
        for (i, ai) in alphas.iter().enumerate() {
            for (j, aj) in alphas.iter().enumerate() {
                let lhs = rational_form(ai, aj, &spec);
                let rhs = &c.d[i] * rat_int(c.folded[i][j]);
                assert_eq!(lhs, rhs, "{name}: ({i},{j})");
            }
        }
    }
}

/// dim g_0 from root enumeration: folded rank, plus one per σ-orbit of
/// length r, plus the σ-fixed roots whose root vector is fixed.
fn dim_g0_from_roots(spec: AlgebraSpec) -> usize {
    let g = LieAlgebra::new(spec);
    let roots = enumerate_roots(&spec);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut dim = spec.folded_rank();
    for a in &roots {
        if seen.contains(&a.0) {
            continue;
        }
        let mut orbit = vec![a.clone()];
        let mut b = sigma_root(a, &spec);
        while b != *a {
            orbit.push(b.clone());
            b = sigma_root(&b, &spec);
        }
        seen.extend(orbit.iter().map(|r: &Root| r.0.clone()));
        if orbit.len() > 1 {
            dim += 1;
        } else {
            let x = g.root_vector(a).unwrap();
            if g.sigma_apply(&x) == x {
                dim += 1;
            }
        }
    }
    dim
}

#[test]
fn graded_dimensions() {
    for (spec, name) in twisted() {
        let g = LieAlgebra::new(spec);
        let n = spec.folded_rank();
        let classical = if name == "G_2" { 14 } else { n * (2 * n + 1) };
        let d0 = g.graded_dim(0);
        assert_eq!(d0, classical, "{name}");
        assert_eq!(d0, dim_g0_from_roots(spec), "{name}");
        let total: usize = (0..spec.r() as i64).map(|j| g.graded_dim(j)).sum();
        assert_eq!(total, g.dim());
    }
}

#[test]
fn dims_for_the_three_paper_types() {
    let dims: Vec<usize> = [(Family::A, 3, 2), (Family::D, 3, 2), (Family::D, 3, 3)]
        .into_iter()
        .map(|(f, n, r)| LieAlgebra::new(AlgebraSpec::new(f, n, r).unwrap()).graded_dim(0))
        .collect();
    assert_eq!(dims, vec![21, 21, 14]);
}

#[test]
fn root_counts() {
    let count = |f, n| enumerate_roots(&AlgebraSpec::new(f, n, 1).unwrap()).len();
    assert_eq!(count(Family::A, 3), 30);
    assert_eq!(count(Family::A, 4), 56);
    assert_eq!(count(Family::D, 3), 24);
    assert_eq!(count(Family::D, 4), 40);
}

#[test]
fn extended_matrix_rows() {
    let c = build_cartan(&AlgebraSpec::new(Family::A, 3, 2).unwrap());
    assert_eq!(c.extended[0], vec![2, -1, 0, 0]);
    assert_eq!(c.extended[1][0], -1);
    let c = build_cartan(&AlgebraSpec::new(Family::D, 3, 2).unwrap());
    assert_eq!(c.extended[0], vec![2, 0, -1, 0]);
    assert_eq!(c.extended[2][0], -1);
    let c = build_cartan(&AlgebraSpec::new(Family::D, 3, 3).unwrap());
    assert_eq!(c.extended[0], vec![2, 0, -1]);
    assert_eq!(c.extended[2][0], -1);
}
