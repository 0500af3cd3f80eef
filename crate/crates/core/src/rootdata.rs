//! Cartan data, root systems and the diagram automorphism at the level of
//! node indices and root coordinates.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::coeff::{rat, rat_int, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
        }
    }
}

/// Which closed-form constants of the twisted presentation apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistKind {
    /// r = 1: no folding.
    Untwisted,
    /// A_{2n-1} with the flip, folding to C_n.
    A,
    /// D_{n+1} with the swap of the two short legs, folding to B_n.
    D,
    /// D_4 with triality, folding to G_2.
    D4,
}

/// A finite simply-laced algebra together with the order of its diagram
/// automorphism. `n` parameterises A_{2n-1} and D_{n+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    family: Family,
    n: usize,
    r: u8,
}

impl AlgebraSpec {
    /// Validates `(family, n, r)`. For triality (`r = 3`) both `n = 3`
    /// (as D_{n+1}) and `n = 4` (as D_4 by name) are accepted.
    pub fn new(family: Family, n: usize, r: u8) -> Result<Self> {
        let n = match (family, r) {
            (_, r) if !(1..=3).contains(&r) => {
                return Err(Error::Config(format!(
                    "twist order r={r} is not supported (expected 1, 2 or 3)"
                )))
            }
            (Family::A, 3) => {
                return Err(Error::Config("order-3 twist exists only for D_4".into()))
            }
            (Family::D, 3) if n == 3 || n == 4 => 3,
            (Family::D, 3) => {
                return Err(Error::Config(format!(
                    "order-3 twist requires D_4 (n=3 or n=4), got n={n}"
                )))
            }
            (_, _) if n < 2 => {
                return Err(Error::Config(format!(
                    "rank parameter n={n} must be at least 2"
                )))
            }
            (_, _) if n > 16 => {
                return Err(Error::Config(format!("rank parameter n={n} is too large")))
            }
            _ => n,
        };
        Ok(AlgebraSpec { family, n, r })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    /// Rank N of g.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => 2 * self.n - 1,
            Family::D => self.n + 1,
        }
    }

    pub fn kind(&self) -> TwistKind {
        match (self.r, self.family) {
            (1, _) => TwistKind::Untwisted,
            (2, Family::A) => TwistKind::A,
            (2, Family::D) => TwistKind::D,
            _ => TwistKind::D4,
        }
    }

    /// Size of the folded index set I.
    pub fn folded_rank(&self) -> usize {
        match self.kind() {
            TwistKind::Untwisted => self.rank(),
            TwistKind::A | TwistKind::D => self.n,
            TwistKind::D4 => 2,
        }
    }

    /// Name of g, e.g. `A_5`.
    pub fn name(&self) -> String {
        format!("{}_{}", self.family, self.rank())
    }

    /// Name of the fixed-point subalgebra g_0.
    pub fn folded_type(&self) -> String {
        match self.kind() {
            TwistKind::Untwisted => self.name(),
            TwistKind::A => format!("C_{}", self.n),
            TwistKind::D => format!("B_{}", self.n),
            TwistKind::D4 => "G_2".to_string(),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (r={})", self.name(), self.r)
    }
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(i: usize, rank: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, Serialize)]
pub struct CartanData {
    /// A′, N×N.
    pub finite: IntMatrix,
    /// A over I (0-based storage of the 1-based index set).
    pub folded: IntMatrix,
    /// Ã over Ĩ = {0} ∪ I, row/column 0 being the extra node.
    pub extended: IntMatrix,
    #[serde(serialize_with = "ser_rationals")]
    pub d: Vec<Rational>,
    /// σ on {0..N-1}.
    pub sigma_perm: Vec<usize>,
}

fn ser_rationals<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// A′ for A_N or D_N, simply-laced, diagonal 2.
pub fn finite_cartan(spec: &AlgebraSpec) -> IntMatrix {
    let rank = spec.rank();
    let mut m = vec![vec![0; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match spec.family() {
        Family::A => (0..rank - 1).for_each(|i| link(i, i + 1)),
        Family::D => {
            // chain 1 - 2 - ... - (N-2), with N-1 and N both attached to N-2
            (0..rank - 3).for_each(|i| link(i, i + 1));
            link(rank - 3, rank - 2);
            link(rank - 3, rank - 1);
        }
    }
    m
}

pub fn sigma_perm(spec: &AlgebraSpec) -> Vec<usize> {
    let rank = spec.rank();
    match spec.kind() {
        TwistKind::Untwisted => (0..rank).collect(),
        TwistKind::A => (0..rank).map(|i| rank - 1 - i).collect(),
        TwistKind::D => {
            let mut p: Vec<usize> = (0..rank).collect();
            p.swap(rank - 2, rank - 1);
            p
        }
        // (h'_1, h'_2, h'_3, h'_4) ↦ (h'_3, h'_2, h'_4, h'_1)
        TwistKind::D4 => vec![2, 1, 3, 0],
    }
}

/// Representatives of the σ-orbits on the finite nodes, in the order of I.
pub fn folded_nodes(spec: &AlgebraSpec) -> Vec<usize> {
    match spec.kind() {
        TwistKind::Untwisted => (0..spec.rank()).collect(),
        TwistKind::A | TwistKind::D => (0..spec.n()).collect(),
        TwistKind::D4 => vec![0, 1],
    }
}

fn folded_cartan(spec: &AlgebraSpec) -> IntMatrix {
    if spec.kind() == TwistKind::Untwisted {
        return finite_cartan(spec);
    }
    let n = spec.folded_rank();
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    if spec.kind() == TwistKind::D4 {
        a[0][1] = -3;
        a[1][0] = -1;
        return a;
    }
    for i in 0..n - 1 {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    match spec.kind() {
        TwistKind::A => {
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        _ => {
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
        }
    }
    a
}

fn d_vector(spec: &AlgebraSpec) -> Vec<Rational> {
    let n = spec.folded_rank();
    match spec.kind() {
        TwistKind::Untwisted => vec![rat_int(1); n],
        TwistKind::A => (0..n)
            .map(|i| if i + 1 == n { rat_int(1) } else { rat(1, 2) })
            .collect(),
        TwistKind::D => (0..n)
            .map(|i| if i + 1 == n { rat(1, 2) } else { rat_int(1) })
            .collect(),
        TwistKind::D4 => vec![rat(1, 3), rat_int(1)],
    }
}

fn extended_cartan(spec: &AlgebraSpec, folded: &IntMatrix) -> IntMatrix {
    let n = folded.len();
    let mut m = vec![vec![0; n + 1]; n + 1];
    m[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            m[i + 1][j + 1] = folded[i][j];
        }
    }
    match spec.kind() {
        TwistKind::Untwisted => {
            // affine node pairs through −θ
            let theta = highest_root(spec);
            let cart = finite_cartan(spec);
            for j in 0..n {
                let v = -form_with(&cart, &theta, &Root::simple(j, n));
                m[0][j + 1] = v;
                m[j + 1][0] = v;
            }
        }
        TwistKind::A => {
            m[0][1] = -1;
            m[1][0] = -1;
        }
        TwistKind::D | TwistKind::D4 => {
            m[0][2] = -1;
            m[2][0] = -1;
        }
    }
    m
}

pub fn build_cartan(spec: &AlgebraSpec) -> CartanData {
    let folded = folded_cartan(spec);
    let extended = extended_cartan(spec, &folded);
    CartanData {
        finite: finite_cartan(spec),
        extended,
        folded,
        d: d_vector(spec),
        sigma_perm: sigma_perm(spec),
    }
}

fn form_with(cartan: &IntMatrix, a: &Root, b: &Root) -> i64 {
    let mut s = 0;
    for (i, &ai) in a.0.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.0.iter().enumerate() {
            s += ai * cartan[i][j] * bj;
        }
    }
    s
}

/// (a|b) through A′, normalised so that roots have length 2.
pub fn root_form(a: &Root, b: &Root, spec: &AlgebraSpec) -> i64 {
    form_with(&finite_cartan(spec), a, b)
}

/// Δ, positive roots first ordered by height then coordinates, followed by
/// their negatives in the same order.
pub fn enumerate_roots(spec: &AlgebraSpec) -> Vec<Root> {
    let cart = finite_cartan(spec);
    let rank = spec.rank();
    let simples: Vec<Root> = (0..rank).map(|i| Root::simple(i, rank)).collect();
    let mut known: HashSet<Root> = simples.iter().cloned().collect();
    let mut positive = simples.clone();
    let mut layer = simples.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for (i, alpha) in simples.iter().enumerate() {
                // α_i-string through β: β − pα_i, ..., β + qα_i with p − q = ⟨β, α_i⟩
                let mut p = 0;
                let mut down = beta.sub(alpha);
                while known.contains(&down) {
                    p += 1;
                    down = down.sub(alpha);
                }
                let q = p - form_with(&cart, beta, &simples[i]);
                let up = beta.add(alpha);
                if q > 0 && known.insert(up.clone()) {
                    next.push(up);
                }
            }
        }
        next.sort();
        positive.extend(next.iter().cloned());
        layer = next;
    }
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    let negative: Vec<Root> = positive.iter().map(Root::neg).collect();
    positive.into_iter().chain(negative).collect()
}

pub fn highest_root(spec: &AlgebraSpec) -> Root {
    enumerate_roots(spec)
        .into_iter()
        .max_by_key(Root::height)
        .expect("root system is non-empty")
}

pub fn sigma_root(a: &Root, spec: &AlgebraSpec) -> Root {
    let perm = sigma_perm(spec);
    let mut out = vec![0; a.0.len()];
    for (i, &c) in a.0.iter().enumerate() {
        out[perm[i]] = c;
    }
    Root(out)
}

/// α_i = (1/r) Σ_s α′_{σ^s(i)} as rational coordinates in the α′ basis.
pub fn folded_simple_roots(spec: &AlgebraSpec) -> Vec<Vec<Rational>> {
    let perm = sigma_perm(spec);
    let rank = spec.rank();
    let r = spec.r() as usize;
    folded_nodes(spec)
        .into_iter()
        .map(|i| {
            let mut v = vec![rat_int(0); rank];
            let mut node = i;
            for _ in 0..r {
                v[node] += rat(1, r as i64);
                node = perm[node];
            }
            v
        })
        .collect()
}

/// Bilinear form on rational coordinate vectors.
pub fn rational_form(a: &[Rational], b: &[Rational], spec: &AlgebraSpec) -> Rational {
    let cart = finite_cartan(spec);
    let mut s = rat_int(0);
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            if cart[i][j] != 0 {
                s += ai * bj * rat_int(cart[i][j]);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> AlgebraSpec {
        AlgebraSpec::new(Family::A, 3, 2).unwrap()
    }
    fn d4_tri() -> AlgebraSpec {
        AlgebraSpec::new(Family::D, 4, 3).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(AlgebraSpec::new(Family::A, 3, 5).is_err());
        assert!(AlgebraSpec::new(Family::A, 3, 3).is_err());
        assert!(AlgebraSpec::new(Family::D, 5, 3).is_err());
        assert!(AlgebraSpec::new(Family::D, 1, 2).is_err());
        assert_eq!(AlgebraSpec::new(Family::D, 3, 3).unwrap(), d4_tri());
        assert_eq!(AlgebraSpec::new(Family::A, 2, 2).unwrap().rank(), 3);
    }

    #[test]
    fn g2_folded_matrix() {
        let c = build_cartan(&d4_tri());
        assert_eq!(c.folded, vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(c.d, vec![rat(1, 3), rat_int(1)]);
    }

    #[test]
    fn a5_data() {
        let c = build_cartan(&a5());
        assert_eq!(c.d, vec![rat(1, 2), rat(1, 2), rat_int(1)]);
        // σ(2) = 4 in 1-based labels
        assert_eq!(c.sigma_perm[1], 3);
        assert_eq!(
            c.folded,
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            c.extended,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -2],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn root_counts() {
        assert_eq!(enumerate_roots(&a5()).len(), 30);
        assert_eq!(enumerate_roots(&d4_tri()).len(), 24);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(&a5()), Root(vec![1, 1, 1, 1, 1]));
        assert_eq!(highest_root(&d4_tri()), Root(vec![1, 2, 1, 1]));
        let d5 = AlgebraSpec::new(Family::D, 4, 2).unwrap();
        assert_eq!(highest_root(&d5), Root(vec![1, 2, 2, 1, 1]));
        let roots = enumerate_roots(&a5());
        let theta = highest_root(&a5());
        assert!(!roots.contains(&theta.add(&Root::simple(0, 5))));
    }

    #[test]
    fn forms() {
        let s = a5();
        assert_eq!(root_form(&Root::simple(0, 5), &Root::simple(0, 5), &s), 2);
        assert_eq!(root_form(&Root::simple(0, 5), &Root::simple(1, 5), &s), -1);
        let t = highest_root(&d4_tri());
        assert_eq!(root_form(&t, &t, &d4_tri()), 2);
    }

    #[test]
    fn sigma_on_roots() {
        assert_eq!(sigma_root(&Root::simple(0, 5), &a5()), Root::simple(4, 5));
        for spec in [a5(), d4_tri(), AlgebraSpec::new(Family::D, 3, 2).unwrap()] {
            let theta = highest_root(&spec);
            assert_eq!(sigma_root(&theta, &spec), theta);
        }
    }

    #[test]
    fn folded_simple_root_examples() {
        let f = folded_simple_roots(&a5());
        assert_eq!(
            f[0],
            vec![rat(1, 2), rat_int(0), rat_int(0), rat_int(0), rat(1, 2)]
        );
        let g = folded_simple_roots(&d4_tri());
        assert_eq!(g[1], vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn d3_is_built_from_d_pattern() {
        let d3 = AlgebraSpec::new(Family::D, 2, 2).unwrap();
        let c = build_cartan(&d3);
        assert_eq!(
            c.finite,
            vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]]
        );
        assert_eq!(c.folded, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(enumerate_roots(&d3).len(), 12);
    }
}
