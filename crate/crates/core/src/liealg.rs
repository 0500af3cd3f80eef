//! The finite simple Lie algebra g in a Chevalley basis.
//!
//! Basis: h′_1..h′_N followed by one root vector e_α per α ∈ Δ. Structure
//! constants come from a bimultiplicative sign function ε on the root lattice
//! (fixed by orienting every Dynkin edge from lower to higher index), with
//! root vectors rescaled so that [e_α, e_{−α}] = h_α for every root. With
//! that normalisation (e_α | e_{−α}) = 1 and e′_i = e_{α_i}, f′_i = e_{−α_i}
//! form Chevalley triples.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use crate::coeff::{rat, CycNum};
use crate::error::{Error, Result};
use crate::rootdata::{
    build_cartan, enumerate_roots, folded_nodes, highest_root, AlgebraSpec, CartanData, Root,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    /// h′_i, 1-based.
    Cartan(usize),
    RootVec(Root),
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Cartan(i) => write!(f, "h{i}"),
            BasisIndex::RootVec(r) => write!(f, "e{r}"),
        }
    }
}

type Sparse = SmallVec<[(usize, i64); 4]>;

/// Sparse element of g. Basis positions are the algebra's internal indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElem {
    spec: AlgebraSpec,
    terms: BTreeMap<usize, CycNum>,
}

impl LieElem {
    pub fn zero(spec: AlgebraSpec) -> Self {
        LieElem {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(spec: AlgebraSpec, idx: usize) -> Self {
        Self::term(spec, idx, CycNum::one(spec.r()))
    }

    pub fn term(spec: AlgebraSpec, idx: usize, c: CycNum) -> Self {
        let mut x = Self::zero(spec);
        x.add_term(idx, c);
        x
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycNum)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, idx: usize) -> CycNum {
        self.terms
            .get(&idx)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.spec.r()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: usize, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &LieElem) -> Result<LieElem> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &LieElem) -> LieElem {
        self.try_add(other).expect("elements of different algebras")
    }

    pub fn sub(&self, other: &LieElem) -> LieElem {
        self.add(&other.scale(&CycNum::from_int(-1, self.spec.r())))
    }

    pub fn scale(&self, c: &CycNum) -> LieElem {
        let mut out = LieElem::zero(self.spec);
        if c.is_zero() {
            return out;
        }
        for (i, x) in self.terms() {
            out.terms.insert(i, x * c);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> LieElem {
        self.scale(&CycNum::from_int(k, self.spec.r()))
    }

    pub fn neg(&self) -> LieElem {
        self.scale_int(-1)
    }
}

impl fmt::Debug for LieElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    spec: AlgebraSpec,
    cartan: CartanData,
    roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    table: Vec<Vec<Sparse>>,
    /// Nonzero values of the invariant form: partner index and value.
    form: Vec<Sparse>,
    sigma: Vec<Sparse>,
    theta: Root,
    e0: LieElem,
    f0: LieElem,
    h0: LieElem,
    theta_sign_flipped: bool,
}

/// ε(α, β) = (−1)^{Σ a_i b_j M_ij} with M_ii = 1 and M_ij = 1 for i < j adjacent.
fn epsilon(a: &Root, b: &Root, finite: &[Vec<i64>]) -> i64 {
    let mut parity = 0i64;
    for (i, &ai) in a.0.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.0.iter().enumerate() {
            let m = i == j || (i < j && finite[i][j] == -1);
            if m {
                parity += ai * bj;
            }
        }
    }
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn root_sign(a: &Root) -> i64 {
    if a.is_positive() {
        1
    } else {
        -1
    }
}

impl LieAlgebra {
    pub fn new(spec: AlgebraSpec) -> LieAlgebra {
        let cartan = build_cartan(&spec);
        let roots = enumerate_roots(&spec);
        let rank = spec.rank();
        let root_index: HashMap<Root, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), rank + k))
            .collect();
        let dim = rank + roots.len();
        let a = &cartan.finite;

        let mut table = vec![vec![Sparse::new(); dim]; dim];
        for (ka, alpha) in roots.iter().enumerate() {
            let ia = rank + ka;
            for i in 0..rank {
                // α(h′_i) = Σ_j c_j a′_ij
                let v: i64 = (0..rank).map(|j| alpha.0[j] * a[i][j]).sum();
                if v != 0 {
                    table[i][ia].push((ia, v));
                    table[ia][i].push((ia, -v));
                }
            }
            for (kb, beta) in roots.iter().enumerate() {
                let ib = rank + kb;
                let sum = alpha.add(beta);
                if sum.is_zero() {
                    for (j, &c) in alpha.0.iter().enumerate() {
                        if c != 0 {
                            table[ia][ib].push((j, c));
                        }
                    }
                } else if let Some(&ic) = root_index.get(&sum) {
                    // Kac basis E_α with [E_α, E_{−α}] = −α, rescaled by sign(α)
                    let n = root_sign(alpha)
                        * root_sign(beta)
                        * root_sign(&sum)
                        * epsilon(alpha, beta, a);
                    table[ia][ib].push((ic, n));
                }
            }
        }

        let mut form = vec![Sparse::new(); dim];
        for (i, row) in a.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    form[i].push((j, x));
                }
            }
        }
        for (k, alpha) in roots.iter().enumerate() {
            form[rank + k].push((root_index[&alpha.neg()], 1));
        }

        let theta = highest_root(&spec);
        let placeholder = LieElem::zero(spec);
        let mut alg = LieAlgebra {
            spec,
            cartan,
            roots,
            root_index,
            table,
            form,
            sigma: Vec::new(),
            theta: theta.clone(),
            e0: placeholder.clone(),
            f0: placeholder.clone(),
            h0: placeholder,
            theta_sign_flipped: false,
        };
        alg.sigma = alg.build_sigma();

        let mut e0 = LieElem::basis(spec, alg.root_index[&theta.neg()]);
        let f0 = LieElem::basis(spec, alg.root_index[&theta]);
        let mut h0 = alg.bracket(&e0, &f0);
        if alg.bracket(&h0, &e0) != e0.scale_int(2) {
            e0 = e0.neg();
            h0 = alg.bracket(&e0, &f0);
            alg.theta_sign_flipped = true;
        }
        alg.e0 = e0;
        alg.f0 = f0;
        alg.h0 = h0;
        alg
    }

    /// σ on the basis: generators are permuted, and every other root vector is
    /// written as [e_{±α_i}, e_β] with the lowest admissible i and mapped
    /// through that word.
    fn build_sigma(&self) -> Vec<Sparse> {
        let rank = self.rank();
        let perm = &self.cartan.sigma_perm;
        let mut images: Vec<Option<LieElem>> = vec![None; self.dim()];
        for i in 0..rank {
            images[i] = Some(LieElem::basis(self.spec, perm[i]));
            for sign in [1, -1] {
                let src = Root::simple(i, rank);
                let dst = Root::simple(perm[i], rank);
                let (src, dst) = if sign == 1 {
                    (src, dst)
                } else {
                    (src.neg(), dst.neg())
                };
                images[self.root_index[&src]] =
                    Some(LieElem::basis(self.spec, self.root_index[&dst]));
            }
        }
        // roots are stored by increasing height within each sign
        for alpha in self.roots.iter() {
            let idx = self.root_index[alpha];
            if images[idx].is_some() {
                continue;
            }
            let sign = root_sign(alpha);
            let (i, beta) = (0..rank)
                .find_map(|i| {
                    let step = Root::simple(i, rank);
                    let step = if sign == 1 { step } else { step.neg() };
                    let beta = alpha.sub(&step);
                    self.root_index.get(&beta).map(|_| (step, beta))
                })
                .expect("non-simple root decomposes");
            let is = self.root_index[&i];
            let ib = self.root_index[&beta];
            let n = self.table[is][ib]
                .iter()
                .find(|(k, _)| *k == idx)
                .map(|&(_, c)| c)
                .expect("structure constant present");
            let img = self
                .bracket(
                    images[is].as_ref().expect("simple image"),
                    images[ib].as_ref().expect("lower height image"),
                )
                .scale_int(n);
            images[idx] = Some(img);
        }
        images
            .into_iter()
            .map(|img| {
                img.expect("image computed")
                    .terms()
                    .map(|(k, c)| {
                        let q = c.as_rational().expect("rational image");
                        assert!(q.is_integer());
                        (k, i64::try_from(q.numer()).expect("small coefficient"))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn order(&self) -> u8 {
        self.spec.r()
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn index_of(&self, b: &BasisIndex) -> Result<usize> {
        match b {
            BasisIndex::Cartan(i) if (1..=self.rank()).contains(i) => Ok(i - 1),
            BasisIndex::RootVec(r) => self
                .root_index
                .get(r)
                .copied()
                .ok_or_else(|| Error::Index(format!("{r} is not a root"))),
            BasisIndex::Cartan(i) => Err(Error::Index(format!("h{i}"))),
        }
    }

    pub fn basis_label(&self, idx: usize) -> BasisIndex {
        if idx < self.rank() {
            BasisIndex::Cartan(idx + 1)
        } else {
            BasisIndex::RootVec(self.roots[idx - self.rank()].clone())
        }
    }

    pub fn basis(&self, idx: usize) -> LieElem {
        LieElem::basis(self.spec, idx)
    }

    pub fn root_vector(&self, root: &Root) -> Result<LieElem> {
        self.index_of(&BasisIndex::RootVec(root.clone()))
            .map(|i| self.basis(i))
    }

    /// h′_i, e′_i, f′_i with 1-based i.
    pub fn h(&self, i: usize) -> LieElem {
        self.basis(i - 1)
    }

    pub fn e(&self, i: usize) -> LieElem {
        self.basis(self.root_index[&Root::simple(i - 1, self.rank())])
    }

    pub fn f(&self, i: usize) -> LieElem {
        self.basis(self.root_index[&Root::simple(i - 1, self.rank()).neg()])
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i][j]
    }

    fn check(&self, x: &LieElem) -> Result<()> {
        if *x.spec() == self.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn try_bracket(&self, x: &LieElem, y: &LieElem) -> Result<LieElem> {
        self.check(x)?;
        self.check(y)?;
        let mut out = LieElem::zero(self.spec);
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let entries = &self.table[i][j];
                if entries.is_empty() {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in entries {
                    out.add_term(k, ab.scale_int(c));
                }
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &LieElem, y: &LieElem) -> LieElem {
        self.try_bracket(x, y)
            .expect("elements of a different algebra")
    }

    pub fn try_inv_form(&self, x: &LieElem, y: &LieElem) -> Result<CycNum> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = CycNum::zero(self.order());
        for (i, a) in x.terms() {
            for &(j, v) in &self.form[i] {
                if let Some(b) = y.terms.get(&j) {
                    acc += &(a * b).scale_int(v);
                }
            }
        }
        Ok(acc)
    }

    pub fn inv_form(&self, x: &LieElem, y: &LieElem) -> CycNum {
        self.try_inv_form(x, y)
            .expect("elements of a different algebra")
    }

    /// Nonzero form partners of a basis vector.
    pub fn form_partners(&self, idx: usize) -> &[(usize, i64)] {
        &self.form[idx]
    }

    pub fn sigma_apply(&self, x: &LieElem) -> LieElem {
        let mut out = LieElem::zero(self.spec);
        for (i, c) in x.terms() {
            for &(k, v) in &self.sigma[i] {
                out.add_term(k, c.scale_int(v));
            }
        }
        out
    }

    pub fn sigma_pow(&self, x: &LieElem, k: usize) -> LieElem {
        (0..k).fold(x.clone(), |acc, _| self.sigma_apply(&acc))
    }

    /// Signed-permutation image of a basis vector under σ.
    pub fn sigma_basis(&self, idx: usize) -> &[(usize, i64)] {
        &self.sigma[idx]
    }

    /// Projection onto g_j = {x : σx = ω^j x}: (1/r) Σ_k ω^{−jk} σ^k(x).
    pub fn grade_component(&self, x: &LieElem, j: i64) -> LieElem {
        let r = self.order();
        let mut acc = LieElem::zero(self.spec);
        let mut cur = x.clone();
        for k in 0..r as i64 {
            acc = acc.add(&cur.scale(&CycNum::omega_pow(-j * k, r)));
            cur = self.sigma_apply(&cur);
        }
        acc.scale(&CycNum::from_rational(rat(1, r as i64), r))
    }

    /// Chevalley generators (e_i, f_i, h_i) of g_0, i ∈ I.
    pub fn folded_generators(&self) -> Vec<(LieElem, LieElem, LieElem)> {
        let perm = &self.cartan.sigma_perm;
        folded_nodes(&self.spec)
            .into_iter()
            .map(|i| {
                let mut orbit = vec![i];
                let mut k = perm[i];
                while k != i {
                    orbit.push(k);
                    k = perm[k];
                }
                let sum = |f: &dyn Fn(usize) -> LieElem| {
                    orbit
                        .iter()
                        .fold(LieElem::zero(self.spec), |acc, &j| acc.add(&f(j + 1)))
                };
                (
                    sum(&|j| self.e(j)),
                    sum(&|j| self.f(j)),
                    sum(&|j| self.h(j)),
                )
            })
            .collect()
    }

    /// (e′_0, f′_0, h′_0): e′_0 spans the −θ root space, f′_0 the θ root space,
    /// h′_0 = [e′_0, f′_0] and [h′_0, e′_0] = 2e′_0.
    pub fn theta_triple(&self) -> (&LieElem, &LieElem, &LieElem) {
        (&self.e0, &self.f0, &self.h0)
    }

    /// Whether e′_0 had to be taken as −e_{−θ} to satisfy the sl_2 relations.
    pub fn theta_sign_flipped(&self) -> bool {
        self.theta_sign_flipped
    }

    /// The scalar c with σ(e_θ) = c·e_θ.
    pub fn sigma_theta_sign(&self) -> i64 {
        let idx = self.root_index[&self.theta];
        match self.sigma[idx].as_slice() {
            [(k, c)] if *k == idx => *c,
            _ => 0,
        }
    }

    /// Dimension of g_j, computed as the rank of the projection on the basis.
    pub fn graded_dim(&self, j: i64) -> usize {
        let mut ech = crate::linalg::Echelon::new();
        for idx in 0..self.dim() {
            ech.insert(self.grade_component(&self.basis(idx), j));
        }
        ech.rank()
    }

    pub fn render(&self, x: &LieElem) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .map(|(i, c)| format!("{c}*{}", self.basis_label(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
