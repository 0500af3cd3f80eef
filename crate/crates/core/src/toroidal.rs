//! The loop algebra L(g) = g ⊗ A, the twisted automorphism σ̄, and the
//! toroidal algebra T(g) = L(g, σ) ⊕ K.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{rat, CycNum};
use crate::error::{Error, Result};
use crate::kahler::{reduce_b_da_in, KahlerElem};
use crate::liealg::{LieAlgebra, LieElem};
use crate::rootdata::AlgebraSpec;

pub use crate::kahler::LaurentMono;

/// Sparse g-valued Laurent polynomial, grouped by monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopElem {
    spec: AlgebraSpec,
    terms: BTreeMap<LaurentMono, LieElem>,
}

impl LoopElem {
    pub fn zero(spec: AlgebraSpec) -> Self {
        LoopElem {
            spec,
            terms: BTreeMap::new(),
        }
    }

    /// x ⊗ s^j t^m.
    pub fn mono(x: LieElem, j: i64, m: i64) -> Self {
        let mut out = Self::zero(*x.spec());
        out.add_at(LaurentMono::new(j, m), &x);
        out
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMono, &LieElem)> {
        self.terms.iter()
    }

    pub fn at(&self, mono: &LaurentMono) -> Option<&LieElem> {
        self.terms.get(mono)
    }

    /// Number of (basis, monomial) terms.
    pub fn len(&self) -> usize {
        self.terms.values().map(LieElem::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_at(&mut self, mono: LaurentMono, x: &LieElem) {
        if x.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(mono)
            .or_insert_with(|| LieElem::zero(self.spec));
        *slot = slot.add(x);
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn try_add(&self, other: &LoopElem) -> Result<LoopElem> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.clone();
        for (m, x) in other.terms() {
            out.add_at(*m, x);
        }
        Ok(out)
    }

    pub fn add(&self, other: &LoopElem) -> LoopElem {
        self.try_add(other).expect("elements of different algebras")
    }

    pub fn scale(&self, c: &CycNum) -> LoopElem {
        let mut out = LoopElem::zero(self.spec);
        for (m, x) in self.terms() {
            out.add_at(*m, &x.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &LoopElem) -> LoopElem {
        self.add(&other.scale(&CycNum::from_int(-1, self.spec.r())))
    }
}

impl fmt::Debug for LoopElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// (loop part, central part). `twisted` records that the element was
/// validated as σ̄-fixed with central s-degrees in rZ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ToroidalElem {
    pub loop_part: LoopElem,
    pub central: KahlerElem,
}

impl ToroidalElem {
    pub fn zero(spec: AlgebraSpec) -> Self {
        ToroidalElem {
            loop_part: LoopElem::zero(spec),
            central: KahlerElem::zero(),
        }
    }

    pub fn new(loop_part: LoopElem, central: KahlerElem) -> Self {
        ToroidalElem { loop_part, central }
    }

    pub fn from_loop(loop_part: LoopElem) -> Self {
        ToroidalElem {
            loop_part,
            central: KahlerElem::zero(),
        }
    }

    pub fn central(spec: AlgebraSpec, central: KahlerElem) -> Self {
        ToroidalElem {
            loop_part: LoopElem::zero(spec),
            central,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.loop_part.spec()
    }

    pub fn is_zero(&self) -> bool {
        self.loop_part.is_zero() && self.central.is_zero()
    }

    pub fn add(&self, other: &ToroidalElem) -> ToroidalElem {
        ToroidalElem {
            loop_part: self.loop_part.add(&other.loop_part),
            central: self.central.kadd(&other.central),
        }
    }

    pub fn sub(&self, other: &ToroidalElem) -> ToroidalElem {
        ToroidalElem {
            loop_part: self.loop_part.sub(&other.loop_part),
            central: self.central.sub(&other.central),
        }
    }

    pub fn scale(&self, c: &CycNum) -> ToroidalElem {
        ToroidalElem {
            loop_part: self.loop_part.scale(c),
            central: self.central.kscale(c),
        }
    }

    pub fn scale_int(&self, k: i64) -> ToroidalElem {
        self.scale(&CycNum::from_int(k, self.spec().r()))
    }
}

impl fmt::Debug for ToroidalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?})", self.loop_part, self.central)
    }
}

/// Operations of L(g) and T(g) for one algebra.
#[derive(Debug, Clone)]
pub struct ToroidalAlgebra {
    lie: LieAlgebra,
}

impl ToroidalAlgebra {
    pub fn new(spec: AlgebraSpec) -> Self {
        ToroidalAlgebra {
            lie: LieAlgebra::new(spec),
        }
    }

    pub fn from_lie(lie: LieAlgebra) -> Self {
        ToroidalAlgebra { lie }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.lie.spec()
    }

    fn r(&self) -> u8 {
        self.spec().r()
    }

    fn check(&self, x: &LoopElem) -> Result<()> {
        if x.spec() == self.spec() {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn try_loop_bracket(&self, x: &LoopElem, y: &LoopElem) -> Result<LoopElem> {
        self.check(x)?;
        self.check(y)?;
        let mut out = LoopElem::zero(*self.spec());
        for (a, u) in x.terms() {
            for (b, v) in y.terms() {
                out.add_at(*a * *b, &self.lie.bracket(u, v));
            }
        }
        Ok(out)
    }

    pub fn loop_bracket(&self, x: &LoopElem, y: &LoopElem) -> LoopElem {
        self.try_loop_bracket(x, y)
            .expect("elements of a different algebra")
    }

    /// σ̄(x ⊗ s^j t^m) = ω^{−j} σ(x) ⊗ s^j t^m.
    pub fn sigma_bar(&self, x: &LoopElem) -> LoopElem {
        let mut out = LoopElem::zero(*self.spec());
        for (m, u) in x.terms() {
            let w = CycNum::omega_pow(-m.s, self.r());
            out.add_at(*m, &self.lie.sigma_apply(u).scale(&w));
        }
        out
    }

    /// Projection (1/r) Σ_k σ̄^k onto L(g, σ).
    pub fn fix_project(&self, x: &LoopElem) -> LoopElem {
        let r = self.r();
        let mut acc = LoopElem::zero(*self.spec());
        let mut cur = x.clone();
        for _ in 0..r {
            acc = acc.add(&cur);
            cur = self.sigma_bar(&cur);
        }
        acc.scale(&CycNum::from_rational(rat(1, r as i64), r))
    }

    pub fn is_fixed(&self, x: &LoopElem) -> bool {
        self.sigma_bar(x) == *x
    }

    /// Checks the conditions for membership in T(g): σ̄-fixed loop part and
    /// central symbols of s-degree ≡ 0 mod r.
    pub fn validate_twisted(&self, x: &ToroidalElem) -> Result<()> {
        self.check(&x.loop_part)?;
        if !self.is_fixed(&x.loop_part) {
            return Err(Error::NotFixed(format!("{:?}", x.loop_part)));
        }
        self.check_central_grading(&x.central)
    }

    pub fn check_central_grading(&self, k: &KahlerElem) -> Result<()> {
        let r = self.r() as i64;
        match k.terms().find(|(s, _)| s.s_degree().rem_euclid(r) != 0) {
            Some((s, _)) => Err(Error::NotFixed(format!("central symbol {s}"))),
            None => Ok(()),
        }
    }

    /// Wraps an element of L(g, σ) ⊕ K after validating it.
    pub fn twisted(&self, loop_part: LoopElem, central: KahlerElem) -> Result<ToroidalElem> {
        let x = ToroidalElem::new(loop_part, central);
        self.validate_twisted(&x)?;
        Ok(x)
    }

    /// The 2-cocycle (x ⊗ a, y ⊗ b) ↦ (x|y)·\overline{b da}.
    pub fn cocycle(&self, x: &LoopElem, y: &LoopElem) -> KahlerElem {
        let r = self.r();
        let mut out = KahlerElem::zero();
        for (a, u) in x.terms() {
            for (b, v) in y.terms() {
                let c = self.lie.inv_form(u, v);
                if c.is_zero() {
                    continue;
                }
                out = out.kadd(&reduce_b_da_in(*b, *a, r).kscale(&c));
            }
        }
        out
    }

    /// [x ⊗ a, y ⊗ b] = [x, y] ⊗ ab + (x|y)·\overline{b da}; K is central.
    pub fn try_bracket(&self, x: &ToroidalElem, y: &ToroidalElem) -> Result<ToroidalElem> {
        let loop_part = self.try_loop_bracket(&x.loop_part, &y.loop_part)?;
        let central = self.cocycle(&x.loop_part, &y.loop_part);
        Ok(ToroidalElem { loop_part, central })
    }

    pub fn bracket(&self, x: &ToroidalElem, y: &ToroidalElem) -> ToroidalElem {
        self.try_bracket(x, y)
            .expect("elements of a different algebra")
    }

    pub fn render_loop(&self, x: &LoopElem) -> String {
        let parts: Vec<String> = x
            .terms()
            .flat_map(|(m, u)| {
                u.terms()
                    .map(move |(i, c)| format!("{c}*{}*{m}", self.lie.basis_label(i)))
            })
            .collect();
        parts.join(" + ")
    }

    pub fn render(&self, x: &ToroidalElem) -> String {
        let mut parts = Vec::new();
        if !x.loop_part.is_zero() {
            parts.push(self.render_loop(&x.loop_part));
        }
        if !x.central.is_zero() {
            parts.push(x.central.to_string());
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
