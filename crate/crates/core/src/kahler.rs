//! Central terms: Kähler differentials of A = C[s^±1, t^±1] modulo exact forms.
//!
//! Every class \overline{b·da} is reduced to the basis
//! Bs(j, m) = \overline{s^{j−1} t^m ds} (m ≠ 0), Bt(j) = \overline{s^j t^{−1} dt}
//! and C0 = \overline{s^{−1} ds}.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{rat, CycNum};
use crate::error::Result;

/// The monomial s^s t^t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMono {
    pub s: i64,
    pub t: i64,
}

impl LaurentMono {
    pub const ONE: LaurentMono = LaurentMono { s: 0, t: 0 };

    pub fn new(s: i64, t: i64) -> Self {
        LaurentMono { s, t }
    }
}

impl std::ops::Mul for LaurentMono {
    type Output = LaurentMono;

    fn mul(self, other: LaurentMono) -> LaurentMono {
        LaurentMono::new(self.s + other.s, self.t + other.t)
    }
}

impl fmt::Display for LaurentMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{}t^{}", self.s, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KahlerSym {
    C0,
    Bt(i64),
    /// m is never zero.
    Bs(i64, i64),
}

impl KahlerSym {
    /// Exponent of s in the product b·a that produced the symbol.
    pub fn s_degree(&self) -> i64 {
        match *self {
            KahlerSym::C0 => 0,
            KahlerSym::Bt(j) | KahlerSym::Bs(j, _) => j,
        }
    }
}

impl fmt::Display for KahlerSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KahlerSym::C0 => write!(f, "C0"),
            KahlerSym::Bt(j) => write!(f, "[s^{j}t^-1 dt]"),
            KahlerSym::Bs(j, m) => write!(f, "[s^{}t^{m} ds]", j - 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KahlerElem {
    terms: BTreeMap<KahlerSym, CycNum>,
}

impl KahlerElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn sym(s: KahlerSym, c: CycNum) -> Self {
        let mut k = Self::zero();
        k.add_term(s, c);
        k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KahlerSym, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &KahlerSym) -> Option<&CycNum> {
        self.terms.get(s)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: KahlerSym, c: CycNum) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn kadd(&self, other: &KahlerElem) -> KahlerElem {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn kscale(&self, c: &CycNum) -> KahlerElem {
        let mut out = KahlerElem::zero();
        for (s, x) in self.terms() {
            out.add_term(*s, x * c);
        }
        out
    }

    pub fn sub(&self, other: &KahlerElem) -> KahlerElem {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(*s, -c);
        }
        out
    }

    /// Reads rational coefficients in the field of order `r`.
    pub fn with_order(&self, r: u8) -> Result<KahlerElem> {
        let mut out = KahlerElem::zero();
        for (s, c) in self.terms() {
            out.add_term(*s, c.with_order(r)?);
        }
        Ok(out)
    }
}

impl fmt::Display for KahlerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(s, c)| format!("{c}*{s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for KahlerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// \overline{s^p t^q ds} in the basis.
fn reduce_ds(p: i64, q: i64, c: CycNum, out: &mut KahlerElem) {
    if q != 0 {
        out.add_term(KahlerSym::Bs(p + 1, q), c);
    } else if p == -1 {
        out.add_term(KahlerSym::C0, c);
    }
}

/// \overline{s^p t^q dt} in the basis.
fn reduce_dt(p: i64, q: i64, c: CycNum, out: &mut KahlerElem) {
    if q == -1 {
        out.add_term(KahlerSym::Bt(p), c);
    } else if p != 0 {
        // d(s^p t^{q+1}) = p s^{p−1} t^{q+1} ds + (q+1) s^p t^q dt is exact
        reduce_ds(p - 1, q + 1, c.scale(&rat(-p, q + 1)), out);
    }
}

/// \overline{b·da} with coefficients in field order `r`.
pub fn reduce_b_da_in(b: LaurentMono, a: LaurentMono, r: u8) -> KahlerElem {
    let mut out = KahlerElem::zero();
    let p = b.s + a.s;
    let q = b.t + a.t;
    // d(s^k t^l) = k s^{k−1} t^l ds + l s^k t^{l−1} dt
    if a.s != 0 {
        reduce_ds(p - 1, q, CycNum::from_int(a.s, r), &mut out);
    }
    if a.t != 0 {
        reduce_dt(p, q - 1, CycNum::from_int(a.t, r), &mut out);
    }
    out
}

/// \overline{b·da} over Q.
pub fn reduce_b_da(b: LaurentMono, a: LaurentMono) -> KahlerElem {
    reduce_b_da_in(b, a, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: i64, t: i64) -> LaurentMono {
        LaurentMono::new(s, t)
    }

    #[test]
    fn kahlercalc_first_identity_example() {
        let k = reduce_b_da(m(-2, 0), m(2, 0));
        assert_eq!(k, KahlerElem::sym(KahlerSym::C0, CycNum::from_int(2, 1)));
    }

    #[test]
    fn kahlercalc_second_identity_example() {
        for k in [-3, 1, 2, 5] {
            let got = reduce_b_da(m(-k, -1), m(k, 1));
            let mut want = KahlerElem::sym(KahlerSym::C0, CycNum::from_int(k, 1));
            want.add_term(KahlerSym::Bt(0), CycNum::one(1));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn exact_forms_vanish() {
        assert!(reduce_b_da(m(0, 0), m(1, 1)).is_zero());
    }

    #[test]
    fn bracket_pairing_rule() {
        // \overline{t ds} = Bs(1, 1)
        let k = reduce_b_da(m(0, 1), m(1, 0));
        assert_eq!(k, KahlerElem::sym(KahlerSym::Bs(1, 1), CycNum::one(1)));
    }

    #[test]
    fn linear_ops() {
        let c0 = KahlerElem::sym(KahlerSym::C0, CycNum::one(1));
        assert!(c0.kadd(&c0.kscale(&CycNum::from_int(-1, 1))).is_zero());
        let b =
            KahlerElem::sym(KahlerSym::Bs(1, 1), CycNum::one(1)).kscale(&CycNum::from_int(2, 1));
        assert_eq!(b.coeff(&KahlerSym::Bs(1, 1)), Some(&CycNum::from_int(2, 1)));
        let two = KahlerElem::sym(KahlerSym::Bt(2), CycNum::one(1))
            .kadd(&KahlerElem::sym(KahlerSym::Bs(2, -1), CycNum::one(1)));
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(KahlerSym::C0.to_string(), "C0");
        assert_eq!(KahlerSym::Bs(2, -1).to_string(), "[s^1t^-1 ds]");
        assert_eq!(KahlerSym::Bt(0).to_string(), "[s^0t^-1 dt]");
    }
}
