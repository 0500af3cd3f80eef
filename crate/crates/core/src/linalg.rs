//! Incremental row echelon form over the coefficient field.

use std::collections::BTreeMap;

use crate::coeff::CycNum;
use crate::liealg::LieElem;

type Row = BTreeMap<usize, CycNum>;

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    /// Rows keyed by pivot column; each row has pivot coefficient 1.
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Row) -> Row {
        loop {
            let hit = v
                .iter()
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(&k, c)| (k, c.clone()));
            let Some((pivot, c)) = hit else { return v };
            for (&k, x) in &self.rows[&pivot] {
                let t = x * &c;
                let entry = v.entry(k).or_insert_with(|| CycNum::zero(c.order()));
                *entry = &*entry - &t;
                if entry.is_zero() {
                    v.remove(&k);
                }
            }
        }
    }

    fn insert_row(&mut self, v: Row) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero pivot");
        let v: Row = v.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.rows.insert(pivot, v);
        true
    }

    /// Adds `x` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, x: LieElem) -> bool {
        self.insert_row(x.terms().map(|(k, c)| (k, c.clone())).collect())
    }

    pub fn contains(&self, x: &LieElem) -> bool {
        self.reduce(x.terms().map(|(k, c)| (k, c.clone())).collect())
            .is_empty()
    }
}
