//! Window-scale surjectivity test for π̄: how much of each slice
//! g_{j mod r} ⊗ s^j t^m is spanned by iterated brackets of generator images.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exec::Exec;
use crate::liealg::LieElem;
use crate::linalg::Echelon;
use crate::presentation::{GenSym, Presentation};

#[derive(Debug, Clone, Serialize)]
pub struct SliceReport {
    pub j: i64,
    pub m: i64,
    pub achieved: usize,
    pub target: usize,
}

impl SliceReport {
    pub fn full(&self) -> bool {
        self.achieved == self.target
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanReport {
    pub j_window: i64,
    pub m_window: i64,
    pub word_length: usize,
    pub slices: Vec<SliceReport>,
}

impl SpanReport {
    pub fn all_full(&self) -> bool {
        self.slices.iter().all(SliceReport::full)
    }
}

#[derive(Default, Clone)]
struct Level {
    ech: Echelon,
    basis: Vec<LieElem>,
}

impl Level {
    fn push(&mut self, x: LieElem) {
        if self.ech.insert(x.clone()) {
            self.basis.push(x);
        }
    }
}

impl Presentation {
    /// Homogeneous generator images (π̄ of every admissible non-central
    /// generator with |k| ≤ j_window), keyed by bidegree.
    fn span_generators(&self, j_window: i64) -> Vec<((i64, i64), LieElem)> {
        self.generators(j_window)
            .into_iter()
            .filter(|g| *g != GenSym::Central)
            .flat_map(|g| {
                let img = self.pibar_image(&g).expect("admissible");
                img.terms()
                    .map(|(mono, x)| ((mono.s, mono.t), x.clone()))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Spans of right-normed brackets [g_ℓ, [..., [g_2, g_1]]] with ℓ ≤
    /// `word_length` letters, restricted to slices |j| ≤ j_window and
    /// |m| ≤ m_window.
    pub fn span_check(
        &self,
        j_window: i64,
        m_window: i64,
        word_length: usize,
        exec: Exec,
    ) -> SpanReport {
        let lie = self.algebra().lie();
        let r = self.spec().r() as i64;
        let gens = self.span_generators(j_window);
        let reach = |(j, m): (i64, i64), left: usize| {
            let left = left as i64;
            j.abs() <= j_window + left * j_window && m.abs() <= m_window + left
        };

        let mut level: BTreeMap<(i64, i64), Level> = BTreeMap::new();
        for (deg, x) in &gens {
            if reach(*deg, word_length.saturating_sub(1)) {
                level.entry(*deg).or_default().push(x.clone());
            }
        }
        let mut total: BTreeMap<(i64, i64), Level> = level.clone();

        for len in 2..=word_length {
            let left = word_length - len;
            let mut targets: BTreeMap<(i64, i64), Vec<(&LieElem, &LieElem)>> = BTreeMap::new();
            for (gdeg, g) in &gens {
                for (deg, lvl) in &level {
                    let t = (deg.0 + gdeg.0, deg.1 + gdeg.1);
                    if !reach(t, left) {
                        continue;
                    }
                    let slot = targets.entry(t).or_default();
                    slot.extend(lvl.basis.iter().map(|v| (g, v)));
                }
            }
            let targets: Vec<_> = targets.into_iter().collect();
            let built = exec.map(&targets, |(deg, pairs)| {
                let mut lvl = Level::default();
                for (g, v) in pairs {
                    let x = lie.bracket(g, v);
                    if !x.is_zero() {
                        lvl.push(x);
                    }
                }
                (*deg, lvl)
            });
            level = built
                .into_iter()
                .filter(|(_, l)| !l.basis.is_empty())
                .collect();
            for (deg, lvl) in &level {
                let acc = total.entry(*deg).or_default();
                for x in &lvl.basis {
                    acc.push(x.clone());
                }
            }
        }

        let target: Vec<usize> = (0..r).map(|j| lie.graded_dim(j)).collect();
        let mut slices = Vec::new();
        for j in -j_window..=j_window {
            for m in -m_window..=m_window {
                slices.push(SliceReport {
                    j,
                    m,
                    achieved: total.get(&(j, m)).map_or(0, |l| l.ech.rank()),
                    target: target[j.rem_euclid(r) as usize],
                });
            }
        }
        SpanReport {
            j_window,
            m_window,
            word_length,
            slices,
        }
    }

    /// Smallest word length at which every slice is full, searched up to `max`.
    pub fn minimal_span_length(
        &self,
        j_window: i64,
        m_window: i64,
        max: usize,
        exec: Exec,
    ) -> Option<usize> {
        (1..=max).find(|&l| self.span_check(j_window, m_window, l, exec).all_full())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{AlgebraSpec, Family};

    #[test]
    fn single_letters_only_hit_generator_slices() {
        let p = Presentation::new(AlgebraSpec::new(Family::A, 3, 2).unwrap());
        let rep = p.span_check(1, 1, 1, Exec::Sequential);
        let at = |j, m| {
            rep.slices
                .iter()
                .find(|s| s.j == j && s.m == m)
                .unwrap()
                .achieved
        };
        // h′_0 lies in the span of the other three a_i(0)
        assert_eq!(at(0, 0), 9);
        assert_eq!(at(1, 0), 6);
        assert_eq!(at(0, 1), 1);
        assert_eq!(at(1, 1), 0);
        let target = |j, m| {
            rep.slices
                .iter()
                .find(|s| s.j == j && s.m == m)
                .unwrap()
                .target
        };
        assert_eq!(target(0, 1), 21);
        assert_eq!(target(-1, 0), 14);
    }
}
