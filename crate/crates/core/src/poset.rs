//! The order ≤_Σ on NΔ, covering differences, low triples and the
//! minuscule test.
//!
//! D ≤_Σ E iff E − D = Σ a_j σ_j (in colors) for some a ∈ N^Σ. Columns of
//! the pairing are independent, so the witness is unique when it exists.

use serde::{Deserialize, Serialize};

use crate::fm::Polytope;
use crate::linalg::left_inverse;
use crate::rootsys::Q;
use crate::sphersys::SphericalSystem;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoveringDifference {
    pub gamma: Vec<i64>,
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LowTriple {
    pub d: usize,
    pub e: usize,
    pub f: Vec<i64>,
    pub gamma: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverings {
    pub bound: i64,
    pub list: Vec<CoveringDifference>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowTriples {
    pub triples: Vec<LowTriple>,
    /// coverings whose positive part has height above 2
    pub warnings: Vec<String>,
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Precomputed search structures for one spherical system.
#[derive(Debug, Clone)]
pub struct Poset<'a> {
    pub sys: &'a SphericalSystem,
    /// {γ ∈ N^Σ : Cγ ≤ p}, parameter p over colors
    below: Polytope,
    /// {b ∈ N^Σ : b ≤ g, −Cb ≤ m}, parameters (g over Σ, m over colors)
    between: Polytope,
    left: Option<Vec<Vec<Q>>>,
}

impl<'a> Poset<'a> {
    pub fn new(sys: &'a SphericalSystem) -> Self {
        let (k, nd) = (sys.n_sigma(), sys.n_colors());
        let below_rows: Vec<_> = (0..nd)
            .map(|d| {
                let mut v = vec![0; nd];
                v[d] = 1;
                (sys.pairing[d].clone(), v, 0)
            })
            .collect();
        let mut between_rows: Vec<_> = (0..k)
            .map(|j| {
                let mut a = vec![0; k];
                a[j] = 1;
                let mut v = vec![0; k + nd];
                v[j] = 1;
                (a, v, 0)
            })
            .collect();
        for d in 0..nd {
            let mut v = vec![0; k + nd];
            v[k + d] = 1;
            between_rows.push((sys.pairing[d].iter().map(|c| -c).collect(), v, 0));
        }
        Poset {
            sys,
            below: Polytope::new(k, nd, &below_rows),
            between: Polytope::new(k, k + nd, &between_rows),
            left: left_inverse(&sys.pairing),
        }
    }

    pub fn sigma_to_colors(&self, a: &[i64]) -> Vec<i64> {
        sigma_to_colors(self.sys, a)
    }

    /// Witness a with E = D + Ca, a ∈ N^Σ, or `None`.
    pub fn leq_sigma(&self, d: &[i64], e: &[i64]) -> Option<Vec<i64>> {
        let diff: Vec<i64> = e.iter().zip(d).map(|(x, y)| x - y).collect();
        let left = self.left.as_ref()?;
        let mut a = Vec::with_capacity(left.len());
        for row in left {
            let v: Q = row.iter().zip(&diff).map(|(l, x)| *l * Q::from_integer(*x)).sum();
            if !v.is_integer() || v < Q::from_integer(0) {
                return None;
            }
            a.push(v.to_integer());
        }
        (self.sigma_to_colors(&a) == diff).then_some(a)
    }

    /// Same as [`Self::leq_sigma`] by exhaustive enumeration of
    /// {a : Ca ≤ E}; used as an oracle. Requires D, E ≥ 0.
    pub fn leq_sigma_enum(&self, d: &[i64], e: &[i64]) -> Option<Vec<i64>> {
        let diff: Vec<i64> = e.iter().zip(d).map(|(x, y)| x - y).collect();
        self.below.first(e, |a| self.sigma_to_colors(a) == diff)
    }

    /// All γ ∈ N^Σ with Cγ ≤ p.
    pub fn below(&self, p: &[i64]) -> Vec<Vec<i64>> {
        self.below.collect(p)
    }

    pub fn for_each_below(&self, p: &[i64], f: impl FnMut(&[i64]) -> bool) {
        self.below.for_each(p, f)
    }

    fn parts(&self, g: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let c = self.sigma_to_colors(g);
        (
            c.iter().map(|&x| x.max(0)).collect(),
            c.iter().map(|&x| (-x).max(0)).collect(),
        )
    }

    /// γ is covering iff no F ∈ NΔ lies strictly between γ⁻ and γ⁺.
    pub fn is_covering(&self, g: &[i64]) -> bool {
        if g.iter().all(|&x| x == 0) {
            return false;
        }
        let (_, minus) = self.parts(g);
        let mut p = g.to_vec();
        p.extend(&minus);
        self.between
            .first(&p, |b| b.iter().any(|&x| x != 0) && b != g)
            .is_none()
    }

    /// Independent re-check from above: enumerate F ≤_Σ γ⁺ and test
    /// γ⁻ <_Σ F <_Σ γ⁺ with the linear solver.
    pub fn is_covering_from_above(&self, g: &[i64]) -> bool {
        let (plus, minus) = self.parts(g);
        let mut found = false;
        self.below.for_each(&plus, |b| {
            if b.iter().all(|&x| x == 0) || b == g {
                return true;
            }
            let cb = self.sigma_to_colors(b);
            let f: Vec<i64> = plus.iter().zip(&cb).map(|(x, y)| x - y).collect();
            if self.leq_sigma(&minus, &f).is_some() {
                found = true;
                return false;
            }
            true
        });
        !found
    }

    pub fn covering_differences(&self, bound: i64) -> Coverings {
        let k = self.sys.n_sigma();
        let mut list = Vec::new();
        let mut g = vec![0i64; k];
        if k > 0 {
            loop {
                let mut i = 0;
                while i < k {
                    if g[i] < bound {
                        g[i] += 1;
                        break;
                    }
                    g[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
                if self.is_covering(&g) {
                    let (plus, minus) = self.parts(&g);
                    list.push(CoveringDifference {
                        gamma: g.clone(),
                        plus,
                        minus,
                    });
                }
            }
        }
        list.sort_by(|a, b| (height(&a.gamma), &a.gamma).cmp(&(height(&b.gamma), &b.gamma)));
        Coverings { bound, list }
    }

    pub fn low_fundamental_triples(&self, cov: &Coverings) -> LowTriples {
        let mut triples = Vec::new();
        let mut warnings = Vec::new();
        for c in &cov.list {
            match height(&c.plus) {
                2 => {
                    let idx: Vec<usize> = c
                        .plus
                        .iter()
                        .enumerate()
                        .flat_map(|(d, &m)| std::iter::repeat(d).take(m as usize))
                        .collect();
                    triples.push(LowTriple {
                        d: idx[0],
                        e: idx[1],
                        f: c.minus.clone(),
                        gamma: c.gamma.clone(),
                    });
                }
                h if h > 2 => warnings.push(format!(
                    "covering {} has height(γ⁺) = {h}",
                    self.sys.format_sigma(&c.gamma)
                )),
                _ => {}
            }
        }
        triples.sort();
        LowTriples { triples, warnings }
    }

    /// `None` if D is minuscule, otherwise the first γ ≠ 0 (lexicographic)
    /// with D − Cγ ∈ NΔ.
    pub fn minuscule_witness(&self, d: &[i64]) -> Option<Vec<i64>> {
        self.below.first(d, |g| g.iter().any(|&x| x != 0))
    }

    pub fn is_minuscule(&self, d: &[i64]) -> bool {
        self.minuscule_witness(d).is_none()
    }
}

pub fn sigma_to_colors(sys: &SphericalSystem, a: &[i64]) -> Vec<i64> {
    sys.pairing
        .iter()
        .map(|r| r.iter().zip(a).map(|(x, y)| x * y).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphersys::fixtures::{case_a, case_b};

    #[test]
    fn order_examples() {
        let a = case_a();
        let p = Poset::new(&a);
        assert_eq!(p.sigma_to_colors(&[1, 1, 0]), vec![1, 1, 0, -2]);
        assert_eq!(p.leq_sigma(&[0, 0, 0, 2], &[1, 1, 0, 0]), Some(vec![1, 1, 0]));
        assert_eq!(p.leq_sigma(&[1, 0, 2, 0], &[1, 0, 2, 0]), Some(vec![0, 0, 0]));
        assert_eq!(p.leq_sigma(&[1, 1, 0, 0], &[0, 0, 0, 2]), None);
        let b = case_b();
        let p = Poset::new(&b);
        assert_eq!(p.leq_sigma(&[0, 0, 1], &[1, 1, 0]), Some(vec![0, 0, 1]));
        assert_eq!(p.leq_sigma_enum(&[0, 0, 1], &[1, 1, 0]), Some(vec![0, 0, 1]));
        assert_eq!(height(&[1, 1, 0]), 2);
        assert_eq!(height(&[0, 0, 2]), 2);
        assert_eq!(height(&[]), 0);
    }

    #[test]
    fn coverings_a() {
        let a = case_a();
        let p = Poset::new(&a);
        let c = p.covering_differences(8);
        let got: Vec<Vec<i64>> = c.list.iter().map(|x| x.gamma.clone()).collect();
        let mut want = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![0, 1, 2],
            vec![1, 1, 1],
        ];
        want.sort_by(|a, b| (height(a), a).cmp(&(height(b), b)));
        assert_eq!(got, want);
        for cd in &c.list {
            assert!(p.is_covering_from_above(&cd.gamma));
        }
        let t = p.low_fundamental_triples(&c);
        assert_eq!(t.triples.len(), 7);
        assert!(t.warnings.is_empty());
        assert!(t.triples.contains(&LowTriple {
            d: 0,
            e: 2,
            f: vec![0, 0, 0, 1],
            gamma: vec![1, 1, 1]
        }));
    }

    #[test]
    fn coverings_b() {
        let b = case_b();
        let p = Poset::new(&b);
        let c = p.covering_differences(8);
        assert_eq!(c.list.len(), 6);
        let t = p.low_fundamental_triples(&c);
        assert!(t.triples.contains(&LowTriple {
            d: 2,
            e: 2,
            f: vec![0, 0, 0],
            gamma: vec![1, 1, 0]
        }));
    }

    #[test]
    fn minuscule() {
        let a = case_a();
        let p = Poset::new(&a);
        assert!(p.is_minuscule(&[0, 0, 0, 0]));
        assert!(p.is_minuscule(&[0, 0, 1, 0]));
        assert_eq!(p.minuscule_witness(&[1, 1, 0, 0]), Some(vec![1, 1, 0]));
    }
}
