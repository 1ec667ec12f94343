//! Graded semigroups attached to distinguished divisors, their Hilbert
//! bases, weight generators and the normality verdict.
//!
//! An element of Γ for divisors D_{p1..pM} is a pair (n, γ) with
//! n ∈ N^M, γ ∈ N^Σ and D = Σ n_i D_{pi} − Cγ ∈ NΔ. Sums add both parts,
//! and strict positivity forces n ≠ 0 on every nonzero element, so
//! irreducibility can be decided degree by degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fm::Polytope;
use crate::linalg::rank_i64;
use crate::poset::Poset;
use crate::rootsys::Weight;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub degrees: Vec<i64>,
    /// color part D
    pub colors: Vec<i64>,
    /// Σ-correction γ with D = Σ n_i D_pi − Cγ
    pub sigma: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDescription {
    pub generators: Vec<Generator>,
    pub degree_bound_used: i64,
    /// elements of total degree ≤ bound
    pub element_count: usize,
    /// generator vectors linearly independent and the element count equals
    /// the number of monomials of degree ≤ bound
    pub free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSemigroup {
    pub allowed: Vec<usize>,
    pub generators: Vec<Vec<i64>>,
    pub degree_bound_used: i64,
    pub element_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub divisor: usize,
    pub gamma: Vec<i64>,
    pub remainder: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub normal: bool,
    pub witnesses: Vec<Witness>,
}

fn degree_vectors(m: usize, total: i64) -> Vec<Vec<i64>> {
    if m == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in degree_vectors(m - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn combo(divisors: &[Vec<i64>], n: &[i64], nd: usize) -> Vec<i64> {
    let mut p = vec![0; nd];
    for (d, &k) in divisors.iter().zip(n) {
        for (x, y) in p.iter_mut().zip(d) {
            *x += k * y;
        }
    }
    p
}

/// Number of monomials in generators of the given total degrees with
/// total degree ≤ bound.
fn monomial_count(degs: &[i64], bound: i64) -> usize {
    let b = bound.max(0) as usize;
    let mut ways = vec![0usize; b + 1];
    ways[0] = 1;
    for &d in degs {
        let d = d as usize;
        if d == 0 {
            continue;
        }
        for t in d..=b {
            ways[t] += ways[t - d];
        }
    }
    ways.iter().sum()
}

/// Hilbert basis of Γ for `divisors`, enumerating total degree ≤ `bound`.
pub fn gamma_multi(poset: &Poset, divisors: &[Vec<i64>], bound: i64) -> Result<SemigroupDescription> {
    let sys = poset.sys;
    let nd = sys.n_colors();
    if divisors.is_empty() {
        return Err(Error::System("no divisors".into()));
    }
    for d in divisors {
        if d.len() != nd {
            return Err(Error::Dimension(d.len(), nd));
        }
        if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
            return Err(Error::System(format!(
                "divisor {} is not a nonzero element of NΔ",
                sys.format_colors(d)
            )));
        }
        if sys.incidence.is_some() && sys.omega(d)?.iter().all(|&x| x == 0) {
            return Err(Error::System(format!("divisor {} has ω = 0", sys.format_colors(d))));
        }
    }
    let m = divisors.len();
    let mut gens: Vec<Generator> = Vec::new();
    let mut count = 1usize; // the zero element
    for total in 1..=bound {
        for n in degree_vectors(m, total) {
            let p = combo(divisors, &n, nd);
            let mut fresh = Vec::new();
            poset.for_each_below(&p, |g| {
                count += 1;
                let reducible = gens.iter().any(|h| {
                    let dn: Vec<i64> = n.iter().zip(&h.degrees).map(|(a, b)| a - b).collect();
                    if dn.iter().any(|&x| x < 0) || dn.iter().all(|&x| x == 0) {
                        return false;
                    }
                    let dg: Vec<i64> = g.iter().zip(&h.sigma).map(|(a, b)| a - b).collect();
                    if dg.iter().any(|&x| x < 0) {
                        return false;
                    }
                    let q = combo(divisors, &dn, nd);
                    poset.sigma_to_colors(&dg).iter().zip(&q).all(|(a, b)| a <= b)
                });
                if !reducible {
                    let cg = poset.sigma_to_colors(g);
                    fresh.push(Generator {
                        degrees: n.clone(),
                        colors: p.iter().zip(&cg).map(|(a, b)| a - b).collect(),
                        sigma: g.to_vec(),
                    });
                }
                true
            });
            gens.extend(fresh);
        }
    }
    let vecs: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| g.degrees.iter().chain(&g.sigma).copied().collect())
        .collect();
    let independent = rank_i64(&vecs) == gens.len();
    let degs: Vec<i64> = gens.iter().map(|g| g.degrees.iter().sum()).collect();
    let free = independent && monomial_count(&degs, bound) == count;
    Ok(SemigroupDescription {
        generators: gens,
        degree_bound_used: bound,
        element_count: count,
        free,
    })
}

pub fn gamma_single(poset: &Poset, dp: &[i64], bound: i64) -> Result<SemigroupDescription> {
    gamma_multi(poset, &[dp.to_vec()], bound)
}

/// True when running at `2·bound` finds no generator beyond `bound`.
pub fn stable(poset: &Poset, divisors: &[Vec<i64>], bound: i64) -> Result<bool> {
    let a = gamma_multi(poset, divisors, bound)?;
    let b = gamma_multi(poset, divisors, 2 * bound)?;
    Ok(a.generators == b.generators)
}

/// Membership in Γ^Σ: the positive part of Cγ is supported on `allowed`.
pub fn sigma_member(poset: &Poset, allowed: &[usize], g: &[i64]) -> bool {
    poset
        .sigma_to_colors(g)
        .iter()
        .enumerate()
        .all(|(d, &c)| c <= 0 || allowed.contains(&d))
}

/// Hilbert basis of Γ^Σ = {γ ∈ N^Σ : supp(γ⁺) ⊆ allowed} by total degree.
pub fn gamma_sigma(poset: &Poset, allowed: &[usize], bound: i64) -> SigmaSemigroup {
    let sys = poset.sys;
    let k = sys.n_sigma();
    let mut rows: Vec<(Vec<i64>, Vec<i64>, i64)> = (0..sys.n_colors())
        .filter(|d| !allowed.contains(d))
        .map(|d| (sys.pairing[d].clone(), vec![0], 0))
        .collect();
    rows.push((vec![1; k], vec![1], 0));
    rows.push((vec![-1; k], vec![-1], 0));
    let slice = Polytope::new(k, 1, &rows);
    let mut gens: Vec<Vec<i64>> = Vec::new();
    let mut count = 1usize;
    for total in 1..=bound {
        let mut fresh = Vec::new();
        slice.for_each(&[total], |g| {
            count += 1;
            let reducible = gens.iter().any(|h| {
                let d: Vec<i64> = g.iter().zip(h).map(|(a, b)| a - b).collect();
                d.iter().all(|&x| x >= 0) && sigma_member(poset, allowed, &d)
            });
            if !reducible {
                fresh.push(g.to_vec());
            }
            true
        });
        gens.extend(fresh);
    }
    SigmaSemigroup {
        allowed: allowed.to_vec(),
        generators: gens,
        degree_bound_used: bound,
        element_count: count,
    }
}

/// Weights Σ n_i λ_i* − Σ γ_j σ_j of the generators, deduplicated in order.
pub fn weight_semigroup(poset: &Poset, desc: &SemigroupDescription, lambda_star: &[Weight]) -> Result<Vec<Weight>> {
    let sys = poset.sys;
    let mut out: Vec<Weight> = Vec::new();
    for g in &desc.generators {
        if lambda_star.len() != g.degrees.len() {
            return Err(Error::Gap("λ* not recorded for every divisor".into()));
        }
        let mut w = vec![0; sys.rank()];
        for (l, &n) in lambda_star.iter().zip(&g.degrees) {
            if l.len() != w.len() {
                return Err(Error::Dimension(l.len(), w.len()));
            }
            for (x, y) in w.iter_mut().zip(l) {
                *x += n * y;
            }
        }
        for (x, y) in w.iter_mut().zip(sys.sigma_vector_weight(&g.sigma)?) {
            *x -= y;
        }
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn normality(poset: &Poset, divisors: &[Vec<i64>]) -> Verdict {
    let mut witnesses = Vec::new();
    for (i, d) in divisors.iter().enumerate() {
        if let Some(g) = poset.minuscule_witness(d) {
            let cg = poset.sigma_to_colors(&g);
            witnesses.push(Witness {
                divisor: i,
                remainder: d.iter().zip(&cg).map(|(a, b)| a - b).collect(),
                gamma: g,
            });
        }
    }
    Verdict {
        normal: witnesses.is_empty(),
        witnesses,
    }
}

/// Is `target` (degrees ++ sigma) an N-combination of `gens`?
pub fn representable(gens: &[Generator], target: &Generator) -> bool {
    let key = |g: &Generator| -> Vec<i64> { g.degrees.iter().chain(&g.sigma).copied().collect() };
    let vecs: Vec<Vec<i64>> = gens.iter().map(key).collect();
    let t = key(target);
    let mut memo: BTreeMap<(usize, Vec<i64>), bool> = BTreeMap::new();
    fn go(i: usize, rest: Vec<i64>, vecs: &[Vec<i64>], memo: &mut BTreeMap<(usize, Vec<i64>), bool>) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        if i == vecs.len() {
            return false;
        }
        if let Some(&r) = memo.get(&(i, rest.clone())) {
            return r;
        }
        let mut cur = rest.clone();
        let mut ok = false;
        loop {
            if go(i + 1, cur.clone(), vecs, memo) {
                ok = true;
                break;
            }
            let next: Vec<i64> = cur.iter().zip(&vecs[i]).map(|(a, b)| a - b).collect();
            if next.iter().any(|&x| x < 0) || vecs[i].iter().all(|&x| x == 0) {
                break;
            }
            cur = next;
        }
        memo.insert((i, rest), ok);
        ok
    }
    go(0, t, &vecs, &mut memo)
}

/// Every generator fails to be a combination of the others.
pub fn minimal(desc: &SemigroupDescription) -> bool {
    (0..desc.generators.len()).all(|i| {
        let others: Vec<Generator> = desc
            .generators
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        !representable(&others, &desc.generators[i])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphersys::fixtures::{case_a, case_b};

    #[test]
    fn degree_vectors_enumerate() {
        assert_eq!(degree_vectors(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(degree_vectors(1, 3), vec![vec![3]]);
    }

    #[test]
    fn monomials() {
        // two generators of degree 1: 1 + 2 + 3 monomials up to degree 2
        assert_eq!(monomial_count(&[1, 1], 2), 6);
        assert_eq!(monomial_count(&[1, 2], 3), 1 + 1 + 2 + 2);
    }

    #[test]
    fn case_a_positive_color() {
        let a = case_a();
        let p = Poset::new(&a);
        // D3 pairs nonnegatively with everything: Γ_{D3} is free on D3 plus
        // whatever lies below multiples of it
        let d = gamma_single(&p, &[0, 0, 1, 0], 6).unwrap();
        assert_eq!(d.generators[0].colors, vec![0, 0, 1, 0]);
        assert!(minimal(&d));
    }

    #[test]
    fn sigma_all_allowed() {
        let b = case_b();
        let p = Poset::new(&b);
        let s = gamma_sigma(&p, &[0, 1, 2], 5);
        assert_eq!(s.generators, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn zero_divisor_rejected() {
        let b = case_b();
        let p = Poset::new(&b);
        assert!(gamma_single(&p, &[0, 0, 0], 3).is_err());
        assert!(gamma_single(&p, &[0, 0], 3).is_err());
    }

    #[test]
    fn normality_b() {
        let b = case_b();
        let p = Poset::new(&b);
        assert!(normality(&p, &[vec![1, 0, 0]]).normal);
        let v = normality(&p, &[vec![1, 1, 0]]);
        assert!(!v.normal);
        assert_eq!(v.witnesses[0].remainder, vec![0, 0, 1]);
    }
}
