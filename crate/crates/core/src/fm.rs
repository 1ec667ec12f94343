//! Lattice-point enumeration in parametric polytopes.
//!
//! A system `a·x ≤ v·p + c` over x ∈ Nⁿ (nonnegativity is implicit) is
//! projected once by Fourier–Motzkin elimination with a symbolic
//! right-hand side `p`. Enumeration then walks x_0, x_1, … using the
//! bounds of each projection, so no box guess is needed.

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Ineq {
    a: Vec<i64>,
    v: Vec<i64>,
    c: i64,
    hist: u128,
}

impl Ineq {
    fn normalize(mut self) -> Self {
        let g = self.a.iter().chain(self.v.iter()).fold(self.c.abs(), |g, &x| g.gcd(&x));
        if g > 1 {
            self.a.iter_mut().for_each(|x| *x /= g);
            self.v.iter_mut().for_each(|x| *x /= g);
            self.c /= g;
        }
        self
    }

    fn rhs(&self, p: &[i64]) -> i64 {
        self.c + self.v.iter().zip(p).map(|(a, b)| a * b).sum::<i64>()
    }
}

#[derive(Debug, Clone)]
pub struct Polytope {
    n: usize,
    m: usize,
    original: Vec<Ineq>,
    /// `levels[k]`: rows of the projection onto x_0..x_k with a[k] ≠ 0
    levels: Vec<Vec<Ineq>>,
    /// rows with no x left: conditions on p alone
    conds: Vec<Ineq>,
}

impl Polytope {
    /// `rows`: (a, v, c) meaning a·x ≤ v·p + c. `n` variables, `m` parameters.
    pub fn new(n: usize, m: usize, rows: &[(Vec<i64>, Vec<i64>, i64)]) -> Self {
        let mut sys: Vec<Ineq> = Vec::new();
        for i in 0..n {
            let mut a = vec![0; n];
            a[i] = -1;
            sys.push(Ineq {
                a,
                v: vec![0; m],
                c: 0,
                hist: 0,
            });
        }
        for (a, v, c) in rows {
            assert_eq!(a.len(), n);
            assert_eq!(v.len(), m);
            sys.push(Ineq {
                a: a.clone(),
                v: v.clone(),
                c: *c,
                hist: 0,
            });
        }
        assert!(sys.len() <= 128, "too many constraints for history tracking");
        for (k, r) in sys.iter_mut().enumerate() {
            r.hist = 1u128 << k;
        }
        let original = sys.clone();
        let mut levels = vec![Vec::new(); n];
        let mut eliminated = 0u32;
        for k in (0..n).rev() {
            let (with, without): (Vec<Ineq>, Vec<Ineq>) = sys.into_iter().partition(|r| r.a[k] != 0);
            let (pos, neg): (Vec<&Ineq>, Vec<&Ineq>) = with.iter().partition(|r| r.a[k] > 0);
            let mut next = without;
            eliminated += 1;
            for p in &pos {
                for q in &neg {
                    let hist = p.hist | q.hist;
                    if hist.count_ones() > eliminated + 1 {
                        continue;
                    }
                    let (lp, lq) = (-q.a[k], p.a[k]);
                    let row = Ineq {
                        a: p.a.iter().zip(&q.a).map(|(x, y)| lp * x + lq * y).collect(),
                        v: p.v.iter().zip(&q.v).map(|(x, y)| lp * x + lq * y).collect(),
                        c: lp * p.c + lq * q.c,
                        hist,
                    }
                    .normalize();
                    next.push(row);
                }
            }
            // keep the twin with the shortest history so pruning stays sound
            next.sort_by(|x, y| (&x.a, &x.v, x.c, x.hist.count_ones()).cmp(&(&y.a, &y.v, y.c, y.hist.count_ones())));
            next.dedup_by(|x, y| x.a == y.a && x.v == y.v && x.c == y.c);
            levels[k] = with;
            sys = next;
        }
        Polytope {
            n,
            m,
            original,
            levels,
            conds: sys,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// False when the rational polytope for `p` is certainly empty.
    pub fn feasible_rational(&self, p: &[i64]) -> bool {
        assert_eq!(p.len(), self.m);
        self.conds.iter().all(|r| r.rhs(p) >= 0)
    }

    fn bounds(&self, k: usize, x: &[i64], p: &[i64]) -> Option<(i64, i64)> {
        let mut lo = 0i64;
        let mut hi: Option<i64> = None;
        for r in &self.levels[k] {
            let rest: i64 = (0..k).map(|i| r.a[i] * x[i]).sum();
            let b = r.rhs(p) - rest;
            let ak = r.a[k];
            if ak > 0 {
                let u = Integer::div_floor(&b, &ak);
                hi = Some(hi.map_or(u, |h: i64| h.min(u)));
            } else {
                let l = Integer::div_ceil(&(-b), &(-ak));
                lo = lo.max(l);
            }
        }
        hi.map(|h| (lo, h))
    }

    /// Visit every x ∈ Nⁿ in the polytope for `p`, in lexicographic order.
    /// The visitor returns `false` to stop early. Panics if unbounded.
    pub fn for_each(&self, p: &[i64], mut f: impl FnMut(&[i64]) -> bool) {
        assert_eq!(p.len(), self.m);
        if !self.feasible_rational(p) {
            return;
        }
        if self.n == 0 {
            f(&[]);
            return;
        }
        let mut x = vec![0i64; self.n];
        self.walk(0, &mut x, p, &mut f);
    }

    fn walk(&self, k: usize, x: &mut Vec<i64>, p: &[i64], f: &mut impl FnMut(&[i64]) -> bool) -> bool {
        let (lo, hi) = self
            .bounds(k, x, p)
            .expect("unbounded polytope: strict positivity fails");
        for val in lo..=hi {
            x[k] = val;
            if k + 1 == self.n {
                if self
                    .original
                    .iter()
                    .all(|r| r.a.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<i64>() <= r.rhs(p))
                    && !f(x)
                {
                    return false;
                }
            } else if !self.walk(k + 1, x, p, f) {
                return false;
            }
        }
        x[k] = 0;
        true
    }

    pub fn collect(&self, p: &[i64]) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.for_each(p, |x| {
            out.push(x.to_vec());
            true
        });
        out
    }

    pub fn first(&self, p: &[i64], pred: impl Fn(&[i64]) -> bool) -> Option<Vec<i64>> {
        let mut out = None;
        self.for_each(p, |x| {
            if pred(x) {
                out = Some(x.to_vec());
                false
            } else {
                true
            }
        });
        out
    }
}

/// True iff some nonzero x ∈ Nⁿ (rationally: x ≥ 0, x ≠ 0) has `c·x ≤ 0`
/// in every row of the matrix `cm` (rows × n).
pub fn nonzero_nonpositive_exists(cm: &[Vec<i64>], n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let mut rows: Vec<(Vec<i64>, Vec<i64>, i64)> = cm.iter().map(|r| (r.clone(), vec![], 0)).collect();
    rows.push((vec![-1; n], vec![], -1));
    let p = Polytope::new(n, 0, &rows);
    p.feasible_rational(&[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_count() {
        // x + y + z ≤ t
        let p = Polytope::new(3, 1, &[(vec![1, 1, 1], vec![1], 0)]);
        assert_eq!(p.collect(&[0]).len(), 1);
        assert_eq!(p.collect(&[2]).len(), 10);
        assert_eq!(p.collect(&[4]).len(), 35);
        assert!(p.collect(&[-1]).is_empty());
    }

    #[test]
    fn matches_brute_force() {
        // case A colour matrix, rows are colours
        let c = [vec![2, -1, 0], vec![-1, 2, -1], vec![0, 0, 1], vec![0, -2, 1]];
        let rows: Vec<_> = c
            .iter()
            .enumerate()
            .map(|(d, r)| {
                let mut v = vec![0; 4];
                v[d] = 1;
                (r.clone(), v, 0)
            })
            .collect();
        let p = Polytope::new(3, 4, &rows);
        for rhs in [[1, 1, 1, 1], [3, 0, 2, 1], [2, 2, 2, 2], [0, 0, 1, 0]] {
            let got = p.collect(&rhs);
            let mut want = Vec::new();
            for a in 0..20i64 {
                for b in 0..20 {
                    for cc in 0..20 {
                        let x = [a, b, cc];
                        if c.iter()
                            .enumerate()
                            .all(|(d, r)| r.iter().zip(&x).map(|(u, w)| u * w).sum::<i64>() <= rhs[d])
                        {
                            want.push(x.to_vec());
                        }
                    }
                }
            }
            assert_eq!(got, want);
        }
    }

    #[test]
    fn positivity() {
        assert!(!nonzero_nonpositive_exists(
            &[vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]],
            3
        ));
        // negating σ3 of case B keeps a positive row, so no witness
        assert!(!nonzero_nonpositive_exists(
            &[vec![-1, 1, -1], vec![1, -1, -1], vec![1, 1, 1]],
            3
        ));
        assert!(nonzero_nonpositive_exists(
            &[vec![-1, 1, -1], vec![1, -1, -1], vec![1, 1, -1]],
            3
        ));
        assert!(nonzero_nonpositive_exists(&[vec![1, -1]], 2));
        assert!(!nonzero_nonpositive_exists(&[vec![1, 1]], 2));
    }
}
