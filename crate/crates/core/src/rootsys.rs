//! Root systems of simple types in Bourbaki numbering.
//!
//! Roots live in the simple-root basis, weights in the fundamental-weight
//! basis. Everything is integer-exact; the only rational object is the
//! inverse Cartan matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Root = Vec<i64>;
pub type Weight = Vec<i64>;
pub type Q = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank}")))
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let fam = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(fam, rank)
    }
}

/// Gram matrix (α_i, α_j) scaled so that short roots have squared length 2.
fn gram_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                g[i][i] = if i + 1 < n { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n {
                g[i][i] = if i + 1 < n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
            }
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        let n = ty.rank;
        let gram = gram_matrix(ty);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // Grow by height using root strings: β + α_i is a root iff q > 0,
        // where q = p − ⟨β, α_i∨⟩ and p is the downward string length.
        let mut positive: Vec<Root> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: std::collections::HashSet<Root> = positive.iter().cloned().collect();
        let mut layer = positive.clone();
        while !layer.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut b = beta.clone();
                    loop {
                        b[i] -= 1;
                        if known.contains(&b) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pair > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let index = positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem {
            ty,
            gram,
            cartan,
            positive,
            index,
        }
    }

    pub fn from_str_type(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Positive roots, ordered by height then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// `cartan()[i][j] = ⟨α_i, α_j∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// d_j = (α_j, α_j)/2; `cartan[i][j] · d_j` is symmetric.
    pub fn symmetrizer(&self) -> Vec<Q> {
        (0..self.rank()).map(|i| Q::new(self.gram[i][i], 2)).collect()
    }

    /// Index of a positive root in canonical order.
    pub fn positive_index(&self, a: &[i64]) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn is_root(&self, a: &[i64]) -> bool {
        if a.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(a) {
            return true;
        }
        let neg: Root = a.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("nonempty root system")
    }

    pub fn height(a: &[i64]) -> i64 {
        a.iter().sum()
    }

    /// Symmetric form (a, b) in the normalization where short roots have length² 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// ⟨b, a∨⟩ for roots (or root-lattice elements) b and a root a.
    pub fn root_pairing(&self, b: &[i64], a: &[i64]) -> i64 {
        2 * self.inner(b, a) / self.inner(a, a)
    }

    /// Reflection s_a(b).
    pub fn reflect(&self, a: &[i64], b: &[i64]) -> Root {
        let k = self.root_pairing(b, a);
        b.iter().zip(a).map(|(x, y)| x - k * y).collect()
    }

    /// Coordinates of a root-lattice element in the fundamental-weight basis.
    pub fn root_to_weight(&self, a: &[i64]) -> Weight {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| a[i] * self.cartan[i][j]).sum()).collect()
    }

    /// ⟨w, a∨⟩ with w in the fundamental-weight basis and a a root.
    pub fn coroot_pairing(&self, w: &[i64], a: &[i64]) -> Result<i64> {
        if w.len() != self.rank() {
            return Err(Error::Dimension(w.len(), self.rank()));
        }
        if !self.is_root(a) {
            return Err(Error::NotARoot {
                ty: self.ty.to_string(),
                coeffs: a.to_vec(),
            });
        }
        // a∨ = Σ_j a_j (α_j,α_j)/(a,a) α_j∨
        let aa = self.inner(a, a);
        let num: i64 = (0..self.rank()).map(|j| w[j] * a[j] * self.gram[j][j]).sum();
        debug_assert!(num % aa == 0);
        Ok(num / aa)
    }

    /// Inverse of the Cartan matrix over Q.
    pub fn cartan_inverse(&self) -> Vec<Vec<Q>> {
        let m: Vec<Vec<Q>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        invert(&m).expect("Cartan matrices are invertible")
    }

    /// Express a weight in the simple-root basis (rational coefficients).
    pub fn weight_to_root_coords(&self, w: &[i64]) -> Vec<Q> {
        let inv = self.cartan_inverse();
        let n = self.rank();
        // w_j = Σ_i a_i A[i][j]  ⇒  a = w · A⁻¹
        (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(w[j]) * inv[j][i]).sum())
            .collect()
    }

    /// Minimal m > 0 with m·ω_p∨ in the coroot lattice, for α_p of
    /// coefficient 1 in the highest root. `p` is 0-based.
    pub fn hermitian_exponent(&self, p: usize) -> Result<i64> {
        let n = self.rank();
        if p >= n {
            return Err(Error::Index(format!("simple root a{} of {}", p + 1, self.ty)));
        }
        let coeff = self.highest_root()[p];
        if coeff != 1 {
            return Err(Error::NotAbelian {
                ty: self.ty.to_string(),
                index: p + 1,
                coeff,
            });
        }
        // ω_p∨ = Σ_j c_j α_j∨ with Σ_j A[i][j] c_j = δ_ip.
        let inv = self.cartan_inverse();
        let mut m = 1i64;
        for row in inv.iter() {
            m = m.lcm(row[p].denom());
        }
        Ok(m)
    }
}

/// Gauss–Jordan inverse over Q; `None` when singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col];
        for j in 0..n {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = a[col][j] * f;
                    a[r][j] -= t;
                    let t = inv[col][j] * f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}
