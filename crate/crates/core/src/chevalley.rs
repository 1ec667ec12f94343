//! Chevalley bases: structure constants, brackets and sl2-triple checks.
//!
//! Basis layout: `h_0..h_{r-1}`, then `x_k` for the positive roots in
//! canonical order, then `y_k` in the same order. Signed root `s < N` is
//! the k-th positive root, `s >= N` its negative.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rank_i64;
use crate::rootsys::{Root, RootSystem, Q};

pub type Element = Vec<Q>;

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    n: usize,
    signed: Vec<Root>,
    signed_index: HashMap<Root, usize>,
    /// N_{a,b} over signed roots, 0 when a+b is not a root.
    nconst: Vec<i64>,
    /// coroot h_α for positive α, in the h_i basis.
    coroots: Vec<Vec<i64>>,
    /// bracket of basis elements, sparse.
    table: Vec<Vec<(usize, i64)>>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Self {
        let r = rs.rank();
        let n = rs.num_positive();
        let mut signed: Vec<Root> = rs.positive_roots().to_vec();
        signed.extend(
            rs.positive_roots()
                .iter()
                .map(|a| a.iter().map(|x| -x).collect::<Root>()),
        );
        let signed_index: HashMap<Root, usize> = signed.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
        let norms: Vec<i64> = signed.iter().map(|a| rs.inner(a, a)).collect();

        let nconst = structure_constants(&rs, &signed, &signed_index, &norms);

        let coroots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(k, a)| (0..r).map(|j| a[j] * rs.gram()[j][j] / norms[k]).collect())
            .collect();

        let dim = r + 2 * n;
        let mut table = vec![Vec::new(); dim * dim];
        for s in 0..2 * n {
            let a = &signed[s];
            for i in 0..r {
                let v: i64 = (0..r).map(|j| a[j] * rs.cartan()[j][i]).sum();
                if v != 0 {
                    table[i * dim + r + s] = vec![(r + s, v)];
                    table[(r + s) * dim + i] = vec![(r + s, -v)];
                }
            }
            for t in 0..2 * n {
                let idx = (r + s) * dim + r + t;
                if t == (s + n) % (2 * n) {
                    let k = s.min(t);
                    let sign = if s < n { 1 } else { -1 };
                    table[idx] = coroots[k]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(j, &c)| (j, sign * c))
                        .collect();
                } else {
                    let c = nconst[s * 2 * n + t];
                    if c != 0 {
                        let sum: Root = a.iter().zip(&signed[t]).map(|(x, y)| x + y).collect();
                        table[idx] = vec![(r + signed_index[&sum], c)];
                    }
                }
            }
        }
        ChevalleyAlgebra {
            rs,
            n,
            signed,
            signed_index,
            nconst,
            coroots,
            table,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + 2 * self.n
    }

    /// N_{a,b} for signed roots a, b given as coefficient vectors.
    pub fn structure_constant(&self, a: &[i64], b: &[i64]) -> Option<i64> {
        let s = *self.signed_index.get(a)?;
        let t = *self.signed_index.get(b)?;
        Some(self.nconst[s * 2 * self.n + t])
    }

    pub fn zero(&self) -> Element {
        vec![Q::zero(); self.dim()]
    }

    pub fn basis(&self, k: usize) -> Element {
        let mut v = self.zero();
        v[k] = Q::from_integer(1);
        v
    }

    /// Basis index of the root vector e_a (x for positive, y for negative).
    pub fn root_vector_index(&self, a: &[i64]) -> Result<usize> {
        self.signed_index
            .get(a)
            .map(|s| self.rank() + s)
            .ok_or_else(|| Error::NotARoot {
                ty: self.rs.simple_type().to_string(),
                coeffs: a.to_vec(),
            })
    }

    /// Coroot h_α of a positive root as an element.
    pub fn coroot(&self, a: &[i64]) -> Result<Element> {
        let k = self.rs.positive_index(a).ok_or_else(|| Error::NotARoot {
            ty: self.rs.simple_type().to_string(),
            coeffs: a.to_vec(),
        })?;
        let mut v = self.zero();
        for (j, &c) in self.coroots[k].iter().enumerate() {
            v[j] = Q::from_integer(c);
        }
        Ok(v)
    }

    /// Name of a basis element, in the parser's notation.
    pub fn basis_name(&self, k: usize) -> String {
        let r = self.rank();
        if k < r {
            return format!("a{}v", k + 1);
        }
        let s = k - r;
        let (p, a) = if s < self.n {
            ("x", &self.signed[s])
        } else {
            ("y", &self.signed[s - self.n])
        };
        let lbl: String = a.iter().map(|c| c.abs().to_string()).collect();
        format!("{p}_{lbl}")
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Element> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::Dimension(x.len(), d));
        }
        if y.len() != d {
            return Err(Error::Dimension(y.len(), d));
        }
        let mut out = self.zero();
        let ys: Vec<usize> = (0..d).filter(|&j| !y[j].is_zero()).collect();
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for &j in &ys {
                let c = x[i] * y[j];
                for &(k, v) in &self.table[i * d + j] {
                    out[k] += c * Q::from_integer(v);
                }
            }
        }
        Ok(out)
    }

    fn is_cartan(&self, x: &[Q]) -> bool {
        x[self.rank()..].iter().all(|c| c.is_zero())
    }

    /// Eigenvalue dimensions of ad(h) for h in the Cartan subalgebra.
    pub fn ad_grading(&self, h: &[Q]) -> Result<Grading> {
        let r = self.rank();
        if h.len() != self.dim() {
            return Err(Error::Dimension(h.len(), self.dim()));
        }
        if !self.is_cartan(h) {
            return Err(Error::Parse("ad_grading needs h in the Cartan subalgebra".into()));
        }
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        *dims.entry(0).or_default() += r;
        for (s, a) in self.signed.iter().enumerate() {
            let v: Q = (0..r)
                .map(|i| {
                    let p: i64 = (0..r).map(|j| a[j] * self.rs.cartan()[j][i]).sum();
                    h[i] * Q::from_integer(p)
                })
                .sum();
            if !v.is_integer() {
                return Err(Error::NonIntegral(r + s));
            }
            *dims.entry(v.to_integer()).or_default() += 1;
        }
        let height = dims.keys().copied().filter(|&k| k >= 0).max().unwrap_or(0);
        Ok(Grading { dims, height })
    }

    /// dim ker ad(x), by exact rank over Q split along connected blocks.
    pub fn centralizer_dim(&self, x: &[Q]) -> Result<usize> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::Dimension(x.len(), d));
        }
        let den = x.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
        let xi: Vec<i64> = x.iter().map(|c| (c * Q::from_integer(den)).to_integer()).collect();
        // column j of ad(x) = [x, b_j]
        let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); d];
        for (j, col) in cols.iter_mut().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (i, &c) in xi.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &(k, v) in &self.table[i * d + j] {
                    *acc.entry(k).or_default() += c * v;
                }
            }
            *col = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        // union columns sharing a row
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut row_owner: Vec<Option<usize>> = vec![None; d];
        for (j, col) in cols.iter().enumerate() {
            for &(k, _) in col {
                match row_owner[k] {
                    None => row_owner[k] = Some(j),
                    Some(o) => {
                        let (a, b) = (find(&mut parent, o), find(&mut parent, j));
                        parent[a] = b;
                    }
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for j in 0..d {
            if !cols[j].is_empty() {
                let root = find(&mut parent, j);
                blocks.entry(root).or_default().push(j);
            }
        }
        let mut rank = 0;
        for cs in blocks.values() {
            let mut rows: Vec<usize> = cs.iter().flat_map(|&j| cols[j].iter().map(|e| e.0)).collect();
            rows.sort_unstable();
            rows.dedup();
            let pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(a, &b)| (b, a)).collect();
            let mat: Vec<Vec<i64>> = cs
                .iter()
                .map(|&j| {
                    let mut v = vec![0; rows.len()];
                    for &(k, c) in &cols[j] {
                        v[pos[&k]] = c;
                    }
                    v
                })
                .collect();
            rank += rank_i64(&mat);
        }
        Ok(d - rank)
    }

    /// Parse a formal sum such as `x_100000 - 2y_011211 + a3v + h_111111`.
    ///
    /// Root labels are digit strings in Bourbaki order (one digit per
    /// simple root), optionally prefixed by the type, e.g. `e7:1123321`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let mut out = self.zero();
        let bad = |m: &str| Error::Parse(format!("{m} in `{s}`"));
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad("empty expression"));
        }
        let bytes: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            let mut seen_sign = false;
            while i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                seen_sign = true;
                i += 1;
            }
            if i > 0 && !seen_sign {
                return Err(bad("missing operator"));
            }
            let st = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if i > st {
                bytes[st..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad("bad coefficient"))?
            } else {
                1
            };
            if i < bytes.len() && bytes[i] == '*' {
                i += 1;
            }
            let st = i;
            while i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
                i += 1;
            }
            let sym: String = bytes[st..i].iter().collect();
            let term = self.parse_symbol(&sym).map_err(|e| match e {
                Error::Parse(m) => bad(&m),
                other => other,
            })?;
            let c = Q::from_integer(sign * coeff);
            for (o, t) in out.iter_mut().zip(term) {
                *o += c * t;
            }
        }
        Ok(out)
    }

    fn parse_symbol(&self, sym: &str) -> Result<Element> {
        let r = self.rank();
        if let Some(rest) = sym.strip_prefix('a') {
            if let Some(num) = rest.strip_suffix('v') {
                let k: usize = num.parse().map_err(|_| Error::Parse(format!("bad coroot `{sym}`")))?;
                if k == 0 || k > r {
                    return Err(Error::Parse(format!("coroot index out of range `{sym}`")));
                }
                return Ok(self.basis(k - 1));
            }
        }
        let (kind, label) = sym
            .split_once('_')
            .ok_or_else(|| Error::Parse(format!("unknown symbol `{sym}`")))?;
        let root = self.parse_label(label)?;
        match kind {
            "x" => Ok(self.basis(self.root_vector_index(&root)?)),
            "y" => {
                let neg: Root = root.iter().map(|c| -c).collect();
                Ok(self.basis(self.root_vector_index(&neg)?))
            }
            "h" => self.coroot(&root),
            _ => Err(Error::Parse(format!("unknown symbol `{sym}`"))),
        }
    }

    /// Positive root from a digit label, e.g. `122321` or `e6:122321`.
    pub fn parse_label(&self, label: &str) -> Result<Root> {
        let digits = match label.split_once(':') {
            Some((t, d)) => {
                let ty: crate::rootsys::SimpleType = t.parse()?;
                if ty != self.rs.simple_type() {
                    return Err(Error::Parse(format!(
                        "label `{label}` is not for {}",
                        self.rs.simple_type()
                    )));
                }
                d
            }
            None => label,
        };
        if digits.len() != self.rank() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad root label `{label}`")));
        }
        let root: Root = digits.chars().map(|c| c.to_digit(10).unwrap() as i64).collect();
        if self.rs.positive_index(&root).is_none() {
            return Err(Error::NotARoot {
                ty: self.rs.simple_type().to_string(),
                coeffs: root,
            });
        }
        Ok(root)
    }

    /// Check the sl2 relations for {e, h, f}. If they fail as written, look
    /// for a sign change x_α ↦ −x_α, y_α ↦ −y_α on roots in the support
    /// (another Chevalley basis) under which they hold.
    pub fn verify_triple(&self, e: &[Q], h: &[Q], f: &[Q]) -> Result<TripleReport> {
        let cartan_ok = self.is_cartan(h);
        if self.sl2_relations(e, h, f)? {
            return Ok(TripleReport {
                sl2_ok: true,
                cartan_ok,
                flipped: Vec::new(),
            });
        }
        let r = self.rank();
        let mut support: Vec<usize> = (0..self.n)
            .filter(|&k| {
                let (xi, yi) = (r + k, r + self.n + k);
                !e[xi].is_zero() || !e[yi].is_zero() || !f[xi].is_zero() || !f[yi].is_zero()
            })
            .collect();
        support.sort_unstable();
        if support.len() <= 16 {
            for mask in 1u32..(1 << support.len()) {
                let mut e2 = e.to_vec();
                let mut f2 = f.to_vec();
                for (b, &k) in support.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        for v in [r + k, r + self.n + k] {
                            e2[v] = -e2[v];
                            f2[v] = -f2[v];
                        }
                    }
                }
                if self.sl2_relations(&e2, h, &f2)? {
                    let flipped = support
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &k)| self.basis_name(r + k)[2..].to_string())
                        .collect();
                    return Ok(TripleReport {
                        sl2_ok: true,
                        cartan_ok,
                        flipped,
                    });
                }
            }
        }
        Ok(TripleReport {
            sl2_ok: false,
            cartan_ok,
            flipped: Vec::new(),
        })
    }

    fn sl2_relations(&self, e: &[Q], h: &[Q], f: &[Q]) -> Result<bool> {
        let two = Q::from_integer(2);
        let ef = self.bracket(e, f)?;
        let he = self.bracket(h, e)?;
        let hf = self.bracket(h, f)?;
        Ok(ef.as_slice() == h
            && he.iter().zip(e).all(|(a, b)| *a == two * b)
            && hf.iter().zip(f).all(|(a, b)| *a == -two * b))
    }

    /// λ with [h, v] = λ v, if v is an ad(h)-eigenvector.
    pub fn eigenvalue(&self, h: &[Q], v: &[Q]) -> Result<Option<Q>> {
        let hv = self.bracket(h, v)?;
        let Some(k) = v.iter().position(|c| !c.is_zero()) else {
            return Ok(None);
        };
        let lam = hv[k] / v[k];
        Ok(if hv.iter().zip(v).all(|(a, b)| *a == lam * b) {
            Some(lam)
        } else {
            None
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub dims: BTreeMap<i64, usize>,
    pub height: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub sl2_ok: bool,
    pub cartan_ok: bool,
    /// labels of root vectors whose sign had to change, empty when the
    /// triple holds verbatim.
    pub flipped: Vec<String>,
}

/// Carter's construction: extraspecial pairs get N = p + 1, everything
/// else follows from the quadratic relations, processed by height.
fn structure_constants(
    rs: &RootSystem,
    signed: &[Root],
    signed_index: &HashMap<Root, usize>,
    norms: &[i64],
) -> Vec<i64> {
    let n = rs.num_positive();
    let m = 2 * n;
    let pos = rs.positive_roots();
    let mut ptab = vec![0i64; n * n];
    let add = |a: &Root, b: &Root| -> Root { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let sub = |a: &Root, b: &Root| -> Root { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let neg = |s: usize| (s + n) % m;

    fn signed_n(
        ptab: &[i64],
        n: usize,
        signed: &[Root],
        idx: &HashMap<Root, usize>,
        norms: &[i64],
        a: usize,
        b: usize,
    ) -> i64 {
        let (pa, pb) = (a < n, b < n);
        if pa && pb {
            return ptab[a * n + b];
        }
        if !pa && !pb {
            return -ptab[(a - n) * n + (b - n)];
        }
        let sum: Root = signed[a].iter().zip(&signed[b]).map(|(x, y)| -(x + y)).collect();
        let Some(&w) = idx.get(&sum) else { return 0 };
        let pw = w < n;
        // N_{a,b}/(w,w) = N_{b,w}/(a,a) = N_{w,a}/(b,b)
        if pw == pb {
            let v = norms[w] * signed_n(ptab, n, signed, idx, norms, b, w);
            debug_assert_eq!(v % norms[a], 0);
            v / norms[a]
        } else {
            let v = norms[w] * signed_n(ptab, n, signed, idx, norms, w, a);
            debug_assert_eq!(v % norms[b], 0);
            v / norms[b]
        }
    }

    let string_p = |a: &Root, b: &Root| -> i64 {
        let mut p = 0;
        let mut c = sub(b, a);
        while signed_index.contains_key(&c) {
            p += 1;
            c = sub(&c, a);
        }
        p
    };

    for (xi_idx, xi) in pos.iter().enumerate() {
        // pairs (a, b) of positive roots with a + b = ξ, a before b
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..xi_idx {
            if let Some(b) = rs.positive_index(&sub(xi, &pos[a])) {
                if a < b {
                    pairs.push((a, b));
                }
            }
        }
        let Some(&(g, d)) = pairs.first() else { continue };
        let v = string_p(&pos[g], &pos[d]) + 1;
        ptab[g * n + d] = v;
        ptab[d * n + g] = -v;
        let xx = norms[xi_idx];
        for &(a, b) in &pairs[1..] {
            // relation on α, β, −γ, −δ
            let (ng, nd) = (neg(g), neg(d));
            let mut total = Q::zero();
            let bg = add(&pos[b], &signed[ng]);
            if let Some(&bgi) = signed_index.get(&bg) {
                let t1 = signed_n(&ptab, n, signed, signed_index, norms, b, ng)
                    * signed_n(&ptab, n, signed, signed_index, norms, a, nd);
                total += Q::new(t1, norms[bgi]);
            }
            let ag = add(&pos[a], &signed[ng]);
            if let Some(&agi) = signed_index.get(&ag) {
                let t2 = signed_n(&ptab, n, signed, signed_index, norms, ng, a)
                    * signed_n(&ptab, n, signed, signed_index, norms, b, nd);
                total += Q::new(t2, norms[agi]);
            }
            let nab = total * Q::from_integer(xx) / Q::from_integer(v);
            assert!(nab.is_integer(), "non-integral structure constant");
            let nab = nab.to_integer();
            debug_assert_eq!(nab.abs(), string_p(&pos[a], &pos[b]) + 1);
            ptab[a * n + b] = nab;
            ptab[b * n + a] = -nab;
        }
    }

    let mut full = vec![0i64; m * m];
    for a in 0..m {
        for b in 0..m {
            if b == neg(a) {
                continue;
            }
            full[a * m + b] = signed_n(&ptab, n, signed, signed_index, norms, a, b);
        }
    }
    full
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(RootSystem::from_str_type(t).unwrap())
    }

    fn jacobi_ok(a: &ChevalleyAlgebra, i: usize, j: usize, k: usize) -> bool {
        let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
        let t1 = a.bracket(&x, &a.bracket(&y, &z).unwrap()).unwrap();
        let t2 = a.bracket(&y, &a.bracket(&z, &x).unwrap()).unwrap();
        let t3 = a.bracket(&z, &a.bracket(&x, &y).unwrap()).unwrap();
        t1.iter().zip(&t2).zip(&t3).all(|((p, q), r)| (*p + q + r).is_zero())
    }

    #[test]
    fn sl2() {
        let a = alg("A1");
        assert_eq!(a.dim(), 3);
        let x = a.parse_element("x_1").unwrap();
        let y = a.parse_element("y_1").unwrap();
        let h = a.parse_element("h_1").unwrap();
        assert_eq!(a.bracket(&x, &y).unwrap(), h);
        assert_eq!(a.bracket(&h, &x).unwrap(), a.parse_element("2x_1").unwrap());
        assert!(a.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
        assert_eq!(a.centralizer_dim(&x).unwrap(), 1);
        assert_eq!(a.centralizer_dim(&a.zero()).unwrap(), 3);
        let g = a.ad_grading(&h).unwrap();
        assert_eq!(g.dims, BTreeMap::from([(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(g.height, 2);
    }

    #[test]
    fn g2_constants() {
        let a = alg("G2");
        assert_eq!(a.dim(), 14);
        assert_eq!(a.structure_constant(&[1, 0], &[0, 1]).unwrap().abs(), 1);
        assert_eq!(a.structure_constant(&[1, 0], &[1, 1]).unwrap().abs(), 2);
        assert_eq!(a.structure_constant(&[1, 0], &[2, 1]).unwrap().abs(), 3);
        let h = a.parse_element("h_21").unwrap();
        let x = a.parse_element("x_21").unwrap();
        assert_eq!(a.bracket(&h, &x).unwrap(), a.parse_element("2x_21").unwrap());
    }

    #[test]
    fn jacobi_exhaustive_small() {
        for t in ["G2", "B3", "C3", "A3"] {
            let a = alg(t);
            let d = a.dim();
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        assert!(jacobi_ok(&a, i, j, k), "{t} {i} {j} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn antisymmetric_table() {
        let a = alg("F4");
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let u = a.bracket_basis(i, j);
                let v = a.bracket_basis(j, i);
                assert_eq!(u.len(), v.len());
                for (p, q) in u.iter().zip(v) {
                    assert_eq!(p.0, q.0);
                    assert_eq!(p.1, -q.1);
                }
            }
        }
    }

    #[test]
    fn parser_errors() {
        let a = alg("E6");
        assert!(a.parse_element("x_100001").is_err());
        assert!(a.parse_element("x_10000").is_err());
        assert!(a.parse_element("q_100000").is_err());
        assert!(a.parse_element("a7v").is_err());
        assert!(a.parse_element("").is_err());
        assert!(a.parse_element("x_e7:1000000").is_err());
        assert_eq!(
            a.parse_element("x_e6:100000").unwrap(),
            a.parse_element("x_100000").unwrap()
        );
        assert_eq!(
            a.parse_element("-x_100000 + 2 y_000001").unwrap(),
            a.parse_element("2y_000001-x_100000").unwrap()
        );
    }

    #[test]
    fn triple_checks() {
        let a = alg("E6");
        let e = a.parse_element("x_100000+x_000001").unwrap();
        let h = a.parse_element("a1v+a6v").unwrap();
        let f = a.parse_element("y_100000+y_000001").unwrap();
        let rep = a.verify_triple(&e, &h, &f).unwrap();
        assert!(rep.sl2_ok && rep.cartan_ok && rep.flipped.is_empty());
        let h2: Element = h.iter().map(|c| *c * Q::from_integer(2)).collect();
        assert!(!a.verify_triple(&e, &h2, &f).unwrap().sl2_ok);
    }

    #[test]
    fn ad_grading_rejects_fractional() {
        let a = alg("A1");
        let mut h = a.zero();
        h[0] = Q::new(1, 4);
        assert!(matches!(a.ad_grading(&h), Err(Error::NonIntegral(_))));
        assert_eq!(a.ad_grading(&a.zero()).unwrap().dims, BTreeMap::from([(0, 3)]));
    }
}
