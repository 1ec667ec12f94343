//! Spherical systems given by matrices: spherical roots Σ, colors Δ, the
//! Cartan pairing c(D, σ) and the color/simple-root incidence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::format_combo;
use crate::fm::nonzero_nonpositive_exists;
use crate::linalg::rank_i64;
use crate::rootsys::{RootSystem, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalSystem {
    pub id: String,
    /// factors of the ambient semisimple type; empty for pairing-only data
    pub ambient: Vec<SimpleType>,
    pub simple_roots: Vec<String>,
    /// block-diagonal Cartan matrix over `simple_roots`
    pub cartan: Vec<Vec<i64>>,
    pub sp: Vec<usize>,
    pub sigma_names: Vec<String>,
    /// σ_j over the simple roots, when known
    pub sigma_roots: Option<Vec<Vec<i64>>>,
    pub color_names: Vec<String>,
    /// per color, multiplicity of ω_α in ω(D); `None` = not recorded
    pub incidence: Option<Vec<Vec<i64>>>,
    /// `pairing[d][j] = c(D_d, σ_j)`
    pub pairing: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    /// false when the data needed is not recorded
    pub applicable: bool,
    pub detail: String,
}

pub fn block_cartan(types: &[SimpleType]) -> Vec<Vec<i64>> {
    let n: usize = types.iter().map(|t| t.rank).sum();
    let mut m = vec![vec![0; n]; n];
    let mut off = 0;
    for t in types {
        let rs = RootSystem::new(*t);
        for i in 0..t.rank {
            for j in 0..t.rank {
                m[off + i][off + j] = rs.cartan()[i][j];
            }
        }
        off += t.rank;
    }
    m
}

impl SphericalSystem {
    pub fn n_colors(&self) -> usize {
        self.color_names.len()
    }

    pub fn n_sigma(&self) -> usize {
        self.sigma_names.len()
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Column j of the pairing: σ_j written in colors.
    pub fn sigma_in_colors(&self, j: usize) -> Vec<i64> {
        self.pairing.iter().map(|r| r[j]).collect()
    }

    pub fn format_colors(&self, v: &[i64]) -> String {
        format_combo(v, &self.color_names)
    }

    pub fn format_sigma(&self, v: &[i64]) -> String {
        format_combo(v, &self.sigma_names)
    }

    /// ω(v) = Σ_D v_D ω(D) in the fundamental-weight basis.
    pub fn omega(&self, v: &[i64]) -> Result<Weight> {
        let inc = self
            .incidence
            .as_ref()
            .ok_or_else(|| Error::Gap(format!("color incidence of system {}", self.id)))?;
        if v.len() != self.n_colors() {
            return Err(Error::Dimension(v.len(), self.n_colors()));
        }
        let mut w = vec![0; self.rank()];
        for (d, &c) in v.iter().enumerate() {
            for (a, &m) in inc[d].iter().enumerate() {
                w[a] += c * m;
            }
        }
        Ok(w)
    }

    /// σ_j as a weight, via the Cartan matrix.
    pub fn sigma_weight(&self, j: usize) -> Result<Weight> {
        let roots = self
            .sigma_roots
            .as_ref()
            .ok_or_else(|| Error::Gap(format!("spherical roots of system {}", self.id)))?;
        let s = &roots[j];
        let n = self.rank();
        Ok((0..n).map(|b| (0..n).map(|a| s[a] * self.cartan[a][b]).sum()).collect())
    }

    /// Σ_j γ_j σ_j as a weight.
    pub fn sigma_vector_weight(&self, g: &[i64]) -> Result<Weight> {
        let mut w = vec![0; self.rank()];
        for (j, &c) in g.iter().enumerate() {
            if c != 0 {
                for (x, y) in w.iter_mut().zip(self.sigma_weight(j)?) {
                    *x += c * y;
                }
            }
        }
        Ok(w)
    }

    /// Support of Σ in the simple roots, in index order.
    pub fn support(&self) -> Option<Vec<usize>> {
        let roots = self.sigma_roots.as_ref()?;
        Some((0..self.rank()).filter(|&a| roots.iter().any(|s| s[a] != 0)).collect())
    }

    pub fn validate(&self) -> Vec<Check> {
        let mut out = Vec::new();
        let shape_ok = self.pairing.len() == self.n_colors() && self.pairing.iter().all(|r| r.len() == self.n_sigma());
        out.push(Check {
            name: "shape".into(),
            ok: shape_ok,
            applicable: true,
            detail: format!("{}x{} pairing", self.n_colors(), self.n_sigma()),
        });
        if !shape_ok {
            return out;
        }

        let missing: Vec<&String> = (0..self.n_sigma())
            .filter(|&j| self.pairing.iter().all(|r| r[j] <= 0))
            .map(|j| &self.sigma_names[j])
            .collect();
        out.push(Check {
            name: "positive color per root".into(),
            ok: missing.is_empty(),
            applicable: true,
            detail: if missing.is_empty() {
                "every spherical root has a color pairing positively".into()
            } else {
                format!("no positive color for {missing:?}")
            },
        });

        let cols: Vec<Vec<i64>> = (0..self.n_sigma()).map(|j| self.sigma_in_colors(j)).collect();
        let r = rank_i64(&cols);
        out.push(Check {
            name: "independence".into(),
            ok: r == self.n_sigma(),
            applicable: true,
            detail: format!("rank {r} of {}", self.n_sigma()),
        });

        let bad = nonzero_nonpositive_exists(&self.pairing, self.n_sigma());
        out.push(Check {
            name: "strict positivity".into(),
            ok: !bad,
            applicable: true,
            detail: if bad {
                "some nonzero combination of spherical roots is nonpositive on every color".into()
            } else {
                "no nonzero combination is nonpositive on all colors".into()
            },
        });

        out.push(self.omega_check());
        out
    }

    fn omega_check(&self) -> Check {
        let name = "omega consistency".to_string();
        if self.incidence.is_none() || self.sigma_roots.is_none() {
            return Check {
                name,
                ok: true,
                applicable: false,
                detail: "incidence or root data not recorded".into(),
            };
        }
        let mut bad = Vec::new();
        for j in 0..self.n_sigma() {
            let lhs = self.omega(&self.sigma_in_colors(j)).expect("incidence present");
            let rhs = self.sigma_weight(j).expect("roots present");
            if lhs != rhs {
                bad.push(format!("{}: {:?} vs {:?}", self.sigma_names[j], lhs, rhs));
            }
        }
        Check {
            name,
            ok: bad.is_empty(),
            applicable: true,
            detail: if bad.is_empty() {
                format!("{} spherical roots checked", self.n_sigma())
            } else {
                bad.join("; ")
            },
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(|c| c.ok)
    }

    pub fn positive_colors(&self) -> Vec<usize> {
        (0..self.n_colors())
            .filter(|&d| self.pairing[d].iter().all(|&c| c >= 0))
            .collect()
    }

    pub fn quotient_by_positive_color(&self, d: usize) -> Result<SphericalSystem> {
        if d >= self.n_colors() {
            return Err(Error::Index(format!("color {d}")));
        }
        if !self.positive_colors().contains(&d) {
            return Err(Error::NotPositive(self.color_names[d].clone()));
        }
        let keep_s: Vec<usize> = (0..self.n_sigma()).filter(|&j| self.pairing[d][j] == 0).collect();
        let keep_d: Vec<usize> = (0..self.n_colors()).filter(|&e| e != d).collect();
        Ok(self.restrict(&format!("{}/{}", self.id, self.color_names[d]), &keep_s, &keep_d, None))
    }

    /// Localization on the simple roots `s` (indices). Spherical roots
    /// outside `s` and colors not incident to `s` are dropped.
    pub fn localization(&self, s: &[usize]) -> Result<SphericalSystem> {
        let roots = self
            .sigma_roots
            .as_ref()
            .ok_or_else(|| Error::Gap(format!("spherical roots of system {}", self.id)))?;
        let inc = self
            .incidence
            .as_ref()
            .ok_or_else(|| Error::Gap(format!("color incidence of system {}", self.id)))?;
        let inside = |v: &Vec<i64>| v.iter().enumerate().all(|(a, &c)| c == 0 || s.contains(&a));
        let keep_s: Vec<usize> = (0..self.n_sigma()).filter(|&j| inside(&roots[j])).collect();
        let keep_d: Vec<usize> = (0..self.n_colors())
            .filter(|&d| s.iter().any(|&a| inc[d][a] != 0))
            .collect();
        Ok(self.restrict(&format!("{}|loc", self.id), &keep_s, &keep_d, Some(s)))
    }

    pub fn localize_on_support(&self) -> Result<SphericalSystem> {
        let s = self
            .support()
            .ok_or_else(|| Error::Gap(format!("spherical roots of system {}", self.id)))?;
        self.localization(&s)
    }

    fn restrict(&self, id: &str, keep_s: &[usize], keep_d: &[usize], simple: Option<&[usize]>) -> SphericalSystem {
        let all: Vec<usize> = (0..self.rank()).collect();
        let simple = simple.unwrap_or(&all);
        let pick = |v: &Vec<i64>| simple.iter().map(|&a| v[a]).collect::<Vec<i64>>();
        SphericalSystem {
            id: id.to_string(),
            ambient: if simple.len() == self.rank() {
                self.ambient.clone()
            } else {
                Vec::new()
            },
            simple_roots: simple.iter().map(|&a| self.simple_roots[a].clone()).collect(),
            cartan: simple
                .iter()
                .map(|&a| simple.iter().map(|&b| self.cartan[a][b]).collect())
                .collect(),
            sp: self
                .sp
                .iter()
                .filter_map(|a| simple.iter().position(|b| b == a))
                .collect(),
            sigma_names: keep_s.iter().map(|&j| self.sigma_names[j].clone()).collect(),
            sigma_roots: self
                .sigma_roots
                .as_ref()
                .map(|r| keep_s.iter().map(|&j| pick(&r[j])).collect()),
            color_names: keep_d.iter().map(|&d| self.color_names[d].clone()).collect(),
            incidence: self
                .incidence
                .as_ref()
                .map(|inc| keep_d.iter().map(|&d| pick(&inc[d])).collect()),
            pairing: keep_d
                .iter()
                .map(|&d| keep_s.iter().map(|&j| self.pairing[d][j]).collect())
                .collect(),
        }
    }

    /// Same matrices up to names: pairing, roots, incidence, Cartan, S^p.
    pub fn same_data(&self, other: &SphericalSystem) -> bool {
        self.pairing == other.pairing
            && self.sigma_roots == other.sigma_roots
            && self.incidence == other.incidence
            && self.cartan == other.cartan
            && self.sp == other.sp
    }
}
