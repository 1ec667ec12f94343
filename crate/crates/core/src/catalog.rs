//! The encoded corpus: symmetric pairs, spherical systems and orbit cases,
//! plus the per-case verification driver.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::expr::{format_combo, parse_combo};
use crate::poset::{LowTriple, Poset};
use crate::rootsys::{RootSystem, SimpleType};
use crate::semigroup::{self, Generator};
use crate::sphersys::{block_cartan, SphericalSystem};

pub const CATALOG_VERSION: u32 = 1;

/// The catalog shipped with the crate.
pub const BUILTIN: &str = include_str!("../data/catalog.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub id: u32,
    pub name: String,
    pub g: String,
    /// simple-root vectors of k, as elements of g
    pub k: Vec<String>,
    /// vector whose eigenvalue is the label after ';' when k has a center
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_extra: Option<String>,
    /// 1-based index of the simple root of g removed to get k (Hermitian pairs)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hermitian_root: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemRecord {
    pub id: String,
    #[serde(default)]
    pub ambient: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<String>>,
    #[serde(default)]
    pub sp: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_names: Option<Vec<String>>,
    /// spherical roots over the simple roots
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
    /// number of spherical roots when `sigma` is absent
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_count: Option<usize>,
    pub colors: Vec<String>,
    /// ω(D) over the fundamental weights
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidence: Option<Vec<String>>,
    /// each spherical root written in colors
    pub pairing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedGenerator {
    pub colors: String,
    pub n: i64,
    pub sigma: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<u32>,
    /// Kostant–Dynkin labels with respect to k, e.g. `10101;1`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
    #[serde(default)]
    pub rank_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    #[serde(default)]
    pub divisors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_star: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub allowed: Option<Vec<String>>,
    /// expected data carried over from this case by deleting colors
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sibling_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_coverings: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_triples: Option<Vec<[String; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_generators: Option<Vec<ExpectedGenerator>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_sigma_generators: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    version: Option<u32>,
    #[serde(default)]
    pair: Vec<PairRecord>,
    #[serde(default)]
    system: Vec<SystemRecord>,
    #[serde(default)]
    case: Vec<CaseRecord>,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub pairs: Vec<PairRecord>,
    pub system_records: Vec<SystemRecord>,
    pub systems: BTreeMap<String, SphericalSystem>,
    pub cases: Vec<CaseRecord>,
}

fn default_root_names(types: &[SimpleType]) -> Vec<String> {
    let mut out = Vec::new();
    for (k, t) in types.iter().enumerate() {
        let primes = "'".repeat(k);
        for i in 1..=t.rank {
            out.push(format!("a{i}{primes}"));
        }
    }
    out
}

pub fn build_system(r: &SystemRecord) -> Result<SphericalSystem> {
    let ctx = |e: Error| Error::Catalog(format!("system {}: {e}", r.id));
    let ambient: Vec<SimpleType> = r
        .ambient
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()
        .map_err(ctx)?;
    let simple_roots = r.simple_roots.clone().unwrap_or_else(|| default_root_names(&ambient));
    let rank: usize = ambient.iter().map(|t| t.rank).sum();
    if simple_roots.len() != rank {
        return Err(ctx(Error::Dimension(simple_roots.len(), rank)));
    }
    let sp =
        r.sp.iter()
            .map(|a| {
                simple_roots
                    .iter()
                    .position(|b| b == a)
                    .ok_or_else(|| ctx(Error::Parse(format!("unknown simple root `{a}`"))))
            })
            .collect::<Result<Vec<usize>>>()?;
    let sigma_roots = r
        .sigma
        .as_ref()
        .map(|v| {
            v.iter()
                .map(|s| parse_combo(s, &simple_roots))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()
        .map_err(ctx)?;
    let k = r.pairing.len();
    if let Some(s) = &sigma_roots {
        if s.len() != k {
            return Err(ctx(Error::Dimension(s.len(), k)));
        }
    }
    if let Some(c) = r.sigma_count {
        if c != k {
            return Err(ctx(Error::Dimension(c, k)));
        }
    }
    let sigma_names = r
        .sigma_names
        .clone()
        .unwrap_or_else(|| (1..=k).map(|i| format!("σ{i}")).collect());
    if sigma_names.len() != k {
        return Err(ctx(Error::Dimension(sigma_names.len(), k)));
    }
    let cols = r
        .pairing
        .iter()
        .map(|s| parse_combo(s, &r.colors))
        .collect::<Result<Vec<_>>>()
        .map_err(ctx)?;
    let pairing: Vec<Vec<i64>> = (0..r.colors.len())
        .map(|d| cols.iter().map(|c| c[d]).collect())
        .collect();
    let incidence = r
        .incidence
        .as_ref()
        .map(|v| {
            v.iter()
                .map(|s| parse_combo(s, &simple_roots))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()
        .map_err(ctx)?;
    if let Some(inc) = &incidence {
        if inc.len() != r.colors.len() {
            return Err(ctx(Error::Dimension(inc.len(), r.colors.len())));
        }
    }
    Ok(SphericalSystem {
        id: r.id.clone(),
        cartan: block_cartan(&ambient),
        ambient,
        simple_roots,
        sp,
        sigma_names,
        sigma_roots,
        color_names: r.colors.clone(),
        incidence,
        pairing,
    })
}

impl Catalog {
    pub fn builtin() -> Result<Catalog> {
        parse_catalog(BUILTIN)
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn pair(&self, id: u32) -> Option<&PairRecord> {
        self.pairs.iter().find(|p| p.id == id)
    }

    pub fn case_ids(&self) -> Vec<String> {
        self.cases.iter().map(|c| c.id.clone()).collect()
    }

    pub fn to_toml(&self) -> String {
        let file = CatalogFile {
            version: Some(CATALOG_VERSION),
            pair: self.pairs.clone(),
            system: self.system_records.clone(),
            case: self.cases.clone(),
        };
        toml::to_string(&file).expect("catalog serializes")
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

/// Parse and validate. A file with no content is an empty catalog;
/// anything else must carry `version = 1`.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    if text.trim().is_empty() {
        return Ok(Catalog::default());
    }
    let file: CatalogFile = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
    match file.version {
        Some(CATALOG_VERSION) => {}
        Some(v) => return Err(Error::Catalog(format!("unsupported version {v}"))),
        None => return Err(Error::Catalog("missing `version`".into())),
    }
    let mut systems = BTreeMap::new();
    for r in &file.system {
        let s = build_system(r)?;
        let failed: Vec<String> = s
            .validate()
            .into_iter()
            .filter(|c| !c.ok)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        if !failed.is_empty() {
            return Err(Error::Catalog(format!("system {}: {}", r.id, failed.join("; "))));
        }
        if systems.insert(r.id.clone(), s).is_some() {
            return Err(Error::Catalog(format!("duplicate system {}", r.id)));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for p in &file.pair {
        if !seen.insert(p.id) {
            return Err(Error::Catalog(format!("duplicate pair {}", p.id)));
        }
        p.g.parse::<SimpleType>()
            .map_err(|e| Error::Catalog(format!("pair {}: {e}", p.id)))?;
    }
    let ids: Vec<&str> = file.case.iter().map(|c| c.id.as_str()).collect();
    for (i, c) in file.case.iter().enumerate() {
        let ctx = |m: String| Error::Catalog(format!("case {}: {m}", c.id));
        if ids[..i].contains(&c.id.as_str()) {
            return Err(ctx("duplicate id".into()));
        }
        if let Some(p) = c.pair {
            if !file.pair.iter().any(|q| q.id == p) {
                return Err(ctx(format!("unknown pair {p}")));
            }
            if c.normal.is_none() {
                return Err(ctx("`normal` missing".into()));
            }
        }
        let triple = [&c.e, &c.h, &c.f];
        if triple.iter().any(|t| t.is_some()) && (triple.iter().any(|t| t.is_none()) || c.pair.is_none()) {
            return Err(ctx("a triple needs e, h, f and a pair".into()));
        }
        for (what, r) in [("alias_of", &c.alias_of), ("sibling_of", &c.sibling_of)] {
            if let Some(a) = r {
                if !ids.contains(&a.as_str()) || a == &c.id {
                    return Err(ctx(format!("{what} refers to unknown case {a}")));
                }
            }
        }
        if let Some(a) = &c.alias_of {
            let t = file.case.iter().find(|x| &x.id == a).expect("checked");
            if t.normal != c.normal {
                return Err(ctx(format!("normality differs from alias {a}")));
            }
        }
        if let Some(s) = &c.system {
            let sys = systems.get(s).ok_or_else(|| ctx(format!("unknown system {s}")))?;
            for d in &c.divisors {
                let v = parse_combo(d, &sys.color_names).map_err(|e| ctx(e.to_string()))?;
                if v.iter().any(|&x| x < 0) {
                    return Err(ctx(format!("divisor {d} is not in NΔ")));
                }
            }
            if let Some(l) = &c.lambda_star {
                if l.len() != c.divisors.len() {
                    return Err(ctx("lambda_star and divisors differ in length".into()));
                }
            }
        } else if !c.divisors.is_empty() || c.expected_coverings.is_some() || c.expected_generators.is_some() {
            return Err(ctx("spherical data without a system".into()));
        }
    }
    Ok(Catalog {
        pairs: file.pair,
        system_records: file.system,
        systems,
        cases: file.case,
    })
}

/// `10101;1` → [1,0,1,0,1,1]. Digits before `;` are single labels.
pub fn parse_labels(s: &str) -> Result<Vec<i64>> {
    let (main, extra) = match s.split_once(';') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let mut out: Vec<i64> = main
        .trim()
        .chars()
        .map(|c| {
            c.to_digit(10)
                .map(i64::from)
                .ok_or_else(|| Error::Parse(format!("label `{s}`")))
        })
        .collect::<Result<_>>()?;
    if let Some(x) = extra {
        out.push(x.trim().parse().map_err(|_| Error::Parse(format!("label `{s}`")))?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub status: Status,
    pub lines: Vec<String>,
}

impl Section {
    fn new(name: &str) -> Self {
        Section {
            name: name.into(),
            status: Status::Pass,
            lines: Vec::new(),
        }
    }

    fn skipped(name: &str, why: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            status: Status::Skipped,
            lines: vec![why.into()],
        }
    }

    fn check(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        if ok {
            self.lines.push(line);
        } else {
            self.status = Status::Fail;
            self.lines.push(format!("MISMATCH: {line}"));
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn fail(name: &str, why: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            status: Status::Fail,
            lines: vec![why.into()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub title: String,
    /// normality as computed; `None` when the data is not encoded
    pub computed_normal: Option<bool>,
    pub expected_normal: Option<bool>,
    pub sections: Vec<Section>,
}

impl CaseReport {
    pub fn count(&self, s: Status) -> usize {
        self.sections.iter().filter(|x| x.status == s).count()
    }
}

pub const SECTIONS: [&str; 8] = [
    "triples",
    "labels",
    "system",
    "covering",
    "low-triples",
    "normality",
    "semigroup",
    "weights",
];

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub bound: i64,
    /// rerun coverings and semigroups at twice the bound
    pub stability: bool,
    /// `None` runs every section that has data
    pub sections: Option<Vec<String>>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            bound: 8,
            stability: true,
            sections: None,
        }
    }
}

impl RunOptions {
    fn wants(&self, s: &str) -> bool {
        self.sections.as_ref().map_or(true, |v| v.iter().any(|x| x == s))
    }

    fn explicit(&self, s: &str) -> bool {
        self.sections.as_ref().is_some_and(|v| v.iter().any(|x| x == s))
    }
}

/// Runs cases against one catalog, caching algebras and centralizers.
pub struct Runner<'c> {
    pub catalog: &'c Catalog,
    pub options: RunOptions,
    algebras: HashMap<String, ChevalleyAlgebra>,
    centralizers: HashMap<String, usize>,
}

fn weight_names(sys: &SphericalSystem) -> Vec<String> {
    sys.simple_roots
        .iter()
        .map(|a| format!("ω{}", a.strip_prefix('a').unwrap_or(a)))
        .collect()
}

fn normalize_triple(t: &LowTriple) -> (usize, usize, Vec<i64>, Vec<i64>) {
    (t.d.min(t.e), t.d.max(t.e), t.f.clone(), t.gamma.clone())
}

impl<'c> Runner<'c> {
    pub fn new(catalog: &'c Catalog, options: RunOptions) -> Self {
        Runner {
            catalog,
            options,
            algebras: HashMap::new(),
            centralizers: HashMap::new(),
        }
    }

    fn algebra(&mut self, g: &str) -> Result<&ChevalleyAlgebra> {
        if !self.algebras.contains_key(g) {
            let rs = RootSystem::from_str_type(g)?;
            self.algebras.insert(g.to_string(), ChevalleyAlgebra::new(rs));
        }
        Ok(&self.algebras[g])
    }

    fn centralizer(&mut self, case: &CaseRecord) -> Result<usize> {
        if let Some(&c) = self.centralizers.get(&case.id) {
            return Ok(c);
        }
        let pair = self
            .catalog
            .pair(
                case.pair
                    .ok_or_else(|| Error::Catalog(format!("case {} has no pair", case.id)))?,
            )
            .expect("validated");
        let g = pair.g.clone();
        let alg = self.algebra(&g)?;
        let e = alg.parse_element(case.e.as_deref().unwrap_or("0"))?;
        let c = alg.centralizer_dim(&e)?;
        self.centralizers.insert(case.id.clone(), c);
        Ok(c)
    }

    pub fn run_all(&mut self) -> Vec<CaseReport> {
        let cases = self.catalog.cases.clone();
        cases.iter().map(|c| self.run_case(c)).collect()
    }

    pub fn run_id(&mut self, id: &str) -> Result<CaseReport> {
        let c = self.catalog.case(id).cloned().ok_or_else(|| {
            Error::Catalog(format!(
                "unknown case `{id}`; valid ids: {}",
                self.catalog.case_ids().join(", ")
            ))
        })?;
        Ok(self.run_case(&c))
    }

    pub fn run_case(&mut self, case: &CaseRecord) -> CaseReport {
        let pair = case.pair.and_then(|p| self.catalog.pair(p)).cloned();
        let title = match (&pair, &case.labels) {
            (Some(p), Some(l)) => format!("{} ({l})", p.name),
            (Some(p), None) => p.name.clone(),
            _ => format!("system {}", case.system.as_deref().unwrap_or("?")),
        };
        let mut sections = Vec::new();
        let mut computed_normal = None;
        let o = self.options.clone();

        if let Some(p) = &pair {
            if o.wants("triples") {
                sections.push(self.triple_section(case, p));
            }
            if o.wants("labels") {
                sections.push(self.label_section(case, p));
            }
        }

        let sys = case.system.as_ref().map(|s| &self.catalog.systems[s]);
        if let Some(sys) = sys {
            if o.wants("system") {
                sections.push(system_section(sys, case));
            }
            let poset = Poset::new(sys);
            if o.wants("covering") && (case.expected_coverings.is_some() || o.explicit("covering")) {
                sections.push(covering_section(&poset, case, &o));
            }
            if o.wants("low-triples") && (case.expected_triples.is_some() || o.explicit("low-triples")) {
                sections.push(low_triple_section(&poset, case, &o));
            }
            if !case.divisors.is_empty() {
                let divs: Vec<Vec<i64>> = case
                    .divisors
                    .iter()
                    .map(|d| parse_combo(d, &sys.color_names).expect("validated"))
                    .collect();
                let verdict = semigroup::normality(&poset, &divs);
                computed_normal = Some(verdict.normal);
                if o.wants("normality") {
                    sections.push(normality_section(sys, case, &verdict));
                }
                if o.wants("semigroup") {
                    sections.push(semigroup_section(&poset, case, &divs, &o));
                }
                if o.wants("weights") {
                    sections.push(weight_section(&poset, case, pair.as_ref(), &divs, &o));
                }
            }
        } else if case.pair.is_some() && o.wants("normality") {
            if case.rank_zero {
                // no spherical roots: every divisor is minuscule
                computed_normal = Some(true);
                let mut s = Section::new("normality");
                s.check(
                    case.normal == Some(true),
                    "NORMAL (rank zero: Σ is empty, every D_p is minuscule)",
                );
                sections.push(s);
            } else {
                sections.push(Section::skipped(
                    "normality",
                    format!(
                        "spherical system not encoded; recorded verdict {}",
                        if case.normal == Some(false) {
                            "NOT NORMAL"
                        } else {
                            "NORMAL"
                        }
                    ),
                ));
            }
        }

        CaseReport {
            id: case.id.clone(),
            title,
            computed_normal,
            expected_normal: case.normal,
            sections,
        }
    }

    fn triple_section(&mut self, case: &CaseRecord, pair: &PairRecord) -> Section {
        let (Some(e), Some(h), Some(f)) = (&case.e, &case.h, &case.f) else {
            return Section::skipped("triples", "no triple recorded");
        };
        let mut s = Section::new("triples");
        let res = (|| -> Result<()> {
            let alg = self.algebra(&pair.g)?;
            let (ev, hv, fv) = (alg.parse_element(e)?, alg.parse_element(h)?, alg.parse_element(f)?);
            s.note(format!("e = {e}"));
            s.note(format!("h = {h}"));
            s.note(format!("f = {f}"));
            if let Some(x) = &case.erratum {
                s.note(format!("erratum: {x}"));
            }
            let rep = alg.verify_triple(&ev, &hv, &fv)?;
            s.check(
                rep.sl2_ok,
                format!("sl2 relations: {}", if rep.sl2_ok { "hold" } else { "fail" }),
            );
            s.check(rep.cartan_ok, "h lies in the Cartan subalgebra");
            if !rep.flipped.is_empty() {
                s.note(format!(
                    "holds after negating x, y for roots {}",
                    rep.flipped.join(", ")
                ));
            }
            let gr = alg.ad_grading(&hv)?;
            let sym = gr.dims.iter().all(|(k, v)| gr.dims.get(&-k) == Some(v));
            s.check(sym, "ad(h) grading symmetric");
            let g0 = gr.dims.get(&0).copied().unwrap_or(0);
            s.check(g0 >= alg.rank(), format!("dim g(0) = {g0} ≥ rank {}", alg.rank()));
            let dims: Vec<String> = gr.dims.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            s.note(format!("ad(h) grading {{{}}}, height {}", dims.join(", "), gr.height));
            Ok(())
        })();
        if let Err(err) = res {
            s.check(false, err.to_string());
            return s;
        }
        match self.centralizer(case) {
            Ok(c) => s.note(format!("dim g^e = {c}")),
            Err(err) => s.check(false, err.to_string()),
        }
        if let Some(a) = &case.alias_of {
            let target = self.catalog.case(a).cloned().expect("validated");
            match (self.centralizer(case), self.centralizer(&target)) {
                (Ok(x), Ok(y)) => s.check(x == y, format!("alias of {a}: centralizer dims {x} and {y}")),
                (Err(err), _) | (_, Err(err)) => s.check(false, err.to_string()),
            }
        }
        s
    }

    fn label_section(&mut self, case: &CaseRecord, pair: &PairRecord) -> Section {
        let (Some(labels), Some(h)) = (&case.labels, &case.h) else {
            return Section::skipped("labels", "no labels recorded");
        };
        let mut s = Section::new("labels");
        let res = (|| -> Result<()> {
            let want = parse_labels(labels)?;
            let alg = self.algebra(&pair.g)?;
            let hv = alg.parse_element(h)?;
            let mut vecs: Vec<&String> = pair.k.iter().collect();
            if let Some(x) = &pair.label_extra {
                vecs.push(x);
            }
            let mut got = Vec::new();
            for v in &vecs {
                let x = alg.parse_element(v)?;
                match alg.eigenvalue(&hv, &x)? {
                    Some(l) if l.is_integer() => got.push(l.to_integer()),
                    _ => return Err(Error::Catalog(format!("{v} is not an ad(h)-eigenvector"))),
                }
            }
            s.check(
                got == want,
                format!("eigenvalues on the k simple-root vectors {got:?}, heading {labels}"),
            );
            Ok(())
        })();
        if let Err(err) = res {
            s.check(false, err.to_string());
        }
        s
    }
}

fn system_section(sys: &SphericalSystem, case: &CaseRecord) -> Section {
    let mut s = Section::new("system");
    s.note(format!(
        "system {}: {} colors, {} spherical roots{}",
        sys.id,
        sys.n_colors(),
        sys.n_sigma(),
        if sys.ambient.is_empty() {
            String::new()
        } else {
            format!(
                ", type {}",
                sys.ambient.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("×")
            )
        }
    ));
    if let Some(src) = &case.sibling_of {
        s.note(format!("same pairing as {src} after deleting colors nonpositive on Σ"));
    }
    for c in sys.validate() {
        if c.applicable {
            s.check(c.ok, format!("{}: {}", c.name, c.detail));
        } else {
            s.note(format!("{}: not applicable ({})", c.name, c.detail));
        }
    }
    let pos: Vec<&str> = sys
        .positive_colors()
        .iter()
        .map(|&d| sys.color_names[d].as_str())
        .collect();
    s.note(format!("positive colors: {{{}}}", pos.join(", ")));
    s
}

fn covering_section(poset: &Poset, case: &CaseRecord, o: &RunOptions) -> Section {
    let sys = poset.sys;
    let mut s = Section::new("covering");
    let cov = poset.covering_differences(o.bound);
    for c in &cov.list {
        s.note(format!(
            "{} = {}   (γ⁺ = {}, γ⁻ = {})",
            sys.format_sigma(&c.gamma),
            sys.format_colors(&sys_colors(poset, &c.gamma)),
            sys.format_colors(&c.plus),
            sys.format_colors(&c.minus)
        ));
        s.check(
            poset.is_covering_from_above(&c.gamma),
            format!("{} re-verified", sys.format_sigma(&c.gamma)),
        );
    }
    s.lines
        .retain(|l| l.starts_with("MISMATCH") || !l.ends_with("re-verified"));
    s.note(format!(
        "{} covering differences at bound {}",
        cov.list.len(),
        cov.bound
    ));
    if o.stability {
        let big = poset.covering_differences(2 * o.bound);
        s.check(big.list == cov.list, format!("unchanged at bound {}", 2 * o.bound));
    }
    if let Some(exp) = &case.expected_coverings {
        match exp
            .iter()
            .map(|x| parse_combo(x, &sys.sigma_names))
            .collect::<Result<Vec<_>>>()
        {
            Ok(mut want) => {
                want.sort();
                let mut got: Vec<Vec<i64>> = cov.list.iter().map(|c| c.gamma.clone()).collect();
                got.sort();
                s.check(
                    got == want,
                    format!("matches the {} expected covering differences", want.len()),
                );
            }
            Err(e) => s.check(false, e.to_string()),
        }
    }
    s
}

fn sys_colors(poset: &Poset, g: &[i64]) -> Vec<i64> {
    poset.sigma_to_colors(g)
}

fn low_triple_section(poset: &Poset, case: &CaseRecord, o: &RunOptions) -> Section {
    let sys = poset.sys;
    let mut s = Section::new("low-triples");
    let cov = poset.covering_differences(o.bound);
    let lt = poset.low_fundamental_triples(&cov);
    for w in &lt.warnings {
        s.check(false, w.clone());
    }
    for t in &lt.triples {
        s.note(format!(
            "({}, {}, {})   γ = {}",
            sys.color_names[t.d],
            sys.color_names[t.e],
            sys.format_colors(&t.f),
            sys.format_sigma(&t.gamma)
        ));
    }
    if let Some(exp) = &case.expected_triples {
        let parsed: Result<Vec<LowTriple>> = exp
            .iter()
            .map(|[d, e, f, g]| {
                let idx = |x: &str| {
                    sys.color_names
                        .iter()
                        .position(|n| n == x)
                        .ok_or_else(|| Error::Parse(format!("unknown color {x}")))
                };
                Ok(LowTriple {
                    d: idx(d)?,
                    e: idx(e)?,
                    f: parse_combo(f, &sys.color_names)?,
                    gamma: parse_combo(g, &sys.sigma_names)?,
                })
            })
            .collect();
        match parsed {
            Ok(want) => {
                for t in &want {
                    let mut de = vec![0; sys.n_colors()];
                    de[t.d] += 1;
                    de[t.e] += 1;
                    let lhs: Vec<i64> = de.iter().zip(&t.f).map(|(a, b)| a - b).collect();
                    s.check(
                        lhs == poset.sigma_to_colors(&t.gamma),
                        format!("D + E − F = γ for ({}, {})", sys.color_names[t.d], sys.color_names[t.e]),
                    );
                }
                s.lines
                    .retain(|l| l.starts_with("MISMATCH") || !l.starts_with("D + E − F"));
                let mut w: Vec<_> = want.iter().map(normalize_triple).collect();
                let mut g: Vec<_> = lt.triples.iter().map(normalize_triple).collect();
                w.sort();
                g.sort();
                s.check(g == w, format!("matches the {} expected triples up to D↔E", w.len()));
            }
            Err(e) => s.check(false, e.to_string()),
        }
    }
    s
}

fn divisor_name(case: &CaseRecord, i: usize) -> String {
    if case.divisors.len() == 1 {
        "D_p".into()
    } else {
        format!("D_p{}", i + 1)
    }
}

fn normality_section(sys: &SphericalSystem, case: &CaseRecord, v: &semigroup::Verdict) -> Section {
    let mut s = Section::new("normality");
    let line = if v.normal {
        let names: Vec<String> = case.divisors.iter().map(|d| d.to_string()).collect();
        format!("NORMAL; minuscule: {}", names.join(", "))
    } else {
        v.witnesses
            .iter()
            .map(|w| {
                let g = sys.format_sigma(&w.gamma);
                format!(
                    "NOT NORMAL; witness γ = {g}; {} − {g} = {}",
                    divisor_name(case, w.divisor),
                    sys.format_colors(&w.remainder)
                )
            })
            .collect::<Vec<_>>()
            .join(" | ")
    };
    match case.normal {
        Some(exp) => s.check(exp == v.normal, line),
        None => s.note(line),
    }
    s
}

fn format_generator(sys: &SphericalSystem, case: &CaseRecord, g: &Generator) -> String {
    let d = sys.format_colors(&g.colors);
    let base: Vec<i64> = g.degrees.clone();
    let lhs = if case.divisors.len() == 1 {
        let n = base[0];
        let dp = &case.divisors[0];
        let dp = if dp.contains(' ') {
            format!("({dp})")
        } else {
            dp.clone()
        };
        if n == 1 {
            dp
        } else {
            format!("{n}{dp}")
        }
    } else {
        format!("n = {base:?}")
    };
    if g.sigma.iter().all(|&x| x == 0) {
        format!("{d} = {lhs}")
    } else {
        format!("{d} = {lhs} − ({})", sys.format_sigma(&g.sigma))
    }
}

/// (degrees, colors, σ-part) of a generator, for order-free comparison.
type GenKey = (Vec<i64>, Vec<i64>, Vec<i64>);

fn semigroup_section(poset: &Poset, case: &CaseRecord, divs: &[Vec<i64>], o: &RunOptions) -> Section {
    let sys = poset.sys;
    let mut s = Section::new("semigroup");
    if let Some(src) = &case.sibling_of {
        s.note(format!("expected list carried over from {src}"));
    }
    if let Some(allowed) = &case.allowed {
        let idx: Vec<usize> = allowed
            .iter()
            .filter_map(|a| sys.color_names.iter().position(|n| n == a))
            .collect();
        let sg = semigroup::gamma_sigma(poset, &idx, o.bound);
        s.note(format!(
            "Γ^Σ with supp(γ⁺) ⊂ {{{}}}, degree bound {}",
            allowed.join(", "),
            o.bound
        ));
        for g in &sg.generators {
            s.note(format!(
                "{} = {}",
                sys.format_colors(&poset.sigma_to_colors(g)),
                sys.format_sigma(g)
            ));
        }
        if o.stability {
            let big = semigroup::gamma_sigma(poset, &idx, 2 * o.bound);
            s.check(
                big.generators == sg.generators,
                format!("unchanged at degree bound {}", 2 * o.bound),
            );
        }
        if let Some(exp) = &case.expected_sigma_generators {
            match exp
                .iter()
                .map(|x| parse_combo(x, &sys.sigma_names))
                .collect::<Result<Vec<_>>>()
            {
                Ok(mut want) => {
                    want.sort();
                    let mut got = sg.generators.clone();
                    got.sort();
                    s.check(got == want, format!("matches the {} expected generators", want.len()));
                }
                Err(e) => s.check(false, e.to_string()),
            }
        }
        return s;
    }
    let desc = match semigroup::gamma_multi(poset, divs, o.bound) {
        Ok(d) => d,
        Err(e) => return Section::fail("semigroup", e.to_string()),
    };
    s.note(format!(
        "degree bound {}, {} elements enumerated",
        o.bound, desc.element_count
    ));
    for g in &desc.generators {
        s.note(format_generator(sys, case, g));
    }
    s.note(format!("freely generated: {}", if desc.free { "yes" } else { "no" }));
    s.check(semigroup::minimal(&desc), "no generator is a combination of the others");
    if o.stability {
        match semigroup::gamma_multi(poset, divs, 2 * o.bound) {
            Ok(big) => s.check(
                big.generators == desc.generators,
                format!("unchanged at degree bound {}", 2 * o.bound),
            ),
            Err(e) => s.check(false, e.to_string()),
        }
    }
    if let Some(exp) = &case.expected_generators {
        let parsed: Result<Vec<GenKey>> = exp
            .iter()
            .map(|x| {
                Ok((
                    vec![x.n],
                    parse_combo(&x.colors, &sys.color_names)?,
                    parse_combo(&x.sigma, &sys.sigma_names)?,
                ))
            })
            .collect();
        match parsed {
            Ok(mut want) => {
                for (n, d, g) in &want {
                    let rhs: Vec<i64> = divs[0]
                        .iter()
                        .zip(poset.sigma_to_colors(g))
                        .map(|(a, b)| n[0] * a - b)
                        .collect();
                    s.check(&rhs == d, format!("{} consistent", sys.format_colors(d)));
                }
                s.lines
                    .retain(|l| l.starts_with("MISMATCH") || !l.ends_with(" consistent"));
                want.sort();
                let mut got: Vec<_> = desc
                    .generators
                    .iter()
                    .map(|g| (g.degrees.clone(), g.colors.clone(), g.sigma.clone()))
                    .collect();
                got.sort();
                s.check(got == want, format!("matches the {} expected generators", want.len()));
            }
            Err(e) => s.check(false, e.to_string()),
        }
    }
    s
}

fn weight_section(
    poset: &Poset,
    case: &CaseRecord,
    pair: Option<&PairRecord>,
    divs: &[Vec<i64>],
    o: &RunOptions,
) -> Section {
    let sys = poset.sys;
    let Some(ls) = &case.lambda_star else {
        return Section::skipped("weights", "λ* not recorded");
    };
    if sys.incidence.is_none() {
        return Section::skipped("weights", "color incidence not recorded");
    }
    let mut s = Section::new("weights");
    let wn = weight_names(sys);
    let lambda: Vec<Vec<i64>> = match ls.iter().map(|l| parse_combo(l, &sys.simple_roots)).collect() {
        Ok(v) => v,
        Err(e) => return Section::fail("weights", e.to_string()),
    };
    for (i, (d, l)) in divs.iter().zip(&lambda).enumerate() {
        match sys.omega(d) {
            Ok(w) => s.check(
                &w == l,
                format!("ω({}) = {} = λ*", divisor_name(case, i), format_combo(&w, &wn)),
            ),
            Err(e) => s.check(false, e.to_string()),
        }
    }
    let res =
        semigroup::gamma_multi(poset, divs, o.bound).and_then(|d| semigroup::weight_semigroup(poset, &d, &lambda));
    match res {
        Ok(ws) => {
            for w in &ws {
                s.note(format!("weight generator {}", format_combo(w, &wn)));
            }
        }
        Err(e) => s.check(false, e.to_string()),
    }
    if let Some(p) = pair.and_then(|p| p.hermitian_root.map(|r| (p, r))) {
        let (pr, r) = p;
        match RootSystem::from_str_type(&pr.g).and_then(|rs| rs.hermitian_exponent(r - 1)) {
            Ok(m) => s.note(format!("Z_K character exponent m = {m} ({}, a{r})", pr.g)),
            Err(e) => s.check(false, e.to_string()),
        }
    }
    s
}

/// Aggregate normality: (computed non-normal ids, recorded non-normal ids,
/// cases with a computed verdict).
pub fn normality_census(reports: &[CaseReport]) -> (Vec<String>, Vec<String>, usize) {
    let with_pair: Vec<&CaseReport> = reports.iter().filter(|r| r.expected_normal.is_some()).collect();
    let computed: Vec<String> = with_pair
        .iter()
        .filter(|r| r.computed_normal == Some(false))
        .map(|r| r.id.clone())
        .collect();
    let recorded: Vec<String> = with_pair
        .iter()
        .filter(|r| r.expected_normal == Some(false))
        .map(|r| r.id.clone())
        .collect();
    let n = with_pair.iter().filter(|r| r.computed_normal.is_some()).count();
    (computed, recorded, n)
}

pub fn render_text(reports: &[CaseReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("== case {} : {}\n", r.id, r.title));
        for s in &r.sections {
            out.push_str(&format!("  [{}] {}\n", s.status, s.name));
            for l in &s.lines {
                out.push_str(&format!("      {l}\n"));
            }
        }
    }
    out
}

pub fn summary(reports: &[CaseReport]) -> (usize, usize, usize) {
    reports.iter().fold((0, 0, 0), |(p, f, s), r| {
        (
            p + r.count(Status::Pass),
            f + r.count(Status::Fail),
            s + r.count(Status::Skipped),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let c = Catalog::builtin().unwrap();
        assert_eq!(c.pairs.len(), 12);
        assert_eq!(c.case("12.2").unwrap().normal, Some(false));
        assert_eq!(c.case("3.2").unwrap().alias_of.as_deref(), Some("3.1"));
        assert!(c.cases.iter().filter(|x| x.pair.is_some()).count() >= 60);
    }

    #[test]
    fn empty_and_versions() {
        assert!(parse_catalog("").unwrap().cases.is_empty());
        assert!(parse_catalog("version = 2").is_err());
        assert!(parse_catalog("[[pair]]\nid = 1").is_err());
        assert!(parse_catalog("version = 1").unwrap().pairs.is_empty());
    }

    #[test]
    fn labels() {
        assert_eq!(parse_labels("10101;1").unwrap(), vec![1, 0, 1, 0, 1, 1]);
        assert_eq!(parse_labels("11001;-3").unwrap(), vec![1, 1, 0, 0, 1, -3]);
        assert_eq!(parse_labels("4000").unwrap(), vec![4, 0, 0, 0]);
        assert!(parse_labels("1x").is_err());
    }

    #[test]
    fn roundtrip_toml() {
        let c = Catalog::builtin().unwrap();
        let again = parse_catalog(&c.to_toml()).unwrap();
        assert_eq!(again.cases, c.cases);
        assert_eq!(again.systems, c.systems);
    }
}
