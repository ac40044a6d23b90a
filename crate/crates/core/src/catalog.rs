//! Named Lie algebras and metrics, stored as text files with an index of
//! expected invariants.
//!
//! The files under `catalog/` are compiled in. Setting `NILMETRIC_CATALOG`
//! to a directory containing an `index.toml` loads that directory instead.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::Deserialize;

use crate::derivations::{nikolayevsky, Spectrum};
use crate::error::{Error, Result};
use crate::io::text::{parse_algebra, AlgebraDocument};
use crate::lie::{center, derived_algebra, dims, lcs, ucs, LieAlgebra};
use crate::metric::BilinearForm;
use crate::Rational;

pub const CATALOG_ENV: &str = "NILMETRIC_CATALOG";

const BUILTIN: &[(&str, &str)] = &[
    ("index.toml", include_str!("../catalog/index.toml")),
    ("g11.lie", include_str!("../catalog/g11.lie")),
    ("h12.lie", include_str!("../catalog/h12.lie")),
    ("n9.lie", include_str!("../catalog/n9.lie")),
    ("ntilde10.lie", include_str!("../catalog/ntilde10.lie")),
    ("18a.lie", include_str!("../catalog/18a.lie")),
    ("18b.lie", include_str!("../catalog/18b.lie")),
    ("table1-1.lie", include_str!("../catalog/table1-1.lie")),
    ("table1-2.lie", include_str!("../catalog/table1-2.lie")),
    ("table1-3.lie", include_str!("../catalog/table1-3.lie")),
    ("table1-4.lie", include_str!("../catalog/table1-4.lie")),
    ("table1-5.lie", include_str!("../catalog/table1-5.lie")),
    ("table1-6.lie", include_str!("../catalog/table1-6.lie")),
    ("table1-7.lie", include_str!("../catalog/table1-7.lie")),
    ("table1-8.lie", include_str!("../catalog/table1-8.lie")),
    ("table1-9.lie", include_str!("../catalog/table1-9.lie")),
    ("table1-10.lie", include_str!("../catalog/table1-10.lie")),
    ("ext5.lie", include_str!("../catalog/ext5.lie")),
    ("ext6.lie", include_str!("../catalog/ext6.lie")),
];

#[derive(Deserialize)]
struct IndexFile {
    #[serde(default)]
    entry: Vec<IndexEntry>,
    #[serde(default)]
    slice: Vec<Slice>,
}

#[derive(Deserialize)]
struct IndexEntry {
    name: String,
    file: String,
    about: String,
    spectrum: Option<String>,
    lcs: Option<Vec<usize>>,
    ucs: Option<Vec<usize>>,
}

/// Invariants recorded for an entry. Absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub spectrum: Option<Spectrum>,
    pub lcs: Option<Vec<usize>>,
    pub ucs: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub about: String,
    /// Source text of the entry file.
    pub text: String,
    pub document: AlgebraDocument,
    pub algebra: LieAlgebra<Rational>,
    pub metric: Option<BilinearForm<Rational>>,
    pub expected: Expected,
}

impl CatalogEntry {
    /// An entry read from a standalone document, with nothing expected.
    pub fn from_text(text: &str, check_jacobi: bool) -> Result<Self> {
        let document = parse_algebra(text)?;
        let algebra = document.to_algebra(check_jacobi)?;
        let metric = document.to_metric()?;
        Ok(CatalogEntry {
            name: document.name.clone(),
            about: String::new(),
            text: text.to_string(),
            document,
            algebra,
            metric,
            expected: Expected::default(),
        })
    }
}

/// Group of catalog entries sharing dimension and series dimensions.
/// `complete` marks slices known to list every nice Lie algebra with that
/// signature.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Slice {
    pub name: String,
    pub dim: usize,
    pub lcs: Vec<usize>,
    pub ucs: Vec<usize>,
    pub members: Vec<String>,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
    order: Vec<String>,
    slices: Vec<Slice>,
    spectra: Arc<Mutex<HashMap<String, Spectrum>>>,
}

/// One recomputed invariant of one entry.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub what: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EntryReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(what: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { what: what.to_string(), pass, detail: detail.into() }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl Catalog {
    /// The catalog selected by `NILMETRIC_CATALOG`, or the built-in one.
    pub fn load_default() -> Result<Self> {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir)),
            _ => Self::builtin(),
        }
    }

    pub fn builtin() -> Result<Self> {
        Self::from_reader(|file| {
            BUILTIN
                .iter()
                .find(|(n, _)| *n == file)
                .map(|(_, t)| t.to_string())
                .ok_or_else(|| Error::Catalog(format!("no built-in file `{file}`")))
        })
    }

    pub fn from_dir(dir: &Path) -> Result<Self> {
        let dir: PathBuf = dir.to_path_buf();
        Self::from_reader(|file| {
            std::fs::read_to_string(dir.join(file)).map_err(|e| Error::Io(format!("{}: {e}", dir.join(file).display())))
        })
    }

    fn from_reader(read: impl Fn(&str) -> Result<String>) -> Result<Self> {
        let index: IndexFile =
            toml::from_str(&read("index.toml")?).map_err(|e| Error::Catalog(format!("index.toml: {e}")))?;
        let mut entries = BTreeMap::new();
        let mut order = Vec::new();
        for e in index.entry {
            let text = read(&e.file)?;
            let document = parse_algebra(&text).map_err(|err| Error::Catalog(format!("{}: {err}", e.file)))?;
            if document.name != e.name {
                return Err(Error::Catalog(format!("{} declares name `{}`, index says `{}`", e.file, document.name, e.name)));
            }
            let algebra = document.to_algebra(true).map_err(|err| Error::Catalog(format!("{}: {err}", e.name)))?;
            let metric = document.to_metric()?;
            let spectrum = e.spectrum.as_deref().map(str::parse::<Spectrum>).transpose()?;
            let expected = Expected { spectrum, lcs: e.lcs, ucs: e.ucs };
            order.push(e.name.clone());
            if entries
                .insert(
                    e.name.clone(),
                    CatalogEntry { name: e.name.clone(), about: e.about, text, document, algebra, metric, expected },
                )
                .is_some()
            {
                return Err(Error::Catalog(format!("duplicate entry `{}`", e.name)));
            }
        }
        for s in &index.slice {
            if let Some(m) = s.members.iter().find(|m| !entries.contains_key(*m)) {
                return Err(Error::Catalog(format!("slice `{}` names unknown entry `{m}`", s.name)));
            }
        }
        Ok(Catalog { entries, order, slices: index.slice, spectra: Arc::default() })
    }

    /// Entry names in index order.
    pub fn list(&self) -> &[String] {
        &self.order
    }

    pub fn load(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries.get(name).ok_or_else(|| Error::Catalog(format!("unknown entry `{name}`")))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.order.iter().map(move |n| &self.entries[n])
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Recomputed Nikolayevsky spectrum of an entry, memoized.
    pub fn spectrum(&self, name: &str) -> Result<Spectrum> {
        if let Some(s) = self.spectra.lock().expect("spectrum cache").get(name) {
            return Ok(s.clone());
        }
        let s = nikolayevsky(&self.load(name)?.algebra)?.spectrum();
        self.spectra.lock().expect("spectrum cache").insert(name.to_string(), s.clone());
        Ok(s)
    }

    pub fn verify_all(&self) -> Vec<EntryReport> {
        self.entries().map(verify_entry).collect()
    }
}

/// Recompute Jacobi, metric properties, series and the Nikolayevsky
/// spectrum of an entry and compare with the recorded values.
pub fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let g = &e.algebra;
    let mut checks = Vec::new();
    let jac = g.jacobi_check();
    checks.push(check("jacobi", jac.is_pass(), format!("{jac:?}")));
    if let Some(b) = &e.metric {
        checks.push(check("nondegenerate", b.is_nondegenerate(), ""));
        match b.is_ad_invariant(g) {
            Ok(r) => checks.push(check("ad-invariant", r.is_pass(), format!("{r:?}"))),
            Err(err) => checks.push(check("ad-invariant", false, err.to_string())),
        }
        if b.is_nondegenerate() {
            let ok = b.orth_complement(&derived_algebra(g)).map(|p| p == center(g)).unwrap_or(false);
            checks.push(check("center = (g')^perp", ok, ""));
        }
    }
    let l = dims(&lcs(g));
    let u = dims(&ucs(g));
    if let Some(x) = &e.expected.lcs {
        checks.push(check("lcs", *x == l, format!("expected {} found {}", join(x), join(&l))));
    }
    if let Some(x) = &e.expected.ucs {
        checks.push(check("ucs", *x == u, format!("expected {} found {}", join(x), join(&u))));
    }
    if let Some(x) = &e.expected.spectrum {
        match nikolayevsky(g) {
            Ok(r) => {
                let s = r.spectrum();
                checks.push(check("nikolayevsky", s == *x, format!("expected {x} found {s}")));
            }
            Err(err) => checks.push(check("nikolayevsky", false, err.to_string())),
        }
    }
    EntryReport { name: e.name.clone(), checks }
}
