use std::path::PathBuf;

use nilmetric::catalog::{verify_entry, Catalog, CatalogEntry};
use nilmetric::derivations::{nikolayevsky, Spectrum};
use nilmetric::lie::{center, derived_algebra, lcs, ucs};
use nilmetric::{rat, Error};

fn cat() -> Catalog {
    Catalog::builtin().unwrap()
}

fn dims(s: &[nilmetric::QSubspace]) -> Vec<usize> {
    s.iter().map(|x| x.dim()).collect()
}

#[test]
fn entries_and_slices() {
    let c = cat();
    assert_eq!(c.list().len(), 18);
    for name in ["g11", "h12", "n9", "ntilde10", "18a", "18b", "ext5", "ext6", "table1:1", "table1:10"] {
        assert!(c.load(name).is_ok(), "{name}");
    }
    assert!(matches!(c.load("nosuch"), Err(Error::Catalog(_))));
    for s in c.slices() {
        for m in &s.members {
            let g = &c.load(m).unwrap().algebra;
            assert_eq!(g.dim(), s.dim);
            assert_eq!(dims(&lcs(g)), s.lcs, "{m}");
            assert_eq!(dims(&ucs(g)), s.ucs, "{m}");
        }
    }
    let t1 = c.slices().iter().find(|s| s.members.contains(&"table1:1".to_string())).unwrap();
    assert_eq!(t1.members.len(), 10);
    assert!(t1.complete);
}

#[test]
fn recorded_invariants_hold() {
    for r in cat().verify_all() {
        assert!(r.pass(), "{}: {:?}", r.name, r.checks);
    }
}

#[test]
fn table_one_series() {
    let c = cat();
    for k in 1..=10 {
        let g = &c.load(&format!("table1:{k}")).unwrap().algebra;
        assert_eq!(dims(&ucs(g)), vec![2, 4, 5, 7, 8, 10]);
        assert_eq!(dims(&lcs(g)), vec![10, 7, 5, 3, 2, 1, 0]);
    }
}

#[test]
fn literal_spectra() {
    let c = cat();
    let g11 = Spectrum::scaled(&rat(33, 119), &[1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5]);
    assert_eq!(c.spectrum("g11").unwrap(), g11);
    let t1 = Spectrum::scaled(&rat(2, 37), &[26, 23, 21, 20, 17, 14, 12, 11, 9, 3]);
    assert_eq!(nikolayevsky(&c.load("table1:1").unwrap().algebra).unwrap().spectrum(), t1);
    assert_eq!(c.spectrum("table1:1").unwrap(), t1);
    assert!(c.spectrum("h12").unwrap().is_zero());
}

#[test]
fn metrics_are_invariant_with_center_orthogonal_to_derived() {
    for e in cat().entries() {
        let Some(b) = &e.metric else { continue };
        assert!(b.is_nondegenerate(), "{}", e.name);
        assert!(b.is_ad_invariant(&e.algebra).unwrap().is_pass(), "{}", e.name);
        assert_eq!(b.orth_complement(&derived_algebra(&e.algebra)).unwrap(), center(&e.algebra), "{}", e.name);
    }
}

#[test]
fn broken_expectations_are_detected() {
    let mut e = cat().load("n9").unwrap().clone();
    e.expected.ucs = Some(vec![1, 3, 4, 6, 8, 9]);
    e.expected.spectrum = Some("diag(1,1,1,1,1,1,1,1,1)".parse().unwrap());
    let r = verify_entry(&e);
    assert!(!r.pass());
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.what.as_str()).collect();
    assert_eq!(failed, vec!["ucs", "nikolayevsky"]);
}

#[test]
fn entry_from_text() {
    let e = CatalogEntry::from_text("name h3\ndim 3\nd e3 = -e1^e2\n", true).unwrap();
    assert_eq!(e.name, "h3");
    assert!(e.metric.is_none());
    assert!(verify_entry(&e).pass());
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nilmetric-catalog-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn directory_catalogs() {
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog");
    assert_eq!(Catalog::from_dir(&src).unwrap().list(), cat().list());

    let dir = scratch("small");
    std::fs::write(
        dir.join("index.toml"),
        "[[entry]]\nname = \"h3\"\nfile = \"h3.lie\"\nabout = \"Heisenberg\"\nucs = [1, 3]\n",
    )
    .unwrap();
    std::fs::write(dir.join("h3.lie"), "name h3\ndim 3\nd e3 = -e1^e2\n").unwrap();
    let c = Catalog::from_dir(&dir).unwrap();
    assert_eq!(c.list(), ["h3".to_string()]);
    assert!(c.verify_all().iter().all(|r| r.pass()));

    std::fs::write(dir.join("h3.lie"), "name other\ndim 3\nd e3 = -e1^e2\n").unwrap();
    assert!(matches!(Catalog::from_dir(&dir), Err(Error::Catalog(_))));
    std::fs::remove_file(dir.join("h3.lie")).unwrap();
    assert!(Catalog::from_dir(&dir).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn environment_override() {
    let dir = scratch("env");
    std::fs::write(dir.join("index.toml"), "[[entry]]\nname = \"a2\"\nfile = \"a2.lie\"\nabout = \"abelian\"\n").unwrap();
    std::fs::write(dir.join("a2.lie"), "name a2\ndim 2\n").unwrap();
    std::env::set_var("NILMETRIC_CATALOG", &dir);
    let c = Catalog::load_default();
    std::env::remove_var("NILMETRIC_CATALOG");
    assert_eq!(c.unwrap().list(), ["a2".to_string()]);
    assert_eq!(Catalog::load_default().unwrap().list().len(), 18);
    std::fs::remove_dir_all(&dir).unwrap();
}
