use std::path::PathBuf;

use awfs_core::goldens::{diff, render, DriftStatus, Golden};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../goldens")
}

#[test]
fn shipped_goldens_have_no_drift() {
    let files = render().unwrap();
    assert_eq!(files.len(), 20);
    let drift = diff(&files, |p| std::fs::read(root().join(p)).ok());
    assert!(drift.is_empty(), "{drift:?}");
}

#[test]
fn diff_locates_changes_and_missing_files() {
    let g = vec![Golden { path: "a.json".into(), content: "{\"x\": 1}\n".into() }, Golden { path: "b.json".into(), content: "[]\n".into() }];
    let d = diff(&g, |p| (p == "a.json").then(|| b"{\"x\": 2}\n".to_vec()));
    assert_eq!(d.len(), 2);
    assert_eq!((d[0].status, d[0].offset), (DriftStatus::Changed, Some(6)));
    assert_eq!((d[1].status, d[1].offset), (DriftStatus::Missing, None));
    assert!(diff(&g, |p| g.iter().find(|x| x.path == p).map(|x| x.content.clone().into_bytes())).is_empty());
}

#[test]
fn rendering_is_deterministic() {
    assert_eq!(render().unwrap(), render().unwrap());
}
