use std::fs;

use serde_json::Value;
use sl2swc::cache::{CacheStatus, GroupChoice, TableCache, FORMAT_VERSION};
use sl2swc_core::characters::CharacterTable;

fn same_table(a: &CharacterTable, b: &CharacterTable) {
    assert_eq!(a.len(), b.len());
    assert_eq!(a.degrees(), b.degrees());
    assert_eq!(a.central_signs(), b.central_signs());
    for i in 0..a.len() {
        assert_eq!(a.indicator(i), b.indicator(i));
        assert_eq!(a.dual(i), b.dual(i));
        assert_eq!(a.character(i).values(), b.character(i).values());
    }
}

fn rewrite(path: &std::path::Path, f: impl FnOnce(&mut Value)) {
    let mut v: Value = serde_json::from_slice(&fs::read(path).unwrap()).unwrap();
    f(&mut v);
    fs::write(path, serde_json::to_vec(&v).unwrap()).unwrap();
}

#[test]
fn miss_then_hit_matches_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(Some(dir.path().to_path_buf()));
    for (group, q) in [(GroupChoice::Sl2, 7), (GroupChoice::Sl2, 8), (GroupChoice::Gl2, 5)] {
        let (fresh, s0) = TableCache::disabled().table(group, q).unwrap();
        assert_eq!(s0, CacheStatus::Disabled);
        let (first, s1) = cache.table(group, q).unwrap();
        assert_eq!(s1, CacheStatus::Missing);
        assert!(cache.path(group, q).unwrap().exists());
        let (second, s2) = cache.table(group, q).unwrap();
        assert_eq!(s2, CacheStatus::Hit);
        same_table(&fresh, &first);
        same_table(&fresh, &second);
    }
    let name = cache.path(GroupChoice::Sl2, 7).unwrap();
    assert_eq!(name.file_name().unwrap().to_str().unwrap(), format!("sl2-7-v{FORMAT_VERSION}.json"));
}

#[test]
fn rejects_tampered_files_and_repairs_them() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(Some(dir.path().to_path_buf()));
    let path = cache.path(GroupChoice::Sl2, 5).unwrap();
    cache.table(GroupChoice::Sl2, 5).unwrap();

    rewrite(&path, |v| v["payload"]["characters"][1][0][0] = Value::from(99));
    assert_eq!(cache.table(GroupChoice::Sl2, 5).unwrap().1, CacheStatus::Rejected("digest mismatch"));
    assert_eq!(cache.table(GroupChoice::Sl2, 5).unwrap().1, CacheStatus::Hit);

    rewrite(&path, |v| v["key"]["version"] = Value::from(FORMAT_VERSION + 1));
    assert_eq!(cache.table(GroupChoice::Sl2, 5).unwrap().1, CacheStatus::Rejected("format version"));

    rewrite(&path, |v| v["key"]["q"] = Value::from(7));
    assert_eq!(cache.table(GroupChoice::Sl2, 5).unwrap().1, CacheStatus::Rejected("key mismatch"));

    fs::write(&path, b"{ not json").unwrap();
    assert_eq!(cache.table(GroupChoice::Sl2, 5).unwrap().1, CacheStatus::Rejected("unreadable"));

    let (t, s) = cache.table(GroupChoice::Sl2, 5).unwrap();
    assert_eq!(s, CacheStatus::Hit);
    same_table(&TableCache::disabled().table(GroupChoice::Sl2, 5).unwrap().0, &t);
}

#[test]
fn no_temporary_files_left_behind() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(Some(dir.path().join("nested")));
    cache.table(GroupChoice::Sl2, 3).unwrap();
    cache.table(GroupChoice::Sl2, 4).unwrap();
    let mut names: Vec<_> = fs::read_dir(dir.path().join("nested"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["sl2-3-v1.json", "sl2-4-v1.json"]);
}
