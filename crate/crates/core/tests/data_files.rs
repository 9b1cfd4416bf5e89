//! The shipped data files must stay in sync with the built-in
//! constructions.

use std::path::Path;

use levelone::embed::{builtin_g2_f4, EmbeddingFile};
use levelone::heisenberg::Scenario;

fn repo_root() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR")).parent().unwrap().parent().unwrap()
}

#[test]
fn shipped_g2_f4_embedding_matches_builtin() {
    let path = repo_root().join("data/embeddings/e8_g2_f4.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let file: EmbeddingFile = serde_json::from_str(&text).unwrap();
    let builtin = builtin_g2_f4().unwrap();
    assert_eq!(file, EmbeddingFile::from_embedding(&builtin, true));
    // and it validates as a loadable embedding
    let loaded = EmbeddingFile::load(&path).unwrap();
    assert_eq!(loaded.restriction, builtin.restriction);
    assert_eq!(loaded.index, vec![1, 1]);
}

#[test]
fn shipped_scenarios_parse() {
    let dir = repo_root().join("data/scenarios");
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let sc: Scenario = serde_json::from_str(&text).unwrap();
        assert!(!sc.center.is_empty());
        assert!(sc.genus >= 1);
        // size guard from the specification of the finite model
        let size: u64 = sc.center.iter().product::<u64>().pow(2 * sc.genus as u32);
        assert!(size <= 10_000, "{path:?} too large: {size}");
        count += 1;
    }
    assert_eq!(count, 5);
}
