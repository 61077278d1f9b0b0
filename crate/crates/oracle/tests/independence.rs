//! The oracle must not share evaluation code with the kernel it checks.

#[test]
fn manifest_does_not_depend_on_the_state_evaluator() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/Cargo.toml")).unwrap();
    let manifest: toml::Table = text.parse().unwrap();
    for section in ["dependencies", "dev-dependencies", "build-dependencies"] {
        if let Some(deps) = manifest.get(section).and_then(|d| d.as_table()) {
            assert!(!deps.contains_key("causal-core"), "causal-core found in [{section}]");
        }
    }
}

#[test]
fn sources_do_not_mention_the_state_evaluator() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/src");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(!text.contains("causal_core"), "{} refers to causal_core", path.display());
    }
}
