use pseudocodeword::fixtures;
use pseudocodeword::graph::{emit_alist, parse, MatrixFormat};

fn read(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn alist_files_match_builtins() {
    for name in ["hamming7-a", "hamming7-b", "hamming7-c", "three-cycle", "repetition", "repetition-augmented", "tree", "fano", "len14-d8"] {
        let g = parse(&read(&format!("{name}.alist")), MatrixFormat::Alist).unwrap();
        assert_eq!(g, fixtures::by_name(name).unwrap(), "{name}");
        assert_eq!(emit_alist(&g), read(&format!("{name}.alist")), "{name} round trip");
    }
}

#[test]
fn dense_file_matches_alist() {
    let d = parse(&read("hamming7-a.txt"), MatrixFormat::Dense).unwrap();
    assert_eq!(d, fixtures::hamming7_a());
}
