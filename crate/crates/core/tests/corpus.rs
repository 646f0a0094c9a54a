use kalliance::bounds::kn_closed_form;
use kalliance::harness::corpus::{run_corpus, CorpusSpec};

#[test]
fn complete_graphs_match_closed_form() {
    let mut text = String::from("targets = [\"gamma_k_a\"]\n");
    for n in 2..=8 {
        text.push_str(&format!("[[graph]]\nfamily = \"complete\"\nn = {n}\n"));
    }
    let spec = CorpusSpec::from_toml(&text).unwrap();
    let outcome = run_corpus(&spec, 2).unwrap();
    assert_eq!(outcome.violation_count(), 0);
    let mut checked = 0;
    for row in outcome.rows.iter().filter(|r| r.target == "gamma_k_a") {
        let k = row.k.unwrap();
        // k runs over -d_1..=d_1 = 1-n..=n-1
        let expected = kn_closed_form(row.n, k).unwrap();
        assert_eq!(row.value.map(|v| v as i64), Some(expected), "{} k={k}", row.graph_id);
        checked += 1;
    }
    assert_eq!(checked, (2..=8).map(|n| 2 * n - 1).sum::<usize>());
}

#[test]
fn default_corpus_csv_is_independent_of_workers() {
    let spec = CorpusSpec::default_corpus();
    let mut outputs = Vec::new();
    for workers in [1, 4] {
        let mut buf = Vec::new();
        run_corpus(&spec, workers).unwrap().write_csv(&mut buf).unwrap();
        outputs.push(buf);
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn oversized_graphs_are_recorded_not_fatal() {
    let spec =
        CorpusSpec::from_toml("max_n = 6\n[[graph]]\nfamily = \"path\"\nn = 7\n[[graph]]\nfamily = \"cycle\"\nn = 5\n")
            .unwrap();
    let outcome = run_corpus(&spec, 1).unwrap();
    assert_eq!(outcome.violation_count(), 0);
    let path_rows: Vec<_> = outcome
        .rows
        .iter()
        .filter(|r| r.graph_id.starts_with("path-7"))
        .collect();
    assert!(!path_rows.is_empty() && path_rows.iter().all(|r| r.status == "error"));
    assert!(outcome.records.iter().any(|r| !r.errors.is_empty()));
    assert!(outcome
        .rows
        .iter()
        .any(|r| r.graph_id.starts_with("cycle-5") && r.status == "found"));
}

#[test]
fn records_serialize_with_expected_fields() {
    let spec = CorpusSpec::from_toml("[[graph]]\nfamily = \"star\"\nn = 5\n").unwrap();
    let outcome = run_corpus(&spec, 1).unwrap();
    let v = serde_json::to_value(&outcome).unwrap();
    let first = &v["records"][0];
    for field in ["graph_id", "k", "values", "bounds", "violations", "errors"] {
        assert!(first.get(field).is_some(), "missing {field}");
    }
    assert!(first["graph_id"].as_str().unwrap().starts_with("star-5#"));
}
