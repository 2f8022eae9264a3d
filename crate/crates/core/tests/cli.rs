use treewire::cli::{run, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE};

fn treewire(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("treewire").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, _) = treewire(args);
    (code, serde_json::from_str(&out).expect("json output"))
}

#[test]
fn wirelength_examples() {
    let (code, v) = json(&["wirelength", "--n", "3", "--p", "2", "--host", "binary", "--n1", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["direct"], 54);
    assert_eq!(v["via_partition"], 54);
    assert_eq!(v["closed_form"], 54);
    assert_eq!(v["cut_conditions_ok"], true);
    assert_eq!(v["per_cut"].as_array().unwrap().len(), 7);

    let (code, v) =
        json(&["wirelength", "--n", "3", "--p", "2", "--host", "sibling", "--n1", "3", "--exhaustive"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["exhaustive_min"], 45);
    assert_eq!(v["direct"], 45);

    let (code, v) = json(&["wirelength", "--n", "3", "--p", "2", "--host", "binary", "--n1", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["direct"], 60);
    assert_eq!(v["k"], 2);
}

#[test]
fn corrupted_embedding_fails() {
    let (code, v) = json(&["wirelength", "--n", "3", "--p", "2", "--swap", "1,6"]);
    assert_eq!(code, EXIT_INCONSISTENT);
    assert_eq!(v["cut_conditions_ok"], false);
    assert!(v["direct"].as_u64().unwrap() > 54);

    // same partite: an automorphism, still optimal
    let (code, v) = json(&["wirelength", "--n", "3", "--p", "2", "--swap", "1,5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["direct"], 54);
}

#[test]
fn local_search_needs_seed() {
    let (code, _, err) = treewire(&["wirelength", "--n", "3", "--p", "2", "--local-search", "100"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--seed"));
    let (code, v) =
        json(&["wirelength", "--n", "3", "--p", "2", "--local-search", "5000", "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(v["local_search_min"].as_u64().unwrap() >= 54);
}

#[test]
fn invalid_parameters_are_usage_errors() {
    for args in [
        &["wirelength", "--n", "3", "--p", "4"][..],
        &["wirelength", "--n", "3", "--p", "1"],
        &["wirelength", "--n", "3", "--p", "2", "--n1", "0"],
        &["wirelength", "--n", "9", "--p", "2"],
        &["wirelength", "--n", "4", "--p", "2", "--exhaustive"],
        &["wirelength", "--n", "3", "--p", "2", "--swap", "1,9"],
        &["wirelength", "--n", "3", "--p", "2", "--variant", "4"],
        &["guest", "--n", "21", "--p", "2"],
        &["frobnicate"],
    ] {
        let (code, _, err) = treewire(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn verify_reports_every_cut() {
    let (code, out, _) = treewire(&["verify", "--n", "3", "--p", "2", "--host", "sibling", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family,j,i,lo,hi,ec,lemma_value,c1,c2,c3");
    assert_eq!(lines.len(), 1 + 11);
    assert!(lines[1..].iter().all(|l| l.ends_with("true,true,true")));

    let (code, _, _) = treewire(&["verify", "--n", "3", "--p", "2", "--swap", "1,6"]);
    assert_eq!(code, EXIT_INCONSISTENT);
}

#[test]
fn sweep_csv() {
    let (code, out, _) = treewire(&["sweep", "--n-min", "2", "--n-max", "4", "--host", "binary", "--n1-min", "4"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "n,p,n1,k,host_kind,closed_form,direct,via_partition,exhaustive_min,cut_conditions_ok,agree"
    );
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "4,2,4,1,binary,324,324,324,,true,true");
    assert!(lines[2].starts_with("4,3,4,1,binary,"));

    let (code, out, _) = treewire(&["sweep", "--n-min", "5", "--n-max", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);

    let (code, _, _) = treewire(&["sweep", "--n-max", "7", "--exhaustive"]);
    assert_eq!(code, EXIT_USAGE);

    let (code, out, _) = treewire(&["sweep", "--n-max", "20", "--n-min", "20", "--p-max", "2", "--formula-only"]);
    assert_eq!(code, EXIT_OK);
    let row = out.lines().nth(1).unwrap();
    assert!(row.starts_with("20,2,1,524288,binary,"));
    assert!(row.ends_with(",,,,,true"));
}

#[test]
fn sweep_exhaustive_confirms_formula() {
    let (code, out, _) = treewire(&["sweep", "--n-max", "3", "--n-min", "3", "--exhaustive"]);
    assert_eq!(code, EXIT_OK);
    for row in out.lines().skip(1) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[5], cells[8], "{row}");
    }
}

#[test]
fn export_dot() {
    let (code, out, _) = treewire(&["export-dot", "--target", "host", "--n1", "4"]);
    assert_eq!(code, EXIT_OK);
    let nodes = out.lines().filter(|l| l.trim().trim_end_matches(';').parse::<usize>().is_ok()).count();
    assert_eq!(nodes, 16);

    let (_, out, _) = treewire(&["export-dot", "--target", "host", "--n1", "3", "--host", "sibling"]);
    assert_eq!(out.matches("style=dashed").count(), 3);

    let (_, out, _) = treewire(&["export-dot", "--target", "host", "--n1", "2", "--n", "3"]);
    assert_eq!(out.matches("style=bold").count(), 1);

    let (_, out, _) = treewire(&["export-dot", "--target", "guest", "--n", "3", "--p", "2"]);
    assert_eq!(out.matches("subgraph cluster_").count(), 4);
    assert_eq!(out.matches(" -- ").count(), 24);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("host.dot");
    let (code, out, _) =
        treewire(&["export-dot", "--target", "host", "--n1", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("graph "));

    let (code, _, _) = treewire(&["export-dot", "--target", "guest", "--n", "3"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn guest_and_host_listings() {
    let (code, v) = json(&["guest", "--n", "3", "--p", "2", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["partites"][0], serde_json::json!([1, 5]));
    assert_eq!(v["edge_count"], 24);

    let (code, v) = json(&["host", "--n1", "2", "--k", "2", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["vertex_count"], 8);
    assert_eq!(v["root_chain"], serde_json::json!([4, 8]));
}
