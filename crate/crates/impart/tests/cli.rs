use impart::run;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], input: &str) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("impart").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn json(args: &[&str], input: &str) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = cli(&full, input);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn treewidth_of_c4() {
    let out = cli(&["param", "treewidth"], C4);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.lines().any(|l| l == "value: 2"),
        "{}",
        out.stdout
    );
    assert_eq!(json(&["param", "treewidth"], C4)["value"], 2);
}

#[test]
fn independence_fpt_on_c5_says_yes_with_witness() {
    let args = [
        "large-fpt",
        "--param",
        "independence_number",
        "--k",
        "2",
        "--ell",
        "2",
        "--m",
        "1",
    ];
    let v = json(&args, C5);
    assert_eq!(v["verdict"], true);
    let witness = v["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 1);
    // deleting any one vertex of C5 leaves P4: bipartite with α = 2
    assert!(witness[0].as_u64().unwrap() < 5);
}

#[test]
fn pk_order_of_k4() {
    let v = json(&["pk", "--param", "order", "--k", "2"], K4);
    assert_eq!(v["value"], 2);
    assert_eq!(v["subset"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_carry_schema_version() {
    assert_eq!(json(&["param", "order"], C4)["schema"], 1);
    assert_eq!(json(&["gen", "cycle", "--n", "5"], "")["schema"], 1);
}

#[test]
fn oracle_and_fpt_agree_through_the_cli() {
    for param in [
        "independence_number",
        "order",
        "size",
        "treewidth",
        "pathwidth",
    ] {
        let args = |cmd| vec![cmd, "--param", param, "--k", "2", "--ell", "1", "--m", "2"];
        let a = json(&args("large-oracle"), C5);
        let b = json(&args("large-fpt"), C5);
        assert_eq!(a["verdict"], b["verdict"], "{param}");
    }
}

#[test]
fn file_argument_and_graph6_input() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let path = format!("{dir}/cli-k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let v = json(
        &["--format", "graph6", "param", "chromatic_index", &path],
        "",
    );
    assert_eq!(v["value"], 3);
    let out = cli(&["--format", "graph6", "gen", "complete", "--n", "4"], "");
    assert_eq!(out.stdout, "C~\n");
}

#[test]
fn reductions_through_the_cli() {
    let v = json(
        &[
            "reduce", "lex", "--k", "2", "--m", "2", "--param", "order", "--solve",
        ],
        C5,
    );
    assert_eq!(v["reduction"]["produced_order"], 10);
    assert_eq!(v["reduction"]["threshold"], 4);
    // α(C5) = 2 so p(K_2·C5, 2) = 4
    assert_eq!(v["value"], 4);
    assert_eq!(v["verdict"], true);

    let v = json(&["reduce", "tmd4", "--param", "min_degree", "--solve"], K4);
    assert_eq!(v["verdict"], false);

    let v = json(&["verify-thm1", "--k", "3", "--param", "max_degree"], C4);
    assert_eq!(v["identity"]["holds"], true);
    assert_eq!(v["identity"]["lhs"], 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["gen", "--seed", "7", "gnp", "--n", "8", "--p", "0.5"];
    let a = cli(&args, "");
    let b = cli(&args, "");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let solve = [
        "--json",
        "large-oracle",
        "--param",
        "size",
        "--k",
        "2",
        "--ell",
        "3",
        "--m",
        "1",
    ];
    assert_eq!(cli(&solve, &a.stdout).stdout, cli(&solve, &b.stdout).stdout);
    assert!(!cli(&solve, &a.stdout).stdout.contains("wall_ms"));
    assert!(json(&["--timing", "param", "order"], C4)
        .get("wall_ms")
        .is_some());
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["--help"], "").code, 0);
    assert_eq!(cli(&["param"], C4).code, 2);
    assert_eq!(cli(&["param", "clique_number"], C4).code, 2);
    assert_eq!(cli(&["pk", "--param", "order", "--k", "1"], C4).code, 2);
    assert_eq!(cli(&["gen", "gnp", "--n", "4", "--p", "1.5"], "").code, 2);
    let fpt = [
        "large-fpt",
        "--param",
        "min_degree",
        "--k",
        "2",
        "--ell",
        "1",
        "--m",
        "1",
    ];
    assert_eq!(cli(&fpt, C4).code, 2);

    let bad = cli(&["param", "order"], "2 1\n0 2\n");
    assert_eq!(bad.code, 3);
    assert!(!bad.stderr.is_empty());
    assert_eq!(cli(&["param", "order"], "3 2\n0 1\n").code, 3);
    assert_eq!(cli(&["param", "order", "/nonexistent/graph"], "").code, 3);
    assert_eq!(
        cli(&["--format", "graph6", "param", "order"], "A_\nA_\n").code,
        3
    );

    let big = cli(&["gen", "complete", "--n", "30"], "").stdout;
    assert_eq!(cli(&["pk", "--param", "order", "--k", "2"], &big).code, 4);
}
