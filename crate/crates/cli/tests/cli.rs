use std::path::PathBuf;
use std::process::Command;

use fundclust_cli::{run_cli, CliOutcome, EXIT_INPUT_ERROR, EXIT_NUMERICAL_ERROR};
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Self { dir: TempDir::new().unwrap() }
    }

    fn write(&self, name: &str, contents: &str) -> String {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path.to_str().unwrap().to_owned()
    }
}

fn run(args: &[&str]) -> CliOutcome {
    run_cli(std::iter::once("fundclust").chain(args.iter().copied()))
}

fn path_edges(k: usize) -> String {
    let mut out = format!("nodes={k}\n");
    for i in 1..k {
        out.push_str(&format!("{} {}\n", i - 1, i));
    }
    out
}

const STAR5: &str = "nodes=5\n0 1\n0 2\n0 3\n0 4\n";
const MTX_HALF: &str = "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 0.5\n";

#[test]
fn components_on_path() {
    let files = Files::new();
    let input = files.write("path3.txt", &path_edges(3));
    let out = run(&["components", "--input", &input]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "{\"engine\":\"fundamental\",\"backend\":\"exact\",\"variant\":\"paper_transform\",\"sizes\":[3,3,3]}\n"
    );
}

#[test]
fn components_golden_json_per_engine() {
    let files = Files::new();
    let input = files.write("edge.txt", "nodes=2\n0 1\n");
    let cases = [
        (vec!["--engine", "oracle"], "{\"engine\":\"oracle\",\"backend\":\"boolean\",\"variant\":null,\"sizes\":[2,2]}\n"),
        (
            vec!["--engine", "power_sum"],
            "{\"engine\":\"power_sum\",\"backend\":\"boolean\",\"variant\":null,\"n_limit\":1,\"sizes\":[2,2]}\n",
        ),
        (
            vec!["--backend", "float", "--variant", "uniform"],
            "{\"engine\":\"fundamental\",\"backend\":\"float\",\"variant\":\"uniform_scaling\",\
             \"nonzero_threshold\":1e-300,\"sizes\":[2,2]}\n",
        ),
    ];
    for (extra, expected) in cases {
        let mut args = vec!["components", "--input", &input];
        args.extend(extra);
        let out = run(&args);
        assert_eq!(out.status, 0, "{}", out.stderr);
        assert_eq!(out.stdout, expected);
    }
}

#[test]
fn fundamental_and_oracle_sizes_agree() {
    let files = Files::new();
    let input = files.write(
        "mixed.txt",
        "# two triangles, a pendant and an isolated node\nnodes=8\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n5 6\n",
    );
    let sizes = |engine: &str| {
        let out = run(&["components", "--input", &input, "--engine", engine]);
        assert_eq!(out.status, 0, "{}", out.stderr);
        let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        value["sizes"].to_string()
    };
    let fundamental = sizes("fundamental");
    assert_eq!(fundamental, "[3,3,3,4,4,4,4,1]");
    assert_eq!(fundamental, sizes("oracle"));
    assert_eq!(fundamental, sizes("power_sum"));
}

#[test]
fn components_table() {
    let files = Files::new();
    let input = files.write("path3.txt", &path_edges(3));
    let out = run(&["components", "--input", &input, "--format", "table"]);
    assert_eq!(out.status, 0);
    assert_eq!(
        out.stdout,
        "engine: fundamental  backend: exact  variant: paper_transform\nnode  size\n   0     3\n   1     3\n   2     3\n"
    );
}

#[test]
fn within_n_single_node_and_all() {
    let files = Files::new();
    let input = files.write("star5.txt", STAR5);
    let out = run(&["within-n", "--input", &input, "--n", "1", "--node", "1"]);
    assert_eq!(out.stdout, "{\"node\":1,\"n\":1,\"size\":2}\n");
    let out = run(&["within-n", "--input", &input, "--n", "1", "--node", "1", "--format", "table"]);
    assert_eq!(out.stdout, "2\n");
    let out = run(&["within-n", "--input", &input, "--n", "1"]);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["sizes"].to_string(), "[5,2,2,2,2]");
    assert_eq!(value["n_limit"], 1);
}

#[test]
fn within_n_node_out_of_range_is_input_error() {
    let files = Files::new();
    let input = files.write("star5.txt", STAR5);
    let out = run(&["within-n", "--input", &input, "--n", "1", "--node", "5"]);
    assert_eq!(out.status, EXIT_INPUT_ERROR);
    assert!(out.stdout.is_empty());
}

#[test]
fn markov_exact_and_float() {
    let files = Files::new();
    let mtx = files.write("q.mtx", MTX_HALF);
    let out = run(&["markov", "--matrix", &mtx]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{\"backend\":\"exact\",\"steps\":[\"2\"]}\n");
    let out = run(&["markov", "--matrix", &mtx, "--backend", "float"]);
    assert_eq!(out.stdout, "{\"backend\":\"float\",\"steps\":[2.0]}\n");
}

#[test]
fn markov_fractional_steps() {
    let files = Files::new();
    let mtx = files.write(
        "q2.mtx",
        "%%MatrixMarket matrix coordinate real general\n% two states\n2 2 2\n1 2 0.5\n2 1 0.25\n",
    );
    let out = run(&["markov", "--matrix", &mtx]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    // t = (I - Q)^-1 1 with Q = [[0, 1/2], [1/4, 0]]: t0 = 12/7, t1 = 10/7.
    assert_eq!(out.stdout, "{\"backend\":\"exact\",\"steps\":[\"12/7\",\"10/7\"]}\n");
}

#[test]
fn markov_rejects_row_sum_of_one_as_input() {
    let files = Files::new();
    let mtx = files.write("one.mtx", "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n");
    let out = run(&["markov", "--matrix", &mtx]);
    assert_eq!(out.status, EXIT_INPUT_ERROR, "{}", out.stderr);
    assert!(out.stderr.contains("row 1 sums to 1"), "{}", out.stderr);
}

#[test]
fn float_paper_transform_underflow_guard() {
    let files = Files::new();
    let ok = files.write("p16.txt", &path_edges(16));
    let out = run(&["components", "--input", &ok, "--backend", "float"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let big = files.write("p17.txt", &path_edges(17));
    let out = run(&["components", "--input", &big, "--backend", "float"]);
    assert_eq!(out.status, EXIT_NUMERICAL_ERROR);
    assert!(out.stderr.starts_with("error:"), "{}", out.stderr);
    let out = run(&["components", "--input", &big, "--backend", "float", "--variant", "uniform_scaling"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
}

#[test]
fn input_errors_exit_one() {
    let files = Files::new();
    let self_loop = files.write("loop.txt", "nodes=2\n1 1\n");
    let malformed = files.write("bad.txt", "0 x\n");
    let missing = files.dir.path().join("missing.txt");
    let missing = missing.to_str().unwrap();
    for input in [self_loop.as_str(), malformed.as_str(), missing] {
        let out = run(&["components", "--input", input]);
        assert_eq!(out.status, EXIT_INPUT_ERROR, "{input}: {}", out.stderr);
    }
    let bad_mtx = files.write("bad.mtx", "%%MatrixMarket matrix array real general\n1 1\n0.5\n");
    assert_eq!(run(&["markov", "--matrix", &bad_mtx]).status, EXIT_INPUT_ERROR);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"]).status, EXIT_INPUT_ERROR);
    assert_eq!(run(&["components"]).status, EXIT_INPUT_ERROR);
    assert_eq!(run(&[]).status, EXIT_INPUT_ERROR);
    assert_eq!(run(&["components", "--input", "x", "--engine", "nope"]).status, EXIT_INPUT_ERROR);
    let help = run(&["--help"]);
    assert_eq!(help.status, 0);
    assert!(help.stdout.contains("components"));
}

#[test]
fn bench_csv_report() {
    let out = run(&["bench", "--sizes", "8,16", "--densities", "0.2", "--seed", "3,4"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "engine,k,p,seed,wall_time_ns,sizes_checksum");
    assert_eq!(lines.len(), 1 + 2 * 2 * 2);
    // Engines on the same graph report the same checksum.
    for pair in lines[1..].chunks(2) {
        let a: Vec<&str> = pair[0].split(',').collect();
        let b: Vec<&str> = pair[1].split(',').collect();
        assert_eq!(a[1..4], b[1..4]);
        assert_eq!(a[5], b[5]);
    }
}

#[test]
fn bench_rejects_unknown_engine_and_oversized_exact() {
    let out = run(&["bench", "--sizes", "8", "--densities", "0.2", "--seed", "1", "--engines", "nope"]);
    assert_eq!(out.status, EXIT_INPUT_ERROR);
    let out = run(&[
        "bench",
        "--sizes",
        "8",
        "--densities",
        "0.2",
        "--seed",
        "1",
        "--engines",
        "fundamental_exact",
        "--exact-max-k",
        "4",
    ]);
    assert_eq!(out.status, EXIT_NUMERICAL_ERROR, "{}", out.stderr);
}

#[test]
fn closure_rows() {
    let files = Files::new();
    let input = files.write("arc.txt", "nodes=3\ndirected=true\n0 1\n");
    let out = run(&["closure", "--input", &input]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1 1 0\n0 1 0\n0 0 1\n");
}

#[test]
fn binary_exit_status_and_streams() {
    let files = Files::new();
    let input = files.write("p17.txt", &path_edges(17));
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_fundclust"));
    let out = Command::new(&bin)
        .args(["components", "--input", &input, "--backend", "float"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_NUMERICAL_ERROR));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = Command::new(&bin).args(["components", "--input", &input]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"sizes\":[17,"));
}
