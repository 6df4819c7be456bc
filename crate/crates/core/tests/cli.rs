use std::fs;
use std::io::BufReader;
use std::path::Path;
use std::process::{Command, Output};

use krongraph::cli_io::{
    cmd_fit_cl, parse_edge_list, read_edge_list_file, ExperimentConfig, FitClConfig, Provenance,
};
use krongraph::Error;

fn krongraph(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krongraph"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str], dir: &Path) -> String {
    let out = krongraph(args, dir);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn data_lines(path: &Path) -> usize {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .count()
}

#[test]
fn graph500_default_size() {
    let dir = tempfile::tempdir().unwrap();
    ok(
        &[
            "generate",
            "--preset",
            "graph500-18",
            "--model",
            "skg",
            "--seed",
            "1",
            "--out",
            "g.tsv",
        ],
        dir.path(),
    );
    assert_eq!(data_lines(&dir.path().join("g.tsv")), 4_194_304);
}

#[test]
fn header_regenerates_file() {
    let dir = tempfile::tempdir().unwrap();
    for model in ["skg", "nskg", "cl"] {
        let name = format!("{model}.tsv");
        ok(
            &[
                "generate",
                "--model",
                model,
                "--levels",
                "10",
                "--seed",
                "9",
                "--chunk-size",
                "777",
                "--out",
                &name,
            ],
            dir.path(),
        );
        let path = dir.path().join(&name);
        let header = Provenance::read(BufReader::new(fs::File::open(&path).unwrap())).unwrap();
        let config = ExperimentConfig::from_provenance(&header).unwrap();
        let (edges, regenerated) = config.generate().unwrap();
        assert_eq!(regenerated, header);
        assert_eq!(read_edge_list_file(&path).unwrap(), edges);
        if model == "nskg" {
            assert_eq!(header.get("noise"), Some("0.1"));
            assert!(header.get("level-10").is_some());
        }
    }
}

#[test]
fn output_is_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    for model in ["skg", "nskg", "cl"] {
        let mut files = Vec::new();
        for (run, threads) in ["1", "4", "4"].iter().enumerate() {
            let name = format!("{model}-{run}.tsv");
            let out = Command::new(env!("CARGO_BIN_EXE_krongraph"))
                .args([
                    "generate",
                    "--model",
                    model,
                    "--levels",
                    "12",
                    "--chunk-size",
                    "1000",
                    "--out",
                    &name,
                ])
                .env("KRONGRAPH_THREADS", threads)
                .current_dir(dir.path())
                .output()
                .unwrap();
            assert!(out.status.success());
            files.push(fs::read(dir.path().join(&name)).unwrap());
        }
        assert!(files.windows(2).all(|w| w[0] == w[1]), "{model}");
    }
}

#[test]
fn analyze_writes_metric_tables() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("tri.txt"),
        "# triangle\n0\t1\n1\t2\n2 0\n1 0\n",
    )
    .unwrap();
    ok(&["analyze", "tri.txt", "--out-dir", "out"], dir.path());
    let out = dir.path().join("out");
    let cc = fs::read_to_string(out.join("cc.csv")).unwrap();
    assert!(cc.lines().any(|l| l == "2,1.0,3"), "{cc}");
    assert_eq!(
        fs::read_to_string(out.join("degree.csv")).unwrap(),
        "degree,count\n2,3\n"
    );
    assert_eq!(
        fs::read_to_string(out.join("core.csv")).unwrap(),
        "k,size\n1,3\n2,3\n"
    );
    assert_eq!(
        fs::read_to_string(out.join("assort.csv")).unwrap(),
        "degree,X_d\n2,2.0\n"
    );
    let summary = fs::read_to_string(out.join("summary.csv")).unwrap();
    assert!(summary.contains("raw_pairs,4") && summary.contains("duplicates,1"));

    // A 10-cycle has 10 eigenvalues; asking for 25 is clamped.
    let ring: String = (0..10).map(|i| format!("{i} {}\n", (i + 1) % 10)).collect();
    fs::write(dir.path().join("ring.txt"), ring).unwrap();
    ok(
        &[
            "analyze",
            "ring.txt",
            "--metrics",
            "eig",
            "--eigs",
            "25",
            "--out-dir",
            "ring",
        ],
        dir.path(),
    );
    let eig = fs::read_to_string(dir.path().join("ring/eig.csv")).unwrap();
    assert_eq!(eig.lines().count(), 11);
    assert!(eig.lines().nth(1).unwrap().starts_with("1,2.0"), "{eig}");
    assert!(!dir.path().join("ring/cc.csv").exists());
}

#[test]
fn spy_raster_output() {
    let dir = tempfile::tempdir().unwrap();
    ok(
        &["generate", "--levels", "10", "--out", "g.tsv"],
        dir.path(),
    );
    ok(
        &[
            "analyze",
            "g.tsv",
            "--metrics",
            "degree",
            "--spy",
            "8",
            "--out-dir",
            "a",
        ],
        dir.path(),
    );
    let pgm = fs::read_to_string(dir.path().join("a/spy.pgm")).unwrap();
    assert!(pgm.starts_with("P2\n8 8\n"));
    let csv = fs::read_to_string(dir.path().join("a/spy.csv")).unwrap();
    let total: u64 = csv
        .lines()
        .flat_map(|l| l.split(',').map(|x| x.parse::<u64>().unwrap()))
        .sum();
    assert_eq!(total, 16 << 10);
}

#[test]
fn compare_with_itself_has_no_gaps() {
    let dir = tempfile::tempdir().unwrap();
    ok(
        &[
            "generate", "--model", "nskg", "--levels", "9", "--out", "g.tsv",
        ],
        dir.path(),
    );
    ok(
        &["compare", "g.tsv", "g.tsv", "--out-dir", "cmp"],
        dir.path(),
    );
    let gaps = fs::read_to_string(dir.path().join("cmp/gaps.csv")).unwrap();
    for line in gaps.lines().skip(1) {
        let (key, value) = line.split_once(',').unwrap();
        if key != "cc_max_gap_degree" && !value.is_empty() {
            assert_eq!(value.parse::<f64>().unwrap(), 0.0, "{line}");
        }
    }
    for f in [
        "degree_pair.csv",
        "cc_pair.csv",
        "eig_pair.csv",
        "assort_pair.csv",
        "core_pair.csv",
    ] {
        assert!(dir.path().join("cmp").join(f).exists(), "{f}");
    }
    assert!(dir.path().join("cmp/a/cc.csv").exists());
}

#[test]
fn spectrum_tables() {
    let dir = tempfile::tempdir().unwrap();
    ok(
        &[
            "spectrum",
            "--preset",
            "soc-epinions",
            "--levels",
            "1",
            "--out-dir",
            "s1",
        ],
        dir.path(),
    );
    for f in ["skg_spectrum.csv", "cl_spectrum.csv"] {
        let text = fs::read_to_string(dir.path().join("s1").join(f)).unwrap();
        assert_eq!(text.lines().count(), 5, "{f}");
    }
    let bins = fs::read_to_string(dir.path().join("s1/bins.csv")).unwrap();
    assert!(bins.starts_with("bin_value,cl_count,skg_count,cl_mass,skg_mass\n"));

    let t = [
        "--t1",
        "0.4",
        "--t2",
        "0.2",
        "--t3",
        "0.26666666666666666",
        "--t4",
        "0.13333333333333333",
    ];
    let mut args = vec!["spectrum", "--levels", "16", "--out-dir", "ratio"];
    args.extend(t);
    ok(&args, dir.path());
    let summary = fs::read_to_string(dir.path().join("ratio/summary.csv")).unwrap();
    let gap: f64 = summary
        .lines()
        .find_map(|l| l.strip_prefix("max_entry_gap,"))
        .unwrap()
        .parse()
        .unwrap();
    assert!(gap <= 1e-12, "{gap}");
}

#[test]
fn fit_cl_preserves_expected_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let star: String = (1..=20).map(|i| format!("0 {i}\n")).collect();
    let input = dir.path().join("star.txt");
    fs::write(&input, star).unwrap();
    let runs = 200;
    let mut center = 0u64;
    for seed in 0..runs {
        let config = FitClConfig {
            input: input.clone(),
            edges: None,
            seed,
            chunk_size: 64,
        };
        let out = dir.path().join("fit.tsv");
        let s = cmd_fit_cl(&config, &out).unwrap();
        assert_eq!(s.edges, 20);
        let text = fs::read_to_string(&out).unwrap();
        let edges = parse_edge_list(text.as_bytes()).unwrap();
        center += edges
            .edges()
            .iter()
            .map(|&(u, v)| u64::from(u == 0) + u64::from(v == 0))
            .sum::<u64>();
    }
    let mean = center as f64 / runs as f64;
    assert!((mean - 20.0).abs() < 1.0, "{mean}");

    let empty = dir.path().join("loops.txt");
    fs::write(&empty, "3 3\n").unwrap();
    let config = FitClConfig {
        input: empty,
        edges: None,
        seed: 1,
        chunk_size: 64,
    };
    assert!(matches!(
        cmd_fit_cl(&config, &dir.path().join("x.tsv")),
        Err(Error::ZeroTotalWeight)
    ));
}

#[test]
fn errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "0 1\n# ok\n2 x\n").unwrap();
    let out = krongraph(&["analyze", "bad.txt"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = krongraph(
        &[
            "generate", "--t1", "0.5", "--t2", "0.5", "--t3", "0.5", "--t4", "0.5", "--levels",
            "3", "--edges", "4",
        ],
        dir.path(),
    );
    assert!(!out.status.success());

    let out = krongraph(
        &[
            "generate", "--model", "nskg", "--noise", "0.5", "--levels", "4",
        ],
        dir.path(),
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("noise"));
}

#[test]
fn presets_listing() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(&["presets"], dir.path());
    for name in ["graph500", "soc-epinions", "ca-hepth", "cit-hepph"] {
        assert!(text.contains(name), "{name}");
    }
}
