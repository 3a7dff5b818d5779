use std::path::{Path, PathBuf};
use std::process::Command;

use barysparse::commands::coords::{self, CoordsOptions};
use barysparse::PolytopeDocument;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_barysparse")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn simplex_lines(listing: &str) -> Vec<Vec<usize>> {
    listing
        .lines()
        .filter_map(|l| l.trim().split_once(": "))
        .filter(|(id, _)| id.parse::<usize>().is_ok())
        .map(|(_, rest)| rest.split(" vol ").next().unwrap().split(' ').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn decompose_hexagon_and_pyramid() {
    let (out, _, code) = run(&["decompose", fixture("hexagon").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(simplex_lines(&out), vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5]]);
    assert!(out.contains("numbering 0 1 2 3 4 5\n"));

    let (out, _, _) = run(&["decompose", fixture("hex_pyramid").to_str().unwrap()]);
    assert_eq!(simplex_lines(&out).len(), 4);
}

#[test]
fn decompose_cube_volumes_sum_to_one() {
    let (out, _, code) = run(&["decompose", fixture("cube").to_str().unwrap(), "--base", "6"]);
    assert_eq!(code, 0);
    let vols: Vec<f64> =
        out.lines().filter_map(|l| l.split(" vol ").nth(1)).map(|v| v.parse::<f64>().unwrap()).collect();
    assert_eq!(vols.len(), 6);
    assert!((vols.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert!(simplex_lines(&out).iter().all(|s| s[0] == 6));
}

#[test]
fn document_base_vertex_is_default() {
    let (out, _, _) = run(&["decompose", fixture("square_pyramid").to_str().unwrap()]);
    assert!(out.contains("base 4\n"));
    assert_eq!(simplex_lines(&out), vec![vec![4, 0, 3, 2], vec![4, 0, 2, 1]]);
}

#[test]
fn coords_square_examples() {
    let sq = fixture("square");
    let sq = sq.to_str().unwrap();
    let (out, _, code) = run(&["coords", sq, "--point", "0.75 0.25", "--point", "2 2", "--point", "0.25 0.75"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "x0,x1,status,simplex_id,weights");
    assert_eq!(rows[1], "0.75,0.25,ok,1,v0=0.25,v1=0.5,v2=0.25");
    assert_eq!(rows[2], "2,2,outside,");
    assert!(rows[3].starts_with("0.25,0.75,ok,2,"));
    assert_eq!(rows.len(), 4);

    let (out, _, _) = run(&["coords", sq, "--point", "0.5 0.5", "--cartographic"]);
    assert_eq!(out.lines().nth(1).unwrap(), "0.5,0.5,ok,,v0=0.25,v1=0.25,v2=0.25,v3=0.25");

    let (out, err, code) = run(&["coords", sq, "--point", "2 2", "--strict", "--format", "text"]);
    assert_eq!(code, 4);
    assert_eq!(out, "point 2 2 status outside\n");
    assert!(err.contains("outside"));
}

#[test]
fn coords_points_file_keeps_order() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("q.txt");
    let rows: Vec<String> = (0..200).map(|i| format!("{} {}", (i % 20) as f64 / 19.0, (i / 20) as f64 / 9.0)).collect();
    std::fs::write(&pts, format!("# grid\n{}\n", rows.join("\n"))).unwrap();
    let (out, _, code) = run(&["coords", fixture("hexagon").to_str().unwrap(), pts.to_str().unwrap()]);
    assert_eq!(code, 0);
    let got: Vec<String> = out.lines().skip(1).map(|l| l.split(',').take(2).collect::<Vec<_>>().join(" ")).collect();
    let want: Vec<String> = rows
        .iter()
        .map(|r| r.split(' ').map(|v| v.parse::<f64>().unwrap().to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(got, want);

    std::fs::write(&pts, "0 0\n0.5\n").unwrap();
    let (_, err, code) = run(&["coords", fixture("hexagon").to_str().unwrap(), pts.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn coords_library_matches_cli_rows() {
    let doc = PolytopeDocument::parse(&std::fs::read_to_string(fixture("square")).unwrap()).unwrap();
    let out = coords::run(&doc, &[vec![0.75, 0.25]], &CoordsOptions::default()).unwrap();
    assert!(out.failure.is_none());
    assert_eq!(out.text.lines().nth(1).unwrap(), "0.75,0.25,ok,1,v0=0.25,v1=0.5,v2=0.25");
}

#[test]
fn verify_reports_and_exit_codes() {
    let (out, _, code) = run(&["verify", fixture("tetrahedron").to_str().unwrap(), "--samples", "1000"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS uniqueness"));
    assert!(out.ends_with("result PASS\n"));

    let (out, _, code) = run(&["verify", fixture("cube").to_str().unwrap(), "--samples", "10000", "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(!out.contains("FAIL"));

    // a negative tolerance rejects every point, so the cover check fails
    let (out, err, code) = run(&["verify", fixture("square").to_str().unwrap(), "--tol=-1", "--samples", "10"]);
    assert_eq!(code, 5);
    assert!(out.contains("FAIL cover"));
    assert!(err.contains("cover"));
}

#[test]
fn invalid_documents_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cube = std::fs::read_to_string(fixture("cube")).unwrap();
    let reversed = cube.replace("[1,2,6,5]", "[5,6,2,1]");
    assert_ne!(reversed, cube);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, reversed).unwrap();
    let (_, err, code) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid polytope"), "{err}");

    std::fs::write(&path, "{\"dim\": 2,\n \"vertices\": [[0, 0], [1, 0]\n").unwrap();
    let (_, err, code) = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");

    let (_, err, code) = run(&["decompose", "/nonexistent/doc.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/doc.json"));

    let (_, _, code) = run(&["decompose", fixture("square").to_str().unwrap(), "--base", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn render_examples() {
    let chords = |svg: &str| svg.matches("class=\"chord\"").count();
    let (svg, _, code) = run(&["render", fixture("hexagon").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(chords(&svg), 3);
    assert_eq!(svg.matches("class=\"label\"").count(), 6);
    let (svg, _, _) = run(&["render", fixture("triangle").to_str().unwrap()]);
    assert_eq!(chords(&svg), 0);

    let (svg, _, _) = run(&["render", fixture("square").to_str().unwrap(), "--point", "0.5 0.5"]);
    let attr = |line: &str, key: &str| -> f64 {
        let start = line.find(&format!(" {key}=\"")).unwrap() + key.len() + 3;
        line[start..].split('"').next().unwrap().parse().unwrap()
    };
    let chord = svg.lines().find(|l| l.contains("class=\"chord\"")).unwrap();
    let point = svg.lines().find(|l| l.contains("class=\"point\"")).unwrap();
    let mid = ((attr(chord, "x1") + attr(chord, "x2")) / 2.0, (attr(chord, "y1") + attr(chord, "y2")) / 2.0);
    assert!((attr(point, "cx") - mid.0).abs() < 1e-3 && (attr(point, "cy") - mid.1).abs() < 1e-3);

    let (_, err, code) = run(&["render", fixture("cube").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported dimension 3"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fan.svg");
    let (stdout, _, code) = run(&["render", fixture("hexagon").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(out).unwrap().starts_with("<svg"));
}

#[test]
fn fixtures_round_trip() {
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let doc = PolytopeDocument::parse(&text).unwrap();
        let again = PolytopeDocument::parse(&doc.to_text()).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_text(), doc.to_text());
    }
}

#[test]
fn polygon_with_explicit_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]], "face_lattice": [[[0,1],[1,2],[2,3],[3,0]]]}"#,
    )
    .unwrap();
    let (out, _, code) = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(simplex_lines(&out), vec![vec![0, 1, 2], vec![0, 2, 3]]);
    let (svg, _, code) = run(&["render", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("class=\"chord\"").count(), 1);

    std::fs::write(
        &path,
        r#"{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]], "face_lattice": [[[0,2],[2,1],[1,3],[3,0]]]}"#,
    )
    .unwrap();
    let (_, _, code) = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(code, 2);
}
