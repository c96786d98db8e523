use std::path::PathBuf;

use tritile::cli::run;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tritile").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = call(&full);
    (code, serde_json::from_str(&out).expect("valid json"))
}

#[test]
fn census_five() {
    let (code, out, _) = call(&["census", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("uniquely-tileable 1188\n"), "{out}");
    let (_, v) = json(&["census", "5"]);
    assert_eq!(v["uniquely_tileable"], 1188);
}

#[test]
fn unique_on_the_two_tiling_instance() {
    let f = data("corners6.holey");
    let (code, out, _) = call(&["unique", &f, "--method", "enumerate"]);
    assert_eq!(code, 1);
    assert_eq!(out, "unique: no\ntilings: 2\n");
    for method in ["merge", "graph"] {
        assert_eq!(call(&["unique", &f, "--method", method]).0, 1);
    }
    assert_eq!(call(&["unique", &f]).0, 1);
    assert_eq!(call(&["unique", &data("bottom4.holey")]).0, 0);
}

#[test]
fn exit_codes() {
    let (code, out, _) = call(&["check", &data("crowded.holey")]);
    assert_eq!(code, 1);
    assert!(out.contains("witness"));
    assert_eq!(call(&["check", &data("corners3.holey")]).0, 0);
    assert_eq!(call(&["check", "/nonexistent/file.holey"]).0, 2);
    assert_eq!(call(&["apply", &data("corners3_cw.holey"), "--flip", "gd:9,9,9,cw"]).0, 2);
    assert_eq!(call(&["enumerate", &data("corners6.holey"), "--limit", "1"]).0, 3);
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(call(&["tile", &data("crowded.holey")]).0, 1);
}

#[test]
fn apply_and_canonical() {
    let f = data("corners3_cw.holey");
    let (code, flipped, _) = call(&["apply", &f, "--flip", "gd:0,0,0,cw"]);
    assert_eq!(code, 0);
    let (_, canon, _) = call(&["canonical", &f, "--target", "no-cw"]);
    assert_eq!(flipped, canon);
    assert!(canon.contains("rhombus 1 0 W\nrhombus 2 0 E\nrhombus 2 1 N\n"));
    let (_, back, _) = call(&["canonical", &f, "--target", "no-ccw"]);
    let original = tritile::io::parse_tiling(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(back, tritile::io::serialize_tiling(&original));
}

#[test]
fn json_mirrors_text() {
    let f = data("corners6.holey");
    let (_, text, _) = call(&["forced", &f]);
    let (_, v) = json(&["forced", &f]);
    assert_eq!(text.lines().count(), v["forced"].as_array().unwrap().len());

    let (_, text, _) = call(&["enumerate", &f, "--count-only"]);
    let (_, v) = json(&["enumerate", &f, "--count-only"]);
    assert_eq!(text.trim(), v["count"].to_string());

    let (_, text, _) = call(&["depth", &f, "--dir", "e"]);
    let (_, v) = json(&["depth", &f, "--dir", "e"]);
    let rows: Vec<Vec<u64>> = text.lines().map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect()).collect();
    let json_rows: Vec<Vec<u64>> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert_eq!(rows, json_rows);

    let (_, dot, _) = call(&["graph", &f, "--format", "dot"]);
    let (_, v) = json(&["graph", &f, "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), v["edges"].as_array().unwrap().len());
}

#[test]
fn dot_degrees() {
    let (_, dot, _) = call(&["graph", &data("corners6.holey")]);
    let edges: Vec<(&str, &str)> = dot.lines().filter_map(|l| l.trim().trim_end_matches(';').split_once(" -> ")).collect();
    let labels: Vec<(String, String)> = dot
        .lines()
        .filter_map(|l| {
            let (node, rest) = l.trim().split_once(" [label=\"")?;
            Some((node.to_string(), rest.trim_end_matches("\"];").to_string()))
        })
        .collect();
    for (node, label) in &labels {
        let out = edges.iter().filter(|e| e.0 == node).count();
        let inn = edges.iter().filter(|e| e.1 == node).count();
        match label.chars().next().unwrap() {
            'R' => assert_eq!((inn, out), (2, 2), "{label}"),
            'H' => assert!(inn == 0 && out % 3 == 0, "{label}"),
            _ => assert_eq!((inn, out), (18, 0)),
        }
    }
}

#[test]
fn hexpair_and_distance() {
    let (code, v) = json(&["hexpair", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["shared_rhombi"], 0);
    assert_eq!(v["lower_bound"], 7);
    let (code, v) = json(&["distance", &data("bottom4.holey"), &data("bottom4.holey"), "--exact"]);
    assert_eq!(code, 0);
    assert_eq!(v["distance"], 0);
}

#[test]
fn every_command_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("tritile-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("a.svg").display().to_string();
    let (c6, c3) = (data("corners6.holey"), data("corners3_cw.holey"));
    let b4 = data("bottom4.holey");
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", &c6],
        vec!["saturated", &c6],
        vec!["unique", &c6],
        vec!["tile", &c6],
        vec!["enumerate", &c6],
        vec!["canonical", &c3, "--target", "no-cw"],
        vec!["flips", &c6, "--kind", "gd"],
        vec!["flips", &b4, "--kind", "trapezoid"],
        vec!["apply", &b4, "--flip", "tz:3,0,NE"],
        vec!["forced", &c6, "--method", "procedure"],
        vec!["graph", &c6],
        vec!["depth", &c6, "--dir", "sw"],
        vec!["hexpair", "5", "--class", "1"],
        vec!["distance", &b4, &b4, "--bound"],
        vec!["census", "4"],
        vec!["render", &c6, "--overlay", "graph"],
        vec!["render", &c6, "-o", &svg, "--overlay", "depth"],
    ];
    for args in &commands {
        let first = call(args);
        assert!(first.0 <= 1, "{args:?}: {}", first.2);
        let file = std::fs::read(&svg).ok();
        assert_eq!(first, call(args), "{args:?}");
        assert_eq!(file, std::fs::read(&svg).ok());
        let mut with_json = vec!["--json"];
        with_json.extend_from_slice(args);
        assert_eq!(call(&with_json), call(&with_json));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
