use std::process::{Command, Stdio};

use std::io::Write as _;

const PRISM: &str = "E{Sw";
const W5: &str = "E|fG";
const K33: &str = "EFz_";
const Q3: &str = "Gr`HOk";
const K4: &str = "C~";
/// Theta with three branches of length two, branch vertices 0 and 1.
const THETA: &str = "n 5\n0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n";

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: &str) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wheelfree").chain(args.iter().copied());
    let code = wheelfree::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Out { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

#[test]
fn recognize_prism() {
    let o = run(&["recognize"], PRISM);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "1 IN-CLASS leaf=line-of-chordless-subcubic nodes=1\n");
}

#[test]
fn recognize_wheel() {
    let o = run(&["recognize"], W5);
    assert_eq!((o.code, o.stdout.as_str()), (1, "1 NOT-IN-CLASS wheel\n"));
    let o = run(&["recognize", "--witness"], W5);
    assert_eq!((o.code, o.stdout.as_str()), (1, "1 NOT-IN-CLASS wheel hub 0 hole 1 2 3 4 5\n"));
}

#[test]
fn recognize_empty_input() {
    let o = run(&["recognize"], "");
    assert_eq!((o.code, o.stdout.as_str()), (0, ""));
}

#[test]
fn recognize_mixed_batch() {
    let o = run(&["recognize"], &format!("{PRISM}\n{W5}\n{K33}\n"));
    assert_eq!(o.code, 1);
    assert_eq!(
        o.stdout,
        "1 IN-CLASS leaf=line-of-chordless-subcubic nodes=1\n2 NOT-IN-CLASS wheel\n3 IN-CLASS leaf=complete-bipartite nodes=1\n"
    );
}

#[test]
fn recognize_writes_dot() {
    let path = std::env::temp_dir().join(format!("wheelfree-tree-{}.dot", std::process::id()));
    let o = run(&["recognize", "--tree", path.to_str().unwrap()], PRISM);
    assert_eq!(o.code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("line-of-chordless-subcubic"));
}

#[test]
fn malformed_input_is_an_error() {
    let o = run(&["recognize"], "bad\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error:"));
    assert_eq!(run(&["recognize", "--format", "edges"], "n 2\n0 0\n").code, 2);
    assert_eq!(run(&["recognize", "/nonexistent/graphs.g6"], "").code, 2);
}

#[test]
fn color_k33() {
    let o = run(&["color", "--check"], K33);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "0 0\n1 0\n2 0\n3 1\n4 1\n5 1\n");
    assert_eq!(o.stderr, "1 proper=true colors=2\n");
}

#[test]
fn color_prism() {
    let o = run(&["color", "--check"], PRISM);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "0 2\n1 0\n2 1\n3 0\n4 1\n5 2\n");
    assert_eq!(o.stderr, "1 proper=true colors=3\n");
}

#[test]
fn color_rejects_wheel() {
    let o = run(&["color"], W5);
    assert_eq!((o.code, o.stdout.as_str()), (1, ""));
    assert_eq!(o.stderr, "1 NOT-IN-CLASS wheel\n");
}

#[test]
fn chordless_theta() {
    let o = run(&["chordless", "--format", "edges"], THETA);
    assert_eq!((o.code, o.stdout.as_str()), (0, "1 CHORDLESS\n"));
    let o = run(&["chordless", "--format", "edges", "--edge-color"], THETA);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "1 CHORDLESS\n0 2 2\n0 3 0\n0 4 1\n1 2 0\n1 3 1\n1 4 2\n");
}

#[test]
fn chordless_rejections() {
    let o = run(&["chordless"], Q3);
    assert_eq!((o.code, o.stdout.as_str()), (1, "1 NOT-CHORDLESS chord 0 1 cycle 0 2 3 1 5 4\n"));
    let o = run(&["chordless"], K4);
    assert_eq!((o.code, o.stdout.as_str()), (1, "1 NOT-CHORDLESS chord 0 1 cycle 0 2 1 3\n"));
}

#[test]
fn oracle_chromatic_of_wheel() {
    let o = run(&["oracle", "chromatic"], W5);
    assert_eq!((o.code, o.stdout.as_str()), (0, "1 4\n"));
}

#[test]
fn generated_rich_square_is_rejected() {
    let g = run(&["gen", "long-rich-square", "--seed", "1", "--size", "minimal"], "");
    assert_eq!(g.code, 0);
    let o = run(&["recognize"], &g.stdout);
    assert_eq!((o.code, o.stdout.as_str()), (1, "1 NOT-IN-CLASS wheel\n"));
}

#[test]
fn generated_graphs_are_recognized() {
    for kind in ["sp", "complete-bipartite", "line-of-chordless-subcubic", "clique-glue"] {
        let g = run(&["gen", kind, "--size", "20", "--seed", "3", "--count", "4"], "");
        assert_eq!(g.stdout.lines().count(), 4);
        let o = run(&["recognize"], &g.stdout);
        assert_eq!(o.code, 0, "{kind}: {}", o.stdout);
    }
}

#[test]
fn check_six() {
    let o = run(&["check", "--n", "6"], "");
    assert_eq!((o.code, o.stdout.as_str()), (0, "156 graphs, 0 disagreements\n"));
}

#[test]
fn reports_are_deterministic() {
    let input = format!("{PRISM}\n{W5}\n{K33}\n{Q3}\n");
    for args in [&["recognize", "--witness"][..], &["color"], &["chordless", "--color"]] {
        let a = run(args, &input);
        let b = run(args, &input);
        assert_eq!((a.code, a.stdout), (b.code, b.stdout));
    }
}

#[test]
fn binary_end_to_end() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wheelfree"))
        .args(["recognize", "--witness"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(format!("{PRISM}\n{W5}\n").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 IN-CLASS leaf=line-of-chordless-subcubic nodes=1\n2 NOT-IN-CLASS wheel hub 0 hole 1 2 3 4 5\n"
    );
}
