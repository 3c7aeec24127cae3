use std::collections::BTreeSet;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorsym")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn terms(expr: &str) -> BTreeSet<String> {
    expr.replace(" - ", " + -").split(" + ").map(|t| t.trim().to_string()).collect()
}

#[test]
fn expand_fundamental_to_dual_immaculate() {
    let got = stdout(&["expand", "--alphabet", "abc", "--to", "DI", "F[ab,cbb]"]);
    assert_eq!(terms(&got), terms("DI[ab,cbb] - DI[a,cbb,b] + DI[a,c,bbb] - DI[a,cbbb]"));
}

#[test]
fn expand_uncolored_monomial() {
    let got = stdout(&["expand", "--alphabet", "a", "--to", "M", "DI[aa,aa]", "--uncolor"]);
    assert_eq!(got, "M(2,2) + M(2,1,1) + M(1,3) + 2*M(1,2,1) + 2*M(1,1,2) + 3*M(1,1,1,1)");
}

#[test]
fn expand_json() {
    let got = stdout(&["expand", "--alphabet", "abc", "--to", "M", "F[ab]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["tag"], "M");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_duality_summary() {
    let out = run(&["verify", "--alphabet", "ab", "--max-degree", "3", "duality"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OK: "), "{text}");
    assert!(text.contains("duality checks passed"));
}

#[test]
fn verify_json_report() {
    let got = stdout(&["verify", "--alphabet", "ab", "--max-degree", "2", "--json", "antipode"]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["suite"], "antipode");
    assert!(v["checks"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn tableaux_listing() {
    let got = stdout(&["tableaux", "--alphabet", "abc", "--shape", "ab,cb", "--type", "a,cb,b"]);
    assert!(got.ends_with("2 tableaux"), "{got}");
    assert!(got.contains("a,1|b,2\nc,2|b,3"));
    let std = stdout(&["tableaux", "--alphabet", "abc", "--shape", "ab,cb", "--standard"]);
    assert!(std.ends_with("3 tableaux"), "{std}");
}

#[test]
fn graph_formats() {
    let dot = stdout(&["graph", "--alphabet", "abc", "--degree", "5", "--root", "ab,cbb"]);
    assert!(dot.starts_with("digraph descent {"));
    assert_eq!(dot.matches(" -> ").count(), 8);
    assert!(dot.contains("\"ab,cbb\" -> \"a,cbbb\" [label=\"1\"];"));
    let csv = stdout(&["graph", "--alphabet", "abc", "--degree", "5", "--root", "ab,cbb", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("from,to,weight"));
    assert_eq!(csv.lines().count(), 9);
    let empty = stdout(&["graph", "--alphabet", "ab", "--degree", "1"]);
    assert!(!empty.contains("->"));
}

#[test]
fn coeffs_agree_with_paths() {
    let rec = stdout(&["coeffs", "--alphabet", "ab", "--degree", "3"]);
    let paths = stdout(&["coeffs", "--alphabet", "ab", "--degree", "3", "--paths"]);
    let a: BTreeSet<&str> = rec.lines().collect();
    let b: BTreeSet<&str> = paths.lines().collect();
    assert_eq!(a, b);
    let unc = stdout(&["coeffs", "--alphabet", "a", "--degree", "3", "--uncolored"]);
    assert!(unc.contains("\"(2,1)\",\"(1,2)\",-1"));
}

#[test]
fn pieri_and_creation() {
    let got = stdout(&["pieri", "--alphabet", "abc", "--sentence", "ab,bc", "--word", "ca"]);
    assert_eq!(
        terms(&got),
        terms("IM[ab,bc,ca] + IM[ab,bca,c] + IM[aba,bc,c] + IM[ab,bcca] + IM[aba,bcc] + IM[abca,bc]")
    );
    let got = stdout(&["creation", "--alphabet", "abcdef", "--sentence", "abc,def"]);
    assert_eq!(
        terms(&got),
        terms("H[abc,def] - H[abcf,de] - H[abcef,d] + H[abcfe,d] - H[abcdef] + H[abcefd] + H[abcfde] - H[abcfed]")
    );
}

#[test]
fn pairing() {
    assert_eq!(stdout(&["pair", "--alphabet", "abc", "H[ab,c]", "M[ab,c]"]), "1");
    assert_eq!(stdout(&["pair", "--alphabet", "abc", "IM[ab,c]", "DI[a,b,c]"]), "0");
}

#[test]
fn skew_structure_coproduct() {
    let got = stdout(&["skew", "--alphabet", "abcdef", "--outer", "ab,cdef", "--inner", "a,cde", "--to", "M"]);
    assert_eq!(terms(&got), terms("M[fb] + M[b,f] + M[f,b]"));
    let got = stdout(&["structure", "--alphabet", "abc", "--left", "ab", "--right", "c"]);
    assert_eq!(got, "IM[abc] + IM[ab,c]");
    let got = stdout(&["coproduct", "--alphabet", "abc", "--basis", "DI", "--sentence", "a"]);
    assert_eq!(got, "DI[()] @ DI[a] + DI[a] @ DI[()]");
}

#[test]
fn hopf_psi_uncolor() {
    assert_eq!(stdout(&["hopf", "--alphabet", "abcd", "product", "H[ab]", "H[c,d]"]), "H[ab,c,d]");
    assert_eq!(
        terms(&stdout(&["hopf", "--alphabet", "abc", "product", "DI[ab]", "DI[c]"])),
        terms("DI[abc] + DI[c,ab] + DI[ac,b] - DI[a,bc]")
    );
    assert_eq!(stdout(&["hopf", "--alphabet", "ab", "antipode", "M[a]"]), "-M[a]");
    assert_eq!(stdout(&["psi", "--alphabet", "abcde", "F[abc,de]"]), "F[a,b,cd,e]");
    assert_eq!(stdout(&["psi", "--alphabet", "abc", "DI[ab,cb]"]), "RSDI[ab,cb]");
    assert_eq!(stdout(&["uncolor", "--alphabet", "abc", "M[ab,c] + M[ba,c]"]), "2*M(2,1)");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["expand", "--to", "M", "F[a]"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let out = run(&["expand", "--alphabet", "ab", "--to", "M", "F[ac]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("F[ac]"));
    assert_eq!(run(&["expand", "--alphabet", "ab", "--to", "H", "F[a]"]).status.code(), Some(1));
    assert_eq!(run(&["skew", "--alphabet", "ab", "--outer", "ab", "--inner", "b", "--to", "M"]).status.code(), Some(1));
    assert_eq!(run(&["graph", "--alphabet", "abc", "--degree", "5", "--cap", "10"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--alphabet", "abc", "--to", "DI", "M[a,b,c] + 2*M[ab,c]"];
    assert_eq!(stdout(&args), stdout(&args));
}
