use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn bimcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn check(mode: &str, p: &Path, q: &Path) -> Output {
    bimcat(&[
        "check",
        "--mode",
        mode,
        p.to_str().unwrap(),
        q.to_str().unwrap(),
    ])
}

#[test]
fn diamond_commutes() {
    let o = check("sym", &data("diamond_p.path"), &data("diamond_q.path"));
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "Commutes (EqualDistortion; scope: flat symmetric bimonoidal)\n"
    );
}

#[test]
fn braiding_and_its_inverse() {
    let (p, q) = (data("braid_fwd.path"), data("braid_inv.path"));
    assert_eq!(code(&check("sym", &p, &q)), 0);
    let o = check("br", &p, &q);
    assert_eq!(code(&o), 2);
    assert!(
        stdout(&o).starts_with("Inconclusive (distortions differ:"),
        "{}",
        stdout(&o)
    );
    // The nonsymmetric graph has no multiplicative symmetry at all.
    assert_eq!(code(&check("ns", &p, &q)), 1);
}

#[test]
fn non_parallel_paths_are_an_error() {
    let o = check("sym", &data("diamond_p.path"), &data("braid_fwd.path"));
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn reduce_to_normal_form() {
    let o = bimcat(&["reduce", "--kind", "nf", "((x+y)*z)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "domain: ((x+y)*z)\nctx: edge:DeltaR(x,y,z) dir:fwd\ncodomain: ((x*z)+(y*z))\n"
    );
}

#[test]
fn emitted_paths_are_readable() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, term) in [
        ("zero", "((a+(0*b))*((1*c)+d))"),
        ("delta", "((a+(1*b))*((1*c)+d))"),
        ("nf", "((a+(0*b))*((1*c)+d))"),
    ] {
        let o = bimcat(&["reduce", "--kind", kind, "--seed", "11", term]);
        assert_eq!(code(&o), 0, "{kind}");
        assert!(stdout(&o).starts_with("# seed: 11\n"));
        let file = dir.path().join(format!("{kind}.path"));
        std::fs::write(&file, o.stdout).unwrap();
        let d = bimcat(&["distort", file.to_str().unwrap()]);
        assert_eq!(code(&d), 0, "{kind}");
        assert!(stdout(&d).starts_with("top="));
        assert_eq!(code(&check("sym", &file, &file)), 0);
    }
    let o = bimcat(&["reduce", "--kind", "one", "((1*c)+(d*1))"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("codomain: (c+d)\n"), "{}", stdout(&o));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "reduce",
        "--kind",
        "delta",
        "--seed",
        "3",
        "(((a+b)*(c+d))*(e+f))",
    ];
    assert_eq!(bimcat(&args).stdout, bimcat(&args).stdout);
    let args = ["verify", "mat", "--samples", "4", "--seed", "99"];
    assert_eq!(bimcat(&args).stdout, bimcat(&args).stdout);
}

#[test]
fn distortions_of_the_diamond_agree() {
    let p = bimcat(&["distort", data("diamond_p.path").to_str().unwrap()]);
    let q = bimcat(&["distort", data("diamond_q.path").to_str().unwrap()]);
    assert_eq!(code(&p), 0);
    assert_eq!(stdout(&p), stdout(&q));
    assert_eq!(
        stdout(&p),
        "top=[1,2,3,4] parts=[[1,2],[1,2],[1,2],[1,2]]\n"
    );
}

#[test]
fn mon_homs() {
    let o = bimcat(&["mon", "--n", "2", "hom", "(1 *2 2)", "(2 *1 1)"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).starts_with("no morphism"));
    let o = bimcat(&["mon", "--n", "2", "hom", "(1 *1 2)", "(2 *2 1)"]);
    assert_eq!(code(&o), 0);
    let o = bimcat(&["mon", "--n", "2", "enumerate", "--k", "3"]);
    assert_eq!(stdout(&o).lines().count(), 36);
    let o = bimcat(&["mon", "--n", "2", "hom", "(1 *3 2)", "(1 *1 2)"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn delta_reduction_needs_zero_free_terms() {
    let o = bimcat(&["reduce", "--kind", "delta", "((a+(0*b))*c)"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn matrix_verifier() {
    let o = bimcat(&[
        "verify",
        "mat",
        "--target",
        "sigma",
        "--max-dim",
        "2",
        "--samples",
        "10",
        "--seed",
        "5",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("# seed: 5\n"));
    let checks: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|l| l.starts_with("PASS axiom=")), "{out}");

    let o = bimcat(&[
        "verify",
        "mat",
        "--samples",
        "40",
        "--seed",
        "5",
        "--corrupt-associator",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("FAIL axiom=pentagon"));
}

#[test]
fn axiom_verifier() {
    for target in ["sigma", "sigma-prime", "dist", "dad", "dbr"] {
        let o = bimcat(&[
            "verify",
            "axioms",
            "--target",
            target,
            "--bound",
            "1",
            "--samples",
            "20",
        ]);
        assert_eq!(code(&o), 0, "{target}: {}", stdout(&o));
        assert!(stdout(&o)
            .lines()
            .any(|l| l.starts_with("PASS axiom=laplaza-II ")));
    }
}

#[test]
fn explained_axioms_commute() {
    for mode in ["sym", "ns", "br"] {
        let dir = tempfile::tempdir().unwrap();
        let o = bimcat(&[
            "explain",
            "axioms",
            "--mode",
            mode,
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        let mut lhs: Vec<PathBuf> = std::fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.to_str().unwrap().ends_with(".lhs.path"))
            .collect();
        lhs.sort();
        assert!(lhs.len() >= 22, "{mode}");
        for l in lhs {
            let r = PathBuf::from(l.to_str().unwrap().replace(".lhs.", ".rhs."));
            let o = check(mode, &l, &r);
            assert_eq!(code(&o), 0, "{mode} {}: {}", l.display(), stdout(&o));
        }
    }
}

#[test]
fn usage_errors() {
    assert_eq!(code(&bimcat(&[])), 1);
    assert_eq!(
        code(&bimcat(&["reduce", "--kind", "nf", "--frobnicate", "x"])),
        1
    );
    assert_eq!(code(&bimcat(&["reduce", "--kind", "nf", "(x+"])), 1);
    assert_eq!(
        code(&bimcat(&[
            "check",
            "--mode",
            "sym",
            "/nonexistent/p.path",
            "/nonexistent/q.path"
        ])),
        1
    );
    assert_eq!(code(&bimcat(&["--help"])), 0);
}

#[test]
fn explain_lists_catalogs() {
    let out = stdout(&bimcat(&["explain"]));
    assert!(out.contains("DeltaL"));
    assert!(out.contains("laplaza-XXIV"));
    assert!(out.contains("base_a"));
    let ns = stdout(&bimcat(&["explain", "edges", "--mode", "ns"]));
    assert!(!ns.contains("ZetaTens"));
}
