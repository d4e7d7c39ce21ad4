use std::process::{Command, Output};

fn arithphase(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_arithphase"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("ARITHPHASE_THREADS", t),
        None => cmd.env_remove("ARITHPHASE_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = arithphase(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn figure_output_is_byte_identical_across_runs_and_thread_counts() {
    let jobs: [&[&str]; 5] = [
        &["fig", "fig1", "--params", "n=4096"],
        &["fig", "fig4", "--params", "kmax=3"],
        &["fig", "fig5", "--params", "qmax=40"],
        &["fig", "fig7", "--params", "qmax=30", "beta_b=pi"],
        &["fig", "fig8", "--params", "qmax=30"],
    ];
    for job in jobs {
        let reference = arithphase(job, None).stdout;
        assert!(!reference.is_empty());
        for threads in ["1", "3", "8"] {
            let again = arithphase(job, Some(threads));
            assert_eq!(again.status.code(), Some(0));
            assert_eq!(again.stdout, reference, "{job:?} with {threads} threads");
        }
    }
}

#[test]
fn out_flag_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("arithphase-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig3.csv");
    let path_str = path.to_str().unwrap();
    let out = arithphase(&["fig", "fig3", "--out", path_str], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["fig", "fig3"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(arithphase(&["fig", "fig11"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["fig", "fig5", "--params", "bogus=1"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["fig", "fig5", "--params", "qmax"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["fig", "fig5", "--params", "qmin=1"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["table", "ramanujan", "--max", "5"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["table", "sigma", "--max", "5"], None).status.code(), Some(2));
    assert_eq!(arithphase(&["fig", "fig5"], Some("zero")).status.code(), Some(2));
    let unwritable = arithphase(&["fig", "fig3", "--out", "/nonexistent-dir/x/fig3.csv"], None);
    assert_eq!(unwritable.status.code(), Some(1));
    assert!(!unwritable.stderr.is_empty());
}

#[test]
fn help_lists_figures_and_tables() {
    let top = stdout(&["--help"]);
    for name in ["totient", "moebius", "mangoldt_b", "carmichael", "ramanujan", "kloosterman", "fig1", "fig10"] {
        assert!(top.contains(name), "top-level help lacks {name}");
    }
    let fig = stdout(&["fig", "--help"]);
    for i in 1..=10 {
        assert!(fig.contains(&format!("fig{i}")), "fig help lacks fig{i}");
    }
    let table = stdout(&["table", "--help"]);
    assert!(table.contains("mangoldt_b") && table.contains("kloosterman"));
}

#[test]
fn table_examples() {
    let totient = stdout(&["table", "totient", "--max", "10"]);
    let values: Vec<&str> = totient.lines().skip(2).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values, ["1", "1", "2", "2", "4", "2", "6", "4", "6", "4"]);
    let ramanujan = stdout(&["table", "ramanujan", "--q", "6", "--nmax", "6"]);
    let values: Vec<&str> = ramanujan.lines().skip(2).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values, ["2", "1", "-1", "-2", "-1", "1", "2"]);
    assert_eq!(stdout(&["table", "carmichael", "--max", "8"]).lines().last(), Some("8,2"));
    let kloosterman = stdout(&["table", "kloosterman", "--q", "5", "--max", "1"]);
    assert_eq!(kloosterman.lines().nth(1), Some("n,l,re,im,integer"));
    assert_eq!(kloosterman.lines().nth(2), Some("0,0,4,0,4"));
}

#[test]
fn csv_has_params_header_and_twelve_digit_floats() {
    let text = stdout(&["fig", "fig2", "--params", "n=2000", "qmax=6"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# params: figure=fig2 n=2000 qmax=6"));
    assert_eq!(lines.next(), Some("q,rft_b,mu_over_phi"));
    let row3: Vec<&str> = lines.nth(2).unwrap().split(',').collect();
    assert_eq!(row3[0], "3");
    assert_eq!(row3[2], "-0.5");
    let digits = row3[1].trim_start_matches('-').replace('.', "");
    assert!(digits.trim_start_matches('0').len() <= 12, "{}", row3[1]);
}
