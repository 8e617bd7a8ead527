use std::ffi::OsString;
use std::path::PathBuf;

use bayes_stp::document::{parse_game, serialize_game};
use bayes_stp::BayesianGame;
use bayes_stp_cli::{run, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Output {
    let argv = std::iter::once("bayes-stp").chain(args.iter().copied()).map(OsString::from);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = cli(&all);
    (o.code, serde_json::from_str(&o.out).unwrap_or_else(|e| panic!("{e}: {}", o.out)))
}

fn scratch(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("bayes-stp-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn harsanyi_equilibrium_of_restricted_game() {
    let o = cli(&["nash", "--notion", "harsanyi", &fixture("restricted.game")]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.out.contains("(2,3)"), "{}", o.out);
    let (_, v) = cli_json(&["nash", "--notion", "harsanyi", &fixture("restricted.game")]);
    assert_eq!(v["equilibria"], serde_json::json!([[2, 3]]));
}

#[test]
fn action_type_equilibrium_is_absent() {
    let o = cli(&["nash", "--notion", "at", &fixture("restricted.game")]);
    assert_eq!(o.code, EXIT_NEGATIVE);
    assert_eq!(o.out.trim(), "no AT-BN-E");
    let (code, v) = cli_json(&["nash", "--notion", "at", &fixture("restricted.game")]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["exists"], Value::Bool(false));
}

#[test]
fn type_wise_potential_has_one_block_per_type_profile() {
    let path = fixture("type_potential.game");
    let (code, v) = cli_json(&["potential", "--notion", "tn", &path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["is_potential"], Value::Bool(true));
    let g = parse_game(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let blocks = v["per_type"].as_array().unwrap();
    assert_eq!(blocks.len(), g.type_space().total());
    // unilateral payoff differences equal potential differences
    for b in blocks {
        let t: Vec<usize> = serde_json::from_value(b["types"].clone()).unwrap();
        let p: Vec<f64> = serde_json::from_value(b["potential"].clone()).unwrap();
        let space = g.action_space();
        for a in space.iter() {
            for i in 0..g.players() {
                for x in 1..=g.action_cards()[i] {
                    let mut c = a.clone();
                    c[i] = x;
                    let du = g.payoff(i + 1, &t, &c).unwrap().to_f64() - g.payoff(i + 1, &t, &a).unwrap().to_f64();
                    let dp = p[space.index(&c).unwrap() - 1] - p[space.index(&a).unwrap() - 1];
                    assert!((du - dp).abs() < 1e-9, "types {t:?} {a:?} -> {c:?}");
                }
            }
        }
    }
}

#[test]
fn failed_potential_test_exits_negative() {
    let o = cli(&["potential", "--notion", "at", &fixture("action_type_dynamics.game")]);
    assert_eq!(o.code, EXIT_NEGATIVE);
    assert!(o.out.starts_with("at potential: no"), "{}", o.out);
}

#[test]
fn info_prints_beliefs() {
    let (code, v) = cli_json(&["info", &fixture("beliefs.game")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["types"], serde_json::json!([2, 3]));
    // player 2, type 1: prior mass 0.1 and 0.15 over player 1's types
    let col = &v["beliefs"][1][0];
    assert!((col[0].as_f64().unwrap() - 0.4).abs() < 1e-12);
    assert!((col[1].as_f64().unwrap() - 0.6).abs() < 1e-12);
    let human = cli(&["info", &fixture("beliefs.game")]);
    assert!(human.out.contains("beliefs of player 2"));
}

#[test]
fn two_player_conversions_print_bimatrix() {
    let o = cli(&["convert", "--kind", "at", &fixture("action_type_dynamics.game")]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.out.lines().collect();
    assert!(lines[1].starts_with("1 \\ 2"));
    assert!(lines[1].contains("t2a2"));
    assert_eq!(lines.len(), 2 + 4);
    let o = cli(&["convert", "--kind", "selten", "--type-profile", "1,2", &fixture("selten_dynamics.game")]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.starts_with("Selten game at types (1,2)"));
}

#[test]
fn converted_rows_match_the_library() {
    let path = fixture("restricted.game");
    let g = parse_game(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (_, v) = cli_json(&["convert", "--kind", "harsanyi", &path]);
    let cg = bayes_stp::conversions::harsanyi_convert(&g);
    for i in 1..=2 {
        let row: Vec<Option<f64>> = serde_json::from_value(v["rows"][i - 1].clone()).unwrap();
        let want: Vec<Option<f64>> = cg.row(i).iter().map(|x| x.value()).collect();
        assert_eq!(row, want);
    }
}

#[test]
fn selten_needs_a_type_profile() {
    let o = cli(&["nash", "--notion", "selten", &fixture("restricted.game")]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("--type-profile"));
    assert!(o.out.is_empty());
    let o = cli(&["nash", "--notion", "selten", "--type-profile", "3,1", &fixture("restricted.game")]);
    assert_eq!(o.code, EXIT_INPUT);
}

#[test]
fn bad_documents_exit_two() {
    let o = cli(&["info", "/definitely/not/here.game"]);
    assert_eq!(o.code, EXIT_INPUT);
    let text = std::fs::read_to_string(fixture("beliefs.game")).unwrap().replace("0.15,", "0.05,");
    let o = cli(&["info", &scratch("prior.game", &text)]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("prior"), "{}", o.err);
    let o = cli(&["info", &scratch("junk.game", "{ not json")]);
    assert_eq!(o.code, EXIT_INPUT);
    let o = cli(&["nash", "--notion", "everything", &fixture("restricted.game")]);
    assert_eq!(o.code, EXIT_INPUT);
}

#[test]
fn zero_probability_type_is_infeasible() {
    let g = BayesianGame::fully_admissible(
        vec![2, 2],
        vec![2, 2],
        vec![vec![1.0; 16], vec![2.0; 16]],
        vec![0.5, 0.5, 0.0, 0.0],
    )
    .unwrap();
    let path = scratch("zero.game", &serialize_game(&g));
    let o = cli(&["nash", "--notion", "interim", &path]);
    assert_eq!(o.code, EXIT_INFEASIBLE);
    assert!(o.err.contains("zero marginal probability"), "{}", o.err);
    let o = cli(&["info", &path]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("beliefs undefined"));
}

#[test]
fn best_reply_trajectory_reaches_equilibrium() {
    let args = [
        "simulate", "--conversion", "selten", "--type-profile", "1,2", "--sur", "mbra", "--mode", "rr", "--steps", "4",
        "--init", "1,1",
    ];
    let mut all = args.to_vec();
    let path = fixture("selten_dynamics.game");
    all.push(&path);
    let (code, v) = cli_json(&all);
    assert_eq!(code, EXIT_OK);
    let path_idx: Vec<usize> = serde_json::from_value(v["trajectory"].clone()).unwrap();
    assert_eq!(path_idx.len(), 5);
    assert_eq!(path_idx[0], 1);
    let states: Vec<Vec<usize>> = serde_json::from_value(v["states"].clone()).unwrap();
    let g = parse_game(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let eq = bayes_stp::conversions::s_bne(&g, &[1, 2]).unwrap();
    assert!(eq.contains(states.last().unwrap()));
}

#[test]
fn json_output_is_stable() {
    let path = fixture("action_type_dynamics.game");
    let sim = [
        "simulate", "--conversion", "at-separate", "--sur", "logit", "--lambda", "0.5", "--mode", "uniform", "--steps",
        "30", "--seed", "7", &path,
    ];
    assert_eq!(cli_json(&sim), cli_json(&sim));
    let st = ["stationary", "--conversion", "at-concurrent", "--sur", "logit", "--mode", "rr", &path];
    let (code, a) = cli_json(&st);
    assert_eq!(code, EXIT_OK);
    assert_eq!(cli_json(&st).1, a);
    let mu: Vec<f64> = serde_json::from_value(a["distribution"].clone()).unwrap();
    assert!((mu.iter().sum::<f64>() - 1.0).abs() < 1e-10);
    assert_eq!(a["converged"], Value::Bool(true));
    assert_eq!(a["marginals"].as_array().unwrap().len(), 4);
}

#[test]
fn seeds_change_logit_trajectories() {
    let path = fixture("action_type_dynamics.game");
    let base = ["simulate", "--conversion", "at-concurrent", "--sur", "logit", "--lambda", "0", "--mode", "sync", "--steps", "40"];
    let with_seed = |s: &'static str| {
        let mut a = base.to_vec();
        a.extend(["--seed", s, path.as_str()]);
        cli_json(&a).1["trajectory"].clone()
    };
    assert_ne!(with_seed("1"), with_seed("2"));
}

#[test]
fn help_goes_to_stdout() {
    let o = cli(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("stationary"));
    assert!(o.err.is_empty());
}
