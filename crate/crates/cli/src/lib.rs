//! Command-line front end for Bayesian game description files.
//!
//! Exit codes: 0 success, 2 parse or validation failure, 3 infeasible
//! analysis, 4 a negative answer to an existence query.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bayes_stp::bayes_potential::{at_potential, harsanyi_potential, selten_potential, th_potential, tn_potential};
use bayes_stp::conversions::{at_bne, at_convert, h_bne, harsanyi_convert, s_bne, selten_convert};
use bayes_stp::document::parse_game;
use bayes_stp::dynamics::{dynamics, marginal, simulate, stationary_distribution};
use bayes_stp::{
    BayesianGame, Conversion, ConvertedGame, Error, ProfileSpace, Schedule, SurConfig, TieBreak, UpdateRule,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use render::{bimatrix, ext_json, num, payoff_list, profile, table, vector_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_NEGATIVE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "bayes-stp", version, about = "Analyze finite Bayesian games in structure-vector form")]
struct Cli {
    /// Machine-readable JSON instead of tables
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Players, types, actions, prior and beliefs
    Info { file: PathBuf },
    /// Payoffs of a converted game
    Convert {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        tp: TypeProfile,
        file: PathBuf,
    },
    /// Pure Bayesian-Nash equilibria
    Nash {
        #[arg(long, value_enum)]
        notion: NashNotion,
        #[command(flatten)]
        tp: TypeProfile,
        file: PathBuf,
    },
    /// Potential test
    Potential {
        #[arg(long, value_enum)]
        notion: PotNotion,
        #[command(flatten)]
        tp: TypeProfile,
        file: PathBuf,
    },
    /// Sample a trajectory of the strategy-updating dynamics
    Simulate {
        #[command(flatten)]
        dyn_args: DynArgs,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Initial state, 1-based: actions (selten) or types then actions (at-*); defaults to all ones
        #[arg(long, value_delimiter = ',')]
        init: Option<Vec<usize>>,
        file: PathBuf,
    },
    /// Stationary distribution of the dynamics
    Stationary {
        #[command(flatten)]
        dyn_args: DynArgs,
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct TypeProfile {
    /// Realized type profile j1,...,jn (1-based)
    #[arg(long = "type-profile", value_delimiter = ',')]
    type_profile: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct DynArgs {
    #[arg(long, value_enum)]
    conversion: DynConversion,
    #[arg(long, value_enum)]
    sur: Sur,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Ties::Lowest)]
    ties: Ties,
    #[command(flatten)]
    tp: TypeProfile,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Harsanyi,
    Selten,
    At,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum NashNotion {
    Interim,
    Harsanyi,
    Selten,
    At,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PotNotion {
    Tn,
    Th,
    Harsanyi,
    Selten,
    At,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DynConversion {
    Selten,
    AtConcurrent,
    AtSeparate,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Sur {
    Mbra,
    Logit,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Sync,
    Rr,
    Uniform,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Ties {
    Lowest,
    Uniform,
}

/// A finished command: text for the output stream and an exit code.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: EXIT_OK }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Analysis(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Analysis(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Analysis(e) => match e {
                Error::ZeroProbabilityType { .. }
                | Error::InfeasibleUpdate { .. }
                | Error::InfinitePayoff(_)
                | Error::NotApplicable(_)
                | Error::NonpositiveWeight { .. } => EXIT_INFEASIBLE,
                _ => EXIT_INPUT,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => f.write_str(m),
            Failure::Analysis(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run(args: impl IntoIterator<Item = OsString>, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let _ = write!(out, "{}", r.text);
            r.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}

fn execute(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Info { file } => info(&load(file)?, json),
        Command::Convert { kind, tp, file } => convert(&load(file)?, *kind, tp, json),
        Command::Nash { notion, tp, file } => nash(&load(file)?, *notion, tp, json),
        Command::Potential { notion, tp, file } => potential(&load(file)?, *notion, tp, json),
        Command::Simulate {
            dyn_args,
            steps,
            seed,
            init,
            file,
        } => run_simulation(&load(file)?, dyn_args, *steps, *seed, init.as_deref(), json),
        Command::Stationary { dyn_args, file } => stationary(&load(file)?, dyn_args, json),
    }
}

fn load(path: &PathBuf) -> std::result::Result<BayesianGame, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_game(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn require_types(g: &BayesianGame, tp: &TypeProfile) -> std::result::Result<Vec<usize>, Failure> {
    let t = tp
        .type_profile
        .clone()
        .ok_or_else(|| Failure::Input("--type-profile is required for the Selten conversion".into()))?;
    g.type_space()
        .index(&t)
        .map_err(|e| Failure::Input(format!("--type-profile {}: {e}", profile(&t))))?;
    Ok(t)
}

fn info(g: &BayesianGame, json: bool) -> Outcome {
    let n = g.players();
    let beliefs: Option<Vec<Vec<Vec<f64>>>> = g.check_positive_marginals().ok().map(|_| {
        (1..=n)
            .map(|i| g.belief_matrix(i).expect("positive marginals").columns)
            .collect()
    });
    if json {
        return Ok(Report::ok(pretty(json!({
            "players": n,
            "types": g.type_cards(),
            "actions": g.action_cards(),
            "admissible": g.admissible_sets(),
            "fully_admissible": g.is_fully_admissible(),
            "prior": g.prior(),
            "beliefs": beliefs,
        }))));
    }
    let mut s = format!("players: {n}\ntypes: {:?}\nactions: {:?}\n", g.type_cards(), g.action_cards());
    for i in 1..=n {
        for j in 1..=g.type_cards()[i - 1] {
            s += &format!("admissible actions of player {i}, type {j}: {:?}\n", g.admissible(i, j));
        }
    }
    s += "\nprior:\n";
    let rows: Vec<Vec<String>> = g
        .type_space()
        .iter()
        .zip(g.prior())
        .map(|(t, &p)| vec![profile(&t), num(p)])
        .collect();
    s += &table(&["types".into(), "p".into()], &rows);
    match &beliefs {
        Some(b) => {
            for i in 1..=n {
                let others = g.others_space(i);
                s += &format!("\nbeliefs of player {i} (columns: own type):\n");
                let mut header = vec!["others".to_string()];
                header.extend((1..=g.type_cards()[i - 1]).map(|j| format!("t{j}")));
                let rows: Vec<Vec<String>> = others
                    .iter()
                    .enumerate()
                    .map(|(r, o)| {
                        let mut row = vec![profile(&o)];
                        row.extend(b[i - 1].iter().map(|col| num(col[r])));
                        row
                    })
                    .collect();
                s += &table(&header, &rows);
            }
        }
        None => s += "\nbeliefs undefined: some type has zero probability\n",
    }
    Ok(Report::ok(s))
}

fn converted(g: &BayesianGame, kind: Kind, tp: &TypeProfile) -> std::result::Result<ConvertedGame, Failure> {
    Ok(match kind {
        Kind::Harsanyi => harsanyi_convert(g),
        Kind::Selten => selten_convert(g, &require_types(g, tp)?)?,
        Kind::At => at_convert(g)?,
    })
}

fn at_label(r: usize) -> impl Fn(usize) -> String {
    move |s| format!("t{}a{}", (s - 1) / r + 1, (s - 1) % r + 1)
}

fn convert(g: &BayesianGame, kind: Kind, tp: &TypeProfile, json: bool) -> Outcome {
    let cg = converted(g, kind, tp)?;
    let n = g.players();
    let ng = cg.to_normal_game();
    if json {
        let rows: Vec<Value> = (1..=n).map(|i| ext_json(cg.row(i))).collect();
        let mut v = json!({
            "kind": kind_name(kind),
            "strategies": ng.cardinalities(),
            "rows": rows,
        });
        match &cg {
            ConvertedGame::Selten { type_profile, .. } => v["type_profile"] = json!(type_profile),
            ConvertedGame::ActionType { .. } => {
                v["types"] = json!(g.type_cards());
                v["actions"] = json!(g.action_cards());
            }
            ConvertedGame::Harsanyi { .. } => {}
        }
        return Ok(Report::ok(pretty(v)));
    }
    let mut s = match &cg {
        ConvertedGame::Selten { type_profile, .. } => format!("Selten game at types {}\n", profile(type_profile)),
        ConvertedGame::Harsanyi { .. } => "Harsanyi game\n".into(),
        ConvertedGame::ActionType { .. } => "Action-Type game (strategies tXaY)\n".into(),
    };
    let ac = g.action_cards();
    let plain = |k: usize| format!("a{k}");
    if n == 2 {
        s += &match &cg {
            ConvertedGame::ActionType { .. } => bimatrix(&ng, [&at_label(ac[0]), &at_label(ac[1])]),
            _ => bimatrix(&ng, [&plain, &plain]),
        };
    } else {
        let label = |p: &[usize]| match &cg {
            ConvertedGame::ActionType { .. } => {
                let parts: Vec<String> = p.iter().zip(ac).map(|(&x, &r)| at_label(r)(x)).collect();
                format!("({})", parts.join(","))
            }
            _ => profile(p),
        };
        s += &payoff_list(&ng, &label);
    }
    Ok(Report::ok(s))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Harsanyi => "harsanyi",
        Kind::Selten => "selten",
        Kind::At => "at",
    }
}

fn nash(g: &BayesianGame, notion: NashNotion, tp: &TypeProfile, json: bool) -> Outcome {
    let (name, key, found): (&str, &str, Vec<Value>) = match notion {
        NashNotion::Interim => (
            "BN-E",
            "interim",
            g.interim_bne()?.into_iter().map(|s| json!({ "maps": s.maps })).collect(),
        ),
        NashNotion::Harsanyi => ("H-BN-E", "harsanyi", h_bne(g).into_iter().map(|a| json!(a)).collect()),
        NashNotion::Selten => (
            "S-BN-E",
            "selten",
            s_bne(g, &require_types(g, tp)?)?.into_iter().map(|a| json!(a)).collect(),
        ),
        NashNotion::At => (
            "AT-BN-E",
            "at",
            at_bne(g)?
                .into_iter()
                .map(|p| json!({ "types": p.types, "actions": p.actions }))
                .collect(),
        ),
    };
    let code = if found.is_empty() { EXIT_NEGATIVE } else { EXIT_OK };
    let text = if json {
        pretty(json!({ "notion": key, "exists": !found.is_empty(), "equilibria": found }))
    } else if found.is_empty() {
        format!("no {name}\n")
    } else {
        let lines: Vec<String> = found.iter().map(describe_equilibrium).collect();
        format!("{} {name}:\n{}\n", lines.len(), lines.join("\n"))
    };
    Ok(Report { text, code })
}

fn describe_equilibrium(v: &Value) -> String {
    let list = |x: &Value| -> Vec<usize> { serde_json::from_value(x.clone()).unwrap_or_default() };
    if let Some(maps) = v.get("maps") {
        let parts: Vec<String> = maps
            .as_array()
            .into_iter()
            .flatten()
            .enumerate()
            .map(|(i, m)| format!("player {}: {}", i + 1, profile(&list(m))))
            .collect();
        format!("  {}", parts.join("; "))
    } else if let Some(t) = v.get("types") {
        format!("  types {} actions {}", profile(&list(t)), profile(&list(&v["actions"])))
    } else {
        format!("  {}", profile(&list(v)))
    }
}

fn potential(g: &BayesianGame, notion: PotNotion, tp: &TypeProfile, json: bool) -> Outcome {
    let rep = match notion {
        PotNotion::Tn => tn_potential(g)?,
        PotNotion::Th => th_potential(g)?,
        PotNotion::Harsanyi => harsanyi_potential(g)?,
        PotNotion::Selten => selten_potential(g, &require_types(g, tp)?)?,
        PotNotion::At => at_potential(g)?,
    };
    let key = match notion {
        PotNotion::Tn => "tn",
        PotNotion::Th => "th",
        PotNotion::Harsanyi => "harsanyi",
        PotNotion::Selten => "selten",
        PotNotion::At => "at",
    };
    let code = if rep.is_potential { EXIT_OK } else { EXIT_NEGATIVE };
    // per-type blocks for notions that live on (t, a)
    let by_type = matches!(notion, PotNotion::Tn | PotNotion::Th | PotNotion::At);
    let r = g.action_space().total();
    let blocks: Vec<(Vec<usize>, &[bayes_stp::ExtReal])> = match (&rep.potential_vector, by_type) {
        (Some(p), true) => g.type_space().iter().zip(p.chunks(r)).collect(),
        _ => Vec::new(),
    };
    if json {
        let mut v = json!({
            "notion": key,
            "is_potential": rep.is_potential,
            "residual": rep.residual,
            "potential": rep.potential_vector.as_deref().map(ext_json),
        });
        if by_type && rep.is_potential {
            v["per_type"] = Value::Array(
                blocks
                    .iter()
                    .map(|(t, b)| json!({ "types": t, "potential": ext_json(b) }))
                    .collect(),
            );
        }
        return Ok(Report { text: pretty(v), code });
    }
    let mut s = format!(
        "{key} potential: {} (residual {:.3e})\n",
        if rep.is_potential { "yes" } else { "no" },
        rep.residual
    );
    if let Some(p) = &rep.potential_vector {
        if by_type {
            for (t, b) in &blocks {
                s += &format!("\ntypes {}:\n", profile(t));
                s += &vector_table(g.action_space(), b, "potential");
            }
        } else {
            s += &vector_table(g.action_space(), p, "potential");
        }
    }
    Ok(Report { text: s, code })
}

fn sur_config(g: &BayesianGame, a: &DynArgs) -> std::result::Result<SurConfig, Failure> {
    let conversion = match a.conversion {
        DynConversion::Selten => Conversion::Selten(require_types(g, &a.tp)?),
        DynConversion::AtConcurrent => Conversion::ActionTypeConcurrent,
        DynConversion::AtSeparate => Conversion::ActionTypeSeparate,
    };
    let rule = match a.sur {
        Sur::Mbra => UpdateRule::Mbra,
        Sur::Logit => UpdateRule::Logit(a.lambda),
    };
    let schedule = match a.mode {
        Mode::Sync => Schedule::Synchronous,
        Mode::Rr => Schedule::AsyncRoundRobin((1..=g.players()).collect()),
        Mode::Uniform => Schedule::AsyncUniform,
    };
    let tie_break = match a.ties {
        Ties::Lowest => TieBreak::LowestIndex,
        Ties::Uniform => TieBreak::Uniform,
    };
    Ok(SurConfig {
        conversion,
        rule,
        schedule,
        tie_break,
    })
}

fn run_simulation(
    g: &BayesianGame,
    a: &DynArgs,
    steps: usize,
    seed: u64,
    init: Option<&[usize]>,
    json: bool,
) -> Outcome {
    let d = dynamics(g, &sur_config(g, a)?)?;
    let start = init.map_or_else(|| vec![1; d.space.len()], <[usize]>::to_vec);
    let x0 = d
        .space
        .index(&start)
        .map_err(|e| Failure::Input(format!("--init {}: {e}", profile(&start))))?;
    let path = simulate(&d.steps, x0, steps, seed)?;
    let states: Vec<Vec<usize>> = path.iter().map(|&k| d.space.unindex(k).expect("in range")).collect();
    if json {
        return Ok(Report::ok(pretty(json!({
            "state_cardinalities": d.space.cardinalities(),
            "seed": seed,
            "trajectory": path,
            "states": states,
        }))));
    }
    let rows: Vec<Vec<String>> = states
        .iter()
        .zip(&path)
        .enumerate()
        .map(|(k, (s, &i))| vec![k.to_string(), i.to_string(), profile(s)])
        .collect();
    Ok(Report::ok(table(&["step".into(), "index".into(), "state".into()], &rows)))
}

fn stationary(g: &BayesianGame, a: &DynArgs, json: bool) -> Outcome {
    let d = dynamics(g, &sur_config(g, a)?)?;
    let res = stationary_distribution(&d.period_map())?;
    let marginals: Vec<Vec<f64>> = (1..=d.space.len())
        .map(|i| marginal(&res.distribution, i, &d.space))
        .collect::<bayes_stp::Result<_>>()?;
    if json {
        return Ok(Report::ok(pretty(json!({
            "state_cardinalities": d.space.cardinalities(),
            "distribution": res.distribution,
            "marginals": marginals,
            "iterations": res.iterations,
            "converged": res.converged,
            "irreducible": res.irreducible,
            "warnings": res.warnings,
        }))));
    }
    let mut s = format!(
        "power iteration: {} iterations, {}\n",
        res.iterations,
        if res.converged { "converged" } else { "not converged" }
    );
    for w in &res.warnings {
        s += &format!("warning: {w}\n");
    }
    s += "\n";
    s += &state_table(&d.space, &res.distribution);
    for (i, m) in marginals.iter().enumerate() {
        let parts: Vec<String> = m.iter().map(|&x| num(x)).collect();
        s += &format!("marginal of coordinate {}: [{}]\n", i + 1, parts.join(", "));
    }
    Ok(Report::ok(s))
}

fn state_table(space: &ProfileSpace, dist: &[f64]) -> String {
    let rows: Vec<Vec<String>> = space
        .iter()
        .zip(dist)
        .map(|(p, &x)| vec![profile(&p), num(x)])
        .collect();
    table(&["state".into(), "mu".into()], &rows)
}
