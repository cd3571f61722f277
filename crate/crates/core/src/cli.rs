//! Command implementations behind the `tanner` binary. Each returns the text
//! to write, with the configuration and input hash embedded.

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::classify_all;
use crate::comptree::{build_tree, check_claims, consistency_check, for_each_valid_assignment};
use crate::decode::{code_rate, exhaustive_bsc_sweep, monte_carlo, monte_carlo_csv, sweep_csv, Algorithm, ChannelModel, Decoder};
use crate::error::{input, pre, Error, Result};
use crate::fixtures;
use crate::graph::{add_redundant_checks, emit_alist, emit_dense, parse, stats, MatrixFormat, TannerGraph};
use crate::lift::realize_pseudocodeword;
use crate::linalg::fmt_rat;
use crate::polytope::{enumerate_irreducible_with, EnumLimits, Lattice};
use crate::stopping::s_min;
use crate::weights::{feldman_bound, histogram_csv, min_weight, tree_bound, weight_histogram, Channel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Analyze,
    Enumerate,
    Simulate,
    Sweep,
    Comptree,
    Augment,
    Realize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SimChannel {
    Awgn,
    Bsc,
    Bec,
}

/// Everything a run depends on; echoed into its output.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisConfig {
    pub command: Command,
    /// File path, or `fixture:<name>` for a bundled graph.
    pub input: String,
    pub format: MatrixFormat,
    pub channel: SimChannel,
    pub decoder: Algorithm,
    /// Eb/N0 in dB for AWGN, crossover or erasure probability otherwise.
    pub snr_list: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub max_iters: usize,
    pub order: usize,
    pub max_weight: Option<usize>,
    pub root: usize,
    pub depth: usize,
    pub assignment_cap: usize,
    pub p: Option<Vec<i64>>,
    pub max_degree: Option<usize>,
    pub limits: EnumLimits,
    pub threads: Option<usize>,
}

impl AnalysisConfig {
    pub fn new(command: Command, input: impl Into<String>) -> Self {
        AnalysisConfig {
            command,
            input: input.into(),
            format: MatrixFormat::Alist,
            channel: SimChannel::Awgn,
            decoder: Algorithm::MinSum,
            snr_list: vec![4.0, 6.0, 8.0],
            trials: 10_000,
            seed: 1,
            max_iters: 100,
            order: 2,
            max_weight: None,
            root: 0,
            depth: 2,
            assignment_cap: 1 << 20,
            p: None,
            max_degree: Some(16),
            limits: EnumLimits::default(),
            threads: None,
        }
    }
}

pub fn load_graph(cfg: &AnalysisConfig) -> Result<TannerGraph> {
    if let Some(name) = cfg.input.strip_prefix("fixture:") {
        return fixtures::by_name(name).ok_or_else(|| Error::Input(format!("unknown fixture {name:?}")));
    }
    let text = std::fs::read_to_string(&cfg.input)?;
    parse(&text, cfg.format)
}

pub fn run(cfg: &AnalysisConfig) -> Result<String> {
    let g = load_graph(cfg)?;
    match cfg.command {
        Command::Analyze => cmd_analyze(cfg, &g),
        Command::Enumerate => cmd_enumerate(cfg, &g),
        Command::Simulate => cmd_simulate(cfg, &g),
        Command::Sweep => cmd_sweep(cfg, &g),
        Command::Comptree => cmd_comptree(cfg, &g),
        Command::Augment => cmd_augment(cfg, &g),
        Command::Realize => cmd_realize(cfg, &g),
    }
}

fn envelope(cfg: &AnalysisConfig, g: &TannerGraph, body: Value) -> Result<String> {
    let v = json!({ "config": cfg, "input_sha256": g.content_hash(), "result": body });
    Ok(serde_json::to_string_pretty(&v).expect("serializable") + "\n")
}

fn csv_header(cfg: &AnalysisConfig, g: &TannerGraph) -> String {
    format!("# config: {}\n# input_sha256: {}\n", serde_json::to_string(cfg).expect("serializable"), g.content_hash())
}

fn bound_row(name: &str, value: Option<f64>, measured: Option<f64>, note: &str) -> Value {
    json!({
        "bound": name,
        "value": value,
        "measured": measured,
        "slack": value.zip(measured).map(|(b, w)| w - b),
        "note": note,
    })
}

pub fn cmd_analyze(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let st = stats(g)?;
    let set = enumerate_irreducible_with(g, Lattice::Parity, &cfg.limits)?;
    let smin = s_min(g)?;
    let mut w_min = serde_json::Map::new();
    let mut w_f64 = std::collections::HashMap::new();
    for ch in Channel::ALL {
        let w = min_weight(&set.irreducible, ch)?;
        w_f64.insert(ch, w.as_ref().map(crate::weights::approx));
        w_min.insert(format!("{ch:?}").to_lowercase(), json!(w.as_ref().map(fmt_rat)));
    }
    let frac = set
        .irreducible
        .iter()
        .map(|p| crate::weights::max_frac_weight(p).map(|r| crate::weights::approx(&r)))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(None, |a: Option<f64>, x| Some(a.map_or(x, |a| a.min(x))));
    let d = g.min_var_degree() as u64;
    let mut bounds = Vec::new();
    match st.girth {
        Some(gi) => {
            let tb = tree_bound(d, gi as u64).ok().map(|v| v as f64);
            let note = if tb.is_some() { "left degree taken as the minimum variable degree" } else { "hypotheses not met" };
            bounds.push(bound_row("tree_bound_awgn", tb, w_f64[&Channel::Awgn], note));
            bounds.push(bound_row("tree_bound_bsc", tb, w_f64[&Channel::Bsc], note));
            let fb = feldman_bound(d, g.min_check_degree() as u64, gi as u64).ok().map(|v| v as f64);
            bounds.push(bound_row("feldman_bound_maxfrac", fb, frac, if fb.is_some() { "" } else { "hypotheses not met" }));
        }
        None => bounds.push(bound_row("tree_bound_awgn", None, w_f64[&Channel::Awgn], "graph is a forest")),
    }
    let smin_over_t = smin.map(|s| s as f64 / set.t_value.max(1) as f64);
    bounds.push(bound_row("s_min_over_t", smin_over_t, w_f64[&Channel::Awgn], "lower bound for bad pseudocodewords"));
    let body = json!({
        "n": st.n,
        "m": st.m,
        "girth": st.girth,
        "rank": st.rank,
        "dimension": st.dimension,
        "d_min": st.d_min,
        "s_min": smin,
        "t_value": set.t_value,
        "counts": set.counts,
        "w_min": w_min,
        "bounds": bounds,
    });
    envelope(cfg, g, body)
}

pub fn cmd_enumerate(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let set = enumerate_irreducible_with(g, Lattice::Parity, &cfg.limits)?;
    let classified = classify_all(g)?;
    let note = if set.counts.non_codeword == 0 { Some("codeword multiples only") } else { None };
    let mut hist = serde_json::Map::new();
    for ch in Channel::ALL {
        hist.insert(format!("{ch:?}").to_lowercase(), json!(histogram_csv(&weight_histogram(&set, ch)?)));
    }
    let body = json!({
        "t_value": set.t_value,
        "counts": set.counts,
        "note": note,
        "pseudocodewords": classified,
        "histograms_csv": hist,
    });
    envelope(cfg, g, body)
}

pub fn cmd_simulate(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    if cfg.snr_list.is_empty() {
        return input("--snr-list is empty");
    }
    let dec = Decoder::new(g, cfg.decoder, cfg.max_iters)?;
    let rate = code_rate(g)?;
    let mut points = Vec::new();
    for &x in &cfg.snr_list {
        let ch = match cfg.channel {
            SimChannel::Awgn => ChannelModel::Biawgn { ebn0_db: x, rate },
            SimChannel::Bsc => ChannelModel::Bsc { p: check_prob(x)? },
            SimChannel::Bec => ChannelModel::Bec { p: check_prob(x)? },
        };
        points.push(monte_carlo(g, &dec, ch, cfg.trials, cfg.seed)?);
    }
    let mut out = csv_header(cfg, g);
    if cfg.channel == SimChannel::Awgn {
        out.push_str(&format!("# sigma^2 = 1/(2*R*10^(EbN0/10)), R = {rate}\n"));
    }
    out.push_str(&monte_carlo_csv(&points, g.n()));
    Ok(out)
}

fn check_prob(x: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        input(format!("channel probability {x} outside [0, 1]"))
    }
}

pub fn cmd_sweep(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let r = exhaustive_bsc_sweep(g, cfg.decoder, cfg.max_iters, cfg.max_weight.unwrap_or(g.n()))?;
    Ok(csv_header(cfg, g) + &sweep_csv(&r))
}

pub fn cmd_comptree(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let tree = build_tree(g, cfg.root, cfg.depth)?;
    let count = tree.assignment_count();
    let mut consistent = 0u64;
    let mut inconsistent = 0u64;
    let mut examples = Vec::new();
    let enumerated = count <= cfg.assignment_cap as u128;
    if enumerated {
        let _ = for_each_valid_assignment(&tree, |a| {
            let c = consistency_check(&tree, a, g.n());
            if c.consistent {
                consistent += 1;
            } else {
                inconsistent += 1;
                if examples.len() < 5 {
                    examples.push(json!({ "assignment": a, "consistency": c }));
                }
            }
            std::ops::ControlFlow::Continue(())
        });
    }
    let body = json!({
        "root": cfg.root,
        "iterations": cfg.depth,
        "nodes": tree.nodes.len(),
        "check_copies": tree.check_copies(),
        "valid_assignments": count.to_string(),
        "enumerated": enumerated,
        "consistent": consistent,
        "inconsistent": inconsistent,
        "inconsistent_examples": examples,
        "claims": check_claims(g),
        "dot": tree.to_dot(g),
    });
    envelope(cfg, g, body)
}

pub fn cmd_augment(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let aug = add_redundant_checks(g, cfg.order)?;
    log::info!("augmented {} -> {} checks, input sha256 {}", g.m(), aug.m(), g.content_hash());
    Ok(match cfg.format {
        MatrixFormat::Alist => emit_alist(&aug),
        MatrixFormat::Dense => csv_header(cfg, g) + &emit_dense(&aug),
    })
}

pub fn cmd_realize(cfg: &AnalysisConfig, g: &TannerGraph) -> Result<String> {
    let Some(p) = &cfg.p else { return pre("realize needs --p") };
    let outcome = realize_pseudocodeword(g, p, cfg.max_degree)?;
    envelope(cfg, g, serde_json::to_value(&outcome).expect("serializable"))
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Limit(_) | Error::Infeasible(_) => 1,
        Error::Input(_) | Error::Precondition(_) | Error::Io(_) => 2,
    }
}
