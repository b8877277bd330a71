//! Row assembly and rendering for the predict / oracle / ratio commands.
//! Text tables mirror the published layout (columns s, τ, f, g, m, M, Ω);
//! JSON output carries `"schema": 1`.

use sylow_branching::branching::{
    big_m_of_label, label_stats, m_of_label, n_of_label, predict_omega, type_tuple,
    LabelStats, OmegaDescription, TypeTuple,
};
use sylow_branching::wreath::Label;

pub struct PredictRow {
    pub label: Label,
    pub tau_profile: Vec<u8>,
    pub type_counts: TypeTuple,
    pub stats: Option<LabelStats>,
    pub m: u64,
    pub big_m: u64,
    pub n_value: u64,
    pub omega: OmegaDescription,
}

pub fn predict_row(label: &Label) -> PredictRow {
    let (tau_profile, type_counts, stats) = match label {
        Label::PrimePower(s) => {
            let st = label_stats(s);
            let mut counts = [0u32; 4];
            counts[st.tau.index() as usize - 1] = 1;
            (vec![st.tau.index()], TypeTuple(counts), Some(st))
        }
        Label::Composite(ms) => (
            ms.seqs().iter().map(|s| label_stats(s).tau.index()).collect(),
            type_tuple(ms),
            None,
        ),
    };
    PredictRow {
        label: label.clone(),
        tau_profile,
        type_counts,
        stats,
        m: m_of_label(label),
        big_m: big_m_of_label(label),
        n_value: n_of_label(label),
        omega: predict_omega(label),
    }
}

fn opt(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn print_predict_table(p: u32, n: u64, rows: &[PredictRow]) {
    println!("p = {p}, n = {n}");
    println!(
        "{:<24} {:<10} {:<3} {:<3} {:>10} {:>10} {:>10}  Ω",
        "s", "τ", "f", "g", "m", "M", "N"
    );
    for row in rows {
        let tau = row
            .tau_profile
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let (f, g) = match &row.stats {
            Some(st) => (opt(st.first_nonzero), opt(st.second_nonzero)),
            None => ("-".into(), "-".into()),
        };
        println!(
            "{:<24} {:<10} {:<3} {:<3} {:>10} {:>10} {:>10}  {}",
            row.label.to_string(),
            tau,
            f,
            g,
            row.m,
            row.big_m,
            row.n_value,
            row.omega
        );
    }
}

pub fn predict_json(p: u32, n: u64, rows: &[PredictRow]) -> serde_json::Value {
    let encoded: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            serde_json::json!({
                "label": row.label.to_string(),
                "tau_profile": row.tau_profile,
                "T": row.type_counts.0,
                "f": row.stats.and_then(|s| s.first_nonzero),
                "g": row.stats.and_then(|s| s.second_nonzero),
                "m": row.m,
                "M": row.big_m,
                "N": row.n_value,
                "omega": row.omega,
                "omega_str": row.omega.to_string(),
            })
        })
        .collect();
    let mut value = serde_json::json!({
        "schema": 1,
        "p": p,
        "n": n,
        "predictions": encoded,
    });
    if p < 5 {
        value["warning"] =
            serde_json::json!("closed-form predictions are established for p >= 5 only");
    }
    value
}
