//! Cross-representation checking.
//!
//! One instance is a vector together with its derived parameter list; the
//! two braid words and the grid diagram all present the same link, so
//! every invariant that two representations both compute must agree. A
//! disagreement is reported, never repaired: these are equality checks on
//! frozen arithmetic, and a failure means a construction bug.

use crate::braid::{lorenz_word, tlink_word, BraidWord};
use crate::grid::GridDiagram;
use crate::invariants::{full_report, Bracket, InvariantOptions, InvariantReport, ReportSource};
use crate::lorenz::{LorenzVector, TLinkParams};
use crate::Result;
use serde::{Deserialize, Serialize};

/// All valid vectors with entry sum at most `max_sum`, shortest first and
/// lexicographic within a length.
pub fn enumerate_vectors(max_sum: u32) -> Vec<LorenzVector> {
    let mut out = Vec::new();
    let mut buf: Vec<u32> = Vec::new();
    for len in 1..=max_sum {
        extend(&mut out, &mut buf, len as usize, 1, max_sum);
    }
    out
}

fn extend(
    out: &mut Vec<LorenzVector>,
    buf: &mut Vec<u32>,
    len: usize,
    min_entry: u32,
    budget: u32,
) {
    if buf.len() == len {
        out.push(LorenzVector::new(buf.clone()).expect("generated entries are valid"));
        return;
    }
    let slots_left = (len - buf.len()) as u32;
    let mut v = min_entry;
    // each remaining slot needs at least v
    while v * slots_left <= budget {
        buf.push(v);
        extend(out, buf, len, v, budget - v);
        buf.pop();
        v += 1;
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidPair {
    pub lorenz: BraidWord,
    pub t: BraidWord,
}

/// Outcome of checking one vector across its three representations.
/// `invariants` holds the lorenz-braid, t-braid, and grid reports in that
/// order; `verified` means every comparable quantity agreed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceResult {
    pub vector: LorenzVector,
    pub tlink: TLinkParams,
    pub braids: BraidPair,
    pub invariants: Vec<InvariantReport>,
    pub verified: bool,
    pub mismatch_detail: Option<String>,
}

pub fn verify_instance(v: &LorenzVector, opts: &InvariantOptions) -> Result<InstanceResult> {
    let tlink = v.compress();
    let shuffle = v.shuffle();
    let lorenz = lorenz_word(&shuffle);
    let t = tlink_word(&tlink);
    let grid = GridDiagram::from_shuffle(&shuffle);

    let reports = vec![
        full_report(&ReportSource::LorenzBraid(lorenz.clone()), opts)?,
        full_report(&ReportSource::TBraid(t.clone()), opts)?,
        full_report(&ReportSource::Grid(grid), opts)?,
    ];
    let mismatch_detail = first_mismatch(&reports);
    Ok(InstanceResult {
        vector: v.clone(),
        tlink,
        braids: BraidPair { lorenz, t },
        verified: mismatch_detail.is_none(),
        mismatch_detail,
        invariants: reports,
    })
}

fn first_mismatch(reports: &[InvariantReport]) -> Option<String> {
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let (a, b) = (&reports[i], &reports[j]);
        if a.components != b.components {
            return Some(format!(
                "components: {}={} {}={}",
                a.source.label(),
                a.components,
                b.source.label(),
                b.components
            ));
        }
        if let (Some(x), Some(y)) = (a.euler_characteristic, b.euler_characteristic) {
            if x != y {
                return Some(format!(
                    "euler characteristic: {}={} {}={}",
                    a.source.label(),
                    x,
                    b.source.label(),
                    y
                ));
            }
        }
        if let (Some(x), Some(y)) = (a.genus, b.genus) {
            if x != y {
                return Some(format!(
                    "genus: {}={} {}={}",
                    a.source.label(),
                    x,
                    b.source.label(),
                    y
                ));
            }
        }
        if let (Some(x), Some(y)) = (&a.alexander, &b.alexander) {
            if !x.equal_up_to_units(y) {
                return Some(format!(
                    "alexander: {}={} {}={}",
                    a.source.label(),
                    x.display("t"),
                    b.source.label(),
                    y.display("t")
                ));
            }
        }
        if let (Bracket::Computed(x), Bracket::Computed(y)) = (&a.kauffman_f, &b.kauffman_f) {
            if x != y {
                return Some(format!(
                    "kauffman f: {}={} {}={}",
                    a.source.label(),
                    x.display("A"),
                    b.source.label(),
                    y.display("A")
                ));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BatterySummary {
    pub max_sum: u32,
    pub total: usize,
    pub verified: usize,
    pub results: Vec<InstanceResult>,
}

impl BatterySummary {
    pub fn all_verified(&self) -> bool {
        self.verified == self.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results.iter().filter(|r| !r.verified)
    }
}

/// Runs `verify_instance` over every vector with sum at most `max_sum`.
pub fn battery(max_sum: u32, opts: &InvariantOptions) -> Result<BatterySummary> {
    let vectors = enumerate_vectors(max_sum);
    let mut results = Vec::with_capacity(vectors.len());
    for v in &vectors {
        results.push(verify_instance(v, opts)?);
    }
    let total = results.len();
    let verified = results.iter().filter(|r| r.verified).count();
    Ok(BatterySummary {
        max_sum,
        total,
        verified,
        results,
    })
}

// ---- text rendering ----

pub fn bracket_text(b: &Bracket) -> String {
    match b {
        Bracket::Computed(p) => p.display("A"),
        Bracket::Skipped { limit: 0, .. } => "skipped".into(),
        Bracket::Skipped { crossings, limit } => {
            format!("skipped ({} crossings > limit {})", crossings, limit)
        }
    }
}

pub fn report_line(r: &InvariantReport) -> String {
    let mut line = format!("[{}] components={}", r.source.label(), r.components);
    if let Some(chi) = r.euler_characteristic {
        line.push_str(&format!(" chi={}", chi));
    }
    if let Some(g) = r.genus {
        line.push_str(&format!(" genus={}", g));
    }
    if let Some(a) = &r.alexander {
        line.push_str(&format!(" alexander={}", a.display("t")));
    }
    line.push_str(&format!(" f={}", bracket_text(&r.kauffman_f)));
    line
}

pub fn instance_text(r: &InstanceResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("vector: {}\n", r.vector));
    out.push_str(&format!("T-link: {}\n", r.tlink.spec_string()));
    for rep in &r.invariants {
        out.push_str(&report_line(rep));
        out.push('\n');
    }
    if r.verified {
        out.push_str("verified: true\n");
    } else {
        out.push_str("verified: false\n");
        if let Some(d) = &r.mismatch_detail {
            out.push_str(&format!("mismatch: {}\n", d));
        }
    }
    out
}

pub fn battery_text(s: &BatterySummary) -> String {
    let mut out = String::new();
    for r in &s.results {
        if r.verified {
            out.push_str(&format!("ok       {}\n", r.vector.spec_string()));
        } else {
            out.push_str(&format!(
                "MISMATCH {}: {}\n",
                r.vector.spec_string(),
                r.mismatch_detail.as_deref().unwrap_or("unknown")
            ));
        }
    }
    if s.all_verified() {
        out.push_str(&format!("all {} instances verified\n", s.total));
    } else {
        out.push_str(&format!(
            "{}/{} instances verified, {} mismatched\n",
            s.verified,
            s.total,
            s.total - s.verified
        ));
    }
    out
}
