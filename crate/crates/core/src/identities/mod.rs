//! Registry of exact identity checks.
//!
//! Each check sweeps an explicit parameter domain and records every point.
//! Identities polynomial in `s` are sampled at more points than their
//! degree; q-identities run in exact `QRat` arithmetic and never sample `q`.
//! Printed values that disagree with the computed ones become [`Flag`]s,
//! not failures.

mod basic;
mod chebyshev;
mod qanalog;
mod report;
mod tangent;
mod util;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use report::{Ctx, Flag, Mode, Outcome, PairValue, Params, PointResult, VerificationReport};

use crate::scalar::{int, Scalar};
use util::Run;

/// Parameter bounds for a sweep. Each check reads the bounds it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub max_n: usize,
    pub max_l: usize,
    pub max_m: usize,
    pub max_j: usize,
    pub order: usize,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges { max_n: 8, max_l: 8, max_m: 5, max_j: 4, order: 16 }
    }
}

impl Ranges {
    /// Safety caps.
    pub const CAP: Ranges = Ranges { max_n: 12, max_l: 12, max_m: 8, max_j: 6, order: 24 };

    pub fn acceptance() -> Self {
        Ranges { max_n: 6, max_l: 6, max_m: 4, max_j: 3, order: 16 }
    }

    pub fn validate(&self) -> Result<(), IdentityError> {
        let c = Self::CAP;
        let pairs = [
            ("n", self.max_n, c.max_n),
            ("l", self.max_l, c.max_l),
            ("m", self.max_m, c.max_m),
            ("j", self.max_j, c.max_j),
            ("order", self.order, c.order),
        ];
        for (name, value, cap) in pairs {
            if value > cap {
                return Err(IdentityError::RangeTooLarge { name, value, cap });
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!(
            "n<={}, l<={}, m<={}, j<={}, order={}",
            self.max_n, self.max_l, self.max_m, self.max_j, self.order
        )
    }
}

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("range {name}={value} exceeds the cap {cap}")]
    RangeTooLarge { name: &'static str, value: usize, cap: usize },
    #[error("{id}: {message}")]
    Internal { id: String, message: String },
}

/// A registered identity.
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub mode: Mode,
    run: fn(&Ranges, &mut Ctx) -> Run,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck").field("id", &self.id).field("mode", &self.mode).finish()
    }
}

macro_rules! registry {
    ($($id:literal, $mode:path, $run:path, $desc:literal;)*) => {
        &[$(IdentityCheck { id: $id, description: $desc, mode: $mode, run: $run }),*]
    };
}

static REGISTRY: &[IdentityCheck] = registry! {
    "eq-0.2", Mode::Exact, basic::eq_0_2, "Lucas and Fibonacci closed forms equal their recurrences";
    "eq-0.3", Mode::Exact, basic::eq_0_3, "Lucas expansion of x^n";
    "eq-0.4", Mode::Exact, basic::eq_0_4, "Lucas functional moments are central binomials";
    "eq-0.6", Mode::Exact, basic::eq_0_6, "Fibonacci expansion of x^n";
    "eq-0.7", Mode::Exact, basic::eq_0_7, "Fibonacci functional moments are Catalan numbers";
    "eq-0.8", Mode::Exact, basic::eq_0_8, "Chebyshev T moments";
    "eq-0.9", Mode::Exact, basic::eq_0_9, "Chebyshev U moments";
    "eq-1.1", Mode::Exact, basic::eq_1_1, "normalized super Catalan numbers";
    "eq-1.3", Mode::RationalSampleS, basic::eq_1_3, "l_n(x,m,s) closed form equals its recurrence";
    "eq-1.5", Mode::Exact, basic::eq_1_5, "l_n(1,0,-1) has period 6";
    "eq-1.6", Mode::Exact, basic::eq_1_6, "l_n(1,1,-1) has period 6";
    "eq-1.7", Mode::Exact, basic::eq_1_7, "l_n(1,2,-1) by residue class";
    "eq-1.8", Mode::Exact, basic::eq_1_8, "l_n(1,m,-1/4) as a product";
    "eq-1.10", Mode::RationalSampleS, basic::eq_1_10, "expansion of x^n in l_k(x,m,s)";
    "eq-1.11", Mode::RationalSampleS, basic::eq_1_11, "coefficients a(n,k,m)";
    "eq-1.11-moments", Mode::RationalSampleS, basic::eq_1_11_moments, "moments of the l_n(x,m,s) functional";
    "eq-1.13", Mode::RationalSampleS, basic::eq_1_13, "weighted ballot table expansion";
    "eq-1.14", Mode::RationalSampleS, basic::eq_1_14, "ballot numbers at the super Catalan weights";
    "eq-1.15", Mode::Exact, basic::eq_1_15, "ballot table equals brute-force path enumeration";
    "eq-1.16", Mode::RationalSampleS, basic::eq_1_16, "path convolution for generic weights";
    "eq-1.17", Mode::Exact, basic::eq_1_17, "super Catalan convolution";
    "eq-1.18", Mode::Exact, basic::eq_1_18, "sum of C(2n,n-k)C(2l,l-k) is C(2n+2l,n+l)";
    "eq-1.19", Mode::Exact, basic::eq_1_19, "weighted central binomial convolution";
    "eq-1.20", Mode::Exact, basic::eq_1_20, "m = 1 convolution with (2k+1)^2 weights";
    "eq-1.21", Mode::Exact, basic::eq_1_21, "alternating sum with super Catalan factors";
    "eq-1.22", Mode::Exact, basic::eq_1_22, "alternating sum";
    "eq-1.23", Mode::Exact, basic::eq_1_23, "alternating sum";
    "eq-1.24", Mode::Exact, basic::eq_1_24, "alternating sum";
    "eq-1.25", Mode::Exact, basic::eq_1_25, "sum of (-1)^k C(n,k)(m+2k)(m+k-1)!/(n+m+k)! is [n=0]";
    "eq-1.26", Mode::Exact, basic::eq_1_26, "l_n(0,m,s) at the odd product";
    "eq-1.27", Mode::Exact, basic::eq_1_27, "sum equals 2^n/((m+1)(m+3)...(m+2n-1))";
    "eq-1.28", Mode::SeriesToOrder, basic::eq_1_28, "generating function of l_n(x,m,s)";
    "eq-2.1", Mode::SymbolicQ, qanalog::eq_2_1, "l_n(x,m,s,q) closed form equals its recurrence";
    "eq-2.3", Mode::SymbolicQ, qanalog::eq_2_3, "q-operator recurrence";
    "eq-2.4", Mode::SymbolicQ, qanalog::eq_2_4, "expansion of x^n in l_k(x,m,s,q)";
    "eq-2.5", Mode::SymbolicQ, qanalog::eq_2_5, "q-ballot numbers: operator, closed form and recurrence";
    "eq-2.6", Mode::SymbolicQ, qanalog::eq_2_6, "q-moments q^{mn} sigma_q(m,n)";
    "eq-2.7", Mode::SymbolicQ, qanalog::eq_2_7, "q-moments of the l_n(x,m,s,q) functional";
    "eq-2.8", Mode::SymbolicQ, qanalog::eq_2_8, "ballot-difference form";
    "eq-2.9", Mode::SymbolicQ, qanalog::eq_2_9, "h_n(x,s,q) inverse and moments";
    "eq-2.10", Mode::SymbolicQ, qanalog::eq_2_10, "four-term recurrence";
    "rem-R", Mode::SymbolicQ, qanalog::rem_r_big, "R_n(x,m,q) dual, inverse and moments";
    "rem-r", Mode::SymbolicQ, qanalog::rem_r_small, "r_n(x,q) product form and moments";
    "eq-2.11", Mode::SymbolicQ, qanalog::eq_2_11, "l_{3n}(1,1,-1,q) is (-1)^n q^{n(3n-1)/2}";
    "eq-2.12", Mode::SymbolicQ, qanalog::eq_2_12, "special values of l_n(1,1,-1,q)";
    "eq-2.13", Mode::SymbolicQ, qanalog::eq_2_13, "special values of l_n(1,2,-1,q)";
    "eq-2.14", Mode::SymbolicQ, qanalog::eq_2_14, "l_n(1,2,-1,q) list and recurrence";
    "eq-3.2", Mode::SymbolicQ, chebyshev::eq_3_2, "v_n(x,m,s,q) recurrence";
    "eq-3.3", Mode::SymbolicQ, chebyshev::eq_3_3, "expansion of x^n in v_k(x,m,s,q)";
    "eq-3.4", Mode::SymbolicQ, chebyshev::eq_3_4, "moments of the v_n(x,m,s,q) functional";
    "eq-3.5", Mode::SymbolicQ, chebyshev::eq_3_5, "H_n(x,s,q) dual and moments";
    "rem-q2-moments", Mode::SymbolicQ, chebyshev::rem_q2_moments, "moments in base q^2";
    "b-table-q", Mode::SymbolicQ, chebyshev::b_table_q, "mu-weighted ballot table against the displayed closed form";
    "eq-3.6", Mode::SymbolicQ, chebyshev::eq_3_6, "q-analogue of the central binomial convolution";
    "eq-3.7", Mode::SymbolicQ, chebyshev::eq_3_7, "alternating q-sum is [n=0]";
    "eq-3.8", Mode::SymbolicQ, chebyshev::eq_3_8, "alternating q-sum";
    "eq-3.9", Mode::SymbolicQ, chebyshev::eq_3_9, "alternating q-sum with super Catalan factors";
    "eq-3.10", Mode::SymbolicQ, chebyshev::eq_3_10, "v_n(0,m,s,q) at the odd product";
    "eq-3.11", Mode::SymbolicQ, chebyshev::eq_3_11, "(-1;q)_n/([m+1][m+3]...[m+2n-1])";
    "eq-3.12", Mode::SymbolicQ, chebyshev::eq_3_12, "F_{n,k}(a) closed form at a = q^m";
    "eq-3.13", Mode::SymbolicQ, chebyshev::eq_3_13, "F_{n,k}(a) recursion";
    "eq-4.1", Mode::RationalSampleS, tangent::eq_4_1, "v_n(x,m,s) = l_n(x,m,-s/4)";
    "eq-4.3", Mode::RationalSampleS, tangent::eq_4_3, "odd expansion with tangent coefficients";
    "eq-4.3-example", Mode::RationalSampleS, tangent::eq_4_3_example, "v_5(1,0,s) = 5/2 v_4 - 5/2 v_2 + 1";
    "eq-4.4", Mode::Exact, tangent::eq_4_4, "tangent numbers";
    "eq-4.5", Mode::RationalSampleS, tangent::eq_4_5, "odd expansion at m = 0";
    "eq-4.8", Mode::SeriesToOrder, tangent::eq_4_8, "odd part is tanh(z/2) times even part";
    "eq-4.10", Mode::SeriesToOrder, tangent::eq_4_10, "V_m(z) - V_m(-z) against V_m(z) + V_m(-z)";
    "eq-4.11", Mode::SeriesToOrder, tangent::eq_4_11, "V_m(-z) = e^{-z} V_m(z)";
    "eq-4.12", Mode::RationalSampleS, tangent::eq_4_12, "finite-sum form of V_m(-z) = e^{-z} V_m(z)";
    "eq-4.13", Mode::Exact, tangent::eq_4_13, "s-free finite-sum form";
    "eq-4.14", Mode::Exact, tangent::eq_4_14, "m = 1 coefficients in Genocchi form";
    "eq-4.14-example", Mode::RationalSampleS, tangent::eq_4_14_example, "v_5(1,1,s) = 3 v_4 - 5 v_2 + 3";
    "eq-4.15", Mode::Exact, tangent::eq_4_15, "Genocchi numbers";
    "eq-4.16", Mode::SeriesToOrder, tangent::eq_4_16, "closed form of V_m(z) at s = 0";
    "eq-4.17", Mode::SymbolicQ, chebyshev::eq_4_17, "alternative v_n(x,m,s,q) coefficients";
    "eq-4.18", Mode::SymbolicQ, chebyshev::eq_4_18, "v_n(1,m,1/q,q) as a product";
    "eq-4.19", Mode::SymbolicQ, tangent::eq_4_19, "odd q-expansion with q-tangent numbers";
    "eq-4.20", Mode::SymbolicQ, tangent::eq_4_20, "q-tangent numbers";
    "eq-4.22", Mode::SeriesToOrder, tangent::eq_4_22, "q-odd part against the q-tanh series";
    "eq-4.23", Mode::SeriesToOrder, tangent::eq_4_23, "e_q(z)/e_q(-z) V_m(-z,q) = V_m(z,q)";
    "eq-4.24", Mode::SymbolicQ, tangent::eq_4_24, "finite-sum form of the q-functional equation";
    "eq-4.25", Mode::SymbolicQ, tangent::eq_4_25, "s-free q finite-sum form";
    "eq-4.27", Mode::SeriesToOrder, tangent::eq_4_27, "closed form of V_m(z,q) at s = 0";
    "eq-4.28", Mode::SymbolicQ, tangent::eq_4_28, "odd expansion of H_n(x,s,q)";
    "rem-H-genfun", Mode::SeriesToOrder, tangent::rem_h_genfun, "generating function of H_n(x,s,q)";
};

/// Ids that name the same check.
const ALIASES: &[(&str, &str)] = &[("eq-4.7", "eq-4.3"), ("eq-4.6", "eq-4.5")];

/// Classical/q pairs compared at `q = 1` on shared parameters.
pub const PAIRS: &[(&str, &str)] = &[
    ("eq-1.18", "eq-3.6"),
    ("eq-1.23", "eq-3.7"),
    ("eq-1.24", "eq-3.8"),
    ("eq-1.21", "eq-3.9"),
    ("eq-1.27", "eq-3.11"),
    ("eq-4.13", "eq-4.25"),
];

/// Checks that must agree on overall outcome.
pub const GROUPS: &[&[&str]] = &[&["eq-4.11", "eq-4.12", "eq-4.13"]];

pub fn registry() -> &'static [IdentityCheck] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static IdentityCheck> {
    let id = ALIASES.iter().find(|(a, _)| *a == id).map_or(id, |(_, t)| *t);
    REGISTRY.iter().find(|c| c.id == id)
}

/// Run one identity over `ranges`.
pub fn check(id: &str, ranges: &Ranges) -> Result<VerificationReport, IdentityError> {
    ranges.validate()?;
    let entry = lookup(id).ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
    run_entry(entry, ranges)
}

fn run_entry(entry: &IdentityCheck, ranges: &Ranges) -> Result<VerificationReport, IdentityError> {
    let start = Instant::now();
    let mut cx = Ctx::new(entry.id);
    (entry.run)(ranges, &mut cx)
        .map_err(|e| IdentityError::Internal { id: entry.id.to_string(), message: e.to_string() })?;
    Ok(VerificationReport {
        id: entry.id.to_string(),
        description: entry.description.to_string(),
        mode: entry.mode,
        ranges: ranges.describe(),
        points: cx.points,
        flags: cx.flags,
        notes: cx.notes,
        elapsed: start.elapsed(),
    })
}

/// Outcome of a cross-report consistency check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheck {
    pub ids: Vec<String>,
    pub compared: usize,
    pub ok: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub ranges: Ranges,
    pub reports: Vec<VerificationReport>,
    pub pairs: Vec<CrossCheck>,
    pub groups: Vec<CrossCheck>,
}

impl SuiteReport {
    pub fn flags(&self) -> Vec<&Flag> {
        self.reports.iter().flat_map(|r| &r.flags).collect()
    }

    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.ok()).count()
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.reports.iter().filter(|r| !r.ok()).map(|r| r.id.as_str()).collect()
    }

    /// All points pass and every cross check holds.
    pub fn ok(&self) -> bool {
        self.reports.iter().all(VerificationReport::ok)
            && self.pairs.iter().all(|c| c.ok)
            && self.groups.iter().all(|c| c.ok)
    }

    pub fn without_timing(&self) -> Self {
        SuiteReport { reports: self.reports.iter().map(VerificationReport::without_timing).collect(), ..self.clone() }
    }
}

/// Run `ids` (all registered checks when `None`) on `jobs` worker threads.
/// Reports come back in registry order regardless of `jobs`.
pub fn check_all(ranges: &Ranges, ids: Option<&[&str]>, jobs: usize) -> Result<SuiteReport, IdentityError> {
    ranges.validate()?;
    let entries: Vec<&IdentityCheck> = match ids {
        None => REGISTRY.iter().collect(),
        Some(ids) => ids
            .iter()
            .map(|id| lookup(id).ok_or_else(|| IdentityError::UnknownId(id.to_string())))
            .collect::<Result<_, _>>()?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| IdentityError::Internal { id: "suite".into(), message: e.to_string() })?;
    let reports = pool.install(|| {
        entries.par_iter().map(|e| run_entry(e, ranges)).collect::<Result<Vec<_>, _>>()
    })?;
    let by_id: BTreeMap<&str, &VerificationReport> = reports.iter().map(|r| (r.id.as_str(), r)).collect();
    let pairs = PAIRS
        .iter()
        .filter_map(|(c, q)| Some(pair_check(by_id.get(c)?, by_id.get(q)?)))
        .collect();
    let groups = GROUPS
        .iter()
        .filter_map(|ids| {
            let members: Option<Vec<&VerificationReport>> = ids.iter().map(|id| by_id.get(id).copied()).collect();
            members.map(|m| group_check(&m))
        })
        .collect();
    Ok(SuiteReport { ranges: *ranges, reports, pairs, groups })
}

/// Classical values against q-values at `q = 1`, matched on identical params.
pub fn pair_check(classical: &VerificationReport, q: &VerificationReport) -> CrossCheck {
    let values: BTreeMap<&Params, _> = classical
        .points
        .iter()
        .filter_map(|p| match &p.value {
            Some(PairValue::Classical(v)) => Some((&p.params, v)),
            _ => None,
        })
        .collect();
    let mut compared = 0;
    let mut detail = None;
    for p in &q.points {
        let (Some(PairValue::Q(v)), Some(c)) = (&p.value, values.get(&p.params)) else { continue };
        compared += 1;
        let at_one = v.eval(&int(1));
        if detail.is_none() && at_one.as_ref().ok() != Some(*c) {
            let shown = at_one.map_or_else(|e| e.to_string(), |x| x.render());
            detail = Some(format!("{}: q=1 gives {shown}, classical {}", p.params, c.render()));
        }
    }
    if compared == 0 {
        detail = Some("no shared parameter points".into());
    }
    CrossCheck { ids: vec![classical.id.clone(), q.id.clone()], compared, ok: detail.is_none(), detail }
}

fn group_check(members: &[&VerificationReport]) -> CrossCheck {
    let first = members[0].ok();
    let ok = members.iter().all(|r| r.ok() == first);
    let detail = (!ok).then(|| {
        members.iter().map(|r| format!("{}={}", r.id, if r.ok() { "pass" } else { "fail" })).collect::<Vec<_>>().join(", ")
    });
    CrossCheck { ids: members.iter().map(|r| r.id.clone()).collect(), compared: members.len(), ok, detail }
}
