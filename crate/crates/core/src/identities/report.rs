use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::algebra::Poly;
use crate::scalar::{QRat, Rational, Scalar};

/// Parameter tuple of one checked point, in sweep order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Params {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `params![n = 1, m = 2]`.
#[macro_export]
macro_rules! params {
    ($($k:ident = $v:expr),* $(,)?) => {
        $crate::identities::Params(vec![$((stringify!($k), $v as i64)),*])
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact arithmetic in `Q(q)`; `q` is never sampled.
    SymbolicQ,
    /// Polynomial in `s`, checked at more sample points than its degree.
    RationalSampleS,
    /// Exact over the rationals with no free parameter.
    Exact,
    /// Coefficientwise up to the configured series order.
    SeriesToOrder,
}

/// The value of one side of a point, kept for classical/q pairing.
#[derive(Debug, Clone, PartialEq)]
pub enum PairValue {
    Classical(Rational),
    Q(QRat),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointResult {
    pub params: Params,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip)]
    pub value: Option<PairValue>,
}

/// A printed value that disagrees with the computed one. Flags never count
/// as failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Flag {
    pub id: String,
    pub params: Params,
    pub message: String,
    pub printed: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub description: String,
    pub mode: Mode,
    pub ranges: String,
    pub points: Vec<PointResult>,
    pub flags: Vec<Flag>,
    pub notes: Vec<String>,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.points.iter().filter(|p| p.outcome == Outcome::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.points.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    /// Failing point with the smallest parameter tuple.
    pub fn first_failure(&self) -> Option<&PointResult> {
        self.points
            .iter()
            .filter(|p| p.outcome != Outcome::Pass)
            .min_by(|a, b| a.params.cmp(&b.params))
    }

    /// Same report with the wall time zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed: Duration::ZERO, ..self.clone() }
    }
}

/// Accumulates the points of one identity check.
#[derive(Debug, Default)]
pub struct Ctx {
    pub(crate) id: String,
    pub(crate) points: Vec<PointResult>,
    pub(crate) flags: Vec<Flag>,
    pub(crate) notes: Vec<String>,
}

impl Ctx {
    pub fn new(id: &str) -> Self {
        Ctx { id: id.to_string(), ..Default::default() }
    }

    fn push<S: Scalar>(&mut self, params: Params, lhs: &S, rhs: &S, value: Option<PairValue>) -> bool {
        let outcome = if lhs == rhs {
            Outcome::Pass
        } else {
            Outcome::Fail { lhs: lhs.render(), rhs: rhs.render() }
        };
        let ok = outcome == Outcome::Pass;
        self.points.push(PointResult { params, outcome, value });
        ok
    }

    /// Compare two scalars.
    pub fn eq<S: Scalar>(&mut self, params: Params, lhs: S, rhs: S) -> bool {
        self.push(params, &lhs, &rhs, None)
    }

    /// Compare two polynomials coefficientwise.
    pub fn eq_poly<S: Scalar>(&mut self, params: Params, lhs: &Poly<S>, rhs: &Poly<S>) -> bool {
        if lhs == rhs {
            return self.truth(params, true, "", "");
        }
        self.truth(params, false, lhs.to_string(), rhs.to_string())
    }

    /// Compare two rationals and keep `lhs` for pairing.
    pub fn eq_classical(&mut self, params: Params, lhs: Rational, rhs: Rational) -> bool {
        let v = Some(PairValue::Classical(lhs.clone()));
        self.push(params, &lhs, &rhs, v)
    }

    /// Compare two q-values and keep `value` for pairing.
    pub fn eq_q(&mut self, params: Params, lhs: QRat, rhs: QRat, value: QRat) -> bool {
        self.push(params, &lhs, &rhs, Some(PairValue::Q(value)))
    }

    /// Record a boolean outcome with a textual witness.
    pub fn truth(&mut self, params: Params, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> bool {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail { lhs: lhs.into(), rhs: rhs.into() } };
        self.points.push(PointResult { params, outcome, value: None });
        ok
    }

    pub fn flag(&mut self, params: Params, message: impl Into<String>, printed: impl Into<String>, computed: impl Into<String>) {
        self.flags.push(Flag {
            id: self.id.clone(),
            params,
            message: message.into(),
            printed: printed.into(),
            computed: computed.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}
