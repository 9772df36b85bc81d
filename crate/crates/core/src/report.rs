//! Model reports: the full analysis pipeline rendered as text or as
//! deterministic JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::exactla::Matrix;
use crate::homogeneous::{Classification, HomogeneousModel, ModelAnalysis, Verdict, ZeroSet};
use crate::scalar::{format_rational, Rational, Scalar};

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Evaluate the class flags and harmonicity at this parameter.
    pub at: Option<Rational>,
    pub include_negative_roots: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSetReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonpositive_roots: Option<Vec<String>>,
    pub roots: Vec<String>,
    pub verdict: String,
}

impl ZeroSetReport {
    fn new(z: &ZeroSet, include_negative: bool) -> Self {
        let fmt = |v: &[crate::scalar::Root]| v.iter().map(|r| format_rational(&r.value)).collect::<Vec<_>>();
        Self {
            nonpositive_roots: include_negative.then(|| fmt(&z.nonpositive_roots)),
            roots: fmt(&z.roots),
            verdict: z.verdict.as_str().to_string(),
        }
    }

    fn describe(&self) -> String {
        let mut out = self.verdict.clone();
        if !self.roots.is_empty() {
            let _ = write!(out, " {{{}}}", self.roots.join(", "));
        }
        if let Some(neg) = self.nonpositive_roots.as_ref().filter(|v| !v.is_empty()) {
            let _ = write!(out, " (t <= 0: {})", neg.join(", "));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    /// Scalar coefficients and vector parts of the components.
    pub coefficients: BTreeMap<String, String>,
    pub flags: Vec<String>,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub kappa: Option<String>,
    /// Whether `Δφ + ½ c_ξ·φ = −½ L·φ` holds identically.
    pub matches_intrinsic_l: bool,
    pub residual: ZeroSetReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtReport {
    pub flags: Vec<String>,
    pub harmonic: bool,
    pub t: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<AtReport>,
    pub canonical_parameters: ZeroSetReport,
    pub classification: ClassificationReport,
    pub cross_check: CrossCheckReport,
    /// Present for n = 6.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<String>>,
    pub harmonicity: ZeroSetReport,
    pub model: String,
    pub n: usize,
    /// Row-major; column `i` is `S(X_i)`.
    pub s: Vec<Vec<String>>,
    pub substitution: String,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn vector_string(v: &[Scalar]) -> String {
    format!("[{}]", strings(v).join(", "))
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn classification_report(c: &Classification) -> ClassificationReport {
    let mut coefficients = BTreeMap::new();
    let group = match c {
        Classification::SU3(r) => {
            coefficients.insert("W1+".into(), r.lambda_w1_plus.to_string());
            coefficients.insert("W1-".into(), r.mu_w1_minus.to_string());
            coefficients.insert("W5".into(), vector_string(&r.w5));
            "SU(3)"
        }
        Classification::G2(r) => {
            coefficients.insert("W1".into(), r.lambda_w1.to_string());
            coefficients.insert("W4".into(), vector_string(&r.w4_vector));
            "G2"
        }
    };
    ClassificationReport { coefficients, flags: c.flags(), group: group.into() }
}

pub fn build_report(model: HomogeneousModel, opts: &ReportOptions) -> Result<Report> {
    let a = ModelAnalysis::new(model)?;
    let sub = a.model().substitution;
    let n = a.model().n;
    let (s, eta) = a.extract_s_eta()?;
    let class = a.classify()?;
    let canonical = a.canonical_parameters()?;
    let harm = a.harmonicity()?;
    let lap = a.laplacian_cross_check()?;

    let at = match &opts.at {
        None => None,
        Some(t0) => {
            let mut harmonic = true;
            for x in &harm.residual {
                harmonic &= x.vanishes_at(sub, t0)?;
            }
            Some(AtReport { flags: class.flags_at(sub, t0)?, harmonic, t: format_rational(t0) })
        }
    };
    let neg = opts.include_negative_roots;
    Ok(Report {
        at,
        canonical_parameters: ZeroSetReport::new(&canonical, neg),
        classification: classification_report(&class),
        cross_check: CrossCheckReport {
            kappa: lap.kappa.as_ref().map(ToString::to_string),
            matches_intrinsic_l: lap.residual == lap.half_l_phi.scale(&Scalar::from_int(-1)),
            residual: ZeroSetReport::new(&lap.zero_set, neg),
        },
        eta: (n == 6).then(|| strings(&eta)),
        harmonicity: ZeroSetReport::new(&harm.zero_set, neg),
        model: a.model().name.clone(),
        n,
        s: matrix_strings(&s),
        substitution: sub.as_str().to_string(),
    })
}

impl Report {
    /// Pretty JSON with keys in sorted order and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "model: {} (n = {}, {})", self.model, self.n, self.substitution);
        let _ = writeln!(out, "S:");
        for row in &self.s {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
        if let Some(eta) = &self.eta {
            let _ = writeln!(out, "eta: [{}]", eta.join(", "));
        }
        let flags = if self.classification.flags.is_empty() {
            "torsion-free".to_string()
        } else {
            self.classification.flags.join(" ⊕ ")
        };
        let _ = writeln!(out, "class: {} ({})", flags, self.classification.group);
        for (k, v) in &self.classification.coefficients {
            let _ = writeln!(out, "  {k}: {v}");
        }
        let _ = writeln!(out, "canonical: {}", self.canonical_parameters.describe());
        let _ = writeln!(out, "harmonic: {}", self.harmonicity.describe());
        let status = if self.cross_check.residual.verdict == Verdict::AllT.as_str() {
            "vanishes".to_string()
        } else {
            self.cross_check.residual.describe()
        };
        let kappa = self.cross_check.kappa.as_deref().unwrap_or("n/a");
        let _ = writeln!(
            out,
            "cross-check: residual {status}, equals -1/2 L.phi: {}, kappa = {kappa}",
            self.cross_check.matches_intrinsic_l
        );
        if let Some(at) = &self.at {
            let flags = if at.flags.is_empty() { "torsion-free".to_string() } else { at.flags.join(" ⊕ ") };
            let _ = writeln!(out, "at t = {}: class {}, harmonic: {}", at.t, flags, at.harmonic);
        }
        out
    }
}
