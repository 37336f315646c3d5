//! Growth classification: regime selection from Hilbert function data,
//! base-locus dimension predictions, point-count bounds, and the diagnostic
//! colon/quotient table for a general linear form.

use crate::binom::{
    green_bound, growth_gap, is_o_sequence, macaulay_bound, macaulay_expand, mg_dimension,
    HVector,
};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::graded::{
    hilbert_polynomial_fit, BaseLocusProfile, BaseLocusStatus, GradedSpan, PolyFit,
};
use crate::matrix::IntEchelon;
use crate::mono::{binom_big, to_u64, MonomialTable};
use crate::rat::{random_rat, Rat};
use crate::rng::Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Maximal,
    /// Almost maximal growth with h(n) >= n+1.
    AlmostMaximalHigh,
    /// h(n) = k <= n and h(n+1) = k-1.
    TypeKKminus1,
    SubmaximalOther,
}

/// Predicted base-locus possibility: either empty or a specific dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedDim {
    Empty,
    Dim(u64),
}

impl Serialize for PredictedDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PredictedDim::Empty => s.serialize_str("empty"),
            PredictedDim::Dim(d) => s.serialize_u64(*d),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedBound {
    pub name: String,
    pub formula: String,
    pub value: u64,
    pub hypothesis: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub n: usize,
    pub h_n: u64,
    pub h_n1: u64,
    pub gap: u64,
    pub regime: Regime,
    pub mg_dim: u64,
    pub predicted_dims: Vec<PredictedDim>,
    #[serde(serialize_with = "crate::rat::serde_rat_opt_vec::serialize")]
    pub persistence_poly: Option<Vec<Rat>>,
    pub bounds: Vec<NamedBound>,
}

fn binom_u64(n: u64, k: u64) -> u64 {
    to_u64(&binom_big(n, k), "bound value")
}

/// Point-count bounds for the k <= n regime with degree reference d (the
/// degree of the reduced one-dimensional part when it exists).
pub fn bounds_report(k: u64, n: u64, d: Option<u64>) -> Result<Vec<NamedBound>> {
    if k < 2 || n < k {
        return Err(Error::invalid(format!(
            "bounds need 2 <= k <= n, got k = {}, n = {}",
            k, n
        )));
    }
    let mut out = Vec::new();
    out.push(NamedBound {
        name: "curve_degree_k_point_count".into(),
        formula: "C(k,2) + k(n-k+3) - 1".into(),
        value: binom_u64(k, 2) + k * (n - k + 3) - 1,
        hypothesis: "a minimal generator in degree n+1 forces a reduced curve of degree k through at least this many points".into(),
    });
    out.push(NamedBound {
        name: "curve_degree_k_minus_1_point_count".into(),
        formula: "C(k-1,2) + (k-1)(n-k+4)".into(),
        value: binom_u64(k - 1, 2) + (k - 1) * (n - k + 4),
        hypothesis: "a zero-dimensional base locus of degree k-1 in degree n+1 forces a curve of degree k-1 through at least this many points".into(),
    });
    if let Some(d) = d {
        if d < 1 || d > k - 1 {
            return Err(Error::invalid(format!(
                "degree parameter must satisfy 1 <= d <= k-1, got d = {}",
                d
            )));
        }
        if k - 1 - d <= d + 1 {
            out.push(NamedBound {
                name: format!("residual_curve_degree_{}_point_count_small_gap", d),
                formula: "2*C(d,2) + 5d".into(),
                value: 2 * binom_u64(d, 2) + 5 * d,
                hypothesis: format!(
                    "reduced one-dimensional part of degree d = {} with k-1-d <= d+1",
                    d
                ),
            });
        }
        if d + 1 <= k - 1 - d {
            out.push(NamedBound {
                name: format!("residual_curve_degree_{}_point_count_large_gap", d),
                formula: "d^2 + d(n-k+4)".into(),
                value: d * d + d * (n - k + 4),
                hypothesis: format!(
                    "reduced one-dimensional part of degree d = {} with d+1 <= k-1-d",
                    d
                ),
            });
        }
    }
    out.push(NamedBound {
        name: "plane_point_count".into(),
        formula: "C(k+1,2) + (k+1)(n-k+2) - 3".into(),
        value: binom_u64(k + 1, 2) + (k + 1) * (n - k + 2) - 3,
        hypothesis: "base point free degree-n component: this many points lie on the distinguished plane".into(),
    });
    Ok(out)
}

/// Classify the growth of an O-sequence from degree n to n+1 and attach the
/// matching base-locus predictions and bounds.
pub fn classify(h: &HVector, n: usize) -> Result<GrowthReport> {
    let check = is_o_sequence(h);
    if !check.is_o_sequence {
        return Err(Error::invalid(format!(
            "not an O-sequence (first failure at index {:?})",
            check.first_failure
        )));
    }
    if n == 0 || h.get(n) == 0 {
        return Err(Error::invalid(format!(
            "classification needs h({}) >= 1 in a positive degree",
            n
        )));
    }
    let k = h.get(n);
    let h_n1 = h.get(n + 1);
    let gap = growth_gap(h, n)?;
    let mg = mg_dimension(k, n as u64)?;
    let threshold = binom_u64(n as u64 + 2, 2);
    let (regime, predicted) = if gap == 0 {
        (Regime::Maximal, vec![PredictedDim::Dim(mg)])
    } else if gap == 1 && k >= n as u64 + 1 {
        // Here the leading binomial has top >= n+1, so mg >= 1 and both
        // mg-1 and mg are admissible dimensions.
        assert!(mg >= 1, "h(n) >= n+1 forces MG-dimension >= 1");
        (
            Regime::AlmostMaximalHigh,
            vec![PredictedDim::Dim(mg - 1), PredictedDim::Dim(mg)],
        )
    } else if gap == 1 && k <= n as u64 {
        (
            Regime::TypeKKminus1,
            vec![PredictedDim::Empty, PredictedDim::Dim(0)],
        )
    } else {
        (Regime::SubmaximalOther, vec![])
    };
    let _ = threshold;
    let persistence_poly = if regime == Regime::Maximal {
        let vals = crate::binom::gotzmann_values(k, n as u64, mg + 4)?;
        let pts: Vec<(i64, u64)> = vals
            .iter()
            .enumerate()
            .map(|(d, &v)| (n as i64 + d as i64, v))
            .collect();
        match hilbert_polynomial_fit(&pts)? {
            PolyFit::Polynomial { coeffs, .. } => Some(coeffs),
            PolyFit::Undetermined => None,
        }
    } else {
        None
    };
    let bounds = if regime == Regime::TypeKKminus1 && k >= 2 {
        let mut all = bounds_report(k, n as u64, None)?;
        for d in 1..k {
            for b in bounds_report(k, n as u64, Some(d))? {
                if b.name.starts_with("residual_curve") {
                    all.push(b);
                }
            }
        }
        all
    } else {
        vec![]
    };
    Ok(GrowthReport {
        n,
        h_n: k,
        h_n1,
        gap,
        regime,
        mg_dim: mg,
        predicted_dims: predicted,
        persistence_poly,
        bounds,
    })
}

/// The (p, s) pattern of restriction dimensions against the q/m split of the
/// expansion of h(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RestrictionPattern {
    BothQMinus1,
    QThenQMinus1,
    BothQ,
    OutOfRange,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColonTable {
    pub n: usize,
    pub degrees: Vec<usize>,
    /// dim [S/J]_i
    pub quotient: Vec<u64>,
    /// dim [S/(J:l)]_{i-1}, derived from exactness.
    pub colon_shifted: Vec<u64>,
    /// dim [S/(J,l)]_i, measured directly.
    pub restriction: Vec<u64>,
    /// Green's bound honored on the restriction row at every degree.
    pub green_ok: bool,
    /// Macaulay growth honored along each row.
    pub macaulay_ok: bool,
    /// q and m from the expansion of h(n) (q leading slope-1 terms, m ones).
    pub q: Option<u64>,
    pub m: Option<u64>,
    pub pattern: Option<RestrictionPattern>,
}

/// Diagnostic table over degrees 0..=n+1 for a seeded general linear form:
/// quotient, colon (by exactness) and restriction rows, with the growth
/// bounds checked along each row.
pub fn colon_table(span: &GradedSpan, n: usize, seed: u64) -> Result<ColonTable> {
    let r = span.num_vars();
    if span.d_max() < n + 1 {
        return Err(Error::WindowTooSmall {
            degree: n + 1,
            lo: 0,
            hi: span.d_max(),
        });
    }
    let mut rng = Rng::new(seed);
    let ell: Vec<Rat> = (0..r).map(|_| random_rat(&mut rng)).collect();
    let degrees: Vec<usize> = (0..=n + 1).collect();
    let mut quotient = Vec::new();
    let mut restriction = Vec::new();
    for &i in &degrees {
        quotient.push(span.hilbert_function(i)?);
        // dim [S/(J,l)]_i: quotient by span[i] + l * S_{i-1}.
        let table = MonomialTable::new(r, i);
        let mut ech = IntEchelon::new(table.len());
        for f in span.component(i)? {
            ech.insert_rat(&f.to_vector(&table));
        }
        if i >= 1 {
            let prev = MonomialTable::new(r, i - 1);
            for m in &prev.list {
                let mono = Form::monomial(r, m.clone(), Rat::from_integer(1.into()));
                let mut lm = Form::zero(r, i);
                for (v, c) in ell.iter().enumerate() {
                    lm = lm.add(&mono.mul_var(v).scale(c)).unwrap();
                }
                ech.insert_rat(&lm.to_vector(&table));
            }
        }
        restriction.push((table.len() - ech.rank()) as u64);
    }
    let colon_shifted: Vec<u64> = quotient
        .iter()
        .zip(restriction.iter())
        .map(|(q, s)| q - s)
        .collect();
    let mut green_ok = true;
    for &i in &degrees {
        if i >= 1 && quotient[i] >= 1 && restriction[i] > green_bound(quotient[i], i as u64)? {
            green_ok = false;
        }
    }
    let mut macaulay_ok = true;
    for i in 1..degrees.len() - 1 {
        if quotient[i] >= 1 && quotient[i + 1] > macaulay_bound(quotient[i], i as u64)? {
            macaulay_ok = false;
        }
        if restriction[i] >= 1 && restriction[i + 1] > macaulay_bound(restriction[i], i as u64)? {
            macaulay_ok = false;
        }
        // The colon row lives one degree lower.
        if i >= 2 && colon_shifted[i] >= 1
            && colon_shifted[i + 1] > macaulay_bound(colon_shifted[i], i as u64 - 1)?
        {
            macaulay_ok = false;
        }
    }
    // q/m split of the expansion of h(n) when the leading top is n+1.
    let k = quotient[n];
    let (q, m, pattern) = if k >= 1 {
        let e = macaulay_expand(k, n as u64)?;
        if e.terms[0].0 == n as u64 + 1 {
            let qv = e.terms.iter().filter(|(t, b)| t == &(b + 1)).count() as u64;
            let mv = e.terms.iter().filter(|(t, b)| t == b).count() as u64;
            let p = restriction[n];
            let s = restriction[n + 1];
            let pat = if p == qv - 1 && s == qv - 1 {
                RestrictionPattern::BothQMinus1
            } else if p == qv && s == qv - 1 {
                RestrictionPattern::QThenQMinus1
            } else if p == qv && s == qv {
                RestrictionPattern::BothQ
            } else {
                RestrictionPattern::OutOfRange
            };
            (Some(qv), Some(mv), Some(pat))
        } else {
            (None, None, None)
        }
    } else {
        (None, None, None)
    };
    Ok(ColonTable {
        n,
        degrees,
        quotient,
        colon_shifted,
        restriction,
        green_ok,
        macaulay_ok,
        q,
        m,
        pattern,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "detail")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail(String),
}

/// Check a measured base-locus profile against the classifier's prediction.
/// A failure here contradicts a theorem on hypothesis-passing input and is
/// treated as an alarm by every caller.
pub fn verify_prediction(profile: &BaseLocusProfile, report: &GrowthReport) -> Verdict {
    match profile.status {
        BaseLocusStatus::Undetermined => Verdict::Inconclusive,
        BaseLocusStatus::Empty => {
            if report.predicted_dims.contains(&PredictedDim::Empty) {
                Verdict::Pass
            } else {
                Verdict::Fail(format!(
                    "measured empty base locus; predicted {:?} (regime {:?}, n = {}, h = {},{})",
                    report.predicted_dims, report.regime, report.n, report.h_n, report.h_n1
                ))
            }
        }
        BaseLocusStatus::ZeroDimensional | BaseLocusStatus::PositiveDimensional => {
            let dim = profile.dimension.expect("dimension set") as u64;
            if !report.predicted_dims.contains(&PredictedDim::Dim(dim)) {
                return Verdict::Fail(format!(
                    "measured base locus dimension {}; predicted {:?} (regime {:?}, n = {}, h = {},{})",
                    dim, report.predicted_dims, report.regime, report.n, report.h_n, report.h_n1
                ));
            }
            if report.regime == Regime::TypeKKminus1 && dim == 0 {
                let deg = profile.degree.expect("degree set");
                if deg > report.h_n {
                    return Verdict::Fail(format!(
                        "zero-dimensional base locus of degree {} exceeds k = {}",
                        deg, report.h_n
                    ));
                }
            }
            Verdict::Pass
        }
    }
}
