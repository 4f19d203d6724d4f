//! Output documents. Every subcommand emits one self-contained JSON
//! envelope carrying a `type` tag, the inputs, and the computed result,
//! so `verify` can rebuild the document from its own inputs and compare.

use crate::inputs::Failure;
use ndindex::chi::{IntersectionForm, NumClass};
use ndindex::elliptic_product::{demo_report, DemoReport};
use ndindex::index::{
    hhat, mumford_index, naive_q_ample, pair_index_condition, segment_index,
    stability_threshold, surjectivity_lower_bound, IndexCertificate, PairReport, SegmentReport,
    ThresholdCertificate,
};
use ndindex::qstr::{int_str, poly_coeffs, rat_str};
use ndindex::totally_real::{
    existence_report, find_pair_with_signs, make_field, ExistenceReport, PairSearchCertificate,
    UpperHalfPoint,
};
use ndindex::{Int, QPoly, Rat};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeSet;

#[derive(Serialize, Deserialize)]
pub struct ChiDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub class: NumClass,
    #[serde(with = "rat_str")]
    pub chi: Rat,
}

pub fn chi_doc(form: IntersectionForm, class: NumClass) -> Result<ChiDoc, Failure> {
    let chi = form.euler_char(&class)?;
    Ok(ChiDoc {
        kind: "chi".into(),
        form,
        class,
        chi,
    })
}

#[derive(Serialize, Deserialize)]
pub struct IndexDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub certificate: IndexCertificate,
}

pub fn index_doc(
    form: IntersectionForm,
    ample: &NumClass,
    class: &NumClass,
) -> Result<IndexDoc, Failure> {
    let certificate = mumford_index(&form, ample, class)?;
    Ok(IndexDoc {
        kind: "index".into(),
        form,
        certificate,
    })
}

#[derive(Serialize, Deserialize)]
pub struct PairCheckDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub l: NumClass,
    pub m: NumClass,
    pub report: PairReport,
}

pub fn pair_check_doc(
    form: IntersectionForm,
    ample: NumClass,
    l: NumClass,
    m: NumClass,
) -> Result<PairCheckDoc, Failure> {
    let report = pair_index_condition(&form, &ample, &l, &m)?;
    Ok(PairCheckDoc {
        kind: "pair-check".into(),
        form,
        ample,
        l,
        m,
        report,
    })
}

#[derive(Serialize, Deserialize)]
pub struct SegmentDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub eta: NumClass,
    pub xi: NumClass,
    pub report: SegmentReport,
}

pub fn segment_doc(
    form: IntersectionForm,
    ample: NumClass,
    eta: NumClass,
    xi: NumClass,
) -> Result<SegmentDoc, Failure> {
    let report = segment_index(&form, &ample, &eta, &xi)?;
    Ok(SegmentDoc {
        kind: "segment".into(),
        form,
        ample,
        eta,
        xi,
        report,
    })
}

#[derive(Serialize, Deserialize)]
pub struct ThresholdDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub certificate: ThresholdCertificate,
}

pub fn threshold_doc(
    form: IntersectionForm,
    ample: NumClass,
    eta: &NumClass,
    xi: &NumClass,
) -> Result<ThresholdDoc, Failure> {
    let certificate = stability_threshold(&form, &ample, eta, xi)?;
    Ok(ThresholdDoc {
        kind: "threshold".into(),
        form,
        ample,
        certificate,
    })
}

#[derive(Serialize, Deserialize)]
pub struct HhatDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub class: NumClass,
    pub q: usize,
    #[serde(with = "rat_str")]
    pub hhat: Rat,
}

pub fn hhat_doc(
    form: IntersectionForm,
    ample: NumClass,
    class: NumClass,
    q: usize,
) -> Result<HhatDoc, Failure> {
    let value = hhat(&form, &ample, &class, q)?;
    Ok(HhatDoc {
        kind: "hhat".into(),
        form,
        ample,
        class,
        q,
        hhat: value,
    })
}

#[derive(Serialize, Deserialize)]
pub struct QampleDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub class: NumClass,
    pub q: usize,
    pub naively_q_ample: bool,
}

pub fn qample_doc(
    form: IntersectionForm,
    ample: NumClass,
    class: NumClass,
    q: usize,
) -> Result<QampleDoc, Failure> {
    let verdict = naive_q_ample(&form, &ample, &class, q)?;
    Ok(QampleDoc {
        kind: "qample".into(),
        form,
        ample,
        class,
        q,
        naively_q_ample: verdict,
    })
}

#[derive(Serialize, Deserialize)]
pub struct SurjBoundDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub form: IntersectionForm,
    pub ample: NumClass,
    pub l: NumClass,
    pub m: NumClass,
    #[serde(with = "int_str")]
    pub bound: Int,
}

pub fn surj_bound_doc(
    form: IntersectionForm,
    ample: NumClass,
    l: NumClass,
    m: NumClass,
) -> Result<SurjBoundDoc, Failure> {
    let bound = surjectivity_lower_bound(&form, &ample, &l, &m)?;
    Ok(SurjBoundDoc {
        kind: "surj-bound".into(),
        form,
        ample,
        l,
        m,
        bound,
    })
}

#[derive(Serialize, Deserialize)]
pub struct ExeDemoDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub radius: u32,
    pub m_max: u32,
    pub n_max: u32,
    pub report: DemoReport,
}

pub fn exe_demo_doc(radius: u32, m_max: u32, n_max: u32) -> Result<ExeDemoDoc, Failure> {
    let report = demo_report(radius, m_max, n_max)?;
    Ok(ExeDemoDoc {
        kind: "exe-demo".into(),
        radius,
        m_max,
        n_max,
        report,
    })
}

#[derive(Serialize, Deserialize)]
pub struct RmSearchDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(with = "poly_coeffs")]
    pub field: QPoly,
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    pub max_iters: u32,
    pub certificate: PairSearchCertificate,
}

pub fn rm_search_doc(
    field_poly: QPoly,
    i_set: &BTreeSet<usize>,
    j_set: &BTreeSet<usize>,
    max_iters: u32,
) -> Result<RmSearchDoc, Failure> {
    let field = make_field(&field_poly)?;
    let certificate = find_pair_with_signs(&field, i_set, j_set, max_iters)?;
    Ok(RmSearchDoc {
        kind: "rm-search".into(),
        field: field_poly,
        i_set: i_set.iter().copied().collect(),
        j_set: j_set.iter().copied().collect(),
        max_iters,
        certificate,
    })
}

#[derive(Serialize, Deserialize)]
pub struct RmReportDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(with = "poly_coeffs")]
    pub field: QPoly,
    pub z: Vec<UpperHalfPoint>,
    pub max_iters: u32,
    pub report: ExistenceReport,
}

pub fn rm_report_doc(
    field_poly: QPoly,
    z: Vec<UpperHalfPoint>,
    p: usize,
    q: usize,
    max_iters: u32,
) -> Result<RmReportDoc, Failure> {
    let field = make_field(&field_poly)?;
    let report = existence_report(&field, &z, p, q, max_iters)?;
    Ok(RmReportDoc {
        kind: "rm-report".into(),
        field: field_poly,
        z,
        max_iters,
        report,
    })
}

#[derive(Serialize, Deserialize)]
pub struct VerificationDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub target: String,
    pub verified: bool,
}

fn reparse<T: serde::de::DeserializeOwned>(value: &Value, kind: &str) -> Result<T, Failure> {
    serde_json::from_value(value.clone())
        .map_err(|e| Failure::Malformed(format!("malformed `{kind}` document: {e}")))
}

fn canonical<T: Serialize>(doc: &T) -> Result<Value, Failure> {
    serde_json::to_value(doc).map_err(|e| Failure::Malformed(format!("serialization: {e}")))
}

/// Rebuilds a document from the inputs it embeds and compares the result
/// structurally; field order and formatting do not matter, values do.
pub fn verify_document(text: &str) -> Result<VerificationDoc, Failure> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::Malformed(format!("malformed document: {e}")))?;
    let kind = value
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::Malformed("document has no `type` tag".into()))?
        .to_string();
    let recomputed = match kind.as_str() {
        "chi" => {
            let doc: ChiDoc = reparse(&value, &kind)?;
            canonical(&chi_doc(doc.form, doc.class)?)?
        }
        "index" => {
            let doc: IndexDoc = reparse(&value, &kind)?;
            canonical(&index_doc(
                doc.form,
                &doc.certificate.ample_ref,
                &doc.certificate.class,
            )?)?
        }
        "pair-check" => {
            let doc: PairCheckDoc = reparse(&value, &kind)?;
            canonical(&pair_check_doc(doc.form, doc.ample, doc.l, doc.m)?)?
        }
        "segment" => {
            let doc: SegmentDoc = reparse(&value, &kind)?;
            canonical(&segment_doc(doc.form, doc.ample, doc.eta, doc.xi)?)?
        }
        "threshold" => {
            let doc: ThresholdDoc = reparse(&value, &kind)?;
            canonical(&threshold_doc(
                doc.form,
                doc.ample,
                &doc.certificate.eta,
                &doc.certificate.xi,
            )?)?
        }
        "hhat" => {
            let doc: HhatDoc = reparse(&value, &kind)?;
            canonical(&hhat_doc(doc.form, doc.ample, doc.class, doc.q)?)?
        }
        "qample" => {
            let doc: QampleDoc = reparse(&value, &kind)?;
            canonical(&qample_doc(doc.form, doc.ample, doc.class, doc.q)?)?
        }
        "surj-bound" => {
            let doc: SurjBoundDoc = reparse(&value, &kind)?;
            canonical(&surj_bound_doc(doc.form, doc.ample, doc.l, doc.m)?)?
        }
        "exe-demo" => {
            let doc: ExeDemoDoc = reparse(&value, &kind)?;
            canonical(&exe_demo_doc(doc.radius, doc.m_max, doc.n_max)?)?
        }
        "rm-search" => {
            let doc: RmSearchDoc = reparse(&value, &kind)?;
            let i_set: BTreeSet<usize> = doc.i_set.iter().copied().collect();
            let j_set: BTreeSet<usize> = doc.j_set.iter().copied().collect();
            canonical(&rm_search_doc(doc.field, &i_set, &j_set, doc.max_iters)?)?
        }
        "rm-report" => {
            let doc: RmReportDoc = reparse(&value, &kind)?;
            canonical(&rm_report_doc(
                doc.field,
                doc.z,
                doc.report.p,
                doc.report.q,
                doc.max_iters,
            )?)?
        }
        other => {
            return Err(Failure::Malformed(format!(
                "unknown document type `{other}`"
            )))
        }
    };
    if recomputed == value {
        Ok(VerificationDoc {
            kind: "verification".into(),
            target: kind,
            verified: true,
        })
    } else {
        Err(Failure::Mismatch { target: kind })
    }
}
