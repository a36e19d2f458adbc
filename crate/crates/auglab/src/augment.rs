//! Augmented links and the JSON wire formats of the `augment` command.
//!
//! A valid arc system on a diagram that passes the hypothesis gate yields a
//! generalized augmented alternating link, which the main theorem certifies
//! hyperbolic; [`build_augmented_link`] packages the construction with that
//! certificate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::dual::AugmentationArc;
use crate::faces::FaceMap;
use crate::gate::{check_hypotheses, HypothesisReport};
use crate::realize::{ArcSystem, Attachment, Infeasibility, Realization};
use crate::verify::{check_arc_system, VerifyError};

#[derive(Debug, Error)]
pub enum AugmentError {
    #[error("diagram fails the hypothesis gate")]
    HypothesisFailure(HypothesisReport),
    #[error("arc system is not valid for this diagram: {0}")]
    InvalidSystem(VerifyError),
}

/// Per-arc classification by puncture count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcClass {
    /// Two punctures: a classical augmentation component.
    Classical,
    /// Three or more punctures.
    Generalized,
}

impl ArcClass {
    pub fn of(arc: &AugmentationArc) -> ArcClass {
        if arc.is_classical() {
            ArcClass::Classical
        } else {
            ArcClass::Generalized
        }
    }
}

/// Hyperbolicity certificate attached to every built augmented link.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub hypotheses: HypothesisReport,
    pub system_valid: bool,
    pub hyperbolic: bool,
}

/// A base diagram together with a realized system of vertical components.
#[derive(Debug)]
pub struct AugmentedLink {
    pub base: LinkDiagram,
    pub system: ArcSystem,
    pub classes: Vec<ArcClass>,
    pub certificate: Certificate,
}

/// Attach a validated arc system to a diagram that passes the gate.
pub fn build_augmented_link(
    d: &LinkDiagram,
    sys: ArcSystem,
) -> Result<AugmentedLink, AugmentError> {
    let report = check_hypotheses(d);
    if !report.passes {
        return Err(AugmentError::HypothesisFailure(report));
    }
    let f = FaceMap::build(d);
    check_arc_system(d, &f, &sys).map_err(AugmentError::InvalidSystem)?;
    let classes = sys.arcs.iter().map(ArcClass::of).collect();
    Ok(AugmentedLink {
        base: d.clone(),
        system: sys,
        classes,
        certificate: Certificate {
            hypotheses: report,
            system_valid: true,
            hyperbolic: true,
        },
    })
}

/// Request file for `auglab augment`: a PD code plus face pairs, using the
/// canonical face indices reported by `auglab faces`.
#[derive(Debug, Deserialize)]
pub struct AugmentRequest {
    pub diagram: String,
    pub pairs: Vec<(usize, usize)>,
}

/// JSON form of one arc.
#[derive(Debug, Serialize)]
pub struct ArcJson {
    pub endpoints: (usize, usize),
    pub route: Vec<u32>,
    pub faces: Vec<usize>,
    pub punctures: usize,
    pub classification: ArcClass,
}

#[derive(Debug, Serialize)]
pub struct EdgeOrderJson {
    pub edge: u32,
    pub arcs: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct FaceLayoutJson {
    pub face: usize,
    pub layout: Vec<Attachment>,
}

/// JSON output of `auglab augment`.
#[derive(Debug, Serialize)]
pub struct AugmentResponse {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_orders: Option<Vec<EdgeOrderJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_layouts: Option<Vec<FaceLayoutJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conflict: Option<Infeasibility>,
    pub cap: usize,
}

impl AugmentResponse {
    pub fn from_realization(r: &Realization, link: Option<&AugmentedLink>, cap: usize) -> Self {
        match r {
            Realization::Feasible(sys) => {
                let arcs = sys
                    .arcs
                    .iter()
                    .map(|arc| ArcJson {
                        endpoints: arc.endpoints,
                        route: arc.route.clone(),
                        faces: arc.faces.clone(),
                        punctures: arc.punctures(),
                        classification: ArcClass::of(arc),
                    })
                    .collect();
                let edge_orders = sys
                    .edge_orders
                    .iter()
                    .map(|(&edge, order)| EdgeOrderJson {
                        edge,
                        arcs: order.clone(),
                    })
                    .collect();
                let face_layouts = sys
                    .face_layouts
                    .iter()
                    .map(|(&face, layout)| FaceLayoutJson {
                        face,
                        layout: layout.clone(),
                    })
                    .collect();
                AugmentResponse {
                    status: "feasible",
                    arcs: Some(arcs),
                    edge_orders: Some(edge_orders),
                    face_layouts: Some(face_layouts),
                    certificate: link.map(|l| l.certificate.clone()),
                    conflict: None,
                    cap,
                }
            }
            Realization::Infeasible { certificate, cap } => AugmentResponse {
                status: "infeasible",
                arcs: None,
                edge_orders: None,
                face_layouts: None,
                certificate: None,
                conflict: Some(certificate.clone()),
                cap: *cap,
            },
            Realization::Unknown { cap } => AugmentResponse {
                status: "unknown",
                arcs: None,
                edge_orders: None,
                face_layouts: None,
                certificate: None,
                conflict: None,
                cap: *cap,
            },
        }
    }
}
