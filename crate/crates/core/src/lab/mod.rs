//! Checkers for sufficient conditions on unimodality and log-concavity,
//! the rooted-tree and ladder constructions, and the tree scan.
//!
//! Every checker takes raw data so hypotheses can be fuzzed on their own;
//! graph-level wrappers feed them real instances. A verdict with
//! `holds == false` makes no claim: the conditions are sufficient only.

use serde::Serialize;

pub mod conditions;
pub mod gn;
pub mod harness;
pub mod prop41;
pub mod scan;

pub use conditions::{
    bdn_inequality, fact1_condition, prop26_condition, thm22_condition_i, thm22_condition_ii,
    thm22_i_on_polys, thm22_ii_on_polys, ConditionIiVerdict, Fact1Verdict,
};
pub use gn::{
    gn_closed_form_check, gn_closed_form_coeffs, gn_graph_check, gn_poly_recurrence,
    thm52_verify, Thm52Report, Thm52Row,
};
pub use prop41::{prop41_factor_check, prop41_verify};
pub use scan::{tree_scan, ScanRecord, ScanResult, ScanSummary, TreeEnumeration};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub condition_name: String,
    pub holds: bool,
    pub first_failing_index: Option<usize>,
    /// Whether the expected conclusion was observed on this instance.
    pub conclusion_checked: Option<bool>,
}

impl ConditionVerdict {
    pub fn new(name: &str, holds: bool, first_failing_index: Option<usize>) -> Self {
        ConditionVerdict {
            condition_name: name.to_string(),
            holds,
            first_failing_index,
            conclusion_checked: None,
        }
    }

    pub fn with_conclusion(mut self, observed: bool) -> Self {
        self.conclusion_checked = Some(observed);
        self
    }

    /// A verdict is sound unless the hypothesis held and the checked
    /// conclusion did not.
    pub fn is_sound(&self) -> bool {
        !(self.holds && self.conclusion_checked == Some(false))
    }
}
