//! Unimodality scan over all non-isomorphic trees of a given order.

use std::collections::BTreeMap;

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::independence_polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::props::PropertyReport;
use crate::tree::{nonisomorphic_trees, prufer_decode, tree_canonical_code, PruferSequences};

/// Largest order the scan accepts.
pub const SCAN_MAX_ORDER: usize = 14;

/// Above this order `Auto` grows trees leaf by leaf instead of decoding all
/// `n^(n-2)` labeled trees.
pub const PRUFER_AUTO_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TreeEnumeration {
    /// Decode every Prüfer sequence and deduplicate by canonical code.
    Prufer,
    /// Extend each class on `n - 1` vertices by one leaf and deduplicate.
    LeafGrowth,
    #[default]
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub canonical_code: Vec<u8>,
    pub n: usize,
    pub polynomial: IntPoly,
    pub report: PropertyReport,
}

/// One line of the scan report file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub code: String,
    pub coeffs: IntPoly,
    pub unimodal: bool,
    pub log_concave: bool,
    pub symmetric: bool,
    pub real_rooted: bool,
}

impl From<&ScanResult> for ScanRecord {
    fn from(r: &ScanResult) -> Self {
        ScanRecord {
            n: r.n,
            code: BASE64.encode(&r.canonical_code),
            coeffs: r.polynomial.clone(),
            unimodal: r.report.unimodal,
            log_concave: r.report.log_concave,
            symmetric: r.report.symmetric,
            real_rooted: r.report.real_rooted,
        }
    }
}

impl ScanResult {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&ScanRecord::from(self)).expect("record serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub n: usize,
    pub trees: usize,
    pub violations: usize,
}

impl std::fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={}: {} trees, {} violations", self.n, self.trees, self.violations)
    }
}

fn classes(n: usize, how: TreeEnumeration) -> Result<BTreeMap<Vec<u8>, Graph>> {
    let use_prufer = match how {
        TreeEnumeration::Prufer => true,
        TreeEnumeration::LeafGrowth => false,
        TreeEnumeration::Auto => n <= PRUFER_AUTO_LIMIT,
    };
    if !use_prufer || n < 2 {
        return nonisomorphic_trees(n);
    }
    let labeled: Vec<(Vec<u8>, Graph)> = PruferSequences::new(n)
        .par_bridge()
        .map(|seq| {
            let g = prufer_decode(&seq, n)?;
            Ok((tree_canonical_code(&g)?, g))
        })
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (code, g) in labeled {
        out.entry(code).or_insert(g);
    }
    Ok(out)
}

/// Every tree class of order `n` with its independence polynomial and
/// property report, sorted by canonical code.
pub fn scan_order(n: usize, how: TreeEnumeration) -> Result<Vec<ScanResult>> {
    if !(1..=SCAN_MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "tree order must be in 1..={SCAN_MAX_ORDER}, got {n}"
        )));
    }
    let reps: Vec<(Vec<u8>, Graph)> = classes(n, how)?.into_iter().collect();
    reps.into_par_iter()
        .map(|(code, g)| {
            let polynomial = independence_polynomial(&g);
            debug_assert_eq!(polynomial.degree(), Some(g.alpha()));
            let report = PropertyReport::evaluate(&polynomial)?;
            Ok(ScanResult {
                canonical_code: code,
                n,
                polynomial,
                report,
            })
        })
        .collect()
}

/// Scans orders `n_min..=n_max`, handing each order's sorted results to
/// `emit` before moving on, and returns the per-order summaries.
pub fn tree_scan<F>(n_min: usize, n_max: usize, how: TreeEnumeration, mut emit: F) -> Result<Vec<ScanSummary>>
where
    F: FnMut(&[ScanResult]) -> std::io::Result<()>,
{
    if n_min < 2 || n_min > n_max || n_max > SCAN_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= n_min <= n_max <= {SCAN_MAX_ORDER}, got {n_min}..={n_max}"
        )));
    }
    let mut summaries = Vec::new();
    for n in n_min..=n_max {
        let results = scan_order(n, how)?;
        emit(&results).map_err(|e| Error::Io(e.to_string()))?;
        summaries.push(ScanSummary {
            n,
            trees: results.len(),
            violations: results.iter().filter(|r| !r.report.unimodal).count(),
        });
    }
    Ok(summaries)
}
