//! Verdict types shared by the 1D and 2D theorem verifiers.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    P31,
    L32i,
    L32ii,
    T33i,
    T33ii,
    C34i,
    C34ii,
    R35Higher,
    T42,
    T44,
    T45,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::P31 => "P3.1",
            TheoremId::L32i => "L3.2i",
            TheoremId::L32ii => "L3.2ii",
            TheoremId::T33i => "T3.3i",
            TheoremId::T33ii => "T3.3ii",
            TheoremId::C34i => "C3.4i",
            TheoremId::C34ii => "C3.4ii",
            TheoremId::R35Higher => "R3.5-higher",
            TheoremId::T42 => "T4.2",
            TheoremId::T44 => "T4.4",
            TheoremId::T45 => "T4.5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HoldsStrictly,
    HoldsWithinTolerance,
    Violated,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::HoldsStrictly => "holds strictly",
            Verdict::HoldsWithinTolerance => "holds within tolerance",
            Verdict::Violated => "violated",
            Verdict::Inapplicable => "inapplicable",
        };
        f.write_str(s)
    }
}

/// Outcome of one inequality check. `margin = rhs - lhs` where the claim
/// under test is `lhs < rhs`; "violated" requires the margin to be negative
/// beyond the error budget, "holds strictly" to exceed it.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub theorem: TheoremId,
    /// Case label, e.g. the potential name or the eigenvalue index.
    pub label: String,
    pub applicable: bool,
    pub reason: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub error_budget: f64,
    pub verdict: Verdict,
}

impl InequalityReport {
    pub fn inapplicable(theorem: TheoremId, label: impl Into<String>, reason: impl Into<String>) -> Self {
        InequalityReport {
            theorem,
            label: label.into(),
            applicable: false,
            reason: reason.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            margin: f64::NAN,
            error_budget: f64::NAN,
            verdict: Verdict::Inapplicable,
        }
    }

    /// Verdict from a margin and budget; the invariants relating the two are
    /// enforced here and nowhere else.
    pub fn from_margin(
        theorem: TheoremId,
        label: impl Into<String>,
        reason: impl Into<String>,
        lhs: f64,
        rhs: f64,
        error_budget: f64,
    ) -> Self {
        let margin = rhs - lhs;
        let verdict = if margin > error_budget {
            Verdict::HoldsStrictly
        } else if margin < -error_budget {
            Verdict::Violated
        } else {
            Verdict::HoldsWithinTolerance
        };
        InequalityReport {
            theorem,
            label: label.into(),
            applicable: true,
            reason: reason.into(),
            lhs,
            rhs,
            margin,
            error_budget,
            verdict,
        }
    }

    /// For an expected equality: "holds within tolerance" iff |rhs - lhs|
    /// is inside the budget.
    pub fn from_equality(
        theorem: TheoremId,
        label: impl Into<String>,
        reason: impl Into<String>,
        lhs: f64,
        rhs: f64,
        error_budget: f64,
    ) -> Self {
        let margin = rhs - lhs;
        let verdict = if margin.abs() <= error_budget {
            Verdict::HoldsWithinTolerance
        } else {
            Verdict::Violated
        };
        InequalityReport {
            theorem,
            label: label.into(),
            applicable: true,
            reason: reason.into(),
            lhs,
            rhs,
            margin,
            error_budget,
            verdict,
        }
    }
}
