//! Verdicts and hypothesis bookkeeping shared by the signature pipelines.

use num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Verified,
    Failed,
    /// Taken on the user's word.
    Asserted,
    /// Required but neither verified nor asserted.
    NotAsserted,
    /// Not evaluated because an earlier check decided the outcome.
    Skipped,
}

impl CheckStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::Verified => "verified",
            CheckStatus::Failed => "failed",
            CheckStatus::Asserted => "asserted",
            CheckStatus::NotAsserted => "not-asserted",
            CheckStatus::Skipped => "skipped",
        }
    }

    /// Verified or asserted.
    pub fn holds(&self) -> bool {
        matches!(self, CheckStatus::Verified | CheckStatus::Asserted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl HypothesisCheck {
    pub fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        HypothesisCheck {
            name: name.to_string(),
            status,
            detail: detail.into(),
        }
    }

    pub fn from_bool(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Verified } else { CheckStatus::Failed };
        Self::new(name, status, detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    /// The signature follows from verified (or explicitly asserted) hypotheses.
    Determined,
    /// The value holds provided the symmetric powers are reflexive.
    ConditionalOnReflexivity,
    Undecided,
}

impl VerdictStatus {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictStatus::Determined => "determined",
            VerdictStatus::ConditionalOnReflexivity => "conditional-on-reflexivity",
            VerdictStatus::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub signature: Option<BigRational>,
    pub reasons: Vec<String>,
    pub warnings: Vec<String>,
}

impl Verdict {
    pub fn determined(signature: BigRational, reasons: Vec<String>) -> Self {
        Verdict {
            status: VerdictStatus::Determined,
            signature: Some(signature),
            reasons,
            warnings: Vec::new(),
        }
    }

    pub fn undecided(reasons: Vec<String>) -> Self {
        Verdict {
            status: VerdictStatus::Undecided,
            signature: None,
            reasons,
            warnings: Vec::new(),
        }
    }

    pub fn is_undecided(&self) -> bool {
        self.status == VerdictStatus::Undecided
    }
}
