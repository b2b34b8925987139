//! Three-valued verdicts. "Holds" always travels with a witness that the
//! independent verifier accepts; "fails" for affine-linear criteria carries the
//! infeasibility rank data; "indeterminate" is reserved for the documented
//! quadratic-gap rule and bound exhaustion.

use crate::linalg::InfeasibilityCert;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Indeterminate,
}

impl Status {
    pub fn holds(self) -> bool {
        self == Status::Holds
    }

    pub fn from_bool(b: bool) -> Status {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Indeterminate => "indeterminate",
        };
        write!(f, "{s}")
    }
}

/// A verdict with an optional typed witness and optional infeasibility data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict<W> {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<W>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasibility: Option<InfeasibilityCert>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl<W> Verdict<W> {
    pub fn holds(witness: W) -> Self {
        Verdict {
            status: Status::Holds,
            witness: Some(witness),
            infeasibility: None,
            note: None,
        }
    }

    pub fn fails() -> Self {
        Verdict {
            status: Status::Fails,
            witness: None,
            infeasibility: None,
            note: None,
        }
    }

    pub fn fails_with(cert: InfeasibilityCert) -> Self {
        Verdict {
            status: Status::Fails,
            witness: None,
            infeasibility: Some(cert),
            note: None,
        }
    }

    pub fn indeterminate(note: impl Into<String>) -> Self {
        Verdict {
            status: Status::Indeterminate,
            witness: None,
            infeasibility: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn holds_bool(&self) -> bool {
        self.status.holds()
    }
}
