//! Pass/fail claim reports.  Structural verifications never abort on a
//! falsified claim; they return it as data so callers (and the CLI `verify`
//! subcommand) can aggregate and render everything that was checked.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new() -> Self {
        Report { claims: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            id: id.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Ids of the claims that failed; empty means every claim holds.
    pub fn falsified(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.claims.extend(other.claims);
    }
}
