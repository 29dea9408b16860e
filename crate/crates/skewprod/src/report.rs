//! Serialisable report envelopes. All maps are ordered and every field is
//! deterministic, so a fixed `RunCfg` yields byte-identical JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{CaseReport, Claim, RunCfg};

pub const SCHEMA_VERSION: u32 = 1;

/// A rendered Cayley-map certificate: the qualifying cycle in 1-based cycle
/// notation over the base group's points, and the multiset of element orders
/// in the cycle.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub cycle_length: usize,
    pub cycle_elements: Vec<String>,
    pub inverse_closed: bool,
    pub generates_base: bool,
    /// order -> how many cycle elements have that order
    pub signature: BTreeMap<u32, u32>,
}

/// Top-level envelope the CLI serialises.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: RunCfg,
    pub cases: Vec<CaseReport>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, config: RunCfg, cases: Vec<CaseReport>) -> Report {
        let pass = cases.iter().all(|c| c.pass);
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            cases,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// The same claim set and verdicts as the JSON, as aligned text.
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "# {} (schema {})", self.command, self.schema);
        for case in &self.cases {
            let _ = writeln!(
                out,
                "\n[{}] {} over {} (complement order {})",
                case.id, case.base, case.group, case.complement_order
            );
            if let Some(orbits) = case.pair_orbits {
                let _ = writeln!(out, "  pair orbits: {orbits}");
            }
            if let Some(classes) = case.class_count {
                let _ = writeln!(
                    out,
                    "  classes: {classes} with sizes {:?}",
                    case.class_sizes
                );
            }
            if let Some(total) = case.total {
                let _ = writeln!(
                    out,
                    "  total: {total}{}",
                    match case.total_basis {
                        Some(crate::classify::TotalBasis::FormulaBased) => " (formula-based)",
                        _ => "",
                    }
                );
            }
            if let Some(fixed) = case.fixed_base_morphisms {
                let _ = writeln!(out, "  distinct morphisms from this embedding: {fixed}");
            }
            if let Some(cert) = &case.certificate {
                let sig: Vec<String> = cert
                    .signature
                    .iter()
                    .map(|(o, c)| format!("{o}:{c}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "  certificate: {}-cycle, signature {{{}}}",
                    cert.cycle_length,
                    sig.join(", ")
                );
            }
            for claim in &case.claims {
                let _ = writeln!(out, "  {} {} -- {}", verdict(claim), claim.id, claim.detail);
            }
            for note in &case.notes {
                let _ = writeln!(out, "  note: {note}");
            }
        }
        let _ = writeln!(
            out,
            "\noverall: {}",
            if self.pass { "PASS" } else { "FAIL" }
        );
        out
    }

    /// Claims of every case, flattened.
    pub fn all_claims(&self) -> impl Iterator<Item = (&str, &Claim)> {
        self.cases
            .iter()
            .flat_map(|c| c.claims.iter().map(move |cl| (c.id.as_str(), cl)))
    }

    pub fn first_failure(&self) -> Option<String> {
        self.all_claims()
            .find(|(_, c)| !c.pass)
            .map(|(case, c)| format!("{case}/{}", c.id))
    }
}

fn verdict(c: &Claim) -> &'static str {
    if c.pass {
        "PASS"
    } else {
        "FAIL"
    }
}
