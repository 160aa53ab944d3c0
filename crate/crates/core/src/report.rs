//! Seeded runs of the identity families and their JSON report.

use rand::SeedableRng;
use serde::Serialize;

use crate::identities::{check_identity, FamilyDef, Outcome, Params, Rng, Suite, Value, FAMILIES};
use crate::Result;

/// Counterexamples kept per family; the count of failures is always exact.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Params,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub name: String,
    pub suite: Suite,
    pub grid: String,
    pub normative: bool,
    pub cases: usize,
    pub passes: usize,
    pub failures: usize,
    pub skips: usize,
    /// Sorted by parameters; the first entry is the smallest counterexample.
    pub counterexamples: Vec<Counterexample>,
}

impl FamilyReport {
    pub fn confirmed(&self) -> bool {
        self.failures == 0 && self.passes > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub exact: bool,
    pub families: Vec<FamilyReport>,
}

impl IdentityReport {
    pub fn family(&self, name: &str) -> Option<&FamilyReport> {
        self.families.iter().find(|f| f.name == name)
    }

    pub fn normative_failures(&self) -> usize {
        self.families.iter().filter(|f| f.normative).map(|f| f.failures).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.families.iter().map(|f| f.failures).sum()
    }

    /// Exit status: normative failures always count, the rest only when strict.
    pub fn success(&self, strict: bool) -> bool {
        if strict {
            self.total_failures() == 0
        } else {
            self.normative_failures() == 0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// FNV-1a, so each family's stream depends only on the seed and its name.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

pub fn family_cases(def: &FamilyDef, seed: u64, cases: usize) -> Vec<Params> {
    let mut rng = Rng::seed_from_u64(seed ^ name_hash(def.name));
    (def.generate)(&mut rng, cases)
}

pub fn run_family(def: &FamilyDef, seed: u64, cases: usize) -> Result<FamilyReport> {
    let params = family_cases(def, seed, cases);
    let mut report = FamilyReport {
        name: def.name.to_string(),
        suite: def.suite,
        grid: def.grid.to_string(),
        normative: def.normative,
        cases: params.len(),
        passes: 0,
        failures: 0,
        skips: 0,
        counterexamples: Vec::new(),
    };
    let mut failed = Vec::new();
    for p in params {
        match (def.evaluate)(&p)? {
            Outcome::Skipped { .. } => report.skips += 1,
            Outcome::Checked { lhs, rhs } if lhs == rhs => report.passes += 1,
            Outcome::Checked { lhs, rhs } => {
                report.failures += 1;
                failed.push(Counterexample { params: p, lhs, rhs });
            }
        }
    }
    failed.sort_by(|a, b| a.params.cmp(&b.params));
    failed.truncate(MAX_COUNTEREXAMPLES);
    report.counterexamples = failed;
    Ok(report)
}

/// Runs every family of `suite`, one thread per family. The report does not
/// depend on scheduling.
pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> Result<IdentityReport> {
    let defs: Vec<&FamilyDef> = FAMILIES.iter().filter(|f| suite.includes(f.suite)).collect();
    let results: Vec<Result<FamilyReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = defs.iter().map(|def| scope.spawn(move || run_family(def, seed, cases))).collect();
        handles.into_iter().map(|h| h.join().expect("family thread panicked")).collect()
    });
    let mut families = results.into_iter().collect::<Result<Vec<_>>>()?;
    families.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(IdentityReport { suite, seed, cases, exact: true, families })
}

/// Re-evaluates a stored counterexample.
pub fn replay(name: &str, params: &Params) -> Result<Outcome> {
    check_identity(name, params)
}
