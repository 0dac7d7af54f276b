use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::config::{check_dimension, RunConfig, SolveArgs};
use crate::error::CliError;
use crate::io::{read_bytes, read_json};
use crate::Summary;
use equilines::exact::{CycloNum, Field, FieldDesc, Rational};
use equilines::groebner::{content_hash, BasisFile, QuotientDimension};
use equilines::par::Execution;
use equilines::sicgen::{PolySystem, SystemFile, SystemKind};
use equilines::solver::{classify, match_zauner, solve_triangular, SolutionFile, SolutionSet, SolveConfig};

/// Solutions artifact: the solver output plus its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionsOutput {
    /// Hash of the basis file.
    pub input_hash: String,
    /// Hash of the system file the basis was computed from.
    pub system_hash: String,
    pub kind: SystemKind,
    pub d: usize,
    pub quotient_dimension: QuotientDimension,
    #[serde(flatten)]
    pub solutions: SolutionFile,
}

fn solve_over<K: Field>(basis: &BasisFile, system: &PolySystem, config: &SolveConfig) -> Result<SolutionSet, CliError> {
    let (_, gb) = basis.load::<K>()?;
    Ok(solve_triangular(&gb, system, config)?)
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(SolutionsOutput, Summary), CliError> {
    let run = RunConfig::new(&args.tol)?;
    let basis = read_json::<BasisFile>(&args.input)?;
    let system_bytes = read_bytes(&args.system)?;
    let system_hash = content_hash(&system_bytes);
    if basis.value.input_hash != system_hash && !args.force {
        return Err(CliError::HashMismatch {
            path: args.input.clone(),
            expected: system_hash,
            found: basis.value.input_hash.clone(),
        });
    }
    let system_file: SystemFile =
        serde_json::from_slice(&system_bytes).map_err(|source| CliError::Json { path: args.system.clone(), source })?;
    let system = system_file.to_system().map_err(|e| CliError::from(e).at(&args.system))?;
    check_dimension(system.d())?;

    let config = SolveConfig {
        precision: run.precision,
        tolerances: run.tolerances,
        branch_cap: args.branch_cap,
        execution: Execution::default(),
    };
    let set = match basis.value.field {
        FieldDesc::Rational => solve_over::<Rational>(&basis.value, &system, &config),
        FieldDesc::Cyclotomic(_) => solve_over::<CycloNum>(&basis.value, &system, &config),
    }
    .map_err(|e| e.at(&args.input))?;
    let set = if system.kind() == SystemKind::WhFiducial {
        let set = classify(set, system.d())?;
        if system.d() == 4 {
            match_zauner(set, 4, run.precision)?
        } else {
            set
        }
    } else {
        set
    };

    let counts = set.counts();
    let qd = basis.value.quotient_dimension;
    let mut text = counts.to_string();
    if let QuotientDimension::Finite(q) = qd {
        if q != counts.total as u64 {
            text.push_str(&format!(
                "\nnote: {} points but quotient dimension {q} (multiplicities or rejected branches)",
                counts.total
            ));
        }
    }
    let summary = Summary { text, json: json!({"counts": counts, "quotient_dimension": qd, "rejected": set.rejected}) };
    let output = SolutionsOutput {
        input_hash: basis.hash,
        system_hash,
        kind: system.kind(),
        d: system.d(),
        quotient_dimension: qd,
        solutions: set.to_file(),
    };
    Ok((output, summary))
}
