use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::config::{check_dimension, GramArgs, OverlapsArgs, RunConfig, VerifyArgs};
use crate::error::CliError;
use crate::io::read_json;
use crate::solve::SolutionsOutput;
use crate::Summary;
use equilines::numeric::{BigComplex, BigReal};
use equilines::par::Execution;
use equilines::sicgen::SystemKind;
use equilines::solver::{decimal, fiducial_vector};
use equilines::verify::{
    gram_analysis, normalized_overlaps, seidel_gram, spectral_reconstruct, verify_equiangular_complex,
    verify_equiangular_real, verify_fiducial, GramAnalysis, OverlapReport, SeidelSpec,
};

/// A number given either as decimal text or as a JSON number.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Float(f64),
}

impl Num {
    fn big(&self, prec: usize) -> Result<BigReal, CliError> {
        match self {
            Num::Text(s) => BigReal::parse(s, prec).ok_or_else(|| CliError::Config(format!("bad number `{s}`"))),
            Num::Float(x) => Ok(BigReal::from_f64(*x, prec)),
        }
    }

    fn f64(&self) -> Result<f64, CliError> {
        match self {
            Num::Text(s) => s.trim().parse().map_err(|_| CliError::Config(format!("bad number `{s}`"))),
            Num::Float(x) => Ok(*x),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Complex([Num; 2]),
    Real(Num),
}

/// `{"vector": [[re, im], ..]}`: one fiducial candidate.
#[derive(Debug, Clone, Deserialize)]
pub struct VectorFile {
    pub vector: Vec<[Num; 2]>,
}

impl VectorFile {
    fn big(&self, prec: usize) -> Result<Vec<BigComplex>, CliError> {
        self.vector.iter().map(|[re, im]| Ok(BigComplex::new(re.big(prec)?, im.big(prec)?))).collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum VerifyInput {
    Solutions(Box<SolutionsOutput>),
    Vector(VectorFile),
    Lines { vectors: Vec<Vec<Entry>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    Fiducial,
    Solutions,
    ComplexLines,
    RealLines,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub input_hash: String,
    pub subject: Subject,
    pub ok: bool,
    #[serde(with = "decimal")]
    pub max_dev: f64,
    #[serde(with = "decimal")]
    pub tolerance: f64,
    pub checked: usize,
    /// Solution points that are not genuine vectors (non-real coordinates).
    pub skipped: usize,
    /// Common |inner product| of a line set.
    pub alpha_est: Option<String>,
}

fn lines(vectors: &[Vec<Entry>], tol: f64) -> Result<(Subject, f64, bool, Option<String>), CliError> {
    let all_real = vectors.iter().flatten().all(|e| matches!(e, Entry::Real(_)));
    let all_complex = vectors.iter().flatten().all(|e| matches!(e, Entry::Complex(_)));
    if all_real {
        let vs = vectors
            .iter()
            .map(|v| v.iter().map(|e| if let Entry::Real(x) = e { x.f64() } else { unreachable!() }).collect())
            .collect::<Result<Vec<Vec<f64>>, _>>()?;
        let check = verify_equiangular_real(&vs, tol)?;
        Ok((Subject::RealLines, check.max_dev, check.ok, Some(format!("{}", check.alpha_est))))
    } else if all_complex {
        let vs = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|e| match e {
                        Entry::Complex([re, im]) => Ok(Complex64::new(re.f64()?, im.f64()?)),
                        Entry::Real(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<Complex64>>, CliError>>()?;
        let check = verify_equiangular_complex(&vs, tol)?;
        Ok((Subject::ComplexLines, check.max_dev, check.ok, None))
    } else {
        Err(CliError::Config("vectors mix real and complex entries".into()))
    }
}

fn solutions(file: &SolutionsOutput, tol: f64) -> Result<(f64, bool, usize, usize), CliError> {
    let set = file.solutions.to_set()?;
    let mut max_dev = 0f64;
    let (mut checked, mut skipped) = (0, 0);
    for point in &set.points {
        if file.kind == SystemKind::WhFiducial {
            if !point.tags.real {
                skipped += 1;
                continue;
            }
            let check = verify_fiducial(&fiducial_vector(&point.coords, file.d), tol)?;
            max_dev = max_dev.max(check.max_dev);
        } else {
            max_dev = max_dev.max(point.residual);
        }
        checked += 1;
    }
    Ok((max_dev, max_dev <= tol, checked, skipped))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(VerifyReport, Summary), CliError> {
    let run = RunConfig::new(&args.tol)?;
    let tol = run.tolerances.residual;
    let loaded = read_json::<VerifyInput>(&args.input)?;
    let at = |e: CliError| e.at(&args.input);
    let (subject, max_dev, ok, checked, skipped, alpha_est) = match &loaded.value {
        VerifyInput::Solutions(file) => {
            let (max_dev, ok, checked, skipped) = solutions(file, tol).map_err(at)?;
            (Subject::Solutions, max_dev, ok, checked, skipped, None)
        }
        VerifyInput::Vector(v) => {
            let check = verify_fiducial(&v.big(run.precision).map_err(at)?, tol).map_err(|e| at(e.into()))?;
            (Subject::Fiducial, check.max_dev, check.ok, 1, 0, None)
        }
        VerifyInput::Lines { vectors } => {
            let (subject, max_dev, ok, alpha) = lines(vectors, tol).map_err(at)?;
            (subject, max_dev, ok, vectors.len(), 0, alpha)
        }
    };
    let report =
        VerifyReport { input_hash: loaded.hash, subject, ok, max_dev, tolerance: tol, checked, skipped, alpha_est };
    let mut text = format!("ok={} max_dev={:e} checked={}", report.ok, report.max_dev, report.checked);
    if let Some(a) = &report.alpha_est {
        text.push_str(&format!(" alpha={a}"));
    }
    let summary = Summary { text, json: json!({"ok": ok, "max_dev": format!("{max_dev:e}"), "checked": checked}) };
    Ok((report, summary))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlapsOutput {
    pub input_hash: String,
    #[serde(with = "decimal")]
    pub max_modulus_error: f64,
    #[serde(flatten)]
    pub report: OverlapReport,
}

pub fn cmd_overlaps(args: &OverlapsArgs) -> Result<(OverlapsOutput, Summary), CliError> {
    if args.precision < 53 {
        return Err(CliError::Config(format!("precision must be at least 53 bits, got {}", args.precision)));
    }
    let loaded = read_json::<VectorFile>(&args.input)?;
    let v = loaded.value.big(args.precision).map_err(|e| e.at(&args.input))?;
    let report = normalized_overlaps(&v, Execution::default()).map_err(|e| CliError::from(e).at(&args.input))?;
    let max = report.max_modulus_error();
    let summary = Summary {
        text: format!("entries={} max_modulus_error={max:e}", report.entries.len()),
        json: json!({"entries": report.entries.len(), "max_modulus_error": format!("{max:e}")}),
    };
    Ok((OverlapsOutput { input_hash: loaded.hash, max_modulus_error: max, report }, summary))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconstructionJson {
    pub alpha: String,
    /// Set when the Gram matrix at this angle cannot be factored in ℝ^d.
    pub error: Option<String>,
    #[serde(with = "decimal")]
    pub recon_error: f64,
    pub equiangular: bool,
    pub vectors: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramOutput {
    pub input_hash: String,
    #[serde(flatten)]
    pub analysis: GramAnalysis,
    pub reconstructions: Vec<ReconstructionJson>,
}

fn reconstruct(spec: &SeidelSpec, d: usize, alpha: f64, tol: f64) -> ReconstructionJson {
    let text = format!("{alpha}");
    match spectral_reconstruct(&seidel_gram(spec, alpha), d, tol) {
        Ok(r) => ReconstructionJson {
            alpha: text,
            error: None,
            recon_error: r.recon_error,
            equiangular: verify_equiangular_real(&r.vectors, tol).is_ok_and(|c| c.ok),
            vectors: r.vectors.iter().map(|v| v.iter().map(|x| format!("{x}")).collect()).collect(),
        },
        Err(e) => ReconstructionJson {
            alpha: text,
            error: Some(e.to_string()),
            recon_error: f64::INFINITY,
            equiangular: false,
            vectors: vec![],
        },
    }
}

pub fn cmd_gram(args: &GramArgs) -> Result<(GramOutput, Summary), CliError> {
    check_dimension(args.d)?;
    if !(args.tol_residual > 0.0 && args.tol_residual.is_finite()) {
        return Err(CliError::Config("tolerances must be positive".into()));
    }
    let loaded = read_json::<SeidelSpec>(&args.input)?;
    let spec = loaded.value;
    let analysis = gram_analysis(&spec, args.d).map_err(|e| CliError::from(e).at(&args.input))?;
    let alphas: Vec<f64> = analysis.admissible_alphas.iter().map(|c| c.value.to_f64()).collect();
    let reconstructions = alphas.iter().map(|&a| reconstruct(&spec, args.d, a, args.tol_residual)).collect();
    let text = if alphas.is_empty() {
        "no admissible α".to_string()
    } else {
        alphas.iter().map(|a| format!("admissible α = {a}")).collect::<Vec<_>>().join("\n")
    };
    let summary = Summary {
        text: format!("det = {}\n{text}", analysis.det_poly),
        json: json!({"det_poly": analysis.det_poly.to_string(), "admissible_alphas": alphas.iter().map(|a| format!("{a}")).collect::<Vec<_>>()}),
    };
    Ok((GramOutput { input_hash: loaded.hash, analysis, reconstructions }, summary))
}
