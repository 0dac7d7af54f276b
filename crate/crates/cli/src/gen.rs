use serde_json::json;

use crate::config::{check_dimension, GenArgs, Kind};
use crate::error::CliError;
use crate::Summary;
use equilines::sicgen::{gen_complex_full, gen_real_system, gen_wh_system, Alpha, SignMatrix, SystemFile};

/// Parse `+,-,+` (or `1,-1,1`) as the upper triangle of an n×n sign matrix.
pub fn parse_signs(text: &str, n: usize) -> Result<SignMatrix, CliError> {
    let upper = text
        .split(',')
        .map(|s| match s.trim() {
            "+" | "1" | "+1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(CliError::Config(format!("bad sign `{other}`"))),
        })
        .collect::<Result<Vec<i8>, _>>()?;
    Ok(SignMatrix::from_upper(n, &upper)?)
}

pub fn cmd_gen(args: &GenArgs) -> Result<(SystemFile, Summary), CliError> {
    check_dimension(args.d)?;
    if args.kind != Kind::Real && (args.n.is_some() || args.alpha.is_some() || args.signs.is_some()) {
        return Err(CliError::Config("--n, --alpha and --signs apply to --kind real only".into()));
    }
    let system = match args.kind {
        Kind::ComplexFull => gen_complex_full(args.d)?,
        Kind::Wh => gen_wh_system(args.d, !args.no_phase_fix)?,
        Kind::Real => {
            let n = args.n.ok_or_else(|| CliError::Config("--kind real needs --n".into()))?;
            let alpha: Alpha = args.alpha.as_deref().unwrap_or("alpha").parse()?;
            let signs = args.signs.as_deref().map(|s| parse_signs(s, n)).transpose()?;
            gen_real_system(args.d, n, &alpha, signs.as_ref())?
        }
    };
    let file = system.to_file();
    let summary = Summary {
        text: format!("equations={} vars={} field={}", file.equations.len(), file.vars.len(), file.field),
        json: json!({"equations": file.equations.len(), "vars": file.vars.len(), "field": file.field}),
    };
    Ok((file, summary))
}
