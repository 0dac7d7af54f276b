use std::path::PathBuf;
use std::time::Duration;

use serde_json::json;

use crate::config::{GroebnerArgs, Pipeline};
use crate::error::CliError;
use crate::io::{read_json, to_pretty, write_text};
use crate::Summary;
use equilines::exact::Field;
use equilines::groebner::{
    buchberger, content_hash, grevlex_then_lex, reduce_basis, BasisFile, BuchbergerConfig, GroebnerError,
};
use equilines::par::Execution;
use equilines::polyring::{MonomialOrder, Poly};
use equilines::sicgen::{Equations, SystemFile};

fn compute<K: Field>(gens: &[Poly<K>], args: &GroebnerArgs, input_hash: &str) -> Result<BasisFile, GroebnerError> {
    let config = BuchbergerConfig {
        pair_budget: args.pair_budget,
        time_limit: args.time_limit.map(Duration::from_secs),
        execution: Execution::default(),
        ..BuchbergerConfig::default()
    };
    let gb = match args.order {
        Pipeline::Lex => reduce_basis(&buchberger(gens, MonomialOrder::Lex, &config)?),
        Pipeline::GrevlexThenLex => grevlex_then_lex(gens, &config)?,
    };
    Ok(BasisFile::new(&gb, gens, input_hash, args.order.name()))
}

fn cache_path(args: &GroebnerArgs, input_hash: &str) -> Option<PathBuf> {
    let key = content_hash(format!("{input_hash}:{}", args.order.name()).as_bytes());
    args.cache_dir.as_ref().map(|dir| dir.join(format!("{key}.json")))
}

fn cached(path: &std::path::Path, input_hash: &str, args: &GroebnerArgs) -> Option<BasisFile> {
    let file = read_json::<BasisFile>(path).ok()?.value;
    (file.input_hash == input_hash && file.pipeline == args.order.name()).then_some(file)
}

pub fn cmd_groebner(args: &GroebnerArgs) -> Result<(BasisFile, Summary), CliError> {
    let loaded = read_json::<SystemFile>(&args.input)?;
    let hash = loaded.hash;
    let cache = cache_path(args, &hash);
    let hit = if args.force { None } else { cache.as_ref().and_then(|p| cached(p, &hash, args)) };
    let from_cache = hit.is_some();
    let file = match hit {
        Some(file) => file,
        None => {
            let system = loaded.value.to_system().map_err(|e| CliError::from(e).at(&args.input))?;
            let file = match &system.equations {
                Equations::Rational(gens) => compute(gens, args, &hash),
                Equations::Cyclotomic(gens) => compute(gens, args, &hash),
            }
            .map_err(|e| CliError::from(e).at(&args.input))?;
            if let Some(path) = &cache {
                write_text(path, &to_pretty(&file))?;
            }
            file
        }
    };
    if from_cache {
        eprintln!("cache hit");
    }
    let summary = Summary {
        text: format!(
            "basis={} zero_dimensional={} quotient_dimension={} pairs={}",
            file.basis.len(),
            file.flags.zero_dimensional,
            file.quotient_dimension,
            file.stats.pairs_processed
        ),
        json: json!({
            "basis": file.basis.len(),
            "zero_dimensional": file.flags.zero_dimensional,
            "quotient_dimension": file.quotient_dimension,
            "pair_count": file.stats.pairs_processed,
            "cache_hit": from_cache,
        }),
    };
    Ok((file, summary))
}
