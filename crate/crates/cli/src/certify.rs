use erf4::analysis::{certify, CertifyOptions};
use erf4::Error;
use serde::Serialize;

use crate::output::{self, sci, Format};
use crate::CliError;

#[derive(Debug, Serialize)]
struct ClaimRow<'a> {
    id: &'a str,
    statement: &'a str,
    observed: f64,
    relation: String,
    pass: bool,
}

pub fn run(format: Format, grid_count: usize) -> Result<(), CliError> {
    let opts = CertifyOptions {
        grid_count,
        ..CertifyOptions::default()
    };
    let cert = certify(&opts).map_err(|e| match e {
        Error::InvalidGrid(_) | Error::InvalidConfig(_) => CliError::Usage(e.to_string()),
        _ => CliError::Failed(e.to_string()),
    })?;

    match format {
        Format::Human => {
            for r in &cert.reports {
                println!(
                    "{:<16} max_abs {} at x = {:.6}; max_rel {} at x = {:.6} ({} points)",
                    r.function.to_string(),
                    sci(r.max_abs),
                    r.argmax_abs,
                    sci(r.max_rel),
                    r.argmax_rel,
                    r.points
                );
            }
            println!();
            let cells: Vec<Vec<String>> = cert
                .claims
                .iter()
                .map(|c| {
                    vec![
                        if c.pass { "PASS" } else { "FAIL" }.to_string(),
                        c.id.to_string(),
                        sci(c.observed),
                        c.relation.describe(),
                        c.statement.to_string(),
                    ]
                })
                .collect();
            output::write_table(&["verdict", "claim", "observed", "required", "statement"], &cells)?;
        }
        Format::Csv => {
            let rows: Vec<ClaimRow> = cert
                .claims
                .iter()
                .map(|c| ClaimRow {
                    id: c.id,
                    statement: c.statement,
                    observed: c.observed,
                    relation: c.relation.describe(),
                    pass: c.pass,
                })
                .collect();
            output::write_records(format, &rows)?;
        }
        Format::Json => output::write_json(&cert)?,
    }

    let failed: Vec<&str> = cert.failures().map(|c| c.id).collect();
    if !failed.is_empty() {
        return Err(CliError::Failed(format!("certification failed: {}", failed.join(", "))));
    }
    Ok(())
}
