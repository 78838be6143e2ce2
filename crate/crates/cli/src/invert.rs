use erf4::inverse::{invert, Polish};
use erf4::Target;
use serde::Serialize;

use crate::output::{self, sci, sci_opt, Format};
use crate::CliError;

#[derive(Debug, Serialize)]
struct Row {
    y: f64,
    x: Option<f64>,
    residual: Option<f64>,
    error: Option<String>,
}

pub fn run(format: Format, target: Target, ys: &[f64], polish: bool) -> Result<(), CliError> {
    let polish = if polish { Polish::Newton } else { Polish::None };
    let rows: Vec<Row> = ys
        .iter()
        .map(|&y| match invert(target, y, polish) {
            Ok(r) => Row {
                y,
                x: Some(r.x),
                residual: Some(r.residual),
                error: None,
            },
            Err(e) => Row {
                y,
                x: None,
                residual: None,
                error: Some(e.to_string()),
            },
        })
        .collect();

    match format {
        Format::Human => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        sci(r.y),
                        sci_opt(r.x),
                        sci_opt(r.residual),
                        r.error.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            output::write_table(&["y", "x", "residual", "error"], &cells)?;
        }
        _ => output::write_records(format, &rows)?,
    }

    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} of {} values could not be inverted", rows.len())));
    }
    Ok(())
}
