use erf4::analysis::GridSpec;
use erf4::{ApproxFunction, Oracle, Target, Variant};
use serde::Serialize;

use crate::output::{self, sci, sci_opt, Format};
use crate::{CliError, EvalVariant};

#[derive(Debug, Serialize)]
struct Row {
    x: f64,
    value: f64,
    oracle: f64,
    abs_err: f64,
    rel_err: Option<f64>,
}

pub fn run(
    format: Format,
    target: Target,
    variant: EvalVariant,
    xs: Vec<f64>,
    grid: Option<(f64, f64)>,
    grid_count: usize,
) -> Result<(), CliError> {
    let xs = match (xs.is_empty(), grid) {
        (false, None) => xs,
        (true, Some((lo, hi))) => GridSpec::uniform(lo, hi, grid_count)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .points()
            .collect(),
        (false, Some(_)) => return Err(CliError::Usage("give either x values or --grid, not both".into())),
        (true, None) => return Err(CliError::Usage("no x values (list them or use --grid lo:hi)".into())),
    };

    let approx = match variant {
        EvalVariant::Improved => Some(Variant::Improved),
        EvalVariant::Winitzki => Some(Variant::Winitzki),
        EvalVariant::Clamped => Some(Variant::Clamped),
        EvalVariant::Oracle => None,
    }
    .map(|v| ApproxFunction::new(target, v))
    .transpose()
    .map_err(|e| CliError::Usage(e.to_string()))?;

    let oracle = Oracle::default();
    let mut rows = Vec::with_capacity(xs.len());
    for x in xs {
        let reference = oracle
            .eval(target, x)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let value = match approx {
            Some(f) => f.eval(x).map_err(|e| CliError::Usage(e.to_string()))?,
            None => reference,
        };
        let abs_err = (value - reference).abs();
        let rel_err = (reference != 0.0).then(|| abs_err / reference.abs());
        rows.push(Row {
            x,
            value,
            oracle: reference,
            abs_err,
            rel_err,
        });
    }

    match format {
        Format::Human => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![sci(r.x), sci(r.value), sci(r.oracle), sci(r.abs_err), sci_opt(r.rel_err)])
                .collect();
            output::write_table(&["x", "value", "oracle", "abs_err", "rel_err"], &cells)
        }
        _ => output::write_records(format, &rows),
    }
}
