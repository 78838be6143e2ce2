use erf4::analysis::certify::{
    ERFC_REL_PERCENT_B, ERF_ABS_BOUND, ERF_REL_BOUND, PHI_ABS_BOUND, PHI_REL_BOUND, Q_REL_PERCENT_B,
};
use erf4::approx::{ERF_COEFFS, PHI_COEFFS};
use erf4::{RationalExponentCoeffs, Target};
use serde::Serialize;

use crate::output::{self, Format};
use crate::CliError;

#[derive(Debug, Serialize)]
struct Item {
    item: &'static str,
    function: Target,
    formula: &'static str,
    n1: f64,
    n2: f64,
    d0: f64,
    d1: f64,
    d2: f64,
    abs_bound: f64,
    rel_bound: String,
    crossover: f64,
    saturation: f64,
}

fn items() -> Vec<Item> {
    let percent = |b: f64| format!("1% on [0,b], b>{b}");
    let item = |item, function: Target, formula, c: RationalExponentCoeffs, abs_bound, rel_bound| Item {
        item,
        function,
        formula,
        n1: c.n1,
        n2: c.n2,
        d0: c.d0,
        d1: c.d1,
        d2: c.d2,
        abs_bound,
        rel_bound,
        crossover: function.crossover(),
        saturation: function.saturation(),
    };
    vec![
        item("A", Target::Erf, "sqrt(1 - exp(E(x)))", ERF_COEFFS, ERF_ABS_BOUND,
            format!("{ERF_REL_BOUND:e} for x >= 0")),
        item("B", Target::Erfc, "1 - sqrt(1 - exp(E(x)))", ERF_COEFFS, ERF_ABS_BOUND,
            percent(ERFC_REL_PERCENT_B)),
        item("C", Target::Phi, "1/2 + 1/2 sqrt(1 - exp(E(x)))", PHI_COEFFS, PHI_ABS_BOUND,
            format!("{PHI_REL_BOUND:e} for x >= 0")),
        item("D", Target::Q, "1/2 - 1/2 sqrt(1 - exp(E(x)))", PHI_COEFFS, PHI_ABS_BOUND,
            percent(Q_REL_PERCENT_B)),
    ]
}

pub fn run(format: Format) -> Result<(), CliError> {
    let items = items();
    match format {
        Format::Human => {
            println!("E(x) = (n1 x^2 + n2 x^4) / (d0 + d1 x^2 + d2 x^4)");
            println!();
            let cells: Vec<Vec<String>> = items
                .iter()
                .map(|i| {
                    vec![
                        i.item.to_string(),
                        i.function.to_string(),
                        i.formula.to_string(),
                        format!(
                            "{} {} {} {} {}",
                            i.n1, i.n2, i.d0, i.d1, i.d2
                        ),
                        format!("{:e}", i.abs_bound),
                        i.rel_bound.clone(),
                        format!("{} -> {}", i.crossover, i.saturation),
                    ]
                })
                .collect();
            output::write_table(
                &["item", "function", "formula", "n1 n2 d0 d1 d2", "abs bound", "rel bound", "crossover"],
                &cells,
            )
        }
        Format::Csv => output::write_records(format, &items),
        Format::Json => output::write_json(&items),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn footnote_texts() {
        let items = items();
        assert_eq!(items[3].rel_bound, "1% on [0,b], b>3.053");
        assert_eq!(items[1].rel_bound, "1% on [0,b], b>2.1588");
        assert_eq!(items[2].crossover, 5.834);
        assert_eq!(items[0].abs_bound, 2.27e-5);
    }
}
