use std::hint::black_box;
use std::time::Instant;

use erf4::{clamped, erf_approx, erf_approx_inv, phi_approx, winitzki_erf, Oracle, Target};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::output::{self, Format};
use crate::CliError;

pub const MIN_EVALS: usize = 10_000;

#[derive(Debug, Serialize)]
struct Row {
    function: &'static str,
    evals: usize,
    ns_per_eval: f64,
    /// Sum of all results; keeps the work observable.
    sink: f64,
}

fn time(name: &'static str, n: usize, inputs: &[f64], f: impl Fn(f64) -> f64) -> Row {
    let mut sink = 0.0;
    let start = Instant::now();
    for i in 0..n {
        sink += f(black_box(inputs[i % inputs.len()]));
    }
    let elapsed = start.elapsed();
    Row {
        function: name,
        evals: n,
        ns_per_eval: elapsed.as_nanos() as f64 / n as f64,
        sink: black_box(sink),
    }
}

pub fn run(format: Format, n: usize, batch: usize, seed: u64) -> Result<(), CliError> {
    if n < MIN_EVALS {
        return Err(CliError::Usage(format!("bench needs n >= {MIN_EVALS}, got {n}")));
    }
    if batch == 0 {
        return Err(CliError::Usage("--batch must be positive".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..batch).map(|_| rng.gen_range(-6.0..6.0)).collect();
    let ys: Vec<f64> = (0..batch).map(|_| rng.gen_range(-0.999999..0.999999)).collect();
    let oracle = Oracle::default();

    // Inputs are finite and in range, so none of these can fail.
    let rows = vec![
        time("erf_approx", n, &xs, |x| erf_approx(x).unwrap()),
        time("winitzki_erf", n, &xs, |x| winitzki_erf(x).unwrap()),
        time("clamped_erf", n, &xs, |x| clamped(Target::Erf, x).unwrap()),
        time("phi_approx", n, &xs, |x| phi_approx(x).unwrap()),
        time("erf_approx_inv", n, &ys, |y| erf_approx_inv(y).unwrap().x),
        time("oracle_erf", n, &xs, |x| oracle.erf(x).unwrap()),
        time("libm_erf", n, &xs, libm::erf),
    ];

    match format {
        Format::Human => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.function.to_string(), format!("{:.2}", r.ns_per_eval), r.evals.to_string()])
                .collect();
            output::write_table(&["function", "ns/eval", "evals"], &cells)
        }
        _ => output::write_records(format, &rows),
    }
}
