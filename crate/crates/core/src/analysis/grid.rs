use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Uniform,
    Log,
}

/// A finite set of abscissae `start = x_0 < … < x_{count-1} = end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn uniform(start: f64, end: f64, count: usize) -> Result<Self> {
        let g = GridSpec {
            start,
            end,
            count,
            spacing: Spacing::Uniform,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn log(start: f64, end: f64, count: usize) -> Result<Self> {
        let g = GridSpec {
            start,
            end,
            count,
            spacing: Spacing::Log,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.end.is_finite()) {
            return Err(Error::InvalidGrid("endpoints must be finite".into()));
        }
        if !(self.start < self.end) {
            return Err(Error::InvalidGrid(format!(
                "start {} must be below end {}",
                self.start, self.end
            )));
        }
        if self.count < 2 {
            return Err(Error::InvalidGrid("count must be at least 2".into()));
        }
        if self.spacing == Spacing::Log && self.start <= 0.0 {
            return Err(Error::InvalidGrid(
                "log spacing needs a positive start".into(),
            ));
        }
        Ok(())
    }

    /// The `i`-th abscissa. Endpoints are reproduced exactly.
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.count);
        if i == 0 {
            return self.start;
        }
        if i + 1 == self.count {
            return self.end;
        }
        let t = i as f64 / (self.count - 1) as f64;
        match self.spacing {
            Spacing::Uniform => self.start + (self.end - self.start) * t,
            Spacing::Log => (self.start.ln() + (self.end.ln() - self.start.ln()) * t).exp(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    /// Same endpoints, `2·count - 1` points: every old point plus midpoints.
    pub fn refined(&self) -> Self {
        GridSpec {
            count: 2 * self.count - 1,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::uniform(1.0, 1.0, 10).is_err());
        assert!(GridSpec::uniform(0.0, 1.0, 1).is_err());
        assert!(GridSpec::log(0.0, 1.0, 10).is_err());
        assert!(GridSpec::uniform(0.0, f64::INFINITY, 10).is_err());
    }

    #[test]
    fn endpoints_exact_and_increasing() {
        for g in [
            GridSpec::uniform(0.0, 8.0, 1001).unwrap(),
            GridSpec::log(1e-8, 40.0, 777).unwrap(),
        ] {
            let pts: Vec<f64> = g.points().collect();
            assert_eq!(pts.len(), g.count);
            assert_eq!(pts[0], g.start);
            assert_eq!(*pts.last().unwrap(), g.end);
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn refinement_keeps_old_points() {
        let g = GridSpec::uniform(0.0, 8.0, 101).unwrap();
        let r = g.refined();
        for i in 0..g.count {
            assert!((r.point(2 * i) - g.point(i)).abs() < 1e-15);
        }
    }
}
