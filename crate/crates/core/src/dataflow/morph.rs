use super::matrix::WeightMatrix;
use super::DataflowError;

/// How the interpolation parameter moves from 0 towards 1.
#[derive(Debug, Clone, PartialEq)]
pub enum Ramp {
    /// `λ(t) = min(t / ticks, 1)`.
    Linear,
    /// Explicit values per tick; the last value holds afterwards.
    Table(Vec<f64>),
}

/// A path through weight space: at tick `t` the engine runs with
/// `(1−λ(t))·start + λ(t)·end`.
#[derive(Debug, Clone, PartialEq)]
pub struct MorphSchedule {
    start: WeightMatrix,
    end: WeightMatrix,
    ticks: usize,
    ramp: Ramp,
}

impl MorphSchedule {
    pub fn new(start: WeightMatrix, end: WeightMatrix, ticks: usize) -> Result<Self, DataflowError> {
        if start.shape() != end.shape() {
            return Err(DataflowError::ShapeMismatch(format!(
                "start is {:?}, end is {:?}",
                start.shape(),
                end.shape()
            )));
        }
        if ticks == 0 {
            return Err(DataflowError::ShapeMismatch("a morph needs at least one tick".into()));
        }
        Ok(MorphSchedule { start, end, ticks, ramp: Ramp::Linear })
    }

    pub fn with_ramp(mut self, ramp: Ramp) -> Result<Self, DataflowError> {
        if let Ramp::Table(v) = &ramp {
            if v.is_empty() || v.iter().any(|l| !(0.0..=1.0).contains(l)) {
                return Err(DataflowError::ShapeMismatch("ramp values must be a nonempty list in [0,1]".into()));
            }
        }
        self.ramp = ramp;
        Ok(self)
    }

    pub fn start(&self) -> &WeightMatrix {
        &self.start
    }

    pub fn end(&self) -> &WeightMatrix {
        &self.end
    }

    pub fn ticks(&self) -> usize {
        self.ticks
    }

    pub fn lambda(&self, t: usize) -> f64 {
        match &self.ramp {
            Ramp::Linear => (t as f64 / self.ticks as f64).min(1.0),
            Ramp::Table(v) => v[t.min(v.len() - 1)],
        }
    }

    pub fn weights_at(&self, t: usize) -> WeightMatrix {
        self.start.lerp(&self.end, self.lambda(t)).expect("shapes checked at construction")
    }

    /// Matrices for the first `ticks` steps.
    pub fn weight_sequence(&self, ticks: usize) -> Vec<WeightMatrix> {
        (0..ticks).map(|t| self.weights_at(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_ramp_clamps() {
        let s = MorphSchedule::new(WeightMatrix::zeros(1, 1), WeightMatrix::from_rows(vec![vec![2.0]], 1).unwrap(), 4)
            .unwrap();
        assert_eq!(s.lambda(0), 0.0);
        assert_eq!(s.lambda(2), 0.5);
        assert_eq!(s.lambda(9), 1.0);
        assert_eq!(s.weights_at(1).get(0, 0), 0.5);
        assert_eq!(s.weights_at(100).get(0, 0), 2.0);
    }

    #[test]
    fn table_ramp() {
        let s = MorphSchedule::new(WeightMatrix::zeros(1, 1), WeightMatrix::zeros(1, 1), 3)
            .unwrap()
            .with_ramp(Ramp::Table(vec![0.0, 0.25, 1.0]))
            .unwrap();
        assert_eq!(s.lambda(1), 0.25);
        assert_eq!(s.lambda(7), 1.0);
        let bad = MorphSchedule::new(WeightMatrix::zeros(1, 1), WeightMatrix::zeros(1, 1), 3)
            .unwrap()
            .with_ramp(Ramp::Table(vec![1.5]));
        assert!(bad.is_err());
    }

    #[test]
    fn shape_mismatch() {
        assert!(MorphSchedule::new(WeightMatrix::zeros(1, 1), WeightMatrix::zeros(1, 2), 3).is_err());
        assert!(MorphSchedule::new(WeightMatrix::zeros(1, 1), WeightMatrix::zeros(1, 1), 0).is_err());
    }
}
