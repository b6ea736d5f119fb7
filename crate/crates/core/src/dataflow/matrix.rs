use super::DataflowError;

/// Dense row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl WeightMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        WeightMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>, cols: usize) -> Result<Self, DataflowError> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(DataflowError::ShapeMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(WeightMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self, DataflowError> {
        if self.shape() != other.shape() {
            return Err(DataflowError::ShapeMismatch(format!("{:?} vs {:?}", self.shape(), other.shape())));
        }
        let data = self.data.iter().zip(&other.data).map(|(x, y)| f(*x, *y)).collect();
        Ok(WeightMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, DataflowError> {
        self.zip(other, |x, y| x - y)
    }

    pub fn scale(&self, c: f64) -> Self {
        WeightMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    /// Point on the segment from `self` (`t = 0`) to `other` (`t = 1`).
    ///
    /// The endpoints are returned exactly, and equal matrices give back
    /// `self` for every `t`.
    pub fn lerp(&self, other: &Self, t: f64) -> Result<Self, DataflowError> {
        if t == 0.0 {
            return self.zip(other, |x, _| x);
        }
        if t == 1.0 {
            return self.zip(other, |_, y| y);
        }
        self.zip(other, |x, y| x + t * (y - x))
    }

    /// Induced sup norm: the largest row abs sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.rows).map(|r| self.row(r).iter().map(|x| x.abs()).sum()).fold(0.0, f64::max)
    }

    /// Copy with `extra_rows` zero rows and `extra_cols` zero columns appended.
    pub fn padded(&self, extra_rows: usize, extra_cols: usize) -> Self {
        let mut out = WeightMatrix::zeros(self.rows + extra_rows, self.cols + extra_cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }
}
