use serde::{Deserialize, Serialize};

use super::DataflowError;

/// A map from a finite point set `0..len` to the reals.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedImage {
    values: Vec<f64>,
}

impl GeneralizedImage {
    pub fn new(values: Vec<f64>) -> Self {
        GeneralizedImage { values }
    }

    pub fn zeros(len: usize) -> Self {
        Self::constant(len, 0.0)
    }

    pub fn constant(len: usize, v: f64) -> Self {
        GeneralizedImage { values: vec![v; len] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        GeneralizedImage { values: self.values.iter().map(|v| f(*v)).collect() }
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|v| c * v)
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Self {
        GeneralizedImage { values: self.values.iter().zip(&other.values).map(|(x, y)| x * y).collect() }
    }

    /// `out[i] = in[(i − by) mod len]`.
    pub fn rotate(&self, by: i64) -> Self {
        let n = self.values.len();
        if n == 0 {
            return self.clone();
        }
        let k = by.rem_euclid(n as i64) as usize;
        let mut values = self.values.clone();
        values.rotate_right(k);
        GeneralizedImage { values }
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values.iter().zip(&other.values).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    pub fn bits_eq(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(x, y)| x.to_bits() == y.to_bits())
    }
}

impl From<Vec<f64>> for GeneralizedImage {
    fn from(values: Vec<f64>) -> Self {
        GeneralizedImage::new(values)
    }
}

/// Pointwise `Σ cᵢ·imageᵢ`.
pub fn image_lincomb(coeffs: &[f64], images: &[GeneralizedImage]) -> Result<GeneralizedImage, DataflowError> {
    let first = images.first().ok_or(DataflowError::EmptyCombination)?;
    if coeffs.len() != images.len() {
        return Err(DataflowError::ShapeMismatch(format!("{} coefficients for {} images", coeffs.len(), images.len())));
    }
    let n = first.len();
    let mut acc = vec![0.0; n];
    for (c, img) in coeffs.iter().zip(images) {
        if img.len() != n {
            return Err(DataflowError::SizeMismatch { expected: n, got: img.len() });
        }
        for (a, v) in acc.iter_mut().zip(&img.values) {
            *a += c * v;
        }
    }
    Ok(GeneralizedImage::new(acc))
}

/// Mirror `i ↦ pair_sum − i` restricted to a mask closed under the mirror.
///
/// With `pair_sum = len − 1` the axis is the center of the image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reflection {
    pub pair_sum: usize,
    pub mask: Vec<usize>,
}

impl Reflection {
    pub fn new(pair_sum: usize, mut mask: Vec<usize>) -> Self {
        mask.sort_unstable();
        mask.dedup();
        Reflection { pair_sum, mask }
    }

    /// Whole-image reflection about the center.
    pub fn full(len: usize) -> Self {
        Reflection::new(len.saturating_sub(1), (0..len).collect())
    }

    /// Every masked index has its mirror inside the image and inside the mask.
    pub fn validate(&self, len: usize) -> Result<(), DataflowError> {
        let symmetric = self
            .mask
            .iter()
            .all(|&i| i < len && i <= self.pair_sum && self.mask.binary_search(&(self.pair_sum - i)).is_ok());
        if symmetric {
            Ok(())
        } else {
            Err(DataflowError::AsymmetricMask(self.pair_sum))
        }
    }

    pub(crate) fn apply_unchecked(&self, img: &GeneralizedImage) -> GeneralizedImage {
        let mut values = img.values.clone();
        for &i in &self.mask {
            values[i] = img.values[self.pair_sum - i];
        }
        GeneralizedImage { values }
    }
}

/// Reflects values inside the mask; outside the mask the image is unchanged.
pub fn reflect_image(img: &GeneralizedImage, reflection: &Reflection) -> Result<GeneralizedImage, DataflowError> {
    reflection.validate(img.len())?;
    Ok(reflection.apply_unchecked(img))
}
