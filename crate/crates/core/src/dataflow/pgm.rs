//! Binary PGM (P5) output. Values map linearly from `[lo, hi]` onto
//! `0..=255` with clamping; for a range symmetric about zero, zero lands on
//! mid-gray 128.

use super::image::GeneralizedImage;
use super::DataflowError;

pub const MID_GRAY: u8 = 128;

fn gray(v: f64, lo: f64, hi: f64) -> u8 {
    let t = (v.clamp(lo, hi) - lo) / (hi - lo);
    // NaN saturates to 0
    (t * 255.0).round() as u8
}

fn check_range(lo: f64, hi: f64) -> Result<(), DataflowError> {
    if lo < hi && lo.is_finite() && hi.is_finite() {
        Ok(())
    } else {
        Err(DataflowError::BadRange(lo, hi))
    }
}

fn encode(width: usize, height: usize, pixels: impl Iterator<Item = u8>) -> Vec<u8> {
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend(pixels);
    out
}

/// A single image as a one-row PGM.
pub fn render_pgm(img: &GeneralizedImage, lo: f64, hi: f64) -> Result<Vec<u8>, DataflowError> {
    check_range(lo, hi)?;
    Ok(encode(img.len(), 1, img.values().iter().map(|v| gray(*v, lo, hi))))
}

/// Several equally sized images, each laid out `width` points per row and
/// stacked top to bottom.
pub fn render_frame(images: &[GeneralizedImage], width: usize, lo: f64, hi: f64) -> Result<Vec<u8>, DataflowError> {
    check_range(lo, hi)?;
    let len = images.first().map_or(0, GeneralizedImage::len);
    if width == 0 || !len.is_multiple_of(width) {
        return Err(DataflowError::ShapeMismatch(format!("image of {len} points is not a multiple of width {width}")));
    }
    if let Some(img) = images.iter().find(|i| i.len() != len) {
        return Err(DataflowError::SizeMismatch { expected: len, got: img.len() });
    }
    let height = images.len() * (len / width);
    let pixels = images.iter().flat_map(|img| img.values().iter().map(|v| gray(*v, lo, hi)));
    Ok(encode(width, height, pixels))
}
