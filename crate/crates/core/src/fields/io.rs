//! Flat binary container for grid fields.
//!
//! Layout, all little-endian 64-bit: `dim: u64`, `N: u64`, `L: f64`, then
//! `N^d` samples as interleaved `re: f64`, `im: f64`.

use std::io::{Read, Write};

use num_complex::Complex64;

use super::GridField;
use crate::error::{Error, Result};

impl GridField {
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(&(self.dim() as u64).to_le_bytes())?;
        out.write_all(&(self.points_per_axis() as u64).to_le_bytes())?;
        out.write_all(&self.half_width().to_le_bytes())?;
        let mut buf = Vec::with_capacity(self.samples().len() * 16);
        for z in self.samples() {
            buf.extend_from_slice(&z.re.to_le_bytes());
            buf.extend_from_slice(&z.im.to_le_bytes());
        }
        out.write_all(&buf)?;
        Ok(())
    }

    pub fn read_from<R: Read>(mut input: R) -> Result<GridField> {
        let mut word = [0u8; 8];
        let mut next = |input: &mut R| -> Result<[u8; 8]> {
            input
                .read_exact(&mut word)
                .map_err(|e| Error::Format(format!("truncated container: {e}")))?;
            Ok(word)
        };
        let dim = u64::from_le_bytes(next(&mut input)?);
        let n = u64::from_le_bytes(next(&mut input)?);
        let half_width = f64::from_le_bytes(next(&mut input)?);
        if !(1..=3).contains(&dim) || n > 1 << 20 {
            return Err(Error::Format(format!("bad header: dim={dim}, N={n}")));
        }
        let total = (n as usize).pow(dim as u32);
        let mut samples = Vec::with_capacity(total);
        for _ in 0..total {
            let re = f64::from_le_bytes(next(&mut input)?);
            let im = f64::from_le_bytes(next(&mut input)?);
            samples.push(Complex64::new(re, im));
        }
        GridField::from_samples(dim as usize, half_width, n as usize, samples)
    }
}
