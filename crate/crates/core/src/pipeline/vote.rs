use crate::error::{Error, Result};
use crate::seq::SymbolString;

/// Column-wise plurality over equal-length regions; ties go to the smallest
/// symbol index.
pub fn voting_phase<S: AsRef<[u8]>>(regions: &[S]) -> Result<SymbolString> {
    let first = regions
        .first()
        .ok_or_else(|| Error::InvalidArgument("voting needs at least one region".into()))?
        .as_ref();
    let m = first.len();
    if let Some(bad) = regions.iter().position(|r| r.as_ref().len() != m) {
        return Err(Error::InvalidArgument(format!(
            "region {} has length {}, expected {m}",
            bad + 1,
            regions[bad].as_ref().len()
        )));
    }
    let mut out = Vec::with_capacity(m);
    let mut counts = [0usize; 256];
    for j in 0..m {
        counts.fill(0);
        for r in regions {
            counts[r.as_ref()[j] as usize] += 1;
        }
        // max_by_key keeps the last maximum, so scan indices in reverse
        let best = (0..256).rev().max_by_key(|&c| counts[c]).unwrap_or(0);
        out.push(best as u8);
    }
    Ok(SymbolString::new(out))
}
