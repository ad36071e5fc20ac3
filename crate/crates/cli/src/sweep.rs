//! Weight families swept by `colpart sweep`.

use colpart::{Error, Result, WeightVector};

/// All `(k_0..k_l)` with the given sum, in descending lexicographic order.
pub fn compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    fn go(parts: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(parts - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(parts, total, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// The conjecture family of width `w` and level `k`: odd sugar for odd `w`
/// with reversed pairs listed once (the lexicographically larger one), even
/// sugar for even `w`.
pub fn family(width: usize, level: u32) -> Result<Vec<WeightVector>> {
    if width % 2 == 1 {
        let rank = (width - 1) / 2;
        if rank < 2 {
            return Err(Error::InvalidArgument(format!(
                "no product is conjectured for odd width {width}; use width 5 or more"
            )));
        }
        compositions(rank + 1, level)
            .into_iter()
            .filter(|k| k.iter().rev().le(k.iter()))
            .map(|k| WeightVector::odd(&k))
            .collect()
    } else {
        if width < 2 {
            return Err(Error::InvalidArgument(format!("width must be at least 2, got {width}")));
        }
        compositions(width / 2 + 1, level).iter().map(|k| WeightVector::even(k)).collect()
    }
}
