//! Free groups, braid words and the Artin action, pure-braid generators,
//! and the Heisenberg group as a small Malcev example.

mod braid;
mod free;
mod heisenberg;

pub use braid::{artin_images, braid_eq, delta, full_twist, permutation, xi, BraidWord, Permutation};
pub use free::FreeWord;
pub use heisenberg::HeisenbergPoint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator index {index} out of range for {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid indices for xi: i={i}, j={j}, n={n}")]
    BadXi { i: usize, j: usize, n: usize },
    #[error("delta index r={r} outside 2..={n}")]
    BadDelta { r: usize, n: usize },
    #[error("cannot parse word {0:?}")]
    Parse(String),
}

/// Parses "g3^-1"-style tokens with a fixed one-letter prefix; indices are 1-based.
fn parse_tokens(s: &str, prefix: char) -> Result<Vec<(usize, i8)>, GroupError> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let bad = || GroupError::Parse(tok.to_string());
        let body = tok.strip_prefix(prefix).ok_or_else(bad)?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        let sign = if exp > 0 { 1 } else { -1 };
        for _ in 0..exp.unsigned_abs() {
            out.push((idx - 1, sign));
        }
    }
    Ok(out)
}

fn format_tokens(letters: &[(usize, i8)], prefix: char) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters
        .iter()
        .map(|&(i, e)| if e > 0 { format!("{prefix}{}", i + 1) } else { format!("{prefix}{}^-1", i + 1) })
        .collect::<Vec<_>>()
        .join(" ")
}
