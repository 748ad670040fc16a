use crate::error::{Error, Result};

/// Comma separated items together with their byte offsets in `s`.
pub(crate) fn items(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in s.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((start + lead, piece.trim()));
        start += piece.len() + 1;
    }
    out
}

pub(crate) fn number(offset: usize, item: &str) -> Result<usize> {
    if item.is_empty() {
        return Err(Error::Parse { position: offset, message: "expected a number".into() });
    }
    item.parse::<usize>()
        .map_err(|_| Error::Parse { position: offset, message: format!("`{item}` is not a non-negative integer") })
}

pub(crate) fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
