use std::fmt::Write as _;

use crate::cc::{CoherentConfiguration, ColorMatrix};
use crate::error::{Error, Result};

/// Content lines with their 1-based line numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace().map(|w| w.parse().map_err(|_| Error::parse(line, format!("not a number: {w:?}")))).collect()
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, what: &str) -> Result<(usize, usize)> {
    let (line, text) = lines.next().ok_or_else(|| Error::parse(0, format!("missing {what} header")))?;
    match numbers::<usize>(line, text)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(Error::parse(line, format!("{what} header must have two numbers"))),
    }
}

/// Parses the `.ccm` format: a header `n r`, then `n` rows of `n` colors
/// in `0..r`. Lines starting with `#` are comments.
pub fn parse_ccm(text: &str) -> Result<ColorMatrix> {
    let mut lines = content_lines(text);
    let (n, r) = header(&mut lines, "ccm")?;
    if n == 0 {
        return Err(Error::parse(0, "degree must be positive"));
    }
    let mut cells = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, text) in lines {
        if rows == n {
            return Err(Error::parse(line, format!("more than {n} rows")));
        }
        let row: Vec<u32> = numbers(line, text)?;
        if row.len() != n {
            return Err(Error::parse(line, format!("row has {} colors, expected {n}", row.len())));
        }
        if let Some(c) = row.iter().find(|&&c| c as usize >= r) {
            return Err(Error::parse(line, format!("color {c} outside 0..{r}")));
        }
        cells.extend(row);
        rows += 1;
    }
    if rows != n {
        return Err(Error::parse(0, format!("expected {n} rows, found {rows}")));
    }
    ColorMatrix::new(n, cells)
}

pub fn to_ccm(cc: &CoherentConfiguration) -> String {
    let mut out = format!("{} {}\n", cc.degree(), cc.rank());
    for row in cc.matrix().rows() {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// One permutation per line, as the list of images of `0..degree`.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Vec<usize>>> {
    let mut gens = Vec::new();
    for (line, text) in content_lines(text) {
        let g: Vec<usize> = numbers(line, text)?;
        if g.len() != degree {
            return Err(Error::parse(line, format!("generator has {} images, expected {degree}", g.len())));
        }
        gens.push(g);
    }
    Ok(gens)
}

/// A Cayley table: `g` lines of `g` element indices.
pub fn parse_group_table(text: &str) -> Result<Vec<Vec<usize>>> {
    let rows: Vec<Vec<usize>> = content_lines(text).map(|(line, text)| numbers(line, text)).collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::parse(0, "empty group table"));
    }
    Ok(rows)
}

/// An edge list with header `n m` followed by `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines, "graph")?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        match *numbers::<usize>(line, text)?.as_slice() {
            [u, v] if u < n && v < n => edges.push((u, v)),
            [u, v] => return Err(Error::parse(line, format!("edge ({u}, {v}) outside 0..{n}"))),
            _ => return Err(Error::parse(line, "edge must have two endpoints")),
        }
    }
    if edges.len() != m {
        return Err(Error::parse(0, format!("expected {m} edges, found {}", edges.len())));
    }
    Ok((n, edges))
}
