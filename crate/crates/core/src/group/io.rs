//! Readers for the `perm` and `cayley` text formats.
//!
//! ```text
//! perm 3          cayley 2
//! 2 1 3           0 1
//! 2 3 1           1 0
//! ```
//!
//! Permutation generators are written as 1-based image lists; Cayley rows as
//! 0-based indices with element 0 the identity. Lines starting with `#` are
//! comments.

use std::path::Path;

use super::{AssocCheck, CayleyTable, GroupError, GroupHandle, Permutation};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header(text: &str, keyword: &str) -> Result<(usize, usize), GroupError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(GroupError::Parse {
        line: 1,
        message: format!("missing `{keyword} <size>` header"),
    })?;
    let mut words = first.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(GroupError::Parse {
            line,
            message: format!("expected `{keyword} <size>` header"),
        });
    }
    let size = words
        .next()
        .and_then(|w| w.parse::<usize>().ok())
        .filter(|&s| s >= 1)
        .ok_or(GroupError::Parse {
            line,
            message: "size must be a positive integer".into(),
        })?;
    if words.next().is_some() {
        return Err(GroupError::Parse {
            line,
            message: "trailing tokens after size".into(),
        });
    }
    Ok((line, size))
}

fn parse_row(line: usize, body: &str) -> Result<Vec<u32>, GroupError> {
    body.split_whitespace()
        .map(|w| {
            w.parse::<u32>().map_err(|_| GroupError::Parse {
                line,
                message: format!("'{w}' is not a non-negative integer"),
            })
        })
        .collect()
}

pub fn parse_perm_group(text: &str, name: &str, cap: usize) -> Result<GroupHandle, GroupError> {
    let (header_line, degree) = header(text, "perm")?;
    let mut generators = Vec::new();
    for (line, body) in content_lines(text).skip_while(|(l, _)| *l <= header_line) {
        let row = parse_row(line, body)?;
        if row.len() != degree {
            return Err(GroupError::Parse {
                line,
                message: format!("expected {degree} images, found {}", row.len()),
            });
        }
        if row.contains(&0) {
            return Err(GroupError::Parse {
                line,
                message: "images are 1-based".into(),
            });
        }
        let perm =
            Permutation::from_images(row.into_iter().map(|x| x - 1).collect()).map_err(|e| GroupError::Parse {
                line,
                message: e.to_string(),
            })?;
        generators.push(perm);
    }
    GroupHandle::from_permutations(name, degree, &generators, cap)
}

pub fn parse_cayley(text: &str, name: &str, cap: usize, assoc: AssocCheck) -> Result<GroupHandle, GroupError> {
    let (header_line, order) = header(text, "cayley")?;
    if order > cap {
        return Err(GroupError::CapExceeded { cap, reached: order });
    }
    let mut rows = Vec::with_capacity(order);
    let mut last_line = header_line;
    for (line, body) in content_lines(text).skip_while(|(l, _)| *l <= header_line) {
        if rows.len() == order {
            return Err(GroupError::Parse {
                line,
                message: format!("more than {order} rows"),
            });
        }
        let row = parse_row(line, body)?;
        if row.len() != order {
            return Err(GroupError::Parse {
                line,
                message: format!("expected {order} entries, found {}", row.len()),
            });
        }
        if let Some(&x) = row.iter().find(|&&x| x as usize >= order) {
            return Err(GroupError::Parse {
                line,
                message: format!("entry {x} out of range"),
            });
        }
        rows.push(row);
        last_line = line;
    }
    if rows.len() != order {
        return Err(GroupError::Parse {
            line: last_line + 1,
            message: format!("expected {order} rows, found {}", rows.len()),
        });
    }
    let identity_ok = rows[0].iter().enumerate().all(|(k, &x)| x as usize == k)
        && rows.iter().enumerate().all(|(k, r)| r[0] as usize == k);
    if !identity_ok {
        return Err(GroupError::InvalidTable("element 0 must be the identity".into()));
    }
    let table = CayleyTable::from_rows(rows, assoc)?;
    GroupHandle::from_table(name, table, cap)
}

fn read(path: &Path) -> Result<String, GroupError> {
    std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_cayley(path: &Path, cap: usize, assoc: AssocCheck) -> Result<GroupHandle, GroupError> {
    parse_cayley(&read(path)?, &stem(path), cap, assoc)
}

pub fn load_perm_group(path: &Path, cap: usize) -> Result<GroupHandle, GroupError> {
    parse_perm_group(&read(path)?, &stem(path), cap)
}

/// Serializes a table-backed view of any group in the `cayley` format.
pub fn write_cayley(group: &GroupHandle) -> String {
    // element 0 of the file must be the identity, so the identity is moved to the front
    let mut order: Vec<_> = group.elements().collect();
    order.retain(|&e| e != group.identity());
    order.insert(0, group.identity());
    let mut pos = vec![0usize; group.order()];
    for (k, e) in order.iter().enumerate() {
        pos[e.index()] = k;
    }
    let mut out = format!("cayley {}\n", group.order());
    for &a in &order {
        let row: Vec<String> = order
            .iter()
            .map(|&b| pos[group.mul(a, b).index()].to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Serializes a permutation-backed group in the `perm` format.
pub fn write_perm_group(group: &GroupHandle) -> Option<String> {
    let degree = group.degree()?;
    let mut out = format!("perm {degree}\n");
    for &g in group.generators() {
        let p = group.permutation(g)?;
        let row: Vec<String> = p.images().iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Some(out)
}
