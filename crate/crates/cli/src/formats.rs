//! File formats for swap lists and tangles.
//!
//! Lists are JSON, `{"n": 3, "swaps": [[1, 2, 1], [1, 3, 2]]}` with 1-based
//! wires `i < j` and counts of at least one, or a plain matrix of `n` rows
//! of `n` integers. Tangles are JSON, `{"n": 3, "rows": [[1, 2, 3], [2, 1, 3]]}`,
//! each row listing the wires from left to right.

use serde::{Deserialize, Serialize};
use tangle_core::{Permutation, SwapList, Tangle};

/// Malformed input, with enough context to find the problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

fn err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ListDoc {
    n: usize,
    swaps: Vec<[u64; 3]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TangleDoc {
    n: usize,
    rows: Vec<Vec<usize>>,
}

/// Accepts either list format; JSON is recognised by a leading `{`.
pub fn parse_list(text: &str) -> Result<SwapList, InputError> {
    if text.trim_start().starts_with('{') {
        parse_list_json(text)
    } else {
        parse_list_matrix(text)
    }
}

fn parse_list_json(text: &str) -> Result<SwapList, InputError> {
    let doc: ListDoc = serde_json::from_str(text).map_err(|e| err(format!("list: {e}")))?;
    if doc.n == 0 {
        return Err(err("list: field `n` must be at least 1"));
    }
    let mut list = SwapList::new(doc.n);
    for (k, &[i, j, c]) in doc.swaps.iter().enumerate() {
        let at = format!("list: swaps[{k}] = [{i}, {j}, {c}]");
        if i == 0 || j as usize > doc.n || i >= j {
            return Err(err(format!("{at}: need 1 <= i < j <= {}", doc.n)));
        }
        let count = u32::try_from(c)
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| err(format!("{at}: count must be in 1..=2^32-1")))?;
        if list.get(i as usize - 1, j as usize - 1) > 0 {
            return Err(err(format!("{at}: pair listed twice")));
        }
        list.set(i as usize - 1, j as usize - 1, count).map_err(|e| err(format!("{at}: {e}")))?;
    }
    Ok(list)
}

fn parse_list_matrix(text: &str) -> Result<SwapList, InputError> {
    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(col, t)| {
                t.parse::<u32>()
                    .map_err(|_| err(format!("matrix: line {}, column {}: {t:?} is not a count", k + 1, col + 1)))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        rows.push((k + 1, row));
    }
    let n = rows.len();
    if n == 0 {
        return Err(err("matrix: no rows"));
    }
    for (line, row) in &rows {
        if row.len() != n {
            return Err(err(format!("matrix: line {line}: expected {n} entries, found {}", row.len())));
        }
    }
    let mut list = SwapList::new(n);
    for i in 0..n {
        let (line, row) = &rows[i];
        if row[i] != 0 {
            return Err(err(format!("matrix: line {line}, column {}: diagonal must be 0", i + 1)));
        }
        for j in i + 1..n {
            let (other_line, other) = &rows[j];
            if row[j] != other[i] {
                return Err(err(format!(
                    "matrix: line {line}, column {} is {} but line {other_line}, column {} is {}",
                    j + 1,
                    row[j],
                    i + 1,
                    other[i]
                )));
            }
            if row[j] > 0 {
                list.set(i, j, row[j]).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    Ok(list)
}

pub fn write_list(list: &SwapList) -> String {
    let doc = ListDoc {
        n: list.n(),
        swaps: list.iter().map(|(i, j, c)| [i as u64 + 1, j as u64 + 1, u64::from(c)]).collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("plain data");
    out.push('\n');
    out
}

pub fn write_list_matrix(list: &SwapList) -> String {
    let n = list.n();
    let mut out = String::new();
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| if i == j { "0".into() } else { list.get(i, j).to_string() }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_tangle(text: &str) -> Result<Tangle, InputError> {
    let doc: TangleDoc = serde_json::from_str(text).map_err(|e| err(format!("tangle: {e}")))?;
    if doc.rows.is_empty() {
        return Err(err("tangle: `rows` is empty"));
    }
    let mut perms = Vec::with_capacity(doc.rows.len());
    for (k, row) in doc.rows.iter().enumerate() {
        if row.len() != doc.n {
            return Err(err(format!("tangle: rows[{k}] has {} wires, expected {}", row.len(), doc.n)));
        }
        let wires = row
            .iter()
            .map(|&w| {
                if (1..=doc.n).contains(&w) {
                    Ok(w - 1)
                } else {
                    Err(err(format!("tangle: rows[{k}]: wire {w} out of range")))
                }
            })
            .collect::<Result<Vec<usize>, _>>()?;
        perms.push(Permutation::from_wires(wires).map_err(|e| err(format!("tangle: rows[{k}]: {e}")))?);
    }
    Tangle::new(perms).map_err(|e| err(format!("tangle: {e}")))
}

pub fn write_tangle(tangle: &Tangle) -> String {
    let doc = TangleDoc {
        n: tangle.n(),
        rows: tangle.perms().iter().map(|p| p.wires().iter().map(|w| w + 1).collect()).collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("plain data");
    out.push('\n');
    out
}

/// JSON value form of a tangle, for embedding in reports.
pub fn tangle_value(tangle: &Tangle) -> serde_json::Value {
    serde_json::from_str(&write_tangle(tangle)).expect("own output")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_list() {
        let l = parse_list(r#"{"n": 3, "swaps": [[1, 2, 1], [1, 3, 2]]}"#).unwrap();
        assert_eq!(l, SwapList::from_notation(3, "12 13 13").unwrap());
        assert_eq!(write_list(&l), "{\"n\":3,\"swaps\":[[1,2,1],[1,3,2]]}\n");
    }

    #[test]
    fn json_list_errors_name_the_field() {
        let e = parse_list(r#"{"n": 3, "swaps": [[1, 4, 1]]}"#).unwrap_err();
        assert!(e.0.contains("swaps[0]"), "{e}");
        let e = parse_list(r#"{"n": 3, "swaps": [[2, 1, 1]]}"#).unwrap_err();
        assert!(e.0.contains("i < j"), "{e}");
        assert!(parse_list(r#"{"n": 3, "swaps": [[1, 2, 0]]}"#).is_err());
        assert!(parse_list(r#"{"n": 3, "swaps": [[1, 2, 1], [1, 2, 1]]}"#).is_err());
        let e = parse_list(r#"{"n": 3, "swaps": [], "extra": 1}"#).unwrap_err();
        assert!(e.0.contains("extra"), "{e}");
        let e = parse_list("{\"n\": 3,\n \"swaps\": [[1, 2]]}").unwrap_err();
        assert!(e.0.contains("line 2"), "{e}");
    }

    #[test]
    fn matrix_list() {
        let l = parse_list("0 1 2\n1 0 0\n2 0 0\n").unwrap();
        assert_eq!(l, SwapList::from_notation(3, "12 13x2").unwrap());
        assert_eq!(parse_list(&write_list_matrix(&l)).unwrap(), l);
        let e = parse_list("0 1 2\n1 0 0\n3 0 0\n").unwrap_err();
        assert!(e.0.contains("line 1, column 3"), "{e}");
        let e = parse_list("0 1\n1 0 0\n").unwrap_err();
        assert!(e.0.contains("line 2"), "{e}");
        let e = parse_list("0 x\n1 0\n").unwrap_err();
        assert!(e.0.contains("line 1, column 2"), "{e}");
    }

    #[test]
    fn empty_list() {
        let l = parse_list(r#"{"n": 4, "swaps": []}"#).unwrap();
        assert!(l.is_zero());
        assert_eq!(l.n(), 4);
    }

    #[test]
    fn tangle_round_trip_and_validation() {
        let text = "{\"n\":3,\"rows\":[[1,2,3],[2,1,3],[2,3,1]]}\n";
        let t = parse_tangle(text).unwrap();
        assert_eq!(t.height(), 3);
        assert_eq!(write_tangle(&t), text);
        let e = parse_tangle(r#"{"n":3,"rows":[[1,2,3],[3,2,1]]}"#).unwrap_err();
        assert!(e.0.contains("tangle"), "{e}");
        assert!(parse_tangle(r#"{"n":3,"rows":[[1,2,4]]}"#).is_err());
        assert!(parse_tangle(r#"{"n":3,"rows":[[1,1,2]]}"#).is_err());
    }
}
