//! The scheme and group text formats.
//!
//! A scheme file is an optional block of `#` comment lines, a header line
//! `n rank`, then `n` rows of `n` space-separated labels. The identity
//! relation carries label 0. A group file has the header `n` followed by the
//! Cayley table, row `x` and column `g` holding `xg`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::{GroupError, GroupTable};
use crate::scheme::{AssociationScheme, SchemeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error on line {0}: {1}")]
    SyntaxError(usize, String),
    #[error("labels are not the contiguous range 0..{rank}: {missing} is missing")]
    LabelGap { rank: usize, missing: usize },
    #[error("matrix is not square: line {line} has {got} entries, expected {expected}")]
    NotSquare {
        line: usize,
        got: usize,
        expected: usize,
    },
}

/// A parsed scheme matrix. `comments` holds the leading `#` lines other
/// than the name, without the `# ` prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeFile {
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub n_points: usize,
    pub rank: usize,
    pub labels: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

pub(crate) fn parse_row(line: &str, lineno: usize) -> Result<Vec<usize>, FormatError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| FormatError::SyntaxError(lineno, format!("not a label: {t:?}")))
        })
        .collect()
}

/// Splits a comment into the name tag, if it is one.
pub(crate) fn name_tag(comment: &str) -> Option<&str> {
    comment.strip_prefix("name:").map(str::trim)
}

fn header_comments(lines: &[(usize, &str)]) -> (Option<String>, Vec<String>, usize) {
    let mut name = None;
    let mut comments = Vec::new();
    let mut i = 0;
    while i < lines.len() && lines[i].1.starts_with('#') {
        let c = lines[i].1.trim_start_matches('#').trim();
        match name_tag(c) {
            Some(n) if name.is_none() => name = Some(n.to_string()),
            _ => comments.push(c.to_string()),
        }
        i += 1;
    }
    (name, comments, i)
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub(crate) fn check_square(rows: &[(usize, Vec<usize>)], n: usize) -> Result<(), FormatError> {
    for (line, row) in rows {
        if row.len() != n {
            return Err(FormatError::NotSquare {
                line: *line,
                got: row.len(),
                expected: n,
            });
        }
    }
    Ok(())
}

/// Labels `0..rank` must all occur. If the diagonal label is not 0 it is
/// swapped with 0.
pub(crate) fn canonical_labels(mut labels: Vec<Vec<usize>>) -> Result<(Vec<Vec<usize>>, usize), FormatError> {
    let rank = labels.iter().flatten().copied().max().map_or(0, |m| m + 1);
    let mut used = vec![false; rank];
    labels.iter().flatten().for_each(|&l| used[l] = true);
    if let Some(missing) = used.iter().position(|u| !u) {
        return Err(FormatError::LabelGap { rank, missing });
    }
    let d = labels.first().and_then(|r| r.first()).copied().unwrap_or(0);
    if d != 0 {
        for l in labels.iter_mut().flatten() {
            if *l == d {
                *l = 0;
            } else if *l == 0 {
                *l = d;
            }
        }
    }
    Ok((labels, rank))
}

pub fn parse_scheme(text: &str) -> Result<SchemeFile, FormatError> {
    let lines = content_lines(text);
    let (name, comments, start) = header_comments(&lines);
    let Some(&(hline, header)) = lines.get(start) else {
        return Err(FormatError::SyntaxError(
            text.lines().count().max(1),
            "missing \"n rank\" header".into(),
        ));
    };
    let h = parse_row(header, hline)?;
    let [n, rank] = h[..] else {
        return Err(FormatError::SyntaxError(hline, "header must be \"n rank\"".into()));
    };
    let mut rows = Vec::new();
    for &(lineno, line) in &lines[start + 1..] {
        if line.starts_with('#') {
            return Err(FormatError::SyntaxError(lineno, "comment inside matrix".into()));
        }
        rows.push((lineno, parse_row(line, lineno)?));
    }
    if rows.len() != n {
        let line = rows.last().map_or(hline, |r| r.0);
        return Err(FormatError::NotSquare {
            line,
            got: rows.len(),
            expected: n,
        });
    }
    check_square(&rows, n)?;
    let (labels, found_rank) = canonical_labels(rows.into_iter().map(|r| r.1).collect())?;
    if found_rank != rank {
        return Err(FormatError::SyntaxError(
            hline,
            format!("header declares rank {rank}, matrix uses {found_rank} labels"),
        ));
    }
    Ok(SchemeFile {
        name,
        comments,
        n_points: n,
        rank,
        labels,
    })
}

fn render_rows(out: &mut String, rows: &[Vec<usize>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|l| l.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

fn render_comments(out: &mut String, name: &Option<String>, comments: &[String]) {
    if let Some(n) = name {
        writeln!(out, "# name: {n}").unwrap();
    }
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
}

impl SchemeFile {
    pub fn from_scheme(s: &AssociationScheme, name: Option<String>) -> SchemeFile {
        SchemeFile {
            name,
            comments: Vec::new(),
            n_points: s.n_points(),
            rank: s.rank(),
            labels: s.matrix(),
        }
    }

    pub fn to_scheme(&self) -> Result<AssociationScheme, SchemeError> {
        AssociationScheme::from_matrix(&self.labels)
    }

    /// Canonical text; `parse_scheme(render())` gives back `self`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        render_comments(&mut out, &self.name, &self.comments);
        writeln!(out, "{} {}", self.n_points, self.rank).unwrap();
        render_rows(&mut out, &self.labels);
        out
    }
}

pub fn parse_group(text: &str) -> Result<GroupFile, FormatError> {
    let lines = content_lines(text);
    let (name, comments, start) = header_comments(&lines);
    let Some(&(hline, header)) = lines.get(start) else {
        return Err(FormatError::SyntaxError(1, "missing order header".into()));
    };
    let [n] = parse_row(header, hline)?[..] else {
        return Err(FormatError::SyntaxError(hline, "header must be the group order".into()));
    };
    let rows: Vec<(usize, Vec<usize>)> = lines[start + 1..]
        .iter()
        .map(|&(l, s)| parse_row(s, l).map(|r| (l, r)))
        .collect::<Result<_, _>>()?;
    if rows.len() != n {
        return Err(FormatError::NotSquare {
            line: rows.last().map_or(hline, |r| r.0),
            got: rows.len(),
            expected: n,
        });
    }
    check_square(&rows, n)?;
    Ok(GroupFile {
        name,
        comments,
        n,
        table: rows.into_iter().map(|r| r.1).collect(),
    })
}

impl GroupFile {
    pub fn from_group(g: &GroupTable, name: Option<String>) -> GroupFile {
        GroupFile {
            name,
            comments: Vec::new(),
            n: g.order(),
            table: g.rows(),
        }
    }

    pub fn to_group(&self) -> Result<GroupTable, GroupError> {
        GroupTable::from_table(&self.table)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        render_comments(&mut out, &self.name, &self.comments);
        writeln!(out, "{}", self.n).unwrap();
        render_rows(&mut out, &self.table);
        out
    }
}
