//! Line-oriented text format for flag codes and received stuttering flags.
//!
//! ```text
//! flagcode v1
//! q=2 n=5 type=1,2,3 flags=3
//! flag 1
//! 1 0 0 0 0
//! 0 0 1 0 0
//! 0 0 0 1 0
//! flag 2
//! ...
//! ```
//!
//! Each flag is stored as its nested generator matrix: t_r rows of n field
//! elements, the first t_i of which span the i-th subspace. This mirrors the
//! channel's generator view, so a stored code is directly transmittable.
//! Field elements use the integer encoding of the field module (base-p
//! coefficient tuples for q = p^m). Received stuttering flags use
//! `rows=d1,...,dr` in place of `type=` and supply d_r generator rows per
//! flag, the first d_i spanning the i-th subspace; zero-dimensional levels
//! contribute no rows.
//!
//! Parsing a serialized code reproduces it exactly: subspaces are stored in
//! canonical form and flag order is preserved.

use crate::channel::{generator_rows, nested_generator_matrix};
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::flag::{Flag, FlagCode, StutteringFlag, TypeVector};
use crate::subspace::Subspace;

const MAGIC: &str = "flagcode v1";

pub fn serialize_code(code: &FlagCode) -> String {
    let dims: Vec<String> = code
        .type_vector()
        .dims()
        .iter()
        .map(|d| d.to_string())
        .collect();
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!(
        "q={} n={} type={} flags={}\n",
        code.field().q(),
        code.ambient(),
        dims.join(","),
        code.len()
    ));
    for (i, flag) in code.flags().iter().enumerate() {
        out.push_str(&format!("flag {}\n", i + 1));
        let gen = nested_generator_matrix(flag);
        for row in gen.row_iter() {
            out.push_str(&join_row(row));
            out.push('\n');
        }
    }
    out
}

pub fn serialize_stuttering(received: &StutteringFlag) -> String {
    let dims: Vec<String> = received.dims().iter().map(|d| d.to_string()).collect();
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!(
        "q={} n={} rows={} flags=1\n",
        received.field().q(),
        received.ambient(),
        dims.join(",")
    ));
    out.push_str("flag 1\n");
    let levels: Vec<&Subspace> = received.levels().iter().collect();
    for row in generator_rows(&levels) {
        out.push_str(&join_row(&row));
        out.push('\n');
    }
    out
}

fn join_row(row: &[u32]) -> String {
    row.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

struct Header {
    field: FieldContext,
    ambient: usize,
    dims: Vec<usize>,
    flags: usize,
}

pub fn parse_code(text: &str) -> Result<FlagCode> {
    let mut lines = Lines::new(text);
    let header = parse_header(&mut lines, true)?;
    let type_vector = TypeVector::new(header.ambient, header.dims.clone())
        .map_err(|e| lines.syntax_at(2, format!("invalid type vector: {e}")))?;
    let rows_per_flag = *header.dims.last().unwrap();
    let mut flags = Vec::with_capacity(header.flags);
    for index in 1..=header.flags {
        let block = parse_block(&mut lines, &header, index, rows_per_flag)?;
        let flag = Flag::from_generator_rows(type_vector.clone(), header.field.clone(), &block)
            .map_err(|e| Error::InvalidFlag {
                index,
                source: Box::new(e),
            })?;
        flags.push(flag);
    }
    lines.expect_end()?;
    FlagCode::new(flags)
}

pub fn parse_stuttering(text: &str) -> Result<Vec<StutteringFlag>> {
    let mut lines = Lines::new(text);
    let header = parse_header(&mut lines, false)?;
    for w in header.dims.windows(2) {
        if w[0] > w[1] {
            return Err(lines.syntax_at(2, "rows= dimensions must be non-decreasing".into()));
        }
    }
    if let Some(&last) = header.dims.last() {
        if last > header.ambient {
            return Err(lines.syntax_at(2, "level dimension exceeds the ambient dimension".into()));
        }
    }
    let rows_per_flag = *header.dims.last().unwrap();
    let mut received = Vec::with_capacity(header.flags);
    for index in 1..=header.flags {
        let block = parse_block(&mut lines, &header, index, rows_per_flag)?;
        let mut levels = Vec::with_capacity(header.dims.len());
        for (level, &d) in header.dims.iter().enumerate() {
            let prefix = &block[..d];
            let s = Subspace::from_vectors(header.field.clone(), header.ambient, prefix).map_err(
                |e| Error::InvalidFlag {
                    index,
                    source: Box::new(e),
                },
            )?;
            if s.dim() != d {
                return Err(Error::InvalidFlag {
                    index,
                    source: Box::new(Error::DimensionMismatch {
                        level,
                        expected: d,
                        actual: s.dim(),
                    }),
                });
            }
            levels.push(s);
        }
        let x = StutteringFlag::new(levels).map_err(|e| Error::InvalidFlag {
            index,
            source: Box::new(e),
        })?;
        received.push(x);
    }
    lines.expect_end()?;
    Ok(received)
}

fn parse_header(lines: &mut Lines, strict: bool) -> Result<Header> {
    let magic = lines.next_line("file header")?;
    if magic != MAGIC {
        return Err(lines.syntax(format!("expected `{MAGIC}`")));
    }
    let header = lines.next_line("code header")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 {
        return Err(lines.syntax("expected `q=.. n=.. type=.. flags=..`".into()));
    }
    let q: u64 = parse_kv(lines, tokens[0], "q")?;
    let n: usize = parse_kv(lines, tokens[1], "n")?;
    let dims_key = if strict { "type" } else { "rows" };
    let dims_raw = expect_key(lines, tokens[2], dims_key)?;
    let mut dims = Vec::new();
    for part in dims_raw.split(',') {
        let d: usize = part
            .parse()
            .map_err(|_| lines.syntax(format!("invalid dimension `{part}` in {dims_key}=")))?;
        dims.push(d);
    }
    let flags: usize = parse_kv(lines, tokens[3], "flags")?;
    if flags == 0 {
        return Err(lines.syntax("flags= must be at least 1".into()));
    }
    let field = FieldContext::new(q)?;
    Ok(Header {
        field,
        ambient: n,
        dims,
        flags,
    })
}

fn parse_block(
    lines: &mut Lines,
    header: &Header,
    index: usize,
    rows: usize,
) -> Result<Vec<Vec<u32>>> {
    let marker = lines.next_line("flag marker")?;
    let expected = format!("flag {index}");
    if marker != expected {
        return Err(lines.syntax(format!("expected `{expected}`, found `{marker}`")));
    }
    let mut block = Vec::with_capacity(rows);
    for _ in 0..rows {
        let line = lines.next_line("generator row")?;
        let mut row = Vec::with_capacity(header.ambient);
        for token in line.split_whitespace() {
            let value: u32 = token
                .parse()
                .map_err(|_| lines.syntax(format!("invalid field element `{token}`")))?;
            if !header.field.contains(value) {
                return Err(lines.syntax(format!(
                    "element {value} out of range for a field of order {}",
                    header.field.q()
                )));
            }
            row.push(value);
        }
        if row.len() != header.ambient {
            return Err(lines.syntax(format!(
                "expected {} elements, found {}",
                header.ambient,
                row.len()
            )));
        }
        block.push(row);
    }
    Ok(block)
}

fn parse_kv<T: std::str::FromStr>(lines: &Lines, token: &str, key: &str) -> Result<T> {
    let raw = expect_key(lines, token, key)?;
    raw.parse()
        .map_err(|_| lines.syntax(format!("invalid value `{raw}` for {key}=")))
}

fn expect_key<'a>(lines: &Lines, token: &'a str, key: &str) -> Result<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| lines.syntax(format!("expected `{key}=...`, found `{token}`")))
}

/// Line cursor that tracks the current line number for error reporting.
struct Lines<'a> {
    iter: std::str::Lines<'a>,
    current: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            iter: text.lines(),
            current: 0,
        }
    }

    fn next_line(&mut self, what: &str) -> Result<&'a str> {
        self.current += 1;
        match self.iter.next() {
            Some(line) => Ok(line.trim_end_matches('\r')),
            None => Err(Error::Syntax {
                line: self.current,
                msg: format!("unexpected end of file, expected {what}"),
            }),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        loop {
            self.current += 1;
            match self.iter.next() {
                None => return Ok(()),
                Some(extra) if extra.trim().is_empty() => continue,
                Some(extra) => {
                    return Err(Error::Syntax {
                        line: self.current,
                        msg: format!("unexpected trailing content `{extra}`"),
                    })
                }
            }
        }
    }

    fn syntax(&self, msg: String) -> Error {
        Error::Syntax {
            line: self.current,
            msg,
        }
    }

    fn syntax_at(&self, line: usize, msg: String) -> Error {
        Error::Syntax { line, msg }
    }
}
