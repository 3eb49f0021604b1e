//! `front v1` / `tfront v1` text files.
//!
//! ```text
//! front v1
//! # right trefoil
//! L1 L3 X2 X2 X2 R1 R1
//! orient 0 +
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{FrontDiagram, FrontEvent, Orientation, TransverseEvent, TransverseFront};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FrontFile {
    Legendrian(FrontDiagram),
    Transverse(TransverseFront),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse_front_file(text: &str) -> Result<FrontFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let transverse = match lines.next() {
        Some((_, "front v1")) => false,
        Some((_, "tfront v1")) => true,
        Some((n, other)) => return Err(err(n, format!("expected `front v1` or `tfront v1`, found `{other}`"))),
        None => return Err(err(1, "empty file")),
    };

    let mut legendrian = Vec::new();
    let mut tevents = Vec::new();
    let mut orient: Vec<(usize, Orientation)> = Vec::new();

    for (n, line) in lines {
        let mut tokens = line.split_whitespace().peekable();
        if tokens.peek() == Some(&"orient") {
            tokens.next();
            let (Some(c), Some(o), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                return Err(err(n, "expected `orient <component> <+|->`"));
            };
            let c: usize = c.parse().map_err(|_| err(n, format!("bad component index `{c}`")))?;
            let o = match o {
                "+" => Orientation::Positive,
                "-" => Orientation::Negative,
                _ => return Err(err(n, format!("orientation must be `+` or `-`, found `{o}`"))),
            };
            orient.push((c, o));
            continue;
        }
        for tok in tokens {
            let mut chars = tok.chars();
            let head = chars.next().unwrap();
            let pos: usize = chars
                .as_str()
                .parse()
                .map_err(|_| err(n, format!("bad position in token `{tok}`")))?;
            match (transverse, head) {
                (false, 'L') => legendrian.push(FrontEvent::left(pos)),
                (false, 'R') => legendrian.push(FrontEvent::right(pos)),
                (false, 'X') => legendrian.push(FrontEvent::crossing(pos)),
                (true, 'C') => tevents.push(TransverseEvent::cup(pos)),
                (true, 'D') => tevents.push(TransverseEvent::cap(pos)),
                (true, 'O') => tevents.push(TransverseEvent::over(pos)),
                (true, 'U') => tevents.push(TransverseEvent::under(pos)),
                _ => return Err(err(n, format!("unknown token `{tok}`"))),
            }
        }
    }

    Ok(if transverse {
        let mut t = TransverseFront::new(tevents);
        for (c, o) in orient {
            t.set_orientation(c, o);
        }
        FrontFile::Transverse(t)
    } else {
        let mut d = FrontDiagram::new(legendrian);
        for (c, o) in orient {
            d.set_orientation(c, o);
        }
        FrontFile::Legendrian(d)
    })
}

const TOKENS_PER_LINE: usize = 16;

fn write_body<T: std::fmt::Display>(out: &mut String, events: &[T], reversed: impl Iterator<Item = usize>) {
    for chunk in events.chunks(TOKENS_PER_LINE) {
        let line: Vec<String> = chunk.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    for c in reversed {
        writeln!(out, "orient {c} -").unwrap();
    }
}

pub(super) fn write_front(d: &FrontDiagram) -> String {
    let mut out = String::from("front v1\n");
    write_body(&mut out, d.events(), d.reversed_components());
    out
}

pub(super) fn write_tfront(t: &TransverseFront) -> String {
    let mut out = String::from("tfront v1\n");
    write_body(&mut out, t.events(), t.reversed_components());
    out
}

impl FrontFile {
    pub fn to_file_string(&self) -> String {
        match self {
            FrontFile::Legendrian(d) => write_front(d),
            FrontFile::Transverse(t) => write_tfront(t),
        }
    }
}
