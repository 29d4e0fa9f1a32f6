//! The pc-presentation text format.
//!
//! ```text
//! p 3
//! gens 4
//! conj 2 1 = g2 g3
//! conj 3 1 = g3 g4
//! ```
//!
//! One relation per line: `pow i = <word>` gives gi^p, `conj j i = <word>`
//! with j > i gives gj^{gi}. A `<word>` is `g1^e1 ... gn^en` with omitted
//! generators meaning exponent zero and `^1` elided; the empty word is the
//! identity. `#` starts a comment. The writer is canonical: trivial
//! relations are omitted, `pow` lines come first in ascending i, then
//! `conj` lines ascending in (i, j), with no trailing whitespace.

use crate::error::{Error, Result};
use crate::pcgroup::presentation::{PcPresentation, Word};

pub fn write_pc(pres: &PcPresentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("p {}\n", pres.prime()));
    out.push_str(&format!("gens {}\n", pres.ngens()));
    for (i, w) in pres.nontrivial_powers() {
        out.push_str(&format!("pow {} = {}\n", i + 1, word_string(w)));
    }
    let mut conjs: Vec<(usize, usize, &Word)> = pres.nontrivial_conjugates().collect();
    conjs.sort_by_key(|&(i, j, _)| (i, j));
    for (i, j, w) in conjs {
        out.push_str(&format!("conj {} {} = {}\n", j + 1, i + 1, word_string(w)));
    }
    out
}

fn word_string(w: &Word) -> String {
    w.iter()
        .map(|&(g, e)| {
            if e == 1 {
                format!("g{}", g + 1)
            } else {
                format!("g{}^{}", g + 1, e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_pc(text: &str) -> Result<PcPresentation> {
    let mut prime: Option<u16> = None;
    let mut ngens: Option<usize> = None;
    let mut powers: Vec<(usize, Word)> = Vec::new();
    let mut conjugates: Vec<(usize, usize, Word)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse {
            line: lineno + 1,
            msg,
        };
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                let v = parts
                    .next()
                    .ok_or_else(|| err("missing prime".into()))?
                    .parse::<u16>()
                    .map_err(|e| err(format!("bad prime: {e}")))?;
                prime = Some(v);
            }
            Some("gens") => {
                let v = parts
                    .next()
                    .ok_or_else(|| err("missing generator count".into()))?
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad generator count: {e}")))?;
                ngens = Some(v);
            }
            Some("pow") => {
                let i = parse_index(parts.next(), lineno)?;
                expect_eq(parts.next(), lineno)?;
                let w = parse_word(&parts.collect::<Vec<_>>(), lineno)?;
                powers.push((i - 1, w));
            }
            Some("conj") => {
                // conj j i: gj^{gi} with j > i.
                let j = parse_index(parts.next(), lineno)?;
                let i = parse_index(parts.next(), lineno)?;
                expect_eq(parts.next(), lineno)?;
                if j <= i {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("conj {j} {i}: first index must exceed the second"),
                    });
                }
                let w = parse_word(&parts.collect::<Vec<_>>(), lineno)?;
                conjugates.push((i - 1, j - 1, w));
            }
            Some(other) => {
                return Err(err(format!("unknown directive '{other}'")));
            }
            None => unreachable!(),
        }
    }
    let prime = prime.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'p' header".into(),
    })?;
    let ngens = ngens.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'gens' header".into(),
    })?;
    PcPresentation::new(prime, ngens, powers, conjugates)
}

fn parse_index(tok: Option<&str>, lineno: usize) -> Result<usize> {
    let tok = tok.ok_or(Error::Parse {
        line: lineno + 1,
        msg: "missing generator index".into(),
    })?;
    let v = tok.parse::<usize>().map_err(|e| Error::Parse {
        line: lineno + 1,
        msg: format!("bad index '{tok}': {e}"),
    })?;
    if v == 0 {
        return Err(Error::Parse {
            line: lineno + 1,
            msg: "generator indices are 1-based".into(),
        });
    }
    Ok(v)
}

fn expect_eq(tok: Option<&str>, lineno: usize) -> Result<()> {
    if tok != Some("=") {
        return Err(Error::Parse {
            line: lineno + 1,
            msg: "expected '='".into(),
        });
    }
    Ok(())
}

/// Parses `g1^e1 g2 ...` into a sorted word.
pub(crate) fn parse_word(tokens: &[&str], lineno: usize) -> Result<Word> {
    let mut w: Word = Vec::new();
    for tok in tokens {
        let (gpart, e) = match tok.split_once('^') {
            Some((gp, ep)) => {
                let e = ep.parse::<u16>().map_err(|err| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad exponent in '{tok}': {err}"),
                })?;
                (gp, e)
            }
            None => (*tok, 1),
        };
        let g = gpart
            .strip_prefix('g')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or(Error::Parse {
                line: lineno + 1,
                msg: format!("bad generator '{tok}'"),
            })?;
        if g == 0 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: "generator indices are 1-based".into(),
            });
        }
        if e != 0 {
            w.push((g - 1, e));
        }
    }
    w.sort_by_key(|&(g, _)| g);
    Ok(w)
}
