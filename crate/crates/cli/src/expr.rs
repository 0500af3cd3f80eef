//! Generator expressions: `c`, `a<i>(<k>)`, `X+<i>(<k>)`, `X-<i>(<k>)`.

use std::fmt;

use toroidal_core::GenSym;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => self.err(format!("expected '{c}', found '{x}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.s[start..self.pos]
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let at = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return self.err("expected node index");
        }
        d.parse().map_err(|_| ParseError {
            pos: at,
            msg: "node index out of range".into(),
        })
    }

    fn degree(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits();
        if d.is_empty() {
            return self.err("expected integer degree");
        }
        let v: i64 = d.parse().map_err(|_| ParseError {
            pos: at,
            msg: "degree out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }
}

pub fn parse_gen(input: &str) -> Result<GenSym, ParseError> {
    let mut cur = Cursor { s: input, pos: 0 };
    let g = match cur.peek() {
        Some('c') => {
            cur.pos += 1;
            GenSym::Central
        }
        Some('a') => {
            cur.pos += 1;
            let i = cur.index()?;
            cur.expect('(')?;
            let k = cur.degree()?;
            cur.expect(')')?;
            GenSym::H(i, k)
        }
        Some('X') => {
            cur.pos += 1;
            let sign = match cur.peek() {
                Some('+') => 1,
                Some('-') => -1,
                _ => return cur.err("expected '+' or '-' after 'X'"),
            };
            cur.pos += 1;
            let i = cur.index()?;
            cur.expect('(')?;
            let k = cur.degree()?;
            cur.expect(')')?;
            GenSym::x(sign, i, k)
        }
        Some(x) => return cur.err(format!("unexpected '{x}', expected 'c', 'a' or 'X'")),
        None => return cur.err("empty expression"),
    };
    if cur.pos != input.len() {
        return cur.err("trailing input");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_grammar() {
        assert_eq!(parse_gen("c"), Ok(GenSym::Central));
        assert_eq!(parse_gen("a0(2)"), Ok(GenSym::H(0, 2)));
        assert_eq!(parse_gen("a12(-3)"), Ok(GenSym::H(12, -3)));
        assert_eq!(parse_gen("X+1(0)"), Ok(GenSym::Xp(1, 0)));
        assert_eq!(parse_gen("X-0(+4)"), Ok(GenSym::Xm(0, 4)));
    }

    #[test]
    fn reports_position() {
        assert_eq!(parse_gen("a1(x)").unwrap_err().pos, 3);
        assert_eq!(parse_gen("X*1(0)").unwrap_err().pos, 1);
        assert_eq!(parse_gen("a1(2)z").unwrap_err().pos, 5);
        assert_eq!(parse_gen("").unwrap_err().pos, 0);
        assert_eq!(parse_gen("a(1)").unwrap_err().pos, 1);
    }
}
