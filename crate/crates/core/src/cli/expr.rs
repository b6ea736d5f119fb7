//! Recursive-descent evaluator for interval expressions.
//!
//! ```text
//! expr    := unary (('+' | '-') unary)*
//! unary   := '~' unary | '-' unary | primary
//! primary := '[' end ',' end ']' | name '(' args ')' | '(' expr ')'
//! ```
//!
//! Binary `x - y` means `x + (-y)` with the true minus.

use crate::interval::{ginsberg_involution, ExtReal, IntervalError};
use crate::Pii;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn parse_err(msg: impl Into<String>) -> IntervalError {
    IntervalError::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), IntervalError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(format!("expected `{c}` at offset {}", self.pos)))
        }
    }

    /// Raw text up to (not including) the next delimiter.
    fn token(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find([',', ']', ')', '(', '[']).unwrap_or(rest.len());
        self.pos += len;
        rest[..len].trim()
    }

    fn expr(&mut self) -> Result<Pii, IntervalError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.unary()?)?;
            } else if self.eat('-') {
                acc = acc.try_add(&self.unary()?.true_minus())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Pii, IntervalError> {
        if self.eat('~') {
            Ok(self.unary()?.weak_minus())
        } else if self.eat('-') {
            Ok(self.unary()?.true_minus())
        } else {
            self.primary()
        }
    }

    fn endpoint(&mut self) -> Result<ExtReal, IntervalError> {
        let tok = self.token();
        tok.parse().map_err(|_| parse_err(format!("bad endpoint `{tok}`")))
    }

    fn number(&mut self) -> Result<f64, IntervalError> {
        let tok = self.token();
        match tok.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(parse_err(format!("expected a finite number, got `{tok}`"))),
        }
    }

    fn primary(&mut self) -> Result<Pii, IntervalError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let a = self.endpoint()?;
                self.expect(',')?;
                let b = self.endpoint()?;
                self.expect(']')?;
                Ok(Pii::from_ext(a, b))
            }
            Some('(') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(x)
            }
            Some(c) if c.is_ascii_alphabetic() => self.call(),
            Some(c) => Err(parse_err(format!("unexpected `{c}` at offset {}", self.pos))),
            None => Err(parse_err("unexpected end of expression")),
        }
    }

    fn call(&mut self) -> Result<Pii, IntervalError> {
        let name = self.token();
        self.expect('(')?;
        let x = self.expr()?;
        self.expect(',')?;
        let out = match name {
            "gji" => {
                let lower = self.number()?;
                self.expect(',')?;
                let upper = self.number()?;
                ginsberg_involution(&x, lower, upper)?
            }
            "meet_i" => x.info_meet(&self.expr()?),
            "join_i" => x.info_join(&self.expr()?),
            "meet_m" => x.material_meet(&self.expr()?),
            "join_m" => x.material_join(&self.expr()?),
            _ => return Err(parse_err(format!("unknown function `{name}`"))),
        };
        self.expect(')')?;
        Ok(out)
    }
}

pub fn eval(src: &str) -> Result<Pii, IntervalError> {
    let mut p = Parser { src, pos: 0 };
    let v = p.expr()?;
    match p.peek() {
        None => Ok(v),
        Some(c) => Err(parse_err(format!("trailing `{c}` at offset {}", p.pos))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(s: &str) -> String {
        eval(s).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(show("-[1,2]"), "[-1,-2]");
        assert_eq!(show("~[1,3] + [1,3]"), "[-2,2]");
        assert_eq!(show("[0,0] + [5,7]"), "[5,7]");
    }

    #[test]
    fn precedence_and_grouping() {
        assert_eq!(show("[1,2] - [1,2]"), "[0,0]");
        assert_eq!(show("[1,2] - [1,1] + [3,3]"), "[3,4]");
        assert_eq!(show("-([1,2] + [1,1])"), "[-2,-3]");
        assert_eq!(show("~-[1,3]"), "[3,1]");
        assert_eq!(show("--[1,3]"), "[1,3]");
    }

    #[test]
    fn functions() {
        assert_eq!(show("gji([0,1], 0, 1)"), "[0,1]");
        assert_eq!(show("gji([0.25,0.5], 0, 1)"), "[0.5,0.75]");
        assert_eq!(show("meet_i([0,2],[1,3])"), "[0,3]");
        assert_eq!(show("join_i([0,2],[1,3])"), "[1,2]");
        assert_eq!(show("meet_m([0,5],[1,3])"), "[0,3]");
        assert_eq!(show("join_m([0,5],[1,3])"), "[1,5]");
    }

    #[test]
    fn infinities() {
        assert_eq!(show("[-inf,1] + [0,inf]"), "[-inf,inf]");
        assert_eq!(eval("[-inf,0] + [inf,0]"), Err(IntervalError::InfinityClash));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "[1,2", "[1;2]", "[a,2]", "foo([1,2],[1,2])", "[1,2] [3,4]", "gji([0,1],0,inf)", "+[1,2]"] {
            assert!(matches!(eval(bad), Err(IntervalError::Parse(_))), "{bad}");
        }
    }
}
