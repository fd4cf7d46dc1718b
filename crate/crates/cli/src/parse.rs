//! Recursive-descent parser for bundle specs.
//!
//! ```text
//! spec := term ("+" term)*
//! term := [nat "*"] atom ["^" nat]
//! atom := "O(" int "," int ")" | "ext(" spec ";" spec ")"
//! ```
//!
//! Whitespace between tokens is ignored. `n*X^m` stands for `n*m` copies of
//! `X`. The result is normalized with [`BundleExpr::direct_sum`], so printing
//! a parsed expression and parsing it again is the identity.

use scrollcoh::{BundleExpr, DivisorClass};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}", .expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

pub fn parse_bundle_spec(text: &str) -> Result<BundleExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.spec()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["\"+\"", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &'static str, label: &'static str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(&[label]))
        }
    }

    fn spec(&mut self) -> Result<BundleExpr, ParseError> {
        let mut parts = self.term()?;
        while self.eat("+") {
            parts.extend(self.term()?);
        }
        Ok(BundleExpr::direct_sum(parts))
    }

    fn term(&mut self) -> Result<Vec<BundleExpr>, ParseError> {
        let mut copies = 1;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            copies = self.nat()?;
            self.expect("*", "\"*\"")?;
        }
        let atom = self.atom()?;
        if self.eat("^") {
            copies *= self.nat()?;
        }
        Ok(vec![atom; copies])
    }

    fn atom(&mut self) -> Result<BundleExpr, ParseError> {
        if self.eat("O") {
            self.expect("(", "\"(\"")?;
            let h = self.int()?;
            self.expect(",", "\",\"")?;
            let f = self.int()?;
            self.expect(")", "\")\"")?;
            Ok(BundleExpr::line(DivisorClass::new(h, f)))
        } else if self.eat("ext") {
            self.expect("(", "\"(\"")?;
            let sub = self.spec()?;
            self.expect(";", "\";\"")?;
            let quot = self.spec()?;
            self.expect(")", "\")\"")?;
            Ok(BundleExpr::ext(sub, quot))
        } else {
            Err(self.error(&["\"O(\"", "\"ext(\""]))
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    /// A positive count. Zero copies would allow an empty bundle.
    fn nat(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.digits().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => {
                self.pos = start;
                Err(self.error(&["positive integer"]))
            }
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let parsed = self.digits().parse::<i64>();
        match parsed {
            Ok(v) => Ok(if neg { -v } else { v }),
            Err(_) => {
                self.pos = start;
                Err(self.error(&["integer"]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(h: i64, f: i64) -> DivisorClass {
        DivisorClass::new(h, f)
    }

    #[test]
    fn sum_with_multiplicity() {
        let e = parse_bundle_spec("O(1,-1) + 2*O(0,3)").unwrap();
        assert_eq!(e, BundleExpr::sum([d(1, -1), d(0, 3), d(0, 3)]));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn ext_with_power() {
        let e = parse_bundle_spec("ext(O(1,-1)^2; O(0,2))").unwrap();
        let BundleExpr::Ext { sub, quot } = &e else {
            panic!("{e:?}")
        };
        assert_eq!((sub.rank(), quot.rank()), (2, 1));
    }

    #[test]
    fn both_multiplicities_multiply() {
        assert_eq!(parse_bundle_spec("2*O(0,0)^3").unwrap().rank(), 6);
    }

    #[test]
    fn error_offsets() {
        let err = parse_bundle_spec("O(1;2)").unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(err.expected, vec!["\",\""]);
        assert_eq!(parse_bundle_spec("").unwrap_err().offset, 0);
        assert_eq!(parse_bundle_spec("O(1,2) +").unwrap_err().offset, 8);
        assert_eq!(parse_bundle_spec("O(1,2) O(0,0)").unwrap_err().offset, 7);
        assert_eq!(parse_bundle_spec("0*O(1,2)").unwrap_err().offset, 0);
        assert_eq!(
            parse_bundle_spec("O(x,2)").unwrap_err().expected,
            vec!["integer"]
        );
        assert_eq!(
            parse_bundle_spec("O(99999999999999999999,0)")
                .unwrap_err()
                .offset,
            2
        );
    }

    #[test]
    fn whitespace_is_ignored() {
        let a = parse_bundle_spec(" ext ( O ( 1 , -1 ) ;O(0,2) ) ").unwrap();
        let b = parse_bundle_spec("ext(O(1,-1);O(0,2))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn print_parse_round_trip() {
        for t in [
            "O(0,3) + O(1,-1)",
            "2*O(0,0) + ext(O(1,-1); O(0,2)) + O(2,-5)",
            "ext(ext(O(1,-1); O(0,2)); O(0,0)^2) + ext(O(1,-1); O(0,2))^2",
        ] {
            let e = parse_bundle_spec(t).unwrap();
            let printed = e.to_string();
            assert_eq!(parse_bundle_spec(&printed).unwrap(), e, "{t} -> {printed}");
        }
    }

    #[test]
    fn normal_form_is_printed() {
        let e = parse_bundle_spec("ext(O(1,-1); O(0,2)) + O(0,3) + ext(O(1,-1); O(0,2)) + O(0,3)")
            .unwrap();
        assert_eq!(e.to_string(), "2*O(0,3) + 2*ext(O(1,-1); O(0,2))");
    }
}
