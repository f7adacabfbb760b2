//! Text grammars for monomial ideals, polynomials, and ring declarations.
//!
//! ```text
//! ideal      := monomial ("," monomial)*          e.g.  x^2*y, y^3
//! monomial   := "1" | factor (["*"] factor)*       "*" may be omitted: x^2y
//! factor     := VAR ["^" UINT]
//! poly       := ["-"] term (("+" | "-") term)*    e.g.  x^3 + y^3 - 2*z^3
//! term       := UINT | [UINT ["*"]] monomial
//! poly_list  := poly ("," poly)*
//! ring       := "F" PRIME "[" VAR ("," VAR)* "]" ["/" "(" poly_list ")"]
//! ```
//!
//! Variable names are identifiers; when `*` is omitted, factors are matched
//! against the declared names longest-first. Whitespace is ignored between
//! tokens. Coefficients are integers reduced modulo p.

use crate::error::{Error, ParseError, Result};
use crate::groebner::QuotientRing;
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};
use crate::poly::PolyFp;

pub fn default_var_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn format_monomial(exp: &ExponentVector, names: &[String]) -> String {
    let parts: Vec<String> = exp
        .coords()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_monomial_ideal(ideal: &MonomialIdeal, names: &[String]) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal
        .generators()
        .iter()
        .map(|g| format_monomial(g, names))
        .collect::<Vec<_>>()
        .join(", ")
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> std::result::Result<u64, ParseError> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let start = self.pos;
        self.pos += digits.len();
        digits
            .parse::<u64>()
            .map_err(|_| ParseError::new(start, "integer too large"))
    }

    fn identifier(&mut self) -> std::result::Result<String, ParseError> {
        self.skip_ws();
        let mut chars = self.rest().chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.error("expected a variable name")),
        }
        let ident: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        self.pos += ident.len();
        Ok(ident)
    }

    /// The longest declared variable name at the cursor.
    fn variable(&mut self, names: &[String]) -> std::result::Result<usize, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let best = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(i)
            }
            None => Err(self.error(format!(
                "expected one of the variables {}",
                names.join(", ")
            ))),
        }
    }
}

fn parse_monomial_at(
    cur: &mut Cursor<'_>,
    names: &[String],
) -> std::result::Result<ExponentVector, ParseError> {
    let mut exps = vec![0u32; names.len()];
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return Ok(ExponentVector::new(exps));
    }
    loop {
        let start = cur.pos;
        let j = cur.variable(names)?;
        let mut e = 1u64;
        if cur.eat('^') {
            e = cur.uint()?;
        }
        let e = u32::try_from(e).map_err(|_| ParseError::new(start, "exponent too large"))?;
        exps[j] = exps[j]
            .checked_add(e)
            .ok_or_else(|| ParseError::new(start, "exponent too large"))?;
        cur.eat('*');
        match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => continue,
            _ => break,
        }
    }
    Ok(ExponentVector::new(exps))
}

pub fn parse_var_list(text: &str) -> std::result::Result<Vec<String>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut names = vec![cur.identifier()?];
    while cur.eat(',') {
        let start = cur.pos;
        let name = cur.identifier()?;
        if names.contains(&name) {
            return Err(ParseError::new(start, format!("duplicate variable '{name}'")));
        }
        names.push(name);
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(names)
}

pub fn parse_monomial_ideal(
    text: &str,
    names: &[String],
) -> std::result::Result<MonomialIdeal, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek() == Some('0') {
        cur.pos += 1;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        return Ok(MonomialIdeal::zero(names.len()));
    }
    let mut gens = vec![parse_monomial_at(&mut cur, names)?];
    while cur.eat(',') {
        gens.push(parse_monomial_at(&mut cur, names)?);
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(minimalize(names.len(), gens).expect("widths match the declared variables"))
}

fn parse_term(
    cur: &mut Cursor<'_>,
    names: &[String],
    p: u64,
) -> std::result::Result<PolyFp, ParseError> {
    let n = names.len();
    let mut coeff = 1u64;
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        coeff = cur.uint()? % p;
        cur.eat('*');
        match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Ok(PolyFp::constant(p, n, coeff)),
        }
    }
    let exp = parse_monomial_at(cur, names)?;
    Ok(PolyFp::term(p, n, coeff, exp))
}

fn parse_poly_at(
    cur: &mut Cursor<'_>,
    names: &[String],
    p: u64,
) -> std::result::Result<PolyFp, ParseError> {
    let mut negate = cur.eat('-');
    let mut acc = PolyFp::zero(p, names.len());
    loop {
        let t = parse_term(cur, names, p)?;
        acc = if negate { &acc - &t } else { &acc + &t };
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else {
            break;
        }
    }
    Ok(acc)
}

pub fn parse_polynomial(
    text: &str,
    names: &[String],
    p: u64,
) -> std::result::Result<PolyFp, ParseError> {
    let mut cur = Cursor::new(text);
    let f = parse_poly_at(&mut cur, names, p)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(f)
}

pub fn parse_polynomial_list(
    text: &str,
    names: &[String],
    p: u64,
) -> std::result::Result<Vec<PolyFp>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = vec![parse_poly_at(&mut cur, names, p)?];
    while cur.eat(',') {
        out.push(parse_poly_at(&mut cur, names, p)?);
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(out)
}

/// A parsed ring declaration before its relations are put in Gröbner form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub p: u64,
    pub names: Vec<String>,
    pub relations: Vec<PolyFp>,
}

impl RingSpec {
    pub fn build(&self) -> Result<QuotientRing> {
        QuotientRing::new(self.p, self.names.clone(), &self.relations)
    }
}

pub fn parse_ring_spec(text: &str) -> std::result::Result<RingSpec, ParseError> {
    let mut cur = Cursor::new(text);
    if !(cur.eat('F')) {
        return Err(cur.error("expected 'F<prime>'"));
    }
    let p_pos = cur.pos;
    let p = cur.uint()?;
    if !crate::poly::is_prime(p) || p > crate::poly::MAX_CHARACTERISTIC {
        return Err(ParseError::new(p_pos, format!("{p} is not a supported prime")));
    }
    cur.expect('[')?;
    let mut names = vec![cur.identifier()?];
    while cur.eat(',') {
        let start = cur.pos;
        let name = cur.identifier()?;
        if names.contains(&name) {
            return Err(ParseError::new(start, format!("duplicate variable '{name}'")));
        }
        names.push(name);
    }
    cur.expect(']')?;
    let mut relations = Vec::new();
    if cur.eat('/') {
        cur.expect('(')?;
        relations.push(parse_poly_at(&mut cur, &names, p)?);
        while cur.eat(',') {
            relations.push(parse_poly_at(&mut cur, &names, p)?);
        }
        cur.expect(')')?;
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(RingSpec { p, names, relations })
}

pub fn parse_ring(text: &str) -> Result<QuotientRing> {
    parse_ring_spec(text).map_err(Error::from)?.build()
}

pub fn format_ring_spec(spec: &RingSpec) -> String {
    let mut out = format!("F{}[{}]", spec.p, spec.names.join(","));
    if !spec.relations.is_empty() {
        let rels: Vec<String> = spec.relations.iter().map(|r| r.format_with(&spec.names)).collect();
        out.push_str(&format!("/({})", rels.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn ideal_grammar() {
        let i = parse_monomial_ideal("x^2*y, y^3", &xy()).unwrap();
        assert_eq!(format_monomial_ideal(&i, &xy()), "x^2*y, y^3");
        let j = parse_monomial_ideal("x^2y,y^3", &xy()).unwrap();
        assert_eq!(i, j);
        let k = parse_monomial_ideal(" x y , x^2 ", &xy()).unwrap();
        assert_eq!(format_monomial_ideal(&k, &xy()), "x^2, x*y");
        assert!(parse_monomial_ideal("1", &xy()).unwrap().is_unit());
        assert!(parse_monomial_ideal("0", &xy()).unwrap().is_zero());
    }

    #[test]
    fn ideal_errors_carry_positions() {
        let err = parse_monomial_ideal("x^2, q", &xy()).unwrap_err();
        assert_eq!(err.pos, 5);
        let err = parse_monomial_ideal("x^", &xy()).unwrap_err();
        assert_eq!(err.pos, 2);
        let err = parse_monomial_ideal("x y)", &xy()).unwrap_err();
        assert_eq!(err.pos, 3);
    }

    #[test]
    fn longest_name_wins() {
        let names: Vec<String> = vec!["x".into(), "x1".into()];
        let i = parse_monomial_ideal("x1x", &names).unwrap();
        assert_eq!(i.generators()[0].coords(), &[1, 1]);
    }

    #[test]
    fn polynomial_grammar() {
        let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let f = parse_polynomial("x^3 + y^3 + z^3", &names, 2).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.format_with(&names), "x^3 + y^3 + z^3");
        let g = parse_polynomial("-x + 4*y - 2", &names, 3).unwrap();
        assert_eq!(g.format_with(&names), "2*x + y + 1");
        let h = parse_polynomial("3x*y", &names, 3).unwrap();
        assert!(h.is_zero());
        assert_eq!(parse_polynomial("x +", &names, 2).unwrap_err().pos, 3);
    }

    #[test]
    fn ring_grammar() {
        let spec = parse_ring_spec("F2[x,y,z]/(x^3+y^3+z^3)").unwrap();
        assert_eq!(spec.p, 2);
        assert_eq!(spec.names.len(), 3);
        assert_eq!(spec.relations.len(), 1);
        assert_eq!(format_ring_spec(&spec), "F2[x,y,z]/(x^3 + y^3 + z^3)");
        assert_eq!(parse_ring_spec(&format_ring_spec(&spec)).unwrap(), spec);
        let plain = parse_ring_spec("F3[a, b]").unwrap();
        assert!(plain.relations.is_empty());
        assert_eq!(parse_ring_spec("F4[x]").unwrap_err().pos, 1);
        assert!(parse_ring_spec("F2[x,x]").is_err());
        let ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").unwrap();
        assert_eq!(ring.characteristic(), 2);
    }
}
