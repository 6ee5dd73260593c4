//! Ring descriptors (`Fq:p^r`, `Z:p^e`, `GR:p^e:r`, `U:p^r:e`) and element
//! expressions (integers, `g^k`, bracketed coordinate lists).

use std::fmt;
use std::str::FromStr;

use constacyclic::{
    ChainRing, Error, Family, Field, FieldElem, FiniteChainRing, Result, Ring, RingElem,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Field { p: u64, r: u32 },
    Galois { p: u64, e: u32, r: u32 },
    UAdic { p: u64, r: u32, e: u32 },
}

pub enum AnyRing {
    Field(Field),
    Chain(ChainRing),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingSpec::Field { p, r } => write!(f, "Fq:{p}^{r}"),
            RingSpec::Galois { p, e, r: 1 } => write!(f, "Z:{p}^{e}"),
            RingSpec::Galois { p, e, r } => write!(f, "GR:{p}^{e}:{r}"),
            RingSpec::UAdic { p, r, e } => write!(f, "U:{p}^{r}:{e}"),
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected {what}, found {s:?}")))
}

fn parse_power(s: &str) -> Result<(u64, u32)> {
    let (b, k) = s
        .split_once('^')
        .ok_or_else(|| Error::Parse(format!("expected p^k, found {s:?}")))?;
    let p = parse_num(b, "a prime")?;
    let k: u32 = parse_num(k, "a positive exponent")?;
    if k == 0 {
        return Err(Error::Parse(format!("exponent must be positive in {s:?}")));
    }
    Ok((p, k))
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let spec = match parts.as_slice() {
            ["Fq", pr] => {
                let (p, r) = parse_power(pr)?;
                RingSpec::Field { p, r }
            }
            ["Z", pe] => {
                let (p, e) = parse_power(pe)?;
                RingSpec::Galois { p, e, r: 1 }
            }
            ["GR", pe, r] => {
                let (p, e) = parse_power(pe)?;
                let r = parse_num(r, "a positive degree")?;
                if r == 0 {
                    return Err(Error::Parse("degree must be positive".into()));
                }
                RingSpec::Galois { p, e, r }
            }
            ["U", pr, e] => {
                let (p, r) = parse_power(pr)?;
                let e = parse_num(e, "a positive nilpotency index")?;
                if e == 0 {
                    return Err(Error::Parse("nilpotency index must be positive".into()));
                }
                RingSpec::UAdic { p, r, e }
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unknown ring {s:?}; expected Fq:p^r, Z:p^e, GR:p^e:r or U:p^r:e"
                )))
            }
        };
        Ok(spec)
    }
}

impl RingSpec {
    /// Builds the ring, with every table bounded by `cap` when given.
    pub fn build(&self, cap: Option<u64>) -> Result<AnyRing> {
        Ok(match (*self, cap) {
            (RingSpec::Field { p, r }, None) => {
                AnyRing::Field(constacyclic::ffield::make_field(p, r)?)
            }
            (RingSpec::Field { p, r }, Some(c)) => AnyRing::Field(Field::with_cap(p, r, c)?),
            (RingSpec::Galois { p, e, r }, None) => AnyRing::Chain(ChainRing::galois(p, e, r)?),
            (RingSpec::Galois { p, e, r }, Some(c)) => {
                AnyRing::Chain(ChainRing::with_caps(Family::Galois, p, e, r, c, c)?)
            }
            (RingSpec::UAdic { p, r, e }, None) => AnyRing::Chain(ChainRing::u_adic(p, r, e)?),
            (RingSpec::UAdic { p, r, e }, Some(c)) => {
                AnyRing::Chain(ChainRing::with_caps(Family::UAdic, p, e, r, c, c)?)
            }
        })
    }
}

/// Parsed element expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    GenPow(i64),
    List(Vec<Expr>),
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = ExprParser {
            s: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(e)
    }
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        text.parse()
            .map_err(|_| Error::Parse(format!("expected an integer at offset {start}")))
    }

    fn expr(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'g') => {
                self.pos += 1;
                if self.peek() != Some(b'^') {
                    return Ok(Expr::GenPow(1));
                }
                self.pos += 1;
                Ok(Expr::GenPow(self.int()?))
            }
            Some(b'[') => {
                self.pos += 1;
                let mut items = Vec::new();
                if self.peek() == Some(b']') {
                    self.pos += 1;
                    return Ok(Expr::List(items));
                }
                loop {
                    items.push(self.expr()?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Expr::List(items));
                        }
                        _ => {
                            return Err(Error::Parse(format!(
                                "expected ',' or ']' at offset {}",
                                self.pos
                            )))
                        }
                    }
                }
            }
            _ => Ok(Expr::Int(self.int()?)),
        }
    }
}

fn ints(items: &[Expr]) -> Result<Vec<i64>> {
    items
        .iter()
        .map(|e| match e {
            Expr::Int(k) => Ok(*k),
            _ => Err(Error::Parse("coordinates must be integers".into())),
        })
        .collect()
}

fn pow_signed<R: Ring>(ring: &R, g: R::Elem, k: i64) -> Result<R::Elem> {
    let base = if k < 0 {
        ring.inv(g).ok_or(Error::NonUnit)?
    } else {
        g
    };
    Ok(ring.pow(base, k.unsigned_abs()))
}

/// Rings whose elements can be written as [`Expr`].
pub trait ParseElem: Ring {
    fn eval(&self, e: &Expr) -> Result<Self::Elem>;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.eval(&s.parse()?)
    }
}

impl ParseElem for Field {
    fn eval(&self, e: &Expr) -> Result<FieldElem> {
        match e {
            Expr::Int(k) => Ok(self.from_int(*k)),
            Expr::GenPow(k) => Ok(self.gen_pow(*k)),
            Expr::List(items) => self.from_coords(&ints(items)?),
        }
    }
}

impl ParseElem for ChainRing {
    fn eval(&self, e: &Expr) -> Result<RingElem> {
        match (e, self.family()) {
            (Expr::Int(k), _) => Ok(self.from_int(*k)),
            (Expr::GenPow(k), Family::Galois) => pow_signed(self, self.primitive_element()?, *k),
            (Expr::GenPow(k), Family::UAdic) => {
                Ok(self.lift_residue(self.residue_field().gen_pow(*k)))
            }
            (Expr::List(items), Family::Galois) => self.from_coords(&ints(items)?),
            (Expr::List(items), Family::UAdic) => {
                let k = self.residue_field();
                let coeffs = items
                    .iter()
                    .map(|x| k.eval(x))
                    .collect::<Result<Vec<_>>>()?;
                self.from_field_coeffs(&coeffs)
            }
        }
    }
}
