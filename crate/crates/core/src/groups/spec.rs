use std::fmt;
use std::str::FromStr;

use super::{build, FiniteGroup};
use crate::error::{Error, Result};

/// Text description of a group, e.g. `SD(7,3,2)` or `Z4 x Z4`.
///
/// Grammar: `Z<n>`, `E(<p>,<k>)`, `SD(<n>,<m>,<r>)`, `HEIS(<p>)`,
/// `AFFSQ(<q>)`, infix `x` for direct products (left associative) and
/// parentheses for grouping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    ElemAbelian(usize, u32),
    Semidirect { n: usize, m: usize, r: usize },
    Heisenberg(usize),
    AffineSquare(usize),
    Direct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match *self {
            GroupSpec::Cyclic(n) => build::cyclic(n),
            GroupSpec::ElemAbelian(p, k) => build::elementary_abelian(p, k),
            GroupSpec::Semidirect { n, m, r } => build::semidirect(n, m, r),
            GroupSpec::Heisenberg(p) => build::heisenberg(p),
            GroupSpec::AffineSquare(q) => build::affine_square(q),
            GroupSpec::Direct(ref a, ref b) => build::direct(&a.build()?, &b.build()?),
        }
    }

    pub fn direct(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Direct(Box::new(a), Box::new(b))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::ElemAbelian(p, k) => write!(f, "E({p},{k})"),
            GroupSpec::Semidirect { n, m, r } => write!(f, "SD({n},{m},{r})"),
            GroupSpec::Heisenberg(p) => write!(f, "HEIS({p})"),
            GroupSpec::AffineSquare(q) => write!(f, "AFFSQ({q})"),
            GroupSpec::Direct(a, b) => {
                let wrap = |g: &GroupSpec| match g {
                    GroupSpec::Direct(..) => format!("({g})"),
                    _ => g.to_string(),
                };
                write!(f, "{} x {}", a, wrap(b))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn args(&mut self, count: usize) -> Result<Vec<usize>> {
        self.expect("(")?;
        let mut out = vec![self.number()?];
        for _ in 1..count {
            self.expect(",")?;
            out.push(self.number()?);
        }
        self.expect(")")?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut acc = self.term()?;
        while self.eat("x") {
            acc = GroupSpec::direct(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroupSpec> {
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            Ok(inner)
        } else if self.eat("SD") {
            let a = self.args(3)?;
            Ok(GroupSpec::Semidirect { n: a[0], m: a[1], r: a[2] })
        } else if self.eat("HEIS") {
            Ok(GroupSpec::Heisenberg(self.args(1)?[0]))
        } else if self.eat("AFFSQ") {
            Ok(GroupSpec::AffineSquare(self.args(1)?[0]))
        } else if self.eat("E") {
            let a = self.args(2)?;
            Ok(GroupSpec::ElemAbelian(a[0], a[1] as u32))
        } else if self.eat("Z") {
            Ok(GroupSpec::Cyclic(self.number()?))
        } else {
            Err(self.error("expected a group (Z, E, SD, HEIS, AFFSQ)"))
        }
    }
}
