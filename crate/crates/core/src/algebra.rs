//! Max-blank algebras: totally ordered complete lattices with a monotone
//! multiplication that distributes over joins.
//!
//! Every concrete instance is a variant of [`Algebra`]. Elements are plain
//! values ([`Element`]); the algebra they belong to is supplied at each call
//! and checked, so an element from the wrong carrier is reported as an
//! [`Error::AlgebraMismatch`] instead of being silently reinterpreted.
//!
//! | name          | carrier                     | ⊕    | ⊗            | 1      |
//! |---------------|-----------------------------|------|--------------|--------|
//! | `max-plus`    | ℚ ∪ {−∞, ∞}                 | max  | +            | 0      |
//! | `max-min`     | ℚ ∪ {−∞, ∞}                 | max  | min          | ∞      |
//! | `bool`        | {0, 1}                      | or   | and          | 1      |
//! | `chain-min:N` | {0, …, N}                   | max  | min          | N      |
//! | `powerset:k`  | subsets of a k-element set  | ∪    | ∩            | ground |
//!
//! `powerset:k` is a join-blank algebra that is not totally ordered. It
//! supports the lattice and semiring operations but rejects everything that
//! needs a total order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest ground set accepted for `powerset:k`; elements are printed as the
/// letters `a`, `b`, ….
pub const MAX_POWERSET_GROUND: u8 = 16;

/// An extended rational: `−∞ < q < ∞` for every rational `q`.
///
/// The derived order is the intended one because variants are declared
/// bottom-to-top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl ExtRational {
    pub fn int(value: i64) -> Self {
        ExtRational::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExtRational::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ExtRational::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    /// Accepts `-inf`, `inf`, `+inf`, `p/q`, integers and plain decimals
    /// such as `-1.25`. Decimals are converted exactly.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "-inf" | "-∞" | "-infinity" => return Ok(ExtRational::NegInf),
            "inf" | "+inf" | "∞" | "infinity" => return Ok(ExtRational::PosInf),
            _ => {}
        }
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        if t.contains('/') {
            let (n, d) = t.split_once('/').ok_or_else(bad)?;
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(ExtRational::Finite(BigRational::new(n, d)));
        }
        let (negative, digits) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let mantissa: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
        let mut q = BigRational::new(mantissa, scale);
        if negative {
            q = -q;
        }
        Ok(ExtRational::Finite(q))
    }
}

/// A carrier value of some algebra.
///
/// `Ext` serves both `max-plus` and `max-min`; `Set` stores a subset of the
/// ground set `{0, …, k−1}` as a bit mask.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Ext(ExtRational),
    Bool(bool),
    Chain(u32),
    Set(u32),
}

impl Element {
    pub fn neg_inf() -> Self {
        Element::Ext(ExtRational::NegInf)
    }

    pub fn pos_inf() -> Self {
        Element::Ext(ExtRational::PosInf)
    }

    pub fn int(value: i64) -> Self {
        Element::Ext(ExtRational::int(value))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Element::Ext(ExtRational::ratio(numer, denom))
    }

    /// Builds a subset element from ground-set indices.
    pub fn set(members: &[u8]) -> Self {
        Element::Set(members.iter().fold(0, |mask, &i| mask | (1 << i)))
    }

    fn kind(&self) -> &'static str {
        match self {
            Element::Ext(_) => "extended rational",
            Element::Bool(_) => "boolean",
            Element::Chain(_) => "chain index",
            Element::Set(_) => "subset",
        }
    }
}

impl From<ExtRational> for Element {
    fn from(value: ExtRational) -> Self {
        Element::Ext(value)
    }
}

/// Solution set of a scalar equation `a ⊗ v = w`.
///
/// Over a totally ordered complete lattice the set is convex and closed under
/// non-empty joins, so it is empty, `[p, q]`, or `(p, q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarSolution {
    Empty,
    Closed(Element, Element),
    LeftOpen(Element, Element),
}

impl ScalarSolution {
    pub fn is_empty(&self) -> bool {
        matches!(self, ScalarSolution::Empty)
    }

    pub fn is_left_open(&self) -> bool {
        matches!(self, ScalarSolution::LeftOpen(..))
    }

    pub fn lower(&self) -> Option<&Element> {
        match self {
            ScalarSolution::Empty => None,
            ScalarSolution::Closed(p, _) | ScalarSolution::LeftOpen(p, _) => Some(p),
        }
    }

    pub fn upper(&self) -> Option<&Element> {
        match self {
            ScalarSolution::Empty => None,
            ScalarSolution::Closed(_, q) | ScalarSolution::LeftOpen(_, q) => Some(q),
        }
    }

    pub fn contains(&self, alg: Algebra, v: &Element) -> Result<bool> {
        Ok(match self {
            ScalarSolution::Empty => {
                alg.check(v)?;
                false
            }
            ScalarSolution::Closed(p, q) => alg.leq(p, v)? && alg.leq(v, q)?,
            ScalarSolution::LeftOpen(p, q) => alg.lt(p, v)? && alg.leq(v, q)?,
        })
    }
}

/// A concrete join-blank algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    MaxPlus,
    MaxMin,
    Bool,
    /// The chain `{0, …, N}` with `⊗ = min`.
    ChainMin(u32),
    /// Subsets of a ground set of the given size, `⊕ = ∪`, `⊗ = ∩`.
    PowerSet(u8),
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::MaxPlus => f.write_str("max-plus"),
            Algebra::MaxMin => f.write_str("max-min"),
            Algebra::Bool => f.write_str("bool"),
            Algebra::ChainMin(n) => write!(f, "chain-min:{n}"),
            Algebra::PowerSet(k) => write!(f, "powerset:{k}"),
        }
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let param = |prefix: &str| -> Option<&str> { t.strip_prefix(prefix) };
        match t {
            "max-plus" => return Ok(Algebra::MaxPlus),
            "max-min" => return Ok(Algebra::MaxMin),
            "bool" => return Ok(Algebra::Bool),
            _ => {}
        }
        if let Some(n) = param("chain-min:") {
            let n: u32 = n
                .parse()
                .map_err(|_| Error::Parse(format!("invalid chain length in {s:?}")))?;
            if n == 0 {
                return Err(Error::Parse("chain-min needs N >= 1".into()));
            }
            return Ok(Algebra::ChainMin(n));
        }
        if let Some(k) = param("powerset:") {
            let k: u8 = k
                .parse()
                .map_err(|_| Error::Parse(format!("invalid ground set size in {s:?}")))?;
            if k > MAX_POWERSET_GROUND {
                return Err(Error::Parse(format!(
                    "powerset ground set is limited to {MAX_POWERSET_GROUND} elements"
                )));
            }
            return Ok(Algebra::PowerSet(k));
        }
        Err(Error::Parse(format!("unknown algebra {s:?}")))
    }
}

impl Algebra {
    pub fn is_totally_ordered(self) -> bool {
        !matches!(self, Algebra::PowerSet(_))
    }

    /// True for the extended-rational carriers, where every non-degenerate
    /// interval has interior points.
    pub fn is_dense(self) -> bool {
        matches!(self, Algebra::MaxPlus | Algebra::MaxMin)
    }

    pub fn is_finite(self) -> bool {
        !self.is_dense()
    }

    pub fn bottom(self) -> Element {
        match self {
            Algebra::MaxPlus | Algebra::MaxMin => Element::neg_inf(),
            Algebra::Bool => Element::Bool(false),
            Algebra::ChainMin(_) => Element::Chain(0),
            Algebra::PowerSet(_) => Element::Set(0),
        }
    }

    pub fn top(self) -> Element {
        match self {
            Algebra::MaxPlus | Algebra::MaxMin => Element::pos_inf(),
            Algebra::Bool => Element::Bool(true),
            Algebra::ChainMin(n) => Element::Chain(n),
            Algebra::PowerSet(k) => Element::Set(ground_mask(k)),
        }
    }

    /// Multiplicative identity.
    pub fn one(self) -> Element {
        match self {
            Algebra::MaxPlus => Element::int(0),
            _ => self.top(),
        }
    }

    /// Number of carrier elements, `None` for dense carriers.
    pub fn carrier_size(self) -> Option<u64> {
        match self {
            Algebra::MaxPlus | Algebra::MaxMin => None,
            Algebra::Bool => Some(2),
            Algebra::ChainMin(n) => Some(u64::from(n) + 1),
            Algebra::PowerSet(k) => Some(1u64 << k),
        }
    }

    /// The full carrier, ascending for totally ordered instances and by bit
    /// mask for power sets. `None` for dense carriers.
    pub fn carrier(self) -> Option<Vec<Element>> {
        match self {
            Algebra::MaxPlus | Algebra::MaxMin => None,
            Algebra::Bool => Some(vec![Element::Bool(false), Element::Bool(true)]),
            Algebra::ChainMin(n) => Some((0..=n).map(Element::Chain).collect()),
            Algebra::PowerSet(k) => Some((0..=ground_mask(k)).map(Element::Set).collect()),
        }
    }

    pub fn contains(self, e: &Element) -> bool {
        match (self, e) {
            (Algebra::MaxPlus | Algebra::MaxMin, Element::Ext(_)) => true,
            (Algebra::Bool, Element::Bool(_)) => true,
            (Algebra::ChainMin(n), Element::Chain(i)) => *i <= n,
            (Algebra::PowerSet(k), Element::Set(m)) => m & !ground_mask(k) == 0,
            _ => false,
        }
    }

    pub fn check(self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::mismatch(format!(
                "{} {} is not an element of {self}",
                e.kind(),
                self.format_element(e)
            )))
        }
    }

    fn check2(self, a: &Element, b: &Element) -> Result<()> {
        self.check(a)?;
        self.check(b)
    }

    fn require_total(self) -> Result<()> {
        if self.is_totally_ordered() {
            Ok(())
        } else {
            Err(Error::NotTotallyOrdered(self))
        }
    }

    /// Total-order comparison. Fails on `powerset:k`.
    pub fn compare(self, a: &Element, b: &Element) -> Result<Ordering> {
        self.check2(a, b)?;
        self.require_total()?;
        Ok(a.cmp(b))
    }

    /// Lattice order; the subset relation for power sets.
    pub fn leq(self, a: &Element, b: &Element) -> Result<bool> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Element::Set(x), Element::Set(y)) => x & !y == 0,
            _ => a <= b,
        })
    }

    pub fn lt(self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.leq(a, b)? && a != b)
    }

    pub fn join(self, a: &Element, b: &Element) -> Result<Element> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Element::Set(x), Element::Set(y)) => Element::Set(x | y),
            _ => a.max(b).clone(),
        })
    }

    pub fn meet(self, a: &Element, b: &Element) -> Result<Element> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Element::Set(x), Element::Set(y)) => Element::Set(x & y),
            _ => a.min(b).clone(),
        })
    }

    /// Join of an arbitrary finite family; the bottom element for an empty one.
    pub fn join_all<'a>(self, items: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        items
            .into_iter()
            .try_fold(self.bottom(), |acc, e| self.join(&acc, e))
    }

    pub fn otimes(self, a: &Element, b: &Element) -> Result<Element> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Element::Ext(x), Element::Ext(y)) if self == Algebra::MaxPlus => {
                Element::Ext(tropical_product(x, y))
            }
            (Element::Set(x), Element::Set(y)) => Element::Set(x & y),
            // max-min, bool and chain-min all multiply by taking the minimum
            _ => a.min(b).clone(),
        })
    }

    /// The exact set `{v | a ⊗ v = w}`.
    pub fn solve_scalar(self, a: &Element, w: &Element) -> Result<ScalarSolution> {
        self.check2(a, w)?;
        self.require_total()?;
        let (bottom, top) = (self.bottom(), self.top());
        let sol = match self {
            Algebra::MaxPlus => {
                let (Element::Ext(a), Element::Ext(w)) = (a, w) else {
                    unreachable!("checked above")
                };
                use ExtRational::*;
                match (a, w) {
                    // −∞ ⊗ v = −∞ for every v
                    (NegInf, NegInf) => ScalarSolution::Closed(bottom, top),
                    (NegInf, _) => ScalarSolution::Empty,
                    (_, NegInf) => ScalarSolution::Closed(bottom.clone(), bottom),
                    // ∞ ⊗ v = ∞ for every v above −∞
                    (PosInf, PosInf) => ScalarSolution::LeftOpen(bottom, top),
                    (PosInf, Finite(_)) => ScalarSolution::Empty,
                    (Finite(_), PosInf) => ScalarSolution::Closed(top.clone(), top),
                    (Finite(a), Finite(w)) => {
                        let v = Element::Ext(Finite(w - a));
                        ScalarSolution::Closed(v.clone(), v)
                    }
                }
            }
            _ => match w.cmp(a) {
                Ordering::Greater => ScalarSolution::Empty,
                Ordering::Equal => ScalarSolution::Closed(a.clone(), top),
                Ordering::Less => ScalarSolution::Closed(w.clone(), w.clone()),
            },
        };
        Ok(sol)
    }

    /// Residual `max{v | a ⊗ v ≤ w}`, the right adjoint of `v ↦ a ⊗ v`.
    pub fn residual(self, a: &Element, w: &Element) -> Result<Element> {
        self.check2(a, w)?;
        self.require_total()?;
        Ok(match self {
            Algebra::MaxPlus => {
                let (Element::Ext(a), Element::Ext(w)) = (a, w) else {
                    unreachable!("checked above")
                };
                use ExtRational::*;
                Element::Ext(match (a, w) {
                    (NegInf, _) | (_, PosInf) => PosInf,
                    (PosInf, _) | (_, NegInf) => NegInf,
                    (Finite(a), Finite(w)) => Finite(w - a),
                })
            }
            _ if a <= w => self.top(),
            _ => w.clone(),
        })
    }

    /// Whether the open interval `(a, b)` contains a carrier element.
    ///
    /// Dense carriers answer `a < b`; finite chains look for a carrier
    /// element strictly between the two.
    pub fn has_interior(self, a: &Element, b: &Element) -> Result<bool> {
        self.check2(a, b)?;
        self.require_total()?;
        Ok(match (a, b) {
            (Element::Chain(x), Element::Chain(y)) => x + 1 < *y,
            (Element::Bool(_), Element::Bool(_)) => false,
            _ => a < b,
        })
    }

    /// Immediate successor in a finite chain.
    pub fn successor(self, a: &Element) -> Result<Option<Element>> {
        self.check(a)?;
        self.require_total()?;
        Ok(match a {
            Element::Bool(false) => Some(Element::Bool(true)),
            Element::Chain(i) if self.contains(&Element::Chain(i + 1)) => Some(Element::Chain(i + 1)),
            _ => None,
        })
    }

    /// Immediate predecessor in a finite chain.
    pub fn predecessor(self, a: &Element) -> Result<Option<Element>> {
        self.check(a)?;
        self.require_total()?;
        Ok(match a {
            Element::Bool(true) => Some(Element::Bool(false)),
            Element::Chain(i) if *i > 0 => Some(Element::Chain(i - 1)),
            _ => None,
        })
    }

    /// Parses a literal of this algebra.
    ///
    /// Extended rationals: `-inf`, `inf`, `p/q`, decimals. Booleans: `0`,
    /// `1`, `false`, `true`. Chains: an index in `0..=N`. Power sets: a
    /// brace list of letters such as `{a,c}`.
    pub fn parse_element(self, s: &str) -> Result<Element> {
        let t = s.trim();
        let e = match self {
            Algebra::MaxPlus | Algebra::MaxMin => Element::Ext(t.parse()?),
            Algebra::Bool => match t {
                "0" | "false" => Element::Bool(false),
                "1" | "true" => Element::Bool(true),
                _ => return Err(Error::Parse(format!("invalid boolean literal {s:?}"))),
            },
            Algebra::ChainMin(_) => Element::Chain(
                t.parse()
                    .map_err(|_| Error::Parse(format!("invalid chain literal {s:?}")))?,
            ),
            Algebra::PowerSet(_) => {
                let inner = t
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("invalid subset literal {s:?}")))?;
                let mut mask = 0u32;
                for item in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                    let mut chars = item.chars();
                    let (Some(c @ 'a'..='z'), None) = (chars.next(), chars.next()) else {
                        return Err(Error::Parse(format!("invalid subset member {item:?}")));
                    };
                    mask |= 1 << (c as u32 - 'a' as u32);
                }
                Element::Set(mask)
            }
        };
        if !self.contains(&e) {
            return Err(Error::Parse(format!("{s:?} is out of range for {self}")));
        }
        Ok(e)
    }

    pub fn format_element(self, e: &Element) -> String {
        match e {
            Element::Ext(x) => x.to_string(),
            Element::Bool(b) => u8::from(*b).to_string(),
            Element::Chain(i) => i.to_string(),
            Element::Set(mask) => {
                let letters: Vec<String> = (0..32u32)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| char::from_u32('a' as u32 + i).unwrap_or('?').to_string())
                    .collect();
                format!("{{{}}}", letters.join(","))
            }
        }
    }
}

fn ground_mask(k: u8) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// Max-plus product on extended rationals. `−∞` absorbs everything,
/// including `∞`.
fn tropical_product(a: &ExtRational, b: &ExtRational) -> ExtRational {
    use ExtRational::*;
    match (a, b) {
        (NegInf, _) | (_, NegInf) => NegInf,
        (PosInf, _) | (_, PosInf) => PosInf,
        (Finite(x), Finite(y)) => Finite(x + y),
    }
}

/// Exact midpoint of two finite extended rationals.
pub fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// A finite probe strictly below (`below = true`) or above a finite value.
pub fn step(a: &BigRational, below: bool) -> BigRational {
    if below {
        a - BigRational::one()
    } else {
        a + BigRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOTAL: [Algebra; 4] = [
        Algebra::MaxPlus,
        Algebra::MaxMin,
        Algebra::Bool,
        Algebra::ChainMin(3),
    ];

    fn ext_pool() -> Vec<Element> {
        let mut pool = vec![Element::neg_inf(), Element::pos_inf()];
        pool.extend([-3, -2, -1, 0, 1, 2, 3, 5].map(Element::int));
        pool.extend([Element::ratio(1, 2), Element::ratio(-7, 3)]);
        pool
    }

    fn sample(alg: Algebra) -> Vec<Element> {
        alg.carrier().unwrap_or_else(ext_pool)
    }

    #[test]
    fn compare_examples() {
        let mp = Algebra::MaxPlus;
        assert_eq!(mp.compare(&Element::neg_inf(), &Element::int(0)), Ok(Ordering::Less));
        assert_eq!(mp.compare(&Element::int(3), &Element::int(3)), Ok(Ordering::Equal));
        let chain = Algebra::ChainMin(3);
        assert_eq!(chain.compare(&Element::Chain(2), &Element::Chain(3)), Ok(Ordering::Less));
    }

    #[test]
    fn compare_errors() {
        let ps = Algebra::PowerSet(2);
        assert_eq!(
            ps.compare(&Element::Set(1), &Element::Set(2)),
            Err(Error::NotTotallyOrdered(ps))
        );
        assert!(matches!(
            Algebra::MaxPlus.compare(&Element::Bool(true), &Element::int(1)),
            Err(Error::AlgebraMismatch { .. })
        ));
        assert!(matches!(
            Algebra::ChainMin(3).compare(&Element::Chain(4), &Element::Chain(1)),
            Err(Error::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(
            Algebra::MaxPlus.join(&Element::int(2), &Element::int(5)),
            Ok(Element::int(5))
        );
        let ps = Algebra::PowerSet(3);
        assert_eq!(
            ps.join(&Element::set(&[0]), &Element::set(&[1])),
            Ok(Element::set(&[0, 1]))
        );
        assert_eq!(
            Algebra::MaxMin.meet(&Element::pos_inf(), &Element::int(1)),
            Ok(Element::int(1))
        );
    }

    #[test]
    fn otimes_examples() {
        let mp = Algebra::MaxPlus;
        assert_eq!(mp.otimes(&Element::pos_inf(), &Element::neg_inf()), Ok(Element::neg_inf()));
        assert_eq!(mp.otimes(&Element::int(2), &Element::int(3)), Ok(Element::int(5)));
        assert_eq!(
            Algebra::MaxMin.otimes(&Element::int(2), &Element::int(7)),
            Ok(Element::int(2))
        );
    }

    #[test]
    fn solve_scalar_examples() {
        let mp = Algebra::MaxPlus;
        assert_eq!(
            mp.solve_scalar(&Element::pos_inf(), &Element::pos_inf()),
            Ok(ScalarSolution::LeftOpen(Element::neg_inf(), Element::pos_inf()))
        );
        assert_eq!(
            mp.solve_scalar(&Element::int(0), &Element::int(5)),
            Ok(ScalarSolution::Closed(Element::int(5), Element::int(5)))
        );
        assert_eq!(
            mp.solve_scalar(&Element::neg_inf(), &Element::int(5)),
            Ok(ScalarSolution::Empty)
        );
        assert_eq!(
            Algebra::MaxMin.solve_scalar(&Element::int(3), &Element::int(3)),
            Ok(ScalarSolution::Closed(Element::int(3), Element::pos_inf()))
        );
        assert_eq!(
            Algebra::ChainMin(3).solve_scalar(&Element::Chain(2), &Element::Chain(3)),
            Ok(ScalarSolution::Empty)
        );
        assert_eq!(
            Algebra::PowerSet(2).solve_scalar(&Element::Set(1), &Element::Set(1)),
            Err(Error::NotTotallyOrdered(Algebra::PowerSet(2)))
        );
    }

    #[test]
    fn residual_examples() {
        let mp = Algebra::MaxPlus;
        assert_eq!(mp.residual(&Element::int(3), &Element::int(7)), Ok(Element::int(4)));
        assert_eq!(mp.residual(&Element::neg_inf(), &Element::int(5)), Ok(Element::pos_inf()));
        assert_eq!(
            Algebra::ChainMin(3).residual(&Element::Chain(3), &Element::Chain(2)),
            Ok(Element::Chain(2))
        );
        assert!(Algebra::PowerSet(1)
            .residual(&Element::Set(0), &Element::Set(0))
            .is_err());
    }

    #[test]
    fn scalar_solution_matches_brute_force() {
        for alg in TOTAL {
            let pool = sample(alg);
            for a in &pool {
                for w in &pool {
                    let sol = alg.solve_scalar(a, w).unwrap();
                    for v in &pool {
                        let expected = alg.otimes(a, v).unwrap() == *w;
                        assert_eq!(sol.contains(alg, v).unwrap(), expected, "{alg} a={a:?} w={w:?} v={v:?}");
                    }
                    if let Some(q) = sol.upper() {
                        assert_eq!(&alg.residual(a, w).unwrap(), q);
                        assert_eq!(&alg.otimes(a, q).unwrap(), w);
                    }
                    match &sol {
                        ScalarSolution::Closed(p, q) => assert!(p <= q),
                        ScalarSolution::LeftOpen(p, q) => assert!(p < q),
                        ScalarSolution::Empty => {}
                    }
                }
            }
        }
    }

    #[test]
    fn residual_is_right_adjoint() {
        for alg in TOTAL {
            let pool = sample(alg);
            for a in &pool {
                for w in &pool {
                    let r = alg.residual(a, w).unwrap();
                    for v in &pool {
                        let lhs = alg.leq(&alg.otimes(a, v).unwrap(), w).unwrap();
                        assert_eq!(lhs, alg.leq(v, &r).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn finite_carriers_satisfy_semiring_laws() {
        let algebras = [Algebra::Bool, Algebra::ChainMin(3), Algebra::PowerSet(2)];
        for alg in algebras {
            let c = alg.carrier().unwrap();
            for a in &c {
                assert_eq!(alg.otimes(&alg.one(), a).unwrap(), *a);
                assert_eq!(alg.otimes(&alg.bottom(), a).unwrap(), alg.bottom());
                assert_eq!(alg.join(&alg.bottom(), a).unwrap(), *a);
                for b in &c {
                    assert_eq!(alg.join(a, b), alg.join(b, a));
                    for x in &c {
                        let ab_x = alg.join(&alg.join(a, b).unwrap(), x).unwrap();
                        assert_eq!(ab_x, alg.join(a, &alg.join(b, x).unwrap()).unwrap());
                        let m = alg.otimes(&alg.otimes(a, b).unwrap(), x).unwrap();
                        assert_eq!(m, alg.otimes(a, &alg.otimes(b, x).unwrap()).unwrap());
                        let lhs = alg.otimes(a, &alg.join(b, x).unwrap()).unwrap();
                        let rhs = alg
                            .join(&alg.otimes(a, b).unwrap(), &alg.otimes(a, x).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn otimes_distributes_over_arbitrary_joins() {
        // every subset of a carrier with at most four elements
        for alg in [Algebra::Bool, Algebra::ChainMin(3), Algebra::PowerSet(2)] {
            let c = alg.carrier().unwrap();
            assert!(c.len() <= 4);
            for mask in 0u32..(1 << c.len()) {
                let family: Vec<&Element> = (0..c.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| &c[i])
                    .collect();
                let sup = alg.join_all(family.iter().copied()).unwrap();
                for v in &c {
                    let products: Vec<Element> =
                        family.iter().map(|u| alg.otimes(v, u).unwrap()).collect();
                    assert_eq!(alg.otimes(v, &sup).unwrap(), alg.join_all(&products).unwrap());
                }
            }
        }
    }

    #[test]
    fn finite_chain_interior_and_neighbours() {
        let chain = Algebra::ChainMin(3);
        assert!(!chain.has_interior(&Element::Chain(1), &Element::Chain(2)).unwrap());
        assert!(chain.has_interior(&Element::Chain(0), &Element::Chain(2)).unwrap());
        assert_eq!(chain.successor(&Element::Chain(3)).unwrap(), None);
        assert_eq!(chain.predecessor(&Element::Chain(1)).unwrap(), Some(Element::Chain(0)));
        assert!(Algebra::MaxPlus
            .has_interior(&Element::neg_inf(), &Element::int(0))
            .unwrap());
    }

    #[test]
    fn literals() {
        let mp = Algebra::MaxPlus;
        assert_eq!(mp.parse_element("-inf"), Ok(Element::neg_inf()));
        assert_eq!(mp.parse_element("inf"), Ok(Element::pos_inf()));
        assert_eq!(mp.parse_element("1/2"), Ok(Element::ratio(1, 2)));
        assert_eq!(mp.parse_element("-1.25"), Ok(Element::ratio(-5, 4)));
        assert_eq!(mp.parse_element("4/2"), Ok(Element::int(2)));
        assert!(mp.parse_element("1/0").is_err());
        assert!(mp.parse_element("abc").is_err());
        assert!(mp.parse_element(".").is_err());
        assert_eq!(mp.format_element(&Element::ratio(-6, 4)), "-3/2");
        assert_eq!(mp.format_element(&Element::int(7)), "7");

        assert!(Algebra::ChainMin(3).parse_element("4").is_err());
        assert_eq!(Algebra::Bool.parse_element("true"), Ok(Element::Bool(true)));
        let ps = Algebra::PowerSet(3);
        assert_eq!(ps.parse_element("{a, c}"), Ok(Element::set(&[0, 2])));
        assert_eq!(ps.parse_element("{}"), Ok(Element::Set(0)));
        assert!(ps.parse_element("{d}").is_err());
        assert_eq!(ps.format_element(&Element::set(&[0, 2])), "{a,c}");
    }

    #[test]
    fn algebra_names_round_trip() {
        for name in ["max-plus", "max-min", "bool", "chain-min:3", "powerset:2"] {
            let alg: Algebra = name.parse().unwrap();
            assert_eq!(alg.to_string(), name);
        }
        assert!("chain-min:0".parse::<Algebra>().is_err());
        assert!("powerset:40".parse::<Algebra>().is_err());
        assert!("min-plus".parse::<Algebra>().is_err());
    }
}
