//! 2x2 matrices over a quadratic order, elementary moves and words in them.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{QuadInt, RingDesc};
use crate::unimodular::UniPair;

/// A 2x2 matrix, row-major, with all entries in one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    m: [QuadInt; 4],
}

impl Mat2 {
    pub fn new(m11: QuadInt, m12: QuadInt, m21: QuadInt, m22: QuadInt) -> Result<Self> {
        let ring = m11.ring();
        for e in [&m12, &m21, &m22] {
            if e.ring() != ring {
                return Err(Error::RingMismatch { left: ring, right: e.ring() });
            }
        }
        Ok(Mat2 { m: [m11, m12, m21, m22] })
    }

    /// Builds a matrix from `(a, b)` coordinate pairs, row-major.
    pub fn from_coords(ring: RingDesc, coords: [(i64, i64); 4]) -> Self {
        let [p, q, r, s] = coords.map(|(a, b)| QuadInt::new(ring, a, b));
        Mat2 { m: [p, q, r, s] }
    }

    pub fn identity(ring: RingDesc) -> Self {
        Mat2 { m: [ring.one(), ring.zero(), ring.zero(), ring.one()] }
    }

    /// `[[0, 1], [-1, 0]]`.
    pub fn s_matrix(ring: RingDesc) -> Self {
        Mat2 { m: [ring.zero(), ring.one(), -ring.one(), ring.zero()] }
    }

    pub fn ring(&self) -> RingDesc {
        self.m[0].ring()
    }

    pub fn m11(&self) -> &QuadInt {
        &self.m[0]
    }
    pub fn m12(&self) -> &QuadInt {
        &self.m[1]
    }
    pub fn m21(&self) -> &QuadInt {
        &self.m[2]
    }
    pub fn m22(&self) -> &QuadInt {
        &self.m[3]
    }

    pub fn entries(&self) -> &[QuadInt; 4] {
        &self.m
    }

    pub fn top_row(&self) -> UniPair {
        UniPair::new_unchecked(self.m[0].clone(), self.m[1].clone())
    }

    pub fn mul(&self, other: &Mat2) -> Result<Mat2> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch { left: self.ring(), right: other.ring() });
        }
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        Ok(Mat2 { m: [&(a * e) + &(b * g), &(a * f) + &(b * h), &(c * e) + &(d * g), &(c * f) + &(d * h)] })
    }

    pub fn det(&self) -> QuadInt {
        let [a, b, c, d] = &self.m;
        &(a * d) - &(b * c)
    }

    /// Inverse of a determinant-one matrix, via the adjugate.
    pub fn inv_sl2(&self) -> Result<Mat2> {
        let det = self.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let [a, b, c, d] = &self.m;
        Ok(Mat2 { m: [d.clone(), -b, -c, a.clone()] })
    }

    /// Lower unitriangular: `[[1, 0], [*, 1]]`.
    pub fn is_l2(&self) -> bool {
        self.m[0].is_one() && self.m[1].is_zero() && self.m[3].is_one()
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { m: self.m.clone().map(|x| -x) }
    }

    /// Parses `[[a,b],[c,d]]` with entries in the `a+b*w` form.
    pub fn parse(ring: RingDesc, s: &str) -> Result<Mat2> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|x| x.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("expected `[[a,b],[c,d]]`, got `{s}`")))?;
        let (row1, row2) =
            inner.split_once("],[").ok_or_else(|| Error::Parse(format!("expected two rows in `{s}`")))?;
        let entries: Vec<&str> = row1.split(',').chain(row2.split(',')).collect();
        if entries.len() != 4 || row1.split(',').count() != 2 {
            return Err(Error::Parse(format!("expected a 2x2 matrix, got `{s}`")));
        }
        let e: Vec<QuadInt> = entries.iter().map(|t| QuadInt::parse(ring, t)).collect::<Result<_>>()?;
        let [a, b, c, d]: [QuadInt; 4] = e.try_into().expect("four entries");
        Mat2::new(a, b, c, d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Which off-diagonal slot an elementary matrix occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `[[1, t], [0, 1]]`
    Upper,
    /// `[[1, 0], [t, 1]]`
    Lower,
}

impl Side {
    fn letter(self) -> char {
        match self {
            Side::Upper => 'U',
            Side::Lower => 'L',
        }
    }
}

/// A nonzero elementary generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemMove {
    side: Side,
    t: QuadInt,
}

impl ElemMove {
    pub fn new(side: Side, t: QuadInt) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::InvalidMove);
        }
        Ok(ElemMove { side, t })
    }

    pub fn upper(t: QuadInt) -> Result<Self> {
        Self::new(Side::Upper, t)
    }

    pub fn lower(t: QuadInt) -> Result<Self> {
        Self::new(Side::Lower, t)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn t(&self) -> &QuadInt {
        &self.t
    }

    pub fn inverse(&self) -> ElemMove {
        ElemMove { side: self.side, t: -&self.t }
    }

    pub fn matrix(&self) -> Mat2 {
        let ring = self.t.ring();
        match self.side {
            Side::Upper => Mat2 { m: [ring.one(), self.t.clone(), ring.zero(), ring.one()] },
            Side::Lower => Mat2 { m: [ring.one(), ring.zero(), self.t.clone(), ring.one()] },
        }
    }

    /// Right action on a row vector; cheaper than multiplying by [`ElemMove::matrix`].
    pub fn apply(&self, p: &UniPair) -> UniPair {
        match self.side {
            Side::Upper => UniPair::new_unchecked(p.alpha().clone(), p.beta() + &(p.alpha() * &self.t)),
            Side::Lower => UniPair::new_unchecked(p.alpha() + &(p.beta() * &self.t), p.beta().clone()),
        }
    }
}

impl fmt::Display for ElemMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.side.letter(), self.t)
    }
}

/// A product of elementary matrices, kept in normal form: no zero moves and
/// no two adjacent moves on the same side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemWord {
    ring: RingDesc,
    moves: Vec<ElemMove>,
}

impl ElemWord {
    pub fn empty(ring: RingDesc) -> Self {
        ElemWord { ring, moves: Vec::new() }
    }

    /// Builds a normalized word from raw `(side, t)` moves; zero parameters are dropped.
    pub fn from_moves<I>(ring: RingDesc, moves: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Side, QuadInt)>,
    {
        let mut w = ElemWord::empty(ring);
        for (side, t) in moves {
            if t.ring() != ring {
                return Err(Error::RingMismatch { left: ring, right: t.ring() });
            }
            w.push_raw(side, t);
        }
        Ok(w)
    }

    /// The length-3 word `U(1);L(-1);U(1)` whose product is `[[0,1],[-1,0]]`.
    pub fn s_word(ring: RingDesc) -> Self {
        let one = ring.one();
        ElemWord {
            ring,
            moves: vec![
                ElemMove { side: Side::Upper, t: one.clone() },
                ElemMove { side: Side::Lower, t: -&one },
                ElemMove { side: Side::Upper, t: one },
            ],
        }
    }

    fn push_raw(&mut self, side: Side, t: QuadInt) {
        if t.is_zero() {
            return;
        }
        match self.moves.last_mut() {
            Some(last) if last.side == side => {
                let merged = &last.t + &t;
                if merged.is_zero() {
                    self.moves.pop();
                } else {
                    last.t = merged;
                }
            }
            _ => self.moves.push(ElemMove { side, t }),
        }
    }

    pub fn push(&mut self, mv: ElemMove) {
        assert_eq!(mv.t.ring(), self.ring, "move from a different ring");
        self.push_raw(mv.side, mv.t);
    }

    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    pub fn moves(&self) -> &[ElemMove] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Concatenation, renormalized at the seam.
    pub fn concat(&self, other: &ElemWord) -> Result<ElemWord> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        let mut w = self.clone();
        for mv in &other.moves {
            w.push_raw(mv.side, mv.t.clone());
        }
        Ok(w)
    }

    /// Reversed order, each parameter negated.
    pub fn inverse(&self) -> ElemWord {
        ElemWord { ring: self.ring, moves: self.moves.iter().rev().map(ElemMove::inverse).collect() }
    }

    pub fn to_matrix(&self) -> Mat2 {
        self.moves.iter().fold(Mat2::identity(self.ring), |acc, mv| acc.mul(&mv.matrix()).expect("same ring"))
    }

    /// Right action of the word's matrix on a row vector, one move at a time.
    pub fn apply(&self, p: &UniPair) -> Result<UniPair> {
        if p.ring() != self.ring {
            return Err(Error::RingMismatch { left: p.ring(), right: self.ring });
        }
        Ok(self.moves.iter().fold(p.clone(), |acc, mv| mv.apply(&acc)))
    }

    /// Parses the `U(t);L(t);...` text form; the empty string is the empty word.
    pub fn parse(ring: RingDesc, s: &str) -> Result<ElemWord> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut moves = Vec::new();
        if !compact.is_empty() {
            for token in compact.split(';') {
                let bad = || Error::Parse(format!("bad move `{token}`"));
                let side = match token.chars().next() {
                    Some('U') => Side::Upper,
                    Some('L') => Side::Lower,
                    _ => return Err(bad()),
                };
                let arg = token[1..].strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
                let t = QuadInt::parse(ring, arg)?;
                if t.is_zero() {
                    return Err(Error::InvalidMove);
                }
                moves.push((side, t));
            }
        }
        ElemWord::from_moves(ring, moves)
    }
}

impl fmt::Display for ElemWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, mv) in self.moves.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{mv}")?;
        }
        Ok(())
    }
}

/// Lower unitriangular matrices lie in `E_2` as the single move `L(m21)`.
pub fn l2_word(m: &Mat2) -> Option<ElemWord> {
    if !m.is_l2() {
        return None;
    }
    let mut w = ElemWord::empty(m.ring());
    if !m.m21().is_zero() {
        w.push_raw(Side::Lower, m.m21().clone());
    }
    Some(w)
}

/// Right action of a matrix on a row vector `(alpha, beta)`.
pub fn act_row(p: &UniPair, m: &Mat2) -> Result<UniPair> {
    if p.ring() != m.ring() {
        return Err(Error::RingMismatch { left: p.ring(), right: m.ring() });
    }
    let (a, b) = (p.alpha(), p.beta());
    Ok(UniPair::new_unchecked(&(a * m.m11()) + &(b * m.m21()), &(a * m.m12()) + &(b * m.m22())))
}
