//! Finite abelian groups given as products of cyclic factors.
//!
//! Groups are structural: `Z4` and `Z2xZ2` are different specs even though
//! only their order matters for flow counting.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap for [`GroupSpec::enumerate_elements`].
pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u32>,
}

/// Residue vector aligned with the moduli of some [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u32>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl GroupSpec {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::PreconditionViolated("group needs at least one factor".into()));
        }
        if let Some(&k) = moduli.iter().find(|&&k| k < 2) {
            return Err(Error::PreconditionViolated(format!("modulus {k} is below 2")));
        }
        let mut order: u64 = 1;
        for &k in &moduli {
            order = order
                .checked_mul(u64::from(k))
                .ok_or_else(|| Error::PreconditionViolated("group order overflows u64".into()))?;
        }
        Ok(GroupSpec { moduli })
    }

    /// `Z_k`.
    pub fn cyclic(k: u32) -> Self {
        Self::new(vec![k]).expect("modulus must be at least 2")
    }

    /// Parses `Z<k1>(x Z<k2>)*`, whitespace allowed between tokens.
    /// Error positions are 0-based byte offsets.
    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let err = |position: usize, message: &str| Error::GroupParse { position, message: message.into() };
        let mut moduli = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'Z' {
                return Err(err(pos, "expected `Z`"));
            }
            pos += 1;
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(start, "expected a modulus"));
            }
            let k: u32 = s[start..pos].parse().map_err(|_| err(start, "modulus out of range"))?;
            if k < 2 {
                return Err(err(start, "modulus must be at least 2"));
            }
            moduli.push(k);
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'x' && bytes[pos] != b'X' {
                return Err(err(pos, "expected `x` or end of input"));
            }
            pos += 1;
        }
        Self::new(moduli).map_err(|_| err(0, "group order overflows u64"))
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&k| u64::from(k)).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { residues: vec![0; self.moduli.len()] }
    }

    /// Builds an element, reducing nothing: residues must already be in range.
    pub fn element(&self, residues: &[u32]) -> Result<GroupElement> {
        let e = GroupElement { residues: residues.to_vec() };
        self.check(&e)?;
        Ok(e)
    }

    /// Reduces arbitrary integers into an element.
    pub fn element_mod(&self, values: &[i64]) -> Result<GroupElement> {
        if values.len() != self.moduli.len() {
            return Err(self.mismatch(values.len()));
        }
        let residues = values.iter().zip(&self.moduli).map(|(&v, &k)| v.rem_euclid(i64::from(k)) as u32).collect();
        Ok(GroupElement { residues })
    }

    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let residues: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::SpecMismatch(format!("`{s}` is not a residue list")))?;
        self.element(&residues)
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.residues.len() == self.moduli.len() && e.residues.iter().zip(&self.moduli).all(|(r, k)| r < k)
    }

    fn mismatch(&self, len: usize) -> Error {
        Error::SpecMismatch(format!("element with {len} residues used with group {self}"))
    }

    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!("({e}) is not an element of {self}")))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.negate_unchecked(a))
    }

    pub fn is_zero(&self, a: &GroupElement) -> Result<bool> {
        self.check(a)?;
        Ok(a.residues.iter().all(|&r| r == 0))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    pub(crate) fn add_assign(&self, a: &mut GroupElement, b: &GroupElement) {
        for ((x, &y), &k) in a.residues.iter_mut().zip(&b.residues).zip(&self.moduli) {
            *x = ((u64::from(*x) + u64::from(y)) % u64::from(k)) as u32;
        }
    }

    pub(crate) fn sub_assign(&self, a: &mut GroupElement, b: &GroupElement) {
        for ((x, &y), &k) in a.residues.iter_mut().zip(&b.residues).zip(&self.moduli) {
            *x = ((u64::from(*x) + u64::from(k) - u64::from(y)) % u64::from(k)) as u32;
        }
    }

    pub(crate) fn negate_unchecked(&self, a: &GroupElement) -> GroupElement {
        let residues = a.residues.iter().zip(&self.moduli).map(|(&r, &k)| (k - r) % k).collect();
        GroupElement { residues }
    }

    /// `n * a` for any integer `n`.
    pub fn scale(&self, a: &GroupElement, n: i64) -> GroupElement {
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&r, &k)| {
                let k = i128::from(k);
                (i128::from(r) * i128::from(n)).rem_euclid(k) as u32
            })
            .collect();
        GroupElement { residues }
    }

    /// Mixed-radix code; code order equals lexicographic residue order.
    pub fn encode(&self, e: &GroupElement) -> u64 {
        e.residues.iter().zip(&self.moduli).fold(0, |acc, (&r, &k)| acc * u64::from(k) + u64::from(r))
    }

    pub fn decode(&self, mut code: u64) -> GroupElement {
        let mut residues = vec![0; self.moduli.len()];
        for (slot, &k) in residues.iter_mut().zip(&self.moduli).rev() {
            *slot = (code % u64::from(k)) as u32;
            code /= u64::from(k);
        }
        GroupElement { residues }
    }

    /// All elements in lexicographic order, starting at zero.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<GroupElement>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { what: "group order", needed: order.to_string(), cap });
        }
        Ok((0..order).map(|c| self.decode(c)).collect())
    }

    /// The lexicographically first nonzero `x` with `x + x = 0`; `None` iff
    /// the order is odd.
    pub fn element_of_order_two(&self) -> Option<GroupElement> {
        // x + x = 0 forces every residue to be 0 or k/2; the first such
        // nonzero vector puts k/2 in the last even factor.
        let j = self.moduli.iter().rposition(|&k| k % 2 == 0)?;
        let mut e = self.zero();
        e.residues[j] = self.moduli[j] / 2;
        Some(e)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{k}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Precomputed tables over element codes, for hot enumeration loops.
#[derive(Clone, Debug)]
pub(crate) struct CodeTables {
    pub order: usize,
    add: Vec<u32>,
    pub neg: Vec<u32>,
}

impl CodeTables {
    pub fn new(spec: &GroupSpec) -> Self {
        let order = spec.order() as usize;
        let elems: Vec<GroupElement> = (0..order as u64).map(|c| spec.decode(c)).collect();
        let mut add = vec![0; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * order + j] = spec.encode(&spec.add_unchecked(a, b)) as u32;
            }
        }
        let neg = elems.iter().map(|a| spec.encode(&spec.negate_unchecked(a)) as u32).collect();
        CodeTables { order, add, neg }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order + b as usize]
    }
}
