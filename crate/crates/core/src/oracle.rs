//! Brute-force orbit counting, independent of every closed form.
//!
//! A one-vertex pre-map of valence `d` is a matching on the points
//! `0..d` placed counter-clockwise on a regular `d`-gon. Unmatched points
//! are half-edges. Each chord carries a sign when the type is signed and an
//! orientation when the type is directed; half-edges carry nothing. The
//! dihedral group `D_d` permutes the points, carries orientations along with
//! the endpoints and leaves signs alone.
//!
//! Orbits are counted twice: once by averaging fixed points over the group,
//! once by collecting lexicographically least encodings.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{gcd, Count};
use crate::typesys::MapType;

/// Largest valence accepted for types without decorations.
pub const MAX_VALENCE_UNDECORATED: usize = 14;
/// Largest valence accepted for signed or directed types.
pub const MAX_VALENCE_DECORATED: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

/// A proper edge. For undirected types `tail < head` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub tail: usize,
    pub head: usize,
    pub negative: bool,
}

impl Chord {
    fn low(&self) -> usize {
        self.tail.min(self.head)
    }

    fn high(&self) -> usize {
        self.tail.max(self.head)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedMatching {
    ty: MapType,
    valence: usize,
    /// Sorted by lower endpoint.
    chords: Vec<Chord>,
}

impl DecoratedMatching {
    pub fn new(ty: MapType, valence: usize, mut chords: Vec<Chord>) -> Result<Self, OracleError> {
        let mut seen = vec![false; valence];
        for chord in chords.iter_mut() {
            if chord.tail >= valence || chord.head >= valence || chord.tail == chord.head {
                return Err(OracleError::InvalidMatching(format!(
                    "chord {}-{} on {valence} points",
                    chord.tail, chord.head
                )));
            }
            for end in [chord.tail, chord.head] {
                if std::mem::replace(&mut seen[end], true) {
                    return Err(OracleError::InvalidMatching(format!(
                        "point {end} is on two chords"
                    )));
                }
            }
            if chord.negative && !ty.signed {
                return Err(OracleError::InvalidMatching(format!(
                    "negative chord in unsigned type {ty}"
                )));
            }
            if !ty.directed && chord.tail > chord.head {
                std::mem::swap(&mut chord.tail, &mut chord.head);
            }
        }
        if ty.graph_only && seen.iter().any(|s| !s) {
            return Err(OracleError::InvalidMatching(format!(
                "type {ty} forbids half-edges"
            )));
        }
        chords.sort_by_key(Chord::low);
        Ok(DecoratedMatching {
            ty,
            valence,
            chords,
        })
    }

    pub fn map_type(&self) -> MapType {
        self.ty
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// The underlying involution; half-edges are fixed points.
    pub fn involution(&self) -> Vec<usize> {
        let mut partner: Vec<usize> = (0..self.valence).collect();
        for c in &self.chords {
            partner[c.tail] = c.head;
            partner[c.head] = c.tail;
        }
        partner
    }

    /// Sorted records `(low, high, direction bit, sign bit)` packed into `u32`s.
    /// The direction bit is set when the chord points from `high` to `low`.
    pub fn encode(&self) -> Vec<u32> {
        let mut code: Vec<u32> = self
            .chords
            .iter()
            .map(|c| {
                let dir = u32::from(c.tail > c.head);
                ((c.low() as u32) << 16)
                    | ((c.high() as u32) << 8)
                    | (dir << 1)
                    | u32::from(c.negative)
            })
            .collect();
        code.sort_unstable();
        code
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    Rotation,
    Reflection,
}

/// An element of `D_d`: `rotation k` sends `i` to `i + k`, `reflection a`
/// sends `i` to `a - i`, both mod `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    pub kind: SymmetryKind,
    pub index: usize,
    pub order: usize,
}

impl SymmetryElement {
    pub fn rotation(index: usize, order: usize) -> Self {
        SymmetryElement {
            kind: SymmetryKind::Rotation,
            index: index % order,
            order,
        }
    }

    pub fn reflection(index: usize, order: usize) -> Self {
        SymmetryElement {
            kind: SymmetryKind::Reflection,
            index: index % order,
            order,
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::rotation(0, order)
    }

    pub fn apply_point(&self, i: usize) -> usize {
        match self.kind {
            SymmetryKind::Rotation => (i + self.index) % self.order,
            SymmetryKind::Reflection => (self.index + self.order - i % self.order) % self.order,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        assert_eq!(
            self.order, other.order,
            "composing elements of different groups"
        );
        let d = self.order;
        let (a, b) = (self.index, other.index);
        match (self.kind, other.kind) {
            (SymmetryKind::Rotation, SymmetryKind::Rotation) => Self::rotation(a + b, d),
            (SymmetryKind::Rotation, SymmetryKind::Reflection) => Self::reflection(a + b, d),
            (SymmetryKind::Reflection, SymmetryKind::Rotation) => Self::reflection(a + d - b, d),
            (SymmetryKind::Reflection, SymmetryKind::Reflection) => Self::rotation(a + d - b, d),
        }
    }

    /// Reflection of an even polygon whose axis passes through no vertex.
    pub fn is_median(&self) -> bool {
        self.kind == SymmetryKind::Reflection && self.order.is_multiple_of(2) && self.index % 2 == 1
    }

    /// Number of orbits of a rotation on the points, `gcd(d, k)`.
    pub fn rotation_orbits(&self) -> Option<usize> {
        (self.kind == SymmetryKind::Rotation).then(|| gcd(self.order, self.index))
    }
}

/// All `2d` elements: rotations `0..d` then reflections `0..d`.
pub fn dihedral_group(d: usize) -> Vec<SymmetryElement> {
    (0..d)
        .map(|k| SymmetryElement::rotation(k, d))
        .chain((0..d).map(|a| SymmetryElement::reflection(a, d)))
        .collect()
}

pub fn apply_symmetry(
    sigma: &SymmetryElement,
    m: &DecoratedMatching,
) -> Result<DecoratedMatching, OracleError> {
    if sigma.order != m.valence {
        return Err(OracleError::Domain(format!(
            "symmetry of D_{} applied to a matching on {} points",
            sigma.order, m.valence
        )));
    }
    Ok(apply_unchecked(sigma, m))
}

fn apply_unchecked(sigma: &SymmetryElement, m: &DecoratedMatching) -> DecoratedMatching {
    let mut chords: Vec<Chord> = m
        .chords
        .iter()
        .map(|c| {
            let (mut tail, mut head) = (sigma.apply_point(c.tail), sigma.apply_point(c.head));
            if !m.ty.directed && tail > head {
                std::mem::swap(&mut tail, &mut head);
            }
            Chord {
                tail,
                head,
                negative: c.negative,
            }
        })
        .collect();
    chords.sort_by_key(Chord::low);
    DecoratedMatching {
        ty: m.ty,
        valence: m.valence,
        chords,
    }
}

fn check_valence(ty: MapType, d: usize) -> Result<(), OracleError> {
    let limit = if ty.params().t == 1 {
        MAX_VALENCE_UNDECORATED
    } else {
        MAX_VALENCE_DECORATED
    };
    if d == 0 || d > limit {
        return Err(OracleError::Domain(format!(
            "oracle for {ty} supports valence 1..={limit}, got {d}"
        )));
    }
    Ok(())
}

/// Undecorated matchings as lists of `(low, high)` pairs, smallest unmatched
/// point first, leaving it unmatched before pairing it upward.
fn undecorated(d: usize, perfect: bool) -> Vec<Vec<(usize, usize)>> {
    fn go(
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        perfect: bool,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(v) = used.iter().position(|u| !u) else {
            out.push(current.clone());
            return;
        };
        used[v] = true;
        if !perfect {
            go(used, current, perfect, out);
        }
        for w in v + 1..used.len() {
            if !used[w] {
                used[w] = true;
                current.push((v, w));
                go(used, current, perfect, out);
                current.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    if perfect && d % 2 == 1 {
        return out;
    }
    go(&mut vec![false; d], &mut Vec::new(), perfect, &mut out);
    out
}

/// Every decoration of one undecorated matching. Chord `i` reads its
/// decoration from bits `i·b .. (i+1)·b` of a counter, `b = log2 t`; within
/// a decoration the direction bit comes first, then the sign bit.
fn decorations(
    ty: MapType,
    d: usize,
    pairs: Vec<(usize, usize)>,
) -> impl Iterator<Item = DecoratedMatching> {
    let bits = ty.params().t.trailing_zeros() as usize;
    let total = 1usize << (bits * pairs.len());
    (0..total).map(move |code| {
        let chords = pairs
            .iter()
            .enumerate()
            .map(|(i, &(low, high))| {
                let digit = (code >> (i * bits)) & ((1 << bits) - 1);
                let mut rest = digit;
                let reversed = if ty.directed {
                    let r = rest & 1 == 1;
                    rest >>= 1;
                    r
                } else {
                    false
                };
                let negative = ty.signed && rest & 1 == 1;
                let (tail, head) = if reversed { (high, low) } else { (low, high) };
                Chord {
                    tail,
                    head,
                    negative,
                }
            })
            .collect();
        DecoratedMatching {
            ty,
            valence: d,
            chords,
        }
    })
}

/// Every decorated matching of type `ty` on `d` points, each exactly once,
/// in a fixed order.
pub fn enumerate_matchings(
    ty: MapType,
    d: usize,
) -> Result<impl Iterator<Item = DecoratedMatching>, OracleError> {
    check_valence(ty, d)?;
    Ok(undecorated(d, ty.graph_only)
        .into_iter()
        .flat_map(move |pairs| decorations(ty, d, pairs)))
}

pub fn fixed_count(ty: MapType, d: usize, sigma: &SymmetryElement) -> Result<Count, OracleError> {
    if sigma.order != d {
        return Err(OracleError::Domain(format!(
            "symmetry of D_{} used with valence {d}",
            sigma.order
        )));
    }
    let n = enumerate_matchings(ty, d)?
        .filter(|m| apply_unchecked(sigma, m) == *m)
        .count();
    Ok(Count::from(n))
}

/// Fixed-point counts for every element of [`dihedral_group`], in one pass
/// over the matchings.
pub fn fixed_counts(ty: MapType, d: usize) -> Result<Vec<(SymmetryElement, Count)>, OracleError> {
    check_valence(ty, d)?;
    let group = dihedral_group(d);
    let counts = undecorated(d, ty.graph_only)
        .into_par_iter()
        .map(|pairs| {
            let mut local = vec![0u64; group.len()];
            for m in decorations(ty, d, pairs) {
                for (slot, sigma) in local.iter_mut().zip(&group) {
                    if apply_unchecked(sigma, &m) == m {
                        *slot += 1;
                    }
                }
            }
            local
        })
        .reduce(
            || vec![0u64; group.len()],
            |mut acc, local| {
                acc.iter_mut().zip(local).for_each(|(a, b)| *a += b);
                acc
            },
        );
    Ok(group
        .into_iter()
        .zip(counts.into_iter().map(Count::from))
        .collect())
}

pub fn orbit_count_burnside(ty: MapType, d: usize) -> Result<Count, OracleError> {
    let total: Count = fixed_counts(ty, d)?.into_iter().map(|(_, c)| c).sum();
    let group_order = Count::from(2 * d);
    if &total % &group_order != Count::from(0u32) {
        return Err(OracleError::Consistency(format!(
            "fixed-point total {total} for {ty}, d={d} is not divisible by {group_order}"
        )));
    }
    Ok(total / group_order)
}

/// Lexicographically least encoding over the orbit of `m`.
pub fn canonical_form(m: &DecoratedMatching) -> Vec<u32> {
    dihedral_group(m.valence)
        .iter()
        .map(|sigma| apply_unchecked(sigma, m).encode())
        .min()
        .expect("group is non-empty")
}

pub fn orbit_count_canonical(ty: MapType, d: usize) -> Result<Count, OracleError> {
    check_valence(ty, d)?;
    let forms = undecorated(d, ty.graph_only)
        .into_par_iter()
        .map(|pairs| {
            decorations(ty, d, pairs)
                .map(|m| canonical_form(&m))
                .collect::<HashSet<_>>()
        })
        .reduce(HashSet::new, |mut acc, local| {
            acc.extend(local);
            acc
        });
    Ok(Count::from(forms.len()))
}
