//! Truncated quotient of the term space by the relation ideal, computed by
//! sparse elimination over a prime field.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::terms::{Node, TermSpace};
use super::{Combination, RelationInstance, UniversalError};
use crate::scalars::Scalar;

const DEFAULT_PRIME: u64 = 2_147_483_647;
const SAMPLE_ETA: u64 = 1_234_577;

/// How scalars are sent to `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub prime: u64,
    /// Image of the indeterminate, when the field has one.
    pub eta: Option<u64>,
    /// The map is an isomorphism of the coefficient field onto `F_p`.
    pub exact: bool,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = n % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().unwrap_or(0)
}

impl Reduction {
    /// Exact reduction for `F_q`; otherwise a large prime with a fixed
    /// sample value for eta.
    pub fn for_field(field: crate::scalars::FieldDescriptor) -> Self {
        let q = field.characteristic();
        let eta = field.generic_eta().then_some(SAMPLE_ETA);
        if q > 0 {
            Reduction { prime: q, eta: eta.map(|e| e % q), exact: eta.is_none() }
        } else {
            Reduction { prime: DEFAULT_PRIME, eta, exact: false }
        }
    }

    fn rational(&self, c: &BigRational) -> Option<u64> {
        let d = int_mod(c.denom(), self.prime);
        if d == 0 {
            return None;
        }
        Some(int_mod(c.numer(), self.prime) * inv_mod(d, self.prime) % self.prime)
    }

    fn poly(&self, coeffs: &[BigRational]) -> Option<u64> {
        let x = self.eta.unwrap_or(0);
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = (acc * x + self.rational(c)?) % self.prime;
        }
        Some(acc)
    }

    /// Image of a scalar; `None` at a pole.
    pub fn reduce(&self, s: &Scalar) -> Option<u64> {
        let (num, den) = s.parts();
        let d = self.poly(&den)?;
        if d == 0 {
            return None;
        }
        Some(self.poly(&num)? * inv_mod(d, self.prime) % self.prime)
    }
}

/// Sparse row, sorted by decreasing term id; the first entry is the pivot.
type Row = Vec<(u32, u64)>;

struct Eliminator<'a> {
    space: &'a TermSpace,
    p: u64,
    rows: Vec<Row>,
    pivot_of: Vec<u32>,
    queue: VecDeque<Row>,
}

const NONE: u32 = u32::MAX;

impl<'a> Eliminator<'a> {
    fn new(space: &'a TermSpace, p: u64) -> Self {
        Self { space, p, rows: Vec::new(), pivot_of: vec![NONE; space.len()], queue: VecDeque::new() }
    }

    fn normalize(mut row: Row) -> Row {
        row.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Row = Vec::with_capacity(row.len());
        for (c, v) in row {
            match out.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => out.push((c, v)),
            }
        }
        out
    }

    fn clean(&self, row: Row) -> Row {
        let p = self.p;
        Self::normalize(row).into_iter().map(|(c, v)| (c, v % p)).filter(|&(_, v)| v != 0).collect()
    }

    /// `a - f*b`, both sorted by decreasing id.
    fn sub_scaled(&self, a: &Row, f: u64, b: &Row) -> Row {
        let p = self.p;
        let nf = (p - f) % p;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 > b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 > a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                out.push((b[j].0, b[j].1 * nf % p));
                j += 1;
            } else {
                let v = (a[i].1 + b[j].1 * nf) % p;
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Reduce and, if independent, store with a unit pivot; returns its index.
    fn insert(&mut self, mut row: Row) -> Option<usize> {
        loop {
            let &(c, v) = row.first()?;
            let r = self.pivot_of[c as usize];
            if r == NONE {
                let inv = inv_mod(v, self.p);
                let row: Row = row.into_iter().map(|(c, x)| (c, x * inv % self.p)).collect();
                self.pivot_of[c as usize] = self.rows.len() as u32;
                self.rows.push(row);
                return Some(self.rows.len() - 1);
            }
            row = self.sub_scaled(&row, v, &self.rows[r as usize]);
        }
    }

    /// Images of a stored row under the unary maps and under multiplication
    /// by every term that keeps it inside the bound.
    fn derive(&mut self, idx: usize) {
        let space = self.space;
        let row = &self.rows[idx];
        let top = space.size(row[0].0);
        let bound = space.bound();
        if top < bound {
            for &b in space.symbols() {
                let mapped: Option<Row> =
                    row.iter().map(|&(c, v)| space.lookup(Node::Unary(b, c)).map(|d| (d, v))).collect();
                if let Some(m) = mapped {
                    self.queue.push_back(m);
                }
            }
        }
        for k in 1..=bound.saturating_sub(top) {
            for y in space.ids_of_size(k) {
                let mapped: Option<Row> = row.iter().map(|&(c, v)| space.prod_id(c, y).map(|d| (d, v))).collect();
                if let Some(m) = mapped {
                    self.queue.push_back(m);
                }
            }
        }
    }

    fn run(&mut self) {
        while let Some(row) = self.queue.pop_front() {
            let row = self.clean(row);
            if let Some(idx) = self.insert(row) {
                self.derive(idx);
            }
        }
    }
}

/// Result of [`truncated_quotient`].
#[derive(Debug, Clone)]
pub struct TruncatedQuotient {
    pub reduction: Reduction,
    pub bound: usize,
    pub terms: usize,
    pub generator_relations: usize,
    pub rank: usize,
    /// `dims[k-1]`: dimension of (terms of size <= k) modulo the relations
    /// lying in that span, for `k = 1..=bound`.
    pub dims: Vec<usize>,
    /// Terms without a pivot, i.e. a monomial basis of the quotient.
    pub basis: Vec<u32>,
}

impl TruncatedQuotient {
    /// Upper bound for the whole truncation.
    pub fn dimension_bound(&self) -> usize {
        *self.dims.last().unwrap_or(&0)
    }
}

pub(super) fn eliminate(
    space: &TermSpace,
    relations: &[RelationInstance],
    reduction: Reduction,
) -> Result<TruncatedQuotient, UniversalError> {
    let mut el = Eliminator::new(space, reduction.prime);
    for r in relations {
        el.queue.push_back(reduce_combination(&r.combination, &reduction)?);
    }
    el.run();
    let mut dims = Vec::with_capacity(space.bound());
    let mut pivots_upto = 0usize;
    for k in 1..=space.bound() {
        pivots_upto += space.ids_of_size(k).filter(|&c| el.pivot_of[c as usize] != NONE).count();
        dims.push(space.count_up_to(k) - pivots_upto);
    }
    let basis = (0..space.len() as u32).filter(|&c| el.pivot_of[c as usize] == NONE).collect();
    Ok(TruncatedQuotient {
        reduction,
        bound: space.bound(),
        terms: space.len(),
        generator_relations: relations.len(),
        rank: el.rows.len(),
        dims,
        basis,
    })
}

fn reduce_combination(c: &Combination, red: &Reduction) -> Result<Row, UniversalError> {
    c.iter()
        .map(|(id, s)| {
            red.reduce(s)
                .map(|v| (*id, v))
                .ok_or_else(|| UniversalError::BadArguments(format!("coefficient {s} has a pole at the sample point")))
        })
        .collect()
}
