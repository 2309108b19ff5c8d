//! Canonical terms of the free commutative magma with unary symbols.

use std::collections::HashMap;
use std::fmt;

use super::UniversalError;

/// A unary symbol `(s, j)`: label index `s` of the fusion rule, decomposition `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryLabel {
    pub s: usize,
    pub j: usize,
}

/// A node refers to its children by id; ids are assigned in enumeration
/// order, so comparing ids compares terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    Gen(usize),
    Unary(UnaryLabel, u32),
    Prod(u32, u32),
}

/// Owned tree form of a term, used for construction and display.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MagmaTerm {
    Gen(usize),
    Unary(UnaryLabel, Box<MagmaTerm>),
    Prod(Box<MagmaTerm>, Box<MagmaTerm>),
}

impl MagmaTerm {
    pub fn gen(a: usize) -> Self {
        MagmaTerm::Gen(a)
    }

    pub fn unary(b: UnaryLabel, t: MagmaTerm) -> Self {
        MagmaTerm::Unary(b, Box::new(t))
    }

    pub fn prod(x: MagmaTerm, y: MagmaTerm) -> Self {
        MagmaTerm::Prod(Box::new(x), Box::new(y))
    }

    /// Leaves plus unary nodes.
    pub fn size(&self) -> usize {
        match self {
            MagmaTerm::Gen(_) => 1,
            MagmaTerm::Unary(_, t) => 1 + t.size(),
            MagmaTerm::Prod(x, y) => x.size() + y.size(),
        }
    }
}

impl fmt::Display for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTerm::Gen(a) => write!(f, "x{}", a + 1),
            MagmaTerm::Unary(b, t) => write!(f, "phi[{},{}]({t})", b.s, b.j + 1),
            MagmaTerm::Prod(x, y) => write!(f, "{{{x},{y}}}"),
        }
    }
}

/// All canonical terms of size at most `bound`, ordered by size and then by
/// enumeration order. Closed under subterms.
#[derive(Debug, Clone)]
pub struct TermSpace {
    n: usize,
    symbols: Vec<UnaryLabel>,
    bound: usize,
    nodes: Vec<Node>,
    sizes: Vec<u8>,
    index: HashMap<Node, u32>,
    /// `starts[k]` is the first id of size `k`; `starts[bound + 1]` is the length.
    starts: Vec<usize>,
}

pub const DEFAULT_TERM_GUARD: usize = 200_000;

/// Number of canonical terms of each size `0..=bound` (entry 0 is 0).
pub fn term_counts(n: usize, symbols: usize, bound: usize) -> Vec<u128> {
    let mut c = vec![0u128; bound + 1];
    for k in 1..=bound {
        let mut total = if k == 1 { n as u128 } else { symbols as u128 * c[k - 1] };
        for i in 1..=k / 2 {
            let j = k - i;
            total += if i < j { c[i] * c[j] } else { c[i] * (c[i] + 1) / 2 };
        }
        c[k] = total;
    }
    c
}

impl TermSpace {
    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[UnaryLabel] {
        &self.symbols
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: u32) -> Node {
        self.nodes[id as usize]
    }

    pub fn size(&self, id: u32) -> usize {
        self.sizes[id as usize] as usize
    }

    /// Ids of terms of exactly size `k`.
    pub fn ids_of_size(&self, k: usize) -> std::ops::Range<u32> {
        if k == 0 || k > self.bound {
            return 0..0;
        }
        self.starts[k] as u32..self.starts[k + 1] as u32
    }

    /// Number of terms of size at most `k`.
    pub fn count_up_to(&self, k: usize) -> usize {
        self.starts[k.min(self.bound) + 1]
    }

    pub fn lookup(&self, node: Node) -> Option<u32> {
        let node = match node {
            Node::Prod(a, b) if a > b => Node::Prod(b, a),
            other => other,
        };
        self.index.get(&node).copied()
    }

    pub fn gen_id(&self, a: usize) -> u32 {
        a as u32
    }

    pub fn unary_id(&self, b: UnaryLabel, t: u32) -> Option<u32> {
        self.lookup(Node::Unary(b, t))
    }

    pub fn prod_id(&self, x: u32, y: u32) -> Option<u32> {
        self.lookup(Node::Prod(x, y))
    }

    /// Canonical id of a tree, if it fits in the bound.
    pub fn id_of(&self, t: &MagmaTerm) -> Option<u32> {
        match t {
            MagmaTerm::Gen(a) => (*a < self.n).then_some(*a as u32),
            MagmaTerm::Unary(b, x) => self.unary_id(*b, self.id_of(x)?),
            MagmaTerm::Prod(x, y) => self.prod_id(self.id_of(x)?, self.id_of(y)?),
        }
    }

    pub fn term(&self, id: u32) -> MagmaTerm {
        match self.node(id) {
            Node::Gen(a) => MagmaTerm::Gen(a),
            Node::Unary(b, t) => MagmaTerm::unary(b, self.term(t)),
            Node::Prod(x, y) => MagmaTerm::prod(self.term(x), self.term(y)),
        }
    }

    fn push(&mut self, node: Node, size: usize) {
        let id = self.nodes.len() as u32;
        self.nodes.push(node);
        self.sizes.push(size as u8);
        self.index.insert(node, id);
    }
}

/// Enumerate all canonical terms with `n` generators and unary symbols
/// `symbols` up to size `bound`.
pub fn enumerate_terms(
    n: usize,
    symbols: &[UnaryLabel],
    bound: usize,
    guard: usize,
) -> Result<TermSpace, UniversalError> {
    if n == 0 || bound == 0 {
        return Err(UniversalError::BadArguments("need n >= 1 and N >= 1".into()));
    }
    let total: u128 = term_counts(n, symbols.len(), bound).iter().sum();
    if total > guard as u128 || bound > u8::MAX as usize {
        return Err(UniversalError::BoundTooLarge { count: total, guard });
    }
    let mut space = TermSpace {
        n,
        symbols: symbols.to_vec(),
        bound,
        nodes: Vec::with_capacity(total as usize),
        sizes: Vec::with_capacity(total as usize),
        index: HashMap::with_capacity(total as usize),
        starts: vec![0, 0],
    };
    for a in 0..n {
        space.push(Node::Gen(a), 1);
    }
    space.starts.push(space.nodes.len());
    for k in 2..=bound {
        for &b in symbols {
            for t in space.ids_of_size(k - 1) {
                space.push(Node::Unary(b, t), k);
            }
        }
        for i in 1..=k / 2 {
            let left = space.ids_of_size(i);
            let right = space.ids_of_size(k - i);
            for x in left {
                for y in right.clone() {
                    if i == k - i && y < x {
                        continue;
                    }
                    space.push(Node::Prod(x, y), k);
                }
            }
        }
        space.starts.push(space.nodes.len());
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let s = enumerate_terms(2, &[], 2, 100).unwrap();
        assert_eq!(s.len(), 5);
        let b = [UnaryLabel { s: 0, j: 0 }];
        let s = enumerate_terms(1, &b, 2, 100).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(term_counts(2, 6, 6).iter().sum::<u128>(), 118_637);
    }

    #[test]
    fn products_are_unordered() {
        let s = enumerate_terms(2, &[], 3, 100).unwrap();
        let a = MagmaTerm::prod(MagmaTerm::gen(1), MagmaTerm::gen(0));
        let b = MagmaTerm::prod(MagmaTerm::gen(0), MagmaTerm::gen(1));
        assert_eq!(s.id_of(&a), s.id_of(&b));
        let id = s.id_of(&a).unwrap();
        assert_eq!(s.id_of(&s.term(id)), Some(id));
    }

    #[test]
    fn guard_trips() {
        let b = [UnaryLabel { s: 0, j: 0 }, UnaryLabel { s: 1, j: 0 }];
        assert!(matches!(enumerate_terms(2, &b, 6, 1000), Err(UniversalError::BoundTooLarge { .. })));
    }
}
