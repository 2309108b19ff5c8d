//! Dense univariate polynomials in `eta` over the prime field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldDescriptor;

/// Ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Poly(Vec<BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    pub fn x() -> Self {
        Poly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Poly(vec![c]).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn term_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(f: &FieldDescriptor, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let zero = BigRational::zero();
        let out = (0..n)
            .map(|i| f.c_add(a.0.get(i).unwrap_or(&zero), b.0.get(i).unwrap_or(&zero)))
            .collect();
        Poly(out).trimmed()
    }

    pub fn neg(&self, f: &FieldDescriptor) -> Poly {
        Poly(self.0.iter().map(|c| f.c_neg(c)).collect())
    }

    pub fn scale(&self, f: &FieldDescriptor, c: &BigRational) -> Poly {
        Poly(self.0.iter().map(|a| f.c_mul(a, c)).collect()).trimmed()
    }

    pub fn mul(f: &FieldDescriptor, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Poly(out.into_iter().map(|c| f.reduce(c)).collect()).trimmed()
    }

    /// Euclidean division; `b` must be nonzero.
    pub fn divrem(f: &FieldDescriptor, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by zero polynomial");
        let lead_inv = f.c_inv(b.leading());
        let mut rem = a.0.clone();
        let mut quot = vec![BigRational::zero(); a.0.len().saturating_sub(db)];
        while rem.len() > db && !rem.is_empty() {
            let k = rem.len() - 1 - db;
            let c = f.c_mul(rem.last().unwrap(), &lead_inv);
            if !c.is_zero() {
                for (j, bj) in b.0.iter().enumerate() {
                    rem[k + j] = f.c_sub(&rem[k + j], &f.c_mul(&c, bj));
                }
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly(quot).trimmed(), Poly(rem).trimmed())
    }

    pub fn div_exact(f: &FieldDescriptor, a: &Poly, b: &Poly) -> Poly {
        let (q, r) = Poly::divrem(f, a, b);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; gcd(0, 0) is 0.
    pub fn gcd(f: &FieldDescriptor, a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = Poly::divrem(f, &x, &y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            return x;
        }
        let inv = f.c_inv(x.leading());
        x.scale(f, &inv)
    }

    pub fn eval(&self, f: &FieldDescriptor, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = f.c_add(&f.c_mul(&acc, v), c);
        }
        acc
    }

    /// Text in the scalar grammar, e.g. `1/2*eta^2-3*eta+1`.
    pub fn render(&self, characteristic: u64) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = characteristic == 0 && c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let monomial = match k {
                0 => String::new(),
                1 => "eta".to_string(),
                _ => format!("eta^{k}"),
            };
            let coeff = render_rational(&mag);
            if monomial.is_empty() {
                out.push_str(&coeff);
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{coeff}*{monomial}"));
            }
        }
        out
    }
}

fn render_rational(c: &BigRational) -> String {
    if c.denom() == &BigInt::one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
