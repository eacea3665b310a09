//! Finite commutative rings with unity, stored as explicit addition and
//! multiplication tables over element indices.

use thiserror::Error;

/// Largest ring order accepted unless a caller passes its own cap.
pub const DEFAULT_MAX_RING_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("a ring with nonzero unity needs at least two elements")]
    TooSmall,
    #[error("{table} table has {found} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("table entry {0} is not a ring element")]
    OutOfRange(usize),
    #[error("addition is not associative at ({0}, {1}, {2})")]
    AddNotAssociative(usize, usize, usize),
    #[error("addition is not commutative at ({0}, {1})")]
    AddNotCommutative(usize, usize),
    #[error("zero element does not fix {0} under addition")]
    ZeroNotIdentity(usize),
    #[error("element {0} has no additive inverse")]
    NoNegative(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    MulNotAssociative(usize, usize, usize),
    #[error("multiplication is not commutative at ({0}, {1})")]
    MulNotCommutative(usize, usize),
    #[error("unity does not fix {0} under multiplication")]
    OneNotIdentity(usize),
    #[error("unity equals zero")]
    OneEqualsZero,
    #[error("distributivity fails at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("invalid polynomial quotient: {0}")]
    BadPolynomial(String),
}

/// How a ring was constructed; used when writing ring-spec files.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Zmod(usize),
    Product(Vec<usize>),
    /// `Z_modulus[x]` modulo a monic polynomial, coefficients constant term first.
    PolyQuot { modulus: usize, poly: Vec<usize> },
    Table,
}

#[derive(Debug, Clone)]
pub struct FiniteRing {
    kind: RingKind,
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

/// Equality compares the tables; the construction kind is metadata.
impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn from_tables(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        Self::from_tables_with_cap(order, add, mul, zero, one, DEFAULT_MAX_RING_ORDER)
    }

    /// Checks every ring axiom over all pairs and triples of elements.
    pub fn from_tables_with_cap(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        cap: usize,
    ) -> Result<Self, RingError> {
        Self::build(RingKind::Table, order, add, mul, zero, one, cap)
    }

    fn build(
        kind: RingKind,
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        cap: usize,
    ) -> Result<Self, RingError> {
        if order > cap {
            return Err(RingError::TooLarge { order, cap });
        }
        if order < 2 {
            return Err(RingError::TooSmall);
        }
        for (name, table) in [("addition", &add), ("multiplication", &mul)] {
            if table.len() != order * order {
                return Err(RingError::TableShape {
                    table: name,
                    expected: order * order,
                    found: table.len(),
                });
            }
            if let Some(&bad) = table.iter().find(|&&x| x >= order) {
                return Err(RingError::OutOfRange(bad));
            }
        }
        for x in [zero, one] {
            if x >= order {
                return Err(RingError::OutOfRange(x));
            }
        }
        if zero == one {
            return Err(RingError::OneEqualsZero);
        }
        let n = order;
        let a_ = |a: usize, b: usize| add[a * n + b];
        let m_ = |a: usize, b: usize| mul[a * n + b];

        for a in 0..n {
            if a_(zero, a) != a {
                return Err(RingError::ZeroNotIdentity(a));
            }
            if m_(one, a) != a {
                return Err(RingError::OneNotIdentity(a));
            }
            for b in 0..n {
                if a_(a, b) != a_(b, a) {
                    return Err(RingError::AddNotCommutative(a, b));
                }
                if m_(a, b) != m_(b, a) {
                    return Err(RingError::MulNotCommutative(a, b));
                }
            }
        }
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| a_(a, b) == zero)
                .ok_or(RingError::NoNegative(a))?;
            neg.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab_add = a_(a, b);
                let ab_mul = m_(a, b);
                for c in 0..n {
                    if a_(ab_add, c) != a_(a, a_(b, c)) {
                        return Err(RingError::AddNotAssociative(a, b, c));
                    }
                    if m_(ab_mul, c) != m_(a, m_(b, c)) {
                        return Err(RingError::MulNotAssociative(a, b, c));
                    }
                    if m_(a, a_(b, c)) != a_(ab_mul, m_(a, c)) {
                        return Err(RingError::NotDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(Self {
            kind,
            order,
            add,
            mul,
            neg,
            zero,
            one,
        })
    }

    /// The integers modulo `n`; element `k` is the residue `k`.
    pub fn zmod(n: usize) -> Result<Self, RingError> {
        if n > DEFAULT_MAX_RING_ORDER {
            return Err(RingError::TooLarge {
                order: n,
                cap: DEFAULT_MAX_RING_ORDER,
            });
        }
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        Self::build(RingKind::Zmod(n), n, add, mul, 0, 1, DEFAULT_MAX_RING_ORDER)
    }

    /// `Z_{n1} x Z_{n2} x ...` with tuples indexed in mixed radix, first
    /// coordinate most significant.
    pub fn product(moduli: &[usize]) -> Result<Self, RingError> {
        if moduli.is_empty() || moduli.iter().any(|&m| m < 2) {
            return Err(RingError::TooSmall);
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m).filter(|&o| o <= DEFAULT_MAX_RING_ORDER))
            .ok_or(RingError::TooLarge {
                order: moduli.iter().fold(1usize, |a, &m| a.saturating_mul(m)),
                cap: DEFAULT_MAX_RING_ORDER,
            })?;
        let digits = |mut x: usize| {
            let mut d = vec![0; moduli.len()];
            for (slot, &m) in d.iter_mut().zip(moduli).rev() {
                *slot = x % m;
                x /= m;
            }
            d
        };
        let pack = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (&x, &m)| acc * m + x);
        let decoded: Vec<Vec<usize>> = (0..order).map(digits).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in &decoded {
            for b in &decoded {
                let s: Vec<usize> = a.iter().zip(b).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
                let p: Vec<usize> = a.iter().zip(b).zip(moduli).map(|((x, y), m)| x * y % m).collect();
                add.push(pack(&s));
                mul.push(pack(&p));
            }
        }
        let one = pack(&vec![1; moduli.len()]);
        Self::build(
            RingKind::Product(moduli.to_vec()),
            order,
            add,
            mul,
            0,
            one,
            DEFAULT_MAX_RING_ORDER,
        )
    }

    /// `Z_n[x] / (f)` for a monic `f` of degree 1 to 3, given constant term
    /// first. Element `sum a_i x^i` has index `sum a_i n^i`.
    pub fn polyquot(modulus: usize, poly: &[usize]) -> Result<Self, RingError> {
        if modulus < 2 {
            return Err(RingError::TooSmall);
        }
        let degree = poly.len().saturating_sub(1);
        if !(1..=3).contains(&degree) {
            return Err(RingError::BadPolynomial(format!(
                "degree must be between 1 and 3, got {degree}"
            )));
        }
        if poly.iter().any(|&c| c >= modulus) {
            return Err(RingError::BadPolynomial(format!(
                "coefficients must be reduced modulo {modulus}"
            )));
        }
        if poly[degree] != 1 {
            return Err(RingError::BadPolynomial("polynomial must be monic".into()));
        }
        let order = modulus
            .checked_pow(degree as u32)
            .filter(|&o| o <= DEFAULT_MAX_RING_ORDER)
            .ok_or(RingError::TooLarge {
                order: modulus.saturating_pow(degree as u32),
                cap: DEFAULT_MAX_RING_ORDER,
            })?;
        let coeffs = |mut x: usize| {
            let mut c = vec![0; degree];
            for slot in c.iter_mut() {
                *slot = x % modulus;
                x /= modulus;
            }
            c
        };
        let pack = |c: &[usize]| c.iter().rev().fold(0, |acc, &x| acc * modulus + x);
        let decoded: Vec<Vec<usize>> = (0..order).map(coeffs).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in &decoded {
            for b in &decoded {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % modulus).collect();
                add.push(pack(&s));
                let mut full = vec![0usize; 2 * degree - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        full[i + j] = (full[i + j] + x * y) % modulus;
                    }
                }
                // x^d = -(c_0 + ... + c_{d-1} x^{d-1})
                for k in (degree..full.len()).rev() {
                    let lead = full[k];
                    full[k] = 0;
                    for (i, &c) in poly[..degree].iter().enumerate() {
                        let idx = k - degree + i;
                        full[idx] = (full[idx] + modulus * modulus - lead * c % modulus) % modulus;
                    }
                }
                mul.push(pack(&full[..degree]));
            }
        }
        Self::build(
            RingKind::PolyQuot {
                modulus,
                poly: poly.to_vec(),
            },
            order,
            add,
            mul,
            0,
            1,
            DEFAULT_MAX_RING_ORDER,
        )
    }

    /// Drops the construction metadata, e.g. before re-emitting as a table.
    pub fn into_table_kind(mut self) -> Self {
        self.kind = RingKind::Table;
        self
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order).any(|b| self.mul(a, b) == self.one)
    }
}
