//! Quaternionic polynomials as functions `H → H`.
//!
//! Every quaternionic monomial `q ↦ α_0 q α_1 q … q α_r` expands, after
//! substituting `q = t + ix + jy + kz`, into a homogeneous polynomial of
//! degree `r` in the commuting real variables `t, x, y, z` with quaternion
//! coefficients. [`TxyzPoly`] is that canonical form. The real monomials
//! are a basis over `H`, so `Hom_r(H)` has dimension `C(r+3, 3)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::formal::FormalPoly;
use crate::linalg::{rank, QuatMatrix};
use crate::quat::{Quaternion, Tolerance};

/// Exponents `[a, b, c, d]` of `t^a x^b y^c z^d`.
pub type Exponent = [u32; 4];

/// Sparse polynomial in `t, x, y, z` with quaternion coefficients.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero.
/// Real monomials commute with everything, so products only need to keep
/// the order of the quaternion coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TxyzPoly {
    terms: BTreeMap<Exponent, Quaternion>,
}

impl TxyzPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Quaternion) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(exp: Exponent, c: Quaternion) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// The coordinate function of index `var` (0 = t, 1 = x, 2 = y, 3 = z).
    pub fn coordinate(var: usize) -> Self {
        let mut e = [0; 4];
        e[var] = 1;
        Self::monomial(e, Quaternion::ONE)
    }

    /// The identity function `q = t + ix + jy + kz`.
    pub fn variable() -> Self {
        Self::from_terms(
            (0..4).map(|v| {
                let mut e = [0; 4];
                e[v] = 1;
                (e, Quaternion::UNITS[v])
            }),
        )
    }

    /// `q − a`.
    pub fn linear(a: Quaternion) -> Self {
        &Self::variable() - &Self::constant(a)
    }

    /// Sums the given terms, combining equal exponents.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Quaternion)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// The function `q ↦ Σ q^j f_j` of a formal polynomial.
    pub fn from_formal(f: &FormalPoly) -> Self {
        let q = Self::variable();
        let mut pow = Self::constant(Quaternion::ONE);
        let mut out = Self::zero();
        for &c in f.coeffs() {
            out = &out + &pow.mul_right(c);
            pow = &pow * &q;
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: Quaternion) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert(Quaternion::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Quaternion)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Quaternion {
        self.terms.get(e).copied().unwrap_or(Quaternion::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Whether every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im().is_zero())
    }

    /// Value at `a`; real monomial values commute past the coefficients.
    pub fn eval(&self, a: Quaternion) -> Quaternion {
        let coords = a.to_array();
        self.terms
            .iter()
            .map(|(e, &c)| {
                let m: f64 = e.iter().zip(coords).map(|(&k, v)| ipow(v, k)).product();
                c * m
            })
            .sum()
    }

    pub fn mul_right(&self, alpha: Quaternion) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, c * alpha)))
    }

    pub fn mul_left(&self, alpha: Quaternion) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, alpha * c)))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, c * s)))
    }

    /// Polynomial of the real parts of the coefficients.
    pub fn real_part(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, Quaternion::real(c.re()))))
    }

    /// Substitutes `q ↦ q − a`, i.e. returns `x ↦ self(x − a)`.
    pub fn translate(&self, a: Quaternion) -> Self {
        let shift = [-a.t, -a.x, -a.y, -a.z];
        let mut out = Self::zero();
        for (e, &c) in &self.terms {
            let mut term = Self::constant(c);
            for v in 0..4 {
                let lin = Self::from_terms([
                    (unit_exp(v), Quaternion::ONE),
                    ([0; 4], Quaternion::real(shift[v])),
                ]);
                for _ in 0..e[v] {
                    term = &term * &lin;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// `∂/∂var`.
    pub fn partial(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(&e, &c)| {
            let mut d = e;
            d[var] -= 1;
            (d, c * e[var] as f64)
        }))
    }

    /// The doubled Cauchy-Feuter operator
    /// `∂f/∂t + i ∂f/∂x + j ∂f/∂y + k ∂f/∂z`, units acting on the left.
    pub fn cauchy_feuter(&self) -> Self {
        (0..4).fold(Self::zero(), |acc, v| &acc + &self.partial(v).mul_left(Quaternion::UNITS[v]))
    }

    /// Sum of the four unmixed second partials.
    pub fn laplacian(&self) -> Self {
        (0..4).fold(Self::zero(), |acc, v| &acc + &self.partial(v).partial(v))
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient-wise distance to `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (self - other).max_coeff_norm()
    }

    /// Drops coefficients whose norm is at most `threshold`.
    pub fn prune(&self, threshold: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.norm() > threshold)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }
}

fn ipow(v: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * v)
}

fn unit_exp(v: usize) -> Exponent {
    let mut e = [0; 4];
    e[v] = 1;
    e
}

impl Add for &TxyzPoly {
    type Output = TxyzPoly;
    fn add(self, o: &TxyzPoly) -> TxyzPoly {
        let mut out = self.clone();
        for (&e, &c) in &o.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &TxyzPoly {
    type Output = TxyzPoly;
    fn sub(self, o: &TxyzPoly) -> TxyzPoly {
        let mut out = self.clone();
        for (&e, &c) in &o.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &TxyzPoly {
    type Output = TxyzPoly;
    fn neg(self) -> TxyzPoly {
        self.scale(-1.0)
    }
}

/// Pointwise product: exponents add, coefficients multiply in operand order.
impl Mul for &TxyzPoly {
    type Output = TxyzPoly;
    fn mul(self, o: &TxyzPoly) -> TxyzPoly {
        let mut out = TxyzPoly::zero();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &o.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Quaternionic monomial `q ↦ α_0 q α_1 q … q α_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatWord {
    letters: Vec<Quaternion>,
}

impl QuatWord {
    /// Needs at least one letter.
    pub fn new(letters: Vec<Quaternion>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::PreconditionViolation("a word needs at least one letter"));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Quaternion] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len() - 1
    }

    /// Direct evaluation of the word at `q`.
    pub fn eval(&self, q: Quaternion) -> Quaternion {
        let mut it = self.letters.iter();
        let first = *it.next().expect("nonempty");
        it.fold(first, |acc, &a| acc * q * a)
    }

    /// Expansion into `t, x, y, z`.
    pub fn expand(&self) -> TxyzPoly {
        let q = TxyzPoly::variable();
        let mut it = self.letters.iter();
        let first = TxyzPoly::constant(*it.next().expect("nonempty"));
        it.fold(first, |acc, &a| (&acc * &q).mul_right(a))
    }
}

/// Regularity and harmonicity of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub regular: bool,
    pub harmonic: bool,
}

/// Tests whether the Cauchy-Feuter image and the Laplacian vanish, with
/// coefficients compared against `tol · max(1, max_coeff_norm(p))`.
///
/// A regular polynomial is always harmonic; a numerical result violating
/// that is reported as [`Error::InconsistentClassification`].
pub fn classify(p: &TxyzPoly, tol: Tolerance) -> Result<Classification> {
    let thr = tol.threshold(p.max_coeff_norm());
    let regular = p.cauchy_feuter().max_coeff_norm() <= thr;
    let harmonic = p.laplacian().max_coeff_norm() <= thr;
    if regular && !harmonic {
        return Err(Error::InconsistentClassification);
    }
    Ok(Classification { regular, harmonic })
}

/// Which polynomial space [`dims`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    /// Homogeneous of degree `n`.
    Hom,
    /// Degree at most `n`.
    Pol,
    /// Regular homogeneous of degree `n`.
    Reg,
    /// Harmonic homogeneous of degree `n`.
    Harm,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension over `H` of the given space of polynomials of one
/// quaternionic variable.
pub fn dims(kind: DimKind, n: u64) -> u64 {
    match kind {
        DimKind::Hom => binomial(n + 3, 3),
        DimKind::Pol => binomial(n + 4, 4),
        DimKind::Reg => (n + 1) * (n + 2) / 2,
        DimKind::Harm => (n + 1) * (n + 1),
    }
}

/// Dimension of the right `H`-span of `ps`.
///
/// The coefficient matrix has one row per monomial and one column per
/// polynomial, so that right-linear relations between polynomials are
/// relations between columns.
pub fn span_rank(ps: &[TxyzPoly], tol: Tolerance) -> usize {
    let monomials: BTreeSet<Exponent> = ps.iter().flat_map(|p| p.terms.keys().copied()).collect();
    let mut m = QuatMatrix::zeros(monomials.len(), ps.len());
    for (r, e) in monomials.iter().enumerate() {
        for (c, p) in ps.iter().enumerate() {
            m[(r, c)] = p.coeff(e);
        }
    }
    rank(&m, tol)
}

/// All real monomials of total degree `n`, each with coefficient 1.
pub fn homogeneous_monomials(n: u32) -> Vec<TxyzPoly> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            for c in (0..=n - a - b).rev() {
                out.push(TxyzPoly::monomial([a, b, c, n - a - b - c], Quaternion::ONE));
            }
        }
    }
    out
}
