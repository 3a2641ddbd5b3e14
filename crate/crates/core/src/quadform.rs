//! Degree-two polynomials over GF(2), their reduction to readonce form,
//! and exact weight computation.
//!
//! Every `f(x) = xᵀUx + l·x + c0` is equivalent, under an affine
//! substitution `y = Tx + c` with `T` of full row rank `m`, to one of
//!
//! ```text
//! Type I : g(y) = y1 + y2 y3 + ... + y(m-1) y(m)          (m odd)
//! Type II: g(y) = y1 y2 + ... + y(m-1) y(m) + z           (m even)
//! ```
//!
//! and then `|f| = |g| · 2^(n-m)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, MAX_DIM};
use crate::graph::Graph;

/// Default cap on `n` for [`brute_force_weight`].
pub const BRUTE_FORCE_CAP: usize = 24;

/// Certificates with at most this many variables are checked on every input.
pub const EXHAUSTIVE_VERIFY_CAP: usize = 12;

/// Random points tried by [`verify_certificate`] above the exhaustive cap.
pub const RANDOM_VERIFY_SAMPLES: usize = 10_000;

const VERIFY_SEED: u64 = 0x6d73_6e75_6d00_0001;

/// `xᵀUx + l·x + c0` with `U` strictly upper triangular.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticPolynomial {
    upper: BitMatrix,
    linear: BitVector,
    constant: bool,
}

impl QuadraticPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            upper: BitMatrix::zeros(n, n),
            linear: BitVector::zeros(n),
            constant: false,
        }
    }

    /// Builds a polynomial from 0-based monomials. Repeated monomials cancel
    /// and `x_i x_i` is read as `x_i`.
    pub fn new(
        n: usize,
        quadratic: impl IntoIterator<Item = (usize, usize)>,
        linear: impl IntoIterator<Item = usize>,
        constant: bool,
    ) -> Result<Self> {
        let mut f = Self::zero(n);
        f.constant = constant;
        let check = |i: usize| {
            if i >= n {
                Err(Error::Polynomial(format!(
                    "variable index {i} out of range for n = {n}"
                )))
            } else {
                Ok(())
            }
        };
        for (i, j) in quadratic {
            check(i)?;
            check(j)?;
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => f.linear.flip(i),
                std::cmp::Ordering::Less => f.upper.row_mut(i).flip(j),
                std::cmp::Ordering::Greater => f.upper.row_mut(j).flip(i),
            }
        }
        for i in linear {
            check(i)?;
            f.linear.flip(i);
        }
        Ok(f)
    }

    /// `f_G(x) = Σ_{i<j} A(G)_ij x_i x_j`.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut f = Self::zero(n);
        for (u, v) in g.edges() {
            f.upper.set(u, v, true);
        }
        f
    }

    pub fn num_vars(&self) -> usize {
        self.upper.rows()
    }

    pub fn upper(&self) -> &BitMatrix {
        &self.upper
    }

    pub fn linear(&self) -> &BitVector {
        &self.linear
    }

    pub fn constant(&self) -> bool {
        self.constant
    }

    pub fn is_zero(&self) -> bool {
        !self.constant && self.linear.is_zero() && self.upper.is_zero()
    }

    /// No linear part and no constant, i.e. the form of some graph.
    pub fn is_homogeneous(&self) -> bool {
        !self.constant && self.linear.is_zero()
    }

    /// `U + Uᵀ`, the alternating matrix of the quadratic part.
    pub fn alternating_matrix(&self) -> BitMatrix {
        let n = self.num_vars();
        let mut a = self.upper.clone();
        for i in 0..n {
            for j in self.upper.row(i).ones() {
                a.set(j, i, true);
            }
        }
        a
    }

    /// Quadratic monomials `(i, j)`, `i < j`, 0-based.
    pub fn quadratic_terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vars()).flat_map(move |i| self.upper.row(i).ones().map(move |j| (i, j)))
    }

    pub fn evaluate(&self, x: &BitVector) -> Result<bool> {
        if x.len() != self.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "polynomial in {} variables evaluated at a vector of length {}",
                self.num_vars(),
                x.len()
            )));
        }
        let mut value = self.constant ^ self.linear.dot(x);
        for i in x.ones() {
            value ^= self.upper.row(i).dot(x);
        }
        Ok(value)
    }

    /// Parses `n; quad: i j, i j; lin: i, i; const: 0|1` with 1-based
    /// indices. Sections after `n` are optional and may come in any order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.trim().split(';');
        let head = parts.next().unwrap_or("").trim();
        let n: usize = head
            .parse()
            .map_err(|_| Error::Polynomial(format!("invalid variable count {head:?}")))?;
        if n > MAX_DIM {
            return Err(Error::TooLarge {
                what: "variable count",
                n,
                cap: MAX_DIM,
            });
        }
        let index = |tok: &str| -> Result<usize> {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Polynomial(format!("invalid variable index {tok:?}")))?;
            if i == 0 || i > n {
                return Err(Error::Polynomial(format!(
                    "variable index {i} out of range 1..={n}"
                )));
            }
            Ok(i - 1)
        };
        let mut quad = Vec::new();
        let mut lin = Vec::new();
        let mut constant = false;
        for part in parts {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once(':')
                .ok_or_else(|| Error::Polynomial(format!("expected `key: value`, got {part:?}")))?;
            let entries = value.split(',').map(str::trim).filter(|e| !e.is_empty());
            match key.trim() {
                "quad" => {
                    for entry in entries {
                        let toks: Vec<&str> = entry.split_whitespace().collect();
                        let [i, j] = toks[..] else {
                            return Err(Error::Polynomial(format!(
                                "quadratic term needs two indices, got {entry:?}"
                            )));
                        };
                        quad.push((index(i)?, index(j)?));
                    }
                }
                "lin" => {
                    for entry in entries {
                        lin.push(index(entry)?);
                    }
                }
                "const" => {
                    constant = match value.trim() {
                        "0" => false,
                        "1" => true,
                        other => {
                            return Err(Error::Polynomial(format!(
                                "constant must be 0 or 1, got {other:?}"
                            )))
                        }
                    }
                }
                other => return Err(Error::Polynomial(format!("unknown section {other:?}"))),
            }
        }
        Self::new(n, quad, lin, constant)
    }

    /// Bit-packed copy for `n <= 64`.
    fn packed(&self) -> Option<PackedPoly> {
        let n = self.num_vars();
        if n > 64 {
            return None;
        }
        Some(PackedPoly {
            upper: (0..n).map(|i| self.upper.row(i).to_u64()).collect(),
            symmetric: self
                .alternating_matrix()
                .row_vectors()
                .iter()
                .map(BitVector::to_u64)
                .collect(),
            linear: self.linear.to_u64(),
            constant: self.constant,
        })
    }
}

impl fmt::Display for QuadraticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let quad: Vec<String> = self
            .quadratic_terms()
            .map(|(i, j)| format!("{} {}", i + 1, j + 1))
            .collect();
        let lin: Vec<String> = self.linear.ones().map(|i| (i + 1).to_string()).collect();
        write!(
            f,
            "{}; quad: {}; lin: {}; const: {}",
            self.num_vars(),
            quad.join(", "),
            lin.join(", "),
            self.constant as u8
        )
    }
}

impl fmt::Debug for QuadraticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticPolynomial({self})")
    }
}

struct PackedPoly {
    upper: Vec<u64>,
    symmetric: Vec<u64>,
    linear: u64,
    constant: bool,
}

impl PackedPoly {
    #[inline]
    fn eval(&self, x: u64) -> bool {
        let mut acc = x & self.linear;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc ^= self.upper[i] & x;
        }
        self.constant ^ (acc.count_ones() & 1 == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReadonceKind {
    /// One linear variable followed by disjoint products.
    TypeI,
    /// Disjoint products plus a constant.
    TypeII,
}

impl fmt::Display for ReadonceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReadonceKind::TypeI => "TypeI",
            ReadonceKind::TypeII => "TypeII",
        })
    }
}

impl std::str::FromStr for ReadonceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "TypeI" | "I" => Ok(ReadonceKind::TypeI),
            "TypeII" | "II" => Ok(ReadonceKind::TypeII),
            other => Err(Error::InvalidParameter(format!(
                "unknown readonce kind {other:?}"
            ))),
        }
    }
}

/// A readonce form `g` in `m` variables.
///
/// Type I forms always carry `z = 0`: their weight does not depend on the
/// constant, so it is pushed into the certificate's offset vector instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReadonceForm {
    m: usize,
    kind: ReadonceKind,
    z: bool,
}

impl ReadonceForm {
    pub fn new(m: usize, kind: ReadonceKind, z: bool) -> Result<Self> {
        match kind {
            ReadonceKind::TypeI if m.is_multiple_of(2) => Err(Error::InvalidParameter(format!(
                "Type I readonce form needs odd m, got {m}"
            ))),
            ReadonceKind::TypeI if z => Err(Error::InvalidParameter(
                "Type I readonce forms are kept with z = 0".into(),
            )),
            ReadonceKind::TypeII if m % 2 == 1 => Err(Error::InvalidParameter(format!(
                "Type II readonce form needs even m, got {m}"
            ))),
            _ => Ok(Self { m, kind, z }),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> ReadonceKind {
        self.kind
    }

    pub fn z(&self) -> bool {
        self.z
    }

    pub fn evaluate(&self, y: &BitVector) -> Result<bool> {
        if y.len() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "readonce form in {} variables evaluated at a vector of length {}",
                self.m,
                y.len()
            )));
        }
        let offset = match self.kind {
            ReadonceKind::TypeI => 1,
            ReadonceKind::TypeII => 0,
        };
        let mut value = self.z;
        if self.kind == ReadonceKind::TypeI {
            value ^= y.get(0);
        }
        for k in (offset..self.m).step_by(2) {
            value ^= y.get(k) & y.get(k + 1);
        }
        Ok(value)
    }

    fn evaluate_packed(&self, y: u64) -> bool {
        let mut value = self.z;
        let mut rest = y;
        if self.kind == ReadonceKind::TypeI {
            value ^= rest & 1 == 1;
            rest >>= 1;
        }
        let products = rest & (rest >> 1) & 0x5555_5555_5555_5555;
        value ^ (products.count_ones() & 1 == 1)
    }
}

impl fmt::Display for ReadonceForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} z={}", self.kind, self.m, self.z as u8)
    }
}

/// Affine substitution `y = Tx + c` witnessing `g(Tx + c) = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub t: BitMatrix,
    pub c: BitVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub form: ReadonceForm,
    pub certificate: ReductionCertificate,
}

/// Reduces `f` to its readonce form by repeated hyperbolic-pair extraction.
///
/// Each round takes the smallest monomial `x_a x_b` and writes
/// `f = x_a x_b + x_a P + x_b Q + R` with `P`, `Q` affine in the other
/// variables, so that `f = (x_a + Q)(x_b + P) + (R + PQ)`. The two factors
/// become certificate rows and the loop continues on `R + PQ`, where each
/// square `x_i x_i` collapses to the linear term `x_i`. Once no quadratic
/// part is left, a nonzero linear remainder becomes the Type I variable
/// `y1`; otherwise the constant is `z` of a Type II form.
///
/// Every row introduced for a pair contains its pivot variables, which are
/// absent from all later rows, so `T` has full row rank. Runs in
/// `O(n³ / 64)`.
pub fn reduce_to_readonce(f: &QuadraticPolynomial) -> Reduction {
    let n = f.num_vars();
    let mut sym = f.alternating_matrix().into_rows();
    let mut lin = f.linear.clone();
    let mut constant = f.constant;
    let mut rows: Vec<(BitVector, bool)> = Vec::new();

    let mut start = 0;
    while let Some(a) = (start..n).find(|&a| !sym[a].is_zero()) {
        // Rows below `a` are zero, so every neighbour of `a` lies above it
        // and the update below never touches rows `< a` again.
        start = a;
        let b = sym[a].first_one().expect("row is nonzero");
        let mut p = sym[a].clone();
        p.set(b, false);
        let mut q = sym[b].clone();
        q.set(a, false);
        let p0 = lin.get(a);
        let q0 = lin.get(b);

        for k in p.ones().chain(q.ones()) {
            sym[k].set(a, false);
            sym[k].set(b, false);
        }
        sym[a] = BitVector::zeros(n);
        sym[b] = BitVector::zeros(n);
        lin.set(a, false);
        lin.set(b, false);

        // R += P·Q
        for i in q.ones() {
            sym[i].xor_assign(&p);
        }
        for j in p.ones() {
            sym[j].xor_assign(&q);
        }
        lin.xor_assign(&p.and(&q));
        if p0 {
            lin.xor_assign(&q);
        }
        if q0 {
            lin.xor_assign(&p);
        }
        constant ^= p0 & q0;

        let mut row_a = q;
        row_a.set(a, true);
        let mut row_b = p;
        row_b.set(b, true);
        rows.push((row_a, q0));
        rows.push((row_b, p0));
    }

    let (kind, z) = if lin.is_zero() {
        (ReadonceKind::TypeII, constant)
    } else {
        rows.insert(0, (lin, constant));
        (ReadonceKind::TypeI, false)
    };
    let m = rows.len();
    let c = BitVector::from_bits(&rows.iter().map(|&(_, bit)| bit).collect::<Vec<_>>());
    let t = BitMatrix::from_rows(n, rows.into_iter().map(|(row, _)| row).collect())
        .expect("rows have length n");
    Reduction {
        form: ReadonceForm::new(m, kind, z).expect("reduction yields a consistent form"),
        certificate: ReductionCertificate { t, c },
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Weight of a readonce form: `2^(m-1)` for Type I and
/// `2^(m-1) - (-1)^z 2^((m-2)/2)` for Type II. The empty Type II form is
/// the constant `z`.
pub fn readonce_weight(g: &ReadonceForm) -> BigUint {
    match (g.kind, g.m) {
        (ReadonceKind::TypeI, m) => pow2(m - 1),
        (ReadonceKind::TypeII, 0) => {
            if g.z {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        }
        (ReadonceKind::TypeII, m) => {
            let main = pow2(m - 1);
            let correction = pow2((m - 2) / 2);
            if g.z {
                main + correction
            } else {
                main - correction
            }
        }
    }
}

/// `|f| = |g| · 2^(n-m)`.
pub fn weight(f: &QuadraticPolynomial) -> BigUint {
    let reduction = reduce_to_readonce(f);
    readonce_weight(&reduction.form) << (f.num_vars() - reduction.form.m)
}

/// Counts satisfying assignments one by one, refusing `n > 24`.
pub fn brute_force_weight(f: &QuadraticPolynomial) -> Result<BigUint> {
    brute_force_weight_capped(f, BRUTE_FORCE_CAP)
}

/// Exhaustive count in Gray-code order: flipping `x_i` changes `f` by
/// `Σ_{j ~ i} x_j + l_i`, an O(1) update on packed rows.
pub fn brute_force_weight_capped(f: &QuadraticPolynomial, cap: usize) -> Result<BigUint> {
    let n = f.num_vars();
    if n > cap || n >= 64 {
        return Err(Error::TooLarge {
            what: "brute-force weight",
            n,
            cap: cap.min(63),
        });
    }
    let packed = f.packed().expect("n < 64");
    let mut x = 0u64;
    let mut value = packed.constant;
    let mut count = value as u64;
    for step in 1u64..1 << n {
        let i = step.trailing_zeros() as usize;
        let delta =
            ((packed.symmetric[i] & x).count_ones() & 1 == 1) ^ (packed.linear >> i & 1 == 1);
        x ^= 1 << i;
        value ^= delta;
        count += value as u64;
    }
    Ok(BigUint::from(count))
}

/// Checks `g(Tx + c) == f(x)` and `rank(T) == m`.
///
/// All `2^n` inputs are tried for `n <= 12`; above that, every input of
/// Hamming weight 0, 1 or 2 plus 10 000 uniformly random inputs.
pub fn verify_certificate(
    f: &QuadraticPolynomial,
    g: &ReadonceForm,
    cert: &ReductionCertificate,
) -> Result<bool> {
    let n = f.num_vars();
    let m = g.m;
    if cert.t.cols() != n || cert.t.rows() != m || cert.c.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "certificate is {}x{} with offset of length {}, expected {m}x{n} and {m}",
            cert.t.rows(),
            cert.t.cols(),
            cert.c.len()
        )));
    }
    if cert.t.rank() != m {
        return Ok(false);
    }

    if n <= 64 && m <= 64 {
        let poly = f.packed().expect("n <= 64");
        let t_rows: Vec<u64> = cert.t.row_vectors().iter().map(BitVector::to_u64).collect();
        let offset = cert.c.to_u64();
        let holds = |x: u64| {
            let mut y = offset;
            for (k, row) in t_rows.iter().enumerate() {
                y ^= ((row & x).count_ones() as u64 & 1) << k;
            }
            g.evaluate_packed(y) == poly.eval(x)
        };
        let mut inputs = sample_inputs(n);
        Ok(inputs.all(|x| holds(x.to_u64())))
    } else {
        for x in sample_inputs(n) {
            let y = cert.t.mul_vec(&x)?.add(&cert.c)?;
            if g.evaluate(&y)? != f.evaluate(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sample_inputs(n: usize) -> Box<dyn Iterator<Item = BitVector>> {
    if n <= EXHAUSTIVE_VERIFY_CAP {
        return Box::new((0u64..1 << n).map(move |x| BitVector::from_u64(n, x)));
    }
    let low = std::iter::once(BitVector::zeros(n))
        .chain((0..n).map(move |i| BitVector::unit(n, i)))
        .chain(
            (0..n).flat_map(move |i| (i + 1..n).map(move |j| BitVector::from_indices(n, [i, j]))),
        );
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let random = (0..RANDOM_VERIFY_SAMPLES).map(move |_| {
        let mut x = BitVector::zeros(n);
        for i in 0..n {
            if rng.random_bool(0.5) {
                x.set(i, true);
            }
        }
        x
    });
    Box::new(low.chain(random))
}

/// Text form of a reduction, re-readable by [`parse_certificate`]:
///
/// ```text
/// poly 4; quad: 1 3, 1 4, 2 3, 2 4, 3 4; lin: ; const: 0
/// kind TypeI
/// m 3
/// z 0
/// T 3 4
/// 1100
/// 1110
/// 1101
/// c 000
/// ```
pub fn render_certificate(f: &QuadraticPolynomial, reduction: &Reduction) -> String {
    let form = &reduction.form;
    let cert = &reduction.certificate;
    let mut out = format!(
        "poly {f}\nkind {}\nm {}\nz {}\nT {} {}\n",
        form.kind,
        form.m,
        form.z as u8,
        cert.t.rows(),
        cert.t.cols()
    );
    out.push_str(&cert.t.to_text());
    let c = cert.c.to_string();
    out.push_str(&format!("c {}\n", if c.is_empty() { "-" } else { &c }));
    out
}

pub fn parse_certificate(text: &str) -> Result<(QuadraticPolynomial, Reduction)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut last_line = 0;
    let mut field = |key: &str| -> Result<(usize, String)> {
        let (line, content) = lines.next().ok_or(Error::Certificate {
            line: last_line + 1,
            message: format!("missing `{key}` line"),
        })?;
        last_line = line;
        if key.is_empty() {
            return Ok((line, content.to_string()));
        }
        let rest = content
            .strip_prefix(key)
            .filter(|r| r.is_empty() || r.starts_with(' '))
            .ok_or_else(|| Error::Certificate {
                line,
                message: format!("expected `{key}`"),
            })?;
        Ok((line, rest.trim().to_string()))
    };
    let bad = |line: usize, message: String| Error::Certificate { line, message };

    let (_, poly) = field("poly")?;
    let f = QuadraticPolynomial::parse(&poly)?;
    let (line, kind) = field("kind")?;
    let kind: ReadonceKind = kind.parse().map_err(|e: Error| bad(line, e.to_string()))?;
    let (line, m) = field("m")?;
    let m: usize = m
        .parse()
        .map_err(|_| bad(line, format!("invalid m {m:?}")))?;
    let (line, z) = field("z")?;
    let z = match z.as_str() {
        "0" => false,
        "1" => true,
        _ => return Err(bad(line, format!("invalid z {z:?}"))),
    };
    let form = ReadonceForm::new(m, kind, z).map_err(|e| bad(line, e.to_string()))?;
    let (line, dims) = field("T")?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad(line, format!("invalid dimensions {dims:?}")))?;
    let [rows, cols] = dims[..] else {
        return Err(bad(line, "expected `T <rows> <cols>`".into()));
    };
    if rows > MAX_DIM || cols > MAX_DIM {
        return Err(bad(line, "certificate too large".into()));
    }
    let mut t_rows = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (line, row) = field("")?;
        let row =
            BitVector::parse_bits(&row).ok_or_else(|| bad(line, "expected 0/1 row".into()))?;
        if row.len() != cols {
            return Err(bad(
                line,
                format!("row has {} entries, expected {cols}", row.len()),
            ));
        }
        t_rows.push(row);
    }
    let (line, c) = field("c")?;
    let c = if c == "-" {
        BitVector::zeros(0)
    } else {
        BitVector::parse_bits(&c).ok_or_else(|| bad(line, "expected 0/1 offset".into()))?
    };
    let t = BitMatrix::from_rows(cols, t_rows)?;
    Ok((
        f,
        Reduction {
            form,
            certificate: ReductionCertificate { t, c },
        },
    ))
}
