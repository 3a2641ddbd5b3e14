//! Quantities attached to the graph state |G⟩ = 2^(-n/2) Σ (-1)^f_G(x) |x⟩.
//!
//! Basis index convention: the integer value of the bit string `x1 x2 .. xn`
//! with `x1` as the most significant bit, so for `n = 3` index 3 is `011`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::Graph;
use crate::quadform::{
    readonce_weight, reduce_to_readonce, weight, QuadraticPolynomial, ReadonceForm,
};

/// Largest qubit count for which 2^n-sized vectors are built.
pub const DENSE_CAP: usize = 20;

fn check_dense(what: &'static str, n: usize) -> Result<()> {
    if n > DENSE_CAP {
        return Err(Error::TooLarge {
            what,
            n,
            cap: DENSE_CAP,
        });
    }
    Ok(())
}

/// Maps a basis index to the packed assignment with variable `i` in bit `i`.
fn index_to_assignment(n: usize, index: u64) -> u64 {
    (0..n).fold(0, |acc, i| acc | ((index >> (n - 1 - i)) & 1) << i)
}

/// Signs of the amplitudes of a graph state; every magnitude is 2^(-n/2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplitudeVector {
    n: usize,
    negative: BitVector,
}

impl AmplitudeVector {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.negative.is_empty()
    }

    /// +1 or -1.
    pub fn sign(&self, index: usize) -> i8 {
        if self.negative.get(index) {
            -1
        } else {
            1
        }
    }

    pub fn minus_count(&self) -> usize {
        self.negative.count_ones()
    }

    /// `+`/`-` per basis state in index order.
    pub fn render(&self) -> String {
        (0..self.len())
            .map(|i| if self.negative.get(i) { '-' } else { '+' })
            .collect()
    }
}

/// Walsh–Hadamard spectrum of the 0/1 value vector of a Boolean function.
///
/// Coefficient `i` equals `numerators[i] / 2^(n/2)`; the numerator is the
/// integer `Σ_x (-1)^(i·x) f(x)`, so every comparison is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumVector {
    n: usize,
    numerators: Vec<i64>,
}

impl SpectrumVector {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    /// `f*_0 · 2^(n/2)`, which equals the weight of `f`.
    pub fn scaled_zero_order(&self) -> i64 {
        self.numerators[0]
    }

    /// `Σ (f*_i)² == Σ f(x)²`, i.e. `Σ numerator² == 2^n · |f|` for a 0/1
    /// input vector.
    pub fn parseval_holds(&self, weight: u64) -> bool {
        let lhs: u128 = self
            .numerators
            .iter()
            .map(|&a| (a as i128 * a as i128) as u128)
            .sum();
        lhs == (weight as u128) << self.n
    }

    /// One `numerator/2^k` entry per line, `k = n/2` written as a fraction
    /// when `n` is odd.
    pub fn render(&self) -> String {
        let denom = if self.n.is_multiple_of(2) {
            format!("2^{}", self.n / 2)
        } else {
            format!("2^({}/2)", self.n)
        };
        let mut out = String::new();
        for a in &self.numerators {
            out.push_str(&format!("{a}/{denom}\n"));
        }
        out
    }
}

/// `(m, kind, z)` of the readonce form equivalent to `f_G`, attached to the
/// total qubit count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReadonceDescriptor {
    pub form: ReadonceForm,
    pub n_total: usize,
}

impl ReadonceDescriptor {
    /// MS-number of `|G_(m,z)⟩ ⊗ |+⟩^(n-m)`.
    pub fn product_weight(&self) -> BigUint {
        readonce_weight(&self.form) << (self.n_total - self.form.m())
    }
}

impl fmt::Display for ReadonceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n_total={}", self.form, self.n_total)
    }
}

/// `w(G) = |f_G|`, the number of minus signs in |G⟩.
pub fn ms_number(g: &Graph) -> BigUint {
    weight(&QuadraticPolynomial::from_graph(g))
}

/// `2^n - w(G)`.
pub fn plus_number(g: &Graph) -> BigUint {
    (BigUint::one() << g.order()) - ms_number(g)
}

pub fn amplitudes(g: &Graph) -> Result<AmplitudeVector> {
    polynomial_signs(&QuadraticPolynomial::from_graph(g))
}

/// `(-1)^f(x)` for every basis index.
pub fn polynomial_signs(f: &QuadraticPolynomial) -> Result<AmplitudeVector> {
    let n = f.num_vars();
    check_dense("amplitude vector", n)?;
    let mut negative = BitVector::zeros(1 << n);
    for index in 0..1u64 << n {
        let x = BitVector::from_u64(n, index_to_assignment(n, index));
        if f.evaluate(&x)? {
            negative.set(index as usize, true);
        }
    }
    Ok(AmplitudeVector { n, negative })
}

/// Fast in-place Walsh–Hadamard butterfly on the 0/1 value vector.
pub fn wht_spectrum(f: &QuadraticPolynomial) -> Result<SpectrumVector> {
    let n = f.num_vars();
    check_dense("Walsh-Hadamard spectrum", n)?;
    let mut values: Vec<i64> = (0..1u64 << n)
        .map(|index| {
            let x = BitVector::from_u64(n, index_to_assignment(n, index));
            f.evaluate(&x).map(|v| v as i64)
        })
        .collect::<Result<_>>()?;
    let mut half = 1;
    while half < values.len() {
        for block in values.chunks_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        half *= 2;
    }
    Ok(SpectrumVector {
        n,
        numerators: values,
    })
}

/// Checks the bent conditions on the exact spectrum:
/// `f*_0 = 2^((n-2)/2) ± 1/2` and `|f*_i| = 1/2` for `i ≠ 0`. Odd `n` is
/// never bent. Limited to `n <= 20`.
pub fn is_bent(f: &QuadraticPolynomial) -> Result<bool> {
    let n = f.num_vars();
    if n % 2 == 1 || n == 0 {
        return Ok(false);
    }
    let spectrum = wht_spectrum(f)?;
    // With the 2^(n/2) scale: numerator_0 = 2^(n-1) ± 2^(n/2-1) and
    // |numerator_i| = 2^(n/2-1).
    let half = 1i64 << (n / 2 - 1);
    let main = 1i64 << (n - 1);
    let a0 = spectrum.numerators[0];
    let zero_ok = a0 == main + half || a0 == main - half;
    Ok(zero_ok && spectrum.numerators[1..].iter().all(|a| a.abs() == half))
}

/// `(brank(G), is_bent(f_G))`, computed independently of each other.
pub fn max_rank_bent_check(g: &Graph) -> Result<(usize, bool)> {
    let rank = g.adjacency().rank();
    let bent = is_bent(&QuadraticPolynomial::from_graph(g))?;
    Ok((rank, bent))
}

/// `brank(G) / 2` for a bipartite graph.
pub fn schmidt_rank_bipartite(g: &Graph) -> Result<usize> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let rank = g.adjacency().rank();
    debug_assert!(
        rank.is_multiple_of(2),
        "alternating matrices have even rank"
    );
    Ok(rank / 2)
}

/// `2^(n-1) (1 - 2^(-r)) = 2^(n-1) - 2^(n-1-r)`.
pub fn ms_from_schmidt(n: usize, r: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if r > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "Schmidt rank {r} exceeds n - 1 = {}",
            n - 1
        )));
    }
    Ok((BigUint::one() << (n - 1)) - (BigUint::one() << (n - 1 - r)))
}

pub fn readonce_descriptor(g: &Graph) -> ReadonceDescriptor {
    let reduction = reduce_to_readonce(&QuadraticPolynomial::from_graph(g));
    ReadonceDescriptor {
        form: reduction.form,
        n_total: g.order(),
    }
}
