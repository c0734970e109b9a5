//! Exterior-power bookkeeping, skew multilinear maps and unshuffles.
//!
//! A [`Cochain`] of degree `p` from an `n`-dimensional space to an
//! `m`-dimensional space is stored as an `m × C(n, p)` matrix whose `j`-th
//! column is the value on the `j`-th strictly increasing index tuple in
//! lexicographic order. Degree 0 is a single column: a constant vector.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, zero_vec, Matrix, Scalar, ScalarVec, Vector};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `degree`-tuples of `0..dim` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtBasis {
    pub dim: usize,
    pub degree: usize,
    pub tuples: Vec<Vec<usize>>,
}

impl ExtBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let mut tuples = Vec::with_capacity(binomial(dim, degree));
        let mut cur = Vec::with_capacity(degree);
        fn rec(dim: usize, degree: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == degree {
                out.push(cur.clone());
                return;
            }
            for i in start..dim {
                cur.push(i);
                rec(dim, degree, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(dim, degree, 0, &mut cur, &mut tuples);
        ExtBasis { dim, degree, tuples }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Lexicographic rank of a strictly increasing tuple.
    pub fn index_of(dim: usize, tuple: &[usize]) -> usize {
        let p = tuple.len();
        let mut rank = 0;
        let mut next = 0;
        for (i, &a) in tuple.iter().enumerate() {
            for v in next..a {
                rank += binomial(dim - 1 - v, p - 1 - i);
            }
            next = a + 1;
        }
        rank
    }
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` when an index repeats (the alternating value is then zero).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    Some(sign)
}

pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut p = perm.to_vec();
    sort_with_sign(&mut p).expect("permutation has repeated entries")
}

/// A permutation increasing on consecutive blocks.
///
/// `perm[k]` is the (0-based) position fed into slot `k`, i.e. slot `k`
/// receives `u_{perm[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unshuffle {
    pub blocks: Vec<usize>,
    pub perm: Vec<usize>,
    pub sign: i32,
}

pub fn enumerate_unshuffles(blocks: &[usize]) -> Vec<Unshuffle> {
    let n: usize = blocks.iter().sum();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn choose(
        blocks: &[usize],
        b: usize,
        start: usize,
        left: usize,
        used: &mut [bool],
        perm: &mut Vec<usize>,
        all: &[usize],
        out: &mut Vec<Unshuffle>,
    ) {
        if b == blocks.len() {
            out.push(Unshuffle { blocks: all.to_vec(), sign: permutation_sign(perm), perm: perm.clone() });
            return;
        }
        if left == 0 {
            let next_size = blocks.get(b + 1).copied().unwrap_or(0);
            choose(blocks, b + 1, 0, next_size, used, perm, all, out);
            return;
        }
        for i in start..used.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            perm.push(i);
            choose(blocks, b, i + 1, left - 1, used, perm, all, out);
            perm.pop();
            used[i] = false;
        }
    }
    let first = blocks.first().copied().unwrap_or(0);
    choose(blocks, 0, 0, first, &mut used, &mut perm, blocks, &mut out);
    out
}

/// A skew-symmetric multilinear map `∧^degree K^source_dim → K^target_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    matrix: Matrix,
}

impl Cochain {
    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        Cochain { degree, source_dim, target_dim, matrix: Matrix::zeros(target_dim, binomial(source_dim, degree)) }
    }

    pub fn from_matrix(degree: usize, source_dim: usize, target_dim: usize, matrix: Matrix) -> Result<Self> {
        let cols = binomial(source_dim, degree);
        if matrix.rows() != target_dim || matrix.cols() != cols {
            return Err(Error::DimensionMismatch {
                context: "cochain matrix shape",
                expected: target_dim * cols,
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Cochain { degree, source_dim, target_dim, matrix })
    }

    /// Degree-0 cochain with the given value.
    pub fn constant(source_dim: usize, value: Vector) -> Self {
        let m = value.len();
        Cochain { degree: 0, source_dim, target_dim: m, matrix: Matrix::from_columns(m, &[value]) }
    }

    /// Degree-1 cochain from a linear map given as a `target × source` matrix.
    pub fn linear(map: &Matrix) -> Self {
        Cochain { degree: 1, source_dim: map.cols(), target_dim: map.rows(), matrix: map.clone() }
    }

    /// Builds the cochain whose value on each increasing tuple is `f(tuple)`.
    pub fn from_fn(degree: usize, source_dim: usize, target_dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let basis = ExtBasis::new(source_dim, degree);
        let cols: Vec<Vector> = basis.tuples.iter().map(|t| f(t)).collect();
        Cochain { degree, source_dim, target_dim, matrix: Matrix::from_columns(target_dim, &cols) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn same_shape(&self, other: &Cochain) -> bool {
        self.degree == other.degree && self.source_dim == other.source_dim && self.target_dim == other.target_dim
    }

    /// Value on basis vectors with the given (not necessarily sorted) indices.
    pub fn eval_basis(&self, idx: &[usize]) -> Vector {
        debug_assert_eq!(idx.len(), self.degree);
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            None => zero_vec(self.target_dim),
            Some(sign) => {
                let col = self.matrix.col(ExtBasis::index_of(self.source_dim, &sorted));
                if sign < 0 {
                    col.iter().map(|x| -x).collect()
                } else {
                    col
                }
            }
        }
    }

    /// Adds `coeff · f(e_{idx})` into `acc`.
    fn accumulate_basis(&self, idx: &mut [usize], coeff: &Scalar, acc: &mut [Scalar]) {
        let Some(sign) = sort_with_sign(idx) else { return };
        let c = ExtBasis::index_of(self.source_dim, idx);
        for (r, a) in acc.iter_mut().enumerate() {
            let v = &self.matrix[(r, c)];
            if !v.is_zero() {
                if sign < 0 {
                    *a -= coeff * v;
                } else {
                    *a += coeff * v;
                }
            }
        }
    }

    /// Multilinear, fully skew evaluation on arbitrary vectors.
    pub fn skew_eval(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch {
                context: "cochain arity",
                expected: self.degree,
                found: args.len(),
            });
        }
        if let Some(bad) = args.iter().find(|a| a.len() != self.source_dim) {
            return Err(Error::DimensionMismatch {
                context: "cochain argument length",
                expected: self.source_dim,
                found: bad.len(),
            });
        }
        Ok(self.eval(args))
    }

    /// Unchecked [`Cochain::skew_eval`] for internal callers with known shapes.
    pub(crate) fn eval(&self, args: &[Vector]) -> Vector {
        let mut acc = zero_vec(self.target_dim);
        let mut idx = vec![0; self.degree];
        self.expand(args, 0, &Scalar::one(), &mut idx, &mut acc);
        acc
    }

    fn expand(&self, args: &[Vector], k: usize, coeff: &Scalar, idx: &mut Vec<usize>, acc: &mut [Scalar]) {
        if k == args.len() {
            let mut scratch = idx.clone();
            self.accumulate_basis(&mut scratch, coeff, acc);
            return;
        }
        for (i, a) in args[k].iter().enumerate() {
            if a.is_zero() || idx[..k].contains(&i) {
                continue;
            }
            idx[k] = i;
            self.expand(args, k + 1, &(coeff * a), idx, acc);
        }
    }

    /// Evaluates with a general first argument followed by basis vectors.
    pub(crate) fn eval_first_vector(&self, first: &[Scalar], rest: &[usize]) -> Vector {
        debug_assert_eq!(rest.len() + 1, self.degree);
        let mut acc = zero_vec(self.target_dim);
        let mut idx = Vec::with_capacity(self.degree);
        for (i, a) in first.iter().enumerate() {
            if a.is_zero() || rest.contains(&i) {
                continue;
            }
            idx.clear();
            idx.push(i);
            idx.extend_from_slice(rest);
            self.accumulate_basis(&mut idx, a, &mut acc);
        }
        acc
    }

    /// Coordinates in the concatenated-columns order used by differential matrices.
    pub fn coords(&self) -> Vector {
        let cols = self.matrix.cols();
        let mut v = Vec::with_capacity(cols * self.target_dim);
        for c in 0..cols {
            for r in 0..self.target_dim {
                v.push(self.matrix[(r, c)].clone());
            }
        }
        v
    }

    pub fn from_coords(degree: usize, source_dim: usize, target_dim: usize, coords: &[Scalar]) -> Self {
        let cols = binomial(source_dim, degree);
        assert_eq!(coords.len(), cols * target_dim, "coordinate vector length");
        let mut matrix = Matrix::zeros(target_dim, cols);
        for c in 0..cols {
            for r in 0..target_dim {
                matrix[(r, c)] = coords[c * target_dim + r].clone();
            }
        }
        Cochain { degree, source_dim, target_dim, matrix }
    }

    pub fn space_dim(degree: usize, source_dim: usize, target_dim: usize) -> usize {
        binomial(source_dim, degree) * target_dim
    }

    /// Unit cochains, in coordinate order.
    pub fn basis(degree: usize, source_dim: usize, target_dim: usize) -> Vec<Cochain> {
        let n = Self::space_dim(degree, source_dim, target_dim);
        (0..n)
            .map(|k| {
                let mut c = zero_vec(n);
                c[k] = Scalar::one();
                Self::from_coords(degree, source_dim, target_dim, &c)
            })
            .collect()
    }

    /// Matrix of a linear map between cochain spaces, assembled column by column.
    pub fn operator_matrix(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(&Cochain) -> Cochain,
    ) -> Matrix {
        let cols: Vec<Vector> = Self::basis(degree, source_dim, target_dim).iter().map(|b| f(b).coords()).collect();
        Matrix::from_columns(out_dim, &cols)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain sum shape");
        Cochain { matrix: &self.matrix + &other.matrix, ..self.clone() }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain difference shape");
        Cochain { matrix: &self.matrix - &other.matrix, ..self.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { matrix: self.matrix.scale(c), ..self.clone() }
    }

    pub fn neg(&self) -> Cochain {
        Cochain { matrix: -&self.matrix, ..self.clone() }
    }

    /// Post-composition with a linear map `target → K^k`.
    pub fn compose_left(&self, map: &Matrix) -> Cochain {
        assert_eq!(map.cols(), self.target_dim);
        Cochain { target_dim: map.rows(), matrix: map * &self.matrix, ..self.clone() }
    }

    /// First increasing tuple (lexicographic) with a nonzero value.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, Vector)> {
        let basis = ExtBasis::new(self.source_dim, self.degree);
        basis.tuples.into_iter().enumerate().find_map(|(c, t)| {
            let col = self.matrix.col(c);
            (!is_zero_vec(&col)).then_some((t, col))
        })
    }
}

pub fn cochain_from_values(
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    assignments: impl IntoIterator<Item = (Vec<usize>, Vector)>,
) -> Result<Cochain> {
    let mut c = Cochain::zero(degree, source_dim, target_dim);
    let mut seen = vec![false; c.matrix.cols()];
    for (tuple, value) in assignments {
        let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
        if tuple.len() != degree || !increasing || tuple.iter().any(|&i| i >= source_dim) {
            return Err(Error::IndexOutOfRange { tuple, dim: source_dim });
        }
        if value.len() != target_dim {
            return Err(Error::DimensionMismatch {
                context: "cochain value",
                expected: target_dim,
                found: value.len(),
            });
        }
        let col = ExtBasis::index_of(source_dim, &tuple);
        if std::mem::replace(&mut seen[col], true) {
            return Err(Error::DuplicateAssignment(tuple));
        }
        c.matrix.set_col(col, &value);
    }
    Ok(c)
}

/// A general (not necessarily symmetric) bilinear map `K^n × K^n → K^m`,
/// stored with column `i·n + j` holding the value on `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    dim_in: usize,
    dim_out: usize,
    matrix: Matrix,
}

impl Bilinear {
    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        Bilinear { dim_in, dim_out, matrix: Matrix::zeros(dim_out, dim_in * dim_in) }
    }

    pub fn from_fn(dim_in: usize, dim_out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut b = Self::zero(dim_in, dim_out);
        for i in 0..dim_in {
            for j in 0..dim_in {
                b.matrix.set_col(i * dim_in + j, &f(i, j));
            }
        }
        b
    }

    pub fn from_cochain(c: &Cochain) -> Self {
        assert_eq!(c.degree(), 2);
        Self::from_fn(c.source_dim(), c.target_dim(), |i, j| c.eval_basis(&[i, j]))
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn on_basis(&self, i: usize, j: usize) -> Vector {
        self.matrix.col(i * self.dim_in + j)
    }

    pub fn apply(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut acc = zero_vec(self.dim_out);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                axpy(&mut acc, &(x * y), &self.on_basis(i, j));
            }
        }
        acc
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim_in).all(|i| {
            (i..self.dim_in).all(|j| {
                let a = self.on_basis(i, j);
                let b = self.on_basis(j, i);
                a.iter().zip(&b).all(|(x, y)| (x + y).is_zero())
            })
        })
    }

    /// Skew part as a cochain; only meaningful when [`Bilinear::is_skew`].
    pub fn to_cochain(&self) -> Cochain {
        Cochain::from_fn(2, self.dim_in, self.dim_out, |t| self.on_basis(t[0], t[1]))
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        Bilinear { matrix: &self.matrix + &other.matrix, ..self.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        Bilinear { matrix: self.matrix.scale(c), ..self.clone() }
    }
}

/// Parses a `"[i,j,...]"` key into indices.
pub fn parse_tuple_key(key: &str) -> Result<Vec<usize>> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad tuple key {key:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad tuple key {key:?}"))))
        .collect()
}

pub fn tuple_key(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// JSON wire form of a [`Cochain`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CochainJson {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    #[serde(default)]
    pub values: BTreeMap<String, ScalarVec>,
}

impl From<&Cochain> for CochainJson {
    fn from(c: &Cochain) -> Self {
        let basis = ExtBasis::new(c.source_dim, c.degree);
        let values = basis
            .tuples
            .iter()
            .enumerate()
            .filter_map(|(k, t)| {
                let col = c.matrix.col(k);
                (!is_zero_vec(&col)).then(|| (tuple_key(t), ScalarVec(col)))
            })
            .collect();
        CochainJson { degree: c.degree, source_dim: c.source_dim, target_dim: c.target_dim, values }
    }
}

impl TryFrom<CochainJson> for Cochain {
    type Error = Error;
    fn try_from(j: CochainJson) -> Result<Cochain> {
        let assignments =
            j.values.into_iter().map(|(k, v)| Ok((parse_tuple_key(&k)?, v.0))).collect::<Result<Vec<_>>>()?;
        cochain_from_values(j.degree, j.source_dim, j.target_dim, assignments)
    }
}

impl Serialize for Cochain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CochainJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CochainJson::deserialize(d)?;
        Cochain::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Scales a vector by a sign without allocating a scalar.
pub(crate) fn signed(v: Vector, sign: i32) -> Vector {
    if sign < 0 {
        v.into_iter().map(|x| -x).collect()
    } else {
        v
    }
}
