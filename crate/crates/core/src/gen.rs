//! Seeded random instances: Lie algebras in random bases, modules, cocycles,
//! operators, and constructed twisted Rota-Baxter operators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{int, vec_add, Matrix, Scalar, Vector};
use crate::liealg::{
    ce_differential, coadjoint_rep, nijenhuis_trb_setup, validate_lie, validate_rep, LieAlgebra, Representation,
};
use crate::multilin::Cochain;
use crate::tgcs::{gcs_from_invertible_rb, GcsComponents};
use crate::twistrb::{
    gauge_transform, inverse_cochain_setup, reynolds_from_derivation, reynolds_setup, shift_by_coboundary,
    zero_operator, TrbSetup,
};

/// How an operator sample was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Random,
    Perturbed,
    Zero,
    InverseCochain,
    Nijenhuis,
    Gauge,
    Shift,
    Reynolds,
    AbelianTrivial,
}

impl SampleKind {
    /// Constructed samples are twisted Rota-Baxter by construction.
    pub fn is_constructed(self) -> bool {
        !matches!(self, SampleKind::Random | SampleKind::Perturbed)
    }
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub kind: SampleKind,
    pub setup: TrbSetup,
    pub operator: Matrix,
}

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn scalar(&mut self, bound: i64) -> Scalar {
        int(self.rng.gen_range(-bound..=bound))
    }

    pub fn vector(&mut self, n: usize, bound: i64) -> Vector {
        (0..n).map(|_| self.scalar(bound)).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, bound: i64) -> Matrix {
        let data = (0..rows * cols).map(|_| self.scalar(bound)).collect();
        Matrix::from_vec(rows, cols, data).expect("shape")
    }

    pub fn invertible(&mut self, n: usize, bound: i64) -> Matrix {
        loop {
            let m = self.matrix(n, n, bound);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn cochain(&mut self, degree: usize, source_dim: usize, target_dim: usize, bound: i64) -> Cochain {
        let coords = self.vector(Cochain::space_dim(degree, source_dim, target_dim), bound);
        Cochain::from_coords(degree, source_dim, target_dim, &coords)
    }

    fn combination(&mut self, basis: &[Vector], len: usize, bound: i64) -> Vector {
        let mut v = vec![Scalar::from_integer(0.into()); len];
        for b in basis {
            let c = self.scalar(bound);
            v = vec_add(&v, &b.iter().map(|x| x * &c).collect::<Vector>());
        }
        v
    }

    /// A catalog algebra of dimension at most `max_dim`, written in a random basis.
    pub fn lie_algebra(&mut self, max_dim: usize) -> LieAlgebra {
        let catalog: Vec<LieAlgebra> = [
            LieAlgebra::abelian(1),
            LieAlgebra::abelian(2),
            LieAlgebra::abelian(3),
            LieAlgebra::r2(),
            LieAlgebra::heisenberg(),
            LieAlgebra::sl2(),
            LieAlgebra::r3(int(-1)),
            LieAlgebra::r3(int(2)),
            LieAlgebra::r2().direct_sum(&LieAlgebra::abelian(1)),
            LieAlgebra::r2().direct_sum(&LieAlgebra::r2()),
            LieAlgebra::heisenberg().direct_sum(&LieAlgebra::abelian(1)),
            LieAlgebra::sl2().direct_sum(&LieAlgebra::abelian(1)),
        ]
        .into_iter()
        .filter(|l| l.dim() <= max_dim)
        .collect();
        let l = catalog.choose(&mut self.rng).expect("catalog").clone();
        let p = self.invertible(l.dim(), 1);
        change_basis(&l, &p)
    }

    /// Adjoint, coadjoint, trivial, or a sum with a trivial summand, in a random basis.
    pub fn representation(&mut self, l: &LieAlgebra, max_dim: usize) -> Representation {
        let n = l.dim();
        let mut options: Vec<Representation> = vec![Representation::trivial(l, 1)];
        if max_dim >= 2 {
            options.push(Representation::trivial(l, 2));
        }
        if n <= max_dim {
            options.push(Representation::adjoint(l));
            options.push(coadjoint_rep(l));
        }
        if n < max_dim {
            options.push(Representation::adjoint(l).direct_sum(&Representation::trivial(l, 1)));
        }
        let rep = options.choose(&mut self.rng).expect("options").clone();
        let q = self.invertible(rep.module_dim(), 1);
        conjugate_rep(l, &rep, &q)
    }

    /// A random element of `Z²(𝔤, M)`.
    pub fn cocycle(&mut self, l: &LieAlgebra, rep: &Representation) -> Cochain {
        let (n, m) = (l.dim(), rep.module_dim());
        if self.below(4) == 0 {
            return Cochain::zero(2, n, m);
        }
        let z2 = ce_differential(l, rep, 2).kernel_basis();
        let coords = self.combination(&z2, Cochain::space_dim(2, n, m), 2);
        Cochain::from_coords(2, n, m, &coords)
    }

    /// A random 1-cocycle `B : 𝔤 → M`.
    pub fn one_cocycle(&mut self, s: &TrbSetup) -> Matrix {
        let (n, m) = (s.lie_dim(), s.module_dim());
        let z1 = ce_differential(s.algebra(), s.rep(), 1).kernel_basis();
        let coords = self.combination(&z1, n * m, 1);
        Cochain::from_coords(1, n, m, &coords).matrix().clone()
    }

    pub fn setup(&mut self, max_dim: usize) -> TrbSetup {
        let l = self.lie_algebra(max_dim);
        let rep = self.representation(&l, max_dim);
        let h = self.cocycle(&l, &rep);
        TrbSetup::new(l, rep, h).expect("random cocycle")
    }

    pub fn operator(&mut self, s: &TrbSetup, bound: i64) -> Matrix {
        self.matrix(s.lie_dim(), s.module_dim(), bound)
    }

    /// `(T = h⁻¹, H = −δh)` with `M` of the same dimension as `𝔤`.
    pub fn inverse_cochain(&mut self, max_dim: usize) -> (TrbSetup, Matrix) {
        let l = self.lie_algebra(max_dim);
        let n = l.dim();
        let reps = [Representation::adjoint(&l), coadjoint_rep(&l), Representation::trivial(&l, n)];
        let rep = reps.choose(&mut self.rng).expect("reps").clone();
        let h = self.invertible(n, 2);
        inverse_cochain_setup(&l, &rep, &h).expect("invertible h")
    }

    /// An invertible untwisted operator `T = h⁻¹` for an invertible 1-cocycle `h`.
    pub fn invertible_rb(&mut self, max_dim: usize) -> (TrbSetup, Matrix) {
        for _ in 0..8 {
            let l = self.lie_algebra(max_dim);
            let rep = self.representation(&l, max_dim);
            if rep.module_dim() != l.dim() {
                continue;
            }
            let s = TrbSetup::untwisted(l.clone(), rep.clone());
            let h = self.one_cocycle(&s);
            if h.rank() == l.dim() {
                return inverse_cochain_setup(&l, &rep, &h).expect("invertible cocycle");
            }
        }
        let l = LieAlgebra::heisenberg();
        let (a, b) = loop {
            let (a, b) = (self.scalar(3), self.scalar(3));
            if a != int(0) && b != int(0) && &a + &b != int(0) {
                break (a, b);
            }
        };
        let h = Matrix::diagonal(&[a.clone(), b.clone(), a + b]);
        inverse_cochain_setup(&l, &Representation::adjoint(&l), &h).expect("invertible derivation")
    }

    /// Identity operator of a Nijenhuis setup `(𝔤_N, 𝔤, [N·, ·], −N∘μ)`.
    pub fn nijenhuis(&mut self, max_dim: usize) -> (TrbSetup, Matrix) {
        let (l, n) = loop {
            let choice = self.below(3);
            let (l, d) = match choice {
                0 => {
                    let l = self.lie_algebra(max_dim);
                    let c = self.scalar(3);
                    let d = Matrix::identity(l.dim()).scale(&c);
                    (l, d)
                }
                1 => (LieAlgebra::r2(), Matrix::diagonal(&[self.scalar(3), self.scalar(3)])),
                _ => {
                    let (a, b) = (self.scalar(3), self.scalar(3));
                    let l = LieAlgebra::r2().direct_sum(&LieAlgebra::r2());
                    (l, Matrix::diagonal(&[a.clone(), a, b.clone(), b]))
                }
            };
            if l.dim() > max_dim {
                continue;
            }
            let p = self.invertible(l.dim(), 1);
            let pinv = p.invert().expect("invertible");
            break (change_basis(&l, &p), &(&pinv * &d) * &p);
        };
        let s = nijenhuis_trb_setup(&l, &n).expect("Nijenhuis");
        let id = Matrix::identity(l.dim());
        (s, id)
    }

    /// `R = Σ (−d)ᵏ` from a nilpotent derivation of the Heisenberg algebra.
    pub fn reynolds(&mut self) -> (TrbSetup, Matrix) {
        let l = LieAlgebra::heisenberg();
        let (a, b, c) = (self.scalar(2), self.scalar(2), self.scalar(2));
        let zero = || int(0);
        let d = Matrix::from_rows(vec![vec![zero(), zero(), zero()], vec![c, zero(), zero()], vec![a, b, zero()]])
            .expect("shape");
        let r = reynolds_from_derivation(&l, &d).expect("nilpotent derivation");
        (reynolds_setup(&l), r)
    }

    /// Mixture of random operators and constructed twisted Rota-Baxter operators.
    pub fn sample(&mut self, max_dim: usize) -> Sample {
        let pick = self.below(10);
        let (kind, (setup, operator)) = match pick {
            0 | 1 => {
                let s = self.setup(max_dim);
                let t = self.operator(&s, 2);
                (SampleKind::Random, (s, t))
            }
            2 => {
                let (s, t) = self.inverse_cochain(max_dim);
                let e = self.operator(&s, 1);
                (SampleKind::Perturbed, (s, &t + &e))
            }
            3 => {
                let s = self.setup(max_dim);
                let t = zero_operator(&s);
                (SampleKind::Zero, (s, t))
            }
            4 => (SampleKind::InverseCochain, self.inverse_cochain(max_dim)),
            5 => (SampleKind::Nijenhuis, self.nijenhuis(max_dim)),
            6 => {
                let (s, t) = self.inverse_cochain(max_dim);
                let b = self.one_cocycle(&s);
                match gauge_transform(&s, &t, &b) {
                    Ok(tb) => (SampleKind::Gauge, (s, tb)),
                    Err(_) => (SampleKind::InverseCochain, (s, t)),
                }
            }
            7 => {
                let (s, t) = self.inverse_cochain(max_dim);
                let h = self.matrix(s.module_dim(), s.lie_dim(), 1);
                match shift_by_coboundary(&s, &t, &h) {
                    Ok(st) => (SampleKind::Shift, st),
                    Err(_) => (SampleKind::InverseCochain, (s, t)),
                }
            }
            8 if max_dim >= 3 => (SampleKind::Reynolds, self.reynolds()),
            _ => {
                let n = 1 + self.below(max_dim);
                let m = 1 + self.below(max_dim);
                let l = LieAlgebra::abelian(n);
                let s = TrbSetup::untwisted(l.clone(), Representation::trivial(&l, m));
                let t = self.operator(&s, 2);
                (SampleKind::AbelianTrivial, (s, t))
            }
        };
        Sample { kind, setup, operator }
    }

    /// `J = P J₀ P⁻¹` with `J₀² = −id`, split into blocks over `𝔤 ⊕ M`.
    pub fn almost_complex_components(&mut self, s: &TrbSetup) -> GcsComponents {
        let (n, m) = (s.lie_dim(), s.module_dim());
        let total = n + m;
        let half = total / 2;
        let mut j0 = Matrix::zeros(total, total);
        for k in 0..half {
            j0[(half + k, k)] = int(1);
            j0[(k, half + k)] = int(-1);
        }
        let p = self.invertible(total, 1);
        let j = &(&p * &j0) * &p.invert().expect("invertible");
        split_blocks(&j, n, m)
    }

    pub fn random_components(&mut self, s: &TrbSetup, bound: i64) -> GcsComponents {
        let (n, m) = (s.lie_dim(), s.module_dim());
        GcsComponents {
            n: self.matrix(n, n, bound),
            t: self.matrix(n, m, bound),
            sigma: self.matrix(m, n, bound),
            s: self.matrix(m, m, bound),
        }
    }

    /// Setup and component tuple: random blocks, almost complex blocks, or the
    /// structure of an invertible twisted Rota-Baxter operator.
    pub fn gcs_sample(&mut self, max_dim: usize) -> (TrbSetup, GcsComponents) {
        match self.below(3) {
            0 => {
                let s = self.setup(max_dim);
                let j = self.random_components(&s, 1);
                (s, j)
            }
            1 => loop {
                let s = self.setup(max_dim);
                if (s.lie_dim() + s.module_dim()).is_multiple_of(2) {
                    let j = self.almost_complex_components(&s);
                    break (s, j);
                }
            },
            _ => {
                let (s, t) = self.invertible_rb(max_dim);
                let j = gcs_from_invertible_rb(&s, &t).expect("invertible operator");
                (s, j)
            }
        }
    }
}

/// The same algebra in the basis given by the columns of `p`.
pub fn change_basis(l: &LieAlgebra, p: &Matrix) -> LieAlgebra {
    let n = l.dim();
    let pinv = p.invert().expect("invertible change of basis");
    let table: Vec<Vec<Vector>> =
        (0..n).map(|i| (0..n).map(|j| pinv.mul_vec(&l.bracket(&p.col(i), &p.col(j)))).collect()).collect();
    validate_lie(n, &table).expect("isomorphic copy")
}

/// The representation `x ↦ Q⁻¹ρ(x)Q` of an algebra already in its final basis.
pub fn conjugate_rep(l: &LieAlgebra, rep: &Representation, q: &Matrix) -> Representation {
    let qinv = q.invert().expect("invertible");
    let action = rep.action().iter().map(|a| &(&qinv * a) * q).collect();
    validate_rep(l, action).expect("conjugate representation")
}

/// Splits an operator on `𝔤 ⊕ M` into `(N, T, σ, S)` with `J = [[N, T], [σ, −S]]`.
pub fn split_blocks(j: &Matrix, n: usize, m: usize) -> GcsComponents {
    let block = |r0: usize, c0: usize, rows: usize, cols: usize| {
        let data = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).map(|(r, c)| j[(r0 + r, c0 + c)].clone());
        Matrix::from_vec(rows, cols, data.collect()).expect("shape")
    };
    GcsComponents { n: block(0, 0, n, n), t: block(0, n, n, m), sigma: block(n, 0, m, n), s: -&block(n, n, m, m) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twistrb::check_trb;

    #[test]
    fn constructed_samples_are_twisted_rb() {
        let mut g = Gen::new(7);
        for _ in 0..60 {
            let smp = g.sample(4);
            if smp.kind.is_constructed() {
                assert!(check_trb(&smp.setup, &smp.operator).unwrap().holds, "{:?}", smp.kind);
            }
        }
    }

    #[test]
    fn almost_complex_blocks_square_to_minus_one() {
        let mut g = Gen::new(3);
        let l = LieAlgebra::r2();
        let s = TrbSetup::untwisted(l.clone(), Representation::adjoint(&l));
        let j = g.almost_complex_components(&s).block();
        assert_eq!(&j * &j, -&Matrix::identity(4));
    }

    #[test]
    fn invertible_operators_are_untwisted() {
        let mut g = Gen::new(5);
        for _ in 0..10 {
            let (s, t) = g.invertible_rb(4);
            assert!(s.cocycle().is_zero());
            assert!(check_trb(&s, &t).unwrap().holds);
            let _ = g.gcs_sample(4);
        }
    }

    #[test]
    fn seeds_reproduce() {
        let (mut a, mut b) = (Gen::new(11), Gen::new(11));
        for _ in 0..5 {
            assert_eq!(a.sample(3).operator, b.sample(3).operator);
        }
    }
}
