//! Synthetic models with known harmonicity behaviour.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{pairs, MultiVector};
use crate::gstruct::UnitSpinor;
use crate::scalar::{Scalar, Substitution};

use super::{HomogeneousModel, ModelError};

/// `Λ ≡ 0`, a flat torus.
pub fn flat(n: usize) -> Result<HomogeneousModel, ModelError> {
    let phi = UnitSpinor::basis(n, 5)?;
    HomogeneousModel::from_forms("flat", Substitution::TEqualsU, vec![MultiVector::zero(n); n], phi)
}

/// Random integer 2-forms with small entries, deterministic in `seed`.
pub fn random_forms(n: usize, seed: u64) -> Vec<MultiVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let coords: Vec<Scalar> = pairs(n)
                .iter()
                .map(|_| if rng.gen_bool(0.4) { Scalar::from_int(rng.gen_range(-2..=2)) } else { Scalar::zero() })
                .collect();
            MultiVector::from_pair_coords(n, &coords)
        })
        .collect()
}

/// `Λ = (t − 2) B` for random constant `B`. Every quantity quadratic in `Λ`
/// carries `(t − 2)²`, so a nonzero residual has the root set `{2}`.
pub fn scaled(n: usize, seed: u64) -> Result<HomogeneousModel, ModelError> {
    let phi = UnitSpinor::basis(n, 5)?;
    let factor = &Scalar::u() - &Scalar::from_int(2);
    let lambda = random_forms(n, seed).iter().map(|w| w.scale(&factor)).collect();
    HomogeneousModel::from_forms("scaled", Substitution::TEqualsU, lambda, phi)
}
