//! Double-precision recomputation of the model pipeline, used as an oracle
//! for the exact results. Verdicts never depend on it.

use nalgebra::{DMatrix, DVector};

use crate::clifford::{pairs, GENERATORS, SPINOR_DIM};
use crate::homogeneous::HomogeneousModel;
use crate::scalar::{rat, to_f64, Rational};

const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("pole at t = {0}")]
    Pole(f64),
    #[error("parameter must be positive, got t = {0}")]
    NonPositive(f64),
    #[error("singular spinor frame")]
    Singular,
    #[error("empty or reversed range [{from}, {to}] with {steps} steps")]
    BadRange { from: f64, to: f64, steps: usize },
}

fn gamma(n: usize) -> Vec<DMatrix<f64>> {
    GENERATORS[..n]
        .iter()
        .map(|terms| {
            let mut m = DMatrix::zeros(SPINOR_DIM, SPINOR_DIM);
            for &(s, i, j) in terms {
                let (i, j) = (i as usize - 1, j as usize - 1);
                m[(i, j)] -= s as f64;
                m[(j, i)] += s as f64;
            }
            m
        })
        .collect()
}

/// Everything the oracle computes at a single parameter value.
#[derive(Clone, Debug)]
pub struct NumericEval {
    pub t: f64,
    pub s: DMatrix<f64>,
    pub eta: DVector<f64>,
    /// `ξ_{X_i}` in pair coordinates, one column per slot.
    pub torsion: DMatrix<f64>,
    /// Norm of the stabilizer components of `Λ`.
    pub canonical_norm: f64,
    /// `|½ L·φ|`, the harmonicity defect.
    pub residual_norm: f64,
    /// `|Δφ + ½ c_ξ·φ|`.
    pub laplacian_norm: f64,
}

/// Fully numeric pipeline at `t = t0`: spin lift, spinor decomposition, SVD
/// for the stabilizer, projection for the torsion and the defect `½ L·φ`.
pub fn evaluate(model: &HomogeneousModel, t0: f64) -> Result<NumericEval, NumericError> {
    if t0.is_nan() || t0 <= 0.0 {
        return Err(NumericError::NonPositive(t0));
    }
    let n = model.n;
    let u = model.substitution.u_value(t0);
    let g = gamma(n);
    let prs = pairs(n);
    let np = prs.len();

    let mut coords = DMatrix::zeros(np, n);
    for (i, w) in model.lambda.iter().enumerate() {
        for (p, &(a, b)) in prs.iter().enumerate() {
            let v = w.coeff(&[a, b]).eval_u_f64(u);
            if !v.is_finite() {
                return Err(NumericError::Pole(t0));
            }
            coords[(p, i)] = v;
        }
    }
    let skew = |c: &DVector<f64>| -> DMatrix<f64> {
        let mut m = DMatrix::zeros(n, n);
        for (p, &(a, b)) in prs.iter().enumerate() {
            let (a, b) = (a as usize - 1, b as usize - 1);
            m[(b, a)] = c[p];
            m[(a, b)] = -c[p];
        }
        m
    };
    let form_action = |c: &DVector<f64>| -> DMatrix<f64> {
        let mut m = DMatrix::zeros(SPINOR_DIM, SPINOR_DIM);
        for (p, &(a, b)) in prs.iter().enumerate() {
            m += &g[a as usize - 1] * &g[b as usize - 1] * c[p];
        }
        m
    };

    let phi = DVector::from_iterator(
        SPINOR_DIM,
        model.phi0.spinor().coords().iter().map(|c| c.eval_u_f64(u)),
    );
    let vol = g.iter().take(6).fold(DMatrix::identity(SPINOR_DIM, SPINOR_DIM), |acc, e| acc * e);
    let mut frame_cols = vec![phi.clone()];
    if n == 6 {
        frame_cols.push(&vol * &phi);
    }
    frame_cols.extend(g.iter().map(|e| e * &phi));
    let frame = DMatrix::from_columns(&frame_cols);
    let lu = frame.lu();

    let slots: Vec<DVector<f64>> = (0..n).map(|i| coords.column(i).into_owned()).collect();
    let lifts: Vec<DMatrix<f64>> = slots.iter().map(|c| form_action(c) * 0.5).collect();
    let mut s = DMatrix::zeros(n, n);
    let mut eta = DVector::zeros(n);
    let off = if n == 6 { 2 } else { 1 };
    for (i, l) in lifts.iter().enumerate() {
        let x = lu.solve(&(l * &phi)).ok_or(NumericError::Singular)?;
        if n == 6 {
            eta[i] = x[1];
        }
        for k in 0..n {
            s[(k, i)] = x[off + k];
        }
    }

    // Row space of ω -> ω·φ is the complement m.
    let action = DMatrix::from_columns(&prs.iter().map(|&(a, b)| &g[a as usize - 1] * &g[b as usize - 1] * &phi).collect::<Vec<_>>());
    let svd = action.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let rank = svd.singular_values.iter().filter(|&&x| x > RANK_TOL).count();
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let basis = DMatrix::from_rows(&order[..rank].iter().map(|&k| v_t.row(k).into_owned()).collect::<Vec<_>>());
    let proj_m = basis.transpose() * &basis;

    let torsion = &proj_m * &coords;
    let canonical_norm = (&coords - &torsion).norm();

    let a: Vec<DMatrix<f64>> = slots.iter().map(skew).collect();
    let xi: Vec<DMatrix<f64>> = (0..n).map(|i| skew(&torsion.column(i).into_owned())).collect();
    let trace_vec = (0..n).fold(DVector::zeros(n), |acc: DVector<f64>, i| acc + a[i].column(i));
    let mut l = DMatrix::zeros(n, n);
    for i in 0..n {
        l += &a[i] * &xi[i] - &xi[i] * &a[i];
        l -= &xi[i] * trace_vec[i];
    }
    let mut lc = DVector::zeros(np);
    for (p, &(x, y)) in prs.iter().enumerate() {
        lc[p] = l[(y as usize - 1, x as usize - 1)];
    }
    let residual_norm = (form_action(&lc) * &phi * 0.5).norm();

    let mut delta = DVector::zeros(SPINOR_DIM);
    for (i, lift) in lifts.iter().enumerate() {
        delta -= lift * (lift * &phi);
        delta += lift * &phi * trace_vec[i];
    }
    let mut c_xi = DMatrix::zeros(SPINOR_DIM, SPINOR_DIM);
    for i in 0..n {
        let e = form_action(&torsion.column(i).into_owned());
        c_xi += &e * &e * 0.5;
    }
    let laplacian_norm = (delta + c_xi * &phi * 0.5).norm();

    Ok(NumericEval { t: t0, s, eta, torsion, canonical_norm, residual_norm, laplacian_norm })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub t: Rational,
    /// `None` when the row hits a pole.
    pub residual: Option<f64>,
}

/// Harmonicity defect on `steps + 1` equally spaced parameter values.
pub fn scan(model: &HomogeneousModel, from: &Rational, to: &Rational, steps: usize) -> Result<Vec<ScanRow>, NumericError> {
    if steps == 0 || from >= to || from <= &Rational::from_integer(0.into()) {
        return Err(NumericError::BadRange { from: to_f64(from), to: to_f64(to), steps });
    }
    let h = (to - from) / Rational::from_integer(steps.into());
    (0..=steps)
        .map(|k| {
            let t = from + &h * Rational::from_integer(k.into());
            let residual = match evaluate(model, to_f64(&t)) {
                Ok(e) => Some(e.residual_norm),
                Err(NumericError::Pole(_)) | Err(NumericError::Singular) => None,
                Err(e) => return Err(e),
            };
            Ok(ScanRow { t, residual })
        })
        .collect()
}

/// Whether some local minimum of the scan lies within one grid step of `root`.
pub fn brackets(rows: &[ScanRow], root: &Rational) -> bool {
    (0..rows.len()).any(|k| {
        let lo = &rows[k.saturating_sub(1)].t;
        let hi = &rows[(k + 1).min(rows.len() - 1)].t;
        let Some(r) = rows[k].residual else { return false };
        let left = if k > 0 { rows[k - 1].residual.is_none_or(|x| r <= x) } else { true };
        let right = if k + 1 < rows.len() { rows[k + 1].residual.is_none_or(|x| r <= x) } else { true };
        lo <= root && root <= hi && left && right
    })
}

/// Deterministic sample of `count` rationals in `(0, upper]`.
pub fn sample_parameters(count: usize, seed: u64) -> Vec<Rational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rat(rng.gen_range(1..=400), rng.gen_range(20..=100))).collect()
}
