use super::operator::OperatorExpr;
use super::wave::{inner_product, EnergyValue, WaveFunction};
use crate::dist::{star, Distribution, PiecewiseSmooth};
use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::scalar::{is_negligible, real, Real, Scalar};

/// Half-line selected by a projector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn both() -> [Side; 2] {
        [Side::Plus, Side::Minus]
    }
}

/// `delta^(n) ** psi`: the comb takes the data of `psi` right of the origin.
pub fn delta_plus<T: Real>(n: usize, psi: &Distribution<T>) -> Result<Distribution<T>> {
    star(&Distribution::delta(T::zero(), n), psi)
}

/// `psi ** delta^(n)`: the comb takes the data of `psi` left of the origin.
pub fn delta_minus<T: Real>(n: usize, psi: &Distribution<T>) -> Result<Distribution<T>> {
    star(psi, &Distribution::delta(T::zero(), n))
}

/// `P+ psi = theta(x) ** psi`, `P- psi = theta(-x) ** psi`.
pub fn project<T: Real>(side: Side, psi: &Distribution<T>) -> Result<Distribution<T>> {
    let theta = match side {
        Side::Plus => Distribution::step(T::zero()),
        Side::Minus => Distribution::reflected_step(T::zero()),
    };
    star(&theta, psi)
}

pub fn apply_hc<T: Real>(psi: &WaveFunction<T>) -> Result<Distribution<T>> {
    OperatorExpr::hc().apply(psi.dist())
}

pub fn apply_hd<T: Real>(psi: &WaveFunction<T>) -> Result<Distribution<T>> {
    OperatorExpr::hd().apply(psi.dist())
}

/// `H_C` on `D(H_S)`; `DomainViolation` elsewhere.
pub fn apply_hs<T: Real>(psi: &WaveFunction<T>) -> Result<Distribution<T>> {
    OperatorExpr::hs().apply(psi.dist())
}

/// `-theta(-x) psi_-'' - theta(x) psi_+''`, the form `H_C` takes on its
/// maximal domain.
pub fn hc_reduced_form<T: Real>(psi: &WaveFunction<T>) -> Result<Distribution<T>> {
    psi.boundary_data(0)?;
    let smooth = psi.dist().smooth().map_pieces(|p| -p.diff_n(2));
    Ok(Distribution::new(smooth, Vec::new()))
}

/// `[H_D, P] psi = H_D P psi - P H_D psi` for `psi` in `D_max(H_D)`.
pub fn commutator_hd_p<T: Real>(side: Side, psi: &WaveFunction<T>) -> Result<Distribution<T>> {
    if !in_domain_max_hd(psi)? {
        return Err(Error::DomainViolation {
            operator: "[H_D, P]".into(),
            detail: "argument must vanish at the origin from both sides".into(),
        });
    }
    let hd = OperatorExpr::hd();
    let lhs = hd.apply(&project(side, psi.dist())?)?;
    let rhs = project(side, &hd.apply(psi.dist())?)?;
    Ok(&lhs - &rhs)
}

fn vanish<T: Real>(values: &[Scalar<T>]) -> bool {
    values.iter().all(|&v| is_negligible(v, T::eps_zero()))
}

/// `psi_-(0) = psi_-'(0) = 0`.
pub fn in_domain_max_hc<T: Real>(psi: &WaveFunction<T>) -> Result<bool> {
    let b = psi.boundary_data(1)?;
    Ok(vanish(&b.left))
}

/// `D_max(H_C)` together with `psi_+(0) = psi_+'(0) = 0`.
pub fn in_domain_hs<T: Real>(psi: &WaveFunction<T>) -> Result<bool> {
    let b = psi.boundary_data(1)?;
    Ok(vanish(&b.left) && vanish(&b.right))
}

/// `psi_-(0) = psi_+(0) = 0`, read off from the rows of
/// [`boundary_form`] for `H_D`.
pub fn in_domain_max_hd<T: Real>(psi: &WaveFunction<T>) -> Result<bool> {
    let b = psi.boundary_data(0)?;
    Ok(vanish(&[b.left[0], b.right[0]]))
}

/// Comb at the origin produced by an operator, as a linear function of the
/// boundary data `(psi_-(0), psi_-'(0), psi_+(0), psi_+'(0))`.
///
/// `rows[j]` holds the coefficients of `delta^(j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryForm<T: Real> {
    pub rows: Vec<[Scalar<T>; 4]>,
}

impl<T: Real> BoundaryForm<T> {
    pub fn coeff(&self, order: usize, column: usize) -> Scalar<T> {
        self.rows
            .get(order)
            .map_or_else(|| real(T::zero()), |r| r[column])
    }

    /// Predicted comb coefficients for the given boundary data.
    pub fn apply(&self, data: [Scalar<T>; 4]) -> Vec<Scalar<T>> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(data).fold(real(T::zero()), |acc, (c, d)| acc + *c * d))
            .collect()
    }
}

/// Derives the [`BoundaryForm`] of `op` by applying it to the basis
/// `theta(-x)`, `theta(-x) x`, `theta(x)`, `theta(x) x`, each of which has
/// exactly one nonzero entry of boundary data.
///
/// The result describes `op` on every wave function if the combs `op`
/// produces depend only on those four values, which holds for operators of
/// order at most two built from the primitives.
pub fn boundary_form<T: Real>(op: &OperatorExpr<T>) -> Result<BoundaryForm<T>> {
    let zero = SmoothExpr::zero;
    let basis = [
        (SmoothExpr::one(), zero()),
        (SmoothExpr::x(), zero()),
        (zero(), SmoothExpr::one()),
        (zero(), SmoothExpr::x()),
    ];
    let mut rows: Vec<[Scalar<T>; 4]> = Vec::new();
    for (col, (left, right)) in basis.into_iter().enumerate() {
        let e = Distribution::new(
            PiecewiseSmooth::new(vec![T::zero()], vec![left, right])?,
            Vec::new(),
        );
        let image = op.apply(&e)?;
        if let Some(d) = image.deltas().iter().find(|d| d.point() != T::zero()) {
            return Err(Error::UnsupportedShape(format!(
                "operator produces a comb away from the origin at {}",
                d.point()
            )));
        }
        if let Some(comb) = image.comb_at(T::zero()) {
            for (j, &c) in comb.coeffs().iter().enumerate() {
                if rows.len() <= j {
                    rows.resize(j + 1, [real(T::zero()); 4]);
                }
                rows[j][col] = c;
            }
        }
    }
    Ok(BoundaryForm { rows })
}

/// `H psi - E psi`.
pub fn eigen_residual<T: Real>(
    op: &OperatorExpr<T>,
    psi: &WaveFunction<T>,
    energy: EnergyValue<T>,
) -> Result<Distribution<T>> {
    Ok(&op.apply(psi.dist())? - &psi.dist().scale(real(energy.e)))
}

/// True iff `H psi - E psi` vanishes within `tol`: every comb coefficient
/// and every piece sample (on bounded intervals and the tail windows).
pub fn is_eigenfunction<T: Real>(
    op: &OperatorExpr<T>,
    psi: &WaveFunction<T>,
    energy: EnergyValue<T>,
    tol: T,
) -> Result<bool> {
    Ok(eigen_residual(op, psi, energy)?.is_zero_within(tol))
}

/// `<H phi, psi> - <phi, H psi>`.
pub fn symmetry_defect<T: Real>(
    op: &OperatorExpr<T>,
    phi: &WaveFunction<T>,
    psi: &WaveFunction<T>,
    window: T,
    tol: T,
) -> Result<Scalar<T>> {
    let image = |w: &WaveFunction<T>| -> Result<WaveFunction<T>> {
        WaveFunction::new(op.apply(w.dist())?).map_err(|_| Error::NotInL2)
    };
    let (h_phi, h_psi) = (image(phi)?, image(psi)?);
    Ok(inner_product(&h_phi, psi, window, tol)? - inner_product(phi, &h_psi, window, tol)?)
}
