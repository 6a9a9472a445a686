use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::numeric::quad::integrate_split;
use crate::scalar::{close_points, Real, Scalar};

/// Default half-width of the window for inner products.
pub const DEFAULT_WINDOW: f64 = 40.0;
/// Largest integrand magnitude tolerated at the window ends.
pub const DECAY_LIMIT: f64 = 1e-12;

/// A comb-free distribution, `psi = theta(-x) psi_- + theta(x) psi_+`
/// when its only breakpoint is the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveFunction<T: Real> {
    dist: Distribution<T>,
}

/// One-sided Taylor data of a wave function at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryData<T: Real> {
    /// `psi_-(0), psi_-'(0), ...`
    pub left: Vec<Scalar<T>>,
    /// `psi_+(0), psi_+'(0), ...`
    pub right: Vec<Scalar<T>>,
}

impl<T: Real> WaveFunction<T> {
    pub fn new(dist: Distribution<T>) -> Result<Self> {
        if dist.is_delta_free() {
            Ok(WaveFunction { dist })
        } else {
            Err(Error::NotAWaveFunction)
        }
    }

    pub fn dist(&self) -> &Distribution<T> {
        &self.dist
    }

    pub fn into_dist(self) -> Distribution<T> {
        self.dist
    }

    /// Left and right Taylor data at the origin up to `order`.
    ///
    /// Fails with `UnsupportedShape` if there is a breakpoint away from the
    /// origin.
    pub fn boundary_data(&self, order: usize) -> Result<BoundaryData<T>> {
        let tol = T::eps_zero();
        let bps = self.dist.breakpoints();
        if let Some(w) = bps.iter().find(|&&w| !close_points(w, T::zero(), tol)) {
            return Err(Error::UnsupportedShape(format!(
                "wave functions may only break at the origin, found a breakpoint at {w}"
            )));
        }
        let smooth = self.dist.smooth();
        Ok(BoundaryData {
            left: smooth.piece_left_of(T::zero()).taylor_data(T::zero(), order)?,
            right: smooth.piece_right_of(T::zero()).taylor_data(T::zero(), order)?,
        })
    }
}

impl<T: Real> TryFrom<Distribution<T>> for WaveFunction<T> {
    type Error = Error;

    fn try_from(d: Distribution<T>) -> Result<Self> {
        WaveFunction::new(d)
    }
}

/// `E = k^2` in units with `hbar = 1`, `2m = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyValue<T: Real> {
    pub e: T,
    pub k: T,
}

impl<T: Real> EnergyValue<T> {
    pub fn new(e: T) -> Result<Self> {
        if !(e >= T::zero()) || !e.is_finite() {
            return Err(Error::NegativeEnergy(e.as_f64()));
        }
        Ok(EnergyValue { e, k: e.sqrt() })
    }

    pub fn from_wavenumber(k: T) -> Self {
        EnergyValue { e: k * k, k: k.abs() }
    }
}

/// `<phi, psi> = int conj(phi) psi` over `[-window, window]`.
///
/// The integrand must have decayed below `DECAY_LIMIT` at both ends.
pub fn inner_product<T: Real>(
    phi: &WaveFunction<T>,
    psi: &WaveFunction<T>,
    window: T,
    tol: T,
) -> Result<Scalar<T>> {
    let (f, g) = (phi.dist.smooth(), psi.dist.smooth());
    let integrand = |x: T| Ok(f.piece_at(x).eval(x)?.conj() * g.piece_at(x).eval(x)?);
    let limit = T::lit(DECAY_LIMIT);
    for end in [-window, window] {
        let magnitude = integrand(end)?.norm();
        if !(magnitude <= limit) {
            return Err(Error::DecayCheckFailed {
                at: end.as_f64(),
                magnitude: magnitude.as_f64(),
                limit: DECAY_LIMIT,
            });
        }
    }
    let mut cuts: Vec<T> = f.breakpoints().iter().chain(g.breakpoints()).copied().collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let q = integrate_split(integrand, -window, window, &cuts, tol)?;
    Ok(q.value)
}
