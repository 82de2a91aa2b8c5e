//! Bivariate total positivity of order 2.
//!
//! A nonnegative kernel sampled on a pair of grids is TP2 when every 2x2
//! minor taken with increasing rows and columns is nonnegative. This module
//! provides the minor scan, the log-supermodularity criterion for strictly
//! positive kernels, discrete and grid-sampled log-concavity checks, and the
//! constructions that generate new TP2 kernels from old ones: composition
//! over a shared middle grid, reflection of a symmetric density onto the
//! nonnegative quadrant, and Gaussian smoothing.

use ndarray::Array2;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{CheckReport, ViolationTracker, Witness};
use crate::scalar::Scalar;
use crate::stats::{ln_gamma, trapezoid_weights};

/// A nonnegative kernel `p(x, y)` sampled on explicit coordinate grids,
/// optionally restricted to a support region.
///
/// The support mask, when present, must satisfy the rectangle-completion
/// property: whenever the off-diagonal corners `(x1, y2)` and `(x2, y1)` of
/// an increasing rectangle are in the support, so are `(x1, y1)` and
/// `(x2, y2)`. Under that property the verdict of the minor scan on the
/// masked kernel and on its zero extension coincide, so checks only ever
/// look at fully supported quadruples.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelGrid<T: Scalar> {
    x_grid: Vec<T>,
    y_grid: Vec<T>,
    values: Array2<T>,
    mask: Option<Array2<bool>>,
}

/// Flat JSON form of [`KernelGrid`]: values in row-major order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KernelGridDoc<T> {
    pub x_grid: Vec<T>,
    pub y_grid: Vec<T>,
    pub values: Vec<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask: Option<Vec<bool>>,
}

fn check_strictly_increasing<T: Scalar>(grid: &[T], name: &str) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::invalid(format!("{name} needs at least 2 points")));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::invalid(format!("{name} must be strictly increasing")));
    }
    Ok(())
}

impl<T: Scalar> KernelGrid<T> {
    pub fn new(x_grid: Vec<T>, y_grid: Vec<T>, values: Array2<T>) -> Result<Self> {
        Self::build(x_grid, y_grid, values, None)
    }

    pub fn with_mask(
        x_grid: Vec<T>,
        y_grid: Vec<T>,
        values: Array2<T>,
        mask: Array2<bool>,
    ) -> Result<Self> {
        Self::build(x_grid, y_grid, values, Some(mask))
    }

    fn build(
        x_grid: Vec<T>,
        y_grid: Vec<T>,
        values: Array2<T>,
        mask: Option<Array2<bool>>,
    ) -> Result<Self> {
        check_strictly_increasing(&x_grid, "x_grid")?;
        check_strictly_increasing(&y_grid, "y_grid")?;
        if values.dim() != (x_grid.len(), y_grid.len()) {
            return Err(Error::invalid(format!(
                "values shape {:?} does not match grids ({}, {})",
                values.dim(),
                x_grid.len(),
                y_grid.len()
            )));
        }
        if values.iter().any(|v| !(*v >= T::zero()) || !v.is_finite()) {
            return Err(Error::invalid("kernel values must be finite and nonnegative"));
        }
        if let Some(mask) = &mask {
            if mask.dim() != values.dim() {
                return Err(Error::invalid("mask shape does not match values"));
            }
            if !mask.iter().any(|&m| m) {
                return Err(Error::invalid("support mask is empty"));
            }
            for ((i, j), v) in values.indexed_iter() {
                if !mask[(i, j)] && *v != T::zero() {
                    return Err(Error::invalid(format!(
                        "value at ({i}, {j}) is outside the support mask but nonzero"
                    )));
                }
            }
            validate_mask_property(mask)?;
        }
        Ok(KernelGrid {
            x_grid,
            y_grid,
            values,
            mask,
        })
    }

    pub fn from_flat(x_grid: Vec<T>, y_grid: Vec<T>, flat: Vec<T>) -> Result<Self> {
        let shape = (x_grid.len(), y_grid.len());
        let values = Array2::from_shape_vec(shape, flat)
            .map_err(|e| Error::invalid(format!("flat values do not fill the grid: {e}")))?;
        Self::new(x_grid, y_grid, values)
    }

    pub fn x_grid(&self) -> &[T] {
        &self.x_grid
    }

    pub fn y_grid(&self) -> &[T] {
        &self.y_grid
    }

    pub fn values(&self) -> &Array2<T> {
        &self.values
    }

    pub fn mask(&self) -> Option<&Array2<bool>> {
        self.mask.as_ref()
    }

    pub fn supported(&self, i: usize, j: usize) -> bool {
        self.mask.as_ref().map_or(true, |m| m[(i, j)])
    }

    /// Drops the mask, keeping the zeros it imposed (the zero extension).
    pub fn zero_extended(&self) -> Self {
        KernelGrid {
            x_grid: self.x_grid.clone(),
            y_grid: self.y_grid.clone(),
            values: self.values.clone(),
            mask: None,
        }
    }

    pub fn to_doc(&self) -> KernelGridDoc<T> {
        KernelGridDoc {
            x_grid: self.x_grid.clone(),
            y_grid: self.y_grid.clone(),
            values: self.values.iter().copied().collect(),
            mask: self.mask.as_ref().map(|m| m.iter().copied().collect()),
        }
    }

    pub fn from_doc(doc: KernelGridDoc<T>) -> Result<Self> {
        let shape = (doc.x_grid.len(), doc.y_grid.len());
        let values = Array2::from_shape_vec(shape, doc.values)
            .map_err(|e| Error::invalid(format!("values do not fill the grid: {e}")))?;
        let mask = match doc.mask {
            None => None,
            Some(flat) => Some(
                Array2::from_shape_vec(shape, flat)
                    .map_err(|e| Error::invalid(format!("mask does not fill the grid: {e}")))?,
            ),
        };
        Self::build(doc.x_grid, doc.y_grid, values, mask)
    }
}

/// Rectangle-completion property of a support region: for `i1 < i2`,
/// `j1 < j2`, supported `(i1, j2)` and `(i2, j1)` force supported `(i1, j1)`
/// and `(i2, j2)`.
fn validate_mask_property(mask: &Array2<bool>) -> Result<()> {
    let (nx, ny) = mask.dim();
    for i1 in 0..nx {
        for i2 in i1 + 1..nx {
            for j1 in 0..ny {
                for j2 in j1 + 1..ny {
                    if mask[(i1, j2)] && mask[(i2, j1)] && !(mask[(i1, j1)] && mask[(i2, j2)]) {
                        return Err(Error::invalid(format!(
                            "support mask violates rectangle completion at rows ({i1}, {i2}) cols ({j1}, {j2})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Which minors the TP2 scan visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorScan {
    /// All quadruples `i1 < i2`, `j1 < j2`. Required when the kernel has
    /// zeros: the adjacent-minor reduction is only valid for strictly
    /// positive kernels.
    Full,
    /// Adjacent rows/columns only. Refuses kernels that are not strictly
    /// positive.
    Adjacent,
}

/// Normalizer for a 2x2 minor: the product of the two largest participating
/// entries. A minor counts as a violation only relative to this scale.
fn minor_scale<T: Scalar>(a: T, b: T, c: T, d: T) -> T {
    let (mut m1, mut m2) = (T::zero(), T::zero()); // two largest
    for v in [a, b, c, d] {
        if v > m1 {
            m2 = m1;
            m1 = v;
        } else if v > m2 {
            m2 = v;
        }
    }
    m1 * m2
}

/// Checks every increasing 2x2 minor of the kernel for nonnegativity.
///
/// A minor `m` on entries `(p11, p12, p21, p22)` is a violation when
/// `m < -tol * scale` with `scale` the product of the two largest entries,
/// so the verdict is invariant under rescaling the whole kernel. The witness
/// records grid indices `[i1, i2, j1, j2]`, the four raw entries in row-major
/// order and the raw minor.
pub fn check_tp2_grid<T: Scalar>(kernel: &KernelGrid<T>, tol: T) -> Result<CheckReport<T>> {
    check_tp2_grid_with(kernel, tol, MinorScan::Full)
}

pub fn check_tp2_grid_with<T: Scalar>(
    kernel: &KernelGrid<T>,
    tol: T,
    scan: MinorScan,
) -> Result<CheckReport<T>> {
    if !(tol >= T::zero()) {
        return Err(Error::invalid("tolerance must be nonnegative"));
    }
    let (nx, ny) = kernel.values.dim();
    if scan == MinorScan::Adjacent {
        if kernel.mask.is_some() || kernel.values.iter().any(|v| !(*v > T::zero())) {
            return Err(Error::invalid(
                "adjacent-minor scan requires a strictly positive kernel without a mask",
            ));
        }
    }

    let v = &kernel.values;
    let row_pairs: Vec<(usize, usize)> = match scan {
        MinorScan::Full => (0..nx)
            .flat_map(|i1| (i1 + 1..nx).map(move |i2| (i1, i2)))
            .collect(),
        MinorScan::Adjacent => (0..nx - 1).map(|i| (i, i + 1)).collect(),
    };

    let tracker = row_pairs
        .par_iter()
        .fold(ViolationTracker::new, |mut acc, &(i1, i2)| {
            let col_iter: Box<dyn Iterator<Item = (usize, usize)>> = match scan {
                MinorScan::Full => {
                    Box::new((0..ny).flat_map(|j1| (j1 + 1..ny).map(move |j2| (j1, j2))))
                }
                MinorScan::Adjacent => Box::new((0..ny - 1).map(|j| (j, j + 1))),
            };
            for (j1, j2) in col_iter {
                if !(kernel.supported(i1, j1)
                    && kernel.supported(i1, j2)
                    && kernel.supported(i2, j1)
                    && kernel.supported(i2, j2))
                {
                    continue;
                }
                let (p11, p12, p21, p22) = (v[(i1, j1)], v[(i1, j2)], v[(i2, j1)], v[(i2, j2)]);
                let minor = p11 * p22 - p12 * p21;
                let scale = minor_scale(p11, p12, p21, p22);
                let normalized = if scale > T::zero() {
                    minor / scale
                } else {
                    T::zero()
                };
                let rank = (((i1 * nx + i2) as u64 * ny as u64) + j1 as u64) * ny as u64 + j2 as u64;
                acc.record(normalized, rank, || Witness {
                    indices: vec![i1, i2, j1, j2],
                    values: vec![p11, p12, p21, p22],
                    quantity: minor,
                });
            }
            acc
        })
        .reduce(ViolationTracker::new, ViolationTracker::merge);

    if tracker.checks == 0 {
        return Err(Error::invalid("no fully supported quadruple to check"));
    }
    Ok(tracker.into_report(tol))
}

/// Log-supermodularity criterion for strictly positive kernels: the mixed
/// second difference of `log p` over every adjacent cell must be >= -tol.
/// On a smooth kernel this discretizes the mixed second derivative of the
/// log density with the grid steps as increments, and for strictly positive
/// kernels it implies the full minor scan.
pub fn check_supermodular_logdensity<T: Scalar>(
    kernel: &KernelGrid<T>,
    tol: T,
) -> Result<CheckReport<T>> {
    if !(tol >= T::zero()) {
        return Err(Error::invalid("tolerance must be nonnegative"));
    }
    let (nx, ny) = kernel.values.dim();
    for ((i, j), v) in kernel.values.indexed_iter() {
        if kernel.supported(i, j) && !(*v > T::zero()) {
            return Err(Error::domain(format!(
                "log-supermodularity needs strictly positive values inside the support; value at ({i}, {j}) is {v}"
            )));
        }
    }

    let v = &kernel.values;
    let mut tracker = ViolationTracker::new();
    for i in 0..nx - 1 {
        for j in 0..ny - 1 {
            if !(kernel.supported(i, j)
                && kernel.supported(i, j + 1)
                && kernel.supported(i + 1, j)
                && kernel.supported(i + 1, j + 1))
            {
                continue;
            }
            let d2 = v[(i + 1, j + 1)].ln() + v[(i, j)].ln()
                - v[(i + 1, j)].ln()
                - v[(i, j + 1)].ln();
            let rank = (i * ny + j) as u64;
            tracker.record(d2, rank, || Witness {
                indices: vec![i, i + 1, j, j + 1],
                values: vec![v[(i, j)], v[(i, j + 1)], v[(i + 1, j)], v[(i + 1, j + 1)]],
                quantity: d2,
            });
        }
    }
    if tracker.checks == 0 {
        return Err(Error::invalid("no fully supported cell to check"));
    }
    Ok(tracker.into_report(tol))
}

/// Discrete log-concavity: `p(k)^2 >= p(k-1) p(k+1)` at every interior index,
/// relative to the larger of the two products.
pub fn check_log_concave<T: Scalar>(p: &[T], tol: T) -> Result<CheckReport<T>> {
    if p.len() < 3 {
        return Err(Error::invalid("log-concavity needs at least 3 points"));
    }
    if p.iter().any(|v| !(*v >= T::zero()) || !v.is_finite()) {
        return Err(Error::invalid("density values must be finite and nonnegative"));
    }
    if !(tol >= T::zero()) {
        return Err(Error::invalid("tolerance must be nonnegative"));
    }
    let mut tracker = ViolationTracker::new();
    for k in 1..p.len() - 1 {
        let middle = p[k] * p[k];
        let outer = p[k - 1] * p[k + 1];
        let q = middle - outer;
        let scale = middle.max(outer);
        let normalized = if scale > T::zero() { q / scale } else { T::zero() };
        tracker.record(normalized, k as u64, || Witness {
            indices: vec![k - 1, k, k + 1],
            values: vec![p[k - 1], p[k], p[k + 1]],
            quantity: q,
        });
    }
    Ok(tracker.into_report(tol))
}

/// Log-concavity of a function sampled on a uniform grid, decided through
/// total positivity of its displacement kernel `(x, y) -> f(x - y)` with the
/// function zero-extended off its grid.
pub fn check_log_concave_grid<T: Scalar>(
    grid: &[T],
    values: &[T],
    tol: T,
) -> Result<CheckReport<T>> {
    if grid.len() < 3 || values.len() != grid.len() {
        return Err(Error::invalid(
            "grid log-concavity needs >= 3 points and matching value count",
        ));
    }
    let kernel = displacement_kernel(grid, values)?;
    check_tp2_grid(&kernel, tol)
}

/// Builds `(x, y) -> f(x - y)` on `grid x grid` for `f` sampled on the same
/// uniform grid, zero off the grid. Requires the grid offset to be an
/// integer multiple of the step so differences land back on grid points.
pub fn displacement_kernel<T: Scalar>(grid: &[T], values: &[T]) -> Result<KernelGrid<T>> {
    check_strictly_increasing(grid, "grid")?;
    if values.len() != grid.len() {
        return Err(Error::invalid("values length must match the grid"));
    }
    let n = grid.len();
    let h = grid[1] - grid[0];
    let rel = T::of(1e-6);
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > rel * h {
            return Err(Error::invalid("displacement kernel needs a uniform grid"));
        }
    }
    let q = grid[0] / h;
    let offset = q.round();
    if (q - offset).abs() > rel {
        return Err(Error::invalid(
            "grid offset must be an integer multiple of the step",
        ));
    }
    let offset = offset.as_f64() as isize;
    let mut k = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let d = i as isize - j as isize - offset;
            if d >= 0 && (d as usize) < n {
                k[(i, j)] = values[d as usize];
            }
        }
    }
    KernelGrid::new(grid.to_vec(), grid.to_vec(), k)
}

/// Composition `r(x, z) = sum_y p(x, y) q(y, z) w(y)` over the shared middle
/// grid. Composing two TP2 kernels with nonnegative weights yields a TP2
/// kernel.
pub fn compose_kernels<T: Scalar>(
    p: &KernelGrid<T>,
    q: &KernelGrid<T>,
    weights: &[T],
) -> Result<KernelGrid<T>> {
    if p.y_grid != q.x_grid {
        return Err(Error::invalid(
            "middle grids differ: p.y_grid must equal q.x_grid",
        ));
    }
    if weights.len() != p.y_grid.len() {
        return Err(Error::invalid("weights length must match the middle grid"));
    }
    if weights.iter().any(|w| !(*w >= T::zero())) {
        return Err(Error::invalid("weights must be nonnegative"));
    }
    let mut weighted = p.values.clone();
    for (mut col, &w) in weighted.columns_mut().into_iter().zip(weights) {
        col.mapv_inplace(|v| v * w);
    }
    let r = weighted.dot(&q.values);
    KernelGrid::new(p.x_grid.clone(), q.y_grid.clone(), r)
}

/// Reflects a symmetric density onto the nonnegative quadrant:
/// `f*(x, y) = f(x - y) + f(-x - y)` for `x, y >= 0`. For a symmetric Polya
/// frequency density the result is TP2.
pub fn reflect_kernel<T: Scalar>(grid: &[T], values: &[T], tol: T) -> Result<KernelGrid<T>> {
    check_strictly_increasing(grid, "grid")?;
    if values.len() != grid.len() {
        return Err(Error::invalid("values length must match the grid"));
    }
    let n = grid.len();
    if n % 2 == 0 {
        return Err(Error::invalid("symmetric grid must have odd length (contain 0)"));
    }
    let h = grid[1] - grid[0];
    let rel = T::of(1e-6) * h;
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > rel {
            return Err(Error::invalid("reflection needs a uniform grid"));
        }
    }
    let center = (n - 1) / 2;
    if grid[center].abs() > rel {
        return Err(Error::invalid("grid must be symmetric about 0"));
    }
    let scale = values
        .iter()
        .fold(T::zero(), |acc, v| acc.max(v.abs()))
        .max(T::one() * T::epsilon());
    for i in 0..n {
        if (grid[i] + grid[n - 1 - i]).abs() > rel {
            return Err(Error::invalid("grid must be symmetric about 0"));
        }
        if (values[i] - values[n - 1 - i]).abs() > tol.max(T::of(1e-12)) * scale {
            return Err(Error::invalid("density must be symmetric within tolerance"));
        }
    }

    let m = center + 1; // quadrant size, indices 0..m map to grid[center..]
    let quadrant: Vec<T> = grid[center..].to_vec();
    let mut out = Array2::zeros((m, m));
    for a in 0..m {
        for b in 0..m {
            // f(x - y): difference index always lands on the grid
            let direct = values[(center + a) - b];
            // f(-x - y): zero once -x - y falls off the left edge
            let reflected = if a + b <= center {
                values[center - a - b]
            } else {
                T::zero()
            };
            out[(a, b)] = direct + reflected;
        }
    }
    KernelGrid::new(quadrant.clone(), quadrant, out)
}

/// Gaussian smoothing of each column in the first argument, by trapezoidal
/// quadrature over the kernel's own x grid. The discrete window is
/// renormalized to unit mass per output row, so the operation preserves TP2
/// (row scaling) and tends to the identity as the bandwidth shrinks below
/// the grid resolution.
pub fn smooth_kernel<T: Scalar>(kernel: &KernelGrid<T>, bandwidth: T) -> Result<KernelGrid<T>> {
    if !(bandwidth > T::zero()) {
        return Err(Error::invalid("smoothing bandwidth must be positive"));
    }
    let (nx, ny) = kernel.values.dim();
    let w = trapezoid_weights(kernel.x_grid());
    let two = T::of(2.0);
    let mut out = Array2::zeros((nx, ny));
    for i in 0..nx {
        let mut window = Vec::with_capacity(nx);
        let mut mass = T::zero();
        for (k, &y) in kernel.x_grid.iter().enumerate() {
            let u = kernel.x_grid[i] - y;
            let phi = (-(u * u) / (two * bandwidth * bandwidth)).exp() * w[k];
            window.push(phi);
            mass = mass + phi;
        }
        for j in 0..ny {
            let mut acc = T::zero();
            for k in 0..nx {
                acc = acc + window[k] * kernel.values[(k, j)];
            }
            out[(i, j)] = acc / mass;
        }
    }
    KernelGrid::new(kernel.x_grid.clone(), kernel.y_grid.clone(), out)
}

/// Closed-form kernels used as fixtures and simulation references.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum BuiltinKernel<T> {
    /// Brownian transition density with variance `t`.
    Brownian { t: T },
    /// Ornstein-Uhlenbeck transition density with mean reversion `c`
    /// towards level `nu`, horizon `t`.
    OrnsteinUhlenbeck { c: T, nu: T, t: T },
    /// `1 / (1 + (x - y)^2)`, a displacement kernel that is not TP2.
    CauchyCounterexample,
    /// Displacement kernel of a gamma density: `p(x, y) = f_shape(y - x)`
    /// on the support `y > x`.
    GammaIncrement { shape: T },
    /// Displacement kernel of the two-sided geometric density
    /// `f(k) = c e^{-a |k|}` with `c` recomputed so the density sums to 1
    /// over the integers.
    EdreiGeometric { a: T },
}

pub fn builtin_kernel<T: Scalar>(
    spec: &BuiltinKernel<T>,
    x_grid: &[T],
    y_grid: &[T],
) -> Result<KernelGrid<T>> {
    check_strictly_increasing(x_grid, "x_grid")?;
    check_strictly_increasing(y_grid, "y_grid")?;
    let (nx, ny) = (x_grid.len(), y_grid.len());
    let two = T::of(2.0);
    match *spec {
        BuiltinKernel::Brownian { t } => {
            if !(t > T::zero()) {
                return Err(Error::invalid("brownian kernel needs t > 0"));
            }
            let norm = (two * T::PI() * t).sqrt().recip();
            let mut v = Array2::zeros((nx, ny));
            for i in 0..nx {
                for j in 0..ny {
                    let d = x_grid[i] - y_grid[j];
                    v[(i, j)] = norm * (-(d * d) / (two * t)).exp();
                }
            }
            KernelGrid::new(x_grid.to_vec(), y_grid.to_vec(), v)
        }
        BuiltinKernel::OrnsteinUhlenbeck { c, nu, t } => {
            if !(t > T::zero()) || c == T::zero() {
                return Err(Error::invalid("ou kernel needs t > 0 and c != 0"));
            }
            let ct = c * t;
            let sinh = ct.sinh();
            let decay = (-ct).exp();
            let gain = c * ct.exp();
            let norm = (gain / (two * T::PI() * sinh)).sqrt();
            let mut v = Array2::zeros((nx, ny));
            for i in 0..nx {
                for j in 0..ny {
                    let d = y_grid[j] - x_grid[i] * decay - nu * (T::one() - decay);
                    v[(i, j)] = norm * (-gain * d * d / (two * sinh)).exp();
                }
            }
            KernelGrid::new(x_grid.to_vec(), y_grid.to_vec(), v)
        }
        BuiltinKernel::CauchyCounterexample => {
            let mut v = Array2::zeros((nx, ny));
            for i in 0..nx {
                for j in 0..ny {
                    let d = x_grid[i] - y_grid[j];
                    v[(i, j)] = (T::one() + d * d).recip();
                }
            }
            KernelGrid::new(x_grid.to_vec(), y_grid.to_vec(), v)
        }
        BuiltinKernel::GammaIncrement { shape } => {
            if !(shape > T::zero()) {
                return Err(Error::invalid("gamma increment kernel needs shape > 0"));
            }
            let log_norm = ln_gamma(shape);
            let mut v = Array2::zeros((nx, ny));
            let mut mask = Array2::from_elem((nx, ny), false);
            for i in 0..nx {
                for j in 0..ny {
                    let u = y_grid[j] - x_grid[i];
                    if u > T::zero() {
                        mask[(i, j)] = true;
                        v[(i, j)] = ((shape - T::one()) * u.ln() - u - log_norm).exp();
                    }
                }
            }
            if !mask.iter().any(|&m| m) {
                return Err(Error::invalid(
                    "gamma increment kernel has empty support on these grids",
                ));
            }
            KernelGrid::with_mask(x_grid.to_vec(), y_grid.to_vec(), v, mask)
        }
        BuiltinKernel::EdreiGeometric { a } => {
            if !(a > T::zero()) {
                return Err(Error::invalid("two-sided geometric kernel needs a > 0"));
            }
            let c = edrei_normalizer(a);
            let mut v = Array2::zeros((nx, ny));
            for i in 0..nx {
                for j in 0..ny {
                    let d = (x_grid[i] - y_grid[j]).abs();
                    v[(i, j)] = c * (-a * d).exp();
                }
            }
            KernelGrid::new(x_grid.to_vec(), y_grid.to_vec(), v)
        }
    }
}

/// Normalizing constant of `k -> c e^{-a |k|}` over the integers:
/// `c = (1 - e^{-a}) / (1 + e^{-a})`.
pub fn edrei_normalizer<T: Scalar>(a: T) -> T {
    let e = (-a).exp();
    (T::one() - e) / (T::one() + e)
}

/// Two-sided geometric density `f(k) = c e^{-a |k|}` on `{-k_max, .., k_max}`.
pub fn edrei_geometric_density<T: Scalar>(a: T, k_max: usize) -> Result<Vec<T>> {
    if !(a > T::zero()) {
        return Err(Error::invalid("two-sided geometric density needs a > 0"));
    }
    let c = edrei_normalizer(a);
    let n = 2 * k_max + 1;
    Ok((0..n)
        .map(|i| {
            let k = i as isize - k_max as isize;
            c * (-a * T::from_index(k.unsigned_abs())).exp()
        })
        .collect())
}

/// Three-point symmetric density `f(0) = (1 + a^2)/(1 + a)^2`,
/// `f(+-1) = a/(1 + a)^2`, a discrete Polya frequency density.
pub fn three_point_pf_density<T: Scalar>(alpha: T) -> Result<[T; 3]> {
    if !(alpha >= T::zero()) {
        return Err(Error::invalid("three-point density needs alpha >= 0"));
    }
    let denom = (T::one() + alpha) * (T::one() + alpha);
    let side = alpha / denom;
    Ok([side, (T::one() + alpha * alpha) / denom, side])
}

/// Gamma(shape) density evaluated on a grid of strictly positive points.
pub fn gamma_density<T: Scalar>(shape: T, grid: &[T]) -> Result<Vec<T>> {
    if !(shape > T::zero()) {
        return Err(Error::invalid("gamma density needs shape > 0"));
    }
    if grid.iter().any(|x| !(*x > T::zero())) {
        return Err(Error::invalid("gamma density grid must be strictly positive"));
    }
    let log_norm = ln_gamma(shape);
    Ok(grid
        .iter()
        .map(|&x| ((shape - T::one()) * x.ln() - x - log_norm).exp())
        .collect())
}

/// Standard Gaussian density on a grid.
pub fn gaussian_density<T: Scalar>(grid: &[T]) -> Vec<T> {
    let two = T::of(2.0);
    let norm = (two * T::PI()).sqrt().recip();
    grid.iter().map(|&x| norm * (-(x * x) / two).exp()).collect()
}

/// Geometric(1/2) mass function `2^{-k-1}` for `k = 0..n`.
pub fn geometric_half_pmf<T: Scalar>(n: usize) -> Vec<T> {
    let half = T::of(0.5);
    let mut p = Vec::with_capacity(n + 1);
    let mut cur = half;
    for _ in 0..=n {
        p.push(cur);
        cur = cur * half;
    }
    p
}

/// Poisson(lambda) mass function for `k = 0..n`.
pub fn poisson_pmf<T: Scalar>(lambda: T, n: usize) -> Result<Vec<T>> {
    if !(lambda > T::zero()) {
        return Err(Error::invalid("poisson pmf needs lambda > 0"));
    }
    let mut p = Vec::with_capacity(n + 1);
    let mut cur = (-lambda).exp();
    for k in 0..=n {
        p.push(cur);
        cur = cur * lambda / T::from_index(k + 1);
    }
    Ok(p)
}
