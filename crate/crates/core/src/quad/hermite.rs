//! Gauss-Hermite rules for integrals of the form `integral exp(-x^2) f(x) dx`.
//!
//! Nodes are computed Golub-Welsch style: eigenvalues of the symmetric
//! tridiagonal Jacobi matrix (implicit-shift QL, eigenvalues only), polished
//! by one or two Newton steps on the orthonormal three-term recurrence.
//! Weights come from `w_i = 1 / (n p_{n-1}(x_i)^2)`; the recurrence is
//! rescaled on the fly so rules with thousands of nodes stay inside the
//! floating-point range, and weights are carried both linearly and as natural
//! logs for log-domain consumers.

use std::collections::BTreeMap;

use crate::scalar::{flt, uint, Scalar};

/// One Gauss-Hermite rule of fixed order.
#[derive(Debug, Clone)]
pub struct GaussHermiteRule<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
    ln_weights: Vec<T>,
}

/// Rescale threshold for the orthonormal recurrence; far below the overflow
/// ceiling of `f32` so the same constant serves every scalar type.
const RESCALE_LIMIT: f64 = 1e18;

impl<T: Scalar> GaussHermiteRule<T> {
    /// Builds the rule with `n >= 1` nodes.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Hermite rule needs at least one node");
        // Jacobi matrix of the orthonormal Hermite recurrence: zero diagonal,
        // off-diagonal beta_k = sqrt(k / 2).
        let mut diag = vec![T::zero(); n];
        let mut off = vec![T::zero(); n];
        for k in 1..n {
            off[k - 1] = (uint::<T>(k) / flt::<T>(2.0)).sqrt();
        }
        tridiagonal_eigenvalues(&mut diag, &mut off);
        diag.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));

        // Symmetrize the +/- pairs, then polish each positive root.
        let half = n / 2;
        let two = flt::<T>(2.0);
        for i in 0..half {
            let r = (diag[n - 1 - i] - diag[i]) / two;
            diag[n - 1 - i] = r;
            diag[i] = -r;
        }
        if n % 2 == 1 {
            diag[half] = T::zero();
        }

        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let mut ln_weights = vec![T::zero(); n];
        for i in 0..half {
            let (root, ln_w) = polish(n, diag[n - 1 - i]);
            nodes[n - 1 - i] = root;
            ln_weights[n - 1 - i] = ln_w;
            weights[n - 1 - i] = ln_w.exp();
            nodes[i] = -root;
            ln_weights[i] = ln_w;
            weights[i] = ln_w.exp();
        }
        if n % 2 == 1 {
            let (_, ln_w) = polish(n, T::zero());
            nodes[half] = T::zero();
            ln_weights[half] = ln_w;
            weights[half] = ln_w.exp();
        }
        Self {
            nodes,
            weights,
            ln_weights,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn ln_weights(&self) -> &[T] {
        &self.ln_weights
    }

    /// Applies the rule to `f`: approximates `integral exp(-x^2) f(x) dx`.
    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Implicit-shift QL iteration for the eigenvalues of a symmetric
/// tridiagonal matrix, eigenvectors skipped. `diag` is overwritten with the
/// eigenvalues; `off` holds the subdiagonal in its first `n - 1` slots and is
/// destroyed.
fn tridiagonal_eigenvalues<T: Scalar>(diag: &mut [T], off: &mut [T]) {
    let n = diag.len();
    if n <= 1 {
        return;
    }
    off[n - 1] = T::zero();
    let two = flt::<T>(2.0);
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 64, "QL iteration failed to converge");
            let mut g = (diag[l + 1] - diag[l]) / (two * off[l]);
            let mut r = g.hypot(T::one());
            let sign_r = if g >= T::zero() { r } else { -r };
            g = diag[m] - diag[l] + off[l] / (g + sign_r);
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == T::zero() {
                    diag[i + 1] -= p;
                    off[m] = T::zero();
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + two * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if r == T::zero() && i > l {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = T::zero();
        }
    }
}

/// One to three Newton steps from an eigenvalue estimate, then the weight
/// `w = 1 / (n p_{n-1}(x)^2)` in log form.
fn polish<T: Scalar>(n: usize, mut z: T) -> (T, T) {
    let eps = T::epsilon();
    let ln_rescale = flt::<T>(RESCALE_LIMIT).ln();
    for _ in 0..3 {
        let (p_n, p_prev, _) = orthonormal_pair(n, z);
        // p'_n = sqrt(2n) p_{n-1}; the shared rescale factor cancels in the ratio.
        let deriv = (uint::<T>(2 * n)).sqrt() * p_prev;
        if deriv == T::zero() {
            break;
        }
        let step = p_n / deriv;
        z -= step;
        if step.abs() <= eps * (T::one() + z.abs()) {
            break;
        }
    }
    let (_, p_prev, scale_count) = orthonormal_pair(n, z);
    let ln_p_prev = p_prev.abs().ln() + uint::<T>(scale_count) * ln_rescale;
    let ln_w = -(uint::<T>(n)).ln() - flt::<T>(2.0) * ln_p_prev;
    (z, ln_w)
}

/// Evaluates the orthonormal Hermite pair `(p_n(z), p_{n-1}(z))` with
/// on-the-fly rescaling; the third component counts how many times both
/// values were divided by [`RESCALE_LIMIT`].
fn orthonormal_pair<T: Scalar>(n: usize, z: T) -> (T, T, usize) {
    let limit: T = flt(RESCALE_LIMIT);
    // p_0 = pi^{-1/4}
    let mut p1: T = flt(std::f64::consts::PI.powf(-0.25));
    let mut p2 = T::zero();
    let mut scale_count = 0usize;
    for j in 0..n {
        let jf: T = uint(j);
        let j1: T = uint(j + 1);
        let p3 = p2;
        p2 = p1;
        p1 = z * (flt::<T>(2.0) / j1).sqrt() * p2 - (jf / j1).sqrt() * p3;
        if p1.abs() > limit {
            p1 /= limit;
            p2 /= limit;
            scale_count += 1;
        }
    }
    (p1, p2, scale_count)
}

/// Cache of Gauss-Hermite rules keyed by node count.
///
/// Rule construction is the expensive part of the weight-function quadrature;
/// call trees that evaluate many integrals share one bank so each node count
/// is computed once. Entries are immutable once built.
#[derive(Debug, Default)]
pub struct HermiteBank<T> {
    rules: BTreeMap<usize, GaussHermiteRule<T>>,
}

impl<T: Scalar> HermiteBank<T> {
    pub fn new() -> Self {
        Self {
            rules: BTreeMap::new(),
        }
    }

    /// Returns the rule with `n` nodes, building it on first use.
    pub fn rule(&mut self, n: usize) -> &GaussHermiteRule<T> {
        self.rules
            .entry(n)
            .or_insert_with(|| GaussHermiteRule::new(n))
    }
}
