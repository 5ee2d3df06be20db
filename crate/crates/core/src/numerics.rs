//! Root polishing, finite differences, and singular values.

use crate::scalar::Real;

/// Brent's method on a bracketing interval: `f(a)` and `f(b)` must have
/// opposite signs. Returns the abscissa of the sign change to machine
/// precision.
pub fn brent<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, max_iter: usize) -> T {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut mflag = true;
    let eps = T::epsilon() * T::of(4.0);
    for _ in 0..max_iter {
        if fb == T::zero() || (b - a).abs() <= eps * (b.abs() + T::one()) {
            return b;
        }
        let mut s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        let lo = (T::of(3.0) * a + b) * T::of(0.25);
        let between = (s > lo.min(b)) && (s < lo.max(b));
        let half = T::half();
        if !between
            || (mflag && (s - b).abs() >= (b - c).abs() * half)
            || (!mflag && (s - b).abs() >= d.abs() * half)
        {
            s = (a + b) * half;
            mflag = true;
        } else {
            mflag = false;
        }
        let fs = f(s);
        d = c - b;
        c = b;
        fc = fb;
        if fa * fs < T::zero() {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
    }
    b
}

/// Central-difference Jacobian of `f` at `x`; rows index outputs.
pub fn central_jacobian<T: Real, F: Fn(&[T]) -> Vec<T>>(f: F, x: &[T], h: T) -> Vec<Vec<T>> {
    let n = x.len();
    let m = f(x).len();
    let mut jac = vec![vec![T::zero(); n]; m];
    let mut xp = x.to_vec();
    let mut xm = x.to_vec();
    for j in 0..n {
        xp[j] = x[j] + h;
        xm[j] = x[j] - h;
        let fp = f(&xp);
        let fm = f(&xm);
        for i in 0..m {
            jac[i][j] = (fp[i] - fm[i]) / (T::two() * h);
        }
        xp[j] = x[j];
        xm[j] = x[j];
    }
    jac
}

/// Singular values of a dense matrix (rows of equal length), descending.
///
/// One-sided Jacobi orthogonalization on the columns of the taller
/// orientation; adequate for the small Jacobians this crate analyzes.
pub fn singular_values<T: Real>(a: &[Vec<T>]) -> Vec<T> {
    let m = a.len();
    if m == 0 {
        return vec![];
    }
    let n = a[0].len();
    // work on columns of the taller orientation
    let (rows, cols) = if m >= n { (m, n) } else { (n, m) };
    let mut w = vec![vec![T::zero(); cols]; rows];
    for i in 0..m {
        for j in 0..n {
            if m >= n {
                w[i][j] = a[i][j];
            } else {
                w[j][i] = a[i][j];
            }
        }
    }
    let eps = T::epsilon() * T::of(64.0);
    for _sweep in 0..60 {
        let mut off = T::zero();
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut app = T::zero();
                let mut aqq = T::zero();
                let mut apq = T::zero();
                for r in &w {
                    app = app + r[p] * r[p];
                    aqq = aqq + r[q] * r[q];
                    apq = apq + r[p] * r[q];
                }
                if apq.abs() <= eps * (app * aqq).sqrt() + T::min_positive_value() {
                    continue;
                }
                off = off.max(apq.abs());
                let tau = (aqq - app) / (T::two() * apq);
                let t = tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for r in w.iter_mut() {
                    let (vp, vq) = (r[p], r[q]);
                    r[p] = c * vp - s * vq;
                    r[q] = s * vp + c * vq;
                }
            }
        }
        if off == T::zero() {
            break;
        }
    }
    let mut sv: Vec<T> = (0..cols)
        .map(|j| w.iter().map(|r| r[j] * r[j]).fold(T::zero(), |a, b| a + b).sqrt())
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

/// Rank under a relative singular-value threshold.
pub fn rank<T: Real>(sv: &[T], rel_threshold: T) -> usize {
    match sv.first() {
        None => 0,
        Some(&s0) => sv.iter().filter(|&&s| s > rel_threshold * s0).count(),
    }
}
