//! Taylor-series continuation for `y'' = (q0 + q1 z + q2 z^2) y` along a
//! straight segment in the complex plane.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Quadratic {
    pub q0: Complex64,
    pub q1: Complex64,
    pub q2: Complex64,
}

impl Quadratic {
    fn at(&self, z: Complex64) -> Complex64 {
        self.q0 + z * (self.q1 + z * self.q2)
    }

    fn slope(&self, z: Complex64) -> Complex64 {
        self.q1 + 2.0 * self.q2 * z
    }
}

fn step(q: &Quadratic, z: Complex64, y: Complex64, dy: Complex64, h: Complex64) -> (Complex64, Complex64) {
    let a0 = q.at(z) * h * h;
    let a1 = q.slope(z) * h * h * h;
    let a2 = q.q2 * h * h * h * h;
    // scaled coefficients b_n = c_n h^n
    let mut b = [Complex64::new(0.0, 0.0); 3];
    b[0] = y;
    b[1] = dy * h;
    let mut sum = b[0] + b[1];
    let mut dsum = b[1];
    let mut prev2 = Complex64::new(0.0, 0.0);
    let (mut bm2, mut bm1, mut bn) = (prev2, b[0], b[1]);
    let mut small = 0;
    for n in 1..400usize {
        // b_{n+1} from b_{n-1}, b_{n-2}, b_{n-3}
        let m = n - 1;
        let next = (a0 * bm1 + a1 * bm2 + a2 * prev2) / (((m + 1) * (m + 2)) as f64);
        prev2 = bm2;
        bm2 = bm1;
        bm1 = bn;
        bn = next;
        sum += next;
        dsum += next * ((n + 1) as f64);
        let scale = sum.norm() + dsum.norm();
        if next.norm() * (n as f64 + 2.0) <= 1e-18 * scale {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    (sum, dsum / h)
}

/// Continue `(y, y')` from `z0` to `z1`.
pub(crate) fn continue_solution(
    q: &Quadratic,
    z0: Complex64,
    y0: Complex64,
    dy0: Complex64,
    z1: Complex64,
) -> (Complex64, Complex64) {
    let delta = z1 - z0;
    let len = delta.norm();
    if len == 0.0 {
        return (y0, dy0);
    }
    let growth = q.at(z0).norm().max(q.at(z1).norm()).sqrt();
    let hmax = (1.5 / growth.max(1e-12)).min(0.5);
    let n = (len / hmax).ceil().max(1.0) as usize;
    let h = delta / n as f64;
    let (mut y, mut dy) = (y0, dy0);
    for i in 0..n {
        let z = z0 + h * i as f64;
        let (ny, ndy) = step(q, z, y, dy, h);
        y = ny;
        dy = ndy;
    }
    (y, dy)
}
