//! Independent oracles for the acceptance suite. Everything here is
//! self-contained: root finding, Bessel series, the finite-difference
//! discretization, and its eigensolver share no code with the library
//! paths under test.

/// Second eigenvalue of the clamped second-order problem on the unit
/// interval: x^2 at the first root of tan(x/2) = x/2. The first is 4 pi^2.
pub fn interval_lambda2() -> f64 {
    // g(t) = sin t - t cos t has its first root beyond pi at t = x/2
    let g = |t: f64| t.sin() - t * t.cos();
    let (mut a, mut b) = (std::f64::consts::PI, 1.5 * std::f64::consts::PI);
    assert!(g(a) > 0.0 && g(b) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if g(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let x = a + b; // 2t
    x * x
}

fn bessel_j0(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= -q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

fn bessel_j1(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    for k in 1..60 {
        term *= -q / ((k * (k + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// First positive zero of J_1, via the series and Newton with
/// J_1'(x) = J_0(x) - J_1(x)/x.
pub fn j1_first_zero() -> f64 {
    let mut x = 3.8_f64;
    for _ in 0..50 {
        let f = bessel_j1(x);
        let df = bessel_j0(x) - f / x;
        let step = f / df;
        x -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    x
}

/// Dense symmetric matrix helpers local to the oracle.
struct Dense {
    n: usize,
    a: Vec<f64>,
}

impl Dense {
    fn zeros(n: usize) -> Self {
        Self { n, a: vec![0.0; n * n] }
    }

    fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    fn add(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] += v;
    }

    fn matmul(&self, other: &Dense) -> Dense {
        let n = self.n;
        let mut out = Dense::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        out
    }

    fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// In-place lower Cholesky; panics if a pivot fails (the oracle
    /// matrices are positive definite by construction).
    fn cholesky(&self) -> Dense {
        let n = self.n;
        let mut l = Dense::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l.get(i, k) * l.get(j, k);
                }
                if i == j {
                    assert!(s > 0.0, "oracle matrix lost positive definiteness");
                    l.a[i * n + j] = s.sqrt();
                } else {
                    l.a[i * n + j] = s / l.get(j, j);
                }
            }
        }
        l
    }

    fn solve_cholesky(&self, l: &Dense, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= l.get(i, k) * y[k];
            }
            y[i] /= l.get(i, i);
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                y[i] -= l.get(k, i) * y[k];
            }
            y[i] /= l.get(i, i);
        }
        y
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smallest `count` eigenvalues of A u = lambda B u by deflated inverse
/// power iteration (A, B positive definite).
fn smallest_generalized(a: &Dense, b: &Dense, count: usize) -> Vec<f64> {
    let n = a.n;
    let l = a.cholesky();
    let mut eigvecs: Vec<Vec<f64>> = Vec::new();
    let mut eigvals = Vec::new();
    let mut seed = 0x2545f4914f6cdd1d_u64;
    for _ in 0..count {
        // deterministic pseudo-random start
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((seed >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
            })
            .collect();
        let mut old_rho = f64::INFINITY;
        for _ in 0..2000 {
            let bv = b.matvec(&v);
            let mut y = a.solve_cholesky(&l, &bv);
            // B-orthogonalize against converged eigenvectors
            for u in &eigvecs {
                let c = dot(&b.matvec(u), &y);
                for (yi, ui) in y.iter_mut().zip(u) {
                    *yi -= c * ui;
                }
            }
            let norm = dot(&b.matvec(&y), &y).sqrt();
            for yi in y.iter_mut() {
                *yi /= norm;
            }
            let rho = dot(&a.matvec(&y), &y) / dot(&b.matvec(&y), &y);
            v = y;
            if (rho - old_rho).abs() <= 1e-13 * rho.abs() {
                old_rho = rho;
                break;
            }
            old_rho = rho;
        }
        eigvals.push(old_rho);
        eigvecs.push(v);
    }
    eigvals
}

/// Clamped buckling eigenvalues of the unit square by the 13-point
/// finite-difference biharmonic with mirror ghosts, reduced by the two
/// reflection symmetries. `m` interior points per axis, m even so the
/// mirror line falls between grid points. Returns the smallest `count`
/// eigenvalues at this resolution.
pub fn fd_square_buckling(m: usize, count: usize) -> Vec<f64> {
    assert!(m % 2 == 0);
    let half = m / 2;
    let n = half * half;
    let h = 1.0 / ((m + 1) as f64);
    let mut all = Vec::new();
    for (sx, sy) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        // reduced 5-point Laplacian (dimensionless); folding the neighbor
        // across the mirror line adds -s to the diagonal
        let mut lap = Dense::zeros(n);
        let idx = |i: usize, j: usize| (i - 1) * half + (j - 1);
        for i in 1..=half {
            for j in 1..=half {
                let p = idx(i, j);
                lap.add(p, p, 4.0);
                if i > 1 {
                    lap.add(p, idx(i - 1, j), -1.0);
                }
                if i < half {
                    lap.add(p, idx(i + 1, j), -1.0);
                } else {
                    lap.add(p, p, -sx);
                }
                if j > 1 {
                    lap.add(p, idx(i, j - 1), -1.0);
                }
                if j < half {
                    lap.add(p, idx(i, j + 1), -1.0);
                } else {
                    lap.add(p, p, -sy);
                }
            }
        }
        // biharmonic: Laplacian squared plus the clamped mirror-ghost
        // correction next to the outer boundary
        let mut bih = lap.matmul(&lap);
        for i in 1..=half {
            for j in 1..=half {
                let p = idx(i, j);
                let mut edges = 0.0;
                if i == 1 {
                    edges += 1.0;
                }
                if j == 1 {
                    edges += 1.0;
                }
                bih.add(p, p, edges);
            }
        }
        let h2 = h * h;
        for v in bih.a.iter_mut() {
            *v /= h2 * h2;
        }
        for v in lap.a.iter_mut() {
            *v /= h2;
        }
        all.extend(smallest_generalized(&bih, &lap, count.min(n)));
    }
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all.truncate(count);
    all
}

/// One-step Richardson extrapolation for an O(h) method; the mirror ghost
/// closure of the clamped boundary costs one order near the wall, so the
/// eigenvalue error is first order in h.
pub fn richardson(coarse: f64, fine: f64, h_coarse: f64, h_fine: f64) -> f64 {
    let r = h_coarse / h_fine;
    fine + (fine - coarse) / (r - 1.0)
}
