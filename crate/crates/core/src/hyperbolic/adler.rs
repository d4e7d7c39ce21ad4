use crate::error::{domain, Result};

/// Sampled solution `θ(t)` of an ODE on a fixed grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub thetas: Vec<f64>,
}

impl Trajectory {
    pub fn final_theta(&self) -> f64 {
        *self.thetas.last().expect("nonempty trajectory")
    }

    /// Linearly interpolated `θ(t)` for `t` inside the grid.
    pub fn theta_at(&self, t: f64) -> Option<f64> {
        let (first, last) = (*self.times.first()?, *self.times.last()?);
        if !(first..=last).contains(&t) {
            return None;
        }
        let i = self.times.partition_point(|&x| x < t);
        if i == 0 {
            return Some(self.thetas[0]);
        }
        let (t0, t1) = (self.times[i - 1], self.times[i]);
        let w = (t - t0) / (t1 - t0);
        Some(self.thetas[i - 1] + w * (self.thetas[i] - self.thetas[i - 1]))
    }

    /// `(θ(t1) − θ(t0))/(t1 − t0)`.
    pub fn mean_frequency(&self, t0: f64, t1: f64) -> Option<f64> {
        Some((self.theta_at(t1)? - self.theta_at(t0)?) / (t1 - t0))
    }
}

/// Integrates `dθ/dt = ω_B − K·sin θ` with classical fourth-order Runge–Kutta
/// at fixed step `dt`; the last step is shortened to land on `t_end`.
pub fn adler_solve(k: f64, omega_b: f64, theta0: f64, t_end: f64, dt: f64) -> Result<Trajectory> {
    if !(dt > 0.0 && t_end > 0.0) {
        return Err(domain("adler_solve needs positive dt and t_end"));
    }
    if dt > t_end / 100.0 {
        return Err(domain("adler_solve needs dt <= t_end / 100"));
    }
    if !(k >= 0.0 && k.is_finite() && omega_b.is_finite() && theta0.is_finite()) {
        return Err(domain("adler_solve needs finite K >= 0, omega_B and theta0"));
    }
    let f = |theta: f64| omega_b - k * theta.sin();
    let full = (t_end / dt * (1.0 - 1e-12)).floor() as usize;
    let mut times = Vec::with_capacity(full + 2);
    let mut thetas = Vec::with_capacity(full + 2);
    let mut theta = theta0;
    times.push(0.0);
    thetas.push(theta);
    let mut t = 0.0;
    for i in 1..=full + 1 {
        let next = if i <= full { i as f64 * dt } else { t_end };
        let h = next - t;
        if h <= 0.0 {
            break;
        }
        let k1 = f(theta);
        let k2 = f(theta + 0.5 * h * k1);
        let k3 = f(theta + 0.5 * h * k2);
        let k4 = f(theta + h * k3);
        theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = next;
        times.push(t);
        thetas.push(theta);
    }
    Ok(Trajectory { times, thetas })
}
