//! Unit quaternions as elements of SU(2).

use serde::{Deserialize, Serialize};
use std::ops::Mul;

/// `w + x·i + y·j + z·k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const ONE: Quat = Quat {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// `cos θ + sin θ·(ux i + uy j + uz k)` for a unit vector `u`.
    pub fn from_angle_axis(theta: f64, u: [f64; 3]) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s * u[0], s * u[1], s * u[2])
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// `‖q − 1‖`.
    pub fn distance_to_one(&self) -> f64 {
        let d = Self::new(self.w - 1.0, self.x, self.y, self.z);
        d.norm()
    }

    /// Conjugation by `j`, which sends `i ↦ −i` and so `(θ, η) ↦ (−θ, −η)`.
    pub fn j_conjugate(&self) -> Self {
        Self::new(self.w, -self.x, self.y, -self.z)
    }

    /// `ρ(w)` for a word in signed 1-based generator indices.
    pub fn eval_word(images: &[Quat], word: &[i32]) -> Quat {
        word.iter().fold(Quat::ONE, |acc, &g| {
            let q = images[g.unsigned_abs() as usize - 1];
            acc * if g > 0 { q } else { q.conj() }
        })
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        Quat::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let i = Quat::new(0.0, 1.0, 0.0, 0.0);
        let j = Quat::new(0.0, 0.0, 1.0, 0.0);
        let k = Quat::new(0.0, 0.0, 0.0, 1.0);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, Quat::new(-1.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn j_conjugation_is_an_automorphism() {
        let a = Quat::from_angle_axis(0.7, [0.6, 0.8, 0.0]);
        let b = Quat::from_angle_axis(1.3, [0.0, 0.6, 0.8]);
        let lhs = (a * b).j_conjugate();
        let rhs = a.j_conjugate() * b.j_conjugate();
        assert!((lhs.w - rhs.w).abs() + (lhs.x - rhs.x).abs() + (lhs.y - rhs.y).abs() < 1e-15);
    }
}
