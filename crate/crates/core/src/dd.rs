//! Minimal double-double arithmetic (~106-bit significand) used for the
//! extended-precision re-evaluation of catalog constants and remainder-set
//! vertices. Not a general-purpose type; only what the catalog needs.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let lo = s.lo + self.lo + other.lo;
        let r = two_sum(s.hi, lo);
        Dd { hi: r.hi, lo: r.lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + self.hi * other.lo + self.lo * other.hi;
        let r = two_sum(p.hi, lo);
        Dd { hi: r.hi, lo: r.lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from(q1)));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul(Dd::from(q2)));
        let q3 = r2.hi / other.hi;
        Dd::from(q1).add(Dd::from(q2)).add(Dd::from(q3))
    }

    /// One Newton step on top of the f64 square root is enough to saturate
    /// double-double accuracy.
    pub fn sqrt(self) -> Dd {
        let x0 = self.hi.sqrt();
        if x0 == 0.0 {
            return Dd::from(0.0);
        }
        let x = Dd::from(x0);
        let err = self.sub(x.mul(x)).div(Dd::from(2.0 * x0));
        x.add(err)
    }
}

/// phi = (1 + sqrt 5) / 2 in double-double.
pub(crate) fn phi_dd() -> Dd {
    Dd::from(5.0)
        .sqrt()
        .add(Dd::from(1.0))
        .div(Dd::from(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_and_phi() {
        let two = Dd::from(2.0).sqrt();
        let resid = two.mul(two).sub(Dd::from(2.0));
        assert!(resid.to_f64().abs() < 1e-30);

        // phi^2 = phi + 1 to double-double accuracy.
        let p = phi_dd();
        let resid = p.mul(p).sub(p).sub(Dd::from(1.0));
        assert!(resid.to_f64().abs() < 1e-30);
    }

    #[test]
    fn division_round_trip() {
        let a = Dd::from(1.0).div(Dd::from(3.0));
        let r = a.mul(Dd::from(3.0)).sub(Dd::from(1.0));
        assert!(r.to_f64().abs() < 1e-31);
    }
}
