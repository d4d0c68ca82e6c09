//! Monodromy data of `p`-fold cyclic coverings of `S³` branched over a link.
//!
//! A covering is fixed by one coefficient `c_j ∈ Z_p − {0}` per component;
//! the meridian of `L_j` goes to `(1 2 ⋯ p)^{c_j}`. The coefficients must
//! generate `Z_p`, otherwise the cover is disconnected.

use std::fmt;

use thiserror::Error;

use crate::braid::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("covering degree {0} must be at least 2")]
    DegreeTooSmall(i64),
    #[error("a covering needs at least one coefficient")]
    NoCoefficients,
    #[error("coefficient of component {component} is 0 mod {p}")]
    ZeroCoefficient { component: usize, p: u64 },
    #[error("coefficients do not generate Z_{p} (gcd {gcd})")]
    NotGenerating { p: u64, gcd: u64 },
    #[error("{u} is not invertible mod {p}")]
    NotAUnit { u: i64, p: u64 },
    #[error("component {index} out of range 1..={mu}")]
    ComponentOutOfRange { index: usize, mu: usize },
    #[error("covering is {0}, not (almost-)strictly-cyclic")]
    NotAlmostStrict(CoveringClass),
    #[error("bridge count must be at least 1")]
    NoBridges,
    #[error("genus {g} is not a multiple of p - 1 = {step}")]
    GenusNotDivisible { g: u64, step: u64 },
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The five classes of cyclic branched coverings, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoveringClass {
    StrictlyCyclic,
    AlmostStrictlyCyclic,
    MeridianCyclic,
    SinglyCyclic,
    MonodromyCyclic,
}

impl CoveringClass {
    pub const ALL: [CoveringClass; 5] = [
        CoveringClass::StrictlyCyclic,
        CoveringClass::AlmostStrictlyCyclic,
        CoveringClass::MeridianCyclic,
        CoveringClass::SinglyCyclic,
        CoveringClass::MonodromyCyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoveringClass::StrictlyCyclic => "strictly-cyclic",
            CoveringClass::AlmostStrictlyCyclic => "almost-strictly-cyclic",
            CoveringClass::MeridianCyclic => "meridian-cyclic",
            CoveringClass::SinglyCyclic => "singly-cyclic",
            CoveringClass::MonodromyCyclic => "monodromy-cyclic",
        }
    }

    /// Whether `spec` satisfies this class's defining predicate.
    pub fn holds_for(self, spec: &CoveringSpec) -> bool {
        let p = spec.p;
        let c = &spec.coefficients;
        match self {
            CoveringClass::StrictlyCyclic => c.iter().all(|&x| x == c[0]),
            CoveringClass::AlmostStrictlyCyclic => c.iter().all(|&x| x == c[0] || x == p - c[0]),
            CoveringClass::MeridianCyclic => c.iter().all(|&x| gcd(p, x) == 1),
            CoveringClass::SinglyCyclic => c.iter().any(|&x| gcd(p, x) == 1),
            CoveringClass::MonodromyCyclic => c.iter().fold(p, |g, &x| gcd(g, x)) == 1,
        }
    }
}

impl fmt::Display for CoveringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Degree `p` and coefficients `c_1, …, c_μ`, each stored in `1..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoveringSpec {
    p: u64,
    coefficients: Vec<u64>,
}

impl CoveringSpec {
    /// Reduces `coefficients` mod `p` and checks that they generate `Z_p`.
    pub fn validate(p: i64, coefficients: &[i64]) -> Result<Self, CoveringError> {
        if p < 2 {
            return Err(CoveringError::DegreeTooSmall(p));
        }
        if coefficients.is_empty() {
            return Err(CoveringError::NoCoefficients);
        }
        let reduced: Vec<u64> = coefficients
            .iter()
            .map(|c| c.rem_euclid(p) as u64)
            .collect();
        let p = p as u64;
        if let Some(j) = reduced.iter().position(|&c| c == 0) {
            return Err(CoveringError::ZeroCoefficient {
                component: j + 1,
                p,
            });
        }
        let g = reduced.iter().fold(p, |g, &c| gcd(g, c));
        if g != 1 {
            return Err(CoveringError::NotGenerating { p, gcd: g });
        }
        Ok(Self {
            p,
            coefficients: reduced,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn mu(&self) -> usize {
        self.coefficients.len()
    }

    /// The strongest class satisfied.
    pub fn classify(&self) -> CoveringClass {
        CoveringClass::ALL
            .into_iter()
            .find(|class| class.holds_for(self))
            .unwrap_or(CoveringClass::MonodromyCyclic)
    }

    /// Every class the spec belongs to, strongest first.
    pub fn satisfied_classes(&self) -> Vec<CoveringClass> {
        CoveringClass::ALL
            .into_iter()
            .filter(|class| class.holds_for(self))
            .collect()
    }

    /// The equivalent covering with every coefficient multiplied by the unit `u`.
    pub fn unit_multiply(&self, u: i64) -> Result<Self, CoveringError> {
        let ur = u.rem_euclid(self.p as i64) as u64;
        if gcd(self.p, ur) != 1 {
            return Err(CoveringError::NotAUnit { u, p: self.p });
        }
        Ok(Self {
            p: self.p,
            coefficients: self.coefficients.iter().map(|&c| c * ur % self.p).collect(),
        })
    }

    /// Reverses the orientation of the given components (1-based), which
    /// negates their coefficients.
    pub fn reorient(&self, components: &[usize]) -> Result<Self, CoveringError> {
        let mut coefficients = self.coefficients.clone();
        for &j in components {
            self.check_index(j)?;
            coefficients[j - 1] = self.p - coefficients[j - 1];
        }
        Ok(Self {
            p: self.p,
            coefficients,
        })
    }

    /// Reorients an almost-strictly-cyclic covering into a strictly-cyclic one.
    ///
    /// Component 1 is never flipped; the returned flip set is every
    /// component whose coefficient differs from `c_1`.
    pub fn reorient_to_strict(&self) -> Result<(Self, Vec<usize>), CoveringError> {
        let class = self.classify();
        if class > CoveringClass::AlmostStrictlyCyclic {
            return Err(CoveringError::NotAlmostStrict(class));
        }
        let first = self.coefficients[0];
        let flips: Vec<usize> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != first)
            .map(|(j, _)| j + 1)
            .collect();
        Ok((self.reorient(&flips)?, flips))
    }

    /// `(1 2 ⋯ p)^{c_j}` on `{1, …, p}`.
    pub fn monodromy_permutation(&self, j: usize) -> Result<Permutation, CoveringError> {
        self.check_index(j)?;
        Ok(Permutation::cycle_power(
            self.p as usize,
            self.coefficients[j - 1] as i64,
        ))
    }

    /// Number of components of the preimage of `L_j`: the orbit count of its
    /// meridian's monodromy.
    pub fn preimage_component_count(&self, j: usize) -> Result<usize, CoveringError> {
        let orbits = self.monodromy_permutation(j)?.cycle_count();
        debug_assert_eq!(orbits as u64, gcd(self.p, self.coefficients[j - 1]));
        Ok(orbits)
    }

    fn check_index(&self, j: usize) -> Result<(), CoveringError> {
        if j == 0 || j > self.mu() {
            return Err(CoveringError::ComponentOutOfRange {
                index: j,
                mu: self.mu(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for CoveringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.p)?;
        for (idx, c) in self.coefficients.iter().enumerate() {
            write!(f, "{}{c}", if idx == 0 { " " } else { "," })?;
        }
        f.write_str(")")
    }
}

/// Genus `(n − 1)(p − 1)` of the `p`-symmetric Heegaard splitting carried
/// by a strictly-cyclic covering branched over an `n`-bridge presentation.
///
/// Almost-strictly-cyclic specs are accepted since a reorientation makes
/// them strict. Anything weaker is rejected.
pub fn heegaard_genus_bound(n: usize, spec: &CoveringSpec) -> Result<u64, CoveringError> {
    if n < 1 {
        return Err(CoveringError::NoBridges);
    }
    let class = spec.classify();
    if class > CoveringClass::AlmostStrictlyCyclic {
        return Err(CoveringError::NotAlmostStrict(class));
    }
    Ok((n as u64 - 1) * (spec.p() - 1))
}

/// Bridge count `g / (p − 1) + 1` matching a `p`-symmetric genus `g`.
pub fn bridge_from_genus(g: u64, p: u64) -> Result<u64, CoveringError> {
    if p < 2 {
        return Err(CoveringError::DegreeTooSmall(p as i64));
    }
    let step = p - 1;
    if !g.is_multiple_of(step) {
        return Err(CoveringError::GenusNotDivisible { g, step });
    }
    Ok(g / step + 1)
}

/// Whether a symmetry exponent `p0` is `±1 mod p`.
pub fn symmetry_exponent_ok(p0: i64, p: u64) -> bool {
    assert!(p >= 2, "covering degree must be at least 2");
    let r = p0.rem_euclid(p as i64) as u64;
    r == 1 || r == p - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoveringClass::*;

    fn spec(p: i64, c: &[i64]) -> CoveringSpec {
        CoveringSpec::validate(p, c).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(spec(5, &[2, 2]).coefficients(), &[2, 2]);
        assert_eq!(spec(5, &[7, -2]).coefficients(), &[2, 3]);
        assert_eq!(
            CoveringSpec::validate(6, &[2, 4]),
            Err(CoveringError::NotGenerating { p: 6, gcd: 2 })
        );
        assert_eq!(
            CoveringSpec::validate(5, &[0]),
            Err(CoveringError::ZeroCoefficient { component: 1, p: 5 })
        );
        assert_eq!(
            CoveringSpec::validate(5, &[1, 10]),
            Err(CoveringError::ZeroCoefficient { component: 2, p: 5 })
        );
        assert_eq!(
            CoveringSpec::validate(1, &[1]),
            Err(CoveringError::DegreeTooSmall(1))
        );
        assert_eq!(
            CoveringSpec::validate(3, &[]),
            Err(CoveringError::NoCoefficients)
        );
    }

    #[test]
    fn classification() {
        assert_eq!(spec(5, &[2, 2]).classify(), StrictlyCyclic);
        assert_eq!(spec(5, &[2, 3]).classify(), AlmostStrictlyCyclic);
        assert_eq!(spec(6, &[2, 3]).classify(), MonodromyCyclic);
        assert_eq!(spec(4, &[1, 2]).classify(), SinglyCyclic);
        assert_eq!(spec(7, &[1, 3]).classify(), MeridianCyclic);
        assert_eq!(
            spec(4, &[1, 2]).satisfied_classes(),
            vec![SinglyCyclic, MonodromyCyclic]
        );
        // a knot is in every class
        assert_eq!(
            spec(9, &[4]).satisfied_classes(),
            CoveringClass::ALL.to_vec()
        );
    }

    #[test]
    fn unit_multiplication() {
        let s = spec(5, &[2, 3]);
        assert_eq!(s.unit_multiply(1).unwrap(), s);
        assert_eq!(s.unit_multiply(3).unwrap().coefficients(), &[1, 4]);
        assert_eq!(s.unit_multiply(-2).unwrap().coefficients(), &[1, 4]);
        assert_eq!(
            spec(6, &[1]).unit_multiply(4),
            Err(CoveringError::NotAUnit { u: 4, p: 6 })
        );
    }

    #[test]
    fn reorientation() {
        let s = spec(5, &[2, 2]);
        assert_eq!(s.reorient_to_strict().unwrap(), (s.clone(), vec![]));
        let (strict, flips) = spec(5, &[2, 3]).reorient_to_strict().unwrap();
        assert_eq!(strict.coefficients(), &[2, 2]);
        assert_eq!(flips, vec![2]);
        assert_eq!(
            spec(6, &[2, 3]).reorient_to_strict(),
            Err(CoveringError::NotAlmostStrict(MonodromyCyclic))
        );
        let (again, flips) = strict.reorient_to_strict().unwrap();
        assert_eq!((again, flips), (strict, vec![]));
    }

    #[test]
    fn monodromy() {
        assert_eq!(
            spec(3, &[1]).monodromy_permutation(1).unwrap().images(),
            &[2, 3, 1]
        );
        let sq = spec(4, &[3, 2]).monodromy_permutation(2).unwrap();
        assert_eq!(sq.images(), &[3, 4, 1, 2]);
        assert_eq!(sq.to_string(), "(1 3)(2 4)");
        assert_eq!(
            spec(4, &[1]).monodromy_permutation(2),
            Err(CoveringError::ComponentOutOfRange { index: 2, mu: 1 })
        );
        assert!(spec(4, &[1]).monodromy_permutation(0).is_err());
    }

    #[test]
    fn preimage_counts() {
        for p in 2..12 {
            assert_eq!(spec(p, &[1]).preimage_component_count(1).unwrap(), 1);
        }
        assert_eq!(spec(6, &[1, 2]).preimage_component_count(2).unwrap(), 2);
        assert_eq!(spec(5, &[3]).preimage_component_count(1).unwrap(), 1);
        assert!(spec(5, &[3]).preimage_component_count(2).is_err());
    }

    #[test]
    fn genus_bound() {
        for p in 2..8 {
            assert_eq!(heegaard_genus_bound(1, &spec(p, &[1])).unwrap(), 0);
        }
        assert_eq!(heegaard_genus_bound(3, &spec(2, &[1])).unwrap(), 2);
        assert_eq!(heegaard_genus_bound(2, &spec(3, &[1, 1])).unwrap(), 2);
        assert_eq!(heegaard_genus_bound(2, &spec(5, &[2, 3])).unwrap(), 4);
        assert_eq!(
            heegaard_genus_bound(2, &spec(7, &[1, 3])),
            Err(CoveringError::NotAlmostStrict(MeridianCyclic))
        );
        assert_eq!(
            heegaard_genus_bound(0, &spec(3, &[1])),
            Err(CoveringError::NoBridges)
        );
    }

    #[test]
    fn bridge_inverse() {
        for p in 2..10 {
            assert_eq!(bridge_from_genus(0, p).unwrap(), 1);
        }
        assert_eq!(bridge_from_genus(2, 2).unwrap(), 3);
        assert_eq!(
            bridge_from_genus(3, 3),
            Err(CoveringError::GenusNotDivisible { g: 3, step: 2 })
        );
    }

    #[test]
    fn symmetry_exponent() {
        for p in 2..20u64 {
            assert!(symmetry_exponent_ok(1, p));
            assert!(symmetry_exponent_ok(p as i64 - 1, p));
            assert!(symmetry_exponent_ok(-1, p));
        }
        assert!(!symmetry_exponent_ok(2, 5));
        assert!(symmetry_exponent_ok(11, 5));
    }

    #[test]
    fn display() {
        assert_eq!(spec(5, &[2, 3]).to_string(), "(5; 2,3)");
        assert_eq!(AlmostStrictlyCyclic.to_string(), "almost-strictly-cyclic");
    }
}
