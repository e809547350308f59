//! Built-in field towers and automorphisms.

use crate::algebra::{FieldTower, LevelSpec};
use crate::error::{Error, Result};
use crate::galois::Automorphism;

/// `Q ⊆ Q[a]/(a^8 + 1)` with θ: a ↦ a^3. θ has order 4 and a repeated
/// characteristic polynomial, so it is not admissible.
pub fn roots8() -> Automorphism {
    let tower = FieldTower::new(vec![LevelSpec::integer("a", &[1, 0, 0, 0, 0, 0, 0, 0, 1], 1)])
        .expect("valid tower");
    let image = tower.generator(1).pow(3);
    Automorphism::new(&tower, image).expect("a^3 is a root of Y^8 + 1")
}

/// `K = Q[h]/(h^4 + 1) ⊆ L = K[a]/(a^8 - 3)` with θ: a ↦ h·a.
pub fn kummer() -> Automorphism {
    let tower = FieldTower::new(vec![
        LevelSpec::integer("h", &[1, 0, 0, 0, 1], 1),
        LevelSpec::integer("a", &[-3, 0, 0, 0, 0, 0, 0, 0, 1], 4),
    ])
    .expect("valid tower");
    let image = &tower.generator(1).embed(2) * &tower.generator(2);
    Automorphism::new(&tower, image).expect("h·a is a root of Y^8 - 3")
}

/// `Q ⊆ Q[z]/(Φ_p)` with θ: z ↦ z^u, for an odd prime `p` and `u` prime
/// to `p`.
pub fn cyclotomic(p: u64, u: u64) -> Result<Automorphism> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidTower(format!("{p} is not an odd prime")));
    }
    if u % p == 0 {
        return Err(Error::InvalidAutomorphism(format!("z^{u} is not a primitive {p}-th root of unity")));
    }
    let phi = vec![1i64; p as usize];
    let tower = FieldTower::new(vec![LevelSpec::integer("z", &phi, 1)])?;
    let image = tower.generator(1).pow(u % p);
    Automorphism::new(&tower, image)
}

/// Cyclotomic preset using the smallest primitive root modulo `p`, which
/// gives θ the full order `p - 1`.
pub fn cyclotomic_primitive(p: u64) -> Result<Automorphism> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidTower(format!("{p} is not an odd prime")));
    }
    cyclotomic(p, smallest_primitive_root(p))
}

/// Multiplicative order of `u` modulo `p`.
pub fn multiplicative_order(u: u64, p: u64) -> u64 {
    let mut x = u % p;
    let mut k = 1;
    while x != 1 {
        x = x * u % p;
        k += 1;
    }
    k
}

pub fn smallest_primitive_root(p: u64) -> u64 {
    (2..p).find(|&u| multiplicative_order(u, p) == p - 1).unwrap_or(1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["roots8", "kummer", "cyclotomic-5", "cyclotomic-7", "cyclotomic-11"];

/// Looks up a preset: `roots8`, `kummer`, or `cyclotomic-<p>` (primitive
/// root automorphism) and `cyclotomic-<p>-<u>`.
pub fn by_name(name: &str) -> Result<Automorphism> {
    match name {
        "roots8" => Ok(roots8()),
        "kummer" => Ok(kummer()),
        _ => {
            let rest = name
                .strip_prefix("cyclotomic-")
                .ok_or_else(|| Error::InvalidTower(format!("unknown preset {name:?}")))?;
            let parts: Vec<&str> = rest.split('-').collect();
            let parse = |s: &str| {
                s.parse::<u64>()
                    .map_err(|_| Error::InvalidTower(format!("unknown preset {name:?}")))
            };
            match parts.as_slice() {
                [p] => cyclotomic_primitive(parse(p)?),
                [p, u] => cyclotomic(parse(p)?, parse(u)?),
                _ => Err(Error::InvalidTower(format!("unknown preset {name:?}"))),
            }
        }
    }
}
