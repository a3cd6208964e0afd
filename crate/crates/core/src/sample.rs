//! Seeded generators of random test tuples.

use num_integer::Integer;
use rand::Rng;

use crate::relations::{classify, minimal_relations};
use crate::semigroup::{validate, GeneratorTuple};

pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng as SampleRng;

pub fn rng(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

/// Coprime `d1 < d2 <= max`, `d1 >= 2`.
pub fn coprime_pair(rng: &mut impl Rng, max: u64) -> GeneratorTuple {
    assert!(max >= 3);
    loop {
        let a = rng.gen_range(2..=max);
        let b = rng.gen_range(2..=max);
        if a != b && a.gcd(&b) == 1 {
            return validate(&[a as i64, b as i64]).expect("coprime pair");
        }
    }
}

/// Minimal triple with entries in `2..=max`, of the requested kind when
/// `symmetric` is set.
pub fn minimal_triple(rng: &mut impl Rng, max: u64, symmetric: Option<bool>) -> GeneratorTuple {
    assert!(max >= 5);
    loop {
        let raw: Vec<i64> = (0..3).map(|_| rng.gen_range(2..=max) as i64).collect();
        let Ok(g) = validate(&raw) else { continue };
        if g.order() != 3 || !g.minimal() {
            continue;
        }
        match symmetric {
            None => return g,
            Some(want) => {
                let rel = minimal_relations(&g).expect("minimal triple");
                let cls = classify(&g, &rel).expect("valid relations");
                if cls.is_symmetric() == want {
                    return g;
                }
            }
        }
    }
}

/// Symmetric minimal triple drawn from the family `{p q, p r, s}` with
/// `gcd(q, r) = gcd(p, s) = 1`, filtered by the vanishing-column test.
pub fn symmetric_triple(rng: &mut impl Rng, max: u64) -> GeneratorTuple {
    assert!(max >= 20);
    loop {
        let p = rng.gen_range(2..=max / 4);
        let q = rng.gen_range(1..=max / p);
        let r = rng.gen_range(1..=max / p);
        let s = rng.gen_range(2..=max);
        if q.gcd(&r) != 1 || p.gcd(&s) != 1 {
            continue;
        }
        let raw = [(p * q) as i64, (p * r) as i64, s as i64];
        let Ok(g) = validate(&raw) else { continue };
        if g.order() != 3 || !g.minimal() {
            continue;
        }
        let rel = minimal_relations(&g).expect("minimal triple");
        if classify(&g, &rel).expect("valid relations").is_symmetric() {
            return g;
        }
    }
}
