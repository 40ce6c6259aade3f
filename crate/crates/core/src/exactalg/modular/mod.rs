//! Multi-modular machinery: prime fields, number-theoretic transforms,
//! polynomial arithmetic mod p, two characteristic-polynomial engines and the
//! CRT driver that lifts residues back to Q.

mod crt;
mod field;
mod hessenberg;
mod ntt;
mod projection;
mod zpoly;

pub use crt::{reconstruct, CrtOptions, CrtStats, ModularImage};
pub use field::{is_prime, NttPrimes, Zp};
pub use ntt::Ntt;
pub use zpoly::{trim as trim_zp, ModRing, ZpCtx};


use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

/// Which modular characteristic-polynomial algorithm to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Hessenberg below a small size threshold, projection above it.
    #[default]
    Auto,
    /// Dense matrix reduction to Hessenberg form, cubic in the degree.
    Hessenberg,
    /// Traces from baby-step/giant-step power projection, then Newton's
    /// identities.
    Projection,
}

const HESSENBERG_LIMIT: usize = 40;

impl Engine {
    pub(crate) fn resolve(self, n: usize) -> Engine {
        match self {
            Engine::Auto if n <= HESSENBERG_LIMIT => Engine::Hessenberg,
            Engine::Auto => Engine::Projection,
            e => e,
        }
    }
}

/// 2-adicity of the primes needed so that transforms of modular products
/// for an operator of dimension `n` are available.
pub fn two_adicity_for(n: usize) -> u32 {
    (2 * n).max(2).next_power_of_two().trailing_zeros() + 1
}

/// Characteristic polynomial of multiplication by `b` on `Z_p[z]/(a)`,
/// ascending and monic. `a` must be monic of degree `n < p`.
pub fn charpoly_zp(ctx: &ZpCtx, b: &[u64], a: &[u64], engine: Engine) -> Vec<u64> {
    let n = a.len() - 1;
    match engine.resolve(n) {
        Engine::Hessenberg | Engine::Auto => {
            let m = hessenberg::multiplication_matrix(ctx, b, a);
            hessenberg::charpoly(&ctx.f, m)
        }
        Engine::Projection => projection::charpoly(ctx, b, a),
    }
}

/// Reduction of an integer modulo a word prime.
pub fn reduce_int(x: &BigInt, p: u64) -> u64 {
    let r = (x.magnitude() % p).to_u64().expect("residue fits");
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}
