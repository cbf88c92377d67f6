//! Tanh-sinh (double exponential) nodes on the open unit interval.
//!
//! The map x(t) = (1 + tanh((π/2) sinh t))/2 pushes the endpoints infinitely
//! far away: with q = (π/2) sinh t,
//!
//! ```text
//!   x = 1/(1 + e^{−2q}),   1 − x = e^{−2q}/(1 + e^{−2q}),
//!   dx/dt = π cosh(t) · x (1 − x).
//! ```
//!
//! Both the node and its distance to the nearer endpoint are stored at full
//! precision, so integrands can resolve 1 − x without cancellation. Nodes
//! never touch the boundary: the singular lines of the integrands are never
//! sampled. Level ℓ uses step h = 2^(−ℓ); node tables are cached per
//! (level, precision) and are immutable once computed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use astro_float::BigFloat;

use crate::prec::{bf_log2_approx, pow2, with_consts, PrecisionContext};

/// One node at t = k·h ≥ 0; the t < 0 half follows by the x ↔ 1−x mirror.
#[derive(Clone, Debug)]
pub struct Node {
    pub x: BigFloat,
    pub one_minus_x: BigFloat,
    /// dx/dt at the node; the step h is applied by the integrator.
    pub weight: BigFloat,
}

static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<Vec<Node>>>>> = OnceLock::new();

/// Nodes for refinement level `level` at the context's total precision,
/// covering t = 0, h, 2h, … up to the double-exponential underflow cutoff.
pub fn tanh_sinh_nodes(level: u32, ctx: &PrecisionContext) -> Arc<Vec<Node>> {
    let p = ctx.total_bits();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(nodes) = cache.lock().expect("node cache").get(&(level, p)) {
        return Arc::clone(nodes);
    }
    let nodes = Arc::new(generate(level, ctx));
    let mut guard = cache.lock().expect("node cache");
    Arc::clone(guard.entry((level, p)).or_insert(nodes))
}

fn generate(level: u32, ctx: &PrecisionContext) -> Vec<Node> {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let pi_half = ctx.pi().mul(&pow2(-1), p, rm);
    let cutoff_log2 = -(p as f64) - 64.0;

    let h = pow2(-(i64::from(level)));
    let mut nodes = Vec::new();
    let mut k = 0u64;
    loop {
        let t = crate::prec::bf_u64(k, p).mul(&h, p, rm);
        let (sinh_t, cosh_t) = with_consts(|cc| (t.sinh(p, rm, cc), t.cosh(p, rm, cc)));
        let q = pi_half.mul(&sinh_t, p, rm);
        // e^{−2q}; q ≥ 0, so this never overflows.
        let e2 = with_consts(|cc| q.mul(&pow2(1), p, rm).neg().exp(p, rm, cc));
        let denom = e2.add(&crate::prec::bf_u64(1, p), p, rm);
        let x = denom.reciprocal(p, rm);
        let one_minus_x = e2.div(&denom, p, rm);
        let weight = ctx
            .pi()
            .mul(&cosh_t, p, rm)
            .mul(&x, p, rm)
            .mul(&one_minus_x, p, rm);
        let underflowed = bf_log2_approx(&weight) < cutoff_log2;
        nodes.push(Node {
            x,
            one_minus_x,
            weight,
        });
        if underflowed && k > 0 {
            break;
        }
        k += 1;
        if k > 1_000_000 {
            break; // unreachable at sane precisions; keeps the loop total
        }
    }
    nodes
}
