//! Verification suites run by `gframe verify`.
//!
//! Randomised companions (Parseval frames, duals, test vectors, weights) are
//! drawn from seeds derived from `(seed, check, trial)`, so a report is a
//! pure function of the input frame and the flags.

use clap::ValueEnum;
use gframe_core::duals::{
    dual_proximity_bound, parseval_proximity_bound, random_alternate_dual, verify_alternate_dual,
};
use gframe_core::generators::{nearly_parseval_gframe, random_parseval_gframe};
use gframe_core::identities::{
    dual_gap_closed_form, frobenius_dual_decomposition, najati_gap, najati_gap_closed_form,
    parseval_approx_decomposition, parseval_frobenius_budget, parseval_weighted_energy,
    pointwise_dual_decomposition, power_trace_identity,
};
use gframe_core::random::GaussianStream;
use gframe_core::{FrameBounds, FrameOperator, GFrame, Result};

use crate::report::{Check, Worst};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Budgets,
    ParsevalApprox,
    Duals,
    Bounds,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Budgets => "budgets",
            Suite::ParsevalApprox => "parseval-approx",
            Suite::Duals => "duals",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

pub const POWER_EXPONENTS: [f64; 7] = [-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0];

struct Context<'a> {
    frame: &'a GFrame,
    s: &'a FrameOperator,
    bounds: &'a FrameBounds,
    trials: usize,
    seed: u64,
}

impl Context<'_> {
    fn n(&self) -> f64 {
        self.frame.dim() as f64
    }

    fn trial_seed(&self, tag: u64, trial: usize) -> u64 {
        self.seed
            ^ tag.wrapping_mul(0xD1B5_4A32_D192_ED03)
            ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }

    fn parseval_companion(&self, tag: u64, trial: usize) -> Result<GFrame> {
        random_parseval_gframe(self.frame.dim(), &self.frame.counts(), self.trial_seed(tag, trial))
    }
}

/// Runs `body` once per trial and keeps the worst row.
fn over_trials(ctx: &Context, name: &str, mut body: impl FnMut(usize) -> Result<Check>) -> Check {
    let mut worst = Worst::default();
    for t in 0..ctx.trials {
        worst.push(body(t).unwrap_or_else(|e| Check::failed(name, e)));
    }
    worst.finish(name)
}

fn single(name: &str, body: impl FnOnce() -> Result<Check>) -> Check {
    body().unwrap_or_else(|e| Check::failed(name, e))
}

pub fn run(suite: Suite, frame: &GFrame, s: &FrameOperator, bounds: &FrameBounds, trials: usize, seed: u64) -> Vec<Check> {
    let ctx = Context {
        frame,
        s,
        bounds,
        trials,
        seed,
    };
    match suite {
        Suite::Budgets => budgets(&ctx),
        Suite::ParsevalApprox => parseval_approx(&ctx),
        Suite::Duals => duals(&ctx),
        Suite::Bounds => bound_checks(&ctx),
        Suite::All => {
            let mut all = budgets(&ctx);
            all.extend(parseval_approx(&ctx));
            all.extend(duals(&ctx));
            all.extend(bound_checks(&ctx));
            all
        }
    }
}

fn budgets(ctx: &Context) -> Vec<Check> {
    let n = ctx.n();
    let mut out = Vec::new();

    let energy = ctx.frame.frobenius_energy();
    let (lo, hi) = (ctx.bounds.lower * n, ctx.bounds.upper * n);
    out.push(Check::equal(
        "frobenius_energy_within_[A*n,B*n]",
        energy,
        energy.clamp(lo, hi),
        1e-10 * (1.0 + energy),
    ));

    out.push(single("canonical_parseval_budget", || {
        let budget = parseval_frobenius_budget(&ctx.frame.canonical_parseval()?)?;
        Ok(Check::equal("canonical_parseval_budget", budget, n, 1e-8 * n))
    }));

    out.push(over_trials(ctx, "random_parseval_budget", |t| {
        let budget = parseval_frobenius_budget(&ctx.parseval_companion(1, t)?)?;
        Ok(Check::equal("random_parseval_budget", budget, n, 1e-8 * n))
    }));

    for a in POWER_EXPONENTS {
        let name = format!("power_trace[a={a}]");
        out.push(single(&name, || {
            let pt = power_trace_identity(ctx.frame, a)?;
            Ok(Check::equal(&name, pt.lhs, pt.rhs, 1e-8 * (1.0 + pt.rhs)))
        }));
    }

    out.push(over_trials(ctx, "weighted_energy_equals_|L|^2", |t| {
        let gam = ctx.parseval_companion(2, t)?;
        let l = GaussianStream::new(ctx.trial_seed(3, t)).matrix(ctx.frame.dim(), ctx.frame.dim());
        let energy = parseval_weighted_energy(&l, &gam)?;
        let target = l.frobenius_norm_sq();
        Ok(Check::equal("weighted_energy_equals_|L|^2", energy, target, 1e-7 * (1.0 + target)))
    }));
    out
}

fn parseval_approx(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    let gap = najati_gap(ctx.frame);

    out.push(over_trials(ctx, "parseval_decomposition", |t| {
        let d = parseval_approx_decomposition(ctx.frame, &ctx.parseval_companion(4, t)?)?;
        Ok(Check::equal(
            "parseval_decomposition",
            d.total,
            d.canonical_gap + d.cross_term,
            1e-7 * (1.0 + d.total),
        ))
    }));

    out.push(single("canonical_cross_term_vanishes", || {
        let d = parseval_approx_decomposition(ctx.frame, &ctx.frame.canonical_parseval()?)?;
        Ok(Check::at_most("canonical_cross_term_vanishes", d.cross_term, 0.0, 1e-8))
    }));

    out.push(single("najati_minimality", || {
        let gap = gap.clone()?;
        let mut min_total = f64::INFINITY;
        for t in 0..ctx.trials {
            let d = parseval_approx_decomposition(ctx.frame, &ctx.parseval_companion(5, t)?)?;
            min_total = min_total.min(d.total);
        }
        Ok(Check::at_least("najati_minimality", min_total, gap, 1e-9))
    }));

    out.push(single("najati_gap_closed_form", || {
        let closed = najati_gap_closed_form(ctx.s);
        Ok(Check::equal("najati_gap_closed_form", gap.clone()?, closed, 1e-8 * (1.0 + closed)))
    }));
    out
}

fn duals(ctx: &Context) -> Vec<Check> {
    let n = ctx.frame.dim();
    let mut out = Vec::new();

    out.push(over_trials(ctx, "random_dual_equation", |t| {
        let gam = random_alternate_dual(ctx.frame, 1.0, ctx.trial_seed(6, t))?;
        let cert = verify_alternate_dual(ctx.frame, &gam)?;
        Ok(Check::at_most("random_dual_equation", cert.residual, 0.0, cert.tolerance))
    }));

    out.push(over_trials(ctx, "pointwise_dual_decomposition", |t| {
        let gam = random_alternate_dual(ctx.frame, 1.0, ctx.trial_seed(7, t))?;
        let x = GaussianStream::new(ctx.trial_seed(8, t)).vector(n);
        let d = pointwise_dual_decomposition(ctx.frame, &gam, &x)?;
        Ok(Check::equal(
            "pointwise_dual_decomposition",
            d.total,
            d.canonical + d.residual,
            1e-8 * (1.0 + d.total),
        ))
    }));

    out.push(over_trials(ctx, "pointwise_dual_minimality", |t| {
        let gam = random_alternate_dual(ctx.frame, 1.0, ctx.trial_seed(9, t))?;
        let x = GaussianStream::new(ctx.trial_seed(10, t)).vector(n);
        let d = pointwise_dual_decomposition(ctx.frame, &gam, &x)?;
        Ok(Check::at_least("pointwise_dual_minimality", d.total, d.canonical, 1e-9))
    }));

    let canonical = ctx.frame.canonical_dual();
    out.push(over_trials(ctx, "pointwise_canonical_residual", |t| {
        let x = GaussianStream::new(ctx.trial_seed(11, t)).vector(n);
        let d = pointwise_dual_decomposition(ctx.frame, canonical.as_ref().map_err(Clone::clone)?, &x)?;
        Ok(Check::at_most("pointwise_canonical_residual", d.residual, 0.0, 1e-10))
    }));

    out.push(over_trials(ctx, "frobenius_dual_decomposition", |t| {
        let gam = random_alternate_dual(ctx.frame, 1.0, ctx.trial_seed(12, t))?;
        let d = frobenius_dual_decomposition(ctx.frame, &gam)?;
        Ok(Check::equal(
            "frobenius_dual_decomposition",
            d.total,
            d.canonical + d.residual,
            1e-7 * (1.0 + d.total),
        ))
    }));

    out.push(single("frobenius_canonical_residual", || {
        let d = frobenius_dual_decomposition(ctx.frame, canonical.as_ref().map_err(Clone::clone)?)?;
        Ok(Check::at_most("frobenius_canonical_residual", d.residual, 0.0, 1e-9))
    }));

    out.push(single("dual_gap_closed_form", || {
        let d = frobenius_dual_decomposition(ctx.frame, canonical.as_ref().map_err(Clone::clone)?)?;
        let closed = dual_gap_closed_form(ctx.s);
        Ok(Check::equal("dual_gap_closed_form", d.canonical, closed, 1e-8 * (1.0 + closed)))
    }));
    out
}

fn bound_checks(ctx: &Context) -> Vec<Check> {
    let n = ctx.n();
    let slack = 1e-9 * n;
    let mut out = Vec::new();

    out.push(single("parseval_proximity_bound", || {
        let b = parseval_proximity_bound(ctx.frame)?;
        Ok(Check::at_most("parseval_proximity_bound", b.gap, b.bound, slack))
    }));
    out.push(single("dual_proximity_bound", || {
        let b = dual_proximity_bound(ctx.frame)?;
        Ok(Check::at_most("dual_proximity_bound", b.gap, b.bound, slack))
    }));

    if let Some(eps) = ctx.bounds.epsilon.filter(|&e| e < 1.0) {
        out.push(Check::at_most(
            "parseval_bound_binding_side",
            (1.0 + eps).sqrt() - 1.0,
            1.0 - (1.0 - eps).sqrt(),
            1e-15,
        ));
        // Companions share the input's shape and epsilon.
        let eps = if ctx.frame.dim() < 2 { 0.0 } else { eps };
        let counts = ctx.frame.counts();
        let companion = |tag: u64, t: usize| {
            nearly_parseval_gframe(ctx.frame.dim(), &counts, eps, ctx.trial_seed(tag, t))
        };
        out.push(over_trials(ctx, "parseval_proximity_bound_random", |t| {
            let b = parseval_proximity_bound(&companion(13, t)?)?;
            Ok(Check::at_most("parseval_proximity_bound_random", b.gap, b.bound, slack))
        }));
        out.push(over_trials(ctx, "dual_proximity_bound_random", |t| {
            let b = dual_proximity_bound(&companion(14, t)?)?;
            Ok(Check::at_most("dual_proximity_bound_random", b.gap, b.bound, slack))
        }));
    }
    out
}
