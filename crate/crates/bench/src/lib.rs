//! Shared inputs for the kernel benchmarks.

use hgreg_core::ellcurve::{legendre_model, WeierstrassModel};
use hgreg_core::hyper::HGSpec;
use hgreg_core::{Context, Rational, XComplex};

pub fn ctx() -> Context {
    Context::new(40)
}

/// `3F2(1/2,1/2,1/2; 1,3/2; 1/4)`.
pub fn spec_3f2(ctx: &Context) -> HGSpec {
    let h = ctx.ratio(1, 2);
    HGSpec::new(vec![h.clone(), h.clone(), h], vec![ctx.int(1), ctx.ratio(3, 2)], XComplex::from_real(ctx.ratio(1, 4))).unwrap()
}

/// The conductor-24 curve `X_{-3}`.
pub fn model_24() -> WeierstrassModel {
    legendre_model(&Rational::from_integer((-3).into())).unwrap()
}
