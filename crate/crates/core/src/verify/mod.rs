//! Named, seeded property checks over the whole crate.
//!
//! Every check is deterministic in its parameters and seed, and a failing
//! check reports a concrete counterexample that can be re-checked by hand.

mod algebra;
mod combinatorics;
mod probability;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of a property check; unset fields take the property's defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub order: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
}

/// Result of running one property.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub seed: u64,
    pub passed: bool,
    pub checked: usize,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

/// Running tally of a check: number of instances tested and the first failure.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub checked: usize,
    pub summary: String,
    pub counterexample: Option<String>,
}

impl Outcome {
    /// Records one instance. Returns `false` once a failure has been recorded.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
        self.counterexample.is_none()
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }
}

#[derive(Clone, Copy)]
struct Defaults {
    n: Option<usize>,
    order: Option<usize>,
    samples: Option<usize>,
}

/// A registered property.
pub struct Property {
    pub id: &'static str,
    /// Alternative names accepted by [`run`].
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    defaults: Defaults,
    run: fn(&Resolved) -> Result<Outcome>,
}

/// Parameters after defaults are applied.
pub(crate) struct Resolved {
    pub n: usize,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Resolved {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

const fn d(n: Option<usize>, order: Option<usize>, samples: Option<usize>) -> Defaults {
    Defaults { n, order, samples }
}

/// Every property known to [`run`].
pub const PROPERTIES: &[Property] = &[
    Property {
        id: "cardinalities",
        aliases: &[],
        description: "|NC^(A)(k)| is Catalan(k) and |NC^(B)(k)| is C(2k,k) for k <= n",
        defaults: d(Some(8), None, None),
        run: combinatorics::cardinalities,
    },
    Property {
        id: "abs-cover",
        aliases: &[],
        description: "Abs is onto NC^(A)(n) with fibers of size n+1, and abs_fiber lists each fiber",
        defaults: d(Some(5), None, None),
        run: combinatorics::abs_cover,
    },
    Property {
        id: "kreweras",
        aliases: &[],
        description: "Kr' inverts Kr, block counts of p and Kr(p), Kr commutes with Abs, for k <= n",
        defaults: d(Some(5), None, None),
        run: combinatorics::kreweras,
    },
    Property {
        id: "iota-a",
        aliases: &[],
        description: "iota is an order isomorphism NC^(A)(k) -> [e,c] with iota(Kr p) = iota(p)^-1 c, k <= n",
        defaults: d(Some(5), None, None),
        run: combinatorics::iota_a,
    },
    Property {
        id: "iota-b",
        aliases: &[],
        description: "iota is an order isomorphism NC^(B)(k) -> [e,omega] with the length identity, k <= n",
        defaults: d(Some(4), None, None),
        run: combinatorics::iota_b,
    },
    Property {
        id: "length-bfs",
        aliases: &[],
        description: "word length equals Cayley-graph distance in S_n and W_n",
        defaults: d(Some(4), None, None),
        run: combinatorics::length_bfs,
    },
    Property {
        id: "covers-b",
        aliases: &[],
        description: "structural cover test agrees with the length and order characterization on W_n and S_n",
        defaults: d(Some(3), None, None),
        run: combinatorics::covers,
    },
    Property {
        id: "bridge",
        aliases: &[],
        description: "u_alpha *_r u_beta = u_(alpha box beta) on S_n and on [e,omega] in W_n, random coefficients",
        defaults: d(Some(3), None, Some(20)),
        run: algebra::bridge,
    },
    Property {
        id: "bridge-negative",
        aliases: &[],
        description: "the type-B bridge identity fails off [e,omega] in W_n for generic coefficients",
        defaults: d(Some(2), None, Some(5)),
        run: algebra::bridge_negative,
    },
    Property {
        id: "boxconv-b-dual",
        aliases: &[],
        description: "type-B boxed convolution by NC^(B) summation equals the dual-number type-A convolution",
        defaults: d(None, Some(7), Some(50)),
        run: algebra::boxconv_b_dual,
    },
    Property {
        id: "boxconv-b-algebra",
        aliases: &[],
        description: "associativity, the unit law and inverses for the type-B boxed convolution",
        defaults: d(None, Some(5), Some(20)),
        run: algebra::boxconv_b_algebra,
    },
    Property {
        id: "boxconv-a-closed-forms",
        aliases: &[],
        description: "order 1..3 coefficients of the type-A boxed convolution match their closed forms",
        defaults: d(None, None, Some(10)),
        run: algebra::boxconv_a_closed_forms,
    },
    Property {
        id: "cumulants",
        aliases: &[],
        description: "low-order cumulant formulas, moment-cumulant round trips, componentwise type-B cumulants, products as arguments, scalar arguments, multilinearity",
        defaults: d(None, Some(5), Some(3)),
        run: probability::cumulants,
    },
    Property {
        id: "moment-transform",
        aliases: &[],
        description: "M = R box zeta' for marked pairs, with the NC^(B) terms of the second component read off cumulants",
        defaults: d(None, Some(6), Some(3)),
        run: probability::moment_transform,
    },
    Property {
        id: "freeness",
        aliases: &[],
        description: "cumulant and moment freeness checks agree on free pairs, perturbed pairs and type-A pairs",
        defaults: d(None, Some(5), Some(10)),
        run: probability::freeness,
    },
    Property {
        id: "free-transforms",
        aliases: &["theorem-7-3"],
        description: "R-transforms of sums and products of free pairs are R1 + R2 and R1 box R2",
        defaults: d(None, Some(5), Some(1)),
        run: probability::free_transforms,
    },
];

/// Ids of all properties, in registry order.
pub fn property_ids() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.id).collect()
}

/// Runs the property `id`. Unknown ids are a domain error listing the known ones.
pub fn run(id: &str, params: &Params) -> Result<VerificationReport> {
    let prop = PROPERTIES
        .iter()
        .find(|p| p.id == id || p.aliases.contains(&id))
        .ok_or_else(|| Error::Domain(format!("unknown property `{id}`; known: {}", property_ids().join(", "))))?;
    let n = params.n.or(prop.defaults.n);
    let order = params.order.or(prop.defaults.order);
    let samples = params.samples.or(prop.defaults.samples);
    let resolved =
        Resolved { n: n.unwrap_or(0), order: order.unwrap_or(0), samples: samples.unwrap_or(0), seed: params.seed };
    if prop.defaults.n.is_some() && resolved.n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if prop.defaults.order.is_some() && resolved.order == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    let start = Instant::now();
    let outcome = (prop.run)(&resolved)?;
    Ok(VerificationReport {
        property: prop.id.to_string(),
        n: prop.defaults.n.and(n),
        order: prop.defaults.order.and(order),
        samples: prop.defaults.samples.and(samples),
        seed: params.seed,
        passed: !outcome.failed(),
        checked: outcome.checked,
        summary: outcome.summary,
        counterexample: outcome.counterexample,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
