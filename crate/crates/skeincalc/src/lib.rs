//! Exact computation in Kauffman bracket skein modules of the Seifert
//! manifolds `D2(k1,k2)` and `S2(k1,k2,k3)`.
//!
//! Everything is integer arithmetic: the coefficient ring is the Laurent
//! ring in one variable over arbitrary-precision integers, and evaluation at
//! the sixth root of unity stays in `Z[zeta]`. The crate provides
//!
//! - the free module on Chebyshev-decorated curve triples and its product,
//! - closed-form handle-slide relators and a machine-checked identity suite,
//! - certified normal forms over the two-handle staircase basis,
//! - certified reduction into the finite three-handle generator box,
//! - exact evaluation of the root-of-unity homomorphism.

pub mod certificate;
pub mod error;
pub mod eta;
pub mod identities;
pub mod json;
pub mod reduce_d2;
pub mod reduce_s2;
pub mod relators;
pub mod ring;
pub mod skein;

pub use certificate::{CertStep, Certificate};
pub use error::Error;
pub use eta::{delta, eta_elem, eta_monomial, f_coeff, mu, mu_pow};
pub use identities::{sweep, Identity, ParamMap, SweepReport, ZeroWitness, ALL_IDENTITIES};
pub use reduce_d2::{enumerate_basis, reduce_d2, region_of, RegionTag, DEFAULT_MAX_TERMS};
pub use reduce_s2::{generators, reduce_s2, BoxRepresentative};
pub use relators::{
    closed, f_sum, f_tilde_sum, r12_closed, r13_closed, r23_closed, relator, Family, RelatorId,
    SurgeryParams,
};
pub use ring::{cyc_eval, Eisenstein, LaurentPoly};
pub use skein::{
    cheb_linearize, make_monomial, normalize_index, poly_oracle, Monomial, SignedMonomial,
    SkeinElement, TriPoly,
};
