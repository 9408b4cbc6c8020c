//! Inclusion probabilities for rejective (conditional Poisson) and successive
//! sampling without replacement.
//!
//! - [`esf`]: elementary symmetric functions and their leave-out variants.
//! - [`designs`]: exact inclusion probabilities, samplers and Monte Carlo
//!   estimates for both designs.
//! - [`orderings`]: majorization, entropy, Kullback–Leibler divergence and the
//!   likelihood-ratio order on ordered samples.
//! - [`verify`]: checks of the majorization, entropy and divergence orderings
//!   between the two designs on concrete inputs.
//! - [`cli`]: the `incprob` command-line front end and its file formats.

pub mod cli;
pub mod designs;
pub mod error;
pub mod esf;
pub mod orderings;
pub mod par;
pub mod verify;

pub use designs::{
    empirical_inclusion, rejective_inclusion, sample_rejective, sample_successive,
    successive_inclusion_exact, Design, DrawingProbabilities, InclusionProfile, McEstimate,
    RejectiveMethod, SampleDraw, SampleSize, Scheme,
};
pub use error::{Error, Result};
pub use par::Execution;
pub use verify::{VerificationReport, VerifyConfig};
