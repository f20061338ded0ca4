//! Harness library behind the `rainbow-matroids` binary: file formats,
//! seeded instance generation, and verification campaigns. Split out as
//! a library so the integration and acceptance suites can drive the
//! campaigns directly.

pub mod campaigns;
pub mod format;
pub mod generate;

pub use campaigns::{
    campaign_drisko, campaign_eta_recursion, campaign_lemma, campaign_main,
    campaign_matchability, campaign_tightness, CampaignError, VerificationReport,
};
pub use format::{parse_complex_file, parse_instance, ComplexFile, InstanceFile, MatroidSpec};
pub use generate::{gen_random_instance, GenError};
