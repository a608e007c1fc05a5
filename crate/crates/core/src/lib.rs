//! Meta-analysis of two-group studies that report medians.
//!
//! Aggregate-data meta-analyses usually pool a difference of means, but many
//! primary studies report the median of the outcome together with quantile
//! summaries (min/max, quartiles, or both). This crate implements two routes
//! for such data:
//!
//! * **Transformation-based estimators** ([`transform`]): recover a sample
//!   mean and standard deviation from the reported quantiles (Wan-style and
//!   Luo-style estimators) so that a standard difference-of-means analysis
//!   can proceed.
//! * **Median-based estimators** ([`median`]): pool the difference of
//!   medians directly, either with a sign-test interval around the median of
//!   the study effects (MDM), or with inverse-variance weights obtained by
//!   estimating the sampling variance of each study's difference of medians
//!   from a density fitted to the reported quantiles (QE), including its
//!   best-case variant and an approximate-Bayesian alternative ([`abc`]).
//!
//! [`pooling`] provides fixed-effect and DerSimonian-Laird random-effects
//! inverse-variance pooling, [`sim`] a Monte-Carlo lab that measures relative
//! error, coverage, and heterogeneity bias of every method on synthetic
//! meta-analyses, and [`report`]/[`forest`] the machinery behind the
//! `median-meta` command-line tool.

pub mod abc;
pub mod dist;
pub mod forest;
pub mod jsonfmt;
pub mod median;
pub mod optim;
pub mod pooling;
pub mod report;
pub mod shapiro;
pub mod sim;
pub mod special;
pub mod summary;
pub mod transform;

pub use dist::{Dist, Family, FittedDensity};
pub use median::{MdmResult, QeConfig};
pub use pooling::{PoolModel, PoolResult};
pub use summary::{GroupSummary, MetaDataset, Scenario, StudyRecord};
pub use transform::{EffectEstimate, EffectKind, MeanSdEstimate};
