//! Case-based binary classification by argumentation.
//!
//! Past cases become arguments for their own outcome. More exceptional cases
//! attack less exceptional cases with the opposite outcome and support those
//! with the same outcome, always at minimal difference. A new case attacks
//! every past case irrelevant to it. Supports are then folded into complex
//! attacks, and the new case receives the default outcome exactly when the
//! default argument belongs to the grounded extension.
//!
//! ```
//! use saacbr::{predict, Case, Casebase, FeatureSet, ModelConfig};
//!
//! let fs = |s: &str| FeatureSet::parse_list(s);
//! let casebase = Casebase::build(
//!     vec![
//!         Case::new("C1", fs("A"), "+"),
//!         Case::new("C2", fs("A,B,C"), "+"),
//!         Case::new("C3", fs("A,B"), "−"),
//!         Case::new("C4", fs("A,B,D"), "−"),
//!     ],
//!     Case::new("C0", FeatureSet::new(), "−"),
//!     None,
//! )
//! .unwrap();
//!
//! let baseline = predict(&casebase, &ModelConfig::aacbr(), &fs("A,B,C,D")).unwrap();
//! assert_eq!(baseline.outcome.as_str(), "+");
//! assert!(baseline.spikes.contains("C4"));
//!
//! let supported = predict(&casebase, &ModelConfig::saacbr(), &fs("A,B,C,D")).unwrap();
//! assert_eq!(supported.outcome.as_str(), "−");
//! assert!(supported.spikes.is_empty());
//! ```

pub mod classifier;
pub mod error;
pub mod io;
pub mod mining;
pub mod model;
pub mod semantics;
pub mod translation;

pub use classifier::{
    evaluate_loo, evaluate_split, find_spikes, predict, Confusion, EvalRecord, EvalReport, Mode,
    ModelConfig, Prediction,
};
pub use error::{Error, ModelError};
pub use mining::{
    attacks_def, mine_framework, supports_def, ArgId, Argument, AttackKind, BipolarFramework, Edge,
    Role,
};
pub use model::{
    compare, is_irrelevant, Case, Casebase, Characterisation, DedupReport, FeatureSet, NewCase,
    OrderRelation, Outcome, OutcomeSpace, NEW_CASE_ID,
};
pub use semantics::{defends, grounded_extension, AttackGraph, GroundedResult, Label};
pub use translation::{
    secondary_attacks, supported_attacks, translate, AttackFramework, Provenance,
};
