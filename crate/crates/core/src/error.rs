use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised by constructions and predicates. Axiom failures are not
/// errors: they are reported through [`ValidationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table `{what}`: {detail}")]
    MalformedTable { what: String, detail: String },

    #[error("operation signatures differ: {0}")]
    SignatureMismatch(String),

    #[error("unknown operation name `{0}`")]
    UnknownOperationName(String),

    #[error("identity uses {0} variables, at most 4 are allowed")]
    TooManyVariables(usize),

    #[error("cannot parse identity `{text}`: {detail}")]
    IdentitySyntax { text: String, detail: String },

    #[error("unknown object {0}")]
    UnknownObject(usize),

    #[error("invalid morphism")]
    InvalidMorphism(ValidationReport),

    #[error("invalid action")]
    InvalidAction(ValidationReport),

    #[error("morphism is not a covering morphism")]
    NotACovering(ValidationReport),

    #[error("characteristic group of the lifted morphism is not contained in that of the covering")]
    CharacteristicGroupNotContained(ValidationReport),

    #[error("basepoints disagree: the cover sends its basepoint to {cover}, the map sends its basepoint to {map}")]
    BasepointMismatch { cover: usize, map: usize },

    #[error("groupoid is not transitive: {0}")]
    NotTransitive(String),

    #[error("subset is not a subgroup of the object group")]
    NotASubgroup(ValidationReport),

    #[error("subset is not a subobject")]
    NotASubobject(ValidationReport),

    #[error("component `{component}` is invalid")]
    ComponentInvalid {
        component: String,
        report: ValidationReport,
    },

    #[error("isomorphism search exceeded its budget: {0}")]
    SearchBudgetExceeded(String),
}

impl Error {
    pub(crate) fn malformed(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::MalformedTable {
            what: what.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn component(component: impl Into<String>, report: ValidationReport) -> Self {
        let component = component.into();
        Error::ComponentInvalid {
            report: report.scoped(&component),
            component,
        }
    }

    /// Counterexamples carried by the error, if any.
    pub fn report(&self) -> Option<&ValidationReport> {
        match self {
            Error::InvalidMorphism(r)
            | Error::InvalidAction(r)
            | Error::NotACovering(r)
            | Error::CharacteristicGroupNotContained(r)
            | Error::NotASubgroup(r)
            | Error::NotASubobject(r)
            | Error::ComponentInvalid { report: r, .. } => Some(r),
            _ => None,
        }
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedTable { .. } => "MalformedTable",
            Error::SignatureMismatch(_) => "SignatureMismatch",
            Error::UnknownOperationName(_) => "UnknownOperationName",
            Error::TooManyVariables(_) => "TooManyVariables",
            Error::IdentitySyntax { .. } => "IdentitySyntax",
            Error::UnknownObject(_) => "UnknownObject",
            Error::InvalidMorphism(_) => "InvalidMorphism",
            Error::InvalidAction(_) => "InvalidAction",
            Error::NotACovering(_) => "NotACovering",
            Error::CharacteristicGroupNotContained(_) => "CharacteristicGroupNotContained",
            Error::BasepointMismatch { .. } => "BasepointMismatch",
            Error::NotTransitive(_) => "NotTransitive",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::NotASubobject(_) => "NotASubobject",
            Error::ComponentInvalid { .. } => "ComponentInvalid",
            Error::SearchBudgetExceeded(_) => "SearchBudgetExceeded",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
