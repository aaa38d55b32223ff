use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    // Structural violations detected while loading a network.
    #[error("node id must be nonempty")]
    EmptyNodeId,
    #[error("duplicate node id `{0}`")]
    DuplicateNode(String),
    #[error("concept node `{0}` must not carry a language")]
    ConceptWithLang(String),
    #[error("edge {child} -> {parent} references unknown node `{missing}`")]
    DanglingEndpoint {
        child: String,
        parent: String,
        missing: String,
    },
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {child} -> {parent} of type `{link_type}`")]
    DuplicateEdge {
        child: String,
        parent: String,
        link_type: String,
    },
    #[error("cycle detected: {}", .0.join(" -> "))]
    Cycle(Vec<String>),
    #[error("network has no root")]
    NoRoot,
    #[error("multiple roots: {}", .0.join(", "))]
    MultipleRoots(Vec<String>),
    #[error("node `{0}` does not reach the root")]
    Unreachable(String),
    #[error("invalid weight {value} for link type `{link_type}`: weights must be finite and nonnegative")]
    InvalidWeight { link_type: String, value: f64 },
    #[error("normalization map is not idempotent: `{0}` is both a source and a replacement")]
    OverlappingNormalization(String),

    // Query-time errors.
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("unknown word `{0}`")]
    UnknownWord(String),
    #[error("nodes `{0}` and `{1}` are not in an ancestor relation")]
    NotRelated(String, String),
    #[error("aggregate must contain at least one node")]
    EmptyAggregate,
    #[error("keep fraction {0} is outside (0, 1]")]
    KeepFraction(f64),
    #[error("profile `{0}` has no word present in the network")]
    UnresolvableProfile(String),
    #[error("corpus contains no sentences")]
    EmptyCorpus,
    #[error("document contains no word present in the network")]
    UnresolvableDocument,
    #[error("term spotting needs at least 2 distinct resolvable words, found {0}")]
    TooFewTerms(usize),
    #[error("reference sentence id {id} is outside the corpus (size {size})")]
    ReferenceOutOfRange { id: usize, size: usize },
    #[error("unknown expansion mechanism `{0}`")]
    UnknownMechanism(String),
    #[error("expansion request names no mechanism")]
    NoMechanism,
    #[error("translation requires a target language")]
    MissingTargetLang,
    #[error("no profiles given")]
    NoProfiles,
    #[error("duplicate profile id `{0}`")]
    DuplicateProfile(String),
    #[error("profile `{0}` has an empty definition")]
    EmptyProfile(String),
}

impl Error {
    /// True when the input was well-formed but violates a structural
    /// invariant (the CLI maps these to exit code 2).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::EmptyNodeId
                | Error::DuplicateNode(_)
                | Error::ConceptWithLang(_)
                | Error::DanglingEndpoint { .. }
                | Error::SelfLoop(_)
                | Error::DuplicateEdge { .. }
                | Error::Cycle(_)
                | Error::NoRoot
                | Error::MultipleRoots(_)
                | Error::Unreachable(_)
                | Error::InvalidWeight { .. }
                | Error::OverlappingNormalization(_)
        )
    }
}
