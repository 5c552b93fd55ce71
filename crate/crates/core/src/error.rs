use thiserror::Error;

/// The Mackey functor axiom that failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `conj ∘ res = res`
    ConjRes,
    /// `tr ∘ conj = tr`
    TrConj,
    /// `conj^p = id`
    ConjOrder,
    /// `res ∘ tr = Σ conj^i`
    Double,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::ConjRes => "conj ∘ res = res",
            Axiom::TrConj => "tr ∘ conj = tr",
            Axiom::ConjOrder => "conj^p = id",
            Axiom::Double => "res ∘ tr = Σ conj^i",
        };
        f.write_str(s)
    }
}

/// The commuting square of a Mackey functor homomorphism that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Square {
    Conj,
    Res,
    Tr,
}

impl std::fmt::Display for Square {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Square::Conj => "f_e ∘ conj = conj ∘ f_e",
            Square::Res => "f_e ∘ res = res ∘ f_fix",
            Square::Tr => "f_fix ∘ tr = tr ∘ f_e",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(
        "map is not well defined: relation column {column} does not map into the target relations"
    )]
    IllDefined { column: usize },
    #[error("composition through mismatched presentations")]
    MismatchedPresentation,
    #[error("generator {column} does not lift through the given map")]
    NotLiftable { column: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("Mackey axiom violated: {0}")]
    Axiom(Axiom),
    #[error("homomorphism square does not commute: {0}")]
    Square(Square),
    #[error("endomorphism does not satisfy c^p = id")]
    ConjugationOrder,
    #[error("composite of the given maps is not zero")]
    NonzeroComposite,
    #[error("Mackey functor is not cohomological")]
    NotCohomological,
    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
