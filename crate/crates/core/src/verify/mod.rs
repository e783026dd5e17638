//! Independent checks: quadrature of the defining integrals, the table of
//! published values, and randomized addition-theorem identities.

pub mod consistency;
pub mod corpus;
pub mod oracle;
pub mod quadrature;
pub mod sampling;

pub use consistency::{
    rd_cyclic_residual, run_consistency_suite, ConsistencyCase, ConsistencyReport, Identity,
};
pub use corpus::{
    builtin_corpus, check_corpus, library_eval, library_eval_with_override, parse_corpus,
    run_check_corpus, CheckRecord, CorpusReport,
};
pub use oracle::{oracle_eval, quartic_oracle, Integrand, OracleSpec, ORACLE_TARGET};
pub use sampling::{admissible_args, random_real_zero_quartic, run_oracle_comparison, OracleReport};
