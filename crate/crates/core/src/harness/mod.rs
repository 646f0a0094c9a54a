pub mod corpus;
pub mod paper_suite;
