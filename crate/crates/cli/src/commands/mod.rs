//! One module per subcommand; each returns a [`crate::report::Report`].

pub mod corollary;
pub mod crosscheck;
pub mod cubics;
pub mod hyper;
pub mod k20;
pub mod np_example;
pub mod prop_minus1;
pub mod sweep_cmd;
pub mod theorem;
