//! Lawrence-Krammer representations of Artin-Tits monoids of small type.

pub mod cli;
pub mod coxeter;
pub mod faithcheck;
pub mod families;
pub mod laurent;
pub mod lkcore;
pub mod rootsys;
pub mod twisted;
