pub mod error;
pub mod numerics;
pub mod qcalc;
pub mod stfib;
pub mod dbhs;
pub mod catalog;
pub mod cli;
