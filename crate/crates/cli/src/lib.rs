//! IO, catalogs, randomized samplers, parallel enumeration, and the
//! verification suites behind the `petrial` command-line tool.

pub mod catalog;
pub mod explore;
pub mod input;
pub mod output;
pub mod parallel;
pub mod random;
pub mod verify;
