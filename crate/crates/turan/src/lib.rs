//! Workbench companion to the core library: exhaustive extremal-value
//! search with a worker pool, verification sweeps, report files, and a
//! config-keyed result cache. The binary in this crate exposes all of
//! it on the command line.

pub mod cache;
pub mod report;
pub mod search;
pub mod verify;
