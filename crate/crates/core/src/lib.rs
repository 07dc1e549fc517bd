#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod action;
pub mod category;
pub mod field;
pub mod graded;
pub mod idempotents;
pub mod linalg;
pub mod modules;
pub mod monoid;
pub mod nakayama;
pub mod orbit;
pub mod presentation;
pub mod random;
pub mod quiver;
pub mod rewrite;
pub mod skew;
#[cfg(test)]
mod testing;
