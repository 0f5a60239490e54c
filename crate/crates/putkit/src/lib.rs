//! Numerical toolkit for the privacy-utility tradeoff (PUT) of hypothesis
//! testing against independence over a noisy channel.
//!
//! A source pair `(U, V) ~ P_UV` is tested against independence by a detector
//! that sees `V` directly and sees `U` only through a memoryless privacy
//! mechanism `P_Z|U`, an encoder and a noisy channel `P_Y|X` with bandwidth
//! expansion ratio `tau`. The mechanism leakage `I(U;Z)` is capped by a budget
//! `L`. This crate computes, for finite alphabets:
//!
//! * the asymptotic tradeoff value and whole tradeoff curves ([`put`]),
//!   together with a brute-force grid oracle for desk-scale instances,
//! * channel capacity via Blahut-Arimoto with a certified gap ([`capacity`]),
//! * the Lagrangian dual of the tradeoff, its minimization over multipliers
//!   and the KL-penalized perturbed dual ([`dual`]),
//! * the finite-blocklength converse bound with its Berry-Esseen margin
//!   ([`bound`]),
//! * chi-square (Euclidean) approximations in the high-privacy limit
//!   ([`euclid`]),
//! * Monte-Carlo validation of the information-density concentration step
//!   ([`mc`]).
//!
//! All information quantities are in nats. Alphabets are identified by their
//! size; symbols are indices `0..n`.

pub mod bound;
pub mod capacity;
pub mod dual;
pub mod euclid;
pub mod mc;
pub mod optim;
pub mod prob;
pub mod put;

mod error;

pub use error::{Error, Result};
