pub mod analytic;
pub mod compute;
pub mod expected;
pub mod generate;
pub mod montecarlo;
pub mod reproduce;
pub mod stats;
pub mod verify;
