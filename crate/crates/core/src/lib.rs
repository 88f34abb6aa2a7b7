pub mod coeff;
pub mod symfunc;
pub mod plethysm;
pub mod operators;
pub mod par;
pub mod parking;
pub mod oracles;
pub mod cli;
