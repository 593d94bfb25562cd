pub mod curvelattice;
pub mod ellcurve;
pub mod exactfield;
pub mod fgcert;
pub mod lineaction;
pub mod perm;
pub mod verifier;
