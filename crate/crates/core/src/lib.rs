pub mod apoly;
pub mod knot;
pub mod perturb;
pub mod pillowcase;
pub mod polyalg;
pub mod slicecheck;
