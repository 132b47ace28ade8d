//! Exact symbolic engine for tensor powers of the quantized enveloping
//! algebra of sl2, in the normal form `coeff · D^A · (⊗ F^a K^b e^c)`.

mod dmatrix;
mod element;
mod maps;
mod slot;

pub use dmatrix::DMatrix;
pub use element::Element;
pub use maps::{ad, ad_at, nu_map, r_pair, ribbon, sad, y_adjoint, ybar, ybar_at, ydot, ydot_at};
pub use slot::{antipode_mono, k_fold, slot_mul, SlotMono};
