//! Binary spatter codes in geometric-algebra form.
//!
//! Symbols are basis blades of a Euclidean Clifford algebra indexed by bit
//! strings. Binding a role to a filler is their geometric product, which is
//! the XOR of the strings up to a sign; chunking is addition of
//! multivectors; unbinding multiplies by the role's inverse blade. A dense
//! Pauli-matrix representation ([`cartan`]) serves as an independent oracle
//! and the classic XOR/majority codec ([`codec::classic_encode`]) as the
//! baseline.
//!
//! Bit strings are written with position 1 first: `"1100"` is `e_1 e_2`.

pub mod bench;
pub mod blade;
pub mod cartan;
pub mod codec;
pub mod error;
pub mod format;
pub mod multivector;
pub mod verify;

pub use blade::{
    blade_inverse, geometric_product, grade, product_sign, product_sign_reference, xor_of,
    BladeIndex, SignedBlade,
};
pub use cartan::{blade_matrix, generator_matrix, kron, pauli, rep, trace, ComplexMatrix};
pub use codec::{
    classic_bind, classic_decode, classic_encode, ga_decode, ga_decode_with, ga_encode, hamming,
    majority_chunk, CleanupMemory, EncodedRecord, Metric, SymbolTable,
};
pub use error::{Error, Result};
pub use multivector::Multivector;
