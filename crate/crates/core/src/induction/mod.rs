//! Exact Mackey inner products of monomially induced characters,
//! certified decompositions, and the eta dispatcher.

mod certify;
mod descriptor;
mod eta;
mod mackey;

pub use certify::{
    certify_decomposition, parse_element, parse_subgroup, CertificateDoc, ConstituentDoc,
    DecompositionCertificate, DescriptorDoc,
};
pub use descriptor::MonomialDescriptor;
pub use eta::{central_extension_split, eta, CentralSplit, EtaResult, StrategyHint, WreathStructure};
pub use mackey::mackey_inner_product;

#[cfg(test)]
mod tests;
