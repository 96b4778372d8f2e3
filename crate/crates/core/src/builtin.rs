//! Reference data shipped with the crate.
//!
//! | name        | G        | ι                 | D               | d | t |
//! |-------------|----------|-------------------|-----------------|---|---|
//! | `ell-c2`    | C₂       | the generator     | trivial         | 1 | 1 |
//! | `biq-c2c2`  | C₂ × C₂  | (0 1)             | trivial         | 1 | 2 |
//! | `s3c2`      | S₃ × C₂  | (3 4)             | ⟨(0 1)⟩         | 2 | 3 |
//!
//! `S₃ × C₂` acts on six points: `S₃` on `{0,1,2}`, `C₂` on `{3,4}`, point 5
//! fixed.

use alloc::vec;

use crate::datum::CmGaloisDatum;
use crate::group::{group_from_generators, Element, FiniteGroup};

pub const BUILTIN_NAMES: [&str; 3] = ["ell-c2", "biq-c2c2", "s3c2"];

pub fn by_name(name: &str) -> Option<CmGaloisDatum> {
    match name {
        "ell-c2" => Some(ell_c2()),
        "biq-c2c2" => Some(biq_c2c2()),
        "s3c2" => Some(s3c2()),
        _ => None,
    }
}

/// Element of a permutation group with the given image.
pub fn element_by_image(group: &FiniteGroup, image: &[usize]) -> Option<Element> {
    group.elements().find(|&g| group.permutation(g) == Some(image))
}

pub fn ell_c2() -> CmGaloisDatum {
    let g = group_from_generators(2, &[vec![1, 0]]).expect("C2");
    CmGaloisDatum::new(&g, 1, &[]).expect("ell-c2 datum")
}

pub fn biq_c2c2() -> CmGaloisDatum {
    let g = group_from_generators(4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]).expect("C2xC2");
    let iota = element_by_image(&g, &[1, 0, 2, 3]).expect("iota");
    CmGaloisDatum::new(&g, iota, &[]).expect("biq-c2c2 datum")
}

pub fn s3c2_group() -> FiniteGroup {
    group_from_generators(6, &[vec![1, 0, 2, 3, 4, 5], vec![1, 2, 0, 3, 4, 5], vec![0, 1, 2, 4, 3, 5]]).expect("S3xC2")
}

pub fn s3c2() -> CmGaloisDatum {
    let g = s3c2_group();
    let iota = element_by_image(&g, &[0, 1, 2, 4, 3, 5]).expect("iota");
    let transposition = element_by_image(&g, &[1, 0, 2, 3, 4, 5]).expect("(0 1)");
    CmGaloisDatum::new(&g, iota, &[transposition]).expect("s3c2 datum")
}

/// `C₆ = C₃ × C₂` on five points with ι = (3 4); the smallest group giving
/// a CM type of size three.
pub fn cyclic_c6() -> CmGaloisDatum {
    let g = group_from_generators(5, &[vec![1, 2, 0, 3, 4], vec![0, 1, 2, 4, 3]]).expect("C6");
    let iota = element_by_image(&g, &[0, 1, 2, 4, 3]).expect("iota");
    CmGaloisDatum::new(&g, iota, &[]).expect("c6 datum")
}
