//! Plan files shipped with the crate, embedded at compile time.

use crate::construct::{parse_plan, SwapPlan};
use crate::error::Result;

pub const LAPLACIAN_P3: &str = include_str!("../fixtures/laplacian_p3.plan");
pub const DL_K2: &str = include_str!("../fixtures/dl_k2.plan");
pub const DL_PAW: &str = include_str!("../fixtures/dl_paw.plan");
pub const K33_PRISM: &str = include_str!("../fixtures/k33_prism.plan");
pub const ADJ_DL: &str = include_str!("../fixtures/adj_dl.plan");
pub const ADJ_DL_IRREGULAR: &str = include_str!("../fixtures/adj_dl_irregular.plan");

pub const ALL: [(&str, &str); 6] = [
    ("laplacian_p3", LAPLACIAN_P3),
    ("dl_k2", DL_K2),
    ("dl_paw", DL_PAW),
    ("k33_prism", K33_PRISM),
    ("adj_dl", ADJ_DL),
    ("adj_dl_irregular", ADJ_DL_IRREGULAR),
];

pub fn load(text: &str) -> SwapPlan {
    parse_plan(text).expect("bundled plan parses")
}

pub fn by_name(name: &str) -> Option<Result<SwapPlan>> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| parse_plan(text))
}
