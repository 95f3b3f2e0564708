mod basic;
mod catalan;
mod common;
mod lists;
mod theorems;

pub use catalan::convergent_family;

use super::IdentityRecord;

pub(super) fn all() -> Vec<IdentityRecord> {
    let mut out = basic::records();
    out.extend(theorems::records());
    out.extend(lists::records());
    out.extend(catalan::records());
    out
}
