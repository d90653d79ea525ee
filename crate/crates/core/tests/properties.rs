mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_arithmetic((a, b, c) in triple()) {
        field_identities(&a, &b, &c)?;
    }

    #[test]
    fn nc_mul_is_associative(p in element(4), r in element(4), s in element(4)) {
        associative(&p, &r, &s)?;
    }
}

#[test]
fn braided_antipode_two_paths_on_aq2() {
    antipode_two_paths(1000).unwrap();
}
