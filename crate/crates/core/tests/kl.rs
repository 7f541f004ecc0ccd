use tord::kl::{cell_order_with, kl_table, CELL_ORIENTATION};
use tord::{Engine, OrderId, OrderRelation};

#[test]
fn cell_order_sits_between_dv_and_vch() {
    let mut eng = Engine::new();
    for n in 1..=7 {
        let level = eng.level(n).unwrap();
        let table = kl_table(n).unwrap();
        let bits = cell_order_with(&table, &level, CELL_ORIENTATION).unwrap();
        let dv = eng.relation(OrderId::DV, n).unwrap();
        let vch = eng.relation(OrderId::VCh, n).unwrap();
        assert!(dv.bits.is_subset(&bits), "dv_{n} not below the cell order");
        assert!(bits.is_subset(&vch.bits), "cell order not below vch_{n}");
        if n <= 6 {
            let rel = OrderRelation::new(n, OrderId::Kl, bits);
            assert!(rel.tau_violations(&level).is_empty());
            assert!(rel.transpose_violations(&level).is_empty());
            assert!(rel.is_antisymmetric());
        }
    }
}

#[test]
fn engine_serves_the_cell_order() {
    let mut eng = Engine::new();
    let kl = eng.relation(OrderId::Kl, 5).unwrap();
    assert_eq!(kl.bits, eng.relation(OrderId::DV, 5).unwrap().bits);
}
