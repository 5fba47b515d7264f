"""Quick end-to-end check of the Python bindings. Run after `maturin develop`."""

import pbwdegen as pd


def main() -> None:
    zero = pd.WeightSystem.zero(3)
    assert zero.in_cone() and not zero.is_interior()
    assert pd.WeightSystem.constant(3, 1).is_interior()
    assert not pd.WeightSystem(3, {(1, 3): 5}).in_cone()

    toric = pd.WeightSystem.toric(4)
    assert toric.degree([1]) == 0
    assert all(v == 0 for k, v in toric.degrees().items() if k in ("1", "1,2", "1,2,3"))

    assert len(pd.plucker_relations(3)) == 1
    assert len(pd.plucker_relations(4)) == 10
    assert pd.fflv_count([1, 0, 1]) == pd.weyl_dim([1, 0, 1]) == 15
    assert pd.minkowski_check([1, 1], [1, 0])

    t = pd.tau([1, 1], [[3, 2], [3]])
    assert pd.zeta(t, [1, 1]) == [[3, 2], [3]]

    ideal = pd.PlueckerIdeal(4)
    assert ideal.component([1, 0, 1])[1] == 1
    for name, a in pd.WeightSystem.canonical(3):
        assert pd.PlueckerIdeal(3).find_monomial(a, [1, 1]) is None, name
        assert pd.cyclic_module_dim(a, [1, 1]) == 8, name
    assert all(pd.psi_check(4, ideal.relations()))
    assert all(pd.psi_check(4, ideal.initial_component(toric, [1, 1, 0]), toric))

    point = pd.map_h(toric)
    assert pd.cone_membership(4, point)[0]
    bad = {"1": 0, "2": 0, "3": 1, "1,2": 0, "1,3": 0, "2,3": 1}
    member, violations = pd.cone_membership(3, bad)
    assert not member and violations
    assert not pd.trop_check(3, bad, degree_bound=2)
    violation, relation, initial = pd.maximality_witness(3, bad)
    assert len(initial) == 1

    results = pd.run_suite(max_n=3)
    for cid, name, passed, detail, secs in results:
        print(f"[{'PASS' if passed else 'FAIL'}] {cid:2} {name} ({secs:.3f}s)")
    assert all(r[2] for r in results)
    print("smoke test ok")


if __name__ == "__main__":
    main()
