"""Smoke tests for the python extension: exact values across the boundary."""

try:
    import polyhom_algebra as pa
except ImportError:  # running against the bare build tree
    import _core as pa


def doubling():
    g = pa.Group.cyclic(4)
    gm = pa.Measured(g, "1/1")
    rel = pa.Relation.generate(g, g, [(1, 2)])
    return gm, pa.Polyhom.make(rel, "1/2", gm, gm)


def test_group_basics():
    g = pa.Group.cyclic(6)
    assert g.order() == 6
    assert g.op(4, 5) == 3
    s = pa.Subgroup.generate(g, [2])
    assert s.elements() == [0, 2, 4]
    assert pa.subgroup_index(pa.Subgroup.generate(g, [1]), s) == 2


def test_weighted_relation_densities():
    gm, p = doubling()
    assert p.alpha() == "1/2"
    assert p.beta() == "1/1"
    s = pa.compose(p, p)
    assert s.alpha() == "1/4"
    assert s.weight() == "1/4"
    assert pa.involution(p).alpha() == "1/1"


def test_operator_matrix_is_exact():
    _, p = doubling()
    m = p.matrix()
    assert m[1][2] == "1/2"
    assert m[1][0] == "0/1"


def test_decomposition_recomposes():
    _, p = doubling()
    q, s, t = pa.decompose(p)
    assert pa.compose(t, pa.compose(s, q)) == p


def test_window_model():
    win = pa.Window(2, 3)
    th = pa.theta(win, 1)
    assert th.marginal_dims() == (4, 4, 2, 2)
    assert th.alpha() == "1/1"
    ident = pa.FpPolyhom.identity(win)
    assert pa.sandwich(ident, win, 1) == th
    assert pa.box_discrepancy(pa.sandwich(th, win, 2), th, win, 1, 1) == "0/1"
    g = pa.realize_finitary(ident, win, 1)
    assert g is not None


def test_chi_alpha():
    rows = [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    c = pa.chi(2, 1, 2, rows)
    assert c.alpha() == "1/2"  # the corner block has rank one


def test_script_session():
    s = pa.run_script(
        "group G = cyclic 4\n"
        "measured GM = G pointmass 1/1\n"
        "relation R : G -> G = generated { (1,2) }\n"
        "polyhom P : GM -> GM { relation = R; weight = 1/2 }\n"
    )
    assert s.polyhom("P").alpha() == "1/2"


def test_verify_suite():
    results = pa.verify("theta")
    assert all(r["ok"] for r in results)
