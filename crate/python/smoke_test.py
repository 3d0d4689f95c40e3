"""Smoke test for the symclass extension module.

Build and install first, e.g. `maturin build --release` in crates/py and
`pip install` the wheel.
"""

import symclass


def main():
    g = symclass.Group("dicyclic", 2)
    assert (g.name, g.order, g.degree) == ("T_8", 8, 8)
    assert len(g.conjugacy_classes()) == 5
    assert len(g.characters()) == 5
    assert len(g.characters(p=2)) == len(g.p_regular_classes(2)) == 1

    sd = symclass.Group("sd", 3)
    for p in (2, 3, 5):
        assert len(sd.characters(p)) == len(sd.p_regular_classes(p))

    d6 = symclass.Group("dihedral", 6)
    chars = d6.characters(5)
    two_dim = [c for c in chars if not c.is_linear]
    assert two_dim and all(c.cyclic_support()[0] for c in two_dim)
    phi = two_dim[0]
    value, approx = phi.value((False, 0))
    assert value == "2" and approx == (2.0, 0.0)
    assert phi.value((True, 1))[0] == "0"

    alpha = [1, 2, 2, 3, 2, 2]
    for s1, s2 in [((False, 1), (True, 2)), ((True, 0), (True, 3)), ((False, 2), (False, 5))]:
        assert phi.inner_product(alpha, s1, s2) == phi.inner_product(alpha, s1, s2, direct=True)

    rows = symclass.orbital_dims("dicyclic", 6, 3, "psi_hat[b=1]")
    assert all(r["predicted"] == r["rank_gram"] == r["rank_m"] == r["circulant"] for r in rows)
    assert {r["rank_gram"] for r in rows} <= {0, 2}

    verdict = symclass.obasis("dicyclic", 6, 3, "psi_hat[b=1]")
    assert verdict["predicted"] == verdict["observed"]

    report = symclass.verify(families=[("dicyclic", 2, 3)], primes=[3], dim_v=(2, 2))
    assert report["all_agree"] and report["cases"]
    assert set(report["cases"][0]) >= {"family", "dimV", "agree"}

    try:
        symclass.Group("cyclic", 4)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown family accepted")

    print(f"symclass {symclass.__version__}: ok ({len(report['cases'])} sweep records)")


if __name__ == "__main__":
    main()
