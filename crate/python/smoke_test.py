"""Smoke test for the cages_py extension.

Build first with `pip install --no-build-isolation -e crates/py`, then run
`python python/smoke_test.py` from the repository root.
"""

from pathlib import Path

import networkx as nx

import cages_py as cp

ROOT = Path(__file__).resolve().parent.parent


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order()))
    h.add_edges_from(g.edges())
    return h


def main():
    assert cp.moore_bound(3, 5) == 10
    assert cp.sauer_bound(3, 5) == 16

    petersen = cp.Graph.from_graph6("IheA@GUAo")
    assert petersen.order() == 10 and petersen.size() == 15
    assert petersen.girth() == 5
    assert cp.verify(petersen, 3, 5) is None
    assert "girth" in cp.verify(petersen, 3, 6)
    assert nx.is_isomorphic(to_nx(petersen), nx.petersen_graph())
    assert cp.Graph(10, list(nx.petersen_graph().edges())).certificate() == petersen.certificate()

    out = cp.subdivide_two(petersen, 5)
    assert out
    for g, recipe in out:
        assert g.order() == 12 and cp.verify(g, 3, 5) is None
        assert cp.replay(recipe).is_isomorphic(g)

    cover, _ = cp.canonical_double_cover(petersen)
    assert cover.is_bipartite() and cover.order() == 20

    try:
        cp.moore_tree_double(petersen, 1)
    except cp.CagesError as e:
        assert "GirthNotPreserved" in str(e)
    else:
        raise AssertionError("expected GirthNotPreserved")

    cubic = cp.enumerate_regular(3, 10, 5)
    assert len(cubic) == 1 and cubic[0].is_isomorphic(petersen)
    assert cp.enumerate_regular(4, 9, 4) == []

    g36, _ = cp.gdgp(2, 18, [5, 5])
    assert g36.order() == 36 and g36.girth() == 8

    res = cp.spectrum(3, 5, 40, str(ROOT / "data" / "seeds"), "subdivisions")
    assert res["n_kg"] == 10 and res["n_candidate"] == 10
    assert all(res["states"][n] == "Realized" for n in range(10, 41, 2))
    print(res["summary"])
    print("smoke test passed")


if __name__ == "__main__":
    main()
