"""Smoke checks for the python bindings: every exposed call, round-tripped."""

import math

import emucore as em


def main():
    g = em.generate("er:128:0.06", seed=1)
    assert g.n == 128
    assert g.edge_count > 0
    assert g.edges() == em.generate("er:128:0.06", seed=1).edges()
    assert repr(g).startswith("Graph(")

    d = em.bfs_distances(g, 0)
    assert len(d) == 128
    assert d[0] == 0

    sched = em.exponent_schedule(20)
    assert sched[0] == 1.0
    assert sched[1] == 0.5
    assert abs(sched[20] - 1 / (3 + math.sqrt(5))) < 1e-6

    sp = em.greedy_spanner(g)
    assert sp["stretch_bound"] == 2 * math.ceil(math.log2(128)) - 1
    assert len(sp["edges"]) <= 3 * g.n

    cl = em.cluster(g, 2, epsilon=0.25)
    assert len(cl["centers"]) == len(cl["radii"])
    assert len(cl["centers"]) >= 1
    assert all(0 <= c < g.n for c in cl["centers"])
    assert cl["overlap_ratio"] >= 1.0

    res = em.build(g, levels=2, seed=1)
    assert res["edge_count"] == len(res["edges"])
    assert set(res["tag_counts"]) == {"spanner", "small_cluster", "recursive", "greedy"}
    assert sum(res["tag_counts"].values()) == res["edge_count"]

    rep = em.verify(g, res["edges"], res["default_bound"])  # tagged quadruples
    assert rep["ok"], rep
    assert rep["max_additive_error"] <= res["default_bound"]
    assert rep["violating_pairs"] == 0
    stripped = em.verify(g, [(u, v, w) for (u, v, w, _) in res["edges"]], res["default_bound"])
    assert stripped == rep

    tiny = em.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert tiny.neighbors(1) == [0, 2]
    assert em.build(tiny, levels=1)["default_bound"] >= 0

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
