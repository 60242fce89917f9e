"""Smoke test for the intervalcol extension module.

Build and install first, e.g.:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/intervalcol-*.whl
"""

import intervalcol as ic


def main():
    k8 = ic.Graph.complete(8)
    assert (k8.vertex_count, k8.edge_count) == (8, 28)
    assert k8.degree(3) == 7 and not k8.is_triangle_free()

    c = ic.construct(4)
    assert c.span == 10 and len(c) == 28
    assert c.colors_used() == list(range(1, 11))
    report = ic.verify_interval(k8, c)
    assert report.verdict and report.violations == []
    assert ic.verify_interval(k8, c.reflected())

    k4 = ic.Graph.complete(4)
    assert ic.construct(2).to_dict() == {
        (1, 2): 1, (1, 3): 2, (1, 4): 3, (2, 3): 3, (2, 4): 2, (3, 4): 4,
    }
    assert ic.palette(k4, ic.construct(2), 3) == [2, 3, 4]
    assert ic.classify_edge(4, 2, 5) == 5
    assert sum(row[1] for row in ic.case_stats(4)) == 28

    bad = dict(c.to_dict())
    bad[(1, 2)] = bad[(1, 3)]
    report = ic.verify_interval(k8, ic.EdgeColoring(10, bad))
    assert not report.verdict
    assert any(kind == "NotProper" for kind, _ in report.violations)

    assert ic.verify_interval(ic.Graph.complete(10), ic.round_robin(5))

    b = ic.bounds_for_k2n(3)
    assert b["lower.construction"] == 7 and b["lower.logarithmic"] == 7
    assert b["upper.twice_order_minus_4"] == 8 and b["upper.twice_order_minus_3"] == 9
    assert b["upper.triangle_free"] is None

    status, nodes, witness = ic.find_interval_coloring(k4, 4)
    assert status == "found" and ic.verify_interval(k4, witness)
    assert ic.find_interval_coloring(k4, 5)[0] == "exhausted"
    w, complete, _ = ic.compute_w(ic.Graph.complete(6))
    assert 7 <= w <= 8 and complete

    text = ic.emit_coloring(k8, c)
    assert text.startswith("c 8 10\n")
    assert ic.parse_coloring(text, k8) == c
    g, c2 = ic.parse_coloring_with_graph(text)
    assert g.edge_count == 28 and c2 == c
    assert ic.emit_graph(ic.parse_graph("p 2 1\ne 1 2\n")) == "p 2 1\ne 1 2\n"
    try:
        ic.parse_graph("p 2 1\ne 1 2\ne 1 2\n")
    except ValueError as e:
        assert "line 3" in str(e)
    else:
        raise AssertionError("duplicate edge accepted")

    print(f"intervalcol smoke test passed (W(K_6) = {w})")


if __name__ == "__main__":
    main()
