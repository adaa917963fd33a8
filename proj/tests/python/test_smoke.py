"""Smoke tests for the pygelfand module."""

import json

import pygelfand as pg


def test_partitions():
    assert pg.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert pg.transpose([3, 1]) == [2, 1, 1]
    assert pg.odd_columns([4, 2]) == 2
    assert pg.count_syt([3, 2]) == 5
    assert [2, 2, 2] in pg.pieri_add_two([2, 2])
    assert len(pg.rpartite_partitions(3, 2)) == 9


def test_mn_character():
    assert pg.mn_character([2, 1], [1, 1, 1]) == 2
    assert pg.mn_character([1, 1, 1], [2, 1]) == -1


def test_signs():
    assert pg.sign_cyclic(2, 1, 1) == -1
    assert pg.sign_cyclic(3, 2, 2) == 1
    # sign_rn and sign_wreath agree on a sample
    g = ([2, 1], [1, 0])
    w = ([1, 2], [3, 0])
    assert pg.sign_rn(4, g[0], g[1], w[0], w[1]) == pg.sign_wreath(
        [4], g[0], g[1], w[0], w[1]
    )


def test_counts_and_gelfand():
    involutions, degree_sum, ok = pg.counts([2], 2)
    assert (involutions, degree_sum, ok) == (6, 6, True)
    report = pg.verify_gelfand([2], 2)
    assert report["pass"]
    assert report["model_dimension"] == 6
    assert all(m == 1 for _, m in report["multiplicities"])


def test_gim_and_main_prop():
    assert pg.verify_gim([3], 2)["pass"]
    rep = pg.verify_main_prop([3], 1)
    assert rep["pass"] and rep["index"] == rep["degree_total"]


def test_colored_rsk():
    out = pg.colored_rsk(2, [2, 1, 3], [1, 1, 0])
    assert out["shape"] == "([1],[1,1])"
    assert out["P"] == out["Q"]  # symmetric input


def test_rsk_theorem():
    rep = pg.verify_rsk_theorem([2], 2)
    assert rep["pass"]
    assert rep["span_size"] == rep["syt_total"] == 6


def test_table1():
    row = pg.table1(8, 3)
    assert row["verified"] and row["multiplicity_two"]
    assert "(4,3,1) with multiplicity two" in row["description"]


def test_character_table_json():
    table = json.loads(pg.character_table_json([2], 2))
    assert len(table["irreducibles"]) == 5
    assert len(table["classes"]) == 5
