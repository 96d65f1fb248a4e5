import random

import pytest

import lcsk

ALGORITHMS = ["dp", "sparse", "dense", "tab", "oracle", "auto"]


def test_textbook_pair():
    for algo in ALGORITHMS:
        assert lcsk.solve("ABCBDAB", "BDCABA", 1, algorithm=algo).length == 4
    assert lcsk.lcsk_length("abab", "abab", 2) == 2


def test_extraction_is_valid():
    r = lcsk.solve("abab", "abab", 2, algorithm="dp", extract=True)
    assert r.pairs == [(2, 2), (4, 4)]
    assert r.algorithm == "dp"
    assert r.elapsed_ms >= 0
    assert lcsk.verify_solution("abab", "abab", 2, r.length, r.pairs)
    assert not lcsk.verify_solution("abab", "abab", 2, 2, [(2, 2), (3, 3)])


def test_pairs_absent_without_extraction():
    assert lcsk.solve("abc", "abc", 1).pairs is None


def test_random_agreement():
    rng = random.Random(3)
    for _ in range(200):
        k = rng.randint(1, 4)
        a = "".join(rng.choice("ab") for _ in range(rng.randint(0, 40)))
        b = "".join(rng.choice("ab") for _ in range(rng.randint(0, 40)))
        lengths = set()
        for algo in ALGORITHMS:
            r = lcsk.solve(a, b, k, algorithm=algo, extract=True)
            assert lcsk.verify_solution(a, b, k, r.length, r.pairs)
            lengths.add(r.length)
        assert len(lengths) == 1


def test_bytes_input():
    data = bytes(range(256))
    assert lcsk.solve(data, data[::-1] + data, 4).length == 64


def test_invalid_inputs():
    with pytest.raises(lcsk.InvalidProblem):
        lcsk.validate("abc", "abc", 0)
    with pytest.raises(ValueError):
        lcsk.solve("aĀ", "a", 1)
    with pytest.raises(ValueError):
        lcsk.solve("a", "a", 1, algorithm="nope")
    with pytest.raises(ValueError):
        lcsk.solve("a", "a", 1, block_width=3)
    with pytest.raises(TypeError):
        lcsk.solve([1, 2], "a", 1)
    assert lcsk.validate("ÿ", "ab", 2) == (1, 2, 2)


def test_match_index():
    idx = lcsk.MatchIndex("abab", "bab", 2)
    assert idx.matches_in_row(2) == [3]
    assert idx.matches_in_row(3) == [2]
    assert idx.successor_in_row(4, 4) is None
    assert idx.row_group_id(2) == idx.row_group_id(4)
    assert idx.total_matches == 3
    assert idx.memory_bytes > 0
    r = idx.solve("sparse", True)
    assert r.length == 1
    assert lcsk.verify_solution("abab", "bab", 2, r.length, r.pairs)
    with pytest.raises(IndexError):
        idx.matches_in_row(1)


def test_selftest_and_bench():
    code, report = lcsk.selftest(cases=50, seed=7)
    assert code == 0
    assert "50 cases" in report
    rows = lcsk.bench([128], sigma=4, k=2, algorithms=["dp", "tab"], repeat=1)
    assert [row["algo"] for row in rows] == ["dp", "tab"]
    assert rows[0]["length"] == rows[1]["length"]
