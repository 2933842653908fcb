"""graph6 encoding: bit-exact against an independent inline encoder."""

import random

import pytest

from qturan import families as F
from qturan.graphs import Graph, Graph6Error, parse_graph6, to_graph6
from qturan.search import enumerate_graphs, sample_gnp


def reference_encode(g: Graph) -> bytes:
    """Independent graph6 encoder straight from the format definition."""
    n = g.n
    if n <= 62:
        head = [63 + n]
    else:
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    bits = []
    for j in range(n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    groups = [
        63 + int("".join(map(str, bits[i: i + 6])), 2) if bits[i: i + 6] else 63
        for i in range(0, len(bits), 6)
    ]
    return bytes(head + groups)


def test_hand_vectors():
    assert parse_graph6(b"@") == F.complete(1)
    assert parse_graph6(b"A_") == F.complete(2)
    assert parse_graph6(b"Bw") == F.complete(3)
    assert to_graph6(F.complete(2)) == b"A_"
    assert to_graph6(F.empty(5)) == b"D??"


def test_matches_reference_encoder():
    rng = random.Random(3)
    for _ in range(200):
        g = sample_gnp(rng.randrange(0, 30), rng.random(), rng)
        assert to_graph6(g) == reference_encode(g)


def test_round_trip_exhaustive_small():
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert parse_graph6(to_graph6(g)) == g


def test_round_trip_long_form():
    rng = random.Random(9)
    for n in (63, 70, 100, 258):
        g = sample_gnp(n, 0.1, rng)
        enc = to_graph6(g)
        assert enc[0] == 126 and enc != reference_encode(F.empty(1))
        assert enc == reference_encode(g)
        assert parse_graph6(enc) == g
    t = F.turan(100, 3)
    assert parse_graph6(to_graph6(t)) == t


def test_header_prefix_tolerated():
    assert parse_graph6(b">>graph6<<Bw") == F.complete(3)


def test_error_offsets():
    with pytest.raises(Graph6Error) as ei:
        parse_graph6(bytes([30]))  # bad header byte
    assert ei.value.offset == 0
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6(b"D?")  # needs 2 payload bytes
    with pytest.raises(Graph6Error, match="padding"):
        # n=2: one payload byte, bit 1 then nonzero padding
        parse_graph6(bytes([63 + 2, 63 + 0b110000]))
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6(b"A__")
    with pytest.raises(Graph6Error):
        parse_graph6(b"")
