from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from alpha_spectra import families as fam
from alpha_spectra.graph import GraphError, from_edges
from alpha_spectra.graph6 import decode, encode, read_file, write_file
from helpers import graphs, to_nx


def test_known_strings():
    assert encode(fam.path(2)) == "A_"
    assert encode(from_edges(1, [])) == "@"


@given(graphs(max_n=11))
def test_round_trip(g):
    assert decode(encode(g)) == g


@given(graphs(max_n=12))
def test_matches_reference_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert encode(g) == ref


def test_long_order_prefix():
    g = fam.path(64)
    text = encode(g)
    assert text.startswith("~")
    assert decode(text) == g
    assert encode(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_header_is_accepted():
    assert decode(">>graph6<<A_") == fam.path(2)


@pytest.mark.parametrize("bad", ["", "A", "A__", "\x01", "?"])
def test_malformed(bad):
    with pytest.raises(GraphError):
        decode(bad)


def test_file_round_trip(tmp_path):
    gs = [fam.path(5), fam.cycle(7), fam.f_family(3, 4)]
    path = tmp_path / "g.g6"
    assert write_file(path, gs) == 3
    assert list(read_file(path)) == gs
