from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from skeleton_lab.skeletons import SkeletonGraph


def closure_oracle(facets, n):
    """Every intersection of a nonempty family of facets, by subset enumeration."""
    masks = [sum(1 << v for v in f) for f in facets]
    out = {(1 << n) - 1, 0}
    for size in range(1, len(masks) + 1):
        for family in combinations(masks, size):
            m = (1 << n) - 1
            for f in family:
                m &= f
            out.add(m)
    return out


def to_networkx(G: SkeletonGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.nodes)
    H.add_edges_from(G.edges())
    return H


def random_graph(rng: random.Random, n: int, p: float) -> SkeletonGraph:
    edges = [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p]
    return SkeletonGraph(range(n), edges)


def min_cut_by_enumeration(G: SkeletonGraph) -> int:
    """Smallest node set whose removal disconnects, via networkx connectivity tests."""
    H = to_networkx(G)
    n = len(G)
    for size in range(n - 1):
        for removed in combinations(G.nodes, size):
            rest = H.subgraph(set(G.nodes) - set(removed))
            if not nx.is_connected(rest):
                return size
    return max(n - 1, 0)


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(label: str, passed: bool, detail: str = ""):
        ACCEPTANCE_RESULTS[label] = (passed, detail)
        print(f"[{'PASS' if passed else 'FAIL'}] {label} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        passed, detail = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
