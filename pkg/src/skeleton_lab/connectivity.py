"""Exact vertex connectivity with Menger certificates.

Connectivity is computed by unit-capacity max-flow on the node-split digraph
(Dinic's blocking flows), over the pair set of Esfahanian and Hakimi: a fixed
minimum-degree node against each of its non-neighbours, then the non-adjacent
pairs among its neighbours.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .constructors import CoordinatizedPolytope
from .linalg import affine_dimension
from .skeletons import SkeletonGraph, skeleton_graph

log = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 12


class CertificateError(AssertionError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ConnectivityCertificate:
    kappa: int
    min_cut: tuple[int, ...] | None
    paths: tuple[tuple[int, ...], ...]
    pair: tuple[int, int] | None

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "min_cut": list(self.min_cut) if self.min_cut is not None else None,
            "pair": list(self.pair) if self.pair is not None else None,
            "paths": [list(p) for p in self.paths],
        }


class _SplitFlow:
    """Node-split flow network; node i becomes in = 2i and out = 2i + 1."""

    def __init__(self, G: SkeletonGraph, s: int, t: int):
        self.pos = {v: i for i, v in enumerate(G.nodes)}
        self.ids = G.nodes
        n = 2 * len(G.nodes)
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        big = len(G.nodes)
        si, ti = self.pos[s], self.pos[t]
        for v in G.nodes:
            i = self.pos[v]
            self._arc(2 * i, 2 * i + 1, big if i in (si, ti) else 1)
        for v in G.nodes:
            i = self.pos[v]
            if i == ti:
                continue
            for u in G.adj[v]:
                j = self.pos[u]
                if j == si:
                    continue
                self._arc(2 * i + 1, 2 * j, big)
        self.source = 2 * si + 1
        self.sink = 2 * ti

    def _arc(self, a: int, b: int, c: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def _levels(self) -> list[int] | None:
        level = [-1] * len(self.head)
        level[self.source] = 0
        queue = deque([self.source])
        while queue:
            a = queue.popleft()
            for e in self.head[a]:
                b = self.to[e]
                if self.cap[e] > 0 and level[b] < 0:
                    level[b] = level[a] + 1
                    queue.append(b)
        return level if level[self.sink] >= 0 else None

    def _augment(self, level: list[int], it: list[int]) -> bool:
        """Push one unit along a shortest residual path; False when blocked."""
        stack = [self.source]
        used: list[int] = []
        while stack:
            a = stack[-1]
            if a == self.sink:
                for e in used:
                    self.cap[e] -= 1
                    self.cap[e ^ 1] += 1
                return True
            arcs = self.head[a]
            while it[a] < len(arcs):
                e = arcs[it[a]]
                b = self.to[e]
                if self.cap[e] > 0 and level[b] == level[a] + 1:
                    break
                it[a] += 1
            else:
                stack.pop()
                if used:
                    e = used.pop()
                    it[self.to[e ^ 1]] += 1
                continue
            e = arcs[it[a]]
            used.append(e)
            stack.append(self.to[e])
        return False

    def run(self, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            level = self._levels()
            if level is None:
                break
            it = [0] * len(self.head)
            while (limit is None or flow < limit) and self._augment(level, it):
                flow += 1
        return flow

    def cut(self) -> tuple[int, ...]:
        seen = [False] * len(self.head)
        seen[self.source] = True
        queue = deque([self.source])
        while queue:
            a = queue.popleft()
            for e in self.head[a]:
                b = self.to[e]
                if self.cap[e] > 0 and not seen[b]:
                    seen[b] = True
                    queue.append(b)
        return tuple(
            self.ids[i] for i in range(len(self.ids)) if seen[2 * i] and not seen[2 * i + 1]
        )

    def paths(self) -> tuple[tuple[int, ...], ...]:
        used = {}
        for a, arcs in enumerate(self.head):
            for e in arcs:
                # forward arcs sit at even indices; flow shows as reverse capacity
                if e % 2 == 0 and self.cap[e ^ 1] > 0:
                    used.setdefault(a, []).append(e)
        out = []
        src_arcs = sorted(used.get(self.source, []), key=lambda e: self.to[e])
        for e in src_arcs:
            path = [self.ids[self.source // 2]]
            node = self.to[e]
            while node != self.sink:
                # node is an "in" copy; step through to its "out" copy
                out_node = node + 1
                path.append(self.ids[node // 2])
                nxt = [x for x in used.get(out_node, []) if self.cap[x ^ 1] > 0]
                e2 = min(nxt, key=lambda x: self.to[x])
                self.cap[e2 ^ 1] -= 1
                node = self.to[e2]
            path.append(self.ids[self.sink // 2])
            out.append(tuple(path))
        return tuple(out)


def local_connectivity(G: SkeletonGraph, s: int, t: int) -> tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Maximum number of internally disjoint s-t paths, a matching cut, and the paths."""
    if G.has_edge(s, t) or s == t:
        raise ValueError("local connectivity needs distinct non-adjacent nodes")
    net = _SplitFlow(G, s, t)
    value = net.run()
    cut = net.cut()
    return value, cut, net.paths()


def _candidate_pairs(G: SkeletonGraph) -> list[tuple[int, int]]:
    s = min(G.nodes, key=lambda v: (G.degree(v), v))
    nbrs = set(G.adj[s])
    pairs = [(s, t) for t in G.nodes if t != s and t not in nbrs]
    pairs += [(x, y) for x, y in combinations(G.adj[s], 2) if not G.has_edge(x, y)]
    return pairs


def vertex_connectivity(G: SkeletonGraph) -> ConnectivityCertificate:
    n = len(G)
    if n <= 1:
        return ConnectivityCertificate(0, None, (), None)
    if G.is_complete():
        return ConnectivityCertificate(n - 1, None, (), None)
    best = None
    best_pair = None
    for s, t in _candidate_pairs(G):
        net = _SplitFlow(G, s, t)
        value = net.run(limit=best)
        if best is None or value < best:
            best, best_pair = value, (s, t)
            if best == 0:
                break
    s, t = best_pair
    value, cut, paths = local_connectivity(G, s, t)
    cert = ConnectivityCertificate(value, cut, paths, best_pair)
    verify_certificate(G, cert)
    return cert


def components(G: SkeletonGraph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    gone = set(removed)
    seen = set(gone)
    out = []
    for v in G.nodes:
        if v in seen:
            continue
        seen.add(v)
        comp = [v]
        queue = deque([v])
        while queue:
            a = queue.popleft()
            for b in G.adj[a]:
                if b not in seen:
                    seen.add(b)
                    comp.append(b)
                    queue.append(b)
        out.append(tuple(sorted(comp)))
    return out


def verify_certificate(G: SkeletonGraph, cert: ConnectivityCertificate) -> None:
    n = len(G)
    if cert.pair is None:
        expected = n - 1 if n >= 2 and G.is_complete() else 0
        if n >= 2 and not G.is_complete():
            raise CertificateError("non-complete graph certified without a witnessing pair")
        if cert.kappa != max(expected, 0):
            raise CertificateError(f"kappa {cert.kappa} != {expected} for complete graph")
        return
    s, t = cert.pair
    if G.has_edge(s, t):
        raise CertificateError("witnessing pair is adjacent")
    cut = cert.min_cut or ()
    if len(cut) != cert.kappa or len(cert.paths) != cert.kappa:
        raise CertificateError("cut size, path count and kappa disagree")
    if s in cut or t in cut:
        raise CertificateError("cut contains an endpoint of the pair")
    comps = components(G, cut)
    where = {v: i for i, c in enumerate(comps) for v in c}
    if where[s] == where[t]:
        raise CertificateError("removing the cut leaves the pair connected")
    interior: set[int] = set()
    for path in cert.paths:
        if path[0] != s or path[-1] != t:
            raise CertificateError(f"path {path} does not join the pair")
        if any(not G.has_edge(a, b) for a, b in zip(path, path[1:])):
            raise CertificateError(f"path {path} uses a non-edge")
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or interior & set(inner):
            raise CertificateError("paths are not internally disjoint")
        interior.update(inner)


def brute_force_connectivity(G: SkeletonGraph) -> int:
    """Smallest node set whose removal disconnects G, by exhaustive search."""
    n = len(G)
    for size in range(0, n - 1):
        for removed in combinations(G.nodes, size):
            if len(components(G, removed)) > 1:
                return size
    return max(n - 1, 0)


def is_m_connected(G: SkeletonGraph, m: int) -> bool:
    if m < 1:
        raise ValueError("m must be positive")
    answer = len(G) >= m + 1 and vertex_connectivity(G).kappa >= m
    if len(G) <= BRUTE_FORCE_LIMIT:
        exhaustive = len(G) >= m + 1 and all(
            len(components(G, removed)) <= 1
            for size in range(m)
            for removed in combinations(G.nodes, size)
        )
        if exhaustive != answer:
            raise CertificateError(f"flow and exhaustive search disagree for m={m}")
    return answer


@dataclass(frozen=True)
class DeletionResult:
    connected: bool
    components: tuple[tuple[int, ...], ...]


def delete_and_check(G: SkeletonGraph, V: Iterable[int]) -> DeletionResult:
    V = set(V)
    unknown = V - set(G.nodes)
    if unknown:
        raise KeyError(f"unknown nodes {sorted(unknown)}")
    comps = components(G, V)
    return DeletionResult(len(comps) <= 1, tuple(comps))


@dataclass(frozen=True)
class BalinskiResult:
    passed: bool
    affine_dim: int
    deleted: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def balinski_affine_check(P: CoordinatizedPolytope, V: Iterable[int]) -> BalinskiResult:
    """Delete vertices lying in a (d-2)-flat from the graph of P and test connectivity.

    ``V`` holds vertex indices of P.  Sets spanning more than d-2 dimensions
    are rejected as precondition violations, not counted as failures.
    """
    if P.coords is None:
        raise PreconditionError("polytope carries no coordinates")
    L = P.lattice
    V = tuple(sorted(set(V)))
    position = {v: i for i, v in enumerate(L.vertices)}
    try:
        points = [P.coords[position[v]] for v in V]
    except KeyError as exc:
        raise PreconditionError(f"unknown vertex {exc.args[0]}") from None
    adim = affine_dimension(points)
    if adim > L.dim - 2:
        raise PreconditionError(f"vertex set spans affine dimension {adim} > {L.dim - 2}")
    G = skeleton_graph(L, 0)
    result = delete_and_check(G, [L.vertex_face(v) for v in V])
    if not result.connected:
        log.error("Balinski check FAILED on %s after deleting %s", L.name, V)
    return BalinskiResult(result.connected, adim, V, result.components)
