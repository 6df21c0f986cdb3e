"""Finite-ball exploration of the half-space subgraphs of the Cayley graph.

For a non-zero character ``chi`` the subgraph spanned by ``{g : chi(g) >= 0}``
is connected exactly when ``[chi]`` lies in Sigma^1.  A ball only sees a
finite piece of that graph, so everything here is evidence, never proof.
"""
from __future__ import annotations

from dataclasses import dataclass

from networkx.utils import UnionFind

from .group import (
    DEFAULT_BUDGET,
    Ball,
    FGGroup,
    ball,
    char_image,
    independence,
    irreducible,
)
from .plmap import Compact
from .slopegroup import CharacterSpec, char_sign, germ_sign

__all__ = [
    "CAVEAT",
    "BallGraph",
    "ComponentReport",
    "ball_graph",
    "chi_ball_components",
    "RayEvidence",
    "EvidenceReport",
    "sigma1_evidence",
]

CAVEAT = (
    "caveat: counts come from finite balls; they neither prove nor refute "
    "connectivity of the full half-space subgraph"
)


@dataclass
class BallGraph:
    """Vertices of the ball with ``chi >= 0`` and the edges ``(g, g∘x)``
    for generators ``x`` whose endpoints both survive."""

    ball: Ball
    vertices: list  # ball indices, ascending
    edges: list  # (i, j) ball indices, in discovery order


def ball_graph(G: FGGroup, spec: CharacterSpec, B: Ball) -> BallGraph:
    germs = B.germs(G)
    keep = [i for i, (lam, rho) in enumerate(germs) if germ_sign(spec, lam, rho) >= 0]
    kept = set(keep)
    nbrs = B.right_neighbors(G)
    edges = [(i, j) for i in keep for j in nbrs[i] if j is not None and j in kept]
    return BallGraph(B, keep, edges)


def _components(vertices, edges) -> list[list[int]]:
    uf = UnionFind(vertices)
    for i, j in edges:
        uf.union(i, j)
    comps = [sorted(c) for c in uf.to_sets()]
    return sorted(comps, key=lambda c: (-len(c), c[0]))


@dataclass
class ComponentReport:
    radius: int
    character: str
    vertices: int
    edges: int
    sizes: list  # component sizes at the full radius, largest first
    counts_by_radius: list  # component count of the radius-k ball, k = 0..radius

    @property
    def count(self) -> int:
        return len(self.sizes)

    def lines(self) -> list[str]:
        return [
            f"character: {self.character}",
            f"radius: {self.radius}",
            f"vertices with chi >= 0: {self.vertices}, edges: {self.edges}",
            f"components: {self.count}",
            "sizes: " + " ".join(map(str, self.sizes)),
            "components by radius: " + " ".join(f"r{k}={c}" for k, c in enumerate(self.counts_by_radius)),
            CAVEAT,
        ]


def _check_nonzero(G: FGGroup, spec: CharacterSpec):
    if spec.is_zero or all(char_sign(spec, g, G.interval) == 0 for _, g in G.generators):
        raise ValueError(f"character {spec} vanishes on the group")


def _report(G: FGGroup, spec: CharacterSpec, B: Ball) -> ComponentReport:
    graph = ball_graph(G, spec, B)
    counts = []
    for k in range(B.radius + 1):
        vs = [i for i in graph.vertices if B.lengths[i] <= k]
        es = [(i, j) for i, j in graph.edges if B.lengths[i] <= k and B.lengths[j] <= k]
        counts.append(len(_components(vs, es)))
    comps = _components(graph.vertices, graph.edges)
    return ComponentReport(B.radius, str(spec), len(graph.vertices), len(graph.edges), [len(c) for c in comps], counts)


def chi_ball_components(G: FGGroup, spec: CharacterSpec, r: int, budget: int = DEFAULT_BUDGET) -> ComponentReport:
    _check_nonzero(G, spec)
    return _report(G, spec, ball(G, r, budget))


@dataclass
class RayEvidence:
    character: str
    counts: list  # radius 1..rmax
    verdict: str


@dataclass
class EvidenceReport:
    rmax: int
    hypotheses: list  # (name, holds, detail)
    rays: list

    @property
    def hypotheses_hold(self) -> bool:
        return all(ok for _, ok, _ in self.hypotheses)

    def lines(self) -> list[str]:
        out = ["hypotheses:"]
        for name, ok, detail in self.hypotheses:
            out.append(f"  {name}: {'yes' if ok else 'NO'} ({detail})")
        if not self.hypotheses_hold:
            out.append("hypothesis failure: no classification")
            out.append(CAVEAT)
            return out
        width = max([len("character")] + [len(r.character) for r in self.rays])
        head = "  ".join(f"r{k}" for k in range(1, self.rmax + 1))
        out.append(f"{'character'.ljust(width)}  {head}  verdict")
        for ray in self.rays:
            cells = "  ".join(str(c).rjust(len(f'r{k}')) for k, c in enumerate(ray.counts, 1))
            out.append(f"{ray.character.ljust(width)}  {cells}  {ray.verdict}")
        out.append(CAVEAT)
        return out


def _classify(counts: list) -> str:
    if all(c == 1 for c in counts):
        return "evidence-member"
    if len(counts) >= 2 and counts[-1] >= 2 and counts[-2] >= 2 and counts[-1] >= counts[-2]:
        return "evidence-complement"
    if len(counts) == 1 and counts[0] >= 2:
        return "evidence-complement"
    return "unclassified"


def sigma1_evidence(G: FGGroup, rays, rmax: int, budget: int = DEFAULT_BUDGET) -> EvidenceReport:
    """Trend table of component counts for each ray, after checking
    irreducibility, non-vanishing of ``chi_l``, ``chi_r`` and their
    (almost) independence."""
    hyps = []
    if isinstance(G.interval, Compact):
        irr, witness = irreducible(G)
        hyps.append(("irreducible", irr, "no common interior fixed point" if irr else f"common fixed point {witness}"))
    else:
        hyps.append(("irreducible", False, "only decided for compact intervals"))
    rank_l = char_image(G, CharacterSpec.chi_left()).rank
    rank_r = char_image(G, CharacterSpec.chi_right()).rank
    hyps.append(("chi_l non-zero", rank_l > 0, f"rank of image {rank_l}"))
    hyps.append(("chi_r non-zero", rank_r > 0, f"rank of image {rank_r}"))
    if rank_l and rank_r:
        ind = independence(G)
        hyps.append(("almost independent", ind.kind != "neither", f"{ind.kind}, index {ind.index}"))
    else:
        hyps.append(("almost independent", False, "a character vanishes"))
    report = EvidenceReport(rmax, hyps, [])
    if not report.hypotheses_hold:
        return report
    B = ball(G, rmax, budget)
    for spec in rays:
        _check_nonzero(G, spec)
        counts = _report(G, spec, B).counts_by_radius[1:]
        report.rays.append(RayEvidence(str(spec), counts, _classify(counts)))
    return report
