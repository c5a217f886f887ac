"""Pair poset induced by an ordered block partition, and its chain covers.

Generators split into consecutive blocks A_1, ..., A_p.  The element set
M consists of all ordered generator pairs (x, y) with x in a block at
least as late as y's: pairs tagged (q, j) with q >= j.  A pair tagged
(l, j) strictly precedes one tagged (m, r) iff m >= r > l >= j; pairs
sharing a tag are incomparable.  The width of this poset is
max over q of (a_q + ... + a_p)(a_1 + ... + a_q), and by Dilworth's
theorem that equals the minimum number of chains covering M, realised
here by a maximum bipartite matching between copies of M.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

#: Default upper limit on |M| for chain-cover computations.
DEFAULT_COVER_CAP = 5000


class PairElement(NamedTuple):
    """One ordered generator pair with its (first block, second block) tag."""

    left: str
    right: str
    block_pair: tuple[int, int]


@dataclass(frozen=True)
class BlockPartition:
    """Ordered blocks of generators.

    Names default to x1..xn handed out block by block; custom names are
    assigned the same way (first block gets the first sizes[0] names and
    so on).
    """

    sizes: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes:
            raise ValueError("partition needs at least one block")
        if any(s < 0 for s in sizes):
            raise ValueError(f"block sizes must be non-negative, got {sizes}")
        n = sum(sizes)
        names = tuple(self.names) or tuple(f"x{i}" for i in range(1, n + 1))
        if len(names) != n:
            raise ValueError(f"need {n} generator names, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def block_count(self) -> int:
        return len(self.sizes)

    def blocks(self) -> tuple[tuple[str, ...], ...]:
        """Generator names grouped by block, in order."""
        grouped = []
        offset = 0
        for size in self.sizes:
            grouped.append(self.names[offset : offset + size])
            offset += size
        return tuple(grouped)


def tag_precedes(first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Strict order on block-pair tags: (l, j) < (m, r) iff m >= r > l >= j."""
    l, j = first
    m, r = second
    return m >= r > l >= j


@dataclass(frozen=True)
class BlockPoset:
    """All descending generator pairs of a partition, canonically ordered.

    Elements are sorted by block-pair tag (lexicographically), then by the
    generator indices of the pair.
    """

    partition: BlockPartition
    elements: tuple[PairElement, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def precedes(self, a: PairElement, b: PairElement) -> bool:
        return tag_precedes(a.block_pair, b.block_pair)

    def antichain_at(self, q: int) -> tuple[PairElement, ...]:
        """The canonical antichain B_q: pairs tagged (j, m) with j >= q >= m."""
        if not 1 <= q <= self.partition.block_count:
            raise ValueError(f"block index {q} out of range")
        return tuple(
            e for e in self.elements if e.block_pair[0] >= q >= e.block_pair[1]
        )


@dataclass(frozen=True)
class ChainCover:
    """Disjoint chains whose union is the whole pair poset."""

    poset: BlockPoset
    chains: tuple[tuple[PairElement, ...], ...]

    @property
    def size(self) -> int:
        return len(self.chains)


def build_poset(partition: BlockPartition) -> BlockPoset:
    """Enumerate the pair set M in canonical order."""
    blocks = partition.blocks()
    elements = []
    for q in range(1, len(blocks) + 1):
        for j in range(1, q + 1):
            for x in blocks[q - 1]:
                for y in blocks[j - 1]:
                    elements.append(PairElement(x, y, (q, j)))
    return BlockPoset(partition=partition, elements=tuple(elements))


def poset_width(partition: BlockPartition) -> tuple[int, int]:
    """Width of the pair poset and the smallest block index attaining it.

    The width is max over q of |B_q| with
    |B_q| = (a_q + ... + a_p) * (a_1 + ... + a_q).
    """
    sizes = partition.sizes
    total = sum(sizes)
    best, best_q = -1, 0
    prefix = 0
    suffix = total
    for q in range(1, len(sizes) + 1):
        prefix += sizes[q - 1]
        value = suffix * prefix
        if value > best:
            best, best_q = value, q
        suffix -= sizes[q - 1]
    return best, best_q


def _max_matching(
    n_elems: int, tag_index: list[int], tag_adj: list[list[int]]
) -> list[int]:
    """Hopcroft-Karp maximum matching between two copies of the elements.

    tag_index[u] is the block-pair class of element u; tag_adj[c] lists
    the successor elements shared by every member of class c, in canonical
    order, so vertex processing is fully deterministic.  Returns match_l
    mapping each element to its matched successor (-1 when unmatched).
    """
    UNSEEN = -1
    match_l = [-1] * n_elems
    match_r = [-1] * n_elems
    dist = [UNSEEN] * n_elems

    def bfs() -> int:
        queue = deque()
        for u in range(n_elems):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = UNSEEN
        goal = UNSEEN
        while queue:
            u = queue.popleft()
            if goal != UNSEEN and dist[u] + 1 >= goal:
                continue
            for v in tag_adj[tag_index[u]]:
                w = match_r[v]
                if w == -1:
                    if goal == UNSEEN:
                        goal = dist[u] + 1
                elif dist[w] == UNSEEN:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return goal

    while True:
        goal = bfs()
        if goal == UNSEEN:
            return match_l
        ptr = [0] * n_elems
        augmented_in_phase = 0
        for root in range(n_elems):
            if match_l[root] != -1:
                continue
            # Alternating DFS restricted to the BFS layers, iterative to
            # keep long augmenting paths off the Python call stack.
            stack: list[tuple[int, int]] = [(root, -1)]
            augmented = False
            while stack and not augmented:
                u, _ = stack[-1]
                adj = tag_adj[tag_index[u]]
                advanced = False
                while ptr[u] < len(adj):
                    v = adj[ptr[u]]
                    ptr[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == goal:
                            # Augment: pop the stack, shifting each matched
                            # right vertex one frame down.
                            carry = v
                            while stack:
                                uu, via = stack.pop()
                                match_l[uu] = carry
                                match_r[carry] = uu
                                carry = via
                            augmented = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.append((w, v))
                        advanced = True
                        break
                if augmented or advanced:
                    continue
                dist[u] = UNSEEN
                stack.pop()
            augmented_in_phase += augmented
        if not augmented_in_phase:  # pragma: no cover - BFS certified a path
            raise AssertionError("matching phase failed to augment")


def min_chain_cover(
    partition: BlockPartition, cap: int = DEFAULT_COVER_CAP
) -> ChainCover:
    """Partition the pair poset into the minimum number of chains.

    Chains are the paths of a maximum matching between element copies
    (edge u -> v iff u strictly precedes v).  The Dilworth equality
    (chain count == poset width) is asserted on every call.
    """
    poset = build_poset(partition)
    if poset.size > cap:
        raise ValueError(
            f"pair poset has {poset.size} elements, exceeding the cover cap {cap}"
        )
    tags = sorted({e.block_pair for e in poset.elements})
    tag_pos = {t: i for i, t in enumerate(tags)}
    tag_index = [tag_pos[e.block_pair] for e in poset.elements]
    members: list[list[int]] = [[] for _ in tags]
    for idx, e in enumerate(poset.elements):
        members[tag_pos[e.block_pair]].append(idx)
    tag_adj: list[list[int]] = []
    for t in tags:
        successors: list[int] = []
        for t2 in tags:
            if tag_precedes(t, t2):
                successors.extend(members[tag_pos[t2]])
        tag_adj.append(sorted(successors))

    match_l = _max_matching(poset.size, tag_index, tag_adj)
    has_pred = [False] * poset.size
    for u in range(poset.size):
        if match_l[u] != -1:
            has_pred[match_l[u]] = True
    chains = []
    for head in range(poset.size):
        if has_pred[head]:
            continue
        chain = []
        cur = head
        while cur != -1:
            chain.append(poset.elements[cur])
            cur = match_l[cur]
        chains.append(tuple(chain))
    width, _ = poset_width(partition)
    if len(chains) != width:  # pragma: no cover - Dilworth equality
        raise AssertionError(
            f"chain cover size {len(chains)} differs from poset width {width}"
        )
    return ChainCover(poset=poset, chains=tuple(chains))
