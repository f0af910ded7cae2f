"""The family of all minimum cuts: enumeration, cactus assembly, tracking.

The enumeration engine works per vertex class: the min cuts whose smaller-
indexed side first excludes vertex t are exactly the minimum cuts between t
and all earlier vertices, and those are recovered as predecessor-closed sets
of the flow residual.  Safe contractions (endpoints certified more than
lambda-connected by a forest hint or by edge multiplicity) shrink the graph
first, so dense graphs collapse before any flow runs.

The cactus encodes the family: crossing cuts generate circular partitions
(cycles threaded through their parent node), the remaining cuts form a
laminar family (tree edges), and both assemble over a containment forest of
the regions they occupy.  The tracker keeps the family live-set and reports
the moment an insertion sequence has crossed every minimum cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificates import _UnionFind, build_damsfd
from .graph_core import Multigraph
from .oracle import TooLargeError, enumerate_min_cuts, local_connectivity, static_min_cut

_VERIFY_LIMIT = 12


class StaleTrackerError(RuntimeError):
    """Raised when a tracker is used after it reported the min cut increase."""


@dataclass
class MinCutSet:
    """All minimum cuts of one graph as vertex bitmasks excluding vertex 0."""

    n: int
    lam: int
    masks: list[int]

    def __len__(self) -> int:
        return len(self.masks)

    def sides(self) -> list[frozenset[int]]:
        return [frozenset(v for v in range(self.n) if (m >> v) & 1) for m in self.masks]


# ---------------------------------------------------------------------------
# flow helpers on the contracted quotient


def _capacities(g: Multigraph, comp: list[int], qn: int) -> dict[tuple[int, int], int]:
    caps: dict[tuple[int, int], int] = {}
    for u, v, _ in g.edges:
        a, b = comp[u], comp[v]
        if a == b:
            continue
        if a > b:
            a, b = b, a
        caps[a, b] = caps.get((a, b), 0) + 1
    return caps


def _max_flow(qn: int, caps: dict[tuple[int, int], int], sources: set[int], sink: int,
              cap_limit: int) -> tuple[int, list[dict[int, int]] | None]:
    """Augmenting-path max flow from a contracted source set.

    Stops once the flow reaches ``cap_limit`` and reports (cap_limit, None);
    otherwise returns the exact value with the final residual adjacency.
    """
    res: list[dict[int, int]] = [dict() for _ in range(qn)]
    for (a, b), c in caps.items():
        res[a][b] = c
        res[b][a] = c
    flow = 0
    while flow < cap_limit:
        parent = [-1] * qn
        queue = list(sources)
        for s in queue:
            parent[s] = s
        qi = 0
        while qi < len(queue) and parent[sink] == -1:
            u = queue[qi]
            qi += 1
            for v, c in res[u].items():
                if c > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] == -1:
            return flow, res
        bottleneck = None
        v = sink
        while v not in sources:
            u = parent[v]
            c = res[u][v]
            if bottleneck is None or c < bottleneck:
                bottleneck = c
            v = u
        bottleneck = min(bottleneck, cap_limit - flow)
        v = sink
        while v not in sources:
            u = parent[v]
            res[u][v] -= bottleneck
            res[v][u] = res[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return flow, None


def _strongly_connected_components(qn: int, succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan; returns the SCC id per node (reverse topological)."""
    index = [-1] * qn
    low = [0] * qn
    on_stack = [False] * qn
    stack: list[int] = []
    comp = [-1] * qn
    counter = 0
    comp_count = 0
    for root in range(qn):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ptr = work.pop()
            if ptr == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for i in range(ptr, len(succ[node])):
                nxt = succ[node][i]
                if index[nxt] == -1:
                    work.append((node, i + 1))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            if low[node] == index[node]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == node:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return comp


def _enumerate_min_sink_sides(qn: int, res: list[dict[int, int]], sources: set[int],
                              sink: int) -> list[list[int]]:
    """All minimum source-set/sink cuts of a saturated flow.

    A sink side is any set containing the sink, avoiding the sources, and
    closed under residual predecessors; they are enumerated over the SCC
    condensation of the residual graph.
    """
    succ: list[list[int]] = [[] for _ in range(qn)]
    for u in range(qn):
        for v, c in res[u].items():
            if c > 0:
                succ[u].append(v)
    comp = _strongly_connected_components(qn, succ)
    nscc = max(comp) + 1
    members: list[list[int]] = [[] for _ in range(nscc)]
    for v in range(qn):
        members[comp[v]].append(v)
    scc_preds: list[set[int]] = [set() for _ in range(nscc)]
    scc_succs: list[set[int]] = [set() for _ in range(nscc)]
    for u in range(qn):
        for v in succ[u]:
            if comp[u] != comp[v]:
                scc_succs[comp[u]].add(comp[v])
                scc_preds[comp[v]].add(comp[u])

    sink_scc = comp[sink]
    must_in: set[int] = set()
    frontier = [sink_scc]
    while frontier:
        x = frontier.pop()
        if x in must_in:
            continue
        must_in.add(x)
        frontier.extend(scc_preds[x])
    must_out: set[int] = set()
    frontier = [comp[s] for s in sources]
    while frontier:
        x = frontier.pop()
        if x in must_out:
            continue
        must_out.add(x)
        frontier.extend(scc_succs[x])
    if must_in & must_out:
        raise RuntimeError("flow not saturated: sink reachable from a source")

    free = sorted(set(range(nscc)) - must_in - must_out)
    order = {scc: i for i, scc in enumerate(free)}
    results: list[list[int]] = []
    state = {}  # scc -> True (in) / False (out)

    def emit() -> None:
        chosen = set(must_in)
        chosen.update(s for s, flag in state.items() if flag)
        side = [v for s in chosen for v in members[s]]
        results.append(side)

    def rec(idx: int) -> None:
        while idx < len(free) and free[idx] in state:
            idx += 1
        if idx == len(free):
            emit()
            return
        x = free[idx]
        # include x and every free ancestor it needs
        need = [x]
        group = []
        ok = True
        seen = set()
        while need:
            y = need.pop()
            if y in seen:
                continue
            seen.add(y)
            if state.get(y) is False:
                ok = False
                break
            if y in state:
                continue
            group.append(y)
            need.extend(p for p in scc_preds[y] if p not in must_in)
        if ok:
            for y in group:
                state[y] = True
            rec(idx + 1)
            for y in group:
                del state[y]
        # exclude x and every free descendant that depends on it
        need = [x]
        group = []
        ok = True
        seen = set()
        while need:
            y = need.pop()
            if y in seen:
                continue
            seen.add(y)
            if state.get(y) is True:
                ok = False
                break
            if y in state:
                continue
            group.append(y)
            need.extend(s for s in scc_succs[y] if s not in must_out)
        if ok:
            for y in group:
                state[y] = False
            rec(idx + 1)
            for y in group:
                del state[y]

    rec(0)
    return results


# ---------------------------------------------------------------------------
# the enumeration engine


def min_cut_family(g: Multigraph, lam_hint: int | None = None,
                   contract_pairs: list[tuple[int, int]] | None = None) -> MinCutSet:
    """Enumerate every global minimum cut of a connected multigraph.

    ``lam_hint`` asserts the known min cut value (flows are capped just above
    it).  ``contract_pairs`` may carry edges whose endpoints are certified
    (lam+1)-connected, e.g. the (lam+1)-th forest of a decomposition of g;
    without it a fresh decomposition supplies the hint.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if not g.is_connected():
        raise ValueError("disconnected graph: min cut 0 is tracked by components")
    lam_ub = lam_hint if lam_hint is not None else min(g.degree)
    uf = _UnionFind(n)
    if contract_pairs is None:
        d = build_damsfd(g, order=lam_ub + 1)
        contract_pairs = [(u, v) for u, v, _ in d.forests[lam_ub]] if lam_ub < d.order else []
    for u, v in contract_pairs:
        uf.union(u, v)
    # multiplicity rule: lam_ub+1 parallel edges certify the pair as well
    mult: dict[tuple[int, int], int] = {}
    for u, v, _ in g.edges:
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + 1
        if mult[key] >= lam_ub + 1:
            uf.union(u, v)

    roots = sorted(set(uf.find(v) for v in range(n)), key=lambda r: (r != uf.find(0), r))
    qid = {r: i for i, r in enumerate(roots)}
    comp = [qid[uf.find(v)] for v in range(n)]
    qn = len(roots)
    if qn == 1:
        raise RuntimeError("contraction hint exceeds the true min cut")
    class_masks = [0] * qn
    for v in range(n):
        class_masks[comp[v]] |= 1 << v
    caps = _capacities(g, comp, qn)

    values: list[int] = [0] * qn
    residuals: list[list[dict[int, int]] | None] = [None] * qn
    best = lam_ub  # the min cut is at most lam_ub in both hint regimes
    for t in range(1, qn):
        sources = set(range(t))
        cap_limit = (lam_hint if lam_hint is not None else best) + 1
        flow, res = _max_flow(qn, caps, sources, t, cap_limit=cap_limit)
        values[t] = flow
        residuals[t] = res
        if res is not None and flow < best:
            best = flow
    lam = min(values[1:])
    if lam_hint is not None and lam != lam_hint:
        raise RuntimeError(f"min cut hint {lam_hint} does not match computed {lam}")

    masks: set[int] = set()
    for t in range(1, qn):
        if values[t] != lam or residuals[t] is None:
            continue
        for side in _enumerate_min_sink_sides(qn, residuals[t], set(range(t)), t):
            mask = 0
            for q in side:
                mask |= class_masks[q]
            masks.add(mask)
    return MinCutSet(n=n, lam=lam, masks=sorted(masks))


# ---------------------------------------------------------------------------
# live-cut tracking


class MinCutTracker:
    """Bookkeeping over the minimum cuts not yet crossed by insertions.

    In the degenerate regime (disconnected graph, min cut 0) the live cuts
    are component separations, tracked by union-find; the increase event is
    the stream connecting the whole vertex set.
    """

    def __init__(self, n: int, live: list[int] | None, components: _UnionFind | None = None,
                 component_count: int = 0):
        self.n = n
        self.live = live
        self._uf = components
        self._components = component_count
        self.stale = False

    @classmethod
    def degenerate(cls, g: Multigraph) -> "MinCutTracker":
        uf = _UnionFind(g.n)
        count = g.n
        for u, v, _ in g.edges:
            if uf.find(u) != uf.find(v):
                uf.union(u, v)
                count -= 1
        return cls(g.n, live=None, components=uf, component_count=count)

    @classmethod
    def from_family(cls, family: MinCutSet) -> "MinCutTracker":
        return cls(family.n, live=list(family.masks))

    @classmethod
    def from_graph(cls, g: Multigraph, lam_hint: int | None = None,
                   contract_pairs: list[tuple[int, int]] | None = None) -> "MinCutTracker":
        return cls.from_family(min_cut_family(g, lam_hint, contract_pairs))

    @property
    def live_count(self) -> int:
        if self.live is None:
            return self._components - 1
        return len(self.live)

    def insert(self, u: int, v: int) -> bool:
        """Cross off the live cuts separating u and v; True when none remain."""
        if self.stale:
            raise StaleTrackerError("tracker must be rebuilt after the increase event")
        if self.live is None:
            if self._uf.find(u) != self._uf.find(v):
                self._uf.union(u, v)
                self._components -= 1
            if self._components == 1:
                self.stale = True
                return True
            return False
        self.live = [m for m in self.live if (((m >> u) ^ (m >> v)) & 1) == 0]
        if not self.live:
            self.stale = True
            return True
        return False


# ---------------------------------------------------------------------------
# cactus assembly


@dataclass
class CactusTree:
    """Weighted cactus of all minimum cuts with the vertex map ``phi``.

    Nodes carry (possibly empty) vertex lists; edges carry weight ``lam`` on
    bridges and ``lam // 2`` on cycle edges (tagged by cycle id).
    """

    n: int
    lam: int
    node_members: list[list[int]]
    phi: list[int]
    edges: list[tuple[int, int, int, int | None]]
    degenerate: bool = False

    @property
    def node_count(self) -> int:
        return len(self.node_members)

    def min_cut_masks(self) -> set[int]:
        """Bipartitions realized by the cactus, normalized to exclude vertex 0."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for idx, (a, b, _, _) in enumerate(self.edges):
            adj[a].append((b, idx))
            adj[b].append((a, idx))

        def side_mask(blocked: set[int], start: int) -> int:
            seen = {start}
            stack = [start]
            mask = 0
            while stack:
                x = stack.pop()
                for v in self.node_members[x]:
                    mask |= 1 << v
                for y, eidx in adj[x]:
                    if eidx not in blocked and y not in seen:
                        seen.add(y)
                        stack.append(y)
            return mask

        full = (1 << self.n) - 1
        out: set[int] = set()
        bridges = [i for i, e in enumerate(self.edges) if e[3] is None]
        for i in bridges:
            mask = side_mask({i}, self.edges[i][0])
            if mask & 1:
                mask ^= full
            out.add(mask)
        by_cycle: dict[int, list[int]] = {}
        for i, e in enumerate(self.edges):
            if e[3] is not None:
                by_cycle.setdefault(e[3], []).append(i)
        for cycle_edges in by_cycle.values():
            for i in range(len(cycle_edges)):
                for j in range(i + 1, len(cycle_edges)):
                    ei, ej = cycle_edges[i], cycle_edges[j]
                    mask = side_mask({ei, ej}, self.edges[ei][0])
                    if mask & 1:
                        mask ^= full
                    out.add(mask)
        return out


def _crossing(m1: int, m2: int, full: int) -> bool:
    return (m1 & m2) != 0 and (m1 & ~m2 & full) != 0 and (~m1 & m2 & full) != 0 \
        and (~m1 & ~m2 & full) != 0


def _ring_order(atoms: list[int], g: Multigraph, lam: int) -> list[int]:
    """Arrange circular-partition atoms so neighbors share lam/2 edges."""
    atom_of = {}
    for i, mask in enumerate(atoms):
        for v in range(g.n):
            if (mask >> v) & 1:
                atom_of[v] = i
    counts: dict[tuple[int, int], int] = {}
    for u, v, _ in g.edges:
        a, b = atom_of[u], atom_of[v]
        if a == b:
            continue
        if a > b:
            a, b = b, a
        counts[(a, b)] = counts.get((a, b), 0) + 1
    if lam % 2 != 0:
        raise RuntimeError("crossing minimum cuts require an even min cut value")
    half = lam // 2
    neighbors: list[list[int]] = [[] for _ in atoms]
    for (a, b), c in counts.items():
        if c != half:
            raise RuntimeError("circular partition parts must share exactly lam/2 edges")
        neighbors[a].append(b)
        neighbors[b].append(a)
    if any(len(nb) != 2 for nb in neighbors):
        raise RuntimeError("circular partition does not form a single ring")
    start = min(range(len(atoms)), key=lambda i: atoms[i])
    second = min(neighbors[start])
    order = [start, second]
    while len(order) < len(atoms):
        prev, cur = order[-2], order[-1]
        nxt = neighbors[cur][0] if neighbors[cur][0] != prev else neighbors[cur][1]
        order.append(nxt)
    return order


def build_cactus(g: Multigraph) -> CactusTree:
    """Construct a cactus representation of every minimum cut of ``g``.

    Disconnected graphs yield the flagged degenerate form: one node per
    component, no edges, min cut zero.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    comps = g.connected_components()
    if len(comps) > 1:
        phi = [0] * n
        members = []
        for i, comp in enumerate(sorted(comps)):
            members.append(sorted(comp))
            for v in comp:
                phi[v] = i
        return CactusTree(n=n, lam=0, node_members=members, phi=phi, edges=[], degenerate=True)

    family = min_cut_family(g)
    lam = family.lam
    full = (1 << n) - 1
    masks = family.masks

    # crossing classes
    uf = _UnionFind(len(masks)) if masks else None
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if _crossing(masks[i], masks[j], full):
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(masks)):
        groups.setdefault(uf.find(i), []).append(i)

    circles: list[list[int]] = []  # each: atom masks in ring order
    arc_masks: set[int] = set()
    for group in groups.values():
        if len(group) < 2:
            continue
        sig: dict[int, int] = {}
        for pos, idx in enumerate(group):
            m = masks[idx]
            for v in range(n):
                if (m >> v) & 1:
                    sig[v] = sig.get(v, 0) | (1 << pos)
        atom_by_sig: dict[int, int] = {}
        for v in range(n):
            s = sig.get(v, 0)
            atom_by_sig[s] = atom_by_sig.get(s, 0) | (1 << v)
        atoms = sorted(atom_by_sig.values())
        order = _ring_order(atoms, g, lam)
        ring = [atoms[i] for i in order]
        circles.append(ring)
        r = len(ring)
        for start in range(r):
            acc = 0
            for length in range(1, r):
                acc |= ring[(start + length - 1) % r]
                norm = acc ^ full if acc & 1 else acc
                arc_masks.add(norm)
        for idx in group:
            if masks[idx] not in arc_masks:
                raise RuntimeError("crossing cut is not an arc of its circular partition")

    tree_cuts = [m for m in masks if m not in arc_masks]

    # Structural objects, root-normalized at vertex 0.  A tree cut occupies
    # its 0-free side; a circle occupies everything outside the atom that
    # holds vertex 0.  Occupied regions are laminar, so objects arrange into
    # a containment forest; cycles thread through their parent-side node and
    # nested objects carve their region out of the enclosing node's content.
    objects: list[dict] = []
    for mask in tree_cuts:
        objects.append({"kind": "tree", "region": mask})
    for ring in circles:
        anchor = next(i for i, atom in enumerate(ring) if atom & 1)
        rotated = ring[anchor:] + ring[:anchor]  # rotated[0] holds vertex 0
        objects.append({"kind": "circle", "region": full ^ rotated[0], "ring": rotated})
    objects.sort(key=lambda o: (-bin(o["region"]).count("1"), o["region"]))

    parent_of: list[int | None] = []
    for i, obj in enumerate(objects):
        parent, parent_size = None, None
        for j in range(i):
            rj, ri = objects[j]["region"], obj["region"]
            if rj & ri == ri and rj != ri:
                size = bin(rj).count("1")
                if parent is None or size < parent_size:
                    parent, parent_size = j, size
            elif rj & ri not in (0, rj, ri):
                raise RuntimeError("cut regions are not laminar")
        parent_of.append(parent)
    children: list[list[int]] = [[] for _ in objects]
    top: list[int] = []
    for i, p in enumerate(parent_of):
        (children[p] if p is not None else top).append(i)

    node_contents: list[int] = []
    edge_list: list[tuple[int, int, int, int | None]] = []

    def new_node(mask: int) -> int:
        node_contents.append(mask)
        return len(node_contents) - 1

    def carve(region: int, child_ids: list[int]) -> int:
        for c in child_ids:
            region &= ~objects[c]["region"]
        return region

    root = new_node(carve(full, [i for i in top]))
    # attachment node per object, resolved parents-first (objects are sorted)
    attach: list[int] = [-1] * len(objects)

    def parent_side(i: int) -> int:
        p = parent_of[i]
        if p is None:
            return root
        if objects[p]["kind"] == "tree":
            return attach[p]
        ring = objects[p]["ring"]
        region = objects[i]["region"]
        for pos in range(1, len(ring)):
            if region & ring[pos] == region:
                return objects[p]["ring_nodes"][pos]
        raise RuntimeError("nested object does not fit inside one circle atom")

    next_cycle = 0
    for i, obj in enumerate(objects):
        side = parent_side(i)
        kids = children[i]
        if obj["kind"] == "tree":
            node = new_node(carve(obj["region"], kids))
            attach[i] = node
            edge_list.append((side, node, lam, None))
        else:
            ring = obj["ring"]
            ring_nodes = [side]
            for pos in range(1, len(ring)):
                kid_ids = [c for c in kids if objects[c]["region"] & ring[pos]]
                ring_nodes.append(new_node(carve(ring[pos], kid_ids)))
            obj["ring_nodes"] = ring_nodes
            cid = next_cycle
            next_cycle += 1
            for pos in range(len(ring_nodes)):
                edge_list.append((ring_nodes[pos], ring_nodes[(pos + 1) % len(ring_nodes)],
                                  lam // 2, cid))

    node_members = [[v for v in range(n) if (mask >> v) & 1] for mask in node_contents]
    phi = [-1] * n
    for idx, mem in enumerate(node_members):
        for v in mem:
            phi[v] = idx
    if any(p == -1 for p in phi):
        raise RuntimeError("node contents do not partition the vertex set")
    return CactusTree(n=n, lam=lam, node_members=node_members, phi=phi, edges=edge_list)


# ---------------------------------------------------------------------------
# oracle-driven verification


def verify_cactus(c: CactusTree, g: Multigraph) -> bool:
    """Check the four cactus properties against the oracles (n <= 12)."""
    if g.n > _VERIFY_LIMIT:
        raise TooLargeError(f"verification bounded to n <= {_VERIFY_LIMIT}")
    if g.n != c.n:
        return False
    lam = static_min_cut(g)[0] if g.n >= 2 else 0
    if c.lam != lam:
        return False

    # property 1: phi total, node contents consistent, nodes may be empty
    if len(c.phi) != g.n:
        return False
    for v in range(g.n):
        if not 0 <= c.phi[v] < c.node_count or v not in c.node_members[c.phi[v]]:
            return False
    for i, members in enumerate(c.node_members):
        if any(c.phi[v] != i for v in members):
            return False

    if c.degenerate or lam == 0:
        if not (c.degenerate and lam == 0 and not c.edges):
            return False
        comps = {frozenset(comp) for comp in g.connected_components()}
        return {frozenset(m) for m in c.node_members} == comps

    # property 2: same node iff (lam+1)-edge-connected
    for x in range(g.n):
        for y in range(x + 1, g.n):
            together = c.phi[x] == c.phi[y]
            connected = local_connectivity(g, x, y, cap=lam + 1) >= lam + 1
            if together != connected:
                return False

    # property 4: structural shape and weights
    if not _verify_structure(c, lam):
        return False

    # property 3: cactus min cuts == graph min cuts (both directions)
    nodes = c.node_count
    if nodes > 26:
        raise TooLargeError("cactus too large for exhaustive verification")
    weights = np.zeros(1 << (nodes - 1), dtype=np.int64) if nodes > 1 else None
    if nodes > 1:
        masks = np.arange(1 << (nodes - 1), dtype=np.int64)
        weights = np.zeros(masks.shape, dtype=np.int64)
        for a, b, w, _ in c.edges:
            weights += w * (((masks >> a) ^ (masks >> b)) & 1)
        weights[0] = np.iinfo(np.int64).max  # empty side is not a cut
        if int(weights.min()) != lam:
            return False
    oracle_masks = set()
    for side in enumerate_min_cuts(g).cuts:
        mask = sum(1 << v for v in side)
        if mask & 1:
            mask ^= (1 << g.n) - 1
        oracle_masks.add(mask)
    cactus_masks = c.min_cut_masks()
    if cactus_masks != oracle_masks:
        return False
    # every min-weight bipartition of the cactus must pull back to a min cut
    if nodes > 1:
        full = (1 << g.n) - 1
        for node_mask in np.flatnonzero(weights == lam):
            mask = 0
            for a in range(nodes - 1):
                if (int(node_mask) >> a) & 1:
                    for v in c.node_members[a]:
                        mask |= 1 << v
            if mask & 1:
                mask ^= full
            if mask not in oracle_masks:
                return False
    return True


def _verify_structure(c: CactusTree, lam: int) -> bool:
    nodes = c.node_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nodes)]
    for idx, (a, b, _, _) in enumerate(c.edges):
        adj[a].append((b, idx))
        adj[b].append((a, idx))
    # connected
    if nodes:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != nodes:
            return False
    # bridges via DFS lowpoints
    disc = [-1] * nodes
    low = [0] * nodes
    bridge = [False] * len(c.edges)
    timer = 0
    parent_edge = [-1] * nodes
    if nodes:
        disc[0] = low[0] = timer
        timer += 1
        dfs = [(0, iter(adj[0]))]
        while dfs:
            x, it = dfs[-1]
            advanced = False
            for y, eidx in it:
                if eidx == parent_edge[x]:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    parent_edge[y] = eidx
                    dfs.append((y, iter(adj[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if not advanced:
                dfs.pop()
                if dfs:
                    p = dfs[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > disc[p]:
                        bridge[parent_edge[x]] = True
    for idx, (a, b, w, cid) in enumerate(c.edges):
        if bridge[idx]:
            if w != lam or cid is not None:
                return False
        else:
            if lam % 2 != 0 or w != lam // 2 or cid is None:
                return False
    if lam % 2 == 1 and any(not bridge[i] for i in range(len(c.edges))):
        return False
    # declared cycles must be simple, disjoint rings sharing at most a vertex
    by_cycle: dict[int, list[int]] = {}
    for idx, (_, _, _, cid) in enumerate(c.edges):
        if cid is not None:
            by_cycle.setdefault(cid, []).append(idx)
    cycle_nodes: list[set[int]] = []
    for cid, eidxs in by_cycle.items():
        degree: dict[int, int] = {}
        for i in eidxs:
            a, b, _, _ = c.edges[i]
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        if len(eidxs) < 3 or any(d != 2 for d in degree.values()) or len(degree) != len(eidxs):
            return False
        cycle_nodes.append(set(degree))
    for i in range(len(cycle_nodes)):
        for j in range(i + 1, len(cycle_nodes)):
            if len(cycle_nodes[i] & cycle_nodes[j]) > 1:
                return False
    return True
