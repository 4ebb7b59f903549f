"""Partial-assignment state for the branch-and-bound search.

A Subproblem is a pair of disjoint vertex sets (U0, U1) plus all the
incrementally maintained quantities the lower bounds read:

* D arrays: d0[v]/d1[v] = total edge weight from free v into U0/U1.
* fixed_cut: crossing weight between U0 and U1.
* free_degree[v]: degree of free v in the subgraph induced by free vertices.
* per-side scan cursors and seen counters over each free vertex's
  weight-sorted adjacency, so that seen_cnt_i[v] free edges (the cheapest
  ones) are accounted with total weight seen_w_i[v].

The seen-count target is max(0, free_degree(v) - max(f_i, 1) + 1), where
f_i is the number of vertices side i still needs.  Clamping f_i at 1 keeps
the counters well-defined when a side becomes full; they are never read in
that situation because no vertex can then be high-degree for the bound.

Children are fresh O(n) copies of the parent; a subproblem is owned by one
worker at a time and never mutated concurrently.
"""

from __future__ import annotations

from .graph import WeightedGraph


class Subproblem:
    __slots__ = (
        "graph", "s0", "s1", "a0", "a1", "free_mask", "free_list",
        "d0", "d1", "fixed_cut", "f0", "f1",
        "free_degree", "zero_free_degree_count",
        "scan", "seen_cnt", "seen_w",
        "approx_max_free_degree", "approx_max_component", "max_adj_degree",
        "maintain_hd", "depth", "lb", "ub_est",
    )

    # Instances are produced by root_subproblem, recompute_from_scratch
    # and assign; direct construction is not part of the API.

    # -- basic queries ---------------------------------------------------

    @property
    def f(self) -> int:
        return len(self.free_list)

    def side_of(self, v: int) -> int | None:
        if (self.a0 >> v) & 1:
            return 0
        if (self.a1 >> v) & 1:
            return 1
        return None

    def is_free(self, v: int) -> bool:
        return (self.free_mask >> v) & 1 == 1

    def delta(self, v: int) -> int:
        """Potential free weight increase d1[v] - d0[v] of free vertex v."""
        return self.d1[v] - self.d0[v]

    # -- branching -------------------------------------------------------

    def assign(self, v: int, side: int) -> "Subproblem":
        """Child subproblem with free vertex v fixed to the given side.

        The parent is not modified.  All derived state is repaired
        incrementally: D arrays and fixed cut in O(deg(v)), the per-side
        seen counters with one forward and at most one backward scan per
        touched adjacency array.
        """
        if side not in (0, 1):
            raise ValueError(f"side must be 0 or 1, got {side}")
        if not self.is_free(v):
            raise ValueError(f"vertex {v} is not free")
        f_side = self.f0 if side == 0 else self.f1
        if f_side == 0:
            raise ValueError(f"side {side} is already full")

        g = self.graph
        child = Subproblem.__new__(Subproblem)
        child.lb = None
        child.ub_est = None
        child.graph = g
        child.s0, child.s1 = self.s0, self.s1
        child.a0, child.a1 = self.a0, self.a1
        child.free_mask = self.free_mask
        child.free_list = self.free_list.copy()
        child.d0 = self.d0.copy()
        child.d1 = self.d1.copy()
        child.fixed_cut = self.fixed_cut
        child.f0, child.f1 = self.f0, self.f1
        child.free_degree = self.free_degree.copy()
        child.zero_free_degree_count = self.zero_free_degree_count
        child.approx_max_free_degree = self.approx_max_free_degree
        child.approx_max_component = self.approx_max_component
        child.maintain_hd = self.maintain_hd
        child.depth = self.depth + 1

        maintain = self.maintain_hd
        if maintain:
            child.scan = (self.scan[0].copy(), self.scan[1].copy())
            child.seen_cnt = (self.seen_cnt[0].copy(), self.seen_cnt[1].copy())
            child.seen_w = (self.seen_w[0].copy(), self.seen_w[1].copy())
            child.max_adj_degree = self.max_adj_degree.copy()
        else:
            # Stale but never read while maintenance is off; sharing the
            # parent's arrays keeps assign cheap.
            child.scan = self.scan
            child.seen_cnt = self.seen_cnt
            child.seen_w = self.seen_w
            child.max_adj_degree = self.max_adj_degree

        d_own = child.d1 if side == 1 else child.d0
        d_other = child.d0 if side == 1 else child.d1
        child.fixed_cut += d_other[v]

        nbrs = g.adj_nbr[v]
        wts = g.adj_w[v]
        crosses = g.adj_cross[v]
        free_mask = child.free_mask  # v's bit still set during the scans
        deg = child.free_degree

        if maintain:
            # Forward phase: side `side` now needs one vertex fewer, so
            # every free vertex may have to see one more free edge.  v is
            # still flagged free here so the scans below stay consistent
            # with the removal fix-up that follows.
            fs_new = (child.f0 if side == 0 else child.f1) - 1
            if fs_new >= 1:
                scan_s = child.scan[side]
                cnt_s = child.seen_cnt[side]
                w_s = child.seen_w[side]
                limit = fs_new - 1
                for u in child.free_list:
                    if u == v or deg[u] <= limit:
                        continue
                    a_n = g.adj_nbr[u]
                    a_w = g.adj_w[u]
                    t = scan_s[u]
                    while not (free_mask >> a_n[t]) & 1:
                        t += 1
                    w_s[u] += a_w[t]
                    cnt_s[u] += 1
                    scan_s[u] = t + 1

            # Removal phase: each free neighbor u loses the free edge
            # (u, v); on every side with a positive seen count, un-see one
            # edge (either (u, v) itself if already scanned, or the
            # heaviest seen edge via a backward scan).
            f_new = (child.f0 - 1, child.f1) if side == 0 else (child.f0, child.f1 - 1)
            for i in range(len(nbrs)):
                u = nbrs[i]
                if not (free_mask >> u) & 1 or u == v:
                    continue
                pos = crosses[i]
                w_uv = wts[i]
                du = deg[u]
                for t in (0, 1):
                    ft = f_new[t]
                    if ft < 1:
                        ft = 1
                    if du - ft + 1 <= 0:
                        continue
                    scan_t = child.scan[t]
                    if pos < scan_t[u]:
                        child.seen_w[t][u] -= w_uv
                    else:
                        a_n = g.adj_nbr[u]
                        a_w = g.adj_w[u]
                        q = scan_t[u] - 1
                        while not (free_mask >> a_n[q]) & 1:
                            q -= 1
                        child.seen_w[t][u] -= a_w[q]
                        scan_t[u] = q
                    child.seen_cnt[t][u] -= 1

        # D arrays, free degrees, zero-degree count.
        zero_cnt = child.zero_free_degree_count
        if deg[v] == 0:
            zero_cnt -= 1
        for i in range(len(nbrs)):
            u = nbrs[i]
            if (free_mask >> u) & 1 and u != v:
                d_own[u] += wts[i]
                deg[u] -= 1
                if deg[u] == 0:
                    zero_cnt += 1
        child.zero_free_degree_count = zero_cnt

        # Finally move v out of the free set.
        bit = 1 << v
        child.free_mask &= ~bit
        if side == 0:
            child.a0 |= bit
            child.f0 -= 1
        else:
            child.a1 |= bit
            child.f1 -= 1
        child.free_list.remove(v)
        child.d0[v] = 0
        child.d1[v] = 0
        deg[v] = 0
        if maintain:
            for t in (0, 1):
                child.scan[t][v] = 0
                child.seen_cnt[t][v] = 0
                child.seen_w[t][v] = 0
        return child


def root_subproblem(
    graph: WeightedGraph, s0: int, s1: int, maintain_hd: bool = True
) -> Subproblem:
    """Root of the search tree for target sizes (s0, s1).

    When s0 == s1 the two sides are interchangeable, so vertex 0 is
    pre-assigned to side 0 to avoid enumerating mirrored solutions.
    """
    n = graph.n
    if s0 <= 0 or s1 <= 0:
        raise ValueError(f"subset sizes must be positive, got ({s0},{s1})")
    if s0 + s1 != n:
        raise ValueError(f"sizes ({s0},{s1}) do not sum to n={n}")
    sp = _empty_state(graph, s0, s1, maintain_hd)
    if s0 == s1:
        sp = sp.assign(0, 0)
        sp.depth = 0
    return sp


def _empty_state(graph, s0, s1, maintain_hd):
    n = graph.n
    sp = Subproblem.__new__(Subproblem)
    sp.lb = None
    sp.ub_est = None
    sp.graph = graph
    sp.s0, sp.s1 = s0, s1
    sp.a0 = 0
    sp.a1 = 0
    sp.free_mask = (1 << n) - 1
    sp.free_list = list(range(n))
    sp.d0 = [0] * n
    sp.d1 = [0] * n
    sp.fixed_cut = 0
    sp.f0, sp.f1 = s0, s1
    sp.free_degree = list(graph.degrees)
    sp.zero_free_degree_count = sum(1 for d in graph.degrees if d == 0)
    sp.maintain_hd = maintain_hd
    sp.depth = 0
    sp.approx_max_free_degree = max(graph.degrees, default=0)
    sp.approx_max_component = n
    scan0, scan1 = [0] * n, [0] * n
    cnt0, cnt1 = [0] * n, [0] * n
    w0, w1 = [0] * n, [0] * n
    # With everything free, the seen edges are simply an adjacency prefix.
    for v in range(n):
        ws = graph.adj_w[v]
        deg = graph.degrees[v]
        for ft, scan, cnt, wsum in ((s0, scan0, cnt0, w0),
                                    (s1, scan1, cnt1, w1)):
            k = deg - max(ft, 1) + 1
            if k > 0:
                scan[v] = k
                cnt[v] = k
                wsum[v] = sum(ws[:k])
    sp.scan = (scan0, scan1)
    sp.seen_cnt = (cnt0, cnt1)
    sp.seen_w = (w0, w1)
    est = [0] * n
    for v in range(n):
        if graph.degrees[v]:
            est[v] = max(graph.degrees[u] for u in graph.adj_nbr[v])
    sp.max_adj_degree = est
    return sp


def recompute_from_scratch(
    graph: WeightedGraph,
    u0,
    u1,
    s0: int,
    s1: int,
    maintain_hd: bool = True,
) -> Subproblem:
    """Build the Subproblem for assignment (u0, u1) directly from definitions.

    u0 and u1 are iterables of vertex ids.  This is the oracle for the
    incremental maintenance in assign(): every derived quantity is computed
    by a fresh O(n + m) pass.  Scan cursors are set to the canonical minimal
    positions; the estimate fields are set to their exact current values.
    """
    n = graph.n
    if s0 <= 0 or s1 <= 0 or s0 + s1 != n:
        raise ValueError(f"invalid sizes ({s0},{s1}) for n={n}")
    set0, set1 = set(u0), set(u1)
    for v in set0 | set1:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
    if set0 & set1:
        raise ValueError(f"vertices assigned to both sides: {sorted(set0 & set1)}")
    if len(set0) > s0 or len(set1) > s1:
        raise ValueError("assignment exceeds a target size")

    sp = Subproblem.__new__(Subproblem)
    sp.lb = None
    sp.ub_est = None
    sp.graph = graph
    sp.s0, sp.s1 = s0, s1
    sp.a0 = sum(1 << v for v in set0)
    sp.a1 = sum(1 << v for v in set1)
    sp.free_mask = ((1 << n) - 1) & ~(sp.a0 | sp.a1)
    sp.free_list = [v for v in range(n) if (sp.free_mask >> v) & 1]
    sp.f0 = s0 - len(set0)
    sp.f1 = s1 - len(set1)
    sp.maintain_hd = maintain_hd
    sp.depth = len(set0) + len(set1)

    d0 = [0] * n
    d1 = [0] * n
    fixed_cut = 0
    free_degree = [0] * n
    for u, v, w in graph.edges():
        su = 0 if u in set0 else 1 if u in set1 else None
        sv = 0 if v in set0 else 1 if v in set1 else None
        if su is None and sv is None:
            free_degree[u] += 1
            free_degree[v] += 1
        elif su is None:
            (d0 if sv == 0 else d1)[u] += w
        elif sv is None:
            (d0 if su == 0 else d1)[v] += w
        elif su != sv:
            fixed_cut += w
    sp.d0, sp.d1 = d0, d1
    sp.fixed_cut = fixed_cut
    sp.free_degree = free_degree
    sp.zero_free_degree_count = sum(
        1 for v in sp.free_list if free_degree[v] == 0
    )

    scan0, scan1 = [0] * n, [0] * n
    cnt0, cnt1 = [0] * n, [0] * n
    w0, w1 = [0] * n, [0] * n
    free_mask = sp.free_mask
    for v in sp.free_list:
        a_n = graph.adj_nbr[v]
        a_w = graph.adj_w[v]
        for ft, scan, cnt, wsum in ((sp.f0, scan0, cnt0, w0),
                                    (sp.f1, scan1, cnt1, w1)):
            k = free_degree[v] - max(ft, 1) + 1
            if k <= 0:
                continue
            total = 0
            found = 0
            t = 0
            while found < k:
                if (free_mask >> a_n[t]) & 1:
                    total += a_w[t]
                    found += 1
                t += 1
            scan[v] = t
            cnt[v] = k
            wsum[v] = total
    sp.scan = (scan0, scan1)
    sp.seen_cnt = (cnt0, cnt1)
    sp.seen_w = (w0, w1)

    sp.approx_max_free_degree = max(
        (free_degree[v] for v in sp.free_list), default=0
    )
    sp.approx_max_component = _largest_free_component(sp)
    est = [0] * n
    for v in sp.free_list:
        best = 0
        for u in graph.adj_nbr[v]:
            if (free_mask >> u) & 1 and free_degree[u] > best:
                best = free_degree[u]
        est[v] = best
    sp.max_adj_degree = est
    return sp


def _largest_free_component(sp: Subproblem) -> int:
    g = sp.graph
    seen = 0
    best = 0
    for start in sp.free_list:
        if (seen >> start) & 1:
            continue
        seen |= 1 << start
        stack = [start]
        size = 0
        while stack:
            x = stack.pop()
            size += 1
            for u in g.adj_nbr[x]:
                if (sp.free_mask >> u) & 1 and not (seen >> u) & 1:
                    seen |= 1 << u
                    stack.append(u)
        if size > best:
            best = size
    return best
