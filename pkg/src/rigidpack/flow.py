"""Dinic max-flow on small integer-capacity networks.

Shared kernel for the vertex-connectivity checks and for degree-specified
orientation feasibility.  Capacities here are tiny integers and the
binding arcs are unit, where blocking-flow phases give the usual
O(sqrt(V) * E) bound.
"""

from __future__ import annotations


class FlowNetwork:
    """Arc-list residual network; paired forward/backward arcs at ids 2k, 2k+1."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        eid = len(self.head)
        self.head.append(v)
        self.cap.append(cap)
        self.adj[u].append(eid)
        self.head.append(u)
        self.cap.append(0)
        self.adj[v].append(eid + 1)
        return eid

    def flow_on(self, arc_id: int) -> int:
        """Units pushed through a forward arc (its reverse residual)."""
        return self.cap[arc_id ^ 1]

    def _bfs_levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for eid in self.adj[u]:
                v = self.head[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        total = 0
        stack = [s]
        path: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                pushed = min(self.cap[eid] for eid in path)
                for eid in path:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                total += pushed
                for i, eid in enumerate(path):
                    if self.cap[eid] == 0:
                        del stack[i + 1 :]
                        del path[i:]
                        break
                continue
            advanced = False
            while it[u] < len(self.adj[u]):
                eid = self.adj[u][it[u]]
                v = self.head[eid]
                if self.cap[eid] > 0 and level[v] == level[u] + 1:
                    stack.append(v)
                    path.append(eid)
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                level[u] = -1
                stack.pop()
                if path:
                    path.pop()
        return total

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            level = self._bfs_levels(s, t)
            if level is None:
                break
            flow += self._blocking(s, t, level, [0] * self.n)
        return flow if limit is None else min(flow, limit)

    def source_side(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual network (a minimum cut side)."""
        seen = {s}
        queue = [s]
        for u in queue:
            for eid in self.adj[u]:
                v = self.head[eid]
                if self.cap[eid] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
