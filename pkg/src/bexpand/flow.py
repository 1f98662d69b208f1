"""Dinic max-flow on small integer-capacity networks."""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        # parallel arrays indexed by edge id; edge e ^ 1 is its reverse
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        eid = len(self.to)
        self.head[u].append(eid)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def flow_on(self, eid: int) -> int:
        return self.cap[eid ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[u] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.size
            while True:
                pushed = self._augment(s, t, level, it)
                if not pushed:
                    break
                total += pushed

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS along the level graph; returns bottleneck of one path
        stack = [s]
        path: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                amount = min(self.cap[e] for e in path)
                for e in path:
                    self.cap[e] -= amount
                    self.cap[e ^ 1] += amount
                return amount
            advanced = False
            edges = self.head[u]
            while it[u] < len(edges):
                e = edges[it[u]]
                v = self.to[e]
                if self.cap[e] > 0 and level[v] == level[u] + 1:
                    stack.append(v)
                    path.append(e)
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                stack.pop()
                level[u] = -1
                if path:
                    path.pop()
                    it[stack[-1]] += 1
        return 0

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from s in the residual network (after max_flow)."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
