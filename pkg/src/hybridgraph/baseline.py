"""Classical adjacency-list baseline with an explicit undo log.

Index-chained doubly-linked neighbor lists: cell i stores a neighbor id
(``nbr``), its owning vertex (``owner``), and chain links (``prv`` /
``nxt``); ``head[v]`` starts v's chain.  Two cells per edge, no
cross-pointers between them, so removing u from v's list means walking
v's chain, which is what gives this structure its classical costs:
adjacency O(d), edge deletion O(d), vertex deletion Theta(sum of
neighbor degrees).

Every mutation appends inverse records to ``log``; ``snapshot()`` is
the log length and ``restore(mark)`` pops records back to it.  Unlinked
cells keep their own ``prv``/``nxt``, so relinking is O(1) per record
(additions are also undone via their logged cells rather than a rescan,
a small kindness the flat-array variant of this structure would not
get).

The solver-facing surface matches the hybrid classes: is_adjacent,
neighbors, degree, active_vertices, delete_edge, delete_vertex,
add_edge, max_degree_vertex, snapshot/restore.  Activity is a flag
array, so whole-graph scans cost O(n) rather than O(active).
"""

from .core import DuplicateEdgeError, SelfLoopError, VertexRangeError


class BaselineGraph:
    mode = "alist"

    __slots__ = (
        "n", "nbr", "owner", "prv", "nxt", "head",
        "deg", "active", "n_active", "log",
    )

    def __init__(self, n, edges):
        if n < 0:
            raise VertexRangeError(f"negative vertex count {n}")
        self.n = n
        self.nbr = []
        self.owner = []
        self.prv = []
        self.nxt = []
        self.head = [-1] * n
        self.deg = [0] * n
        self.active = [True] * n
        self.n_active = n
        self.log = []
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
            seen.add(key)
            self._new_cell(u, v)
            self._new_cell(v, u)

    def _new_cell(self, o, w):
        """Prepend a cell (owner o, neighbor w) to o's chain."""
        c = len(self.nbr)
        self.nbr.append(w)
        self.owner.append(o)
        self.prv.append(-1)
        first = self.head[o]
        self.nxt.append(first)
        if first != -1:
            self.prv[first] = c
        self.head[o] = c
        self.deg[o] += 1
        return c

    def __repr__(self):
        return f"BaselineGraph(n={self.n}, active={self.n_active})"

    # -- queries ------------------------------------------------------

    def is_adjacent(self, u, v):
        """List scan of u's chain; False if either endpoint is inactive."""
        if not (self.active[u] and self.active[v]):
            return False
        nbr = self.nbr
        nxt = self.nxt
        c = self.head[u]
        while c != -1:
            if nbr[c] == v:
                return True
            c = nxt[c]
        return False

    def neighbors(self, v):
        nbr = self.nbr
        nxt = self.nxt
        out = []
        c = self.head[v]
        while c != -1:
            out.append(nbr[c])
            c = nxt[c]
        return out

    def degree(self, v):
        return self.deg[v]

    def active_vertices(self):
        active = self.active
        return [v for v in range(self.n) if active[v]]

    def active_count(self):
        return self.n_active

    def is_active(self, v):
        return self.active[v]

    def active_edge_count(self):
        deg = self.deg
        active = self.active
        return sum(deg[v] for v in range(self.n) if active[v]) // 2

    def max_degree_vertex(self):
        if self.n_active == 0:
            return None
        deg = self.deg
        best = -1
        best_d = -1
        for v in range(self.n):
            if self.active[v] and deg[v] > best_d:
                best = v
                best_d = deg[v]
        return best

    # -- chain surgery ------------------------------------------------

    def _unlink(self, c):
        p = self.prv[c]
        x = self.nxt[c]
        if p == -1:
            self.head[self.owner[c]] = x
        else:
            self.nxt[p] = x
        if x != -1:
            self.prv[x] = p
        self.deg[self.owner[c]] -= 1

    def _relink(self, c):
        p = self.prv[c]
        x = self.nxt[c]
        if p == -1:
            self.head[self.owner[c]] = c
        else:
            self.nxt[p] = c
        if x != -1:
            self.prv[x] = c
        self.deg[self.owner[c]] += 1

    def _find_cell(self, u, v):
        nbr = self.nbr
        nxt = self.nxt
        c = self.head[u]
        while c != -1:
            if nbr[c] == v:
                return c
            c = nxt[c]
        return -1

    # -- mutations ----------------------------------------------------

    def delete_edge(self, u, v):
        cu = self._find_cell(u, v)
        cv = self._find_cell(v, u)
        assert cu != -1 and cv != -1, f"delete_edge on non-adjacent pair ({u},{v})"
        self._unlink(cu)
        self._unlink(cv)
        self.log.append(("edge", cu, cv))

    def delete_vertex(self, v):
        assert self.active[v], f"delete_vertex on inactive vertex {v}"
        self.active[v] = False
        self.n_active -= 1
        removed = []
        nbr = self.nbr
        nxt = self.nxt
        c = self.head[v]
        while c != -1:
            w = nbr[c]
            cw = self._find_cell(w, v)
            self._unlink(cw)
            removed.append(cw)
            c = nxt[c]
        old_deg = self.deg[v]
        self.deg[v] = 0
        self.log.append(("vertex", v, old_deg, removed))

    def add_edge(self, u, v):
        """Permanently add pair (u,v); undone only via restore."""
        assert u != v, "self-loop"
        assert self._find_cell(u, v) == -1, f"add_edge on adjacent pair ({u},{v})"
        cu = self._new_cell(u, v)
        cv = self._new_cell(v, u)
        self.log.append(("add", cu, cv))

    # -- undo ---------------------------------------------------------

    def snapshot(self):
        """Opaque undo mark (the current log position)."""
        return len(self.log)

    def restore(self, mark):
        """Pop and invert log records back to a snapshot mark."""
        log = self.log
        assert 0 <= mark <= len(log), "mark from a different graph or future"
        while len(log) > mark:
            rec = log.pop()
            tag = rec[0]
            if tag == "edge":
                self._relink(rec[2])
                self._relink(rec[1])
            elif tag == "vertex":
                _, v, old_deg, removed = rec
                for c in reversed(removed):
                    self._relink(c)
                self.deg[v] = old_deg
                self.active[v] = True
                self.n_active += 1
            else:  # "add"
                self._unlink(rec[2])
                self._unlink(rec[1])
