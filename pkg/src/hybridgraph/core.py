"""Hybrid graph representation with constant-time undo.

The structure keeps four global tables plus one frame of search-local
state.  All arrays are 0-indexed.

- ``al[v]``: neighbor array of v.  The first ``deg[v]`` slots are the
  live neighborhood; slots past ``deg[v]`` hold stale former neighbors
  that deletions swapped out of the prefix.  Rows never grow in plain
  mode.
- ``im[u][v]``: position of u inside ``al[v]``, or -1 if the pair was
  never adjacent.  Entries go stale when edges are deleted; the
  adjacency test compensates by range-checking against ``deg[v]``.
- ``vlist`` / ``idxlist``: a permutation of the vertices and its
  inverse.  The first ``n_c`` entries of ``vlist`` are the active
  vertices.
- ``SearchFrame``: everything a search path mutates per node (``deg``,
  ``n_c``, and mode-specific vectors).  ``snapshot()`` copies the
  frame, ``restore()`` copies it back.  The global tables are
  intentionally never rolled back, so undoing an arbitrarily long
  burst of operations costs one O(n) frame copy and nothing per
  undone operation.

Restoration has set semantics: the live neighborhood contents come
back exactly, but their order inside the prefix may differ from before
the burst.

Contract violations (deleting a non-adjacent pair, deleting an
inactive vertex) are guarded by ``assert`` and disappear under
``python -O`` for benchmark runs.

Instances are single-mutator: do not share one across threads.
"""


class GraphBuildError(ValueError):
    """Rejected input graph."""


class SelfLoopError(GraphBuildError):
    pass


class DuplicateEdgeError(GraphBuildError):
    pass


class VertexRangeError(GraphBuildError):
    pass


class SearchFrame:
    """Search-local state: exactly the vectors undo must roll back.

    ``ndeg`` is used by the permanent-addition mode, ``vcolor``/``cc``/
    ``cd`` by the contraction mode; they stay None otherwise.
    """

    __slots__ = ("deg", "n_c", "ndeg", "vcolor", "cc", "cd")

    def __init__(self, deg, n_c, ndeg=None, vcolor=None, cc=None, cd=None):
        self.deg = deg
        self.n_c = n_c
        self.ndeg = ndeg
        self.vcolor = vcolor
        self.cc = cc
        self.cd = cd

    def copy(self):
        return SearchFrame(
            self.deg.copy(),
            self.n_c,
            None if self.ndeg is None else self.ndeg.copy(),
            None if self.vcolor is None else self.vcolor.copy(),
            None if self.cc is None else self.cc.copy(),
            None if self.cd is None else self.cd.copy(),
        )

    def load(self, saved):
        """Overwrite this frame in place with a snapshot's contents."""
        assert len(saved.deg) == len(self.deg), "snapshot from a different graph"
        self.deg[:] = saved.deg
        self.n_c = saved.n_c
        if self.ndeg is not None:
            self.ndeg[:] = saved.ndeg
        if self.vcolor is not None:
            self.vcolor[:] = saved.vcolor
            self.cc[:] = saved.cc
            self.cd[:] = saved.cd


class HybridGraph:
    """Plain mode: edge and vertex deletions, O(n) restore."""

    mode = "plain"

    __slots__ = ("n", "al", "im", "vlist", "idxlist", "frame")

    def __init__(self, n, edges):
        if n < 0:
            raise VertexRangeError(f"negative vertex count {n}")
        self.n = n
        al = [[] for _ in range(n)]
        im = [[-1] * n for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if im[u][v] != -1:
                raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
            im[u][v] = len(al[v])
            al[v].append(u)
            im[v][u] = len(al[u])
            al[u].append(v)
        self.al = al
        self.im = im
        self.vlist = list(range(n))
        self.idxlist = list(range(n))
        self.frame = SearchFrame([len(row) for row in al], n)
        self._init_mode()

    def _init_mode(self):
        pass

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, active={self.frame.n_c})"

    # -- queries ------------------------------------------------------

    def is_adjacent(self, u, v):
        i = self.im[u][v]
        return -1 < i < self.frame.deg[v]

    def neighbors(self, v):
        """Live neighborhood of v, as a fresh list (safe to delete under)."""
        return self.al[v][: self.frame.deg[v]]

    def degree(self, v):
        return self.frame.deg[v]

    @property
    def deg(self):
        """The live per-vertex degree vector (do not mutate)."""
        return self.frame.deg

    def active_vertices(self):
        return self.vlist[: self.frame.n_c]

    def active_count(self):
        return self.frame.n_c

    def is_active(self, v):
        return self.idxlist[v] < self.frame.n_c

    def active_edge_count(self):
        deg = self.frame.deg
        return sum(deg[v] for v in self.vlist[: self.frame.n_c]) // 2

    def max_degree_vertex(self):
        """Active vertex of maximum degree, lowest id on ties, or None."""
        f = self.frame
        if f.n_c == 0:
            return None
        deg = f.deg
        best = self.vlist[0]
        best_d = deg[best]
        for v in self.vlist[1 : f.n_c]:
            d = deg[v]
            if d > best_d or (d == best_d and v < best):
                best = v
                best_d = d
        return best

    # -- mutations ----------------------------------------------------

    def delete_edge(self, u, v):
        """Remove live edge (u,v): swap each endpoint out of the other's
        live prefix and shrink the prefix.  Constant cell count."""
        al = self.al
        im = self.im
        deg = self.frame.deg
        assert -1 < im[u][v] < deg[v], f"delete_edge on non-adjacent pair ({u},{v})"
        row = al[u]
        i = im[v][u]
        j = deg[u] - 1
        x = row[j]
        row[i] = x
        row[j] = v
        im[x][u] = i
        im[v][u] = j
        deg[u] = j
        row = al[v]
        i = im[u][v]
        j = deg[v] - 1
        x = row[j]
        row[i] = x
        row[j] = u
        im[x][v] = i
        im[u][v] = j
        deg[v] = j

    def delete_vertex(self, v):
        """Deactivate v and delete its live edges, costing O(deg(v))."""
        f = self.frame
        idxlist = self.idxlist
        assert idxlist[v] < f.n_c, f"delete_vertex on inactive vertex {v}"
        vlist = self.vlist
        last = f.n_c - 1
        i = idxlist[v]
        w = vlist[last]
        vlist[i] = w
        idxlist[w] = i
        vlist[last] = v
        idxlist[v] = last
        f.n_c = last
        row = self.al[v]
        delete_edge = self.delete_edge
        for j in range(f.deg[v] - 1, -1, -1):
            delete_edge(row[j], v)

    # -- undo ---------------------------------------------------------

    def snapshot(self):
        """Independent copy of the frame; pair with restore()."""
        return self.frame.copy()

    def restore(self, saved):
        """Roll the graph back to a snapshot taken on this search path."""
        self.frame.load(saved)
