"""Contraction mode: the graph is viewed as a quotient over color sets.

Every vertex carries a color (frame-local ``vcolor``); initially color
ids equal vertex ids and every color is a singleton.  ``vlist`` /
``idxlist`` track *active colors* in this mode, and the frame holds two
more vectors: ``cc[c]`` (member count of color c, 0 exactly for retired
colors) and ``cd[c]`` (number of distinct active colors adjacent to c).
The global table ``csl[c]`` lists c's members in its first ``cc[c]``
slots, with the same stale-tail convention as ``al``.

The central invariant: between any two active colors at most one live
member-level edge exists, and none inside a color.  ``contract``
maintains it by deleting the connector edge and, for every color
adjacent to both sides, one of the two redundant member edges.  With
that invariant, ``cd[c]`` equals the number of live member edges
leaving c, so listing a color's neighbor colors is a plain scan of its
members' live prefixes with no dedup pass.

Undo is unchanged: all color vectors are frame-local, ``csl`` appends
land past the restored ``cc`` prefix, so ``restore()`` is still one
frame copy.

Vertex-level deletion is not available here (it would bypass the color
bookkeeping); use ``delete_color``.  Member-level ``delete_edge`` works
and keeps ``cd`` in step.
"""

from .core import HybridGraph


class ContractionGraph(HybridGraph):
    mode = "contract"

    __slots__ = ("csl", "_stamp", "_gen")

    def _init_mode(self):
        n = self.n
        f = self.frame
        csl = [[-1] * n for _ in range(n)]
        for v in range(n):
            csl[v][0] = v
        self.csl = csl
        f.vcolor = list(range(n))
        f.cc = [1] * n
        f.cd = f.deg.copy()
        # scratch marks, cleared lazily by bumping the generation stamp
        self._stamp = [0] * n
        self._gen = 0

    # -- color queries ------------------------------------------------

    def active_colors(self):
        return self.vlist[: self.frame.n_c]

    def color_members(self, c):
        return self.csl[c][: self.frame.cc[c]]

    def color_size(self, c):
        return self.frame.cc[c]

    def color_degree(self, c):
        return self.frame.cd[c]

    def color_of(self, v):
        return self.frame.vcolor[v]

    def color_neighbors(self, c):
        """Active colors adjacent to c; distinct by the one-edge invariant."""
        f = self.frame
        vc = f.vcolor
        al = self.al
        deg = f.deg
        members = self.csl[c]
        out = []
        for idx in range(f.cc[c]):
            a = members[idx]
            row = al[a]
            for j in range(deg[a]):
                out.append(vc[row[j]])
        return out

    def colors_adjacent(self, ca, cb):
        """Whether active colors ca and cb share a member edge."""
        f = self.frame
        if f.cd[ca] > f.cd[cb]:
            ca, cb = cb, ca
        vc = f.vcolor
        al = self.al
        deg = f.deg
        members = self.csl[ca]
        for idx in range(f.cc[ca]):
            a = members[idx]
            row = al[a]
            for j in range(deg[a]):
                if vc[row[j]] == cb:
                    return True
        return False

    def max_degree_color(self):
        """Active color of maximum color degree, lowest id on ties."""
        f = self.frame
        if f.n_c == 0:
            return None
        cd = f.cd
        best = self.vlist[0]
        best_d = cd[best]
        for c in self.vlist[1 : f.n_c]:
            d = cd[c]
            if d > best_d or (d == best_d and c < best):
                best = c
                best_d = d
        return best

    def active_edge_count(self):
        """Live member edges.  The inherited count would miss edges held
        by absorbed members, so sum color degrees instead."""
        f = self.frame
        cd = f.cd
        return sum(cd[c] for c in self.vlist[: f.n_c]) // 2

    # -- mutations ----------------------------------------------------

    def delete_edge(self, u, v):
        f = self.frame
        cu = f.vcolor[u]
        cv = f.vcolor[v]
        assert cu != cv, "no member edges exist inside a color"
        HybridGraph.delete_edge(self, u, v)
        f.cd[cu] -= 1
        f.cd[cv] -= 1

    def delete_vertex(self, v):
        raise NotImplementedError("contraction mode tracks colors; use delete_color")

    def _retire_color(self, c):
        f = self.frame
        vlist = self.vlist
        idxlist = self.idxlist
        last = f.n_c - 1
        i = idxlist[c]
        w = vlist[last]
        vlist[i] = w
        idxlist[w] = i
        vlist[last] = c
        idxlist[c] = last
        f.n_c = last

    def contract(self, u, v):
        """Merge v's color into u's color; the pair's colors must be
        distinct, active, and adjacent.  Returns the number of member
        edges deleted (the connector plus one per common neighbor
        color), so callers can track the live edge count.
        """
        f = self.frame
        vc = f.vcolor
        cc = f.cc
        cd = f.cd
        al = self.al
        deg = f.deg
        idxlist = self.idxlist
        cu = vc[u]
        cv = vc[v]
        assert cu != cv, f"contract({u},{v}): same color {cu}"
        assert idxlist[cu] < f.n_c and idxlist[cv] < f.n_c, "inactive color"
        # mark every color currently adjacent to the surviving side
        self._gen += 1
        gen = self._gen
        stamp = self._stamp
        members_u = self.csl[cu]
        for idx in range(cc[cu]):
            a = members_u[idx]
            row = al[a]
            for j in range(deg[a]):
                stamp[vc[row[j]]] = gen
        # sweep the absorbed side's member edges: delete the connector
        # and one redundant edge per already-adjacent color, keep the
        # rest and mark their colors as now-adjacent
        raw_delete = HybridGraph.delete_edge
        members_v = self.csl[cv]
        kept = 0
        deleted = 0
        connectors = 0
        for idx in range(cc[cv]):
            b = members_v[idx]
            row = al[b]
            for j in range(deg[b] - 1, -1, -1):
                x = row[j]
                w = vc[x]
                if w == cu:
                    raw_delete(self, b, x)
                    deleted += 1
                    connectors += 1
                elif stamp[w] == gen:
                    raw_delete(self, b, x)
                    deleted += 1
                    cd[w] -= 1
                else:
                    stamp[w] = gen
                    kept += 1
        assert connectors == 1, f"colors {cu},{cv} connected by {connectors} edges"
        cd[cu] += kept - 1
        cd[cv] = 0
        # recolor absorbed members and append them to the survivor's list
        base = cc[cu]
        for idx in range(cc[cv]):
            b = members_v[idx]
            vc[b] = cu
            members_u[base + idx] = b
        cc[cu] = base + cc[cv]
        cc[cv] = 0
        self._retire_color(cv)
        return deleted

    def delete_color(self, c):
        """Remove color c and all member edges; costs O(cd(c) + cc(c))."""
        f = self.frame
        assert self.idxlist[c] < f.n_c, f"delete_color on inactive color {c}"
        vc = f.vcolor
        cd = f.cd
        al = self.al
        deg = f.deg
        raw_delete = HybridGraph.delete_edge
        members = self.csl[c]
        for idx in range(f.cc[c]):
            b = members[idx]
            row = al[b]
            for j in range(deg[b] - 1, -1, -1):
                x = row[j]
                cd[vc[x]] -= 1
                raw_delete(self, b, x)
        cd[c] = 0
        f.cc[c] = 0
        self._retire_color(c)
