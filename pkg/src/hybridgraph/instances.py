"""Instance loading, writing, and generation.

Two on-disk formats:

* edge list (native): first line ``n m``, then m lines ``u v`` with
  0-based endpoints.  Strict: any malformed, duplicate, out-of-range,
  or self-loop line is an error naming the line number.
* DIMACS: ``c`` comments, one ``p edge N M`` problem line, ``e u v``
  edge lines with 1-based endpoints.  Benchmark files in the wild are
  sloppy, so duplicate edges are dropped with a warning and a wrong
  declared edge count is a warning, while self-loops and out-of-range
  endpoints stay hard errors.

Generators return sorted edge lists, so an instance is reproducible
from its parameters alone.
"""

import os
import random
from bisect import bisect_right
from dataclasses import dataclass, field


class InstanceFormatError(ValueError):
    pass


@dataclass
class InstanceSpec:
    name: str
    n: int
    edges: list = field(repr=False)

    @property
    def m(self):
        return len(self.edges)


def complement_edges(n, edges):
    present = {(min(u, v), max(u, v)) for u, v in edges}
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in present
    ]


def parse_dimacs(lines, name="dimacs", complement=False):
    """Parse DIMACS text (an iterable of lines).  Returns
    (InstanceSpec, warnings)."""
    n = None
    m_declared = None
    edges = []
    seen = set()
    warnings = []
    dupes = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        if line[0] == "p":
            if n is not None:
                raise InstanceFormatError(f"line {lineno}: second problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise InstanceFormatError(f"line {lineno}: bad problem line {line!r}")
            try:
                n = int(parts[2])
                m_declared = int(parts[3])
            except ValueError:
                raise InstanceFormatError(f"line {lineno}: bad problem line {line!r}")
            if n < 0 or m_declared < 0:
                raise InstanceFormatError(f"line {lineno}: negative sizes")
        elif line[0] == "e":
            if n is None:
                raise InstanceFormatError(f"line {lineno}: edge before problem line")
            parts = line.split()
            if len(parts) != 3:
                raise InstanceFormatError(f"line {lineno}: bad edge line {line!r}")
            try:
                u = int(parts[1]) - 1
                v = int(parts[2]) - 1
            except ValueError:
                raise InstanceFormatError(f"line {lineno}: bad edge line {line!r}")
            if u == v:
                raise InstanceFormatError(f"line {lineno}: self-loop on {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceFormatError(
                    f"line {lineno}: endpoint out of range in {line!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                warnings.append(f"line {lineno}: duplicate edge dropped: {line!r}")
                dupes += 1
                continue
            seen.add(key)
            edges.append(key)
        else:
            raise InstanceFormatError(
                f"line {lineno}: unrecognized record {line.split()[0]!r}")
    if n is None:
        raise InstanceFormatError("missing problem line")
    if m_declared not in (len(edges), len(edges) + dupes):
        warnings.append(
            f"declared {m_declared} edges, found {len(edges)} distinct")
    if complement:
        edges = complement_edges(n, edges)
        name = name + "-complement"
    edges.sort()
    return InstanceSpec(name, n, edges), warnings


def _basename(path):
    return os.path.splitext(os.path.basename(str(path)))[0]


def read_dimacs(path, complement=False):
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        return parse_dimacs(fh, name=_basename(path), complement=complement)


def parse_edge_list(lines, name="edges"):
    it = iter(enumerate(lines, 1))
    header = None
    for lineno, raw in it:
        if raw.strip():
            header = (lineno, raw.split())
            break
    if header is None:
        raise InstanceFormatError("empty file")
    lineno, parts = header
    if len(parts) != 2:
        raise InstanceFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: header must be 'n m'")
    if n < 0 or m < 0:
        raise InstanceFormatError(f"line {lineno}: negative header values")
    edges = []
    seen = set()
    for lineno, raw in it:
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise InstanceFormatError(f"line {lineno}: bad edge line {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InstanceFormatError(f"line {lineno}: bad edge line {raw.strip()!r}")
        if u == v:
            raise InstanceFormatError(f"line {lineno}: self-loop on {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceFormatError(f"line {lineno}: endpoint out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise InstanceFormatError(f"header declared {m} edges, file has {len(edges)}")
    edges.sort()
    return InstanceSpec(name, n, edges)


def read_edge_list(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh, name=_basename(path))


def format_edge_list(spec):
    lines = [f"{spec.n} {len(spec.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(spec.edges))
    return "\n".join(lines) + "\n"


def write_edge_list(spec, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(spec))


def read_instance(path, complement=False):
    """Load by extension (.col/.clq/.dimacs are DIMACS) with a content
    sniff fallback.  Returns (InstanceSpec, warnings)."""
    lowered = str(path).lower()
    if lowered.endswith((".col", ".clq", ".dimacs")):
        return read_dimacs(path, complement=complement)
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        text = fh.readlines()
    head = next((l for l in text if l.strip()), "")
    if head.lstrip().startswith(("c", "p")):
        return parse_dimacs(text, name=_basename(path), complement=complement)
    if complement:
        raise InstanceFormatError("complement is only supported for DIMACS input")
    return parse_edge_list(text, name=_basename(path)), []


def _pair_offsets(n):
    # offsets[u] = rank of pair (u, u+1) in lexicographic pair order
    offsets = [0] * max(n, 1)
    for u in range(1, n):
        offsets[u] = offsets[u - 1] + (n - u)
    return offsets


def _unrank_pair(offsets, t):
    u = bisect_right(offsets, t) - 1
    return u, u + 1 + (t - offsets[u])


def gen_random_gnm(n, m, seed):
    """Uniform simple graph with exactly m edges, deterministic in
    (n, m, seed)."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m must be within [0, {total}], got {m}")
    offsets = _pair_offsets(n)
    rng = random.Random(seed)
    edges = [_unrank_pair(offsets, t) for t in sorted(rng.sample(range(total), m))]
    return InstanceSpec(f"gnm-n{n}-m{m}-s{seed}", n, edges)


def gen_cluster_editing(n, clusters, flips, seed):
    """Disjoint near-equal cliques with `flips` random pair toggles.
    Returns (InstanceSpec, flips): reverting the toggles costs exactly
    one edit each, so the instance is solvable within that budget."""
    if clusters < 1 or clusters > n:
        raise ValueError("clusters must be within [1, n]")
    total = n * (n - 1) // 2
    if not 0 <= flips <= total:
        raise ValueError(f"flips must be within [0, {total}], got {flips}")
    base = n // clusters
    extra = n % clusters
    label = []
    for c in range(clusters):
        label.extend([c] * (base + (1 if c < extra else 0)))
    present = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if label[u] == label[v]
    }
    rng = random.Random(seed)
    offsets = _pair_offsets(n)
    for t in rng.sample(range(total), flips):
        present.symmetric_difference_update({_unrank_pair(offsets, t)})
    name = f"ce-n{n}-c{clusters}-f{flips}-s{seed}"
    return InstanceSpec(name, n, sorted(present)), flips
