"""Checks that solver witnesses solve the original instance.  All
functions work from the pristine edge list, never from solver state."""


def verify_vc(n, edges, witness):
    """witness covers every edge and names distinct real vertices."""
    w = set(witness)
    if len(w) != len(witness):
        return False
    if any(v < 0 or v >= n for v in w):
        return False
    return all(u in w or v in w for u, v in edges)


def verify_ds(n, edges, witness):
    """Every vertex is in the witness or adjacent to a member."""
    w = set(witness)
    if len(w) != len(witness):
        return False
    if any(v < 0 or v >= n for v in w):
        return False
    covered = set(w)
    for u, v in edges:
        if u in w:
            covered.add(v)
        if v in w:
            covered.add(u)
    return len(covered) == n


def verify_ce(n, edges, edits, budget):
    """Applying the edit list to the instance yields disjoint cliques
    within budget.  Each pair may be edited at most once."""
    if len(edits) > budget:
        return False
    cur = {frozenset(e) for e in edges}
    touched = set()
    for op, u, v in edits:
        pair = frozenset((u, v))
        if pair in touched or u == v:
            return False
        if any(x < 0 or x >= n for x in (u, v)):
            return False
        touched.add(pair)
        if op == "del":
            if pair not in cur:
                return False
            cur.remove(pair)
        elif op == "add":
            if pair in cur:
                return False
            cur.add(pair)
        else:
            return False
    # connected components of the edited graph must be cliques
    adj = {v: set() for v in range(n)}
    for e in cur:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    for v in range(n):
        if v in seen:
            continue
        comp = {v}
        queue = [v]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        if any(len(adj[x]) != len(comp) - 1 for x in comp):
            return False
    return True
