"""Pure-Python hot kernels (reference implementation and fallback)."""
from __future__ import annotations


def convolve(f: dict, g: dict, floor: int | None) -> dict:
    """Product of two sparse characters with ``(even, odd)`` coefficients.

    Terms whose weight has scaled height below ``floor`` are dropped.
    """
    out: dict = {}
    for a, (ae, ao) in f.items():
        n = len(a)
        ha = sum((n + 1 - 2 * i) * x for i, x in enumerate(a, start=1))
        for b, (be, bo) in g.items():
            if floor is not None:
                hb = sum((n + 1 - 2 * i) * x for i, x in enumerate(b, start=1))
                if ha + hb < floor:
                    continue
            key = tuple(x + y for x, y in zip(a, b))
            e = ae * be + ao * bo
            o = ae * bo + ao * be
            if key in out:
                pe, po = out[key]
                out[key] = (pe + e, po + o)
            else:
                out[key] = (e, o)
    return {k: v for k, v in out.items() if v[0] or v[1]}


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def close_paths(n_vertices: int, src: list[int], tgt: list[int],
                zero_words: list[tuple[int, ...]],
                binomials: list[tuple[tuple[int, ...], tuple[int, ...]]],
                max_len: int) -> list[tuple[int, int, int, int, tuple[int, ...]]]:
    """Classes of nonzero paths in ``kQ / (I + paths longer than max_len)``.

    ``I`` is generated by the monomials ``zero_words`` and the differences
    ``u - v`` of ``binomials``; words list arrow ids in traversal order.
    Because every generator is a monomial or a difference of two paths, the
    quotient has a basis of equivalence classes of paths.  Returns one tuple
    ``(source, target, min_len, max_len, representative)`` per nonzero class.
    """
    out_arrows: list[list[int]] = [[] for _ in range(n_vertices)]
    for arrow, s in enumerate(src):
        out_arrows[s].append(arrow)
    zero = set(zero_words)
    zero_lens = sorted({len(w) for w in zero})
    moves: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for u, v in binomials:
        moves.setdefault(u, []).append(v)
        moves.setdefault(v, []).append(u)
    move_lens = sorted({len(w) for w in moves})

    DEAD = 0
    parent = [0]
    words: list[tuple[int, ...]] = [()]
    start: list[int] = [-1]
    index: dict[tuple[int, int], int] = {}  # trivial paths by (vertex, -1)
    lookup: dict[tuple[int, ...], int] = {}
    pending: list[tuple[int, tuple[int, ...]]] = []

    def new_node(word: tuple[int, ...], s: int) -> int:
        parent.append(len(parent))
        words.append(word)
        start.append(s)
        return len(parent) - 1

    level: list[int] = []
    for v in range(n_vertices):
        node = new_node((), v)
        index[(v, -1)] = node
        level.append(node)

    def union(a: int, b: int) -> None:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            if ra == DEAD or (rb != DEAD and ra < rb):
                parent[rb] = ra
            else:
                parent[ra] = rb

    def endpoint(node: int) -> int:
        w = words[node]
        return tgt[w[-1]] if w else start[node]

    for length in range(1, max_len + 1):
        fresh: list[int] = []
        for node in level:
            if _find(parent, node) == DEAD:
                continue
            w = words[node]
            for arrow in out_arrows[endpoint(node)]:
                nw = w + (arrow,)
                if any(len(nw) >= m and nw[-m:] in zero for m in zero_lens):
                    continue
                child = new_node(nw, start[node])
                lookup[nw] = child
                fresh.append(child)
        for node in fresh:
            w = words[node]
            for m in move_lens:
                for i in range(0, length - m + 1):
                    piece = w[i:i + m]
                    for rep in moves.get(piece, ()):
                        other = w[:i] + rep + w[i + m:]
                        if len(other) > length:
                            pending.append((node, other))
                        elif not other:
                            union(node, index[(start[node], -1)])
                        else:
                            target = lookup.get(other)
                            union(node, DEAD if target is None else target)
        level = fresh
        if not level:
            break

    for node, other in pending:
        target = lookup.get(other)
        union(node, DEAD if target is None else target)

    classes: dict[int, list[int]] = {}
    for node in range(1, len(parent)):
        root = _find(parent, node)
        if root != DEAD:
            classes.setdefault(root, []).append(node)
    result = []
    for members in classes.values():
        lens = [len(words[m]) for m in members]
        rep = min(members, key=lambda m: (len(words[m]), words[m]))
        result.append((start[rep], endpoint(rep), min(lens), max(lens), words[rep]))
    result.sort(key=lambda r: (r[0], r[1], r[2], r[4]))
    return result
