# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels in ``_pykernels``.

Weights of rank at most 4 are packed into one 64-bit integer (16 bits per
coordinate, offset so every field stays non-negative), which turns the
character product into integer additions plus a C++ hash map.
"""
from libc.stdint cimport int64_t
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

from . import _pykernels

cdef int BITS = 16
cdef int64_t OFFSET = 1 << 14
cdef int64_t MASK = (1 << 16) - 1


cdef inline bint _packable(dict f) except -1:
    for key in f:
        if len(key) > 4:
            return False
        for x in key:
            if x <= -OFFSET // 2 or x >= OFFSET // 2:
                return False
    return True


cdef int64_t _pack(tuple key):
    cdef int64_t out = 0
    cdef Py_ssize_t i
    for i in range(len(key)):
        out |= (<int64_t>key[i] + OFFSET) << (BITS * i)
    return out


cdef tuple _unpack(int64_t code, Py_ssize_t n):
    cdef Py_ssize_t i
    return tuple(<long>((code >> (BITS * i)) & MASK) - OFFSET for i in range(n))


cdef long _height4(tuple key):
    cdef Py_ssize_t n = len(key), i
    cdef long h = 0
    for i in range(n):
        h += (n - 1 - 2 * i) * <long>key[i]
    return h


def convolve(dict f, dict g, floor):
    """Same contract as ``_pykernels.convolve``."""
    if not f or not g:
        return {}
    cdef Py_ssize_t n = len(next(iter(f)))
    if not (_packable(f) and _packable(g)):
        return _pykernels.convolve(f, g, floor)
    cdef bint use_floor = floor is not None
    cdef long fl = floor if use_floor else 0
    cdef vector[int64_t] gk
    cdef vector[long] gh, ge, go
    cdef int64_t base = 0
    cdef Py_ssize_t i, j, m
    for i in range(n):
        base |= OFFSET << (BITS * i)
    for key, (e, o) in g.items():
        gk.push_back(_pack(key))
        gh.push_back(_height4(key))
        ge.push_back(e)
        go.push_back(o)
    m = gk.size()
    cdef unordered_map[int64_t, pair[long, long]] acc
    cdef int64_t ka, code
    cdef long ha, ae, ao, be, bo
    for key, (e, o) in f.items():
        ka = _pack(key)
        ha = _height4(key)
        ae = e
        ao = o
        for j in range(m):
            if use_floor and ha + gh[j] < fl:
                continue
            code = ka + gk[j] - base
            be = ge[j]
            bo = go[j]
            acc[code].first += ae * be + ao * bo
            acc[code].second += ae * bo + ao * be
    out = {}
    for item in acc:
        if item.second.first or item.second.second:
            out[_unpack(item.first, n)] = (item.second.first, item.second.second)
    return out


cdef inline Py_ssize_t _find(list parent, Py_ssize_t x):
    cdef Py_ssize_t root = x, nxt
    while <Py_ssize_t>parent[root] != root:
        root = parent[root]
    while <Py_ssize_t>parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


cdef inline void _union(list parent, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t ra = _find(parent, a), rb = _find(parent, b)
    if ra == rb:
        return
    if ra == 0 or (rb != 0 and ra < rb):
        parent[rb] = ra
    else:
        parent[ra] = rb


def close_paths(int n_vertices, list src, list tgt, list zero_words, list binomials, int max_len):
    """Same contract as ``_pykernels.close_paths``."""
    cdef list out_arrows = [[] for _ in range(n_vertices)]
    cdef Py_ssize_t arrow, v, node, length, i, m, child
    for arrow in range(len(src)):
        out_arrows[src[arrow]].append(arrow)
    cdef set zero = set(zero_words)
    cdef list zero_lens = sorted({len(word) for word in zero})
    cdef dict moves = {}
    for lhs, rhs in binomials:
        moves.setdefault(lhs, []).append(rhs)
        moves.setdefault(rhs, []).append(lhs)
    cdef list move_lens = sorted({len(word) for word in moves})

    cdef list parent = [0]
    cdef list words = [()]
    cdef list start = [-1]
    cdef list ends = [-1]
    cdef dict trivial = {}
    cdef dict lookup = {}
    cdef list pending = []
    cdef list level = []
    cdef list fresh
    cdef tuple w, nw, piece, other
    cdef bint dead

    for v in range(n_vertices):
        node = len(parent)
        parent.append(node)
        words.append(())
        start.append(v)
        ends.append(v)
        trivial[v] = node
        level.append(node)

    for length in range(1, max_len + 1):
        fresh = []
        for node in level:
            if _find(parent, node) == 0:
                continue
            w = words[node]
            for arrow in out_arrows[ends[node]]:
                nw = w + (arrow,)
                dead = False
                for m in zero_lens:
                    if length >= m and nw[length - m:] in zero:
                        dead = True
                        break
                if dead:
                    continue
                child = len(parent)
                parent.append(child)
                words.append(nw)
                start.append(start[node])
                ends.append(tgt[arrow])
                lookup[nw] = child
                fresh.append(child)
        for node in fresh:
            w = words[node]
            for m in move_lens:
                for i in range(0, length - m + 1):
                    piece = w[i:i + m]
                    reps = moves.get(piece)
                    if reps is None:
                        continue
                    for rep in reps:
                        other = w[:i] + rep + w[i + m:]
                        if len(other) > length:
                            pending.append((node, other))
                        elif not other:
                            _union(parent, node, trivial[start[node]])
                        else:
                            target = lookup.get(other)
                            _union(parent, node, 0 if target is None else target)
        level = fresh
        if not level:
            break

    for node, other in pending:
        target = lookup.get(other)
        _union(parent, node, 0 if target is None else target)

    cdef dict classes = {}
    cdef Py_ssize_t root
    for node in range(1, len(parent)):
        root = _find(parent, node)
        if root != 0:
            classes.setdefault(root, []).append(node)
    result = []
    for members in classes.values():
        lens = [len(words[x]) for x in members]
        rep = min(members, key=lambda x: (len(words[x]), words[x]))
        result.append((start[rep], ends[rep], min(lens), max(lens), words[rep]))
    result.sort(key=lambda r: (r[0], r[1], r[2], r[4]))
    return result
