# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled growth kernels.  Mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

from dnamatmul.errors import PathExplosion

NAME = "cython"


def hybridization_table(const unsigned char[::1] tails, const unsigned char[::1] heads,
                        Py_ssize_t half):
    cdef unsigned char pair[256]
    cdef Py_ssize_t nv = tails.shape[0] // half
    cdef Py_ssize_t ne = heads.shape[0] // half
    cdef Py_ssize_t v, e, i, tbase, hbase
    cdef bint ok
    memset(pair, 0, 256)
    pair[ord('A')] = ord('T')
    pair[ord('T')] = ord('A')
    pair[ord('C')] = ord('G')
    pair[ord('G')] = ord('C')

    table = []
    for v in range(nv):
        row = []
        tbase = v * half
        for e in range(ne):
            hbase = e * half
            ok = True
            for i in range(half):
                if pair[tails[tbase + i]] != heads[hbase + i]:
                    ok = False
                    break
            if ok:
                row.append(e)
        table.append(row)
    return table


def grow_forest(list successors, Py_ssize_t rounds, Py_ssize_t cap):
    cdef Py_ssize_t n = len(successors)
    cdef Py_ssize_t n_succ = 0, i, k, p, r, start, end, size, capacity
    cdef Py_ssize_t *offsets
    cdef Py_ssize_t *targets
    cdef Py_ssize_t *parents
    cdef Py_ssize_t *verts
    cdef Py_ssize_t *grown

    if n > cap:
        raise PathExplosion(f"{n} single-vertex paths already exceed the cap of {cap}")

    for row in successors:
        n_succ += len(<list>row)
    offsets = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    targets = <Py_ssize_t *> malloc((n_succ + 1) * sizeof(Py_ssize_t))
    capacity = n if n > 16 else 16
    parents = <Py_ssize_t *> malloc(capacity * sizeof(Py_ssize_t))
    verts = <Py_ssize_t *> malloc(capacity * sizeof(Py_ssize_t))
    if offsets == NULL or targets == NULL or parents == NULL or verts == NULL:
        free(offsets); free(targets); free(parents); free(verts)
        raise MemoryError()

    try:
        k = 0
        for i in range(n):
            offsets[i] = k
            for t in <list>successors[i]:
                targets[k] = t
                k += 1
        offsets[n] = k

        for i in range(n):
            parents[i] = -1
            verts[i] = i
        size = n
        start = 0
        end = n
        for r in range(rounds):
            if start == end:
                break
            for p in range(start, end):
                i = verts[p]
                for k in range(offsets[i], offsets[i + 1]):
                    if size == capacity:
                        capacity *= 2
                        grown = <Py_ssize_t *> realloc(parents, capacity * sizeof(Py_ssize_t))
                        if grown == NULL:
                            raise MemoryError()
                        parents = grown
                        grown = <Py_ssize_t *> realloc(verts, capacity * sizeof(Py_ssize_t))
                        if grown == NULL:
                            raise MemoryError()
                        verts = grown
                    parents[size] = p
                    verts[size] = targets[k]
                    size += 1
                if size > cap:
                    raise PathExplosion(f"more than {cap} paths after extending path {p}")
            start = end
            end = size

        return [parents[i] for i in range(size)], [verts[i] for i in range(size)]
    finally:
        free(offsets)
        free(targets)
        free(parents)
        free(verts)


def materialize(list parents, list vertices, list objects):
    cdef Py_ssize_t n = len(vertices), i, parent
    cdef list paths = [None] * n
    cdef object obj
    for i in range(n):
        parent = parents[i]
        obj = objects[<Py_ssize_t>vertices[i]]
        if parent < 0:
            paths[i] = (obj,)
        else:
            paths[i] = <tuple>paths[parent] + (obj,)
    return paths
