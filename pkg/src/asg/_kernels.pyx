# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership kernel.

Decides whether a target vector is a nonnegative integer combination of a
list of generators by depth-first search over residuals ``target - sum``.
Residuals live in the box ``[0, target]``, so visited states are a dense
bitmap indexed in mixed radix.  Optional cuts ``h`` prune residuals with
``h . r < 0`` (support functionals of the cone).

The search runs without the GIL.  Inputs that do not fit the int64 /
bitmap budget are refused (``None``) and handled by the Python fallback.
"""
from libc.stdlib cimport malloc, calloc, realloc, free
from libc.stdint cimport int64_t, uint8_t

MAX_BOX = 1 << 28
MAX_ENTRY = 1 << 40

BACKEND = "cython"


cdef int _search(int d, int ng, const int64_t* gens, const int64_t* target,
                 int nc, const int64_t* cuts, int64_t box) nogil:
    cdef int64_t* stride = <int64_t*> malloc(d * sizeof(int64_t))
    cdef int64_t* goff = <int64_t*> malloc((ng + 1) * sizeof(int64_t))
    cdef int64_t* r = <int64_t*> malloc(d * sizeof(int64_t))
    cdef int64_t* hr = <int64_t*> malloc((nc + 1) * sizeof(int64_t))
    cdef uint8_t* seen = <uint8_t*> calloc(box // 8 + 1, 1)
    cdef int64_t cap = 1024
    cdef int64_t top = 0
    cdef int64_t* stack = <int64_t*> malloc(cap * sizeof(int64_t))
    cdef int64_t* grown
    cdef int i, k, g, ok
    cdef int64_t idx, rem, child, acc
    cdef int found = 0
    if stride == NULL or goff == NULL or r == NULL or hr == NULL or seen == NULL or stack == NULL:
        found = -1
    else:
        stride[d - 1] = 1
        for i in range(d - 2, -1, -1):
            stride[i] = stride[i + 1] * (target[i + 1] + 1)
        for g in range(ng):
            acc = 0
            for i in range(d):
                acc += gens[g * d + i] * stride[i]
            goff[g] = acc
        idx = box - 1
        seen[idx >> 3] |= <uint8_t>(1 << (idx & 7))
        stack[top] = idx
        top += 1
        while top > 0 and not found:
            top -= 1
            idx = stack[top]
            if idx == 0:
                found = 1
                break
            rem = idx
            for i in range(d):
                r[i] = rem // stride[i]
                rem = rem - r[i] * stride[i]
            for k in range(nc):
                acc = 0
                for i in range(d):
                    acc += cuts[k * d + i] * r[i]
                hr[k] = acc
            # push in reverse so the first generator is explored first
            for g in range(ng - 1, -1, -1):
                ok = 1
                for i in range(d):
                    if gens[g * d + i] > r[i]:
                        ok = 0
                        break
                if not ok:
                    continue
                for k in range(nc):
                    acc = hr[k]
                    for i in range(d):
                        acc -= cuts[k * d + i] * gens[g * d + i]
                    if acc < 0:
                        ok = 0
                        break
                if not ok:
                    continue
                child = idx - goff[g]
                if seen[child >> 3] & (1 << (child & 7)):
                    continue
                seen[child >> 3] |= <uint8_t>(1 << (child & 7))
                if child == 0:
                    found = 1
                    break
                if top == cap:
                    grown = <int64_t*> realloc(stack, 2 * cap * sizeof(int64_t))
                    if grown == NULL:
                        found = -1
                        break
                    stack = grown
                    cap *= 2
                stack[top] = child
                top += 1
    free(stride)
    free(goff)
    free(r)
    free(hr)
    free(seen)
    free(stack)
    return found


def is_combination(gens, target, cuts=()):
    """True/False, or None when the instance exceeds the int64/bitmap budget."""
    cdef int d = len(target)
    cdef int ng, nc, i, k, res
    cdef int64_t box = 1
    cdef int64_t* cg
    cdef int64_t* ct
    cdef int64_t* cc
    for x in target:
        if x < 0:
            return False
        if x >= MAX_ENTRY:
            return None
    if not any(target):
        return True
    usable = [g for g in gens if all(a <= b for a, b in zip(g, target))]
    if not usable:
        return False
    pybox = 1
    for x in target:
        pybox *= x + 1
        if pybox > MAX_BOX:
            return None
    box = pybox
    tmax = max(target)
    for h in cuts:
        if sum(abs(a) for a in h) * tmax >= 1 << 62:
            return None
    ng = len(usable)
    nc = len(cuts)
    cg = <int64_t*> malloc(ng * d * sizeof(int64_t))
    ct = <int64_t*> malloc(d * sizeof(int64_t))
    cc = <int64_t*> malloc((nc * d + 1) * sizeof(int64_t))
    try:
        for k in range(ng):
            for i in range(d):
                cg[k * d + i] = usable[k][i]
        for i in range(d):
            ct[i] = target[i]
        for k in range(nc):
            for i in range(d):
                cc[k * d + i] = cuts[k][i]
        with nogil:
            res = _search(d, ng, cg, ct, nc, cc, box)
    finally:
        free(cg)
        free(ct)
        free(cc)
    if res < 0:
        raise MemoryError("membership search ran out of memory")
    return res == 1
