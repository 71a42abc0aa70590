# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for truncated sparse multiplication.

Behaviourally identical to _kernels_py.mul_terms; only the loop and tuple
bookkeeping are compiled.  Coefficients stay generic Python objects so the
same kernel serves Fraction and ModInt coefficients.
"""

IMPLEMENTATION = "cython"


def mul_terms(dict a, dict b, long cap):
    """Multiply two term maps, keeping only total degree <= cap (cap < 0: all)."""
    cdef dict out = {}
    cdef list by_degree, acc
    cdef tuple ea, eb, key
    cdef Py_ssize_t i, j, n, nb
    cdef long da, db, rem, x
    cdef object ca, cb, cur, prod, item

    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a

    if cap < 0:
        for ea, ca in a.items():
            n = len(ea)
            for eb, cb in b.items():
                acc = [0] * n
                for i in range(n):
                    acc[i] = <object> ea[i] + <object> eb[i]
                key = tuple(acc)
                prod = ca * cb
                cur = out.get(key)
                if cur is None:
                    out[key] = prod
                else:
                    out[key] = cur + prod
    else:
        by_degree = []
        for eb, cb in b.items():
            da = 0
            for i in range(len(eb)):
                da += <long> eb[i]
            by_degree.append((da, eb, cb))
        by_degree.sort()
        nb = len(by_degree)
        for ea, ca in a.items():
            n = len(ea)
            da = 0
            for i in range(n):
                da += <long> ea[i]
            rem = cap - da
            if rem < 0:
                continue
            for j in range(nb):
                item = by_degree[j]
                db = <long> item[0]
                if db > rem:
                    break
                eb = <tuple> item[1]
                cb = item[2]
                acc = [0] * n
                for i in range(n):
                    acc[i] = <object> ea[i] + <object> eb[i]
                key = tuple(acc)
                prod = ca * cb
                cur = out.get(key)
                if cur is None:
                    out[key] = prod
                else:
                    out[key] = cur + prod

    return {e: c for e, c in out.items() if c}
