"""Pure-Python reference kernel for truncated sparse multiplication.

This is the fallback used when the compiled extension (_kernels) is not
built.  Both implementations must stay behaviourally identical; the test
suite cross-checks them whenever the compiled module is importable.

A term map is a dict from exponent tuples (one nonnegative int per
variable) to nonzero coefficients.  Coefficients only need +, * and
truthiness, so Fraction and ModInt both work.
"""

IMPLEMENTATION = "python"


def mul_terms(a, b, cap):
    """Multiply two term maps, keeping only total degree <= cap.

    cap < 0 disables truncation.  The larger operand is scanned in order
    of increasing total degree so the inner loop can stop as soon as the
    degree bound is exceeded.
    """
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    if cap < 0:
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
    else:
        by_degree = sorted(((sum(eb), eb, cb) for eb, cb in b.items()))
        for ea, ca in a.items():
            rem = cap - sum(ea)
            if rem < 0:
                continue
            for db, eb, cb in by_degree:
                if db > rem:
                    break
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
    return {e: c for e, c in out.items() if c}
