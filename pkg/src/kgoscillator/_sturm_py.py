"""Pure-Python Sturm-sequence kernels, used when the extension is unavailable."""

_EPS = 2.220446049250313e-16


def sturm_count(diag, offsq, x, pivmin):
    """Number of eigenvalues strictly below ``x``."""
    neg = 0
    q = diag[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0:
        neg += 1
    for d, e2 in zip(diag[1:], offsq):
        q = d - x - e2 / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            neg += 1
    return neg


def bisect_lowest(diag, offsq, count, lo, hi, pivmin):
    """Lowest ``count`` eigenvalues by bisection on ``[lo, hi]``."""
    diag = [float(v) for v in diag]
    offsq = [float(v) for v in offsq]
    out = []
    floor_ = lo
    for j in range(count):
        a, b = floor_, hi
        for _ in range(200):
            if b - a <= 2.0 * _EPS * max(abs(a), abs(b)) + pivmin:
                break
            mid = 0.5 * (a + b)
            if sturm_count(diag, offsq, mid, pivmin) > j:
                b = mid
            else:
                a = mid
        out.append(0.5 * (a + b))
        floor_ = a
    return out
