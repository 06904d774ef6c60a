"""Pure-Python box scan, the fallback for the compiled ``_kernel`` module.

Both implementations must visit candidates in the same order and replace the
incumbent only on a strict improvement, so witnesses agree exactly.
"""

FAMILY_FIBER = 0
FAMILY_SECTION = 1
FAMILY_HORIZONTAL = 2


def scan_box(A, B, k, include_s, box):
    """Minimize (A*n_s + B*n_l)/mult over the admissible curve families.

    A, B are nonnegative integers (the ample class scaled to a common
    denominator), k >= 0 the horizontal slope constraint n_l >= k*n_s.
    Returns ``(num, den, family, n_s, n_l, mult)`` for the first minimizer.
    """
    best_num, best_den = -1, 1
    best = (0, 0, 0, 0)

    # fiber curves: n_s = 0, 1 <= mult <= n_l <= box
    for n_l in range(1, box + 1):
        num = B * n_l
        for mult in range(1, n_l + 1):
            if best_num < 0 or num * best_den < best_num * mult:
                best_num, best_den = num, mult
                best = (FAMILY_FIBER, 0, n_l, mult)

    if include_s:
        if best_num < 0 or A * best_den < best_num:
            best_num, best_den = A, 1
            best = (FAMILY_SECTION, 1, 0, 1)

    # horizontal curves other than the section: mult <= n_s, k*n_s <= n_l <= k*n_s + box
    for n_s in range(1, box + 1):
        lo = k * n_s
        for mult in range(1, n_s + 1):
            for n_l in range(lo, lo + box + 1):
                num = A * n_s + B * n_l
                if num * best_den < best_num * mult:
                    best_num, best_den = num, mult
                    best = (FAMILY_HORIZONTAL, n_s, n_l, mult)

    return (best_num, best_den) + best
