# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled box scan.  Same visiting order and tie rule as ``_kernel_py``.

Arithmetic is in 64-bit integers; the caller guarantees that every
cross-product fits (see ``grasshadri.oracle._fits_int64``).
"""

def scan_box(long long A, long long B, long long k, bint include_s, long long box):
    cdef long long best_num = -1, best_den = 1
    cdef long long num, lo
    cdef long long n_s, n_l, mult
    cdef int fam = 0
    cdef long long w_s = 0, w_l = 0, w_m = 0

    for n_l in range(1, box + 1):
        num = B * n_l
        for mult in range(1, n_l + 1):
            if best_num < 0 or num * best_den < best_num * mult:
                best_num = num
                best_den = mult
                fam = 0
                w_s = 0
                w_l = n_l
                w_m = mult

    if include_s:
        if best_num < 0 or A * best_den < best_num:
            best_num = A
            best_den = 1
            fam = 1
            w_s = 1
            w_l = 0
            w_m = 1

    for n_s in range(1, box + 1):
        lo = k * n_s
        for mult in range(1, n_s + 1):
            for n_l in range(lo, lo + box + 1):
                num = A * n_s + B * n_l
                if num * best_den < best_num * mult:
                    best_num = num
                    best_den = mult
                    fam = 2
                    w_s = n_s
                    w_l = n_l
                    w_m = mult

    return (best_num, best_den, fam, w_s, w_l, w_m)
