# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tree-training kernels.

Mirrors _pyref.py exactly: same accumulation order (ascending rows, then
ascending bins), same float64 score expressions, so the two backends are
bit-identical and interchangeable.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "native"


def hist_best_split_class(cnp.uint8_t[:, ::1] codes,
                          cnp.int32_t[::1] rows,
                          cnp.int32_t[::1] feats,
                          cnp.uint8_t[::1] y,
                          int n_bins,
                          int min_leaf):
    cdef Py_ssize_t m = rows.shape[0]
    cdef Py_ssize_t k = feats.shape[0]
    cdef cnp.int64_t[::1] total = np.empty(n_bins, dtype=np.int64)
    cdef cnp.int64_t[::1] ones = np.empty(n_bins, dtype=np.int64)
    cdef Py_ssize_t i, fpos, b
    cdef int f, r, best_pos = -1, best_bin = -1
    cdef long n1_total = 0
    cdef long nl_i, nl1_i, c
    cdef double n = <double> m
    cdef double nl, nl1, nl0, nr, nr1, nr0, score
    cdef double best_score = -np.inf
    cdef double n1t

    for i in range(m):
        if y[rows[i]] == 1:
            n1_total += 1
    n1t = <double> n1_total

    for fpos in range(k):
        f = feats[fpos]
        for b in range(n_bins):
            total[b] = 0
            ones[b] = 0
        for i in range(m):
            r = rows[i]
            c = codes[r, f]
            total[c] += 1
            if y[r] == 1:
                ones[c] += 1
        nl_i = 0
        nl1_i = 0
        for b in range(n_bins - 1):
            nl_i += total[b]
            nl1_i += ones[b]
            if nl_i < min_leaf or (m - nl_i) < min_leaf:
                continue
            nl = <double> nl_i
            nl1 = <double> nl1_i
            nl0 = nl - nl1
            nr = n - nl
            nr1 = n1t - nl1
            nr0 = nr - nr1
            score = (nl1 * nl1 + nl0 * nl0) / nl + (nr1 * nr1 + nr0 * nr0) / nr
            if score > best_score:
                best_score = score
                best_pos = <int> fpos
                best_bin = <int> b
    return best_pos, best_bin, best_score


def hist_best_split_reg(cnp.uint8_t[:, ::1] codes,
                        cnp.int32_t[::1] rows,
                        cnp.int32_t[::1] feats,
                        cnp.float64_t[::1] grad,
                        cnp.float64_t[::1] hess,
                        int n_bins,
                        int min_leaf,
                        double lam):
    cdef Py_ssize_t m = rows.shape[0]
    cdef Py_ssize_t k = feats.shape[0]
    cdef cnp.int64_t[::1] cnt = np.empty(n_bins, dtype=np.int64)
    cdef cnp.float64_t[::1] gh = np.empty(n_bins, dtype=np.float64)
    cdef cnp.float64_t[::1] hh = np.empty(n_bins, dtype=np.float64)
    cdef Py_ssize_t i, fpos, b
    cdef int f, r, best_pos = -1, best_bin = -1
    cdef long nl_i, c
    cdef double gl, hl, g_total, h_total, gr, hr, score
    cdef double best_score = -np.inf

    for fpos in range(k):
        f = feats[fpos]
        for b in range(n_bins):
            cnt[b] = 0
            gh[b] = 0.0
            hh[b] = 0.0
        for i in range(m):
            r = rows[i]
            c = codes[r, f]
            cnt[c] += 1
            gh[c] += grad[r]
            hh[c] += hess[r]
        g_total = 0.0
        h_total = 0.0
        for b in range(n_bins):
            g_total += gh[b]
            h_total += hh[b]
        nl_i = 0
        gl = 0.0
        hl = 0.0
        for b in range(n_bins - 1):
            nl_i += cnt[b]
            gl += gh[b]
            hl += hh[b]
            if nl_i < min_leaf or (m - nl_i) < min_leaf:
                continue
            gr = g_total - gl
            hr = h_total - hl
            score = gl * gl / (hl + lam) + gr * gr / (hr + lam)
            if score > best_score:
                best_score = score
                best_pos = <int> fpos
                best_bin = <int> b
    return best_pos, best_bin, best_score


def partition_rows(cnp.uint8_t[:, ::1] codes,
                   cnp.int32_t[::1] rows,
                   int feat,
                   int bin_cut):
    cdef Py_ssize_t m = rows.shape[0]
    cdef cnp.int32_t[::1] left = np.empty(m, dtype=np.int32)
    cdef cnp.int32_t[::1] right = np.empty(m, dtype=np.int32)
    cdef Py_ssize_t i, nl = 0, nr = 0
    cdef int r
    for i in range(m):
        r = rows[i]
        if codes[r, feat] <= bin_cut:
            left[nl] = r
            nl += 1
        else:
            right[nr] = r
            nr += 1
    return np.asarray(left[:nl]).copy(), np.asarray(right[:nr]).copy()


def tree_apply(cnp.float64_t[:, ::1] x,
               cnp.int32_t[::1] feature,
               cnp.float64_t[::1] threshold,
               cnp.int32_t[::1] left,
               cnp.int32_t[::1] right):
    cdef Py_ssize_t n = x.shape[0]
    cdef cnp.int32_t[::1] out = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t i
    cdef int node
    for i in range(n):
        node = 0
        while feature[node] >= 0:
            if x[i, feature[node]] < threshold[node]:
                node = left[node]
            else:
                node = right[node]
        out[i] = node
    return np.asarray(out)
