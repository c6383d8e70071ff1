"""Pure-numpy reference implementation of the tree-training kernels.

The native Cython module mirrors these functions operation-for-operation:
both accumulate histograms in ascending row order and evaluate the split
score with the same float64 expression, so results are bit-identical
between backends.  Scores use the sum-of-squares form (classification)
and the second-order gain numerator (regression); the parent term is a
constant per node and is left to the caller.
"""

import numpy as np

BACKEND = "python"


def hist_best_split_class(codes, rows, feats, y, n_bins, min_leaf):
    """Best Gini split for a classification node.

    codes: uint8 (n, d) bin codes, rows: int32 node member indices,
    feats: int32 candidate feature columns, y: uint8 labels in {0, 1}.

    Returns (feat_pos, bin, score): split sends code <= bin to the left;
    feat_pos indexes into `feats`; feat_pos == -1 means no valid split.
    Ties are broken by the first (feature, bin) reaching the best score.
    """
    node_codes = codes[rows]
    node_y = y[rows]
    pos_mask = node_y == 1
    n = rows.shape[0]
    best_pos, best_bin, best_score = -1, -1, -np.inf
    for fpos in range(feats.shape[0]):
        col = node_codes[:, feats[fpos]]
        total = np.bincount(col, minlength=n_bins).astype(np.int64)
        ones = np.bincount(col[pos_mask], minlength=n_bins).astype(np.int64)
        nl = np.cumsum(total)[:-1].astype(np.float64)
        nl1 = np.cumsum(ones)[:-1].astype(np.float64)
        nr = n - nl
        valid = (nl >= min_leaf) & (nr >= min_leaf)
        if not valid.any():
            continue
        nl0 = nl - nl1
        nr1 = float(node_y.sum()) - nl1
        nr0 = nr - nr1
        with np.errstate(divide="ignore", invalid="ignore"):
            score = (nl1 * nl1 + nl0 * nl0) / nl + (nr1 * nr1 + nr0 * nr0) / nr
        score[~valid] = -np.inf
        b = int(np.argmax(score))
        if score[b] > best_score:
            best_score = float(score[b])
            best_pos = fpos
            best_bin = b
    return best_pos, best_bin, best_score


def hist_best_split_reg(codes, rows, feats, grad, hess, n_bins, min_leaf, lam):
    """Best second-order split for a regression (boosting) node.

    Score is GL^2/(HL+lam) + GR^2/(HR+lam); caller subtracts the parent
    term G^2/(H+lam) to obtain the gain.  Same conventions as the
    classification variant.
    """
    node_codes = codes[rows]
    node_grad = grad[rows]
    node_hess = hess[rows]
    n = rows.shape[0]
    best_pos, best_bin, best_score = -1, -1, -np.inf
    for fpos in range(feats.shape[0]):
        col = node_codes[:, feats[fpos]]
        cnt = np.bincount(col, minlength=n_bins).astype(np.int64)
        gh = np.bincount(col, weights=node_grad, minlength=n_bins)
        hh = np.bincount(col, weights=node_hess, minlength=n_bins)
        # totals taken from the bin-order running sum so that the native
        # backend (which keeps a scalar accumulator) matches bit for bit
        gcum = np.cumsum(gh)
        hcum = np.cumsum(hh)
        g_total = gcum[-1]
        h_total = hcum[-1]
        nl = np.cumsum(cnt)[:-1]
        gl = gcum[:-1]
        hl = hcum[:-1]
        nr = n - nl
        valid = (nl >= min_leaf) & (nr >= min_leaf)
        if not valid.any():
            continue
        gr = g_total - gl
        hr = h_total - hl
        score = gl * gl / (hl + lam) + gr * gr / (hr + lam)
        score[~valid] = -np.inf
        b = int(np.argmax(score))
        if score[b] > best_score:
            best_score = float(score[b])
            best_pos = fpos
            best_bin = b
    return best_pos, best_bin, best_score


def partition_rows(codes, rows, feat, bin_cut):
    """Stable partition of node rows by code <= bin_cut on one feature."""
    go_left = codes[rows, feat] <= bin_cut
    return rows[go_left], rows[~go_left]


def tree_apply(x, feature, threshold, left, right):
    """Route each row of x to a leaf; returns leaf node ids (int32).

    Node arrays describe a binary tree: feature[i] < 0 marks a leaf,
    otherwise rows with x[:, feature[i]] < threshold[i] descend to
    left[i], the rest to right[i].
    """
    n = x.shape[0]
    node = np.zeros(n, dtype=np.int32)
    active = feature[node] >= 0
    while active.any():
        idx = np.nonzero(active)[0]
        cur = node[idx]
        f = feature[cur]
        go_left = x[idx, f] < threshold[cur]
        node[idx] = np.where(go_left, left[cur], right[cur])
        active[idx] = feature[node[idx]] >= 0
    return node
