"""Binned chi-square comparison of integer draws against an exact pmf."""

import math

import numpy as np

from zetatail.fit import chi2_sf


def binned_chisquare(spec, draws, tail_prob=1e-3, min_expected=20.0):
    """Chi-square of ``draws`` against ``spec`` with cells merged to ``min_expected``.

    Cells run from the support origin up to the point where the survival
    drops below ``tail_prob``; everything beyond forms one tail cell.
    Returns (chi2, df, p_value).
    """
    n = len(draws)
    origin = spec.origin
    k = origin
    while spec.survival(k) > tail_prob:
        k += 1
    draws = np.asarray(draws)
    inside = draws <= k
    counts = np.bincount((draws[inside] - origin).astype(np.int64), minlength=k - origin + 1)
    observed, expected = [], []
    o_acc, e_acc = 0, 0.0
    for x in range(origin, k + 1):
        o_acc += int(counts[x - origin])
        e_acc += n * spec.pmf(x)
        if e_acc >= min_expected:
            observed.append(o_acc)
            expected.append(e_acc)
            o_acc, e_acc = 0, 0.0
    o_acc += int(np.count_nonzero(~inside))
    e_acc += n * spec.survival(k)
    if e_acc >= min_expected or not expected:
        observed.append(o_acc)
        expected.append(e_acc)
    else:
        observed[-1] += o_acc
        expected[-1] += e_acc
    chi2 = math.fsum((o - e) ** 2 / e for o, e in zip(observed, expected))
    df = len(observed) - 1
    return chi2, df, chi2_sf(chi2, df)
