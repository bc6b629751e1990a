"""Complete Bell polynomials over any commutative ring that supports Python
``+``, ``*`` and multiplication by int (Fractions, floats, SymbolicValues).

Two independent evaluation routes are provided: the production path
(:func:`complete_bell`) separates out the first sequence element and runs a
division-free inner recursion over s_2..s_n; the reference path
(:func:`complete_bell_recurrence`) is the classic one-step recurrence and
exists as a cross-checking oracle.  Binomial coefficients enter only as
integer scalars, so evaluation over exact rings stays exact.
"""

from __future__ import annotations

import math
from typing import Sequence


def bell_core_terms(seq: Sequence, one=1) -> list:
    """Inner terms x_0..x_n of the first-element-excluded recursion.

    x_0 = 1, x_1 = 0 and x_j = sum_{l=0}^{j-2} C(j-1, l) s_{j-l} x_l, so each
    x_j depends on s_2..s_j only (s_1 never enters).
    """
    n = len(seq)
    terms = [one]
    if n >= 1:
        terms.append(0 * one)
    for j in range(2, n + 1):
        acc = 0 * one
        for l in range(0, j - 1):
            acc = acc + math.comb(j - 1, l) * (seq[j - l - 1] * terms[l])
        terms.append(acc)
    return terms


def complete_bell(seq: Sequence, one=1):
    """Complete Bell polynomial B_n(s_1, ..., s_n) of the whole sequence.

    Assembled as sum_j C(n, j) s_1^{n-j} x_j over the inner terms, which
    keeps everything division-free.  The empty sequence yields ``one``.
    """
    n = len(seq)
    if n == 0:
        return one
    terms = bell_core_terms(seq, one)
    s1 = seq[0]
    acc = 0 * one
    power = one  # s_1^0
    # iterate j downward so s_1 powers build up incrementally
    for j in range(n, -1, -1):
        acc = acc + math.comb(n, j) * (power * terms[j])
        if j > 0:
            power = power * s1
    return acc


def complete_bell_all(seq: Sequence, one=1) -> list:
    """All prefix values [B_0, B_1(s_1), ..., B_n(s_1..s_n)] by the classic
    recurrence B_{m+1} = sum_{i=0}^{m} C(m, i) B_{m-i} s_{i+1}."""
    values = [one]
    for m in range(len(seq)):
        acc = 0 * one
        for i in range(m + 1):
            acc = acc + math.comb(m, i) * (values[m - i] * seq[i])
        values.append(acc)
    return values


def complete_bell_recurrence(seq: Sequence, one=1):
    """B_n(s_1..s_n) by the classic recurrence; independent oracle for
    :func:`complete_bell`."""
    return complete_bell_all(seq, one)[-1]


def bell_binomial_convolution(a: Sequence, b: Sequence, one=1):
    """sum_{i=0}^{n} C(n, i) B_{n-i}(a) B_i(b) for equal-length sequences.

    By the binomial identity of complete Bell polynomials this equals
    B_n(a + b) with elementwise sequence addition.
    """
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    n = len(a)
    ba_vals = complete_bell_all(a, one)
    bb_vals = complete_bell_all(b, one)
    acc = 0 * one
    for i in range(n + 1):
        acc = acc + math.comb(n, i) * (ba_vals[n - i] * bb_vals[i])
    return acc


def bell_cot_closed_form(n: int, k: float) -> float:
    """Closed form of the Bell value over successive derivatives of
    pi*cot(pi*k): (-1)^j pi^{2j} for n = 2j and (-1)^j pi^{2j+1} cot(pi*k)
    for n = 2j+1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k == round(k):
        raise ValueError("cot sequence has a pole at integer k")
    j, rem = divmod(n, 2)
    if rem == 0:
        return (-1.0) ** j * math.pi ** (2 * j)
    cot = math.cos(math.pi * k) / math.sin(math.pi * k)
    return (-1.0) ** j * math.pi ** (2 * j + 1) * cot
