"""Compiled inner loops. State arrays are mutated in place."""

import numpy as np
from numba import njit

MRG_M1 = 4294967087
MRG_M2 = 4294944443
MRG_A12 = 1403580
MRG_A13N = 810728
MRG_A21 = 527612
MRG_A23N = 1370589

MASK32 = 0xFFFFFFFF


@njit(cache=True, nogil=True)
def mrg32k3a_fill(state, out):
    s10, s11, s12 = state[0], state[1], state[2]
    s20, s21, s22 = state[3], state[4], state[5]
    for n in range(out.shape[0]):
        p1 = (MRG_A12 * s11 - MRG_A13N * s10) % MRG_M1
        s10 = s11
        s11 = s12
        s12 = p1
        p2 = (MRG_A21 * s22 - MRG_A23N * s20) % MRG_M2
        s20 = s21
        s21 = s22
        s22 = p2
        out[n] = (p1 - p2) % MRG_M1
    state[0] = s10
    state[1] = s11
    state[2] = s12
    state[3] = s20
    state[4] = s21
    state[5] = s22


@njit(cache=True, nogil=True)
def xorshift32_fill(state, out):
    x = state[0]
    for n in range(out.shape[0]):
        x ^= (x << 13) & MASK32
        x ^= x >> 17
        x ^= (x << 5) & MASK32
        out[n] = x
    state[0] = x


@njit(cache=True, nogil=True)
def scan_pairs(raw, m, wanted, out, start):
    """Split one draw stream into accepted (i1, i2) pairs.

    Writes lattice indices to out[start:], stops after ``wanted`` pairs or
    when an accepted i1 has no i2 behind it. Returns (pairs, consumed,
    rejected).
    """
    produced = 0
    rejected = 0
    i = 0
    total = raw.shape[0]
    while produced < wanted and i < total:
        i1 = raw[i]
        if i1 == 0 or i1 == m - 1:
            rejected += 1
            i += 1
            continue
        if i + 1 >= total:
            break
        out[start + produced] = (i1 - 1) * m + raw[i + 1]
        produced += 1
        i += 2
    return produced, i, rejected


def empty_draws(n: int) -> np.ndarray:
    return np.empty(n, dtype=np.int64)
