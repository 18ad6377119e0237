"""Pure-Python kernels over tree codes.

A caret survives ``m`` applications of the left-spine stripping map iff it
is reached from the root through at least ``m`` right-child steps (its
"right depth").  All membership arithmetic reduces to counting carets by
right depth.
"""

from functools import lru_cache

BACKEND = "python"


@lru_cache(maxsize=1 << 18)
def survivor_profile(code):
    """``prof[m]`` = number of carets surviving m strips; ends with a 0 entry."""
    hist = []
    pending = []
    cur = 0
    after = False
    for ch in code:
        if ch == ")":
            continue
        if after:
            cur = pending.pop()
        if ch == "(":
            if cur == len(hist):
                hist.append(0)
            hist[cur] += 1
            pending.append(cur + 1)
            after = False
        else:
            after = True
    prof = [0] * (len(hist) + 1)
    acc = 0
    for d in range(len(hist) - 1, -1, -1):
        acc += hist[d]
        prof[d] = acc
    return tuple(prof)


def survivors(code, m):
    prof = survivor_profile(code)
    return prof[m] if m < len(prof) else 0


def code_complexity(code):
    return len(survivor_profile(code)) - 1


def phi_carets(codes, pointer, l):
    total = 0
    for i, code in enumerate(codes):
        if len(code) == 1:
            continue
        m = l if i <= pointer else l - (i - pointer)
        if m <= 0:
            total += (len(code) - 1) // 3
        else:
            total += survivors(code, m)
    return total


def min_position(codes, k, l):
    """Smallest pointer with ``phi_carets <= k``, or -1 if none exists."""
    for p in range(len(codes) + 1):
        if phi_carets(codes, p, l) <= k:
            return p
    return -1
