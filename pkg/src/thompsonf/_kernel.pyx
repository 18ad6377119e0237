# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``; same functions, same results."""

from cpython.unicode cimport PyUnicode_AsUTF8AndSize
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef int _hist(const char* s, Py_ssize_t n, int* hist, int* pending) noexcept nogil:
    # hist must hold n // 3 + 1 ints; returns max right depth + 1 (0 for a leaf)
    cdef Py_ssize_t i
    cdef int top = 0, cur = 0, depth = 0
    cdef bint after = False
    cdef char ch
    for i in range(n):
        ch = s[i]
        if ch == 41:  # ')'
            continue
        if after:
            top -= 1
            cur = pending[top]
        if ch == 40:  # '('
            while depth <= cur:
                hist[depth] = 0
                depth += 1
            hist[cur] += 1
            pending[top] = cur + 1
            top += 1
            after = False
        else:
            after = True
    return depth


cdef long _survivors(const char* s, Py_ssize_t n, int m) noexcept nogil:
    cdef Py_ssize_t i
    cdef int top = 0, cur = 0
    cdef long count = 0
    cdef bint after = False
    cdef char ch
    cdef int* pending
    if n == 1:
        return 0
    if m <= 0:
        return (n - 1) // 3
    pending = <int*> malloc(sizeof(int) * (n // 3 + 1))
    for i in range(n):
        ch = s[i]
        if ch == 41:
            continue
        if after:
            top -= 1
            cur = pending[top]
        if ch == 40:
            if cur >= m:
                count += 1
            pending[top] = cur + 1
            top += 1
            after = False
        else:
            after = True
    free(pending)
    return count


def survivor_profile(str code):
    cdef Py_ssize_t n
    cdef const char* s = PyUnicode_AsUTF8AndSize(code, &n)
    cdef int* hist = <int*> malloc(sizeof(int) * (n // 3 + 2))
    cdef int* pending = <int*> malloc(sizeof(int) * (n // 3 + 2))
    cdef int depth = _hist(s, n, hist, pending)
    cdef long acc = 0
    cdef int d
    prof = [0] * (depth + 1)
    for d in range(depth - 1, -1, -1):
        acc += hist[d]
        prof[d] = acc
    free(hist)
    free(pending)
    return tuple(prof)


def survivors(str code, int m):
    cdef Py_ssize_t n
    cdef const char* s = PyUnicode_AsUTF8AndSize(code, &n)
    return _survivors(s, n, m)


def code_complexity(str code):
    return len(survivor_profile(code)) - 1


def phi_carets(tuple codes, Py_ssize_t pointer, int l):
    cdef Py_ssize_t i, n
    cdef const char* s
    cdef long total = 0
    cdef Py_ssize_t m
    for i in range(len(codes)):
        s = PyUnicode_AsUTF8AndSize(<str> codes[i], &n)
        if n == 1:
            continue
        m = l if i <= pointer else l - (i - pointer)
        total += _survivors(s, n, <int> m)
    return total


def min_position(tuple codes, long k, int l):
    cdef Py_ssize_t t = len(codes)
    cdef Py_ssize_t i, p, q, n
    cdef const char* s
    cdef long total
    cdef long* counts
    cdef int m
    if t == 0:
        return 0
    # counts[i * (l + 1) + m]: carets of tree i surviving m strips
    counts = <long*> malloc(sizeof(long) * t * (l + 1))
    for i in range(t):
        s = PyUnicode_AsUTF8AndSize(<str> codes[i], &n)
        for m in range(l + 1):
            counts[i * (l + 1) + m] = _survivors(s, n, m)
    result = -1
    for p in range(t + 1):
        total = 0
        for i in range(t):
            if i <= p:
                total += counts[i * (l + 1) + l]
            else:
                q = i - p
                total += counts[i * (l + 1) + (l - q if q < l else 0)]
        if total <= k:
            result = p
            break
    free(counts)
    return result
