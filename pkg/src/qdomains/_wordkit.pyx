# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word-statistics kernels.

Same interface as _wordkit_py: inversion counts, switch counts, letter
profiles, lexicographic fiber enumeration and Mahonian sums.
"""

from libc.stdlib cimport free, malloc

COMPILED = True


cdef int* _alloc_word(object word, Py_ssize_t d) except NULL:
    cdef int* a = <int*> malloc((d if d > 0 else 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(d):
        a[i] = word[i]
    return a


cdef long _inversions_c(int* a, Py_ssize_t d):
    cdef Py_ssize_t i, j
    cdef long total = 0
    for i in range(d - 1):
        for j in range(i + 1, d):
            if a[i] > a[j]:
                total += 1
    return total


def inversions(word):
    cdef Py_ssize_t d = len(word)
    if d < 2:
        return 0
    cdef int* a = _alloc_word(word, d)
    try:
        return _inversions_c(a, d)
    finally:
        free(a)


def switch_count(word):
    cdef Py_ssize_t d = len(word), i
    if d <= 1:
        return d - 1
    cdef int* a = _alloc_word(word, d)
    cdef long total = 0
    try:
        for i in range(d - 1):
            if a[i] != a[i + 1]:
                total += 1
        return total
    finally:
        free(a)


def word_profile(word, n):
    cdef Py_ssize_t d = len(word), i
    cdef int nn = n
    cdef int* counts = <int*> malloc((nn if nn > 0 else 1) * sizeof(int))
    if counts == NULL:
        raise MemoryError()
    try:
        for i in range(nn):
            counts[i] = 0
        for i in range(d):
            counts[<int> word[i] - 1] += 1
        return tuple([counts[i] for i in range(nn)])
    finally:
        free(counts)


cdef int* _start_word(object counts, Py_ssize_t* out_d) except NULL:
    cdef Py_ssize_t d = 0, i, pos = 0
    cdef int letter, c, j
    for c in counts:
        d += c
    cdef int* a = <int*> malloc((d if d > 0 else 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    letter = 1
    for c in counts:
        for j in range(c):
            a[pos] = letter
            pos += 1
        letter += 1
    out_d[0] = d
    return a


cdef bint _next_permutation(int* a, Py_ssize_t d):
    cdef Py_ssize_t i = d - 2, j, lo, hi
    cdef int tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = d - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1; hi = d - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1; hi -= 1
    return True


def fiber_words(counts):
    cdef Py_ssize_t d = 0, i
    cdef int* a = _start_word(counts, &d)
    try:
        out = [tuple([a[i] for i in range(d)])]
        while _next_permutation(a, d):
            out.append(tuple([a[i] for i in range(d)]))
        return out
    finally:
        free(a)


def fiber_inversions(counts):
    cdef Py_ssize_t d = 0
    cdef int* a = _start_word(counts, &d)
    try:
        out = [0]
        while _next_permutation(a, d):
            out.append(_inversions_c(a, d))
        return out
    finally:
        free(a)


def mahonian_sum(counts, q):
    """Sum of q**inversions(alpha) over all words with the given letter counts."""
    cdef long max_m = 0, total_seen = 0, m
    cdef int c
    for c in counts:
        max_m += total_seen * c
        total_seen += c
    cdef double complex qq = q
    cdef double complex* powers = <double complex*> malloc((max_m + 1) * sizeof(double complex))
    if powers == NULL:
        raise MemoryError()
    cdef Py_ssize_t d = 0
    cdef int* a = NULL
    cdef double complex acc
    try:
        powers[0] = 1.0
        for m in range(1, max_m + 1):
            powers[m] = powers[m - 1] * qq
        a = _start_word(counts, &d)
        acc = powers[0]
        while _next_permutation(a, d):
            acc += powers[_inversions_c(a, d)]
        return complex(acc.real, acc.imag)
    finally:
        free(powers)
        if a != NULL:
            free(a)
