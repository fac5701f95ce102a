# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled edit-distance kernels.

Mirrors _pure.py exactly; the pure module is the reference semantics and
test_kernels.py cross-checks the two on random inputs.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "c"


cdef int _edit_distance_raw(int* a, int n, int* b, int m,
                            int* row_a, int* row_b) noexcept nogil:
    cdef int i, j, cost, best, ai
    cdef int* prev = row_a
    cdef int* cur = row_b
    cdef int* tmp
    if n == 0:
        return m
    if m == 0:
        return n
    for j in range(m + 1):
        prev[j] = j
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            if prev[j - 1] + cost < best:
                best = prev[j - 1] + cost
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    return prev[m]


cdef int* _to_c_array(seq) except NULL:
    cdef int n = len(seq)
    cdef int* out = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
    cdef int i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


def edit_distance(a, b):
    """Unit-cost Levenshtein distance between two token-id sequences."""
    cdef int n = len(a)
    cdef int m = len(b)
    cdef int* ca = _to_c_array(a)
    cdef int* cb = NULL
    cdef int* row_a = NULL
    cdef int* row_b = NULL
    cdef int result
    try:
        cb = _to_c_array(b)
        row_a = <int*> PyMem_Malloc((m + 1) * sizeof(int))
        row_b = <int*> PyMem_Malloc((m + 1) * sizeof(int))
        if row_a == NULL or row_b == NULL:
            raise MemoryError()
        result = _edit_distance_raw(ca, n, cb, m, row_a, row_b)
    finally:
        PyMem_Free(ca)
        PyMem_Free(cb)
        PyMem_Free(row_a)
        PyMem_Free(row_b)
    return result


def shifted_edit_search(hyp, ref, int max_span=10, int max_shifts=50):
    """Greedy phrase-shift search; see _pure.shifted_edit_search.

    Returns (total_edits, shifts_applied).
    """
    cdef int n = len(hyp)
    cdef int m = len(ref)
    cdef int* cur_hyp = _to_c_array(hyp)
    cdef int* cref = NULL
    cdef int* rest = NULL
    cdef int* cand = NULL
    cdef int* row_a = NULL
    cdef int* row_b = NULL
    cdef int best, shifts, d, rest_len, top
    cdef int start, length, dest, k
    cdef int found_d, found_start, found_len, found_dest, have_found
    try:
        cref = _to_c_array(ref)
        rest = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
        cand = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
        row_a = <int*> PyMem_Malloc((m + 1) * sizeof(int))
        row_b = <int*> PyMem_Malloc((m + 1) * sizeof(int))
        if rest == NULL or cand == NULL or row_a == NULL or row_b == NULL:
            raise MemoryError()
        best = _edit_distance_raw(cur_hyp, n, cref, m, row_a, row_b)
        shifts = 0
        with nogil:
            while shifts < max_shifts and best > 1:
                have_found = 0
                found_d = 0
                found_start = 0
                found_len = 0
                found_dest = 0
                rest_len = 0
                for start in range(n):
                    top = max_span if max_span < n - start else n - start
                    for length in range(1, top + 1):
                        # rest = hyp without hyp[start:start+length]
                        rest_len = n - length
                        for k in range(start):
                            rest[k] = cur_hyp[k]
                        for k in range(start + length, n):
                            rest[k - length] = cur_hyp[k]
                        for dest in range(rest_len + 1):
                            if dest == start:
                                continue
                            for k in range(dest):
                                cand[k] = rest[k]
                            for k in range(length):
                                cand[dest + k] = cur_hyp[start + k]
                            for k in range(dest, rest_len):
                                cand[k + length] = rest[k]
                            d = _edit_distance_raw(cand, n, cref, m,
                                                   row_a, row_b)
                            # enumeration is lexicographic in
                            # (start, length, dest), so keeping the first
                            # strict minimum reproduces the tuple tie-break
                            # of the pure kernel
                            if have_found == 0 or d < found_d:
                                have_found = 1
                                found_d = d
                                found_start = start
                                found_len = length
                                found_dest = dest
                if have_found == 0 or found_d + 1 >= best:
                    break
                # apply the winning shift in place via cand
                rest_len = n - found_len
                for k in range(found_start):
                    rest[k] = cur_hyp[k]
                for k in range(found_start + found_len, n):
                    rest[k - found_len] = cur_hyp[k]
                for k in range(found_dest):
                    cand[k] = rest[k]
                for k in range(found_len):
                    cand[found_dest + k] = cur_hyp[found_start + k]
                for k in range(found_dest, rest_len):
                    cand[k + found_len] = rest[k]
                for k in range(n):
                    cur_hyp[k] = cand[k]
                best = found_d
                shifts += 1
        return best + shifts, shifts
    finally:
        PyMem_Free(cur_hyp)
        PyMem_Free(cref)
        PyMem_Free(rest)
        PyMem_Free(cand)
        PyMem_Free(row_a)
        PyMem_Free(row_b)
