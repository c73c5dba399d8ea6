# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse exact-rank kernel.

Same elimination as the pure backend in qhseries.rank: rows are reduced
against registered pivot rows at their least column; over Z the update is
fraction-free (cross-multiplied and divided by the content), over F_p it
is ordinary modular elimination with monic pivots. Intermediate products
use 128-bit integers; rows whose reduced entries still cannot fit in 64
bits raise KernelOverflow so the caller can fall back to arbitrary
precision.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc, PyMem_Realloc

ctypedef long long i64

cdef extern from *:
    """
    typedef __int128 qh_int128;
    static const long long QH_I64_MAX = 9223372036854775807LL;
    """
    ctypedef long long i128 "qh_int128"
    const i64 QH_I64_MAX


class KernelOverflow(Exception):
    """Row entries exceeded 64-bit capacity after content reduction."""


cdef inline i128 _abs128(i128 x) noexcept:
    return -x if x < 0 else x


cdef i128 _gcd128(i128 a, i128 b) noexcept:
    cdef i128 t
    a = _abs128(a)
    b = _abs128(b)
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


cdef i64 _modinv(i64 a, i64 p) noexcept:
    # extended Euclid; a in (0, p), p prime
    cdef i64 old_r = a, r = p
    cdef i64 old_s = 1, s = 0
    cdef i64 q, t
    while r != 0:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


def rank_csr(long long[::1] indptr, int[::1] cols, long long[::1] vals,
             int ncols, long long modulus):
    """Rank of CSR-encoded rows; modulus 0 = over Q, prime p = over F_p."""
    cdef Py_ssize_t nrows = indptr.shape[0] - 1
    cdef int rank = 0
    if ncols <= 0 or nrows <= 0:
        return 0

    cdef int *wcols = <int *> PyMem_Malloc(ncols * sizeof(int))
    cdef i128 *wvals = <i128 *> PyMem_Malloc(ncols * sizeof(i128))
    cdef int *mcols = <int *> PyMem_Malloc(ncols * sizeof(int))
    cdef i128 *mvals = <i128 *> PyMem_Malloc(ncols * sizeof(i128))
    cdef int *pivot_of_col = <int *> PyMem_Malloc(ncols * sizeof(int))
    cdef int pcap = 256
    cdef int **pcols = <int **> PyMem_Malloc(pcap * sizeof(int *))
    cdef i64 **pvals = <i64 **> PyMem_Malloc(pcap * sizeof(i64 *))
    cdef int *plens = <int *> PyMem_Malloc(pcap * sizeof(int))
    if (wcols == NULL or wvals == NULL or mcols == NULL or mvals == NULL or
            pivot_of_col == NULL or pcols == NULL or pvals == NULL or plens == NULL):
        raise MemoryError()

    cdef Py_ssize_t row, k
    cdef int wlen, mlen, plen, lead, pid, i, j, ci, cj
    cdef i64 f, inv
    cdef i128 v, a, b, g, mr, mp, content, maxabs
    cdef int *tic
    cdef i128 *tiv
    cdef int **npc
    cdef i64 **npv
    cdef int *npl

    for i in range(ncols):
        pivot_of_col[i] = -1

    try:
        for row in range(nrows):
            # load the row
            wlen = 0
            for k in range(indptr[row], indptr[row + 1]):
                v = vals[k]
                if modulus:
                    v = v % modulus
                    if v < 0:
                        v += modulus
                if v != 0:
                    wcols[wlen] = cols[k]
                    wvals[wlen] = v
                    wlen += 1

            while wlen > 0:
                lead = wcols[0]
                pid = pivot_of_col[lead]
                if pid < 0:
                    # register a new pivot row, normalized
                    if modulus:
                        inv = _modinv(<i64> wvals[0], <i64> modulus)
                        for i in range(wlen):
                            wvals[i] = (wvals[i] * inv) % modulus
                    else:
                        content = 0
                        for i in range(wlen):
                            content = _gcd128(content, wvals[i])
                        if wvals[0] < 0:
                            content = -content
                        maxabs = 0
                        for i in range(wlen):
                            wvals[i] = wvals[i] / content
                            if _abs128(wvals[i]) > maxabs:
                                maxabs = _abs128(wvals[i])
                        if maxabs > <i128> QH_I64_MAX:
                            raise KernelOverflow()
                    if rank == pcap:
                        pcap *= 2
                        npc = <int **> PyMem_Realloc(pcols, pcap * sizeof(int *))
                        npv = <i64 **> PyMem_Realloc(pvals, pcap * sizeof(i64 *))
                        npl = <int *> PyMem_Realloc(plens, pcap * sizeof(int))
                        if npc == NULL or npv == NULL or npl == NULL:
                            raise MemoryError()
                        pcols = npc
                        pvals = npv
                        plens = npl
                    pcols[rank] = <int *> PyMem_Malloc(wlen * sizeof(int))
                    pvals[rank] = <i64 *> PyMem_Malloc(wlen * sizeof(i64))
                    if pcols[rank] == NULL or pvals[rank] == NULL:
                        raise MemoryError()
                    for i in range(wlen):
                        pcols[rank][i] = wcols[i]
                        pvals[rank][i] = <i64> wvals[i]
                    plens[rank] = wlen
                    pivot_of_col[lead] = rank
                    rank += 1
                    break

                # eliminate against pivot row pid
                plen = plens[pid]
                mlen = 0
                if modulus:
                    f = <i64> wvals[0]  # pivot is monic
                    i = 0
                    j = 0
                    while i < wlen and j < plen:
                        ci = wcols[i]
                        cj = pcols[pid][j]
                        if ci == cj:
                            v = (wvals[i] - <i128> f * pvals[pid][j]) % modulus
                            if v < 0:
                                v += modulus
                            if v != 0:
                                mcols[mlen] = ci
                                mvals[mlen] = v
                                mlen += 1
                            i += 1
                            j += 1
                        elif ci < cj:
                            mcols[mlen] = ci
                            mvals[mlen] = wvals[i]
                            mlen += 1
                            i += 1
                        else:
                            v = (-(<i128> f) * pvals[pid][j]) % modulus
                            if v < 0:
                                v += modulus
                            if v != 0:
                                mcols[mlen] = cj
                                mvals[mlen] = v
                                mlen += 1
                            j += 1
                    while i < wlen:
                        mcols[mlen] = wcols[i]
                        mvals[mlen] = wvals[i]
                        mlen += 1
                        i += 1
                    while j < plen:
                        v = (-(<i128> f) * pvals[pid][j]) % modulus
                        if v < 0:
                            v += modulus
                        if v != 0:
                            mcols[mlen] = pcols[pid][j]
                            mvals[mlen] = v
                            mlen += 1
                        j += 1
                else:
                    a = wvals[0]
                    b = pvals[pid][0]
                    g = _gcd128(a, b)
                    mr = b / g
                    mp = a / g
                    i = 0
                    j = 0
                    while i < wlen and j < plen:
                        ci = wcols[i]
                        cj = pcols[pid][j]
                        if ci == cj:
                            v = mr * wvals[i] - mp * pvals[pid][j]
                            if v != 0:
                                mcols[mlen] = ci
                                mvals[mlen] = v
                                mlen += 1
                            i += 1
                            j += 1
                        elif ci < cj:
                            mcols[mlen] = ci
                            mvals[mlen] = mr * wvals[i]
                            mlen += 1
                            i += 1
                        else:
                            mcols[mlen] = cj
                            mvals[mlen] = -mp * pvals[pid][j]
                            mlen += 1
                            j += 1
                    while i < wlen:
                        mcols[mlen] = wcols[i]
                        mvals[mlen] = mr * wvals[i]
                        mlen += 1
                        i += 1
                    while j < plen:
                        mcols[mlen] = pcols[pid][j]
                        mvals[mlen] = -mp * pvals[pid][j]
                        mlen += 1
                        j += 1
                    # content-reduce so the next cross-multiply fits in i128
                    if mlen > 0:
                        content = 0
                        for i in range(mlen):
                            content = _gcd128(content, mvals[i])
                        maxabs = 0
                        for i in range(mlen):
                            mvals[i] = mvals[i] / content
                            if _abs128(mvals[i]) > maxabs:
                                maxabs = _abs128(mvals[i])
                        if maxabs > <i128> QH_I64_MAX:
                            raise KernelOverflow()

                tic = wcols
                wcols = mcols
                mcols = tic
                tiv = wvals
                wvals = mvals
                mvals = tiv
                wlen = mlen
    finally:
        for i in range(rank):
            PyMem_Free(pcols[i])
            PyMem_Free(pvals[i])
        PyMem_Free(pcols)
        PyMem_Free(pvals)
        PyMem_Free(plens)
        PyMem_Free(pivot_of_col)
        PyMem_Free(wcols)
        PyMem_Free(wvals)
        PyMem_Free(mcols)
        PyMem_Free(mvals)

    return rank
