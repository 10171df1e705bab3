# cython: language_level=3
"""Compiled kernels; same contracts and results as pure.py."""

from math import gcd, lcm

BACKEND_NAME = "cython"


def normalize(num, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num == 0:
        return 0, 1
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    return num // g, den // g


def det_bareiss(Py_ssize_t size, list nums, list dens):
    cdef Py_ssize_t i, j, k, r, base
    cdef list work, row_i, row_k
    if size == 0:
        return 1, 1
    work = []
    scale = 1
    for i in range(size):
        base = i * size
        row_lcm = dens[base]
        for j in range(1, size):
            row_lcm = lcm(row_lcm, dens[base + j])
        scale = scale * row_lcm
        row_i = [nums[base + j] * (row_lcm // dens[base + j]) for j in range(size)]
        work.append(row_i)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            for r in range(k + 1, size):
                if work[r][k] != 0:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return 0, 1
        pivot_entry = work[k][k]
        row_k = work[k]
        for i in range(k + 1, size):
            row_i = work[i]
            head = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot_entry - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot_entry
    return normalize(sign * work[size - 1][size - 1], scale)


def pivot(list nums, list dens, Py_ssize_t ncols, Py_ssize_t prow, Py_ssize_t pcol):
    cdef Py_ssize_t nrows = len(nums) // ncols
    cdef Py_ssize_t base = prow * ncols
    cdef Py_ssize_t i, j, rbase
    pnum = nums[base + pcol]
    pden = dens[base + pcol]
    if pnum == 0:
        raise ZeroDivisionError("pivot on a zero entry")
    if pnum > 0:
        inv_num = pden
        inv_den = pnum
    else:
        inv_num = -pden
        inv_den = -pnum
    for j in range(ncols):
        a = nums[base + j]
        if a == 0:
            continue
        b = dens[base + j]
        g1 = gcd(a if a > 0 else -a, inv_den)
        g2 = gcd(inv_num, b)
        nums[base + j] = (a // g1) * (inv_num // g2)
        dens[base + j] = (b // g2) * (inv_den // g1)
    nums[base + pcol] = 1
    dens[base + pcol] = 1
    cdef list hot_j = []
    cdef list hot_n = []
    cdef list hot_d = []
    for j in range(ncols):
        if nums[base + j] != 0:
            hot_j.append(j)
            hot_n.append(nums[base + j])
            hot_d.append(dens[base + j])
    cdef Py_ssize_t nhot = len(hot_j), h
    for i in range(nrows):
        if i == prow:
            continue
        rbase = i * ncols
        fnum = nums[rbase + pcol]
        if fnum == 0:
            continue
        fden = dens[rbase + pcol]
        for h in range(nhot):
            j = <Py_ssize_t> hot_j[h]
            pn = hot_n[h]
            pd = hot_d[h]
            an = nums[rbase + j]
            ad = dens[rbase + j]
            sub_num = an * (fden * pd) - fnum * pn * ad
            if sub_num == 0:
                nums[rbase + j] = 0
                dens[rbase + j] = 1
            else:
                sub_den = ad * fden * pd
                g = gcd(sub_num if sub_num > 0 else -sub_num, sub_den)
                nums[rbase + j] = sub_num // g
                dens[rbase + j] = sub_den // g
        nums[rbase + pcol] = 0
        dens[rbase + pcol] = 1
