# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels: a C twin of ``_pure`` with identical semantics.

Words are tuples of nonzero signed integers; all functions return
reduced tuples.  The hot loop everywhere is a cancellation stack held in
a C buffer.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc, PyMem_Realloc
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM

from braidact.errors import ResourceLimitError

BACKEND = "compiled"


cdef tuple _freeze(long long* buf, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = buf[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def reduce_letters(letters):
    """Freely reduce an arbitrary letter sequence."""
    cdef Py_ssize_t n = len(letters)
    cdef long long* buf = <long long*> PyMem_Malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long long x
    try:
        for obj in letters:
            x = obj
            if top > 0 and buf[top - 1] == -x:
                top -= 1
            else:
                buf[top] = x
                top += 1
        return _freeze(buf, top)
    finally:
        PyMem_Free(buf)


def concat_reduced(w1, w2):
    """Concatenate two reduced words, cancelling only at the seam."""
    cdef Py_ssize_t i = len(w1)
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t n2 = len(w2)
    while i > 0 and j < n2 and w1[i - 1] == -w2[j]:
        i -= 1
        j += 1
    return tuple(w1[:i]) + tuple(w2[j:])


def invert_reduced(w):
    """Inverse of a reduced word: reversed order, flipped signs."""
    cdef Py_ssize_t n = len(w)
    cdef long long* buf = <long long*> PyMem_Malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long x
    try:
        for i in range(n):
            x = w[n - 1 - i]
            buf[i] = -x
        return _freeze(buf, n)
    finally:
        PyMem_Free(buf)


def substitute(pos_images, neg_images, word, Py_ssize_t cap):
    """Apply a generator substitution to a reduced word, reducing on the fly.

    Raises ResourceLimitError as soon as the reduced intermediate exceeds
    ``cap`` letters.
    """
    cdef Py_ssize_t size = 64
    cdef long long* buf = <long long*> PyMem_Malloc(size * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long long x, y
    cdef long long* grown
    try:
        for obj in word:
            x = obj
            image = pos_images[x - 1] if x > 0 else neg_images[-x - 1]
            for img_obj in image:
                y = img_obj
                if top > 0 and buf[top - 1] == -y:
                    top -= 1
                else:
                    if top == size:
                        size *= 2
                        grown = <long long*> PyMem_Realloc(buf, size * sizeof(long long))
                        if grown == NULL:
                            raise MemoryError()
                        buf = grown
                    buf[top] = y
                    top += 1
                    if top > cap:
                        raise ResourceLimitError(cap)
        return _freeze(buf, top)
    finally:
        PyMem_Free(buf)
