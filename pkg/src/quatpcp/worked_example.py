"""The 2 x 2 perfect quaternion array and the arrays derived from it."""

from .qarray import CArray, QArray
from .quaternion import ONE, ZERO, I, J, K

D = QArray((2, 2), [ONE, I, J, K])

D_H = CArray((2, 2), [ONE, I, ZERO, ZERO])
D_V = CArray((2, 2), [ZERO, ZERO, ONE, I])

# right construction, ordered (D_h + D_v, D_h - D_v)
D_TILDE_FIRST = CArray((2, 2), [ONE, I, ONE, I])
D_TILDE_SECOND = CArray((2, 2), [ONE, I, -ONE, -I])

# left construction, ordered (D_h* + D_v, D_h* - D_v)
D_HAT_FIRST = CArray((2, 2), [ONE, -I, ONE, I])
D_HAT_SECOND = CArray((2, 2), [ONE, -I, -ONE, -I])

PERFECT_BINARY_4 = QArray((4,), [ONE, ONE, ONE, -ONE])
