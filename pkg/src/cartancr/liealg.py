"""The graded Lie algebra so(3,2): bases, brackets, grading, Killing form.

Matrices are taken with respect to the anti-diagonal quadratic form CalI,
in which membership reads A^T CalI + CalI A = 0 and the grading by the
element Z is visible block-wise.  Three ordered bases are provided:

* standard -- ten real matrices (e_-2, e_-1|1, e_-1|2, e_0|1, e_0|2,
  E_0|1, E_0|2, E_1|1, E_1|2, E_2);
* cr -- complex combinations X(10) = (X|1 - i X|2)/2 and conjugates,
  closed under conjugation, with e_-2 and E_2 real;
* f -- a real orthonormal-up-to-sign basis for the Killing form
  (normalizers 1/sqrt6 and 1/sqrt12).

Degrees by position are (-2, -1, -1, 0, 0, 0, 0, 1, 1, 2) in every basis.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .numfield import AlgNum, ZERO, ONE, I, HALF

DIM = 10

# quadratic forms: diag(1,1,1,-1,-1) and the anti-diagonal exchange form
I32 = [[AlgNum.of(1 if i == j and i < 3 else (-1 if i == j else 0))
        for j in range(5)] for i in range(5)]
CAL_I = [[AlgNum.of(1 if i + j == 4 else 0) for j in range(5)] for i in range(5)]


def _mat(entries: dict) -> list[list[AlgNum]]:
    m = linalg.zeros(5, 5)
    for (r, c), v in entries.items():
        m[r - 1][c - 1] = AlgNum.of(v)
    return m


# the ten standard basis matrices in CalI coordinates
_STANDARD = [
    _mat({(4, 1): 1, (5, 2): -1}),                                  # e_-2
    _mat({(3, 1): 1, (5, 3): -1}),                                  # e_-1|1
    _mat({(3, 2): 1, (4, 3): -1}),                                  # e_-1|2
    _mat({(1, 1): 1, (2, 2): -1, (4, 4): 1, (5, 5): -1}),           # e_0|1
    _mat({(1, 2): 1, (2, 1): 1, (4, 5): -1, (5, 4): -1}),           # e_0|2
    _mat({(1, 1): 1, (2, 2): 1, (4, 4): -1, (5, 5): -1}),           # E_0|1 = Z
    _mat({(1, 2): 1, (2, 1): -1, (4, 5): -1, (5, 4): 1}),           # E_0|2
    _mat({(1, 3): 1, (3, 5): -1}),                                  # E_1|1
    _mat({(2, 3): 1, (3, 4): -1}),                                  # E_1|2
    _mat({(1, 4): 1, (2, 5): -1}),                                  # E_2
]

STANDARD_NAMES = ("e_-2", "e_-1|1", "e_-1|2", "e_0|1", "e_0|2",
                  "E_0|1", "E_0|2", "E_1|1", "E_1|2", "E_2")
CR_NAMES = ("e_-2", "e_-1(10)", "e_-1(01)", "e_0(10)", "e_0(01)",
            "E_0(10)", "E_0(01)", "E_1(10)", "E_1(01)", "E_2")
F_NAMES = tuple(f"f{k}" for k in range(1, 11))

DEGREES = (-2, -1, -1, 0, 0, 0, 0, 1, 1, 2)
Z_INDEX = 5  # grading element E_0|1

# index of the conjugate partner in the cr basis
CR_CONJ = (0, 2, 1, 4, 3, 6, 5, 8, 7, 9)


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_conj(a):
    return [[x.conj() for x in row] for row in a]


def commutator(a, b):
    return mat_add(linalg.mat_mul(a, b), mat_scale(AlgNum.of(-1), linalg.mat_mul(b, a)))


def membership_so32(matrix, form=None) -> bool:
    """A^T * form + form * A == 0, exactly."""
    g = CAL_I if form is None else form
    lhs = mat_add(linalg.mat_mul(linalg.transpose(matrix), g), linalg.mat_mul(g, matrix))
    return all(x.is_zero() for row in lhs for x in row)


def _cr_pair(x1, x2):
    # X(10) = (X|1 - i X|2)/2 and its conjugate
    p = mat_scale(HALF, mat_add(x1, mat_scale(-I, x2)))
    return p, mat_conj(p)


def _build_cr():
    e10, e01 = _cr_pair(_STANDARD[1], _STANDARD[2])
    t10, t01 = _cr_pair(_STANDARD[3], _STANDARD[4])
    u10, u01 = _cr_pair(_STANDARD[5], _STANDARD[6])
    v10, v01 = _cr_pair(_STANDARD[7], _STANDARD[8])
    return [_STANDARD[0], e10, e01, t10, t01, u10, u01, v10, v01, _STANDARD[9]]


def _build_f():
    cr = _build_cr()
    inv_r6 = AlgNum.sqrt6(Fraction(1, 6))          # 1/sqrt6
    inv_r12 = AlgNum.sqrt3(Fraction(1, 6))         # 1/sqrt12 = sqrt3/6
    def comb(c, a, b=None, minus=False):
        if b is None:
            return mat_scale(c, a)
        s = mat_add(a, mat_scale(AlgNum.of(-1 if minus else 1), b))
        return mat_scale(c, s)
    return [
        comb(inv_r6, cr[0]),
        comb(inv_r6, cr[1], cr[2]),
        comb(I * inv_r6, cr[1], cr[2], minus=True),
        comb(inv_r12, cr[3], cr[4]),
        comb(I * inv_r12, cr[3], cr[4], minus=True),
        comb(inv_r12, cr[5], cr[6]),
        comb(I * inv_r12, cr[5], cr[6], minus=True),
        comb(inv_r6, cr[7], cr[8]),
        comb(I * inv_r6, cr[7], cr[8], minus=True),
        comb(inv_r6, cr[9]),
    ]


class Basis:
    """An ordered basis of so(3,2) with exact expansion and cached brackets."""

    def __init__(self, kind: str, names, elements):
        self.kind = kind
        self.names = tuple(names)
        self.elements = elements
        self._expansion_rows = None
        self._sc = None

    def _vectorize(self, m):
        return [m[i][j] for i in range(5) for j in range(5)]

    def expand(self, matrix) -> list[AlgNum]:
        """Coefficient vector of a matrix in this basis (exact; raises off-span)."""
        if self._expansion_rows is None:
            cols = [self._vectorize(e) for e in self.elements]
            self._expansion_rows = [[cols[j][i] for j in range(DIM)] for i in range(25)]
        return linalg.solve(self._expansion_rows, self._vectorize(matrix))

    def structure_constants(self):
        """c[(b, c)] -> 10-vector of components of [x_b, x_c], for b < c."""
        if self._sc is None:
            sc = {}
            for b in range(DIM):
                for c in range(b + 1, DIM):
                    sc[(b, c)] = tuple(self.expand(commutator(self.elements[b], self.elements[c])))
            self._sc = sc
        return self._sc

    def c(self, a: int, b: int, c: int) -> AlgNum:
        """Structure constant c^a_{bc} with antisymmetry in (b, c)."""
        if b == c:
            return ZERO
        if b < c:
            return self.structure_constants()[(b, c)][a]
        return -self.structure_constants()[(c, b)][a]


_BASES: dict[str, Basis] = {}


def build_basis(kind: str) -> Basis:
    kind = kind.lower()
    if kind not in _BASES:
        if kind == "standard":
            _BASES[kind] = Basis(kind, STANDARD_NAMES, list(_STANDARD))
        elif kind == "cr":
            _BASES[kind] = Basis(kind, CR_NAMES, _build_cr())
        elif kind == "f":
            _BASES[kind] = Basis(kind, F_NAMES, _build_f())
        else:
            raise ValueError(f"unknown basis kind {kind!r}")
    return _BASES[kind]


def grading_decomposition() -> dict:
    """Degrees, grading element and distinguished subspace index sets.

    Verifies that every standard basis element is an ad-Z eigenvector with
    the expected eigenvalue before returning.
    """
    basis = build_basis("standard")
    z = basis.elements[Z_INDEX]
    for idx, (x, k) in enumerate(zip(basis.elements, DEGREES)):
        lhs = commutator(z, x)
        want = mat_scale(AlgNum.of(k), x)
        if not linalg.mat_eq(lhs, want):
            raise ArithmeticError(f"basis element {idx} is not an ad-Z eigenvector")
    return {
        "degrees": DEGREES,
        "z_index": Z_INDEX,
        "m_minus": (0, 1, 2),
        "m": (0, 1, 2, 3, 4),
        "h0": (5, 6),
        "h": (5, 6, 7, 8, 9),
        "dims": {-2: 1, -1: 2, 0: 4, 1: 2, 2: 1},
    }


def adjoint_matrix(x_matrix, basis: Basis | None = None):
    """ad_X as a 10x10 matrix in the given basis (f basis by default)."""
    basis = basis or build_basis("f")
    cols = [basis.expand(commutator(x_matrix, e)) for e in basis.elements]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def killing_form(x_matrix, y_matrix) -> AlgNum:
    """trace(ad X o ad Y), exact and basis-independent."""
    ax = adjoint_matrix(x_matrix)
    ay = adjoint_matrix(y_matrix)
    prod = linalg.mat_mul(ax, ay)
    return sum((prod[i][i] for i in range(DIM)), ZERO)


def killing_matrix(basis: Basis):
    ads = [adjoint_matrix(e, build_basis("f")) for e in basis.elements]
    out = linalg.zeros(DIM, DIM)
    for a in range(DIM):
        for b in range(a, DIM):
            prod = linalg.mat_mul(ads[a], ads[b])
            val = sum((prod[i][i] for i in range(DIM)), ZERO)
            out[a][b] = val
            out[b][a] = val
    return out


def change_of_basis(frm: Basis, to: Basis):
    """Matrix P with to-coordinates = P @ from-coordinates."""
    cols = [to.expand(e) for e in frm.elements]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def _congruence():
    # hyperbolic-pair columns relating diag(1,1,1,-1,-1) coordinates to the
    # anti-diagonal form: S^T I32 S = CalI exactly
    h = AlgNum.sqrt2(Fraction(1, 2))    # 1/sqrt2
    cols = [
        [h, ZERO, ZERO, h, ZERO],
        [ZERO, h, ZERO, ZERO, h],
        [ZERO, ZERO, ONE, ZERO, ZERO],
        [ZERO, h, ZERO, ZERO, -h],
        [h, ZERO, ZERO, -h, ZERO],
    ]
    return [[cols[j][i] for j in range(5)] for i in range(5)]


CONGRUENCE_S = _congruence()
