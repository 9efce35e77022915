"""Spencer-complex computations for the graded algebra.

Torsion candidates live in Lambda^2(m_minus)* (x) g, graded by a shifting
degree d: a candidate tau sends g_i ^ g_j into g_{i+j+d}.  The adjoint
codifferential is never materialized; instead tau lies in ker(del*) iff
<tau, del A> = 0 for every elementary one-cochain A on the dual side of
the algebra, where the pairing is evaluated through hat duality:

    coeff of tau^a_{bc}  =  eps_a * (del A(hat f_b, hat f_c))^{sigma(a)}

with sigma the Killing-induced index involution and eps its sign vector.
All of it is exact.
"""

from __future__ import annotations

from fractions import Fraction

from . import liealg, linalg
from .numfield import AlgNum, ZERO, ONE, I, HALF, SQRT2

# hat duality: f-hat_b = f_{sigma(b)}, f^a = eps_a <f-hat_a, .>  (0-based)
SIGMA = (9, 7, 8, 3, 4, 5, 6, 1, 2, 0)
EPS = (1, 1, 1, 1, 1, 1, -1, 1, 1, 1)

# leg pairs on m_minus, keyed by the printed subscript
LEG_PAIRS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}

# variables tau^a_{bc} present at each shifting degree (a is 1-based)
PATTERN_VARS = {
    1: ((1, "12"), (1, "13"), (2, "23"), (3, "23")),
    2: ((2, "12"), (3, "12"), (2, "13"), (3, "13"),
        (4, "23"), (5, "23"), (6, "23"), (7, "23")),
    3: ((4, "12"), (5, "12"), (6, "12"), (7, "12"),
        (4, "13"), (5, "13"), (6, "13"), (7, "13"),
        (8, "23"), (9, "23")),
}


def hat_duality() -> dict:
    return {"sigma": SIGMA, "eps": EPS}


class CochainMap:
    """A linear map defined on a coordinate subspace of g, zero elsewhere.

    mapping[src][tgt] is the tgt-component of the image of basis vector src
    (0-based indices in the chosen basis).
    """

    def __init__(self, basis_kind: str, domain, mapping):
        self.basis_kind = basis_kind
        self.domain = frozenset(domain)
        self.mapping = {
            s: {t: AlgNum.of(v) if not isinstance(v, AlgNum) else v
                for t, v in img.items()}
            for s, img in mapping.items()
        }
        if not self.domain.issuperset(self.mapping):
            raise ValueError("mapping defined outside declared domain")

    def value_on(self, idx: int) -> list[AlgNum]:
        out = [ZERO] * liealg.DIM
        for t, v in self.mapping.get(idx, {}).items():
            out[t] = v
        return out

    def apply(self, coords) -> list[AlgNum]:
        out = [ZERO] * liealg.DIM
        for s in self.domain:
            c = coords[s]
            if c.is_zero():
                continue
            for t, v in self.mapping.get(s, {}).items():
                out[t] = out[t] + c * v
        return out


def bracket_coords(basis: liealg.Basis, u, v) -> list[AlgNum]:
    """Bracket of two coordinate vectors via the structure constants."""
    out = [ZERO] * liealg.DIM
    sc = basis.structure_constants()
    for i in range(liealg.DIM):
        for j in range(i + 1, liealg.DIM):
            w = u[i] * v[j] - u[j] * v[i]
            if w.is_zero():
                continue
            for a, coeff in enumerate(sc[(i, j)]):
                if not coeff.is_zero():
                    out[a] = out[a] + w * coeff
    return out


class SpencerDifferential:
    """del A as a two-cochain, evaluated lazily on basis pairs."""

    def __init__(self, cochain: CochainMap):
        self.cochain = cochain
        self.basis = liealg.build_basis(cochain.basis_kind)
        self._cache = {}

    def value(self, i: int, j: int) -> list[AlgNum]:
        """del A(x_i, x_j) = [x_i, A x_j] - [x_j, A x_i] - A(pi [x_i, x_j])."""
        if (i, j) in self._cache:
            return self._cache[(i, j)]
        if i == j:
            return [ZERO] * liealg.DIM
        basis, a = self.basis, self.cochain
        ei = [ONE if k == i else ZERO for k in range(liealg.DIM)]
        ej = [ONE if k == j else ZERO for k in range(liealg.DIM)]
        term1 = bracket_coords(basis, ei, a.value_on(j))
        term2 = bracket_coords(basis, ej, a.value_on(i))
        inner = basis.structure_constants()[(i, j)] if i < j else None
        if inner is None:
            raw = basis.structure_constants()[(j, i)]
            inner = [-x for x in raw]
        term3 = a.apply(list(inner))
        out = [t1 - t2 - t3 for t1, t2, t3 in zip(term1, term2, term3)]
        self._cache[(i, j)] = out
        return out


def spencer_differential(cochain: CochainMap) -> SpencerDifferential:
    return SpencerDifferential(cochain)


_H_DOMAIN = tuple(range(5, 10))     # f6..f10, the non-negative dual side
_HAT_MINUS = tuple(SIGMA[b] for b in range(3))   # images of f1, f2, f3


def _pairing_rows(shift: int):
    """One row per elementary test cochain A^a_b (b over f6..f10), columns
    indexed by the pattern variables of the given shifting degree."""
    cols = PATTERN_VARS[shift]
    labels = []
    rows = []
    for b in _H_DOMAIN:
        for a in range(liealg.DIM):
            test = CochainMap("f", _H_DOMAIN, {b: {a: ONE}})
            d_test = spencer_differential(test)
            vals = {
                pair: d_test.value(_HAT_MINUS[i], _HAT_MINUS[j])
                for pair, (i, j) in LEG_PAIRS.items()
            }
            row = []
            for alpha, pair in cols:
                comp = vals[pair][SIGMA[alpha - 1]]
                row.append(comp if EPS[alpha - 1] == 1 else -comp)
            labels.append((a + 1, b + 1))
            rows.append(row)
    return labels, rows


def codifferential_kernel(shift: int) -> dict:
    """Kernel of del* on torsion candidates of the given shifting degree.

    Returns row labels (a, b) of the pairing matrix, the matrix itself,
    the kernel vectors both as raw column vectors and as {(a, pair): value}
    dicts, and the kernel dimension.
    """
    if shift not in PATTERN_VARS:
        raise ValueError(f"no torsion candidates at shifting degree {shift}")
    labels, rows = _pairing_rows(shift)
    null = linalg.nullspace(rows)
    cols = PATTERN_VARS[shift]
    vectors = [
        {var: val for var, val in zip(cols, vec) if not val.is_zero()}
        for vec in null
    ]
    return {
        "shift": shift,
        "variables": cols,
        "row_labels": labels,
        "matrix": rows,
        "kernel_raw": null,
        "kernel": vectors,
        "dim": len(null),
    }


def _inv_sqrt(n: int, den: int = 1) -> AlgNum:
    # 1/(den*sqrt(n)) for n in {2, 3, 6}
    ctor = {2: AlgNum.sqrt2, 3: AlgNum.sqrt3, 6: AlgNum.sqrt6}[n]
    return ctor(Fraction(1, n * den))


# the closed-form linear system satisfied by shifting-degree-2 candidates,
# one row per subject variable, columns in PATTERN_VARS[2] order
_R2 = _inv_sqrt(2)
PRINTED_DEGREE2_SYSTEM = (
    ((3, "12"), {(3, "12"): ONE, (5, "23"): -_R2, (7, "23"): -_R2}),
    ((2, "12"), {(2, "12"): ONE, (4, "23"): -_R2, (6, "23"): _R2}),
    ((3, "13"), {(3, "13"): ONE, (4, "23"): _R2, (6, "23"): _R2}),
    ((2, "13"), {(2, "13"): ONE, (5, "23"): -_R2, (7, "23"): _R2}),
    ((4, "23"), {(4, "23"): ONE, (2, "12"): _R2, (3, "13"): -_R2}),
    ((5, "23"), {(5, "23"): ONE, (3, "12"): _R2, (2, "13"): _R2}),
    ((6, "23"), {(6, "23"): ONE, (2, "12"): _R2, (3, "13"): _R2}),
    ((7, "23"), {(7, "23"): ONE, (3, "12"): _R2, (2, "13"): -_R2}),
)

# assembled row (a, b) whose subject variable matches each printed row
_DEGREE2_ROW_FOR_SUBJECT = {
    (3, "12"): (2, 8), (2, "12"): (3, 8), (3, "13"): (2, 9), (2, "13"): (3, 9),
    (4, "23"): (4, 10), (5, "23"): (5, 10), (6, "23"): (6, 10), (7, "23"): (7, 10),
}


def degree2_system_check() -> dict:
    """Compare the machine-assembled shifting-degree-2 pairing rows, each
    normalized by its subject coefficient, with the closed-form system."""
    data = codifferential_kernel(2)
    cols = data["variables"]
    by_label = dict(zip(data["row_labels"], data["matrix"]))
    residual = []
    normalized = []
    for subject, printed in PRINTED_DEGREE2_SYSTEM:
        row = by_label[_DEGREE2_ROW_FOR_SUBJECT[subject]]
        pivot = row[cols.index(subject)]
        norm = [x / pivot for x in row]
        normalized.append(norm)
        residual.append([n - printed.get(var, ZERO) for var, n in zip(cols, norm)])
    return {
        "match": all(x.is_zero() for row in residual for x in row),
        "normalized": normalized,
        "residual": residual,
        "kernel_dim": data["dim"],
        "kernel": data["kernel"],
    }


# closed-form columns of the shifting-degree-1 pairing matrix, keyed by
# variable, as {(a, b) row label: coefficient}
_R3 = _inv_sqrt(3)
_R32 = _inv_sqrt(3, 2)
_R6 = _inv_sqrt(6)
PRINTED_DEGREE1_COLUMNS = {
    (1, "12"): {(6, 8): -_R3, (9, 10): _R6},
    (1, "13"): {(6, 9): -_R3, (8, 10): -_R6},
    (2, "23"): {(6, 9): -_R32, (4, 9): -_R32, (7, 8): _R32, (5, 8): _R32,
                (8, 10): _R6},
    (3, "23"): {(7, 9): _R32, (5, 9): -_R32, (6, 8): _R32, (4, 8): -_R32,
                (9, 10): _R6},
}


def degree1_columns_check() -> bool:
    data = codifferential_kernel(1)
    cols = data["variables"]
    for k, var in enumerate(cols):
        printed = PRINTED_DEGREE1_COLUMNS[var]
        for label, row in zip(data["row_labels"], data["matrix"]):
            if row[k] != printed.get(label, ZERO):
                return False
    return True


def degree3_reduced_residuals(vec: dict) -> list[AlgNum]:
    """Residuals of the reduced relations cutting out the degree-3 kernel."""
    g = lambda a, p: vec.get((a, p), ZERO)
    three = AlgNum.of(3)
    return [
        g(4, "12") + g(5, "13") + three * g(6, "12") + g(7, "13"),
        g(4, "13") - g(5, "12") - three * g(6, "13") + g(7, "12"),
        g(8, "23") + SQRT2 * g(6, "12"),
        g(9, "23") + SQRT2 * g(6, "13"),
    ]


class CurvatureComponents:
    """Adapted-coframe curvature and torsion components of a degree-3
    kernel element, in complex frame coordinates.

    t10 = T^{0(10)}_{-2,-1(10)}    t01 = T^{0(10)}_{-2,-1(01)}
    r10 = R^{0(10)}_{-2,-1(10)}    r01 = R^{0(10)}_{-2,-1(01)}
    r1  = R^{1(10)}_{-1(10),-1(01)}
    """

    __slots__ = ("t10", "t01", "r10", "r01", "r1")

    def __init__(self, t10, t01, r10, r01, r1):
        self.t10, self.t01, self.r10, self.r01, self.r1 = t10, t01, r10, r01, r1

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__slots__}

    def relation_residuals(self) -> list[AlgNum]:
        """The two linear relations tying these components together, plus
        their conjugates.  All four vanish for genuine kernel elements."""
        rel1 = self.r10.conj() + HALF * self.t10 + HALF * self.r01
        rel2 = self.r1 - I * HALF * self.t10 + I * HALF * self.r01
        return [rel1, rel2, rel1.conj(), rel2.conj()]

    def relations_hold(self) -> bool:
        return all(r.is_zero() for r in self.relation_residuals())


def kernel_to_cr_components(vec: dict) -> CurvatureComponents:
    """Convert a degree-3 kernel element from tau components to the complex
    frame components of the associated curvature tensor."""
    g = lambda a, p: vec.get((a, p), ZERO)
    h = AlgNum.sqrt3(Fraction(1, 2))             # sqrt3/2
    w = AlgNum.sqrt6(Fraction(1, 2))             # sqrt(3/2) = sqrt6/2
    t10 = h * (g(4, "12") + g(5, "13")) + I * h * (g(5, "12") - g(4, "13"))
    t01 = h * (g(4, "12") - g(5, "13")) + I * h * (g(4, "13") + g(5, "12"))
    r10 = h * (g(6, "12") + g(7, "13")) + I * h * (g(7, "12") - g(6, "13"))
    r01 = h * (g(6, "12") - g(7, "13")) + I * h * (g(6, "13") + g(7, "12"))
    r1 = I * w * (g(8, "23") + I * g(9, "23"))
    return CurvatureComponents(t10, t01, r10, r01, r1)


# generators of the deformation space l^1, as maps m -> g in cr coordinates
# (1-based index dicts; made 0-based below)
_L1_IMAGES = (
    {1: {2: 1, 3: 1}},
    {1: {2: "i", 3: "-i"}},
    {2: {4: 1, 7: -1}, 3: {5: 1, 6: -1}},
    {2: {4: "i", 7: "-i"}, 3: {5: "-i", 6: "i"}},
    {2: {4: "i", 7: "i"}, 3: {5: "-i", 6: "-i"}},
    {2: {4: 1, 7: 1}, 3: {5: -1, 6: -1}},
    {2: {6: 1, 7: 1}, 3: {6: 1, 7: 1}},
    {2: {6: "i", 7: "i"}, 3: {6: "-i", 7: "-i"}},
)

_M_DOMAIN = tuple(range(5))     # cr indices of m


def _coerce(v) -> AlgNum:
    if v == "i":
        return I
    if v == "-i":
        return -I
    return AlgNum.of(v)


def l1_generators() -> list[CochainMap]:
    out = []
    for img in _L1_IMAGES:
        mapping = {s - 1: {t - 1: _coerce(v) for t, v in tgt.items()}
                   for s, tgt in img.items()}
        out.append(CochainMap("cr", _M_DOMAIN, mapping))
    return out


def l1_boundary_components(gen: CochainMap):
    """The three tracked components of del B: (del B)^{-2}_{-2,-1(10)} and
    (del B)^{+-1}_{-1(10),-1(01)}."""
    db = spencer_differential(gen)
    c1 = db.value(0, 1)[0]
    v = db.value(1, 2)
    return c1, v[1], v[2]


def torsion_complement() -> dict:
    """Span of the del-images of the l^1 generators inside the rank-4
    torsion space, with coordinates (Re c1, Im c1, Re c2, Im c2)."""
    gens = l1_generators()
    comps = [l1_boundary_components(g) for g in gens]
    rows = []
    for c1, c2, _ in comps:
        rows.append([AlgNum(re=c1.re), AlgNum(re=c1.im),
                     AlgNum(re=c2.re), AlgNum(re=c2.im)])
    rk = linalg.rank(rows)
    comp = linalg.nullspace(rows)   # vectors orthogonal to every image row
    return {
        "matrix": rows,
        "rank": rk,
        "complement_dim": len(comp),
        "components": comps,
        "witnesses": {
            "c1_of_B3": comps[2][0],
            "c1_of_B4": comps[3][0],
            "c2_of_B1": comps[0][1],
            "c3_of_B2": comps[1][2],
        },
    }
