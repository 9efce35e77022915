"""The homogeneous model: a projective quadric hypersurface and the cone
tube it is locally equivalent to.

Points live in C^5 with the bilinear pairing (t, s) = t^T I32 s and the
hermitian pairing <t, s> = (conj t, s) for I32 = diag(1, 1, 1, -1, -1).
The model hypersurface consists of the projective classes with

    (t, t) = 0,     <t, t> = 0,     Im(t^3 conj(t^4)) > 0

(components indexed 0..4); all three conditions are scale invariant.

The tube sits over the cone (x^1)^2 + (x^2)^2 = (x^3)^2, x^3 > 0, in C^3
with x^i = Re z^i.  Its Levi form degenerates along exactly one complex
direction, the radial one.
"""

from __future__ import annotations

from fractions import Fraction

from . import liealg, linalg
from .numfield import AlgNum, ZERO, ONE, HALF

PYTHAGOREAN_SAMPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17))


def _point(coords) -> list[AlgNum]:
    return [c if isinstance(c, AlgNum) else AlgNum.of(c) for c in coords]


def symmetric_pairing(t, s) -> AlgNum:
    t, s = _point(t), _point(s)
    eps = (1, 1, 1, -1, -1)
    return sum((AlgNum.of(e) * a * b for e, a, b in zip(eps, t, s)), ZERO)


def hermitian_pairing(t, s) -> AlgNum:
    return symmetric_pairing([c.conj() for c in _point(t)], s)


def membership_model(coords) -> dict:
    """Exact verdict for a projective point, with the three condition
    values as witnesses.  The sign of the positivity value is computed
    exactly in the ordered real subfield."""
    t = _point(coords)
    if all(c.is_zero() for c in t):
        raise ValueError("the zero vector has no projective class")
    sym = symmetric_pairing(t, t)
    herm = hermitian_pairing(t, t)
    pos = t[3] * t[4].conj()
    im = AlgNum(re=pos.im)          # Im of the product, a real field element
    sign = im.sign_real()
    return {
        "member": sym.is_zero() and herm.is_zero() and sign > 0,
        "symmetric": sym,
        "hermitian": herm,
        "positivity": im,
        "positivity_sign": sign,
    }


def _s_inverse():
    s = liealg.CONGRUENCE_S
    return linalg.mat_mul(liealg.CAL_I,
                          linalg.mat_mul(linalg.transpose(s), liealg.I32))


def to_exchange_chart(coords) -> list[AlgNum]:
    """Model coordinates -> coordinates of the anti-diagonal form."""
    return linalg.mat_vec(_s_inverse(), _point(coords))


def from_exchange_chart(coords) -> list[AlgNum]:
    return linalg.mat_vec(liealg.CONGRUENCE_S, _point(coords))


def infinitesimal_action(x_matrix, coords) -> list[AlgNum]:
    """Velocity of the one-parameter flow of an algebra element at a model
    point, in model coordinates.  Refuses points off the hypersurface."""
    if not membership_model(coords)["member"]:
        raise ValueError("point is not on the model hypersurface")
    u = to_exchange_chart(coords)
    return from_exchange_chart(linalg.mat_vec(x_matrix, u))


def tangency_defects(x_matrix, coords) -> tuple[AlgNum, AlgNum]:
    """Flow derivatives of the two defining pairings at a model point;
    both vanish identically for algebra elements."""
    w = _point(coords)
    s_inv = _s_inverse()
    a = linalg.mat_mul(liealg.CONGRUENCE_S, linalg.mat_mul(x_matrix, s_inv))
    aw = linalg.mat_vec(a, w)
    d_sym = symmetric_pairing(aw, w) + symmetric_pairing(w, aw)
    d_herm = hermitian_pairing(aw, w) + hermitian_pairing(w, aw)
    return d_sym, d_herm


def levi_form_tube(x) -> dict:
    """Levi data of the tube at a real cone point (x1, x2, x3).

    Returns the holomorphic tangent basis, the restricted Levi matrix,
    its kernel, and whether the kernel is the complex radial line."""
    p = _point(x)
    if any(not c.is_real() for c in p):
        raise ValueError("cone points have real coordinates")
    x1, x2, x3 = p
    cone = x1 * x1 + x2 * x2 - x3 * x3
    if not cone.is_zero():
        raise ValueError("point is off the cone")
    if x3.sign_real() <= 0:
        raise ValueError("apex sheet excluded: third coordinate must be positive")

    # gradient of the defining function in holomorphic coordinates
    tangent = ([x3, ZERO, x1], [ZERO, x3, x2])
    eps = (ONE, ONE, -ONE)

    def levi(u, v):
        return HALF * sum((e * a * b.conj() for e, a, b in zip(eps, u, v)), ZERO)

    matrix = [[levi(u, v) for v in tangent] for u in tangent]
    kernel = linalg.nullspace(matrix)
    directions = []
    radial = True
    for k in kernel:
        vec = [k[0] * tangent[0][i] + k[1] * tangent[1][i] for i in range(3)]
        directions.append(vec)
        # proportionality to (x1, x2, x3): all 2x2 minors with the point
        for i in range(3):
            for j in range(i + 1, 3):
                if not (vec[i] * p[j] - vec[j] * p[i]).is_zero():
                    radial = False
    return {
        "tangent_basis": tangent,
        "matrix": matrix,
        "determinant": linalg.determinant(matrix),
        "kernel_dim": len(kernel),
        "kernel_directions": directions,
        "kernel_is_radial": radial and len(kernel) == 1,
    }


def levi_kernel_distribution_check(samples=PYTHAGOREAN_SAMPLES) -> dict:
    """Kernel dimension and radial alignment at each sample cone point."""
    out = {}
    for x in samples:
        data = levi_form_tube(x)
        out[x] = {
            "kernel_dim": data["kernel_dim"],
            "kernel_is_radial": data["kernel_is_radial"],
        }
    return out
