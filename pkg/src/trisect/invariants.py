"""Invariants of the 4-manifold encoded by a trisection diagram.

Pair ranks, Euler characteristic, integral homology, the intersection form
and its congruence invariants, and a homotopy-sphere screening report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import HeegaardDiagram, TrisectionDiagram, heegaard_pairs
from .intmatrix import (
    IntMatrix,
    _smith_with_inverses,
    lattice_intersect,
    lattice_sum,
    quotient_invariants,
    solve_left_rational,
    stack_rows,
)

PAIR_NAMES = ("alpha_beta", "beta_gamma", "gamma_alpha")

VERDICT_NOT_SPHERE = "NotHomotopySphere"
VERDICT_UNRESOLVED = "HomologySphereUnresolved"
VERDICT_TRIVIAL_PI1 = "TrivializedPi1"


class NotHomologicallyStandard(Exception):
    """A Heegaard pair's curve span has torsion, so the pair cannot present
    a connected sum of S1 x S2's."""

    def __init__(self, divisors, pair_name=None):
        self.divisors = tuple(divisors)
        self.pair_name = pair_name
        where = "" if pair_name is None else f" for pair {pair_name}"
        super().__init__(f"stacked curve span has torsion {list(self.divisors)}{where}")


class UnsupportedIntersectionForm(Exception):
    """The intersection-form algorithm needs torsion-free H1."""

    def __init__(self, torsion):
        self.torsion = tuple(torsion)
        super().__init__(f"H1 has torsion {list(self.torsion)}; form computation unsupported")


def pair_k(h: HeegaardDiagram) -> int:
    """Number k with H1 of the encoded 3-manifold equal to Z^k.

    Stacks the two curve matrices and takes Smith invariants of the
    cokernel.  Torsion-freeness is a necessary condition for the pair to be
    standard; torsion raises :class:`NotHomologicallyStandard`.
    """
    stacked = stack_rows(h.first.matrix(), h.second.matrix())
    free, torsion = quotient_invariants(2 * h.genus, stacked)
    if torsion:
        raise NotHomologicallyStandard(torsion)
    return free


def k_triple(d: TrisectionDiagram) -> tuple[int, int, int]:
    """The pair ranks in the order (alpha_beta, beta_gamma, gamma_alpha)."""
    out = []
    for name, h in zip(PAIR_NAMES, heegaard_pairs(d)):
        try:
            out.append(pair_k(h))
        except NotHomologicallyStandard as exc:
            raise NotHomologicallyStandard(exc.divisors, pair_name=name) from None
    return tuple(out)


def euler_characteristic(d: TrisectionDiagram) -> int:
    """chi = 2 + g - (k_ab + k_bg + k_ga)."""
    return 2 + d.genus - sum(k_triple(d))


def homology(d: TrisectionDiagram) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """H_0..H_4 as (free rank, torsion divisors) pairs.

    H1 is the cokernel of the three stacked curve matrices; H3 is its free
    part and H2 carries its torsion, with free rank b2 = chi - 2 + 2*b1.
    """
    chi = euler_characteristic(d)
    stacked = stack_rows(stack_rows(d.alpha.matrix(), d.beta.matrix()), d.gamma.matrix())
    b1, torsion = quotient_invariants(2 * d.genus, stacked)
    b2 = chi - 2 + 2 * b1
    return ((1, ()), (b1, torsion), (b2, torsion), (b1, ()), (1, ()))


def _quotient_basis_lifts(numerator: IntMatrix, denominator: IntMatrix):
    """Rows spanning a complement of the denominator inside the numerator lattice.

    Returns lattice vectors lifting a basis of the free part of N/D, plus
    the torsion divisors of that quotient.
    """
    n = numerator.nrows
    if n == 0:
        return [], ()
    coords = []
    for row in denominator.rows:
        sol = solve_left_rational(numerator, row)
        if sol is None or any(f.denominator != 1 for f in sol):
            raise ArithmeticError("denominator lattice does not sit inside the numerator lattice")
        coords.append([int(f) for f in sol])
    _, dmat, _, _, vinv = _smith_with_inverses(IntMatrix(coords, n))
    rank = sum(1 for x in dmat.diagonal() if x)
    torsion = tuple(x for x in dmat.diagonal() if x > 1)
    lifts = []
    for idx in range(rank, n):
        coeffs = vinv.rows[idx]
        lifts.append(
            [
                sum(coeffs[i] * numerator.rows[i][j] for i in range(n))
                for j in range(numerator.ncols)
            ]
        )
    return lifts, torsion


def intersection_form(d: TrisectionDiagram) -> IntMatrix:
    """Gram matrix of the intersection pairing on a basis of H2.

    H2 is modelled as (L_beta ∩ (L_alpha + L_gamma)) / ((L_beta ∩ L_alpha) +
    (L_beta ∩ L_gamma)).  For classes x, y the pairing is the symplectic
    product of x with the alpha-part of a rational decomposition
    y = y_alpha + y_gamma.  Supported only when H1 is torsion-free.
    """
    h = homology(d)
    if h[1][1]:
        raise UnsupportedIntersectionForm(h[1][1])
    g = d.genus
    la, lb, lc = d.alpha.matrix(), d.beta.matrix(), d.gamma.matrix()
    numerator = lattice_intersect(lb, lattice_sum(la, lc))
    denominator = lattice_sum(lattice_intersect(lb, la), lattice_intersect(lb, lc))
    lifts, torsion = _quotient_basis_lifts(numerator, denominator)
    if torsion:
        raise UnsupportedIntersectionForm(torsion)
    decomp = stack_rows(la, lc)
    alpha_parts = []
    for y in lifts:
        sol = solve_left_rational(decomp, y)
        if sol is None:
            raise ArithmeticError("H2 class does not decompose over alpha and gamma")
        alpha_parts.append(
            [
                sum(sol[i] * la.rows[i][j] for i in range(la.nrows))
                for j in range(2 * g)
            ]
        )
    rows = []
    for x in lifts:
        row = []
        for ya in alpha_parts:
            val = sum(
                Fraction(x[i]) * ya[g + i] - Fraction(x[g + i]) * ya[i] for i in range(g)
            )
            if val.denominator != 1:
                raise ArithmeticError("intersection number is not an integer")
            row.append(int(val))
        rows.append(row)
    q = IntMatrix(rows, len(lifts))
    if q != q.transpose():
        raise ArithmeticError("intersection pairing is not symmetric on this diagram")
    return q


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    signature: int
    parity: str  # "even" or "odd"


def form_invariants(q: IntMatrix) -> FormInvariants:
    """Rank, signature and parity of a symmetric integer form, exactly.

    The signature comes from congruence diagonalization over the rationals;
    a zero diagonal is repaired by the hyperbolic-pair trick (add one basis
    vector to another), which keeps everything exact.  Parity is even iff
    every diagonal entry is even, which is a congruence invariant.
    """
    if q.nrows != q.ncols:
        raise ValueError("form matrix must be square")
    if q != q.transpose():
        raise ValueError("form matrix must be symmetric")
    n = q.nrows
    m = [[Fraction(x) for x in row] for row in q.rows]
    pos = neg = 0
    for t in range(n):
        piv = next((i for i in range(t, n) if m[i][i]), None)
        if piv is None:
            off = next(
                ((i, j) for i in range(t, n) for j in range(i + 1, n) if m[i][j]), None
            )
            if off is None:
                break
            i, j = off
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            piv = i
        if piv != t:
            m[t], m[piv] = m[piv], m[t]
            for row in m:
                row[t], row[piv] = row[piv], row[t]
        p = m[t][t]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            f = m[i][t] / p
            if f:
                for k in range(n):
                    m[i][k] -= f * m[t][k]
                for k in range(n):
                    m[k][i] -= f * m[k][t]
    parity = "even" if all(row[i] % 2 == 0 for i, row in enumerate(q.rows)) else "odd"
    return FormInvariants(pos + neg, pos - neg, parity)


@dataclass(frozen=True)
class PoincareReport:
    homology_matches_s4: bool
    pi1_trivialized: bool
    verdict: str


_S4_HOMOLOGY = ((1, ()), (0, ()), (0, ()), (0, ()), (1, ()))


def poincare_candidate_check(d: TrisectionDiagram, tietze_budget: int = 10_000) -> PoincareReport:
    """Screen a diagram as a homotopy-4-sphere candidate.

    Never raises: a diagram whose pairs fail the standardness check simply
    does not match the 4-sphere's homology.
    """
    from .groups import pi1_presentation, tietze_simplify

    try:
        matches = homology(d) == _S4_HOMOLOGY
    except NotHomologicallyStandard:
        matches = False
    trivialized = tietze_simplify(pi1_presentation(d), tietze_budget).num_generators == 0
    if not matches:
        verdict = VERDICT_NOT_SPHERE
    elif trivialized:
        verdict = VERDICT_TRIVIAL_PI1
    else:
        verdict = VERDICT_UNRESOLVED
    return PoincareReport(matches, trivialized, verdict)
