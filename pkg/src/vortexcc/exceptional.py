"""Exact finiteness certification for five-vortex vorticity tuples.

Finiteness of normalized central configurations can fail only on an explicit
algebraic set of vorticities.  Two views of that set are implemented:

* a fixed catalog of 29 cluster diagrams, each carrying a disjunction of
  polynomial clauses over (Γ_1, ..., Γ_5); a tuple "matches" a diagram when
  some relabelling of the vortices makes every clause equality vanish while
  every side inequation stays nonzero;
* a sufficient condition that certifies finiteness outright: every nonempty
  index subset J has nonzero total strength, and every J with |J| >= 2 has
  nonzero pairwise momentum L_J.

The verdict relies solely on the subset condition (sound); catalog matches
are reported as diagnostics.  All arithmetic is exact for rational inputs;
float inputs are evaluated against a scale-aware zero tolerance and flagged
approximate.

Notation: L_J = sum over unordered pairs of J of Γ_jΓ_k, L = L_{12345},
and label permutations are tried exhaustively (all 120), which
over-approximates each diagram's own symmetry soundly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .exactpoly import Poly
from .quantities import VorticitySet, total_vorticity

__all__ = [
    "ConstraintClause",
    "DiagramConstraint",
    "CatalogMatch",
    "SubsetCheck",
    "ExceptionalReport",
    "TotalVorticityZeroError",
    "catalog",
    "evaluate_diagram_constraints",
    "check_subset_conditions",
    "verdict",
    "catalog_records",
]

N_VORTICES = 5


class TotalVorticityZeroError(ValueError):
    """The checks presuppose nonzero total vorticity."""


@dataclass(frozen=True)
class ConstraintClause:
    """One conjunctive branch: equalities that must vanish, inequations that must not.

    ``lambda_branch`` records which rotation multiplier the branch belongs to
    ("pm1" for Λ = ±1, "pmi" for Λ = ±i, "any" when unconstrained); it is
    reported, never verified against a configuration.
    """

    equalities: tuple
    inequations: tuple = ()
    lambda_branch: str = "any"


@dataclass(frozen=True)
class DiagramConstraint:
    """Catalog entry: diagram id (1..29) and its clause disjunction.

    ``strokes``/``circles`` are descriptive notes on the constraint-generating
    pattern; the clause polynomials are the operative data.
    """

    id: int
    clauses: tuple
    strokes: str = ""
    circles: str = ""
    symmetry_note: str = "catalog labels are representative; all 120 relabellings are tried"


@dataclass(frozen=True)
class CatalogMatch:
    diagram_id: int
    clause_index: int
    lambda_branch: str
    permutation: tuple  # permutation[i] = input vortex assigned to catalog label i+1


@dataclass(frozen=True)
class SubsetCheck:
    passed: bool
    witness: tuple | None = None       # 1-based indices of the violating subset
    witness_kind: str | None = None    # "vanishing_sum" | "vanishing_pair_momentum"


@dataclass(frozen=True)
class ExceptionalReport:
    verdict: str                       # "certified_finite" | "exceptional_suspect"
    subset_check: SubsetCheck
    matches: tuple
    approximate: bool
    notes: tuple = ()


# ---------------------------------------------------------------------------
# Catalog construction
# ---------------------------------------------------------------------------


def _g(i: int) -> Poly:
    return Poly.variable(i - 1, N_VORTICES)


def _gsum(*idx: int) -> Poly:
    p = _g(idx[0])
    for i in idx[1:]:
        p = p + _g(i)
    return p


def _lsub(*idx: int) -> Poly:
    p = Poly.constant(0, N_VORTICES)
    for a, b in combinations(sorted(idx), 2):
        p = p + _g(a) * _g(b)
    return p


def _build_catalog() -> tuple:
    L = _lsub(1, 2, 3, 4, 5)

    def clause(eqs, neqs=(), branch="any"):
        return ConstraintClause(tuple(eqs), tuple(neqs), branch)

    entries = []

    def add(id_, clauses, strokes="", circles=""):
        entries.append(DiagramConstraint(id_, tuple(clauses), strokes, circles))

    add(1, [
        clause([_gsum(1, 2, 5), _gsum(1, 2) - _gsum(3, 4)], [_gsum(1, 2)], "pm1"),
        clause([_g(1) * _g(2) - _lsub(3, 4, 5), _g(3) * _g(4) - _lsub(1, 2, 5), L],
               [_gsum(1, 2), _gsum(3, 4)], "pmi"),
    ],
        strokes="isolated stroke 1-2 and isolated stroke 3-4, opposite colors",
        circles="ends of each stroke circled in its own color; vertex 5 bare")
    add(2, [
        clause([_gsum(3, 4, 5), _gsum(1, 2) - _g(5)], [_gsum(1, 2), _gsum(3, 4)], "pm1"),
    ],
        strokes="isolated stroke 1-2; isolated one-color triangle 3-4-5",
        circles="1,2 circled; two triangle vertices (3,4) circled")
    add(3, [
        clause([_gsum(3, 4, 5)], [_gsum(1, 2)], "pm1"),
        clause([_g(1) * _g(2) - _lsub(3, 4, 5), L], [_gsum(1, 2)], "pmi"),
    ],
        strokes="isolated stroke 1-2; one-color triangle 3-4-5",
        circles="1,2 circled; triangle fully circled in its color")
    add(4, [
        clause([_gsum(1, 2), _gsum(3, 4)]),
    ],
        strokes="isolated two-color edge 1-2 and isolated two-color edge 3-4",
        circles="each pair circled and mutually close; vertex 5 bare")
    add(5, [
        clause([_g(1) * _g(3) - _g(2) * _g(4)]),
    ],
        strokes="alternating-color four-cycle: edges 1-2 and 3-4 in one color, 1-4 and 2-3 in the other; vertex 5 isolated",
        circles="1,2,3,4 at maximal order")
    add(6, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="isolated one-color triangle on 1,2,3",
        circles="triangle uncircled")
    add(7, [
        clause([_gsum(1, 2, 3)]),
    ],
        strokes="single-color-close cluster {1,2,3}",
        circles="1,2,3 circled in that color")
    add(8, [
        clause([_gsum(1, 2, 3)]),
    ],
        strokes="single-color-close cluster {1,2,3}, second variant",
        circles="1,2,3 circled in that color")
    add(9, [
        clause([_lsub(1, 2, 4), _lsub(1, 3, 4)]),
    ],
        strokes="two one-color triangles 1-2-4 and 1-3-4 sharing the edge 1-4",
        circles="shared triangles uncircled")
    add(10, [
        clause([_lsub(1, 2, 4)]),
    ],
        strokes="one-color triangle 1-2-4 attached to further strokes",
        circles="triangle uncircled")
    add(11, [
        clause([_g(2) - _g(3), _gsum(1, 4) - _g(5)]),
    ],
        strokes="butterfly around the two-color edge 1-4; vertex 5 attached to 2 and 3 by one stroke of each color",
        circles="none")
    add(12, [
        clause([_gsum(1, 2), _gsum(4, 5)]),
    ],
        strokes="isolated two-color edge 1-2; isolated two-color edge 4-5",
        circles="each pair circled and mutually close")
    add(13, [
        clause([_lsub(1, 2, 3), _lsub(1, 4, 5)]),
    ],
        strokes="two one-color triangles 1-2-3 and 1-4-5 attached at vertex 1",
        circles="uncircled")
    add(14, [
        clause([_g(1) - _gsum(2, 3), _lsub(1, 2, 3)], [_gsum(4, 5)], "pm1"),
        clause([_lsub(1, 4, 5), L, _lsub(1, 2, 3)], [_gsum(4, 5)], "pmi"),
    ],
        strokes="triangles 1-2-3 and 1-4-5 attached at 1; 1-4-5 isolated in its color",
        circles="two circles on the isolated triangle (4,5)")
    add(15, [
        clause([_g(1) - _gsum(4, 5), _g(1) - _gsum(2, 3)], [_gsum(2, 3)], "pm1"),
        clause([L, _lsub(1, 4, 5) - _lsub(1, 2, 3)], [_gsum(2, 3), _gsum(4, 5)], "pmi"),
    ],
        strokes="triangles 1-2-3 and 1-4-5 attached at 1, each isolated in its color",
        circles="two circles on each triangle (2,3 and 4,5)")
    add(16, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="one-color triangle 1-2-3, isolated in its color",
        circles="triangle uncircled")
    add(17, [
        clause([_gsum(1, 2, 3)]),
    ],
        strokes="single-color-close cluster {1,2,3}",
        circles="1,2,3 circled")
    add(18, [
        clause([_lsub(1, 3, 5), _lsub(1, 2, 3, 4)]),
    ],
        strokes="fully stroked one-color quadrilateral 1-2-3-4 plus triangle 1-3-5",
        circles="uncircled")
    add(19, [
        clause([_lsub(1, 3, 5)]),
    ],
        strokes="one-color triangle 1-3-5, isolated in its color",
        circles="uncircled triangle")
    add(20, [
        clause([_lsub(1, 2, 3, 4), _gsum(2, 4)]),
    ],
        strokes="fully one-color-stroked quadrilateral on 1,2,3,4",
        circles="2 and 4 circled and mutually close in the other color")
    add(21, [
        clause([_lsub(1, 2, 3, 4)]),
    ],
        strokes="fully one-color-stroked quadrilateral on 1,2,3,4",
        circles="uncircled")
    add(22, [
        clause([_gsum(1, 2, 3, 4)]),
    ],
        strokes="single-color-close cluster {1,2,3,4}",
        circles="1,2,3,4 circled")
    add(23, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="isolated one-color triangle 1-2-3, variant a",
        circles="uncircled")
    add(24, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="isolated one-color triangle 1-2-3, variant b",
        circles="uncircled")
    add(25, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="isolated one-color triangle 1-2-3, variant c",
        circles="uncircled")
    add(26, [
        clause([_lsub(1, 2, 3)]),
    ],
        strokes="isolated one-color triangle 1-2-3, variant d",
        circles="uncircled")
    add(27, [
        clause([_lsub(1, 2, 3, 4), _lsub(1, 2, 3, 5)]),
    ],
        strokes="two fully stroked quadrilaterals 1-2-3-4 and 1-2-3-5 sharing a triangle",
        circles="uncircled")
    add(28, [
        clause([_lsub(1, 2, 3, 4)]),
    ],
        strokes="fully stroked quadrilateral 1-2-3-4 attached to vertex 5",
        circles="uncircled")
    add(29, [
        clause([L]),
    ],
        strokes="every pair close in both colors (fully clustered five)",
        circles="uncircled")
    return tuple(entries)


_CATALOG = _build_catalog()


def catalog() -> tuple:
    """The fixed 29-diagram constraint catalog, ids 1..29."""
    return _CATALOG


def catalog_records() -> list:
    """Machine-readable catalog: one record per diagram."""
    records = []
    for d in _CATALOG:
        records.append({
            "id": d.id,
            "strokes": d.strokes,
            "circles": d.circles,
            "symmetry_note": d.symmetry_note,
            "clauses": [
                {
                    "lambda_branch": c.lambda_branch,
                    "equalities": [str(p) for p in c.equalities],
                    "inequations": [str(p) for p in c.inequations],
                }
                for c in d.clauses
            ],
        })
    return records


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def _require_five(v: VorticitySet) -> None:
    if v.n != N_VORTICES:
        raise ValueError(f"the catalog applies to exactly 5 vortices, got {v.n}")


def _zero_tolerance(v: VorticitySet) -> float:
    top = max(abs(float(g)) for g in v.gammas)
    return 1e-9 * max(1.0, top * top)


def _compile_float(poly) -> callable:
    items = tuple(
        (float(coeff), tuple(i for i, e in enumerate(mono) for _ in range(e)))
        for mono, coeff in poly.terms
    )

    def evaluate(g: tuple) -> float:
        total = 0.0
        for coeff, idx in items:
            term = coeff
            for i in idx:
                term *= g[i]
            total += term
        return total

    return evaluate


# Compiled float evaluators, one per catalog polynomial; used as a sound
# prefilter on the exact path (values far from zero in floats are exactly
# nonzero) and as the decision procedure on the float path.
_MATCHERS = tuple(
    (
        diagram,
        ci,
        cl,
        tuple((_compile_float(p), p) for p in cl.equalities),
        tuple((_compile_float(p), p) for p in cl.inequations),
    )
    for diagram in _CATALOG
    for ci, cl in enumerate(diagram.clauses)
)

_PERMUTATIONS = tuple(permutations(range(N_VORTICES)))


def evaluate_diagram_constraints(v: VorticitySet) -> list:
    """All catalog matches of a 5-tuple over the 120 label permutations.

    Rational inputs are decided exactly; float inputs use a scale-aware zero
    tolerance (the caller should treat those results as approximate).
    Matches are deduplicated up to each clause's own label symmetry.
    """
    _require_five(v)
    exact = v.is_exact
    tol = _zero_tolerance(v)
    values = tuple(v.gammas)
    floats = tuple(float(g) for g in values)
    # degree <= 2 with small integer coefficients: float error stays far
    # below this band, so |float| > band certifies "exactly nonzero"
    top = max(1.0, max(abs(f) for f in floats))
    band = max(tol, 1e-8 * top * top)
    pulled_floats = tuple(
        tuple(floats[s[i]] for i in range(N_VORTICES)) for s in _PERMUTATIONS
    )

    def vanishes(fast, poly, pf, sigma) -> bool:
        value = fast(pf)
        if abs(value) > band:
            return False
        if not exact:
            return abs(value) <= tol
        pulled = tuple(values[sigma[i]] for i in range(N_VORTICES))
        return poly.evaluate(pulled) == 0

    matches = []
    seen = set()
    for diagram, ci, cl, eqs, ineqs in _MATCHERS:
        for sigma, pf in zip(_PERMUTATIONS, pulled_floats):
            if not all(vanishes(fast, p, pf, sigma) for fast, p in eqs):
                continue
            if any(vanishes(fast, p, pf, sigma) for fast, p in ineqs):
                continue
            key = (
                diagram.id,
                ci,
                frozenset(p.permuted(sigma).sign_canonical() for _, p in eqs),
                frozenset(p.permuted(sigma).sign_canonical() for _, p in ineqs),
            )
            if key in seen:
                continue
            seen.add(key)
            matches.append(CatalogMatch(
                diagram_id=diagram.id,
                clause_index=ci,
                lambda_branch=cl.lambda_branch,
                permutation=tuple(s + 1 for s in sigma),
            ))
    return matches


def check_subset_conditions(v: VorticitySet) -> SubsetCheck:
    """Sufficient finiteness condition on all index subsets.

    Passes iff Γ_J != 0 for every nonempty J and L_J != 0 for every J with
    at least two indices.  On failure the lexicographically first violating
    subset is returned.
    """
    _require_five(v)
    exact = v.is_exact
    tol = None if exact else _zero_tolerance(v)

    def vanishes(x) -> bool:
        return x == 0 if exact else abs(float(x)) <= tol

    g = v.gammas
    subsets = []
    for r in range(1, N_VORTICES + 1):
        subsets.extend(combinations(range(1, N_VORTICES + 1), r))
    for J in sorted(subsets):
        total = sum(g[j - 1] for j in J)
        if vanishes(total):
            return SubsetCheck(False, tuple(J), "vanishing_sum")
        if len(J) >= 2:
            momentum = sum(g[a - 1] * g[b - 1] for a, b in combinations(J, 2))
            if vanishes(momentum):
                return SubsetCheck(False, tuple(J), "vanishing_pair_momentum")
    return SubsetCheck(True)


def verdict(v: VorticitySet) -> ExceptionalReport:
    """Certify finiteness or flag the tuple as exceptional-suspect.

    Certification rests on :func:`check_subset_conditions` alone; raw catalog
    matches are included for diagnostics.  Requires Γ != 0.
    """
    _require_five(v)
    exact = v.is_exact
    total = total_vorticity(v)
    if (total == 0) if exact else abs(float(total)) <= _zero_tolerance(v):
        raise TotalVorticityZeroError(
            "total vorticity is zero; the certification presupposes Γ != 0"
        )
    subset_check = check_subset_conditions(v)
    matches = tuple(evaluate_diagram_constraints(v))
    notes = []
    if not exact:
        notes.append("float input: equalities tested against a scale-aware tolerance")
    notes.append("diagram 29 lists only L=0; its Γ=0 alternative is excluded by assumption")
    return ExceptionalReport(
        verdict="certified_finite" if subset_check.passed else "exceptional_suspect",
        subset_check=subset_check,
        matches=matches,
        approximate=not exact,
        notes=tuple(notes),
    )
