"""
The change of basis from standard polytabloids to webs.

For a standard tableau T, take the permutation sigma sending the
interleaved tableau to T, push the consecutive-pairs matching through
sigma (tracking the inversion-pair sign), and resolve the crossings of
the image.  The resulting web coordinates form row T of the transition
matrix.  Two facts are checked rather than assumed:

- every entry is a nonnegative integer, and
- the matrix has unit diagonal under the opener/closer bijection with an
  acyclic off-diagonal support, so some ordering of the bases makes it
  triangular with ones on the diagonal.

Independently of that construction, the matrix of the unique intertwiner
between the two models (normalized to send the interleaved polytabloid to
the consecutive-pairs web) is recovered from the one-dimensional
nullspace of the stacked equivariance constraints X A_i = B_i X; the two
computations must agree entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import specht, webs
from .combinat import (
    Matching,
    Tableau,
    consecutive_matching,
    enumerate_syt,
    enumerate_webs,
    interleaved_tableau,
    permutation_from_tableaux,
    permute_matching,
    tableau_to_web,
)
from .linalg import mat_mul, nullspace


@dataclass(frozen=True)
class TransitionMatrix:
    """Square integer matrix with rows labeled by standard tableaux and
    columns by noncrossing matchings, both in canonical order."""

    n: int
    row_labels: tuple[Tableau, ...]
    col_labels: tuple[Matching, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, t: Tableau, m: Matching) -> int:
        return self.entries[self.row_labels.index(t)][self.col_labels.index(m)]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rowLabels": [t.to_lists() for t in self.row_labels],
            "colLabels": [list(m.partner) for m in self.col_labels],
            "entries": [list(row) for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TransitionMatrix":
        return cls(
            n=d["n"],
            row_labels=tuple(Tableau.from_lists(rows) for rows in d["rowLabels"]),
            col_labels=tuple(Matching(tuple(p)) for p in d["colLabels"]),
            entries=tuple(tuple(row) for row in d["entries"]),
        )

    def to_csv(self) -> str:
        """Label header row and column, entries as plain integers."""
        header = ["tableau\\web"] + [
            " ".join(map(str, m.partner)) for m in self.col_labels
        ]
        lines = [",".join(header)]
        for t, row in zip(self.row_labels, self.entries):
            label = "|".join(" ".join(map(str, r)) for r in t.rows)
            lines.append(",".join([label] + [str(e) for e in row]))
        return "\n".join(lines) + "\n"


def row_sign(t: Tableau) -> int:
    """The sign picked up when the aligning permutation is pushed through
    the consecutive-pairs matching.  Nonnegativity of the whole row rests
    on this being +1; it is computed, never assumed."""
    sigma = permutation_from_tableaux(interleaved_tableau(t.n), t)
    sign, _ = permute_matching(sigma, consecutive_matching(t.n))
    return sign


def transition_row(t: Tableau, *, syzygy_signs=(1, 1)) -> webs.WebVector:
    """Web coordinates of the image of the standard polytabloid of t.

    >>> transition_row(interleaved_tableau(2)) == {consecutive_matching(2): 1}
    True
    """
    if not t.is_standard:
        raise ValueError("tableau is not standard")
    sigma = permutation_from_tableaux(interleaved_tableau(t.n), t)
    sign, moved = permute_matching(sigma, consecutive_matching(t.n))
    expansion = webs.resolve_crossings(moved, syzygy_signs=syzygy_signs)
    if sign == 1:
        return expansion
    return {m: -c for m, c in expansion.items()}


def transition_matrix(n: int, *, syzygy_signs=(1, 1)) -> TransitionMatrix:
    """The full change-of-basis matrix, rows tableaux, columns webs."""
    if syzygy_signs == (1, 1):
        return _transition_matrix(n)
    return _build_transition_matrix(n, syzygy_signs)


@cache
def _transition_matrix(n: int) -> TransitionMatrix:
    return _build_transition_matrix(n, (1, 1))


def _build_transition_matrix(n: int, syzygy_signs) -> TransitionMatrix:
    syt = enumerate_syt(n)
    web_list = enumerate_webs(n)
    col = {m: k for k, m in enumerate(web_list)}
    entries = []
    for t in syt:
        row = [0] * len(web_list)
        for m, c in transition_row(t, syzygy_signs=syzygy_signs).items():
            row[col[m]] = c
        entries.append(tuple(row))
    return TransitionMatrix(n, syt, web_list, tuple(entries))


def check_nonnegative(tm: TransitionMatrix) -> tuple[bool, list[dict]]:
    """Every entry >= 0; counterexamples locate any negative entries."""
    bad = [
        {"check": "nonnegative", "row": r, "col": c, "entry": v}
        for r, row in enumerate(tm.entries)
        for c, v in enumerate(row)
        if v < 0
    ]
    return not bad, bad


def check_diagonal_ones(tm: TransitionMatrix) -> tuple[bool, list[dict]]:
    """Entry 1 at (T, web of T) for every row, under the opener/closer
    bijection."""
    col = {m: k for k, m in enumerate(tm.col_labels)}
    bad = []
    for r, t in enumerate(tm.row_labels):
        c = col[tableau_to_web(t)]
        if tm.entries[r][c] != 1:
            bad.append(
                {"check": "diagonalOnes", "row": r, "col": c, "entry": tm.entries[r][c]}
            )
    return not bad, bad


def check_support_acyclic(tm: TransitionMatrix) -> tuple[bool, list[dict]]:
    """The relation 'web of T has a nonzero entry at M' (M different) must
    be acyclic; then ordering webs topologically makes the matrix
    triangular with the diagonal of check_diagonal_ones."""
    col = {m: k for k, m in enumerate(tm.col_labels)}
    succ: dict[int, set[int]] = {k: set() for k in range(len(tm.col_labels))}
    for r, t in enumerate(tm.row_labels):
        d = col[tableau_to_web(t)]
        for c, v in enumerate(tm.entries[r]):
            if v and c != d:
                succ[d].add(c)
    # Kahn peeling; whatever remains lies on or feeds a cycle
    indeg = {k: 0 for k in succ}
    for outs in succ.values():
        for c in outs:
            indeg[c] += 1
    queue = [k for k, v in indeg.items() if v == 0]
    seen = 0
    while queue:
        k = queue.pop()
        seen += 1
        for c in succ[k]:
            indeg[c] -= 1
            if indeg[c] == 0:
                queue.append(c)
    if seen == len(succ):
        return True, []
    # every unpeeled node keeps an unpeeled predecessor; walking
    # predecessors from any of them must revisit a node, closing a cycle
    remaining = {k for k, v in indeg.items() if v > 0}
    path, at = [], min(remaining)
    while at not in path:
        path.append(at)
        at = min(k for k in remaining if at in succ[k])
    cycle = list(reversed(path[path.index(at) :]))
    return False, [{"check": "supportAcyclic", "cycle": cycle}]


def check_unitriangular(tm: TransitionMatrix) -> bool:
    """Unit diagonal plus acyclic support: some basis order makes the
    matrix unitriangular."""
    return check_diagonal_ones(tm)[0] and check_support_acyclic(tm)[0]


@cache
def intertwiner_oracle(n: int) -> TransitionMatrix:
    """Recompute the transition matrix from the equivariance equations
    alone: stack X A_i - B_i X = 0 over all generators, take the
    nullspace (it must be one-dimensional: the two models are isomorphic
    irreducibles), normalize the (interleaved, consecutive) entry to 1,
    and check that everything is an integer.

    This never touches the crossing rewrite, so agreement with
    transition_matrix is a genuine independent check.
    """
    syt = enumerate_syt(n)
    web_list = enumerate_webs(n)
    assert syt[0] == interleaved_tableau(n) and web_list[0] == consecutive_matching(n)
    d = len(syt)
    constraints: list[list[int]] = []
    for i in range(1, 2 * n):
        a_mat = specht.action_matrix(i, n)
        b_mat = webs.action_matrix(i, n)
        for p in range(d):
            base = p * d
            for q in range(d):
                row = [0] * (d * d)
                for k in range(d):
                    v = a_mat[k][q]
                    if v:
                        row[base + k] += v
                for k in range(d):
                    v = b_mat[p][k]
                    if v:
                        row[k * d + q] -= v
                if any(row):
                    constraints.append(row)
    basis = nullspace(constraints) if constraints else [[Fraction(1)] * (d * d)]
    if len(basis) != 1:
        raise ArithmeticError(
            f"intertwiner space has dimension {len(basis)}, expected 1: "
            "the two models are not behaving as isomorphic irreducibles"
        )
    vec = basis[0]
    x = [vec[p * d : (p + 1) * d] for p in range(d)]  # rows webs, cols tableaux
    scale = x[0][0]  # (consecutive matching, interleaved tableau) sits at (0, 0)
    if scale == 0:
        raise ArithmeticError("intertwiner vanishes on the interleaved polytabloid")
    entries = []
    for t_idx in range(d):
        row = []
        for m_idx in range(d):
            value = x[m_idx][t_idx] / scale
            if value.denominator != 1:
                raise ArithmeticError(f"non-integer oracle entry {value}")
            row.append(int(value))
        entries.append(tuple(row))
    return TransitionMatrix(n, syt, web_list, tuple(entries))


def realized_map_equivariant(n: int) -> bool:
    """Whether the computed matrix, read as a map from polytabloid
    coordinates to web coordinates, commutes with every generator."""
    x = [list(col) for col in zip(*transition_matrix(n).entries)]
    for i in range(1, 2 * n):
        a_mat = specht.action_matrix(i, n)
        b_mat = webs.action_matrix(i, n)
        if mat_mul(x, a_mat) != mat_mul(b_mat, x):
            return False
    return True


@dataclass(frozen=True)
class VerificationReport:
    n: int
    nonnegative: bool
    diagonal_ones: bool
    support_acyclic: bool
    oracle_agrees: bool | None  # None when the oracle was not run
    counterexamples: tuple[dict, ...]

    @property
    def all_passed(self) -> bool:
        checks = [self.nonnegative, self.diagonal_ones, self.support_acyclic]
        if self.oracle_agrees is not None:
            checks.append(self.oracle_agrees)
        return all(checks)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "nonnegative": self.nonnegative,
            "diagonalOnes": self.diagonal_ones,
            "supportAcyclic": self.support_acyclic,
            "oracleAgrees": self.oracle_agrees,
            "counterexamples": list(self.counterexamples),
        }


def verify(n: int, with_oracle: bool = False, fault: str | None = None) -> VerificationReport:
    """Run the checks on the transition matrix and aggregate a report.

    ``fault`` injects a deliberate defect ("syzygy-sign-flip" computes the
    matrix with one rewrite branch negated, "negative-entry" overwrites
    one entry with -1) so that callers can confirm the checks actually
    detect failures.
    """
    if fault is None:
        tm = transition_matrix(n)
    elif fault == "syzygy-sign-flip":
        tm = transition_matrix(n, syzygy_signs=(1, -1))
    elif fault == "negative-entry":
        good = transition_matrix(n)
        entries = [list(row) for row in good.entries]
        entries[0][-1] = -1
        tm = TransitionMatrix(n, good.row_labels, good.col_labels, tuple(tuple(r) for r in entries))
    else:
        raise ValueError(f"unknown fault mode: {fault}")

    ok_nonneg, bad_nonneg = check_nonnegative(tm)
    ok_diag, bad_diag = check_diagonal_ones(tm)
    ok_acyclic, bad_acyclic = check_support_acyclic(tm)
    counterexamples = bad_nonneg + bad_diag + bad_acyclic
    oracle_agrees: bool | None = None
    if with_oracle:
        oracle_agrees = intertwiner_oracle(n) == tm
        if not oracle_agrees:
            counterexamples.append({"check": "oracleAgrees", "n": n})
    return VerificationReport(
        n=n,
        nonnegative=ok_nonneg,
        diagonal_ones=ok_diag,
        support_acyclic=ok_acyclic,
        oracle_agrees=oracle_agrees,
        counterexamples=tuple(counterexamples),
    )
