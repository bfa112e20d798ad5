"""
The web model: integer combinations of noncrossing matchings, the
generator action, and the resolution of crossings.

The adjacent transposition s_i acts on a basis matching M by

    s_i . w_M = -w_M                if i ~ i+1 in M,
    s_i . w_M = w_M + w_M'          otherwise,

where M' replaces the pairs a ~ i and b ~ i+1 with a ~ b and i ~ i+1.

An arbitrary (crossing) perfect matching is not a basis element, but the
product of its column minors expands into the basis by repeatedly
rewriting one crossing pair a < b < c < d (a ~ c, b ~ d) as the sum of
the two uncrossed reconnections (a ~ b, c ~ d) and (a ~ d, b ~ c); both
have strictly fewer crossings, so the rewrite terminates.
``resolve_crossings`` carries this out and returns the (nonnegative,
integer) coefficients; the polynomial module has an independent check.
"""

from __future__ import annotations

from .combinat import Matching, Permutation, crossing_pairs, enumerate_webs

WebVector = dict[Matching, int]


def generator_action(i: int, vec: WebVector) -> WebVector:
    """Act with s_i on a web-basis combination, linearly per key.

    >>> from .combinat import consecutive_matching
    >>> m0 = consecutive_matching(2)
    >>> generator_action(1, {m0: 1}) == {m0: -1}
    True
    """
    out: WebVector = {}

    def add(m: Matching, c):
        new = out.get(m, 0) + c
        if new:
            out[m] = new
        else:
            out.pop(m, None)

    for m, coeff in vec.items():
        if not 1 <= i <= m.size - 1:
            raise ValueError(f"generator index {i} out of range 1..{m.size - 1}")
        if m.of(i) == i + 1:
            add(m, -coeff)
        else:
            add(m, coeff)
            add(_uncross_at(m, i), coeff)
    return out


def _uncross_at(m: Matching, i: int) -> Matching:
    """The matching M' of the action's second branch: repartner the mates
    of i and i+1 with each other and pair i with i+1."""
    a, b = m.of(i), m.of(i + 1)
    partner = list(m.partner)
    partner[a - 1], partner[b - 1] = b, a
    partner[i - 1], partner[i] = i + 1, i
    out = Matching(tuple(partner))
    assert out.is_noncrossing or not m.is_noncrossing
    return out


def _syzygy_children(m: Matching, quad: tuple[int, int, int, int]) -> tuple[Matching, Matching]:
    """Reconnect the crossing a ~ c, b ~ d as (a ~ b, c ~ d) and (a ~ d, b ~ c)."""
    a, b, c, d = quad
    first = list(m.partner)
    first[a - 1], first[b - 1], first[c - 1], first[d - 1] = b, a, d, c
    second = list(m.partner)
    second[a - 1], second[d - 1], second[b - 1], second[c - 1] = d, a, c, b
    return Matching(tuple(first)), Matching(tuple(second))


# results for the standard rewrite are shared across calls; they are small
# (at most Catalan(n) keys each) and callers receive copies
_SHARED_MEMO: dict[tuple[int, int], dict[Matching, WebVector]] = {}


def resolve_crossings(
    m: Matching,
    *,
    syzygy_signs: tuple[int, int] = (1, 1),
    pick=None,
    memo: dict[Matching, WebVector] | None = None,
) -> WebVector:
    """Expand an arbitrary perfect matching into noncrossing matchings.

    Returns a dict keyed by noncrossing matchings; with the default
    arguments every coefficient is a nonnegative integer and a noncrossing
    input returns {m: 1}.

    ``pick`` chooses which crossing quadruple to rewrite (default: the
    lexicographically smallest); the result does not depend on the choice,
    which the test suite checks directly.  ``syzygy_signs`` scales the two
    reconnection branches and exists so the verifier can inject a sign
    fault and prove the downstream checks catch it.  ``memo`` supplies a
    private memo table (used by the benchmark to count rewrites); by
    default a shared table keyed by the signs is used.

    >>> resolve_crossings(Matching.from_pairs([(1, 3), (2, 4)]))
    {Matching(partner=(2, 1, 4, 3)): 1, Matching(partner=(4, 3, 2, 1)): 1}
    """
    if memo is None:
        if pick is None:
            memo = _SHARED_MEMO.setdefault(syzygy_signs, {})
        else:
            memo = {}
    stack = [m]
    chosen: dict[Matching, tuple[Matching, Matching]] = {}
    while stack:
        top = stack[-1]
        if top in memo:
            stack.pop()
            continue
        if top not in chosen:
            quads = crossing_pairs(top)
            if not quads:
                memo[top] = {top: 1}
                stack.pop()
                continue
            chosen[top] = _syzygy_children(top, quads[0] if pick is None else pick(quads))
        kids = chosen[top]
        pending = [k for k in kids if k not in memo]
        if pending:
            stack.extend(pending)
            continue
        combined: WebVector = {}
        for child, s in zip(kids, syzygy_signs):
            for key, coeff in memo[child].items():
                combined[key] = combined.get(key, 0) + s * coeff
        memo[top] = {k: v for k, v in combined.items() if v}
        del chosen[top]
        stack.pop()
    return dict(memo[m])


def action_matrix(i: int, n: int) -> list[list[int]]:
    """Matrix of s_i on the web model in the web basis; entries -1, 0, 1."""
    webs = enumerate_webs(n)
    index = {w: k for k, w in enumerate(webs)}
    matrix = [[0] * len(webs) for _ in webs]
    for col, w in enumerate(webs):
        for key, coeff in generator_action(i, {w: 1}).items():
            matrix[index[key]][col] = coeff
    return matrix


def serialize_web_vector(vec: WebVector) -> list[dict]:
    """JSON-ready term list [{"partnerArray": [...], "coeff": c}], keys in
    ascending partner-array order."""
    return [
        {"partnerArray": list(m.partner), "coeff": vec[m]}
        for m in sorted(vec, key=lambda m: m.partner)
    ]


def deserialize_web_vector(terms: list[dict]) -> WebVector:
    return {Matching(tuple(t["partnerArray"])): t["coeff"] for t in terms}


def act_by_permutation(sigma: Permutation, vec: WebVector) -> WebVector:
    """Act with an arbitrary permutation by writing it as a product of
    adjacent transpositions (bubble-sort word) and applying the generator
    action one letter at a time.  The generator action satisfies the
    Coxeter relations, so the result is independent of the word."""
    out = dict(vec)
    for i in sigma.reduced_word():
        out = generator_action(i, out)
    return out
