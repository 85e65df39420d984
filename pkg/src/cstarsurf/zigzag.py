"""Linear and circular zigzags and their birational calculus.

A zigzag is a chain of rational curves recorded by its weight sequence,
written ``[[w1,...,wn]]``, or a cycle written ``((w1,...,wn))``.  The moves
are blowups (insert a -1 vertex, decrement the adjacent weights), admissible
blowdowns (the inverse), and elementary transformations at 0-vertices, each
of which is one blowup followed by one blowdown.

``standardize`` normalizes a zigzag to the standard forms

    linear:    [[0]], [[0,0,0]], [[0,0,w1,...,wn]] with all w_i <= -2,
    circular:  ((0_a, w)) 0<=a<=3 w<=0,  ((0_b,-1,-1)) b in {0,2},
               ((0_b, w1,...,wn)) b in {0,2}, all w_i <= -2,

returning a replayable log of the individual blowups/blowdowns.

Degenerate cycles follow the formal weighted-graph rules: a single vertex
with a node (``((w))``) blows up to the 2-cycle ``((w-2,-1))``, a 2-cycle
edge blows up to a triangle, and blowdowns invert these.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from .errors import (
    Branching,
    CannotStandardize,
    ChainEntryBelowTwo,
    NotLinear,
    NotMinusOne,
    NotNegativeSemidefiniteEnough,
    NotZero,
    ParseError,
)
from .hj import cf_eval
from .rationals import Q, as_rational, format_rational

Move = tuple  # ("up_edge", i) | ("up_outer", i) | ("down", i)


@dataclass(frozen=True)
class Zigzag:
    """Ordered weight list, linear or circular."""

    weights: tuple[Fraction, ...]
    circular: bool = False

    def __init__(self, weights, circular: bool = False):
        object.__setattr__(
            self, "weights", tuple(as_rational(w) for w in weights)
        )
        object.__setattr__(self, "circular", bool(circular))
        if not self.weights:
            raise ParseError("empty zigzag")

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return format_zigzag(self)

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    def int_weights(self) -> list[int]:
        if not self.is_integral():
            raise NotLinear(f"{self} has non-integer weights")
        return [w.numerator for w in self.weights]

    def intersection_matrix(self) -> list[list[Fraction]]:
        """Symmetric matrix: weights on the diagonal, 1 per adjacency.

        For a 2-cycle the off-diagonal entry is 2 (a double intersection),
        and a 1-cycle is the single self-intersection number.
        """
        n = len(self.weights)
        mat = [[Q(0)] * n for _ in range(n)]
        for i, w in enumerate(self.weights):
            mat[i][i] = w
        for i in range(n - 1):
            mat[i][i + 1] += 1
            mat[i + 1][i] += 1
        if self.circular and n >= 2:
            mat[0][n - 1] += 1
            mat[n - 1][0] += 1
        return mat

    def signature(self) -> tuple[int, int, int]:
        """(positive, negative, zero) eigenvalue counts, computed exactly."""
        return matrix_signature(self.intersection_matrix())

    def positive_eigenvalues(self) -> int:
        return self.signature()[0]


# ---------------------------------------------------------------------------
# bracket notation


_RUN = re.compile(r"^\(\s*(-?\d+(?:/\d+)?)\s*\)_(\d+)$")


def parse_zigzag(text: str) -> Zigzag:
    """Parse ``[[0,0,-2]]`` / ``((0,0,(-2)_6,-3))``; ``(w)_k`` repeats w."""
    s = text.strip()
    if s.startswith("[[") and s.endswith("]]"):
        circular, body = False, s[2:-2]
    elif s.startswith("((") and s.endswith("))"):
        circular, body = True, s[2:-2]
    else:
        raise ParseError(f"not a zigzag: {text!r}")
    weights: list[Fraction] = []
    depth = 0
    token = ""
    tokens = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append(token)
            token = ""
        else:
            token += ch
    tokens.append(token)
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            raise ParseError(f"empty entry in {text!r}")
        m = _RUN.match(tok)
        if m:
            weights.extend([as_rational(m.group(1))] * int(m.group(2)))
        else:
            try:
                weights.append(as_rational(tok))
            except ParseError:
                raise ParseError(f"bad weight {tok!r} in {text!r}") from None
    return Zigzag(weights, circular)


def format_zigzag(z: Zigzag, compress: bool = True) -> str:
    """Bracket notation; runs of >= 3 equal weights print as ``(w)_k``."""
    parts = []
    ws = list(z.weights)
    i = 0
    while i < len(ws):
        j = i
        while j < len(ws) and ws[j] == ws[i]:
            j += 1
        run = j - i
        if compress and run >= 3:
            parts.append(f"({format_rational(ws[i])})_{run}")
        else:
            parts.extend(format_rational(ws[i]) for _ in range(run))
        i = j
    body = ",".join(parts)
    return f"(({body}))" if z.circular else f"[[{body}]]"


# ---------------------------------------------------------------------------
# exact signatures


def matrix_signature(mat) -> tuple[int, int, int]:
    """Signature of a symmetric rational matrix by congruence reduction."""
    m = [[Q(x) for x in row] for row in mat]
    n = len(m)
    pos = neg = zero = 0
    rows = list(range(n))
    while rows:
        pivot = next((k for k in rows if m[k][k] != 0), None)
        if pivot is None:
            # look for an off-diagonal entry; fold it onto the diagonal
            pair = None
            for a in rows:
                for b in rows:
                    if a < b and m[a][b] != 0:
                        pair = (a, b)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(rows)
                break
            a, b = pair
            for j in range(n):
                m[a][j] += m[b][j]
            for i in range(n):
                m[i][a] += m[i][b]
            pivot = a
        d = m[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rows.remove(pivot)
        for i in rows:
            if m[i][pivot] != 0:
                c = m[i][pivot] / d
                for j in range(n):
                    m[i][j] -= c * m[pivot][j]
                for j in range(n):
                    m[j][i] = m[i][j]
    return pos, neg, zero


# ---------------------------------------------------------------------------
# primitive moves on weight lists


def apply_move(ws: list, circular: bool, move: Move) -> list:
    """Apply one blowup/blowdown to a weight list and return the new list."""
    kind, i = move
    ws = list(ws)
    n = len(ws)
    if kind == "up_edge":
        if circular and n == 1:
            # blowup in the node: both edge-ends sit at the single vertex
            return [ws[0] - 2, -1]
        j = (i + 1) % n if circular else i + 1
        if not circular and i >= n - 1:
            raise NotLinear(f"no edge at {i} in a chain of length {n}")
        ws[i] -= 1
        ws[j] -= 1
        ws.insert(i + 1, Q(-1))
        return ws
    if kind == "up_outer":
        if circular:
            raise NotLinear("outer blowup needs an end vertex")
        if i == 0:
            ws[0] -= 1
            return [Q(-1)] + ws
        if i == n - 1:
            ws[i] -= 1
            return ws + [Q(-1)]
        raise NotLinear(f"vertex {i} is not an end")
    if kind == "down":
        if ws[i] != -1:
            raise NotMinusOne(f"weight at {i} is {ws[i]}, not -1")
        if circular:
            if n == 1:
                raise Branching("cannot blow down a vertex carrying a node")
            if n == 2:
                other = ws[1 - i]
                return [other + 2]
            ws[(i - 1) % n] += 1
            ws[(i + 1) % n] += 1
            del ws[i]
            return ws
        if n == 1:
            return []
        if i > 0:
            ws[i - 1] += 1
        if i < n - 1:
            ws[i + 1] += 1
        del ws[i]
        return ws
    raise ParseError(f"unknown move {move!r}")


def replay(z: Zigzag, log: list[Move]) -> Zigzag:
    """Re-run a transformation log against a zigzag."""
    ws: list = list(z.weights)
    for move in log:
        ws = apply_move(ws, z.circular, move)
    return Zigzag(ws, z.circular)


def _et_inner(ws, circular, i, direction, log):
    """Inner elementary transformation at a 0-vertex with two neighbours.

    direction "right": left neighbour -1, right neighbour +1; "left" is the
    mirror.  Emits the blowup/blowdown pair into ``log``.
    """
    n = len(ws)
    if direction == "right":
        j = (i - 1) % n
        up = ("up_edge", j)
        ws = apply_move(ws, circular, up)
        down_at = i + 1 if (j < i or not circular) else i
        dn = ("down", down_at)
    else:
        up = ("up_edge", i)
        ws = apply_move(ws, circular, up)
        dn = ("down", i)
    log.extend([up, dn])
    return apply_move(ws, circular, dn)


def _et_outer(ws, i, direction, log):
    """Outer elementary transformation at an end 0-vertex of a chain.

    The missing neighbour beyond the end absorbs the complementary shift, so
    only the unique real neighbour changes: at the left end, "right" gives
    [[0, b]] -> [[0, b+1]] and "left" gives [[0, b-1]]; mirrored on the
    right end.
    """
    n = len(ws)
    if i == 0:
        if direction == "right":
            moves = [("up_outer", 0), ("down", 1)]
        else:
            moves = [("up_edge", 0), ("down", 0)]
    elif i == n - 1:
        if direction == "left":
            moves = [("up_outer", i), ("down", i)]
        else:
            moves = [("up_edge", i - 1), ("down", i + 1)]
    else:
        raise NotLinear(f"vertex {i} is not an end")
    for mv in moves:
        ws = apply_move(ws, False, mv)
    log.extend(moves)
    return ws


def elementary_transformation(
    z: Zigzag,
    zero_vertex: int,
    direction: Literal["left", "right"],
    outer: bool = False,
    log: Optional[list[Move]] = None,
) -> Zigzag:
    """One elementary transformation at a 0-weight vertex.

    Inner: ``[[w, 0, w']] -> [[w-1, 0, w'+1]]`` for direction "right" (the
    mirror for "left"); the vertex must have two neighbours.  Outer: the
    vertex must be an end of a chain and only its unique neighbour shifts by
    +-1.  Both are performed as one blowup plus one blowdown, appended to
    ``log`` when given.
    """
    ws = list(z.weights)
    n = len(ws)
    i = zero_vertex
    if not 0 <= i < n:
        raise NotZero(f"no vertex {i}")
    if ws[i] != 0:
        raise NotZero(f"weight at {i} is {ws[i]}, not 0")
    if log is None:
        log = []
    if outer:
        if z.circular:
            raise NotLinear("a cycle has no end vertices")
        ws = _et_outer(ws, i, direction, log)
    else:
        interior = z.circular and n >= 3 or (not z.circular and 0 < i < n - 1)
        if not interior:
            raise NotLinear(f"vertex {i} has no two neighbours (use outer)")
        ws = _et_inner(ws, z.circular, i, direction, log)
    return Zigzag(ws, z.circular)


# ---------------------------------------------------------------------------
# grammar of standard forms


def is_standard_linear(ws) -> bool:
    ws = list(ws)
    if ws == [0]:
        return True
    if ws == [0, 0, 0]:
        return True
    return (
        len(ws) >= 2
        and ws[0] == 0
        and ws[1] == 0
        and all(w <= -2 for w in ws[2:])
    )


def is_semistandard_linear(ws) -> bool:
    ws = list(ws)
    if is_standard_linear(ws):
        return True
    if len(ws) >= 1 and ws[0] == 0 and all(w <= -2 for w in ws[1:]):
        return True
    return len(ws) == 3 and ws[0] == 0 and ws[2] == 0 and ws[1] <= -2


def _circular_matches_grammar(ws) -> bool:
    """Exact (unrotated) match against the circular standard grammar."""
    ws = list(ws)
    n = len(ws)
    a = 0
    while a < n and ws[a] == 0:
        a += 1
    if a == n:  # all zeros: ((0_a, 0)) needs n <= 4
        return n <= 4
    rest = ws[a:]
    if len(rest) == 1 and a <= 3 and rest[0] <= 0:
        return True
    if a in (0, 2):
        if rest == [-1, -1]:
            return True
        if all(w <= -2 for w in rest):
            return True
    return False


def canonical_circular(z: Zigzag) -> Zigzag:
    """Canonical representative among rotations and the two orientations.

    Restricted to rotations/reflections that match the standard grammar; the
    tie-break takes the list minimizing the sequence of absolute weights, so
    e.g. ((0,0,(-2)_6,-3)) is preferred over ((0,0,-3,(-2)_6)).
    """
    ws = [w for w in z.weights]
    n = len(ws)
    candidates = []
    for seq in (ws, ws[::-1]):
        for r in range(n):
            rot = seq[r:] + seq[:r]
            if _circular_matches_grammar(rot):
                candidates.append(rot)
    if not candidates:
        return z
    best = min(candidates, key=lambda c: [abs(w) for w in c])
    return Zigzag(best, True)


def is_standard(z: Zigzag) -> bool:
    if z.circular:
        ws = list(z.weights)
        n = len(ws)
        for seq in (ws, ws[::-1]):
            for r in range(n):
                if _circular_matches_grammar(seq[r:] + seq[:r]):
                    return True
        return False
    return is_standard_linear(z.weights)


# ---------------------------------------------------------------------------
# reversal


def reverse(z: Zigzag) -> Zigzag:
    """Reverse the weight sequence.

    A standard chain keeps its 0,0-prefix: [[0,0,w1..wn]] -> [[0,0,wn..w1]].
    A cycle is reflected and then canonically rotated.
    """
    if z.circular:
        return canonical_circular(Zigzag(list(z.weights)[::-1], True))
    ws = list(z.weights)
    if is_standard_linear(ws) and len(ws) > 3:
        return Zigzag(ws[:2] + ws[:1:-1], False)
    return Zigzag(ws[::-1], False)


# ---------------------------------------------------------------------------
# standardization


_FUEL_FACTOR = 200


def standardize(z: Zigzag, semistandard: bool = False) -> tuple[Zigzag, list[Move]]:
    """Normalize a zigzag to (semi)standard form.

    Returns the normal form and the replayable blowup/blowdown log.  Linear
    inputs must have at most one positive eigenvalue; negative definite
    chains (which contain no standard form in their birational class) raise
    ``CannotStandardize``.  For circular zigzags the result is additionally
    rotated/reflected to the canonical representative, which is a relabeling
    and does not appear in the log.
    """
    try:
        ws = z.int_weights()
    except NotLinear:
        raise CannotStandardize(f"{z} has non-integer weights") from None
    log: list[Move] = []
    if z.circular:
        out = _standardize_circular(ws, log)
        return canonical_circular(Zigzag(out, True)), log
    if z.positive_eigenvalues() > 1:
        raise NotNegativeSemidefiniteEnough(
            f"{z} has more than one positive eigenvalue"
        )
    out = _standardize_linear(ws, log, semistandard)
    return Zigzag(out, False), log


def _grammar_hit(ws, semistandard) -> bool:
    if is_standard_linear(ws):
        return True
    return semistandard and is_semistandard_linear(ws)


def _grind_positive(ws, j, log):
    """Rewrite a positive weight p at j into a clean 00-pair.

    [.., x, p, y, ..] becomes [.., x-1, (-2)_{p-1}, 0, 0, y-1, ..] through
    one blowup per unit of p and a closing elementary transformation; at an
    end of the chain the missing flank is simply absent.
    """
    p = ws[j]
    if j == 0:
        ws = apply_move(ws, False, ("up_outer", 0))
        log.append(("up_outer", 0))
        head = 1  # index of the ground weight, the -1 sits at head-1
    else:
        ws = apply_move(ws, False, ("up_edge", j - 1))
        log.append(("up_edge", j - 1))
        head = j + 1
    # ws[head] == p-1 with a fresh -1 on its left; peel it down to zero
    while ws[head] > 0:
        ws = apply_move(ws, False, ("up_edge", head - 1))
        log.append(("up_edge", head - 1))
        head += 1
    # now [.., -1, 0, ..] at (head-1, head): absorb the -1 into the pair
    if head == len(ws) - 1:
        ws = _et_outer(ws, head, "left", log)  # left neighbour -1 -> 0
    else:
        ws = _et_inner(ws, False, head, "left", log)
    return ws


def _standardize_linear(ws, log, semistandard):
    ws = [int(w) for w in ws]
    fuel = _FUEL_FACTOR * (len(ws) + sum(abs(w) for w in ws) + 5)
    while fuel > 0:
        fuel -= 1
        if _grammar_hit(ws, semistandard):
            return ws
        n = len(ws)
        if -1 in ws:
            if n == 1:
                raise CannotStandardize(
                    "[[-1]] contracts to a smooth point; no standard form"
                )
            i = ws.index(-1)
            ws = apply_move(ws, False, ("down", i))
            log.append(("down", i))
            continue
        if n == 1:
            w = ws[0]
            if w >= 1:
                ws = _grind_positive(ws, 0, log)
                continue
            raise CannotStandardize(f"[[{w}]] is negative definite")
        zeros = [i for i, w in enumerate(ws) if w == 0]
        if not zeros:
            positives = [i for i, w in enumerate(ws) if w > 0]
            if not positives:
                raise CannotStandardize(f"{ws} is negative definite")
            ws = _grind_positive(ws, positives[0], log)
            continue
        i = zeros[0]
        if i > 0:
            a = ws[i - 1]
            steps = abs(a)
            if i == n - 1:
                direction = "right" if a < 0 else "left"
                for _ in range(steps):
                    ws = _et_outer(ws, i, direction, log)
            else:
                direction = "left" if a < 0 else "right"
                for _ in range(steps):
                    ws = _et_inner(ws, False, i, direction, log)
            continue
        # leftmost zero at the front
        if n >= 2 and ws[1] != 0:
            b = ws[1]
            direction = "right" if b < 0 else "left"
            for _ in range(abs(b)):
                ws = _et_outer(ws, 0, direction, log)
            continue
        # 00-pair at the front but no grammar match: the input had more
        # than one positive eigenvalue, which the entry check excludes
        raise CannotStandardize(f"stuck at {ws}; input outside precondition")
    raise CannotStandardize("transformation budget exhausted")


def _standardize_circular(ws, log):
    ws = [int(w) for w in ws]
    fuel = _FUEL_FACTOR * (len(ws) + sum(abs(w) for w in ws) + 5)
    while fuel > 0:
        fuel -= 1
        if is_standard(Zigzag(ws, True)):
            return ws
        n = len(ws)
        if n == 1:
            # ((w)) with w >= 1: open the node
            ws = apply_move(ws, True, ("up_edge", 0))
            log.append(("up_edge", 0))
            continue
        zeros = [i for i, w in enumerate(ws) if w == 0]
        if zeros:
            i = zeros[0]
            left, right = ws[(i - 1) % n], ws[(i + 1) % n]
            # zero out the neighbour of smaller magnitude
            if abs(left) <= abs(right):
                a, direction = left, ("left" if left < 0 else "right")
            else:
                a, direction = right, ("right" if right < 0 else "left")
            for _ in range(abs(a)):
                ws = _et_inner(ws, True, i, direction, log)
                n = len(ws)
            continue
        positives = [i for i, w in enumerate(ws) if w > 0]
        if positives:
            j = positives[0]
            # peel the positive by blowing up an edge at j (prefer a -1
            # neighbour so the separation chain stays clean)
            if ws[(j + 1) % n] == -1:
                edge = j
            elif ws[(j - 1) % n] == -1:
                edge = (j - 1) % n
            else:
                edge = j
            ws = apply_move(ws, True, ("up_edge", edge))
            log.append(("up_edge", edge))
            continue
        if -1 in ws:
            i = ws.index(-1)
            ws = apply_move(ws, True, ("down", i))
            log.append(("down", i))
            continue
        raise CannotStandardize(f"stuck at (({ws}))")
    raise CannotStandardize("transformation budget exhausted")


# ---------------------------------------------------------------------------
# contractibility


_TARGETS = {"zero": (0,), "minus-one": (-1,), "smooth-point": ()}


def is_contractible_to(
    chain: Zigzag, target: str
) -> tuple[bool, Optional[list[int]]]:
    """Search for a blowdown sequence taking a chain to a target.

    ``target`` is one of "zero" ([[0]]), "minus-one" ([[-1]]) or
    "smooth-point" (the empty graph).  Returns (verdict, witness); the
    witness lists the index blown down at each step.
    """
    if chain.circular:
        raise NotLinear("contractibility search needs a linear chain")
    goal = _TARGETS[target]
    state = tuple(chain.int_weights())
    memo: dict[tuple, Optional[list[int]]] = {}

    def search(ws: tuple) -> Optional[list[int]]:
        if ws == goal:
            return []
        if ws in memo:
            return memo[ws]
        memo[ws] = None
        for i, w in enumerate(ws):
            if w == -1:
                child = tuple(apply_move(list(ws), False, ("down", i)))
                rest = search(child)
                if rest is not None:
                    memo[ws] = [i] + rest
                    break
        return memo[ws]

    witness = search(state)
    return witness is not None, witness


def contract_subchain(c0_weight, chain) -> Fraction:
    """Self-intersection of C0 after contracting an adjacent chain.

    The chain entries are the k_i >= 2 of the contracted curves (weights
    -k_i), listed starting next to C0; the new self-intersection is
    -[k0, k1, ..., kn] with k0 = -c0_weight, i.e. c0 + 1/[k1,...,kn].
    """
    c0 = as_rational(c0_weight)
    ks = [as_rational(k) for k in chain]
    if any(k < 2 for k in ks):
        raise ChainEntryBelowTwo(f"chain entries must be >= 2: {ks}")
    if not ks:
        return c0
    return c0 + 1 / cf_eval(ks)
