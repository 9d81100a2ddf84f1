"""Monomial equivalence of codes: group actions, witnesses, canonical forms.

A monomial map permutes the n coordinates and scales each by a unit.
Over E_p the scaling entries must come from outside the maximal ideal
(alpha nonzero); since x * e = alpha(e) x coordinatewise, such a map acts
on an :class:`~epcodes.code.EpCode` through the F_p monomial map carrying
alpha of each scale, applied to the residue and torsion codes jointly.

Equivalence testing and canonicalization share one search over column
assignments.  Fix the RREF basis B of a code and assign target columns
0..n-1 to (source column, unit scale) choices.  The serialized image is
read off column by column: the first t columns of the RREF of the mapped
matrix equal the RREF of the chosen k x t submatrix (padded with zero
rows), so the serialization is append-only and supports tight pruning.
The canonical key is the lexicographic minimum of that serialization
over the whole monomial group; equivalence searches instead for an
assignment whose serialization matches the other code's own RREF.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .code import EpCode
from .fp import FpCode, Vec, inverse_table, validate_modulus
from .ring import EpElem


class BudgetExceeded(RuntimeError):
    """A computation was refused because n exceeds the configured budget."""

    def __init__(self, message: str, largest_feasible: int) -> None:
        super().__init__(message)
        self.largest_feasible = largest_feasible


# Largest length canonicalized without an explicit override.  The search
# degrades toward |group| = (p-1)^n n! nodes on highly symmetric codes.
CANON_BUDGET = {2: 10, 3: 6}
_CANON_BUDGET_OTHER = 5


def canon_budget(p: int) -> int:
    return CANON_BUDGET.get(p, _CANON_BUDGET_OTHER)


def _check_budget(p: int, n: int, max_n: int | None) -> None:
    limit = canon_budget(p) if max_n is None else max_n
    if n > limit:
        raise BudgetExceeded(
            f"canonicalization refused at n={n} for p={p}; "
            f"largest feasible n is {limit} (pass max_n to override)",
            largest_feasible=limit,
        )


@dataclass(frozen=True)
class MonomialMapFp:
    """y[perm[i]] = scale[perm[i]] * x[i]; scale is indexed by target."""

    p: int
    perm: tuple[int, ...]
    scale: tuple[int, ...]

    def __post_init__(self) -> None:
        validate_modulus(self.p)
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.scale) != n:
            raise ValueError("not a valid monomial map")
        if any(not 1 <= c < self.p for c in self.scale):
            raise ValueError("scales must be units mod p")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, p: int, n: int) -> "MonomialMapFp":
        return cls(p, tuple(range(n)), (1,) * n)

    def apply_vec(self, x: Sequence[int]) -> Vec:
        y = [0] * self.n
        for i, v in enumerate(x):
            j = self.perm[i]
            y[j] = (self.scale[j] * v) % self.p
        return tuple(y)

    def apply(self, c: FpCode) -> FpCode:
        if (c.p, c.n) != (self.p, self.n):
            raise ValueError("map and code do not match")
        return FpCode.from_rows(c.p, [self.apply_vec(row) for row in c.basis], c.n)

    def then(self, other: "MonomialMapFp") -> "MonomialMapFp":
        """The composite map: self first, then other."""
        if (other.p, other.n) != (self.p, self.n):
            raise ValueError("maps do not compose")
        perm = tuple(other.perm[t] for t in self.perm)
        scale = [0] * self.n
        for i in range(self.n):
            t1 = self.perm[i]
            t2 = other.perm[t1]
            scale[t2] = (other.scale[t2] * self.scale[t1]) % self.p
        return MonomialMapFp(self.p, perm, tuple(scale))

    def inverse(self) -> "MonomialMapFp":
        inv = inverse_table(self.p)
        perm = [0] * self.n
        scale = [1] * self.n
        for i in range(self.n):
            perm[self.perm[i]] = i
            scale[i] = inv[self.scale[self.perm[i]]]
        return MonomialMapFp(self.p, tuple(perm), tuple(scale))

    def lift(self) -> "MonomialMapEp":
        """The E_p map with entries scale * r (alpha recovers scale)."""
        r1 = EpElem.r(self.p)
        return MonomialMapEp(self.p, self.perm, tuple(c * r1 for c in self.scale))


@dataclass(frozen=True)
class MonomialMapEp:
    """A monomial map over E_p; every scale must have alpha != 0."""

    p: int
    perm: tuple[int, ...]
    scale: tuple[EpElem, ...]

    def __post_init__(self) -> None:
        validate_modulus(self.p)
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.scale) != n:
            raise ValueError("not a valid monomial map")
        for e in self.scale:
            if e.p != self.p:
                raise ValueError("scale entry over the wrong ring")
            if e.alpha == 0:
                raise ValueError("scale entries must lie outside the maximal ideal")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, p: int, n: int) -> "MonomialMapEp":
        return cls(p, tuple(range(n)), (EpElem.r(p),) * n)

    def alpha_map(self) -> MonomialMapFp:
        return MonomialMapFp(self.p, self.perm, tuple(e.alpha for e in self.scale))

    def apply_vec(self, x: Sequence[EpElem]) -> tuple[EpElem, ...]:
        """Transport of a codeword: y[perm[i]] = x[i] * scale[perm[i]]."""
        y = [EpElem.zero(self.p)] * self.n
        for i, v in enumerate(x):
            j = self.perm[i]
            y[j] = v * self.scale[j]
        return tuple(y)

    def apply(self, c: EpCode) -> EpCode:
        """Image code: both the residue and the torsion transform under
        the alpha reduction, because x * e = alpha(e) x coordinatewise."""
        if (c.p, c.n) != (self.p, self.n):
            raise ValueError("map and code do not match")
        fp_map = self.alpha_map()
        return EpCode(fp_map.apply(c.residue), fp_map.apply(c.torsion))

    def then(self, other: "MonomialMapEp") -> "MonomialMapEp":
        if (other.p, other.n) != (self.p, self.n):
            raise ValueError("maps do not compose")
        perm = tuple(other.perm[t] for t in self.perm)
        scale = [EpElem.r(self.p)] * self.n
        for i in range(self.n):
            t1 = self.perm[i]
            t2 = other.perm[t1]
            scale[t2] = self.scale[t1] * other.scale[t2]
        return MonomialMapEp(self.p, perm, tuple(scale))

    def inverse(self) -> "MonomialMapEp":
        """Undoes the transport; scaling by e acts through alpha(e) alone."""
        p = self.p
        perm = [0] * self.n
        scale = [EpElem.r(p)] * self.n
        for i, j in enumerate(self.perm):
            perm[j] = i
            inv = pow(self.scale[j].alpha, p - 2, p)
            scale[i] = EpElem.from_t_adic(inv, 0, p)
        return MonomialMapEp(p, tuple(perm), tuple(scale))


def all_monomial_maps_fp(p: int, n: int) -> Iterator[MonomialMapFp]:
    """The full group, (p-1)^n n! maps; smoke scale only."""
    units = range(1, p)
    for perm in itertools.permutations(range(n)):
        for scale in itertools.product(units, repeat=n):
            yield MonomialMapFp(p, perm, scale)


# ---------------------------------------------------------------------------
# Column-assignment search engine.
#
# State per branch: one working matrix W per input matrix, kept fully
# row-reduced against the columns assigned so far.  Assigning source
# column s with unit scale u appends, for each matrix, the column of the
# image RREF: the unit vector e_rank if the scaled column is independent,
# or its reduced coefficients if dependent.  Row operations triggered by
# a new pivot never touch previously assigned columns, which makes the
# serialization append-only.
# ---------------------------------------------------------------------------


def _scaled_column(W: list[list[int]], s: int, u: int, p: int) -> list[int]:
    return [(u * row[s]) % p for row in W]


def _append_column(
    mats: list[list[list[int]]], ranks: list[int], s: int, u: int, p: int
) -> tuple[tuple[int, ...], list[list[list[int]]], list[int]]:
    """Serialized bytes plus successor state for one assignment."""
    inv = inverse_table(p)
    ser: list[int] = []
    new_mats: list[list[list[int]]] = []
    new_ranks: list[int] = []
    for W, rank in zip(mats, ranks):
        k = len(W)
        col = _scaled_column(W, s, u, p)
        pivot = next((i for i in range(rank, k) if col[i]), None)
        if pivot is None:
            ser.extend(col)
            new_mats.append(W)
            new_ranks.append(rank)
            continue
        ser.extend(1 if i == rank else 0 for i in range(k))
        W2 = [row[:] for row in W]
        W2[rank], W2[pivot] = W2[pivot], W2[rank]
        head = inv[(u * W2[rank][s]) % p]
        W2[rank] = [(head * v) % p for v in W2[rank]]
        for i in range(k):
            if i != rank:
                c = (u * W2[i][s]) % p
                if c:
                    W2[i] = [(a - c * b) % p for a, b in zip(W2[i], W2[rank])]
        new_mats.append(W2)
        new_ranks.append(rank + 1)
    return tuple(ser), new_mats, new_ranks


def _source_classes(
    mats: list[list[list[int]]], unassigned: Sequence[int], p: int
) -> list[tuple[int, bool]]:
    """One source column per joint projective class, with a zero flag.

    Columns that agree up to one joint nonzero scalar are interchangeable:
    any completed assignment through one converts into an assignment
    through the other with the same serialization, scales adjusted.
    """
    inv = inverse_table(p)
    seen: dict[tuple[int, ...], int] = {}
    out: list[tuple[int, bool]] = []
    for s in unassigned:
        flat = [row[s] for W in mats for row in W]
        lead = next((v for v in flat if v), 0)
        if lead:
            key = tuple((inv[lead] * v) % p for v in flat)
        else:
            key = tuple(flat)
        if key in seen:
            continue
        seen[key] = s
        out.append((s, lead == 0))
    return out


def _search(
    p: int,
    n: int,
    mats0: Sequence[Sequence[Sequence[int]]],
    target: Sequence[tuple[int, ...]] | None,
) -> tuple[list[tuple[int, ...]], list[int], list[int]] | None:
    """Shared engine.

    With ``target`` given, finds one assignment whose serialization equals
    it (equivalence witness); otherwise minimizes the serialization over
    the group (canonical form).  Returns (columns, sources, scales) or
    None when no witness exists.
    """
    units = list(range(1, p))
    best: dict[str, list] = {"cols": None, "src": None, "scl": None}

    def rec(
        mats: list[list[list[int]]],
        ranks: list[int],
        unassigned: list[int],
        prefix: list[tuple[int, ...]],
        sources: list[int],
        scales: list[int],
    ) -> bool:
        t = n - len(unassigned)
        if not unassigned:
            if target is not None:
                best["cols"], best["src"], best["scl"] = prefix[:], sources[:], scales[:]
                return True
            if best["cols"] is None or prefix < best["cols"]:
                best["cols"], best["src"], best["scl"] = prefix[:], sources[:], scales[:]
            return False
        candidates: list[tuple[tuple[int, ...], int, int]] = []
        for s, is_zero in _source_classes(mats, unassigned, p):
            for u in [1] if is_zero else units:
                ser, _, _ = _append_column(mats, ranks, s, u, p)
                candidates.append((ser, s, u))
        candidates.sort()
        for ser, s, u in candidates:
            if target is not None:
                if ser != target[t]:
                    continue
            elif best["cols"] is not None:
                # Prune once prefix+ser exceeds the incumbent; candidates
                # are sorted, so every later one is at least as large.
                if prefix + [ser] > best["cols"][: t + 1]:
                    break
            ser2, mats2, ranks2 = _append_column(mats, ranks, s, u, p)
            rest = [x for x in unassigned if x != s]
            found = rec(
                mats2, ranks2, rest, prefix + [ser2], sources + [s], scales + [u]
            )
            if found:
                return True
        return False

    hit = rec([[list(r) for r in m] for m in mats0], [0] * len(mats0), list(range(n)), [], [], [])
    if target is not None and not hit:
        return None
    return best["cols"], best["src"], best["scl"]


def _serialize_rref(mats: Sequence[Sequence[Sequence[int]]], n: int) -> list[tuple[int, ...]]:
    """Column-major serialization of already-reduced matrices."""
    cols = []
    for j in range(n):
        cols.append(tuple(row[j] for W in mats for row in W))
    return cols


def _witness_map(p: int, n: int, sources: list[int], scales: list[int]) -> MonomialMapFp:
    perm = [0] * n
    scale = [1] * n
    for t, (s, u) in enumerate(zip(sources, scales)):
        perm[s] = t
        scale[t] = u
    return MonomialMapFp(p, tuple(perm), tuple(scale))


def _key_bytes(header: Sequence[int], cols: Sequence[tuple[int, ...]]) -> bytes:
    flat = list(header)
    for col in cols:
        flat.extend(col)
    return bytes(flat)


def _cols_to_rows(cols: Sequence[tuple[int, ...]], k: int, offset: int) -> tuple[Vec, ...]:
    return tuple(tuple(col[offset + i] for col in cols) for i in range(k))


# -- F_p level ----------------------------------------------------------------


def canonical_form_fp(c: FpCode, max_n: int | None = None) -> tuple[bytes, FpCode]:
    """Canonical key and representative under the monomial group."""
    _check_budget(c.p, c.n, max_n)
    cols, _, _ = _search(c.p, c.n, [c.basis], None)
    key = _key_bytes((c.p, c.n, c.k), cols)
    rep = FpCode.from_rows(c.p, _cols_to_rows(cols, c.k, 0), c.n) if c.k else FpCode.zero(c.p, c.n)
    return key, rep


def canonical_key_fp(c: FpCode, max_n: int | None = None) -> bytes:
    return canonical_form_fp(c, max_n)[0]


def canonical_form_free(residue: FpCode, max_n: int | None = None) -> tuple[bytes, EpCode]:
    """Canonical form of the free code r*G at the cost of a residue search.

    A free code carries the pair (R, R), so every joint column is the
    residue column repeated twice; doubling preserves lexicographic order,
    hence both minimizations select the same group elements and the joint
    key is the residue key with doubled columns and a widened header.
    """
    _, rep = canonical_form_fp(residue, max_n)
    cols = _serialize_rref([rep.basis], rep.n)
    key = _key_bytes((rep.p, rep.n, rep.k, rep.k), [col + col for col in cols])
    return key, EpCode.free_code(rep)


def equivalent_fp(
    c1: FpCode, c2: FpCode, max_n: int | None = None
) -> MonomialMapFp | None:
    """A monomial map sending c1 to c2, or None.

    The search is exact: invariant prefilters (dimension and the weight
    enumerators of the code and its dual) only short-circuit the answer.
    """
    if (c1.p, c1.n) != (c2.p, c2.n):
        raise ValueError("codes live in different spaces")
    _check_budget(c1.p, c1.n, max_n)
    if c1.k != c2.k:
        return None
    if c1.weight_enumerator != c2.weight_enumerator:
        return None
    if c1.dual.weight_enumerator != c2.dual.weight_enumerator:
        return None
    found = _search(c1.p, c1.n, [c1.basis], _serialize_rref([c2.basis], c2.n))
    if found is None:
        return None
    _, sources, scales = found
    m = _witness_map(c1.p, c1.n, sources, scales)
    if m.apply(c1) != c2:
        raise RuntimeError("internal error: equivalence witness failed validation")
    return m


# -- E_p level ----------------------------------------------------------------


def canonical_form(c: EpCode, max_n: int | None = None) -> tuple[bytes, EpCode]:
    """Canonical key and representative of an E_p code.

    The serialization interleaves the residue and torsion RREF columns,
    so equal keys mean equal (residue, torsion) pairs after some single
    monomial change of coordinates, i.e. monomial equivalence.
    """
    _check_budget(c.p, c.n, max_n)
    kr, kt = c.residue.k, c.torsion.k
    cols, _, _ = _search(c.p, c.n, [c.residue.basis, c.torsion.basis], None)
    key = _key_bytes((c.p, c.n, kr, kt), cols)
    residue = (
        FpCode.from_rows(c.p, _cols_to_rows(cols, kr, 0), c.n) if kr else FpCode.zero(c.p, c.n)
    )
    torsion = (
        FpCode.from_rows(c.p, _cols_to_rows(cols, kt, kr), c.n)
        if kt
        else FpCode.zero(c.p, c.n)
    )
    return key, EpCode(residue, torsion)


def canonical_key(c: EpCode, max_n: int | None = None) -> bytes:
    return canonical_form(c, max_n)[0]


def equivalent_ep(
    c1: EpCode, c2: EpCode, max_n: int | None = None
) -> MonomialMapEp | None:
    """A monomial map over E_p sending c1 to c2, or None.

    Free codes reduce to residue equivalence; the general case searches
    for one coordinate change carrying both pairs simultaneously.
    """
    if (c1.p, c1.n) != (c2.p, c2.n):
        raise ValueError("codes live in different spaces")
    _check_budget(c1.p, c1.n, max_n)
    if (c1.m1, c1.m2) != (c2.m1, c2.m2):
        return None
    if c1.is_free:
        fp_map = equivalent_fp(c1.residue, c2.residue, max_n)
        if fp_map is None:
            return None
        m = fp_map.lift()
    else:
        if c1.residue.weight_enumerator != c2.residue.weight_enumerator:
            return None
        if c1.torsion.weight_enumerator != c2.torsion.weight_enumerator:
            return None
        found = _search(
            c1.p,
            c1.n,
            [c1.residue.basis, c1.torsion.basis],
            _serialize_rref([c2.residue.basis, c2.torsion.basis], c2.n),
        )
        if found is None:
            return None
        _, sources, scales = found
        m = _witness_map(c1.p, c1.n, sources, scales).lift()
    if m.apply(c1) != c2:
        raise RuntimeError("internal error: equivalence witness failed validation")
    return m
