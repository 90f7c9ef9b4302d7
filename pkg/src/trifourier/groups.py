"""Small permutation groups, centralizers and hand-built character tables.

Groups are tuples-of-images permutations under composition (a*b)(x)=a(b(x)).
The character tables of the centralizers that occur in the symmetric groups
on up to five points are written out explicitly with the label scheme used
throughout the package, then validated by orthogonality.

Label conventions that are not forced by anything downstream are fixed here
and documented in the README:
  * eps is always the restriction of the ambient sign character;
  * on a Klein four-group centralizer of a transposition t, eps' is -1 on t
    itself and +1 on the complementary transposition, eps'' the other way;
  * on the order-8 dihedral centralizer of a double transposition, eps' is
    -1 exactly on the 4-cycles and the non-central double transpositions,
    eps'' is -1 exactly on the transpositions and the non-central double
    transpositions;
  * nu is the five-dimensional character of S5 with value +1 on
    transpositions; nu' is nu twisted by sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .cyclotomic import Cyc

Perm = tuple[int, ...]


def pmul(a: Perm, b: Perm) -> Perm:
    return tuple(a[b[x]] for x in range(len(a)))


def pinv(a: Perm) -> Perm:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def pconj(g: Perm, x: Perm) -> Perm:
    """g x g^{-1}."""
    return pmul(pmul(g, x), pinv(g))


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def from_cycles(n: int, *cycles: tuple[int, ...]) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for pos, pt in enumerate(cyc):
            out[pt] = cyc[(pos + 1) % len(cyc)]
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lens = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def perm_order(p: Perm) -> int:
    order = 1
    for length in cycle_type(p):
        g = order
        while g % length:
            g += order
        order = g
    return order


def restrict(p: Perm, support: tuple[int, ...]) -> Perm:
    """Restriction to an invariant point set, relabelled to 0..len-1."""
    pos = {pt: k for k, pt in enumerate(support)}
    return tuple(pos[p[pt]] for pt in support)


@dataclass(frozen=True)
class PermGroup:
    name: str
    degree: int
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def centralizer(self, x: Perm) -> tuple[Perm, ...]:
        return tuple(g for g in self.elements if pmul(g, x) == pmul(x, g))

    def conjugacy_class(self, x: Perm) -> frozenset[Perm]:
        return frozenset(pconj(g, x) for g in self.elements)


def symmetric_group(n: int) -> PermGroup:
    return PermGroup(f"s{n}", n, tuple(permutations(range(n))))


def product_group(a: PermGroup, b: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    shift = a.degree
    elems = tuple(
        ga + tuple(x + shift for x in gb) for ga in a.elements for gb in b.elements
    )
    return PermGroup(f"{a.name}x{b.name}", a.degree + b.degree, elems)


# -- character tables --------------------------------------------------------


@dataclass
class CharacterTable:
    """Irreducible characters of a centralizer, as element -> value maps."""

    group_elements: tuple[Perm, ...]
    labels: tuple[str, ...]
    values: dict[str, dict[Perm, Cyc]]

    @property
    def order(self) -> int:
        return len(self.group_elements)

    def value(self, label: str, g: Perm) -> Cyc:
        return self.values[label][g]

    def degree(self, label: str) -> Cyc:
        ident = identity_perm(len(self.group_elements[0]))
        return self.values[label][ident]

    def validate(self) -> None:
        """Row orthogonality and the sum-of-squares count."""
        n = self.order
        ident = identity_perm(len(self.group_elements[0]))
        total = Cyc.zero()
        for lab in self.labels:
            total = total + self.values[lab][ident] * self.values[lab][ident]
        if not (total.is_rational() and total.to_rational() == n):
            raise AssertionError(f"sum of squared degrees {total!r} != {n}")
        for i, la in enumerate(self.labels):
            for lb in self.labels[i:]:
                acc = Cyc.zero()
                for g in self.group_elements:
                    acc = acc + self.values[la][g] * self.values[lb][g].conj()
                want = n if la == lb else 0
                if not (acc.is_rational() and acc.to_rational() == want):
                    raise AssertionError(f"orthogonality fails for ({la},{lb}): {acc!r}")


def _rat(x: int) -> Cyc:
    return Cyc.from_rational(x)


def _cyclic_table(gen: Perm, labels_and_values: list[tuple[str, Cyc]]) -> CharacterTable:
    """Characters of the cyclic group generated by gen; chi(gen) = given value."""
    order = perm_order(gen)
    elements = []
    g = identity_perm(len(gen))
    for _ in range(order):
        elements.append(g)
        g = pmul(gen, g)
    values = {
        lab: {elements[j]: val**j for j in range(order)} for lab, val in labels_and_values
    }
    return CharacterTable(tuple(elements), tuple(lab for lab, _ in labels_and_values), values)


def _table_by_classifier(elements, labels, classify, rows) -> CharacterTable:
    values = {
        lab: {g: rows[lab][classify(g)] for g in elements} for lab in labels
    }
    return CharacterTable(tuple(elements), tuple(labels), values)


def _sym_table(n: int, elements: tuple[Perm, ...]) -> CharacterTable:
    """Character table of a symmetric group of degree <= 5, by cycle type."""
    if n == 1:
        return _table_by_classifier(elements, ["1"], cycle_type, {"1": {(1,): _rat(1)}})
    if n == 2:
        rows = {
            "1": {(1, 1): _rat(1), (2,): _rat(1)},
            "eps": {(1, 1): _rat(1), (2,): _rat(-1)},
        }
        return _table_by_classifier(elements, ["1", "eps"], cycle_type, rows)
    if n == 3:
        rows = {
            "1": {(1, 1, 1): _rat(1), (2, 1): _rat(1), (3,): _rat(1)},
            "r": {(1, 1, 1): _rat(2), (2, 1): _rat(0), (3,): _rat(-1)},
            "eps": {(1, 1, 1): _rat(1), (2, 1): _rat(-1), (3,): _rat(1)},
        }
        return _table_by_classifier(elements, ["1", "r", "eps"], cycle_type, rows)
    if n == 4:
        types = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
        data = {
            "1": (1, 1, 1, 1, 1),
            "lambda1": (3, 1, -1, 0, -1),
            "lambda2": (3, -1, -1, 0, 1),
            "lambda3": (1, -1, 1, 1, -1),
            "sigma": (2, 0, 2, -1, 0),
        }
        rows = {lab: {t: _rat(v) for t, v in zip(types, vals)} for lab, vals in data.items()}
        return _table_by_classifier(
            elements, ["1", "lambda1", "lambda2", "lambda3", "sigma"], cycle_type, rows
        )
    if n == 5:
        types = [(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)]
        data = {
            "1": (1, 1, 1, 1, 1, 1, 1),
            "lambda1": (4, 2, 0, 1, -1, 0, -1),
            "lambda2": (6, 0, -2, 0, 0, 0, 1),
            "lambda3": (4, -2, 0, 1, 1, 0, -1),
            "lambda4": (1, -1, 1, 1, -1, -1, 1),
            "nu": (5, 1, 1, -1, 1, -1, 0),
            "nu'": (5, -1, 1, -1, -1, 1, 0),
        }
        rows = {lab: {t: _rat(v) for t, v in zip(types, vals)} for lab, vals in data.items()}
        labels = ["1", "lambda1", "lambda2", "lambda3", "lambda4", "nu", "nu'"]
        return _table_by_classifier(elements, labels, cycle_type, rows)
    raise ValueError(f"no table for degree {n}")


def _klein_table(x: Perm, elements: tuple[Perm, ...]) -> CharacterTable:
    """Z2 x Z2 centralizer of a transposition x; the complement is the other transposition."""
    ident = identity_perm(len(x))
    others = [g for g in elements if g not in (ident, x) and cycle_type(g)[0] == 2 and sum(1 for l in cycle_type(g) if l == 2) == 1]
    comp = others[0]
    both = pmul(x, comp)

    def split(g: Perm) -> tuple[int, int]:
        return (1 if g in (x, both) else 0, 1 if g in (comp, both) else 0)

    rows = {
        "1": lambda a, b: 1,
        "eps'": lambda a, b: (-1) ** a,
        "eps''": lambda a, b: (-1) ** b,
        "eps": lambda a, b: (-1) ** (a + b),
    }
    values = {
        lab: {g: _rat(fn(*split(g))) for g in elements} for lab, fn in rows.items()
    }
    return CharacterTable(tuple(elements), ("1", "eps'", "eps''", "eps"), values)


def _dihedral8_table(x: Perm, elements: tuple[Perm, ...]) -> CharacterTable:
    """Order-8 dihedral centralizer of a double transposition x (its center)."""

    def classify(g: Perm) -> str:
        ct = cycle_type(g)
        n2 = sum(1 for l in ct if l == 2)
        if g == x:
            return "center"
        if 4 in ct:
            return "rot"          # the two 4-cycles
        if n2 == 2:
            return "refl-v"       # double transpositions other than the center
        if n2 == 1:
            return "refl-h"       # the two transpositions
        return "id"

    rows = {
        "1": {"id": 1, "center": 1, "rot": 1, "refl-h": 1, "refl-v": 1},
        "eps'": {"id": 1, "center": 1, "rot": -1, "refl-h": 1, "refl-v": -1},
        "eps''": {"id": 1, "center": 1, "rot": 1, "refl-h": -1, "refl-v": -1},
        "eps": {"id": 1, "center": 1, "rot": -1, "refl-h": -1, "refl-v": 1},
        "r": {"id": 2, "center": -2, "rot": 0, "refl-h": 0, "refl-v": 0},
    }
    values = {
        lab: {g: _rat(row[classify(g)]) for g in elements} for lab, row in rows.items()
    }
    return CharacterTable(tuple(elements), ("1", "eps'", "eps''", "eps", "r"), values)


def _split_product_table(
    elements: tuple[Perm, ...],
    support_a: tuple[int, ...],
    support_b: tuple[int, ...],
    table_a_of: "callable",
    labels: list[tuple[str, str, str]],
) -> CharacterTable:
    """Characters of a product centralizer split along two invariant supports.

    labels lists (combined label, label on part A, label on part B).
    """
    restricted_a = {g: restrict(g, support_a) for g in elements}
    restricted_b = {g: restrict(g, support_b) for g in elements}
    part_a = table_a_of(tuple(sorted(set(restricted_a.values()))))
    nb = len(support_b)
    part_b = _sym_table(nb, tuple(sorted(set(restricted_b.values()))))
    values = {}
    for lab, la, lb in labels:
        values[lab] = {
            g: part_a.values[la][restricted_a[g]] * part_b.values[lb][restricted_b[g]]
            for g in elements
        }
    return CharacterTable(tuple(elements), tuple(lab for lab, _, _ in labels), values)
