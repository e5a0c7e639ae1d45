"""Apery and Kunz posets: divisibility order on Apery elements.

A KunzPoset lives on the quotient Z_n / H for a subgroup H (trivial for
posets built from semigroups).  The relation is stored densely as one
bitmask per ground element, which keeps closure and reduction exact and
fast at the sizes that occur here (n up to a few hundred).
"""

from __future__ import annotations

from .errors import NotGraded
from .semigroup import APERY, NumericalSemigroup


def subgroup_of(modulus: int, elements) -> tuple[int, ...]:
    """Closure of {0} ∪ elements under addition mod ``modulus``."""
    closed = {0}
    frontier = {e % modulus for e in elements}
    while frontier:
        nxt = set()
        for a in frontier:
            if a in closed:
                continue
            closed.add(a)
            for b in list(closed):
                s = (a + b) % modulus
                if s not in closed:
                    nxt.add(s)
        frontier = nxt
    return tuple(sorted(closed))


class KunzPoset:
    """Partial order on Z_n / H with the class of 0 as unique minimum.

    ``pairs`` are (a, b) relations meaning a precedes b; elements are
    arbitrary members of Z_n and get reduced to canonical coset
    representatives (the smallest member of each coset).  Reflexivity and
    the bottom element are added automatically; antisymmetry,
    transitivity, and difference closure (a before b forces b-a before b)
    are validated, so malformed input fails fast with ValueError.

    Equality and hashing compare modulus, subgroup, and the relation
    table only; labels are cosmetic.
    """

    def __init__(self, modulus: int, pairs, subgroup=(0,), labels=None):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        self.modulus = modulus
        sub = frozenset(h % modulus for h in subgroup) | {0}
        for a in sub:
            for b in sub:
                if (a + b) % modulus not in sub:
                    raise ValueError(f"subgroup not closed: {a} + {b}")
        self.subgroup = tuple(sorted(sub))

        # canonical representative (coset minimum) for every class
        rep = [min((x + h) % modulus for h in sub) for x in range(modulus)]
        self._rep = rep
        self.ground = tuple(sorted(set(rep)))
        self._index = {g: i for i, g in enumerate(self.ground)}
        size = len(self.ground)

        up = [1 << i for i in range(size)]
        for i in range(1, size):
            up[0] |= 1 << i
        for a, b in pairs:
            up[self._index[rep[a % modulus]]] |= 1 << self._index[rep[b % modulus]]
        self._up = up

        for i in range(size):
            for j in range(i + 1, size):
                if (up[i] >> j) & 1 and (up[j] >> i) & 1:
                    raise ValueError(
                        f"antisymmetry fails between classes {self.ground[i]} and {self.ground[j]}"
                    )
        for i in range(size):
            mask = up[i]
            j = 0
            m = mask
            while m:
                if m & 1 and up[j] & ~mask:
                    raise ValueError(f"relation is not transitive at class {self.ground[i]}")
                m >>= 1
                j += 1
        for i in range(size):
            for j in range(size):
                if i != j and (up[i] >> j) & 1:
                    diff = self._index[rep[(self.ground[j] - self.ground[i]) % modulus]]
                    if not (up[diff] >> j) & 1:
                        raise ValueError(
                            f"difference closure fails: {self.ground[i]} precedes "
                            f"{self.ground[j]} but their difference class does not"
                        )

        self._down = [0] * size
        for i in range(size):
            for j in range(size):
                if (up[i] >> j) & 1:
                    self._down[j] |= 1 << i

        if labels is None:
            self.labels = None
        else:
            self.labels = tuple(int(labels[g]) for g in self.ground)

    # -- queries ---------------------------------------------------------

    def index_of(self, x: int) -> int:
        """Index into ground of the coset of x."""
        return self._index[self._rep[x % self.modulus]]

    def leq(self, a: int, b: int) -> bool:
        return bool((self._up[self.index_of(a)] >> self.index_of(b)) & 1)

    def relations(self) -> list[tuple[int, int]]:
        """All strict pairs (a, b) with a before b, sorted."""
        out = []
        for i, g in enumerate(self.ground):
            for j, h in enumerate(self.ground):
                if i != j and (self._up[i] >> j) & 1:
                    out.append((g, h))
        return sorted(out)

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction: pairs (a, b) with b immediately above a."""
        size = len(self.ground)
        out = []
        for i in range(size):
            strict_up = self._up[i] & ~(1 << i)
            for j in range(size):
                if (strict_up >> j) & 1:
                    between = strict_up & self._down[j] & ~(1 << j)
                    if between == 0:
                        out.append((self.ground[i], self.ground[j]))
        return sorted(out)

    def atoms(self) -> list[int]:
        """Elements covering the bottom class."""
        return sorted(b for a, b in self.covers() if a == self.ground[0])

    def _height_list(self) -> list[int]:
        size = len(self.ground)
        h = [None] * size

        def height(i):
            if h[i] is None:
                below = self._down[i] & ~(1 << i)
                h[i] = 0
                j = 0
                m = below
                while m:
                    if m & 1:
                        h[i] = max(h[i], height(j) + 1)
                    m >>= 1
                    j += 1
            return h[i]

        for i in range(size):
            height(i)
        return h

    def is_graded(self) -> bool:
        h = self._height_list()
        return all(
            h[self._index[b]] == h[self._index[a]] + 1 for a, b in self.covers()
        )

    def heights(self) -> dict[int, int]:
        """Rank of each ground element; only defined for graded posets."""
        h = self._height_list()
        for a, b in self.covers():
            if h[self._index[b]] != h[self._index[a]] + 1:
                raise NotGraded(
                    f"cover {a} -> {b} skips a level; no consistent rank function"
                )
        return {g: h[i] for i, g in enumerate(self.ground)}

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, KunzPoset)
            and self.modulus == other.modulus
            and self.subgroup == other.subgroup
            and self._up == other._up
        )

    def __hash__(self):
        return hash((self.modulus, self.subgroup, tuple(self._up)))

    def __repr__(self):
        return (
            f"KunzPoset(modulus={self.modulus}, ground={len(self.ground)} classes, "
            f"relations={len(self.relations())})"
        )

    # -- export ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {
            "modulus": self.modulus,
            "subgroup": list(self.subgroup),
            "relations": [list(p) for p in self.relations()],
        }
        if self.labels is not None:
            out["labels"] = {str(g): v for g, v in zip(self.ground, self.labels)}
        return out

    def to_dot(self) -> str:
        """Hasse diagram in DOT, nodes in ascending class order."""
        lines = ["digraph kunz_poset {", "  rankdir=BT;", '  node [shape=box];']
        for i, g in enumerate(self.ground):
            if self.labels is not None:
                lines.append(f'  n{g} [label="{g}\\n{self.labels[i]}"];')
            else:
                lines.append(f'  n{g} [label="{g}"];')
        for a, b in self.covers():
            lines.append(f"  n{a} -> n{b};")
        if self.is_graded():
            by_height: dict[int, list[int]] = {}
            for g, h in self.heights().items():
                by_height.setdefault(h, []).append(g)
            for h in sorted(by_height):
                row = "; ".join(f"n{g}" for g in sorted(by_height[h]))
                lines.append(f"  {{ rank=same; {row}; }}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def apery_poset(S: NumericalSemigroup, m: int) -> KunzPoset:
    """Divisibility order on Ap(S; m), labelled by the Apery values.

    i precedes j exactly when a_j - a_i is itself an Apery element, which
    for elements of one class pins it to the class minimum a_{j-i}.
    """
    values = S.coordinates(m, APERY).entries
    pairs = [
        (i, j)
        for i in range(m)
        for j in range(m)
        if values[j] - values[i] == values[(j - i) % m]
    ]
    return KunzPoset(m, pairs, labels={i: values[i] for i in range(m)})


def kunz_poset_of(S: NumericalSemigroup, m: int) -> KunzPoset:
    """Same order as apery_poset, with ground elements as plain classes."""
    values = S.coordinates(m, APERY).entries
    pairs = [
        (i, j)
        for i in range(m)
        for j in range(m)
        if values[j] - values[i] == values[(j - i) % m]
    ]
    return KunzPoset(m, pairs)
