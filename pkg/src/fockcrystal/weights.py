"""Integral weights for sl_infinity and affine sl_e, and the projection between them.

Level-0 conventions used throughout the package::

    eps_j   = Lambda_j - Lambda_{j-1}         (contribution of a symbol entry j)
    omega_k = eps_k + ... + eps_{k-e+1} = Lambda_k - Lambda_{k-e}

With these, removing a period of form (M, ..., M-e+1) lowers wt_inf by
omega_M, and omega_k spans the kernel of the projection.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class WeightInf:
    """Finitely supported integer combination of the Lambda_{j, inf}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for j, a in items:
            c[int(j)] = c.get(int(j), 0) + int(a)
        self._c = {j: a for j, a in sorted(c.items()) if a}

    @classmethod
    def fundamental(cls, j: int) -> "WeightInf":
        return cls({j: 1})

    @classmethod
    def from_charge(cls, s: Sequence[int]) -> "WeightInf":
        return cls((x, 1) for x in s)

    @classmethod
    def eps(cls, j: int) -> "WeightInf":
        return cls({j: 1, j - 1: -1})

    @classmethod
    def omega(cls, k: int, e: int) -> "WeightInf":
        return cls({k: 1, k - e: -1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, j: int) -> int:
        return self._c.get(j, 0)

    @property
    def level(self) -> int:
        return sum(self._c.values())

    def support(self) -> list[int]:
        return list(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "WeightInf") -> "WeightInf":
        return WeightInf(list(self._c.items()) + list(other._c.items()))

    def __sub__(self, other: "WeightInf") -> "WeightInf":
        return self + (-other)

    def __neg__(self) -> "WeightInf":
        return WeightInf({j: -a for j, a in self._c.items()})

    def __mul__(self, k: int) -> "WeightInf":
        return WeightInf({j: k * a for j, a in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightInf) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self._c.items()))

    def __repr__(self) -> str:
        return f"WeightInf({self._c})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for j, a in self._c.items():
            coef = "" if a == 1 else "-" if a == -1 else f"{a}"
            terms.append(f"{coef}L{j}")
        return " + ".join(terms).replace("+ -", "- ")

    def eps_coords(self) -> dict[int, int]:
        """Coordinates on the eps_j basis; only meaningful at level 0.

        The coefficient on eps_j is the tail sum of Lambda-coefficients >= j.
        """
        if self.level != 0:
            raise ValueError(f"{self} has level {self.level}, not 0")
        if not self._c:
            return {}
        lo, hi = min(self._c), max(self._c)
        out, acc = {}, 0
        for j in range(hi, lo, -1):
            acc += self._c.get(j, 0)
            if acc:
                out[j] = acc
        return dict(sorted(out.items()))

    @classmethod
    def from_eps(cls, eps: Mapping[int, int]) -> "WeightInf":
        w = cls()
        for j, b in eps.items():
            w = w + cls.eps(j) * b
        return w

    def to_json(self) -> dict:
        return {"fundamental": {str(j): a for j, a in self._c.items()}}

    @classmethod
    def from_json(cls, data) -> "WeightInf":
        if isinstance(data, Mapping) and "fundamental" in data:
            data = data["fundamental"]
        return cls({int(j): int(a) for j, a in data.items()})


class WeightAff:
    """Integer combination of Lambda_{i, e}, i in Z/eZ (no null-root coordinate)."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: Sequence[int] | Mapping[int, int] = ()):
        self.e = e
        vec = [0] * e
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for i, a in items:
            vec[int(i) % e] += int(a)
        self.coeffs = tuple(vec)

    @classmethod
    def fundamental(cls, i: int, e: int) -> "WeightAff":
        return cls(e, {i: 1})

    @classmethod
    def from_charge(cls, s: Sequence[int], e: int) -> "WeightAff":
        vec = [0] * e
        for x in s:
            vec[x % e] += 1
        return cls(e, vec)

    @classmethod
    def simple_root(cls, i: int, e: int) -> "WeightAff":
        vec = [0] * e
        vec[(i - 1) % e] -= 1
        vec[i % e] += 2
        vec[(i + 1) % e] -= 1
        return cls(e, vec)

    @property
    def level(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "WeightAff") -> "WeightAff":
        self._same_e(other)
        return WeightAff(self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "WeightAff") -> "WeightAff":
        self._same_e(other)
        return WeightAff(self.e, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, k: int) -> "WeightAff":
        return WeightAff(self.e, [k * a for a in self.coeffs])

    __rmul__ = __mul__

    def _same_e(self, other):
        if self.e != other.e:
            raise ValueError(f"mixing e={self.e} and e={other.e} weights")

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightAff) and (self.e, self.coeffs) == (other.e, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.e, self.coeffs))

    def __repr__(self) -> str:
        return f"WeightAff(e={self.e}, {list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"e": self.e, "coeffs": list(self.coeffs)}


def project_weight(w: WeightInf, e: int) -> WeightAff:
    """Linear extension of Lambda_{j, inf} -> Lambda_{j mod e, e}."""
    vec = [0] * e
    for j, a in w.coeffs.items():
        vec[j % e] += a
    return WeightAff(e, vec)
