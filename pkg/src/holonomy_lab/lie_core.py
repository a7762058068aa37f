"""Degree-truncated tensor algebra and free Lie tools over a finite alphabet.

Scalars are generic: exact work uses Fraction (or CycloNum), numeric work
uses complex, through the same code paths.  Words are tuples of letter
indices; an element stores only its nonzero coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class BasisMismatch(ValueError):
    """Operands live over different alphabets or truncation degrees."""


def _is_exact_zero(c) -> bool:
    return c == 0


class GradedTensor:
    """A truncated element of the tensor algebra on `width` letters.

    data maps words (tuples of letter indices, length = degree) to nonzero
    scalar coefficients; words longer than max_degree are truncated away.
    """

    __slots__ = ("width", "max_degree", "data")

    def __init__(self, width: int, max_degree: int, data: dict | None = None):
        self.width = width
        self.max_degree = max_degree
        self.data = {}
        if data:
            for w, c in data.items():
                if len(w) <= max_degree and not _is_exact_zero(c):
                    self.data[w] = c

    # ----- constructors ---------------------------------------------------
    @staticmethod
    def unit(width: int, max_degree: int, scalar=Fraction(1)) -> GradedTensor:
        return GradedTensor(width, max_degree, {(): scalar})

    @staticmethod
    def zero(width: int, max_degree: int) -> GradedTensor:
        return GradedTensor(width, max_degree)

    @staticmethod
    def letter(width: int, max_degree: int, i: int, scalar=Fraction(1)) -> GradedTensor:
        if not 0 <= i < width:
            raise BasisMismatch(f"letter {i} outside alphabet of size {width}")
        return GradedTensor(width, max_degree, {(i,): scalar})

    def _check(self, other: GradedTensor) -> None:
        if self.width != other.width or self.max_degree != other.max_degree:
            raise BasisMismatch(
                f"({self.width}, deg {self.max_degree}) vs "
                f"({other.width}, deg {other.max_degree})"
            )

    # ----- linear structure -------------------------------------------------
    def __add__(self, other: GradedTensor) -> GradedTensor:
        if not isinstance(other, GradedTensor):
            return NotImplemented
        self._check(other)
        out = dict(self.data)
        for w, c in other.data.items():
            acc = out.get(w, 0) + c
            if _is_exact_zero(acc):
                out.pop(w, None)
            else:
                out[w] = acc
        return GradedTensor(self.width, self.max_degree, out)

    def __neg__(self) -> GradedTensor:
        return GradedTensor(
            self.width, self.max_degree, {w: -c for w, c in self.data.items()}
        )

    def __sub__(self, other: GradedTensor) -> GradedTensor:
        return self + (-other)

    def scale(self, scalar) -> GradedTensor:
        if _is_exact_zero(scalar):
            return GradedTensor.zero(self.width, self.max_degree)
        return GradedTensor(
            self.width, self.max_degree, {w: scalar * c for w, c in self.data.items()}
        )

    def __rmul__(self, scalar):
        return self.scale(scalar)

    # ----- multiplicative structure -----------------------------------------
    def __mul__(self, other):
        """Concatenation product, truncated at max_degree."""
        if not isinstance(other, GradedTensor):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        cap = self.max_degree
        for w1, c1 in self.data.items():
            room = cap - len(w1)
            for w2, c2 in other.data.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                acc = out.get(w, 0) + c1 * c2
                if _is_exact_zero(acc):
                    out.pop(w, None)
                else:
                    out[w] = acc
        return GradedTensor(self.width, cap, out)

    # ----- inspection --------------------------------------------------------
    def degree_part(self, k: int) -> dict:
        return {w: c for w, c in self.data.items() if len(w) == k}

    def homogeneous(self, k: int) -> GradedTensor:
        return GradedTensor(self.width, self.max_degree, self.degree_part(k))

    def truncated(self, new_degree: int) -> GradedTensor:
        return GradedTensor(self.width, new_degree, self.data)

    def is_zero(self) -> bool:
        return not self.data

    def norm_inf(self) -> float:
        return max((abs(c) for c in self.data.values()), default=0.0)

    def map_letters(self, images: list, new_width: int) -> GradedTensor:
        """Apply a linear substitution letter -> sum of (letter, coeff) pairs."""
        out = GradedTensor.zero(new_width, self.max_degree)
        for w, c in self.data.items():
            parts = [GradedTensor(new_width, self.max_degree, {(): c})]
            term = parts[0]
            for letter in w:
                img = GradedTensor(
                    new_width,
                    self.max_degree,
                    {(t,): s for t, s in images[letter]},
                )
                term = term * img
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return (
            self.width == other.width
            and self.max_degree == other.max_degree
            and self.data == other.data
        )

    def __repr__(self):
        terms = sorted(self.data.items(), key=lambda kv: (len(kv[0]), kv[0]))
        body = " + ".join(f"{c}*{''.join(map(str, w)) or '1'}" for w, c in terms)
        return f"GradedTensor<{self.width},{self.max_degree}>({body or '0'})"


def bracket(x: GradedTensor, y: GradedTensor) -> GradedTensor:
    """Commutator xy - yx in the truncated tensor algebra."""
    return x * y - y * x


# ----- Lyndon words and the free Lie algebra ---------------------------------


def lyndon_words(width: int, length: int) -> list[tuple[int, ...]]:
    """All Lyndon words of the exact length over {0..width-1}, lex order.

    Duval's generation algorithm.
    """
    if width < 1 or length < 1:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == length:
            out.append(tuple(w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == width - 1:
            w.pop()
    return sorted(out)


def standard_bracketing(word: tuple[int, ...]):
    """Right-normed standard factorisation of a Lyndon word, as nested pairs."""
    if len(word) == 1:
        return word[0]
    for split in range(1, len(word)):
        suffix = word[split:]
        if _is_lyndon(suffix):
            return (standard_bracketing(word[:split]), standard_bracketing(suffix))
    raise ValueError(f"{word} is not a Lyndon word")


def _is_lyndon(word: tuple[int, ...]) -> bool:
    return all(word < word[k:] for k in range(1, len(word)))


@lru_cache(maxsize=None)
def _expansion(word: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Tensor expansion of the standard bracketing of a Lyndon word."""
    tree = standard_bracketing(word)
    terms = _expand_tree(tree)
    return tuple(sorted(terms.items()))


def _expand_tree(tree) -> dict:
    if isinstance(tree, int):
        return {(tree,): Fraction(1)}
    left, right = (_expand_tree(t) for t in tree)
    out: dict = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            for w, s in ((w1 + w2, c1 * c2), (w2 + w1, -c1 * c2)):
                acc = out.get(w, 0) + s
                if acc == 0:
                    out.pop(w, None)
                else:
                    out[w] = acc
    return out


def lyndon_basis(width: int, degree: int) -> list[tuple[int, ...]]:
    """Lyndon words of the given degree; their standard bracketings expand to
    a basis of the degree component of the free Lie algebra."""
    return lyndon_words(width, degree)


def expand_lyndon(width: int, max_degree: int, word: tuple[int, ...]) -> GradedTensor:
    return GradedTensor(width, max_degree, dict(_expansion(word)))


def witt_dim(width: int, degree: int) -> int:
    """Necklace count (1/k) sum mu(e) d^(k/e): the free Lie rank in degree k.

    >>> witt_dim(2, 3)
    2
    >>> witt_dim(6, 2)
    15
    """
    total = 0
    for e in range(1, degree + 1):
        if degree % e == 0:
            total += _moebius_mu(e) * width ** (degree // e)
    assert total % degree == 0
    return total // degree


def _moebius_mu(n: int) -> int:
    mu, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            mu = -mu
        k += 1
    if n > 1:
        mu = -mu
    return mu


class NotLieElement(ValueError):
    """A tensor claimed primitive has components outside the free Lie span."""


def lie_coordinates(x: GradedTensor) -> dict[int, dict[tuple[int, ...], object]]:
    """Coordinates of a Lie tensor in the Lyndon-bracket basis, per degree.

    Uses the triangularity of expanded Lyndon brackets: the lex-least word of
    the expansion of [w] is w itself, with coefficient 1.  Exact scalars only.
    """
    out: dict[int, dict] = {}
    for k in range(1, x.max_degree + 1):
        work = x.degree_part(k)
        coords: dict = {}
        while work:
            w = min(work)
            if not _is_lyndon(w):
                raise NotLieElement(f"word {w} cannot lead a Lie element")
            c = work[w]
            coords[w] = c
            for u, s in _expansion(w):
                acc = work.get(u, 0) - c * s
                if acc == 0:
                    work.pop(u, None)
                else:
                    work[u] = acc
        if coords:
            out[k] = coords
    return out


class LieElement:
    """A free-Lie element stored as Lyndon-bracket coordinates per degree."""

    __slots__ = ("width", "max_degree", "coords")

    def __init__(self, width: int, max_degree: int, coords: dict | None = None):
        self.width = width
        self.max_degree = max_degree
        self.coords = {
            k: dict(v) for k, v in (coords or {}).items() if v and k <= max_degree
        }

    @staticmethod
    def from_tensor(x: GradedTensor) -> LieElement:
        if x.degree_part(0):
            raise NotLieElement("nonzero constant term")
        return LieElement(x.width, x.max_degree, lie_coordinates(x))

    def to_tensor(self) -> GradedTensor:
        out = GradedTensor.zero(self.width, self.max_degree)
        for k, comp in self.coords.items():
            for w, c in comp.items():
                out = out + expand_lyndon(self.width, self.max_degree, w).scale(c)
        return out

    def degree_part(self, k: int) -> dict:
        return dict(self.coords.get(k, {}))

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            self.width == other.width
            and self.max_degree == other.max_degree
            and self.coords == other.coords
        )

    def __repr__(self):
        parts = []
        for k in sorted(self.coords):
            for w, c in sorted(self.coords[k].items()):
                parts.append(f"{c}*[{''.join(map(str, w))}]")
        return f"LieElement({' + '.join(parts) or '0'})"


# ----- exp, log and the unshuffle coproduct ----------------------------------


def texp(x: GradedTensor) -> GradedTensor:
    """exp of an element with zero constant term, truncated."""
    if x.degree_part(0):
        raise ValueError("exp needs a zero constant term")
    out = GradedTensor.unit(x.width, x.max_degree)
    term = GradedTensor.unit(x.width, x.max_degree)
    for k in range(1, x.max_degree + 1):
        term = term * x
        if term.is_zero():
            break
        out = out + term.scale(Fraction(1, _factorial(k)))
    return out


def tlog(x: GradedTensor) -> GradedTensor:
    """log of 1 + u for u with zero constant term, truncated."""
    u = x - GradedTensor.unit(x.width, x.max_degree, _unit_like(x))
    if u.degree_part(0):
        raise ValueError("log needs constant term 1")
    out = GradedTensor.zero(x.width, x.max_degree)
    term = GradedTensor.unit(x.width, x.max_degree)
    for k in range(1, x.max_degree + 1):
        term = term * u
        if term.is_zero():
            break
        out = out + term.scale(Fraction((-1) ** (k + 1), k))
    return out


def _unit_like(x: GradedTensor):
    c = x.data.get((), None)
    if isinstance(c, complex) or any(isinstance(v, complex) for v in x.data.values()):
        return complex(1.0)
    return Fraction(1)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def coproduct(x: GradedTensor) -> dict:
    """Unshuffle coproduct: maps each word to all (subword, complement) splits.

    Returns a dict keyed by pairs of words.  Letters are primitive for this
    coproduct, so exponentials of Lie elements are group-like.
    """
    out: dict = {}
    for w, c in x.data.items():
        n = len(w)
        for mask in range(1 << n):
            left = tuple(w[i] for i in range(n) if mask >> i & 1)
            right = tuple(w[i] for i in range(n) if not mask >> i & 1)
            key = (left, right)
            acc = out.get(key, 0) + c
            if _is_exact_zero(acc):
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def group_like_defect(x: GradedTensor) -> float:
    """Max-abs difference between coproduct(x) and x (x) x in degrees <= D."""
    delta = coproduct(x)
    worst = 0.0
    cap = x.max_degree
    prod: dict = {}
    for w1, c1 in x.data.items():
        for w2, c2 in x.data.items():
            if len(w1) + len(w2) > cap:
                continue
            key = (w1, w2)
            prod[key] = prod.get(key, 0) + c1 * c2
    keys = set(delta) | set(prod)
    for key in keys:
        diff = delta.get(key, 0) - prod.get(key, 0)
        worst = max(worst, abs(diff))
    return float(worst)
