"""Lazily evaluated linear forms on the bar-word algebra.

A Form is a node in an expression DAG.  Evaluation at a bar-word is exact
(Fraction) and memoized per node, so repeated evaluation of shared
subexpressions costs nothing beyond the first pass.  Nodes are immutable
once built; the only mutable state is the per-node memo dict, which is an
idempotent cache, so concurrent readers are safe.

Conventions, with e the counit (1 on the unit bar-word, else 0):

  * convolution f * g pairs f (x) g over the full coproduct;
  * the half convolutions pair over the corresponding unital half
    coproducts, which realizes  f < e = f  and  e > f = f  termwise
    (on the unit the halves evaluate to f(1) resp. g(1) when the other
    operand is literally the counit node, else to 0; never an error);
  * exp/log variants are finite sums at every input because their base
    forms vanish on the unit, so no truncation parameter appears here.

Preconditions are checked at construction: the exponentials require an
infinitesimal operand (vanishing on the unit), the logarithms and the
antipode-style inverse require a unital one (value 1 on the unit).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .coproducts import coproduct, coproduct_left, coproduct_right
from .errors import IncompleteTableError, InvalidFormError
from .words import UNIT, BarWord, Word, barword_str, lift

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Form:
    """Base node: a linear form evaluated exactly on bar-words."""

    __slots__ = ("_memo",)

    def __init__(self):
        self._memo: dict[BarWord, Fraction] = {}

    def eval(self, u: BarWord) -> Fraction:
        memo = self._memo
        value = memo.get(u)
        if value is None:
            value = self._eval(u)
            memo[u] = value
        return value

    def eval_word(self, w: Word) -> Fraction:
        return self.eval(lift(w))

    def _eval(self, u: BarWord) -> Fraction:
        raise NotImplementedError

    def __add__(self, other: "Form") -> "Form":
        return Add(self, other)

    def __sub__(self, other: "Form") -> "Form":
        return Add(self, Scale(Fraction(-1), other))

    def __neg__(self) -> "Form":
        return Scale(Fraction(-1), self)

    def __rmul__(self, c) -> "Form":
        return Scale(Fraction(c), self)


class Counit(Form):
    """e: 1 on the unit bar-word, 0 elsewhere."""

    __slots__ = ()

    def _eval(self, u):
        return _ONE if u.is_unit else _ZERO


COUNIT = Counit()


class CharacterFromWords(Form):
    """The multiplicative extension of a word table; 1 on the unit.

    Missing words raise IncompleteTableError: a table never zero-fills.
    """

    __slots__ = ("table",)

    def __init__(self, table):
        super().__init__()
        self.table = dict(table)

    def _eval(self, u):
        out = _ONE
        for w in u.factors:
            try:
                out *= self.table[w]
            except KeyError:
                raise IncompleteTableError(
                    f"no table value for the word {barword_str(lift(w))}", word=w
                ) from None
        return out


class InfinitesimalFromWords(Form):
    """A word table extended by zero on the unit and on bar products."""

    __slots__ = ("table",)

    def __init__(self, table):
        super().__init__()
        self.table = dict(table)

    def _eval(self, u):
        if len(u.factors) != 1:
            return _ZERO
        try:
            return Fraction(self.table[u.factors[0]])
        except KeyError:
            raise IncompleteTableError(
                f"no table value for the word {barword_str(u)}", word=u.factors[0]
            ) from None


class Add(Form):
    __slots__ = ("f", "g")

    def __init__(self, f: Form, g: Form):
        super().__init__()
        self.f = f
        self.g = g

    def _eval(self, u):
        return self.f.eval(u) + self.g.eval(u)


class Scale(Form):
    __slots__ = ("c", "f")

    def __init__(self, c, f: Form):
        super().__init__()
        self.c = Fraction(c)
        self.f = f

    def _eval(self, u):
        return self.c * self.f.eval(u)


class ComposeP(Form):
    """f composed with the kill-the-unit projector: 0 on the unit, else f."""

    __slots__ = ("f",)

    def __init__(self, f: Form):
        super().__init__()
        self.f = f

    def _eval(self, u):
        return _ZERO if u.is_unit else self.f.eval(u)


CONV = "conv"
LEFT = "left"
RIGHT = "right"

_SPLITTERS = {CONV: coproduct, LEFT: coproduct_left, RIGHT: coproduct_right}


class Conv(Form):
    """Convolution-type product of two forms: full, left half, or right half."""

    __slots__ = ("kind", "f", "g")

    def __init__(self, kind: str, f: Form, g: Form):
        if kind not in _SPLITTERS:
            raise ValueError(f"unknown convolution kind {kind!r}")
        super().__init__()
        self.kind = kind
        self.f = f
        self.g = g

    def _eval(self, u):
        if u.is_unit:
            if self.kind == CONV:
                return self.f.eval(u) * self.g.eval(u)
            if self.kind == LEFT:
                return self.f.eval(u) if isinstance(self.g, Counit) else _ZERO
            return self.g.eval(u) if isinstance(self.f, Counit) else _ZERO
        f, g = self.f, self.g
        total = _ZERO
        for (x, y), c in _SPLITTERS[self.kind](u).items():
            fx = f.eval(x)
            if fx:
                gy = g.eval(y)
                if gy:
                    total += c * fx * gy
        return total


def conv(f: Form, g: Form) -> Form:
    return Conv(CONV, f, g)


def half_left(f: Form, g: Form) -> Form:
    return Conv(LEFT, f, g)


def half_right(f: Form, g: Form) -> Form:
    return Conv(RIGHT, f, g)


def scale(c, f: Form) -> Form:
    return Scale(c, f)


def _require_infinitesimal(f: Form, what: str) -> None:
    if f.eval(UNIT) != 0:
        raise InvalidFormError(f"{what} requires a form vanishing on the unit")


def _require_unital(f: Form, what: str) -> None:
    if f.eval(UNIT) != 1:
        raise InvalidFormError(f"{what} requires a form with value 1 on the unit")


class _PowerSeries(Form):
    """Sum of coeff(j) * base^{*j} over j = 0..degree(u).

    The base must vanish on the unit, so base^{*j} vanishes on inputs of
    degree below j and the sum is finite without any cutoff.
    """

    __slots__ = ("base", "_coeff", "_powers")

    def __init__(self, base: Form, coeff):
        super().__init__()
        self.base = base
        self._coeff = coeff
        self._powers: list[Form] = [COUNIT]

    def _power(self, j: int) -> Form:
        powers = self._powers
        while len(powers) <= j:
            powers.append(Conv(CONV, self.base, powers[-1]))
        return powers[j]

    def _eval(self, u):
        total = _ZERO
        for j in range(u.degree + 1):
            c = self._coeff(j)
            if c:
                value = self._power(j).eval(u)
                if value:
                    total += c * value
        return total


class ExpStar(_PowerSeries):
    """Convolution exponential of an infinitesimal form."""

    __slots__ = ()

    def __init__(self, alpha: Form):
        _require_infinitesimal(alpha, "exp_star")
        super().__init__(alpha, lambda j: Fraction(1, factorial(j)))


class LogStar(_PowerSeries):
    """Convolution logarithm of a unital form."""

    __slots__ = ()

    def __init__(self, phi: Form):
        _require_unital(phi, "log_star")
        super().__init__(
            ComposeP(phi),
            lambda j: _ZERO if j == 0 else Fraction((-1) ** (j - 1), j),
        )


class CharInverse(_PowerSeries):
    """Convolution inverse of a unital form, as the geometric antipode series."""

    __slots__ = ()

    def __init__(self, phi: Form):
        _require_unital(phi, "char_inverse")
        super().__init__(ComposeP(phi), lambda j: Fraction((-1) ** j))


class ExpLeft(Form):
    """The unique X with X = e + alpha < X, for infinitesimal alpha."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: Form):
        _require_infinitesimal(alpha, "exp_left")
        super().__init__()
        self.alpha = alpha

    def _eval(self, u):
        if u.is_unit:
            return _ONE
        alpha = self.alpha
        total = _ZERO
        # Left legs carry position 1, so right legs always drop in degree
        # and the recursion bottoms out at the unit.
        for (x, y), c in coproduct_left(u).items():
            ax = alpha.eval(x)
            if ax:
                total += c * ax * self.eval(y)
        return total


class ExpRight(Form):
    """The unique Z with Z = e + Z > alpha, for infinitesimal alpha."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: Form):
        _require_infinitesimal(alpha, "exp_right")
        super().__init__()
        self.alpha = alpha

    def _eval(self, u):
        if u.is_unit:
            return _ONE
        alpha = self.alpha
        total = _ZERO
        # Right legs carry position 1 on the complement side, so left legs
        # always drop in degree.
        for (x, y), c in coproduct_right(u).items():
            ay = alpha.eval(y)
            if ay:
                total += c * self.eval(x) * ay
        return total


def exp_star(alpha: Form) -> Form:
    return ExpStar(alpha)


def log_star(phi: Form) -> Form:
    return LogStar(phi)


def char_inverse(phi: Form) -> Form:
    return CharInverse(phi)


def exp_left(alpha: Form) -> Form:
    return ExpLeft(alpha)


def exp_right(alpha: Form) -> Form:
    return ExpRight(alpha)


def log_left(phi: Form) -> Form:
    """The fixed-point logarithm for the left half: (phi - e) < phi^{-1}."""
    return Conv(LEFT, Add(phi, Scale(Fraction(-1), COUNIT)), CharInverse(phi))


def log_right(phi: Form) -> Form:
    """The fixed-point logarithm for the right half: phi^{-1} > (phi - e)."""
    return Conv(RIGHT, CharInverse(phi), Add(phi, Scale(Fraction(-1), COUNIT)))
