"""Nonnegative scalars carried as base-10 logarithms.

Fleet sizes, qubit totals and wall-plug powers in the sweeps reach 1e80 and
beyond, so every such quantity travels as a :class:`LogQuantity`.  A linear
float shadow is kept alongside whenever it is finite; products of exact
small integers therefore stay exact (``2623 * 612336`` does not pick up
``10**log10`` round-off).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from groverfleet.errors import InvalidInputError

LOG10_2 = math.log10(2.0)

# Ceilings are only meaningful while the value is an exactly representable integer.
EXACT_CEIL_LOG10 = 15.0
# Serialized records drop the linear field at and above this magnitude.
LINEAR_EMIT_LOG10 = 300.0

Number = Union[int, float]


@dataclass(frozen=True)
class LogQuantity:
    """A nonnegative quantity stored as ``log10`` (``None`` marks exact zero)."""

    log10_value: float | None = None
    linear: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.log10_value is not None and not math.isfinite(self.log10_value):
            raise InvalidInputError(f"log10 value must be finite, got {self.log10_value!r}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> LogQuantity:
        return cls(None, 0.0)

    @classmethod
    def one(cls) -> LogQuantity:
        return cls(0.0, 1.0)

    @classmethod
    def from_value(cls, x: Number) -> LogQuantity:
        if isinstance(x, LogQuantity):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            if x < 0:
                raise InvalidInputError(f"negative quantity {x}")
            if x == 0:
                return cls.zero()
            lin = float(x) if x.bit_length() < 1000 else None
            return cls(math.log10(x), lin)
        x = float(x)
        if math.isnan(x) or math.isinf(x) or x < 0:
            raise InvalidInputError(f"quantity must be finite and nonnegative, got {x!r}")
        if x == 0.0:
            return cls.zero()
        return cls(math.log10(x), x)

    @classmethod
    def from_log10(cls, log10_value: float) -> LogQuantity:
        if not math.isfinite(log10_value):
            raise InvalidInputError(f"log10 value must be finite, got {log10_value!r}")
        lin = 10.0**log10_value if log10_value < 307.0 else None
        return cls(float(log10_value), lin)

    @classmethod
    def from_log2(cls, exponent: float) -> LogQuantity:
        return lq_from_log2(exponent)

    # -- views --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.log10_value is None

    @property
    def log2(self) -> float:
        if self.log10_value is None:
            return -math.inf
        return self.log10_value / LOG10_2

    @property
    def log10(self) -> float:
        return -math.inf if self.log10_value is None else self.log10_value

    @property
    def value(self) -> float:
        """Linear value; raises :class:`OverflowError` beyond float range."""
        if self.linear is not None:
            return self.linear
        if self.log10_value is None:
            return 0.0
        if self.log10_value > 308.25:
            raise OverflowError(f"10**{self.log10_value:.3f} exceeds float range")
        return 10.0**self.log10_value

    def __float__(self) -> float:
        return self.value

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: LogQuantity | Number) -> LogQuantity:
        return lq_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: LogQuantity | Number) -> LogQuantity:
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by a zero LogQuantity")
        if self.is_zero:
            return LogQuantity.zero()
        lin = _finite_or_none(self.linear, other.linear, lambda a, b: a / b)
        return LogQuantity(self.log10_value - other.log10_value, lin)

    def __add__(self, other: LogQuantity | Number) -> LogQuantity:
        other = _coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        hi, lo = (self, other) if self.log10_value >= other.log10_value else (other, self)
        log_sum = hi.log10_value + math.log10(1.0 + 10.0 ** (lo.log10_value - hi.log10_value))
        lin = _finite_or_none(self.linear, other.linear, lambda a, b: a + b)
        return LogQuantity(log_sum, lin)

    __radd__ = __add__

    def ceil(self) -> LogQuantity:
        """Integer ceiling while below 1e15; identity above."""
        if self.is_zero or self.log10_value >= EXACT_CEIL_LOG10:
            return self
        return LogQuantity.from_value(math.ceil(self.value))

    def floor(self) -> LogQuantity:
        if self.is_zero or self.log10_value >= EXACT_CEIL_LOG10:
            return self
        return LogQuantity.from_value(math.floor(self.value))

    # -- ordering -----------------------------------------------------------

    def _key(self, other: LogQuantity | Number) -> tuple[float, float]:
        return self.log10, _coerce(other).log10

    def __lt__(self, other: LogQuantity | Number) -> bool:
        a, b = self._key(other)
        return a < b

    def __le__(self, other: LogQuantity | Number) -> bool:
        a, b = self._key(other)
        return a <= b

    def __gt__(self, other: LogQuantity | Number) -> bool:
        a, b = self._key(other)
        return a > b

    def __ge__(self, other: LogQuantity | Number) -> bool:
        a, b = self._key(other)
        return a >= b

    def to_dict(self) -> dict[str, float | None]:
        """Serializable form: always ``log10``, plus ``value`` below 1e300."""
        if self.is_zero:
            return {"log10": None, "value": 0.0}
        out: dict[str, float | None] = {"log10": self.log10_value}
        if self.log10_value < LINEAR_EMIT_LOG10:
            out["value"] = self.value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> LogQuantity:
        if data.get("log10") is None:
            return cls.zero()
        if "value" in data and data["value"] is not None:
            return cls(float(data["log10"]), float(data["value"]))
        return cls.from_log10(float(data["log10"]))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LogQuantity(0)"
        if self.log10_value < 15:
            return f"LogQuantity({self.value:.6g})"
        return f"LogQuantity(10**{self.log10_value:.4f})"


def _coerce(x: LogQuantity | Number) -> LogQuantity:
    return x if isinstance(x, LogQuantity) else LogQuantity.from_value(x)


def _finite_or_none(a, b, op) -> float | None:
    if a is None or b is None:
        return None
    try:
        r = op(a, b)
    except (OverflowError, ZeroDivisionError):
        return None
    if not math.isfinite(r) or r == 0.0:
        return None
    return r


def lq_from_log2(exponent: float) -> LogQuantity:
    """Return ``2**exponent``; the linear shadow is exact for integer exponents."""
    if not math.isfinite(exponent):
        raise InvalidInputError(f"exponent must be finite, got {exponent!r}")
    try:
        lin = 2.0**exponent
    except OverflowError:
        lin = None
    if lin is not None and (math.isinf(lin) or lin == 0.0):
        lin = None
    return LogQuantity(exponent * LOG10_2, lin)


def lq_mul(a: LogQuantity, b: LogQuantity) -> LogQuantity:
    if a.is_zero or b.is_zero:
        return LogQuantity.zero()
    lin = _finite_or_none(a.linear, b.linear, lambda x, y: x * y)
    return LogQuantity(a.log10_value + b.log10_value, lin)


def lq_ratio_of_logs(numerator_ln: float, denominator_ln: float) -> LogQuantity:
    """Positive ratio of two natural logs of probabilities in (0, 1).

    Both arguments must be strictly negative; a nonnegative value means the
    underlying probability was 0 or 1, which has no finite fleet ratio.
    """
    for name, v in (("numerator", numerator_ln), ("denominator", denominator_ln)):
        if not math.isfinite(v) or v >= 0.0:
            raise InvalidInputError(f"{name} log must be finite and < 0, got {v!r}")
    return LogQuantity(
        math.log10(-numerator_ln) - math.log10(-denominator_ln),
        numerator_ln / denominator_ln,
    )


def lq_sum(values) -> LogQuantity:
    total = LogQuantity.zero()
    for v in values:
        total = total + v
    return total
