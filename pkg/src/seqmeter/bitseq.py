"""Binary sequences as packed integers, plus the on-disk text format.

Bits are packed little-endian into a single Python int: bit i of ``data``
is s_i.  CPython stores big ints as arrays of machine words, so XOR, AND
and ``int.bit_count()`` on ``data`` are word-parallel; every correlation
sum and recurrence check downstream runs on these packed words instead of
per-bit loops.

File format: an optional first line ``period=T``, then the characters
'0' and '1' with arbitrary whitespace.  The writer emits 64 characters
per line.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

BITS_PER_LINE = 64


def mask(n: int) -> int:
    """Bitmask with the n low bits set."""
    return (1 << n) - 1


class BitSequence:
    """Immutable binary word with an optional declared period.

    The period is caller-supplied metadata, never inferred.  Declaring it
    asserts s[i+T] == s[i] wherever both indices are in range; construction
    fails if the stored bits contradict the declaration.
    """

    __slots__ = ("data", "n", "period")

    def __init__(self, bits: Iterable[int], period: int | None = None):
        data = 0
        n = 0
        for b in bits:
            if b == 1:
                data |= 1 << n
            elif b != 0:
                raise ValueError(f"bit {n} is {b!r}, expected 0 or 1")
            n += 1
        self._init(data, n, period)

    def _init(self, data: int, n: int, period: int | None) -> None:
        if period is not None:
            if period < 1:
                raise ValueError(f"period must be >= 1, got {period}")
            if n > period and ((data >> period) ^ data) & mask(n - period):
                raise ValueError(
                    f"declared period {period} is inconsistent with the stored bits"
                )
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "period", period)

    @classmethod
    def from_int(cls, data: int, n: int, period: int | None = None) -> "BitSequence":
        """Wrap an already packed word (bit i = s_i) without re-iterating bits."""
        if n < 0:
            raise ValueError("length must be >= 0")
        if data < 0 or data >> n:
            raise ValueError("data has bits beyond the stated length")
        self = cls.__new__(cls)
        self._init(data, n, period)
        return self

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitSequence):
            return NotImplemented
        return (self.data, self.n, self.period) == (other.data, other.n, other.period)

    def __hash__(self) -> int:
        return hash((self.data, self.n, self.period))

    def __repr__(self) -> str:
        head = "".join(str(self.bit(i)) for i in range(min(self.n, 32)))
        tail = "..." if self.n > 32 else ""
        per = f", period={self.period}" if self.period is not None else ""
        return f"BitSequence({head}{tail}, n={self.n}{per})"

    def __iter__(self) -> Iterator[int]:
        d = self.data
        for _ in range(self.n):
            yield d & 1
            d >>= 1

    def __setattr__(self, name, value):
        raise AttributeError("BitSequence is immutable")

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def bit(self, i: int) -> int:
        """s_i, reducing i modulo the declared period when one exists."""
        if 0 <= i < self.n:
            return (self.data >> i) & 1
        if self.period is None:
            raise IndexError(f"index {i} out of range for length {self.n} and no declared period")
        i %= self.period
        if i >= self.n:
            raise IndexError(f"index {i} (mod {self.period}) beyond stored length {self.n}")
        return (self.data >> i) & 1

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"index {i} out of range for length {self.n}")
        return (self.data >> i) & 1

    def sign_at(self, i: int) -> int:
        """(-1)**s_i as a plain int, with the same wrapping rule as bit()."""
        return 1 - 2 * self.bit(i)

    def prefix(self, n: int) -> "BitSequence":
        """First n bits, keeping the declared period."""
        if not 0 <= n <= self.n:
            raise ValueError(f"prefix length {n} out of range 0..{self.n}")
        return BitSequence.from_int(self.data & mask(n), n, self.period)

    def weight(self) -> int:
        return self.data.bit_count()

    def minimal_period(self) -> int:
        """Smallest p >= 1 with s[i+p] == s[i] for every i with i+p < n.

        Exact scan over all candidate p.  For a purely periodic sequence
        rendered over at least two full periods this equals the minimal
        period of the infinite sequence.
        """
        if self.n == 0:
            return 0
        d, n = self.data, self.n
        for p in range(1, n):
            if not ((d >> p) ^ d) & mask(n - p):
                return p
        return n

    def to01(self) -> str:
        d = self.data
        return "".join("1" if (d >> i) & 1 else "0" for i in range(self.n))


def loads(text: str) -> BitSequence:
    """Parse the text sequence format."""
    period = None
    body_start = 0
    lines = text.splitlines(keepends=True)
    for line in lines:
        stripped = line.strip()
        if not stripped:
            body_start += len(line)
            continue
        if stripped.startswith("period="):
            try:
                period = int(stripped[len("period="):])
            except ValueError:
                raise ValueError(f"bad period line: {stripped!r}") from None
            body_start += len(line)
        break
    data = 0
    n = 0
    for pos, ch in enumerate(text[body_start:]):
        if ch == "1":
            data |= 1 << n
            n += 1
        elif ch == "0":
            n += 1
        elif not ch.isspace():
            raise ValueError(f"invalid character {ch!r} at offset {body_start + pos}")
    return BitSequence.from_int(data, n, period)


def dumps(seq: BitSequence) -> str:
    out = []
    if seq.period is not None:
        out.append(f"period={seq.period}\n")
    s = seq.to01()
    for i in range(0, len(s), BITS_PER_LINE):
        out.append(s[i : i + BITS_PER_LINE])
        out.append("\n")
    return "".join(out)


def load(path: str | Path) -> BitSequence:
    return loads(Path(path).read_text())


def save(seq: BitSequence, path: str | Path) -> None:
    Path(path).write_text(dumps(seq))


@dataclass(frozen=True)
class ShiftSet:
    """Strictly increasing non-negative shifts d_1 < d_2 < ... < d_k."""

    shifts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(self.shifts))
        if not self.shifts:
            raise ValueError("shift set must be non-empty")
        if self.shifts[0] < 0:
            raise ValueError("shifts must be non-negative")
        if any(a >= b for a, b in zip(self.shifts, self.shifts[1:])):
            raise ValueError(f"shifts must be strictly increasing, got {self.shifts}")

    @property
    def order(self) -> int:
        return len(self.shifts)

    def __iter__(self):
        return iter(self.shifts)

    def __len__(self):
        return len(self.shifts)


def as_shifts(shifts: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize a shift iterable to a tuple."""
    return ShiftSet(tuple(shifts)).shifts
