"""N-qubit Pauli observables in the binary symplectic representation.

An operator is stored as ``i**phase_exp * X**x * Z**z`` where ``X**x`` and
``Z**z`` are tensor products and each qubit's factor is taken X-first. Qubit
0 is the leftmost letter of the textual form and the most significant bit of
``x`` and ``z``, so ``x`` printed in binary reads like the letter string.

Only the signs of products of commuting Hermitian sets are exposed to the
rest of the package, so the X-before-Z convention never leaks out.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from . import gf2
from .errors import (
    PauliParseError,
    ProductNotIdentity,
    ProductNotReal,
    QubitCountMismatch,
)

_LETTERS = "IXZY"  # index = x + 2*z


@dataclass(frozen=True)
class PauliObservable:
    n_qubits: int
    phase_exp: int
    x: int
    z: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        limit = 1 << self.n_qubits
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bit vectors do not fit in n_qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def n_y(self) -> int:
        return (self.x & self.z).bit_count()

    @property
    def is_hermitian(self) -> bool:
        return (self.phase_exp - self.n_y) % 2 == 0

    @property
    def is_identity(self) -> bool:
        """True for any multiple of the identity (+-I, +-iI)."""
        return self.x == 0 and self.z == 0

    @property
    def sign(self) -> int:
        """+1 or -1 relative to the bare letter string.

        Only defined for Hermitian operators.
        """
        rel = (self.phase_exp - self.n_y) % 4
        if rel == 0:
            return 1
        if rel == 2:
            return -1
        raise ValueError(f"{self!r} is not Hermitian")

    @property
    def vector(self) -> int:
        """The ``(x | z)`` symplectic vector packed as one ``2n``-bit int."""
        return (self.x << self.n_qubits) | self.z

    @property
    def letters(self) -> str:
        n = self.n_qubits
        return "".join(
            _LETTERS[((self.x >> (n - 1 - q)) & 1) + 2 * ((self.z >> (n - 1 - q)) & 1)]
            for q in range(n)
        )

    def unsigned(self) -> PauliObservable:
        """The +1 representative with the same symplectic part."""
        return PauliObservable(self.n_qubits, self.n_y, self.x, self.z)

    def __neg__(self) -> PauliObservable:
        return PauliObservable(self.n_qubits, self.phase_exp + 2, self.x, self.z)

    def __mul__(self, other: PauliObservable) -> PauliObservable:
        return multiply(self, other)

    def commutes_with(self, other: PauliObservable) -> bool:
        return commutes(self, other)

    def __str__(self) -> str:
        return to_string(self)


# A Hermitian PauliObservable already carries its sign; the alias names the
# role (elements of signed stabilizer groups) rather than a separate type.
SignedPauli = PauliObservable


def identity(n_qubits: int) -> PauliObservable:
    return PauliObservable(n_qubits, 0, 0, 0)


def parse(text: str) -> PauliObservable:
    """Parse a letter string such as ``"XYIZZ"``.

    A single leading ``+`` or ``-`` is accepted so that signed observables
    round-trip through :func:`to_string`.
    """
    if not isinstance(text, str):
        raise PauliParseError(f"expected a string, got {type(text).__name__}")
    body = text
    extra = 0
    if body and body[0] in "+-":
        extra = 2 if body[0] == "-" else 0
        body = body[1:]
    if not body:
        raise PauliParseError("empty Pauli string")
    x = z = 0
    n_y = 0
    for ch in body:
        if ch not in "IXYZ":
            raise PauliParseError(f"invalid Pauli letter {ch!r} in {text!r}")
        x = (x << 1) | (ch in "XY")
        z = (z << 1) | (ch in "YZ")
        n_y += ch == "Y"
    return PauliObservable(len(body), n_y + extra, x, z)


def to_string(p: PauliObservable) -> str:
    """Letter string, prefixed with ``-`` (or ``i``/``-i``) when needed."""
    rel = (p.phase_exp - p.n_y) % 4
    prefix = ("", "i", "-", "-i")[rel]
    return prefix + p.letters


def _check_same_size(a: PauliObservable, b: PauliObservable):
    if a.n_qubits != b.n_qubits:
        raise QubitCountMismatch(f"{a.n_qubits} vs {b.n_qubits} qubits")


def multiply(a: PauliObservable, b: PauliObservable) -> PauliObservable:
    """Exact operator product ``a @ b``."""
    _check_same_size(a, b)
    # Z^za X^xb = (-1)^(za.xb) X^xb Z^za; X and Z square to one so no carries.
    crossings = (a.z & b.x).bit_count()
    return PauliObservable(
        a.n_qubits,
        a.phase_exp + b.phase_exp + 2 * crossings,
        a.x ^ b.x,
        a.z ^ b.z,
    )


def symplectic_product(a: PauliObservable, b: PauliObservable) -> int:
    _check_same_size(a, b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


def commutes(a: PauliObservable, b: PauliObservable) -> bool:
    return symplectic_product(a, b) == 0


def product(observables: Iterable[PauliObservable]) -> PauliObservable:
    it = iter(observables)
    try:
        out = next(it)
    except StopIteration:
        raise ValueError("product of an empty sequence") from None
    for p in it:
        out = multiply(out, p)
    return out


def product_sign(observables: Sequence[PauliObservable]) -> int:
    """Return +1 or -1 when the ordered product is +I or -I."""
    prod = product(observables)
    if not prod.is_identity:
        raise ProductNotIdentity(f"product is {to_string(prod)}, not +-I")
    if prod.phase_exp % 2:
        raise ProductNotReal("product is an imaginary multiple of I")
    return 1 if prod.phase_exp == 0 else -1


def gf2_rank(observables: Sequence[PauliObservable]) -> int:
    return gf2.rank([p.vector for p in observables])


class Dependency(NamedTuple):
    """``target == sign * product(observables[i] for i in indices)``."""

    indices: tuple[int, ...]
    sign: int


def dependency_coefficients(
    observables: Sequence[PauliObservable], target_index: int
) -> Dependency | None:
    """Express one observable as a signed product of the others.

    Returns ``None`` when the target is independent of the rest. The sign is
    that of ``product(subset) * target``; it is only meaningful when the
    subset and the target commute, otherwise ``ProductNotReal`` is raised.
    """
    others = [j for j in range(len(observables)) if j != target_index]
    combo = gf2.solve([observables[j].vector for j in others], observables[target_index].vector)
    if combo is None:
        return None
    indices = tuple(others[k] for k in gf2.bits(combo))
    members = [observables[j] for j in indices] + [observables[target_index]]
    return Dependency(indices, product_sign(members))


def restrict(p: PauliObservable, keep: Iterable[int]) -> PauliObservable:
    """Keep only the letters at the (0-based) qubit positions in ``keep``.

    The sign is dropped: the result is the bare letter string.
    """
    positions = sorted(set(keep))
    if not positions:
        raise ValueError("restrict needs at least one qubit")
    if positions[0] < 0 or positions[-1] >= p.n_qubits:
        raise IndexError(f"qubit index out of range for {p.n_qubits} qubits")
    letters = p.letters
    return parse("".join(letters[q] for q in positions))
