"""Weighted 0/1-digit number systems and canonical decomposition.

A number system here is an ordered weight vector ``W(0..n-1)`` (index 0 is
the least significant plane) in which a value is written as ``n`` binary
digits worth ``sum(d_i * W(i))``.  Classical binary uses ``W(i) = 2**i``;
the Fibonacci and prime variants grow slower, so an 8-bit pixel needs more
than 8 digits -- the extra positions act as additional "virtual" bit-planes
that can carry hidden data with far less damage per flipped bit.

Slow-growing weights make some values ambiguous: with weights ``[1, 2, 3]``
the digit strings ``100`` and ``011`` are both worth 3.  The canonical form
of a value is the lexicographically greatest digit string, read from the
most significant plane down; every other digit string for that value is
treated as invalid.  ``decompose`` computes the canonical form,
``is_canonical`` recognises it, and ``compose`` evaluates any digit string.
"""

from __future__ import annotations

from dataclasses import dataclass

# A codeword is one digit per plane, least significant plane first.
Codeword = tuple[int, ...]

MAX_BIT_DEPTH = 16


@dataclass(frozen=True)
class NumberSystem:
    """Immutable weight system plus its prefix-reachability tables.

    ``reach[i]`` is a bitmask whose bit ``v`` is set iff ``v`` equals some
    subset sum of ``weights[:i]``.  It is the exact feasibility test used by
    ``decompose`` (an interval shortcut would silently assume every prefix
    is gap-free, which is a property to verify, not to assume).

    ``max_value`` is the top of the pixel range the system is meant to
    cover; construction verifies that every value in ``[0, sum(weights)]``
    is reachable, so decomposition is total on that range.
    """

    kind: str                 # "binary" | "fib" | "prime" | "custom"
    p: int | None             # Fibonacci sequence order, None for the others
    weights: tuple[int, ...]
    max_value: int
    reach: tuple[int, ...]

    @property
    def plane_count(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        """Largest representable value, sum of all weights."""
        return sum(self.weights)

    @property
    def label(self) -> str:
        """Short spec string: "binary", "prime", "fib:<p>" or "custom"."""
        return f"fib:{self.p}" if self.kind == "fib" else self.kind


def _check_depth(k: int) -> None:
    if not 1 <= k <= MAX_BIT_DEPTH:
        raise ValueError(f"bit depth k must be in 1..{MAX_BIT_DEPTH}, got {k}")


def _build(kind: str, p: int | None, weights, max_value: int) -> NumberSystem:
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise ValueError("weight vector is empty")
    if weights[0] != 1:
        raise ValueError(f"W(0) must be 1, got {weights[0]}")
    if any(b < a for a, b in zip(weights, weights[1:])):
        raise ValueError("weights must be non-decreasing")
    total = sum(weights)
    if not 0 <= max_value <= total:
        raise ValueError(f"max_value {max_value} outside [0, {total}]")

    reach = [1]  # with no planes only 0 is reachable
    acc = 1
    for w in weights:
        acc |= acc << w
        reach.append(acc)
    if acc != (1 << (total + 1)) - 1:
        missing = next(v for v in range(total + 1) if not (acc >> v) & 1)
        raise ValueError(f"weights leave value {missing} unreachable")
    return NumberSystem(kind, p, weights, max_value, tuple(reach))


def make_binary_system(k: int) -> NumberSystem:
    """Classical base-2 system for k-bit values: weights 1, 2, 4, ..., 2^(k-1)."""
    _check_depth(k)
    return _build("binary", None, [1 << i for i in range(k)], (1 << k) - 1)


def make_prime_system(k: int) -> NumberSystem:
    """Prime-weight system sized for k-bit values.

    Weights are 1 followed by the primes 2, 3, 5, ...; planes are added
    until the weight sum reaches ``2**k - 1``, so every k-bit value is in
    range.  For k=8 this yields 15 planes (1..43) summing to 282.
    """
    _check_depth(k)
    target = (1 << k) - 1
    weights = [1]
    total = 1
    gen = _primes()
    while total < target:
        q = next(gen)
        weights.append(q)
        total += q
    return _build("prime", None, weights, target)


def make_fibonacci_system(p: int, k: int) -> NumberSystem:
    """Fibonacci p-sequence system sized for k-bit values.

    The sequence is F(n) = 1 for n <= p, F(n) = F(n-1) + F(n-p-1) after
    that; plane weights are F(1), F(2), ... (one of the duplicate leading
    1s is dropped).  Every weight not exceeding ``2**k - 1`` becomes a
    plane: that is the smallest prefix in which the greedy canonical form
    of each k-bit value is stable, i.e. would not change if further planes
    were added.  For p=1, k=8 this yields the 12 planes 1..233.
    """
    if p < 1:
        raise ValueError(f"sequence order p must be >= 1, got {p}")
    _check_depth(k)
    top = (1 << k) - 1
    seq = [1] * (p + 1)
    while seq[-1] <= top:
        seq.append(seq[-1] + seq[-p - 1])
    weights = [f for f in seq[1:] if f <= top]
    return _build("fib", p, weights, top)


def from_weights(weights, kind: str = "custom", p: int | None = None,
                 max_value: int | None = None) -> NumberSystem:
    """System over an explicit weight prefix, covering [0, sum(weights)].

    Meant for small worked examples and tests; the ``make_*`` factories are
    the normal construction path.  Weights must be non-decreasing, start at
    1 and leave no value below their sum unreachable.
    """
    weights = tuple(int(w) for w in weights)
    if max_value is None:
        max_value = sum(weights)
    return _build(kind, p, weights, max_value)


def decompose(sys: NumberSystem, value: int) -> Codeword:
    """Canonical codeword of ``value``: the lexicographically greatest digit
    string (most significant plane first) whose weighted sum is ``value``.

    Scans planes top-down and sets a digit whenever the weight fits and the
    remainder stays reachable with the planes below.
    """
    if not 0 <= value <= sys.total:
        raise ValueError(f"value {value} outside [0, {sys.total}]")
    bits = [0] * sys.plane_count
    rem = value
    for i in reversed(range(sys.plane_count)):
        w = sys.weights[i]
        if w <= rem and (sys.reach[i] >> (rem - w)) & 1:
            bits[i] = 1
            rem -= w
    assert rem == 0  # guaranteed: construction verified full reachability
    return tuple(bits)


def compose(sys: NumberSystem, codeword) -> int:
    """Weighted sum of a digit string; accepts non-canonical codewords."""
    codeword = _check_codeword(sys, codeword)
    return sum(w for w, b in zip(sys.weights, codeword) if b)


def is_canonical(sys: NumberSystem, codeword) -> bool:
    """True iff ``codeword`` is the canonical form of its own value."""
    codeword = _check_codeword(sys, codeword)
    return decompose(sys, compose(sys, codeword)) == codeword


def codebook(sys: NumberSystem, max_value: int | None = None) -> list[tuple[int, Codeword]]:
    """Table of (value, canonical codeword) for 0..max_value."""
    if max_value is None:
        max_value = sys.max_value
    if not 0 <= max_value <= sys.total:
        raise ValueError(f"max_value {max_value} outside [0, {sys.total}]")
    return [(v, decompose(sys, v)) for v in range(max_value + 1)]


def codeword_to_str(codeword) -> str:
    """Render a codeword most-significant-plane first, e.g. (0, 0, 1) -> "100"."""
    return "".join("1" if b else "0" for b in reversed(codeword))


def codeword_from_str(text: str) -> Codeword:
    """Parse a most-significant-plane-first digit string back to a codeword."""
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"codeword string must be non-empty 0/1 digits, got {text!r}")
    return tuple(int(ch) for ch in reversed(text))


def fibonacci_numbers(p: int, count: int) -> list[int]:
    """First ``count`` terms of the order-p Fibonacci sequence, F(0) onwards."""
    if p < 1:
        raise ValueError(f"sequence order p must be >= 1, got {p}")
    seq: list[int] = []
    for n in range(count):
        seq.append(1 if n <= p else seq[n - 1] + seq[n - p - 1])
    return seq


def prime_weights(count: int) -> list[int]:
    """First ``count`` prime-system weights: 1, 2, 3, 5, 7, 11, ..."""
    weights = [1]
    gen = _primes()
    while len(weights) < count:
        weights.append(next(gen))
    return weights[:count]


def _primes():
    """Yield 2, 3, 5, ... by trial division; fine at the scales used here."""
    yield 2
    found = [2]
    cand = 3
    while True:
        if all(cand % q for q in found if q * q <= cand):
            found.append(cand)
            yield cand
        cand += 2


def _check_codeword(sys: NumberSystem, codeword) -> Codeword:
    codeword = tuple(codeword)
    if len(codeword) != sys.plane_count:
        raise ValueError(
            f"codeword length {len(codeword)} != plane count {sys.plane_count}")
    if any(b not in (0, 1) for b in codeword):
        raise ValueError("codeword digits must be 0 or 1")
    return codeword
