"""Exponent reduction for modular powers, valid even when gcd(a, m) != 1.

For any integers a and m != 0, repeatedly splitting the modulus by gcds
produces a depth s and a reduced modulus m_s coprime to a such that

    a**(phi(m_s) + s) == a**s   (mod m)

This generalizes Euler's theorem: coprime inputs give s == 0 and m_s == |m|,
recovering a**phi(m) == 1 (mod m).  Folding a huge exponent N down to
s + ((N - s) mod phi(m_s)) therefore leaves the residue unchanged, which is
what makes powers with thousand-digit exponents cheap.

Sign conventions: phi(m) == phi(-m) and congruence mod m equals congruence
mod -m, so the chain is always built on |m|; gcds are taken positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import gcd, mod_pow, totient

__all__ = [
    "ReductionChain",
    "ReductionStep",
    "TheoremCheck",
    "build_chain",
    "cofactors",
    "reduce_exponent",
    "reduced_pow",
    "verify_theorem",
]


@dataclass(frozen=True, slots=True)
class ReductionStep:
    """One chain row: ``d`` divides the running modulus, ``m_rem`` is the quotient."""

    index: int
    d: int
    m_rem: int


@dataclass(frozen=True, slots=True)
class ReductionChain:
    """Full gcd chain for ``(a, m)``, ending at the first step with ``d == 1``.

    ``s`` is the index of that terminal step, ``m_s`` its modulus, and
    ``phi_ms = phi(m_s)``.  ``a0 = a_input / d_0`` is the part of ``a``
    coprime to ``m_s``.  Instances are immutable and safe to share between
    threads.
    """

    a_input: int
    m_input: int
    m_norm: int
    steps: tuple[ReductionStep, ...]
    s: int
    m_s: int
    phi_ms: int
    a0: int


@dataclass(frozen=True, slots=True)
class TheoremCheck:
    """Witness for one congruence check: both sides evaluated directly.

    ``lhs = a**(phi_ms + s) mod |m|`` and ``rhs = a**s mod |m|``; ``ok`` is
    their equality.  A False ``ok`` indicates an implementation bug, so the
    full chain is carried for the report.
    """

    ok: bool
    a: int
    m: int
    s: int
    m_s: int
    phi_ms: int
    lhs: int
    rhs: int
    chain: ReductionChain

    def __bool__(self) -> bool:
        return self.ok


def build_chain(a: int, m: int) -> ReductionChain:
    """Run the gcd-splitting iteration for ``(a, m)``, ``m != 0``.

    Starting from ``A = a``, ``M = |m|``: take ``d = gcd(A, M)`` and
    ``M' = M / d``; stop at the first ``d == 1`` with ``s`` its step index
    and ``m_s = M'``, else continue from ``A = d``, ``M = M'``.  The chain
    beyond ``a_input``/``a0`` depends on ``a`` only through ``gcd(|a|, |m|)``.
    """
    if m == 0:
        raise ValueError("modulus must be nonzero")
    m_norm = abs(m)
    steps: list[ReductionStep] = []
    current_a, current_m, i = a, m_norm, 0
    while True:
        d = gcd(current_a, current_m)
        m_rem = current_m // d
        steps.append(ReductionStep(i, d, m_rem))
        if d == 1:
            break
        current_a, current_m, i = d, m_rem, i + 1
    m_s = steps[-1].m_rem
    return ReductionChain(
        a_input=a,
        m_input=m,
        m_norm=m_norm,
        steps=tuple(steps),
        s=i,
        m_s=m_s,
        phi_ms=totient(m_s),
        a0=a // steps[0].d,
    )


def cofactors(chain: ReductionChain) -> list[int]:
    """Per-step quotients ``c_i = d_i / d_{i+1}`` for ``i < s``.

    They certify the chain structurally: ``m_norm == m_s * prod(c_i**(i+1))``.
    Empty when ``s == 0``.
    """
    steps = chain.steps
    return [steps[i].d // steps[i + 1].d for i in range(chain.s)]


def verify_theorem(a: int, m: int) -> TheoremCheck:
    """Check ``a**(phi(m_s)+s) == a**s (mod |m|)`` by direct evaluation.

    Holds for every ``a`` and ``m != 0``; a falsy result means the library
    itself is broken.
    """
    chain = build_chain(a, m)
    lhs = mod_pow(a, chain.phi_ms + chain.s, chain.m_norm)
    rhs = mod_pow(a, chain.s, chain.m_norm)
    return TheoremCheck(
        ok=lhs == rhs,
        a=a,
        m=m,
        s=chain.s,
        m_s=chain.m_s,
        phi_ms=chain.phi_ms,
        lhs=lhs,
        rhs=rhs,
        chain=chain,
    )


def reduce_exponent(chain: ReductionChain, exponent: int) -> int:
    """Fold ``exponent`` to an equivalent one below ``s + phi(m_s)``.

    ``a**N == a**E (mod |m|)`` for the returned ``E``: exponents at least
    ``s`` reduce to ``s + ((N - s) mod phi(m_s))``; smaller ones pass through
    unchanged (they are below ``log2(|m|)``, so direct evaluation is cheap).
    """
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if exponent < chain.s:
        return exponent
    return chain.s + (exponent - chain.s) % chain.phi_ms


def reduced_pow(a: int, exponent: int, m: int) -> int:
    """``a**exponent mod |m|`` in ``[0, |m|)`` via exponent folding.

    Agrees with naive modular exponentiation on all inputs, but the work is
    bounded by ``|m|`` rather than the exponent, so decimal exponents with
    thousands of digits are fine.
    """
    chain = build_chain(a, m)
    reduced = reduce_exponent(chain, exponent)
    return mod_pow(a % chain.m_norm, reduced, chain.m_norm)
