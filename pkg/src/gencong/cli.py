"""Command-line front end: reduce, pow, totient, verify, selftest.

Operands are decimal integer strings of arbitrary length (optional leading
minus).  Exit codes: 0 success, 1 usage/parse error, 2 domain error (zero
modulus, nonpositive totient argument), 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Iterable

from .arith import factorize, totient
from .reduction import (
    ReductionChain,
    TheoremCheck,
    build_chain,
    mod_pow,
    reduce_exponent,
    verify_theorem,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAILED = 3

#: verify refuses range products above this unless --cap raises it.
DEFAULT_VERIFY_CAP = 10**6

_INTEGER_RE = re.compile(r"-?[0-9]+")
_RANGE_RE = re.compile(r"(-?[0-9]+)\.\.(-?[0-9]+)")


class CliError(Exception):
    """Command failure carrying its process exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True, slots=True)
class CliRequest:
    """One parsed invocation: the command, its operands, and its flags."""

    command: str
    operands: tuple[str, ...] = ()
    json_output: bool = False
    trace: bool = False
    a_range: str | None = None
    m_range: str | None = None
    cap: int = DEFAULT_VERIFY_CAP


@dataclass(frozen=True, slots=True)
class PowResult:
    """A solved modular power a^exponent mod m with its reduction chain."""

    a: int
    exponent: int
    m: int
    chain: ReductionChain
    reduced_exponent: int
    residue: int

    @property
    def s(self) -> int:
        return self.chain.s

    @property
    def m_s(self) -> int:
        return self.chain.m_s

    @property
    def phi_ms(self) -> int:
        return self.chain.phi_ms


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with code 2
        raise CliError(EXIT_USAGE, message)


def _parse_int(text: str, name: str) -> int:
    if not _INTEGER_RE.fullmatch(text):
        raise CliError(EXIT_USAGE, f"{name} must be a decimal integer, got {text!r}")
    return int(text)


def _parse_modulus(text: str) -> int:
    m = _parse_int(text, "m")
    if m == 0:
        raise CliError(EXIT_DOMAIN, "modulus must be nonzero (the congruence requires m != 0)")
    return m


def _parse_range(text: str, flag: str) -> range:
    match = _RANGE_RE.fullmatch(text)
    if not match:
        raise CliError(EXIT_USAGE, f"{flag} expects LO..HI, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise CliError(EXIT_USAGE, f"{flag} range {text} is empty")
    return range(lo, hi + 1)


def solve_pow(a: int, exponent: int, m: int) -> PowResult:
    """Evaluate a^exponent mod m through the reduction chain."""
    chain = build_chain(a, m)
    reduced = reduce_exponent(chain, exponent)
    residue = mod_pow(a % chain.m_norm, reduced, chain.m_norm)
    return PowResult(a=a, exponent=exponent, m=m, chain=chain,
                     reduced_exponent=reduced, residue=residue)


def _trace_lines(chain: ReductionChain) -> list[str]:
    """Chain table in the style of the worked trace, one iteration per line."""
    lines = []
    arg_a, arg_m = chain.a_input, chain.m_norm
    for step in chain.steps:
        lines.append(
            f"d_{step.index} = ({arg_a}, {arg_m}) = {step.d}   "
            f"m_{step.index} = {arg_m} / {step.d} = {step.m_rem}"
        )
        arg_a, arg_m = step.d, step.m_rem
    return lines


def _summary_lines(chain: ReductionChain) -> list[str]:
    return [
        f"s = {chain.s}",
        f"m_s = {chain.m_s}",
        f"phi(m_s) = {chain.phi_ms}",
    ]


def _chain_payload(chain: ReductionChain) -> dict:
    return {
        "a": str(chain.a_input),
        "m": str(chain.m_norm),
        "steps": [
            {"i": step.index, "d": str(step.d), "m_rem": str(step.m_rem)}
            for step in chain.steps
        ],
        "s": chain.s,
        "m_s": str(chain.m_s),
        "phi_m_s": str(chain.phi_ms),
    }


def _pow_payload(result: PowResult) -> dict:
    payload = _chain_payload(result.chain)
    payload["reduced_exponent"] = str(result.reduced_exponent)
    payload["residue"] = str(result.residue)
    return payload


def _power_term(a: int, exponent: int) -> str:
    base = f"({a})" if a < 0 else str(a)
    return f"{base}^{exponent}"


def cmd_reduce(request: CliRequest) -> int:
    if len(request.operands) != 2:
        raise CliError(EXIT_USAGE, "reduce expects operands: a m")
    a = _parse_int(request.operands[0], "a")
    m = _parse_modulus(request.operands[1])
    chain = build_chain(a, m)
    if request.json_output:
        print(json.dumps(_chain_payload(chain)))
    else:
        for line in _trace_lines(chain) + _summary_lines(chain):
            print(line)
    return EXIT_OK


def _parse_pow_operands(fields: Iterable[str]) -> tuple[int, int, int]:
    a_text, n_text, m_text = fields
    a = _parse_int(a_text, "a")
    exponent = _parse_int(n_text, "N")
    if exponent < 0:
        raise CliError(EXIT_USAGE, "N must be non-negative")
    m = _parse_modulus(m_text)
    return a, exponent, m


def cmd_pow(request: CliRequest) -> int:
    if not request.operands:
        return _pow_batch()
    if len(request.operands) != 3:
        raise CliError(EXIT_USAGE, "pow expects operands: a N m (or none to read them from stdin)")
    a, exponent, m = _parse_pow_operands(request.operands)
    result = solve_pow(a, exponent, m)
    if request.json_output:
        print(json.dumps(_pow_payload(result)))
        return EXIT_OK
    lines: list[str] = []
    if request.trace:
        lines += _trace_lines(result.chain)
    lines += _summary_lines(result.chain)
    lines.append(f"reduced_exponent = {result.reduced_exponent}")
    lines.append(f"residue = {result.residue}")
    if request.trace:
        lines.append(
            f"{_power_term(a, exponent)} ≡ {_power_term(a, result.reduced_exponent)}"
            f" (mod {result.chain.m_norm})"
        )
    for line in lines:
        print(line)
    return EXIT_OK


def _pow_batch() -> int:
    """One 'a N m' request per stdin line; one JSON object per output line."""
    for raw in sys.stdin:
        fields = raw.split()
        if not fields:
            continue
        if len(fields) != 3:
            raise CliError(EXIT_USAGE, f"batch line must be 'a N m', got {raw.strip()!r}")
        a, exponent, m = _parse_pow_operands(fields)
        print(json.dumps(_pow_payload(solve_pow(a, exponent, m))))
    return EXIT_OK


def cmd_totient(request: CliRequest) -> int:
    if len(request.operands) != 1:
        raise CliError(EXIT_USAGE, "totient expects one operand: n")
    n = _parse_int(request.operands[0], "n")
    if n <= 0:
        raise CliError(EXIT_DOMAIN, "totient requires n >= 1")
    phi = totient(n)
    if request.json_output:
        payload = {
            "n": str(n),
            "phi": str(phi),
            "factors": [
                {"prime": str(p), "exponent": e} for p, e in factorize(n).factors
            ],
        }
        print(json.dumps(payload))
    else:
        print(phi)
    return EXIT_OK


def _witness_payload(check: TheoremCheck) -> dict:
    return {
        "a": str(check.a),
        "m": str(check.m),
        "s": check.s,
        "m_s": str(check.m_s),
        "phi_m_s": str(check.phi_ms),
        "lhs": str(check.lhs),
        "rhs": str(check.rhs),
        "steps": [
            {"i": step.index, "d": str(step.d), "m_rem": str(step.m_rem)}
            for step in check.chain.steps
        ],
    }


def cmd_verify(request: CliRequest) -> int:
    if request.a_range is None or request.m_range is None:
        raise CliError(EXIT_USAGE, "verify requires --a LO..HI and --m LO..HI")
    a_range = _parse_range(request.a_range, "--a")
    m_range = _parse_range(request.m_range, "--m")
    if all(m == 0 for m in m_range):
        raise CliError(EXIT_USAGE, "--m range contains no nonzero modulus")
    total = len(a_range) * len(m_range)
    if total > request.cap:
        raise CliError(
            EXIT_USAGE,
            f"{total} pairs exceed the safety cap of {request.cap}; raise --cap to allow this",
        )
    checked = 0
    failures: list[TheoremCheck] = []
    for a in a_range:
        for m in m_range:
            if m == 0:
                continue
            check = verify_theorem(a, m)
            checked += 1
            if not check.ok:
                failures.append(check)
    if request.json_output:
        print(
            json.dumps(
                {
                    "checked": checked,
                    "failures": len(failures),
                    "witnesses": [_witness_payload(c) for c in failures],
                }
            )
        )
    else:
        for check in failures:
            print(
                f"FAIL a={check.a} m={check.m}: s={check.s} m_s={check.m_s} "
                f"phi={check.phi_ms} lhs={check.lhs} rhs={check.rhs} "
                f"steps={[(st.index, st.d, st.m_rem) for st in check.chain.steps]}"
            )
        print(f"{checked} checked, {len(failures)} failures")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def _selftest_checks() -> list[tuple[str, bool]]:
    chain = build_chain(6, 105765)
    worked = solve_pow(6, 25604, 105765)
    return [
        (
            "worked example: chain of (6, 105765)",
            (chain.s, chain.m_s, chain.phi_ms) == (1, 35255, 25600),
        ),
        (
            "worked example: 6^25604 mod 105765",
            (worked.reduced_exponent, worked.residue) == (4, 1296),
        ),
        ("totient(35255) = 25600", totient(35255) == 25600),
        (
            "congruence holds for |a| <= m <= 40",
            all(
                verify_theorem(a, m).ok
                for m in range(1, 41)
                for a in range(-m, m + 1)
            ),
        ),
        (
            "reduced powers match direct evaluation",
            all(
                solve_pow(a, exponent, m).residue == pow(a, exponent, m)
                for m in range(1, 30)
                for a in range(m)
                for exponent in range(20)
            ),
        ),
    ]


def cmd_selftest(request: CliRequest) -> int:
    results = _selftest_checks()
    failed = [name for name, ok in results if not ok]
    if request.json_output:
        print(
            json.dumps(
                {
                    "checks": [{"name": name, "ok": ok} for name, ok in results],
                    "passed": len(results) - len(failed),
                    "failed": len(failed),
                }
            )
        )
    else:
        for name, ok in results:
            print(f"{'ok' if ok else 'FAIL'} - {name}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


_HANDLERS = {
    "reduce": cmd_reduce,
    "pow": cmd_pow,
    "totient": cmd_totient,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="gencong",
        description="Reduce huge modular exponents via gcd reduction chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_reduce = sub.add_parser("reduce", help="print the chain (steps, s, m_s, phi) for a and m")
    p_reduce.add_argument("operands", nargs="*", metavar="OPERAND", help="a m")
    p_reduce.add_argument("--json", action="store_true", help="emit a JSON object")
    p_reduce.add_argument("--trace", action="store_true",
                          help="accepted for symmetry with pow; reduce always prints the table")

    p_pow = sub.add_parser("pow", help="compute a^N mod m by exponent reduction")
    p_pow.add_argument("operands", nargs="*", metavar="OPERAND",
                       help="a N m; omit to read one request per stdin line")
    p_pow.add_argument("--json", action="store_true", help="emit a JSON object")
    p_pow.add_argument("--trace", action="store_true",
                       help="also print the chain table and the congruence line")

    p_tot = sub.add_parser("totient", help="print phi(n)")
    p_tot.add_argument("operands", nargs="*", metavar="OPERAND", help="n")
    p_tot.add_argument("--json", action="store_true",
                       help="emit a JSON object with the factorization")

    p_verify = sub.add_parser("verify", help="check the congruence over ranges of a and m")
    p_verify.add_argument("--a", metavar="LO..HI", help="inclusive range of bases")
    p_verify.add_argument("--m", metavar="LO..HI", help="inclusive range of moduli (m = 0 skipped)")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_VERIFY_CAP, metavar="K",
                          help=f"maximum number of pairs (default {DEFAULT_VERIFY_CAP})")
    p_verify.add_argument("--json", action="store_true", help="emit a JSON summary")

    p_self = sub.add_parser("selftest", help="run the built-in regression checks")
    p_self.add_argument("--json", action="store_true", help="emit a JSON summary")

    return parser


def _merge_range_values(argv: list[str]) -> list[str]:
    """Join --a/--m with their values so ranges like -10..-1 survive argparse."""
    merged = []
    tokens = iter(argv)
    for token in tokens:
        if token in ("--a", "--m"):
            value = next(tokens, None)
            merged.append(token if value is None else f"{token}={value}")
        else:
            merged.append(token)
    return merged


def _request_from_args(args: argparse.Namespace) -> CliRequest:
    return CliRequest(
        command=args.command,
        operands=tuple(getattr(args, "operands", ())),
        json_output=getattr(args, "json", False),
        trace=getattr(args, "trace", False),
        a_range=getattr(args, "a", None),
        m_range=getattr(args, "m", None),
        cap=getattr(args, "cap", DEFAULT_VERIFY_CAP),
    )


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if hasattr(sys, "set_int_max_str_digits"):
        # operands are arbitrary-length decimals; lift the conversion cap
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_range_values(list(argv)))
        request = _request_from_args(args)
        return _HANDLERS[request.command](request)
    except CliError as err:
        print(f"gencong: error: {err}", file=sys.stderr)
        return err.code


if __name__ == "__main__":
    raise SystemExit(main())
