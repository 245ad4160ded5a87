"""Command-line front end: one subcommand per library capability.

Exit codes are part of the contract: 0 ok, 1 usage error, 2 verification
failure or counterexample, 3 internal inconsistency or crash. `--format
json` emits a stable-key-ordered, newline-terminated document; text output
is line oriented. Both are deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import bigphi, factoring, harness, rsa, totient
from .errors import DomainError, FactorizationTimeout, InternalConsistencyError

EXIT_CODES = {"ok": 0, "usage-error": 1, "verification-failure": 2, "internal-error": 3}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep the 0/1/2/3 contract
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage().rstrip()}")


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    format: str = "text"
    emit: bool = True

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def natural(text: str) -> int:
    """Decimal or 0x-prefixed hex, non-negative."""
    try:
        value = int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _deadline(args) -> float | None:
    timeout = getattr(args, "timeout", None)
    return None if timeout is None else time.monotonic() + timeout


def _key_from_args(args) -> rsa.KeyPair:
    if args.keyfile is not None:
        return rsa.load_keyfile(args.keyfile, deadline=_deadline(args))
    if args.n is None or args.e is None:
        raise UsageError("provide either --keyfile or both --n and --e")
    return rsa.make_keypair(args.n, args.e, deadline=_deadline(args))


# --------------------------------------------------------------------------
# Handlers: each returns (status, payload)
# --------------------------------------------------------------------------


def _cmd_factor(args):
    fz = factoring.factorize(args.n, seed=args.seed, deadline=_deadline(args))
    return "ok", {"n": fz.n, "factors": [[p, a] for p, a in fz.factors]}


def _cmd_prime(args):
    return "ok", {"n": args.n, "prime": factoring.is_prime(args.n)}


def _cmd_phi(args):
    return "ok", {"n": args.n, "phi": totient.phi(args.n, deadline=_deadline(args))}


def _cmd_phiset(args):
    if args.big:
        members = list(bigphi.big_phi_set(args.n, args.limit).members)
    else:
        members = list(totient.phi_set(args.n, args.limit).members)
    return "ok", {"n": args.n, "big": args.big, "count": len(members), "members": members}


def _cmd_phicount(args):
    if args.enumerate:
        count = bigphi.big_phi_count_by_enumeration(args.n, args.limit)
        method = "enumeration"
    else:
        count = bigphi.big_phi_count(args.n, deadline=_deadline(args))
        method = "formula"
    return "ok", {"n": args.n, "count": count, "method": method}


def _cmd_order(args):
    return "ok", {"m": args.m, "n": args.n, "order": totient.multiplicative_order(args.m, args.n)}


def _cmd_keygen(args):
    payload = {}
    if args.bits is not None and args.n is not None:
        raise UsageError("--n and --bits are mutually exclusive")
    if args.bits is not None:
        rng = random.Random(args.seed)
        p = factoring.gen_prime(args.bits, rng)
        q = p
        while q == p:
            q = factoring.gen_prime(args.bits, rng)
        key = rsa.make_keypair(p * q, args.e, phi_n=(p - 1) * (q - 1))
        payload.update({"p": p, "q": q})
    elif args.n is not None:
        key = rsa.make_keypair(args.n, args.e, deadline=_deadline(args))
    else:
        raise UsageError("provide either --n or --bits")
    payload.update({"n": key.n, "e": key.e, "d": key.d, "phi": key.phi_n, "k": key.k, "identity": key.is_identity})
    if args.out:
        rsa.save_keyfile(key, args.out)
        payload["keyfile"] = args.out
    return "ok", payload


def _cmd_encrypt(args):
    key = _key_from_args(args)
    return "ok", {"n": key.n, "e": key.e, "m": args.m, "ciphertext": rsa.encrypt(key, args.m)}


def _cmd_decrypt(args):
    key = _key_from_args(args)
    return "ok", {"n": key.n, "d": key.d, "c": args.c, "plaintext": rsa.decrypt(key, args.c)}


def _cmd_verify_key(args):
    try:
        key = rsa.load_keyfile(args.keyfile, deadline=_deadline(args))
    except DomainError as exc:
        return "verification-failure", {"valid": False, "error": str(exc)}
    return "ok", {"valid": True, "n": key.n, "e": key.e, "d": key.d, "phi": key.phi_n, "k": key.k}


def _cmd_correctness_set(args):
    key = _key_from_args(args)
    report = rsa.correctness_set(key, args.limit)
    return "ok", {
        "n": key.n,
        "e": key.e,
        "d": key.d,
        "correct_count": len(report.correct_set),
        "correct_set": list(report.correct_set),
        "failures": [[m, v] for m, v in report.failures],
        "phi_set_equal": report.phi_set_equal,
    }


def _cmd_examples(args):
    report = harness.reproduce_worked_examples()
    payload = {
        "assertions": [
            {"name": a.name, "expected": a.expected, "actual": a.actual, "ok": a.ok}
            for a in report.assertions
        ],
        "passed": report.all_passed,
        "failed": list(report.failures),
    }
    return ("ok" if report.all_passed else "verification-failure"), payload


def _cmd_verify(args):
    report = harness.verify_theorem_suite(args.n_max)
    payload = {
        "n_max": report.n_max,
        "checks": [
            {
                "theorem": c.name,
                "bound": c.bound,
                "checked": c.checked,
                "passed": c.passed,
                "witnesses": [list(w) for w in c.failures],
            }
            for c in report.checks
        ],
        "passed": report.all_passed,
    }
    if args.figures:
        from . import plots

        payload["artifacts"] = [str(p) for p in plots.render_verify_outputs(report, args.figures)]
    return ("ok" if report.all_passed else "verification-failure"), payload


def _cmd_sweep(args):
    config = harness.SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        e_policy=args.e_policy,
        sample_count=args.sample_count,
        sample_seed=args.sample_seed,
        exclude_e1=not args.include_e1,
        parallelism=args.jobs,
    )
    report = harness.sweep_conjecture(config, args.limit)
    payload = {
        "config": {
            "n_min": config.n_min,
            "n_max": config.n_max,
            "e_policy": config.e_policy,
            "sample_count": config.sample_count,
            "sample_seed": config.sample_seed,
            "exclude_e1": config.exclude_e1,
            "parallelism": config.parallelism,
        },
        "pairs_checked": report.pairs_checked,
        "counterexamples": [
            {"n": c.n, "e": c.e, "m": c.m, "direction": c.direction} for c in report.counterexamples
        ],
        "elapsed": report.elapsed,
        "passed": not report.counterexamples,
    }
    if args.figures:
        from . import plots

        payload["artifacts"] = [str(p) for p in plots.render_sweep_outputs(report, args.figures)]
    return ("ok" if not report.counterexamples else "verification-failure"), payload


# --------------------------------------------------------------------------
# Text rendering
# --------------------------------------------------------------------------


def _text_factor(p):
    if not p["factors"]:
        return "1 = 1"
    parts = " * ".join(f"{q}^{a}" if a > 1 else f"{q}" for q, a in p["factors"])
    return f"{p['n']} = {parts}"


def _text_members(p):
    return " ".join(str(m) for m in p["members"])


def _text_keygen(p):
    lines = [f"n = {p['n']}", f"e = {p['e']}", f"d = {p['d']}", f"phi = {p['phi']}", f"k = {p['k']}"]
    if "p" in p:
        lines[1:1] = [f"p = {p['p']}", f"q = {p['q']}"]
    if p["identity"]:
        lines.append("note: e = 1 is the identity map")
    if "keyfile" in p:
        lines.append(f"wrote {p['keyfile']}")
    return "\n".join(lines)


def _text_verify_key(p):
    if p["valid"]:
        return f"valid key: n={p['n']} e={p['e']} d={p['d']} (phi={p['phi']}, k={p['k']})"
    return f"invalid key: {p['error']}"


def _text_correctness(p):
    lines = [
        f"n = {p['n']}, e = {p['e']}, d = {p['d']}",
        f"correct ({p['correct_count']}): " + " ".join(str(m) for m in p["correct_set"]),
        f"failures ({len(p['failures'])}): " + ", ".join(f"{m} -> {v}" for m, v in p["failures"]),
        f"matches membership set: {'yes' if p['phi_set_equal'] else 'no'}",
    ]
    return "\n".join(lines)


def _text_examples(p):
    lines = []
    for a in p["assertions"]:
        tag = "PASS" if a["ok"] else "FAIL"
        detail = "" if a["ok"] else f"  expected {a['expected']!r}, got {a['actual']!r}"
        lines.append(f"{tag}  {a['name']}{detail}")
    done = sum(a["ok"] for a in p["assertions"])
    lines.append(f"{done}/{len(p['assertions'])} assertions passed")
    return "\n".join(lines)


def _text_verify(p):
    lines = []
    for c in p["checks"]:
        tag = "PASS" if c["passed"] else "FAIL"
        extra = "" if c["passed"] else f"  witnesses: {c['witnesses']}"
        lines.append(f"{tag}  {c['theorem']}  bound={c['bound']} checked={c['checked']}{extra}")
    done = sum(c["passed"] for c in p["checks"])
    lines.append(f"{done}/{len(p['checks'])} checks passed (n_max = {p['n_max']})")
    return "\n".join(lines)


def _text_sweep(p):
    by_pair: dict[tuple, list] = {}
    for c in p["counterexamples"]:
        by_pair.setdefault((c["n"], c["e"], c["direction"]), []).append(c["m"])
    lines = [
        f"counterexample: n={n} e={e} ({direction}): m = " + " ".join(str(m) for m in ms)
        for (n, e, direction), ms in by_pair.items()
    ]
    cfg = p["config"]
    verdict = "no counterexamples" if p["passed"] else f"{len(p['counterexamples'])} counterexamples"
    lines.append(
        f"checked {p['pairs_checked']} (n, e) pairs over n in [{cfg['n_min']}, {cfg['n_max']}]: "
        f"{verdict} ({p['elapsed']:.2f}s)"
    )
    return "\n".join(lines)


_TEXT_RENDERERS = {
    "factor": _text_factor,
    "prime": lambda p: f"{p['n']} is prime" if p["prime"] else f"{p['n']} is composite",
    "phi": lambda p: str(p["phi"]),
    "phiset": _text_members,
    "phicount": lambda p: str(p["count"]),
    "order": lambda p: str(p["order"]),
    "keygen": _text_keygen,
    "encrypt": lambda p: str(p["ciphertext"]),
    "decrypt": lambda p: str(p["plaintext"]),
    "verify-key": _text_verify_key,
    "correctness-set": _text_correctness,
    "examples": _text_examples,
    "verify": _text_verify,
    "sweep": _text_sweep,
}


def format_report(result: CommandResult, format: str | None = None) -> str:
    """Render a result; json is stable-key-ordered and newline-terminated."""
    fmt = format or result.format
    if fmt == "json":
        return json.dumps(result.payload, sort_keys=True) + "\n"
    if result.status in ("usage-error", "internal-error"):
        return f"error: {result.payload.get('error', 'unknown error')}\n"
    return _TEXT_RENDERERS[result.payload["command"]](result.payload) + "\n"


# --------------------------------------------------------------------------
# Parser and dispatch
# --------------------------------------------------------------------------


def _add_common(sub, *, timeout=False, limit=False):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    if timeout:
        sub.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    if limit:
        sub.add_argument("--limit", type=int, default=None, metavar="N",
                         help="enumeration cap (default: EXTRSA_ENUM_LIMIT or 10^6)")


def _add_key_source(sub):
    sub.add_argument("--keyfile", default=None, help="three decimal lines: n, e, d")
    sub.add_argument("--n", type=natural, default=None)
    sub.add_argument("--e", type=natural, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="extrsa", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("factor", help="prime factorization")
    sub.add_argument("n", type=natural)
    sub.add_argument("--seed", type=int, default=factoring.DEFAULT_RHO_SEED)
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_factor)

    sub = commands.add_parser("prime", help="primality test")
    sub.add_argument("n", type=natural)
    _add_common(sub)
    sub.set_defaults(func=_cmd_prime)

    sub = commands.add_parser("phi", help="Euler totient")
    sub.add_argument("n", type=natural)
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_phi)

    sub = commands.add_parser("phiset", help="reduced residues, or the extended set with --big")
    sub.add_argument("n", type=natural)
    sub.add_argument("--big", action="store_true")
    _add_common(sub, limit=True)
    sub.set_defaults(func=_cmd_phiset)

    sub = commands.add_parser("phicount", help="size of the extended set")
    sub.add_argument("n", type=natural)
    sub.add_argument("--enumerate", action="store_true", help="count by definitional scan")
    _add_common(sub, timeout=True, limit=True)
    sub.set_defaults(func=_cmd_phicount)

    sub = commands.add_parser("order", help="multiplicative order of m modulo n")
    sub.add_argument("m", type=natural)
    sub.add_argument("n", type=natural)
    _add_common(sub)
    sub.set_defaults(func=_cmd_order)

    sub = commands.add_parser("keygen", help="build a key for modulus n and exponent e")
    sub.add_argument("--n", type=natural, default=None)
    sub.add_argument("--bits", type=int, default=None, help="build n from two random primes")
    sub.add_argument("--e", type=natural, required=True)
    sub.add_argument("--seed", type=int, default=0, help="prime generation seed")
    sub.add_argument("--out", default=None, help="write keyfile")
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_keygen)

    sub = commands.add_parser("encrypt", help="m^e mod n")
    _add_key_source(sub)
    sub.add_argument("--m", type=natural, required=True)
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_encrypt)

    sub = commands.add_parser("decrypt", help="c^d mod n")
    _add_key_source(sub)
    sub.add_argument("--c", type=natural, required=True)
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_decrypt)

    sub = commands.add_parser("verify-key", help="revalidate a keyfile")
    sub.add_argument("--keyfile", required=True)
    _add_common(sub, timeout=True)
    sub.set_defaults(func=_cmd_verify_key)

    sub = commands.add_parser("correctness-set", help="which messages round-trip")
    _add_key_source(sub)
    _add_common(sub, timeout=True, limit=True)
    sub.set_defaults(func=_cmd_correctness_set)

    sub = commands.add_parser("examples", help="recompute the worked examples")
    _add_common(sub)
    sub.set_defaults(func=_cmd_examples)

    sub = commands.add_parser("verify", help="run the theorem verification suite")
    sub.add_argument("--n-max", type=int, default=5000)
    sub.add_argument("--figures", default=None, metavar="DIR", help="write CSV and figures here")
    _add_common(sub)
    sub.set_defaults(func=_cmd_verify)

    sub = commands.add_parser("sweep", help="necessity-conjecture sweep over a range of n")
    sub.add_argument("--n-min", type=natural, default=3)
    sub.add_argument("--n-max", type=natural, default=2000)
    sub.add_argument("--e-policy", choices=("all-valid", "first-valid", "sample"), default="all-valid")
    sub.add_argument("--sample-count", type=int, default=8)
    sub.add_argument("--sample-seed", type=int, default=0)
    sub.add_argument("--include-e1", action="store_true", help="also sweep the identity exponent")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--figures", default=None, metavar="DIR", help="write CSV and figures here")
    _add_common(sub, limit=True)
    sub.set_defaults(func=_cmd_sweep)

    return parser


def dispatch(argv: list[str]) -> CommandResult:
    """Route argv to a subcommand and capture the outcome as a CommandResult."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult("usage-error", {"command": None, "status": "usage-error", "error": str(exc)})
    except SystemExit as exc:  # --help
        status = "ok" if not exc.code else "usage-error"
        return CommandResult(status, emit=False)

    def failed(status: str, exc: Exception) -> CommandResult:
        payload = {"command": args.command, "status": status, "error": str(exc)}
        return CommandResult(status, payload, args.format)

    try:
        status, payload = args.func(args)
    except (UsageError, ValueError, FactorizationTimeout, OSError) as exc:
        return failed("usage-error", exc)
    except InternalConsistencyError as exc:
        return failed("internal-error", exc)
    except Exception as exc:  # crash, still honor the exit-code contract
        return failed("internal-error", exc)
    payload["command"] = args.command
    payload["status"] = status
    return CommandResult(status, payload, args.format)


def main(argv: list[str] | None = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.emit:
        stream = sys.stdout if result.status in ("ok", "verification-failure") else sys.stderr
        stream.write(format_report(result))
        stream.flush()
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
