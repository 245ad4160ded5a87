#!/usr/bin/env python3
"""Regenerate docs/schemas/*.schema.json and docs/golden/*.json.

Run from the repository root after changing any CLI payload shape:

    python3 scripts/generate_cli_docs.py

Golden files are produced by running the real dispatcher; volatile fields
(sweep elapsed) are zeroed so the files stay byte-stable.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from extrsa import cli, rsa  # noqa: E402

INT = {"type": "integer"}
BOOL = {"type": "boolean"}
STR = {"type": "string"}
NUM = {"type": "number"}


def _schema(command: str, properties: dict, required: list[str], extra_optional: dict | None = None) -> dict:
    props = {
        "command": {"const": command},
        "status": {"enum": ["ok", "verification-failure"]},
        **properties,
        **(extra_optional or {}),
    }
    return {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": f"extrsa {command} --format json",
        "type": "object",
        "properties": props,
        "required": ["command", "status"] + required,
        "additionalProperties": False,
    }


def int_array():
    return {"type": "array", "items": INT}


SCHEMAS = {
    "factor": _schema(
        "factor",
        {"n": INT, "factors": {"type": "array", "items": {"type": "array", "items": INT, "minItems": 2, "maxItems": 2}}},
        ["n", "factors"],
    ),
    "prime": _schema("prime", {"n": INT, "prime": BOOL}, ["n", "prime"]),
    "phi": _schema("phi", {"n": INT, "phi": INT}, ["n", "phi"]),
    "phiset": _schema(
        "phiset",
        {"n": INT, "big": BOOL, "count": INT, "members": int_array()},
        ["n", "big", "count", "members"],
    ),
    "phicount": _schema(
        "phicount",
        {"n": INT, "count": INT, "method": {"enum": ["formula", "enumeration"]}},
        ["n", "count", "method"],
    ),
    "order": _schema("order", {"m": INT, "n": INT, "order": INT}, ["m", "n", "order"]),
    "keygen": _schema(
        "keygen",
        {"n": INT, "e": INT, "d": INT, "phi": INT, "k": INT, "identity": BOOL},
        ["n", "e", "d", "phi", "k", "identity"],
        extra_optional={"p": INT, "q": INT, "keyfile": STR},
    ),
    "encrypt": _schema("encrypt", {"n": INT, "e": INT, "m": INT, "ciphertext": INT}, ["n", "e", "m", "ciphertext"]),
    "decrypt": _schema("decrypt", {"n": INT, "d": INT, "c": INT, "plaintext": INT}, ["n", "d", "c", "plaintext"]),
    "verify-key": _schema(
        "verify-key",
        {"valid": BOOL},
        ["valid"],
        extra_optional={"n": INT, "e": INT, "d": INT, "phi": INT, "k": INT, "error": STR},
    ),
    "correctness-set": _schema(
        "correctness-set",
        {
            "n": INT,
            "e": INT,
            "d": INT,
            "correct_count": INT,
            "correct_set": int_array(),
            "failures": {"type": "array", "items": {"type": "array", "items": INT, "minItems": 2, "maxItems": 2}},
            "phi_set_equal": BOOL,
        },
        ["n", "e", "d", "correct_count", "correct_set", "failures", "phi_set_equal"],
    ),
    "examples": _schema(
        "examples",
        {
            "assertions": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"name": STR, "expected": {}, "actual": {}, "ok": BOOL},
                    "required": ["name", "expected", "actual", "ok"],
                    "additionalProperties": False,
                },
            },
            "passed": BOOL,
            "failed": {"type": "array", "items": STR},
        },
        ["assertions", "passed", "failed"],
    ),
    "verify": _schema(
        "verify",
        {
            "n_max": INT,
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "theorem": STR,
                        "bound": INT,
                        "checked": INT,
                        "passed": BOOL,
                        "witnesses": {"type": "array"},
                    },
                    "required": ["theorem", "bound", "checked", "passed", "witnesses"],
                    "additionalProperties": False,
                },
            },
            "passed": BOOL,
        },
        ["n_max", "checks", "passed"],
        extra_optional={"artifacts": {"type": "array", "items": STR}},
    ),
    "sweep": _schema(
        "sweep",
        {
            "config": {
                "type": "object",
                "properties": {
                    "n_min": INT,
                    "n_max": INT,
                    "e_policy": {"enum": ["all-valid", "first-valid", "sample"]},
                    "sample_count": INT,
                    "sample_seed": INT,
                    "exclude_e1": BOOL,
                    "parallelism": INT,
                },
                "required": ["n_min", "n_max", "e_policy", "sample_count", "sample_seed", "exclude_e1", "parallelism"],
                "additionalProperties": False,
            },
            "pairs_checked": INT,
            "counterexamples": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "n": INT,
                        "e": INT,
                        "m": INT,
                        "direction": {"enum": ["correct-but-not-member", "member-but-incorrect"]},
                    },
                    "required": ["n", "e", "m", "direction"],
                    "additionalProperties": False,
                },
            },
            "elapsed": NUM,
            "passed": BOOL,
        },
        ["config", "pairs_checked", "counterexamples", "elapsed", "passed"],
        extra_optional={"artifacts": {"type": "array", "items": STR}},
    ),
    "error": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "extrsa error payload (usage-error / internal-error)",
        "type": "object",
        "properties": {
            "command": {"type": ["string", "null"]},
            "status": {"enum": ["usage-error", "internal-error"]},
            "error": STR,
        },
        "required": ["command", "status", "error"],
        "additionalProperties": False,
    },
}

GOLDEN_ARGV = {
    "factor": ["factor", "20", "--format", "json"],
    "prime": ["prime", "20", "--format", "json"],
    "phi": ["phi", "20", "--format", "json"],
    "phiset": ["phiset", "--big", "20", "--format", "json"],
    "phicount": ["phicount", "20", "--format", "json"],
    "order": ["order", "3", "10", "--format", "json"],
    "keygen": ["keygen", "--n", "20", "--e", "3", "--format", "json"],
    "encrypt": ["encrypt", "--n", "20", "--e", "3", "--m", "2", "--format", "json"],
    "decrypt": ["decrypt", "--n", "20", "--e", "3", "--c", "8", "--format", "json"],
    "verify-key": None,  # needs a key file; built below
    "correctness-set": ["correctness-set", "--n", "20", "--e", "3", "--format", "json"],
    "examples": ["examples", "--format", "json"],
    "verify": ["verify", "--n-max", "30", "--format", "json"],
    "sweep": ["sweep", "--n-min", "3", "--n-max", "12", "--include-e1", "--format", "json"],
    "error": ["phi", "0", "--format", "json"],
}

VOLATILE = {"sweep": ["elapsed"]}


def golden_payload(name: str, tmpdir: Path) -> dict:
    argv = GOLDEN_ARGV[name]
    if name == "verify-key":
        keyfile = tmpdir / "golden-key.txt"
        rsa.save_keyfile(rsa.make_keypair(20, 3), keyfile)
        argv = ["verify-key", "--keyfile", str(keyfile), "--format", "json"]
    result = cli.dispatch(argv)
    payload = result.payload
    for field in VOLATILE.get(name, []):
        payload[field] = 0.0
    return payload


def main() -> None:
    schema_dir = REPO / "docs" / "schemas"
    golden_dir = REPO / "docs" / "golden"
    schema_dir.mkdir(parents=True, exist_ok=True)
    golden_dir.mkdir(parents=True, exist_ok=True)
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        for name, schema in SCHEMAS.items():
            (schema_dir / f"{name}.schema.json").write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
            payload = golden_payload(name, Path(tmp))
            (golden_dir / f"{name}.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
            print(f"wrote {name}")


if __name__ == "__main__":
    main()
