"""Command-line interface with machine-readable JSON output.

Commands: classify, nichols, liftings, verify, iso, rack, reps.  Output
is a single JSON document on stdout with sorted keys and exact scalars
rendered as strings ("3/2", "w^5 - 1").  Exit codes: 0 success, 2 flag /
domain validation errors, 1 internal check failures (non-confluence,
dimension mismatch, failed Hopf axioms).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import classify as classify_mod
from . import iso as iso_mod
from . import lifting as lifting_mod
from . import rewrite as rewrite_mod
from .cyclo import CycloNumber, RootPower, format_scalar, parse_scalar
from .dihedral import (
    CyclicCharacter,
    DihedralGroup,
    GroupElement,
    Irrep,
    class_of,
    conjugacy_classes,
    irreps,
)
from .errors import CompletionError, DomainError
from .rack import conjugation_rack, is_type_D
from .ydmod import Finite, direct_sum, induce, nichols_dimension

SCHEMA = 1

_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def _jsonify(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, CycloNumber):
        return format_scalar(obj)
    if isinstance(obj, RootPower):
        return format_scalar(obj.to_cyclo())
    if isinstance(obj, GroupElement):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, str)):
        return obj
    return str(obj)


def _emit(payload: dict):
    doc = {"schema": SCHEMA}
    doc.update(_jsonify(payload))
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _parse_pairs(m: int, text: str) -> list[tuple[int, int]]:
    if not text or not text.strip():
        return []
    cleaned = text.strip()
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(cleaned)]
    if not pairs:
        raise DomainError(f"cannot parse pair list {text!r}; expected (i,k)+(p,q)")
    n = m // 2
    for i, k in pairs:
        if not (1 <= i <= n - 1 and 1 <= k <= m - 1):
            raise DomainError(f"pair ({i},{k}) out of range for m = {m}")
    return pairs


def _parse_ells(m: int, text: str) -> list[int]:
    if not text or not text.strip():
        return []
    ells = [int(x) for x in re.findall(r"\d+", text)]
    n = m // 2
    for ell in ells:
        if not 1 <= ell < n:
            raise DomainError(f"l-label {ell} out of range [1, {n})")
    return ells


def _parse_module(m: int, text: str) -> tuple[list, list]:
    kind, sep, payload = text.partition(":")
    if not sep:
        raise DomainError(f"module spec {text!r} needs a prefix I:, L: or K:")
    kind = kind.strip().upper()
    if kind == "I":
        return _parse_pairs(m, payload), []
    if kind == "L":
        return [], _parse_ells(m, payload)
    if kind == "K":
        left, sep, right = payload.partition("|")
        if not sep:
            raise DomainError("K module spec needs the form K:<pairs>|<ells>")
        return _parse_pairs(m, left), _parse_ells(m, right)
    raise DomainError(f"unknown module prefix {kind!r}")


def _parse_param(m: int, text):
    """A parameter flag: a scalar expression, or ';'-joined key=value entries."""
    if text is None:
        return None
    if "=" not in text:
        return parse_scalar(m, text)
    out = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key_text, _, value_text = chunk.partition("=")
        key = tuple(int(x) for x in re.findall(r"\d+", key_text))
        out[key] = parse_scalar(m, value_text)
    if not out:
        raise DomainError(f"cannot parse parameter assignment {text!r}")
    return out


def _require_classification(m: int) -> DihedralGroup:
    G = DihedralGroup(m)
    G.require_classification_modulus()
    return G


def _threads(args) -> int:
    value = args.threads
    if value is None:
        value = os.environ.get("NICHOLS_DM_THREADS", "1")
    threads = int(value)
    if threads < 1:
        raise DomainError(f"--threads must be >= 1, got {threads}")
    return threads


# -- commands -----------------------------------------------------------------


def cmd_classify(args) -> tuple[dict, int]:
    _require_classification(args.m)
    report = classify_mod.theorem_A_report(args.m, args.max_size)
    return {"command": "classify", "report": report}, 0


def cmd_nichols(args) -> tuple[dict, int]:
    G = _require_classification(args.m)
    pairs, ells = _parse_module(args.m, args.module)
    if not pairs and not ells:
        raise DomainError("module spec is empty")
    blocks = [
        induce(G, class_of(G, G.r(i)), CyclicCharacter(G, k)) for i, k in pairs
    ]
    blocks += [
        induce(G, class_of(G, G.r(G.n)), Irrep(G, "two_dim", ell)) for ell in ells
    ]
    module = direct_sum(blocks)
    result = nichols_dimension(module)
    payload = {
        "command": "nichols",
        "m": args.m,
        "module": {"I": pairs, "L": ells, "label": module.label},
    }
    if isinstance(result, Finite):
        payload["verdict"] = "finite"
        payload["dimension"] = result.dimension
    else:
        payload["verdict"] = "infinite"
        payload["certificate"] = result.rule
        payload["witness"] = result.witness
        payload["summands"] = list(result.summands)
    return payload, 0


def _build_presentation(args):
    m = args.m
    I = _parse_pairs(m, args.I) if args.I else []
    L = _parse_ells(m, args.L) if args.L else []
    lam = _parse_param(m, getattr(args, "lam", None))
    gamma = _parse_param(m, args.gamma)
    theta = _parse_param(m, args.theta)
    mu = _parse_param(m, args.mu)
    family = args.family
    if family == "a":
        if lam or gamma or theta or mu:
            raise DomainError("family (a) bosonizations carry no parameters")
        if len(I) != 1 or L:
            raise DomainError("family (a) needs exactly one pair and no L part")
        if I[0][1] % m == m // 2:
            raise DomainError("family (a) excludes k = n; use family (c)")
        return lifting_mod.presentation_A(m, I)
    if family == "b":
        if lam or gamma or theta or mu:
            raise DomainError("family (b) bosonizations carry no parameters")
        if I or not L:
            raise DomainError("family (b) needs an L part and no I part")
        return lifting_mod.presentation_L(m, L)
    if family == "c":
        if theta or mu:
            raise DomainError("family (c) has no theta/mu parameters")
        if not I or L:
            raise DomainError("family (c) needs an I part and no L part")
        return lifting_mod.presentation_A(m, I, lam=lam, gamma=gamma)
    if family == "d":
        return lifting_mod.presentation_B(
            m, I, L, lam=lam, gamma=gamma, theta=theta, mu=mu
        )
    raise DomainError(f"unknown family {family!r}")


def cmd_liftings(args) -> tuple[dict, int]:
    _require_classification(args.m)
    pres = _build_presentation(args)
    return {"command": "liftings", "presentation": pres.to_json_dict()}, 0


def cmd_verify(args) -> tuple[dict, int]:
    _require_classification(args.m)
    pres = _build_presentation(args)
    system = rewrite_mod.compile(pres, overlap_budget=args.overlap_budget)
    dim, cert = rewrite_mod.dimension(system)
    expected = 4 ** (len(pres.I) + len(pres.L)) * 2 * args.m
    hopf = rewrite_mod.hopf_check(pres, system)
    payload = {
        "command": "verify",
        "m": args.m,
        "family": args.family,
        "I": [list(p) for p in pres.I],
        "L": list(pres.L),
        "parameters": pres.to_json_dict()["parameters"],
        "dimension": dim,
        "expected": expected,
        "dimension_matches": dim == expected,
        "hopf": {
            "delta_ok": hopf.delta_ok,
            "counit_ok": hopf.counit_ok,
            "antipode_ok": hopf.antipode_ok,
            "failures": list(hopf.failures),
        },
        "certificate": rewrite_mod.certificate_json(system),
    }
    code = 0 if dim == expected and hopf.all_ok else 1
    return payload, code


def cmd_iso(args) -> tuple[dict, int]:
    _require_classification(args.m)
    grid = [token.strip() for token in args.grid.split(",") if token.strip()]
    orbits = iso_mod.iso_classes(
        args.m, args.max_size, parameter_grid=grid, families=args.family
    )
    return {
        "command": "iso",
        "m": args.m,
        "families": args.family,
        "grid": grid,
        "orbits": orbits,
    }, 0


def cmd_rack(args) -> tuple[dict, int]:
    G = DihedralGroup(args.m)
    text = args.cls.strip()
    if text == "e":
        rep = G.identity
    elif text == "s":
        rep = G.s()
    elif text == "sr":
        rep = G.s(1)
    else:
        match = re.fullmatch(r"r\^?(\d+)", text)
        if not match:
            raise DomainError(f"unknown class spec {text!r}; use e, s, sr or r^i")
        rep = G.r(int(match.group(1)))
    cls = class_of(G, rep)
    rack = conjugation_rack(G, cls)
    verdict, witness = is_type_D(G, cls)
    payload = {
        "command": "rack",
        "m": args.m,
        "class": cls.name,
        "size": cls.size,
        "type_d": verdict,
        "witness": [str(witness.first), str(witness.second)] if witness else None,
        "rack_table": [list(row) for row in rack.table],
    }
    return payload, 0


def cmd_reps(args) -> tuple[dict, int]:
    G = DihedralGroup(args.m)
    if G.m % 2:
        raise DomainError("irreducible representation tables need even m")
    reps = irreps(G)
    linear = []
    for chi in (p for p in reps if p.kind == "linear"):
        linear.append(
            {
                "name": chi.name,
                "values": {
                    str(g): chi.character(g)
                    for g in [G.identity, G.r(), G.r(G.n), G.s(), G.s(1)]
                },
            }
        )
    two_dim = []
    for rho in (p for p in reps if p.kind == "two_dim"):
        two_dim.append(
            {
                "l": rho.index,
                "rho_r": [[c for c in row] for row in rho.evaluate(G.r())],
                "rho_s": [[c for c in row] for row in rho.evaluate(G.s())],
            }
        )
    classes = [
        {"name": c.name, "size": c.size, "representative": str(c.representative)}
        for c in conjugacy_classes(G)
    ]
    payload = {
        "command": "reps",
        "m": args.m,
        "linear": linear,
        "two_dim": two_dim,
        "conjugacy_classes": classes,
        "counts": {"linear": len(linear), "two_dim": len(two_dim)},
        "sum_of_squares": sum(p.degree**2 for p in reps),
    }
    return payload, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nichols-dm",
        description=(
            "Exact classification of finite-dimensional Nichols algebras and "
            "pointed Hopf algebras over dihedral groups D_m, m = 4t >= 12."
        ),
        epilog=(
            "Module/family syntax: I:(i,k)+(p,q)  L:l+l  K:(i,k)+(p,q)|l+l. "
            "Parameter flags accept a scalar (broadcast over free entries, "
            "e.g. --lambda 1 or --lambda 'w^2 - 1') or keyed assignments "
            "'p,q,i,k=value;...'."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, classification=True):
        p.add_argument("--m", type=int, required=True, help="dihedral parameter m")
        p.add_argument(
            "--threads",
            type=int,
            default=None,
            help="worker threads (NICHOLS_DM_THREADS fallback); computations are deterministic",
        )

    p = sub.add_parser("classify", help="full classification report for D_m")
    common(p)
    p.add_argument("--max-size", type=int, default=2, help="family size bound")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("nichols", help="finite/infinite verdict for a module")
    common(p)
    p.add_argument("--module", required=True, help="module spec, e.g. I:(1,6)+(5,6)")
    p.set_defaults(func=cmd_nichols)

    def family_flags(p):
        p.add_argument("--family", required=True, choices=["a", "b", "c", "d"])
        p.add_argument("--I", default=None, help="pair list, e.g. (1,6)+(5,6)")
        p.add_argument("--L", default=None, help="l list, e.g. 1+3")
        p.add_argument("--lambda", dest="lam", default=None, help="lambda parameter(s)")
        p.add_argument("--gamma", default=None, help="gamma parameter(s)")
        p.add_argument("--theta", default=None, help="theta parameter(s)")
        p.add_argument("--mu", default=None, help="mu parameter(s)")

    p = sub.add_parser("liftings", help="emit a lifting presentation as JSON")
    common(p)
    family_flags(p)
    p.set_defaults(func=cmd_liftings)

    p = sub.add_parser("verify", help="certify dimension and Hopf axioms by rewriting")
    common(p)
    family_flags(p)
    p.add_argument(
        "--overlap-budget",
        type=int,
        default=None,
        help="abort completion after this many ambiguity checks",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="isomorphism orbits on a parameter grid")
    common(p)
    p.add_argument("--family", default="abcd", help="subset of 'abcd'")
    p.add_argument("--max-size", type=int, default=1)
    p.add_argument("--grid", default="0,1", help="comma-separated scalar values")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("rack", help="conjugation rack and type-D verdict for a class")
    common(p, classification=False)
    p.add_argument("--class", dest="cls", required=True, help="e, s, sr or r^i")
    p.set_defaults(func=cmd_rack)

    p = sub.add_parser("reps", help="irreducible representation tables")
    common(p, classification=False)
    p.set_defaults(func=cmd_reps)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads(args)
        payload, code = args.func(args)
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except DomainError as exc:
        _emit({"error": {"type": "validation", "message": str(exc)}})
        return 2
    except CompletionError as exc:
        _emit(
            {
                "error": {
                    "type": "internal_check",
                    "message": str(exc),
                    "ambiguity": _jsonify(exc.ambiguity),
                }
            }
        )
        return 1
    except RuntimeError as exc:
        _emit({"error": {"type": "internal_check", "message": str(exc)}})
        return 1
    try:
        _emit(payload)
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
