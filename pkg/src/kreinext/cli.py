"""Command-line front end.

Three subcommands:

``classify``
    Build characteristic data from a named provider, classify one
    extension and write a JSON report ``{class, csym, notes,
    gauge_phase}``.
``spectrum``
    Hunt non-real eigenvalues of one extension inside a rectangle of
    the upper half-plane; JSON report, or CSV of the eigenvalue list
    with ``--csv``.
``examples``
    Run one of the bundled end-to-end suites (``sec51``, ``sec52``,
    ``sec53``) and print one PASS/FAIL line per check.

Reports are deterministic: keys sorted, floats fixed at 12 significant
digits, so identical inputs give byte-identical output.  Exit codes:
0 success, 1 example-suite failure, 2 validation error, 3 spectrum
verdict "IdenticallyZeroDeterminant", 4 numerical failure.

Options may also come from a config file (``key = value`` lines, ``#``
comments, keys matching the long flag names); explicit flags win.  The
environment variable ``KREIN_EXT_TOL`` overrides the default tolerance
of the classify equality test.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .boundary_space import extension_subspace, intersection_dim, map_subspace
from .charfn import (
    DEFAULT_TOL,
    CharacteristicData,
    EquivalenceVerdict,
    SturmLiouvilleModel,
    degenerate_sl,
    indefinite_sl,
    nonequivalence_residual,
    phase_candidate,
    potential_from_spec,
    potential_zero,
    zero_chardata,
)
from .clifford import csym_matrix
from .errors import DomainError, KreinExtError
from .extensions import (
    ExtensionClass,
    ExtensionParams,
    classify,
    empty_resolvent_family,
    random_extension,
)
from .spectral import (
    SearchBox,
    SpectralVerdict,
    det_f,
    empty_resolvent_verdict,
    nonreal_eigenvalues,
    shooting_residual,
)

__all__ = ["main"]

_PROVIDERS = ("degenerate_sl", "indefinite_sl", "zero")
_EXAMPLE_SUITES = ("sec51", "sec52", "sec53")
_RNG_SEED = 20260816

# (dest, parser) pairs a config file may supply, per subcommand.
_COMMON_KEYS: tuple[tuple[str, Callable[[str], object]], ...] = (
    ("provider", str),
    ("q", float),
    ("r", float),
    ("phi", float),
    ("gamma", float),
    ("xi", float),
    ("potential", str),
    ("x_trunc", float),
    ("output", str),
)


def _parse_bool(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "on")


_CONFIG_KEYS: dict[str, tuple[tuple[str, Callable[[str], object]], ...]] = {
    "classify": _COMMON_KEYS + (("tol", float),),
    "spectrum": _COMMON_KEYS
    + (
        ("re_min", float),
        ("re_max", float),
        ("im_min", float),
        ("im_max", float),
        ("csv", _parse_bool),
    ),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kreinext",
        description="Classification and spectra of symmetry-commuting extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--provider",
            choices=_PROVIDERS,
            default=None,
            help="characteristic-data provider",
        )
        p.add_argument("--q", type=float, default=None, help="modulus q in [0, 1]")
        p.add_argument(
            "--r",
            type=float,
            default=None,
            help="modulus r; derived from q when omitted",
        )
        p.add_argument("--phi", type=float, default=None, help="phase phi (radians)")
        p.add_argument("--gamma", type=float, default=None, help="phase gamma (radians)")
        p.add_argument("--xi", type=float, default=None, help="phase xi (radians)")
        p.add_argument(
            "--potential",
            default=None,
            help="potential preset for indefinite_sl:"
            " zero | constant:<v> | step:<a>:<b>:<h>[,<a>:<b>:<h>...]",
        )
        p.add_argument(
            "--x-trunc",
            dest="x_trunc",
            type=float,
            default=None,
            help="initial truncation radius for indefinite_sl (default 40)",
        )
        p.add_argument("--config", default=None, help="config file (key = value lines)")
        p.add_argument("--output", default=None, help="write the report here instead of stdout")

    p_classify = sub.add_parser("classify", help="classify one extension")
    add_model_flags(p_classify)
    p_classify.add_argument(
        "--tol",
        type=float,
        default=None,
        help="tolerance of the equality-up-to-phase test"
        " (default: KREIN_EXT_TOL or 1e-7)",
    )
    p_classify.set_defaults(handler=_cmd_classify)

    p_spectrum = sub.add_parser("spectrum", help="non-real eigenvalues in a box")
    add_model_flags(p_spectrum)
    p_spectrum.add_argument("--re-min", dest="re_min", type=float, default=None)
    p_spectrum.add_argument("--re-max", dest="re_max", type=float, default=None)
    p_spectrum.add_argument("--im-min", dest="im_min", type=float, default=None)
    p_spectrum.add_argument("--im-max", dest="im_max", type=float, default=None)
    p_spectrum.add_argument(
        "--csv",
        action="store_true",
        default=False,
        help="emit the eigenvalue list as CSV instead of the JSON report",
    )
    p_spectrum.set_defaults(handler=_cmd_spectrum)

    p_examples = sub.add_parser("examples", help="run a bundled end-to-end suite")
    p_examples.add_argument("name", choices=_EXAMPLE_SUITES)
    p_examples.set_defaults(handler=_cmd_examples)

    return parser


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _merge_config(args: argparse.Namespace) -> None:
    """Fill unset options from the config file; explicit flags win."""
    if not getattr(args, "config", None):
        return
    known = dict(_CONFIG_KEYS[args.command])
    for key, text in _read_config(args.config).items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r} for {args.command}")
        cast = known[key]
        try:
            value = cast(text)
        except ValueError as exc:
            raise ValueError(f"config key {key!r}: cannot parse {text!r}") from exc
        current = getattr(args, key)
        if current is None or (cast is _parse_bool and current is False):
            setattr(args, key, value)


def _build_chardata(args: argparse.Namespace) -> CharacteristicData:
    if args.provider is None:
        raise ValueError("a provider is required (--provider or config file)")
    if args.provider == "degenerate_sl":
        return degenerate_sl()
    if args.provider == "zero":
        return zero_chardata()
    potential_spec = args.potential or "zero"
    x_trunc = args.x_trunc if args.x_trunc is not None else 40.0
    model = SturmLiouvilleModel(
        potential=potential_from_spec(potential_spec),
        x_truncation=x_trunc,
        x_max=8.0 * x_trunc,
        label=potential_spec,
    )
    return indefinite_sl(model)


def _build_params(args: argparse.Namespace) -> ExtensionParams:
    phi = args.phi or 0.0
    gamma = args.gamma or 0.0
    xi = args.xi or 0.0
    q, r = args.q, args.r
    if q is None and r is None:
        q, r = 0.0, 1.0
    elif r is None:
        if not 0.0 <= q <= 1.0:
            raise ValueError(f"q must lie in [0, 1] to derive r, got {q}")
        r = math.sqrt(1.0 - q * q)
    elif q is None:
        if not 0.0 <= r <= 1.0:
            raise ValueError(f"r must lie in [0, 1] to derive q, got {r}")
        q = math.sqrt(1.0 - r * r)
    return ExtensionParams(phi=phi, gamma=gamma, xi=xi, q=q, r=r)


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {key: _round_floats(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(value) for value in obj]
    return obj


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _json_report(payload: dict) -> str:
    return json.dumps(_round_floats(payload), sort_keys=True, indent=2) + "\n"


def _csym_payload(csym) -> dict | None:
    if csym is None:
        return None
    if csym.is_collapsed:
        return {"chi": csym.chi, "omega": csym.omega}
    if csym.chi1 == csym.chi2:
        return {"chi": csym.chi1, "omega1": csym.omega1, "omega2": csym.omega2}
    return {
        "chi1": csym.chi1,
        "omega1": csym.omega1,
        "chi2": csym.chi2,
        "omega2": csym.omega2,
    }


def _cmd_classify(args: argparse.Namespace) -> int:
    _merge_config(args)
    tol = args.tol
    if tol is None:
        env = os.environ.get("KREIN_EXT_TOL")
        tol = float(env) if env else DEFAULT_TOL
    cd = _build_chardata(args)
    params = _build_params(args)
    result = classify(params, cd, tol=tol)
    payload = {
        "class": result.extension_class.value,
        "csym": _csym_payload(result.csym),
        "notes": result.notes,
        "gauge_phase": result.gauge_phase,
    }
    _emit(_json_report(payload), args.output)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    _merge_config(args)
    edges = (args.re_min, args.re_max, args.im_min, args.im_max)
    if any(edge is None for edge in edges):
        raise ValueError(
            "spectrum needs a full box: --re-min --re-max --im-min --im-max"
        )
    box = SearchBox(*edges)
    cd = _build_chardata(args)
    params = _build_params(args)
    report = nonreal_eigenvalues(params, cd, box)
    if args.csv:
        lines = ["re,im,residual"]
        for eig in report.eigenvalues:
            lines.append(
                f"{_fmt(eig.mu.real)},{_fmt(eig.mu.imag)},{_fmt(eig.residual)}"
            )
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "verdict": report.verdict.value,
            "box": {
                "re_min": box.re_min,
                "re_max": box.re_max,
                "im_min": box.im_min,
                "im_max": box.im_max,
            },
            "winding_total": report.winding_total,
            "evaluations": report.evaluations,
            "eigenvalues": [
                {"re": eig.mu.real, "im": eig.mu.imag, "residual": eig.residual}
                for eig in report.eigenvalues
            ],
        }
        text = _json_report(payload)
    _emit(text, args.output)
    if report.verdict is SpectralVerdict.IDENTICALLY_ZERO_DETERMINANT:
        return 3
    return 0


# ---------------------------------------------------------------------------
# bundled example suites
# ---------------------------------------------------------------------------

_GRID = tuple(complex(a, b) for a in (0.5, 1.5, 2.5, 3.5, 4.5) for b in (0.5, 1.5, 2.5, 3.5, 4.5))


def _suite_degenerate_family() -> list[tuple[str, bool]]:
    cd = degenerate_sl()
    checks: list[tuple[str, bool]] = []

    family = empty_resolvent_family(cd)
    family_ok = (
        family.exists
        and family.r == 0.0
        and family.phi_values is not None
        and len(family.phi_values) == 2
        and abs(family.phi_values[0] - 0.0) < 1e-9
        and abs(family.phi_values[1] - math.pi) < 1e-9
        and family.gamma_free
    )
    checks.append(("empty-resolvent family {r=0, phi in {0, pi}}", family_ok))

    members = [
        ExtensionParams(phi=phi, gamma=gamma, xi=0.0, q=1.0, r=0.0)
        for gamma in (0.0, 1.0, 2.0)
        for phi in (0.0, math.pi)
    ]
    worst = max(
        abs(det_f(member, cd, mu)) for member in members for mu in _GRID
    )
    checks.append(("member determinant vanishes on the sample grid", worst < 1e-9))

    member = members[1]
    residuals = [shooting_residual(member, mu) for mu in _GRID[::6][:5]]
    checks.append(
        ("shooting residual vanishes for a family member", max(residuals) < 1e-8)
    )

    verdict = empty_resolvent_verdict(member, cd)
    checks.append(
        (
            "spectrum verdict is IdenticallyZeroDeterminant",
            verdict is SpectralVerdict.IDENTICALLY_ZERO_DETERMINANT,
        )
    )
    return checks


def _suite_wholeline_separation() -> list[tuple[str, bool]]:
    model = SturmLiouvilleModel(potential=potential_zero(), label="zero potential")
    cd = indefinite_sl(model)
    checks: list[tuple[str, bool]] = []

    equiv = cd.equivalence()
    res = equiv.residual if equiv.residual is not None else 0.0
    checks.append(
        (
            f"entries not phase-equivalent (residual {res:.3f})",
            equiv.verdict is EquivalenceVerdict.NOT_EQUIVALENT and res > 0.01,
        )
    )

    family = empty_resolvent_family(cd)
    checks.append(("no empty-resolvent member", not family.exists))

    rng = np.random.default_rng(_RNG_SEED)
    discrete = True
    for _ in range(100):
        params = random_extension(rng)
        try:
            verdict = empty_resolvent_verdict(params, cd)
        except KreinExtError:
            discrete = False
            break
        if verdict is not SpectralVerdict.DISCRETE_SET:
            discrete = False
            break
    checks.append(("random extensions keep a discrete-spectrum verdict", discrete))

    candidate = phase_candidate(model)
    checks.append(("phase candidate equals -1", abs(candidate + 1.0) < 1e-6))

    sep = nonequivalence_residual(model, 4j)
    checks.append(
        (f"separation residual at mu=4i nonzero ({abs(sep):.3f})", abs(sep) > 0.01)
    )
    return checks


def _suite_zero_partition() -> list[tuple[str, bool]]:
    cd = zero_chardata()
    rng = np.random.default_rng(_RNG_SEED)
    checks: list[tuple[str, bool]] = []

    draws: list[ExtensionParams] = []
    for k in range(400):
        if k % 10 == 7:
            phi, gamma, xi = rng.uniform(0.0, 2.0 * math.pi, size=3)
            draws.append(ExtensionParams.from_q(0.0, phi, gamma, xi))
        elif k % 10 == 3:
            phi, gamma, xi = rng.uniform(0.0, 2.0 * math.pi, size=3)
            draws.append(ExtensionParams.from_q(1.0, phi, gamma, xi))
        else:
            draws.append(random_extension(rng))

    results = [classify(params, cd) for params in draws]
    no_upsilon_u = all(
        res.extension_class is not ExtensionClass.UPSILON_U for res in results
    )
    checks.append(("no extension is certified by every Clifford symmetry", no_upsilon_u))

    partition_ok = True
    for params, res in zip(draws, results):
        if params.r <= 1e-10:
            expected = ExtensionClass.EMPTY_RESOLVENT
        elif params.q <= 1e-10:
            expected = ExtensionClass.UPSILON_J
        else:
            expected = ExtensionClass.SIGMA_JST_PROPER
        if res.extension_class is not expected:
            partition_ok = False
            break
    checks.append(("classes partition by (q, r)", partition_ok))

    certified = True
    count = 0
    for params, res in zip(draws, results):
        if res.csym is None or count >= 100:
            continue
        count += 1
        c = csym_matrix(res.csym)
        sub = extension_subspace(params)
        if intersection_dim(map_subspace(c, sub), sub) != 2:
            certified = False
            break
    checks.append(("certificates map the extension subspace onto itself", certified))
    return checks


def _cmd_examples(args: argparse.Namespace) -> int:
    suites = {
        "sec51": _suite_degenerate_family,
        "sec52": _suite_wholeline_separation,
        "sec53": _suite_zero_partition,
    }
    checks = suites[args.name]()
    exit_code = 0
    for name, ok in checks:
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            exit_code = 1
    return exit_code


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KreinExtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
