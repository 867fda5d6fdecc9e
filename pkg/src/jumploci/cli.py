"""Command-line interface: reproducible, machine-readable invariant reports.

Subcommands:

    alex FILE            Alexander matrix, requested elementary ideals, the
                         Alexander polynomial, and a sampled almost-principality
                         consistency report.
    charvar FILE CHI     Jump-locus membership of a finite-order character,
                         answered independently by the rank formula and by
                         ideal vanishing, with an agreement flag.
    classify FILE        Malcev classification of a rational 3-form.
    brieskorn SPEC       Seifert data, torsion data, component counts,
                         formality and tangent-cone verdict for a Brieskorn
                         link; SPEC is `a1,a2,...` or `sweep --max A --n N`.
    holonomy FILE        Graded holonomy Lie algebra ranks up to --degree.

Presentation files hold either the `< x, y | ... >` grammar or JSON
{"generators": [...], "relators": [...]}.  3-form files hold JSON
{"n": N, "terms": [{"i":, "j":, "k":, "c":}]} with 1-based indices and
integer or "p/q" coefficients.  Holonomy input accepts the 3-form shape or
{"n": N, "relations": [[...]]} with wedge coordinates in lexicographic pair
order.  Characters are written `m:e1,e2,...`.

Randomized subroutines (character sampling, large-n genericity fallback)
always echo their seed and trial count; output is byte-identical for a fixed
(input, seed, config) triple.  Exit codes: 0 success, 2 malformed input
(with a structured error record on stderr), 1 other failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .alexander import (
    alexander_matrix,
    alexander_polynomial,
    almost_principal_sampled,
    elementary_ideal,
    ideal_vanishes_at,
    in_vd,
    twisted_h1_dim,
)
from .holonomy import DEFAULT_DEGREE_CAP, QuadraticData, holonomy_from_threeform, lie_ranks
from .laurent import Character, poly_to_string
from .presentation import (
    PresentationParseError,
    format_word,
    parse_presentation,
    presentation_from_json,
)
from .resonance import MalcevKind, ThreeForm, classify_malcev, r1_fullness
from .seifert import (
    IntegralityError,
    brieskorn_seifert,
    integer_obstruction,
    is_one_formal_link,
    sweep,
    tangent_cone_report,
    torsion_data,
    v1_components,
)

__all__ = ["main", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 100
    symbolic_threshold: int = 9
    degree_cap: int = DEFAULT_DEGREE_CAP
    output_format: str = "json"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.symbolic_threshold < 1 or self.degree_cap < 1:
            raise ValueError("thresholds must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError("format must be json, csv, or text")

    def as_dict(self):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "symbolic_threshold": self.symbolic_threshold,
            "degree_cap": self.degree_cap,
            "format": self.output_format,
        }


def _frac_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_rational(value):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"expected integer or 'p/q' string, got {value!r}")


# ---------------------------------------------------------------------------
# input loading
# ---------------------------------------------------------------------------

def load_presentation(path):
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return presentation_from_json(json.loads(text))
    return parse_presentation(text)


def threeform_from_json(obj):
    n = int(obj["n"])
    coeffs = {}
    for term in obj.get("terms", []):
        key = (int(term["i"]) - 1, int(term["j"]) - 1, int(term["k"]) - 1)
        coeffs[key] = coeffs.get(key, Fraction(0)) + _parse_rational(term["c"])
    return ThreeForm(n, coeffs)


def load_threeform(path):
    return threeform_from_json(json.loads(Path(path).read_text()))


def load_holonomy_input(path):
    obj = json.loads(Path(path).read_text())
    if "relations" in obj:
        n = int(obj["n"])
        rels = tuple(tuple(_parse_rational(c) for c in row) for row in obj["relations"])
        return QuadraticData(n=n, relations=rels)
    return holonomy_from_threeform(threeform_from_json(obj))


def parse_character(text):
    """Parse `m:e1,e2,...` into a Character."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError("character spec must look like 'm:e1,e2,...'")
    order = int(head)
    exps = tuple(int(e) for e in tail.split(",")) if tail.strip() else ()
    return Character(order=order, exponents=exps)


# ---------------------------------------------------------------------------
# report builders
# ---------------------------------------------------------------------------

def run_alex(p, config, ideal_ds=(1,)):
    a = alexander_matrix(p)
    delta = alexander_polynomial(a)
    delta_str = poly_to_string(delta)
    ideals = []
    for d in sorted(set(ideal_ds)):
        e = elementary_ideal(a, d)
        ideals.append(
            {
                "d": d,
                "generators": [poly_to_string(g) for g in e.generators],
                "delta": delta_str,
                "truncated": e.truncated,
            }
        )
    if a.num_vars >= 1:
        rep = almost_principal_sampled(a, config.trials, config.seed)
        almost = {
            "trials": rep.trials,
            "seed": rep.seed,
            "orders": list(rep.orders),
            "counterexamples": [str(chi) for chi in rep.counterexamples],
            "consistent": rep.consistent,
        }
    else:
        almost = None
    return {
        "command": "alex",
        "generators": list(p.generator_names),
        "relators": [format_word(r, p.generator_names) for r in p.relators],
        "b1": a.abelianization.b1,
        "torsion": list(a.abelianization.torsion),
        "matrix": [[poly_to_string(e) for e in row] for row in a.entries],
        "delta": delta_str,
        "ideals": ideals,
        "almost_principal": almost,
        "config": config.as_dict(),
    }


def run_charvar(p, chi, d, config):
    rank_based = in_vd(p, chi, d)
    a = alexander_matrix(p)
    ideal = elementary_ideal(a, d)
    ideal_based = ideal_vanishes_at(ideal, chi)
    return {
        "command": "charvar",
        "character": {"order": chi.order, "exponents": list(chi.exponents)},
        "d": d,
        "twisted_h1_dim": twisted_h1_dim(p, chi),
        "rank_based": rank_based,
        "ideal_based": ideal_based,
        "agree": rank_based == ideal_based,
        "config": config.as_dict(),
    }


def run_classify(eta, config):
    verdict = classify_malcev(
        eta,
        symbolic_threshold=config.symbolic_threshold,
        trials=config.trials,
        seed=config.seed,
    )
    out = {
        "command": "classify",
        "n": eta.n,
        "class": verdict.kind.value,
        "corank": verdict.corank,
        "isotropy_index": verdict.isotropy_index,
        "decided_by": verdict.decided_by,
        "reason": verdict.reason,
        "config": config.as_dict(),
    }
    if verdict.kind is MalcevKind.FREE:
        out["rank"] = verdict.rank
    if verdict.kind is MalcevKind.Z_X_SURFACE:
        out["g"] = verdict.genus
    if not eta.is_zero and eta.n % 2 == 1 and eta.n > 3:
        rep = r1_fullness(eta, config.symbolic_threshold, config.trials, config.seed)
        out["genericity_mode"] = {
            "mode": rep.mode,
            "trials": rep.trials,
            "seed": rep.seed,
        }
    else:
        out["genericity_mode"] = None
    return out


def _brieskorn_record(exps, s, t, comps, tc):
    return {
        "exponents": list(exps),
        "orbits": [[o.alpha, o.beta, o.multiplicity] for o in s.orbits],
        "g": s.genus,
        "e": _frac_str(s.euler),
        "b": integer_obstruction(s),
        "torsion": {
            "T": t.torsion_order,
            "ord_h": t.fiber_class_order,
            "alpha": t.alpha,
        },
        "components": comps.positive_dim_count,
        "dim": comps.component_dim,
        "translated": comps.translated_count,
        "includes_identity": comps.includes_identity_component,
        "one_formal": is_one_formal_link(s),
        "tangent_cone": {
            "germ": "identity" if tc.germ_is_identity_only else "torus",
            "germ_dim": tc.germ_torus_dim,
            "r1_dim": tc.r1_dim,
            "holds": tc.formula_holds,
        },
    }


def run_brieskorn(exps, config):
    s = brieskorn_seifert(exps)
    record = _brieskorn_record(
        exps, s, torsion_data(s), v1_components(s), tangent_cone_report(s)
    )
    record["command"] = "brieskorn"
    record["config"] = config.as_dict()
    return record


def run_brieskorn_sweep(max_exponent, n, config):
    rows = []
    for item in sweep(max_exponent, n):
        s = item["seifert"]
        rows.append(
            _brieskorn_record(
                item["exponents"], s, item["torsion"], item["components"],
                item["tangent_cone"],
            )
        )
    return {
        "command": "brieskorn-sweep",
        "max_exponent": max_exponent,
        "n": n,
        "rows": rows,
        "config": config.as_dict(),
    }


def run_holonomy(data, degree, config):
    ranks = lie_ranks(data, degree, degree_cap=config.degree_cap)
    return {
        "command": "holonomy",
        "n": data.n,
        "num_relations": len(data.relations),
        "degree": degree,
        "ranks": list(ranks.ranks),
        "config": config.as_dict(),
    }


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _flatten(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_flatten(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            lines.extend(_flatten(v, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]} = {obj}")
    return lines


def render_text(obj):
    return "\n".join(_flatten(obj)) + "\n"


SWEEP_COLUMNS = [
    "exponents",
    "orbits",
    "g",
    "e",
    "b",
    "T",
    "ord_h",
    "alpha",
    "components",
    "dim",
    "translated",
    "includes_identity",
    "one_formal",
    "tc_holds",
]


def render_sweep_csv(report):
    lines = [",".join(SWEEP_COLUMNS)]
    for row in report["rows"]:
        orbit_str = ";".join(
            f"({o[0]}:{o[1]})x{o[2]}" for o in row["orbits"]
        )
        cells = [
            " ".join(str(a) for a in row["exponents"]),
            orbit_str,
            str(row["g"]),
            row["e"],
            str(row["b"]),
            str(row["torsion"]["T"]),
            str(row["torsion"]["ord_h"]),
            str(row["torsion"]["alpha"]),
            str(row["components"]),
            str(row["dim"]),
            str(row["translated"]),
            str(row["includes_identity"]).lower(),
            str(row["one_formal"]).lower(),
            str(row["tangent_cone"]["holds"]).lower(),
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def render(report, config):
    if config.output_format == "json":
        return render_json(report)
    if config.output_format == "text":
        return render_text(report)
    if report.get("command") == "brieskorn-sweep":
        return render_sweep_csv(report)
    raise ValueError("csv output is only available for brieskorn sweeps")


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="jumploci",
        description="Exact invariants of 3-manifold groups and Brieskorn links.",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    parser.add_argument("--trials", type=int, default=100, help="sample count")
    parser.add_argument(
        "--symbolic-threshold", type=int, default=9,
        help="max odd n decided by symbolic sub-Pfaffians",
    )
    parser.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p_alex = sub.add_parser("alex", help="Alexander matrix, ideals, polynomial")
    p_alex.add_argument("file")
    p_alex.add_argument(
        "--ideal-d", type=int, action="append", default=None,
        help="elementary ideal depth (repeatable; default 1)",
    )

    p_cv = sub.add_parser("charvar", help="jump-locus membership of a character")
    p_cv.add_argument("file")
    p_cv.add_argument("character", help="character spec m:e1,e2,...")
    p_cv.add_argument("--d", type=int, default=1)

    p_cl = sub.add_parser("classify", help="Malcev classification of a 3-form")
    p_cl.add_argument("file")

    p_br = sub.add_parser("brieskorn", help="Brieskorn link invariants")
    p_br.add_argument("spec", help="exponent list a1,a2,... or the word 'sweep'")
    p_br.add_argument("--max", type=int, default=12, help="sweep exponent bound")
    p_br.add_argument("--n", type=int, default=3, help="sweep tuple length")

    p_h = sub.add_parser("holonomy", help="graded holonomy Lie algebra ranks")
    p_h.add_argument("file")
    p_h.add_argument("--degree", type=int, default=4)

    return parser


def _dispatch(args, config):
    if args.command == "alex":
        ds = args.ideal_d if args.ideal_d else [1]
        if any(d < 0 for d in ds):
            raise ValueError("ideal depth must be non-negative")
        return run_alex(load_presentation(args.file), config, ds)
    if args.command == "charvar":
        p = load_presentation(args.file)
        chi = parse_character(args.character)
        return run_charvar(p, chi, args.d, config)
    if args.command == "classify":
        return run_classify(load_threeform(args.file), config)
    if args.command == "brieskorn":
        if args.spec == "sweep":
            return run_brieskorn_sweep(args.max, args.n, config)
        exps = tuple(int(a) for a in args.spec.split(","))
        return run_brieskorn(exps, config)
    if args.command == "holonomy":
        data = load_holonomy_input(args.file)
        return run_holonomy(data, args.degree, config)
    raise ValueError(f"unknown command {args.command!r}")


def _error_record(err_type, message, offset=None):
    return {"error": {"type": err_type, "message": message, "offset": offset}}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            seed=args.seed,
            trials=args.trials,
            symbolic_threshold=args.symbolic_threshold,
            degree_cap=args.degree_cap,
            output_format=args.format,
        )
    except ValueError as exc:
        sys.stderr.write(render_json(_error_record("config", str(exc))))
        return 2
    try:
        report = _dispatch(args, config)
    except PresentationParseError as exc:
        sys.stderr.write(render_json(_error_record("parse", exc.message, exc.offset)))
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(render_json(_error_record("io", str(exc))))
        return 2
    except (json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(render_json(_error_record("parse", str(exc))))
        return 2
    except IntegralityError as exc:
        sys.stderr.write(render_json(_error_record("integrality", str(exc))))
        return 1
    except (ValueError, IndexError) as exc:
        sys.stderr.write(render_json(_error_record("value", str(exc))))
        return 1
    try:
        rendered = render(report, config)
    except ValueError as exc:
        sys.stderr.write(render_json(_error_record("value", str(exc))))
        return 1
    sys.stdout.write(rendered)
    return 0


if __name__ == "__main__":
    sys.exit(main())
