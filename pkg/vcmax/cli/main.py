"""
Command-line front end for vcmax.

Every command reads its inputs, calls the library and returns a
CommandResult; ``run`` renders it once and maps the outcome to an exit
status: 0 success, 1 a failed claim, 2 an input error.
"""

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .. import __version__
from ..config import get_config
from ..config.models import OUTPUT_FORMATS
from ..errors import ConsistencyError, InputError, VCMaxError, exit_code_for, format_error, truncate_list
from ..generators import (
    PointSample,
    bounded_size_family,
    halfplane_traces,
    intervals_family,
    parse_point_sample,
    parse_poly_spec,
    polynomial_traces,
    random_family,
    rectangle_traces,
)
from ..genus import (
    boundary_points,
    convex_union_from_genus,
    format_convex_union,
    genus_oracle,
    genus_scan,
    homeomorphic_traces,
    parse_convex_union,
    pattern_avoiding_family,
    pattern_set,
)
from ..genus.models import ConvexUnion
from ..logging import configure_logging, get_logger
from ..maximum import (
    Code,
    all_codes,
    forbidden_codes,
    forbidden_label_table,
    format_label_table,
    is_finitely_characterized,
    is_subsequence,
    load_label_table,
    maximum_verdict,
    reconstruct_from_labels,
    vcm_witness_search,
)
from ..sets import (
    OrderedGround,
    SetFamily,
    estimate_growth_exponent,
    family_trace_oracle,
    parse_family,
    sauer_bound,
    sauer_profile,
    shattered_sets,
    vc_dimension,
)
from ..stability import (
    ClaimReport,
    check_cc,
    check_symdiff_bound,
    check_theorem_tt,
    doubling_ladder_example,
    ladder_dimension,
    one_inclusion_graph,
    search_small_normal_form,
    stable_maximum_normal_form,
    symdiff_family,
    tight_ladder_example,
    verify_distance_law,
)
from .reports import CommandResult, render

logger = get_logger(__name__)

GENERATE_KINDS = ("intervals", "bounded", "halfplane", "poly", "rect", "random",
                  "tight-ladder", "doubling-ladder")
DEFAULT_GRID = "-3,-2,-1,0,1,2,3"
MAX_SEED = 1 << 64
SHOWN_WITNESSES = 10


@dataclass
class RunConfig:
    """One CLI invocation: a command, its inputs and its parameters."""
    command: str
    inputs: Tuple[str, ...] = ()
    kind: Optional[str] = None
    d: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    code: Optional[str] = None
    subset: Optional[str] = None
    base: Optional[str] = None
    seed: Optional[int] = None
    output_format: Optional[str] = None
    strict: bool = False
    cap: Optional[int] = None
    max_witness: Optional[int] = None
    budget: int = 100_000
    sizes: Optional[str] = None
    count: Optional[int] = None
    dimension: int = 2
    spec: Optional[str] = None
    grid: str = DEFAULT_GRID
    distances: bool = False
    search: bool = False
    sampled: bool = False
    samples_per_size: int = 64

    def __post_init__(self):
        self.inputs = tuple(self.inputs)
        defaults = get_config().run
        if self.seed is None:
            self.seed = defaults.seed
        if self.output_format is None:
            self.output_format = defaults.output_format
        if self.output_format not in OUTPUT_FORMATS:
            raise InputError(f"unknown output format {self.output_format!r}")
        if not 0 <= self.seed < MAX_SEED:
            raise InputError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.cap is not None and self.cap <= 0:
            raise InputError(f"--cap must be positive, got {self.cap}")

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        values = {k: v for k, v in vars(ns).items()
                  if k in cls.__dataclass_fields__ and v is not None}
        return cls(**values)


class RunOutcome(NamedTuple):
    status: int
    text: str
    error: Optional[str] = None


# ---------------------------------------------------------------------------
# input helpers


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _input(config: RunConfig, index: int = 0, what: str = "an input file") -> str:
    if len(config.inputs) <= index:
        raise InputError(f"{config.command} needs {what}")
    return config.inputs[index]


def _family(config: RunConfig) -> SetFamily:
    return parse_family(_read(_input(config)))


def _union(config: RunConfig) -> ConvexUnion:
    """The set is given inline, or read from a file when prefixed with '@'."""
    text = _input(config, what="a convex union such as '(0,1)'")
    if text.startswith("@"):
        text = _read(text[1:])
    return parse_convex_union(text)


def _required(config: RunConfig, name: str) -> int:
    value = getattr(config, name)
    if value is None:
        raise InputError(f"{config.command} needs --{name.replace('_', '-')}")
    return value


def _code(config: RunConfig) -> Code:
    if config.code is None:
        raise InputError(f"{config.command} needs --code")
    return Code.parse(config.code)


def _labels(text: Optional[str]) -> List[str]:
    if text is None:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


def _ints(text: str, what: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _grid(text: str) -> List[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--grid must be comma-separated rationals, got {text!r}") from None


def _sample(config: RunConfig, index: int = 0) -> PointSample:
    if len(config.inputs) > index:
        return parse_point_sample(_read(config.inputs[index]))
    if config.count is None:
        raise InputError(f"generate {config.kind} needs a point file or --count")
    return PointSample.random(config.dimension, config.count, seed=config.seed)


def _claim(report: ClaimReport, **extra) -> CommandResult:
    failure = None
    if not report.passed:
        failure = (f"{report.claim}: claim failed with {len(report.violations)} violation(s)"
                   + (f"; {report.notes[0]}" if report.notes else ""))
    return CommandResult({**extra, **report.to_dict()}, passed=report.passed, failure=failure)


# ---------------------------------------------------------------------------
# commands over set families


def _cmd_vc(config: RunConfig) -> CommandResult:
    family = _family(config)
    d = vc_dimension(family)
    witnesses = shattered_sets(family, d)
    return CommandResult({
        "n": family.n,
        "size": len(family),
        "vc": d,
        "shattered_count": len(witnesses),
        "witnesses": [list(w) for w in witnesses[:SHOWN_WITNESSES]],
    })


def _cmd_sauer(config: RunConfig) -> CommandResult:
    if not config.inputs:
        n, d = _required(config, "n"), _required(config, "d")
        return CommandResult({"n": n, "d": d, "bound": sauer_bound(n, d)})
    profile = sauer_profile(_family(config), sampled=config.sampled,
                            samples_per_size=config.samples_per_size, seed=config.seed)
    return CommandResult(profile.to_dict())


def _cmd_maximum(config: RunConfig) -> CommandResult:
    family = _family(config)
    d = _required(config, "d")
    verdict = maximum_verdict(family, d, strict=config.strict)
    failure = None
    if not verdict.is_maximum:
        failure = f"not {d}-maximum: |C|={verdict.size}, expected {verdict.expected_size}"
        if verdict.violation is not None:
            failure += (f"; {verdict.violation_count} traces on {{{', '.join(verdict.violation)}}}"
                        f" where {verdict.violation_expected} are required")
    return CommandResult(verdict.to_dict(), passed=verdict.is_maximum, failure=failure)


def _cmd_labels(config: RunConfig) -> CommandResult:
    table = forbidden_label_table(_family(config), _required(config, "d"))
    return CommandResult(table.to_dict(), text=format_label_table(table))


def _cmd_codes(config: RunConfig) -> CommandResult:
    d = _required(config, "d")
    codes = sorted(forbidden_codes(_family(config), d))
    return CommandResult({"d": d, "codes": [str(c) for c in codes]})


def _cmd_reconstruct(config: RunConfig) -> CommandResult:
    table = load_label_table(_read(_input(config, what="a label table file")))
    family = reconstruct_from_labels(table)
    return CommandResult({"d": table.d, "size": len(family)}, family=family)


def _cmd_characterized(config: RunConfig) -> CommandResult:
    eta = _code(config)
    ok = is_finitely_characterized(_family(config), eta)
    failure = None if ok else f"the family is not characterized by avoiding {eta}"
    return CommandResult({"code": str(eta), "characterized": ok}, passed=ok, failure=failure)


def _cmd_ladder(config: RunConfig) -> CommandResult:
    ld, witness = ladder_dimension(_family(config))
    return CommandResult({"ld": ld, "witness": witness.to_dict()})


def _cmd_graph(config: RunConfig) -> CommandResult:
    family = _family(config)
    payload = one_inclusion_graph(family).to_dict()
    if not config.distances:
        return CommandResult(payload)
    result = _claim(verify_distance_law(family))
    result.payload = {**payload, "distance_law": result.payload}
    return result


def _cmd_symdiff(config: RunConfig) -> CommandResult:
    shift = _labels(config.subset)
    family = symdiff_family(_family(config), shift)
    return CommandResult({"shift": shift}, family=family)


def _cmd_llbound(config: RunConfig) -> CommandResult:
    return _claim(check_symdiff_bound(_family(config), _labels(config.subset)))


def _cmd_cc(config: RunConfig) -> CommandResult:
    return _claim(check_cc(_family(config), _required(config, "d")))


def _cmd_tt(config: RunConfig) -> CommandResult:
    return _claim(check_theorem_tt(_family(config), _required(config, "d")))


def _cmd_normal_form(config: RunConfig) -> CommandResult:
    family = _family(config)
    base = _labels(config.base) if config.base is not None else None
    form = stable_maximum_normal_form(family, base)
    payload = form.to_dict()
    if config.search:
        payload["search"] = search_small_normal_form(family).to_dict()
    failure = None if form.containment else f"containment in [X]^<={form.m} fails"
    return CommandResult(payload, passed=form.containment, failure=failure)


def _cmd_vcm(config: RunConfig) -> CommandResult:
    d = _required(config, "d")
    max_witness = _required(config, "max_witness")
    result = vcm_witness_search(_family(config), d, max_witness,
                                budget=config.budget, seed=config.seed)
    return CommandResult({"d": d, "max_witness": max_witness, **result.to_dict()})


def _cmd_density(config: RunConfig) -> CommandResult:
    if config.sizes is None:
        raise InputError("density needs --sizes, e.g. --sizes 4,8,16")
    family = _family(config)
    estimate = estimate_growth_exponent(family_trace_oracle(family),
                                        _ints(config.sizes, "--sizes"), seed=config.seed)
    return CommandResult(estimate.to_dict())


# ---------------------------------------------------------------------------
# genus commands


def _cmd_genus(config: RunConfig) -> CommandResult:
    union = _union(config)
    scan = genus_scan(union)
    oracle = genus_oracle(union)
    if oracle != scan:
        raise ConsistencyError(f"genus scan {scan} disagrees with the pattern oracle {oracle}")
    return CommandResult({
        "set": format_convex_union(union),
        "boundary_points": [str(p) for p in boundary_points(union)],
        "d": len(scan) - 1,
        "genus": str(scan),
    })


def _cmd_genus_inverse(config: RunConfig) -> CommandResult:
    eta = _code(config)
    union = convex_union_from_genus(eta)
    return CommandResult({"code": str(eta), "set": format_convex_union(union),
                          "genus": str(genus_scan(union))})


def _cmd_patterns(config: RunConfig) -> CommandResult:
    union = _union(config)
    m = _required(config, "m")
    if m < 1:
        raise InputError(f"--m must be positive, got {m}")
    genus = genus_scan(union)
    induced = pattern_set(union, m)
    expected = {c for c in all_codes(m) if not is_subsequence(genus, c)}
    ok = induced == expected
    payload = {
        "set": format_convex_union(union),
        "genus": str(genus),
        "m": m,
        "count": len(induced),
        "patterns": [str(c) for c in sorted(induced)],
        "matches_genus": ok,
    }
    failure = None
    if not ok:
        diff = sorted(str(c) for c in induced.symmetric_difference(expected))
        payload["mismatched"] = diff
        failure = f"pattern set disagrees with genus {genus} on {truncate_list(diff)}"
    return CommandResult(payload, passed=ok, failure=failure)


def _cmd_avoid(config: RunConfig) -> CommandResult:
    eta = _code(config)
    n = _required(config, "n")
    family = pattern_avoiding_family(OrderedGround.chain(n), eta)
    d = len(eta) - 1
    return CommandResult({"code": str(eta), "d": d, "size": len(family),
                          "sauer_bound": sauer_bound(n, d)}, family=family)


def _cmd_homeomorphic(config: RunConfig) -> CommandResult:
    union = _union(config)
    n = _required(config, "n")
    family = homeomorphic_traces(union, OrderedGround.chain(n))
    return CommandResult({"set": format_convex_union(union), "genus": str(genus_scan(union)),
                          "size": len(family)}, family=family)


# ---------------------------------------------------------------------------
# generators


def _generate_intervals(config: RunConfig) -> CommandResult:
    n, k = _required(config, "n"), _required(config, "k")
    family = intervals_family(OrderedGround.chain(n), k)
    return CommandResult({"kind": "intervals", "k": k, "size": len(family)}, family=family)


def _generate_bounded(config: RunConfig) -> CommandResult:
    n, m = _required(config, "n"), _required(config, "m")
    family = bounded_size_family(OrderedGround.chain(n), m)
    return CommandResult({"kind": "bounded", "m": m, "size": len(family)}, family=family)


def _generate_random(config: RunConfig) -> CommandResult:
    n, count = _required(config, "n"), _required(config, "count")
    family = random_family(OrderedGround.chain(n), count, seed=config.seed)
    return CommandResult({"kind": "random", "seed": config.seed, "size": len(family)},
                         family=family)


def _generate_halfplane(config: RunConfig) -> CommandResult:
    traces = halfplane_traces(_sample(config))
    return CommandResult({"kind": "halfplane", **traces.to_dict()}, family=traces.family)


def _generate_poly(config: RunConfig) -> CommandResult:
    if config.spec is None:
        raise InputError("generate poly needs --spec <file>")
    spec = parse_poly_spec(_read(config.spec))
    traces = polynomial_traces(_sample(config), spec, _grid(config.grid), seed=config.seed)
    return CommandResult({"kind": "poly", "d": spec.d, **traces.to_dict()}, family=traces.family)


def _generate_rect(config: RunConfig) -> CommandResult:
    traces = rectangle_traces(_sample(config))
    return CommandResult({"kind": "rect", **traces.to_dict()}, family=traces.family)


def _generate_ladder(build: Callable) -> Callable[[RunConfig], CommandResult]:
    def handler(config: RunConfig) -> CommandResult:
        example = build(_required(config, "n"))
        payload = example.to_dict()
        payload.pop("family")
        return CommandResult({"kind": example.name, **payload}, family=example.family)
    return handler


GENERATORS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "intervals": _generate_intervals,
    "bounded": _generate_bounded,
    "halfplane": _generate_halfplane,
    "poly": _generate_poly,
    "rect": _generate_rect,
    "random": _generate_random,
    "tight-ladder": _generate_ladder(tight_ladder_example),
    "doubling-ladder": _generate_ladder(doubling_ladder_example),
}


def _cmd_generate(config: RunConfig) -> CommandResult:
    handler = GENERATORS.get(config.kind or "")
    if handler is None:
        raise InputError(f"unknown generator {config.kind!r}; choose one of {', '.join(GENERATE_KINDS)}")
    return handler(config)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "vc": _cmd_vc,
    "sauer": _cmd_sauer,
    "maximum": _cmd_maximum,
    "labels": _cmd_labels,
    "codes": _cmd_codes,
    "reconstruct": _cmd_reconstruct,
    "characterized": _cmd_characterized,
    "genus": _cmd_genus,
    "genus-inverse": _cmd_genus_inverse,
    "patterns": _cmd_patterns,
    "avoid": _cmd_avoid,
    "homeomorphic": _cmd_homeomorphic,
    "ladder": _cmd_ladder,
    "graph": _cmd_graph,
    "symdiff": _cmd_symdiff,
    "llbound": _cmd_llbound,
    "cc": _cmd_cc,
    "tt": _cmd_tt,
    "normal-form": _cmd_normal_form,
    "generate": _cmd_generate,
    "vcm": _cmd_vcm,
    "density": _cmd_density,
}


@contextmanager
def _cap_override(cap: Optional[int]):
    caps = get_config().caps
    saved = caps.enumeration
    if cap is not None:
        caps.enumeration = cap
    try:
        yield
    finally:
        caps.enumeration = saved


def run(config: RunConfig) -> RunOutcome:
    """Execute one command and render its report.

    Returns:
        RunOutcome with the exit status, the full stdout text and an
        optional one-line message for stderr.
    """
    handler = COMMANDS.get(config.command)
    if handler is None:
        return RunOutcome(2, "", f"unknown command {config.command!r}; "
                                 f"choose one of {', '.join(COMMANDS)}")
    try:
        with _cap_override(config.cap):
            result = handler(config)
        text = render(config.command, result, config.output_format)
    except VCMaxError as e:
        logger.debug("%s failed", config.command, exc_info=True)
        return RunOutcome(exit_code_for(e), "", f"{config.command}: {format_error(e)}")
    if not result.passed:
        return RunOutcome(1, text, f"{config.command}: {result.failure or 'claim failed'}")
    return RunOutcome(0, text)


# ---------------------------------------------------------------------------
# argument parsing


def _add_family_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("inputs", nargs=1, metavar="FILE", help="family file (.sfam or JSON), '-' for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcmax", description="Maximum VC classes, genus and ladder dimension on finite set systems")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS,
                        help="report format (default from config, json)")
    parser.add_argument("--seed", type=int, help="random seed (default from config, 0)")
    parser.add_argument("--cap", type=int, help="subset-enumeration cap, overrides VCMAX_CAP")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("vc", help="VC dimension with shattered witnesses")
    _add_family_input(p)

    p = sub.add_parser("sauer", help="Sauer profile of a family, or binom(n, <=d) with --n/--d")
    p.add_argument("inputs", nargs="?", metavar="FILE")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--sampled", action="store_true", help="sample k-subsets instead of enumerating")
    p.add_argument("--samples-per-size", type=int)

    p = sub.add_parser("maximum", help="is the family d-maximum")
    _add_family_input(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="check every subset of the ground")

    for name, help_text in (("labels", "forbidden label of every (d+1)-subset"),
                            ("codes", "forbidden codes of a d-maximum family"),
                            ("cc", "size containments of a d-maximum family"),
                            ("tt", "pairwise differences against ladder dimension")):
        p = sub.add_parser(name, help=help_text)
        _add_family_input(p)
        p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("reconstruct", help="rebuild a family from its forbidden-label table")
    p.add_argument("inputs", nargs=1, metavar="TABLE")

    p = sub.add_parser("characterized", help="is the family exactly the avoiders of a code")
    _add_family_input(p)
    p.add_argument("--code", required=True)

    p = sub.add_parser("genus", help="genus of a convex union, e.g. '(0,1)'")
    p.add_argument("inputs", nargs=1, metavar="SET", help="convex union, or @file")

    p = sub.add_parser("genus-inverse", help="a convex union with the given genus")
    p.add_argument("--code", required=True)

    p = sub.add_parser("patterns", help="induced codes of length m")
    p.add_argument("inputs", nargs=1, metavar="SET")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("avoid", help="subsets of the chain 1..n avoiding a code")
    p.add_argument("--code", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("homeomorphic", help="traces on 1..n of all sets shaped like SET")
    p.add_argument("inputs", nargs=1, metavar="SET")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("ladder", help="ladder dimension with a witness")
    _add_family_input(p)

    p = sub.add_parser("graph", help="one-inclusion graph")
    _add_family_input(p)
    p.add_argument("--distances", action="store_true", help="check graph distance = Hamming distance")

    for name, help_text in (("symdiff", "member-wise symmetric difference with a set"),
                            ("llbound", "ladder dimension before and after a symmetric difference")):
        p = sub.add_parser(name, help=help_text)
        _add_family_input(p)
        p.add_argument("--set", dest="subset", required=True, help="comma-separated labels")

    p = sub.add_parser("normal-form", help="C within [X]^<=m shifted by a member")
    _add_family_input(p)
    p.add_argument("--base", help="comma-separated labels of a member")
    p.add_argument("--search", action="store_true", help="also run the conjectural small-base search")

    p = sub.add_parser("generate", help="example families")
    p.add_argument("kind", choices=GENERATE_KINDS)
    p.add_argument("inputs", nargs="?", metavar="POINTS")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--dimension", type=int)
    p.add_argument("--spec", help="polynomial spec file")
    p.add_argument("--grid", help=f"coefficient grid (default {DEFAULT_GRID}); use --grid=...")

    p = sub.add_parser("vcm", help="search a witness subset where the family is d-maximum")
    _add_family_input(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-witness", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("density", help="growth exponent of trace counts")
    _add_family_input(p)
    p.add_argument("--sizes", required=True, help="ascending sizes, e.g. 4,8,16")

    return parser


def _normalize_inputs(ns: argparse.Namespace) -> None:
    inputs = getattr(ns, "inputs", None) or []
    if isinstance(inputs, str):
        inputs = [inputs]
    ns.inputs = tuple(i for i in inputs if i is not None)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _normalize_inputs(ns)

    try:
        configure_logging(ns.log_level)
        config = RunConfig.from_namespace(ns)
    except VCMaxError as e:
        sys.stderr.write(f"{ns.command}: {format_error(e)}\n")
        return exit_code_for(e)

    outcome = run(config)
    if outcome.text:
        sys.stdout.write(outcome.text)
        sys.stdout.flush()
    if outcome.error:
        sys.stderr.write(outcome.error + "\n")
    return outcome.status
