"""
Command-line surface: ``houghton <group> <command> [inputs]``.

Inputs are JSON documents given as file arguments or with ``--in``
(``-`` reads standard input). On success the JSON payload (or DOT text)
is the only thing written to standard output; domain errors exit 1 with
``{"error": code, "detail": ...}`` on standard error and usage errors
exit 2.
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import pydantic

from .brown.monoid import (
    InjectiveMonoidMap,
    cone,
    cone_to_dot,
    cone_to_json,
    le_witness,
    q_fixed_vertex,
    stabilizer_order,
    upper_bound,
)
from .centralizers.describe import centralizer_finite, centralizer_infinite, centralizer_vc, quasi_ufp0_witnesses
from .centralizers.gamma import gamma
from .core.conjugacy import conjugator
from .core.element import INFINITE, Element, compose_all, cycle_type, invert, order
from .core.logger import ReportLogger, format_json_line
from .exceptions import ConfigurationError, ErrorCodes, HoughtonException, ValidationError
from .groups.finite import FiniteSubgroup, closure
from .groups.partition import partition
from .models.config import OracleConfig, ToolkitConfig
from .models.results import CommandResult
from .oracle.verify import RUNS, run_verification
from .utils.validation import require_keys, require_same_arity

logger = logging.getLogger(__name__)

PROG = "houghton"

Handler = Callable[[list[Any], argparse.Namespace, ToolkitConfig], Any]


class UsageError(Exception):
    """Malformed command line detected after argument parsing."""


def bounded_int(low: int, high: Optional[int] = None) -> Callable[[str], int]:
    """argparse type for an integer in [low, high]."""

    def parse(s: str) -> int:
        try:
            value = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer: {s!r}")
        if value < low or (high is not None and value > high):
            bounds = f"{low}..{high}" if high is not None else f">= {low}"
            raise argparse.ArgumentTypeError(f"{value} is not in the range {bounds}")
        return value

    return parse


# ---- inputs and output ----


def _read(source: str) -> tuple[str, str]:
    if source == "-":
        return "<stdin>", sys.stdin.read()
    try:
        return source, Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {source}: {e.strerror}") from e


def _load(name: str, text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(
            f"{name} is not valid JSON: {e.msg}",
            invalid_value=name,
            error_code=ErrorCodes.INVALID_JSON,
        ) from e


def _documents(args: argparse.Namespace) -> list[Any]:
    """JSON documents from ``--in`` options followed by positional files."""
    sources = [*(args.in_files or []), *args.files]
    count = args.inputs
    if count is not None and len(sources) != count:
        raise UsageError(f"expected {count} input document(s), got {len(sources)}")
    if not sources:
        raise UsageError("no input given; pass FILE arguments or --in FILE|-")
    # every source is read before any is parsed so a usage problem wins
    texts = [_read(s) for s in sources]
    return [_load(name, text) for name, text in texts]


def _render(payload: Any, pretty: bool) -> str:
    if isinstance(payload, str):
        return payload.rstrip("\n")
    if pretty:
        return json.dumps(payload, indent=2)
    return format_json_line(payload)


def emit(result: CommandResult, pretty: bool = False) -> None:
    """Write a result to the standard streams."""
    if result.exit_code == 0:
        if result.payload is not None:
            print(_render(result.payload, pretty), file=sys.stdout)
    elif result.error != "usage":
        print(format_json_line(result.error_payload()), file=sys.stderr)


def _subgroup(raw: Any, config: ToolkitConfig) -> FiniteSubgroup:
    return FiniteSubgroup.from_json(raw, cap=config.group_config.closure_cap)


# ---- elements ----


def elem_compose(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    """Compose left to right: the first element is applied first."""
    elements = [Element.from_json(d) for d in docs]
    n = require_same_arity(*(e.n for e in elements))
    return compose_all(n, elements).to_json()


def elem_invert(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return invert(Element.from_json(docs[0])).to_json()


def elem_order(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    value = order(Element.from_json(docs[0]))
    return {"order": "infinite" if value == INFINITE else value}


def elem_phi(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return {"phi": list(Element.from_json(docs[0]).m)}


def elem_cycle_type(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return {"cycle_type": cycle_type(Element.from_json(docs[0])).to_json()}


# ---- conjugacy ----


def conj_test(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    q1, q2 = (Element.from_json(d) for d in docs)
    return {"conjugate": conjugator(q1, q2) is not None}


def conj_find(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    q1, q2 = (Element.from_json(d) for d in docs)
    h = conjugator(q1, q2)
    return {"conjugator": h.to_json() if h is not None else None}


# ---- centralizers ----


def centralizer_finite_cmd(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return centralizer_finite(_subgroup(docs[0], config)).to_json()


def centralizer_element_cmd(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    """A finite-order element is treated as the group it generates."""
    q = Element.from_json(docs[0])
    if q.has_finite_order:
        return centralizer_finite(closure([q], cap=config.group_config.closure_cap)).to_json()
    return centralizer_infinite(q).to_json()


def centralizer_vc_cmd(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    raw = require_keys(docs[0], ("F", "w"), "Virtually cyclic input")
    if not isinstance(raw["F"], list):
        raise ValidationError("F must be a list of elements", field_name="F", error_code=ErrorCodes.INVALID_JSON)
    return centralizer_vc([Element.from_json(f) for f in raw["F"]], Element.from_json(raw["w"])).to_json()


def gamma_cmd(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    graph = gamma(Element.from_json(docs[0]), config.gamma_config)
    return graph.to_dot() if args.dot else graph.to_json()


def partition_cmd(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return partition(_subgroup(docs[0], config)).to_json()


# ---- Brown's poset ----


def brown_le(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    a, b = (InjectiveMonoidMap.from_json(d) for d in docs)
    witness = le_witness(a, b)
    return {"le": witness is not None, "witness": witness.to_json() if witness is not None else None}


def brown_stab(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return {"stabilizer_order": stabilizer_order(InjectiveMonoidMap.from_json(docs[0]))}


def brown_fixed_vertex(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    return q_fixed_vertex(_subgroup(docs[0], config)).to_json()


def brown_upper_bound(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    m, n = (InjectiveMonoidMap.from_json(d) for d in docs[:2])
    return upper_bound(m, n, _subgroup(docs[2], config)).to_json()


def brown_cone(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    depth = args.depth if args.depth is not None else config.brown_config.cone_depth
    graph = cone(InjectiveMonoidMap.from_json(docs[0]), depth)
    return cone_to_dot(graph) if args.dot else cone_to_json(graph)


# ---- oracle and witnesses ----


def oracle_verify(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    """
    Without --out the reports are the output, one JSON line each, printed
    only once every case has matched; with --out they go to the file and
    the summary is printed.
    """
    overrides = {
        k: v for k, v in {"cases": args.cases, "seed": args.seed, "box_depth": args.box_depth}.items() if v is not None
    }
    oracle_config = OracleConfig(**{**config.oracle_config.model_dump(), **overrides})
    held = None if args.out else io.StringIO()
    reports = ReportLogger(
        output_path=args.out,
        config=config.logging_config.model_copy(update={"format": "jsonl"}),
        stream=held,
    )
    with reports:
        summary = run_verification(
            args.kinds or sorted(RUNS), oracle_config.cases, oracle_config.seed, oracle_config, reports
        )
    if not summary.all_match:
        return CommandResult.failure_result(ErrorCodes.ORACLE_MISMATCH, {"failures": summary.failures})
    return held.getvalue() if held is not None else summary.model_dump()


def witnesses_quasi_ufp0(docs: list[Any], args: argparse.Namespace, config: ToolkitConfig) -> Any:
    """Pairwise non-conjugate subgroups of order 2."""
    return [group.to_json() for group in quasi_ufp0_witnesses(args.count, args.arity)]


# ---- parser ----


def _command(
    group: argparse._SubParsersAction,
    name: str,
    handler: Handler,
    summary: str,
    inputs: Optional[int] = None,
    takes_input: bool = True,
) -> argparse.ArgumentParser:
    """Register one leaf command; ``inputs`` fixes the number of documents."""
    parser = group.add_parser(name, help=summary, description=summary)
    if takes_input:
        parser.add_argument("files", nargs="*", metavar="FILE", help="Input JSON file")
        parser.add_argument(
            "--in", dest="in_files", action="append", metavar="FILE", help="Input JSON file, - for stdin"
        )
    parser.set_defaults(handler=handler, inputs=inputs, takes_input=takes_input, command_parser=parser)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG, description="Centralizers, conjugacy and Brown's poset for Houghton's groups H_n."
    )
    parser.add_argument("--pretty", action="store_true", help="Indent JSON output")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    groups = parser.add_subparsers(dest="group", metavar="GROUP", required=True)

    elem = groups.add_parser("elem", help="Element arithmetic").add_subparsers(dest="command", required=True)
    _command(elem, "compose", elem_compose, "Compose elements; the first is applied first")
    _command(elem, "invert", elem_invert, "Inverse element", inputs=1)
    _command(elem, "order", elem_order, "Order, or infinite", inputs=1)
    _command(elem, "phi", elem_phi, "Translation lengths per ray", inputs=1)
    _command(elem, "cycle-type", elem_cycle_type, "Cycle type of a finite-order element", inputs=1)

    conj = groups.add_parser("conj", help="Conjugacy of finite-order elements").add_subparsers(
        dest="command", required=True
    )
    _command(conj, "test", conj_test, "Whether two elements are conjugate", inputs=2)
    _command(conj, "find", conj_find, "A conjugator h with h q1 h^-1 = q2", inputs=2)

    cent = groups.add_parser("centralizer", help="Direct-product descriptions of centralizers").add_subparsers(
        dest="command", required=True
    )
    _command(cent, "finite", centralizer_finite_cmd, 'Centralizer of a finite subgroup {"n", "generators"}', inputs=1)
    _command(cent, "element", centralizer_element_cmd, "Centralizer of one element", inputs=1)
    _command(cent, "vc", centralizer_vc_cmd, 'Centralizer of <F, w> from {"F": [...], "w": element}', inputs=1)

    _command(groups, "gamma", gamma_cmd, "Γ-graph of an infinite-order element", inputs=1).add_argument(
        "--dot", action="store_true", help="Emit DOT instead of JSON"
    )
    _command(groups, "partition", partition_cmd, "Isotropy partition of S_Q", inputs=1)

    brown = groups.add_parser("brown", help="Brown's monoid and poset").add_subparsers(dest="command", required=True)
    _command(brown, "le", brown_le, "Poset relation with its translation witness", inputs=2)
    _command(brown, "stab", brown_stab, "Stabilizer order of a vertex", inputs=1)
    _command(brown, "fixed-vertex", brown_fixed_vertex, "A vertex fixed by a finite subgroup", inputs=1)
    _command(brown, "upper-bound", brown_upper_bound, "Inputs: vertex m, vertex n, subgroup Q", inputs=3)
    cone_parser = _command(brown, "cone", brown_cone, "Hasse diagram above a vertex", inputs=1)
    cone_parser.add_argument("--depth", type=bounded_int(0, 8), default=None, help="Total translation degree")
    cone_parser.add_argument("--dot", action="store_true", help="Emit the Hasse diagram as DOT")

    oracle = groups.add_parser("oracle", help="Brute-force verification on finite boxes").add_subparsers(
        dest="command", required=True
    )
    verify = _command(oracle, "verify", oracle_verify, "Compare predictions with brute force", takes_input=False)
    verify.add_argument("--cases", type=bounded_int(1), default=None, help="Cases per run")
    verify.add_argument("--seed", type=bounded_int(0), default=None, help="Base seed")
    verify.add_argument(
        "--box",
        dest="box_depth",
        type=bounded_int(1, 12),
        default=None,
        help="Box depth N for the centralizer runs; conjugacy pairs always use the 2 x (enumeration_limit // 2) box",
    )
    verify.add_argument(
        "--kind", dest="kinds", action="append", choices=sorted(RUNS), help="Runs to perform (default all)"
    )
    verify.add_argument("--out", type=Path, default=None, help="JSON lines report file")

    witnesses = groups.add_parser("witnesses", help="Witness families").add_subparsers(dest="command", required=True)
    ufp = _command(
        witnesses, "quasi-ufp0", witnesses_quasi_ufp0, "Pairwise non-conjugate subgroups", takes_input=False
    )
    ufp.add_argument("--count", type=bounded_int(1), default=10, help="Number of subgroups")
    ufp.add_argument("--n", dest="arity", type=bounded_int(2), default=2, help="Arity of H_n")
    return parser


# ---- entry points ----


def _execute(args: argparse.Namespace, config: ToolkitConfig) -> CommandResult:
    try:
        docs = _documents(args) if args.takes_input else []
        outcome = args.handler(docs, args, config)
    except UsageError as e:
        args.command_parser.print_usage(sys.stderr)
        print(f"{args.command_parser.prog}: error: {e}", file=sys.stderr)
        return CommandResult.usage_result(str(e))
    except HoughtonException as e:
        logger.debug("domain error: %r", e)
        return CommandResult.failure_result(e.error_code or ErrorCodes.INTERNAL_ERROR, e.message)
    except pydantic.ValidationError as e:
        detail = e.errors(include_url=False, include_context=False)
        return CommandResult.failure_result(ErrorCodes.INVALID_ELEMENT, detail)
    return outcome if isinstance(outcome, CommandResult) else CommandResult.success_result(outcome)


def run(argv: Sequence[str]) -> CommandResult:
    """
    Execute one command line and return its result; output has been
    written to the standard streams by the time this returns.
    """
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as e:
        # argparse has already printed help or the usage error
        if e.code == 0:
            return CommandResult.success_result(None)
        return CommandResult.usage_result("invalid command line")

    try:
        config = ToolkitConfig.from_env()
    except ConfigurationError as e:
        result = CommandResult.failure_result(e.error_code or ErrorCodes.INVALID_CONFIG, e.message)
        emit(result, args.pretty)
        return result
    level = logging.DEBUG if args.verbose else getattr(logging, config.logging_config.level)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    result = _execute(args, config)
    emit(result, args.pretty)
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv).exit_code


if __name__ == "__main__":
    raise SystemExit(main())
