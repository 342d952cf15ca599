"""
CLI entry-point.  Run ``gfc --help``.

Every command prints one canonical JSON document (or a rich table with
``--format table``). Exit codes: 0 success, 1 computation error or oracle
mismatch, 2 malformed input, 3 quaternionic factor, 4 infeasible size.
"""

from __future__ import annotations

import json
import random
import sys
from contextlib import contextmanager
from typing import Any, Iterator, Optional

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table
from tqdm import tqdm
from typer import Argument as Arg
from typer import Exit, colors, secho
from typer import Option as Opt
from typer.models import ArgumentInfo, OptionInfo

from gf_cohomology import __version__
from gf_cohomology.ce import build_wx, weight_zero_complex
from gf_cohomology.classes import char_class_ring, inertia_report, lie_data, vanishing_report
from gf_cohomology.constants import ABSOLUTE, COMPLEX, DEFAULT_JOBS, DEFAULT_MAX_DEGREE, REAL
from gf_cohomology.decompose import Decomposition, Factor, decompose_action, ensure_supported
from gf_cohomology.documents import (
    SCHEMAS,
    ActionDocument,
    BettiTableDocument,
    ComparisonDocument,
    DecompositionDocument,
    E2Entry,
    E2PageDocument,
    InertiaComponentDocument,
    InertiaReportDocument,
    InvariantCountDocument,
    JobConfig,
    RingReportDocument,
    SelfcheckCase,
    SelfcheckDocument,
    betti_entries,
    dump,
    load_input,
)
from gf_cohomology.errors import (
    GFCohomologyError,
    InfeasibleError,
    ModeError,
    OracleMismatch,
    QuaternionicFactorError,
)
from gf_cohomology.invariants import inv_dim_bruteforce, inv_dim_predicted
from gf_cohomology.linalg import BettiTable, cohomology_dims
from gf_cohomology.logger import configure_logging, log
from gf_cohomology.weil import SubalgebraSpec, e2_page, relative_weil, weil_algebra

app = typer.Typer(
    add_completion=False,
    help="Gelfand–Fuchs cohomology, truncated Weil algebras and orbifold characteristic classes.",
    no_args_is_help=True,
)

INPUT_HELP = "Action or decomposition document: a path, or inline JSON starting with '{'."


# --------------------------------------------------------------------------- #
# Helper - unwrap Typer's sentinel objects when commands are called directly
# from Python instead of through the CLI parser.
# --------------------------------------------------------------------------- #
def _unwrap(value: Any) -> Any:  # pragma: no cover
    if isinstance(value, (OptionInfo, ArgumentInfo)):
        return value.default
    return value


def _fail(message: str, code: int) -> None:
    secho(f"❌  {message}", fg=colors.RED, err=True)
    raise Exit(code)


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except (ValidationError, json.JSONDecodeError, FileNotFoundError) as exc:
        _fail(f"invalid input: {exc}", 2)
    except QuaternionicFactorError as exc:
        _fail(str(exc), 3)
    except InfeasibleError as exc:
        _fail(f"infeasible: {exc}", 4)
    except GFCohomologyError as exc:
        _fail(f"{type(exc).__name__}: {exc}", 1)


def _config(command: str, **options: Any) -> JobConfig:
    return JobConfig(command=command, **{k: _unwrap(v) for k, v in options.items()})


def _decomposition(doc: ActionDocument | DecompositionDocument) -> Decomposition:
    if isinstance(doc, DecompositionDocument):
        return doc.to_decomposition()
    return decompose_action(doc.to_action())


# --------------------------------------------------------------------------- #
# Output
# --------------------------------------------------------------------------- #
def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _table(doc: BaseModel) -> Table:
    table = Table(title=type(doc).__name__, show_lines=False)
    table.add_column("field", style="cyan", no_wrap=True)
    table.add_column("value")
    for key, value in doc.model_dump(by_alias=True, mode="json").items():
        if key == "betti" and isinstance(value, list):
            table.add_row(key, "  ".join(f"{q}:{b}" for q, b in enumerate(value)))
        else:
            table.add_row(key, _cell(value))
    return table


def _emit(doc: BaseModel, output_format: str) -> None:
    if output_format == "table":
        Console().print(_table(doc))
    else:
        typer.echo(dump(doc))


# --------------------------------------------------------------------------- #
# Pipelines shared by several commands
# --------------------------------------------------------------------------- #
def _weil_betti(d: Decomposition, mode: str, max_degree: int, jobs: int) -> tuple[BettiTable, list[int], int]:
    ensure_supported(d)
    g, k = lie_data(d, mode)
    bound = 2 * d.dim_v0
    sub = relative_weil(g, k or SubalgebraSpec.zero(g), bound)
    slice_ = sub.complex_slice(max_degree)
    return cohomology_dims(slice_, jobs=jobs), list(slice_.dims), bound


def _weight_zero_betti(d: Decomposition, max_degree: int, jobs: int) -> tuple[BettiTable, list[int], int]:
    ensure_supported(d)
    window = min(max_degree, d.dim_v0)
    L = build_wx(d, window)
    slice_ = weight_zero_complex(L, max_degree)
    return cohomology_dims(slice_, jobs=jobs), list(slice_.dims), window


# --------------------------------------------------------------------------- #
# Commands
# --------------------------------------------------------------------------- #
@app.command()
def decompose(
    input: str = Opt(..., "--input", "-i", help=INPUT_HELP),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
) -> None:
    """Isotypic decomposition of a cyclic action (decomposition documents pass through)."""
    with _exit_codes():
        cfg = _config("decompose", input=input, output_format=output_format)
        d = _decomposition(load_input(cfg.input))
        _emit(DecompositionDocument.of(d), cfg.output_format)


@app.command()
def cohomology(
    input: str = Opt(..., "--input", "-i", help=INPUT_HELP),
    max_degree: int = Opt(DEFAULT_MAX_DEGREE, "--max-degree", "-d", help="Highest degree to compute."),
    mode: str = Opt(ABSOLUTE, "--mode", "-m", help="absolute, relative-gl, relative-so or relative-o."),
    pipeline: str = Opt("weil", "--pipeline", help="weil (truncated Weil algebra) or weight-zero (W_X cochains)."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
    jobs: int = Opt(DEFAULT_JOBS, "--jobs", "-j", help="Worker processes for the rank computations."),
) -> None:
    """Betti numbers of the (relative) truncated Weil algebra or of the weight-zero W_X complex."""
    with _exit_codes():
        cfg = _config("cohomology", input=input, max_degree=max_degree, mode=mode, output_format=output_format, jobs=jobs)
        d = _decomposition(load_input(cfg.input))
        if pipeline == "weil":
            table, dims, bound = _weil_betti(d, cfg.mode, cfg.max_degree, cfg.jobs)
        elif pipeline == "weight-zero":
            if cfg.mode != ABSOLUTE:
                raise ModeError("the weight-zero pipeline computes the absolute cohomology only")
            table, dims, _ = _weight_zero_betti(d, cfg.max_degree, cfg.jobs)
            bound = None
        else:
            _fail(f"unknown pipeline: {pipeline}", 2)
        doc = BettiTableDocument(
            pipeline=pipeline,
            mode=cfg.mode,
            truncation_bound=bound,
            max_degree=cfg.max_degree,
            betti=betti_entries(table),
            dims=dims,
            decomposition=DecompositionDocument.of(d),
        )
        _emit(doc, cfg.output_format)


@app.command()
def oracle(
    input: str = Opt(..., "--input", "-i", help=INPUT_HELP),
    max_degree: int = Opt(DEFAULT_MAX_DEGREE, "--max-degree", "-d", help="Compare degrees 0..max-degree."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
    jobs: int = Opt(DEFAULT_JOBS, "--jobs", "-j", help="Worker processes for the rank computations."),
) -> None:
    """Compare the weight-zero W_X cohomology with the truncated Weil algebra; exit 1 on mismatch."""
    with _exit_codes():
        cfg = _config("oracle", input=input, max_degree=max_degree, output_format=output_format, jobs=jobs)
        d = _decomposition(load_input(cfg.input))
        wx, wx_dims, window = _weight_zero_betti(d, cfg.max_degree, cfg.jobs)
        weil, weil_dims, bound = _weil_betti(d, ABSOLUTE, cfg.max_degree, cfg.jobs)
        match = wx.upto(cfg.max_degree) == weil.upto(cfg.max_degree)
        dec = DecompositionDocument.of(d)
        doc = ComparisonDocument(
            decomposition=dec,
            max_degree=cfg.max_degree,
            weight_window=window,
            weight_zero=BettiTableDocument(
                pipeline="weight-zero", max_degree=cfg.max_degree, betti=betti_entries(wx), dims=wx_dims
            ),
            weil=BettiTableDocument(
                pipeline="weil", truncation_bound=bound, max_degree=cfg.max_degree, betti=betti_entries(weil), dims=weil_dims
            ),
            match=match,
        )
        _emit(doc, cfg.output_format)
        if not match:
            raise OracleMismatch(f"weight-zero {wx.as_strings()} ≠ weil {weil.as_strings()}")


@app.command()
def classes(
    input: str = Opt(..., "--input", "-i", help=INPUT_HELP),
    max_degree: int = Opt(DEFAULT_MAX_DEGREE, "--max-degree", "-d", help="Highest degree to compute."),
    mode: str = Opt(ABSOLUTE, "--mode", "-m", help="absolute, relative-gl, relative-so or relative-o."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
    jobs: int = Opt(DEFAULT_JOBS, "--jobs", "-j", help="Worker processes, one inertia class each."),
) -> None:
    """Characteristic-class rings: one per conjugacy class for actions, one ring for a decomposition."""
    with _exit_codes():
        cfg = _config("classes", input=input, max_degree=max_degree, mode=mode, output_format=output_format, jobs=jobs)
        doc_in = load_input(cfg.input)
        if isinstance(doc_in, DecompositionDocument):
            ring = char_class_ring(doc_in.to_decomposition(), cfg.mode, cfg.max_degree)
            _emit(RingReportDocument.of(ring), cfg.output_format)
            return
        action = doc_in.to_action()
        pairs = inertia_report(action, cfg.mode, cfg.max_degree, jobs=cfg.jobs)
        doc = InertiaReportDocument(
            group_order=sum(c.class_size for c, _ in pairs),
            mode=cfg.mode,
            components=[InertiaComponentDocument.of(c, r) for c, r in pairs],
        )
        _emit(doc, cfg.output_format)


@app.command()
def invariants(
    r: int = Opt(..., "--r", help="Number of V₀ vectors."),
    s: int = Opt(..., "--s", help="Number of quadratic vector fields."),
    dim_v0: int = Opt(..., "--dim-v0", help="dim V₀."),
    dim_w: int = Opt(..., "--dim-w", help="dim W."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
) -> None:
    """Predicted vs brute-force dimension of the invariant multilinear forms; exit 1 on mismatch."""
    with _exit_codes():
        cfg = _config("invariants", output_format=output_format)
        if min(r, s, dim_v0, dim_w) < 0:
            _fail("r, s, dim-v0 and dim-w must be non-negative", 2)
        predicted = inv_dim_predicted(r, s, dim_v0, dim_w)
        brute = inv_dim_bruteforce(r, s, dim_v0, dim_w)
        doc = InvariantCountDocument(
            r=r, s=s, dim_v0=dim_v0, dim_w=dim_w, predicted=predicted, bruteforce=brute, match=predicted == brute
        )
        _emit(doc, cfg.output_format)
        if not doc.match:
            raise OracleMismatch(f"predicted {predicted} ≠ brute force {brute}")


@app.command()
def e2(
    input: str = Opt(..., "--input", "-i", help=INPUT_HELP),
    max_degree: int = Opt(DEFAULT_MAX_DEGREE, "--max-degree", "-d", help="Highest total degree."),
    mode: str = Opt(ABSOLUTE, "--mode", "-m", help="Only absolute is supported."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
) -> None:
    """E₂ page of the spectral sequence for the truncated Weil algebra, with its Euler characteristic."""
    with _exit_codes():
        cfg = _config("e2", input=input, max_degree=max_degree, mode=mode, output_format=output_format)
        if cfg.mode != ABSOLUTE:
            raise ModeError("the E2 page is reported for the absolute Weil algebra only")
        d = _decomposition(load_input(cfg.input))
        ensure_supported(d)
        g, _ = lie_data(d, ABSOLUTE)
        bound = 2 * d.dim_v0
        page = e2_page(g, bound, cfg.max_degree)
        table, _, _ = _weil_betti(d, ABSOLUTE, cfg.max_degree, 1)
        complete = None not in table.ranks
        doc = E2PageDocument(
            decomposition=DecompositionDocument.of(d),
            truncation_bound=bound,
            max_degree=cfg.max_degree,
            entries=[E2Entry(p=p, q=q, dim=v) for (p, q), v in sorted(page.entries.items())],
            totals=list(page.totals()),
            betti=betti_entries(table),
            euler_e2=page.euler_characteristic,
            euler_betti=table.euler_characteristic if complete else None,
        )
        _emit(doc, cfg.output_format)


@app.command()
def schema(name: str = Arg(..., help=f"One of: {', '.join(SCHEMAS)}.")) -> None:
    """Print the JSON schema of a document type."""
    model = SCHEMAS.get(name)
    if model is None:
        _fail(f"unknown schema: {name}", 2)
    typer.echo(json.dumps(model.model_json_schema(by_alias=True), indent=2, ensure_ascii=False))


# ---- random decompositions ---- #
def _random_decomposition(rng: random.Random) -> Decomposition:
    field = rng.choice([REAL, COMPLEX])
    dim_v0 = rng.randint(0, 2)
    budget = rng.randint(0, 2)
    m_minus1 = 0
    if field == REAL and budget:
        m_minus1 = rng.randint(0, budget)
        budget -= m_minus1
    factors = []
    label = 1
    while budget:
        m = rng.randint(1, budget)
        factors.append(Factor(str(label), m, 2 if field == REAL else 1))
        budget -= m
        label += 1
    return Decomposition(field, dim_v0, m_minus1, tuple(factors))


def _check(d: Decomposition) -> SelfcheckCase:
    doc = DecompositionDocument.of(d)
    try:
        g, _ = lie_data(d, ABSOLUTE)
        weil_algebra(g, 2 * d.dim_v0).complex_slice(4)
    except GFCohomologyError as exc:
        return SelfcheckCase(decomposition=doc, d_squared_zero=False, vanishing=False, message=str(exc))
    report = vanishing_report(d)
    return SelfcheckCase(decomposition=doc, d_squared_zero=True, vanishing=report.all_vanish)


@app.command()
def selfcheck(
    seed: int = Opt(0, "--seed", help="Seed of the random decompositions."),
    samples: int = Opt(8, "--samples", "-n", help="Number of random decompositions."),
    output_format: str = Opt("json", "--format", "-f", help="json or table."),
) -> None:
    """d∘d = 0 and the vanishing bound on random small decompositions; exit 1 when any check fails."""
    with _exit_codes():
        cfg = _config("selfcheck", seed=seed, output_format=output_format)
        rng = random.Random(cfg.seed)
        work = [_random_decomposition(rng) for _ in range(samples)]
        cases = [_check(d) for d in tqdm(work, desc="selfcheck", disable=not sys.stderr.isatty(), leave=False)]
        ok = all(c.d_squared_zero and c.vanishing for c in cases)
        _emit(SelfcheckDocument(seed=cfg.seed, samples=samples, cases=cases, ok=ok), cfg.output_format)
        if not ok:
            raise OracleMismatch("selfcheck failed")


@app.callback()
def _main(
    verbose: int = Opt(0, "--verbose", "-v", count=True, help="-v=info, -vv=debug"),
    version: Optional[bool] = Opt(
        None,
        "--version",
        callback=lambda value: (typer.echo(__version__) or sys.exit(0) if value else None),
        is_eager=True,
        help="Print version and exit.",
    ),
) -> None:
    configure_logging(_unwrap(verbose))
    log.debug("gfc %s", __version__)
