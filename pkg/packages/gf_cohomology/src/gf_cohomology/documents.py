"""
Versioned JSON documents exchanged by the CLI.

Every document carries ``schema_version``; rationals travel as ``"p/q"``
strings, Betti entries outside the computed window as ``"unknown"``. Output
is produced with :func:`dump`, which keeps model field order and two-space
indentation so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
import pathlib
from typing import Annotated, Literal, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, StringConstraints, model_validator

from gf_cohomology.classes import ClassLabel, RingReport, VanishingReport
from gf_cohomology.constants import ABSOLUTE, DEFAULT_JOBS, DEFAULT_MAX_DEGREE, SCHEMA_VERSION
from gf_cohomology.decompose import (
    Decomposition,
    Factor,
    GroupAction,
    InertiaComponent,
    Matrix,
    as_matrix,
    hypothesis_note,
)
from gf_cohomology.errors import DecompositionError
from gf_cohomology.linalg import BettiTable, format_rational

__all__ = [
    "JobConfig",
    "ActionDocument",
    "DecompositionDocument",
    "BettiTableDocument",
    "ComparisonDocument",
    "RingReportDocument",
    "InertiaReportDocument",
    "InvariantCountDocument",
    "E2PageDocument",
    "SelfcheckDocument",
    "SCHEMAS",
    "load_input",
    "dump",
]


def _int_to_str(value: object) -> object:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


RationalStr = Annotated[
    str, BeforeValidator(_int_to_str), StringConstraints(pattern=r"^-?\d+(/[1-9]\d*)?$")
]
BettiEntry = Union[int, Literal["unknown"]]
Field_ = Literal["real", "complex"]
Mode = Literal["absolute", "relative-gl", "relative-so", "relative-o"]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    schema_version: Literal["1"] = SCHEMA_VERSION


# ----------------------------------------------------------------------- #
#  Configuration                                                           #
# ----------------------------------------------------------------------- #
class JobConfig(BaseModel):
    """Options of one CLI invocation, validated before any work starts."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["decompose", "cohomology", "oracle", "classes", "invariants", "e2", "selfcheck"]
    input: str | None = None
    max_degree: int = Field(DEFAULT_MAX_DEGREE, ge=0)
    mode: Mode = ABSOLUTE
    output_format: Literal["json", "table"] = "json"
    jobs: int = Field(DEFAULT_JOBS, ge=1)
    seed: int | None = None


# ----------------------------------------------------------------------- #
#  Inputs                                                                  #
# ----------------------------------------------------------------------- #
class CyclicGroup(BaseModel):
    model_config = ConfigDict(extra="forbid")
    cyclic: int = Field(ge=1)


class MatrixGroup(BaseModel):
    model_config = ConfigDict(extra="forbid")
    matrices: list[list[list[RationalStr]]] = Field(min_length=1)


class EigenData(BaseModel):
    model_config = ConfigDict(extra="forbid")
    plus1: int = Field(0, ge=0)
    minus1: int = Field(0, ge=0)
    rotations: list[int] = Field(default_factory=list)


class ActionDocument(_Document):
    """A finite group acting linearly: weights (complex), eigen/rotation data, a generator or matrices."""

    field: Field_
    group: CyclicGroup | MatrixGroup
    weights: list[int] | None = None
    eigen: EigenData | None = None
    generator: list[list[RationalStr]] | None = None

    def to_action(self) -> GroupAction:
        if isinstance(self.group, MatrixGroup):
            return GroupAction(field=self.field, matrices=tuple(as_matrix(m) for m in self.group.matrices))
        n = self.group.cyclic
        if self.weights is not None:
            return GroupAction(field=self.field, order=n, weights=tuple(self.weights))
        if self.generator is not None:
            return GroupAction(field=self.field, order=n, generator=as_matrix(self.generator))
        eigen = self.eigen or EigenData()
        return GroupAction(
            field=self.field, order=n, plus1=eigen.plus1, minus1=eigen.minus1, rotations=tuple(eigen.rotations)
        )


class FactorDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    label: str
    multiplicity: int = Field(ge=1)
    dimension: int = Field(ge=1)
    type: Literal["complex", "quaternionic"] = "complex"


class DecompositionDocument(_Document):
    field: Field_
    dim_v0: int = Field(ge=0, alias="dimV0")
    m_minus1: int = Field(0, ge=0, alias="mMinus1")
    factors: list[FactorDocument] = Field(default_factory=list)
    order: int | None = Field(None, ge=1)
    source: Literal["cyclic", "supplied"] = "cyclic"

    @model_validator(mode="after")
    def _consistent(self) -> "DecompositionDocument":
        try:
            self.to_decomposition()
        except DecompositionError as exc:
            raise ValueError(str(exc)) from exc
        return self

    @classmethod
    def of(cls, d: Decomposition) -> "DecompositionDocument":
        return cls(
            field=d.field,
            dim_v0=d.dim_v0,
            m_minus1=d.m_minus1,
            factors=[FactorDocument(label=f.label, multiplicity=f.multiplicity, dimension=f.dimension, type=f.kind) for f in d.factors],
            order=d.order,
            source="cyclic" if d.source == "cyclic" else "supplied",
        )

    def to_decomposition(self) -> Decomposition:
        return Decomposition(
            field=self.field,
            dim_v0=self.dim_v0,
            m_minus1=self.m_minus1,
            factors=tuple(Factor(f.label, f.multiplicity, f.dimension, f.type) for f in self.factors),
            order=self.order,
            source=self.source,
        )


# ----------------------------------------------------------------------- #
#  Outputs                                                                 #
# ----------------------------------------------------------------------- #
def betti_entries(table: BettiTable) -> list[BettiEntry]:
    return ["unknown" if r is None else r for r in table.ranks]


class BettiTableDocument(_Document):
    pipeline: Literal["weil", "weight-zero", "ce"]
    mode: Mode = ABSOLUTE
    truncation_bound: int | None = None
    max_degree: int
    betti: list[BettiEntry]
    dims: list[int] = Field(default_factory=list)
    decomposition: DecompositionDocument | None = None
    notes: list[str] = Field(default_factory=list)


class ComparisonDocument(_Document):
    decomposition: DecompositionDocument
    max_degree: int
    weight_window: int
    weight_zero: BettiTableDocument
    weil: BettiTableDocument
    match: bool


class ClassLabelDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    name: str
    degree: int
    kind: str
    block: str = ""
    filtration: int | None = None
    e_infinity: tuple[int, int] | None = None
    corner: bool = False
    representative: str | None = None

    @classmethod
    def of(cls, c: ClassLabel) -> "ClassLabelDocument":
        return cls(
            name=c.name,
            degree=c.degree,
            kind=c.kind,
            block=c.block,
            filtration=c.filtration,
            e_infinity=c.e_infinity,
            corner=c.corner,
            representative=c.representative,
        )


class VanishingDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    bound: int
    monomials: list[str]
    all_vanish: bool
    nonzero_before_truncation: list[str]

    @classmethod
    def of(cls, v: VanishingReport) -> "VanishingDocument":
        return cls(
            bound=v.bound,
            monomials=list(v.monomials),
            all_vanish=v.all_vanish,
            nonzero_before_truncation=list(v.nonzero_before_truncation),
        )


class RingReportDocument(_Document):
    label: str
    mode: Mode
    truncation_bound: int
    decomposition: DecompositionDocument
    generators: list[ClassLabelDocument]
    betti: list[BettiEntry]
    classes: list[ClassLabelDocument]
    vanishing: VanishingDocument | None = None
    hypothesis_note: str | None = None
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def of(cls, r: RingReport) -> "RingReportDocument":
        return cls(
            label=r.label,
            mode=r.mode,
            truncation_bound=r.truncation_bound,
            decomposition=DecompositionDocument.of(r.decomposition),
            generators=[ClassLabelDocument.of(g) for g in r.generators],
            betti=betti_entries(r.betti),
            classes=[ClassLabelDocument.of(c) for c in r.classes],
            vanishing=VanishingDocument.of(r.vanishing) if r.vanishing else None,
            hypothesis_note=hypothesis_note(r.decomposition),
            notes=list(r.notes),
        )


def _matrix_strings(m: Matrix | None) -> list[list[str]] | None:
    return None if m is None else [[format_rational(x) for x in row] for row in m]


class InertiaComponentDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    label: str
    order: int
    class_size: int
    centralizer_order: int
    fixed_dim: int
    representative: list[list[RationalStr]] | None = None
    power: int | None = None
    decomposition: DecompositionDocument
    ring: RingReportDocument | None = None

    @classmethod
    def of(cls, c: InertiaComponent, ring: RingReport | None = None) -> "InertiaComponentDocument":
        return cls(
            label=c.label,
            order=c.order,
            class_size=c.class_size,
            centralizer_order=c.centralizer_order,
            fixed_dim=c.fixed_dim,
            representative=_matrix_strings(c.representative),
            power=c.power,
            decomposition=DecompositionDocument.of(c.decomposition),
            ring=RingReportDocument.of(ring) if ring else None,
        )


class InertiaReportDocument(_Document):
    group_order: int
    mode: Mode
    components: list[InertiaComponentDocument]


class InvariantCountDocument(_Document):
    r: int
    s: int
    dim_v0: int = Field(alias="dimV0")
    dim_w: int = Field(alias="dimW")
    predicted: int
    bruteforce: int
    match: bool


class E2Entry(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    p: int
    q: int
    dim: int


class E2PageDocument(_Document):
    decomposition: DecompositionDocument
    truncation_bound: int
    max_degree: int
    entries: list[E2Entry]
    totals: list[int]
    betti: list[BettiEntry]
    euler_e2: int
    euler_betti: int | None


class SelfcheckCase(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)
    decomposition: DecompositionDocument
    d_squared_zero: bool
    vanishing: bool
    message: str | None = None


class SelfcheckDocument(_Document):
    seed: int
    samples: int
    cases: list[SelfcheckCase]
    ok: bool


SCHEMAS: dict[str, type[BaseModel]] = {
    "action": ActionDocument,
    "decomposition": DecompositionDocument,
    "betti": BettiTableDocument,
    "comparison": ComparisonDocument,
    "ring": RingReportDocument,
    "inertia": InertiaReportDocument,
    "invariants": InvariantCountDocument,
    "e2": E2PageDocument,
    "selfcheck": SelfcheckDocument,
    "config": JobConfig,
}


# ----------------------------------------------------------------------- #
#  I/O                                                                     #
# ----------------------------------------------------------------------- #
def load_input(source: str) -> ActionDocument | DecompositionDocument:
    """Inline JSON (starting with ``{``) or a path; decompositions are recognized by ``dimV0``."""
    text = source if source.lstrip().startswith("{") else pathlib.Path(source).read_text(encoding="utf-8")
    data = json.loads(text)
    if isinstance(data, dict) and "dimV0" in data:
        return DecompositionDocument.model_validate(data)
    return ActionDocument.model_validate(data)


def dump(doc: BaseModel) -> str:
    return doc.model_dump_json(by_alias=True, indent=2)


