"""
Report Pydantic Schemas
=======================
JSON surface of the CLI. Polynomials and ideals are grammar strings, trees
are nested {label, weight, children}.
"""

from typing import Any, Optional

from pydantic import BaseModel, Field


# ============================================================================
# TOP LEVEL
# ============================================================================

class Report(BaseModel):
    command: str
    vars: list[str]
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)


# ============================================================================
# FITTING / NORM / SNF
# ============================================================================

class FittingResult(BaseModel):
    ideals: list[str]
    generic_rank: int
    maximal_rank: int
    lipman_locally_free: Optional[bool] = None


class NormResult(BaseModel):
    ideal: str
    columns: list[int]
    generic_rank: int


class SmithResult(BaseModel):
    domain: str
    variable: Optional[str] = None
    diagonal: list[str]
    left: list[list[str]]
    right: list[list[str]]


# ============================================================================
# DIAGONAL
# ============================================================================

class DiagonalizeResult(BaseModel):
    diagonalized: bool
    entries: list[str] = Field(default_factory=list)
    free_rank: Optional[int] = None
    provenance: list[str] = Field(default_factory=list)
    obstruction: Optional[str] = None
    diagonal_module: Optional[bool] = None
    failing_index: Optional[int] = None


class DivisorOut(BaseModel):
    index: int
    generator: str
    rank: int
    empty: bool


class FiltrationResult(BaseModel):
    divisors: list[DivisorOut]
    fitting: list[str]
    submodules: list[list[str]]
    free_rank: int


class ComponentOut(BaseModel):
    support: str
    rank: int


class ConeResult(BaseModel):
    main_rank: int
    components: list[ComponentOut]
    torsion_support: str
    notes: list[str] = Field(default_factory=list)


# ============================================================================
# BLOW-UPS
# ============================================================================

class ChartNodeOut(BaseModel):
    label: str
    path: list[list[str]]
    substitution: dict[str, str]
    exceptional: list[str]
    fitting: list[str] = Field(default_factory=list)
    generic_rank: Optional[int] = None
    status: str
    center: Optional[list[str]] = None
    diagonal: Optional[str] = None
    note: Optional[str] = None
    children: list["ChartNodeOut"] = Field(default_factory=list)


class RossiChartOut(BaseModel):
    label: str
    content: str
    residual: str
    principal: bool
    locally_free: bool


class RossiOut(BaseModel):
    norm: str
    center: Optional[list[str]] = None
    charts: list[RossiChartOut] = Field(default_factory=list)
    note: Optional[str] = None


class BlowupResult(BaseModel):
    root_generic_rank: int
    certified: bool
    failures: list[list[str]]
    rounds: list[str]
    tree: ChartNodeOut
    rossi: Optional[RossiOut] = None


# ============================================================================
# TREES
# ============================================================================

class TreeNodeOut(BaseModel):
    label: str
    weight: int
    children: list["TreeNodeOut"] = Field(default_factory=list)


class TreeChartOut(BaseModel):
    label: str
    tree: TreeNodeOut
    tree_text: str
    path_tree: bool
    phi_content: str
    phi_residual: str
    j_content: str
    j_residual: str
    principal: bool
    snc: Optional[bool] = None
    advancing_identity: Optional[bool] = None
    j_identity: bool
    center: Optional[list[str]] = None
    children: list["TreeChartOut"] = Field(default_factory=list)


class MoodyResultOut(BaseModel):
    dominates: bool
    alpha: Optional[int] = None
    witness: Optional[str] = None
    alpha_max: int


class TreeResult(BaseModel):
    tree: TreeNodeOut
    phi: str
    I: Optional[str] = None
    J: str
    monoidal_transforms: dict[str, str]
    process: TreeChartOut
    moody: Optional[MoodyResultOut] = None


ChartNodeOut.model_rebuild()
TreeNodeOut.model_rebuild()
TreeChartOut.model_rebuild()
