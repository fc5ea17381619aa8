from __future__ import annotations
from typing import Any, Dict, List, Optional
import json
import math
from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "1.0"



class TetRecord(BaseModel):
    tet:int
    sign:int
    shape:List[float]
    p:int
    q:int
    sigma:int
    l1:List[float]
    l2:List[float]
    l3:List[float]
    cs:List[float]


class SolverSummary(BaseModel):
    chosen_start:Optional[int] = None
    iterations:int = 0
    residual:float = 0.0
    jacobian_rank:int = 0
    starts_tried:int = 0


class ResidualRow(BaseModel):
    relation:str
    kind:str
    value:float
    passed:bool


class RunReport(BaseModel):
    model_config = ConfigDict(frozen=False)

    schema_version:str = SCHEMA_VERSION
    input_digest:str
    seed:int
    census:Dict[str, Any] = Field(default_factory=dict)
    branching_orders:List[List[int]] = Field(default_factory=list)
    solver:SolverSummary = Field(default_factory=SolverSummary)
    geometric:Optional[bool] = None
    tets:List[TetRecord] = Field(default_factory=list)
    cs_total:Dict[str, float] = Field(default_factory=dict)
    volume:Optional[float] = None
    peripheral:Dict[str, List[float]] = Field(default_factory=dict)
    residuals:List[ResidualRow] = Field(default_factory=list)
    status:str = "ok"
    exit_code:int = 0
    message:str = ""


    def to_json(self) -> str:
        return render_json(self.model_dump()) + "\n"



def pair(value:complex) -> List[float]:
    return [float(value.real), float(value.imag)]


def render_json(value:Any, indent:int=0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = "  " * (indent + 1)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return "null"
        text = format(value, ".17g")
        return text if any(c in text for c in ".en") else text + ".0"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{render_json(str(k))}: {render_json(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return "[" + ", ".join(render_json(v, indent + 1) for v in value) + "]"
        items = [pad + render_json(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"

    raise TypeError(f"cannot render {type(value).__name__}")
