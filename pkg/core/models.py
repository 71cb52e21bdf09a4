from pydantic import BaseModel, Field
from typing import Dict, List, Optional
from enum import Enum

class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

class OrbitMode(str, Enum):
    LC = "lc"
    ELC = "elc"

class ElcMethod(str, Enum):
    LC_COMPOSE = "lc-compose"
    CLASSES = "classes"
    BIPARTITE = "bipartite"

class RepEntry(BaseModel):
    graph6: str
    orbit_size: int = Field(ge=1)
    a: Optional[int] = None
    b: Optional[int] = None
    delta_left: Optional[int] = None
    delta_right: Optional[int] = None
    elc_orbits: Optional[int] = None  # LC 轨道内的 ELC 轨道数（仅 --refine）

class RepSet(BaseModel):
    n: int = Field(ge=1)
    mode: OrbitMode = OrbitMode.ELC
    bipartite: bool = False
    entries: List[RepEntry] = []
    complete: bool = True

    @property
    def count(self) -> int:
        return len(self.entries)

class CodeCounts(BaseModel):
    n: int
    indecomposable: int
    isodual: int
    by_dimension: Dict[int, int] = {}

class CensusRow(BaseModel):
    n: int
    i: int
    t: Optional[int] = None
    i_codes: Optional[int] = None
    i_isodual: Optional[int] = None
    t_codes: Optional[int] = None

class CensusTable(BaseModel):
    kind: str = "elc"
    rows: List[CensusRow] = []

class CodeSummary(BaseModel):
    n: int
    k: int
    d: Optional[int] = None
    indecomposable: bool
    self_dual: bool
    isodual: bool
    info_set_count: Optional[int] = None

    def headline(self) -> str:
        d = "?" if self.d is None else str(self.d)
        flags = [name for name, on in (("indecomposable", self.indecomposable),
                                       ("self-dual", self.self_dual),
                                       ("isodual", self.isodual)) if on]
        return f"[{self.n},{self.k},{d}] " + (" ".join(flags) if flags else "-")
