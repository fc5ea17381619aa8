from __future__ import annotations
from typing import List, Tuple
import pandas as pd

COLUMNS = ["cell", "kind", "deviation", "minus_identity"]



class CellReport:
    frame:pd.DataFrame


    def __init__(self, rows:List[Tuple[str, str, float, bool]]) -> None:
        self.frame = pd.DataFrame(rows, columns=COLUMNS)


    def __len__(self) -> int:
        return len(self.frame)


    @property
    def max_deviation(self) -> float:
        if self.frame.empty:
            return 0.0
        return float(self.frame["deviation"].max())


    def violations(self, epsilon:float) -> pd.DataFrame:
        return self.frame[self.frame["deviation"] >= epsilon]


    def first_violation(self, epsilon:float) -> str:
        failing = self.violations(epsilon)
        if failing.empty:
            return ""
        row = failing.iloc[0]
        suffix = " (closes to -Id)" if row["minus_identity"] else ""
        return f"{row['kind']} {row['cell']}{suffix}"


    def by_kind(self) -> pd.DataFrame:
        return self.frame.groupby("kind")["deviation"].agg(["count", "max"])
