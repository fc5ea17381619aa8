from .run_report import SCHEMA_VERSION, ResidualRow, RunReport, SolverSummary, TetRecord, pair, render_json



__all__ = ["SCHEMA_VERSION", "ResidualRow", "RunReport", "SolverSummary", "TetRecord", "pair", "render_json"]
