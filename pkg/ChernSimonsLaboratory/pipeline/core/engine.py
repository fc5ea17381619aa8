from __future__ import annotations
from typing import List, Optional
import cmath
import hashlib
import logging
import random

from errors import NoBranchingFound, check_relation
from triangulation.core import (
    BoundaryCensus, check_path, edge_classes, find_branchings, parse_branching, parse_paths, parse_triangulation, torus_cusp_count,
)
from triangulation.models import AbstractTriangulation, BoundaryPath, Branching, EdgeClass
from crossratio.configs import get_solver_configuration
from crossratio.core import GluingSolver, build_gluing_system, edge_residuals
from crossratio.models import GluingSystem, RelationKind, ShapeAssignment, parse_shapes
from flattening.core import edge_flattening_residuals, parse_flat, solve_flattening
from flattening.models import Flattening, TetFlattening
from dilog.core import FOUR_PI2, cs_differential, cs_tet, cs_tet_raw, cs_total, five_term_residual, volume_from_shapes
from holonomy.core import build_lifted_cocycle, path_holonomy, peripheral_log_holonomy, verify_cells
from pipeline.configs import get_run_configuration
from pipeline.models import ResidualRow, RunReport, SolverSummary, TetRecord, pair

logger = logging.getLogger(__name__)

DERIVATIVE_STEP = 1e-6
DERIVATIVE_TOLERANCE = 1e-5
PERIPHERAL_TOLERANCE = 1e-8



class PipelineEngine:
    """Runs parse -> branching -> shapes -> flattening -> Chern-Simons and fills a RunReport."""
    report:RunReport


    def __init__(
        self,
        triangulation_text:str,
        branching_text:Optional[str]=None,
        paths_text:Optional[str]=None,
        shapes_text:Optional[str]=None,
        flattening_text:Optional[str]=None,
    ) -> None:
        self.__run = get_run_configuration()
        self.__texts = (triangulation_text, branching_text, paths_text, shapes_text, flattening_text)
        digest = hashlib.sha256(triangulation_text.encode("utf-8")).hexdigest()
        self.report = RunReport(input_digest=digest, seed=self.__run.SEED)

        self.triangulation:Optional[AbstractTriangulation] = None
        self.classes:List[EdgeClass] = []
        self.branching:Optional[Branching] = None
        self.paths:List[BoundaryPath] = []
        self.system:Optional[GluingSystem] = None
        self.shapes:Optional[ShapeAssignment] = None
        self.flattening:Optional[Flattening] = None


    def info(self) -> RunReport:
        triangulation = parse_triangulation(self.__texts[0], self.__run.STRICT)
        self.triangulation = triangulation
        self.classes = edge_classes(triangulation)
        census = BoundaryCensus(triangulation).components()
        self.report.census = {
            "tetrahedra": triangulation.tets,
            "edges": len(self.classes),
            "torus_cusps": torus_cusp_count(census),
            "boundary_euler_characteristics": [euler for _, euler in census],
        }

        return self.report


    def census_line(self) -> str:
        census = self.report.census
        return f"{census['tetrahedra']} tetrahedra, {census['edges']} edges, {census['torus_cusps']} torus cusp(s)"


    def cs(self) -> RunReport:
        self.__pipeline()
        self.__raise_on_failure()

        return self.report


    def verify(self) -> RunReport:
        self.__pipeline()
        self.__five_term_residuals()
        self.__derivative_residuals()
        self.__raise_on_failure()

        return self.report


    def __pipeline(self) -> None:
        self.info()
        self.__choose_branching()
        self.__read_paths()
        self.__solve_shapes()
        self.__solve_flattening()
        self.__evaluate()
        self.__basic_residuals()
        self.__cell_residuals()
        self.__peripheral_residuals()


    def __choose_branching(self) -> None:
        assert self.triangulation is not None
        branching_text = self.__texts[1]
        if branching_text is not None and branching_text.strip() != "auto":
            self.branching = parse_branching(branching_text, self.triangulation)
        else:
            found = find_branchings(self.triangulation, self.__run.BRANCHING_LIMIT, self.classes)
            if not found:
                raise NoBranchingFound()
            self.branching = found[0]

        self.report.branching_orders = [list(order) for order in self.branching.orders]
        logger.info("branching orders %s", self.branching.orders)


    def __read_paths(self) -> None:
        assert self.triangulation is not None
        if self.__texts[2] is None:
            return
        self.paths = parse_paths(self.__texts[2])
        for path in self.paths:
            check_path(self.triangulation, path, closed=True)


    def __solve_shapes(self) -> None:
        assert self.branching is not None and self.triangulation is not None
        self.system = build_gluing_system(self.branching, self.paths)
        if self.__texts[3] is not None:
            initial = parse_shapes(self.__texts[3], self.triangulation.tets)
        else:
            initial = ShapeAssignment.REGULAR_INITIAL(self.branching)

        solver = GluingSolver(self.system, get_solver_configuration(), self.branching.signs)
        try:
            self.shapes = solver.solve(initial.shapes)
        finally:
            self.report.solver = self.__summary(solver)
        self.report.geometric = self.shapes.is_geometric(self.branching)


    @staticmethod
    def __summary(solver:GluingSolver) -> SolverSummary:
        trace = solver.trace
        if trace.chosen is None:
            return SolverSummary(residual=trace.best_residual if trace.records else 0.0, starts_tried=len(trace.records))
        record = trace.records[-1]
        return SolverSummary(
            chosen_start=trace.chosen,
            iterations=record.iterations,
            residual=record.residual,
            jacobian_rank=record.jacobian_rank,
            starts_tried=len(trace.records),
        )


    def __solve_flattening(self) -> None:
        assert self.branching is not None and self.shapes is not None
        if self.__texts[4] is not None:
            self.flattening = parse_flat(self.__texts[4], self.branching, self.shapes.shapes)
        else:
            self.flattening = solve_flattening(self.branching, self.shapes.shapes, self.paths, self.__run.GUARD_BAND)


    def __evaluate(self) -> None:
        assert self.flattening is not None and self.branching is not None
        signs = self.branching.signs
        records = []
        for tet, f in enumerate(self.flattening.tets):
            records.append(TetRecord(
                tet=tet, sign=signs[tet], shape=pair(f.z), p=f.p, q=f.q, sigma=f.sigma,
                l1=pair(f.l1), l2=pair(f.l2), l3=pair(f.l3), cs=pair(cs_tet(f).value),
            ))
        self.report.tets = records

        total = cs_total(self.flattening)
        self.report.cs_total = {"real": total.real, "imag": total.imag}
        self.report.volume = volume_from_shapes(self.flattening.shapes, signs)
        for path in self.paths:
            self.report.peripheral[path.name] = pair(peripheral_log_holonomy(self.flattening, path))


    def __add(self, relation:str, kind:str, value:float, tolerance:float) -> None:
        self.report.residuals.append(ResidualRow(relation=relation, kind=kind, value=value, passed=value < tolerance))


    def __basic_residuals(self) -> None:
        assert self.system is not None and self.shapes is not None and self.flattening is not None
        tolerance = self.__run.VERIFY_TOLERANCE
        for relation, value in zip(self.system.relations, edge_residuals(self.system, self.shapes.shapes)):
            kind = "gluing" if relation.kind == RelationKind.EDGE else "completeness"
            self.__add(relation.name, kind, float(abs(value)), tolerance)

        edges = [c for c in self.flattening.branching.edge_classes if c.closed]
        for edge_class, value in zip(edges, edge_flattening_residuals(self.flattening)):
            self.__add(f"edge star {edge_class.index} flattening sum", "flattening", float(abs(value)), tolerance)


    def __cell_residuals(self) -> None:
        assert self.flattening is not None
        report = verify_cells(build_lifted_cocycle(self.flattening))
        for row in report.frame.itertuples(index=False):
            name = f"{row.cell} (-Id)" if row.minus_identity else row.cell
            self.__add(name, row.kind, float(row.deviation), self.__run.VERIFY_TOLERANCE)


    def __peripheral_residuals(self) -> None:
        assert self.flattening is not None
        if not self.paths:
            return
        cocycle = build_lifted_cocycle(self.flattening)
        for path in self.paths:
            log_value = peripheral_log_holonomy(self.flattening, path)
            corner = path_holonomy(cocycle, path.steps)[0, 0]
            value = abs(cmath.exp(log_value) - corner) / max(1.0, abs(corner))
            self.__add(f"peripheral {path.name}", "peripheral", float(value), PERIPHERAL_TOLERANCE)


    def __five_term_residuals(self) -> None:
        rng = random.Random(self.__run.SEED)
        worst = 0.0
        for _ in range(self.__run.FIVE_TERM_SAMPLES):
            a, b = rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)
            if abs(a - b) < 1e-3:
                continue
            worst = max(worst, abs(five_term_residual(max(a, b), min(a, b))))
        self.__add("five-term sweep", "five-term", worst, self.__run.VERIFY_TOLERANCE)


    def __derivative_residuals(self) -> None:
        assert self.flattening is not None
        for tet, f in enumerate(self.flattening.tets):
            error = derivative_error(f)
            if error is None:
                logger.debug("tetrahedron %d is too close to a branch cut for the derivative check", tet)
                continue
            self.__add(f"derivative tet {tet}", "derivative", error, DERIVATIVE_TOLERANCE)


    def __raise_on_failure(self) -> None:
        for row in self.report.residuals:
            if not row.passed:
                tolerance = {
                    "peripheral": PERIPHERAL_TOLERANCE,
                    "derivative": DERIVATIVE_TOLERANCE,
                }.get(row.kind, self.__run.VERIFY_TOLERANCE)
                check_relation(row.value, tolerance, f"{row.kind} relation {row.relation!r}")



def derivative_error(f:TetFlattening, step:float=DERIVATIVE_STEP) -> Optional[float]:
    """Relative error between a central difference of 4 pi^2 CS and the closed differential."""
    if abs(f.z.imag) < 1e-3:
        return None

    dz = step * complex(1, 1) / abs(complex(1, 1))
    plus = TetFlattening.FROM_LIFTS(f.z + dz, f.p, f.q)
    minus = TetFlattening.FROM_LIFTS(f.z - dz, f.p, f.q)
    numeric = (cs_tet_raw(plus) - cs_tet_raw(minus)) / 2
    exact = FOUR_PI2 * cs_differential(f, dz / f.z, dz / (1 - f.z))

    return float(abs(numeric - exact) / max(abs(exact), 1e-300))
