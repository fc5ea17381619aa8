from __future__ import annotations
from itertools import product
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import EdgeStarError, GluingError, OrientationViolation, ParseError, PathError
from triangulation.core import (
    BoundaryCensus, UnionFind, boundary_components, branching_from_directions, check_path, edge_classes, edge_lookup,
    find_branchings, parse_branching, parse_paths, parse_triangulation, serialize_branching, serialize_paths,
    serialize_triangulation, torus_cusp_count,
)
from triangulation.models import (
    ORDERING_TABLE, BoundaryPath, EdgeType, OrderingClass, PathStep, classify, permutation_parity, swap,
)

from conftest import fixture_text



def test_ordering_table_partitions_the_orderings():
    assert len(ORDERING_TABLE) == 24
    for ordering_class in OrderingClass:
        members = [o for o, (c, _) in ORDERING_TABLE.items() if c == ordering_class]
        assert len(members) == 4
        assert sorted(sign for c, sign in ORDERING_TABLE.values() if c == ordering_class) == [-1, -1, 1, 1]


def test_double_swap_keeps_class_and_sign():
    for ordering, (ordering_class, sign) in ORDERING_TABLE.items():
        both = swap(swap(ordering, EdgeType.E1), EdgeType.E3)
        assert classify(both) == (ordering_class, sign)
        assert classify(swap(ordering, EdgeType.E1)) == (ordering_class, -sign)


def test_named_orderings():
    assert classify((0, 1, 2, 3)) == (OrderingClass.A, 1)
    assert classify((1, 0, 2, 3)) == (OrderingClass.A, -1)
    assert classify((3, 1, 0, 2)) == (OrderingClass.B_PRIME, 1)
    assert classify((1, 2, 3, 0)) == (OrderingClass.C_PRIME, -1)
    assert OrderingClass.B_PRIME.offset == -2
    assert OrderingClass.B.offset == 0


def test_fig8_parses(fig8):
    assert fig8.tets == 2
    assert fig8.is_closed
    assert len(fig8.face_pairs) == 4
    gluing = fig8.glued(0, 3)
    assert (gluing.tet, gluing.face, gluing.perm) == (1, 0, (3, 1, 2, 0))
    assert fig8.glued(1, 0).inverse(1, 0) == gluing


def test_one_sided_gluings_imply_their_partner():
    text = "tri 1\ntets 2\nglue 0 3 1 3 1 2 0\n"
    lenient = parse_triangulation(text, strict=False)
    partner = lenient.glued(1, 0)
    assert partner is not None
    assert (partner.tet, partner.face, partner.perm) == (0, 3, (3, 1, 2, 0))


def test_serialize_round_trip(fig8):
    assert parse_triangulation(serialize_triangulation(fig8)) == fig8


def test_empty_triangulation():
    empty = parse_triangulation(fixture_text("empty.tri"))
    assert empty.tets == 0
    assert edge_classes(empty) == []
    assert boundary_components(empty) == []


def test_even_permutation_is_rejected():
    with pytest.raises(OrientationViolation) as info:
        parse_triangulation(fixture_text("even_perm.tri"))
    assert info.value.line == 4
    assert (info.value.tet, info.value.face) == (0, 0)


def test_duplicate_gluing_is_rejected():
    with pytest.raises(GluingError) as info:
        parse_triangulation(fixture_text("duplicate.tri"))
    assert info.value.line == 4


def test_malformed_token_position():
    with pytest.raises(ParseError) as info:
        parse_triangulation(fixture_text("malformed.tri"))
    assert (info.value.line, info.value.column) == (3, 16)


def test_conflicting_partner_is_not_an_involution():
    text = "tri 1\ntets 2\nglue 0 3 1 3 1 2 0\nglue 1 0 0 3 2 0 1\n"
    with pytest.raises(GluingError, match="involution"):
        parse_triangulation(text, strict=False)


@pytest.mark.parametrize("text", ["tri 2\ntets 1\n", "tets 1\n", "tri 1\nglue 0 0 0 1 0 2 3\n", "tri 1\ntets 1\nfold 0\n", "tri 1\ntets 1\nglue 0 4 0 1 0 2 3\n"])
def test_header_and_keyword_errors(text):
    with pytest.raises(ParseError):
        parse_triangulation(text, strict=False)


def test_unglued_faces_strict_and_lenient():
    with pytest.raises(GluingError, match="not glued"):
        parse_triangulation(fixture_text("partial.tri"))

    lenient = parse_triangulation(fixture_text("partial.tri"), strict=False)
    assert len(lenient.gluings) == 2
    assert not lenient.is_closed


def test_fig8_edge_classes(fig8):
    classes = edge_classes(fig8)
    assert [c.degree for c in classes] == [6, 6]
    assert all(c.closed for c in classes)

    star = [(entry.tet, entry.ordering) for entry in classes[0].star]
    assert star == [
        (0, (0, 1, 2, 3)), (1, (0, 2, 3, 1)), (0, (0, 2, 3, 1)),
        (1, (3, 2, 1, 0)), (0, (3, 1, 0, 2)), (1, (3, 1, 0, 2)),
    ]
    assert classes[1].seed.ordering == (0, 3, 1, 2)


def test_every_tet_edge_is_in_exactly_one_class(fig8):
    lookup = edge_lookup(edge_classes(fig8))
    assert len(lookup) == 12
    assert sum(c.degree for c in edge_classes(fig8)) == 6 * fig8.tets


def test_unglued_tetrahedron_has_six_open_classes():
    single = parse_triangulation(fixture_text("single.tri"), strict=False)
    classes = edge_classes(single)
    assert len(classes) == 6
    assert all(c.degree == 1 and not c.closed for c in classes)


def test_self_glued_tetrahedron_has_degree_one_stars():
    classes = edge_classes(parse_triangulation(fixture_text("self_glued.tri")))
    assert sorted(c.degree for c in classes) == [1, 1, 4]
    assert all(c.closed for c in classes)


def test_edge_folded_onto_itself_is_rejected():
    with pytest.raises(EdgeStarError, match="reversed"):
        edge_classes(parse_triangulation(fixture_text("folded.tri"), strict=False))


def test_fig8_first_branching(fig8_branching):
    assert fig8_branching.directions == (True, True)
    assert fig8_branching.orders == ((0, 2, 3, 1), (0, 3, 2, 1))
    assert fig8_branching.signs == (1, -1)
    assert fig8_branching.roles(0, (0, 2, 3, 1)) == (0, 1, 2, 3)
    assert fig8_branching.labels(1, (0, 1, 2, 3)) == (0, 3, 2, 1)


@pytest.mark.parametrize("name, strict", [("fig8.tri", True), ("self_glued.tri", True), ("single.tri", False)])
def test_search_agrees_with_exhaustive_enumeration(name, strict):
    triangulation = parse_triangulation(fixture_text(name), strict=strict)
    classes = edge_classes(triangulation)
    expected = set()
    for directions in product((True, False), repeat=len(classes)):
        if branching_from_directions(triangulation, directions, classes) is not None:
            expected.add(directions)

    found = find_branchings(triangulation, 2 ** len(classes), classes)
    assert {b.directions for b in found} == expected
    assert len(found) == len(expected)
    for branching in found:
        for tet, order in enumerate(branching.orders):
            assert sorted(order) == [0, 1, 2, 3]
            assert branching.orientation_sign(tet) == (1 if permutation_parity(order) == 0 else -1)


def test_search_limit(fig8):
    assert find_branchings(fig8, 0) == []
    assert len(find_branchings(fig8, 1)) == 1


def test_branching_files(fig8):
    classes = edge_classes(fig8)
    for directions in product((True, False), repeat=len(classes)):
        lines = []
        for edge_class, direction in zip(classes, directions):
            seed = edge_class.seed
            tail, head = (seed.tail, seed.head) if direction else (seed.head, seed.tail)
            lines.append(f"branch {edge_class.index} {tail} {head}")
        text = "\n".join(lines) + "\n"

        branching = branching_from_directions(fig8, directions, classes)
        if branching is None:
            with pytest.raises(ParseError, match="cycle"):
                parse_branching(text, fig8)
        else:
            parsed = parse_branching(text, fig8)
            assert parsed.orders == branching.orders
            assert serialize_branching(parsed) == text


def test_branching_file_errors(fig8):
    with pytest.raises(ParseError, match="no direction"):
        parse_branching("branch 0 0 1\n", fig8)
    with pytest.raises(ParseError, match="seed edge"):
        parse_branching("branch 0 0 2\nbranch 1 0 3\n", fig8)
    with pytest.raises(ParseError, match="twice"):
        parse_branching("branch 0 0 1\nbranch 0 0 1\n", fig8)


def test_fig8_has_one_torus_cusp(fig8):
    census = boundary_components(fig8)
    assert census == [(0, 0)]
    assert torus_cusp_count(census) == 1


def test_disjoint_union_census(fig8):
    census = boundary_components(fig8.disjoint_union(fig8))
    assert [euler for _, euler in census] == [0, 0]
    assert torus_cusp_count(census) == 2


def test_unglued_tetrahedron_has_four_disc_corners():
    census = boundary_components(parse_triangulation(fixture_text("single.tri"), strict=False))
    assert census == [(0, 1), (1, 1), (2, 1), (3, 1)]


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=20))
@settings(max_examples=50)
def test_union_find_classes_partition(pairs):
    union_find:UnionFind[int] = UnionFind()
    for item in range(10):
        union_find.add(item)
    for a, b in pairs:
        union_find.union(a, b)
        assert union_find.find(a) == union_find.find(b)

    members = sorted(m for group in union_find.classes().values() for m in group)
    assert members == list(range(10))


def test_fig8_paths(fig8, fig8_paths):
    assert [p.name for p in fig8_paths] == ["alpha", "beta"]
    assert [len(p) for p in fig8_paths] == [4, 14]
    for path in fig8_paths:
        check_path(fig8, path, closed=True)
    assert parse_paths(serialize_paths(fig8_paths)) == fig8_paths


def test_path_checker_errors(fig8, fig8_paths):
    alpha = fig8_paths[0]
    with pytest.raises(PathError, match="disconnected"):
        check_path(fig8, BoundaryPath("broken", (alpha.steps[0], alpha.steps[2])))
    with pytest.raises(PathError, match="not closed"):
        check_path(fig8, BoundaryPath("open", alpha.steps[:3]))
    check_path(fig8, BoundaryPath("open", alpha.steps[:3]), closed=False)
    with pytest.raises(PathError, match="does not exist"):
        check_path(fig8, BoundaryPath("far", (PathStep(5, (0, 1, 2, 3), EdgeType.E3, 1),)))


def test_path_steps():
    step = PathStep(0, (0, 3, 1, 2), EdgeType.E3, -1)
    assert step.neighbour == (0, 3, 2, 1)
    assert step.source == (0, 3, 2, 1)
    assert step.target == (0, 3, 1, 2)


def test_interior_steps_are_not_boundary_paths(fig8):
    step = PathStep(0, (0, 1, 2, 3), EdgeType.E1, 1)
    assert step.neighbour == (1, 0, 2, 3)
    with pytest.raises(PathError, match="E1"):
        check_path(fig8, BoundaryPath("inside", (step, PathStep(0, (1, 0, 2, 3), EdgeType.E1, 1))))


@pytest.mark.parametrize("text", [
    "step 0 0123 E3 +\n",
    "path a\nstep 0 0113 E3 +\n",
    "path a\nstep 0 0123 E1 +\n",
    "path a\nstep 0 0123 E3 *\n",
    "path a\nstep x 0123 E3 +\n",
    "path\n",
])
def test_path_file_errors(text):
    with pytest.raises(ParseError):
        parse_paths(text)


def test_boundary_census_component_lookup(fig8):
    census = BoundaryCensus(fig8)
    roots = {census.component_of(tet, v) for tet in range(2) for v in range(4)}
    assert len(roots) == 1
