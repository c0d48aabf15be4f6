"""One function per subcommand; each returns its claims, a summary table and DOT figures."""
from __future__ import annotations

import argparse
from itertools import islice
from typing import Any, Callable

import pydantic
from loguru import logger
from sympy.combinatorics.named_groups import DihedralGroup

from contextual.belyi.rational_map import named_map, verify
from contextual.capacity.graphs import (
    SmallGraph,
    complete,
    cycle,
    is_bridgeless,
    is_cubic,
    is_pentagram_commutation_graph,
    is_planar,
    pentagram_graph,
    petersen,
)
from contextual.capacity.invariants import edge_chromatic_number
from contextual.capacity.report import capacity_report
from contextual.cartography.groups import group_order, is_isomorphic
from contextual.cartography.low_index import low_index_subgroups
from contextual.cartography.presentation import CARTOGRAPHIC_GROUP
from contextual.cartography.stabilization import dessin_search
from contextual.dessins.hypermap import fig1, fig2, fig3b, from_coset_action, genus
from contextual.dessins.hypermap import monodromy_group
from contextual.geometry.bell import (
    bell_census,
    chsh_operator,
    complete_to_square,
    reference_quadruple,
)
from contextual.geometry.configurations import (
    PointLineGeometry,
    canonical_mermin_square,
    fano_heptads,
    gq22_geometry,
    parity_predicts_contextual,
    verify_gq22,
)
from contextual.geometry.kochen_specker import ks_colorable
from contextual.geometry.pentagrams import (
    canonical_mermin_pentagram,
    iter_pentagrams,
    pentagram_census,
)
from contextual.parameters.parameters import CLAIMS
from contextual.pauli.dense import hermitian_eigenvalues, operator_norm
from contextual_cli.claims import ClaimResult, claim, failed, reported, timed
from contextual_io.dot import dessin_dot, geometry_dot, graph_dot
from contextual_io.json_io import (
    coset_table_from_dict,
    geometry_from_dict,
    graph_from_dict,
    read_json,
    write_pentagram_stream,
)


class CommandOutput(pydantic.BaseModel):
    """Claims checked by a command, rows of its summary table and its DOT figures."""

    results: list[ClaimResult] = []
    rows: list[dict[str, Any]] = []
    details: dict[str, Any] = {}
    dot: dict[str, str] = {}


def checked(claim_id: str, target: Any, computed: Any, seconds: float = 0.0) -> ClaimResult:
    """A derived property with a target fixed by construction rather than by a publication."""
    return ClaimResult(claim=claim_id, target=target, computed=computed, seconds=seconds)


def _claim_or_report(claim_id: str, computed: Any, seconds: float) -> ClaimResult:
    if claim_id in CLAIMS:
        return claim(claim_id, computed, seconds)
    return reported(claim_id, computed, seconds)


def bell_census_command(args: argparse.Namespace) -> CommandOutput:
    n = args.qubits
    count, seconds = timed(lambda: bell_census(n, progress=args.progress))
    output = CommandOutput(results=[_claim_or_report(f"bell-census-{n}", count, seconds)])
    q = reference_quadruple()
    c, seconds = timed(lambda: chsh_operator(q))
    eigenvalues = [round(value, 12) for value in hermitian_eigenvalues(c @ c)]
    output.results.append(claim("chsh-eigenvalues", eigenvalues, seconds))
    output.results.append(claim("chsh-norm", operator_norm(c), seconds))
    output.rows.append({"qubits": n, "quadruples": count, "chsh_norm": operator_norm(c)})
    square = complete_to_square(q)
    output.dot["bell_square"] = geometry_dot(square, "completed Bell square")
    output.dot["fig2"] = dessin_dot(fig2(), "fig2")
    return output


def pentagram_census_command(args: argparse.Namespace) -> CommandOutput:
    census, seconds = timed(
        lambda: pentagram_census(args.qubits, workers=args.workers, progress=args.progress)
    )
    claim_id = "pentagram-census" if args.qubits == 3 else f"pentagram-census-{args.qubits}"
    output = CommandOutput(results=[_claim_or_report(claim_id, census.count, seconds)])
    sample = list(islice(iter_pentagrams(census), args.limit))
    noncolorable, seconds = timed(lambda: sum(1 for g in sample if ks_colorable(g) is None))
    output.results.append(checked("pentagram-sample-ks", len(sample), noncolorable, seconds))
    isomorphic, seconds = timed(lambda: sum(map(is_pentagram_commutation_graph, sample)))
    output.results.append(checked("pentagram-sample-petersen", len(sample), isomorphic, seconds))
    output.rows = [
        {"negative_lines": k, "configurations": v} for k, v in census.sign_histogram.items()
    ]
    output.details = census.model_dump(exclude={"pentagrams"})
    if args.stream:
        write_pentagram_stream(args.stream, census)
    if sample:
        output.dot["pentagram"] = geometry_dot(sample[0], "pentagram")
    return output


def gq22_command(args: argparse.Namespace) -> CommandOutput:  # pylint: disable=unused-argument
    report, seconds = timed(verify_gq22)
    heptads, heptad_seconds = timed(fano_heptads)
    output = CommandOutput(
        results=[
            claim("gq22-lines", report.lines, seconds),
            claim("gq22-axiom-violations", report.axiom_violations, seconds),
            claim("fano-heptads", len(heptads), heptad_seconds),
        ]
    )
    output.rows = [
        {"points": report.points, "lines": report.lines, "violations": report.axiom_violations}
    ]
    output.details = report.model_dump()
    output.dot["gq22"] = geometry_dot(gq22_geometry(), "GQ(2,2)")
    return output


def _ks_row(name: str, g: PointLineGeometry) -> dict[str, Any]:
    return {
        "geometry": name,
        "points": len(g.points),
        "lines": len(g.lines),
        "negative_lines": len(g.negative_lines),
        "parity_contextual": parity_predicts_contextual(g),
        "ks_colorable": ks_colorable(g) is not None,
    }


def ks_check_command(args: argparse.Namespace) -> CommandOutput:
    output = CommandOutput()
    if args.geometry:
        g = geometry_from_dict(read_json(args.geometry))
        row, seconds = timed(lambda: _ks_row(str(args.geometry), g))
        output.results.append(reported("ks-colorable", row["ks_colorable"], seconds))
        output.rows.append(row)
        output.dot["geometry"] = geometry_dot(g)
        return output
    square = canonical_mermin_square()
    row, seconds = timed(lambda: _ks_row("Mermin square", square))
    output.results.append(claim("mermin-square-negative-lines", row["negative_lines"], seconds))
    output.results.append(claim("mermin-square-ks", row["ks_colorable"], seconds))
    pentagram = canonical_mermin_pentagram()
    pentagram_row, seconds = timed(lambda: _ks_row("Mermin pentagram", pentagram))
    output.results.append(
        checked("mermin-pentagram-ks", False, pentagram_row["ks_colorable"], seconds)
    )
    output.rows = [row, pentagram_row]
    output.dot["mermin_square"] = geometry_dot(square, "Mermin square")
    output.dot["mermin_pentagram"] = geometry_dot(pentagram, "Mermin pentagram")
    return output


def figures_command(args: argparse.Namespace) -> CommandOutput:  # pylint: disable=unused-argument
    output = CommandOutput()
    for name, m in (("fig1", fig1()), ("fig2", fig2()), ("fig3b", fig3b())):
        counts = [m.black, m.white, m.faces, genus(m)]
        order = group_order(monodromy_group(m))
        output.rows.append(
            {
                "dessin": name,
                "n": m.n,
                "B": counts[0],
                "W": counts[1],
                "F": counts[2],
                "genus": counts[3],
                "group_order": order,
            }
        )
        output.dot[name] = dessin_dot(m, name)
        if name == "fig2":
            output.results.append(claim("dessin-fig2", order))
            dihedral = is_isomorphic(monodromy_group(m), DihedralGroup(4))
            output.results.append(checked("dessin-fig2-dihedral", True, dihedral))
        else:
            output.results.append(claim(f"dessin-{name}", counts))
            output.results.append(claim(f"group-{name}", order))
    return output


def lowindex_command(args: argparse.Namespace) -> CommandOutput:
    tables, seconds = timed(
        lambda: low_index_subgroups(
            CARTOGRAPHIC_GROUP, args.index, workers=args.workers, progress=args.progress
        )
    )
    claim_id = f"lowindex-{args.index}"
    output = CommandOutput(results=[_claim_or_report(claim_id, len(tables), seconds)])
    verified = sum(1 for t in tables if t.verify_relators(CARTOGRAPHIC_GROUP.relators))
    output.results.append(checked(f"lowindex-{args.index}-relators", len(tables), verified))
    shown = tables if args.limit is None else tables[: args.limit]
    for t in shown:
        m = from_coset_action(t)
        cycles = m.cycles()
        output.rows.append({"alpha": cycles["alpha"], "beta": cycles["beta"], "genus": genus(m)})
    output.details = {
        "index": args.index,
        "classes": len(tables),
        "tables": [t.to_dict() for t in shown],
    }
    return output


SEARCHES: dict[int, tuple[str, Callable[[], PointLineGeometry], str, str]] = {
    7: ("psl27", lambda: fano_heptads()[0], "target-psl27", "stabilized-fano"),
    9: ("square72", canonical_mermin_square, "target-square72", "stabilized-square"),
    10: ("s5", canonical_mermin_pentagram, "target-s5", "stabilized-pentagram"),
}


def dessin_search_command(args: argparse.Namespace) -> CommandOutput:
    if args.index not in SEARCHES:
        raise ValueError(f"Dessin searches are set up for indices {sorted(SEARCHES)}")
    target, geometry, target_claim, stabilized_claim = SEARCHES[args.index]
    target = args.target or target
    report, seconds = timed(
        lambda: dessin_search(
            args.index, target, geometry(), workers=args.workers, progress=args.progress
        )
    )
    output = CommandOutput(results=[claim(target_claim, len(report.hits), seconds)])
    if args.index == 7:
        output.results.append(claim(stabilized_claim, report.max_stabilized))
        transitive = any(hit.stabilization.transitive_on_lines for hit in report.hits)
        output.results.append(checked("stabilized-fano-transitive", True, transitive))
    elif args.index == 9:
        output.results.append(claim(stabilized_claim, report.all_lines_hits))
    else:
        output.results.append(claim(stabilized_claim, report.max_stabilized))
        output.results.append(reported("pentagram-all-lines-hits", report.all_lines_hits))
    for number, hit in enumerate(report.hits, start=1):
        output.rows.append(
            {
                "hit": number,
                "passport": hit.passport.as_lists(),
                "genus": hit.genus,
                "group_order": hit.group_order,
                "stabilized": f"{hit.stabilization.stabilized}/{hit.stabilization.total_lines}",
                "line_orbits": hit.stabilization.orbits,
            }
        )
        m = from_coset_action(coset_table_from_dict(hit.table))
        output.dot[f"index{args.index}_hit{number}"] = dessin_dot(m, f"hit {number}")
    output.details = report.model_dump()
    return output


def belyi_check_command(args: argparse.Namespace) -> CommandOutput:
    report, seconds = timed(lambda: verify(args.map, args.dessin, mirror=args.mirror))
    default_pairing = args.dessin is None and not args.mirror
    claim_id = f"belyi-{args.map}"
    if default_pairing and claim_id in CLAIMS:
        result = claim(claim_id, report.ok, seconds)
    else:
        result = reported(claim_id, report.ok, seconds)
    output = CommandOutput(results=[result])
    output.rows.append(
        {
            "map": report.name,
            "degree": report.degree,
            "critical_values": report.critical_values,
            "passport": report.passport,
            "dessin": report.dessin,
            "match": report.matches_dessin,
            "rh_defect": report.riemann_hurwitz_defect,
        }
    )
    output.details = report.model_dump()
    output.details["coefficients"] = named_map(args.map, args.mirror).coefficients()
    return output


GRAPHS: dict[str, Callable[[], SmallGraph]] = {
    "c5": lambda: cycle(5),
    "petersen": petersen,
    "pentagram": pentagram_graph,
    "k5": lambda: complete(5),
}


def capacity_command(args: argparse.Namespace) -> CommandOutput:
    if args.graph in GRAPHS:
        g = GRAPHS[args.graph]()
    else:
        g = graph_from_dict(read_json(args.graph))
    report, seconds = timed(lambda: capacity_report(g, args.max_k))
    output = CommandOutput()
    if args.graph == "c5":
        output.results.append(claim("theta-pentagon", report.theta, seconds))
    elif args.graph == "petersen":
        output.results.append(claim("theta-petersen", report.theta, seconds))
        bracket = [round(report.shannon_lower, 12), round(report.shannon_upper, 12)]
        output.results.append(claim("shannon-petersen-bracket", bracket, seconds))
        output.results.append(checked("petersen-cubic", True, is_cubic(g)))
        output.results.append(checked("petersen-bridgeless", True, is_bridgeless(g)))
        output.results.append(checked("petersen-planar", False, is_planar(g)))
        output.results.append(checked("petersen-edge-chromatic", 4, edge_chromatic_number(g)))
    elif args.graph == "pentagram":
        output.results.append(claim("theta-pentagram", report.theta, seconds))
        output.results.append(claim("shannon-pentagram", report.shannon_lower, seconds))
        commuting = is_pentagram_commutation_graph(canonical_mermin_pentagram())
        output.results.append(checked("pentagram-commutation-graph", True, commuting))
    else:
        output.results.append(reported(f"capacity-{g.name or 'graph'}", report.theta, seconds))
    if report.sandwich is not None:
        name = args.graph if args.graph in GRAPHS else g.name or "graph"
        output.results.append(checked(f"sandwich-{name}", True, report.sandwich.holds))
    output.rows.append(
        {
            "graph": g.name,
            "n": g.n,
            "alpha": report.alpha,
            "omega": report.omega,
            "chi": report.chi,
            "theta": report.theta,
            "shannon_lower": report.shannon_lower,
            "shannon_upper": report.shannon_upper,
        }
    )
    output.details = report.model_dump()
    output.dot[args.graph if args.graph in GRAPHS else "graph"] = graph_dot(g)
    return output


COMMANDS: dict[str, Callable[[argparse.Namespace], CommandOutput]] = {
    "bell-census": bell_census_command,
    "pentagram-census": pentagram_census_command,
    "gq22": gq22_command,
    "ks-check": ks_check_command,
    "figures": figures_command,
    "lowindex": lowindex_command,
    "dessin-search": dessin_search_command,
    "belyi-check": belyi_check_command,
    "capacity": capacity_command,
}


# name, subcommand, option overrides; the order is fixed
REPRODUCTION_STEPS: list[tuple[str, str, dict[str, Any]]] = [
    ("bell-census-2", "bell-census", {"qubits": 2}),
    ("bell-census-3", "bell-census", {"qubits": 3}),
    ("ks-check", "ks-check", {"geometry": None}),
    ("gq22", "gq22", {}),
    ("figures", "figures", {}),
    ("belyi-fano", "belyi-check", {"map": "fano", "dessin": None, "mirror": False}),
    ("belyi-klein", "belyi-check", {"map": "klein", "dessin": None, "mirror": False}),
    ("capacity-c5", "capacity", {"graph": "c5", "max_k": None}),
    ("capacity-petersen", "capacity", {"graph": "petersen", "max_k": None}),
    ("capacity-pentagram", "capacity", {"graph": "pentagram", "max_k": None}),
    ("lowindex-7", "lowindex", {"index": 7, "limit": 0}),
    ("lowindex-9", "lowindex", {"index": 9, "limit": 0}),
    ("lowindex-10", "lowindex", {"index": 10, "limit": 0}),
    ("dessin-search-7", "dessin-search", {"index": 7, "target": None}),
    ("dessin-search-9", "dessin-search", {"index": 9, "target": None}),
    ("dessin-search-10", "dessin-search", {"index": 10, "target": None}),
    ("pentagram-census", "pentagram-census", {"qubits": 3, "limit": 100, "stream": None}),
]


def reproduce_all(args: argparse.Namespace) -> CommandOutput:
    """Every reproduction step in a fixed order; a failing step is recorded, not fatal."""
    skip = set(args.skip or [])
    output = CommandOutput()
    for name, command, overrides in REPRODUCTION_STEPS:
        if name in skip or command in skip:
            logger.info(f"Skipping {name}")
            continue
        step_args = argparse.Namespace(**{**vars(args), **overrides})
        logger.info(f"Running {name}")
        try:
            result, seconds = timed(lambda: COMMANDS[command](step_args))
        except (ValueError, ArithmeticError) as err:
            logger.error(f"{name} failed: {err}")
            output.results.append(failed(name, err))
            continue
        output.results.extend(result.results)
        output.rows.append(
            {
                "step": name,
                "claims": len(result.results),
                "mismatches": sum(1 for r in result.results if r.asserted and not r.match),
                "seconds": round(seconds, 2),
            }
        )
        output.dot.update({f"{name}_{key}": text for key, text in result.dot.items()})
    return output


COMMANDS["reproduce-all"] = reproduce_all

