"""End-to-end smoke tests: python bindings, CLI subcommands, schema conformance."""

import json
import math
import os
import subprocess
import xml.etree.ElementTree as ET

import jsonschema
import pytest

import strutgeo as sg

CLI = os.environ.get("STRUTGEO_CLI")
SCHEMAS = os.environ.get("STRUTGEO_SCHEMAS")

pytestmark = pytest.mark.skipif(
    CLI is None or SCHEMAS is None,
    reason="STRUTGEO_CLI and STRUTGEO_SCHEMAS must be set (run through ctest)",
)


def load_schema(name):
    with open(os.path.join(SCHEMAS, name), encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft7Validator.check_schema(schema)
    return schema


def run_cli(*args, expect=0):
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=600
    )
    assert proc.returncode == expect, (
        f"{args}: exit {proc.returncode}, stderr: {proc.stderr[-500:]}"
    )
    return proc.stdout


# ---- bindings ----


def test_geometry_bindings():
    tri = sg.ConvexPolygon([(0, 0), (1, 0), (0, 1)])
    assert len(tri) == 3
    assert tri.perimeter() == pytest.approx(2 + math.sqrt(2))
    assert tri.signed_area() == pytest.approx(0.5)
    assert tri.contains(0.25, 0.25)
    assert not tri.contains(2.0, 2.0)

    d = sg.difference_body(tri)
    assert d.perimeter() == pytest.approx(2 * tri.perimeter())
    assert sg.symmetry_center(d) == pytest.approx((0.0, 0.0), abs=1e-12)
    assert sg.symmetry_center(tri) is None

    hx = sg.regular_polygon(6, 1.0)
    assert sg.hausdorff_distance(hx, hx) == 0.0
    doubled = sg.minkowski_sum(hx, hx)
    assert doubled.perimeter() == pytest.approx(12.0)

    back = sg.polygon_from_json(tri.to_json())
    assert back.perimeter() == pytest.approx(tri.perimeter())


def test_strut_bindings():
    holds, failing = sg.has_delta_property(sg.regular_polygon(3, 1.0))
    assert holds and failing == []

    holds, failing = sg.has_delta_property(sg.snub_triangle(0.3))
    assert not holds and failing

    holds, failing = sg.has_delta_s_property(sg.regular_polygon(6, 1.0))
    assert holds and failing == []

    apexes = sg.strut_apexes((0, 0), (1, 0), 1.0)
    assert len(apexes) == 2
    assert apexes[0][1] == pytest.approx(math.sqrt(3) / 2)

    report = json.loads(sg.delta_report_json(sg.regular_polygon(3, 1.0)))
    assert report["holds"] and len(report["certificates"]) == 3


def test_pentagon_bindings():
    theta0, alpha0 = sg.extremal_constants()
    assert theta0 == pytest.approx(0.9630621725, abs=1e-8)
    assert alpha0 == pytest.approx(1.159593548, abs=1e-8)

    sp = sg.special_pentagon_params()
    assert sg.perimeter_closed_form(sp) == pytest.approx(3.0, abs=1e-12)
    assert sg.classify_equality_pattern(sp) == "special_pentagon"
    assert sp.in_omega()

    pts = sg.pentagon_points(sp)
    assert len(pts) == 5
    ax, ay = pts[0]
    cx, cy = pts[2]
    assert math.hypot(ax - cx, ay - cy) == pytest.approx(7 / 8, abs=1e-12)

    assert sg.case1_perimeters() == pytest.approx([3.0, 3.002605955], abs=1e-8)
    assert len(sg.quartic_z1_roots()) == 4
    grad = sg.gradient_closed_form(sp)
    assert grad[2] == pytest.approx(0.0, abs=1e-12)
    assert sg.g_curve(alpha0) == pytest.approx(theta0, abs=1e-9)


def test_search_binding_determinism():
    cfg = sg.SearchConfig()
    cfg.seed = 21
    cfg.iterations = 1500
    cfg.restarts = 1
    cfg.n_vertices = 3
    first = sg.minimize_delta_perimeter(cfg)
    second = sg.minimize_delta_perimeter(cfg)
    assert first == second
    report = json.loads(first)
    jsonschema.validate(report, load_schema("search_report.schema.json"))
    assert report["feasible"]
    assert report["best_value"] >= 3 - 1e-3
    assert report["violations"] == []


def test_svg_binding_is_xml():
    svg = sg.polygon_to_svg(sg.regular_polygon(5, 1.0), show_struts=True)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")


# ---- command-line interface against the shipped schemas ----


def test_cli_constants_schema():
    payload = json.loads(run_cli("constants", "--quiet"))
    jsonschema.validate(payload, load_schema("constants.schema.json"))
    assert payload["theta0"] == pytest.approx(0.9630621725, abs=1e-8)
    assert len(payload["case2_points"]) == 4


def test_cli_construct_and_check_schemas(tmp_path):
    hex_file = tmp_path / "hexagon.json"
    payload = json.loads(
        run_cli("construct", "regular_polygon", "--n", "6", "--side", "1",
                "--out", str(hex_file), "--quiet")
    )
    jsonschema.validate(payload, load_schema("polygon.schema.json"))
    assert len(payload["vertices"]) == 6

    checked = json.loads(run_cli("check", str(hex_file), "--quiet"))
    jsonschema.validate(checked, load_schema("check.schema.json"))
    assert checked["delta"]["holds"]
    assert checked["delta_s"]["holds"]

    snub_file = tmp_path / "snub.json"
    run_cli("construct", "snub_triangle", "--a", "0.3", "--out", str(snub_file), "--quiet")
    failed = json.loads(run_cli("check", str(snub_file), "--quiet", expect=1))
    jsonschema.validate(failed, load_schema("check.schema.json"))
    assert not failed["delta"]["holds"]


def test_cli_pentagon_schema():
    a = repr(math.acos(0.25))
    payload = json.loads(
        run_cli("pentagon", "--alpha", a, "--beta", a, "--gamma", a, "--quiet")
    )
    jsonschema.validate(payload, load_schema("pentagon.schema.json"))
    assert payload["classification"] == "special_pentagon"
    assert payload["perimeter_form_a"] == pytest.approx(3.0, abs=1e-12)


def test_cli_search_schema(tmp_path):
    trace = tmp_path / "trace.csv"
    payload = json.loads(
        run_cli("search", "min-delta", "--n", "3", "--seed", "2", "--iters", "500",
                "--restarts", "1", "--trace", str(trace), "--quiet")
    )
    jsonschema.validate(payload, load_schema("search_report.schema.json"))
    assert payload["feasible"]
    header = trace.read_text().splitlines()[0]
    assert header == "iteration,value,feasible"


def test_cli_svg_is_wellformed_xml(tmp_path):
    svg_file = tmp_path / "pentagon.svg"
    run_cli("construct", "special_pentagon", "--svg", str(svg_file),
            "--show-struts", "--quiet")
    root = ET.parse(svg_file).getroot()
    assert root.tag.endswith("svg")


def test_cli_verify_all_passes():
    payload = json.loads(run_cli("verify-all", "--quiet"))
    jsonschema.validate(payload, load_schema("verify.schema.json"))
    assert payload["status"] == "pass"
    assert all(c["pass"] for c in payload["criteria"])


def test_cli_verify_all_overtight_profile(tmp_path):
    profile = tmp_path / "tight.json"
    profile.write_text(
        json.dumps({"eps_geom": 1e-18, "eps_contains": 1e-18, "eps_check": 1e-18})
    )
    out = run_cli("verify-all", "--profile", str(profile), "--quiet", expect=1)
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("verify.schema.json"))
    assert payload["status"] == "violation"
    assert any(not c["pass"] for c in payload["criteria"])
    # numeric identities hold regardless of tolerance profile
    by_id = {c["id"]: c for c in payload["criteria"]}
    assert by_id[2]["pass"] and by_id[3]["pass"]


def test_cli_input_errors():
    run_cli("check", "/nonexistent/nowhere.json", "--quiet", expect=2)
    run_cli("construct", "hypercube", "--quiet", expect=2)
    run_cli("verify-all", "--profile", "/nonexistent/profile.json", "--quiet", expect=2)
