import json

from click.testing import CliRunner

from knotobstruct.cli import main

TREFOIL_PD = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)"


def invoke(*args, **kwargs):
    return CliRunner().invoke(main, list(args), **kwargs)


class TestInvariants:
    def test_pretzel_table(self):
        result = invoke("invariants", "--pretzel", "1,1,1")
        assert result.exit_code == 0
        assert "HoldsNontrivialAlexander" in result.output
        assert "-1*t^4 + 1*t^3 + 1*t" in result.output

    def test_pretzel_json(self):
        result = invoke("invariants", "--pretzel", "5,7,-3", "--json")
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["verdict"] == "HoldsMod16"
        assert doc["ob"] == "-8"
        assert doc["determinant"] == 1

    def test_pd_source(self):
        result = invoke("invariants", "--pd", TREFOIL_PD, "--json")
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["jones"] == {"4": "-1", "3": "1", "1": "1"}

    def test_spine_with_tinv_prints_theta(self):
        result = invoke(
            "invariants", "--spine", "0,0,0", "--tinv", "0,0,0,1"
        )
        assert result.exit_code == 0
        assert "theta" in result.output
        assert "-4*t - 28 - 4*t^-1" in result.output

    def test_requires_exactly_one_source(self):
        assert invoke("invariants").exit_code != 0
        assert (
            invoke("invariants", "--pretzel", "1,1,1", "--spine", "0,0,0").exit_code
            != 0
        )

    def test_bad_pretzel_exits_2(self):
        result = invoke("invariants", "--pretzel", "2,3,5")
        assert result.exit_code != 0


class TestObstruct:
    def test_trefoil_verdict(self):
        result = invoke("obstruct", "--pretzel", "1,1,1")
        assert result.exit_code == 0
        assert "HoldsNontrivialAlexander" in result.output

    def test_k1_verdict(self):
        result = invoke("obstruct", "--pretzel", "5,7,-3")
        assert result.exit_code == 0
        assert "HoldsMod16" in result.output

    def test_k3_inconclusive(self):
        result = invoke("obstruct", "--pretzel", "13,15,-7")
        assert result.exit_code == 0
        assert "Inconclusive" in result.output

    def test_pd_plus_seifert_pair_allowed(self):
        result = invoke(
            "obstruct", "--pd", TREFOIL_PD, "--seifert", "-1,1;0,-1", "--json"
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["verdict"] == "HoldsNontrivialAlexander"
        assert doc["lambda_w"] == "-1/18"

    def test_explicit_jones(self):
        result = invoke(
            "obstruct",
            "--seifert", "-1,1;0,-1",
            "--jones", "-1*t^4 + 1*t^3 + 1*t^1",
            "--json",
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["ob"] == "4"


class TestPretzelScan:
    def test_default_range_verdicts(self):
        result = invoke("pretzel-scan", "--k-min", "1", "--k-max", "8", "--json")
        assert result.exit_code == 0
        rows = json.loads(result.output)
        assert [r["k"] for r in rows] == list(range(1, 9))
        obstructed = {r["k"] for r in rows if r["verdict_mod16"]}
        assert obstructed == {1, 2, 5, 6}
        assert all(r["alexander_trivial"] for r in rows)

    def test_jones_route_agrees(self):
        result = invoke(
            "pretzel-scan", "--k-min", "1", "--k-max", "1", "--jones-upto", "1",
            "--json",
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)
        assert rows[0]["routes_agree"] is True
        assert rows[0]["ob_jones_route"] == rows[0]["ob_closed_form"] == "-8"

    def test_text_output(self):
        result = invoke("pretzel-scan", "--k-max", "2")
        assert result.exit_code == 0
        assert "P(5,7,-3)" in result.output
        assert "mod16_obstructs=True" in result.output

    def test_bad_range(self):
        assert invoke("pretzel-scan", "--k-min", "3", "--k-max", "1").exit_code != 0


class TestBatch:
    def test_mixed_csv(self, tmp_path):
        csv_path = tmp_path / "knots.csv"
        csv_path.write_text(
            "kind,label,payload\n"
            "pretzel,trefoil,1,1,1\n"
            "pretzel,k1,5,7,-3\n"
            f'pd,trefoil_pd,"{TREFOIL_PD}"\n'
            "pretzel,bad,2,4,6\n"
            "mystery,huh,1\n"
        )
        out_path = tmp_path / "out.json"
        result = invoke("batch", "--input", str(csv_path), "--output", str(out_path))
        assert result.exit_code == 0
        doc = json.loads(out_path.read_text())
        assert len(doc["results"]) == 5
        by_label = {r["label"]: r for r in doc["results"]}
        assert by_label["trefoil"]["report"]["verdict"] == "HoldsNontrivialAlexander"
        assert by_label["k1"]["report"]["verdict"] == "HoldsMod16"
        # a bare PD has no Seifert matrix, hence no Alexander route
        assert by_label["trefoil_pd"]["report"]["verdict"] == "Inconclusive"
        assert "error" in by_label["bad"]
        assert "error" in by_label["huh"]
        assert doc["summary"]["error"] == 2
        assert doc["summary"]["HoldsNontrivialAlexander"] == 1
        assert doc["summary"]["Inconclusive"] == 1
        assert "summary:" in result.output

    def test_empty_csv(self, tmp_path):
        csv_path = tmp_path / "empty.csv"
        csv_path.write_text("kind,label\n")
        result = invoke("batch", "--input", str(csv_path))
        assert result.exit_code == 0
        doc = json.loads(result.output.split("summary:")[0])
        assert doc == {"results": [], "summary": {}}

    def test_bad_header(self, tmp_path):
        csv_path = tmp_path / "bad.csv"
        csv_path.write_text("name,stuff\npretzel,x,1,1,1\n")
        assert invoke("batch", "--input", str(csv_path)).exit_code != 0


class TestSelftest:
    def test_all_suites_pass(self):
        result = invoke("selftest")
        assert result.exit_code == 0
        assert "FAIL" not in result.output
        assert "pass" in result.output

    def test_single_suite(self):
        result = invoke("selftest", "--suite", "trefoil")
        assert result.exit_code == 0
        assert "trefoil" in result.output

    def test_flip_smoothing_fails(self):
        result = invoke("selftest", "--suite", "trefoil", "--flip-smoothing")
        assert result.exit_code != 0
        assert "FAIL" in result.output
