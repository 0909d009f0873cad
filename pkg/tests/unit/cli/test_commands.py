import json
import tempfile
import unittest
from pathlib import Path

from typer.testing import CliRunner


class CLITestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.temp_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.temp_dir.name)
        self.env = {
            "QHOM_CONFIG_DIR": self.temp_dir.name,
            "QHOM_CACHE": str(self.root / "cache"),
            "QHOM_LOG_LEVEL": "quiet",
        }
        self.runner = CliRunner()

    def tearDown(self) -> None:
        self.temp_dir.cleanup()

    def invoke(self, *args: str):
        from qhom import cli

        return self.runner.invoke(cli.app, list(args), env=self.env)

    def test_version_flag(self) -> None:
        from qhom import __version__

        result = self.invoke("--version")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        self.assertIn(f"qhom {__version__}", result.stdout)

    def test_validate_catalog_quandle(self) -> None:
        result = self.invoke("validate", "R3")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        self.assertIn("Axioms of R3", result.stdout)

    def test_validate_json_reports_failing_quasigroup_check(self) -> None:
        result = self.invoke("validate", "R4", "-f", "json")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        payload = json.loads(result.stdout)
        checks = {check["name"]: check for check in payload["checks"]}
        self.assertFalse(checks["quasigroup"]["passed"])
        self.assertIsNotNone(checks["quasigroup"]["witness"])
        self.assertEqual(payload["orbits"], 2)
        self.assertEqual(payload["size"], 4)

    def test_validate_malformed_table_exits_with_line_number(self) -> None:
        table = self.root / "broken.txt"
        table.write_text("3\n0 2 1\n2 1\n1 0 2\n", encoding="utf-8")

        result = self.invoke("validate", str(table))
        self.assertEqual(result.exit_code, 2, msg=result.output)
        self.assertIn("line 3", result.stdout)

    def test_validate_unknown_name_lists_known_forms(self) -> None:
        result = self.invoke("validate", "Q7")
        self.assertEqual(result.exit_code, 2, msg=result.output)
        self.assertIn("Unknown quandle", result.stdout)

    def test_validate_export_writes_table(self) -> None:
        target = self.root / "r5.txt"
        result = self.invoke("validate", "R5", "--export", str(target))
        self.assertEqual(result.exit_code, 0, msg=result.output)
        self.assertTrue(target.exists())

        reread = self.invoke("validate", str(target), "-f", "json")
        self.assertEqual(reread.exit_code, 0, msg=reread.output)
        self.assertEqual(json.loads(reread.stdout)["size"], 5)

    def test_homology_json_free_ranks(self) -> None:
        result = self.invoke("homology", "R3", "-t", "quandle", "-d", "1..3", "-f", "json")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        records = json.loads(result.stdout)
        self.assertEqual([record["degree"] for record in records], [1, 2, 3])
        self.assertEqual([record["free_rank"] for record in records], [1, 0, 0])
        self.assertEqual(records[2]["torsion"], [3])
        self.assertEqual(records[2]["primary"], [3])

    def test_homology_rack_free_ranks(self) -> None:
        result = self.invoke("homology", "R3", "-d", "1..3", "-f", "json")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        records = json.loads(result.stdout)
        self.assertEqual([record["free_rank"] for record in records], [1, 1, 1])
        self.assertTrue(all(record["theory"] == "rack" for record in records))

    def test_homology_warm_cache_rerun_is_identical(self) -> None:
        first = self.invoke("homology", "R3", "-t", "quandle", "-d", "2..3", "-f", "json")
        self.assertEqual(first.exit_code, 0, msg=first.output)
        self.assertTrue(any((self.root / "cache").rglob("*.json")))

        second = self.invoke("homology", "R3", "-t", "quandle", "-d", "2..3", "-f", "json")
        self.assertEqual(second.exit_code, 0, msg=second.output)
        self.assertEqual(first.stdout, second.stdout)

    def test_homology_csv_has_header(self) -> None:
        result = self.invoke("homology", "R3", "-d", "1", "-f", "csv", "--no-cache")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        lines = result.stdout.strip().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith("label,size,table_sha256"))

    def test_homology_rejects_bad_degree_range(self) -> None:
        for degrees in ("3..1", "0..2", "two"):
            with self.subTest(degrees=degrees):
                result = self.invoke("homology", "R3", "-d", degrees)
                self.assertEqual(result.exit_code, 2, msg=result.output)

    def test_homology_rejects_unknown_theory(self) -> None:
        result = self.invoke("homology", "R3", "-t", "cubic")
        self.assertEqual(result.exit_code, 2, msg=result.output)

    def test_homology_refuses_large_range_without_force(self) -> None:
        result = self.invoke("homology", "R5", "-d", "1..6", "--no-cache")
        self.assertEqual(result.exit_code, 2, msg=result.output)
        self.assertIn("--force", result.stdout)

    def test_verify_composite_homotopy_passes(self) -> None:
        result = self.invoke("verify", "R3", "-i", "G", "-n", "3")
        self.assertEqual(result.exit_code, 0, msg=result.output)

    def test_verify_json_payload(self) -> None:
        result = self.invoke("verify", "R3", "-i", "D", "-n", "2", "-f", "json")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        payload = json.loads(result.stdout)
        self.assertTrue(payload["passed"])

    def test_verify_negative_control_on_non_quasigroup(self) -> None:
        expected = self.invoke("verify", "R4", "-i", "D", "-n", "2", "--expect-failure")
        self.assertEqual(expected.exit_code, 0, msg=expected.output)
        self.assertIn("First witness", expected.stdout)

        refused = self.invoke("verify", "R4", "-i", "D", "-n", "2")
        self.assertEqual(refused.exit_code, 2, msg=refused.output)
        self.assertIn("not a quasigroup", refused.stdout)

    def test_verify_expect_failure_on_passing_identity_exits_one(self) -> None:
        result = self.invoke("verify", "R3", "-i", "G", "-n", "2", "--expect-failure")
        self.assertEqual(result.exit_code, 1, msg=result.output)

    def test_multiterm_rejects_failed_hypotheses(self) -> None:
        result = self.invoke("multiterm", "R3", "--coeffs", "1,1", "--no-cache")
        self.assertEqual(result.exit_code, 2, msg=result.output)

    def test_multiterm_json_rows_divide_bound(self) -> None:
        result = self.invoke(
            "multiterm",
            "Alex(5,2)",
            "Alex(5,3)",
            "--coeffs=2,-1,-1",
            "-d",
            "1..2",
            "-f",
            "json",
            "--no-cache",
        )
        self.assertEqual(result.exit_code, 0, msg=result.output)
        payload = json.loads(result.stdout)
        self.assertEqual([row["bound"] for row in payload["rows"]], [10, 10])
        self.assertTrue(all(row["divides_bound"] == "yes" for row in payload["rows"]))
        self.assertEqual(payload["verification"], [])

    def test_theorem_on_quasigroup_quandle(self) -> None:
        result = self.invoke("theorem", "R3", "-n", "3")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        self.assertIn("Torsion annihilated", result.stdout)

    def test_config_show_reports_sources(self) -> None:
        config_file = self.root / "config.toml"
        config_file.write_text("[runs]\nbudget = 500\n", encoding="utf-8")

        result = self.invoke("config", "show")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        self.assertIn("Config file:", result.stdout)
        self.assertIn("runs.budget", result.stdout)
        self.assertIn("500", result.stdout)

    def test_config_show_json(self) -> None:
        (self.root / "config.toml").write_text('verbosity = "debug"\n\n[runs]\njobs = 2\n', encoding="utf-8")

        result = self.invoke("config", "show", "-f", "json")
        self.assertEqual(result.exit_code, 0, msg=result.output)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["file"]["verbosity"], "verbose")
        self.assertEqual(payload["file"]["runs"]["jobs"], 2)
        self.assertEqual(payload["effective"]["runs.jobs"], {"value": 2, "source": "file"})
        self.assertEqual(payload["effective"]["verbosity"]["source"], "env")
        self.assertEqual(payload["effective"]["runs.cache_dir"]["source"], "env")


if __name__ == "__main__":
    unittest.main()
