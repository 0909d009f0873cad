import json
import logging
import tempfile
import unittest
from pathlib import Path

from qhom.core.chains import ComplexTheory
from qhom.core.errors import BudgetError, DegreeError
from qhom.core.homology import HomologyGroup
from qhom.core.runs import ENGINE_VERSION, ResultCache, ResultRecord, RunConfig, cache_key


def _record(**overrides) -> ResultRecord:
    fields = {
        "label": "R3",
        "size": 3,
        "table_sha256": "ab" * 32,
        "theory": "rack",
        "degree": 3,
        "group": HomologyGroup(1, (3,)),
        "ms": 12,
    }
    fields.update(overrides)
    return ResultRecord.from_group(**fields)


class RunConfigTests(unittest.TestCase):
    def _config(self, **overrides) -> RunConfig:
        fields = {"source": "R3", "theory": ComplexTheory.rack(), "n_min": 1, "n_max": 3}
        fields.update(overrides)
        return RunConfig(**fields)

    def test_degree_range(self) -> None:
        self.assertEqual(list(self._config().degrees), [1, 2, 3])
        with self.assertRaises(DegreeError):
            self._config(n_min=0)
        with self.assertRaises(DegreeError):
            self._config(n_min=3, n_max=2)
        with self.assertRaises(ValueError):
            self._config(jobs=0)

    def test_degree_cap_yields_to_force(self) -> None:
        self.assertEqual(self._config().check_size(10), 10_000)
        with self.assertRaisesRegex(BudgetError, "--force"):
            self._config(n_max=4).check_size(10)
        self.assertEqual(self._config(n_max=4, force=True).check_size(10), 100_000)

    def test_memory_guard_is_hard(self) -> None:
        with self.assertRaisesRegex(BudgetError, "memory guard"):
            self._config(n_max=6, force=True).check_size(10)


def test_record_payload() -> None:
    payload = _record().to_dict()

    assert payload == {
        "quandle": {"label": "R3", "size": 3, "table_sha256": "ab" * 32},
        "theory": "rack",
        "degree": 3,
        "free_rank": 1,
        "torsion": [3],
        "primary": [3],
        "exponent": 3,
        "ms": 12,
        "engine_version": ENGINE_VERSION,
    }
    assert ResultRecord.from_dict(json.loads(json.dumps(payload))) == _record()


def test_free_groups_report_a_free_exponent() -> None:
    record = _record(group=HomologyGroup(2))

    assert record.exponent == "free"
    assert record.csv_row() == ["R3", "3", "ab" * 32, "rack", "3", "2", "", "free", "12"]
    assert _record(group=HomologyGroup(0, (2, 4))).csv_row()[6] == "2 4"


def test_payload_lists_prime_power_summands() -> None:
    payload = _record(group=HomologyGroup(0, (6, 12))).to_dict()

    assert payload["torsion"] == [6, 12]
    assert payload["primary"] == [2, 3, 3, 4]
    assert json.loads(json.dumps(payload))["primary"] == [2, 3, 3, 4]


def test_cache_keys_separate_every_component() -> None:
    base = cache_key("aa", "rack", 2)

    assert len(base) == 64
    assert base != cache_key("ab", "rack", 2)
    assert base != cache_key("aa", "quandle", 2)
    assert base != cache_key("aa", "rack", 3)
    assert base != cache_key("aa", "rack", 2, engine_version="0.0.1")


class ResultCacheTests(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.cache = ResultCache(Path(self._tmp.name) / "cache")

    def test_put_then_get(self) -> None:
        record = _record()
        path = self.cache.put(record, "rack")

        self.assertTrue(path.is_file())
        self.assertEqual(list(path.parent.glob("*.tmp")), [])
        self.assertEqual(self.cache.get(record.table_sha256, "rack", 3), record)
        self.assertIsNone(self.cache.get(record.table_sha256, "quandle", 3))
        self.assertIsNone(self.cache.get(record.table_sha256, "rack", 2))

    def test_unreadable_entries_are_misses(self) -> None:
        record = _record()
        self.cache.put(record, "rack").write_text("{not json", encoding="utf-8")

        with self.assertLogs("qhom.runs", level=logging.WARNING) as logs:
            self.assertIsNone(self.cache.get(record.table_sha256, "rack", 3))
        self.assertIn("unreadable cache entry", logs.output[0])

    def test_entries_from_another_engine_version_are_ignored(self) -> None:
        record = _record()
        path = self.cache.put(record, "rack")
        payload = json.loads(path.read_text(encoding="utf-8"))
        payload["engine_version"] = "0.0.1"
        path.write_text(json.dumps(payload), encoding="utf-8")

        self.assertIsNone(self.cache.get(record.table_sha256, "rack", 3))
