import json

from parkstat.cache import SCHEMA, ResultsCache, code_fingerprint
from parkstat.cli import main


def test_roundtrip(tmp_path):
    cache = ResultsCache(tmp_path)
    assert cache.get("census", 9) is None
    cache.put("census", 9, None, [1, 2, 3])
    assert cache.get("census", 9) == [1, 2, 3]
    again = ResultsCache(tmp_path)
    assert again.get("census", 9) == [1, 2, 3]


def test_schema_mismatch_discarded(tmp_path):
    cache = ResultsCache(tmp_path)
    cache.put("census", 5, None, [9])
    payload = json.loads((tmp_path / "results.json").read_text())
    payload["schema"] = SCHEMA + 1
    (tmp_path / "results.json").write_text(json.dumps(payload))
    assert ResultsCache(tmp_path).get("census", 5) is None


def test_stale_code_discarded(tmp_path):
    cache = ResultsCache(tmp_path)
    cache.put("census", 5, None, [9])
    payload = json.loads((tmp_path / "results.json").read_text())
    payload["code"] = "0" * 16
    (tmp_path / "results.json").write_text(json.dumps(payload))
    assert ResultsCache(tmp_path).get("census", 5) is None


def test_corrupt_file_ignored(tmp_path):
    (tmp_path / "results.json").write_text("{ not json")
    cache = ResultsCache(tmp_path)
    assert cache.get("census", 4) is None
    cache.put("census", 4, None, [24, 51, 34, 16])
    assert ResultsCache(tmp_path).get("census", 4) == [24, 51, 34, 16]


def test_fingerprint_stable():
    assert code_fingerprint() == code_fingerprint()
    assert len(code_fingerprint()) == 16


def test_cli_census_uses_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PARKSTAT_CACHE", str(tmp_path))
    assert main(["census", "--n", "4", "--cache"]) == 0
    first = capsys.readouterr().out
    stored = json.loads((tmp_path / "results.json").read_text())
    assert stored["entries"]["census:4:-"] == [24, 51, 34, 16]
    # poison the cache entry: a cached value is trusted only with matching
    # schema and fingerprint, so the poisoned value is served back
    stored["entries"]["census:4:-"] = [1, 1, 1, 1]
    (tmp_path / "results.json").write_text(json.dumps(stored))
    assert main(["census", "--n", "4", "--cache"]) == 0
    second = capsys.readouterr().out
    assert second.strip() == "4\t1\t1\t1\t1"
    assert first.strip() == "4\t24\t51\t34\t16"
