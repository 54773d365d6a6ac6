import json
import os

from algebra.kschur import kschur_in_h, set_cache_client
from algebra.polyring import H, parse
from store.cache_client import KSchurCache, cache_filename, compute_hash, get_cache_client, resolve_cache_dir


def _table():
    return {
        (2,): parse("h2", H(3)),
        (1, 1): parse("h1^2 - h2", H(3)),
    }


def test_compute_hash():
    assert compute_hash("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


def test_save_and_load(tmp_path):
    cache = KSchurCache(str(tmp_path))
    assert cache.load(3, 2) is None
    cache.save(3, 2, _table())
    assert os.path.basename(cache.path(3, 2)) == cache_filename(3, 2) == "kschur-n3-d2.json"
    assert cache.load(3, 2) == _table()
    assert [p.name for p in tmp_path.iterdir()] == ["kschur-n3-d2.json"]


def test_tampered_file_is_a_miss(tmp_path):
    cache = KSchurCache(str(tmp_path))
    cache.save(3, 2, _table())
    with open(cache.path(3, 2), encoding="utf-8") as f:
        payload = json.load(f)
    payload["table"]["[2]"][0]["coeff"] = "5"
    with open(cache.path(3, 2), "w", encoding="utf-8") as f:
        json.dump(payload, f)
    assert cache.load(3, 2) is None


def test_unreadable_file_is_a_miss(tmp_path):
    cache = KSchurCache(str(tmp_path))
    with open(cache.path(3, 2), "w", encoding="utf-8") as f:
        f.write("{not json")
    assert cache.load(3, 2) is None


def test_kschur_tables_go_through_the_cache(tmp_path):
    set_cache_client(KSchurCache(str(tmp_path)))
    try:
        assert kschur_in_h((2, 1), 3) == parse("h2*h1", H(3))
        assert (tmp_path / "kschur-n3-d3.json").exists()
        # a fresh client reads the table back from disk
        set_cache_client(KSchurCache(str(tmp_path)))
        assert kschur_in_h((1, 1, 1), 3) == parse("h1^3 - h2*h1", H(3))
    finally:
        set_cache_client(None)


def test_cache_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.delenv("QKSCHUR_CACHE_DIR", raising=False)
    assert resolve_cache_dir(None) is None
    assert get_cache_client() is None

    target = tmp_path / "nested" / "cache"
    monkeypatch.setenv("QKSCHUR_CACHE_DIR", str(target))
    assert resolve_cache_dir(None) == str(target)
    assert target.is_dir()
    assert get_cache_client(str(tmp_path)).directory == str(tmp_path)


def test_cache_dir_that_cannot_be_created(tmp_path, monkeypatch):
    monkeypatch.delenv("QKSCHUR_CACHE_DIR", raising=False)
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    assert resolve_cache_dir(str(blocker / "cache")) is None
    assert get_cache_client(str(blocker)) is None
