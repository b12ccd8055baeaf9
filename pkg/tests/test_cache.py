import json

import pytest

from dichot.affine import GroupSpec, klein_rectangle_spec
from dichot.cache import (cache_dir, cache_path, load_marks, marks_with_cache,
                          save_marks)
from dichot.errors import IntegrityError
from dichot.pipeline import marks_for


@pytest.fixture
def entry(tmp_path):
    spec = GroupSpec.affine(6)
    result = marks_for(spec)
    path = cache_path(tmp_path, spec)
    save_marks(path, spec, result)
    return spec, result, path


def test_cache_file_name(tmp_path):
    assert cache_path(tmp_path, GroupSpec.affine(6)).name == "affine-6.marks.json"
    assert cache_path(tmp_path, GroupSpec.affine_swap(8)).name == "affine-swap-8.marks.json"
    name = cache_path(tmp_path, klein_rectangle_spec()).name
    assert name.startswith("explicit-") and name.endswith(".marks.json")


def test_round_trip_lossless(entry):
    spec, result, path = entry
    loaded = load_marks(path, spec)
    assert loaded.pair.m_rows == result.pair.m_rows
    assert loaded.pair.b_rows == result.pair.b_rows
    assert loaded.traversal == result.traversal


def test_byte_identical_reemission(entry):
    spec, result, path = entry
    blob = path.read_bytes()
    loaded = load_marks(path, spec)
    save_marks(path, spec, loaded)
    assert path.read_bytes() == blob


def test_corrupt_marks_detected(entry):
    spec, _, path = entry
    data = json.loads(path.read_text())
    data["M"][3][0] += 1
    path.write_text(json.dumps(data))
    with pytest.raises(IntegrityError):
        load_marks(path, spec)


def test_corrupt_inverse_detected(entry):
    spec, _, path = entry
    data = json.loads(path.read_text())
    data["B"][2][0] = "1/3"
    path.write_text(json.dumps(data))
    with pytest.raises(IntegrityError):
        load_marks(path, spec)


def test_descriptor_mismatch_detected(entry):
    _, _, path = entry
    with pytest.raises(IntegrityError):
        load_marks(path, GroupSpec.affine(8))


def test_reordered_traversal_detected(entry):
    spec, _, path = entry
    data = json.loads(path.read_text())
    data["traversal"].reverse()
    data["M"].reverse()
    data["B"].reverse()
    path.write_text(json.dumps(data))
    with pytest.raises(IntegrityError):
        load_marks(path, spec)


def test_marks_with_cache_reads_back(tmp_path, monkeypatch):
    spec = GroupSpec.affine(6)
    first = marks_with_cache(spec, tmp_path)
    assert cache_path(tmp_path, spec).exists()

    import dichot.cache as cache_mod

    def boom(_):
        raise AssertionError("should have loaded from disk")

    monkeypatch.setattr(cache_mod, "marks_for", boom)
    second = marks_with_cache(spec, tmp_path)
    assert second.pair.m_rows == first.pair.m_rows


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("DICHOT_CACHE_DIR", str(tmp_path / "env-cache"))
    assert cache_dir(None) == tmp_path / "env-cache"
    assert cache_dir(tmp_path) == tmp_path
    monkeypatch.delenv("DICHOT_CACHE_DIR")
    assert str(cache_dir(None)) == ".dichot-cache"
