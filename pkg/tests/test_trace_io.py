import numpy as np
import pytest

from stlrss.stl import Trace, TraceError, read_trace_csv, write_trace_csv


def test_roundtrip_bytes_identical(tmp_path):
    rng = np.random.default_rng(1)
    trace = Trace(0.01, {"a": rng.normal(size=100), "b": rng.normal(size=100)})
    p1 = tmp_path / "t1.csv"
    p2 = tmp_path / "t2.csv"
    write_trace_csv(trace, p1)
    write_trace_csv(read_trace_csv(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_roundtrip_preserves_values(tmp_path):
    trace = Trace(0.1, {"x": [1.0, -2.5, 3.25]})
    path = tmp_path / "t.csv"
    write_trace_csv(trace, path)
    back = read_trace_csv(path)
    assert back.dt == trace.dt
    assert back.channel_names == ("x",)
    np.testing.assert_array_equal(back.channel("x"), trace.channel("x"))


def test_rejects_non_uniform_time(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x\n0.0,1\n0.1,1\n0.25,1\n")
    with pytest.raises(TraceError, match="non-uniform"):
        read_trace_csv(path)


def test_rejects_non_increasing_time(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x\n0.0,1\n0.0,1\n")
    with pytest.raises(TraceError, match="strictly increasing"):
        read_trace_csv(path)


def test_rejects_missing_t_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x,y\n1,2\n")
    with pytest.raises(TraceError, match="'t'"):
        read_trace_csv(path)


def test_rejects_single_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x\n0.0,1\n")
    with pytest.raises(TraceError, match="two samples"):
        read_trace_csv(path)


def test_rejects_ragged_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x,y\n0.0,1,2\n0.1,1\n")
    with pytest.raises(TraceError, match="fields"):
        read_trace_csv(path)


def test_trace_validation():
    with pytest.raises(TraceError):
        Trace(0.0, {"x": [1.0]})
    with pytest.raises(TraceError):
        Trace(0.1, {"x": [1.0], "y": [1.0, 2.0]})
    with pytest.raises(TraceError):
        Trace(0.1, {"x": [float("nan")]})
    with pytest.raises(TraceError):
        Trace(0.1, {})


def test_channel_lookup_error_names_channel():
    trace = Trace(0.1, {"x": [1.0]})
    with pytest.raises(TraceError, match="'y'"):
        trace.channel("y")
