import numpy as np
import pytest

from timewarp import (
    LabeledDataset,
    TimeSeries,
    parse_ucr,
    parse_ucr_text,
    run_knn_protocol,
    serialize_ucr,
    synth_gaussian_classes,
    two_spike_pair,
)
from timewarp.datasets import (
    DIGIT_LADDER,
    LEV_STRINGS,
    THREE_DIGIT_SET,
    reference_sequence_sets,
)
from timewarp.errors import EmptyFileError, ParseError, RaggedRowsError


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_whitespace_rows():
    ds = parse_ucr_text("1 0.5 0.7\n2 0.1 0.2\n")
    assert len(ds) == 2
    assert [len(item) for item in ds.items] == [2, 2]
    assert ds.labels == (0, 1)
    assert ds.label_names == ("1", "2")
    assert ds.items[0].timestamps.tolist() == [1.0, 2.0]


def test_parse_comma_rows_identical():
    a = parse_ucr_text("1 0.5 0.7\n2 0.1 0.2\n")
    b = parse_ucr_text("1,0.5,0.7\n2,0.1,0.2\n")
    assert a.labels == b.labels
    for x, y in zip(a.items, b.items):
        assert x == y


def test_parse_error_reports_line_number():
    with pytest.raises(ParseError) as exc:
        parse_ucr_text("1 0.5\n2 oops\n")
    assert exc.value.line == 2


def test_parse_ragged_rows_rejected():
    with pytest.raises(RaggedRowsError):
        parse_ucr_text("1 0.5 0.7\n2 0.1\n")


def test_parse_empty_file_rejected():
    with pytest.raises(EmptyFileError):
        parse_ucr_text("\n\n")


def test_parse_missing_file():
    with pytest.raises(ParseError):
        parse_ucr("/nonexistent/file.txt")


def test_labels_remap_dense_with_mapping():
    ds = parse_ucr_text("7 1 2\n-1 3 4\n7 5 6\nx 0 0\n")
    assert sorted(set(ds.labels)) == [0, 1, 2]
    assert ds.label_names == ("-1", "7", "x")
    assert ds.labels == (1, 0, 1, 2)


def test_round_trip_is_bit_identical(rng):
    values = rng.normal(size=(4, 6))
    ds = LabeledDataset(
        items=tuple(TimeSeries(v) for v in values),
        labels=(0, 1, 0, 1),
        label_names=("a", "b"),
    )
    text = serialize_ucr(ds)
    back = parse_ucr_text(text)
    for x, y in zip(ds.items, back.items):
        assert np.array_equal(x.values, y.values)
    assert back.labels == ds.labels


def test_parse_from_path(tmp_path):
    p = tmp_path / "data.txt"
    p.write_text("1 0.5 0.7\n2 0.1 0.2\n")
    ds = parse_ucr(p)
    assert len(ds) == 2


# ---------------------------------------------------------------------------
# reference fixtures
# ---------------------------------------------------------------------------


def test_fixture_shapes():
    sets = reference_sequence_sets()
    assert len(sets.lev_strings) == 5
    assert [len(s) for s in sets.digit_ladder] == [2, 3, 4, 5]
    assert len(sets.three_digit) == 10
    assert all(len(s) == 3 for s in sets.three_digit)


def test_fixture_tokens_verbatim():
    assert LEV_STRINGS == ("abc", "bad", "dab", "adc", "bcd")
    assert DIGIT_LADDER == ("01", "012", "0123", "01234")
    assert THREE_DIGIT_SET == (
        "010", "012", "103", "301", "032", "123", "023", "003", "302", "321",
    )


def test_three_digit_timestamps():
    sets = reference_sequence_sets()
    for s in sets.three_digit:
        assert s.timestamps.tolist() == [1.0, 2.0, 3.0]


def test_two_spike_pair_values_verbatim():
    a, b = two_spike_pair()
    assert a.values.ravel().tolist() == [0, 2, 0, 0, 0, 3, 0, 0, 0]
    assert b.values.ravel().tolist() == [0, 0, 0, 2, 0, 0, 0, 3, 0]
    assert a.timestamps.tolist() == list(range(1, 10))
    assert b.timestamps.tolist() == list(range(1, 10))
    assert len(a) == len(b) == 9
    assert float(np.sum(a.values * b.values)) == 0.0


# ---------------------------------------------------------------------------
# synthetic generator
# ---------------------------------------------------------------------------


def test_synth_deterministic_per_seed():
    a = synth_gaussian_classes(3, 4, 20, noise=0.1, seed=12)
    b = synth_gaussian_classes(3, 4, 20, noise=0.1, seed=12)
    for x, y in zip(a.items, b.items):
        assert x == y
    c = synth_gaussian_classes(3, 4, 20, noise=0.1, seed=13)
    assert any(x != y for x, y in zip(a.items, c.items))


def test_synth_shapes_and_labels():
    ds = synth_gaussian_classes(3, 5, 24, seed=0)
    assert len(ds) == 15
    assert ds.class_counts() == {0: 5, 1: 5, 2: 5}
    assert all(len(item) == 24 for item in ds.items)


def test_synth_noise_free_dtw_loo_is_zero():
    train = synth_gaussian_classes(2, 6, 30, noise=0.0, seed=3)
    res = run_knn_protocol(train, train, "dtw")
    assert res.train_score == 0.0


def test_synth_single_item_per_class_degrades_gracefully():
    train = synth_gaussian_classes(2, 1, 16, noise=0.0, seed=1)
    test = synth_gaussian_classes(2, 2, 16, noise=0.0, seed=2, split="test")
    res = run_knn_protocol(train, test, "dtw")
    assert 0.0 <= res.test_score <= 100.0


def test_synth_validation():
    with pytest.raises(ValueError):
        synth_gaussian_classes(0, 5, 10)
