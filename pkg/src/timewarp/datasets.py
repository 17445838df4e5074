"""Dataset ingestion, desk-scale reference fixtures and synthetic generators.

The text format accepted here is one labelled series per row: first field
the class label, remaining fields the sample values, separated by commas
or whitespace.  Series built from such files get timestamps ``1..N``.

The reference fixtures are small sequence sets with known pairwise
distance matrices and spectra, used as golden tests and by the
verification command.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
import numpy as np

from .errors import EmptyFileError, ParseError, RaggedRowsError
from .series import SymbolSequence, TimeSeries


@dataclass(frozen=True)
class UcrRecord:
    """One parsed row: a class label and its value vector."""

    label: object
    values: tuple


@dataclass(frozen=True)
class LabeledDataset:
    """Series with dense integer class labels and a split tag."""

    items: tuple
    labels: tuple
    split: str = "train"
    label_names: tuple = ()

    def __post_init__(self):
        if len(self.items) != len(self.labels):
            raise ValueError(f"{len(self.items)} items vs {len(self.labels)} labels")

    def __len__(self) -> int:
        return len(self.items)

    @property
    def n_classes(self) -> int:
        return len(set(self.labels))

    def class_counts(self) -> dict:
        counts: dict = {}
        for lab in self.labels:
            counts[lab] = counts.get(lab, 0) + 1
        return counts


def _records_from_text(text: str):
    records = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = [t for t in (line.split(",") if "," in line else line.split()) if t != ""]
        if len(tokens) < 2:
            raise ParseError("row needs a label and at least one value", line=lineno)
        label = tokens[0]
        try:
            values = tuple(float(t) for t in tokens[1:])
        except ValueError as exc:
            raise ParseError(f"non-numeric value field ({exc})", line=lineno) from None
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise RaggedRowsError(
                f"row has {len(values)} values, previous rows had {width}", line=lineno
            )
        records.append(UcrRecord(label, values))
    if not records:
        raise EmptyFileError("no data rows found")
    return records


def _dense_labels(raw_labels):
    def key(lab):
        try:
            return (0, float(lab), "")
        except (TypeError, ValueError):
            return (1, 0.0, str(lab))

    names = sorted(set(raw_labels), key=key)
    index = {name: i for i, name in enumerate(names)}
    return tuple(index[lab] for lab in raw_labels), tuple(str(n) for n in names)


def parse_ucr(source, split: str = "train") -> LabeledDataset:
    """Parse a labelled-rows text file (path, file object, or string)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        path = Path(source)
        if path.exists():
            text = path.read_text()
        else:
            raise ParseError(f"no such file: {source}")
    records = _records_from_text(text)
    labels, names = _dense_labels([r.label for r in records])
    items = tuple(TimeSeries(list(r.values)) for r in records)
    return LabeledDataset(items=items, labels=labels, split=split, label_names=names)


def parse_ucr_text(text: str, split: str = "train") -> LabeledDataset:
    return parse_ucr(io.StringIO(text), split=split)


def serialize_ucr(ds: LabeledDataset, path=None) -> str:
    """Space-separated rows with 17-significant-digit decimals."""
    lines = []
    for item, label in zip(ds.items, ds.labels):
        name = ds.label_names[label] if ds.label_names else str(label)
        fields = [name] + [f"{v:.17g}" for v in item.values.ravel()]
        lines.append(" ".join(fields))
    out = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(out)
    return out


# ---------------------------------------------------------------------------
# reference fixtures
# ---------------------------------------------------------------------------

#: Five strings whose unit-cost edit distance matrix is indefinite.
LEV_STRINGS = ("abc", "bad", "dab", "adc", "bcd")

LEV_MATRIX = np.array(
    [
        [0, 3, 2, 1, 2],
        [3, 0, 2, 2, 1],
        [2, 2, 0, 3, 3],
        [1, 2, 3, 0, 3],
        [2, 1, 3, 3, 0],
    ],
    dtype=np.float64,
)

#: Zero-sum witness vectors for LEV_MATRIX: quadratic forms 2/3 and -4/3.
LEV_WITNESS_C = np.array([1.0, 1.0, -2.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0])
LEV_WITNESS_D = np.array([1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0])

#: Growing digit ramps used for the warping-distance counter-example.
DIGIT_LADDER = ("01", "012", "0123", "01234")

#: The counter-example warping-distance matrix as printed in the source
#: material.  The DTW recursion does not reproduce it (see the library
#: notes); it is kept only to demonstrate the indefinite quadratic forms.
DTW_MATRIX_PRINTED = np.array(
    [
        [0, 1, 2, 3],
        [1, 0, 0, 0],
        [2, 0, 0, 0],
        [3, 0, 0, 0],
    ],
    dtype=np.float64,
)

DTW_WITNESS_C = np.array([0.25, -0.375, -0.125, 0.25])
DTW_WITNESS_D = np.array([-0.25, -0.25, 0.25, 0.25])

#: Ten three-digit sequences shared by the TWED and ERP fixtures.
THREE_DIGIT_SET = (
    "010", "012", "103", "301", "032", "123", "023", "003", "302", "321",
)

#: TWED matrix (nu=1, lambda=0, L1, anchored boundary) over THREE_DIGIT_SET.
TWED_MATRIX = np.array(
    [
        [0, 2, 7, 9, 6, 7, 5, 5, 10, 9],
        [2, 0, 5, 9, 4, 5, 3, 3, 8, 9],
        [7, 5, 0, 6, 7, 4, 6, 2, 5, 10],
        [9, 9, 6, 0, 13, 10, 12, 8, 1, 4],
        [6, 4, 7, 13, 0, 5, 3, 5, 12, 9],
        [7, 5, 4, 10, 5, 0, 2, 6, 9, 6],
        [5, 3, 6, 12, 3, 2, 0, 4, 11, 8],
        [5, 3, 2, 8, 5, 6, 4, 0, 7, 10],
        [10, 8, 5, 1, 12, 9, 11, 7, 0, 5],
        [9, 9, 10, 4, 9, 6, 8, 10, 5, 0],
    ],
    dtype=np.float64,
)

#: ERP matrix (g=0, L1, anchored boundary) over THREE_DIGIT_SET.
ERP_MATRIX = np.array(
    [
        [0, 2, 3, 3, 4, 5, 4, 2, 4, 5],
        [2, 0, 3, 5, 2, 3, 2, 2, 4, 5],
        [3, 3, 0, 4, 3, 2, 3, 1, 3, 4],
        [3, 5, 4, 0, 7, 6, 7, 5, 1, 2],
        [4, 2, 3, 7, 0, 3, 2, 2, 6, 5],
        [5, 3, 2, 6, 3, 0, 1, 3, 5, 4],
        [4, 2, 3, 7, 2, 1, 0, 2, 6, 5],
        [2, 2, 1, 5, 2, 3, 2, 0, 4, 5],
        [4, 4, 3, 1, 6, 5, 6, 4, 0, 1],
        [5, 5, 4, 2, 5, 4, 5, 5, 1, 0],
    ],
    dtype=np.float64,
)


def digit_series(token: str) -> TimeSeries:
    """A digit string as a numeric series with timestamps 1..N."""
    return TimeSeries([float(c) for c in token])


@dataclass(frozen=True)
class ReferenceSets:
    """The desk-scale sequence sets with known distance matrices."""

    lev_strings: tuple
    digit_ladder: tuple
    three_digit: tuple


def reference_sequence_sets() -> ReferenceSets:
    return ReferenceSets(
        lev_strings=tuple(SymbolSequence(s) for s in LEV_STRINGS),
        digit_ladder=tuple(digit_series(s) for s in DIGIT_LADDER),
        three_digit=tuple(digit_series(s) for s in THREE_DIGIT_SET),
    )


def two_spike_pair():
    """Two length-9 series whose spikes are offset in time.

    Their Euclidean inner product is exactly zero while the time-warp
    inner products see the nearby spikes; the pair anchors the inner
    product demos and tests.
    """
    a = TimeSeries([0, 2, 0, 0, 0, 3, 0, 0, 0])
    b = TimeSeries([0, 0, 0, 2, 0, 0, 0, 3, 0])
    return a, b


# ---------------------------------------------------------------------------
# synthetic generator
# ---------------------------------------------------------------------------


def _class_template(cls: int, u: np.ndarray) -> np.ndarray:
    if cls % 3 == 0:
        return np.sin(2.0 * np.pi * u)
    if cls % 3 == 1:
        return np.sin(4.0 * np.pi * u)
    return np.sign(np.sin(2.0 * np.pi * u)) * 0.8


def synth_gaussian_classes(classes: int, per_class: int, length: int,
                           noise: float = 0.1, seed: int = 0,
                           split: str = "train", spike_prob: float = 0.0,
                           spike_amp: float = 2.5) -> LabeledDataset:
    """Randomly time-warped class templates with additive Gaussian noise.

    Each instance samples its class template through a random smooth
    monotone warp of the time axis, so rigid (sample-by-sample) distances
    see large in-class variation that elastic measures can realign.
    With ``spike_prob > 0`` each sample additionally receives a large
    outlier spike with that probability; best-path alignments chase such
    spikes while path-averaging kernels smooth them out.  Deterministic
    for a fixed seed.
    """
    if classes < 1 or per_class < 1 or length < 2:
        raise ValueError("classes, per_class >= 1 and length >= 2 required")
    rng = np.random.default_rng(seed)
    u = np.linspace(0.0, 1.0, length)
    items = []
    labels = []
    for cls in range(classes):
        for _ in range(per_class):
            alpha = rng.uniform(-0.45, 0.45)
            warped = u + alpha * u * (1.0 - u) * 2.0
            amp = 1.0 + 0.15 * rng.standard_normal()
            vals = amp * _class_template(cls, warped)
            vals = vals + noise * rng.standard_normal(length)
            if spike_prob > 0.0:
                mask = rng.random(length) < spike_prob
                vals = vals + mask * rng.choice([-spike_amp, spike_amp], size=length)
            items.append(TimeSeries(vals))
            labels.append(cls)
    return LabeledDataset(items=tuple(items), labels=tuple(labels), split=split)
