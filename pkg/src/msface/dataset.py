"""Sample naming protocol, directory scanning and train/test splits.

Every capture is identified by an 8-character code::

    positions 1-2   person id      "01".."41" (relaxed: "01".."99")
    positions 3-4   session        "S1".."S4" (relaxed: "S1".."S9")
    position  5     sensor         C = visible, I = near infrared, T = thermal
    positions 6-7   illumination   NA = natural, IR = infrared, AR = artificial
    position  8     sample index   "1".."5"   (relaxed: "1".."9")

On disk a dataset is laid out as ``<root>/<person id>/S<session>/<code><ext>``
with one file per code; the code alone disambiguates sensor, illumination and
sample, so the folder layout is just a scan-friendly grouping.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateKey, EmptySplit, IoFailure, MalformedCode, OutOfRange

SENSORS = ("VIS", "NIR", "TH")
ILLUMINATIONS = ("NA", "IR", "AR")

_SENSOR_BY_LETTER = {"C": "VIS", "I": "NIR", "T": "TH"}
_LETTER_BY_SENSOR = {v: k for k, v in _SENSOR_BY_LETTER.items()}

# Full acquisition grid of the real database.
STRICT_PERSON_MAX = 41
STRICT_SESSION_MAX = 4
STRICT_SAMPLE_MAX = 5

# Relaxed ceilings keep codes at 8 characters for synthetic datasets.
RELAXED_PERSON_MAX = 99
RELAXED_SESSION_MAX = 9
RELAXED_SAMPLE_MAX = 9

DATA_SUFFIXES = (".pgm", ".bmp", ".csv")


@dataclass(frozen=True)
class SampleKey:
    """Identity of one capture: who, when, which sensor, which light, which shot."""

    person: int
    session: int
    sensor: str
    illumination: str
    sample: int

    def __post_init__(self) -> None:
        if self.sensor not in SENSORS:
            raise MalformedCode(f"unknown sensor {self.sensor!r}")
        if self.illumination not in ILLUMINATIONS:
            raise MalformedCode(f"unknown illumination {self.illumination!r}")
        if not 1 <= self.person <= RELAXED_PERSON_MAX:
            raise OutOfRange(f"person {self.person} outside [1, {RELAXED_PERSON_MAX}]")
        if not 1 <= self.session <= RELAXED_SESSION_MAX:
            raise OutOfRange(f"session {self.session} outside [1, {RELAXED_SESSION_MAX}]")
        if not 1 <= self.sample <= RELAXED_SAMPLE_MAX:
            raise OutOfRange(f"sample {self.sample} outside [1, {RELAXED_SAMPLE_MAX}]")

    @property
    def code(self) -> str:
        return format_sample_code(self)


def parse_sample_code(code: str, strict: bool = False) -> SampleKey:
    """Parse an 8-character sample code into a :class:`SampleKey`.

    With ``strict=True`` the person/session/sample ranges of the real
    41-person database are enforced; otherwise the relaxed ceilings apply.
    """
    if not isinstance(code, str) or len(code) != 8:
        raise MalformedCode(f"code must have exactly 8 characters, got {code!r}")
    person_part, session_part = code[0:2], code[2:4]
    sensor_letter, illum_part, sample_part = code[4], code[5:7], code[7]

    if not person_part.isdigit():
        raise MalformedCode(f"person field {person_part!r} is not numeric in {code!r}")
    if session_part[0] != "S" or not session_part[1].isdigit():
        raise MalformedCode(f"session field {session_part!r} is not S<digit> in {code!r}")
    if sensor_letter not in _SENSOR_BY_LETTER:
        raise MalformedCode(f"sensor letter {sensor_letter!r} not one of C/I/T in {code!r}")
    if illum_part not in ILLUMINATIONS:
        raise MalformedCode(f"illumination {illum_part!r} not one of NA/IR/AR in {code!r}")
    if not sample_part.isdigit():
        raise MalformedCode(f"sample field {sample_part!r} is not numeric in {code!r}")

    person = int(person_part)
    session = int(session_part[1])
    sample = int(sample_part)
    if strict:
        if not 1 <= person <= STRICT_PERSON_MAX:
            raise OutOfRange(f"person {person:02d} outside 01-{STRICT_PERSON_MAX} in {code!r}")
        if not 1 <= session <= STRICT_SESSION_MAX:
            raise OutOfRange(f"session {session} outside 1-{STRICT_SESSION_MAX} in {code!r}")
        if not 1 <= sample <= STRICT_SAMPLE_MAX:
            raise OutOfRange(f"sample {sample} outside 1-{STRICT_SAMPLE_MAX} in {code!r}")
    return SampleKey(person, session, _SENSOR_BY_LETTER[sensor_letter], illum_part, sample)


def format_sample_code(key: SampleKey) -> str:
    """Format a :class:`SampleKey` back into its 8-character code."""
    return (
        f"{key.person:02d}S{key.session}"
        f"{_LETTER_BY_SENSOR[key.sensor]}{key.illumination}{key.sample}"
    )


def grid_keys(
    persons: int | Iterable[int],
    sessions: int | Iterable[int] = STRICT_SESSION_MAX,
    samples: int | Iterable[int] = STRICT_SAMPLE_MAX,
) -> Iterator[SampleKey]:
    """Enumerate the complete acquisition grid (every sensor and illumination)."""
    person_ids = range(1, persons + 1) if isinstance(persons, int) else tuple(persons)
    session_ids = range(1, sessions + 1) if isinstance(sessions, int) else tuple(sessions)
    sample_ids = range(1, samples + 1) if isinstance(samples, int) else tuple(samples)
    for person, session, sensor, illum, sample in product(
        person_ids, session_ids, SENSORS, ILLUMINATIONS, sample_ids
    ):
        yield SampleKey(person, session, sensor, illum, sample)


@dataclass(frozen=True)
class Catalog:
    """Immutable, code-sorted listing of dataset files plus the missing keys."""

    entries: tuple[tuple[SampleKey, Path], ...]
    missing: tuple[SampleKey, ...] = ()

    @classmethod
    def from_entries(
        cls,
        entries: Iterable[tuple[SampleKey, Path]],
        expected: Iterable[SampleKey] | None = None,
    ) -> "Catalog":
        """Build a catalog from (key, path) pairs, in any order.

        ``expected`` is the complete grid used to report missing keys; when
        omitted, the grid is inferred from the maxima present in the entries.
        """
        items = sorted(entries, key=lambda e: format_sample_code(e[0]))
        seen: dict[SampleKey, Path] = {}
        for key, path in items:
            if key in seen:
                raise DuplicateKey(
                    f"{format_sample_code(key)} appears twice: {seen[key]} and {path}"
                )
            seen[key] = Path(path)
        if expected is None:
            expected = _inferred_grid(seen)
        missing = tuple(
            sorted((k for k in expected if k not in seen), key=format_sample_code)
        )
        return cls(entries=tuple(seen.items()), missing=missing)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def complete(self) -> bool:
        return not self.missing

    @property
    def persons(self) -> tuple[int, ...]:
        return tuple(sorted({key.person for key, _ in self.entries}))

    @property
    def sessions(self) -> tuple[int, ...]:
        return tuple(sorted({key.session for key, _ in self.entries}))

    def filter(
        self,
        sensor: str | None = None,
        sessions: Iterable[int] | None = None,
        illumination: str | None = None,
    ) -> tuple[tuple[SampleKey, Path], ...]:
        wanted_sessions = None if sessions is None else set(sessions)
        out = []
        for key, path in self.entries:
            if sensor is not None and key.sensor != sensor:
                continue
            if wanted_sessions is not None and key.session not in wanted_sessions:
                continue
            if illumination is not None and key.illumination != illumination:
                continue
            out.append((key, path))
        return tuple(out)

    def to_csv(self, path: str | Path) -> None:
        with Path(path).open("w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(
                ["code", "person", "session", "sensor", "illumination", "sample", "path"]
            )
            for key, file_path in self.entries:
                writer.writerow(
                    [
                        format_sample_code(key),
                        key.person,
                        key.session,
                        key.sensor,
                        key.illumination,
                        key.sample,
                        str(file_path),
                    ]
                )


def _inferred_grid(seen: dict[SampleKey, Path]) -> tuple[SampleKey, ...]:
    if not seen:
        return ()
    persons = max(k.person for k in seen)
    sessions = max(k.session for k in seen)
    samples = max(k.sample for k in seen)
    return tuple(grid_keys(persons, sessions, samples))


def scan_dataset(root: str | Path, strict: bool = False) -> Catalog:
    """Scan a directory tree for files whose basename is a valid sample code.

    Files with other names or extensions are ignored.  With ``strict=True``
    codes are range-checked against the real database and missing keys are
    reported relative to its full 41x4x3x3x5 grid; otherwise the grid is
    inferred from the maxima actually present.
    """
    root = Path(root)
    if not root.is_dir():
        raise IoFailure(f"dataset root {root} is not a readable directory")
    entries: list[tuple[SampleKey, Path]] = []
    for path in sorted(root.rglob("*")):
        if not path.is_file() or path.suffix.lower() not in DATA_SUFFIXES:
            continue
        stem = path.stem
        if len(stem) != 8:
            continue
        try:
            key = parse_sample_code(stem, strict=strict)
        except (MalformedCode, OutOfRange):
            continue
        entries.append((key, path))
    expected = tuple(grid_keys(STRICT_PERSON_MAX)) if strict else None
    return Catalog.from_entries(entries, expected=expected)


@dataclass(frozen=True)
class SplitSpec:
    """Which sessions and illuminations form the gallery and the probe set."""

    train_sessions: frozenset[int]
    test_session: int
    train_illumination: str
    test_illumination: str
    sensor: str
    gallery_size: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "train_sessions", frozenset(self.train_sessions))
        if not self.train_sessions:
            raise ValueError("train_sessions must not be empty")
        if self.test_session in self.train_sessions:
            raise ValueError(
                f"test session {self.test_session} overlaps train sessions "
                f"{sorted(self.train_sessions)}"
            )
        if self.sensor not in SENSORS:
            raise ValueError(f"unknown sensor {self.sensor!r}")
        for illum in (self.train_illumination, self.test_illumination):
            if illum not in ILLUMINATIONS:
                raise ValueError(f"unknown illumination {illum!r}")


@dataclass(frozen=True)
class Split:
    """Resolved train/test file lists for one experiment cell."""

    train: tuple[tuple[SampleKey, Path], ...]
    test: tuple[tuple[SampleKey, Path], ...]
    images_per_person: int | None

    @property
    def train_persons(self) -> tuple[int, ...]:
        return tuple(sorted({k.person for k, _ in self.train}))


def make_split(catalog: Catalog, spec: SplitSpec) -> Split:
    """Select gallery and probe entries from a catalog per the split spec.

    Train and test are disjoint by construction (disjoint sessions).  Raises
    :class:`EmptySplit` if any person in the catalog ends up with zero train
    or zero test images for the requested sensor/illumination.
    """
    train = catalog.filter(
        sensor=spec.sensor,
        sessions=spec.train_sessions,
        illumination=spec.train_illumination,
    )
    test = catalog.filter(
        sensor=spec.sensor,
        sessions=(spec.test_session,),
        illumination=spec.test_illumination,
    )
    train_counts = {p: 0 for p in catalog.persons}
    test_counts = {p: 0 for p in catalog.persons}
    for key, _ in train:
        train_counts[key.person] += 1
    for key, _ in test:
        test_counts[key.person] += 1
    starved = sorted(
        p for p in catalog.persons if train_counts[p] == 0 or test_counts[p] == 0
    )
    if starved:
        raise EmptySplit(
            f"persons {starved} have zero train or test images for "
            f"sensor={spec.sensor} train_illum={spec.train_illumination} "
            f"test_illum={spec.test_illumination} test_session={spec.test_session}"
        )
    counts = set(train_counts.values())
    images_per_person = counts.pop() if len(counts) == 1 else None
    if spec.gallery_size is not None and spec.gallery_size != images_per_person:
        raise ValueError(
            f"gallery_size={spec.gallery_size} but split provides "
            f"{images_per_person} training images per person"
        )
    return Split(train=train, test=test, images_per_person=images_per_person)
