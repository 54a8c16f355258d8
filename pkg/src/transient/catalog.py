"""Knot catalog: CSV ingestion, validation and a line-delimited JSON store."""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .bounds import HomologyProfile
from .covers import (
    GoeritzMatrix,
    SeifertMatrix,
    cover_homology,
    goeritz_matrix,
    seifert_matrix_from_braid,
)
from .exactalg import AbelianGroup, parse_matrix
from .knotcodes import (
    BraidWord,
    PdCode,
    format_braid,
    format_pd,
    parse_braid,
    parse_pd,
    reconstruct_diagram,
)

MAP_KEYS = ("name", "pd", "braid", "seifert", "u", "t", "det")

KNOTINFO_MAP = {
    "name": "name",
    "pd": "pd_notation",
    "braid": "braid_notation",
    "seifert": "seifert_matrix",
    "u": "unknotting_number",
    "t": "tunnel_number",
    "det": "determinant",
}

VENDORED_SOURCE = "KnotInfo (database_knotinfo 2026.10.5)"


class CatalogError(Exception):
    pass


class MissingColumnError(CatalogError):
    pass


class CatalogFormatError(CatalogError):
    pass


class NotComputableError(CatalogError):
    pass


_NAME = re.compile(r"^(\d+)([an]?)_(\d+)$")


def knot_sort_key(name: str):
    """Order names like the tables: 3_1 < 10_99 < 10_123 < 12a_427 < 12n_518."""
    m = _NAME.match(name)
    if not m:
        return (1, 0, "", 0, name)
    return (0, int(m.group(1)), m.group(2), int(m.group(3)), name)


def crossing_number_from_name(name: str) -> int | None:
    m = _NAME.match(name)
    return int(m.group(1)) if m else None


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: PdCode | None = None
    braid: BraidWord | None = None
    seifert: SeifertMatrix | None = None
    u: int | None = None
    t: int | None = None
    determinant: int | None = None
    source: str = ""

    @property
    def computable(self) -> bool:
        return any(x is not None for x in (self.pd, self.braid, self.seifert))

    @property
    def crossing_number(self) -> int | None:
        if self.pd is not None:
            return len(self.pd)
        return crossing_number_from_name(self.name)

    def seifert_source(self) -> SeifertMatrix | None:
        if self.seifert is not None:
            return self.seifert
        if self.braid is not None:
            return _braid_seifert(self.braid)
        return None

    def goeritz(self) -> GoeritzMatrix | None:
        return _goeritz(self.pd) if self.pd is not None else None

    def homology(self, p: int) -> AbelianGroup:
        """H1 of the p-fold cover, from the Seifert data when present, else from the PD code."""
        s = self.seifert_source()
        if s is not None:
            return _cover_homology(s, p)
        if self.pd is not None:
            if p != 2:
                raise NotComputableError(f"{self.name}: only a PD code is known, which gives p = 2 only")
            return cover_homology(self.goeritz(), 2)
        raise NotComputableError(f"{self.name}: no PD code, braid or Seifert matrix")

    def profile(self, ps: Iterable[int]) -> HomologyProfile:
        return HomologyProfile({p: self.homology(p) for p in ps})

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pd": None if self.pd is None else format_pd(self.pd),
            "braid": None if self.braid is None else format_braid(self.braid),
            "seifert": None if self.seifert is None else self.seifert.v.format(),
            "u": self.u,
            "t": self.t,
            "determinant": self.determinant,
            "source": self.source,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "KnotRecord":
        return cls(
            name=obj["name"],
            pd=None if obj.get("pd") is None else parse_pd(obj["pd"]),
            braid=None if obj.get("braid") is None else parse_braid(obj["braid"]),
            seifert=None if obj.get("seifert") is None else SeifertMatrix(parse_matrix(obj["seifert"])),
            u=obj.get("u"),
            t=obj.get("t"),
            determinant=obj.get("determinant"),
            source=obj.get("source", ""),
        )


@lru_cache(maxsize=None)
def _braid_seifert(b: BraidWord) -> SeifertMatrix:
    return seifert_matrix_from_braid(b)


@lru_cache(maxsize=None)
def _goeritz(pd: PdCode) -> GoeritzMatrix:
    return goeritz_matrix(reconstruct_diagram(pd))


@lru_cache(maxsize=4096)
def _cover_homology(s: SeifertMatrix, p: int) -> AbelianGroup:
    return cover_homology(s, p)


@dataclass
class IngestReport:
    rejected: list[tuple[int, str, str]] = field(default_factory=list)  # (line, name, reason)
    notes: list[tuple[int, str, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.rejected or self.notes)

    def lines(self) -> list[str]:
        out = [f"line {ln}: {name}: rejected: {why}" for ln, name, why in self.rejected]
        out += [f"line {ln}: {name}: note: {why}" for ln, name, why in self.notes]
        return out


class Catalog:
    """Immutable name -> KnotRecord mapping, ordered by table position."""

    def __init__(self, records: Iterable[KnotRecord] = ()):
        recs = sorted(records, key=lambda r: knot_sort_key(r.name))
        self._by_name = {r.name: r for r in recs}
        if len(self._by_name) != len(recs):
            raise CatalogError("duplicate knot names")

    def __iter__(self) -> Iterator[KnotRecord]:
        return iter(self._by_name.values())

    def __len__(self) -> int:
        return len(self._by_name)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __eq__(self, other) -> bool:
        return isinstance(other, Catalog) and list(self) == list(other)

    def query(self, name: str) -> KnotRecord | None:
        return self._by_name.get(name)

    def dumps(self) -> str:
        return "".join(json.dumps(r.to_json(), sort_keys=True, ensure_ascii=False) + "\n" for r in self)

    def persist(self, path) -> None:
        path = Path(path)
        try:
            path.write_text(self.dumps(), encoding="utf-8")
        except OSError as exc:
            raise CatalogError(f"cannot write catalog {path}: {exc}") from exc

    @classmethod
    def loads(cls, text: str, origin: str = "<string>") -> "Catalog":
        records = []
        for ln, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                records.append(KnotRecord.from_json(json.loads(line)))
            except (ValueError, KeyError, TypeError) as exc:
                raise CatalogFormatError(f"{origin}, line {ln}: {exc}") from exc
        return cls(records)

    @classmethod
    def load(cls, path) -> "Catalog":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
        return cls.loads(text, str(path))


def _parse_count(raw: str) -> tuple[int | None, str | None]:
    """Parse an unknotting/tunnel number cell; intervals are dropped with a note."""
    s = raw.strip()
    if not s:
        return None, None
    if re.fullmatch(r"\d+", s):
        return int(s), None
    return None, f"ambiguous value {s!r} omitted"


def parse_column_map(text: str) -> dict[str, str]:
    """``name=<col>,pd=<col>,...`` -> dict."""
    out = {}
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, col = item.partition("=")
        key = key.strip()
        if not sep or key not in MAP_KEYS:
            raise CatalogError(f"bad column map entry {item!r}; keys are {', '.join(MAP_KEYS)}")
        out[key] = col.strip()
    if "name" not in out:
        raise CatalogError("column map must name the 'name' column")
    return out


def ingest_csv(path, column_map: Mapping[str, str] = KNOTINFO_MAP,
               source: str | None = None) -> tuple[Catalog, IngestReport]:
    """Read and validate knot rows.  Failing rows go to the report, not the catalog."""
    path = Path(path)
    source = source if source is not None else path.name
    report = IngestReport()
    records = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [f"{k}={c}" for k, c in column_map.items() if c not in header]
        if missing:
            raise MissingColumnError(f"{path}: mapped columns not in header: {', '.join(missing)}")
        for ln, row in enumerate(reader, 2):
            name = row[column_map["name"]].strip()
            try:
                rec, notes = _record_from_row(row, column_map, source)
            except (ValueError, CatalogError) as exc:
                report.rejected.append((ln, name, str(exc)))
                continue
            report.notes.extend((ln, name, n) for n in notes)
            records.append(rec)
    return Catalog(records), report


def _record_from_row(row, cmap, source) -> tuple[KnotRecord, list[str]]:
    def cell(key):
        col = cmap.get(key)
        return (row.get(col) or "").strip() if col else ""

    notes = []
    name = cell("name")
    if not name:
        raise CatalogError("empty name")
    pd = parse_pd(cell("pd")) if cell("pd") else None
    braid = parse_braid(cell("braid")) if cell("braid") else None
    seifert = SeifertMatrix(parse_matrix(cell("seifert"))) if cell("seifert") else None
    u, note = _parse_count(cell("u"))
    if note:
        notes.append(f"u: {note}")
    t, note = _parse_count(cell("t"))
    if note:
        notes.append(f"t: {note}")
    det_txt = cell("det")
    determinant = int(det_txt) if det_txt else None
    rec = KnotRecord(name, pd, braid, seifert, u, t, determinant, source)
    validate_record(rec)
    if not rec.computable:
        notes.append("no PD code, braid or Seifert matrix; not computable")
    return rec, notes


def validate_record(rec: KnotRecord) -> None:
    """Cross-check every homology source against the others and the determinant."""
    groups = {}
    if rec.pd is not None:
        groups["goeritz"] = cover_homology(rec.goeritz(), 2)
    if rec.braid is not None:
        groups["braid"] = _cover_homology(_braid_seifert(rec.braid), 2)
    if rec.seifert is not None:
        groups["seifert"] = _cover_homology(rec.seifert, 2)
    if len(set(groups.values())) > 1:
        detail = ", ".join(f"{k}: {g}" for k, g in groups.items())
        raise CatalogError(f"double cover homology disagrees between sources ({detail})")
    if groups and rec.determinant is not None:
        order = next(iter(groups.values())).order
        if order != abs(rec.determinant):
            raise CatalogError(f"determinant {rec.determinant} but |H1| = {order}")


def vendored_csv_path():
    return resources.files("transient") / "data" / "knotinfo_subset.csv"


def default_catalog_path():
    return resources.files("transient") / "data" / "catalog.jsonl"


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return Catalog.loads(default_catalog_path().read_text(encoding="utf-8"), "catalog.jsonl")
