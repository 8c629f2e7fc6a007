"""Classification corpus, corpus runner, graph export and report rendering."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ag import annihilator_graph
from .catalog import LOCAL_M78, PLANAR_LOCAL, PLANAR_PRODUCTS
from .classify import enumerate_family, predict_classification
from .errors import AnnigraphError, Exhausted
from .graph import Graph, recognize_shape
from .parse import ring_from_text
from .rings import Ring
from .topology import Budget, is_planar, min_genus

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

SPOT_ORDERS = (2, 3, 4, 5, 7, 8, 9)


@dataclass(frozen=True)
class Expected:
    planar: bool
    toroidal: bool
    genus: int | None = None
    shape: str | None = None

    def __post_init__(self):
        if self.planar and self.toroidal:
            raise ValueError("an entry cannot be both planar and toroidal")
        if self.genus is not None and (self.genus == 0) != self.planar:
            raise ValueError("genus 0 must coincide with planar")
        if self.genus is not None and (self.genus == 1) != self.toroidal:
            raise ValueError("genus 1 must coincide with toroidal")


@dataclass(frozen=True)
class CorpusEntry:
    expr: str
    expected: Expected
    source: str

    def to_json(self) -> str:
        e = self.expected
        return json.dumps(
            {
                "expr": self.expr,
                "expected": {"planar": e.planar, "toroidal": e.toroidal, "genus": e.genus, "shape": e.shape},
                "source": self.source,
            }
        )

    @classmethod
    def from_json(cls, line: str) -> "CorpusEntry":
        obj = json.loads(line)
        exp = obj["expected"]
        return cls(
            expr=obj["expr"],
            expected=Expected(
                planar=bool(exp["planar"]),
                toroidal=bool(exp["toroidal"]),
                genus=exp.get("genus"),
                shape=exp.get("shape"),
            ),
            source=obj.get("source", ""),
        )


def _field(q: int) -> str:
    return f"Z{q}" if q in (2, 3, 5, 7) else f"GF({q})"


def builtin_corpus() -> list[CorpusEntry]:
    """Planar list, toroidal lists, the |m| in {7, 8} local rings and three negative witnesses."""
    planar = Expected(True, False, 0)
    torus = Expected(False, True, 1)
    out: list[CorpusEntry] = []
    for expr in PLANAR_LOCAL:
        out.append(CorpusEntry(expr, planar, "planar list, local rings"))
    for small in (2, 3):
        for q in SPOT_ORDERS:
            out.append(CorpusEntry(f"Z{small} x {_field(q)}", planar, f"planar list, Z{small} x F_q at q = {q}"))
    for expr in PLANAR_PRODUCTS:
        out.append(CorpusEntry(expr, planar, "planar list, products"))

    for expr in ("GF(7) x GF(4)", "GF(5) x GF(5)", "GF(5) x GF(4)", "GF(4) x GF(4)"):
        out.append(CorpusEntry(expr, torus, "toroidal reduced rings, two fields"))
    out.append(CorpusEntry("Z2 x Z2 x Z3", torus, "toroidal reduced rings, three fields"))
    for expr in ("Z4 x Z3", "Z2[x]/(x^2) x Z3"):
        out.append(CorpusEntry(expr, torus, "toroidal non-reduced rings, two local factors"))
    for entry in LOCAL_M78:
        src = "toroidal local rings, |m| in {7, 8}"
        if entry.corrected:
            src += f"; printed as {entry.printed}: {entry.note}"
        out.append(CorpusEntry(entry.expr, torus, src))

    out.append(CorpusEntry("Z2 x Z2 x Z2 x Z2", Expected(False, False), "negative: four fields, contains K_5"))
    out.append(CorpusEntry("Z4 x GF(4)", Expected(False, False, 2, "K_{3,6}+K_3"), "negative: K_{3,6} with a triangle"))
    out.append(CorpusEntry("Z4 x Z2", Expected(True, False, 0, "K_{2,3}"), "negative: K_{2,3}, planar"))
    return out


def load_corpus(path: str) -> list[CorpusEntry]:
    with open(path, encoding="utf-8") as fh:
        return [CorpusEntry.from_json(line) for line in fh if line.strip()]


def save_corpus(entries: Iterable[CorpusEntry], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(e.to_json() + "\n")


# -- running ------------------------------------------------------------------------


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    verdict: str
    order: int | None = None
    size: int | None = None
    genus: int | None = None
    lower: int | None = None
    shape: str | None = None
    detail: str = ""
    runtime: float = field(default=0.0, compare=False)

    @property
    def genus_text(self) -> str:
        if self.genus is not None:
            return str(self.genus)
        if self.lower is not None:
            return f">={self.lower}"
        return "?"


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[EntryResult, ...]

    def count(self, verdict: str) -> int:
        return sum(1 for r in self.results if r.verdict == verdict)

    @property
    def exit_code(self) -> int:
        if self.count(FAIL):
            return 1
        if self.count(INCONCLUSIVE):
            return 3
        return 0


def _expected_text(e: Expected) -> str:
    if e.genus is not None:
        text = f"genus {e.genus}"
    elif e.planar:
        text = "planar"
    elif e.toroidal:
        text = "toroidal"
    else:
        text = "genus >=2"
    if e.shape:
        text += f", {e.shape}"
    return text


def check_entry(entry: CorpusEntry, budget: Budget, ring: Ring | None = None) -> EntryResult:
    """Build the ring and its graph, compute the genus and compare with ``entry.expected``."""
    start = time.perf_counter()
    try:
        ring = ring if ring is not None else ring_from_text(entry.expr)
        g = annihilator_graph(ring)
    except AnnigraphError as exc:
        return EntryResult(entry, FAIL, detail=f"{type(exc).__name__}: {exc}", runtime=time.perf_counter() - start)
    shape = recognize_shape(g).descriptor
    base = dict(entry=entry, order=g.order, size=g.size, shape=shape)
    try:
        res = min_genus(g, budget)
    except Exhausted as exc:
        return EntryResult(
            **base, verdict=INCONCLUSIVE, detail=f"node limit reached after {exc.nodes} nodes",
            runtime=time.perf_counter() - start,
        )
    exp = entry.expected
    problems = []
    planar_ok, _ = is_planar(g)
    if planar_ok != (res.genus == 0):
        problems.append("planarity test disagrees with genus search")
    if res.genus is not None:
        if exp.planar != (res.genus == 0):
            problems.append(f"planar expected {exp.planar}")
        if exp.toroidal != (res.genus == 1):
            problems.append(f"toroidal expected {exp.toroidal}")
        if exp.genus is not None and exp.genus != res.genus:
            problems.append(f"genus expected {exp.genus}")
    else:
        # the genus is only known to exceed the budget
        if exp.planar or exp.toroidal or (exp.genus is not None and exp.genus < res.lower):
            problems.append(f"genus is at least {res.lower}")
    if exp.shape is not None and exp.shape != shape:
        problems.append(f"shape expected {exp.shape}, found {shape}")
    if problems:
        verdict = FAIL
    elif res.genus is None and exp.genus is not None:
        verdict = INCONCLUSIVE
        problems.append(f"genus above budget {budget.max_genus}")
    else:
        verdict = PASS
    return EntryResult(
        **base, verdict=verdict, genus=res.genus, lower=res.lower, detail="; ".join(problems),
        runtime=time.perf_counter() - start,
    )


def run_corpus(entries: Sequence[CorpusEntry], budget: Budget = Budget()) -> VerificationReport:
    return VerificationReport(tuple(check_entry(e, budget) for e in entries))


def run_survey(max_order: int, budget: Budget = Budget(max_genus=1)) -> VerificationReport:
    """Compare the structural prediction with the computed genus on every ring of the family."""
    results = []
    for ring in enumerate_family(max_order):
        pred = predict_classification(ring)
        entry = CorpusEntry(ring.name, Expected(pred.planar, pred.toroidal), f"predicted: {pred.rule}")
        results.append(check_entry(entry, budget, ring))
    return VerificationReport(tuple(results))


# -- output -------------------------------------------------------------------------


def export_graph(g: Graph, fmt: str = "dot") -> str:
    """Deterministic DOT or JSON text for ``g``; edges in sorted order."""
    if fmt == "json":
        return json.dumps({"vertices": list(g.labels), "edges": [list(e) for e in g.edges()]}) + "\n"
    if fmt != "dot":
        raise ValueError(f"unknown graph format {fmt!r}")
    lines = ["graph {"]
    linked = set()
    for a, b in sorted(tuple(sorted((g.labels[u], g.labels[v]))) for u, v in g.edges()):
        lines.append(f"  {json.dumps(a)} -- {json.dumps(b)};")
        linked.update((a, b))
    for label in sorted(set(g.labels) - linked):
        lines.append(f"  {json.dumps(label)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


COLUMNS = ("expr", "V", "E", "genus", "expected", "verdict", "source", "detail")


def _rows(report: VerificationReport) -> list[list[str]]:
    rows = []
    for r in report.results:
        rows.append(
            [
                r.entry.expr,
                "" if r.order is None else str(r.order),
                "" if r.size is None else str(r.size),
                r.genus_text if r.order is not None else "",
                _expected_text(r.entry.expected),
                r.verdict,
                r.entry.source,
                r.detail,
            ]
        )
    return rows


def _summary(report: VerificationReport) -> dict[str, int]:
    return {
        "total": len(report.results),
        "pass": report.count(PASS),
        "fail": report.count(FAIL),
        "inconclusive": report.count(INCONCLUSIVE),
    }


def emit_report(report: VerificationReport, fmt: str = "markdown") -> str:
    """Render ``report`` as markdown, csv or json, one row per entry in corpus order.

    Timings are left out so that the text depends only on corpus and budget.
    """
    rows = _rows(report)
    summary = _summary(report)
    if fmt == "json":
        body = {"summary": summary, "entries": [dict(zip(COLUMNS, row)) for row in rows]}
        return json.dumps(body, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown report format {fmt!r}")
    esc = lambda s: s.replace("|", "\\|")  # noqa: E731
    lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    lines += ["| " + " | ".join(esc(c) for c in row) + " |" for row in rows]
    lines.append("")
    text = ", ".join(f"{v} {k}" for k, v in summary.items() if k != "total")
    flag = " (INCONCLUSIVE entries present)" if summary["inconclusive"] else ""
    lines.append(f"{summary['total']} entries: {text}{flag}")
    return "\n".join(lines) + "\n"


def report_format(path: str) -> str:
    for suffix, fmt in ((".md", "markdown"), (".csv", "csv"), (".json", "json")):
        if path.endswith(suffix):
            return fmt
    raise ValueError(f"cannot tell the report format of {path!r}; use .md, .csv or .json")
