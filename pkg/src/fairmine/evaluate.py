"""Evaluation: confusion counts, macro metrics, threshold sweeps, ROC/AUC.

Everything here is a pure function over in-memory sequences.  Two
conventions are load-bearing and worth stating up front:

* the combined F1 is the harmonic mean of macro precision and macro
  recall (not the mean of per-class F1 scores), and any precision or
  recall whose denominator is zero is defined as 0 with a warning;
* ROC curves are built from the continuous scores, one curve per class.
  For the fair class a sentence's score is used as is; for the non-fair
  class its negation, so "more confidently non-fair" ranks first.  Under
  that orientation both curves enclose exactly the same area, and the
  trapezoid sum is accumulated in integer arithmetic (counts, not
  rates), so the equality holds bit for bit and matches the
  tie-adjusted rank statistic.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .classify import SentenceScore
from .corpus import Dataset, Label
from .errors import ConfigError, DataError

logger = logging.getLogger(__name__)

#: The standard sweep grid: 0.1 through 0.9 in steps of 0.1.
DEFAULT_GRID: tuple[float, ...] = tuple(i / 10 for i in range(1, 10))


@dataclass(frozen=True)
class ConfusionCounts:
    """Binary confusion counts with the fair class as positive."""

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ConfigError("confusion counts may not be negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def swapped(self) -> "ConfusionCounts":
        """The same outcomes with the two classes' roles exchanged."""
        return ConfusionCounts(tp=self.tn, fp=self.fn, fn=self.fp, tn=self.tp)


@dataclass(frozen=True)
class MacroMetrics:
    macro_p: float
    macro_r: float
    f1: float


@dataclass(frozen=True)
class RocCurve:
    """One class's ROC curve; points run from (0, 0) to (1, 1)."""

    cls: Label
    points: tuple[tuple[float, float], ...]
    auc: float


@dataclass(frozen=True)
class SweepEntry:
    threshold: float
    confusion: ConfusionCounts
    metrics: MacroMetrics


@dataclass(frozen=True)
class SweepReport:
    grid: tuple[float, ...]
    entries: tuple[SweepEntry, ...]
    best_threshold: float
    roc_fair: Optional[RocCurve]
    roc_nonfair: Optional[RocCurve]

    def __post_init__(self):
        if len(self.entries) != len(self.grid):
            raise ConfigError("one sweep entry per grid threshold required")
        if self.best_threshold not in self.grid:
            raise ConfigError("best_threshold must come from the grid")

    @property
    def best_entry(self) -> SweepEntry:
        for entry in self.entries:
            if entry.threshold == self.best_threshold:
                return entry
        raise ConfigError("best_threshold missing from entries")


def confusion(golds: Sequence[Label], preds: Sequence[Label]) -> ConfusionCounts:
    """Count outcomes over parallel gold/predicted label sequences."""
    if len(golds) != len(preds):
        raise DataError(
            f"{len(golds)} gold labels vs {len(preds)} predictions")
    tp = fp = fn = tn = 0
    for i, (gold, pred) in enumerate(zip(golds, preds)):
        if gold is None or pred is None:
            raise DataError(f"unlabeled entry at position {i}")
        if gold is Label.FAIR:
            if pred is Label.FAIR:
                tp += 1
            else:
                fn += 1
        else:
            if pred is Label.FAIR:
                fp += 1
            else:
                tn += 1
    return ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def _ratio(num: int, den: int, what: str) -> float:
    if den == 0:
        logger.warning("%s is 0/0, defining it as 0", what)
        return 0.0
    return num / den


def macro_prf(c: ConfusionCounts) -> MacroMetrics:
    """Macro-averaged precision/recall and their harmonic mean.

    Per-class precision and recall treat 0/0 as 0; the macro values are
    unweighted means over the two classes.
    """
    p_fair = _ratio(c.tp, c.tp + c.fp, "fair precision")
    r_fair = _ratio(c.tp, c.tp + c.fn, "fair recall")
    p_non = _ratio(c.tn, c.tn + c.fn, "non-fair precision")
    r_non = _ratio(c.tn, c.tn + c.fp, "non-fair recall")
    macro_p = (p_fair + p_non) / 2
    macro_r = (r_fair + r_non) / 2
    if macro_p == 0 and macro_r == 0:
        f1 = 0.0
    else:
        f1 = 2 * macro_p * macro_r / (macro_p + macro_r)
    return MacroMetrics(macro_p=macro_p, macro_r=macro_r, f1=f1)


GoldSource = Union[Dataset, Mapping[str, Optional[Label]]]


def _gold_map(golds: GoldSource) -> Mapping[str, Optional[Label]]:
    if isinstance(golds, Dataset):
        return {s.id: s.label for s in golds}
    return golds


def _gold_for(scores: Sequence[SentenceScore],
              golds: GoldSource) -> list[Label]:
    gold_map = _gold_map(golds)
    out = []
    for s in scores:
        label = gold_map.get(s.id)
        if label is None:
            raise DataError(f"sentence {s.id!r} has no gold label")
        out.append(label)
    return out


def roc(scores: Sequence[SentenceScore], golds: GoldSource,
        cls: Label) -> RocCurve:
    """ROC curve for one class from the continuous scores.

    Thresholds sweep the distinct (oriented) score values from high to
    low; tied scores flip together, producing one point per tie group.
    The area is the exact trapezoid sum, accumulated over integer counts
    and divided once at the end.
    """
    labels = _gold_for(scores, golds)
    oriented = []
    for s, gold in zip(scores, labels):
        score = s.score if cls is Label.FAIR else -s.score
        oriented.append((score, gold is cls))
    n_pos = sum(1 for _, is_pos in oriented if is_pos)
    n_neg = len(oriented) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise DataError(
            f"ROC needs both classes among the gold labels; "
            f"positive class {cls.value!r} has "
            f"{'no positives' if n_pos == 0 else 'no negatives'}")
    oriented.sort(key=lambda pair: -pair[0])
    count_points: list[tuple[int, int]] = [(0, 0)]  # (fp_count, tp_count)
    tp = fp = 0
    i = 0
    while i < len(oriented):
        j = i
        while j < len(oriented) and oriented[j][0] == oriented[i][0]:
            if oriented[j][1]:
                tp += 1
            else:
                fp += 1
            j += 1
        count_points.append((fp, tp))
        i = j
    twice_area = 0  # exact: 2 * n_pos * n_neg * AUC
    for (fp1, tp1), (fp2, tp2) in zip(count_points, count_points[1:]):
        twice_area += (fp2 - fp1) * (tp1 + tp2)
    auc = twice_area / (2 * n_pos * n_neg)
    points: list[tuple[float, float]] = []
    for fp_c, tp_c in count_points + [(n_neg, n_pos)]:
        point = (fp_c / n_neg, tp_c / n_pos)
        if not points or points[-1] != point:
            points.append(point)
    return RocCurve(cls=cls, points=tuple(points), auc=auc)


def sweep(scores: Sequence[SentenceScore], golds: GoldSource,
          grid: Sequence[float] = DEFAULT_GRID) -> SweepReport:
    """Classify at every grid threshold and pick the best by F1.

    The report also carries the two score-based ROC curves when both
    classes appear among the gold labels; a one-class dataset still
    sweeps, but has no ROC (the curves are recorded as absent).
    """
    if not grid:
        raise ConfigError("empty threshold grid")
    if not scores:
        raise DataError("nothing to sweep: no scored sentences")
    labels = _gold_for(scores, golds)
    entries = []
    best: Optional[SweepEntry] = None
    for threshold in grid:
        preds = [Label.FAIR if s.score >= threshold else Label.NON_FAIR
                 for s in scores]
        counts = confusion(labels, preds)
        metrics = macro_prf(counts)
        entry = SweepEntry(threshold=threshold, confusion=counts,
                           metrics=metrics)
        entries.append(entry)
        if best is None or entry.metrics.f1 > best.metrics.f1:
            best = entry
    n_fair = sum(1 for label in labels if label is Label.FAIR)
    if 0 < n_fair < len(labels):
        roc_fair = roc(scores, golds, Label.FAIR)
        roc_nonfair = roc(scores, golds, Label.NON_FAIR)
    else:
        logger.warning("gold labels cover a single class; sweeping without "
                       "ROC curves")
        roc_fair = roc_nonfair = None
    return SweepReport(grid=tuple(grid), entries=tuple(entries),
                       best_threshold=best.threshold,
                       roc_fair=roc_fair, roc_nonfair=roc_nonfair)


# -- serialization -----------------------------------------------------------


def _curve_to_dict(curve: Optional[RocCurve]):
    if curve is None:
        return None
    return {"class": curve.cls.value, "auc": curve.auc,
            "points": [[fpr, tpr] for fpr, tpr in curve.points]}


def sweep_report_to_dict(report: SweepReport) -> dict:
    return {
        "grid": list(report.grid),
        "entries": [
            {
                "threshold": e.threshold,
                "confusion": {"tp": e.confusion.tp, "fp": e.confusion.fp,
                              "fn": e.confusion.fn, "tn": e.confusion.tn},
                "metrics": {"macro_p": e.metrics.macro_p,
                            "macro_r": e.metrics.macro_r,
                            "f1": e.metrics.f1},
            }
            for e in report.entries
        ],
        "best_threshold": report.best_threshold,
        "best_f1": report.best_entry.metrics.f1,
        "roc_fair": _curve_to_dict(report.roc_fair),
        "roc_nonfair": _curve_to_dict(report.roc_nonfair),
    }


def save_sweep_report(report: SweepReport, path) -> None:
    Path(path).write_text(json.dumps(sweep_report_to_dict(report), indent=2)
                          + "\n", encoding="utf-8")


def roc_to_csv(curve: RocCurve) -> str:
    lines = ["fpr,tpr"]
    for fpr, tpr in curve.points:
        lines.append(f"{fpr!r},{tpr!r}")
    return "".join(line + "\n" for line in lines)


def save_roc_csv(curve: RocCurve, path) -> None:
    Path(path).write_text(roc_to_csv(curve), encoding="utf-8")


_SVG_COLORS = ("#1f77b4", "#d62728")


def roc_svg(curves: Sequence[RocCurve], size: int = 480) -> str:
    """A static SVG line plot of one or two ROC curves on the unit square."""
    margin = 50
    span = size - 2 * margin

    def x(fpr: float) -> float:
        return margin + fpr * span

    def y(tpr: float) -> float:
        return size - margin - tpr * span

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{margin}" y1="{size - margin}" x2="{size - margin}" '
        f'y2="{size - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{size - margin}" stroke="black"/>',
        f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(1)}" y2="{y(1)}" '
        f'stroke="#999999" stroke-dasharray="4 4"/>',
        f'<text x="{size / 2:.1f}" y="{size - 12}" text-anchor="middle" '
        f'font-size="14">false positive rate</text>',
        f'<text x="14" y="{size / 2:.1f}" text-anchor="middle" '
        f'font-size="14" transform="rotate(-90 14 {size / 2:.1f})">'
        f'true positive rate</text>',
    ]
    for tick in (0.0, 0.5, 1.0):
        parts.append(f'<text x="{x(tick):.1f}" y="{size - margin + 18}" '
                     f'text-anchor="middle" font-size="12">{tick:g}</text>')
        parts.append(f'<text x="{margin - 8}" y="{y(tick) + 4:.1f}" '
                     f'text-anchor="end" font-size="12">{tick:g}</text>')
    for i, curve in enumerate(curves):
        color = _SVG_COLORS[i % len(_SVG_COLORS)]
        coords = " ".join(f"{x(fpr):.2f},{y(tpr):.2f}"
                          for fpr, tpr in curve.points)
        parts.append(f'<polyline points="{coords}" fill="none" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{size - margin}" y="{margin + 18 * (i + 1)}" '
                     f'text-anchor="end" font-size="13" fill="{color}">'
                     f'{curve.cls.value} (AUC {curve.auc:.3f})</text>')
    parts.append("</svg>")
    return "".join(part + "\n" for part in parts)


def save_roc_svg(curves: Sequence[RocCurve], path) -> None:
    Path(path).write_text(roc_svg(curves), encoding="utf-8")
