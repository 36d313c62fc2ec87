"""Identity-corpus loader and runner.

A corpus is a TOML file holding a ``version`` key and a list of
``[[identity]]`` tables.  Every entry has a unique ``name``, a ``kind``
selecting the check procedure, a ``check_range`` pair, and an optional
``comment``.  The kinds:

``sum`` (default)
    Fields ``summand``, ``lower``, ``upper``, optional ``claimed_value``
    (closed-form grammar) and optional ``claimed_recurrence`` table with
    ``order`` and backward ``coeffs``.  The runner evaluates the sum
    exactly over the range, compares against the closed form, checks the
    claimed recurrence numerically, rediscovers a recurrence by creative
    telescoping, and verifies its certificate.

``watson-chu``
    Fields ``summand``, ``lower``, ``upper``.  For each n in range the
    runner checks binom(2n,n) * W01(-n,-n,1/2) against the exact sum,
    where W01 is the two-term contiguous reduction to Watson 3F2
    evaluations, and cross-checks the 8-Gamma Watson formula against
    direct series summation.

``gamma-closed-form``
    Fields ``even_summand``, ``odd_summand``, ``lower``, ``upper``.  For
    each m in range the even sum at 2m is compared against its Gamma-
    quotient closed form and the odd sum at 2m+1 against its companion.

``pfq-evaluation``
    No summand.  For each n in range the terminating series
    3F2(-2n,-2n-1,1/2; 1/2-2n,2; 1) is compared against its factorial-
    ratio value, and the odd-argument series against 0.

Reports are deterministic modulo the per-entry timing field.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - Python 3.10
    import tomli as tomllib

from .closedform import ClosedForm
from .combinat import binomial
from .hyperterm import Support, parse_summand, sum_exact
from .poly import Poly
from .watson import (HalfInt, chu_w01, pfq_terminating, second_identity_3f2,
                     second_identity_spec, watson_w00, watson_w00_series)
from .zeilberger import Recurrence, verify_certificate, zeilberger

KINDS = ("sum", "watson-chu", "gamma-closed-form", "pfq-evaluation")


class CorpusError(ValueError):
    """Malformed corpus file."""


@dataclass(frozen=True)
class IdentityEntry:
    name: str
    kind: str
    check_range: tuple[int, int]
    summand: str | None = None
    lower: str = "0"
    upper: str = "n"
    claimed_value: str | None = None
    claimed_order: int | None = None
    claimed_coeffs: tuple[str, ...] | None = None
    even_summand: str | None = None
    odd_summand: str | None = None
    comment: str = ""


@dataclass
class EntryResult:
    name: str
    kind: str
    status: str          # "pass", "fail", or "error"
    details: dict
    timing_ms: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    corpus_path: str
    corpus_version: int
    entries: list[EntryResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json(self) -> dict:
        return {
            "corpus": self.corpus_path,
            "version": self.corpus_version,
            "overall": "pass" if self.passed else "fail",
            "entries": [
                {"name": e.name, "kind": e.kind, "status": e.status,
                 "timing_ms": e.timing_ms, "details": e.details}
                for e in self.entries
            ],
        }

    def render_text(self) -> str:
        lines = [f"corpus: {self.corpus_path} (version {self.corpus_version})",
                 f"entries: {len(self.entries)}", ""]
        for i, e in enumerate(self.entries, 1):
            status = e.status if e.passed else e.status.upper()
            lines.append(f"  {i}. {e.name:<28} {e.kind:<18} {status:<6}"
                         f" {e.timing_ms:9.1f} ms")
            for line in _failure_lines(e.details):
                lines.append(f"       {line}")
        count = sum(e.passed for e in self.entries)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append("")
        lines.append(f"overall: {verdict} ({count}/{len(self.entries)})")
        return "\n".join(lines)


def _failure_lines(details: dict) -> list[str]:
    lines = []
    if "error" in details:
        lines.append(f"error: {details['error']}")
    for key, value in details.items():
        if isinstance(value, dict) and value.get("status") == "fail":
            parts = [f"{k}={v}" for k, v in value.items() if k != "status"]
            lines.append(f"{key}: " + ", ".join(parts))
    return lines


def load_corpus(path) -> tuple[int, list[IdentityEntry]]:
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise CorpusError(f"{path}: {exc}") from exc
    version = data.get("version")
    if not isinstance(version, int):
        raise CorpusError(f"{path}: missing integer 'version'")
    entries = []
    seen = set()
    for raw in data.get("identity", []):
        entry = _parse_entry(raw)
        if entry.name in seen:
            raise CorpusError(f"duplicate entry name {entry.name!r}")
        seen.add(entry.name)
        entries.append(entry)
    return version, entries


def _parse_entry(raw: dict) -> IdentityEntry:
    try:
        name = raw["name"]
        check_range = raw["check_range"]
    except KeyError as exc:
        raise CorpusError(f"entry missing required key {exc}") from exc
    kind = raw.get("kind", "sum")
    if kind not in KINDS:
        raise CorpusError(f"{name}: unknown kind {kind!r}")
    lo, hi = check_range
    if lo < 0 or hi < lo:
        raise CorpusError(f"{name}: bad check_range {check_range}")
    order = coeffs = None
    rec = raw.get("claimed_recurrence")
    if rec is not None:
        order, coeffs = rec["order"], tuple(rec["coeffs"])
        if order != len(coeffs) - 1:
            raise CorpusError(f"{name}: recurrence order/coeffs mismatch")
        for text in coeffs:
            Poly.parse(text, "n")   # surface bad coefficients at load time
    if kind in ("sum", "watson-chu") and "summand" not in raw:
        raise CorpusError(f"{name}: kind {kind!r} requires a summand")
    if kind == "gamma-closed-form":
        if "even_summand" not in raw or "odd_summand" not in raw:
            raise CorpusError(f"{name}: needs even_summand and odd_summand")
    return IdentityEntry(
        name=name, kind=kind, check_range=(lo, hi),
        summand=raw.get("summand"),
        lower=str(raw.get("lower", "0")), upper=str(raw.get("upper", "n")),
        claimed_value=raw.get("claimed_value"),
        claimed_order=order, claimed_coeffs=coeffs,
        even_summand=raw.get("even_summand"),
        odd_summand=raw.get("odd_summand"),
        comment=raw.get("comment", ""))


@dataclass(frozen=True)
class CorpusOptions:
    max_order: int = 4
    range_override: tuple[int, int] | None = None
    jobs: int = 1


def run_corpus(path, options: CorpusOptions = CorpusOptions()) -> Report:
    version, entries = load_corpus(path)
    runner = partial(_run_entry, max_order=options.max_order,
                     range_override=options.range_override)
    if options.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            results = list(pool.map(runner, entries))
    else:
        results = [runner(e) for e in entries]
    return Report(str(path), version, results)


def _run_entry(entry: IdentityEntry, max_order: int,
               range_override: tuple[int, int] | None) -> EntryResult:
    lo, hi = range_override or entry.check_range
    start = time.perf_counter()
    details: dict = {"range": [lo, hi]}
    try:
        checker = _CHECKERS[entry.kind]
        ok = checker(entry, lo, hi, max_order, details)
        status = "pass" if ok else "fail"
    except Exception as exc:
        status = "error"
        details["error"] = f"{type(exc).__name__}: {exc}"
    ms = round((time.perf_counter() - start) * 1000.0, 1)
    return EntryResult(entry.name, entry.kind, status, details, ms)


def _verdict(first_bad, expected=None, got=None) -> dict:
    if first_bad is None:
        return {"status": "pass"}
    out = {"status": "fail", "first_failure": first_bad}
    if expected is not None:
        out["expected"] = str(expected)
        out["got"] = str(got)
    return out


def _check_sum(entry, lo, hi, max_order, details) -> bool:
    term = parse_summand(entry.summand)
    support = Support.parse(entry.lower, entry.upper)
    values = {m: sum_exact(term, support, m) for m in range(lo, hi + 1)}
    details["sums_computed"] = len(values)
    ok = True

    if entry.claimed_value is not None:
        form = ClosedForm.parse(entry.claimed_value)
        bad = next((m for m in range(lo, hi + 1)
                    if values[m] != form.evaluate(m)), None)
        details["value_check"] = _verdict(
            bad, None if bad is None else form.evaluate(bad),
            None if bad is None else values.get(bad))
        ok &= bad is None

    claimed = None
    if entry.claimed_coeffs is not None:
        claimed = Recurrence.from_strings(entry.claimed_coeffs)
        first = lo + claimed.order
        bad = next((m for m in range(first, hi + 1)
                    if claimed.apply(values, m) != 0), None)
        details["recurrence_check"] = _verdict(
            bad, 0, None if bad is None else claimed.apply(values, bad))
        ok &= bad is None

    order_cap = claimed.order if claimed is not None else max_order
    found = zeilberger(term, max_order=order_cap)
    if found is None:
        details["discovery"] = {"status": "fail",
                                "reason": f"no recurrence of order <= {order_cap}"}
        return False
    rec, cert = found
    digest = hashlib.sha256(str(cert.R).encode()).hexdigest()[:12]
    discovery = {"status": "pass", "order": rec.order,
                 "coeffs": [str(c) for c in rec.coeffs],
                 "certificate_digest": digest}
    if claimed is not None and not rec.is_proportional(claimed):
        discovery["status"] = "fail"
        discovery["reason"] = "discovered recurrence not proportional to claim"
        ok = False
    details["discovery"] = discovery

    first = lo + rec.order
    verified = verify_certificate(term, support, rec, cert,
                                  range(first, hi + 1), values)
    details["certificate"] = {"status": "pass" if verified else "fail"}
    return ok and verified


def _check_watson_chu(entry, lo, hi, max_order, details) -> bool:
    term = parse_summand(entry.summand)
    support = Support.parse(entry.lower, entry.upper)
    half = HalfInt(1)
    bad_route = bad_formula = None
    for n in range(max(lo, 1), hi + 1):
        a = HalfInt.from_int(-n)
        routed = binomial(2 * n, n) * chu_w01(a, a, half)
        if bad_route is None and routed != sum_exact(term, support, n):
            bad_route = n
        if bad_formula is None and watson_w00(a, a, half) != \
                watson_w00_series(a, a, half):
            bad_formula = n
    details["reduction_check"] = _verdict(bad_route)
    details["formula_vs_series"] = _verdict(bad_formula)
    return bad_route is None and bad_formula is None


def _check_gamma_closed_form(entry, lo, hi, max_order, details) -> bool:
    from .watson import closed_form_F, closed_form_G
    even = parse_summand(entry.even_summand)
    odd = parse_summand(entry.odd_summand)
    support = Support.parse(entry.lower, entry.upper)
    bad_even = bad_odd = None
    for m in range(lo, hi + 1):
        if bad_even is None and \
                closed_form_F(2 * m) != sum_exact(even, support, 2 * m):
            bad_even = m
        if bad_odd is None and \
                closed_form_G(2 * m + 1) != sum_exact(odd, support, 2 * m + 1):
            bad_odd = m
    details["even_closed_form"] = _verdict(bad_even)
    details["odd_closed_form"] = _verdict(bad_odd)
    return bad_even is None and bad_odd is None


def _check_pfq(entry, lo, hi, max_order, details) -> bool:
    bad_even = bad_odd = None
    for n in range(lo, hi + 1):
        if bad_even is None and \
                pfq_terminating(second_identity_spec(2 * n)) != \
                second_identity_3f2(n):
            bad_even = n
        if bad_odd is None and \
                pfq_terminating(second_identity_spec(2 * n + 1)) != 0:
            bad_odd = n
    details["even_argument"] = _verdict(bad_even)
    details["odd_argument"] = _verdict(bad_odd)
    return bad_even is None and bad_odd is None


_CHECKERS = {
    "sum": _check_sum,
    "watson-chu": _check_watson_chu,
    "gamma-closed-form": _check_gamma_closed_form,
    "pfq-evaluation": _check_pfq,
}


def write_report(report: Report, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2)
        fh.write("\n")
