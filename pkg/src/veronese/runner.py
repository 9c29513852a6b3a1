"""Run configuration, command dispatch and the cross-check matrix behind ``verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import __version__, kernels
from .betti import BettiTable, betti_tables, dz_local_check, exhaustive_tables, veronese_structural_betti, verify_hk
from .code import build_veronese_code, extend_scalars
from .errors import GuardExceeded, InvalidInput
from .field import TABLE_THRESHOLD, FieldDescriptor, field_of_order, prime_power
from .geometry import MONOMIALS, conic_census, plane
from .matroid import DEFAULT_GUARD, cycle_census, parity_check_matroid
from .oracle import SUBCODE_GUARD, WORD_GUARD, subcode_spectrum, word_weight_distribution
from .reference import (
    beta_line_plus_point,
    betti_closed_form,
    gwp_closed_form,
    hamming_ladder,
    conic_class_counts,
    minimal_set_census,
    spectra_closed_form,
    total_conics,
)
from .report import Report
from .weights import (
    SpectraTable,
    gaussian_binomial,
    gwp_from_betti,
    gwp_from_phi_differences,
    gwp_from_spectra,
    hamming_weights,
    spectra_from_gwp,
)

COMMANDS = ("census", "betti", "gwp", "spectra", "oracle", "verify", "reference", "matroid", "generator")
FORMATS = ("json", "csv", "table")
ENGINE_MAX_Q = 16
VERIFY_MAX_Q = 9
K = 6


@dataclass
class RunConfig:
    command: str
    q: int = 4
    options: dict = field(default_factory=dict)
    threads: int = 1
    exhaustive_guard: int = DEFAULT_GUARD
    word_guard: int = WORD_GUARD
    subcode_guard: int = SUBCODE_GUARD
    fmt: str = "json"
    out: str | None = None
    modulus: tuple | None = None
    max_q: int | None = None

    def validate(self) -> RunConfig:
        if self.command not in COMMANDS:
            raise InvalidInput(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise InvalidInput(f"unknown format {self.fmt!r}")
        if not isinstance(self.q, int) or self.q < 2:
            raise InvalidInput(f"q must be a prime power >= 2, got {self.q!r}")
        prime_power(self.q)
        limit = self.max_q or (VERIFY_MAX_Q if self.command == "verify" else ENGINE_MAX_Q)
        if self.q > limit:
            raise InvalidInput(f"q={self.q} exceeds the configured maximum {limit}")
        if self.threads < 1:
            raise InvalidInput("threads must be positive")
        for name in ("exhaustive_guard", "word_guard", "subcode_guard"):
            if getattr(self, name) < 0:
                raise InvalidInput(f"{name.replace('_', '-')} must be non-negative")
        return self


def build_meta(F: FieldDescriptor) -> dict:
    q = F.cardinality
    return {
        "q": q,
        "n": q * q + q + 1,
        "k": K,
        "modulus": F.describe(),
        "point_order_hash": plane(F).point_order_hash(),
        "version": __version__,
    }


# -- section builders --------------------------------------------------------

def census_section(cen) -> dict:
    d = cen._asdict()
    d["total"] = sum(cen)
    return d


def betti_section(tables) -> list[dict]:
    return [{"level": t.level, "entries": t.as_rows()} for t in tables]


def gwp_section(polys) -> list[dict]:
    return [{"w": w, "coeffs": list(P.coeffs)} for w, P in enumerate(polys) if P.coeffs]


def distribution_section(counts: dict) -> list[dict]:
    return [{"w": w, "count": c} for w, c in sorted(counts.items())]


def _polys_at(polys, Q: int) -> dict[int, int]:
    return {w: v for w, P in enumerate(polys) if (v := P(Q))}


# -- shared pipeline ---------------------------------------------------------

class Pipeline:
    """Lazily computed artifacts for one field; every stage is cached."""

    def __init__(self, F: FieldDescriptor, cfg: RunConfig):
        self.F = F
        self.cfg = cfg
        self.q = F.cardinality
        self.n = self.q * self.q + self.q + 1
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def code(self):
        return self._get("code", lambda: build_veronese_code(self.F))

    @property
    def matroid(self):
        return self._get("matroid", lambda: parity_check_matroid(self.code, guard=self.cfg.exhaustive_guard))

    def tables(self, method: str = "auto") -> list[BettiTable]:
        return self._get(("betti", method), lambda: betti_tables(self.F, method, self.cfg.exhaustive_guard))

    @property
    def gwp(self):
        return self._get("gwp", lambda: gwp_from_betti(self.tables(), self.n, K))

    @property
    def spectra(self) -> SpectraTable:
        return self._get("spectra", lambda: spectra_from_gwp(self.gwp, self.q, K, self.n))


def _word_extensions(q: int, guard: int):
    m = 1
    while (q ** m) <= TABLE_THRESHOLD and q ** (m * K) <= guard:
        yield m
        m += 1


def _oracle_checks(R: Report, P: Pipeline, spectra=None, polys=None):
    q, cfg = P.q, P.cfg
    exts = list(_word_extensions(q, cfg.word_guard))
    for m in exts:
        dist = word_weight_distribution(extend_scalars(P.code, m), cfg.word_guard)
        R.check(f"oracle.words.Q{q ** m}", _polys_at(polys if polys is not None else P.gwp, q ** m), dist.counts)
    nxt = len(exts) + 1
    R.skipped.append(f"oracle.words.Q{q ** nxt}: {q ** (nxt * K)} words exceed the scan limit")
    S = spectra if spectra is not None else P.spectra
    for r in range(1, K + 1):
        size = gaussian_binomial(K, r, q)
        if size > cfg.subcode_guard:
            R.skipped.append(f"oracle.subcodes.r{r}: {size} subcodes exceed the subcode guard {cfg.subcode_guard}")
            continue
        R.check(f"oracle.subcodes.r{r}", S.row(r), subcode_spectrum(P.code, r, cfg.subcode_guard))


# -- commands ---------------------------------------------------------------

def _cmd_census(R, P):
    R.sections["census"] = census_section(conic_census(P.F))


def _cmd_betti(R, P):
    method = P.cfg.options.get("method", "auto")
    tables = P.tables(method)
    level = P.cfg.options.get("level")
    if level is not None:
        if not 0 <= level < K:
            raise InvalidInput(f"level must lie in [0, {K - 1}]")
        tables = [t for t in tables if t.level == level]
    R.sections["betti"] = betti_section(tables)


def _cmd_gwp(R, P):
    R.sections["gwp"] = gwp_section(P.gwp)


def _cmd_spectra(R, P):
    S = P.spectra
    R.sections["spectra"] = S.as_rows()
    checks = P.cfg.options.get("check") or ()
    unknown = set(checks) - {"formulas", "oracle"}
    if unknown:
        raise InvalidInput(f"unknown spectra checks {sorted(unknown)}")
    if "formulas" in checks:
        R.check("spectra.closed_form", spectra_closed_form(P.q).entries, S.entries)
    if "oracle" in checks:
        _oracle_checks(R, P)


def _cmd_oracle(R, P):
    opts = P.cfg.options
    kind = opts.get("kind", "words")
    if kind == "words":
        m = int(opts.get("ext", 1))
        C = extend_scalars(P.code, m)
        dist = word_weight_distribution(C, P.cfg.word_guard)
        R.sections["oracle"] = {"kind": "words", "ext": m, "Q": C.q,
                                "distribution": distribution_section(dist.counts)}
    elif kind == "subcodes":
        r = int(opts.get("r", 1))
        if not 0 <= r <= K:
            raise InvalidInput(f"r must lie in [0, {K}]")
        R.sections["oracle"] = {"kind": "subcodes", "r": r,
                                "distribution": distribution_section(subcode_spectrum(P.code, r, P.cfg.subcode_guard))}
    else:
        raise InvalidInput(f"unknown oracle {kind!r}")


def _cmd_matroid(R, P):
    i = int(P.cfg.options.get("cycles", 1))
    method = P.cfg.options.get("method", "auto")
    cen = cycle_census(P.matroid, i, method)
    R.sections["cycles"] = {"nullity": i, "census": [{"size": s, "count": c} for s, c in cen.items()]}


def _cmd_generator(R, P):
    geo = plane(P.F)
    R.sections["generator"] = {
        "monomials": list(MONOMIALS),
        "points": geo.coords.tolist(),
        "rows": P.code.generator.tolist(),
    }


def _cmd_reference(R, P):
    q = P.q
    want = P.cfg.options.get("table", "all")
    out = {}
    if want in ("all", "census"):
        out["census"] = census_section(conic_class_counts(q))
    if want in ("all", "ladder"):
        out["ladder"] = hamming_ladder(q)
    if want in ("all", "spectra"):
        out["spectra"] = spectra_closed_form(q).as_rows()
    if q >= 4:
        if want in ("all", "betti"):
            out["betti"] = betti_section(betti_closed_form(q))
        if want in ("all", "gwp"):
            out["gwp"] = gwp_section(gwp_closed_form(q))
        if want in ("all", "minimal"):
            out["minimal"] = [{"nullity": i, "size": s, "count": c}
                              for i, row in minimal_set_census(q).items() for s, c in row.items()]
    if not out:
        raise InvalidInput(f"no {want!r} fixture for q={q}")
    R.sections["reference"] = out


def _cmd_verify(R, P):
    q, n, cfg = P.q, P.n, P.cfg
    cen = conic_census(P.F)
    R.sections["census"] = census_section(cen)
    R.check("census.closed_form", tuple(conic_class_counts(q)), tuple(cen))
    R.check("census.total", total_conics(q), sum(cen))
    R.check("betti.local_line_plus_point", q, dz_local_check(q))

    routes = {}
    if n <= cfg.exhaustive_guard:
        routes["exhaustive"] = exhaustive_tables(P.matroid)
    else:
        R.skipped.append(f"betti.exhaustive: n={n} exceeds the exhaustive guard {cfg.exhaustive_guard}")
    if q >= 4:
        routes["structural"] = veronese_structural_betti(P.F)
    if not routes:
        raise GuardExceeded(f"no Betti route is feasible for q={q}", suggestion="raise --exhaustive-guard")
    if len(routes) == 2:
        R.check("betti.exhaustive_vs_structural",
                [t.entries for t in routes["exhaustive"]], [t.entries for t in routes["structural"]])
    tables = next(iter(routes.values()))
    P._cache[("betti", "auto")] = tables
    R.sections["betti"] = betti_section(tables)
    for t in tables:
        R.check(f"betti.hk.level{t.level}", (0,) * t.k_eff, verify_hk(t).residuals)
    if q >= 4:
        R.check("betti.closed_form", [t.entries for t in betti_closed_form(q)], [t.entries for t in tables])
        R.check("betti.line_plus_point", beta_line_plus_point(q), tables[0][(2, q * q - 1)])
    for l, t in enumerate(tables):
        R.check(f"cycles.nullity{l + 1}.vs_betti_row1", t.row(1), cycle_census(P.matroid, l + 1))
    if q >= 4:
        for i, expected in minimal_set_census(q).items():
            R.check(f"cycles.nullity{i}.closed_form", expected, cycle_census(P.matroid, i, "structural"))

    polys = P.gwp
    R.sections["gwp"] = gwp_section(polys)
    R.check("gwp.reform_assembly", polys, gwp_from_phi_differences(tables, n, K))
    R.check("gwp.vanish_at_one", [], [w for w, Pw in enumerate(polys) if w and Pw(1)])
    for m in range(1, K + 1):
        R.check(f"gwp.word_count.m{m}", q ** (K * m), sum(Pw(q ** m) for Pw in polys))
    if q >= 4:
        R.check("gwp.closed_form", gwp_closed_form(q), polys)

    S = P.spectra
    R.sections["spectra"] = S.as_rows()
    R.check("spectra.closed_form", spectra_closed_form(q).entries, S.entries)
    for r in range(K + 1):
        R.check(f"spectra.row_sum.r{r}", gaussian_binomial(K, r, q), sum(S.row(r).values()))
    R.check("spectra.round_trip", polys, gwp_from_spectra(S))

    ladder = hamming_ladder(q)
    R.check("hamming.betti_route", ladder, hamming_weights(tables[0]))
    R.check("hamming.spectra_route", ladder, hamming_weights(S))

    _oracle_checks(R, P, S, polys)


_HANDLERS = {
    "census": _cmd_census,
    "betti": _cmd_betti,
    "gwp": _cmd_gwp,
    "spectra": _cmd_spectra,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "reference": _cmd_reference,
    "matroid": _cmd_matroid,
    "generator": _cmd_generator,
}


def dispatch(cfg: RunConfig) -> Report:
    cfg.validate()
    kernels.set_threads(cfg.threads)
    F = field_of_order(cfg.q, modulus=cfg.modulus)
    R = Report(build_meta(F))
    _HANDLERS[cfg.command](R, Pipeline(F, cfg))
    return R
