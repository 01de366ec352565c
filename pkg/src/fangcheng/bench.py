"""Operation counts and entry growth across strategies and finishing phases."""

from __future__ import annotations

from .corpus import random_system, rng_for
from .diagonalize import Solution, back_substitute, gauss_jordan
from .eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from .ring import QQ, OpTally
from .tableau import from_system

STRATEGIES = (PivotStrategy.NINE_CHAPTERS, PivotStrategy.CHIO, PivotStrategy.FIELD_GAUSS)


def run_trial(coeffs, rhs, strategy: PivotStrategy) -> dict:
    t = from_system(coeffs, rhs)
    if strategy is PivotStrategy.FIELD_GAUSS:
        t = t.over(QQ)
    ge = OpTally()
    echelon, fwd = forward_eliminate(t, strategy, PivotPolicy.STRICT, ge)
    ge_sol = back_substitute(echelon, ge)
    gj = OpTally()
    diag, jtrace = gauss_jordan(t, strategy, PivotPolicy.STRICT, gj)
    gj_sol = Solution.from_diagonal(diag, gj)
    if ge_sol.values != gj_sol.values:
        raise AssertionError(f"{strategy.value}: pipelines disagree on {coeffs} | {rhs}")
    return {
        "ge": ge,
        "gj": gj,
        "ge_bits": fwd.max_bits,
        "gj_bits": jtrace.max_bits,
        "echelon_bits": echelon.entry_bits(),
    }


def run_bench(n: int, trials: int, seed: int, entry_range: int = 9) -> dict:
    """Deterministic report; trial r draws from ``rng_for(seed, r)`` only."""
    if n < 2 or trials < 1:
        raise ValueError("need n >= 2 and trials >= 1")
    totals = {(s, p): OpTally() for s in STRATEGIES for p in ("ge", "gj")}
    bits = {(s, p): 0 for s in STRATEGIES for p in ("ge", "gj")}
    detail = []
    for r in range(trials):
        coeffs, rhs, resamples = random_system(rng_for(seed, r), n, entry_range)
        row = {"trial": r, "resamples": resamples, "echelon_bits": {}, "ge_mult": {}, "gj_mult": {}}
        for s in STRATEGIES:
            res = run_trial(coeffs, rhs, s)
            for p in ("ge", "gj"):
                totals[s, p] = totals[s, p] + res[p]
                bits[s, p] = max(bits[s, p], res[p + "_bits"])
            row["echelon_bits"][s.value] = res["echelon_bits"]
            row["ge_mult"][s.value] = res["ge"].multiplicative
            row["gj_mult"][s.value] = res["gj"].multiplicative
        detail.append(row)
    rows = []
    for s in STRATEGIES:
        for p in ("ge", "gj"):
            rows.append({"strategy": s.value, "pipeline": p, **totals[s, p].as_dict(),
                         "multiplicative": totals[s, p].multiplicative, "max_bits": bits[s, p]})
    ratios = {s.value: totals[s, "gj"].multiplicative / totals[s, "ge"].multiplicative
              for s in STRATEGIES}
    return {
        "n": n,
        "trials": trials,
        "seed": seed,
        "range": entry_range,
        "rows": rows,
        "gj_over_ge": ratios,
        "per_trial": detail,
        "checks": {
            "gj_exceeds_ge_every_trial": all(d["gj_mult"][k] > d["ge_mult"][k]
                                             for d in detail for k in d["gj_mult"]),
            "nine_bits_exceed_chio_every_trial": all(
                d["echelon_bits"]["nine"] > d["echelon_bits"]["chio"] for d in detail),
        },
    }


def format_report(report: dict) -> str:
    lines = [f"n={report['n']} trials={report['trials']} seed={report['seed']} "
             f"range={report['range']}",
             f"{'strategy':<8} {'pipeline':<8} {'mul':>10} {'div':>10} {'addsub':>10} "
             f"{'mul+div':>10} {'max_bits':>9}"]
    for r in report["rows"]:
        lines.append(f"{r['strategy']:<8} {r['pipeline']:<8} {r['mul']:>10} {r['div']:>10} "
                     f"{r['addsub']:>10} {r['multiplicative']:>10} {r['max_bits']:>9}")
    for s, ratio in report["gj_over_ge"].items():
        lines.append(f"gj/ge multiplicative ({s}): {ratio:.4f}")
    for name, ok in report["checks"].items():
        lines.append(f"{name}: {'yes' if ok else 'no'}")
    return "\n".join(lines)
