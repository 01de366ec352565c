"""Step-by-step records of an elimination run and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ring import OpTally


@dataclass(frozen=True)
class BoardSnapshot:
    step: int
    phase: str                      # "forward" | "hart" | "jordan"
    pivot: tuple[int, int] | None   # 1-based (row, column); None for the initial board
    divisor: str | None
    swap: tuple[int, int] | None
    entries: tuple[tuple[str, ...], ...]
    max_bits: int
    ops: OpTally

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "phase": self.phase,
            "pivot": list(self.pivot) if self.pivot else None,
            "divisor": self.divisor,
            "swap": list(self.swap) if self.swap else None,
            "tableau": [list(r) for r in self.entries],
            "max_bits": self.max_bits,
            "ops": self.ops.as_dict(),
        }

    def render_board(self) -> str:
        head = f"# step {self.step} [{self.phase}]"
        if self.pivot:
            head += f" pivot=({self.pivot[0]},{self.pivot[1]})"
        if self.divisor is not None:
            head += f" divisor={self.divisor}"
        if self.swap:
            head += f" swap={self.swap[0]}<->{self.swap[1]}"
        head += f" max_bits={self.max_bits} mul={self.ops.mul} div={self.ops.div} addsub={self.ops.addsub}"
        widths = [max(len(r[j]) for r in self.entries) for j in range(len(self.entries[0]))]
        body = "\n".join(" ".join(s.rjust(w) for s, w in zip(r, widths)) for r in self.entries)
        return head + "\n" + body


@dataclass
class Trace:
    events: list[BoardSnapshot] = field(default_factory=list)

    @property
    def swaps(self) -> list[tuple[int, int]]:
        return [e.swap for e in self.events if e.swap]

    @property
    def parity(self) -> int:
        """+1 or -1 according to the number of recorded row exchanges."""
        return -1 if len(self.swaps) % 2 else 1

    @property
    def ops(self) -> OpTally:
        total = OpTally()
        for e in self.events:
            total = total + e.ops
        return total

    @property
    def max_bits(self) -> int:
        return max((e.max_bits for e in self.events), default=0)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def extend(self, other: Trace) -> Trace:
        return Trace(self.events + list(other.events))


def trace_document(trace: Trace, exit_code: int, solution=None, denominator=None) -> dict:
    return {
        "phase_events": [e.to_json() for e in trace],
        "result": {
            "exit": exit_code,
            "solution": [str(x) for x in solution] if solution is not None else None,
            "denominator": str(denominator) if denominator is not None else None,
        },
    }


_OPS_SCHEMA = {
    "type": "object",
    "properties": {k: {"type": "integer", "minimum": 0} for k in ("mul", "div", "addsub")},
    "required": ["mul", "div", "addsub"],
    "additionalProperties": False,
}

_PAIR = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2, "maxItems": 2}

TRACE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["phase_events", "result"],
    "additionalProperties": False,
    "properties": {
        "phase_events": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["step", "phase", "pivot", "divisor", "swap", "tableau", "max_bits", "ops"],
                "additionalProperties": False,
                "properties": {
                    "step": {"type": "integer", "minimum": 1},
                    "phase": {"enum": ["forward", "hart", "jordan"]},
                    # null only on the initial board, before any pivot is chosen
                    "pivot": {"oneOf": [_PAIR, {"type": "null"}]},
                    "divisor": {"type": ["string", "null"]},
                    "swap": {"oneOf": [_PAIR, {"type": "null"}]},
                    "tableau": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "array", "minItems": 1, "items": {"type": "string"}},
                    },
                    "max_bits": {"type": "integer", "minimum": 0},
                    "ops": _OPS_SCHEMA,
                },
            },
        },
        "result": {
            "type": "object",
            "required": ["exit", "solution", "denominator"],
            "additionalProperties": False,
            "properties": {
                "exit": {"enum": [0, 2, 3, 4, 5]},
                "solution": {"oneOf": [{"type": "array", "items": {"type": "string"}}, {"type": "null"}]},
                "denominator": {"type": ["string", "null"]},
            },
        },
    },
}
