"""Pass/fail reports for identity checks evaluated on basis elements."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SCHEMA_VERSION = 1


def scalar_str(x) -> str:
    return str(x)


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    witness: tuple[int, ...] | None = None  # 1-based basis indices
    residual: tuple = ()
    violations: int = 0
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "pass": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "violations": self.violations,
        }
        if not self.passed:
            out["residual"] = [scalar_str(x) for x in self.residual]
        if self.note:
            out["note"] = self.note
        return out

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.axiom:<18} {status}"
        if not self.passed:
            w = ",".join(str(i) for i in self.witness)
            res = " ".join(scalar_str(x) for x in self.residual)
            line += f"  witness=({w})  residual=[{res}]  violations={self.violations}"
        if self.note:
            line += f"  ({self.note})"
        return line


@dataclass(frozen=True)
class CheckReport:
    subject: str
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def __contains__(self, axiom: str) -> bool:
        return any(r.axiom == axiom for r in self.results)

    @property
    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    @property
    def axioms(self) -> list[str]:
        return [r.axiom for r in self.results]

    def first_failure(self) -> AxiomResult | None:
        fails = self.failures
        return fails[0] if fails else None

    def merged(self, other: "CheckReport", subject: str | None = None) -> "CheckReport":
        return CheckReport(subject or self.subject, self.results + other.results)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "pass": self.passed,
            "axioms": [r.to_json() for r in self.results],
        }

    def to_text(self) -> str:
        head = f"{self.subject}: {'all checks pass' if self.passed else f'{len(self.failures)} check(s) failed'}"
        return "\n".join([head] + ["  " + r.describe() for r in self.results])


def _nonzero_mask(residual: np.ndarray) -> np.ndarray:
    if residual.size == 0:
        return np.zeros(residual.shape, dtype=bool)
    flat = np.fromiter(map(bool, residual.reshape(-1).tolist()), dtype=bool, count=residual.size)
    return flat.reshape(residual.shape)


def result_from_residual(axiom: str, residual, note: str = "") -> AxiomResult:
    """Summarise a residual array indexed ``[input indices..., output coordinate]``.

    The witness is the lexicographically first input index tuple whose
    residual vector is nonzero.
    """
    residual = np.asarray(residual, dtype=object)
    lead = residual.shape[:-1]
    if residual.shape[-1] == 0 or int(np.prod(lead)) == 0:
        return AxiomResult(axiom, True, note=note)
    bad = _nonzero_mask(residual).reshape(-1, residual.shape[-1]).any(axis=1)
    count = int(bad.sum())
    if count == 0:
        return AxiomResult(axiom, True, note=note)
    first = int(np.argmax(bad))
    idx = np.unravel_index(first, lead)
    witness = tuple(int(i) + 1 for i in idx)
    return AxiomResult(axiom, False, witness, tuple(residual[idx]), count, note)


def flag_result(axiom: str, ok: bool, note: str = "") -> AxiomResult:
    """A result for a check without a natural basis witness (e.g. a rank test)."""
    return AxiomResult(axiom, ok, None if ok else (), (), 0 if ok else 1, note)
