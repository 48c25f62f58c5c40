"""Report structures shared by the library verifiers and the CLI runner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    """Outcome of one identity check."""

    check_id: str
    claim: str
    probes: int
    max_residual: float
    tolerance: float
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "claim": self.claim,
            "probes": self.probes,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """Full suite outcome; body is deterministic for a fixed seed and config."""

    suite: str
    seed: int
    config_digest: str
    records: list
    wall_time_s: float
    schema: int = 1

    @property
    def overall_pass(self):
        return all(r.passed for r in self.records)

    def to_dict(self, include_timing=True):
        body = {
            "schema": self.schema,
            "suite": self.suite,
            "seed": self.seed,
            "config_digest": self.config_digest,
            "overall_pass": self.overall_pass,
            "records": [r.to_dict() for r in sorted(self.records, key=lambda r: r.check_id)],
        }
        if include_timing:
            body["wall_time_s"] = self.wall_time_s
        return body

    def to_json(self, include_timing=True):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def render_text(self):
        lines = [f"suite: {self.suite}   seed: {self.seed}   digest: {self.config_digest[:16]}"]
        for rec in sorted(self.records, key=lambda r: r.check_id):
            mark = "PASS" if rec.passed else "FAIL"
            lines.append(
                f"[{mark}] {rec.check_id:<28} residual {rec.max_residual:.3e}"
                f"  tol {rec.tolerance:.1e}  ({rec.claim})"
            )
        verdict = "all checks passed" if self.overall_pass else "FAILURES present"
        lines.append(f"{verdict}  ({len(self.records)} checks, {self.wall_time_s:.2f} s)")
        return "\n".join(lines)
