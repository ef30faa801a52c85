"""Deterministic command reports.

A report collects the command echo, input digests, per-check results
with witnesses, and tables; it renders either as human-readable text or
as a stable line-oriented key-value stream carrying identical content.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()[:16]


def render_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


@dataclass
class Report:
    command: str
    inputs: list[tuple[str, str]] = field(default_factory=list)   # (name, digest)
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    values: list[tuple[str, str]] = field(default_factory=list)
    tables: list[tuple[str, list[tuple[str, str]]]] = field(default_factory=list)
    blocks: list[tuple[str, str]] = field(default_factory=list)   # verbatim payloads

    def add_input(self, name: str, content: str) -> None:
        self.inputs.append((name, digest(content)))

    def check(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, ok, witness))

    def value(self, key, val) -> None:
        self.values.append((str(key), render_value(val)))

    def table(self, title: str, rows: list[tuple[str, str]]) -> None:
        self.tables.append((title, [(str(k), render_value(v)) for k, v in rows]))

    def block(self, title: str, payload: str) -> None:
        self.blocks.append((title, payload))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def render_text(self) -> str:
        lines = [f"== {self.command} =="]
        for name, dg in self.inputs:
            lines.append(f"input {name} [{dg}]")
        for key, val in self.values:
            lines.append(f"{key} = {val}")
        for title, rows in self.tables:
            lines.append(f"-- {title} --")
            for k, v in rows:
                lines.append(f"  {k:12} {v}")
        for name, ok, witness in self.checks:
            mark = "PASS" if ok else "FAIL"
            suffix = f"  ({witness})" if witness and not ok else ""
            lines.append(f"[{mark}] {name}{suffix}")
        for title, payload in self.blocks:
            lines.append(f"-- {title} --")
            lines.append(payload.rstrip("\n"))
        lines.append("status " + ("pass" if self.ok else "fail"))
        return "\n".join(lines) + "\n"

    def render_structured(self) -> str:
        lines = [f"command {self.command}"]
        for name, dg in self.inputs:
            lines.append(f"input {name} {dg}")
        for key, val in self.values:
            lines.append(f"value {key} {val}")
        for title, rows in self.tables:
            for k, v in rows:
                lines.append(f"table {title} {k} {v}")
        for name, ok, witness in self.checks:
            state = "pass" if ok else "fail"
            extra = f" {witness}" if witness and not ok else ""
            lines.append(f"check {name} {state}{extra}")
        for title, payload in self.blocks:
            for payload_line in payload.rstrip("\n").split("\n"):
                lines.append(f"block {title} {payload_line}")
        lines.append("status " + ("pass" if self.ok else "fail"))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return self.render_structured()
        return self.render_text()
