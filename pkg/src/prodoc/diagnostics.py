"""Diagnostics collected while indexing a source tree."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    message: str
    file: str | None = None
    line: int | None = None

    def located(self, file: str | None = None, line: int | None = None) -> "Diagnostic":
        return Diagnostic(self.severity, self.message,
                          file if file is not None else self.file,
                          line if line is not None else self.line)

    def render(self) -> str:
        where = self.file or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        return f"{where}: {self.severity}: {self.message}"
