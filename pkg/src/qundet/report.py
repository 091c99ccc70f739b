"""Run manifests and JSON report emission.

Every JSON report embeds a manifest: the command, its parameters, the
seed when randomness is involved, the package version, wall time, and
a sha256 digest of the canonical result payload so reports can be
diffed and cached by content.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any


def _version() -> str:
    from qundet import __version__

    return __version__


@dataclass
class RunManifest:
    command: str
    parameters: dict
    seed: int | None = None
    started: float = 0.0

    def __post_init__(self):
        if not self.started:
            self.started = time.monotonic()

    def wrap(self, result: Any) -> dict:
        """Embed the result under a finalized manifest."""
        canonical = json.dumps(result, sort_keys=True, separators=(",", ":"))
        return {
            "manifest": {
                "command": self.command,
                "parameters": self.parameters,
                "seed": self.seed,
                "version": _version(),
                "wall_time_s": round(time.monotonic() - self.started, 6),
                "result_digest": hashlib.sha256(canonical.encode()).hexdigest(),
            },
            "result": result,
        }


def emit(document: dict, json_target: str | None, human_text: str) -> None:
    """Route output: human text by default, JSON to stdout or a file.

    ``json_target`` is None (human text on stdout), "-" (JSON on
    stdout), or a path (JSON written there, note on stderr).  Human
    diagnostics never mix into machine output.
    """
    if json_target is None:
        print(human_text)
    elif json_target == "-":
        json.dump(document, sys.stdout, indent=2)
        sys.stdout.write("\n")
        if human_text:
            print(human_text, file=sys.stderr)
    else:
        Path(json_target).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {json_target}", file=sys.stderr)
        if human_text:
            print(human_text, file=sys.stderr)
