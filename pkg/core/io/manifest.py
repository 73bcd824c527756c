"""run_manifest.json 写出。"""

from __future__ import annotations

from pathlib import Path

import orjson

from models.run import RunManifest

MANIFEST_NAME = "run_manifest.json"


def write_manifest(out_dir: Path, manifest: RunManifest) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / MANIFEST_NAME
    payload = orjson.dumps(
        manifest.model_dump(mode="json"),
        option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE,
    )
    path.write_bytes(payload)
    return path


def read_manifest(path: Path) -> RunManifest:
    return RunManifest.model_validate(orjson.loads(path.read_bytes()))
