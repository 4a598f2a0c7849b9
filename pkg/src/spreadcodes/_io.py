import os
import tempfile
from pathlib import Path

OUTDIR_ENV = "SPREADCODES_OUTDIR"


def atomic_write(path, text: str) -> Path:
    """Write ``text`` via a temp file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def default_output(name: str) -> Path | None:
    """``$SPREADCODES_OUTDIR/name`` when the variable is set."""
    base = os.environ.get(OUTDIR_ENV)
    return Path(base) / name if base else None
