import json
import os
from typing import Any, Iterable, Iterator, List

from ..core.complex import SimplicialComplex
from ..utils.exceptions import ComplexError, ComplexFileError
from .formatters import format_gap


def parse_complex(text: str, source: str = "<text>") -> SimplicialComplex:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ComplexFileError(f"{source}: empty complex file")
    try:
        n, d = (int(x) for x in lines[0].split())
    except ValueError:
        raise ComplexFileError(f"{source}: first line must be 'n d', got {lines[0]!r}")
    facets = []
    for no, line in enumerate(lines[1:], 2):
        try:
            facets.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise ComplexFileError(f"{source}: facet line {no} is not a list of integers")
    try:
        return SimplicialComplex(n, d, tuple(facets))
    except ComplexError as ex:
        raise ComplexFileError(f"{source}: {ex}") from ex


def read_complex(path: str) -> SimplicialComplex:
    try:
        with open(path, encoding="utf8") as fh:
            return parse_complex(fh.read(), path)
    except OSError as ex:
        raise ComplexFileError(f"cannot read {path}: {ex}") from ex


def dump_complex(M: SimplicialComplex, gap: bool = False) -> str:
    if gap:
        return format_gap(M.facets) + "\n"
    lines = [f"{M.n} {M.d}"]
    lines.extend(" ".join(str(v) for v in f) for f in M.facets)
    return "\n".join(lines) + "\n"


def write_complex(M: SimplicialComplex, path: str, gap: bool = False) -> None:
    write_text(path, dump_complex(M, gap))


def write_text(path: str, text: str) -> None:
    """Write through a temporary file so readers never see half a file."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def read_json(path: str, default: Any = None) -> Any:
    if not os.path.exists(path):
        return default
    with open(path, encoding="utf8") as fh:
        return json.load(fh)


def write_json(path: str, data: Any) -> None:
    write_text(path, json.dumps(data, indent=1, sort_keys=True) + "\n")


def iter_jsonl(path: str) -> Iterator[Any]:
    if not os.path.exists(path):
        return
    with open(path, encoding="utf8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)


def append_jsonl(path: str, items: Iterable[Any]) -> int:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    count = 0
    with open(path, "a", encoding="utf8") as fh:
        for item in items:
            fh.write(json.dumps(item, sort_keys=True) + "\n")
            count += 1
    return count


def read_jsonl(path: str) -> List[Any]:
    return list(iter_jsonl(path))
