from typing import Iterable, Optional, Sequence


def format_duration(seconds: Optional[float]) -> str:
    """Search clock: tenths under a minute, zero-padded fields above; ``None`` is unbounded."""
    if seconds is None:
        return "no limit"
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes, secs = divmod(int(seconds), 60)
    hours, minutes = divmod(minutes, 60)
    if not hours:
        return f"{minutes}m{secs:02d}s"
    days, hours = divmod(hours, 24)
    clock = f"{hours}h{minutes:02d}m{secs:02d}s"
    return f"{days}d {clock}" if days else clock


def format_subset(subset: Iterable[int]) -> str:
    """Table style: one-digit labels run together, larger labels are space separated."""
    text = ""
    for v in subset:
        if v >= 10 and text:
            text += " "
        text += str(v)
    return text


def format_orbit(rep: Iterable[int], size: int) -> str:
    return f"{format_subset(rep)}_{size}"


def format_symbol(d: int, n: int, i: int, k: int) -> str:
    return f"^{d} {n}^{i}_{k}"


def format_fvector(f: Sequence[int], table: bool = False) -> str:
    if table:
        f = f[1:]
    return "(" + ",".join(str(x) for x in f) + ")"


def format_group_summand(rank: int, torsion: Sequence[int]) -> str:
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z_{t}" for t in torsion)
    return " + ".join(parts) if parts else "0"


def format_homology(betti: Sequence[int], torsion: Sequence[Sequence[int]]) -> str:
    return (
        "("
        + ", ".join(format_group_summand(b, t) for b, t in zip(betti, torsion))
        + ")"
    )


def format_z2(z2_betti: Sequence[int]) -> str:
    return "(" + ", ".join(f"Z_2^{b}" if b > 1 else ("Z_2" if b else "0") for b in z2_betti) + ")"


def format_gap(facets: Iterable[Sequence[int]]) -> str:
    return "[ " + ", ".join("[ " + ", ".join(str(v) for v in f) + " ]" for f in facets) + " ]"


def format_vector(entries: Sequence[int]) -> str:
    return "(" + " ".join(str(x) for x in entries) + ")"


def row_name(index: int, total: int) -> str:
    if total <= 26:
        return chr(ord("a") + index)
    return f"r{index + 1}"
