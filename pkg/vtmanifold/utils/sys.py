import time

import psutil

from vtmanifold.misc import _boot_
from vtmanifold.utils.formatters import format_duration


def worker_count(requested: int = 0) -> int:
    if requested > 0:
        return requested
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


def sys_stats(path: str = "."):
    """Uptime, CPU, RAM and the disk usage of the volume holding ``path``."""
    UP = format_duration(time.time() - _boot_)
    CPU = f"{psutil.cpu_percent(interval=None)}%"
    RAM = f"{psutil.virtual_memory().percent}%"
    DISK = f"{psutil.disk_usage(path).percent}%"
    return UP, CPU, RAM, DISK
