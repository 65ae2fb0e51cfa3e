import os

from ..logging import LOGGER


def dirr(path: str) -> None:
    for folder in (path, os.path.join(path, "checkpoints")):
        if not os.path.isdir(folder):
            os.makedirs(folder)
            LOGGER(__name__).info(f"Created {folder}")
