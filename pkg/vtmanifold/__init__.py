from vtmanifold.core.app import vtm

from .logging import LOGGER

app = vtm()
