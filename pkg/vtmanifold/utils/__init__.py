from .formatters import *
from .sys import *
