from .language import *
