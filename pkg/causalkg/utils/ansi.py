#!/usr/bin/env python
# encoding: utf-8
"""
utils/ansi.py

Terminal styling for command-line output. Styles apply only when the
stream is a terminal and CAUSALKG_NO_COLOR is unset.
"""
from __future__ import print_function

import os

from enum import Enum, unique

from causalkg.constants import NO_COLOR_VARIABLE
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

RESET = "\033[0m"

@export
@unique
class Style(Enum):

    BOLD        = "\033[1m"
    DIM         = "\033[2m"
    RED         = "\033[91m"
    GREEN       = "\033[92m"
    YELLOW      = "\033[93m"
    CYAN        = "\033[96m"

    def to_string(self):
        return str(self.name.lower())

    def __str__(self):
        return self.to_string()

@export
def colorful(stream):
    """ True if styled text may be written to `stream` """
    if os.environ.get(NO_COLOR_VARIABLE):
        return False
    isatty = getattr(stream, 'isatty', None)
    return bool(isatty and isatty())

@export
def paint(text, *styles, stream=None):
    if not styles or stream is None or not colorful(stream):
        return text
    return "".join(style.value for style in styles) + text + RESET

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
