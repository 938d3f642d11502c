"""Utilities for artifact encoding."""

import math
import re
from enum import Enum
from fractions import Fraction
from json import JSONEncoder
from typing import Any, Iterator, List, Match, Union

import numpy as np

from echoloc import consts

MARK = "\x00"
"""Wraps pre-formatted floats; JSON always escapes it inside strings."""

STRING = "s"
"""Prefix of a marked index into the strings that contain :data:`MARK`."""

MARKED = re.compile(r'"\\u0000([^"\\]*)\\u0000"')


class FixedPrecisionJSONEncoder(JSONEncoder):
    """
    Renders every float with a fixed number of significant digits.

    numpy scalars and arrays, enums and fractions are converted on the way.
    Identical inputs give byte-identical output. Floats are formatted before
    encoding and spliced back into the text, so only the public encoder
    interface is used.
    """

    def default(self, obj: Any) -> Union[str, float, int, List[Any]]:
        """Overriden to render numpy values, enums and iterables."""
        if isinstance(obj, Enum):
            return obj.value  # type: ignore
        if isinstance(obj, np.generic):
            return obj.item()  # type: ignore
        if isinstance(obj, Fraction):
            return float(obj)
        try:
            iterable = iter(obj)
        except TypeError:
            pass
        else:
            return list(iterable)
        return JSONEncoder.default(self, obj)  # type: ignore

    def floatstr(self, value: float) -> str:
        """Format one float."""
        if math.isfinite(value):
            return format(value, consts.FLOAT_FORMAT)
        if not self.allow_nan:
            raise ValueError(f"float out of range for JSON: {value!r}")
        if value != value:
            return "NaN"
        return "Infinity" if value > 0 else "-Infinity"

    def mark(self, obj: Any, strings: List[str]) -> Any:
        """
        Copy of ``obj`` with every float replaced by its marked text.

        Strings that already hold :data:`MARK` are swapped for a marked index
        into ``strings``, which receives their encoded form.
        """
        if isinstance(obj, (np.generic, np.ndarray)):
            obj = obj.tolist()
        elif isinstance(obj, Fraction):
            obj = float(obj)
        elif isinstance(obj, (set, frozenset)):
            obj = list(obj)
        if isinstance(obj, str):
            if MARK not in obj:
                return obj
            strings.append(self.encode(obj))
            return f"{MARK}{STRING}{len(strings) - 1}{MARK}"
        if isinstance(obj, bool) or not isinstance(obj, (float, dict, list,
                                                         tuple)):
            return obj
        if isinstance(obj, float):
            return f"{MARK}{self.floatstr(obj)}{MARK}"
        if isinstance(obj, dict):
            return {
                self.mark(key, strings) if isinstance(key, str) else key:
                self.mark(value, strings)
                for key, value in obj.items()
            }
        return [self.mark(item, strings) for item in obj]

    def iterencode(self, o: Any, _one_shot: bool = False) -> Iterator[str]:
        """Encode with :meth:`floatstr` in place of ``float.__repr__``."""
        strings: List[str] = []
        text = "".join(super().iterencode(self.mark(o, strings), _one_shot))

        def restore(match: Match[str]) -> str:
            body = match.group(1)
            if body.startswith(STRING):
                return strings[int(body[len(STRING):])]
            return body

        yield MARKED.sub(restore, text)
