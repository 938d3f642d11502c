"""
Run config files.

One ``key = value`` setting per line; ``#`` starts a comment. Values are kept
as stripped strings and converted by :mod:`echoloc.context`.
"""
from typing import Dict, Iterable, List, Optional, Tuple

from lark import Lark, Transformer, Token
from lark.exceptions import LarkError

from echoloc.errors import ValidationError


class ConfigTransformer(Transformer):
    """Collect settings as ``(key, value)`` pairs."""

    def setting(self, tokens: List[Token]) -> Tuple[str, str]:
        """Strip the raw value."""
        key, value = tokens
        return str(key), str(value).strip()

    def start(self, tokens: List[Tuple[str, str]]) -> List[Tuple[str, str]]:
        """Settings in file order."""
        return list(tokens)


CONFIG_PARSER = Lark(
    r"""
    start : _NL* (setting _NL+)* setting?

    setting : KEY "=" VALUE

    KEY : /[a-z_][a-z0-9_]*/
    VALUE : /[^\s#][^\n#]*/

    COMMENT : /#[^\n]*/
    _NL : /\r?\n/

    %ignore COMMENT
    %ignore /[ \t]+/
    """,
    start="start",
    parser="lalr",
)


def parse_config_file(
    text: str, allowed: Optional[Iterable[str]] = None
) -> Dict[str, str]:
    """
    Parse config-file text into a mapping.

    Parameters
    ----------
    text : str
        Contents of the config file.
    allowed : iterable of str
        Keys that may appear; any other key is rejected.

    Returns
    -------
    dict
        Raw string values by key.

    Raises
    ------
    :class:`.ValidationError`
        On syntax errors, unknown keys or repeated keys.
    """
    try:
        tree = CONFIG_PARSER.parse(text)
    except LarkError as e:
        raise ValidationError(f"Invalid config file: {e}")
    keys = set(allowed) if allowed is not None else None
    settings: Dict[str, str] = {}
    for key, value in ConfigTransformer().transform(tree):
        if keys is not None and key not in keys:
            raise ValidationError(f"unknown config key '{key}'")
        if key in settings:
            raise ValidationError(f"duplicate config key '{key}'")
        settings[key] = value
    return settings
