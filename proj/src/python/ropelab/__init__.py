from ._ropelab import *  # noqa: F401,F403
from ._ropelab import RopelabError, Rope

__all__ = [name for name in dir() if not name.startswith("_")]
