"""
Tiny façade over :pymod:`logging` so internal modules can do

```python
from gf_cohomology.logger import log
log.debug("basis sizes %s", sizes)
```

and end-users can tweak verbosity via the environment:

```bash
export GFC_LOGLEVEL=DEBUG
```
"""

import logging
import os
import sys

from gf_cohomology.constants import LOGLEVEL_ENV

_FMT = "%(asctime)s  %(levelname)-8s  %(name)s › %(message)s"


def configure_logging(verbose: int) -> None:
    """
    Initialize root logging once. If GFC_LOGLEVEL is set it overrides verbosity.
    Verbosity: 0 => WARNING, 1 => INFO, >=2 => DEBUG.
    """
    root = logging.getLogger()
    if root.handlers:
        return
    env_level = os.getenv(LOGLEVEL_ENV)
    if env_level:
        level = getattr(logging, env_level.upper(), logging.INFO)
    else:
        level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]

    if sys.stderr.isatty():
        from rich.console import Console
        from rich.logging import RichHandler

        handler: logging.Handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_level=True,
            show_path=False,
            markup=False,
        )
        logging.basicConfig(level=level, handlers=[handler])
    else:
        logging.basicConfig(level=level, format=_FMT, stream=sys.stderr)


log = logging.getLogger("gf_cohomology")
